//! Seeded random puzzles.

use super::{LetterBoxedPuzzle, Symbol};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PuzzleParams {
    pub sides: usize,
    pub side_len: usize,
    pub alphabet: usize,
    pub words: usize,
    pub max_word_len: usize,
}

/// Sides are uniform draws from the alphabet. Half of the words (in
/// expectation) are walks over board letters that change side at every
/// step, the rest are uniform strings; duplicates are redrawn.
pub fn random_puzzle(params: PuzzleParams, seed: u64) -> LetterBoxedPuzzle {
    let PuzzleParams { sides, side_len, alphabet, words, max_word_len } = params;
    assert!(sides >= 2 && side_len >= 1 && alphabet >= 1 && max_word_len >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let board: Vec<Vec<Symbol>> =
        (0..sides).map(|_| (0..side_len).map(|_| rng.gen_range(0..alphabet)).collect()).collect();
    let distinct: usize = (1..=max_word_len as u32).map(|l| alphabet.pow(l)).sum();
    let mut dictionary: Vec<Vec<Symbol>> = Vec::new();
    while dictionary.len() < words.min(distinct) {
        let len = rng.gen_range(1..=max_word_len);
        let w: Vec<Symbol> = if rng.gen_bool(0.5) {
            let mut side = rng.gen_range(0..sides);
            let mut w = Vec::with_capacity(len);
            for _ in 0..len {
                w.push(board[side][rng.gen_range(0..side_len)]);
                side = (side + rng.gen_range(1..sides)) % sides;
            }
            w
        } else {
            (0..len).map(|_| rng.gen_range(0..alphabet)).collect()
        };
        if !dictionary.contains(&w) {
            dictionary.push(w);
        }
    }
    let names = (0..alphabet).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    LetterBoxedPuzzle::from_parts(names, dictionary, board).expect("generated puzzle is well formed")
}
