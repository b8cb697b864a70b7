//! Seeded random Strands instances.

use super::{GridCell, StrandsInstance, Symbol};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn letters(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'A' + i as u8) as char).to_string()).collect()
}

/// Grid cut into random edge-adjacent paths of 1..=`max_len` cells; the
/// dictionary is exactly the words those paths spell. Solvable without
/// diagonal moves by construction.
pub fn random_planted(rows: usize, cols: usize, alphabet: usize, max_len: usize, seed: u64) -> StrandsInstance {
    assert!(rows > 0 && cols > 0 && alphabet > 0 && max_len > 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid: Vec<Vec<Symbol>> =
        (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..alphabet)).collect()).collect();
    let mut used = vec![vec![false; cols]; rows];
    let mut dictionary: Vec<Vec<Symbol>> = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if used[r][c] {
                continue;
            }
            let target = rng.gen_range(1..=max_len);
            let mut path: Vec<GridCell> = vec![(r, c)];
            used[r][c] = true;
            while path.len() < target {
                let (pr, pc) = *path.last().unwrap();
                let mut next: Vec<GridCell> = [(0isize, 1isize), (1, 0), (0, -1), (-1, 0)]
                    .iter()
                    .filter_map(|&(dr, dc)| Some((pr.checked_add_signed(dr)?, pc.checked_add_signed(dc)?)))
                    .filter(|&(nr, nc)| nr < rows && nc < cols && !used[nr][nc])
                    .collect();
                next.shuffle(&mut rng);
                let Some(&n) = next.first() else { break };
                used[n.0][n.1] = true;
                path.push(n);
            }
            let word: Vec<Symbol> = path.iter().map(|&(pr, pc)| grid[pr][pc]).collect();
            if !dictionary.contains(&word) {
                dictionary.push(word);
            }
        }
    }
    dictionary.sort();
    StrandsInstance::from_parts(letters(alphabet), dictionary, grid).expect("planted instance is well formed")
}

/// Uniform random grid and a random dictionary of `words` distinct words
/// of length 1..=`max_len`.
pub fn random_instance(
    rows: usize,
    cols: usize,
    alphabet: usize,
    words: usize,
    max_len: usize,
    seed: u64,
) -> StrandsInstance {
    assert!(rows > 0 && cols > 0 && alphabet > 0 && max_len > 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid: Vec<Vec<Symbol>> =
        (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..alphabet)).collect()).collect();
    let distinct: usize = (1..=max_len as u32).map(|l| alphabet.pow(l)).sum();
    let target = words.min(distinct);
    let mut dictionary: Vec<Vec<Symbol>> = Vec::new();
    while dictionary.len() < target {
        let len = rng.gen_range(1..=max_len);
        let w: Vec<Symbol> = (0..len).map(|_| rng.gen_range(0..alphabet)).collect();
        if !dictionary.contains(&w) {
            dictionary.push(w);
        }
    }
    dictionary.sort();
    StrandsInstance::from_parts(letters(alphabet), dictionary, grid).expect("random instance is well formed")
}

#[cfg(test)]
mod tests {
    use super::super::solve_strands;
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn planted_instances_are_solvable_without_diagonals(seed in any::<u64>(), rows in 1usize..=3, cols in 1usize..=3) {
            let inst = random_planted(rows, cols, 2, 3, seed);
            prop_assert!(inst.max_word_len() <= 3);
            prop_assert!(solve_strands(&inst, false).is_found());
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(random_instance(3, 3, 2, 3, 3, 5), random_instance(3, 3, 2, 3, 3, 5));
        assert_eq!(random_planted(3, 3, 2, 3, 9), random_planted(3, 3, 2, 3, 9));
    }
}
