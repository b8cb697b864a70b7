//! 3×3 block expansion: every cell becomes a block with its symbol in the
//! centre and a perimeter in one of four colours, and every word becomes
//! the set of block walks whose colour sequence can step between
//! edge-adjacent blocks.

use super::{StrandsInstance, StrandsPartition, StrandsPlacement, Symbol};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockExpansionOutput {
    pub instance: StrandsInstance,
    /// Alphabet indices of colours 1..=4.
    pub colors: [Symbol; 4],
}

/// Colour of the source cell at 0-based `(r, c)`, using 1-based parity.
pub fn block_color(r: usize, c: usize) -> u8 {
    let (i_even, j_even) = ((r + 1).is_multiple_of(2), (c + 1).is_multiple_of(2));
    match (i_even, j_even) {
        (true, true) => 1,
        (true, false) => 2,
        (false, true) => 3,
        (false, false) => 4,
    }
}

/// Colours that may follow colour `g` in a word.
pub fn successors(g: u8) -> [u8; 2] {
    match g {
        1 | 4 => [2, 3],
        _ => [1, 4],
    }
}

/// All colour strings of length `k` whose consecutive entries follow
/// [`successors`].
pub fn color_strings(k: usize) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = (1..=4).map(|g| vec![g]).collect();
    for _ in 1..k {
        out = out
            .into_iter()
            .flat_map(|s| successors(*s.last().unwrap()).map(|g| [s.as_slice(), &[g]].concat()))
            .collect();
    }
    if k == 0 {
        out.clear();
    }
    out
}

pub fn expand_blocks(inst: &StrandsInstance) -> BlockExpansionOutput {
    let mut alphabet = inst.alphabet().to_vec();
    let mut colors = [0; 4];
    for (g, slot) in colors.iter_mut().enumerate() {
        let mut name = (g + 1).to_string();
        while alphabet.contains(&name) {
            name.push('\'');
        }
        *slot = alphabet.len();
        alphabet.push(name);
    }
    let color_sym = |g: u8| colors[g as usize - 1];
    let (n, m) = (inst.rows(), inst.cols());
    let mut grid = vec![vec![0; 3 * m]; 3 * n];
    for r in 0..n {
        for c in 0..m {
            let g = color_sym(block_color(r, c));
            for dr in 0..3 {
                for dc in 0..3 {
                    grid[3 * r + dr][3 * c + dc] = if (dr, dc) == (1, 1) { inst.at((r, c)) } else { g };
                }
            }
        }
    }
    let mut dictionary = Vec::new();
    for w in inst.dictionary() {
        for g in color_strings(w.len()) {
            let mut word = Vec::with_capacity(9 * w.len());
            for (&sym, &gi) in w.iter().zip(&g) {
                let col = color_sym(gi);
                word.extend([col; 6]);
                word.push(sym);
                word.extend([col; 2]);
            }
            dictionary.push(word);
        }
    }
    let instance = StrandsInstance::from_parts(alphabet, dictionary, grid).expect("expansion keeps words distinct");
    BlockExpansionOutput { instance, colors }
}

/// Source partition read off the block centres a partition of the
/// expanded grid visits. `None` if some centre sequence spells no source
/// word.
pub fn pullback_blocks(source: &StrandsInstance, expanded: &StrandsPartition) -> Option<StrandsPartition> {
    let mut pieces = Vec::with_capacity(expanded.pieces.len());
    for p in &expanded.pieces {
        let cells: Vec<_> = p.cells.iter().filter(|c| c.0 % 3 == 1 && c.1 % 3 == 1).map(|c| (c.0 / 3, c.1 / 3)).collect();
        let spelled: Vec<Symbol> = cells.iter().map(|&c| source.at(c)).collect();
        pieces.push(StrandsPlacement { word: source.word_index(&spelled)?, cells });
    }
    Some(StrandsPartition { pieces })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::instance;
    use super::super::{solve_strands, verify_partition};
    use super::*;

    #[test]
    fn coloring_is_proper() {
        for r in 0..4 {
            for c in 0..4 {
                let g = block_color(r, c);
                if c + 1 < 4 {
                    assert!(successors(g).contains(&block_color(r, c + 1)));
                }
                if r + 1 < 4 {
                    assert!(successors(g).contains(&block_color(r + 1, c)));
                }
                if r + 1 < 4 && c + 1 < 4 {
                    assert!(!successors(g).contains(&block_color(r + 1, c + 1)));
                }
            }
        }
        assert_eq!(block_color(0, 0), 4);
        assert_eq!(block_color(1, 1), 1);
    }

    #[test]
    fn single_cell() {
        let out = expand_blocks(&instance(&["A"], &["A"]));
        let e = &out.instance;
        assert_eq!((e.rows(), e.cols()), (3, 3));
        assert_eq!(e.alphabet()[e.at((1, 1))], "A");
        assert_eq!(e.at((0, 0)), out.colors[3]);
        assert_eq!(e.dictionary().len(), 4);
        assert!(solve_strands(e, true).is_found());
    }

    #[test]
    fn word_lengths_and_count() {
        let src = instance(&["AB", "BA"], &["AB", "A"]);
        let e = expand_blocks(&src).instance;
        assert_eq!(e.min_word_len(), 9);
        assert_eq!(e.max_word_len(), 18);
        assert_eq!(e.dictionary().len(), 8 + 4);
        assert!(e.dictionary().len() <= src.dictionary().len() * 4usize.pow(2));
    }

    #[test]
    fn solvability_is_kept() {
        let yes = instance(&["AB", "BA"], &["AB"]);
        let sol = solve_strands(&expand_blocks(&yes).instance, true).found().unwrap();
        let back = pullback_blocks(&yes, &sol).unwrap();
        assert!(verify_partition(&yes, &back, false).unwrap().is_valid());
        // Four cells cannot split into three-letter words.
        let no = instance(&["AB", "BA"], &["ABA"]);
        assert!(!solve_strands(&no, true).is_found());
        assert!(!solve_strands(&expand_blocks(&no).instance, true).is_found());
    }

    #[test]
    fn fresh_color_names() {
        let src = instance(&["1"], &["1"]);
        let out = expand_blocks(&src);
        assert_eq!(out.instance.alphabet()[out.colors[0]], "1'");
    }
}
