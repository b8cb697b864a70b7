//! Letter Boxed with `S` sides: data model, verifier, exact solvers and the
//! brute-force oracle.
//!
//! Symbols are strings interned into indices of the puzzle's alphabet. Sides
//! are multisets; a side may hold the same symbol several times and the same
//! symbol may sit on several sides.

mod brute;
mod dp;
pub mod generate;
pub mod reductions;
mod search;
mod verify;

pub use brute::{brute_force_min_words, BruteForceResult};
pub use dp::{
    min_letters_dp, min_words_dp, solve_dp, DpMetric, DpSolution, GameState, ResidualLetterState,
};
pub use search::{solve_search, solve_search_with_budget, SearchStats};
pub use verify::{verify_solution, Verdict, VerifyError, Violation};

use std::collections::{HashMap, HashSet};
use thiserror::Error;

/// Symbol index into [`LetterBoxedPuzzle::alphabet`].
pub type Symbol = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PuzzleError {
    #[error("a puzzle needs at least two sides, got {0}")]
    TooFewSides(usize),
    #[error("sides must hold at least one symbol")]
    EmptySides,
    #[error("unequal side cardinality: side {side} has {found} symbols, expected {expected}")]
    UnequalSideCardinality {
        side: usize,
        expected: usize,
        found: usize,
    },
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(String),
    #[error("symbol index {0} is out of range for the alphabet")]
    SymbolOutOfRange(usize),
    #[error("alphabet lists {0:?} twice")]
    DuplicateAlphabetSymbol(String),
    #[error("dictionary word {0} is empty")]
    EmptyWord(usize),
    #[error("dictionary word {index} duplicates word {first}")]
    DuplicateWord { index: usize, first: usize },
}

/// Unvalidated puzzle description, as read from a file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LetterBoxedSpec {
    pub alphabet: Vec<String>,
    pub dictionary: Vec<Vec<String>>,
    pub sides: Vec<Vec<String>>,
}

/// A validated Letter Boxed puzzle. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterBoxedPuzzle {
    alphabet: Vec<String>,
    dictionary: Vec<Vec<Symbol>>,
    sides: Vec<Vec<Symbol>>,
    /// `side_counts[side][symbol]` = multiplicity on that side.
    side_counts: Vec<Vec<u32>>,
    side_len: usize,
}

/// Validates a raw description, reporting the first violated invariant.
pub fn validate_puzzle(spec: &LetterBoxedSpec) -> Result<LetterBoxedPuzzle, PuzzleError> {
    let mut index = HashMap::with_capacity(spec.alphabet.len());
    for (i, s) in spec.alphabet.iter().enumerate() {
        if index.insert(s.as_str(), i).is_some() {
            return Err(PuzzleError::DuplicateAlphabetSymbol(s.clone()));
        }
    }
    let lookup = |s: &String| {
        index
            .get(s.as_str())
            .copied()
            .ok_or_else(|| PuzzleError::UnknownSymbol(s.clone()))
    };
    let sides = spec
        .sides
        .iter()
        .map(|side| side.iter().map(lookup).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let dictionary = spec
        .dictionary
        .iter()
        .map(|w| w.iter().map(lookup).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    LetterBoxedPuzzle::from_parts(spec.alphabet.clone(), dictionary, sides)
}

impl LetterBoxedPuzzle {
    /// Builds a puzzle from already-interned parts.
    pub fn from_parts(
        alphabet: Vec<String>,
        dictionary: Vec<Vec<Symbol>>,
        sides: Vec<Vec<Symbol>>,
    ) -> Result<Self, PuzzleError> {
        let mut seen = HashSet::with_capacity(alphabet.len());
        for s in &alphabet {
            if !seen.insert(s.as_str()) {
                return Err(PuzzleError::DuplicateAlphabetSymbol(s.clone()));
            }
        }
        if sides.len() < 2 {
            return Err(PuzzleError::TooFewSides(sides.len()));
        }
        let side_len = sides[0].len();
        if side_len == 0 {
            return Err(PuzzleError::EmptySides);
        }
        for (i, side) in sides.iter().enumerate() {
            if side.len() != side_len {
                return Err(PuzzleError::UnequalSideCardinality {
                    side: i,
                    expected: side_len,
                    found: side.len(),
                });
            }
        }
        let sigma = alphabet.len();
        let check = |&s: &Symbol| {
            if s < sigma {
                Ok(())
            } else {
                Err(PuzzleError::SymbolOutOfRange(s))
            }
        };
        for side in &sides {
            side.iter().try_for_each(check)?;
        }
        let mut first_seen: HashMap<&[Symbol], usize> = HashMap::new();
        for (i, w) in dictionary.iter().enumerate() {
            if w.is_empty() {
                return Err(PuzzleError::EmptyWord(i));
            }
            w.iter().try_for_each(check)?;
            if let Some(&first) = first_seen.get(w.as_slice()) {
                return Err(PuzzleError::DuplicateWord { index: i, first });
            }
            first_seen.insert(w, i);
        }
        let mut side_counts = vec![vec![0u32; sigma]; sides.len()];
        for (i, side) in sides.iter().enumerate() {
            for &s in side {
                side_counts[i][s] += 1;
            }
        }
        Ok(LetterBoxedPuzzle {
            alphabet,
            dictionary,
            sides,
            side_counts,
            side_len,
        })
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn symbol_name(&self, s: Symbol) -> &str {
        &self.alphabet[s]
    }

    pub fn symbol_index(&self, name: &str) -> Option<Symbol> {
        self.alphabet.iter().position(|a| a == name)
    }

    pub fn dictionary(&self) -> &[Vec<Symbol>] {
        &self.dictionary
    }

    pub fn word(&self, i: usize) -> &[Symbol] {
        &self.dictionary[i]
    }

    pub fn sides(&self) -> &[Vec<Symbol>] {
        &self.sides
    }

    /// Number of sides `S`.
    pub fn num_sides(&self) -> usize {
        self.sides.len()
    }

    /// Cardinality `n` of every side.
    pub fn side_len(&self) -> usize {
        self.side_len
    }

    /// Multiplicity of `symbol` on `side`.
    pub fn count(&self, side: usize, symbol: Symbol) -> u32 {
        self.side_counts[side][symbol]
    }

    pub fn on_side(&self, side: usize, symbol: Symbol) -> bool {
        self.side_counts[side][symbol] > 0
    }

    /// Length `L` of the longest dictionary word (0 for an empty dictionary).
    pub fn max_word_len(&self) -> usize {
        self.dictionary.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Upper bound `S²·|Σ|·n` on the words any solvable instance needs.
    pub fn certificate_bound(&self) -> usize {
        let s = self.num_sides();
        s * s * self.alphabet.len() * self.side_len
    }

    /// Residual counts at the start of play, flattened side-major.
    pub(crate) fn initial_residual(&self) -> Vec<u32> {
        self.side_counts.iter().flatten().copied().collect()
    }

    /// Renders a word with its symbol names concatenated.
    pub fn word_string(&self, i: usize) -> String {
        self.dictionary[i]
            .iter()
            .map(|&s| self.alphabet[s].as_str())
            .collect()
    }

    pub fn to_spec(&self) -> LetterBoxedSpec {
        let names = |v: &Vec<Symbol>| v.iter().map(|&s| self.alphabet[s].clone()).collect();
        LetterBoxedSpec {
            alphabet: self.alphabet.clone(),
            dictionary: self.dictionary.iter().map(names).collect(),
            sides: self.sides.iter().map(names).collect(),
        }
    }
}

/// A candidate solution: dictionary word indices plus one side per character
/// of the concatenated words. Sides are 0-based here; files store them 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LetterBoxedSolution {
    pub words: Vec<usize>,
    pub side_trace: Vec<usize>,
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn nyt_style_puzzle_is_accepted() {
        let p = puzzle(
            &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"],
            &["abc", "dig"],
            &["abc", "def", "ghi", "jkl"],
        );
        assert_eq!(p.num_sides(), 4);
        assert_eq!(p.side_len(), 3);
        assert_eq!(p.certificate_bound(), 16 * 12 * 3);
    }

    #[test]
    fn unequal_sides_are_rejected() {
        let err = validate_puzzle(&spec(
            &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"],
            &["ab"],
            &["abc", "def", "ghi", "jk"],
        ))
        .unwrap_err();
        assert!(matches!(err, PuzzleError::UnequalSideCardinality { side: 3, .. }));
        assert!(err.to_string().contains("unequal side cardinality"));
    }

    #[test]
    fn foreign_symbol_in_word_is_rejected() {
        let err = validate_puzzle(&spec(&["a", "b"], &["az"], &["a", "b"])).unwrap_err();
        assert_eq!(err, PuzzleError::UnknownSymbol("z".into()));
    }

    #[test]
    fn empty_and_duplicate_words_are_rejected() {
        let mut s = spec(&["a", "b"], &["ab"], &["a", "b"]);
        s.dictionary.push(vec![]);
        assert_eq!(validate_puzzle(&s).unwrap_err(), PuzzleError::EmptyWord(1));
        let s = spec(&["a", "b"], &["ab", "ab"], &["a", "b"]);
        assert_eq!(
            validate_puzzle(&s).unwrap_err(),
            PuzzleError::DuplicateWord { index: 1, first: 0 }
        );
    }

    #[test]
    fn single_side_is_rejected() {
        let err = validate_puzzle(&spec(&["a"], &["a"], &["a"])).unwrap_err();
        assert_eq!(err, PuzzleError::TooFewSides(1));
    }

    #[test]
    fn spec_round_trip() {
        let p = chain();
        assert_eq!(validate_puzzle(&p.to_spec()).unwrap(), p);
    }
}
