use super::{LetterBoxedPuzzle, LetterBoxedSolution, Symbol};
use thiserror::Error;

/// Structural problems that make a solution impossible to judge.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("word budget k must be at least 1")]
    ZeroK,
    #[error("word index {index} is out of range (dictionary has {len} words)")]
    WordOutOfRange { index: usize, len: usize },
    #[error("side index {index} at trace position {position} is out of range ({sides} sides)")]
    SideOutOfRange {
        position: usize,
        index: usize,
        sides: usize,
    },
    #[error("side trace has {found} entries but the words have {expected} characters")]
    TraceLength { expected: usize, found: usize },
}

/// One violated solution condition. Positions are 0-based into the
/// concatenated string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoWords,
    TooManyWords { used: usize, k: usize },
    /// Word `index` does not start with the last character of the word before.
    BrokenChain { index: usize },
    /// Two consecutive characters inside a word share a side.
    SameSide { position: usize },
    /// The two copies of a pivot character sit on different sides.
    PivotSideChanged { position: usize },
    NotOnSide { position: usize, side: usize },
    Uncovered {
        side: usize,
        symbol: Symbol,
        covered: u32,
        required: u32,
    },
}

/// Verdict of [`verify_solution`]; valid iff no violations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a solution against the four solution conditions plus `|words| ≤ k`.
pub fn verify_solution(
    puzzle: &LetterBoxedPuzzle,
    sol: &LetterBoxedSolution,
    k: usize,
) -> Result<Verdict, VerifyError> {
    if k == 0 {
        return Err(VerifyError::ZeroK);
    }
    let dict = puzzle.dictionary();
    let mut sigma = Vec::new();
    // is_end[p]: position p is the last character of some word.
    let mut is_end = Vec::new();
    for &w in &sol.words {
        let word = dict.get(w).ok_or(VerifyError::WordOutOfRange {
            index: w,
            len: dict.len(),
        })?;
        sigma.extend_from_slice(word);
        is_end.extend((0..word.len()).map(|i| i + 1 == word.len()));
    }
    if sol.side_trace.len() != sigma.len() {
        return Err(VerifyError::TraceLength {
            expected: sigma.len(),
            found: sol.side_trace.len(),
        });
    }
    let s = puzzle.num_sides();
    for (position, &index) in sol.side_trace.iter().enumerate() {
        if index >= s {
            return Err(VerifyError::SideOutOfRange {
                position,
                index,
                sides: s,
            });
        }
    }

    let mut violations = Vec::new();
    if sol.words.is_empty() {
        violations.push(Violation::NoWords);
    }
    if sol.words.len() > k {
        violations.push(Violation::TooManyWords {
            used: sol.words.len(),
            k,
        });
    }
    for (index, pair) in sol.words.windows(2).enumerate() {
        let prev = &dict[pair[0]];
        let next = &dict[pair[1]];
        if prev.last() != next.first() {
            violations.push(Violation::BrokenChain { index: index + 1 });
        }
    }
    let trace = &sol.side_trace;
    for p in 0..sigma.len().saturating_sub(1) {
        let same = trace[p] == trace[p + 1];
        if is_end[p] && !same {
            violations.push(Violation::PivotSideChanged { position: p });
        } else if !is_end[p] && same {
            violations.push(Violation::SameSide { position: p });
        }
    }
    for (position, (&c, &side)) in sigma.iter().zip(trace).enumerate() {
        if !puzzle.on_side(side, c) {
            violations.push(Violation::NotOnSide { position, side });
        }
    }
    let sigma_len = puzzle.alphabet().len();
    let mut covered = vec![0u32; s * sigma_len];
    for (p, (&c, &side)) in sigma.iter().zip(trace).enumerate() {
        if p + 1 == sigma.len() || !is_end[p] {
            covered[side * sigma_len + c] += 1;
        }
    }
    for side in 0..s {
        for symbol in 0..sigma_len {
            let required = puzzle.count(side, symbol);
            let got = covered[side * sigma_len + symbol];
            if got < required {
                violations.push(Violation::Uncovered {
                    side,
                    symbol,
                    covered: got,
                    required,
                });
            }
        }
    }
    Ok(Verdict { violations })
}
