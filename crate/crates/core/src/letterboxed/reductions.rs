//! Hardness constructions for Letter Boxed and their solution pullbacks.

use super::{
    verify_solution, LetterBoxedPuzzle, LetterBoxedSolution, PuzzleError, Symbol, Violation,
};
use crate::source::{Nae3SatInstance, ThreeDmInstance};
use thiserror::Error;

pub const HASH: &str = "__hash";
pub const TAU: &str = "__tau";
pub const START: &str = "__s";
pub const END: &str = "__e";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("the formula has no clauses")]
    EmptyFormula,
    #[error("variable {0:?} occurs in no clause")]
    UnusedVariable(String),
    #[error("variable name {0:?} collides with a reserved symbol")]
    ReservedName(String),
    #[error("side lifting needs at least 2 symbols per side, got {0}")]
    SidesTooShort(usize),
    #[error("word budget must be at least 1")]
    ZeroBudget,
    #[error(transparent)]
    Puzzle(#[from] PuzzleError),
    #[error("solution is not valid for the reduced puzzle: {0:?}")]
    InvalidSolution(Vec<Violation>),
    #[error("malformed solution: {0}")]
    MalformedSolution(#[from] super::VerifyError),
    #[error("variable {var} starts on side {side}, expected side 1 or 2")]
    UnexpectedSide { var: usize, side: usize },
}

/// A single-word instance that is solvable at `k = 1` iff the formula is
/// NAE-satisfiable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaeReductionOutput {
    pub puzzle: LetterBoxedPuzzle,
    pub k: usize,
    /// Variables in the order their blocks appear in the word.
    pub variable_order: Vec<usize>,
    /// Clauses containing each variable.
    pub occurrence_count: Vec<usize>,
    /// Index into the word of each variable's first occurrence.
    pub first_position: Vec<usize>,
}

/// Sides: 0 holds `#` and padding, 1 and 2 are identical variable/clause
/// sides (1 reads as true, 2 as false), 3 is all padding.
pub fn reduce_nae3sat(inst: &Nae3SatInstance) -> Result<NaeReductionOutput, ReductionError> {
    if inst.clauses().is_empty() {
        return Err(ReductionError::EmptyFormula);
    }
    let vars = inst.variables();
    if let Some(v) = vars.iter().find(|v| v.starts_with("__")) {
        return Err(ReductionError::ReservedName(v.clone()));
    }
    let eta = inst.occurrences();
    if let Some(v) = eta.iter().position(|&e| e == 0) {
        return Err(ReductionError::UnusedVariable(vars[v].clone()));
    }

    // Alphabet: #, τ, variables, stars, clauses.
    let nv = vars.len();
    let hash: Symbol = 0;
    let tau: Symbol = 1;
    let var = |v: usize| 2 + v;
    let star = |v: usize| 2 + nv + v;
    let clause = |c: usize| 2 + 2 * nv + c;
    let mut alphabet = vec![HASH.to_string(), TAU.to_string()];
    alphabet.extend(vars.iter().cloned());
    alphabet.extend(vars.iter().map(|v| format!("__star_{v}")));
    alphabet.extend((0..inst.clauses().len()).map(|c| format!("__c{c}")));

    let mut middle = Vec::new();
    for (v, &e) in eta.iter().enumerate() {
        middle.extend(std::iter::repeat_n(var(v), e));
        middle.extend(std::iter::repeat_n(star(v), e - 1));
    }
    for c in 0..inst.clauses().len() {
        middle.extend([clause(c), clause(c)]);
    }
    let width = middle.len();

    let mut word = vec![hash];
    let mut first_position = vec![0; nv];
    for (v, &e) in eta.iter().enumerate() {
        first_position[v] = word.len();
        word.push(var(v));
        for _ in 1..e {
            word.extend([star(v), var(v)]);
        }
        word.push(hash);
    }
    for (v, &e) in eta.iter().enumerate() {
        for _ in 1..e {
            word.extend([star(v), hash]);
        }
    }
    for (c, vs) in inst.clauses().iter().enumerate() {
        for &v in vs {
            word.extend([var(v), clause(c), hash]);
        }
        word.extend([clause(c), hash]);
    }
    word.extend(std::iter::repeat_n(tau, 2 * width - 1));

    let mut first_side = vec![hash];
    first_side.extend(std::iter::repeat_n(tau, width - 1));
    let sides = vec![first_side, middle.clone(), middle, vec![tau; width]];
    let puzzle = LetterBoxedPuzzle::from_parts(alphabet, vec![word], sides)?;
    Ok(NaeReductionOutput {
        puzzle,
        k: 1,
        variable_order: (0..nv).collect(),
        occurrence_count: eta,
        first_position,
    })
}

fn check_valid(
    puzzle: &LetterBoxedPuzzle,
    sol: &LetterBoxedSolution,
    k: usize,
) -> Result<(), ReductionError> {
    let verdict = verify_solution(puzzle, sol, k)?;
    if verdict.is_valid() {
        Ok(())
    } else {
        Err(ReductionError::InvalidSolution(verdict.violations))
    }
}

/// Reads each variable off the side of its first occurrence.
pub fn pullback_nae(
    out: &NaeReductionOutput,
    sol: &LetterBoxedSolution,
) -> Result<Vec<bool>, ReductionError> {
    check_valid(&out.puzzle, sol, out.k)?;
    out.first_position
        .iter()
        .enumerate()
        .map(|(v, &p)| match sol.side_trace[p] {
            1 => Ok(true),
            2 => Ok(false),
            side => Err(ReductionError::UnexpectedSide { var: v, side }),
        })
        .collect()
}

/// One five-letter word `# x y z #` per triple, `k = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeDmReductionOutput {
    pub puzzle: LetterBoxedPuzzle,
    pub k: usize,
    pub triple_of_word: Vec<[usize; 3]>,
}

pub fn reduce_3dm(inst: &ThreeDmInstance) -> Result<ThreeDmReductionOutput, ReductionError> {
    let n = inst.n();
    let mut alphabet = vec![HASH.to_string()];
    for axis in ["x", "y", "z"] {
        alphabet.extend((1..=n).map(|i| format!("{axis}{i}")));
    }
    let sym = |axis: usize, e: usize| 1 + axis * n + e;
    let dictionary = inst
        .triples()
        .iter()
        .map(|t| vec![0, sym(0, t[0]), sym(1, t[1]), sym(2, t[2]), 0])
        .collect();
    let sides = vec![
        vec![0; n],
        (0..n).map(|e| sym(0, e)).collect(),
        (0..n).map(|e| sym(1, e)).collect(),
        (0..n).map(|e| sym(2, e)).collect(),
    ];
    let puzzle = LetterBoxedPuzzle::from_parts(alphabet, dictionary, sides)?;
    Ok(ThreeDmReductionOutput {
        puzzle,
        k: n,
        triple_of_word: inst.triples().to_vec(),
    })
}

/// The triples named by a valid solution's words.
pub fn pullback_3dm(
    out: &ThreeDmReductionOutput,
    sol: &LetterBoxedSolution,
) -> Result<Vec<[usize; 3]>, ReductionError> {
    check_valid(&out.puzzle, sol, out.k)?;
    Ok(sol.words.iter().map(|&w| out.triple_of_word[w]).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftOutput {
    pub puzzle: LetterBoxedPuzzle,
    pub k: usize,
    /// Symbol indices of the three added symbols.
    pub start: Symbol,
    pub end: Symbol,
    pub hash: Symbol,
}

fn fresh(alphabet: &[String], base: &str) -> String {
    let mut name = base.to_string();
    while alphabet.contains(&name) {
        name.push('\'');
    }
    name
}

/// Adds one side. New dictionary order: the old words, `s∘w` for each, `w∘e`
/// for each, then `##` and `e#`.
pub fn lift_sides(puzzle: &LetterBoxedPuzzle, k: usize) -> Result<LiftOutput, ReductionError> {
    let n = puzzle.side_len();
    if n < 2 {
        return Err(ReductionError::SidesTooShort(n));
    }
    if k == 0 {
        return Err(ReductionError::ZeroBudget);
    }
    let mut alphabet = puzzle.alphabet().to_vec();
    let s_name = fresh(&alphabet, START);
    alphabet.push(s_name);
    let e_name = fresh(&alphabet, END);
    alphabet.push(e_name);
    let h_name = fresh(&alphabet, HASH);
    alphabet.push(h_name);
    let base = puzzle.alphabet().len();
    let (s, e, h) = (base, base + 1, base + 2);

    let old = puzzle.dictionary();
    let mut dictionary: Vec<Vec<Symbol>> = old.to_vec();
    dictionary.extend(old.iter().map(|w| {
        let mut v = vec![s];
        v.extend_from_slice(w);
        v
    }));
    dictionary.extend(old.iter().map(|w| {
        let mut v = w.clone();
        v.push(e);
        v
    }));
    dictionary.push(vec![h, h]);
    dictionary.push(vec![e, h]);

    let mut sides: Vec<Vec<Symbol>> = puzzle
        .sides()
        .iter()
        .map(|side| {
            let mut v = side.clone();
            v.push(h);
            v
        })
        .collect();
    let mut extra = vec![s, e];
    extra.extend(std::iter::repeat_n(h, n - 1));
    sides.push(extra);

    let lifted = LetterBoxedPuzzle::from_parts(alphabet, dictionary, sides)?;
    let big_s = puzzle.num_sides();
    Ok(LiftOutput {
        puzzle: lifted,
        k: k + big_s + 1 + 2 * (n - 2),
        start: s,
        end: e,
        hash: h,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::puzzle;
    use super::super::{solve_search, verify_solution};
    use super::*;
    use crate::outcome::SearchOutcome;
    use crate::source::{oracle_3dm, satisfies_nae, OracleOutcome};

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn single_clause_shape() {
        let inst = Nae3SatInstance::new(names(3), vec![[0, 1, 2]]).unwrap();
        let out = reduce_nae3sat(&inst).unwrap();
        assert_eq!(out.puzzle.dictionary().len(), 1);
        assert_eq!(out.k, 1);
        assert_eq!(out.puzzle.word(0).len(), 27);
        assert_eq!(out.puzzle.side_len(), 5);
        let tail = &out.puzzle.word(0)[27 - 9..];
        assert!(tail.iter().all(|&c| out.puzzle.symbol_name(c) == TAU));
        assert_ne!(out.puzzle.symbol_name(out.puzzle.word(0)[27 - 10]), TAU);
    }

    #[test]
    fn single_clause_solves_and_pulls_back() {
        let inst = Nae3SatInstance::new(names(3), vec![[0, 1, 2]]).unwrap();
        let out = reduce_nae3sat(&inst).unwrap();
        let sol = solve_search(&out.puzzle, 1).found().expect("solvable");
        assert!(verify_solution(&out.puzzle, &sol, 1).unwrap().is_valid());
        let a = pullback_nae(&out, &sol).unwrap();
        assert!(satisfies_nae(&inst, &a));
    }

    #[test]
    fn hand_built_trace_for_true_false_false() {
        // x1 = T, x2 = F, x3 = F, following the forward construction.
        let inst = Nae3SatInstance::new(names(3), vec![[0, 1, 2]]).unwrap();
        let out = reduce_nae3sat(&inst).unwrap();
        // # x1 # x2 # x3 # | x1 c # x2 c # x3 c # c # | τ^9
        let mut trace = vec![0, 1, 0, 2, 0, 2, 0];
        trace.extend([2, 1, 0, 1, 2, 0, 1, 2, 0, 1, 0]);
        trace.extend([3, 0, 3, 0, 3, 0, 3, 0, 3]);
        let sol = LetterBoxedSolution { words: vec![0], side_trace: trace };
        let v = verify_solution(&out.puzzle, &sol, 1).unwrap();
        assert!(v.is_valid(), "{v:?}");
        assert_eq!(pullback_nae(&out, &sol).unwrap(), vec![true, false, false]);
    }

    #[test]
    fn nae_rejects_bad_input() {
        let inst = Nae3SatInstance::new(names(3), vec![]).unwrap();
        assert_eq!(reduce_nae3sat(&inst), Err(ReductionError::EmptyFormula));
        let inst = Nae3SatInstance::new(names(4), vec![[0, 1, 2]]).unwrap();
        assert_eq!(
            reduce_nae3sat(&inst),
            Err(ReductionError::UnusedVariable("x4".into()))
        );
    }

    #[test]
    fn pullback_rejects_invalid_solution() {
        let inst = Nae3SatInstance::new(names(3), vec![[0, 1, 2]]).unwrap();
        let out = reduce_nae3sat(&inst).unwrap();
        let sol = LetterBoxedSolution {
            words: vec![0],
            side_trace: vec![0; 27],
        };
        assert!(matches!(
            pullback_nae(&out, &sol),
            Err(ReductionError::InvalidSolution(_))
        ));
    }

    #[test]
    fn three_dm_examples() {
        let one = ThreeDmInstance::new(1, vec![[0, 0, 0]]).unwrap();
        let out = reduce_3dm(&one).unwrap();
        let sol = LetterBoxedSolution {
            words: vec![0],
            side_trace: vec![0, 1, 2, 3, 0],
        };
        assert!(verify_solution(&out.puzzle, &sol, 1).unwrap().is_valid());
        assert_eq!(pullback_3dm(&out, &sol).unwrap(), vec![[0, 0, 0]]);

        let two = ThreeDmInstance::new(2, vec![[0, 0, 0], [0, 1, 1], [1, 1, 0]]).unwrap();
        assert_eq!(oracle_3dm(&two), OracleOutcome::NotFound);
        let out = reduce_3dm(&two).unwrap();
        assert!(out.puzzle.dictionary().iter().all(|w| w.len() == 5));
        assert_eq!(solve_search(&out.puzzle, 2), SearchOutcome::Unsolvable);
    }

    #[test]
    fn lift_structure() {
        let p = puzzle(&["a", "b", "c", "d"], &["ab", "cd", "bc"], &["ac", "bd"]);
        let out = lift_sides(&p, 2).unwrap();
        let q = &out.puzzle;
        assert_eq!(q.dictionary().len(), 3 * 3 + 2);
        assert_eq!(q.max_word_len(), p.max_word_len() + 1);
        assert_eq!(q.alphabet().len(), p.alphabet().len() + 3);
        assert_eq!(q.side_len(), p.side_len() + 1);
        assert_eq!(q.num_sides(), 3);
        assert_eq!(out.k, 2 + 2 + 1);
        assert_eq!(lift_sides(&puzzle(&["a", "b"], &["ab"], &["a", "b"]), 1),
            Err(ReductionError::SidesTooShort(1)));
    }

    #[test]
    fn lift_with_two_word_source() {
        // Sides {a,c},{b,d}; "ab","bc","cd" chained is a 3-word solution,
        // no shorter one exists.
        let p = puzzle(&["a", "b", "c", "d"], &["ab", "bc", "cd"], &["ac", "bd"]);
        assert!(solve_search(&p, 3).is_found());
        assert!(!solve_search(&p, 2).is_found());
        let out = lift_sides(&p, 3).unwrap();
        assert_eq!(out.k, 3 + 2 + 1);
        let sol = solve_search(&out.puzzle, out.k).found().expect("lifted solvable");
        assert!(verify_solution(&out.puzzle, &sol, out.k).unwrap().is_valid());
        assert!(!solve_search(&out.puzzle, out.k - 1).is_found());
    }

    #[test]
    fn lift_cannot_carry_a_one_word_solution() {
        // Solvable with the single word "abba"; the lifted dictionary has no
        // word that both starts with s and ends with e, so at least two
        // source words must appear between them.
        let p = puzzle(&["a", "b"], &["abba"], &["ab", "ab"]);
        assert!(solve_search(&p, 1).is_found());
        let out = lift_sides(&p, 1).unwrap();
        assert_eq!(out.k, 4);
        assert_eq!(solve_search(&out.puzzle, 4), SearchOutcome::Unsolvable);
        assert!(solve_search(&out.puzzle, 5).is_found());
    }
}
