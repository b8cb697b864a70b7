//! Memoized depth-first search for a solution with a bounded word count.
//!
//! The outer search walks word boundaries, keyed by (side, last symbol,
//! residual). Each word is expanded by an inner search over side choices that
//! collects the distinct (end side, residual) outcomes.

use super::{LetterBoxedPuzzle, LetterBoxedSolution, ResidualLetterState, Symbol};
use crate::outcome::{Budget, Exhausted, SearchOutcome, DEFAULT_BUDGET};
use std::collections::{HashMap, HashSet};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub memo_hits: u64,
}

/// Finds a solution with at most `k_max` words under the default budget.
pub fn solve_search(
    puzzle: &LetterBoxedPuzzle,
    k_max: usize,
) -> SearchOutcome<LetterBoxedSolution> {
    solve_search_with_budget(puzzle, k_max, &mut Budget::new(DEFAULT_BUDGET)).0
}

pub fn solve_search_with_budget(
    puzzle: &LetterBoxedPuzzle,
    k_max: usize,
    budget: &mut Budget,
) -> (SearchOutcome<LetterBoxedSolution>, SearchStats) {
    let mut s = Searcher {
        puzzle,
        k_max,
        budget,
        failed: HashMap::new(),
        stack: Vec::new(),
        stats: SearchStats::default(),
    };
    let outcome = match s.run() {
        Ok(true) => {
            let mut sol = LetterBoxedSolution::default();
            for (w, trace) in &s.stack {
                sol.words.push(*w);
                sol.side_trace.extend_from_slice(trace);
            }
            SearchOutcome::Found(sol)
        }
        Ok(false) => SearchOutcome::Unsolvable,
        Err(Exhausted) => SearchOutcome::BudgetExhausted,
    };
    let stats = s.stats;
    (outcome, stats)
}

/// One way to finish a word: its end side, the residual afterwards, and the
/// side trace for every character of the word.
struct WordEnd {
    side: usize,
    residual: ResidualLetterState,
    trace: Vec<usize>,
}

struct Searcher<'a> {
    puzzle: &'a LetterBoxedPuzzle,
    k_max: usize,
    budget: &'a mut Budget,
    /// (side, last symbol, residual) -> fewest words used when it failed.
    failed: HashMap<(usize, Symbol, ResidualLetterState), usize>,
    stack: Vec<(usize, Vec<usize>)>,
    stats: SearchStats,
}

impl Searcher<'_> {
    fn tick(&mut self) -> Result<(), Exhausted> {
        self.stats.nodes += 1;
        self.budget.tick()
    }

    fn run(&mut self) -> Result<bool, Exhausted> {
        if self.k_max == 0 {
            return Ok(false);
        }
        let initial = ResidualLetterState::initial(self.puzzle);
        for w in 0..self.puzzle.dictionary().len() {
            let first = self.puzzle.word(w)[0];
            for side in 0..self.puzzle.num_sides() {
                if !self.puzzle.on_side(side, first) {
                    continue;
                }
                let start = initial.covered(side, first);
                let ends = self.expand(w, side, start, 1)?;
                if self.try_ends(w, ends, 1)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    fn try_ends(&mut self, w: usize, ends: Vec<WordEnd>, used: usize) -> Result<bool, Exhausted> {
        let last = *self.puzzle.word(w).last().unwrap();
        for end in ends {
            self.stack.push((w, end.trace));
            if end.residual.is_zero() || self.boundary(end.side, last, end.residual, used)? {
                return Ok(true);
            }
            self.stack.pop();
        }
        Ok(false)
    }

    /// At a word boundary with `used` words placed.
    fn boundary(
        &mut self,
        side: usize,
        last: Symbol,
        residual: ResidualLetterState,
        used: usize,
    ) -> Result<bool, Exhausted> {
        if used >= self.k_max {
            return Ok(false);
        }
        let key = (side, last, residual);
        if let Some(&seen) = self.failed.get(&key) {
            if seen <= used {
                self.stats.memo_hits += 1;
                return Ok(false);
            }
        }
        self.tick()?;
        let residual = key.2.clone();
        for w in 0..self.puzzle.dictionary().len() {
            let word = self.puzzle.word(w);
            if word.len() < 2 || word[0] != last {
                continue;
            }
            let ends = self.expand(w, side, residual.clone(), used + 1)?;
            if self.try_ends(w, ends, used + 1)? {
                return Ok(true);
            }
        }
        self.failed.insert(key, used);
        Ok(false)
    }

    /// All distinct ways to play word `w` whose first character already sits
    /// on `side`, as the `nth` word of the solution.
    fn expand(
        &mut self,
        w: usize,
        side: usize,
        residual: ResidualLetterState,
        nth: usize,
    ) -> Result<Vec<WordEnd>, Exhausted> {
        let mut x = Expansion {
            word: self.puzzle.word(w),
            must_finish: nth == self.k_max,
            seen: HashSet::new(),
            ends: Vec::new(),
            trace: vec![side],
        };
        x.dfs(self, 1, side, residual)?;
        Ok(x.ends)
    }
}

struct Expansion<'w> {
    word: &'w [Symbol],
    /// Last word allowed: only residual-clearing endings are useful.
    must_finish: bool,
    seen: HashSet<(usize, usize, ResidualLetterState)>,
    ends: Vec<WordEnd>,
    trace: Vec<usize>,
}

impl Expansion<'_> {
    fn dfs(
        &mut self,
        s: &mut Searcher<'_>,
        pos: usize,
        side: usize,
        residual: ResidualLetterState,
    ) -> Result<(), Exhausted> {
        s.tick()?;
        if self.must_finish && !self.can_clear(s.puzzle, pos, &residual) {
            return Ok(());
        }
        if !self.seen.insert((pos, side, residual.clone())) {
            s.stats.memo_hits += 1;
            return Ok(());
        }
        if pos == self.word.len() {
            if !self.must_finish || residual.is_zero() {
                self.ends.push(WordEnd {
                    side,
                    residual,
                    trace: self.trace.clone(),
                });
            }
            return Ok(());
        }
        let c = self.word[pos];
        for j in 0..s.puzzle.num_sides() {
            if j == side || !s.puzzle.on_side(j, c) {
                continue;
            }
            self.trace.push(j);
            let r = residual.covered(j, c);
            self.dfs(s, pos + 1, j, r)?;
            self.trace.pop();
        }
        Ok(())
    }

    /// Whether the rest of the word has enough copies of every still-needed
    /// symbol.
    fn can_clear(&self, p: &LetterBoxedPuzzle, pos: usize, residual: &ResidualLetterState) -> bool {
        let sigma = p.alphabet().len();
        let mut need = vec![0u32; sigma];
        for (i, &c) in residual.counts().iter().enumerate() {
            need[i % sigma] += c;
        }
        for &c in &self.word[pos..] {
            need[c] = need[c].saturating_sub(1);
        }
        need.iter().all(|&n| n == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{min_words_dp, verify_solution};
    use super::*;

    #[test]
    fn finds_abab() {
        let sol = solve_search(&abab(), 1).found().unwrap();
        assert_eq!(sol.words, vec![0]);
        assert_eq!(sol.side_trace, vec![0, 1, 2, 3]);
    }

    #[test]
    fn chain_needs_three() {
        let p = chain();
        assert_eq!(solve_search(&p, 2), SearchOutcome::Unsolvable);
        let sol = solve_search(&p, 3).found().unwrap();
        assert!(verify_solution(&p, &sol, 3).unwrap().is_valid());
    }

    #[test]
    fn agrees_with_dp_per_k() {
        let p = puzzle(
            &["a", "b", "c"],
            &["abc", "ca", "cb", "ab", "bca"],
            &["ab", "cc", "ab", "ca"],
        );
        let best = min_words_dp(&p);
        for k in 1..=6 {
            let found = solve_search(&p, k).is_found();
            assert_eq!(found, best.is_some_and(|b| b <= k), "k={k}");
        }
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let (out, _) = solve_search_with_budget(&chain(), 3, &mut Budget::new(2));
        assert_eq!(out, SearchOutcome::BudgetExhausted);
    }
}
