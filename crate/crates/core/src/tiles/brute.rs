//! Exhaustive game-tree search over (current tile, undeleted memberships).

use super::TilesInstance;
use crate::outcome::{Budget, Exhausted};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilesOracleError {
    #[error("instance has {0} memberships, the oracle handles at most 64")]
    TooLarge(usize),
    #[error("node budget exhausted")]
    BudgetExhausted,
}

impl From<Exhausted> for TilesOracleError {
    fn from(_: Exhausted) -> Self {
        TilesOracleError::BudgetExhausted
    }
}

struct Game {
    n: usize,
    full: u64,
    /// Membership bit pairs shared by tiles `i` and `j`, at `i * n + j`.
    common: Vec<Vec<(u64, u64)>>,
}

impl Game {
    fn new(inst: &TilesInstance) -> Result<Self, TilesOracleError> {
        let size = inst.size();
        if size > 64 {
            return Err(TilesOracleError::TooLarge(size));
        }
        let mut bit: Vec<Vec<(usize, u64)>> = Vec::new();
        let mut next = 0;
        for tile in inst.tiles() {
            let mut row = Vec::new();
            for &f in tile {
                row.push((f, 1u64 << next));
                next += 1;
            }
            bit.push(row);
        }
        let n = inst.tiles().len();
        let mut common = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    for &(f, bi) in &bit[i] {
                        if let Some(&(_, bj)) = bit[j].iter().find(|&&(g, _)| g == f) {
                            common[i * n + j].push((bi, bj));
                        }
                    }
                }
            }
        }
        let full = if size == 64 { u64::MAX } else { (1u64 << size) - 1 };
        Ok(Game { n, full, common })
    }

    /// Mask after moving `i -> j`, and whether the move was standard.
    fn step(&self, mask: u64, i: usize, j: usize) -> (u64, bool) {
        let mut out = mask;
        for &(a, b) in &self.common[i * self.n + j] {
            if mask & a != 0 && mask & b != 0 {
                out &= !(a | b);
            }
        }
        (out, out != mask)
    }

    fn search(&self, teleports: bool, budget: &mut Budget) -> Result<bool, TilesOracleError> {
        if self.full == 0 {
            return Ok(true);
        }
        let mut seen = HashSet::new();
        let mut stack: Vec<(usize, u64)> = (0..self.n).map(|t| (t, self.full)).collect();
        while let Some((cur, mask)) = stack.pop() {
            if !seen.insert((cur, mask)) {
                continue;
            }
            budget.tick()?;
            if mask == 0 {
                return Ok(true);
            }
            for j in (0..self.n).filter(|&j| j != cur) {
                let (next, standard) = self.step(mask, cur, j);
                if standard || teleports {
                    stack.push((j, next));
                }
            }
        }
        Ok(false)
    }
}

/// Whether some move sequence deletes every feature.
pub fn brute_force_solvable(inst: &TilesInstance, budget: &mut Budget) -> Result<bool, TilesOracleError> {
    Game::new(inst)?.search(true, budget)
}

/// Whether some sequence of standard moves alone deletes every feature.
pub fn brute_force_no_teleport(inst: &TilesInstance, budget: &mut Budget) -> Result<bool, TilesOracleError> {
    Game::new(inst)?.search(false, budget)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::tiles;
    use super::*;

    fn solvable(spec: &[&str]) -> bool {
        brute_force_solvable(&tiles(spec), &mut Budget::default()).unwrap()
    }

    fn no_teleport(spec: &[&str]) -> bool {
        brute_force_no_teleport(&tiles(spec), &mut Budget::default()).unwrap()
    }

    #[test]
    fn small_cases() {
        assert!(!solvable(&["f"]));
        assert!(solvable(&["f", "f"]));
        assert!(solvable(&["ab", "ac", "bc", ""]));
        assert!(solvable(&[]));
        assert!(no_teleport(&["a", "ab", "b"]));
        assert!(!no_teleport(&["a", "a", "b", "b"]));
        assert!(solvable(&["a", "a", "b", "b"]));
    }

    #[test]
    fn shared_pair_goes_in_one_move() {
        assert!(no_teleport(&["ab", "ab"]));
        assert!(!solvable(&["ab", "a", "a"]));
    }

    #[test]
    fn budget_and_size_limits() {
        let inst = tiles(&["ab", "ab", "cd", "cd"]);
        assert_eq!(brute_force_solvable(&inst, &mut Budget::new(1)), Err(TilesOracleError::BudgetExhausted));
        let big = TilesInstance::from_indices(
            (0..33).map(|i| format!("x{i}")).collect(),
            vec![(0..33).collect(), (0..33).collect()],
        )
        .unwrap();
        assert_eq!(brute_force_solvable(&big, &mut Budget::default()), Err(TilesOracleError::TooLarge(66)));
    }
}
