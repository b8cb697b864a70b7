//! Search outcomes and node budgets shared by every solver.

use std::fmt;

/// Default node budget for solvers and enumerators.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// Result of a bounded, complete search.
///
/// `BudgetExhausted` is never a synonym for `Unsolvable`: callers that treat
/// them the same have to say so explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    Unsolvable,
    BudgetExhausted,
}

impl<T> SearchOutcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_ref(&self) -> SearchOutcome<&T> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(t),
            SearchOutcome::Unsolvable => SearchOutcome::Unsolvable,
            SearchOutcome::BudgetExhausted => SearchOutcome::BudgetExhausted,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::Unsolvable => SearchOutcome::Unsolvable,
            SearchOutcome::BudgetExhausted => SearchOutcome::BudgetExhausted,
        }
    }

    /// `Some(true)` when found, `Some(false)` when proven unsolvable.
    pub fn decided(&self) -> Option<bool> {
        match self {
            SearchOutcome::Found(_) => Some(true),
            SearchOutcome::Unsolvable => Some(false),
            SearchOutcome::BudgetExhausted => None,
        }
    }
}

/// Marker returned when a [`Budget`] runs out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exhausted;

impl fmt::Display for Exhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("node budget exhausted")
    }
}

impl std::error::Error for Exhausted {}

/// Counts search nodes against a fixed limit.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), Exhausted> {
        self.used += 1;
        if self.used > self.limit {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_trips_after_limit() {
        let mut b = Budget::new(2);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert_eq!(b.tick(), Err(Exhausted));
    }

    #[test]
    fn outcome_helpers() {
        let o: SearchOutcome<u32> = SearchOutcome::Found(3);
        assert_eq!(o.decided(), Some(true));
        assert_eq!(o.clone().map(|x| x + 1), SearchOutcome::Found(4));
        assert_eq!(SearchOutcome::<u32>::BudgetExhausted.decided(), None);
        assert_eq!(SearchOutcome::<u32>::Unsolvable.found(), None);
    }
}
