//! Game simulation and the greedy single-combo solver.

use super::{is_solvable, TilesInstance};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilesMoveError {
    #[error("step {step} names tile {tile}, which does not exist")]
    UnknownTile { step: usize, tile: usize },
    #[error("step {step} stays on the same tile")]
    RepeatedTile { step: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    /// Shared undeleted features, now gone from both tiles.
    Standard { deleted: Vec<usize> },
    /// Forced when the departing tile had nothing left.
    Teleport { forced: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveReport {
    /// One entry per move, so one fewer than the tiles visited.
    pub steps: Vec<Step>,
    pub all_deleted: bool,
    pub unforced_teleports: usize,
    pub max_combo: usize,
}

impl MoveReport {
    pub fn standard_moves(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, Step::Standard { .. })).count()
    }

    pub fn teleports(&self) -> usize {
        self.steps.len() - self.standard_moves()
    }
}

fn intersect(a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> Vec<usize> {
    a.intersection(b).copied().collect()
}

/// Plays `moves` (the first entry is the starting tile) and reports what
/// happened.
pub fn verify_moves(inst: &TilesInstance, moves: &[usize]) -> Result<MoveReport, TilesMoveError> {
    let n = inst.tiles().len();
    for (step, &t) in moves.iter().enumerate() {
        if t >= n {
            return Err(TilesMoveError::UnknownTile { step, tile: t });
        }
        if step > 0 && moves[step - 1] == t {
            return Err(TilesMoveError::RepeatedTile { step });
        }
    }
    let mut left: Vec<BTreeSet<usize>> = inst.tiles().iter().map(|t| t.iter().copied().collect()).collect();
    let parity: Vec<usize> = inst.feature_counts().iter().map(|c| c % 2).collect();
    let mut steps = Vec::new();
    let (mut combo, mut max_combo, mut unforced) = (0, 0, 0);
    for w in moves.windows(2) {
        let (a, b) = (w[0], w[1]);
        let common = intersect(&left[a], &left[b]);
        if common.is_empty() {
            let forced = left[a].is_empty();
            if !forced {
                unforced += 1;
                combo = 0;
            }
            steps.push(Step::Teleport { forced });
        } else {
            for f in &common {
                left[a].remove(f);
                left[b].remove(f);
            }
            combo += 1;
            max_combo = max_combo.max(combo);
            steps.push(Step::Standard { deleted: common });
        }
        debug_assert!({
            let mut now = vec![0; parity.len()];
            for &f in left.iter().flatten() {
                now[f] += 1;
            }
            now.iter().zip(&parity).all(|(c, p)| c % 2 == *p)
        });
    }
    Ok(MoveReport {
        steps,
        all_deleted: left.iter().all(BTreeSet::is_empty),
        unforced_teleports: unforced,
        max_combo,
    })
}

/// Starts on the lowest non-empty tile, always moves to the lowest tile
/// sharing an undeleted feature, and teleports to the lowest non-empty
/// tile only when the current one is empty. `None` when some feature
/// count is odd.
pub fn solve_greedy(inst: &TilesInstance) -> Option<Vec<usize>> {
    if !is_solvable(inst) {
        return None;
    }
    let mut left: Vec<BTreeSet<usize>> = inst.tiles().iter().map(|t| t.iter().copied().collect()).collect();
    let mut holders = vec![BTreeSet::new(); inst.features().len()];
    for (t, tile) in inst.tiles().iter().enumerate() {
        for &f in tile {
            holders[f].insert(t);
        }
    }
    let mut remaining = inst.size();
    let mut moves: Vec<usize> = Vec::new();
    while remaining > 0 {
        let next = match moves.last() {
            Some(&cur) if !left[cur].is_empty() => left[cur]
                .iter()
                .filter_map(|&f| holders[f].iter().find(|&&t| t != cur).copied())
                .min()
                .expect("even counts leave a partner for every feature"),
            _ => left.iter().position(|t| !t.is_empty()).expect("features remain"),
        };
        if let Some(&cur) = moves.last() {
            for f in intersect(&left[cur], &left[next]) {
                for t in [cur, next] {
                    left[t].remove(&f);
                    holders[f].remove(&t);
                }
                remaining -= 2;
            }
        }
        moves.push(next);
    }
    Some(moves)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::tiles;
    use super::super::generate::random_instance;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn greedy_teleports_only_when_forced() {
        let inst = tiles(&["ab", "a", "b"]);
        let moves = solve_greedy(&inst).unwrap();
        assert_eq!(moves, [0, 1, 0, 2]);
        let r = verify_moves(&inst, &moves).unwrap();
        assert_eq!(
            r.steps,
            [
                Step::Standard { deleted: vec![0] },
                Step::Teleport { forced: true },
                Step::Standard { deleted: vec![1] }
            ]
        );
        assert!(r.all_deleted);
        assert_eq!((r.unforced_teleports, r.max_combo), (0, 2));
    }

    #[test]
    fn greedy_small_cases() {
        assert_eq!(solve_greedy(&tiles(&["f", "f"])), Some(vec![0, 1]));
        assert_eq!(solve_greedy(&tiles(&["f"])), None);
        assert_eq!(solve_greedy(&tiles(&["", ""])), Some(vec![]));
    }

    #[test]
    fn unforced_teleport_breaks_combo() {
        let inst = tiles(&["a", "b"]);
        let r = verify_moves(&inst, &[0, 1]).unwrap();
        assert_eq!(r.steps, [Step::Teleport { forced: false }]);
        assert!(!r.all_deleted);
        assert_eq!(r.unforced_teleports, 1);

        let inst = tiles(&["a", "a", "b", "b"]);
        let r = verify_moves(&inst, &[0, 1, 2, 3]).unwrap();
        assert_eq!((r.max_combo, r.unforced_teleports), (2, 0));
        let r = verify_moves(&inst, &[0, 1, 2, 0, 3, 2]).unwrap();
        assert_eq!((r.max_combo, r.unforced_teleports), (1, 1));
        assert!(r.all_deleted);
    }

    #[test]
    fn empty_move_list() {
        assert!(verify_moves(&tiles(&["", ""]), &[]).unwrap().all_deleted);
        assert!(!verify_moves(&tiles(&["a", "a"]), &[]).unwrap().all_deleted);
    }

    #[test]
    fn malformed_moves() {
        let inst = tiles(&["a", "a"]);
        assert_eq!(verify_moves(&inst, &[0, 0]), Err(TilesMoveError::RepeatedTile { step: 1 }));
        assert_eq!(verify_moves(&inst, &[0, 2]), Err(TilesMoveError::UnknownTile { step: 1, tile: 2 }));
    }

    proptest! {
        #[test]
        fn greedy_is_one_combo(seed in any::<u64>()) {
            let inst = random_instance(6, 5, seed);
            match solve_greedy(&inst) {
                Some(moves) => {
                    let r = verify_moves(&inst, &moves).unwrap();
                    prop_assert!(r.all_deleted);
                    prop_assert_eq!(r.unforced_teleports, 0);
                    prop_assert_eq!(r.max_combo, r.standard_moves());
                }
                None => prop_assert!(!is_solvable(&inst)),
            }
        }
    }
}
