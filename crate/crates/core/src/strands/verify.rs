use super::{adjacent, GridCell, StrandsInstance, StrandsPartition};
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrandsVerifyError {
    #[error("cell ({}, {}) is outside the grid", .0.0, .0.1)]
    OutOfGrid(GridCell),
    #[error("word index {0} is not in the dictionary")]
    UnknownWord(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrandsViolation {
    EmptyPath { piece: usize },
    RepeatedCell { piece: usize, cell: GridCell },
    /// Step `step` of the path is not a permitted move.
    NotAdjacent { piece: usize, step: usize },
    Misspelled { piece: usize },
    Overlap(GridCell),
    Uncovered(GridCell),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StrandsVerdict {
    pub violations: Vec<StrandsViolation>,
}

impl StrandsVerdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Paths are read in the listed direction.
pub fn verify_partition(
    inst: &StrandsInstance,
    partition: &StrandsPartition,
    allow_diagonal: bool,
) -> Result<StrandsVerdict, StrandsVerifyError> {
    let mut violations = Vec::new();
    let mut owner: HashMap<GridCell, usize> = HashMap::new();
    for (i, p) in partition.pieces.iter().enumerate() {
        let word = inst.dictionary().get(p.word).ok_or(StrandsVerifyError::UnknownWord(p.word))?;
        if let Some(&c) = p.cells.iter().find(|&&c| !inst.in_grid(c)) {
            return Err(StrandsVerifyError::OutOfGrid(c));
        }
        if p.cells.is_empty() {
            violations.push(StrandsViolation::EmptyPath { piece: i });
            continue;
        }
        let mut seen = HashSet::new();
        for &c in &p.cells {
            if !seen.insert(c) {
                violations.push(StrandsViolation::RepeatedCell { piece: i, cell: c });
            }
        }
        for (step, w) in p.cells.windows(2).enumerate() {
            if !adjacent(w[0], w[1], allow_diagonal) {
                violations.push(StrandsViolation::NotAdjacent { piece: i, step });
            }
        }
        let spelled: Vec<_> = p.cells.iter().map(|&c| inst.at(c)).collect();
        if &spelled != word {
            violations.push(StrandsViolation::Misspelled { piece: i });
        }
        for &c in seen.iter() {
            if owner.insert(c, i).is_some() {
                violations.push(StrandsViolation::Overlap(c));
            }
        }
    }
    for r in 0..inst.rows() {
        for c in 0..inst.cols() {
            if !owner.contains_key(&(r, c)) {
                violations.push(StrandsViolation::Uncovered((r, c)));
            }
        }
    }
    violations.sort_by_key(|v| format!("{v:?}"));
    Ok(StrandsVerdict { violations })
}
