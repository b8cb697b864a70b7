use super::{Cell, PipsPlacement, PipsPuzzle};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipsVerifyError {
    #[error("placement references cell ({}, {}) which is not on the board", .0.x, .0.y)]
    UnknownCell(Cell),
    #[error("placement references domino {0}, which does not exist")]
    UnknownDomino(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PipsViolation {
    DominoUnused(usize),
    DominoReused(usize),
    /// Piece `piece` covers two squares that are not edge-adjacent.
    NotAdjacent { piece: usize },
    /// Piece values are not the domino's pair.
    WrongValues { piece: usize },
    CellCoveredTwice(Cell),
    CellUncovered(Cell),
    ConstraintFailed(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PipsVerdict {
    pub violations: Vec<PipsViolation>,
}

impl PipsVerdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_pips(puzzle: &PipsPuzzle, placement: &PipsPlacement) -> Result<PipsVerdict, PipsVerifyError> {
    let mut violations = Vec::new();
    let mut uses = vec![0usize; puzzle.dominoes().len()];
    let mut cover: HashMap<Cell, u64> = HashMap::new();
    for (i, p) in placement.pieces.iter().enumerate() {
        let &(a, b) = puzzle
            .dominoes()
            .get(p.domino)
            .ok_or(PipsVerifyError::UnknownDomino(p.domino))?;
        for cell in [p.cell_a, p.cell_b] {
            if !puzzle.contains(cell) {
                return Err(PipsVerifyError::UnknownCell(cell));
            }
        }
        uses[p.domino] += 1;
        if !p.cell_a.is_adjacent(p.cell_b) {
            violations.push(PipsViolation::NotAdjacent { piece: i });
        }
        if (p.value_a, p.value_b) != (a, b) && (p.value_a, p.value_b) != (b, a) {
            violations.push(PipsViolation::WrongValues { piece: i });
        }
        for (cell, v) in [(p.cell_a, p.value_a), (p.cell_b, p.value_b)] {
            if cover.insert(cell, v).is_some() {
                violations.push(PipsViolation::CellCoveredTwice(cell));
            }
        }
    }
    for (d, &n) in uses.iter().enumerate() {
        match n {
            0 => violations.push(PipsViolation::DominoUnused(d)),
            1 => {}
            _ => violations.push(PipsViolation::DominoReused(d)),
        }
    }
    for &cell in puzzle.cells() {
        if !cover.contains_key(&cell) {
            violations.push(PipsViolation::CellUncovered(cell));
        }
    }
    for (i, c) in puzzle.constraints().iter().enumerate() {
        let values: Option<Vec<u64>> = c.region.iter().map(|cell| cover.get(cell).copied()).collect();
        // Uncovered region cells are already reported above.
        if let Some(values) = values {
            if !c.kind.holds(&values) {
                violations.push(PipsViolation::ConstraintFailed(i));
            }
        }
    }
    Ok(PipsVerdict { violations })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::square_sum2;
    use super::super::{rectangle, PlacedDomino};
    use super::*;

    fn piece(domino: usize, a: (i64, i64), b: (i64, i64), va: u64, vb: u64) -> PlacedDomino {
        PlacedDomino {
            domino,
            cell_a: Cell::new(a.0, a.1),
            cell_b: Cell::new(b.0, b.1),
            value_a: va,
            value_b: vb,
        }
    }

    #[test]
    fn single_domino_board() {
        let p = PipsPuzzle::new(rectangle(2, 1), vec![(0, 0)], vec![]).unwrap();
        let sol = PipsPlacement { pieces: vec![piece(0, (0, 0), (1, 0), 0, 0)] };
        assert!(verify_pips(&p, &sol).unwrap().is_valid());
    }

    #[test]
    fn ones_on_top_row() {
        let p = square_sum2();
        let good = PipsPlacement {
            pieces: vec![piece(1, (0, 0), (1, 0), 1, 1), piece(0, (0, 1), (1, 1), 0, 0)],
        };
        assert!(verify_pips(&p, &good).unwrap().is_valid());
        let vertical = PipsPlacement {
            pieces: vec![piece(0, (0, 0), (0, 1), 0, 0), piece(1, (1, 0), (1, 1), 1, 1)],
        };
        assert_eq!(
            verify_pips(&p, &vertical).unwrap().violations,
            vec![PipsViolation::ConstraintFailed(0)]
        );
    }

    #[test]
    fn structural_violations() {
        let p = square_sum2();
        let bad = PipsPlacement {
            pieces: vec![piece(1, (0, 0), (1, 1), 1, 0), piece(1, (0, 1), (1, 0), 1, 1)],
        };
        let v = verify_pips(&p, &bad).unwrap().violations;
        assert!(v.contains(&PipsViolation::NotAdjacent { piece: 0 }));
        assert!(v.contains(&PipsViolation::WrongValues { piece: 0 }));
        assert!(v.contains(&PipsViolation::DominoUnused(0)));
        assert!(v.contains(&PipsViolation::DominoReused(1)));
    }

    #[test]
    fn unknown_references() {
        let p = square_sum2();
        let off = PipsPlacement { pieces: vec![piece(0, (0, 0), (0, -1), 0, 0)] };
        assert_eq!(verify_pips(&p, &off), Err(PipsVerifyError::UnknownCell(Cell::new(0, -1))));
        let missing = PipsPlacement { pieces: vec![piece(7, (0, 0), (1, 0), 0, 0)] };
        assert_eq!(verify_pips(&p, &missing), Err(PipsVerifyError::UnknownDomino(7)));
    }

    /// Independent oracle: all tilings of the 2×2 square times both value
    /// assignments of the dominoes. Exactly the two layouts with (1,1) on
    /// the top row are valid.
    #[test]
    fn exhaustive_square() {
        let p = square_sum2();
        let tilings = [
            [((0, 0), (1, 0)), ((0, 1), (1, 1))],
            [((0, 0), (0, 1)), ((1, 0), (1, 1))],
        ];
        let mut valid = 0;
        for t in tilings {
            for first in 0..2 {
                let pieces = vec![
                    piece(first, t[0].0, t[0].1, first as u64, first as u64),
                    piece(1 - first, t[1].0, t[1].1, 1 - first as u64, 1 - first as u64),
                ];
                if verify_pips(&p, &PipsPlacement { pieces }).unwrap().is_valid() {
                    valid += 1;
                }
            }
        }
        assert_eq!(valid, 1);
    }
}
