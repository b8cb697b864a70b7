//! Pips: tile a board with a given multiset of dominoes so that every
//! constraint region is satisfied.

pub mod reductions;
mod solve;
mod verify;

pub use solve::{
    enumerate_pips_solutions, solve_pips, solve_pips_with, EnumerateError, PipsSearchOptions,
};
pub use verify::{verify_pips, PipsVerdict, PipsVerifyError, PipsViolation};

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use thiserror::Error;

/// Board square. Ordered row-major: by `y`, then by `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub const fn new(x: i64, y: i64) -> Self {
        Cell { x, y }
    }

    pub fn is_adjacent(self, other: Cell) -> bool {
        (self.x - other.x).abs() + (self.y - other.y).abs() == 1
    }

    pub fn neighbors(self) -> [Cell; 4] {
        let Cell { x, y } = self;
        [Cell::new(x, y - 1), Cell::new(x + 1, y), Cell::new(x, y + 1), Cell::new(x - 1, y)]
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Unordered pair of pip values.
pub type Domino = (u64, u64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PipsConstraintKind {
    Eq,
    Neq,
    SumEq(u64),
    SumLt(u64),
    SumGt(u64),
}

impl PipsConstraintKind {
    /// Whether a fully covered region with these values satisfies the kind.
    pub fn holds(self, values: &[u64]) -> bool {
        let sum = || values.iter().sum::<u64>();
        match self {
            PipsConstraintKind::Eq => values.windows(2).all(|w| w[0] == w[1]),
            PipsConstraintKind::Neq => {
                let mut seen = HashSet::new();
                values.iter().all(|v| seen.insert(*v))
            }
            PipsConstraintKind::SumEq(n) => sum() == n,
            PipsConstraintKind::SumLt(n) => sum() < n,
            PipsConstraintKind::SumGt(n) => sum() > n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipsConstraint {
    /// Sorted row-major.
    pub region: Vec<Cell>,
    pub kind: PipsConstraintKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipsError {
    #[error("cell ({}, {}) is listed twice", .0.x, .0.y)]
    DuplicateCell(Cell),
    #[error("constraint {0} has an empty region")]
    EmptyRegion(usize),
    #[error("constraint {region} uses cell ({}, {}) which is not on the board", .cell.x, .cell.y)]
    RegionOffBoard { region: usize, cell: Cell },
    #[error("constraints {first} and {second} overlap at ({}, {})", .cell.x, .cell.y)]
    OverlappingRegions { cell: Cell, first: usize, second: usize },
    #[error("constraint {0} has a disconnected region")]
    DisconnectedRegion(usize),
}

/// A validated puzzle. Cells and regions are kept in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipsPuzzle {
    cells: Vec<Cell>,
    dominoes: Vec<Domino>,
    constraints: Vec<PipsConstraint>,
}

impl PipsPuzzle {
    pub fn new(
        cells: Vec<Cell>,
        dominoes: Vec<Domino>,
        constraints: Vec<PipsConstraint>,
    ) -> Result<Self, PipsError> {
        let mut cells = cells;
        cells.sort();
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(PipsError::DuplicateCell(w[0]));
        }
        let board: HashSet<Cell> = cells.iter().copied().collect();
        let mut owner: HashMap<Cell, usize> = HashMap::new();
        let mut constraints = constraints;
        for (i, c) in constraints.iter_mut().enumerate() {
            c.region.sort();
            if c.region.is_empty() {
                return Err(PipsError::EmptyRegion(i));
            }
            if let Some(w) = c.region.windows(2).find(|w| w[0] == w[1]) {
                return Err(PipsError::OverlappingRegions { cell: w[0], first: i, second: i });
            }
            for &cell in &c.region {
                if !board.contains(&cell) {
                    return Err(PipsError::RegionOffBoard { region: i, cell });
                }
                if let Some(first) = owner.insert(cell, i) {
                    return Err(PipsError::OverlappingRegions { cell, first, second: i });
                }
            }
            if !is_connected(&c.region) {
                return Err(PipsError::DisconnectedRegion(i));
            }
        }
        Ok(PipsPuzzle { cells, dominoes, constraints })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    pub fn constraints(&self) -> &[PipsConstraint] {
        &self.constraints
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    /// Position of `cell` in row-major order.
    pub fn cell_index(&self, cell: Cell) -> Option<usize> {
        self.cells.binary_search(&cell).ok()
    }

    /// Whether the board area matches the domino count.
    pub fn is_balanced(&self) -> bool {
        self.cells.len() == 2 * self.dominoes.len()
    }
}

fn is_connected(region: &[Cell]) -> bool {
    let set: HashSet<Cell> = region.iter().copied().collect();
    let mut seen = HashSet::from([region[0]]);
    let mut queue = VecDeque::from([region[0]]);
    while let Some(c) = queue.pop_front() {
        for n in c.neighbors() {
            if set.contains(&n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == set.len()
}

/// One domino on the board: `domino` indexes the puzzle's list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlacedDomino {
    pub domino: usize,
    pub cell_a: Cell,
    pub cell_b: Cell,
    pub value_a: u64,
    pub value_b: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PipsPlacement {
    pub pieces: Vec<PlacedDomino>,
}

impl PipsPlacement {
    /// Value covering each cell.
    pub fn cell_values(&self) -> HashMap<Cell, u64> {
        self.pieces
            .iter()
            .flat_map(|p| [(p.cell_a, p.value_a), (p.cell_b, p.value_b)])
            .collect()
    }
}

/// Every cell of a `w`×`h` rectangle with its corner at the origin.
pub fn rectangle(w: i64, h: i64) -> Vec<Cell> {
    (0..h).flat_map(|y| (0..w).map(move |x| Cell::new(x, y))).collect()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// 2×2 board, dominoes (0,0) and (1,1), top row sums to 2.
    pub fn square_sum2() -> PipsPuzzle {
        PipsPuzzle::new(
            rectangle(2, 2),
            vec![(0, 0), (1, 1)],
            vec![PipsConstraint {
                region: vec![Cell::new(0, 0), Cell::new(1, 0)],
                kind: PipsConstraintKind::SumEq(2),
            }],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_major_order() {
        let mut v = vec![Cell::new(1, 0), Cell::new(0, 1), Cell::new(0, 0)];
        v.sort();
        assert_eq!(v, vec![Cell::new(0, 0), Cell::new(1, 0), Cell::new(0, 1)]);
    }

    #[test]
    fn rejects_bad_regions() {
        let c = |x, y| Cell::new(x, y);
        let region = |cells: Vec<Cell>| PipsConstraint { region: cells, kind: PipsConstraintKind::Eq };
        assert_eq!(
            PipsPuzzle::new(rectangle(2, 1), vec![(0, 0)], vec![region(vec![c(5, 5)])]).unwrap_err(),
            PipsError::RegionOffBoard { region: 0, cell: c(5, 5) }
        );
        assert_eq!(
            PipsPuzzle::new(rectangle(3, 1), vec![], vec![region(vec![c(0, 0), c(2, 0)])]).unwrap_err(),
            PipsError::DisconnectedRegion(0)
        );
        assert!(matches!(
            PipsPuzzle::new(rectangle(2, 1), vec![], vec![region(vec![c(0, 0)]), region(vec![c(0, 0)])]),
            Err(PipsError::OverlappingRegions { first: 0, second: 1, .. })
        ));
        assert_eq!(
            PipsPuzzle::new(vec![c(0, 0), c(0, 0)], vec![], vec![]).unwrap_err(),
            PipsError::DuplicateCell(c(0, 0))
        );
    }

    #[test]
    fn constraint_kinds() {
        use PipsConstraintKind::*;
        assert!(Eq.holds(&[2, 2, 2]) && !Eq.holds(&[2, 3]));
        assert!(Neq.holds(&[1, 2, 3]) && !Neq.holds(&[1, 1]));
        assert!(SumEq(5).holds(&[2, 3]));
        assert!(SumLt(5).holds(&[2, 2]) && !SumLt(4).holds(&[2, 2]));
        assert!(SumGt(3).holds(&[2, 2]) && !SumGt(4).holds(&[2, 2]));
    }

    #[test]
    fn disconnected_board_is_fine() {
        let p = PipsPuzzle::new(vec![Cell::new(0, 0), Cell::new(5, 5)], vec![(0, 0)], vec![]).unwrap();
        assert!(p.is_balanced());
    }
}
