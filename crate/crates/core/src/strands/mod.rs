//! Strands: partition a grid of symbols into dictionary words, each read
//! along a path of adjacent cells.
//!
//! Cells are `(row, column)` pairs, row 0 at the top. Adjacency is the king
//! move by default; the no-diagonal mode restricts it to the four edge
//! neighbours.

mod certificate;
pub mod expand;
pub mod flowfree;
pub mod generate;
pub mod reductions;
mod solve;
mod verify;

pub use certificate::{export_certificate, import_certificate, CellRole, Certificate, CertificateError};
pub use solve::{
    enumerate_covers, enumerate_placements, enumerate_placements_within, solve_strands, solve_strands_with, CoverOrder,
    StrandsSearchOptions,
};
pub use verify::{verify_partition, StrandsVerdict, StrandsVerifyError, StrandsViolation};

use std::collections::HashMap;
use thiserror::Error;

pub type Symbol = usize;
pub type GridCell = (usize, usize);

/// Step directions, in enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    U,
    R,
    D,
    L,
    UR,
    DR,
    DL,
    UL,
}

impl Direction {
    pub const ALL: [Direction; 8] = [
        Direction::U,
        Direction::R,
        Direction::D,
        Direction::L,
        Direction::UR,
        Direction::DR,
        Direction::DL,
        Direction::UL,
    ];

    pub fn delta(self) -> (isize, isize) {
        match self {
            Direction::U => (-1, 0),
            Direction::R => (0, 1),
            Direction::D => (1, 0),
            Direction::L => (0, -1),
            Direction::UR => (-1, 1),
            Direction::DR => (1, 1),
            Direction::DL => (1, -1),
            Direction::UL => (-1, -1),
        }
    }

    pub fn is_diagonal(self) -> bool {
        let (dr, dc) = self.delta();
        dr != 0 && dc != 0
    }

    pub fn between(from: GridCell, to: GridCell) -> Option<Direction> {
        let d = (to.0 as isize - from.0 as isize, to.1 as isize - from.1 as isize);
        Direction::ALL.into_iter().find(|dir| dir.delta() == d)
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::U => "u",
            Direction::R => "r",
            Direction::D => "d",
            Direction::L => "l",
            Direction::UR => "ur",
            Direction::DR => "dr",
            Direction::DL => "dl",
            Direction::UL => "ul",
        }
    }

    pub fn from_name(s: &str) -> Option<Direction> {
        Direction::ALL.into_iter().find(|d| d.name() == s)
    }
}

/// Whether `a` and `b` are neighbours under the chosen adjacency.
pub fn adjacent(a: GridCell, b: GridCell, allow_diagonal: bool) -> bool {
    Direction::between(a, b).is_some_and(|d| allow_diagonal || !d.is_diagonal())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrandsError {
    #[error("the grid must have at least one row and one column")]
    EmptyGrid,
    #[error("grid row {row} has {found} cells, expected {expected}")]
    RaggedGrid { row: usize, expected: usize, found: usize },
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(String),
    #[error("alphabet lists {0:?} twice")]
    DuplicateAlphabetSymbol(String),
    #[error("dictionary word {0} is empty")]
    EmptyWord(usize),
    #[error("dictionary word {index} duplicates word {first}")]
    DuplicateWord { index: usize, first: usize },
}

/// Unvalidated instance as read from a file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StrandsSpec {
    pub alphabet: Vec<String>,
    pub dictionary: Vec<Vec<String>>,
    pub grid: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandsInstance {
    alphabet: Vec<String>,
    dictionary: Vec<Vec<Symbol>>,
    grid: Vec<Vec<Symbol>>,
}

impl StrandsInstance {
    pub fn from_spec(spec: &StrandsSpec) -> Result<Self, StrandsError> {
        let mut index = HashMap::new();
        for (i, s) in spec.alphabet.iter().enumerate() {
            if index.insert(s.as_str(), i).is_some() {
                return Err(StrandsError::DuplicateAlphabetSymbol(s.clone()));
            }
        }
        let intern = |v: &Vec<String>| {
            v.iter()
                .map(|s| index.get(s.as_str()).copied().ok_or_else(|| StrandsError::UnknownSymbol(s.clone())))
                .collect::<Result<Vec<_>, _>>()
        };
        let grid = spec.grid.iter().map(intern).collect::<Result<Vec<_>, _>>()?;
        let dictionary = spec.dictionary.iter().map(intern).collect::<Result<Vec<_>, _>>()?;
        Self::from_parts(spec.alphabet.clone(), dictionary, grid)
    }

    pub fn from_parts(
        alphabet: Vec<String>,
        dictionary: Vec<Vec<Symbol>>,
        grid: Vec<Vec<Symbol>>,
    ) -> Result<Self, StrandsError> {
        for (i, s) in alphabet.iter().enumerate() {
            if alphabet[..i].contains(s) {
                return Err(StrandsError::DuplicateAlphabetSymbol(s.clone()));
            }
        }
        let cols = grid.first().map_or(0, Vec::len);
        if cols == 0 {
            return Err(StrandsError::EmptyGrid);
        }
        for (row, r) in grid.iter().enumerate() {
            if r.len() != cols {
                return Err(StrandsError::RaggedGrid { row, expected: cols, found: r.len() });
            }
        }
        let check = |s: Symbol| {
            if s < alphabet.len() {
                Ok(())
            } else {
                Err(StrandsError::UnknownSymbol(format!("#{s}")))
            }
        };
        grid.iter().flatten().try_for_each(|&s| check(s))?;
        let mut first: HashMap<&[Symbol], usize> = HashMap::new();
        for (i, w) in dictionary.iter().enumerate() {
            if w.is_empty() {
                return Err(StrandsError::EmptyWord(i));
            }
            w.iter().try_for_each(|&s| check(s))?;
            if let Some(&f) = first.get(w.as_slice()) {
                return Err(StrandsError::DuplicateWord { index: i, first: f });
            }
            first.insert(w, i);
        }
        Ok(StrandsInstance { alphabet, dictionary, grid })
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn dictionary(&self) -> &[Vec<Symbol>] {
        &self.dictionary
    }

    pub fn grid(&self) -> &[Vec<Symbol>] {
        &self.grid
    }

    pub fn rows(&self) -> usize {
        self.grid.len()
    }

    pub fn cols(&self) -> usize {
        self.grid[0].len()
    }

    pub fn at(&self, cell: GridCell) -> Symbol {
        self.grid[cell.0][cell.1]
    }

    pub fn in_grid(&self, cell: GridCell) -> bool {
        cell.0 < self.rows() && cell.1 < self.cols()
    }

    pub fn symbol_index(&self, name: &str) -> Option<Symbol> {
        self.alphabet.iter().position(|a| a == name)
    }

    pub fn word_index(&self, word: &[Symbol]) -> Option<usize> {
        self.dictionary.iter().position(|w| w == word)
    }

    /// Longest dictionary word (0 for an empty dictionary).
    pub fn max_word_len(&self) -> usize {
        self.dictionary.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_word_len(&self) -> usize {
        self.dictionary.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn word_string(&self, w: usize) -> String {
        self.dictionary[w].iter().map(|&s| self.alphabet[s].as_str()).collect()
    }

    /// Grid neighbours of `cell` in direction order.
    pub fn neighbors(&self, cell: GridCell, allow_diagonal: bool) -> impl Iterator<Item = GridCell> + '_ {
        Direction::ALL
            .into_iter()
            .filter(move |d| allow_diagonal || !d.is_diagonal())
            .filter_map(move |d| {
                let (dr, dc) = d.delta();
                let r = cell.0.checked_add_signed(dr)?;
                let c = cell.1.checked_add_signed(dc)?;
                (r < self.rows() && c < self.cols()).then_some((r, c))
            })
    }

    pub fn to_spec(&self) -> StrandsSpec {
        let names = |v: &Vec<Symbol>| v.iter().map(|&s| self.alphabet[s].clone()).collect();
        StrandsSpec {
            alphabet: self.alphabet.clone(),
            dictionary: self.dictionary.iter().map(names).collect(),
            grid: self.grid.iter().map(names).collect(),
        }
    }
}

/// One word of a partition: a dictionary index and its directed path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrandsPlacement {
    pub word: usize,
    pub cells: Vec<GridCell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StrandsPartition {
    pub pieces: Vec<StrandsPlacement>,
}

impl StrandsPartition {
    /// Pieces ordered by their first cell.
    pub fn canonical(&self) -> StrandsPartition {
        let mut pieces = self.pieces.clone();
        pieces.sort_by_key(|p| p.cells.first().copied());
        StrandsPartition { pieces }
    }

    /// Which piece covers each cell.
    pub fn owner_map(&self) -> HashMap<GridCell, usize> {
        self.pieces
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.cells.iter().map(move |&c| (c, i)))
            .collect()
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Grid rows and words given as strings of one-character symbols.
    pub fn instance(rows: &[&str], words: &[&str]) -> StrandsInstance {
        let mut alphabet: Vec<String> = Vec::new();
        for ch in rows.iter().chain(words).flat_map(|s| s.chars()) {
            if !alphabet.contains(&ch.to_string()) {
                alphabet.push(ch.to_string());
            }
        }
        let split = |s: &&str| s.chars().map(|c| c.to_string()).collect();
        StrandsInstance::from_spec(&StrandsSpec {
            alphabet,
            dictionary: words.iter().map(split).collect(),
            grid: rows.iter().map(split).collect(),
        })
        .expect("fixture instance")
    }
}
