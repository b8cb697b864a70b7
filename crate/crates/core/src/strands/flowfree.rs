//! Flow Free to Strands: terminals keep their colour, every other cell gets
//! a black/white checkerboard symbol, and each colour's dictionary holds the
//! alternating strings that can join its two terminals.

use super::{adjacent, GridCell, StrandsInstance, StrandsPartition, Symbol};
use std::collections::HashSet;
use thiserror::Error;

pub const BLACK: &str = "B";
pub const WHITE: &str = "W";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowPair {
    pub color: String,
    pub a: GridCell,
    pub b: GridCell,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowFreeInstance {
    rows: usize,
    cols: usize,
    pairs: Vec<FlowPair>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowFreeError {
    #[error("grid must be at least 1x1")]
    EmptyGrid,
    #[error("terminal ({}, {}) is outside the grid", .0.0, .0.1)]
    OutOfGrid(GridCell),
    #[error("two terminals share cell ({}, {})", .0.0, .0.1)]
    OverlappingTerminals(GridCell),
    #[error("colour {0:?} is used by two pairs")]
    DuplicateColor(String),
    #[error("colour name {0:?} is reserved for the checkerboard")]
    ReservedColor(String),
}

impl FlowFreeInstance {
    pub fn new(rows: usize, cols: usize, pairs: Vec<FlowPair>) -> Result<Self, FlowFreeError> {
        if rows == 0 || cols == 0 {
            return Err(FlowFreeError::EmptyGrid);
        }
        let mut cells = HashSet::new();
        let mut colors = HashSet::new();
        for p in &pairs {
            if p.color == BLACK || p.color == WHITE || p.color.is_empty() {
                return Err(FlowFreeError::ReservedColor(p.color.clone()));
            }
            if !colors.insert(p.color.as_str()) {
                return Err(FlowFreeError::DuplicateColor(p.color.clone()));
            }
            for c in [p.a, p.b] {
                if c.0 >= rows || c.1 >= cols {
                    return Err(FlowFreeError::OutOfGrid(c));
                }
                if !cells.insert(c) {
                    return Err(FlowFreeError::OverlappingTerminals(c));
                }
            }
        }
        Ok(FlowFreeInstance { rows, cols, pairs })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pairs(&self) -> &[FlowPair] {
        &self.pairs
    }
}

fn is_black(cell: GridCell) -> bool {
    (cell.0 + cell.1).is_multiple_of(2)
}

pub fn reduce_flowfree(inst: &FlowFreeInstance) -> StrandsInstance {
    let k = inst.pairs.len();
    let black: Symbol = k;
    let white: Symbol = k + 1;
    let mut alphabet: Vec<String> = inst.pairs.iter().map(|p| p.color.clone()).collect();
    alphabet.push(BLACK.into());
    alphabet.push(WHITE.into());
    let mut grid: Vec<Vec<Symbol>> = (0..inst.rows)
        .map(|r| (0..inst.cols).map(|c| if is_black((r, c)) { black } else { white }).collect())
        .collect();
    let span = inst.rows * inst.cols;
    let mut dictionary = Vec::new();
    for (i, p) in inst.pairs.iter().enumerate() {
        grid[p.a.0][p.a.1] = i;
        grid[p.b.0][p.b.1] = i;
        // The first inner cell has the colour opposite to the terminal.
        let (first, second, tail) = match (is_black(p.a), is_black(p.b)) {
            (false, false) => (black, white, Some(black)),
            (true, true) => (white, black, Some(white)),
            _ => (black, white, None),
        };
        for l in 0..=span {
            let mut w = vec![i];
            for _ in 0..l {
                w.push(first);
                w.push(second);
            }
            w.extend(tail);
            w.push(i);
            dictionary.push(w);
        }
    }
    StrandsInstance::from_parts(alphabet, dictionary, grid).expect("colour names are distinct from B and W")
}

/// One path per pair, terminal `a` first, read off a partition of the
/// reduced instance. `None` if some colour has no piece or several.
pub fn pullback_flowfree(inst: &FlowFreeInstance, partition: &StrandsPartition) -> Option<Vec<Vec<GridCell>>> {
    let k = inst.pairs.len();
    let span = inst.rows * inst.cols + 1;
    let mut paths: Vec<Option<Vec<GridCell>>> = vec![None; k];
    for piece in &partition.pieces {
        // Words are listed colour by colour.
        let color = piece.word / span;
        if color >= k || paths[color].is_some() {
            return None;
        }
        let mut cells = piece.cells.clone();
        if cells.first() != Some(&inst.pairs[color].a) {
            cells.reverse();
        }
        paths[color] = Some(cells);
    }
    paths.into_iter().collect()
}

/// Every path joins its terminals through edge-adjacent cells, and the
/// paths together fill the grid exactly once.
pub fn verify_flow_paths(inst: &FlowFreeInstance, paths: &[Vec<GridCell>]) -> bool {
    if paths.len() != inst.pairs.len() {
        return false;
    }
    let mut seen = HashSet::new();
    for (p, path) in inst.pairs.iter().zip(paths) {
        let joined = path.first() == Some(&p.a) && path.last() == Some(&p.b) && path.len() >= 2;
        let steps = path.windows(2).all(|w| adjacent(w[0], w[1], false));
        let inside = path.iter().all(|c| c.0 < inst.rows && c.1 < inst.cols);
        if !(joined && steps && inside && path.iter().all(|&c| seen.insert(c))) {
            return false;
        }
    }
    seen.len() == inst.rows * inst.cols
}

#[cfg(test)]
mod tests {
    use super::super::{solve_strands, verify_partition};
    use super::*;

    fn pair(color: &str, a: GridCell, b: GridCell) -> FlowPair {
        FlowPair { color: color.into(), a, b }
    }

    #[test]
    fn adjacent_terminals() {
        let inst = FlowFreeInstance::new(1, 2, vec![pair("R", (0, 0), (0, 1))]).unwrap();
        let s = reduce_flowfree(&inst);
        assert_eq!(s.word_string(0), "RR");
        let sol = solve_strands(&s, false).found().unwrap();
        assert!(verify_partition(&s, &sol, false).unwrap().is_valid());
        let paths = pullback_flowfree(&inst, &sol).unwrap();
        assert_eq!(paths, [vec![(0, 0), (0, 1)]]);
        assert!(verify_flow_paths(&inst, &paths));
    }

    #[test]
    fn paths_must_fill_the_grid() {
        let inst = FlowFreeInstance::new(1, 3, vec![pair("R", (0, 0), (0, 2))]).unwrap();
        assert!(verify_flow_paths(&inst, &[vec![(0, 0), (0, 1), (0, 2)]]));
        assert!(!verify_flow_paths(&inst, &[vec![(0, 2), (0, 1), (0, 0)]]));
        let wide = FlowFreeInstance::new(2, 3, vec![pair("R", (0, 0), (0, 2))]).unwrap();
        assert!(!verify_flow_paths(&wide, &[vec![(0, 0), (0, 1), (0, 2)]]));
        assert!(!solve_strands(&reduce_flowfree(&wide), false).is_found());
    }

    #[test]
    fn two_columns() {
        let inst =
            FlowFreeInstance::new(2, 2, vec![pair("R", (0, 0), (1, 0)), pair("G", (0, 1), (1, 1))]).unwrap();
        let sol = solve_strands(&reduce_flowfree(&inst), false).found().unwrap();
        assert!(verify_flow_paths(&inst, &pullback_flowfree(&inst, &sol).unwrap()));
    }

    #[test]
    fn dictionary_size() {
        let inst =
            FlowFreeInstance::new(3, 3, vec![pair("R", (0, 0), (2, 2)), pair("G", (0, 1), (0, 2))]).unwrap();
        let s = reduce_flowfree(&inst);
        assert_eq!(s.dictionary().len(), 2 * (9 + 1));
        // Both R terminals are black: R (WB)^l W R.
        assert_eq!(s.word_string(1), "RWBWR");
        // G terminals differ: G (BW)^l G.
        assert_eq!(s.word_string(11), "GBWG");
    }

    #[test]
    fn validation() {
        assert_eq!(
            FlowFreeInstance::new(2, 2, vec![pair("R", (0, 0), (0, 0))]),
            Err(FlowFreeError::OverlappingTerminals((0, 0)))
        );
        assert_eq!(
            FlowFreeInstance::new(2, 2, vec![pair("B", (0, 0), (0, 1))]),
            Err(FlowFreeError::ReservedColor("B".into()))
        );
        assert_eq!(
            FlowFreeInstance::new(2, 2, vec![pair("R", (0, 0), (5, 1))]),
            Err(FlowFreeError::OutOfGrid((5, 1)))
        );
    }
}
