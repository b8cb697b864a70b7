//! Planar 1-in-3-SAT and Subset-Sum compiled into Pips boards.
//!
//! Geometry of the 1-in-3 board (y grows downward, row 0 holds the bases):
//!
//! * each variable owns a horizontal base of `2·max(deg, 1)` cells; the leg
//!   for its `r`-th slot leaves the base at offset `2r`;
//! * a leg of a clause at level `L` is a vertical branch of `4L` cells, going
//!   up (negative y) for clauses above the line and down otherwise; its last
//!   cell is the tip;
//! * the clause body joins its three tips along row `±4L`; a gap holding an
//!   odd number of body cells gets a bump cell beside the body, next to the
//!   left tip of the gap;
//! * the cleanup strip is a straight row below every other gadget.
//!
//! Every gadget is a tree and every branch and base has even length, so the
//! tiling shape is forced. In connected mode two-cell connectors, each with a
//! zero-sum constraint, chain the bases and the cleanup strip into one piece.

use super::{
    enumerate_pips_solutions, verify_pips, Cell, Domino, PipsConstraint, PipsConstraintKind,
    PipsPlacement, PipsPuzzle, PipsVerifyError, PipsViolation,
};
use crate::source::{validate_embedding, EmbeddingViolation, OneInThreeInstance, Side, SubsetSumInstance};
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipsReductionError {
    #[error("invalid embedding: {}", .0.first().map(ToString::to_string).unwrap_or_default())]
    Embedding(Vec<EmbeddingViolation>),
    #[error("cells of two gadgets collide at ({}, {})", .0.x, .0.y)]
    Collision(Cell),
    #[error("gadgets touch at ({}, {}) and ({}, {})", .0.x, .0.y, .1.x, .1.y)]
    StrayAdjacency(Cell, Cell),
    #[error("{0} does not have a unique tiling shape")]
    NotUnique(String),
    #[error("Subset-Sum instance has no elements")]
    EmptySubsetSum,
    #[error("placement is not a valid solution")]
    InvalidPlacement(Vec<PipsViolation>),
    #[error(transparent)]
    MalformedPlacement(#[from] PipsVerifyError),
    #[error("variable {0} gadget carries mixed values")]
    MixedVariable(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub clause: usize,
    /// From the base outward; the last cell is the tip.
    pub cells: Vec<Cell>,
}

impl Branch {
    pub fn tip(&self) -> Cell {
        *self.cells.last().expect("branches are non-empty")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableGadget {
    pub base: Vec<Cell>,
    pub branches: Vec<Branch>,
    /// Index of the Eq constraint.
    pub constraint: usize,
}

impl VariableGadget {
    /// Base and branch cells, tips included.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = self.base.clone();
        out.extend(self.branches.iter().flat_map(|b| b.cells.iter().copied()));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseGadget {
    pub row: i64,
    /// Branch tips, left to right.
    pub tips: [Cell; 3],
    /// Body cells other than the tips.
    pub body: Vec<Cell>,
    pub bumps: Vec<Cell>,
    /// Index of the SumEq(1) constraint.
    pub constraint: usize,
}

impl ClauseGadget {
    /// Body and bumps, tips excluded.
    pub fn own_cells(&self) -> Vec<Cell> {
        self.body.iter().chain(&self.bumps).copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PipsGadgetLayout {
    pub variables: Vec<VariableGadget>,
    pub clauses: Vec<ClauseGadget>,
    pub cleanup: Vec<Cell>,
    /// Two-cell zero-sum sections, empty unless built in connected mode.
    pub connectors: Vec<[Cell; 2]>,
}

/// Which gadget a board cell belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetOwner {
    Variable(usize),
    Clause(usize),
    Cleanup,
    Connector(usize),
}

impl PipsGadgetLayout {
    /// Owner of every cell. Tips belong to their variable.
    pub fn owners(&self) -> HashMap<Cell, GadgetOwner> {
        let mut out = HashMap::new();
        for (v, g) in self.variables.iter().enumerate() {
            out.extend(g.cells().into_iter().map(|c| (c, GadgetOwner::Variable(v))));
        }
        for (c, g) in self.clauses.iter().enumerate() {
            out.extend(g.own_cells().into_iter().map(|x| (x, GadgetOwner::Clause(c))));
        }
        out.extend(self.cleanup.iter().map(|&c| (c, GadgetOwner::Cleanup)));
        for (i, pair) in self.connectors.iter().enumerate() {
            out.extend(pair.iter().map(|&c| (c, GadgetOwner::Connector(i))));
        }
        out
    }

    pub fn variable_area(&self) -> usize {
        self.variables.iter().map(|g| g.cells().len()).sum()
    }

    /// Clause cells excluding the tips.
    pub fn clause_area(&self) -> usize {
        self.clauses.iter().map(|g| g.own_cells().len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipsOneInThreeOutput {
    pub puzzle: PipsPuzzle,
    pub layout: PipsGadgetLayout,
}

pub fn reduce_planar_1in3_pips(
    inst: &OneInThreeInstance,
    connected: bool,
) -> Result<PipsOneInThreeOutput, PipsReductionError> {
    let violations = validate_embedding(inst);
    if !violations.is_empty() {
        return Err(PipsReductionError::Embedding(violations));
    }
    let emb = inst.embedding();
    let gap = if connected { 2 } else { 1 };
    let mut layout = PipsGadgetLayout::default();
    let mut feet: HashMap<(usize, usize), i64> = HashMap::new();
    let mut x = 0i64;
    for v in 0..inst.variables().len() {
        if v > 0 {
            if connected {
                layout.connectors.push([Cell::new(x, 0), Cell::new(x + 1, 0)]);
            }
            x += gap;
        }
        let legs = emb.legs_of(v);
        let len = 2 * legs.len().max(1) as i64;
        let base = (x..x + len).map(|bx| Cell::new(bx, 0)).collect();
        for (rank, &(clause, _)) in legs.iter().enumerate() {
            feet.insert((v, clause), x + 2 * rank as i64);
        }
        let mut branches = Vec::new();
        for &(clause, _) in &legs {
            let ce = &emb.clauses[clause];
            let dir = side_dir(ce.side);
            let fx = feet[&(v, clause)];
            let cells = (1..=4 * ce.level as i64).map(|d| Cell::new(fx, dir * d)).collect();
            branches.push(Branch { clause, cells });
        }
        layout.variables.push(VariableGadget { base, branches, constraint: 0 });
        x += len;
    }
    let last_base = x - 1;

    for (ci, ce) in emb.clauses.iter().enumerate() {
        let dir = side_dir(ce.side);
        let row = dir * 4 * ce.level as i64;
        let mut tip_x: Vec<i64> = ce.legs.iter().map(|&(v, _)| feet[&(v, ci)]).collect();
        tip_x.sort_unstable();
        let mut body = Vec::new();
        let mut bumps = Vec::new();
        for w in tip_x.windows(2) {
            let (l, r) = (w[0], w[1]);
            body.extend((l + 1..r).map(|bx| Cell::new(bx, row)));
            if (r - l - 1) % 2 == 1 {
                bumps.push(Cell::new(l + 1, row + dir));
            }
        }
        layout.clauses.push(ClauseGadget {
            row,
            tips: [0, 1, 2].map(|i| Cell::new(tip_x[i], row)),
            body,
            bumps,
            constraint: 0,
        });
    }

    // Cleanup row: odd, strictly below the lowest gadget, so that the
    // connector column in connected mode has even length.
    let lowest = layout
        .clauses
        .iter()
        .map(|c| c.row + if c.bumps.is_empty() { 0 } else { 1 })
        .max()
        .unwrap_or(0)
        .max(0);
    let mut h = lowest + 2;
    if h % 2 == 0 {
        h += 1;
    }
    let v_area = layout.variable_area() as i64;
    if connected {
        let col = last_base + 2;
        layout.connectors.push([Cell::new(last_base + 1, 0), Cell::new(col, 0)]);
        let mut y = 1;
        while y < h {
            layout.connectors.push([Cell::new(col, y), Cell::new(col, y + 1)]);
            y += 2;
        }
        layout.cleanup = (0..v_area).map(|i| Cell::new(col - i, h)).collect();
    } else {
        layout.cleanup = (0..v_area).map(|i| Cell::new(i, h)).collect();
    }

    let mut constraints = Vec::new();
    for g in layout.variables.iter_mut() {
        g.constraint = constraints.len();
        let mut region = g.base.clone();
        for b in &g.branches {
            region.extend_from_slice(&b.cells[..b.cells.len() - 1]);
        }
        constraints.push(PipsConstraint { region, kind: PipsConstraintKind::Eq });
    }
    for g in layout.clauses.iter_mut() {
        g.constraint = constraints.len();
        let mut region = g.tips.to_vec();
        region.extend(g.own_cells());
        constraints.push(PipsConstraint { region, kind: PipsConstraintKind::SumEq(1) });
    }
    for pair in &layout.connectors {
        constraints.push(PipsConstraint { region: pair.to_vec(), kind: PipsConstraintKind::SumEq(0) });
    }

    check_layout(&layout)?;

    let v = layout.variable_area();
    let k = layout.clause_area();
    let conn = 2 * layout.connectors.len();
    let mut dominoes: Vec<Domino> = vec![(0, 0); (k + v + conn) / 2];
    dominoes.extend(std::iter::repeat_n((1, 1), v / 2));
    let cells: Vec<Cell> = layout.owners().into_keys().collect();
    let puzzle = PipsPuzzle::new(cells, dominoes, constraints)
        .expect("gadget regions are connected and disjoint by construction");
    debug_assert!(puzzle.is_balanced());
    Ok(PipsOneInThreeOutput { puzzle, layout })
}

fn side_dir(side: Side) -> i64 {
    match side {
        Side::Above => -1,
        Side::Below => 1,
    }
}

/// Disjointness, allowed contacts between gadgets, and unique tiling shape
/// of every isolated variable gadget and clause body.
fn check_layout(layout: &PipsGadgetLayout) -> Result<(), PipsReductionError> {
    let mut seen = HashSet::new();
    let all = layout
        .variables
        .iter()
        .flat_map(VariableGadget::cells)
        .chain(layout.clauses.iter().flat_map(ClauseGadget::own_cells))
        .chain(layout.cleanup.iter().copied())
        .chain(layout.connectors.iter().flatten().copied());
    for c in all {
        if !seen.insert(c) {
            return Err(PipsReductionError::Collision(c));
        }
    }
    let owners = layout.owners();
    let tips: HashMap<Cell, usize> = layout
        .variables
        .iter()
        .flat_map(|g| g.branches.iter().map(|b| (b.tip(), b.clause)))
        .collect();
    for (&cell, &owner) in &owners {
        for n in cell.neighbors() {
            let Some(&other) = owners.get(&n) else { continue };
            if other == owner {
                continue;
            }
            use GadgetOwner::*;
            let allowed = match (owner, other) {
                (Variable(_), Clause(c)) => tips.get(&cell) == Some(&c),
                (Clause(c), Variable(_)) => tips.get(&n) == Some(&c),
                (Variable(_) | Connector(_) | Cleanup, Connector(_)) => true,
                (Connector(_), Variable(_) | Cleanup) => true,
                _ => false,
            };
            if !allowed {
                return Err(PipsReductionError::StrayAdjacency(cell, n));
            }
        }
    }
    for (v, g) in layout.variables.iter().enumerate() {
        assert_unique(g.cells(), || format!("variable gadget {v}"))?;
    }
    for (c, g) in layout.clauses.iter().enumerate() {
        assert_unique(g.own_cells(), || format!("clause body {c}"))?;
    }
    Ok(())
}

fn assert_unique(cells: Vec<Cell>, what: impl Fn() -> String) -> Result<(), PipsReductionError> {
    let tiles = vec![(0, 0); cells.len() / 2];
    let p = PipsPuzzle::new(cells, tiles, vec![]).map_err(|_| PipsReductionError::NotUnique(what()))?;
    match enumerate_pips_solutions(&p, 1) {
        Ok(all) if all.len() == 1 => Ok(()),
        _ => Err(PipsReductionError::NotUnique(what())),
    }
}

/// Reads the truth assignment off a valid placement: a variable is true iff
/// its gadget is covered by ones.
pub fn pullback_1in3_pips(
    puzzle: &PipsPuzzle,
    layout: &PipsGadgetLayout,
    placement: &PipsPlacement,
) -> Result<Vec<bool>, PipsReductionError> {
    let verdict = verify_pips(puzzle, placement)?;
    if !verdict.is_valid() {
        return Err(PipsReductionError::InvalidPlacement(verdict.violations));
    }
    let values = placement.cell_values();
    layout
        .variables
        .iter()
        .enumerate()
        .map(|(v, g)| {
            let vals: HashSet<u64> = g.cells().iter().map(|c| values[c]).collect();
            match vals.into_iter().collect::<Vec<_>>().as_slice() {
                [1] => Ok(true),
                [0] => Ok(false),
                _ => Err(PipsReductionError::MixedVariable(v)),
            }
        })
        .collect()
}

/// 2×n board: one `(x, 0)` domino per element and a single sum constraint
/// on the bottom row.
pub fn reduce_subset_sum(inst: &SubsetSumInstance) -> Result<PipsPuzzle, PipsReductionError> {
    let n = inst.elements().len() as i64;
    if n == 0 {
        return Err(PipsReductionError::EmptySubsetSum);
    }
    let constraint = PipsConstraint {
        region: (0..n).map(|x| Cell::new(x, 1)).collect(),
        kind: PipsConstraintKind::SumEq(inst.target()),
    };
    let dominoes = inst.elements().iter().map(|&x| (x, 0)).collect();
    Ok(PipsPuzzle::new(super::rectangle(n, 2), dominoes, vec![constraint])
        .expect("rectangle with one row constraint is well formed"))
}

/// Elements whose non-zero half lies on the bottom row of a solved
/// Subset-Sum board.
pub fn pullback_subset_sum(
    puzzle: &PipsPuzzle,
    placement: &PipsPlacement,
) -> Result<Vec<usize>, PipsReductionError> {
    let verdict = verify_pips(puzzle, placement)?;
    if !verdict.is_valid() {
        return Err(PipsReductionError::InvalidPlacement(verdict.violations));
    }
    let mut chosen: Vec<usize> = placement
        .pieces
        .iter()
        .filter(|p| {
            let (a, _) = puzzle.dominoes()[p.domino];
            let on_bottom = |c: Cell, v: u64| c.y == 1 && v == a;
            on_bottom(p.cell_a, p.value_a) || on_bottom(p.cell_b, p.value_b)
        })
        .map(|p| p.domino)
        .collect();
    chosen.sort_unstable();
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::super::{solve_pips, PlacedDomino};
    use super::*;
    use crate::outcome::SearchOutcome;
    use crate::source::{oracle_1in3, satisfies_1in3, ClauseEmbedding, Embedding, OracleOutcome};

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    fn single_clause() -> OneInThreeInstance {
        OneInThreeInstance::with_embedding(names(3), vec![[0, 1, 2]]).unwrap()
    }

    #[test]
    fn single_clause_shape() {
        let out = reduce_planar_1in3_pips(&single_clause(), false).unwrap();
        let tiles: HashSet<Domino> = out.puzzle.dominoes().iter().copied().collect();
        assert_eq!(tiles, HashSet::from([(0, 0), (1, 1)]));
        let kinds: Vec<_> = out.puzzle.constraints().iter().map(|c| c.kind).collect();
        assert_eq!(kinds[..3], [PipsConstraintKind::Eq; 3]);
        assert_eq!(kinds[3], PipsConstraintKind::SumEq(1));
        // Bases 2 cells, branches 4 cells, so V = 18; tips 3 apart leave two
        // body cells per gap and no bump: K = 4.
        let l = &out.layout;
        assert_eq!((l.variable_area(), l.clause_area(), l.cleanup.len()), (18, 4, 18));
        let zeros = out.puzzle.dominoes().iter().filter(|d| **d == (0, 0)).count();
        assert_eq!(zeros, (18 + 4) / 2);
        assert!(out.puzzle.is_balanced());
    }

    #[test]
    fn single_clause_solves_and_pulls_back() {
        let inst = single_clause();
        for connected in [false, true] {
            let out = reduce_planar_1in3_pips(&inst, connected).unwrap();
            let sol = solve_pips(&out.puzzle).found().expect("satisfiable clause");
            let a = pullback_1in3_pips(&out.puzzle, &out.layout, &sol).unwrap();
            assert!(satisfies_1in3(&inst, &a));
            assert_eq!(a.iter().filter(|&&t| t).count(), 1);
        }
    }

    #[test]
    fn connected_mode_is_one_component() {
        let out = reduce_planar_1in3_pips(&single_clause(), true).unwrap();
        let cells: HashSet<Cell> = out.puzzle.cells().iter().copied().collect();
        let start = out.puzzle.cells()[0];
        let mut seen = HashSet::from([start]);
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for n in c.neighbors() {
                if cells.contains(&n) && seen.insert(n) {
                    stack.push(n);
                }
            }
        }
        assert_eq!(seen.len(), cells.len());
        // Tips now sit 4 apart: three body cells per gap plus a bump.
        let l = &out.layout;
        assert_eq!((l.variable_area(), l.clause_area()), (18, 8));
        let zeros = out.puzzle.dominoes().iter().filter(|d| **d == (0, 0)).count();
        assert_eq!(zeros, (18 + 8) / 2 + l.connectors.len());
    }

    #[test]
    fn paper_example_embedding() {
        let emb = Embedding {
            clauses: vec![
                ClauseEmbedding { side: Side::Above, level: 1, legs: [(0, 1), (1, 2), (2, 4)] },
                ClauseEmbedding { side: Side::Above, level: 2, legs: [(0, 0), (2, 5), (4, 8)] },
                ClauseEmbedding { side: Side::Below, level: 1, legs: [(1, 3), (3, 6), (4, 7)] },
            ],
        };
        let inst = OneInThreeInstance::new(names(5), vec![[0, 1, 2], [0, 2, 4], [1, 3, 4]], emb).unwrap();
        let out = reduce_planar_1in3_pips(&inst, false).unwrap();
        let expected = oracle_1in3(&inst).decided().unwrap();
        let got = solve_pips(&out.puzzle);
        assert_eq!(got.is_found(), expected);
        if let SearchOutcome::Found(sol) = got {
            let a = pullback_1in3_pips(&out.puzzle, &out.layout, &sol).unwrap();
            assert!(satisfies_1in3(&inst, &a));
        }
    }

    #[test]
    fn two_clauses_over_four_variables_match_the_oracle() {
        let v = names(4);
        let all: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                let inst = OneInThreeInstance::with_embedding(v.clone(), vec![all[i], all[j]]).unwrap();
                let out = reduce_planar_1in3_pips(&inst, false).unwrap();
                let sat = matches!(oracle_1in3(&inst), OracleOutcome::Found(_));
                assert_eq!(solve_pips(&out.puzzle).is_found(), sat, "clauses {:?}", inst.clauses());
            }
        }
    }

    #[test]
    fn pullback_rejects_invalid_placement() {
        let out = reduce_planar_1in3_pips(&single_clause(), false).unwrap();
        let bogus = PipsPlacement {
            pieces: vec![PlacedDomino {
                domino: 0,
                cell_a: out.puzzle.cells()[0],
                cell_b: out.puzzle.cells()[1],
                value_a: 0,
                value_b: 0,
            }],
        };
        assert!(matches!(
            pullback_1in3_pips(&out.puzzle, &out.layout, &bogus),
            Err(PipsReductionError::InvalidPlacement(_) | PipsReductionError::MalformedPlacement(_))
        ));
    }

    #[test]
    fn subset_sum_examples() {
        let p = reduce_subset_sum(&SubsetSumInstance::new(vec![1], 0).unwrap()).unwrap();
        assert_eq!(p.constraints().len(), 1);
        let sol = solve_pips(&p).found().unwrap();
        assert_eq!(pullback_subset_sum(&p, &sol).unwrap(), Vec::<usize>::new());
        let p = reduce_subset_sum(&SubsetSumInstance::new(vec![2, 3, 5], 4).unwrap()).unwrap();
        assert_eq!(solve_pips(&p), SearchOutcome::Unsolvable);
        let p = reduce_subset_sum(&SubsetSumInstance::new(vec![2, 3, 5], 8).unwrap()).unwrap();
        let sol = solve_pips(&p).found().unwrap();
        let chosen = pullback_subset_sum(&p, &sol).unwrap();
        assert_eq!(chosen.iter().map(|&i| [2, 3, 5][i]).sum::<u64>(), 8);
        assert_eq!(
            reduce_subset_sum(&SubsetSumInstance::new(vec![], 0).unwrap()),
            Err(PipsReductionError::EmptySubsetSum)
        );
    }

    /// Achievable bottom-row sums over every tiling equal the subset sums.
    #[test]
    fn subset_sum_tilings_hit_exactly_the_subset_sums() {
        for elems in [vec![1u64, 2], vec![3, 3, 4], vec![1, 2, 4, 8], vec![5, 1, 1]] {
            let mut subset_sums = HashSet::new();
            for mask in 0u32..1 << elems.len() {
                subset_sums.insert((0..elems.len()).filter(|i| mask >> i & 1 == 1).map(|i| elems[i]).sum::<u64>());
            }
            let free = PipsPuzzle::new(
                super::super::rectangle(elems.len() as i64, 2),
                elems.iter().map(|&x| (x, 0)).collect(),
                vec![],
            )
            .unwrap();
            let sums: HashSet<u64> = enumerate_pips_solutions(&free, 1_000_000)
                .unwrap()
                .iter()
                .map(|s| s.cell_values().iter().filter(|(c, _)| c.y == 1).map(|(_, v)| v).sum())
                .collect();
            assert_eq!(sums, subset_sums, "{elems:?}");
        }
    }
}
