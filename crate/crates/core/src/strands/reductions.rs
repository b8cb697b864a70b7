//! Planar 1-in-3-SAT to Strands over an eight-symbol alphabet and a
//! seven-word dictionary.
//!
//! Variable gadget for a variable with `k` legs, three rows by `3k + 3`
//! columns, `_` blank:
//!
//! ```text
//!   _ _ _ E _ _ _ _ _ _     E above B for a leg going up,
//!   A * # B * # B * ... A   below it for a leg going down
//!   _ _ _ _ _ _ E _ _ _
//! ```
//!
//! True mode covers it with `A`, then `*#BE` per module, then `A*` read
//! right to left. False mode uses `A*`, then `#B*` per module, then `A`,
//! and leaves every `E` to its edge.
//!
//! Edges are alternating `E F E F ... F` runs starting at a gadget `E`,
//! running vertically away from the variable line and then horizontally
//! into a clause: two stacked `C` cells on the column of the middle leg.

use super::{
    enumerate_covers, verify_partition, GridCell, StrandsInstance, StrandsPartition, StrandsVerifyError,
    StrandsViolation, Symbol,
};
use crate::outcome::{Budget, SearchOutcome};
use crate::source::{validate_embedding, EmbeddingViolation, OneInThreeInstance, Side};
use std::collections::HashMap;
use thiserror::Error;

pub const SYM_A: Symbol = 0;
pub const SYM_B: Symbol = 1;
pub const SYM_C: Symbol = 2;
pub const SYM_STAR: Symbol = 3;
pub const SYM_HASH: Symbol = 4;
pub const SYM_E: Symbol = 5;
pub const SYM_F: Symbol = 6;
pub const SYM_BLANK: Symbol = 7;

pub const WORD_BLANK: usize = 0;
pub const WORD_A: usize = 1;
pub const WORD_A_STAR: usize = 2;
pub const WORD_STAR_HASH_B_E: usize = 3;
pub const WORD_HASH_B_STAR: usize = 4;
pub const WORD_E_F: usize = 5;
pub const WORD_F_C_C: usize = 6;

/// Symbol names; `_` stands for the blank.
pub fn gadget_alphabet() -> Vec<String> {
    ["A", "B", "C", "*", "#", "E", "F", "_"].map(String::from).to_vec()
}

pub fn gadget_dictionary() -> Vec<Vec<Symbol>> {
    vec![
        vec![SYM_BLANK],
        vec![SYM_A],
        vec![SYM_A, SYM_STAR],
        vec![SYM_STAR, SYM_HASH, SYM_B, SYM_E],
        vec![SYM_HASH, SYM_B, SYM_STAR],
        vec![SYM_E, SYM_F],
        vec![SYM_F, SYM_C, SYM_C],
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrandsReductionError {
    #[error("invalid embedding: {}", .0.first().map(ToString::to_string).unwrap_or_default())]
    Embedding(Vec<EmbeddingViolation>),
    #[error("gadgets collide at ({}, {})", .0.0, .0.1)]
    Collision(GridCell),
    #[error("gadgets touch at ({}, {}) and ({}, {})", .0.0, .0.1, .1.0, .1.1)]
    StrayAdjacency(GridCell, GridCell),
    #[error("variable gadget {0} does not have exactly the two expected coverings")]
    GadgetIsolation(usize),
    #[error("partition is not valid")]
    InvalidPartition(Vec<StrandsViolation>),
    #[error(transparent)]
    MalformedPartition(#[from] StrandsVerifyError),
    #[error("variable {0} is covered in neither mode")]
    NeitherMode(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandsVariableGadget {
    /// Top-left cell of the 3-row rectangle.
    pub origin: GridCell,
    pub modules: usize,
    /// One `E` per module, in module order.
    pub e_cells: Vec<GridCell>,
}

impl StrandsVariableGadget {
    pub fn width(&self) -> usize {
        3 * self.modules + 3
    }

    /// The `A` in the first column.
    pub fn first_a(&self) -> GridCell {
        (self.origin.0 + 1, self.origin.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandsEdge {
    pub variable: usize,
    pub clause: usize,
    /// From the gadget `E` to the `F` touching the clause.
    pub cells: Vec<GridCell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StrandsGadgetLayout {
    pub variables: Vec<StrandsVariableGadget>,
    /// The two `C` cells of each clause, nearer the variable line first.
    pub clauses: Vec<[GridCell; 2]>,
    pub edges: Vec<StrandsEdge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Owner {
    Variable(usize),
    Clause(usize),
    Edge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandsOneInThreeOutput {
    pub instance: StrandsInstance,
    pub layout: StrandsGadgetLayout,
}

struct Canvas {
    cells: HashMap<GridCell, (Symbol, Owner)>,
}

impl Canvas {
    fn put(&mut self, cell: GridCell, sym: Symbol, owner: Owner) -> Result<(), StrandsReductionError> {
        match self.cells.insert(cell, (sym, owner)) {
            Some(_) => Err(StrandsReductionError::Collision(cell)),
            None => Ok(()),
        }
    }
}

fn step(v: usize, d: isize) -> usize {
    v.checked_add_signed(d).expect("layout stays inside the margin")
}

pub fn reduce_planar_1in3_strands(inst: &OneInThreeInstance) -> Result<StrandsOneInThreeOutput, StrandsReductionError> {
    let violations = validate_embedding(inst);
    if !violations.is_empty() {
        return Err(StrandsReductionError::Embedding(violations));
    }
    let emb = inst.embedding();
    let max_level = |side: Side| {
        emb.clauses.iter().filter(|c| c.side == side).map(|c| c.level as usize).max().unwrap_or(0)
    };
    let mid = (4 * max_level(Side::Above)).max(1) + 1;
    let rows = mid + (4 * max_level(Side::Below)).max(1) + 2;

    let mut canvas = Canvas { cells: HashMap::new() };
    let mut layout = StrandsGadgetLayout::default();
    let mut foot: HashMap<(usize, usize), usize> = HashMap::new();
    let mut x = 1;
    for v in 0..inst.variables().len() {
        let legs = emb.legs_of(v);
        let k = legs.len();
        let own = Owner::Variable(v);
        canvas.put((mid, x), SYM_A, own)?;
        canvas.put((mid, x + 1), SYM_STAR, own)?;
        let mut e_cells = Vec::new();
        for (j, &(clause, _)) in legs.iter().enumerate() {
            let b = x + 3 + 3 * j;
            canvas.put((mid, b - 1), SYM_HASH, own)?;
            canvas.put((mid, b), SYM_B, own)?;
            canvas.put((mid, b + 1), SYM_STAR, own)?;
            let e = (step(mid, dir(emb.clauses[clause].side)), b);
            canvas.put(e, SYM_E, own)?;
            e_cells.push(e);
            foot.insert((v, clause), b);
        }
        canvas.put((mid, x + 3 * k + 2), SYM_A, own)?;
        layout.variables.push(StrandsVariableGadget { origin: (mid - 1, x), modules: k, e_cells });
        x += 3 * k + 4;
    }
    let cols = x;

    for (ci, ce) in emb.clauses.iter().enumerate() {
        let d = dir(ce.side);
        let level = ce.level as isize;
        let e_row = step(mid, d);
        // 4L - 3 rows (odd) between the middle leg's E and the near C.
        let near = step(mid, d * (4 * level - 1));
        let far = step(near, d);
        let legs = ce.sorted_legs();
        let cc = foot[&(legs[1].0, ci)];
        canvas.put((near, cc), SYM_C, Owner::Clause(ci))?;
        canvas.put((far, cc), SYM_C, Owner::Clause(ci))?;
        layout.clauses.push([(near, cc), (far, cc)]);
        for (pos, &(v, _)) in legs.iter().enumerate() {
            let col = foot[&(v, ci)];
            let mut cells = Vec::new();
            if pos == 1 {
                let mut r = e_row;
                while r != near {
                    cells.push((r, col));
                    r = step(r, d);
                }
            } else {
                let dist = |t: usize| t.abs_diff(e_row) + cc.abs_diff(col);
                let target = if dist(near) % 2 == 0 { near } else { far };
                let mut r = e_row;
                loop {
                    cells.push((r, col));
                    if r == target {
                        break;
                    }
                    r = step(r, d);
                }
                let h: isize = if col < cc { 1 } else { -1 };
                let mut c = step(col, h);
                while c != cc {
                    cells.push((target, c));
                    c = step(c, h);
                }
            }
            debug_assert_eq!(cells.len() % 2, 0);
            let e = layout.edges.len();
            for (i, &cell) in cells.iter().enumerate().skip(1) {
                canvas.put(cell, if i % 2 == 0 { SYM_E } else { SYM_F }, Owner::Edge(e))?;
            }
            layout.edges.push(StrandsEdge { variable: v, clause: ci, cells });
        }
    }

    audit(&canvas, &layout)?;

    let mut grid = vec![vec![SYM_BLANK; cols]; rows];
    for (&(r, c), &(s, _)) in &canvas.cells {
        grid[r][c] = s;
    }
    let instance = StrandsInstance::from_parts(gadget_alphabet(), gadget_dictionary(), grid)
        .expect("gadget grid uses the fixed alphabet");
    for (v, g) in layout.variables.iter().enumerate() {
        check_isolation(&instance, g).map_err(|_| StrandsReductionError::GadgetIsolation(v))?;
    }
    Ok(StrandsOneInThreeOutput { instance, layout })
}

fn dir(side: Side) -> isize {
    match side {
        Side::Above => -1,
        Side::Below => 1,
    }
}

/// Non-blank cells of different gadgets may only touch where intended: an
/// edge at its own variable's `E`, an edge at its clause, and `F` against
/// `F` beside a clause.
fn audit(canvas: &Canvas, layout: &StrandsGadgetLayout) -> Result<(), StrandsReductionError> {
    for (&a, &(sa, oa)) in &canvas.cells {
        for d in super::Direction::ALL {
            let (dr, dc) = d.delta();
            let Some(b) = a.0.checked_add_signed(dr).zip(a.1.checked_add_signed(dc)) else { continue };
            let Some(&(sb, ob)) = canvas.cells.get(&b) else { continue };
            if oa == ob {
                continue;
            }
            let ok = match (oa, ob) {
                (Owner::Edge(e), Owner::Variable(v)) => {
                    let edge = &layout.edges[e];
                    edge.variable == v && edge.cells[0] == b && edge.cells[1] == a
                }
                (Owner::Variable(_), Owner::Edge(_)) => continue,
                (Owner::Edge(e), Owner::Clause(c)) => layout.edges[e].clause == c,
                (Owner::Clause(_), Owner::Edge(_)) => continue,
                (Owner::Edge(e), Owner::Edge(f)) => {
                    sa == SYM_F && sb == SYM_F && layout.edges[e].clause == layout.edges[f].clause
                }
                _ => false,
            };
            if !ok {
                return Err(StrandsReductionError::StrayAdjacency(a, b));
            }
        }
    }
    Ok(())
}

/// The gadget alone on a blank grid must admit exactly two coverings of its
/// non-`E` cells: one that also covers every `E`, one that covers none.
fn check_isolation(inst: &StrandsInstance, g: &StrandsVariableGadget) -> Result<(), ()> {
    let (rows, cols) = (5, g.width() + 2);
    let mut grid = vec![vec![SYM_BLANK; cols]; rows];
    let mut optional = vec![false; rows * cols];
    for r in 0..3 {
        for c in 0..g.width() {
            let s = inst.at((g.origin.0 + r, g.origin.1 + c));
            grid[r + 1][c + 1] = s;
            if s == SYM_E {
                optional[(r + 1) * cols + c + 1] = true;
            }
        }
    }
    let alone = StrandsInstance::from_parts(gadget_alphabet(), gadget_dictionary(), grid).map_err(|_| ())?;
    let e_count = optional.iter().filter(|&&o| o).count();
    for diag in [true, false] {
        let SearchOutcome::Found(covers) = enumerate_covers(&alone, diag, &optional, 3, &mut Budget::new(1 << 20))
        else {
            return Err(());
        };
        let mut covered_e: Vec<usize> = covers
            .iter()
            .map(|p| p.pieces.iter().flat_map(|x| &x.cells).filter(|&&(r, c)| optional[r * cols + c]).count())
            .collect();
        covered_e.sort_unstable();
        let expected = if e_count == 0 { vec![0, 0] } else { vec![0, e_count] };
        if covered_e != expected {
            return Err(());
        }
    }
    Ok(())
}

/// True iff the variable's first `A` is covered by the one-letter word.
pub fn pullback_1in3_strands(
    inst: &StrandsInstance,
    layout: &StrandsGadgetLayout,
    partition: &StrandsPartition,
    allow_diagonal: bool,
) -> Result<Vec<bool>, StrandsReductionError> {
    let verdict = verify_partition(inst, partition, allow_diagonal)?;
    if !verdict.is_valid() {
        return Err(StrandsReductionError::InvalidPartition(verdict.violations));
    }
    let owner = partition.owner_map();
    layout
        .variables
        .iter()
        .enumerate()
        .map(|(v, g)| match partition.pieces[owner[&g.first_a()]].word {
            WORD_A => Ok(true),
            WORD_A_STAR => Ok(false),
            _ => Err(StrandsReductionError::NeitherMode(v)),
        })
        .collect()
}
