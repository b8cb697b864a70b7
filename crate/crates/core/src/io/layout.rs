//! Sidecars recording what a reduction built, for pullback and rendering.

use super::puzzles::{cell, xy};
use super::{unwire, wire, FileFormat, IoError};
use crate::letterboxed::reductions::{LiftOutput, NaeReductionOutput, ThreeDmReductionOutput};
use crate::letterboxed::LetterBoxedPuzzle;
use crate::pips::reductions::{Branch, ClauseGadget, PipsGadgetLayout, VariableGadget};
use crate::strands::reductions::{StrandsEdge, StrandsGadgetLayout, StrandsVariableGadget};
use crate::strands::GridCell;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Layout {
    Nae { k: usize, variable_order: Vec<usize>, occurrence_count: Vec<usize>, first_position: Vec<usize> },
    ThreeDm { k: usize, triple_of_word: Vec<[usize; 3]> },
    Lift { k: usize, start: usize, end: usize, hash: usize },
    PipsOneInThree(PipsGadgetLayout),
    SubsetSum,
    StrandsOneInThree(StrandsGadgetLayout),
    Blocks { colors: [usize; 4] },
    FlowFree,
}

impl Layout {
    pub fn nae(out: &NaeReductionOutput) -> Self {
        Layout::Nae {
            k: out.k,
            variable_order: out.variable_order.clone(),
            occurrence_count: out.occurrence_count.clone(),
            first_position: out.first_position.clone(),
        }
    }

    pub fn three_dm(out: &ThreeDmReductionOutput) -> Self {
        Layout::ThreeDm { k: out.k, triple_of_word: out.triple_of_word.clone() }
    }

    pub fn lift(out: &LiftOutput) -> Self {
        Layout::Lift { k: out.k, start: out.start, end: out.end, hash: out.hash }
    }

    /// The word budget recorded by a Letter Boxed sidecar.
    pub fn k(&self) -> Option<usize> {
        match self {
            Layout::Nae { k, .. } | Layout::ThreeDm { k, .. } | Layout::Lift { k, .. } => Some(*k),
            _ => None,
        }
    }

    pub fn nae_output(&self, puzzle: LetterBoxedPuzzle) -> Option<NaeReductionOutput> {
        match self {
            Layout::Nae { k, variable_order, occurrence_count, first_position } => Some(NaeReductionOutput {
                puzzle,
                k: *k,
                variable_order: variable_order.clone(),
                occurrence_count: occurrence_count.clone(),
                first_position: first_position.clone(),
            }),
            _ => None,
        }
    }

    pub fn three_dm_output(&self, puzzle: LetterBoxedPuzzle) -> Option<ThreeDmReductionOutput> {
        match self {
            Layout::ThreeDm { k, triple_of_word } => {
                Some(ThreeDmReductionOutput { puzzle, k: *k, triple_of_word: triple_of_word.clone() })
            }
            _ => None,
        }
    }
}

type Xy = (i64, i64);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BranchFile {
    clause: usize,
    cells: Vec<Xy>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PipsVariableFile {
    base: Vec<Xy>,
    branches: Vec<BranchFile>,
    constraint: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PipsClauseFile {
    row: i64,
    tips: [Xy; 3],
    body: Vec<Xy>,
    bumps: Vec<Xy>,
    constraint: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
struct StrandsVariableFile {
    origin: GridCell,
    modules: usize,
    e_cells: Vec<GridCell>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeFile {
    variable: usize,
    clause: usize,
    cells: Vec<GridCell>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all_fields = "camelCase")]
enum LayoutFile {
    #[serde(rename = "nae3sat-to-letterboxed")]
    Nae { k: usize, variable_order: Vec<usize>, occurrence_count: Vec<usize>, first_position: Vec<usize> },
    #[serde(rename = "3dm-to-letterboxed")]
    ThreeDm { k: usize, triple_of_word: Vec<[usize; 3]> },
    #[serde(rename = "lift-sides")]
    Lift { k: usize, start: usize, end: usize, hash: usize },
    #[serde(rename = "1in3-to-pips")]
    Pips { variables: Vec<PipsVariableFile>, clauses: Vec<PipsClauseFile>, cleanup: Vec<Xy>, connectors: Vec<[Xy; 2]> },
    #[serde(rename = "subsetsum-to-pips")]
    SubsetSum {},
    #[serde(rename = "1in3-to-strands")]
    Strands { variables: Vec<StrandsVariableFile>, clauses: Vec<[GridCell; 2]>, edges: Vec<EdgeFile> },
    #[serde(rename = "expand-blocks")]
    Blocks { colors: [usize; 4] },
    #[serde(rename = "flowfree-to-strands")]
    FlowFree {},
}

fn xys(cells: &[crate::pips::Cell]) -> Vec<Xy> {
    cells.iter().copied().map(xy).collect()
}

fn cells(v: Vec<Xy>) -> Vec<crate::pips::Cell> {
    v.into_iter().map(cell).collect()
}

impl FileFormat for Layout {
    fn to_json(&self) -> Value {
        wire(&match self.clone() {
            Layout::Nae { k, variable_order, occurrence_count, first_position } => {
                LayoutFile::Nae { k, variable_order, occurrence_count, first_position }
            }
            Layout::ThreeDm { k, triple_of_word } => LayoutFile::ThreeDm { k, triple_of_word },
            Layout::Lift { k, start, end, hash } => LayoutFile::Lift { k, start, end, hash },
            Layout::PipsOneInThree(l) => LayoutFile::Pips {
                variables: l
                    .variables
                    .iter()
                    .map(|v| PipsVariableFile {
                        base: xys(&v.base),
                        branches: v
                            .branches
                            .iter()
                            .map(|b| BranchFile { clause: b.clause, cells: xys(&b.cells) })
                            .collect(),
                        constraint: v.constraint,
                    })
                    .collect(),
                clauses: l
                    .clauses
                    .iter()
                    .map(|c| PipsClauseFile {
                        row: c.row,
                        tips: c.tips.map(xy),
                        body: xys(&c.body),
                        bumps: xys(&c.bumps),
                        constraint: c.constraint,
                    })
                    .collect(),
                cleanup: xys(&l.cleanup),
                connectors: l.connectors.iter().map(|c| c.map(xy)).collect(),
            },
            Layout::SubsetSum => LayoutFile::SubsetSum {},
            Layout::StrandsOneInThree(l) => LayoutFile::Strands {
                variables: l
                    .variables
                    .into_iter()
                    .map(|v| StrandsVariableFile { origin: v.origin, modules: v.modules, e_cells: v.e_cells })
                    .collect(),
                clauses: l.clauses,
                edges: l
                    .edges
                    .into_iter()
                    .map(|e| EdgeFile { variable: e.variable, clause: e.clause, cells: e.cells })
                    .collect(),
            },
            Layout::Blocks { colors } => LayoutFile::Blocks { colors },
            Layout::FlowFree => LayoutFile::FlowFree {},
        })
    }

    fn from_json(value: Value) -> Result<Self, IoError> {
        Ok(match unwire::<LayoutFile>(value)? {
            LayoutFile::Nae { k, variable_order, occurrence_count, first_position } => {
                Layout::Nae { k, variable_order, occurrence_count, first_position }
            }
            LayoutFile::ThreeDm { k, triple_of_word } => Layout::ThreeDm { k, triple_of_word },
            LayoutFile::Lift { k, start, end, hash } => Layout::Lift { k, start, end, hash },
            LayoutFile::Pips { variables, clauses, cleanup, connectors } => {
                Layout::PipsOneInThree(PipsGadgetLayout {
                    variables: variables
                        .into_iter()
                        .map(|v| VariableGadget {
                            base: cells(v.base),
                            branches: v
                                .branches
                                .into_iter()
                                .map(|b| Branch { clause: b.clause, cells: cells(b.cells) })
                                .collect(),
                            constraint: v.constraint,
                        })
                        .collect(),
                    clauses: clauses
                        .into_iter()
                        .map(|c| ClauseGadget {
                            row: c.row,
                            tips: c.tips.map(cell),
                            body: cells(c.body),
                            bumps: cells(c.bumps),
                            constraint: c.constraint,
                        })
                        .collect(),
                    cleanup: cells(cleanup),
                    connectors: connectors.into_iter().map(|c| c.map(cell)).collect(),
                })
            }
            LayoutFile::SubsetSum {} => Layout::SubsetSum,
            LayoutFile::Strands { variables, clauses, edges } => Layout::StrandsOneInThree(StrandsGadgetLayout {
                variables: variables
                    .into_iter()
                    .map(|v| StrandsVariableGadget { origin: v.origin, modules: v.modules, e_cells: v.e_cells })
                    .collect(),
                clauses,
                edges: edges
                    .into_iter()
                    .map(|e| StrandsEdge { variable: e.variable, clause: e.clause, cells: e.cells })
                    .collect(),
            }),
            LayoutFile::Blocks { colors } => Layout::Blocks { colors },
            LayoutFile::FlowFree {} => Layout::FlowFree,
        })
    }
}
