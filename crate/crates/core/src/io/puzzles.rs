use super::{compact, unwire, wire, FileFormat, IoError, Symbols};
use crate::letterboxed::{validate_puzzle, LetterBoxedPuzzle, LetterBoxedSolution, LetterBoxedSpec};
use crate::pips::{Cell, PipsConstraint, PipsConstraintKind, PipsPlacement, PipsPuzzle, PlacedDomino};
use crate::strands::flowfree::{FlowFreeInstance, FlowPair};
use crate::strands::{
    import_certificate, CellRole, Certificate, Direction, GridCell, StrandsInstance, StrandsPartition,
    StrandsPlacement, StrandsSpec,
};
use crate::tiles::TilesInstance;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LetterBoxedFile {
    alphabet: Vec<String>,
    dictionary: Vec<Symbols>,
    sides: Vec<Symbols>,
}

impl FileFormat for LetterBoxedPuzzle {
    fn to_json(&self) -> Value {
        let spec = self.to_spec();
        let c = compact(&spec.alphabet);
        wire(&LetterBoxedFile {
            dictionary: spec.dictionary.into_iter().map(|w| Symbols::encode(w, c)).collect(),
            sides: spec.sides.into_iter().map(|s| Symbols::encode(s, c)).collect(),
            alphabet: spec.alphabet,
        })
    }

    fn from_json(value: Value) -> Result<Self, IoError> {
        let f: LetterBoxedFile = unwire(value)?;
        Ok(validate_puzzle(&LetterBoxedSpec {
            alphabet: f.alphabet,
            dictionary: f.dictionary.into_iter().map(Symbols::decode).collect(),
            sides: f.sides.into_iter().map(Symbols::decode).collect(),
        })?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
struct LetterBoxedSolutionFile {
    words: Vec<usize>,
    side_trace: Vec<usize>,
}

/// Sides are 1-based on disk.
impl FileFormat for LetterBoxedSolution {
    fn to_json(&self) -> Value {
        wire(&LetterBoxedSolutionFile {
            words: self.words.clone(),
            side_trace: self.side_trace.iter().map(|s| s + 1).collect(),
        })
    }

    fn from_json(value: Value) -> Result<Self, IoError> {
        let f: LetterBoxedSolutionFile = unwire(value)?;
        let side_trace = f
            .side_trace
            .iter()
            .map(|&s| s.checked_sub(1).ok_or_else(|| IoError::Invalid("sideTrace entries are 1-based".into())))
            .collect::<Result<_, _>>()?;
        Ok(LetterBoxedSolution { words: f.words, side_trace })
    }
}

pub(super) fn xy(c: Cell) -> (i64, i64) {
    (c.x, c.y)
}

pub(super) fn cell((x, y): (i64, i64)) -> Cell {
    Cell::new(x, y)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstraintFile {
    region: Vec<(i64, i64)>,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PipsFile {
    cells: Vec<(i64, i64)>,
    dominoes: Vec<(u64, u64)>,
    constraints: Vec<ConstraintFile>,
}

fn kind_to_file(k: PipsConstraintKind) -> (&'static str, Option<u64>) {
    match k {
        PipsConstraintKind::Eq => ("eq", None),
        PipsConstraintKind::Neq => ("neq", None),
        PipsConstraintKind::SumEq(n) => ("sum", Some(n)),
        PipsConstraintKind::SumLt(n) => ("lt", Some(n)),
        PipsConstraintKind::SumGt(n) => ("gt", Some(n)),
    }
}

fn kind_from_file(kind: &str, n: Option<u64>) -> Result<PipsConstraintKind, IoError> {
    let need = |n: Option<u64>| n.ok_or_else(|| IoError::Invalid(format!("constraint kind {kind:?} needs n")));
    let none = |k: PipsConstraintKind| match n {
        None => Ok(k),
        Some(_) => Err(IoError::Invalid(format!("constraint kind {kind:?} takes no n"))),
    };
    match kind {
        "eq" => none(PipsConstraintKind::Eq),
        "neq" => none(PipsConstraintKind::Neq),
        "sum" => Ok(PipsConstraintKind::SumEq(need(n)?)),
        "lt" => Ok(PipsConstraintKind::SumLt(need(n)?)),
        "gt" => Ok(PipsConstraintKind::SumGt(need(n)?)),
        other => Err(IoError::Invalid(format!("unknown constraint kind {other:?}"))),
    }
}

impl FileFormat for PipsPuzzle {
    fn to_json(&self) -> Value {
        wire(&PipsFile {
            cells: self.cells().iter().copied().map(xy).collect(),
            dominoes: self.dominoes().to_vec(),
            constraints: self
                .constraints()
                .iter()
                .map(|c| {
                    let (kind, n) = kind_to_file(c.kind);
                    ConstraintFile { region: c.region.iter().copied().map(xy).collect(), kind: kind.into(), n }
                })
                .collect(),
        })
    }

    fn from_json(value: Value) -> Result<Self, IoError> {
        let f: PipsFile = unwire(value)?;
        let constraints = f
            .constraints
            .into_iter()
            .map(|c| {
                Ok(PipsConstraint {
                    region: c.region.into_iter().map(cell).collect(),
                    kind: kind_from_file(&c.kind, c.n)?,
                })
            })
            .collect::<Result<_, IoError>>()?;
        Ok(PipsPuzzle::new(f.cells.into_iter().map(cell).collect(), f.dominoes, constraints)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
struct PlacedFile {
    domino: usize,
    cell_a: (i64, i64),
    cell_b: (i64, i64),
    value_a: u64,
    value_b: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlacementFile {
    pieces: Vec<PlacedFile>,
}

impl FileFormat for PipsPlacement {
    fn to_json(&self) -> Value {
        wire(&PlacementFile {
            pieces: self
                .pieces
                .iter()
                .map(|p| PlacedFile {
                    domino: p.domino,
                    cell_a: xy(p.cell_a),
                    cell_b: xy(p.cell_b),
                    value_a: p.value_a,
                    value_b: p.value_b,
                })
                .collect(),
        })
    }

    fn from_json(value: Value) -> Result<Self, IoError> {
        let f: PlacementFile = unwire(value)?;
        Ok(PipsPlacement {
            pieces: f
                .pieces
                .into_iter()
                .map(|p| PlacedDomino {
                    domino: p.domino,
                    cell_a: cell(p.cell_a),
                    cell_b: cell(p.cell_b),
                    value_a: p.value_a,
                    value_b: p.value_b,
                })
                .collect(),
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StrandsFile {
    alphabet: Vec<String>,
    dictionary: Vec<Symbols>,
    grid: Vec<Symbols>,
}

impl FileFormat for StrandsInstance {
    fn to_json(&self) -> Value {
        let spec = self.to_spec();
        let c = compact(&spec.alphabet);
        wire(&StrandsFile {
            dictionary: spec.dictionary.into_iter().map(|w| Symbols::encode(w, c)).collect(),
            grid: spec.grid.into_iter().map(|r| Symbols::encode(r, c)).collect(),
            alphabet: spec.alphabet,
        })
    }

    fn from_json(value: Value) -> Result<Self, IoError> {
        let f: StrandsFile = unwire(value)?;
        Ok(StrandsInstance::from_spec(&StrandsSpec {
            alphabet: f.alphabet,
            dictionary: f.dictionary.into_iter().map(Symbols::decode).collect(),
            grid: f.grid.into_iter().map(Symbols::decode).collect(),
        })?)
    }
}

/// A partition, its certificate matrices, or both.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StrandsSolutionFile {
    pub partition: Option<StrandsPartition>,
    pub certificate: Option<Certificate>,
}

impl StrandsSolutionFile {
    pub fn from_partition(partition: StrandsPartition) -> Self {
        StrandsSolutionFile { partition: Some(partition), certificate: None }
    }

    /// The listed pieces, or the partition rebuilt from the certificate.
    pub fn resolve(&self, inst: &StrandsInstance) -> Result<StrandsPartition, IoError> {
        match (&self.partition, &self.certificate) {
            (Some(p), _) => Ok(p.clone()),
            (None, Some(c)) => Ok(import_certificate(inst, c)?),
            (None, None) => Err(IoError::Invalid("solution has neither pieces nor v1/v2".into())),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PieceFile {
    word: usize,
    cells: Vec<GridCell>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StrandsSolutionWire {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pieces: Option<Vec<PieceFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v1: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v2: Option<Vec<Vec<Option<String>>>>,
}

fn pieces_from(pieces: Vec<PieceFile>) -> StrandsPartition {
    StrandsPartition {
        pieces: pieces.into_iter().map(|p| StrandsPlacement { word: p.word, cells: p.cells }).collect(),
    }
}

fn certificate_from(v1: Vec<String>, v2: Vec<Vec<Option<String>>>) -> Result<Certificate, IoError> {
    let v1 = v1
        .iter()
        .map(|row| {
            row.chars()
                .map(|c| CellRole::from_letter(c).ok_or_else(|| IoError::Invalid(format!("bad v1 entry {c:?}"))))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let v2 = v2
        .iter()
        .map(|row| {
            row.iter()
                .map(|d| match d {
                    None => Ok(None),
                    Some(name) => Direction::from_name(name)
                        .map(Some)
                        .ok_or_else(|| IoError::Invalid(format!("bad v2 entry {name:?}"))),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    Ok(Certificate { v1, v2 })
}

/// Accepts a bare list of pieces as well as the object form.
impl FileFormat for StrandsSolutionFile {
    fn to_json(&self) -> Value {
        let pieces = self.partition.as_ref().map(|p| {
            p.pieces.iter().map(|x| PieceFile { word: x.word, cells: x.cells.clone() }).collect()
        });
        let (v1, v2) = match &self.certificate {
            Some(c) => (
                Some(c.v1.iter().map(|r| r.iter().map(|x| x.letter()).collect()).collect()),
                Some(c.v2.iter().map(|r| r.iter().map(|d| d.map(|d| d.name().to_string())).collect()).collect()),
            ),
            None => (None, None),
        };
        wire(&StrandsSolutionWire { pieces, v1, v2 })
    }

    fn from_json(value: Value) -> Result<Self, IoError> {
        if value.is_array() {
            return Ok(StrandsSolutionFile::from_partition(pieces_from(unwire(value)?)));
        }
        let f: StrandsSolutionWire = unwire(value)?;
        let certificate = match (f.v1, f.v2) {
            (Some(v1), Some(v2)) => Some(certificate_from(v1, v2)?),
            (None, None) => None,
            _ => return Err(IoError::Invalid("v1 and v2 must appear together".into())),
        };
        let partition = f.pieces.map(pieces_from);
        if partition.is_none() && certificate.is_none() {
            return Err(IoError::Invalid("solution has neither pieces nor v1/v2".into()));
        }
        Ok(StrandsSolutionFile { partition, certificate })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FlowPairFile {
    color: String,
    a: GridCell,
    b: GridCell,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FlowFreeFile {
    width: usize,
    height: usize,
    pairs: Vec<FlowPairFile>,
}

impl FileFormat for FlowFreeInstance {
    fn to_json(&self) -> Value {
        wire(&FlowFreeFile {
            width: self.cols(),
            height: self.rows(),
            pairs: self.pairs().iter().map(|p| FlowPairFile { color: p.color.clone(), a: p.a, b: p.b }).collect(),
        })
    }

    fn from_json(value: Value) -> Result<Self, IoError> {
        let f: FlowFreeFile = unwire(value)?;
        let pairs = f.pairs.into_iter().map(|p| FlowPair { color: p.color, a: p.a, b: p.b }).collect();
        Ok(FlowFreeInstance::new(f.height, f.width, pairs)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TilesFile {
    features: Vec<String>,
    tiles: Vec<Vec<String>>,
}

impl FileFormat for TilesInstance {
    fn to_json(&self) -> Value {
        wire(&TilesFile {
            features: self.features().to_vec(),
            tiles: (0..self.tiles().len()).map(|t| self.tile_names(t)).collect(),
        })
    }

    fn from_json(value: Value) -> Result<Self, IoError> {
        let f: TilesFile = unwire(value)?;
        Ok(TilesInstance::new(f.features, f.tiles)?)
    }
}

/// Tile indices, starting tile first. 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TilesMoves(pub Vec<usize>);

impl FileFormat for TilesMoves {
    fn to_json(&self) -> Value {
        wire(&self.0)
    }

    fn from_json(value: Value) -> Result<Self, IoError> {
        Ok(TilesMoves(unwire(value)?))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse, to_canonical};
    use super::*;
    use crate::letterboxed::fixtures;
    use crate::pips::solve_pips;
    use crate::strands::{export_certificate, generate::random_planted, solve_strands};
    use crate::tiles::generate::random_instance;
    use proptest::prelude::*;

    fn identity<T: FileFormat + PartialEq + std::fmt::Debug>(x: &T) {
        let text = to_canonical(x);
        let back: T = parse(&text).unwrap();
        assert_eq!(&back, x);
        assert_eq!(to_canonical(&back), text);
    }

    #[test]
    fn letterboxed_files() {
        let p = fixtures::chain();
        identity(&p);
        let sol = LetterBoxedSolution { words: vec![0, 1], side_trace: vec![0, 1, 0, 2] };
        identity(&sol);
        assert!(to_canonical(&sol).contains("\"sideTrace\""));
        let bad = r#"{"words": [0], "sideTrace": [0, 1]}"#;
        assert!(matches!(parse::<LetterBoxedSolution>(bad), Err(IoError::Invalid(_))));
    }

    #[test]
    fn multi_character_symbols_use_lists() {
        let text = r##"{"alphabet": ["ab", "c"], "dictionary": [["ab", "c"]], "sides": [["ab"], ["c"]]}"##;
        let p: LetterBoxedPuzzle = parse(text).unwrap();
        identity(&p);
        assert!(to_canonical(&p).contains("\"ab\",\n"));
    }

    #[test]
    fn pips_files() {
        let text = r#"{
            "cells": [[0,0],[1,0],[0,1],[1,1]],
            "dominoes": [[1,2],[0,0]],
            "constraints": [{"region": [[0,0],[1,0]], "kind": "sum", "n": 3}, {"region": [[0,1]], "kind": "eq"}]
        }"#;
        let p: PipsPuzzle = parse(text).unwrap();
        identity(&p);
        let sol = solve_pips(&p).found().unwrap();
        identity(&sol);
        let missing = r#"{"cells": [[0,0]], "dominoes": [], "constraints": [{"region": [[0,0]], "kind": "lt"}]}"#;
        assert!(matches!(parse::<PipsPuzzle>(missing), Err(IoError::Invalid(_))));
        let unknown = r#"{"cells": [[0,0]], "dominoes": [], "constraints": [{"region": [[0,0]], "kind": "max"}]}"#;
        assert!(matches!(parse::<PipsPuzzle>(unknown), Err(IoError::Invalid(_))));
    }

    #[test]
    fn strands_solution_forms() {
        let inst = random_planted(3, 3, 2, 3, 4);
        identity(&inst);
        let part = solve_strands(&inst, false).found().unwrap();
        let cert = export_certificate(&inst, &part).unwrap();
        let full = StrandsSolutionFile { partition: Some(part.clone()), certificate: Some(cert.clone()) };
        identity(&full);
        let only_cert = StrandsSolutionFile { partition: None, certificate: Some(cert) };
        identity(&only_cert);
        let rebuilt = parse::<StrandsSolutionFile>(&to_canonical(&only_cert)).unwrap().resolve(&inst).unwrap();
        assert_eq!(rebuilt, part.canonical());
        let bare = to_canonical(&StrandsSolutionFile::from_partition(part));
        assert!(bare.contains("\"pieces\"") && !bare.contains("\"v1\""));
        let list = r#"[{"word": 0, "cells": [[0, 0]]}]"#;
        let parsed: StrandsSolutionFile = parse(list).unwrap();
        assert_eq!(parsed.partition.unwrap().pieces[0].cells, [(0, 0)]);
        assert!(parse::<StrandsSolutionFile>("{}").is_err());
    }

    #[test]
    fn flowfree_and_tiles() {
        let text = r#"{"width": 3, "height": 2, "pairs": [{"color": "R", "a": [0, 0], "b": [1, 2]}]}"#;
        let f: FlowFreeInstance = parse(text).unwrap();
        assert_eq!((f.rows(), f.cols()), (2, 3));
        identity(&f);
        identity(&TilesMoves(vec![0, 2, 1]));
        assert_eq!(to_canonical(&TilesMoves(vec![])), "[]\n");
    }

    proptest! {
        #[test]
        fn tiles_round_trip(seed in any::<u64>()) {
            identity(&random_instance(6, 5, seed));
        }

        #[test]
        fn strands_round_trip(seed in any::<u64>()) {
            identity(&random_planted(3, 3, 3, 3, seed));
        }
    }
}
