//! JSON file formats. Every format re-serializes canonically: keys sorted,
//! two-space indentation, trailing newline.

mod layout;
mod puzzles;
mod source;

pub use layout::Layout;
pub use puzzles::{StrandsSolutionFile, TilesMoves};
pub use source::SourceSolution;

use crate::letterboxed::PuzzleError;
use crate::pips::PipsError;
use crate::source::SourceError;
use crate::strands::flowfree::FlowFreeError;
use crate::strands::{CertificateError, StrandsError};
use crate::tiles::TilesError;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("malformed file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    LetterBoxed(#[from] PuzzleError),
    #[error(transparent)]
    Pips(#[from] PipsError),
    #[error(transparent)]
    Strands(#[from] StrandsError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
    #[error(transparent)]
    FlowFree(#[from] FlowFreeError),
    #[error(transparent)]
    Tiles(#[from] TilesError),
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error("{0}")]
    Invalid(String),
}

/// A type with a file representation.
pub trait FileFormat: Sized {
    fn to_json(&self) -> Value;
    fn from_json(value: Value) -> Result<Self, IoError>;
}

pub fn to_canonical<T: FileFormat>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(&x.to_json()).expect("values always serialize");
    s.push('\n');
    s
}

pub fn parse<T: FileFormat>(text: &str) -> Result<T, IoError> {
    T::from_json(serde_json::from_str(text)?)
}

pub fn load<T: FileFormat>(path: &Path) -> Result<T, IoError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_path_buf(), source })?;
    parse(&text)
}

pub fn save<T: FileFormat>(path: &Path, x: &T) -> Result<(), IoError> {
    std::fs::write(path, to_canonical(x)).map_err(|source| IoError::Write { path: path.to_path_buf(), source })
}

fn wire<W: Serialize>(w: &W) -> Value {
    serde_json::to_value(w).expect("wire structs always serialize")
}

fn unwire<W: DeserializeOwned>(v: Value) -> Result<W, IoError> {
    Ok(serde_json::from_value(v)?)
}

/// A word or grid row: a plain string when every symbol is one character,
/// otherwise a list of symbol names.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum Symbols {
    Text(String),
    List(Vec<String>),
}

impl Symbols {
    fn encode(names: Vec<String>, compact: bool) -> Self {
        if compact {
            Symbols::Text(names.concat())
        } else {
            Symbols::List(names)
        }
    }

    fn decode(self) -> Vec<String> {
        match self {
            Symbols::Text(s) => s.chars().map(String::from).collect(),
            Symbols::List(v) => v,
        }
    }
}

fn compact(alphabet: &[String]) -> bool {
    alphabet.iter().all(|s| s.chars().count() == 1)
}
