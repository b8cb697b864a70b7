//! Source problems for the reductions: positive NAE-3SAT, positive planar
//! 1-in-3-SAT with a rectilinear embedding, 3D matching and Subset-Sum.
//! Each comes with a verifier and an exhaustive oracle.

mod embedding;
mod generate;
mod nae;
mod one_in_three;
mod subset_sum;
mod threedm;

pub use embedding::{embed, validate_embedding, ClauseEmbedding, Embedding, EmbeddingViolation, Side};
pub use generate::{
    generate_random, random_1in3, random_3dm, random_nae, random_subset_sum, GenerateKind,
    GenerateParams,
};
pub use nae::{oracle_nae, satisfies_nae, Nae3SatInstance};
pub use one_in_three::{oracle_1in3, satisfies_1in3, OneInThreeInstance};
pub use subset_sum::{oracle_subset_sum, SubsetSumInstance};
pub use threedm::{is_perfect_matching, oracle_3dm, ThreeDmInstance};

use thiserror::Error;

/// Enumeration steps an oracle may take before reporting `TooLarge`.
pub const ORACLE_GUARD: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SourceError {
    #[error("variable {0:?} is declared twice")]
    DuplicateVariable(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("variable index {0} is out of range")]
    VariableOutOfRange(usize),
    #[error("clause {0} repeats a variable")]
    RepeatedVariable(usize),
    #[error("clause {index} repeats clause {first}")]
    DuplicateClause { index: usize, first: usize },
    #[error("clause {clause} contains the negated literal {literal:?}; only positive literals are allowed")]
    NegatedLiteral { clause: usize, literal: String },
    #[error("triple {triple} references element {element} outside 0..{n}")]
    ElementOutOfRange { triple: usize, element: usize, n: usize },
    #[error("3DM instances need n >= 1")]
    EmptyGround,
    #[error("Subset-Sum elements must be positive")]
    NonPositiveElement,
    #[error("embedding has {found} clause entries for {expected} clauses")]
    EmbeddingArity { expected: usize, found: usize },
    #[error("invalid embedding: {0}")]
    Embedding(EmbeddingViolation),
    #[error("no rectilinear embedding found for this formula")]
    NoEmbedding,
    #[error("infeasible generator parameters: {0}")]
    Infeasible(String),
}

/// Answer of a size-guarded exhaustive oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome<T> {
    Found(T),
    NotFound,
    /// The enumeration would exceed [`ORACLE_GUARD`] steps.
    TooLarge,
}

impl<T> OracleOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            OracleOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    /// `Some(true)` on a witness, `Some(false)` on a completed negative search.
    pub fn decided(&self) -> Option<bool> {
        match self {
            OracleOutcome::Found(_) => Some(true),
            OracleOutcome::NotFound => Some(false),
            OracleOutcome::TooLarge => None,
        }
    }
}

/// Any source instance, tagged by kind in files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceInstance {
    Nae(Nae3SatInstance),
    OneInThree(OneInThreeInstance),
    ThreeDm(ThreeDmInstance),
    SubsetSum(SubsetSumInstance),
}

/// Resolves clause literals by name, rejecting negations.
pub(crate) fn resolve_clauses(
    variables: &[String],
    clauses: &[[String; 3]],
) -> Result<Vec<[usize; 3]>, SourceError> {
    let mut out = Vec::with_capacity(clauses.len());
    for (ci, clause) in clauses.iter().enumerate() {
        let mut idx = [0usize; 3];
        for (slot, lit) in clause.iter().enumerate() {
            if let Some(pos) = variables.iter().position(|v| v == lit) {
                idx[slot] = pos;
            } else if lit.starts_with(['-', '!', '~', '¬']) {
                return Err(SourceError::NegatedLiteral {
                    clause: ci,
                    literal: lit.clone(),
                });
            } else {
                return Err(SourceError::UnknownVariable(lit.clone()));
            }
        }
        out.push(idx);
    }
    Ok(out)
}

/// Shared clause checks for the two SAT variants.
pub(crate) fn check_formula(variables: &[String], clauses: &[[usize; 3]]) -> Result<(), SourceError> {
    for (i, v) in variables.iter().enumerate() {
        if variables[..i].contains(v) {
            return Err(SourceError::DuplicateVariable(v.clone()));
        }
    }
    for (ci, c) in clauses.iter().enumerate() {
        if let Some(&bad) = c.iter().find(|&&v| v >= variables.len()) {
            return Err(SourceError::VariableOutOfRange(bad));
        }
        if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
            return Err(SourceError::RepeatedVariable(ci));
        }
        let mut key = *c;
        key.sort_unstable();
        if let Some(first) = clauses[..ci].iter().position(|d| {
            let mut d = *d;
            d.sort_unstable();
            d == key
        }) {
            return Err(SourceError::DuplicateClause { index: ci, first });
        }
    }
    Ok(())
}

/// Assignment number `mask` in lexicographic order: variable 0 is the most
/// significant position and false sorts before true.
pub(crate) fn nth_assignment(n: usize, mask: u64) -> Vec<bool> {
    (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect()
}
