use super::embedding::{validate_embedding, Embedding};
use super::{check_formula, nth_assignment, resolve_clauses, OracleOutcome, SourceError, ORACLE_GUARD};

/// Positive planar 1-in-3-SAT. Variable order is the order along the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneInThreeInstance {
    variables: Vec<String>,
    clauses: Vec<[usize; 3]>,
    embedding: Embedding,
}

impl OneInThreeInstance {
    /// Validates the clauses and the embedding.
    pub fn new(
        variables: Vec<String>,
        clauses: Vec<[usize; 3]>,
        embedding: Embedding,
    ) -> Result<Self, SourceError> {
        let inst = Self::new_unchecked(variables, clauses, embedding)?;
        if let Some(v) = validate_embedding(&inst).into_iter().next() {
            return Err(SourceError::Embedding(v));
        }
        Ok(inst)
    }

    /// Clause checks only; the embedding may be invalid. Useful for feeding
    /// broken embeddings to [`validate_embedding`].
    pub fn new_unchecked(
        variables: Vec<String>,
        clauses: Vec<[usize; 3]>,
        embedding: Embedding,
    ) -> Result<Self, SourceError> {
        check_formula(&variables, &clauses)?;
        if embedding.clauses.len() != clauses.len() {
            return Err(SourceError::EmbeddingArity {
                expected: clauses.len(),
                found: embedding.clauses.len(),
            });
        }
        Ok(OneInThreeInstance {
            variables,
            clauses,
            embedding,
        })
    }

    /// Computes an embedding with [`super::embed`].
    pub fn with_embedding(variables: Vec<String>, clauses: Vec<[usize; 3]>) -> Result<Self, SourceError> {
        check_formula(&variables, &clauses)?;
        let embedding = super::embed(variables.len(), &clauses)?;
        Self::new(variables, clauses, embedding)
    }

    pub fn from_names(
        variables: Vec<String>,
        clauses: &[[String; 3]],
        embedding: Embedding,
    ) -> Result<Self, SourceError> {
        let idx = resolve_clauses(&variables, clauses)?;
        Self::new(variables, idx, embedding)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    /// Clause variables sorted by line order.
    pub fn sorted_clause(&self, c: usize) -> [usize; 3] {
        let mut v = self.clauses[c];
        v.sort_unstable();
        v
    }

    /// Number of clauses containing each variable.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut deg = vec![0; self.variables.len()];
        for c in &self.clauses {
            for &v in c {
                deg[v] += 1;
            }
        }
        deg
    }
}

pub fn satisfies_1in3(inst: &OneInThreeInstance, assignment: &[bool]) -> bool {
    assignment.len() == inst.variables.len()
        && inst
            .clauses
            .iter()
            .all(|c| c.iter().filter(|&&v| assignment[v]).count() == 1)
}

/// First 1-in-3-satisfying assignment in lexicographic order.
pub fn oracle_1in3(inst: &OneInThreeInstance) -> OracleOutcome<Vec<bool>> {
    let n = inst.variables.len();
    if n > 63 || 1u64 << n > ORACLE_GUARD {
        return OracleOutcome::TooLarge;
    }
    for mask in 0..1u64 << n {
        let a = nth_assignment(n, mask);
        if satisfies_1in3(inst, &a) {
            return OracleOutcome::Found(a);
        }
    }
    OracleOutcome::NotFound
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn single_clause() {
        let inst = OneInThreeInstance::with_embedding(names(3), vec![[0, 1, 2]]).unwrap();
        assert_eq!(oracle_1in3(&inst), OracleOutcome::Found(vec![false, false, true]));
    }

    #[test]
    fn shared_pair_forces_the_rest() {
        // (a,b,c) and (a,b,d): c = d in every solution.
        let inst = OneInThreeInstance::with_embedding(names(4), vec![[0, 1, 2], [0, 1, 3]]).unwrap();
        for mask in 0..16u64 {
            let a = nth_assignment(4, mask);
            if satisfies_1in3(&inst, &a) {
                assert_eq!(a[2], a[3]);
            }
        }
        assert!(oracle_1in3(&inst).found().is_some());
    }
}
