use super::{check_formula, nth_assignment, resolve_clauses, OracleOutcome, SourceError, ORACLE_GUARD};

/// Positive NAE-3SAT: every clause needs a true and a false variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nae3SatInstance {
    variables: Vec<String>,
    clauses: Vec<[usize; 3]>,
}

impl Nae3SatInstance {
    pub fn new(variables: Vec<String>, clauses: Vec<[usize; 3]>) -> Result<Self, SourceError> {
        check_formula(&variables, &clauses)?;
        Ok(Nae3SatInstance { variables, clauses })
    }

    /// Builds from clauses given by variable name.
    pub fn from_names(variables: Vec<String>, clauses: &[[String; 3]]) -> Result<Self, SourceError> {
        let idx = resolve_clauses(&variables, clauses)?;
        Self::new(variables, idx)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// Number of clauses containing each variable.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut eta = vec![0; self.variables.len()];
        for c in &self.clauses {
            for &v in c {
                eta[v] += 1;
            }
        }
        eta
    }
}

pub fn satisfies_nae(inst: &Nae3SatInstance, assignment: &[bool]) -> bool {
    assignment.len() == inst.variables.len()
        && inst.clauses.iter().all(|c| {
            let t = c.iter().filter(|&&v| assignment[v]).count();
            t == 1 || t == 2
        })
}

/// First NAE-satisfying assignment in lexicographic order.
pub fn oracle_nae(inst: &Nae3SatInstance) -> OracleOutcome<Vec<bool>> {
    let n = inst.variables.len();
    if n > 63 || 1u64 << n > ORACLE_GUARD {
        return OracleOutcome::TooLarge;
    }
    for mask in 0..1u64 << n {
        let a = nth_assignment(n, mask);
        if satisfies_nae(inst, &a) {
            return OracleOutcome::Found(a);
        }
    }
    OracleOutcome::NotFound
}
