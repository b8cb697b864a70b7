//! Seeded random instances. Same parameters and seed, same instance.

use super::{
    Nae3SatInstance, OneInThreeInstance, SourceError, SourceInstance, SubsetSumInstance,
    ThreeDmInstance,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenerateKind {
    Nae,
    OneInThree,
    ThreeDm,
    SubsetSum,
}

/// Size parameters; each kind reads the fields it needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenerateParams {
    /// Variables (SAT kinds), n (3DM) or element count (Subset-Sum).
    pub size: usize,
    /// Clauses (SAT kinds), triples (3DM) or maximum element (Subset-Sum).
    pub count: usize,
}

pub fn generate_random(
    kind: GenerateKind,
    params: GenerateParams,
    seed: u64,
) -> Result<SourceInstance, SourceError> {
    let GenerateParams { size, count } = params;
    Ok(match kind {
        GenerateKind::Nae => SourceInstance::Nae(random_nae(size, count, seed)?),
        GenerateKind::OneInThree => SourceInstance::OneInThree(random_1in3(size, count, seed)?),
        GenerateKind::ThreeDm => SourceInstance::ThreeDm(random_3dm(size, count, seed)?),
        GenerateKind::SubsetSum => {
            SourceInstance::SubsetSum(random_subset_sum(size, count as u64, seed)?)
        }
    })
}

fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// `count` distinct clauses, each with its variables sorted.
fn random_clauses(rng: &mut ChaCha8Rng, n: usize, count: usize) -> Vec<[usize; 3]> {
    let mut out: Vec<[usize; 3]> = Vec::with_capacity(count);
    while out.len() < count {
        let picked = rand::seq::index::sample(rng, n, 3).into_vec();
        let mut c = [picked[0], picked[1], picked[2]];
        c.sort_unstable();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn check_clause_count(vars: usize, clauses: usize) -> Result<(), SourceError> {
    let available = if vars < 3 { 0 } else { vars * (vars - 1) * (vars - 2) / 6 };
    if clauses == 0 || clauses > available {
        return Err(SourceError::Infeasible(format!(
            "{clauses} distinct clauses over {vars} variables"
        )));
    }
    Ok(())
}

/// Formula in which every variable occurs at least once.
pub fn random_nae(vars: usize, clauses: usize, seed: u64) -> Result<Nae3SatInstance, SourceError> {
    check_clause_count(vars, clauses)?;
    if 3 * clauses < vars {
        return Err(SourceError::Infeasible(format!(
            "{vars} variables cannot all appear in {clauses} clauses"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let cs = random_clauses(&mut rng, vars, clauses);
        let mut used = vec![false; vars];
        cs.iter().flatten().for_each(|&v| used[v] = true);
        if used.iter().all(|&u| u) {
            return Nae3SatInstance::new(var_names(vars), cs);
        }
    }
    Err(SourceError::Infeasible("could not cover every variable".into()))
}

/// Random formula with a rectilinear embedding, resampled until one exists.
pub fn random_1in3(vars: usize, clauses: usize, seed: u64) -> Result<OneInThreeInstance, SourceError> {
    check_clause_count(vars, clauses)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let cs = random_clauses(&mut rng, vars, clauses);
        match OneInThreeInstance::with_embedding(var_names(vars), cs) {
            Ok(inst) => return Ok(inst),
            Err(SourceError::NoEmbedding) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(SourceError::Infeasible("no embeddable formula found".into()))
}

/// `count` distinct triples over ground sets of size `n`.
pub fn random_3dm(n: usize, count: usize, seed: u64) -> Result<ThreeDmInstance, SourceError> {
    if n == 0 || count > n * n * n {
        return Err(SourceError::Infeasible(format!("{count} triples with n={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all: Vec<[usize; 3]> = (0..n * n * n)
        .map(|i| [i / (n * n), i / n % n, i % n])
        .collect();
    all.shuffle(&mut rng);
    all.truncate(count);
    all.sort_unstable();
    ThreeDmInstance::new(n, all)
}

/// `len` elements in 1..=max and a target in 0..=sum.
pub fn random_subset_sum(len: usize, max: u64, seed: u64) -> Result<SubsetSumInstance, SourceError> {
    if max == 0 {
        return Err(SourceError::Infeasible("elements need max >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elements: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=max)).collect();
    let total: u64 = elements.iter().sum();
    let target = rng.gen_range(0..=total);
    SubsetSumInstance::new(elements, target)
}

#[cfg(test)]
mod tests {
    use super::super::validate_embedding;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn deterministic() {
        let p = GenerateParams { size: 5, count: 3 };
        for kind in [GenerateKind::Nae, GenerateKind::OneInThree, GenerateKind::ThreeDm, GenerateKind::SubsetSum] {
            assert_eq!(generate_random(kind, p, 7).unwrap(), generate_random(kind, p, 7).unwrap());
        }
    }

    #[test]
    fn infeasible_parameters() {
        assert!(random_nae(10, 2, 0).is_err());
        assert!(random_3dm(2, 9, 0).is_err());
        assert!(random_1in3(3, 2, 0).is_err());
    }

    proptest! {
        #[test]
        fn generated_embeddings_validate(seed in any::<u64>(), vars in 5usize..8, clauses in 1usize..5) {
            let inst = random_1in3(vars, clauses, seed).unwrap();
            prop_assert!(validate_embedding(&inst).is_empty());
        }

        #[test]
        fn nae_uses_every_variable(seed in any::<u64>()) {
            let inst = random_nae(4, 3, seed).unwrap();
            prop_assert!(inst.occurrences().iter().all(|&e| e > 0));
        }
    }
}
