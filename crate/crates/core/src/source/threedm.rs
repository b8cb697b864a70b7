use super::{OracleOutcome, SourceError, ORACLE_GUARD};

/// 3D matching over X = Y = Z = {0, …, n−1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeDmInstance {
    n: usize,
    triples: Vec<[usize; 3]>,
}

impl ThreeDmInstance {
    /// An empty triple list is allowed; such instances have no matching.
    pub fn new(n: usize, triples: Vec<[usize; 3]>) -> Result<Self, SourceError> {
        if n == 0 {
            return Err(SourceError::EmptyGround);
        }
        for (t, triple) in triples.iter().enumerate() {
            if let Some(&element) = triple.iter().find(|&&e| e >= n) {
                return Err(SourceError::ElementOutOfRange { triple: t, element, n });
            }
        }
        Ok(ThreeDmInstance { n, triples })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }
}

/// Whether the chosen triple indices cover every element exactly once.
pub fn is_perfect_matching(inst: &ThreeDmInstance, chosen: &[usize]) -> bool {
    if chosen.len() != inst.n || chosen.iter().any(|&i| i >= inst.triples.len()) {
        return false;
    }
    let mut used = vec![[false; 3]; inst.n];
    for &i in chosen {
        for (axis, &e) in inst.triples[i].iter().enumerate() {
            if used[e][axis] {
                return false;
            }
            used[e][axis] = true;
        }
    }
    true
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    r
}

/// First perfect matching among size-n subsets of the triples, in
/// lexicographic order of index sets.
pub fn oracle_3dm(inst: &ThreeDmInstance) -> OracleOutcome<Vec<usize>> {
    let m = inst.triples.len();
    let n = inst.n;
    if binomial(m, n) > ORACLE_GUARD {
        return OracleOutcome::TooLarge;
    }
    if n > m {
        return OracleOutcome::NotFound;
    }
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        if is_perfect_matching(inst, &idx) {
            return OracleOutcome::Found(idx);
        }
        // Next combination.
        let mut i = n;
        loop {
            if i == 0 {
                return OracleOutcome::NotFound;
            }
            i -= 1;
            if idx[i] < m - n + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..n {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_triple() {
        let inst = ThreeDmInstance::new(1, vec![[0, 0, 0]]).unwrap();
        assert_eq!(oracle_3dm(&inst), OracleOutcome::Found(vec![0]));
    }

    #[test]
    fn no_matching_example() {
        let inst = ThreeDmInstance::new(2, vec![[0, 0, 0], [0, 1, 1], [1, 1, 0]]).unwrap();
        assert_eq!(oracle_3dm(&inst), OracleOutcome::NotFound);
    }

    #[test]
    fn disjoint_pair_matches() {
        let inst = ThreeDmInstance::new(2, vec![[0, 0, 0], [1, 1, 1]]).unwrap();
        assert_eq!(oracle_3dm(&inst), OracleOutcome::Found(vec![0, 1]));
    }

    #[test]
    fn out_of_range_element() {
        assert!(matches!(
            ThreeDmInstance::new(2, vec![[0, 2, 0]]),
            Err(SourceError::ElementOutOfRange { triple: 0, element: 2, n: 2 })
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 2), 28);
        assert_eq!(binomial(3, 5), 0);
    }
}
