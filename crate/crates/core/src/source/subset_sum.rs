use super::{OracleOutcome, SourceError, ORACLE_GUARD};

/// Subset-Sum over a multiset of positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSumInstance {
    elements: Vec<u64>,
    target: u64,
}

impl SubsetSumInstance {
    pub fn new(elements: Vec<u64>, target: u64) -> Result<Self, SourceError> {
        if elements.contains(&0) {
            return Err(SourceError::NonPositiveElement);
        }
        Ok(SubsetSumInstance { elements, target })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn target(&self) -> u64 {
        self.target
    }
}

/// First subset (by bitmask over element indices) hitting the target.
pub fn oracle_subset_sum(inst: &SubsetSumInstance) -> OracleOutcome<Vec<usize>> {
    let n = inst.elements.len();
    if n > 63 || 1u64 << n > ORACLE_GUARD {
        return OracleOutcome::TooLarge;
    }
    for mask in 0..1u64 << n {
        let sum: u64 = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| inst.elements[i])
            .sum();
        if sum == inst.target {
            return OracleOutcome::Found((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    OracleOutcome::NotFound
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let s = |e: &[u64], t| oracle_subset_sum(&SubsetSumInstance::new(e.to_vec(), t).unwrap());
        assert_eq!(s(&[2, 3, 5], 4), OracleOutcome::NotFound);
        assert_eq!(s(&[2, 3, 5], 0), OracleOutcome::Found(vec![]));
        assert_eq!(s(&[1], 1), OracleOutcome::Found(vec![0]));
    }

    #[test]
    fn zero_element_rejected() {
        assert_eq!(SubsetSumInstance::new(vec![1, 0], 1), Err(SourceError::NonPositiveElement));
    }

    proptest! {
        #[test]
        fn witness_sums_to_target(e in prop::collection::vec(1u64..20, 0..8), t in 0u64..60) {
            let inst = SubsetSumInstance::new(e.clone(), t).unwrap();
            match oracle_subset_sum(&inst) {
                OracleOutcome::Found(idx) => {
                    prop_assert_eq!(idx.iter().map(|&i| e[i]).sum::<u64>(), t);
                }
                OracleOutcome::NotFound => {
                    // Independent check: reachable sums by dynamic programming.
                    let mut reach = [false; 200];
                    reach[0] = true;
                    for &x in &e {
                        for s in (x as usize..200).rev() {
                            reach[s] |= reach[s - x as usize];
                        }
                    }
                    prop_assert!(!reach[t as usize]);
                }
                OracleOutcome::TooLarge => prop_assert!(false),
            }
        }
    }
}
