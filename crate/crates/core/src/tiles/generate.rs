//! Exhaustive and seeded Tiles instance families.

use super::TilesInstance;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every multiset of at most `max_tiles` tiles over features
/// `f0..f{max_features-1}`, each listed once as a non-decreasing mask
/// sequence.
pub fn all_instances(max_tiles: usize, max_features: u32) -> Vec<TilesInstance> {
    fn extend(prefix: &mut Vec<u32>, min: u32, top: u32, left: usize, out: &mut Vec<TilesInstance>) {
        out.push(TilesInstance::from_masks(prefix));
        if left == 0 {
            return;
        }
        for m in min..top {
            prefix.push(m);
            extend(prefix, m, top, left - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 0, 1 << max_features, max_tiles, &mut out);
    out
}

/// 1..=`max_tiles` tiles, each a uniform subset of 1..=`max_features`
/// features.
pub fn random_instance(max_tiles: usize, max_features: u32, seed: u64) -> TilesInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_tiles);
    let m = rng.gen_range(1..=max_features);
    let masks: Vec<u32> = (0..n).map(|_| rng.gen_range(0..1u32 << m)).collect();
    TilesInstance::from_masks(&masks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_multisets() {
        // Multisets of size <= 2 from 4 masks: 1 + 4 + 10.
        assert_eq!(all_instances(2, 2).len(), 15);
        assert_eq!(all_instances(4, 3).len(), 1 + 8 + 36 + 120 + 330);
    }

    #[test]
    fn random_is_seeded() {
        assert_eq!(random_instance(6, 5, 3), random_instance(6, 5, 3));
        assert!(random_instance(6, 5, 3).tiles().len() <= 6);
    }
}
