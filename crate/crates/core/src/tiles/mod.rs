//! Tiles: a multiset of feature sets, where moving between two tiles
//! deletes the features they still share.

mod brute;
mod euler;
pub mod generate;
mod play;

pub use brute::{brute_force_no_teleport, brute_force_solvable, TilesOracleError};
pub use euler::{no_teleport_solvable, trail_of_moves, StructureGraph, TrailVertex};
pub use play::{solve_greedy, verify_moves, MoveReport, Step, TilesMoveError};

use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilesError {
    #[error("feature {0:?} is declared twice")]
    DuplicateFeature(String),
    #[error("tile {tile} names undeclared feature {feature:?}")]
    UnknownFeature { tile: usize, feature: String },
    #[error("tile {tile} lists feature {feature:?} twice")]
    RepeatedFeature { tile: usize, feature: String },
    #[error("feature {0:?} appears on no tile")]
    OrphanFeature(String),
    #[error("sharing number needs at least two tiles")]
    TooFewTiles,
    #[error("no-teleport characterisation needs sharing number 1, got {0}")]
    SharingNumber(usize),
}

/// Features are interned; each tile is a sorted list of feature indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilesInstance {
    features: Vec<String>,
    tiles: Vec<Vec<usize>>,
}

impl TilesInstance {
    pub fn new(features: Vec<String>, tiles: Vec<Vec<String>>) -> Result<Self, TilesError> {
        let mut index = HashMap::new();
        for (i, f) in features.iter().enumerate() {
            if index.insert(f.as_str(), i).is_some() {
                return Err(TilesError::DuplicateFeature(f.clone()));
            }
        }
        let tiles = tiles
            .iter()
            .enumerate()
            .map(|(t, names)| {
                names
                    .iter()
                    .map(|n| {
                        index
                            .get(n.as_str())
                            .copied()
                            .ok_or_else(|| TilesError::UnknownFeature { tile: t, feature: n.clone() })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_indices(features, tiles)
    }

    pub fn from_indices(features: Vec<String>, mut tiles: Vec<Vec<usize>>) -> Result<Self, TilesError> {
        let mut seen = vec![false; features.len()];
        for (t, tile) in tiles.iter_mut().enumerate() {
            tile.sort_unstable();
            for w in tile.windows(2) {
                if w[0] == w[1] {
                    return Err(TilesError::RepeatedFeature { tile: t, feature: features[w[0]].clone() });
                }
            }
            for &f in tile.iter() {
                match seen.get_mut(f) {
                    Some(s) => *s = true,
                    None => return Err(TilesError::UnknownFeature { tile: t, feature: format!("#{f}") }),
                }
            }
        }
        if let Some(f) = seen.iter().position(|&s| !s) {
            return Err(TilesError::OrphanFeature(features[f].clone()));
        }
        let mut index = HashMap::new();
        for f in &features {
            if index.insert(f, ()).is_some() {
                return Err(TilesError::DuplicateFeature(f.clone()));
            }
        }
        Ok(TilesInstance { features, tiles })
    }

    /// Tiles given as bit masks over features `f0, f1, ...`; features on
    /// no tile are dropped and the rest renumbered.
    pub fn from_masks(masks: &[u32]) -> Self {
        let union = masks.iter().fold(0, |a, &m| a | m);
        let kept: Vec<u32> = (0..32).filter(|b| union >> b & 1 == 1).collect();
        let features = kept.iter().map(|b| format!("f{b}")).collect();
        let tiles = masks
            .iter()
            .map(|&m| kept.iter().enumerate().filter(|&(_, &b)| m >> b & 1 == 1).map(|(i, _)| i).collect())
            .collect();
        Self::from_indices(features, tiles).expect("masks give a valid instance")
    }

    pub fn features(&self) -> &[String] {
        &self.features
    }

    pub fn tiles(&self) -> &[Vec<usize>] {
        &self.tiles
    }

    pub fn tile_names(&self, t: usize) -> Vec<String> {
        self.tiles[t].iter().map(|&f| self.features[f].clone()).collect()
    }

    /// Sum of tile sizes.
    pub fn size(&self) -> usize {
        self.tiles.iter().map(Vec::len).sum()
    }

    /// Number of tiles holding each feature.
    pub fn feature_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.features.len()];
        for &f in self.tiles.iter().flatten() {
            counts[f] += 1;
        }
        counts
    }
}

/// Every feature on an even number of tiles.
pub fn is_solvable(inst: &TilesInstance) -> bool {
    inst.feature_counts().iter().all(|c| c % 2 == 0)
}

fn shared(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Largest intersection between two distinct tiles.
pub fn sharing_number(inst: &TilesInstance) -> Result<usize, TilesError> {
    let t = &inst.tiles;
    if t.len() < 2 {
        return Err(TilesError::TooFewTiles);
    }
    let mut best = 0;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            best = best.max(shared(&t[i], &t[j]));
        }
    }
    Ok(best)
}


#[cfg(test)]
mod tests {
    use super::fixtures::tiles;
    use super::*;

    #[test]
    fn parity() {
        assert!(is_solvable(&tiles(&["f", "f"])));
        assert!(!is_solvable(&tiles(&["f"])));
        assert!(is_solvable(&tiles(&["ab", "ac", "bc", ""])));
        assert!(is_solvable(&tiles(&[])));
    }

    #[test]
    fn sharing() {
        assert_eq!(sharing_number(&tiles(&["a", "ab", "b"])), Ok(1));
        assert_eq!(sharing_number(&tiles(&["ab", "ab"])), Ok(2));
        assert_eq!(sharing_number(&tiles(&["a", "b", "c"])), Ok(0));
        assert_eq!(sharing_number(&tiles(&["a"])), Err(TilesError::TooFewTiles));
    }

    #[test]
    fn validation() {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(
            TilesInstance::new(s(&["a", "b"]), vec![s(&["a"])]),
            Err(TilesError::OrphanFeature("b".into()))
        );
        assert_eq!(
            TilesInstance::new(s(&["a"]), vec![s(&["a", "a"])]),
            Err(TilesError::RepeatedFeature { tile: 0, feature: "a".into() })
        );
        assert_eq!(
            TilesInstance::new(s(&["a", "a"]), vec![s(&["a"])]),
            Err(TilesError::DuplicateFeature("a".into()))
        );
        assert_eq!(
            TilesInstance::new(s(&["a"]), vec![s(&["z"])]),
            Err(TilesError::UnknownFeature { tile: 0, feature: "z".into() })
        );
    }

    #[test]
    fn masks_drop_unused_bits() {
        let inst = TilesInstance::from_masks(&[0b101, 0b100, 0]);
        assert_eq!(inst.features(), ["f0", "f2"]);
        assert_eq!(inst.tiles(), [vec![0, 1], vec![1], vec![]]);
        assert_eq!(inst.size(), 3);
    }
}
