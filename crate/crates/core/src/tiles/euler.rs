//! Structure graph and the Eulerian test for teleport-free play.

use super::{sharing_number, TilesError, TilesInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TrailVertex {
    Tile(usize),
    Feature(usize),
}

/// Bipartite graph with an edge `{tile, feature}` per membership.
/// Tiles are vertices `0..n`, features `n..n+m`.
#[derive(Debug, Clone)]
pub struct StructureGraph {
    tiles: usize,
    features: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl StructureGraph {
    pub fn new(inst: &TilesInstance) -> Self {
        let (n, m) = (inst.tiles().len(), inst.features().len());
        let mut edges = Vec::with_capacity(inst.size());
        let mut adj = vec![Vec::new(); n + m];
        for (t, tile) in inst.tiles().iter().enumerate() {
            for &f in tile {
                let e = edges.len();
                edges.push((t, f));
                adj[t].push((n + f, e));
                adj[n + f].push((t, e));
            }
        }
        StructureGraph { tiles: n, features: m, edges, adj }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn tile_degree(&self, t: usize) -> usize {
        self.adj[t].len()
    }

    pub fn feature_degree(&self, f: usize) -> usize {
        self.adj[self.tiles + f].len()
    }

    fn vertex(&self, v: usize) -> TrailVertex {
        if v < self.tiles {
            TrailVertex::Tile(v)
        } else {
            TrailVertex::Feature(v - self.tiles)
        }
    }

    /// Connectivity of the vertices that carry at least one edge.
    pub fn edges_connected(&self) -> bool {
        let Some(start) = (0..self.adj.len()).find(|&v| !self.adj[v].is_empty()) else {
            return true;
        };
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &(u, _) in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        (0..self.adj.len()).all(|v| seen[v] || self.adj[v].is_empty())
    }

    /// Tile-to-tile Eulerian trail, if the degree and connectivity
    /// conditions hold.
    pub fn euler_trail(&self) -> Option<Vec<TrailVertex>> {
        if self.edges.is_empty() || !self.edges_connected() {
            return None;
        }
        if (0..self.features).any(|f| self.feature_degree(f) % 2 == 1) {
            return None;
        }
        let odd: Vec<usize> = (0..self.tiles).filter(|&t| self.tile_degree(t) % 2 == 1).collect();
        if odd.len() > 2 {
            return None;
        }
        let start = odd.first().copied().or_else(|| (0..self.tiles).find(|&t| self.tile_degree(t) > 0))?;
        let mut used = vec![false; self.edges.len()];
        let mut next = vec![0; self.adj.len()];
        let mut stack = vec![start];
        let mut trail = Vec::with_capacity(self.edges.len() + 1);
        while let Some(&v) = stack.last() {
            while next[v] < self.adj[v].len() && used[self.adj[v][next[v]].1] {
                next[v] += 1;
            }
            match self.adj[v].get(next[v]) {
                Some(&(u, e)) => {
                    used[e] = true;
                    stack.push(u);
                }
                None => trail.push(self.vertex(stack.pop().unwrap())),
            }
        }
        trail.reverse();
        Some(trail)
    }
}

/// Decides teleport-free solvability for sharing number 1 and returns a
/// move sequence when one exists.
pub fn no_teleport_solvable(inst: &TilesInstance) -> Result<Option<Vec<usize>>, TilesError> {
    let s = sharing_number(inst)?;
    if s != 1 {
        return Err(TilesError::SharingNumber(s));
    }
    let trail = StructureGraph::new(inst).euler_trail();
    Ok(trail.map(|t| {
        t.into_iter()
            .filter_map(|v| match v {
                TrailVertex::Tile(i) => Some(i),
                TrailVertex::Feature(_) => None,
            })
            .collect()
    }))
}

/// Inverse of dropping the features from a trail: inserts between
/// consecutive tiles their single common feature. `None` if some pair
/// shares zero or several features.
pub fn trail_of_moves(inst: &TilesInstance, moves: &[usize]) -> Option<Vec<TrailVertex>> {
    let mut out = Vec::with_capacity(2 * moves.len());
    for (i, &t) in moves.iter().enumerate() {
        if i > 0 {
            let prev = &inst.tiles()[moves[i - 1]];
            let common: Vec<usize> = inst.tiles()[t].iter().filter(|f| prev.contains(f)).copied().collect();
            let [f] = common[..] else { return None };
            out.push(TrailVertex::Feature(f));
        }
        out.push(TrailVertex::Tile(t));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::tiles;
    use super::super::verify_moves;
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn path_of_three() {
        let inst = tiles(&["a", "ab", "b"]);
        let moves = no_teleport_solvable(&inst).unwrap().unwrap();
        assert_eq!(moves, [0, 1, 2]);
        let r = verify_moves(&inst, &moves).unwrap();
        assert!(r.all_deleted);
        assert_eq!(r.teleports(), 0);
        assert_eq!(
            trail_of_moves(&inst, &moves).unwrap(),
            [TrailVertex::Tile(0), TrailVertex::Feature(0), TrailVertex::Tile(1), TrailVertex::Feature(1), TrailVertex::Tile(2)]
        );
    }

    #[test]
    fn pair_and_disconnected() {
        assert_eq!(no_teleport_solvable(&tiles(&["a", "a"])), Ok(Some(vec![0, 1])));
        assert_eq!(no_teleport_solvable(&tiles(&["a", "a", "b", "b"])), Ok(None));
    }

    #[test]
    fn circuit_returns_to_start() {
        let inst = tiles(&["ab", "bc", "ca"]);
        let moves = no_teleport_solvable(&inst).unwrap().unwrap();
        assert_eq!(moves.len(), 4);
        assert_eq!(moves.first(), moves.last());
        assert!(verify_moves(&inst, &moves).unwrap().all_deleted);
    }

    #[test]
    fn needs_sharing_one() {
        assert_eq!(no_teleport_solvable(&tiles(&["ab", "ab"])), Err(TilesError::SharingNumber(2)));
        assert_eq!(no_teleport_solvable(&tiles(&["a", "b"])), Err(TilesError::SharingNumber(0)));
        assert_eq!(no_teleport_solvable(&tiles(&["a"])), Err(TilesError::TooFewTiles));
    }

    #[test]
    fn graph_degrees() {
        let inst = tiles(&["ab", "b", ""]);
        let g = StructureGraph::new(&inst);
        assert_eq!(g.edges(), [(0, 0), (0, 1), (1, 1)]);
        assert_eq!((g.tile_degree(0), g.tile_degree(2)), (2, 0));
        assert_eq!((g.feature_degree(0), g.feature_degree(1)), (1, 2));
        assert!(g.edges_connected());
        assert_eq!(g.euler_trail(), None);
    }

    #[test]
    fn trail_uses_each_edge_once() {
        let inst = tiles(&["ab", "bcd", "c", "ad"]);
        let moves = no_teleport_solvable(&inst).unwrap().unwrap();
        let trail = trail_of_moves(&inst, &moves).unwrap();
        let mut seen = HashSet::new();
        for w in trail.windows(2) {
            let e = match (w[0], w[1]) {
                (TrailVertex::Tile(t), TrailVertex::Feature(f)) | (TrailVertex::Feature(f), TrailVertex::Tile(t)) => (t, f),
                _ => panic!("trail is not bipartite"),
            };
            assert!(seen.insert(e));
        }
        assert_eq!(seen.len(), inst.size());
    }
}
