//! Placement enumeration (trie-guided path search) and exact cover.

use super::{GridCell, StrandsInstance, StrandsPartition, StrandsPlacement, Symbol};
use crate::outcome::{Budget, Exhausted, SearchOutcome, DEFAULT_BUDGET};
use std::collections::{HashMap, HashSet};

/// Cell chosen for branching at each node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoverOrder {
    /// Lowest uncovered cell in row-major order.
    #[default]
    LowestCell,
    /// Uncovered cell with the fewest usable placements.
    MostConstrained,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrandsSearchOptions {
    pub allow_diagonal: bool,
    pub order: CoverOrder,
}

impl Default for StrandsSearchOptions {
    fn default() -> Self {
        StrandsSearchOptions { allow_diagonal: true, order: CoverOrder::LowestCell }
    }
}

#[derive(Default)]
struct TrieNode {
    next: HashMap<Symbol, usize>,
    word: Option<usize>,
}

/// Every simple path spelling a dictionary word, ordered by word index,
/// then start cell (row-major), then neighbour order.
pub fn enumerate_placements(inst: &StrandsInstance, allow_diagonal: bool) -> Vec<StrandsPlacement> {
    enumerate_placements_within(inst, allow_diagonal, &mut Budget::unlimited()).expect("unlimited budget")
}

/// [`enumerate_placements`], charging one budget tick per path extension.
pub fn enumerate_placements_within(
    inst: &StrandsInstance,
    allow_diagonal: bool,
    budget: &mut Budget,
) -> Result<Vec<StrandsPlacement>, Exhausted> {
    let mut trie = vec![TrieNode::default()];
    for (wi, w) in inst.dictionary().iter().enumerate() {
        let mut node = 0;
        for &s in w {
            node = match trie[node].next.get(&s) {
                Some(&n) => n,
                None => {
                    trie.push(TrieNode::default());
                    let n = trie.len() - 1;
                    trie[node].next.insert(s, n);
                    n
                }
            };
        }
        trie[node].word = Some(wi);
    }
    let mut walk = Walk {
        inst,
        trie: &trie,
        diag: allow_diagonal,
        visited: vec![vec![false; inst.cols()]; inst.rows()],
        path: Vec::new(),
        out: Vec::new(),
        budget,
    };
    for r in 0..inst.rows() {
        for c in 0..inst.cols() {
            if let Some(&n) = trie[0].next.get(&inst.at((r, c))) {
                walk.extend(n, (r, c))?;
            }
        }
    }
    let mut out = walk.out;
    out.sort_by_key(|p| p.word);
    Ok(out)
}

struct Walk<'a> {
    inst: &'a StrandsInstance,
    trie: &'a [TrieNode],
    diag: bool,
    visited: Vec<Vec<bool>>,
    path: Vec<GridCell>,
    out: Vec<StrandsPlacement>,
    budget: &'a mut Budget,
}

impl Walk<'_> {
    fn extend(&mut self, node: usize, cell: GridCell) -> Result<(), Exhausted> {
        self.budget.tick()?;
        self.visited[cell.0][cell.1] = true;
        self.path.push(cell);
        if let Some(word) = self.trie[node].word {
            self.out.push(StrandsPlacement { word, cells: self.path.clone() });
        }
        if !self.trie[node].next.is_empty() {
            let next: Vec<GridCell> = self.inst.neighbors(cell, self.diag).collect();
            for n in next {
                if self.visited[n.0][n.1] {
                    continue;
                }
                if let Some(&child) = self.trie[node].next.get(&self.inst.at(n)) {
                    self.extend(child, n)?;
                }
            }
        }
        self.path.pop();
        self.visited[cell.0][cell.1] = false;
        Ok(())
    }
}

pub fn solve_strands(inst: &StrandsInstance, allow_diagonal: bool) -> SearchOutcome<StrandsPartition> {
    let options = StrandsSearchOptions { allow_diagonal, ..Default::default() };
    solve_strands_with(inst, options, &mut Budget::new(DEFAULT_BUDGET))
}

pub fn solve_strands_with(
    inst: &StrandsInstance,
    options: StrandsSearchOptions,
    budget: &mut Budget,
) -> SearchOutcome<StrandsPartition> {
    let Ok(placements) = enumerate_placements_within(inst, options.allow_diagonal, budget) else {
        return SearchOutcome::BudgetExhausted;
    };
    // Only the covered cells matter for existence; keep one placement per cell set.
    let mut seen = HashSet::new();
    let placements: Vec<StrandsPlacement> = placements
        .into_iter()
        .filter(|p| {
            let mut cells = p.cells.clone();
            cells.sort_unstable();
            seen.insert(cells)
        })
        .collect();
    let mut cover = Cover::new(inst, placements, vec![false; inst.rows() * inst.cols()], options.order);
    let mut found = None;
    match cover.search(budget, &mut |p| {
        found = Some(p);
        false
    }) {
        Err(Exhausted) => SearchOutcome::BudgetExhausted,
        Ok(()) => found.map_or(SearchOutcome::Unsolvable, SearchOutcome::Found),
    }
}

/// Partitions of the required cells, where cells flagged `optional`
/// (row-major index) may be left uncovered. Stops after `limit` results.
pub fn enumerate_covers(
    inst: &StrandsInstance,
    allow_diagonal: bool,
    optional: &[bool],
    limit: usize,
    budget: &mut Budget,
) -> SearchOutcome<Vec<StrandsPartition>> {
    let placements = enumerate_placements(inst, allow_diagonal);
    let mut cover = Cover::new(inst, placements, optional.to_vec(), CoverOrder::LowestCell);
    let mut all = Vec::new();
    match cover.search(budget, &mut |p| {
        all.push(p);
        all.len() < limit
    }) {
        Err(Exhausted) => SearchOutcome::BudgetExhausted,
        Ok(()) => SearchOutcome::Found(all),
    }
}

struct Cover {
    cols: usize,
    placements: Vec<StrandsPlacement>,
    /// Placement ids through each cell.
    by_cell: Vec<Vec<usize>>,
    optional: Vec<bool>,
    covered: Vec<bool>,
    chosen: Vec<usize>,
    order: CoverOrder,
}

impl Cover {
    fn new(inst: &StrandsInstance, placements: Vec<StrandsPlacement>, optional: Vec<bool>, order: CoverOrder) -> Self {
        let cols = inst.cols();
        let n = inst.rows() * cols;
        let mut by_cell = vec![Vec::new(); n];
        for (i, p) in placements.iter().enumerate() {
            for &(r, c) in &p.cells {
                by_cell[r * cols + c].push(i);
            }
        }
        Cover { cols, placements, by_cell, optional, covered: vec![false; n], chosen: Vec::new(), order }
    }

    fn usable(&self, p: usize) -> bool {
        self.placements[p].cells.iter().all(|&(r, c)| !self.covered[r * self.cols + c])
    }

    fn pick(&self) -> Option<usize> {
        let open = (0..self.covered.len()).filter(|&i| !self.covered[i] && !self.optional[i]);
        match self.order {
            CoverOrder::LowestCell => open.into_iter().next(),
            CoverOrder::MostConstrained => {
                open.min_by_key(|&i| self.by_cell[i].iter().filter(|&&p| self.usable(p)).count())
            }
        }
    }

    /// `emit` returns whether to keep searching.
    fn search(&mut self, budget: &mut Budget, emit: &mut dyn FnMut(StrandsPartition) -> bool) -> Result<(), Exhausted> {
        self.go(budget, emit).map(|_| ())
    }

    fn go(&mut self, budget: &mut Budget, emit: &mut dyn FnMut(StrandsPartition) -> bool) -> Result<bool, Exhausted> {
        let Some(cell) = self.pick() else {
            let pieces = self.chosen.iter().map(|&p| self.placements[p].clone()).collect();
            return Ok(emit(StrandsPartition { pieces }));
        };
        for k in 0..self.by_cell[cell].len() {
            let p = self.by_cell[cell][k];
            budget.tick()?;
            if !self.usable(p) {
                continue;
            }
            self.set(p, true);
            self.chosen.push(p);
            let more = self.go(budget, emit)?;
            self.chosen.pop();
            self.set(p, false);
            if !more {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn set(&mut self, p: usize, v: bool) {
        for &(r, c) in &self.placements[p].cells {
            self.covered[r * self.cols + c] = v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::instance;
    use super::super::verify_partition;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn placement_counts() {
        assert_eq!(enumerate_placements(&instance(&["A"], &["A"]), true).len(), 1);
        let p = enumerate_placements(&instance(&["AB"], &["AB"]), true);
        assert_eq!(p, vec![StrandsPlacement { word: 0, cells: vec![(0, 0), (0, 1)] }]);
        let sq = instance(&["AB", "BA"], &["AB"]);
        assert_eq!(enumerate_placements(&sq, false).len(), 4);
        assert_eq!(enumerate_placements(&sq, true).len(), 4);
    }

    #[test]
    fn placement_order() {
        let sq = instance(&["AB", "BA"], &["AB"]);
        let starts: Vec<_> = enumerate_placements(&sq, false).iter().map(|p| p.cells.clone()).collect();
        assert_eq!(
            starts,
            vec![
                vec![(0, 0), (0, 1)],
                vec![(0, 0), (1, 0)],
                vec![(1, 1), (0, 1)],
                vec![(1, 1), (1, 0)],
            ]
        );
    }

    #[test]
    fn solves_small_grids() {
        let sq = instance(&["AB", "BA"], &["AB"]);
        let sol = solve_strands(&sq, false).found().unwrap();
        assert_eq!(sol.pieces.len(), 2);
        assert!(verify_partition(&sq, &sol, false).unwrap().is_valid());
        let none = instance(&["AA"], &["AB"]);
        assert_eq!(solve_strands(&none, true), SearchOutcome::Unsolvable);
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let g = instance(&["AAAA", "AAAA", "AAAA"], &["AA", "AAA"]);
        let out = solve_strands_with(&g, StrandsSearchOptions::default(), &mut Budget::new(2));
        assert_eq!(out, SearchOutcome::BudgetExhausted);
    }

    /// Brute force: try every set of pairwise disjoint placements.
    fn brute(inst: &StrandsInstance, diag: bool) -> bool {
        let ps = enumerate_placements(inst, diag);
        let n = inst.rows() * inst.cols();
        fn go(ps: &[StrandsPlacement], i: usize, used: &mut Vec<bool>, left: usize, cols: usize) -> bool {
            if left == 0 {
                return true;
            }
            if i == ps.len() {
                return false;
            }
            let cells: Vec<usize> = ps[i].cells.iter().map(|&(r, c)| r * cols + c).collect();
            if cells.iter().all(|&c| !used[c]) {
                cells.iter().for_each(|&c| used[c] = true);
                if go(ps, i + 1, used, left - cells.len(), cols) {
                    return true;
                }
                cells.iter().for_each(|&c| used[c] = false);
            }
            go(ps, i + 1, used, left, cols)
        }
        go(&ps, 0, &mut vec![false; n], n, inst.cols())
    }

    fn small_instance() -> impl Strategy<Value = StrandsInstance> {
        let grid = prop::collection::vec(prop::collection::vec(0usize..2, 3), 1..=3);
        let words = prop::collection::btree_set(prop::collection::vec(0usize..2, 1..=3), 1..4);
        (grid, words).prop_map(|(grid, words)| {
            StrandsInstance::from_parts(vec!["A".into(), "B".into()], words.into_iter().collect(), grid).unwrap()
        })
    }

    proptest! {
        #[test]
        fn solver_matches_brute_force(inst in small_instance(), diag in any::<bool>()) {
            let got = solve_strands(&inst, diag);
            prop_assert_eq!(got.is_found(), brute(&inst, diag));
            if let SearchOutcome::Found(sol) = got {
                prop_assert!(verify_partition(&inst, &sol, diag).unwrap().is_valid());
            }
        }

        #[test]
        fn most_constrained_agrees(inst in small_instance()) {
            let opts = StrandsSearchOptions { allow_diagonal: true, order: CoverOrder::MostConstrained };
            let a = solve_strands_with(&inst, opts, &mut Budget::unlimited());
            prop_assert_eq!(a.is_found(), solve_strands(&inst, true).is_found());
        }

        #[test]
        fn no_diagonal_solutions_survive_diagonals(inst in small_instance()) {
            if solve_strands(&inst, false).is_found() {
                prop_assert!(solve_strands(&inst, true).is_found());
            }
        }
    }
}
