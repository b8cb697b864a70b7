//! Backtracking over the smallest uncovered cell, with identical dominoes
//! grouped so that symmetric placements are only tried once.

use super::{Domino, PipsConstraintKind, PipsPlacement, PipsPuzzle, PlacedDomino};
use crate::outcome::{Budget, Exhausted, SearchOutcome, DEFAULT_BUDGET};
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipsSearchOptions {
    /// Prune sum regions with inventory bounds; off means sums are only
    /// checked once a region is full.
    pub sum_pruning: bool,
}

impl Default for PipsSearchOptions {
    fn default() -> Self {
        PipsSearchOptions { sum_pruning: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("more than {limit} solutions")]
    LimitExceeded { limit: usize },
    #[error("node budget exhausted")]
    BudgetExhausted,
}

pub fn solve_pips(puzzle: &PipsPuzzle) -> SearchOutcome<PipsPlacement> {
    solve_pips_with(puzzle, PipsSearchOptions::default(), &mut Budget::new(DEFAULT_BUDGET))
}

pub fn solve_pips_with(
    puzzle: &PipsPuzzle,
    options: PipsSearchOptions,
    budget: &mut Budget,
) -> SearchOutcome<PipsPlacement> {
    if !puzzle.is_balanced() {
        return SearchOutcome::Unsolvable;
    }
    let mut found = None;
    let mut solver = Solver::new(puzzle, options);
    let run = solver.search(0, budget, &mut |pieces| {
        found = Some(PipsPlacement { pieces: pieces.to_vec() });
        Flow::Stop
    });
    match (run, found) {
        (Err(Exhausted), _) => SearchOutcome::BudgetExhausted,
        (Ok(_), Some(p)) => SearchOutcome::Found(p),
        (Ok(_), None) => SearchOutcome::Unsolvable,
    }
}

/// Every solution, in search order. Identical dominoes are interchangeable,
/// so each distinct layout of values appears once.
pub fn enumerate_pips_solutions(
    puzzle: &PipsPuzzle,
    limit: usize,
) -> Result<Vec<PipsPlacement>, EnumerateError> {
    if !puzzle.is_balanced() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut over = false;
    let mut solver = Solver::new(puzzle, PipsSearchOptions::default());
    let mut budget = Budget::new(DEFAULT_BUDGET);
    solver
        .search(0, &mut budget, &mut |pieces| {
            if out.len() == limit {
                over = true;
                return Flow::Stop;
            }
            out.push(PipsPlacement { pieces: pieces.to_vec() });
            Flow::Continue
        })
        .map_err(|_| EnumerateError::BudgetExhausted)?;
    if over {
        return Err(EnumerateError::LimitExceeded { limit });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
}

struct DominoType {
    pair: Domino,
    indices: Vec<usize>,
    used: usize,
}

struct Solver<'a> {
    puzzle: &'a PipsPuzzle,
    options: PipsSearchOptions,
    right: Vec<Option<usize>>,
    down: Vec<Option<usize>>,
    region_of: Vec<Option<usize>>,
    value: Vec<Option<u64>>,
    /// Values placed so far in each region, in placement order.
    region_values: Vec<Vec<u64>>,
    region_sum: Vec<u64>,
    types: Vec<DominoType>,
    /// Multiset of unplaced domino halves.
    halves: BTreeMap<u64, usize>,
    placed: Vec<PlacedDomino>,
}

impl<'a> Solver<'a> {
    fn new(puzzle: &'a PipsPuzzle, options: PipsSearchOptions) -> Self {
        let cells = puzzle.cells();
        let index: HashMap<_, _> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let right = cells.iter().map(|c| index.get(&super::Cell::new(c.x + 1, c.y)).copied()).collect();
        let down = cells.iter().map(|c| index.get(&super::Cell::new(c.x, c.y + 1)).copied()).collect();
        let mut region_of = vec![None; cells.len()];
        for (r, c) in puzzle.constraints().iter().enumerate() {
            for cell in &c.region {
                region_of[index[cell]] = Some(r);
            }
        }
        let mut types: Vec<DominoType> = Vec::new();
        let mut halves = BTreeMap::new();
        for (i, &(a, b)) in puzzle.dominoes().iter().enumerate() {
            let key = (a.min(b), a.max(b));
            match types.iter_mut().find(|t| (t.pair.0.min(t.pair.1), t.pair.0.max(t.pair.1)) == key) {
                Some(t) => t.indices.push(i),
                None => types.push(DominoType { pair: (a, b), indices: vec![i], used: 0 }),
            }
            *halves.entry(a).or_insert(0) += 1;
            *halves.entry(b).or_insert(0) += 1;
        }
        let regions = puzzle.constraints().len();
        Solver {
            puzzle,
            options,
            right,
            down,
            region_of,
            value: vec![None; cells.len()],
            region_values: vec![Vec::new(); regions],
            region_sum: vec![0; regions],
            types,
            halves,
            placed: Vec::new(),
        }
    }

    fn search(
        &mut self,
        from: usize,
        budget: &mut Budget,
        sink: &mut dyn FnMut(&[PlacedDomino]) -> Flow,
    ) -> Result<Flow, Exhausted> {
        let Some(i) = (from..self.value.len()).find(|&i| self.value[i].is_none()) else {
            return Ok(sink(&self.placed));
        };
        for t in 0..self.types.len() {
            if self.types[t].used == self.types[t].indices.len() {
                continue;
            }
            for partner in [self.right[i], self.down[i]].into_iter().flatten() {
                if self.value[partner].is_some() {
                    continue;
                }
                let (a, b) = self.types[t].pair;
                let flips: &[(u64, u64)] = if a == b { &[(a, b)] } else { &[(a, b), (b, a)] };
                for &(va, vb) in flips {
                    budget.tick()?;
                    let ok = self.place(t, i, partner, va, vb);
                    if ok && self.search(i + 1, budget, sink)? == Flow::Stop {
                        return Ok(Flow::Stop);
                    }
                    self.unplace(t, i, partner);
                }
            }
        }
        Ok(Flow::Continue)
    }

    /// Applies the placement and reports whether it is still consistent.
    /// The caller undoes it either way.
    fn place(&mut self, t: usize, i: usize, j: usize, va: u64, vb: u64) -> bool {
        let ty = &mut self.types[t];
        let domino = ty.indices[ty.used];
        ty.used += 1;
        for v in [va, vb] {
            let n = self.halves.get_mut(&v).expect("half in inventory");
            *n -= 1;
            if *n == 0 {
                self.halves.remove(&v);
            }
        }
        let cells = self.puzzle.cells();
        self.placed.push(PlacedDomino {
            domino,
            cell_a: cells[i],
            cell_b: cells[j],
            value_a: va,
            value_b: vb,
        });
        let ok_a = self.assign(i, va);
        let ok_b = self.assign(j, vb);
        ok_a && ok_b && [i, j].iter().all(|&c| self.bounds_ok(c))
    }

    fn unplace(&mut self, t: usize, i: usize, j: usize) {
        let p = self.placed.pop().expect("placed piece");
        self.unassign(j);
        self.unassign(i);
        for v in [p.value_a, p.value_b] {
            *self.halves.entry(v).or_insert(0) += 1;
        }
        self.types[t].used -= 1;
    }

    fn assign(&mut self, cell: usize, v: u64) -> bool {
        self.value[cell] = Some(v);
        let Some(r) = self.region_of[cell] else {
            return true;
        };
        let vals = &mut self.region_values[r];
        let ok = match self.puzzle.constraints()[r].kind {
            PipsConstraintKind::Eq => vals.first().is_none_or(|&f| f == v),
            PipsConstraintKind::Neq => !vals.contains(&v),
            _ => true,
        };
        vals.push(v);
        self.region_sum[r] += v;
        ok
    }

    fn unassign(&mut self, cell: usize) {
        let v = self.value[cell].take().expect("assigned cell");
        if let Some(r) = self.region_of[cell] {
            self.region_values[r].pop();
            self.region_sum[r] -= v;
        }
    }

    fn bounds_ok(&self, cell: usize) -> bool {
        let Some(r) = self.region_of[cell] else {
            return true;
        };
        let c = &self.puzzle.constraints()[r];
        type Test = fn(u64, u64) -> bool;
        let (n, lo_ok, hi_ok): (u64, Test, Test) = match c.kind {
            PipsConstraintKind::SumEq(n) => (n, |lo, n| lo <= n, |hi, n| hi >= n),
            PipsConstraintKind::SumLt(n) => (n, |lo, n| lo < n, |_, _| true),
            PipsConstraintKind::SumGt(n) => (n, |_, _| true, |hi, n| hi > n),
            _ => return true,
        };
        let sum = self.region_sum[r];
        let remaining = c.region.len() - self.region_values[r].len();
        if remaining == 0 {
            return c.kind.holds(&self.region_values[r]);
        }
        if !self.options.sum_pruning {
            return true;
        }
        let lo = sum + self.extreme_halves(remaining, false);
        let hi = sum + self.extreme_halves(remaining, true);
        lo_ok(lo, n) && hi_ok(hi, n)
    }

    /// Sum of the `k` smallest (or largest) unplaced halves.
    fn extreme_halves(&self, k: usize, largest: bool) -> u64 {
        let mut left = k;
        let mut total = 0;
        let iter: Box<dyn Iterator<Item = (&u64, &usize)>> =
            if largest { Box::new(self.halves.iter().rev()) } else { Box::new(self.halves.iter()) };
        for (&v, &n) in iter {
            let take = n.min(left);
            total += v * take as u64;
            left -= take;
            if left == 0 {
                break;
            }
        }
        total
    }
}
