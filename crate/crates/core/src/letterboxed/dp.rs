//! Shortest path over the implicit game-state graph, expanded lazily.

use super::{LetterBoxedPuzzle, LetterBoxedSolution, Symbol};
use crate::outcome::{Budget, SearchOutcome};
use std::collections::{HashMap, VecDeque};

/// Uncovered occurrences left per (side, symbol).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidualLetterState {
    sigma: usize,
    counts: Vec<u32>,
}

impl ResidualLetterState {
    /// The residual at the start of play: every occurrence uncovered.
    pub fn initial(puzzle: &LetterBoxedPuzzle) -> Self {
        ResidualLetterState {
            sigma: puzzle.alphabet().len(),
            counts: puzzle.initial_residual(),
        }
    }

    pub fn get(&self, side: usize, symbol: Symbol) -> u32 {
        self.counts[side * self.sigma + symbol]
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// Covers one occurrence; a no-op when none is left.
    pub fn covered(&self, side: usize, symbol: Symbol) -> Self {
        let mut next = self.clone();
        let c = &mut next.counts[side * self.sigma + symbol];
        *c = c.saturating_sub(1);
        next
    }

    pub(crate) fn counts(&self) -> &[u32] {
        &self.counts
    }
}

/// Vertex of the game graph. `position` is 1-based into `word`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GameState {
    Start,
    At {
        side: usize,
        residual: ResidualLetterState,
        word: usize,
        position: usize,
    },
    End,
}

/// What a path's cost counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DpMetric {
    Words,
    /// Character placements, with each pivot counted once.
    Letters,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpSolution {
    pub cost: usize,
    pub solution: LetterBoxedSolution,
    /// Start, the visited game states, End.
    pub path: Vec<GameState>,
    /// Distinct states created during the search.
    pub states: usize,
}

struct Node {
    side: usize,
    residual: ResidualLetterState,
    word: usize,
    position: usize,
}

/// Lazily grown state table driving the 0-1 BFS.
#[derive(Default)]
struct Graph {
    nodes: Vec<Node>,
    index: HashMap<(usize, usize, usize, ResidualLetterState), usize>,
    dist: Vec<usize>,
    parent: Vec<Option<usize>>,
    done: Vec<bool>,
    deque: VecDeque<usize>,
}

impl Graph {
    fn relax(&mut self, node: Node, d: usize, from: Option<usize>, weight: usize) {
        let key = (node.side, node.word, node.position, node.residual.clone());
        let id = match self.index.get(&key) {
            Some(&id) if d >= self.dist[id] => return,
            Some(&id) => id,
            None => {
                let id = self.nodes.len();
                self.index.insert(key, id);
                self.nodes.push(node);
                self.dist.push(usize::MAX);
                self.parent.push(None);
                self.done.push(false);
                id
            }
        };
        self.dist[id] = d;
        self.parent[id] = from;
        if weight == 0 {
            self.deque.push_front(id);
        } else {
            self.deque.push_back(id);
        }
    }
}

/// 0-1 BFS from Start to End. Returns the optimum under `metric` and a
/// witness reconstructed from parent pointers.
pub fn solve_dp(
    puzzle: &LetterBoxedPuzzle,
    metric: DpMetric,
    budget: &mut Budget,
) -> SearchOutcome<DpSolution> {
    let dict = puzzle.dictionary();
    let s = puzzle.num_sides();
    let cont_weight = match metric {
        DpMetric::Words => 0,
        DpMetric::Letters => 1,
    };
    let mut g = Graph::default();

    let initial = ResidualLetterState::initial(puzzle);
    for (w, word) in dict.iter().enumerate() {
        for side in (0..s).filter(|&i| puzzle.on_side(i, word[0])) {
            let node = Node {
                side,
                residual: initial.covered(side, word[0]),
                word: w,
                position: 1,
            };
            g.relax(node, 0, None, 0);
        }
    }

    let mut best: Option<usize> = None;
    while let Some(u) = g.deque.pop_front() {
        if g.done[u] {
            continue;
        }
        g.done[u] = true;
        if budget.tick().is_err() {
            return SearchOutcome::BudgetExhausted;
        }
        let d = g.dist[u];
        let (side, word, position) = (g.nodes[u].side, g.nodes[u].word, g.nodes[u].position);
        let w = &dict[word];
        if position == w.len() {
            if g.nodes[u].residual.is_zero() {
                // Pops come in nondecreasing distance order, so the first
                // final state reached is optimal.
                best = Some(u);
                break;
            }
            let pivot = w[w.len() - 1];
            for (w2, next) in dict.iter().enumerate() {
                if next.len() < 2 || next[0] != pivot {
                    continue;
                }
                for j in (0..s).filter(|&j| j != side && puzzle.on_side(j, next[1])) {
                    let node = Node {
                        side: j,
                        residual: g.nodes[u].residual.covered(j, next[1]),
                        word: w2,
                        position: 2,
                    };
                    g.relax(node, d + 1, Some(u), 1);
                }
            }
        } else {
            let c = w[position];
            for j in (0..s).filter(|&j| j != side && puzzle.on_side(j, c)) {
                let node = Node {
                    side: j,
                    residual: g.nodes[u].residual.covered(j, c),
                    word,
                    position: position + 1,
                };
                g.relax(node, d + cont_weight, Some(u), cont_weight);
            }
        }
    }

    let Some(last) = best else {
        return SearchOutcome::Unsolvable;
    };
    let mut path = vec![last];
    while let Some(p) = g.parent[*path.last().unwrap()] {
        path.push(p);
    }
    path.reverse();

    let mut solution = LetterBoxedSolution::default();
    let first = &g.nodes[path[0]];
    solution.words.push(first.word);
    solution.side_trace.push(first.side);
    for pair in path.windows(2) {
        let (prev, cur) = (&g.nodes[pair[0]], &g.nodes[pair[1]]);
        if prev.position == dict[prev.word].len() {
            solution.words.push(cur.word);
            solution.side_trace.push(prev.side);
        }
        solution.side_trace.push(cur.side);
    }
    let mut states = vec![GameState::Start];
    states.extend(path.iter().map(|&id| {
        let n = &g.nodes[id];
        GameState::At {
            side: n.side,
            residual: n.residual.clone(),
            word: n.word,
            position: n.position,
        }
    }));
    states.push(GameState::End);
    SearchOutcome::Found(DpSolution {
        cost: g.dist[last] + 1,
        solution,
        path: states,
        states: g.nodes.len(),
    })
}

/// Minimum number of words, or `None` when no solution exists.
pub fn min_words_dp(puzzle: &LetterBoxedPuzzle) -> Option<usize> {
    solve_dp(puzzle, DpMetric::Words, &mut Budget::unlimited())
        .found()
        .map(|s| s.cost)
}

/// Minimum number of character placements, or `None` when unsolvable.
pub fn min_letters_dp(puzzle: &LetterBoxedPuzzle) -> Option<usize> {
    solve_dp(puzzle, DpMetric::Letters, &mut Budget::unlimited())
        .found()
        .map(|s| s.cost)
}

impl GameState {
    pub fn is_terminal(&self) -> bool {
        matches!(self, GameState::Start | GameState::End)
    }
}
