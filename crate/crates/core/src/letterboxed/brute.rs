//! Definition-level oracle: breadth-first over word sequences, enumerating
//! every admissible side trace of every word and counting coverage directly.

use super::{verify_solution, LetterBoxedPuzzle, LetterBoxedSolution, Symbol};
use crate::outcome::{Budget, SearchOutcome};
use std::collections::{HashMap, HashSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceResult {
    pub min_words: usize,
    pub solution: LetterBoxedSolution,
}

/// State after some words: every character except the last one of the last
/// word has been counted; that last one waits, since it only counts if the
/// solution stops there.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Key {
    side: usize,
    last: Symbol,
    missing: Vec<u32>,
}

/// Smallest word count up to `k_cap` (clamped to the certificate bound), or
/// `Unsolvable` when no sequence of at most that many words works.
pub fn brute_force_min_words(
    puzzle: &LetterBoxedPuzzle,
    k_cap: Option<usize>,
    budget: &mut Budget,
) -> SearchOutcome<BruteForceResult> {
    let cap = k_cap
        .unwrap_or(usize::MAX)
        .min(puzzle.certificate_bound());
    let sigma = puzzle.alphabet().len();
    let s = puzzle.num_sides();
    let mut required = vec![0u32; s * sigma];
    for (side, members) in puzzle.sides().iter().enumerate() {
        for &c in members {
            required[side * sigma + c] += 1;
        }
    }

    let mut seen: HashSet<Key> = HashSet::new();
    // Layer entries carry an explicit witness.
    let mut layer: Vec<(Key, Vec<usize>, Vec<usize>)> = Vec::new();
    for depth in 1..=cap {
        let mut next: HashMap<Key, (Vec<usize>, Vec<usize>)> = HashMap::new();
        let mut order: Vec<Key> = Vec::new();
        let mut push = |key: Key, words: Vec<usize>, trace: Vec<usize>| {
            if !seen.contains(&key) && !next.contains_key(&key) {
                order.push(key.clone());
                next.insert(key, (words, trace));
            }
        };
        if depth == 1 {
            for (w, word) in puzzle.dictionary().iter().enumerate() {
                for t in traces(puzzle, word, None) {
                    let missing = count(&required, sigma, word, &t);
                    let key = Key {
                        side: *t.last().unwrap(),
                        last: *word.last().unwrap(),
                        missing,
                    };
                    push(key, vec![w], t);
                }
            }
        } else {
            for (key, words, trace) in &layer {
                if budget.tick().is_err() {
                    return SearchOutcome::BudgetExhausted;
                }
                for (w, word) in puzzle.dictionary().iter().enumerate() {
                    if word[0] != key.last {
                        continue;
                    }
                    for t in traces(puzzle, word, Some(key.side)) {
                        let missing = count(&key.missing, sigma, word, &t);
                        let mut ws = words.clone();
                        ws.push(w);
                        let mut tr = trace.clone();
                        tr.extend_from_slice(&t);
                        let k = Key {
                            side: *t.last().unwrap(),
                            last: *word.last().unwrap(),
                            missing,
                        };
                        push(k, ws, tr);
                    }
                }
            }
        }
        if budget.tick().is_err() {
            return SearchOutcome::BudgetExhausted;
        }
        for key in &order {
            let mut missing = key.missing.clone();
            let slot = &mut missing[key.side * sigma + key.last];
            *slot = slot.saturating_sub(1);
            if missing.iter().all(|&m| m == 0) {
                let (words, side_trace) = next.remove(key).unwrap();
                let solution = LetterBoxedSolution { words, side_trace };
                let verdict = verify_solution(puzzle, &solution, depth)
                    .expect("oracle witness is well formed");
                assert!(verdict.is_valid(), "oracle witness rejected: {verdict:?}");
                return SearchOutcome::Found(BruteForceResult {
                    min_words: depth,
                    solution,
                });
            }
        }
        if order.is_empty() {
            return SearchOutcome::Unsolvable;
        }
        seen.extend(order.iter().cloned());
        layer = order
            .into_iter()
            .map(|k| {
                let (w, t) = next.remove(&k).unwrap();
                (k, w, t)
            })
            .collect();
    }
    SearchOutcome::Unsolvable
}

/// Every side sequence for `word` where each character sits on its side and
/// consecutive sides differ. With `pivot`, the first side is fixed.
fn traces(puzzle: &LetterBoxedPuzzle, word: &[Symbol], pivot: Option<usize>) -> Vec<Vec<usize>> {
    let s = puzzle.num_sides();
    let mut out = Vec::new();
    let mut cur = vec![0usize; word.len()];
    // Odometer over [S]^|word|.
    loop {
        let ok = pivot.is_none_or(|p| cur[0] == p)
            && cur.iter().zip(word).all(|(&side, &c)| puzzle.on_side(side, c))
            && cur.windows(2).all(|p| p[0] != p[1]);
        if ok {
            out.push(cur.clone());
        }
        let mut i = word.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < s {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Coverage for all but the last character of `word`.
fn count(missing: &[u32], sigma: usize, word: &[Symbol], trace: &[usize]) -> Vec<u32> {
    let mut m = missing.to_vec();
    for (&c, &side) in word.iter().zip(trace).take(word.len() - 1) {
        let slot = &mut m[side * sigma + c];
        *slot = slot.saturating_sub(1);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn min(p: &LetterBoxedPuzzle) -> Option<usize> {
        brute_force_min_words(p, None, &mut Budget::unlimited())
            .found()
            .map(|r| r.min_words)
    }

    #[test]
    fn abab_is_one() {
        assert_eq!(min(&abab()), Some(1));
    }

    #[test]
    fn chain_is_three() {
        let r = brute_force_min_words(&chain(), None, &mut Budget::unlimited())
            .found()
            .unwrap();
        assert_eq!(r.min_words, 3);
        assert_eq!(r.solution.words, vec![0, 1, 2]);
    }

    #[test]
    fn cap_limits_search() {
        let out = brute_force_min_words(&chain(), Some(2), &mut Budget::unlimited());
        assert_eq!(out, SearchOutcome::Unsolvable);
    }

    #[test]
    fn unsolvable_exhausts() {
        let p = puzzle(&["a", "b", "c"], &["ab", "ba"], &["a", "b", "c"]);
        assert_eq!(min(&p), None);
    }

    #[test]
    fn trace_enumeration_matches_count() {
        // Sides {a},{a},{a}: traces of "aa" are the 6 ordered pairs of distinct sides.
        let p = puzzle(&["a"], &["aa"], &["a", "a", "a"]);
        assert_eq!(traces(&p, p.word(0), None).len(), 6);
        assert_eq!(traces(&p, p.word(0), Some(1)).len(), 2);
    }
}
