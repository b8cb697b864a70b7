//! Rectilinear embeddings in column-slot form.
//!
//! Every clause leg gets a distinct integer slot on the variable line. Slots
//! grow left to right and follow the variable order, so each variable owns a
//! run of consecutive slots. A clause sits above or below the line at a
//! positive level; its body spans from its leftmost to its rightmost leg.

use super::{OneInThreeInstance, SourceError};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Above,
    Below,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseEmbedding {
    pub side: Side,
    pub level: u32,
    /// (variable, slot) per leg.
    pub legs: [(usize, usize); 3],
}

impl ClauseEmbedding {
    /// Leftmost and rightmost leg slots.
    pub fn interval(&self) -> (usize, usize) {
        let slots = self.legs.map(|l| l.1);
        (*slots.iter().min().unwrap(), *slots.iter().max().unwrap())
    }

    pub fn slot_of(&self, var: usize) -> Option<usize> {
        self.legs.iter().find(|l| l.0 == var).map(|l| l.1)
    }

    /// Legs sorted by slot.
    pub fn sorted_legs(&self) -> [(usize, usize); 3] {
        let mut l = self.legs;
        l.sort_by_key(|x| x.1);
        l
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Embedding {
    pub clauses: Vec<ClauseEmbedding>,
}

impl Embedding {
    /// Total number of slots in use (max slot + 1).
    pub fn width(&self) -> usize {
        self.clauses
            .iter()
            .flat_map(|c| c.legs.iter().map(|l| l.1 + 1))
            .max()
            .unwrap_or(0)
    }

    /// (clause, slot) pairs of a variable's legs, by slot.
    pub fn legs_of(&self, var: usize) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .clauses
            .iter()
            .enumerate()
            .filter_map(|(ci, c)| c.slot_of(var).map(|s| (ci, s)))
            .collect();
        out.sort_by_key(|x| x.1);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingViolation {
    /// The clause's legs do not name exactly its three variables.
    LegMismatch { clause: usize },
    ZeroLevel { clause: usize },
    DuplicateSlot { slot: usize },
    /// Slot order disagrees with variable order.
    SlotOrder { slot: usize },
    /// Same-side spans overlap without nesting.
    Crossing { a: usize, b: usize },
    /// A nested span whose level is not strictly below the outer one.
    LevelOrder { outer: usize, inner: usize },
    /// A leg of `clause` at `slot` runs through the body of `other`.
    LegThroughBody { clause: usize, slot: usize, other: usize },
}

impl fmt::Display for EmbeddingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use EmbeddingViolation::*;
        match self {
            LegMismatch { clause } => write!(f, "clause {clause} legs do not match its variables"),
            ZeroLevel { clause } => write!(f, "clause {clause} has level 0"),
            DuplicateSlot { slot } => write!(f, "slot {slot} is used twice"),
            SlotOrder { slot } => write!(f, "slot {slot} breaks the variable order"),
            Crossing { a, b } => write!(f, "clauses {a} and {b} cross"),
            LevelOrder { outer, inner } => {
                write!(f, "clause {outer} encloses clause {inner} but is not higher")
            }
            LegThroughBody { clause, slot, other } => {
                write!(f, "leg of clause {clause} at slot {slot} crosses clause {other}")
            }
        }
    }
}

/// Checks an embedding against its formula; empty when valid.
pub fn validate_embedding(inst: &OneInThreeInstance) -> Vec<EmbeddingViolation> {
    check(inst.clauses(), &inst.embedding().clauses)
}

fn check(clauses: &[[usize; 3]], emb: &[ClauseEmbedding]) -> Vec<EmbeddingViolation> {
    use EmbeddingViolation::*;
    let mut out = Vec::new();
    for (ci, (c, e)) in clauses.iter().zip(emb).enumerate() {
        let mut a = *c;
        let mut b = e.legs.map(|l| l.0);
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            out.push(LegMismatch { clause: ci });
        }
        if e.level == 0 {
            out.push(ZeroLevel { clause: ci });
        }
    }
    let mut legs: Vec<(usize, usize)> = emb
        .iter()
        .flat_map(|e| e.legs.iter().map(|&(v, s)| (s, v)))
        .collect();
    legs.sort_unstable();
    for w in legs.windows(2) {
        if w[0].0 == w[1].0 {
            out.push(DuplicateSlot { slot: w[0].0 });
        } else if w[0].1 > w[1].1 {
            out.push(SlotOrder { slot: w[1].0 });
        }
    }
    for a in 0..emb.len() {
        for b in a + 1..emb.len() {
            if emb[a].side != emb[b].side {
                continue;
            }
            let (al, ah) = emb[a].interval();
            let (bl, bh) = emb[b].interval();
            let disjoint = ah < bl || bh < al;
            if disjoint {
                continue;
            }
            let (outer, inner) = if al <= bl && bh <= ah {
                (a, b)
            } else if bl <= al && ah <= bh {
                (b, a)
            } else {
                out.push(Crossing { a, b });
                continue;
            };
            if emb[outer].level <= emb[inner].level {
                out.push(LevelOrder { outer, inner });
            }
        }
    }
    for (ci, e) in emb.iter().enumerate() {
        for &(_, slot) in &e.legs {
            for (oi, o) in emb.iter().enumerate() {
                if oi == ci || o.side != e.side || o.level >= e.level {
                    continue;
                }
                let (lo, hi) = o.interval();
                if lo <= slot && slot <= hi {
                    out.push(LegThroughBody {
                        clause: ci,
                        slot,
                        other: oi,
                    });
                }
            }
        }
    }
    out
}

/// Searches side assignments (all-above first) for a valid embedding, with
/// levels from span nesting and legs ordered so nested spans never cross.
pub fn embed(num_vars: usize, clauses: &[[usize; 3]]) -> Result<Embedding, SourceError> {
    let m = clauses.len();
    let tries: u64 = if m >= 16 { 1 << 16 } else { 1 << m };
    for mask in 0..tries {
        let sides: Vec<Side> = (0..m)
            .map(|i| if i < 64 && mask >> i & 1 == 1 { Side::Below } else { Side::Above })
            .collect();
        let emb = layout(num_vars, clauses, &sides);
        if check(clauses, &emb.clauses).is_empty() {
            return Ok(emb);
        }
    }
    Err(SourceError::NoEmbedding)
}

/// Levels and slots for a fixed side assignment.
fn layout(num_vars: usize, clauses: &[[usize; 3]], sides: &[Side]) -> Embedding {
    let m = clauses.len();
    let span = |c: usize| {
        let v = clauses[c];
        (*v.iter().min().unwrap(), *v.iter().max().unwrap())
    };
    // Containment on variable spans; identical spans nest by clause index.
    let contains = |a: usize, b: usize| {
        let (al, ah) = span(a);
        let (bl, bh) = span(b);
        al <= bl && bh <= ah && ((al, ah) != (bl, bh) || b < a)
    };
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&c| (span(c).1 - span(c).0, c));
    let mut level = vec![1u32; m];
    for (i, &a) in order.iter().enumerate() {
        for &b in &order[..i] {
            if sides[a] == sides[b] && contains(a, b) {
                level[a] = level[a].max(level[b] + 1);
            }
        }
    }

    let mut legs = vec![[(0usize, 0usize); 3]; m];
    let mut slot = 0;
    for v in 0..num_vars {
        for side in [Side::Above, Side::Below] {
            let mut right = Vec::new();
            let mut middle = Vec::new();
            let mut left = Vec::new();
            for c in (0..m).filter(|&c| sides[c] == side && clauses[c].contains(&v)) {
                let (lo, hi) = span(c);
                if v == hi {
                    right.push(c);
                } else if v == lo {
                    left.push(c);
                } else {
                    middle.push(c);
                }
            }
            right.sort_by_key(|&c| (level[c], c));
            left.sort_by_key(|&c| (std::cmp::Reverse(level[c]), c));
            for c in right.into_iter().chain(middle).chain(left) {
                let k = clauses[c].iter().position(|&x| x == v).unwrap();
                legs[c][k] = (v, slot);
                slot += 1;
            }
        }
    }
    Embedding {
        clauses: (0..m)
            .map(|c| ClauseEmbedding {
                side: sides[c],
                level: level[c],
                legs: legs[c],
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    fn ce(side: Side, level: u32, legs: [(usize, usize); 3]) -> ClauseEmbedding {
        ClauseEmbedding { side, level, legs }
    }

    /// (x1,x2,x3) ∧ (x1,x3,x5) ∧ (x2,x4,x5): the first two above with the
    /// second enclosing the first, the third below.
    fn three_clause_example() -> (Vec<[usize; 3]>, Embedding) {
        let clauses = vec![[0, 1, 2], [0, 2, 4], [1, 3, 4]];
        let emb = Embedding {
            clauses: vec![
                ce(Side::Above, 1, [(0, 1), (1, 2), (2, 4)]),
                ce(Side::Above, 2, [(0, 0), (2, 5), (4, 8)]),
                ce(Side::Below, 1, [(1, 3), (3, 6), (4, 7)]),
            ],
        };
        (clauses, emb)
    }

    #[test]
    fn three_clause_example_is_valid() {
        let (clauses, emb) = three_clause_example();
        let inst = OneInThreeInstance::new(names(5), clauses.clone(), emb.clone()).unwrap();
        assert!(validate_embedding(&inst).is_empty());
        let found = embed(5, &clauses).unwrap();
        assert!(check(&clauses, &found.clauses).is_empty());
    }

    #[test]
    fn crossing_spans_are_rejected() {
        let clauses = vec![[0, 1, 2], [1, 2, 3]];
        let emb = Embedding {
            clauses: vec![
                ce(Side::Above, 1, [(0, 0), (1, 1), (2, 3)]),
                ce(Side::Above, 1, [(1, 2), (2, 4), (3, 5)]),
            ],
        };
        let inst = OneInThreeInstance::new_unchecked(names(4), clauses, emb).unwrap();
        let v = validate_embedding(&inst);
        assert!(v.contains(&EmbeddingViolation::Crossing { a: 0, b: 1 }), "{v:?}");
    }

    #[test]
    fn foreign_leg_is_rejected() {
        let clauses = vec![[0, 1, 2]];
        let emb = Embedding {
            clauses: vec![ce(Side::Above, 1, [(0, 0), (1, 1), (3, 2)])],
        };
        let inst = OneInThreeInstance::new_unchecked(names(4), clauses, emb).unwrap();
        assert_eq!(
            validate_embedding(&inst),
            vec![EmbeddingViolation::LegMismatch { clause: 0 }]
        );
    }

    #[test]
    fn nested_needs_higher_level() {
        let (clauses, mut emb) = three_clause_example();
        emb.clauses[1].level = 1;
        let inst = OneInThreeInstance::new_unchecked(names(5), clauses, emb).unwrap();
        assert!(validate_embedding(&inst)
            .contains(&EmbeddingViolation::LevelOrder { outer: 1, inner: 0 }));
    }

    #[test]
    fn two_clauses_always_embed() {
        let all: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 4], [1, 2, 3], [2, 3, 4]];
        for a in &all {
            for b in &all {
                assert!(embed(5, &[*a, *b]).is_ok(), "{a:?} {b:?}");
            }
        }
    }
}
