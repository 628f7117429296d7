use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{ElementId, GradedLattice};
use crate::bounds::binomial_u128;

/// Outcome of a structural predicate: it holds, or it fails with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// A rank-2 interval whose middle does not have exactly two elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiamondWitness {
    pub lo: ElementId,
    pub hi: ElementId,
    pub middle: Vec<ElementId>,
}

/// An upper interval `[t, top]` with fewer elements of relative rank `r`
/// than the Boolean lattice of the same rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankShortfall {
    pub element: ElementId,
    pub relative_rank: usize,
    pub count: usize,
    pub boolean_count: u128,
}

/// Hypothesis and conclusion of the all-cones criterion on one interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConeCheck {
    /// Every coatom of the interval misses exactly one of its atoms.
    pub hypothesis: bool,
    /// Whether the interval is Boolean; only evaluated when the hypothesis holds.
    pub conclusion: Option<bool>,
}

impl ConeCheck {
    /// The implication "hypothesis => Boolean" is satisfied.
    pub fn consistent(&self) -> bool {
        !self.hypothesis || self.conclusion == Some(true)
    }
}

impl GradedLattice {
    /// Every pair has a meet and a join. On failure the witness is the first
    /// offending pair in id order.
    pub fn is_lattice(&self) -> Verdict<(ElementId, ElementId)> {
        for x in self.elements() {
            for y in (x + 1)..self.len() {
                if self.leq(x, y) || self.leq(y, x) {
                    continue;
                }
                if self.join(x, y).is_none() || self.meet(x, y).is_none() {
                    return Verdict::Fails((x, y));
                }
            }
        }
        Verdict::Holds
    }

    /// Every rank-2 interval has exactly two middle elements.
    pub fn is_diamond(&self) -> Verdict<DiamondWitness> {
        let mut middles: HashMap<ElementId, Vec<ElementId>> = HashMap::new();
        for x in self.elements() {
            middles.clear();
            for &y in self.upper_covers(x) {
                for &z in self.upper_covers(y) {
                    middles.entry(z).or_default().push(y);
                }
            }
            let mut bad: Vec<_> = middles.iter().filter(|(_, m)| m.len() != 2).collect();
            bad.sort_by_key(|(z, _)| **z);
            if let Some((&hi, middle)) = bad.first() {
                return Verdict::Fails(DiamondWitness {
                    lo: x,
                    hi,
                    middle: middle.to_vec(),
                });
            }
        }
        Verdict::Holds
    }

    /// For every ordered pair `(t, s)` of distinct same-rank proper elements
    /// some coatom lies above `t` but not above `s`. Witness is `(t, s)`.
    pub fn is_coatom_distinguishable(&self) -> Verdict<(ElementId, ElementId)> {
        let r = self.rank();
        if r < 2 {
            return Verdict::Holds;
        }
        let mut coatom_mask = FixedBitSet::with_capacity(self.len());
        for &c in self.coatoms() {
            coatom_mask.insert(c);
        }
        let coatoms_over: Vec<FixedBitSet> = self
            .elements()
            .map(|x| {
                let mut s = self.upset(x).clone();
                s.intersect_with(&coatom_mask);
                s
            })
            .collect();
        for rank in 1..r {
            let level = self.elements_of_rank(rank);
            for &t in level {
                for &s in level {
                    if t != s && coatoms_over[t].is_subset(&coatoms_over[s]) {
                        return Verdict::Fails((t, s));
                    }
                }
            }
        }
        Verdict::Holds
    }

    pub fn is_boolean(&self) -> bool {
        self.is_boolean_interval(self.bottom(), self.top())
    }

    /// Atom-support test on `[lo, hi]`: `2^n` elements for `n` atoms, every
    /// element's relative rank equals its atom count, and distinct elements
    /// have distinct atom sets.
    pub fn is_boolean_interval(&self, lo: ElementId, hi: ElementId) -> bool {
        if !self.leq(lo, hi) {
            return false;
        }
        let mut members = self.upset(lo).clone();
        members.intersect_with(self.downset(hi));
        let base = self.rank_of(lo);
        let mut atom_mask = FixedBitSet::with_capacity(self.len());
        for z in members.ones() {
            if self.rank_of(z) == base + 1 {
                atom_mask.insert(z);
            }
        }
        let n_atoms = atom_mask.count_ones(..);
        if n_atoms >= 63 || members.count_ones(..) != 1usize << n_atoms {
            return false;
        }
        let mut supports = HashSet::new();
        for z in members.ones() {
            let mut support = atom_mask.clone();
            support.intersect_with(self.downset(z));
            if support.count_ones(..) != self.rank_of(z) - base {
                return false;
            }
            if !supports.insert(support.ones().collect::<Vec<_>>()) {
                return false;
            }
        }
        true
    }

    /// Each upper interval `[t, top]` has at least `C(rank(L) - rank(t), r)`
    /// elements of relative rank `r`.
    pub fn check_upper_intervals_atleast_boolean(&self) -> Verdict<RankShortfall> {
        let top_rank = self.rank();
        for t in self.elements() {
            let height = top_rank - self.rank_of(t);
            let mut counts = vec![0usize; height + 1];
            for z in self.upset(t).ones() {
                counts[self.rank_of(z) - self.rank_of(t)] += 1;
            }
            for (r, &count) in counts.iter().enumerate() {
                let boolean_count = binomial_u128(height as u64, r as u64);
                if (count as u128) < boolean_count {
                    return Verdict::Fails(RankShortfall {
                        element: t,
                        relative_rank: r,
                        count,
                        boolean_count,
                    });
                }
            }
        }
        Verdict::Holds
    }

    /// If every coatom of `[x, y]` lies above all atoms of `[x, y]` but one,
    /// the interval must be Boolean.
    pub fn check_all_cones_boolean(&self, x: ElementId, y: ElementId) -> ConeCheck {
        if !self.leq(x, y) || self.rank_of(y) - self.rank_of(x) < 1 {
            return ConeCheck {
                hypothesis: false,
                conclusion: None,
            };
        }
        let (rx, ry) = (self.rank_of(x), self.rank_of(y));
        let mut members = self.upset(x).clone();
        members.intersect_with(self.downset(y));
        let atoms: Vec<ElementId> = members.ones().filter(|&z| self.rank_of(z) == rx + 1).collect();
        let coatoms: Vec<ElementId> = members.ones().filter(|&z| self.rank_of(z) + 1 == ry).collect();
        let hypothesis = coatoms.iter().all(|&c| {
            atoms.iter().filter(|&&a| !self.leq(a, c)).count() == 1
        });
        ConeCheck {
            hypothesis,
            conclusion: hypothesis.then(|| self.is_boolean_interval(x, y)),
        }
    }
}
