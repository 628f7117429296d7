//! Bounded graded lattices given by an explicit cover relation.
//!
//! Element ids are canonical: they are assigned by rank and, within a rank,
//! by construction order. The bottom element is always id `0` and the top
//! element is always the last id. Order queries go through a precomputed
//! reachability bit-matrix, so `leq` is a single bit lookup.

mod ops;
mod predicates;

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::fvector::FVector;
use crate::limits;

pub use ops::Interval;
pub use predicates::{ConeCheck, DiamondWitness, RankShortfall, Verdict};

pub type ElementId = usize;

/// An element handed to [`GradedLattice::build_from_covers`]; its id is its
/// position in the input slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedElement {
    pub rank: usize,
    pub label: Option<String>,
}

impl RankedElement {
    pub fn new(rank: usize) -> Self {
        Self { rank, label: None }
    }

    pub fn labeled(rank: usize, label: impl Into<String>) -> Self {
        Self {
            rank,
            label: Some(label.into()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GradedLattice {
    ranks: Vec<usize>,
    labels: Vec<Option<String>>,
    up: Vec<Vec<ElementId>>,
    down: Vec<Vec<ElementId>>,
    /// `above[x]` holds every `y` with `x <= y`.
    above: Vec<FixedBitSet>,
    /// `below[x]` holds every `y` with `y <= x`.
    below: Vec<FixedBitSet>,
    by_rank: Vec<Vec<ElementId>>,
}

impl GradedLattice {
    /// Validates a ranked cover relation and builds the lattice.
    pub fn build_from_covers(
        elements: &[RankedElement],
        covers: &[(usize, usize)],
    ) -> Result<Self> {
        Self::build_with_map(elements, covers).map(|(lattice, _)| lattice)
    }

    /// Like [`build_from_covers`](Self::build_from_covers), also returning the
    /// canonical id assigned to each input position.
    pub fn build_with_map(
        elements: &[RankedElement],
        covers: &[(usize, usize)],
    ) -> Result<(Self, Vec<ElementId>)> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::NotBounded("poset is empty".into()));
        }
        limits::ensure_within("lattice elements", n)?;

        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(lo, hi) in covers {
            if lo >= n {
                return Err(Error::UnknownElement(lo));
            }
            if hi >= n {
                return Err(Error::UnknownElement(hi));
            }
            if lo == hi {
                return Err(Error::CycleDetected(lo));
            }
            up[lo].push(hi);
            down[hi].push(lo);
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }

        // Kahn's algorithm; anything left unprocessed sits on a cycle.
        let mut indegree: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| indegree[x] == 0).collect();
        let mut seen = 0;
        while let Some(x) = queue.pop_front() {
            seen += 1;
            for &y in &up[x] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if seen < n {
            let culprit = (0..n).find(|&x| indegree[x] > 0).unwrap_or(0);
            return Err(Error::CycleDetected(culprit));
        }

        for (lo, uppers) in up.iter().enumerate() {
            for &hi in uppers {
                if elements[hi].rank != elements[lo].rank + 1 {
                    return Err(Error::NotGraded {
                        lower: lo,
                        upper: hi,
                        lower_rank: elements[lo].rank,
                        upper_rank: elements[hi].rank,
                    });
                }
            }
        }

        let minimal: Vec<usize> = (0..n).filter(|&x| down[x].is_empty()).collect();
        let maximal: Vec<usize> = (0..n).filter(|&x| up[x].is_empty()).collect();
        if minimal.len() != 1 {
            return Err(Error::NotBounded(format!(
                "{} minimal elements {:?}",
                minimal.len(),
                minimal
            )));
        }
        if maximal.len() != 1 {
            return Err(Error::NotBounded(format!(
                "{} maximal elements {:?}",
                maximal.len(),
                maximal
            )));
        }
        if elements[minimal[0]].rank != 0 {
            return Err(Error::NotBounded(format!(
                "bottom element {} has rank {}",
                minimal[0], elements[minimal[0]].rank
            )));
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| elements[x].rank);
        let mut canonical = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            canonical[old] = new;
        }

        let ranks: Vec<usize> = order.iter().map(|&old| elements[old].rank).collect();
        let labels: Vec<Option<String>> =
            order.iter().map(|&old| elements[old].label.clone()).collect();
        let remap = |list: &Vec<usize>| {
            let mut out: Vec<usize> = list.iter().map(|&x| canonical[x]).collect();
            out.sort_unstable();
            out
        };
        let up: Vec<Vec<usize>> = order.iter().map(|&old| remap(&up[old])).collect();
        let down: Vec<Vec<usize>> = order.iter().map(|&old| remap(&down[old])).collect();

        Ok((Self::from_canonical(ranks, labels, up, down), canonical))
    }

    /// Assembles a lattice from already-canonical, already-validated parts.
    fn from_canonical(
        ranks: Vec<usize>,
        labels: Vec<Option<String>>,
        up: Vec<Vec<ElementId>>,
        down: Vec<Vec<ElementId>>,
    ) -> Self {
        let n = ranks.len();
        let top_rank = ranks[n - 1];
        let mut by_rank = vec![Vec::new(); top_rank + 1];
        for (x, &r) in ranks.iter().enumerate() {
            by_rank[r].push(x);
        }

        // Ids increase with rank, so a reverse sweep sees every upper cover first.
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for x in (0..n).rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for &y in &up[x] {
                set.union_with(&above[y]);
            }
            above[x] = set;
        }
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for &y in &down[x] {
                set.union_with(&below[y]);
            }
            below[x] = set;
        }

        Self {
            ranks,
            labels,
            up,
            down,
            above,
            below,
            by_rank,
        }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn bottom(&self) -> ElementId {
        0
    }

    pub fn top(&self) -> ElementId {
        self.ranks.len() - 1
    }

    /// The rank of the top element, written `d + 1` for a face lattice of a
    /// `d`-dimensional object.
    pub fn rank(&self) -> usize {
        self.ranks[self.top()]
    }

    /// Dimension `d` of the object whose face lattice this is.
    pub fn dim(&self) -> usize {
        self.rank().saturating_sub(1)
    }

    pub fn rank_of(&self, x: ElementId) -> usize {
        self.ranks[x]
    }

    pub fn label(&self, x: ElementId) -> Option<&str> {
        self.labels[x].as_deref()
    }

    /// The label, or `#id` when the element is unlabeled.
    pub fn display_label(&self, x: ElementId) -> String {
        match &self.labels[x] {
            Some(l) => l.clone(),
            None => format!("#{x}"),
        }
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.len()
    }

    pub fn upper_covers(&self, x: ElementId) -> &[ElementId] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: ElementId) -> &[ElementId] {
        &self.down[x]
    }

    /// All cover pairs `(lower, upper)` in id order.
    pub fn covers(&self) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(x, ups)| ups.iter().map(move |&y| (x, y)))
    }

    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.above[x].contains(y)
    }

    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        x != y && self.leq(x, y)
    }

    /// `{y : x <= y}` as a bit set over element ids.
    pub fn upset(&self, x: ElementId) -> &FixedBitSet {
        &self.above[x]
    }

    /// `{y : y <= x}` as a bit set over element ids.
    pub fn downset(&self, x: ElementId) -> &FixedBitSet {
        &self.below[x]
    }

    pub fn elements_of_rank(&self, r: usize) -> &[ElementId] {
        self.by_rank.get(r).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn atoms(&self) -> &[ElementId] {
        self.elements_of_rank(1)
    }

    pub fn coatoms(&self) -> &[ElementId] {
        match self.rank() {
            0 => &[],
            r => self.elements_of_rank(r - 1),
        }
    }

    pub fn atoms_below(&self, x: ElementId) -> Vec<ElementId> {
        self.atoms()
            .iter()
            .copied()
            .filter(|&a| self.leq(a, x))
            .collect()
    }

    pub fn coatoms_above(&self, x: ElementId) -> Vec<ElementId> {
        self.coatoms()
            .iter()
            .copied()
            .filter(|&c| self.leq(x, c))
            .collect()
    }

    /// Rank counts `W_1 .. W_d`, i.e. `f_0 .. f_{d-1}`.
    pub fn f_vector(&self) -> FVector {
        let d = self.dim();
        FVector::new((1..=d).map(|r| self.elements_of_rank(r).len()).collect())
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        let mut common = self.below[x].clone();
        common.intersect_with(&self.below[y]);
        self.extreme_of(&common, |a, b| a > b, &self.below)
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        let mut common = self.above[x].clone();
        common.intersect_with(&self.above[y]);
        self.extreme_of(&common, |a, b| a < b, &self.above)
    }

    /// The element of `set` that dominates all others in `set`, where
    /// `better` orders ranks and `cone[w]` is the region `w` dominates.
    fn extreme_of(
        &self,
        set: &FixedBitSet,
        better: impl Fn(usize, usize) -> bool,
        cone: &[FixedBitSet],
    ) -> Option<ElementId> {
        let mut best: Option<ElementId> = None;
        let mut ties = 0;
        for z in set.ones() {
            match best {
                None => {
                    best = Some(z);
                    ties = 1;
                }
                Some(b) if better(self.ranks[z], self.ranks[b]) => {
                    best = Some(z);
                    ties = 1;
                }
                Some(b) if self.ranks[z] == self.ranks[b] => ties += 1,
                _ => {}
            }
        }
        let w = best?;
        (ties == 1 && set.is_subset(&cone[w])).then_some(w)
    }

    /// Replaces every label; the element order is unchanged.
    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> Self {
        assert_eq!(labels.len(), self.len(), "label count mismatch");
        self.labels = labels;
        self
    }

    pub(crate) fn labels(&self) -> &[Option<String>] {
        &self.labels
    }
}
