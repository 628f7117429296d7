use super::{ElementId, GradedLattice, RankedElement};
use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` materialized as its own lattice.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: ElementId,
    pub hi: ElementId,
    pub lattice: GradedLattice,
    /// `embedding[z]` is the parent id of interval element `z`.
    pub embedding: Vec<ElementId>,
}

impl GradedLattice {
    /// The sub-lattice `{z : lo <= z <= hi}` with ranks shifted down by `rank(lo)`.
    pub fn interval(&self, lo: ElementId, hi: ElementId) -> Result<Interval> {
        for x in [lo, hi] {
            if x >= self.len() {
                return Err(Error::UnknownElement(x));
            }
        }
        if !self.leq(lo, hi) {
            return Err(Error::NotComparable(lo, hi));
        }
        let mut members = self.upset(lo).clone();
        members.intersect_with(self.downset(hi));
        let embedding: Vec<ElementId> = members.ones().collect();
        let mut local = vec![usize::MAX; self.len()];
        for (i, &z) in embedding.iter().enumerate() {
            local[z] = i;
        }
        let base = self.rank_of(lo);
        let elements: Vec<RankedElement> = embedding
            .iter()
            .map(|&z| RankedElement {
                rank: self.rank_of(z) - base,
                label: self.labels()[z].clone(),
            })
            .collect();
        let covers: Vec<(usize, usize)> = embedding
            .iter()
            .flat_map(|&z| {
                self.upper_covers(z)
                    .iter()
                    .filter(|&&w| local[w] != usize::MAX)
                    .map(|&w| (local[z], local[w]))
                    .collect::<Vec<_>>()
            })
            .collect();
        // Parent ids are already rank-sorted, so canonical order is preserved.
        let lattice = GradedLattice::build_from_covers(&elements, &covers)?;
        Ok(Interval {
            lo,
            hi,
            lattice,
            embedding,
        })
    }

    /// `L x B^1` with the componentwise order. Element `(x, 0)` keeps the
    /// label of `x`; `(x, 1)` gets `apex_label` appended.
    pub fn pyramid_with_apex(&self, apex_label: &str) -> GradedLattice {
        let n = self.len();
        let mut elements = Vec::with_capacity(2 * n);
        for x in self.elements() {
            elements.push(RankedElement {
                rank: self.rank_of(x),
                label: self.labels()[x].clone(),
            });
        }
        for x in self.elements() {
            let label = if x == self.bottom() {
                apex_label.to_string()
            } else {
                format!("{}+{}", self.display_label(x), apex_label)
            };
            elements.push(RankedElement::labeled(self.rank_of(x) + 1, label));
        }
        let mut covers = Vec::with_capacity(2 * n + n);
        for (x, y) in self.covers() {
            covers.push((x, y));
            covers.push((n + x, n + y));
        }
        for x in self.elements() {
            covers.push((x, n + x));
        }
        GradedLattice::build_from_covers(&elements, &covers)
            .expect("pyramid of a bounded graded poset is bounded and graded")
    }

    pub fn pyramid(&self) -> GradedLattice {
        self.pyramid_with_apex("apex")
    }

    /// Order-reversed lattice, `rank*(x) = rank(L) - rank(x)`.
    pub fn dual(&self) -> GradedLattice {
        self.dual_with_map().0
    }

    /// The dual together with `map[x]`, the dual id of original element `x`.
    pub fn dual_with_map(&self) -> (GradedLattice, Vec<ElementId>) {
        let r = self.rank();
        let elements: Vec<RankedElement> = self
            .elements()
            .map(|x| RankedElement {
                rank: r - self.rank_of(x),
                label: self.labels()[x].clone(),
            })
            .collect();
        let covers: Vec<(usize, usize)> = self.covers().map(|(x, y)| (y, x)).collect();
        GradedLattice::build_with_map(&elements, &covers)
            .expect("dual of a bounded graded poset is bounded and graded")
    }
}

#[cfg(test)]
mod tests {
    use crate::constructions::{boolean_lattice, face_lattice_from_complex};
    use crate::complex::SimplicialComplex;

    fn square() -> crate::GradedLattice {
        let c = SimplicialComplex::from_index_facets(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]);
        face_lattice_from_complex(&c).unwrap()
    }

    #[test]
    fn pyramid_over_point_is_segment() {
        let point = boolean_lattice(1);
        let seg = point.pyramid();
        assert_eq!(seg.rank(), 2);
        assert!(seg.is_boolean());
        assert_eq!(seg.f_vector().counts(), &[2]);
    }

    #[test]
    fn square_pyramid_fvector_and_dual() {
        let p = square().pyramid();
        assert_eq!(p.f_vector().counts(), &[5, 8, 5]);
        assert_eq!(p.dual().f_vector().counts(), &[5, 8, 5]);
    }

    #[test]
    fn dual_is_an_involution_on_ids() {
        let l = square().pyramid();
        let dd = l.dual().dual();
        assert_eq!(dd.len(), l.len());
        for x in l.elements() {
            assert_eq!(dd.rank_of(x), l.rank_of(x));
            assert_eq!(dd.upper_covers(x), l.upper_covers(x));
        }
    }

    #[test]
    fn full_interval_is_the_lattice() {
        let l = square();
        let iv = l.interval(l.bottom(), l.top()).unwrap();
        assert_eq!(iv.lattice.len(), l.len());
        assert_eq!(iv.embedding, (0..l.len()).collect::<Vec<_>>());
        assert_eq!(iv.lattice.f_vector(), l.f_vector());
    }

    #[test]
    fn interval_requires_comparable_endpoints() {
        let l = square();
        let atoms = l.atoms().to_vec();
        assert!(l.interval(atoms[0], atoms[1]).is_err());
        assert!(l.interval(l.top(), l.bottom()).is_err());
    }

    #[test]
    fn upper_intervals_of_boolean_are_boolean() {
        let b = boolean_lattice(5);
        for t in b.elements() {
            let iv = b.interval(t, b.top()).unwrap();
            assert!(iv.lattice.is_boolean(), "[{t}, top]");
        }
    }
}
