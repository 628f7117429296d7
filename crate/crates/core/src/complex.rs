//! Finite abstract simplicial complexes stored by their facets.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::fvector::FVector;

pub type Vertex = u32;

/// A simplicial complex on vertices `0..n` with string labels.
///
/// Facets are kept sorted, deduplicated and inclusion-maximal, so two
/// complexes over the same labels compare equal exactly when they have the
/// same faces. The complex `{∅}` (a single empty facet) is allowed; it is the
/// link of a facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Vec<Vertex>>,
}

impl SimplicialComplex {
    pub fn new(labels: Vec<String>, facets: Vec<Vec<Vertex>>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n];
        let mut cleaned = Vec::with_capacity(facets.len());
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            for &v in &f {
                let slot = seen
                    .get_mut(v as usize)
                    .ok_or_else(|| Error::Malformed(format!("facet uses vertex {v}, only {n} labels")))?;
                *slot = true;
            }
            cleaned.push(f);
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Malformed(format!(
                "vertex {:?} lies in no facet",
                labels[v]
            )));
        }
        let mut by_label = HashMap::new();
        for l in &labels {
            if by_label.insert(l.as_str(), ()).is_some() {
                return Err(Error::Malformed(format!("duplicate vertex label {l:?}")));
            }
        }
        Ok(Self {
            labels,
            facets: maximal_only(cleaned),
        })
    }

    /// Vertices labeled `"0" .. "n-1"`. Panics on malformed input; meant for
    /// literals in constructions and tests.
    pub fn from_index_facets(n: usize, facets: &[Vec<usize>]) -> Self {
        let labels = (0..n).map(|v| v.to_string()).collect();
        let facets = facets
            .iter()
            .map(|f| f.iter().map(|&v| v as Vertex).collect())
            .collect();
        Self::new(labels, facets).expect("well-formed literal complex")
    }

    /// Builds from facets given as label lists.
    pub fn from_labeled_facets(labels: Vec<String>, facets: &[Vec<String>]) -> Result<Self> {
        let index: HashMap<&str, Vertex> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i as Vertex))
            .collect();
        let mut out = Vec::with_capacity(facets.len());
        for f in facets {
            let mut face = Vec::with_capacity(f.len());
            for l in f {
                face.push(*index.get(l.as_str()).ok_or_else(|| Error::UnknownVertex(l.clone()))?);
            }
            out.push(face);
        }
        Self::new(labels, out)
    }

    /// Boundary of the `d`-simplex on vertices `0..=d`.
    pub fn simplex_boundary(d: usize) -> Self {
        let facets: Vec<Vec<usize>> = (0..=d)
            .map(|skip| (0..=d).filter(|&v| v != skip).collect())
            .collect();
        Self::from_index_facets(d + 1, &facets)
    }

    /// The full `d`-simplex on vertices `0..=d`.
    pub fn simplex(d: usize) -> Self {
        Self::from_index_facets(d + 1, &[(0..=d).collect()])
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v as usize]
    }

    pub fn vertex(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().position(|l| l == label).map(|v| v as Vertex)
    }

    pub fn facets(&self) -> &[Vec<Vertex>] {
        &self.facets
    }

    /// Dimension of the largest facet; `-1` for `{∅}` or the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: &[Vertex]) -> bool {
        let mut sorted = face.to_vec();
        sorted.sort_unstable();
        self.facets.iter().any(|f| is_sorted_subset(&sorted, f))
    }

    /// Every nonempty face, grouped by dimension; each group sorted.
    pub fn faces_by_dim(&self) -> Vec<Vec<Vec<Vertex>>> {
        let top = self.dim();
        if top < 0 {
            return Vec::new();
        }
        let mut groups: Vec<BTreeSet<Vec<Vertex>>> = vec![BTreeSet::new(); top as usize + 1];
        for f in &self.facets {
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                let face: Vec<Vertex> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                groups[face.len() - 1].insert(face);
            }
        }
        groups.into_iter().map(|g| g.into_iter().collect()).collect()
    }

    /// Number of nonempty faces in each dimension.
    pub fn f_vector(&self) -> FVector {
        FVector::new(self.faces_by_dim().iter().map(Vec::len).collect())
    }

    pub fn face_labels(&self, face: &[Vertex]) -> Vec<String> {
        face.iter().map(|&v| self.label(v).to_string()).collect()
    }

    /// Drops unused vertices and renumbers the rest in label-preserving order.
    pub(crate) fn compacted(labels: &[String], facets: Vec<Vec<Vertex>>) -> Self {
        let mut used: Vec<Vertex> = facets.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        let mut new_id = HashMap::new();
        for (i, &v) in used.iter().enumerate() {
            new_id.insert(v, i as Vertex);
        }
        let new_labels = used.iter().map(|&v| labels[v as usize].clone()).collect();
        let facets = facets
            .into_iter()
            .map(|f| f.into_iter().map(|v| new_id[&v]).collect())
            .collect();
        Self::new(new_labels, facets).expect("compaction keeps the complex well-formed")
    }
}

pub(crate) fn is_sorted_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    let mut it = big.iter();
    small.iter().all(|v| it.any(|w| w == v))
}

fn maximal_only(mut facets: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
    facets.sort_unstable();
    facets.dedup();
    let uniform = facets.windows(2).all(|w| w[0].len() == w[1].len());
    if uniform {
        return facets;
    }
    let mut by_size = facets.clone();
    by_size.sort_by_key(|f| std::cmp::Reverse(f.len()));
    facets.retain(|f| {
        !by_size
            .iter()
            .any(|g| g.len() > f.len() && is_sorted_subset(f, g))
    });
    facets
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_maximal_facets_are_dropped() {
        let c = SimplicialComplex::from_index_facets(3, &[vec![0, 1, 2], vec![1, 0], vec![2]]);
        assert_eq!(c.facets(), &[vec![0, 1, 2]]);
        assert_eq!(c.dim(), 2);
    }

    #[test]
    fn simplex_boundary_counts() {
        let c = SimplicialComplex::simplex_boundary(3);
        assert_eq!(c.f_vector().counts(), &[4, 6, 4]);
        assert!(c.is_pure());
        assert!(c.contains_face(&[3, 1]));
    }

    #[test]
    fn unused_vertex_is_malformed() {
        let err = SimplicialComplex::new(vec!["a".into(), "b".into()], vec![vec![0]]).unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));
    }

    #[test]
    fn out_of_range_vertex_is_malformed() {
        let err = SimplicialComplex::new(vec!["a".into()], vec![vec![0, 4]]).unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));
    }

    #[test]
    fn empty_face_complex() {
        let c = SimplicialComplex::new(vec![], vec![vec![]]).unwrap();
        assert_eq!(c.dim(), -1);
        assert!(c.faces_by_dim().is_empty());
    }
}
