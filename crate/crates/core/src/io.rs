//! JSON forms of lattices and simplicial complexes.
//!
//! Lattice: `{"rank": r, "elements": [{"id": 0, "rank": 0, "label": "..."}],
//! "covers": [[lo, hi], ...]}`; the label is optional and ids may be any
//! distinct nonnegative integers.
//!
//! Complex: `{"vertices": ["a", ...], "facets": [["a", "b"], ...]}`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::lattice::{GradedLattice, RankedElement};

#[derive(Serialize, Deserialize)]
struct ElementJson {
    id: usize,
    rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeJson {
    rank: usize,
    elements: Vec<ElementJson>,
    covers: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    vertices: Vec<String>,
    facets: Vec<Vec<String>>,
}

pub fn lattice_to_json(lattice: &GradedLattice) -> String {
    let doc = LatticeJson {
        rank: lattice.rank(),
        elements: lattice
            .elements()
            .map(|x| ElementJson {
                id: x,
                rank: lattice.rank_of(x),
                label: lattice.label(x).map(str::to_string),
            })
            .collect(),
        covers: lattice.covers().map(|(a, b)| [a, b]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("lattice serializes")
}

pub fn lattice_from_json(text: &str) -> Result<GradedLattice> {
    let doc: LatticeJson = serde_json::from_str(text)?;
    let mut position = HashMap::new();
    for (i, e) in doc.elements.iter().enumerate() {
        if position.insert(e.id, i).is_some() {
            return Err(Error::DuplicateElement(e.id));
        }
    }
    let elements: Vec<RankedElement> = doc
        .elements
        .iter()
        .map(|e| RankedElement {
            rank: e.rank,
            label: e.label.clone(),
        })
        .collect();
    let covers = doc
        .covers
        .iter()
        .map(|&[a, b]| {
            let pa = *position.get(&a).ok_or(Error::UnknownElement(a))?;
            let pb = *position.get(&b).ok_or(Error::UnknownElement(b))?;
            Ok((pa, pb))
        })
        .collect::<Result<Vec<_>>>()?;
    let lattice = GradedLattice::build_from_covers(&elements, &covers)?;
    if lattice.rank() != doc.rank {
        return Err(Error::Malformed(format!(
            "declared rank {} but the top element has rank {}",
            doc.rank,
            lattice.rank()
        )));
    }
    Ok(lattice)
}

pub fn complex_to_json(complex: &SimplicialComplex) -> String {
    let doc = ComplexJson {
        vertices: complex.labels().to_vec(),
        facets: complex.facets().iter().map(|f| complex.face_labels(f)).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("complex serializes")
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    let doc: ComplexJson = serde_json::from_str(text)?;
    SimplicialComplex::from_labeled_facets(doc.vertices, &doc.facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::nabla;

    #[test]
    fn lattice_round_trip() {
        let l = nabla(3).unwrap();
        let back = lattice_from_json(&lattice_to_json(&l)).unwrap();
        assert_eq!(back.f_vector(), l.f_vector());
        assert_eq!(back.covers().collect::<Vec<_>>(), l.covers().collect::<Vec<_>>());
        for x in l.elements() {
            assert_eq!(back.label(x), l.label(x));
        }
    }

    #[test]
    fn arbitrary_ids_and_missing_labels() {
        let text = r#"{"rank": 2, "elements": [{"id": 10, "rank": 2}, {"id": 7, "rank": 0},
            {"id": 3, "rank": 1, "label": "a"}, {"id": 4, "rank": 1}],
            "covers": [[7, 3], [7, 4], [3, 10], [4, 10]]}"#;
        let l = lattice_from_json(text).unwrap();
        assert_eq!(l.f_vector().counts(), &[2]);
        assert_eq!(l.label(1), Some("a"));
    }

    #[test]
    fn malformed_lattices() {
        let dup = r#"{"rank": 1, "elements": [{"id": 0, "rank": 0}, {"id": 0, "rank": 1}], "covers": []}"#;
        assert!(matches!(lattice_from_json(dup), Err(Error::DuplicateElement(0))));
        let unknown = r#"{"rank": 1, "elements": [{"id": 0, "rank": 0}, {"id": 1, "rank": 1}], "covers": [[0, 5]]}"#;
        assert!(matches!(lattice_from_json(unknown), Err(Error::UnknownElement(5))));
        let wrong_rank = r#"{"rank": 3, "elements": [{"id": 0, "rank": 0}, {"id": 1, "rank": 1}], "covers": [[0, 1]]}"#;
        assert!(matches!(lattice_from_json(wrong_rank), Err(Error::Malformed(_))));
        assert!(matches!(lattice_from_json("{"), Err(Error::Json(_))));
    }

    #[test]
    fn complex_round_trip() {
        let c = SimplicialComplex::simplex_boundary(3);
        assert_eq!(complex_from_json(&complex_to_json(&c)).unwrap(), c);
        let bad = r#"{"vertices": ["a"], "facets": [["a", "b"]]}"#;
        assert!(matches!(complex_from_json(bad), Err(Error::UnknownVertex(_))));
    }
}
