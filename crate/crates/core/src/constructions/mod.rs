//! Face lattices of the polytope families: simplices, joins of simplex
//! boundaries and their pyramids, prisms, stacked polytopes and the dual of
//! a stacked square pyramid.

mod spec;

use std::collections::HashMap;

use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::lattice::{ElementId, GradedLattice, RankedElement};

pub use spec::{zoo, zoo_specs, PolytopeSpec, ZooEntry};

fn set_label(items: impl IntoIterator<Item = String>) -> String {
    format!("{{{}}}", items.into_iter().collect::<Vec<_>>().join(","))
}

/// `B^n`: all subsets of `{0, .., n-1}` ranked by size. This is the face
/// lattice of the `(n-1)`-simplex.
pub fn boolean_lattice(n: usize) -> GradedLattice {
    assert!(n < 20, "B^{n} is too large to materialize");
    let mut masks: Vec<u32> = (0..(1u32 << n)).collect();
    masks.sort_by_key(|&m| (m.count_ones(), (0..n).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>()));
    let index: HashMap<u32, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let elements: Vec<RankedElement> = masks
        .iter()
        .map(|&m| {
            RankedElement::labeled(
                m.count_ones() as usize,
                set_label((0..n).filter(|i| m >> i & 1 == 1).map(|i| i.to_string())),
            )
        })
        .collect();
    let mut covers = Vec::new();
    for &m in &masks {
        for i in 0..n {
            if m >> i & 1 == 0 {
                covers.push((index[&m], index[&(m | 1 << i)]));
            }
        }
    }
    GradedLattice::build_from_covers(&elements, &covers).expect("Boolean lattice is graded")
}

/// All faces of `complex` ordered by inclusion, with the empty face as bottom
/// and a new top. Fails with `NotGraded` when the complex is not pure.
pub fn face_lattice_from_complex(complex: &SimplicialComplex) -> Result<GradedLattice> {
    let groups = complex.faces_by_dim();
    let mut elements = vec![RankedElement::labeled(0, "{}")];
    let mut index: HashMap<Vec<Vertex>, usize> = HashMap::new();
    index.insert(Vec::new(), 0);
    for group in &groups {
        for face in group {
            index.insert(face.clone(), elements.len());
            elements.push(RankedElement::labeled(face.len(), set_label(complex.face_labels(face))));
        }
    }
    let top = elements.len();
    let top_rank = (complex.dim() + 2) as usize;
    elements.push(RankedElement::labeled(top_rank, "top"));

    let mut covers = Vec::new();
    for group in &groups {
        for face in group {
            let id = index[face];
            for skip in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(skip);
                covers.push((index[&sub], id));
            }
        }
    }
    for f in complex.facets() {
        covers.push((index[f], top));
    }
    GradedLattice::build_from_covers(&elements, &covers)
}

/// Applies the pyramid operation `times` times; apexes are labeled `a1, a2, ..`.
pub fn pyramid_times(lattice: &GradedLattice, times: usize) -> GradedLattice {
    let mut out = lattice.clone();
    for t in 1..=times {
        out = out.pyramid_with_apex(&format!("a{t}"));
    }
    out
}

/// The join `∂Δ^m * ∂Δ^(i-m)`: vertices `p0..pm` and `n0..n(i-m)`, faces are
/// the sets containing neither all `p`'s nor all `n`'s.
pub fn tdm_simplicial(i: usize, m: usize) -> Result<SimplicialComplex> {
    if m < 1 || 2 * m > i {
        return Err(Error::SpecInvariantViolated(format!(
            "tdm needs 1 <= m <= floor(i/2), got i={i}, m={m}"
        )));
    }
    let p = m + 1;
    let n = i + 1 - m;
    let labels: Vec<String> = (0..p)
        .map(|k| format!("p{k}"))
        .chain((0..n).map(|k| format!("n{k}")))
        .collect();
    let mut facets = Vec::with_capacity(p * n);
    for drop_p in 0..p {
        for drop_n in 0..n {
            let facet: Vec<Vertex> = (0..p)
                .filter(|&k| k != drop_p)
                .chain((0..n).filter(|&k| k != drop_n).map(|k| k + p))
                .map(|v| v as Vertex)
                .collect();
            facets.push(facet);
        }
    }
    SimplicialComplex::new(labels, facets)
}

/// `T^{d,d-i}_m`: the `(d-i)`-fold pyramid over the boundary join of
/// [`tdm_simplicial`].
pub fn tdm_lattice(d: usize, i: usize, m: usize) -> Result<GradedLattice> {
    if i < 2 || i > d {
        return Err(Error::SpecInvariantViolated(format!(
            "tdm needs 2 <= i <= d, got d={d}, i={i}"
        )));
    }
    let base = face_lattice_from_complex(&tdm_simplicial(i, m)?)?;
    Ok(pyramid_times(&base, d - i))
}

/// Face lattice of the product of two polytopes: pairs of nonempty faces,
/// ranked by `rank(x) + rank(y) - 1`, under a fresh bottom.
pub fn product_polytope_lattice(a: &GradedLattice, b: &GradedLattice) -> GradedLattice {
    let pairs: Vec<(ElementId, ElementId)> = a
        .elements()
        .skip(1)
        .flat_map(|x| b.elements().skip(1).map(move |y| (x, y)))
        .collect();
    let index: HashMap<(ElementId, ElementId), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
    let mut elements = vec![RankedElement::labeled(0, "{}")];
    for &(x, y) in &pairs {
        elements.push(RankedElement::labeled(
            a.rank_of(x) + b.rank_of(y) - 1,
            format!("{}x{}", a.display_label(x), b.display_label(y)),
        ));
    }
    let mut covers = Vec::new();
    for &(x, y) in &pairs {
        let id = index[&(x, y)];
        if a.rank_of(x) == 1 && b.rank_of(y) == 1 {
            covers.push((0, id));
        }
        for &x2 in a.upper_covers(x) {
            covers.push((id, index[&(x2, y)]));
        }
        for &y2 in b.upper_covers(y) {
            covers.push((id, index[&(x, y2)]));
        }
    }
    GradedLattice::build_from_covers(&elements, &covers).expect("product of face lattices is graded")
}

/// The prism `Δ^1 x Δ^(s-1)`.
pub fn prism(s: usize) -> Result<GradedLattice> {
    if s < 1 {
        return Err(Error::SpecInvariantViolated("prism needs s >= 1".into()));
    }
    Ok(product_polytope_lattice(&boolean_lattice(2), &boolean_lattice(s)))
}

/// `Pyr^(d-s)(Δ^1 x Δ^(s-1))`, the polytope with `d + s` vertices whose face
/// numbers are the smallest possible.
pub fn grunbaum_minimizer(d: usize, s: usize) -> Result<GradedLattice> {
    if s < 2 || s > d {
        return Err(Error::SpecInvariantViolated(format!(
            "gmin needs 2 <= s <= d, got d={d}, s={s}"
        )));
    }
    Ok(pyramid_times(&prism(s)?, d - s))
}

/// Coatoms whose lower interval is Boolean, ordered by their sorted atom
/// lists; the first one is the lexicographically smallest simplex facet.
pub fn simplex_facets(lattice: &GradedLattice) -> Vec<ElementId> {
    let mut facets: Vec<(Vec<ElementId>, ElementId)> = lattice
        .coatoms()
        .iter()
        .copied()
        .filter(|&f| lattice.is_boolean_interval(lattice.bottom(), f))
        .map(|f| (lattice.atoms_below(f), f))
        .collect();
    facets.sort();
    facets.into_iter().map(|(_, f)| f).collect()
}

/// Combinatorial stacking: `facet` is removed and every proper face `G` of it
/// gains a cone `{w} ∪ G` over the new vertex `w`.
pub fn stack_over_facet(
    lattice: &GradedLattice,
    facet: ElementId,
    vertex_label: &str,
) -> Result<GradedLattice> {
    if facet >= lattice.len() {
        return Err(Error::UnknownElement(facet));
    }
    if !lattice.coatoms().contains(&facet) {
        return Err(Error::NotACoatom(facet));
    }
    if !lattice.is_boolean_interval(lattice.bottom(), facet) {
        return Err(Error::FacetNotSimplex(facet));
    }

    let labels = lattice.labels();
    let mut elements = Vec::with_capacity(lattice.len() * 2);
    let mut old_index = vec![usize::MAX; lattice.len()];
    for x in lattice.elements().filter(|&x| x != facet) {
        old_index[x] = elements.len();
        elements.push(RankedElement {
            rank: lattice.rank_of(x),
            label: labels[x].clone(),
        });
    }
    let mut cone_index = vec![usize::MAX; lattice.len()];
    let boundary: Vec<ElementId> = lattice
        .downset(facet)
        .ones()
        .filter(|&g| g != facet)
        .collect();
    for &g in &boundary {
        cone_index[g] = elements.len();
        let label = if g == lattice.bottom() {
            vertex_label.to_string()
        } else {
            format!("{}+{}", lattice.display_label(g), vertex_label)
        };
        elements.push(RankedElement::labeled(lattice.rank_of(g) + 1, label));
    }

    let mut covers = Vec::new();
    for (x, y) in lattice.covers() {
        if x != facet && y != facet {
            covers.push((old_index[x], old_index[y]));
        }
    }
    let facet_rank = lattice.rank_of(facet);
    for &g in &boundary {
        covers.push((old_index[g], cone_index[g]));
        for &h in lattice.upper_covers(g) {
            if h != facet && cone_index[h] != usize::MAX {
                covers.push((cone_index[g], cone_index[h]));
            }
        }
        if lattice.rank_of(g) + 1 == facet_rank {
            covers.push((cone_index[g], old_index[lattice.top()]));
        }
    }
    GradedLattice::build_from_covers(&elements, &covers)
}

/// Stacks on the lexicographically smallest simplex facet.
pub fn stack_on_smallest_simplex_facet(
    lattice: &GradedLattice,
    vertex_label: &str,
) -> Result<GradedLattice> {
    let facet = *simplex_facets(lattice).first().ok_or(Error::NoSimplexFacet)?;
    stack_over_facet(lattice, facet, vertex_label)
}

/// `Δ^d` stacked `n - d - 1` times.
pub fn stacked_polytope(d: usize, n: usize) -> Result<GradedLattice> {
    if n < d + 1 {
        return Err(Error::SpecInvariantViolated(format!(
            "stacked polytope needs n >= d + 1, got d={d}, n={n}"
        )));
    }
    let mut out = boolean_lattice(d + 1);
    for j in 1..=(n - d - 1) {
        out = stack_on_smallest_simplex_facet(&out, &format!("w{j}"))?;
    }
    Ok(out)
}

/// The dual of `T^{d,d-2}_1` (a `(d-2)`-fold pyramid over a square) stacked
/// over one simplex facet.
pub fn nabla(d: usize) -> Result<GradedLattice> {
    if d < 2 {
        return Err(Error::SpecInvariantViolated(format!("nabla needs d >= 2, got {d}")));
    }
    let base = tdm_lattice(d, 2, 1)?;
    Ok(stack_on_smallest_simplex_facet(&base, "w")?.dual())
}
