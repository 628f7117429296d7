//! Recognizing dual-simplicial lattices and lattices with `d + 2` facets.

use std::collections::BTreeSet;

use super::order_complex;
use crate::constructions::tdm_lattice;
use crate::error::Result;
use crate::lattice::{ElementId, GradedLattice};
use crate::report::{CheckReport, Witness};

/// Every proper upper interval `[t, top]` is Boolean; then the order
/// complexes of `L` and its dual coincide under the identity on elements,
/// and the dual is the face lattice of the simplicial complex whose faces are
/// the coatom sets above each proper element.
pub fn check_dual_simplicial(lattice: &GradedLattice) -> Result<CheckReport> {
    let mut r = CheckReport::new("dual-simplicial").param("d", lattice.dim());
    for t in 1..lattice.top() {
        if !lattice.is_boolean_interval(t, lattice.top()) {
            r.push_witness(Witness::new("upper interval is not Boolean").with_elements(lattice, &[t]));
        }
    }
    if !r.passed() {
        return Ok(r);
    }

    let (dual, map) = lattice.dual_with_map();
    let mut inverse = vec![0; map.len()];
    for (x, &y) in map.iter().enumerate() {
        inverse[y] = x;
    }
    let chains = |l: &GradedLattice, to_original: &dyn Fn(ElementId) -> ElementId| -> Result<BTreeSet<Vec<ElementId>>> {
        Ok(order_complex(l)?
            .facets()
            .iter()
            .map(|f| {
                let mut c: Vec<ElementId> = f.iter().map(|&v| to_original(v as usize + 1)).collect();
                c.sort_unstable();
                c
            })
            .collect())
    };
    let here = chains(lattice, &|x| x)?;
    let there = chains(&dual, &|y| inverse[y])?;
    if here != there {
        r.push_witness(Witness::new("order complexes of the lattice and its dual differ"));
    }

    let faces: BTreeSet<Vec<ElementId>> = (1..lattice.top()).map(|t| lattice.coatoms_above(t)).collect();
    r.set_param("dual_vertices", lattice.coatoms().len());
    r.set_param("dual_faces", faces.len());
    if faces.len() != lattice.len() - 2 {
        r.push_witness(Witness::new("distinct proper elements share their coatom set"));
    }
    Ok(r)
}

/// If `L` is a pyramid, returns the apex atom and the base coatom.
///
/// `L` is a pyramid with apex `a` over the coatom `F` exactly when `F` lies
/// above every atom but `a`, and `x -> x ∨ a` maps `[0, F]` bijectively onto
/// the elements not below `F`, raising rank by one.
fn pyramid_apex(lattice: &GradedLattice) -> Option<(ElementId, ElementId)> {
    let atoms = lattice.atoms();
    for &f in lattice.coatoms() {
        let below = lattice.atoms_below(f);
        if below.len() + 1 != atoms.len() {
            continue;
        }
        let apex = *atoms.iter().find(|a| !below.contains(a))?;
        let base: Vec<ElementId> = lattice.downset(f).ones().collect();
        if 2 * base.len() != lattice.len() {
            continue;
        }
        let mut images = BTreeSet::new();
        let ok = base.iter().all(|&x| match lattice.join(x, apex) {
            Some(y) if lattice.rank_of(y) == lattice.rank_of(x) + 1 && !lattice.leq(y, f) => images.insert(y),
            _ => false,
        });
        if ok && images.len() == base.len() {
            return Some((apex, f));
        }
    }
    None
}

/// Identifies a lattice with `d + 2` coatoms as a `(d-i)`-fold pyramid over
/// the dual of `∂Δ^m * ∂Δ^(i-m)`: pyramids are peeled off, the remaining
/// dual must be simplicial with `i + 2` atoms, and its facets must be exactly
/// the complements of the edges of a complete bipartite graph `K_{m+1, i+1-m}`.
/// The f-vector is then compared with the dual of the constructed `T^{d,d-i}_m`.
///
/// Lattices with a different number of coatoms are reported as skipped.
pub fn check_d_plus_2_facets_polytopal(lattice: &GradedLattice) -> Result<CheckReport> {
    let d = lattice.dim();
    let facets = lattice.coatoms().len();
    let name = "d-plus-2-facets";
    if facets != d + 2 {
        return Ok(CheckReport::skipped(
            name,
            format!("{facets} facets, the check covers exactly d + 2 = {}", d + 2),
        )
        .param("d", d)
        .param("facets", facets));
    }

    let mut core = lattice.clone();
    let mut steps = 0;
    while let Some((_, base)) = pyramid_apex(&core) {
        core = core.interval(core.bottom(), base)?.lattice;
        steps += 1;
    }
    let i = core.dim();
    let mut r = CheckReport::new(name).param("d", d).param("pyramid_steps", steps);
    if i < 2 || core.coatoms().len() != i + 2 {
        r.push_witness(Witness::new(format!(
            "after {steps} pyramid steps: dimension {i} with {} facets",
            core.coatoms().len()
        )));
        return Ok(r);
    }

    // Work in the dual: atoms are the facets of `core`.
    let dual = core.dual();
    let atoms = dual.atoms().to_vec();
    for &f in dual.coatoms() {
        if !dual.is_boolean_interval(dual.bottom(), f) {
            r.push_witness(Witness::new("dual facet is not a simplex").with_elements(&dual, &[f]));
        }
    }
    let mut missing_pairs = Vec::new();
    for &f in dual.coatoms() {
        let below = dual.atoms_below(f);
        let missing: Vec<usize> = (0..atoms.len()).filter(|&j| !below.contains(&atoms[j])).collect();
        if missing.len() != 2 {
            r.push_witness(Witness::new(format!("dual facet misses {} vertices, not 2", missing.len())));
        } else {
            missing_pairs.push((missing[0], missing[1]));
        }
    }
    if !r.passed() {
        return Ok(r);
    }
    let Some((p_side, n_side)) = complete_bipartite_sides(atoms.len(), &missing_pairs) else {
        r.push_witness(Witness::new("missing vertex pairs do not form a complete bipartite graph"));
        return Ok(r);
    };
    let m = p_side.min(n_side) - 1;
    r.set_param("i", i);
    r.set_param("m", m);
    let expected = tdm_lattice(d, i, m)?.dual().f_vector();
    if lattice.f_vector() != expected {
        r.push_witness(Witness::new(format!(
            "f-vector {} differs from {expected} of dual(tdm({d},{i},{m}))",
            lattice.f_vector()
        )));
    } else {
        r.push_note(format!("identified as dual(tdm({d},{i},{m}))"));
    }
    Ok(r)
}

/// Part sizes when `edges` are exactly the edges of a complete bipartite
/// graph on all `n` vertices, both parts of size at least 2.
fn complete_bipartite_sides(n: usize, edges: &[(usize, usize)]) -> Option<(usize, usize)> {
    let mut adj = vec![BTreeSet::new(); n];
    for &(a, b) in edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let side: BTreeSet<usize> = adj.first()?.clone();
    let other: BTreeSet<usize> = (0..n).filter(|v| !side.contains(v)).collect();
    let complete = other.iter().all(|&v| adj[v] == side) && side.iter().all(|&v| adj[v] == other);
    let distinct: BTreeSet<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    (complete && distinct.len() == edges.len() && edges.len() == side.len() * other.len() && side.len() >= 2 && other.len() >= 2)
        .then_some((other.len(), side.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{boolean_lattice, nabla, tdm_lattice};

    #[test]
    fn boolean_is_dual_simplicial() {
        let r = check_dual_simplicial(&boolean_lattice(4)).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.params()["dual_vertices"], 4);
    }

    #[test]
    fn simple_polytopes_are_dual_simplicial() {
        for (d, m) in [(4, 1), (4, 2), (5, 2)] {
            let l = tdm_lattice(d, d, m).unwrap().dual();
            assert!(check_dual_simplicial(&l).unwrap().passed());
        }
    }

    #[test]
    fn square_pyramid_apex_has_a_square_vertex_figure() {
        let l = tdm_lattice(3, 2, 1).unwrap();
        let r = check_dual_simplicial(&l).unwrap();
        assert!(!r.passed());
        assert_eq!(r.witnesses().len(), 1);
        assert_eq!(r.witnesses()[0].faces, vec![vec!["a1".to_string()]]);
    }

    #[test]
    fn round_trip_and_pyramid_identification() {
        let r = check_d_plus_2_facets_polytopal(&tdm_lattice(6, 5, 2).unwrap().dual()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.params()["i"], 5);
        assert_eq!(r.params()["m"], 2);
        assert_eq!(r.params()["pyramid_steps"], 1);
        let p = tdm_lattice(5, 5, 2).unwrap().dual().pyramid();
        let r = check_d_plus_2_facets_polytopal(&p).unwrap();
        assert!(r.passed());
        assert_eq!(r.params()["pyramid_steps"], 1);
        for d in 2..=6 {
            for i in 2..=d {
                for m in 1..=i / 2 {
                    let r = check_d_plus_2_facets_polytopal(&tdm_lattice(d, i, m).unwrap().dual()).unwrap();
                    assert!(r.passed(), "d={d} i={i} m={m}: {r:?}");
                    assert_eq!(r.params()["pyramid_steps"], d - i);
                }
            }
        }
    }

    #[test]
    fn nabla_is_out_of_scope() {
        let r = check_d_plus_2_facets_polytopal(&nabla(4).unwrap()).unwrap();
        assert!(r.is_skipped());
    }
}
