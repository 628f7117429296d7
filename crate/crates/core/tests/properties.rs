//! Structural invariants checked across the zoo and small constructions.

use polyface::bounds::{binomial, stacked_lbt_fvector, verify_grunbaum};
use polyface::constructions::{
    boolean_lattice, grunbaum_minimizer, prism, pyramid_times, simplex_facets, stack_on_smallest_simplex_facet,
    stack_over_facet, stacked_polytope, zoo, zoo_specs, ZooEntry,
};
use polyface::io::{lattice_from_json, lattice_to_json};
use polyface::topology::{link, order_complex, top_betti};
use polyface::{GradedLattice, PolytopeSpec};
use proptest::prelude::*;
use std::sync::OnceLock;

fn small_zoo() -> &'static [ZooEntry] {
    static ZOO: OnceLock<Vec<ZooEntry>> = OnceLock::new();
    ZOO.get_or_init(|| zoo(6).unwrap())
}

fn counts(l: &GradedLattice) -> Vec<usize> {
    l.f_vector().counts().to_vec()
}

#[test]
fn zoo_entries_are_diamond_lattices() {
    for e in small_zoo() {
        let l = &e.lattice;
        assert!(l.is_lattice().holds(), "{}", e.spec);
        assert!(l.is_diamond().holds(), "{}", e.spec);
        assert!(l.is_coatom_distinguishable().holds(), "{}", e.spec);
        assert!(l.check_upper_intervals_atleast_boolean().holds(), "{}", e.spec);
    }
}

#[test]
fn euler_relation() {
    for e in small_zoo() {
        let d = e.lattice.dim() as i64;
        let expected = 1 - (-1i64).pow(d as u32);
        assert_eq!(e.lattice.f_vector().euler_sum(), expected, "{}", e.spec);
    }
}

#[test]
fn pyramid_recursion() {
    for e in small_zoo().iter().filter(|e| e.lattice.dim() <= 5) {
        let f = counts(&e.lattice);
        let g = counts(&e.lattice.pyramid());
        let d = f.len();
        assert_eq!(g.len(), d + 1);
        for k in 0..=d {
            let below = if k == 0 { 1 } else { f[k - 1] };
            let same = if k < d { f[k] } else { 1 };
            assert_eq!(g[k], same + below, "{} k={k}", e.spec);
        }
    }
}

#[test]
fn dual_reverses_and_is_an_involution() {
    for e in small_zoo() {
        let l = &e.lattice;
        let dual = l.dual();
        let mut f = counts(l);
        f.reverse();
        assert_eq!(counts(&dual), f, "{}", e.spec);
        let back = dual.dual();
        assert_eq!(back.len(), l.len());
        assert_eq!(back.covers().count(), l.covers().count());
        assert_eq!(counts(&back), counts(l));
    }
}

#[test]
fn boolean_recognition() {
    for n in 0..=11 {
        let b = boolean_lattice(n);
        assert!(b.is_boolean(), "B^{n}");
        assert_eq!(b.len(), 1 << n);
        let expected: Vec<usize> = (1..n).map(|k| binomial(n as i64, k as i64).try_into().unwrap()).collect();
        assert_eq!(counts(&b), expected);
    }
    assert!(!prism(3).unwrap().is_boolean());
    assert!(!grunbaum_minimizer(3, 2).unwrap().is_boolean());
    assert!(pyramid_times(&boolean_lattice(3), 2).is_boolean());
}

#[test]
fn cone_hypothesis_forces_boolean_intervals() {
    for e in small_zoo().iter().filter(|e| e.lattice.len() <= 200) {
        let l = &e.lattice;
        for x in l.elements() {
            for y in l.upset(x).ones() {
                let c = l.check_all_cones_boolean(x, y);
                if c.hypothesis {
                    assert_eq!(c.conclusion, Some(true), "{} [{x},{y}]", e.spec);
                }
            }
        }
    }
}

#[test]
fn order_complex_is_invariant_under_duality() {
    for e in small_zoo().iter().filter(|e| e.lattice.dim() <= 4) {
        let a = order_complex(&e.lattice).unwrap();
        let b = order_complex(&e.lattice.dual()).unwrap();
        assert_eq!(a.facets().len(), b.facets().len(), "{}", e.spec);
        assert_eq!(a.f_vector(), b.f_vector(), "{}", e.spec);
        assert_eq!(top_betti(&a).unwrap(), 1);
        assert_eq!(top_betti(&b).unwrap(), 1);
    }
}

#[test]
fn link_dimension_drops_by_face_size() {
    for e in small_zoo().iter().filter(|e| e.lattice.dim() <= 4) {
        let oc = order_complex(&e.lattice).unwrap();
        let top = oc.dim();
        for faces in oc.faces_by_dim().iter().take(top as usize) {
            for tau in faces.iter().step_by(7) {
                let lk = link(&oc, tau).unwrap();
                assert_eq!(lk.dim(), top - tau.len() as isize, "{} {tau:?}", e.spec);
            }
        }
    }
}

#[test]
fn json_round_trip() {
    for e in small_zoo() {
        let back = lattice_from_json(&lattice_to_json(&e.lattice)).unwrap();
        assert_eq!(back.len(), e.lattice.len());
        assert_eq!(counts(&back), counts(&e.lattice));
        let a: Vec<_> = e.lattice.covers().collect();
        let b: Vec<_> = back.covers().collect();
        assert_eq!(a, b, "{}", e.spec);
    }
}

#[test]
fn spec_display_round_trip() {
    for spec in zoo_specs(7) {
        let text = spec.to_string();
        let parsed: PolytopeSpec = text.parse().unwrap();
        assert_eq!(parsed, spec, "{text}");
    }
}

#[test]
fn stacking_adds_a_vertex_and_d_minus_one_facets() {
    for e in small_zoo() {
        let l = &e.lattice;
        if simplex_facets(l).is_empty() {
            continue;
        }
        let d = l.dim();
        let f = counts(l);
        let g = counts(&stack_on_smallest_simplex_facet(l, "v").unwrap());
        assert_eq!(g[0], f[0] + 1, "{}", e.spec);
        assert_eq!(g[d - 1], f[d - 1] + d - 1, "{}", e.spec);
        for k in 1..d - 1 {
            assert_eq!(g[k], f[k] + binomial(d as i64, k as i64).try_into().unwrap_or(0usize), "{} k={k}", e.spec);
        }
    }
}

#[test]
fn stacked_polytopes_match_lower_bound_formula() {
    for d in 2..=6usize {
        for n in d + 1..=d + 5 {
            let f = counts(&stacked_polytope(d, n).unwrap());
            for j in 0..=d - 2 {
                let expected = stacked_lbt_fvector(d as i64, n as i64, j as i64).unwrap();
                assert_eq!(f[j], usize::try_from(expected).unwrap(), "d={d} n={n} j={j}");
            }
        }
    }
}

#[test]
fn minimizers_satisfy_grunbaum_structure() {
    for d in 3..=7 {
        for s in 2..=d {
            let r = verify_grunbaum(&grunbaum_minimizer(d, s).unwrap()).unwrap();
            assert!(r.passed(), "gmin({d},{s}): {r:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_stacking_sequences_match_formula(d in 2usize..=5, picks in prop::collection::vec(any::<prop::sample::Index>(), 0..5)) {
        let mut l = boolean_lattice(d + 1);
        for (j, pick) in picks.iter().enumerate() {
            let facets = simplex_facets(&l);
            let facet = facets[pick.index(facets.len())];
            l = stack_over_facet(&l, facet, &format!("w{j}")).unwrap();
        }
        prop_assert!(l.is_diamond().holds());
        let n = d + 1 + picks.len();
        let f = counts(&l);
        for j in 0..=d - 2 {
            let expected = stacked_lbt_fvector(d as i64, n as i64, j as i64).unwrap();
            prop_assert_eq!(f[j], usize::try_from(expected).unwrap());
        }
    }
}
