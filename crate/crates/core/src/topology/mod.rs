//! Order complexes, links, pseudomanifold and normality checks.

mod homology;
mod polytopal;

use std::collections::{HashMap, HashSet};

use crate::complex::{is_sorted_subset, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::lattice::{ElementId, GradedLattice};
use crate::limits::ensure_within;
use crate::report::{CheckReport, Witness};

pub use homology::{gf2_homology, top_betti, HomologyProfile};
pub use polytopal::{check_d_plus_2_facets_polytopal, check_dual_simplicial};

/// Complexes with at most this many simplices also get the vertex-link
/// homology cross-check in [`is_normal_pseudomanifold`].
pub const LINK_HOMOLOGY_CROSSCHECK_LIMIT: usize = 5000;

/// Chains of proper elements. Vertex `v` is element `v + 1`; labels are the
/// element labels when those are distinct, `#id` otherwise.
pub fn order_complex(lattice: &GradedLattice) -> Result<SimplicialComplex> {
    let proper: Vec<ElementId> = (1..lattice.top()).collect();
    let mut labels: Vec<String> = proper.iter().map(|&x| lattice.display_label(x)).collect();
    let distinct: HashSet<&String> = labels.iter().collect();
    if distinct.len() != labels.len() {
        labels = proper.iter().map(|x| format!("#{x}")).collect();
    }
    if proper.is_empty() {
        return SimplicialComplex::new(labels, vec![vec![]]);
    }
    let facets = maximal_chains(lattice)?;
    SimplicialComplex::new(labels, facets)
}

fn maximal_chains(lattice: &GradedLattice) -> Result<Vec<Vec<Vertex>>> {
    let top = lattice.top();
    // Count first so an oversized order complex fails before allocating it.
    let mut count = vec![0u128; lattice.len()];
    count[top] = 1;
    for x in (0..top).rev() {
        count[x] = lattice.upper_covers(x).iter().map(|&y| count[y]).sum();
    }
    ensure_within("order complex facets", count[0].min(usize::MAX as u128) as usize)?;
    let mut out = Vec::with_capacity(count[0] as usize);
    let mut path = Vec::new();
    fn walk(l: &GradedLattice, x: ElementId, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if x == l.top() {
            out.push(path.clone());
            return;
        }
        for &y in l.upper_covers(x) {
            if y != l.top() {
                path.push((y - 1) as Vertex);
            }
            walk(l, y, path, out);
            if y != l.top() {
                path.pop();
            }
        }
    }
    walk(lattice, lattice.bottom(), &mut path, &mut out);
    Ok(out)
}

pub fn is_pure(complex: &SimplicialComplex) -> CheckReport {
    let mut r = CheckReport::new("pure").param("dim", complex.dim());
    let top = complex.dim() + 1;
    for f in complex.facets() {
        if (f.len() as isize) < top {
            r.push_witness(
                Witness::new(format!("facet of dimension {} below {}", f.len() as isize - 1, top - 1))
                    .with_face(complex.face_labels(f)),
            );
        }
    }
    r
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            let next = self.0[y];
            self.0[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
pub fn components(complex: &SimplicialComplex) -> Vec<Vec<Vertex>> {
    let n = complex.vertex_count();
    let mut uf = UnionFind::new(n);
    for f in complex.facets() {
        for w in f.windows(2) {
            uf.union(w[0] as usize, w[1] as usize);
        }
    }
    let mut groups: HashMap<usize, Vec<Vertex>> = HashMap::new();
    for v in 0..n {
        groups.entry(uf.find(v)).or_default().push(v as Vertex);
    }
    let mut out: Vec<Vec<Vertex>> = groups.into_values().collect();
    out.sort();
    out
}

/// Connectivity of the 1-skeleton; complexes without vertices count as connected.
pub fn is_connected(complex: &SimplicialComplex) -> CheckReport {
    let comps = components(complex);
    let mut r = CheckReport::new("connected").param("components", comps.len());
    if comps.len() > 1 {
        for c in &comps[1..] {
            r.push_witness(Witness::new("separate component").with_face(complex.face_labels(c)));
        }
    }
    r
}

/// Pure, and every ridge lies in exactly two facets. Witnesses are the
/// offending ridges (or non-top facets when the complex is not pure).
pub fn is_pseudomanifold(complex: &SimplicialComplex) -> CheckReport {
    let pure = is_pure(complex);
    let mut r = CheckReport::new("pseudomanifold").param("dim", complex.dim());
    if !pure.passed() {
        for w in pure.witnesses() {
            r.push_witness(w.clone());
        }
        return r;
    }
    let mut ridges: HashMap<Vec<Vertex>, usize> = HashMap::new();
    for f in complex.facets() {
        for skip in 0..f.len() {
            let mut ridge = f.clone();
            ridge.remove(skip);
            *ridges.entry(ridge).or_default() += 1;
        }
    }
    let mut bad: Vec<(Vec<Vertex>, usize)> = ridges.into_iter().filter(|(_, c)| *c != 2).collect();
    bad.sort();
    for (ridge, count) in bad {
        r.push_witness(
            Witness::new(format!("ridge lies in {count} facets")).with_face(complex.face_labels(&ridge)),
        );
    }
    r
}

/// Lattice form: every rank-`(d-1)` element lies below exactly two coatoms.
pub fn is_pseudomanifold_lattice(lattice: &GradedLattice) -> CheckReport {
    let d = lattice.dim();
    let mut r = CheckReport::new("pseudomanifold").param("d", d);
    if d < 1 {
        return r;
    }
    if d == 1 {
        // A 0-dimensional pseudomanifold is two points.
        if lattice.coatoms().len() != 2 {
            r.push_witness(Witness::new(format!("{} points instead of 2", lattice.coatoms().len())));
        }
        return r;
    }
    for &x in lattice.elements_of_rank(d - 1) {
        let above = lattice.upper_covers(x).len();
        if above != 2 {
            r.push_witness(
                Witness::new(format!("ridge lies below {above} facets")).with_elements(lattice, &[x]),
            );
        }
    }
    r
}

/// `lk(τ) = {σ : σ ∩ τ = ∅, σ ∪ τ ∈ C}`, on the vertices it uses.
pub fn link(complex: &SimplicialComplex, tau: &[Vertex]) -> Result<SimplicialComplex> {
    let mut tau = tau.to_vec();
    tau.sort_unstable();
    tau.dedup();
    if !complex.contains_face(&tau) {
        return Err(Error::FaceNotInComplex(complex.face_labels(&tau)));
    }
    let facets: Vec<Vec<Vertex>> = complex
        .facets()
        .iter()
        .filter(|f| is_sorted_subset(&tau, f))
        .map(|f| f.iter().copied().filter(|v| tau.binary_search(v).is_err()).collect())
        .collect();
    Ok(SimplicialComplex::compacted(complex.labels(), facets))
}

/// Faces `τ` with `1 <= |τ| <= max_size` whose link is disconnected, sorted.
/// Links are assembled in one pass: every facet `F ⊇ τ` contributes the link
/// facet `F \ τ`, and components are merged per `τ`.
pub fn disconnected_links(complex: &SimplicialComplex, max_size: usize) -> Result<Vec<Vec<Vertex>>> {
    let facets = complex.facets();
    // For each τ, a union-find over the vertices its link facets touch.
    let mut links: HashMap<Vec<Vertex>, (HashMap<Vertex, usize>, UnionFind)> = HashMap::new();
    for f in facets {
        let k = f.len();
        if k > 63 {
            return Err(Error::Malformed("facet with more than 63 vertices".into()));
        }
        for mask in 1u64..(1u64 << k) {
            let size = mask.count_ones() as usize;
            if size > max_size || size == k {
                continue;
            }
            let tau: Vec<Vertex> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
            let rest: Vec<Vertex> = (0..k).filter(|i| mask >> i & 1 == 0).map(|i| f[i]).collect();
            let (index, uf) = links
                .entry(tau)
                .or_insert_with(|| (HashMap::new(), UnionFind::new(0)));
            let mut ids = Vec::with_capacity(rest.len());
            for v in rest {
                let next = index.len();
                let id = *index.entry(v).or_insert(next);
                if id == uf.0.len() {
                    uf.0.push(id);
                }
                ids.push(id);
            }
            for w in ids.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
    }
    let mut bad: Vec<Vec<Vertex>> = links
        .into_iter()
        .filter_map(|(tau, (index, mut uf))| {
            let n = index.len();
            let roots: HashSet<usize> = (0..n).map(|i| uf.find(i)).collect();
            (roots.len() > 1).then_some(tau)
        })
        .collect();
    bad.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(bad)
}

/// Normal pseudomanifold test on the order complex `T` of `L` (rank `d + 1`):
/// `T` is connected, a pseudomanifold, has top Betti number 1, and every face
/// of dimension at most `d - 3` has a connected link.
///
/// When `T` has at most [`LINK_HOMOLOGY_CROSSCHECK_LIMIT`] simplices, every
/// vertex link must also have reduced top Betti number 1.
pub fn is_normal_pseudomanifold(lattice: &GradedLattice) -> Result<CheckReport> {
    let d = lattice.dim();
    let t = order_complex(lattice)?;
    let mut r = CheckReport::new("normal").param("d", d);

    let conn = is_connected(&t);
    for w in conn.witnesses() {
        r.push_witness(Witness {
            reason: format!("order complex is disconnected: {}", w.reason),
            faces: w.faces.clone(),
        });
    }
    let pm = is_pseudomanifold(&t);
    for w in pm.witnesses() {
        r.push_witness(Witness {
            reason: format!("not a pseudomanifold: {}", w.reason),
            faces: w.faces.clone(),
        });
    }
    let b = top_betti(&t)?;
    r.set_param("top_betti", b);
    if b != 1 {
        r.push_witness(Witness::new(format!("top Betti number is {b}, not 1")));
    }
    if d >= 3 {
        for tau in disconnected_links(&t, d - 2)? {
            r.push_witness(Witness::new("disconnected link").with_face(t.face_labels(&tau)));
        }
    }

    let simplices: usize = t.facets().len() << t.dim().max(0);
    if simplices <= LINK_HOMOLOGY_CROSSCHECK_LIMIT && d >= 2 && pm.passed() {
        for v in 0..t.vertex_count() as Vertex {
            let lk = link(&t, &[v])?;
            // Local homology at v is the reduced homology of its link.
            let lb = top_betti(&lk)? - usize::from(lk.dim() == 0);
            if lb != 1 {
                r.push_witness(
                    Witness::new(format!("vertex link has top Betti number {lb}"))
                        .with_face(vec![t.label(v).to_string()]),
                );
            }
        }
        r.push_note("vertex-link homology cross-checked");
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{boolean_lattice, face_lattice_from_complex, nabla};

    fn two_spheres_sharing_a_vertex() -> SimplicialComplex {
        let mut facets = Vec::new();
        for base in [[0usize, 1, 2, 3], [0, 4, 5, 6]] {
            for skip in 0..4 {
                facets.push(base.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect());
            }
        }
        SimplicialComplex::from_index_facets(7, &facets)
    }

    #[test]
    fn order_complex_shapes() {
        let hex = order_complex(&boolean_lattice(3)).unwrap();
        assert_eq!(hex.f_vector().counts(), &[6, 6]);
        let square = SimplicialComplex::from_index_facets(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]);
        let oct = order_complex(&face_lattice_from_complex(&square).unwrap()).unwrap();
        assert_eq!(oct.f_vector().counts(), &[8, 8]);
        for d in 1..6usize {
            let flags = order_complex(&boolean_lattice(d + 1)).unwrap().facets().len();
            assert_eq!(flags, (1..=d + 1).product::<usize>());
        }
    }

    #[test]
    fn purity_and_connectivity() {
        let c = SimplicialComplex::from_index_facets(5, &[vec![0, 1, 2], vec![3, 4]]);
        assert!(!is_pure(&c).passed());
        let conn = is_connected(&c);
        assert!(!conn.passed());
        assert_eq!(conn.witnesses()[0].faces, vec![vec!["3".to_string(), "4".to_string()]]);
        let s = SimplicialComplex::simplex_boundary(4);
        assert!(is_pure(&s).passed() && is_connected(&s).passed());
    }

    #[test]
    fn glued_triangles_have_four_boundary_edges() {
        let c = SimplicialComplex::from_index_facets(4, &[vec![0, 1, 2], vec![1, 2, 3]]);
        let r = is_pseudomanifold(&c);
        assert!(!r.passed());
        let faces: Vec<Vec<String>> = r.witnesses().iter().flat_map(|w| w.faces.clone()).collect();
        let expected: Vec<Vec<String>> = [["0", "1"], ["0", "2"], ["1", "3"], ["2", "3"]]
            .iter()
            .map(|e| e.iter().map(|s| s.to_string()).collect())
            .collect();
        assert_eq!(faces, expected);
        assert!(is_pseudomanifold(&SimplicialComplex::simplex_boundary(3)).passed());
    }

    #[test]
    fn links() {
        let s = SimplicialComplex::simplex_boundary(3);
        let lv = link(&s, &[0]).unwrap();
        assert_eq!(lv.f_vector().counts(), &[3, 3]);
        let le = link(&s, &[0, 1]).unwrap();
        assert_eq!(le.facets().len(), 2);
        assert_eq!(le.dim(), 0);
        assert_eq!(link(&s, &[]).unwrap(), s);
        let lf = link(&s, &[0, 1, 2]).unwrap();
        assert_eq!(lf.dim(), -1);
        assert!(matches!(link(&s, &[0, 1, 2, 3]), Err(Error::FaceNotInComplex(_))));
    }

    #[test]
    fn lattice_pseudomanifold() {
        assert!(is_pseudomanifold_lattice(&nabla(4).unwrap()).passed());
        assert!(is_pseudomanifold_lattice(&boolean_lattice(5)).passed());
    }

    #[test]
    fn normal_spheres() {
        for d in 2..=5 {
            let r = is_normal_pseudomanifold(&boolean_lattice(d + 1)).unwrap();
            assert!(r.passed(), "d={d}: {r:?}");
        }
        let h = gf2_homology(&order_complex(&nabla(4).unwrap()).unwrap()).unwrap();
        assert_eq!(h.betti, vec![1, 0, 0, 1]);
    }

    #[test]
    fn pinched_sphere_fails_at_the_shared_vertex() {
        let l = face_lattice_from_complex(&two_spheres_sharing_a_vertex()).unwrap();
        let r = is_normal_pseudomanifold(&l).unwrap();
        assert!(!r.passed());
        let link_witnesses: Vec<&Witness> = r.witnesses().iter().filter(|w| w.reason == "disconnected link").collect();
        assert_eq!(link_witnesses.len(), 1);
        assert_eq!(link_witnesses[0].faces, vec![vec!["{0}".to_string()]]);
    }
}
