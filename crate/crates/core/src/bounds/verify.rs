use num_bigint::BigInt;

use super::{bound_a, bound_b, phi};
use crate::error::{Error, Result};
use crate::lattice::GradedLattice;
use crate::report::{CheckReport, Witness};

/// Checks `f_k(L) >= phi(k, d+s, d)` for a diamond lattice of rank `d + 1`
/// with `d + s` atoms, `1 <= s <= d`.
///
/// If equality holds at some `1 <= k <= d-2` (and `s >= 2`), the lattice must
/// also have `d + 2` coatoms, each above `d`, `d+s-2` or `d+s-1` atoms.
pub fn verify_grunbaum(lattice: &GradedLattice) -> Result<CheckReport> {
    let d = lattice.dim();
    let n = lattice.atoms().len();
    if d < 1 {
        return Err(Error::PreconditionViolated("rank must be at least 2".into()));
    }
    if n < d + 1 || n > 2 * d {
        return Err(Error::PreconditionViolated(format!(
            "{n} atoms in rank {}: s = {} is outside 1..={d}",
            d + 1,
            n as i64 - d as i64
        )));
    }
    if let Some(w) = lattice.is_diamond().witness() {
        return Err(Error::PreconditionViolated(format!(
            "not a diamond lattice: interval [{}, {}] has {} middle elements",
            lattice.display_label(w.lo),
            lattice.display_label(w.hi),
            w.middle.len()
        )));
    }
    let s = n - d;
    let f = lattice.f_vector();
    let mut report = CheckReport::new("grunbaum").param("d", d).param("s", s);
    let mut equal_at = Vec::new();
    for k in 0..d {
        let bound = phi(k as i64, n as i64, d as i64);
        let count = BigInt::from(f.get(k as isize));
        if count < bound {
            report.push_witness(Witness::new(format!("f_{k} = {count} < phi_{k} = {bound}")));
        } else if count == bound && k >= 1 && k + 2 <= d {
            equal_at.push(k);
        }
    }
    report.set_param("equality_at", &equal_at);
    if !equal_at.is_empty() && s >= 2 {
        let coatoms = lattice.coatoms();
        if coatoms.len() != d + 2 {
            report.push_witness(Witness::new(format!(
                "equality at k = {equal_at:?} but {} coatoms instead of {}",
                coatoms.len(),
                d + 2
            )));
        }
        for &c in coatoms {
            let below = lattice.atoms_below(c).len();
            if below != d && below + 2 != d + s && below + 1 != d + s {
                report.push_witness(
                    Witness::new(format!("coatom lies above {below} atoms"))
                        .with_elements(lattice, &[c]),
                );
            }
        }
        report.push_note("equality case: coatom structure checked");
    }
    Ok(report)
}

/// Lower bounds for rank-`d+1` lattices with at least `2d + 1` atoms: with
/// `d + 2` coatoms, `f_m >= bound_a(m, d)`; with more, `f_m >= bound_b(m, d)`
/// and `f_0 >= 2d + 1`, for `m >= 1`.
///
/// The `attained` parameter records whether every inequality is tight.
pub fn verify_2d1_bound(lattice: &GradedLattice) -> Result<CheckReport> {
    let d = lattice.dim();
    let f = lattice.f_vector();
    if d < 3 {
        return Err(Error::PreconditionViolated(format!("needs d >= 3, got {d}")));
    }
    if f.get(0) < 2 * d + 1 {
        return Err(Error::PreconditionViolated(format!(
            "{} vertices, need at least 2d+1 = {}",
            f.get(0),
            2 * d + 1
        )));
    }
    let facets = f.get(d as isize - 1);
    if facets < d + 2 {
        return Err(Error::PreconditionViolated(format!("{facets} facets, need at least d+2")));
    }
    let which = if facets == d + 2 { "A" } else { "B" };
    let mut report = CheckReport::new("two-part-2d1")
        .param("d", d)
        .param("facets", facets)
        .param("bound", which);
    // f_0 >= 2d + 1 is already a precondition.
    let mut attained = f.get(0) == 2 * d + 1;
    for m in 1..d {
        let bound = if which == "A" {
            bound_a(m as i64, d as i64)
        } else {
            bound_b(m as i64, d as i64)
        };
        let count = BigInt::from(f.get(m as isize));
        if count < bound {
            report.push_witness(Witness::new(format!("f_{m} = {count} < {bound}")));
        }
        attained &= count == bound;
    }
    report.set_param("attained", attained);
    if which == "A" && d % 2 == 1 {
        report.push_note("odd d: the bound is not known to be attained");
    }
    Ok(report)
}
