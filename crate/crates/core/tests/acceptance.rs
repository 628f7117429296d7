//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! runtime; the process exits nonzero if any criterion fails or overruns its
//! time budget. All comparisons are exact integer equalities.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use polyface::bounds::{
    binomial, bound_a, bound_b, delta, fvec_tdm_formula, key_prop_exhaustive, key_prop_random, nabla_formula,
    phi, verify_2d1_bound, verify_appendix, verify_complete_ordering, verify_complete_ordering_constructed,
    verify_grunbaum, verify_simple_case, KeyPropSummary,
};
use polyface::constructions::{
    boolean_lattice, face_lattice_from_complex, grunbaum_minimizer, nabla, tdm_lattice, zoo,
};
use polyface::topology::{gf2_homology, is_normal_pseudomanifold, is_pseudomanifold};
use polyface::{GradedLattice, SimplicialComplex};

type Outcome = Result<String, String>;

/// Number, name, time budget and body of one criterion.
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn counts(l: &GradedLattice) -> Vec<BigInt> {
    l.f_vector().counts().iter().map(|&x| BigInt::from(x)).collect()
}

fn err(e: polyface::Error) -> String {
    e.to_string()
}

fn c1_nabla_three() -> Outcome {
    let f = nabla(3).map_err(err)?.f_vector();
    ensure(f.counts() == [7, 11, 6], || format!("f(nabla(3)) = {f}"))?;
    Ok(format!("f = {f}"))
}

fn c2_nabla_closed_form() -> Outcome {
    for d in 2..=8usize {
        let f = counts(&nabla(d).map_err(err)?);
        ensure(f[0] == BigInt::from(2 * d + 1), || format!("d={d}: f_0 = {}", f[0]))?;
        for m in 1..d {
            let (di, mi) = (d as i64, m as i64);
            let expected = binomial(di + 1, mi + 1) + binomial(di, mi + 1) + binomial(di - 1, mi);
            ensure(f[m] == expected, || format!("d={d}, m={m}: {} != {expected}", f[m]))?;
        }
    }
    Ok("2 <= d <= 8, all m".into())
}

fn c3_tdm_formula() -> Outcome {
    let mut cases = 0;
    for d in 2..=8usize {
        for i in 2..=d {
            for m in 1..=i / 2 {
                let f = counts(&tdm_lattice(d, i, m).map_err(err)?);
                for (k, fk) in f.iter().enumerate() {
                    let expected = fvec_tdm_formula(d as i64, i as i64, m as i64, k as i64);
                    ensure(*fk == expected, || format!("T(d={d},i={i},m={m}) f_{k}: {fk} != {expected}"))?;
                }
                ensure(f[d - 1] == BigInt::from(d + 1 + m * (i - m)), || {
                    format!("T(d={d},i={i},m={m}) has {} facets", f[d - 1])
                })?;
                cases += 1;
            }
        }
    }
    let f3 = counts(&tdm_lattice(5, 5, 2).map_err(err)?)[3].clone();
    ensure(f3 == BigInt::from(30), || format!("f_3(T^(5,0)_2) = {f3}"))?;
    Ok(format!("{cases} lattices, f_3(T^(5,0)_2) = 30"))
}

/// Minimizer equality plus the lower bound over every diamond zoo lattice
/// in range. Returns the number of zoo lattices checked and all equality
/// instances (lattices with `f_k = phi_k` for some `1 <= k <= d-2`).
fn grunbaum_scan() -> Result<(usize, Vec<(String, GradedLattice)>), String> {
    let mut equality = Vec::new();
    for d in 2..=8usize {
        for s in 2..=d {
            let l = grunbaum_minimizer(d, s).map_err(err)?;
            let f = counts(&l);
            for (k, fk) in f.iter().enumerate() {
                let p = phi(k as i64, (d + s) as i64, d as i64);
                ensure(*fk == p, || format!("gmin({d},{s}) f_{k} = {fk} != phi = {p}"))?;
            }
            if d >= 3 {
                equality.push((format!("gmin({d},{s})"), l));
            }
        }
    }
    let mut checked = 0;
    for entry in zoo(8).map_err(err)? {
        let l = &entry.lattice;
        let d = l.dim();
        let n = l.atoms().len();
        if n < d + 1 || n > 2 * d || !l.is_diamond().holds() {
            continue;
        }
        checked += 1;
        let f = counts(l);
        let mut tight = false;
        for (k, fk) in f.iter().enumerate() {
            let p = phi(k as i64, n as i64, d as i64);
            ensure(*fk >= p, || format!("{}: f_{k} = {fk} < phi = {p}", entry.spec))?;
            tight |= *fk == p && k >= 1 && k + 2 <= d;
        }
        if tight && n > d + 1 {
            let s = n - d;
            let minimizer = counts(&grunbaum_minimizer(d, s).map_err(err)?);
            ensure(f == minimizer, || {
                format!("{} is tight at some 1 <= k <= d-2 but is not the minimizer", entry.spec)
            })?;
            equality.push((entry.spec.to_string(), entry.lattice));
        }
    }
    Ok((checked, equality))
}

fn c4_phi_minimizer() -> Outcome {
    let (checked, equality) = grunbaum_scan()?;
    Ok(format!(
        "minimizers 2 <= s <= d <= 8 equal phi; {checked} zoo diamond lattices above phi; {} equality instances",
        equality.len()
    ))
}

fn c5_equality_structure() -> Outcome {
    let (_, equality) = grunbaum_scan()?;
    ensure(!equality.is_empty(), || "no equality instances".into())?;
    for (name, l) in &equality {
        let d = l.dim();
        let s = l.atoms().len() - d;
        ensure(l.coatoms().len() == d + 2, || format!("{name}: {} coatoms", l.coatoms().len()))?;
        for &c in l.coatoms() {
            let a = l.atoms_below(c).len();
            ensure(a == d || a == d + s - 2 || a == d + s - 1, || {
                format!("{name}: a coatom lies above {a} atoms")
            })?;
        }
        let report = verify_grunbaum(l).map_err(err)?;
        ensure(report.passed(), || format!("{name}: {:?}", report.witnesses()))?;
    }
    Ok(format!("{} equality instances, all with d+2 coatoms of the stated sizes", equality.len()))
}

fn c6_complete_ordering() -> Outcome {
    let mut certs = 0;
    for d in 2..=12 {
        for cert in verify_complete_ordering(d) {
            ensure(cert.is_valid(), || format!("d={d}, {} facets: {:?}", cert.facets, cert.violations))?;
            certs += 1;
        }
    }
    for d in 2..=8 {
        for cert in verify_complete_ordering_constructed(d).map_err(err)? {
            ensure(cert.is_valid(), || format!("constructed d={d}, {} facets: {:?}", cert.facets, cert.violations))?;
        }
    }
    let six = verify_complete_ordering_constructed(6).map_err(err)?;
    let class = six
        .iter()
        .find(|c| c.facets == 11)
        .ok_or("d = 6 has no class with 11 facets")?;
    ensure(class.chain == vec![(5, 1), (4, 2)], || format!("d=6 class chain {:?}", class.chain))?;
    let (lo, hi) = (&class.fvectors[0], &class.fvectors[1]);
    Ok(format!("{certs} formula certificates; d=6: ({}) <= ({})", lo.join(","), hi.join(",")))
}

fn c7_two_part_bound() -> Outcome {
    let mut notes = Vec::new();
    for d in [6usize, 8] {
        let i = d / 2 + 2;
        let l = tdm_lattice(d, i, 2).map_err(err)?.dual();
        let f = counts(&l);
        ensure(f[0] == BigInt::from(2 * d + 1), || format!("d={d}: {} vertices", f[0]))?;
        ensure(l.coatoms().len() == d + 2, || format!("d={d}: {} facets", l.coatoms().len()))?;
        for m in 1..d {
            let a = bound_a(m as i64, d as i64);
            ensure(f[m] == a, || format!("d={d}, m={m}: f_m = {} != A = {a}", f[m]))?;
        }
        let r = verify_2d1_bound(&l).map_err(err)?;
        ensure(r.passed() && r.params()["attained"] == true, || format!("d={d}: {r:?}"))?;
        notes.push(format!("dual(tdm({d},{i},2))"));
    }
    for d in 2..=8usize {
        let f = counts(&nabla(d).map_err(err)?);
        for m in 1..d {
            let b = bound_b(m as i64, d as i64);
            ensure(f[m] == b, || format!("nabla({d}), m={m}: {} != B = {b}", f[m]))?;
        }
        if d >= 3 {
            let r = verify_2d1_bound(&nabla(d).map_err(err)?).map_err(err)?;
            ensure(r.passed() && r.params()["attained"] == true, || format!("nabla({d}): {r:?}"))?;
        }
    }
    Ok(format!("{} attain A; nabla(d), d <= 8, attains B", notes.join(", ")))
}

fn c8_appendix() -> Outcome {
    let r = verify_appendix(200);
    ensure(r.violations.is_empty(), || format!("negative delta at {:?}", &r.violations[..r.violations.len().min(5)]))?;
    ensure(delta(1, 6) == BigInt::from(1), || format!("delta(1,6) = {}", delta(1, 6)))?;
    Ok(format!("{} pairs, delta(1,6) = 1", r.checked))
}

fn c9_key_prop() -> Outcome {
    let mut total = KeyPropSummary::default();
    let mut lattices = 0;
    let mut add = |l: &GradedLattice, name: String| -> Result<(), String> {
        let s = key_prop_exhaustive(l).map_err(err)?;
        ensure(s.passed(), || format!("{name}: violations {:?}", &s.violations[..s.violations.len().min(3)]))?;
        total.subsets += s.subsets;
        total.instances += s.instances;
        total.part_ii_applied += s.part_ii_applied;
        total.part_iii_applied += s.part_iii_applied;
        lattices += 1;
        Ok(())
    };
    for d in 2..=6usize {
        add(&boolean_lattice(d + 1), format!("B^{}", d + 1))?;
        add(&nabla(d).map_err(err)?, format!("nabla({d})"))?;
        for s in 2..=d {
            add(&grunbaum_minimizer(d, s).map_err(err)?, format!("gmin({d},{s})"))?;
        }
        for i in 2..=d {
            for m in 1..=i / 2 {
                add(&tdm_lattice(d, i, m).map_err(err)?.dual(), format!("dual(tdm({d},{i},{m}))"))?;
            }
        }
    }
    let random = key_prop_random(&grunbaum_minimizer(6, 4).map_err(err)?, 3, 1000, 0x5eed).map_err(err)?;
    ensure(random.passed(), || format!("gmin(6,4) random: {:?}", random.violations))?;
    ensure(total.subsets >= 10_000, || format!("only {} subsets", total.subsets))?;
    ensure(total.part_ii_applied > 0 && total.part_iii_applied > 0, || "parts (ii)/(iii) never applied".into())?;
    Ok(format!(
        "{lattices} lattices, {} subsets, {} (S,k) instances, (ii) applied {}, (iii) applied {}; 1000 random 3-sets on gmin(6,4)",
        total.subsets, total.instances, total.part_ii_applied, total.part_iii_applied
    ))
}

fn c10_topology() -> Outcome {
    let entries = zoo(5).map_err(err)?;
    for entry in &entries {
        let r = is_normal_pseudomanifold(&entry.lattice).map_err(err)?;
        ensure(r.passed(), || format!("{}: {:?}", entry.spec, r.witnesses()))?;
    }
    let h = gf2_homology(&SimplicialComplex::simplex_boundary(3)).map_err(err)?;
    ensure(h.betti == [1, 0, 1], || format!("boundary of the 3-simplex: {:?}", h.betti))?;

    let glued = SimplicialComplex::from_index_facets(4, &[vec![0, 1, 2], vec![1, 2, 3]]);
    let r = is_pseudomanifold(&glued);
    let faces: Vec<Vec<String>> = r.witnesses().iter().flat_map(|w| w.faces.clone()).collect();
    let expected: Vec<Vec<String>> = [["0", "1"], ["0", "2"], ["1", "3"], ["2", "3"]]
        .iter()
        .map(|e| e.iter().map(|s| s.to_string()).collect())
        .collect();
    ensure(!r.passed() && faces == expected, || format!("glued triangles: {faces:?}"))?;

    let mut facets = Vec::new();
    for base in [[0usize, 1, 2, 3], [0, 4, 5, 6]] {
        for skip in 0..4 {
            facets.push(base.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect());
        }
    }
    let pinched = face_lattice_from_complex(&SimplicialComplex::from_index_facets(7, &facets)).map_err(err)?;
    let r = is_normal_pseudomanifold(&pinched).map_err(err)?;
    let at_shared = r
        .witnesses()
        .iter()
        .any(|w| w.reason == "disconnected link" && w.faces == vec![vec!["{0}".to_string()]]);
    ensure(!r.passed() && at_shared, || format!("pinched sphere: {:?}", r.witnesses()))?;
    Ok(format!("{} zoo lattices normal; negative controls fail as expected", entries.len()))
}

fn c11_simple_case() -> Outcome {
    for d in 3..=12 {
        let r = verify_simple_case(d, d <= 8).map_err(err)?;
        ensure(r.passed(), || format!("d={d}: {r:?}"))?;
        for row in &r.rows {
            let m = row.m.unwrap() as i64;
            let rhs = nabla_formula(d as i64, m) + binomial(d as i64 - 1, m + 1);
            ensure(row.rhs == rhs.to_string(), || format!("d={d}, m={m}: rhs {}", row.rhs))?;
        }
    }
    Ok("3 <= d <= 12, constructed for d <= 8".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "nabla at d=3", Duration::from_secs(1), c1_nabla_three),
        (2, "nabla closed form", Duration::from_secs(30), c2_nabla_closed_form),
        (3, "tdm f-vector formula", Duration::from_secs(120), c3_tdm_formula),
        (4, "phi equality at the minimizer", Duration::from_secs(60), c4_phi_minimizer),
        (5, "equality structure", Duration::from_secs(60), c5_equality_structure),
        (6, "complete ordering", Duration::from_secs(60), c6_complete_ordering),
        (7, "two-part 2d+1 bound sharpness", Duration::from_secs(60), c7_two_part_bound),
        (8, "appendix inequality", Duration::from_secs(5), c8_appendix),
        (9, "key proposition by brute force", Duration::from_secs(300), c9_key_prop),
        (10, "topology suite", Duration::from_secs(180), c10_topology),
        (11, "simple-case identity", Duration::from_secs(60), c11_simple_case),
    ];
    let mut failed = 0;
    for (n, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {n:>2} ({name}) [{elapsed:.2?}]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {n:>2} ({name}) [{elapsed:.2?}]: {why}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 11 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 11 criteria failed");
        ExitCode::FAILURE
    }
}
