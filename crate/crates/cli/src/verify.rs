//! `verify <theorem>`: parameter sweeps dispatched to the bound verifiers.

use std::ops::RangeInclusive;

use clap::ValueEnum;
use num_bigint::BigInt;
use polyface::bounds::{
    bound_a, bound_b, key_prop_exhaustive, key_prop_random, phi, tdm_fvector_formula, verify_2d1_bound,
    verify_appendix, verify_complete_ordering, verify_complete_ordering_constructed, verify_grunbaum,
    verify_simple_case, BoundRow, KeyPropSummary,
};
use polyface::constructions::{boolean_lattice, grunbaum_minimizer, tdm_lattice};
use polyface::{CheckReport, Error, GradedLattice, PolytopeSpec, Result, Witness};
use rayon::prelude::*;

use crate::output::{Run, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    PhiMinimizer,
    Ordering,
    Appendix,
    #[value(name = "two-part-2d1")]
    TwoPart2d1,
    KeyProp,
    SimpleCase,
    TdmFormula,
}

impl Theorem {
    /// Default dimension range when neither `--d` nor `--dmax` is given.
    pub fn default_range(self) -> RangeInclusive<usize> {
        match self {
            Theorem::PhiMinimizer => 2..=8,
            Theorem::Ordering => 2..=12,
            Theorem::Appendix => 6..=200,
            Theorem::TwoPart2d1 => 3..=8,
            Theorem::KeyProp => 2..=6,
            Theorem::SimpleCase => 3..=12,
            Theorem::TdmFormula => 2..=8,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    pub trials: usize,
    /// Largest `d` at which sweeps also build lattices instead of using formulas alone.
    pub construct_max: usize,
}

fn big(x: usize) -> BigInt {
    BigInt::from(x)
}

fn ensure_min(range: &RangeInclusive<usize>, min: usize, what: &str) -> Result<()> {
    if *range.start() < min || range.is_empty() {
        return Err(Error::PreconditionViolated(format!(
            "{what} needs {min} <= d, got {}..={}",
            range.start(),
            range.end()
        )));
    }
    Ok(())
}

fn range_param(r: &RangeInclusive<usize>) -> String {
    format!("{}..{}", r.start(), r.end())
}

pub fn run(theorem: Theorem, range: RangeInclusive<usize>, opts: Options) -> Result<Run> {
    match theorem {
        Theorem::PhiMinimizer => phi_minimizer(range),
        Theorem::Ordering => ordering(range, opts),
        Theorem::Appendix => appendix(range),
        Theorem::TwoPart2d1 => two_part(range),
        Theorem::KeyProp => key_prop(range, opts),
        Theorem::SimpleCase => simple_case(range, opts),
        Theorem::TdmFormula => tdm_formula(range),
    }
}

/// `f_k` of the minimizer equals `phi_k` for `1 <= s <= d`, and the
/// minimizer passes the full Grünbaum check.
fn phi_minimizer(range: RangeInclusive<usize>) -> Result<Run> {
    ensure_min(&range, 2, "phi-minimizer")?;
    let pairs: Vec<(usize, usize)> = range.clone().flat_map(|d| (1..=d).map(move |s| (d, s))).collect();
    let per_pair: Vec<(Vec<BoundRow>, Vec<Witness>)> = pairs
        .par_iter()
        .map(|&(d, s)| -> Result<_> {
            let l = if s == 1 { boolean_lattice(d + 1) } else { grunbaum_minimizer(d, s)? };
            let f = l.f_vector();
            let mut rows = Vec::new();
            let mut bad = Vec::new();
            for k in 0..d {
                let p = phi(k as i64, (d + s) as i64, d as i64);
                let mut row = BoundRow::new(d, &big(f.counts()[k]), &p);
                row.s = Some(s);
                row.k = Some(k);
                if row.lhs != row.rhs {
                    bad.push(Witness::new(format!("d={d} s={s}: f_{k} = {} but phi = {}", row.lhs, row.rhs)));
                }
                rows.push(row);
            }
            let g = verify_grunbaum(&l)?;
            bad.extend(g.witnesses().iter().map(|w| Witness::new(format!("d={d} s={s}: {}", w.reason))));
            Ok((rows, bad))
        })
        .collect::<Result<_>>()?;
    let mut report = CheckReport::new("phi-minimizer")
        .param("d", range_param(&range))
        .param("pairs", pairs.len());
    let mut rows = Vec::new();
    for (r, w) in per_pair {
        rows.extend(r);
        w.into_iter().for_each(|w| report.push_witness(w));
    }
    report.set_param("rows", rows.len());
    Ok(Run {
        reports: vec![report],
        table: Table::from_bound_rows(&rows),
        limit_hits: 0,
    })
}

fn ordering(range: RangeInclusive<usize>, opts: Options) -> Result<Run> {
    ensure_min(&range, 2, "ordering")?;
    let per_d: Vec<_> = range
        .clone()
        .into_par_iter()
        .map(|d| {
            if d <= opts.construct_max {
                verify_complete_ordering_constructed(d)
            } else {
                Ok(verify_complete_ordering(d))
            }
        })
        .collect::<Result<_>>()?;
    let mut report = CheckReport::new("ordering").param("d", range_param(&range));
    let mut table = Table::new(&["d", "facets", "position", "i", "m", "f_vector"]);
    let (mut classes, mut chains) = (0, 0);
    for cert in per_d.iter().flatten() {
        classes += 1;
        if cert.chain.len() > 1 {
            chains += 1;
        }
        for (pos, (&(i, m), f)) in cert.chain.iter().zip(&cert.fvectors).enumerate() {
            table.push(vec![
                cert.d.to_string(),
                cert.facets.to_string(),
                pos.to_string(),
                i.to_string(),
                m.to_string(),
                f.join(" "),
            ]);
        }
        for v in &cert.violations {
            report.push_witness(Witness::new(format!("d={} facets={}: {v}", cert.d, cert.facets)));
        }
    }
    report.set_param("classes", classes);
    report.set_param("chains", chains);
    report.set_param("constructed_up_to", opts.construct_max.min(*range.end()));
    Ok(Run {
        reports: vec![report],
        table,
        limit_hits: 0,
    })
}

fn appendix(range: RangeInclusive<usize>) -> Result<Run> {
    ensure_min(&range, 6, "appendix")?;
    let d_max = *range.end();
    let a = verify_appendix(d_max);
    let mut report = CheckReport::new("appendix")
        .param("d_max", d_max)
        .param("checked", a.checked)
        .param("recursion_equal", a.recursion_equal)
        .param("recursion_strict", a.recursion_strict);
    for (m, d, v) in &a.violations {
        report.push_witness(Witness::new(format!("delta({m},{d}) = {v} < 0")));
    }
    for (m, d) in &a.recursion_violations {
        report.push_witness(Witness::new(format!(
            "delta({m},{d}) < delta({m},{}) + delta({},{})",
            d - 1,
            m - 1,
            d - 1
        )));
    }
    let rows: Vec<BoundRow> = (6..=d_max)
        .flat_map(|d| {
            (1..d.div_ceil(2) - 1).map(move |m| {
                let mut row = BoundRow::new(d, &bound_a(m as i64, d as i64), &bound_b(m as i64, d as i64));
                row.m = Some(m);
                row
            })
        })
        .collect();
    Ok(Run {
        reports: vec![report],
        table: Table::from_bound_rows(&rows),
        limit_hits: 0,
    })
}

/// The two bounds on polytopes with at least `2d + 1` vertices. Sharpness
/// is asserted for `nabla(d)` and, at even `d >= 6`, for the dual of
/// `T^{d,d/2-2}_2`. Duals of stacked polytopes with `2d + 1` vertices are
/// checked as extra inputs.
fn two_part(range: RangeInclusive<usize>) -> Result<Run> {
    ensure_min(&range, 3, "two-part-2d1")?;
    let mut cases: Vec<(PolytopeSpec, usize, bool)> = Vec::new();
    for d in range.clone() {
        cases.push((PolytopeSpec::Nabla(d), d, true));
        if d % 2 == 0 && d >= 4 {
            let t = PolytopeSpec::Tdm { d, i: d / 2 + 2, m: 2 };
            cases.push((PolytopeSpec::dual_of(t), d, d >= 6));
        }
        let stacked = (0..d).fold(PolytopeSpec::Simplex(d), |acc, _| PolytopeSpec::stack_of(acc));
        cases.push((PolytopeSpec::dual_of(stacked), d, false));
    }
    let built: Vec<(String, usize, bool, GradedLattice)> = cases
        .into_par_iter()
        .map(|(spec, d, sharp)| Ok((spec.to_string(), d, sharp, spec.realize()?)))
        .collect::<Result<_>>()?;
    let mut report = CheckReport::new("two-part-2d1").param("d", range_param(&range));
    let mut table = Table::new(&["lattice", "d", "facets", "m", "f_m", "bound", "which", "slack"]);
    let (mut checked, mut skipped) = (0, 0);
    for (name, d, sharp, l) in &built {
        let r = match verify_2d1_bound(l) {
            Ok(r) => r,
            Err(Error::PreconditionViolated(why)) => {
                skipped += 1;
                report.push_note(format!("{name}: skipped, {why}"));
                continue;
            }
            Err(e) => return Err(e),
        };
        checked += 1;
        for w in r.witnesses() {
            report.push_witness(Witness::new(format!("{name}: {}", w.reason)));
        }
        let which = r.params()["bound"].as_str().unwrap_or("").to_string();
        if *sharp && r.params()["attained"] != true {
            report.push_witness(Witness::new(format!("{name}: bound {which} not attained")));
        }
        let f = l.f_vector();
        for m in 1..*d {
            let b = if which == "A" { bound_a(m as i64, *d as i64) } else { bound_b(m as i64, *d as i64) };
            let fm = big(f.counts()[m]);
            table.push(vec![
                name.clone(),
                d.to_string(),
                l.coatoms().len().to_string(),
                m.to_string(),
                fm.to_string(),
                b.to_string(),
                which.clone(),
                (&fm - &b).to_string(),
            ]);
        }
    }
    for d in range.clone().filter(|d| d % 2 == 0 && *d >= 6) {
        let cross = (1..d).find(|&m| bound_a(m as i64, d as i64) < bound_b(m as i64, d as i64));
        match cross {
            Some(m) => report.push_note(format!("d={d}: A < B first at m={m}")),
            None => report.push_note(format!("d={d}: A >= B for all m")),
        }
    }
    report.set_param("checked", checked);
    report.set_param("skipped", skipped);
    Ok(Run {
        reports: vec![report],
        table,
        limit_hits: 0,
    })
}

/// Exhaustive subsets over simplices, `nabla(d)`, the minimizers and the dual
/// `T` polytopes, plus seeded random 3-subsets on `gmin(dmax, dmax-2)`.
fn key_prop(range: RangeInclusive<usize>, opts: Options) -> Result<Run> {
    ensure_min(&range, 2, "key-prop")?;
    let mut specs: Vec<PolytopeSpec> = Vec::new();
    for d in range.clone() {
        specs.push(PolytopeSpec::Simplex(d));
        specs.push(PolytopeSpec::Nabla(d));
        specs.extend((2..=d).map(|s| PolytopeSpec::GrunbaumMin { d, s }));
        for i in 2..=d {
            specs.extend((1..=i / 2).map(|m| PolytopeSpec::dual_of(PolytopeSpec::Tdm { d, i, m })));
        }
    }
    let summaries: Vec<(String, &'static str, KeyPropSummary)> = specs
        .par_iter()
        .map(|spec| Ok((spec.to_string(), "exhaustive", key_prop_exhaustive(&spec.realize()?)?)))
        .collect::<Result<_>>()?;
    let mut all = summaries;
    let d = *range.end();
    if d >= 4 {
        let l = grunbaum_minimizer(d, d - 2)?;
        let s = key_prop_random(&l, 3, opts.trials, opts.seed)?;
        all.push((format!("gmin({d},{})", d - 2), "random", s));
    }
    let mut report = CheckReport::new("key-prop").param("d", range_param(&range)).with_seed(opts.seed);
    let mut table = Table::new(&[
        "lattice", "mode", "subsets", "instances", "part_ii", "part_iii", "tight_i", "violations",
    ]);
    let (mut subsets, mut instances) = (0, 0);
    for (name, mode, s) in &all {
        subsets += s.subsets;
        instances += s.instances;
        for (set, k) in &s.violations {
            report.push_witness(Witness::new(format!("{name}: atoms {set:?}, k={k}")));
        }
        table.push(vec![
            name.clone(),
            mode.to_string(),
            s.subsets.to_string(),
            s.instances.to_string(),
            s.part_ii_applied.to_string(),
            s.part_iii_applied.to_string(),
            s.tight_i.to_string(),
            s.violations.len().to_string(),
        ]);
    }
    report.set_param("lattices", all.len());
    report.set_param("subsets", subsets);
    report.set_param("instances", instances);
    report.set_param("trials", opts.trials);
    Ok(Run {
        reports: vec![report],
        table,
        limit_hits: 0,
    })
}

fn simple_case(range: RangeInclusive<usize>, opts: Options) -> Result<Run> {
    ensure_min(&range, 3, "simple-case")?;
    let reports: Vec<_> = range
        .clone()
        .into_par_iter()
        .map(|d| verify_simple_case(d, d <= opts.construct_max))
        .collect::<Result<_>>()?;
    let mut report = CheckReport::new("simple-case")
        .param("d", range_param(&range))
        .param("constructed_up_to", opts.construct_max.min(*range.end()));
    let mut rows = Vec::new();
    for r in reports {
        for m in &r.violations {
            report.push_witness(Witness::new(format!("d={}: identity fails at m={m}", r.d)));
        }
        for m in &r.construction_mismatches {
            report.push_witness(Witness::new(format!("d={}: stacked lattice disagrees at m={m}", r.d)));
        }
        rows.extend(r.rows);
    }
    report.set_param("rows", rows.len());
    Ok(Run {
        reports: vec![report],
        table: Table::from_bound_rows(&rows),
        limit_hits: 0,
    })
}

/// Brute-force f-vectors of `T^{d,d-i}_m` against the closed form.
fn tdm_formula(range: RangeInclusive<usize>) -> Result<Run> {
    ensure_min(&range, 2, "tdm-formula")?;
    let triples: Vec<(usize, usize, usize)> = range
        .clone()
        .flat_map(|d| (2..=d).flat_map(move |i| (1..=i / 2).map(move |m| (d, i, m))))
        .collect();
    let per: Vec<Vec<BoundRow>> = triples
        .par_iter()
        .map(|&(d, i, m)| -> Result<_> {
            let f = tdm_lattice(d, i, m)?.f_vector();
            let formula = tdm_fvector_formula(d, i, m);
            Ok((0..d)
                .map(|k| {
                    let mut row = BoundRow::new(d, &big(f.counts()[k]), &formula[k]);
                    row.i = Some(i);
                    row.m = Some(m);
                    row.k = Some(k);
                    row
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let rows: Vec<BoundRow> = per.into_iter().flatten().collect();
    let mut report = CheckReport::new("tdm-formula")
        .param("d", range_param(&range))
        .param("lattices", triples.len())
        .param("rows", rows.len());
    for r in rows.iter().filter(|r| r.slack != "0") {
        report.push_witness(Witness::new(format!(
            "d={} i={} m={} k={}: counted {} but formula gives {}",
            r.d,
            r.i.unwrap(),
            r.m.unwrap(),
            r.k.unwrap(),
            r.lhs,
            r.rhs
        )));
    }
    Ok(Run {
        reports: vec![report],
        table: Table::from_bound_rows(&rows),
        limit_hits: 0,
    })
}
