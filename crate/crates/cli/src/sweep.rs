//! `sweep <family>`: tables over parameter grids, emitted in parameter order.

use std::ops::RangeInclusive;

use clap::ValueEnum;
use num_bigint::BigInt;
use polyface::bounds::{check_relations, nabla_formula, stacked_lbt_fvector, BoundRow};
use polyface::constructions::{nabla, stacked_polytope, zoo};
use polyface::{run_check, CheckKind, CheckReport, Error, Result, Witness};
use rayon::prelude::*;

use crate::output::{Run, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Every zoo lattice through all structural checks.
    Zoo,
    /// Monotonicity of `T^{d,d-i}_m` in `m` and in `i`, with strictness.
    Relations,
    /// Counted f-vectors of `nabla(d)` against the closed form.
    Nabla,
    /// Counted f-vectors of stacked polytopes with `d + 3` vertices against the formula.
    Stacked,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Zoo => "zoo",
            Family::Relations => "relations",
            Family::Nabla => "nabla",
            Family::Stacked => "stacked",
        }
    }

    pub fn default_range(self) -> RangeInclusive<usize> {
        match self {
            Family::Zoo => 2..=5,
            Family::Relations => 2..=9,
            Family::Nabla => 2..=8,
            Family::Stacked => 3..=8,
        }
    }

    fn min_d(self) -> usize {
        *self.default_range().start()
    }
}

pub fn run(family: Family, range: RangeInclusive<usize>) -> Result<Run> {
    if *range.start() < family.min_d() || range.is_empty() {
        return Err(Error::PreconditionViolated(format!(
            "sweep {} needs {} <= d, got {}..={}",
            family.name(),
            family.min_d(),
            range.start(),
            range.end()
        )));
    }
    let mut report = CheckReport::new(format!("sweep-{}", family.name()))
        .param("d", format!("{}..{}", range.start(), range.end()));
    let mut run = match family {
        Family::Zoo => zoo_sweep(&range, &mut report)?,
        Family::Relations => relations(&range, &mut report),
        Family::Nabla => nabla_sweep(&range, &mut report)?,
        Family::Stacked => stacked(&range, &mut report)?,
    };
    report.set_param("rows", run.table.rows.len());
    run.reports.push(report);
    Ok(run)
}

fn zoo_sweep(range: &RangeInclusive<usize>, report: &mut CheckReport) -> Result<Run> {
    let entries: Vec<_> = zoo(*range.end())?
        .into_iter()
        .filter(|e| range.contains(&e.lattice.dim()))
        .collect();
    let mut header = vec!["spec", "d", "f_vector"];
    header.extend(CheckKind::ALL.iter().map(|k| k.name()));
    let mut table = Table::new(&header);
    let per_entry: Vec<(Vec<String>, Vec<Witness>, usize)> = entries
        .par_iter()
        .map(|e| -> Result<_> {
            let spec = e.spec.to_string();
            let mut row = vec![spec.clone(), e.lattice.dim().to_string(), e.lattice.f_vector().to_csv_row()];
            let (mut bad, mut limits) = (Vec::new(), 0);
            for k in CheckKind::ALL {
                let cell = match run_check(k, &e.lattice) {
                    Ok(r) if r.is_skipped() => "skipped",
                    Ok(r) if r.passed() => "pass",
                    Ok(r) => {
                        let first = r.witnesses().first().map(|w| w.reason.clone()).unwrap_or_default();
                        bad.push(Witness::new(format!("{spec}: {k} failed: {first}")));
                        "fail"
                    }
                    Err(Error::SizeLimit { .. }) => {
                        limits += 1;
                        "size-limit"
                    }
                    Err(e) => return Err(e),
                };
                row.push(cell.to_string());
            }
            Ok((row, bad, limits))
        })
        .collect::<Result<_>>()?;
    let mut limit_hits = 0;
    for (row, bad, limits) in per_entry {
        table.push(row);
        bad.into_iter().for_each(|w| report.push_witness(w));
        limit_hits += limits;
    }
    report.set_param("lattices", entries.len());
    Ok(Run {
        reports: Vec::new(),
        table,
        limit_hits,
    })
}

fn relations(range: &RangeInclusive<usize>, report: &mut CheckReport) -> Run {
    let mut table = Table::new(&[
        "relation", "d", "i", "m", "k", "lhs", "rhs", "strict", "expected_strict", "holds",
    ]);
    let per_d: Vec<Vec<_>> = range
        .clone()
        .into_par_iter()
        .map(|d| {
            let mut out = Vec::new();
            for i in 2..=d {
                for m in 1..=i / 2 {
                    for k in 0..d {
                        out.extend(check_relations(d, i, m, k));
                    }
                }
            }
            out
        })
        .collect();
    for c in per_d.into_iter().flatten() {
        if !c.holds() {
            report.push_witness(Witness::new(format!(
                "relation {} at d={} i={} m={} k={}: {} vs {}, strict={} expected {}",
                c.relation, c.d, c.i, c.m, c.k, c.lhs, c.rhs, c.strict, c.expected_strict
            )));
        }
        table.push(vec![
            c.relation.to_string(),
            c.d.to_string(),
            c.i.to_string(),
            c.m.to_string(),
            c.k.to_string(),
            c.lhs.clone(),
            c.rhs.clone(),
            c.strict.to_string(),
            c.expected_strict.to_string(),
            c.holds().to_string(),
        ]);
    }
    Run {
        reports: Vec::new(),
        table,
        limit_hits: 0,
    }
}

fn exact_rows(rows: Vec<BoundRow>, report: &mut CheckReport) -> Run {
    for r in rows.iter().filter(|r| r.slack != "0") {
        report.push_witness(Witness::new(format!(
            "d={} m={:?} k={:?}: counted {} but formula gives {}",
            r.d, r.m, r.k, r.lhs, r.rhs
        )));
    }
    Run {
        reports: Vec::new(),
        table: Table::from_bound_rows(&rows),
        limit_hits: 0,
    }
}

fn nabla_sweep(range: &RangeInclusive<usize>, report: &mut CheckReport) -> Result<Run> {
    let per_d: Vec<Vec<BoundRow>> = range
        .clone()
        .into_par_iter()
        .map(|d| -> Result<_> {
            let f = nabla(d)?.f_vector();
            Ok((0..d)
                .map(|m| {
                    let mut row = BoundRow::new(d, &BigInt::from(f.counts()[m]), &nabla_formula(d as i64, m as i64));
                    row.m = Some(m);
                    row
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(exact_rows(per_d.into_iter().flatten().collect(), report))
}

fn stacked(range: &RangeInclusive<usize>, report: &mut CheckReport) -> Result<Run> {
    let per_d: Vec<Vec<BoundRow>> = range
        .clone()
        .into_par_iter()
        .map(|d| -> Result<_> {
            let n = d + 3;
            let f = stacked_polytope(d, n)?.f_vector();
            (0..=d - 2)
                .map(|j| {
                    let formula = stacked_lbt_fvector(d as i64, n as i64, j as i64)?;
                    let mut row = BoundRow::new(d, &BigInt::from(f.counts()[j]), &formula);
                    row.k = Some(j);
                    Ok(row)
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(exact_rows(per_d.into_iter().flatten().collect(), report))
}
