//! `construct`, `fvector` and `check`.

use std::fs;
use std::path::Path;

use polyface::io::lattice_to_json;
use polyface::{run_check, CheckKind, CheckReport, Error, GradedLattice, PolytopeSpec, Result};
use serde_json::json;

use crate::input::load_lattice;
use crate::output::{emit, Format, Run, Table};

fn summary(spec: &str, l: &GradedLattice, format: Format) -> Result<String> {
    let f = l.f_vector();
    Ok(match format {
        Format::Text => format!(
            "spec: {spec}\nrank: {}\natoms: {}\ncoatoms: {}\nf-vector: {f}\n",
            l.rank(),
            l.atoms().len(),
            l.coatoms().len()
        ),
        Format::Json => {
            let doc = json!({
                "spec": spec,
                "rank": l.rank(),
                "atoms": l.atoms().len(),
                "coatoms": l.coatoms().len(),
                "f_vector": f.counts(),
            });
            serde_json::to_string_pretty(&doc)? + "\n"
        }
        Format::Csv => {
            let mut t = Table::new(&["spec", "rank", "atoms", "coatoms", "f_vector"]);
            t.push(vec![
                spec.to_string(),
                l.rank().to_string(),
                l.atoms().len().to_string(),
                l.coatoms().len().to_string(),
                f.to_csv_row(),
            ]);
            t.to_csv()?
        }
    })
}

/// Realizes `spec`; the lattice JSON goes to `out` when given, the summary to stdout.
pub fn construct(spec: &str, out: Option<&Path>, format: Format) -> Result<()> {
    let parsed: PolytopeSpec = spec.parse()?;
    let lattice = parsed.realize()?;
    if let Some(path) = out {
        fs::write(path, lattice_to_json(&lattice) + "\n")?;
    }
    emit(None, &summary(&parsed.to_string(), &lattice, format)?)
}

pub fn fvector(input: &str, out: Option<&Path>, format: Format) -> Result<()> {
    let (lattice, source) = load_lattice(input)?;
    let f = lattice.f_vector();
    let text = match format {
        Format::Text => format!("f-vector: {f}\neuler sum: {}\n", f.euler_sum()),
        Format::Csv => f.to_csv_row() + "\n",
        Format::Json => {
            let doc = json!({
                "input": source,
                "d": lattice.dim(),
                "f_vector": f.counts(),
                "euler_sum": f.euler_sum(),
            });
            serde_json::to_string_pretty(&doc)? + "\n"
        }
    };
    emit(out, &text)
}

/// Runs the selected checks (all of them when `kinds` is empty). A check
/// stopped by the size cap is reported as skipped and counted in `limit_hits`.
pub fn check(input: &str, kinds: &[CheckKind]) -> Result<Run> {
    let (lattice, _) = load_lattice(input)?;
    let kinds = if kinds.is_empty() { &CheckKind::ALL[..] } else { kinds };
    let mut run = Run {
        table: Table::new(&["check", "status", "witnesses"]),
        ..Run::default()
    };
    for &k in kinds {
        let report = match run_check(k, &lattice) {
            Ok(r) => r,
            Err(e @ Error::SizeLimit { .. }) => {
                run.limit_hits += 1;
                CheckReport::skipped(k.name(), e.to_string())
            }
            Err(e) => return Err(e),
        };
        let status = if report.is_skipped() {
            "skipped"
        } else if report.passed() {
            "pass"
        } else {
            "fail"
        };
        run.table.push(vec![k.name().into(), status.into(), report.witnesses().len().to_string()]);
        run.reports.push(report);
    }
    Ok(run)
}
