//! Named lattice checks producing [`CheckReport`]s, as selected on the command line.

use std::fmt;
use std::str::FromStr;

use crate::bounds::verify_grunbaum;
use crate::error::{Error, Result};
use crate::lattice::{GradedLattice, Verdict};
use crate::report::{CheckReport, Witness};
use crate::topology::{is_normal_pseudomanifold, is_pseudomanifold_lattice, is_pure, order_complex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    Lattice,
    Diamond,
    CoatomDist,
    BooleanIntervals,
    Pure,
    Pseudomanifold,
    Normal,
    Grunbaum,
}

impl CheckKind {
    pub const ALL: [CheckKind; 8] = [
        CheckKind::Lattice,
        CheckKind::Diamond,
        CheckKind::CoatomDist,
        CheckKind::BooleanIntervals,
        CheckKind::Pure,
        CheckKind::Pseudomanifold,
        CheckKind::Normal,
        CheckKind::Grunbaum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Lattice => "lattice",
            CheckKind::Diamond => "diamond",
            CheckKind::CoatomDist => "coatom-dist",
            CheckKind::BooleanIntervals => "boolean-intervals",
            CheckKind::Pure => "pure",
            CheckKind::Pseudomanifold => "pseudomanifold",
            CheckKind::Normal => "normal",
            CheckKind::Grunbaum => "grunbaum",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown check {s:?}"),
            })
    }
}

fn pair_report<W>(name: &str, lattice: &GradedLattice, verdict: Verdict<W>, describe: impl Fn(&W) -> Witness) -> CheckReport {
    let mut r = CheckReport::new(name).param("d", lattice.dim());
    if let Some(w) = verdict.witness() {
        r.push_witness(describe(w));
    }
    r
}

/// Runs one check. A failed precondition (only possible for `grunbaum`)
/// yields a skipped report rather than an error.
pub fn run_check(kind: CheckKind, lattice: &GradedLattice) -> Result<CheckReport> {
    let name = kind.name();
    Ok(match kind {
        CheckKind::Lattice => pair_report(name, lattice, lattice.is_lattice(), |&(x, y)| {
            Witness::new("pair without meet or join").with_elements(lattice, &[x, y])
        }),
        CheckKind::Diamond => pair_report(name, lattice, lattice.is_diamond(), |w| {
            Witness::new(format!("rank-2 interval with {} middle elements", w.middle.len()))
                .with_elements(lattice, &[w.lo, w.hi])
        }),
        CheckKind::CoatomDist => pair_report(name, lattice, lattice.is_coatom_distinguishable(), |&(t, s)| {
            Witness::new("every coatom above the first element is above the second")
                .with_elements(lattice, &[t, s])
        }),
        CheckKind::BooleanIntervals => {
            pair_report(name, lattice, lattice.check_upper_intervals_atleast_boolean(), |w| {
                Witness::new(format!(
                    "upper interval has {} elements of relative rank {}, fewer than {}",
                    w.count, w.relative_rank, w.boolean_count
                ))
                .with_elements(lattice, &[w.element])
            })
        }
        CheckKind::Pure => is_pure(&order_complex(lattice)?).param("d", lattice.dim()),
        CheckKind::Pseudomanifold => is_pseudomanifold_lattice(lattice),
        CheckKind::Normal => is_normal_pseudomanifold(lattice)?,
        CheckKind::Grunbaum => match verify_grunbaum(lattice) {
            Ok(r) => r,
            Err(Error::PreconditionViolated(why)) => {
                CheckReport::skipped(name, format!("precondition not met: {why}"))
                    .param("d", lattice.dim())
                    .param("atoms", lattice.atoms().len())
            }
            Err(e) => return Err(e),
        },
    })
}
