//! Constructor expressions and their text form, e.g. `pyr(dual(tdm(5,5,2)),1)`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{
    boolean_lattice, grunbaum_minimizer, nabla, prism, pyramid_times, stack_on_smallest_simplex_facet,
    tdm_lattice,
};
use crate::error::{Error, Result};
use crate::lattice::GradedLattice;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PolytopeSpec {
    Simplex(usize),
    Tdm { d: usize, i: usize, m: usize },
    Pyr(Box<PolytopeSpec>, usize),
    Prism(usize),
    Stack(Box<PolytopeSpec>),
    Dual(Box<PolytopeSpec>),
    Nabla(usize),
    GrunbaumMin { d: usize, s: usize },
}

impl PolytopeSpec {
    pub fn dual_of(inner: PolytopeSpec) -> Self {
        Self::Dual(Box::new(inner))
    }

    pub fn stack_of(inner: PolytopeSpec) -> Self {
        Self::Stack(Box::new(inner))
    }

    pub fn pyr_of(inner: PolytopeSpec, times: usize) -> Self {
        Self::Pyr(Box::new(inner), times)
    }

    /// Checks parameter ranges throughout the tree.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::SpecInvariantViolated(msg));
        match self {
            Self::Simplex(_) => Ok(()),
            &Self::Tdm { d, i, m } => {
                if i < 2 || i > d {
                    bad(format!("tdm({d},{i},{m}) needs 2 <= i <= d"))
                } else if m < 1 || m > i / 2 {
                    bad(format!("tdm({d},{i},{m}) needs 1 <= m <= floor(i/2)"))
                } else {
                    Ok(())
                }
            }
            &Self::Prism(s) if s < 1 => bad("prism(s) needs s >= 1".into()),
            Self::Prism(_) => Ok(()),
            &Self::Nabla(d) if d < 2 => bad(format!("nabla({d}) needs d >= 2")),
            Self::Nabla(_) => Ok(()),
            &Self::GrunbaumMin { d, s } if s < 2 || s > d => {
                bad(format!("gmin({d},{s}) needs 2 <= s <= d"))
            }
            Self::GrunbaumMin { .. } => Ok(()),
            Self::Pyr(inner, _) | Self::Stack(inner) | Self::Dual(inner) => inner.validate(),
        }
    }

    /// Dimension of the polytope the expression denotes.
    pub fn dim(&self) -> usize {
        match self {
            Self::Simplex(d) | Self::Nabla(d) => *d,
            Self::Tdm { d, .. } | Self::GrunbaumMin { d, .. } => *d,
            Self::Prism(s) => *s,
            Self::Pyr(inner, t) => inner.dim() + t,
            Self::Stack(inner) | Self::Dual(inner) => inner.dim(),
        }
    }

    /// Builds the face lattice.
    pub fn realize(&self) -> Result<GradedLattice> {
        self.validate()?;
        self.build()
    }

    fn build(&self) -> Result<GradedLattice> {
        match self {
            Self::Simplex(d) => Ok(boolean_lattice(d + 1)),
            &Self::Tdm { d, i, m } => tdm_lattice(d, i, m),
            Self::Pyr(inner, t) => Ok(pyramid_times(&inner.build()?, *t)),
            Self::Prism(s) => prism(*s),
            Self::Stack(inner) => stack_on_smallest_simplex_facet(&inner.build()?, "w"),
            Self::Dual(inner) => Ok(inner.build()?.dual()),
            Self::Nabla(d) => nabla(*d),
            &Self::GrunbaumMin { d, s } => grunbaum_minimizer(d, s),
        }
    }
}

impl fmt::Display for PolytopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Simplex(d) => write!(f, "simplex({d})"),
            Self::Tdm { d, i, m } => write!(f, "tdm({d},{i},{m})"),
            Self::Pyr(inner, t) => write!(f, "pyr({inner},{t})"),
            Self::Prism(s) => write!(f, "prism({s})"),
            Self::Stack(inner) => write!(f, "stack({inner})"),
            Self::Dual(inner) => write!(f, "dual({inner})"),
            Self::Nabla(d) => write!(f, "nabla({d})"),
            Self::GrunbaumMin { d, s } => write!(f, "gmin({d},{s})"),
        }
    }
}

impl FromStr for PolytopeSpec {
    type Err = Error;

    /// Parses the expression syntax; ranges are checked by [`PolytopeSpec::validate`].
    fn from_str(text: &str) -> Result<Self> {
        let mut p = Parser { text, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn take_while(&mut self, pred: impl Fn(u8) -> bool) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(&pred) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit()).to_string();
        if digits.is_empty() {
            return Err(self.error("expected a nonnegative integer"));
        }
        digits
            .parse()
            .map_err(|_| self.error(format!("integer {digits} is too large")))
    }

    fn spec(&mut self) -> Result<PolytopeSpec> {
        self.skip_ws();
        let start = self.pos;
        let name = self.take_while(|c| c.is_ascii_lowercase()).to_string();
        if name.is_empty() {
            return Err(self.error("expected a constructor name"));
        }
        self.expect(b'(')?;
        let spec = match name.as_str() {
            "simplex" => PolytopeSpec::Simplex(self.number()?),
            "tdm" => {
                let d = self.number()?;
                self.expect(b',')?;
                let i = self.number()?;
                self.expect(b',')?;
                let m = self.number()?;
                PolytopeSpec::Tdm { d, i, m }
            }
            "pyr" => {
                let inner = self.spec()?;
                self.expect(b',')?;
                PolytopeSpec::pyr_of(inner, self.number()?)
            }
            "prism" => PolytopeSpec::Prism(self.number()?),
            "stack" => PolytopeSpec::stack_of(self.spec()?),
            "dual" => PolytopeSpec::dual_of(self.spec()?),
            "nabla" => PolytopeSpec::Nabla(self.number()?),
            "gmin" => {
                let d = self.number()?;
                self.expect(b',')?;
                PolytopeSpec::GrunbaumMin { d, s: self.number()? }
            }
            other => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unknown constructor {other:?}"),
                })
            }
        };
        self.expect(b')')?;
        Ok(spec)
    }
}

/// Every expression in the test zoo for `2 <= d <= max_d`: simplices, all
/// `T^{d,d-i}_m` and their duals, minimizers, `∇` and its dual, and once- and
/// twice-stacked simplices.
pub fn zoo_specs(max_d: usize) -> Vec<PolytopeSpec> {
    use PolytopeSpec::*;
    let mut out = Vec::new();
    for d in 2..=max_d {
        out.push(Simplex(d));
        for i in 2..=d {
            for m in 1..=i / 2 {
                out.push(Tdm { d, i, m });
                out.push(PolytopeSpec::dual_of(Tdm { d, i, m }));
            }
        }
        for s in 2..=d {
            out.push(GrunbaumMin { d, s });
        }
        out.push(Nabla(d));
        out.push(PolytopeSpec::dual_of(Nabla(d)));
        out.push(PolytopeSpec::stack_of(Simplex(d)));
        out.push(PolytopeSpec::stack_of(PolytopeSpec::stack_of(Simplex(d))));
    }
    out
}

pub struct ZooEntry {
    pub spec: PolytopeSpec,
    pub lattice: GradedLattice,
}

/// Realizes [`zoo_specs`] in parallel, in spec order.
pub fn zoo(max_d: usize) -> Result<Vec<ZooEntry>> {
    zoo_specs(max_d)
        .into_par_iter()
        .map(|spec| {
            let lattice = spec.realize()?;
            Ok(ZooEntry { spec, lattice })
        })
        .collect()
}
