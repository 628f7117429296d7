//! Counting faces above a set of atoms, with the three lower bounds for that
//! count on diamond lattices.

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::binomial;
use crate::error::{Error, Result};
use crate::lattice::{ElementId, GradedLattice};

/// Count of rank-`k+1` elements above at least one atom of `S`, with the
/// applicable bounds. Parts (ii) and (iii) are `None` when their hypotheses
/// fail on this lattice and set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeyPropOutcome {
    pub k: usize,
    pub count: usize,
    pub bound_i: String,
    pub bound_ii: Option<String>,
    pub bound_iii: Option<String>,
    pub holds: bool,
}

/// Totals over many `(S, k)` instances.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KeyPropSummary {
    /// Number of atom subsets examined.
    pub subsets: usize,
    /// Number of `(S, k)` pairs examined.
    pub instances: usize,
    pub part_ii_applied: usize,
    pub part_iii_applied: usize,
    /// Part (i) held with equality.
    pub tight_i: usize,
    /// `(atom ids of S, k)` where some applicable bound failed.
    pub violations: Vec<(Vec<ElementId>, usize)>,
}

impl KeyPropSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(mut self, other: Self) -> Self {
        self.subsets += other.subsets;
        self.instances += other.instances;
        self.part_ii_applied += other.part_ii_applied;
        self.part_iii_applied += other.part_iii_applied;
        self.tight_i += other.tight_i;
        self.violations.extend(other.violations);
        self
    }
}

/// Per-lattice tables so each subset costs one pass over the elements.
struct Tables {
    d: usize,
    atoms: Vec<ElementId>,
    /// Atom-support bitmask of every element, bit `j` for `atoms[j]`.
    support: Vec<u64>,
    coatom_support: Vec<u64>,
    /// Atoms covered by more than `d` rank-2 elements.
    heavy: u64,
}

impl Tables {
    fn new(lattice: &GradedLattice) -> Result<Self> {
        let atoms = lattice.atoms().to_vec();
        if atoms.len() > 63 {
            return Err(Error::SizeLimit {
                what: "atoms for subset counting",
                size: atoms.len(),
                limit: 63,
            });
        }
        let mut position = vec![usize::MAX; lattice.len()];
        for (j, &a) in atoms.iter().enumerate() {
            position[a] = j;
        }
        let support: Vec<u64> = lattice
            .elements()
            .map(|z| {
                lattice
                    .atoms_below(z)
                    .iter()
                    .fold(0u64, |acc, &a| acc | 1 << position[a])
            })
            .collect();
        let coatom_support = lattice.coatoms().iter().map(|&c| support[c]).collect();
        let d = lattice.dim();
        let heavy = atoms
            .iter()
            .enumerate()
            .filter(|(_, &a)| lattice.upper_covers(a).len() > d)
            .fold(0u64, |acc, (j, _)| acc | 1 << j);
        Ok(Self {
            d,
            atoms,
            support,
            coatom_support,
            heavy,
        })
    }

    fn mask_of(&self, lattice: &GradedLattice, set: &[ElementId]) -> Result<u64> {
        let mut mask = 0u64;
        for &a in set {
            let j = self
                .atoms
                .iter()
                .position(|&b| b == a)
                .ok_or_else(|| Error::PreconditionViolated(format!("{} is not an atom", lattice.display_label(a))))?;
            mask |= 1 << j;
        }
        Ok(mask)
    }

    fn outcomes(&self, lattice: &GradedLattice, mask: u64) -> Vec<KeyPropOutcome> {
        let d = self.d as i64;
        let m = mask.count_ones() as i64;
        let mut counts = vec![0usize; self.d + 1];
        for z in lattice.elements().skip(1) {
            if self.support[z] & mask != 0 {
                counts[lattice.rank_of(z) - 1] += 1;
            }
        }
        let part_ii = self.heavy & mask != 0;
        let part_iii = self.coatom_support.iter().any(|&c| {
            let hit = (c & mask).count_ones() as i64;
            hit >= 1 && hit <= m - 2
        });
        (0..=self.d)
            .map(|k| {
                let ki = k as i64;
                let sum_i: BigInt = (1..=m).map(|i| binomial(d - i + 1, ki)).sum();
                let count = BigInt::from(counts[k]);
                let mut holds = count >= sum_i;
                let bound_ii = part_ii.then(|| &sum_i + binomial(d - 2, ki - 1));
                let bound_iii = part_iii.then(|| {
                    binomial(d, ki)
                        + binomial(d - 1, ki)
                        + (1..=m - 2).map(|i| binomial(d - i, ki)).sum::<BigInt>()
                });
                for b in [&bound_ii, &bound_iii].into_iter().flatten() {
                    holds &= &count >= b;
                }
                KeyPropOutcome {
                    k,
                    count: counts[k],
                    bound_i: sum_i.to_string(),
                    bound_ii: bound_ii.map(|b| b.to_string()),
                    bound_iii: bound_iii.map(|b| b.to_string()),
                    holds,
                }
            })
            .collect()
    }

    fn summarize(&self, lattice: &GradedLattice, mask: u64) -> KeyPropSummary {
        let mut s = KeyPropSummary {
            subsets: 1,
            ..Default::default()
        };
        for o in self.outcomes(lattice, mask) {
            s.instances += 1;
            s.part_ii_applied += o.bound_ii.is_some() as usize;
            s.part_iii_applied += o.bound_iii.is_some() as usize;
            s.tight_i += (o.count.to_string() == o.bound_i) as usize;
            if !o.holds {
                let set = (0..self.atoms.len())
                    .filter(|j| mask >> j & 1 == 1)
                    .map(|j| self.atoms[j])
                    .collect();
                s.violations.push((set, o.k));
            }
        }
        s
    }
}

/// Count and bounds for one atom set `S` at one `k` (`0 <= k <= d`).
pub fn key_prop_count(lattice: &GradedLattice, set: &[ElementId], k: usize) -> Result<KeyPropOutcome> {
    if k > lattice.dim() {
        return Err(Error::PreconditionViolated(format!("k = {k} exceeds d = {}", lattice.dim())));
    }
    let t = Tables::new(lattice)?;
    let mask = t.mask_of(lattice, set)?;
    if mask.count_ones() as usize != set.len() || set.is_empty() {
        return Err(Error::PreconditionViolated("S must be a nonempty set of distinct atoms".into()));
    }
    Ok(t.outcomes(lattice, mask).swap_remove(k))
}

/// Every nonempty atom subset, every `k`.
pub fn key_prop_exhaustive(lattice: &GradedLattice) -> Result<KeyPropSummary> {
    let t = Tables::new(lattice)?;
    let n = t.atoms.len();
    if n > 20 {
        return Err(Error::SizeLimit {
            what: "atom subsets (2^atoms)",
            size: 1 << n.min(62),
            limit: 1 << 20,
        });
    }
    Ok((1u64..(1u64 << n))
        .into_par_iter()
        .map(|mask| t.summarize(lattice, mask))
        .reduce(KeyPropSummary::default, KeyPropSummary::merge))
}

/// `trials` uniformly random `size`-subsets of atoms from a ChaCha8 stream.
pub fn key_prop_random(
    lattice: &GradedLattice,
    size: usize,
    trials: usize,
    seed: u64,
) -> Result<KeyPropSummary> {
    let t = Tables::new(lattice)?;
    let n = t.atoms.len();
    if size == 0 || size > n {
        return Err(Error::PreconditionViolated(format!("subset size {size} with {n} atoms")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let masks: Vec<u64> = (0..trials)
        .map(|_| sample(&mut rng, n, size).iter().fold(0u64, |acc, j| acc | 1 << j))
        .collect();
    Ok(masks
        .into_par_iter()
        .map(|mask| t.summarize(lattice, mask))
        .reduce(KeyPropSummary::default, KeyPropSummary::merge))
}
