use std::fmt;

use serde::{Deserialize, Serialize};

/// Face numbers `f_0 .. f_{d-1}`. The empty face `f_{-1} = 1` is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FVector {
    counts: Vec<usize>,
}

impl FVector {
    pub fn new(counts: Vec<usize>) -> Self {
        Self { counts }
    }

    pub fn dim(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `f_k`, with `f_{-1} = 1` and zero outside `-1..d`.
    pub fn get(&self, k: isize) -> usize {
        match k {
            -1 => 1,
            k if k < -1 => 0,
            k => self.counts.get(k as usize).copied().unwrap_or(0),
        }
    }

    /// `sum_k (-1)^k f_k` over `0 <= k < d`.
    pub fn euler_sum(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Componentwise `<=`; vectors of different dimension are incomparable.
    pub fn componentwise_le(&self, other: &FVector) -> bool {
        self.dim() == other.dim() && self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b)
    }

    /// Comma-separated counts, no spaces.
    pub fn to_csv_row(&self) -> String {
        self.counts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv_row())
    }
}

impl From<Vec<usize>> for FVector {
    fn from(counts: Vec<usize>) -> Self {
        Self::new(counts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implicit_empty_face() {
        let f = FVector::new(vec![4, 4]);
        assert_eq!(f.get(-1), 1);
        assert_eq!(f.get(0), 4);
        assert_eq!(f.get(2), 0);
        assert_eq!(f.euler_sum(), 0);
        assert_eq!(f.to_string(), "(4,4)");
    }

    #[test]
    fn componentwise_order() {
        let a = FVector::new(vec![6, 13, 13, 6]);
        let b = FVector::new(vec![6, 14, 13, 6]);
        assert!(a.componentwise_le(&b));
        assert!(!b.componentwise_le(&a));
        assert!(!a.componentwise_le(&FVector::new(vec![6, 13, 13])));
    }
}
