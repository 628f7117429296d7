//! Benchmark fixtures shared by the criterion targets.

use polyface::{GradedLattice, PolytopeSpec};

/// Spec strings of the lattices used as benchmark inputs, smallest first.
pub const FIXTURES: [&str; 4] = ["nabla(4)", "gmin(6,4)", "dual(tdm(6,5,2))", "dual(tdm(6,6,3))"];

/// Realizes a fixture spec; panics on a bad string since fixtures are constants.
pub fn fixture(spec: &str) -> GradedLattice {
    let parsed: PolytopeSpec = spec.parse().expect("fixture spec parses");
    parsed.realize().expect("fixture spec realizes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_realize() {
        for spec in FIXTURES {
            assert!(fixture(spec).is_diamond().holds(), "{spec}");
        }
    }
}
