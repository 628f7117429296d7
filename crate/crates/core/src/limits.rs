//! Size caps for lattices and GF(2) boundary matrices.

use crate::error::{Error, Result};

/// Default cap on lattice elements and on boundary-matrix dimensions.
pub const DEFAULT_SIZE_LIMIT: usize = 20_000;

pub const SIZE_LIMIT_ENV: &str = "POLYFACE_SIZE_LIMIT";

/// Current cap, read from `POLYFACE_SIZE_LIMIT` when set to a positive integer.
pub fn size_limit() -> usize {
    std::env::var(SIZE_LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_SIZE_LIMIT)
}

pub(crate) fn ensure_within(what: &'static str, size: usize) -> Result<()> {
    let limit = size_limit();
    if size > limit {
        return Err(Error::SizeLimit { what, size, limit });
    }
    Ok(())
}
