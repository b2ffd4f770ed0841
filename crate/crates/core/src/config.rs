//! Size budgets. The element bound can be raised or lowered through the
//! `AVOIDANCE_MAX_RING_SIZE` environment variable; everything else is a
//! per-call parameter with these defaults.

use std::sync::OnceLock;

pub const DEFAULT_MAX_RING_SIZE: usize = 4096;
pub const DEFAULT_LATTICE_BOUND: usize = 1 << 16;

/// Largest ring (in elements) a constructor will build.
pub fn max_ring_size() -> usize {
    static CACHE: OnceLock<usize> = OnceLock::new();
    *CACHE.get_or_init(|| {
        std::env::var("AVOIDANCE_MAX_RING_SIZE")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_RING_SIZE)
    })
}

/// Rings up to this size get the full cubic axiom sweep at build time;
/// larger tables are spot-checked on a fixed deterministic sample.
pub const EXHAUSTIVE_AXIOM_LIMIT: usize = 512;
