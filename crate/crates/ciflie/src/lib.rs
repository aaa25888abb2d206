//! JSON documents, theorem reports and the command-line front end for
//! `ciflie-core`.

use std::sync::atomic::{AtomicUsize, Ordering};

use ciflie_core::DEFAULT_UNIVERSE_CAP;

pub mod cli;
pub mod format;
pub mod report;

/// Environment variable overriding the universe cap.
pub const UNIVERSE_CAP_ENV: &str = "CIF_UNIVERSE_CAP";

// 0 = unset
static CAP_OVERRIDE: AtomicUsize = AtomicUsize::new(0);

/// Set the universe cap for this process (takes precedence over the environment).
pub fn set_universe_cap(cap: usize) {
    CAP_OVERRIDE.store(cap, Ordering::Relaxed);
}

/// Explicit override, else `CIF_UNIVERSE_CAP`, else the library default.
pub fn universe_cap() -> usize {
    match CAP_OVERRIDE.load(Ordering::Relaxed) {
        0 => std::env::var(UNIVERSE_CAP_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_UNIVERSE_CAP),
        cap => cap,
    }
}
