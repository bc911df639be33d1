//! Process-wide resource bounds.
//!
//! Enumerations that can blow up (congruence and ideal lattices, table
//! scans) consult these bounds and fail with `ResourceLimit` instead of
//! exhausting memory. The CLI installs values from its flags at startup.

use std::sync::atomic::{AtomicU64, Ordering};

static MAX_CONGRUENCES: AtomicU64 = AtomicU64::new(Limits::DEFAULT.max_congruences);
static MAX_IDEALS: AtomicU64 = AtomicU64::new(Limits::DEFAULT.max_ideals);
static MAX_CARRIER: AtomicU64 = AtomicU64::new(Limits::DEFAULT.max_carrier);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_congruences: u64,
    pub max_ideals: u64,
    /// Largest carrier any construction may produce.
    pub max_carrier: u64,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_congruences: 1 << 20,
        max_ideals: 1 << 20,
        max_carrier: 1 << 12,
    };

    pub fn current() -> Limits {
        Limits {
            max_congruences: MAX_CONGRUENCES.load(Ordering::Relaxed),
            max_ideals: MAX_IDEALS.load(Ordering::Relaxed),
            max_carrier: MAX_CARRIER.load(Ordering::Relaxed),
        }
    }

    pub fn install(self) {
        MAX_CONGRUENCES.store(self.max_congruences, Ordering::Relaxed);
        MAX_IDEALS.store(self.max_ideals, Ordering::Relaxed);
        MAX_CARRIER.store(self.max_carrier, Ordering::Relaxed);
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}

/// Largest `|M|` for which `End(M)` is built by scanning all maps.
pub const MAX_ENDOMORPHISM_CARRIER: usize = 8;
/// Largest carrier for which the semiregular subset scan runs (`2^20` subsets).
pub const MAX_SEMIREGULAR_CARRIER: usize = 20;
/// Largest carrier for exhaustive permutation canonical forms.
pub const MAX_PERMUTATION_CARRIER: usize = 10;
/// Default maximum order for exhaustive hemiring generation.
pub const MAX_ENUMERATION_ORDER: usize = 4;
