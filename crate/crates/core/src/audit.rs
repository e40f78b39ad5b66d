//! Counters instrumenting the comparison layer.
//!
//! Every decision in this crate is made by exact integer arithmetic; the
//! counters make that auditable. [`exact_cmp_count`] tallies exact sign
//! evaluations. [`float_cmp_count`] tallies floating-point comparisons and
//! must stay at zero across any analysis or verification run — the only way
//! to increment it is [`float_decide`], which exists so the regression test
//! can prove the instrument is live. Nothing else in the crate calls it.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

static EXACT_CMPS: AtomicU64 = AtomicU64::new(0);
static FLOAT_CMPS: AtomicU64 = AtomicU64::new(0);

pub(crate) fn record_exact_cmp() {
    EXACT_CMPS.fetch_add(1, AtomicOrdering::Relaxed);
}

pub fn exact_cmp_count() -> u64 {
    EXACT_CMPS.load(AtomicOrdering::Relaxed)
}

pub fn float_cmp_count() -> u64 {
    FLOAT_CMPS.load(AtomicOrdering::Relaxed)
}

/// The only floating-point comparison gate in the crate. Production code has
/// no call sites; a verify run asserts the counter is still zero afterwards.
pub fn float_decide(a: f64, b: f64) -> Ordering {
    FLOAT_CMPS.fetch_add(1, AtomicOrdering::Relaxed);
    a.partial_cmp(&b).unwrap_or(Ordering::Equal)
}

/// Snapshot of both counters, for asserting a region performed no float
/// comparisons.
#[derive(Debug, Clone, Copy)]
pub struct AuditSnapshot {
    pub exact_cmps: u64,
    pub float_cmps: u64,
}

pub fn snapshot() -> AuditSnapshot {
    AuditSnapshot {
        exact_cmps: exact_cmp_count(),
        float_cmps: float_cmp_count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_gate_is_live() {
        let before = float_cmp_count();
        assert_eq!(float_decide(1.0, 2.0), Ordering::Less);
        assert_eq!(float_cmp_count(), before + 1);
    }
}
