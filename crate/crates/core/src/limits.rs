//! Process-wide resource caps.
//!
//! Every cap has a default and can be raised or lowered at runtime. The
//! structural and graph caps are bounded by the fixed-width bitsets used by
//! the ideal and canonical-labeling kernels.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: u64 = 256;
pub const HARD_MAX_ORDER: u64 = u16::MAX as u64;
pub const DEFAULT_STRUCTURAL_CAP: u64 = 64;
pub const HARD_STRUCTURAL_CAP: u64 = 256;
pub const DEFAULT_GRAPH_CAP: u64 = 64;
pub const HARD_GRAPH_CAP: u64 = 256;
pub const DEFAULT_ENUMERATION_CAP: u64 = 9;
pub const HARD_ENUMERATION_CAP: u64 = 16;
pub const DEFAULT_EVALUATION_BUDGET: u64 = 10_000_000;

/// Environment variable that overrides the enumeration cap in the CLI.
pub const ENUMERATION_CAP_ENV: &str = "FINRING_ENUM_CAP";

static MAX_ORDER: AtomicU64 = AtomicU64::new(DEFAULT_MAX_ORDER);
static STRUCTURAL_CAP: AtomicU64 = AtomicU64::new(DEFAULT_STRUCTURAL_CAP);
static GRAPH_CAP: AtomicU64 = AtomicU64::new(DEFAULT_GRAPH_CAP);
static ENUMERATION_CAP: AtomicU64 = AtomicU64::new(DEFAULT_ENUMERATION_CAP);
static EVALUATION_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_EVALUATION_BUDGET);

fn set(cell: &AtomicU64, value: u64, hard: u64, what: &str) -> Result<()> {
    if value == 0 || value > hard {
        return Err(Error::InvalidParameter(format!(
            "{what} cap must be in 1..={hard}, got {value}"
        )));
    }
    cell.store(value, Ordering::Relaxed);
    Ok(())
}

pub fn max_order() -> u64 {
    MAX_ORDER.load(Ordering::Relaxed)
}

pub fn set_max_order(value: u64) -> Result<()> {
    set(&MAX_ORDER, value, HARD_MAX_ORDER, "order")
}

pub fn structural_cap() -> u64 {
    STRUCTURAL_CAP.load(Ordering::Relaxed)
}

pub fn set_structural_cap(value: u64) -> Result<()> {
    set(&STRUCTURAL_CAP, value, HARD_STRUCTURAL_CAP, "structural")
}

pub fn graph_cap() -> u64 {
    GRAPH_CAP.load(Ordering::Relaxed)
}

pub fn set_graph_cap(value: u64) -> Result<()> {
    set(&GRAPH_CAP, value, HARD_GRAPH_CAP, "graph")
}

pub fn enumeration_cap() -> u64 {
    ENUMERATION_CAP.load(Ordering::Relaxed)
}

pub fn set_enumeration_cap(value: u64) -> Result<()> {
    set(&ENUMERATION_CAP, value, HARD_ENUMERATION_CAP, "enumeration")
}

pub fn evaluation_budget() -> u64 {
    EVALUATION_BUDGET.load(Ordering::Relaxed)
}

pub fn set_evaluation_budget(value: u64) -> Result<()> {
    set(&EVALUATION_BUDGET, value, u64::MAX, "evaluation budget")
}

pub(crate) fn check_order(order: u64) -> Result<()> {
    let cap = max_order();
    if order > cap {
        return Err(Error::OrderCapExceeded {
            what: "ring order",
            order,
            cap,
        });
    }
    Ok(())
}

pub(crate) fn check_structural(order: usize) -> Result<()> {
    let cap = structural_cap();
    if order as u64 > cap {
        return Err(Error::OrderCapExceeded {
            what: "structural",
            order: order as u64,
            cap,
        });
    }
    Ok(())
}

pub(crate) fn check_enumeration(order: u64) -> Result<()> {
    let cap = enumeration_cap();
    if order > cap {
        return Err(Error::OrderCapExceeded {
            what: "enumeration",
            order,
            cap,
        });
    }
    Ok(())
}
