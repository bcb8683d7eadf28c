//! Global resource guardrails.
//!
//! Elimination and iteration can blow up; every potentially explosive
//! operation checks these caps and fails loudly instead of stalling.

use std::sync::atomic::{AtomicU32, AtomicU64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_DEGREE: u32 = 64;
pub const DEFAULT_MAX_BITS: u64 = 1 << 20;
pub const DEFAULT_K: u32 = 6;
pub const DEFAULT_L: u32 = 3;
pub const DEFAULT_M: u32 = 8;
pub const DEFAULT_FIBER_RETRIES: u32 = 32;

static MAX_DEGREE: AtomicU32 = AtomicU32::new(DEFAULT_MAX_DEGREE);
static MAX_BITS: AtomicU64 = AtomicU64::new(DEFAULT_MAX_BITS);

pub fn max_degree() -> u32 {
    MAX_DEGREE.load(Ordering::Relaxed)
}

pub fn max_bits() -> u64 {
    MAX_BITS.load(Ordering::Relaxed)
}

pub fn set_max_degree(d: u32) {
    MAX_DEGREE.store(d, Ordering::Relaxed);
}

pub fn set_max_bits(b: u64) {
    MAX_BITS.store(b, Ordering::Relaxed);
}

pub fn check_degree(deg: u32) -> Result<()> {
    if deg > max_degree() {
        Err(Error::ResourceCap(format!(
            "total degree {deg} exceeds cap {}",
            max_degree()
        )))
    } else {
        Ok(())
    }
}

pub fn check_bits(bits: u64) -> Result<()> {
    if bits > max_bits() {
        Err(Error::ResourceCap(format!(
            "coefficient size {bits} bits exceeds cap {}",
            max_bits()
        )))
    } else {
        Ok(())
    }
}
