//! Interchangeable clique counters, selectable by name.
//!
//! `mask` is the bit-mask engine in [`crate::clique`]; `naive` is the
//! subset scanner in [`crate::oracle`]. Certificate verification runs
//! through this trait so either can back it.

use crate::clique::{self, Clique};
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::oracle;

pub trait CliqueCounter: Send + Sync {
    fn name(&self) -> &'static str;

    fn count(&self, c: &Coloring, color: Color, k: usize) -> Result<u64>;

    fn enumerate(&self, c: &Coloring, color: Color, k: usize) -> Result<Vec<Clique>>;
}

pub struct MaskEngine;

impl CliqueCounter for MaskEngine {
    fn name(&self) -> &'static str {
        "mask"
    }

    fn count(&self, c: &Coloring, color: Color, k: usize) -> Result<u64> {
        clique::count_mono(c, color, k)
    }

    fn enumerate(&self, c: &Coloring, color: Color, k: usize) -> Result<Vec<Clique>> {
        clique::enumerate_mono(c, color, k)
    }
}

pub struct NaiveOracle;

impl CliqueCounter for NaiveOracle {
    fn name(&self) -> &'static str {
        "naive"
    }

    fn count(&self, c: &Coloring, color: Color, k: usize) -> Result<u64> {
        oracle::naive_count(c, color, k)
    }

    fn enumerate(&self, c: &Coloring, color: Color, k: usize) -> Result<Vec<Clique>> {
        oracle::naive_enumerate(c, color, k)
    }
}

static COUNTERS: [&dyn CliqueCounter; 2] = [&MaskEngine, &NaiveOracle];

/// All registered counters, in registration order.
pub fn counters() -> &'static [&'static dyn CliqueCounter] {
    &COUNTERS
}

pub fn counter_by_name(name: &str) -> Result<&'static dyn CliqueCounter> {
    COUNTERS
        .iter()
        .copied()
        .find(|c| c.name() == name)
        .ok_or_else(|| Error::Unknown { kind: "clique counter", name: name.to_string() })
}
