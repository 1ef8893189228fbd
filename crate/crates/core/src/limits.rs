use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default maximum number of entries in a counting table.
pub const DEFAULT_TABLE_CAPACITY: usize = 10_000_000;

/// Environment variable that overrides the table capacity.
pub const CAPACITY_ENV: &str = "GENFROB_TABLE_CAPACITY";

/// Resource bounds for table-backed computations, plus an optional
/// cooperative cancellation flag.
#[derive(Debug, Clone)]
pub struct Limits {
    pub table_capacity: usize,
    cancel: Option<Arc<AtomicBool>>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits::new(DEFAULT_TABLE_CAPACITY)
    }
}

impl Limits {
    pub fn new(table_capacity: usize) -> Self {
        Limits { table_capacity, cancel: None }
    }

    /// Reads [`CAPACITY_ENV`]; falls back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAPACITY_ENV) {
            Ok(raw) => {
                let cap = raw.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidInput(format!("{CAPACITY_ENV}={raw:?} is not a non-negative integer"))
                })?;
                Ok(Limits::new(cap))
            }
            Err(_) => Ok(Limits::default()),
        }
    }

    /// Attaches a flag that long searches poll between chunks.
    pub fn with_cancel_flag(mut self, flag: Arc<AtomicBool>) -> Self {
        self.cancel = Some(flag);
        self
    }

    pub fn check_cancelled(&self) -> Result<()> {
        match &self.cancel {
            Some(flag) if flag.load(Ordering::Relaxed) => Err(Error::Cancelled),
            _ => Ok(()),
        }
    }

    /// Fails when a table of `entries` slots would exceed the capacity.
    pub fn check_capacity(&self, entries: u64) -> Result<()> {
        if entries > self.table_capacity as u64 {
            Err(Error::CapacityExceeded { requested: entries, capacity: self.table_capacity })
        } else {
            Ok(())
        }
    }
}
