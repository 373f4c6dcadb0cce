//! Budgeted search results shared by every exact search in the crate.

use serde::Serialize;

/// Default node budget for a single search.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Result of a budgeted exact search.
///
/// `NotFound` is a proof of nonexistence (the search tree was exhausted).
/// `Unknown` means the budget ran out first and says nothing either way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", content = "witness", rename_all = "kebab-case")]
pub enum Outcome<T> {
    Found(T),
    #[serde(rename = "none")]
    NotFound,
    Unknown,
}

impl<T> Outcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_ref(&self) -> Outcome<&T> {
        match self {
            Outcome::Found(t) => Outcome::Found(t),
            Outcome::NotFound => Outcome::NotFound,
            Outcome::Unknown => Outcome::Unknown,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::NotFound => Outcome::NotFound,
            Outcome::Unknown => Outcome::Unknown,
        }
    }

    /// Lower-case tag used in reports: `found`, `none` or `unknown`.
    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::Found(_) => "found",
            Outcome::NotFound => "none",
            Outcome::Unknown => "unknown",
        }
    }
}

/// Counts search-tree nodes against a fixed limit.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    /// Charges one node; returns `false` once the limit is exceeded.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

/// Internal control signal of the backtracking searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}
