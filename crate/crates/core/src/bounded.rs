//! Budgeted results of searches over infinite graphs.

use core::cmp::Ordering;
use core::fmt;

/// Result of a budgeted search: either the exact value or a lower bound.
///
/// `AtLeast(n)` is returned when the search ran out of depth or node budget,
/// and also when two vertices lie in distinct components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bounded {
    Exact(u64),
    AtLeast(u64),
}

impl Bounded {
    pub fn exact(self) -> Option<u64> {
        match self {
            Bounded::Exact(v) => Some(v),
            Bounded::AtLeast(_) => None,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Bounded::Exact(_))
    }

    /// The value, or the lower bound.
    pub fn lower(self) -> u64 {
        match self {
            Bounded::Exact(v) | Bounded::AtLeast(v) => v,
        }
    }

    /// Upper envelope of two budgeted values. Unknown stays unknown.
    pub fn max(self, other: Bounded) -> Bounded {
        let v = self.lower().max(other.lower());
        if self.is_exact() && other.is_exact() {
            Bounded::Exact(v)
        } else {
            Bounded::AtLeast(v)
        }
    }
}

impl PartialOrd for Bounded {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Bounded::Exact(a), Bounded::Exact(b)) => Some(a.cmp(b)),
            _ => None,
        }
    }
}

impl fmt::Display for Bounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bounded::Exact(v) => write!(f, "{v}"),
            Bounded::AtLeast(v) => write!(f, "≥{v}"),
        }
    }
}
