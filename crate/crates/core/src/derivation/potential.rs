use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;

use num_traits::{Signed, Zero};

use super::DerivationError;
use crate::group::{
    Group, GroupElement, GroupModel, Heisenberg, HeisenbergElement, SemiElement, Semidirect,
};
use crate::ring::{pow_rational, ratio_to_f64};
use crate::{Rational, DEFAULT_TRUNCATION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClosedFormKind {
    /// `φ(Ap Ax^-k) = 1/k` for `k >= 1`, zero elsewhere.
    AppendixHarmonic,
}

impl ClosedFormKind {
    pub fn name(self) -> &'static str {
        match self {
            ClosedFormKind::AppendixHarmonic => "appendix_harmonic",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "appendix_harmonic" => Some(ClosedFormKind::AppendixHarmonic),
            _ => None,
        }
    }
}

/// An infinitely supported rule `φ(point(k)) = 1/k`, `k >= 1`.
pub struct ClosedForm<E> {
    kind: ClosedFormKind,
    index: fn(&E) -> Option<u64>,
    point: fn(u64) -> E,
}

impl<E> Clone for ClosedForm<E> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<E> Copy for ClosedForm<E> {}

impl<E> fmt::Debug for ClosedForm<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())
    }
}

impl<E> ClosedForm<E> {
    pub fn kind(&self) -> ClosedFormKind {
        self.kind
    }

    /// `k` such that `e = point(k)`, if any.
    pub fn index(&self, e: &E) -> Option<u64> {
        (self.index)(e)
    }

    pub fn point(&self, k: u64) -> E {
        (self.point)(k)
    }

    pub fn value_at_index(&self, k: u64) -> Rational {
        Rational::new(1.into(), k.into())
    }

    pub fn evaluate(&self, e: &E) -> Rational {
        self.index(e)
            .map(|k| self.value_at_index(k))
            .unwrap_or_else(Rational::zero)
    }

    /// Upper bound on `‖φ - φ_K‖_p`, the `l_p` mass beyond index `K`.
    ///
    /// Uses `Σ_{k>K} k^-p <= K^(1-p) / (p-1)`; infinite for `p <= 1`, where
    /// the harmonic tail diverges.
    pub fn tail_norm_bound(&self, max_index: u64, p: f64) -> f64 {
        if p <= 1.0 || max_index == 0 {
            return f64::INFINITY;
        }
        let k = max_index as f64;
        libm::pow(libm::pow(k, 1.0 - p) / (p - 1.0), 1.0 / p)
    }

    /// `‖φ‖_2 = π / √6` for the harmonic rule.
    pub fn l2_norm(&self) -> f64 {
        core::f64::consts::PI / libm::sqrt(6.0)
    }
}

/// Groups that can host a named closed-form potential.
pub trait ClosedFormHost: Group {
    fn closed_form(
        &self,
        kind: ClosedFormKind,
    ) -> Result<ClosedForm<Self::Element>, DerivationError>;
}

impl ClosedFormHost for Heisenberg {
    fn closed_form(
        &self,
        kind: ClosedFormKind,
    ) -> Result<ClosedForm<HeisenbergElement>, DerivationError> {
        Ok(match kind {
            ClosedFormKind::AppendixHarmonic => ClosedForm {
                kind,
                index: Heisenberg::harmonic_index,
                point: Heisenberg::harmonic_point,
            },
        })
    }
}

impl ClosedFormHost for Semidirect<Heisenberg> {
    fn closed_form(
        &self,
        kind: ClosedFormKind,
    ) -> Result<ClosedForm<SemiElement<HeisenbergElement>>, DerivationError> {
        Ok(match kind {
            ClosedFormKind::AppendixHarmonic => ClosedForm {
                kind,
                index: |e| {
                    if e.flip {
                        None
                    } else {
                        Heisenberg::harmonic_index(&e.base)
                    }
                },
                point: |k| SemiElement::new(Heisenberg::harmonic_point(k), false),
            },
        })
    }
}

impl ClosedFormHost for GroupModel {
    fn closed_form(
        &self,
        kind: ClosedFormKind,
    ) -> Result<ClosedForm<GroupElement>, DerivationError> {
        match (self, kind) {
            (GroupModel::Heisenberg(_), ClosedFormKind::AppendixHarmonic) => Ok(ClosedForm {
                kind,
                index: |e| match e {
                    GroupElement::Heisenberg(h) => Heisenberg::harmonic_index(h),
                    _ => None,
                },
                point: |k| GroupElement::Heisenberg(Heisenberg::harmonic_point(k)),
            }),
            (GroupModel::HeisenbergSemidirect(_), ClosedFormKind::AppendixHarmonic) => {
                Ok(ClosedForm {
                    kind,
                    index: |e| match e {
                        GroupElement::HeisenbergSemidirect(s) if !s.flip => {
                            Heisenberg::harmonic_index(&s.base)
                        }
                        _ => None,
                    },
                    point: |k| {
                        GroupElement::HeisenbergSemidirect(SemiElement::new(
                            Heisenberg::harmonic_point(k),
                            false,
                        ))
                    },
                })
            }
            _ => Err(DerivationError::UnsupportedClosedForm(
                String::from(kind.name()),
                self.name(),
            )),
        }
    }
}

/// Where closed-form supports are cut off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationPolicy {
    pub max_index: u64,
}

impl TruncationPolicy {
    pub fn new(max_index: u64) -> Self {
        TruncationPolicy { max_index }
    }
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy::new(DEFAULT_TRUNCATION)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    /// A closed form was replaced by its values at indices `1..=max_index`.
    Truncated {
        max_index: u64,
    },
}

impl Exactness {
    pub fn is_exact(self) -> bool {
        self == Exactness::Exact
    }
}

/// A total function `φ: G -> Q`: a finite table plus an optional closed form
/// with disjoint support.
#[derive(Debug, Clone)]
pub struct Potential<E: Ord> {
    table: BTreeMap<E, Rational>,
    closed_form: Option<ClosedForm<E>>,
}

impl<E: Ord + Clone> Potential<E> {
    pub fn zero() -> Self {
        Potential {
            table: BTreeMap::new(),
            closed_form: None,
        }
    }

    /// Finite table; zero values are dropped and repeated keys accumulate.
    pub fn from_table<I: IntoIterator<Item = (E, Rational)>>(entries: I) -> Self {
        let mut table: BTreeMap<E, Rational> = BTreeMap::new();
        for (e, v) in entries {
            *table.entry(e).or_insert_with(Rational::zero) += v;
        }
        table.retain(|_, v| !v.is_zero());
        Potential {
            table,
            closed_form: None,
        }
    }

    pub fn with_closed_form(
        mut self,
        closed_form: ClosedForm<E>,
        describe: impl Fn(&E) -> String,
    ) -> Result<Self, DerivationError> {
        if let Some(e) = self.table.keys().find(|e| closed_form.index(e).is_some()) {
            return Err(DerivationError::OverlappingSupport(describe(e)));
        }
        self.closed_form = Some(closed_form);
        Ok(self)
    }

    pub fn table(&self) -> &BTreeMap<E, Rational> {
        &self.table
    }

    pub fn closed_form(&self) -> Option<&ClosedForm<E>> {
        self.closed_form.as_ref()
    }

    pub fn is_finite(&self) -> bool {
        self.closed_form.is_none()
    }

    pub fn evaluate(&self, e: &E) -> Rational {
        if let Some(v) = self.table.get(e) {
            return v.clone();
        }
        self.closed_form
            .map(|cf| cf.evaluate(e))
            .unwrap_or_else(Rational::zero)
    }

    /// The finite potential `φ_K` agreeing with `φ` on the table and on
    /// closed-form indices `<= K`.
    pub fn truncated(&self, max_index: u64) -> Self {
        Potential {
            table: self.effective_table(TruncationPolicy::new(max_index)).0,
            closed_form: None,
        }
    }

    pub(crate) fn effective_table(
        &self,
        policy: TruncationPolicy,
    ) -> (BTreeMap<E, Rational>, Exactness) {
        let mut table = self.table.clone();
        let Some(cf) = self.closed_form else {
            return (table, Exactness::Exact);
        };
        for k in 1..=policy.max_index {
            table.insert(cf.point(k), cf.value_at_index(k));
        }
        (
            table,
            Exactness::Truncated {
                max_index: policy.max_index,
            },
        )
    }

    /// `Σ |φ(t)|^q` over the table, exactly.
    pub fn table_pow_sum(&self, q: u32) -> Rational {
        self.table.values().map(|v| pow_rational(&v.abs(), q)).sum()
    }

    /// `l_p` norm of the table part.
    pub fn table_lp_norm(&self, p: f64) -> f64 {
        let s: f64 = self
            .table
            .values()
            .map(|v| libm::pow(ratio_to_f64(&v.abs()), p))
            .sum();
        libm::pow(s, 1.0 / p)
    }
}

impl Potential<HeisenbergElement> {
    pub fn appendix_harmonic() -> Self {
        let cf = Heisenberg
            .closed_form(ClosedFormKind::AppendixHarmonic)
            .expect("H3 hosts the harmonic rule");
        Potential {
            table: BTreeMap::new(),
            closed_form: Some(cf),
        }
    }
}
