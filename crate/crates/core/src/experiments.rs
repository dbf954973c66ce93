//! Quantitative experiments with derivations on the Heisenberg group and
//! along conjugating sequences.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::bounded::Bounded;
use crate::derivation::{
    g_boundedness_probe, BoundProbe, ClosedFormHost, ClosedFormKind, Derivation, DerivationError,
    Potential, TruncationPolicy,
};
use crate::graph::{conj_distance, explore_component};
use crate::group::{Group, GroupError, Heisenberg, HeisenbergElement};
use crate::ring::{pow_rational, ratio_to_f64, GroupRingVector};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExperimentError {
    #[error("engine gives {engine} but the closed formula gives {formula} at m = {m}, n = {n}")]
    Mismatch {
        m: u64,
        n: u64,
        engine: String,
        formula: String,
    },
    #[error("the potential must have finite support")]
    InfiniteSupport,
    #[error("support point {0} lies in a finite conjugacy class")]
    FiniteComponent(String),
    #[error("m and n must be at least 1")]
    EmptyRange,
    #[error("q must be at least 1")]
    BadExponent,
    #[error(transparent)]
    Derivation(#[from] DerivationError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn harmonic_range(from: u64, to: u64, skip: u64) -> Rational {
    (from..=to)
        .filter(|&j| j != skip)
        .map(|j| Rational::new(1.into(), j.into()))
        .sum()
}

/// `Σ_{j=1, j≠n}^{m+n} 1/j`, the closed form for the coefficient at
/// `Ax^-n Ap A1^-n` in `d(a_m)`. Valid only when `n <= m + 1`.
pub fn appendix_closed_formula(m: u64, n: u64) -> Rational {
    harmonic_range(1, m + n, n)
}

/// `Σ_{j=max(1,n-m), j≠n}^{m+n} 1/j`, the coefficient for all `m, n >= 0`.
pub fn appendix_coefficient_formula(m: u64, n: u64) -> Rational {
    harmonic_range(n.saturating_sub(m).max(1), m + n, n)
}

/// `Σ_{j=2}^m 1/j`.
pub fn appendix_lower_sum(m: u64) -> Rational {
    harmonic_range(2, m, 0)
}

/// The point `Ax^-n Ap A1^-n = (1, -n, -n)`.
pub fn appendix_point(n: u64) -> HeisenbergElement {
    let n = i64::try_from(n).expect("index fits in i64");
    HeisenbergElement::new(1, -n, -n)
}

#[derive(Debug, Clone, PartialEq)]
pub struct AppendixRow {
    pub m: u64,
    /// `(n, coefficient)` for `n = 1..=n_max`, identical along both paths.
    pub coefficients: Vec<(u64, Rational)>,
    /// `(Σ_{n=0}^m |coefficient_n|^2)^(1/2)` from the engine, a lower bound
    /// for `‖d(a_m)‖_2`.
    pub certified_norm: f64,
    /// `Σ_{j=2}^m 1/j`, exact.
    pub lower_sum: Rational,
    /// `√m · Σ_{j=2}^m 1/j`.
    pub norm_lower_bound: f64,
    /// `norm_lower_bound / ‖a_m‖_2` with `‖a_m‖_2 = √(2m+1)`.
    pub ratio_lower_bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AppendixReport {
    pub m_max: u64,
    pub n_max: u64,
    /// Cutoff of the harmonic potential; large enough that every reported
    /// coefficient is exact.
    pub truncation: u64,
    pub rows: Vec<AppendixRow>,
}

/// The unbounded inner derivation on `H3`: coefficients of `d(a_m)`,
/// `a_m = Σ_{k=-m}^m Ax^k`, at the points `Ax^-n Ap A1^-n`, computed through
/// the derivation engine and checked against the closed formula.
pub fn run_appendix(m_max: u64, n_max: u64) -> Result<AppendixReport, ExperimentError> {
    if m_max == 0 || n_max == 0 {
        return Err(ExperimentError::EmptyRange);
    }
    let h = Heisenberg;
    // the coefficient at (1,-n,-n) only involves indices up to m + n
    let truncation = m_max + n_max.max(m_max);
    let d = Derivation::from_potential(
        Potential::appendix_harmonic(),
        TruncationPolicy::new(truncation),
    );
    let ax = Heisenberg::ax();
    let mut image = GroupRingVector::zero();
    let mut rows = Vec::new();
    for m in 1..=m_max {
        let k = i64::try_from(m).expect("m fits in i64");
        let step = GroupRingVector::from_real([
            (h.power(&ax, k), Rational::from_integer(1.into())),
            (h.power(&ax, -k), Rational::from_integer(1.into())),
        ]);
        image = image.add(&d.apply_linear(&h, &step));
        let mut coefficients = Vec::new();
        for n in 1..=n_max {
            let engine = image.coefficient(&appendix_point(n));
            let formula = appendix_coefficient_formula(m, n);
            if !engine.is_real() || engine.re != formula {
                return Err(ExperimentError::Mismatch {
                    m,
                    n,
                    engine: alloc::format!("{engine}"),
                    formula: alloc::format!("{formula}"),
                });
            }
            coefficients.push((n, formula));
        }
        let certified_sq: Rational = (0..=m)
            .map(|n| image.coefficient(&appendix_point(n)).norm_sqr())
            .sum();
        let lower_sum = appendix_lower_sum(m);
        let mf = m as f64;
        let norm_lower_bound = libm::sqrt(mf) * ratio_to_f64(&lower_sum);
        rows.push(AppendixRow {
            m,
            coefficients,
            certified_norm: libm::sqrt(ratio_to_f64(&certified_sq)),
            norm_lower_bound,
            ratio_lower_bound: norm_lower_bound / libm::sqrt(2.0 * mf + 1.0),
            lower_sum,
        });
    }
    Ok(AppendixReport {
        m_max,
        n_max,
        truncation,
        rows,
    })
}

/// `a_k = step^k · tail`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugatorSequence<E> {
    pub step: E,
    pub tail: E,
}

impl<E: Clone + Ord + core::fmt::Debug> ConjugatorSequence<E> {
    pub fn powers<G: Group<Element = E>>(group: &G, step: E) -> Self {
        ConjugatorSequence {
            step,
            tail: group.identity(),
        }
    }

    pub fn term<G: Group<Element = E>>(&self, group: &G, k: u64) -> E {
        let k = i64::try_from(k).expect("k fits in i64");
        group.multiply(&group.power(&self.step, k), &self.tail)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitSample {
    pub k: u64,
    /// `‖d(a_k)‖_q`.
    pub norm: f64,
    /// `‖d(a_k)‖_q^q`, exact.
    pub pow_sum: Rational,
    /// Whether `S ∩ a_k^-1 S a_k = ∅` for the support `S`.
    pub separated: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitReport {
    pub q: u32,
    /// `‖φ‖_q`.
    pub potential_norm: f64,
    /// `2^(1/q) ‖φ‖_q`.
    pub limit: f64,
    /// `2 ‖φ‖_q^q`, exact.
    pub limit_pow_sum: Rational,
    pub samples: Vec<LimitSample>,
    /// First `k` from which every sampled `a_k` separates the support.
    pub separation_index: Option<u64>,
    /// Whether every sample from the separation index on equals the limit
    /// exactly.
    pub settled: bool,
}

/// `‖d(a_k)‖_q` along a conjugating sequence for a finitely supported `φ`.
///
/// Support points whose conjugacy class closes up within radius
/// `2 k_max + 2` are rejected.
pub fn run_limit_experiment<G: Group>(
    group: &G,
    potential: &Potential<G::Element>,
    sequence: &ConjugatorSequence<G::Element>,
    q: u32,
    k_max: u64,
    node_budget: usize,
) -> Result<LimitReport, ExperimentError> {
    if q == 0 {
        return Err(ExperimentError::BadExponent);
    }
    if !potential.is_finite() {
        return Err(ExperimentError::InfiniteSupport);
    }
    let support: BTreeSet<G::Element> = potential.table().keys().cloned().collect();
    for s in &support {
        let ball = explore_component(group, s, 2 * k_max + 2, node_budget);
        if ball.closed {
            return Err(ExperimentError::FiniteComponent(group.encode(s)));
        }
    }
    let d = Derivation::from_potential(potential.clone(), TruncationPolicy::default());
    let qf = f64::from(q);
    let phi_pow = potential.table_pow_sum(q);
    let limit_pow_sum = &phi_pow * Rational::from_integer(2.into());
    let mut samples = Vec::new();
    for k in 1..=k_max {
        let a = sequence.term(group, k);
        let a_inv = group.invert(&a);
        let separated = support
            .iter()
            .all(|s| !support.contains(&group.conjugate(&a_inv, s)));
        let v = d.apply(group, &a);
        let pow_sum = v
            .pow_sum_exact(q)
            .expect("potential-induced derivations have real coefficients");
        samples.push(LimitSample {
            k,
            norm: libm::pow(ratio_to_f64(&pow_sum), 1.0 / qf),
            pow_sum,
            separated,
        });
    }
    let separation_index = samples
        .iter()
        .rposition(|s| !s.separated)
        .map_or(Some(1), |i| samples.get(i + 1).map(|s| s.k));
    let separation_index = if samples.is_empty() {
        None
    } else {
        separation_index
    };
    let settled = separation_index.is_some_and(|k0| {
        samples
            .iter()
            .filter(|s| s.k >= k0)
            .all(|s| s.pow_sum == limit_pow_sum)
    });
    let potential_norm = libm::pow(ratio_to_f64(&phi_pow), 1.0 / qf);
    Ok(LimitReport {
        q,
        potential_norm,
        limit: libm::pow(2.0, 1.0 / qf) * potential_norm,
        limit_pow_sum,
        samples,
        separation_index,
        settled,
    })
}

/// `Σ_t |φ(g t g^-1) - φ(t)|^q` evaluated straight from the definition over
/// `S ∪ g^-1 S g`, independently of the group ring code.
pub fn direct_pow_sum<G: Group>(
    group: &G,
    potential: &Potential<G::Element>,
    g: &G::Element,
    q: u32,
) -> Rational {
    let g_inv = group.invert(g);
    let mut ts: BTreeSet<G::Element> = potential.table().keys().cloned().collect();
    ts.extend(potential.table().keys().map(|s| group.conjugate(&g_inv, s)));
    ts.iter()
        .map(|t| {
            let diff = potential.evaluate(&group.conjugate(g, t)) - potential.evaluate(t);
            pow_rational(&diff.abs(), q)
        })
        .filter(|v| !v.is_zero())
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseRow {
    pub k: u64,
    /// `ρ(u, a_k u a_k^-1)`.
    pub forward: Bounded,
    /// `ρ(u, a_k^-1 u a_k)`.
    pub backward: Bounded,
}

/// Conjugation distances along `a_k` and along its inverses.
pub fn run_inverse_sequence_check<G: Group>(
    group: &G,
    u: &G::Element,
    sequence: &ConjugatorSequence<G::Element>,
    k_max: u64,
    budget: u64,
    node_budget: usize,
) -> Vec<InverseRow> {
    (1..=k_max)
        .map(|k| {
            let a = sequence.term(group, k);
            let fwd = group.conjugate(&a, u);
            let bwd = group.conjugate(&group.invert(&a), u);
            InverseRow {
                k,
                forward: conj_distance(group, u, &fwd, budget, node_budget),
                backward: conj_distance(group, u, &bwd, budget, node_budget),
            }
        })
        .collect()
}

/// The harmonic derivation is bounded on group elements yet unbounded as an
/// operator: both sides measured together.
#[derive(Debug, Clone, PartialEq)]
pub struct UnboundednessReport {
    pub probe: BoundProbe<HeisenbergElement>,
    /// `2 ‖φ‖_2 = 2π/√6`.
    pub element_bound: f64,
    /// `max ‖d_K(g)‖_2 <= 2‖φ‖_2 + tail` over the probed ball.
    pub g_bounded: bool,
    /// `(m, ratio lower bound)`.
    pub ratios: Vec<(u64, f64)>,
    /// Ratios strictly increase along the listed `m`.
    pub ratio_increasing: bool,
}

pub fn run_unboundedness(
    radius: u64,
    truncation: u64,
    m_values: &[u64],
    node_budget: usize,
) -> Result<UnboundednessReport, ExperimentError> {
    let h = Heisenberg;
    let cf = h.closed_form(ClosedFormKind::AppendixHarmonic)?;
    let d = Derivation::from_potential(
        Potential::appendix_harmonic(),
        TruncationPolicy::new(truncation),
    );
    let probe = g_boundedness_probe(&d, &h, radius, 2.0, node_budget)?;
    let element_bound = 2.0 * cf.l2_norm();
    let g_bounded = probe.max_norm <= element_bound + probe.tail_bound;
    let ratios: Vec<(u64, f64)> = m_values
        .iter()
        .map(|&m| {
            let mf = m as f64;
            let lb = libm::sqrt(mf) * ratio_to_f64(&appendix_lower_sum(m));
            (m, lb / libm::sqrt(2.0 * mf + 1.0))
        })
        .collect();
    let ratio_increasing = ratios.windows(2).all(|w| w[0].1 < w[1].1);
    Ok(UnboundednessReport {
        probe,
        element_bound,
        g_bounded,
        ratios,
        ratio_increasing,
    })
}
