//! Potentials, derivations of `C[G]` and their characters on the conjugation
//! groupoid.
//!
//! A potential `φ` induces the derivation
//! `d(g) = Σ_t (φ(g t g^-1) - φ(t)) g t`, which for finitely supported `φ`
//! is the inner derivation `g -> a g - g a` with `a = Σ φ(t) t`.

mod character;
mod potential;
mod probes;

use alloc::collections::BTreeMap;

use num_traits::Zero;

use crate::group::Group;
use crate::ring::{Coefficient, GroupRingVector};
use crate::Rational;

pub use character::{
    character_from_derivation, character_from_potential, compose_morphisms, quasi_inner_check,
    CharacterSource, CharacterTable, CharacterValue, Morphism, QuasiInnerReport,
};
pub use potential::{
    ClosedForm, ClosedFormHost, ClosedFormKind, Exactness, Potential, TruncationPolicy,
};
pub use probes::{
    edge_jump_probe, g_boundedness_probe, stabilisation_probe, BoundProbe, EdgeJumps,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DerivationError {
    #[error("morphisms are not composable: target {phi_target} differs from source {psi_source}")]
    NotComposable {
        phi_target: alloc::string::String,
        psi_source: alloc::string::String,
    },
    #[error("morphism {0} is not a loop")]
    NotALoop(alloc::string::String),
    #[error("closed form `{0}` is not available for group model {1}")]
    UnsupportedClosedForm(alloc::string::String, alloc::string::String),
    #[error("potential table and closed form overlap at {0}")]
    OverlappingSupport(alloc::string::String),
    #[error(transparent)]
    Group(#[from] crate::group::GroupError),
    #[error(transparent)]
    Norm(#[from] crate::ring::NormError),
}

/// A derivation `d: C[G] -> C[G]`.
#[derive(Debug, Clone)]
pub enum Derivation<E: Ord> {
    /// Induced by a potential. `effective` is the finite table actually used,
    /// i.e. the potential with any closed form cut off at the policy index.
    FromPotential {
        potential: Potential<E>,
        effective: BTreeMap<E, Rational>,
        exactness: Exactness,
    },
    /// `D_x(a) = x a - a x`.
    Inner(GroupRingVector<E>),
}

impl<E: Ord + Clone> Derivation<E> {
    pub fn from_potential(potential: Potential<E>, policy: TruncationPolicy) -> Self {
        let (effective, exactness) = potential.effective_table(policy);
        Derivation::FromPotential {
            potential,
            effective,
            exactness,
        }
    }

    pub fn inner(x: GroupRingVector<E>) -> Self {
        Derivation::Inner(x)
    }

    pub fn zero() -> Self {
        Derivation::Inner(GroupRingVector::zero())
    }

    pub fn exactness(&self) -> Exactness {
        match self {
            Derivation::FromPotential { exactness, .. } => *exactness,
            Derivation::Inner(_) => Exactness::Exact,
        }
    }

    pub fn potential(&self) -> Option<&Potential<E>> {
        match self {
            Derivation::FromPotential { potential, .. } => Some(potential),
            Derivation::Inner(_) => None,
        }
    }

    /// `d(g)`.
    pub fn apply<G: Group<Element = E>>(&self, group: &G, g: &E) -> GroupRingVector<E> {
        match self {
            Derivation::FromPotential { effective, .. } => apply_table(group, effective, g),
            Derivation::Inner(x) => {
                let xg = x.right_mul(group, g);
                xg.sub(&x.left_mul(group, g))
            }
        }
    }

    /// `d(a)` for a finitely supported `a`, by linearity.
    pub fn apply_linear<G: Group<Element = E>>(
        &self,
        group: &G,
        a: &GroupRingVector<E>,
    ) -> GroupRingVector<E> {
        if let Derivation::Inner(x) = self {
            return inner_derivation_apply(group, x, a);
        }
        let mut out = GroupRingVector::zero();
        for (g, c) in a.iter() {
            for (s, v) in self.apply(group, g).iter() {
                out.add_term(s.clone(), &(v * c));
            }
        }
        out
    }
}

/// `D_x(a) = x a - a x`.
pub fn inner_derivation_apply<G: Group>(
    group: &G,
    x: &GroupRingVector<G::Element>,
    a: &GroupRingVector<G::Element>,
) -> GroupRingVector<G::Element> {
    x.mul(group, a).sub(&a.mul(group, x))
}

/// `Σ_t (φ(g t g^-1) - φ(t)) g t` for a finite table `φ`. Only `t` in
/// `S ∪ g^-1 S g` can contribute, where `S` is the support.
fn apply_table<G: Group>(
    group: &G,
    table: &BTreeMap<G::Element, Rational>,
    g: &G::Element,
) -> GroupRingVector<G::Element> {
    let g_inv = group.invert(g);
    let mut out = GroupRingVector::zero();
    for (t, phi_t) in table {
        let value = match table.get(&group.conjugate(g, t)) {
            Some(v) => v - phi_t,
            None => -phi_t.clone(),
        };
        if !value.is_zero() {
            out.add_term(group.multiply(g, t), &Coefficient::real(value));
        }
    }
    // t = g^-1 s g outside S, where g t g^-1 = s
    for (s, phi_s) in table {
        let t = group.conjugate(&g_inv, s);
        if !table.contains_key(&t) {
            out.add_term(group.multiply(g, &t), &Coefficient::real(phi_s.clone()));
        }
    }
    out
}

/// `d(gh) - d(g) h - g d(h)`.
pub fn leibniz_residual<G: Group>(
    d: &Derivation<G::Element>,
    group: &G,
    g: &G::Element,
    h: &G::Element,
) -> GroupRingVector<G::Element> {
    let lhs = d.apply(group, &group.multiply(g, h));
    let right = d.apply(group, g).right_mul(group, h);
    let left = d.apply(group, h).left_mul(group, g);
    lhs.sub(&right).sub(&left)
}

/// `‖d(gh) - d(g) h - g d(h)‖_1`.
pub fn leibniz_check<G: Group>(
    d: &Derivation<G::Element>,
    group: &G,
    g: &G::Element,
    h: &G::Element,
) -> f64 {
    leibniz_residual(d, group, g, h)
        .lp_norm(1.0)
        .expect("p = 1 is a valid exponent")
}
