use alloc::collections::BTreeMap;
use alloc::format;

use num_traits::Zero;

use super::{Derivation, DerivationError, Exactness, Potential};
use crate::group::Group;
use crate::ring::Coefficient;
use crate::Rational;

/// A morphism `(u, v)` of the conjugation groupoid, from `v^-1 u` to `u v^-1`.
///
/// The pair is the `(h, g)` argument of a character `χ(h, g)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Morphism<E> {
    pub u: E,
    pub v: E,
}

impl<E: Clone + Ord> Morphism<E> {
    pub fn new(u: E, v: E) -> Self {
        Morphism { u, v }
    }

    /// `(o, e)`, the identity at the object `o`.
    pub fn identity<G: Group<Element = E>>(group: &G, o: E) -> Self {
        Morphism::new(o, group.identity())
    }

    /// The morphism carried by the conjugacy-graph edge `g -> x g x^-1`.
    pub fn from_edge<G: Group<Element = E>>(group: &G, x: &E, g: &E) -> Self {
        Morphism::new(group.multiply(x, g), x.clone())
    }

    pub fn source<G: Group<Element = E>>(&self, group: &G) -> E {
        group.multiply(&group.invert(&self.v), &self.u)
    }

    pub fn target<G: Group<Element = E>>(&self, group: &G) -> E {
        group.multiply(&self.u, &group.invert(&self.v))
    }

    pub fn is_loop<G: Group<Element = E>>(&self, group: &G) -> bool {
        group.commutes(&self.u, &self.v)
    }

    pub fn describe<G: Group<Element = E>>(&self, group: &G) -> alloc::string::String {
        format!("({}, {})", group.encode(&self.u), group.encode(&self.v))
    }
}

/// `ψ ∘ φ = (v2 u1, v2 v1)` for `φ = (u1, v1)`, `ψ = (u2, v2)`.
pub fn compose_morphisms<G: Group>(
    group: &G,
    psi: &Morphism<G::Element>,
    phi: &Morphism<G::Element>,
) -> Result<Morphism<G::Element>, DerivationError> {
    let target = phi.target(group);
    let source = psi.source(group);
    if target != source {
        return Err(DerivationError::NotComposable {
            phi_target: group.encode(&target),
            psi_source: group.encode(&source),
        });
    }
    Ok(Morphism::new(
        group.multiply(&psi.v, &phi.u),
        group.multiply(&psi.v, &phi.v),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterValue {
    pub value: Coefficient,
    /// Set when the value came from a truncated evaluation that cut off a
    /// term which could contribute here.
    pub truncated: bool,
}

/// Anything that assigns a value to each morphism.
pub trait CharacterSource<G: Group> {
    fn character(&self, group: &G, mor: &Morphism<G::Element>) -> CharacterValue;
}

/// `χ(h, g) = φ(h g^-1) - φ(g^-1 h)`.
pub fn character_from_potential<G: Group>(
    potential: &Potential<G::Element>,
    group: &G,
    mor: &Morphism<G::Element>,
) -> Coefficient {
    let target = potential.evaluate(&mor.target(group));
    let source = potential.evaluate(&mor.source(group));
    Coefficient::real(target - source)
}

/// `χ(h, g) = δ_h(d(g))`.
pub fn character_from_derivation<G: Group>(
    d: &Derivation<G::Element>,
    group: &G,
    mor: &Morphism<G::Element>,
) -> CharacterValue {
    let value = d.apply(group, &mor.v).coefficient(&mor.u);
    let truncated = match (d.exactness(), d.potential().and_then(|p| p.closed_form())) {
        (Exactness::Truncated { max_index }, Some(cf)) => [mor.target(group), mor.source(group)]
            .iter()
            .any(|e| cf.index(e).is_some_and(|k| k > max_index)),
        _ => false,
    };
    CharacterValue { value, truncated }
}

impl<G: Group> CharacterSource<G> for Potential<G::Element> {
    fn character(&self, group: &G, mor: &Morphism<G::Element>) -> CharacterValue {
        CharacterValue {
            value: character_from_potential(self, group, mor),
            truncated: false,
        }
    }
}

impl<G: Group> CharacterSource<G> for Derivation<G::Element> {
    fn character(&self, group: &G, mor: &Morphism<G::Element>) -> CharacterValue {
        character_from_derivation(self, group, mor)
    }
}

/// A hand-written character: listed morphisms carry their value, every
/// other morphism is zero.
#[derive(Debug, Clone, Default)]
pub struct CharacterTable<E: Ord> {
    values: BTreeMap<Morphism<E>, Rational>,
}

impl<E: Ord + Clone> CharacterTable<E> {
    pub fn new() -> Self {
        CharacterTable {
            values: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, mor: Morphism<E>, value: Rational) {
        self.values.insert(mor, value);
    }
}

impl<G: Group> CharacterSource<G> for CharacterTable<G::Element> {
    fn character(&self, _group: &G, mor: &Morphism<G::Element>) -> CharacterValue {
        let value = self.values.get(mor).cloned().unwrap_or_else(Rational::zero);
        CharacterValue {
            value: Coefficient::real(value),
            truncated: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiInnerReport<E> {
    pub holds: bool,
    pub checked: usize,
    /// First loop with a nonzero value.
    pub witness: Option<(Morphism<E>, Coefficient)>,
}

/// Whether the character vanishes on every listed loop.
pub fn quasi_inner_check<G: Group, S: CharacterSource<G>>(
    source: &S,
    group: &G,
    loops: &[Morphism<G::Element>],
) -> Result<QuasiInnerReport<G::Element>, DerivationError> {
    if let Some(m) = loops.iter().find(|m| !m.is_loop(group)) {
        return Err(DerivationError::NotALoop(m.describe(group)));
    }
    for (i, m) in loops.iter().enumerate() {
        let v = source.character(group, m).value;
        if !v.is_zero() {
            return Ok(QuasiInnerReport {
                holds: false,
                checked: i + 1,
                witness: Some((m.clone(), v)),
            });
        }
    }
    Ok(QuasiInnerReport {
        holds: true,
        checked: loops.len(),
        witness: None,
    })
}
