//! Finitely generated groups with decidable canonical normal forms.

mod dihedral;
mod free;
mod heisenberg;
mod model;
mod product;
mod semidirect;
mod word;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bounded::Bounded;

pub use dihedral::{DihedralLetter, DihedralWord, InfiniteDihedral};
pub use free::{FreeGroup, FreeLetter, FreeWord};
pub use heisenberg::{Heisenberg, HeisenbergElement};
pub use model::{GroupElement, GroupModel};
pub use product::DirectProduct;
pub use semidirect::{Involution, SemiElement, Semidirect};
pub use word::Word;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("cannot parse element `{0}`")]
    BadEncoding(String),
    #[error("`{given}` is not in canonical form (expected `{canonical}`)")]
    NonCanonical { given: String, canonical: String },
    #[error("element does not belong to group model {0}")]
    ModelMismatch(String),
    #[error("unknown group model `{0}`")]
    UnknownModel(String),
    #[error("node budget of {budget} exceeded after {explored} elements")]
    BudgetExceeded { budget: usize, explored: usize },
}

/// A letter of `X ∪ X^-1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub id: String,
    pub inverse: bool,
}

impl Generator {
    pub fn new(id: impl Into<String>) -> Self {
        Generator {
            id: id.into(),
            inverse: false,
        }
    }

    pub fn inverse_of(&self) -> Generator {
        Generator {
            id: self.id.clone(),
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.id)
        } else {
            f.write_str(&self.id)
        }
    }
}

/// Abstract group interface: exact multiplication on canonical normal forms.
///
/// Elements are values in canonical form, so structural equality is group
/// equality and `Ord` gives a deterministic iteration order everywhere.
pub trait Group {
    type Element: Clone + Ord + fmt::Debug;

    /// Short model name, as accepted by [`GroupModel`]'s parser.
    fn name(&self) -> String;

    fn identity(&self) -> Self::Element;

    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn invert(&self, a: &Self::Element) -> Self::Element;

    /// The generating set `X` (positive letters only).
    fn generators(&self) -> Vec<Generator>;

    /// Generators of order two. Their formal inverse is the generator itself.
    fn is_involution(&self, id: &str) -> bool;

    /// Element represented by the single letter `gen`.
    fn letter(&self, gen: &Generator) -> Result<Self::Element, GroupError>;

    /// Injective canonical text encoding.
    fn encode(&self, e: &Self::Element) -> String;

    /// Parse a canonical encoding. Only the exact canonical string is
    /// accepted, so `decode(encode(e)) == e` and nothing else decodes.
    fn decode(&self, s: &str) -> Result<Self::Element, GroupError>;

    /// Defining relators; each must evaluate to the identity.
    fn relators(&self) -> Vec<Word>;

    /// Whether `e` is a well-formed element of this model.
    fn contains(&self, _e: &Self::Element) -> bool {
        true
    }

    /// `X ∪ X^-1` with the redundant inverses of involutions removed.
    fn letters(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        for g in self.generators() {
            let involution = self.is_involution(&g.id);
            let inv = g.inverse_of();
            out.push(g);
            if !involution {
                out.push(inv);
            }
        }
        out
    }

    /// Letters paired with the elements they represent.
    fn letter_elements(&self) -> Vec<(Generator, Self::Element)> {
        self.letters()
            .into_iter()
            .map(|g| {
                let e = self
                    .letter(&g)
                    .expect("letters() only yields known generators");
                (g, e)
            })
            .collect()
    }

    fn normal_form(&self, w: &Word) -> Result<Self::Element, GroupError> {
        let mut acc = self.identity();
        for gen in w.letters() {
            let e = self.letter(gen)?;
            acc = self.multiply(&acc, &e);
        }
        Ok(acc)
    }

    /// `g h g^-1`.
    fn conjugate(&self, g: &Self::Element, h: &Self::Element) -> Self::Element {
        let gh = self.multiply(g, h);
        self.multiply(&gh, &self.invert(g))
    }

    fn is_identity(&self, e: &Self::Element) -> bool {
        *e == self.identity()
    }

    fn commutes(&self, a: &Self::Element, b: &Self::Element) -> bool {
        self.multiply(a, b) == self.multiply(b, a)
    }

    fn power(&self, g: &Self::Element, k: i64) -> Self::Element {
        let base = if k < 0 { self.invert(g) } else { g.clone() };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.multiply(&acc, &base);
        }
        acc
    }

    fn try_multiply(
        &self,
        a: &Self::Element,
        b: &Self::Element,
    ) -> Result<Self::Element, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.multiply(a, b))
    }

    fn check(&self, e: &Self::Element) -> Result<(), GroupError> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(GroupError::ModelMismatch(self.name()))
        }
    }
}

/// Reject anything that is not the exact canonical encoding of its element.
pub(crate) fn require_canonical<G: Group + ?Sized>(
    group: &G,
    given: &str,
    e: G::Element,
) -> Result<G::Element, GroupError> {
    let canonical = group.encode(&e);
    if canonical == given {
        Ok(e)
    } else {
        Err(GroupError::NonCanonical {
            given: String::from(given),
            canonical,
        })
    }
}

/// Breadth-first layers of the Cayley graph around the identity.
///
/// `layers[r]` holds the elements of word length exactly `r`.
pub fn cayley_layers<G: Group>(
    group: &G,
    radius: usize,
    node_budget: usize,
) -> Result<Vec<Vec<G::Element>>, GroupError> {
    let letters: Vec<G::Element> = group
        .letter_elements()
        .into_iter()
        .map(|(_, e)| e)
        .collect();
    let mut seen = BTreeSet::new();
    let id = group.identity();
    seen.insert(id.clone());
    let mut layers = alloc::vec![alloc::vec![id]];
    for _ in 0..radius {
        let mut next = Vec::new();
        for g in layers.last().expect("at least one layer") {
            for x in &letters {
                let h = group.multiply(g, x);
                if seen.insert(h.clone()) {
                    if seen.len() > node_budget {
                        return Err(GroupError::BudgetExceeded {
                            budget: node_budget,
                            explored: seen.len() - 1,
                        });
                    }
                    next.push(h);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    Ok(layers)
}

/// `{g : |g| <= radius}` with respect to the model's generating set.
pub fn cayley_ball<G: Group>(
    group: &G,
    radius: usize,
    node_budget: usize,
) -> Result<BTreeSet<G::Element>, GroupError> {
    Ok(cayley_layers(group, radius, node_budget)?
        .into_iter()
        .flatten()
        .collect())
}

/// Geodesic word length, found by breadth-first search from the identity.
///
/// Exact when it is at most `budget`, otherwise `AtLeast(budget)`. If the
/// node budget runs out first the result is `AtLeast` the depth reached.
pub fn word_length<G: Group>(
    group: &G,
    g: &G::Element,
    budget: u64,
    node_budget: usize,
) -> Bounded {
    let id = group.identity();
    if *g == id {
        return Bounded::Exact(0);
    }
    let letters: Vec<G::Element> = group
        .letter_elements()
        .into_iter()
        .map(|(_, e)| e)
        .collect();
    let mut dist: BTreeMap<G::Element, u64> = BTreeMap::new();
    dist.insert(id.clone(), 0);
    let mut frontier = alloc::vec![id];
    let mut depth = 0u64;
    while depth < budget {
        let mut next = Vec::new();
        for h in &frontier {
            for x in &letters {
                let y = group.multiply(h, x);
                if dist.contains_key(&y) {
                    continue;
                }
                if y == *g {
                    return Bounded::Exact(depth + 1);
                }
                if dist.len() >= node_budget {
                    return Bounded::AtLeast(depth + 1);
                }
                dist.insert(y.clone(), depth + 1);
                next.push(y);
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
        depth += 1;
    }
    Bounded::AtLeast(budget)
}
