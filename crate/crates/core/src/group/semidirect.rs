use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Generator, Group, GroupError, Word};

/// A group equipped with an involutive automorphism `σ`.
pub trait Involution: Group {
    fn twist(&self, e: &Self::Element) -> Self::Element;

    /// Image of a generator under `σ` as `(id, inverted)`: `σ(x) = y` or
    /// `σ(x) = y^-1`.
    fn twist_generator(&self, id: &str) -> Option<(&'static str, bool)>;
}

/// `G ⋊ Z/2` for an involution `σ` of `G`, with `c` the generator of `Z/2`.
///
/// Elements are pairs `(w, ε)` standing for `w c^ε`, multiplied by
/// `(w1, ε1)(w2, ε2) = (w1 σ^ε1(w2), ε1 + ε2)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Semidirect<G> {
    base: G,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemiElement<E> {
    pub flip: bool,
    pub base: E,
}

impl<E> SemiElement<E> {
    pub fn new(base: E, flip: bool) -> Self {
        SemiElement { flip, base }
    }
}

pub const FLIP_GENERATOR: &str = "c";

impl<G: Involution> Semidirect<G> {
    pub fn new(base: G) -> Self {
        Semidirect { base }
    }

    pub fn base(&self) -> &G {
        &self.base
    }

    pub fn embed(&self, e: G::Element) -> SemiElement<G::Element> {
        SemiElement::new(e, false)
    }

    pub fn flip(&self) -> SemiElement<G::Element> {
        SemiElement::new(self.base.identity(), true)
    }

    fn twist_if(&self, flip: bool, e: &G::Element) -> G::Element {
        if flip {
            self.base.twist(e)
        } else {
            e.clone()
        }
    }
}

impl<G: Involution> Group for Semidirect<G> {
    type Element = SemiElement<G::Element>;

    fn name(&self) -> String {
        match self.base.name().as_str() {
            "dinf" => String::from("dsemi"),
            other => format!("{other}semi"),
        }
    }

    fn identity(&self) -> Self::Element {
        SemiElement::new(self.base.identity(), false)
    }

    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        let twisted = self.twist_if(a.flip, &b.base);
        SemiElement::new(self.base.multiply(&a.base, &twisted), a.flip ^ b.flip)
    }

    fn invert(&self, a: &Self::Element) -> Self::Element {
        let inv = self.base.invert(&a.base);
        SemiElement::new(self.twist_if(a.flip, &inv), a.flip)
    }

    fn generators(&self) -> Vec<Generator> {
        let mut gens = self.base.generators();
        gens.push(Generator::new(FLIP_GENERATOR));
        gens
    }

    fn is_involution(&self, id: &str) -> bool {
        id == FLIP_GENERATOR || self.base.is_involution(id)
    }

    fn letter(&self, gen: &Generator) -> Result<Self::Element, GroupError> {
        if gen.id == FLIP_GENERATOR {
            return Ok(self.flip());
        }
        Ok(self.embed(self.base.letter(gen)?))
    }

    /// The base encoding, followed by `;c` when the `Z/2` part is set. The
    /// flip on its own (`w` trivial) is written `c`.
    fn encode(&self, e: &Self::Element) -> String {
        match (e.flip, self.base.is_identity(&e.base)) {
            (false, _) => self.base.encode(&e.base),
            (true, true) => String::from(FLIP_GENERATOR),
            (true, false) => format!("{};{}", self.base.encode(&e.base), FLIP_GENERATOR),
        }
    }

    fn decode(&self, s: &str) -> Result<Self::Element, GroupError> {
        if s == FLIP_GENERATOR {
            return Ok(self.flip());
        }
        let (base, flip) = match s.strip_suffix(";c") {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let e = SemiElement::new(self.base.decode(base)?, flip);
        super::require_canonical(self, s, e)
    }

    fn relators(&self) -> Vec<Word> {
        let mut rels = self.base.relators();
        rels.push(Word::parse("c.c").unwrap());
        // c x c σ(x)^-1
        for g in self.base.generators() {
            let (target, inverted) = self.base.twist_generator(&g.id).expect("σ maps generators");
            let tail = if inverted {
                String::from(target)
            } else {
                format!("{target}^-1")
            };
            rels.push(Word::parse(&format!("c.{}.c.{tail}", g.id)).expect("relator syntax"));
        }
        rels
    }

    fn contains(&self, e: &Self::Element) -> bool {
        self.base.contains(&e.base)
    }
}
