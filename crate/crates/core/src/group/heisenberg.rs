use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{require_canonical, Generator, Group, GroupError, Involution, Word};

/// The integer Heisenberg group `H3(Z)`, generated by `Ax`, `Ap`, `A1`.
///
/// An element is stored as the integer triple `(a, b, c)` of the
/// upper-unitriangular matrix
///
/// ```text
/// | 1 a c |
/// | 0 1 b |
/// | 0 0 1 |
/// ```
///
/// which equals `Ax^b Ap^a A1^c`. `Ap` is `(1,0,0)`, `Ax` is `(0,1,0)` and the
/// central `A1` is `(0,0,1)`; with this choice `Ap Ax = Ax Ap A1`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Heisenberg;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeisenbergElement {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl HeisenbergElement {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        HeisenbergElement {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn identity() -> Self {
        Self::new(0, 0, 0)
    }

    /// Matrix product of the corresponding unitriangular matrices.
    pub fn mul(&self, rhs: &Self) -> Self {
        HeisenbergElement {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c + &self.a * &rhs.b,
        }
    }

    pub fn inv(&self) -> Self {
        HeisenbergElement {
            a: -&self.a,
            b: -&self.b,
            c: &self.a * &self.b - &self.c,
        }
    }

    pub fn is_central(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The automorphism `Ap <-> Ax`, `A1 -> A1^-1`.
    ///
    /// `Ax^b Ap^a A1^c` maps to `Ap^b Ax^a A1^-c = Ax^a Ap^b A1^(ab - c)`.
    pub fn swap(&self) -> Self {
        HeisenbergElement {
            a: self.b.clone(),
            b: self.a.clone(),
            c: &self.a * &self.b - &self.c,
        }
    }
}

impl Heisenberg {
    pub fn ap() -> HeisenbergElement {
        HeisenbergElement::new(1, 0, 0)
    }

    pub fn ax() -> HeisenbergElement {
        HeisenbergElement::new(0, 1, 0)
    }

    pub fn a1() -> HeisenbergElement {
        HeisenbergElement::new(0, 0, 1)
    }

    /// `Ap Ax^-k = Ax^-k Ap A1^-k`, the support points of the harmonic potential.
    pub fn harmonic_point(k: u64) -> HeisenbergElement {
        let k = BigInt::from(k);
        HeisenbergElement {
            a: BigInt::one(),
            b: -&k,
            c: -k,
        }
    }

    /// Inverse of [`Heisenberg::harmonic_point`].
    pub fn harmonic_index(e: &HeisenbergElement) -> Option<u64> {
        if !e.a.is_one() || e.b != e.c {
            return None;
        }
        let k: BigInt = -&e.b;
        if k < BigInt::one() {
            return None;
        }
        u64::try_from(&k).ok()
    }

    pub(crate) fn parse_triple(s: &str) -> Result<HeisenbergElement, GroupError> {
        let bad = || GroupError::BadEncoding(String::from(s));
        let inner = s
            .strip_prefix("H3(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut v = Vec::with_capacity(3);
        for p in parts {
            v.push(p.parse::<BigInt>().map_err(|_| bad())?);
        }
        let c = v.pop().unwrap();
        let b = v.pop().unwrap();
        let a = v.pop().unwrap();
        Ok(HeisenbergElement { a, b, c })
    }
}

impl Group for Heisenberg {
    type Element = HeisenbergElement;

    fn name(&self) -> String {
        String::from("h3")
    }

    fn identity(&self) -> HeisenbergElement {
        HeisenbergElement::identity()
    }

    fn multiply(&self, a: &HeisenbergElement, b: &HeisenbergElement) -> HeisenbergElement {
        a.mul(b)
    }

    fn invert(&self, a: &HeisenbergElement) -> HeisenbergElement {
        a.inv()
    }

    fn generators(&self) -> Vec<Generator> {
        vec![
            Generator::new("Ax"),
            Generator::new("Ap"),
            Generator::new("A1"),
        ]
    }

    fn is_involution(&self, _id: &str) -> bool {
        false
    }

    fn letter(&self, gen: &Generator) -> Result<HeisenbergElement, GroupError> {
        let e = match gen.id.as_str() {
            "Ax" => Heisenberg::ax(),
            "Ap" => Heisenberg::ap(),
            "A1" => Heisenberg::a1(),
            other => return Err(GroupError::UnknownGenerator(String::from(other))),
        };
        Ok(if gen.inverse { e.inv() } else { e })
    }

    fn encode(&self, e: &HeisenbergElement) -> String {
        format!("H3({},{},{})", e.a, e.b, e.c)
    }

    fn decode(&self, s: &str) -> Result<HeisenbergElement, GroupError> {
        let e = Heisenberg::parse_triple(s)?;
        require_canonical(self, s, e)
    }

    fn relators(&self) -> Vec<Word> {
        // [Ap, Ax] A1^-1, [Ap, A1], [Ax, A1] with [g, h] = g h g^-1 h^-1
        [
            "Ap.Ax.Ap^-1.Ax^-1.A1^-1",
            "Ap.A1.Ap^-1.A1^-1",
            "Ax.A1.Ax^-1.A1^-1",
        ]
        .iter()
        .map(|w| Word::parse(w).expect("static relator"))
        .collect()
    }

    fn conjugate(&self, g: &HeisenbergElement, h: &HeisenbergElement) -> HeisenbergElement {
        // g h g^-1 = (a_h, b_h, c_h + a_g b_h - a_h b_g)
        HeisenbergElement {
            a: h.a.clone(),
            b: h.b.clone(),
            c: &h.c + &g.a * &h.b - &h.a * &g.b,
        }
    }
}

impl Involution for Heisenberg {
    fn twist(&self, e: &HeisenbergElement) -> HeisenbergElement {
        e.swap()
    }

    fn twist_generator(&self, id: &str) -> Option<(&'static str, bool)> {
        match id {
            "Ax" => Some(("Ap", false)),
            "Ap" => Some(("Ax", false)),
            "A1" => Some(("A1", true)),
            _ => None,
        }
    }
}
