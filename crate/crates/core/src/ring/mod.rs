//! Finitely supported elements of the group ring `C[G]` with exact
//! Gaussian-rational coefficients.

mod coefficient;

use alloc::collections::btree_map::{self, BTreeMap};
use core::ops::Neg;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::group::Group;
use crate::Rational;

pub use coefficient::Coefficient;

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum NormError {
    #[error("l_p norm needs a finite exponent p >= 1, got {0}")]
    InvalidExponent(f64),
}

/// `Σ α(g)·g` with finitely many nonzero `α(g)`. Zero coefficients are never
/// stored, so the representation is unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingVector<E: Ord> {
    terms: BTreeMap<E, Coefficient>,
}

impl<E: Ord> Default for GroupRingVector<E> {
    fn default() -> Self {
        GroupRingVector {
            terms: BTreeMap::new(),
        }
    }
}

// `is_zero` plays the role of `is_empty`
#[allow(clippy::len_without_is_empty)]
impl<E: Ord + Clone> GroupRingVector<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `g`.
    pub fn basis(g: E) -> Self {
        let mut v = Self::zero();
        v.add_term(g, &Coefficient::from_integer(1));
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (E, Coefficient)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (g, c) in terms {
            v.add_term(g, &c);
        }
        v
    }

    pub fn from_real<I: IntoIterator<Item = (E, Rational)>>(terms: I) -> Self {
        Self::from_terms(terms.into_iter().map(|(g, r)| (g, Coefficient::real(r))))
    }

    pub fn add_term(&mut self, g: E, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `δ_h`: the coefficient at `h` (zero off the support).
    pub fn coefficient(&self, h: &E) -> Coefficient {
        self.terms.get(h).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &E> {
        self.terms.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&E, &Coefficient)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, a)| (g.clone(), a * c)))
    }

    /// `g · v`.
    pub fn left_mul<G: Group<Element = E>>(&self, group: &G, g: &E) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(h, c)| (group.multiply(g, h), c.clone())),
        )
    }

    /// `v · g`.
    pub fn right_mul<G: Group<Element = E>>(&self, group: &G, g: &E) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(h, c)| (group.multiply(h, g), c.clone())),
        )
    }

    /// Convolution product in `C[G]`.
    pub fn mul<G: Group<Element = E>>(&self, group: &G, other: &Self) -> Self {
        let mut out = Self::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(group.multiply(g, h), &(a * b));
            }
        }
        out
    }

    /// `‖v‖_p = (Σ |α(g)|^p)^(1/p)` for finite `p >= 1`.
    pub fn lp_norm(&self, p: f64) -> Result<f64, NormError> {
        if p.is_nan() || p < 1.0 || p.is_infinite() {
            return Err(NormError::InvalidExponent(p));
        }
        if p == 2.0 {
            let s: f64 = self
                .terms
                .values()
                .map(|c| ratio_to_f64(&c.norm_sqr()))
                .sum();
            return Ok(libm::sqrt(s));
        }
        let sum: f64 = self
            .terms
            .values()
            .map(|c| libm::pow(ratio_to_f64(&c.norm_sqr()), p / 2.0))
            .sum();
        Ok(libm::pow(sum, 1.0 / p))
    }

    /// `sup_g |α(g)|`.
    pub fn sup_norm(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.norm_sqr())
            .max()
            .map(|m| libm::sqrt(ratio_to_f64(&m)))
            .unwrap_or(0.0)
    }

    /// `Σ |α(g)|^q` as an exact rational, when that is rational: always for
    /// even `q`, and for odd `q` when every coefficient is real.
    pub fn pow_sum_exact(&self, q: u32) -> Option<Rational> {
        let mut total = Rational::zero();
        for c in self.terms.values() {
            let term = if q.is_multiple_of(2) {
                pow_rational(&c.norm_sqr(), q / 2)
            } else if c.is_real() {
                pow_rational(&c.re.abs(), q)
            } else {
                return None;
            };
            total += term;
        }
        Some(total)
    }
}

impl<E: Ord + Clone> Neg for GroupRingVector<E> {
    type Output = Self;
    fn neg(self) -> Self {
        GroupRingVector {
            terms: self.terms.into_iter().map(|(g, c)| (g, -c)).collect(),
        }
    }
}

pub(crate) fn pow_rational(r: &Rational, n: u32) -> Rational {
    let mut acc = Rational::from_integer(1.into());
    for _ in 0..n {
        acc *= r;
    }
    acc
}

/// Rational to the nearest `f64`, robust to huge numerators and denominators.
pub fn ratio_to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() && (v != 0.0 || r.is_zero()) {
            return v;
        }
    }
    // scale both parts down to a common magnitude before dividing
    let n = r.numer();
    let d = r.denom();
    let shift = n.bits().max(d.bits()).saturating_sub(1000);
    let n = n >> shift;
    let d = d >> shift;
    if d.is_zero() {
        return if n.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        };
    }
    let g = n.gcd(&d);
    let (n, d) = (n / &g, d / &g);
    n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Group, GroupModel, Heisenberg, HeisenbergElement};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn zero_coefficients_vanish() {
        let mut v = GroupRingVector::basis(HeisenbergElement::identity());
        v.add_term(
            HeisenbergElement::identity(),
            &Coefficient::from_integer(-1),
        );
        assert!(v.is_zero());
        assert_eq!(v.lp_norm(3.0).unwrap(), 0.0);
        assert_eq!(v.sup_norm(), 0.0);
    }

    #[test]
    fn norm_of_a_m() {
        // a_m = Σ_{k=-m}^{m} Ax^k has ‖a_m‖_2 = sqrt(2m+1)
        let h = Heisenberg;
        let m = 4;
        let v = GroupRingVector::from_real(
            (-m..=m).map(|k| (HeisenbergElement::new(0, k, 0), q(1, 1))),
        );
        assert_eq!(v.lp_norm(2.0).unwrap(), 3.0);
        assert_eq!(v.len(), 9);
        let _ = h;
    }

    #[test]
    fn l1_of_two_points() {
        let v = GroupRingVector::from_real([
            (HeisenbergElement::new(1, 0, 0), q(1, 1)),
            (HeisenbergElement::new(0, 1, 0), q(1, 1)),
        ]);
        assert_eq!(v.lp_norm(1.0).unwrap(), 2.0);
    }

    #[test]
    fn exponent_domain() {
        let v: GroupRingVector<HeisenbergElement> = GroupRingVector::zero();
        assert!(matches!(v.lp_norm(0.5), Err(NormError::InvalidExponent(_))));
        assert!(v.lp_norm(f64::NAN).is_err());
        assert!(v.lp_norm(f64::INFINITY).is_err());
    }

    #[test]
    fn commutator_of_ap_ax() {
        let h = GroupModel::heisenberg();
        let ap = GroupRingVector::basis(h.decode("H3(1,0,0)").unwrap());
        let ax = GroupRingVector::basis(h.decode("H3(0,1,0)").unwrap());
        let d = ap.mul(&h, &ax).sub(&ax.mul(&h, &ap));
        assert_eq!(d.len(), 2);
        assert_eq!(
            d.coefficient(&h.decode("H3(1,1,1)").unwrap()),
            Coefficient::from_integer(1)
        );
        assert_eq!(
            d.coefficient(&h.decode("H3(1,1,0)").unwrap()),
            Coefficient::from_integer(-1)
        );
    }

    #[test]
    fn exact_pow_sums() {
        let v = GroupRingVector::from_real([
            (HeisenbergElement::new(1, 0, 0), q(-1, 2)),
            (HeisenbergElement::new(0, 1, 0), q(1, 3)),
        ]);
        assert_eq!(v.pow_sum_exact(3), Some(q(1, 8) + q(1, 27)));
        let w = GroupRingVector::from_terms([(
            HeisenbergElement::identity(),
            Coefficient::new(q(1, 1), q(1, 1)),
        )]);
        assert_eq!(w.pow_sum_exact(1), None);
        assert_eq!(w.pow_sum_exact(2), Some(q(2, 1)));
    }

    #[test]
    fn huge_rationals_convert() {
        let big = num_bigint::BigInt::from(10).pow(400);
        let r = Rational::new(big.clone() * 3, big);
        assert_eq!(ratio_to_f64(&r), 3.0);
    }
}
