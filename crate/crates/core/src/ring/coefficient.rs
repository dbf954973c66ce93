use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{Signed, ToPrimitive, Zero};

use crate::Rational;

/// Exact Gaussian rational `re + i·im`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Coefficient {
    pub re: Rational,
    pub im: Rational,
}

impl Coefficient {
    pub fn new(re: Rational, im: Rational) -> Self {
        Coefficient { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Coefficient {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::real(Rational::from_integer(n.into()))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `|z|^2`, exactly.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn modulus(&self) -> f64 {
        if self.im.is_zero() {
            return self.re.abs().to_f64().unwrap_or(f64::INFINITY);
        }
        libm::sqrt(self.norm_sqr().to_f64().unwrap_or(f64::INFINITY))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Coefficient {
            re: &self.re * r,
            im: &self.im * r,
        }
    }
}

impl Zero for Coefficient {
    fn zero() -> Self {
        Coefficient::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl From<Rational> for Coefficient {
    fn from(r: Rational) -> Self {
        Coefficient::real(r)
    }
}

impl<'a> Add<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        Coefficient {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: Coefficient) -> Coefficient {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        Coefficient {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: Coefficient) -> Coefficient {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        Coefficient {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
