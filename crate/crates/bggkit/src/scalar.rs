//! Elements of the number field ℚ(i, √2).
//!
//! A scalar is `a + b·i + c·√2 + d·i√2` with rational coordinates. The text
//! form is `p/q + r/s*i + t/u*r2 + v/w*i*r2` with zero terms left out.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{BggError, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::default()
    }

    pub fn one() -> Scalar {
        Scalar::from_rational(Rational::ONE)
    }

    pub fn i() -> Scalar {
        Scalar {
            b: Rational::ONE,
            ..Scalar::default()
        }
    }

    pub fn sqrt2() -> Scalar {
        Scalar {
            c: Rational::ONE,
            ..Scalar::default()
        }
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_rational(Rational::from_int(n))
    }

    pub fn frac(n: i64, d: i64) -> Scalar {
        Scalar::from_rational(Rational::new(n, d))
    }

    pub fn from_rational(r: Rational) -> Scalar {
        Scalar {
            a: r,
            ..Scalar::default()
        }
    }

    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Scalar {
        Scalar { a, b, c, d }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// True when the value lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// True when the value lies in ℚ(√2), i.e. is real.
    pub fn is_real(&self) -> bool {
        self.b.is_zero() && self.d.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Automorphism i ↦ −i (complex conjugation).
    pub fn conj_i(&self) -> Scalar {
        Scalar {
            a: self.a.clone(),
            b: -self.b.clone(),
            c: self.c.clone(),
            d: -self.d.clone(),
        }
    }

    /// Automorphism √2 ↦ −√2.
    pub fn conj_sqrt2(&self) -> Scalar {
        Scalar {
            a: self.a.clone(),
            b: self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }

    pub fn checked_inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(BggError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Scalar::from_rational(self.a.recip().expect("nonzero")));
        }
        // x·σ(x) lies in ℚ(i) where σ is √2 ↦ −√2; then multiply by its conjugate.
        let s = self.conj_sqrt2();
        let n1 = self * &s;
        let n1c = n1.conj_i();
        let n2 = &n1 * &n1c;
        let r = n2.a.recip().expect("norm of nonzero element is nonzero");
        let num = &s * &n1c;
        Ok(num.scale(&r))
    }

    pub fn inv(&self) -> Scalar {
        self.checked_inv().expect("inverse of zero scalar")
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.checked_inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Scalar {
        Scalar {
            a: &self.a * r,
            b: &self.b * r,
            c: &self.c * r,
            d: &self.d * r,
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        let r2 = std::f64::consts::SQRT_2;
        Complex64::new(
            self.a.to_f64() + r2 * self.c.to_f64(),
            self.b.to_f64() + r2 * self.d.to_f64(),
        )
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            c: &self.c + &o.c,
            d: &self.d + &o.d,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            c: &self.c - &o.c,
            d: &self.d - &o.d,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_rational() {
            return o.scale(&self.a);
        }
        if o.is_rational() {
            return self.scale(&o.a);
        }
        let two = Rational::from_int(2);
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&o.a, &o.b, &o.c, &o.d);
        let re = &(&(a * e) - &(b * f)) + &(&two * &(&(c * g) - &(d * h)));
        let im = &(&(a * f) + &(b * e)) + &(&two * &(&(c * h) + &(d * g)));
        let s = &(&(a * g) + &(c * e)) - &(&(b * h) + &(d * f));
        let is = &(&(a * h) + &(d * e)) + &(&(b * g) + &(c * f));
        Scalar {
            a: re,
            b: im,
            c: s,
            d: is,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self.checked_div(o).expect("division by zero scalar")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if o.is_zero() {
            return;
        }
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        if o.is_zero() {
            return;
        }
        *self = &*self - o;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [
            (&self.a, ""),
            (&self.b, "i"),
            (&self.c, "r2"),
            (&self.d, "i*r2"),
        ];
        let mut first = true;
        for (coef, unit) in parts {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            let mag = coef.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if unit.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{unit}")?;
            } else {
                write!(f, "{mag}*{unit}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = BggError;
    fn from_str(s: &str) -> Result<Scalar> {
        crate::expr::parse_scalar(s)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_norm() {
        let x = &Scalar::one() + &Scalar::i();
        let y = &Scalar::one() - &Scalar::i();
        assert_eq!(&x * &y, Scalar::from_int(2));
    }

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(&Scalar::sqrt2() * &Scalar::sqrt2(), Scalar::from_int(2));
        let is = &Scalar::i() * &Scalar::sqrt2();
        assert_eq!(&is * &is, Scalar::from_int(-2));
    }

    #[test]
    fn inverse_of_one_plus_sqrt2() {
        let x = &Scalar::one() + &Scalar::sqrt2();
        assert_eq!(x.inv(), &Scalar::sqrt2() - &Scalar::one());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(matches!(
            Scalar::zero().checked_inv(),
            Err(BggError::DivisionByZero)
        ));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::zero().to_string(), "0");
        let x = Scalar::new(
            Rational::new(1, 2),
            Rational::new(-3, 4),
            Rational::ZERO,
            Rational::ONE,
        );
        assert_eq!(x.to_string(), "1/2 - 3/4*i + i*r2");
    }
}
