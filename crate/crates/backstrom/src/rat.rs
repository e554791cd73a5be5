//! Exact rational scalars.
//!
//! `Rat` wraps an arbitrary-precision `BigRational` and fixes the external
//! text form used by every file format in this crate: `"p/q"` with `q > 0`,
//! or just `"p"` when the denominator is 1. Values are always stored
//! reduced (gcd 1, positive denominator); `num-rational` maintains that
//! invariant on every operation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` as a reduced rational. Panics if `q == 0`; use the `FromStr`
    /// parser for untrusted input.
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Rat> {
        if self.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse error for the `"p/q"` scalar syntax.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational {input:?}: {reason}")]
pub struct ParseRatError {
    pub input: String,
    pub reason: String,
}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `p` or `p/q` with an optional leading sign on `p`. The
    /// denominator must be a positive integer; `1/0` and `1/-2` are
    /// rejected rather than normalized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseRatError {
            input: s.to_owned(),
            reason: reason.to_owned(),
        };
        let s = s.trim();
        if s.is_empty() {
            return Err(err("empty string"));
        }
        let (num_str, den_str) = match s.split_once('/') {
            None => (s, None),
            Some((n, d)) => (n, Some(d)),
        };
        let numer = BigInt::from_str(num_str).map_err(|_| err("numerator is not an integer"))?;
        let denom = match den_str {
            None => BigInt::one(),
            Some(d) => {
                if d.starts_with('+') || d.starts_with('-') {
                    return Err(err("denominator must be an unsigned integer"));
                }
                let d = BigInt::from_str(d).map_err(|_| err("denominator is not an integer"))?;
                if d.is_zero() {
                    return Err(err("zero denominator"));
                }
                d
            }
        };
        Ok(Rat(BigRational::new(numer, denom)))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        let mut acc = Rat::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-22/7", "100000000000000000001/3"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
            assert_eq!(r.to_string().parse::<Rat>().unwrap(), r);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!("4/6".parse::<Rat>().unwrap().to_string(), "2/3");
        assert_eq!("-4/2".parse::<Rat>().unwrap().to_string(), "-2");
        assert_eq!("+3/9".parse::<Rat>().unwrap().to_string(), "1/3");
    }

    #[test]
    fn parse_rejects_bad_input() {
        for s in ["", "1/0", "1/-2", "1/+2", "a", "1/2/3", "1.5", "2 / 3"] {
            assert!(s.parse::<Rat>().is_err(), "{s:?} should be rejected");
        }
    }

    #[test]
    fn arithmetic() {
        let a = Rat::new(1, 2);
        let b = Rat::new(1, 3);
        assert_eq!(&a + &b, Rat::new(5, 6));
        assert_eq!(&a - &b, Rat::new(1, 6));
        assert_eq!(&a * &b, Rat::new(1, 6));
        assert_eq!(&a / &b, Rat::new(3, 2));
        assert_eq!(a.inv().unwrap(), Rat::from_int(2));
        assert!(Rat::zero().inv().is_none());
    }
}
