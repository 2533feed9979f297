//! Exact arbitrary-precision rational scalars.
//!
//! `Rational` is the universal number type of the crate: every coefficient,
//! moment, bound and breakpoint is one. It wraps `num::BigRational`, which
//! keeps values canonical (reduced, positive denominator), and adds the
//! literal syntax used throughout the I/O surface: an optional sign followed
//! by an integer, a fraction `p/q`, or a finite decimal (`0.1` parses to
//! exactly 1/10).

use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Exact fraction `p/q`. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Self {
        Rational(BigRational::new(numer, denom))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num::traits::Pow::pow(&self.0, exp as i32))
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Larger of the numerator and denominator bit lengths. Used by the CLI
    /// to reject runaway inputs when `MOMENT_RANGE_MAX_BITS` is set.
    pub fn bits(&self) -> u64 {
        self.numer().bits().max(self.denom().bits())
    }

    /// Nearest `f64`, for the non-authoritative `*_approx` output fields.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact decimal rendering with `sig` significant digits, rounding half
    /// away from zero. Zero renders as `"0"`. Values with decimal exponent
    /// outside [-4, 15) switch to scientific notation.
    pub fn to_decimal(&self, sig: usize) -> String {
        assert!(sig > 0);
        if self.is_zero() {
            return "0".to_string();
        }
        let ten = BigInt::from(10);
        let p = self.numer().abs();
        let q = self.denom().clone();

        // exponent e with 10^e <= p/q < 10^(e+1)
        let mut e = p.to_string().len() as i64 - q.to_string().len() as i64;
        let pow_cmp = |e: i64| -> std::cmp::Ordering {
            // compare p/q with 10^e exactly
            if e >= 0 {
                p.cmp(&(&q * ten.pow(e as u32)))
            } else {
                (&p * ten.pow((-e) as u32)).cmp(&q)
            }
        };
        while pow_cmp(e) == std::cmp::Ordering::Less {
            e -= 1;
        }
        while pow_cmp(e + 1) != std::cmp::Ordering::Less {
            e += 1;
        }

        // digits = round(p/q * 10^(sig-1-e)), half away from zero
        let shift = sig as i64 - 1 - e;
        let (num, den) = if shift >= 0 {
            (&p * ten.pow(shift as u32), q.clone())
        } else {
            (p.clone(), &q * ten.pow((-shift) as u32))
        };
        let mut digits = (num * 2u8 + &den) / (&den * 2u8);
        let mut digits_str = digits.to_string();
        if digits_str.len() > sig {
            // rounding carried over (e.g. 99.96 -> 100.0 at 3 digits)
            e += 1;
            digits /= &ten;
            digits_str = digits.to_string();
        }
        debug_assert_eq!(digits_str.len(), sig);

        let sign = if self.is_negative() { "-" } else { "" };
        if (-4..15).contains(&e) {
            if e >= 0 {
                let point = (e + 1) as usize;
                if point >= sig {
                    let zeros = "0".repeat(point - sig);
                    format!("{sign}{digits_str}{zeros}")
                } else {
                    format!("{sign}{}.{}", &digits_str[..point], &digits_str[point..])
                }
            } else {
                let zeros = "0".repeat((-e - 1) as usize);
                format!("{sign}0.{zeros}{digits_str}")
            }
        } else {
            format!("{sign}{}.{}e{}", &digits_str[..1], &digits_str[1..], e)
        }
    }

    fn parse_inner(text: &str) -> Result<Self, String> {
        let s = text.trim();
        if s.is_empty() {
            return Err("empty rational literal".to_string());
        }
        let (sign, body) = match s.as_bytes()[0] {
            b'+' => (1, &s[1..]),
            b'-' => (-1, &s[1..]),
            _ => (1, s),
        };
        if body.is_empty() {
            return Err(format!("missing digits in {s:?}"));
        }
        let value = if let Some((num, den)) = body.split_once('/') {
            let p = parse_digits(num)?;
            let q = parse_digits(den)?;
            if q.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            BigRational::new(p, q)
        } else if let Some((int_part, frac_part)) = body.split_once('.') {
            if int_part.is_empty() || frac_part.is_empty() {
                return Err(format!("malformed decimal {s:?}"));
            }
            let scale = BigInt::from(10).pow(frac_part.len() as u32);
            let p = parse_digits(int_part)? * &scale + parse_digits(frac_part)?;
            BigRational::new(p, scale)
        } else {
            BigRational::from_integer(parse_digits(body)?)
        };
        Ok(Rational(if sign < 0 { -value } else { value }))
    }
}

fn parse_digits(s: &str) -> Result<BigInt, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("invalid digits {s:?}"));
    }
    Ok(s.parse().expect("digit-checked integer"))
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Rational::parse_inner(s).map_err(|message| Error::Parse {
            position: 0,
            message,
        })
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl DivAssign<&Rational> for Rational {
    fn div_assign(&mut self, rhs: &Rational) {
        self.0 /= &rhs.0;
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}
