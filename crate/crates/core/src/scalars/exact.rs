//! Elements of a real quadratic field `Q(sqrt(d))`.
//!
//! A value is stored as `a + b*sqrt(d)` with rational `a`, `b` and a
//! square-free radicand `d`. Pure rationals carry `d = 0` and `b = 0`, so a
//! rational combines with any radicand; two irrational values only combine
//! when their radicands agree.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    a: BigRational,
    b: BigRational,
    d: u64,
}

/// Radicand shared by two operands, or `None` if they live in different fields.
pub fn common_radicand(x: u64, y: u64) -> Option<u64> {
    match (x, y) {
        (0, y) => Some(y),
        (x, 0) => Some(x),
        (x, y) if x == y => Some(x),
        _ => None,
    }
}

fn square_part(d: u64) -> (u64, u64) {
    // d = s^2 * r with r square-free
    let mut s = 1u64;
    let mut r = d;
    let mut p = 2u64;
    while p * p <= r {
        while r % (p * p) == 0 {
            r /= p * p;
            s *= p;
        }
        p += 1;
    }
    (s, r)
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(a: BigRational) -> Self {
        ExactScalar {
            a,
            b: BigRational::zero(),
            d: 0,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_frac(p: i64, q: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Builds `a + b*sqrt(d)`, pulling square factors out of `d`.
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            return Self::rational(a);
        }
        let (s, r) = square_part(d);
        let b = b * BigRational::from_integer(BigInt::from(s));
        if r == 1 {
            return Self::rational(a + b);
        }
        ExactScalar { a, b, d: r }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: u64) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    /// Radicand, `0` for rationals.
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn field_with(&self, other: &Self) -> u64 {
        match common_radicand(self.d, other.d) {
            Some(d) => d,
            None => panic!(
                "arithmetic across fields Q(sqrt({})) and Q(sqrt({}))",
                self.d, other.d
            ),
        }
    }

    pub fn conjugate(&self) -> Self {
        ExactScalar {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// Field norm `a^2 - d b^2`, nonzero for nonzero values since `d` is square-free.
    pub fn norm(&self) -> BigRational {
        let d = BigRational::from_integer(BigInt::from(self.d));
        &self.a * &self.a - d * &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(ExactScalar::new(&self.a / &n, -(&self.b / &n), self.d))
    }

    /// Exact sign of the real number `a + b*sqrt(d)`.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a^2 with d b^2
        let d = BigRational::from_integer(BigInt::from(self.d));
        match (&self.a * &self.a).cmp(&(d * &self.b * &self.b)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return a;
        }
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = ExactScalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        common_radicand(self.d, other.d)?;
        Some((self - other).signum().cmp(&0))
    }
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        ExactScalar::from_int(v)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(v: BigRational) -> Self {
        ExactScalar::rational(v)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        let d = self.field_with(rhs);
        ExactScalar::new(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        let d = self.field_with(rhs);
        ExactScalar::new(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        let d = self.field_with(rhs);
        if self.b.is_zero() && rhs.b.is_zero() {
            return ExactScalar::rational(&self.a * &rhs.a);
        }
        let dq = BigRational::from_integer(BigInt::from(d));
        let a = &self.a * &rhs.a + dq * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        ExactScalar::new(a, b, d)
    }
}

impl<'a> Div<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        let inv = rhs.inv().expect("division by exact zero");
        self * &inv
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: ExactScalar) -> ExactScalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: &ExactScalar) -> ExactScalar { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -self.clone()
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        write!(
            f,
            "{}{}{}*sqrt({})",
            fmt_rational(&self.a),
            sign,
            fmt_rational(&self.b.abs()),
            self.d
        )
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::parse(format!("`{s}`"), "expected an integer or p/q rational");
    if s.is_empty() {
        return Err(bad());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let ok = |t: &str| {
        let t = t.strip_prefix(['+', '-']).unwrap_or(t);
        !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit())
    };
    if !ok(num) || !ok(den) || den.starts_with(['+', '-']) {
        return Err(bad());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::parse(format!("`{s}`"), "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for ExactScalar {
    type Err = Error;

    /// Accepts `a`, `a+b*sqrt(d)`, `a-b*sqrt(d)`, `b*sqrt(d)`, `sqrt(d)`,
    /// `a+sqrt(d)` with integer or `p/q` coefficients; whitespace is ignored.
    fn from_str(raw: &str) -> Result<Self> {
        let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(idx) = s.find("sqrt(") else {
            return parse_rational(&s).map(ExactScalar::rational);
        };
        let tail = &s[idx + 5..];
        let radicand = tail
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(format!("`{raw}`"), "sqrt(...) must end the expression"))?;
        let d: u64 = radicand
            .parse()
            .map_err(|_| Error::parse(format!("`{raw}`"), "radicand must be a nonnegative integer"))?;
        let prefix = &s[..idx];
        let (rat, coef) = if let Some(head) = prefix.strip_suffix('*') {
            let bytes = head.as_bytes();
            let split = (1..bytes.len())
                .rev()
                .find(|&k| {
                    (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1].is_ascii_digit()
                })
                .unwrap_or(0);
            let (r, c) = head.split_at(split);
            let c = c.strip_prefix('+').unwrap_or(c);
            (r, parse_rational(c)?)
        } else {
            match prefix.chars().last() {
                None => ("", BigRational::one()),
                Some('+') => (&prefix[..prefix.len() - 1], BigRational::one()),
                Some('-') => (&prefix[..prefix.len() - 1], -BigRational::one()),
                Some(_) => {
                    return Err(Error::parse(
                        format!("`{raw}`"),
                        "expected `*`, `+` or `-` before sqrt",
                    ))
                }
            }
        };
        let a = if rat.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(rat)?
        };
        Ok(ExactScalar::new(a, coef, d))
    }
}

impl serde::Serialize for ExactScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for ExactScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    #[test]
    fn parses_forms() {
        assert_eq!(p("3"), ExactScalar::from_int(3));
        assert_eq!(p(" -3 / 4 "), ExactScalar::from_frac(-3, 4));
        assert_eq!(p("sqrt(6)"), ExactScalar::sqrt(6));
        assert_eq!(p("-sqrt(3)"), -ExactScalar::sqrt(3));
        assert_eq!(p("1/2 - 3/2*sqrt(5)").to_string(), "1/2-3/2*sqrt(5)");
        assert_eq!(p("2+-1*sqrt(2)").to_string(), "2-1*sqrt(2)");
        assert_eq!(p("-1/2*sqrt(2)").to_string(), "0-1/2*sqrt(2)");
        assert_eq!(p("1+sqrt(2)").to_string(), "1+1*sqrt(2)");
        // square factors are pulled out; sqrt(4) is rational
        assert_eq!(p("sqrt(12)").to_string(), "0+2*sqrt(3)");
        assert_eq!(p("sqrt(4)"), ExactScalar::from_int(2));
    }

    #[test]
    fn rejects_garbage() {
        assert!("0.5".parse::<ExactScalar>().is_err());
        assert!("1e3".parse::<ExactScalar>().is_err());
        assert!("1/0".parse::<ExactScalar>().is_err());
        assert!("sqrt(2)+1".parse::<ExactScalar>().is_err());
        assert!("".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn field_arithmetic() {
        let r3 = ExactScalar::sqrt(3);
        assert_eq!(&r3 * &r3, ExactScalar::from_int(3));
        let x = p("1+1*sqrt(2)");
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, ExactScalar::one());
        assert_eq!(y, p("-1+1*sqrt(2)"));
    }

    #[test]
    fn exact_sign() {
        assert_eq!(p("3-2*sqrt(2)").signum(), 1); // 9 > 8
        assert_eq!(p("2-3*sqrt(2)").signum(), -1);
        assert_eq!(p("-5+2*sqrt(6)").signum(), -1); // 25 > 24
        assert!(p("sqrt(2)") > p("7/5"));
        assert!(p("sqrt(2)") < p("3/2"));
    }

    #[test]
    #[should_panic]
    fn mixed_fields_panic() {
        let _ = ExactScalar::sqrt(2) + ExactScalar::sqrt(3);
    }
}
