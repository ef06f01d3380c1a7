//! Exact scalar fields: the rationals and prime fields `GF(p)`.
//!
//! A [`Field`] value is the arithmetic context; elements are plain data.
//! Nothing here uses floating point.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Scalars travel as plain data; the field value supplies the arithmetic,
/// so conversions take `&self`.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    /// 0 for the rationals, `p` for `GF(p)`.
    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Primitive `m`-th root of unity, when the field has one.
    fn root_of_unity(&self, m: usize) -> Option<Self::Elem>;

    /// Parses a JSON integer or a `"num/den"` string.
    fn parse(&self, value: &Value) -> Result<Self::Elem>;

    fn format(&self, a: &Self::Elem) -> String;

    fn from_ratio(&self, num: i64, den: i64) -> Result<Self::Elem> {
        let d = self
            .inv(&self.from_i64(den))
            .ok_or_else(|| Error::Input(format!("denominator {den} is zero in this field")))?;
        Ok(self.mul(&self.from_i64(num), &d))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

fn parse_ratio_text(text: &str) -> Result<(BigInt, BigInt)> {
    let bad = || Error::Input(format!("cannot parse scalar `{text}`"));
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok((n, d))
}

fn value_text(value: &Value) -> Result<String> {
    match value {
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        Value::String(s) => Ok(s.clone()),
        other => Err(Error::Input(format!(
            "scalar must be an integer or \"num/den\", got {other}"
        ))),
    }
}

/// The field ℚ with arbitrary-precision entries.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn root_of_unity(&self, m: usize) -> Option<BigRational> {
        match m {
            1 => Some(self.one()),
            2 => Some(self.from_i64(-1)),
            _ => None,
        }
    }
    fn parse(&self, value: &Value) -> Result<BigRational> {
        let (n, d) = parse_ratio_text(&value_text(value)?)?;
        Ok(BigRational::new(n, d))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", a.numer().abs(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// `GF(p)` for a prime `p < 2³²`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Input(format!("{p} is not prime")));
        }
        if p >= 1 << 32 {
            return Err(Error::Input(format!("modulus {p} is too large")));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn root_of_unity(&self, m: usize) -> Option<u64> {
        let m = m as u64;
        if m == 0 || !(self.p - 1).is_multiple_of(m) {
            return None;
        }
        if m == 1 {
            return Some(self.one());
        }
        let factors = prime_factors(m);
        (2..self.p).find_map(|x| {
            let z = self.pow(x, (self.p - 1) / m);
            factors
                .iter()
                .all(|&q| self.pow(z, m / q) != 1)
                .then_some(z)
        })
    }
    fn parse(&self, value: &Value) -> Result<u64> {
        let (n, d) = parse_ratio_text(&value_text(value)?)?;
        let p = BigInt::from(self.p);
        let reduce = |x: &BigInt| -> u64 {
            let r = ((x % &p) + &p) % &p;
            u64::try_from(r).expect("residue fits in u64")
        };
        let d = self
            .inv(&reduce(&d))
            .ok_or_else(|| Error::Input(format!("denominator vanishes mod {}", self.p)))?;
        Ok(self.mul(&reduce(&n), &d))
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(5) && is_prime(2_147_483_647));
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(6));
        assert!(PrimeField::new(4).is_err());
    }

    #[test]
    fn rational_parse_and_format() {
        let q = Rationals;
        let x = q.parse(&json!("-2/4")).unwrap();
        assert_eq!(q.format(&x), "-1/2");
        assert_eq!(q.format(&q.parse(&json!(3)).unwrap()), "3");
        assert!(q.parse(&json!("1/0")).is_err());
        assert!(q.parse(&json!(0.5)).is_err());
        assert_eq!(q.inv(&q.zero()), None);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.mul(&f.inv(&3).unwrap(), &3), 1);
        assert_eq!(f.parse(&json!("1/2")).unwrap(), 4);
        assert!(f.parse(&json!("1/7")).is_err());
        assert_eq!(f.from_ratio(3, 4).unwrap(), f.mul(&3, &f.inv(&4).unwrap()));
    }

    #[test]
    fn roots_of_unity() {
        let f = PrimeField::new(13).unwrap();
        let z = f.root_of_unity(4).unwrap();
        assert_eq!(f.pow(z, 4), 1);
        assert_ne!(f.pow(z, 2), 1);
        assert_eq!(f.root_of_unity(5), None);
        assert_eq!(Rationals.root_of_unity(2), Some(Rationals.from_i64(-1)));
        assert_eq!(Rationals.root_of_unity(3), None);
    }
}
