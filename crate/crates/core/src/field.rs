//! Exact scalar fields: the rationals and prime fields GF(p).

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, RngCore};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// Runtime description of a field: `q` or `gf:<p>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    kind: FieldKind,
    characteristic: u32,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec {
        kind: FieldKind::Rationals,
        characteristic: 0,
    };

    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec {
            kind: FieldKind::PrimeField,
            characteristic: p,
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "rationals" {
            return Ok(FieldSpec::RATIONALS);
        }
        let digits = t
            .strip_prefix("gf:")
            .or_else(|| t.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| Error::InvalidField(format!("unrecognised field `{s}`")))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad characteristic in `{s}`")))?;
        FieldSpec::prime(p)
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "q"),
            FieldKind::PrimeField => write!(f, "gf:{}", self.characteristic),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field. Elements are plain values; all arithmetic goes through the
/// field so that GF(p) can carry its characteristic at runtime.
pub trait Field: Copy + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;
    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;
    /// The `n`-th element in a fixed enumeration; only meaningful for finite fields.
    fn nth_elem(&self, n: u64) -> Self::Elem;
    fn random_elem(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a - c * b`, the elimination kernel.
    fn sub_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(c, b))
    }

    fn random_nonzero(&self, rng: &mut dyn RngCore) -> Self::Elem {
        loop {
            let x = self.random_elem(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }
}

/// The field of rational numbers with arbitrary-precision numerator and denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::RATIONALS
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
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
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let t = s.trim();
        let bad = || Error::Parse(format!("invalid rational scalar `{s}`"));
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(num, den))
    }
    fn format_elem(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn nth_elem(&self, n: u64) -> BigRational {
        // 0, 1, -1, 2, -2, ...
        let k = n.div_ceil(2) as i64;
        self.from_i64(if n % 2 == 1 { k } else { -k })
    }
    fn random_elem(&self, rng: &mut dyn RngCore) -> BigRational {
        let num: i64 = rng.random_range(-4..=4);
        let den: i64 = if rng.random_bool(0.25) { rng.random_range(2..=3) } else { 1 };
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

/// GF(p) for a prime `p < 2^31`; elements are canonical residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        FieldSpec::prime(p)?;
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    fn reduce_big(&self, n: &BigInt) -> u32 {
        let m = n.mod_floor(&BigInt::from(self.p));
        m.to_u32().expect("residue fits in u32")
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec {
            kind: FieldKind::PrimeField,
            characteristic: self.p,
        }
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i64) as u32)
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn parse_elem(&self, s: &str) -> Result<u32> {
        let t = s.trim();
        let bad = || Error::Parse(format!("invalid GF({}) scalar `{s}`", self.p));
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        let den = self.inv(&self.reduce_big(&den)).ok_or_else(bad)?;
        Ok(self.mul(&self.reduce_big(&num), &den))
    }
    fn format_elem(&self, a: &u32) -> String {
        a.to_string()
    }
    fn order(&self) -> Option<u64> {
        Some(self.p as u64)
    }
    fn nth_elem(&self, n: u64) -> u32 {
        (n % self.p as u64) as u32
    }
    fn random_elem(&self, rng: &mut dyn RngCore) -> u32 {
        rng.random_range(0..self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_field_specs() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::RATIONALS);
        let gf3: FieldSpec = "gf:3".parse().unwrap();
        assert_eq!(gf3.characteristic(), 3);
        assert_eq!(gf3.to_string(), "gf:3");
        assert!("gf:4".parse::<FieldSpec>().is_err());
        assert!("gf:1".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn prime_field_inverses() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            let b = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &b), 1);
        }
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.parse_elem("-1").unwrap(), 6);
        assert_eq!(f.parse_elem("1/2").unwrap(), 4);
    }

    #[test]
    fn rational_round_trip() {
        let q = Rationals;
        let x = q.parse_elem("3/7").unwrap();
        assert_eq!(q.format_elem(&x), "3/7");
        assert_eq!(q.format_elem(&q.parse_elem("-4/2").unwrap()), "-2");
        assert!(q.parse_elem("1/0").is_err());
    }
}
