//! Exact scalar arithmetic over the rationals and over prime fields GF(p).
//!
//! There is no floating point anywhere in this crate. Elements are plain
//! data (`BigRational` fractions, `u32` residues) and all arithmetic goes
//! through a [`Field`] context value, so a modulus chosen at run time needs
//! no type-level encoding.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} out of range (need 2 <= p < 65536)")]
    ModulusOutOfRange(u32),
    #[error("cannot parse scalar {input:?}: {reason}")]
    ParseScalar { input: String, reason: String },
    #[error("division by zero")]
    DivisionByZero,
}

/// Runtime tag describing a ground field, as it appears in documents and
/// reports. A `PrimeField` value always carries a verified prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Deterministic primality test by trial division; ample for p < 2^16.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field, passed by reference to every arithmetic routine.
///
/// `Elem` carries no field pointer; mixing elements of different moduli is
/// a caller bug. Every operation is total except `inv`/`div` on zero.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + Ord + fmt::Debug;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// All elements in canonical order when the field is finite, else `None`.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    /// Number of elements when finite.
    fn size(&self) -> Option<u64>;

    /// Canonical string form: decimal residue for GF(p), `n` or `a/b` for Q.
    fn format(&self, a: &Self::Elem) -> String;

    /// Inverse of [`Field::format`]; accepts any decimal integer for GF(p)
    /// (reduced mod p) and any `a/b` for Q (reduced to lowest terms).
    fn parse(&self, s: &str) -> Result<Self::Elem, FieldError>;

    /// Small random element, used only by seeded sampling heuristics.
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Elem;
}

/// The field of rational numbers with arbitrary-precision arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }

    fn size(&self) -> Option<u64> {
        None
    }

    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn parse(&self, s: &str) -> Result<BigRational, FieldError> {
        let bad = |reason: &str| FieldError::ParseScalar {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let numer: BigInt = num_str.parse().map_err(|_| bad("bad numerator"))?;
        let denom: BigInt = den_str.parse().map_err(|_| bad("bad denominator"))?;
        if denom.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(BigRational::new(numer, denom))
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> BigRational {
        let numer = rng.gen_range(-3i64..=3);
        let denom = rng.gen_range(1i64..=2);
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }
}

/// The prime field GF(p), 2 <= p < 2^16. Elements are canonical residues
/// in [0, p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, FieldError> {
        if !(2..1 << 16).contains(&p) {
            return Err(FieldError::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField(self.p)
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1 % self.p
    }

    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        (a + b) % self.p
    }

    fn neg(&self, a: &u32) -> u32 {
        (self.p - a) % self.p
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }

    fn inv(&self, a: &u32) -> Result<u32, FieldError> {
        if *a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (*a as i64, self.p as i64);
        let (mut s0, mut s1) = (1i64, 0i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "modulus is prime, nonzero elements are units");
        Ok(s0.rem_euclid(self.p as i64) as u32)
    }

    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.p).collect())
    }

    fn size(&self) -> Option<u64> {
        Some(self.p as u64)
    }

    fn format(&self, a: &u32) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<u32, FieldError> {
        let n: BigInt = s.trim().parse().map_err(|_| FieldError::ParseScalar {
            input: s.to_string(),
            reason: "not a decimal integer".to_string(),
        })?;
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.is_negative() {
            r += &p;
        }
        // residue < p < 2^16 after reduction
        Ok(u32::try_from(r).expect("reduced residue fits u32"))
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(65521));
        assert!(!is_prime(1));
        assert!(!is_prime(65535));
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1 << 16).is_err());
        assert!(PrimeField::new(13).is_ok());
    }

    #[test]
    fn residue_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.neg(&0), 0);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3).unwrap(), 5);
        assert_eq!(f.div(&1, &2).unwrap(), 4);
        assert!(f.inv(&0).is_err());
    }

    #[test]
    fn rational_parse_format() {
        let q = Rationals;
        let x = q.parse("-6/4").unwrap();
        assert_eq!(q.format(&x), "-3/2");
        assert_eq!(q.format(&q.parse("5").unwrap()), "5");
        assert_eq!(q.format(&q.zero()), "0");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn residue_parse_reduces() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.parse("7").unwrap(), 2);
        assert_eq!(f.parse("-1").unwrap(), 4);
        assert_eq!(f.format(&f.parse("10").unwrap()), "0");
    }

    // Field axioms on randomized triples, both fields.
    #[test]
    fn axioms_randomized() {
        fn check<F: Field>(field: &F, seed: u64) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..200 {
                let a = field.sample(&mut rng);
                let b = field.sample(&mut rng);
                let c = field.sample(&mut rng);
                assert_eq!(field.add(&a, &b), field.add(&b, &a));
                assert_eq!(
                    field.add(&field.add(&a, &b), &c),
                    field.add(&a, &field.add(&b, &c))
                );
                assert_eq!(
                    field.mul(&field.mul(&a, &b), &c),
                    field.mul(&a, &field.mul(&b, &c))
                );
                assert_eq!(
                    field.mul(&a, &field.add(&b, &c)),
                    field.add(&field.mul(&a, &b), &field.mul(&a, &c))
                );
                assert!(field.is_zero(&field.add(&a, &field.neg(&a))));
                if !field.is_zero(&a) {
                    let inv = field.inv(&a).unwrap();
                    assert_eq!(field.mul(&a, &inv), field.one());
                }
            }
        }
        check(&Rationals, 1);
        check(&PrimeField::new(2).unwrap(), 2);
        check(&PrimeField::new(3).unwrap(), 3);
        check(&PrimeField::new(65521).unwrap(), 4);
    }
}
