//! Coefficient fields: odd prime fields `F_p` (p < 2^31) and the rationals.
//!
//! A [`FieldSpec`] is a lightweight context value; a [`Scalar`] is one field
//! element.  All arithmetic is routed through the [`FieldSpec`] so that prime
//! moduli never have to be stored per element.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::EngineError;
use crate::Result;

/// Largest admissible prime modulus (exclusive bound).
const MAX_PRIME: u64 = 1 << 31;

/// Primes below this trigger a "small field" warning in reports: random
/// elements collide too often for Monte-Carlo sampling to be trustworthy.
const SMALL_PRIME_BOUND: u64 = 101;

/// Range for random rational scalars: integers in `[-50, 50]`.
const RATIONAL_SAMPLE_BOUND: i64 = 50;

/// The coefficient field of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSpec {
    /// `F_p` for an odd prime `p < 2^31`.
    Prime(u64),
    /// The rational numbers.
    Rationals,
}

/// One element of a coefficient field.
///
/// `Fp` values are always stored reduced to `0..p`.  Rational values are
/// always stored in lowest terms (guaranteed by `BigRational`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Fp(u64),
    Rat(BigRational),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl FieldSpec {
    /// Builds `F_p`, rejecting `p = 2`, composites, and `p >= 2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(EngineError::BadField(
                "characteristic 2 is not supported".to_string(),
            ));
        }
        if p >= MAX_PRIME {
            return Err(EngineError::BadField(
                "prime moduli must be below 2^31".to_string(),
            ));
        }
        if !is_prime(p) {
            return Err(EngineError::BadField(alloc::format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// 0 for the rationals, `p` for `F_p`.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }

    /// True when random sampling over this field deserves a warning.
    pub fn is_small(&self) -> bool {
        matches!(self, FieldSpec::Prime(p) if *p < SMALL_PRIME_BOUND)
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Fp(0),
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Fp(1),
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp(r)
            }
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    /// Embeds an arbitrary-precision integer.
    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Prime(p) => {
                let p_big = BigInt::from(*p);
                let mut r = n % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                // r fits in u64 because p < 2^31.
                let (_, digits) = r.to_u64_digits();
                Scalar::Fp(digits.first().copied().unwrap_or(0))
            }
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
        }
    }

    /// Embeds the fraction `num/den`; `den` must be nonzero (and invertible
    /// mod `p` in positive characteristic, which is automatic for `den` not
    /// divisible by `p`).
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(EngineError::ZeroDivision);
        }
        let n = self.from_bigint(num);
        let d = self.from_bigint(den);
        self.div(&n, &d)
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp((x + p - y) % p)
            }
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(mul_mod(*x, *y, *p)),
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(EngineError::ZeroDivision);
        }
        Ok(match (self, a) {
            (FieldSpec::Prime(p), Scalar::Fp(x)) => Scalar::Fp(pow_mod(*x, p - 2, *p)),
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(x.recip()),
            _ => panic!("scalar does not belong to this field"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        let binv = self.inv(b)?;
        Ok(self.mul(a, &binv))
    }

    /// Uniform random element of `F_p`, or a uniform integer in `[-50, 50]`
    /// over the rationals.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Fp(rng.gen_range(0..*p)),
            FieldSpec::Rationals => {
                self.from_i64(rng.gen_range(-RATIONAL_SAMPLE_BOUND..=RATIONAL_SAMPLE_BOUND))
            }
        }
    }

    /// Like [`FieldSpec::random`] but never zero.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Renders a scalar; residues above `p/2` print as negative lifts so that
    /// `F_p` output reads like hand calculation (`-a^3` instead of
    /// `32002*a^3`).  `parse` accepts both spellings.
    pub fn render(&self, a: &Scalar) -> String {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Fp(x)) => {
                if *x > p / 2 {
                    alloc::format!("-{}", p - x)
                } else {
                    x.to_string()
                }
            }
            (FieldSpec::Rationals, Scalar::Rat(r)) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    alloc::format!("{}/{}", r.numer(), r.denom())
                }
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(x) => write!(f, "{x}"),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(32003).is_ok());
        assert!(FieldSpec::prime(3).is_ok());
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(91).is_err()); // 7 * 13
        assert!(FieldSpec::prime(1 << 31).is_err());
        assert!(FieldSpec::prime(2147483647).is_ok()); // Mersenne prime 2^31 - 1... just below cap
    }

    #[test]
    fn small_field_flag() {
        assert!(FieldSpec::prime(7).unwrap().is_small());
        assert!(!FieldSpec::prime(101).unwrap().is_small());
        assert!(!FieldSpec::rationals().is_small());
    }

    #[test]
    fn fp_arithmetic_round_trip() {
        let f = FieldSpec::prime(32003).unwrap();
        for a in [1i64, 2, 17, -5, 31999, 12345] {
            let x = f.from_i64(a);
            let inv = f.inv(&x).unwrap();
            assert!(f.mul(&x, &inv).is_one(), "x * x^-1 = 1 failed for {a}");
        }
        // (a/b) * b == a
        let a = f.from_i64(7);
        let b = f.from_i64(11);
        let q = f.div(&a, &b).unwrap();
        assert_eq!(f.mul(&q, &b), a);
    }

    #[test]
    fn rational_arithmetic() {
        let f = FieldSpec::rationals();
        let a = f
            .from_fraction(&BigInt::from(3), &BigInt::from(4))
            .unwrap();
        let b = f
            .from_fraction(&BigInt::from(1), &BigInt::from(4))
            .unwrap();
        assert!(f.add(&a, &b).is_one());
        assert_eq!(f.render(&a), "3/4");
        assert!(f.inv(&f.zero()).is_err());
    }

    #[test]
    fn balanced_render() {
        let f = FieldSpec::prime(32003).unwrap();
        assert_eq!(f.render(&f.from_i64(-1)), "-1");
        assert_eq!(f.render(&f.from_i64(2)), "2");
        assert_eq!(f.render(&f.from_i64(16001)), "16001");
        assert_eq!(f.render(&f.from_i64(16002)), "-16001");
    }

    #[test]
    fn random_is_deterministic_per_seed() {
        let f = FieldSpec::prime(32003).unwrap();
        let mut r1 = ChaCha12Rng::seed_from_u64(42);
        let mut r2 = ChaCha12Rng::seed_from_u64(42);
        for _ in 0..100 {
            assert_eq!(f.random(&mut r1), f.random(&mut r2));
        }
    }

    #[test]
    fn rational_random_stays_in_box() {
        let f = FieldSpec::rationals();
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        for _ in 0..200 {
            if let Scalar::Rat(r) = f.random(&mut rng) {
                assert!(r.denom().is_one());
                let n = r.numer().clone();
                assert!(n >= BigInt::from(-50) && n <= BigInt::from(50));
            } else {
                panic!("wrong scalar kind");
            }
        }
    }
}
