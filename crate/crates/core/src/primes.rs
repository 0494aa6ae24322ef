//! Classification of Gaussian integers as primes or composites, two-squares
//! decomposition of rational primes, and factorization into canonical
//! Gaussian primes.

use std::fmt;

use crate::arith;
use crate::ring::GaussInt;

/// Where an element sits in the multiplicative structure of the ring.
///
/// Every Gaussian prime is exactly one of `Ramified` (the associates of
/// `1+i`), `Inert` (associates of rational primes `p = 3 mod 4`), or `Split`
/// (norm is a rational prime `p = 1 mod 4`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PrimeClass {
    Zero,
    Unit,
    Ramified,
    Inert,
    Split,
    Composite,
}

impl fmt::Display for PrimeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrimeClass::Zero => "zero",
            PrimeClass::Unit => "unit",
            PrimeClass::Ramified => "ramified",
            PrimeClass::Inert => "inert",
            PrimeClass::Split => "split",
            PrimeClass::Composite => "composite",
        })
    }
}

impl PrimeClass {
    pub fn is_prime(self) -> bool {
        matches!(self, PrimeClass::Ramified | PrimeClass::Inert | PrimeClass::Split)
    }
}

/// `value = unit * Π factor^exponent` with canonical prime factors sorted by
/// `(norm, re, im)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub unit: GaussInt,
    pub factors: Vec<(GaussInt, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> GaussInt {
        let mut acc = self.unit;
        for &(p, e) in &self.factors {
            for _ in 0..e {
                acc = acc * p;
            }
        }
        acc
    }

    /// One representative per divisor class (up to associates): every product
    /// of prime powers below the factorization, `1` and the full value
    /// included. Sorted by `(norm, re, im)`.
    pub fn divisor_representatives(&self) -> Vec<GaussInt> {
        let mut out = vec![GaussInt::ONE];
        for &(p, e) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for d in out {
                let mut acc = d;
                next.push(acc);
                for _ in 0..e {
                    acc = acc * p;
                    next.push(acc);
                }
            }
            out = next;
        }
        out.sort_unstable_by_key(|d| d.norm_key());
        out
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.unit)?;
        for &(p, e) in &self.factors {
            write!(f, " * ({p})")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PrimesError {
    ZeroInput,
    NotPrime(u64),
    NotOneMod4(u64),
}

impl fmt::Display for PrimesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimesError::ZeroInput => write!(f, "zero cannot be factored"),
            PrimesError::NotPrime(p) => write!(f, "{p} is not prime"),
            PrimesError::NotOneMod4(p) => write!(f, "{p} is not congruent to 1 mod 4"),
        }
    }
}

impl std::error::Error for PrimesError {}

/// Classifies `a` by norm and shape; see [`PrimeClass`].
pub fn classify(a: GaussInt) -> PrimeClass {
    let n = a.norm();
    if n == 0 {
        return PrimeClass::Zero;
    }
    if n == 1 {
        return PrimeClass::Unit;
    }
    if n == 2 {
        return PrimeClass::Ramified;
    }
    if a.re == 0 || a.im == 0 {
        let p = a.re.unsigned_abs().max(a.im.unsigned_abs());
        if p % 4 == 3 && arith::is_prime(p) {
            return PrimeClass::Inert;
        }
    }
    if n % 4 == 1 && arith::is_prime(n as u128) {
        return PrimeClass::Split;
    }
    PrimeClass::Composite
}

pub fn is_gaussian_prime(a: GaussInt) -> bool {
    classify(a).is_prime()
}

/// Writes a rational prime `p = 1 mod 4` as `a^2 + b^2` with `a` odd and `b`
/// even. The pair is unique up to order and signs.
pub fn sum_two_squares(p: u64) -> Result<(u64, u64), PrimesError> {
    if !arith::is_prime(p as u128) {
        return Err(PrimesError::NotPrime(p));
    }
    if p % 4 != 1 {
        return Err(PrimesError::NotOneMod4(p));
    }
    let mut b = 1u64;
    while 2 * b * b <= p {
        let rest = p - b * b;
        let a = rest.isqrt();
        if a * a == rest {
            return if a % 2 == 1 { Ok((a, b)) } else { Ok((b, a)) };
        }
        b += 1;
    }
    unreachable!("every prime 1 mod 4 is a sum of two squares")
}

/// Factors `a` into canonical Gaussian primes: `a = unit * Π p_i^{e_i}` with
/// each `p_i` first-quadrant canonical and the list sorted by
/// `(norm, re, im)`. Errors on zero.
pub fn factorize(a: GaussInt) -> Result<Factorization, PrimesError> {
    if a.is_zero() {
        return Err(PrimesError::ZeroInput);
    }
    let mut rest = a;
    let mut factors: Vec<(GaussInt, u32)> = Vec::new();

    let ramified = GaussInt::new(1, 1);
    let mut e = 0u32;
    while let Some(q) = rest.div_exact(ramified) {
        rest = q;
        e += 1;
    }
    if e > 0 {
        factors.push((ramified, e));
    }

    // the remaining norm is odd; factor it over the rational integers and
    // lift each rational prime
    for (p, _) in arith::factor(rest.norm() as u128) {
        if p % 4 == 3 {
            let inert = GaussInt::new(p as i128, 0);
            let mut e = 0u32;
            while let Some(q) = rest.div_exact(inert) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                factors.push((inert, e));
            }
        } else {
            let (x, y) = sum_two_squares(p as u64).expect("odd prime factor of a norm");
            for candidate in [GaussInt::new(x as i128, y as i128), GaussInt::new(x as i128, -(y as i128))] {
                let split = candidate.canonical().canonical;
                let mut e = 0u32;
                while let Some(q) = rest.div_exact(split) {
                    rest = q;
                    e += 1;
                }
                if e > 0 {
                    factors.push((split, e));
                }
            }
        }
    }

    debug_assert!(rest.is_unit(), "unfactored remainder {rest}");
    factors.sort_unstable_by_key(|&(p, _)| p.norm_key());
    Ok(Factorization { unit: rest, factors })
}
