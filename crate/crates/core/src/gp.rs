//! Gauss-Pythagorean integers: elements `x+iy` with `x, y != 0` whose norm
//! is a perfect square, so that `(|x|, |y|, z)` is a Pythagorean triple.
//! The set is closed under multiplication, contains no Gaussian primes, and
//! carries its own notion of primality.

use std::fmt;

use crate::arith::perfect_sqrt;
use crate::primes::factorize;
use crate::ring::GaussInt;

/// Evidence that an element is Gauss-Pythagorean: `re^2 + im^2 = z^2`.
/// `primitive` means the coordinates are coprime over the rational integers,
/// in which case `z` is a sum of two squares and `tau` holds one Gaussian
/// integer of norm `z`. For imprimitive elements `tau` is present only when
/// such a representation exists at all (it can fail: norm 225 with z = 15).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GpWitness {
    pub element: GaussInt,
    pub z: i128,
    pub primitive: bool,
    pub tau: Option<GaussInt>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GpError {
    NotGaussPythagorean(GaussInt),
}

impl fmt::Display for GpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GpError::NotGaussPythagorean(a) => write!(f, "{a} is not Gauss-Pythagorean"),
        }
    }
}

impl std::error::Error for GpError {}

/// Membership test: `Some(witness)` iff both coordinates are nonzero and the
/// norm is a perfect square.
pub fn is_gp(a: GaussInt) -> Option<GpWitness> {
    if a.re == 0 || a.im == 0 {
        return None;
    }
    let z = perfect_sqrt(a.norm())?;
    let primitive = num_integer::gcd(a.re, a.im) == 1;
    let tau = two_square_rep(z);
    debug_assert!(!primitive || tau.is_some());
    Some(GpWitness {
        element: a,
        z,
        primitive,
        tau,
    })
}

/// One `p + iq` with `p^2 + q^2 = z`, largest component first, or `None`
/// when `z` is not a sum of two squares.
fn two_square_rep(z: i128) -> Option<GaussInt> {
    let mut q = 0i128;
    while 2 * q * q <= z {
        if let Some(p) = perfect_sqrt(z - q * q) {
            return Some(GaussInt::new(p, q));
        }
        q += 1;
    }
    None
}

/// The integer square root of the norm together with the `tau` witness; see
/// [`GpWitness`]. Errors when the element is not Gauss-Pythagorean.
pub fn gp_norm_root(a: GaussInt) -> Result<(i128, Option<GaussInt>), GpError> {
    let w = is_gp(a).ok_or(GpError::NotGaussPythagorean(a))?;
    Ok((w.z, w.tau))
}

/// True when `a` admits no factorization `a = b * c` with both factors
/// Gauss-Pythagorean. Membership is invariant under associates, so checking
/// one representative per divisor class of `a` is exhaustive.
pub fn is_gp_prime(a: GaussInt) -> Result<bool, GpError> {
    let _ = is_gp(a).ok_or(GpError::NotGaussPythagorean(a))?;
    let f = factorize(a).expect("GP elements are nonzero");
    let n = a.norm();
    for b in f.divisor_representatives() {
        let bn = b.norm();
        if bn == 1 || bn == n {
            continue;
        }
        let c = a.div_exact(b).expect("divisor representative");
        if is_gp(b).is_some() && is_gp(c).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a rational prime `p = t^2 + s^2 = 1 mod 4` (with `t > s`), the
/// element `(t+is)^2`: Gauss-Pythagorean of norm `p^2`, GP-prime, and
/// distinct for distinct `p`.
pub fn gp_prime_from_rational_prime(p: u64) -> Result<GaussInt, crate::primes::PrimesError> {
    let (a, b) = crate::primes::sum_two_squares(p)?;
    let (t, s) = (a.max(b) as i128, a.min(b) as i128);
    let tau = GaussInt::new(t, s);
    Ok(tau * tau)
}

/// All Gauss-Pythagorean elements with norm up to `norm_bound`, ordered by
/// `(norm, re, im)`.
pub fn gp_stream(norm_bound: i128) -> Vec<GpWitness> {
    let mut out = Vec::new();
    if norm_bound < 2 {
        return out;
    }
    let r = (norm_bound as u128).isqrt() as i128;
    for re in -r..=r {
        for im in -r..=r {
            let a = GaussInt::new(re, im);
            if a.norm() <= norm_bound {
                if let Some(w) = is_gp(a) {
                    out.push(w);
                }
            }
        }
    }
    out.sort_unstable_by_key(|w| w.element.norm_key());
    out
}
