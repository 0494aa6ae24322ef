//! The ring of Gaussian integers `a + bi` with exact `i128` coordinates:
//! norms, units and associates, canonical representatives, Euclidean
//! division, greatest common divisors, and parity.
//!
//! Values parse from and print to the compact form `a+bi` (`7`, `-i`,
//! `3-12i`, ...). Coordinates are capped at `MAX_COORD` on parse so that any
//! single product or norm stays inside `i128`; arithmetic itself is compiled
//! with overflow checks and aborts rather than wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest coordinate magnitude accepted by the parser (`2^62`).
pub const MAX_COORD: i128 = 1 << 62;

/// A Gaussian integer `re + im*i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct GaussInt {
    pub re: i128,
    pub im: i128,
}

/// Parity of a Gaussian integer: even means divisible by `1+i`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Result of normalizing an element to its canonical associate:
/// `canonical == unit * original`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CanonicalForm {
    pub canonical: GaussInt,
    pub unit: GaussInt,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RingError {
    DivisionByZero,
    GcdOfZero,
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::DivisionByZero => write!(f, "division by zero"),
            RingError::GcdOfZero => write!(f, "gcd of all-zero arguments"),
        }
    }
}

impl std::error::Error for RingError {}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParseGaussError {
    Empty,
    Malformed,
    TooLarge,
}

impl fmt::Display for ParseGaussError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseGaussError::Empty => write!(f, "empty input"),
            ParseGaussError::Malformed => {
                write!(f, "expected a Gaussian integer like `3`, `-i` or `3-12i`")
            }
            ParseGaussError::TooLarge => {
                write!(f, "coordinate exceeds the supported magnitude 2^62")
            }
        }
    }
}

impl std::error::Error for ParseGaussError {}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt::new(0, 0);
    pub const ONE: GaussInt = GaussInt::new(1, 0);
    pub const I: GaussInt = GaussInt::new(0, 1);

    /// The four units of the ring: `1, -1, i, -i`.
    pub const UNITS: [GaussInt; 4] = [
        GaussInt::new(1, 0),
        GaussInt::new(-1, 0),
        GaussInt::new(0, 1),
        GaussInt::new(0, -1),
    ];

    pub const fn new(re: i128, im: i128) -> Self {
        GaussInt { re, im }
    }

    pub const fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// `norm(a+bi) = a^2 + b^2`, multiplicative and nonnegative.
    pub const fn norm(self) -> i128 {
        self.re * self.re + self.im * self.im
    }

    pub const fn conj(self) -> Self {
        GaussInt::new(self.re, -self.im)
    }

    pub const fn is_unit(self) -> bool {
        self.norm() == 1
    }

    /// Multiplication by `i`, a quarter turn.
    pub const fn times_i(self) -> Self {
        GaussInt::new(-self.im, self.re)
    }

    /// The four associates `x, ix, -x, -ix` in that order.
    pub fn associates(self) -> [GaussInt; 4] {
        [self, self.times_i(), -self, -self.times_i()]
    }

    /// The unique associate lying in the first quadrant (`re > 0`, `im >= 0`),
    /// together with the unit that moves `self` there. Zero maps to itself.
    pub fn canonical(self) -> CanonicalForm {
        if self.is_zero() {
            return CanonicalForm {
                canonical: GaussInt::ZERO,
                unit: GaussInt::ONE,
            };
        }
        for unit in GaussInt::UNITS {
            let c = self * unit;
            if c.re > 0 && c.im >= 0 {
                return CanonicalForm { canonical: c, unit };
            }
        }
        unreachable!("every nonzero element has a first-quadrant associate")
    }

    /// Euclidean division: `self = q * rhs + r` with
    /// `norm(r) <= norm(rhs) / 2`. The quotient is the nearest lattice point
    /// to the exact ratio, ties rounded toward `+inf` in each coordinate.
    pub fn divmod(self, rhs: GaussInt) -> Result<(GaussInt, GaussInt), RingError> {
        if rhs.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let n = rhs.norm();
        let t = self * rhs.conj();
        let q = GaussInt::new(round_div(t.re, n), round_div(t.im, n));
        let r = self - q * rhs;
        Ok((q, r))
    }

    /// `Some(self / rhs)` when the division is exact.
    pub fn div_exact(self, rhs: GaussInt) -> Option<GaussInt> {
        let (q, r) = self.divmod(rhs).ok()?;
        r.is_zero().then_some(q)
    }

    /// True when `self` divides `rhs` exactly. Zero divides only zero.
    pub fn divides(self, rhs: GaussInt) -> bool {
        if self.is_zero() {
            return rhs.is_zero();
        }
        rhs.div_exact(self).is_some()
    }

    pub fn parity(self) -> Parity {
        if (self.re + self.im) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Residue modulo `1+i`: `0` for even elements, `1` for odd ones.
    pub fn residue_mod_one_plus_i(self) -> u8 {
        match self.parity() {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    /// Sort key ordering by norm first, then coordinates; used wherever
    /// deterministic listings are produced.
    pub fn norm_key(self) -> (i128, i128, i128) {
        (self.norm(), self.re, self.im)
    }
}

/// Nearest integer to `a / n` for `n > 0`, ties toward `+inf`.
fn round_div(a: i128, n: i128) -> i128 {
    (2 * a + n).div_euclid(2 * n)
}

/// Greatest common divisor up to associates, returned in canonical form.
/// Errors when both arguments are zero.
pub fn gcd(a: GaussInt, b: GaussInt) -> Result<GaussInt, RingError> {
    finish_gcd(gcd_raw(a, b))
}

/// Three-argument gcd; errors only when all three arguments are zero.
pub fn gcd3(a: GaussInt, b: GaussInt, c: GaussInt) -> Result<GaussInt, RingError> {
    finish_gcd(gcd_raw(gcd_raw(a, b), c))
}

fn gcd_raw(mut a: GaussInt, mut b: GaussInt) -> GaussInt {
    while !b.is_zero() {
        let (_, r) = a.divmod(b).expect("divisor is nonzero");
        a = b;
        b = r;
    }
    a
}

fn finish_gcd(g: GaussInt) -> Result<GaussInt, RingError> {
    if g.is_zero() {
        Err(RingError::GcdOfZero)
    } else {
        Ok(g.canonical().canonical)
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imag(f: &mut fmt::Formatter<'_>, im: i128, explicit_plus: bool) -> fmt::Result {
            match im {
                1 => {
                    if explicit_plus {
                        f.write_str("+")?;
                    }
                    f.write_str("i")
                }
                -1 => f.write_str("-i"),
                _ => {
                    if explicit_plus && im > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{im}i")
                }
            }
        }
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => imag(f, im, false),
            (re, im) => {
                write!(f, "{re}")?;
                imag(f, im, true)
            }
        }
    }
}

impl FromStr for GaussInt {
    type Err = ParseGaussError;

    fn from_str(s: &str) -> Result<Self, ParseGaussError> {
        let b = s.trim().as_bytes();
        if b.is_empty() {
            return Err(ParseGaussError::Empty);
        }
        let mut pos = 0usize;
        let (first, first_imag) = scan_term(b, &mut pos, false)?;
        if pos == b.len() {
            return if first_imag {
                Ok(GaussInt::new(0, first))
            } else {
                Ok(GaussInt::new(first, 0))
            };
        }
        let (second, second_imag) = scan_term(b, &mut pos, true)?;
        if pos != b.len() || first_imag || !second_imag {
            return Err(ParseGaussError::Malformed);
        }
        Ok(GaussInt::new(first, second))
    }
}

/// One signed term of the grammar: `sign? digits? 'i'?`, where the digits may
/// be omitted only in an imaginary term (`i` counts as `1i`).
fn scan_term(b: &[u8], pos: &mut usize, sign_required: bool) -> Result<(i128, bool), ParseGaussError> {
    let mut sign = 1i128;
    match b.get(*pos) {
        Some(b'+') => *pos += 1,
        Some(b'-') => {
            sign = -1;
            *pos += 1;
        }
        _ if sign_required => return Err(ParseGaussError::Malformed),
        _ => {}
    }
    let digits_start = *pos;
    while matches!(b.get(*pos), Some(c) if c.is_ascii_digit()) {
        *pos += 1;
    }
    let digits = &b[digits_start..*pos];
    let imag = matches!(b.get(*pos), Some(b'i'));
    if imag {
        *pos += 1;
    }
    let magnitude = if digits.is_empty() {
        if !imag {
            return Err(ParseGaussError::Malformed);
        }
        1
    } else {
        let text = std::str::from_utf8(digits).expect("ascii digits");
        text.parse::<i128>().map_err(|_| ParseGaussError::TooLarge)?
    };
    if magnitude > MAX_COORD {
        return Err(ParseGaussError::TooLarge);
    }
    Ok((sign * magnitude, imag))
}

impl Serialize for GaussInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}: `{s}`")))
    }
}
