//! Exact square roots in the ring: solve `z^2 = a` and report the
//! right-triangle data behind the solvable cases.

use std::fmt;

use crate::arith::perfect_sqrt;
use crate::ring::GaussInt;

/// Outcome of a square-root computation. `solutions` is empty when no root
/// exists and otherwise holds a pair `{z, -z}` (the lone root of zero is the
/// boundary case). `hypotenuse` is the integer `l` with `l^2 = norm(a)`
/// whenever that square root exists, whether or not `a` itself has a root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RadicalResult {
    pub solutions: Vec<GaussInt>,
    pub via_formula: bool,
    pub hypotenuse: Option<i128>,
}

/// The two real-form quantities `n+l` and `l-n` that appear when expanding
/// `sqrt(n+im)` by hand, with squareness flags. Report-only: integer
/// solvability goes through `(n+l)/2` instead, see [`square_radical`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DisplayParams {
    pub n_plus_l: i128,
    pub l_minus_n: i128,
    pub n_plus_l_is_square: bool,
    pub l_minus_n_is_square: bool,
    pub hypotenuse: i128,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RadicalError {
    NormNotSquare,
    ZeroImaginaryPart,
}

impl fmt::Display for RadicalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadicalError::NormNotSquare => write!(f, "n^2 + m^2 is not a perfect square"),
            RadicalError::ZeroImaginaryPart => write!(f, "imaginary part must be nonzero"),
        }
    }
}

impl std::error::Error for RadicalError {}

/// Solves `z^2 = a` exactly.
///
/// For `a = n + im` with `m != 0`, a root exists iff `l = sqrt(n^2 + m^2)`
/// is an integer, `(n+l)/2` is a perfect square `x^2`, and `2x` divides `m`;
/// the roots are then `x + iy` and its negative with `y = m/(2x)`. Pure real
/// inputs reduce to ordinary square roots (negative ones have pure-imaginary
/// roots).
pub fn square_radical(a: GaussInt) -> RadicalResult {
    let (n, m) = (a.re, a.im);
    if m == 0 {
        if n == 0 {
            return RadicalResult {
                solutions: vec![GaussInt::ZERO],
                via_formula: false,
                hypotenuse: None,
            };
        }
        let solutions = match perfect_sqrt(n.abs()) {
            Some(r) if n > 0 => vec![GaussInt::new(r, 0), GaussInt::new(-r, 0)],
            Some(r) => vec![GaussInt::new(0, r), GaussInt::new(0, -r)],
            None => Vec::new(),
        };
        return RadicalResult {
            solutions,
            via_formula: false,
            hypotenuse: Some(n.abs()),
        };
    }

    let Some(l) = perfect_sqrt(a.norm()) else {
        return RadicalResult {
            solutions: Vec::new(),
            via_formula: false,
            hypotenuse: None,
        };
    };
    let empty = RadicalResult {
        solutions: Vec::new(),
        via_formula: false,
        hypotenuse: Some(l),
    };
    // n + l is even iff n and l agree mod 2, which holds automatically when
    // (n+l)/2 is a perfect square; check divisibility first anyway
    if (n + l) % 2 != 0 {
        return empty;
    }
    let Some(x) = perfect_sqrt((n + l) / 2) else {
        return empty;
    };
    if x == 0 || m % (2 * x) != 0 {
        return empty;
    }
    let y = m / (2 * x);
    let z = GaussInt::new(x, y);
    debug_assert_eq!(z * z, a);
    RadicalResult {
        solutions: vec![z, -z],
        via_formula: true,
        hypotenuse: Some(l),
    }
}

/// The displayed real-form parameters for `sqrt(n+im)`, `m != 0`: requires
/// `n^2 + m^2 = l^2` and reports `n+l` and `l-n` with squareness flags.
pub fn radical_display_params(n: i128, m: i128) -> Result<DisplayParams, RadicalError> {
    if m == 0 {
        return Err(RadicalError::ZeroImaginaryPart);
    }
    let l = perfect_sqrt(n * n + m * m).ok_or(RadicalError::NormNotSquare)?;
    Ok(DisplayParams {
        n_plus_l: n + l,
        l_minus_n: l - n,
        n_plus_l_is_square: perfect_sqrt(n + l).is_some(),
        l_minus_n_is_square: perfect_sqrt(l - n).is_some(),
        hypotenuse: l,
    })
}
