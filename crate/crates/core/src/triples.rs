//! Pythagorean triples with Gaussian-integer components: generation from
//! coprime mixed-parity pairs, primitivity through norms, exhaustive
//! bounded enumeration, and the bounded Fermat-quartic search.

use std::collections::BTreeMap;
use std::fmt;

use crate::radicals::square_radical;
use crate::ring::{gcd, gcd3, GaussInt};

/// A candidate triple; nothing is assumed about it until the predicate
/// methods say so.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TripleZi {
    pub alpha: GaussInt,
    pub beta: GaussInt,
    pub gamma: GaussInt,
}

type ClassKey = ([(i128, i128, i128); 2], (i128, i128, i128));

impl TripleZi {
    pub fn new(alpha: GaussInt, beta: GaussInt, gamma: GaussInt) -> Self {
        TripleZi { alpha, beta, gamma }
    }

    pub fn is_pythagorean(&self) -> bool {
        self.alpha * self.alpha + self.beta * self.beta == self.gamma * self.gamma
    }

    /// True iff the only common divisors of the three components are units.
    pub fn is_primitive(&self) -> bool {
        match gcd3(self.alpha, self.beta, self.gamma) {
            Ok(g) => g.is_unit(),
            Err(_) => false,
        }
    }

    /// The gcd over the rational integers of the three norms, alongside
    /// Gaussian primitivity. `norm_gcd == 1` forces the flag; for
    /// Pythagorean triples the two are equivalent.
    pub fn norm_primitivity(&self) -> (i128, bool) {
        let ng = num_integer::gcd(
            num_integer::gcd(self.alpha.norm(), self.beta.norm()),
            self.gamma.norm(),
        );
        (ng, self.is_primitive())
    }

    /// Identity of the triple up to associates of each component and the
    /// order of the two legs.
    pub fn class_key(&self) -> ClassKey {
        let mut legs = [
            self.alpha.canonical().canonical.norm_key(),
            self.beta.canonical().canonical.norm_key(),
        ];
        legs.sort_unstable();
        (legs, self.gamma.canonical().canonical.norm_key())
    }
}

impl fmt::Display for TripleZi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

/// A pair `(lambda, mu)` that is coprime and of mixed parity, the exact
/// hypotheses of the generation formulas. Construction enforces both.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GeneratorPair {
    lambda: GaussInt,
    mu: GaussInt,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorError {
    NotCoprime,
    SameParity,
}

impl fmt::Display for GeneratorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorError::NotCoprime => write!(f, "lambda and mu must be coprime"),
            GeneratorError::SameParity => write!(f, "lambda and mu must differ in parity"),
        }
    }
}

impl std::error::Error for GeneratorError {}

impl GeneratorPair {
    pub fn new(lambda: GaussInt, mu: GaussInt) -> Result<Self, GeneratorError> {
        match gcd(lambda, mu) {
            Ok(g) if g.is_unit() => {}
            _ => return Err(GeneratorError::NotCoprime),
        }
        if lambda.parity() == mu.parity() {
            return Err(GeneratorError::SameParity);
        }
        Ok(GeneratorPair { lambda, mu })
    }

    pub fn lambda(&self) -> GaussInt {
        self.lambda
    }

    pub fn mu(&self) -> GaussInt {
        self.mu
    }
}

/// `(2*lambda*mu, lambda^2 - mu^2, lambda^2 + mu^2)`: always Pythagorean and
/// primitive under the [`GeneratorPair`] hypotheses.
pub fn gen_primitive_triple(g: &GeneratorPair) -> TripleZi {
    let two = GaussInt::new(2, 0);
    let (l2, m2) = (g.lambda * g.lambda, g.mu * g.mu);
    let t = TripleZi::new(two * g.lambda * g.mu, l2 - m2, l2 + m2);
    debug_assert!(t.is_pythagorean());
    t
}

/// All Pythagorean triples whose components are nonzero with norms at most
/// `norm_bound`, one representative per class (components up to associates,
/// legs unordered), sorted by class key.
pub fn enumerate_pythagorean_triples(norm_bound: i128, primitive_only: bool) -> Vec<TripleZi> {
    let mut elements = Vec::new();
    if norm_bound >= 1 {
        let r = (norm_bound as u128).isqrt() as i128;
        for re in -r..=r {
            for im in -r..=r {
                let a = GaussInt::new(re, im);
                if !a.is_zero() && a.norm() <= norm_bound {
                    elements.push(a);
                }
            }
        }
    }
    elements.sort_unstable_by_key(|a| a.norm_key());

    let mut classes: BTreeMap<ClassKey, TripleZi> = BTreeMap::new();
    for (i, &alpha) in elements.iter().enumerate() {
        for &beta in &elements[i..] {
            let s = alpha * alpha + beta * beta;
            if s.is_zero() {
                continue;
            }
            let roots = square_radical(s).solutions;
            let Some(&gamma) = roots.first() else {
                continue;
            };
            if gamma.norm() > norm_bound {
                continue;
            }
            let t = TripleZi::new(alpha, beta, gamma);
            if primitive_only && !t.is_primitive() {
                continue;
            }
            classes.entry(t.class_key()).or_insert(t);
        }
    }
    classes.into_values().collect()
}

/// Exhaustive scan for `x^4 + y^4 = z^4` with all coordinates bounded by
/// `coord_bound` and `xyz != 0`. Expected (and so far observed) empty.
pub fn fermat_quartic_search(coord_bound: i128) -> Vec<(GaussInt, GaussInt, GaussInt)> {
    assert!(coord_bound >= 1, "coordinate bound must be positive");
    let b = coord_bound;
    let in_box = |a: GaussInt| a.re.abs() <= b && a.im.abs() <= b;
    let mut out = Vec::new();
    for xre in -b..=b {
        for xim in -b..=b {
            let x = GaussInt::new(xre, xim);
            if x.is_zero() {
                continue;
            }
            let x4 = x * x * x * x;
            for yre in -b..=b {
                for yim in -b..=b {
                    let y = GaussInt::new(yre, yim);
                    if y.is_zero() {
                        continue;
                    }
                    let s = x4 + y * y * y * y;
                    if s.is_zero() {
                        continue;
                    }
                    for w in square_radical(s).solutions {
                        for z in square_radical(w).solutions {
                            if !z.is_zero() && in_box(z) && z * z * z * z == s {
                                out.push((x, y, z));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Verifies `norm(k^2 + t^2) = norm(k)^2 + norm(t)^2 + 2*Re((k*conj(t))^2)`,
/// the expansion that drives the quartic argument. Holds identically.
pub fn norm_sum_identity_check(kappa: GaussInt, tau: GaussInt) -> bool {
    let lhs = (kappa * kappa + tau * tau).norm();
    let w = kappa * tau.conj();
    let rhs = kappa.norm() * kappa.norm() + tau.norm() * tau.norm() + 2 * (w * w).re;
    lhs == rhs
}
