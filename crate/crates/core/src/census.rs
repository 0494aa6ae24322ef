//! Counting functions over rational Pythagorean triples: triangles with a
//! given leg or hypotenuse, their primitive refinements, divisor counts, and
//! bulk range scans with bound diagnostics.

use std::fmt;
use std::fmt::Write as _;

use crate::arith::{divisors, factor, SpfSieve};

/// One row of the census table for a single `n`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct CensusRow {
    pub n: u64,
    pub kappa: u64,
    pub eta_sum: u64,
    pub delta: u64,
    pub delta_sq: u64,
    pub ratio_half: f64,
    pub prachar_bound: f64,
}

/// Aggregates over a census range. `decades` splits the range at powers of
/// ten; `record_in_top_decade` reports whether the running maximum of
/// `ratio_half` still increased inside the top decade (at desk scale it
/// should not).
#[derive(Clone, PartialEq, Debug)]
pub struct CensusSummary {
    pub max_ratio_half: f64,
    pub max_ratio_half_at: u64,
    pub max_kappa_over_n: f64,
    pub max_kappa_over_n_at: u64,
    pub decades: Vec<DecadeStat>,
    pub record_in_top_decade: bool,
}

/// Per-decade maxima, decade = `[lo, hi]` clipped to the scanned range.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct DecadeStat {
    pub lo: u64,
    pub hi: u64,
    pub max_ratio_half: f64,
    pub max_kappa_over_n: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CensusError {
    EmptyRange,
}

impl fmt::Display for CensusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusError::EmptyRange => write!(f, "range must satisfy 1 <= from <= to"),
        }
    }
}

impl std::error::Error for CensusError {}

/// Number of right triangles with leg `n`: pairs `(x, z)` with
/// `x^2 + n^2 = z^2`, `x >= 1`. Scans factor pairs of `n^2 = (z-x)(z+x)`
/// with matching parity. `kappa(0) = 0` by definition.
pub fn kappa_bruteforce(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let n2 = (n as u128) * (n as u128);
    let mut count = 0;
    // factor pairs (d, e), d < e, d*e = n^2; x = (e-d)/2 needs d = e mod 2
    for d in 1..(n as u128) {
        if n2 % d == 0 && (n2 / d - d) % 2 == 0 {
            count += 1;
        }
    }
    count
}

/// Number of primitive triples having `d` as either leg.
pub fn eta(d: u64) -> u64 {
    assert!(d >= 1, "eta is defined for d >= 1");
    let d2 = (d as u128) * (d as u128);
    let mut count = 0;
    for e1 in 1..(d as u128) {
        if d2 % e1 == 0 {
            let e2 = d2 / e1;
            if (e2 - e1) % 2 == 0 {
                let u = ((e2 - e1) / 2) as u64;
                if num_integer::gcd(u, d) == 1 {
                    count += 1;
                }
            }
        }
    }
    count
}

/// `kappa(n)` as the divisor sum of `eta`; must equal the brute-force count.
pub fn kappa_via_formula(n: u64) -> u64 {
    assert!(n >= 1, "formula requires n >= 1");
    divisors(n).into_iter().map(eta).sum()
}

/// Number of divisors of `n`.
pub fn delta(n: u64) -> u64 {
    assert!(n >= 1, "delta is defined for n >= 1");
    factor(n as u128)
        .into_iter()
        .map(|(_, e)| e as u64 + 1)
        .product()
}

/// Number of right triangles with hypotenuse `l`: unordered pairs `{x, y}`
/// of positive legs with `x^2 + y^2 = l^2`. Closed form over the prime
/// factorization; see [`chi_bruteforce`] for the scan oracle.
pub fn chi(l: u64) -> u64 {
    assert!(l >= 1, "chi is defined for l >= 1");
    let reps: u64 = factor(l as u128)
        .into_iter()
        .filter(|&(p, _)| p % 4 == 1)
        .map(|(_, e)| 2 * e as u64 + 1)
        .product();
    (reps - 1) / 2
}

/// Direct scan oracle for [`chi`].
pub fn chi_bruteforce(l: u64) -> u64 {
    assert!(l >= 1, "chi is defined for l >= 1");
    let l2 = (l as u128) * (l as u128);
    let mut count = 0;
    let mut x = 1u128;
    while 2 * x * x < l2 {
        let rest = l2 - x * x;
        let y = rest.isqrt();
        if y * y == rest {
            count += 1;
        }
        x += 1;
    }
    count
}

/// Leg count from a prime factorization `n = 2^a * m`, `m` odd:
/// `(delta(m^2) - 1) / 2` for odd `n`, `((2a-1) * delta(m^2) - 1) / 2`
/// otherwise.
fn kappa_from_factors(factors: &[(u64, u32)]) -> u64 {
    let mut two_exp = 0u64;
    let mut odd_sq_divisors = 1u64;
    for &(p, e) in factors {
        if p == 2 {
            two_exp = e as u64;
        } else {
            odd_sq_divisors *= 2 * e as u64 + 1;
        }
    }
    if two_exp == 0 {
        (odd_sq_divisors - 1) / 2
    } else {
        ((2 * two_exp - 1) * odd_sq_divisors - 1) / 2
    }
}

/// Primitive leg count from a factorization: `0` for `1`, `2`, and
/// `d = 2 mod 4`; otherwise a power of two determined by the number of odd
/// prime divisors.
fn eta_from_factors(factors: &[(u64, u32)]) -> u64 {
    let two_exp = factors.iter().find(|&&(p, _)| p == 2).map_or(0, |&(_, e)| e);
    let odd_primes = factors.iter().filter(|&&(p, _)| p != 2).count() as u32;
    match two_exp {
        0 => {
            if odd_primes == 0 {
                0 // d = 1
            } else {
                1 << (odd_primes - 1)
            }
        }
        1 => 0,
        _ => 1 << odd_primes,
    }
}

fn delta_from_factors(factors: &[(u64, u32)]) -> u64 {
    factors.iter().map(|&(_, e)| e as u64 + 1).product()
}

/// The report-only divisor bound `exp(2 ln2 ln n / ln ln n)`, evaluated for
/// `n >= 100` only (the asymptotic regime); `NaN` below that.
pub fn prachar_bound(n: u64) -> f64 {
    if n < 100 {
        return f64::NAN;
    }
    let ln_n = (n as f64).ln();
    (2.0 * std::f64::consts::LN_2 * ln_n / ln_n.ln()).exp()
}

/// Builds one census row from a factorization of `n`.
fn row_from_factors(n: u64, factors: &[(u64, u32)]) -> CensusRow {
    let kappa = kappa_from_factors(factors);
    let mut eta_sum = 0u64;
    // every divisor's factorization is an exponent tuple below n's
    let mut stack: Vec<(usize, Vec<(u64, u32)>)> = vec![(0, Vec::new())];
    while let Some((idx, partial)) = stack.pop() {
        if idx == factors.len() {
            eta_sum += eta_from_factors(&partial);
            continue;
        }
        let (p, emax) = factors[idx];
        for e in 0..=emax {
            let mut next = partial.clone();
            if e > 0 {
                next.push((p, e));
            }
            stack.push((idx + 1, next));
        }
    }
    let delta = delta_from_factors(factors);
    CensusRow {
        n,
        kappa,
        eta_sum,
        delta,
        delta_sq: delta * delta,
        ratio_half: kappa as f64 / (n as f64).sqrt(),
        prachar_bound: prachar_bound(n),
    }
}

/// Census over `[n_from, n_to]`: one row per `n` plus range aggregates.
/// Rows are computed through a smallest-prime-factor sieve and closed-form
/// counts, so wide ranges stay cheap.
pub fn census_range(n_from: u64, n_to: u64) -> Result<(Vec<CensusRow>, CensusSummary), CensusError> {
    if n_from < 1 || n_from > n_to {
        return Err(CensusError::EmptyRange);
    }
    let sieve = SpfSieve::new(n_to);
    let mut rows = Vec::with_capacity((n_to - n_from + 1) as usize);
    for n in n_from..=n_to {
        rows.push(row_from_factors(n, &sieve.factor(n)));
    }
    let summary = summarize(&rows, n_from, n_to);
    Ok((rows, summary))
}

fn summarize(rows: &[CensusRow], n_from: u64, n_to: u64) -> CensusSummary {
    let best = |key: fn(&CensusRow) -> f64| -> (f64, u64) {
        let mut max = f64::MIN;
        let mut at = 0;
        for r in rows {
            let v = key(r);
            if v > max {
                max = v;
                at = r.n;
            }
        }
        (max, at)
    };
    let (max_ratio_half, max_ratio_half_at) = best(|r| r.ratio_half);
    let (max_kappa_over_n, max_kappa_over_n_at) = best(|r| r.kappa as f64 / r.n as f64);

    let mut decades = Vec::new();
    let mut lo = n_from;
    while lo <= n_to {
        let decade_cap = next_power_of_ten(lo).saturating_sub(1);
        let hi = decade_cap.min(n_to);
        let mut stat = DecadeStat {
            lo,
            hi,
            max_ratio_half: f64::MIN,
            max_kappa_over_n: f64::MIN,
        };
        for r in &rows[(lo - n_from) as usize..=(hi - n_from) as usize] {
            stat.max_ratio_half = stat.max_ratio_half.max(r.ratio_half);
            stat.max_kappa_over_n = stat.max_kappa_over_n.max(r.kappa as f64 / r.n as f64);
        }
        decades.push(stat);
        if hi == u64::MAX {
            break;
        }
        lo = hi + 1;
    }

    // does the running max of ratio_half gain a new record inside the top
    // decade of the range?
    let top_lo = (n_to / 10 + 1).max(n_from);
    let record_in_top_decade = if top_lo <= n_from {
        true // range too narrow to split; report conservatively
    } else {
        let before = rows[..(top_lo - n_from) as usize]
            .iter()
            .map(|r| r.ratio_half)
            .fold(f64::MIN, f64::max);
        rows[(top_lo - n_from) as usize..]
            .iter()
            .any(|r| r.ratio_half > before)
    };

    CensusSummary {
        max_ratio_half,
        max_ratio_half_at,
        max_kappa_over_n,
        max_kappa_over_n_at,
        decades,
        record_in_top_decade,
    }
}

fn next_power_of_ten(n: u64) -> u64 {
    let mut p = 1u64;
    while p <= n {
        match p.checked_mul(10) {
            Some(next) => p = next,
            None => return u64::MAX,
        }
    }
    p
}

/// Renders rows as CSV with the fixed header; counts exact, reals with six
/// decimals.
pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from("n,kappa,eta_sum,delta,delta_sq,ratio_half,prachar_bound\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{:.6},{:.6}",
            r.n, r.kappa, r.eta_sum, r.delta, r.delta_sq, r.ratio_half, r.prachar_bound
        )
        .expect("string write");
    }
    out
}
