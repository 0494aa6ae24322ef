//! Plain-integer helpers used throughout the crate: perfect-square tests,
//! trial-division primality and factoring, and a smallest-prime-factor sieve
//! for bulk counting runs.

/// Returns `Some(r)` with `r * r == n` and `r >= 0`, or `None` if `n` is not
/// a perfect square.
pub fn perfect_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = (n as u128).isqrt() as i128;
    (r * r == n).then_some(r)
}

pub fn is_perfect_square(n: i128) -> bool {
    perfect_sqrt(n).is_some()
}

/// Primality by trial division. Fine for the magnitudes handled here.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u128;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization `n = Π p_i^{e_i}` with the primes ascending.
/// Returns an empty list for `n <= 1`.
pub fn factor(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u128, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    for p in [2u128, 3] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        push(p, e);
    }
    let mut d = 5u128;
    while d * d <= n {
        for p in [d, d + 2] {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            push(p, e);
        }
        d += 6;
    }
    if n > 1 {
        push(n, 1);
    }
    out
}

/// All positive divisors of `n`, ascending. `n >= 1`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of n >= 1 only");
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Smallest-prime-factor table for every integer up to `limit`, so that a
/// whole range can be factored in near-linear total time.
pub struct SpfSieve {
    spf: Vec<u32>,
}

impl SpfSieve {
    pub fn new(limit: u64) -> Self {
        let limit = limit as usize;
        let mut spf = vec![0u32; limit + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=limit {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            for &p in &primes {
                let ip = i * p as usize;
                if p > spf[i] || ip > limit {
                    break;
                }
                spf[ip] = p;
            }
        }
        SpfSieve { spf }
    }

    /// Factorization of `n` (ascending primes); `n` must be within the sieve.
    pub fn factor(&self, mut n: u64) -> Vec<(u64, u32)> {
        assert!((n as usize) < self.spf.len(), "n outside sieve range");
        let mut out: Vec<(u64, u32)> = Vec::new();
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        out
    }
}
