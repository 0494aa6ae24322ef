//! Python bindings: a `GaussInt` class plus module-level functions covering
//! arithmetic, primes, square roots, the Gauss-Pythagorean set, triples,
//! lattice figures, and the census counters. Lattice points cross the
//! boundary as `(x, y)` tuples and errors surface as `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use gaussfig::figures::{self, Figure, LatticePoint};
use gaussfig::ring::GaussInt as CoreGauss;
use gaussfig::{census, gp, primes, radicals, ring, triples};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn point(p: (i64, i64)) -> LatticePoint {
    LatticePoint::new(p.0, p.1)
}

fn pair(p: LatticePoint) -> (i64, i64) {
    (p.x, p.y)
}

fn figure(vertices: Vec<(i64, i64)>) -> PyResult<Figure> {
    Figure::new(vertices.into_iter().map(point).collect()).map_err(value_err)
}

/// A Gaussian integer `re + im*i`. Immutable and hashable.
#[pyclass(name = "GaussInt", frozen, eq, from_py_object)]
#[derive(Clone, Copy, PartialEq)]
struct GaussInt(CoreGauss);

#[pymethods]
impl GaussInt {
    #[new]
    fn new(re: i128, im: i128) -> Self {
        GaussInt(CoreGauss::new(re, im))
    }

    /// Parses the `a+bi` text form, signs optional on either part.
    #[staticmethod]
    fn parse(s: &str) -> PyResult<Self> {
        s.parse().map(GaussInt).map_err(value_err)
    }

    #[getter]
    fn re(&self) -> i128 {
        self.0.re
    }

    #[getter]
    fn im(&self) -> i128 {
        self.0.im
    }

    fn norm(&self) -> i128 {
        self.0.norm()
    }

    fn conj(&self) -> Self {
        GaussInt(self.0.conj())
    }

    /// `"even"` or `"odd"`, even meaning divisible by `1+i`.
    fn parity(&self) -> String {
        self.0.parity().to_string()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_unit(&self) -> bool {
        self.0.is_unit()
    }

    /// The canonical associate and the unit carrying this element onto it.
    fn canonical(&self) -> (Self, Self) {
        let c = self.0.canonical();
        (GaussInt(c.canonical), GaussInt(c.unit))
    }

    fn associates(&self) -> Vec<Self> {
        self.0.associates().into_iter().map(GaussInt).collect()
    }

    fn __add__(&self, other: &Self) -> Self {
        GaussInt(self.0 + other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        GaussInt(self.0 - other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        GaussInt(self.0 * other.0)
    }

    fn __neg__(&self) -> Self {
        GaussInt(CoreGauss::ZERO - self.0)
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        (self.0.re, self.0.im).hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GaussInt({}, {})", self.0.re, self.0.im)
    }
}

/// Greatest common divisor, canonical associate.
#[pyfunction]
fn gauss_gcd(a: &GaussInt, b: &GaussInt) -> PyResult<GaussInt> {
    ring::gcd(a.0, b.0).map(GaussInt).map_err(value_err)
}

/// Three-operand gcd, canonical associate.
#[pyfunction]
fn gauss_gcd3(a: &GaussInt, b: &GaussInt, c: &GaussInt) -> PyResult<GaussInt> {
    ring::gcd3(a.0, b.0, c.0).map(GaussInt).map_err(value_err)
}

/// Euclidean quotient and remainder with `norm(r) <= norm(b)/2`.
#[pyfunction]
fn gauss_divmod(a: &GaussInt, b: &GaussInt) -> PyResult<(GaussInt, GaussInt)> {
    let (q, r) = a.0.divmod(b.0).map_err(value_err)?;
    Ok((GaussInt(q), GaussInt(r)))
}

/// `"zero"`, `"unit"`, `"ramified"`, `"inert"`, `"split"`, or `"composite"`.
#[pyfunction]
fn classify(a: &GaussInt) -> String {
    primes::classify(a.0).to_string()
}

#[pyfunction]
fn is_gaussian_prime(a: &GaussInt) -> bool {
    primes::is_gaussian_prime(a.0)
}

/// Factorization as `(unit, [(prime, exponent), ...])`.
#[pyfunction]
fn factorize(a: &GaussInt) -> PyResult<(GaussInt, Vec<(GaussInt, u32)>)> {
    let f = primes::factorize(a.0).map_err(value_err)?;
    let factors = f.factors.into_iter().map(|(p, e)| (GaussInt(p), e)).collect();
    Ok((GaussInt(f.unit), factors))
}

/// Writes a rational prime `p = 1 (mod 4)` as `a^2 + b^2` with `a` odd.
#[pyfunction]
fn sum_two_squares(p: u64) -> PyResult<(u64, u64)> {
    primes::sum_two_squares(p).map_err(value_err)
}

/// Both square roots of `a`, or an empty list when `a` is not a square.
#[pyfunction]
fn square_roots(a: &GaussInt) -> Vec<GaussInt> {
    radicals::square_radical(a.0)
        .solutions
        .into_iter()
        .map(GaussInt)
        .collect()
}

/// Gauss-Pythagorean witness `(z, primitive, tau)`, or `None`.
#[pyfunction]
fn gp_witness(a: &GaussInt) -> Option<(i128, bool, Option<GaussInt>)> {
    gp::is_gp(a.0).map(|w| (w.z, w.primitive, w.tau.map(GaussInt)))
}

#[pyfunction]
fn is_gp_prime(a: &GaussInt) -> PyResult<bool> {
    gp::is_gp_prime(a.0).map_err(value_err)
}

/// The canonical Gauss-Pythagorean prime above a rational prime `p = 1 (mod 4)`.
#[pyfunction]
fn gp_prime_family(p: u64) -> PyResult<GaussInt> {
    gp::gp_prime_from_rational_prime(p).map(GaussInt).map_err(value_err)
}

/// All Gauss-Pythagorean elements with norm at most `norm_bound`.
#[pyfunction]
fn gp_elements(norm_bound: i128) -> Vec<GaussInt> {
    gp::gp_stream(norm_bound)
        .into_iter()
        .map(|w| GaussInt(w.element))
        .collect()
}

/// Primitive Pythagorean triple from a coprime mixed-parity pair.
#[pyfunction]
fn make_triple(lam: &GaussInt, mu: &GaussInt) -> PyResult<(GaussInt, GaussInt, GaussInt)> {
    let pair = triples::GeneratorPair::new(lam.0, mu.0).map_err(value_err)?;
    let t = triples::gen_primitive_triple(&pair);
    Ok((GaussInt(t.alpha), GaussInt(t.beta), GaussInt(t.gamma)))
}

#[pyfunction]
fn is_pythagorean(a: &GaussInt, b: &GaussInt, c: &GaussInt) -> bool {
    triples::TripleZi::new(a.0, b.0, c.0).is_pythagorean()
}

/// Integer gcd of the three norms alongside Gaussian primitivity.
#[pyfunction]
fn norm_primitivity(a: &GaussInt, b: &GaussInt, c: &GaussInt) -> (i128, bool) {
    triples::TripleZi::new(a.0, b.0, c.0).norm_primitivity()
}

/// One representative per triple class with all component norms bounded.
#[pyfunction]
#[pyo3(signature = (norm_bound, primitive_only = true))]
fn enumerate_triples(
    norm_bound: i128,
    primitive_only: bool,
) -> Vec<(GaussInt, GaussInt, GaussInt)> {
    triples::enumerate_pythagorean_triples(norm_bound, primitive_only)
        .into_iter()
        .map(|t| (GaussInt(t.alpha), GaussInt(t.beta), GaussInt(t.gamma)))
        .collect()
}

/// Searches `x^4 + y^4 = z^4` with nonzero coordinates bounded by `coord_bound`.
#[pyfunction]
fn fermat_quartic_search(coord_bound: i128) -> Vec<(GaussInt, GaussInt, GaussInt)> {
    triples::fermat_quartic_search(coord_bound)
        .into_iter()
        .map(|(x, y, z)| (GaussInt(x), GaussInt(y), GaussInt(z)))
        .collect()
}

/// First vertex pair at non-integer distance, or `None` when diophantine.
#[pyfunction]
fn diophantine_violation(
    vertices: Vec<(i64, i64)>,
) -> PyResult<Option<((i64, i64), (i64, i64))>> {
    let f = figure(vertices)?;
    Ok(f.is_diophantine().violation.map(|(p, q)| (pair(p), pair(q))))
}

/// Total edge length along a closed vertex-index path.
#[pyfunction]
fn closed_path_length(vertices: Vec<(i64, i64)>, path: Vec<usize>) -> PyResult<i64> {
    figure(vertices)?.closed_path_length(&path).map_err(value_err)
}

/// Classifies a lattice triangle by its enveloping rectangle.
#[pyfunction]
fn classify_triangle<'py>(
    py: Python<'py>,
    a: (i64, i64),
    b: (i64, i64),
    c: (i64, i64),
) -> PyResult<Bound<'py, PyDict>> {
    let cls = figures::classify_triangle(point(a), point(b), point(c)).map_err(value_err)?;
    let complements: Vec<((i64, i64), i64)> =
        cls.complements.iter().map(|c| (c.legs, c.hypotenuse)).collect();
    let d = PyDict::new(py);
    d.set_item("class", cls.class.to_string())?;
    d.set_item("complements", complements)?;
    d.set_item("right_angled", cls.right_angled)?;
    Ok(d)
}

/// Builds a one-corner triangle from the four-parameter construction.
#[pyfunction]
fn type4_construct<'py>(
    py: Python<'py>,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
) -> PyResult<Bound<'py, PyDict>> {
    let t = figures::type4_construct(a, b, c, d).map_err(value_err)?;
    let out = PyDict::new(py);
    out.set_item("vertices", t.vertices.map(pair).to_vec())?;
    out.set_item("sides", t.sides.to_vec())?;
    Ok(out)
}

/// Integer points completing a triangle with the given side lengths.
#[pyfunction]
fn complete_triangle(
    b_vertex: (i64, i64),
    a: i64,
    b: i64,
    c: i64,
) -> PyResult<Vec<(i64, i64)>> {
    let points = figures::complete_triangle(point(b_vertex), a, b, c).map_err(value_err)?;
    Ok(points.into_iter().map(pair).collect())
}

/// Points within `radius` of the figure's box at integer distance from
/// every vertex.
#[pyfunction]
fn erdos_extend(vertices: Vec<(i64, i64)>, radius: i64) -> PyResult<Vec<(i64, i64)>> {
    let f = figure(vertices)?;
    Ok(figures::erdos_extend(&f, radius).into_iter().map(pair).collect())
}

/// The diophantine fan over leg `n`: origin, apex, and one vertex per
/// cathetus partner.
#[pyfunction]
fn cathetus_fan(n: i64) -> Vec<(i64, i64)> {
    figures::cathetus_fan(n).vertices().iter().copied().map(pair).collect()
}

/// Right triangles with leg `n`; the closed form unless `brute` is set.
#[pyfunction]
#[pyo3(signature = (n, brute = false))]
fn kappa(n: u64, brute: bool) -> u64 {
    if brute || n == 0 {
        census::kappa_bruteforce(n)
    } else {
        census::kappa_via_formula(n)
    }
}

/// Divisors of `d` congruent to 1 modulo 4 minus those congruent to 3.
#[pyfunction]
fn eta(d: u64) -> u64 {
    census::eta(d)
}

/// Divisor count of `n`.
#[pyfunction]
fn delta(n: u64) -> u64 {
    census::delta(n)
}

/// Right triangles with hypotenuse `l`; closed form unless `brute` is set.
#[pyfunction]
#[pyo3(signature = (l, brute = false))]
fn chi(l: u64, brute: bool) -> u64 {
    if brute {
        census::chi_bruteforce(l)
    } else {
        census::chi(l)
    }
}

/// The census table for `n_from..=n_to` in CSV form.
#[pyfunction]
fn census_csv(n_from: u64, n_to: u64) -> PyResult<String> {
    let (rows, _) = census::census_range(n_from, n_to).map_err(value_err)?;
    Ok(census::census_csv(&rows))
}

/// Range maxima, their locations, and per-decade statistics.
#[pyfunction]
fn census_summary<'py>(py: Python<'py>, n_from: u64, n_to: u64) -> PyResult<Bound<'py, PyDict>> {
    let (_, s) = census::census_range(n_from, n_to).map_err(value_err)?;
    let d = PyDict::new(py);
    d.set_item("max_ratio_half", s.max_ratio_half)?;
    d.set_item("max_ratio_half_at", s.max_ratio_half_at)?;
    d.set_item("max_kappa_over_n", s.max_kappa_over_n)?;
    d.set_item("max_kappa_over_n_at", s.max_kappa_over_n_at)?;
    d.set_item("record_in_top_decade", s.record_in_top_decade)?;
    let decades: Vec<(u64, u64, f64, f64)> = s
        .decades
        .iter()
        .map(|t| (t.lo, t.hi, t.max_ratio_half, t.max_kappa_over_n))
        .collect();
    d.set_item("decades", decades)?;
    Ok(d)
}

#[pymodule]
fn gaussfig_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<GaussInt>()?;
    m.add_function(wrap_pyfunction!(gauss_gcd, m)?)?;
    m.add_function(wrap_pyfunction!(gauss_gcd3, m)?)?;
    m.add_function(wrap_pyfunction!(gauss_divmod, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(is_gaussian_prime, m)?)?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(sum_two_squares, m)?)?;
    m.add_function(wrap_pyfunction!(square_roots, m)?)?;
    m.add_function(wrap_pyfunction!(gp_witness, m)?)?;
    m.add_function(wrap_pyfunction!(is_gp_prime, m)?)?;
    m.add_function(wrap_pyfunction!(gp_prime_family, m)?)?;
    m.add_function(wrap_pyfunction!(gp_elements, m)?)?;
    m.add_function(wrap_pyfunction!(make_triple, m)?)?;
    m.add_function(wrap_pyfunction!(is_pythagorean, m)?)?;
    m.add_function(wrap_pyfunction!(norm_primitivity, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_triples, m)?)?;
    m.add_function(wrap_pyfunction!(fermat_quartic_search, m)?)?;
    m.add_function(wrap_pyfunction!(diophantine_violation, m)?)?;
    m.add_function(wrap_pyfunction!(closed_path_length, m)?)?;
    m.add_function(wrap_pyfunction!(classify_triangle, m)?)?;
    m.add_function(wrap_pyfunction!(type4_construct, m)?)?;
    m.add_function(wrap_pyfunction!(complete_triangle, m)?)?;
    m.add_function(wrap_pyfunction!(erdos_extend, m)?)?;
    m.add_function(wrap_pyfunction!(cathetus_fan, m)?)?;
    m.add_function(wrap_pyfunction!(kappa, m)?)?;
    m.add_function(wrap_pyfunction!(eta, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(chi, m)?)?;
    m.add_function(wrap_pyfunction!(census_csv, m)?)?;
    m.add_function(wrap_pyfunction!(census_summary, m)?)?;
    Ok(())
}
