//! Randomized and exhaustive cross-checks spanning the whole crate. Random
//! suites run on fixed seeds so failures reproduce exactly.

use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gaussfig::arith::{is_perfect_square, is_prime};
use gaussfig::census::census_range;
use gaussfig::figures::{
    classify_triangle, complete_triangle, dist2, erdos_extend, int_dist, Figure, LatticePoint,
    TriangleType,
};
use gaussfig::gp::{gp_prime_from_rational_prime, gp_stream, is_gp, is_gp_prime};
use gaussfig::primes::{classify, factorize, sum_two_squares, PrimeClass};
use gaussfig::radicals::square_radical;
use gaussfig::ring::{gcd, gcd3};
use gaussfig::triples::{
    fermat_quartic_search, gen_primitive_triple, norm_sum_identity_check, GeneratorPair, TripleZi,
};
use gaussfig::{GaussInt, Parity};

fn g(re: i128, im: i128) -> GaussInt {
    GaussInt::new(re, im)
}

/// A random element with both coordinates in `[-bound, bound]`.
fn random_elem(rng: &mut ChaCha8Rng, bound: i128) -> GaussInt {
    g(
        rng.random_range(-bound..=bound),
        rng.random_range(-bound..=bound),
    )
}

fn random_nonzero(rng: &mut ChaCha8Rng, bound: i128) -> GaussInt {
    loop {
        let a = random_elem(rng, bound);
        if !a.is_zero() {
            return a;
        }
    }
}

#[test]
fn divmod_contract_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let draw = |rng: &mut ChaCha8Rng| loop {
        let a = random_elem(rng, 100);
        if a.norm() <= 10_000 {
            return a;
        }
    };
    for _ in 0..50_000 {
        let a = draw(&mut rng);
        let b = loop {
            let b = draw(&mut rng);
            if !b.is_zero() {
                break b;
            }
        };
        let (q, r) = a.divmod(b).unwrap();
        assert_eq!(q * b + r, a, "a = {a}, b = {b}");
        assert!(2 * r.norm() <= b.norm(), "a = {a}, b = {b}, r = {r}");
    }
}

#[test]
fn gcd_soundness_against_divisor_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let draw = |rng: &mut ChaCha8Rng| loop {
        let a = random_elem(rng, 20);
        if a.norm() <= 400 {
            return a;
        }
    };
    for _ in 0..1_500 {
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let d = gcd(a, b).unwrap();
        assert!(d.divides(a) && d.divides(b), "a = {a}, b = {b}, d = {d}");
        for re in -20..=20 {
            for im in -20..=20 {
                let c = g(re, im);
                if c.is_zero() {
                    continue;
                }
                if c.divides(a) && c.divides(b) {
                    assert!(c.divides(d), "common divisor {c} of {a}, {b} misses {d}");
                }
            }
        }
    }
}

#[test]
fn parity_definitions_agree() {
    for re in -50i128..=50 {
        for im in -50..=50 {
            let a = g(re, im);
            let by_coords = (re + im).rem_euclid(2) == 0;
            let by_residue = a.residue_mod_one_plus_i() == 0;
            let by_norm = a.norm() % 2 == 0;
            let by_divisibility = g(1, 1).divides(a);
            let even = a.parity() == Parity::Even;
            assert_eq!(by_coords, even, "{a}");
            assert_eq!(by_residue, even, "{a}");
            assert_eq!(by_norm, even, "{a}");
            assert_eq!(by_divisibility, even, "{a}");
        }
    }
}

#[test]
fn parity_arithmetic_tables() {
    let grid: Vec<GaussInt> = (-20i128..=20)
        .flat_map(|re| (-20i128..=20).map(move |im| g(re, im)))
        .collect();
    for &a in &grid {
        for &b in &grid {
            let sum = match (a.parity(), b.parity()) {
                (Parity::Even, Parity::Even) | (Parity::Odd, Parity::Odd) => Parity::Even,
                _ => Parity::Odd,
            };
            assert_eq!((a + b).parity(), sum, "{a} + {b}");
            let product = match (a.parity(), b.parity()) {
                (Parity::Odd, Parity::Odd) => Parity::Odd,
                _ => Parity::Even,
            };
            assert_eq!((a * b).parity(), product, "{a} * {b}");
        }
    }
}

#[test]
fn squares_split_by_parity_mod_two_i() {
    let two_i = g(0, 2);
    for re in -20i128..=20 {
        for im in -20..=20 {
            let a = g(re, im);
            let sq = a * a;
            match a.parity() {
                Parity::Even => assert!(two_i.divides(sq), "{a}"),
                Parity::Odd => assert!(two_i.divides(sq - GaussInt::ONE), "{a}"),
            }
        }
    }
}

#[test]
fn norms_avoid_three_mod_four() {
    for re in -100i128..=100 {
        for im in -100..=100 {
            assert_ne!(g(re, im).norm() % 4, 3);
        }
    }
}

#[test]
fn factorize_roundtrip_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for _ in 0..1_000 {
        let a = random_nonzero(&mut rng, 7_000);
        assert!(a.norm() <= 100_000_000);
        let f = factorize(a).unwrap();
        assert!(f.unit.is_unit(), "{a}");
        assert_eq!(f.product(), a, "{a}");
        for &(p, e) in &f.factors {
            assert!(e >= 1);
            assert!(classify(p).is_prime(), "{a}: factor {p}");
            assert_eq!(p.canonical().canonical, p, "{a}: factor {p}");
        }
        for w in f.factors.windows(2) {
            assert!(w[0].0.norm_key() < w[1].0.norm_key(), "{a}");
        }
    }
}

#[test]
fn split_primes_come_in_non_associate_conjugate_pairs() {
    for p in (5..=10_000u64).step_by(4) {
        if !is_prime(p as u128) {
            continue;
        }
        let (a, b) = sum_two_squares(p).unwrap();
        let pi = g(a as i128, b as i128);
        let bar = pi.conj();
        assert_eq!(classify(pi), PrimeClass::Split, "p = {p}");
        assert_eq!(classify(bar), PrimeClass::Split, "p = {p}");
        assert_eq!(pi * bar, g(p as i128, 0));
        assert!(!pi.associates().contains(&bar), "p = {p}");
    }
}

#[test]
fn square_radical_roundtrip_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for _ in 0..500 {
        let z = random_nonzero(&mut rng, 500);
        let r = square_radical(z * z);
        let got: BTreeSet<(i128, i128)> = r.solutions.iter().map(|s| (s.re, s.im)).collect();
        let want: BTreeSet<(i128, i128)> = [(z.re, z.im), (-z.re, -z.im)].into_iter().collect();
        assert_eq!(got, want, "z = {z}");
    }
}

#[test]
fn gp_products_stay_gp() {
    let pool = gp_stream(250_000);
    assert!(pool.len() > 1_000);
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let mut kept = 0;
    let mut axis_products = 0;
    while kept < 500 {
        let a = pool[rng.random_range(0..pool.len())].element;
        let b = pool[rng.random_range(0..pool.len())].element;
        let prod = a * b;
        assert!(is_perfect_square(prod.norm()), "{a} * {b}");
        if prod.re == 0 || prod.im == 0 {
            // conjugate-like pairs collapse onto an axis and leave the set
            axis_products += 1;
            assert!(axis_products < 50, "axis products should be rare");
            continue;
        }
        assert!(is_gp(prod).is_some(), "{a} * {b} = {prod}");
        kept += 1;
    }
}

#[test]
fn gp_stream_witnesses_consistent() {
    let stream = gp_stream(40_000);
    assert!(!stream.is_empty());
    for w in &stream {
        assert!(w.z >= 1);
        assert_eq!(w.z * w.z, w.element.norm(), "{}", w.element);
        let p = num_integer::gcd(w.element.re.abs(), w.element.im.abs()) == 1;
        assert_eq!(w.primitive, p, "{}", w.element);
        if w.primitive {
            assert!(w.tau.is_some(), "{}", w.element);
        }
        if let Some(t) = w.tau {
            assert_eq!(t.norm(), w.z, "{}", w.element);
        }
    }
    for pair in stream.windows(2) {
        assert!(pair[0].element.norm_key() < pair[1].element.norm_key());
    }
}

#[test]
fn gp_prime_family_distinct() {
    let mut seen = HashSet::new();
    let mut count = 0;
    for p in (5..=1_000u64).step_by(4) {
        if !is_prime(p as u128) {
            continue;
        }
        let e = gp_prime_from_rational_prime(p).unwrap();
        assert_eq!(is_gp_prime(e), Ok(true), "p = {p}");
        assert!(seen.insert((e.re, e.im)), "p = {p} repeats {e}");
        count += 1;
    }
    assert!(count > 70);
}

#[test]
fn generator_pairs_yield_primitive_pythagorean_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let mut kept = 0;
    while kept < 200 {
        let lambda = random_nonzero(&mut rng, 10);
        let mu = random_nonzero(&mut rng, 10);
        if lambda.norm() > 100 || mu.norm() > 100 {
            continue;
        }
        let Ok(pair) = GeneratorPair::new(lambda, mu) else {
            continue;
        };
        let t = gen_primitive_triple(&pair);
        assert!(t.is_pythagorean(), "{t}");
        assert!(t.is_primitive(), "{t}");
        kept += 1;
    }
}

#[test]
fn coprime_norms_force_primitivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let mut kept = 0;
    while kept < 500 {
        let t = TripleZi::new(
            random_nonzero(&mut rng, 50),
            random_nonzero(&mut rng, 50),
            random_nonzero(&mut rng, 50),
        );
        if t.is_pythagorean() {
            continue;
        }
        kept += 1;
        let (norm_gcd, primitive) = t.norm_primitivity();
        if norm_gcd == 1 {
            assert!(primitive, "{t}");
            assert!(gcd3(t.alpha, t.beta, t.gamma).unwrap().is_unit(), "{t}");
        }
    }
}

#[test]
fn norm_sum_identity_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    for _ in 0..1_000 {
        let kappa = random_elem(&mut rng, 100);
        let tau = random_elem(&mut rng, 100);
        assert!(norm_sum_identity_check(kappa, tau), "{kappa}, {tau}");
    }
}

#[test]
fn quartic_search_empty_in_box_six() {
    assert!(fermat_quartic_search(6).is_empty());
}

#[test]
fn kappa_bounded_by_delta_squared() {
    let (rows, _) = census_range(1, 10_000).unwrap();
    for row in &rows {
        assert_eq!(row.kappa, row.eta_sum, "n = {}", row.n);
        assert!(row.kappa < row.delta_sq, "n = {}", row.n);
    }
}

#[test]
fn leg_count_record_stagnates_past_first_thousand() {
    let (_, summary) = census_range(1, 100_000).unwrap();
    assert_eq!(summary.max_ratio_half_at, 840);
    assert!(!summary.record_in_top_decade);
}

#[test]
fn triangle_scan_small_box() {
    let a = LatticePoint::new(0, 0);
    let mut checked = 0u64;
    for bx in -16i64..=16 {
        for by in -16i64..=16 {
            let b = LatticePoint::new(bx, by);
            if b == a || int_dist(a, b).is_none() {
                continue;
            }
            for cx in -16i64..=16 {
                for cy in -16i64..=16 {
                    let c = LatticePoint::new(cx, cy);
                    if c == a || c == b {
                        continue;
                    }
                    let (Some(ab), Some(bc), Some(ca)) =
                        (int_dist(a, b), int_dist(b, c), int_dist(c, a))
                    else {
                        continue;
                    };
                    let cross = (bx as i128) * (cy as i128) - (by as i128) * (cx as i128);
                    if cross == 0 {
                        continue;
                    }
                    checked += 1;
                    assert_eq!((ab + bc + ca) % 2, 0, "{b} {c}");

                    let class = classify_triangle(a, b, c).unwrap();
                    let expected_complements = match class.class {
                        TriangleType::Type1 => 1,
                        TriangleType::Type2 | TriangleType::Type3 => 2,
                        TriangleType::Type4 => 3,
                        TriangleType::Anomalous => panic!("anomalous: {b} {c}"),
                    };
                    assert_eq!(class.complements.len(), expected_complements, "{b} {c}");

                    let (lo, hi) = ([bx.min(cx).min(0), by.min(cy).min(0)], [
                        bx.max(cx).max(0),
                        by.max(cy).max(0),
                    ]);
                    let double_box =
                        2 * ((hi[0] - lo[0]) as i128) * ((hi[1] - lo[1]) as i128);
                    let mut covered = cross.abs();
                    for comp in &class.complements {
                        covered += (comp.legs.0 as i128) * (comp.legs.1 as i128);
                        assert!(
                            [ab, bc, ca].contains(&comp.hypotenuse),
                            "{b} {c}: complement {comp:?}"
                        );
                        assert_eq!(
                            (comp.legs.0 as i128).pow(2) + (comp.legs.1 as i128).pow(2),
                            (comp.hypotenuse as i128).pow(2)
                        );
                    }
                    assert_eq!(double_box, covered, "{b} {c}");
                }
            }
        }
    }
    assert_eq!(checked, 800);
}

#[test]
fn completion_points_satisfy_both_distances() {
    let origin = LatticePoint::new(0, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    let mut hits = 0u32;
    for round in 0..2_000u32 {
        let (b_vertex, a, b) = match round % 4 {
            // collinear instance, always solvable
            0 => {
                let c = rng.random_range(1..=40i64);
                let x = loop {
                    let x = rng.random_range(-40..=40i64);
                    if x != 0 && x != c {
                        break x;
                    }
                };
                (LatticePoint::new(c, 0), (x - c).abs(), x.abs())
            }
            // scaled right-triangle instance with a known off-axis solution
            1 => {
                let k = rng.random_range(1..=12i64);
                (LatticePoint::new(3 * k, 4 * k), 5 * k, 8 * k)
            }
            _ => {
                let k = rng.random_range(1..=3i64);
                let m = rng.random_range(2..=8i64);
                let n = rng.random_range(1..m);
                let mut leg = (k * (m * m - n * n), k * 2 * m * n);
                if rng.random::<bool>() {
                    leg = (leg.1, leg.0);
                }
                if rng.random::<bool>() {
                    leg.0 = -leg.0;
                }
                if rng.random::<bool>() {
                    leg.1 = -leg.1;
                }
                (
                    LatticePoint::new(leg.0, leg.1),
                    rng.random_range(1..=60i64),
                    rng.random_range(1..=60i64),
                )
            }
        };
        let c = int_dist(origin, b_vertex).expect("constructed with integer length");
        let points = complete_triangle(b_vertex, a, b, c).unwrap();
        if !points.is_empty() {
            hits += 1;
        }
        for x in points {
            assert_eq!(dist2(origin, x), (b as i128) * (b as i128), "{b_vertex} {a} {b}");
            assert_eq!(dist2(b_vertex, x), (a as i128) * (a as i128), "{b_vertex} {a} {b}");
            let lhs = 2 * (b_vertex.x as i128) * (x.x as i128)
                + 2 * (b_vertex.y as i128) * (x.y as i128);
            let rhs = (b as i128).pow(2) + (c as i128).pow(2) - (a as i128).pow(2);
            assert_eq!(lhs, rhs, "{b_vertex} {a} {b}");
        }
    }
    assert!(hits >= 1_000, "solvable instances: {hits}");
}

#[test]
fn extension_scan_commutes_with_lattice_symmetries() {
    let figures = [
        vec![(0i64, 0i64), (3, 0), (0, 4)],
        vec![(0, 0), (5, 0)],
        vec![(1, 2), (4, 6)],
    ];
    let maps: Vec<Box<dyn Fn((i64, i64)) -> (i64, i64)>> = vec![
        Box::new(|(x, y)| (x, y)),
        Box::new(|(x, y)| (-x, y)),
        Box::new(|(x, y)| (x, -y)),
        Box::new(|(x, y)| (-x, -y)),
        Box::new(|(x, y)| (y, x)),
        Box::new(|(x, y)| (-y, x)),
        Box::new(|(x, y)| (y, -x)),
        Box::new(|(x, y)| (-y, -x)),
        Box::new(|(x, y)| (x + 7, y - 3)),
        Box::new(|(x, y)| (-y + 7, x - 3)),
    ];
    for pts in &figures {
        let fig = Figure::new(
            pts.iter()
                .map(|&(x, y)| LatticePoint::new(x, y))
                .collect(),
        )
        .unwrap();
        let base: Vec<LatticePoint> = erdos_extend(&fig, 8);
        for t in &maps {
            let mapped_fig = Figure::new(
                pts.iter()
                    .map(|&(x, y)| {
                        let (mx, my) = t((x, y));
                        LatticePoint::new(mx, my)
                    })
                    .collect(),
            )
            .unwrap();
            let got: HashSet<(i64, i64)> = erdos_extend(&mapped_fig, 8)
                .into_iter()
                .map(|p| (p.x, p.y))
                .collect();
            let want: HashSet<(i64, i64)> =
                base.iter().map(|p| t((p.x, p.y))).collect();
            assert_eq!(got, want, "{pts:?}");
        }
    }
}

proptest! {
    #[test]
    fn display_parse_roundtrip(re in -(1i128 << 62)..=(1i128 << 62), im in -(1i128 << 62)..=(1i128 << 62)) {
        let a = GaussInt::new(re, im);
        prop_assert_eq!(a.to_string().parse::<GaussInt>().unwrap(), a);
    }

    #[test]
    fn parse_handles_arbitrary_input(s in "[-+0-9i ]{0,12}") {
        let _ = s.parse::<GaussInt>();
    }

    #[test]
    fn parse_accepts_signs_on_both_parts(re in -500i128..=500, im in -500i128..=500) {
        let s = format!("{re:+}{im:+}i");
        prop_assert_eq!(s.parse::<GaussInt>().unwrap(), GaussInt::new(re, im));
    }

    #[test]
    fn canonical_constant_on_associate_classes(re in -1_000i128..=1_000, im in -1_000i128..=1_000) {
        let a = GaussInt::new(re, im);
        let c = a.canonical();
        prop_assert_eq!(c.unit * a, c.canonical);
        prop_assert_eq!(c.canonical.canonical().canonical, c.canonical);
        for assoc in a.associates() {
            prop_assert_eq!(assoc.canonical().canonical, c.canonical);
        }
    }
}
