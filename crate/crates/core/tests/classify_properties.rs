mod common;

use common::*;
use dprefix_core::classify::{classify_siegel, genus_zero_condition_probe, points_at_infinity, SiegelValue};
use dprefix_core::poly::gcd;
use dprefix_core::search::{growth_probe, Domain};
use dprefix_core::Poly;
use rand::seq::SliceRandom;
use rand::Rng;

const DIRECTIONS: [(i64, i64); 9] = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (3, -1), (1, -3), (2, -3)];
const QUADRATICS: [&str; 4] = ["x^2 + y^2", "x^2 - 2*y^2", "x^2 + x*y + y^2", "x^2 + 3*y^2"];

/// Distinct projective zeros of a binary form: the degree of `F / gcd(F, F_x, F_y)`.
fn squarefree_degree(form: &Poly) -> u32 {
    let (x, y) = (var("x"), var("y"));
    let g = gcd(&gcd(form, &form.derivative(&x)), &form.derivative(&y));
    form.div_exact(&g).unwrap().total_degree()
}

#[test]
fn infinity_count_matches_planted_factors() {
    let mut r = rng(61);
    let xy = [var("x"), var("y")];
    for _ in 0..300 {
        let mut form = Poly::one();
        let mut expected = 0;
        let mut dirs = DIRECTIONS.to_vec();
        dirs.shuffle(&mut r);
        let mut quads = QUADRATICS.to_vec();
        quads.shuffle(&mut r);
        while form.total_degree() < 8 && r.gen_bool(0.8) || form.total_degree() == 0 {
            let m = r.gen_range(1..=2);
            let room = 8 - form.total_degree();
            let factor = if r.gen_bool(0.3) && room >= 2 && !quads.is_empty() {
                expected += 2;
                p(quads.pop().unwrap())
            } else if let Some((a, b)) = dirs.pop() {
                expected += 1;
                &p("x").scale(&int(a)) + &p("y").scale(&int(b))
            } else {
                break;
            };
            let powered = factor.pow(m);
            if powered.total_degree() > room {
                form = &form * &factor;
            } else {
                form = &form * &powered;
            }
        }
        let d = form.total_degree();
        let lower = random_poly(&mut r, &xy, d - 1, 5, 9, 1);
        let f = &form.scale(&int(r.gen_range(1..=3))) + &lower;
        let report = points_at_infinity(&f).unwrap();
        assert_eq!(report.distinct_points, expected, "f = {f}");
        assert_eq!(squarefree_degree(&form) as usize, expected);
    }
}

const GENUS_ZERO: [&str; 11] = [
    "x + y - 7",
    "2*x - 3*y + 1",
    "x*y - 6",
    "x*y - 30",
    "y - x^2",
    "x - y^2 + 3",
    "y^2 - x^3",
    "y^3 - x^2",
    "y^2 - x^5",
    "y^3 - x^4",
    "x^2 - 2*y^2 - 1",
];

#[test]
fn genus_zero_fixtures_are_never_declared_finite() {
    for s in GENUS_ZERO {
        let c = classify_siegel(&p(s)).unwrap();
        assert_ne!(c.value, SiegelValue::FinitelyMany, "{s}: {c:?}");
        assert!(c.infinity_count <= 2, "{s}");
    }
}

#[test]
fn genus_zero_fixtures_have_growing_point_counts() {
    // `x y - c` has finitely many integral points; the rest keep growing.
    for s in GENUS_ZERO.iter().filter(|s| !s.starts_with("x*y")) {
        let counts = growth_probe(&p(s), Domain::AllIntegers, &[100, 10_000]).unwrap();
        assert!(counts[1].1 > counts[0].1 && counts[0].1 > 0, "{s}: {counts:?}");
    }
}

#[test]
fn probe_agrees_with_discriminant_formula() {
    let mut r = rng(62);
    let mut zeros = 0;
    for k in 0..200 {
        let mut a: [i64; 4] = std::array::from_fn(|_| r.gen_range(-20..=20));
        if k % 10 == 0 {
            // Force 4 a3^3 + 27 a2^2 a4 = 0 with a3 = -3 t^2, a2 = 2 t^3, a4 = 1.
            let t = r.gen_range(-2..=2);
            a = [a[0], 2 * t * t * t, -3 * t * t, 1];
        }
        let formula = a[0] * a[3] * (4 * a[2].pow(3) + 27 * a[1].pow(2) * a[3]) == 0;
        zeros += usize::from(formula);
        assert_eq!(genus_zero_condition_probe(a), formula, "{a:?}");
    }
    assert!(zeros >= 20);
}
