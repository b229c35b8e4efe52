mod common;

use common::*;
use dprefix_core::newton::{HullShape, LatticePoint, NewtonPolygon};
use rand::seq::SliceRandom;
use rand::Rng;

fn random_support(r: &mut rand_chacha::ChaCha8Rng) -> Vec<LatticePoint> {
    let n = r.gen_range(1..=12);
    (0..n).map(|_| (r.gen_range(0..=20), r.gen_range(0..=20))).collect()
}

fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Strictly inside every edge's half-plane; vertices are counterclockwise.
fn brute_interior(vs: &[LatticePoint]) -> Vec<LatticePoint> {
    let (x0, x1) = (vs.iter().map(|v| v.0).min().unwrap(), vs.iter().map(|v| v.0).max().unwrap());
    let (y0, y1) = (vs.iter().map(|v| v.1).min().unwrap(), vs.iter().map(|v| v.1).max().unwrap());
    let mut out = Vec::new();
    for a in x0..=x1 {
        for b in y0..=y1 {
            let inside = (0..vs.len()).all(|i| cross(vs[i], vs[(i + 1) % vs.len()], (a, b)) > 0);
            if inside {
                out.push((a, b));
            }
        }
    }
    out
}

#[test]
fn picks_identity_and_brute_force_interior() {
    let mut r = rng(21);
    let mut polygons = 0;
    for _ in 0..500 {
        let support = random_support(&mut r);
        let poly = NewtonPolygon::from_support(support.clone()).unwrap();
        let (count, points) = poly.interior_lattice_points();
        assert_eq!(count as usize, points.len());
        if poly.shape() != HullShape::Polygon {
            assert_eq!(count, 0);
            continue;
        }
        polygons += 1;
        let b = poly.boundary_lattice_points() as i128;
        assert_eq!(poly.double_area(), 2 * count as i128 + b - 2, "{support:?}");
        let mut brute = brute_interior(poly.vertices());
        brute.sort();
        assert_eq!(points, brute, "{support:?}");
    }
    assert!(polygons > 300);
}

#[test]
fn hull_ignores_input_order() {
    let mut r = rng(22);
    for _ in 0..200 {
        let mut support = random_support(&mut r);
        let a = NewtonPolygon::from_support(support.clone()).unwrap();
        support.shuffle(&mut r);
        let b = NewtonPolygon::from_support(support).unwrap();
        assert_eq!(a.vertices(), b.vertices());
        assert_eq!(a.interior_lattice_points(), b.interior_lattice_points());
    }
}

#[test]
fn elliptic_family_has_one_interior_point() {
    let f = p("y^2 - x^3 - 2*x - 3");
    let poly = dprefix_core::newton::newton_polygon(&f, &var("x"), &var("y")).unwrap();
    assert_eq!(poly.interior_lattice_points(), (1, vec![(1, 1)]));
}
