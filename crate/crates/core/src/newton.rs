//! Newton polygons of bivariate polynomials and their interior lattice
//! points.
//!
//! For a polynomial whose coefficients are generic for its support, the
//! number of lattice points strictly inside the Newton polygon equals the
//! genus of the curve it defines. This module only does the combinatorics;
//! whether a particular polynomial attains that count is decided elsewhere.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};

pub type LatticePoint = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullShape {
    Point,
    Segment,
    Polygon,
}

/// An edge of the hull, traversed counter-clockwise. `inner_normal` is the
/// primitive normal pointing into the polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub start: LatticePoint,
    pub end: LatticePoint,
    pub inner_normal: (i64, i64),
}

impl Edge {
    fn new(start: LatticePoint, end: LatticePoint) -> Self {
        let (dx, dy) = (end.0 - start.0, end.1 - start.1);
        let g = dx.gcd(&dy).max(1);
        Edge { start, end, inner_normal: (-dy / g, dx / g) }
    }

    /// Number of lattice steps from `start` to `end`.
    pub fn lattice_length(&self) -> i64 {
        (self.end.0 - self.start.0).gcd(&(self.end.1 - self.start.1))
    }

    /// Primitive step vector along the edge.
    pub fn step(&self) -> (i64, i64) {
        let g = self.lattice_length().max(1);
        ((self.end.0 - self.start.0) / g, (self.end.1 - self.start.1) / g)
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        cross(self.start, self.end, p) == 0
            && within(self.start.0, self.end.0, p.0)
            && within(self.start.1, self.end.1, p.1)
    }
}

fn within(a: i64, b: i64, t: i64) -> bool {
    a.min(b) <= t && t <= a.max(b)
}

/// Twice the signed area of the triangle `o, a, b`.
fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    support: BTreeSet<LatticePoint>,
    vertices: Vec<LatticePoint>,
    edges: Vec<Edge>,
    shape: HullShape,
}

impl NewtonPolygon {
    /// Convex hull of a nonempty point set (Andrew's monotone chain; points
    /// in the relative interior of an edge are not vertices).
    pub fn from_support<I: IntoIterator<Item = LatticePoint>>(points: I) -> Result<Self> {
        let support: BTreeSet<LatticePoint> = points.into_iter().collect();
        if support.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        let pts: Vec<LatticePoint> = support.iter().copied().collect();
        let vertices = if pts.len() == 1 {
            pts.clone()
        } else {
            let mut lower: Vec<LatticePoint> = Vec::new();
            for &p in &pts {
                while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
                    lower.pop();
                }
                lower.push(p);
            }
            let mut upper: Vec<LatticePoint> = Vec::new();
            for &p in pts.iter().rev() {
                while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
                    upper.pop();
                }
                upper.push(p);
            }
            lower.pop();
            upper.pop();
            lower.extend(upper);
            lower
        };
        let (shape, edges) = match vertices.len() {
            1 => (HullShape::Point, Vec::new()),
            2 => (HullShape::Segment, vec![Edge::new(vertices[0], vertices[1])]),
            n => (
                HullShape::Polygon,
                (0..n).map(|i| Edge::new(vertices[i], vertices[(i + 1) % n])).collect(),
            ),
        };
        Ok(NewtonPolygon { support, vertices, edges, shape })
    }

    pub fn support(&self) -> &BTreeSet<LatticePoint> {
        &self.support
    }

    /// Hull vertices, counter-clockwise from the lexicographically least.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn shape(&self) -> HullShape {
        self.shape
    }

    pub fn is_degenerate(&self) -> bool {
        self.shape != HullShape::Polygon
    }

    /// Twice the enclosed area (shoelace formula).
    pub fn double_area(&self) -> i128 {
        if self.is_degenerate() {
            return 0;
        }
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
                a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
            })
            .sum()
    }

    /// Lattice points on the boundary of the hull.
    pub fn boundary_lattice_points(&self) -> i64 {
        match self.shape {
            HullShape::Point => 1,
            HullShape::Segment => self.edges[0].lattice_length() + 1,
            HullShape::Polygon => self.edges.iter().map(Edge::lattice_length).sum(),
        }
    }

    /// Lattice points strictly inside the hull, sorted. Degenerate hulls
    /// have none.
    pub fn interior_lattice_points(&self) -> (u64, Vec<LatticePoint>) {
        if self.is_degenerate() {
            return (0, Vec::new());
        }
        let ymin = self.vertices.iter().map(|v| v.1).min().unwrap();
        let ymax = self.vertices.iter().map(|v| v.1).max().unwrap();
        let mut points = Vec::new();
        for y in ymin + 1..ymax {
            if let Some((lo, hi)) = self.row_interior(y) {
                points.extend((lo..=hi).map(|x| (x, y)));
            }
        }
        points.sort();
        (points.len() as u64, points)
    }

    /// Integer range of x with (x, y) strictly inside, from the edge
    /// half-planes `cross(start, end, p) > 0`.
    fn row_interior(&self, y: i64) -> Option<(i64, i64)> {
        let (mut lo, mut hi) = (i128::MIN, i128::MAX);
        for e in &self.edges {
            let (dx, dy) = ((e.end.0 - e.start.0) as i128, (e.end.1 - e.start.1) as i128);
            // dx*(y - ay) - dy*(x - ax) > 0  <=>  dy*x < dx*(y - ay) + dy*ax
            let r = dx * (y - e.start.1) as i128 + dy * e.start.0 as i128;
            match dy.signum() {
                0 => {
                    if r <= 0 {
                        return None;
                    }
                }
                1 => hi = hi.min(Integer::div_floor(&(r - 1), &dy)),
                _ => lo = lo.max(Integer::div_floor(&-r, &-dy) + 1),
            }
        }
        (lo <= hi).then_some((lo as i64, hi as i64))
    }
}

/// Newton polygon of `f` in the variables `(xv, yv)`; any other variables
/// are coefficient symbols.
pub fn newton_polygon(f: &Poly, xv: &Var, yv: &Var) -> Result<NewtonPolygon> {
    let vars = [xv.clone(), yv.clone()];
    NewtonPolygon::from_support(
        f.coefficients_in(&vars)
            .keys()
            .map(|e| (e[0] as i64, e[1] as i64)),
    )
}

/// The part of `f` supported on each edge of its Newton polygon.
pub fn face_polynomials(f: &Poly, polygon: &NewtonPolygon, xv: &Var, yv: &Var) -> Vec<(Edge, Poly)> {
    polygon
        .edges()
        .iter()
        .map(|e| {
            let face = f.filter_terms(|m| e.contains((m.exponent(xv) as i64, m.exponent(yv) as i64)));
            (*e, face)
        })
        .collect()
}
