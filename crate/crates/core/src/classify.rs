//! Points at infinity and a Siegel-type finiteness classifier for integral
//! points on plane curves `f(x, y) = 0`.
//!
//! The genus is bounded above by the number of interior lattice points of
//! the Newton polygon. When `f` is nondegenerate for its polygon (no edge
//! polynomial and not `f` itself has a singular zero with nonzero
//! coordinates) the bound is attained, which certifies a positive genus.
//! The curve is assumed absolutely irreducible.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::newton::{newton_polygon, NewtonPolygon};
use crate::poly::{gcd, resultant_general, Monomial, Poly, UniPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfinityPoint {
    /// The point `(1 : slope : 0)`.
    Rational { slope: BigRational },
    /// The points `(1 : t : 0)` for the `count` distinct roots of the
    /// polynomial in `t`, none of them rational.
    Algebraic { polynomial: Poly, count: usize },
    /// The point `(0 : 1 : 0)`.
    Vertical,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfinityReport {
    pub leading_form: Poly,
    pub distinct_points: usize,
    pub points: Vec<InfinityPoint>,
}

fn xy() -> (Var, Var) {
    (Var::new("x"), Var::new("y"))
}

/// Distinct points at infinity over the complex numbers: the zeros of the
/// top-degree form on the projective line.
pub fn points_at_infinity(f: &Poly) -> Result<InfinityReport> {
    let (x, y) = xy();
    f.check_variables(&[x.clone(), y.clone()])?;
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let d = f.total_degree();
    let leading_form = f.homogeneous_part(&[x.clone(), y.clone()], d);
    let t = Var::new("t");
    // F(1, t): the chart containing every point except (0 : 1 : 0).
    let h = leading_form
        .evaluate_at(&x, &BigRational::from_integer(1.into()))
        .to_univariate(&y)?;
    let sq = h.squarefree();
    let mut points: Vec<InfinityPoint> = Vec::new();
    let mut rest = sq.clone();
    for slope in sq.rational_roots() {
        rest = rest.div_rem(&UniPoly::new(vec![-slope.clone(), BigRational::from_integer(1.into())])).0;
        points.push(InfinityPoint::Rational { slope });
    }
    if let Some(n) = rest.degree().filter(|&n| n > 0) {
        points.push(InfinityPoint::Algebraic {
            polynomial: Poly::from_univariate(&rest, &t).integer_normalize().1,
            count: n,
        });
    }
    if h.degree().unwrap_or(0) < d as usize {
        points.push(InfinityPoint::Vertical);
    }
    let distinct_points = sq.degree().unwrap_or(0) + usize::from(h.degree().unwrap_or(0) < d as usize);
    Ok(InfinityReport { leading_form, distinct_points, points })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SiegelValue {
    FinitelyMany,
    PossiblyInfinite,
    Inconclusive,
}

impl SiegelValue {
    pub fn as_str(self) -> &'static str {
        match self {
            SiegelValue::FinitelyMany => "FinitelyMany",
            SiegelValue::PossiblyInfinite => "PossiblyInfinite",
            SiegelValue::Inconclusive => "Inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiegelClassification {
    pub value: SiegelValue,
    pub genus_upper_bound: u64,
    pub infinity_count: usize,
    pub nondegenerate: bool,
}

pub fn classify_siegel(f: &Poly) -> Result<SiegelClassification> {
    let (x, y) = xy();
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let infinity_count = points_at_infinity(f)?.distinct_points;
    let polygon = newton_polygon(f, &x, &y)?;
    let genus_upper_bound = polygon.interior_lattice_points().0;
    let nondegenerate = is_nondegenerate(f, &polygon);
    let value = if infinity_count >= 3 {
        SiegelValue::FinitelyMany
    } else if genus_upper_bound == 0 {
        SiegelValue::PossiblyInfinite
    } else if nondegenerate {
        SiegelValue::FinitelyMany
    } else {
        SiegelValue::Inconclusive
    };
    Ok(SiegelClassification { value, genus_upper_bound, infinity_count, nondegenerate })
}

/// The polynomial `sum_j c_j t^j` whose coefficients are read off `f` at the
/// lattice points `start + j * step` of the edge.
fn edge_polynomial(f: &Poly, start: (i64, i64), step: (i64, i64), len: i64) -> UniPoly {
    let (x, y) = xy();
    UniPoly::new(
        (0..=len)
            .map(|j| {
                let (a, b) = (start.0 + j * step.0, start.1 + j * step.1);
                f.coefficient(&Monomial::from_pairs([(x.clone(), a as u32), (y.clone(), b as u32)]))
            })
            .collect(),
    )
}

/// One-sided test: `true` certifies that no edge polynomial and not `f`
/// itself has a singular zero in the torus `x y != 0`.
pub fn is_nondegenerate(f: &Poly, polygon: &NewtonPolygon) -> bool {
    let (x, y) = xy();
    if polygon.is_degenerate() {
        return false;
    }
    for e in polygon.edges() {
        let h = edge_polynomial(f, e.start, e.step(), e.lattice_length());
        if h.gcd(&h.derivative()).degree() != Some(0) {
            return false;
        }
    }
    let r1 = resultant_general(f, &f.derivative(&x), &x);
    let r2 = resultant_general(f, &f.derivative(&y), &x);
    if r1.is_zero() || r2.is_zero() {
        return false;
    }
    let mut g = gcd(&r1, &r2);
    let yp = Poly::var(y.clone());
    while let Some(q) = g.div_exact(&yp).filter(|_| g.coefficient(&Monomial::one()).is_zero()) {
        g = q;
    }
    g.is_constant()
}

/// Whether the classifier's genus estimate for `a1 y^2 + a2 + a3 x + a4 x^3`
/// degenerates to zero: either the polygon has no interior point or the
/// nondegeneracy certificate fails.
pub fn genus_zero_condition_probe(a: [i64; 4]) -> bool {
    let (x, y) = xy();
    let c = |k: i64| Poly::int(k);
    let f = &(&(&c(a[0]) * &Poly::var(y.clone()).pow(2)) + &c(a[1]))
        + &(&(&c(a[2]) * &Poly::var(x.clone())) + &(&c(a[3]) * &Poly::var(x.clone()).pow(3)));
    if f.is_zero() {
        return true;
    }
    let polygon = newton_polygon(&f, &x, &y).expect("nonzero");
    polygon.interior_lattice_points().0 == 0 || !is_nondegenerate(&f, &polygon)
}
