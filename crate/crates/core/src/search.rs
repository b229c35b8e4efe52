//! Height-bounded enumeration of integral points on `f(x, y) = 0`.
//!
//! For each `x` in the box the univariate `f(x, y)` is solved exactly, so
//! the cost is linear in the height bound rather than quadratic.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// `1 <= x, y <= H`.
    PositiveIntegers,
    /// `|x|, |y| <= H`.
    AllIntegers,
}

impl Domain {
    pub fn as_str(self) -> &'static str {
        match self {
            Domain::PositiveIntegers => "positive-integers",
            Domain::AllIntegers => "all-integers",
        }
    }

    fn range(self, h: u64) -> (i64, i64) {
        let h = h as i64;
        match self {
            Domain::PositiveIntegers => (1, h),
            Domain::AllIntegers => (-h, h),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSearchReport {
    pub domain: Domain,
    pub height_bound: u64,
    /// Sorted lexicographically.
    pub points: Vec<(i64, i64)>,
    pub exact_card_bounded: u64,
    /// Largest coordinate magnitude among the points, 0 if there are none.
    pub big_bounded: u64,
    /// Some point lies on the boundary of the box.
    pub saturated: bool,
}

fn xy() -> (Var, Var) {
    (Var::new("x"), Var::new("y"))
}

fn rat(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

pub fn enumerate_points(f: &Poly, domain: Domain, height: u64) -> Result<PointSearchReport> {
    let (x, y) = xy();
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.check_variables(&[x.clone(), y.clone()])?;
    let (lo, hi) = domain.range(height);
    let mut points = BTreeSet::new();
    for a in lo..=hi {
        let u = f.evaluate_at(&x, &rat(a)).to_univariate(&y)?;
        if u.is_zero() {
            points.extend((lo..=hi).map(|b| (a, b)));
            continue;
        }
        let (blo, bhi) = (BigInt::from(lo), BigInt::from(hi));
        for b in u.integer_roots() {
            if b >= blo && b <= bhi {
                points.insert((a, b.to_i64().unwrap()));
            }
        }
    }
    let points: Vec<(i64, i64)> = points.into_iter().collect();
    let big_bounded = points
        .iter()
        .map(|&(a, b)| a.unsigned_abs().max(b.unsigned_abs()))
        .max()
        .unwrap_or(0);
    Ok(PointSearchReport {
        domain,
        height_bound: height,
        exact_card_bounded: points.len() as u64,
        big_bounded,
        saturated: big_bounded == height && !points.is_empty(),
        points,
    })
}

/// Checks `forall x in 1..=X exists y >= 1: P(x, y) = 0` exactly and returns
/// the least failing `x`, if any.
pub fn forall_exists_oracle(p: &Poly, bound_x: u64) -> Result<(bool, Option<u64>)> {
    let (x, y) = xy();
    if p.is_zero() {
        return Ok((true, None));
    }
    p.check_variables(&[x.clone(), y.clone()])?;
    for a in 1..=bound_x {
        let u = p.evaluate_at(&x, &rat(a as i64)).to_univariate(&y)?;
        let ok = u.is_zero() || u.integer_roots().iter().any(Signed::is_positive);
        if !ok {
            return Ok((false, Some(a)));
        }
    }
    Ok((true, None))
}

/// Point counts for each height bound, from one enumeration at the largest.
pub fn growth_probe(f: &Poly, domain: Domain, heights: &[u64]) -> Result<Vec<(u64, u64)>> {
    if heights.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidArgument("heights must be ascending".into()));
    }
    let Some(&top) = heights.last() else {
        return Ok(Vec::new());
    };
    let report = enumerate_points(f, domain, top)?;
    Ok(heights
        .iter()
        .map(|&h| {
            let n = report
                .points
                .iter()
                .filter(|&&(a, b)| a.unsigned_abs() <= h && b.unsigned_abs() <= h)
                .count();
            (h, n as u64)
        })
        .collect())
}
