//! Resultants and discriminants.
//!
//! The resultant is the determinant of the Sylvester matrix with the rows of
//! the first argument on top and coefficients listed from the highest degree
//! down. With this convention `Res_y(y - x, y + x) = 2x` and
//! `Res_y(y^2 - x, y) = -x`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Poly, UniPoly, Var};
use crate::error::{Error, Result};

/// Resultant of `f` and `g` with respect to `var`. Both must have positive
/// degree in `var`.
pub fn resultant(f: &Poly, g: &Poly, var: &Var) -> Result<Poly> {
    if f.degree_in(var) == 0 || g.degree_in(var) == 0 {
        return Err(Error::DegreeZero(var.to_string()));
    }
    Ok(resultant_general(f, g, var))
}

/// Resultant extended to degree-zero arguments: `Res(c, g) = c^deg(g)`,
/// `Res(f, c) = c^deg(f)`, `Res(c, d) = 1`, and zero if either input is zero.
pub fn resultant_general(f: &Poly, g: &Poly, var: &Var) -> Poly {
    if f.is_zero() || g.is_zero() {
        return Poly::zero();
    }
    let fv = f.univariate_view(var);
    let gv = g.univariate_view(var);
    let (m, n) = (fv.coeffs.len() - 1, gv.coeffs.len() - 1);
    match (m, n) {
        (0, 0) => return Poly::one(),
        (0, _) => return f.pow(n as u32),
        (_, 0) => return g.pow(m as u32),
        _ => {}
    }
    bareiss_determinant(sylvester(&fv.coeffs, &gv.coeffs))
}

/// Sylvester matrix from coefficient lists (lowest degree first), with the
/// rows of the first polynomial on top.
fn sylvester(fc: &[Poly], gc: &[Poly]) -> Vec<Vec<Poly>> {
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    let size = m + n;
    let mut rows = vec![vec![Poly::zero(); size]; size];
    for (i, row) in rows.iter_mut().take(n).enumerate() {
        for k in 0..=m {
            row[i + k] = fc[m - k].clone();
        }
    }
    for (j, row) in rows.iter_mut().skip(n).enumerate() {
        for k in 0..=n {
            row[j + k] = gc[n - k].clone();
        }
    }
    rows
}

/// The same value as [`resultant_general`], computed by evaluating the
/// other variables at integer points and interpolating. Much faster when
/// the coefficients involve parameters.
pub fn resultant_interpolated(f: &Poly, g: &Poly, var: &Var) -> Poly {
    if f.is_zero() || g.is_zero() {
        return Poly::zero();
    }
    let fv = f.univariate_view(var);
    let gv = g.univariate_view(var);
    let (m, n) = (fv.coeffs.len() - 1, gv.coeffs.len() - 1);
    match (m, n) {
        (0, 0) => Poly::one(),
        (0, _) => f.pow(n as u32),
        (_, 0) => g.pow(m as u32),
        _ => determinant_interpolated(&sylvester(&fv.coeffs, &gv.coeffs)),
    }
}

/// Determinant of a matrix of polynomials by evaluation and interpolation,
/// one variable at a time. Rows are first scaled to integer coefficients.
pub(crate) fn determinant_interpolated(a: &[Vec<Poly>]) -> Poly {
    let mut scale = BigInt::one();
    let rows: Vec<Vec<Poly>> = a
        .iter()
        .map(|r| {
            let den = r.iter().fold(BigInt::one(), |acc, e| acc.lcm(&e.denominator_lcm()));
            let f = BigRational::from_integer(den.clone());
            scale *= den;
            r.iter().map(|e| e.scale(&f)).collect()
        })
        .collect();
    integral_determinant(&rows).scale(&BigRational::new(BigInt::one(), scale))
}

/// Degree bound in `w` for the determinant: the smaller of the row-wise and
/// column-wise sums of maximal entry degrees.
fn degree_bound(a: &[Vec<Poly>], w: &Var) -> i64 {
    let row: u32 = a.iter().map(|r| r.iter().map(|e| e.degree_in(w)).max().unwrap_or(0)).sum();
    let col: u32 = (0..a.len())
        .map(|j| a.iter().map(|r| r[j].degree_in(w)).max().unwrap_or(0))
        .sum();
    row.min(col) as i64
}

fn integral_determinant(a: &[Vec<Poly>]) -> Poly {
    let mut vars: Vec<Var> = a.iter().flatten().flat_map(|e| e.variables()).collect();
    vars.sort();
    vars.dedup();
    let Some(w) = vars.last().cloned() else {
        let m = a
            .iter()
            .map(|r| r.iter().map(|e| e.constant_value().unwrap_or_default().to_integer()).collect())
            .collect();
        return Poly::constant(BigRational::from_integer(bareiss_integer(m)));
    };
    let bound = degree_bound(a, &w);
    if vars.len() == 1 {
        // Last variable: dense integer evaluation and scalar interpolation.
        let dense: Vec<Vec<Vec<BigInt>>> = a
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| {
                        let u = e.to_univariate(&w).expect("single variable");
                        u.coeffs().iter().map(|c| c.to_integer()).collect()
                    })
                    .collect()
            })
            .collect();
        let values: Vec<BigRational> = (0..=bound)
            .map(|k| {
                let at = BigInt::from(k);
                let m = dense
                    .iter()
                    .map(|r| r.iter().map(|c| c.iter().rev().fold(BigInt::zero(), |acc, t| acc * &at + t)).collect())
                    .collect();
                BigRational::from_integer(bareiss_integer(m))
            })
            .collect();
        return Poly::from_univariate(&newton_interpolate_scalar(values), &w);
    }
    let values: Vec<Poly> = (0..=bound)
        .map(|k| {
            let at = BigRational::from_integer(k.into());
            let sub: Vec<Vec<Poly>> = a
                .iter()
                .map(|r| r.iter().map(|e| e.evaluate_at(&w, &at)).collect())
                .collect();
            integral_determinant(&sub)
        })
        .collect();
    newton_interpolate(values, &w)
}

/// Dense version of [`newton_interpolate`] for scalar values.
fn newton_interpolate_scalar(mut dd: Vec<BigRational>) -> UniPoly {
    let n = dd.len();
    for j in 1..n {
        for k in (j..n).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / BigRational::from_integer((j as i64).into());
        }
    }
    let mut acc = UniPoly::new(Vec::new());
    for j in (0..n).rev() {
        let shift = UniPoly::new(vec![BigRational::from_integer((-(j as i64)).into()), BigRational::one()]);
        acc = acc.mul(&shift).add(&UniPoly::new(vec![dd[j].clone()]));
    }
    acc
}

/// The polynomial in `w` of degree below `values.len()` taking `values[k]`
/// at `w = k`.
fn newton_interpolate(mut dd: Vec<Poly>, w: &Var) -> Poly {
    let n = dd.len();
    for j in 1..n {
        let inv = BigRational::new(1.into(), (j as i64).into());
        for k in (j..n).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]).scale(&inv);
        }
    }
    let mut acc = Poly::zero();
    for j in (0..n).rev() {
        let shift = &Poly::var(w.clone()) - &Poly::int(j as i64);
        acc = &(&acc * &shift) + &dd[j];
    }
    acc
}

/// Integer Bareiss elimination.
fn bareiss_integer(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let size = m.len();
    if size == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..size - 1 {
        let Some(p) = (k..size).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Fraction-free determinant. Every division is exact.
pub(crate) fn bareiss_determinant(mut a: Vec<Vec<Poly>>) -> Poly {
    let size = a.len();
    if size == 0 {
        return Poly::one();
    }
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..size - 1 {
        let Some(p) = (k..size).find(|&r| !a[r][k].is_zero()) else {
            return Poly::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `Res_var(f, df/dvar)`, with no normalization by the leading coefficient.
pub fn discriminant(f: &Poly, var: &Var) -> Result<Poly> {
    if f.degree_in(var) < 2 {
        return Err(Error::DegreeTooLow(var.to_string()));
    }
    Ok(resultant_general(f, &f.derivative(var), var))
}
