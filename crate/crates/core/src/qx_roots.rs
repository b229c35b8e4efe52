//! Roots of a bivariate polynomial `P(x, y)` in the ring `Q[x]`, i.e. the
//! polynomial branches `y = p(x)` with `P(x, p(x)) = 0`.
//!
//! The squarefree-in-`y` part `S` is specialized at the least integer anchor
//! `x = xi` where it keeps its `y`-degree and stays squarefree. Every rational
//! root of `S(xi, y)` is a simple root, so it lifts uniquely to a power series
//! in `t = x - xi`. A polynomial root has degree at most `deg_x P`, so lifting
//! to that precision and checking the truncation exactly finds all of them.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{gcd, Poly, UniPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QxRoot {
    /// A polynomial in `x` only.
    pub root: Poly,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QxRootsResult {
    pub roots: Vec<QxRoot>,
    /// `P / prod (y - root)^multiplicity`.
    pub cofactor: Poly,
}

impl QxRootsResult {
    /// `cofactor * prod (y - root)^multiplicity`.
    pub fn reconstruct(&self, y: &Var) -> Poly {
        self.roots.iter().fold(self.cofactor.clone(), |acc, r| {
            &acc * &(&Poly::var(y.clone()) - &r.root).pow(r.multiplicity)
        })
    }
}

pub fn roots_in_qx(p: &Poly, x: &Var, y: &Var) -> Result<QxRootsResult> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.variables().iter().any(|v| v != x && v != y) {
        return Err(Error::NotBivariate(format!("`{x}` and `{y}`")));
    }
    if p.degree_in(y) == 0 {
        return Err(Error::DegreeZero(y.to_string()));
    }
    let s = p
        .div_exact(&gcd(p, &p.derivative(y)))
        .expect("gcd divides")
        .integer_normalize()
        .1;
    let dy = s.degree_in(y) as usize;
    let (xi, anchored) = anchor(&s, x, y, dy);
    let shifted = s.substitute(x, &(&Poly::var(x.clone()) + &Poly::constant(xi.clone())));
    let coeffs: Vec<UniPoly> = shifted
        .univariate_view(y)
        .coeffs
        .iter()
        .map(|c| c.to_univariate(x).expect("only x remains"))
        .collect();
    let prec = s.degree_in(x) as usize + 1;
    let back = &Poly::var(x.clone()) - &Poly::constant(xi);

    let mut roots = Vec::new();
    let mut cofactor = p.clone();
    for rho in anchored.rational_roots() {
        let slope = anchored.derivative().eval(&rho);
        let series = lift(&coeffs, &rho, &slope, prec);
        let candidate = Poly::from_univariate(&series, x).substitute(x, &back);
        if !s.substitute(y, &candidate).is_zero() {
            continue;
        }
        let factor = &Poly::var(y.clone()) - &candidate;
        let mut multiplicity = 0;
        while let Some(q) = cofactor.div_exact(&factor) {
            cofactor = q;
            multiplicity += 1;
        }
        roots.push(QxRoot { root: candidate, multiplicity });
    }
    roots.sort_by(|a, b| a.root.cmp(&b.root));
    let result = QxRootsResult { roots, cofactor };
    debug_assert_eq!(&result.reconstruct(y), p);
    Ok(result)
}

/// Least `xi = 0, 1, 2, ...` with `S(xi, y)` squarefree of full degree.
fn anchor(s: &Poly, x: &Var, y: &Var, dy: usize) -> (BigRational, UniPoly) {
    let mut xi = BigRational::zero();
    loop {
        let u = s.evaluate_at(x, &xi).to_univariate(y).expect("only y remains");
        if u.degree() == Some(dy) && u.gcd(&u.derivative()).degree() == Some(0) {
            return (xi, u);
        }
        xi += BigRational::from_integer(1.into());
    }
}

/// Power-series root of `sum coeffs[j](t) y^j` through `rho`, truncated to
/// `prec` terms, solved one coefficient at a time.
fn lift(coeffs: &[UniPoly], rho: &BigRational, slope: &BigRational, prec: usize) -> UniPoly {
    let mut series = vec![rho.clone()];
    for k in 1..prec {
        let value = eval_truncated(coeffs, &UniPoly::new(series.clone()), k + 1);
        let ck = value.coeffs().get(k).cloned().unwrap_or_else(BigRational::zero);
        series.push(-ck / slope);
    }
    UniPoly::new(series)
}

fn eval_truncated(coeffs: &[UniPoly], p: &UniPoly, n: usize) -> UniPoly {
    let mut acc = UniPoly::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(p).add(c);
        acc = UniPoly::new(acc.coeffs().iter().take(n).cloned().collect());
    }
    acc
}

/// Roots whose leading coefficient is a positive rational.
pub fn positive_leading_roots(r: &QxRootsResult) -> Vec<Poly> {
    r.roots
        .iter()
        .map(|q| &q.root)
        .filter(|p| p.leading_coefficient().is_positive())
        .cloned()
        .collect()
}
