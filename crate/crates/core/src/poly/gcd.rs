//! Greatest common divisors over Q[vars], plus content/primitive splitting
//! and squarefree parts. A heuristic evaluation gcd is tried first; recursive
//! primitive pseudo-remainder sequences are the fallback.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{add_term, Monomial, Poly, Var};
use crate::error::{Error, Result};

/// Give up on the heuristic once evaluated coefficients would exceed this
/// many bits.
const HEURISTIC_BIT_LIMIT: u64 = 1 << 17;

/// Gcd of two polynomials, normalized to coprime integer coefficients with
/// a positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.integer_normalize().1;
    }
    if b.is_zero() {
        return a.integer_normalize().1;
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if let Some(g) = heuristic_gcd(&a.integer_normalize().1, &b.integer_normalize().1) {
        return g.integer_normalize().1;
    }
    let mut vars = a.variables();
    vars.extend(b.variables());
    if vars.len() == 1 {
        let v = vars.into_iter().next().unwrap();
        let g = a.to_univariate(&v).unwrap().gcd(&b.to_univariate(&v).unwrap());
        return Poly::from_univariate(&g, &v).integer_normalize().1;
    }
    let z = vars.into_iter().next_back().unwrap();
    match (a.contains_var(&z), b.contains_var(&z)) {
        (false, _) => gcd(a, &content_in(b, &z)),
        (_, false) => gcd(&content_in(a, &z), b),
        (true, true) => {
            let (ca, cb) = (content_in(a, &z), content_in(b, &z));
            let pa = a.div_exact(&ca).expect("content divides");
            let pb = b.div_exact(&cb).expect("content divides");
            let c = gcd(&ca, &cb);
            (&c * &primitive_prs(pa, pb, &z)).integer_normalize().1
        }
    }
}

fn integer_content(p: &Poly) -> BigInt {
    p.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
}

fn max_norm(p: &Poly) -> BigInt {
    p.terms.values().map(|c| c.numer().abs()).max().unwrap_or_default()
}

/// Evaluation gcd of two nonzero integer polynomials: substitute a large
/// integer for the main variable, recurse, and rebuild the candidate from
/// the balanced base-`xi` digits of the result. A candidate is accepted only
/// if it divides both inputs, which then makes it the gcd.
fn heuristic_gcd(a: &Poly, b: &Poly) -> Option<Poly> {
    let (ca, cb) = (integer_content(a), integer_content(b));
    let c = BigRational::from_integer(ca.gcd(&cb));
    let pa = a.scale(&BigRational::from_integer(ca).recip());
    let pb = b.scale(&BigRational::from_integer(cb).recip());
    let mut vars = pa.variables();
    vars.extend(pb.variables());
    let Some(z) = vars.into_iter().next_back() else {
        return Some(Poly::constant(c));
    };
    let deg = u64::from(pa.degree_in(&z).max(pb.degree_in(&z)));
    let mut xi: BigInt = 2 * max_norm(&pa).min(max_norm(&pb)) + 29;
    for _ in 0..6 {
        if xi.bits() * (deg + 1) > HEURISTIC_BIT_LIMIT {
            return None;
        }
        let at = BigRational::from_integer(xi.clone());
        let (ea, eb) = (pa.evaluate_at(&z, &at), pb.evaluate_at(&z, &at));
        if !ea.is_zero() && !eb.is_zero() {
            let h = heuristic_gcd(&ea, &eb)?;
            let g = from_digits(&h, &xi, &z);
            if !g.is_zero() {
                let g = g.integer_normalize().1;
                if divides_integral(&g, &pa) && divides_integral(&g, &pb) {
                    return Some(g.scale(&c));
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Reads each integer coefficient of `h` as balanced digits in base `xi`,
/// the `i`-th digit becoming the coefficient of `z^i`.
fn from_digits(h: &Poly, xi: &BigInt, z: &Var) -> Poly {
    let half = xi / 2;
    let mut terms = BTreeMap::new();
    for (m, c) in &h.terms {
        let mut n = c.numer().clone();
        let mut i = 0;
        while !n.is_zero() {
            let mut d = n.mod_floor(xi);
            if d > half {
                d -= xi;
            }
            n = (&n - &d) / xi;
            add_term(&mut terms, m.mul(&Monomial::var(z.clone(), i)), BigRational::from_integer(d));
            i += 1;
        }
    }
    Poly { terms }
}

/// Whether the primitive integer polynomial `g` divides the integer
/// polynomial `p`. Any exact quotient is integral, so a fractional quotient
/// coefficient ends the division early.
fn divides_integral(g: &Poly, p: &Poly) -> bool {
    let Some((lm, lc)) = g.leading_term() else {
        return false;
    };
    let mut rem = p.terms.clone();
    while let Some((m, c)) = rem.iter().next_back() {
        let Some(qm) = m.divide(lm) else {
            return false;
        };
        let qc = c / lc;
        if !qc.is_integer() {
            return false;
        }
        for (dm, dc) in &g.terms {
            add_term(&mut rem, dm.mul(&qm), -(dc * &qc));
        }
    }
    true
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `z`.
fn content_in(p: &Poly, z: &Var) -> Poly {
    p.univariate_view(z)
        .coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .fold(Poly::zero(), |acc, c| gcd(&acc, c))
}

fn primitive_in(p: &Poly, z: &Var) -> Poly {
    let c = content_in(p, z);
    p.div_exact(&c).expect("content divides").integer_normalize().1
}

fn primitive_prs(a: Poly, b: Poly, z: &Var) -> Poly {
    let (mut r0, mut r1) = if a.degree_in(z) >= b.degree_in(z) { (a, b) } else { (b, a) };
    loop {
        let r = pseudo_remainder(&r0, &r1, z);
        if r.is_zero() {
            return primitive_in(&r1, z);
        }
        if r.degree_in(z) == 0 {
            return Poly::one();
        }
        r0 = r1;
        r1 = primitive_in(&r, z);
    }
}

/// Pseudo-remainder of `a` by `b` in `z`, up to a nonzero rational factor.
pub(crate) fn pseudo_remainder(a: &Poly, b: &Poly, z: &Var) -> Poly {
    let db = b.degree_in(z);
    let lb = b.univariate_view(z).leading();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(z) >= db {
        let dr = r.degree_in(z);
        let lr = r.univariate_view(z).leading();
        let shift = Monomial::var(z.clone(), dr - db);
        r = &(&lb * &r) - &(&lr * &b.mul_monomial(&shift));
        r = r.integer_normalize().1;
    }
    r
}

/// Splits `f = content * primitive`, where the content is the gcd of the
/// coefficients of `f` viewed as a polynomial in the variables `group`, and
/// the primitive part has coprime integer coefficients and a positive
/// leading coefficient.
pub fn content_and_primitive(f: &Poly, group: &[Var]) -> Result<(Poly, Poly)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = f
        .coefficients_in(group)
        .values()
        .fold(Poly::zero(), |acc, c| gcd(&acc, c));
    let prim = f.div_exact(&g).expect("gcd divides every coefficient");
    let (r, prim) = prim.integer_normalize();
    Ok((g.scale(&r), prim))
}

/// Monic gcd of two univariate polynomials in `var`.
pub fn gcd_univariate(f: &Poly, g: &Poly, var: &Var) -> Result<Poly> {
    let g = f.to_univariate(var)?.gcd(&g.to_univariate(var)?);
    Ok(Poly::from_univariate(&g, var))
}

/// Monic squarefree part `f / gcd(f, f')` of a univariate polynomial.
pub fn squarefree_part(f: &Poly, var: &Var) -> Result<Poly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(Poly::from_univariate(&f.to_univariate(var)?.squarefree(), var))
}

/// Squarefree part of a multivariate polynomial: `f / gcd(f, all partials)`,
/// integer-normalized. Constants map to 1 and zero to zero.
pub fn squarefree_part_multi(f: &Poly) -> Poly {
    if f.is_zero() {
        return Poly::zero();
    }
    if f.is_constant() {
        return Poly::one();
    }
    let g = f
        .variables()
        .iter()
        .fold(f.clone(), |acc, v| gcd(&acc, &f.derivative(v)));
    f.div_exact(&g).expect("gcd divides").integer_normalize().1
}
