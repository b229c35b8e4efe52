//! Deciders for `exists v forall x exists y` and
//! `exists u exists v forall x exists y` over the positive integers.
//!
//! For parameter values off the candidate locus the fiber `f(v, x, y) = 0`
//! is a smooth projective plane curve of degree `D`. When `D >= 3` its genus
//! `(D - 1)(D - 2) / 2` is positive, so it has finitely many integral points
//! and cannot satisfy `forall x exists y`. Only candidate fibers need the
//! `forall exists` decider.
//!
//! The candidate locus is cut out by `Delta`, the product of
//! - an eliminant of the affine singular system `f = f_x = f_y = 0`,
//! - an eliminant of the singular system at infinity
//!   `F_D = dF_D/dx = dF_D/dy = f_{D-1} = 0`, in the chart `y = 1` and at
//!   the point `(1 : 0 : 0)`,
//! - the common zeros of the top-degree coefficients (degree drop),
//!
//! together with the zeros of the content of `f` in `(x, y)`, where the
//! fiber vanishes identically.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::jst::decide_forall_exists;
use crate::poly::{
    content_and_primitive, discriminant, gcd, resultant_interpolated, squarefree_part_multi, Monomial,
    Poly, Var,
};
use crate::verdict::{Verdict, VerdictValue};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateLocus {
    /// Content of `f` in `(x, y)`, a polynomial in the parameters.
    pub content: Poly,
    /// Positive integer zeros of the content (one parameter only).
    pub content_roots: Vec<BigInt>,
    /// Degeneration polynomial in the parameters. Squarefree for one
    /// parameter; with two it is reduced only below a size cap.
    pub delta: Poly,
    /// Positive integer zeros of `delta` (one parameter only).
    pub candidates: Vec<BigInt>,
    /// Total degree in `(x, y)` of the generic fiber.
    pub generic_degree: u32,
    /// Every eliminant was nonzero, so `delta` vanishes at every degenerate
    /// parameter value.
    pub exhaustive: bool,
    /// The shear `y -> y + c x` used for the affine eliminant, if any.
    pub shear: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    /// No degenerate parameter values at all.
    I,
    /// Finitely many real degenerate parameter points, all enumerated.
    II,
    /// A positive-dimensional real degenerate locus, searched to a bound.
    III,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixCertificate {
    pub parameters: Vec<Var>,
    pub generic_degree: u32,
    pub content: Poly,
    pub delta: Poly,
    pub exhaustive: bool,
    pub shear: Option<i64>,
    pub case: Option<Case>,
    /// Parameter points whose fibers were decided, in scan order.
    pub checked: Vec<(Vec<BigInt>, VerdictValue)>,
    /// The search bound used in case III.
    pub search_bound: Option<u64>,
}

pub type PrefixVerdict = Verdict<PrefixCertificate>;

fn vars(names: &[&str]) -> Vec<Var> {
    names.iter().map(|n| Var::new(n)).collect()
}

/// Resultant that also handles a side of degree zero: the common zeros of
/// `a` and `b` are then contained in the zeros of that side.
fn eliminate(a: &Poly, b: &Poly, var: &Var) -> Poly {
    if a.is_zero() || b.is_zero() {
        Poly::zero()
    } else if a.degree_in(var) == 0 {
        a.clone()
    } else if b.degree_in(var) == 0 {
        b.clone()
    } else {
        resultant_interpolated(a, b, var)
    }
}

/// A polynomial vanishing at every common zero of `polys`, zero when they
/// all vanish identically. With one parameter this is their gcd; with more,
/// the first nonzero member.
fn common_zero_superset(polys: &[Poly], nparams: usize) -> Poly {
    if nparams == 1 {
        polys.iter().fold(Poly::zero(), |acc, p| gcd(&acc, p))
    } else {
        polys.iter().find(|p| !p.is_zero()).cloned().unwrap_or_default()
    }
}

fn affine_eliminant(g: &Poly, x: &Var, y: &Var) -> Option<(Poly, Option<i64>)> {
    for c in 0..=3i64 {
        let gc = if c == 0 {
            g.clone()
        } else {
            let sheared = &Poly::var(y.clone()) + &Poly::var(x.clone()).scale(&BigRational::from_integer(c.into()));
            g.substitute(y, &sheared)
        };
        let r1 = eliminate(&gc, &gc.derivative(x), x);
        let r2 = eliminate(&gc, &gc.derivative(y), x);
        let e = eliminate(&r1, &r2, y);
        if !e.is_zero() {
            return Some((e, (c > 0).then_some(c)));
        }
    }
    None
}

fn infinity_eliminant(g: &Poly, d: u32, x: &Var, y: &Var, nparams: usize) -> Poly {
    let group = [x.clone(), y.clone()];
    let top = g.homogeneous_part(&group, d);
    let next = g.homogeneous_part(&group, d - 1);
    let one = BigRational::one();
    let a = top.evaluate_at(y, &one);
    let b = top.derivative(x).evaluate_at(y, &one);
    let c = next.evaluate_at(y, &one);
    let chart: Vec<Poly> = (1..=3i64)
        .map(|k| eliminate(&a, &(&b + &c.scale(&BigRational::from_integer(k.into()))), x))
        .collect();
    let chart = chart.into_iter().find(|p| !p.is_zero()).unwrap_or_default();
    let coeff = |p: &Poly, i: u32, j: u32| {
        p.coefficients_in(&group).get(&vec![i, j]).cloned().unwrap_or_default()
    };
    let point = common_zero_superset(
        &[coeff(&top, d, 0), coeff(&top, d - 1, 1), coeff(&next, d - 1, 0)],
        nparams,
    );
    &chart * &point
}

/// Largest two-parameter degeneration polynomial whose squarefree part is
/// taken eagerly.
const SQUAREFREE_TERM_CAP: usize = 300;

fn locus(f: &Poly, params: &[Var]) -> Result<CandidateLocus> {
    let xy = vars(&["x", "y"]);
    let (x, y) = (&xy[0], &xy[1]);
    let (content, g) = content_and_primitive(f, &xy)?;
    let d = g.degree_in_group(&xy);
    let mut exhaustive = true;
    let mut delta = Poly::one();
    let mut shear = None;
    if d >= 1 {
        match affine_eliminant(&g, x, y) {
            Some((e, s)) => {
                delta = &delta * &e;
                shear = s;
            }
            None => exhaustive = false,
        }
        let inf = infinity_eliminant(&g, d, x, y, params.len());
        if inf.is_zero() {
            exhaustive = false;
        } else {
            delta = &delta * &inf;
        }
        let top: Vec<Poly> = g.homogeneous_part(&xy, d).coefficients_in(&xy).into_values().collect();
        delta = &delta * &common_zero_superset(&top, params.len());
    }
    let delta = if params.len() == 1 || delta.num_terms() <= SQUAREFREE_TERM_CAP {
        squarefree_part_multi(&delta)
    } else {
        delta.integer_normalize().1
    };
    debug_assert!(delta.variables().iter().all(|v| params.contains(v)));
    let (content_roots, candidates) = if params.len() == 1 {
        (positive_roots(&content, &params[0]), positive_roots(&delta, &params[0]))
    } else {
        (Vec::new(), Vec::new())
    };
    Ok(CandidateLocus { content, content_roots, delta, candidates, generic_degree: d, exhaustive, shear })
}

fn positive_roots(p: &Poly, v: &Var) -> Vec<BigInt> {
    if p.is_constant() {
        return Vec::new();
    }
    p.to_univariate(v).expect("univariate").positive_integer_roots()
}

pub fn candidate_locus_1param(f: &Poly) -> Result<CandidateLocus> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    locus(f, &vars(&["v"]))
}

fn certificate(params: Vec<Var>, l: &CandidateLocus) -> PrefixCertificate {
    PrefixCertificate {
        parameters: params,
        generic_degree: l.generic_degree,
        content: l.content.clone(),
        delta: l.delta.clone(),
        exhaustive: l.exhaustive,
        shear: l.shear,
        case: None,
        checked: Vec::new(),
        search_bound: None,
    }
}

fn witness(params: &[Var], point: &[BigInt]) -> BTreeMap<Var, BigInt> {
    params.iter().cloned().zip(point.iter().cloned()).collect()
}

fn fiber(f: &Poly, params: &[Var], point: &[BigInt]) -> Poly {
    let at: BTreeMap<Var, BigRational> = params
        .iter()
        .cloned()
        .zip(point.iter().map(|p| BigRational::from_integer(p.clone())))
        .collect();
    f.evaluate(&at)
}

/// Runs the `forall exists` decider on each point in order. Returns the
/// first TRUE point, recording every decided point in the certificate.
fn scan(
    f: &Poly,
    params: &[Var],
    points: impl IntoIterator<Item = Vec<BigInt>>,
    cert: &mut PrefixCertificate,
) -> Result<(Option<Vec<BigInt>>, bool)> {
    let mut any_inconclusive = false;
    for point in points {
        let v = decide_forall_exists(&fiber(f, params, &point))?.value;
        cert.checked.push((point.clone(), v));
        match v {
            VerdictValue::True => return Ok((Some(point), any_inconclusive)),
            VerdictValue::Inconclusive => any_inconclusive = true,
            VerdictValue::False => {}
        }
    }
    Ok((None, any_inconclusive))
}

fn finish(
    params: &[Var],
    cert: PrefixCertificate,
    found: Option<Vec<BigInt>>,
    any_inconclusive: bool,
) -> PrefixVerdict {
    match found {
        Some(point) => Verdict {
            value: VerdictValue::True,
            witness: Some(witness(params, &point)),
            certificate: cert,
            reason: None,
        },
        None if any_inconclusive => {
            Verdict::inconclusive(cert, "a candidate fiber could not be decided")
        }
        None => Verdict::new(VerdictValue::False, cert),
    }
}

const LOW_DEGREE: &str = "exceptional or degenerate family: generic fibers have degree at most 2";
const NOT_EXHAUSTIVE: &str = "degeneration eliminant vanishes identically; candidate locus not certified";

pub fn decide_exists_forall_exists(f: &Poly) -> Result<PrefixVerdict> {
    let params = vars(&["v"]);
    f.check_variables(&vars(&["v", "x", "y"]))?;
    if f.is_zero() {
        return Ok(trivially_true(params));
    }
    let l = locus(f, &params)?;
    let mut cert = certificate(params.clone(), &l);
    if l.generic_degree <= 2 {
        return Ok(Verdict::inconclusive(cert, LOW_DEGREE));
    }
    if !l.exhaustive {
        return Ok(Verdict::inconclusive(cert, NOT_EXHAUSTIVE));
    }
    let mut points: Vec<BigInt> = l.content_roots.iter().chain(&l.candidates).cloned().collect();
    points.sort();
    points.dedup();
    let (found, inc) = scan(f, &params, points.into_iter().map(|p| vec![p]), &mut cert)?;
    Ok(finish(&params, cert, found, inc))
}

fn trivially_true(params: Vec<Var>) -> PrefixVerdict {
    let point = vec![BigInt::one(); params.len()];
    Verdict {
        value: VerdictValue::True,
        witness: Some(witness(&params, &point)),
        certificate: PrefixCertificate {
            parameters: params,
            generic_degree: 0,
            content: Poly::zero(),
            delta: Poly::zero(),
            exhaustive: true,
            shear: None,
            case: None,
            checked: Vec::new(),
            search_bound: None,
        },
        reason: None,
    }
}

pub fn decide_exists2_forall_exists(f: &Poly, search_bound: u64) -> Result<PrefixVerdict> {
    if search_bound == 0 {
        return Err(Error::InvalidArgument("search bound must be positive".into()));
    }
    let params = vars(&["u", "v"]);
    let (u, v) = (&params[0], &params[1]);
    f.check_variables(&vars(&["u", "v", "x", "y"]))?;
    if f.is_zero() {
        return Ok(trivially_true(params));
    }
    let l = locus(f, &params)?;
    let mut cert = certificate(params.clone(), &l);
    if l.generic_degree <= 2 {
        return Ok(Verdict::inconclusive(cert, LOW_DEGREE));
    }
    if !l.exhaustive {
        return Ok(Verdict::inconclusive(cert, NOT_EXHAUSTIVE));
    }
    let m = &l.content * &l.delta;
    if m.is_constant() {
        cert.case = Some(Case::I);
        return Ok(Verdict::new(VerdictValue::False, cert));
    }
    let finite = if changes_sign(&m, u, v, search_bound) {
        None
    } else {
        finite_real_points(&squarefree_part_multi(&m), u, v)
    };
    if let Some(points) = finite {
        cert.case = Some(Case::II);
        let (found, inc) = scan(f, &params, points, &mut cert)?;
        return Ok(finish(&params, cert, found, inc));
    }
    cert.case = Some(Case::III);
    cert.search_bound = Some(search_bound);
    let points = (1..=search_bound).flat_map(|a| {
        let at_u = m.evaluate_at(u, &BigRational::from_integer(a.into()));
        let vs: Vec<u64> = if at_u.is_zero() {
            (1..=search_bound).collect()
        } else {
            positive_roots(&at_u, v)
                .into_iter()
                .filter_map(|b| b.to_u64())
                .filter(|&b| b <= search_bound)
                .collect()
        };
        vs.into_iter().map(move |b| vec![BigInt::from(a), BigInt::from(b)])
    });
    let (found, _) = scan(f, &params, points, &mut cert)?;
    Ok(match found {
        Some(point) => Verdict {
            value: VerdictValue::True,
            witness: Some(witness(&params, &point)),
            certificate: cert,
            reason: None,
        },
        None => Verdict::inconclusive(
            cert,
            format!("candidate locus positive-dimensional; searched to bound {search_bound}"),
        ),
    })
}

/// Whether `m` takes both signs on `[0, bound]^2`. A polynomial that does
/// has a real zero on every path between the two points, so its real zero
/// set is infinite.
fn changes_sign(m: &Poly, u: &Var, v: &Var, bound: u64) -> bool {
    let (mut pos, mut neg) = (false, false);
    for a in 0..=bound {
        let col = m.evaluate_at(u, &BigRational::from_integer(a.into()));
        let Ok(col) = col.to_univariate(v) else {
            return false;
        };
        for b in 0..=bound {
            let t = col.eval(&BigRational::from_integer(b.into()));
            pos |= t.is_positive();
            neg |= t.is_negative();
            if pos && neg {
                return true;
            }
        }
    }
    false
}

/// If the real zero set of `m(u, v)` is finite, its positive integer
/// points in lexicographic order; `None` when it may be infinite.
///
/// After removing the content `p(u)` in `v`, the number of real roots of
/// `m'(s, v)` is constant for `s` between consecutive real roots of
/// `R(u) = lc_v(m') * disc_v(m')`. If it is zero at one sample in each
/// interval, every real zero lies over a root of `R`.
fn finite_real_points(m: &Poly, u: &Var, v: &Var) -> Option<Vec<Vec<BigInt>>> {
    let (p, mp) = content_and_primitive(m, std::slice::from_ref(v)).ok()?;
    if !positive_roots(&p, u).is_empty() {
        return None;
    }
    if mp.degree_in(v) == 0 {
        return Some(Vec::new());
    }
    let lc = mp.univariate_view(v).leading();
    let r = if mp.degree_in(v) >= 2 {
        &lc * &discriminant(&mp, v).ok()?
    } else {
        lc
    };
    let r = r.to_univariate(u).ok()?;
    let samples: Vec<BigRational> = if r.degree().unwrap_or(0) == 0 {
        vec![BigRational::zero()]
    } else {
        let iv = r.isolate_real_roots();
        if iv.is_empty() {
            vec![BigRational::zero()]
        } else {
            std::iter::once(iv[0].0.clone()).chain(iv.iter().map(|(_, b)| b.clone())).collect()
        }
    };
    for s in samples {
        let fiber = mp.evaluate_at(u, &s).to_univariate(v).ok()?;
        if fiber.count_real_roots() > 0 {
            return None;
        }
    }
    let mut points = Vec::new();
    let us = if r.degree().unwrap_or(0) == 0 { Vec::new() } else { r.positive_integer_roots() };
    for a in us {
        let fiber = mp.evaluate_at(u, &BigRational::from_integer(a.clone()));
        for b in positive_roots(&fiber, v) {
            points.push(vec![a.clone(), b]);
        }
    }
    Some(points)
}

/// Parameter values in `1..=bound` whose fiber visibly degenerates: it
/// vanishes, drops total degree, or has a singular point with both
/// coordinates in `-grid..=grid`, affinely or at infinity.
pub fn brute_force_degenerate_fibers(f: &Poly, bound: u64, grid: i64) -> Vec<u64> {
    let xy = vars(&["x", "y"]);
    let (x, y) = (&xy[0], &xy[1]);
    let v = Var::new("v");
    let d = f.degree_in_group(&xy);
    let z = Var::new("z");
    let mut out = Vec::new();
    for k in 1..=bound {
        let h = f.evaluate_at(&v, &BigRational::from_integer(k.into()));
        if h.is_zero() || h.degree_in_group(&xy) < d {
            out.push(k);
            continue;
        }
        // Homogenize, then test the charts z = 1, y = 1 and x = 1.
        let hom = Poly::from_terms(h.terms().map(|(m, c)| {
            let e = d - m.degree();
            (m.mul(&Monomial::var(z.clone(), e)), c.clone())
        }));
        let charts = [
            (hom.evaluate_at(&z, &BigRational::one()), x.clone(), y.clone()),
            (hom.evaluate_at(y, &BigRational::one()), x.clone(), z.clone()),
            (hom.evaluate_at(x, &BigRational::one()), y.clone(), z.clone()),
        ];
        let singular = charts.iter().any(|(c, a, b)| grid_singular(c, a, b, grid));
        if singular {
            out.push(k);
        }
    }
    out
}

fn grid_singular(c: &Poly, a: &Var, b: &Var, grid: i64) -> bool {
    let (ca, cb) = (c.derivative(a), c.derivative(b));
    for i in -grid..=grid {
        for j in -grid..=grid {
            let at: BTreeMap<Var, BigRational> = [
                (a.clone(), BigRational::from_integer(i.into())),
                (b.clone(), BigRational::from_integer(j.into())),
            ]
            .into_iter()
            .collect();
            if [c, &ca, &cb].iter().all(|p| p.eval(&at).is_some_and(|t| t.is_zero())) {
                return true;
            }
        }
    }
    false
}
