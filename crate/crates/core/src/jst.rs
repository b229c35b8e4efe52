//! The `forall x exists y` decider over the positive integers.
//!
//! `P(x, y) = 0` is solvable for every `x` iff its positive-leading
//! polynomial branches `y = P_i(x)` take positive integer values on every
//! residue class of some modulus `d` (past a threshold `x0`) and every
//! `x <= x0` is solvable directly. With `d` the common denominator of the
//! branches, `d * P_i = Q_i` has integer coefficients and `P_i(x)` is an
//! integer iff `Q_i(x) = 0 (mod d)`, which depends only on `x mod d`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Result;
use crate::poly::{Poly, UniPoly, Var};
use crate::qx_roots::{positive_leading_roots, roots_in_qx};
use crate::verdict::{Verdict, VerdictValue};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchRecord {
    pub root: Poly,
    /// Sum of the squares of the coefficients.
    pub sum_of_squares: BigRational,
    pub cauchy_bound: BigRational,
    /// `max(sum_of_squares, cauchy_bound)`; exceeds every real root.
    pub safe_bound: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JstFailure {
    /// No positive-leading branch exists. `counterexample` is the least
    /// unsolvable `x` found by a bounded search, if any.
    NoBranches { counterexample: Option<u64> },
    /// `P(x, y) = 0` has no positive integer solution `y` at this `x <= x0`.
    SmallXCounterexample(u64),
    /// No branch is integral on this residue class.
    UncoveredResidue { residue: u64, counterexample: Option<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct JstCertificate {
    pub identically_zero: bool,
    pub branch_roots: Vec<BranchRecord>,
    /// Roots in `Q[x]` whose leading coefficient is not positive.
    pub excluded_roots: Vec<Poly>,
    /// `max_i s_i`, the threshold before the Cauchy-bound correction.
    pub sum_of_squares_threshold: Option<BigRational>,
    pub threshold_x0: u64,
    pub small_x_witnesses: BTreeMap<u64, BigInt>,
    pub modulus_d: u64,
    pub scaled_branches: Vec<Poly>,
    pub covered_residues: Vec<u64>,
    pub failure: Option<JstFailure>,
}

pub type JstVerdict = Verdict<JstCertificate>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JstOptions {
    /// Added to the computed threshold; the verdict must not depend on it.
    pub threshold_slack: u64,
    /// Larger thresholds give INCONCLUSIVE.
    pub max_threshold: u64,
    /// Larger moduli give INCONCLUSIVE.
    pub max_modulus: u64,
    /// How many members of an uncovered residue class (or of `1, 2, ...`
    /// when there are no branches) to test for a concrete counterexample.
    pub counterexample_search: u64,
}

impl Default for JstOptions {
    fn default() -> Self {
        JstOptions {
            threshold_slack: 0,
            max_threshold: 200_000,
            max_modulus: 1_000_000,
            counterexample_search: 64,
        }
    }
}

fn xy() -> (Var, Var) {
    (Var::new("x"), Var::new("y"))
}

pub fn decide_forall_exists(p: &Poly) -> Result<JstVerdict> {
    decide_forall_exists_with(p, &JstOptions::default())
}

pub fn decide_forall_exists_with(p: &Poly, opts: &JstOptions) -> Result<JstVerdict> {
    let (x, y) = xy();
    p.check_variables(&[x.clone(), y.clone()])?;
    let mut cert = JstCertificate::default();
    if p.is_zero() {
        cert.identically_zero = true;
        return Ok(Verdict::new(VerdictValue::True, cert));
    }
    if p.degree_in(&y) == 0 {
        let u = p.to_univariate(&x)?;
        let bad = (1u64..).find(|&k| !u.eval(&int(k)).is_zero()).expect("nonzero polynomial");
        cert.failure = Some(JstFailure::SmallXCounterexample(bad));
        return Ok(Verdict::new(VerdictValue::False, cert));
    }

    let roots = roots_in_qx(p, &x, &y)?;
    let branches = positive_leading_roots(&roots);
    cert.excluded_roots = roots
        .roots
        .iter()
        .map(|r| r.root.clone())
        .filter(|r| !branches.contains(r))
        .collect();
    if branches.is_empty() {
        let counterexample = (1..=opts.counterexample_search).find(|&k| solve_at(p, k).is_none());
        cert.failure = Some(JstFailure::NoBranches { counterexample });
        return Ok(Verdict::new(VerdictValue::False, cert));
    }

    let uni: Vec<UniPoly> = branches.iter().map(|b| b.to_univariate(&x).unwrap()).collect();
    cert.branch_roots = branches
        .iter()
        .zip(&uni)
        .map(|(b, u)| {
            let sum_of_squares = b.terms().map(|(_, c)| c * c).sum::<BigRational>();
            let cauchy_bound = u.cauchy_bound();
            let safe_bound = sum_of_squares.clone().max(cauchy_bound.clone());
            BranchRecord { root: b.clone(), sum_of_squares, cauchy_bound, safe_bound }
        })
        .collect();
    cert.sum_of_squares_threshold =
        cert.branch_roots.iter().map(|b| b.sum_of_squares.clone()).max();
    let bound = cert.branch_roots.iter().map(|b| b.safe_bound.clone()).max().unwrap();
    let x0 = (bound.floor().to_integer() + 1u32 + opts.threshold_slack)
        .to_u64()
        .filter(|&t| t <= opts.max_threshold);
    cert.threshold_x0 = x0.unwrap_or(0);

    let d = branches.iter().fold(BigInt::one(), |acc, b| acc.lcm(&b.denominator_lcm()));
    let Some(d) = d.to_u64().filter(|&d| d <= opts.max_modulus) else {
        return Ok(Verdict::inconclusive(
            cert,
            format!("modulus exceeds the limit {}", opts.max_modulus),
        ));
    };
    cert.modulus_d = d;
    let dq = BigRational::from_integer(d.into());
    cert.scaled_branches = branches.iter().map(|b| b.scale(&dq)).collect();
    let (gap, residues) = covered_residues(&cert.scaled_branches, d);
    cert.covered_residues = residues;
    if let Some(r) = gap {
        let counterexample = (0..opts.counterexample_search)
            .map(|j| r + j * d)
            .filter(|&k| k >= 1)
            .find(|&k| solve_at(p, k).is_none());
        cert.failure = Some(JstFailure::UncoveredResidue { residue: r, counterexample });
        return Ok(Verdict::new(VerdictValue::False, cert));
    }

    let Some(x0) = x0 else {
        return Ok(Verdict::inconclusive(
            cert,
            format!("threshold exceeds the limit {}", opts.max_threshold),
        ));
    };
    for k in 1..=x0 {
        let xk = int(k);
        let via_branch = uni.iter().map(|u| u.eval(&xk)).find(|v| v.is_integer() && v.is_positive());
        let w = match via_branch {
            Some(v) => Some(v.to_integer()),
            None => solve_at(p, k),
        };
        match w {
            Some(w) => {
                cert.small_x_witnesses.insert(k, w);
            }
            None => {
                cert.failure = Some(JstFailure::SmallXCounterexample(k));
                return Ok(Verdict::new(VerdictValue::False, cert));
            }
        }
    }
    Ok(Verdict::new(VerdictValue::True, cert))
}

fn int(k: u64) -> BigRational {
    BigRational::from_integer(k.into())
}

/// Least positive integer `y` with `P(k, y) = 0`.
fn solve_at(p: &Poly, k: u64) -> Option<BigInt> {
    let (x, y) = xy();
    let u = p.evaluate_at(&x, &int(k)).to_univariate(&y).expect("bivariate in x, y");
    if u.is_zero() {
        return Some(BigInt::one());
    }
    u.positive_integer_roots().into_iter().next()
}

fn residues_mod(q: &Poly, d: u64) -> Vec<u128> {
    let x = Var::new("x");
    let dm = BigInt::from(d);
    q.to_univariate(&x)
        .expect("polynomial in x")
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer().mod_floor(&dm).to_u128().unwrap()
        })
        .collect()
}

fn horner_mod(coeffs: &[u128], r: u128, d: u128) -> u128 {
    coeffs.iter().rev().fold(0, |acc, c| (acc * r + c) % d)
}

/// Returns the least uncovered residue (or `None`) and the covered ones.
fn covered_residues(q: &[Poly], d: u64) -> (Option<u64>, Vec<u64>) {
    let reduced: Vec<Vec<u128>> = q.iter().map(|qi| residues_mod(qi, d)).collect();
    let dd = d as u128;
    let mut covered = Vec::new();
    let mut first_gap = None;
    for r in 0..d {
        if reduced.iter().any(|c| horner_mod(c, r as u128, dd) == 0) {
            covered.push(r);
        } else if first_gap.is_none() {
            first_gap = Some(r);
        }
    }
    (first_gap, covered)
}

/// Whether the congruences `Q_i(x) = 0 (mod d)` cover every residue; if not,
/// the least uncovered residue. `Q` must have integer coefficients in `x`.
pub fn covering_check(q: &[Poly], d: u64) -> (bool, Option<u64>) {
    assert!(d >= 1, "modulus must be positive");
    let (gap, _) = covered_residues(q, d);
    (gap.is_none(), gap)
}

/// Whether replacing `(Q, d)` by `(m Q, m d)` leaves the covering outcome
/// unchanged.
pub fn covering_invariance_probe(q: &[Poly], d: u64, m: u64) -> bool {
    assert!(m >= 1, "multiplier must be positive");
    let mq = BigRational::from_integer(m.into());
    let scaled: Vec<Poly> = q.iter().map(|qi| qi.scale(&mq)).collect();
    covering_check(q, d).0 == covering_check(&scaled, m * d).0
}

/// Re-verifies a verdict from its certificate alone, using exact rational
/// evaluation and root isolation rather than the routines that produced it.
pub fn check_certificate(p: &Poly, verdict: &JstVerdict) -> std::result::Result<(), String> {
    let (x, y) = xy();
    let c = &verdict.certificate;
    let no_root = |k: u64| -> bool {
        let u = p.evaluate_at(&x, &int(k)).to_univariate(&y).unwrap();
        !u.is_zero() && u.integer_roots_by_isolation().iter().all(|r| !r.is_positive())
    };
    match verdict.value {
        VerdictValue::Inconclusive => Ok(()),
        VerdictValue::True => {
            if c.identically_zero {
                return if p.is_zero() { Ok(()) } else { Err("polynomial is not zero".into()) };
            }
            for k in 1..=c.threshold_x0 {
                let w = c.small_x_witnesses.get(&k).ok_or(format!("no witness for x = {k}"))?;
                let mut at = BTreeMap::new();
                at.insert(x.clone(), int(k));
                at.insert(y.clone(), BigRational::from_integer(w.clone()));
                if !w.is_positive() || !p.eval(&at).unwrap().is_zero() {
                    return Err(format!("bad witness y = {w} at x = {k}"));
                }
            }
            let dq = BigRational::from_integer(c.modulus_d.into());
            let x0 = int(c.threshold_x0);
            if c.branch_roots.len() != c.scaled_branches.len() {
                return Err("branch count mismatch".into());
            }
            for (b, q) in c.branch_roots.iter().zip(&c.scaled_branches) {
                let u = b.root.to_univariate(&x).map_err(|e| e.to_string())?;
                if !p.substitute(&y, &b.root).is_zero() {
                    return Err(format!("{} is not a root", b.root));
                }
                if !u.eval(&x0).is_positive() || u.count_roots_above(&x0) != 0 {
                    return Err(format!("{} is not positive beyond x0", b.root));
                }
                if b.root.scale(&dq) != *q || !q.is_integral() {
                    return Err(format!("{q} is not d times {}", b.root));
                }
            }
            let all: Vec<u64> = (0..c.modulus_d).collect();
            if c.covered_residues != all {
                return Err("covered residues are not all of Z/dZ".into());
            }
            for r in 0..c.modulus_d {
                let hit = c
                    .branch_roots
                    .iter()
                    .any(|b| b.root.evaluate_at(&x, &int(r)).constant_value().unwrap().is_integer());
                if !hit {
                    return Err(format!("residue {r} is not covered"));
                }
            }
            Ok(())
        }
        VerdictValue::False => match &c.failure {
            None => Err("FALSE verdict without a failure".into()),
            Some(JstFailure::SmallXCounterexample(k)) => {
                if no_root(*k) {
                    Ok(())
                } else {
                    Err(format!("x = {k} has a solution"))
                }
            }
            Some(JstFailure::NoBranches { counterexample }) => {
                if !c.branch_roots.is_empty() {
                    return Err("branches listed".into());
                }
                match counterexample {
                    Some(k) if !no_root(*k) => Err(format!("x = {k} has a solution")),
                    _ => Ok(()),
                }
            }
            Some(JstFailure::UncoveredResidue { residue, counterexample }) => {
                for b in &c.branch_roots {
                    let v = b.root.evaluate_at(&x, &int(*residue)).constant_value().unwrap();
                    if v.is_integer() {
                        return Err(format!("{} is integral at residue {residue}", b.root));
                    }
                }
                match counterexample {
                    Some(k) if k % c.modulus_d != *residue || !no_root(*k) => {
                        Err(format!("x = {k} is not a counterexample"))
                    }
                    _ => Ok(()),
                }
            }
        },
    }
}
