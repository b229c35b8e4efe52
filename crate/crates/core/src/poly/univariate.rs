//! Dense univariate polynomials over the rationals, with exact real-root
//! isolation (Sturm sequences) and integer/rational root extraction.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Constants up to this magnitude are factored by trial division when
/// enumerating divisor candidates for integer roots.
const DIVISOR_LIMIT: u64 = 100_000_000;
/// Root bounds up to this are handled by evaluating every integer in range.
const SCAN_LIMIT: u64 = 512;

/// `coeffs[i]` is the coefficient of `t^i`; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        UniPoly::new(coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::new(vec![BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * super::rat(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        self.scale(&self.leading().recip())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                    let b = other.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / &lc;
            if !q.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * c;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a
    }

    /// Monic polynomial with the same roots, each of multiplicity one.
    pub fn squarefree(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// The primitive integer polynomial proportional to `self` (positive
    /// leading coefficient).
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    /// `1 + max |a_i / a_n|`, a strict bound on the modulus of every root.
    pub fn cauchy_bound(&self) -> BigRational {
        let lc = self.leading().abs();
        let n = self.coeffs.len().saturating_sub(1);
        let max = self.coeffs[..n]
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(BigRational::zero);
        BigRational::one() + max
    }

    fn sign_at(&self, t: &BigRational) -> Ordering {
        self.eval(t).cmp(&BigRational::zero())
    }

    /// Sturm sequence of the squarefree part, each member rescaled by a
    /// positive constant.
    fn sturm_chain(&self) -> Vec<UniPoly> {
        let p = self.squarefree();
        let mut chain = vec![positive_primitive(&p), positive_primitive(&p.derivative())];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == Some(0) {
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            chain.push(positive_primitive(&r.scale(&-BigRational::one())));
        }
        chain
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let chain = self.sturm_chain();
        let at_neg_inf: Vec<Ordering> = chain
            .iter()
            .map(|p| {
                let s = p.leading().cmp(&BigRational::zero());
                if p.degree().unwrap_or(0) % 2 == 1 { s.reverse() } else { s }
            })
            .collect();
        let at_pos_inf: Vec<Ordering> =
            chain.iter().map(|p| p.leading().cmp(&BigRational::zero())).collect();
        variations(&at_neg_inf) - variations(&at_pos_inf)
    }

    /// Number of distinct real roots greater than `a`.
    pub fn count_roots_above(&self, a: &BigRational) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let chain = self.sturm_chain();
        let at_a: Vec<Ordering> = chain.iter().map(|p| p.sign_at(a)).collect();
        let at_pos_inf: Vec<Ordering> =
            chain.iter().map(|p| p.leading().cmp(&BigRational::zero())).collect();
        variations(&at_a) - variations(&at_pos_inf)
    }

    /// Disjoint open intervals `(a, b)`, sorted, each containing exactly one
    /// real root; endpoints are never roots.
    pub fn isolate_real_roots(&self) -> Vec<(BigRational, BigRational)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sq = self.squarefree();
        let chain = sq.sturm_chain();
        let var_at = |t: &BigRational| {
            let signs: Vec<Ordering> = chain.iter().map(|p| p.sign_at(t)).collect();
            variations(&signs)
        };
        let bound = sq.cauchy_bound() + BigRational::one();
        let (lo, hi) = (-bound.clone(), bound);
        let mut out = Vec::new();
        let mut stack = vec![(lo.clone(), hi.clone(), var_at(&lo) - var_at(&hi))];
        while let Some((a, b, count)) = stack.pop() {
            match count {
                0 => {}
                1 => out.push((a, b)),
                _ => {
                    let m = split_point(&sq, &a, &b);
                    let vm = var_at(&m);
                    stack.push((a.clone(), m.clone(), var_at(&a) - vm));
                    stack.push((m, b.clone(), vm - var_at(&b)));
                }
            }
        }
        out.sort();
        out
    }

    /// Distinct integer roots, ascending. Uses divisor enumeration when the
    /// trailing coefficient is small enough to factor, root isolation
    /// otherwise.
    pub fn integer_roots(&self) -> Vec<BigInt> {
        self.integer_roots_closed_form()
            .or_else(|| self.integer_roots_by_scan())
            .or_else(|| self.integer_roots_by_divisors())
            .unwrap_or_else(|| self.integer_roots_by_isolation())
    }

    /// Integer roots of linear, quadratic and binomial polynomials (after
    /// removing a power of the variable) by exact integer roots.
    fn integer_roots_closed_form(&self) -> Option<Vec<BigInt>> {
        let ints = self.integer_coeffs();
        let shift = ints.iter().position(|c| !c.is_zero())?;
        let t = &ints[shift..];
        let n = t.len() - 1;
        let exact = |num: BigInt, den: &BigInt| (&num % den).is_zero().then(|| num / den);
        let mut roots: Vec<BigInt> = match n {
            0 => Vec::new(),
            1 => exact(-&t[0], &t[1]).into_iter().collect(),
            2 => {
                let disc = &t[1] * &t[1] - BigInt::from(4) * &t[2] * &t[0];
                let r = if disc.is_negative() { None } else { Some(disc.sqrt()) };
                match r.filter(|r| r * r == disc) {
                    Some(r) => {
                        let den = BigInt::from(2) * &t[2];
                        [-&t[1] + &r, -&t[1] - &r].into_iter().filter_map(|num| exact(num, &den)).collect()
                    }
                    None => Vec::new(),
                }
            }
            _ if t[1..n].iter().all(Zero::is_zero) => {
                // a y^n + c = 0 with c != 0.
                let n32 = n as u32;
                match exact(-&t[0], &t[n]) {
                    Some(q) => {
                        let root = q.abs().nth_root(n32);
                        if root.pow(n32) != q.abs() {
                            Vec::new()
                        } else if n % 2 == 1 {
                            vec![if q.is_negative() { -root } else { root }]
                        } else if q.is_positive() {
                            vec![-root.clone(), root]
                        } else {
                            Vec::new()
                        }
                    }
                    None => Vec::new(),
                }
            }
            _ => return None,
        };
        if shift > 0 {
            roots.push(BigInt::zero());
        }
        roots.sort();
        roots.dedup();
        Some(roots)
    }

    /// Integer roots by evaluating at every integer up to the Cauchy bound.
    /// `None` when the bound is too large for that.
    fn integer_roots_by_scan(&self) -> Option<Vec<BigInt>> {
        let ints = self.integer_coeffs();
        let shift = ints.iter().position(|c| !c.is_zero())?;
        let trimmed = &ints[shift..];
        let mut roots = Vec::new();
        if trimmed.len() > 1 {
            let bound = UniPoly::from_bigints(trimmed).cauchy_bound().floor().to_integer();
            let b = bound.to_i64().filter(|&b| b <= SCAN_LIMIT as i64)?;
            for k in (-b..=b).filter(|&k| k != 0) {
                let k = BigInt::from(k);
                if horner_int(trimmed, &k).is_zero() {
                    roots.push(k);
                }
            }
        }
        if shift > 0 {
            roots.push(BigInt::zero());
        }
        roots.sort();
        Some(roots)
    }

    /// Integer roots via the divisors of the trailing nonzero coefficient.
    /// `None` when that coefficient is too large to factor by trial division.
    pub fn integer_roots_by_divisors(&self) -> Option<Vec<BigInt>> {
        let ints = self.integer_coeffs();
        if ints.is_empty() {
            return Some(Vec::new());
        }
        let shift = ints.iter().position(|c| !c.is_zero()).unwrap();
        let trimmed = &ints[shift..];
        let a0 = trimmed[0].abs().to_u64().filter(|&a| a <= DIVISOR_LIMIT)?;
        let mut roots = Vec::new();
        if shift > 0 {
            roots.push(BigInt::zero());
        }
        if trimmed.len() > 1 {
            let bound = UniPoly::from_bigints(trimmed).cauchy_bound();
            for d in divisors(a0) {
                let d = BigInt::from(d);
                if BigRational::from_integer(d.clone()) > bound {
                    break;
                }
                for cand in [d.clone(), -d] {
                    if horner_int(trimmed, &cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }

    /// Integer roots via exact isolation and refinement to width below one.
    pub fn integer_roots_by_isolation(&self) -> Vec<BigInt> {
        let sq = self.squarefree();
        let mut roots = Vec::new();
        for (mut a, mut b) in sq.isolate_real_roots() {
            while &b - &a >= BigRational::one() {
                let m = split_point(&sq, &a, &b);
                if sq.sign_at(&a) != sq.sign_at(&m) {
                    b = m;
                } else {
                    a = m;
                }
            }
            let mut k = a.ceil().to_integer();
            while BigRational::from_integer(k.clone()) <= b {
                if sq.eval(&BigRational::from_integer(k.clone())).is_zero() {
                    roots.push(k.clone());
                }
                k += 1;
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }

    pub fn positive_integer_roots(&self) -> Vec<BigInt> {
        self.integer_roots().into_iter().filter(|r| r.is_positive()).collect()
    }

    /// Distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        let ints = self.integer_coeffs();
        let Some(n) = ints.len().checked_sub(1) else {
            return Vec::new();
        };
        if n == 0 {
            return Vec::new();
        }
        let lead = ints[n].clone();
        // a_n^(n-1) p(z / a_n) is monic with integer coefficients.
        let mut monic = Vec::with_capacity(n + 1);
        let mut pow = BigInt::one();
        for i in (0..=n).rev() {
            if i == n {
                monic.push(BigInt::one());
            } else {
                monic.push(&ints[i] * &pow);
                pow *= &lead;
            }
        }
        monic.reverse();
        let mut roots: Vec<BigRational> = UniPoly::from_bigints(&monic)
            .integer_roots()
            .into_iter()
            .map(|z| BigRational::new(z, lead.clone()))
            .collect();
        roots.sort();
        roots
    }
}

fn positive_primitive(p: &UniPoly) -> UniPoly {
    if p.is_zero() {
        return UniPoly::zero();
    }
    let ints = p.integer_coeffs();
    let q = UniPoly::from_bigints(&ints);
    // integer_coeffs forces a positive leading coefficient; undo that if the
    // original was negative so only positive scalings are applied.
    if p.leading().is_negative() {
        q.scale(&-BigRational::one())
    } else {
        q
    }
}

fn variations(signs: &[Ordering]) -> usize {
    let nonzero: Vec<&Ordering> = signs.iter().filter(|s| **s != Ordering::Equal).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// A point strictly inside `(a, b)` that is not a root of `p`.
fn split_point(p: &UniPoly, a: &BigRational, b: &BigRational) -> BigRational {
    let width = b - a;
    let mut den = 2i64;
    loop {
        for num in 1..den {
            let m = a + &width * BigRational::new(num.into(), den.into());
            if !p.eval(&m).is_zero() {
                return m;
            }
        }
        den += 1;
    }
}

fn horner_int(coeffs: &[BigInt], t: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = UniPoly::from_ints(&[-1, 0, 1]);
        let b = UniPoly::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        assert_eq!(UniPoly::from_ints(&[1, 3, 3, 1]).squarefree(), UniPoly::from_ints(&[1, 1]));
        assert_eq!(UniPoly::zero().gcd(&UniPoly::zero()), UniPoly::zero());
    }

    #[test]
    fn real_root_counts() {
        // (t-1)(t-2)(t+3)(t^2+1)
        let p = UniPoly::from_ints(&[-1, 0, 1])
            .mul(&UniPoly::from_ints(&[-2, 1]))
            .mul(&UniPoly::from_ints(&[3, 1]))
            .mul(&UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(p.count_real_roots(), 4);
        assert_eq!(p.isolate_real_roots().len(), 4);
        assert_eq!(UniPoly::from_ints(&[1, 0, 1]).count_real_roots(), 0);
        assert_eq!(p.integer_roots(), ints(&[-3, -1, 1, 2]));
        assert_eq!(p.integer_roots_by_isolation(), ints(&[-3, -1, 1, 2]));
        assert_eq!(p.count_roots_above(&BigRational::new(3.into(), 2.into())), 1);
        assert_eq!(p.count_roots_above(&BigRational::from_integer((-4).into())), 4);
    }

    #[test]
    fn isolating_intervals_separate_close_roots() {
        // 1000 t^2 - 1999 t + 999 = (t - 1)(1000 t - 999)
        let p = UniPoly::from_ints(&[999, -1999, 1000]);
        let iv = p.isolate_real_roots();
        assert_eq!(iv.len(), 2);
        assert!(iv[0].1 <= iv[1].0);
    }

    #[test]
    fn rational_roots_via_monic_transform() {
        // (2t - 1)(3t + 4) t
        let p = UniPoly::from_ints(&[0, -4, 5, 6]);
        let r = p.rational_roots();
        assert_eq!(
            r,
            vec![
                BigRational::new((-4).into(), 3.into()),
                BigRational::zero(),
                BigRational::new(1.into(), 2.into())
            ]
        );
    }

    #[test]
    fn huge_constant_falls_back_to_isolation() {
        // (t - 10^13)(t + 7)
        let big = 10_000_000_000_000i64;
        let p = UniPoly::from_ints(&[-7 * big, 7 - big, 1]);
        assert!(p.integer_roots_by_divisors().is_none());
        assert_eq!(p.integer_roots(), ints(&[-7, big]));
    }

    #[test]
    fn divisor_listing() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }
}
