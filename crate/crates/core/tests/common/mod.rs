#![allow(dead_code)]

use std::collections::BTreeMap;

use dprefix_core::{parse, Monomial, Poly, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p(s: &str) -> Poly {
    parse(s).unwrap()
}

pub fn var(name: &str) -> Var {
    Var::new(name)
}

pub fn int(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

/// `n / d` with `|n| <= num` and `1 <= d <= den`.
pub fn rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> BigRational {
    BigRational::new(rng.gen_range(-num..=num).into(), rng.gen_range(1..=den).into())
}

/// Sparse random polynomial with up to `terms` terms of total degree at most
/// `deg` in `vars`.
pub fn random_poly(rng: &mut ChaCha8Rng, vars: &[Var], deg: u32, terms: usize, num: i64, den: i64) -> Poly {
    let n = rng.gen_range(1..=terms);
    let mut acc = Poly::zero();
    for _ in 0..n {
        let mut left = rng.gen_range(0..=deg);
        let mut pairs = Vec::new();
        for v in vars {
            let e = rng.gen_range(0..=left);
            left -= e;
            pairs.push((v.clone(), e));
        }
        let c = rational(rng, num, den);
        acc = &acc + &Poly::monomial(c, Monomial::from_pairs(pairs));
    }
    acc
}

/// Random polynomial in `x` with integer coefficients in `-c..=c`.
pub fn random_int_poly_x(rng: &mut ChaCha8Rng, deg: u32, c: i64) -> Poly {
    let x = var("x");
    (0..=deg).fold(Poly::zero(), |acc, k| {
        let term = Poly::var(x.clone()).pow(k).scale(&int(rng.gen_range(-c..=c)));
        &acc + &term
    })
}

pub fn at(pairs: &[(&str, BigRational)]) -> BTreeMap<Var, BigRational> {
    pairs.iter().map(|(n, q)| (var(n), q.clone())).collect()
}

/// Positive integer `y` with `p(x, y) = 0` at the given `x`, by exact root search.
pub fn has_positive_root(p: &Poly, x: u64) -> bool {
    let u = p.evaluate_at(&var("x"), &int(x as i64));
    if u.is_zero() {
        return true;
    }
    u.to_univariate(&var("y")).unwrap().integer_roots().iter().any(|r: &BigInt| r.is_positive())
}
