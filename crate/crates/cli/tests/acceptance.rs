//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p dprefix-cli --test acceptance`. Exits nonzero if
//! any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod algebra;
mod common;

use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use algebra::{at, int, p, random_poly, rational, rng, var};
use dprefix_core::classify::genus_zero_condition_probe;
use dprefix_core::jst::{covering_invariance_probe, decide_forall_exists, JstVerdict};
use dprefix_core::newton::{newton_polygon, HullShape, LatticePoint, NewtonPolygon};
use dprefix_core::poly::content_and_primitive;
use dprefix_core::prefix::{brute_force_degenerate_fibers, candidate_locus_1param, decide_exists_forall_exists};
use dprefix_core::qx_roots::roots_in_qx;
use dprefix_core::search::{enumerate_points, forall_exists_oracle, growth_probe, Domain};
use dprefix_core::verdict::VerdictValue;
use dprefix_core::{parse, print, Poly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const ORACLE_X: u64 = 200;
const JST_TIME_LIMIT: Duration = Duration::from_secs(60);
const GENUS_TIME_LIMIT: Duration = Duration::from_secs(10);
const PREFIX_TIME_LIMIT: Duration = Duration::from_secs(120);
const DOUBLE_LOOP_V: i64 = 50;
const DOUBLE_LOOP_X: i64 = 30;
const DOUBLE_LOOP_Y: i64 = 1000;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    check(t < limit, || format!("took {:.1} s, limit {} s", t.as_secs_f64(), limit.as_secs()))
}

// Criteria 1 and 4

const COFACTORS: [&str; 4] = ["y^2 + x + 1", "y^2 - 2*x^2", "y^2 + x^2 + 3", "3*y^2 - x^2"];

fn jst_instance(r: &mut ChaCha8Rng) -> Poly {
    let y = Poly::var(var("y"));
    let x = Poly::var(var("x"));
    let mut acc = Poly::one();
    if r.gen_bool(0.35) {
        let d = r.gen_range(2..=3);
        let shift = r.gen_range(-3..=3);
        for k in 0..d {
            let branch = (&x + &Poly::int(shift + k)).scale(&BigRational::new(1.into(), d.into()));
            acc = &acc * &(&y - &branch);
        }
    } else {
        for _ in 0..r.gen_range(1..=3) {
            let (a, b, c) = (r.gen_range(-1..=3), r.gen_range(-6..=6), r.gen_range(1..=4));
            let quad = if r.gen_bool(0.2) { x.pow(2) } else { Poly::zero() };
            let branch = (&(&quad + &x.scale(&int(a))) + &Poly::int(b)).scale(&BigRational::new(1.into(), c.into()));
            acc = &acc * &(&y - &branch);
        }
    }
    if r.gen_bool(0.4) {
        acc = &acc * &p(COFACTORS[r.gen_range(0..COFACTORS.len())]);
    }
    acc
}

fn jst_instances() -> Vec<Poly> {
    let mut r = rng(51);
    (0..100).map(|_| jst_instance(&mut r)).collect()
}

fn jst_oracle_equivalence(verdicts: &[(Poly, JstVerdict)], elapsed: Duration) -> Outcome {
    let mut mismatches = Vec::new();
    let (mut t, mut f) = (0, 0);
    for (inst, v) in verdicts {
        let (oracle, _) = forall_exists_oracle(inst, ORACLE_X).map_err(|e| e.to_string())?;
        let agree = match v.value {
            VerdictValue::True => {
                t += 1;
                oracle
            }
            VerdictValue::False => {
                f += 1;
                !oracle
            }
            VerdictValue::Inconclusive => false,
        };
        if !agree {
            mismatches.push(format!("{inst}: {}", v.value));
        }
    }
    check(mismatches.is_empty(), || format!("{} mismatches, first {}", mismatches.len(), mismatches[0]))?;
    check(elapsed < JST_TIME_LIMIT, || format!("took {:.1} s", elapsed.as_secs_f64()))?;
    Ok(format!("100 instances, {t} TRUE, {f} FALSE, 0 mismatches at x <= {ORACLE_X}"))
}

fn d_prime_invariance(verdicts: &[(Poly, JstVerdict)]) -> Outcome {
    let mut probed = 0;
    for (inst, v) in verdicts {
        let c = &v.certificate;
        if c.modulus_d == 0 {
            continue;
        }
        probed += 1;
        for m in [1, 2, 3, 5] {
            check(covering_invariance_probe(&c.scaled_branches, c.modulus_d, m), || format!("{inst}, m = {m}"))?;
        }
    }
    Ok(format!("{probed} instances with branches, m in {{1, 2, 3, 5}}"))
}

// Criterion 2

fn discriminant_formula() -> Outcome {
    let mut r = rng(62);
    let mut zeros = 0;
    for k in 0..200 {
        let mut a: [i64; 4] = std::array::from_fn(|_| r.gen_range(-20..=20));
        if k % 10 == 0 {
            // a3 = -3 t^2, a2 = 2 t^3, a4 = 1 makes 4 a3^3 + 27 a2^2 a4 vanish.
            let t = r.gen_range(-2..=2);
            a = [a[0], 2 * t * t * t, -3 * t * t, 1];
        }
        let formula = a[0] * a[3] * (4 * a[2].pow(3) + 27 * a[1].pow(2) * a[3]) == 0;
        zeros += usize::from(formula);
        check(genus_zero_condition_probe(a) == formula, || format!("disagreement at {a:?}"))?;
    }
    Ok(format!("200 quadruples, {zeros} on the vanishing locus, 0 disagreements"))
}

// Criteria 3 and 8

fn random_support(r: &mut ChaCha8Rng) -> Vec<LatticePoint> {
    let n = r.gen_range(1..=12);
    (0..n).map(|_| (r.gen_range(0..=20), r.gen_range(0..=20))).collect()
}

fn supports() -> Vec<Vec<LatticePoint>> {
    let mut r = rng(21);
    (0..500).map(|_| random_support(&mut r)).collect()
}

fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Interior points from the supporting lines of the raw support: a point is
/// interior when it lies strictly on the inner side of every line through two
/// support points that has all of them on one side.
fn brute_interior(support: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut lines = Vec::new();
    for &s in support {
        for &t in support {
            if s == t {
                continue;
            }
            let sides: Vec<i64> = support.iter().map(|&q| cross(s, t, q)).collect();
            if sides.iter().all(|&c| c >= 0) && sides.iter().any(|&c| c > 0) {
                lines.push((s, t));
            }
        }
    }
    if lines.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for a in 0..=20 {
        for b in 0..=20 {
            if lines.iter().all(|&(s, t)| cross(s, t, (a, b)) > 0) {
                out.push((a, b));
            }
        }
    }
    out
}

fn generic_genus_count() -> Outcome {
    let start = Instant::now();
    let f = p("y^2 - x^3 - 2*x - 3");
    let elliptic = newton_polygon(&f, &var("x"), &var("y")).map_err(|e| e.to_string())?;
    let (count, _) = elliptic.interior_lattice_points();
    check(count == 1, || format!("elliptic family has {count} interior points"))?;
    for support in supports() {
        let poly = NewtonPolygon::from_support(support.clone()).map_err(|e| e.to_string())?;
        let (count, points) = poly.interior_lattice_points();
        let brute = brute_interior(&support);
        check(count as usize == brute.len() && points == brute, || format!("support {support:?}"))?;
    }
    within(start, GENUS_TIME_LIMIT)?;
    Ok(format!("elliptic family 1, 500 supports agree, {:.2} s", start.elapsed().as_secs_f64()))
}

fn qx_instance(r: &mut ChaCha8Rng) -> Poly {
    let x = var("x");
    let y = Poly::var(var("y"));
    let mut acc = if r.gen_bool(0.6) {
        let s = ["x^2 + 1", "x + 2", "x^2 - 3", "2*x - 1"][r.gen_range(0..4)];
        &p("y^2").scale(&int(r.gen_range(1..=3))) - &(&p("x") * &p(s))
    } else {
        Poly::int(r.gen_range(1..=5))
    };
    for _ in 0..r.gen_range(1..=3) {
        let deg = r.gen_range(0..=3);
        let branch =
            (0..=deg).fold(Poly::zero(), |acc, k| &acc + &Poly::var(x.clone()).pow(k).scale(&rational(r, 5, 4)));
        acc = &acc * &(&y - &branch).pow(r.gen_range(1..=2));
    }
    acc
}

fn exact_identities() -> Outcome {
    let mut polygons = 0;
    for support in supports() {
        let poly = NewtonPolygon::from_support(support.clone()).map_err(|e| e.to_string())?;
        if poly.shape() != HullShape::Polygon {
            continue;
        }
        polygons += 1;
        let (i, b) = (poly.interior_lattice_points().0 as i128, poly.boundary_lattice_points() as i128);
        check(poly.double_area() == 2 * i + b - 2, || format!("Pick fails on {support:?}"))?;
    }
    let mut r = rng(41);
    let (x, y) = (var("x"), var("y"));
    for _ in 0..200 {
        let f = qx_instance(&mut r);
        let res = roots_in_qx(&f, &x, &y).map_err(|e| e.to_string())?;
        check(res.reconstruct(&y) == f, || format!("reconstruction fails on {f}"))?;
    }
    let mut r = rng(7);
    let (params, all, xy) = ([var("u"), var("v")], [var("u"), var("v"), x.clone(), y.clone()], [x, y]);
    let mut products = 0;
    for _ in 0..500 {
        let f = &random_poly(&mut r, &params, 2, 3, 6, 3) * &random_poly(&mut r, &all, 3, 5, 6, 3);
        if f.is_zero() {
            continue;
        }
        products += 1;
        let (content, prim) = content_and_primitive(&f, &xy).map_err(|e| e.to_string())?;
        check(&content * &prim == f, || format!("content * primitive differs for {f}"))?;
    }
    Ok(format!("Pick on {polygons} polygons, 200 reconstructions, {products} content splits"))
}

// Criteria 5 and 6

const FAMILIES: [&str; 10] = [
    "y^2 - x^3 - v",
    "y^2 - x*(x - 1)*(x - v)",
    "(2*y - x)*(2*y - x - 1) + (v - 2)*(y^3 + x^3 + 1)",
    "(v - 1)*(y^2 - x^3 - 1)",
    "y^3 - x^3 - v*x - 1",
    "(y - x)*(y - 2*x) + (v - 3)*(x^3 + 2)",
    "y^3 + x^3 - v",
    "x*y^2 - x^3 - v*y",
    "y - x^3 - v",
    "(y - x^2)*(y - 2) + (v - 4)*(y^3 - x)",
];

/// `forall x <= 30 exists 1 <= y <= 1000` on the fiber over `v`.
fn fiber_passes(f: &Poly, v: i64) -> bool {
    let fiber = f.evaluate_at(&var("v"), &int(v));
    (1..=DOUBLE_LOOP_X).all(|a| {
        let u = fiber.evaluate_at(&var("x"), &int(a));
        u.is_zero()
            || u.to_univariate(&var("y"))
                .unwrap()
                .integer_roots()
                .iter()
                .any(|r| r.is_positive() && *r <= BigInt::from(DOUBLE_LOOP_Y))
    })
}

fn prefix_fixtures() -> Outcome {
    let start = Instant::now();
    let expected = [
        ("y^2 - x^3 - v", VerdictValue::False, None),
        ("y^2 - x*(x - 1)*(x - v)", VerdictValue::False, None),
        ("(2*y - x)*(2*y - x - 1) + (v - 2)*(y^3 + x^3 + 1)", VerdictValue::True, Some(2)),
        ("2*y - x - v", VerdictValue::Inconclusive, None),
        ("y^2 - x - v", VerdictValue::Inconclusive, None),
        ("x*y - v", VerdictValue::Inconclusive, None),
        ("y^2 - x^2 - v", VerdictValue::Inconclusive, None),
    ];
    for (s, value, witness) in expected {
        let f = p(s);
        let verdict = decide_exists_forall_exists(&f).map_err(|e| e.to_string())?;
        let w = verdict.witness.as_ref().map(|w| w[&var("v")].clone());
        check(verdict.value == value && w == witness.map(BigInt::from), || {
            format!("{s}: {} with witness {w:?}", verdict.value)
        })?;
        let passing: Vec<i64> = (1..=DOUBLE_LOOP_V).filter(|&k| fiber_passes(&f, k)).collect();
        match value {
            VerdictValue::False => check(passing.is_empty(), || format!("{s}: double loop passes at {passing:?}"))?,
            VerdictValue::True => {
                let k = witness.unwrap();
                check(passing.contains(&k), || format!("{s}: double loop rejects v = {k}"))?;
            }
            VerdictValue::Inconclusive => {}
        }
    }
    within(start, PREFIX_TIME_LIMIT)?;
    Ok(format!("7 fixtures, double loop v <= {DOUBLE_LOOP_V}, x <= {DOUBLE_LOOP_X}, {:.1} s", start.elapsed().as_secs_f64()))
}

fn candidate_soundness() -> Outcome {
    let mut checked = 0;
    let mut skipped = Vec::new();
    for s in FAMILIES {
        let f = p(s);
        let locus = candidate_locus_1param(&f).map_err(|e| e.to_string())?;
        if !locus.exhaustive {
            skipped.push(s);
            continue;
        }
        checked += 1;
        for k in brute_force_degenerate_fibers(&f, 50, 3) {
            let k = BigInt::from(k);
            check(locus.candidates.contains(&k) || locus.content_roots.contains(&k), || {
                format!("{s}: degenerate fiber at v = {k} outside the locus")
            })?;
        }
    }
    Ok(format!("{checked} exhaustive families clean over v <= 50, non-exhaustive: {skipped:?}"))
}

// Criterion 7

fn point_search() -> Outcome {
    let nat = Domain::PositiveIntegers;
    let circle = p("x^2 + y^2 - 25");
    let r = enumerate_points(&circle, nat, 10).map_err(|e| e.to_string())?;
    check(r.points == [(3, 4), (4, 3)] && r.exact_card_bounded == 2 && r.big_bounded == 4, || {
        format!("circle gives {r:?}")
    })?;
    let hyperbola = p("x*y - 12");
    for h in [12, 20, 100, 1000] {
        let n = enumerate_points(&hyperbola, nat, h).map_err(|e| e.to_string())?.exact_card_bounded;
        check(n == 6, || format!("x*y - 12 has {n} points at H = {h}"))?;
    }
    let counts = growth_probe(&hyperbola, nat, &[5, 12, 100]).map_err(|e| e.to_string())?;
    check(counts == [(5, 2), (12, 6), (100, 6)], || format!("growth {counts:?}"))?;
    let mut total = 0;
    for (f, domain) in [(&circle, nat), (&circle, Domain::AllIntegers), (&hyperbola, Domain::AllIntegers)] {
        for (a, b) in enumerate_points(f, domain, 100).map_err(|e| e.to_string())?.points {
            total += 1;
            let value = f.eval(&at(&[("x", int(a)), ("y", int(b))])).unwrap();
            check(value.is_zero(), || format!("({a}, {b}) does not vanish on {f}"))?;
        }
    }
    Ok(format!("circle {{(3, 4), (4, 3)}}, x*y - 12 has 6 points for H >= 12, {total} points re-evaluated"))
}

// Criterion 9

fn roundtrip_and_golden() -> Outcome {
    let mut r = rng(11);
    let pool = [var("u"), var("v"), var("x"), var("y")];
    for _ in 0..1000 {
        let k = r.gen_range(1..=4);
        let vars: Vec<_> = pool.choose_multiple(&mut r, k).cloned().collect();
        let f = random_poly(&mut r, &vars, 6, 8, 100, 10);
        let text = print(&f);
        check(parse(&text).as_ref() == Ok(&f), || format!("round trip fails on {text}"))?;
    }
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let fixtures = common::fixtures();
    for fx in &fixtures {
        let (a, b) = (common::invoke(fx.args), common::invoke(fx.args));
        check(a == b, || format!("{}: runs differ", fx.name))?;
        check(a.code == fx.exit, || format!("{}: exit {} instead of {}", fx.name, a.code, fx.exit))?;
        let golden = fs::read_to_string(dir.join(fx.name)).map_err(|e| format!("{}: {e}", fx.name))?;
        check(a.stdout == golden, || format!("{}: differs from golden file", fx.name))?;
    }
    Ok(format!("1000 round trips, {} golden files byte-identical across two runs", fixtures.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let jst: Vec<(Poly, JstVerdict)> = jst_instances()
        .into_iter()
        .map(|f| {
            let v = decide_forall_exists(&f).expect("instances are valid input");
            (f, v)
        })
        .collect();
    let jst_time = start.elapsed();

    let criteria: Vec<Criterion> = vec![
        ("JST decider matches the brute-force oracle", Box::new(|| jst_oracle_equivalence(&jst, jst_time))),
        ("genus-zero probe matches a1 a4 (4 a3^3 + 27 a2^2 a4) = 0", Box::new(discriminant_formula)),
        ("interior lattice point counts", Box::new(generic_genus_count)),
        ("covering outcome invariant under modulus multiples", Box::new(|| d_prime_invariance(&jst))),
        ("exists-forall-exists fixtures", Box::new(prefix_fixtures)),
        ("candidate locus soundness", Box::new(candidate_soundness)),
        ("point search", Box::new(point_search)),
        ("Pick, reconstruction and content identities", Box::new(exact_identities)),
        ("parser round trip and golden CLI output", Box::new(roundtrip_and_golden)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} [{}] {name}: {detail}", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
