//! JSON documents and text summaries for each command.

use std::collections::BTreeMap;
use std::fmt::Write;

use dprefix_core::classify::{InfinityPoint, InfinityReport, SiegelClassification};
use dprefix_core::jst::{JstFailure, JstVerdict};
use dprefix_core::newton::{face_polynomials, newton_polygon, HullShape, NewtonPolygon};
use dprefix_core::prefix::{Case, PrefixVerdict};
use dprefix_core::qx_roots::{positive_leading_roots, QxRootsResult};
use dprefix_core::search::{Domain, PointSearchReport};
use dprefix_core::verdict::VerdictValue;
use dprefix_core::{print, Poly, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    True,
    False,
    Inconclusive,
    Completed,
}

impl From<VerdictValue> for Outcome {
    fn from(v: VerdictValue) -> Self {
        match v {
            VerdictValue::True => Outcome::True,
            VerdictValue::False => Outcome::False,
            VerdictValue::Inconclusive => Outcome::Inconclusive,
        }
    }
}

pub struct Rendered {
    pub outcome: Outcome,
    /// `verdict` for deciders, `report` for tools.
    kind: &'static str,
    body: Value,
    certificate: Value,
    /// Text summary, one line each.
    lines: Vec<String>,
    certificate_lines: Vec<String>,
}

impl Rendered {
    pub fn json(&self, command: &str, input: &Poly, timing_ms: Option<f64>) -> String {
        let mut doc = serde_json::Map::new();
        doc.insert("command".into(), json!(command));
        doc.insert("input".into(), json!(print(input)));
        doc.insert(self.kind.into(), self.body.clone());
        doc.insert("certificate".into(), self.certificate.clone());
        doc.insert("timing_ms".into(), json!(timing_ms));
        serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable")
    }

    pub fn human(&self, command: &str, input: &Poly, timing_ms: Option<f64>) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{command}: {}", print(input));
        for line in &self.lines {
            let _ = writeln!(s, "{line}");
        }
        if !self.certificate_lines.is_empty() {
            let _ = writeln!(s, "certificate:");
            for line in &self.certificate_lines {
                let _ = writeln!(s, "  {line}");
            }
        }
        if let Some(t) = timing_ms {
            let _ = writeln!(s, "time: {t:.3} ms");
        }
        s
    }
}

fn rat(q: &BigRational) -> Value {
    json!(q.to_string())
}

fn poly(p: &Poly) -> Value {
    json!(print(p))
}

fn polys(ps: &[Poly]) -> Value {
    Value::Array(ps.iter().map(poly).collect())
}

fn assignment(w: &BTreeMap<Var, BigInt>) -> Value {
    Value::Object(w.iter().map(|(v, k)| (v.to_string(), json!(k.to_string()))).collect())
}

fn assignment_text(w: &BTreeMap<Var, BigInt>) -> String {
    w.iter().map(|(v, k)| format!("{v} = {k}")).collect::<Vec<_>>().join(", ")
}

fn verdict_body(value: VerdictValue, witness: Option<&BTreeMap<Var, BigInt>>, reason: Option<&str>) -> Value {
    json!({
        "value": value.as_str(),
        "witness": witness.map(assignment),
        "reason": reason,
    })
}

fn verdict_lines(value: VerdictValue, witness: Option<&BTreeMap<Var, BigInt>>, reason: Option<&str>) -> Vec<String> {
    let mut lines = vec![format!("verdict: {value}")];
    if let Some(w) = witness {
        lines.push(format!("witness: {}", assignment_text(w)));
    }
    if let Some(r) = reason {
        lines.push(format!("reason: {r}"));
    }
    lines
}

pub fn jst(v: &JstVerdict) -> Rendered {
    let c = &v.certificate;
    let (failure, counterexample, residue) = match &c.failure {
        None => (None, None, None),
        Some(JstFailure::NoBranches { counterexample }) => (Some("no_branches"), *counterexample, None),
        Some(JstFailure::SmallXCounterexample(x)) => (Some("small_x_counterexample"), Some(*x), None),
        Some(JstFailure::UncoveredResidue { residue, counterexample }) => {
            (Some("uncovered_residue"), *counterexample, Some(*residue))
        }
    };
    let certificate = json!({
        "identically_zero": c.identically_zero,
        "branches": c.branch_roots.iter().map(|b| json!({
            "root": poly(&b.root),
            "sum_of_squares": rat(&b.sum_of_squares),
            "cauchy_bound": rat(&b.cauchy_bound),
            "safe_bound": rat(&b.safe_bound),
        })).collect::<Vec<_>>(),
        "excluded_roots": polys(&c.excluded_roots),
        "sum_of_squares_threshold": c.sum_of_squares_threshold.as_ref().map(rat),
        "threshold_x0": c.threshold_x0,
        "small_x_witnesses": c.small_x_witnesses.iter().map(|(x, y)| json!({"x": x, "y": y.to_string()})).collect::<Vec<_>>(),
        "modulus": c.modulus_d,
        "scaled_branches": polys(&c.scaled_branches),
        "covered_residues": c.covered_residues,
        "failure": failure,
        "counterexample": counterexample,
        "uncovered_residue": residue,
    });
    let mut cl = Vec::new();
    if c.identically_zero {
        cl.push("polynomial is identically zero".to_string());
    }
    for b in &c.branch_roots {
        cl.push(format!("branch y = {} (safe bound {})", b.root, b.safe_bound));
    }
    for r in &c.excluded_roots {
        cl.push(format!("excluded root y = {r} (leading coefficient not positive)"));
    }
    if !c.branch_roots.is_empty() {
        cl.push(format!("threshold x0 = {}, modulus d = {}", c.threshold_x0, c.modulus_d));
        cl.push(format!("small-x witnesses: {}", c.small_x_witnesses.len()));
    }
    match (failure, counterexample, residue) {
        (Some(_), _, Some(r)) => {
            cl.push(format!("uncovered residue {r} mod {}", c.modulus_d));
            if let Some(x) = counterexample {
                cl.push(format!("no positive y at x = {x}"));
            }
        }
        (Some(_), Some(x), None) => cl.push(format!("no positive y at x = {x}")),
        (Some(kind), None, None) => cl.push(kind.replace('_', " ")),
        _ => {}
    }
    Rendered {
        outcome: v.value.into(),
        kind: "verdict",
        body: verdict_body(v.value, v.witness.as_ref(), v.reason.as_deref()),
        certificate,
        lines: verdict_lines(v.value, v.witness.as_ref(), v.reason.as_deref()),
        certificate_lines: cl,
    }
}

fn case_name(c: Case) -> &'static str {
    match c {
        Case::I => "I",
        Case::II => "II",
        Case::III => "III",
    }
}

pub fn prefix(v: &PrefixVerdict) -> Rendered {
    let c = &v.certificate;
    let point = |p: &[BigInt]| -> BTreeMap<Var, BigInt> { c.parameters.iter().cloned().zip(p.iter().cloned()).collect() };
    let certificate = json!({
        "parameters": c.parameters.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "generic_degree": c.generic_degree,
        "content": poly(&c.content),
        "delta": poly(&c.delta),
        "exhaustive": c.exhaustive,
        "shear": c.shear,
        "case": c.case.map(case_name),
        "checked": c.checked.iter().map(|(p, val)| json!({
            "point": assignment(&point(p)),
            "verdict": val.as_str(),
        })).collect::<Vec<_>>(),
        "search_bound": c.search_bound,
    });
    let mut cl = vec![
        format!("generic degree {}", c.generic_degree),
        format!("content {}", c.content),
        format!("degeneration polynomial {}", c.delta),
        format!("exhaustive: {}", c.exhaustive),
    ];
    if let Some(s) = c.shear {
        cl.push(format!("shear y -> y + {s}*x"));
    }
    if let Some(case) = c.case {
        cl.push(format!("case {}", case_name(case)));
    }
    if let Some(b) = c.search_bound {
        cl.push(format!("search bound {b}"));
    }
    for (p, val) in &c.checked {
        cl.push(format!("fiber at {}: {val}", assignment_text(&point(p))));
    }
    Rendered {
        outcome: v.value.into(),
        kind: "verdict",
        body: verdict_body(v.value, v.witness.as_ref(), v.reason.as_deref()),
        certificate,
        lines: verdict_lines(v.value, v.witness.as_ref(), v.reason.as_deref()),
        certificate_lines: cl,
    }
}

pub fn factor_roots(f: &Poly, r: &QxRootsResult) -> Rendered {
    let positive = positive_leading_roots(r);
    let reconstruction = r.reconstruct(&Var::new("y"));
    let matches = &reconstruction == f;
    let body = json!({
        "roots": r.roots.iter().map(|q| json!({
            "root": poly(&q.root),
            "multiplicity": q.multiplicity,
            "positive_leading": positive.contains(&q.root),
        })).collect::<Vec<_>>(),
        "cofactor": poly(&r.cofactor),
    });
    let mut lines: Vec<String> =
        r.roots.iter().map(|q| format!("root y = {} (multiplicity {})", q.root, q.multiplicity)).collect();
    if r.roots.is_empty() {
        lines.push("no roots in Q[x]".into());
    }
    lines.push(format!("cofactor: {}", r.cofactor));
    Rendered {
        outcome: Outcome::Completed,
        kind: "report",
        body,
        certificate: json!({
            "reconstruction": poly(&reconstruction),
            "reconstruction_matches": matches,
        }),
        lines,
        certificate_lines: vec![format!("cofactor * product = {reconstruction}, equal to input: {matches}")],
    }
}

fn shape_name(s: HullShape) -> &'static str {
    match s {
        HullShape::Point => "point",
        HullShape::Segment => "segment",
        HullShape::Polygon => "polygon",
    }
}

fn pairs(ps: &[(i64, i64)]) -> Value {
    Value::Array(ps.iter().map(|&(a, b)| json!([a, b])).collect())
}

fn polygon_of(f: &Poly) -> dprefix_core::Result<NewtonPolygon> {
    newton_polygon(f, &Var::new("x"), &Var::new("y"))
}

pub fn genus_generic(f: &Poly) -> dprefix_core::Result<Rendered> {
    let polygon = polygon_of(f)?;
    let (count, interior) = polygon.interior_lattice_points();
    let faces = face_polynomials(f, &polygon, &Var::new("x"), &Var::new("y"));
    let body = json!({
        "shape": shape_name(polygon.shape()),
        "vertices": pairs(polygon.vertices()),
        "edges": faces.iter().map(|(e, face)| json!({
            "start": [e.start.0, e.start.1],
            "end": [e.end.0, e.end.1],
            "inner_normal": [e.inner_normal.0, e.inner_normal.1],
            "face": poly(face),
        })).collect::<Vec<_>>(),
        "interior_count": count,
        "interior_points": pairs(&interior),
    });
    let (area2, boundary) = (polygon.double_area(), polygon.boundary_lattice_points());
    let pick = polygon.shape() != HullShape::Polygon || area2 == 2 * count as i128 + boundary as i128 - 2;
    let vertices: Vec<String> = polygon.vertices().iter().map(|(a, b)| format!("({a}, {b})")).collect();
    let mut lines = vec![
        format!("generic genus: {count}"),
        format!("hull ({}): {}", shape_name(polygon.shape()), vertices.join(" ")),
    ];
    for (e, face) in &faces {
        lines.push(format!("edge {:?} -> {:?}: {face}", e.start, e.end));
    }
    Ok(Rendered {
        outcome: Outcome::Completed,
        kind: "report",
        body,
        certificate: json!({
            "double_area": area2.to_string(),
            "boundary_points": boundary,
            "pick_identity": pick,
        }),
        lines,
        certificate_lines: vec![format!("2 * area = {area2}, boundary points = {boundary}, Pick's identity: {pick}")],
    })
}

fn infinity_points_json(r: &InfinityReport) -> Value {
    Value::Array(
        r.points
            .iter()
            .map(|p| match p {
                InfinityPoint::Rational { slope } => json!({"kind": "rational", "slope": rat(slope)}),
                InfinityPoint::Algebraic { polynomial, count } => {
                    json!({"kind": "algebraic", "polynomial": poly(polynomial), "count": count})
                }
                InfinityPoint::Vertical => json!({"kind": "vertical"}),
            })
            .collect(),
    )
}

fn infinity_text(p: &InfinityPoint) -> String {
    match p {
        InfinityPoint::Rational { slope } => format!("(1 : {slope} : 0)"),
        InfinityPoint::Algebraic { polynomial, count } => format!("(1 : t : 0) for the {count} roots of {polynomial}"),
        InfinityPoint::Vertical => "(0 : 1 : 0)".into(),
    }
}

pub fn infinity(r: &InfinityReport) -> Rendered {
    let body = json!({
        "leading_form": poly(&r.leading_form),
        "distinct_points": r.distinct_points,
        "points": infinity_points_json(r),
    });
    let mut lines = vec![format!("distinct points at infinity: {}", r.distinct_points)];
    lines.extend(r.points.iter().map(infinity_text));
    Rendered {
        outcome: Outcome::Completed,
        kind: "report",
        body,
        certificate: json!({ "leading_form_degree": r.leading_form.total_degree() }),
        lines,
        certificate_lines: vec![format!("leading form {} of degree {}", r.leading_form, r.leading_form.total_degree())],
    }
}

pub fn siegel(f: &Poly, c: &SiegelClassification) -> dprefix_core::Result<Rendered> {
    let polygon = polygon_of(f)?;
    let (_, interior) = polygon.interior_lattice_points();
    let body = json!({
        "value": c.value.as_str(),
        "genus_upper_bound": c.genus_upper_bound,
        "infinity_count": c.infinity_count,
        "nondegenerate": c.nondegenerate,
    });
    let lines = vec![
        format!("classification: {}", c.value.as_str()),
        format!("genus upper bound: {}", c.genus_upper_bound),
        format!("points at infinity: {}", c.infinity_count),
        format!("nondegenerate: {}", c.nondegenerate),
    ];
    Ok(Rendered {
        outcome: Outcome::Completed,
        kind: "report",
        body,
        certificate: json!({
            "newton_vertices": pairs(polygon.vertices()),
            "interior_points": pairs(&interior),
        }),
        lines,
        certificate_lines: vec![format!("interior lattice points {:?}", interior)],
    })
}

pub fn points(f: &Poly, r: &PointSearchReport) -> Rendered {
    let vanish = r.points.iter().all(|&(a, b)| {
        let at = [("x", a), ("y", b)]
            .into_iter()
            .map(|(n, k)| (Var::new(n), BigRational::from_integer(k.into())))
            .collect();
        f.eval(&at).is_some_and(|t| t == BigRational::from_integer(0.into()))
    });
    let body = json!({
        "domain": r.domain.as_str(),
        "height_bound": r.height_bound,
        "points": pairs(&r.points),
        "exact_card": r.exact_card_bounded,
        "big": r.big_bounded,
        "saturated": r.saturated,
    });
    let shown: Vec<String> = r.points.iter().take(50).map(|(a, b)| format!("({a}, {b})")).collect();
    let mut lines = vec![
        format!("domain: {}, height bound {}", r.domain.as_str(), r.height_bound),
        format!("points: {}", r.exact_card_bounded),
        format!("largest coordinate: {}", r.big_bounded),
        format!("saturated: {}", r.saturated),
    ];
    if !shown.is_empty() {
        let more = if r.points.len() > shown.len() { " ..." } else { "" };
        lines.push(format!("{}{more}", shown.join(" ")));
    }
    Rendered {
        outcome: Outcome::Completed,
        kind: "report",
        body,
        certificate: json!({ "all_points_vanish": vanish }),
        lines,
        certificate_lines: vec![format!("every point re-evaluates to zero: {vanish}")],
    }
}

pub fn growth(domain: Domain, counts: &[(u64, u64)]) -> Rendered {
    let body = json!({
        "domain": domain.as_str(),
        "counts": counts.iter().map(|(h, n)| json!({"height": h, "count": n})).collect::<Vec<_>>(),
    });
    let mut lines = vec![format!("domain: {}", domain.as_str())];
    lines.extend(counts.iter().map(|(h, n)| format!("H = {h}: {n}")));
    let top = counts.last().map(|c| c.0);
    Rendered {
        outcome: Outcome::Completed,
        kind: "report",
        body,
        certificate: json!({ "enumerated_height": top }),
        lines,
        certificate_lines: top.map(|h| format!("single enumeration at H = {h}")).into_iter().collect(),
    }
}
