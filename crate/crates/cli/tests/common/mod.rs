#![allow(dead_code)]

use std::process::Command;

#[derive(Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn invoke(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_dprefix")).args(args).output().expect("spawn dprefix");
    Output {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn schema() -> jsonschema::Validator {
    let text = include_str!("../../schema/output.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

pub struct Fixture {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub fn fixtures() -> Vec<Fixture> {
    let fx = |name, args, exit| Fixture { name, args, exit };
    vec![
        fx("decide-ae-diagonal.json", &["decide-ae", "y - x", "--json"], 0),
        fx("decide-ae-half.json", &["decide-ae", "2*y - x", "--json"], 1),
        fx("decide-eae-mordell.json", &["decide-eae", "y^2 - x^3 - v", "--json"], 1),
        fx(
            "decide-eae-witness.json",
            &["decide-eae", "(2*y - x)*(2*y - x - 1) + (v - 2)*(y^3 + x^3 + 1)", "--json"],
            0,
        ),
        fx("decide-eae-low-degree.json", &["decide-eae", "2*y - x - v", "--json"], 2),
        fx("decide-eeae-case-two.json", &["decide-eeae", "y^2 - x^3 - u^2 - v^2", "--bound", "5", "--json"], 1),
        fx("factor-roots.json", &["factor-roots", "(y - x)^2*(2*y - x^2)*(y^2 + 1)", "--json"], 0),
        fx("genus-generic.json", &["genus-generic", "y^2 - x^3 - x - 1", "--json"], 0),
        fx("infinity-points.json", &["infinity-points", "(y - x)*(y + x)*(y - 2*x) + x*y + 1", "--json"], 0),
        fx("classify-siegel.json", &["classify-siegel", "y^2 - x^3 - 2", "--json"], 0),
        fx("search-points.json", &["search-points", "x^2 + y^2 - 25", "--domain", "int", "--bound", "5", "--json"], 0),
        fx("growth-probe.txt", &["growth-probe", "x*y - 12", "--heights", "5,12,100"], 0),
    ]
}
