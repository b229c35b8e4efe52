use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::poly::Var;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictValue {
    True,
    False,
    Inconclusive,
}

impl VerdictValue {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictValue::True => "TRUE",
            VerdictValue::False => "FALSE",
            VerdictValue::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for VerdictValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a decider together with the evidence behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<C> {
    pub value: VerdictValue,
    /// Values for the existentially quantified parameters, when TRUE.
    pub witness: Option<BTreeMap<Var, BigInt>>,
    pub certificate: C,
    /// Why no exact answer was reached, when INCONCLUSIVE.
    pub reason: Option<String>,
}

impl<C> Verdict<C> {
    pub fn new(value: VerdictValue, certificate: C) -> Self {
        Verdict { value, witness: None, certificate, reason: None }
    }

    pub fn inconclusive(certificate: C, reason: impl Into<String>) -> Self {
        Verdict {
            value: VerdictValue::Inconclusive,
            witness: None,
            certificate,
            reason: Some(reason.into()),
        }
    }
}
