//! One-shot replay of the swap-involution computation on the K3 lattice,
//! checked against fixed expected values.

use std::sync::Arc;

use k3lat::involution::{equivariant_signature, tcr_decompose};
use k3lat::isometry::swap_permutation;
use k3lat::matrix::IntMatrix;
use k3lat::obstruction::{nielsen_certificate, StepName, StepValue};
use k3lat::{k3_lattice, Isometry, Lattice, Result};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::commands::{certificate_lines, verdict_text};
use crate::report::{RunReport, EXIT_CHECK_FAILED};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: &'static str, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.0.push(Check {
            name,
            pass: expected == actual,
            expected,
            actual,
        });
    }

    fn error(&mut self, name: &'static str, expected: impl ToString, err: impl ToString) {
        self.0.push(Check {
            name,
            expected: expected.to_string(),
            actual: format!("error: {}", err.to_string()),
            pass: false,
        });
    }
}

/// The K3 Gram matrix with one diagonal entry disturbed, for exercising the
/// failure path.
pub fn corrupted_k3() -> Lattice {
    let mut g = k3_lattice().gram().clone();
    g[(0, 0)] = BigInt::from(1);
    Lattice::new(g).expect("still nondegenerate")
}

fn swap_on(l: &Arc<Lattice>) -> Result<Isometry> {
    let n = l.rank();
    let mut m = IntMatrix::zeros(n, n);
    for j in 0..n {
        m[(swap_permutation(j), j)] = BigInt::from(1);
    }
    Isometry::new(l.clone(), m)
}

pub fn paper_verify(corrupt: bool) -> RunReport {
    let l = Arc::new(if corrupt { corrupted_k3() } else { k3_lattice() });
    let mut c = Checks::default();
    let mut r = RunReport::new("paper-verify", json!({ "lattice": "k3", "involution": "swap_k3" }));

    c.add("lattice.rank", 22, l.rank());
    c.add("lattice.signature", "(3,19,0)", l.signature());
    c.add("lattice.even", true, l.is_even());
    c.add("lattice.unimodular", true, l.is_unimodular());

    let neg = Isometry::negation(l.clone());
    match neg.in_gamma() {
        Ok(g) => c.add("gamma.neg_id", false, g),
        Err(e) => c.error("gamma.neg_id", false, e),
    }

    let swap = match swap_on(&l) {
        Ok(a) => {
            c.add("swap.isometry", true, true);
            a
        }
        Err(e) => {
            c.error("swap.isometry", true, e);
            return finish(r, c);
        }
    };
    match swap.in_gamma() {
        Ok(g) => c.add("gamma.swap", true, g),
        Err(e) => c.error("gamma.swap", true, e),
    }
    match tcr_decompose(&l, &swap) {
        Ok(p) => c.add("involution.tcr", "(0,0,11)", p),
        Err(e) => c.error("involution.tcr", "(0,0,11)", e),
    }
    match equivariant_signature(&l, &swap) {
        Ok(e) => c.add(
            "involution.equivariant_signature",
            "(3,8,-5)",
            format!("({},{},{})", e.b_plus_g, e.b_minus_g, e.sigma_g),
        ),
        Err(e) => c.error("involution.equivariant_signature", "(3,8,-5)", e),
    }
    let cert = match nielsen_certificate(&swap) {
        Ok(cert) => cert,
        Err(e) => {
            c.error("certificate", "NotRealizableAsSmoothInvolution", e);
            return finish(r, c);
        }
    };
    let get = |step, key| match cert.value(step, key) {
        Some(StepValue::Int(x)) => x.to_string(),
        Some(StepValue::Bool(x)) => x.to_string(),
        Some(StepValue::Text(x)) => x.clone(),
        None => "missing".to_string(),
    };
    c.add("parity.even_prediction", -8, get(StepName::Parity, "even_prediction"));
    c.add("parity.class", "odd", get(StepName::Parity, "parity"));
    c.add("fixed_points.k", 1, get(StepName::FixedPoints, "k"));
    c.add("fixed_points.total_genus", 0, get(StepName::FixedPoints, "total_genus"));
    c.add("surface.self_intersection", 6, get(StepName::GSignatureSquare, "self_intersection"));
    c.add("adjunction.violated", true, get(StepName::Adjunction, "violated"));
    c.add("verdict", "NotRealizableAsSmoothInvolution", verdict_text(&cert));
    for line in certificate_lines(&cert) {
        r.line(line);
    }
    r.set("certificate", &cert);
    finish(r, c)
}

/// Every check in report order, with its expected value.
const EXPECTED: [(&str, &str); 16] = [
    ("lattice.rank", "22"),
    ("lattice.signature", "(3,19,0)"),
    ("lattice.even", "true"),
    ("lattice.unimodular", "true"),
    ("gamma.neg_id", "false"),
    ("swap.isometry", "true"),
    ("gamma.swap", "true"),
    ("involution.tcr", "(0,0,11)"),
    ("involution.equivariant_signature", "(3,8,-5)"),
    ("parity.even_prediction", "-8"),
    ("parity.class", "odd"),
    ("fixed_points.k", "1"),
    ("fixed_points.total_genus", "0"),
    ("surface.self_intersection", "6"),
    ("adjunction.violated", "true"),
    ("verdict", "NotRealizableAsSmoothInvolution"),
];

fn finish(mut r: RunReport, mut c: Checks) -> RunReport {
    for (name, expected) in EXPECTED {
        if !c.0.iter().any(|x| x.name == name) {
            c.0.push(Check {
                name,
                expected: expected.to_owned(),
                actual: "not computed".to_owned(),
                pass: false,
            });
        }
    }
    let mut lines = Vec::new();
    for ch in &c.0 {
        let tag = if ch.pass { "PASS" } else { "FAIL" };
        if ch.pass {
            lines.push(format!("{tag} {}: {}", ch.name, ch.actual));
        } else {
            lines.push(format!("{tag} {}: expected {}, got {}", ch.name, ch.expected, ch.actual));
        }
    }
    let failed: Vec<&str> = c.0.iter().filter(|x| !x.pass).map(|x| x.name).collect();
    if failed.is_empty() {
        lines.push(format!("all {} checks passed", c.0.len()));
    } else {
        lines.push(format!("{} of {} checks failed: {}", failed.len(), c.0.len(), failed.join(", ")));
        r.exit_code = EXIT_CHECK_FAILED;
    }
    lines.append(&mut r.text);
    r.text = lines;
    r.set("checks", &c.0);
    r.set("failed", &failed);
    r
}
