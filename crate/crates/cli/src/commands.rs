use k3lat::involution::{equivariant_signature, tcr_decompose};
use k3lat::json::{vector_json, LatticeJson};
use k3lat::obstruction::{nielsen_certificate, ObstructionCertificate, StepValue};
use k3lat::roots::{check_w, short_vectors};
use k3lat::{Result, SignatureTriple};
use num_bigint::BigInt;
use serde_json::json;

use crate::input;
use crate::report::RunReport;

pub fn lattice_info(arg: &str) -> Result<RunReport> {
    let l = input::lattice(arg)?;
    let mut r = RunReport::new("lattice info", json!({ "lattice": arg }));
    let sig = l.signature();
    r.set("rank", l.rank());
    r.set("signature", sig);
    r.set("determinant", l.determinant().to_string());
    r.set("even", l.is_even());
    r.set("unimodular", l.is_unimodular());
    r.line(format!("rank: {}", l.rank()));
    r.line(format!("signature: {sig}"));
    r.line(format!("determinant: {}", l.determinant()));
    r.line(format!("even: {}", l.is_even()));
    r.line(format!("unimodular: {}", l.is_unimodular()));
    Ok(r)
}

pub fn lattice_json(arg: &str) -> Result<RunReport> {
    let l = input::lattice(arg)?;
    let mut r = RunReport::new("lattice json", json!({ "lattice": arg }));
    let doc = LatticeJson::from_lattice(&l);
    r.line(serde_json::to_string(&doc).expect("serializable"));
    r.set("lattice", doc);
    Ok(r)
}

pub fn involution_analyze(arg: &str) -> Result<RunReport> {
    let a = input::isometry(arg)?;
    let l = a.lattice().clone();
    let mut r = RunReport::new("involution analyze", json!({ "isometry": arg }));
    let tcr = tcr_decompose(&l, &a)?;
    let inv = equivariant_signature(&l, &a)?;
    r.set("tcr", tcr);
    r.set("equivariant", inv);
    r.set("free_type", tcr.is_free_type());
    r.line(format!("(t,c,r): {tcr}"));
    r.line(format!(
        "(b+,b-,sigma) of invariant lattice: ({},{},{})",
        inv.b_plus_g, inv.b_minus_g, inv.sigma_g
    ));
    r.line(format!("free type: {}", tcr.is_free_type()));
    if l.signature() == SignatureTriple::new(3, 19, 0) {
        let g = a.in_gamma()?;
        r.set("in_gamma", g);
        r.line(format!("preserves positive 3-plane orientation: {g}"));
    }
    Ok(r)
}

fn value_text(v: &StepValue) -> String {
    match v {
        StepValue::Int(x) => x.to_string(),
        StepValue::Bool(x) => x.to_string(),
        StepValue::Text(x) => x.clone(),
    }
}

pub fn certificate_lines(cert: &ObstructionCertificate) -> Vec<String> {
    let mut out = Vec::new();
    for (i, s) in cert.steps.iter().enumerate() {
        let join = |d: &k3lat::obstruction::StepData| {
            d.iter()
                .map(|(k, v)| format!("{k}={}", value_text(v)))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut line = format!("{}. {} [{}]", i + 1, s.name.as_str(), s.status.as_str());
        if !s.inputs.is_empty() {
            line.push_str(&format!(" in: {}", join(&s.inputs)));
        }
        if !s.computed.is_empty() {
            line.push_str(&format!(" out: {}", join(&s.computed)));
        }
        out.push(line);
        if let Some(n) = s.note.as_deref().filter(|n| !n.is_empty()) {
            out.push(format!("   note: {n}"));
        }
    }
    out.push(format!("verdict: {}", verdict_text(cert)));
    out
}

pub fn verdict_text(cert: &ObstructionCertificate) -> &'static str {
    match cert.verdict {
        k3lat::obstruction::Verdict::NotRealizableAsSmoothInvolution => "NotRealizableAsSmoothInvolution",
        k3lat::obstruction::Verdict::Inconclusive => "Inconclusive",
    }
}

pub fn certificate(arg: &str) -> Result<RunReport> {
    let a = input::isometry(arg)?;
    let cert = nielsen_certificate(&a)?;
    let mut r = RunReport::new("certificate", json!({ "isometry": arg }));
    for line in certificate_lines(&cert) {
        r.line(line);
    }
    r.set("certificate", &cert);
    Ok(r)
}

pub fn roots(arg: &str, target: &BigInt) -> Result<RunReport> {
    let l = input::lattice(arg)?;
    let vs = short_vectors(&l, target)?;
    let mut r = RunReport::new(
        "roots",
        json!({ "lattice": arg, "target": target.to_string() }),
    );
    r.set("count", vs.len());
    r.set("vectors", vs.iter().map(vector_json).collect::<Vec<_>>());
    r.line(format!("count: {}", vs.len()));
    for v in &vs {
        r.line(v.to_string());
    }
    Ok(r)
}

pub fn period_check_w(path: &str) -> Result<RunReport> {
    let p = input::plane(path)?;
    let w = check_w(&p)?;
    let mut r = RunReport::new("period check-w", json!({ "plane": path }));
    r.set("in_w", w.in_w);
    r.set("complement_rank", w.complement_rank);
    r.set("complement_signature", w.complement_signature);
    r.set("witness", w.witness.as_ref().map(vector_json));
    r.line(if w.in_w { "in W" } else { "not in W" });
    r.line(format!(
        "complement: rank {} signature {}",
        w.complement_rank, w.complement_signature
    ));
    if let Some(v) = &w.witness {
        r.line(format!("orthogonal root: {v}"));
    }
    Ok(r)
}
