//! The fixed-surface obstruction to realizing a lattice involution by a
//! smooth involution of a K3 surface.
//!
//! For a lattice involution with profile `(t, c, r)` and invariant signature
//! `σ^{Z2}`, a smooth odd involution would have `k = (t + 2)/2` fixed
//! surfaces of total genus `c/2`, and the G-signature identity
//! `σ^{Z2} = σ/2 + [Σ]²/2` pins the total self-intersection. When there is
//! one fixed surface, the adjunction inequality `2g − 2 ≥ [Σ]²` for surfaces
//! of nonnegative square either holds or yields a contradiction.
//!
//! Adjunction is the only input here that needs smoothness; the other steps
//! hold for locally linear involutions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involution::{equivariant_signature, fixed_point_profile, tcr_decompose};
use crate::isometry::Isometry;

pub fn even_prediction(sigma: i64) -> Result<i64> {
    if sigma % 2 != 0 {
        return Err(Error::OddSignature(sigma));
    }
    Ok(sigma / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    /// `σ^{Z2} = σ/2`; does not prove the involution is even.
    EvenConsistent,
    Odd,
}

impl Parity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Parity::EvenConsistent => "even-consistent",
            Parity::Odd => "odd",
        }
    }
}

pub fn classify_parity(sigma: i64, sigma_g: i64) -> Parity {
    if 2 * sigma_g != sigma {
        Parity::Odd
    } else {
        Parity::EvenConsistent
    }
}

/// Total `[Σ]²` forced by `σ^{Z2} = σ/2 + [Σ]²/2`.
pub fn fixed_surface_square(sigma: i64, sigma_g: i64) -> i64 {
    2 * sigma_g - sigma
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceData {
    pub genus: u64,
    pub self_intersection: i64,
}

/// Whether `2g − 2 ≥ [Σ]²` fails. Surfaces of negative square are outside
/// the inequality's range and never reported as violations.
pub fn adjunction_violated(s: &SurfaceData) -> bool {
    if s.self_intersection < 0 {
        return false;
    }
    2 * s.genus as i64 - 2 < s.self_intersection
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepName {
    InvolutionCheck,
    Tcr,
    FreeType,
    Parity,
    FixedPoints,
    GSignatureSquare,
    Adjunction,
}

impl StepName {
    pub const ORDER: [StepName; 7] = [
        StepName::InvolutionCheck,
        StepName::Tcr,
        StepName::FreeType,
        StepName::Parity,
        StepName::FixedPoints,
        StepName::GSignatureSquare,
        StepName::Adjunction,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            StepName::InvolutionCheck => "involution_check",
            StepName::Tcr => "tcr",
            StepName::FreeType => "free_type",
            StepName::Parity => "parity",
            StepName::FixedPoints => "fixed_points",
            StepName::GSignatureSquare => "g_signature_square",
            StepName::Adjunction => "adjunction",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepStatus {
    Pass,
    Contradiction,
    NotApplicable,
}

impl StepStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            StepStatus::Pass => "pass",
            StepStatus::Contradiction => "contradiction",
            StepStatus::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StepValue {
    Int(i64),
    Bool(bool),
    Text(String),
}

impl From<i64> for StepValue {
    fn from(x: i64) -> Self {
        StepValue::Int(x)
    }
}

impl From<usize> for StepValue {
    fn from(x: usize) -> Self {
        StepValue::Int(x as i64)
    }
}

impl From<u64> for StepValue {
    fn from(x: u64) -> Self {
        StepValue::Int(x as i64)
    }
}

impl From<bool> for StepValue {
    fn from(x: bool) -> Self {
        StepValue::Bool(x)
    }
}

impl From<&str> for StepValue {
    fn from(x: &str) -> Self {
        StepValue::Text(x.to_owned())
    }
}

pub type StepData = BTreeMap<String, StepValue>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateStep {
    pub name: StepName,
    pub inputs: StepData,
    pub computed: StepData,
    pub status: StepStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    NotRealizableAsSmoothInvolution,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub steps: Vec<CertificateStep>,
    pub verdict: Verdict,
}

impl ObstructionCertificate {
    pub fn step(&self, name: StepName) -> &CertificateStep {
        self.steps
            .iter()
            .find(|s| s.name == name)
            .expect("every certificate carries all steps")
    }

    pub fn value(&self, name: StepName, key: &str) -> Option<&StepValue> {
        self.step(name).computed.get(key)
    }

    pub fn int(&self, name: StepName, key: &str) -> Option<i64> {
        match self.value(name, key)? {
            StepValue::Int(x) => Some(*x),
            _ => None,
        }
    }
}

fn data<const N: usize>(entries: [(&str, StepValue); N]) -> StepData {
    entries.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()
}

struct Builder {
    steps: Vec<CertificateStep>,
}

impl Builder {
    fn push(&mut self, name: StepName, inputs: StepData, computed: StepData, status: StepStatus) {
        self.steps.push(CertificateStep {
            name,
            inputs,
            computed,
            status,
            note: None,
        });
    }

    fn note(&mut self, note: impl Into<String>) {
        if let Some(last) = self.steps.last_mut() {
            last.note = Some(note.into());
        }
    }

    /// Marks every remaining step as not applicable and closes the certificate.
    fn finish(mut self, reason: &str) -> ObstructionCertificate {
        let done = self.steps.len();
        for name in &StepName::ORDER[done..] {
            self.push(*name, StepData::new(), StepData::new(), StepStatus::NotApplicable);
            self.note(reason);
        }
        let verdict = if self.steps.iter().any(|s| s.status == StepStatus::Contradiction) {
            Verdict::NotRealizableAsSmoothInvolution
        } else {
            Verdict::Inconclusive
        };
        ObstructionCertificate {
            steps: self.steps,
            verdict,
        }
    }
}

/// Runs the obstruction pipeline on an involution of the ambient lattice.
///
/// Contradictions are only derived on the odd branch with a single fixed
/// surface; every other exit is `Inconclusive`.
pub fn nielsen_certificate(a: &Isometry) -> Result<ObstructionCertificate> {
    if !a.is_involution() {
        return Err(Error::NotInvolution);
    }
    let l = a.lattice().as_ref();
    let sigma = l.signature().sigma();
    let prediction = even_prediction(sigma)?;
    let mut b = Builder { steps: Vec::new() };

    b.push(
        StepName::InvolutionCheck,
        data([("rank", l.rank().into())]),
        data([("order", 2i64.into())]),
        StepStatus::Pass,
    );

    let tcr = tcr_decompose(l, a)?;
    b.push(
        StepName::Tcr,
        StepData::new(),
        data([("t", tcr.t.into()), ("c", tcr.c.into()), ("r", tcr.r.into())]),
        StepStatus::Pass,
    );

    let free = tcr.is_free_type();
    b.push(
        StepName::FreeType,
        data([("t", tcr.t.into()), ("c", tcr.c.into())]),
        data([("free_type", free.into())]),
        StepStatus::Pass,
    );
    if free {
        return Ok(b.finish("free-type profile: no fixed surfaces to constrain"));
    }

    let inv = equivariant_signature(l, a)?;
    let parity = classify_parity(sigma, inv.sigma_g);
    b.push(
        StepName::Parity,
        data([
            ("sigma", sigma.into()),
            ("b_plus_g", inv.b_plus_g.into()),
            ("b_minus_g", inv.b_minus_g.into()),
            ("sigma_g", inv.sigma_g.into()),
        ]),
        data([
            ("even_prediction", prediction.into()),
            ("parity", parity.as_str().into()),
        ]),
        StepStatus::Pass,
    );
    if parity == Parity::EvenConsistent {
        return Ok(b.finish("equivariant signature matches the even prediction"));
    }

    let (t, c) = (tcr.t as i64, tcr.c as i64);
    let fixed = match fixed_point_profile(t, c) {
        Ok(p) => p,
        Err(e) => {
            b.push(
                StepName::FixedPoints,
                data([("t", t.into()), ("c", c.into())]),
                StepData::new(),
                StepStatus::NotApplicable,
            );
            b.note(e.to_string());
            return Ok(b.finish("no fixed-point profile"));
        }
    };
    b.push(
        StepName::FixedPoints,
        data([("t", t.into()), ("c", c.into())]),
        data([("k", fixed.k.into()), ("total_genus", fixed.total_genus.into())]),
        StepStatus::Pass,
    );

    let square = fixed_surface_square(sigma, inv.sigma_g);
    b.push(
        StepName::GSignatureSquare,
        data([("sigma", sigma.into()), ("sigma_g", inv.sigma_g.into())]),
        data([("self_intersection", square.into())]),
        StepStatus::Pass,
    );

    if fixed.k != 1 {
        b.push(
            StepName::Adjunction,
            data([("k", fixed.k.into()), ("self_intersection", square.into())]),
            StepData::new(),
            StepStatus::NotApplicable,
        );
        b.note("adjunction is only applied to a single fixed surface");
        return Ok(b.finish(""));
    }
    let surface = SurfaceData {
        genus: fixed.total_genus,
        self_intersection: square,
    };
    let violated = adjunction_violated(&surface);
    b.push(
        StepName::Adjunction,
        data([
            ("genus", surface.genus.into()),
            ("self_intersection", surface.self_intersection.into()),
        ]),
        data([
            ("bound", (2 * surface.genus as i64 - 2).into()),
            ("violated", violated.into()),
        ]),
        if violated {
            StepStatus::Contradiction
        } else {
            StepStatus::Pass
        },
    );
    if surface.self_intersection < 0 {
        b.note("negative square: inequality not applied");
    }
    Ok(b.finish(""))
}
