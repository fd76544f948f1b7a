//! Three-valued verdicts with machine-checkable certificates.
//!
//! A Proved or Refuted verdict never stands alone: it carries a certificate
//! naming the exact checks performed (prefix comparisons, tail-rule lemmas,
//! violation points, escape behaviors) so an independent pass can re-verify
//! it without re-running the prover.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::rat::Rat;
use crate::spaces::SpaceElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Proved,
    /// bracket checks ran on a finite probe set only (flagged sub-status)
    ProvedOnProbes,
    /// documented catalog fact without machine proof
    ProvedExternally,
    Refuted,
    Unknown,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Proved => "Proved",
            Status::ProvedOnProbes => "ProvedOnProbes",
            Status::ProvedExternally => "ProvedExternally",
            Status::Refuted => "Refuted",
            Status::Unknown => "Unknown",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cert {
    /// monotonicity verified: `checked` consecutive prefix pairs exactly,
    /// the tail by the named rule lemma
    Monotone { checked: usize, rule: String },
    /// the named element bounds every family member (prefix exact, tail by lemma)
    Bound { upper: bool, checked: usize, rule: String },
    /// pointwise limit evaluated from the tail rule's closed form
    PointwiseLimit { description: String },
    /// limit forced by continuity off a finite exceptional set
    ForcedByContinuity { exceptional: Vec<Rat>, description: String },
    /// pointwise limit escapes the space: no order limit exists there
    Escape { behavior: String },
    /// exact violation location
    ViolationAt { at: String, detail: String },
    /// positive family dominated by coeff·ratio^n with ratio < 1, in an
    /// integrally closed space: infimum 0
    GeometricDecay { coeff: String, ratio: Rat },
    /// order sum diverges, with the named escaping behavior
    SumDiverges { behavior: String },
    /// catalog-level lemma invoked by name (audited separately)
    CatalogLemma { name: String },
    /// documented fact; no machine certificate
    External { source: String },
    /// equality of two exactly computed values
    ExactEqual { lhs: String, rhs: String },
    All(Vec<Cert>),
    Note(String),
}

impl Cert {
    pub fn lemma(name: &str) -> Cert {
        Cert::CatalogLemma { name: name.to_string() }
    }

    pub fn note(msg: impl Into<String>) -> Cert {
        Cert::Note(msg.into())
    }

    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("certificates serialize");
        let mut hasher = Sha256::new();
        hasher.update(&bytes);
        let out = hasher.finalize();
        out.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub value: Option<SpaceElement>,
    pub cert: Cert,
}

impl Verdict {
    pub fn proved(value: Option<SpaceElement>, cert: Cert) -> Verdict {
        Verdict { status: Status::Proved, value, cert }
    }

    pub fn proved_on_probes(value: Option<SpaceElement>, cert: Cert) -> Verdict {
        Verdict { status: Status::ProvedOnProbes, value, cert }
    }

    pub fn proved_externally(cert: Cert) -> Verdict {
        Verdict { status: Status::ProvedExternally, value: None, cert }
    }

    pub fn refuted(cert: Cert) -> Verdict {
        Verdict { status: Status::Refuted, value: None, cert }
    }

    pub fn unknown(reason: impl Into<String>) -> Verdict {
        Verdict { status: Status::Unknown, value: None, cert: Cert::Note(reason.into()) }
    }

    pub fn is_proved(&self) -> bool {
        matches!(self.status, Status::Proved | Status::ProvedOnProbes | Status::ProvedExternally)
    }

    pub fn is_refuted(&self) -> bool {
        self.status == Status::Refuted
    }

    pub fn digest(&self) -> String {
        self.cert.digest()
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.value {
            Some(v) => write!(f, "{} [value {}]", self.status, v),
            None => write!(f, "{}", self.status),
        }
    }
}
