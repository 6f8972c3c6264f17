//! JSON report. Every integer is a decimal string.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cmcheck::{CmStatus, CmVerdict, Witness};
use crate::homology::BettiTable;
use crate::ideals::{Form, HsopSequence, RegularityStatus, RegularityVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: InputDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub independence_number: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unmixed: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_vector: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_vector: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<VerdictReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hsop: Option<HsopReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub betti: Vec<BettiReport>,
    /// Milliseconds per stage.
    #[serde(default)]
    pub timings: BTreeMap<String, String>,
}

impl Report {
    pub fn new(command: &str, input: InputDescriptor) -> Self {
        Report {
            command: command.to_string(),
            input,
            graph: None,
            independence_number: None,
            unmixed: None,
            f_vector: None,
            h_vector: None,
            verdicts: Vec::new(),
            hsop: None,
            betti: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    /// Copy with timings cleared, for comparing runs.
    pub fn without_timings(&self) -> Report {
        Report {
            timings: BTreeMap::new(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> crate::Result<Report> {
        Ok(serde_json::from_str(text)?)
    }

    /// True when some stage stopped at a resource cap.
    pub fn hit_cap(&self) -> bool {
        self.verdicts.iter().any(|v| v.status == CmStatus::Unknown.as_str())
            || self.hsop.as_ref().is_some_and(|h| {
                h.verify
                    .values()
                    .any(|v| v.status == RegularityStatus::CapReached.as_str())
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDescriptor {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sha256: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: String,
    pub edges: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// `homology` or `negative-h`.
    pub kind: String,
    pub complex: String,
    pub index: String,
    pub value: String,
    pub text: String,
}

impl From<&Witness> for WitnessReport {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::Homology { complex, index, dim } => WitnessReport {
                kind: "homology".into(),
                complex: complex.clone(),
                index: index.to_string(),
                value: dim.to_string(),
                text: w.to_string(),
            },
            Witness::NegativeH { complex, index, value } => WitnessReport {
                kind: "negative-h".into(),
                complex: complex.clone(),
                index: index.to_string(),
                value: value.to_string(),
                text: w.to_string(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub char: String,
    pub status: String,
    pub method: String,
    pub witnesses: Vec<WitnessReport>,
}

impl From<&CmVerdict> for VerdictReport {
    fn from(v: &CmVerdict) -> Self {
        VerdictReport {
            char: v.field.characteristic().to_string(),
            status: v.status.as_str().into(),
            method: v.method.as_str().into(),
            witnesses: v.witnesses.iter().map(WitnessReport::from).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub char: String,
    /// `dims[k]` is the dimension of `H̃_{k-1}`.
    pub dims: Vec<String>,
}

impl From<&BettiTable> for BettiReport {
    fn from(b: &BettiTable) -> Self {
        BettiReport {
            char: b.field.characteristic().to_string(),
            dims: b.dims.iter().map(|d| d.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermReport {
    pub exponents: Vec<String>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormReport {
    pub degree: String,
    pub text: String,
    pub terms: Vec<TermReport>,
}

impl FormReport {
    pub fn new(form: &Form, labels: Option<&[String]>) -> Self {
        FormReport {
            degree: form.degree.to_string(),
            text: form.render(labels),
            terms: form
                .terms
                .iter()
                .map(|(e, c)| TermReport {
                    exponents: e.iter().map(|a| a.to_string()).collect(),
                    coefficient: c.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub degree: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub status: String,
    pub degree_cap: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_degree: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified_by: Option<String>,
    pub per_degree: Vec<DegreeReport>,
}

impl VerifyReport {
    pub fn new(v: &RegularityVerdict, degree_cap: usize) -> Self {
        VerifyReport {
            status: v.status.as_str().into(),
            degree_cap: degree_cap.to_string(),
            failing_degree: v.failing_degree.map(|d| d.to_string()),
            certified_by: v.certified_by.map(|p| p.to_string()),
            per_degree: v
                .per_degree
                .iter()
                .map(|r| DegreeReport {
                    degree: r.degree.to_string(),
                    expected: r.expected.to_string(),
                    actual: r.actual.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HsopReport {
    pub kind: String,
    pub forms: Vec<FormReport>,
    /// Keyed by characteristic.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub verify: BTreeMap<String, VerifyReport>,
}

impl HsopReport {
    pub fn new(seq: &HsopSequence, labels: Option<&[String]>) -> Self {
        HsopReport {
            kind: seq.kind.as_str().into(),
            forms: seq.forms.iter().map(|f| FormReport::new(f, labels)).collect(),
            verify: BTreeMap::new(),
        }
    }
}
