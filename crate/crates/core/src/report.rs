//! Serializable reports for presentations, resolutions and the Gorenstein
//! table, plus their Loewy-style text rendering.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::present::{Clause, OracleVerdict, Presentation, Ranks};

/// Seed and search budgets behind a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunInfo {
    pub field: String,
    pub seed: u64,
    pub iso_trials: usize,
    pub path_cap: usize,
    pub max_steps: usize,
}

/// Multiplicities as `(vertex label, multiplicity)`, zero entries omitted.
pub type TermList = Vec<(String, usize)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermsJson {
    pub left: TermList,
    pub right: TermList,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub accepted: bool,
    pub minimal_left: TermList,
    pub minimal_right: TermList,
    #[serde(rename = "K")]
    pub k: TermList,
    #[serde(rename = "L")]
    pub l: TermList,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub found: bool,
    pub ranks: Option<Ranks>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentReport {
    pub context: String,
    pub module: String,
    pub pd: usize,
    pub id: usize,
    pub clause: Clause,
    pub terms: TermsJson,
    pub oracle: OracleJson,
    pub certificate: CertificateJson,
    pub checks: Vec<CheckJson>,
    pub run: RunInfo,
}

pub fn term_list(alg: &Algebra, mult: &[usize]) -> TermList {
    mult.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| (alg.vertex_label(i).to_string(), k))
        .collect()
}

/// Inverse of [`term_list`]; unknown labels are an input error.
pub fn multiplicities(alg: &Algebra, terms: &TermList) -> crate::Result<Vec<usize>> {
    let mut out = vec![0; alg.num_vertices()];
    for (v, k) in terms {
        let i = alg
            .vertex_index(v)
            .ok_or_else(|| crate::Error::Input(format!("unknown vertex {v:?} in terms")))?;
        out[i] += k;
    }
    Ok(out)
}

pub fn oracle_json(alg: &Algebra, o: &OracleVerdict) -> OracleJson {
    OracleJson {
        accepted: o.accepted,
        minimal_left: term_list(alg, &o.minimal_left),
        minimal_right: term_list(alg, &o.minimal_right),
        k: term_list(alg, &o.k),
        l: term_list(alg, &o.l),
    }
}

impl PresentReport {
    pub fn new(context: &str, module: String, p: &Presentation, run: RunInfo) -> Self {
        let b = p.induced.algebra();
        let t = &p.terms;
        let mut checks = vec![CheckJson {
            name: "oracle".into(),
            passed: p.oracle.accepted,
            detail: p.oracle.reason.clone(),
        }];
        if let Some(c) = &p.certificate {
            checks.push(CheckJson {
                name: "certificate-exact".into(),
                passed: c.is_exact(),
                detail: None,
            });
        }
        PresentReport {
            context: context.to_string(),
            module,
            pd: t.pd,
            id: t.id,
            clause: t.clause,
            terms: TermsJson {
                left: term_list(b, &t.left),
                right: term_list(b, &t.right),
            },
            oracle: oracle_json(b, &p.oracle),
            certificate: CertificateJson {
                found: p.certificate.is_some(),
                ranks: p.ranks().cloned(),
                note: p.search_note.clone(),
            },
            checks,
            run,
        }
    }
}

/// `I(2) ⊕ I(5)²`-style rendering of a term; `0` when empty.
pub fn format_sum(alg: &Algebra, mult: &[usize], name: &str) -> String {
    let parts: Vec<String> = mult
        .iter()
        .enumerate()
        .flat_map(|(i, &k)| std::iter::repeat_n(format!("{name}({})", alg.vertex_label(i)), k))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ⊕ ")
    }
}

/// `0 → M⊗B → J⁰ → J¹` with the injective terms spelled out.
pub fn format_presentation(alg: &Algebra, left: &[usize], right: &[usize]) -> String {
    format!(
        "0 → M⊗B → {} → {}",
        format_sum(alg, left, "I_B"),
        format_sum(alg, right, "I_B")
    )
}
