//! Checking candidate injective presentations: the multiset oracle and
//! explicit map certificates.

use serde::{Deserialize, Serialize};

use super::terms::random_mono;
use crate::error::{Error, Result};
use crate::modrep::{
    cokernel, injective_sum, min_inj_presentation, min_proj_presentation,
    multiplicities_to_vertices, vertices_to_multiplicities, Module, Morphism,
};

/// Outcome of comparing candidate terms with the minimal presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub accepted: bool,
    pub minimal_left: Vec<usize>,
    pub minimal_right: Vec<usize>,
    /// Summands of the form `K → K`.
    pub k: Vec<usize>,
    /// Extra summands of the second term.
    pub l: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl OracleVerdict {
    pub fn into_result(self) -> Result<Self> {
        if self.accepted {
            Ok(self)
        } else {
            Err(Error::TermsDoNotPresent(self.reason.unwrap_or_default()))
        }
    }
}

fn sub(a: &[usize], b: &[usize]) -> Option<Vec<usize>> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

/// Any injective presentation `0 → x → J⁰ → J¹` is the minimal one plus
/// summands `K → K` and `0 → L`; accepts iff the terms decompose that way.
pub fn oracle_verify(x: &Module, left: &[usize], right: &[usize]) -> OracleVerdict {
    let nv = x.algebra().num_vertices();
    let ip = min_inj_presentation(x);
    multiset_rule(
        vertices_to_multiplicities(nv, &ip.i0.vertices),
        vertices_to_multiplicities(nv, &ip.i1),
        left,
        right,
    )
}

/// The dual rule for projective presentations `J¹ → J⁰ → y → 0`.
pub fn oracle_verify_projective(y: &Module, left: &[usize], right: &[usize]) -> OracleVerdict {
    let nv = y.algebra().num_vertices();
    let pp = min_proj_presentation(y);
    multiset_rule(
        vertices_to_multiplicities(nv, &pp.p0.vertices),
        vertices_to_multiplicities(nv, &pp.p1),
        left,
        right,
    )
}

fn multiset_rule(
    min_l: Vec<usize>,
    min_r: Vec<usize>,
    left: &[usize],
    right: &[usize],
) -> OracleVerdict {
    let reject = |reason: String| OracleVerdict {
        accepted: false,
        minimal_left: min_l.clone(),
        minimal_right: min_r.clone(),
        k: Vec::new(),
        l: Vec::new(),
        reason: Some(reason),
    };
    let Some(k) = sub(left, &min_l) else {
        return reject(format!(
            "first term {left:?} does not contain the minimal first term {min_l:?}"
        ));
    };
    let Some(extra) = sub(right, &min_r) else {
        return reject(format!(
            "second term {right:?} does not contain the minimal second term {min_r:?}"
        ));
    };
    let Some(l) = sub(&extra, &k) else {
        return reject(format!(
            "surplus {extra:?} of the second term does not contain the surplus {k:?} of the first"
        ));
    };
    OracleVerdict {
        accepted: true,
        minimal_left: min_l,
        minimal_right: min_r,
        k,
        l,
        reason: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ranks {
    pub dim_x: usize,
    pub dim_j0: usize,
    pub dim_j1: usize,
    pub rank_f: usize,
    pub rank_g: usize,
    pub dim_coker_g: usize,
}

/// Explicit maps `f: x → J⁰`, `g: J⁰ → J¹` with `f` mono and `im f = ker g`.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub j0: Module,
    pub j1: Module,
    pub f: Morphism,
    pub g: Morphism,
    pub coker_g: Module,
    pub ranks: Ranks,
}

impl Certificate {
    /// `f` mono, `fg = 0` and `dim ker g = dim x`.
    pub fn is_exact(&self) -> bool {
        let r = &self.ranks;
        r.rank_f == r.dim_x && self.f.then(&self.g).is_zero() && r.dim_j0 - r.rank_g == r.dim_x
    }

    /// Exactness of `0 → x → J⁰ → J¹ → 0`.
    pub fn is_resolution(&self) -> bool {
        self.is_exact() && self.ranks.dim_coker_g == 0
    }
}

/// Searches for `f` (a random mono into `J⁰`) and `g` (the cokernel of `f`
/// followed by a random mono into `J¹`).
pub fn build_certificate(
    x: &Module,
    left: &[usize],
    right: &[usize],
    seed: u64,
    trials: usize,
) -> Result<Certificate> {
    let b = x.algebra();
    let j0 = injective_sum(b, &multiplicities_to_vertices(left));
    let j1 = injective_sum(b, &multiplicities_to_vertices(right));
    let f = random_mono(x, &j0, seed, trials).ok_or_else(|| {
        Error::CertificateSearchFailed(format!("no monomorphism into J⁰ after {trials} trials"))
    })?;
    let (q, pi) = cokernel(&j0, &f);
    let h = random_mono(&q, &j1, seed.wrapping_add(1), trials).ok_or_else(|| {
        Error::CertificateSearchFailed(format!(
            "no monomorphism from coker f into J¹ after {trials} trials"
        ))
    })?;
    let g = pi.then(&h);
    let (coker_g, _) = cokernel(&j1, &g);
    let ranks = Ranks {
        dim_x: x.dim(),
        dim_j0: j0.dim(),
        dim_j1: j1.dim(),
        rank_f: f.rank(),
        rank_g: g.rank(),
        dim_coker_g: coker_g.dim(),
    };
    Ok(Certificate {
        left: left.to_vec(),
        right: right.to_vec(),
        j0,
        j1,
        f,
        g,
        coker_g,
        ranks,
    })
}
