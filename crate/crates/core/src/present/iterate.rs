//! Splicing presentations of induced modules into injective resolutions,
//! switching between cuts of the same algebra.

use serde::Serialize;

use super::certificate::build_certificate;
use super::terms::{theorem_terms, Clause};
use crate::error::{Error, Result};
use crate::modrep::{
    are_isomorphic, decompose_injective, is_injective, Module, DEFAULT_ISO_TRIALS,
};
use crate::relext::ExtensionContext;

#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    /// Loewy display of the module presented at this step.
    pub module: String,
    pub dims: Vec<usize>,
    /// Context that induces the module; `None` for an injective module.
    pub context: Option<String>,
    pub clause: Option<Clause>,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "detail")]
pub enum StopReason {
    /// The resolution ended.
    Finite,
    /// The module recurred; the trace repeats from here.
    Periodic,
    MaxSteps,
    /// No context induces the module (Loewy display attached).
    NoInducingCut(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionTrace {
    pub steps: Vec<TraceStep>,
    pub stop: StopReason,
    /// Period measured in injective terms.
    pub period: Option<usize>,
    /// Index of the step whose module recurs.
    pub cycle_start: Option<usize>,
}

impl ResolutionTrace {
    /// Loewy displays of the modules at each step (the cosyzygy sequence).
    pub fn modules(&self) -> Vec<&str> {
        self.steps.iter().map(|s| s.module.as_str()).collect()
    }

    /// Injective terms in order, two per step (an injective module
    /// contributes one).
    pub fn terms(&self) -> Vec<&[usize]> {
        let mut out = Vec::new();
        for s in &self.steps {
            out.push(s.left.as_slice());
            if s.right.iter().any(|&k| k > 0) || s.context.is_some() {
                out.push(s.right.as_slice());
            }
        }
        out
    }
}

/// `x` is a module over the ambient algebra shared by the family.
/// Repeatedly presents the current module through the first inducing
/// context and continues with the cokernel of the second map.
pub fn iterate_resolution(
    x: &Module,
    family: &[ExtensionContext],
    max_steps: usize,
    seed: u64,
) -> Result<ResolutionTrace> {
    let mut steps: Vec<TraceStep> = Vec::new();
    let mut seen: Vec<Module> = Vec::new();
    let mut cur = x.clone();
    let mut stop = StopReason::MaxSteps;
    let mut period = None;
    let mut cycle_start = None;
    for _ in 0..max_steps {
        if cur.is_zero() {
            stop = StopReason::Finite;
            break;
        }
        if let Some(j) = seen
            .iter()
            .position(|s| are_isomorphic(s, &cur, seed).is_yes())
        {
            stop = StopReason::Periodic;
            cycle_start = Some(j);
            period = Some(2 * (seen.len() - j));
            break;
        }
        let nv = cur.algebra().num_vertices();
        if is_injective(&cur) {
            steps.push(TraceStep {
                module: cur.loewy_string(),
                dims: cur.dims().to_vec(),
                context: None,
                clause: None,
                left: decompose_injective(&cur)?,
                right: vec![0; nv],
            });
            stop = StopReason::Finite;
            break;
        }
        let found = family.iter().find_map(|ctx| {
            let here = ctx.from_ambient(&cur);
            ctx.detect_induced(&here, seed)
                .ok()
                .map(|(n, _)| (ctx, n, here))
        });
        let Some((ctx, n, here)) = found else {
            stop = StopReason::NoInducingCut(cur.loewy_string());
            break;
        };
        let terms = theorem_terms(&n, ctx, seed)?;
        let cert = build_certificate(&here, &terms.left, &terms.right, seed, DEFAULT_ISO_TRIALS)?;
        if !cert.is_exact() {
            return Err(Error::TermsDoNotPresent(format!(
                "certificate for {} is not exact",
                cur.loewy_string()
            )));
        }
        steps.push(TraceStep {
            module: cur.loewy_string(),
            dims: cur.dims().to_vec(),
            context: Some(ctx.name.clone()),
            clause: Some(terms.clause),
            left: terms.left,
            right: terms.right,
        });
        seen.push(cur.clone());
        cur = ctx.to_ambient(&cert.coker_g);
    }
    Ok(ResolutionTrace {
        steps,
        stop,
        period,
        cycle_start,
    })
}
