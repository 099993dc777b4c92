//! The invariant suite over the bundled corpus: every corpus context, a
//! closed family of indecomposable modules over each, and a pass/fail
//! record per identity.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, DEFAULT_PATH_CAP};
use crate::corpus;
use crate::error::{Error, Result};
use crate::homfun::{d_tr, ext_dim, tau, tau_inverse, tr_d};
use crate::modrep::{
    are_isomorphic, cosyzygy, dual_regular, global_dimension, injective, injective_dimension,
    is_indecomposable, is_injective, is_projective, projective, projective_dimension, regular,
    syzygy, Module, DEFAULT_ISO_TRIALS,
};
use crate::present::{dual_presentation, ext1_cokernel_check, gorenstein_report, present, Clause};
use crate::relext::{context_from_cut, relation_extension, ExtensionContext};

pub const DEFAULT_MAX_DIM: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "status", content = "detail")]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The check's hypothesis does not apply to this module.
    Skip(String),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    fn from_bool(ok: bool, why: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(why())
        }
    }
}

impl From<Result<Outcome>> for Outcome {
    fn from(r: Result<Outcome>) -> Self {
        r.unwrap_or_else(|e| Outcome::Fail(e.to_string()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleReport {
    pub module: String,
    pub dims: Vec<usize>,
    pub pd: usize,
    pub id: usize,
    pub clause: Option<Clause>,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub k: Vec<usize>,
    pub l: Vec<usize>,
    pub certificate_found: bool,
    pub checks: BTreeMap<String, Outcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContextReport {
    pub name: String,
    pub dim_c: usize,
    pub dim_e: usize,
    pub dim_b: usize,
    pub hereditary: bool,
    pub checks: BTreeMap<String, Outcome>,
    pub modules: Vec<ModuleReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub contexts: usize,
    pub modules: usize,
    pub checks: usize,
    pub failures: usize,
    /// Modules whose certificate search gave up (budget warnings only).
    pub certificate_warnings: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub field: String,
    pub max_dim: usize,
    pub iso_trials: usize,
    pub path_cap: usize,
    pub contexts: Vec<ContextReport>,
    pub summary: Summary,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.summary.failures == 0
    }

    /// Failures as `(context, module or "-", check, detail)`.
    pub fn failures(&self) -> Vec<(String, String, String, String)> {
        let mut out = Vec::new();
        for c in &self.contexts {
            for (k, o) in &c.checks {
                if let Outcome::Fail(d) = o {
                    out.push((c.name.clone(), "-".into(), k.clone(), d.clone()));
                }
            }
            for m in &c.modules {
                for (k, o) in &m.checks {
                    if let Outcome::Fail(d) = o {
                        out.push((c.name.clone(), m.module.clone(), k.clone(), d.clone()));
                    }
                }
            }
        }
        out
    }

    /// Per check name and context: `(passed, failed, skipped)`.
    pub fn matrix(&self) -> BTreeMap<String, BTreeMap<String, (usize, usize, usize)>> {
        let mut out: BTreeMap<String, BTreeMap<String, (usize, usize, usize)>> = BTreeMap::new();
        for c in &self.contexts {
            let all = c
                .checks
                .iter()
                .chain(c.modules.iter().flat_map(|m| m.checks.iter()));
            for (k, o) in all {
                let cell = out
                    .entry(k.clone())
                    .or_default()
                    .entry(c.name.clone())
                    .or_default();
                match o {
                    Outcome::Pass => cell.0 += 1,
                    Outcome::Fail(_) => cell.1 += 1,
                    Outcome::Skip(_) => cell.2 += 1,
                }
            }
        }
        out
    }

    /// Fixed-width text rendering of [`Self::matrix`].
    pub fn matrix_text(&self) -> String {
        let names: Vec<&str> = self.contexts.iter().map(|c| c.name.as_str()).collect();
        let matrix = self.matrix();
        let width = matrix.keys().map(String::len).max().unwrap_or(5).max(5);
        let mut s = format!("{:width$}", "check");
        for n in &names {
            s.push_str(&format!(" {n:>9}"));
        }
        s.push('\n');
        for (check, row) in &matrix {
            s.push_str(&format!("{check:width$}"));
            for n in &names {
                let cell = match row.get(*n) {
                    None => "".to_string(),
                    Some((p, 0, _)) if *p > 0 => format!("ok {p}"),
                    Some((0, 0, _)) => "n/a".to_string(),
                    Some((_, f, _)) => format!("FAIL {f}"),
                };
                s.push_str(&format!(" {cell:>9}"));
            }
            s.push('\n');
        }
        s
    }
}

/// The bundled contexts: Examples 1–3 (three cuts), `A₃` with a relation,
/// and the hereditary `A₂`, `A₃`.
pub fn corpus_contexts(seed: u64) -> Result<Vec<ExtensionContext>> {
    let mut out = Vec::new();
    for (name, file) in [("ex1", "ex1_c"), ("ex2", "ex2_c")] {
        out.push(relation_extension(name, &corpus::algebra(file)?, seed)?);
    }
    let bq = corpus::quiver("ex3_b")?;
    for cut in corpus::ex3_cuts() {
        out.push(context_from_cut(&bq, &cut, DEFAULT_PATH_CAP, seed)?);
    }
    for name in ["a3_rel", "a2", "a3"] {
        out.push(relation_extension(name, &corpus::algebra(name)?, seed)?);
    }
    Ok(out)
}

/// Simples, projectives, injectives and radicals of projectives, closed
/// under `Ω`, `Ω⁻¹`, `τ`, `τ⁻¹`, `− ⊗ E` and `Hom(E, −)` while the dimension
/// stays `≤ max_dim`; only indecomposables are kept, one per iso class.
pub fn module_corpus(ctx: &ExtensionContext, max_dim: usize, seed: u64) -> Result<Vec<Module>> {
    let c = &ctx.c;
    let mut queue: Vec<Module> = Vec::new();
    for i in 0..c.num_vertices() {
        let p = projective(c, i);
        queue.push(Module::simple(c, i));
        queue.push(p.radical().0);
        queue.push(p);
        queue.push(injective(c, i));
    }
    let mut kept: Vec<Module> = Vec::new();
    let mut next = 0;
    while next < queue.len() {
        let m = queue[next].clone();
        next += 1;
        if m.is_zero() || m.dim() > max_dim {
            continue;
        }
        if kept.iter().any(|k| are_isomorphic(k, &m, seed).is_yes()) {
            continue;
        }
        if !is_indecomposable(&m, seed)?.is_yes() {
            continue;
        }
        queue.push(syzygy(&m));
        queue.push(cosyzygy(&m));
        queue.push(tau(&m));
        queue.push(tau_inverse(&m)?);
        queue.push(ctx.tensor_e_raw(&m));
        queue.push(ctx.cohom_e_raw(&m)?);
        kept.push(m);
    }
    Ok(kept)
}

fn iso(a: &Module, b: &Module, seed: u64, what: &str) -> Outcome {
    let v = are_isomorphic(a, b, seed);
    Outcome::from_bool(v.is_yes(), || {
        format!(
            "{what}: {} (dims {:?} vs {:?})",
            v.label(),
            a.dims(),
            b.dims()
        )
    })
}

fn vanishes(d: usize, what: &str) -> Outcome {
    Outcome::from_bool(d == 0, || format!("{what} has dimension {d}"))
}

fn sum_over_vertices(c: &Arc<Algebra>, f: impl Fn(usize) -> Result<Module>) -> Result<Module> {
    let parts = (0..c.num_vertices()).map(f).collect::<Result<Vec<_>>>()?;
    Ok(Module::direct_sum_all(c, &parts))
}

fn context_checks(ctx: &ExtensionContext, seed: u64) -> BTreeMap<String, Outcome> {
    let c = &ctx.c;
    let mut out = BTreeMap::new();
    out.insert(
        "context-axioms".into(),
        ctx.check().map(|_| Outcome::Pass).into(),
    );
    out.insert(
        "gl-dim-at-most-two".into(),
        Outcome::from_bool(global_dimension(c, 3).at_most(2), || "gl.dim C > 2".into()),
    );
    let e = ctx.e.right_module();
    let de = ctx.e.dual_left_module();
    out.insert(
        "e-right-is-tau-inv-cosyzygy".into(),
        sum_over_vertices(c, |i| tau_inverse(&cosyzygy(&projective(c, i))))
            .map(|want| iso(&e, &want, seed, "E_C vs τ⁻¹Ω⁻¹C"))
            .into(),
    );
    out.insert(
        "de-is-tau-syzygy".into(),
        sum_over_vertices(c, |i| Ok(tau(&syzygy(&injective(c, i)))))
            .map(|want| iso(&de, &want, seed, "D(E) vs τΩDC"))
            .into(),
    );
    let ce = regular(c).direct_sum(&e);
    let dce = dual_regular(c).direct_sum(&de);
    out.insert(
        "rigid-c-plus-e".into(),
        vanishes(ext_dim(&ce, &ce, 1), "Ext¹(C ⊕ E, C ⊕ E)"),
    );
    out.insert(
        "rigid-dc-plus-de".into(),
        vanishes(ext_dim(&dce, &dce, 1), "Ext¹(DC ⊕ DE, DC ⊕ DE)"),
    );
    let hereditary = global_dimension(c, 3).at_most(1);
    out.insert(
        "degenerate-gate".into(),
        if hereditary {
            Outcome::from_bool(ctx.e.dim() == 0 && ctx.b.same_tables(c), || {
                format!(
                    "hereditary C but dim E = {} or B differs from C",
                    ctx.e.dim()
                )
            })
        } else {
            Outcome::Skip("gl.dim C = 2".into())
        },
    );
    out.insert(
        "gorenstein".into(),
        gorenstein_report(ctx, seed).map(|_| Outcome::Pass).into(),
    );
    out
}

fn module_report(
    m: &Module,
    ctx: &ExtensionContext,
    op: &Arc<Algebra>,
    hereditary: bool,
    seed: u64,
) -> ModuleReport {
    let c = &ctx.c;
    let mut checks: BTreeMap<String, Outcome> = BTreeMap::new();
    let mut put = |k: &str, o: Outcome| {
        checks.insert(k.to_string(), o);
    };
    let pd = projective_dimension(m, 3);
    let id = injective_dimension(m, 3);
    let pd_le1 = pd.at_most(1);
    let id_le1 = id.at_most(1);

    let pres = present(m, ctx, seed);
    let mut report = ModuleReport {
        module: m.loewy_string(),
        dims: m.dims().to_vec(),
        pd: pd.value().unwrap_or(usize::MAX),
        id: id.value().unwrap_or(usize::MAX),
        clause: None,
        left: Vec::new(),
        right: Vec::new(),
        k: Vec::new(),
        l: Vec::new(),
        certificate_found: false,
        checks: BTreeMap::new(),
    };
    match &pres {
        Ok(p) => {
            put("oracle-accepts-terms", Outcome::Pass);
            report.clause = Some(p.terms.clause);
            report.left = p.terms.left.clone();
            report.right = p.terms.right.clone();
            report.k = p.oracle.k.clone();
            report.l = p.oracle.l.clone();
            report.certificate_found = p.certificate.is_some();
            if hereditary {
                put(
                    "hereditary-presentation-minimal",
                    Outcome::from_bool(
                        p.oracle.k.iter().chain(&p.oracle.l).all(|&x| x == 0),
                        || format!("K = {:?}, L = {:?}", p.oracle.k, p.oracle.l),
                    ),
                );
            }
        }
        Err(e) => put("oracle-accepts-terms", Outcome::Fail(e.to_string())),
    }

    let te = ctx.tensor_e_raw(m);
    let he = ctx.cohom_e_raw(m);
    put(
        "tensor-e-is-tau-inv-cosyzygy",
        tau_inverse(&cosyzygy(m))
            .map(|w| iso(&te, &w, seed, "M ⊗ E vs τ⁻¹Ω⁻¹M"))
            .into(),
    );
    let he = match he {
        Ok(h) => h,
        Err(e) => {
            put("cohom-e-is-tau-syzygy", Outcome::Fail(e.to_string()));
            report.checks = checks;
            return report;
        }
    };
    put(
        "cohom-e-is-tau-syzygy",
        iso(&he, &tau(&syzygy(m)), seed, "Hom(E, M) vs τΩM"),
    );

    // change of rings
    let ind = ctx.induce(m);
    put(
        "induce-restricts-to-m-plus-tensor-e",
        iso(
            &ctx.restrict(&ind),
            &m.direct_sum(&te),
            seed,
            "M ⊗ B as a C-module",
        ),
    );
    put(
        "induce-dimension",
        Outcome::from_bool(ind.dim() == m.dim() + te.dim(), || {
            format!("{} ≠ {} + {}", ind.dim(), m.dim(), te.dim())
        }),
    );
    let inflated = ctx.inflate(m);
    put(
        "induce-trivial-iff-id-le-one",
        Outcome::from_bool(
            id_le1 == are_isomorphic(&ind, &inflated, seed).is_yes(),
            || format!("id {id}"),
        ),
    );
    match ctx.coinduce(m) {
        Ok(co) => {
            put(
                "coinduce-restricts-to-m-plus-cohom-e",
                iso(
                    &ctx.restrict(&co),
                    &m.direct_sum(&he),
                    seed,
                    "Hom_C(B, M) as a C-module",
                ),
            );
            put(
                "coinduce-dimension",
                Outcome::from_bool(co.dim() == m.dim() + he.dim(), || {
                    format!("{} ≠ {} + {}", co.dim(), m.dim(), he.dim())
                }),
            );
            put(
                "coinduce-trivial-iff-pd-le-one",
                Outcome::from_bool(
                    pd_le1 == are_isomorphic(&co, &inflated, seed).is_yes(),
                    || format!("pd {pd}"),
                ),
            );
        }
        Err(e) => put(
            "coinduce-restricts-to-m-plus-cohom-e",
            Outcome::Fail(e.to_string()),
        ),
    }
    put(
        "hom-e-dimension",
        ctx.ext_e(m, 0)
            .map(|h| {
                Outcome::from_bool(h.dim() == he.dim(), || {
                    format!("dim Hom(E, M) = {} but dim τΩM = {}", h.dim(), he.dim())
                })
            })
            .into(),
    );

    // tilted bounds and Ext vanishing
    put(
        "tensor-e-id-le-one",
        Outcome::from_bool(
            te.is_zero() || injective_dimension(&te, 3).at_most(1),
            || "id M ⊗ E > 1".into(),
        ),
    );
    put(
        "cohom-e-pd-le-one",
        Outcome::from_bool(
            he.is_zero() || projective_dimension(&he, 3).at_most(1),
            || "pd Hom(E, M) > 1".into(),
        ),
    );
    let e_right = ctx.e.right_module();
    let de = ctx.e.dual_left_module();
    put(
        "ext1-tensor-e-c",
        vanishes(ext_dim(&te, &regular(c), 1), "Ext¹(M ⊗ E, C)"),
    );
    put(
        "ext1-dc-cohom-e",
        vanishes(ext_dim(&dual_regular(c), &he, 1), "Ext¹(DC, Hom(E, M))"),
    );
    put(
        "ext1-e-tensor-e",
        vanishes(ext_dim(&e_right, &te, 1), "Ext¹(E, M ⊗ E)"),
    );
    put(
        "ext1-cohom-e-de",
        vanishes(ext_dim(&he, &de, 1), "Ext¹(Hom(E, M), DE)"),
    );

    // M ⊗ E recovered from Hom(E, M ⊗ E)
    let back = ctx.cohom_e_raw(&te).map(|h| ctx.tensor_e_raw(&h));
    put(
        "tensor-e-recovered",
        back.map(|x| iso(&x, &te, seed, "Hom(E, M ⊗ E) ⊗ E vs M ⊗ E"))
            .into(),
    );

    // induction of τΩτ⁻¹Ω⁻¹M agrees with coinduction of its tensor
    let twisted = ctx.cohom_e_raw(&te);
    put(
        "induce-matches-coinduce",
        twisted
            .and_then(|n| {
                if n.is_zero() {
                    return Ok(Outcome::Skip("τΩτ⁻¹Ω⁻¹M = 0".into()));
                }
                let co = ctx.coinduce(&ctx.tensor_e_raw(&n))?;
                Ok(iso(&ctx.induce(&n), &co, seed, "N ⊗ B vs Hom_C(B, N ⊗ E)"))
            })
            .into(),
    );

    put(
        "tau-is-dtr",
        if is_projective(m) {
            Outcome::Skip("projective".into())
        } else {
            iso(&tau(m), &d_tr(m, op), seed, "τM vs DTrM")
        },
    );
    put(
        "tau-inverse-is-trd",
        if is_injective(m) {
            Outcome::Skip("injective".into())
        } else {
            tau_inverse(m)
                .map(|t| iso(&t, &tr_d(m, op), seed, "τ⁻¹M vs TrDM"))
                .into()
        },
    );

    put(
        "ext1-cokernel",
        if pd_le1 && !is_injective(m) {
            ext1_cokernel_check(m, ctx, seed)
                .map(|r| Outcome::from_bool(r.passed, || format!("{r:?}")))
                .into()
        } else {
            Outcome::Skip(format!("pd {pd}, id {id}"))
        },
    );
    put(
        "detect-induced-round-trip",
        match ctx.detect_induced(&ind, seed) {
            Ok((n, _)) => iso(&n, m, seed, "recovered module"),
            Err(v) => Outcome::Fail(format!("induced module not detected: {}", v.label())),
        },
    );
    put(
        "dual-presentation",
        dual_presentation(m, ctx, seed)
            .map(|_| Outcome::Pass)
            .into(),
    );
    report.checks = checks;
    report
}

/// Runs the whole suite. The report depends only on `seed` and `max_dim`.
pub fn run_selftest(seed: u64, max_dim: usize) -> Result<SelftestReport> {
    let contexts = corpus_contexts(seed)?;
    let mut reports = Vec::new();
    for ctx in &contexts {
        let op = Arc::new(ctx.c.opposite());
        let hereditary = global_dimension(&ctx.c, 3).at_most(1);
        let modules = module_corpus(ctx, max_dim, seed)?;
        let checks = context_checks(ctx, seed);
        let modules = modules
            .iter()
            .map(|m| module_report(m, ctx, &op, hereditary, seed))
            .collect();
        reports.push(ContextReport {
            name: ctx.name.clone(),
            dim_c: ctx.c.dim(),
            dim_e: ctx.e.dim(),
            dim_b: ctx.b.dim(),
            hereditary,
            checks,
            modules,
        });
    }
    let modules = reports.iter().map(|r| r.modules.len()).sum();
    let outcomes = || {
        reports.iter().flat_map(|r| {
            r.checks
                .values()
                .chain(r.modules.iter().flat_map(|m| m.checks.values()))
        })
    };
    let summary = Summary {
        contexts: reports.len(),
        modules,
        checks: outcomes()
            .filter(|o| !matches!(o, Outcome::Skip(_)))
            .count(),
        failures: outcomes().filter(|o| o.is_fail()).count(),
        certificate_warnings: reports
            .iter()
            .flat_map(|r| &r.modules)
            .filter(|m| m.clause.is_some() && !m.certificate_found)
            .count(),
    };
    if contexts.is_empty() {
        return Err(Error::Input("empty corpus".into()));
    }
    Ok(SelftestReport {
        seed,
        field: contexts[0].c.field().to_string(),
        max_dim,
        iso_trials: DEFAULT_ISO_TRIALS,
        path_cap: DEFAULT_PATH_CAP,
        contexts: reports,
        summary,
    })
}
