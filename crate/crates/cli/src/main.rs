use std::io::Write;
use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ctalg::algebra::{build_algebra, Algebra, BoundQuiver, QuiverSpec, DEFAULT_PATH_CAP};
use ctalg::exactlin::Field;
use ctalg::homfun::{d_tr, tau, tau_inverse, tr_d};
use ctalg::io::{parse_module, AlgebraTable, ModuleFile};
use ctalg::modrep::{cosyzygy, global_dimension, syzygy, Module, DEFAULT_ISO_TRIALS};
use ctalg::present::{
    gorenstein_report, iterate_resolution, nu_inverse_module, nu_module, present, StopReason,
};
use ctalg::relext::{context_from_cut, relation_extension, ExtensionContext};
use ctalg::report::{format_presentation, format_sum, term_list, PresentReport, RunInfo};
use ctalg::selftest::{run_selftest, DEFAULT_MAX_DIM};
use ctalg::{corpus, Error, Result};

#[derive(Parser)]
#[command(
    name = "ctalg",
    version,
    about = "Injective presentations of induced modules over cluster-tilted algebras"
)]
struct Cli {
    #[command(flatten)]
    flags: Flags,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Flags {
    /// Ground field: Q or a prime p (overrides the algebra file).
    #[arg(long, global = true)]
    field: Option<String>,
    #[arg(long, global = true, env = "CTALG_SEED", default_value_t = 1)]
    seed: u64,
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of steps for `resolve`.
    #[arg(long, global = true, default_value_t = 12)]
    steps: usize,
    /// Path-length cap when enumerating paths.
    #[arg(long, global = true, default_value_t = DEFAULT_PATH_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Algebra inspection.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Builds B = C ⋉ Ext²(DC, C) and prints its structure table.
    Relext { algebra: String },
    /// Applies a functor to a module over C.
    Functor {
        functor: FunctorKind,
        algebra: String,
        module: String,
    },
    /// M ⊗_C B.
    Induce { algebra: String, module: String },
    /// Hom_C(B, M).
    Coinduce { algebra: String, module: String },
    /// The injective presentation of M ⊗_C B.
    Present { algebra: String, module: String },
    /// Iterated presentations of a module over B through a family of cuts.
    Resolve {
        algebra: String,
        module: String,
        cuts: String,
    },
    /// Injective dimensions of projective B-modules and the dual table.
    Gorenstein { algebra: String },
    /// The invariant suite over the bundled corpus.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    Check { algebra: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum FunctorKind {
    Tau,
    TauInv,
    Omega,
    OmegaInv,
    Nu,
    NuInv,
    #[value(name = "tensorE")]
    TensorE,
    #[value(name = "homE")]
    HomE,
    Dtr,
    Trd,
}

fn read_text(arg: &str) -> Result<String> {
    if Path::new(arg).exists() {
        return Ok(std::fs::read_to_string(arg)?);
    }
    corpus::QUIVERS
        .iter()
        .find(|(n, _)| *n == arg)
        .map(|(_, t)| t.to_string())
        .ok_or_else(|| Error::Input(format!("{arg:?} is neither a file nor a bundled algebra")))
}

fn parse_field(s: &str) -> Result<Field> {
    match s {
        "Q" | "q" => Ok(Field::Rational),
        _ => {
            let p = s
                .trim_start_matches(['F', 'f'])
                .parse()
                .map_err(|_| Error::Input(format!("bad field {s:?}")))?;
            Field::prime(p)
        }
    }
}

fn load_quiver(arg: &str, flags: &Flags) -> Result<BoundQuiver> {
    let mut spec: QuiverSpec = serde_json::from_str(&read_text(arg)?)?;
    if let Some(f) = &flags.field {
        spec.field = parse_field(f)?;
    }
    BoundQuiver::from_spec(&spec)
}

fn load_algebra(arg: &str, flags: &Flags) -> Result<Arc<Algebra>> {
    Ok(Arc::new(build_algebra(
        &load_quiver(arg, flags)?,
        flags.cap,
    )?))
}

fn load_module(alg: &Arc<Algebra>, arg: &str) -> Result<Module> {
    if Path::new(arg).exists() {
        parse_module(alg, &std::fs::read_to_string(arg)?)
    } else {
        parse_module(alg, arg)
    }
}

fn context(arg: &str, flags: &Flags) -> Result<ExtensionContext> {
    let c = load_algebra(arg, flags)?;
    relation_extension(arg, &c, flags.seed)
}

fn run_info(alg: &Algebra, flags: &Flags) -> RunInfo {
    RunInfo {
        field: alg.field().to_string(),
        seed: flags.seed,
        iso_trials: DEFAULT_ISO_TRIALS,
        path_cap: flags.cap,
        max_steps: flags.steps,
    }
}

fn gabriel(alg: &Algebra) -> Vec<(String, String, usize)> {
    alg.gabriel_quiver()
        .into_iter()
        .map(|((a, b), k)| (a, b, k))
        .collect()
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{}", serde_json::to_string_pretty(v)?) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn print_module(m: &Module, flags: &Flags) -> Result<()> {
    if flags.json {
        print_json(
            &json!({ "loewy": m.loewy_string(), "dims": m.dims(), "module": ModuleFile::from_module(m) }),
        )
    } else {
        println!("{}  dims {:?}", m.loewy_string(), m.dims());
        Ok(())
    }
}

/// Returns `false` when the verdict is a falsified conclusion.
fn run(cli: &Cli) -> Result<bool> {
    let flags = &cli.flags;
    match &cli.cmd {
        Cmd::Algebra {
            cmd: AlgebraCmd::Check { algebra },
        } => {
            let a = load_algebra(algebra, flags)?;
            a.check_axioms()?;
            let gl = global_dimension(&a, 4);
            if flags.json {
                print_json(&json!({
                    "field": a.field().to_string(),
                    "vertices": a.num_vertices(),
                    "dim": a.dim(),
                    "gl_dim": gl.to_string(),
                    "gabriel_quiver": gabriel(&a),
                }))?;
            } else {
                println!(
                    "dim {}  vertices {}  gl.dim {}",
                    a.dim(),
                    a.num_vertices(),
                    gl
                );
                for (s, t, k) in gabriel(&a) {
                    println!(
                        "  {s} → {t}{}",
                        if k > 1 {
                            format!(" ×{k}")
                        } else {
                            String::new()
                        }
                    );
                }
            }
        }
        Cmd::Relext { algebra } => {
            let ctx = context(algebra, flags)?;
            let report = json!({
                "dim_c": ctx.c.dim(),
                "dim_e": ctx.e.dim(),
                "dim_b": ctx.b.dim(),
                "gabriel_quiver": gabriel(&ctx.b),
            });
            if flags.json {
                print_json(
                    &json!({ "algebra": AlgebraTable::from_algebra(&ctx.b), "report": report, "run": run_info(&ctx.b, flags) }),
                )?;
            } else {
                println!(
                    "dim C {}  dim E {}  dim B {}",
                    ctx.c.dim(),
                    ctx.e.dim(),
                    ctx.b.dim()
                );
                if ctx.e.dim() == 0 {
                    println!("E = 0: B = C");
                }
                for (s, t, k) in gabriel(&ctx.b) {
                    println!(
                        "  {s} → {t}{}",
                        if k > 1 {
                            format!(" ×{k}")
                        } else {
                            String::new()
                        }
                    );
                }
            }
        }
        Cmd::Functor {
            functor,
            algebra,
            module,
        } => {
            let needs_e = matches!(functor, FunctorKind::TensorE | FunctorKind::HomE);
            let (c, ctx) = if needs_e {
                let ctx = context(algebra, flags)?;
                (ctx.c.clone(), Some(ctx))
            } else {
                (load_algebra(algebra, flags)?, None)
            };
            let m = load_module(&c, module)?;
            let op = || Arc::new(c.opposite());
            let out = match functor {
                FunctorKind::Tau => tau(&m),
                FunctorKind::TauInv => tau_inverse(&m)?,
                FunctorKind::Omega => syzygy(&m),
                FunctorKind::OmegaInv => cosyzygy(&m),
                FunctorKind::Nu => nu_module(&m),
                FunctorKind::NuInv => nu_inverse_module(&m),
                FunctorKind::TensorE => ctx.as_ref().expect("context").tensor_e(&m, flags.seed)?,
                FunctorKind::HomE => ctx.as_ref().expect("context").cohom_e(&m, flags.seed)?,
                FunctorKind::Dtr => d_tr(&m, &op()),
                FunctorKind::Trd => tr_d(&m, &op()),
            };
            print_module(&out, flags)?;
        }
        Cmd::Induce { algebra, module } => {
            let ctx = context(algebra, flags)?;
            let m = load_module(&ctx.c, module)?;
            print_module(&ctx.induce(&m), flags)?;
        }
        Cmd::Coinduce { algebra, module } => {
            let ctx = context(algebra, flags)?;
            let m = load_module(&ctx.c, module)?;
            print_module(&ctx.coinduce(&m)?, flags)?;
        }
        Cmd::Present { algebra, module } => {
            let ctx = context(algebra, flags)?;
            let m = load_module(&ctx.c, module)?;
            let p = present(&m, &ctx, flags.seed)?;
            let report =
                PresentReport::new(&ctx.name, m.loewy_string(), &p, run_info(&ctx.b, flags));
            if flags.json {
                print_json(&report)?;
            } else {
                let b = &ctx.b;
                println!(
                    "M = {}  (pd {}, id {}, clause {})",
                    report.module, report.pd, report.id, report.clause
                );
                println!("{}", format_presentation(b, &p.terms.left, &p.terms.right));
                println!(
                    "oracle: {}  K = {}  L = {}",
                    if p.oracle.accepted {
                        "accept"
                    } else {
                        "reject"
                    },
                    format_sum(b, &p.oracle.k, "I_B"),
                    format_sum(b, &p.oracle.l, "I_B")
                );
                match p.ranks() {
                    Some(r) => println!(
                        "certificate: rank f {} = dim M⊗B {}, rank g {}, dim coker g {}",
                        r.rank_f, r.dim_x, r.rank_g, r.dim_coker_g
                    ),
                    None => println!(
                        "certificate: not found ({})",
                        p.search_note.as_deref().unwrap_or("")
                    ),
                }
            }
        }
        Cmd::Resolve {
            algebra,
            module,
            cuts,
        } => {
            let bq = load_quiver(algebra, flags)?;
            let cuts = corpus::parse_cuts(&read_text_or_bundled_cuts(cuts)?)?;
            let family = cuts
                .iter()
                .map(|cut| context_from_cut(&bq, cut, flags.cap, flags.seed))
                .collect::<Result<Vec<_>>>()?;
            let Some(first) = family.first() else {
                return Err(Error::Input("empty cut family".into()));
            };
            let amb = first.ambient_algebra().clone();
            let x = load_module(&amb, module)?;
            let trace = iterate_resolution(&x, &family, flags.steps, flags.seed)?;
            if flags.json {
                let terms: Vec<_> = trace.terms().iter().map(|t| term_list(&amb, t)).collect();
                print_json(
                    &json!({ "trace": trace, "terms": terms, "run": run_info(&amb, flags) }),
                )?;
            } else {
                for s in &trace.steps {
                    println!(
                        "{:<12} via {:<4} {} → {}",
                        s.module,
                        s.context.as_deref().unwrap_or("-"),
                        format_sum(&amb, &s.left, "I"),
                        format_sum(&amb, &s.right, "I")
                    );
                }
                match &trace.stop {
                    StopReason::Periodic => {
                        println!("periodic, period {} on terms", trace.period.unwrap_or(0))
                    }
                    StopReason::Finite => println!("finite"),
                    StopReason::MaxSteps => println!("stopped after {} steps", flags.steps),
                    StopReason::NoInducingCut(m) => println!("no cut induces {m}"),
                }
            }
            if let StopReason::NoInducingCut(m) = trace.stop {
                return Err(Error::NoInducingCut(m));
            }
        }
        Cmd::Gorenstein { algebra } => {
            let ctx = context(algebra, flags)?;
            let rows = gorenstein_report(&ctx, flags.seed)?;
            if flags.json {
                print_json(&json!({ "rows": rows, "run": run_info(&ctx.b, flags) }))?;
            } else {
                println!("vertex  id P_B  pd I_B");
                for r in &rows {
                    println!("{:<7} {:<6} {}", r.vertex, r.id_projective, r.pd_injective);
                }
            }
        }
        Cmd::Selftest { max_dim } => {
            let report = run_selftest(flags.seed, *max_dim)?;
            if flags.json {
                print_json(&report)?;
            } else {
                print!("{}", report.matrix_text());
                let s = &report.summary;
                println!(
                    "{} contexts, {} modules, {} checks, {} failures",
                    s.contexts, s.modules, s.checks, s.failures
                );
                for (ctx, m, check, detail) in report.failures() {
                    println!("FAIL {ctx} {m} {check}: {detail}");
                }
            }
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn read_text_or_bundled_cuts(arg: &str) -> Result<String> {
    if Path::new(arg).exists() {
        Ok(std::fs::read_to_string(arg)?)
    } else if arg == "ex3_cuts" {
        Ok(corpus::EX3_CUTS.to_string())
    } else {
        Err(Error::Input(format!(
            "{arg:?} is neither a file nor a bundled cut family"
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
