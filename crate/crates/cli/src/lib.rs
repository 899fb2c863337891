pub mod cache;
pub mod json;

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use superjack::forms::{self, GramReport};
use superjack::verify;
use superjack::{
    bound_check, parse_rational, specialize_theta, Basis, Error, JackAlgebra, Partition, Rational, Result,
    SymbolicSystem, ThetaFunction, ThetaGuard,
};

use cache::Cache;
use json::{error_kind, GramJson, MPolyJson, SymFuncJson};

#[derive(Debug, Clone, PartialEq)]
pub enum ThetaArg {
    Symbolic,
    Value(Rational),
}

fn parse_theta(s: &str) -> std::result::Result<ThetaArg, String> {
    if s == "symbolic" {
        return Ok(ThetaArg::Symbolic);
    }
    parse_rational(s)
        .map(ThetaArg::Value)
        .map_err(|e| format!("expected \"symbolic\" or a rational p/q: {e}"))
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Monomial,
    Powersum,
}

#[derive(Debug, Parser)]
#[command(name = "superjack", version, about = "Jack and super-Jack polynomials and deformed CMS operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// "symbolic" or a rational value such as 3/2.
    #[arg(long, global = true, default_value = "symbolic", value_parser = parse_theta)]
    pub theta: ThetaArg,

    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,

    #[arg(long, global = true, env = "SUPERJACK_CACHE_DIR", default_value = cache::DEFAULT_DIR)]
    pub cache_dir: PathBuf,

    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Debug, Args)]
pub struct Layout {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jack symmetric function P_λ.
    Jack {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_enum, default_value = "monomial")]
        basis: BasisArg,
    },
    /// Super-Jack polynomial SP_λ in n + m variables.
    Superjack {
        #[command(flatten)]
        layout: Layout,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Super-Hermite polynomial SH_λ = e^{-L/2} SP_λ.
    Hermite {
        #[command(flatten)]
        layout: Layout,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Gram matrix of the bilinear form on super-Jack polynomials.
    Gram {
        #[command(flatten)]
        layout: Layout,
        #[arg(long)]
        degree: usize,
    },
    /// Gram matrix of super-Hermite polynomials, via the isometry.
    HermiteGram {
        #[command(flatten)]
        layout: Layout,
        #[arg(long)]
        degree: usize,
    },
    /// Eigenvalue of the trigonometric integral of order r on SP_λ.
    Eigen {
        #[command(flatten)]
        layout: Layout,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, default_value_t = 2)]
        r: u32,
    },
    /// φ(P_λ) = 0 exactly when λ is outside the fat hook.
    KernelCheck {
        #[command(flatten)]
        layout: Layout,
        #[arg(long)]
        degree: usize,
    },
    /// Reproducing property of the kernel for every μ up to the degree.
    ReproducingCheck {
        #[command(flatten)]
        layout: Layout,
        #[arg(long)]
        degree: usize,
    },
    /// Growth bound on SP_λ at seeded random complex points.
    BoundCheck {
        #[command(flatten)]
        layout: Layout,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 50)]
        points: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Every module's invariant suite at the given scale.
    VerifyAll {
        #[command(flatten)]
        layout: Layout,
        #[arg(long)]
        degree: usize,
    },
}

/// What a command produced: a report, and whether its checks passed.
pub struct Outcome {
    pub body: String,
    pub pass: bool,
}

struct Ctx {
    theta: ThetaArg,
    format: Format,
    cache: Cache,
}

impl Ctx {
    /// Coefficient text after specializing θ under `guard`.
    fn coeff(&self, c: &ThetaFunction, guard: ThetaGuard) -> Result<String> {
        match &self.theta {
            ThetaArg::Symbolic => Ok(c.to_string()),
            ThetaArg::Value(v) => Ok(specialize_theta(c, v, guard)?.to_string()),
        }
    }

    fn guard_check(&self, guard: ThetaGuard) -> Result<()> {
        match &self.theta {
            ThetaArg::Symbolic => Ok(()),
            ThetaArg::Value(v) => guard.check(v),
        }
    }

    fn render<T: Serialize>(&self, value: &T, header: &[String], rows: Vec<Vec<String>>) -> Result<String> {
        match self.format {
            Format::Json => serde_json::to_string_pretty(value).map_err(|e| Error::InvalidArgument(e.to_string())),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| Error::InvalidArgument(e.to_string());
                w.write_record(header).map_err(io)?;
                for row in rows {
                    w.write_record(&row).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(e.to_string()))?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
        }
    }
}

fn fat_hook(layout: &Layout) -> ThetaGuard {
    ThetaGuard::FatHook {
        n: layout.n,
        m: layout.m,
    }
}

fn poly_output(ctx: &Ctx, sym: &MPolyJson, guard: ThetaGuard) -> Result<Outcome> {
    ctx.guard_check(guard)?;
    let p = sym.decode()?;
    let out = MPolyJson::encode(&p, |c| ctx.coeff(c, guard))?;
    let rows = out
        .terms
        .iter()
        .map(|t| vec![join(&t.exps), t.coeff.clone()])
        .collect();
    Ok(Outcome {
        body: ctx.render(&out, &["exps".into(), "coeff".into()], rows)?,
        pass: true,
    })
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn gram_output(ctx: &Ctx, report: GramReport<ThetaFunction>, guard: ThetaGuard) -> Result<Outcome> {
    ctx.guard_check(guard)?;
    let pass = match &ctx.theta {
        ThetaArg::Symbolic => report.pass,
        ThetaArg::Value(v) => {
            let spec = |c: &ThetaFunction| specialize_theta(c, v, guard);
            let r = GramReport {
                n: report.n,
                m: report.m,
                degree: report.degree,
                labels: report.labels.clone(),
                matrix: report
                    .matrix
                    .iter()
                    .map(|row| row.iter().map(spec).collect::<Result<Vec<_>>>())
                    .collect::<Result<_>>()?,
                expected_diagonal: report.expected_diagonal.iter().map(spec).collect::<Result<_>>()?,
                pass: false,
                provenance: None,
            };
            r.is_diagonal() && r.diagonal_matches()
        }
    };
    let text = |c: &ThetaFunction| ctx.coeff(c, guard);
    let out = GramJson {
        n: report.n,
        m: report.m,
        degree: report.degree,
        labels: report.labels.iter().map(|l| l.parts().to_vec()).collect(),
        matrix: report
            .matrix
            .iter()
            .map(|row| row.iter().map(text).collect::<Result<_>>())
            .collect::<Result<_>>()?,
        expected_diagonal: report.expected_diagonal.iter().map(text).collect::<Result<_>>()?,
        pass,
        provenance: report.provenance.clone(),
    };
    let header: Vec<String> = report.labels.iter().map(Partition::to_string).collect();
    Ok(Outcome {
        body: ctx.render(&out, &header, out.matrix.clone())?,
        pass,
    })
}

fn checks_output(ctx: &Ctx, value: Value, header: &[&str], rows: Vec<Vec<String>>, pass: bool) -> Result<Outcome> {
    let header: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    Ok(Outcome {
        body: ctx.render(&value, &header, rows)?,
        pass,
    })
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let ctx = Ctx {
        theta: cli.theta.clone(),
        format: cli.format,
        cache: if cli.no_cache {
            Cache::disabled()
        } else {
            Cache::new(&cli.cache_dir)
        },
    };
    let algebra = Arc::new(JackAlgebra::symbolic());
    let system = |l: &Layout| SymbolicSystem::new(l.n, l.m, algebra.clone());
    match &cli.command {
        Command::Jack { lambda, basis } => {
            let guard = ThetaGuard::NonPositiveRational;
            ctx.guard_check(guard)?;
            let basis = match basis {
                BasisArg::Monomial => Basis::Monomial,
                BasisArg::Powersum => Basis::PowerSum,
            };
            let key = format!("jack/{}/{}", basis.name(), lambda);
            let sym: SymFuncJson = ctx.cache.get_or_compute(&key, || {
                SymFuncJson::encode(&algebra.jack_in(lambda, basis), |c| Ok(c.to_string()))
            })?;
            let f = sym.decode()?;
            let out = SymFuncJson::encode(&f, |c| ctx.coeff(c, guard))?;
            let rows = out
                .terms
                .iter()
                .map(|t| vec![join(&t.partition), t.coeff.clone()])
                .collect();
            Ok(Outcome {
                body: ctx.render(&out, &["partition".into(), "coeff".into()], rows)?,
                pass: true,
            })
        }
        Command::Superjack { layout, lambda } => {
            let key = format!("superjack/{},{}/{}", layout.n, layout.m, lambda);
            let sym: MPolyJson = ctx.cache.get_or_compute(&key, || {
                MPolyJson::encode(&system(layout).super_jack(lambda).poly, |c| Ok(c.to_string()))
            })?;
            poly_output(&ctx, &sym, fat_hook(layout))
        }
        Command::Hermite { layout, lambda } => {
            let key = format!("hermite/{},{}/{}", layout.n, layout.m, lambda);
            let sym: MPolyJson = ctx.cache.get_or_compute(&key, || {
                MPolyJson::encode(&system(layout).super_hermite(lambda)?, |c| Ok(c.to_string()))
            })?;
            poly_output(&ctx, &sym, fat_hook(layout))
        }
        Command::Gram { layout, degree } => {
            ctx.guard_check(fat_hook(layout))?;
            gram_output(&ctx, forms::gram_matrix(&system(layout), *degree)?, fat_hook(layout))
        }
        Command::HermiteGram { layout, degree } => {
            ctx.guard_check(fat_hook(layout))?;
            gram_output(&ctx, forms::hermite_gram(&system(layout), *degree)?, fat_hook(layout))
        }
        Command::Eigen { layout, lambda, r } => {
            let guard = fat_hook(layout);
            ctx.guard_check(guard)?;
            let sys = system(layout);
            if !lambda.in_fat_hook(layout.n, layout.m) {
                return Err(Error::NotInFatHook {
                    partition: lambda.clone(),
                    n: layout.n,
                    m: layout.m,
                });
            }
            let value = ctx.coeff(&sys.trig_eigenvalue(lambda, *r)?, guard)?;
            let body = json!({
                "n": layout.n, "m": layout.m, "lambda": lambda.parts(), "r": r, "eigenvalue": value,
            });
            let row = vec![lambda.to_string(), r.to_string(), value];
            checks_output(&ctx, body, &["partition", "r", "eigenvalue"], vec![row], true)
        }
        Command::KernelCheck { layout, degree } => {
            let sys = system(layout);
            let mut results = Vec::new();
            let mut rows = Vec::new();
            let mut pass = true;
            for k in 0..=*degree {
                for lam in Partition::all(k) {
                    let inside = lam.in_fat_hook(layout.n, layout.m);
                    let zero = sys.super_jack(&lam).poly.is_zero();
                    pass &= inside != zero;
                    rows.push(vec![lam.to_string(), inside.to_string(), zero.to_string()]);
                    results.push(json!({"partition": lam.parts(), "in_fat_hook": inside, "zero": zero}));
                }
            }
            let body = json!({"n": layout.n, "m": layout.m, "degree": degree, "results": results, "pass": pass});
            checks_output(&ctx, body, &["partition", "in_fat_hook", "zero"], rows, pass)
        }
        Command::ReproducingCheck { layout, degree } => {
            let sys = system(layout);
            let mut results = Vec::new();
            let mut rows = Vec::new();
            let mut pass = true;
            for k in 0..=*degree {
                for mu in sys.labels(k) {
                    let ok = forms::reproducing_check(&sys, &mu)?;
                    pass &= ok;
                    rows.push(vec![mu.to_string(), ok.to_string()]);
                    results.push(json!({"partition": mu.parts(), "pass": ok}));
                }
            }
            let body = json!({"n": layout.n, "m": layout.m, "degree": degree, "results": results, "pass": pass});
            checks_output(&ctx, body, &["partition", "pass"], rows, pass)
        }
        Command::BoundCheck {
            layout,
            degree,
            points,
            seed,
        } => {
            let ThetaArg::Value(theta) = &ctx.theta else {
                return Err(Error::InvalidArgument("bound-check needs a rational --theta".into()));
            };
            let report = bound_check(&system(layout), theta, *degree, *points, *seed)?;
            let samples: Vec<Value> = report
                .samples
                .iter()
                .map(|s| json!({"partition": s.lambda.parts(), "max_ratio": s.max_ratio, "pass": s.pass}))
                .collect();
            let rows = report
                .samples
                .iter()
                .map(|s| vec![s.lambda.to_string(), format!("{:e}", s.max_ratio), s.pass.to_string()])
                .collect();
            let body = json!({
                "n": report.n, "m": report.m, "theta": report.theta.to_string(), "points": report.points,
                "seed": report.seed, "samples": samples, "pass": report.pass,
            });
            checks_output(&ctx, body, &["partition", "max_ratio", "pass"], rows, report.pass)
        }
        Command::VerifyAll { layout, degree } => {
            let outcomes = verify::verify_all(layout.n, layout.m, *degree);
            let pass = outcomes.iter().all(|o| o.pass);
            let checks: Vec<Value> = outcomes
                .iter()
                .map(|o| json!({"module": o.module, "name": o.name, "pass": o.pass, "detail": o.detail}))
                .collect();
            let rows = outcomes
                .iter()
                .map(|o| vec![o.module.to_string(), o.name.clone(), o.pass.to_string(), o.detail.clone()])
                .collect();
            let summary = format!(
                "{}/{} checks passed",
                outcomes.iter().filter(|o| o.pass).count(),
                outcomes.len()
            );
            let body = json!({
                "n": layout.n, "m": layout.m, "degree": degree, "checks": checks, "summary": summary, "pass": pass,
            });
            checks_output(&ctx, body, &["module", "name", "pass", "detail"], rows, pass)
        }
    }
}

/// Runs a parsed command. Returns the exit status and what goes to stdout.
pub fn run(cli: &Cli) -> (u8, String) {
    match execute(cli) {
        Ok(Outcome { body, pass }) => (if pass { 0 } else { 1 }, body),
        Err(e) => {
            let report = json!({"error": {"kind": error_kind(&e), "message": e.to_string()}});
            (1, serde_json::to_string_pretty(&report).expect("error report serializes"))
        }
    }
}
