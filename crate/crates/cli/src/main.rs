//! `demazure`: crystal graphs, Demazure path sets, condition sweeps and
//! experiments from the command line.
//!
//! Exit status: 0 on success, 1 when a mathematical check fails (a JSON
//! witness is printed), 2 on usage errors.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use demazure_crystals::demazure::{
    character, check_conditions, classical_invariance_check, demazure_paths, recursive_oracle,
    search_schedules, Engine, Kappa, SearchConfig,
};
use demazure_crystals::graph::build_graph;
use demazure_crystals::perfect::check_perfectness;
use demazure_crystals::schedule::builtin;
use demazure_crystals::{
    AffineType, Budget, ClassicalWeight, CoordinateCrystal, Crystal, CrystalError, Exec, Path,
    PathSpace, Schedule, TableauCrystal,
};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "demazure", version, about = "Perfect crystals, paths and Demazure crystals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Crystal graph of B as DOT or JSON.
    Graph(Common),
    /// Path set of B_{w^(k)}(λ) and its character.
    Demazure {
        #[command(flatten)]
        common: Common,
        /// Tensor form: 1 or 2.
        #[arg(long, default_value_t = 1)]
        kappa: u8,
    },
    /// Condition report for j ≤ jmax.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        jmax: usize,
        /// Also check (II′) and require the κ = 2 hypotheses.
        #[arg(long)]
        kappa2: bool,
    },
    /// Recursive f-closure against the tensor form, for every step up to k.
    Oracle(Common),
    /// Perfectness surrogate report.
    Perfect(Common),
    /// Experiments.
    Experiment {
        #[command(subcommand)]
        which: Experiment,
    },
    /// B_{w^(Ld)}(lΛ_0) against B^{⊗L}.
    Invariance {
        #[command(flatten)]
        common: Common,
        #[arg(long = "L")]
        big_l: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Experiment {
    /// Bounded schedule search for κ = 1 and κ = 2.
    Kappa2 {
        #[command(flatten)]
        common: Common,
        /// Longest row to try; defaults to 2n.
        #[arg(long)]
        d_max: Option<usize>,
        /// Number of distinct rows (period in j).
        #[arg(long, default_value_t = 1)]
        period: usize,
        #[arg(long, default_value_t = 3)]
        jmax: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Common {
    /// A1, B1, C1, D1, A2odd, A2even or D2.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    l: u32,
    /// For A1 the first `--k` is the column height; otherwise, or when
    /// given a second time, it is the number of steps.
    #[arg(long = "k", action = ArgAction::Append)]
    k: Vec<usize>,
    /// Number of steps k of w^(k).
    #[arg(long)]
    steps: Option<usize>,
    /// Coefficients of λ, e.g. 1,0,0,0; defaults to lΛ_0 (lΛ_1 for `experiment`).
    #[arg(long)]
    lambda: Option<String>,
    /// Builtin variant (default, alt, formula, intro) or a JSON schedule file.
    #[arg(long)]
    schedule: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Closure cap; defaults to CRYSTAL_BUDGET or 10^6.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Run without the thread pool.
    #[arg(long)]
    sequential: bool,
}

enum Failure {
    Usage(String),
    Math(serde_json::Value),
}

impl From<CrystalError> for Failure {
    fn from(e: CrystalError) -> Self {
        match e {
            CrystalError::ConditionFailure(report) => Failure::Math(
                serde_json::from_str(&report).unwrap_or_else(|_| json!({ "error": report })),
            ),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Run<T> = Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Run<T> {
    Err(Failure::Usage(msg.into()))
}

struct Ctx {
    ty: AffineType,
    steps: Option<usize>,
    lambda: Option<ClassicalWeight>,
    schedule: Option<String>,
    format: Option<Format>,
    budget: Budget,
    exec: Exec,
}

impl Ctx {
    fn exec_budget(&self) -> (Budget, Exec) {
        (self.budget, self.exec)
    }

    fn steps(&self) -> Run<usize> {
        self.steps.map_or_else(|| usage("missing step count (--k or --steps)"), Ok)
    }

    fn format(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

/// Where a subcommand's output goes, and with which exit status.
struct Outcome {
    body: String,
    passed: bool,
}

fn json_body(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json serializes") + "\n"
}

fn resolve_lambda<C: Crystal>(c: &C, ctx: &Ctx, default_index: usize) -> ClassicalWeight {
    ctx.lambda.clone().unwrap_or_else(|| {
        ClassicalWeight::fundamental(c.index_count(), default_index).scaled(c.level() as i64)
    })
}

fn resolve_schedule(ctx: &Ctx, column_height: usize, lambda: &ClassicalWeight) -> Run<Schedule> {
    let default = if matches!(ctx.ty, AffineType::A1(_)) { "formula" } else { "default" };
    let name = ctx.schedule.as_deref().unwrap_or(default);
    let file = std::path::Path::new(name);
    if name.ends_with(".json") || file.is_file() {
        let text = std::fs::read_to_string(file)
            .map_err(|e| Failure::Usage(format!("cannot read {name}: {e}")))?;
        return Ok(Schedule::from_json(&text)?);
    }
    Ok(builtin(ctx.ty, column_height, lambda, name)?)
}

fn engine<C: Crystal>(c: C, ctx: &Ctx, column_height: usize) -> Run<Engine<C>> {
    let lambda = resolve_lambda(&c, ctx, 0);
    let sched = resolve_schedule(ctx, column_height, &lambda)?;
    let space = PathSpace::new(c, lambda)?;
    let (budget, exec) = ctx.exec_budget();
    Ok(Engine::new(space, sched, budget, exec)?)
}

fn render_path<C: Crystal>(space: &PathSpace<C>, p: &Path<C::Element>) -> String {
    space.render_with(p, p.len().max(1), |b| space.crystal().encode(b))
}

fn graph<C: Crystal>(c: &C, ctx: &Ctx) -> Run<Outcome> {
    let labels: Vec<usize> = c.affine_type().indices().collect();
    let seeds = c.elements();
    let g = build_graph(c, &seeds, &labels, ctx.budget, ctx.exec)?;
    let body = match ctx.format(Format::Dot) {
        Format::Dot => g.to_dot(c),
        Format::Json => json_body(&g.to_json(c)),
        Format::Text => {
            let mut out = String::new();
            for e in &g.edges {
                out += &format!(
                    "{} -{}-> {}\n",
                    c.encode(&g.vertices[e.source]),
                    e.label,
                    c.encode(&g.vertices[e.target])
                );
            }
            out
        }
    };
    Ok(Outcome { body, passed: true })
}

fn demazure<C: Crystal>(c: C, ctx: &Ctx, column_height: usize, kappa: u8) -> Run<Outcome> {
    let kappa = match kappa {
        1 => Kappa::One,
        2 => Kappa::Two,
        other => return usage(format!("--kappa must be 1 or 2, got {other}")),
    };
    let e = engine(c, ctx, column_height)?;
    let k = ctx.steps()?;
    let paths = demazure_paths(&e, k, kappa)?;
    let ch = character(&e.space, &paths);
    let (j, a) = e.schedule.position(k);
    let body = match ctx.format(Format::Json) {
        Format::Text => {
            let mut out = format!("k={k} j={j} a={a} paths={}\n", paths.len());
            for p in &paths {
                out += &render_path(&e.space, p);
                out.push('\n');
            }
            for (w, m) in &ch.0 {
                out += &format!("{w} {m}\n");
            }
            out
        }
        _ => json_body(&json!({
            "k": k,
            "j": j,
            "a": a,
            "schedule": e.schedule.to_json(),
            "count": paths.len(),
            "paths": paths.iter().map(|p| e.space.to_json(p)).collect::<Vec<_>>(),
            "character": ch.to_json(),
        })),
    };
    Ok(Outcome { body, passed: true })
}

fn verify<C: Crystal>(c: C, ctx: &Ctx, column_height: usize, jmax: usize, kappa2: bool) -> Run<Outcome> {
    if jmax == 0 {
        return usage("--jmax must be at least 1");
    }
    let e = engine(c, ctx, column_height)?;
    let r = check_conditions(&e, jmax, kappa2)?;
    let passed = if kappa2 { r.kappa_two() } else { r.kappa_one() };
    let body = match ctx.format(Format::Json) {
        Format::Text => {
            let mut out = format!(
                "II {} III {} IVprime {} IIprime {}\n",
                r.ii,
                r.iii,
                r.iv_prime,
                r.ii_prime.map_or("-".into(), |b| b.to_string())
            );
            for w in &r.witnesses {
                out += &format!("{} j={} a={} {} {}\n", w.condition, w.j, w.a, w.element, w.detail);
            }
            out
        }
        _ => json_body(&r.to_json()),
    };
    Ok(Outcome { body, passed })
}

fn oracle<C: Crystal>(c: C, ctx: &Ctx, column_height: usize) -> Run<Outcome> {
    let e = engine(c, ctx, column_height)?;
    let k_max = ctx.steps()?;
    let mut rows = Vec::new();
    for k in 0..=k_max {
        let rec = recursive_oracle(&e.space, &e.schedule, k, e.budget, e.exec)?;
        let tensor = demazure_paths(&e, k, Kappa::One)?;
        if rec != tensor {
            let only = |x: &BTreeSet<Path<C::Element>>, y: &BTreeSet<Path<C::Element>>| {
                x.difference(y).take(5).map(|p| render_path(&e.space, p)).collect::<Vec<_>>()
            };
            let witness = json!({
                "k": k,
                "recursive": rec.len(),
                "tensor": tensor.len(),
                "only_recursive": only(&rec, &tensor),
                "only_tensor": only(&tensor, &rec),
            });
            return Err(Failure::Math(witness));
        }
        rows.push((k, rec.len()));
    }
    let body = match ctx.format(Format::Json) {
        Format::Text => rows.iter().map(|(k, s)| format!("k={k} paths={s} equal\n")).collect(),
        _ => json_body(&json!({ "equal": true, "sizes": rows })),
    };
    Ok(Outcome { body, passed: true })
}

fn perfect<C: Crystal>(c: &C, ctx: &Ctx) -> Run<Outcome> {
    let r = check_perfectness(c, ctx.exec);
    let body = match ctx.format(Format::Json) {
        Format::Text => format!(
            "{} level {}: size {}, minimal {}, dominant weights {}, passed {}\n",
            r.family,
            r.level,
            r.size,
            r.minimal_elements,
            r.dominant_weights,
            r.passed()
        ),
        _ => json_body(&serde_json::to_value(&r).expect("report serializes")),
    };
    Ok(Outcome { body, passed: r.passed() })
}

fn kappa2<C: Crystal + Clone>(c: C, ctx: &Ctx, d_max: Option<usize>, period: usize, jmax: usize) -> Run<Outcome> {
    if period == 0 || jmax == 0 {
        return usage("--period and --jmax must be positive");
    }
    let lambda = resolve_lambda(&c, ctx, 1);
    let cfg = SearchConfig {
        d_max: d_max.unwrap_or(2 * ctx.ty.rank()),
        period,
        j_max: jmax,
        budget: ctx.budget,
        exec: ctx.exec,
    };
    let one = search_schedules(&c, &lambda, Kappa::One, cfg)?;
    let two = search_schedules(&c, &lambda, Kappa::Two, cfg)?;
    let body = match ctx.format(Format::Json) {
        Format::Text => {
            let line = |r: &demazure_crystals::demazure::SearchReport| {
                format!(
                    "kappa={} checked={} pruned={} found={} first={:?}\n",
                    r.kappa,
                    r.candidates_checked,
                    r.prefixes_pruned,
                    r.found.len(),
                    r.found.first()
                )
            };
            line(&one) + &line(&two)
        }
        _ => json_body(&json!({ "kappa1": one.to_json(), "kappa2": two.to_json() })),
    };
    Ok(Outcome { body, passed: true })
}

fn invariance<C: Crystal>(c: C, ctx: &Ctx, column_height: usize, big_l: usize) -> Run<Outcome> {
    let e = engine(c, ctx, column_height)?;
    let r = classical_invariance_check(&e, big_l)?;
    let body = match ctx.format(Format::Json) {
        Format::Text => format!(
            "L={} i_L={} paths={} expected={} restricted characters equal {}\n",
            r.big_l, r.i_l, r.cardinality, r.expected_cardinality, r.restricted_characters_equal
        ),
        _ => json_body(&serde_json::to_value(&r).expect("report serializes")),
    };
    Ok(Outcome { body, passed: r.passed() })
}

/// Runs `$body` with `$c` bound to the family's crystal and `$h` to the
/// column height (0 outside type A).
macro_rules! with_crystal {
    ($common:expr, $ctx:ident, |$c:ident, $h:ident| $body:expr) => {{
        let (ctx_value, height) = context($common)?;
        let $ctx = &ctx_value;
        let $h = height;
        match $ctx.ty {
            AffineType::A1(n) => {
                let $c = TableauCrystal::new(n, $h, $common.l as usize)?;
                $body
            }
            ty => {
                let $c = CoordinateCrystal::new(ty, $common.l)?;
                $body
            }
        }
    }};
}

fn context(common: &Common) -> Run<(Ctx, usize)> {
    let ty = AffineType::new(&common.family, common.n)?;
    let (height, step_k): (usize, &[usize]) = match ty {
        AffineType::A1(_) => match common.k.split_first() {
            Some((&h, rest)) => (h, rest),
            None => return usage("A1 needs the column height --k"),
        },
        _ => (0, &common.k[..]),
    };
    if step_k.len() > 1 || (!step_k.is_empty() && common.steps.is_some()) {
        return usage("the step count was given more than once");
    }
    let lambda = match &common.lambda {
        Some(s) => Some(s.parse::<ClassicalWeight>()?),
        None => None,
    };
    let budget = common.budget.map_or_else(Budget::from_env, Budget);
    let ctx = Ctx {
        ty,
        steps: common.steps.or(step_k.first().copied()),
        lambda,
        schedule: common.schedule.clone(),
        format: common.format,
        budget,
        exec: if common.sequential { Exec::Sequential } else { Exec::Parallel },
    };
    Ok((ctx, height))
}

fn dispatch(cmd: &Command) -> Run<(Outcome, Option<PathBuf>)> {
    let (outcome, common) = match cmd {
        Command::Graph(common) => (with_crystal!(common, ctx, |c, _h| graph(&c, ctx))?, common),
        Command::Demazure { common, kappa } => {
            (with_crystal!(common, ctx, |c, h| demazure(c, ctx, h, *kappa))?, common)
        }
        Command::Verify { common, jmax, kappa2 } => {
            (with_crystal!(common, ctx, |c, h| verify(c, ctx, h, *jmax, *kappa2))?, common)
        }
        Command::Oracle(common) => (with_crystal!(common, ctx, |c, h| oracle(c, ctx, h))?, common),
        Command::Perfect(common) => (with_crystal!(common, ctx, |c, _h| perfect(&c, ctx))?, common),
        Command::Experiment { which: Experiment::Kappa2 { common, d_max, period, jmax } } => (
            with_crystal!(common, ctx, |c, _h| kappa2(c, ctx, *d_max, *period, *jmax))?,
            common,
        ),
        Command::Invariance { common, big_l } => {
            (with_crystal!(common, ctx, |c, h| invariance(c, ctx, h, *big_l))?, common)
        }
    };
    Ok((outcome, common.output.clone()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok((outcome, output)) => {
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &outcome.body) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{}", outcome.body),
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Math(witness)) => {
            print!("{}", json_body(&witness));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
