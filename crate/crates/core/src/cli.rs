//! The `kgraph` command line.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::CohnAlgebra;
use crate::combinatorics::ExhaustiveVerdict;
use crate::corpus;
use crate::degree::{Degree, Grade};
use crate::error::{Error, Result};
use crate::graph::{parse_kg, print_kg, to_dot, validate, KGraph};
use crate::json::{element_from_json, element_to_json, steinberg_from_json, steinberg_to_json, ElementJson};
use crate::kp::{iso_check, KpBridge};
use crate::path::Path;
use crate::pathrep::{rep_check, PathRep};
use crate::ring::{CoefficientRing, RingSpec};
use crate::steinberg::SteinbergAlgebra;
use crate::suite::{acceptance, graph_suite, seed_from_env};
use crate::tgraph::{build_tlambda, TLambda};
use crate::with_ring;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Parser, Debug)]
#[command(name = "kgraph", version, about = "Higher-rank graphs and their Cohn path algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Coefficient ring: Z, Q or Zmod:n.
    #[arg(long, global = true, default_value = "Z")]
    pub ring: String,
    /// Degree bound, comma separated; defaults to 2 in every coordinate.
    #[arg(long, global = true)]
    pub bound: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct GraphArg {
    /// A .kg file, or omega:K:n1,...,nK.
    pub graph: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a skeleton for well-formedness, complete squares and cube consistency.
    Validate(GraphArg),
    /// Enumerate paths with range V, of one degree or up to the bound.
    Paths {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        degree: Option<String>,
    },
    /// Minimal common extensions of two paths.
    Mce {
        #[command(flatten)]
        g: GraphArg,
        lambda: String,
        mu: String,
    },
    /// The pairs Λ^min(λ, μ).
    Min {
        #[command(flatten)]
        g: GraphArg,
        lambda: String,
        mu: String,
    },
    /// Ext(λ; E) for a set E of paths.
    Ext {
        #[command(flatten)]
        g: GraphArg,
        lambda: String,
        set: Vec<String>,
    },
    /// Decide whether a finite set of paths at V is exhaustive.
    Exhaustive {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        vertex: String,
        set: Vec<String>,
    },
    /// Aperiodicity probe over all path pairs up to the bound.
    Aperiodic(GraphArg),
    /// Build or inspect T(Λ).
    Tgraph {
        #[command(subcommand)]
        action: TgraphAction,
    },
    /// Multiply two algebra elements given as JSON files.
    Mult {
        #[command(flatten)]
        g: GraphArg,
        a: PathBuf,
        b: PathBuf,
    },
    /// The idempotent F_v.
    Fproj {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        vertex: String,
    },
    /// Degree support of an element, or its component of one degree.
    Grade {
        #[command(flatten)]
        g: GraphArg,
        element: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        degree: Option<String>,
    },
    /// Realize KP(TΛ) inside C(Λ) and check relations, KP, surjectivity and grading.
    IsoCheck(GraphArg),
    /// Check the path representation: homomorphism, nondegeneracy, independence.
    RepCheck {
        #[command(flatten)]
        g: GraphArg,
        /// Fixed window cap instead of one derived from the bound.
        #[arg(long)]
        cap: Option<String>,
    },
    /// Steinberg algebra of the path groupoid.
    Steinberg {
        #[command(subcommand)]
        action: SteinbergAction,
    },
    /// Run the property suite on a graph, or the acceptance criteria.
    Suite {
        graph: Option<String>,
        #[arg(long)]
        acceptance: bool,
    },
    /// Export the skeleton as Graphviz DOT.
    Dot(GraphArg),
}

#[derive(Subcommand, Debug)]
pub enum TgraphAction {
    /// Write T(Λ) as a .kg file.
    Build {
        #[command(flatten)]
        g: GraphArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustiveness of every edge subset at α(v).
    Check {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        vertex: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum SteinbergAction {
    /// Convolve two elements; terms may carry removed extensions in `minus`.
    Mult {
        #[command(flatten)]
        g: GraphArg,
        a: PathBuf,
        b: PathBuf,
    },
    /// Look for basic bisections inside Iso but outside the unit space.
    Probe(GraphArg),
}

/// A finished command: report, rendering, and whether properties held.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    /// Exit status: 0 pass, 1 property failure, 2 input error.
    pub status: u8,
}

impl Outcome {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Outcome { json, text: text.into(), status: 0 }
    }

    fn ok(mut self, ok: bool) -> Self {
        self.status = if ok { 0 } else { 1 };
        self
    }
}

fn load(spec: &str) -> Result<KGraph> {
    corpus::load(spec)
}

fn bound_for(cli: &Cli, rank: usize) -> Result<Degree> {
    match &cli.bound {
        None => Ok(Degree::splat(rank, 2)),
        Some(s) => {
            let d = Degree::parse(s)?;
            if d.rank() != rank {
                return Err(Error::InvalidArgument(format!("bound {s} does not have {rank} coordinates")));
            }
            Ok(d)
        }
    }
}

fn degree_arg(g: &KGraph, s: &str) -> Result<Degree> {
    let d = Degree::parse(s)?;
    if d.rank() != g.rank() {
        return Err(Error::InvalidArgument(format!("degree {s} does not have {} coordinates", g.rank())));
    }
    Ok(d)
}

fn vertex(g: &KGraph, name: &str) -> Result<crate::graph::VertexId> {
    g.vertex_id(name).ok_or_else(|| Error::InvalidArgument(format!("unknown vertex `{name}`")))
}

fn show(g: &KGraph, p: &Path) -> String {
    g.display(p).to_string()
}

fn path_list(g: &KGraph, ps: &[Path]) -> Value {
    Value::from(ps.iter().map(|p| show(g, p)).collect::<Vec<_>>())
}

fn read_element(path: &PathBuf) -> Result<ElementJson> {
    ElementJson::parse(&std::fs::read_to_string(path)?)
}

fn element_ring(cli: &Cli, a: &ElementJson, b: Option<&ElementJson>) -> Result<RingSpec> {
    let spec = a.ring_spec()?;
    if let Some(b) = b {
        if b.ring_spec()? != spec {
            return Err(Error::InvalidArgument(format!("elements over different rings: {} and {}", a.ring, b.ring)));
        }
    }
    let _ = cli;
    Ok(spec)
}

fn mult<R: CoefficientRing>(g: KGraph, ring: R, a: &ElementJson, b: &ElementJson) -> Result<Outcome> {
    let alg = CohnAlgebra::new(g, ring);
    let x = element_from_json(&alg, a)?;
    let y = element_from_json(&alg, b)?;
    let p = alg.mul(&x, &y);
    Ok(Outcome::new(serde_json::to_value(element_to_json(&alg, &p))?, alg.display(&p).to_string()))
}

fn grade<R: CoefficientRing>(g: KGraph, ring: R, a: &ElementJson, degree: Option<&str>) -> Result<Outcome> {
    let alg = CohnAlgebra::new(g, ring);
    let x = element_from_json(&alg, a)?;
    match degree {
        None => {
            let support: Vec<String> = alg.degree_support(&x).iter().map(|n| n.to_string()).collect();
            Ok(Outcome::new(json!({ "support": support }), support.join("\n")))
        }
        Some(d) => {
            let n = Grade::parse(d)?;
            let c = alg.graded_component(&x, &n);
            Ok(Outcome::new(serde_json::to_value(element_to_json(&alg, &c))?, alg.display(&c).to_string()))
        }
    }
}

fn fproj<R: CoefficientRing>(g: KGraph, ring: R, v: &str) -> Result<Outcome> {
    let alg = CohnAlgebra::new(g, ring);
    let f = alg.f_idempotent(vertex(alg.graph(), v)?);
    Ok(Outcome::new(serde_json::to_value(element_to_json(&alg, &f))?, alg.display(&f).to_string()))
}

fn iso<R: CoefficientRing>(g: KGraph, ring: R, bound: &Degree) -> Result<Outcome> {
    let r = iso_check(&KpBridge::new(&g, ring)?, bound)?;
    let text = format!(
        "{}: CP1-3 {} checks / {} failures; KP vertices {:?}, vacuous {:?}, {} failures; surjectivity {} / {} failures; grading {} / {} failures",
        if r.pass { "PASS" } else { "FAIL" },
        r.cohn.checks,
        r.cohn.failures.len(),
        r.kp.vertices_checked,
        r.kp.vacuous,
        r.kp.failures.len(),
        r.surjectivity_checks,
        r.surjectivity_failures.len(),
        r.grading_checks,
        r.grading_failures.len()
    );
    Ok(Outcome::new(serde_json::to_value(&r)?, text).ok(r.pass))
}

fn repcheck<R: CoefficientRing>(g: KGraph, ring: R, bound: &Degree, cap: Option<Degree>) -> Result<Outcome> {
    let rep = match cap {
        Some(c) => PathRep::with_cap(g, ring, c),
        None => PathRep::new(g, ring, bound.clone()),
    };
    let r = rep_check(&rep, bound)?;
    let text = format!(
        "{}: {} pairs / {} discrepancies; nondegeneracy {} / {} failures; {} words independent={}",
        if r.pass { "PASS" } else { "FAIL" },
        r.homomorphism_pairs,
        r.homomorphism_failures.len(),
        r.nondegeneracy_checks,
        r.nondegeneracy_failures.len(),
        r.independent_words,
        r.independent
    );
    Ok(Outcome::new(serde_json::to_value(&r)?, text).ok(r.pass))
}

fn steinberg_mult<R: CoefficientRing>(g: KGraph, ring: R, a: &ElementJson, b: &ElementJson) -> Result<Outcome> {
    let s = SteinbergAlgebra::new(g, ring);
    let x = steinberg_from_json(&s, a)?;
    let y = steinberg_from_json(&s, b)?;
    let p = steinberg_to_json(&s, &s.convolve(&x, &y));
    let text = p
        .terms
        .iter()
        .map(|t| format!("{} * 1_TZ({:?} * {:?} minus {:?})", t.coeff, t.lambda, t.mu, t.minus))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome::new(serde_json::to_value(&p)?, text))
}

fn suite_on<R: CoefficientRing>(g: &KGraph, ring: R, bound: &Degree) -> Result<Outcome> {
    let r = graph_suite(g, ring, bound, seed_from_env())?;
    Ok(Outcome::new(serde_json::to_value(&r)?, r.lines().join("\n")).ok(r.pass))
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let ring: RingSpec = cli.ring.parse()?;
    match &cli.command {
        Command::Validate(a) => {
            if a.graph.starts_with("omega:") {
                load(&a.graph)?;
                return Ok(Outcome::new(json!({ "valid": true, "violations": [] }), "valid"));
            }
            let p = parse_kg(&std::fs::read_to_string(&a.graph)?)?;
            let report = validate(&p);
            if !report.is_valid() {
                let list: Vec<Value> = report
                    .violations
                    .iter()
                    .map(|v| json!({ "code": v.kind.code(), "message": v.message }))
                    .collect();
                let text = report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("\n");
                let mut out = Outcome::new(json!({ "valid": false, "violations": list }), text);
                out.status = 2;
                return Ok(out);
            }
            Ok(Outcome::new(json!({ "valid": true, "violations": [] }), "valid"))
        }
        Command::Paths { g, vertex: v, degree } => {
            let g = load(&g.graph)?;
            let v = vertex(&g, v)?;
            let ps = match degree {
                Some(d) => g.paths(v, &degree_arg(&g, d)?),
                None => g.paths_up_to(v, &bound_for(cli, g.rank())?),
            };
            let text = ps.iter().map(|p| format!("{}  {}", show(&g, p), p.degree())).collect::<Vec<_>>().join("\n");
            Ok(Outcome::new(json!({ "paths": path_list(&g, &ps) }), text))
        }
        Command::Mce { g, lambda, mu } => {
            let g = load(&g.graph)?;
            let ps: Vec<Path> = g.mce(&g.parse_path(lambda)?, &g.parse_path(mu)?).into_iter().collect();
            let text = ps.iter().map(|p| show(&g, p)).collect::<Vec<_>>().join("\n");
            Ok(Outcome::new(json!({ "mce": path_list(&g, &ps) }), text))
        }
        Command::Min { g, lambda, mu } => {
            let g = load(&g.graph)?;
            let pairs = g.lambda_min(&g.parse_path(lambda)?, &g.parse_path(mu)?);
            let list: Vec<Value> = pairs.iter().map(|(a, b)| json!([show(&g, a), show(&g, b)])).collect();
            let text = pairs.iter().map(|(a, b)| format!("({}, {})", show(&g, a), show(&g, b))).collect::<Vec<_>>().join("\n");
            Ok(Outcome::new(json!({ "min": list }), text))
        }
        Command::Ext { g, lambda, set } => {
            let g = load(&g.graph)?;
            let l = g.parse_path(lambda)?;
            let e = set.iter().map(|s| g.parse_path(s)).collect::<Result<Vec<_>>>()?;
            let ps: Vec<Path> = g.ext(&l, &e).into_iter().collect();
            let text = ps.iter().map(|p| show(&g, p)).collect::<Vec<_>>().join("\n");
            Ok(Outcome::new(json!({ "ext": path_list(&g, &ps) }), text))
        }
        Command::Exhaustive { g, vertex: v, set } => {
            let g = load(&g.graph)?;
            let v = vertex(&g, v)?;
            let e = set.iter().map(|s| g.parse_path(s)).collect::<Result<Vec<_>>>()?;
            let bound = cli.bound.as_ref().map(|_| bound_for(cli, g.rank())).transpose()?;
            let verdict = g.is_exhaustive(v, &e, bound.as_ref())?;
            let witness = verdict.witness().map(|w| show(&g, w));
            let mut text = verdict.label().to_string();
            if let Some(w) = &witness {
                text.push_str(&format!(" witness {w}"));
            }
            if let ExhaustiveVerdict::UnknownUpToBound { bound } | ExhaustiveVerdict::Exhaustive { bound } = &verdict {
                text.push_str(&format!(" (bound {bound})"));
            }
            Ok(Outcome::new(json!({ "verdict": verdict.label(), "witness": witness }), text))
        }
        Command::Aperiodic(a) => {
            let g = load(&a.graph)?;
            let r = g.aperiodicity_probe(&bound_for(cli, g.rank())?);
            let j = r.to_json(&g);
            let text = format!(
                "{} pairs witnessed, {} unresolved\n{}",
                r.witnessed.len(),
                r.unresolved.len(),
                r.unresolved.iter().map(|(a, b)| format!("UNRESOLVED ({}, {})", show(&g, a), show(&g, b))).collect::<Vec<_>>().join("\n")
            );
            Ok(Outcome::new(serde_json::to_value(&j)?, text.trim_end()))
        }
        Command::Tgraph { action } => match action {
            TgraphAction::Build { g, output } => {
                let g = load(&g.graph)?;
                let text = print_kg(&build_tlambda(&g)?);
                if let Some(out) = output {
                    std::fs::write(out, &text)?;
                }
                Ok(Outcome::new(json!({ "kg": text }), text.trim_end()))
            }
            TgraphAction::Check { g, vertex: v } => {
                let g = load(&g.graph)?;
                let r = TLambda::new(&g)?.exhaustive_check(vertex(&g, v)?)?;
                let text = r
                    .cases
                    .iter()
                    .map(|c| format!("{:?}: {} {}", c.set, c.verdict, c.witness.clone().unwrap_or_default()))
                    .collect::<Vec<_>>()
                    .join("\n");
                let ok = r.pass;
                Ok(Outcome::new(serde_json::to_value(&r)?, text).ok(ok))
            }
        },
        Command::Mult { g, a, b } => {
            let g = load(&g.graph)?;
            let (a, b) = (read_element(a)?, read_element(b)?);
            with_ring!(element_ring(cli, &a, Some(&b))?, r => mult(g, r, &a, &b))
        }
        Command::Fproj { g, vertex: v } => {
            let g = load(&g.graph)?;
            with_ring!(ring, r => fproj(g, r, v))
        }
        Command::Grade { g, element, degree } => {
            let g = load(&g.graph)?;
            let a = read_element(element)?;
            with_ring!(element_ring(cli, &a, None)?, r => grade(g, r, &a, degree.as_deref()))
        }
        Command::IsoCheck(a) => {
            let g = load(&a.graph)?;
            let bound = bound_for(cli, g.rank())?;
            with_ring!(ring, r => iso(g, r, &bound))
        }
        Command::RepCheck { g, cap } => {
            let g = load(&g.graph)?;
            let bound = bound_for(cli, g.rank())?;
            let cap = cap.as_deref().map(|c| degree_arg(&g, c)).transpose()?;
            with_ring!(ring, r => repcheck(g, r, &bound, cap))
        }
        Command::Steinberg { action } => match action {
            SteinbergAction::Mult { g, a, b } => {
                let g = load(&g.graph)?;
                let (a, b) = (read_element(a)?, read_element(b)?);
                with_ring!(element_ring(cli, &a, Some(&b))?, r => steinberg_mult(g, r, &a, &b))
            }
            SteinbergAction::Probe(a) => {
                let g = load(&a.graph)?;
                let r = with_ring!(ring, r => SteinbergAlgebra::new(g.clone(), r).effectiveness_probe(&bound_for(cli, g.rank())?))?;
                let ok = r.violations.is_empty();
                let text = format!("{} bisections, {} violations", r.checked, r.violations.len());
                Ok(Outcome::new(serde_json::to_value(&r)?, text).ok(ok))
            }
        },
        Command::Suite { graph, acceptance: acc } => {
            if *acc || graph.is_none() {
                let r = acceptance(&bound_for(cli, 2)?, seed_from_env())?;
                return Ok(Outcome::new(serde_json::to_value(&r)?, r.lines().join("\n")).ok(r.pass));
            }
            let g = load(graph.as_deref().unwrap())?;
            let bound = bound_for(cli, g.rank())?;
            with_ring!(ring, r => suite_on(&g, r, &bound))
        }
        Command::Dot(a) => {
            let g = load(&a.graph)?;
            let dot = to_dot(&g);
            Ok(Outcome::new(json!({ "dot": dot }), dot.trim_end()))
        }
    }
}

fn emit(format: Format, out: &Outcome) {
    use std::io::Write;
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&out.json).unwrap(),
        Format::Text | Format::Dot => out.text.clone(),
    };
    if !body.is_empty() {
        // A closed pipe (`| head`) is not an error worth reporting.
        let _ = writeln!(std::io::stdout(), "{body}");
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            emit(cli.format, &out);
            ExitCode::from(out.status)
        }
        Err(e) => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "error": e.code(), "message": e.to_string() })).unwrap()
                ),
                _ => eprintln!("{}: {e}", e.code()),
            }
            ExitCode::from(2)
        }
    }
}
