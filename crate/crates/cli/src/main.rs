//! `socle`: command-line front end for the monomial ideal engine.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use socle_core::assoc::{
    ass_primes, ass_sequence, corner_elements, corner_elements_exhaustive, has_maximal_associated,
    socle_colon,
};
use socle_core::criteria::{
    chain_report, check_colon_criterion_a, check_colon_criterion_b, check_corner_divisibility,
    check_dichotomy, check_squarefree_maximal, infer_split, verify_split_identities,
    ColonCriterionRequest, ColonStep, SplitDecomposition,
};
use socle_core::decompose::{ass_from_decomposition, irreducible_decomposition};
use socle_core::graph::{cover_ideal, edge_ideal, parse_graph};
use socle_core::parse::{parse_ideal, parse_monomial, parse_ring, parse_variable_set};
use socle_core::properties;
use socle_core::reproduce::{reproduce, ReproduceParams, IDS};
use socle_core::script::SessionScript;
use socle_core::{Error, Limits, Monomial, MonomialIdeal, MonomialPrime, Result, RingContext};

use output::{error_json, Outcome, Status};

const DEFAULTS: Limits = Limits {
    max_generators: 200_000,
    max_subset_vars: 22,
    max_corner_search: 5_000_000,
    max_decomposition_nodes: 2_000_000,
    cache_capacity: 4096,
};

#[derive(Parser)]
#[command(
    name = "socle",
    version,
    about = "Associated primes of monomial ideals and their powers"
)]
struct Cli {
    /// Ring declaration, e.g. `x,y,z` or `x1..x6`. Inferred from the ideal
    /// text (variables in order of first appearance) when omitted.
    #[arg(long, global = true)]
    ring: Option<String>,

    /// Emit the structured JSON document instead of the text transcript.
    #[arg(long, global = true)]
    json: bool,

    /// Largest number of candidate generators one product, intersection
    /// or colon step may produce.
    #[arg(long, global = true, default_value_t = DEFAULTS.max_generators)]
    cap_gens: usize,

    /// Largest support size for which associated primes are enumerated.
    #[arg(long, global = true, default_value_t = DEFAULTS.max_subset_vars)]
    cap_subsets: usize,

    /// Power `t` used by power, split, dichotomy, corner-div and the colon checks.
    #[arg(long, global = true)]
    t: Option<u32>,

    /// Highest power examined by ass-seq and reproduce.
    #[arg(long, global = true)]
    smax: Option<u32>,

    /// Base seed for the property suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal generators of an ideal.
    Mingen {
        ideal: String,
    },
    /// The s-th power (s from the argument or --t).
    Power {
        ideal: String,
        s: Option<u32>,
    },
    /// Colon by an ideal `(...)` or by a monomial.
    Colon {
        ideal: String,
        by: String,
    },
    /// Intersection of two or more ideals.
    Intersect {
        #[arg(required = true, num_args = 2..)]
        ideals: Vec<String>,
    },
    Radical {
        ideal: String,
    },
    /// Irredundant irreducible decomposition.
    Decompose {
        ideal: String,
    },
    /// Associated primes, cross-checked against the decomposition.
    Ass {
        ideal: String,
    },
    /// Associated primes of I, I^2, ..., I^smax (default smax 4).
    AssSeq {
        ideal: String,
    },
    /// `(I : m)` and whether the maximal ideal is associated.
    Socle {
        ideal: String,
    },
    /// Corner elements: monomials outside I sent into I by every variable.
    Corners {
        ideal: String,
        /// Scan every monomial below the generator lcm instead of using the socle.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Run a criterion checker.
    #[command(subcommand)]
    Check(Check),
    /// Edge or cover ideal of a graph (`graph N; u-v ...`, `cycle:k`, `wheel:k`).
    Graph {
        #[arg(value_parser = ["edge", "cover"])]
        kind: String,
        graph: String,
    },
    /// Reproduce a worked example and compare with its expected results.
    Reproduce {
        #[arg(value_parser = IDS)]
        id: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Seeded property suites over random ideals.
    Props {
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
    /// Run a session script file.
    Script {
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Two exponent columns decreasing along one generator order.
    Chain { ideal: String },
    /// Identities for L = u·I + J with supp(u) disjoint from I and J.
    Split(SplitArgs),
    /// Which branch explains m ∈ Ass((L^t, u^t)).
    Dichotomy(SplitArgs),
    /// Colon criterion with auxiliary ideals; steps are `y^a=(J)`.
    ColonA(ColonArgs),
    /// Colon criterion by successive colons; steps are `y^a`.
    ColonB(ColonArgs),
    /// For squarefree I: m is associated iff I = m.
    Squarefree { ideal: String },
    /// Whether x_i divides the corner z of I^t.
    CornerDiv {
        ideal: String,
        #[arg(long)]
        z: String,
        #[arg(long)]
        var: String,
    },
}

#[derive(Args)]
struct SplitArgs {
    /// The ideal L.
    whole: String,
    #[arg(long)]
    u: String,
    /// The ideal I; inferred together with --rest when omitted.
    #[arg(long, requires = "rest")]
    quotient: Option<String>,
    #[arg(long, requires = "quotient")]
    rest: Option<String>,
}

#[derive(Args)]
struct ColonArgs {
    ideal: String,
    /// Prime to test, e.g. `(x,y)`; defaults to the maximal ideal.
    #[arg(long)]
    prime: Option<String>,
    #[arg(long = "step", required = true)]
    steps: Vec<String>,
    /// Membership exponent ℓ (defaults to t).
    #[arg(long)]
    ell: Option<u32>,
}

fn main() -> ExitCode {
    // usage errors exit 1 like every other error; 2 means not-applicable
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            outcome.emit(cli.json);
            outcome.status.exit_code()
        }
        Err(e) => {
            if cli.json {
                println!("{}", error_json(&e.to_string()));
            }
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

impl Cli {
    fn limits(&self) -> Limits {
        Limits {
            max_generators: self.cap_gens,
            max_subset_vars: self.cap_subsets,
            ..DEFAULTS
        }
    }

    /// The ring from `--ring`, or one inferred from the given texts.
    fn ring_for(&self, texts: &[&str]) -> Result<Arc<RingContext>> {
        let ctx = match &self.ring {
            Some(r) => parse_ring(r)?,
            None => {
                let names = infer_variables(texts);
                if names.is_empty() {
                    return Err(Error::InvalidRing("no variables found; pass --ring".into()));
                }
                RingContext::new(&names)?
            }
        };
        Ok(ctx.with_limits(self.limits()).into_shared())
    }

    fn ideal(&self, src: &str) -> Result<(Arc<RingContext>, MonomialIdeal)> {
        let ctx = self.ring_for(&[src])?;
        let ideal = parse_ideal(&ctx, src)?;
        Ok((ctx, ideal))
    }

    fn t_or(&self, default: u32) -> u32 {
        self.t.unwrap_or(default)
    }
}

/// Identifiers in order of first appearance, skipping the numbers in exponents.
fn infer_variables(texts: &[&str]) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for text in texts {
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            if c.is_ascii_alphabetic() {
                let mut name = c.to_string();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                if !names.contains(&name) {
                    names.push(name);
                }
            }
        }
    }
    names
}

fn ideal_outcome(label: &str, ctx: &RingContext, ideal: &MonomialIdeal) -> Outcome {
    Outcome::new(
        ideal.to_string(),
        json!({ "command": label, "ring": ctx.names(), "ideal": ideal.to_string() }),
    )
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Mingen { ideal } => {
            let (ctx, i) = cli.ideal(ideal)?;
            Ok(ideal_outcome("mingen", &ctx, &i))
        }
        Command::Power { ideal, s } => {
            let s = s.or(cli.t).ok_or_else(|| {
                Error::InvalidArgument("give the exponent as an argument or with --t".into())
            })?;
            let (ctx, i) = cli.ideal(ideal)?;
            Ok(ideal_outcome("power", &ctx, &i.power(s)?))
        }
        Command::Colon { ideal, by } => {
            let ctx = cli.ring_for(&[ideal, by])?;
            let i = parse_ideal(&ctx, ideal)?;
            let result = if by.trim_start().starts_with('(') {
                i.colon_ideal(&parse_ideal(&ctx, by)?)?
            } else {
                i.colon_monomial(&parse_monomial(&ctx, by)?)
            };
            Ok(ideal_outcome("colon", &ctx, &result))
        }
        Command::Intersect { ideals } => {
            let texts: Vec<&str> = ideals.iter().map(String::as_str).collect();
            let ctx = cli.ring_for(&texts)?;
            let parsed = texts
                .iter()
                .map(|t| parse_ideal(&ctx, t))
                .collect::<Result<Vec<_>>>()?;
            Ok(ideal_outcome(
                "intersect",
                &ctx,
                &MonomialIdeal::intersect(&parsed)?,
            ))
        }
        Command::Radical { ideal } => {
            let (ctx, i) = cli.ideal(ideal)?;
            Ok(ideal_outcome("radical", &ctx, &i.radical()))
        }
        Command::Decompose { ideal } => {
            let (ctx, i) = cli.ideal(ideal)?;
            let comps: Vec<String> = irreducible_decomposition(&i)?
                .iter()
                .map(|c| c.display(&ctx).to_string())
                .collect();
            Ok(Outcome::new(
                comps.join("\n"),
                json!({ "command": "decompose", "ring": ctx.names(), "components": comps }),
            ))
        }
        Command::Ass { ideal } => {
            let (ctx, i) = cli.ideal(ideal)?;
            let socle = ass_primes(&i)?;
            let decomposition = ass_from_decomposition(&i)?;
            let agree = socle == decomposition;
            let mut out = Outcome::new(
                socle.to_string(),
                json!({
                    "command": "ass",
                    "ring": ctx.names(),
                    "ass": socle,
                    "oracle_agreement": agree,
                }),
            );
            if !agree {
                out.text =
                    format!("{socle}\noracles disagree: decomposition gives {decomposition}");
                out.status = Status::Disagreement;
            }
            Ok(out)
        }
        Command::AssSeq { ideal } => {
            let (ctx, i) = cli.ideal(ideal)?;
            let seq = ass_sequence(&i, cli.smax.unwrap_or(4))?;
            let lines: Vec<String> = seq
                .sets
                .iter()
                .enumerate()
                .map(|(k, a)| format!("s={}: {a}", k + 1))
                .collect();
            Ok(Outcome::new(
                format!(
                    "{}\nm associated at s = {:?}; observed stable from s = {}",
                    lines.join("\n"),
                    seq.maximal_powers(),
                    seq.observed_stable_from
                ),
                json!({
                    "command": "ass-seq",
                    "ring": ctx.names(),
                    "sets": seq.sets,
                    "maximal_powers": seq.maximal_powers(),
                    "observed_stable_from": seq.observed_stable_from,
                }),
            ))
        }
        Command::Socle { ideal } => {
            let (ctx, i) = cli.ideal(ideal)?;
            let colon = socle_colon(&i)?;
            let has = has_maximal_associated(&i)?;
            Ok(Outcome::new(
                format!("(I : m) = {colon}\nm associated: {has}"),
                json!({
                    "command": "socle",
                    "ring": ctx.names(),
                    "socle_colon": colon.to_string(),
                    "m_associated": has,
                }),
            ))
        }
        Command::Corners { ideal, exhaustive } => {
            let (ctx, i) = cli.ideal(ideal)?;
            let corners = if *exhaustive {
                corner_elements_exhaustive(&i)?
            } else {
                corner_elements(&i)?
            };
            let texts: Vec<String> = corners.iter().map(|c| c.monomial().to_text(&ctx)).collect();
            Ok(Outcome::new(
                if texts.is_empty() {
                    "no corner elements".to_string()
                } else {
                    texts.join("\n")
                },
                json!({ "command": "corners", "ring": ctx.names(), "corners": texts }),
            ))
        }
        Command::Check(check) => run_check(cli, check),
        Command::Graph { kind, graph } => {
            let g = parse_graph(graph)?;
            let i = if kind == "edge" {
                edge_ideal(&g)?
            } else {
                cover_ideal(&g)?
            };
            let ctx = i.context().clone();
            Ok(Outcome::new(
                format!("ring {}\n{i}", ctx.names().join(",")),
                json!({ "command": "graph", "kind": kind, "ring": ctx.names(), "ideal": i.to_string() }),
            ))
        }
        Command::Reproduce { id, n, k } => {
            let params = ReproduceParams {
                t: cli.t,
                smax: cli.smax,
                n: *n,
                k: *k,
            };
            let rep = reproduce(id, &params)?;
            let mut out = Outcome::new(rep.transcript().trim_end().to_string(), rep.to_json());
            if !rep.passed() {
                eprint!("{}", rep.diff());
                out.status = Status::Disagreement;
            }
            Ok(out)
        }
        Command::Props { cases } => {
            let outcomes = properties::run_all(cli.seed, *cases);
            let text: Vec<String> = outcomes.iter().map(ToString::to_string).collect();
            let mut out = Outcome::new(
                text.join("\n"),
                json!({ "command": "props", "seed": cli.seed, "suites": outcomes }),
            );
            if let Some(e) = properties::first_failure(&outcomes) {
                eprintln!("{e}");
                out.status = Status::Disagreement;
            }
            Ok(out)
        }
        Command::Script { file } => {
            let src = std::fs::read_to_string(file).map_err(|e| {
                Error::InvalidArgument(format!("cannot read {}: {e}", file.display()))
            })?;
            let script = SessionScript::parse(&src, cli.limits())?;
            let lines = script.run()?;
            Ok(Outcome::new(
                lines.join("\n"),
                json!({ "command": "script", "ring": script.ring().names(), "output": lines }),
            ))
        }
    }
}

fn split_from(cli: &Cli, args: &SplitArgs) -> Result<SplitDecomposition> {
    let mut texts = vec![args.whole.as_str(), args.u.as_str()];
    texts.extend(args.quotient.as_deref());
    texts.extend(args.rest.as_deref());
    let ctx = cli.ring_for(&texts)?;
    let whole = parse_ideal(&ctx, &args.whole)?;
    let u = parse_monomial(&ctx, &args.u)?;
    match (&args.quotient, &args.rest) {
        (Some(q), Some(r)) => {
            SplitDecomposition::new(whole, u, parse_ideal(&ctx, q)?, parse_ideal(&ctx, r)?)
        }
        _ => infer_split(&whole, &u),
    }
}

/// Parses `y^a` (and `y^a=(J)` when `with_aux`).
fn parse_step(ctx: &Arc<RingContext>, src: &str, with_aux: bool) -> Result<ColonStep> {
    let (head, aux) = match src.split_once('=') {
        Some((h, a)) => (h, Some(a)),
        None => (src, None),
    };
    let m: Monomial = parse_monomial(ctx, head)?;
    if !m.is_pure_power() || m.is_one() {
        return Err(Error::InvalidArgument(format!(
            "step `{head}` must be a variable power like y^2"
        )));
    }
    let var = *m.support().iter().next().expect("non-identity power");
    let alpha = m.exponent(var);
    match (aux, with_aux) {
        (Some(j), true) => Ok(ColonStep::with_aux(var, alpha, parse_ideal(ctx, j)?)),
        (None, false) => Ok(ColonStep::new(var, alpha)),
        (None, true) => Err(Error::InvalidArgument(format!(
            "step `{src}` needs an auxiliary ideal: write {head}=(...)"
        ))),
        (Some(_), false) => Err(Error::InvalidArgument(format!(
            "step `{src}` takes no auxiliary ideal"
        ))),
    }
}

fn colon_request(cli: &Cli, args: &ColonArgs, with_aux: bool) -> Result<ColonCriterionRequest> {
    let mut texts = vec![args.ideal.as_str()];
    texts.extend(args.steps.iter().map(String::as_str));
    let ctx = cli.ring_for(&texts)?;
    let ideal = parse_ideal(&ctx, &args.ideal)?;
    let prime = match &args.prime {
        Some(p) => MonomialPrime::new(&ctx, parse_variable_set(&ctx, p)?)?,
        None => MonomialPrime::maximal(&ctx),
    };
    let steps = args
        .steps
        .iter()
        .map(|s| parse_step(&ctx, s, with_aux))
        .collect::<Result<Vec<_>>>()?;
    Ok(ColonCriterionRequest {
        ideal,
        power: cli.t_or(1),
        prime,
        steps,
        membership_exponent: args.ell,
    })
}

fn run_check(cli: &Cli, check: &Check) -> Result<Outcome> {
    let report = match check {
        Check::Chain { ideal } => chain_report(&cli.ideal(ideal)?.1)?,
        Check::Split(args) => verify_split_identities(&split_from(cli, args)?, cli.t_or(1))?,
        Check::Dichotomy(args) => check_dichotomy(&split_from(cli, args)?, cli.t_or(1))?,
        Check::ColonA(args) => check_colon_criterion_a(&colon_request(cli, args, true)?)?,
        Check::ColonB(args) => check_colon_criterion_b(&colon_request(cli, args, false)?)?,
        Check::Squarefree { ideal } => check_squarefree_maximal(&cli.ideal(ideal)?.1)?,
        Check::CornerDiv { ideal, z, var } => {
            let ctx = cli.ring_for(&[ideal, z, var])?;
            let i = parse_ideal(&ctx, ideal)?;
            let z = parse_monomial(&ctx, z)?;
            let idx = ctx
                .index_of(var.trim())
                .ok_or_else(|| Error::InvalidArgument(format!("unknown variable `{var}`")))?;
            check_corner_divisibility(&i, cli.t_or(1), &z, idx)?
        }
    };
    Ok(Outcome::from_report(&report))
}
