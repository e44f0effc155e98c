//! `trd`: exact total Roman domination from the command line.
//!
//! Exit codes: 0 success, 1 failed check or counterexample found, 2 usage
//! error, 3 input or solver error. Data goes to stdout, diagnostics to stderr.

mod input;
mod output;

use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use trd_core::criticality::{complete_to_critical_traced, edge_profile_with};
use trd_core::families::{
    complement_is_galaxy, generate, hen1_classify, is_galaxy, is_k2_plus_complete,
    is_matching_union, is_union_of_large_cliques, predict_n_critical, spider_gamma_formula,
    spider_is_critical, spider_legs,
};
use trd_core::graph::members;
use trd_core::solver::{Mode, ENUMERATION_MAX_ORDER};
use trd_core::verify::{
    hunt_counterexamples_with, verify_theorem_with, Question, VerificationReport,
};
use trd_core::{graph6, Exec, FamilySpec, Solver, TheoremId};

use input::{GraphInput, UniverseArgs};
use output::{emit, Failure, Format, Table};

#[derive(Debug, Parser)]
#[command(name = "trd", version, about = "Exact total Roman domination and edge-criticality")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format on stdout.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Width of the parallel map (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Search-node budget per solver call.
    #[arg(long, global = true)]
    budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// γ, γ_t, γ_R and γ_tR with a minimum TRD witness.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        /// Also report dead vertices (total-Roman and Roman mode).
        #[arg(long)]
        dead: bool,
    },
    /// γ_tR(G) - γ_tR(G+uv) for every non-edge uv.
    Profile {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Edge-criticality class: edge-critical, supercritical, stable, mixed or complete.
    Classify {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Build a family member and print it as graph6.
    Generate {
        /// Family spec, e.g. "spider(2,2,4)" or "cor(K3)".
        #[arg(long)]
        family: String,
        /// Also emit a DOT description.
        #[arg(long)]
        dot: bool,
    },
    /// Structural recognisers and predictions.
    Recognize {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Run one registered check, or the whole registry on default universes.
    Verify {
        /// Theorem id such as T_4CRIT; omit to run every entry.
        id: Option<String>,
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// Search a universe for answers to an open question (Q1 or Q2).
    Hunt {
        question: String,
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// Add value-preserving edges until the graph is γ_tR-edge-critical.
    CompleteCritical {
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Ok,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    if let Some(jobs) = cli.common.jobs {
        if let Err(e) = set_jobs(jobs) {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {:#}", f.error());
            ExitCode::from(f.code())
        }
    }
}

#[cfg(feature = "parallel")]
fn set_jobs(jobs: usize) -> Result<()> {
    if jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().map_err(|e| anyhow::anyhow!("thread pool: {e}"))
}

#[cfg(not(feature = "parallel"))]
fn set_jobs(jobs: usize) -> Result<()> {
    if jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let solver = match cli.common.budget {
        Some(b) => Solver::with_budget(b),
        None => Solver::default(),
    };
    let exec = match cli.common.jobs {
        Some(1) => Exec::Sequential,
        _ => Exec::default(),
    };
    let format = cli.common.format;
    match &cli.command {
        Command::Compute { input, dead } => compute(&solver, input, *dead, format),
        Command::Profile { input } => profile(&solver, exec, input, format),
        Command::Classify { input } => classify(&solver, exec, input, format),
        Command::Generate { family, dot } => generate_cmd(family, *dot, format),
        Command::Recognize { input } => recognize(input, format),
        Command::Verify { id, universe } => verify(&solver, exec, id.as_deref(), universe, format),
        Command::Hunt { question, universe } => hunt(&solver, exec, question, universe, format),
        Command::CompleteCritical { input } => complete_critical(&solver, input, format),
    }
}

fn compute(solver: &Solver, input: &GraphInput, dead: bool, format: Format) -> Result<Outcome, Failure> {
    let g = input.load()?;
    let tr = solver.gamma_tr(&g).map_err(Failure::input)?;
    let t = solver.gamma_t(&g).map_err(Failure::input)?;
    let r = solver.gamma_r(&g).map_err(Failure::input)?;
    let d = solver.gamma(&g).map_err(Failure::input)?;
    let mut table = Table::new()
        .row("graph6", json!(graph6::encode(&g).map_err(Failure::input)?))
        .row("n", json!(g.order()))
        .row("m", json!(g.size()))
        .row("gamma", json!(d.value))
        .row("gamma_t", json!(t.value))
        .row("gamma_R", json!(r.value))
        .row("gamma_tR", json!(tr.value))
        .row("witness", json!(format!("{:?}", tr.witness)))
        .row("nodes_explored", json!(tr.nodes_explored));
    if dead {
        if g.order() > ENUMERATION_MAX_ORDER {
            return Err(Failure::input(anyhow::anyhow!(
                "dead vertices need n <= {ENUMERATION_MAX_ORDER}"
            )));
        }
        let set = |mode| {
            solver
                .dead_vertices(&g, mode)
                .map(|s| members(s).collect::<Vec<_>>())
                .map_err(Failure::input)
        };
        table = table
            .row("dead_total_roman", json!(set(Mode::TotalRoman)?))
            .row("dead_roman", json!(set(Mode::Roman)?));
    }
    emit(&table.into_value(), format);
    Ok(Outcome::Ok)
}

fn profile(solver: &Solver, exec: Exec, input: &GraphInput, format: Format) -> Result<Outcome, Failure> {
    let g = input.load()?;
    let p = edge_profile_with(solver, exec, &g).map_err(Failure::input)?;
    match format {
        Format::Json => emit(
            &json!({
                "graph6": graph6::encode(&g).map_err(Failure::input)?,
                "gamma_tR": p.base_value,
                "classification": p.classification.as_str(),
                "deltas": p.deltas,
            }),
            format,
        ),
        Format::Tsv => {
            output::line("u\tv\tdelta");
            for d in &p.deltas {
                output::line(format!("{}\t{}\t{}", d.u, d.v, d.delta));
            }
        }
    }
    Ok(Outcome::Ok)
}

fn classify(solver: &Solver, exec: Exec, input: &GraphInput, format: Format) -> Result<Outcome, Failure> {
    let g = input.load()?;
    let p = edge_profile_with(solver, exec, &g).map_err(Failure::input)?;
    let table = Table::new()
        .row("graph6", json!(graph6::encode(&g).map_err(Failure::input)?))
        .row("gamma_tR", json!(p.base_value))
        .row("non_edges", json!(p.deltas.len()))
        .row("classification", json!(p.classification.as_str()));
    emit(&table.into_value(), format);
    Ok(Outcome::Ok)
}

fn generate_cmd(family: &str, dot: bool, format: Format) -> Result<Outcome, Failure> {
    let spec = FamilySpec::parse(family).map_err(Failure::usage)?;
    let g = generate(&spec).map_err(Failure::input)?;
    let g6 = graph6::encode(&g).map_err(Failure::input)?;
    match format {
        Format::Tsv if dot => output::line(output::to_dot(&g, &spec.to_string()).trim_end()),
        Format::Tsv => output::line(&g6),
        _ => {
            let mut table = Table::new()
                .row("family", json!(spec.to_string()))
                .row("n", json!(g.order()))
                .row("m", json!(g.size()))
                .row("graph6", json!(g6));
            if dot {
                table = table.row("dot", json!(output::to_dot(&g, &spec.to_string())));
            }
            emit(&table.into_value(), format);
        }
    }
    Ok(Outcome::Ok)
}

fn recognize(input: &GraphInput, format: Format) -> Result<Outcome, Failure> {
    let g = input.load()?;
    let n = g.order();
    let connected = g.is_connected();
    let opt = |v: Option<Value>| v.unwrap_or(Value::Null);
    let legs = spider_legs(&g);
    let table = Table::new()
        .row("graph6", json!(graph6::encode(&g).map_err(Failure::input)?))
        .row("metrics", serde_json::to_value(g.metrics()).expect("metrics serialise"))
        .row(
            "hen1_class",
            opt((connected && n >= 2).then(|| json!(hen1_classify(&g).expect("checked").to_string()))),
        )
        .row(
            "predict_n_critical",
            opt((connected && n >= 4).then(|| json!(predict_n_critical(&g).expect("checked")))),
        )
        .row("galaxy", json!(is_galaxy(&g)))
        .row("complement_galaxy", json!(complement_is_galaxy(&g)))
        .row("matching_union", json!(is_matching_union(&g)))
        .row("union_of_large_cliques", json!(is_union_of_large_cliques(&g)))
        .row("k2_plus_complete", json!(is_k2_plus_complete(&g)))
        .row("spider_legs", opt(legs.as_ref().map(|l| json!(l))))
        .row(
            "spider_formula",
            opt(legs.as_ref().map(|l| json!(spider_gamma_formula(l).expect("k >= 3")))),
        )
        .row(
            "spider_critical",
            opt(legs.as_ref().map(|l| json!(spider_is_critical(l).expect("k >= 3")))),
        );
    emit(&table.into_value(), format);
    Ok(Outcome::Ok)
}

fn report_outcome(reports: &[VerificationReport], format: Format) -> Outcome {
    match format {
        Format::Json => {
            let value = if reports.len() == 1 {
                serde_json::to_value(&reports[0])
            } else {
                serde_json::to_value(reports)
            }
            .expect("reports serialise");
            emit(&value, format);
        }
        Format::Tsv => {
            output::line("id\toutcome\tinstances_checked\tcounterexamples");
            for r in reports {
                let outcome = if r.passed() { "pass" } else { "fail" };
                output::line(format!(
                    "{}\t{}\t{}\t{}",
                    r.theorem_id,
                    outcome,
                    r.instances_checked,
                    r.counterexamples.len()
                ));
            }
        }
    }
    if reports.iter().all(VerificationReport::passed) {
        Outcome::Ok
    } else {
        Outcome::Fail
    }
}

fn verify(
    solver: &Solver,
    exec: Exec,
    id: Option<&str>,
    universe: &UniverseArgs,
    format: Format,
) -> Result<Outcome, Failure> {
    let ids = match id {
        Some(s) => vec![s.parse::<TheoremId>().map_err(Failure::usage)?],
        None => TheoremId::ALL.to_vec(),
    };
    let chosen = universe.build().map_err(Failure::usage)?;
    let mut reports = Vec::with_capacity(ids.len());
    for id in ids {
        let u = chosen.clone().unwrap_or_else(|| id.default_universe());
        let report = verify_theorem_with(solver, exec, id, &u).map_err(Failure::from_verify)?;
        eprintln!(
            "{id}: {} ({} instances)",
            if report.passed() { "pass" } else { "FAIL" },
            report.instances_checked
        );
        reports.push(report);
    }
    Ok(report_outcome(&reports, format))
}

fn hunt(
    solver: &Solver,
    exec: Exec,
    question: &str,
    universe: &UniverseArgs,
    format: Format,
) -> Result<Outcome, Failure> {
    let q: Question = question.parse().map_err(Failure::usage)?;
    let u = universe.build().map_err(Failure::usage)?.unwrap_or_else(input::default_hunt_universe);
    let report = hunt_counterexamples_with(solver, exec, q, &u).map_err(Failure::from_verify)?;
    if report.passed() {
        eprintln!("{q}: no counterexample in {} instances", report.instances_checked);
    } else {
        eprintln!("{q}: counterexample found");
    }
    Ok(report_outcome(&[report], format))
}

fn complete_critical(solver: &Solver, input: &GraphInput, format: Format) -> Result<Outcome, Failure> {
    let g = input.load()?;
    let (h, added) = complete_to_critical_traced(solver, &g).map_err(Failure::input)?;
    let table = Table::new()
        .row("input_graph6", json!(graph6::encode(&g).map_err(Failure::input)?))
        .row("gamma_tR", json!(solver.gamma_tr_value(&h).map_err(Failure::input)?))
        .row("added_edges", json!(added))
        .row("graph6", json!(graph6::encode(&h).map_err(Failure::input)?))
        .row("diameter", serde_json::to_value(h.diameter()).expect("serialise"));
    emit(&table.into_value(), format);
    Ok(Outcome::Ok)
}
