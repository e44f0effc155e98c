//! Executable checks of the edge-criticality results over graph universes.
//!
//! A universe is a deterministic stream of graphs. Each registered result
//! declares a hypothesis filter, so instances outside its scope are skipped
//! rather than reported as failures. Checks run through [`Exec`] in chunks
//! and are aggregated in stream order, so reports do not depend on the
//! degree of parallelism.

mod hunt;
mod registry;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::criticality::CriticalityError;
use crate::exec::Exec;
use crate::families::{generate, FamilyError, FamilySpec};
use crate::graph::{bit, Graph};
use crate::graph6;
use crate::solver::{SolveError, Solver};

pub use hunt::{hunt_counterexamples, hunt_counterexamples_with, Question};
pub use registry::TheoremId;

/// Largest order for exhaustive labelled enumeration (2^21 graphs at n = 7).
pub const ALL_LABELED_MAX_ORDER: usize = 7;
/// Counterexamples kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 20;
const CHUNK: usize = 1 << 16;
const MAX_REJECTIONS_PER_SAMPLE: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("unknown question id `{0}`")]
    UnknownQuestion(String),
    #[error("{theorem} cannot be checked on this universe: {reason}")]
    IncompatibleUniverse { theorem: String, reason: String },
    #[error("exhaustive enumeration is capped at order {cap}, asked for {n}")]
    UniverseTooLarge { n: usize, cap: usize },
    #[error("invalid random universe: {0}")]
    BadRandom(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("{graph6}: {source}")]
    Solve { graph6: String, source: SolveError },
}

impl VerifyError {
    fn solve(g: &Graph, source: SolveError) -> Self {
        VerifyError::Solve { graph6: graph6::encode(g).unwrap_or_default(), source }
    }

    fn criticality(g: &Graph, e: CriticalityError) -> Self {
        match e {
            CriticalityError::Solve(s) => Self::solve(g, s),
            other => VerifyError::IncompatibleUniverse {
                theorem: "criticality".into(),
                reason: other.to_string(),
            },
        }
    }
}

/// Where the graphs of a check come from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum InstanceUniverse {
    /// Every labelled graph on `{0..n-1}` for `min_n <= n <= max_n`, in
    /// order of `n` and then of edge mask.
    AllLabeled { min_n: usize, max_n: usize, connected_only: bool, no_isolated: bool },
    Families(Vec<FamilySpec>),
    /// `count` samples of `G(n, p)`, fully determined by `seed`; with
    /// `no_isolated`, samples with an isolated vertex are redrawn.
    RandomGnp { count: usize, n: usize, p: f64, seed: u64, no_isolated: bool },
    /// Concatenation of several universes.
    Union(Vec<InstanceUniverse>),
}

impl InstanceUniverse {
    pub fn all_labeled(max_n: usize, connected_only: bool, no_isolated: bool) -> Self {
        Self::AllLabeled { min_n: 1, max_n, connected_only, no_isolated }
    }

    pub fn families<I, S>(specs: I) -> Result<Self, FamilyError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let specs = specs
            .into_iter()
            .map(|s| {
                FamilySpec::parse(s.as_ref())
                    .map_err(|e| FamilyError::InvalidSpec(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::Families(specs))
    }

    /// True when every instance carries its family descriptor.
    pub fn is_family_only(&self) -> bool {
        match self {
            Self::Families(_) => true,
            Self::Union(parts) => parts.iter().all(Self::is_family_only),
            _ => false,
        }
    }

    fn validate(&self) -> Result<(), VerifyError> {
        match self {
            Self::AllLabeled { max_n, .. } if *max_n > ALL_LABELED_MAX_ORDER => {
                Err(VerifyError::UniverseTooLarge { n: *max_n, cap: ALL_LABELED_MAX_ORDER })
            }
            Self::RandomGnp { n, p, .. } => {
                if !(0.0..=1.0).contains(p) {
                    return Err(VerifyError::BadRandom(format!("p = {p} is not a probability")));
                }
                if *n == 0 || *n > crate::graph::MAX_ORDER {
                    return Err(VerifyError::BadRandom(format!("order {n} out of range")));
                }
                Ok(())
            }
            Self::Families(specs) => {
                specs.iter().try_for_each(|s| s.validate()).map_err(VerifyError::from)
            }
            Self::Union(parts) => parts.iter().try_for_each(Self::validate),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for InstanceUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AllLabeled { min_n, max_n, connected_only, no_isolated } => {
                write!(f, "all labeled graphs, {min_n} <= n <= {max_n}")?;
                if *connected_only {
                    f.write_str(", connected")?;
                }
                if *no_isolated {
                    f.write_str(", no isolated vertices")?;
                }
                Ok(())
            }
            Self::Families(specs) => write!(f, "{} family instances", specs.len()),
            Self::RandomGnp { count, n, p, seed, .. } => {
                write!(f, "{count} x G({n}, {p}), seed {seed}")
            }
            Self::Union(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "[{p}]")?;
                }
                Ok(())
            }
        }
    }
}

/// A graph together with the family it was generated from, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub family: Option<FamilySpec>,
}

/// Stream every instance of `universe` in its canonical order.
pub fn enumerate_graphs(
    universe: &InstanceUniverse,
) -> Result<Box<dyn Iterator<Item = Instance> + Send>, VerifyError> {
    universe.validate()?;
    Ok(match universe {
        InstanceUniverse::AllLabeled { min_n, max_n, connected_only, no_isolated } => {
            let (connected_only, no_isolated) = (*connected_only, *no_isolated);
            Box::new(
                (*min_n.max(&1)..=*max_n)
                    .flat_map(labeled_graphs)
                    .filter(move |g| {
                        (!no_isolated || !g.has_isolated_vertex())
                            && (!connected_only || g.is_connected())
                    })
                    .map(|graph| Instance { graph, family: None }),
            )
        }
        InstanceUniverse::Families(specs) => {
            let items = specs
                .iter()
                .map(|s| Ok(Instance { graph: generate(s)?, family: Some(s.clone()) }))
                .collect::<Result<Vec<_>, FamilyError>>()?;
            Box::new(items.into_iter())
        }
        InstanceUniverse::RandomGnp { count, n, p, seed, no_isolated } => {
            Box::new(random_graphs(*count, *n, *p, *seed, *no_isolated)?.into_iter().map(
                |graph| Instance { graph, family: None },
            ))
        }
        InstanceUniverse::Union(parts) => {
            let streams = parts.iter().map(enumerate_graphs).collect::<Result<Vec<_>, _>>()?;
            Box::new(streams.into_iter().flatten())
        }
    })
}

/// All `2^(n choose 2)` labelled graphs on `n` vertices; bit `i` of the mask
/// is the `i`-th pair in lexicographic order.
fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut rows = vec![0u64; n];
        let mut m = mask;
        while m != 0 {
            let (i, j) = pairs[m.trailing_zeros() as usize];
            rows[i] |= bit(j);
            rows[j] |= bit(i);
            m &= m - 1;
        }
        Graph::from_rows_unchecked(rows)
    })
}

fn random_graphs(
    count: usize,
    n: usize,
    p: f64,
    seed: u64,
    no_isolated: bool,
) -> Result<Vec<Graph>, VerifyError> {
    if no_isolated && (n < 2 || p == 0.0) {
        return Err(VerifyError::BadRandom(format!(
            "G({n}, {p}) never avoids isolated vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut tries = 0;
        loop {
            let mut rows = vec![0u64; n];
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(p) {
                        rows[i] |= bit(j);
                        rows[j] |= bit(i);
                    }
                }
            }
            let g = Graph::from_rows_unchecked(rows);
            if !no_isolated || !g.has_isolated_vertex() {
                out.push(g);
                break;
            }
            tries += 1;
            if tries == MAX_REJECTIONS_PER_SAMPLE {
                return Err(VerifyError::BadRandom(format!(
                    "no sample of G({n}, {p}) without isolated vertices in {tries} draws"
                )));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub universe: InstanceUniverse,
    pub instances_checked: usize,
    pub outcome: Outcome,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Per-instance verdict: `None` when the hypothesis does not apply,
/// otherwise `Some(None)` for a pass and `Some(Some(detail))` for a violation.
pub(crate) type Verdict = Option<Option<String>>;

/// Run `check` over the universe and collect a report.
pub(crate) fn run<F>(
    id: &str,
    universe: &InstanceUniverse,
    exec: Exec,
    check: F,
) -> Result<VerificationReport, VerifyError>
where
    F: Fn(&Instance) -> Result<Verdict, VerifyError> + Sync + Send,
{
    let mut stream = enumerate_graphs(universe)?;
    let mut checked = 0;
    let mut failures = 0usize;
    let mut counterexamples = Vec::new();
    loop {
        let chunk: Vec<Instance> = stream.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        for (inst, verdict) in chunk.iter().zip(exec.map(&chunk, &check)) {
            match verdict? {
                None => {}
                Some(None) => checked += 1,
                Some(Some(detail)) => {
                    checked += 1;
                    failures += 1;
                    if counterexamples.len() < MAX_COUNTEREXAMPLES {
                        counterexamples.push(Counterexample {
                            graph6: graph6::encode(&inst.graph).unwrap_or_default(),
                            detail: match &inst.family {
                                Some(spec) => format!("{spec}: {detail}"),
                                None => detail,
                            },
                        });
                    }
                }
            }
        }
    }
    Ok(VerificationReport {
        theorem_id: id.to_string(),
        universe: universe.clone(),
        instances_checked: checked,
        outcome: if failures == 0 { Outcome::Pass } else { Outcome::Fail },
        counterexamples,
    })
}

/// Check one registered result over `universe` with the default solver and executor.
pub fn verify_theorem(
    id: TheoremId,
    universe: &InstanceUniverse,
) -> Result<VerificationReport, VerifyError> {
    verify_theorem_with(&Solver::default(), Exec::default(), id, universe)
}

pub fn verify_theorem_with(
    solver: &Solver,
    exec: Exec,
    id: TheoremId,
    universe: &InstanceUniverse,
) -> Result<VerificationReport, VerifyError> {
    registry::verify(solver, exec, id, universe)
}

/// Every registered result over its default universe, in registry order.
pub fn verify_all(solver: &Solver, exec: Exec) -> Result<Vec<VerificationReport>, VerifyError> {
    TheoremId::ALL
        .iter()
        .map(|&id| verify_theorem_with(solver, exec, id, &id.default_universe()))
        .collect()
}
