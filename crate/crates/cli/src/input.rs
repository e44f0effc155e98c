//! Graph and universe sources from command-line flags.

use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;

use trd_core::families::generate;
use trd_core::graph::parse_edge_list;
use trd_core::{graph6, FamilySpec, Graph, InstanceUniverse};

use crate::output::Failure;

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file: "n m" header, then one "u v" per line.
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Family spec such as "spider(1,1,3)".
    #[arg(long)]
    family: Option<String>,
}

impl GraphInput {
    pub fn load(&self) -> Result<Graph, Failure> {
        if let Some(text) = &self.graph6 {
            return graph6::decode(text).map_err(Failure::input);
        }
        if let Some(path) = &self.edges {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(Failure::input)?;
            return parse_edge_list(&text).map_err(Failure::input);
        }
        let text = self.family.as_deref().expect("clap enforces one input");
        let spec = FamilySpec::parse(text).map_err(Failure::input)?;
        generate(&spec).map_err(Failure::input)
    }
}

#[derive(Debug, Args)]
pub struct UniverseArgs {
    /// Every labelled graph of order at most N (N <= 7).
    #[arg(long, value_name = "N")]
    all_labeled: Option<usize>,
    /// Smallest order for --all-labeled.
    #[arg(long, value_name = "N", default_value_t = 1, requires = "all_labeled")]
    min_n: usize,
    /// Restrict --all-labeled to connected graphs.
    #[arg(long, requires = "all_labeled")]
    connected: bool,
    /// Keep graphs with isolated vertices in --all-labeled and --random.
    #[arg(long)]
    allow_isolated: bool,
    /// COUNT,N,P: random G(N, P) samples.
    #[arg(long, value_name = "COUNT,N,P")]
    random: Option<String>,
    /// Seed for --random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Family spec (repeatable).
    #[arg(long)]
    family: Vec<String>,
}

impl UniverseArgs {
    /// The universe named by the flags, or `None` when none was given.
    pub fn build(&self) -> Result<Option<InstanceUniverse>> {
        let no_isolated = !self.allow_isolated;
        let mut parts = Vec::new();
        if let Some(max_n) = self.all_labeled {
            parts.push(InstanceUniverse::AllLabeled {
                min_n: self.min_n,
                max_n,
                connected_only: self.connected,
                no_isolated,
            });
        }
        if let Some(text) = &self.random {
            let (count, n, p) = parse_random(text)?;
            parts.push(InstanceUniverse::RandomGnp { count, n, p, seed: self.seed, no_isolated });
        }
        if !self.family.is_empty() {
            parts.push(InstanceUniverse::families(&self.family)?);
        }
        Ok(match parts.len() {
            0 => None,
            1 => parts.pop(),
            _ => Some(InstanceUniverse::Union(parts)),
        })
    }
}

fn parse_random(text: &str) -> Result<(usize, usize, f64)> {
    let fields: Vec<&str> = text.split(',').map(str::trim).collect();
    let [count, n, p] = fields.as_slice() else {
        bail!("--random expects COUNT,N,P, got `{text}`");
    };
    let count = count.parse().map_err(|_| anyhow!("bad count `{count}`"))?;
    let n = n.parse().map_err(|_| anyhow!("bad order `{n}`"))?;
    let p = p.parse().map_err(|_| anyhow!("bad probability `{p}`"))?;
    Ok((count, n, p))
}

/// Hunts default to every labelled graph of order at most 6.
pub fn default_hunt_universe() -> InstanceUniverse {
    InstanceUniverse::all_labeled(6, false, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_triple() {
        assert_eq!(parse_random("5, 8, 0.5").unwrap(), (5, 8, 0.5));
        assert!(parse_random("5,8").is_err());
        assert!(parse_random("x,8,0.5").is_err());
    }
}
