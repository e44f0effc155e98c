//! Bounded searches for answers to the two open questions about
//! supercritical graphs and dead vertices in edge-critical graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::registry::Ctx;
use super::{run, InstanceUniverse, VerificationReport, VerifyError};
use crate::exec::Exec;
use crate::families::is_union_of_large_cliques;
use crate::graph::members;
use crate::solver::{Mode, Solver, ENUMERATION_MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Question {
    /// Is every γ_tR-edge-supercritical graph a union of ≥ 2 cliques of order ≥ 3?
    Q1Supercritical,
    /// Is there a γ_tR-edge-critical graph with a dead vertex?
    Q2DeadInCritical,
}

impl Question {
    pub const ALL: [Question; 2] = [Question::Q1Supercritical, Question::Q2DeadInCritical];

    pub fn as_str(self) -> &'static str {
        match self {
            Question::Q1Supercritical => "Q1_supercritical",
            Question::Q2DeadInCritical => "Q2_dead_in_critical",
        }
    }
}

impl fmt::Display for Question {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Question {
    type Err = VerifyError;

    /// Accepts the full id or its `Q1` / `Q2` prefix, case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase();
        Question::ALL
            .into_iter()
            .find(|q| {
                let id = q.as_str().to_ascii_lowercase();
                key == id || Some(key.as_str()) == id.split('_').next()
            })
            .ok_or_else(|| VerifyError::UnknownQuestion(s.to_string()))
    }
}

impl Serialize for Question {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Search `universe` for a graph answering `question` the unexpected way.
/// A pass only means none was found in this universe.
pub fn hunt_counterexamples(
    question: Question,
    universe: &InstanceUniverse,
) -> Result<VerificationReport, VerifyError> {
    hunt_counterexamples_with(&Solver::default(), Exec::default(), question, universe)
}

pub fn hunt_counterexamples_with(
    solver: &Solver,
    exec: Exec,
    question: Question,
    universe: &InstanceUniverse,
) -> Result<VerificationReport, VerifyError> {
    let ctx = Ctx { solver };
    run(question.as_str(), universe, exec, |inst| {
        let g = &inst.graph;
        if g.order() < 2 || g.has_isolated_vertex() {
            return Ok(None);
        }
        match question {
            Question::Q1Supercritical => {
                let base = ctx.tr(g)?;
                if !ctx.supercritical(g, base)? || is_union_of_large_cliques(g) {
                    return Ok(Some(None));
                }
                Ok(Some(Some(format!(
                    "supercritical with γ_tR = {base} but not a union of cliques of order >= 3"
                ))))
            }
            Question::Q2DeadInCritical => {
                if g.order() > ENUMERATION_MAX_ORDER {
                    return Ok(None);
                }
                let base = ctx.tr(g)?;
                if !ctx.edge_critical(g, base)? {
                    return Ok(Some(None));
                }
                let dead = ctx.dead(g, Mode::TotalRoman)?;
                if dead == 0 {
                    return Ok(Some(None));
                }
                Ok(Some(Some(format!(
                    "edge-critical with γ_tR = {base} and dead vertices {:?}",
                    members(dead).collect::<Vec<_>>()
                ))))
            }
        }
    })
}
