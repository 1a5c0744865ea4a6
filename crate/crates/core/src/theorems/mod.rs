//! An executable registry of identities, bounds and characterisations of
//! the strong differential and its neighbouring invariants, plus a fuzz
//! harness that evaluates the registry over generated graph corpora.
//!
//! Every entry states a hypothesis and a claim. Evaluating an entry yields
//! [`CheckStatus::Holds`], [`CheckStatus::HypothesisNotMet`], a
//! [`CheckStatus::Violated`] outcome carrying a re-checkable
//! counterexample, or [`CheckStatus::Inconclusive`] when a quantified claim
//! would need an exhaustive subset scan beyond [`QUANTIFIER_GUARD`].
//! Inconclusive is never silently folded into Holds.

mod context;
mod registry;

pub use context::{CheckContext, ScanStats};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::{Graph, VertexSet};
use crate::solvers::SolverConfig;

/// Quantified claims ("there exists an optimal set such that...", "every
/// minimum set...") are decided by exhaustive subset enumeration, which is
/// only attempted up to this order.
pub const QUANTIFIER_GUARD: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    Identity,
    Inequality,
    Iff,
    Implication,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Holds,
    HypothesisNotMet,
    Violated,
    Inconclusive,
}

impl CheckStatus {
    pub fn id(&self) -> &'static str {
        match self {
            CheckStatus::Holds => "holds",
            CheckStatus::HypothesisNotMet => "hypothesis-not-met",
            CheckStatus::Violated => "violated",
            CheckStatus::Inconclusive => "inconclusive",
        }
    }
}

/// Evaluation result before it is tied to a graph.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub status: CheckStatus,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub detail: Option<String>,
    pub witnesses: Vec<(String, VertexSet)>,
}

impl Verdict {
    pub fn holds(lhs: i64, rhs: i64) -> Verdict {
        Verdict {
            status: CheckStatus::Holds,
            lhs: Some(lhs),
            rhs: Some(rhs),
            detail: None,
            witnesses: Vec::new(),
        }
    }

    pub fn holds_plain() -> Verdict {
        Verdict {
            status: CheckStatus::Holds,
            lhs: None,
            rhs: None,
            detail: None,
            witnesses: Vec::new(),
        }
    }

    pub fn hypothesis_not_met() -> Verdict {
        Verdict {
            status: CheckStatus::HypothesisNotMet,
            lhs: None,
            rhs: None,
            detail: None,
            witnesses: Vec::new(),
        }
    }

    pub fn violated(detail: impl Into<String>) -> Verdict {
        Verdict {
            status: CheckStatus::Violated,
            lhs: None,
            rhs: None,
            detail: Some(detail.into()),
            witnesses: Vec::new(),
        }
    }

    pub fn inconclusive(detail: impl Into<String>) -> Verdict {
        Verdict {
            status: CheckStatus::Inconclusive,
            lhs: None,
            rhs: None,
            detail: Some(detail.into()),
            witnesses: Vec::new(),
        }
    }

    pub fn with_values(mut self, lhs: i64, rhs: i64) -> Verdict {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self
    }

    pub fn with_witness(mut self, name: impl Into<String>, set: VertexSet) -> Verdict {
        self.witnesses.push((name.into(), set));
        self
    }
}

/// Compares `lhs op rhs` and produces the matching verdict.
fn require_le(lhs: i64, rhs: i64, label: &str) -> Verdict {
    if lhs <= rhs {
        Verdict::holds(lhs, rhs)
    } else {
        Verdict::violated(format!("{label}: {lhs} > {rhs}")).with_values(lhs, rhs)
    }
}

fn require_eq(lhs: i64, rhs: i64, label: &str) -> Verdict {
    if lhs == rhs {
        Verdict::holds(lhs, rhs)
    } else {
        Verdict::violated(format!("{label}: {lhs} != {rhs}")).with_values(lhs, rhs)
    }
}

/// Both directions of an equivalence; a one-directional failure names the
/// failing direction.
fn require_iff(left: bool, right: bool, left_label: &str, right_label: &str) -> Verdict {
    match (left, right) {
        (true, false) => Verdict::violated(format!(
            "forward direction fails: {left_label} holds but {right_label} does not"
        )),
        (false, true) => Verdict::violated(format!(
            "reverse direction fails: {right_label} holds but {left_label} does not"
        )),
        _ => Verdict::holds_plain(),
    }
}

type EvalFn = fn(&mut CheckContext<'_>) -> Result<Verdict>;

/// One registry entry: a stable id, the statement in plain language, and
/// its evaluator.
#[derive(Clone)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub claim_kind: ClaimKind,
    eval: EvalFn,
}

impl TheoremCheck {
    pub const fn new(
        id: &'static str,
        description: &'static str,
        claim_kind: ClaimKind,
        eval: EvalFn,
    ) -> TheoremCheck {
        TheoremCheck {
            id,
            description,
            claim_kind,
            eval,
        }
    }

    pub fn evaluate(&self, ctx: &mut CheckContext<'_>) -> Result<Verdict> {
        (self.eval)(ctx)
    }
}

impl std::fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TheoremCheck({})", self.id)
    }
}

/// The full registry, in a stable order.
pub fn registry() -> &'static [TheoremCheck] {
    registry::REGISTRY
}

pub fn find_check(id: &str) -> Result<&'static TheoremCheck> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

/// A violation certificate: the offending graph together with the sets that
/// exhibit the failure.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub graph: Graph,
    pub source: Option<FamilySpec>,
    pub witnesses: Vec<(String, VertexSet)>,
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub id: String,
    pub status: CheckStatus,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub detail: Option<String>,
    pub counterexample: Option<Counterexample>,
}

/// Evaluates one registry entry on one graph.
pub fn check(g: &Graph, id: &str, cfg: &SolverConfig) -> Result<CheckOutcome> {
    check_with_source(g, None, id, cfg)
}

/// Like [`check`], with the generating spec attached so provenance-aware
/// entries (the corona identity) can see their construction parameters.
pub fn check_with_source(
    g: &Graph,
    source: Option<&FamilySpec>,
    id: &str,
    cfg: &SolverConfig,
) -> Result<CheckOutcome> {
    let entry = find_check(id)?;
    let mut ctx = CheckContext::new(g, source, *cfg);
    let verdict = entry.evaluate(&mut ctx)?;
    Ok(assemble(entry, g, source, verdict))
}

fn assemble(
    entry: &TheoremCheck,
    g: &Graph,
    source: Option<&FamilySpec>,
    verdict: Verdict,
) -> CheckOutcome {
    let counterexample = (verdict.status == CheckStatus::Violated).then(|| Counterexample {
        graph: g.clone(),
        source: source.cloned(),
        witnesses: verdict.witnesses.clone(),
    });
    CheckOutcome {
        id: entry.id.to_string(),
        status: verdict.status,
        lhs: verdict.lhs,
        rhs: verdict.rhs,
        detail: verdict.detail,
        counterexample,
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub holds: usize,
    pub hypothesis_not_met: usize,
    pub violated: usize,
    pub inconclusive: usize,
}

impl CheckTally {
    fn bump(&mut self, status: CheckStatus) {
        match status {
            CheckStatus::Holds => self.holds += 1,
            CheckStatus::HypothesisNotMet => self.hypothesis_not_met += 1,
            CheckStatus::Violated => self.violated += 1,
            CheckStatus::Inconclusive => self.inconclusive += 1,
        }
    }
}

/// Aggregated outcome of a fuzz run: per-check tallies plus every violated
/// outcome in full.
#[derive(Debug, Clone, Default)]
pub struct FuzzReport {
    pub tallies: BTreeMap<String, CheckTally>,
    pub violations: Vec<CheckOutcome>,
    pub graphs_evaluated: usize,
}

impl FuzzReport {
    pub fn total_violated(&self) -> usize {
        self.tallies.values().map(|t| t.violated).sum()
    }

    pub fn total_inconclusive(&self) -> usize {
        self.tallies.values().map(|t| t.inconclusive).sum()
    }
}

/// Evaluates the named registry entries over generated graphs, up to
/// `budget` graphs. The id `"all"` selects the whole registry.
pub fn fuzz(
    specs: &[FamilySpec],
    ids: &[&str],
    budget: usize,
    cfg: &SolverConfig,
) -> Result<FuzzReport> {
    if budget == 0 {
        return Err(Error::InvalidArgument(
            "fuzz budget must be at least 1".into(),
        ));
    }
    let mut selected: Vec<&TheoremCheck> = Vec::new();
    for &id in ids {
        if id == "all" {
            selected.extend(registry().iter());
        } else {
            selected.push(find_check(id)?);
        }
    }
    run_checks(&selected, specs, budget, cfg)
}

/// Core fuzz loop over an explicit list of checks (tests inject synthetic
/// entries through this).
pub fn run_checks(
    checks: &[&TheoremCheck],
    specs: &[FamilySpec],
    budget: usize,
    cfg: &SolverConfig,
) -> Result<FuzzReport> {
    let mut report = FuzzReport::default();
    for entry in checks {
        report.tallies.entry(entry.id.to_string()).or_default();
    }
    for spec in specs.iter().take(budget) {
        let g = generate(spec)?;
        let mut ctx = CheckContext::new(&g, Some(spec), *cfg);
        for entry in checks {
            let verdict = entry.evaluate(&mut ctx)?;
            report
                .tallies
                .get_mut(entry.id)
                .expect("tally preallocated")
                .bump(verdict.status);
            if verdict.status == CheckStatus::Violated {
                report
                    .violations
                    .push(assemble(entry, &g, Some(spec), verdict));
            }
        }
        report.graphs_evaluated += 1;
    }
    Ok(report)
}
