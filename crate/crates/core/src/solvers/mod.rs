//! Exact solvers for the nine invariants, each with an optimal witness.
//!
//! Every invariant has a primary branch-and-bound search and an independent
//! brute-force oracle (in [`oracle`]) used to cross-validate it. Ties among
//! optimal witnesses are always broken towards the lexicographically
//! smallest set or weight string, so repeated solves are bit-identical.

mod bb;
mod gallai;
pub(crate) mod kernel;
pub mod oracle;

pub use gallai::{dominating_strong_witness, gallai_derived};

use crate::breakdown::{breakdown, DifferentialBreakdown};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::weights::{is_idf, is_rdf, WeightFunction};

/// Hard limit for the plain subset-enumeration oracles.
pub const ORACLE_SUBSET_LIMIT: usize = 16;
/// Hard limit for the plain weight-function oracles (3^n enumeration).
pub const ORACLE_WEIGHT_LIMIT: usize = 12;
/// The bitmask search kernels address vertices with single machine words.
pub const SOLVER_HARD_LIMIT: usize = 64;

/// The invariants this crate solves exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invariant {
    StrongDifferential,
    Differential,
    Domination,
    TwoDomination,
    SemitotalDomination,
    RomanDomination,
    ItalianDomination,
    Independence,
    VertexCover,
}

impl Invariant {
    pub const ALL: [Invariant; 9] = [
        Invariant::StrongDifferential,
        Invariant::Differential,
        Invariant::Domination,
        Invariant::TwoDomination,
        Invariant::SemitotalDomination,
        Invariant::RomanDomination,
        Invariant::ItalianDomination,
        Invariant::Independence,
        Invariant::VertexCover,
    ];

    /// Stable string id used by the CLI and the JSON report.
    pub fn id(&self) -> &'static str {
        match self {
            Invariant::StrongDifferential => "strong-differential",
            Invariant::Differential => "differential",
            Invariant::Domination => "domination",
            Invariant::TwoDomination => "two-domination",
            Invariant::SemitotalDomination => "semitotal-domination",
            Invariant::RomanDomination => "roman-domination",
            Invariant::ItalianDomination => "italian-domination",
            Invariant::Independence => "independence",
            Invariant::VertexCover => "vertex-cover",
        }
    }

    pub fn from_id(id: &str) -> Option<Invariant> {
        Invariant::ALL.into_iter().find(|inv| inv.id() == id)
    }

    /// Function-valued invariants carry a [`WeightFunction`] witness, the
    /// rest a [`VertexSet`].
    pub fn is_function_valued(&self) -> bool {
        matches!(
            self,
            Invariant::RomanDomination | Invariant::ItalianDomination
        )
    }
}

/// Witness tie-break policy. Only one policy exists; it is part of the
/// solver contract rather than a tunable.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum TieBreak {
    #[default]
    LexicographicSmallest,
}

/// Search limits for the exponential solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest order admitted by the branch-and-bound searches.
    pub size_guard: usize,
    pub tie_break: TieBreak,
    /// Admit graphs above `size_guard` anyway (the searches stay
    /// exponential; the kernels top out at [`SOLVER_HARD_LIMIT`]).
    pub allow_guard_override: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            size_guard: 20,
            tie_break: TieBreak::LexicographicSmallest,
            allow_guard_override: false,
        }
    }
}

impl SolverConfig {
    pub fn with_guard(size_guard: usize) -> Self {
        SolverConfig {
            size_guard,
            ..SolverConfig::default()
        }
    }

    pub(crate) fn admit(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > SOLVER_HARD_LIMIT {
            return Err(Error::SizeGuardExceeded {
                n,
                guard: SOLVER_HARD_LIMIT,
            });
        }
        if n > self.size_guard && !self.allow_guard_override {
            return Err(Error::SizeGuardExceeded {
                n,
                guard: self.size_guard,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    BranchAndBound,
    BruteForce,
    GallaiDerived,
}

impl Method {
    pub fn id(&self) -> &'static str {
        match self {
            Method::BranchAndBound => "branch-and-bound",
            Method::BruteForce => "brute-force",
            Method::GallaiDerived => "gallai-derived",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    Set(VertexSet),
    Function(WeightFunction),
}

impl Witness {
    pub fn as_set(&self) -> Option<&VertexSet> {
        match self {
            Witness::Set(s) => Some(s),
            Witness::Function(_) => None,
        }
    }

    pub fn as_function(&self) -> Option<&WeightFunction> {
        match self {
            Witness::Function(f) => Some(f),
            Witness::Set(_) => None,
        }
    }
}

/// An exactly solved invariant: the optimal value, a witness achieving it,
/// and for the differential invariants the witness breakdown.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantResult {
    pub invariant: Invariant,
    pub value: i64,
    pub witness: Witness,
    pub breakdown: Option<DifferentialBreakdown>,
    pub method: Method,
}

impl InvariantResult {
    /// Re-checks that the witness is feasible and re-evaluates to `value`.
    /// Optimality is not re-checked here; the oracles cover that.
    pub fn revalidate(&self, g: &Graph) -> bool {
        match (&self.invariant, &self.witness) {
            (Invariant::StrongDifferential, Witness::Set(s)) => {
                let bd = breakdown(g, s);
                bd.strong_differential == self.value
                    && self
                        .breakdown
                        .as_ref()
                        .is_some_and(|b| *b == bd && b.is_consistent(g))
            }
            (Invariant::Differential, Witness::Set(s)) => {
                let bd = breakdown(g, s);
                bd.differential == self.value
                    && self
                        .breakdown
                        .as_ref()
                        .is_some_and(|b| *b == bd && b.is_consistent(g))
            }
            (Invariant::Domination, Witness::Set(s)) => {
                g.is_dominating(s) && s.len() as i64 == self.value
            }
            (Invariant::TwoDomination, Witness::Set(s)) => {
                g.is_2_dominating(s) && s.len() as i64 == self.value
            }
            (Invariant::SemitotalDomination, Witness::Set(s)) => {
                g.is_semitotal_dominating(s).unwrap_or(false) && s.len() as i64 == self.value
            }
            (Invariant::Independence, Witness::Set(s)) => {
                g.is_independent(s) && s.len() as i64 == self.value
            }
            (Invariant::VertexCover, Witness::Set(s)) => {
                g.is_vertex_cover(s) && s.len() as i64 == self.value
            }
            (Invariant::RomanDomination, Witness::Function(f)) => {
                is_rdf(g, f).unwrap_or(false) && f.weight() as i64 == self.value
            }
            (Invariant::ItalianDomination, Witness::Function(f)) => {
                is_idf(g, f).unwrap_or(false) && f.weight() as i64 == self.value
            }
            _ => false,
        }
    }
}

/// Maximum of the strong differential over all subsets, searched over
/// dominating sets only (some optimal set is always dominating), so the
/// witness is simultaneously a dominating set.
pub fn strong_differential(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.admit(g)?;
    let (value, set) = bb::strong_differential(g);
    let bd = breakdown(g, &set);
    debug_assert!(g.is_dominating(&set));
    Ok(InvariantResult {
        invariant: Invariant::StrongDifferential,
        value,
        witness: Witness::Set(set),
        breakdown: Some(bd),
        method: Method::BranchAndBound,
    })
}

/// Plain `2^n` enumeration of all subsets, with no search-space restriction.
pub fn strong_differential_oracle(g: &Graph) -> Result<InvariantResult> {
    oracle::strong_differential(g)
}

/// Maximum of `|Ne(S)| - |S|` over all subsets.
pub fn differential(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.admit(g)?;
    let (value, set) = bb::differential(g);
    let bd = breakdown(g, &set);
    Ok(InvariantResult {
        invariant: Invariant::Differential,
        value,
        witness: Witness::Set(set),
        breakdown: Some(bd),
        method: Method::BranchAndBound,
    })
}

pub fn domination_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.admit(g)?;
    let (value, set) = bb::domination(g);
    Ok(set_result(Invariant::Domination, value, set))
}

pub fn two_domination_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.admit(g)?;
    let (value, set) = bb::two_domination(g);
    Ok(set_result(Invariant::TwoDomination, value, set))
}

pub fn semitotal_domination_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.admit(g)?;
    if g.has_isolated_vertex() {
        return Err(Error::UndefinedInvariant(
            "semitotal domination requires a graph without isolated vertices".into(),
        ));
    }
    let (value, set) = bb::semitotal_domination(g);
    Ok(set_result(Invariant::SemitotalDomination, value, set))
}

pub fn independence_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.admit(g)?;
    let (value, set) = bb::independence(g);
    Ok(set_result(Invariant::Independence, value, set))
}

pub fn vertex_cover_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.admit(g)?;
    let (value, set) = bb::vertex_cover(g);
    Ok(set_result(Invariant::VertexCover, value, set))
}

pub fn roman_domination_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.admit(g)?;
    let (value, f) = bb::roman_domination(g);
    Ok(function_result(Invariant::RomanDomination, value, f))
}

pub fn italian_domination_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.admit(g)?;
    let (value, f) = bb::italian_domination(g);
    Ok(function_result(Invariant::ItalianDomination, value, f))
}

/// Solves one invariant by its tag.
pub fn solve(g: &Graph, invariant: Invariant, cfg: &SolverConfig) -> Result<InvariantResult> {
    match invariant {
        Invariant::StrongDifferential => strong_differential(g, cfg),
        Invariant::Differential => differential(g, cfg),
        Invariant::Domination => domination_number(g, cfg),
        Invariant::TwoDomination => two_domination_number(g, cfg),
        Invariant::SemitotalDomination => semitotal_domination_number(g, cfg),
        Invariant::RomanDomination => roman_domination_number(g, cfg),
        Invariant::ItalianDomination => italian_domination_number(g, cfg),
        Invariant::Independence => independence_number(g, cfg),
        Invariant::VertexCover => vertex_cover_number(g, cfg),
    }
}

fn set_result(invariant: Invariant, value: i64, set: VertexSet) -> InvariantResult {
    InvariantResult {
        invariant,
        value,
        witness: Witness::Set(set),
        breakdown: None,
        method: Method::BranchAndBound,
    }
}

fn function_result(invariant: Invariant, value: i64, f: WeightFunction) -> InvariantResult {
    InvariantResult {
        invariant,
        value,
        witness: Witness::Function(f),
        breakdown: None,
        method: Method::BranchAndBound,
    }
}

#[cfg(test)]
mod tests;
