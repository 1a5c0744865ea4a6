//! Per-graph evaluation context: memoized invariant values, structural
//! hypothesis queries, and the exhaustive subset scan backing quantified
//! claims.

use std::collections::HashMap;

use crate::error::Result;
use crate::families::FamilySpec;
use crate::graph::{Graph, VertexSet};
use crate::solvers::kernel::{bits, MaskView};
use crate::solvers::{self, Invariant, SolverConfig};

use super::QUANTIFIER_GUARD;

pub struct CheckContext<'a> {
    pub graph: &'a Graph,
    pub source: Option<&'a FamilySpec>,
    pub cfg: SolverConfig,
    values: HashMap<Invariant, i64>,
    scan: Option<Option<Box<ScanStats>>>,
}

impl<'a> CheckContext<'a> {
    pub fn new(graph: &'a Graph, source: Option<&'a FamilySpec>, cfg: SolverConfig) -> Self {
        CheckContext {
            graph,
            source,
            cfg,
            values: HashMap::new(),
            scan: None,
        }
    }

    pub fn n(&self) -> i64 {
        self.graph.order() as i64
    }

    pub fn value(&mut self, inv: Invariant) -> Result<i64> {
        if let Some(&v) = self.values.get(&inv) {
            return Ok(v);
        }
        let v = solvers::solve(self.graph, inv, &self.cfg)?.value;
        self.values.insert(inv, v);
        Ok(v)
    }

    pub fn sd(&mut self) -> Result<i64> {
        self.value(Invariant::StrongDifferential)
    }

    pub fn diff(&mut self) -> Result<i64> {
        self.value(Invariant::Differential)
    }

    pub fn gamma(&mut self) -> Result<i64> {
        self.value(Invariant::Domination)
    }

    pub fn gamma2(&mut self) -> Result<i64> {
        self.value(Invariant::TwoDomination)
    }

    pub fn gamma_t2(&mut self) -> Result<i64> {
        self.value(Invariant::SemitotalDomination)
    }

    pub fn roman(&mut self) -> Result<i64> {
        self.value(Invariant::RomanDomination)
    }

    pub fn italian(&mut self) -> Result<i64> {
        self.value(Invariant::ItalianDomination)
    }

    pub fn alpha(&mut self) -> Result<i64> {
        self.value(Invariant::Independence)
    }

    pub fn beta(&mut self) -> Result<i64> {
        self.value(Invariant::VertexCover)
    }

    pub fn sigma(&self) -> i64 {
        self.graph.sigma() as i64
    }

    pub fn max_degree(&self) -> i64 {
        self.graph.max_degree() as i64
    }

    pub fn min_degree(&self) -> i64 {
        self.graph.min_degree() as i64
    }

    pub fn connected(&self) -> bool {
        self.graph.is_connected()
    }

    pub fn is_tree(&self) -> bool {
        self.graph.is_tree()
    }

    pub fn no_isolated(&self) -> bool {
        !self.graph.has_isolated_vertex()
    }

    /// Every connected component contains a vertex of degree at least two.
    pub fn every_component_max_degree_ge2(&self) -> bool {
        self.graph.components().iter().all(|comp| {
            comp.iter()
                .any(|v| self.graph.degree(v).expect("in range") >= 2)
        })
    }

    /// The exhaustive subset scan, or `None` when the order exceeds
    /// [`QUANTIFIER_GUARD`]. Returned by value; the stats are a handful of
    /// machine words.
    pub fn scan(&mut self) -> Option<ScanStats> {
        if self.scan.is_none() {
            let stats = (self.graph.order() <= QUANTIFIER_GUARD)
                .then(|| Box::new(ScanStats::compute(self.graph)));
            self.scan = Some(stats);
        }
        self.scan.as_ref().expect("just filled").as_deref().copied()
    }

    pub fn set_from_mask(&self, mask: u64) -> VertexSet {
        VertexSet::from_mask(self.graph.order(), mask)
    }
}

/// Facts established by scanning every subset of a small graph: the
/// unrestricted optimum, the minimum dominating set size, and the
/// quantified statements the registry needs, each with a counterexample
/// mask when refuted.
#[derive(Debug, Clone, Copy)]
pub struct ScanStats {
    /// Unrestricted maximum of the strong differential over all subsets.
    pub sd_max: i64,
    /// Minimum size of a dominating set.
    pub gamma: i64,
    /// Some optimal strong-differential set is dominating.
    pub exists_dominating_optimum: bool,
    /// Every dominating optimal set satisfies `sd = n - |D| - |Dw|`.
    pub remark_formula_ok: bool,
    pub remark_bad_set: Option<u64>,
    /// Some optimal set is dominating with no weak defenders.
    pub exists_dominating_optimum_without_weak: bool,
    /// Some optimal set consists of weak defenders only.
    pub exists_optimum_all_weak: bool,
    /// Union of the weak-defender sets over all optimal sets.
    pub weak_union_over_optima: u64,
    /// Every minimum dominating set is an optimal set with no strong
    /// defenders.
    pub every_gamma_set_optimal_strongless: bool,
    pub gamma_set_bad: Option<u64>,
    /// Some minimum dominating set has a strong defender.
    pub exists_gamma_set_with_strong: bool,
    pub gamma_set_with_strong: Option<u64>,
}

impl ScanStats {
    pub fn compute(g: &Graph) -> ScanStats {
        let k = MaskView::new(g);
        let mut sd_max = i64::MIN;
        let mut gamma = i64::MAX;
        for m in 0..=k.full {
            sd_max = sd_max.max(k.strong_differential(m));
            if k.is_dominating(m) {
                gamma = gamma.min(m.count_ones() as i64);
            }
        }

        let mut stats = ScanStats {
            sd_max,
            gamma,
            exists_dominating_optimum: false,
            remark_formula_ok: true,
            remark_bad_set: None,
            exists_dominating_optimum_without_weak: false,
            exists_optimum_all_weak: false,
            weak_union_over_optima: 0,
            every_gamma_set_optimal_strongless: true,
            gamma_set_bad: None,
            exists_gamma_set_with_strong: false,
            gamma_set_with_strong: None,
        };

        let n = k.n as i64;
        for m in 0..=k.full {
            let ext = k.external(m);
            let mut weak = 0u64;
            for u in bits(ext) {
                let dominators = k.adj[u] & m;
                if dominators.count_ones() == 1 {
                    weak |= dominators;
                }
            }
            let sd = ext.count_ones() as i64 - weak.count_ones() as i64;
            let dominating = m | k.neighborhood(m) == k.full;
            let optimal = sd == sd_max;

            if optimal {
                stats.weak_union_over_optima |= weak;
                if weak == m {
                    stats.exists_optimum_all_weak = true;
                }
                if dominating {
                    stats.exists_dominating_optimum = true;
                    if weak == 0 {
                        stats.exists_dominating_optimum_without_weak = true;
                    }
                    let formula = n - m.count_ones() as i64 - weak.count_ones() as i64;
                    if formula != sd_max && stats.remark_formula_ok {
                        stats.remark_formula_ok = false;
                        stats.remark_bad_set = Some(m);
                    }
                }
            }

            if dominating && m.count_ones() as i64 == gamma {
                let strong = m & !weak;
                if strong != 0 && !stats.exists_gamma_set_with_strong {
                    stats.exists_gamma_set_with_strong = true;
                    stats.gamma_set_with_strong = Some(m);
                }
                if (!optimal || strong != 0) && stats.every_gamma_set_optimal_strongless {
                    stats.every_gamma_set_optimal_strongless = false;
                    stats.gamma_set_bad = Some(m);
                }
            }
        }
        stats
    }
}
