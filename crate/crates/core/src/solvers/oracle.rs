//! Independent brute-force oracles: plain enumeration of every subset (or
//! every weight function) with no search-space restriction or pruning
//! beyond the hard size limits. These exist to cross-validate the
//! branch-and-bound solvers and are deliberately kept free of any insight
//! the primary solvers rely on.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weights::WeightFunction;

use super::kernel::{bits, lex_less, MaskView};
use super::{
    function_result, set_result, Invariant, InvariantResult, Method, Witness, ORACLE_SUBSET_LIMIT,
    ORACLE_WEIGHT_LIMIT,
};
use crate::breakdown::breakdown;

fn admit_subsets(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.order() > ORACLE_SUBSET_LIMIT {
        return Err(Error::SizeGuardExceeded {
            n: g.order(),
            guard: ORACLE_SUBSET_LIMIT,
        });
    }
    Ok(())
}

fn admit_weights(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.order() > ORACLE_WEIGHT_LIMIT {
        return Err(Error::SizeGuardExceeded {
            n: g.order(),
            guard: ORACLE_WEIGHT_LIMIT,
        });
    }
    Ok(())
}

/// Scans all `2^n` subsets; keeps the best objective value, breaking ties
/// towards the lexicographically smallest mask. `maximize` selects the
/// direction; infeasible subsets yield `None`.
fn best_subset(
    k: &MaskView,
    maximize: bool,
    mut objective: impl FnMut(u64) -> Option<i64>,
) -> Option<(i64, u64)> {
    let mut best: Option<(i64, u64)> = None;
    for m in 0..=k.full {
        let Some(value) = objective(m) else { continue };
        let better = match best {
            None => true,
            Some((bv, bm)) => {
                if maximize {
                    value > bv || (value == bv && lex_less(m, bm))
                } else {
                    value < bv || (value == bv && lex_less(m, bm))
                }
            }
        };
        if better {
            best = Some((value, m));
        }
    }
    best
}

fn brute(mut r: InvariantResult) -> InvariantResult {
    r.method = Method::BruteForce;
    r
}

pub fn strong_differential(g: &Graph) -> Result<InvariantResult> {
    admit_subsets(g)?;
    let k = MaskView::new(g);
    let (value, m) = best_subset(&k, true, |m| Some(k.strong_differential(m))).expect("nonempty");
    let set = k.set(m);
    let bd = breakdown(g, &set);
    Ok(InvariantResult {
        invariant: Invariant::StrongDifferential,
        value,
        witness: Witness::Set(set),
        breakdown: Some(bd),
        method: Method::BruteForce,
    })
}

pub fn differential(g: &Graph) -> Result<InvariantResult> {
    admit_subsets(g)?;
    let k = MaskView::new(g);
    let (value, m) = best_subset(&k, true, |m| Some(k.differential(m))).expect("nonempty");
    let set = k.set(m);
    let bd = breakdown(g, &set);
    Ok(InvariantResult {
        invariant: Invariant::Differential,
        value,
        witness: Witness::Set(set),
        breakdown: Some(bd),
        method: Method::BruteForce,
    })
}

pub fn domination(g: &Graph) -> Result<InvariantResult> {
    admit_subsets(g)?;
    let k = MaskView::new(g);
    let (value, m) = best_subset(&k, false, |m| {
        k.is_dominating(m).then_some(m.count_ones() as i64)
    })
    .expect("the full vertex set dominates");
    Ok(brute(set_result(Invariant::Domination, value, k.set(m))))
}

pub fn two_domination(g: &Graph) -> Result<InvariantResult> {
    admit_subsets(g)?;
    let k = MaskView::new(g);
    let (value, m) = best_subset(&k, false, |m| {
        k.is_two_dominating(m).then_some(m.count_ones() as i64)
    })
    .expect("the full vertex set 2-dominates");
    Ok(brute(set_result(Invariant::TwoDomination, value, k.set(m))))
}

pub fn semitotal_domination(g: &Graph) -> Result<InvariantResult> {
    admit_subsets(g)?;
    if g.has_isolated_vertex() {
        return Err(Error::UndefinedInvariant(
            "semitotal domination requires a graph without isolated vertices".into(),
        ));
    }
    let k = MaskView::new(g);
    let balls = k.dist2_balls();
    let (value, m) = best_subset(&k, false, |m| {
        k.is_semitotal_dominating(m, &balls)
            .then_some(m.count_ones() as i64)
    })
    .expect("the full vertex set is semitotal dominating");
    Ok(brute(set_result(
        Invariant::SemitotalDomination,
        value,
        k.set(m),
    )))
}

pub fn independence(g: &Graph) -> Result<InvariantResult> {
    admit_subsets(g)?;
    let k = MaskView::new(g);
    let (value, m) = best_subset(&k, true, |m| {
        k.is_independent(m).then_some(m.count_ones() as i64)
    })
    .expect("the empty set is independent");
    Ok(brute(set_result(Invariant::Independence, value, k.set(m))))
}

pub fn vertex_cover(g: &Graph) -> Result<InvariantResult> {
    admit_subsets(g)?;
    let k = MaskView::new(g);
    let (value, m) = best_subset(&k, false, |m| {
        k.is_vertex_cover(m).then_some(m.count_ones() as i64)
    })
    .expect("the full vertex set covers");
    Ok(brute(set_result(Invariant::VertexCover, value, k.set(m))))
}

/// Enumerates every `(V1, V2)` pair of disjoint masks (`3^n` functions);
/// ties are broken by the lexicographically smallest weight string.
fn best_weight_function(
    k: &MaskView,
    feasible: impl Fn(u64, u64) -> bool,
) -> (i64, WeightFunction) {
    let n = k.n;
    let mut best: Option<(i64, u64, u64)> = None; // weight, ones, twos
    let mut twos = 0u64;
    loop {
        let rest = k.full & !twos;
        let mut ones = rest;
        loop {
            if feasible(ones, twos) {
                let weight = ones.count_ones() as i64 + 2 * twos.count_ones() as i64;
                let better = match best {
                    None => true,
                    Some((bw, bo, bt)) => {
                        weight < bw || (weight == bw && weight_lex_less(ones, twos, bo, bt))
                    }
                };
                if better {
                    best = Some((weight, ones, twos));
                }
            }
            if ones == 0 {
                break;
            }
            ones = (ones - 1) & rest;
        }
        if twos == k.full {
            break;
        }
        // next mask for V2
        twos += 1;
    }
    let (weight, ones, twos) = best.expect("the all-ones function is feasible");
    let weights = (0..n)
        .map(|v| {
            if twos >> v & 1 == 1 {
                2
            } else if ones >> v & 1 == 1 {
                1
            } else {
                0
            }
        })
        .collect();
    (
        weight,
        WeightFunction::new(weights).expect("weights in range"),
    )
}

/// Compares two weight strings at the lowest vertex where they differ.
fn weight_lex_less(ones_a: u64, twos_a: u64, ones_b: u64, twos_b: u64) -> bool {
    let diff = (ones_a ^ ones_b) | (twos_a ^ twos_b);
    if diff == 0 {
        return false;
    }
    let v = diff.trailing_zeros();
    let wa = 2 * (twos_a >> v & 1) + (ones_a >> v & 1);
    let wb = 2 * (twos_b >> v & 1) + (ones_b >> v & 1);
    wa < wb
}

pub fn roman_domination(g: &Graph) -> Result<InvariantResult> {
    admit_weights(g)?;
    let k = MaskView::new(g);
    let (value, f) = best_weight_function(&k, |ones, twos| {
        bits(k.full & !ones & !twos).all(|v| k.adj[v] & twos != 0)
    });
    Ok(brute(function_result(Invariant::RomanDomination, value, f)))
}

pub fn italian_domination(g: &Graph) -> Result<InvariantResult> {
    admit_weights(g)?;
    let k = MaskView::new(g);
    let (value, f) = best_weight_function(&k, |ones, twos| {
        bits(k.full & !ones & !twos)
            .all(|v| k.adj[v] & twos != 0 || (k.adj[v] & ones).count_ones() >= 2)
    });
    Ok(brute(function_result(
        Invariant::ItalianDomination,
        value,
        f,
    )))
}

/// Oracle dispatch by invariant tag.
pub fn solve(g: &Graph, invariant: Invariant) -> Result<InvariantResult> {
    match invariant {
        Invariant::StrongDifferential => strong_differential(g),
        Invariant::Differential => differential(g),
        Invariant::Domination => domination(g),
        Invariant::TwoDomination => two_domination(g),
        Invariant::SemitotalDomination => semitotal_domination(g),
        Invariant::RomanDomination => roman_domination(g),
        Invariant::ItalianDomination => italian_domination(g),
        Invariant::Independence => independence(g),
        Invariant::VertexCover => vertex_cover(g),
    }
}
