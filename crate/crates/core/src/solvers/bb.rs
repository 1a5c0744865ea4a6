//! Branch-and-bound searches. Every search decides vertices in index order
//! with the "out"/"weight 0" branch first, so complete assignments are
//! visited in lexicographic order of their bit or weight string; together
//! with strict-improvement pruning the final incumbent is the
//! lexicographically smallest optimal witness.

use crate::graph::{Graph, VertexSet};
use crate::weights::WeightFunction;

use super::kernel::{bits, MaskView};

fn div_ceil_u32(a: u32, b: u32) -> i64 {
    (a as i64 + b as i64 - 1) / b as i64
}

/// Maximum strong differential, searched over dominating sets only. For a
/// dominating set the boundary is exactly the complement, so the leaf value
/// is `n - |D| - |Dw|` and the optimistic bound drops the not-yet-forced
/// weak defenders.
pub(super) fn strong_differential(g: &Graph) -> (i64, VertexSet) {
    let k = MaskView::new(g);
    let mut best_val: i64 = -1;
    let mut best_mask: u64 = 0;
    rec_sd(&k, 0, 0, 0, &mut best_val, &mut best_mask);
    (best_val, k.set(best_mask))
}

fn rec_sd(
    k: &MaskView,
    idx: usize,
    in_mask: u64,
    out_mask: u64,
    best_val: &mut i64,
    best_mask: &mut u64,
) {
    let und = k.full & !in_mask & !out_mask;
    let mut forced_weak = 0u64;
    for u in bits(out_mask) {
        if k.adj[u] & und == 0 {
            let dominators = k.adj[u] & in_mask;
            if dominators == 0 {
                return; // u can never be dominated
            }
            if dominators.count_ones() == 1 {
                forced_weak |= dominators;
            }
        }
    }
    let ub = k.n as i64 - in_mask.count_ones() as i64 - forced_weak.count_ones() as i64;
    if ub <= *best_val {
        return;
    }
    if idx == k.n {
        // All out-vertices are dominated here, so the bound is exact.
        debug_assert!(k.is_dominating(in_mask));
        debug_assert_eq!(ub, k.strong_differential(in_mask));
        *best_val = ub;
        *best_mask = in_mask;
        return;
    }
    let bit = 1u64 << idx;
    rec_sd(k, idx + 1, in_mask, out_mask | bit, best_val, best_mask);
    rec_sd(k, idx + 1, in_mask | bit, out_mask, best_val, best_mask);
}

/// Maximum of `|Ne(S)| - |S|` over all subsets. The bound counts every
/// vertex that could still end up on the boundary.
pub(super) fn differential(g: &Graph) -> (i64, VertexSet) {
    let k = MaskView::new(g);
    let mut best_val: i64 = -1;
    let mut best_mask: u64 = 0;
    rec_diff(&k, 0, 0, 0, &mut best_val, &mut best_mask);
    (best_val, k.set(best_mask))
}

fn rec_diff(
    k: &MaskView,
    idx: usize,
    in_mask: u64,
    out_mask: u64,
    best_val: &mut i64,
    best_mask: &mut u64,
) {
    let und = k.full & !in_mask & !out_mask;
    let reachable = in_mask | und;
    let mut potential = 0u32;
    for v in bits(k.full & !in_mask) {
        if k.adj[v] & reachable != 0 {
            potential += 1;
        }
    }
    let ub = potential as i64 - in_mask.count_ones() as i64;
    if ub <= *best_val {
        return;
    }
    if idx == k.n {
        debug_assert_eq!(ub, k.differential(in_mask));
        *best_val = ub;
        *best_mask = in_mask;
        return;
    }
    let bit = 1u64 << idx;
    rec_diff(k, idx + 1, in_mask, out_mask | bit, best_val, best_mask);
    rec_diff(k, idx + 1, in_mask | bit, out_mask, best_val, best_mask);
}

struct MinSearch<'a> {
    k: &'a MaskView,
    closed: Vec<u64>,
    best_val: i64,
    best_mask: u64,
}

/// Minimum dominating set.
pub(super) fn domination(g: &Graph) -> (i64, VertexSet) {
    let k = MaskView::new(g);
    let closed = (0..k.n).map(|v| k.adj[v] | 1 << v).collect();
    let mut search = MinSearch {
        k: &k,
        closed,
        best_val: k.n as i64 + 1,
        best_mask: k.full,
    };
    rec_dom(&mut search, 0, 0, 0, 0);
    (search.best_val, k.set(search.best_mask))
}

fn rec_dom(s: &mut MinSearch, idx: usize, in_mask: u64, out_mask: u64, dom_mask: u64) {
    let k = s.k;
    let und = k.full & !in_mask & !out_mask;
    let undominated = k.full & !dom_mask;
    let mut lb = 0;
    if undominated != 0 {
        let mut max_cover = 0;
        for w in bits(und) {
            let c = (s.closed[w] & undominated).count_ones();
            max_cover = max_cover.max(c);
        }
        for v in bits(undominated & out_mask) {
            if k.adj[v] & und == 0 {
                return; // v can never be dominated
            }
        }
        if max_cover == 0 {
            return;
        }
        lb = div_ceil_u32(undominated.count_ones(), max_cover);
    }
    if in_mask.count_ones() as i64 + lb >= s.best_val {
        return;
    }
    if idx == k.n {
        debug_assert!(k.is_dominating(in_mask));
        s.best_val = in_mask.count_ones() as i64;
        s.best_mask = in_mask;
        return;
    }
    let bit = 1u64 << idx;
    rec_dom(s, idx + 1, in_mask, out_mask | bit, dom_mask);
    rec_dom(
        s,
        idx + 1,
        in_mask | bit,
        out_mask,
        dom_mask | s.closed[idx],
    );
}

/// Minimum 2-dominating set: every outside vertex keeps two inside
/// neighbours.
pub(super) fn two_domination(g: &Graph) -> (i64, VertexSet) {
    let k = MaskView::new(g);
    let mut best_val: i64 = k.n as i64 + 1;
    let mut best_mask: u64 = k.full;
    rec_two_dom(&k, 0, 0, 0, &mut best_val, &mut best_mask);
    (best_val, k.set(best_mask))
}

fn rec_two_dom(
    k: &MaskView,
    idx: usize,
    in_mask: u64,
    out_mask: u64,
    best_val: &mut i64,
    best_mask: &mut u64,
) {
    let und = k.full & !in_mask & !out_mask;
    let mut demand = 0u32;
    let mut unmet = 0u64;
    for v in bits(out_mask) {
        let have = (k.adj[v] & in_mask).count_ones();
        if have >= 2 {
            continue;
        }
        if have + (k.adj[v] & und).count_ones() < 2 {
            return;
        }
        demand += 2 - have;
        unmet |= 1 << v;
    }
    let mut lb = 0;
    if demand > 0 {
        let mut max_supply = 0;
        for w in bits(und) {
            max_supply = max_supply.max((k.adj[w] & unmet).count_ones());
        }
        if max_supply == 0 {
            return;
        }
        lb = div_ceil_u32(demand, max_supply);
    }
    if in_mask.count_ones() as i64 + lb >= *best_val {
        return;
    }
    if idx == k.n {
        debug_assert!(k.is_two_dominating(in_mask));
        *best_val = in_mask.count_ones() as i64;
        *best_mask = in_mask;
        return;
    }
    let bit = 1u64 << idx;
    rec_two_dom(k, idx + 1, in_mask, out_mask | bit, best_val, best_mask);
    rec_two_dom(k, idx + 1, in_mask | bit, out_mask, best_val, best_mask);
}

struct SemitotalSearch<'a> {
    k: &'a MaskView,
    closed: Vec<u64>,
    balls: Vec<u64>,
    best_val: i64,
    best_mask: u64,
}

/// Minimum semitotal dominating set: dominating, and every member has
/// another member within distance two. The caller rejects graphs with
/// isolated vertices.
pub(super) fn semitotal_domination(g: &Graph) -> (i64, VertexSet) {
    let k = MaskView::new(g);
    let closed = (0..k.n).map(|v| k.adj[v] | 1 << v).collect();
    let balls = k.dist2_balls();
    let mut search = SemitotalSearch {
        k: &k,
        closed,
        balls,
        best_val: k.n as i64 + 1,
        best_mask: k.full,
    };
    rec_semitotal(&mut search, 0, 0, 0, 0);
    (search.best_val, k.set(search.best_mask))
}

fn rec_semitotal(s: &mut SemitotalSearch, idx: usize, in_mask: u64, out_mask: u64, dom_mask: u64) {
    let k = s.k;
    let und = k.full & !in_mask & !out_mask;
    for v in bits(in_mask) {
        if s.balls[v] & (in_mask | und) == 0 {
            return; // v can never get a partner within distance two
        }
    }
    let undominated = k.full & !dom_mask;
    let mut lb = 0;
    if undominated != 0 {
        let mut max_cover = 0;
        for w in bits(und) {
            max_cover = max_cover.max((s.closed[w] & undominated).count_ones());
        }
        for v in bits(undominated & out_mask) {
            if k.adj[v] & und == 0 {
                return;
            }
        }
        if max_cover == 0 {
            return;
        }
        lb = div_ceil_u32(undominated.count_ones(), max_cover);
    }
    if in_mask.count_ones() as i64 + lb >= s.best_val {
        return;
    }
    if idx == k.n {
        debug_assert!(k.is_semitotal_dominating(in_mask, &s.balls));
        s.best_val = in_mask.count_ones() as i64;
        s.best_mask = in_mask;
        return;
    }
    let bit = 1u64 << idx;
    rec_semitotal(s, idx + 1, in_mask, out_mask | bit, dom_mask);
    rec_semitotal(
        s,
        idx + 1,
        in_mask | bit,
        out_mask,
        dom_mask | s.closed[idx],
    );
}

/// Maximum independent set.
pub(super) fn independence(g: &Graph) -> (i64, VertexSet) {
    let k = MaskView::new(g);
    let mut best_val: i64 = -1;
    let mut best_mask: u64 = 0;
    rec_indep(&k, 0, 0, 0, &mut best_val, &mut best_mask);
    (best_val, k.set(best_mask))
}

fn rec_indep(
    k: &MaskView,
    idx: usize,
    in_mask: u64,
    out_mask: u64,
    best_val: &mut i64,
    best_mask: &mut u64,
) {
    let und = k.full & !in_mask & !out_mask;
    let candidates = bits(und).filter(|&w| k.adj[w] & in_mask == 0).count();
    let ub = in_mask.count_ones() as i64 + candidates as i64;
    if ub <= *best_val {
        return;
    }
    if idx == k.n {
        debug_assert!(k.is_independent(in_mask));
        *best_val = in_mask.count_ones() as i64;
        *best_mask = in_mask;
        return;
    }
    let bit = 1u64 << idx;
    rec_indep(k, idx + 1, in_mask, out_mask | bit, best_val, best_mask);
    if k.adj[idx] & in_mask == 0 {
        rec_indep(k, idx + 1, in_mask | bit, out_mask, best_val, best_mask);
    }
}

struct CoverSearch<'a> {
    k: &'a MaskView,
    edges: Vec<(usize, usize)>,
    best_val: i64,
    best_mask: u64,
}

/// Minimum vertex cover. The lower bound adds the vertices already forced
/// in (neighbours of excluded vertices) plus a greedy matching on the
/// untouched part.
pub(super) fn vertex_cover(g: &Graph) -> (i64, VertexSet) {
    let k = MaskView::new(g);
    let mut search = CoverSearch {
        k: &k,
        edges: g.edges().to_vec(),
        best_val: k.n as i64 + 1,
        best_mask: k.full,
    };
    rec_cover(&mut search, 0, 0, 0);
    (search.best_val, k.set(search.best_mask))
}

fn rec_cover(s: &mut CoverSearch, idx: usize, in_mask: u64, out_mask: u64) {
    let k = s.k;
    let und = k.full & !in_mask & !out_mask;
    let mut forced = 0u64;
    for w in bits(und) {
        if k.adj[w] & out_mask != 0 {
            forced |= 1 << w;
        }
    }
    let free = und & !forced;
    let mut matched = 0u64;
    let mut matching = 0i64;
    for &(u, v) in &s.edges {
        let pair = 1u64 << u | 1u64 << v;
        if pair & free == pair && pair & matched == 0 {
            matched |= pair;
            matching += 1;
        }
    }
    let lb = forced.count_ones() as i64 + matching;
    if in_mask.count_ones() as i64 + lb >= s.best_val {
        return;
    }
    if idx == k.n {
        debug_assert!(k.is_vertex_cover(in_mask));
        s.best_val = in_mask.count_ones() as i64;
        s.best_mask = in_mask;
        return;
    }
    let bit = 1u64 << idx;
    if k.adj[idx] & out_mask == 0 {
        rec_cover(s, idx + 1, in_mask, out_mask | bit);
    }
    rec_cover(s, idx + 1, in_mask | bit, out_mask);
}

struct WeightSearch<'a> {
    k: &'a MaskView,
    assignment: Vec<u8>,
    best_val: i64,
    best: Vec<u8>,
}

/// Minimum Roman dominating function: every zero-weight vertex needs a
/// neighbour of weight two.
pub(super) fn roman_domination(g: &Graph) -> (i64, WeightFunction) {
    let k = MaskView::new(g);
    let n = k.n;
    let mut search = WeightSearch {
        k: &k,
        assignment: vec![0; n],
        best_val: n as i64 + 1,
        best: vec![1; n],
    };
    rec_roman(&mut search, 0, 0, 0, 0);
    let f = WeightFunction::new(search.best).expect("weights in range");
    (search.best_val, f)
}

fn rec_roman(s: &mut WeightSearch, idx: usize, cur: i64, two_mask: u64, pending: u64) {
    let k = s.k;
    let n = k.n;
    let und = if idx >= 64 {
        0
    } else {
        k.full & !((1u64 << idx) - 1)
    };
    let mut lb = 0;
    if pending != 0 {
        for u in bits(pending) {
            if k.adj[u] & und == 0 {
                return; // u can never gain a weight-two neighbour
            }
        }
        let mut max_cover = 0;
        for w in bits(und) {
            max_cover = max_cover.max((k.adj[w] & pending).count_ones());
        }
        lb = 2 * div_ceil_u32(pending.count_ones(), max_cover);
    }
    if cur + lb >= s.best_val {
        return;
    }
    if idx == n {
        debug_assert_eq!(pending, 0);
        s.best_val = cur;
        s.best = s.assignment.clone();
        return;
    }
    let bit = 1u64 << idx;

    s.assignment[idx] = 0;
    let newly_pending = if k.adj[idx] & two_mask == 0 { bit } else { 0 };
    rec_roman(s, idx + 1, cur, two_mask, pending | newly_pending);

    s.assignment[idx] = 1;
    rec_roman(s, idx + 1, cur + 1, two_mask, pending);

    s.assignment[idx] = 2;
    rec_roman(s, idx + 1, cur + 2, two_mask | bit, pending & !k.adj[idx]);
}

struct ItalianSearch<'a> {
    k: &'a MaskView,
    supplied: Vec<u8>,
    assignment: Vec<u8>,
    best_val: i64,
    best: Vec<u8>,
}

/// Minimum Italian dominating function: every zero-weight vertex must see
/// total weight at least two among its neighbours.
pub(super) fn italian_domination(g: &Graph) -> (i64, WeightFunction) {
    let k = MaskView::new(g);
    let n = k.n;
    let mut search = ItalianSearch {
        k: &k,
        supplied: vec![0; n],
        assignment: vec![0; n],
        best_val: n as i64 + 1,
        best: vec![1; n],
    };
    rec_italian(&mut search, 0, 0, 0);
    let f = WeightFunction::new(search.best).expect("weights in range");
    (search.best_val, f)
}

fn rec_italian(s: &mut ItalianSearch, idx: usize, cur: i64, pending: u64) {
    let k = s.k;
    let n = k.n;
    let und = if idx >= 64 {
        0
    } else {
        k.full & !((1u64 << idx) - 1)
    };
    let mut lb = 0;
    if pending != 0 {
        let mut demand = 0u32;
        for u in bits(pending) {
            let deficit = 2 - s.supplied[u].min(2) as u32;
            if 2 * (k.adj[u] & und).count_ones() < deficit {
                return; // u can never collect weight two
            }
            demand += deficit;
        }
        let mut max_supply = 0;
        for w in bits(und) {
            max_supply = max_supply.max((k.adj[w] & pending).count_ones());
        }
        lb = div_ceil_u32(demand, max_supply);
    }
    if cur + lb >= s.best_val {
        return;
    }
    if idx == n {
        debug_assert_eq!(pending, 0);
        s.best_val = cur;
        s.best = s.assignment.clone();
        return;
    }
    let bit = 1u64 << idx;
    for w in 0u8..=2 {
        s.assignment[idx] = w;
        let mut next_pending = pending;
        if w > 0 {
            for u in bits(k.adj[idx]) {
                s.supplied[u] += w;
                if next_pending & 1 << u != 0 && s.supplied[u] >= 2 {
                    next_pending &= !(1 << u);
                }
            }
        } else if s.supplied[idx] < 2 {
            next_pending |= bit;
        }
        rec_italian(s, idx + 1, cur + w as i64, next_pending);
        if w > 0 {
            for u in bits(k.adj[idx]) {
                s.supplied[u] -= w;
            }
        }
    }
}
