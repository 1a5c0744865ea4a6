//! Single-word bitmask view of a graph, shared by the searches, the oracles
//! and the exhaustive theorem scans. Valid for `n <= 64` only; the solver
//! entry points guard that.

use crate::graph::{Graph, VertexSet};

pub(crate) struct MaskView {
    pub n: usize,
    pub full: u64,
    pub adj: Vec<u64>,
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Bit-string order on masks: at the lowest differing vertex, the mask that
/// omits it is smaller.
pub(crate) fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a >> diff.trailing_zeros() & 1 == 0
}

impl MaskView {
    pub fn new(g: &Graph) -> MaskView {
        let adj = g
            .adjacency_masks()
            .expect("mask kernel requires order <= 64");
        let n = g.order();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        MaskView { n, full, adj }
    }

    pub fn set(&self, mask: u64) -> VertexSet {
        VertexSet::from_mask(self.n, mask)
    }

    pub fn neighborhood(&self, m: u64) -> u64 {
        bits(m).fold(0, |acc, v| acc | self.adj[v])
    }

    pub fn external(&self, m: u64) -> u64 {
        self.neighborhood(m) & !m
    }

    pub fn strong_differential(&self, m: u64) -> i64 {
        let ext = self.external(m);
        let mut weak = 0;
        for u in bits(ext) {
            let dominators = self.adj[u] & m;
            if dominators.count_ones() == 1 {
                weak |= dominators;
            }
        }
        ext.count_ones() as i64 - weak.count_ones() as i64
    }

    pub fn differential(&self, m: u64) -> i64 {
        self.external(m).count_ones() as i64 - m.count_ones() as i64
    }

    pub fn is_dominating(&self, m: u64) -> bool {
        m | self.neighborhood(m) == self.full
    }

    pub fn is_two_dominating(&self, m: u64) -> bool {
        bits(self.full & !m).all(|v| (self.adj[v] & m).count_ones() >= 2)
    }

    pub fn is_independent(&self, m: u64) -> bool {
        bits(m).all(|v| self.adj[v] & m == 0)
    }

    pub fn is_vertex_cover(&self, m: u64) -> bool {
        // Complement independent <=> every edge touches m.
        self.is_independent(self.full & !m)
    }

    /// Distance-one-or-two balls around every vertex, excluding the vertex.
    pub fn dist2_balls(&self) -> Vec<u64> {
        (0..self.n)
            .map(|v| {
                let mut ball = self.adj[v];
                for u in bits(self.adj[v]) {
                    ball |= self.adj[u];
                }
                ball & !(1 << v)
            })
            .collect()
    }

    pub fn is_semitotal_dominating(&self, m: u64, balls: &[u64]) -> bool {
        self.is_dominating(m) && bits(m).all(|v| balls[v] & m != 0)
    }
}
