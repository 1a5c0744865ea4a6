//! Labeled trees: Prüfer decoding, uniform random trees, exhaustive
//! enumeration, and a canonical form for isomorphism dedup.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::rng::SplitMix64;

/// Decodes a Prüfer sequence of length `n - 2` into the edge list of a
/// labeled tree on `n` vertices.
pub(super) fn prufer_to_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    debug_assert!(n >= 2 && seq.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // `ptr`/`leaf` walk keeps the smallest current leaf without a heap.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &a in seq {
        edges.push((leaf, a));
        degree[a] -= 1;
        if degree[a] == 1 && a < ptr {
            leaf = a;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Uniform random labeled tree on `n` vertices via a random Prüfer
/// sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSpec("random tree needs n >= 1".into()));
    }
    if n == 1 {
        return Graph::new(1, &[]);
    }
    let mut rng = SplitMix64::new(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    Graph::new(n, &prufer_to_edges(n, &seq))
}

/// Streams labeled trees on `n` vertices by walking all `n^(n-2)` Prüfer
/// sequences. For `n <= 9` the stream is de-duplicated up to isomorphism
/// by canonical form; beyond that every labeled tree is yielded.
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > 12 {
        return Err(Error::InvalidSpec(format!(
            "tree enumeration supports 1 <= n <= 12, got {n}"
        )));
    }
    let dedup = n <= 9;
    let mut seen = std::collections::HashSet::new();
    let mut scratch = TreeScratch::new(n);
    let mut odometer: Option<Vec<usize>> = Some(vec![0; n.saturating_sub(2)]);
    let iter = std::iter::from_fn(move || {
        loop {
            let seq = odometer.take()?;
            let edges = if n == 1 {
                Vec::new()
            } else {
                prufer_to_edges(n, &seq)
            };
            // advance the odometer (stays None once wrapped)
            odometer = {
                let mut next = seq;
                let mut pos = next.len();
                loop {
                    if pos == 0 {
                        break None;
                    }
                    pos -= 1;
                    next[pos] += 1;
                    if next[pos] < n {
                        break Some(next);
                    }
                    next[pos] = 0;
                }
            };
            if !dedup || seen.insert(scratch.canonical_code(n, &edges)) {
                return Some(Graph::new(n, &edges).expect("valid tree"));
            }
        }
    });
    Ok(iter)
}

/// Canonical byte string for a tree, invariant under relabeling: the
/// rooted shape code taken at the tree's center (the smaller code of the
/// two rootings when the tree is bicentral).
pub fn canonical_tree_code(g: &Graph) -> Vec<u8> {
    assert!(g.is_tree(), "canonical code is defined for trees");
    TreeScratch::new(g.order()).canonical_code(g.order(), g.edges())
}

/// Reusable buffers for canonicalizing a stream of same-order trees.
struct TreeScratch {
    adj: Vec<Vec<usize>>,
    degree: Vec<usize>,
    removed: Vec<bool>,
}

impl TreeScratch {
    fn new(n: usize) -> TreeScratch {
        TreeScratch {
            adj: vec![Vec::new(); n],
            degree: vec![0; n],
            removed: vec![false; n],
        }
    }

    fn canonical_code(&mut self, n: usize, edges: &[(usize, usize)]) -> Vec<u8> {
        for v in 0..n {
            self.adj[v].clear();
            self.degree[v] = 0;
            self.removed[v] = false;
        }
        for &(u, v) in edges {
            self.adj[u].push(v);
            self.adj[v].push(u);
            self.degree[u] += 1;
            self.degree[v] += 1;
        }
        let mut best: Option<Vec<u8>> = None;
        for c in self.centers(n) {
            let code = self.rooted_code(c, usize::MAX);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        best.expect("tree has a center")
    }

    /// The one or two middle vertices left by repeatedly peeling leaves.
    fn centers(&mut self, n: usize) -> Vec<usize> {
        if n <= 2 {
            return (0..n).collect();
        }
        let mut layer: Vec<usize> = (0..n).filter(|&v| self.degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            let mut next = Vec::new();
            for &v in &layer {
                self.removed[v] = true;
                remaining -= 1;
                for i in 0..self.adj[v].len() {
                    let u = self.adj[v][i];
                    if !self.removed[u] {
                        self.degree[u] -= 1;
                        if self.degree[u] == 1 {
                            next.push(u);
                        }
                    }
                }
            }
            layer = next;
        }
        (0..n).filter(|&v| !self.removed[v]).collect()
    }

    /// Classic bracket encoding of the tree rooted at `root`, with child
    /// codes sorted at every level.
    fn rooted_code(&self, v: usize, parent: usize) -> Vec<u8> {
        let mut child_codes: Vec<Vec<u8>> = self.adj[v]
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| self.rooted_code(u, v))
            .collect();
        child_codes.sort();
        let mut code = Vec::with_capacity(2 + child_codes.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in child_codes {
            code.extend(c);
        }
        code.push(b')');
        code
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prufer_decode_known_sequence() {
        // sequence (3, 3, 3, 4) on 6 vertices: a spider rooted at 3
        let edges = prufer_to_edges(6, &[3, 3, 3, 4]);
        let g = Graph::new(6, &edges).unwrap();
        assert!(g.is_tree());
        assert_eq!(g.degree(3).unwrap(), 4);
    }

    #[test]
    fn random_tree_shapes() {
        assert_eq!(random_tree(1, 9).unwrap().order(), 1);
        for seed in 0..20 {
            let g = random_tree(8, seed).unwrap();
            assert!(g.is_tree());
        }
    }

    #[test]
    fn random_tree_is_reproducible() {
        assert_eq!(random_tree(9, 1234).unwrap(), random_tree(9, 1234).unwrap());
    }

    #[test]
    fn enumeration_matches_free_tree_counts() {
        // number of unlabeled trees on 1..=9 vertices
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23, 47];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_trees(n).unwrap().count(), count, "n = {n}");
        }
    }

    #[test]
    fn enumeration_rejects_large_n() {
        assert!(enumerate_trees(13).is_err());
        assert!(enumerate_trees(0).is_err());
    }

    #[test]
    fn canonical_code_separates_p4_from_star() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_tree_code(&p4), canonical_tree_code(&star));

        let p4_shuffled = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_tree_code(&p4), canonical_tree_code(&p4_shuffled));
    }
}
