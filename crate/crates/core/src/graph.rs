//! Immutable simple undirected graphs and bitset vertex subsets.
//!
//! Vertices are dense indices `0..n`. A [`VertexSet`] is tied to the order of
//! the graph it was created for and is stored as a word array, so subset
//! manipulation inside the solvers is branch-free word arithmetic.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of the vertices `0..universe` of some graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty subset of a vertex range of size `universe`.
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    /// The full vertex range `0..universe`.
    pub fn full(universe: usize) -> Self {
        let mut set = VertexSet::empty(universe);
        for v in 0..universe {
            set.insert(v);
        }
        set
    }

    pub fn from_indices(universe: usize, members: &[usize]) -> Result<Self> {
        let mut set = VertexSet::empty(universe);
        for &v in members {
            if v >= universe {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    order: universe,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Builds a one-word set from a bitmask; only valid for `universe <= 64`.
    pub(crate) fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= WORD_BITS);
        let mut words = vec![0; words_for(universe)];
        if !words.is_empty() {
            words[0] = mask;
        }
        VertexSet { universe, words }
    }

    pub(crate) fn as_mask(&self) -> u64 {
        debug_assert!(self.universe <= WORD_BITS);
        self.words.first().copied().unwrap_or(0)
    }

    /// Size of the vertex range this set lives in (not the member count).
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD_BITS + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Compares two sets as bit strings indexed by vertex: at the first
    /// vertex where they differ, the set that omits it is the smaller one.
    /// This is the tie-break order used for all solver witnesses.
    pub fn lex_cmp(&self, other: &VertexSet) -> std::cmp::Ordering {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = diff.trailing_zeros();
                return if a >> bit & 1 == 0 {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                };
            }
        }
        std::cmp::Ordering::Equal
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| f(a, b))
            .collect();
        let mut out = VertexSet {
            universe: self.universe,
            words,
        };
        out.trim();
        out
    }

    fn trim(&mut self) {
        let tail = self.universe % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        if self.universe == 0 {
            self.words.clear();
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
    /// and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![VertexSet::empty(n); n];
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex {
                    vertex: u,
                    order: n,
                });
            }
            if v >= n {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    order: n,
                });
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            if adj[u].contains(v) {
                return Err(Error::InvalidArgument(format!("duplicate edge {u}-{v}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        Ok(Graph {
            n,
            adj,
            edges: canon,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.adj[v].len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.adj[v].len()).min().unwrap_or(0)
    }

    /// The open neighbourhood of `v`: all vertices adjacent to `v`.
    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].clone())
    }

    /// The closed neighbourhood of `v`: `N(v)` together with `v` itself.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        let mut set = self.open_neighborhood(v)?;
        set.insert(v);
        Ok(set)
    }

    /// Vertices outside `s` that have at least one neighbour in `s`
    /// (the boundary of `s`).
    pub fn external_neighborhood(&self, s: &VertexSet) -> VertexSet {
        self.check_set(s);
        let mut reach = VertexSet::empty(self.n);
        for v in s.iter() {
            reach = reach.union(&self.adj[v]);
        }
        reach.difference(s)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::InvalidVertex {
                vertex: v,
                order: self.n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_set(&self, s: &VertexSet) {
        assert_eq!(
            s.universe(),
            self.n,
            "vertex set universe does not match graph order"
        );
    }

    /// Adjacency rows as one-word bitmasks; only available for `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > WORD_BITS {
            return None;
        }
        Some((0..self.n).map(|v| self.adj[v].as_mask()).collect())
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.adj[v].is_empty())
    }

    /// BFS distances from `src` (`None` for unreachable vertices).
    pub fn distances(&self, src: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(src)?;
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for u in self.adj[v].iter() {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        Ok(dist)
    }

    /// Eccentricity of `v` within its connected component.
    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        let dist = self.distances(v)?;
        Ok(dist.into_iter().flatten().max().unwrap_or(0))
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let dist = self.distances(v).expect("vertex in range");
            let mut comp = VertexSet::empty(self.n);
            for (u, d) in dist.iter().enumerate() {
                if d.is_some() {
                    comp.insert(u);
                    seen.insert(u);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> VertexSet {
        let mut set = VertexSet::empty(self.n);
        for v in 0..self.n {
            if self.adj[v].len() == 1 {
                set.insert(v);
            }
        }
        set
    }

    /// Vertices adjacent to at least one leaf.
    pub fn supports(&self) -> VertexSet {
        let leaves = self.leaves();
        let mut set = VertexSet::empty(self.n);
        for v in 0..self.n {
            if !self.adj[v].is_disjoint_from(&leaves) {
                set.insert(v);
            }
        }
        set
    }

    /// Number of support vertices adjacent to more than one leaf.
    pub fn sigma(&self) -> usize {
        let leaves = self.leaves();
        (0..self.n)
            .filter(|&v| self.adj[v].intersection(&leaves).len() >= 2)
            .count()
    }

    /// Leaf neighbours of `v`.
    pub fn leaf_neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].intersection(&self.leaves()))
    }

    /// Neighbours of `v` that have degree exactly two.
    pub fn degree_two_neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut set = VertexSet::empty(self.n);
        for u in self.adj[v].iter() {
            if self.adj[u].len() == 2 {
                set.insert(u);
            }
        }
        Ok(set)
    }

    /// Every vertex outside `s` has a neighbour in `s`.
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        self.check_set(s);
        (0..self.n).all(|v| s.contains(v) || !self.adj[v].is_disjoint_from(s))
    }

    /// Every vertex outside `s` has at least two neighbours in `s`.
    pub fn is_2_dominating(&self, s: &VertexSet) -> bool {
        self.check_set(s);
        (0..self.n).all(|v| s.contains(v) || self.adj[v].intersection(s).len() >= 2)
    }

    /// Dominating, and every member of `s` is within distance two of another
    /// member. Undefined on graphs with isolated vertices.
    pub fn is_semitotal_dominating(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s);
        if self.has_isolated_vertex() {
            return Err(Error::UndefinedInvariant(
                "semitotal domination requires a graph without isolated vertices".into(),
            ));
        }
        if !self.is_dominating(s) {
            return Ok(false);
        }
        for v in s.iter() {
            let mut ball = self.adj[v].clone();
            for u in self.adj[v].iter() {
                ball = ball.union(&self.adj[u]);
            }
            ball.remove(v);
            if ball.is_disjoint_from(s) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every edge has at least one endpoint in `s`.
    pub fn is_vertex_cover(&self, s: &VertexSet) -> bool {
        self.check_set(s);
        self.edges
            .iter()
            .all(|&(u, v)| s.contains(u) || s.contains(v))
    }

    /// No two members of `s` are adjacent.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        self.check_set(s);
        s.iter().all(|v| self.adj[v].is_disjoint_from(s))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn path(n: usize) -> Graph {
        generate(&FamilySpec::Path { n }).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, &[(0, 0)]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::InvalidVertex {
                vertex: 2,
                order: 2
            })
        ));
    }

    #[test]
    fn adjacency_is_symmetric_and_degree_sum_counts_edges() {
        let g = generate(&FamilySpec::FigureA).unwrap();
        for u in 0..g.order() {
            for v in 0..g.order() {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        let degree_sum: usize = (0..g.order()).map(|v| g.degree(v).unwrap()).sum();
        assert_eq!(degree_sum, 2 * g.size());
    }

    #[test]
    fn open_neighborhood_path_center() {
        let g = path(3);
        let nb = g.open_neighborhood(1).unwrap();
        assert_eq!(nb.to_vec(), vec![0, 2]);
        assert!(!nb.contains(1));
    }

    #[test]
    fn open_neighborhood_isolated_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert!(g.open_neighborhood(0).unwrap().is_empty());
        assert!(matches!(
            g.open_neighborhood(1),
            Err(Error::InvalidVertex { .. })
        ));
    }

    #[test]
    fn external_neighborhood_trivial_cases() {
        let g = path(4);
        assert!(g.external_neighborhood(&VertexSet::empty(4)).is_empty());
        assert!(g.external_neighborhood(&VertexSet::full(4)).is_empty());
    }

    #[test]
    fn predicates_on_c4() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let s = VertexSet::from_indices(4, &[0, 2]).unwrap();
        assert!(c4.is_dominating(&s));
        assert!(c4.is_2_dominating(&s));
    }

    #[test]
    fn semitotal_on_p4_and_isolated_error() {
        let p4 = path(4);
        let s = VertexSet::from_indices(4, &[1, 2]).unwrap();
        assert!(p4.is_semitotal_dominating(&s).unwrap());

        let g = Graph::new(2, &[]).unwrap();
        assert!(matches!(
            g.is_semitotal_dominating(&VertexSet::full(2)),
            Err(Error::UndefinedInvariant(_))
        ));
    }

    #[test]
    fn leaves_supports_sigma() {
        let star = generate(&FamilySpec::Star { leaves: 3 }).unwrap();
        assert_eq!(star.leaves().len(), 3);
        assert_eq!(star.supports().to_vec(), vec![0]);
        assert_eq!(star.sigma(), 1);

        let p4 = path(4);
        assert_eq!(p4.sigma(), 0);
    }

    #[test]
    fn subdivided_star_structure() {
        let g = generate(&FamilySpec::SubdividedStar { arms: 4 }).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.sigma(), 1);
        assert_eq!(g.eccentricity(0).unwrap(), 2);
    }

    #[test]
    fn eccentricity_is_per_component() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.eccentricity(0).unwrap(), 2);
        assert_eq!(g.eccentricity(3).unwrap(), 1);
        assert_eq!(g.components().len(), 2);
        assert!(!g.is_connected());
    }

    #[test]
    fn lex_order_prefers_omitting_early_vertices() {
        let a = VertexSet::from_indices(3, &[1]).unwrap();
        let b = VertexSet::from_indices(3, &[0, 2]).unwrap();
        assert_eq!(a.lex_cmp(&b), std::cmp::Ordering::Less);
        assert_eq!(b.lex_cmp(&a), std::cmp::Ordering::Greater);
        assert_eq!(a.lex_cmp(&a), std::cmp::Ordering::Equal);
    }

    #[test]
    fn vertex_set_ops() {
        let a = VertexSet::from_indices(70, &[0, 63, 64, 69]).unwrap();
        let b = VertexSet::from_indices(70, &[63, 64]).unwrap();
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.intersection(&b).to_vec(), vec![63, 64]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 69]);
        assert!(b.is_subset_of(&a));
        assert_eq!(a.complement().len(), 66);
    }
}
