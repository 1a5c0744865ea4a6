//! The differential calculus of a vertex set: external neighbourhood,
//! external private neighbours, weak/strong defender split and the two
//! differential values.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The full differential analysis of one set `D`.
///
/// `weak` holds the members of `D` with at least one external private
/// neighbour, `strong` the rest. The values satisfy
/// `strong_differential = differential + |strong|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialBreakdown {
    pub set: VertexSet,
    pub external: VertexSet,
    pub weak: VertexSet,
    pub strong: VertexSet,
    pub differential: i64,
    pub strong_differential: i64,
}

/// Vertices outside `d` whose only neighbour inside `d` is `v`.
pub fn external_private_neighborhood(g: &Graph, v: usize, d: &VertexSet) -> Result<VertexSet> {
    g.check_vertex(v)?;
    g.check_set(d);
    if !d.contains(v) {
        return Err(Error::InvalidArgument(format!(
            "vertex {v} is not a member of the set"
        )));
    }
    let mut out = VertexSet::empty(g.order());
    for u in g.external_neighborhood(d).iter() {
        let dominators = g.open_neighborhood(u)?.intersection(d);
        if dominators.len() == 1 && dominators.contains(v) {
            out.insert(u);
        }
    }
    Ok(out)
}

/// Computes the breakdown of `d` in one pass over its boundary: each external
/// vertex with a unique dominator marks that dominator as weak.
pub fn breakdown(g: &Graph, d: &VertexSet) -> DifferentialBreakdown {
    g.check_set(d);
    let external = g.external_neighborhood(d);
    let mut weak = VertexSet::empty(g.order());
    for u in external.iter() {
        let dominators = g
            .open_neighborhood(u)
            .expect("external vertex in range")
            .intersection(d);
        if dominators.len() == 1 {
            weak.insert(dominators.min().expect("nonempty"));
        }
    }
    let strong = d.difference(&weak);
    let differential = external.len() as i64 - d.len() as i64;
    let strong_differential = external.len() as i64 - weak.len() as i64;
    DifferentialBreakdown {
        set: d.clone(),
        external,
        weak,
        strong,
        differential,
        strong_differential,
    }
}

impl DifferentialBreakdown {
    /// Re-checks the structural invariants of the breakdown against its graph.
    pub fn is_consistent(&self, g: &Graph) -> bool {
        let recomputed = breakdown(g, &self.set);
        recomputed == *self
            && self.weak.union(&self.strong) == self.set
            && self.weak.is_disjoint_from(&self.strong)
            && self.external.is_disjoint_from(&self.set)
            && self.differential == self.external.len() as i64 - self.set.len() as i64
            && self.strong_differential == self.differential + self.strong.len() as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{figure_a_index, generate, FamilySpec};

    fn figure_a_set(g: &Graph, labels: &[&str]) -> VertexSet {
        let ids: Vec<usize> = labels.iter().map(|l| figure_a_index(l).unwrap()).collect();
        VertexSet::from_indices(g.order(), &ids).unwrap()
    }

    #[test]
    fn epn_star_center_owns_all_leaves() {
        let star = generate(&FamilySpec::Star { leaves: 3 }).unwrap();
        let d = VertexSet::from_indices(4, &[0]).unwrap();
        let epn = external_private_neighborhood(&star, 0, &d).unwrap();
        assert_eq!(epn.to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn epn_c4_double_domination() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let d = VertexSet::from_indices(4, &[0, 2]).unwrap();
        assert!(external_private_neighborhood(&c4, 0, &d)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn epn_requires_membership() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let d = VertexSet::from_indices(4, &[0]).unwrap();
        assert!(matches!(
            external_private_neighborhood(&c4, 1, &d),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn figure_a_colored_set() {
        let g = generate(&FamilySpec::FigureA).unwrap();
        let d = figure_a_set(&g, &["a1", "b1", "b3", "c1", "c3"]);

        let gray = figure_a_index("a1").unwrap();
        assert_eq!(g.open_neighborhood(gray).unwrap().len(), 4);
        assert_eq!(g.external_neighborhood(&d).len(), 9);
        for black in ["b1", "b3", "c1", "c3"] {
            let v = figure_a_index(black).unwrap();
            assert!(external_private_neighborhood(&g, v, &d).unwrap().is_empty());
        }

        let bd = breakdown(&g, &d);
        assert_eq!(bd.weak.to_vec(), vec![gray]);
        assert_eq!(bd.strong.len(), 4);
        assert_eq!(bd.strong_differential, 8);
        assert!(bd.is_consistent(&g));
    }

    #[test]
    fn breakdown_of_empty_set_is_zero() {
        let g = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        let bd = breakdown(&g, &VertexSet::empty(5));
        assert!(bd.external.is_empty());
        assert!(bd.weak.is_empty());
        assert_eq!(bd.differential, 0);
        assert_eq!(bd.strong_differential, 0);
    }

    #[test]
    fn breakdown_star_center_is_weak() {
        let star = generate(&FamilySpec::Star { leaves: 4 }).unwrap();
        let d = VertexSet::from_indices(5, &[0]).unwrap();
        let bd = breakdown(&star, &d);
        assert_eq!(bd.weak.to_vec(), vec![0]);
        assert_eq!(bd.strong_differential, 3);
    }
}
