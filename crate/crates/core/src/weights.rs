//! Weight functions `V -> {0, 1, 2}` and the Roman / Italian domination
//! conditions.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A weight assignment with entries in `{0, 1, 2}`, identified with the
/// partition `(V0, V1, V2)` it induces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightFunction {
    weights: Vec<u8>,
}

impl WeightFunction {
    pub fn new(weights: Vec<u8>) -> Result<Self> {
        if let Some(&w) = weights.iter().find(|&&w| w > 2) {
            return Err(Error::InvalidArgument(format!(
                "weight {w} outside {{0,1,2}}"
            )));
        }
        Ok(WeightFunction { weights })
    }

    pub fn constant(n: usize, w: u8) -> Result<Self> {
        WeightFunction::new(vec![w; n])
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u8] {
        &self.weights
    }

    /// Total weight `|V1| + 2|V2|`.
    pub fn weight(&self) -> usize {
        self.weights.iter().map(|&w| w as usize).sum()
    }

    /// The level set `Vi = {v : f(v) = i}`.
    pub fn level_set(&self, i: u8) -> VertexSet {
        let mut set = VertexSet::empty(self.weights.len());
        for (v, &w) in self.weights.iter().enumerate() {
            if w == i {
                set.insert(v);
            }
        }
        set
    }

    /// Lexicographic comparison of the weight strings, the witness tie-break
    /// order for function-valued invariants.
    pub fn lex_cmp(&self, other: &WeightFunction) -> std::cmp::Ordering {
        self.weights.cmp(&other.weights)
    }
}

fn check_len(g: &Graph, f: &WeightFunction) -> Result<()> {
    if f.len() != g.order() {
        return Err(Error::InvalidArgument(format!(
            "weight function has length {} but the graph has order {}",
            f.len(),
            g.order()
        )));
    }
    Ok(())
}

/// Italian domination condition: every vertex of weight zero sees total
/// weight at least two among its neighbours.
pub fn is_idf(g: &Graph, f: &WeightFunction) -> Result<bool> {
    check_len(g, f)?;
    for v in 0..g.order() {
        if f.get(v) != 0 {
            continue;
        }
        let mut seen = 0u32;
        for u in g.open_neighborhood(v)?.iter() {
            seen += f.get(u) as u32;
            if seen >= 2 {
                break;
            }
        }
        if seen < 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Roman domination condition: every vertex of weight zero has a neighbour
/// of weight two.
pub fn is_rdf(g: &Graph, f: &WeightFunction) -> Result<bool> {
    check_len(g, f)?;
    for v in 0..g.order() {
        if f.get(v) != 0 {
            continue;
        }
        let covered = g.open_neighborhood(v)?.iter().any(|u| f.get(u) == 2);
        if !covered {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    #[test]
    fn all_ones_is_idf() {
        let g = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        let f = WeightFunction::constant(5, 1).unwrap();
        assert!(is_idf(&g, &f).unwrap());
        assert_eq!(f.weight(), 5);
    }

    #[test]
    fn p3_one_zero_one() {
        let g = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let f = WeightFunction::new(vec![1, 0, 1]).unwrap();
        assert!(is_idf(&g, &f).unwrap());
        assert!(!is_rdf(&g, &f).unwrap());
    }

    #[test]
    fn c4_single_two_is_not_idf() {
        let g = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let f = WeightFunction::new(vec![2, 0, 0, 0]).unwrap();
        assert!(!is_idf(&g, &f).unwrap());
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let g = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let f = WeightFunction::new(vec![1, 1]).unwrap();
        assert!(matches!(is_idf(&g, &f), Err(Error::InvalidArgument(_))));
        assert!(matches!(is_rdf(&g, &f), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn weights_above_two_rejected() {
        assert!(WeightFunction::new(vec![0, 3]).is_err());
    }

    #[test]
    fn level_sets_partition() {
        let f = WeightFunction::new(vec![0, 1, 2, 1]).unwrap();
        assert_eq!(f.level_set(0).to_vec(), vec![0]);
        assert_eq!(f.level_set(1).to_vec(), vec![1, 3]);
        assert_eq!(f.level_set(2).to_vec(), vec![2]);
        assert_eq!(f.weight(), 4);
    }
}
