//! Cross-cutting invariants, checked by brute force on exhaustive small
//! corpora and by proptest on randomized ones.

use proptest::prelude::*;

use strongdiff_core::breakdown::{breakdown, external_private_neighborhood};
use strongdiff_core::families::{generate, FamilySpec};
use strongdiff_core::graph::{Graph, VertexSet};
use strongdiff_core::io::{parse_edgelist, parse_graph6, write_edgelist, write_graph6};
use strongdiff_core::solvers::{self, Invariant, SolverConfig};

/// Labeled graphs on exactly `n` vertices as edge subsets of the complete
/// graph, visiting every `stride`-th subset.
fn graphs_on(n: usize, stride: u64) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).step_by(stride as usize).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).expect("valid")
    })
}

/// Exhaustive through order 5, a deterministic sample at order 6.
fn small_graph_corpus() -> impl Iterator<Item = Graph> {
    (1..=5)
        .flat_map(|n| graphs_on(n, 1))
        .chain(graphs_on(6, 11))
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(move |mask| {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        VertexSet::from_indices(n, &members).expect("valid")
    })
}

/// Definitional external private neighbourhood: a per-candidate scan with
/// no shortcuts, used as the reference for the single-pass implementation.
fn epn_reference(g: &Graph, v: usize, d: &VertexSet) -> VertexSet {
    let mut out = VertexSet::empty(g.order());
    for u in 0..g.order() {
        if d.contains(u) {
            continue;
        }
        let down = g.open_neighborhood(u).unwrap().intersection(d);
        if down.len() == 1 && down.contains(v) {
            out.insert(u);
        }
    }
    out
}

/// Exhaustive check over every graph and every set up to order 6: the
/// one-pass breakdown agrees with the definitional scans, each external
/// vertex has at most one private owner, and the breakdown identities hold.
#[test]
fn breakdown_matches_definitions_exhaustively() {
    for g in small_graph_corpus() {
        let n = g.order();
        {
            for d in subsets(n) {
                let bd = breakdown(&g, &d);
                assert_eq!(bd.weak.union(&bd.strong), d);
                assert!(bd.weak.is_disjoint_from(&bd.strong));
                assert!(bd.external.is_disjoint_from(&d));
                assert_eq!(
                    bd.strong_differential,
                    bd.differential + bd.strong.len() as i64
                );
                assert!(bd.strong_differential >= bd.differential);
                assert_eq!(
                    bd.strong_differential == bd.differential,
                    bd.strong.is_empty()
                );

                let mut weak_expected = VertexSet::empty(n);
                let mut private_owners = 0usize;
                for v in d.iter() {
                    let epn = external_private_neighborhood(&g, v, &d).unwrap();
                    assert_eq!(epn, epn_reference(&g, v, &d));
                    assert!(epn.is_subset_of(&bd.external));
                    private_owners += epn.len();
                    if !epn.is_empty() {
                        weak_expected.insert(v);
                    }
                }
                assert_eq!(bd.weak, weak_expected);
                // each external vertex is privately owned by at most one member
                assert!(private_owners <= bd.external.len());
            }
        }
    }
}

/// Predicate chain on isolated-vertex-free graphs up to order 6:
/// 2-dominating implies semitotal dominating implies dominating, and with
/// minimum degree two every vertex cover is 2-dominating.
#[test]
fn predicate_chain_exhaustively() {
    for g in small_graph_corpus() {
        let n = g.order();
        {
            if g.has_isolated_vertex() {
                continue;
            }
            for s in subsets(n) {
                if g.is_2_dominating(&s) {
                    assert!(g.is_semitotal_dominating(&s).unwrap());
                }
                if g.is_semitotal_dominating(&s).unwrap() {
                    assert!(g.is_dominating(&s));
                }
                if g.min_degree() >= 2 && g.is_vertex_cover(&s) {
                    assert!(g.is_2_dominating(&s));
                }
            }
        }
    }
}

/// Corona formula over the families named for it, beyond the nine pairs the
/// acceptance suite pins: both differentials equal `n1 * (n2 - 1)`, and
/// coronas with a single-edge inner graph additionally attain the
/// half-cover and half-remainder bounds.
#[test]
fn corona_formulas() {
    let cfg = SolverConfig::default();
    for outer in ["path:1", "path:2", "path:3", "cycle:3", "path:4"] {
        for inner in ["complete:2", "path:3", "cycle:3"] {
            let spec = FamilySpec::Corona {
                outer: Box::new(FamilySpec::parse(outer).unwrap()),
                inner: Box::new(FamilySpec::parse(inner).unwrap()),
            };
            let g = generate(&spec).unwrap();
            let n1 = generate(&FamilySpec::parse(outer).unwrap())
                .unwrap()
                .order() as i64;
            let n2 = generate(&FamilySpec::parse(inner).unwrap())
                .unwrap()
                .order() as i64;
            let expected = n1 * (n2 - 1);
            let sd = solvers::strong_differential(&g, &cfg).unwrap().value;
            let diff = solvers::differential(&g, &cfg).unwrap().value;
            assert_eq!(sd, expected, "{spec}");
            assert_eq!(diff, expected, "{spec}");

            if inner == "complete:2" {
                let n = g.order() as i64;
                let gamma = solvers::domination_number(&g, &cfg).unwrap().value;
                let beta = solvers::vertex_cover_number(&g, &cfg).unwrap().value;
                assert_eq!(2 * sd, n - gamma, "{spec}");
                assert_eq!(2 * sd, beta, "{spec}");
            }
        }
    }
}

/// Leaf/support family members attain both ends of the sigma sandwich:
/// sd = differential = n - 2*domination = n - domination - sigma.
#[test]
fn family_g_formulas() {
    let cfg = SolverConfig::default();
    for leaves in [
        vec![2, 2],
        vec![2, 3],
        vec![3, 3],
        vec![2, 2, 2],
        vec![4, 2],
    ] {
        let g = generate(&FamilySpec::FamilyG {
            leaves_per_support: leaves.clone(),
        })
        .unwrap();
        assert!(strongdiff_core::families::is_family_g(&g));
        let n = g.order() as i64;
        let sd = solvers::strong_differential(&g, &cfg).unwrap().value;
        let diff = solvers::differential(&g, &cfg).unwrap().value;
        let gamma = solvers::domination_number(&g, &cfg).unwrap().value;
        let sigma = g.sigma() as i64;
        assert_eq!(sd, diff, "{leaves:?}");
        assert_eq!(sd, n - 2 * gamma, "{leaves:?}");
        assert_eq!(sd, n - gamma - sigma, "{leaves:?}");
    }
}

proptest! {
    #[test]
    fn graph6_round_trip(n in 0usize..=20, mask: u64, salt: u64) {
        let g = generate(&FamilySpec::RandomGnp {
            n: n.max(1),
            p: (mask % 100) as f64 / 100.0,
            seed: salt,
        }).unwrap();
        let text = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edgelist_round_trip(n in 1usize..=15, seed: u64) {
        let g = generate(&FamilySpec::RandomGnp { n, p: 0.4, seed }).unwrap();
        let text = write_edgelist(&g);
        prop_assert_eq!(parse_edgelist(&text).unwrap(), g);
    }

    #[test]
    fn generated_families_satisfy_graph_invariants(kind in 0usize..6, a in 1usize..=5, b in 1usize..=4, seed: u64) {
        let spec = match kind {
            0 => FamilySpec::Path { n: a },
            1 => FamilySpec::Cycle { n: a + 2 },
            2 => FamilySpec::Star { leaves: a },
            3 => FamilySpec::CompleteBipartite { a, b },
            4 => FamilySpec::RandomTree { n: a + b, seed },
            _ => FamilySpec::Corona {
                outer: Box::new(FamilySpec::Path { n: a }),
                inner: Box::new(FamilySpec::Complete { n: b }),
            },
        };
        let g = generate(&spec).unwrap();
        // degree sum counts each edge twice; adjacency is symmetric
        let degree_sum: usize = (0..g.order()).map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(degree_sum, 2 * g.size());
        for &(u, v) in g.edges() {
            prop_assert!(u < v);
            prop_assert!(g.has_edge(u, v) && g.has_edge(v, u));
        }
    }

    #[test]
    fn gallai_identities_random(n in 1usize..=8, seed: u64) {
        let g = generate(&FamilySpec::RandomGnp { n, p: 0.4, seed }).unwrap();
        let cfg = SolverConfig::default();
        let n = n as i64;
        let sd = solvers::strong_differential(&g, &cfg).unwrap().value;
        let italian = solvers::italian_domination_number(&g, &cfg).unwrap().value;
        prop_assert_eq!(sd + italian, n);
        let diff = solvers::differential(&g, &cfg).unwrap().value;
        let roman = solvers::roman_domination_number(&g, &cfg).unwrap().value;
        prop_assert_eq!(diff + roman, n);
        let alpha = solvers::independence_number(&g, &cfg).unwrap().value;
        let beta = solvers::vertex_cover_number(&g, &cfg).unwrap().value;
        prop_assert_eq!(alpha + beta, n);
    }

    #[test]
    fn witnesses_revalidate_random(n in 1usize..=8, seed: u64) {
        let g = generate(&FamilySpec::RandomGnp { n, p: 0.35, seed }).unwrap();
        let cfg = SolverConfig::default();
        for inv in Invariant::ALL {
            if let Ok(result) = solvers::solve(&g, inv, &cfg) {
                prop_assert!(result.revalidate(&g), "{} witness fails", inv.id());
            }
        }
    }
}
