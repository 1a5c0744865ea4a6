//! The branch-and-bound witness must equal the oracle witness for every
//! invariant whose search space is unrestricted (all but the strong
//! differential), since both claim the lexicographically smallest optimum.
//! Any divergence means one of the two searches is unsound.
use strongdiff_core::families::{enumerate_trees, generate, FamilySpec};
use strongdiff_core::solvers::{self, oracle, Invariant, SolverConfig};

#[test]
fn stress_witness_lex_minimality() {
    let cfg = SolverConfig::default();
    let mut graphs = Vec::new();
    let ps = [0.1, 0.25, 0.4, 0.55, 0.7, 0.85];
    for i in 0..1500usize {
        graphs.push(
            generate(&FamilySpec::RandomGnp {
                n: 1 + i % 10,
                p: ps[i % ps.len()],
                seed: 90_000 + i as u64,
            })
            .unwrap(),
        );
    }
    for n in 1..=8 {
        graphs.extend(enumerate_trees(n).unwrap());
    }
    for spec in [
        "figure-a",
        "figure-b",
        "bipartite:2,5",
        "complete:7",
        "subdivided-star:5",
    ] {
        graphs.push(generate(&FamilySpec::parse(spec).unwrap()).unwrap());
    }
    let unrestricted = [
        Invariant::Differential,
        Invariant::Domination,
        Invariant::TwoDomination,
        Invariant::SemitotalDomination,
        Invariant::RomanDomination,
        Invariant::ItalianDomination,
        Invariant::Independence,
        Invariant::VertexCover,
    ];
    let mut compared = 0usize;
    for g in &graphs {
        if g.order() > 12 {
            continue; // weight oracles cap at 12
        }
        for inv in unrestricted {
            match (solvers::solve(g, inv, &cfg), oracle::solve(g, inv)) {
                (Ok(a), Ok(b)) => {
                    assert_eq!(a.value, b.value, "{} value on {g:?}", inv.id());
                    assert_eq!(a.witness, b.witness, "{} witness on {g:?}", inv.id());
                    compared += 1;
                }
                (Err(_), Err(_)) => {}
                (a, b) => panic!("mismatch {}: {a:?} vs {b:?}", inv.id()),
            }
        }
        // strong differential: value must agree; the primary witness is
        // additionally dominating
        if g.order() <= 16 {
            let a = solvers::strong_differential(g, &cfg).unwrap();
            let b = oracle::strong_differential(g).unwrap();
            assert_eq!(a.value, b.value);
            compared += 1;
        }
    }
    println!("compared {compared} solver/oracle pairs");
    assert!(compared > 10_000);
}

/// Oracle equivalence over every connected labeled graph on at most six
/// vertices, all nine invariants.
#[test]
fn stress_exhaustive_small_connected_equivalence() {
    use strongdiff_core::graph::Graph;
    let cfg = SolverConfig::default();
    let mut examined = 0usize;
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            examined += 1;
            for inv in Invariant::ALL {
                match (solvers::solve(&g, inv, &cfg), oracle::solve(&g, inv)) {
                    (Ok(a), Ok(b)) => {
                        assert_eq!(a.value, b.value, "{} on {g:?}", inv.id());
                        if inv != Invariant::StrongDifferential {
                            assert_eq!(a.witness, b.witness, "{} witness on {g:?}", inv.id());
                        }
                    }
                    (Err(a), Err(b)) => assert_eq!(a, b),
                    (a, b) => panic!("mismatch for {} on {g:?}: {a:?} vs {b:?}", inv.id()),
                }
            }
        }
    }
    println!("examined {examined} connected labeled graphs");
    assert!(examined > 25_000);
}
