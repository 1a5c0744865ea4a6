use super::*;
use crate::families::{figure_a_index, generate, FamilySpec};

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn graph(text: &str) -> Graph {
    generate(&FamilySpec::parse(text).unwrap()).unwrap()
}

fn value(text: &str, inv: Invariant) -> i64 {
    solve(&graph(text), inv, &cfg()).unwrap().value
}

#[test]
fn strong_differential_anchor_values() {
    assert_eq!(value("figure-a", Invariant::StrongDifferential), 8);
    assert_eq!(value("figure-b", Invariant::StrongDifferential), 4);
    assert_eq!(value("path:9", Invariant::StrongDifferential), 4);
    assert_eq!(value("path:2", Invariant::StrongDifferential), 0);
    assert_eq!(value("subdivided-star:4", Invariant::StrongDifferential), 3);
    assert_eq!(value("cycle:3", Invariant::StrongDifferential), 1);
    assert_eq!(value("path:1", Invariant::StrongDifferential), 0);
}

#[test]
fn strong_differential_witness_is_dominating() {
    for text in [
        "figure-a",
        "figure-b",
        "path:9",
        "star:4",
        "gnp:n=9,p=0.4,seed=3",
    ] {
        let g = graph(text);
        let r = strong_differential(&g, &cfg()).unwrap();
        assert!(g.is_dominating(r.witness.as_set().unwrap()), "{text}");
        assert!(r.revalidate(&g), "{text}");
    }
}

#[test]
fn oracle_anchor_values() {
    assert_eq!(
        oracle::strong_differential(&graph("figure-b"))
            .unwrap()
            .value,
        4
    );
    assert_eq!(
        oracle::strong_differential(&graph("cycle:3"))
            .unwrap()
            .value,
        1
    );
    assert_eq!(
        oracle::strong_differential(&graph("path:1")).unwrap().value,
        0
    );
}

#[test]
fn differential_anchor_values() {
    assert_eq!(value("path:9", Invariant::Differential), 3);
    assert_eq!(value("star:4", Invariant::Differential), 3);
    // all four subsets of K2 give at most zero
    assert_eq!(value("path:2", Invariant::Differential), 0);
}

#[test]
fn domination_family_values() {
    let b = graph("figure-b");
    assert_eq!(domination_number(&b, &cfg()).unwrap().value, 2);
    assert_eq!(two_domination_number(&b, &cfg()).unwrap().value, 4);
    assert_eq!(semitotal_domination_number(&b, &cfg()).unwrap().value, 2);
    assert_eq!(independence_number(&b, &cfg()).unwrap().value, 4);

    let a = graph("figure-a");
    assert_eq!(semitotal_domination_number(&a, &cfg()).unwrap().value, 6);

    let k6 = graph("complete:6");
    assert_eq!(independence_number(&k6, &cfg()).unwrap().value, 1);
    assert_eq!(vertex_cover_number(&k6, &cfg()).unwrap().value, 5);
    assert_eq!(domination_number(&k6, &cfg()).unwrap().value, 1);
}

#[test]
fn italian_and_roman_values() {
    assert_eq!(value("path:3", Invariant::ItalianDomination), 2);
    assert_eq!(value("cycle:4", Invariant::ItalianDomination), 2);
    // order minus the strong differential of the figure graph
    assert_eq!(value("figure-a", Invariant::ItalianDomination), 6);
    assert_eq!(value("path:9", Invariant::RomanDomination), 6);
}

#[test]
fn italian_witness_on_p3_is_lex_smallest() {
    let g = graph("path:3");
    let r = italian_domination_number(&g, &cfg()).unwrap();
    assert_eq!(r.witness.as_function().unwrap().weights(), &[0, 2, 0]);
    assert!(r.revalidate(&g));
}

#[test]
fn gallai_derived_results() {
    let a = graph("figure-a");
    let italian = gallai_derived(&a, Invariant::ItalianDomination, &cfg()).unwrap();
    assert_eq!(italian.value, 6);
    assert_eq!(italian.method, Method::GallaiDerived);
    let f = italian.witness.as_function().unwrap();
    assert_eq!(f.get(figure_a_index("a1").unwrap()), 2);
    for label in ["b1", "b3", "c1", "c3"] {
        assert_eq!(f.get(figure_a_index(label).unwrap()), 1);
    }
    assert!(italian.revalidate(&a));

    let p9 = graph("path:9");
    let roman = gallai_derived(&p9, Invariant::RomanDomination, &cfg()).unwrap();
    assert_eq!(roman.value, 6);
    assert!(roman.revalidate(&p9));
    assert_eq!(
        roman.value,
        roman_domination_number(&p9, &cfg()).unwrap().value
    );

    let b = graph("figure-b");
    let cover = gallai_derived(&b, Invariant::VertexCover, &cfg()).unwrap();
    assert_eq!(cover.value, 4);
    assert!(cover.revalidate(&b));

    assert!(matches!(
        gallai_derived(&b, Invariant::Domination, &cfg()),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn dominating_strong_witness_contract() {
    let star = graph("star:4");
    let w = dominating_strong_witness(&star, &cfg()).unwrap();
    assert_eq!(w.to_vec(), vec![0]);

    let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    let w = dominating_strong_witness(&two_k2, &cfg()).unwrap();
    assert!(two_k2.is_dominating(&w));
    assert_eq!(breakdown(&two_k2, &w).strong_differential, 0);

    let a = graph("figure-a");
    let w = dominating_strong_witness(&a, &cfg()).unwrap();
    assert!(a.is_dominating(&w));
    assert_eq!(breakdown(&a, &w).strong_differential, 8);
}

#[test]
fn size_guards() {
    let big = graph("path:21");
    assert!(matches!(
        strong_differential(&big, &cfg()),
        Err(Error::SizeGuardExceeded { n: 21, guard: 20 })
    ));
    let mut forced = cfg();
    forced.allow_guard_override = true;
    assert_eq!(strong_differential(&big, &forced).unwrap().value, 10);

    let empty = Graph::new(0, &[]).unwrap();
    assert!(matches!(
        strong_differential(&empty, &cfg()),
        Err(Error::EmptyGraph)
    ));

    let p17 = graph("path:17");
    assert!(matches!(
        oracle::strong_differential(&p17),
        Err(Error::SizeGuardExceeded { n: 17, guard: 16 })
    ));
    let p13 = graph("path:13");
    assert!(matches!(
        oracle::italian_domination(&p13),
        Err(Error::SizeGuardExceeded { n: 13, guard: 12 })
    ));
}

#[test]
fn semitotal_undefined_with_isolated_vertices() {
    let g = Graph::new(3, &[(0, 1)]).unwrap();
    assert!(matches!(
        semitotal_domination_number(&g, &cfg()),
        Err(Error::UndefinedInvariant(_))
    ));
    assert!(matches!(
        oracle::semitotal_domination(&g),
        Err(Error::UndefinedInvariant(_))
    ));
}

#[test]
fn solver_is_deterministic() {
    let g = graph("gnp:n=10,p=0.4,seed=99");
    for inv in Invariant::ALL {
        let first = solve(&g, inv, &cfg());
        let second = solve(&g, inv, &cfg());
        match (first, second) {
            (Ok(a), Ok(b)) => assert_eq!(a, b, "{}", inv.id()),
            (Err(a), Err(b)) => assert_eq!(a, b),
            _ => panic!("solver determinism violated for {}", inv.id()),
        }
    }
}

#[test]
fn oracle_equivalence_spot_check() {
    for seed in 0..12u64 {
        let g = generate(&FamilySpec::RandomGnp {
            n: 8,
            p: 0.35,
            seed,
        })
        .unwrap();
        for inv in Invariant::ALL {
            let primary = solve(&g, inv, &cfg());
            let reference = oracle::solve(&g, inv);
            match (primary, reference) {
                (Ok(a), Ok(b)) => {
                    assert_eq!(a.value, b.value, "{} on seed {seed}", inv.id());
                    assert!(a.revalidate(&g));
                    assert!(b.revalidate(&g));
                }
                (Err(a), Err(b)) => assert_eq!(a, b),
                (a, b) => panic!("defined-ness mismatch for {}: {a:?} vs {b:?}", inv.id()),
            }
        }
    }
}
