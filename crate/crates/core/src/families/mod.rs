//! Deterministic graph generators: the classic families, the two hard-coded
//! figure graphs with their label maps, corona products, the leaf/support
//! family and its membership test, the tree family characterised by the
//! `max degree - 1` strong differential, and seeded random graphs/trees.

mod rng;
mod trees;

pub use rng::SplitMix64;
pub use trees::{canonical_tree_code, enumerate_trees, random_tree};

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A recipe for one graph. Random variants carry their seed, so every spec
/// is reproducible.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// Star `K_{1,r}`; the center is vertex 0.
    Star {
        leaves: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    /// A star `K_{1,arms}` with one edge subdivided; order `arms + 2`.
    SubdividedStar {
        arms: usize,
    },
    /// Corona product: one copy of `outer`, one copy of `inner` per outer
    /// vertex, each joined to its outer vertex.
    Corona {
        outer: Box<FamilySpec>,
        inner: Box<FamilySpec>,
    },
    /// Leaf/support family member: one support per entry carrying that many
    /// leaves (each at least two), supports joined in a path.
    FamilyG {
        leaves_per_support: Vec<usize>,
    },
    FigureA,
    FigureB,
    RandomGnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    RandomTree {
        n: usize,
        seed: u64,
    },
}

/// Generates the graph described by `spec` with its documented, fixed
/// vertex numbering.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Path { n } => {
            require(*n >= 1, "path needs n >= 1")?;
            let edges: Vec<_> = (1..*n).map(|v| (v - 1, v)).collect();
            Graph::new(*n, &edges)
        }
        FamilySpec::Cycle { n } => {
            require(*n >= 3, "cycle needs n >= 3")?;
            let mut edges: Vec<_> = (1..*n).map(|v| (v - 1, v)).collect();
            edges.push((*n - 1, 0));
            Graph::new(*n, &edges)
        }
        FamilySpec::Star { leaves } => {
            require(*leaves >= 1, "star needs at least one leaf")?;
            let edges: Vec<_> = (1..=*leaves).map(|v| (0, v)).collect();
            Graph::new(leaves + 1, &edges)
        }
        FamilySpec::Complete { n } => {
            require(*n >= 1, "complete graph needs n >= 1")?;
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    edges.push((u, v));
                }
            }
            Graph::new(*n, &edges)
        }
        FamilySpec::CompleteBipartite { a, b } => {
            require(*a >= 1 && *b >= 1, "bipartite parts must be nonempty")?;
            let mut edges = Vec::new();
            for u in 0..*a {
                for v in 0..*b {
                    edges.push((u, a + v));
                }
            }
            Graph::new(a + b, &edges)
        }
        FamilySpec::SubdividedStar { arms } => {
            require(*arms >= 2, "subdivided star needs r >= 2")?;
            // 0 center; 1..arms intact leaves; `arms` midpoint; `arms+1` far leaf
            let mut edges: Vec<_> = (1..*arms).map(|v| (0, v)).collect();
            edges.push((0, *arms));
            edges.push((*arms, *arms + 1));
            Graph::new(arms + 2, &edges)
        }
        FamilySpec::Corona { outer, inner } => {
            let g1 = generate(outer)?;
            let g2 = generate(inner)?;
            corona(&g1, &g2)
        }
        FamilySpec::FamilyG { leaves_per_support } => {
            let support_count = leaves_per_support.len();
            require(support_count >= 1, "family-g needs at least one support")?;
            let path: Vec<_> = (1..support_count).map(|i| (i - 1, i)).collect();
            family_g(leaves_per_support, &path)
        }
        FamilySpec::FigureA => figure_a(),
        FamilySpec::FigureB => figure_b(),
        FamilySpec::RandomGnp { n, p, seed } => {
            require(*n >= 1, "gnp needs n >= 1")?;
            require((0.0..=1.0).contains(p), "gnp needs p in [0, 1]")?;
            let mut rng = SplitMix64::new(*seed);
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    if rng.chance(*p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(*n, &edges)
        }
        FamilySpec::RandomTree { n, seed } => random_tree(*n, *seed),
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidSpec(msg.into()))
    }
}

/// Seeded Erdős–Rényi graph: each pair becomes an edge independently with
/// probability `p`, in a fixed pair order.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    generate(&FamilySpec::RandomGnp { n, p, seed })
}

/// Corona product `G1 (.) G2`: the vertices of `G1` come first, then the
/// copies of `G2` in order; copy `i` is joined completely to vertex `i`.
pub fn corona(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n1 = g1.order();
    let n2 = g2.order();
    require(n1 >= 1 && n2 >= 1, "corona factors must be nonempty")?;
    let mut edges: Vec<(usize, usize)> = g1.edges().to_vec();
    for i in 0..n1 {
        let base = n1 + i * n2;
        for &(u, v) in g2.edges() {
            edges.push((base + u, base + v));
        }
        for v in 0..n2 {
            edges.push((i, base + v));
        }
    }
    Graph::new(n1 + n1 * n2, &edges)
}

/// Builds a leaf/support family member: support `i` gets
/// `leaves_per_support[i]` leaves (at least two each) and `support_edges`
/// joins supports by their indices. Supports are numbered first, then the
/// leaves of each support in order.
pub fn family_g(leaves_per_support: &[usize], support_edges: &[(usize, usize)]) -> Result<Graph> {
    let s = leaves_per_support.len();
    require(s >= 1, "family-g needs at least one support")?;
    require(
        leaves_per_support.iter().all(|&l| l >= 2),
        "every support needs at least two leaves",
    )?;
    require(
        support_edges.iter().all(|&(u, v)| u < s && v < s),
        "support edge endpoint out of range",
    )?;
    let mut edges: Vec<(usize, usize)> = support_edges.to_vec();
    let mut next = s;
    for (i, &l) in leaves_per_support.iter().enumerate() {
        for _ in 0..l {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::new(next, &edges)
}

/// Membership test for the leaf/support family: order at least three,
/// every vertex is a leaf or a support (never both), and every support has
/// at least two leaf neighbours.
pub fn is_family_g(g: &Graph) -> bool {
    if g.order() < 3 {
        return false;
    }
    let leaves = g.leaves();
    let supports = g.supports();
    if !leaves.is_disjoint_from(&supports) {
        return false;
    }
    if leaves.union(&supports).len() != g.order() {
        return false;
    }
    let every_support_has_two = supports
        .iter()
        .all(|v| g.leaf_neighbors(v).expect("in range").len() >= 2);
    every_support_has_two
}

/// Membership test for the tree family characterised by
/// `strong differential = max degree - 1`. Every maximum-degree vertex `v`
/// must satisfy:
///
/// * it is a support and its eccentricity is at most three;
/// * every neighbour has degree at most three and at most one
///   degree-two neighbour;
/// * every vertex outside `N[v]` has degree at most two;
/// * `v` has at least two leaf neighbours, or some neighbour is a support
///   of degree two.
pub fn is_family_t(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.order() < 3 {
        return Err(Error::InvalidArgument(
            "the tree family is defined for order at least three".into(),
        ));
    }
    let max_degree = t.max_degree();
    let supports = t.supports();
    for v in 0..t.order() {
        if t.degree(v)? != max_degree {
            continue;
        }
        // A.1
        if !supports.contains(v) || t.eccentricity(v)? > 3 {
            return Ok(false);
        }
        // A.2
        let neighborhood = t.open_neighborhood(v)?;
        for u in neighborhood.iter() {
            if t.degree(u)? > 3 || t.degree_two_neighbors(u)?.len() > 1 {
                return Ok(false);
            }
        }
        // A.3
        let closed = t.closed_neighborhood(v)?;
        for u in closed.complement().iter() {
            if t.degree(u)? > 2 {
                return Ok(false);
            }
        }
        // A.4
        let leaf_neighbors = t.leaf_neighbors(v)?;
        if leaf_neighbors.len() < 2 {
            let rescued = neighborhood
                .intersection(&supports)
                .iter()
                .any(|u| t.degree(u).expect("in range") == 2);
            if !rescued {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

const FIGURE_A_LABELS: [&str; 14] = [
    "a1", "a11", "a12", "a13", "a2", "a3", "b1", "b2", "b3", "b4", "c1", "c2", "c3", "c4",
];

const FIGURE_B_LABELS: [&str; 8] = ["a1", "a2", "a3", "a4", "a12", "a23", "a34", "a41"];

/// Vertex labels of the first figure graph, in index order.
pub fn figure_a_labels() -> &'static [&'static str] {
    &FIGURE_A_LABELS
}

/// Vertex labels of the second figure graph, in index order.
pub fn figure_b_labels() -> &'static [&'static str] {
    &FIGURE_B_LABELS
}

pub fn figure_a_index(label: &str) -> Option<usize> {
    FIGURE_A_LABELS.iter().position(|&l| l == label)
}

pub fn figure_b_index(label: &str) -> Option<usize> {
    FIGURE_B_LABELS.iter().position(|&l| l == label)
}

/// 14 vertices: a center `a1` with three leaves, a path to `a3`, and two
/// 4-cycles hung off `a3` at `b1` and `c1`.
fn figure_a() -> Result<Graph> {
    let e = |a: &str, b: &str| (figure_a_index(a).unwrap(), figure_a_index(b).unwrap());
    Graph::new(
        14,
        &[
            e("a11", "a1"),
            e("a1", "a2"),
            e("a2", "a3"),
            e("a3", "b1"),
            e("b1", "b2"),
            e("b2", "b3"),
            e("b3", "b4"),
            e("b4", "b1"),
            e("a3", "c1"),
            e("c1", "c2"),
            e("c2", "c3"),
            e("c3", "c4"),
            e("c4", "c1"),
            e("a1", "a12"),
            e("a1", "a13"),
        ],
    )
}

/// 8 vertices: a 4-cycle `a1..a4` plus one extra vertex astride each cycle
/// edge.
fn figure_b() -> Result<Graph> {
    let e = |a: &str, b: &str| (figure_b_index(a).unwrap(), figure_b_index(b).unwrap());
    Graph::new(
        8,
        &[
            e("a1", "a2"),
            e("a2", "a3"),
            e("a3", "a4"),
            e("a4", "a1"),
            e("a1", "a12"),
            e("a12", "a2"),
            e("a2", "a23"),
            e("a23", "a3"),
            e("a3", "a34"),
            e("a34", "a4"),
            e("a4", "a41"),
            e("a41", "a1"),
        ],
    )
}

impl fmt::Display for FamilySpec {
    /// Canonical text form, e.g. `corona(path:3,complete:2)` or
    /// `gnp:n=12,p=0.3,seed=42`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Star { leaves } => write!(f, "star:{leaves}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite { a, b } => write!(f, "bipartite:{a},{b}"),
            FamilySpec::SubdividedStar { arms } => write!(f, "subdivided-star:{arms}"),
            FamilySpec::Corona { outer, inner } => write!(f, "corona({outer},{inner})"),
            FamilySpec::FamilyG { leaves_per_support } => {
                let parts: Vec<String> = leaves_per_support.iter().map(|l| l.to_string()).collect();
                write!(f, "familyg:{}", parts.join(","))
            }
            FamilySpec::FigureA => write!(f, "figure-a"),
            FamilySpec::FigureB => write!(f, "figure-b"),
            FamilySpec::RandomGnp { n, p, seed } => write!(f, "gnp:n={n},p={p},seed={seed}"),
            FamilySpec::RandomTree { n, seed } => write!(f, "tree:n={n},seed={seed}"),
        }
    }
}

impl FamilySpec {
    /// Parses the canonical text form. A `count=K` key on the random
    /// families expands to `K` specs with consecutive seeds, which is what
    /// [`FamilySpec::parse_many`] returns.
    pub fn parse_many(text: &str) -> Result<Vec<FamilySpec>> {
        let text = text.trim();
        let bad = |msg: &str| Error::InvalidSpec(format!("{msg} in `{text}`"));

        if let Some(rest) = text.strip_prefix("corona(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| bad("missing closing parenthesis"))?;
            let split = top_level_comma(inner).ok_or_else(|| bad("corona needs two factors"))?;
            let outer = FamilySpec::parse(&inner[..split])?;
            let inner_spec = FamilySpec::parse(&inner[split + 1..])?;
            return Ok(vec![FamilySpec::Corona {
                outer: Box::new(outer),
                inner: Box::new(inner_spec),
            }]);
        }

        match text {
            "figure-a" => return Ok(vec![FamilySpec::FigureA]),
            "figure-b" => return Ok(vec![FamilySpec::FigureB]),
            _ => {}
        }

        let (name, args) = text
            .split_once(':')
            .ok_or_else(|| bad("expected `family:params`"))?;
        let ints = || -> Result<Vec<usize>> {
            args.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| bad("expected an integer parameter"))
                })
                .collect()
        };
        match name {
            "path" => Ok(vec![FamilySpec::Path {
                n: one(&ints()?, text)?,
            }]),
            "cycle" => Ok(vec![FamilySpec::Cycle {
                n: one(&ints()?, text)?,
            }]),
            "star" => Ok(vec![FamilySpec::Star {
                leaves: one(&ints()?, text)?,
            }]),
            "complete" => Ok(vec![FamilySpec::Complete {
                n: one(&ints()?, text)?,
            }]),
            "bipartite" => {
                let v = ints()?;
                if v.len() != 2 {
                    return Err(bad("bipartite takes two part sizes"));
                }
                Ok(vec![FamilySpec::CompleteBipartite { a: v[0], b: v[1] }])
            }
            "subdivided-star" => Ok(vec![FamilySpec::SubdividedStar {
                arms: one(&ints()?, text)?,
            }]),
            "familyg" => Ok(vec![FamilySpec::FamilyG {
                leaves_per_support: ints()?,
            }]),
            "gnp" | "tree" => {
                let kv = parse_keys(args, text)?;
                let n = kv
                    .get("n")
                    .ok_or_else(|| bad("missing n="))?
                    .parse::<usize>()
                    .map_err(|_| bad("bad n="))?;
                let seed = kv
                    .get("seed")
                    .map(|s| s.parse::<u64>().map_err(|_| bad("bad seed=")))
                    .transpose()?
                    .unwrap_or(0);
                let count = kv
                    .get("count")
                    .map(|s| s.parse::<u64>().map_err(|_| bad("bad count=")))
                    .transpose()?
                    .unwrap_or(1);
                if count == 0 {
                    return Err(bad("count must be at least 1"));
                }
                let make = |seed: u64| -> Result<FamilySpec> {
                    if name == "gnp" {
                        let p = kv
                            .get("p")
                            .ok_or_else(|| bad("missing p="))?
                            .parse::<f64>()
                            .map_err(|_| bad("bad p="))?;
                        Ok(FamilySpec::RandomGnp { n, p, seed })
                    } else {
                        Ok(FamilySpec::RandomTree { n, seed })
                    }
                };
                (0..count).map(|i| make(seed.wrapping_add(i))).collect()
            }
            _ => Err(bad("unknown family")),
        }
    }

    /// Parses a spec that must describe exactly one graph.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let mut specs = FamilySpec::parse_many(text)?;
        if specs.len() != 1 {
            return Err(Error::InvalidSpec(format!(
                "`{text}` expands to {} graphs where one was expected",
                specs.len()
            )));
        }
        Ok(specs.remove(0))
    }
}

fn one(v: &[usize], text: &str) -> Result<usize> {
    if v.len() == 1 {
        Ok(v[0])
    } else {
        Err(Error::InvalidSpec(format!(
            "expected a single integer parameter in `{text}`"
        )))
    }
}

fn parse_keys(args: &str, text: &str) -> Result<std::collections::HashMap<String, String>> {
    let mut map = std::collections::HashMap::new();
    for part in args.split(',') {
        let (k, v) = part
            .trim()
            .split_once('=')
            .ok_or_else(|| Error::InvalidSpec(format!("expected key=value in `{text}`")))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

/// Index of the comma separating two balanced spec expressions.
fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}
