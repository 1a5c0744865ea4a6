//! Plain edge-list text format: a `n <count>` header line, one `u v` pair
//! per line, `#` comments and blank lines ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match order {
            None => {
                let rest = line
                    .strip_prefix('n')
                    .ok_or_else(|| Error::parse(line_no, "expected header `n <count>`"))?;
                let n = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_no, "bad vertex count in header"))?;
                order = Some(n);
            }
            Some(n) => {
                let mut parts = line.split_whitespace();
                let (u, v) = match (parts.next(), parts.next(), parts.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => return Err(Error::parse(line_no, "expected `u v`")),
                };
                let u = u
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_no, "bad vertex index"))?;
                let v = v
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_no, "bad vertex index"))?;
                if u >= n || v >= n {
                    return Err(Error::parse(line_no, format!("vertex out of range 0..{n}")));
                }
                if u == v {
                    return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
                }
                let edge = (u.min(v), u.max(v));
                if edges.contains(&edge) {
                    return Err(Error::parse(line_no, format!("duplicate edge {u} {v}")));
                }
                edges.push(edge);
            }
        }
    }
    let n = order.ok_or_else(|| Error::parse(1, "missing header `n <count>`"))?;
    Graph::new(n, &edges)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
