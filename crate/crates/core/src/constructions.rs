//! Named families. The high-degree vertex of every star-like family is 0.

use crate::error::{Error, Result};
use crate::hgraph::{Hypergraph, VertexId};
use crate::transform::{star_join, StarJoinSpec};

/// Hands out fresh vertex ids.
struct Fresh(usize);

impl Fresh {
    fn take(&mut self, count: usize) -> std::ops::Range<VertexId> {
        let r = self.0..self.0 + count;
        self.0 += count;
        r
    }
}

fn check_k(k: usize, min: usize) -> Result<()> {
    if k < min {
        return Err(Error::BadParams(format!("uniformity must be at least {min}, got {k}")));
    }
    Ok(())
}

/// `m` edges meeting exactly at the center 0; `n = m(k - 1) + 1`.
pub fn k_star(k: usize, m: usize) -> Result<Hypergraph> {
    check_k(k, 2)?;
    let mut f = Fresh(1);
    let edges: Vec<Vec<VertexId>> = (0..m).map(|_| std::iter::once(0).chain(f.take(k - 1)).collect()).collect();
    Hypergraph::new(k, f.0, edges)
}

/// The `l`-cycle: two edges sharing exactly `{0, 1}` for `l = 2`, and a
/// linear cycle through `0, ..., l - 1` otherwise.
pub fn k_cycle(k: usize, l: usize) -> Result<Hypergraph> {
    check_k(k, 2)?;
    if l < 2 || (k == 2 && l < 3) {
        return Err(Error::BadParams(format!("no {l}-cycle in a {k}-graph")));
    }
    let mut f = Fresh(if l == 2 { 2 } else { l });
    let edges: Vec<Vec<VertexId>> = if l == 2 {
        (0..2).map(|_| [0, 1].into_iter().chain(f.take(k - 2)).collect()).collect()
    } else {
        (0..l).map(|i| [i, (i + 1) % l].into_iter().chain(f.take(k - 2)).collect()).collect()
    };
    Hypergraph::new(k, f.0, edges)
}

/// `G^(k)`: every edge of the graph `g` padded with `k - 2` fresh vertices.
pub fn power_hypergraph(g: &Hypergraph, k: usize) -> Result<Hypergraph> {
    if g.k() != 2 {
        return Err(Error::NotAGraph(g.k()));
    }
    check_k(k, 3)?;
    let mut f = Fresh(g.n());
    let edges: Vec<Vec<VertexId>> = g
        .edges()
        .iter()
        .map(|e| e.vertices().iter().copied().chain(f.take(k - 2)).collect())
        .collect();
    Hypergraph::new(k, f.0, edges)
}

/// `t` two-cycles and `m - 2t` pendant edges, all through the apex 0.
pub fn extremal_h(k: usize, m: usize, t: usize) -> Result<Hypergraph> {
    check_k(k, 3)?;
    if m < 2 * t {
        return Err(Error::BadParams(format!("need m >= 2t, got m = {m}, t = {t}")));
    }
    let mut f = Fresh(1);
    let mut edges: Vec<Vec<VertexId>> = Vec::with_capacity(m);
    for _ in 0..t {
        let a = f.take(1).start;
        for _ in 0..2 {
            edges.push([0, a].into_iter().chain(f.take(k - 2)).collect());
        }
    }
    for _ in 2 * t..m {
        edges.push(std::iter::once(0).chain(f.take(k - 1)).collect());
    }
    Hypergraph::new(k, f.0, edges)
}

/// `t` linear triangles and `m - 3t` pendant edges, all through the apex 0.
pub fn extremal_l(k: usize, m: usize, t: usize) -> Result<Hypergraph> {
    check_k(k, 2)?;
    if m < 3 * t {
        return Err(Error::BadParams(format!("need m >= 3t, got m = {m}, t = {t}")));
    }
    let mut f = Fresh(1);
    let mut edges: Vec<Vec<VertexId>> = Vec::with_capacity(m);
    for _ in 0..t {
        let ab = f.take(2);
        let (a, b) = (ab.start, ab.start + 1);
        for pair in [[0, a], [a, b], [b, 0]] {
            edges.push(pair.into_iter().chain(f.take(k - 2)).collect());
        }
    }
    for _ in 3 * t..m {
        edges.push(std::iter::once(0).chain(f.take(k - 1)).collect());
    }
    Hypergraph::new(k, f.0, edges)
}

/// All `C(n, k)` edges on `n` vertices.
pub fn complete_k_graph(n: usize, k: usize) -> Result<Hypergraph> {
    check_k(k, 2)?;
    if n < k {
        return Err(Error::BadParams(format!("complete {k}-graph needs n >= {k}, got {n}")));
    }
    Hypergraph::new(k, n, crate::harness::random::k_subsets(n, k))
}

/// `K_n^(k)` with a `p`-edge star joined at its center to vertex 0.
pub fn complete_plus_star(n: usize, p: usize, k: usize) -> Result<Hypergraph> {
    let spec = StarJoinSpec {
        host: complete_k_graph(n, k)?,
        attachments: vec![0],
        parts: vec![(k_star(k, p)?, 0)],
    };
    Ok(star_join(&spec)?.graph)
}
