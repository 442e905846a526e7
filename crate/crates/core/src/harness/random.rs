//! Seeded random instances for the property suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::hgraph::{Edge, Hypergraph, VertexId};

/// Seed used when neither `--seed` nor `HYPERMATCH_SEED` is given.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Resolves the seed for randomized suites: explicit value, then the
/// `HYPERMATCH_SEED` environment variable, then [`DEFAULT_SEED`].
pub fn resolve_seed(explicit: Option<u64>) -> u64 {
    explicit
        .or_else(|| std::env::var("HYPERMATCH_SEED").ok()?.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<VertexId>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<VertexId> {
    let mut p: Vec<VertexId> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// A connected `k`-graph with exactly `m >= 1` edges and no isolated
/// vertices, grown edge by edge and then randomly relabelled. Each new edge
/// reuses between 1 and `k` existing vertices.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, k: usize, m: usize) -> Hypergraph {
    assert!(m >= 1 && k >= 2);
    let mut n = k;
    let mut edges: Vec<Edge> = vec![Edge::new(0..k)];
    let mut attempts = 0;
    while edges.len() < m {
        attempts += 1;
        let s = rng.gen_range(1..=k.min(n));
        let mut old: Vec<VertexId> = (0..n).collect();
        old.shuffle(rng);
        let mut verts: Vec<VertexId> = old[..s].to_vec();
        verts.extend(n..n + (k - s));
        let e = Edge::new(verts);
        if edges.contains(&e) {
            // a saturated vertex set forces fresh vertices eventually
            if attempts > 50 * m {
                let e = Edge::new((0..1).chain(n..n + k - 1));
                n += k - 1;
                edges.push(e);
            }
            continue;
        }
        n += k - s;
        edges.push(e);
    }
    let h = Hypergraph::from_edges_trusted(k, n, edges);
    let p = random_permutation(rng, n);
    h.relabel(&p)
}

/// A random `k`-tree with `m >= 1` edges: each new edge shares exactly one
/// vertex with the previous ones.
pub fn random_k_tree<R: Rng + ?Sized>(rng: &mut R, k: usize, m: usize) -> Hypergraph {
    assert!(m >= 1 && k >= 2);
    let mut n = k;
    let mut edges: Vec<Edge> = vec![Edge::new(0..k)];
    for _ in 1..m {
        let a = rng.gen_range(0..n);
        edges.push(Edge::new(std::iter::once(a).chain(n..n + k - 1)));
        n += k - 1;
    }
    let h = Hypergraph::from_edges_trusted(k, n, edges);
    let p = random_permutation(rng, n);
    h.relabel(&p)
}

/// `m` distinct uniformly random `k`-subsets of `0..n` (isolated vertices
/// allowed).
pub fn random_hypergraph<R: Rng + ?Sized>(rng: &mut R, k: usize, n: usize, m: usize) -> Hypergraph {
    let mut all = k_subsets(n, k);
    assert!(m <= all.len(), "not enough {k}-subsets of {n} vertices");
    all.shuffle(rng);
    all.truncate(m);
    Hypergraph::new(k, n, all).expect("distinct subsets")
}
