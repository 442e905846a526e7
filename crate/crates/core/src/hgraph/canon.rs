//! Canonical labelling by individualisation and refinement.
//!
//! The vertex partition is refined to an equitable ordered partition (colour
//! refinement on the incidence structure); non-discrete partitions are split
//! by individualising each vertex of the first smallest non-singleton cell.
//! Every discrete leaf gives a labelling; the canonical form is the leaf whose
//! relabelled edge list is lexicographically smallest. Automorphisms found
//! when two leaves coincide prune sibling branches lying in the same orbit.

use super::{Edge, Hypergraph, VertexId};
use crate::error::{Error, Result};

/// Default vertex cap for canonical labelling.
pub const DEFAULT_CANON_LIMIT: usize = 24;

/// Canonical representative of the isomorphism class of `h`.
pub fn canonical_form(h: &Hypergraph) -> Result<Hypergraph> {
    canonical_form_with_limit(h, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(h: &Hypergraph, limit: usize) -> Result<Hypergraph> {
    if h.n() > limit {
        return Err(Error::SizeLimitExceeded(format!(
            "canonical form supports at most {limit} vertices, got {}",
            h.n()
        )));
    }
    Ok(Canonizer::new(h).run().1)
}

/// A permutation `perm` (old id -> new id) with `h.relabel(&perm)` equal to
/// the canonical form.
pub fn canonical_labeling(h: &Hypergraph) -> Result<Vec<VertexId>> {
    if h.n() > DEFAULT_CANON_LIMIT {
        return Err(Error::SizeLimitExceeded(format!(
            "canonical form supports at most {DEFAULT_CANON_LIMIT} vertices, got {}",
            h.n()
        )));
    }
    Ok(Canonizer::new(h).run().0)
}

pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.k() != b.k() || a.n() != b.n() || a.m() != b.m() || sorted(a.degrees()) != sorted(b.degrees()) {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

struct Canonizer<'a> {
    h: &'a Hypergraph,
    incident: Vec<Vec<usize>>,
    first: Option<(Vec<usize>, Vec<Edge>)>,
    best: Option<(Vec<usize>, Vec<Edge>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Canonizer<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let mut incident = vec![Vec::new(); h.n()];
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e.vertices() {
                incident[v].push(i);
            }
        }
        Canonizer {
            h,
            incident,
            first: None,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    fn run(mut self) -> (Vec<usize>, Hypergraph) {
        let n = self.h.n();
        if n == 0 {
            return (Vec::new(), self.h.clone());
        }
        let colors = vec![0; n];
        self.search(colors, &mut Vec::new());
        let (perm, edges) = self.best.take().expect("at least one leaf");
        (perm, Hypergraph::from_edges_trusted(self.h.k(), n, edges))
    }

    /// Refines `colors` (dense ranks, order-preserving) to an equitable
    /// partition.
    fn refine(&self, colors: &mut [usize]) {
        let n = colors.len();
        let mut count = distinct(colors);
        loop {
            if count == n {
                return;
            }
            let sigs: Vec<(usize, Vec<Vec<usize>>)> = (0..n)
                .map(|v| {
                    let mut per_edge: Vec<Vec<usize>> = self.incident[v]
                        .iter()
                        .map(|&ei| {
                            let mut c: Vec<usize> = self.h.edges()[ei]
                                .vertices()
                                .iter()
                                .filter(|&&w| w != v)
                                .map(|&w| colors[w])
                                .collect();
                            c.sort_unstable();
                            c
                        })
                        .collect();
                    per_edge.sort_unstable();
                    (colors[v], per_edge)
                })
                .collect();
            let new_count = rank_into(&sigs, colors);
            if new_count == count {
                return;
            }
            count = new_count;
        }
    }

    fn search(&mut self, mut colors: Vec<usize>, path: &mut Vec<usize>) {
        self.refine(&mut colors);
        let n = colors.len();
        // cell sizes by colour
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..n)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c));
        let Some(target) = target else {
            self.leaf(colors);
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit(path, &explored, v) {
                continue;
            }
            explored.push(v);
            let keys: Vec<(usize, bool)> = (0..n).map(|w| (colors[w], w != v)).collect();
            let mut child = vec![0; n];
            rank_into(&keys, &mut child);
            path.push(v);
            self.search(child, path);
            path.pop();
        }
    }

    /// Whether `v` shares an orbit with an explored vertex under the known
    /// automorphisms fixing `path` pointwise.
    fn same_orbit(&self, path: &[usize], explored: &[usize], v: usize) -> bool {
        let gens: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|g| path.iter().all(|&p| g[p] == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let n = self.h.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in gens {
            for (x, &gx) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, perm: Vec<usize>) {
        let mut edges: Vec<Edge> = self.h.edges().iter().map(|e| e.map(|v| perm[v])).collect();
        edges.sort_unstable();
        for stored in [&self.first, &self.best].into_iter().flatten() {
            if stored.1 == edges {
                // stored.0^{-1} ∘ perm is an automorphism
                let mut inv = vec![0; perm.len()];
                for (v, &p) in stored.0.iter().enumerate() {
                    inv[p] = v;
                }
                let gamma: Vec<usize> = perm.iter().map(|&p| inv[p]).collect();
                if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                    self.automorphisms.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((perm.clone(), edges.clone()));
        }
        if self.best.as_ref().is_none_or(|b| edges < b.1) {
            self.best = Some((perm, edges));
        }
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Writes the dense rank of each key into `out`; returns the number of
/// distinct keys.
fn rank_into<K: Ord>(keys: &[K], out: &mut [usize]) -> usize {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut rank = 0;
    for (i, &v) in order.iter().enumerate() {
        if i > 0 && keys[order[i - 1]] != keys[v] {
            rank += 1;
        }
        out[v] = rank;
    }
    if keys.is_empty() {
        0
    } else {
        rank + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::random::{random_connected, random_permutation};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Minimum over all n! relabellings; only for tiny n.
    fn brute_min(h: &Hypergraph) -> Vec<Edge> {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..n {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(h.n()).into_iter().map(|p| h.relabel(&p).edges().to_vec()).min().unwrap()
    }

    #[test]
    fn remark_graph_and_its_shift_differ() {
        let g = Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3], [0, 2, 4]]).unwrap();
        let s = Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3], [0, 1, 4]]).unwrap();
        assert_ne!(canonical_form(&g).unwrap(), canonical_form(&s).unwrap());
        assert!(!is_isomorphic(&g, &s).unwrap());
    }

    #[test]
    fn star_vs_linear_triangle() {
        let star = Hypergraph::new(3, 7, [[0, 1, 2], [0, 3, 4], [0, 5, 6]]).unwrap();
        let tri = Hypergraph::new(3, 6, [[0, 1, 3], [1, 2, 4], [0, 2, 5]]).unwrap();
        assert_ne!(canonical_form(&star).unwrap(), canonical_form(&tri).unwrap());
    }

    #[test]
    fn size_limit() {
        let h = Hypergraph::empty(2, 30);
        assert!(matches!(canonical_form(&h), Err(Error::SizeLimitExceeded(_))));
        assert!(canonical_form_with_limit(&h, 30).is_ok());
    }

    #[test]
    fn labeling_reproduces_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let h = random_connected(&mut rng, 3, 6);
            let perm = canonical_labeling(&h).unwrap();
            assert_eq!(h.relabel(&perm), canonical_form(&h).unwrap());
        }
    }

    #[test]
    fn isomorphism_classes_match_brute_force_on_tiny_graphs() {
        // two hypergraphs get the same canonical form iff their brute-force
        // minima coincide
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut graphs = Vec::new();
        for _ in 0..60 {
            let k = if graphs.len() % 2 == 0 { 2 } else { 3 };
            let h = random_connected(&mut rng, k, 3);
            if h.n() <= 7 {
                graphs.push(h);
            }
        }
        for a in &graphs {
            for b in &graphs {
                if a.k() != b.k() || a.n() != b.n() {
                    continue;
                }
                let same = canonical_form(a).unwrap() == canonical_form(b).unwrap();
                assert_eq!(same, brute_min(a) == brute_min(b), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn symmetric_star_is_fast() {
        let edges: Vec<Vec<usize>> = (0..7).map(|i| vec![0, 1 + 2 * i, 2 + 2 * i]).collect();
        let star = Hypergraph::new(3, 15, edges).unwrap();
        let c = canonical_form(&star).unwrap();
        assert_eq!(c.m(), 7);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
        #[test]
        fn invariant_and_idempotent(seed in 0u64..10_000, k in 2usize..=4, m in 1usize..=6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let h = random_connected(&mut rng, k, m);
            if h.n() <= DEFAULT_CANON_LIMIT {
                let c = canonical_form(&h).unwrap();
                let p = random_permutation(&mut rng, h.n());
                proptest::prop_assert_eq!(&canonical_form(&h.relabel(&p)).unwrap(), &c);
                proptest::prop_assert_eq!(&canonical_form(&c).unwrap(), &c);
            }
        }
    }
}
