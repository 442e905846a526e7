//! Uniform hypergraphs with canonical (sorted) storage.
//!
//! A [`Hypergraph`] is a vertex count `n`, a uniformity `k` and a sorted,
//! duplicate-free list of sorted `k`-element edges over the dense id space
//! `0..n`. Every constructor normalises to this form, so two hypergraphs with
//! the same labelled edge set compare equal. Isomorphism is decided through
//! [`canonical_form`].

mod bitset;
mod canon;
mod cycles;
pub mod text;

use std::collections::VecDeque;
use std::fmt;

pub use bitset::VertexSet;
pub use canon::{canonical_form, canonical_form_with_limit, canonical_labeling, is_isomorphic, DEFAULT_CANON_LIMIT};
pub use cycles::{find_cycles, CycleRecord, WalkKind, WalkSequence};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// A sorted, duplicate-free set of vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(Vec<VertexId>);

impl Edge {
    /// Sorts and deduplicates; uniformity is checked by the owning hypergraph.
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Edge(v)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Number of shared vertices.
    pub fn overlap(&self, other: &Edge) -> usize {
        let (mut i, mut j, mut c) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    c += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        c
    }

    pub fn is_disjoint(&self, other: &Edge) -> bool {
        self.overlap(other) == 0
    }

    /// `(self \ {from}) ∪ {to}`, re-sorted.
    pub fn replace(&self, from: VertexId, to: VertexId) -> Edge {
        Edge::new(self.0.iter().map(|&w| if w == from { to } else { w }))
    }

    pub(crate) fn map(&self, f: impl Fn(VertexId) -> VertexId) -> Edge {
        Edge::new(self.0.iter().map(|&w| f(w)))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A `k`-uniform hypergraph on the vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Edge>,
}

impl Hypergraph {
    /// Builds and validates a hypergraph. Edges may be given in any order and
    /// with unsorted vertices.
    ///
    /// ```
    /// use hypermatch::Hypergraph;
    /// let g = Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3], [0, 2, 4]]).unwrap();
    /// assert_eq!(g.m(), 3);
    /// assert!(Hypergraph::new(3, 3, [[0, 1, 2], [2, 1, 0]]).is_err());
    /// ```
    pub fn new<E, I>(k: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = VertexId>,
    {
        if k < 2 {
            return Err(Error::BadParams(format!("uniformity k={k} must be at least 2")));
        }
        let mut list = Vec::new();
        for raw in edges {
            let raw: Vec<VertexId> = raw.into_iter().collect();
            let e = Edge::new(raw.iter().copied());
            if raw.len() != k || e.len() != k {
                return Err(Error::NonUniformEdge {
                    edge: raw.clone(),
                    expected: k,
                    found: e.len(),
                });
            }
            if let Some(&v) = e.0.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0.clone()));
        }
        Ok(Hypergraph { k, n, edges: list })
    }

    pub fn empty(k: usize, n: usize) -> Self {
        assert!(k >= 2, "uniformity must be at least 2");
        Hypergraph { k, n, edges: Vec::new() }
    }

    /// Internal constructor for edge lists already known to be valid apart
    /// from ordering.
    pub(crate) fn from_edges_trusted(k: usize, n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        debug_assert!(edges.windows(2).all(|w| w[0] != w[1]));
        debug_assert!(edges.iter().all(|e| e.len() == k && e.0.iter().all(|&v| v < n)));
        Hypergraph { k, n, edges }
    }

    /// Re-checks every structural invariant.
    pub fn validate(&self) -> Result<()> {
        if self.k < 2 {
            return Err(Error::BadParams(format!("uniformity k={} must be at least 2", self.k)));
        }
        for e in &self.edges {
            if e.len() != self.k || e.0.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::NonUniformEdge {
                    edge: e.0.clone(),
                    expected: self.k,
                    found: Edge::new(e.0.iter().copied()).len(),
                });
            }
            if let Some(&v) = e.0.iter().find(|&&v| v >= self.n) {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        for w in self.edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0.clone()));
            }
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<&Edge> {
        self.edges.get(index).ok_or(Error::BadEdgeIndex {
            index,
            m: self.edges.len(),
        })
    }

    pub fn edge_index(&self, e: &Edge) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edge_index(e).is_some()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e.vertices() {
                d[v] += 1;
            }
        }
        d
    }

    /// Indices of the edges containing `v`.
    pub fn incident_edges(&self, v: VertexId) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.contains(v))
            .map(|(i, _)| i)
            .collect())
    }

    /// `H \ e`: same vertex set, one edge fewer.
    pub fn delete_edge(&self, index: usize) -> Result<Hypergraph> {
        self.edge(index)?;
        let mut edges = self.edges.clone();
        edges.remove(index);
        Ok(Hypergraph { k: self.k, n: self.n, edges })
    }

    /// `H - e`: drops the vertices of `e` and every edge meeting `e`. The
    /// surviving vertices are renumbered densely in increasing order.
    pub fn remove_edge_closed(&self, index: usize) -> Result<Hypergraph> {
        let e = self.edge(index)?.clone();
        Ok(self.remove_vertices(e.vertices()).0)
    }

    /// Deletes a vertex set together with every edge touching it. Returns the
    /// result and the old-to-new id map.
    pub fn remove_vertices(&self, removed: &[VertexId]) -> (Hypergraph, Vec<Option<VertexId>>) {
        let gone = VertexSet::from_iter_with_capacity(self.n, removed.iter().copied());
        let mut map = vec![None; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !gone.contains(v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.vertices().iter().all(|&v| !gone.contains(v)))
            .map(|e| e.map(|v| map[v].expect("kept vertex")))
            .collect();
        (Hypergraph::from_edges_trusted(self.k, next, edges), map)
    }

    /// Renames vertices through the permutation `perm` (old id -> new id).
    pub fn relabel(&self, perm: &[VertexId]) -> Hypergraph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|e| e.map(|v| perm[v])).collect();
        Hypergraph::from_edges_trusted(self.k, self.n, edges)
    }

    /// Adds `extra` isolated vertices.
    pub fn with_isolated(&self, extra: usize) -> Hypergraph {
        Hypergraph {
            k: self.k,
            n: self.n + extra,
            edges: self.edges.clone(),
        }
    }

    /// Adds an edge, rejecting duplicates and out-of-range vertices.
    pub fn add_edge(&self, vertices: impl IntoIterator<Item = VertexId>) -> Result<Hypergraph> {
        let mut all: Vec<Vec<VertexId>> = self.edges.iter().map(|e| e.0.clone()).collect();
        all.push(vertices.into_iter().collect());
        Hypergraph::new(self.k, self.n, all)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.k != other.k {
            return Err(Error::BadParams(format!(
                "cannot join a {}-graph with a {}-graph",
                self.k, other.k
            )));
        }
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| e.map(|v| v + shift)));
        Ok(Hypergraph::from_edges_trusted(self.k, self.n + other.n, edges))
    }

    /// Connected components as sorted vertex lists; isolated vertices form
    /// their own components. Components are ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e.vertices() {
                adj[v].push(i);
            }
        }
        let mut seen = vec![false; self.n];
        let mut edge_seen = vec![false; self.edges.len()];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &ei in &adj[v] {
                    if std::mem::replace(&mut edge_seen[ei], true) {
                        continue;
                    }
                    for &w in self.edges[ei].vertices() {
                        if !seen[w] {
                            seen[w] = true;
                            comp.push(w);
                            queue.push_back(w);
                        }
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff there is exactly one component. Isolated vertices count as
    /// components.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        Ok(self.components().len() == 1)
    }

    /// Restriction to a vertex subset (induced sub-hypergraph), renumbered in
    /// the order given.
    pub fn induced(&self, vertices: &[VertexId]) -> Hypergraph {
        let mut map = vec![None; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            map[v] = Some(i);
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.vertices().iter().all(|&v| map[v].is_some()))
            .map(|e| e.map(|v| map[v].unwrap()))
            .collect();
        Hypergraph::from_edges_trusted(self.k, vertices.len(), edges)
    }

    /// Splits into the hypergraphs spanned by each component.
    pub fn component_graphs(&self) -> Vec<Hypergraph> {
        self.components().iter().map(|c| self.induced(c)).collect()
    }

    /// Removes isolated vertices; returns the stripped hypergraph and how many
    /// vertices were dropped.
    pub fn strip_isolated(&self) -> (Hypergraph, usize) {
        let deg = self.degrees();
        let keep: Vec<VertexId> = (0..self.n).filter(|&v| deg[v] > 0).collect();
        let dropped = self.n - keep.len();
        if dropped == 0 {
            return (self.clone(), 0);
        }
        (self.induced(&keep), dropped)
    }

    /// Every pair of distinct edges shares at most one vertex.
    pub fn is_linear(&self) -> bool {
        self.edges
            .iter()
            .enumerate()
            .all(|(i, e)| self.edges[i + 1..].iter().all(|f| e.overlap(f) <= 1))
    }

    /// Connected and acyclic. Uses the hypertree count `n - 1 = m (k - 1)`,
    /// which characterises acyclicity for connected uniform hypergraphs.
    pub fn is_k_tree(&self) -> bool {
        self.n >= 1
            && self.n - 1 == self.edges.len() * (self.k - 1)
            && self.components().len() == 1
    }

    /// Indices of edges containing at least `k - 1` vertices of degree one.
    pub fn pendant_edges(&self) -> Vec<usize> {
        let deg = self.degrees();
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.vertices().iter().filter(|&&v| deg[v] == 1).count() >= self.k - 1)
            .map(|(i, _)| i)
            .collect()
    }

    /// Labelled subgraph test: same `k`, `self.n <= other.n` and every edge of
    /// `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Hypergraph) -> bool {
        self.k == other.k
            && self.n <= other.n
            && self.edges.iter().all(|e| other.contains_edge(e))
    }

    /// Vertices lying in no edge.
    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        let deg = self.degrees();
        (0..self.n).filter(|&v| deg[v] == 0).collect()
    }

    /// Connected, and every two distinct cycles share at most one vertex.
    ///
    /// Cycles with the same edge set but different vertex sequences count as
    /// distinct cycles here, which is what rules out two edges sharing three
    /// or more vertices.
    pub fn is_cactus(&self) -> bool {
        if self.n == 0 || self.components().len() != 1 {
            return false;
        }
        let cycles = find_cycles(self, self.edges.len());
        cactus_cycles_ok(self, &cycles)
    }

    /// Number of distinct cycles (edge-set identity).
    pub fn cycle_count(&self) -> usize {
        find_cycles(self, self.edges.len()).len()
    }
}

pub(crate) fn cactus_cycles_ok(h: &Hypergraph, cycles: &[CycleRecord]) -> bool {
    if cycles.iter().any(|c| c.multiplicity > 1) {
        return false;
    }
    let supports: Vec<VertexSet> = cycles.iter().map(|c| c.support(h)).collect();
    for i in 0..supports.len() {
        for j in i + 1..supports.len() {
            let mut shared = supports[i].clone();
            shared.retain_common(&supports[j]);
            if shared.len() > 1 {
                return false;
            }
        }
    }
    true
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::to_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 3-graph {{1,2,3},{1,2,4},{1,3,5}} relabelled to 0-based ids.
    fn remark_g() -> Hypergraph {
        Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3], [0, 2, 4]]).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap().validate().is_ok());
        assert!(matches!(
            Hypergraph::new(3, 3, [[0, 1, 2], [0, 1, 2]]),
            Err(Error::DuplicateEdge(_))
        ));
        assert!(matches!(
            Hypergraph::new(3, 3, [vec![0, 1]]),
            Err(Error::NonUniformEdge { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 3, [[0, 1, 1]]),
            Err(Error::NonUniformEdge { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 3, [[0, 1, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn degree_examples() {
        let star = Hypergraph::new(3, 9, [[0, 1, 2], [0, 3, 4], [0, 5, 6], [0, 7, 8]]).unwrap();
        assert_eq!(star.degree(0).unwrap(), 4);
        let single = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert!((0..3).all(|v| single.degree(v).unwrap() == 1));
        assert!(matches!(single.degree(3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn incident_edges_examples() {
        let star = Hypergraph::new(3, 7, [[0, 1, 2], [0, 3, 4], [0, 5, 6]]).unwrap();
        assert_eq!(star.incident_edges(0).unwrap(), vec![0, 1, 2]);
        let iso = Hypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        assert!(iso.incident_edges(3).unwrap().is_empty());
        // vertex "2" of the remark graph is id 1: edges {1,2,3} and {1,2,4}
        let g = remark_g();
        let inc: Vec<&Edge> = g.incident_edges(1).unwrap().into_iter().map(|i| &g.edges()[i]).collect();
        assert_eq!(inc, vec![&Edge::new([0, 1, 2]), &Edge::new([0, 1, 3])]);
    }

    #[test]
    fn delete_edge_examples() {
        let single = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(single.delete_edge(0).unwrap(), Hypergraph::empty(3, 3));
        let two = Hypergraph::new(3, 6, [[0, 1, 2], [3, 4, 5]]).unwrap();
        let d = two.delete_edge(1).unwrap();
        assert_eq!(d.m(), 1);
        assert_eq!(d.isolated_vertices(), vec![3, 4, 5]);
        let g = remark_g();
        let idx = g.edge_index(&Edge::new([0, 2, 4])).unwrap();
        assert_eq!(
            g.delete_edge(idx).unwrap(),
            Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3]]).unwrap()
        );
        assert!(matches!(g.delete_edge(3), Err(Error::BadEdgeIndex { .. })));
    }

    #[test]
    fn remove_edge_closed_examples() {
        let single = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(single.remove_edge_closed(0).unwrap(), Hypergraph::empty(3, 0));
        let two = Hypergraph::new(3, 6, [[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(two.remove_edge_closed(0).unwrap(), Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap());
        let g = remark_g();
        assert_eq!(g.remove_edge_closed(0).unwrap(), Hypergraph::empty(3, 2));
        assert!(g.remove_edge_closed(9).is_err());
    }

    #[test]
    fn connectivity_examples() {
        assert!(Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap().is_connected().unwrap());
        assert!(!Hypergraph::new(3, 6, [[0, 1, 2], [3, 4, 5]]).unwrap().is_connected().unwrap());
        assert!(remark_g().is_connected().unwrap());
        assert!(matches!(Hypergraph::empty(3, 0).is_connected(), Err(Error::EmptyVertexSet)));
        assert!(!Hypergraph::new(3, 4, [[0, 1, 2]]).unwrap().is_connected().unwrap());
    }

    #[test]
    fn linear_and_cactus_examples() {
        let star = Hypergraph::new(3, 7, [[0, 1, 2], [0, 3, 4], [0, 5, 6]]).unwrap();
        assert!(star.is_linear() && star.is_cactus() && star.is_k_tree());
        let two_cycle = Hypergraph::new(3, 4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert!(!two_cycle.is_linear());
        assert!(two_cycle.is_cactus());
        // two 2-cycles meeting at the apex 0
        let h42 = Hypergraph::new(3, 7, [[0, 1, 2], [0, 1, 3], [0, 4, 5], [0, 4, 6]]).unwrap();
        assert!(h42.is_cactus());
        assert_eq!(h42.cycle_count(), 2);
        // two 4-edges sharing three vertices
        let thick = Hypergraph::new(4, 5, [[0, 1, 2, 3], [0, 1, 2, 4]]).unwrap();
        assert!(!thick.is_cactus());
        // three 3-edges through a common pair
        let book = Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3], [0, 1, 4]]).unwrap();
        assert!(!book.is_cactus());
        let linear_triangle = Hypergraph::new(3, 6, [[0, 1, 3], [1, 2, 4], [0, 2, 5]]).unwrap();
        assert!(linear_triangle.is_linear() && linear_triangle.is_cactus());
    }

    #[test]
    fn pendant_edge_examples() {
        let star = Hypergraph::new(3, 7, [[0, 1, 2], [0, 3, 4], [0, 5, 6]]).unwrap();
        assert_eq!(star.pendant_edges(), vec![0, 1, 2]);
        let two_cycle = Hypergraph::new(3, 4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert!(two_cycle.pendant_edges().is_empty());
        let h31 = Hypergraph::new(3, 6, [[0, 1, 2], [0, 1, 3], [0, 4, 5]]).unwrap();
        assert_eq!(h31.pendant_edges().len(), 1);
    }

    #[test]
    fn components_and_strip() {
        let h = Hypergraph::new(2, 6, [[4, 5], [0, 2]]).unwrap();
        assert_eq!(h.components(), vec![vec![0, 2], vec![1], vec![3], vec![4, 5]]);
        let (s, dropped) = h.strip_isolated();
        assert_eq!(dropped, 2);
        assert_eq!(s, Hypergraph::new(2, 4, [[0, 1], [2, 3]]).unwrap());
    }
}
