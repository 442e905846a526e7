use std::collections::{BTreeMap, BTreeSet};

use super::{Hypergraph, VertexId, VertexSet};

/// Alternating vertex/edge sequence `(v_0, e_1, v_1, ..., e_l, v_l)`.
/// `edges` holds edge indices into the owning hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WalkSequence {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalkKind {
    Path,
    Cycle,
}

impl WalkSequence {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Classifies the sequence against `h`; `None` if it is neither a path
    /// nor a cycle.
    pub fn kind(&self, h: &Hypergraph) -> Option<WalkKind> {
        let l = self.edges.len();
        if self.vertices.len() != l + 1 {
            return None;
        }
        let distinct_edges: BTreeSet<_> = self.edges.iter().collect();
        if distinct_edges.len() != l {
            return None;
        }
        for i in 0..l {
            let e = h.edges().get(self.edges[i])?;
            if !e.contains(self.vertices[i]) || !e.contains(self.vertices[i + 1]) {
                return None;
            }
        }
        let all: BTreeSet<_> = self.vertices.iter().collect();
        if all.len() == l + 1 {
            return Some(WalkKind::Path);
        }
        let tail: BTreeSet<_> = self.vertices[1..].iter().collect();
        if l >= 2 && tail.len() == l && self.vertices[0] == self.vertices[l] {
            return Some(WalkKind::Cycle);
        }
        None
    }
}

/// A cycle identified by its edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleRecord {
    /// Sorted edge indices.
    pub edge_set: Vec<usize>,
    pub length: usize,
    /// Number of distinct cycles (up to rotation and reversal) realised on
    /// this edge set.
    pub multiplicity: usize,
    /// One realising sequence.
    pub witness: WalkSequence,
}

impl CycleRecord {
    /// `V(C)`: the union of the cycle's edges.
    pub fn support(&self, h: &Hypergraph) -> VertexSet {
        let mut s = VertexSet::with_capacity(h.n());
        for &i in &self.edge_set {
            for &v in h.edges()[i].vertices() {
                s.insert(v);
            }
        }
        s
    }
}

/// Rotation/reversal-invariant key of a closed sequence given as pairs
/// `(v_{i-1}, e_i)`.
fn cyclic_key(pairs: &[(VertexId, usize)]) -> Vec<(VertexId, usize)> {
    let l = pairs.len();
    let mut best: Option<Vec<(VertexId, usize)>> = None;
    // reversed traversal: (v_0, e_l), (v_{l-1}, e_{l-1}), ..., (v_1, e_1)
    let mut rev = Vec::with_capacity(l);
    rev.push((pairs[0].0, pairs[l - 1].1));
    for i in (1..l).rev() {
        rev.push((pairs[i].0, pairs[i - 1].1));
    }
    for seq in [pairs, &rev[..]] {
        for r in 0..l {
            let cand: Vec<_> = seq[r..].iter().chain(&seq[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// Rotation-normalised traversals seen for one edge set.
type Rotations = BTreeSet<Vec<(VertexId, usize)>>;

/// All distinct cycles of length at most `max_len`, keyed by edge set and
/// sorted by `(length, edge_set)`.
pub fn find_cycles(h: &Hypergraph, max_len: usize) -> Vec<CycleRecord> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e.vertices() {
            incident[v].push(i);
        }
    }
    let mut found: BTreeMap<Vec<usize>, (Rotations, WalkSequence)> = BTreeMap::new();
    let mut st = Search {
        h,
        incident: &incident,
        max_len,
        on_path: vec![false; h.n()],
        used: vec![false; h.m()],
        verts: Vec::new(),
        edges: Vec::new(),
        found: &mut found,
    };
    for v0 in 0..h.n() {
        st.verts.clear();
        st.verts.push(v0);
        st.dfs(v0);
    }
    let mut out: Vec<CycleRecord> = found
        .into_iter()
        .map(|(edge_set, (keys, witness))| CycleRecord {
            length: edge_set.len(),
            edge_set,
            multiplicity: keys.len(),
            witness,
        })
        .collect();
    out.sort_by(|a, b| (a.length, &a.edge_set).cmp(&(b.length, &b.edge_set)));
    out
}

type Found = BTreeMap<Vec<usize>, (BTreeSet<Vec<(VertexId, usize)>>, WalkSequence)>;

struct Search<'a> {
    h: &'a Hypergraph,
    incident: &'a [Vec<usize>],
    max_len: usize,
    on_path: Vec<bool>,
    used: Vec<bool>,
    verts: Vec<VertexId>,
    edges: Vec<usize>,
    found: &'a mut Found,
}

impl Search<'_> {
    fn dfs(&mut self, cur: VertexId) {
        if self.edges.len() >= self.max_len {
            return;
        }
        let v0 = self.verts[0];
        for &ei in &self.incident[cur] {
            if self.used[ei] {
                continue;
            }
            self.used[ei] = true;
            self.edges.push(ei);
            for &w in self.h.edges()[ei].vertices() {
                if w == cur {
                    continue;
                }
                if w == v0 {
                    if self.edges.len() >= 2 {
                        self.record();
                    }
                } else if !self.on_path[w] && self.edges.len() < self.max_len {
                    self.on_path[w] = true;
                    self.verts.push(w);
                    self.dfs(w);
                    self.verts.pop();
                    self.on_path[w] = false;
                }
            }
            self.edges.pop();
            self.used[ei] = false;
        }
    }

    fn record(&mut self) {
        let pairs: Vec<(VertexId, usize)> = self.verts.iter().copied().zip(self.edges.iter().copied()).collect();
        let key = cyclic_key(&pairs);
        let mut edge_set = self.edges.clone();
        edge_set.sort_unstable();
        let mut verts = self.verts.clone();
        verts.push(self.verts[0]);
        let witness = WalkSequence {
            vertices: verts,
            edges: self.edges.clone(),
        };
        self.found
            .entry(edge_set)
            .or_insert_with(|| (BTreeSet::new(), witness))
            .0
            .insert(key);
    }
}
