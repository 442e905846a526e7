//! Conflict-free walks and the `k`-walk-tree.
//!
//! A walk `(v_0, e_1, v_1, ..., e_l, v_l)` carries per-step conflict sets
//! `C_i = {w in e_i \ {v_(i-1), v_i} : w < v_i} + {v_(i-1)}` under a vertex
//! order `<`, and is conflict-free when each `e_i` with `i >= 2` avoids every
//! earlier `C_j`. Whether `e` may extend a walk depends only on `e`, so the
//! tree edges are the sets `{P} + {P e w : w in e \ end(P)}`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::hgraph::{Hypergraph, VertexId, VertexSet};

/// Default cap on the number of enumerated walks.
pub const DEFAULT_WALK_CAP: usize = 50_000;

/// A linear order on the vertices; `rank[v]` is the position of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    rank: Vec<usize>,
}

impl VertexOrder {
    pub fn natural(n: usize) -> Self {
        VertexOrder { rank: (0..n).collect() }
    }

    /// The order listing `sequence[0] < sequence[1] < ...`.
    pub fn from_sequence(sequence: &[VertexId]) -> Result<Self> {
        let n = sequence.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &v) in sequence.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::BadParams(format!("order {sequence:?} is not a permutation of 0..{n}")));
            }
            rank[v] = pos;
        }
        Ok(VertexOrder { rank })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn precedes(&self, a: VertexId, b: VertexId) -> bool {
        self.rank[a] < self.rank[b]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictFreeWalk {
    pub vertices: Vec<VertexId>,
    /// Edge indices into the source hypergraph.
    pub edges: Vec<usize>,
    /// `C_1, ..., C_l`, each sorted.
    pub conflicts: Vec<Vec<VertexId>>,
}

impl ConflictFreeWalk {
    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// `T(H, <, u)`: vertex `i` of `tree` is `walks[i]`; the root `(u)` is 0.
#[derive(Clone, Debug)]
pub struct WalkTree {
    pub tree: Hypergraph,
    pub walks: Vec<ConflictFreeWalk>,
}

struct Enumeration {
    walks: Vec<ConflictFreeWalk>,
    /// `(parent, children)` per extension.
    groups: Vec<(usize, Vec<usize>)>,
}

fn enumerate(h: &Hypergraph, order: &VertexOrder, u: VertexId, cap: usize) -> Result<Enumeration> {
    if u >= h.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: h.n() });
    }
    if order.len() != h.n() {
        return Err(Error::BadParams(format!("order covers {} vertices, graph has {}", order.len(), h.n())));
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e.vertices() {
            incident[v].push(i);
        }
    }
    let mut walks = vec![ConflictFreeWalk {
        vertices: vec![u],
        edges: Vec::new(),
        conflicts: Vec::new(),
    }];
    // union of the walk's conflict sets
    let mut blocked = vec![VertexSet::with_capacity(h.n())];
    let mut groups = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(p) = queue.pop_front() {
        let end = walks[p].end();
        for &ei in &incident[end] {
            let e = &h.edges()[ei];
            if e.vertices().iter().any(|&w| blocked[p].contains(w)) {
                continue;
            }
            if walks.len() + e.len() - 1 > cap {
                return Err(Error::CapExceeded(cap));
            }
            let mut children = Vec::with_capacity(e.len() - 1);
            for &w in e.vertices().iter().filter(|&&w| w != end) {
                let mut c: Vec<VertexId> = e
                    .vertices()
                    .iter()
                    .copied()
                    .filter(|&x| x != end && x != w && order.precedes(x, w))
                    .collect();
                c.push(end);
                c.sort_unstable();
                let mut b = blocked[p].clone();
                for &x in &c {
                    b.insert(x);
                }
                let parent = &walks[p];
                let mut child = parent.clone();
                child.vertices.push(w);
                child.edges.push(ei);
                child.conflicts.push(c);
                children.push(walks.len());
                queue.push_back(walks.len());
                walks.push(child);
                blocked.push(b);
            }
            groups.push((p, children));
        }
    }
    Ok(Enumeration { walks, groups })
}

/// All conflict-free walks from `u`, in breadth-first order.
pub fn enumerate_walks(h: &Hypergraph, order: &VertexOrder, u: VertexId, cap: usize) -> Result<Vec<ConflictFreeWalk>> {
    Ok(enumerate(h, order, u, cap)?.walks)
}

pub fn build_walk_tree(h: &Hypergraph, order: &VertexOrder, u: VertexId, cap: usize) -> Result<WalkTree> {
    let en = enumerate(h, order, u, cap)?;
    let edges: Vec<Vec<VertexId>> = en
        .groups
        .into_iter()
        .map(|(p, children)| std::iter::once(p).chain(children).collect())
        .collect();
    let tree = Hypergraph::new(h.k(), en.walks.len(), edges)?;
    Ok(WalkTree { tree, walks: en.walks })
}
