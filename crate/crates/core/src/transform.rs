//! The `(u, v)`-shift, edge moving, and star joins.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hgraph::{Edge, Hypergraph, VertexId};

/// The pair `(u, v)` of a shift: `v` is replaced by `u` where legal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShiftSpec {
    pub u: VertexId,
    pub v: VertexId,
}

impl ShiftSpec {
    pub fn new(u: VertexId, v: VertexId) -> Result<Self> {
        if u == v {
            return Err(Error::BadParams(format!("shift needs two distinct vertices, got {u} twice")));
        }
        Ok(ShiftSpec { u, v })
    }
}

/// `(e \ {v}) + u` when `v` is in `e`, `u` is not, and the result is not
/// already an edge; otherwise `e`.
pub fn shift_edge(h: &Hypergraph, e: &Edge, s: ShiftSpec) -> Result<Edge> {
    if !h.contains_edge(e) {
        return Err(Error::EdgeNotInGraph(e.vertices().to_vec()));
    }
    Ok(shifted(h, e, s))
}

fn shifted(h: &Hypergraph, e: &Edge, s: ShiftSpec) -> Edge {
    if e.contains(s.v) && !e.contains(s.u) {
        let t = e.replace(s.v, s.u);
        if !h.contains_edge(&t) {
            return t;
        }
    }
    e.clone()
}

/// Applies [`shift_edge`] to every edge, all guards checked against the
/// original edge set.
pub fn shift_hypergraph(h: &Hypergraph, s: ShiftSpec) -> Result<Hypergraph> {
    for x in [s.u, s.v] {
        if x >= h.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: h.n() });
        }
    }
    if s.u == s.v {
        return Err(Error::BadParams("shift needs two distinct vertices".into()));
    }
    let edges: Vec<Vec<VertexId>> = h.edges().iter().map(|e| shifted(h, e, s).vertices().to_vec()).collect();
    Hypergraph::new(h.k(), h.n(), edges)
}

/// All pairs `(e, f)` of edge indices with `e` at `u`, `f` at `v`, `e` and
/// `f` disjoint and `S_uv(f)` not an edge at `u`.
pub fn shift_witnesses(h: &Hypergraph, s: ShiftSpec) -> Vec<(usize, usize)> {
    let (Ok(at_u), Ok(at_v)) = (h.incident_edges(s.u), h.incident_edges(s.v)) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for &ei in &at_u {
        for &fi in &at_v {
            let (e, f) = (&h.edges()[ei], &h.edges()[fi]);
            if !e.is_disjoint(f) {
                continue;
            }
            let sf = shifted(h, f, s);
            if !(sf.contains(s.u) && h.contains_edge(&sf)) {
                out.push((ei, fi));
            }
        }
    }
    out
}

/// The first of [`shift_witnesses`].
///
/// Such a pair does not by itself force `lambda(H) < lambda(S_uv(H))`, even
/// when `S_uv(H)` and `H` are not isomorphic: see
/// [`unshadowed_shift_witness`].
pub fn strict_shift_witness(h: &Hypergraph, s: ShiftSpec) -> Option<(usize, usize)> {
    shift_witnesses(h, s).into_iter().next()
}

/// Whether some edge at `v` would be shifted onto `e` once `e` is deleted,
/// so that `S_uv(H \ e)` differs from `S_uv(H) \ e`.
pub fn is_shadowed(h: &Hypergraph, s: ShiftSpec, e: &Edge) -> bool {
    h.edges()
        .iter()
        .any(|g| g.contains(s.v) && !g.contains(s.u) && g.replace(s.v, s.u) == *e)
}

/// A pair from [`shift_witnesses`] whose edge `e` is not shadowed and whose
/// edge `f` really moves. Then `S_uv(H) - e` is a proper subgraph of `H - e`,
/// which for connected `H` not isomorphic to `S_uv(H)` forces a strict
/// increase.
///
/// ```
/// use hypermatch::transform::{strict_shift_witness, unshadowed_shift_witness, ShiftSpec};
/// use hypermatch::Hypergraph;
///
/// // {4,5,6} would move onto {0,5,6}, so the only disjoint pair is shadowed
/// let h = Hypergraph::new(3, 7, [[0, 1, 5], [0, 2, 6], [0, 5, 6], [1, 2, 4], [1, 3, 6], [4, 5, 6]]).unwrap();
/// let s = ShiftSpec::new(0, 4).unwrap();
/// assert!(strict_shift_witness(&h, s).is_some());
/// assert!(unshadowed_shift_witness(&h, s).is_none());
///
/// // {0,3,6} is disjoint from {1,2,4} but stays put
/// let h = Hypergraph::new(3, 7, [[0, 2, 6], [0, 3, 6], [0, 5, 6], [1, 2, 4], [1, 5, 6], [3, 4, 6]]).unwrap();
/// let s = ShiftSpec::new(2, 3).unwrap();
/// assert!(strict_shift_witness(&h, s).is_some());
/// assert!(unshadowed_shift_witness(&h, s).is_none());
/// ```
pub fn unshadowed_shift_witness(h: &Hypergraph, s: ShiftSpec) -> Option<(usize, usize)> {
    shift_witnesses(h, s)
        .into_iter()
        .find(|&(ei, fi)| {
            let f = &h.edges()[fi];
            !is_shadowed(h, s, &h.edges()[ei]) && shifted(h, f, s) != *f
        })
}

/// Moves each edge `e_i` off `v_i` onto `u`: `e_i` becomes `(e_i \ {v_i}) + u`.
/// `moves` holds `(edge index, v_i)` pairs.
pub fn edge_move(h: &Hypergraph, u: VertexId, moves: &[(usize, VertexId)]) -> Result<Hypergraph> {
    if u >= h.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: h.n() });
    }
    let mut moved = vec![false; h.m()];
    let mut new_edges: Vec<Edge> = Vec::with_capacity(moves.len());
    for &(i, v) in moves {
        let e = h.edge(i)?;
        if moved[i] {
            return Err(Error::PreconditionViolated(format!("edge {e} is moved twice")));
        }
        if !e.contains(v) {
            return Err(Error::PreconditionViolated(format!("vertex {v} is not in edge {e}")));
        }
        if e.contains(u) {
            return Err(Error::PreconditionViolated(format!("target vertex {u} is already in edge {e}")));
        }
        moved[i] = true;
        new_edges.push(e.replace(v, u));
    }
    let mut all: BTreeSet<Edge> = h
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| !moved[i])
        .map(|(_, e)| e.clone())
        .collect();
    for e in new_edges {
        if !all.insert(e.clone()) {
            return Err(Error::MultipleEdgeCreated(e.vertices().to_vec()));
        }
    }
    Hypergraph::new(h.k(), h.n(), all.into_iter().map(|e| e.vertices().to_vec()))
}

/// `host(u_1, ..., u_s) * (H_1(v_1), ..., H_s(v_s))`: each part's root
/// `v_i` is identified with the host vertex `u_i`. Attachments may repeat.
#[derive(Clone, Debug)]
pub struct StarJoinSpec {
    pub host: Hypergraph,
    pub attachments: Vec<VertexId>,
    pub parts: Vec<(Hypergraph, VertexId)>,
}

/// Result of a star join. Host vertices keep their ids; `part_maps[i][w]` is
/// the new id of vertex `w` of part `i`.
#[derive(Clone, Debug)]
pub struct JoinResult {
    pub graph: Hypergraph,
    pub part_maps: Vec<Vec<VertexId>>,
}

pub fn star_join(spec: &StarJoinSpec) -> Result<JoinResult> {
    let host = &spec.host;
    if spec.attachments.len() != spec.parts.len() {
        return Err(Error::BadParams(format!(
            "{} attachment vertices for {} parts",
            spec.attachments.len(),
            spec.parts.len()
        )));
    }
    let mut n = host.n();
    let mut edges: BTreeSet<Edge> = host.edges().iter().cloned().collect();
    let mut part_maps = Vec::with_capacity(spec.parts.len());
    for (&u, (part, root)) in spec.attachments.iter().zip(&spec.parts) {
        if part.k() != host.k() {
            return Err(Error::BadParams(format!("cannot join a {}-graph onto a {}-graph", part.k(), host.k())));
        }
        if u >= host.n() {
            return Err(Error::VertexOutOfRange { vertex: u, n: host.n() });
        }
        if *root >= part.n() {
            return Err(Error::VertexOutOfRange { vertex: *root, n: part.n() });
        }
        let mut map = vec![0; part.n()];
        for (w, slot) in map.iter_mut().enumerate() {
            if w == *root {
                *slot = u;
            } else {
                *slot = n;
                n += 1;
            }
        }
        for e in part.edges() {
            let e = Edge::new(e.vertices().iter().map(|&w| map[w]));
            if !edges.insert(e.clone()) {
                return Err(Error::DuplicateEdgeAfterJoin(e.vertices().to_vec()));
            }
        }
        part_maps.push(map);
    }
    let graph = Hypergraph::new(host.k(), n, edges.into_iter().map(|e| e.vertices().to_vec()))?;
    Ok(JoinResult { graph, part_maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::random::random_connected;
    use crate::hgraph::is_isomorphic;
    use crate::rootfind::{check_preceq, compare_lambda, default_eps, LambdaOrdering};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn remark_g() -> Hypergraph {
        Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3], [0, 2, 4]]).unwrap()
    }

    fn star(k: usize, m: usize) -> Hypergraph {
        Hypergraph::new(k, 1 + m * (k - 1), (0..m).map(|i| {
            let mut e = vec![0];
            e.extend(1 + i * (k - 1)..1 + (i + 1) * (k - 1));
            e
        }))
        .unwrap()
    }

    #[test]
    fn shift_edge_examples() {
        let g = remark_g();
        let s = ShiftSpec::new(1, 2).unwrap();
        assert_eq!(shift_edge(&g, &Edge::new([0, 2, 4]), s).unwrap(), Edge::new([0, 1, 4]));
        assert_eq!(shift_edge(&g, &Edge::new([0, 1, 3]), s).unwrap(), Edge::new([0, 1, 3]));
        assert_eq!(shift_edge(&g, &Edge::new([0, 1, 2]), s).unwrap(), Edge::new([0, 1, 2]));
        assert!(matches!(shift_edge(&g, &Edge::new([2, 3, 4]), s), Err(Error::EdgeNotInGraph(_))));
        assert!(ShiftSpec::new(3, 3).is_err());
    }

    #[test]
    fn shift_hypergraph_examples() {
        let g = remark_g();
        let s = shift_hypergraph(&g, ShiftSpec { u: 1, v: 2 }).unwrap();
        assert_eq!(s, Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3], [0, 1, 4]]).unwrap());
        // no edge contains v
        let h = Hypergraph::new(3, 6, [[0, 1, 2], [0, 3, 4]]).unwrap();
        assert_eq!(shift_hypergraph(&h, ShiftSpec { u: 0, v: 5 }).unwrap(), h);
        // P3 shifted end to end is blocked by the guard
        let p3 = Hypergraph::new(2, 3, [[0, 1], [1, 2]]).unwrap();
        assert_eq!(shift_hypergraph(&p3, ShiftSpec { u: 0, v: 2 }).unwrap(), p3);
        // P4 shifted end to end: a triangle plus an isolated vertex
        let p4 = Hypergraph::new(2, 4, [[0, 1], [1, 2], [2, 3]]).unwrap();
        let t = shift_hypergraph(&p4, ShiftSpec { u: 0, v: 3 }).unwrap();
        assert_eq!(t, Hypergraph::new(2, 4, [[0, 1], [0, 2], [1, 2]]).unwrap());
        assert_eq!(t.isolated_vertices(), vec![3]);
        assert!(matches!(shift_hypergraph(&p4, ShiftSpec { u: 0, v: 9 }), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn edge_move_examples() {
        let e = Hypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        assert_eq!(edge_move(&e, 3, &[(0, 2)]).unwrap(), Hypergraph::new(3, 4, [[0, 1, 3]]).unwrap());
        let h = Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert!(matches!(edge_move(&h, 3, &[(0, 2)]), Err(Error::MultipleEdgeCreated(_))));
        assert!(matches!(edge_move(&h, 1, &[(0, 2)]), Err(Error::PreconditionViolated(_))));
        assert!(matches!(edge_move(&h, 4, &[(0, 3)]), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn star_join_examples() {
        let s1 = star(3, 1);
        let joined = star_join(&StarJoinSpec {
            host: s1.clone(),
            attachments: vec![0],
            parts: vec![(s1.clone(), 0)],
        })
        .unwrap();
        assert_eq!(joined.graph, star(3, 2));
        // edgeless part
        let j = star_join(&StarJoinSpec {
            host: s1.clone(),
            attachments: vec![1],
            parts: vec![(Hypergraph::empty(3, 1), 0)],
        })
        .unwrap();
        assert_eq!(j.graph, s1);
        // K4 with a pendant edge
        let k4 = Hypergraph::new(2, 4, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]).unwrap();
        let j = star_join(&StarJoinSpec {
            host: k4,
            attachments: vec![0],
            parts: vec![(star(2, 1), 0)],
        })
        .unwrap();
        assert_eq!((j.graph.n(), j.graph.m()), (5, 7));
        assert_eq!(j.part_maps, vec![vec![0, 4]]);
    }

    #[test]
    fn consolidation_is_an_edge_move() {
        // walk-tree-style host path 0-1-2 with one edge hung at 0 and one at 2;
        // moving the edge at 2 over to 0 gives the join at (0, 0)
        let host = Hypergraph::new(2, 3, [[0, 1], [1, 2]]).unwrap();
        let spread = star_join(&StarJoinSpec {
            host: host.clone(),
            attachments: vec![0, 2],
            parts: vec![(star(2, 1), 0), (star(2, 1), 0)],
        })
        .unwrap();
        let stacked = star_join(&StarJoinSpec {
            host,
            attachments: vec![0, 0],
            parts: vec![(star(2, 1), 0), (star(2, 1), 0)],
        })
        .unwrap();
        let idx = spread.graph.edge_index(&Edge::new([2, 4])).unwrap();
        assert_eq!(edge_move(&spread.graph, 0, &[(idx, 2)]).unwrap(), stacked.graph);
    }

    fn random_shift(seed: u64, k: usize, m: usize) -> (Hypergraph, ShiftSpec) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_connected(&mut rng, k, m);
        let u = rng.gen_range(0..h.n());
        let mut v = rng.gen_range(0..h.n() - 1);
        if v >= u {
            v += 1;
        }
        (h, ShiftSpec { u, v })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn shift_keeps_edge_count_and_raises_lambda(seed in any::<u64>(), k in 2usize..=4, m in 1usize..=6) {
            let (h, s) = random_shift(seed, k, m);
            let t = shift_hypergraph(&h, s).unwrap();
            prop_assert_eq!(t.m(), h.m());
            let c = compare_lambda(&h, &t, &default_eps()).unwrap();
            prop_assert!(c != LambdaOrdering::Gt);
            prop_assert!(check_preceq(&h, &t).unwrap().holds());
            if unshadowed_shift_witness(&h, s).is_some() && !is_isomorphic(&h, &t).unwrap() {
                prop_assert_eq!(c, LambdaOrdering::Lt);
            }
        }
    }

    #[test]
    fn shadowed_witness_does_not_force_strictness() {
        let h = Hypergraph::new(3, 7, [[0, 1, 5], [0, 2, 6], [0, 5, 6], [1, 2, 4], [1, 3, 6], [4, 5, 6]]).unwrap();
        let s = ShiftSpec::new(0, 4).unwrap();
        let t = shift_hypergraph(&h, s).unwrap();
        assert!(h.is_connected().unwrap() && !is_isomorphic(&h, &t).unwrap());
        assert!(strict_shift_witness(&h, s).is_some());
        assert_eq!(crate::matching_polynomial(&h), crate::matching_polynomial(&t));
        assert_eq!(compare_lambda(&h, &t, &default_eps()).unwrap(), LambdaOrdering::EqCertified);
    }

    #[test]
    fn unmoved_witness_does_not_force_strictness() {
        let h = Hypergraph::new(3, 7, [[0, 2, 6], [0, 3, 6], [0, 5, 6], [1, 2, 4], [1, 5, 6], [3, 4, 6]]).unwrap();
        let s = ShiftSpec::new(2, 3).unwrap();
        let t = shift_hypergraph(&h, s).unwrap();
        assert!(h.is_connected().unwrap() && !is_isomorphic(&h, &t).unwrap());
        assert_eq!(shift_witnesses(&h, s), vec![(3, 1)]);
        let e = h.edge_index(&Edge::new([1, 2, 4])).unwrap();
        let te = t.edge_index(&Edge::new([1, 2, 4])).unwrap();
        assert_eq!(h.remove_edge_closed(e).unwrap(), t.remove_edge_closed(te).unwrap());
        assert_eq!(compare_lambda(&h, &t, &default_eps()).unwrap(), LambdaOrdering::EqCertified);
    }
}
