//! Exhaustive enumeration of small cacti and small `k`-graphs up to
//! isomorphism.
//!
//! Cacti are grown one edge at a time from a single edge. Each new edge meets
//! the current vertex set in at least one vertex and brings fresh vertices
//! for the rest, so every level is connected and covers its vertices. Being a
//! (linear) cactus with at most `t` cycles is closed under taking connected
//! subgraphs, so levels are pruned by those predicates and deduplicated by
//! canonical form.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::random::k_subsets;
use crate::error::{Error, Result};
use crate::hgraph::{canonical_form, text, Edge, Hypergraph};
use crate::rootfind::{default_eps, largest_matching_root, LambdaValue};

/// Largest vertex count a census may reach.
pub const CENSUS_VERTEX_BUDGET: usize = 14;
/// Largest edge count a census may reach.
pub const CENSUS_EDGE_BUDGET: usize = 8;
/// Largest `C(n, k)` accepted by [`enumerate_k_graphs`].
pub const SPANNING_EDGE_BUDGET: usize = 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CensusParams {
    pub k: usize,
    pub m: usize,
    pub t: usize,
    pub linear: bool,
}

/// `Ca_k(m, t)` or, when `linear`, `LCa_k(m, t)`: members in canonical form,
/// sorted, with their largest matching roots.
#[derive(Clone, Debug)]
pub struct CactusCensus {
    pub params: CensusParams,
    pub members: Vec<Hypergraph>,
    pub lambdas: Vec<LambdaValue>,
}

impl CactusCensus {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// One JSON object per member.
    pub fn json_lines(&self) -> Vec<Value> {
        self.members
            .iter()
            .zip(&self.lambdas)
            .enumerate()
            .map(|(i, (h, l))| {
                json!({
                    "index": i,
                    "k": self.params.k,
                    "m": self.params.m,
                    "t": self.params.t,
                    "linear": self.params.linear,
                    "graph": text::to_text(h),
                    "lambda": l.to_json(),
                })
            })
            .collect()
    }
}

/// Most vertices a connected `k`-graph with `m >= 1` edges can have.
pub fn max_vertices(k: usize, m: usize) -> usize {
    k + m.saturating_sub(1) * (k - 1)
}

fn admissible(h: &Hypergraph, p: &CensusParams) -> bool {
    (!p.linear || h.is_linear()) && h.is_cactus() && h.cycle_count() <= p.t
}

fn matches(h: &Hypergraph, p: &CensusParams) -> bool {
    (!p.linear || h.is_linear()) && h.is_cactus() && h.cycle_count() == p.t
}

fn check_budget(k: usize, m: usize) -> Result<()> {
    if k < 2 || m == 0 {
        return Err(Error::BadParams(format!("census needs k >= 2 and m >= 1, got k = {k}, m = {m}")));
    }
    let n = max_vertices(k, m);
    if n > CENSUS_VERTEX_BUDGET || m > CENSUS_EDGE_BUDGET {
        return Err(Error::SizeLimitExceeded(format!(
            "census with k = {k}, m = {m} may reach {n} vertices (budget {CENSUS_VERTEX_BUDGET} vertices, {CENSUS_EDGE_BUDGET} edges)"
        )));
    }
    Ok(())
}

/// Children of `h`: one extra edge meeting `V(h)` in `s >= 1` vertices, the
/// other `k - s` fresh.
fn extensions(h: &Hypergraph) -> Vec<Hypergraph> {
    let (k, n) = (h.k(), h.n());
    let mut out = Vec::new();
    for s in 1..=k.min(n) {
        for old in k_subsets(n, s) {
            let e = Edge::new(old.into_iter().chain(n..n + k - s));
            if h.contains_edge(&e) {
                continue;
            }
            let g = h.with_isolated(k - s).add_edge(e.vertices().iter().copied()).expect("fresh edge");
            out.push(g);
        }
    }
    out
}

pub fn enumerate_census(k: usize, m: usize, t: usize, linear: bool) -> Result<CactusCensus> {
    check_budget(k, m)?;
    let params = CensusParams { k, m, t, linear };
    let mut level: BTreeSet<Hypergraph> = BTreeSet::from([canonical_form(&Hypergraph::new(k, k, [Vec::from_iter(0..k)])?)?]);
    for _ in 1..m {
        let next: Vec<Vec<Hypergraph>> = level
            .par_iter()
            .map(|h| {
                extensions(h)
                    .into_iter()
                    .filter(|g| admissible(g, &params))
                    .map(|g| canonical_form(&g).expect("within the canonical budget"))
                    .collect()
            })
            .collect();
        level = next.into_iter().flatten().collect();
    }
    let members: Vec<Hypergraph> = level.into_iter().filter(|h| matches(h, &params)).collect();
    let eps = default_eps();
    let lambdas = members
        .par_iter()
        .map(|h| largest_matching_root(h, &eps).expect("census members have edges"))
        .collect();
    Ok(CactusCensus { params, members, lambdas })
}

/// Every connected `k`-graph with `m` edges and no isolated vertex, found by
/// trying all `m`-sets of `k`-subsets of `0..N` whose union is an initial
/// segment `0..n`; canonical forms, sorted.
pub fn naive_connected(k: usize, m: usize) -> Result<Vec<Hypergraph>> {
    check_budget(k, m)?;
    let n_max = max_vertices(k, m);
    let all: Vec<Edge> = k_subsets(n_max, k).into_iter().map(Edge::new).collect();
    let mut found = BTreeSet::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    fn rec(all: &[Edge], k: usize, m: usize, start: usize, chosen: &mut Vec<usize>, found: &mut BTreeSet<Hypergraph>) {
        if chosen.len() == m {
            let mut cover = BTreeSet::new();
            for &i in chosen.iter() {
                cover.extend(all[i].vertices().iter().copied());
            }
            let n = cover.len();
            if cover.iter().next_back() != Some(&(n - 1)) {
                return;
            }
            let h = Hypergraph::new(k, n, chosen.iter().map(|&i| all[i].vertices().to_vec())).expect("distinct subsets");
            if h.is_connected().unwrap_or(false) {
                found.insert(canonical_form(&h).expect("small"));
            }
            return;
        }
        for i in start..all.len() {
            chosen.push(i);
            rec(all, k, m, i + 1, chosen, found);
            chosen.pop();
        }
    }
    rec(&all, k, m, 0, &mut chosen, &mut found);
    Ok(found.into_iter().collect())
}

/// Naive census: [`naive_connected`] filtered by the census predicates.
pub fn naive_census(k: usize, m: usize, t: usize, linear: bool) -> Result<Vec<Hypergraph>> {
    let p = CensusParams { k, m, t, linear };
    Ok(naive_connected(k, m)?.into_iter().filter(|h| matches(h, &p)).collect())
}

/// All `k`-graphs on exactly `n` labelled-up-to-isomorphism vertices
/// (isolated vertices allowed), grown by adding one edge at a time.
pub fn enumerate_k_graphs(k: usize, n: usize) -> Result<Vec<Hypergraph>> {
    if k < 2 || n < k {
        return Err(Error::BadParams(format!("need n >= k >= 2, got k = {k}, n = {n}")));
    }
    let slots: Vec<Vec<usize>> = k_subsets(n, k);
    if slots.len() > SPANNING_EDGE_BUDGET {
        return Err(Error::SizeLimitExceeded(format!(
            "{} possible edges on {n} vertices (budget {SPANNING_EDGE_BUDGET})",
            slots.len()
        )));
    }
    let mut level: BTreeSet<Hypergraph> = BTreeSet::from([Hypergraph::empty(k, n)]);
    let mut all: Vec<Hypergraph> = level.iter().cloned().collect();
    while !level.is_empty() {
        let next: Vec<Vec<Hypergraph>> = level
            .par_iter()
            .map(|h| {
                slots
                    .iter()
                    .filter(|s| !h.contains_edge(&Edge::new(s.iter().copied())))
                    .map(|s| canonical_form(&h.add_edge(s.iter().copied()).expect("absent edge")).expect("small"))
                    .collect()
            })
            .collect();
        level = next.into_iter().flatten().collect();
        all.extend(level.iter().cloned());
    }
    Ok(all)
}
