//! Verification drivers: exhaustive checks over censuses and seeded
//! randomized checks over generated instances.
//!
//! Each driver returns a [`VerificationReport`]. Randomized drivers give
//! instance `i` its own ChaCha stream of the seed, so results do not depend
//! on the number of worker threads.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::census::{enumerate_census, enumerate_k_graphs, CactusCensus};
use super::random::{random_connected, random_k_tree, random_permutation};
use crate::constructions::{complete_plus_star, extremal_h, extremal_l, k_star};
use crate::error::{Error, Result};
use crate::hgraph::{canonical_form, is_isomorphic, text, Edge, Hypergraph, VertexId};
use crate::poly::IntPoly;
use crate::rootfind::{
    check_preceq, compare_values, default_eps, largest_matching_root, LambdaOrdering, LambdaValue, Preceq,
};
use crate::spectral::{spectral_radius, DEFAULT_MAX_ITER, DEFAULT_TOL};
use crate::transform::{
    is_shadowed, shift_hypergraph, star_join, strict_shift_witness, unshadowed_shift_witness, ShiftSpec, StarJoinSpec,
};
use crate::walktree::{build_walk_tree, VertexOrder, DEFAULT_WALK_CAP};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Largest allowed `|rho(T) - lambda(H)|` for walk trees.
pub const WALK_TREE_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Confirmed,
    Counterexample(Value),
    Undecided(Value),
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: Value,
    /// Instances actually checked.
    pub instances: usize,
    /// Whether the parameters fall inside the statement's hypothesis.
    pub hypothesis_met: bool,
    #[serde(flatten)]
    pub status: Status,
    pub details: Value,
}

impl VerificationReport {
    pub fn is_confirmed(&self) -> bool {
        self.status == Status::Confirmed
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

enum Check {
    Pass,
    Skip,
    Fail(Value),
    Unknown(Value),
}

fn report(theorem: &str, params: Value, checks: Vec<Check>, details: Value) -> VerificationReport {
    let instances = checks.iter().filter(|c| !matches!(c, Check::Skip)).count();
    let mut undecided = None;
    let mut status = Status::Confirmed;
    for c in checks {
        match c {
            Check::Fail(w) => {
                status = Status::Counterexample(w);
                break;
            }
            Check::Unknown(w) if undecided.is_none() => undecided = Some(w),
            _ => {}
        }
    }
    if let (Status::Confirmed, Some(w)) = (&status, undecided) {
        status = Status::Undecided(w);
    }
    VerificationReport { theorem: theorem.into(), params, instances, hypothesis_met: true, status, details }
}

fn instance_rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

fn run_seeded<F>(samples: usize, seed: u64, f: F) -> Vec<Check>
where
    F: Fn(&mut ChaCha8Rng) -> Check + Sync,
{
    (0..samples).into_par_iter().map(|i| f(&mut instance_rng(seed, i))).collect()
}

fn graph(h: &Hypergraph) -> Value {
    Value::String(text::to_text(h))
}

/// `lambda(h)`, or `None` when `h` has no edges (`lambda = 0`).
fn lambda(h: &Hypergraph) -> Option<LambdaValue> {
    largest_matching_root(h, &default_eps()).ok()
}

fn compare(a: &Hypergraph, b: &Hypergraph) -> LambdaOrdering {
    match (lambda(a), lambda(b)) {
        (None, None) => LambdaOrdering::EqCertified,
        (None, Some(_)) => LambdaOrdering::Lt,
        (Some(_), None) => LambdaOrdering::Gt,
        (Some(mut x), Some(mut y)) => compare_values(&mut x, &mut y, &default_eps()),
    }
}

/// Indices of the largest values; `Err((i, j))` when `i` and `j` could not
/// be ordered within precision.
fn maximizers(values: &mut [LambdaValue]) -> std::result::Result<Vec<usize>, (usize, usize)> {
    let eps = default_eps();
    let mut best = vec![0];
    for i in 1..values.len() {
        let (head, tail) = values.split_at_mut(i);
        match compare_values(&mut tail[0], &mut head[best[0]], &eps) {
            LambdaOrdering::Gt => best = vec![i],
            LambdaOrdering::EqCertified => best.push(i),
            LambdaOrdering::Eq => return Err((best[0], i)),
            LambdaOrdering::Lt => {}
        }
    }
    Ok(best)
}

fn canonical_set(graphs: impl IntoIterator<Item = Hypergraph>) -> Result<Vec<Hypergraph>> {
    let mut out = graphs.into_iter().map(|h| canonical_form(&h)).collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn texts(graphs: &[Hypergraph]) -> Value {
    graphs.iter().map(graph).collect()
}

/// Checks that the maximizers of `lambda` over a census are exactly the
/// extremal family: `H(k,m,t)` for general cacti (together with `L(k,3,1)`
/// when `(m, t) = (3, 1)`) and `L(k,m,t)` for linear cacti.
pub fn verify_maximizer(census: &CactusCensus) -> Result<VerificationReport> {
    let p = census.params;
    if census.is_empty() {
        return Err(Error::BadParams(format!("census for {p:?} is empty")));
    }
    if !p.linear && p.k < 3 {
        return Err(Error::BadParams("the general cactus statement needs k >= 3".into()));
    }
    let mut expected = vec![if p.linear { extremal_l(p.k, p.m, p.t)? } else { extremal_h(p.k, p.m, p.t)? }];
    if !p.linear && (p.m, p.t) == (3, 1) {
        expected.push(extremal_l(p.k, 3, 1)?);
    }
    let expected = canonical_set(expected)?;
    let mut values = census.lambdas.clone();
    let theorem = if p.linear { "main-linear-cactus" } else { "main-cactus" };
    let params = serde_json::to_value(p).expect("params serialize");
    let check = match maximizers(&mut values) {
        Err((a, b)) => Check::Unknown(json!({
            "reason": "two members could not be ordered",
            "a": graph(&census.members[a]),
            "b": graph(&census.members[b]),
        })),
        Ok(best) => {
            let found: Vec<Hypergraph> = best.iter().map(|&i| census.members[i].clone()).collect();
            if found == expected {
                Check::Pass
            } else {
                Check::Fail(json!({ "maximizers": texts(&found), "expected": texts(&expected) }))
            }
        }
    };
    let details = json!({
        "members": census.len(),
        "expected": texts(&expected),
        "lambda_max": expected.first().and_then(lambda).map(|l| l.lambda_f64()),
    });
    Ok(report(theorem, params, vec![check], details))
}

/// Enumerates the census and runs [`verify_maximizer`] on it.
pub fn verify_cactus_theorem(k: usize, m: usize, t: usize, linear: bool) -> Result<VerificationReport> {
    verify_maximizer(&enumerate_census(k, m, t, linear)?)
}

fn random_shift<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ShiftSpec {
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    ShiftSpec { u, v }
}

fn shift_witness(h: &Hypergraph, s: ShiftSpec, shifted: &Hypergraph) -> Value {
    json!({ "graph": graph(h), "u": s.u, "v": s.v, "shifted": graph(shifted) })
}

/// `lambda(H) <= lambda(S_uv(H))` on random connected `k`-graphs with up to
/// `max_m` edges, strict whenever `S_uv(H)` is not isomorphic to `H` and
/// there are disjoint edges `e` at `u`, `f` at `v` with `S_uv(f)` not an edge
/// at `u`.
///
/// The strict part is checked as stated. The details also tally the
/// instances with a witness pair whose `e` is unshadowed (no edge at `v`
/// shifts onto `e` once `e` is deleted) and whose `f` really moves; violations
/// among those are reported separately.
pub fn verify_shift_monotonicity(k: usize, samples: usize, max_m: usize, seed: u64) -> VerificationReport {
    use std::sync::atomic::{AtomicUsize, Ordering::Relaxed};
    let tallies: [AtomicUsize; 4] = Default::default();
    let [strict, violations, unshadowed, unshadowed_violations] = &tallies;
    let checks = run_seeded(samples, seed, |rng| {
        let m = rng.gen_range(1..=max_m);
        let h = random_connected(rng, k, m);
        let s = random_shift(rng, h.n());
        let shifted = shift_hypergraph(&h, s).expect("vertices in range");
        let ord = compare(&h, &shifted);
        let witness = |reason: &str| {
            let mut w = shift_witness(&h, s, &shifted);
            w["reason"] = reason.into();
            w
        };
        if ord == LambdaOrdering::Gt {
            return Check::Fail(witness("lambda decreased"));
        }
        if strict_shift_witness(&h, s).is_none() || shifted == h {
            return Check::Pass;
        }
        match is_isomorphic(&h, &shifted) {
            Ok(true) => Check::Pass,
            Ok(false) => {
                strict.fetch_add(1, Relaxed);
                let sealed = unshadowed_shift_witness(&h, s).is_some();
                if sealed {
                    unshadowed.fetch_add(1, Relaxed);
                }
                match ord {
                    LambdaOrdering::Lt => Check::Pass,
                    LambdaOrdering::Eq => Check::Unknown(witness("lambda values not separated")),
                    _ => {
                        violations.fetch_add(1, Relaxed);
                        if sealed {
                            unshadowed_violations.fetch_add(1, Relaxed);
                            Check::Fail(witness("equal lambda with an unshadowed disjoint-edge witness"))
                        } else {
                            Check::Fail(witness("equal lambda with a disjoint-edge witness"))
                        }
                    }
                }
            }
            Err(_) => Check::Unknown(witness("too large for isomorphism testing")),
        }
    });
    let params = json!({ "k": k, "samples": samples, "max_m": max_m, "seed": seed });
    let details = json!({
        "strict_instances": strict.load(Relaxed),
        "strict_violations": violations.load(Relaxed),
        "unshadowed_instances": unshadowed.load(Relaxed),
        "unshadowed_violations": unshadowed_violations.load(Relaxed),
    });
    report("shift-monotonicity", params, checks, details)
}

fn random_spanning_subgraph<R: Rng + ?Sized>(rng: &mut R, h: &Hypergraph, min_removed: usize) -> Hypergraph {
    let removed = rng.gen_range(min_removed..=h.m());
    let mut idx: Vec<usize> = (0..h.m()).collect();
    idx.shuffle(rng);
    let keep: Vec<Vec<VertexId>> = idx[removed..].iter().map(|&i| h.edges()[i].vertices().to_vec()).collect();
    Hypergraph::new(h.k(), h.n(), keep).expect("subset of edges")
}

fn random_union<R: Rng + ?Sized>(rng: &mut R, k: usize, max_m: usize) -> Hypergraph {
    let parts = rng.gen_range(2..=3);
    let mut h = Hypergraph::empty(k, rng.gen_range(0..=1));
    for _ in 0..parts {
        let size = rng.gen_range(1..=max_m.max(1));
        let g = random_connected(rng, k, size);
        h = h.disjoint_union(&g).expect("same uniformity");
    }
    h.relabel(&random_permutation(rng, h.n()))
}

fn preceq_check(r: Result<Preceq>, ok: impl Fn(Preceq) -> bool, witness: impl Fn() -> Value) -> Check {
    match r {
        Ok(p) if ok(p) => Check::Pass,
        Ok(_) => Check::Fail(witness()),
        Err(_) => Check::Unknown(witness()),
    }
}

/// Some unshadowed `e` at `u` but not `v` has `S_uv(H) - e` a proper
/// subgraph of `H - e`, and `S_uv(H)` is not isomorphic to `H`.
fn strict_ordering_applies(h: &Hypergraph, s: ShiftSpec, shifted: &Hypergraph) -> bool {
    let found = h.edges().iter().enumerate().any(|(i, e)| {
        if !e.contains(s.u) || e.contains(s.v) || is_shadowed(h, s, e) {
            return false;
        }
        let big = h.remove_edge_closed(i).expect("index");
        let small = shifted.remove_edge_closed(shifted.edge_index(e).expect("edge at u survives")).expect("index");
        small.m() < big.m() && small.is_subgraph_of(&big)
    });
    found && !is_isomorphic(h, shifted).unwrap_or(true)
}

/// Randomized checks of the matching-polynomial ordering:
/// `spanning-subgraph` (a proper spanning subgraph of a connected graph is
/// strictly below it, and every graph is non-strictly below itself),
/// `spanning-subgraph-disconnected` (the same for unions, via exact
/// evaluation above `lambda(H)`), `shift-edge-removal` (for connected `H` and
/// `e` at `u` but not `v`, `lambda(S_uv(H))` exceeds both
/// `lambda(S_uv(H) \ e)` and `lambda(H - e)`) and `shift-ordering`
/// (`H` is below `S_uv(H)`).
pub fn verify_ordering_lemmas(k: usize, samples: usize, max_m: usize, seed: u64) -> Vec<VerificationReport> {
    let params = json!({ "k": k, "samples": samples, "max_m": max_m, "seed": seed });
    let spanning = run_seeded(samples, seed, |rng| {
        let size = rng.gen_range(1..=max_m);
        let h = random_connected(rng, k, size);
        let g = random_spanning_subgraph(rng, &h, 1);
        let w = || json!({ "graph": graph(&h), "subgraph": graph(&g) });
        match preceq_check(check_preceq(&g, &h), |p| p == Preceq::PrecEqStrict, w) {
            Check::Pass => preceq_check(check_preceq(&h, &h), |p| p == Preceq::PrecEq, || json!({ "identity": graph(&h) })),
            other => other,
        }
    });
    let disconnected = run_seeded(samples, seed ^ 0x5a5a, |rng| {
        let h = random_union(rng, k, max_m.div_ceil(2));
        let g = random_spanning_subgraph(rng, &h, 1);
        let any = random_spanning_subgraph(rng, &h, 0);
        let w = || json!({ "graph": graph(&h), "subgraph": graph(&g) });
        let mu_g = crate::matchpoly::matching_polynomial(&g).to_dense();
        let mu_h = crate::matchpoly::matching_polynomial(&h).to_dense();
        let d: IntPoly = &mu_g - &mu_h;
        let hi = lambda(&h).expect("union has edges").lambda_bounds().1;
        let mut points: Vec<BigRational> = (0..6).map(|j| &hi + BigRational::new(1.into(), BigInt::from(1u64 << j))).collect();
        points.push(&hi * BigRational::from_integer(2.into()) + BigRational::from_integer(1.into()));
        if points.iter().any(|x| d.sign_at(x) <= 0) {
            return Check::Fail(w());
        }
        preceq_check(check_preceq(&any, &h), Preceq::holds, || json!({ "graph": graph(&h), "subgraph": graph(&any) }))
    });
    let removal = run_seeded(samples, seed ^ 0xa5a5, |rng| {
        let size = rng.gen_range(1..=max_m);
        let h = random_connected(rng, k, size);
        let s = random_shift(rng, h.n());
        let shifted = shift_hypergraph(&h, s).expect("vertices in range");
        let edges: Vec<&Edge> = h.edges().iter().filter(|e| e.contains(s.u) && !e.contains(s.v)).collect();
        if edges.is_empty() {
            return Check::Skip;
        }
        for e in edges {
            let without = shifted.delete_edge(shifted.edge_index(e).expect("edge at u survives")).expect("index");
            let closed = h.remove_edge_closed(h.edge_index(e).expect("edge of h")).expect("index");
            for smaller in [&without, &closed] {
                let w = || json!({ "graph": graph(&h), "u": s.u, "v": s.v, "edge": e.vertices(), "smaller": graph(smaller) });
                match compare(smaller, &shifted) {
                    LambdaOrdering::Lt => {}
                    LambdaOrdering::Eq => return Check::Unknown(w()),
                    _ => return Check::Fail(w()),
                }
            }
        }
        Check::Pass
    });
    let ordering = run_seeded(samples, seed ^ 0x3c3c, |rng| {
        let connected = rng.gen_bool(0.5);
        let h = if connected {
            let size = rng.gen_range(1..=max_m);
            random_connected(rng, k, size)
        } else {
            random_union(rng, k, max_m.div_ceil(2))
        };
        let s = random_shift(rng, h.n());
        let shifted = shift_hypergraph(&h, s).expect("vertices in range");
        let strict = connected && shifted != h && strict_ordering_applies(&h, s, &shifted);
        let want = move |p: Preceq| if strict { p == Preceq::PrecEqStrict } else { p.holds() };
        preceq_check(check_preceq(&h, &shifted), want, || shift_witness(&h, s, &shifted))
    });
    vec![
        report("spanning-subgraph", params.clone(), spanning, Value::Null),
        report("spanning-subgraph-disconnected", params.clone(), disconnected, Value::Null),
        report("shift-edge-removal", params.clone(), removal, Value::Null),
        report("shift-ordering", params, ordering, Value::Null),
    ]
}

/// Among connected `n`-vertex `k`-graphs with exactly `p` pendant edges, the
/// unique maximizer is the complete `k`-graph on `n - p(k-1)` vertices with a
/// `p`-edge star at one vertex. The statement needs `n >= p(k-1) + k + 1`;
/// below that the report is informational.
pub fn verify_pendant_theorem(k: usize, n: usize, p: usize) -> Result<VerificationReport> {
    let family: Vec<Hypergraph> = enumerate_k_graphs(k, n)?
        .into_iter()
        .filter(|h| h.m() > 0 && h.is_connected().unwrap_or(false) && h.pendant_edges().len() == p)
        .collect();
    if family.is_empty() {
        return Err(Error::BadParams(format!("no connected {k}-graph on {n} vertices has exactly {p} pendant edges")));
    }
    let hypothesis_met = n > p * (k - 1) + k;
    let expected = match n.checked_sub(p * (k - 1)) {
        Some(core) if core >= k => canonical_set([complete_plus_star(core, p, k)?])?,
        _ => Vec::new(),
    };
    let mut values: Vec<LambdaValue> = family.iter().map(|h| lambda(h).expect("has edges")).collect();
    let check = match maximizers(&mut values) {
        Err((a, b)) => Check::Unknown(json!({ "a": graph(&family[a]), "b": graph(&family[b]) })),
        Ok(best) => {
            let found: Vec<Hypergraph> = best.iter().map(|&i| family[i].clone()).collect();
            if found == expected {
                Check::Pass
            } else {
                Check::Fail(json!({ "maximizers": texts(&found), "expected": texts(&expected) }))
            }
        }
    };
    let params = json!({ "k": k, "n": n, "p": p });
    let details = json!({ "family_size": family.len(), "expected": texts(&expected) });
    let mut r = report("pendant-edges", params, vec![check], details);
    r.hypothesis_met = hypothesis_met;
    Ok(r)
}

/// `|rho(T(H, <, u)) - lambda(H)| < WALK_TREE_TOL` for every connected graph
/// given, every root `u` and `orders` random orders, and `T(H, <, u)` is
/// isomorphic to `H` whenever `H` is a `k`-tree.
pub fn verify_walk_tree(graphs: &[Hypergraph], orders: usize, seed: u64) -> VerificationReport {
    let checks: Vec<Check> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, h)| {
            if h.m() == 0 || !h.is_connected().unwrap_or(false) {
                return Check::Skip;
            }
            let mut rng = instance_rng(seed, i);
            let l = lambda(h).expect("has edges").lambda_f64();
            let tree = h.is_k_tree();
            for _ in 0..orders {
                let seq = random_permutation(&mut rng, h.n());
                let order = VertexOrder::from_sequence(&seq).expect("permutation");
                for u in 0..h.n() {
                    let w = |reason: &str| json!({ "graph": graph(h), "order": seq, "root": u, "reason": reason });
                    let Ok(t) = build_walk_tree(h, &order, u, DEFAULT_WALK_CAP) else {
                        return Check::Unknown(w("walk cap exceeded"));
                    };
                    match spectral_radius(&t.tree, DEFAULT_TOL, DEFAULT_MAX_ITER) {
                        Ok(r) if (r.value - l).abs() < WALK_TREE_TOL => {}
                        Ok(_) => return Check::Fail(w("spectral radius differs from lambda")),
                        Err(_) => return Check::Unknown(w("power iteration did not converge")),
                    }
                    if tree {
                        match is_isomorphic(&t.tree, h) {
                            Ok(true) => {}
                            Ok(false) => return Check::Fail(w("walk tree of a tree is not isomorphic to it")),
                            Err(_) => return Check::Unknown(w("too large for isomorphism testing")),
                        }
                    }
                }
            }
            Check::Pass
        })
        .collect();
    let params = json!({ "graphs": graphs.len(), "orders": orders, "seed": seed, "tolerance": WALK_TREE_TOL });
    report("walk-tree", params, checks, Value::Null)
}

fn join(host: &Hypergraph, at: &[VertexId], parts: &[(Hypergraph, VertexId)]) -> Hypergraph {
    let spec = StarJoinSpec { host: host.clone(), attachments: at.to_vec(), parts: parts.to_vec() };
    star_join(&spec).expect("parts are vertex-disjoint").graph
}

fn random_rooted<R: Rng + ?Sized>(rng: &mut R, k: usize, max_m: usize) -> (Hypergraph, VertexId) {
    let size = rng.gen_range(1..=max_m);
    let h = random_connected(rng, k, size);
    let v = rng.gen_range(0..h.n());
    (h, v)
}

/// Joining connected graphs at distinct vertices `u_1, ..., u_s` of a
/// `k`-tree gives a strictly smaller `lambda` than joining them all at some
/// single `u_i`.
pub fn verify_star_join(k: usize, samples: usize, seed: u64) -> VerificationReport {
    let checks = run_seeded(samples, seed, |rng| {
        let size = rng.gen_range(1..=3);
        let t = random_k_tree(rng, k, size);
        let s = rng.gen_range(2..=3usize.min(t.n()));
        let mut verts: Vec<VertexId> = (0..t.n()).collect();
        verts.shuffle(rng);
        let at: Vec<VertexId> = verts[..s].to_vec();
        let parts: Vec<(Hypergraph, VertexId)> = (0..s).map(|_| random_rooted(rng, k, 3)).collect();
        let spread = join(&t, &at, &parts);
        let mut unknown = false;
        for &u in &at {
            match compare(&spread, &join(&t, &vec![u; s], &parts)) {
                LambdaOrdering::Lt => return Check::Pass,
                LambdaOrdering::Eq => unknown = true,
                _ => {}
            }
        }
        let w = json!({ "tree": graph(&t), "attachments": at, "joined": graph(&spread) });
        if unknown {
            Check::Unknown(w)
        } else {
            Check::Fail(w)
        }
    });
    report("star-join", json!({ "k": k, "samples": samples, "seed": seed }), checks, Value::Null)
}

/// Moving an attached graph from a degree-one vertex `v` to a neighbour `u`
/// of degree at least two strictly increases `lambda`.
pub fn verify_degree_one_relocation(k: usize, samples: usize, seed: u64) -> VerificationReport {
    let checks = run_seeded(samples, seed, |rng| {
        let size = rng.gen_range(2..=4);
        let g = random_connected(rng, k, size);
        let deg = g.degrees();
        let pairs: Vec<(VertexId, VertexId)> = g
            .edges()
            .iter()
            .flat_map(|e| {
                let vs = e.vertices();
                vs.iter().flat_map(move |&u| vs.iter().map(move |&v| (u, v)))
            })
            .filter(|&(u, v)| u != v && deg[u] > 1 && deg[v] == 1)
            .collect();
        let Some(&(u, v)) = pairs.choose(rng) else {
            return Check::Skip;
        };
        let part = [random_rooted(rng, k, 3)];
        let (at_v, at_u) = (join(&g, &[v], &part), join(&g, &[u], &part));
        let w = || json!({ "graph": graph(&g), "u": u, "v": v, "attached": graph(&part[0].0), "root": part[0].1 });
        match compare(&at_v, &at_u) {
            LambdaOrdering::Lt => Check::Pass,
            LambdaOrdering::Eq => Check::Unknown(w()),
            _ => Check::Fail(w()),
        }
    });
    report("degree-one-relocation", json!({ "k": k, "samples": samples, "seed": seed }), checks, Value::Null)
}

/// Replacing a `k`-tree with `m` edges hanging from a vertex by the `m`-edge
/// star centred there never decreases `lambda`, and keeps it only when the
/// two graphs are isomorphic.
pub fn verify_pendant_tree(k: usize, samples: usize, seed: u64) -> VerificationReport {
    let checks = run_seeded(samples, seed, |rng| {
        let (h, u) = random_rooted(rng, k, 3);
        let m = rng.gen_range(1..=4);
        let t = random_k_tree(rng, k, m);
        let v = rng.gen_range(0..t.n());
        let with_tree = join(&h, &[u], &[(t.clone(), v)]);
        let with_star = join(&h, &[u], &[(k_star(k, m).expect("k >= 2"), 0)]);
        let w = || json!({ "graph": graph(&h), "root": u, "tree": graph(&t), "tree_root": v });
        let iso = match is_isomorphic(&with_tree, &with_star) {
            Ok(b) => b,
            Err(_) => return Check::Unknown(w()),
        };
        match (compare(&with_tree, &with_star), iso) {
            (LambdaOrdering::Lt, false) | (LambdaOrdering::EqCertified, true) => Check::Pass,
            (LambdaOrdering::Eq, _) => Check::Unknown(w()),
            _ => Check::Fail(w()),
        }
    });
    report("pendant-tree", json!({ "k": k, "samples": samples, "seed": seed }), checks, Value::Null)
}

/// Every `k`-tree with `m <= max_m` edges has `lambda` (equal to its
/// spectral radius) below that of the `m`-edge star, unless it is the star.
pub fn verify_tree_star(k: usize, max_m: usize) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    for m in 1..=max_m {
        let census = enumerate_census(k, m, 0, false)?;
        let mut star = lambda(&k_star(k, m)?).expect("has edges");
        let star_form = canonical_form(&k_star(k, m)?)?;
        let eps = default_eps();
        for (tree, l) in census.members.iter().zip(&census.lambdas) {
            let mut l = l.clone();
            let ord = compare_values(&mut l, &mut star, &eps);
            let ok = if *tree == star_form { ord == LambdaOrdering::EqCertified } else { ord == LambdaOrdering::Lt };
            checks.push(match (ok, ord) {
                (true, _) => Check::Pass,
                (false, LambdaOrdering::Eq) => Check::Unknown(json!({ "tree": graph(tree) })),
                _ => Check::Fail(json!({ "tree": graph(tree) })),
            });
        }
    }
    Ok(report("tree-star", json!({ "k": k, "max_m": max_m }), checks, Value::Null))
}
