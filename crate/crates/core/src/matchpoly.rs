//! Matching counts `p(H, r)` and the matching polynomial
//! `mu(H, x) = sum_r (-1)^r p(H, r) x^(n - k r)`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hgraph::{canonical_form, Hypergraph, DEFAULT_CANON_LIMIT};
use crate::poly::SignedPolynomial;

/// Largest edge count accepted by [`matching_counts_oracle`].
pub const ORACLE_EDGE_LIMIT: usize = 20;

/// Exact matching counts `(p_0, ..., p_M)` of a `k`-graph on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatchingSpectrum {
    pub k: usize,
    pub n: usize,
    pub counts: Vec<BigUint>,
}

impl MatchingSpectrum {
    /// Size `M` of a maximum matching.
    pub fn matching_number(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, r: usize) -> BigUint {
        self.counts.get(r).cloned().unwrap_or_default()
    }

    pub fn polynomial(&self) -> SignedPolynomial {
        SignedPolynomial::from_terms(self.counts.iter().enumerate().map(|(r, p)| {
            let c = BigInt::from(p.clone());
            (self.n - self.k * r, if r % 2 == 0 { c } else { -c })
        }))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "k": self.k,
            "counts": self.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "poly": poly_json(&self.polynomial()),
        })
    }
}

/// `[[exp, "coef"], ...]` in descending exponent order.
pub fn poly_json(p: &SignedPolynomial) -> Value {
    Value::Array(p.terms_desc().map(|(e, c)| json!([e, c.to_string()])).collect())
}

/// Counts matchings by enumerating edge subsets; independent of the
/// recursive path and meant as its oracle.
pub fn matching_counts_oracle(h: &Hypergraph) -> Result<MatchingSpectrum> {
    if h.m() > ORACLE_EDGE_LIMIT {
        return Err(Error::SizeLimitExceeded(format!(
            "subset enumeration supports at most {ORACLE_EDGE_LIMIT} edges, got {}",
            h.m()
        )));
    }
    let masks: Vec<u128> = h
        .edges()
        .iter()
        .map(|e| e.vertices().iter().fold(0u128, |a, &v| a | (1u128 << (v % 128))))
        .collect();
    let wide = h.n() > 128;
    let mut counts = vec![0u64; h.m() + 1];
    for subset in 0u32..(1u32 << h.m()) {
        let mut used = 0u128;
        let mut ok = true;
        let mut chosen: Vec<usize> = Vec::new();
        for (i, &mask) in masks.iter().enumerate() {
            if subset >> i & 1 == 1 {
                if used & mask != 0 {
                    ok = false;
                    if !wide {
                        break;
                    }
                }
                used |= mask;
                chosen.push(i);
            }
        }
        if wide {
            // bit masks alias above 128 vertices; recheck exactly
            ok = chosen
                .iter()
                .enumerate()
                .all(|(a, &i)| chosen[a + 1..].iter().all(|&j| h.edges()[i].is_disjoint(&h.edges()[j])));
        }
        if ok {
            counts[subset.count_ones() as usize] += 1;
        }
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    Ok(MatchingSpectrum {
        k: h.k(),
        n: h.n(),
        counts: counts.into_iter().map(BigUint::from).collect(),
    })
}

/// Matching counts via the deletion recurrence
/// `p(H, r) = p(H \ e, r) + p(H - e, r - 1)`, with components multiplied
/// separately and subproblems memoised by canonical form.
pub fn matching_counts(h: &Hypergraph) -> MatchingSpectrum {
    MatchingCounter::new().counts(h)
}

pub fn matching_polynomial(h: &Hypergraph) -> SignedPolynomial {
    matching_counts(h).polynomial()
}

/// Product of two polynomials; `mu` of a disjoint union is the product of
/// the parts.
pub fn poly_product(a: &SignedPolynomial, b: &SignedPolynomial) -> SignedPolynomial {
    a * b
}

/// Memo table for repeated matching-count queries.
#[derive(Default)]
pub struct MatchingCounter {
    memo: HashMap<Hypergraph, Vec<BigUint>>,
}

impl MatchingCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn counts(&mut self, h: &Hypergraph) -> MatchingSpectrum {
        MatchingSpectrum {
            k: h.k(),
            n: h.n(),
            counts: self.raw(h),
        }
    }

    fn raw(&mut self, h: &Hypergraph) -> Vec<BigUint> {
        let (h, _) = h.strip_isolated();
        match h.m() {
            0 => return vec![BigUint::one()],
            1 => return vec![BigUint::one(), BigUint::one()],
            _ => {}
        }
        let parts = h.component_graphs();
        if parts.len() > 1 {
            return parts.iter().fold(vec![BigUint::one()], |acc, c| {
                let pc = self.raw(c);
                convolve(&acc, &pc)
            });
        }
        let key = if h.n() <= DEFAULT_CANON_LIMIT {
            canonical_form(&h).expect("within limit")
        } else {
            h.clone()
        };
        if let Some(c) = self.memo.get(&key) {
            return c.clone();
        }
        let degrees = key.degrees();
        let v = (0..key.n()).max_by_key(|&v| (degrees[v], std::cmp::Reverse(v))).unwrap();
        let ei = key.edges().iter().position(|e| e.contains(v)).unwrap();
        let without = self.raw(&key.delete_edge(ei).unwrap());
        let closed = self.raw(&key.remove_edge_closed(ei).unwrap());
        let mut out = without;
        if out.len() < closed.len() + 1 {
            out.resize(closed.len() + 1, BigUint::zero());
        }
        for (r, c) in closed.into_iter().enumerate() {
            out[r + 1] += c;
        }
        self.memo.insert(key, out.clone());
        out
    }
}

fn convolve(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}
