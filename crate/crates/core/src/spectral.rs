//! Spectral radius of the adjacency tensor by shifted power iteration.
//!
//! The adjacency tensor has entry `1/(k-1)!` at every index tuple that
//! enumerates an edge, so `(A x^(k-1))_i` is the sum over edges `e` containing
//! `i` of the product of `x_j` for `j` in `e \ {i}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hgraph::Hypergraph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 200_000;

/// Diagonal shift added at every step; keeps the iteration from cycling on
/// bipartite-like structures.
const SHIFT: f64 = 1.0;

#[derive(Clone, Debug, Serialize)]
pub struct PerronEstimate {
    pub value: f64,
    /// Collatz-Wielandt bracket `[min_i r_i, max_i r_i]` with
    /// `r_i = (A x^(k-1))_i / x_i^(k-1)`.
    pub lower: f64,
    pub upper: f64,
    /// Positive, scaled to maximum entry 1.
    pub vector: Vec<f64>,
    /// `max_i |r_i - value|`.
    pub residual: f64,
    pub iterations: usize,
}

pub fn tensor_apply(h: &Hypergraph, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != h.n() {
        return Err(Error::DimensionMismatch { expected: h.n(), found: x.len() });
    }
    let mut y = vec![0.0; h.n()];
    for e in h.edges() {
        let vs = e.vertices();
        for (a, &i) in vs.iter().enumerate() {
            let prod: f64 = vs.iter().enumerate().filter(|&(b, _)| b != a).map(|(_, &j)| x[j]).product();
            y[i] += prod;
        }
    }
    Ok(y)
}

fn bracket(ax: &[f64], x: &[f64], k: usize) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for (a, xi) in ax.iter().zip(x) {
        let r = a / xi.powi(k as i32 - 1);
        lo = lo.min(r);
        hi = hi.max(r);
    }
    (lo, hi)
}

/// Estimates `rho(h)` and its Perron vector for a connected `h`; stops once
/// the Collatz-Wielandt bracket is narrower than `tol`.
pub fn spectral_radius(h: &Hypergraph, tol: f64, max_iter: usize) -> Result<PerronEstimate> {
    if h.m() == 0 {
        return Err(Error::NoEdges);
    }
    if !h.is_connected()? {
        return Err(Error::NotConnected);
    }
    let k = h.k();
    let root = 1.0 / (k as f64 - 1.0);
    let mut x = vec![1.0; h.n()];
    for it in 0..=max_iter {
        let ax = tensor_apply(h, &x)?;
        let (lower, upper) = bracket(&ax, &x, k);
        if upper - lower < tol {
            let value = 0.5 * (lower + upper);
            return Ok(PerronEstimate {
                value,
                lower,
                upper,
                residual: (upper - value).max(value - lower),
                vector: x,
                iterations: it,
            });
        }
        let mut next: Vec<f64> = ax
            .iter()
            .zip(&x)
            .map(|(a, xi)| (a + SHIFT * xi.powi(k as i32 - 1)).powf(root))
            .collect();
        let top = next.iter().cloned().fold(0.0, f64::max);
        for v in &mut next {
            *v /= top;
        }
        x = next;
    }
    Err(Error::NoConvergence(max_iter))
}
