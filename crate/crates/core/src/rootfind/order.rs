//! The matching-polynomial ordering: `G <= H` when `mu(G, x) >= mu(H, x)`
//! for every `x >= lambda(H)`, strict when `>` holds throughout.

use num_rational::BigRational;
use num_traits::Signed;

use super::sturm::{isolate_largest, RootInterval, Sturm};
use crate::error::{Error, Result};
use crate::hgraph::Hypergraph;
use crate::matchpoly::matching_polynomial;
use crate::poly::IntPoly;

/// Bisection budget when separating `lambda(H)` from nearby roots of the
/// difference polynomial.
const MAX_REFINEMENTS: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Preceq {
    #[serde(rename = "PRECEQ_STRICT")]
    PrecEqStrict,
    #[serde(rename = "PRECEQ")]
    PrecEq,
    #[serde(rename = "NEITHER")]
    Neither,
}

impl Preceq {
    pub fn holds(self) -> bool {
        self != Preceq::Neither
    }
}

pub fn check_preceq(g: &Hypergraph, h: &Hypergraph) -> Result<Preceq> {
    check_preceq_polys(
        &matching_polynomial(g).to_dense(),
        &matching_polynomial(h).to_dense(),
    )
}

/// Decides the ordering for two matching polynomials given densely in `x`.
pub fn check_preceq_polys(mu_g: &IntPoly, mu_h: &IntPoly) -> Result<Preceq> {
    let d = mu_g - mu_h;
    if d.is_zero() {
        return Ok(Preceq::PrecEq);
    }
    if d.sign_at_pos_inf() < 0 {
        return Ok(Preceq::Neither);
    }
    let coarse = BigRational::new(1.into(), 1024.into());
    let (mu_sturm, mut lam) = isolate_largest(mu_h, &coarse).expect("matching polynomials have a real root");
    let (zero_at_lambda, above) = roots_above(&d, &mu_sturm, &mut lam)?;
    if above == 0 {
        return Ok(if zero_at_lambda { Preceq::PrecEq } else { Preceq::PrecEqStrict });
    }
    // d changes sign exactly at its odd-multiplicity roots. With P_0 = d and
    // P_j = gcd(P_{j-1}, P_{j-1}'), the alternating sum of distinct-root
    // counts of P_0, P_1, ... above lambda counts those roots.
    let mut odd: isize = above as isize;
    let mut p = d.clone();
    let mut sign = -1;
    loop {
        p = p.gcd(&p.derivative());
        if p.degree().unwrap_or(0) == 0 {
            break;
        }
        let (_, n) = roots_above(&p, &mu_sturm, &mut lam)?;
        odd += sign * n as isize;
        sign = -sign;
    }
    Ok(if odd > 0 { Preceq::Neither } else { Preceq::PrecEq })
}

/// Whether `lambda` (isolated by `lam` for `mu_sturm`) is a root of `p`, and
/// how many distinct roots `p` has above `lambda`.
fn roots_above(p: &IntPoly, mu_sturm: &Sturm, lam: &mut RootInterval) -> Result<(bool, usize)> {
    let s = Sturm::new(p);
    if lam.is_exact() {
        return Ok((p.sign_at(&lam.lo) == 0, s.count_above(&lam.lo)));
    }
    let g = p.gcd(mu_sturm.poly());
    let at = g.degree() > Some(0) && Sturm::new(&g).count(&lam.lo, &lam.hi) >= 1;
    for _ in 0..MAX_REFINEMENTS {
        if lam.is_exact() {
            return Ok((at, s.count_above(&lam.lo)));
        }
        if s.count(&lam.lo, &lam.hi) == usize::from(at) {
            return Ok((at, s.count_above(&lam.hi)));
        }
        lam.bisect(mu_sturm);
    }
    Err(Error::UndecidedAtBoundary(format!(
        "could not separate lambda from the roots of the difference within {MAX_REFINEMENTS} bisections (width {})",
        lam.width().abs()
    )))
}
