//! Exact isolation of the largest matching root `lambda(H)`.
//!
//! Every exponent of `mu(H, x)` is `n - k r`, so `mu(H, x) = x^s q(x^k)` for
//! the reduced polynomial `q(y) = sum_r (-1)^r p_r y^(M - r)`. All root work
//! happens on `q`; `lambda = y*^(1/k)` for the largest real root `y*` of `q`.

mod order;
pub mod sturm;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

pub use order::{check_preceq, check_preceq_polys, Preceq};
use sturm::{isolate_largest, RootInterval, Sturm};

use crate::error::{Error, Result};
use crate::hgraph::Hypergraph;
use crate::matchpoly::{matching_counts, MatchingSpectrum};
use crate::poly::{IntPoly, SignedPolynomial};

/// Bits of the fixed-point scale used for the outward-rounded `lambda`
/// bounds.
const ROOT_SCALE_BITS: usize = 80;

/// Default relative precision `2^-40`.
pub fn default_eps() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 40)
}

/// `q(y)` together with the shift `s` in `mu = x^s q(x^k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedPoly {
    pub k: usize,
    pub shift: usize,
    pub q: IntPoly,
}

impl ReducedPoly {
    pub fn from_spectrum(s: &MatchingSpectrum) -> Self {
        let mm = s.matching_number();
        let mut c = vec![BigInt::zero(); mm + 1];
        for (r, p) in s.counts.iter().enumerate() {
            let v = BigInt::from(p.clone());
            c[mm - r] = if r % 2 == 0 { v } else { -v };
        }
        ReducedPoly {
            k: s.k,
            shift: s.n - s.k * mm,
            q: IntPoly::new(c),
        }
    }

    /// `mu(x) = x^s q(x^k)`.
    pub fn expand(&self) -> SignedPolynomial {
        SignedPolynomial::from_terms(
            self.q
                .coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| (self.shift + self.k * j, c.clone())),
        )
    }
}

/// The largest matching root, held as an isolating interval for `y*`.
#[derive(Clone, Debug)]
pub struct LambdaValue {
    pub poly: ReducedPoly,
    pub interval: RootInterval,
    sturm: Sturm,
}

impl LambdaValue {
    pub fn k(&self) -> usize {
        self.poly.k
    }

    pub fn is_exact(&self) -> bool {
        self.interval.is_exact()
    }

    /// Bisects until `hi - lo <= eps * max(1, lo)`.
    pub fn refine(&mut self, eps: &BigRational) {
        self.interval.refine(&self.sturm, eps);
    }

    fn bisect(&mut self) {
        self.interval.bisect(&self.sturm);
    }

    /// Rational bounds `lo <= lambda <= hi`, rounded outward.
    pub fn lambda_bounds(&self) -> (BigRational, BigRational) {
        let lo = if self.interval.lo < BigRational::zero() {
            BigRational::zero()
        } else {
            self.interval.lo.clone()
        };
        (
            kth_root_bound(&lo, self.k(), false),
            kth_root_bound(&self.interval.hi, self.k(), true),
        )
    }

    /// Midpoint estimate of `lambda`.
    pub fn lambda_f64(&self) -> f64 {
        let (lo, hi) = self.lambda_bounds();
        ((lo + hi) / BigRational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN)
    }

    pub fn to_json(&self) -> Value {
        let (lo, hi) = self.lambda_bounds();
        json!({
            "lambda_lo": lo.to_string(),
            "lambda_hi": hi.to_string(),
            "lambda_approx": self.lambda_f64(),
            "k": self.k(),
            "y_lo": self.interval.lo.to_string(),
            "y_hi": self.interval.hi.to_string(),
            "shift": self.poly.shift,
            "reduced_poly": crate::matchpoly::poly_json(&SignedPolynomial::from_dense(&self.poly.q)),
        })
    }
}

/// `floor` (or `ceil`) of `x^(1/k)` on a `2^-80` grid.
fn kth_root_bound(x: &BigRational, k: usize, upper: bool) -> BigRational {
    let scale = BigInt::one() << (ROOT_SCALE_BITS * k);
    let scaled = x * BigRational::from_integer(scale);
    let n: BigUint = if upper { scaled.ceil() } else { scaled.floor() }
        .to_integer()
        .to_biguint()
        .unwrap_or_default();
    let mut r = n.nth_root(k as u32);
    if upper && num_traits::pow(r.clone(), k) < n {
        r += 1u32;
    }
    BigRational::new(BigInt::from(r), BigInt::one() << ROOT_SCALE_BITS)
}

/// Isolates `lambda(H)` to relative precision `eps` in `y = x^k`.
///
/// Edgeless hypergraphs have `mu = x^n` and are reported as
/// [`Error::NoEdges`]; their `lambda` is 0 by convention.
pub fn largest_matching_root(h: &Hypergraph, eps: &BigRational) -> Result<LambdaValue> {
    if h.m() == 0 {
        return Err(Error::NoEdges);
    }
    Ok(lambda_of_spectrum(&matching_counts(h), eps))
}

/// As [`largest_matching_root`] for precomputed counts with at least one
/// edge.
pub fn lambda_of_spectrum(s: &MatchingSpectrum, eps: &BigRational) -> LambdaValue {
    assert!(s.matching_number() >= 1, "no edges");
    let poly = ReducedPoly::from_spectrum(s);
    let (sturm, interval) = isolate_largest(&poly.q, eps).expect("q has a positive root");
    LambdaValue { poly, interval, sturm }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LambdaOrdering {
    Lt,
    Gt,
    /// Intervals overlap within precision; equality not proven.
    Eq,
    /// Both roots are provably the same algebraic number.
    EqCertified,
}

impl LambdaOrdering {
    pub fn is_eq(self) -> bool {
        matches!(self, LambdaOrdering::Eq | LambdaOrdering::EqCertified)
    }
}

pub fn compare_lambda(a: &Hypergraph, b: &Hypergraph, eps: &BigRational) -> Result<LambdaOrdering> {
    let mut la = largest_matching_root(a, eps)?;
    let mut lb = largest_matching_root(b, eps)?;
    Ok(compare_values(&mut la, &mut lb, eps))
}

/// Compares two roots, refining both as needed. Roots of different
/// uniformity are compared through `lambda^lcm(k_a, k_b)`.
pub fn compare_values(a: &mut LambdaValue, b: &mut LambdaValue, eps: &BigRational) -> LambdaOrdering {
    let l = a.k().lcm(&b.k());
    let (pa, pb) = (l / a.k(), l / b.k());
    let shared = (a.k() == b.k()).then(|| a.poly.q.gcd(&b.poly.q)).filter(|g| g.degree() > Some(0));
    let shared = shared.map(|g| Sturm::new(&g));
    loop {
        let (alo, ahi) = powered(&a.interval, pa);
        let (blo, bhi) = powered(&b.interval, pb);
        if ahi < blo || (ahi == blo && !b.is_exact()) {
            return LambdaOrdering::Lt;
        }
        if bhi < alo || (bhi == alo && !a.is_exact()) {
            return LambdaOrdering::Gt;
        }
        if let Some(g) = &shared {
            if certified_equal(g, &a.interval, &b.interval) {
                return LambdaOrdering::EqCertified;
            }
        }
        let a_done = a.interval.is_narrow(eps);
        let b_done = b.interval.is_narrow(eps);
        if a_done && b_done {
            return LambdaOrdering::Eq;
        }
        if !a_done {
            a.bisect();
        }
        if !b_done {
            b.bisect();
        }
    }
}

fn powered(iv: &RootInterval, p: usize) -> (BigRational, BigRational) {
    let clamp = |x: &BigRational| if *x < BigRational::zero() { BigRational::zero() } else { x.clone() };
    (num_traits::pow(clamp(&iv.lo), p), num_traits::pow(clamp(&iv.hi), p))
}

/// Whether the common factor `g` has a root inside both isolating
/// intervals; that root is then the largest root of both polynomials.
fn certified_equal(g: &Sturm, a: &RootInterval, b: &RootInterval) -> bool {
    let inside = |p: &BigRational, iv: &RootInterval| {
        if iv.is_exact() {
            *p == iv.lo
        } else {
            iv.lo < *p && *p <= iv.hi
        }
    };
    if a.is_exact() || b.is_exact() {
        let p = if a.is_exact() { &a.lo } else { &b.lo };
        return inside(p, a) && inside(p, b) && g.poly().sign_at(p) == 0;
    }
    let lo = (&a.lo).max(&b.lo);
    let hi = (&a.hi).min(&b.hi);
    lo < hi && g.count(lo, hi) >= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::random::random_connected;
    use crate::matchpoly::matching_polynomial;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn g(k: usize, n: usize, e: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(k, n, e.iter().map(|x| x.to_vec())).unwrap()
    }

    fn tight() -> BigRational {
        BigRational::new(1.into(), BigInt::one() << 60)
    }

    fn within(l: &LambdaValue, target: f64, tol: f64) -> bool {
        let (lo, hi) = l.lambda_bounds();
        let (lo, hi) = (lo.to_f64().unwrap(), hi.to_f64().unwrap());
        lo <= target + tol && hi >= target - tol && hi - lo < tol
    }

    #[test]
    fn stars_have_exact_roots() {
        for (k, m) in [(2, 3), (3, 2), (4, 5)] {
            let edges: Vec<Vec<usize>> = (0..m).map(|i| (0..k).map(|j| if j == 0 { 0 } else { 1 + i * (k - 1) + j - 1 }).collect()).collect();
            let s = Hypergraph::new(k, 1 + m * (k - 1), edges).unwrap();
            let l = largest_matching_root(&s, &default_eps()).unwrap();
            assert!(l.is_exact());
            assert_eq!(l.interval.lo, BigRational::from_integer(m.into()));
            assert!(within(&l, (m as f64).powf(1.0 / k as f64), 1e-12));
        }
    }

    #[test]
    fn cactus_roots() {
        let h31 = g(3, 6, &[&[0, 1, 2], &[0, 1, 3], &[0, 4, 5]]);
        let gp = g(3, 6, &[&[0, 1, 2], &[0, 1, 3], &[2, 4, 5]]);
        let lh = largest_matching_root(&h31, &tight()).unwrap();
        let lg = largest_matching_root(&gp, &tight()).unwrap();
        assert!(within(&lh, 3f64.cbrt(), 1e-10));
        assert!(within(&lg, ((3.0 + 5f64.sqrt()) / 2.0).cbrt(), 1e-10));
        assert_eq!(compare_lambda(&h31, &gp, &default_eps()).unwrap(), LambdaOrdering::Gt);
        assert_eq!(compare_lambda(&gp, &h31, &default_eps()).unwrap(), LambdaOrdering::Lt);
    }

    #[test]
    fn equal_polynomials_certify() {
        let a = g(3, 5, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 4]]);
        let b = g(3, 5, &[&[0, 1, 2], &[0, 1, 3], &[0, 1, 4]]);
        assert_eq!(compare_lambda(&a, &b, &default_eps()).unwrap(), LambdaOrdering::EqCertified);
        let p = g(2, 4, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(compare_lambda(&p, &p, &default_eps()).unwrap(), LambdaOrdering::EqCertified);
    }

    #[test]
    fn different_uniformity() {
        // lambda(K2) = 1 = lambda(single 3-edge); lambda(P3) = sqrt 2 > 1
        let e2 = g(2, 2, &[&[0, 1]]);
        let e3 = g(3, 3, &[&[0, 1, 2]]);
        let p3 = g(2, 3, &[&[0, 1], &[1, 2]]);
        assert!(compare_lambda(&e2, &e3, &default_eps()).unwrap().is_eq());
        assert_eq!(compare_lambda(&p3, &e3, &default_eps()).unwrap(), LambdaOrdering::Gt);
    }

    #[test]
    fn empty_is_flagged() {
        assert_eq!(largest_matching_root(&Hypergraph::empty(3, 4), &default_eps()).unwrap_err(), Error::NoEdges);
    }

    #[test]
    fn json_has_rational_bounds() {
        let l = largest_matching_root(&g(2, 3, &[&[0, 1], &[1, 2]]), &default_eps()).unwrap();
        let v = l.to_json();
        assert!(v["lambda_lo"].as_str().unwrap().contains('/'));
        assert_eq!(v["reduced_poly"], json!([[1, "1"], [0, "-2"]]));
    }

    /// Largest real root of `mu` by plain f64 scanning and bisection, with
    /// no reduction to `q`.
    fn float_largest_root(mu: &SignedPolynomial) -> f64 {
        let eval = |x: f64| mu.terms_desc().map(|(e, c)| c.to_f64().unwrap() * x.powi(e as i32)).sum::<f64>();
        let bound = 1.0 + mu.terms_desc().map(|(_, c)| c.to_f64().unwrap().abs()).fold(0.0, f64::max);
        let mut hi = bound;
        let step = 1e-3;
        while eval(hi - step) > 0.0 {
            hi -= step;
        }
        let mut lo = hi - step;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if eval(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    fn mu_dense(h: &Hypergraph) -> IntPoly {
        matching_polynomial(h).to_dense()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn graphs_match_float_root(seed in any::<u64>(), m in 1usize..=8) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let h = random_connected(&mut rng, 2, m);
            let l = largest_matching_root(&h, &tight()).unwrap();
            let f = float_largest_root(&matching_polynomial(&h));
            prop_assert!((l.lambda_f64() - f).abs() < 1e-10, "{} vs {}", l.lambda_f64(), f);
        }

        #[test]
        fn graph_matching_polynomials_are_real_rooted(seed in any::<u64>(), m in 1usize..=8) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let h = random_connected(&mut rng, 2, m);
            let s = Sturm::new(&mu_dense(&h));
            prop_assert_eq!(s.count_real(), s.poly().degree().unwrap());
        }

        #[test]
        fn endpoints_bracket_a_sign_change(seed in any::<u64>(), k in 2usize..=4, m in 1usize..=7) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let h = random_connected(&mut rng, k, m);
            let l = largest_matching_root(&h, &default_eps()).unwrap();
            let q = &l.poly.q;
            if l.is_exact() {
                prop_assert_eq!(q.sign_at(&l.interval.lo), 0);
            } else {
                prop_assert_eq!(q.sign_at(&l.interval.lo) * q.sign_at(&l.interval.hi), -1);
            }
            prop_assert_eq!(l.poly.expand(), matching_polynomial(&h));
        }

        #[test]
        fn proper_subgraphs_have_smaller_roots(seed in any::<u64>(), k in 2usize..=4, m in 2usize..=7) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let h = random_connected(&mut rng, k, m);
            for i in 0..h.m() {
                let sub = h.delete_edge(i).unwrap();
                prop_assert_eq!(compare_lambda(&sub, &h, &default_eps()).unwrap(), LambdaOrdering::Lt);
            }
        }

        #[test]
        fn lambda_is_max_over_components(seed in any::<u64>(), k in 2usize..=3, m1 in 1usize..=5, m2 in 1usize..=5) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_connected(&mut rng, k, m1);
            let b = random_connected(&mut rng, k, m2);
            let u = a.disjoint_union(&b).unwrap();
            let bigger = if compare_lambda(&a, &b, &default_eps()).unwrap() == LambdaOrdering::Lt { &b } else { &a };
            prop_assert!(compare_lambda(&u, bigger, &default_eps()).unwrap().is_eq());
        }
    }
}
