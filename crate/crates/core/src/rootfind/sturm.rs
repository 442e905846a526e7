//! Sturm sequences and root isolation by rational bisection.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::poly::IntPoly;

/// Sturm sequence of the squarefree part of a polynomial.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<IntPoly>,
}

impl Sturm {
    pub fn new(p: &IntPoly) -> Self {
        assert!(!p.is_zero(), "Sturm sequence of the zero polynomial");
        let p0 = p.squarefree();
        let mut seq = vec![p0.clone()];
        if p0.degree() > Some(0) {
            seq.push(p0.derivative().primitive());
            loop {
                let n = seq.len();
                let r = seq[n - 2].positive_pseudo_rem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push((-&r).primitive());
            }
        }
        Sturm { seq }
    }

    /// The squarefree polynomial the sequence was built from.
    pub fn poly(&self) -> &IntPoly {
        &self.seq[0]
    }

    fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    pub fn variations(&self, x: &BigRational) -> usize {
        Self::count_changes(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_pos_inf(&self) -> usize {
        Self::count_changes(self.seq.iter().map(|p| p.sign_at_pos_inf()))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations(a) - self.variations(b)
    }

    /// Number of distinct real roots in `(a, inf)`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations(a) - self.variations_pos_inf()
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        let b = BigRational::from_integer(self.poly().cauchy_bound());
        self.count(&-b.clone(), &b)
    }
}

/// An interval `(lo, hi]` holding exactly one root of its polynomial, or the
/// single point `lo = hi` when that root is rational and was hit exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Whether `hi - lo <= eps * max(1, |lo|)`.
    pub fn is_narrow(&self, eps: &BigRational) -> bool {
        let scale = self.lo.abs().max(BigRational::from_integer(1.into()));
        self.width() <= eps * scale
    }

    /// Halves the interval, keeping the root of `sturm.poly()` inside.
    pub fn bisect(&mut self, sturm: &Sturm) {
        if self.is_exact() {
            return;
        }
        let mid = split_point(&self.lo, &self.hi);
        if sturm.count(&mid, &self.hi) >= 1 {
            self.lo = mid;
        } else if sturm.poly().sign_at(&mid) == 0 {
            self.lo = mid.clone();
            self.hi = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Bisects until narrow and `lo` is not itself a root.
    pub fn refine(&mut self, sturm: &Sturm, eps: &BigRational) {
        while !self.is_exact() && (!self.is_narrow(eps) || sturm.poly().sign_at(&self.lo) == 0) {
            self.bisect(sturm);
        }
    }
}

/// The midpoint, or the integer nearest to it when one lies strictly
/// inside, so integer roots are hit exactly.
fn split_point(lo: &BigRational, hi: &BigRational) -> BigRational {
    let mid = (lo + hi) / BigRational::from_integer(BigInt::from(2));
    let r = mid.round();
    if &r > lo && &r < hi {
        r
    } else {
        mid
    }
}

/// Isolates the largest real root of `p`; `None` if `p` has no real root.
pub fn isolate_largest(p: &IntPoly, eps: &BigRational) -> Option<(Sturm, RootInterval)> {
    let sturm = Sturm::new(p);
    let b = BigRational::from_integer(sturm.poly().cauchy_bound());
    let lo = -b.clone();
    if sturm.count(&lo, &b) == 0 {
        return None;
    }
    let mut iv = RootInterval { lo, hi: b };
    // shrink to one root first: keep the upper part while it holds a root
    while !iv.is_exact() && sturm.count(&iv.lo, &iv.hi) > 1 {
        iv.bisect(&sturm);
    }
    iv.refine(&sturm, eps);
    Some((sturm, iv))
}

/// Isolates every distinct real root of `p` in `(a, inf)` into disjoint
/// intervals, in increasing order.
pub fn isolate_all_above(sturm: &Sturm, a: &BigRational) -> Vec<RootInterval> {
    let b = BigRational::from_integer(sturm.poly().cauchy_bound());
    let mut out = Vec::new();
    let mut stack = vec![(a.clone(), b)];
    let two = BigRational::from_integer(2.into());
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count(&lo, &hi) {
            0 => {}
            1 => out.push(RootInterval { lo, hi }),
            _ => {
                let mid = (&lo + &hi) / &two;
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn counts_roots_of_known_polynomials() {
        // (y - 1)(y - 2)(y + 3)
        let p = IntPoly::from_i64(&[6, -7, 0, 1]);
        let s = Sturm::new(&p);
        assert_eq!(s.count_real(), 3);
        assert_eq!(s.count(&q(0, 1), &q(5, 1)), 2);
        assert_eq!(s.count(&q(1, 1), &q(2, 1)), 1); // (1, 2] holds 2 only
        assert_eq!(s.count_above(&q(3, 2)), 1);
        // y^2 + 1: no real roots
        assert_eq!(Sturm::new(&IntPoly::from_i64(&[1, 0, 1])).count_real(), 0);
        // repeated roots are counted once
        let sq = &p * &p;
        assert_eq!(Sturm::new(&sq).count_real(), 3);
    }

    #[test]
    fn largest_root_isolation() {
        let eps = q(1, 1 << 30);
        // y^2 - 3y + 1, largest root (3 + sqrt 5) / 2
        let (s, iv) = isolate_largest(&IntPoly::from_i64(&[1, -3, 1]), &eps).unwrap();
        let target = (3.0 + 5f64.sqrt()) / 2.0;
        let lo: f64 = num_traits::ToPrimitive::to_f64(&iv.lo).unwrap();
        let hi: f64 = num_traits::ToPrimitive::to_f64(&iv.hi).unwrap();
        assert!(lo < target && target <= hi && hi - lo < 1e-8);
        assert_eq!(s.poly().sign_at(&iv.lo) * s.poly().sign_at(&iv.hi), -1);
        // rational root hit exactly: y - 3
        let (_, iv) = isolate_largest(&IntPoly::from_i64(&[-3, 1]), &eps).unwrap();
        assert!(iv.is_exact());
        assert_eq!(iv.lo, q(3, 1));
        assert!(isolate_largest(&IntPoly::from_i64(&[1, 0, 1]), &eps).is_none());
    }

    #[test]
    fn all_roots_above() {
        let p = IntPoly::from_i64(&[6, -7, 0, 1]);
        let s = Sturm::new(&p);
        let roots = isolate_all_above(&s, &q(-10, 1));
        assert_eq!(roots.len(), 3);
        for w in roots.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
    }
}
