//! Exact integer polynomials.
//!
//! [`SignedPolynomial`] is the sparse form used for matching polynomials;
//! [`IntPoly`] is the dense form the root finder works on.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse integer polynomial: exponent -> nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SignedPolynomial {
    terms: BTreeMap<usize, BigInt>,
}

impl SignedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: usize, coef: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coef);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: usize, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn coefficient(&self, exp: usize) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in descending exponent order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.terms.iter().rev().map(|(&e, c)| (e, c))
    }

    pub fn to_dense(&self) -> IntPoly {
        let Some(d) = self.degree() else {
            return IntPoly::zero();
        };
        let mut c = vec![BigInt::zero(); d + 1];
        for (&e, v) in &self.terms {
            c[e] = v.clone();
        }
        IntPoly::new(c)
    }

    pub fn from_dense(p: &IntPoly) -> Self {
        Self::from_terms(p.coeffs().iter().cloned().enumerate())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.to_dense().eval(x)
    }
}

impl Mul for &SignedPolynomial {
    type Output = SignedPolynomial;
    fn mul(self, rhs: &SignedPolynomial) -> SignedPolynomial {
        let mut out = SignedPolynomial::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Sub for &SignedPolynomial {
    type Output = SignedPolynomial;
    fn sub(self, rhs: &SignedPolynomial) -> SignedPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl fmt::Display for SignedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms_desc().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{e}")?,
                _ => write!(f, "{mag}x^{e}")?,
            }
        }
        Ok(())
    }
}

/// Dense integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    c: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        IntPoly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { c: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.c.last()
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * BigInt::from(i))
                .collect(),
        )
    }

    /// Sign of the value at `x`, computed in integer arithmetic.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        sign_of(&self.homogeneous_value(x))
    }

    /// `p(x) * den(x)^deg`, which has the sign of `p(x)`.
    fn homogeneous_value(&self, x: &BigRational) -> BigInt {
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        let (a, b) = (x.numer(), x.denom());
        let mut acc = self.c[d].clone();
        let mut bpow = BigInt::one();
        for i in (0..d).rev() {
            bpow *= b;
            acc = acc * a + &self.c[i] * &bpow;
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let Some(d) = self.degree() else {
            return BigRational::zero();
        };
        let den = num_traits::pow(x.denom().clone(), d);
        BigRational::new(self.homogeneous_value(x), den)
    }

    /// Sign as `x -> +inf`.
    pub fn sign_at_pos_inf(&self) -> i8 {
        self.leading().map_or(0, sign_of)
    }

    /// Sign as `x -> -inf`.
    pub fn sign_at_neg_inf(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) if d % 2 == 0 => self.sign_at_pos_inf(),
            Some(_) => -self.sign_at_pos_inf(),
        }
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Divides by the (positive) content; keeps the sign of every value.
    pub fn primitive(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly::new(self.c.iter().map(|x| x / &g).collect())
    }

    /// Primitive with positive leading coefficient.
    pub fn normalized(&self) -> IntPoly {
        let p = self.primitive();
        if p.leading().is_some_and(|l| l.is_negative()) {
            -&p
        } else {
            p
        }
    }

    /// Remainder of `self` by `d` scaled by a positive constant
    /// `|lc(d)|^t`, so its values keep the sign of the true remainder.
    pub fn positive_pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let ld = d.leading().unwrap().clone();
        let scale = ld.abs();
        let sgn = BigInt::from(sign_of(&ld));
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.c[dr].clone();
            let shift = dr - dd;
            let mut next: Vec<BigInt> = r.c.iter().map(|x| x * &scale).collect();
            for (i, dc) in d.c.iter().enumerate() {
                next[i + shift] -= &sgn * &lr * dc;
            }
            r = IntPoly::new(next);
        }
        r
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.normalized(), other.normalized());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.positive_pseudo_rem(&b).normalized();
            a = b;
            b = r;
        }
        a
    }

    /// Quotient of an exact division over the rationals, made primitive with
    /// positive leading coefficient.
    pub fn div_exact(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(dn) = self.degree() else {
            return IntPoly::zero();
        };
        if dn < dd {
            return IntPoly::zero();
        }
        let ld = BigRational::from_integer(d.c[dd].clone());
        let mut rem: Vec<BigRational> = self.c.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        let mut q = vec![BigRational::zero(); dn - dd + 1];
        for i in (0..=dn - dd).rev() {
            let coef = &rem[i + dd] / &ld;
            for (j, dc) in d.c.iter().enumerate() {
                rem[i + j] -= &coef * BigRational::from_integer(dc.clone());
            }
            q[i] = coef;
        }
        debug_assert!(rem.iter().all(|x| x.is_zero()), "inexact division");
        let lcm = q.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        IntPoly::new(q.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect()).normalized()
    }

    /// `self / gcd(self, self')`, normalised.
    pub fn squarefree(&self) -> IntPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.normalized();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.normalized()
        } else {
            self.div_exact(&g)
        }
    }

    /// `1 + max |c_i / c_lead|`, rounded up to an integer: every real root
    /// has absolute value strictly below it.
    pub fn cauchy_bound(&self) -> BigInt {
        let Some(lead) = self.leading() else {
            return BigInt::one();
        };
        let lead = lead.abs();
        let max = self.c[..self.c.len() - 1]
            .iter()
            .map(|x| {
                let (q, r) = x.abs().div_rem(&lead);
                if r.is_zero() {
                    q
                } else {
                    q + 1
                }
            })
            .max()
            .unwrap_or_default();
        max + 1
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.c.iter().map(|x| -x).collect())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.c.len().max(rhs.c.len());
        IntPoly::new(
            (0..n)
                .map(|i| self.c.get(i).cloned().unwrap_or_default() + rhs.c.get(i).cloned().unwrap_or_default())
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.c.len().max(rhs.c.len());
        IntPoly::new(
            (0..n)
                .map(|i| self.c.get(i).cloned().unwrap_or_default() - rhs.c.get(i).cloned().unwrap_or_default())
                .collect(),
        )
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn display() {
        let p = SignedPolynomial::from_terms([(5, 1.into()), (2, (-3).into())]);
        assert_eq!(p.to_string(), "x^5 - 3x^2");
        let p = SignedPolynomial::from_terms([(1, (-1).into()), (0, 2.into())]);
        assert_eq!(p.to_string(), "-x + 2");
        assert_eq!(SignedPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn product_of_single_edges() {
        let a = SignedPolynomial::from_terms([(3, 1.into()), (0, (-1).into())]);
        let sq = &a * &a;
        assert_eq!(sq, SignedPolynomial::from_terms([(6, 1.into()), (3, (-2).into()), (0, 1.into())]));
        assert_eq!(&a * &SignedPolynomial::one(), a);
    }

    #[test]
    fn eval_and_sign() {
        let p = IntPoly::from_i64(&[1, -3, 1]); // y^2 - 3y + 1
        assert_eq!(p.eval(&q(1, 2)), q(-1, 4));
        assert_eq!(p.sign_at(&q(3, 1)), 1);
        assert_eq!(p.sign_at(&q(1, 1)), -1);
        assert_eq!(IntPoly::from_i64(&[-2, 0, 1]).sign_at(&q(0, 1)), -1);
    }

    #[test]
    fn gcd_and_squarefree() {
        // (y-1)^2 (y+2)
        let a = &(&IntPoly::from_i64(&[-1, 1]) * &IntPoly::from_i64(&[-1, 1])) * &IntPoly::from_i64(&[2, 1]);
        let b = &IntPoly::from_i64(&[-1, 1]) * &IntPoly::from_i64(&[5, 1]);
        assert_eq!(a.gcd(&b), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(a.squarefree(), &IntPoly::from_i64(&[-1, 1]) * &IntPoly::from_i64(&[2, 1]));
        assert_eq!(IntPoly::from_i64(&[2, 4]).gcd(&IntPoly::from_i64(&[3])), IntPoly::from_i64(&[1]));
    }

    #[test]
    fn pseudo_remainder_keeps_sign() {
        let a = IntPoly::from_i64(&[1, 0, 0, 1]);
        let d = IntPoly::from_i64(&[1, -2]);
        // true remainder is a(1/2) = 9/8 > 0
        let r = a.positive_pseudo_rem(&d);
        assert_eq!(r.degree(), Some(0));
        assert!(r.coeffs()[0].is_positive());
    }

    #[test]
    fn cauchy() {
        assert_eq!(IntPoly::from_i64(&[-3, 1]).cauchy_bound(), BigInt::from(4));
        assert_eq!(IntPoly::from_i64(&[1, -3, 1]).cauchy_bound(), BigInt::from(4));
        assert_eq!(IntPoly::from_i64(&[1, 3, 2]).cauchy_bound(), BigInt::from(3));
    }
}
