//! Exact two-variable Laurent polynomials in `v` and `z` with integer
//! coefficients.
//!
//! Terms are stored in a `BTreeMap` keyed by the exponent pair `(v, z)`;
//! zero coefficients are never stored, so structural equality is
//! polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by a non-monomial")]
    NonMonomialDivisor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative power of a non-monomial")]
    NegativePower,
    #[error("the zero polynomial has no lowest degree")]
    ZeroPolynomial,
}

/// A Laurent polynomial `Σ c · v^i z^j` with `c ∈ ℤ`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c · v^i · z^j`.
    pub fn monomial(c: i64, i: i32, j: i32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn v() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// The value of a crossingless unknot split off a diagram:
    /// `δ = (v⁻¹ − v) / z`.
    pub fn delta() -> Self {
        Self::monomial(1, -1, -1) - Self::monomial(1, 1, -1)
    }

    /// HOMFLY polynomial of the `mu`-component unlink, `δ^(mu-1)`.
    pub fn unlink(mu: usize) -> Self {
        assert!(mu >= 1, "an unlink has at least one component");
        Self::delta().pow(mu as u32 - 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((i32, i32), i64)>>(it: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in it {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: i32, j: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: i32, j: i32) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Terms in ascending `(v, z)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((i32, i32), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    /// The single term, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(i64, i32, i32)> {
        if self.terms.len() == 1 {
            let (&(i, j), &c) = self.terms.iter().next().unwrap();
            Some((c, i, j))
        } else {
            None
        }
    }

    /// Multiply by `c · v^i z^j`.
    pub fn mul_monomial(&self, c: i64, i: i32, j: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), &k)| ((a + i, b + j), k * c))
                .collect(),
        }
    }

    /// Exact division by a monomial divisor. The quotient must have integer
    /// coefficients, so the divisor's coefficient is restricted to ±1 unless
    /// it divides every coefficient.
    pub fn div_monomial(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let (c, i, j) = divisor.as_monomial().ok_or(PolyError::NonMonomialDivisor)?;
        if self.terms.values().any(|k| k % c != 0) {
            return Err(PolyError::NonMonomialDivisor);
        }
        Ok(Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), &k)| ((a - i, b - j), k / c))
                .collect(),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Integer power; negative exponents are allowed only for monomials.
    pub fn powi(&self, e: i32) -> Result<Self, PolyError> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        let (c, i, j) = self.as_monomial().ok_or(PolyError::NegativePower)?;
        if c.abs() != 1 {
            return Err(PolyError::NonMonomialDivisor);
        }
        let k = (-e) as i32;
        let sign = if c < 0 && k % 2 == 1 { -1 } else { 1 };
        Ok(Self::monomial(sign, -i * k, -j * k))
    }

    /// Lowest power of `v` in the support.
    pub fn ord_v(&self) -> Result<i32, PolyError> {
        self.terms.keys().map(|&(i, _)| i).min().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn max_v(&self) -> Option<i32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn min_z(&self) -> Option<i32> {
        self.terms.keys().map(|&(_, j)| j).min()
    }

    pub fn max_z(&self) -> Option<i32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// `p(v, z) ↦ p(v⁻¹, −z)`, the effect of mirroring a link.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), &c)| ((-i, j), if j.rem_euclid(2) == 1 { -c } else { c }))
                .collect(),
        }
    }

    /// Specialise `v = 1`, giving the Conway polynomial as coefficients of
    /// `z^k` (index 0 is the lowest `z` power, returned alongside).
    pub fn at_v_one(&self) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        for (&(_, j), &c) in &self.terms {
            *out.entry(j).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Numeric evaluation.
    pub fn eval(&self, v: f64, z: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), &c)| c as f64 * v.powi(i) * z.powi(j))
            .sum()
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly2({})", crate::notation::render_poly(self))
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::render_poly(self))
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(i, j), &c) in &rhs.terms {
            self.add_term(i, j, c);
        }
    }
}

impl Add<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

impl Sub<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a, b), &c) in &self.terms {
            for (&(i, j), &k) in &rhs.terms {
                out.add_term(a + i, b + j, c * k);
            }
        }
        out
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_delta_numerator() {
        let n = LaurentPoly2::monomial(1, -1, 0) - LaurentPoly2::v();
        let sq = (&n * &n).div_monomial(&LaurentPoly2::monomial(1, 0, 2)).unwrap();
        let expected = LaurentPoly2::from_terms([((-2, -2), 1), ((0, -2), -2), ((2, -2), 1)]);
        assert_eq!(sq, expected);
    }

    #[test]
    fn cancellation_leaves_empty_support() {
        let p = LaurentPoly2::from_terms([((1, 2), 3), ((-4, 0), -1)]);
        let s = &p + &(-&p);
        assert!(s.is_zero());
        assert_eq!(s.len(), 0);
    }

    #[test]
    fn non_monomial_division_is_rejected() {
        let p = LaurentPoly2::one();
        let d = LaurentPoly2::v() + LaurentPoly2::one();
        assert_eq!(p.div_monomial(&d), Err(PolyError::NonMonomialDivisor));
    }

    #[test]
    fn mirror_is_an_involution() {
        let p = LaurentPoly2::from_terms([((1, 1), 1), ((1, -1), 1), ((3, -1), -1)]);
        assert_eq!(p.mirror().mirror(), p);
        assert_eq!(p.mirror().coeff(-1, 1), -1);
    }

    #[test]
    fn ord_v_of_zero_is_an_error() {
        assert_eq!(LaurentPoly2::zero().ord_v(), Err(PolyError::ZeroPolynomial));
    }
}
