//! Power series truncated modulo `h^K`.

use std::fmt;

use num_traits::{One, Zero};

use super::ring::CommRing;
use super::{ArithError, Rational};

/// A class `sum_{i<K} a_i h^i` modulo `h^K`. The order `K` is part of the
/// value; operations on series of different orders fail instead of truncating.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// `coeffs.len()` is the order.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        TruncSeries { coeffs }
    }

    /// Pads with zeros or truncates `coeffs` to exactly `order` entries.
    pub fn from_prefix(coeffs: &[Rational], order: usize) -> Self {
        let mut c: Vec<Rational> = coeffs.iter().take(order).cloned().collect();
        c.resize(order, Rational::zero());
        TruncSeries { coeffs: c }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![Rational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, Rational::one())
    }

    pub fn monomial(order: usize, degree: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        if degree < order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// `1 + a h`
    pub fn linear(order: usize, a: Rational) -> Self {
        let mut s = Self::one(order);
        if order > 1 {
            s.coeffs[1] = a;
        }
        s
    }

    /// `exp(a h)`
    pub fn exp_linear(order: usize, a: &Rational) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut term = Rational::one();
        for i in 0..order {
            if i > 0 {
                term = term * a / Rational::from_integer(i.into());
            }
            coeffs.push(term.clone());
        }
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `h^i`; zero beyond the order.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<(), ArithError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(ArithError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        Ok(TruncSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        Ok(TruncSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let k = self.order();
        let mut out = vec![Rational::zero(); k];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..k - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Multiplicative inverse modulo `h^K`; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        let k = self.order();
        if k == 0 {
            return Ok(self.clone());
        }
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(ArithError::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(k);
        out.push(inv0.clone());
        for n in 1..k {
            let mut acc = Rational::zero();
            for i in 1..=n {
                acc += &self.coeffs[i] * &out[n - i];
            }
            out.push(-acc * &inv0);
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `h^k`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![Rational::zero(); n];
        for i in 0..n.saturating_sub(k) {
            coeffs[i + k] = self.coeffs[i].clone();
        }
        TruncSeries { coeffs }
    }

    /// Sequence `c_i <- (-1)^i c_i`.
    pub fn dual(&self) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
                .collect(),
        }
    }
}

pub fn series_mul(s: &TruncSeries, t: &TruncSeries) -> Result<TruncSeries, ArithError> {
    s.try_mul(t)
}

pub fn series_inverse(s: &TruncSeries) -> Result<TruncSeries, ArithError> {
    s.inverse()
}

impl CommRing for TruncSeries {
    fn zero_like(&self) -> Self {
        TruncSeries::zero(self.order())
    }
    fn one_like(&self) -> Self {
        TruncSeries::one(self.order())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.try_add(other).expect("series order mismatch")
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.try_sub(other).expect("series order mismatch")
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.try_mul(other).expect("series order mismatch")
    }
    fn neg_ref(&self) -> Self {
        self.scale(&-Rational::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        TruncSeries::monomial(self.order(), 0, q.clone())
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*h"),
                _ => format!("{c}*h^{i}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", parts.join(" + "))?;
        }
        write!(f, " mod h^{}", self.order())
    }
}
