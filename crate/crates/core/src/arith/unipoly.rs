//! Dense univariate polynomials in `T` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ring::CommRing;
use super::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `T`
    pub fn t() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn monomial(degree: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// Coefficients indexed by degree; trailing zeros are dropped.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> Rational {
        self.eval(&int(t))
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::one(), |acc, _| &acc * self)
    }

    /// Exact division by `(1 - t)`, if it divides.
    pub fn div_one_minus_t(&self) -> Option<UniPoly> {
        if self.is_zero() || !self.eval(&Rational::one()).is_zero() {
            return None;
        }
        // self = (1 - t) q  =>  q_i = sum_{j<=i} self_j
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut running = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            running += c;
            q.push(running.clone());
        }
        Some(UniPoly::from_coeffs(q))
    }

    /// Compact rendering `1/2T^2+3/2T+1` used in reports.
    pub fn compact(&self) -> String {
        self.render("T", true)
    }

    fn render(&self, var: &str, compact: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (plus, minus, star) = if compact {
            ("+", "-", "")
        } else {
            (" + ", " - ", "*")
        };
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { minus } else { plus });
            }
            let power = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{magnitude}{star}{power}"));
            }
        }
        out
    }
}

/// `(T + shift)(T + shift - 1)...(T + shift - n + 1) / n!`, i.e. `binom(T + shift, n)`.
pub fn binom_poly(shift: i64, n: u32) -> UniPoly {
    let mut acc = UniPoly::one();
    for i in 0..n as i64 {
        let factor = UniPoly::from_coeffs(vec![int(shift - i), Rational::one()]);
        acc = &acc * &factor;
    }
    let denom = super::factorial(n as u64);
    acc.scale(&Rational::new(One::one(), denom))
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("T", false))
    }
}

impl<'a> Add for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &'a UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &'a UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &'a UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl CommRing for UniPoly {
    fn zero_like(&self) -> Self {
        UniPoly::zero()
    }
    fn one_like(&self) -> Self {
        UniPoly::one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        UniPoly::constant(q.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, rat};

    #[test]
    fn binom_poly_projective_plane() {
        // (T+2)(T+1)/2 = 1/2 T^2 + 3/2 T + 1
        let p = binom_poly(2, 2);
        assert_eq!(p.coeffs(), &[int(1), rat(3, 2), rat(1, 2)]);
        assert_eq!(p.compact(), "1/2T^2+3/2T+1");
    }

    #[test]
    fn binom_poly_degree_zero_is_one() {
        assert_eq!(binom_poly(7, 0), UniPoly::one());
        assert_eq!(binom_poly(-3, 0), UniPoly::one());
    }

    #[test]
    fn binom_poly_value_at_zero() {
        assert_eq!(binom_poly(3, 3).eval_int(0), int(1));
    }

    #[test]
    fn binom_poly_matches_integer_binomials() {
        for n in 0..8u32 {
            let p = binom_poly(n as i64, n);
            for t in 0..12i64 {
                assert_eq!(
                    p.eval_int(t),
                    Rational::from_integer(binomial(t + n as i64, n as i64))
                );
            }
        }
    }

    #[test]
    fn division_by_one_minus_t() {
        // 1 - 2t^2 + t^3 = (1 - t)(1 + t - t^2)
        let p = UniPoly::from_ints(&[1, 0, -2, 1]);
        let q = p.div_one_minus_t().unwrap();
        assert_eq!(q, UniPoly::from_ints(&[1, 1, -1]));
        assert!(UniPoly::from_ints(&[1, 1]).div_one_minus_t().is_none());
    }

    #[test]
    fn rendering() {
        assert_eq!(UniPoly::from_ints(&[0, 3]).compact(), "3T");
        assert_eq!(UniPoly::zero().compact(), "0");
        assert_eq!(UniPoly::from_ints(&[1, -1]).to_string(), "-T + 1");
    }
}
