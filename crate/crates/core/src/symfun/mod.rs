//! Symmetric-function engine: `Δ_λ` determinants, the Todd coefficient
//! sequence `b`, Todd and Chern-character polynomials, Schur polynomials and
//! the coefficients `d^m_{λμ}` and `δ^{m,k}_μ` of the character formula.
//!
//! Bernoulli numbers use the older all-positive convention
//! `B_1 = 1/6, B_2 = 1/30, B_3 = 1/42`, with signs carried explicitly:
//! `t/(1 - e^{-t}) = 1 + t/2 + Σ_j (-1)^{j-1} B_j t^{2j} / (2j)!`.

mod schur;
mod todd;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{binomial, factorial, CommRing, MultiPoly, Rational, TruncSeries};
use crate::linalg::int_det;
use crate::partitions::{enumerate, Partition};

pub use schur::{
    complete_values, elementary_values, schur_bialternant, schur_eval, schur_jacobi_trudi,
};
pub use todd::{
    chern_character_poly, chern_vars, fmt_common_denominator, symmetric_to_elementary,
    todd_poly, todd_poly_direct,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymfunError {
    #[error("coefficient sequence must start with the ring identity")]
    NotNormalized,
    #[error("partition {lambda} has more than {vars} parts")]
    TooLong { lambda: Partition, vars: usize },
    #[error("constraint violated: {0}")]
    Constraint(String),
}

/// A sequence `c_0 = 1, c_1, c_2, ...` over a commutative ring.
/// Indices below zero and past the stored prefix read as zero.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffSeq<R> {
    values: Vec<R>,
}

impl<R: CommRing> CoeffSeq<R> {
    pub fn new(values: Vec<R>) -> Result<Self, SymfunError> {
        match values.first() {
            Some(c0) if *c0 == c0.one_like() => Ok(CoeffSeq { values }),
            _ => Err(SymfunError::NotNormalized),
        }
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn one(&self) -> R {
        self.values[0].clone()
    }

    pub fn get(&self, i: i64) -> R {
        if i < 0 || i as usize >= self.values.len() {
            self.values[0].zero_like()
        } else {
            self.values[i as usize].clone()
        }
    }

    /// `c^∨_i = (-1)^i c_i`.
    pub fn dual(&self) -> Self {
        CoeffSeq {
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { c.neg_ref() })
                .collect(),
        }
    }
}

impl CoeffSeq<Rational> {
    pub fn from_rationals(values: Vec<Rational>) -> Result<Self, SymfunError> {
        Self::new(values)
    }

    /// Coefficients of the inverse power series, same length.
    pub fn inverse(&self) -> Self {
        let inv = TruncSeries::new(self.values.clone())
            .inverse()
            .expect("constant term is one");
        CoeffSeq {
            values: inv.coeffs().to_vec(),
        }
    }
}

/// `det(c_{λ_i - i + j})` over the length of `λ`; `Δ_() = 1`.
pub fn delta_det<R: CommRing>(lambda: &Partition, c: &CoeffSeq<R>) -> R {
    let r = lambda.len();
    let matrix: Vec<Vec<R>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| c.get(lambda.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    R::det(&matrix, &c.one())
}

/// Bernoulli number `B_n`, `n >= 1`, in the all-positive convention, from the
/// explicit double sum
/// `B_n = (-1)^{n-1} Σ_{k=1}^{2n} 1/(k+1) Σ_{r=1}^{k} (-1)^r C(k,r) r^{2n}`.
pub fn bernoulli(n: u32) -> Rational {
    assert!(n >= 1, "Bernoulli numbers are indexed from 1");
    let e = 2 * n;
    let mut total = Rational::zero();
    for k in 1..=e as i64 {
        let mut inner = BigInt::zero();
        for r in 1..=k {
            let term = binomial(k, r) * BigInt::from(r).pow(e);
            if r % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += Rational::new(inner, BigInt::from(k + 1));
    }
    if n % 2 == 0 {
        -total
    } else {
        total
    }
}

/// Coefficients `b_0..b_K` of `t/(1 - e^{-t})`, by inverting
/// `(1 - e^{-t})/t = Σ (-1)^i t^i/(i+1)!`.
pub fn b_sequence(k: usize) -> CoeffSeq<Rational> {
    let q: Vec<Rational> = (0..=k)
        .map(|i| {
            let v = Rational::new(BigInt::one(), factorial(i as u64 + 1));
            if i % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect();
    let b = TruncSeries::new(q).inverse().expect("constant term is one");
    CoeffSeq {
        values: b.coeffs().to_vec(),
    }
}

/// The same coefficients assembled from [`bernoulli`].
pub fn b_from_bernoulli(k: usize) -> Vec<Rational> {
    (0..=k)
        .map(|i| match i {
            0 => Rational::one(),
            1 => Rational::new(1.into(), 2.into()),
            i if i % 2 == 1 => Rational::zero(),
            i => {
                let j = (i / 2) as u32;
                let v = bernoulli(j) / Rational::from_integer(factorial(i as u64));
                if j % 2 == 1 {
                    v
                } else {
                    -v
                }
            }
        })
        .collect()
}

/// `d^m_{λμ} = det C(λ_i + m + 1 - i, μ_j + m + 1 - j)`, `1 <= i, j <= m`.
pub fn d_coeff(lambda: &Partition, mu: &Partition, m: u32) -> Result<BigInt, SymfunError> {
    let m_us = m as usize;
    for p in [lambda, mu] {
        if p.len() > m_us {
            return Err(SymfunError::TooLong {
                lambda: p.clone(),
                vars: m_us,
            });
        }
    }
    let matrix: Vec<Vec<BigInt>> = (1..=m_us)
        .map(|i| {
            let top = lambda.part(i - 1) as i64 + m as i64 + 1 - i as i64;
            (1..=m_us)
                .map(|j| binomial(top, mu.part(j - 1) as i64 + m as i64 + 1 - j as i64))
                .collect()
        })
        .collect();
    Ok(int_det(&matrix))
}

/// `δ^{m,k}_μ = (-1)^{|μ|} Σ_{μ ⊆ λ, |λ| = m-k} Δ_λ(b) d^m_{λμ}`.
pub fn delta_coeff(m: u32, k: u32, mu: &Partition) -> Result<Rational, SymfunError> {
    if k > m || mu.size() > m - k {
        return Err(SymfunError::Constraint(format!(
            "need k <= m and |mu| <= m - k (m={m}, k={k}, mu={mu})"
        )));
    }
    let size = m - k;
    let b = b_sequence(size as usize);
    let mut total = Rational::zero();
    for lambda in enumerate(size, size, size, Some(mu)) {
        let d = d_coeff(&lambda, mu, m)?;
        if d.is_zero() {
            continue;
        }
        total += delta_det(&lambda, &b) * Rational::from_integer(d);
    }
    Ok(if mu.size() % 2 == 0 { total } else { -total })
}

/// `δ^{m,k}_μ` for all `μ` with `|μ| <= m - k` and `μ_1 <= n - m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaTable {
    pub m: u32,
    pub k: u32,
    pub entries: BTreeMap<Partition, Rational>,
}

pub fn delta_table(m: u32, k: u32, n: u32) -> Result<DeltaTable, SymfunError> {
    if k > m || m > n {
        return Err(SymfunError::Constraint(format!(
            "need k <= m <= n (m={m}, k={k}, n={n})"
        )));
    }
    let mut entries = BTreeMap::new();
    for size in 0..=m - k {
        for mu in enumerate(size, n - m, size, None) {
            let v = delta_coeff(m, k, &mu)?;
            entries.insert(mu, v);
        }
    }
    Ok(DeltaTable { m, k, entries })
}

impl DeltaTable {
    /// Entries in enumeration order: by size, then lexicographically descending.
    pub fn ordered(&self) -> Vec<(&Partition, &Rational)> {
        let mut v: Vec<_> = self.entries.iter().collect();
        v.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then_with(|| b.0.cmp(a.0)));
        v
    }
}

/// `N(k, m) = [(m-k+1)! (m-k)! ... 1!]^2`.
pub fn scaling_factor(k: u32, m: u32) -> BigInt {
    assert!(k <= m, "k must not exceed m");
    let s: BigInt = (1..=(m - k + 1) as u64).map(factorial).product();
    &s * &s
}

/// `[(M+1)! M! ... (M-r+2)!]^2` for a partition of size `M` and length `r`.
pub fn delta_b_denominator_bound(lambda: &Partition) -> BigInt {
    let big_m = lambda.size() as u64;
    let r = lambda.len() as u64;
    let s: BigInt = (0..r).map(|i| factorial(big_m + 1 - i)).product();
    &s * &s
}

/// Convenience for weight checks: `Σ_k k * e_k` over the exponents of each
/// term, where variable `i` has weight `i + 1`.
pub fn weighted_degrees(p: &MultiPoly) -> Vec<u32> {
    let mut out: Vec<u32> = p
        .terms()
        .map(|(mono, _)| {
            mono.exps()
                .iter()
                .enumerate()
                .map(|(i, &e)| (i as u32 + 1) * e)
                .sum()
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
