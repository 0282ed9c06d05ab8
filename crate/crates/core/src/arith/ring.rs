//! A minimal commutative-ring abstraction.
//!
//! Elements carry their own context (variable list, truncation order), so the
//! additive and multiplicative identities are produced from an existing value.

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::Rational;

pub trait CommRing: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    /// Image of a rational constant; every carrier here is a Q-algebra.
    fn from_rational_like(&self, q: &Rational) -> Self;

    fn from_int_like(&self, n: i64) -> Self {
        self.from_rational_like(&super::int(n))
    }

    fn pow_ref(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Determinant of a square matrix. The default is a division-free
    /// Laplace expansion memoized over column subsets, `O(2^r * r)` ring
    /// operations. Fields override it with elimination.
    fn det(matrix: &[Vec<Self>], one: &Self) -> Self {
        subset_laplace_det(matrix, one)
    }
}

pub fn subset_laplace_det<R: CommRing>(matrix: &[Vec<R>], one: &R) -> R {
    let r = matrix.len();
    if r == 0 {
        return one.clone();
    }
    assert!(r <= 24, "determinant too large for subset expansion");
    assert!(matrix.iter().all(|row| row.len() == r), "matrix not square");
    let zero = one.zero_like();
    // minors[S] = det(rows 0..|S|, columns S)
    let mut minors: Vec<Option<R>> = vec![None; 1 << r];
    minors[0] = Some(one.clone());
    for mask in 1usize..(1 << r) {
        let k = mask.count_ones() as usize;
        let row = &matrix[k - 1];
        let mut acc = zero.clone();
        let mut position = 0usize;
        for col in 0..r {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &row[col];
            if !entry.is_zero_elem() {
                if let Some(minor) = &minors[mask & !(1 << col)] {
                    if !minor.is_zero_elem() {
                        let term = entry.mul_ref(minor);
                        acc = if (k - 1 + position) % 2 == 0 {
                            acc.add_ref(&term)
                        } else {
                            acc.sub_ref(&term)
                        };
                    }
                }
            }
            position += 1;
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << r) - 1].take().unwrap()
}

impl CommRing for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
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
        q.clone()
    }

    fn det(matrix: &[Vec<Self>], _one: &Self) -> Self {
        crate::linalg::QMatrix::from_rows(matrix.to_vec()).det()
    }
}
