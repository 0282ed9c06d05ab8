//! Hilbert series of monomial ideals and the data derived from them.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binom_poly, binomial, Monomial, MultiPoly, Rational, UniPoly};

/// Minimal generators of the ideal spanned by `gens`.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `Q(t)` of `HS_{S/L}(t) = Q(t) / (1 - t)^nvars` for the monomial
/// ideal `L`. Pivot recursion `N(L) = N(L + (x)) + t N(L : x)` on a variable
/// occurring in the most generators of degree at least two.
pub fn hilbert_series_monomial(gens: &[Monomial], nvars: usize) -> UniPoly {
    assert!(gens.iter().all(|g| g.nvars() == nvars), "generator arity mismatch");
    numerator(minimalize(gens.to_vec()))
}

fn numerator(gens: Vec<Monomial>) -> UniPoly {
    if gens.is_empty() {
        return UniPoly::one();
    }
    if gens.iter().any(Monomial::is_one) {
        return UniPoly::zero();
    }
    let nvars = gens[0].nvars();
    let mut counts = vec![0usize; nvars];
    let mut coprime = true;
    let mut used = vec![false; nvars];
    for g in &gens {
        for (v, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                if used[v] {
                    coprime = false;
                }
                used[v] = true;
                if g.degree() >= 2 {
                    counts[v] += 1;
                }
            }
        }
    }
    if coprime {
        return gens.iter().fold(UniPoly::one(), |acc, g| {
            &acc * &one_minus_t_pow(g.degree() as usize)
        });
    }
    let pivot = (0..nvars).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let x = Monomial::var(nvars, pivot);

    let mut plus = gens.clone();
    plus.push(x.clone());
    let with_x = numerator(minimalize(plus));

    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.exps().to_vec();
            e[pivot] = e[pivot].saturating_sub(1);
            Monomial::new(e)
        })
        .collect();
    let quotient = numerator(minimalize(colon));
    &with_x + &(&UniPoly::t() * &quotient)
}

fn one_minus_t_pow(d: usize) -> UniPoly {
    let mut c = vec![Rational::zero(); d + 1];
    c[0] = Rational::one();
    c[d] -= Rational::one();
    UniPoly::from_coeffs(c)
}

/// Hilbert series numerator, Hilbert polynomial, index of regularity and
/// Krull dimension of `S/I` (`None` when `I = S`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub nvars: usize,
    pub series_numerator: UniPoly,
    pub hilbert_polynomial: UniPoly,
    pub index_of_regularity: usize,
    pub krull_dim: Option<usize>,
}

impl HilbertData {
    pub fn from_numerator(numer: UniPoly, nvars: usize) -> Self {
        let (reduced, krull_dim) = if numer.is_zero() {
            (UniPoly::zero(), None)
        } else {
            let mut q = numer.clone();
            let mut dim = nvars;
            while dim > 0 {
                match q.div_one_minus_t() {
                    Some(next) => {
                        q = next;
                        dim -= 1;
                    }
                    None => break,
                }
            }
            (q, Some(dim))
        };
        let hp = match krull_dim {
            None | Some(0) => UniPoly::zero(),
            Some(d) => {
                let d = d as i64;
                reduced
                    .coeffs()
                    .iter()
                    .enumerate()
                    .fold(UniPoly::zero(), |acc, (j, qj)| {
                        &acc + &binom_poly(d - 1 - j as i64, (d - 1) as u32).scale(qj)
                    })
            }
        };
        let mut data = HilbertData {
            nvars,
            series_numerator: numer,
            hilbert_polynomial: hp,
            index_of_regularity: 0,
            krull_dim,
        };
        let horizon = data.series_numerator.degree().unwrap_or(0) + 1;
        data.index_of_regularity = (0..=horizon)
            .filter(|&l| data.hilbert_function(l) != data.hilbert_polynomial.eval_int(l as i64))
            .map(|l| l + 1)
            .max()
            .unwrap_or(0);
        data
    }

    /// Coefficient of `t^l` in `Q(t) / (1 - t)^nvars`.
    pub fn hilbert_function(&self, l: usize) -> Rational {
        let n = self.nvars as i64;
        self.series_numerator
            .coeffs()
            .iter()
            .enumerate()
            .take(l + 1)
            .fold(Rational::zero(), |acc, (j, q)| {
                acc + q * Rational::from_integer(binomial(l as i64 - j as i64 + n - 1, n - 1))
            })
    }

    /// Dimension of the projective zero set; `None` when it is empty.
    pub fn projective_dim(&self) -> Option<usize> {
        match self.krull_dim {
            Some(d) if d >= 1 => Some(d - 1),
            _ => None,
        }
    }
}

/// `dim_k (S/I)_k` by linear algebra on the monomial multiples of the
/// generators, independent of any Gröbner computation.
pub fn hilbert_function_direct(generators: &[MultiPoly], nvars: usize, k: u32) -> BigInt {
    let monomials = monomials_of_degree(nvars, k);
    let index: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut pivots: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
    for g in generators {
        let Some(d) = g.total_degree() else { continue };
        if d > k {
            continue;
        }
        for mult in monomials_of_degree(nvars, k - d) {
            let mut row: Vec<(usize, Rational)> = g
                .terms()
                .map(|(m, c)| (index[&m.mul(&mult)], c.clone()))
                .collect();
            row.sort_by(|a, b| b.0.cmp(&a.0));
            insert_row(&mut pivots, row);
        }
    }
    let total = binomial(k as i64 + nvars as i64 - 1, nvars as i64 - 1);
    total - BigInt::from(pivots.len())
}

/// Sparse rows sorted by descending column; the first entry is the pivot.
fn insert_row(pivots: &mut HashMap<usize, Vec<(usize, Rational)>>, mut row: Vec<(usize, Rational)>) {
    while let Some((col, c)) = row.first().cloned() {
        match pivots.get(&col) {
            None => {
                pivots.insert(col, row);
                return;
            }
            Some(p) => {
                let factor = c / &p[0].1;
                row = sub_scaled(&row, p, &factor);
            }
        }
    }
}

fn sub_scaled(a: &[(usize, Rational)], b: &[(usize, Rational)], f: &Rational) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 > b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 > a[i].0 {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = vec![0u32; nvars];
    fn rec(v: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v + 1 == e.len() {
            e[v] = left;
            out.push(Monomial::new(e.clone()));
            return;
        }
        for x in (0..=left).rev() {
            e[v] = x;
            rec(v + 1, left - x, e, out);
        }
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(0, d, &mut e, &mut out);
    out
}

/// Numerator of the Hilbert series of `S/(f_1..f_r)` for a regular sequence
/// of degrees `d_i`: `Π (1 - t^{d_i})`.
pub fn regular_sequence_numerator(degrees: &[u32]) -> UniPoly {
    degrees
        .iter()
        .fold(UniPoly::one(), |acc, &d| &acc * &one_minus_t_pow(d as usize))
}
