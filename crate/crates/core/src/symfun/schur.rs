//! Schur polynomials evaluated at rational points.

use num_traits::{One, Zero};

use super::{delta_det, CoeffSeq, SymfunError};
use crate::arith::Rational;
use crate::linalg::QMatrix;
use crate::partitions::Partition;

/// `e_0, ..., e_len` of the given values.
pub fn elementary_values(gamma: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for g in gamma {
        e.push(Rational::zero());
        for k in (1..e.len()).rev() {
            let add = &e[k - 1] * g;
            e[k] += add;
        }
    }
    e
}

/// `h_0, ..., h_upto` of the given values.
pub fn complete_values(gamma: &[Rational], upto: usize) -> Vec<Rational> {
    let mut h = vec![Rational::zero(); upto + 1];
    h[0] = Rational::one();
    for g in gamma {
        // multiply by 1/(1 - g t)
        for k in 1..=upto {
            let add = &h[k - 1] * g;
            h[k] += add;
        }
    }
    h
}

/// `det(γ_i^{λ_j + m - j}) / det(γ_i^{m - j})`; `None` when two values coincide.
pub fn schur_bialternant(lambda: &Partition, gamma: &[Rational]) -> Option<Rational> {
    let m = gamma.len();
    if lambda.len() > m {
        return None;
    }
    let alternant = |shift: &dyn Fn(usize) -> u32| {
        let rows = gamma
            .iter()
            .map(|g| (0..m).map(|j| pow(g, shift(j))).collect())
            .collect();
        QMatrix::from_rows_with_cols(rows, m).det()
    };
    let vandermonde = alternant(&|j| (m - 1 - j) as u32);
    if vandermonde.is_zero() {
        return None;
    }
    Some(alternant(&|j| lambda.part(j) + (m - 1 - j) as u32) / vandermonde)
}

/// Jacobi-Trudi: `s_λ = det(h_{λ_i - i + j})`. Valid at repeated values and
/// returns zero when `λ` has more parts than there are values.
pub fn schur_jacobi_trudi(lambda: &Partition, gamma: &[Rational]) -> Rational {
    let upto = (lambda.first() as usize + lambda.len()).max(1);
    let h = CoeffSeq::new(complete_values(gamma, upto)).expect("h_0 = 1");
    delta_det(lambda, &h)
}

/// `s_λ(γ_1, ..., γ_m)` for `λ` with at most `m` parts. Uses the bialternant
/// when the values are distinct and Jacobi-Trudi otherwise.
pub fn schur_eval(lambda: &Partition, gamma: &[Rational]) -> Result<Rational, SymfunError> {
    if lambda.len() > gamma.len() {
        return Err(SymfunError::TooLong {
            lambda: lambda.clone(),
            vars: gamma.len(),
        });
    }
    Ok(schur_bialternant(lambda, gamma).unwrap_or_else(|| schur_jacobi_trudi(lambda, gamma)))
}

fn pow(g: &Rational, e: u32) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_slice(parts)
    }

    #[test]
    fn two_variable_values() {
        let g = [int(2), int(3)];
        assert_eq!(schur_eval(&p(&[1]), &g).unwrap(), int(5));
        assert_eq!(schur_eval(&p(&[1, 1]), &g).unwrap(), int(6));
        assert_eq!(schur_eval(&p(&[2]), &g).unwrap(), int(19));
    }

    #[test]
    fn repeated_values_use_jacobi_trudi() {
        let g = [int(2), int(2)];
        assert!(schur_bialternant(&p(&[2]), &g).is_none());
        // h_2(2,2) = 4 + 4 + 4
        assert_eq!(schur_eval(&p(&[2]), &g).unwrap(), int(12));
    }

    #[test]
    fn too_many_parts() {
        let g = [int(1), int(5)];
        assert!(schur_eval(&p(&[1, 1, 1]), &g).is_err());
        assert_eq!(schur_jacobi_trudi(&p(&[1, 1, 1]), &g), int(0));
    }

    #[test]
    fn elementary_and_complete() {
        let g = [int(1), int(2), int(3)];
        assert_eq!(elementary_values(&g), vec![int(1), int(6), int(11), int(6)]);
        assert_eq!(complete_values(&g, 2), vec![int(1), int(6), int(25)]);
    }
}
