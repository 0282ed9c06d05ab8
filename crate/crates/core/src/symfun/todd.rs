//! Todd and Chern-character polynomials in abstract Chern classes `c1..cm`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{b_sequence, delta_det, CoeffSeq};
use crate::arith::{factorial, lcm_of_denominators, Monomial, MultiPoly, Rational, Vars};
use crate::partitions::enumerate;

/// Variables `c1, ..., cm`.
pub fn chern_vars(m: usize) -> Vars {
    (1..=m).map(|i| format!("c{i}")).collect::<Vec<_>>().into()
}

fn chern_seq(m: usize) -> CoeffSeq<MultiPoly> {
    let vars = chern_vars(m);
    let mut values = vec![MultiPoly::one(vars.clone())];
    values.extend((0..m).map(|i| MultiPoly::var(vars.clone(), i)));
    CoeffSeq::new(values).expect("c_0 = 1")
}

/// `T_m = Σ_{|λ| = m} Δ_{λ'}(b) Δ_λ(c)`.
pub fn todd_poly(m: usize) -> MultiPoly {
    let b = b_sequence(m);
    let c = chern_seq(m);
    let mut total = MultiPoly::zero(chern_vars(m));
    for lambda in enumerate(m as u32, m as u32, m as u32, None) {
        let coeff = delta_det(&lambda.conjugate(), &b);
        if coeff.is_zero() {
            continue;
        }
        total = &total + &delta_det(&lambda, &c).scale(&coeff);
    }
    total
}

/// `T_m` from its definition: the degree-`m` part of `Π_{i=1}^m f(t_i)` with
/// `f(t) = t/(1 - e^{-t})`, rewritten in the elementary symmetric functions
/// `c_k = e_k(t_1, ..., t_m)`.
pub fn todd_poly_direct(m: usize) -> MultiPoly {
    let tvars: Vars = (1..=m).map(|i| format!("t{i}")).collect::<Vec<_>>().into();
    let b = b_sequence(m);
    let mut product = MultiPoly::one(tvars.clone());
    for i in 0..m {
        let mut f = MultiPoly::zero(tvars.clone());
        for (j, bj) in b.values().iter().enumerate() {
            let mut e = vec![0u32; m];
            e[i] = j as u32;
            f.add_term(Monomial::new(e), bj.clone());
        }
        product = truncate(&(&product * &f), m as u32);
    }
    symmetric_to_elementary(&product.graded_part(m as u32), &chern_vars(m))
}

fn truncate(p: &MultiPoly, max_degree: u32) -> MultiPoly {
    MultiPoly::from_terms(
        p.vars().clone(),
        p.terms()
            .filter(|(mono, _)| mono.degree() <= max_degree)
            .map(|(mono, c)| (mono.clone(), c.clone())),
    )
}

/// Rewrites a symmetric polynomial in `t_1..t_m` as a polynomial in the
/// elementary symmetric functions, named by `out_vars` (length `m`).
/// Panics if the input is not symmetric.
pub fn symmetric_to_elementary(p: &MultiPoly, out_vars: &Vars) -> MultiPoly {
    let m = p.nvars();
    assert_eq!(out_vars.len(), m, "one output variable per elementary function");
    let tvars = p.vars().clone();
    let elementary: Vec<MultiPoly> = (1..=m).map(|k| elementary_poly(&tvars, k)).collect();
    let mut rest = p.clone();
    let mut out = MultiPoly::zero(out_vars.clone());
    while !rest.is_zero() {
        let (lead, coeff) = rest
            .terms()
            .max_by(|a, b| a.0.exps().cmp(b.0.exps()))
            .map(|(mono, c)| (mono.exps().to_vec(), c.clone()))
            .unwrap();
        assert!(
            lead.windows(2).all(|w| w[0] >= w[1]),
            "polynomial is not symmetric"
        );
        let powers: Vec<u32> = (0..m)
            .map(|k| lead[k] - lead.get(k + 1).copied().unwrap_or(0))
            .collect();
        let mut image = MultiPoly::one(tvars.clone());
        for (k, &e) in powers.iter().enumerate() {
            if e > 0 {
                image = &image * &elementary[k].pow(e);
            }
        }
        rest = &rest - &image.scale(&coeff);
        out.add_term(Monomial::new(powers), coeff);
    }
    out
}

fn elementary_poly(vars: &Vars, k: usize) -> MultiPoly {
    let n = vars.len();
    let mut p = MultiPoly::zero(vars.clone());
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize == k {
            let e = (0..n).map(|i| ((mask >> i) & 1) as u32).collect();
            p.add_term(Monomial::new(e), Rational::one());
        }
    }
    p
}

/// `K_i = p_i / i!` with the power sum `p_i` of the Chern roots expressed
/// through Newton's identities
/// `p_k = Σ_{j=1}^{k-1} (-1)^{j-1} c_j p_{k-j} + (-1)^{k-1} k c_k`.
pub fn chern_character_poly(i: usize) -> MultiPoly {
    assert!(i >= 1, "Chern character components are indexed from 1");
    let vars = chern_vars(i);
    let c = |j: usize| MultiPoly::var(vars.clone(), j - 1);
    let mut power_sums: Vec<MultiPoly> = vec![MultiPoly::zero(vars.clone())];
    for k in 1..=i {
        let mut pk = c(k).scale(&Rational::from_integer(BigInt::from(k)));
        if k % 2 == 0 {
            pk = -&pk;
        }
        for j in 1..k {
            let term = &c(j) * &power_sums[k - j];
            pk = if j % 2 == 1 { &pk + &term } else { &pk - &term };
        }
        power_sums.push(pk);
    }
    power_sums[i].scale(&Rational::new(BigInt::one(), factorial(i as u64)))
}

/// Compact rendering with a common denominator pulled out:
/// `(c1^2+c2)/12`, `c1*c2/24`, `c1/2`.
pub fn fmt_common_denominator(p: &MultiPoly) -> String {
    let coeffs: Vec<Rational> = p.terms().map(|(_, c)| c.clone()).collect();
    let l = lcm_of_denominators(&coeffs);
    let scaled = p.scale(&Rational::from_integer(l.clone()));
    let body = scaled.to_string().replace(" + ", "+").replace(" - ", "-");
    if l.is_one() {
        body
    } else if p.num_terms() == 1 {
        format!("{body}/{l}")
    } else {
        format!("({body})/{l}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_poly, rat};

    fn poly(s: &str, m: usize) -> MultiPoly {
        parse_poly(s, &chern_vars(m)).unwrap()
    }

    #[test]
    fn low_todd_polynomials() {
        assert_eq!(todd_poly(1), poly("1/2*c1", 1));
        assert_eq!(todd_poly(2), poly("1/12*(c1^2 + c2)", 2));
        assert_eq!(todd_poly(3), poly("1/24*c1*c2", 3));
        assert_eq!(todd_poly(0), MultiPoly::one(chern_vars(0)));
    }

    #[test]
    fn direct_route_agrees() {
        for m in 0..=4 {
            assert_eq!(todd_poly(m), todd_poly_direct(m), "m = {m}");
        }
    }

    #[test]
    fn chern_character_low_degrees() {
        assert_eq!(chern_character_poly(1), poly("c1", 1));
        assert_eq!(chern_character_poly(2), poly("1/2*c1^2 - c2", 2));
    }

    #[test]
    fn line_bundle_chern_character_is_exponential() {
        for i in 1..=6 {
            let k = chern_character_poly(i);
            let mut point = vec![Rational::zero(); i];
            point[0] = rat(3, 1);
            let expected = Rational::from_integer(BigInt::from(3).pow(i as u32))
                / Rational::from_integer(factorial(i as u64));
            assert_eq!(k.eval(&point), expected);
        }
    }

    #[test]
    fn compact_rendering() {
        assert_eq!(fmt_common_denominator(&todd_poly(2)), "(c1^2+c2)/12");
        assert_eq!(fmt_common_denominator(&todd_poly(3)), "c1*c2/24");
        assert_eq!(fmt_common_denominator(&todd_poly(1)), "c1/2");
        assert_eq!(
            fmt_common_denominator(&todd_poly(4)),
            "(-c1^4+4*c1^2*c2+c1*c3+3*c2^2-c4)/720"
        );
    }
}
