//! Chern classes, Todd classes and Hilbert polynomials of smooth complete
//! intersections `V = Z(g_1, ..., g_r) ⊂ P^n`.
//!
//! Every class in sight is a polynomial in the hyperplane class `h`, so the
//! cohomology ring is modelled as `Q[h]/(h^{m+1})` together with the degree
//! functional `x ↦ (coefficient of h^m) · Π d_i`.
//!
//! Bundles used:
//! * `c(TV) = (1+h)^{n+1} / Π(1 + d_i h)` (adjunction),
//! * `c(ÑV) = Π(1 + (d_i - 1) h)`, from the Jacobian `O^{n+1} → ⊕ O_V(d_i - 1)`
//!   whose kernel is the rank `m+1` bundle `T̃V` of affine tangent cones,
//! * `c(T̃V) = 1 / c(ÑV)` and `TV ⊕ O ≅ O_V(1) ⊗ T̃V`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith::{projective_vars, binom_poly, factorial, int, to_integer, CommRing, Rational, TruncSeries, UniPoly};
use crate::grobner::{random_dense_poly, HomIdeal};
use crate::partitions::{enumerate, subpartitions, Partition};
use crate::symfun::{d_coeff, delta_det, delta_table, scaling_factor, todd_poly, CoeffSeq, SymfunError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChernError {
    #[error("invalid complete intersection: {0}")]
    Invalid(String),
    #[error("partition {lambda} has size above m = {m}")]
    PartitionTooLarge { lambda: Partition, m: u32 },
    #[error("{what} is not an integer: {value}")]
    NonIntegral { what: String, value: Rational },
    #[error("routes disagree: {left} vs {right}")]
    RouteMismatch { left: String, right: String },
    #[error(transparent)]
    Symfun(#[from] SymfunError),
}

/// `n` and the degrees `(d_1, ..., d_r)`, `r <= n`, all `d_i >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompleteIntersection {
    n: u32,
    degrees: Vec<u32>,
}

impl CompleteIntersection {
    pub fn new(n: u32, degrees: Vec<u32>) -> Result<Self, ChernError> {
        if degrees.len() > n as usize {
            return Err(ChernError::Invalid(format!(
                "{} equations in P^{n} leave a negative-dimensional set",
                degrees.len()
            )));
        }
        if degrees.iter().any(|&d| d == 0) {
            return Err(ChernError::Invalid("degrees must be at least 1".into()));
        }
        Ok(CompleteIntersection { n, degrees })
    }

    pub fn projective_space(n: u32) -> Self {
        CompleteIntersection { n, degrees: Vec::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn r(&self) -> u32 {
        self.degrees.len() as u32
    }

    pub fn m(&self) -> u32 {
        self.n - self.r()
    }

    /// `Π d_i`.
    pub fn degree(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    fn order(&self) -> usize {
        self.m() as usize + 1
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "n={} degrees=[{}]", self.n, d.join(","))
    }
}

/// A class in `Q[h]/(h^{m+1})` on a given complete intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncClass {
    pub series: TruncSeries,
    pub ci: CompleteIntersection,
}

impl TruncClass {
    fn new(series: TruncSeries, ci: &CompleteIntersection) -> Self {
        debug_assert_eq!(series.order(), ci.order());
        TruncClass { series, ci: ci.clone() }
    }

    /// Coefficient of `h^i`.
    pub fn coeff(&self, i: usize) -> Rational {
        self.series.coeff(i)
    }

    /// `(coefficient of h^m) · deg V`.
    pub fn deg_cap(&self) -> Rational {
        deg_cap(&self.series, &self.ci)
    }
}

pub fn deg_cap(x: &TruncSeries, ci: &CompleteIntersection) -> Rational {
    x.coeff(ci.m() as usize) * Rational::from_integer(ci.degree())
}

fn power_of_one_plus_h(order: usize, e: u32) -> TruncSeries {
    TruncSeries::linear(order, Rational::one()).pow_ref(e)
}

/// `c(TV) = (1+h)^{n+1} / Π(1 + d_i h)`.
pub fn chern_tangent(ci: &CompleteIntersection) -> TruncClass {
    let k = ci.order();
    let mut s = power_of_one_plus_h(k, ci.n + 1);
    for &d in &ci.degrees {
        let inv = TruncSeries::linear(k, int(d as i64)).inverse().unwrap();
        s = s.mul_ref(&inv);
    }
    TruncClass::new(s, ci)
}

/// `c(TV) = Σ_j c_j(T̃V) (1+h)^{m+1-j}`, from `TV ⊕ O ≅ O_V(1) ⊗ T̃V`.
pub fn chern_tangent_via_twist(ci: &CompleteIntersection) -> TruncClass {
    let k = ci.order();
    let cone = chern_cone_tangent(ci).series;
    let mut total = TruncSeries::zero(k);
    for j in 0..k {
        let cj = TruncSeries::monomial(k, j, cone.coeff(j));
        let twist = power_of_one_plus_h(k, ci.m() + 1 - j as u32);
        total = total.add_ref(&cj.mul_ref(&twist));
    }
    TruncClass::new(total, ci)
}

/// `c(ÑV) = Π(1 + (d_i - 1) h)`.
pub fn chern_cone_normal(ci: &CompleteIntersection) -> TruncClass {
    let k = ci.order();
    let s = ci.degrees.iter().fold(TruncSeries::one(k), |acc, &d| {
        acc.mul_ref(&TruncSeries::linear(k, int(d as i64 - 1)))
    });
    TruncClass::new(s, ci)
}

/// `c(T̃V) = 1 / c(ÑV)`.
pub fn chern_cone_tangent(ci: &CompleteIntersection) -> TruncClass {
    let n = chern_cone_normal(ci).series;
    TruncClass::new(n.inverse().expect("constant term one"), ci)
}

/// Chern classes as ring elements `c_i h^i` of the truncated ring.
fn chern_sequence(c: &TruncClass) -> CoeffSeq<TruncSeries> {
    let k = c.series.order();
    CoeffSeq::new(
        (0..k)
            .map(|i| TruncSeries::monomial(k, i, c.coeff(i)))
            .collect(),
    )
    .expect("total Chern class starts with 1")
}

/// `td(V) = 1 + Σ_i T_i(c_1(TV), ..., c_i(TV))`.
pub fn todd_class(ci: &CompleteIntersection) -> TruncClass {
    let k = ci.order();
    let c = chern_tangent(ci);
    let values: Vec<TruncSeries> = (1..k).map(|i| TruncSeries::monomial(k, i, c.coeff(i))).collect();
    let one = TruncSeries::one(k);
    let mut td = one.clone();
    for i in 1..k {
        let t = todd_poly(i);
        td = td.add_ref(&t.eval_in(&values[..i], &one));
    }
    TruncClass::new(td, ci)
}

fn expect_integer(value: Rational, what: impl FnOnce() -> String) -> Result<BigInt, ChernError> {
    to_integer(&value).ok_or_else(|| ChernError::NonIntegral { what: what(), value })
}

/// `χ(O_V(d)) = deg(e^{dh} · td(V))`.
pub fn euler_char_twist(ci: &CompleteIntersection, d: i64) -> Result<BigInt, ChernError> {
    let k = ci.order();
    let ch = TruncSeries::exp_linear(k, &int(d));
    let value = deg_cap(&ch.mul_ref(&todd_class(ci).series), ci);
    expect_integer(value, || format!("chi(O_V({d})) on {ci}"))
}

/// `p_k = (1/k!) deg(h^k · T_{m-k}(c(TV)))`.
pub fn hilbert_poly_hrr(ci: &CompleteIntersection) -> UniPoly {
    let m = ci.m() as usize;
    let k_order = ci.order();
    let c = chern_tangent(ci);
    let values: Vec<TruncSeries> = (1..=m).map(|i| TruncSeries::monomial(k_order, i, c.coeff(i))).collect();
    let one = TruncSeries::one(k_order);
    let coeffs = (0..=m)
        .map(|k| {
            let t = todd_poly(m - k).eval_in(&values[..m - k], &one);
            let class = t.shift(k);
            deg_cap(&class, ci) / Rational::from_integer(factorial(k as u64))
        })
        .collect();
    UniPoly::from_coeffs(coeffs)
}

/// Degree of the generalized polar variety `P_λ` for a generic flag:
/// `deg(h^{m-|λ|} Δ_λ(c(ÑV)))`, and zero when `λ_1 > n - m`.
pub fn projective_character(ci: &CompleteIntersection, lambda: &Partition) -> Result<BigInt, ChernError> {
    let m = ci.m();
    if lambda.size() > m {
        return Err(ChernError::PartitionTooLarge {
            lambda: lambda.clone(),
            m,
        });
    }
    if lambda.first() > ci.n - m {
        return Ok(BigInt::zero());
    }
    let value = character_class_degree(ci, lambda);
    let value = expect_integer(value, || format!("deg P_{lambda} on {ci}"))?;
    if value.is_negative() {
        return Err(ChernError::Invalid(format!("negative character {value} for {lambda} on {ci}")));
    }
    Ok(value)
}

/// `deg(h^{m-|λ|} Δ_λ(c(ÑV)))` without the admissibility cutoff.
pub fn character_class_degree(ci: &CompleteIntersection, lambda: &Partition) -> Rational {
    let seq = chern_sequence(&chern_cone_normal(ci));
    let delta = delta_det(lambda, &seq);
    let m = ci.m() as usize;
    deg_cap(&delta.shift(m - lambda.size() as usize), ci)
}

/// All projective characters `deg P_μ` with `|μ| <= m`, `μ_1 <= n - m`.
pub fn character_table(ci: &CompleteIntersection) -> Result<BTreeMap<Partition, BigInt>, ChernError> {
    let m = ci.m();
    let mut out = BTreeMap::new();
    for size in 0..=m {
        for mu in enumerate(size, ci.n - m, size, None) {
            let v = projective_character(ci, &mu)?;
            out.insert(mu, v);
        }
    }
    Ok(out)
}

/// `p_k = (1/k!) Σ_{|μ| <= m-k, μ_1 <= n-m} δ^{m,k}_μ deg P_μ`, for any
/// variety of dimension `m` in `P^n` whose characters are supplied.
/// Missing characters are an error.
pub fn hilbert_poly_from_characters(
    m: u32,
    n: u32,
    characters: &BTreeMap<Partition, BigInt>,
) -> Result<UniPoly, ChernError> {
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    for k in 0..=m {
        let table = delta_table(m, k, n)?;
        let mut sum = Rational::zero();
        for (mu, delta) in &table.entries {
            let deg = characters.get(mu).ok_or_else(|| {
                ChernError::Invalid(format!("missing character for {mu}"))
            })?;
            sum += delta * Rational::from_integer(deg.clone());
        }
        let pk = sum / Rational::from_integer(factorial(k as u64));
        let scaled = &pk * Rational::from_integer(scaling_factor(k, m) * factorial(k as u64));
        if !scaled.is_integer() {
            return Err(ChernError::NonIntegral {
                what: format!("N({k},{m}) k! p_{k}"),
                value: scaled,
            });
        }
        coeffs.push(pk);
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Hilbert polynomial from the projective characters of `ci`.
pub fn hilbert_poly_characters(ci: &CompleteIntersection) -> Result<UniPoly, ChernError> {
    hilbert_poly_from_characters(ci.m(), ci.n, &character_table(ci)?)
}

/// [`hilbert_poly_characters`], additionally required to equal the HRR route.
pub fn hilbert_poly_characters_checked(ci: &CompleteIntersection) -> Result<UniPoly, ChernError> {
    let p = hilbert_poly_characters(ci)?;
    let q = hilbert_poly_hrr(ci);
    if p != q {
        return Err(ChernError::RouteMismatch {
            left: p.compact(),
            right: q.compact(),
        });
    }
    Ok(p)
}

/// Topological Euler characteristic `deg c_m(TV)`.
pub fn euler_top(ci: &CompleteIntersection) -> BigInt {
    let v = chern_tangent(ci).deg_cap();
    to_integer(&v).expect("top Chern number is an integer")
}

/// Hilbert polynomial from the Hilbert series `Π(1 - t^{d_i}) / (1-t)^{n+1}
/// = Q(t) / (1-t)^{m+1}` with `Q = Π(1 + t + ... + t^{d_i - 1})`:
/// `p(T) = Σ_j Q_j C(T - j + m, m)`.
pub fn ci_hilbert_series_oracle(ci: &CompleteIntersection) -> UniPoly {
    let q = ci.degrees.iter().fold(UniPoly::one(), |acc, &d| {
        &acc * &UniPoly::from_coeffs(vec![Rational::one(); d as usize])
    });
    let m = ci.m();
    q.coeffs()
        .iter()
        .enumerate()
        .fold(UniPoly::zero(), |acc, (j, qj)| {
            &acc + &binom_poly(m as i64 - j as i64, m).scale(qj)
        })
}

/// `(-1)^m (p_0 - 1)`.
pub fn arithmetic_genus(p: &UniPoly, m: u32) -> Rational {
    let g = p.coeff(0) - Rational::one();
    if m % 2 == 0 {
        g
    } else {
        -g
    }
}

/// `m! p_m`.
pub fn geometric_degree(p: &UniPoly, m: u32) -> Rational {
    p.coeff(m as usize) * Rational::from_integer(factorial(m as u64))
}

/// Both sides of
/// `deg(h^{m-|λ|} Δ_{λ'}(c(TV))) = Σ_{μ ⊆ λ, μ_1 <= n-m} (-1)^{|μ|} d^m_{λμ} deg P_μ`.
pub fn tensor_identity_sides(
    ci: &CompleteIntersection,
    lambda: &Partition,
) -> Result<(Rational, Rational), ChernError> {
    let m = ci.m();
    if lambda.size() > m {
        return Err(ChernError::PartitionTooLarge {
            lambda: lambda.clone(),
            m,
        });
    }
    let seq = chern_sequence(&chern_tangent(ci));
    let left_class = delta_det(&lambda.conjugate(), &seq);
    let left = deg_cap(&left_class.shift((m - lambda.size()) as usize), ci);
    let mut right = Rational::zero();
    for mu in subpartitions(lambda) {
        if mu.first() > ci.n - m {
            continue;
        }
        let d = d_coeff(lambda, &mu, m)?;
        let term = Rational::from_integer(d * projective_character(ci, &mu)?);
        if mu.size() % 2 == 0 {
            right += term;
        } else {
            right -= term;
        }
    }
    Ok((left, right))
}

/// The three Hilbert polynomials of a complete intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeWay {
    pub hrr: UniPoly,
    pub characters: UniPoly,
    pub series: UniPoly,
}

impl ThreeWay {
    pub fn agree(&self) -> bool {
        self.hrr == self.characters && self.hrr == self.series
    }
}

pub fn three_way(ci: &CompleteIntersection) -> Result<ThreeWay, ChernError> {
    Ok(ThreeWay {
        hrr: hilbert_poly_hrr(ci),
        characters: hilbert_poly_characters(ci)?,
        series: ci_hilbert_series_oracle(ci),
    })
}

/// Dense random generators of the given degrees in `x0..xn`; for almost
/// every seed they form a regular sequence cutting out a smooth `V`.
pub fn generic_ci_ideal(ci: &CompleteIntersection, seed: u64) -> HomIdeal {
    let vars = projective_vars(ci.n as usize);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = ci
        .degrees
        .iter()
        .map(|&d| random_dense_poly(&vars, d, true, 5, &mut rng))
        .collect();
    HomIdeal::new(vars, gens).expect("dense forms are homogeneous")
}

/// Ordered degree tuples for `1 <= n <= max_n`, `r <= min(n, max_r)`,
/// `1 <= d_i <= max_d`, including `r = 0`.
pub fn ci_grid(max_n: u32, max_r: u32, max_d: u32) -> Vec<CompleteIntersection> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for r in 0..=max_r.min(n) {
            let mut tuple = vec![1u32; r as usize];
            loop {
                out.push(CompleteIntersection::new(n, tuple.clone()).unwrap());
                let mut i = 0;
                while i < tuple.len() && tuple[i] == max_d {
                    tuple[i] = 1;
                    i += 1;
                }
                if i == tuple.len() {
                    break;
                }
                tuple[i] += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn ci(n: u32, d: &[u32]) -> CompleteIntersection {
        CompleteIntersection::new(n, d.to_vec()).unwrap()
    }

    #[test]
    fn tangent_classes() {
        assert_eq!(chern_tangent(&ci(2, &[5])).series.coeffs(), &[int(1), int(-2)]);
        assert_eq!(
            chern_tangent(&ci(3, &[2])).series.coeffs(),
            &[int(1), int(2), int(2)]
        );
        assert_eq!(
            chern_tangent(&CompleteIntersection::projective_space(3)).series.coeffs(),
            &[int(1), int(4), int(6), int(4)]
        );
        for c in ci_grid(4, 2, 3) {
            assert_eq!(chern_tangent(&c), chern_tangent_via_twist(&c), "{c}");
        }
    }

    #[test]
    fn cone_bundles() {
        assert_eq!(chern_cone_normal(&ci(2, &[4])).series.coeffs(), &[int(1), int(3)]);
        let linear = ci(4, &[1, 1]);
        assert_eq!(chern_cone_normal(&linear).series, TruncSeries::one(3));
        assert_eq!(chern_cone_tangent(&linear).series, TruncSeries::one(3));
        assert_eq!(
            chern_cone_tangent(&ci(3, &[3])).series.coeffs(),
            &[int(1), int(-2), int(4)]
        );
    }

    #[test]
    fn todd_classes() {
        assert_eq!(
            todd_class(&CompleteIntersection::projective_space(1)).series.coeffs(),
            &[int(1), int(1)]
        );
        assert_eq!(todd_class(&ci(2, &[5])).series.coeffs(), &[int(1), int(-1)]);
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_char_twist(&CompleteIntersection::projective_space(2), 1).unwrap(), 3.into());
        assert_eq!(euler_char_twist(&ci(2, &[3]), 0).unwrap(), 0.into());
        assert_eq!(euler_char_twist(&ci(3, &[2]), 2).unwrap(), 9.into());
    }

    #[test]
    fn hilbert_polynomials() {
        assert_eq!(hilbert_poly_hrr(&CompleteIntersection::projective_space(3)), binom_poly(3, 3));
        let hyper = ci(3, &[3]);
        assert_eq!(hilbert_poly_hrr(&hyper), &binom_poly(3, 3) - &binom_poly(0, 3));
        assert_eq!(hilbert_poly_hrr(&ci(3, &[2])), UniPoly::from_ints(&[1, 2, 1]));
        assert_eq!(ci_hilbert_series_oracle(&ci(3, &[2, 2])), UniPoly::from_ints(&[0, 4]));
        assert_eq!(hilbert_poly_characters(&ci(3, &[2])).unwrap(), UniPoly::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn characters() {
        for d in 1..6u32 {
            let c = ci(2, &[d]);
            assert_eq!(projective_character(&c, &Partition::row(1)).unwrap(), BigInt::from(d * (d - 1)));
            assert_eq!(projective_character(&c, &Partition::empty()).unwrap(), BigInt::from(d));
        }
        let linear = ci(5, &[1, 1]);
        for lambda in [Partition::row(1), Partition::column(2), Partition::from_slice(&[2, 1])] {
            assert_eq!(projective_character(&linear, &lambda).unwrap(), BigInt::zero());
        }
        assert!(projective_character(&ci(2, &[2]), &Partition::row(2)).is_err());
        // a row longer than the codimension vanishes even before the cutoff
        assert_eq!(character_class_degree(&ci(3, &[3]), &Partition::row(2)), int(0));
    }

    #[test]
    fn euler_top_values() {
        assert_eq!(euler_top(&ci(2, &[3])), BigInt::zero());
        assert_eq!(euler_top(&CompleteIntersection::projective_space(2)), BigInt::from(3));
        assert_eq!(euler_top(&ci(3, &[2])), BigInt::from(4));
    }

    #[test]
    fn genus_and_degree() {
        let p = hilbert_poly_hrr(&ci(2, &[4]));
        assert_eq!(arithmetic_genus(&p, 1), int(3));
        assert_eq!(geometric_degree(&p, 1), int(4));
        assert_eq!(p.coeff(0), rat(-2, 1));
    }

    #[test]
    fn generic_ideal_matches_oracle() {
        use crate::grobner::{hilbert_data, GrobnerConfig};
        let c = ci(3, &[2, 2]);
        let hd = hilbert_data(&generic_ci_ideal(&c, 1), &GrobnerConfig::default()).unwrap();
        assert_eq!(hd.hilbert_polynomial, ci_hilbert_series_oracle(&c));
    }

    #[test]
    fn grid_size() {
        assert_eq!(ci_grid(6, 3, 4).len(), 366);
    }
}
