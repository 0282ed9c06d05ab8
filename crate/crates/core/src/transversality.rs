//! Schubert cells, Gauss maps and transversality at exact rational points.
//!
//! A flag `F_0 ⊂ ... ⊂ F_n` is held both as a basis `ℓ` (columns, `F_i`
//! spanned by the first `i+1`) and as a dual matrix `a` whose first `n - j`
//! rows cut out `F_j`. Subspaces `A ∈ G(m, n)` are row spans of
//! `(m+1) × (n+1)` matrices.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith::{MultiPoly, Rational};
use crate::linalg::{independent_rows, QMatrix};
use crate::partitions::{jumps, JumpSequence, Partition, PartitionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransError {
    #[error("point is not a zero of the system")]
    NotAZero,
    #[error("point has wrong length {got}, expected {expected}")]
    PointLength { got: usize, expected: usize },
    #[error("Jacobian has rank {rank}, expected {expected}")]
    NotSmooth { rank: usize, expected: usize },
    #[error("tangent space is not in the Schubert cell of {0}")]
    NotOnCell(Partition),
    #[error("tangent space is outside the chart of {0}")]
    OutsideChart(Partition),
    #[error("bad instance: {0}")]
    Instance(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    dual: QMatrix,
    basis: QMatrix,
}

impl Flag {
    /// `None` if `basis` is singular.
    pub fn from_basis(basis: QMatrix) -> Option<Flag> {
        assert_eq!(basis.nrows(), basis.ncols(), "flag basis must be square");
        let inv = basis.inverse()?;
        let n = basis.nrows() - 1;
        let rows: Vec<usize> = (0..n).map(|k| n - k).collect();
        Some(Flag {
            dual: inv.select_rows(&rows),
            basis,
        })
    }

    /// Flag whose `F_j` is the zero set of the first `n - j` rows of `a`.
    /// `None` unless those zero sets have the dimensions of a complete flag.
    pub fn from_dual(a: &QMatrix) -> Option<Flag> {
        let n = a.nrows();
        if a.ncols() != n + 1 {
            return None;
        }
        let mut chosen = QMatrix::zeros(0, n + 1);
        for j in 0..=n {
            let rows: Vec<usize> = (0..n - j).collect();
            let space = if rows.is_empty() {
                QMatrix::identity(n + 1)
            } else {
                a.select_rows(&rows).kernel()
            };
            if space.nrows() != j + 1 {
                return None;
            }
            let next = (0..space.nrows())
                .map(|i| chosen.vstack(&space.select_rows(&[i])))
                .find(|c| c.rank() == j + 1)?;
            chosen = next;
        }
        Flag::from_basis(chosen.transpose())
    }

    pub fn standard(n: usize) -> Flag {
        Flag::from_basis(QMatrix::identity(n + 1)).unwrap()
    }

    pub fn n(&self) -> usize {
        self.basis.nrows() - 1
    }

    /// `(n+1) × (n+1)`, columns `ℓ_0, ..., ℓ_n`.
    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    /// `n × (n+1)`.
    pub fn dual(&self) -> &QMatrix {
        &self.dual
    }

    /// Rows `ℓ_0, ..., ℓ_j` spanning `F_j`.
    pub fn subspace(&self, j: usize) -> QMatrix {
        let cols: Vec<usize> = (0..=j).collect();
        self.basis.select_cols(&cols).transpose()
    }

    /// Rows of `a` annihilating `F_j` exactly.
    pub fn equations(&self, j: usize) -> QMatrix {
        let rows: Vec<usize> = (0..self.n() - j).collect();
        self.dual.select_rows(&rows)
    }

    /// `a_k · ℓ_i = 1` if `i = n - k`, else 0.
    pub fn is_consistent(&self) -> bool {
        let n = self.n();
        let prod = self.dual.mul(&self.basis);
        (0..n).all(|k| {
            (0..=n).all(|i| {
                let want = if i == n - k { Rational::one() } else { Rational::zero() };
                *prod.get(k, i) == want
            })
        })
    }
}

fn random_int(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from_integer(rng.gen_range(-9i64..=9).into())
}

/// Integer entries in `[-9, 9]`, resampled until nonsingular.
pub fn random_flag(n: usize, seed: u64) -> Flag {
    random_flag_with_prefix(n, &[], seed).expect("empty prefix")
}

/// Random flag whose first basis vectors are `prefix`; `None` if the prefix
/// is dependent or too long.
pub fn random_flag_with_prefix(n: usize, prefix: &[Vec<Rational>], seed: u64) -> Option<Flag> {
    if prefix.len() > n + 1 || prefix.iter().any(|v| v.len() != n + 1) {
        return None;
    }
    if !prefix.is_empty() && QMatrix::from_rows(prefix.to_vec()).rank() < prefix.len() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut rows = prefix.to_vec();
        while rows.len() <= n {
            rows.push((0..=n).map(|_| random_int(&mut rng)).collect());
        }
        if let Some(flag) = Flag::from_basis(QMatrix::from_rows(rows).transpose()) {
            return Some(flag);
        }
    }
}

/// A point of `G(m, n)` given by `m + 1` independent rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassPoint {
    span: QMatrix,
}

impl GrassPoint {
    pub fn new(span: QMatrix) -> Option<GrassPoint> {
        if span.nrows() == 0 || span.rank() != span.nrows() {
            return None;
        }
        Some(GrassPoint { span })
    }

    pub fn span(&self) -> &QMatrix {
        &self.span
    }

    pub fn m(&self) -> usize {
        self.span.nrows() - 1
    }

    pub fn n(&self) -> usize {
        self.span.ncols() - 1
    }

    /// Linear forms vanishing on the subspace, one per row.
    pub fn annihilator(&self) -> QMatrix {
        self.span.kernel()
    }

    pub fn same_subspace(&self, other: &GrassPoint) -> bool {
        self.span.ncols() == other.span.ncols()
            && self.span.nrows() == other.span.nrows()
            && self.span.vstack(&other.span).rank() == self.span.nrows()
    }
}

/// Homogeneous equations in `x0..xn` with the expected dimension `m`.
#[derive(Clone, Debug)]
pub struct InputInstance {
    f: Vec<MultiPoly>,
    n: usize,
    m: usize,
}

impl InputInstance {
    pub fn new(f: Vec<MultiPoly>, nvars: usize, m: usize) -> Result<Self, TransError> {
        if nvars == 0 || m >= nvars {
            return Err(TransError::Instance(format!("need 0 <= m < n = {}", nvars.saturating_sub(1))));
        }
        for g in &f {
            if g.nvars() != nvars {
                return Err(TransError::Instance("variable count mismatch".into()));
            }
            if !g.homogeneity().is_homogeneous() {
                return Err(TransError::Instance(format!("{g} is not homogeneous")));
            }
        }
        Ok(InputInstance { f, n: nvars - 1, m })
    }

    pub fn equations(&self) -> &[MultiPoly] {
        &self.f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.f.len()
    }

    fn check_point(&self, x: &[Rational]) -> Result<(), TransError> {
        if x.len() != self.n + 1 {
            return Err(TransError::PointLength {
                got: x.len(),
                expected: self.n + 1,
            });
        }
        if x.iter().all(Zero::is_zero) || self.f.iter().any(|g| !g.eval(x).is_zero()) {
            return Err(TransError::NotAZero);
        }
        Ok(())
    }

    pub fn jacobian_at(&self, x: &[Rational]) -> QMatrix {
        let rows = self
            .f
            .iter()
            .map(|g| (0..=self.n).map(|j| g.partial(j).eval(x)).collect())
            .collect();
        QMatrix::from_rows_with_cols(rows, self.n + 1)
    }

    pub fn hessians_at(&self, x: &[Rational]) -> Vec<QMatrix> {
        self.f
            .iter()
            .map(|g| {
                let rows = (0..=self.n)
                    .map(|i| {
                        let gi = g.partial(i);
                        (0..=self.n).map(|j| gi.partial(j).eval(x)).collect()
                    })
                    .collect();
                QMatrix::from_rows_with_cols(rows, self.n + 1)
            })
            .collect()
    }
}

/// Scales so that the first nonzero coordinate is 1.
pub fn normalize_point(x: &[Rational]) -> Vec<Rational> {
    match x.iter().find(|c| !c.is_zero()) {
        None => x.to_vec(),
        Some(lead) => {
            let lead = lead.clone();
            x.iter().map(|c| c / &lead).collect()
        }
    }
}

/// Jacobian rank at `x` is at least `n - m`.
pub fn input_condition_at(inst: &InputInstance, x: &[Rational]) -> Result<bool, TransError> {
    inst.check_point(x)?;
    Ok(inst.jacobian_at(x).rank() >= inst.n - inst.m)
}

/// Tangent space `ker d_x f` as a point of `G(m, n)`.
pub fn gauss_point(inst: &InputInstance, x: &[Rational]) -> Result<GrassPoint, TransError> {
    inst.check_point(x)?;
    let jac = inst.jacobian_at(x);
    let rank = jac.rank();
    if rank != inst.n - inst.m {
        return Err(TransError::NotSmooth {
            rank,
            expected: inst.n - inst.m,
        });
    }
    let kernel = if jac.nrows() == 0 {
        QMatrix::identity(inst.n + 1)
    } else {
        jac.kernel()
    };
    Ok(GrassPoint::new(kernel).expect("kernel rows are independent"))
}

/// `rank [first n - σ_i rows of a ; forms] <= n - i` for `0 <= i <= m`.
fn stacked_rank_test(forms: &QMatrix, flag: &Flag, sigma: &JumpSequence) -> bool {
    let n = flag.n();
    sigma.sigma().iter().enumerate().all(|(i, &s)| {
        let stacked = flag.equations(s as usize).vstack(forms);
        stacked.rank() <= n - i
    })
}

/// Rank test for `x ∈ Q_λ`: the tangent space at `x` meets the flag in
/// the dimensions required by `Ω_λ`.
pub fn in_q_lambda(
    inst: &InputInstance,
    x: &[Rational],
    flag: &Flag,
    lambda: &Partition,
) -> Result<bool, TransError> {
    inst.check_point(x)?;
    let sigma = jumps(lambda, inst.n as u32, inst.m as u32)?;
    Ok(stacked_rank_test(&inst.jacobian_at(x), flag, &sigma))
}

/// The same rank test for an arbitrary subspace.
pub fn in_schubert_variety(a: &GrassPoint, flag: &Flag, lambda: &Partition) -> Result<bool, TransError> {
    let sigma = jumps(lambda, a.n() as u32, a.m() as u32)?;
    Ok(stacked_rank_test(&a.annihilator(), flag, &sigma))
}

/// `dim(A ∩ F_j)` for `j = 0..=n`.
pub fn intersection_dims(a: &GrassPoint, flag: &Flag) -> Vec<usize> {
    let k = a.m() + 1;
    (0..=flag.n())
        .map(|j| k + j + 1 - a.span().vstack(&flag.subspace(j)).rank())
        .collect()
}

/// Indices `j` where `dim(A ∩ F_j)` increases.
pub fn jump_sequence(a: &GrassPoint, flag: &Flag) -> JumpSequence {
    let dims = intersection_dims(a, flag);
    let sigma = (0..dims.len())
        .filter(|&j| dims[j] > if j == 0 { 0 } else { dims[j - 1] })
        .map(|j| j as u32)
        .collect();
    JumpSequence::new(sigma, flag.n() as u32).expect("jumps are increasing")
}

/// The partition of the unique cell containing `A`.
pub fn cell_of(a: &GrassPoint, flag: &Flag) -> Partition {
    jump_sequence(a, flag).to_partition()
}

fn nonpivots(sigma: &[u32], n: usize) -> Vec<usize> {
    (0..=n).filter(|j| !sigma.contains(&(*j as u32))).collect()
}

/// Chart matrix `α_μ(A)`, `(n-m) × (m+1)`, or `None` if `A ∉ U_μ`.
pub fn schubert_cell_coords(a: &GrassPoint, flag: &Flag, mu: &Partition) -> Result<Option<QMatrix>, TransError> {
    let (n, m) = (a.n(), a.m());
    let sigma = jumps(mu, n as u32, m as u32)?;
    let inv = flag.basis().inverse().expect("flag basis is nonsingular");
    let w = a.span().mul(&inv.transpose());
    let pivots: Vec<usize> = sigma.sigma().iter().map(|&s| s as usize).collect();
    let Some(p_inv) = w.select_cols(&pivots).inverse() else {
        return Ok(None);
    };
    let e = p_inv.mul(&w);
    let rest = nonpivots(sigma.sigma(), n);
    let mut chart = QMatrix::zeros(n - m, m + 1);
    for (j, &col) in rest.iter().enumerate() {
        for i in 0..=m {
            chart.set(j, i, e.get(i, col).clone());
        }
    }
    Ok(Some(chart))
}

/// Positions `(j, i)` with `j >= σ_i - i`; the cell is where the chart
/// vanishes on them.
pub fn cell_zero_positions(sigma: &JumpSequence) -> Vec<(usize, usize)> {
    let (n, m) = (sigma.n() as usize, sigma.m() as usize);
    let mut out = Vec::new();
    for (i, &s) in sigma.sigma().iter().enumerate() {
        for j in (s as usize - i)..(n - m) {
            out.push((j, i));
        }
    }
    out
}

pub fn in_cell_by_chart(a: &GrassPoint, flag: &Flag, mu: &Partition) -> Result<bool, TransError> {
    let sigma = jumps(mu, a.n() as u32, a.m() as u32)?;
    Ok(match schubert_cell_coords(a, flag, mu)? {
        None => false,
        Some(chart) => cell_zero_positions(&sigma)
            .iter()
            .all(|&(j, i)| chart.get(j, i).is_zero()),
    })
}

pub fn in_cell_by_jumps(a: &GrassPoint, flag: &Flag, mu: &Partition) -> Result<bool, TransError> {
    let sigma = jumps(mu, a.n() as u32, a.m() as u32)?;
    Ok(jump_sequence(a, flag) == sigma)
}

/// Everything computed by the transversality test at one point.
#[derive(Clone, Debug)]
pub struct TransversalityReport {
    pub mu: Partition,
    pub sigma: Vec<u32>,
    /// Equations whose `X''`-Jacobian block was inverted.
    pub pivot_equations: Vec<usize>,
    /// `∂h_t/∂X_i`, equal to `α_μ(T_x V)`.
    pub chart: QMatrix,
    pub in_cell: bool,
    /// `∂²h_t/∂X_i∂X_j` for `j = 0..=m`, each `(n-m) × (m+1)`.
    pub second_derivatives: Vec<QMatrix>,
    /// Dimension of the image of `d_x φ_μ(T_x V)` modulo `α_μ(e_μ)`.
    pub span_dim: usize,
    pub codim: usize,
}

impl TransversalityReport {
    /// `None` when `φ(x)` is not in the cell.
    pub fn transversal(&self) -> Option<bool> {
        self.in_cell.then_some(self.span_dim == self.codim)
    }
}

/// Charts `φ_μ` around `x` in coordinates adapted to `L_μ ⊕ L̄_μ` and computes
/// its differential from implicit first and second derivatives. Fails if `x`
/// is not a smooth zero or if `φ(x) ∉ U_μ`; `in_cell` is reported, not required.
pub fn transversality_report(
    inst: &InputInstance,
    x: &[Rational],
    flag: &Flag,
    mu: &Partition,
) -> Result<TransversalityReport, TransError> {
    let (n, m) = (inst.n, inst.m);
    if flag.n() != n {
        return Err(TransError::Instance(format!("flag lives in P^{}, instance in P^{n}", flag.n())));
    }
    let sigma = jumps(mu, n as u32, m as u32)?;
    gauss_point(inst, x)?;

    let piv: Vec<usize> = sigma.sigma().iter().map(|&s| s as usize).collect();
    let mut order = piv.clone();
    order.extend(nonpivots(sigma.sigma(), n));
    // x = M z with z = (X', X'')
    let change = flag.basis().select_cols(&order);
    let jac = inst.jacobian_at(x).mul(&change);
    let hess: Vec<QMatrix> = inst
        .hessians_at(x)
        .iter()
        .map(|h| change.transpose().mul(h).mul(&change))
        .collect();

    let k = n - m;
    let tail: Vec<usize> = (m + 1..=n).collect();
    let head: Vec<usize> = (0..=m).collect();
    let j2 = jac.select_cols(&tail);
    let sel = independent_rows(&j2);
    if sel.len() < k {
        return Err(TransError::OutsideChart(mu.clone()));
    }
    let block_inv = j2.select_rows(&sel).inverse().expect("independent rows");
    let j1 = jac.select_rows(&sel).select_cols(&head);

    let mut dh = block_inv.mul(&j1);
    for t in 0..k {
        for i in 0..=m {
            let v = -dh.get(t, i).clone();
            dh.set(t, i, v);
        }
    }

    let mut second = vec![QMatrix::zeros(k, m + 1); m + 1];
    for i in 0..=m {
        for j in 0..=m {
            let mut rhs = QMatrix::zeros(k, 1);
            for (row, &s) in sel.iter().enumerate() {
                let g = &hess[s];
                let mut v = g.get(i, j).clone();
                for t in 0..k {
                    v += g.get(i, m + 1 + t) * dh.get(t, j);
                    v += g.get(m + 1 + t, j) * dh.get(t, i);
                    for u in 0..k {
                        v += g.get(m + 1 + t, m + 1 + u) * dh.get(t, i) * dh.get(u, j);
                    }
                }
                rhs.set(row, 0, -v);
            }
            let d2 = block_inv.mul(&rhs);
            for t in 0..k {
                second[j].set(t, i, d2.get(t, 0).clone());
            }
        }
    }

    let zeros = cell_zero_positions(&sigma);
    let in_cell = zeros.iter().all(|&(t, i)| dh.get(t, i).is_zero());
    let projected: Vec<Vec<Rational>> = second
        .iter()
        .map(|mat| zeros.iter().map(|&(t, i)| mat.get(t, i).clone()).collect())
        .collect();
    let span_dim = if zeros.is_empty() {
        0
    } else {
        QMatrix::from_rows_with_cols(projected, zeros.len()).rank()
    };

    Ok(TransversalityReport {
        mu: mu.clone(),
        sigma: sigma.sigma().to_vec(),
        pivot_equations: sel,
        chart: dh,
        in_cell,
        second_derivatives: second,
        span_dim,
        codim: zeros.len(),
    })
}

/// Whether `d_x φ(T_x V) + T e_μ` fills the tangent space of the
/// Grassmannian; requires `φ(x) ∈ e_μ(F)`.
pub fn transversal_at(
    inst: &InputInstance,
    x: &[Rational],
    flag: &Flag,
    mu: &Partition,
) -> Result<bool, TransError> {
    let report = transversality_report(inst, x, flag, mu)?;
    report.transversal().ok_or(TransError::NotOnCell(mu.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, parse_poly, projective_vars};

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| int(c)).collect()
    }

    fn instance(src: &[&str], n: usize, m: usize) -> InputInstance {
        let vars = projective_vars(n);
        let f = src.iter().map(|s| parse_poly(s, &vars).unwrap()).collect();
        InputInstance::new(f, n + 1, m).unwrap()
    }

    #[test]
    fn flags_are_consistent() {
        for seed in 0..20 {
            let f = random_flag(4, seed);
            assert!(f.is_consistent());
            assert_eq!(f.basis().rank(), 5);
        }
        assert_eq!(random_flag(3, 7), random_flag(3, 7));
        let f = random_flag(3, 11);
        let g = Flag::from_dual(f.dual()).unwrap();
        for j in 0..=3 {
            let a = GrassPoint::new(f.subspace(j)).unwrap();
            let b = GrassPoint::new(g.subspace(j)).unwrap();
            assert!(a.same_subspace(&b));
        }
    }

    #[test]
    fn echelon_pivots_of_example_shape() {
        let sigma = jumps(&Partition::from_slice(&[3, 1, 0]), 7, 3).unwrap();
        assert_eq!(sigma.sigma(), &[1, 4, 6, 7]);
        assert_eq!(cell_zero_positions(&sigma).len(), 4);
    }

    #[test]
    fn standard_subspace_chart_is_zero() {
        let flag = random_flag(5, 3);
        let a = GrassPoint::new(flag.subspace(2)).unwrap();
        let mu = Partition::from_slice(&[3, 3, 3]);
        let chart = schubert_cell_coords(&a, &flag, &mu).unwrap().unwrap();
        assert!(chart.is_zero());
        assert_eq!(cell_of(&a, &flag), mu);
    }

    #[test]
    fn conic_gauss_point() {
        let inst = instance(&["x0*x2 - x1^2"], 2, 1);
        let x = pt(&[1, 1, 1]);
        assert!(input_condition_at(&inst, &x).unwrap());
        let a = gauss_point(&inst, &x).unwrap();
        let want = GrassPoint::new(QMatrix::from_ints(&[&[2, 1, 0], &[0, 1, 2]])).unwrap();
        assert!(a.same_subspace(&want));
        let bad = instance(&["x0^2"], 2, 1);
        assert!(!input_condition_at(&bad, &pt(&[0, 0, 1])).unwrap());
        assert_eq!(input_condition_at(&inst, &pt(&[1, 0, 1])), Err(TransError::NotAZero));
    }

    #[test]
    fn chart_matches_first_derivatives() {
        let inst = instance(&["x0*x3 - x1*x2"], 3, 2);
        let x = pt(&[1, 2, 3, 6]);
        let flag = random_flag(3, 5);
        let mu = Partition::empty();
        let report = transversality_report(&inst, &x, &flag, &mu).unwrap();
        let a = gauss_point(&inst, &x).unwrap();
        let chart = schubert_cell_coords(&a, &flag, &mu).unwrap().unwrap();
        assert_eq!(chart, report.chart);
        assert_eq!(report.transversal(), Some(true));
    }

    #[test]
    fn conic_tangent_flag() {
        let inst = instance(&["x0*x2 - x1^2"], 2, 1);
        let x = pt(&[1, 1, 1]);
        // a point of the tangent line x0 - 2x1 + x2 = 0 other than x
        let p = pt(&[3, 2, 1]);
        let flag = random_flag_with_prefix(2, &[p], 1).unwrap();
        let lambda = Partition::row(1);
        assert!(in_q_lambda(&inst, &x, &flag, &lambda).unwrap());
        assert!(transversal_at(&inst, &x, &flag, &lambda).unwrap());
        // F_0 = x itself: tangent lines at nearby points miss x to first order
        let flag = random_flag_with_prefix(2, &[x.clone()], 1).unwrap();
        assert!(!transversal_at(&inst, &x, &flag, &lambda).unwrap());
    }

    #[test]
    fn second_derivatives_of_explicit_graph() {
        // standard flag, μ = (): X' = (x1, x2), and the conic is x0 = x1^2 / x2
        let inst = instance(&["x0*x2 - x1^2"], 2, 1);
        let x = pt(&[4, 6, 9]);
        let report = transversality_report(&inst, &x, &Flag::standard(2), &Partition::empty()).unwrap();
        let (x1, x2) = (int(6), int(9));
        let want_dh = QMatrix::from_rows(vec![vec![&x1 * int(2) / &x2, -(&x1 * &x1) / (&x2 * &x2)]]);
        assert_eq!(report.chart, want_dh);
        let h11 = int(2) / &x2;
        let h12 = -(int(2) * &x1) / (&x2 * &x2);
        let h22 = int(2) * &x1 * &x1 / (&x2 * &x2 * &x2);
        assert_eq!(report.second_derivatives[0], QMatrix::from_rows(vec![vec![h11, h12.clone()]]));
        assert_eq!(report.second_derivatives[1], QMatrix::from_rows(vec![vec![h12, h22]]));
    }

    #[test]
    fn line_is_never_transversal() {
        let inst = instance(&["x2"], 2, 1);
        let x = pt(&[1, 4, 0]);
        let flag = random_flag_with_prefix(2, &[pt(&[2, -1, 0])], 9).unwrap();
        let report = transversality_report(&inst, &x, &flag, &Partition::row(1)).unwrap();
        assert!(report.in_cell);
        assert_eq!(report.span_dim, 0);
        assert_eq!(report.transversal(), Some(false));
    }

    #[test]
    fn off_cell_is_an_error() {
        let inst = instance(&["x0*x2 - x1^2"], 2, 1);
        let flag = random_flag(2, 0);
        let x = pt(&[1, 1, 1]);
        assert!(!in_q_lambda(&inst, &x, &flag, &Partition::row(1)).unwrap());
        assert_eq!(
            transversal_at(&inst, &x, &flag, &Partition::row(1)),
            Err(TransError::NotOnCell(Partition::row(1)))
        );
    }

    #[test]
    fn projective_space_is_whole_space() {
        let inst = InputInstance::new(Vec::new(), 3, 2).unwrap();
        let a = gauss_point(&inst, &pt(&[1, 2, 3])).unwrap();
        assert_eq!(a.m(), 2);
    }
}
