//! Reductions to Hilbert polynomial computations: #SAT, ideal membership,
//! and evaluation of `p_M` for quotients `M = S/I` given by a graded map.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith::{projective_vars, Homogeneity, MultiPoly, Rational, UniPoly};
use crate::grobner::{
    count_zero_dim, hilbert_data, membership_via_hilbert, GrobnerConfig, GrobnerError, HomIdeal, ZeroCount,
};

pub const BRUTEFORCE_VAR_LIMIT: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("DIMACS parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{vars} variables exceed the brute-force limit {limit}")]
    TooLarge { vars: usize, limit: usize },
    #[error("literal {lit} out of range for {num_vars} variables")]
    BadLiteral { lit: i64, num_vars: usize },
    #[error("grading violated at ({row}, {col}): {msg}")]
    Grading { row: usize, col: usize, msg: String },
    #[error("only 1-row graded matrices can be evaluated, got {0} rows")]
    MultiRow(usize),
    #[error("interpolation: {0}")]
    Interpolation(String),
    #[error(transparent)]
    Grobner(#[from] GrobnerError),
}

/// A CNF formula over variables `1..=num_vars`. Literals are signed indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i64>>,
}

impl CnfFormula {
    /// Duplicate literals inside a clause are merged and tautological
    /// clauses (containing `v` and `-v`) are dropped.
    pub fn new(num_vars: usize, clauses: Vec<Vec<i64>>) -> Result<Self, ReductionError> {
        let mut out = Vec::with_capacity(clauses.len());
        for clause in clauses {
            let mut lits: Vec<i64> = Vec::with_capacity(clause.len());
            for lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(ReductionError::BadLiteral { lit, num_vars });
                }
                if !lits.contains(&lit) {
                    lits.push(lit);
                }
            }
            if !lits.iter().any(|l| lits.contains(&-l)) {
                out.push(lits);
            }
        }
        Ok(CnfFormula { num_vars, clauses: out })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i64>] {
        &self.clauses
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let v = assignment[l.unsigned_abs() as usize - 1];
                if l > 0 {
                    v
                } else {
                    !v
                }
            })
        })
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                s.push_str(&l.to_string());
                s.push(' ');
            }
            s.push_str("0\n");
        }
        s
    }
}

/// Parses DIMACS CNF: `c` comment lines, a `p cnf V C` header, clauses
/// terminated by `0` (possibly spanning lines), optional trailing `%`.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, ReductionError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        let err = |msg: &str| ReductionError::Parse {
            line: line_no,
            msg: msg.to_string(),
        };
        if let Some(rest) = line.strip_prefix('p') {
            if header.is_some() {
                return Err(err("duplicate header"));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "cnf" {
                return Err(err("expected `p cnf <vars> <clauses>`"));
            }
            let v = fields[1].parse().map_err(|_| err("bad variable count"))?;
            let c = fields[2].parse().map_err(|_| err("bad clause count"))?;
            header = Some((v, c));
            continue;
        }
        if header.is_none() {
            return Err(err("clause before header"));
        }
        for tok in line.split_whitespace() {
            let lit: i64 = tok.parse().map_err(|_| err(&format!("bad literal `{tok}`")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let Some((num_vars, count)) = header else {
        return Err(ReductionError::Parse {
            line: 0,
            msg: "missing header".into(),
        });
    };
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != count {
        return Err(ReductionError::Parse {
            line: 0,
            msg: format!("header announces {count} clauses, found {}", clauses.len()),
        });
    }
    CnfFormula::new(num_vars, clauses)
}

/// Random `width`-CNF with distinct variables per clause and random signs.
pub fn random_cnf(num_vars: usize, num_clauses: usize, width: usize, seed: u64) -> CnfFormula {
    let width = width.min(num_vars);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let clauses = (0..num_clauses)
        .map(|_| {
            let mut vars: Vec<i64> = Vec::with_capacity(width);
            while vars.len() < width {
                let v = rng.gen_range(1..=num_vars as i64);
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
            vars.into_iter()
                .map(|v| if rng.gen_bool(0.5) { v } else { -v })
                .collect()
        })
        .collect();
    CnfFormula::new(num_vars, clauses).expect("literals in range")
}

/// `(x0 - x_i)` for a positive literal, `x_i` for a negative one.
fn literal_factor(lit: i64, vars: &crate::arith::Vars) -> MultiPoly {
    let i = lit.unsigned_abs() as usize;
    let xi = MultiPoly::var(vars.clone(), i);
    if lit > 0 {
        MultiPoly::var(vars.clone(), 0).try_sub(&xi).unwrap()
    } else {
        xi
    }
}

/// Generators `x_i^2 - x_i x0` and one product per clause, homogeneous in
/// `x0..xn`. An empty clause yields the constant 1.
pub fn sat_generators(phi: &CnfFormula) -> Vec<MultiPoly> {
    let vars = projective_vars(phi.num_vars);
    let x0 = MultiPoly::var(vars.clone(), 0);
    let mut gens = Vec::with_capacity(phi.num_vars + phi.clauses.len());
    for i in 1..=phi.num_vars {
        let xi = MultiPoly::var(vars.clone(), i);
        gens.push(xi.pow(2).try_sub(&xi.try_mul(&x0).unwrap()).unwrap());
    }
    for clause in &phi.clauses {
        let f = clause
            .iter()
            .fold(MultiPoly::one(vars.clone()), |acc, &l| acc.try_mul(&literal_factor(l, &vars)).unwrap());
        gens.push(f);
    }
    gens
}

pub fn sat_to_ideal(phi: &CnfFormula) -> HomIdeal {
    HomIdeal::new(projective_vars(phi.num_vars), sat_generators(phi)).expect("generators are homogeneous")
}

fn check_bruteforce(phi: &CnfFormula) -> Result<(), ReductionError> {
    if phi.num_vars > BRUTEFORCE_VAR_LIMIT {
        return Err(ReductionError::TooLarge {
            vars: phi.num_vars,
            limit: BRUTEFORCE_VAR_LIMIT,
        });
    }
    Ok(())
}

fn assignments(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << n).map(move |bits| (0..n).map(|i| bits >> i & 1 == 1).collect())
}

pub fn count_sat_bruteforce(phi: &CnfFormula) -> Result<u64, ReductionError> {
    check_bruteforce(phi)?;
    Ok(assignments(phi.num_vars).filter(|a| phi.satisfied_by(a)).count() as u64)
}

/// Projective points `(1, a_1, ..., a_n)` of the satisfying assignments.
pub fn satisfying_points(phi: &CnfFormula) -> Result<Vec<Vec<Rational>>, ReductionError> {
    check_bruteforce(phi)?;
    Ok(assignments(phi.num_vars)
        .filter(|a| phi.satisfied_by(a))
        .map(|a| {
            std::iter::once(Rational::one())
                .chain(a.iter().map(|&b| if b { Rational::one() } else { Rational::zero() }))
                .collect()
        })
        .collect())
}

/// Dimension count of `k[x_1..x_n] / I|_{x0=1}`.
pub fn dehomogenized_count(phi: &CnfFormula, cfg: &GrobnerConfig) -> Result<ZeroCount, ReductionError> {
    let gens: Vec<MultiPoly> = sat_generators(phi)
        .iter()
        .map(|g| g.specialize(0, &Rational::one()))
        .collect();
    let vars = (1..=phi.num_vars).map(|i| format!("x{i}")).collect::<Vec<_>>();
    let ideal = HomIdeal::any(crate::arith::vars_from(&vars), gens)?;
    Ok(count_zero_dim(&ideal, cfg)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatReport {
    pub count_bruteforce: u64,
    pub hilbert_polynomial: UniPoly,
    pub hilbert_constant: Option<BigInt>,
    pub zero_dim_count: ZeroCount,
}

impl SatReport {
    pub fn agree(&self) -> bool {
        let c = BigInt::from(self.count_bruteforce);
        self.hilbert_constant.as_ref() == Some(&c) && self.zero_dim_count == ZeroCount::Finite(c)
    }
}

/// Counts models three ways: enumeration, the Hilbert polynomial of the
/// SAT ideal, and the dimension of the dehomogenized quotient.
pub fn verify_sat(phi: &CnfFormula, cfg: &GrobnerConfig) -> Result<SatReport, ReductionError> {
    let count_bruteforce = count_sat_bruteforce(phi)?;
    let hp = hilbert_data(&sat_to_ideal(phi), cfg)?.hilbert_polynomial;
    let hilbert_constant = match hp.degree() {
        None => Some(BigInt::zero()),
        Some(0) => crate::arith::to_integer(&hp.coeff(0)),
        Some(_) => None,
    };
    Ok(SatReport {
        count_bruteforce,
        hilbert_polynomial: hp,
        hilbert_constant,
        zero_dim_count: dehomogenized_count(phi, cfg)?,
    })
}

/// Membership of a homogeneous non-constant `g` in `I`, decided only by
/// comparing Hilbert polynomials.
pub fn him_decide(ideal: &HomIdeal, g: &MultiPoly, cfg: &GrobnerConfig) -> Result<bool, ReductionError> {
    Ok(membership_via_hilbert(ideal, g, cfg)?.member)
}

/// Matrix of homogeneous polynomials with `deg p_ij = d_i - e_j` whenever
/// `p_ij != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    entries: Vec<Vec<MultiPoly>>,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
}

impl GradedMatrix {
    pub fn new(
        entries: Vec<Vec<MultiPoly>>,
        row_degrees: Vec<i64>,
        col_degrees: Vec<i64>,
    ) -> Result<Self, ReductionError> {
        if entries.len() != row_degrees.len() {
            return Err(ReductionError::Grading {
                row: entries.len(),
                col: 0,
                msg: "row count does not match row degrees".into(),
            });
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != col_degrees.len() {
                return Err(ReductionError::Grading {
                    row: i,
                    col: row.len(),
                    msg: "column count does not match column degrees".into(),
                });
            }
            for (j, p) in row.iter().enumerate() {
                let want = row_degrees[i] - col_degrees[j];
                let ok = match p.homogeneity() {
                    Homogeneity::Any => true,
                    Homogeneity::Degree(d) => d as i64 == want,
                    Homogeneity::Mixed => false,
                };
                if !ok {
                    return Err(ReductionError::Grading {
                        row: i,
                        col: j,
                        msg: format!("{p} should be homogeneous of degree {want}"),
                    });
                }
            }
        }
        Ok(GradedMatrix {
            entries,
            row_degrees,
            col_degrees,
        })
    }

    pub fn entries(&self) -> &[Vec<MultiPoly>] {
        &self.entries
    }

    pub fn row_degrees(&self) -> &[i64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i64] {
        &self.col_degrees
    }
}

/// The map `⊕ S(-deg f_j) → S` given by `f_1, ..., f_r`.
pub fn ideal_to_graded_matrix(f: &[MultiPoly]) -> Result<GradedMatrix, ReductionError> {
    let cols = f
        .iter()
        .map(|p| -(p.total_degree().unwrap_or(0) as i64))
        .collect();
    GradedMatrix::new(vec![f.to_vec()], vec![0], cols)
}

/// `χ(M̃(d)) = p_M(d)` for the cokernel `M` of a 1-row graded matrix.
pub fn euler_quotient(gm: &GradedMatrix, d: i64, cfg: &GrobnerConfig) -> Result<Rational, ReductionError> {
    if gm.entries.len() != 1 {
        return Err(ReductionError::MultiRow(gm.entries.len()));
    }
    let row = &gm.entries[0];
    let vars = match row.first() {
        Some(p) => p.vars().clone(),
        None => return Err(ReductionError::Interpolation("empty row has no ambient ring".into())),
    };
    let ideal = HomIdeal::new(vars, row.clone())?;
    let shift = gm.row_degrees[0];
    Ok(hilbert_data(&ideal, cfg)?.hilbert_polynomial.eval(&Rational::from_integer((d + shift).into())))
}

/// The polynomial of degree at most `degree` through the given points.
/// Repeated nodes must carry equal values; all points must fit.
pub fn interpolate(values: &[(i64, Rational)], degree: usize) -> Result<UniPoly, ReductionError> {
    let mut nodes: BTreeMap<i64, Rational> = BTreeMap::new();
    for (x, v) in values {
        if let Some(old) = nodes.insert(*x, v.clone()) {
            if &old != v {
                return Err(ReductionError::Interpolation(format!("conflicting values at {x}")));
            }
        }
    }
    if nodes.len() < degree + 1 {
        return Err(ReductionError::Interpolation(format!(
            "{} distinct nodes cannot determine degree {degree}",
            nodes.len()
        )));
    }
    let pts: Vec<(Rational, Rational)> = nodes
        .iter()
        .take(degree + 1)
        .map(|(x, v)| (Rational::from_integer((*x).into()), v.clone()))
        .collect();
    let mut p = UniPoly::zero();
    for (i, (xi, vi)) in pts.iter().enumerate() {
        let mut basis = UniPoly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in pts.iter().enumerate() {
            if i != j {
                basis = &basis * &UniPoly::from_coeffs(vec![-xj.clone(), Rational::one()]);
                denom *= xi - xj;
            }
        }
        p = &p + &basis.scale(&(vi / denom));
    }
    for (x, v) in &nodes {
        if p.eval_int(*x) != *v {
            return Err(ReductionError::Interpolation(format!(
                "no polynomial of degree {degree} fits the value at {x}"
            )));
        }
    }
    Ok(p)
}
