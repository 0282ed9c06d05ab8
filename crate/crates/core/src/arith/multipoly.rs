//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::ring::CommRing;
use super::{ArithError, Rational};

/// Exponent vector `[e0, e1, ...]` for `x0^e0 * x1^e1 * ...`.
///
/// The `Ord` impl is graded-lexicographic with `x0 > x1 > ...`; it is the
/// canonical term order inside [`MultiPoly`], not a Gröbner order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn extended(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.extend(std::iter::repeat(0).take(extra));
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type Vars = Arc<[String]>;

/// `x0, x1, ..., x{n}`.
pub fn projective_vars(n: usize) -> Vars {
    (0..=n).map(|i| format!("x{i}")).collect::<Vec<_>>().into()
}

pub fn vars_from<S: AsRef<str>>(names: &[S]) -> Vars {
    names
        .iter()
        .map(|s| s.as_ref().to_string())
        .collect::<Vec<_>>()
        .into()
}

/// Result of a homogeneity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial is homogeneous of every degree.
    Any,
    Degree(u32),
    Mixed,
}

impl Homogeneity {
    pub fn is_homogeneous(self) -> bool {
        !matches!(self, Homogeneity::Mixed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: Vars) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vars, c: Rational) -> Self {
        let n = vars.len();
        Self::monomial(vars, Monomial::one(n), c)
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: Vars, index: usize) -> Self {
        let n = vars.len();
        Self::monomial(vars, Monomial::var(n, index), Rational::one())
    }

    /// Looks a variable up by name.
    pub fn var_named(vars: Vars, name: &str) -> Option<Self> {
        let index = vars.iter().position(|v| v == name)?;
        Some(Self::var(vars, index))
    }

    pub fn monomial(vars: Vars, mono: Monomial, c: Rational) -> Self {
        assert_eq!(mono.nvars(), vars.len(), "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        MultiPoly { vars, terms }
    }

    pub fn from_terms(vars: Vars, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), p.vars.len(), "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars()))
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Homogeneity::Any,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::Mixed
                }
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<(), ArithError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(ArithError::VariableMismatch {
                left: self.vars.join(","),
                right: other.vars.join(","),
            })
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, ArithError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, ArithError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, ArithError> {
        self.check_vars(other)?;
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn apply(&self, other: &MultiPoly, op: PolyOp) -> Result<MultiPoly, ArithError> {
        match op {
            PolyOp::Add => self.try_add(other),
            PolyOp::Sub => self.try_sub(other),
            PolyOp::Mul => self.try_mul(other),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.vars.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars(), "point arity mismatch");
        self.terms
            .iter()
            .map(|(m, c)| {
                m.exps()
                    .iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Evaluates with each variable replaced by an element of another ring.
    pub fn eval_in<R: CommRing>(&self, values: &[R], one: &R) -> R {
        assert_eq!(values.len(), self.nvars(), "substitution arity mismatch");
        let mut acc = one.zero_like();
        for (m, c) in &self.terms {
            let mut term = one.from_rational_like(c);
            for (&e, v) in m.exps().iter().zip(values) {
                if e > 0 {
                    term = term.mul_ref(&v.pow_ref(e));
                }
            }
            acc = acc.add_ref(&term);
        }
        acc
    }

    /// Composes with polynomials over a (possibly different) variable list.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars(), "substitution arity mismatch");
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let one = MultiPoly::one(target);
        self.eval_in(images, &one)
    }

    pub fn partial(&self, index: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.exps()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[index] -= 1;
            out.add_term(Monomial::new(exps), c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Sets variable `index` to `value` and drops it from the variable list.
    pub fn specialize(&self, index: usize, value: &Rational) -> MultiPoly {
        let vars: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != index)
            .map(|(_, v)| v.clone())
            .collect();
        let mut out = MultiPoly::zero(vars.into());
        for (m, c) in &self.terms {
            let mut exps = m.exps().to_vec();
            let e = exps.remove(index);
            out.add_term(
                Monomial::new(exps),
                c * num_traits::pow(value.clone(), e as usize),
            );
        }
        out
    }

    /// Appends variables, keeping existing exponents.
    pub fn extend_vars(&self, extra: &[&str]) -> MultiPoly {
        let mut names: Vec<String> = self.vars.to_vec();
        names.extend(extra.iter().map(|s| s.to_string()));
        MultiPoly {
            vars: names.into(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extended(extra.len()), c.clone()))
                .collect(),
        }
    }

    /// Reinterprets the polynomial over a variable list with identical arity.
    pub fn with_vars(&self, vars: Vars) -> MultiPoly {
        assert_eq!(vars.len(), self.nvars(), "arity mismatch");
        MultiPoly {
            vars,
            terms: self.terms.clone(),
        }
    }

    /// Degree-`d` homogeneous component.
    pub fn graded_part(&self, d: u32) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

pub fn poly_arith(a: &MultiPoly, b: &MultiPoly, op: PolyOp) -> Result<MultiPoly, ArithError> {
    a.apply(b, op)
}

impl<'a> Add for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<'a> Sub for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl<'a> Mul for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl CommRing for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.vars.clone())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.vars.clone())
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
        MultiPoly::constant(self.vars.clone(), q.clone())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in vars.iter().zip(m.exps()) {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Text form `3/2*x0^2*x1 - x2^3`, terms in descending canonical order.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, &self.vars, m)?;
            }
        }
        Ok(())
    }
}
