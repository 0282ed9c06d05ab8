//! Gröbner bases, normal forms, Hilbert series and polynomials of
//! homogeneous ideals, zero counting and ideal membership.
//!
//! The Hilbert polynomial computed here is that of `S/I` for the ideal as
//! given. For a non-radical ideal this differs from the Hilbert polynomial
//! of its zero set; no radical is taken.

mod buchberger;
mod hilbert;
mod order;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::{parse_poly, infer_vars, ArithError, Homogeneity, MultiPoly, Rational, UniPoly, Vars};
use buchberger::{groebner, reduce, IPoly, Limits};

pub use hilbert::{
    hilbert_function_direct as hilbert_function_direct_gens, hilbert_series_monomial,
    minimalize, monomials_of_degree, regular_sequence_numerator, HilbertData,
};
pub use order::{MonomialOrder, OrderKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrobnerError {
    #[error("resource limit exceeded: {what} > {limit}")]
    ResourceLimit { what: &'static str, limit: usize },
    #[error("generator is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("membership test needs a non-constant homogeneous polynomial, got {0}")]
    BadMembershipCandidate(String),
    #[error("generators use different variable lists")]
    VariableMismatch,
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("ideal file: {0}")]
    Format(String),
}

/// Caps that abort a computation with [`GrobnerError::ResourceLimit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrobnerConfig {
    pub max_basis: usize,
    pub max_degree: u32,
}

impl Default for GrobnerConfig {
    fn default() -> Self {
        GrobnerConfig {
            max_basis: 10_000,
            max_degree: 64,
        }
    }
}

impl GrobnerConfig {
    fn limits(&self) -> Limits {
        Limits {
            max_basis: self.max_basis,
            max_degree: self.max_degree,
        }
    }
}

/// An ideal given by generators over a fixed variable list. Construction
/// through [`HomIdeal::new`] verifies homogeneity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomIdeal {
    vars: Vars,
    generators: Vec<MultiPoly>,
    homogeneous: bool,
}

impl HomIdeal {
    /// Fails unless every generator is homogeneous.
    pub fn new(vars: Vars, generators: Vec<MultiPoly>) -> Result<Self, GrobnerError> {
        let ideal = Self::any(vars, generators)?;
        if let Some(g) = ideal
            .generators
            .iter()
            .find(|g| !g.homogeneity().is_homogeneous())
        {
            return Err(GrobnerError::NotHomogeneous(g.to_string()));
        }
        Ok(HomIdeal {
            homogeneous: true,
            ..ideal
        })
    }

    /// An arbitrary ideal, for affine computations.
    pub fn any(vars: Vars, generators: Vec<MultiPoly>) -> Result<Self, GrobnerError> {
        if generators.iter().any(|g| g.vars() != &vars) {
            return Err(GrobnerError::VariableMismatch);
        }
        let homogeneous = generators.iter().all(|g| g.homogeneity().is_homogeneous());
        Ok(HomIdeal {
            vars,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            homogeneous,
        })
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// The ideal generated by `self` and `g`.
    pub fn with_generator(&self, g: MultiPoly) -> Result<Self, GrobnerError> {
        let mut gens = self.generators.clone();
        gens.push(g);
        Self::any(self.vars.clone(), gens)
    }

    /// Extension to the polynomial ring with extra variables appended.
    pub fn extend_vars(&self, extra: &[&str]) -> Self {
        let generators: Vec<MultiPoly> = self.generators.iter().map(|g| g.extend_vars(extra)).collect();
        let vars = match generators.first() {
            Some(g) => g.vars().clone(),
            None => MultiPoly::zero(self.vars.clone()).extend_vars(extra).vars().clone(),
        };
        HomIdeal {
            vars,
            generators,
            homogeneous: self.homogeneous,
        }
    }

    pub fn groebner(&self, ord: &MonomialOrder, cfg: &GrobnerConfig) -> Result<GrobnerBasis, GrobnerError> {
        buchberger_basis(self, ord, cfg)
    }

    pub fn hilbert_data(&self, cfg: &GrobnerConfig) -> Result<HilbertData, GrobnerError> {
        hilbert_data(self, cfg)
    }
}

/// A reduced Gröbner basis: monic, auto-reduced, sorted by ascending
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrobnerBasis {
    order: MonomialOrder,
    vars: Vars,
    elements: Vec<MultiPoly>,
    internal: Vec<IPoly>,
}

impl GrobnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn elements(&self) -> &[MultiPoly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.internal.iter().any(|p| p.lm().is_one())
    }

    pub fn leading_monomials(&self) -> Vec<crate::arith::Monomial> {
        self.internal.iter().map(|p| p.lm().clone()).collect()
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        assert_eq!(f.vars(), &self.vars, "variable mismatch");
        let fi = IPoly::from_poly(f, &self.order);
        if fi.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        let refs: Vec<&IPoly> = self.internal.iter().collect();
        let (r, scale) = reduce(&fi, &refs, &self.order, true);
        // f = (content) * fi; fi reduces to r / scale.
        let content = content_ratio(f, &fi);
        r.to_poly(&self.vars, &(content / scale))
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// `c` with `f = c * fi`.
fn content_ratio(f: &MultiPoly, fi: &IPoly) -> Rational {
    let (m, c) = &fi.terms[0];
    f.coeff(m) / Rational::from_integer(c.clone())
}

impl fmt::Display for GrobnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.elements {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

pub fn buchberger_basis(
    ideal: &HomIdeal,
    ord: &MonomialOrder,
    cfg: &GrobnerConfig,
) -> Result<GrobnerBasis, GrobnerError> {
    assert_eq!(ord.nvars(), ideal.nvars(), "order arity mismatch");
    let input: Vec<IPoly> = ideal
        .generators
        .iter()
        .map(|g| IPoly::from_poly(g, ord))
        .collect();
    let internal = groebner(input, ord, &cfg.limits())?;
    let elements = internal.iter().map(|p| p.to_monic(&ideal.vars)).collect();
    Ok(GrobnerBasis {
        order: ord.clone(),
        vars: ideal.vars.clone(),
        elements,
        internal,
    })
}

/// Reduced basis under grevlex with default caps.
pub fn buchberger(ideal: &HomIdeal) -> Result<GrobnerBasis, GrobnerError> {
    buchberger_basis(ideal, &MonomialOrder::grevlex(ideal.nvars()), &GrobnerConfig::default())
}

pub fn in_ideal(f: &MultiPoly, ideal: &HomIdeal, cfg: &GrobnerConfig) -> Result<bool, GrobnerError> {
    let gb = ideal.groebner(&MonomialOrder::grevlex(ideal.nvars()), cfg)?;
    Ok(gb.contains(f))
}

/// Hilbert data of `S/I` via the leading-term ideal under grevlex.
pub fn hilbert_data(ideal: &HomIdeal, cfg: &GrobnerConfig) -> Result<HilbertData, GrobnerError> {
    if !ideal.homogeneous {
        return Err(GrobnerError::NotHomogeneous(
            ideal
                .generators
                .iter()
                .find(|g| !g.homogeneity().is_homogeneous())
                .map(|g| g.to_string())
                .unwrap_or_default(),
        ));
    }
    let gb = ideal.groebner(&MonomialOrder::grevlex(ideal.nvars()), cfg)?;
    let numer = hilbert_series_monomial(&gb.leading_monomials(), ideal.nvars());
    Ok(HilbertData::from_numerator(numer, ideal.nvars()))
}

/// `dim (S/I)_k` by ranks of coefficient matrices, without Gröbner bases.
pub fn hilbert_function_direct(ideal: &HomIdeal, k: u32) -> Result<BigInt, GrobnerError> {
    if !ideal.homogeneous {
        return Err(GrobnerError::NotHomogeneous(String::new()));
    }
    Ok(hilbert::hilbert_function_direct(&ideal.generators, ideal.nvars(), k))
}

/// Number of affine solutions counted with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroCount {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for ZeroCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeroCount::Finite(n) => write!(f, "{n}"),
            ZeroCount::Infinite => write!(f, "infinite"),
        }
    }
}

/// Dimension of `k[x]/I` when finite: the number of standard monomials
/// under the grevlex leading-term ideal.
pub fn count_zero_dim(ideal: &HomIdeal, cfg: &GrobnerConfig) -> Result<ZeroCount, GrobnerError> {
    let n = ideal.nvars();
    let gb = ideal.groebner(&MonomialOrder::grevlex(n), cfg)?;
    let numer = hilbert_series_monomial(&gb.leading_monomials(), n);
    if numer.is_zero() {
        return Ok(ZeroCount::Finite(BigInt::zero()));
    }
    let mut q = numer;
    for _ in 0..n {
        match q.div_one_minus_t() {
            Some(next) => q = next,
            None => return Ok(ZeroCount::Infinite),
        }
    }
    let total: Rational = q.coeffs().iter().sum();
    Ok(ZeroCount::Finite(total.to_integer()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport {
    pub member: bool,
    pub hilbert_without: UniPoly,
    pub hilbert_with: UniPoly,
}

/// Decides `g ∈ I` by comparing the Hilbert polynomials of `I` and `I + (g)`
/// after adjoining a fresh variable `y` to both.
pub fn membership_via_hilbert(
    ideal: &HomIdeal,
    g: &MultiPoly,
    cfg: &GrobnerConfig,
) -> Result<MembershipReport, GrobnerError> {
    match g.homogeneity() {
        Homogeneity::Degree(d) if d > 0 => {}
        _ => return Err(GrobnerError::BadMembershipCandidate(g.to_string())),
    }
    if !ideal.homogeneous {
        return Err(GrobnerError::NotHomogeneous(String::new()));
    }
    let fresh = fresh_name(ideal.vars());
    let lifted = ideal.extend_vars(&[fresh.as_str()]);
    let without = hilbert_data(&lifted, cfg)?.hilbert_polynomial;
    let with = hilbert_data(&lifted.with_generator(g.extend_vars(&[fresh.as_str()]))?, cfg)?
        .hilbert_polynomial;
    Ok(MembershipReport {
        member: without == with,
        hilbert_without: without,
        hilbert_with: with,
    })
}

fn fresh_name(vars: &Vars) -> String {
    let mut name = "y".to_string();
    while vars.iter().any(|v| *v == name) {
        name.push('_');
    }
    name
}

/// Parses the ideal file format: an optional first line `vars: x0 x1 ...`
/// followed by one polynomial per line. Blank lines and lines starting with
/// `#` are skipped. Without a `vars:` line the variables are inferred.
pub fn parse_ideal_file(text: &str) -> Result<(Vars, Vec<MultiPoly>), GrobnerError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    let declared: Option<Vars> = match lines.peek() {
        Some(l) if l.starts_with("vars:") => {
            let names: Vec<String> = l["vars:".len()..]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(String::from)
                .collect();
            lines.next();
            if names.is_empty() {
                return Err(GrobnerError::Format("empty variable list".into()));
            }
            Some(names.into())
        }
        _ => None,
    };
    let body: Vec<&str> = lines.collect();
    let vars = match declared {
        Some(v) => v,
        None => {
            let v = infer_vars(body.iter().copied())?;
            if v.is_empty() {
                return Err(GrobnerError::Format(
                    "no variables: add a 'vars:' line".into(),
                ));
            }
            v
        }
    };
    let polys = body
        .iter()
        .map(|l| parse_poly(l, &vars))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((vars, polys))
}

/// Inverse of [`parse_ideal_file`].
pub fn write_ideal_file(vars: &Vars, polys: &[MultiPoly]) -> String {
    let mut out = format!("vars: {}\n", vars.join(" "));
    for p in polys {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}

/// Polynomial with every monomial of degree `degree` (or `<= degree` when
/// not `homogeneous`) and integer coefficients drawn from `[-bound, bound]`.
pub fn random_dense_poly<R: rand::Rng>(
    vars: &Vars,
    degree: u32,
    homogeneous: bool,
    bound: i64,
    rng: &mut R,
) -> MultiPoly {
    let n = vars.len();
    let low = if homogeneous { degree } else { 0 };
    let terms: Vec<_> = (low..=degree)
        .flat_map(|d| monomials_of_degree(n, d))
        .map(|m| (m, Rational::from_integer(rng.gen_range(-bound..=bound).into())))
        .collect();
    MultiPoly::from_terms(vars.clone(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{projective_vars, vars_from};

    fn ideal(vars: &Vars, gens: &[&str]) -> HomIdeal {
        HomIdeal::any(
            vars.clone(),
            gens.iter().map(|s| parse_poly(s, vars).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn lex_basis_example() {
        let v = vars_from(&["x", "y"]);
        let i = ideal(&v, &["x^2 - y", "y"]);
        let gb = i.groebner(&MonomialOrder::lex(2), &GrobnerConfig::default()).unwrap();
        let expected: Vec<MultiPoly> = ["y", "x^2"].iter().map(|s| parse_poly(s, &v).unwrap()).collect();
        assert_eq!(gb.elements(), &expected[..]);
    }

    #[test]
    fn zero_ideal_and_redundant_generator() {
        let v = vars_from(&["x", "y"]);
        assert!(buchberger(&ideal(&v, &[])).unwrap().is_empty());
        let gb = buchberger(&ideal(&v, &["x", "x^2"])).unwrap();
        assert_eq!(gb.elements(), &[parse_poly("x", &v).unwrap()]);
    }

    #[test]
    fn normal_forms() {
        let v = vars_from(&["x", "y"]);
        let gb = buchberger(&ideal(&v, &["x"])).unwrap();
        assert!(gb.contains(&parse_poly("x*y", &v).unwrap()));
        assert_eq!(
            gb.normal_form(&parse_poly("x + 1", &v).unwrap()),
            parse_poly("1", &v).unwrap()
        );
        let p = projective_vars(2);
        let gb = buchberger(&ideal(&p, &["x0*x2 - x1^2", "x1"])).unwrap();
        assert!(gb.contains(&parse_poly("x0*x2", &p).unwrap()));
    }

    #[test]
    fn normal_form_keeps_rational_scale() {
        let v = vars_from(&["x", "y"]);
        let gb = buchberger(&ideal(&v, &["2*x - 3*y"])).unwrap();
        // x = 3/2 y mod I, so 4x + y -> 7y
        assert_eq!(
            gb.normal_form(&parse_poly("4*x + y", &v).unwrap()),
            parse_poly("7*y", &v).unwrap()
        );
        assert_eq!(
            gb.normal_form(&parse_poly("1/3*x^2", &v).unwrap()),
            parse_poly("3/4*y^2", &v).unwrap()
        );
    }

    #[test]
    fn hilbert_polynomials_of_examples() {
        let p = projective_vars(2);
        let cfg = GrobnerConfig::default();
        let plane = hilbert_data(&ideal(&p, &[]), &cfg).unwrap();
        assert_eq!(plane.hilbert_polynomial, crate::arith::binom_poly(2, 2));
        let cubic = hilbert_data(&ideal(&p, &["x0^3 + x1^3 + x2^3"]), &cfg).unwrap();
        assert_eq!(cubic.hilbert_polynomial, UniPoly::from_ints(&[0, 3]));
    }

    #[test]
    fn zero_counts() {
        let v = vars_from(&["x", "y"]);
        let cfg = GrobnerConfig::default();
        assert_eq!(
            count_zero_dim(&ideal(&v, &["x^2 - 1"]), &cfg).unwrap(),
            ZeroCount::Infinite
        );
        let x = vars_from(&["x"]);
        assert_eq!(
            count_zero_dim(&ideal(&x, &["x^2 - 1"]), &cfg).unwrap(),
            ZeroCount::Finite(2.into())
        );
        assert_eq!(count_zero_dim(&ideal(&v, &["x*y"]), &cfg).unwrap(), ZeroCount::Infinite);
        assert_eq!(
            count_zero_dim(&ideal(&v, &["x^2 - 1", "y^3 - y"]), &cfg).unwrap(),
            ZeroCount::Finite(6.into())
        );
        assert_eq!(
            count_zero_dim(&ideal(&v, &["x - 1", "x"]), &cfg).unwrap(),
            ZeroCount::Finite(0.into())
        );
    }

    #[test]
    fn membership_examples() {
        let p = projective_vars(1);
        let cfg = GrobnerConfig::default();
        let i = ideal(&p, &["x0"]);
        let yes = membership_via_hilbert(&i, &parse_poly("x0^2", &p).unwrap(), &cfg).unwrap();
        assert!(yes.member);
        let no = membership_via_hilbert(&i, &parse_poly("x1", &p).unwrap(), &cfg).unwrap();
        assert!(!no.member);
        assert_ne!(no.hilbert_with, no.hilbert_without);
        assert!(membership_via_hilbert(&i, &parse_poly("3", &p).unwrap(), &cfg).is_err());
    }

    #[test]
    fn resource_caps() {
        let p = projective_vars(3);
        let i = ideal(&p, &["x0^2*x1 - x2^2*x3", "x0*x1^2 - x3^3", "x0^3 - x1*x2^2"]);
        let full = i.groebner(&MonomialOrder::grevlex(4), &GrobnerConfig::default()).unwrap();
        assert!(full.len() > 3, "{full}");
        let tight = GrobnerConfig { max_basis: 3, max_degree: 64 };
        assert!(matches!(
            i.groebner(&MonomialOrder::grevlex(4), &tight),
            Err(GrobnerError::ResourceLimit { .. })
        ));
        let shallow = GrobnerConfig { max_basis: 100, max_degree: 3 };
        assert!(matches!(
            i.groebner(&MonomialOrder::grevlex(4), &shallow),
            Err(GrobnerError::ResourceLimit { .. })
        ));
    }

    #[test]
    fn ideal_file_round_trip() {
        let text = "vars: x0 x1 x2\n# conic\nx0*x2 - x1^2\n\n";
        let (v, polys) = parse_ideal_file(text).unwrap();
        assert_eq!(v.len(), 3);
        assert_eq!(parse_ideal_file(&write_ideal_file(&v, &polys)).unwrap(), (v, polys));
        let (inferred, _) = parse_ideal_file("x1*x2").unwrap();
        assert_eq!(inferred.len(), 3);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let p = projective_vars(1);
        assert!(HomIdeal::new(p.clone(), vec![parse_poly("x0 + x1^2", &p).unwrap()]).is_err());
    }
}
