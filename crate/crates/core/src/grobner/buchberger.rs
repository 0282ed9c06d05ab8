//! Buchberger's algorithm on primitive integer polynomials.
//!
//! Coefficients are kept as integers with content removed; rational results
//! are recovered at the end by making elements monic. Reductions keep track
//! of the scalar they introduce so exact rational normal forms are available.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::order::MonomialOrder;
use super::GrobnerError;
use crate::arith::{lcm_of_denominators, Monomial, MultiPoly, Rational, Vars};

/// Terms sorted strictly descending under the order in use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IPoly {
    pub terms: Vec<(Monomial, BigInt)>,
}

impl IPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Clears denominators of `p` and sorts its terms.
    pub fn from_poly(p: &MultiPoly, ord: &MonomialOrder) -> IPoly {
        let coeffs: Vec<Rational> = p.terms().map(|(_, c)| c.clone()).collect();
        let l = lcm_of_denominators(&coeffs);
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .map(|(m, c)| (m.clone(), c.numer() * (&l / c.denom())))
            .collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let mut out = IPoly { terms };
        out.make_primitive();
        out
    }

    pub fn to_poly(&self, vars: &Vars, scale: &Rational) -> MultiPoly {
        MultiPoly::from_terms(
            vars.clone(),
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()) * scale)),
        )
    }

    /// Monic rational version.
    pub fn to_monic(&self, vars: &Vars) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero(vars.clone());
        }
        let inv = Rational::new(BigInt::one(), self.lc().clone());
        self.to_poly(vars, &inv)
    }

    /// Divides out the content and makes the leading coefficient positive.
    /// Returns the divisor used (signed).
    pub fn make_primitive(&mut self) -> BigInt {
        if self.is_zero() {
            return BigInt::one();
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.lc().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
        g
    }
}

/// `a*p - b*(mono*q)`, merging sorted term lists.
fn combine(
    a: &BigInt,
    p: &[(Monomial, BigInt)],
    b: &BigInt,
    mono: &Monomial,
    q: &[(Monomial, BigInt)],
    ord: &MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let mut i = 0;
    let mut j = 0;
    let shifted = |j: usize| (q[j].0.mul(mono), &q[j].1);
    let mut next_q = if q.is_empty() { None } else { Some(shifted(0)) };
    while i < p.len() || next_q.is_some() {
        let order = match (&next_q, p.get(i)) {
            (None, _) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some((mq, _)), Some((mp, _))) => ord.cmp(mp, mq),
        };
        match order {
            Ordering::Greater => {
                let c = a * &p[i].1;
                out.push((p[i].0.clone(), c));
                i += 1;
            }
            Ordering::Less => {
                let (mq, cq) = next_q.take().unwrap();
                out.push((mq, -(b * cq)));
                j += 1;
                next_q = (j < q.len()).then(|| shifted(j));
            }
            Ordering::Equal => {
                let (mq, cq) = next_q.take().unwrap();
                let c = a * &p[i].1 - b * cq;
                if !c.is_zero() {
                    out.push((mq, c));
                }
                i += 1;
                j += 1;
                next_q = (j < q.len()).then(|| shifted(j));
            }
        }
    }
    out
}

/// Reduces `f` modulo `basis`. With `full`, tail terms are reduced too.
/// Returns `(r, s)` with `r = s * NF(f)` up to the content removed, i.e. the
/// rational normal form is `r / s`.
pub(crate) fn reduce(
    f: &IPoly,
    basis: &[&IPoly],
    ord: &MonomialOrder,
    full: bool,
) -> (IPoly, Rational) {
    let mut p = f.terms.clone();
    let mut done: Vec<(Monomial, BigInt)> = Vec::new();
    let mut scale = Rational::one();
    let mut steps = 0usize;
    while !p.is_empty() {
        let (lead, lc) = (&p[0].0, &p[0].1);
        let divisor = basis.iter().find(|g| g.lm().divides(lead));
        match divisor {
            Some(g) => {
                let mono = g.lm().quotient_of(lead).unwrap();
                let gg = g.lc().gcd(lc);
                let a = g.lc() / &gg;
                let b = lc / &gg;
                p = combine(&a, &p, &b, &mono, &g.terms, ord);
                if !a.is_one() {
                    for (_, c) in &mut done {
                        *c = &*c * &a;
                    }
                    scale *= Rational::from_integer(a);
                }
                steps += 1;
                if steps % 8 == 0 {
                    let content = content_of(&p, &done);
                    if !content.is_one() && !content.is_zero() {
                        divide_all(&mut p, &mut done, &content);
                        scale /= Rational::from_integer(content);
                    }
                }
            }
            None => {
                if !full {
                    done.extend(p.drain(..));
                    break;
                }
                let t = p.remove(0);
                done.push(t);
            }
        }
    }
    let mut r = IPoly { terms: done };
    let g = r.make_primitive();
    scale /= Rational::from_integer(g);
    (r, scale)
}

fn content_of(p: &[(Monomial, BigInt)], q: &[(Monomial, BigInt)]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in p.iter().chain(q) {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_all(p: &mut [(Monomial, BigInt)], q: &mut [(Monomial, BigInt)], d: &BigInt) {
    for (_, c) in p.iter_mut().chain(q.iter_mut()) {
        *c = &*c / d;
    }
}

fn s_poly(f: &IPoly, g: &IPoly, ord: &MonomialOrder) -> IPoly {
    let l = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&l).unwrap();
    let mg = g.lm().quotient_of(&l).unwrap();
    let gg = f.lc().gcd(g.lc());
    let a = g.lc() / &gg;
    let b = f.lc() / &gg;
    let shifted_f: Vec<(Monomial, BigInt)> =
        f.terms.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    let mut out = IPoly {
        terms: combine(&a, &shifted_f, &b, &mg, &g.terms, ord),
    };
    out.make_primitive();
    out
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

pub(crate) struct Limits {
    pub max_basis: usize,
    pub max_degree: u32,
}

/// Reduced Gröbner basis as primitive integer polynomials, sorted by
/// ascending leading monomial.
pub(crate) fn groebner(
    input: Vec<IPoly>,
    ord: &MonomialOrder,
    limits: &Limits,
) -> Result<Vec<IPoly>, GrobnerError> {
    let mut polys: Vec<IPoly> = Vec::new();
    let mut basis: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for f in input {
        if f.is_zero() {
            continue;
        }
        let refs: Vec<&IPoly> = basis.iter().map(|&k| &polys[k]).collect();
        let (h, _) = reduce(&f, &refs, ord, false);
        if h.is_zero() {
            continue;
        }
        add(&mut polys, &mut basis, &mut pairs, h, limits)?;
    }
    while !pairs.is_empty() {
        let idx = select(&pairs, ord);
        let pair = pairs.swap_remove(idx);
        let s = s_poly(&polys[pair.i], &polys[pair.j], ord);
        if s.is_zero() {
            continue;
        }
        let refs: Vec<&IPoly> = basis.iter().map(|&k| &polys[k]).collect();
        let (h, _) = reduce(&s, &refs, ord, false);
        if !h.is_zero() {
            add(&mut polys, &mut basis, &mut pairs, h, limits)?;
        }
    }
    Ok(interreduce(basis.into_iter().map(|k| polys[k].clone()).collect(), ord))
}

/// Normal selection: smallest lcm under the order.
fn select(pairs: &[Pair], ord: &MonomialOrder) -> usize {
    let mut best = 0;
    for (k, p) in pairs.iter().enumerate().skip(1) {
        if ord.cmp(&p.lcm, &pairs[best].lcm) == Ordering::Less {
            best = k;
        }
    }
    best
}

/// Adds `h` to the basis with the Gebauer-Möller pair update.
fn add(
    polys: &mut Vec<IPoly>,
    basis: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    h: IPoly,
    limits: &Limits,
) -> Result<(), GrobnerError> {
    let deg = h.degree();
    if deg > limits.max_degree {
        return Err(GrobnerError::ResourceLimit {
            what: "polynomial degree",
            limit: limits.max_degree as usize,
        });
    }
    let hi = polys.len();
    let hlm = h.lm().clone();
    polys.push(h);

    let candidates: Vec<Pair> = basis
        .iter()
        .map(|&g| Pair {
            i: g,
            j: hi,
            lcm: polys[g].lm().lcm(&hlm),
        })
        .collect();
    // Chain criterion among the new pairs: drop (h, g1) if some other new
    // pair has an lcm properly dividing it, or an equal lcm earlier in line.
    let mut kept: Vec<Pair> = Vec::new();
    for (a, p) in candidates.iter().enumerate() {
        let coprime = polys[p.i].lm().is_coprime(&hlm);
        let dominated = candidates.iter().enumerate().any(|(b, q)| {
            b != a && q.lcm.divides(&p.lcm) && (q.lcm != p.lcm || b < a)
        });
        if coprime || !dominated {
            kept.push(p.clone());
        }
    }
    // If several kept pairs share an lcm and one of them is coprime, the
    // whole group is redundant (product criterion).
    let coprime_lcms: Vec<Monomial> = kept
        .iter()
        .filter(|p| polys[p.i].lm().is_coprime(&hlm))
        .map(|p| p.lcm.clone())
        .collect();
    kept.retain(|p| !coprime_lcms.contains(&p.lcm));

    pairs.retain(|p| {
        !(hlm.divides(&p.lcm)
            && polys[p.i].lm().lcm(&hlm) != p.lcm
            && polys[p.j].lm().lcm(&hlm) != p.lcm)
    });
    pairs.extend(kept);

    basis.retain(|&g| !hlm.divides(polys[g].lm()));
    basis.push(hi);
    if basis.len() > limits.max_basis {
        return Err(GrobnerError::ResourceLimit {
            what: "basis size",
            limit: limits.max_basis,
        });
    }
    Ok(())
}

/// Minimal, fully tail-reduced basis sorted by ascending leading monomial.
pub(crate) fn interreduce(mut g: Vec<IPoly>, ord: &MonomialOrder) -> Vec<IPoly> {
    g.retain(|p| !p.is_zero());
    g.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<IPoly> = Vec::new();
    for p in g {
        if !minimal.iter().any(|q| q.lm().divides(p.lm())) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&IPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, q)| q)
            .collect();
        let (r, _) = reduce(&minimal[k], &others, ord, true);
        out.push(r);
    }
    out
}
