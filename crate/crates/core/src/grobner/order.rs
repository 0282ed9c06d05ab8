use std::cmp::Ordering;

use crate::arith::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A monomial order given by a kind and a variable ranking; `ranking[0]` is
/// the index of the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    ranking: Vec<usize>,
}

impl MonomialOrder {
    /// Panics unless `ranking` is a permutation of `0..ranking.len()`.
    pub fn new(kind: OrderKind, ranking: Vec<usize>) -> Self {
        let mut seen = vec![false; ranking.len()];
        for &r in &ranking {
            assert!(r < seen.len() && !seen[r], "ranking must be a permutation");
            seen[r] = true;
        }
        MonomialOrder { kind, ranking }
    }

    /// `x0 > x1 > ... `
    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, (0..nvars).collect())
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::GrevLex, (0..nvars).collect())
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exps(), b.exps());
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.ranking {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    other => return other,
                }
                for &v in self.ranking.iter().rev() {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_compares_first_variable_first() {
        let o = MonomialOrder::lex(3);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        let rev = MonomialOrder::new(OrderKind::Lex, vec![2, 1, 0]);
        assert_eq!(rev.cmp(&m(&[1, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::grevlex(3);
        // x1^2 > x0*x2 in grevlex, while lex says the opposite
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[2, 0, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 1, 0])), Ordering::Equal);
    }
}
