//! Text format for polynomials: `3/2*x0^2*x1 - x2^3`.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ('/' integer)? | identifier | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::multipoly::{MultiPoly, Vars};
use super::{ArithError, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>, ArithError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Token::Plus)),
            '-' => out.push((start, Token::Minus)),
            '*' => out.push((start, Token::Star)),
            '/' => out.push((start, Token::Slash)),
            '^' => out.push((start, Token::Caret)),
            '(' => out.push((start, Token::LParen)),
            ')' => out.push((start, Token::RParen)),
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Token::Int(digits.parse().unwrap())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Token::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(ArithError::Parse {
                    position: start,
                    message: format!("unexpected character '{other}'"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    vars: Vars,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error(&self, message: impl Into<String>) -> ArithError {
        ArithError::Parse {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, ArithError> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ArithError> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, ArithError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some(Token::Int(e)) => {
                    let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.error("expected exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ArithError> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                let mut value = Rational::from_integer(n);
                if let Some(Token::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Token::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            value /= Rational::from_integer(d);
                        }
                        _ => return Err(self.error("expected nonzero integer denominator")),
                    }
                }
                Ok(MultiPoly::constant(self.vars.clone(), value))
            }
            Some(Token::Ident(name)) => {
                let p = MultiPoly::var_named(self.vars.clone(), &name)
                    .ok_or_else(|| self.error(format!("unknown variable '{name}'")))?;
                self.pos += 1;
                Ok(p)
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.error("expected ')'")),
                }
            }
            _ => Err(self.error("expected number, variable or '('")),
        }
    }
}

/// Parses `s` over the given variable list.
pub fn parse_poly(s: &str, vars: &Vars) -> Result<MultiPoly, ArithError> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(ArithError::Parse {
            position: 0,
            message: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        tokens: &tokens,
        pos: 0,
        vars: vars.clone(),
        end: s.len(),
    };
    let result = p.expr()?;
    if p.pos != tokens.len() {
        return Err(p.error("trailing input"));
    }
    Ok(result)
}

/// Infers the variable list from identifiers: `x0..x{max}` (contiguous), then
/// `y` if present, then any other names alphabetically.
pub fn infer_vars<'a>(sources: impl IntoIterator<Item = &'a str>) -> Result<Vars, ArithError> {
    let mut max_x: Option<usize> = None;
    let mut has_y = false;
    let mut others: Vec<String> = Vec::new();
    for s in sources {
        for (_, t) in tokenize(s)? {
            if let Token::Ident(name) = t {
                if let Some(idx) = name.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
                    max_x = Some(max_x.map_or(idx, |m| m.max(idx)));
                } else if name == "y" {
                    has_y = true;
                } else if !others.contains(&name) {
                    others.push(name);
                }
            }
        }
    }
    others.sort();
    let mut names: Vec<String> = match max_x {
        Some(m) => (0..=m).map(|i| format!("x{i}")).collect(),
        None => Vec::new(),
    };
    if has_y {
        names.push("y".into());
    }
    names.extend(others);
    Ok(names.into())
}
