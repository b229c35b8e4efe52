//! Text form of polynomials.
//!
//! ```text
//! expr     = term , { ( "+" | "-" ) , term } ;
//! term     = unary , { "*" , unary } ;
//! unary    = "-" , unary | power ;
//! power    = atom , [ "^" , integer ] ;
//! atom     = number | variable | "(" , expr , ")" ;
//! number   = integer , [ "/" , integer ] ;
//! integer  = digit , { digit } ;
//! variable = letter , { letter | digit | "_" } ;
//! ```
//!
//! Unary minus binds tighter than `+` and `*` but looser than `^`, so `-x^2`
//! is `-(x^2)`. Exponents are capped at 10000 on a bare monomial and at
//! 256 on anything else, and a power whose expansion could exceed 20000
//! terms is rejected. There is no implicit multiplication. Products and powers are
//! expanded as they are parsed.
//!
//! Printing lists terms in decreasing graded-lex order, with variables inside
//! a monomial in increasing variable order: `4*y^2 - 4*x*y + x^2 - 2*y + x`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::{Monomial, Poly, Var};

const MAX_NESTING: usize = 256;
/// Exponent limits: powers of `x`, `-x`, `x*y`, ... stay cheap, while other
/// bases are expanded term by term.
const MAX_EXPONENT: u32 = 10_000;
const MAX_EXPANDED_EXPONENT: u32 = 256;
const MAX_EXPANDED_TERMS: u128 = 20_000;

/// Upper bound on the number of terms of `base^e`: the number of monomials
/// of degree at most `e * deg(base)` in the variables of `base`.
fn expansion_size(base: &Poly, e: u32) -> u128 {
    let n = u128::from(e) * u128::from(base.total_degree());
    let k = base.variables().len() as u128;
    (1..=k).fold(1u128, |acc, i| acc.saturating_mul(n + i) / i)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("negative exponent at position {position}")]
    ExponentNegative { position: usize },
    #[error("undeclared variable `{name}` at position {position}")]
    UndeclaredVariable { name: String, position: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. }
            | ParseError::ExponentNegative { position }
            | ParseError::UndeclaredVariable { position, .. } => *position,
        }
    }
}

/// Polynomial text plus an optional declared variable universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySource {
    pub text: String,
    pub universe: Option<Vec<Var>>,
}

impl PolySource {
    pub fn new(text: impl Into<String>) -> Self {
        PolySource { text: text.into(), universe: None }
    }

    pub fn with_universe(text: impl Into<String>, universe: Vec<Var>) -> Self {
        PolySource { text: text.into(), universe: Some(universe) }
    }

    pub fn parse(&self) -> Result<Poly, ParseError> {
        Parser::new(&self.text, self.universe.as_deref())?.parse_all()
    }
}

pub fn parse(text: &str) -> Result<Poly, ParseError> {
    Parser::new(text, None)?.parse_all()
}

/// Parses, rejecting variables outside `universe`.
pub fn parse_in(text: &str, universe: &[Var]) -> Result<Poly, ParseError> {
    Parser::new(text, Some(universe))?.parse_all()
}

/// Canonical text form; `parse(&print(p)) == p`.
pub fn print(p: &Poly) -> String {
    p.to_string()
}

/// Unbalanced parentheses are reported before anything else.
fn check_balance(toks: &[(Tok, usize)]) -> Result<(), ParseError> {
    let mut open = Vec::new();
    for (t, at) in toks {
        match t {
            Tok::LParen => open.push(*at),
            Tok::RParen if open.pop().is_none() => return Err(syntax(*at, "unbalanced `)`")),
            _ => {}
        }
    }
    match open.last() {
        Some(&at) => Err(syntax(at, "unclosed `(`")),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

fn syntax(position: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { position, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().unwrap()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    depth: usize,
    universe: Option<&'a [Var]>,
}

impl<'a> Parser<'a> {
    fn new(text: &str, universe: Option<&'a [Var]>) -> Result<Self, ParseError> {
        let toks = lex(text)?;
        check_balance(&toks)?;
        Ok(Parser { toks, pos: 0, depth: 0, universe })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn parse_all(mut self) -> Result<Poly, ParseError> {
        if *self.peek() == Tok::End {
            return Err(syntax(0, "empty input"));
        }
        let p = self.expr()?;
        match self.peek() {
            Tok::End => Ok(p),
            Tok::RParen => Err(syntax(self.offset(), "unbalanced `)`")),
            _ => Err(syntax(self.offset(), "expected an operator")),
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(syntax(self.offset(), "expression nested too deeply"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if *self.peek() == Tok::Minus {
            self.enter()?;
            self.bump();
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(-inner);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump().0 {
            Tok::Int(n) => {
                let unit_monomial = base.num_terms() == 1 && base.leading_coefficient().abs().is_one();
                let cap = if unit_monomial { MAX_EXPONENT } else { MAX_EXPANDED_EXPONENT };
                let e = n.to_u32().filter(|&e| e <= cap).ok_or_else(|| syntax(at, "exponent too large"))?;
                if base.num_terms() > 1 && expansion_size(&base, e) > MAX_EXPANDED_TERMS {
                    return Err(syntax(at, "power too large to expand"));
                }
                Ok(base.pow(e))
            }
            Tok::Minus if matches!(self.peek(), Tok::Int(_)) => {
                Err(ParseError::ExponentNegative { position: at })
            }
            _ => Err(syntax(at, "exponent must be a non-negative integer literal")),
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Int(n) => {
                if *self.peek() != Tok::Slash {
                    return Ok(Poly::constant(BigRational::from_integer(n)));
                }
                self.bump();
                let den_at = self.offset();
                match self.bump().0 {
                    Tok::Int(d) if d.is_zero() => Err(syntax(den_at, "zero denominator")),
                    Tok::Int(d) => Ok(Poly::constant(BigRational::new(n, d))),
                    _ => Err(syntax(den_at, "expected an integer denominator")),
                }
            }
            Tok::Ident(name) => {
                let v = Var::new(&name);
                if let Some(universe) = self.universe {
                    if !universe.contains(&v) {
                        return Err(ParseError::UndeclaredVariable { name, position: at });
                    }
                }
                Ok(Poly::var(v))
            }
            Tok::LParen => {
                self.enter()?;
                let inner = self.expr()?;
                self.depth -= 1;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (_, pos) => Err(syntax(pos, "unbalanced `(`")),
                }
            }
            Tok::End => Err(syntax(at, "unexpected end of input")),
            _ => Err(syntax(at, "expected a number, variable or `(`")),
        }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (v, e) in m.iter() {
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expands_products() {
        let p = parse("(2*y - x)*(2*y - x - 1)").unwrap();
        assert_eq!(p.to_string(), "4*y^2 - 4*x*y + x^2 - 2*y + x");
    }

    #[test]
    fn zero_and_simple_terms() {
        assert!(parse("0").unwrap().is_zero());
        assert_eq!(parse("y^2 - x^3 - v").unwrap().num_terms(), 3);
        assert_eq!(print(&Poly::zero()), "0");
        assert_eq!(print(&parse("y^2-x^2").unwrap()), "y^2 - x^2");
    }

    #[test]
    fn rational_literals_and_unary_minus() {
        assert_eq!(print(&parse("7/2*x - 4/8").unwrap()), "7/2*x - 1/2");
        assert_eq!(parse("-x^2").unwrap(), -parse("x^2").unwrap());
        assert_eq!(parse("--x").unwrap(), parse("x").unwrap());
        assert_eq!(print(&parse("-3/4*a1*y + 2").unwrap()), "-3/4*y*a1 + 2");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse("2x").unwrap_err().position(), 1);
        assert_eq!(parse("x^-2"), Err(ParseError::ExponentNegative { position: 2 }));
        assert!(matches!(parse("(x + 1"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("x + 1)"), Err(ParseError::Syntax { position: 5, .. })));
        assert!(matches!(parse("x^y"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("x/2"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("1/0"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse(""), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("x $ y"), Err(ParseError::Syntax { position: 2, .. })));
    }

    #[test]
    fn universe_is_enforced() {
        let xy = [Var::new("x"), Var::new("y")];
        assert!(parse_in("x*y - 1", &xy).is_ok());
        assert_eq!(
            parse_in("x + v", &xy),
            Err(ParseError::UndeclaredVariable { name: "v".into(), position: 4 })
        );
        let src = PolySource::with_universe("y - t", xy.to_vec());
        assert!(src.parse().is_err());
    }

    #[test]
    fn deep_nesting_is_rejected_not_overflowed() {
        let deep = "(".repeat(10_000) + "x" + &")".repeat(10_000);
        assert!(parse(&deep).is_err());
        let minus = "-".repeat(10_000) + "x";
        assert!(parse(&minus).is_err());
    }
}
