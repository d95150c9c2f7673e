//! Recursive-descent parser for rational expressions.
//!
//! Grammar (`^` binds tightest and is right-associative, then unary minus,
//! then `* /`, then `+ -`):
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := ('-' | '+') unary | power
//! power    := atom ('^' exponent)?
//! exponent := '-' exponent | atom ('^' exponent)?
//! atom     := INT | IDENT | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::rational::Q;
use crate::algebra::{RatFunc, Var};

/// Variables accepted in input expressions.
pub const INPUT_VARS: [Var; 5] = [Var::Z, Var::W, Var::Wp, Var::T, Var::Lambda];

const MAX_EXPONENT: i64 = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Q),
    Var(Var),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown identifier '{name}' at line {line}, column {col}")]
    UnknownIdentifier { name: String, line: usize, col: usize },
    #[error("non-integer exponent at line {line}, column {col}")]
    NonIntegerExponent { line: usize, col: usize },
    #[error("exponent out of range at line {line}, column {col}")]
    ExponentTooLarge { line: usize, col: usize },
}

impl ParseError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, col, .. }
            | ParseError::UnknownIdentifier { line, col, .. }
            | ParseError::NonIntegerExponent { line, col }
            | ParseError::ExponentTooLarge { line, col } => (*line, *col),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str, line0: usize, col0: usize) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (line0, col0);
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token { tok: Tok::Int(s.parse().unwrap()), line: tl, col: tc });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token { tok: Tok::Ident(s), line: tl, col: tc });
            continue;
        }
        if "+-*/^()".contains(c) {
            out.push(Token { tok: Tok::Sym(c), line: tl, col: tc });
            col += 1;
            i += 1;
            continue;
        }
        return Err(ParseError::Syntax { line: tl, col: tc, msg: format!("unexpected character '{c}'") });
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, msg: &str) -> Result<T, ParseError> {
        let t = self.peek();
        let found = match &t.tok {
            Tok::Int(n) => format!("'{n}'"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::End => "end of input".to_string(),
        };
        Err(ParseError::Syntax { line: t.line, col: t.col, msg: format!("{msg}, found {found}") })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Sym('^') {
            return Ok(base);
        }
        let caret = self.bump();
        let e = self.exponent()?;
        let value = e.constant().filter(|v| v.is_integer()).ok_or(ParseError::NonIntegerExponent {
            line: caret.line,
            col: caret.col,
        })?;
        let n = value
            .to_integer()
            .to_i64()
            .filter(|n| n.abs() <= MAX_EXPONENT)
            .ok_or(ParseError::ExponentTooLarge { line: caret.line, col: caret.col })?;
        Ok(Expr::Pow(Box::new(base), n))
    }

    fn exponent(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.exponent()?)));
        }
        self.power()
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Num(Q::from_integer(n)))
            }
            Tok::Ident(name) => {
                self.bump();
                match Var::from_name(&name).filter(|v| INPUT_VARS.contains(v)) {
                    Some(v) => Ok(Expr::Var(v)),
                    None => Err(ParseError::UnknownIdentifier { name, line: t.line, col: t.col }),
                }
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected ')'");
                }
                Ok(e)
            }
            _ => self.error("expected a number, variable or '('"),
        }
    }
}

/// Parses an expression; positions in errors are 1-based.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    parse_expr_at(text, 1, 1)
}

/// Like [`parse_expr`], reporting positions relative to `(line, col)`.
pub fn parse_expr_at(text: &str, line: usize, col: usize) -> Result<Expr, ParseError> {
    let toks = lex(text, line, col)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.peek().tok != Tok::End {
        return p.error("unexpected token");
    }
    Ok(e)
}

impl Expr {
    /// Value when the expression is a rational constant.
    pub fn constant(&self) -> Option<Q> {
        Some(match self {
            Expr::Num(q) => q.clone(),
            Expr::Var(_) => return None,
            Expr::Add(a, b) => a.constant()? + b.constant()?,
            Expr::Sub(a, b) => a.constant()? - b.constant()?,
            Expr::Mul(a, b) => a.constant()? * b.constant()?,
            Expr::Div(a, b) => {
                let d = b.constant()?;
                if d.is_zero() {
                    return None;
                }
                a.constant()? / d
            }
            Expr::Neg(a) => -a.constant()?,
            Expr::Pow(a, n) => {
                let base = a.constant()?;
                if base.is_zero() && *n < 0 {
                    return None;
                }
                let p = num_traits::pow(base.clone(), n.unsigned_abs() as usize);
                if *n < 0 {
                    Q::one() / p
                } else {
                    p
                }
            }
        })
    }

    pub fn to_ratfunc(&self) -> Result<RatFunc, EvalError> {
        Ok(match self {
            Expr::Num(q) => RatFunc::constant(q.clone()),
            Expr::Var(v) => RatFunc::var(*v),
            Expr::Add(a, b) => &a.to_ratfunc()? + &b.to_ratfunc()?,
            Expr::Sub(a, b) => &a.to_ratfunc()? - &b.to_ratfunc()?,
            Expr::Mul(a, b) => &a.to_ratfunc()? * &b.to_ratfunc()?,
            Expr::Div(a, b) => {
                let d = b.to_ratfunc()?;
                let inv = d.inv().ok_or(EvalError::DivisionByZero)?;
                &a.to_ratfunc()? * &inv
            }
            Expr::Neg(a) => -a.to_ratfunc()?,
            Expr::Pow(a, n) => {
                let base = a.to_ratfunc()?;
                if base.is_zero() && *n < 0 {
                    return Err(EvalError::DivisionByZero);
                }
                base.pow(*n as i32)
            }
        })
    }

    pub fn is_negative_literal(&self) -> bool {
        matches!(self, Expr::Num(q) if q.is_negative())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Parses and evaluates to a canonical rational function.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc, ExprError> {
    Ok(parse_expr(text)?.to_ratfunc()?)
}
