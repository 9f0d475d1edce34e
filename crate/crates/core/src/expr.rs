//! Element expressions.
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := factor (["*"] factor)*        -- "*" may be dropped after an integer
//! factor := atom ("^" UINT)*
//! atom   := INT | "x" | "n" | "t" | "t_" UINT | "t_{" UINT "," UINT "}"
//!         | ("res" | "tr" | "N" | "conj") "(" expr ")" | "(" expr ")"
//! ```
//!
//! `x` is the generator (or the bound element), `t = tr(1)`, `n` is the
//! norm of the underlying generator (`N(res x)` for a fixed one),
//! `t_i = tr(xⁱ)` and `t_{i,j} = tr(xⁱ·conj(x)ʲ)`. Every normal form the
//! free functors print parses back to the same element.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::functor::{GreenFunctor, Level, NormFn, TambaraFunctor, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Res,
    Tr,
    Norm,
    Conj,
}

impl fmt::Display for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Func::Res => "res",
            Func::Tr => "tr",
            Func::Norm => "N",
            Func::Conj => "conj",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigInt),
    X,
    N,
    T,
    /// `t_i`
    TrPow(u32),
    /// `t_{i,j}`
    TrMono(u32, u32),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Apply(Func, Box<Expr>),
}

/// A node together with the byte offset where it starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("level error at byte {offset}: `{op}` {message}")]
    Level { offset: usize, op: String, message: String },
    #[error("at byte {offset}: {message}")]
    Capability { offset: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    TrPow(u32),
    TrMono(u32, u32),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn syntax(offset: usize, message: impl Into<String>) -> ExprError {
    ExprError::Syntax { offset, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| -> Option<(String, usize)> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        (*i > start).then(|| (text[start..*i].to_string(), start))
    };
    let small = |s: &str, at: usize| s.parse::<u32>().map_err(|_| syntax(at, format!("`{s}` is too large")));
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((Tok::Plus, start)),
            b'-' => out.push((Tok::Minus, start)),
            b'*' => out.push((Tok::Star, start)),
            b'^' => out.push((Tok::Caret, start)),
            b'(' => out.push((Tok::LParen, start)),
            b')' => out.push((Tok::RParen, start)),
            b'0'..=b'9' => {
                let (s, _) = digits(&mut i).expect("at a digit");
                out.push((Tok::Int(s.parse().expect("digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let word = &text[start..i];
                if word == "t" && bytes.get(i) == Some(&b'_') {
                    i += 1;
                    if bytes.get(i) == Some(&b'{') {
                        i += 1;
                        let (a, at) = digits(&mut i).ok_or_else(|| syntax(i, "expected an index"))?;
                        if bytes.get(i) != Some(&b',') {
                            return Err(syntax(i, "expected `,`"));
                        }
                        i += 1;
                        let (b, bt) = digits(&mut i).ok_or_else(|| syntax(i, "expected an index"))?;
                        if bytes.get(i) != Some(&b'}') {
                            return Err(syntax(i, "expected `}`"));
                        }
                        i += 1;
                        out.push((Tok::TrMono(small(&a, at)?, small(&b, bt)?), start));
                    } else {
                        let (a, at) = digits(&mut i).ok_or_else(|| syntax(i, "expected an index after `t_`"))?;
                        out.push((Tok::TrPow(small(&a, at)?), start));
                    }
                } else {
                    out.push((Tok::Ident(word.to_string()), start));
                }
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        }
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
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

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ExprError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.offset(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = if *self.peek() == Tok::Minus {
            let (_, offset) = self.bump();
            let t = self.term()?;
            Expr { kind: ExprKind::Neg(Box::new(t)), offset }
        } else {
            self.term()?
        };
        loop {
            let make: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek() {
                Tok::Plus => ExprKind::Add,
                Tok::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let offset = lhs.offset;
            lhs = Expr { kind: make(Box::new(lhs), Box::new(rhs)), offset };
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::TrPow(_) | Tok::TrMono(..) | Tok::LParen)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        loop {
            let implicit = matches!(lhs.kind, ExprKind::Int(_)) && self.starts_atom();
            if *self.peek() == Tok::Star {
                self.bump();
            } else if !implicit {
                return Ok(lhs);
            }
            let rhs = self.factor()?;
            let offset = lhs.offset;
            lhs = Expr { kind: ExprKind::Mul(Box::new(lhs), Box::new(rhs)), offset };
        }
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let mut base = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let (tok, at) = self.bump();
            let Tok::Int(e) = tok else {
                return Err(syntax(at, "expected a non-negative integer exponent"));
            };
            let e: u32 = e.try_into().map_err(|_| syntax(at, "exponent is too large"))?;
            let offset = base.offset;
            base = Expr { kind: ExprKind::Pow(Box::new(base), e), offset };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let (tok, offset) = self.bump();
        let kind = match tok {
            Tok::Int(k) => ExprKind::Int(k),
            Tok::TrPow(i) => ExprKind::TrPow(i),
            Tok::TrMono(i, j) => ExprKind::TrMono(i, j),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok(Expr { kind: e.kind, offset });
            }
            Tok::Ident(name) => match name.as_str() {
                "x" => ExprKind::X,
                "n" => ExprKind::N,
                "t" => ExprKind::T,
                "res" | "tr" | "N" | "conj" => {
                    let func = match name.as_str() {
                        "res" => Func::Res,
                        "tr" => Func::Tr,
                        "N" => Func::Norm,
                        _ => Func::Conj,
                    };
                    self.expect(Tok::LParen, &format!("`(` after `{name}`"))?;
                    let arg = self.expr()?;
                    self.expect(Tok::RParen, "`)`")?;
                    ExprKind::Apply(func, Box::new(arg))
                }
                _ => return Err(syntax(offset, format!("unknown name `{name}`"))),
            },
            Tok::End => return Err(syntax(offset, "unexpected end of input")),
            _ => return Err(syntax(offset, "expected a term")),
        };
        Ok(Expr { kind, offset })
    }
}

/// Parse an expression. Levels are not checked here.
pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        _ => Err(syntax(p.offset(), "unexpected trailing input")),
    }
}

fn level_error(e: &Expr, op: &str, message: impl Into<String>) -> ExprError {
    ExprError::Level { offset: e.offset, op: op.into(), message: message.into() }
}

/// The operator name of a node that only exists at one level.
fn level_of(e: &Expr, generator: Level) -> Option<(Level, String)> {
    match &e.kind {
        ExprKind::X => Some((generator, "x".into())),
        ExprKind::N => Some((Level::Fixed, "n".into())),
        ExprKind::T => Some((Level::Fixed, "t".into())),
        ExprKind::TrPow(i) => Some((Level::Fixed, format!("t_{i}"))),
        ExprKind::TrMono(i, j) => Some((Level::Fixed, format!("t_{{{i},{j}}}"))),
        ExprKind::Apply(Func::Res, _) | ExprKind::Apply(Func::Conj, _) => {
            let ExprKind::Apply(f, _) = &e.kind else { unreachable!() };
            Some((Level::Underlying, f.to_string()))
        }
        ExprKind::Apply(f, _) => Some((Level::Fixed, f.to_string())),
        _ => None,
    }
}

/// Check that `e` can be read at `level` when the generator lives at
/// `generator`. Integer literals fit either level, and a fixed-level
/// subexpression where an underlying one is expected is restricted.
pub fn check_level(e: &Expr, level: Level, generator: Level) -> Result<(), ExprError> {
    if let Some((own, op)) = level_of(e, generator) {
        if own != level {
            if own == Level::Fixed {
                return check_level(e, Level::Fixed, generator);
            }
            return Err(level_error(e, &op, "is underlying-level but a fixed-level element is expected"));
        }
    }
    match &e.kind {
        ExprKind::Int(_) | ExprKind::X | ExprKind::N | ExprKind::T | ExprKind::TrPow(_) | ExprKind::TrMono(..) => {
            Ok(())
        }
        ExprKind::Neg(a) | ExprKind::Pow(a, _) => check_level(a, level, generator),
        ExprKind::Add(a, b) | ExprKind::Sub(a, b) | ExprKind::Mul(a, b) => {
            check_level(a, level, generator)?;
            check_level(b, level, generator)
        }
        ExprKind::Apply(f, a) => {
            check_level(a, if *f == Func::Res { Level::Fixed } else { Level::Underlying }, generator)
        }
    }
}

/// What an expression is evaluated against.
pub struct Env<'a, R: GreenFunctor + ?Sized> {
    pub functor: &'a R,
    /// The value of `x`, if any.
    pub x: Option<Value<R::Fixed, R::Under>>,
    /// The norm, for Tambara functors.
    pub norm: Option<NormFn<'a, R>>,
}

impl<'a, R: GreenFunctor + ?Sized> Env<'a, R> {
    pub fn green(functor: &'a R, x: Option<Value<R::Fixed, R::Under>>) -> Self {
        Env { functor, x, norm: None }
    }

    pub fn generator_level(&self) -> Level {
        self.x.as_ref().map_or(Level::Fixed, Value::level)
    }
}

impl<'a, R: TambaraFunctor + ?Sized> Env<'a, R> {
    pub fn tambara(
        functor: &'a R,
        x: Option<Value<R::Fixed, R::Under>>,
        norm: &'a dyn Fn(&R::Under) -> R::Fixed,
    ) -> Self {
        Env { functor, x, norm: Some(norm) }
    }
}

fn capability(e: &Expr, message: impl Into<String>) -> ExprError {
    ExprError::Capability { offset: e.offset, message: message.into() }
}

impl<R: GreenFunctor + ?Sized> Env<'_, R> {
    fn norm_of(&self, e: &Expr, u: &R::Under) -> Result<R::Fixed, ExprError> {
        let norm = self.norm.ok_or_else(|| capability(e, "N needs a Tambara functor; this one has no norm"))?;
        Ok(norm(u))
    }

    fn x(&self, e: &Expr) -> Result<&Value<R::Fixed, R::Under>, ExprError> {
        self.x.as_ref().ok_or_else(|| capability(e, "`x` is not bound"))
    }

    /// `x` as an underlying element: itself, or its restriction.
    fn x_under(&self, e: &Expr) -> Result<R::Under, ExprError> {
        Ok(match self.x(e)? {
            Value::Fixed(a) => self.functor.res(a),
            Value::Underlying(u) => u.clone(),
        })
    }

    fn fixed(&self, e: &Expr) -> Result<R::Fixed, ExprError> {
        let r = self.functor;
        Ok(match &e.kind {
            ExprKind::Int(k) => r.fixed_int(k),
            ExprKind::X => match self.x(e)? {
                Value::Fixed(a) => a.clone(),
                Value::Underlying(_) => {
                    return Err(level_error(e, "x", "is underlying-level but a fixed-level element is expected"))
                }
            },
            ExprKind::N => {
                let u = self.x_under(e)?;
                self.norm_of(e, &u)?
            }
            ExprKind::T => r.t(),
            ExprKind::TrPow(i) => r.tr(&r.under_pow(&self.x_under(e)?, *i)),
            ExprKind::TrMono(i, j) => {
                let u = self.x_under(e)?;
                r.tr(&r.under_mul(&r.under_pow(&u, *i), &r.under_pow(&r.conj(&u), *j)))
            }
            ExprKind::Neg(a) => r.fixed_neg(&self.fixed(a)?),
            ExprKind::Add(a, b) => r.fixed_add(&self.fixed(a)?, &self.fixed(b)?),
            ExprKind::Sub(a, b) => r.fixed_sub(&self.fixed(a)?, &self.fixed(b)?),
            ExprKind::Mul(a, b) => r.fixed_mul(&self.fixed(a)?, &self.fixed(b)?),
            ExprKind::Pow(a, k) => r.fixed_pow(&self.fixed(a)?, *k),
            ExprKind::Apply(Func::Tr, a) => r.tr(&self.under(a)?),
            ExprKind::Apply(Func::Norm, a) => {
                let u = self.under(a)?;
                self.norm_of(e, &u)?
            }
            ExprKind::Apply(f, _) => {
                return Err(level_error(e, &f.to_string(), "is underlying-level but a fixed-level element is expected"))
            }
        })
    }

    fn under(&self, e: &Expr) -> Result<R::Under, ExprError> {
        let r = self.functor;
        Ok(match &e.kind {
            ExprKind::Int(k) => r.under_int(k),
            ExprKind::X => self.x_under(e)?,
            ExprKind::Neg(a) => r.under_neg(&self.under(a)?),
            ExprKind::Add(a, b) => r.under_add(&self.under(a)?, &self.under(b)?),
            ExprKind::Sub(a, b) => r.under_sub(&self.under(a)?, &self.under(b)?),
            ExprKind::Mul(a, b) => r.under_mul(&self.under(a)?, &self.under(b)?),
            ExprKind::Pow(a, k) => r.under_pow(&self.under(a)?, *k),
            ExprKind::Apply(Func::Res, a) => r.res(&self.fixed(a)?),
            ExprKind::Apply(Func::Conj, a) => r.conj(&self.under(a)?),
            _ => r.res(&self.fixed(e)?),
        })
    }

    /// Level-check and evaluate `e` at `level`.
    pub fn eval(&self, e: &Expr, level: Level) -> Result<Value<R::Fixed, R::Under>, ExprError> {
        check_level(e, level, self.generator_level())?;
        Ok(match level {
            Level::Fixed => Value::Fixed(self.fixed(e)?),
            Level::Underlying => Value::Underlying(self.under(e)?),
        })
    }

    /// Evaluate and render.
    pub fn eval_to_string(&self, e: &Expr, level: Level) -> Result<String, ExprError> {
        Ok(match self.eval(e, level)? {
            Value::Fixed(a) => self.functor.show_fixed(&a),
            Value::Underlying(u) => self.functor.show_under(&u),
        })
    }
}
