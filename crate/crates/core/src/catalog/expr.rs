//! Small expression language for table entries and input documents.
//!
//! Expressions are rational functions of named parameters, optionally linear
//! in basis symbols (`e1`, `E21`, `e12`, ... as resolved by the caller).
//! Juxtaposition multiplies: `b mu e1` is `b * mu * e1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Call(String, Box<Expr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
}

impl fmt::Display for Cmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Cmp::Lt => "<",
            Cmp::Le => "<=",
            Cmp::Gt => ">",
            Cmp::Ge => ">=",
            Cmp::Eq => "=",
            Cmp::Ne => "!=",
        };
        f.write_str(s)
    }
}

/// A chain `a < b <= c` or a boolean combination of chains.
#[derive(Clone, Debug, PartialEq)]
pub enum Cond {
    Chain(Vec<Expr>, Vec<Cmp>),
    And(Vec<Cond>),
    Or(Vec<Cond>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Op(char),
    Cmp(Cmp),
    And,
    Or,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Expression(msg.into())
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(parse_rational(&text).ok_or_else(|| err(format!("bad number `{text}`")))?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            out.push(match word.as_str() {
                "and" => Tok::And,
                "or" => Tok::Or,
                _ => Tok::Ident(word),
            });
        } else {
            let next = chars.get(i + 1).copied();
            let (tok, len) = match (c, next) {
                ('<', Some('=')) => (Tok::Cmp(Cmp::Le), 2),
                ('>', Some('=')) => (Tok::Cmp(Cmp::Ge), 2),
                ('!', Some('=')) => (Tok::Cmp(Cmp::Ne), 2),
                ('=', Some('=')) => (Tok::Cmp(Cmp::Eq), 2),
                ('<', _) => (Tok::Cmp(Cmp::Lt), 1),
                ('>', _) => (Tok::Cmp(Cmp::Gt), 1),
                ('=', _) => (Tok::Cmp(Cmp::Eq), 1),
                ('≠', _) => (Tok::Cmp(Cmp::Ne), 1),
                ('≤', _) => (Tok::Cmp(Cmp::Le), 1),
                ('≥', _) => (Tok::Cmp(Cmp::Ge), 1),
                ('+' | '-' | '*' | '/' | '^' | '(' | ')', _) => (Tok::Op(c), 1),
                _ => return Err(err(format!("unexpected character `{c}`"))),
            };
            out.push(tok);
            i += len;
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn eat_op(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_op('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat_op('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat_op('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat_op('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if self.starts_factor() {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_op('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat_op('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat_op('^') {
            let neg = self.eat_op('-');
            match self.bump() {
                Some(Tok::Num(n)) if n.is_integer() => {
                    let k: i64 = n.numer().try_into().map_err(|_| err("exponent too large"))?;
                    Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }))
                }
                _ => Err(err("exponent must be an integer literal")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Expr::Num(n)),
            Some(Tok::Ident(name)) => {
                if self.peek() == Some(&Tok::Op('(')) && matches!(name.as_str(), "sqrt" | "abs") {
                    self.pos += 1;
                    let inner = self.expr()?;
                    if !self.eat_op(')') {
                        return Err(err("missing `)`"));
                    }
                    Ok(Expr::Call(name, Box::new(inner)))
                } else {
                    Ok(Expr::Var(name))
                }
            }
            Some(Tok::Op('(')) => {
                let inner = self.expr()?;
                if !self.eat_op(')') {
                    return Err(err("missing `)`"));
                }
                Ok(inner)
            }
            Some(t) => Err(err(format!("unexpected token {t:?}"))),
            None => Err(err("unexpected end of expression")),
        }
    }

    fn cond(&mut self) -> Result<Cond> {
        let mut parts = vec![self.conj()?];
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            parts.push(self.conj()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Cond::Or(parts) })
    }

    fn conj(&mut self) -> Result<Cond> {
        let mut parts = vec![self.chain()?];
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            parts.push(self.chain()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Cond::And(parts) })
    }

    fn chain(&mut self) -> Result<Cond> {
        let mut exprs = vec![self.expr()?];
        let mut ops = Vec::new();
        while let Some(Tok::Cmp(c)) = self.peek() {
            let c = *c;
            self.pos += 1;
            ops.push(c);
            exprs.push(self.expr()?);
        }
        if ops.is_empty() {
            return Err(err("condition needs a comparison"));
        }
        Ok(Cond::Chain(exprs, ops))
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(err(format!("trailing token {t:?}"))),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
    };
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_cond(s: &str) -> Result<Cond> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
    };
    let c = p.cond()?;
    p.finish()?;
    Ok(c)
}

/// A scalar, or a vector in the span of the basis symbols.
#[derive(Clone, Debug, PartialEq)]
pub enum Value<F> {
    Scalar(F),
    Vector(Vec<F>),
}

impl<F: Scalar> Value<F> {
    pub fn scalar(self) -> Result<F> {
        match self {
            Value::Scalar(x) => Ok(x),
            Value::Vector(_) => Err(err("expected a scalar, found a vector")),
        }
    }

    /// A vector of length `n`; the scalar `0` is accepted as the zero vector.
    pub fn vector(self, n: usize) -> Result<Vec<F>> {
        match self {
            Value::Vector(v) => Ok(v),
            Value::Scalar(x) if x.is_zero() => Ok(vec![F::zero(); n]),
            Value::Scalar(_) => Err(err("expected a combination of basis vectors")),
        }
    }

    fn map(self, f: impl Fn(F) -> F) -> Value<F> {
        match self {
            Value::Scalar(x) => Value::Scalar(f(x)),
            Value::Vector(v) => Value::Vector(v.into_iter().map(f).collect()),
        }
    }
}

fn combine<F: Scalar>(a: Value<F>, b: Value<F>, f: impl Fn(F, F) -> F) -> Result<Value<F>> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(f(x, y))),
        (Value::Vector(u), Value::Vector(v)) if u.len() == v.len() => {
            Ok(Value::Vector(u.into_iter().zip(v).map(|(x, y)| f(x, y)).collect()))
        }
        (Value::Vector(u), Value::Scalar(y)) if y.is_zero() => {
            Ok(Value::Vector(u.into_iter().map(|x| f(x, F::zero())).collect()))
        }
        (Value::Scalar(x), Value::Vector(v)) if x.is_zero() => {
            Ok(Value::Vector(v.into_iter().map(|y| f(F::zero(), y)).collect()))
        }
        _ => Err(err("cannot add a scalar and a vector")),
    }
}

/// Evaluates `e`, resolving identifiers through `env`.
pub fn eval<F: Scalar>(e: &Expr, env: &dyn Fn(&str) -> Option<Value<F>>) -> Result<Value<F>> {
    Ok(match e {
        Expr::Num(q) => Value::Scalar(F::from_rational(q)),
        Expr::Var(name) => env(name).ok_or_else(|| err(format!("unknown symbol `{name}`")))?,
        Expr::Neg(a) => eval(a, env)?.map(|x| -x),
        Expr::Add(a, b) => combine(eval(a, env)?, eval(b, env)?, |x, y| x + y)?,
        Expr::Sub(a, b) => combine(eval(a, env)?, eval(b, env)?, |x, y| x - y)?,
        Expr::Mul(a, b) => match (eval(a, env)?, eval(b, env)?) {
            (Value::Scalar(x), v) | (v, Value::Scalar(x)) => v.map(|y| x.clone() * y),
            _ => return Err(err("product of two vectors")),
        },
        Expr::Div(a, b) => {
            let d = eval(b, env)?.scalar()?;
            if d.is_zero() {
                return Err(err("division by zero"));
            }
            eval(a, env)?.map(|y| y / d.clone())
        }
        Expr::Pow(a, k) => {
            let x = eval(a, env)?.scalar()?;
            if *k < 0 && x.is_zero() {
                return Err(err("division by zero"));
            }
            let mut acc = F::one();
            for _ in 0..k.unsigned_abs() {
                acc = acc * x.clone();
            }
            Value::Scalar(if *k < 0 { F::one() / acc } else { acc })
        }
        Expr::Call(name, a) => {
            let x = eval(a, env)?.scalar()?;
            Value::Scalar(match name.as_str() {
                "abs" => x.abs(),
                _ => x.sqrt().ok_or_else(|| err(format!("sqrt({}) is not in the field", x.to_report())))?,
            })
        }
    })
}

pub fn eval_scalar<F: Scalar>(e: &Expr, env: &dyn Fn(&str) -> Option<F>) -> Result<F> {
    eval(e, &|name| env(name).map(Value::Scalar))?.scalar()
}

fn compare<F: Scalar>(a: &F, op: Cmp, b: &F) -> bool {
    let d = b.clone() - a.clone();
    match op {
        Cmp::Lt => d.is_positive(),
        Cmp::Le => !d.is_negative(),
        Cmp::Gt => d.is_negative(),
        Cmp::Ge => !d.is_positive(),
        Cmp::Eq => d.is_zero(),
        Cmp::Ne => !d.is_zero(),
    }
}

pub fn eval_cond<F: Scalar>(c: &Cond, env: &dyn Fn(&str) -> Option<F>) -> Result<bool> {
    Ok(match c {
        Cond::Chain(exprs, ops) => {
            let vals = exprs.iter().map(|e| eval_scalar(e, env)).collect::<Result<Vec<F>>>()?;
            ops.iter().enumerate().all(|(i, op)| compare(&vals[i], *op, &vals[i + 1]))
        }
        Cond::And(parts) => {
            for p in parts {
                if !eval_cond(p, env)? {
                    return Ok(false);
                }
            }
            true
        }
        Cond::Or(parts) => {
            for p in parts {
                if eval_cond(p, env)? {
                    return Ok(true);
                }
            }
            false
        }
    })
}

/// Identifiers appearing in `e`.
pub fn symbols(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Num(_) => {}
        Expr::Var(v) => {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        Expr::Neg(a) | Expr::Pow(a, _) | Expr::Call(_, a) => symbols(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            symbols(a, out);
            symbols(b, out);
        }
    }
}

/// `e<k>` for `1 ≤ k ≤ n`, as a 0-based index.
pub fn basis_index(name: &str, prefix: char, n: usize) -> Option<usize> {
    let digits = name.strip_prefix(prefix)?;
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    let k: usize = digits.parse().ok()?;
    (1..=n).contains(&k).then(|| k - 1)
}

/// `e<i><j>` (single digits) as a 0-based pair.
pub fn pair_index(name: &str, prefix: char, n: usize) -> Option<(usize, usize)> {
    let digits: Vec<u32> = name.strip_prefix(prefix)?.chars().map(|c| c.to_digit(10)).collect::<Option<_>>()?;
    match digits[..] {
        [i, j] if i >= 1 && j >= 1 && (i as usize) <= n && (j as usize) <= n => Some((i as usize - 1, j as usize - 1)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Rational;

    fn q(n: i64, d: i64) -> Q {
        Q::ratio(n, d)
    }

    fn env(name: &str) -> Option<Value<Q>> {
        match name {
            "a" => Some(Value::Scalar(q(2, 1))),
            "b" => Some(Value::Scalar(q(-3, 1))),
            "mu" => Some(Value::Scalar(q(1, 2))),
            _ => basis_index(name, 'e', 3).map(|k| {
                let mut v = vec![q(0, 1); 3];
                v[k] = q(1, 1);
                Value::Vector(v)
            }),
        }
    }

    fn ev(s: &str) -> Value<Q> {
        eval(&parse_expr(s).unwrap(), &env).unwrap()
    }

    #[test]
    fn arithmetic_and_precedence() {
        assert_eq!(ev("1 + 2*3"), Value::Scalar(q(7, 1)));
        assert_eq!(ev("-1/2"), Value::Scalar(q(-1, 2)));
        assert_eq!(ev("a^-1 b"), Value::Scalar(q(-3, 2)));
        assert_eq!(ev("(a + b)^2"), Value::Scalar(q(1, 1)));
        assert_eq!(ev("2 a mu"), Value::Scalar(q(2, 1)));
        assert_eq!(ev("0.25"), Value::Scalar(q(1, 4)));
        assert_eq!(ev("sqrt(9/4)"), Value::Scalar(q(3, 2)));
        assert_eq!(ev("abs(b)"), Value::Scalar(q(3, 1)));
    }

    #[test]
    fn vectors() {
        assert_eq!(ev("1 e1 + -1/2 e3"), Value::Vector(vec![q(1, 1), q(0, 1), q(-1, 2)]));
        assert_eq!(ev("b mu e1 - a e3"), Value::Vector(vec![q(-3, 2), q(0, 1), q(-2, 1)]));
        assert_eq!(ev("-(a + b) e2"), Value::Vector(vec![q(0, 1), q(1, 1), q(0, 1)]));
        assert!(eval(&parse_expr("e1 e2").unwrap(), &env).is_err());
        assert!(eval(&parse_expr("1 + e2").unwrap(), &env).is_err());
    }

    #[test]
    fn errors() {
        assert!(parse_expr("1 +").is_err());
        assert!(parse_expr("(a").is_err());
        assert!(eval(&parse_expr("a / (b + 3)").unwrap(), &env).is_err());
        assert!(eval(&parse_expr("sqrt(2)").unwrap(), &env).is_err());
        assert!(eval(&parse_expr("zeta").unwrap(), &env).is_err());
    }

    #[test]
    fn conditions() {
        let s = |name: &str| env(name).and_then(|v| v.scalar().ok());
        let c = |t: &str| eval_cond(&parse_cond(t).unwrap(), &s).unwrap();
        assert!(c("a != 0"));
        assert!(c("0 < mu < 1"));
        assert!(!c("0 < mu < 1/2"));
        assert!(c("b = 1 or a >= 2"));
        assert!(!c("a > 0 and b > 0"));
        assert!(c("mu*a > b^2 - 9"));
        assert!(c("a ≠ 0"));
    }

    #[test]
    fn basis_symbols() {
        assert_eq!(basis_index("e3", 'e', 3), Some(2));
        assert_eq!(basis_index("e4", 'e', 3), None);
        assert_eq!(basis_index("e", 'e', 3), None);
        assert_eq!(pair_index("E21", 'E', 4), Some((1, 0)));
        assert_eq!(pair_index("e123", 'e', 4), None);
    }
}
