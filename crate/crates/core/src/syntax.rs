//! Chart files, the expression language, and the canonical printer.
//!
//! Expressions use `+ - * / ^`, integer literals, coordinate names,
//! `d(...)` for the de Rham differential and `@x` for the coordinate
//! field of `x`. `f ^ n` is a power when `f` is a function and `n` an
//! integer literal; otherwise `^` is the wedge product, as is `*` between
//! forms.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::chart::{Chart, Coordinate, Parity};
use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::form::{DiffMonomial, SuperForm};
use crate::poly::{Monomial, Poly};
use crate::rational::EvenRational;
use crate::scalar::{parse_scalar, Scalar, ScalarDisplay};
use crate::superfunction::{OddMonomial, SuperFunction};

/// Parses a chart file: one coordinate per line,
/// `name E|O weight [weight2] [base=p/q]`, with `#` comments.
pub fn parse_chart(text: &str) -> Result<Chart> {
    let mut coords = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    tokens.push((s + 1, &line[s..i]));
                    start = None;
                }
                _ => {}
            }
        }
        if tokens.is_empty() {
            continue;
        }
        let err = |col: usize, message: String| Error::Parse {
            line: ln + 1,
            column: col,
            message,
        };
        let scalar = |col: usize, t: &str| {
            parse_scalar(t).map_err(|e| match e {
                Error::Parse { message, .. } => err(col, message),
                other => other,
            })
        };
        if tokens.len() < 3 {
            return Err(err(1, "expected `name E|O weight [weight2] [base=p/q]`".into()));
        }
        let (c0, name) = tokens[0];
        if !is_identifier(name) {
            return Err(err(c0, format!("invalid coordinate name `{name}`")));
        }
        let parity = match tokens[1].1 {
            "E" => Parity::Even,
            "O" => Parity::Odd,
            p => return Err(err(tokens[1].0, format!("parity must be E or O, found `{p}`"))),
        };
        let mut coord = Coordinate::new(name, parity, scalar(tokens[2].0, tokens[2].1)?);
        let mut seen_base = false;
        for &(col, t) in &tokens[3..] {
            if let Some(b) = t.strip_prefix("base=") {
                if seen_base {
                    return Err(err(col, "base given twice".into()));
                }
                seen_base = true;
                coord = coord.with_base(scalar(col + 5, b)?);
            } else if coord.weight2.is_none() && !seen_base {
                coord = coord.with_weight2(scalar(col, t)?);
            } else {
                return Err(err(col, format!("unexpected `{t}`")));
            }
        }
        coords.push(coord);
    }
    Chart::new(coords)
}

pub fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A parsed expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Function(SuperFunction),
    Form(SuperForm),
    Field(VectorField),
}

impl Expr {
    /// Functions are forms of rank 0.
    pub fn into_form(self) -> Result<SuperForm> {
        match self {
            Expr::Function(f) => Ok(SuperForm::function(&f)),
            Expr::Form(w) => Ok(w),
            Expr::Field(_) => Err(Error::InvalidArgument("expected a form, found a vector field".into())),
        }
    }

    pub fn into_function(self) -> Result<SuperFunction> {
        match self {
            Expr::Function(f) => Ok(f),
            Expr::Form(w) if w.max_rank() == 0 => Ok(w.function_part()),
            _ => Err(Error::InvalidArgument("expected a function".into())),
        }
    }

    pub fn into_field(self) -> Result<VectorField> {
        match self {
            Expr::Field(x) => Ok(x),
            Expr::Function(f) if f.is_zero() => Ok(VectorField::zero(f.chart())),
            _ => Err(Error::InvalidArgument("expected a vector field".into())),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Function(g) => g.fmt(f),
            Expr::Form(w) => w.fmt(f),
            Expr::Field(x) => x.fmt(f),
        }
    }
}

/// An expression together with the simplification warnings it produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed {
    pub expr: Expr,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    At,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "{n}"),
            Tok::Ident(s) => f.write_str(s),
            Tok::Plus => f.write_str("+"),
            Tok::Minus => f.write_str("-"),
            Tok::Star => f.write_str("*"),
            Tok::Slash => f.write_str("/"),
            Tok::Caret => f.write_str("^"),
            Tok::At => f.write_str("@"),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                return Err(Error::Parse {
                    line: 1,
                    column: i + 1,
                    message: "decimals are not allowed, write p/q".into(),
                });
            }
            let digits: String = chars[s..i].iter().collect();
            out.push((col, Tok::Num(digits.parse().expect("digits"))));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((col, Tok::Ident(chars[s..i].iter().collect())));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '@' => Tok::At,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    column: col,
                    message: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((col, t));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    chart: &'a Chart,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    warnings: Vec<String>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: 1,
            column: self.col(),
            message: message.into(),
        })
    }

    fn at(&self, col: usize, e: Error) -> Error {
        match e {
            Error::Parse { .. } => e,
            other => Error::Parse {
                line: 1,
                column: col,
                message: other.to_string(),
            },
        }
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {t:?}"))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let col = self.col();
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = add(lhs, rhs, false).map_err(|e| self.at(col, e))?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = add(lhs, rhs, true).map_err(|e| self.at(col, e))?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let col = self.col();
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = product(lhs, rhs).map_err(|e| self.at(col, e))?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = divide(lhs, rhs).map_err(|e| self.at(col, e))?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            let v = self.unary()?;
            return Ok(negate(v));
        }
        self.power()
    }

    fn integer_exponent(&mut self) -> Option<i64> {
        let save = self.pos;
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        if let Some(Tok::Num(n)) = self.peek() {
            if let Ok(v) = i64::try_from(n.clone()) {
                self.pos += 1;
                return Some(if negative { -v } else { v });
            }
        }
        self.pos = save;
        None
    }

    fn power(&mut self) -> Result<Expr> {
        let mut lhs = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            let col = self.col();
            self.pos += 1;
            if let Expr::Function(f) = &lhs {
                if let Some(e) = self.integer_exponent() {
                    let p = f.pow(e).map_err(|err| self.at(col, err))?;
                    if e >= 2 && f.parity() == Some(Parity::Odd) && p.is_zero() {
                        self.warnings
                            .push(format!("column {col}: power of an odd function simplifies to 0"));
                    }
                    lhs = Expr::Function(p);
                    continue;
                }
            }
            let rhs = self.atom()?;
            lhs = product(lhs, rhs).map_err(|e| self.at(col, e))?;
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Expr> {
        let col = self.col();
        let Some(t) = self.peek().cloned() else {
            return self.err("unexpected end of expression");
        };
        self.pos += 1;
        match t {
            Tok::Num(n) => Ok(Expr::Function(SuperFunction::constant(self.chart, Scalar::from_integer(n)))),
            Tok::LParen => {
                let v = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(v)
            }
            Tok::At => match self.peek().cloned() {
                Some(Tok::Ident(name)) => {
                    self.pos += 1;
                    let i = self.chart.index_of(&name).map_err(|e| self.at(col + 1, e))?;
                    Ok(Expr::Field(VectorField::partial(self.chart, i)))
                }
                _ => self.err("expected a coordinate name after `@`"),
            },
            Tok::Ident(name) if name == "d" && self.peek() == Some(&Tok::LParen) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(Tok::RParen)?;
                let w = v.into_form().map_err(|e| self.at(col, e))?;
                Ok(Expr::Form(w.d()))
            }
            Tok::Ident(name) => {
                let f = self.chart.coord(&name).map_err(|e| self.at(col, e))?;
                Ok(Expr::Function(f))
            }
            other => {
                self.pos -= 1;
                self.err(format!("unexpected `{other}`"))
            }
        }
    }
}

fn negate(v: Expr) -> Expr {
    match v {
        Expr::Function(f) => Expr::Function(-f),
        Expr::Form(w) => Expr::Form(-w),
        Expr::Field(x) => Expr::Field(-x),
    }
}

fn add(a: Expr, b: Expr, subtract: bool) -> Result<Expr> {
    let b = if subtract { negate(b) } else { b };
    Ok(match (a, b) {
        (Expr::Function(f), Expr::Function(g)) => Expr::Function(&f + &g),
        (Expr::Field(x), Expr::Field(y)) => Expr::Field(x.checked_add(&y)?),
        (Expr::Field(x), Expr::Function(g)) | (Expr::Function(g), Expr::Field(x)) if g.is_zero() => {
            Expr::Field(x)
        }
        (Expr::Field(_), _) | (_, Expr::Field(_)) => {
            return Err(Error::InvalidArgument("cannot add a vector field and a form".into()))
        }
        (a, b) => Expr::Form(a.into_form()?.checked_add(&b.into_form()?)?),
    })
}

fn product(a: Expr, b: Expr) -> Result<Expr> {
    Ok(match (a, b) {
        (Expr::Function(f), Expr::Function(g)) => Expr::Function(f.checked_mul(&g)?),
        (Expr::Function(f), Expr::Field(x)) => Expr::Field(x.mul_left(&f)?),
        (Expr::Field(_), _) | (_, Expr::Field(_)) => {
            return Err(Error::InvalidArgument(
                "vector fields can only be multiplied by a function on the left".into(),
            ))
        }
        (a, b) => Expr::Form(a.into_form()?.wedge(&b.into_form()?)?),
    })
}

fn divide(a: Expr, b: Expr) -> Result<Expr> {
    let Expr::Function(g) = b else {
        return Err(Error::InvalidArgument("can only divide by a function".into()));
    };
    let inv = g.invert()?;
    Ok(match a {
        Expr::Function(f) => Expr::Function(f.checked_mul(&inv)?),
        Expr::Form(w) => Expr::Form(w.mul_right(&inv)?),
        Expr::Field(x) => Expr::Field(x.mul_left(&inv)?),
    })
}

/// Parses an expression over `chart`, keeping simplification warnings.
pub fn parse_expression_with_warnings(text: &str, chart: &Chart) -> Result<Parsed> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        chart,
        toks,
        pos: 0,
        end: text.chars().count() + 1,
        warnings: Vec::new(),
    };
    if p.toks.is_empty() {
        return p.err("empty expression");
    }
    let expr = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(Parsed {
        expr,
        warnings: p.warnings,
    })
}

pub fn parse_expression(text: &str, chart: &Chart) -> Result<Expr> {
    parse_expression_with_warnings(text, chart).map(|p| p.expr)
}

pub fn parse_function(text: &str, chart: &Chart) -> Result<SuperFunction> {
    parse_expression(text, chart)?.into_function()
}

pub fn parse_form(text: &str, chart: &Chart) -> Result<SuperForm> {
    parse_expression(text, chart)?.into_form()
}

pub fn parse_field(text: &str, chart: &Chart) -> Result<VectorField> {
    parse_expression(text, chart)?.into_field()
}

/// One signed summand; `body` is a product without a leading sign.
struct Atom {
    negative: bool,
    body: String,
}

fn join(atoms: &[Atom]) -> String {
    if atoms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, a) in atoms.iter().enumerate() {
        if k == 0 {
            if a.negative {
                if a.body.contains(['*', '/']) {
                    s.push_str(&format!("-({})", a.body));
                } else {
                    s.push('-');
                    s.push_str(&a.body);
                }
            } else {
                s.push_str(&a.body);
            }
        } else {
            s.push_str(if a.negative { " - " } else { " + " });
            s.push_str(&a.body);
        }
    }
    s
}

fn product_body(coefficient: Option<String>, factors: Vec<String>) -> String {
    let mut parts: Vec<String> = coefficient.into_iter().collect();
    parts.extend(factors.into_iter().filter(|f| !f.is_empty()));
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn even_text(chart: &Chart, m: &Monomial) -> String {
    m.factors()
        .map(|(v, e)| {
            if e == 1 {
                chart.name(v).to_string()
            } else {
                format!("{}^{e}", chart.name(v))
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn odd_text(chart: &Chart, m: &OddMonomial) -> String {
    m.indices()
        .map(|i| chart.name(i).to_string())
        .collect::<Vec<_>>()
        .join("*")
}

fn magnitude(c: &Scalar) -> Option<String> {
    let a = c.abs();
    if a.is_one() {
        None
    } else {
        Some(ScalarDisplay(&a).to_string())
    }
}

fn poly_text(chart: &Chart, p: &Poly) -> String {
    let atoms: Vec<Atom> = p
        .terms()
        .rev()
        .map(|(m, c)| Atom {
            negative: c.is_negative(),
            body: product_body(magnitude(c), vec![even_text(chart, m)]),
        })
        .collect();
    join(&atoms)
}

/// Summands of `f`, each with `prefix` placed between the coefficient and
/// the odd monomial.
fn function_atoms(f: &SuperFunction, prefix: &[String], suffix: &[String]) -> Vec<Atom> {
    let chart = f.chart();
    let mut poly_atoms: Vec<(&Monomial, &OddMonomial, &Scalar)> = Vec::new();
    let mut rational = Vec::new();
    for (m, r) in f.terms() {
        if r.is_polynomial() {
            for (e, c) in r.numerator().terms() {
                poly_atoms.push((e, m, c));
            }
        } else {
            rational.push((m, r));
        }
    }
    poly_atoms.sort_by(|a, b| b.0.cmp(a.0).then_with(|| a.1.cmp(b.1)));
    let mut out = Vec::new();
    for (e, m, c) in poly_atoms {
        let mut factors: Vec<String> = prefix.to_vec();
        factors.push(even_text(chart, e));
        factors.push(odd_text(chart, m));
        factors.extend(suffix.iter().cloned());
        out.push(Atom {
            negative: c.is_negative(),
            body: product_body(magnitude(c), factors),
        });
    }
    for (m, r) in rational {
        let coefficient = format!(
            "({})/({})",
            poly_text(chart, r.numerator()),
            poly_text(chart, r.denominator())
        );
        let mut factors: Vec<String> = prefix.to_vec();
        factors.push(odd_text(chart, m));
        factors.extend(suffix.iter().cloned());
        out.push(Atom {
            negative: false,
            body: product_body(Some(coefficient), factors),
        });
    }
    out
}

fn diff_text(chart: &Chart, d: &DiffMonomial) -> String {
    let mut parts = Vec::new();
    for (i, k) in d.factors() {
        for _ in 0..k {
            parts.push(format!("d({})", chart.name(i)));
        }
    }
    parts.join("^")
}

impl fmt::Display for SuperFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&function_atoms(self, &[], &[])))
    }
}

impl fmt::Display for EvenRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // variables are printed by index when no chart is at hand
        let names = |p: &Poly| {
            let atoms: Vec<Atom> = p
                .terms()
                .rev()
                .map(|(m, c)| Atom {
                    negative: c.is_negative(),
                    body: product_body(
                        magnitude(c),
                        vec![m
                            .factors()
                            .map(|(v, e)| if e == 1 { format!("v{v}") } else { format!("v{v}^{e}") })
                            .collect::<Vec<_>>()
                            .join("*")],
                    ),
                })
                .collect();
            join(&atoms)
        };
        if self.is_polynomial() {
            f.write_str(&names(self.numerator()))
        } else {
            write!(f, "({})/({})", names(self.numerator()), names(self.denominator()))
        }
    }
}

impl fmt::Display for SuperForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chart = self.chart();
        let mut atoms = Vec::new();
        for (d, g) in self.terms() {
            let prefix = if d.is_one() { vec![] } else { vec![diff_text(chart, d)] };
            atoms.extend(function_atoms(g, &prefix, &[]));
        }
        f.write_str(&join(&atoms))
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chart = self.chart();
        let mut atoms = Vec::new();
        for (a, g) in self.coefficients().iter().enumerate() {
            atoms.extend(function_atoms(g, &[], &[format!("@{}", chart.name(a))]));
        }
        f.write_str(&join(&atoms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn chart() -> Chart {
        parse_chart("# test\nx E 1\ny E -2\nxi O 3\neta O 1\n").unwrap()
    }

    #[test]
    fn chart_files() {
        let c = parse_chart("x E 1\nxi O 3\n").unwrap();
        assert_eq!(c.dim(), 2);
        assert!(c.is_odd(1));
        let c = parse_chart("y E -1 base=2/3").unwrap();
        assert_eq!(c.coordinate(0).base, frac(2, 3));
        assert_eq!(c.weight(0), int(-1));
        assert!(matches!(parse_chart("x E 1.5"), Err(Error::Parse { line: 1, column: 5, .. })));
        assert!(matches!(parse_chart("x E 1\nx O 1"), Err(Error::DuplicateCoordinate(_))));
        assert!(matches!(parse_chart("xi O 1 base=1"), Err(Error::OddBaseValue(_))));
        assert!(matches!(parse_chart("x Q 1"), Err(Error::Parse { column: 3, .. })));
        let c = parse_chart("x E 1 2\ny E 0 1 base=1").unwrap();
        assert!(c.has_second_weight());
        assert_eq!(parse_chart(&c.to_string()).unwrap(), c);
    }

    #[test]
    fn functions() {
        let c = chart();
        let f = parse_function("x^2 * y + 3/2 * xi * eta", &c).unwrap();
        let x = c.coord("x").unwrap();
        let y = c.coord("y").unwrap();
        let xi = c.coord("xi").unwrap();
        let eta = c.coord("eta").unwrap();
        assert_eq!(f, &(&(&x * &x) * &y) + &(&xi * &eta).scale(&frac(3, 2)));
        assert_eq!(f.to_string(), "x^2*y + 3/2*xi*eta");
        assert_eq!(parse_function("eta * xi", &c).unwrap().to_string(), "-(xi*eta)");
        assert_eq!(parse_function("x - 2*y", &c).unwrap().to_string(), "x - 2*y");
        let g = parse_function("1/(1 + x) * xi", &c).unwrap();
        assert_eq!(g.to_string(), "(1)/(x + 1)*xi");
        assert_eq!(parse_function(&g.to_string(), &c).unwrap(), g);
        assert_eq!(parse_function("x^-1", &c).unwrap(), x.invert().unwrap());
    }

    #[test]
    fn odd_powers_warn() {
        let c = chart();
        let p = parse_expression_with_warnings("xi^2 + x", &c).unwrap();
        assert_eq!(p.expr, Expr::Function(c.coord("x").unwrap()));
        assert_eq!(p.warnings.len(), 1);
    }

    #[test]
    fn forms_and_fields() {
        let c = chart();
        let w = parse_form("d(x) ^ d(y)", &c).unwrap();
        assert_eq!(w.rank(), Some(2));
        assert_eq!(w.to_string(), "d(x)^d(y)");
        let w = parse_form("x*d(xi)^d(xi)*eta - d(x*y)", &c).unwrap();
        assert_eq!(parse_form(&w.to_string(), &c).unwrap(), w);
        let v = parse_field("x*@x + xi*@eta - 2*@y", &c).unwrap();
        assert_eq!(v.to_string(), "x*@x - 2*@y + xi*@eta");
        assert_eq!(parse_field(&v.to_string(), &c).unwrap(), v);
    }

    #[test]
    fn errors_have_positions() {
        let c = chart();
        assert!(matches!(parse_function("x + zz", &c), Err(Error::Parse { column: 5, .. })));
        assert!(matches!(parse_function("x + ", &c), Err(Error::Parse { .. })));
        assert!(matches!(parse_function("(x", &c), Err(Error::Parse { .. })));
        assert!(parse_expression("@x * x", &c).is_err());
        assert!(parse_function("1.5*x", &c).is_err());
    }
}
