//! Line-oriented spec files.
//!
//! ```text
//! name deformed enveloping algebra
//! field Q
//! params
//!   mu = 2
//! generators n0, n1, n2
//! relations
//!   mu^2 * n2*n0 - n0*n2 = mu * n1
//! representation adj left 3
//!   n0 = [0, 0, 0; 0, 0, 1; 0, 0, 0]
//! options
//!   max_degree = 8
//!   checks = koszul, pbw
//! ```
//!
//! Section keywords start in column 1; section bodies are indented. `#`
//! comments run to the end of the line. Products need an explicit `*`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::Check;
use crate::lie::{Representation, Side};
use crate::linear::{parse_scalar, zero_vec, Matrix, Scalar};
use crate::nonhomogeneous::{
    InhomogeneousRelation, NonhomogeneousError, NonhomogeneousPresentation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("parameter `{0}` must be nonzero")]
    ZeroParameter(String),
    #[error("`{0}` is declared twice")]
    Duplicate(String),
    #[error("relation has degree {0} after expansion; at most 2 is allowed")]
    Degree(usize),
    #[error("relation has no degree-2 part after moving everything to one side")]
    NoQuadraticPart,
    #[error("the relations imply a relation of degree <= 1: {0}")]
    ConditionI(String),
    #[error("missing section `{0}`")]
    MissingSection(&'static str),
    #[error("unsupported field `{0}`; only Q is available")]
    Field(String),
    #[error("{0}")]
    Representation(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecOptions {
    /// Total degree of the Koszulity certificate.
    pub max_degree: Option<usize>,
    pub checks: Option<Vec<Check>>,
}

/// A parsed spec with every parameter substituted into the relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub name: String,
    pub params: Vec<(String, Scalar)>,
    pub generators: Vec<String>,
    pub relations: Vec<InhomogeneousRelation>,
    pub representations: Vec<Representation>,
    pub options: SpecOptions,
}

impl AlgebraSpec {
    pub fn presentation(&self) -> Result<NonhomogeneousPresentation, NonhomogeneousError> {
        NonhomogeneousPresentation::from_relations(self.generators.clone(), &self.relations)
    }

    pub fn d(&self) -> usize {
        self.generators.len()
    }
}

impl FromStr for AlgebraSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_spec(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Scalar),
    Ident(String),
    Sym(char),
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

fn syntax(line: usize, column: usize, msg: impl Into<String>) -> ParseError {
    err(line, column, ParseErrorKind::Syntax(msg.into()))
}

/// Tokens with 1-based columns; `col0` is the column of `text`'s first char.
fn lex(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                let den = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if den == i {
                    return Err(syntax(line, col0 + den, "expected a denominator after `/`"));
                }
            }
            let lit: String = chars[start..i].iter().collect();
            let value = parse_scalar(&lit)
                .ok_or_else(|| syntax(line, col, format!("invalid rational `{lit}`")))?;
            out.push((Tok::Num(value), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*^=()[];,".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(syntax(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

/// A noncommutative polynomial: word → coefficient, zero terms dropped.
type Poly = BTreeMap<Vec<usize>, Scalar>;

fn constant(c: Scalar) -> Poly {
    let mut p = Poly::new();
    if !c.is_zero() {
        p.insert(Vec::new(), c);
    }
    p
}

fn add_into(acc: &mut Poly, other: &Poly, sign: &Scalar) {
    for (w, c) in other {
        let entry = acc.entry(w.clone()).or_insert_with(Scalar::zero);
        *entry += sign * c;
        if entry.is_zero() {
            acc.remove(w);
        }
    }
}

fn multiply(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend(wb);
            let mut single = Poly::new();
            single.insert(w, ca * cb);
            add_into(&mut out, &single, &Scalar::one());
        }
    }
    out
}

fn degree(p: &Poly) -> usize {
    p.keys().map(Vec::len).max().unwrap_or(0)
}

fn as_scalar(p: &Poly) -> Option<Scalar> {
    match degree(p) {
        0 => Some(p.get(&Vec::new()).cloned().unwrap_or_else(Scalar::zero)),
        _ => None,
    }
}

/// Largest exponent accepted on a non-scalar base.
const MAX_POLY_EXPONENT: i64 = 8;

struct Scope<'a> {
    params: &'a [(String, Scalar)],
    generators: &'a [String],
}

impl Scope<'_> {
    fn lookup(&self, name: &str) -> Option<Poly> {
        if let Some((_, v)) = self.params.iter().find(|(n, _)| n == name) {
            return Some(constant(v.clone()));
        }
        self.generators.iter().position(|g| g == name).map(|i| {
            let mut p = Poly::new();
            p.insert(vec![i], Scalar::one());
            p
        })
    }
}

struct Cursor<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
    end_col: usize,
    scope: &'a Scope<'a>,
}

impl<'a> Cursor<'a> {
    fn new(toks: &'a [(Tok, usize)], line: usize, end_col: usize, scope: &'a Scope<'a>) -> Self {
        Cursor {
            toks,
            pos: 0,
            line,
            end_col,
            scope,
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.line, self.col(), format!("expected `{c}`")))
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.toks.len()
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(syntax(self.line, self.col(), "unexpected trailing input"))
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            let sign = if self.eat('+') {
                Scalar::one()
            } else if self.eat('-') {
                -Scalar::one()
            } else {
                return Ok(acc);
            };
            let t = self.term()?;
            add_into(&mut acc, &t, &sign);
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            let f = self.unary()?;
            acc = multiply(&acc, &f);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.eat('-') {
            let p = self.unary()?;
            let mut out = Poly::new();
            add_into(&mut out, &p, &-Scalar::one());
            Ok(out)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let col = self.col();
        let negative = self.eat('-');
        let Some(Tok::Num(n)) = self.peek().cloned() else {
            return Err(syntax(self.line, col, "expected an integer exponent"));
        };
        if !n.is_integer() {
            return Err(syntax(self.line, col, "exponents must be integers"));
        }
        self.pos += 1;
        let e: i64 = n
            .to_integer()
            .try_into()
            .map_err(|_| syntax(self.line, col, "exponent is too large"))?;
        let e = if negative { -e } else { e };
        if let Some(s) = as_scalar(&base) {
            if s.is_zero() && e < 0 {
                return Err(syntax(self.line, col, "zero raised to a negative power"));
            }
            let mag = u32::try_from(e.unsigned_abs())
                .map_err(|_| syntax(self.line, col, "exponent is too large"))?;
            let mut v = num_traits::pow(s, mag as usize);
            if e < 0 {
                v = v.recip();
            }
            return Ok(constant(v));
        }
        if e < 0 {
            return Err(syntax(
                self.line,
                col,
                "negative powers of generators are not allowed",
            ));
        }
        if e > MAX_POLY_EXPONENT {
            return Err(err(self.line, col, ParseErrorKind::Degree(e as usize)));
        }
        let mut acc = constant(Scalar::one());
        for _ in 0..e {
            acc = multiply(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(constant(v))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.scope
                    .lookup(&name)
                    .ok_or_else(|| err(self.line, col, ParseErrorKind::UnknownIdentifier(name)))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let p = self.expr()?;
                self.expect(')')?;
                Ok(p)
            }
            Some(t) => Err(syntax(
                self.line,
                col,
                format!("unexpected {}", describe(&t)),
            )),
            None => Err(syntax(self.line, col, "unexpected end of line")),
        }
    }

    fn scalar(&mut self) -> Result<Scalar, ParseError> {
        let col = self.col();
        let p = self.expr()?;
        as_scalar(&p).ok_or_else(|| {
            syntax(
                self.line,
                col,
                "expected a number, found an expression with generators",
            )
        })
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(v) => format!("number `{v}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
    }
}

/// One source line with its comment removed.
struct Line<'a> {
    number: usize,
    text: &'a str,
    indented: bool,
}

const KEYWORDS: [&str; 7] = [
    "name",
    "field",
    "params",
    "generators",
    "relations",
    "representation",
    "options",
];

fn split_keyword(text: &str) -> (&str, &str) {
    match text.find(char::is_whitespace) {
        Some(i) => (&text[..i], text[i..].trim()),
        None => (text, ""),
    }
}

fn check_identifier(name: &str, line: usize, col: usize) -> Result<(), ParseError> {
    let mut chars = name.chars();
    let ok = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(syntax(line, col, format!("`{name}` is not an identifier")))
    }
}

pub fn parse_spec<'a>(text: &'a str) -> Result<AlgebraSpec, ParseError> {
    let lines: Vec<Line<'a>> = text
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            (!body.trim().is_empty()).then(|| Line {
                number: i + 1,
                text: body,
                indented: body.starts_with(char::is_whitespace),
            })
        })
        .collect();

    let mut name = None;
    let mut params: Vec<(String, Scalar)> = Vec::new();
    let mut generators: Option<Vec<String>> = None;
    let mut relations: Vec<InhomogeneousRelation> = Vec::new();
    let mut relations_line = None;
    let mut representations = Vec::new();
    let mut options = SpecOptions::default();
    let mut seen: Vec<&str> = Vec::new();

    let mut i = 0;
    while i < lines.len() {
        let line = &lines[i];
        if line.indented {
            return Err(syntax(line.number, 1, "indented line outside a section"));
        }
        let (kw, rest) = split_keyword(line.text.trim_end());
        if !KEYWORDS.contains(&kw) {
            return Err(syntax(
                line.number,
                1,
                format!("expected a section keyword, found `{kw}`"),
            ));
        }
        if kw != "representation" {
            if seen.contains(&kw) {
                return Err(err(
                    line.number,
                    1,
                    ParseErrorKind::Duplicate(format!("section {kw}")),
                ));
            }
            seen.push(kw);
        }
        let rest_col = line.text.len()
            - line
                .text
                .trim_start_matches(|c: char| !c.is_whitespace())
                .trim_start()
                .len()
            + 1;
        let mut j = i + 1;
        while j < lines.len() && lines[j].indented {
            j += 1;
        }
        let body = &lines[i + 1..j];
        match kw {
            "name" => name = Some(rest.to_string()),
            "field" => {
                if rest != "Q" {
                    return Err(err(
                        line.number,
                        rest_col,
                        ParseErrorKind::Field(rest.to_string()),
                    ));
                }
            }
            "params" => {
                no_inline(line, rest, rest_col)?;
                for b in body {
                    let toks = lex(b.text, b.number, 1)?;
                    let Some((Tok::Ident(p), col)) = toks.first().cloned() else {
                        return Err(syntax(b.number, first_col(b), "expected `name = value`"));
                    };
                    if params.iter().any(|(n, _)| *n == p) {
                        return Err(err(b.number, col, ParseErrorKind::Duplicate(p)));
                    }
                    let scope = Scope {
                        params: &params,
                        generators: &[],
                    };
                    let mut cur = Cursor::new(&toks, b.number, b.text.len() + 1, &scope);
                    cur.pos = 1;
                    cur.expect('=')?;
                    let v = cur.scalar()?;
                    cur.finish()?;
                    if v.is_zero() {
                        return Err(err(b.number, col, ParseErrorKind::ZeroParameter(p)));
                    }
                    params.push((p, v));
                }
            }
            "generators" => {
                let mut names = Vec::new();
                let mut items: Vec<(usize, usize, &str)> = Vec::new();
                let mut push_items = |number: usize, text: &'a str, offset: usize| {
                    let mut col = offset;
                    for piece in text.split(|c: char| c == ',' || c.is_whitespace()) {
                        if !piece.is_empty() {
                            items.push((number, col, piece));
                        }
                        col += piece.chars().count() + 1;
                    }
                };
                push_items(line.number, rest, rest_col);
                for b in body {
                    push_items(b.number, b.text, 1);
                }
                for (number, col, g) in items {
                    check_identifier(g, number, col)?;
                    if names.iter().any(|n: &String| n == g) {
                        return Err(err(number, col, ParseErrorKind::Duplicate(g.to_string())));
                    }
                    if params.iter().any(|(p, _)| p == g) {
                        return Err(err(number, col, ParseErrorKind::Duplicate(g.to_string())));
                    }
                    names.push(g.to_string());
                }
                generators = Some(names);
            }
            "relations" => {
                no_inline(line, rest, rest_col)?;
                let gens = generators.as_ref().ok_or_else(|| {
                    err(line.number, 1, ParseErrorKind::MissingSection("generators"))
                })?;
                relations_line = Some(line.number);
                for b in body {
                    relations.push(parse_relation(b, &params, gens)?);
                }
            }
            "representation" => {
                let gens = generators.as_ref().ok_or_else(|| {
                    err(line.number, 1, ParseErrorKind::MissingSection("generators"))
                })?;
                representations.push(parse_representation(
                    line, rest, rest_col, body, &params, gens,
                )?);
            }
            "options" => {
                no_inline(line, rest, rest_col)?;
                for b in body {
                    parse_option(b, &mut options)?;
                }
            }
            _ => unreachable!("keyword list is exhaustive"),
        }
        i = j;
    }

    let generators =
        generators.ok_or_else(|| err(1, 1, ParseErrorKind::MissingSection("generators")))?;
    let spec = AlgebraSpec {
        name: name.unwrap_or_else(|| "unnamed".to_string()),
        params,
        generators,
        relations,
        representations,
        options,
    };
    match spec.presentation() {
        Ok(_) => Ok(spec),
        Err(NonhomogeneousError::ConditionI(w)) => Err(err(
            relations_line.unwrap_or(1),
            1,
            ParseErrorKind::ConditionI(w),
        )),
        Err(e) => Err(syntax(relations_line.unwrap_or(1), 1, e.to_string())),
    }
}

fn first_col(l: &Line) -> usize {
    l.text.len() - l.text.trim_start().len() + 1
}

fn no_inline(line: &Line, rest: &str, col: usize) -> Result<(), ParseError> {
    if rest.is_empty() {
        Ok(())
    } else {
        Err(syntax(
            line.number,
            col,
            "this section takes its entries on indented lines",
        ))
    }
}

fn parse_relation(
    b: &Line,
    params: &[(String, Scalar)],
    gens: &[String],
) -> Result<InhomogeneousRelation, ParseError> {
    let d = gens.len();
    let toks = lex(b.text, b.number, 1)?;
    let scope = Scope {
        params,
        generators: gens,
    };
    let mut cur = Cursor::new(&toks, b.number, b.text.len() + 1, &scope);
    let lhs = cur.expr()?;
    cur.expect('=')?;
    let rhs = cur.expr()?;
    cur.finish()?;
    let mut poly = lhs;
    add_into(&mut poly, &rhs, &-Scalar::one());
    let col = first_col(b);
    let deg = degree(&poly);
    if deg > 2 {
        return Err(err(b.number, col, ParseErrorKind::Degree(deg)));
    }
    let mut quadratic = zero_vec(d * d);
    let mut linear = zero_vec(d);
    let mut constant = Scalar::zero();
    for (w, c) in poly {
        match w.as_slice() {
            [] => constant = -c,
            [a] => linear[*a] = -c,
            [a, b] => quadratic[a * d + b] = c,
            _ => unreachable!("degree checked"),
        }
    }
    if quadratic.iter().all(Zero::is_zero) {
        return Err(err(b.number, col, ParseErrorKind::NoQuadraticPart));
    }
    Ok(InhomogeneousRelation {
        quadratic,
        linear,
        constant,
    })
}

fn parse_representation(
    line: &Line,
    rest: &str,
    rest_col: usize,
    body: &[Line],
    params: &[(String, Scalar)],
    gens: &[String],
) -> Result<Representation, ParseError> {
    let parts: Vec<&str> = rest.split_whitespace().collect();
    let [name, side, dim] = parts.as_slice() else {
        return Err(syntax(
            line.number,
            rest_col,
            "expected `representation <name> <left|right> <dim>`",
        ));
    };
    check_identifier(name, line.number, rest_col)?;
    let side = match *side {
        "left" => Side::Left,
        "right" => Side::Right,
        other => {
            return Err(syntax(
                line.number,
                rest_col,
                format!("side must be left or right, found `{other}`"),
            ))
        }
    };
    let dim: usize = dim
        .parse()
        .map_err(|_| syntax(line.number, rest_col, format!("invalid dimension `{dim}`")))?;
    let mut matrices: Vec<Option<Matrix>> = vec![None; gens.len()];
    let scope = Scope {
        params,
        generators: &[],
    };
    for b in body {
        let toks = lex(b.text, b.number, 1)?;
        let Some((Tok::Ident(g), col)) = toks.first().cloned() else {
            return Err(syntax(
                b.number,
                first_col(b),
                "expected `generator = [matrix]`",
            ));
        };
        let idx = gens
            .iter()
            .position(|x| *x == g)
            .ok_or_else(|| err(b.number, col, ParseErrorKind::UnknownIdentifier(g.clone())))?;
        if matrices[idx].is_some() {
            return Err(err(b.number, col, ParseErrorKind::Duplicate(g)));
        }
        let mut cur = Cursor::new(&toks, b.number, b.text.len() + 1, &scope);
        cur.pos = 1;
        cur.expect('=')?;
        cur.expect('[')?;
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        if !cur.eat(']') {
            loop {
                let mut row = vec![cur.scalar()?];
                while cur.eat(',') {
                    row.push(cur.scalar()?);
                }
                rows.push(row);
                if cur.eat(']') {
                    break;
                }
                cur.expect(';')?;
            }
        }
        cur.finish()?;
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(err(
                b.number,
                col,
                ParseErrorKind::Representation(format!("matrix for `{g}` must be {dim}x{dim}")),
            ));
        }
        matrices[idx] = Some(Matrix::from_rows(rows, dim).expect("rows have equal length"));
    }
    let matrices = matrices
        .into_iter()
        .map(|m| m.unwrap_or_else(|| Matrix::zeros(dim, dim)))
        .collect();
    Representation::new(*name, side, dim, matrices).map_err(|e| {
        err(
            line.number,
            rest_col,
            ParseErrorKind::Representation(e.to_string()),
        )
    })
}

fn parse_option(b: &Line, options: &mut SpecOptions) -> Result<(), ParseError> {
    let col = first_col(b);
    let Some((key, value)) = b.text.split_once('=') else {
        return Err(syntax(b.number, col, "expected `key = value`"));
    };
    let value_col = key.len() + 2;
    match key.trim() {
        "max_degree" => {
            let v = value.trim().parse().map_err(|_| {
                syntax(
                    b.number,
                    value_col,
                    "max_degree must be a nonnegative integer",
                )
            })?;
            options.max_degree = Some(v);
        }
        "checks" => {
            let checks = value
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<Check>()
                        .map_err(|e| syntax(b.number, value_col, e))
                })
                .collect::<Result<Vec<_>, _>>()?;
            options.checks = Some(checks);
        }
        other => return Err(syntax(b.number, col, format!("unknown option `{other}`"))),
    }
    Ok(())
}

/// `c*a*b` terms with the sign folded into the separator.
fn render_terms(terms: &[(Scalar, Vec<&str>)]) -> String {
    let mut out = String::new();
    for (k, (c, word)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || word.is_empty() {
            factors.push(mag.to_string());
        }
        factors.extend(word.iter().map(|s| s.to_string()));
        out.push_str(&factors.join("*"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `quadratic = linear + constant` with generator names.
pub fn render_relation(r: &InhomogeneousRelation, generators: &[String]) -> String {
    let d = generators.len();
    let lhs: Vec<(Scalar, Vec<&str>)> = r
        .quadratic
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            (
                c.clone(),
                vec![generators[i / d].as_str(), generators[i % d].as_str()],
            )
        })
        .collect();
    let mut rhs: Vec<(Scalar, Vec<&str>)> = r
        .linear
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (c.clone(), vec![generators[i].as_str()]))
        .collect();
    if !r.constant.is_zero() {
        rhs.push((r.constant.clone(), Vec::new()));
    }
    format!("{} = {}", render_terms(&lhs), render_terms(&rhs))
}

fn render_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect();
    format!("[{}]", rows.join("; "))
}

/// Spec text that parses back to an equal [`AlgebraSpec`]; relations are
/// printed with parameters already substituted.
pub fn print_spec(spec: &AlgebraSpec) -> String {
    let mut out = String::new();
    out.push_str(&format!("name {}\nfield Q\n", spec.name));
    if !spec.params.is_empty() {
        out.push_str("params\n");
        for (p, v) in &spec.params {
            out.push_str(&format!("  {p} = {v}\n"));
        }
    }
    out.push_str(&format!("generators {}\n", spec.generators.join(", ")));
    if !spec.relations.is_empty() {
        out.push_str("relations\n");
        for r in &spec.relations {
            out.push_str(&format!("  {}\n", render_relation(r, &spec.generators)));
        }
    }
    for rep in &spec.representations {
        out.push_str(&format!(
            "representation {} {} {}\n",
            rep.name, rep.side, rep.dim
        ));
        for (g, m) in spec.generators.iter().zip(&rep.matrices) {
            if !m.is_zero() {
                out.push_str(&format!("  {g} = {}\n", render_matrix(m)));
            }
        }
    }
    let o = &spec.options;
    if o.max_degree.is_some() || o.checks.is_some() {
        out.push_str("options\n");
        if let Some(m) = o.max_degree {
            out.push_str(&format!("  max_degree = {m}\n"));
        }
        if let Some(checks) = &o.checks {
            let names: Vec<&str> = checks.iter().map(|c| c.as_str()).collect();
            out.push_str(&format!("  checks = {}\n", names.join(", ")));
        }
    }
    out
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_spec(self))
    }
}
