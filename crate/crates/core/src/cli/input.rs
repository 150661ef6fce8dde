//! The line-oriented input format.
//!
//! ```text
//! # comments start with '#'
//! ring X Y Z
//! ideal I
//! X^4*Y^2 - Z^6
//! X^2 - Y*Z
//! matrix A
//! 3 4 5
//! ```
//!
//! A generator has one or two terms; a term is an optional sign, optional
//! coefficient factors and variable powers joined by `*`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{Exponent, MonomialOrder, Scalar, Term};
use crate::engine::{Binomial, BinomialIdeal, Ring};
use crate::error::{Error, Result};
use crate::lattice::IntMatrix;

/// Parsed contents of an input file.
#[derive(Clone, Debug, Default)]
pub struct Session {
    pub ring: Option<Arc<Ring>>,
    pub ideals: Vec<(String, BinomialIdeal)>,
    pub matrices: Vec<(String, IntMatrix)>,
}

impl Session {
    pub fn ideal(&self, name: Option<&str>) -> Result<&BinomialIdeal> {
        match name {
            Some(n) => self
                .ideals
                .iter()
                .find(|(k, _)| k == n)
                .map(|(_, i)| i)
                .ok_or_else(|| Error::InvalidInput(format!("no ideal named '{}'", n))),
            None => self
                .ideals
                .first()
                .map(|(_, i)| i)
                .ok_or_else(|| Error::InvalidInput("the input declares no ideal".into())),
        }
    }

    pub fn matrix(&self, name: &str) -> Option<&IntMatrix> {
        self.matrices.iter().find(|(k, _)| k == name).map(|(_, m)| m)
    }

    pub fn first_matrix(&self) -> Option<&IntMatrix> {
        self.matrices.first().map(|(_, m)| m)
    }
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn is_identifier(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && ch.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

enum Block {
    None,
    Ideal { name: String, gens: Vec<Binomial> },
    Matrix { name: String, rows: Vec<Vec<BigInt>>, line: usize },
}

pub fn parse_input(text: &str) -> Result<Session> {
    let mut s = Session::default();
    let mut block = Block::None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col0 = content.len() - content.trim_start().len() + 1;
        let mut words = trimmed.split_whitespace();
        let head = words.next().unwrap();
        match head {
            "ring" => {
                finish(&mut s, std::mem::replace(&mut block, Block::None))?;
                if s.ring.is_some() {
                    return Err(perr(line, col0, "a second ring declaration"));
                }
                let names: Vec<String> = words.map(str::to_string).collect();
                if names.is_empty() {
                    return Err(perr(line, col0, "ring without variables"));
                }
                for (i, n) in names.iter().enumerate() {
                    let col = column_of(content, n, col0);
                    if !is_identifier(n) || n == "zeta" {
                        return Err(perr(line, col, format!("invalid variable name '{}'", n)));
                    }
                    if names[..i].contains(n) {
                        return Err(perr(line, col, format!("variable '{}' declared twice", n)));
                    }
                }
                s.ring = Some(Arc::new(Ring::new(names)));
            }
            "ideal" | "matrix" => {
                finish(&mut s, std::mem::replace(&mut block, Block::None))?;
                let name = words.next().ok_or_else(|| perr(line, col0, format!("{} without a name", head)))?;
                if !is_identifier(name) {
                    return Err(perr(line, column_of(content, name, col0), format!("invalid name '{}'", name)));
                }
                if let Some(extra) = words.next() {
                    return Err(perr(line, column_of(content, extra, col0), "unexpected text after the name"));
                }
                if s.ideals.iter().any(|(n, _)| n == name) || s.matrices.iter().any(|(n, _)| n == name) {
                    return Err(perr(line, col0, format!("'{}' is declared twice", name)));
                }
                block = if head == "ideal" {
                    if s.ring.is_none() {
                        return Err(perr(line, col0, "ideal declared before the ring"));
                    }
                    Block::Ideal { name: name.to_string(), gens: Vec::new() }
                } else {
                    Block::Matrix { name: name.to_string(), rows: Vec::new(), line }
                };
            }
            _ => match &mut block {
                Block::None => return Err(perr(line, col0, "expected 'ring', 'ideal' or 'matrix'")),
                Block::Ideal { gens, .. } => {
                    let ring = s.ring.as_ref().unwrap();
                    gens.push(parse_generator(content, ring.names(), line)?);
                }
                Block::Matrix { rows, .. } => {
                    for (chunk, offset) in split_rows(content) {
                        let row = parse_int_row(chunk, line, offset)?;
                        if let Some(first) = rows.first() {
                            if first.len() != row.len() {
                                return Err(perr(
                                    line,
                                    offset + 1,
                                    format!("dimension mismatch: row has {} entries, expected {}", row.len(), first.len()),
                                ));
                            }
                        }
                        rows.push(row);
                    }
                }
            },
        }
    }
    finish(&mut s, block)?;
    Ok(s)
}

fn column_of(content: &str, word: &str, fallback: usize) -> usize {
    content.find(word).map_or(fallback, |p| p + 1)
}

fn finish(s: &mut Session, block: Block) -> Result<()> {
    match block {
        Block::None => {}
        Block::Ideal { name, gens } => {
            let ring = s.ring.clone().unwrap();
            s.ideals.push((name, BinomialIdeal::new(ring, gens)?));
        }
        Block::Matrix { name, rows, line } => {
            if rows.is_empty() {
                return Err(perr(line, 1, format!("matrix '{}' has no rows", name)));
            }
            s.matrices.push((name, IntMatrix::new(rows)?));
        }
    }
    Ok(())
}

/// Splits on `;`, returning each piece with its byte offset.
fn split_rows(content: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in content.char_indices() {
        if c == ';' {
            out.push((&content[start..i], start));
            start = i + 1;
        }
    }
    out.push((&content[start..], start));
    out.into_iter().filter(|(c, _)| !c.trim().is_empty()).collect()
}

fn parse_int_row(chunk: &str, line: usize, offset: usize) -> Result<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for tok in chunk.split(|c: char| c.is_whitespace() || c == ',') {
        let here = chunk[pos..].find(tok).map_or(pos, |p| pos + p);
        pos = here + tok.len();
        if tok.is_empty() {
            continue;
        }
        out.push(tok.parse().map_err(|_| perr(line, offset + here + 1, format!("expected an integer, found '{}'", tok)))?);
    }
    Ok(out)
}

/// Parses a matrix literal such as `"3 4 5"` or `"1 0; 0 1"`.
pub fn parse_matrix_literal(text: &str) -> Result<IntMatrix> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (chunk, offset) in split_rows(text) {
        let row = parse_int_row(chunk, 1, offset)?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(perr(1, offset + 1, "dimension mismatch between matrix rows"));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(perr(1, 1, "empty matrix"));
    }
    IntMatrix::new(rows)
}

/// Splits an expression into signed terms at top-level `+` and `-`. A sign
/// directly after `^`, `*`, `/` or `(` belongs to a number.
fn split_terms(expr: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut prev: Option<char> = None;
    for (i, c) in expr.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 && !matches!(prev, Some('^' | '*' | '/' | '('))
                && !expr[start..i].trim().is_empty() => {
                    out.push((start, &expr[start..i]));
                    start = i;
                }
            _ => {}
        }
        if !c.is_whitespace() {
            prev = Some(c);
        }
    }
    out.push((start, &expr[start..]));
    out
}

/// Splits on top-level `*`.
fn split_factors(term: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in term.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => {
                out.push((start, &term[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &term[start..]));
    out
}

fn parse_term(term: &str, names: &[String], line: usize, col: usize) -> Result<Term> {
    let n = names.len();
    let body = term.trim_start();
    let lead_ws = term.len() - body.len();
    let (negative, body, skip) = match body.chars().next() {
        Some('-') => (true, &body[1..], 1),
        Some('+') => (false, &body[1..], 1),
        _ => (false, body, 0),
    };
    let mut exps = vec![0u32; n];
    let mut coeff_parts: Vec<&str> = Vec::new();
    let base = col + lead_ws + skip;
    for (off, raw) in split_factors(body) {
        let f = raw.trim();
        let fcol = base + off + (raw.len() - raw.trim_start().len());
        if f.is_empty() {
            return Err(perr(line, fcol, "missing factor"));
        }
        let first = f.chars().next().unwrap();
        if first.is_ascii_alphabetic() || first == '_' {
            if f.starts_with("zeta(") {
                coeff_parts.push(f);
                continue;
            }
            let (name, power) = match f.split_once('^') {
                Some((a, b)) => (a.trim(), Some(b.trim())),
                None => (f, None),
            };
            let i = names
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| perr(line, fcol, format!("unknown variable '{}'", name)))?;
            let k: u32 = match power {
                None => 1,
                Some(p) => p.parse().map_err(|_| perr(line, fcol, format!("bad exponent '{}'", p)))?,
            };
            exps[i] = exps[i]
                .checked_add(k)
                .ok_or_else(|| perr(line, fcol, "exponent overflow"))?;
        } else {
            if let Ok(q) = f.parse::<BigRational>() {
                if q.is_zero() {
                    return Err(perr(line, fcol, "zero coefficient"));
                }
            }
            coeff_parts.push(f);
        }
    }
    let mut coeff = if coeff_parts.is_empty() {
        Scalar::one()
    } else {
        coeff_parts
            .join("*")
            .parse::<Scalar>()
            .map_err(|e| perr(line, base, format!("bad coefficient: {}", e)))?
    };
    if negative {
        coeff = coeff.neg();
    }
    Ok(Term::new(coeff, Exponent::new(exps)))
}

/// Parses one generator line into a binomial.
pub fn parse_generator(text: &str, names: &[String], line: usize) -> Result<Binomial> {
    let terms = split_terms(text);
    if terms.len() > 2 {
        return Err(perr(line, terms[2].0 + 1, format!("a binomial has at most two terms, found {}", terms.len())));
    }
    let mut parsed = Vec::with_capacity(2);
    for (off, t) in &terms {
        parsed.push(parse_term(t, names, line, off + 1)?);
    }
    let mut it = parsed.into_iter();
    let (a, b) = (it.next(), it.next());
    Binomial::from_terms(a, b, &MonomialOrder::grevlex())
        .ok_or_else(|| perr(line, 1, "the generator is zero"))
}

/// A monomial such as `X^2*Y`, or `1`.
pub fn parse_monomial(text: &str, names: &[String]) -> Result<Exponent> {
    let t = text.trim();
    if t == "1" {
        return Ok(Exponent::zero(names.len()));
    }
    let term = parse_term(t, names, 1, 1)?;
    if !term.coeff.is_one() {
        return Err(perr(1, 1, format!("expected a monomial, found '{}'", t)));
    }
    Ok(term.exponent)
}

/// A term such as `3*X^2*Y`.
pub fn parse_term_literal(text: &str, names: &[String]) -> Result<Term> {
    parse_term(text.trim(), names, 1, 1)
}

/// Comma-separated variable names to indices, sorted.
pub fn parse_variables(text: &str, names: &[String]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for v in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|v| !v.is_empty()) {
        let i = names
            .iter()
            .position(|n| n == v)
            .ok_or_else(|| Error::InvalidInput(format!("unknown variable '{}'", v)))?;
        if !out.contains(&i) {
            out.push(i);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Comma-separated integers.
pub fn parse_int_list(text: &str) -> Result<Vec<BigInt>> {
    parse_int_row(text, 1, 0)
}

/// Comma-separated scalar literals. Commas inside `zeta(m,k)` are kept.
pub fn parse_scalar_list(text: &str) -> Result<Vec<Scalar>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut pieces = Vec::new();
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                pieces.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(&text[start..]);
    for p in pieces {
        let p = p.trim();
        if p.is_empty() {
            continue;
        }
        out.push(p.parse::<Scalar>()?);
    }
    Ok(out)
}

/// Writes a session back in the input format.
pub fn write_session(ring: &Ring, ideals: &[(String, &BinomialIdeal)], order: &MonomialOrder) -> String {
    let mut out = format!("ring {}\n", ring.names().join(" "));
    for (name, ideal) in ideals {
        out.push_str(&format!("ideal {}\n", name));
        for g in ideal.groebner_basis(order).elements() {
            out.push_str(&format!("{}\n", g.display_with(ring.names())));
        }
    }
    out
}

/// Variable name lookup for error messages and JSON.
pub fn variable_names(ring: &Ring, vars: &[usize]) -> Vec<String> {
    vars.iter().map(|&i| ring.names()[i].clone()).collect()
}
