//! Plain-text formats.
//!
//! * matrix: `d n`, then `d` rows of `n` integers;
//! * vector list: `n`, then one vector of `n` integers per line;
//! * IP instance: `n`, the row `a`, the scalar `b`, optionally the cost `c`.
//!
//! Blank lines are ignored. Anything else out of place is an error carrying
//! a 1-based line and column.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ip::IPInstance;
use crate::vector::{IntMatrix, IntVec};

struct Line<'a> {
    no: usize,
    tokens: Vec<(usize, &'a str)>,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, l)| {
            let mut tokens = Vec::new();
            let mut start = None;
            for (j, ch) in l.char_indices() {
                if ch.is_whitespace() {
                    if let Some(s) = start.take() {
                        tokens.push((s, &l[s..j]));
                    }
                } else if start.is_none() {
                    start = Some(j);
                }
            }
            if let Some(s) = start {
                tokens.push((s, &l[s..]));
            }
            (!tokens.is_empty()).then_some(Line { no: i + 1, tokens })
        })
        .collect()
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn int(line: &Line, k: usize) -> Result<i64> {
    let (col, tok) = line.tokens[k];
    tok.parse::<i64>().map_err(|_| err(line.no, col + 1, format!("expected an integer, found `{tok}`")))
}

fn ints(line: &Line, expected: usize) -> Result<Vec<i64>> {
    if line.tokens.len() != expected {
        let col = line.tokens.get(expected).map_or(line.tokens.last().map_or(0, |t| t.0), |t| t.0);
        return Err(err(
            line.no,
            col + 1,
            format!("expected {expected} integers, found {}", line.tokens.len()),
        ));
    }
    (0..expected).map(|k| int(line, k)).collect()
}

fn dim(line: &Line, k: usize) -> Result<usize> {
    let v = int(line, k)?;
    usize::try_from(v).map_err(|_| err(line.no, line.tokens[k].0 + 1, "dimension must be nonnegative"))
}

fn eof(what: &str, after: usize) -> Error {
    err(after + 1, 1, format!("unexpected end of input, expected {what}"))
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let ls = lines(text);
    let head = ls.first().ok_or_else(|| eof("`d n` header", 0))?;
    if head.tokens.len() != 2 {
        return Err(err(head.no, 1, "header must be `d n`"));
    }
    let (d, n) = (dim(head, 0)?, dim(head, 1)?);
    let mut rows = Vec::with_capacity(d);
    for i in 0..d {
        let l = ls.get(1 + i).ok_or_else(|| eof(&format!("row {}", i + 1), ls.last().map_or(0, |l| l.no)))?;
        rows.push(IntVec::new(ints(l, n)?));
    }
    if let Some(extra) = ls.get(1 + d) {
        return Err(err(extra.no, extra.tokens[0].0 + 1, "trailing data after matrix"));
    }
    IntMatrix::new(rows, n)
}

pub fn parse_vectors(text: &str) -> Result<(usize, Vec<IntVec>)> {
    let ls = lines(text);
    let head = ls.first().ok_or_else(|| eof("dimension header", 0))?;
    if head.tokens.len() != 1 {
        return Err(err(head.no, 1, "header must be the dimension `n`"));
    }
    let n = dim(head, 0)?;
    let vectors = ls[1..].iter().map(|l| ints(l, n).map(IntVec::new)).collect::<Result<_>>()?;
    Ok((n, vectors))
}

pub fn parse_instance(text: &str) -> Result<IPInstance> {
    let ls = lines(text);
    let head = ls.first().ok_or_else(|| eof("dimension header", 0))?;
    if head.tokens.len() != 1 {
        return Err(err(head.no, 1, "header must be the dimension `n`"));
    }
    let n = dim(head, 0)?;
    let last = ls.last().map_or(0, |l| l.no);
    let a = IntVec::new(ints(ls.get(1).ok_or_else(|| eof("the row a", last))?, n)?);
    let bl = ls.get(2).ok_or_else(|| eof("the right-hand side b", last))?;
    let b = ints(bl, 1)?[0];
    let c = match ls.get(3) {
        Some(l) => Some(IntVec::new(ints(l, n)?)),
        None => None,
    };
    if let Some(extra) = ls.get(4) {
        return Err(err(extra.no, extra.tokens[0].0 + 1, "trailing data after instance"));
    }
    IPInstance::new(a, b, c).map_err(|e| match e {
        Error::Invalid(m) => err(ls[1].no, 1, m),
        e => e,
    })
}

fn push_row(out: &mut String, v: &[i64]) {
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{x}").expect("string write");
    }
    out.push('\n');
}

pub fn format_matrix(m: &IntMatrix) -> String {
    let mut out = format!("{} {}\n", m.nrows(), m.ncols());
    for r in m.rows() {
        push_row(&mut out, r);
    }
    out
}

pub fn format_vectors(n: usize, vectors: &[IntVec]) -> String {
    let mut out = format!("{n}\n");
    for v in vectors {
        push_row(&mut out, v);
    }
    out
}

pub fn format_instance(inst: &IPInstance) -> String {
    let mut out = format!("{}\n", inst.nvars());
    push_row(&mut out, &inst.a);
    out.push_str(&format!("{}\n", inst.b));
    if let Some(c) = &inst.c {
        push_row(&mut out, c);
    }
    out
}
