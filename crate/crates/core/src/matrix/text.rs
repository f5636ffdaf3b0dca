//! Matrix text format: a header line `m n`, then `m` lines of `n`
//! whitespace-separated quaternion literals.

use std::fmt::Write;

use super::Mat;
use crate::scalar::{parse_literal, QRat};
use crate::{Error, Result};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses the text format. Blank lines after the last row are ignored.
pub fn parse_matrix(text: &str) -> Result<Mat<QRat>> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "missing header line `m n`"))?;
    let dims = tokens(header);
    if dims.len() != 2 {
        return Err(parse_err(hline, 1, "header must be `m n`"));
    }
    let mut shape = [0usize; 2];
    for (slot, (col, tok)) in shape.iter_mut().zip(&dims) {
        *slot = tok
            .parse()
            .map_err(|_| parse_err(hline, *col, format!("invalid dimension '{tok}'")))?;
    }
    let [m, n] = shape;
    let mut data = Vec::with_capacity(m * n);
    for r in 0..m {
        let (lno, line) = lines
            .next()
            .ok_or_else(|| parse_err(hline + r + 1, 1, format!("missing row {}", r + 1)))?;
        let toks = tokens(line);
        if toks.len() != n {
            return Err(parse_err(
                lno,
                1,
                format!("expected {n} entries, found {}", toks.len()),
            ));
        }
        for (col, tok) in toks {
            let q = parse_literal(tok)
                .map_err(|(off, msg)| parse_err(lno, col + off - 1, msg))?;
            data.push(q);
        }
    }
    for (lno, line) in lines {
        if let Some((col, _)) = tokens(line).first() {
            return Err(parse_err(lno, *col, "unexpected content after the last row"));
        }
    }
    Ok(Mat::from_vec(m, n, data))
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Renders a matrix in the text format, terminated by a newline.
pub fn format_matrix(m: &Mat<QRat>) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(ToString::to_string).collect();
        writeln!(out, "{}", row.join(" ")).expect("write to string");
    }
    out
}
