//! Quaternion literal grammar: a signed sum of terms, each a rational
//! coefficient `p` or `p/q` optionally followed by one of `i`, `j`, `k`.
//! The coefficient may be omitted before a unit letter (`-k`). No
//! whitespace is allowed inside a literal.

use num_bigint::BigInt;

use super::{QRat, Rat, Scalar};

/// Parses a literal; errors carry a 1-based column within `s`.
pub(crate) fn parse_literal(s: &str) -> Result<QRat, (usize, String)> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err((1, "empty quaternion literal".into()));
    }
    let mut acc = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
    let mut pos = 0;
    let mut first = true;
    while pos < bytes.len() {
        let mut negative = false;
        match bytes[pos] {
            b'+' | b'-' => {
                negative = bytes[pos] == b'-';
                pos += 1;
            }
            _ if !first => {
                return Err((pos + 1, format!("expected '+' or '-', found '{}'", char_at(s, pos))));
            }
            _ => {}
        }
        first = false;

        let term_start = pos;
        let digits = take_digits(bytes, &mut pos);
        let mut coef = if digits.is_empty() {
            None
        } else {
            let numer: BigInt = digits.parse().expect("ascii digits");
            let mut denom = BigInt::from(1);
            if pos < bytes.len() && bytes[pos] == b'/' {
                pos += 1;
                let slash_col = pos + 1;
                let d = take_digits(bytes, &mut pos);
                if d.is_empty() {
                    return Err((slash_col, "expected denominator after '/'".into()));
                }
                denom = d.parse().expect("ascii digits");
                if denom == BigInt::from(0) {
                    return Err((slash_col, "zero denominator".into()));
                }
            }
            Some(Rat::from_bigints(numer, denom))
        };

        let slot = match bytes.get(pos) {
            Some(b'i') => Some(1),
            Some(b'j') => Some(2),
            Some(b'k') => Some(3),
            _ => None,
        };
        let slot = match slot {
            Some(idx) => {
                pos += 1;
                idx
            }
            None => {
                if coef.is_none() {
                    return Err(match bytes.get(term_start) {
                        Some(_) => (
                            term_start + 1,
                            format!("unexpected character '{}'", char_at(s, term_start)),
                        ),
                        None => (term_start + 1, "expected a term".into()),
                    });
                }
                0
            }
        };
        let c = coef.take().unwrap_or_else(Rat::one);
        let c = if negative { -c } else { c };
        acc[slot] += c;
    }
    let [a, b, c, d] = acc;
    Ok(QRat::new(a, b, c, d))
}

fn take_digits<'a>(bytes: &'a [u8], pos: &mut usize) -> &'a str {
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    std::str::from_utf8(&bytes[start..*pos]).expect("ascii digits")
}

fn char_at(s: &str, byte_pos: usize) -> char {
    s[byte_pos..].chars().next().unwrap_or('?')
}
