//! Text grammars for degree vectors, permutations and generator words.
//!
//! All indices in text are 1-based. Error positions are 0-based byte offsets
//! into the input.
//!
//! * degrees: `1,2,-3,0` (at least two comma-separated integers)
//! * permutations: one-line `[2,5,3,1,4]` meaning `sigma(i) = a_i`, or a
//!   product of cycles `(2 3)(1 2)`. Cycles compose like permutations do, so
//!   the rightmost cycle is applied first. `()` and `e` denote the identity.
//! * words: whitespace-separated `s<k>`, `s<k>^-1` or `s<k>'`; an empty
//!   string or `e` is the empty word.

use crate::{Degree, Error, Generator, Permutation, Result, Word};

/// Splits on `sep`, yielding `(byte offset of trimmed token, token)`.
fn tokens(text: &str, sep: char) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = 0;
    text.split(sep).map(move |raw| {
        let start = offset;
        offset += raw.len() + sep.len_utf8();
        let lead = raw.len() - raw.trim_start().len();
        (start + lead, raw.trim())
    })
}

pub fn parse_degrees(text: &str) -> Result<Vec<Degree>> {
    if text.trim().is_empty() {
        return Err(Error::parse(0, "empty degree list"));
    }
    let mut out = Vec::new();
    for (pos, tok) in tokens(text, ',') {
        if tok.is_empty() {
            return Err(Error::parse(pos, "empty degree"));
        }
        let value: i64 = tok
            .parse()
            .map_err(|_| Error::parse(pos, format!("{tok:?} is not an integer")))?;
        out.push(Degree(value));
    }
    if out.len() < 2 {
        return Err(Error::parse(
            0,
            format!("need at least 2 degrees, got {}", out.len()),
        ));
    }
    Ok(out)
}

/// Renders degrees in the grammar accepted by [`parse_degrees`].
pub fn render_degrees(degrees: &[Degree]) -> String {
    degrees
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// One-line or cycle notation for an element of `S_n`.
pub fn parse_perm(text: &str, n: usize) -> Result<Permutation> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    match trimmed.chars().next() {
        Some('[') => parse_one_line(text, Some(n)),
        Some('(') => parse_cycles(text, n),
        Some('e') if trimmed == "e" => Ok(Permutation::identity(n)),
        Some(_) => Err(Error::parse(
            lead,
            "expected one-line form `[a1,...,an]` or cycles `(i j ...)`",
        )),
        None => Err(Error::parse(0, "empty permutation")),
    }
}

pub(crate) fn parse_one_line(text: &str, n: Option<usize>) -> Result<Permutation> {
    let lead = text.len() - text.trim_start().len();
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('[')
        .ok_or_else(|| Error::parse(lead, "expected `[`"))?
        .strip_suffix(']')
        .ok_or_else(|| Error::parse(lead + trimmed.len(), "expected closing `]`"))?;
    let base = lead + 1;
    let mut images = Vec::new();
    if !inner.trim().is_empty() {
        for (pos, tok) in tokens(inner, ',') {
            let value: usize = tok.parse().map_err(|_| {
                Error::parse(base + pos, format!("{tok:?} is not a positive integer"))
            })?;
            images.push((base + pos, value));
        }
    }
    let len = images.len();
    if let Some(n) = n {
        if len != n {
            return Err(Error::parse(
                lead,
                format!("one-line form has {len} entries, expected {n}"),
            ));
        }
    }
    let mut seen = vec![false; len];
    for &(pos, v) in &images {
        if v == 0 || v > len {
            return Err(Error::parse(pos, format!("image {v} out of range 1..={len}")));
        }
        if std::mem::replace(&mut seen[v - 1], true) {
            return Err(Error::parse(pos, format!("image {v} repeated; not a bijection")));
        }
    }
    Permutation::from_one_line(&images.iter().map(|&(_, v)| v).collect::<Vec<_>>())
}

fn parse_cycles(text: &str, n: usize) -> Result<Permutation> {
    let mut product = Permutation::identity(n);
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b if b.is_ascii_whitespace() => i += 1,
            b'(' => {
                let close = text[i..]
                    .find(')')
                    .map(|k| i + k)
                    .ok_or_else(|| Error::parse(i, "unclosed `(`"))?;
                let body = &text[i + 1..close];
                if let Some(k) = body.find('(') {
                    return Err(Error::parse(i + 1 + k, "nested `(`"));
                }
                let cycle = parse_cycle_body(body, i + 1, n)?;
                product = &product * &cycle;
                i = close + 1;
            }
            _ => return Err(Error::parse(i, "expected `(`")),
        }
    }
    Ok(product)
}

fn parse_cycle_body(body: &str, base: usize, n: usize) -> Result<Permutation> {
    let mut points: Vec<usize> = Vec::new();
    let mut offset = 0;
    for raw in body.split(|c: char| c.is_whitespace() || c == ',') {
        let pos = base + offset;
        offset += raw.len() + 1;
        if raw.is_empty() {
            continue;
        }
        let v: usize = raw
            .parse()
            .map_err(|_| Error::parse(pos, format!("{raw:?} is not a positive integer")))?;
        if v == 0 || v > n {
            return Err(Error::parse(pos, format!("index {v} out of range 1..={n}")));
        }
        if points.contains(&(v - 1)) {
            return Err(Error::parse(pos, format!("index {v} repeated within a cycle")));
        }
        points.push(v - 1);
    }
    let mut images: Vec<usize> = (0..n).collect();
    for (k, &a) in points.iter().enumerate() {
        images[a] = points[(k + 1) % points.len()];
    }
    Permutation::new(images)
}

pub fn parse_word(text: &str, n: usize) -> Result<Word> {
    if n < 2 {
        return Err(Error::Domain(format!("n must be at least 2, got {n}")));
    }
    if text.trim() == "e" {
        return Word::identity(n);
    }
    let mut letters = Vec::new();
    let mut offset = 0;
    for raw in text.split(|c: char| c.is_whitespace()) {
        let pos = offset;
        offset += raw.len() + 1;
        if raw.is_empty() {
            continue;
        }
        let body = raw
            .strip_prefix('s')
            .ok_or_else(|| Error::parse(pos, format!("{raw:?} is not a generator `s<k>`")))?;
        let (digits, inverse) = if let Some(d) = body.strip_suffix("^-1") {
            (d, true)
        } else if let Some(d) = body.strip_suffix('\'') {
            (d, true)
        } else {
            (body, false)
        };
        let index: usize = digits
            .parse()
            .map_err(|_| Error::parse(pos + 1, format!("{digits:?} is not a generator index")))?;
        if index == 0 || index >= n {
            return Err(Error::parse(
                pos + 1,
                format!("generator index {index} out of range 1..={}", n - 1),
            ));
        }
        letters.push(Generator { index, inverse });
    }
    Word::new(n, letters)
}
