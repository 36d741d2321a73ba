//! The `.mtx` text format.
//!
//! ```text
//! # optional comments
//! n=4 k=2
//! 1 2
//! 1 3
//! ```
//!
//! One basis per line as ascending labels; bases are written in ascending
//! mask order. A rank-0 matroid has the single empty basis, written as an
//! empty line.

use std::fmt::Write;

use super::{Matroid, SubsetMask};
use crate::error::MatroidError;

pub fn to_mtx(m: &Matroid) -> String {
    let mut out = format!("n={} k={}\n", m.n(), m.k());
    for b in m.bases() {
        let labels: Vec<String> = b.labels().map(|l| l.to_string()).collect();
        let _ = writeln!(out, "{}", labels.join(" "));
    }
    out
}

pub fn parse_mtx(text: &str) -> Result<Matroid, MatroidError> {
    let err = |line: usize, msg: String| MatroidError::Parse { line, msg };
    let mut header: Option<(usize, usize)> = None;
    let mut bases = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        let Some((n, k)) = header else {
            if line.is_empty() {
                continue;
            }
            header = Some(parse_header(line).map_err(|m| err(line_no, m))?);
            continue;
        };
        if line.is_empty() {
            continue;
        }
        let mut mask = SubsetMask::EMPTY;
        for tok in line.split_whitespace() {
            let l: usize = tok
                .parse()
                .map_err(|_| err(line_no, format!("bad element label `{tok}`")))?;
            if l == 0 || l > n {
                return Err(err(line_no, format!("label {l} outside 1..={n}")));
            }
            if mask.contains(l) {
                return Err(err(line_no, format!("label {l} repeated")));
            }
            mask = mask.with(l);
        }
        if mask.len() != k {
            return Err(err(
                line_no,
                format!("basis has {} elements, header says k={k}", mask.len()),
            ));
        }
        bases.push(mask);
    }
    let (n, k) = header.ok_or_else(|| err(0, "missing `n=<int> k=<int>` header".into()))?;
    if k > n {
        return Err(err(0, format!("k={k} exceeds n={n}")));
    }
    if k == 0 {
        bases = vec![SubsetMask::EMPTY];
    }
    Matroid::from_bases(n, bases)
}

fn parse_header(line: &str) -> Result<(usize, usize), String> {
    let mut n = None;
    let mut k = None;
    for tok in line.split_whitespace() {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| format!("expected `key=value`, got `{tok}`"))?;
        let value: usize = value
            .parse()
            .map_err(|_| format!("bad integer in `{tok}`"))?;
        match key {
            "n" => n = Some(value),
            "k" => k = Some(value),
            _ => return Err(format!("unknown header key `{key}`")),
        }
    }
    match (n, k) {
        (Some(n), Some(k)) => Ok((n, k)),
        _ => Err("header must give both n and k".into()),
    }
}
