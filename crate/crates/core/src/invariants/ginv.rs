use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::Value;

use crate::error::InvariantError;
use crate::matroid::{k_subsets, Matroid, SubsetMask};

/// Largest ground set for which G-invariants are computed.
pub const GINV_CAP: usize = 12;

/// Coefficients of the G-invariant, keyed by rank-increment strings such
/// as `"1010"` (first character = first increment). Zero entries are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GInvariantVector {
    n: usize,
    k: usize,
    coeffs: BTreeMap<String, u64>,
}

/// Every weight-`k` key of length `n`, sorted descending.
pub fn g_keys(n: usize, k: usize) -> Vec<String> {
    let mut keys: Vec<String> = k_subsets(n, k).into_iter().map(|s| key_of(s, n)).collect();
    keys.sort_unstable_by(|a, b| b.cmp(a));
    keys
}

/// Position `i` (1-based) of the string is `'1'` iff label `i` is in `s`.
fn key_of(s: SubsetMask, n: usize) -> String {
    (1..=n)
        .map(|i| if s.contains(i) { '1' } else { '0' })
        .collect()
}

impl GInvariantVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, key: &str) -> u64 {
        self.coeffs.get(key).copied().unwrap_or(0)
    }

    /// Nonzero entries, bitstring descending.
    pub fn entries(&self) -> impl Iterator<Item = (&str, u64)> {
        self.coeffs.iter().rev().map(|(s, &c)| (s.as_str(), c))
    }

    pub fn total(&self) -> u128 {
        self.coeffs.values().map(|&c| c as u128).sum()
    }

    /// Builds a vector from `(key, coeff)` pairs, rejecting keys of the
    /// wrong shape or weight.
    pub fn from_entries<'a, I>(n: usize, k: usize, entries: I) -> Result<Self, String>
    where
        I: IntoIterator<Item = (&'a str, u64)>,
    {
        let mut coeffs = BTreeMap::new();
        for (key, c) in entries {
            let well_formed = key.len() == n
                && key.chars().all(|ch| ch == '0' || ch == '1')
                && key.chars().filter(|&ch| ch == '1').count() == k;
            if !well_formed {
                return Err(format!("bad G-invariant key `{key}` for n={n}, k={k}"));
            }
            if c != 0 {
                *coeffs.entry(key.to_string()).or_insert(0) += c;
            }
        }
        Ok(GInvariantVector { n, k, coeffs })
    }

    /// Coefficients in the order of [`g_keys`].
    pub fn to_vector(&self) -> Vec<BigInt> {
        g_keys(self.n, self.k)
            .iter()
            .map(|key| BigInt::from(self.get(key)))
            .collect()
    }

    /// Inverse of [`GInvariantVector::to_vector`]; fails on negative entries.
    pub fn from_vector(n: usize, k: usize, v: &[BigInt]) -> Option<Self> {
        let keys = g_keys(n, k);
        if keys.len() != v.len() {
            return None;
        }
        let mut coeffs = BTreeMap::new();
        for (key, c) in keys.into_iter().zip(v) {
            let c = u64::try_from(c).ok()?;
            if c != 0 {
                coeffs.insert(key, c);
            }
        }
        Some(GInvariantVector { n, k, coeffs })
    }

    /// The G-invariant of the dual, via `s ↦ reverse(1 − s)`.
    pub fn dual(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(key, &c)| {
                let flipped = key
                    .chars()
                    .rev()
                    .map(|ch| if ch == '1' { '0' } else { '1' })
                    .collect();
                (flipped, c)
            })
            .collect();
        GInvariantVector {
            n: self.n,
            k: self.n - self.k,
            coeffs,
        }
    }

    /// `[["1100", 24], ...]`, bitstring descending.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries()
                .map(|(key, c)| Value::Array(vec![Value::from(key), Value::from(c)]))
                .collect(),
        )
    }
}

impl std::fmt::Display for GInvariantVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .entries()
            .map(|(key, c)| format!("{c}*U[{key}]"))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Counts permutations by their prefix rank-increment sequence.
///
/// For each candidate sequence, a chain-counting pass over subsets in
/// ascending integer order (every subset before its supersets) propagates
/// the number of maximal chains whose increments match so far.
pub fn g_invariant(m: &Matroid) -> Result<GInvariantVector, InvariantError> {
    let (n, k) = (m.n(), m.k());
    if n > GINV_CAP {
        return Err(InvariantError::SizeCapExceeded {
            what: "G-invariant",
            cap: GINV_CAP,
            n,
        });
    }
    let ranks = m.rank_table();
    let coeffs: BTreeMap<String, u64> = k_subsets(n, k)
        .into_par_iter()
        .filter_map(|seq| {
            let c = count_chains(ranks, n, seq);
            (c != 0).then(|| (key_of(seq, n), c))
        })
        .collect();
    Ok(GInvariantVector { n, k, coeffs })
}

fn count_chains(ranks: &[u8], n: usize, seq: SubsetMask) -> u64 {
    let size = 1usize << n;
    let mut h = vec![0u64; size];
    h[0] = 1;
    for s in 0..size - 1 {
        let count = h[s];
        if count == 0 {
            continue;
        }
        let step = s.count_ones() as usize + 1;
        let want = u8::from(seq.contains(step));
        let mut rest = !s & (size - 1);
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if ranks[s | bit] - ranks[s] == want {
                h[s | bit] += count;
            }
            rest &= rest - 1;
        }
    }
    h[size - 1]
}
