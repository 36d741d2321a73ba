//! Exhaustive enumeration of basis systems on `{1..n}`.
//!
//! The `k`-subsets are decided in ascending mask order (in or out). Each
//! exchange triple `(B1, B2, e)` is checked exactly once, at the step where
//! the last of `B1`, `B2` and the exchange candidates `B1 − e + f` gets
//! decided, and the branch is cut if the triple fails.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{canonical_form, k_subsets, Matroid, SubsetMask};
use crate::error::MatroidError;

/// Default cap for exhaustive enumeration.
pub const EXHAUSTIVE_CAP: usize = 6;

/// Absolute cap, reachable only through an explicit override.
const HARD_CAP: usize = 7;

/// All matroids of rank `k` on `{1..n}`, or one canonical representative
/// per isomorphism class when `up_to_iso` is set. Output is sorted.
pub fn enumerate_matroids(
    n: usize,
    k: usize,
    up_to_iso: bool,
) -> Result<Vec<Matroid>, MatroidError> {
    enumerate_matroids_with_cap(n, k, up_to_iso, EXHAUSTIVE_CAP)
}

/// Like [`enumerate_matroids`] with a raised cap (never above 7).
pub fn enumerate_matroids_with_cap(
    n: usize,
    k: usize,
    up_to_iso: bool,
    cap: usize,
) -> Result<Vec<Matroid>, MatroidError> {
    let cap = cap.min(HARD_CAP);
    if n > cap {
        return Err(MatroidError::SizeCapExceeded {
            what: "exhaustive enumeration",
            cap,
            n,
        });
    }
    if k > n {
        return Err(MatroidError::InfeasibleParameters(format!(
            "rank {k} exceeds ground set size {n}"
        )));
    }
    let labeled = labeled_basis_systems(n, k);
    if !up_to_iso {
        return Ok(labeled);
    }
    let forms: BTreeSet<_> = labeled.par_iter().map(canonical_form).collect();
    Ok(forms.into_iter().map(|f| f.to_matroid()).collect())
}

struct Triple {
    b1: usize,
    b2: usize,
    candidates: u64,
}

fn labeled_basis_systems(n: usize, k: usize) -> Vec<Matroid> {
    let sets = k_subsets(n, k);
    let count = sets.len();
    debug_assert!(count <= 64);
    let index_of = |s: SubsetMask| sets.binary_search(&s).expect("k-subset");
    let mut buckets: Vec<Vec<Triple>> = (0..count).map(|_| Vec::new()).collect();
    for (a, &sa) in sets.iter().enumerate() {
        for (b, &sb) in sets.iter().enumerate() {
            if a == b {
                continue;
            }
            let only_b = sb.difference(sa);
            for e in sa.difference(sb).labels() {
                let mut candidates = 0u64;
                let mut last = a.max(b);
                for f in only_b.labels() {
                    let c = index_of(sa.without(e).with(f));
                    candidates |= 1 << c;
                    last = last.max(c);
                }
                buckets[last].push(Triple {
                    b1: a,
                    b2: b,
                    candidates,
                });
            }
        }
    }
    let mut out = Vec::new();
    let mut chosen = 0u64;
    descend(0, &mut chosen, &buckets, &sets, n, &mut out);
    out.sort_by(|x, y| x.bases().cmp(y.bases()));
    out
}

fn descend(
    idx: usize,
    chosen: &mut u64,
    buckets: &[Vec<Triple>],
    sets: &[SubsetMask],
    n: usize,
    out: &mut Vec<Matroid>,
) {
    if idx == sets.len() {
        if *chosen != 0 {
            let bases = (0..sets.len())
                .filter(|&i| *chosen & (1 << i) != 0)
                .map(|i| sets[i])
                .collect();
            out.push(Matroid::from_sorted_unchecked(n, bases));
        }
        return;
    }
    for take in [false, true] {
        if take {
            *chosen |= 1 << idx;
        }
        let ok = buckets[idx].iter().all(|t| {
            *chosen & (1 << t.b1) == 0 || *chosen & (1 << t.b2) == 0 || *chosen & t.candidates != 0
        });
        if ok {
            descend(idx + 1, chosen, buckets, sets, n, out);
        }
        if take {
            *chosen &= !(1 << idx);
        }
    }
}
