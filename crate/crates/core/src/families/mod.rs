//! Named matroids, the generating families, stressed subsets, class
//! membership and closed-form invariants.

mod classify;
mod closed_form;
mod descriptor;
mod gsplit;
mod stressed;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

pub use classify::{
    classify, is_elementary_split, is_schubert, proper_cyclic_flats_form_clutter, ClassReport,
    Witness,
};
pub use closed_form::{
    closed_form_tutte, cuspidal_shifted_tutte, tutte_minimal, tutte_minimal_expanded,
    tutte_uniform_with_loops_coloops,
};
pub use descriptor::MatroidDescriptor;
pub use gsplit::g_split;
pub use stressed::{
    cusp, is_stressed, relax, relax_all, relax_in_order, stressed_report, StressedEntry,
    StressedReport, STRESSED_CAP,
};

use crate::matroid::canonical_form;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Cuspidal,
    /// Uniform matroids with added loops and coloops.
    ClassU,
    /// Minimal matroids with added loops and coloops.
    ClassT,
    /// The disconnected partition matroids of class N.
    ClassNDisconnected,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Cuspidal => "cuspidal",
            FamilyKind::ClassU => "class-u",
            FamilyKind::ClassT => "class-t",
            FamilyKind::ClassNDisconnected => "class-n-disconnected",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "cuspidal" => Ok(FamilyKind::Cuspidal),
            "class-u" => Ok(FamilyKind::ClassU),
            "class-t" => Ok(FamilyKind::ClassT),
            "class-n-disconnected" => Ok(FamilyKind::ClassNDisconnected),
            _ => Err(format!("unknown family `{s}`")),
        }
    }
}

type D = MatroidDescriptor;

/// Members of a generating family of rank `k` on `n` elements, in a fixed
/// order, with isomorphic duplicates removed (first occurrence kept).
pub fn family(kind: FamilyKind, n: usize, k: usize) -> Vec<MatroidDescriptor> {
    assert!(k <= n, "rank {k} exceeds size {n}");
    let raw = match kind {
        FamilyKind::Cuspidal => {
            let mut out = vec![D::uniform(k, n)];
            for r in 1..=k {
                for h in r..r + (n - k) {
                    out.push(D::cuspidal(r, k, h, n));
                }
            }
            out
        }
        FamilyKind::ClassU | FamilyKind::ClassT => {
            let mut out = Vec::new();
            for l in 0..k {
                for m in 0..n - k {
                    let middle = if kind == FamilyKind::ClassU {
                        D::uniform(k - l, n - l - m)
                    } else {
                        D::minimal(k - l, n - l - m)
                    };
                    out.push(D::sum([D::uniform(0, m), middle, D::uniform(l, l)]));
                }
            }
            out.push(D::sum([D::uniform(0, n - k), D::uniform(k, k)]));
            out
        }
        FamilyKind::ClassNDisconnected => {
            let mut out = Vec::new();
            for l in 0..=k.min(n - k) {
                let mut parts = vec![D::uniform(0, n - k - l)];
                parts.extend(std::iter::repeat_n(D::uniform(1, 2), l));
                parts.push(D::uniform(k - l, k - l));
                out.push(D::sum(parts));
            }
            if k == 1 {
                for l in 3..n {
                    out.push(D::sum([D::uniform(0, n - l), D::uniform(1, l)]));
                }
            }
            if k + 1 == n {
                for l in 3..n {
                    out.push(D::sum([D::uniform(l - 1, l), D::uniform(n - l, n - l)]));
                }
            }
            out
        }
    };
    dedup_by_isomorphism(raw)
}

/// The class-N generating set: the disconnected members together with
/// `U_{k,n}` and `Λ_{1,k,n−k,n}`.
pub fn class_n_generators(n: usize, k: usize) -> Vec<MatroidDescriptor> {
    let mut out = family(FamilyKind::ClassNDisconnected, n, k);
    out.push(D::uniform(k, n));
    if 1 <= k && k < n {
        out.push(D::cuspidal(1, k, n - k, n));
    }
    dedup_by_isomorphism(out)
}

fn dedup_by_isomorphism(list: Vec<MatroidDescriptor>) -> Vec<MatroidDescriptor> {
    let mut seen = HashSet::new();
    list.into_iter()
        .filter(|d| {
            let m = d.realize().expect("family members are admissible");
            seen.insert(canonical_form(&m))
        })
        .collect()
}
