//! Stressed subsets, cusps and relaxations.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{FamilyError, MatroidError};
use crate::matroid::{k_subsets, Matroid, SubsetMask};

/// Largest ground set scanned for stressed subsets.
pub const STRESSED_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StressedEntry {
    pub set: SubsetMask,
    pub rank: usize,
    pub size: usize,
    /// `k`-sets meeting `set` in more than `rank` elements, ascending.
    pub cusp: Vec<SubsetMask>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StressedReport {
    /// Every stressed subset, by ascending mask.
    pub entries: Vec<StressedEntry>,
    /// `(rank, size) → number of stressed subsets with nonempty cusp`.
    pub lambda: BTreeMap<(usize, usize), usize>,
}

/// Iterates the subsets of `within` that have exactly `size` elements.
fn submasks_of_size(within: SubsetMask, size: usize) -> impl Iterator<Item = SubsetMask> {
    let full = within.bits();
    let mut next = Some(full);
    std::iter::from_fn(move || {
        let cur = next?;
        next = (cur != 0).then(|| (cur - 1) & full);
        Some(SubsetMask(cur))
    })
    .filter(move |s| s.len() == size)
}

/// Both `M|A` and `M/A` are uniform.
pub fn is_stressed(m: &Matroid, a: SubsetMask) -> bool {
    let r = m.rank(a);
    let restriction_uniform = submasks_of_size(a, r).all(|s| m.is_independent(s));
    if !restriction_uniform {
        return false;
    }
    // M/A is uniform iff every (k − r)-subset of E∖A spans M together with A.
    let rest = m.ground().difference(a);
    submasks_of_size(rest, m.k() - r).all(|s| m.rank(s.union(a)) == m.k())
}

pub fn cusp(m: &Matroid, a: SubsetMask) -> Vec<SubsetMask> {
    let r = m.rank(a);
    k_subsets(m.n(), m.k())
        .into_iter()
        .filter(|s| s.intersection(a).len() > r)
        .collect()
}

pub fn stressed_report(m: &Matroid) -> Result<StressedReport, FamilyError> {
    let n = m.n();
    if n > STRESSED_CAP {
        return Err(MatroidError::SizeCapExceeded {
            what: "stressed-subset scan",
            cap: STRESSED_CAP,
            n,
        }
        .into());
    }
    let mut entries = Vec::new();
    let mut lambda = BTreeMap::new();
    for bits in 0..(1u32 << n) {
        let a = SubsetMask(bits);
        if !is_stressed(m, a) {
            continue;
        }
        let rank = m.rank(a);
        let c = cusp(m, a);
        if !c.is_empty() {
            *lambda.entry((rank, a.len())).or_insert(0) += 1;
        }
        entries.push(StressedEntry {
            set: a,
            rank,
            size: a.len(),
            cusp: c,
        });
    }
    Ok(StressedReport { entries, lambda })
}

/// Adds the cusp of a stressed subset to the bases.
pub fn relax(m: &Matroid, a: SubsetMask) -> Result<Matroid, FamilyError> {
    if !a.fits(m.n()) || !is_stressed(m, a) {
        return Err(FamilyError::NotStressed(a));
    }
    let c = cusp(m, a);
    if c.is_empty() {
        return Err(FamilyError::EmptyCusp(a));
    }
    let mut bases = m.bases().to_vec();
    bases.extend(c);
    Ok(Matroid::from_unsorted_unchecked(m.n(), bases))
}

/// Relaxes stressed subsets with nonempty cusp until none is left.
///
/// Subsets are visited by ascending `(size, mask)`; after each pass the
/// matroid is rescanned, since a relaxation can create new stressed
/// subsets with nonempty cusp.
pub fn relax_all(m: &Matroid) -> Result<Matroid, FamilyError> {
    let mut cur = m.clone();
    loop {
        let mut pending: Vec<SubsetMask> = stressed_report(&cur)?
            .entries
            .into_iter()
            .filter(|e| !e.cusp.is_empty())
            .map(|e| e.set)
            .collect();
        if pending.is_empty() {
            return Ok(cur);
        }
        pending.sort_by_key(|a| (a.len(), *a));
        for a in pending {
            if is_stressed(&cur, a) && !cusp(&cur, a).is_empty() {
                cur = relax(&cur, a)?;
            }
        }
    }
}

/// Relaxes exactly the stressed subsets of `m` with nonempty cusp, in the
/// given order, without rescanning.
pub fn relax_in_order(m: &Matroid, order: &[SubsetMask]) -> Result<Matroid, FamilyError> {
    let mut cur = m.clone();
    for &a in order {
        cur = relax(&cur, a)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::is_isomorphic;

    fn two_pairs() -> Matroid {
        Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(1, 2))
    }

    fn t24() -> Matroid {
        let bases = k_subsets(4, 2)
            .into_iter()
            .filter(|&b| b != SubsetMask::from_labels([3, 4]));
        Matroid::from_bases(4, bases).unwrap()
    }

    #[test]
    fn pair_block_is_stressed() {
        let m = two_pairs();
        let a = SubsetMask::from_labels([3, 4]);
        assert!(is_stressed(&m, a));
        assert_eq!(cusp(&m, a), vec![a]);
    }

    #[test]
    fn uniform_cusps_are_empty() {
        let report = stressed_report(&Matroid::uniform(2, 5)).unwrap();
        assert_eq!(report.entries.len(), 32);
        assert!(report.entries.iter().all(|e| e.cusp.is_empty()));
        assert!(report.lambda.is_empty());
    }

    #[test]
    fn minimal_matroid_profile() {
        let report = stressed_report(&t24()).unwrap();
        assert_eq!(report.lambda, BTreeMap::from([((1, 2), 1)]));
    }

    #[test]
    fn relaxing_a_pair_gives_minimal() {
        let r = relax(&two_pairs(), SubsetMask::from_labels([3, 4])).unwrap();
        assert_eq!(r.bases().len(), 5);
        assert!(is_isomorphic(&r, &t24()));
        assert!(!r.is_basis(SubsetMask::from_labels([1, 2])));
    }

    #[test]
    fn relax_errors() {
        let u = Matroid::uniform(2, 4);
        assert!(matches!(
            relax(&u, SubsetMask::from_labels([1, 2])),
            Err(FamilyError::EmptyCusp(_))
        ));
        let m = Matroid::uniform(0, 1)
            .direct_sum(&Matroid::uniform(1, 2))
            .direct_sum(&Matroid::uniform(1, 1));
        // {1, 4}: restriction U_{0,1} ⊕ U_{1,1} is not uniform.
        assert!(matches!(
            relax(&m, SubsetMask::from_labels([1, 4])),
            Err(FamilyError::NotStressed(_))
        ));
    }

    #[test]
    fn relax_all_of_uniform_is_identity() {
        let u = Matroid::uniform(3, 6);
        assert_eq!(relax_all(&u).unwrap(), u);
        assert!(relax_all(&two_pairs()).unwrap().is_uniform());
    }
}
