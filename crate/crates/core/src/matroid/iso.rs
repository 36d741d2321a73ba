//! Canonical labeling by partition refinement with individualization.
//!
//! Elements start in one cell and are split by their pair statistics
//! (number of bases containing both `e` and `f`). When refinement stalls,
//! the first non-singleton cell is individualized one element at a time.
//! Each discrete leaf induces a relabeling; the canonical key is the
//! lexicographically smallest sorted basis list over all leaves. Elements
//! whose transposition is an automorphism ("twins") are branched on once.

use serde::Serialize;

use super::{Matroid, SubsetMask};

/// Lexicographically minimal basis list over the search tree's relabelings.
///
/// Two matroids have equal forms iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm {
    n: usize,
    k: usize,
    key: Vec<u32>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Sorted basis masks of the canonical relabeling.
    pub fn key(&self) -> &[u32] {
        &self.key
    }

    /// The canonical representative itself.
    pub fn to_matroid(&self) -> Matroid {
        Matroid::from_sorted_unchecked(self.n, self.key.iter().map(|&b| SubsetMask(b)).collect())
    }
}

pub fn canonical_form(m: &Matroid) -> CanonicalForm {
    canonical_labeling(m).0
}

/// Canonical form together with a permutation `perm` (1-based) such that
/// `m.relabel(&perm)` is the canonical representative.
pub fn canonical_labeling(m: &Matroid) -> (CanonicalForm, Vec<usize>) {
    let n = m.n();
    if n == 0 {
        return (
            CanonicalForm {
                n,
                k: 0,
                key: vec![0],
            },
            Vec::new(),
        );
    }
    let pairs = pair_counts(m);
    let twin_rep = twin_representatives(m, &pairs);
    let mut search = Search {
        m,
        pairs: &pairs,
        twin_rep: &twin_rep,
        best: None,
    };
    let root = refine(&pairs, vec![(0..n).collect()]);
    search.descend(root);
    let (key, perm) = search.best.expect("search visits at least one leaf");
    (CanonicalForm { n, k: m.k(), key }, perm)
}

/// Cheap invariants first, canonical forms only when those agree.
pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> bool {
    if a.n() != b.n() || a.k() != b.k() || a.bases().len() != b.bases().len() {
        return false;
    }
    if a.loops().len() != b.loops().len() || a.coloops().len() != b.coloops().len() {
        return false;
    }
    let mut da = a.element_degrees();
    let mut db = b.element_degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

fn pair_counts(m: &Matroid) -> Vec<Vec<u32>> {
    let n = m.n();
    let mut pairs = vec![vec![0u32; n]; n];
    for b in m.bases() {
        let elems: Vec<usize> = b.labels().map(|l| l - 1).collect();
        for &i in &elems {
            for &j in &elems {
                pairs[i][j] += 1;
            }
        }
    }
    pairs
}

/// `rep[e]` is the smallest element whose transposition with `e` is an
/// automorphism. The relation is an equivalence: `(i j)` and `(j k)`
/// automorphisms make `(i k)` one too.
fn twin_representatives(m: &Matroid, pairs: &[Vec<u32>]) -> Vec<usize> {
    let n = m.n();
    let mut rep: Vec<usize> = (0..n).collect();
    for j in 0..n {
        for i in 0..j {
            if rep[i] != i || pairs[i][i] != pairs[j][j] {
                continue;
            }
            if transposition_is_automorphism(m, i, j) {
                rep[j] = i;
                break;
            }
        }
    }
    rep
}

fn transposition_is_automorphism(m: &Matroid, i: usize, j: usize) -> bool {
    let (bi, bj) = (1u32 << i, 1u32 << j);
    m.bases().iter().all(|b| {
        let x = b.bits();
        let swapped = if (x & bi != 0) == (x & bj != 0) {
            x
        } else {
            x ^ bi ^ bj
        };
        m.is_basis(SubsetMask(swapped))
    })
}

type Cells = Vec<Vec<usize>>;

fn refine(pairs: &[Vec<u32>], mut cells: Cells) -> Cells {
    let n = pairs.len();
    loop {
        let mut cell_of = vec![0usize; n];
        for (c, cell) in cells.iter().enumerate() {
            for &e in cell {
                cell_of[e] = c;
            }
        }
        let signature = |e: usize| {
            let mut sig: Vec<(usize, u32)> = (0..n)
                .filter(|&f| f != e)
                .map(|f| (cell_of[f], pairs[e][f]))
                .collect();
            sig.sort_unstable();
            (pairs[e][e], sig)
        };
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<_> = cell.iter().map(|&e| (signature(e), e)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, e)| *e).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

struct Search<'a> {
    m: &'a Matroid,
    pairs: &'a [Vec<u32>],
    twin_rep: &'a [usize],
    best: Option<(Vec<u32>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Cells) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = &cells[target];
        let mut seen_classes: Vec<usize> = Vec::new();
        for &e in cell {
            let class = self.twin_rep[e];
            if seen_classes.contains(&class) {
                continue;
            }
            seen_classes.push(class);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![e]);
            next.push(cell.iter().copied().filter(|&f| f != e).collect());
            next.extend_from_slice(&cells[target + 1..]);
            let next = refine(self.pairs, next);
            self.descend(next);
        }
    }

    fn leaf(&mut self, cells: &Cells) {
        let n = self.m.n();
        let mut perm = vec![0usize; n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos + 1;
        }
        let mut key: Vec<u32> = self
            .m
            .bases()
            .iter()
            .map(|b| b.permute(&perm).bits())
            .collect();
        key.sort_unstable();
        match &self.best {
            Some((best, _)) if *best <= key => {}
            _ => self.best = Some((key, perm)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t24_alt() -> Matroid {
        // parallel pair {1,2}
        let all = super::super::k_subsets(4, 2);
        let bases = all
            .into_iter()
            .filter(|&b| b != SubsetMask::from_labels([1, 2]));
        Matroid::from_bases(4, bases).unwrap()
    }

    fn t24() -> Matroid {
        let all = super::super::k_subsets(4, 2);
        let bases = all
            .into_iter()
            .filter(|&b| b != SubsetMask::from_labels([3, 4]));
        Matroid::from_bases(4, bases).unwrap()
    }

    #[test]
    fn relabeled_minimal_matroids_are_isomorphic() {
        assert!(is_isomorphic(&t24(), &t24_alt()));
        assert_eq!(canonical_form(&t24()), canonical_form(&t24_alt()));
    }

    #[test]
    fn loop_count_distinguishes() {
        let a = Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(1, 2));
        let b = Matroid::uniform(0, 1)
            .direct_sum(&Matroid::uniform(1, 2))
            .direct_sum(&Matroid::uniform(1, 1));
        assert!(!is_isomorphic(&a, &b));
    }

    #[test]
    fn labeling_reproduces_form() {
        let m = t24_alt().direct_sum(&Matroid::uniform(1, 3));
        let (form, perm) = canonical_labeling(&m);
        assert_eq!(m.relabel(&perm), form.to_matroid());
    }

    #[test]
    fn empty_matroid_form() {
        let f = canonical_form(&Matroid::uniform(0, 0));
        assert_eq!(f.to_matroid(), Matroid::uniform(0, 0));
    }
}
