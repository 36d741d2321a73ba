//! Matroids stored as basis systems over the ground set `{1..n}`.
//!
//! Bases are the only primary data. Every other notion (rank, closure,
//! cyclic flats, minors) is derived from them through the rank oracle
//! `rk(A) = max |B ∩ A|`, which is memoized per matroid as a `2^n` table.

mod enumerate;
mod iso;
mod mask;
mod minor_search;
pub mod mtx;
mod random;

use std::fmt;
use std::sync::OnceLock;

pub use enumerate::{enumerate_matroids, enumerate_matroids_with_cap, EXHAUSTIVE_CAP};
pub use iso::{canonical_form, is_isomorphic, CanonicalForm};
pub use mask::{binomial, k_subsets, SubsetMask};
pub use minor_search::{find_minor, has_minor_iso, MinorEmbedding};
pub use random::{random_matroid, RandomKind};

use crate::error::MatroidError;

/// Largest ground set accepted by the constructors.
pub const MAX_GROUND_SET: usize = 20;

/// A matroid on `{1..n}` given by its bases.
///
/// Bases are kept sorted as ascending mask integers, which is also the
/// canonical serialization order.
#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<SubsetMask>,
    ranks: OnceLock<Box<[u8]>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl std::hash::Hash for Matroid {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bases.hash(state);
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("k", &self.rank)
            .field("bases", &self.bases)
            .finish()
    }
}

impl Matroid {
    /// Validating constructor: checks sizes, cardinalities and the exchange axiom.
    pub fn from_bases<I>(n: usize, bases: I) -> Result<Self, MatroidError>
    where
        I: IntoIterator<Item = SubsetMask>,
    {
        if n > MAX_GROUND_SET {
            return Err(MatroidError::SizeCapExceeded {
                what: "matroid ground set",
                cap: MAX_GROUND_SET,
                n,
            });
        }
        let mut bases: Vec<SubsetMask> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let first = bases.first().ok_or(MatroidError::EmptyBases)?;
        let k = first.len();
        for &b in &bases {
            if !b.fits(n) {
                return Err(MatroidError::OutOfGroundSet { mask: b, n });
            }
            if b.len() != k {
                return Err(MatroidError::MixedCardinality {
                    first: k,
                    other: b.len(),
                });
            }
        }
        if let Some((b1, b2, e)) = exchange_violation(n, &bases) {
            return Err(MatroidError::ExchangeViolation { b1, b2, e });
        }
        Ok(Self::from_sorted_unchecked(n, bases))
    }

    /// Trusted constructor for bases produced by matroid operations.
    /// `bases` must be sorted, deduplicated and nonempty.
    pub(crate) fn from_sorted_unchecked(n: usize, bases: Vec<SubsetMask>) -> Self {
        debug_assert!(!bases.is_empty());
        debug_assert!(bases.windows(2).all(|w| w[0] < w[1]));
        let rank = bases[0].len();
        Matroid {
            n,
            rank,
            bases,
            ranks: OnceLock::new(),
        }
    }

    pub(crate) fn from_unsorted_unchecked(n: usize, mut bases: Vec<SubsetMask>) -> Self {
        bases.sort_unstable();
        bases.dedup();
        let m = Self::from_sorted_unchecked(n, bases);
        debug_assert!(
            n > 9 || exchange_violation(n, &m.bases).is_none(),
            "operation produced a non-matroid: {m:?}"
        );
        m
    }

    /// The uniform matroid `U_{k,n}`.
    pub fn uniform(k: usize, n: usize) -> Self {
        assert!(k <= n, "U_{{{k},{n}}} is not a matroid");
        Self::from_sorted_unchecked(n, k_subsets(n, k))
    }

    /// Ground-set size.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the matroid, i.e. the common size of its bases.
    #[inline]
    pub fn k(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn bases(&self) -> &[SubsetMask] {
        &self.bases
    }

    #[inline]
    pub fn ground(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn is_basis(&self, s: SubsetMask) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub(crate) fn rank_table(&self) -> &[u8] {
        self.ranks
            .get_or_init(|| build_rank_table(self.n, &self.bases))
    }

    /// `rk(A)`, the largest intersection of `A` with a basis.
    #[inline]
    pub fn rank(&self, a: SubsetMask) -> usize {
        debug_assert!(a.fits(self.n));
        self.rank_table()[a.bits() as usize] as usize
    }

    pub fn is_independent(&self, a: SubsetMask) -> bool {
        self.rank(a) == a.len()
    }

    pub fn closure(&self, a: SubsetMask) -> SubsetMask {
        let r = self.rank(a);
        let mut out = a;
        for e in a.complement(self.n).labels() {
            if self.rank(a.with(e)) == r {
                out = out.with(e);
            }
        }
        out
    }

    pub fn is_flat(&self, a: SubsetMask) -> bool {
        self.closure(a) == a
    }

    pub fn loops(&self) -> SubsetMask {
        let mut union = SubsetMask::EMPTY;
        for &b in &self.bases {
            union = union.union(b);
        }
        union.complement(self.n)
    }

    pub fn coloops(&self) -> SubsetMask {
        let mut inter = self.ground();
        for &b in &self.bases {
            inter = inter.intersection(b);
        }
        inter
    }

    pub fn is_uniform(&self) -> bool {
        binomial(self.n, self.rank) == self.bases.len() as u64
    }

    /// Complement bases; rank `n - k`.
    pub fn dual(&self) -> Matroid {
        let bases = self.bases.iter().map(|b| b.complement(self.n)).collect();
        Self::from_unsorted_unchecked(self.n, bases)
    }

    /// `M / contract \ delete`, relabeled onto `1..n'` in ascending order of
    /// the surviving elements.
    ///
    /// A maximal independent subset of `contract` is chosen greedily in
    /// ascending label order; the minor's bases are the sets `B'` for which
    /// `B'` together with that subset is a basis of `M \ delete`.
    pub fn minor(&self, contract: SubsetMask, delete: SubsetMask) -> Result<Matroid, MatroidError> {
        if !contract.intersection(delete).is_empty() {
            return Err(MatroidError::OverlappingSets { contract, delete });
        }
        for s in [contract, delete] {
            if !s.fits(self.n) {
                return Err(MatroidError::OutOfGroundSet { mask: s, n: self.n });
            }
        }
        let mut indep = SubsetMask::EMPTY;
        for e in contract.labels() {
            if self.rank(indep.with(e)) > indep.len() {
                indep = indep.with(e);
            }
        }
        let kept_ground = self.ground().difference(delete);
        let rest = kept_ground.difference(contract);
        let r_kept = self.rank(kept_ground);
        let bases: Vec<SubsetMask> = self
            .bases
            .iter()
            .map(|b| b.intersection(kept_ground))
            .filter(|d| d.len() == r_kept && d.intersection(contract) == indep)
            .map(|d| d.difference(contract).compress(rest))
            .collect();
        Ok(Self::from_unsorted_unchecked(rest.len(), bases))
    }

    pub fn restriction(&self, a: SubsetMask) -> Matroid {
        self.minor(SubsetMask::EMPTY, a.complement(self.n))
            .expect("restriction sets are disjoint")
    }

    pub fn contraction(&self, a: SubsetMask) -> Matroid {
        self.minor(a, SubsetMask::EMPTY)
            .expect("contraction sets are disjoint")
    }

    pub fn delete_element(&self, e: usize) -> Matroid {
        self.minor(SubsetMask::EMPTY, SubsetMask::singleton(e))
            .expect("single deletion")
    }

    pub fn contract_element(&self, e: usize) -> Matroid {
        self.minor(SubsetMask::singleton(e), SubsetMask::EMPTY)
            .expect("single contraction")
    }

    /// `M ⊕ N`; the labels of `N` are shifted up by `n(M)`.
    pub fn direct_sum(&self, other: &Matroid) -> Matroid {
        let n = self.n + other.n;
        assert!(n <= MAX_GROUND_SET, "direct sum exceeds ground-set cap");
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                bases.push(b1.union(b2.shift(self.n)));
            }
        }
        Self::from_unsorted_unchecked(n, bases)
    }

    /// Relabels element `i` to `perm[i - 1]` (a permutation of `1..=n`).
    pub fn relabel(&self, perm: &[usize]) -> Matroid {
        assert_eq!(perm.len(), self.n);
        let bases = self.bases.iter().map(|b| b.permute(perm)).collect();
        Self::from_unsorted_unchecked(self.n, bases)
    }

    /// Cyclic flats with their ranks, sorted by `(rank, mask)`.
    pub fn cyclic_flats(&self) -> Vec<(SubsetMask, usize)> {
        let mut out = Vec::new();
        for bits in 0..(1u32 << self.n) {
            let f = SubsetMask(bits);
            let r = self.rank(f);
            let cyclic = f.labels().all(|e| self.rank(f.without(e)) == r);
            if cyclic && self.is_flat(f) {
                out.push((f, r));
            }
        }
        out.sort_by_key(|&(f, r)| (r, f));
        out
    }

    /// No separator `∅ ≠ A ≠ E` with `rk(A) + rk(E∖A) = k`.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        // Keeping element 1 out of `a` visits every split once.
        (1..(1u32 << (self.n - 1))).all(|bits| {
            let a = SubsetMask(bits << 1);
            let b = a.complement(self.n);
            self.rank(a) + self.rank(b) != self.rank
        })
    }

    /// Every circuit has at least `k` elements.
    pub fn is_paving(&self) -> bool {
        self.rank == 0
            || k_subsets(self.n, self.rank - 1)
                .into_iter()
                .all(|s| self.is_independent(s))
    }

    pub fn is_sparse_paving(&self) -> bool {
        self.is_paving() && self.dual().is_paving()
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        self.loops().is_empty()
            && k_subsets(self.n, 2.min(self.n))
                .into_iter()
                .all(|s| self.is_independent(s))
    }

    /// Number of bases containing each element, indexed by label − 1.
    pub fn element_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for b in &self.bases {
            for e in b.labels() {
                deg[e - 1] += 1;
            }
        }
        deg
    }
}

fn build_rank_table(n: usize, bases: &[SubsetMask]) -> Box<[u8]> {
    let size = 1usize << n;
    let mut indep = vec![false; size];
    for b in bases {
        indep[b.bits() as usize] = true;
    }
    // Supersets have larger integer values, so one descending sweep closes
    // the independent sets downward.
    for s in (0..size).rev() {
        if indep[s] {
            continue;
        }
        let mut rest = !s & (size - 1);
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if indep[s | bit] {
                indep[s] = true;
                break;
            }
            rest &= rest - 1;
        }
    }
    let mut ranks = vec![0u8; size];
    for s in 1..size {
        if indep[s] {
            ranks[s] = s.count_ones() as u8;
        } else {
            let mut best = 0;
            let mut rest = s;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                best = best.max(ranks[s ^ bit]);
                rest &= rest - 1;
            }
            ranks[s] = best;
        }
    }
    ranks.into_boxed_slice()
}

/// First violating triple `(B1, B2, e)` of the exchange axiom, if any.
pub(crate) fn exchange_violation(
    n: usize,
    bases: &[SubsetMask],
) -> Option<(SubsetMask, SubsetMask, usize)> {
    let mut member = vec![false; 1usize << n];
    for b in bases {
        member[b.bits() as usize] = true;
    }
    for &b1 in bases {
        for &b2 in bases {
            let only2 = b2.difference(b1);
            for e in b1.difference(b2).labels() {
                let base = b1.without(e);
                if !only2.labels().any(|f| member[base.with(f).bits() as usize]) {
                    return Some((b1, b2, e));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn masks(n: usize, list: &[&[usize]]) -> Vec<SubsetMask> {
        let _ = n;
        list.iter()
            .map(|l| SubsetMask::from_labels(l.iter().copied()))
            .collect()
    }

    fn t24() -> Matroid {
        // all 2-sets except {3,4}
        Matroid::from_bases(4, masks(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4]])).unwrap()
    }

    #[test]
    fn from_bases_accepts_t24_like() {
        let m = t24();
        assert_eq!(m.k(), 2);
        assert_eq!(m.bases().len(), 5);
    }

    #[test]
    fn empty_matroid() {
        let m = Matroid::from_bases(0, [SubsetMask::EMPTY]).unwrap();
        assert_eq!(m.k(), 0);
        assert_eq!(m.rank(SubsetMask::EMPTY), 0);
        assert_eq!(m, Matroid::uniform(0, 0));
    }

    #[test]
    fn three_bases_of_u24_fail_exchange() {
        // {1,2}, {3,4}, {1,3}: B1={1,2}, B2={3,4}, e=2 needs {1,3} or {1,4};
        // {1,3} is present. B1={3,4}, B2={1,2}, e=3 needs {1,4} or {2,4}: absent.
        let r = Matroid::from_bases(4, masks(4, &[&[1, 2], &[3, 4], &[1, 3]]));
        assert!(
            matches!(r, Err(MatroidError::ExchangeViolation { .. })),
            "{r:?}"
        );
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            Matroid::from_bases(3, Vec::<SubsetMask>::new()),
            Err(MatroidError::EmptyBases)
        );
        assert!(matches!(
            Matroid::from_bases(3, masks(3, &[&[1], &[1, 2]])),
            Err(MatroidError::MixedCardinality { .. })
        ));
        assert!(matches!(
            Matroid::from_bases(2, masks(3, &[&[3]])),
            Err(MatroidError::OutOfGroundSet { .. })
        ));
    }

    #[test]
    fn rank_examples() {
        let u24 = Matroid::uniform(2, 4);
        assert_eq!(u24.rank(SubsetMask::from_labels([1, 2, 3])), 2);
        let m = Matroid::uniform(0, 2).direct_sum(&Matroid::uniform(2, 2));
        assert_eq!(m.rank(SubsetMask::from_labels([1, 2])), 0);
        assert_eq!(t24().rank(SubsetMask::from_labels([3, 4])), 1);
    }

    #[test]
    fn dual_examples() {
        let u24 = Matroid::uniform(2, 4);
        assert_eq!(u24.dual(), u24);
        let m = t24();
        assert_eq!(m.dual().dual(), m);
        let a = Matroid::uniform(1, 3).direct_sum(&Matroid::uniform(1, 1));
        let b = Matroid::uniform(2, 3).direct_sum(&Matroid::uniform(0, 1));
        assert_eq!(a.dual(), b);
    }

    #[test]
    fn minor_examples() {
        let u24 = Matroid::uniform(2, 4);
        assert_eq!(
            u24.minor(SubsetMask::singleton(3), SubsetMask::EMPTY)
                .unwrap(),
            Matroid::uniform(1, 3)
        );
        let m = t24();
        assert_eq!(m.minor(SubsetMask::EMPTY, SubsetMask::EMPTY).unwrap(), m);
        let two = Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(1, 2));
        let got = two.contract_element(1);
        let expect = Matroid::uniform(0, 1).direct_sum(&Matroid::uniform(1, 2));
        assert_eq!(got, expect);
        assert!(matches!(
            u24.minor(SubsetMask::singleton(1), SubsetMask::from_labels([1, 2])),
            Err(MatroidError::OverlappingSets { .. })
        ));
    }

    #[test]
    fn minor_rank_with_dependent_deletion() {
        // Deleting both coloops of U_{1,2} ⊕ U_{2,2} drops the rank by two.
        let m = Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(2, 2));
        let d = m
            .minor(SubsetMask::EMPTY, SubsetMask::from_labels([3, 4]))
            .unwrap();
        assert_eq!(d, Matroid::uniform(1, 2));
    }

    #[test]
    fn direct_sum_examples() {
        let m = Matroid::uniform(1, 1).direct_sum(&Matroid::uniform(0, 1));
        assert_eq!(m.bases(), &[SubsetMask::from_labels([1])]);
        let s = Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(1, 2));
        assert_eq!(s.bases(), &masks(4, &[&[1, 3], &[2, 3], &[1, 4], &[2, 4]]));
    }

    #[test]
    fn cyclic_flat_examples() {
        let s = Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(1, 2));
        let flats: Vec<_> = s.cyclic_flats().into_iter().map(|(f, _)| f).collect();
        assert_eq!(flats, masks(4, &[&[], &[1, 2], &[3, 4], &[1, 2, 3, 4]]));
        for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 5)] {
            let u = Matroid::uniform(k, n);
            let flats: Vec<_> = u.cyclic_flats().into_iter().map(|(f, _)| f).collect();
            assert_eq!(flats, vec![SubsetMask::EMPTY, u.ground()]);
        }
        let flats: Vec<_> = t24().cyclic_flats().into_iter().map(|(f, _)| f).collect();
        assert_eq!(flats, masks(4, &[&[], &[3, 4], &[1, 2, 3, 4]]));
    }

    #[test]
    fn structural_predicates() {
        assert!(Matroid::uniform(2, 4).is_connected());
        assert!(!Matroid::uniform(1, 2)
            .direct_sum(&Matroid::uniform(1, 2))
            .is_connected());
        assert!(Matroid::uniform(2, 4).is_sparse_paving());
        assert!(t24().is_sparse_paving());
        assert!(t24().is_connected());
        assert!(!t24().is_simple());
        assert!(Matroid::uniform(2, 4).is_simple());
        let loopy = Matroid::uniform(0, 1).direct_sum(&Matroid::uniform(2, 3));
        assert_eq!(loopy.loops(), SubsetMask::singleton(1));
        assert_eq!(loopy.coloops(), SubsetMask::EMPTY);
    }
}
