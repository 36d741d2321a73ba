use std::fmt;

use serde::{Deserialize, Serialize};

/// Characteristic bitmask of a subset of the ground set `{1..n}`.
///
/// Element `i` lives in bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// The full ground set `{1..n}`.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            SubsetMask(u32::MAX)
        } else {
            SubsetMask((1u32 << n) - 1)
        }
    }

    /// Builds a mask from 1-based element labels.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        let mut bits = 0u32;
        for l in labels {
            assert!((1..=32).contains(&l), "element label {l} out of range");
            bits |= 1 << (l - 1);
        }
        SubsetMask(bits)
    }

    pub fn singleton(label: usize) -> Self {
        Self::from_labels([label])
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, label: usize) -> bool {
        (1..=32).contains(&label) && self.0 & (1 << (label - 1)) != 0
    }

    #[inline]
    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !other.0)
    }

    #[inline]
    pub fn complement(self, n: usize) -> SubsetMask {
        SubsetMask(!self.0 & Self::full(n).0)
    }

    #[inline]
    pub fn fits(self, n: usize) -> bool {
        self.is_subset_of(Self::full(n))
    }

    #[inline]
    pub fn with(self, label: usize) -> SubsetMask {
        SubsetMask(self.0 | (1 << (label - 1)))
    }

    #[inline]
    pub fn without(self, label: usize) -> SubsetMask {
        SubsetMask(self.0 & !(1 << (label - 1)))
    }

    /// Ascending 1-based labels.
    pub fn labels(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let tz = rest.trailing_zeros();
                rest &= rest - 1;
                Some(tz as usize + 1)
            }
        })
    }

    /// Packs the bits selected by `keep` into the low bits, preserving order.
    pub fn compress(self, keep: SubsetMask) -> SubsetMask {
        let mut out = 0u32;
        for (pos, label) in keep.labels().enumerate() {
            if self.contains(label) {
                out |= 1 << pos;
            }
        }
        SubsetMask(out)
    }

    /// Relabels through `perm`, where element `i` goes to `perm[i - 1]`.
    pub fn permute(self, perm: &[usize]) -> SubsetMask {
        SubsetMask::from_labels(self.labels().map(|l| perm[l - 1]))
    }

    /// Shifts every label up by `offset`.
    pub fn shift(self, offset: usize) -> SubsetMask {
        SubsetMask(self.0 << offset)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.labels().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

/// All subsets of `{1..n}` of size `k`, as ascending mask integers.
pub fn k_subsets(n: usize, k: usize) -> Vec<SubsetMask> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![SubsetMask::EMPTY];
    }
    let mut out = Vec::new();
    // Gosper's hack walks the k-subsets in increasing integer order.
    let limit = 1u64 << n;
    let mut x: u64 = (1 << k) - 1;
    while x < limit {
        out.push(SubsetMask(x as u32));
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}
