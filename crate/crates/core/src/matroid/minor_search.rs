use serde::Serialize;

use super::{canonical_form, k_subsets, Matroid, SubsetMask};

/// Sets realizing a minor: `M / contract \ delete ≅ N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MinorEmbedding {
    pub contract: SubsetMask,
    pub delete: SubsetMask,
}

pub fn has_minor_iso(m: &Matroid, target: &Matroid) -> bool {
    find_minor(m, target).is_some()
}

/// Searches for a minor of `m` isomorphic to `target`.
///
/// Every minor can be written as `M / I \ J` with `I` independent and
/// `J` coindependent, so it suffices to let `contract` range over the
/// independent sets of size `k(M) − k(N)` and `delete` over the remaining
/// sets of the right size, keeping pairs whose minor has rank `k(N)`.
pub fn find_minor(m: &Matroid, target: &Matroid) -> Option<MinorEmbedding> {
    let (n, k) = (m.n(), m.k());
    let (tn, tk) = (target.n(), target.k());
    if tn > n || tk > k || n - tn < k - tk {
        return None;
    }
    let drop = n - tn;
    let contract_size = k - tk;
    let delete_size = drop - contract_size;
    let want = canonical_form(target);
    let want_bases = target.bases().len();
    let ground = m.ground();
    for contract in k_subsets(n, contract_size) {
        if !m.is_independent(contract) {
            continue;
        }
        let rest = ground.difference(contract);
        for pick in k_subsets(rest.len(), delete_size) {
            let delete = expand(pick, rest);
            if m.rank(ground.difference(delete)) != k {
                continue;
            }
            let minor = m.minor(contract, delete).expect("disjoint by construction");
            if minor.bases().len() == want_bases && canonical_form(&minor) == want {
                return Some(MinorEmbedding { contract, delete });
            }
        }
    }
    None
}

/// Inverse of `compress`: spreads the low bits of `packed` over `onto`.
fn expand(packed: SubsetMask, onto: SubsetMask) -> SubsetMask {
    let mut out = SubsetMask::EMPTY;
    for (pos, label) in onto.labels().enumerate() {
        if packed.0 & (1 << pos) != 0 {
            out = out.with(label);
        }
    }
    out
}
