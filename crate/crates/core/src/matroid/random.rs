use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{k_subsets, Matroid, SubsetMask, MAX_GROUND_SET};
use crate::error::MatroidError;
use crate::families::stressed_report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RandomKind {
    /// `U_{k,n}` minus a random family of pairwise far circuit-hyperplanes.
    SparsePaving,
    /// Cycle matroid of a random connected multigraph on `k + 1` vertices.
    Graphic,
    /// Random partition matroid followed by random stressed-subset relaxations.
    RelaxationChain,
}

impl std::str::FromStr for RandomKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sparse_paving" | "sparse-paving" => Ok(RandomKind::SparsePaving),
            "graphic" => Ok(RandomKind::Graphic),
            "relaxation_chain" | "relaxation-chain" => Ok(RandomKind::RelaxationChain),
            other => Err(format!("unknown random kind `{other}`")),
        }
    }
}

/// Deterministic for a fixed `(n, k, kind, seed)`.
pub fn random_matroid(
    n: usize,
    k: usize,
    kind: RandomKind,
    seed: u64,
) -> Result<Matroid, MatroidError> {
    if n > MAX_GROUND_SET {
        return Err(MatroidError::SizeCapExceeded {
            what: "random matroid",
            cap: MAX_GROUND_SET,
            n,
        });
    }
    if k > n {
        return Err(MatroidError::InfeasibleParameters(format!(
            "rank {k} exceeds ground set size {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match kind {
        RandomKind::SparsePaving => sparse_paving(n, k, &mut rng),
        RandomKind::Graphic => graphic(n, k, &mut rng),
        RandomKind::RelaxationChain => relaxation_chain(n, k, &mut rng),
    })
}

fn sparse_paving(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Matroid {
    let mut sets = k_subsets(n, k);
    let total = sets.len();
    let target = rng.random_range(0..=total);
    sets.shuffle(rng);
    let mut removed: Vec<SubsetMask> = Vec::new();
    for &s in &sets {
        if removed.len() >= target || removed.len() + 1 >= total {
            break;
        }
        // |S ∩ T| ≤ k − 2 for every pair keeps the result a matroid.
        if removed.iter().all(|t| s.intersection(*t).len() + 2 <= k) {
            removed.push(s);
        }
    }
    let bases = k_subsets(n, k)
        .into_iter()
        .filter(|b| !removed.contains(b))
        .collect();
    Matroid::from_sorted_unchecked(n, bases)
}

fn graphic(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Matroid {
    let vertices = k + 1;
    let mut edges: Vec<(usize, usize)> =
        (1..vertices).map(|v| (rng.random_range(0..v), v)).collect();
    while edges.len() < n {
        edges.push((rng.random_range(0..vertices), rng.random_range(0..vertices)));
    }
    edges.shuffle(rng);
    let bases = k_subsets(n, k)
        .into_iter()
        .filter(|s| is_forest(&edges, *s, vertices))
        .collect();
    Matroid::from_sorted_unchecked(n, bases)
}

fn is_forest(edges: &[(usize, usize)], subset: SubsetMask, vertices: usize) -> bool {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for l in subset.labels() {
        let (u, v) = edges[l - 1];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

fn relaxation_chain(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Matroid {
    let blocks = if n == 0 {
        1
    } else {
        rng.random_range(1..=n.min(3))
    };
    let mut sizes = vec![0usize; blocks];
    for _ in 0..n {
        sizes[rng.random_range(0..blocks)] += 1;
    }
    let mut ranks = vec![0usize; blocks];
    for _ in 0..k {
        let open: Vec<usize> = (0..blocks).filter(|&b| ranks[b] < sizes[b]).collect();
        ranks[open[rng.random_range(0..open.len())]] += 1;
    }
    let mut m = Matroid::uniform(0, 0);
    for (&r, &s) in ranks.iter().zip(&sizes) {
        m = m.direct_sum(&Matroid::uniform(r, s));
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    m = m.relabel(&perm);
    let steps = rng.random_range(0..=3);
    for _ in 0..steps {
        let report = stressed_report(&m).expect("ground set within cap");
        let open: Vec<_> = report
            .entries
            .iter()
            .filter(|s| !s.cusp.is_empty())
            .collect();
        if open.is_empty() {
            break;
        }
        let pick = open[rng.random_range(0..open.len())];
        let mut bases = m.bases().to_vec();
        bases.extend_from_slice(&pick.cusp);
        m = Matroid::from_unsorted_unchecked(n, bases);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        for kind in [
            RandomKind::SparsePaving,
            RandomKind::Graphic,
            RandomKind::RelaxationChain,
        ] {
            let a = random_matroid(7, 3, kind, 42).unwrap();
            let b = random_matroid(7, 3, kind, 42).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn generated_matroids_are_valid() {
        for seed in 0..20 {
            for kind in [
                RandomKind::SparsePaving,
                RandomKind::Graphic,
                RandomKind::RelaxationChain,
            ] {
                let m = random_matroid(7, 3, kind, seed).unwrap();
                assert_eq!(m.k(), 3);
                assert!(Matroid::from_bases(7, m.bases().iter().copied()).is_ok());
            }
            assert!(random_matroid(8, 4, RandomKind::SparsePaving, seed)
                .unwrap()
                .is_sparse_paving());
        }
    }

    #[test]
    fn rank_above_size_is_infeasible() {
        assert!(matches!(
            random_matroid(3, 4, RandomKind::Graphic, 0),
            Err(MatroidError::InfeasibleParameters(_))
        ));
    }
}
