use num_bigint::BigInt;

use super::checks::brylawski_check;
use crate::algebra::{BivarPoly, Monomial};
use crate::error::InvariantError;
use crate::matroid::{Matroid, SubsetMask};

/// Largest ground set for which Tutte polynomials are computed.
pub const TUTTE_CAP: usize = 14;

fn check_cap(m: &Matroid) -> Result<(), InvariantError> {
    if m.n() > TUTTE_CAP {
        return Err(InvariantError::SizeCapExceeded {
            what: "Tutte polynomial",
            cap: TUTTE_CAP,
            n: m.n(),
        });
    }
    Ok(())
}

/// Corank-nullity expansion `Σ_A (x−1)^{k−rk A} (y−1)^{|A|−rk A}`.
///
/// The sum is first tallied as the shifted polynomial `T(x+1, y+1)` and
/// shifted back once at the end.
pub fn tutte(m: &Matroid) -> Result<BivarPoly, InvariantError> {
    check_cap(m)?;
    let (n, k) = (m.n(), m.k());
    let ranks = m.rank_table();
    let mut counts = vec![0u64; (k + 1) * (n - k + 1)];
    for (bits, &r) in ranks.iter().enumerate() {
        let r = r as usize;
        let size = bits.count_ones() as usize;
        counts[(k - r) * (n - k + 1) + (size - r)] += 1;
    }
    let mut shifted = BivarPoly::zero();
    for a in 0..=k {
        for b in 0..=n - k {
            let c = counts[a * (n - k + 1) + b];
            shifted.add_term(Monomial::new(a as u32, b as u32), BigInt::from(c));
        }
    }
    let t = shifted.shift(-1, -1);
    debug_assert!(brylawski_check(&t, n));
    Ok(t)
}

/// Deletion-contraction recursion, kept as an independent oracle.
pub fn tutte_dc(m: &Matroid) -> Result<BivarPoly, InvariantError> {
    check_cap(m)?;
    Ok(dc(m))
}

fn dc(m: &Matroid) -> BivarPoly {
    let mut loops = 0u32;
    let mut coloops = 0u32;
    for e in 1..=m.n() {
        if m.rank(SubsetMask::singleton(e)) == 0 {
            loops += 1;
        } else if m.rank(m.ground().without(e)) < m.k() {
            coloops += 1;
        } else {
            return &dc(&m.delete_element(e)) + &dc(&m.contract_element(e));
        }
    }
    BivarPoly::term(coloops, loops, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BivarPoly {
        BivarPoly::parse(s).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(
            tutte(&Matroid::uniform(2, 4)).unwrap(),
            p("x^2 + y^2 + 2*x + 2*y")
        );
        assert_eq!(tutte(&Matroid::uniform(0, 0)).unwrap(), BivarPoly::one());
        assert_eq!(tutte(&Matroid::uniform(1, 2)).unwrap(), p("x + y"));
        assert_eq!(tutte_dc(&Matroid::uniform(1, 1)).unwrap(), p("x"));
    }

    #[test]
    fn recursion_agrees_on_uniform() {
        for n in 0..=6 {
            for k in 0..=n {
                let m = Matroid::uniform(k, n);
                assert_eq!(tutte(&m).unwrap(), tutte_dc(&m).unwrap(), "U_{k},{n}");
            }
        }
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            tutte(&Matroid::uniform(1, 15)),
            Err(InvariantError::SizeCapExceeded { .. })
        ));
    }
}
