use num_bigint::BigInt;
use num_traits::Zero;

use super::tutte;
use crate::algebra::BivarPoly;
use crate::error::InvariantError;
use crate::matroid::{binomial, Matroid};

/// The `n` linear relations satisfied by the coefficients `a_ij` of every
/// Tutte polynomial on `n` elements:
/// `Σ_{i ≤ s} Σ_{j ≤ s−i} (−1)^j C(s−i, j) a_ij = 0` for `0 ≤ s < n`.
pub fn brylawski_check(p: &BivarPoly, n: usize) -> bool {
    (0..n).all(|s| brylawski_residual(p, s).is_zero())
}

/// Left-hand side of relation `s`.
pub fn brylawski_residual(p: &BivarPoly, s: usize) -> BigInt {
    let mut total = BigInt::zero();
    for i in 0..=s {
        for j in 0..=s - i {
            let a = p.coeff(i as u32, j as u32);
            if a.is_zero() {
                continue;
            }
            let term = a * binomial(s - i, j);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total
}

/// `T(2,0) · T(0,2) ≥ T(1,1)²`, in exact arithmetic.
pub fn merino_welsh_check(m: &Matroid) -> Result<bool, InvariantError> {
    if !m.loops().is_empty() || !m.coloops().is_empty() {
        return Err(InvariantError::HasLoopOrColoop);
    }
    let t = tutte(m)?;
    let bases = t.evaluate_i64(1, 1);
    Ok(t.evaluate_i64(2, 0) * t.evaluate_i64(0, 2) >= &bases * &bases)
}
