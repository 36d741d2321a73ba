//! Tutte polynomials from closed formulas, without touching the bases.

use num_bigint::BigInt;

use super::MatroidDescriptor;
use crate::algebra::BivarPoly;
use crate::error::FamilyError;
use crate::matroid::binomial;

use MatroidDescriptor as D;

fn c(n: usize, k: usize) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// `T(U_{0,m} ⊕ U_{k−ℓ, n−ℓ−m} ⊕ U_{ℓ,ℓ})` for `0 ≤ ℓ < k` and
/// `0 ≤ m < n − k`; `x^k y^{n−k}` when the middle block is trivial.
pub fn tutte_uniform_with_loops_coloops(
    loops: usize,
    coloops: usize,
    k: usize,
    n: usize,
) -> BivarPoly {
    let (l, m) = (coloops, loops);
    assert!(l <= k && m <= n - k);
    if l == k || m == n - k {
        return BivarPoly::term(k as u32, (n - k) as u32, 1);
    }
    let mut t = BivarPoly::zero();
    for i in l + 1..=k {
        t = &t + &BivarPoly::term(i as u32, m as u32, c(n - m - i - 1, n - m - k - 1));
    }
    for i in m + 1..=n - k {
        t = &t + &BivarPoly::term(l as u32, i as u32, c(n - l - i - 1, k - l - 1));
    }
    t
}

fn sum_x(from: usize, to: usize) -> BivarPoly {
    (from..=to).map(|i| BivarPoly::term(i as u32, 0, 1)).sum()
}

fn sum_y(from: usize, to: usize) -> BivarPoly {
    (from..=to).map(|i| BivarPoly::term(0, i as u32, 1)).sum()
}

/// `T(T_{k,n}) = T(U_{k−1,k}) · T(U_{1,n−k}) + x + y − xy`, with
/// `T(U_{k−1,k}) = y + Σ_{i<k} x^i` and `T(U_{1,n−k}) = x + Σ_{i<n−k} y^i`.
pub fn tutte_minimal(k: usize, n: usize) -> BivarPoly {
    assert!(1 <= k && k < n);
    let circuit_part = &BivarPoly::y() + &sum_x(1, k - 1);
    let parallel_part = &BivarPoly::x() + &sum_y(1, n - k - 1);
    let correction = &(&BivarPoly::x() + &BivarPoly::y()) - &BivarPoly::term(1, 1, 1);
    &(&circuit_part * &parallel_part) + &correction
}

/// Fully expanded form of [`tutte_minimal`]:
/// `Σ_{i≤k} x^i + Σ_{i≤n−k} y^i + (Σ_{i<k} x^i)(Σ_{i<n−k} y^i)`.
pub fn tutte_minimal_expanded(k: usize, n: usize) -> BivarPoly {
    assert!(1 <= k && k < n);
    &(&sum_x(1, k) + &sum_y(1, n - k)) + &(&sum_x(1, k - 1) * &sum_y(1, n - k - 1))
}

/// `P_{r,k,h,n}(x, y) = T(Λ_{r,k,h,n})(x + 1, y + 1)` by the double sum
/// over the rank function of the cuspidal matroid, with `m = n − k + r − h`.
pub fn cuspidal_shifted_tutte(r: usize, k: usize, h: usize, n: usize) -> BivarPoly {
    let m = n - k + r - h;
    let mut p = BivarPoly::zero();
    let mut add = |i: usize, j: usize, coeff: BigInt| {
        p.add_term(crate::algebra::Monomial::new(i as u32, j as u32), coeff);
    };
    for j in 0..=r {
        let cj = c(h, j);
        for i in 0..m {
            add(r - j, m - i, &cj * c(n - h, i));
        }
        for i in 0..=k - r {
            add(k - i - j, 0, &cj * c(n - h, i));
        }
    }
    for j in r + 1..=h {
        let cj = c(h, j);
        if j <= k {
            for i in 0..=k - j {
                add(k - i - j, 0, &cj * c(n - h, i));
            }
        }
        for i in (k + 1).saturating_sub(j)..=n - h {
            add(0, i + j - k, &cj * c(n - h, i));
        }
    }
    p
}

/// Tutte polynomial of a descriptor from the closed formulas.
///
/// Supported: uniform, cuspidal and minimal terms, and direct sums of at
/// most one such term with loops `U_{0,m}` and coloops `U_{ℓ,ℓ}`.
pub fn closed_form_tutte(d: &MatroidDescriptor) -> Result<BivarPoly, FamilyError> {
    d.validate()?;
    let parts = match d.canonical() {
        D::Sum(parts) => parts,
        single => vec![single],
    };
    let (mut loops, mut coloops) = (0usize, 0usize);
    let mut core = None;
    for p in parts {
        match p {
            D::Uniform { k: 0, n } => loops += n,
            D::Uniform { k, n } if k == n => coloops += n,
            other if core.is_none() => core = Some(other),
            _ => return Err(FamilyError::UnsupportedShape(d.to_string())),
        }
    }
    let frame = BivarPoly::term(coloops as u32, loops as u32, 1);
    Ok(match core {
        None => frame,
        Some(D::Uniform { k, n }) => {
            tutte_uniform_with_loops_coloops(loops, coloops, k + coloops, n + loops + coloops)
        }
        Some(D::Minimal { k, n }) => &frame * &tutte_minimal(k, n),
        Some(D::Cuspidal { r, k, h, n }) => {
            &frame * &cuspidal_shifted_tutte(r, k, h, n).shift(-1, -1)
        }
        Some(D::Sum(_)) => return Err(FamilyError::UnsupportedShape(d.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::tutte;

    fn p(s: &str) -> BivarPoly {
        BivarPoly::parse(s).unwrap()
    }

    fn d(s: &str) -> MatroidDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(
            closed_form_tutte(&d("minimal:2,4")).unwrap(),
            p("x^2 + x*y + y^2 + x + y")
        );
        assert_eq!(
            closed_form_tutte(&d("uniform:2,4")).unwrap(),
            p("x^2 + y^2 + 2*x + 2*y")
        );
        assert_eq!(
            cuspidal_shifted_tutte(1, 2, 2, 4),
            p("x^2 + x*y + y^2 + 4*x + 4*y + 5")
        );
    }

    #[test]
    fn minimal_forms_agree() {
        for n in 2..=8 {
            for k in 1..n {
                assert_eq!(tutte_minimal(k, n), tutte_minimal_expanded(k, n));
            }
        }
    }

    #[test]
    fn agrees_with_subset_sum_small() {
        for s in [
            "uniform:0,3",
            "uniform:3,3",
            "sum:(uniform:0,2)+(uniform:2,5)+(uniform:1,1)",
            "sum:(uniform:0,1)+(minimal:2,4)+(uniform:2,2)",
            "cuspidal:2,2,3,4",
            "cuspidal:0,2,1,4",
            "cuspidal:2,3,4,6",
        ] {
            let desc = d(s);
            let m = desc.realize().unwrap();
            assert_eq!(closed_form_tutte(&desc).unwrap(), tutte(&m).unwrap(), "{s}");
        }
    }

    #[test]
    fn unsupported_shape() {
        assert!(matches!(
            closed_form_tutte(&d("sum:(uniform:1,2)+(uniform:1,2)")),
            Err(FamilyError::UnsupportedShape(_))
        ));
    }
}
