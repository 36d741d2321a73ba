//! The G-invariant of an elementary split matroid from its λ-profile.

use num_bigint::BigInt;

use super::classify::is_elementary_split;
use super::stressed::stressed_report;
use super::MatroidDescriptor;
use crate::error::FamilyError;
use crate::invariants::{g_invariant, GInvariantVector};
use crate::matroid::Matroid;

fn g_of(d: &MatroidDescriptor) -> Result<Vec<BigInt>, FamilyError> {
    Ok(g_invariant(&d.realize()?)?.to_vector())
}

/// `G(M) = G(U_{k,n}) + Σ λ_{r,h} (G(Λ_{k−r,k,n−h,n}) − G(U_{k,n}))`.
///
/// This is the split formula
/// `G(U) − Σ λ_{r,h} (G(Λ_{r,k,h,n}) − G(U_{k−r,n−h} ⊕ U_{r,h}))`
/// after replacing each `G(U_{k−r,n−h} ⊕ U_{r,h})` by
/// `G(Λ_{k−r,k,n−h,n}) + G(Λ_{r,k,h,n}) − G(U_{k,n})`, so only cuspidal
/// matroids are evaluated.
pub fn g_split(m: &Matroid) -> Result<GInvariantVector, FamilyError> {
    if !is_elementary_split(m) {
        return Err(FamilyError::NotElementarySplit);
    }
    let (n, k) = (m.n(), m.k());
    let report = stressed_report(m)?;
    let uniform = g_of(&MatroidDescriptor::uniform(k, n))?;
    let mut total = uniform.clone();
    for (&(r, h), &lambda) in &report.lambda {
        let cusp = g_of(&MatroidDescriptor::cuspidal(k - r, k, n - h, n))?;
        for ((t, c), u) in total.iter_mut().zip(&cusp).zip(&uniform) {
            *t += BigInt::from(lambda) * (c - u);
        }
    }
    GInvariantVector::from_vector(n, k, &total).ok_or_else(|| {
        FamilyError::InternalInconsistency("split formula produced a negative coefficient".into())
    })
}
