//! Subset enumeration helpers.

use rayon::prelude::*;

use crate::linalg::{Rational, Vector};

/// Minimum of `f` over all masks of `bits` bits, ties broken by the smaller mask.
pub(crate) fn argmin_mask<F>(bits: usize, f: F) -> (usize, u64)
where
    F: Fn(u64) -> usize + Sync + Send,
{
    debug_assert!(bits < 64);
    (0..1u64 << bits)
        .into_par_iter()
        .map(|m| (f(m), m))
        .min()
        .expect("at least the empty mask")
}

pub(crate) fn mask_members(mask: u64, len: usize) -> Vec<usize> {
    (0..len).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Scale so the first nonzero entry is 1.
pub(crate) fn normalize(v: &Vector) -> Option<Vector> {
    let lead = v.entries().iter().find(|x| !num_traits::Zero::is_zero(*x))?;
    let inv: Rational = lead.recip();
    Some(v.scale(&inv))
}

/// Distinct nonzero directions among `vs`, in order of first appearance.
pub(crate) fn directions<'a>(vs: impl IntoIterator<Item = &'a Vector>) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for v in vs {
        if let Some(d) = normalize(v) {
            if !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}
