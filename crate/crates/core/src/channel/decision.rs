use std::cmp::Ordering;

use super::Constellation;
use crate::{Complex64, Error, Result};

/// Hard decision for one equalizer output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    /// Index into [`Constellation::points`].
    Symbol(usize),
    /// The estimate was not finite; every bit of it counts as wrong.
    Erasure,
}

/// Nearest-neighbour slicing onto `c`.
///
/// Ties go to the point of smaller magnitude, then to the smaller real part,
/// then to the smaller imaginary part. Returns the decisions and their bits,
/// with `None` marking an erased bit.
pub fn decide(estimates: &[Complex64], c: &Constellation) -> Result<(Vec<Decision>, Vec<Option<bool>>)> {
    if estimates.is_empty() {
        return Err(Error::domain("nothing to decide"));
    }
    let decisions: Vec<Decision> = estimates.iter().map(|&z| nearest(z, c)).collect();
    let mut bits = Vec::with_capacity(decisions.len() * c.bits_per_symbol() as usize);
    for d in &decisions {
        match *d {
            Decision::Symbol(i) => bits.extend(c.bits(i).map(Some)),
            Decision::Erasure => bits.extend(std::iter::repeat_n(None, c.bits_per_symbol() as usize)),
        }
    }
    Ok((decisions, bits))
}

fn nearest(z: Complex64, c: &Constellation) -> Decision {
    if !z.is_finite() {
        return Decision::Erasure;
    }
    let key = |p: &Complex64| ((z - p).norm_sqr(), p.norm_sqr(), p.re, p.im);
    let best = c
        .points()
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            let (ka, kb) = (key(a), key(b));
            ka.partial_cmp(&kb).unwrap_or(Ordering::Equal)
        })
        .map(|(i, _)| i)
        .expect("constellation is non-empty");
    Decision::Symbol(best)
}

/// Fraction of reference bits not reproduced by the estimate. Erased bits
/// always count as errors.
pub fn ber(reference: &[bool], estimate: &[Option<bool>]) -> Result<f64> {
    if reference.len() != estimate.len() {
        return Err(Error::domain(format!(
            "bit sequences differ in length: {} vs {}",
            reference.len(),
            estimate.len()
        )));
    }
    if reference.is_empty() {
        return Err(Error::domain("empty bit sequence"));
    }
    let errors = reference.iter().zip(estimate).filter(|(r, e)| **e != Some(**r)).count();
    Ok(errors as f64 / reference.len() as f64)
}

/// Fraction of symbols decided wrongly (erasures included).
pub fn ser(reference: &[usize], estimate: &[Decision]) -> Result<f64> {
    if reference.len() != estimate.len() || reference.is_empty() {
        return Err(Error::domain("symbol sequences must be non-empty and of equal length"));
    }
    let errors = reference
        .iter()
        .zip(estimate)
        .filter(|(r, e)| **e != Decision::Symbol(**r))
        .count();
    Ok(errors as f64 / reference.len() as f64)
}
