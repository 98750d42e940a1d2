use rayon::prelude::*;
use serde_json::json;

use crate::algebra::LaurentPoly;
use crate::reptheory::{ReptheoryError, SatakeGL2, SatakeGL4, SatakeGSp4};
use crate::rng::{small_rational, stream};

use super::verify::{verify_inert, verify_split, verify_two_variable, IdentityReport};

/// Random split-place data for draw `index`: `alpha1..alpha4`, `chi`,
/// `beta1`, `beta2` in that order.
pub fn random_split(seed: u64, index: u64) -> (SatakeGL4, SatakeGL2) {
    let mut r = stream(seed, index);
    let mut next = || LaurentPoly::constant(small_rational(&mut r));
    let alpha = [next(), next(), next(), next()];
    let chi = next();
    let beta = [next(), next()];
    (SatakeGL4 { alpha, chi }, SatakeGL2 { beta })
}

/// Random inert-place data for draw `index`: `c0, c1, c2, beta1, beta2`.
pub fn random_inert(seed: u64, index: u64) -> (SatakeGSp4, SatakeGL2) {
    let mut r = stream(seed, index);
    let mut next = || LaurentPoly::constant(small_rational(&mut r));
    let c = SatakeGSp4 {
        c0: next(),
        c1: next(),
        c2: next(),
    };
    let beta = [next(), next()];
    (c, SatakeGL2 { beta })
}

fn tag(r: IdentityReport, seed: u64, index: u64) -> IdentityReport {
    r.with_param("seed", json!(seed))
        .with_param("draw", json!(index))
}

pub fn split_sweep(
    seed: u64,
    count: u64,
    order: u32,
    mutate: bool,
) -> Result<Vec<IdentityReport>, ReptheoryError> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let (s4, s2) = random_split(seed, i);
            Ok(tag(verify_split(&s4, &s2, order, mutate)?, seed, i))
        })
        .collect()
}

pub fn inert_sweep(
    seed: u64,
    count: u64,
    order: u32,
    mutate: bool,
) -> Result<Vec<IdentityReport>, ReptheoryError> {
    let nested: Result<Vec<Vec<IdentityReport>>, ReptheoryError> = (0..count)
        .into_par_iter()
        .map(|i| {
            let (c, s2) = random_inert(seed, i);
            Ok(verify_inert(&c, &s2, order, mutate)?
                .into_iter()
                .map(|r| tag(r, seed, i))
                .collect())
        })
        .collect();
    Ok(nested?.into_iter().flatten().collect())
}

pub fn two_variable_sweep(
    seed: u64,
    count: u64,
    t_order: u32,
    u_order: u32,
    mutate: bool,
) -> Result<Vec<IdentityReport>, ReptheoryError> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let (s4, s2) = random_split(seed, i);
            Ok(tag(
                verify_two_variable(&s4, &s2, t_order, u_order, mutate)?,
                seed,
                i,
            ))
        })
        .collect()
}
