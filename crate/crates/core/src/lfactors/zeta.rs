use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentPoly, TruncatedSeries};
use crate::reptheory::{ReptheoryError, SatakeGL2, SatakeGL4, SatakeGSp4};

use super::euler::{lfactor_std4, lfactor_sym2};
use super::whittaker::{cs_whittaker_gl2, cs_whittaker_gl4, cs_whittaker_gsp4, q_half_power};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlaceType {
    Split,
    Inert,
}

/// Local data of the unitary-side representation at a place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaceData {
    Split(SatakeGL4),
    Inert(SatakeGSp4),
}

impl PlaceData {
    pub fn place_type(&self) -> PlaceType {
        match self {
            PlaceData::Split(_) => PlaceType::Split,
            PlaceData::Inert(_) => PlaceType::Inert,
        }
    }

    /// Central character value `omega_pi`.
    pub fn central(&self) -> LaurentPoly {
        match self {
            PlaceData::Split(s) => s.central(),
            PlaceData::Inert(c) => c.central(),
        }
    }

    fn whittaker(&self, n: u32, m: u32) -> Result<LaurentPoly, ReptheoryError> {
        match self {
            PlaceData::Split(s) => cs_whittaker_gl4(n, m, s),
            PlaceData::Inert(c) => cs_whittaker_gsp4(n, m, c),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZetaConfig {
    pub t_order: u32,
    /// Multiply in `L(2s, Sym^2 ⊗ omega_pi)`.
    pub with_sym2: bool,
}

/// The double sum over `n, m >= 0` of
/// `q^(4n+3m) q^(-(2n+m)/2) T^(2n+m) W_sigma(n, m) W_pi(n, m)`,
/// truncated at `T^t_order`.
pub fn zeta_series(
    place: &PlaceData,
    s2: &SatakeGL2,
    cfg: ZetaConfig,
) -> Result<TruncatedSeries, ReptheoryError> {
    let pairs: Vec<(u32, u32)> = (0..=cfg.t_order)
        .flat_map(|k| (0..=k / 2).map(move |n| (n, k - 2 * n)))
        .collect();
    let terms = pairs
        .par_iter()
        .map(|&(n, m)| {
            let k = 2 * n + m;
            let modulus = q_half_power((8 * n + 6 * m) as i32 - k as i32);
            let w = &cs_whittaker_gl2(n, m, s2)? * &place.whittaker(n, m)?;
            Ok(((k, 0), (&modulus * &w).prune_vars()))
        })
        .collect::<Result<Vec<_>, ReptheoryError>>()?;
    let series = TruncatedSeries::from_coefficients(Some(cfg.t_order), None, terms);
    let series = series.map_coefficients(LaurentPoly::prune_vars);
    if cfg.with_sym2 {
        let sym2 = lfactor_sym2(s2, &place.central()).expand(cfg.t_order, 0);
        return Ok(series.mul(&sym2));
    }
    Ok(series)
}

/// `L(z+1/2, std_4) L(s, ∧^2 ⊗ std_2) / L(2s, Sym^2 ⊗ omega_pi)` expanded in
/// `T = q^-s` and `U = q^-(z+1/2)`, computed as the standard factor times the
/// Whittaker double sum without the symmetric-square prefactor.
pub fn two_variable_factor(
    s4: &SatakeGL4,
    s2: &SatakeGL2,
    t_order: u32,
    u_order: u32,
) -> Result<TruncatedSeries, ReptheoryError> {
    let zeta = zeta_series(
        &PlaceData::Split(s4.clone()),
        s2,
        ZetaConfig {
            t_order,
            with_sym2: false,
        },
    )?;
    Ok(lfactor_std4(s4).expand(t_order, u_order).mul(&zeta))
}
