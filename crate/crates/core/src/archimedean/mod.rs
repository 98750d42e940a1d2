//! Archimedean gamma factors, vertical-line Mellin-Barnes quadrature and the
//! numerical checks built on it.

mod contour;
mod gamma;
mod lemmas;
mod product;
mod quadrature;
mod report;
mod whittaker;
mod zeta;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use contour::{choose_abscissas, min_slack};
pub use gamma::{complex_gamma, gamma_c, gamma_r, ln_gamma, ln_gamma_field};
pub use lemmas::{
    barnes1_closed_form, barnes1_integrand, barnes2_closed_form, barnes2_integrand, random_barnes1,
    random_barnes2, random_gamma_point, random_stade, stade_fixed_point, stade_integrand,
    stade_ratio, stade_transform, verify_barnes1, verify_barnes2, verify_gamma_duplication,
    verify_gamma_reflection, verify_stade, StadeParams,
};
pub use product::{AffineForm, GammaFactor, GammaProduct};
pub use quadrature::{mb_integrate, MBIntegrand, QuadSpec, QuadratureResult};
pub use report::{c64, parse_complex, CheckReport};
pub use whittaker::{gl4_kernel_integrand, whittaker_gl2_arch, whittaker_gl4_kernel};
pub use zeta::{
    after_barnes1_integrand, arch_lfactor, arch_zeta_verify, full_stage_integrand,
    zeta_closed_form, ArchParams, LFactorKind, Stage,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArchField {
    R,
    C,
}

impl ArchField {
    pub const ALL: [ArchField; 2] = [ArchField::R, ArchField::C];

    /// 1 for the reals, 2 for the complex numbers.
    pub fn epsilon(self) -> f64 {
        match self {
            ArchField::R => 1.0,
            ArchField::C => 2.0,
        }
    }

    pub fn gamma_name(self) -> &'static str {
        match self {
            ArchField::R => "Gamma_R",
            ArchField::C => "Gamma_C",
        }
    }

    /// Spacing of the pole sequence of `Γ_F`.
    pub fn pole_spacing(self) -> f64 {
        match self {
            ArchField::R => 2.0,
            ArchField::C => 1.0,
        }
    }
}

impl std::str::FromStr for ArchField {
    type Err = ArchError;

    fn from_str(s: &str) -> Result<Self, ArchError> {
        match s {
            "R" | "r" | "real" => Ok(ArchField::R),
            "C" | "c" | "complex" => Ok(ArchField::C),
            _ => Err(ArchError::InvalidInput(format!("unknown field {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ArchError {
    #[error("pole at a non-positive integer: {0}")]
    PoleAtNonPositiveInteger(String),
    #[error("contour violation: {0}")]
    ContourViolation(String),
    #[error("quadrature did not converge: successive differences {previous:e} then {current:e}")]
    NonConvergence { previous: f64, current: f64 },
    #[error("balance condition fails by {0:e}")]
    BalanceViolation(f64),
    #[error("central character condition 2 nu0 - nu1 = -|mu| fails by {0:e}")]
    CentralCharacterViolation(f64),
    #[error("invalid integrand: {0}")]
    InvalidIntegrand(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
