//! Unramified Euler factors, Whittaker double sums and the exact identity
//! checks relating them.

mod euler;
mod sweep;
mod verify;
mod whittaker;
mod zeta;

pub use euler::{
    lfactor_std4, lfactor_sym2, lfactor_tensor_gsp4_gl2, lfactor_wedge2_std2_inert,
    lfactor_wedge2_std2_split, EulerFactor,
};
pub use sweep::{inert_sweep, random_inert, random_split, split_sweep, two_variable_sweep};
pub use verify::{
    branching_report, separation_dimension_terms, sym_alg_dimension_terms, verify_inert,
    verify_separation_split, verify_split, verify_sym_alg_fact, verify_two_variable,
    IdentityReport, MismatchReport,
};
pub use whittaker::{cs_whittaker_gl2, cs_whittaker_gl4, cs_whittaker_gsp4, q_half_power, SQRT_Q};
pub use zeta::{two_variable_factor, zeta_series, PlaceData, PlaceType, ZetaConfig};
