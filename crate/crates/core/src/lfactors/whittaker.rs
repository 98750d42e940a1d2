//! Unramified Whittaker values on torus elements indexed by `(n, m)`.
//!
//! The residue-field size enters only through the formal symbol `sqrt_q`,
//! with `q = sqrt_q^2`.

use crate::algebra::LaurentPoly;
use crate::reptheory::{
    exterior_square_satake, specialize, weyl_character, ReptheoryError, RootSystemId, SatakeGL2,
    SatakeGL4, SatakeGSp4,
};

pub const SQRT_Q: &str = "sqrt_q";

/// `q^(k/2)`.
pub fn q_half_power(k: i32) -> LaurentPoly {
    LaurentPoly::var(SQRT_Q).pow(k).expect("monomial power")
}

/// `q^(-3n-2m) Tr(V_(m+n, n))` on the `GSp_4` avatar.
pub fn cs_whittaker_gsp4(n: u32, m: u32, c: &SatakeGSp4) -> Result<LaurentPoly, ReptheoryError> {
    let (n, m) = (n as i32, m as i32);
    let chi = weyl_character(RootSystemId::C2Sim, &[m + n, n])?;
    let point = c.torus_point();
    let refs: Vec<(&str, LaurentPoly)> = point.iter().map(|(k, v)| (*k, v.clone())).collect();
    Ok(&q_half_power(-6 * n - 4 * m) * &specialize(&chi, &refs)?)
}

/// `q^(-3n-2m) Tr(∧^2 s | V_(m+n, n, 0))` through the `D3sim` character at
/// the exterior-square coordinates.
pub fn cs_whittaker_gl4(n: u32, m: u32, s4: &SatakeGL4) -> Result<LaurentPoly, ReptheoryError> {
    let (n, m) = (n as i32, m as i32);
    let chi = weyl_character(RootSystemId::D3Sim, &[m + n, n, 0])?;
    let e = exterior_square_satake(s4);
    Ok(&q_half_power(-6 * n - 4 * m) * &specialize(&chi, &e.torus_point())?)
}

/// `q^(-m/2) Tr(s | W_(m+n, n))`.
pub fn cs_whittaker_gl2(n: u32, m: u32, s2: &SatakeGL2) -> Result<LaurentPoly, ReptheoryError> {
    let (n, m) = (n as i32, m as i32);
    let chi = weyl_character(RootSystemId::A1, &[m + n, n])?;
    let point = [("x1", s2.beta[0].clone()), ("x2", s2.beta[1].clone())];
    Ok(&q_half_power(-m) * &specialize(&chi, &point)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn trivial_index_gives_one() {
        assert_eq!(
            cs_whittaker_gsp4(0, 0, &SatakeGSp4::symbolic()).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(
            cs_whittaker_gl4(0, 0, &SatakeGL4::symbolic()).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(
            cs_whittaker_gl2(0, 0, &SatakeGL2::symbolic()).unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn dimensions_at_trivial_parameters() {
        let g = cs_whittaker_gsp4(0, 1, &SatakeGSp4::trivial()).unwrap();
        assert_eq!(g, LaurentPoly::constant(rat(4, 1)) * q_half_power(-4));
        let g = cs_whittaker_gsp4(1, 0, &SatakeGSp4::trivial()).unwrap();
        assert_eq!(g, LaurentPoly::constant(rat(5, 1)) * q_half_power(-6));
        let g = cs_whittaker_gl4(0, 1, &SatakeGL4::trivial()).unwrap();
        assert_eq!(g, LaurentPoly::constant(rat(6, 1)) * q_half_power(-4));
    }

    #[test]
    fn gl2_first_step() {
        let w = cs_whittaker_gl2(0, 1, &SatakeGL2::symbolic()).unwrap();
        assert_eq!(w, p("sqrt_q^-1*b1 + sqrt_q^-1*b2"));
    }

    #[test]
    fn gl4_first_step_is_exterior_square_trace() {
        let w = cs_whittaker_gl4(0, 1, &SatakeGL4::symbolic()).unwrap();
        let e = exterior_square_satake(&SatakeGL4::symbolic());
        let trace: LaurentPoly = e.eigenvalues.iter().cloned().sum();
        assert_eq!(w, &trace * &q_half_power(-4));
    }
}
