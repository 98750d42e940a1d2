//! Complex gamma function and the archimedean factors `Γ_R`, `Γ_C`.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::{ArchError, ArchField};

const LANCZOS_R: f64 = 10.900511;

const LANCZOS_D: [f64; 11] = [
    2.485_740_891_387_535_5e-5,
    1.051_423_785_817_219_7,
    -3.456_870_972_220_162_5,
    4.512_277_094_668_948,
    -2.982_852_253_235_766_4,
    1.056_397_115_771_267,
    -1.954_287_731_916_458_7e-1,
    1.709_705_434_044_412e-2,
    -5.719_261_174_043_057e-4,
    4.633_994_733_599_057e-6,
    -2.719_949_084_886_077_2e-9,
];

// ln(2 sqrt(e / pi))
const LN_TWO_SQRT_E_OVER_PI: f64 = 0.620_782_237_635_245_2;

fn ln_pi() -> f64 {
    PI.ln()
}

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

fn lanczos_ln(z: Complex64) -> Complex64 {
    let mut s = Complex64::new(LANCZOS_D[0], 0.0);
    for (k, d) in LANCZOS_D.iter().enumerate().skip(1) {
        s += *d / (z + (k as f64 - 1.0));
    }
    let zh = z - 0.5;
    LN_TWO_SQRT_E_OVER_PI + zh * ((zh + LANCZOS_R).ln() - 1.0) + s.ln()
}

/// `ln sin(pi z)` without overflow for large `|Im z|`.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let i = Complex64::i();
    let ipz = i * PI * z;
    if z.im >= 0.0 {
        -ipz + ((2.0 * ipz).exp() - 1.0).ln() - (2.0 * i).ln()
    } else {
        ipz + (1.0 - (-2.0 * ipz).exp()).ln() - (2.0 * i).ln()
    }
}

/// A logarithm of `Γ(z)`, correct modulo `2πi`.
pub fn ln_gamma(z: Complex64) -> Result<Complex64, ArchError> {
    if is_nonpositive_integer(z) {
        return Err(ArchError::PoleAtNonPositiveInteger(format!(
            "Gamma({})",
            fmt_c(z)
        )));
    }
    if z.re < 0.5 {
        Ok(ln_pi() - ln_sin_pi(z) - lanczos_ln(1.0 - z))
    } else {
        Ok(lanczos_ln(z))
    }
}

pub fn complex_gamma(z: Complex64) -> Result<Complex64, ArchError> {
    ln_gamma(z).map(Complex64::exp)
}

/// `ln Γ_F(s)`; `Γ_R(s) = π^(-s/2) Γ(s/2)` and `Γ_C(s) = 2 (2π)^(-s) Γ(s)`.
pub fn ln_gamma_field(field: ArchField, s: Complex64) -> Result<Complex64, ArchError> {
    let named = |e: ArchError| match e {
        ArchError::PoleAtNonPositiveInteger(_) => {
            ArchError::PoleAtNonPositiveInteger(format!("{}({})", field.gamma_name(), fmt_c(s)))
        }
        e => e,
    };
    match field {
        ArchField::R => Ok(-0.5 * s * ln_pi() + ln_gamma(s / 2.0).map_err(named)?),
        ArchField::C => Ok(LN_2 - s * (2.0 * PI).ln() + ln_gamma(s).map_err(named)?),
    }
}

pub fn gamma_r(s: Complex64) -> Result<Complex64, ArchError> {
    ln_gamma_field(ArchField::R, s).map(Complex64::exp)
}

pub fn gamma_c(s: Complex64) -> Result<Complex64, ArchError> {
    ln_gamma_field(ArchField::C, s).map(Complex64::exp)
}

pub(crate) fn fmt_c(z: Complex64) -> String {
    format!("{}{:+}i", z.re, z.im)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1e-300)
    }

    #[test]
    fn classical_values() {
        assert!(close(
            complex_gamma(c(1.0, 0.0)).unwrap(),
            c(1.0, 0.0),
            1e-14
        ));
        assert!(close(
            complex_gamma(c(0.5, 0.0)).unwrap(),
            c(PI.sqrt(), 0.0),
            1e-14
        ));
        assert!(close(
            complex_gamma(c(5.0, 0.0)).unwrap(),
            c(24.0, 0.0),
            1e-13
        ));
        assert!(close(
            complex_gamma(c(-0.5, 0.0)).unwrap(),
            c(-2.0 * PI.sqrt(), 0.0),
            1e-13
        ));
        assert!(close(gamma_r(c(1.0, 0.0)).unwrap(), c(1.0, 0.0), 1e-14));
        assert!(close(
            gamma_c(c(1.0, 0.0)).unwrap(),
            c(1.0 / PI, 0.0),
            1e-14
        ));
        assert!(close(
            gamma_r(c(2.0, 0.0)).unwrap(),
            c(1.0 / PI, 0.0),
            1e-14
        ));
    }

    #[test]
    fn gamma_of_i() {
        // |Γ(i)|^2 = π / sinh(π)
        let g = complex_gamma(c(0.0, 1.0)).unwrap();
        assert!((g.norm_sqr() - PI / PI.sinh()).abs() < 1e-14);
    }

    #[test]
    fn recurrence_far_up_the_line() {
        for y in [10.0, 40.0, 90.0] {
            let z = c(0.3, y);
            let lhs = ln_gamma(z + 1.0).unwrap();
            let rhs = ln_gamma(z).unwrap() + z.ln();
            let d = (lhs - rhs).exp();
            assert!((d - 1.0).norm() < 1e-12, "{y}");
        }
    }

    #[test]
    fn far_left_half_plane() {
        let z = c(-3.7, -25.0);
        let d = (ln_gamma(z + 1.0).unwrap() - ln_gamma(z).unwrap() - z.ln()).exp();
        assert!((d - 1.0).norm() < 1e-12);
    }

    #[test]
    fn poles_are_reported() {
        assert!(matches!(
            complex_gamma(c(0.0, 0.0)),
            Err(ArchError::PoleAtNonPositiveInteger(_))
        ));
        assert!(matches!(
            complex_gamma(c(-3.0, 0.0)),
            Err(ArchError::PoleAtNonPositiveInteger(_))
        ));
        assert!(gamma_r(c(-1.0, 0.0)).is_ok());
        assert!(gamma_r(c(-2.0, 0.0)).is_err());
        assert!(gamma_c(c(-1.0, 0.0)).is_err());
    }
}
