//! Spherical Whittaker functions through their Mellin-Barnes expressions,
//! normalized exactly as displayed (no extra constants).

use num_complex::Complex64;

use super::product::{AffineForm, GammaProduct};
use super::quadrature::{mb_integrate, MBIntegrand, QuadSpec, QuadratureResult};
use super::{ArchError, ArchField};

/// `W(a0, a1) = 2^ε a0^(ε(ν0-ν1/2)+ε/2) a1^ε (4πi)^-1 ∫ Γ_F(p0+ν1/2) Γ_F(p0-ν1/2) (a0 a1^2)^(-ε p0) dp0`.
pub fn whittaker_gl2_arch(
    nu: [Complex64; 2],
    a0: f64,
    a1: f64,
    field: ArchField,
    quad: &QuadSpec,
) -> Result<QuadratureResult, ArchError> {
    if !(a0 > 0.0 && a1 > 0.0) {
        return Err(ArchError::InvalidInput(
            "torus coordinates must be positive".into(),
        ));
    }
    let eps = field.epsilon();
    let p0 = AffineForm::var("p0");
    let product = GammaProduct::new()
        .num(field, p0.clone() + nu[1] / 2.0)
        .num(field, p0.clone() - nu[1] / 2.0);
    let log_x = (a0 * a1 * a1).ln();
    let pre =
        (eps * 2f64.ln() + (eps * (nu[0] - nu[1] / 2.0) + eps / 2.0) * a0.ln() + eps * a1.ln())
            .exp();
    let f = MBIntegrand::new(&["p0"], product)
        .with_exponent(-eps * log_x * p0)
        .with_prefactor(pre);
    mb_integrate(&f, quad)
}

/// `U_μ(q1,q2) = ∏_{i=2..4} Γ_F(q1+μ_i) Γ_F(q2+|μ|-μ_i) / Γ_F(q1+q2+|μ|)`.
pub(crate) fn u_kernel(mu: &[Complex64; 4], field: ArchField) -> GammaProduct {
    let total: Complex64 = mu.iter().sum();
    let q1 = AffineForm::var("q1");
    let q2 = AffineForm::var("q2");
    let mut p = GammaProduct::new();
    for m in &mu[1..] {
        p = p.num(field, q1.clone() + *m);
    }
    for m in &mu[1..] {
        p = p.num(field, q2.clone() + (total - m));
    }
    p.den(field, q1 + q2 + total)
}

/// Integrand of `V_μ(p1,p2,p3)` over `(q1, q2)`:
/// `U_μ Γ_F(p1+μ1) Γ_F(p1-q1) Γ_F(p2-q1+μ1) Γ_F(p2-q2-μ1) Γ_F(p3-q2) Γ_F(p3+|μ|-μ1)`.
pub fn gl4_kernel_integrand(
    mu: [Complex64; 4],
    p: [Complex64; 3],
    field: ArchField,
) -> MBIntegrand {
    let total: Complex64 = mu.iter().sum();
    let q1 = AffineForm::var("q1");
    let q2 = AffineForm::var("q2");
    let c = AffineForm::constant;
    let prod = u_kernel(&mu, field)
        .num(field, c(p[0] + mu[0]))
        .num(field, -q1.clone() + p[0])
        .num(field, -q1 + (p[1] + mu[0]))
        .num(field, -q2.clone() + (p[1] - mu[0]))
        .num(field, -q2 + p[2])
        .num(field, c(p[2] + total - mu[0]));
    MBIntegrand::new(&["q1", "q2"], prod)
}

pub fn whittaker_gl4_kernel(
    mu: [Complex64; 4],
    p: [Complex64; 3],
    field: ArchField,
    quad: &QuadSpec,
) -> Result<QuadratureResult, ArchError> {
    mb_integrate(&gl4_kernel_integrand(mu, p, field), quad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::archimedean::c64;

    #[test]
    fn gl2_real_on_real_parameters() {
        let quad = QuadSpec::for_dimension(1);
        for field in ArchField::ALL {
            let w =
                whittaker_gl2_arch([c64(0.3, 0.0), c64(0.4, 0.0)], 1.0, 1.0, field, &quad).unwrap();
            assert!(w.value.im.abs() <= 1e-10, "{:?}", w.value);
        }
    }

    #[test]
    fn gl2_tail_decays() {
        let quad = QuadSpec::for_dimension(1);
        let vals: Vec<f64> = [2.0, 3.0, 4.0, 6.0, 8.0]
            .iter()
            .map(|&a0| {
                whittaker_gl2_arch([c64(0.0, 0.0), c64(0.0, 0.5)], a0, 1.0, ArchField::R, &quad)
                    .unwrap()
                    .value
                    .norm()
            })
            .collect();
        assert!(vals.windows(2).all(|w| w[1] < w[0]), "{vals:?}");
    }

    #[test]
    fn gl2_truncation_height() {
        let nu = [c64(0.1, 0.2), c64(0.0, 0.7)];
        let q = QuadSpec::for_dimension(1);
        let a = whittaker_gl2_arch(nu, 1.3, 0.8, ArchField::C, &q).unwrap();
        let b = whittaker_gl2_arch(
            nu,
            1.3,
            0.8,
            ArchField::C,
            &QuadSpec {
                t_max: 80.0,
                nodes: 8000,
                ..q
            },
        )
        .unwrap();
        assert!((a.value - b.value).norm() < 1e-10);
    }

    fn kernel_quad() -> QuadSpec {
        QuadSpec {
            nodes: 800,
            ..QuadSpec::for_dimension(2)
        }
    }

    #[test]
    fn gl4_kernel_symmetric_in_mu2_mu3() {
        let mu = [
            c64(0.1, 0.1),
            c64(0.2, -0.1),
            c64(-0.05, 0.3),
            c64(0.0, 0.05),
        ];
        let swapped = [mu[0], mu[2], mu[1], mu[3]];
        let p = [c64(1.5, 0.1), c64(1.4, 0.0), c64(1.6, -0.2)];
        let a = whittaker_gl4_kernel(mu, p, ArchField::R, &kernel_quad()).unwrap();
        let b = whittaker_gl4_kernel(swapped, p, ArchField::R, &kernel_quad()).unwrap();
        assert!((a.value - b.value).norm() <= 1e-8 * a.value.norm());
    }

    #[test]
    fn gl4_kernel_conjugation() {
        let mu = [
            c64(0.1, 0.1),
            c64(0.2, -0.1),
            c64(-0.05, 0.3),
            c64(0.0, 0.05),
        ];
        let p = [c64(1.5, 0.1), c64(1.4, 0.0), c64(1.6, -0.2)];
        let a = whittaker_gl4_kernel(mu, p, ArchField::C, &kernel_quad()).unwrap();
        let b = whittaker_gl4_kernel(
            mu.map(|z| z.conj()),
            p.map(|z| z.conj()),
            ArchField::C,
            &kernel_quad(),
        )
        .unwrap();
        assert!((a.value.conj() - b.value).norm() <= 1e-10 * a.value.norm().max(1.0));
    }
}
