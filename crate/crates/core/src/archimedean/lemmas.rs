//! Barnes' first and second lemmas and Stade's transformation, checked by
//! quadrature against their closed forms.

use num_complex::Complex64;
use serde_json::json;

use crate::rng::{stream, uniform};

use super::gamma::{complex_gamma, gamma_c, gamma_r, ln_gamma_field};
use super::product::{AffineForm, GammaProduct};
use super::quadrature::{mb_integrate, MBIntegrand, QuadSpec};
use super::report::{complex_list, CheckReport};
use super::{ArchError, ArchField};

fn z_plus(c: Complex64) -> AffineForm {
    AffineForm::var("z") + c
}

fn minus_z_plus(c: Complex64) -> AffineForm {
    -AffineForm::var("z") + c
}

fn gf(field: ArchField, s: Complex64) -> Result<Complex64, ArchError> {
    ln_gamma_field(field, s)
}

/// `Γ_F(z+a1)Γ_F(z+a2)Γ_F(-z+b1)Γ_F(-z+b2)`.
pub fn barnes1_integrand(a: [Complex64; 2], b: [Complex64; 2], field: ArchField) -> MBIntegrand {
    let mut p = GammaProduct::new();
    for x in a {
        p = p.num(field, z_plus(x));
    }
    for y in b {
        p = p.num(field, minus_z_plus(y));
    }
    MBIntegrand::new(&["z"], p)
}

/// `∏ Γ_F(a_i+b_j) / Γ_F(a1+a2+b1+b2)`.
pub fn barnes1_closed_form(
    a: [Complex64; 2],
    b: [Complex64; 2],
    field: ArchField,
) -> Result<Complex64, ArchError> {
    let mut l = Complex64::new(0.0, 0.0);
    for x in a {
        for y in b {
            l += gf(field, x + y)?;
        }
    }
    l -= gf(field, a[0] + a[1] + b[0] + b[1])?;
    Ok(l.exp())
}

/// `Γ_F(z+a1)Γ_F(z+a2)Γ_F(-z+b1)Γ_F(-z+b2)Γ_F(-z+b3) / Γ_F(-z+a1+a2+b1+b2+b3)`.
pub fn barnes2_integrand(a: [Complex64; 2], b: [Complex64; 3], field: ArchField) -> MBIntegrand {
    let mut p = GammaProduct::new();
    for x in a {
        p = p.num(field, z_plus(x));
    }
    for y in b {
        p = p.num(field, minus_z_plus(y));
    }
    p = p.den(field, minus_z_plus(a[0] + a[1] + b[0] + b[1] + b[2]));
    MBIntegrand::new(&["z"], p)
}

/// `∏_{i,j} Γ_F(a_i+b_j) / ∏_{j<k} Γ_F(a1+a2+b_j+b_k)`.
pub fn barnes2_closed_form(
    a: [Complex64; 2],
    b: [Complex64; 3],
    field: ArchField,
) -> Result<Complex64, ArchError> {
    let mut l = Complex64::new(0.0, 0.0);
    for x in a {
        for y in b {
            l += gf(field, x + y)?;
        }
    }
    for (j, k) in [(0, 1), (0, 2), (1, 2)] {
        l -= gf(field, a[0] + a[1] + b[j] + b[k])?;
    }
    Ok(l.exp())
}

fn check_integral(
    check: &str,
    params: serde_json::Value,
    f: &MBIntegrand,
    rhs: Complex64,
    quad: &QuadSpec,
    tol: f64,
) -> Result<CheckReport, ArchError> {
    let q = mb_integrate(f, quad)?;
    Ok(CheckReport::compare(check, params, q.value, rhs, tol))
}

pub fn verify_barnes1(
    a: [Complex64; 2],
    b: [Complex64; 2],
    field: ArchField,
    quad: &QuadSpec,
    tol: f64,
) -> Result<CheckReport, ArchError> {
    let params = json!({"a": complex_list(&a), "b": complex_list(&b), "field": field});
    let rhs = barnes1_closed_form(a, b, field)?;
    check_integral(
        "barnes1",
        params,
        &barnes1_integrand(a, b, field),
        rhs,
        quad,
        tol,
    )
}

pub fn verify_barnes2(
    a: [Complex64; 2],
    b: [Complex64; 3],
    field: ArchField,
    quad: &QuadSpec,
    tol: f64,
) -> Result<CheckReport, ArchError> {
    let params = json!({"a": complex_list(&a), "b": complex_list(&b), "field": field});
    let rhs = barnes2_closed_form(a, b, field)?;
    check_integral(
        "barnes2",
        params,
        &barnes2_integrand(a, b, field),
        rhs,
        quad,
        tol,
    )
}

/// Parameters `(a1..a4, b1..b4)` of the integral
/// `Γ_F(z+a1)Γ_F(z+a2)Γ_F(z+a3)Γ_F(-z+b1)Γ_F(-z+b2)Γ_F(-z+b3) / [Γ_F(z+a4)Γ_F(-z+b4)]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StadeParams {
    pub a: [Complex64; 4],
    pub b: [Complex64; 4],
}

impl StadeParams {
    /// `Σ_{i<=3}(a_i+b_i) - (a4+b4)`.
    pub fn imbalance(&self) -> Complex64 {
        let s: Complex64 = (0..3).map(|i| self.a[i] + self.b[i]).sum();
        s - self.a[3] - self.b[3]
    }

    fn check_balance(&self) -> Result<(), ArchError> {
        let scale: f64 = 1.0 + self.a.iter().chain(&self.b).map(|z| z.norm()).sum::<f64>();
        let d = self.imbalance().norm();
        if d > 1e-12 * scale {
            return Err(ArchError::BalanceViolation(d));
        }
        Ok(())
    }

    fn to_json(self) -> serde_json::Value {
        json!({"a": complex_list(&self.a), "b": complex_list(&self.b)})
    }
}

/// `(a1, a2, b4-b1-b2, a1+a2+b3; b1, b2, a4-a1-a2, b1+b2+a3)`.
pub fn stade_transform(p: &StadeParams) -> StadeParams {
    let [a1, a2, a3, a4] = p.a;
    let [b1, b2, b3, b4] = p.b;
    StadeParams {
        a: [a1, a2, b4 - b1 - b2, a1 + a2 + b3],
        b: [b1, b2, a4 - a1 - a2, b1 + b2 + a3],
    }
}

pub fn stade_integrand(p: &StadeParams, field: ArchField) -> MBIntegrand {
    let mut g = GammaProduct::new();
    for i in 0..3 {
        g = g.num(field, z_plus(p.a[i]));
    }
    for i in 0..3 {
        g = g.num(field, minus_z_plus(p.b[i]));
    }
    g = g
        .den(field, z_plus(p.a[3]))
        .den(field, minus_z_plus(p.b[3]));
    MBIntegrand::new(&["z"], g)
}

/// `Γ_F(a1+b3)Γ_F(a2+b3)Γ_F(a3+b1)Γ_F(a3+b2) / [Γ_F(a4-a1)Γ_F(a4-a2)Γ_F(b4-b1)Γ_F(b4-b2)]`,
/// the factor relating the integral at `p` to the integral at
/// `stade_transform(p)`. It is 1 at fixed points of the transform.
pub fn stade_ratio(p: &StadeParams, field: ArchField) -> Result<Complex64, ArchError> {
    let [a1, a2, a3, a4] = p.a;
    let [b1, b2, b3, b4] = p.b;
    let mut l = Complex64::new(0.0, 0.0);
    for x in [a1 + b3, a2 + b3, a3 + b1, a3 + b2] {
        l += gf(field, x)?;
    }
    for x in [a4 - a1, a4 - a2, b4 - b1, b4 - b2] {
        match gf(field, x) {
            Ok(v) => l -= v,
            Err(_) => return Ok(Complex64::new(0.0, 0.0)),
        }
    }
    Ok(l.exp())
}

/// Compares the integral at `p` with `stade_ratio(p)` times the integral at
/// `stade_transform(p)`.
pub fn verify_stade(
    p: &StadeParams,
    field: ArchField,
    quad: &QuadSpec,
    tol: f64,
) -> Result<CheckReport, ArchError> {
    p.check_balance()?;
    let q = stade_transform(p);
    let lhs = mb_integrate(&stade_integrand(p, field), quad)?;
    let rhs = mb_integrate(&stade_integrand(&q, field), quad)?;
    let mut params = p.to_json();
    params["field"] = json!(field);
    let ratio = stade_ratio(p, field)?;
    Ok(CheckReport::compare(
        "stade",
        params,
        lhs.value,
        ratio * rhs.value,
        tol,
    ))
}

fn admissible(r: &mut rand_xoshiro::SplitMix64) -> Complex64 {
    let re = uniform(r, 0.3, 2.0);
    let im = uniform(r, -0.5, 0.5);
    Complex64::new(re, im)
}

/// Draw `index`: `a1, a2, b1, b2`, each with real part in `[0.3, 2)` and
/// imaginary part in `[-0.5, 0.5)`.
pub fn random_barnes1(seed: u64, index: u64) -> ([Complex64; 2], [Complex64; 2]) {
    let mut r = stream(seed, index);
    let a = [admissible(&mut r), admissible(&mut r)];
    let b = [admissible(&mut r), admissible(&mut r)];
    (a, b)
}

/// Draw `index`: `a1, a2, b1, b2, b3` as in `random_barnes1`.
pub fn random_barnes2(seed: u64, index: u64) -> ([Complex64; 2], [Complex64; 3]) {
    let mut r = stream(seed, index);
    let a = [admissible(&mut r), admissible(&mut r)];
    let b = [admissible(&mut r), admissible(&mut r), admissible(&mut r)];
    (a, b)
}

/// Balanced draw: `a1, a2, a3, b1, b2, b3`, then `r` with
/// `0.3 <= Re r <= max(0.3, min(2, Re(a3+b3) - 0.3))`; `a4 = a1+a2+r` and
/// `b4` closes the balance. Both sides then have nonempty windows.
pub fn random_stade(seed: u64, index: u64) -> StadeParams {
    let mut g = stream(seed, index);
    let a: Vec<Complex64> = (0..3).map(|_| admissible(&mut g)).collect();
    let b: Vec<Complex64> = (0..3).map(|_| admissible(&mut g)).collect();
    let hi = (a[2].re + b[2].re - 0.3).clamp(0.3, 2.0);
    let r = Complex64::new(uniform(&mut g, 0.3, hi), uniform(&mut g, -0.5, 0.5));
    let a4 = a[0] + a[1] + r;
    let b4 = a.iter().chain(&b).sum::<Complex64>() - a4;
    StadeParams {
        a: [a[0], a[1], a[2], a4],
        b: [b[0], b[1], b[2], b4],
    }
}

/// A draw with `a3 = b4-b1-b2` and `a4 = a1+a2+b3`, fixed by the transform.
pub fn stade_fixed_point(seed: u64, index: u64) -> StadeParams {
    let mut g = stream(seed, index);
    let a1 = admissible(&mut g);
    let a2 = admissible(&mut g);
    let a3 = admissible(&mut g);
    let b: Vec<Complex64> = (0..3).map(|_| admissible(&mut g)).collect();
    StadeParams {
        a: [a1, a2, a3, a1 + a2 + b[2]],
        b: [b[0], b[1], b[2], a3 + b[0] + b[1]],
    }
}

/// Point with real and imaginary parts in `[-4, 4)`.
pub fn random_gamma_point(seed: u64, index: u64) -> Complex64 {
    let mut g = stream(seed, index);
    let re = uniform(&mut g, -4.0, 4.0);
    let im = uniform(&mut g, -4.0, 4.0);
    Complex64::new(re, im)
}

/// `Γ(z) Γ(1-z) sin(πz) / π` against 1.
pub fn verify_gamma_reflection(z: Complex64, tol: f64) -> Result<CheckReport, ArchError> {
    let pi = std::f64::consts::PI;
    let lhs = complex_gamma(z)? * complex_gamma(1.0 - z)? * (pi * z).sin() / pi;
    let params = json!({"z": complex_list(&[z])[0]});
    Ok(CheckReport::compare(
        "gamma_reflection",
        params,
        lhs,
        Complex64::new(1.0, 0.0),
        tol,
    ))
}

/// `Γ_R(s) Γ_R(s+1)` against `Γ_C(s)`.
pub fn verify_gamma_duplication(s: Complex64, tol: f64) -> Result<CheckReport, ArchError> {
    let lhs = gamma_r(s)? * gamma_r(s + 1.0)?;
    let params = json!({"s": complex_list(&[s])[0]});
    Ok(CheckReport::compare(
        "gamma_duplication",
        params,
        lhs,
        gamma_c(s)?,
        tol,
    ))
}
