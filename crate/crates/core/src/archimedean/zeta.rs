//! Archimedean L-factors of the spherical principal series and the
//! Mellin-Barnes evaluation of the local zeta integral.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::product::{AffineForm, GammaProduct};
use super::quadrature::{mb_integrate, MBIntegrand, QuadSpec};
use super::report::{complex_json, complex_list, parse_complex, CheckReport};
use super::whittaker::u_kernel;
use super::{ArchError, ArchField};

/// Spherical data: `μ` for the `GL_4` side, `ν = (ν0, ν1)` for the `GL_2`
/// side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArchParams {
    pub mu: [Complex64; 4],
    pub nu: [Complex64; 2],
    pub field: ArchField,
}

impl ArchParams {
    pub fn trivial(field: ArchField) -> Self {
        let z = Complex64::new(0.0, 0.0);
        ArchParams {
            mu: [z; 4],
            nu: [z; 2],
            field,
        }
    }

    /// `μ = (0.1, 0.05, -0.05, -0.1) i`, `ν1 = 0.1 + 0.2i` and `ν0` from the
    /// central character condition.
    pub fn generic(field: ArchField) -> Self {
        let mu = [0.1, 0.05, -0.05, -0.1].map(|y| Complex64::new(0.0, y));
        let nu1 = Complex64::new(0.1, 0.2);
        let total: Complex64 = mu.iter().sum();
        ArchParams {
            mu,
            nu: [(nu1 - total) / 2.0, nu1],
            field,
        }
    }

    /// `|μ| = μ1+μ2+μ3+μ4`.
    pub fn mu_total(&self) -> Complex64 {
        self.mu.iter().sum()
    }

    /// `2ν0 - ν1 + |μ|`; zero when the central characters cancel.
    pub fn cc_defect(&self) -> Complex64 {
        2.0 * self.nu[0] - self.nu[1] + self.mu_total()
    }

    pub fn check_cc(&self) -> Result<(), ArchError> {
        let d = self.cc_defect().norm();
        let scale = 1.0
            + self
                .nu
                .iter()
                .chain(&self.mu)
                .map(|z| z.norm())
                .sum::<f64>();
        if d > 1e-12 * scale {
            return Err(ArchError::CentralCharacterViolation(d));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({"mu": complex_list(&self.mu), "nu": complex_list(&self.nu), "field": self.field})
    }

    /// `{"mu": [4 complex], "nu": [2 complex], "field": "R"|"C"}`; complex
    /// numbers as `[re, im]`. Missing `mu`/`nu` default to zero, missing
    /// `field` to `default_field`.
    pub fn from_json(v: &Value, default_field: ArchField) -> Result<Self, ArchError> {
        let mut p = ArchParams::trivial(default_field);
        let list = |key: &str, n: usize| -> Result<Option<Vec<Complex64>>, ArchError> {
            match v.get(key) {
                None => Ok(None),
                Some(Value::Array(xs)) if xs.len() == n => xs
                    .iter()
                    .map(parse_complex)
                    .collect::<Result<_, _>>()
                    .map(Some),
                Some(other) => Err(ArchError::InvalidInput(format!(
                    "{key}: expected {n} complex numbers, got {other}"
                ))),
            }
        };
        if let Some(m) = list("mu", 4)? {
            p.mu.copy_from_slice(&m);
        }
        if let Some(n) = list("nu", 2)? {
            p.nu.copy_from_slice(&n);
        }
        if let Some(f) = v.get("field") {
            p.field = f
                .as_str()
                .ok_or_else(|| ArchError::InvalidInput("field must be a string".into()))?
                .parse()?;
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LFactorKind {
    Wedge2Std2,
    Sym2Twist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    AfterBarnes1,
    Full,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::AfterBarnes1 => "after_barnes1",
            Stage::Full => "full",
        }
    }
}

/// The factor as a product in the variable `s`, and its value at `s`.
///
/// `∧^2 ⊗ std_2`: `∏_{i<j} Γ_F(s+μi+μj+ν0) Γ_F(s+μi+μj+ν0-ν1)`.
/// `Sym^2 ⊗ ω`: `Γ_F(s+2ν0+|μ|) Γ_F(s+2ν0-2ν1+|μ|) Γ_F(s+2ν0-ν1+|μ|)`.
pub fn arch_lfactor(
    params: &ArchParams,
    kind: LFactorKind,
    s: Complex64,
) -> Result<(Complex64, GammaProduct), ArchError> {
    let f = params.field;
    let sv = AffineForm::var("s");
    let [nu0, nu1] = params.nu;
    let total = params.mu_total();
    let mut p = GammaProduct::new();
    match kind {
        LFactorKind::Wedge2Std2 => {
            for i in 0..4 {
                for j in i + 1..4 {
                    let m = params.mu[i] + params.mu[j] + nu0;
                    p = p.num(f, sv.clone() + m).num(f, sv.clone() + (m - nu1));
                }
            }
        }
        LFactorKind::Sym2Twist => {
            for shift in [2.0 * nu0, 2.0 * nu0 - 2.0 * nu1, 2.0 * nu0 - nu1] {
                p = p.num(f, sv.clone() + (shift + total));
            }
        }
    }
    let point: HashMap<&str, Complex64> = [("s", s)].into_iter().collect();
    let mut l = Complex64::new(0.0, 0.0);
    for g in &p.numerator {
        l += g.ln_eval(&point).map_err(|_| {
            ArchError::PoleAtNonPositiveInteger(format!("{g} at s = {}{:+}i", s.re, s.im))
        })?;
    }
    Ok((l.exp(), p))
}

/// `∏_{i<j} Γ_F(s-|μ|/2+μi+μj+ν1/2) Γ_F(s-|μ|/2+μi+μj-ν1/2) / [Γ_F(2s) Γ_F(2s+ν1) Γ_F(2s-ν1)]`.
pub fn zeta_closed_form(params: &ArchParams, s: Complex64) -> Result<Complex64, ArchError> {
    let f = params.field;
    let half = params.mu_total() / 2.0;
    let nu1 = params.nu[1];
    let c = AffineForm::constant;
    let mut p = GammaProduct::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let m = s - half + params.mu[i] + params.mu[j];
            p = p.num(f, c(m + nu1 / 2.0)).num(f, c(m - nu1 / 2.0));
        }
    }
    for d in [2.0 * s, 2.0 * s + nu1, 2.0 * s - nu1] {
        p = p.den(f, c(d));
    }
    p.value()
}

/// Two-dimensional integrand over `(q1, q2)`:
/// `Γ_F(2s) U_μ A1 A2 / [Γ_F(2s-|μ|-q1-q2) Γ_F(4s-|μ|-q1-q2)]` with
/// `A1 = ∏_± Γ_F(s-|μ|/2±ν1/2-q1+μ1) Γ_F(s-|μ|/2±ν1/2-q2-μ1)` and
/// `A2 = Γ_F(2s-|μ|+μ1-q2) Γ_F(2s-|μ|-q1-q2) Γ_F(2s-q1-μ1)`.
pub fn after_barnes1_integrand(params: &ArchParams, s: Complex64) -> MBIntegrand {
    let f = params.field;
    let mu1 = params.mu[0];
    let total = params.mu_total();
    let nu1 = params.nu[1];
    let q1 = || AffineForm::var("q1");
    let q2 = || AffineForm::var("q2");
    let mut p = u_kernel(&params.mu, f).num(f, AffineForm::constant(2.0 * s));
    for sign in [1.0, -1.0] {
        let b = s - total / 2.0 + sign * nu1 / 2.0;
        p = p.num(f, -q1() + (b + mu1)).num(f, -q2() + (b - mu1));
    }
    p = p
        .num(f, -q2() + (2.0 * s - total + mu1))
        .num(f, -q1() - q2() + (2.0 * s - total))
        .num(f, -q1() + (2.0 * s - mu1))
        .den(f, -q1() - q2() + (2.0 * s - total))
        .den(f, -q1() - q2() + (4.0 * s - total));
    MBIntegrand::new(&["q1", "q2"], p.cancel())
}

/// Four-dimensional integrand over `(p2, p3, q1, q2)` before either
/// application of Barnes' first lemma.
pub fn full_stage_integrand(params: &ArchParams, s: Complex64) -> MBIntegrand {
    let f = params.field;
    let mu1 = params.mu[0];
    let total = params.mu_total();
    let nu1 = params.nu[1];
    let v = AffineForm::var;
    let b = s - total / 2.0;
    let p = u_kernel(&params.mu, f)
        .num(f, -v("p2") + (b + nu1 / 2.0))
        .num(f, -v("p2") + (b - nu1 / 2.0))
        .num(f, -v("p3") + (2.0 * s - total + mu1))
        .num(f, -v("p3") - v("q1") + (2.0 * s - total))
        .num(f, v("p2") - v("q1") + mu1)
        .num(f, v("p2") - v("q2") - mu1)
        .num(f, v("p3") - v("q2"))
        .num(f, v("p3") + (total - mu1));
    MBIntegrand::new(&["p2", "p3", "q1", "q2"], p)
}

/// Quadrature of the chosen stage against
/// `L(s, ∧^2 ⊗ std_2) / L(2s, Sym^2 ⊗ ω)`.
pub fn arch_zeta_verify(
    params: &ArchParams,
    s: Complex64,
    stage: Stage,
    quad: &QuadSpec,
    tol: f64,
) -> Result<CheckReport, ArchError> {
    params.check_cc()?;
    let integrand = match stage {
        Stage::AfterBarnes1 => after_barnes1_integrand(params, s),
        Stage::Full => full_stage_integrand(params, s),
    };
    let q = mb_integrate(&integrand, quad)?;
    let (num, _) = arch_lfactor(params, LFactorKind::Wedge2Std2, s)?;
    let (den, _) = arch_lfactor(params, LFactorKind::Sym2Twist, 2.0 * s)?;
    let mut p = params.to_json();
    p["s"] = complex_json(s);
    p["stage"] = json!(stage.name());
    p["nodes"] = json!(quad.nodes);
    p["T"] = json!(quad.t_max);
    Ok(CheckReport::compare(
        &format!("zeta_{}", stage.name()),
        p,
        q.value,
        num / den,
        tol,
    ))
}
