//! The verification suites behind `verify nonarch` and `verify arch`,
//! returned as ordered lists of checks.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::archimedean::{
    arch_zeta_verify, random_barnes1, random_barnes2, random_gamma_point, random_stade,
    stade_fixed_point, verify_barnes1, verify_barnes2, verify_gamma_duplication,
    verify_gamma_reflection, verify_stade, ArchError, ArchField, ArchParams, CheckReport, QuadSpec,
    Stage,
};
use crate::lfactors::{
    branching_report, inert_sweep, split_sweep, two_variable_sweep, verify_inert,
    verify_separation_split, verify_split, verify_sym_alg_fact, verify_two_variable,
    IdentityReport,
};
use crate::reptheory::{gl3_weights, ReptheoryError, SatakeGL2, SatakeGL4, SatakeGSp4};

pub const SYM_ALG_MAX: u32 = 6;
pub const SEPARATION_MAX: u32 = 5;
pub const TWO_VARIABLE_U_ORDER: u32 = 4;
pub const BRANCHING_RANGE: (i32, i32) = (-3, 3);

#[derive(Debug, Clone, Serialize)]
pub struct NonarchConfig {
    pub order: u32,
    pub sweeps: u64,
    pub seed: u64,
    pub symbolic: bool,
    pub mutate: bool,
}

impl Default for NonarchConfig {
    fn default() -> Self {
        NonarchConfig {
            order: 8,
            sweeps: 50,
            seed: 0,
            symbolic: false,
            mutate: false,
        }
    }
}

/// Split, inert and two-variable identities (random sweep or symbolic),
/// then both plethysm factorizations and the branching law.
pub fn nonarch_checks(cfg: &NonarchConfig) -> Result<Vec<IdentityReport>, ReptheoryError> {
    let mut out = Vec::new();
    if cfg.symbolic {
        let (s4, s2, c) = (
            SatakeGL4::symbolic(),
            SatakeGL2::symbolic(),
            SatakeGSp4::symbolic(),
        );
        out.push(verify_split(&s4, &s2, cfg.order, cfg.mutate)?);
        out.extend(verify_inert(&c, &s2, cfg.order, cfg.mutate)?);
        out.push(verify_two_variable(
            &s4,
            &s2,
            cfg.order,
            TWO_VARIABLE_U_ORDER,
            cfg.mutate,
        )?);
    } else {
        out.extend(split_sweep(cfg.seed, cfg.sweeps, cfg.order, cfg.mutate)?);
        out.extend(inert_sweep(cfg.seed, cfg.sweeps, cfg.order, cfg.mutate)?);
        out.extend(two_variable_sweep(
            cfg.seed,
            cfg.sweeps,
            cfg.order,
            TWO_VARIABLE_U_ORDER,
            cfg.mutate,
        )?);
    }
    out.push(verify_sym_alg_fact(None, SYM_ALG_MAX, cfg.mutate)?);
    out.push(verify_separation_split(None, SEPARATION_MAX, cfg.mutate)?);
    let weights = gl3_weights(BRANCHING_RANGE.0, BRANCHING_RANGE.1);
    let branching: Result<Vec<IdentityReport>, ReptheoryError> =
        weights.par_iter().map(|w| branching_report(w)).collect();
    out.extend(branching?);
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct ArchConfig {
    pub stage: Stage,
    pub sweeps: u64,
    pub seed: u64,
    /// Replaces every per-check tolerance.
    pub tolerance: Option<f64>,
    /// Replaces the default quadrature of every check.
    pub quad: Option<QuadSpec>,
    pub fields: Vec<ArchField>,
    /// Replaces the default parameter sets of the zeta check.
    #[serde(skip)]
    pub params: Option<(ArchParams, Complex64)>,
}

impl Default for ArchConfig {
    fn default() -> Self {
        ArchConfig {
            stage: Stage::AfterBarnes1,
            sweeps: 20,
            seed: 0,
            tolerance: None,
            quad: None,
            fields: ArchField::ALL.to_vec(),
            params: None,
        }
    }
}

pub const TOL_GAMMA: f64 = 1e-12;
pub const TOL_BARNES: f64 = 1e-8;
pub const TOL_STADE: f64 = 1e-8;
pub const TOL_STADE_FIXED: f64 = 1e-12;
pub const TOL_AFTER_BARNES1: f64 = 1e-6;
pub const TOL_FULL: f64 = 1e-3;

impl ArchConfig {
    fn tol(&self, default: f64) -> f64 {
        self.tolerance.unwrap_or(default)
    }

    fn quad(&self, d: usize) -> QuadSpec {
        self.quad.unwrap_or_else(|| QuadSpec::for_dimension(d))
    }
}

fn collect_ordered<F>(n: u64, f: F) -> Result<Vec<CheckReport>, ArchError>
where
    F: Fn(u64) -> Result<Vec<CheckReport>, ArchError> + Sync + Send,
{
    let nested: Result<Vec<Vec<CheckReport>>, ArchError> = (0..n).into_par_iter().map(f).collect();
    Ok(nested?.into_iter().flatten().collect())
}

/// Gamma oracles, Barnes' lemmas, Stade's transformation and the zeta
/// integral at the chosen stage.
pub fn arch_checks(cfg: &ArchConfig) -> Result<Vec<CheckReport>, ArchError> {
    let mut out = collect_ordered(cfg.sweeps.max(100), |i| {
        let z = random_gamma_point(cfg.seed, i);
        Ok(vec![
            verify_gamma_reflection(z, cfg.tol(TOL_GAMMA))?,
            verify_gamma_duplication(z, cfg.tol(TOL_GAMMA))?,
        ])
    })?;
    let q1 = cfg.quad(1);
    let half = Complex64::new(0.5, 0.0);
    for &field in &cfg.fields {
        out.push(verify_barnes1(
            [half; 2],
            [half; 2],
            field,
            &q1,
            cfg.tol(TOL_BARNES),
        )?);
        out.extend(collect_ordered(cfg.sweeps, |i| {
            let (a, b) = random_barnes1(cfg.seed, i);
            let (a2, b2) = random_barnes2(cfg.seed, i);
            Ok(vec![
                verify_barnes1(a, b, field, &q1, cfg.tol(TOL_BARNES))?,
                verify_barnes2(a2, b2, field, &q1, cfg.tol(TOL_BARNES))?,
            ])
        })?);
        out.extend(collect_ordered(cfg.sweeps, |i| {
            Ok(vec![
                verify_stade(&random_stade(cfg.seed, i), field, &q1, cfg.tol(TOL_STADE))?,
                verify_stade(
                    &stade_fixed_point(cfg.seed, i),
                    field,
                    &q1,
                    cfg.tol(TOL_STADE_FIXED),
                )?
                .renamed("stade_fixed_point"),
            ])
        })?);
    }
    let (dim, tol) = match cfg.stage {
        Stage::AfterBarnes1 => (2, TOL_AFTER_BARNES1),
        Stage::Full => (4, TOL_FULL),
    };
    let one = Complex64::new(1.0, 0.0);
    let sets: Vec<(ArchParams, Complex64)> = match &cfg.params {
        Some(p) => vec![*p],
        None => cfg
            .fields
            .iter()
            .flat_map(|&f| match cfg.stage {
                Stage::AfterBarnes1 => {
                    vec![(ArchParams::trivial(f), one), (ArchParams::generic(f), one)]
                }
                Stage::Full => vec![(ArchParams::trivial(f), one)],
            })
            .collect(),
    };
    for (p, s) in sets {
        out.push(arch_zeta_verify(
            &p,
            s,
            cfg.stage,
            &cfg.quad(dim),
            cfg.tol(tol),
        )?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// A suite run as written by `--json` / `--out`.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: Value,
    pub checks: Vec<Value>,
    pub summary: Summary,
    pub pass: bool,
}

impl SuiteReport {
    pub fn new<T: Serialize>(suite: &str, config: Value, checks: &[T]) -> Self {
        let checks: Vec<Value> = checks
            .iter()
            .map(|c| serde_json::to_value(c).expect("report serializes"))
            .collect();
        let passed = checks
            .iter()
            .filter(|c| c["pass"] == Value::Bool(true))
            .count();
        SuiteReport {
            suite: suite.to_string(),
            config,
            summary: Summary {
                total: checks.len(),
                passed,
                failed: checks.len() - passed,
            },
            pass: passed == checks.len(),
            checks,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
