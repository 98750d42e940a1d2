//! Trapezoidal quadrature on truncated vertical lines `σ_k + i[-T, T]`,
//! normalized by `(4πi)^-1` per variable.
//!
//! Every gamma argument has integer coefficients in the integration
//! variables, so on a uniform grid it only takes `O(nodes)` distinct values
//! per coefficient vector. Those are tabulated once and the multi-dimensional
//! sum is contracted one variable at a time. Each output entry of a
//! contraction is summed sequentially in index order, so results do not
//! depend on the number of worker threads.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::contour::{choose_abscissas, min_slack};
use super::gamma::ln_gamma_field;
use super::product::{AffineForm, GammaFactor, GammaProduct};
use super::ArchError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadSpec {
    /// Truncation height.
    #[serde(rename = "T")]
    pub t_max: f64,
    /// Subintervals per dimension; must be a multiple of 4.
    pub nodes: usize,
    /// Minimum allowed distance between a contour and the nearest pole.
    #[serde(default = "default_margin")]
    pub margin: f64,
}

fn default_margin() -> f64 {
    1e-2
}

impl QuadSpec {
    pub const DEFAULT_T: f64 = 40.0;

    /// `T = 40` with 4000 nodes for one or two variables; `T = 20` with 400
    /// nodes beyond that.
    pub fn for_dimension(d: usize) -> Self {
        if d <= 2 {
            QuadSpec {
                t_max: Self::DEFAULT_T,
                nodes: 4000,
                margin: default_margin(),
            }
        } else {
            QuadSpec {
                t_max: Self::DEFAULT_T / 2.0,
                nodes: 400,
                margin: default_margin(),
            }
        }
    }
}

/// `prefactor · exp(exponent) · product` integrated over `vars`.
#[derive(Debug, Clone, PartialEq)]
pub struct MBIntegrand {
    pub vars: Vec<String>,
    pub product: GammaProduct,
    pub exponent: AffineForm,
    pub prefactor: Complex64,
    /// Chosen automatically when `None`.
    pub abscissas: Option<Vec<f64>>,
}

impl MBIntegrand {
    pub fn new(vars: &[&str], product: GammaProduct) -> Self {
        MBIntegrand {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            product,
            exponent: AffineForm::default(),
            prefactor: Complex64::new(1.0, 0.0),
            abscissas: None,
        }
    }

    pub fn with_prefactor(mut self, c: Complex64) -> Self {
        self.prefactor = c;
        self
    }

    pub fn with_exponent(mut self, e: AffineForm) -> Self {
        self.exponent = e;
        self
    }

    pub fn with_abscissas(mut self, a: Vec<f64>) -> Self {
        self.abscissas = Some(a);
        self
    }

    pub fn dimension(&self) -> usize {
        self.vars.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    /// `|I(n) - I(n/2)|`, floored at `1e-14` times the integral of the
    /// absolute value.
    pub error: f64,
    pub nodes: usize,
    pub abscissas: Vec<f64>,
}

enum Tab {
    Linear {
        coef: Vec<i64>,
        offset: i64,
        data: Arc<Vec<Complex64>>,
    },
    Dense {
        scope: Vec<usize>,
        data: Vec<Complex64>,
    },
}

impl Tab {
    fn scope(&self) -> Vec<usize> {
        match self {
            Tab::Linear { coef, .. } => (0..coef.len()).filter(|&k| coef[k] != 0).collect(),
            Tab::Dense { scope, .. } => scope.clone(),
        }
    }

    /// `(data, base, step)` with the entry for `idx[v] = j` at `base + step*j`.
    fn access(&self, idx: &[usize], v: usize, n1: usize) -> (&[Complex64], i64, i64) {
        match self {
            Tab::Linear { coef, offset, data } => {
                let base: i64 = offset
                    + coef
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != v)
                        .map(|(k, c)| c * idx[k] as i64)
                        .sum::<i64>();
                (data, base, coef[v])
            }
            Tab::Dense { scope, data } => {
                let mut base = 0i64;
                let mut step = 0i64;
                for &k in scope {
                    base *= n1 as i64;
                    step *= n1 as i64;
                    if k == v {
                        step += 1;
                    } else {
                        base += idx[k] as i64;
                    }
                }
                (data, base, step)
            }
        }
    }
}

struct Group {
    key: Vec<i64>,
    factors: Vec<(f64, GammaFactor)>,
    /// `exp(rate * z_k)` for the single variable of a unit key.
    rate: Complex64,
}

fn validate(f: &MBIntegrand, spec: &QuadSpec) -> Result<(), ArchError> {
    let d = f.vars.len();
    if d == 0 || d > 4 {
        return Err(ArchError::InvalidIntegrand(format!(
            "dimension {d} not in 1..=4"
        )));
    }
    if spec.nodes < 4 || !spec.nodes.is_multiple_of(4) || spec.t_max.is_nan() || spec.t_max <= 0.0 {
        return Err(ArchError::InvalidIntegrand(
            "need T > 0 and a positive node count divisible by 4".into(),
        ));
    }
    let declared: BTreeSet<&String> = f.vars.iter().collect();
    if declared.len() != d {
        return Err(ArchError::InvalidIntegrand(
            "repeated integration variable".into(),
        ));
    }
    let used = f.product.variables();
    for v in used.iter().chain(f.exponent.coeffs.keys()) {
        if !declared.contains(v) {
            return Err(ArchError::InvalidIntegrand(format!(
                "undeclared variable {v}"
            )));
        }
    }
    for v in &f.vars {
        if !used.contains(v) {
            return Err(ArchError::InvalidIntegrand(format!(
                "no gamma factor depends on {v}"
            )));
        }
    }
    for g in f.product.numerator.iter().chain(&f.product.denominator) {
        for b in g.form.coeffs.values() {
            if b.fract() != 0.0 {
                return Err(ArchError::InvalidIntegrand(format!(
                    "non-integer coefficient in {g}"
                )));
            }
        }
    }
    Ok(())
}

fn build_groups(f: &MBIntegrand) -> Result<(Vec<Group>, Complex64), ArchError> {
    let mut ln_const = Complex64::new(0.0, 0.0);
    let mut groups: BTreeMap<Vec<i64>, Group> = BTreeMap::new();
    let key_of = |form: &AffineForm| -> Vec<i64> {
        f.vars.iter().map(|v| form.coefficient(v) as i64).collect()
    };
    let signed = f
        .product
        .numerator
        .iter()
        .map(|g| (1.0, g))
        .chain(f.product.denominator.iter().map(|g| (-1.0, g)));
    for (sign, g) in signed {
        if g.form.is_constant() {
            match ln_gamma_field(g.field, g.form.constant) {
                Ok(v) => ln_const += sign * v,
                Err(e) if sign > 0.0 => return Err(e),
                Err(_) => ln_const = Complex64::new(f64::NEG_INFINITY, 0.0),
            }
            continue;
        }
        let key = key_of(&g.form);
        groups
            .entry(key.clone())
            .or_insert_with(|| Group {
                key,
                factors: Vec::new(),
                rate: Complex64::new(0.0, 0.0),
            })
            .factors
            .push((sign, g.clone()));
    }
    for (k, v) in f.vars.iter().enumerate() {
        let r = f.exponent.coefficient(v);
        if r != 0.0 {
            let key: Vec<i64> = (0..f.vars.len()).map(|j| (j == k) as i64).collect();
            groups
                .entry(key.clone())
                .or_insert_with(|| Group {
                    key,
                    factors: Vec::new(),
                    rate: Complex64::new(0.0, 0.0),
                })
                .rate += r;
        }
    }
    ln_const += f.exponent.constant;
    Ok((groups.into_values().collect(), ln_const))
}

/// Values of a group at grid index `m = key·j`, for `m` in `[m_min, m_max]`.
fn tabulate(
    g: &Group,
    sigma: &[f64],
    t_max: f64,
    n: usize,
) -> Result<(i64, Vec<Complex64>), ArchError> {
    let h = 2.0 * t_max / n as f64;
    let n = n as i64;
    let m_min: i64 = g.key.iter().filter(|c| **c < 0).map(|c| c * n).sum();
    let m_max: i64 = g.key.iter().filter(|c| **c > 0).map(|c| c * n).sum();
    let re: f64 = g.key.iter().zip(sigma).map(|(c, s)| *c as f64 * s).sum();
    let ksum: i64 = g.key.iter().sum();
    let data: Result<Vec<Complex64>, ArchError> = (m_min..=m_max)
        .into_par_iter()
        .map(|m| {
            let w = Complex64::new(re, -t_max * ksum as f64 + h * m as f64);
            let mut acc = g.rate * w;
            for (sign, f) in &g.factors {
                let arg = w + f.form.constant;
                match ln_gamma_field(f.field, arg) {
                    Ok(v) => acc += *sign * v,
                    Err(e) if *sign > 0.0 => return Err(e),
                    Err(_) => return Ok(Complex64::new(0.0, 0.0)),
                }
            }
            Ok(acc.exp())
        })
        .collect();
    Ok((-m_min, data?))
}

fn trapezoid_weights(n: usize, h: f64) -> Vec<f64> {
    (0..=n)
        .map(|j| if j == 0 || j == n { 0.5 * h } else { h })
        .collect()
}

fn contract(mut tabs: Vec<Tab>, d: usize, n: usize, h: f64) -> Complex64 {
    let n1 = n + 1;
    let w = trapezoid_weights(n, h);
    let mut remaining: Vec<usize> = (0..d).collect();
    while !remaining.is_empty() {
        // variable whose elimination leaves the smallest table
        let (pos, v, scope) = remaining
            .iter()
            .enumerate()
            .map(|(pos, &v)| {
                let s: BTreeSet<usize> = tabs
                    .iter()
                    .map(Tab::scope)
                    .filter(|s| s.contains(&v))
                    .flatten()
                    .filter(|&k| k != v)
                    .collect();
                (pos, v, s.into_iter().collect::<Vec<_>>())
            })
            .min_by_key(|(_, v, s)| (s.len(), *v))
            .expect("nonempty");
        remaining.remove(pos);
        let (involved, rest): (Vec<Tab>, Vec<Tab>) =
            tabs.into_iter().partition(|t| t.scope().contains(&v));
        let size = n1.pow(scope.len() as u32);
        let data: Vec<Complex64> = (0..size)
            .into_par_iter()
            .map(|flat| {
                let mut idx = vec![0usize; d];
                let mut r = flat;
                for &k in scope.iter().rev() {
                    idx[k] = r % n1;
                    r /= n1;
                }
                let acc: Vec<(&[Complex64], i64, i64)> =
                    involved.iter().map(|t| t.access(&idx, v, n1)).collect();
                let mut sum = Complex64::new(0.0, 0.0);
                for (j, wj) in w.iter().enumerate() {
                    let mut p = Complex64::new(*wj, 0.0);
                    for (data, base, step) in &acc {
                        p *= data[(base + step * j as i64) as usize];
                    }
                    sum += p;
                }
                sum
            })
            .collect();
        tabs = rest;
        tabs.push(Tab::Dense { scope, data });
    }
    tabs.iter()
        .map(|t| match t {
            Tab::Dense { data, .. } => data[0],
            Tab::Linear { .. } => unreachable!("linear tables always depend on a variable"),
        })
        .product()
}

fn integrate_level(
    groups: &[Group],
    tables: &[(i64, Arc<Vec<Complex64>>)],
    stride: usize,
    d: usize,
    n: usize,
    t_max: f64,
    absolute: bool,
) -> Complex64 {
    let tabs: Vec<Tab> = groups
        .iter()
        .zip(tables)
        .map(|(g, (offset, data))| {
            let data = if absolute {
                Arc::new(
                    data.iter()
                        .step_by(stride)
                        .map(|z| Complex64::new(z.norm(), 0.0))
                        .collect(),
                )
            } else if stride == 1 {
                data.clone()
            } else {
                Arc::new(data.iter().step_by(stride).copied().collect())
            };
            Tab::Linear {
                coef: g.key.clone(),
                offset: offset / stride as i64,
                data,
            }
        })
        .collect();
    contract(tabs, d, n, 2.0 * t_max / n as f64)
}

pub fn mb_integrate(f: &MBIntegrand, spec: &QuadSpec) -> Result<QuadratureResult, ArchError> {
    validate(f, spec)?;
    let d = f.vars.len();
    let sigma = match &f.abscissas {
        Some(a) => {
            if a.len() != d {
                return Err(ArchError::InvalidIntegrand(
                    "one abscissa per variable required".into(),
                ));
            }
            let slack = min_slack(&f.product, &f.vars, a);
            if slack < spec.margin {
                return Err(ArchError::ContourViolation(format!(
                    "given contour passes within {slack:.3e} of a pole"
                )));
            }
            a.clone()
        }
        None => choose_abscissas(&f.product, &f.vars, spec.margin)?,
    };
    let (groups, ln_const) = build_groups(f)?;
    let scale = if ln_const.re == f64::NEG_INFINITY {
        Complex64::new(0.0, 0.0)
    } else {
        f.prefactor * ln_const.exp() * (4.0 * PI).powi(-(d as i32))
    };
    let n = spec.nodes;
    let tables: Vec<(i64, Arc<Vec<Complex64>>)> = groups
        .iter()
        .map(|g| tabulate(g, &sigma, spec.t_max, n).map(|(o, t)| (o, Arc::new(t))))
        .collect::<Result<_, _>>()?;
    let levels: Vec<Complex64> = [1usize, 2, 4]
        .iter()
        .map(|&stride| {
            scale * integrate_level(&groups, &tables, stride, d, n / stride, spec.t_max, false)
        })
        .collect();
    // roundoff scale: integral of |integrand| on the coarsest grid
    let l1 = scale.norm() * integrate_level(&groups, &tables, 4, d, n / 4, spec.t_max, true).re;
    let value = levels[0];
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(ArchError::InvalidIntegrand(
            "integrand overflowed on the grid".into(),
        ));
    }
    let current = (levels[0] - levels[1]).norm();
    let previous = (levels[1] - levels[2]).norm();
    let floor = 1e-14 * l1;
    if current > previous && current > 1e2 * floor {
        return Err(ArchError::NonConvergence { previous, current });
    }
    Ok(QuadratureResult {
        value,
        error: current.max(floor),
        nodes: n,
        abscissas: sigma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::archimedean::gamma::gamma_r;
    use crate::archimedean::ArchField;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn z() -> AffineForm {
        AffineForm::var("z")
    }

    fn barnes_half() -> MBIntegrand {
        let p = GammaProduct::new()
            .num(ArchField::R, z() + c(0.5))
            .num(ArchField::R, z() + c(0.5))
            .num(ArchField::R, -z() + c(0.5))
            .num(ArchField::R, -z() + c(0.5));
        MBIntegrand::new(&["z"], p)
    }

    #[test]
    fn barnes_at_one_half_gives_pi() {
        let r = mb_integrate(&barnes_half(), &QuadSpec::for_dimension(1)).unwrap();
        assert!(r.abscissas[0].abs() < 1e-12);
        assert!((r.value - c(PI)).norm() < 1e-8 * PI, "{:?}", r.value);
    }

    #[test]
    fn doubling_nodes_stays_within_estimate() {
        let spec = QuadSpec {
            nodes: 400,
            ..QuadSpec::for_dimension(1)
        };
        let a = mb_integrate(&barnes_half(), &spec).unwrap();
        let b = mb_integrate(&barnes_half(), &QuadSpec { nodes: 800, ..spec }).unwrap();
        assert!((a.value - b.value).norm() <= a.error);
    }

    #[test]
    fn constant_integrand_rejected() {
        let p = GammaProduct::new().num(ArchField::R, AffineForm::constant(c(1.0)));
        let f = MBIntegrand::new(&["z"], p);
        assert!(matches!(
            mb_integrate(&f, &QuadSpec::for_dimension(1)),
            Err(ArchError::InvalidIntegrand(_))
        ));
    }

    #[test]
    fn undeclared_variable_rejected() {
        let p = GammaProduct::new().num(ArchField::R, z() + AffineForm::var("w"));
        let f = MBIntegrand::new(&["z"], p);
        assert!(mb_integrate(&f, &QuadSpec::for_dimension(1)).is_err());
    }

    #[test]
    fn bad_contour_rejected() {
        let f = barnes_half().with_abscissas(vec![0.495]);
        assert!(matches!(
            mb_integrate(&f, &QuadSpec::for_dimension(1)),
            Err(ArchError::ContourViolation(_))
        ));
    }

    #[test]
    fn separable_two_dimensional() {
        // product of two one-dimensional Barnes integrals
        let w = AffineForm::var("w");
        let mut p = barnes_half().product;
        for k in [1.0, -1.0] {
            p = p
                .num(ArchField::R, k * w.clone() + c(0.5))
                .num(ArchField::R, k * w.clone() + c(0.5));
        }
        let f = MBIntegrand::new(&["z", "w"], p);
        let spec = QuadSpec {
            nodes: 1000,
            ..QuadSpec::for_dimension(2)
        };
        let r = mb_integrate(&f, &spec).unwrap();
        assert!((r.value - c(PI * PI)).norm() < 1e-8 * PI * PI);
    }

    #[test]
    fn constant_factors_fold_into_prefactor() {
        let p = barnes_half()
            .product
            .den(ArchField::R, AffineForm::constant(c(1.0)));
        let r = mb_integrate(&MBIntegrand::new(&["z"], p), &QuadSpec::for_dimension(1)).unwrap();
        let g1 = gamma_r(c(1.0)).unwrap();
        assert!((r.value * g1 - c(PI)).norm() < 1e-8 * PI);
    }
}
