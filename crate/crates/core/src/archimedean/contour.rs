//! Contour abscissas: maximize the smallest real part among the numerator
//! gamma arguments, solved by vertex enumeration of a small LP.

use std::collections::BTreeMap;

use super::product::GammaProduct;
use super::ArchError;

/// Upper cap on the optimized slack; keeps one-sided windows bounded.
const SLACK_CAP: f64 = 1.0;
const FEAS_TOL: f64 = 1e-9;

/// Rows `(a, b)` meaning `Re(argument) = a·σ + b`, one per distinct
/// coefficient vector, keeping the tightest constant.
fn constraint_rows(product: &GammaProduct, vars: &[String]) -> Vec<(Vec<f64>, f64)> {
    let mut rows: BTreeMap<Vec<u64>, (Vec<f64>, f64)> = BTreeMap::new();
    for g in &product.numerator {
        if g.form.is_constant() {
            continue;
        }
        let a: Vec<f64> = vars.iter().map(|v| g.form.coefficient(v)).collect();
        let key = a.iter().map(|x| x.to_bits()).collect();
        let b = g.form.constant.re;
        rows.entry(key)
            .and_modify(|e| e.1 = e.1.min(b))
            .or_insert((a, b));
    }
    rows.into_values().collect()
}

/// Smallest real part of a non-constant numerator argument on the given
/// contour.
pub fn min_slack(product: &GammaProduct, vars: &[String], abscissas: &[f64]) -> f64 {
    constraint_rows(product, vars)
        .iter()
        .map(|(a, b)| a.iter().zip(abscissas).map(|(x, y)| x * y).sum::<f64>() + b)
        .fold(f64::INFINITY, f64::min)
}

fn solve(mut m: Vec<Vec<f64>>, mut rhs: Vec<f64>) -> Option<Vec<f64>> {
    let n = rhs.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[piv][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, piv);
        rhs.swap(col, piv);
        for r in 0..n {
            if r != col {
                let f = m[r][col] / m[col][col];
                if f != 0.0 {
                    let pivot_row = m[col].clone();
                    for (x, p) in m[r].iter_mut().zip(&pivot_row).skip(col) {
                        *x -= f * p;
                    }
                    rhs[r] -= f * rhs[col];
                }
            }
        }
    }
    Some((0..n).map(|i| rhs[i] / m[i][i]).collect())
}

fn combinations(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f)
}

/// Abscissas maximizing the minimum numerator slack (capped at 1), taken as
/// the centroid of the optimal vertices. In one variable this is the midpoint
/// of the window whenever the window is at most 2 wide.
pub fn choose_abscissas(
    product: &GammaProduct,
    vars: &[String],
    margin: f64,
) -> Result<Vec<f64>, ArchError> {
    let d = vars.len();
    let rows = constraint_rows(product, vars);
    // a·σ - t >= -b, and -t >= -CAP
    let mut lhs: Vec<Vec<f64>> = rows
        .iter()
        .map(|(a, _)| a.iter().copied().chain([-1.0]).collect())
        .collect();
    let mut rhs: Vec<f64> = rows.iter().map(|(_, b)| -b).collect();
    lhs.push(std::iter::repeat_n(0.0, d).chain([-1.0]).collect());
    rhs.push(-SLACK_CAP);

    let mut vertices: Vec<Vec<f64>> = Vec::new();
    combinations(lhs.len(), d + 1, &mut |idx| {
        let m = idx.iter().map(|&i| lhs[i].clone()).collect();
        let r = idx.iter().map(|&i| rhs[i]).collect();
        if let Some(x) = solve(m, r) {
            let feasible = lhs.iter().zip(&rhs).all(|(row, b)| {
                row.iter().zip(&x).map(|(p, q)| p * q).sum::<f64>() >= b - FEAS_TOL
            });
            if feasible
                && !vertices
                    .iter()
                    .any(|v| v.iter().zip(&x).all(|(p, q)| (p - q).abs() < 1e-9))
            {
                vertices.push(x);
            }
        }
    });
    let best = vertices
        .iter()
        .map(|v| v[d])
        .fold(f64::NEG_INFINITY, f64::max);
    if !best.is_finite() {
        return Err(ArchError::ContourViolation(
            "no admissible contour: the pole constraints do not bound every variable".into(),
        ));
    }
    let optimal: Vec<&Vec<f64>> = vertices.iter().filter(|v| v[d] >= best - 1e-12).collect();
    let sigma: Vec<f64> = (0..d)
        .map(|k| optimal.iter().map(|v| v[k]).sum::<f64>() / optimal.len() as f64)
        .collect();
    let slack = min_slack(product, vars, &sigma);
    if slack < margin {
        return Err(ArchError::ContourViolation(format!(
            "best contour keeps poles only {slack:.3e} away (margin {margin:.1e})"
        )));
    }
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::archimedean::{AffineForm, ArchField};
    use num_complex::Complex64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn z() -> AffineForm {
        AffineForm::var("z")
    }

    #[test]
    fn midpoint_of_two_sided_window() {
        let p = GammaProduct::new()
            .num(ArchField::R, z() + c(0.2))
            .num(ArchField::R, -z() + c(0.6));
        let s = choose_abscissas(&p, &["z".into()], 1e-2).unwrap();
        assert!((s[0] - 0.2).abs() < 1e-12);
    }

    #[test]
    fn wide_window_is_centered() {
        let p = GammaProduct::new()
            .num(ArchField::R, z() + c(3.0))
            .num(ArchField::R, -z() + c(5.0));
        let s = choose_abscissas(&p, &["z".into()], 1e-2).unwrap();
        assert!((s[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn one_sided_window() {
        let p = GammaProduct::new().num(ArchField::R, z() + c(-0.5));
        let s = choose_abscissas(&p, &["z".into()], 1e-2).unwrap();
        assert!((s[0] - 1.5).abs() < 1e-12);
    }

    #[test]
    fn empty_window_is_rejected() {
        let p = GammaProduct::new()
            .num(ArchField::R, z() + c(-1.0))
            .num(ArchField::R, -z() + c(0.5));
        assert!(matches!(
            choose_abscissas(&p, &["z".into()], 1e-2),
            Err(ArchError::ContourViolation(_))
        ));
    }

    #[test]
    fn two_variables() {
        let w = AffineForm::var("w");
        let p = GammaProduct::new()
            .num(ArchField::C, z())
            .num(ArchField::C, w.clone())
            .num(ArchField::C, -z() - w + c(1.0));
        let vars = vec!["w".to_string(), "z".to_string()];
        let s = choose_abscissas(&p, &vars, 1e-2).unwrap();
        assert!((s[0] - 1.0 / 3.0).abs() < 1e-12 && (s[1] - 1.0 / 3.0).abs() < 1e-12);
        assert!((min_slack(&p, &vars, &s) - 1.0 / 3.0).abs() < 1e-12);
    }
}
