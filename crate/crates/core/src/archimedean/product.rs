use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use super::gamma::{fmt_c, ln_gamma_field};
use super::{ArchError, ArchField};

/// `Σ b_i v_i + c` with real coefficients over named variables and a complex
/// constant.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AffineForm {
    pub coeffs: BTreeMap<String, f64>,
    pub constant: Complex64,
}

impl AffineForm {
    pub fn new(coeffs: &[(&str, f64)], constant: Complex64) -> Self {
        let mut f = AffineForm {
            coeffs: BTreeMap::new(),
            constant,
        };
        for (v, b) in coeffs {
            *f.coeffs.entry(v.to_string()).or_insert(0.0) += b;
        }
        f.coeffs.retain(|_, b| *b != 0.0);
        f
    }

    pub fn var(name: &str) -> Self {
        Self::new(&[(name, 1.0)], Complex64::new(0.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(&[], c)
    }

    pub fn coefficient(&self, var: &str) -> f64 {
        self.coeffs.get(var).copied().unwrap_or(0.0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, point: &HashMap<&str, Complex64>) -> Result<Complex64, ArchError> {
        let mut acc = self.constant;
        for (v, b) in &self.coeffs {
            let x = point
                .get(v.as_str())
                .ok_or_else(|| ArchError::InvalidIntegrand(format!("no value for variable {v}")))?;
            acc += *b * x;
        }
        Ok(acc)
    }

    fn approx_eq(&self, other: &AffineForm) -> bool {
        let tol = 1e-13 * (1.0 + self.constant.norm().max(other.constant.norm()));
        self.coeffs == other.coeffs && (self.constant - other.constant).norm() <= tol
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, b) in &self.coeffs {
            let sign = if *b < 0.0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = b.abs();
            if mag == 1.0 {
                write!(f, "{sign}{v}")?;
            } else {
                write!(f, "{sign}{mag}*{v}")?;
            }
            first = false;
        }
        if first || self.constant != Complex64::new(0.0, 0.0) {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "({})", fmt_c(self.constant))?;
        }
        Ok(())
    }
}

impl Add for AffineForm {
    type Output = AffineForm;
    fn add(mut self, rhs: AffineForm) -> AffineForm {
        for (v, b) in rhs.coeffs {
            *self.coeffs.entry(v).or_insert(0.0) += b;
        }
        self.coeffs.retain(|_, b| *b != 0.0);
        self.constant += rhs.constant;
        self
    }
}

impl Add<Complex64> for AffineForm {
    type Output = AffineForm;
    fn add(mut self, rhs: Complex64) -> AffineForm {
        self.constant += rhs;
        self
    }
}

impl Sub<Complex64> for AffineForm {
    type Output = AffineForm;
    fn sub(self, rhs: Complex64) -> AffineForm {
        self + (-rhs)
    }
}

impl Neg for AffineForm {
    type Output = AffineForm;
    fn neg(mut self) -> AffineForm {
        self.coeffs.values_mut().for_each(|b| *b = -*b);
        self.constant = -self.constant;
        self
    }
}

impl Sub for AffineForm {
    type Output = AffineForm;
    fn sub(self, rhs: AffineForm) -> AffineForm {
        self + (-rhs)
    }
}

impl Mul<AffineForm> for f64 {
    type Output = AffineForm;
    fn mul(self, mut rhs: AffineForm) -> AffineForm {
        rhs.coeffs.values_mut().for_each(|b| *b *= self);
        rhs.coeffs.retain(|_, b| *b != 0.0);
        rhs.constant *= self;
        rhs
    }
}

/// `Γ_F(form)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaFactor {
    pub field: ArchField,
    pub form: AffineForm,
}

impl GammaFactor {
    pub fn ln_eval(&self, point: &HashMap<&str, Complex64>) -> Result<Complex64, ArchError> {
        ln_gamma_field(self.field, self.form.eval(point)?)
    }
}

impl fmt::Display for GammaFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.field.gamma_name(), self.form)
    }
}

impl Serialize for GammaFactor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A ratio of products of `Γ_R` and `Γ_C` factors.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct GammaProduct {
    pub numerator: Vec<GammaFactor>,
    pub denominator: Vec<GammaFactor>,
}

impl GammaProduct {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn num(mut self, field: ArchField, form: AffineForm) -> Self {
        self.numerator.push(GammaFactor { field, form });
        self
    }

    pub fn den(mut self, field: ArchField, form: AffineForm) -> Self {
        self.denominator.push(GammaFactor { field, form });
        self
    }

    pub fn times(mut self, other: GammaProduct) -> Self {
        self.numerator.extend(other.numerator);
        self.denominator.extend(other.denominator);
        self
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.numerator
            .iter()
            .chain(&self.denominator)
            .flat_map(|g| g.form.coeffs.keys().cloned())
            .collect()
    }

    /// Removes factors appearing in both numerator and denominator.
    pub fn cancel(mut self) -> Self {
        let mut kept = Vec::new();
        for g in std::mem::take(&mut self.numerator) {
            let hit = self
                .denominator
                .iter()
                .position(|d| d.field == g.field && d.form.approx_eq(&g.form));
            match hit {
                Some(i) => {
                    self.denominator.remove(i);
                }
                None => kept.push(g),
            }
        }
        self.numerator = kept;
        self
    }

    pub fn ln_eval(&self, point: &HashMap<&str, Complex64>) -> Result<Complex64, ArchError> {
        let mut acc = Complex64::new(0.0, 0.0);
        for g in &self.numerator {
            acc += g.ln_eval(point)?;
        }
        for g in &self.denominator {
            if let Ok(v) = g.ln_eval(point) {
                acc -= v;
            } else {
                return Ok(Complex64::new(f64::NEG_INFINITY, 0.0));
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &HashMap<&str, Complex64>) -> Result<Complex64, ArchError> {
        let l = self.ln_eval(point)?;
        if l.re == f64::NEG_INFINITY {
            return Ok(Complex64::new(0.0, 0.0));
        }
        Ok(l.exp())
    }

    /// Value with no free variables.
    pub fn value(&self) -> Result<Complex64, ArchError> {
        self.eval(&HashMap::new())
    }
}

impl fmt::Display for GammaProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[GammaFactor]| {
            if v.is_empty() {
                "1".to_string()
            } else {
                v.iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        };
        if self.denominator.is_empty() {
            write!(f, "{}", join(&self.numerator))
        } else {
            write!(
                f,
                "{} / [{}]",
                join(&self.numerator),
                join(&self.denominator)
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn affine_arithmetic() {
        let f = AffineForm::var("z") + c(0.5) - AffineForm::var("w");
        let g = -f.clone();
        assert!((f.clone() + g).coeffs.is_empty());
        assert_eq!(f.coefficient("w"), -1.0);
        assert_eq!(f.to_string(), "-w+z+(0.5+0i)");
        assert_eq!(AffineForm::constant(c(0.0)).to_string(), "(0+0i)");
    }

    #[test]
    fn cancellation() {
        let p = GammaProduct::new()
            .num(ArchField::R, AffineForm::var("z"))
            .num(ArchField::R, AffineForm::var("z") + c(1.0))
            .den(ArchField::R, AffineForm::var("z") + c(1.0))
            .cancel();
        assert_eq!(p.numerator.len(), 1);
        assert!(p.denominator.is_empty());
    }

    #[test]
    fn constant_product_value() {
        let p = GammaProduct::new()
            .num(ArchField::R, AffineForm::constant(c(1.0)))
            .den(ArchField::R, AffineForm::constant(c(2.0)));
        assert!((p.value().unwrap() - c(std::f64::consts::PI)).norm() < 1e-14);
    }

    #[test]
    fn denominator_pole_is_a_zero() {
        let p = GammaProduct::new().den(ArchField::C, AffineForm::constant(c(-1.0)));
        assert_eq!(p.value().unwrap(), c(0.0));
    }
}
