use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::ArchError;

pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub(crate) fn complex_json(z: Complex64) -> Value {
    serde_json::json!([z.re, z.im])
}

pub(crate) fn complex_list(zs: &[Complex64]) -> Value {
    Value::Array(zs.iter().map(|z| complex_json(*z)).collect())
}

/// Parses `[re, im]` or a bare real number.
pub fn parse_complex(v: &Value) -> Result<Complex64, ArchError> {
    match v {
        Value::Number(n) => Ok(c64(n.as_f64().unwrap_or(f64::NAN), 0.0)),
        Value::Array(xs) if xs.len() == 2 => match (xs[0].as_f64(), xs[1].as_f64()) {
            (Some(re), Some(im)) => Ok(c64(re, im)),
            _ => Err(ArchError::InvalidInput(format!(
                "complex number expected, got {v}"
            ))),
        },
        _ => Err(ArchError::InvalidInput(format!(
            "complex number expected, got {v}"
        ))),
    }
}

/// Outcome of one numerical comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Value,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
    pub rel_err: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckReport {
    pub fn compare(
        check: &str,
        params: Value,
        lhs: Complex64,
        rhs: Complex64,
        tolerance: f64,
    ) -> Self {
        let rel_err = (lhs - rhs).norm() / rhs.norm().max(f64::MIN_POSITIVE);
        CheckReport {
            check: check.to_string(),
            params,
            lhs: [lhs.re, lhs.im],
            rhs: [rhs.re, rhs.im],
            rel_err,
            tolerance,
            pass: rel_err <= tolerance,
        }
    }

    pub fn renamed(mut self, check: &str) -> Self {
        self.check = check.to_string();
        self
    }

    pub fn lhs_value(&self) -> Complex64 {
        c64(self.lhs[0], self.lhs[1])
    }

    pub fn rhs_value(&self) -> Complex64 {
        c64(self.rhs[0], self.rhs[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(
            parse_complex(&serde_json::json!([1.5, -2])).unwrap(),
            c64(1.5, -2.0)
        );
        assert_eq!(parse_complex(&serde_json::json!(3)).unwrap(), c64(3.0, 0.0));
        assert!(parse_complex(&serde_json::json!("x")).is_err());
    }

    #[test]
    fn relative_error() {
        let r = CheckReport::compare("x", Value::Null, c64(1.0, 0.0), c64(2.0, 0.0), 0.6);
        assert_eq!(r.rel_err, 0.5);
        assert!(r.pass);
    }
}
