use serde::Serialize;

use crate::algebra::LaurentPoly;

use super::{normalize_weight, weyl_character, ReptheoryError, RootSystemId};

/// Outcome of [`verify_branching`]; `lhs`/`rhs` are filled on failure.
#[derive(Debug, Clone, Serialize)]
pub struct BranchingReport {
    pub weight: Vec<i32>,
    pub summands: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

/// Restriction of the `GL_3` module of highest weight `lambda` to
/// `GL_1 x GL_2`: every `(mu1, mu2)` interlacing `lambda`, paired with the
/// `GL_1` power `|lambda| - mu1 - mu2`.
pub fn branching_u3_u2(lambda: &[i32]) -> Result<Vec<(i32, [i32; 2])>, ReptheoryError> {
    let l = normalize_weight(RootSystemId::A2, lambda)?;
    let total: i32 = l.iter().sum();
    let mut out = Vec::new();
    for m1 in (l[1]..=l[0]).rev() {
        for m2 in (l[2]..=l[1]).rev() {
            out.push((total - m1 - m2, [m1, m2]));
        }
    }
    Ok(out)
}

/// Checks `chi_lambda(t, u1, u2) = sum t^d chi_mu(u1, u2)` exactly.
pub fn verify_branching(lambda: &[i32]) -> Result<BranchingReport, ReptheoryError> {
    let summands = branching_u3_u2(lambda)?;
    let lhs = weyl_character(RootSystemId::A2, lambda)?.rename(&[
        ("x1", "t"),
        ("x2", "u1"),
        ("x3", "u2"),
    ])?;
    let t = LaurentPoly::var("t");
    let mut rhs = LaurentPoly::zero();
    for (d, mu) in &summands {
        let chi = weyl_character(RootSystemId::A1, mu)?.rename(&[("x1", "u1"), ("x2", "u2")])?;
        rhs = rhs + &t.pow(*d)? * &chi;
    }
    let pass = lhs == rhs;
    Ok(BranchingReport {
        weight: lambda.to_vec(),
        summands: summands.len(),
        pass,
        lhs: (!pass).then(|| lhs.render()),
        rhs: (!pass).then(|| rhs.render()),
    })
}

/// Every non-increasing weight with entries in `lo..=hi`.
pub fn gl3_weights(lo: i32, hi: i32) -> Vec<[i32; 3]> {
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in lo..=a {
            for c in lo..=b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_restriction() {
        assert_eq!(
            branching_u3_u2(&[1, 0, 0]).unwrap(),
            vec![(0, [1, 0]), (1, [0, 0])]
        );
        assert_eq!(branching_u3_u2(&[0, 0, 0]).unwrap(), vec![(0, [0, 0])]);
    }

    #[test]
    fn adjoint_restriction() {
        let b = branching_u3_u2(&[2, 1, 0]).unwrap();
        let mus: Vec<[i32; 2]> = b.iter().map(|(_, m)| *m).collect();
        assert_eq!(mus, vec![[2, 1], [2, 0], [1, 1], [1, 0]]);
        let dets: Vec<i32> = b.iter().map(|(d, _)| *d).collect();
        assert_eq!(dets, vec![0, 1, 1, 2]);
    }

    #[test]
    fn small_identities() {
        assert!(verify_branching(&[1, 0, 0]).unwrap().pass);
        assert!(verify_branching(&[0, 0, 0]).unwrap().pass);
        assert!(verify_branching(&[2, -1, -3]).unwrap().pass);
    }

    #[test]
    fn sweep_size() {
        assert_eq!(gl3_weights(-3, 3).len(), 84);
    }
}
