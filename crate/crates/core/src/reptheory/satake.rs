use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::LaurentPoly;

use super::ReptheoryError;

fn mono(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s).expect("literal monomial")
}

fn parse_mono(text: &str) -> Result<LaurentPoly, ReptheoryError> {
    let p = LaurentPoly::parse(text)
        .map_err(|e| ReptheoryError::InvalidSatake(format!("`{text}`: {e}")))?;
    if !p.is_monomial() {
        return Err(ReptheoryError::InvalidSatake(format!(
            "`{text}` is not an invertible monomial"
        )));
    }
    Ok(p)
}

mod mono_serde {
    use super::*;

    pub fn serialize<S: Serializer>(p: &LaurentPoly, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.render())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<LaurentPoly, D::Error> {
        let text = String::deserialize(d)?;
        parse_mono(&text).map_err(serde::de::Error::custom)
    }
}

mod mono_array_serde {
    use super::*;

    pub fn serialize<S: Serializer, const N: usize>(
        p: &[LaurentPoly; N],
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = p.iter().map(LaurentPoly::render).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const N: usize>(
        d: D,
    ) -> Result<[LaurentPoly; N], D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        if texts.len() != N {
            return Err(serde::de::Error::custom(format!(
                "expected {N} entries, found {}",
                texts.len()
            )));
        }
        let parsed: Result<Vec<LaurentPoly>, _> = texts.iter().map(|t| parse_mono(t)).collect();
        let parsed = parsed.map_err(serde::de::Error::custom)?;
        Ok(parsed.try_into().unwrap())
    }
}

/// Frobenius class of an unramified `GL_2` representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatakeGL2 {
    #[serde(with = "mono_array_serde")]
    pub beta: [LaurentPoly; 2],
}

/// Frobenius class of an unramified `GL_4` representation with a twist `chi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatakeGL4 {
    #[serde(with = "mono_array_serde")]
    pub alpha: [LaurentPoly; 4],
    #[serde(with = "mono_serde")]
    pub chi: LaurentPoly,
}

/// Inert-place data `(c0; c1, c2)` for the `GSp_4` avatar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatakeGSp4 {
    #[serde(with = "mono_serde")]
    pub c0: LaurentPoly,
    #[serde(with = "mono_serde")]
    pub c1: LaurentPoly,
    #[serde(with = "mono_serde")]
    pub c2: LaurentPoly,
}

/// The JSON document accepted on the command line; every group is optional.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SatakeInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gl4: Option<SatakeGL4>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gl2: Option<SatakeGL2>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gsp4: Option<SatakeGSp4>,
}

impl SatakeGL2 {
    pub fn new(b1: LaurentPoly, b2: LaurentPoly) -> Self {
        SatakeGL2 { beta: [b1, b2] }
    }

    pub fn trivial() -> Self {
        Self::new(LaurentPoly::one(), LaurentPoly::one())
    }

    pub fn symbolic() -> Self {
        Self::new(mono("b1"), mono("b2"))
    }

    /// `omega_sigma = beta1 * beta2`.
    pub fn central(&self) -> LaurentPoly {
        &self.beta[0] * &self.beta[1]
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.beta[1].clone(), self.beta[0].clone())
    }
}

impl SatakeGL4 {
    pub fn trivial() -> Self {
        SatakeGL4 {
            alpha: std::array::from_fn(|_| LaurentPoly::one()),
            chi: LaurentPoly::one(),
        }
    }

    pub fn symbolic() -> Self {
        SatakeGL4 {
            alpha: std::array::from_fn(|i| mono(&format!("a{}", i + 1))),
            chi: mono("chi"),
        }
    }

    /// `omega_pi = chi^2 * alpha1 alpha2 alpha3 alpha4`.
    pub fn central(&self) -> LaurentPoly {
        let prod: LaurentPoly = self.alpha.iter().cloned().product();
        &(&self.chi * &self.chi) * &prod
    }

    pub fn permuted(&self, perm: [usize; 4]) -> Self {
        SatakeGL4 {
            alpha: std::array::from_fn(|i| self.alpha[perm[i]].clone()),
            chi: self.chi.clone(),
        }
    }
}

impl SatakeGSp4 {
    pub fn trivial() -> Self {
        SatakeGSp4 {
            c0: LaurentPoly::one(),
            c1: LaurentPoly::one(),
            c2: LaurentPoly::one(),
        }
    }

    pub fn symbolic() -> Self {
        SatakeGSp4 {
            c0: mono("c0"),
            c1: mono("c1"),
            c2: mono("c2"),
        }
    }
}

/// Result of [`exterior_square_satake`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorSquare {
    /// `(t1, t2, t3, nu/t3, nu/t2, nu/t1)`.
    pub eigenvalues: [LaurentPoly; 6],
    pub nu: LaurentPoly,
}

impl ExteriorSquare {
    /// Torus point for `D3sim` characters.
    pub fn torus_point(&self) -> Vec<(&'static str, LaurentPoly)> {
        vec![
            ("y1", self.eigenvalues[0].clone()),
            ("y2", self.eigenvalues[1].clone()),
            ("y3", self.eigenvalues[2].clone()),
            ("nu", self.nu.clone()),
        ]
    }
}

/// Eigenvalues `chi * alpha_i alpha_j` of the exterior square, in the
/// coordinates `t1 = chi a1 a2`, `t2 = chi a1 a3`, `t3 = chi a2 a3`, with
/// similitude `nu = chi^2 a1 a2 a3 a4`.
pub fn exterior_square_satake(s: &SatakeGL4) -> ExteriorSquare {
    let a = &s.alpha;
    let pair = |i: usize, j: usize| &s.chi * &(&a[i] * &a[j]);
    ExteriorSquare {
        eigenvalues: [
            pair(0, 1),
            pair(0, 2),
            pair(1, 2),
            pair(0, 3),
            pair(1, 3),
            pair(2, 3),
        ],
        nu: s.central(),
    }
}

/// Eigenvalues `c0 (1, c1, c2, c1 c2)` of the `GSp_4` avatar.
pub fn gsp4_satake_from_inert(c: &SatakeGSp4) -> [LaurentPoly; 4] {
    let c1c2 = &c.c1 * &c.c2;
    [c.c0.clone(), &c.c0 * &c.c1, &c.c0 * &c.c2, &c.c0 * &c1c2]
}

impl SatakeGSp4 {
    /// Central character `c0^2 c1 c2`.
    pub fn central(&self) -> LaurentPoly {
        &(&self.c0 * &self.c0) * &(&self.c1 * &self.c2)
    }

    /// Torus point for `C2sim` characters: the eigenvalue list equals
    /// `(y1, y2, nu/y2, nu/y1)` in the order `(c0 c1 c2, c0 c1, c0 c2, c0)`.
    pub fn torus_point(&self) -> Vec<(&'static str, LaurentPoly)> {
        let e = gsp4_satake_from_inert(self);
        vec![
            ("y1", e[3].clone()),
            ("y2", e[1].clone()),
            ("nu", self.central()),
        ]
    }
}
