use std::collections::HashMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{rat, InverseRoot, LaurentPoly, Rational, TruncatedSeries};
use crate::reptheory::{
    verify_branching, weyl_character, ReptheoryError, RootSystemId, SatakeGL2, SatakeGL4,
    SatakeGSp4, SatakeInput,
};

use super::euler::{
    lfactor_std4, lfactor_sym2, lfactor_tensor_gsp4_gl2, lfactor_wedge2_std2_inert,
    lfactor_wedge2_std2_split, EulerFactor,
};
use super::zeta::{two_variable_factor, zeta_series, PlaceData, ZetaConfig};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MismatchReport {
    pub degree: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_degree: Option<u32>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one exact identity check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub statement: String,
    pub params: Value,
    pub order: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_order: Option<u32>,
    pub pass: bool,
    pub first_mismatch: Option<MismatchReport>,
}

impl IdentityReport {
    fn from_series(
        identity: &str,
        statement: &str,
        params: Value,
        order: u32,
        u_order: Option<u32>,
        lhs: &TruncatedSeries,
        rhs: &TruncatedSeries,
    ) -> Self {
        let mismatch = lhs.first_mismatch(rhs).map(|m| MismatchReport {
            degree: m.t_degree,
            u_degree: u_order.map(|_| m.u_degree),
            lhs: m.lhs.render(),
            rhs: m.rhs.render(),
        });
        IdentityReport {
            identity: identity.to_string(),
            statement: statement.to_string(),
            params,
            order,
            u_order,
            pass: mismatch.is_none(),
            first_mismatch: mismatch,
        }
    }

    /// Attaches extra keys to the parameter object.
    pub fn with_param(mut self, key: &str, value: Value) -> Self {
        if let Value::Object(map) = &mut self.params {
            map.insert(key.to_string(), value);
        }
        self
    }
}

pub const SPLIT_STATEMENT: &str =
    "split place: Whittaker zeta sum times L(2s, Sym^2 x omega_pi) equals the \
     degree-12 factor with inverse roots chi*a_i*a_j*b_k";
pub const INERT_RATIO_STATEMENT: &str =
    "inert place: Whittaker zeta sum times L(2s, Sym^2 x omega_pi) equals \
     L(2s, omega_pi*omega_sigma)^-1 * L(2s, Sym^2 x omega_pi) * L(s, GSp4 x GL2 tensor)";
pub const INERT_WEDGE_STATEMENT: &str =
    "inert place: Whittaker zeta sum times L(2s, Sym^2 x omega_pi) equals the \
     exterior-square factor with quadratic blocks omega_pi*b_k^2";
pub const SYM_ALG_STATEMENT: &str = "h_l of the eight GSp4 x GL2 eigenvalues equals \
     sum over 2i+j=l of (nu*b1*b2)^i * sum over m1+m2=j of chi_C2(m1,m2) * chi_GL2(m1,m2)";
pub const SEPARATION_STATEMENT: &str = "h_l of the twelve exterior-square x GL2 eigenvalues equals \
     sum over 2i+j=l of h_i(nu*b1^2, nu*b1*b2, nu*b2^2) * sum over m1+m2=j of chi_D3(m1,m2,0) * chi_GL2(m1,m2)";
pub const TWO_VARIABLE_STATEMENT: &str = "L(z+1/2, std4) times the Whittaker zeta sum equals \
     L(z+1/2, std4) * L(s, wedge2 x std2) * prod (1 - b_k b_l omega_pi T^2)";
pub const BRANCHING_STATEMENT: &str =
    "GL3 character equals the sum over interlacing (mu1, mu2) of \
     t^(|lambda|-mu1-mu2) times the GL2 character";

fn split_params(s4: &SatakeGL4, s2: &SatakeGL2) -> Value {
    serde_json::to_value(SatakeInput {
        gl4: Some(s4.clone()),
        gl2: Some(s2.clone()),
        gsp4: None,
    })
    .unwrap()
}

fn inert_params(c: &SatakeGSp4, s2: &SatakeGL2) -> Value {
    serde_json::to_value(SatakeInput {
        gl4: None,
        gl2: Some(s2.clone()),
        gsp4: Some(c.clone()),
    })
    .unwrap()
}

fn maybe_corrupt(f: EulerFactor, mutate: bool) -> EulerFactor {
    if mutate {
        f.corrupted()
    } else {
        f
    }
}

/// Split-place identity to order `order`.
pub fn verify_split(
    s4: &SatakeGL4,
    s2: &SatakeGL2,
    order: u32,
    mutate: bool,
) -> Result<IdentityReport, ReptheoryError> {
    let lhs = zeta_series(
        &PlaceData::Split(s4.clone()),
        s2,
        ZetaConfig {
            t_order: order,
            with_sym2: true,
        },
    )?;
    let rhs = maybe_corrupt(lfactor_wedge2_std2_split(s4, s2), mutate).expand(order, 0);
    Ok(IdentityReport::from_series(
        "split_wedge2_std2",
        SPLIT_STATEMENT,
        split_params(s4, s2),
        order,
        None,
        &lhs,
        &rhs,
    ))
}

/// Both inert-place factorizations to order `order`.
pub fn verify_inert(
    c: &SatakeGSp4,
    s2: &SatakeGL2,
    order: u32,
    mutate: bool,
) -> Result<Vec<IdentityReport>, ReptheoryError> {
    let lhs = zeta_series(
        &PlaceData::Inert(c.clone()),
        s2,
        ZetaConfig {
            t_order: order,
            with_sym2: true,
        },
    )?;
    let omega = c.central();
    let sym2 = lfactor_sym2(s2, &omega);
    let twist = EulerFactor::new(
        "central",
        vec![InverseRoot::in_t(&omega * &s2.central(), 2)],
    );
    let tensor = maybe_corrupt(lfactor_tensor_gsp4_gl2(c, s2), mutate);
    let ratio = twist
        .reciprocal(order, 0)
        .mul(&sym2.expand(order, 0))
        .mul(&tensor.expand(order, 0));
    let wedge = maybe_corrupt(lfactor_wedge2_std2_inert(c, s2), mutate).expand(order, 0);
    let params = inert_params(c, s2);
    Ok(vec![
        IdentityReport::from_series(
            "inert_tensor_ratio",
            INERT_RATIO_STATEMENT,
            params.clone(),
            order,
            None,
            &lhs,
            &ratio,
        ),
        IdentityReport::from_series(
            "inert_wedge2_std2",
            INERT_WEDGE_STATEMENT,
            params,
            order,
            None,
            &lhs,
            &wedge,
        ),
    ])
}

/// The two-variable expansion against the product of its three constituents.
pub fn verify_two_variable(
    s4: &SatakeGL4,
    s2: &SatakeGL2,
    t_order: u32,
    u_order: u32,
    mutate: bool,
) -> Result<IdentityReport, ReptheoryError> {
    let lhs = two_variable_factor(s4, s2, t_order, u_order)?;
    let std4 = lfactor_std4(s4).expand(t_order, u_order);
    let l12 = maybe_corrupt(lfactor_wedge2_std2_split(s4, s2), mutate).expand(t_order, u_order);
    let sym2_inv = lfactor_sym2(s2, &s4.central()).reciprocal(t_order, u_order);
    let rhs = std4.mul(&l12).mul(&sym2_inv);
    Ok(IdentityReport::from_series(
        "two_variable",
        TWO_VARIABLE_STATEMENT,
        split_params(s4, s2),
        t_order,
        Some(u_order),
        &lhs,
        &rhs,
    ))
}

fn mono(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s).expect("literal monomial")
}

fn gl2_character(weight: [i32; 2]) -> Result<LaurentPoly, ReptheoryError> {
    Ok(weyl_character(RootSystemId::A1, &weight)?.rename(&[("x1", "b1"), ("x2", "b2")])?)
}

fn complete_homogeneous(values: &[LaurentPoly], l: u32) -> LaurentPoly {
    let roots: Vec<InverseRoot> = values
        .iter()
        .map(|v| InverseRoot::in_t(v.clone(), 1))
        .collect();
    TruncatedSeries::from_inverse_roots(&roots, Some(l), None).coefficient(l, 0)
}

/// Summands of the right-hand side for degree `l`, ordered by descending
/// `i` then descending `m1`.
fn plethysm_terms(
    system: RootSystemId,
    quadratic: &[LaurentPoly],
    l: u32,
) -> Result<Vec<LaurentPoly>, ReptheoryError> {
    let mut out = Vec::new();
    for i in (0..=l / 2).rev() {
        let j = (l - 2 * i) as i32;
        let h = complete_homogeneous(quadratic, i);
        for m2 in 0..=j / 2 {
            let m1 = j - m2;
            let chi = match system {
                RootSystemId::D3Sim => weyl_character(system, &[m1, m2, 0])?,
                _ => weyl_character(system, &[m1, m2])?,
            };
            out.push(&(&h * &chi) * &gl2_character([m1, m2])?);
        }
    }
    Ok(out)
}

fn sym_alg_eigenvalues() -> Vec<LaurentPoly> {
    let e = [mono("y1"), mono("y2"), mono("nu*y2^-1"), mono("nu*y1^-1")];
    let b = [mono("b1"), mono("b2")];
    e.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

fn separation_eigenvalues() -> Vec<LaurentPoly> {
    let t = [
        mono("y1"),
        mono("y2"),
        mono("y3"),
        mono("nu*y3^-1"),
        mono("nu*y2^-1"),
        mono("nu*y1^-1"),
    ];
    let b = [mono("b1"), mono("b2")];
    t.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn plethysm_report(
    identity: &str,
    statement: &str,
    system: RootSystemId,
    mut eigenvalues: Vec<LaurentPoly>,
    quadratic: Vec<LaurentPoly>,
    point: Option<(Value, HashMap<&str, LaurentPoly>)>,
    l_max: u32,
    mutate: bool,
) -> Result<IdentityReport, ReptheoryError> {
    if mutate {
        eigenvalues[0] = eigenvalues[0].scale(&rat(2, 1));
    }
    let (params, subs) = match point {
        Some((v, s)) => (v, Some(s)),
        None => (json!({"mode": "symbolic"}), None),
    };
    let eval = |p: LaurentPoly| -> Result<LaurentPoly, ReptheoryError> {
        match &subs {
            Some(s) => Ok(p.substitute(s)?),
            None => Ok(p),
        }
    };
    let lhs_series = TruncatedSeries::from_inverse_roots(
        &eigenvalues
            .iter()
            .map(|v| InverseRoot::in_t(v.clone(), 1))
            .collect::<Vec<_>>(),
        Some(l_max),
        None,
    );
    let mut mismatch = None;
    for l in 0..=l_max {
        let lhs = eval(lhs_series.coefficient(l, 0))?;
        let rhs = eval(plethysm_terms(system, &quadratic, l)?.into_iter().sum())?;
        if lhs != rhs {
            mismatch = Some(MismatchReport {
                degree: l,
                u_degree: None,
                lhs: lhs.render(),
                rhs: rhs.render(),
            });
            break;
        }
    }
    Ok(IdentityReport {
        identity: identity.to_string(),
        statement: statement.to_string(),
        params,
        order: l_max,
        u_order: None,
        pass: mismatch.is_none(),
        first_mismatch: mismatch,
    })
}

/// Symmetric-power factorization for `GSp_4 x GL_2`, either in generic
/// torus variables or at a given Satake point.
pub fn verify_sym_alg_fact(
    point: Option<(&SatakeGSp4, &SatakeGL2)>,
    l_max: u32,
    mutate: bool,
) -> Result<IdentityReport, ReptheoryError> {
    let quadratic = vec![mono("nu*b1*b2")];
    let point = point.map(|(c, s2)| {
        let mut subs: HashMap<&str, LaurentPoly> = c.torus_point().into_iter().collect();
        subs.insert("b1", s2.beta[0].clone());
        subs.insert("b2", s2.beta[1].clone());
        (inert_params(c, s2), subs)
    });
    plethysm_report(
        "sym_alg_fact",
        SYM_ALG_STATEMENT,
        RootSystemId::C2Sim,
        sym_alg_eigenvalues(),
        quadratic,
        point,
        l_max,
        mutate,
    )
}

/// The analogous factorization for the twelve split-place eigenvalues.
pub fn verify_separation_split(
    point: Option<(&SatakeGL4, &SatakeGL2)>,
    l_max: u32,
    mutate: bool,
) -> Result<IdentityReport, ReptheoryError> {
    let quadratic = vec![mono("nu*b1^2"), mono("nu*b1*b2"), mono("nu*b2^2")];
    let point = point.map(|(s4, s2)| {
        let e = crate::reptheory::exterior_square_satake(s4);
        let mut subs: HashMap<&str, LaurentPoly> = e.torus_point().into_iter().collect();
        subs.insert("b1", s2.beta[0].clone());
        subs.insert("b2", s2.beta[1].clone());
        (split_params(s4, s2), subs)
    });
    plethysm_report(
        "separation_split",
        SEPARATION_STATEMENT,
        RootSystemId::D3Sim,
        separation_eigenvalues(),
        quadratic,
        point,
        l_max,
        mutate,
    )
}

/// `(h_l at the identity, right-hand summands at the identity)`.
pub fn sym_alg_dimension_terms(l: u32) -> Result<(Rational, Vec<Rational>), ReptheoryError> {
    let lhs = complete_homogeneous(&sym_alg_eigenvalues(), l).coefficient_sum();
    let terms = plethysm_terms(RootSystemId::C2Sim, &[mono("nu*b1*b2")], l)?;
    Ok((
        lhs,
        terms.iter().map(LaurentPoly::coefficient_sum).collect(),
    ))
}

/// Split-place counterpart of [`sym_alg_dimension_terms`].
pub fn separation_dimension_terms(l: u32) -> Result<(Rational, Vec<Rational>), ReptheoryError> {
    let lhs = complete_homogeneous(&separation_eigenvalues(), l).coefficient_sum();
    let quadratic = [mono("nu*b1^2"), mono("nu*b1*b2"), mono("nu*b2^2")];
    let terms = plethysm_terms(RootSystemId::D3Sim, &quadratic, l)?;
    Ok((
        lhs,
        terms.iter().map(LaurentPoly::coefficient_sum).collect(),
    ))
}

/// Branching identity as a report.
pub fn branching_report(lambda: &[i32]) -> Result<IdentityReport, ReptheoryError> {
    let r = verify_branching(lambda)?;
    let mismatch = (!r.pass).then(|| MismatchReport {
        degree: 0,
        u_degree: None,
        lhs: r.lhs.clone().unwrap_or_default(),
        rhs: r.rhs.clone().unwrap_or_default(),
    });
    Ok(IdentityReport {
        identity: "branching".to_string(),
        statement: BRANCHING_STATEMENT.to_string(),
        params: json!({"lambda": lambda, "summands": r.summands}),
        order: 0,
        u_order: None,
        pass: r.pass,
        first_mismatch: mismatch,
    })
}
