use serde::Serialize;

use crate::algebra::{InverseRoot, LaurentPoly, TruncatedSeries};
use crate::reptheory::{
    exterior_square_satake, gsp4_satake_from_inert, SatakeGL2, SatakeGL4, SatakeGSp4,
};

/// `prod (1 - λ X^d)^-1` over its blocks, with `X` either `T` or `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerFactor {
    pub label: String,
    pub blocks: Vec<InverseRoot>,
}

#[derive(Serialize)]
struct BlockJson {
    root: String,
    var: &'static str,
    degree: u32,
}

impl EulerFactor {
    pub fn new(label: &str, blocks: Vec<InverseRoot>) -> Self {
        EulerFactor {
            label: label.to_string(),
            blocks,
        }
    }

    pub fn uses_u(&self) -> bool {
        self.blocks.iter().any(|b| b.u_degree > 0)
    }

    pub fn uses_t(&self) -> bool {
        self.blocks.iter().any(|b| b.t_degree > 0)
    }

    /// Total degree of the denominator polynomial in its variable.
    pub fn degree(&self) -> u32 {
        self.blocks.iter().map(|b| b.t_degree + b.u_degree).sum()
    }

    /// Expansion of the factor; directions the factor does not use are
    /// left exact.
    pub fn expand(&self, t_order: u32, u_order: u32) -> TruncatedSeries {
        let t = self.uses_t().then_some(t_order);
        let u = self.uses_u().then_some(u_order);
        let t = if t.is_none() && u.is_none() {
            Some(t_order)
        } else {
            t
        };
        TruncatedSeries::from_inverse_roots(&self.blocks, t, u)
    }

    /// The reciprocal polynomial `prod (1 - λ X^d)` as a series.
    pub fn reciprocal(&self, t_order: u32, u_order: u32) -> TruncatedSeries {
        let t = self.uses_t().then_some(t_order);
        let u = self.uses_u().then_some(u_order);
        let t = if t.is_none() && u.is_none() {
            Some(t_order)
        } else {
            t
        };
        TruncatedSeries::from_factor_polynomial(&self.blocks, t, u)
    }

    /// Product of all inverse roots, each counted once per block.
    pub fn root_product(&self) -> LaurentPoly {
        self.blocks.iter().map(|b| b.value.clone()).product()
    }

    /// Same factor with the first inverse root doubled.
    pub fn corrupted(&self) -> Self {
        let mut out = self.clone();
        if let Some(b) = out.blocks.first_mut() {
            b.value = b.value.scale(&crate::algebra::rat(2, 1));
        }
        out.label = format!("{} (corrupted)", self.label);
        out
    }

    /// Compact product form such as `(1-T^2)^-3`; equal blocks are merged
    /// in order of first appearance.
    pub fn render(&self) -> String {
        let mut groups: Vec<(&InverseRoot, usize)> = Vec::new();
        for b in &self.blocks {
            match groups.iter_mut().find(|(g, _)| *g == b) {
                Some((_, k)) => *k += 1,
                None => groups.push((b, 1)),
            }
        }
        groups
            .into_iter()
            .map(|(b, k)| {
                let var = if b.u_degree > 0 { "U" } else { "T" };
                let d = b.t_degree + b.u_degree;
                let power = if d == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{d}")
                };
                let root = b.value.render();
                let body = if root == "1" {
                    format!("1-{power}")
                } else if let Some(rest) = root.strip_prefix('-') {
                    format!("1+{rest}*{power}")
                } else {
                    format!("1-{root}*{power}")
                };
                format!("({body})^-{k}")
            })
            .collect::<Vec<_>>()
            .join("")
    }

    pub fn blocks_json(&self) -> serde_json::Value {
        let v: Vec<BlockJson> = self
            .blocks
            .iter()
            .map(|b| BlockJson {
                root: b.value.render(),
                var: if b.u_degree > 0 { "U" } else { "T" },
                degree: b.t_degree + b.u_degree,
            })
            .collect();
        serde_json::to_value(v).unwrap()
    }
}

/// `L(2s, Sym^2 ⊗ omega)` for the `GL_2` class `beta`: blocks
/// `beta1^2 omega, beta1 beta2 omega, beta2^2 omega` at `T^2`.
pub fn lfactor_sym2(s2: &SatakeGL2, omega: &LaurentPoly) -> EulerFactor {
    let [b1, b2] = &s2.beta;
    let roots = [b1 * b1, b1 * b2, b2 * b2];
    EulerFactor::new(
        "sym2",
        roots
            .iter()
            .map(|r| InverseRoot::in_t(r * omega, 2))
            .collect(),
    )
}

/// The twelve blocks `chi alpha_i alpha_j beta_k`.
pub fn lfactor_wedge2_std2_split(s4: &SatakeGL4, s2: &SatakeGL2) -> EulerFactor {
    let e = exterior_square_satake(s4);
    let mut blocks = Vec::with_capacity(12);
    for t in &e.eigenvalues {
        for b in &s2.beta {
            blocks.push(InverseRoot::in_t(t * b, 1));
        }
    }
    EulerFactor::new("wedge2_std2", blocks)
}

/// Eight blocks `e_i beta_k` from the `GSp_4` eigenvalues plus the two
/// quadratic blocks `c0^2 c1 c2 beta_k^2`.
pub fn lfactor_wedge2_std2_inert(c: &SatakeGSp4, s2: &SatakeGL2) -> EulerFactor {
    let mut blocks = lfactor_tensor_gsp4_gl2(c, s2).blocks;
    let omega = c.central();
    for b in &s2.beta {
        blocks.push(InverseRoot::in_t(&omega * &(b * b), 2));
    }
    EulerFactor::new("wedge2_std2", blocks)
}

/// The degree-8 factor with blocks `e_i beta_k`.
pub fn lfactor_tensor_gsp4_gl2(c: &SatakeGSp4, s2: &SatakeGL2) -> EulerFactor {
    let e = gsp4_satake_from_inert(c);
    let mut blocks = Vec::with_capacity(8);
    for x in &e {
        for b in &s2.beta {
            blocks.push(InverseRoot::in_t(x * b, 1));
        }
    }
    EulerFactor::new("tensor8", blocks)
}

/// Standard factor of `GL_4` in `U`.
pub fn lfactor_std4(s4: &SatakeGL4) -> EulerFactor {
    EulerFactor::new(
        "std4",
        s4.alpha
            .iter()
            .map(|a| InverseRoot::in_u(a.clone(), 1))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn trivial_renderings() {
        let s2 = SatakeGL2::trivial();
        assert_eq!(
            lfactor_sym2(&s2, &LaurentPoly::one()).render(),
            "(1-T^2)^-3"
        );
        assert_eq!(lfactor_std4(&SatakeGL4::trivial()).render(), "(1-U)^-4");
        assert_eq!(
            lfactor_wedge2_std2_inert(&SatakeGSp4::trivial(), &s2).render(),
            "(1-T)^-8(1-T^2)^-2"
        );
        let l12 = lfactor_wedge2_std2_split(&SatakeGL4::trivial(), &s2);
        assert_eq!(l12.render(), "(1-T)^-12");
        assert_eq!(l12.expand(2, 0).render(), "1 + 12T + 78T^2");
    }

    #[test]
    fn sym2_first_order() {
        let f = lfactor_sym2(&SatakeGL2::symbolic(), &p("w"));
        assert_eq!(
            f.expand(2, 0).coefficient(2, 0),
            p("b1^2*w + b1*b2*w + b2^2*w")
        );
        assert_eq!(f.expand(2, 0).coefficient(1, 0), LaurentPoly::zero());
    }

    #[test]
    fn split_root_product() {
        let s4 = SatakeGL4::symbolic();
        let s2 = SatakeGL2::symbolic();
        let f = lfactor_wedge2_std2_split(&s4, &s2);
        assert_eq!(f.blocks.len(), 12);
        let expected = (&s4.central() * &s2.central()).pow(6).unwrap();
        assert_eq!(f.root_product(), expected);
    }

    #[test]
    fn degrees() {
        let s2 = SatakeGL2::symbolic();
        let c = SatakeGSp4::symbolic();
        assert_eq!(lfactor_wedge2_std2_inert(&c, &s2).degree(), 12);
        assert_eq!(lfactor_tensor_gsp4_gl2(&c, &s2).degree(), 8);
        assert_eq!(lfactor_std4(&SatakeGL4::symbolic()).degree(), 4);
        assert_eq!(lfactor_sym2(&s2, &LaurentPoly::one()).blocks.len(), 3);
    }

    #[test]
    fn dropping_second_beta_leaves_four_blocks() {
        let s2 = SatakeGL2::new(p("b1"), LaurentPoly::constant(rat(0, 1)));
        let f = lfactor_tensor_gsp4_gl2(&SatakeGSp4::symbolic(), &s2);
        let live = f.blocks.iter().filter(|b| !b.value.is_zero()).count();
        assert_eq!(live, 4);
    }
}
