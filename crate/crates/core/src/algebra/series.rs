use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{LaurentPoly, Rational};

/// Default truncation order in `T`.
pub const DEFAULT_T_ORDER: u32 = 8;
/// Default truncation order in `U`.
pub const DEFAULT_U_ORDER: u32 = 4;

/// An inverse root `λ` attached to the monomial `T^t_degree U^u_degree`,
/// standing for the factor `(1 - λ T^a U^b)^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseRoot {
    pub value: LaurentPoly,
    pub t_degree: u32,
    pub u_degree: u32,
}

impl InverseRoot {
    pub fn in_t(value: LaurentPoly, degree: u32) -> Self {
        InverseRoot {
            value,
            t_degree: degree,
            u_degree: 0,
        }
    }

    pub fn in_u(value: LaurentPoly, degree: u32) -> Self {
        InverseRoot {
            value,
            t_degree: 0,
            u_degree: degree,
        }
    }
}

/// First coefficient (in graded-lex order of `(T, U)` degrees) where two
/// series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub t_degree: u32,
    pub u_degree: u32,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

/// Power series in `T` and optionally `U` with Laurent-polynomial
/// coefficients.
///
/// Each deformation variable has an order bound; `None` means the variable
/// does not occur, so every coefficient has degree zero in it and the series
/// is exact in that direction. Coefficients beyond the bounds are never
/// stored.
#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    t_order: Option<u32>,
    u_order: Option<u32>,
    coeffs: BTreeMap<(u32, u32), LaurentPoly>,
}

fn min_order(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn within(deg: u32, order: Option<u32>) -> bool {
    match order {
        Some(n) => deg <= n,
        None => deg == 0,
    }
}

impl TruncatedSeries {
    /// The constant series `1`.
    pub fn one(t_order: Option<u32>, u_order: Option<u32>) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((0, 0), LaurentPoly::one());
        TruncatedSeries {
            t_order,
            u_order,
            coeffs,
        }
    }

    /// Builds a series from explicit coefficients, dropping those outside
    /// the bounds.
    pub fn from_coefficients<I>(t_order: Option<u32>, u_order: Option<u32>, coeffs: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), LaurentPoly)>,
    {
        let mut map: BTreeMap<(u32, u32), LaurentPoly> = BTreeMap::new();
        for ((i, j), c) in coeffs {
            if !within(i, t_order) || !within(j, u_order) || c.is_zero() {
                continue;
            }
            let entry = map.entry((i, j)).or_insert_with(LaurentPoly::zero);
            *entry = &*entry + &c;
        }
        map.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            t_order,
            u_order,
            coeffs: map,
        }
    }

    /// Expands `prod (1 - λ T^a U^b)^-1`.
    ///
    /// Panics if a root has degree zero in both variables or uses a
    /// variable whose order is `None`.
    pub fn from_inverse_roots(
        roots: &[InverseRoot],
        t_order: Option<u32>,
        u_order: Option<u32>,
    ) -> Self {
        let nt = t_order.unwrap_or(0);
        let nu = u_order.unwrap_or(0);
        let mut grid: Vec<Vec<LaurentPoly>> =
            vec![vec![LaurentPoly::zero(); nu as usize + 1]; nt as usize + 1];
        grid[0][0] = LaurentPoly::one();
        for r in roots {
            check_root(r, t_order, u_order);
            let (a, b) = (r.t_degree as usize, r.u_degree as usize);
            if a > nt as usize || b > nu as usize {
                continue;
            }
            for i in a..=nt as usize {
                for j in b..=nu as usize {
                    if grid[i - a][j - b].is_zero() {
                        continue;
                    }
                    let add = &r.value * &grid[i - a][j - b];
                    grid[i][j] = &grid[i][j] + &add;
                }
            }
        }
        Self::from_grid(grid, t_order, u_order)
    }

    /// Expands the polynomial `prod (1 - λ T^a U^b)` (the reciprocal of
    /// [`TruncatedSeries::from_inverse_roots`]).
    pub fn from_factor_polynomial(
        roots: &[InverseRoot],
        t_order: Option<u32>,
        u_order: Option<u32>,
    ) -> Self {
        let nt = t_order.unwrap_or(0) as usize;
        let nu = u_order.unwrap_or(0) as usize;
        let mut grid: Vec<Vec<LaurentPoly>> = vec![vec![LaurentPoly::zero(); nu + 1]; nt + 1];
        grid[0][0] = LaurentPoly::one();
        for r in roots {
            check_root(r, t_order, u_order);
            let (a, b) = (r.t_degree as usize, r.u_degree as usize);
            if a > nt || b > nu {
                continue;
            }
            for i in (a..=nt).rev() {
                for j in (b..=nu).rev() {
                    if grid[i - a][j - b].is_zero() {
                        continue;
                    }
                    let sub = &r.value * &grid[i - a][j - b];
                    grid[i][j] = &grid[i][j] - &sub;
                }
            }
        }
        Self::from_grid(grid, t_order, u_order)
    }

    fn from_grid(grid: Vec<Vec<LaurentPoly>>, t_order: Option<u32>, u_order: Option<u32>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (i, row) in grid.into_iter().enumerate() {
            for (j, c) in row.into_iter().enumerate() {
                if !c.is_zero() {
                    coeffs.insert((i as u32, j as u32), c);
                }
            }
        }
        TruncatedSeries {
            t_order,
            u_order,
            coeffs,
        }
    }

    pub fn t_order(&self) -> Option<u32> {
        self.t_order
    }

    pub fn u_order(&self) -> Option<u32> {
        self.u_order
    }

    /// Coefficient of `T^i U^j` (zero when absent or out of range).
    pub fn coefficient(&self, i: u32, j: u32) -> LaurentPoly {
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    /// Nonzero coefficients in ascending `(T, U)` degree order.
    pub fn coefficients(&self) -> impl Iterator<Item = (&(u32, u32), &LaurentPoly)> + '_ {
        self.coeffs.iter()
    }

    /// Lowers the order bounds.
    pub fn truncate(&self, t_order: Option<u32>, u_order: Option<u32>) -> Self {
        let t_order = min_order(self.t_order, t_order);
        let u_order = min_order(self.u_order, u_order);
        TruncatedSeries {
            t_order,
            u_order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|((i, j), _)| within(*i, t_order) && within(*j, u_order))
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Exact product truncated to the smaller of the two bounds per variable.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let t_order = min_order(self.t_order, other.t_order);
        let u_order = min_order(self.u_order, other.u_order);
        let mut acc: BTreeMap<(u32, u32), LaurentPoly> = BTreeMap::new();
        for ((i1, j1), c1) in &self.coeffs {
            if !within(*i1, t_order) || !within(*j1, u_order) {
                continue;
            }
            for ((i2, j2), c2) in &other.coeffs {
                let (i, j) = (i1 + i2, j1 + j2);
                if !within(i, t_order) || !within(j, u_order) {
                    continue;
                }
                let prod = c1 * c2;
                let entry = acc.entry((i, j)).or_insert_with(LaurentPoly::zero);
                *entry = &*entry + &prod;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            t_order,
            u_order,
            coeffs: acc,
        }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coefficients<F>(&self, f: F) -> TruncatedSeries
    where
        F: Fn(&LaurentPoly) -> LaurentPoly,
    {
        let mut coeffs = BTreeMap::new();
        for (k, c) in &self.coeffs {
            let v = f(c);
            if !v.is_zero() {
                coeffs.insert(*k, v);
            }
        }
        TruncatedSeries {
            t_order: self.t_order,
            u_order: self.u_order,
            coeffs,
        }
    }

    /// Compares on the common truncation, returning the first differing
    /// coefficient in ascending `(T, U)` order.
    pub fn first_mismatch(&self, other: &TruncatedSeries) -> Option<Mismatch> {
        let t_order = min_order(self.t_order, other.t_order);
        let u_order = min_order(self.u_order, other.u_order);
        let keys: std::collections::BTreeSet<(u32, u32)> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .filter(|(i, j)| within(*i, t_order) && within(*j, u_order))
            .collect();
        let mut keys: Vec<(u32, u32)> = keys.into_iter().collect();
        keys.sort_by_key(|&(i, j)| (i + j, j, i));
        for (i, j) in keys {
            let a = self.coefficient(i, j);
            let b = other.coefficient(i, j);
            if a != b {
                return Some(Mismatch {
                    t_degree: i,
                    u_degree: j,
                    lhs: a,
                    rhs: b,
                });
            }
        }
        None
    }

    /// Exact equality on the common truncation.
    pub fn eq_truncated(&self, other: &TruncatedSeries) -> bool {
        self.first_mismatch(other).is_none()
    }

    /// Human-readable form such as `1 + 12T + 78T^2`.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut keys: Vec<&(u32, u32)> = self.coeffs.keys().collect();
        keys.sort_by_key(|&&(i, j)| (i + j, j, i));
        for (k, key) in keys.into_iter().enumerate() {
            let c = &self.coeffs[key];
            let mono = monomial_name(key.0, key.1);
            match c.as_constant() {
                Some(v) => {
                    let neg = v.is_negative();
                    push_sign(&mut out, k == 0, neg);
                    let abs = v.abs();
                    if mono.is_empty() {
                        out.push_str(&abs.to_string());
                    } else {
                        if !abs.is_one() {
                            out.push_str(&abs.to_string());
                        }
                        out.push_str(&mono);
                    }
                }
                None => {
                    push_sign(&mut out, k == 0, false);
                    out.push('(');
                    out.push_str(&c.render());
                    out.push(')');
                    if !mono.is_empty() {
                        out.push('*');
                        out.push_str(&mono);
                    }
                }
            }
        }
        out
    }

    /// Whether every coefficient is a rational constant.
    pub fn is_numeric(&self) -> bool {
        self.coeffs.values().all(|c| c.as_constant().is_some())
    }

    /// Constant coefficients keyed by `(T, U)` degree; `None` if any
    /// coefficient is non-constant.
    pub fn numeric_coefficients(&self) -> Option<Vec<((u32, u32), Rational)>> {
        self.coeffs
            .iter()
            .map(|(k, c)| c.as_constant().map(|v| (*k, v)))
            .collect()
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(0, 0)
            .as_constant()
            .unwrap_or_else(Rational::zero)
    }
}

fn check_root(r: &InverseRoot, t_order: Option<u32>, u_order: Option<u32>) {
    assert!(
        r.t_degree > 0 || r.u_degree > 0,
        "inverse root must carry a positive deformation degree"
    );
    assert!(
        r.t_degree == 0 || t_order.is_some(),
        "inverse root uses T but the series has no T direction"
    );
    assert!(
        r.u_degree == 0 || u_order.is_some(),
        "inverse root uses U but the series has no U direction"
    );
}

fn push_sign(out: &mut String, first: bool, negative: bool) {
    match (first, negative) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
}

fn monomial_name(i: u32, j: u32) -> String {
    let part = |name: &str, d: u32| match d {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{d}"),
    };
    let t = part("T", i);
    let u = part("U", j);
    match (t.is_empty(), u.is_empty()) {
        (false, false) => format!("{t}*{u}"),
        _ => format!("{t}{u}"),
    }
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.t_order == other.t_order
            && self.u_order == other.u_order
            && self.coeffs == other.coeffs
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Serialize)]
struct CoefJson<'a> {
    t: u32,
    u: u32,
    coef: &'a LaurentPoly,
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    vars: Vec<&'static str>,
    order: Vec<u32>,
    text: String,
    coefficients: Vec<CoefJson<'a>>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut vars = Vec::new();
        let mut order = Vec::new();
        if let Some(n) = self.t_order {
            vars.push("T");
            order.push(n);
        }
        if let Some(n) = self.u_order {
            vars.push("U");
            order.push(n);
        }
        let mut keys: Vec<&(u32, u32)> = self.coeffs.keys().collect();
        keys.sort_by_key(|&&(i, j)| (i + j, j, i));
        SeriesJson {
            vars,
            order,
            text: self.render(),
            coefficients: keys
                .into_iter()
                .map(|k| CoefJson {
                    t: k.0,
                    u: k.1,
                    coef: &self.coeffs[k],
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    fn poly_t(coeffs: &[i64], n: u32) -> TruncatedSeries {
        TruncatedSeries::from_coefficients(
            Some(n),
            None,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| ((i as u32, 0), LaurentPoly::from_int(*c))),
        )
    }

    #[test]
    fn twelve_unit_roots() {
        let roots = vec![InverseRoot::in_t(LaurentPoly::one(), 1); 12];
        let s = TruncatedSeries::from_inverse_roots(&roots, Some(2), None);
        assert_eq!(s.render(), "1 + 12T + 78T^2");
    }

    #[test]
    fn geometric_series() {
        let s = TruncatedSeries::from_inverse_roots(&[InverseRoot::in_t(p("x"), 1)], Some(3), None);
        assert_eq!(s.render(), "1 + (x)*T + (x^2)*T^2 + (x^3)*T^3");
        assert_eq!(s.coefficient(3, 0), p("x^3"));
    }

    #[test]
    fn first_order_expansion() {
        let roots = [
            InverseRoot::in_t(p("a1*a2*b1"), 1),
            InverseRoot::in_t(p("a1*a2*b2"), 1),
        ];
        let s = TruncatedSeries::from_inverse_roots(&roots, Some(1), None);
        assert_eq!(s.coefficient(1, 0), p("a1*a2*b1 + a1*a2*b2"));
        assert_eq!(s.coefficient(0, 0), LaurentPoly::one());
    }

    #[test]
    fn product_of_conjugates() {
        let a = poly_t(&[1, 1], 4);
        let b = poly_t(&[1, -1], 4);
        assert_eq!(a.mul(&b).render(), "1 - T^2");
    }

    #[test]
    fn reflexive_equality() {
        let s =
            TruncatedSeries::from_inverse_roots(&[InverseRoot::in_t(p("x + y"), 2)], Some(6), None);
        assert!(s.eq_truncated(&s));
    }

    #[test]
    fn factor_polynomial_inverts_expansion() {
        let roots = [
            InverseRoot::in_t(p("x"), 1),
            InverseRoot::in_t(p("y^-1"), 2),
            InverseRoot::in_u(p("z"), 1),
            InverseRoot {
                value: p("2*x"),
                t_degree: 1,
                u_degree: 1,
            },
        ];
        let e = TruncatedSeries::from_inverse_roots(&roots, Some(5), Some(3));
        let f = TruncatedSeries::from_factor_polynomial(&roots, Some(5), Some(3));
        assert!(e
            .mul(&f)
            .eq_truncated(&TruncatedSeries::one(Some(5), Some(3))));
    }

    #[test]
    fn mismatch_reports_lowest_degree() {
        let a = poly_t(&[1, 2, 3], 4);
        let b = poly_t(&[1, 2, 4], 4);
        let m = a.first_mismatch(&b).unwrap();
        assert_eq!((m.t_degree, m.u_degree), (2, 0));
        assert_eq!(m.lhs.as_constant(), Some(rat(3, 1)));
    }

    #[test]
    fn comparison_uses_common_truncation() {
        let a = poly_t(&[1, 2, 3], 1);
        let b = poly_t(&[1, 2, 4], 4);
        assert!(a.eq_truncated(&b));
    }

    #[test]
    fn two_variable_rendering() {
        let s = TruncatedSeries::from_inverse_roots(
            &[
                InverseRoot::in_u(LaurentPoly::one(), 1),
                InverseRoot::in_t(LaurentPoly::one(), 1),
            ],
            Some(1),
            Some(1),
        );
        assert_eq!(s.render(), "1 + T + U + T*U");
    }
}
