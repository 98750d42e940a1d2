use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_rational, AlgebraError, Rational};

/// Maximum number of Laurent variables a single polynomial may carry.
pub const MAX_VARS: usize = 8;

/// Dense exponent vector; slots past the polynomial's variable count are zero.
pub type Exponent = [i32; MAX_VARS];

const ZERO_EXP: Exponent = [0; MAX_VARS];

/// Multivariate Laurent polynomial with exact rational coefficients.
///
/// Variable names are kept sorted, and terms are stored in lexicographic
/// order of their exponent vectors, so two polynomials over the same
/// variables are equal exactly when their term maps are equal. Polynomials
/// over different variable lists compare equal when they agree after both
/// are extended to the union of their variables.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Exponent, Rational>,
}

fn add_exp(a: &Exponent, b: &Exponent) -> Exponent {
    let mut out = *a;
    for (o, x) in out.iter_mut().zip(b) {
        *o += x;
    }
    out
}

fn sub_exp(a: &Exponent, b: &Exponent) -> Exponent {
    let mut out = *a;
    for (o, x) in out.iter_mut().zip(b) {
        *o -= x;
    }
    out
}

fn checked_vars(mut names: Vec<String>) -> Result<Arc<Vec<String>>, AlgebraError> {
    names.sort();
    names.dedup();
    if names.len() > MAX_VARS {
        return Err(AlgebraError::TooManyVariables(names.len()));
    }
    Ok(Arc::new(names))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            vars: Arc::new(Vec::new()),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ZERO_EXP, c);
        }
        LaurentPoly {
            vars: Arc::new(Vec::new()),
            terms,
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// The single variable `name`.
    pub fn var(name: &str) -> Self {
        Self::monomial(Rational::one(), &[(name, 1)]).expect("one variable always fits")
    }

    /// `coef * prod name^exp`; repeated names have their exponents added.
    pub fn monomial(coef: Rational, powers: &[(&str, i32)]) -> Result<Self, AlgebraError> {
        let vars = checked_vars(powers.iter().map(|(n, _)| n.to_string()).collect())?;
        let mut exp = ZERO_EXP;
        for (name, e) in powers {
            let idx = vars.iter().position(|v| v == name).unwrap();
            exp[idx] += e;
        }
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        Ok(LaurentPoly { vars, terms })
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs where each
    /// exponent slice is aligned with `vars` (which need not be sorted).
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Vec<i32>, Rational)>,
    {
        let sorted = checked_vars(vars.iter().map(|s| s.to_string()).collect())?;
        if sorted.len() != vars.len() {
            return Err(AlgebraError::Parse("duplicate variable names".into()));
        }
        let slot: Vec<usize> = vars
            .iter()
            .map(|v| sorted.iter().position(|s| s == v).unwrap())
            .collect();
        let mut map: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(AlgebraError::Parse(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    vars.len()
                )));
            }
            let mut exp = ZERO_EXP;
            for (i, x) in e.iter().enumerate() {
                exp[slot[i]] = *x;
            }
            *map.entry(exp).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            vars: sorted,
            terms: map,
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponents, each exponent
    /// truncated to the variable count.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i32], &Rational)> + '_ {
        let n = self.vars.len();
        self.terms.iter().map(move |(e, c)| (&e[..n], c))
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                (*e == ZERO_EXP).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Sum of all coefficients, i.e. the value at the all-ones point.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Exponent of `name` in every term, or `None` if the variable is unused.
    pub fn degree_range(&self, name: &str) -> Option<(i32, i32)> {
        let idx = self.vars.iter().position(|v| v == name)?;
        let mut it = self.terms.keys().map(|e| e[idx]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    fn with_vars(&self, vars: &Arc<Vec<String>>) -> LaurentPoly {
        if Arc::ptr_eq(&self.vars, vars) || *self.vars == **vars {
            return LaurentPoly {
                vars: vars.clone(),
                terms: self.terms.clone(),
            };
        }
        let slot: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|u| u == v)
                    .expect("target is a superset")
            })
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out = ZERO_EXP;
                for (i, s) in slot.iter().enumerate() {
                    out[*s] = e[i];
                }
                (out, c.clone())
            })
            .collect();
        LaurentPoly {
            vars: vars.clone(),
            terms,
        }
    }

    fn union_vars(a: &LaurentPoly, b: &LaurentPoly) -> Arc<Vec<String>> {
        if Arc::ptr_eq(&a.vars, &b.vars) || a.vars == b.vars {
            return a.vars.clone();
        }
        if b.vars.iter().all(|v| a.vars.contains(v)) {
            return a.vars.clone();
        }
        if a.vars.iter().all(|v| b.vars.contains(v)) {
            return b.vars.clone();
        }
        let mut all: Vec<String> = a.vars.iter().chain(b.vars.iter()).cloned().collect();
        all.sort();
        all.dedup();
        assert!(
            all.len() <= MAX_VARS,
            "variable union {all:?} exceeds {MAX_VARS} slots"
        );
        Arc::new(all)
    }

    fn aligned(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        let vars = Self::union_vars(a, b);
        (a.with_vars(&vars), b.with_vars(&vars))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Integer power. Negative exponents are only defined for monomials.
    pub fn pow(&self, k: i32) -> Result<LaurentPoly, AlgebraError> {
        if k < 0 {
            let inv = self.inverse()?;
            return inv.pow(-k);
        }
        if self.is_monomial() {
            let (e, c) = self.terms.iter().next().unwrap();
            let mut exp = ZERO_EXP;
            for (o, x) in exp.iter_mut().zip(e) {
                *o = x * k;
            }
            let mut terms = BTreeMap::new();
            terms.insert(exp, num_traits::pow(c.clone(), k as usize));
            return Ok(LaurentPoly {
                vars: self.vars.clone(),
                terms,
            });
        }
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Inverse of a monomial with nonzero coefficient.
    pub fn inverse(&self) -> Result<LaurentPoly, AlgebraError> {
        if !self.is_monomial() {
            return Err(AlgebraError::NotInvertible(self.to_string()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let mut exp = ZERO_EXP;
        for (o, x) in exp.iter_mut().zip(e) {
            *o = -x;
        }
        let mut terms = BTreeMap::new();
        terms.insert(exp, c.recip());
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Replaces variables by polynomials. Variables without an entry are
    /// kept. Negative powers require the replacement to be a monomial.
    pub fn substitute(
        &self,
        map: &HashMap<&str, LaurentPoly>,
    ) -> Result<LaurentPoly, AlgebraError> {
        let images: Vec<Option<&LaurentPoly>> =
            self.vars.iter().map(|v| map.get(v.as_str())).collect();
        let all_monomial = images.iter().all(|img| img.is_none_or(|p| p.is_monomial()));
        if all_monomial {
            return self.substitute_monomials(&images);
        }
        let n = self.vars.len();
        let mut cache: HashMap<(usize, i32), LaurentPoly> = HashMap::new();
        let mut acc = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(c.clone());
            for i in 0..n {
                if e[i] == 0 {
                    continue;
                }
                let factor = match images[i] {
                    Some(p) => match cache.get(&(i, e[i])) {
                        Some(f) => f.clone(),
                        None => {
                            let f = p.pow(e[i])?;
                            cache.insert((i, e[i]), f.clone());
                            f
                        }
                    },
                    None => LaurentPoly::var(&self.vars[i]).pow(e[i])?,
                };
                term = &term * &factor;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    fn substitute_monomials(
        &self,
        images: &[Option<&LaurentPoly>],
    ) -> Result<LaurentPoly, AlgebraError> {
        // Each variable maps to a (coefficient, exponent vector) pair over a
        // common target variable list; the substitution is then linear on
        // exponents.
        let mut target: Vec<String> = Vec::new();
        for (i, img) in images.iter().enumerate() {
            match img {
                Some(p) => target.extend(p.vars.iter().cloned()),
                None => target.push(self.vars[i].clone()),
            }
        }
        let target = checked_vars(target)?;
        let mut maps: Vec<(Rational, Exponent)> = Vec::with_capacity(images.len());
        for (i, img) in images.iter().enumerate() {
            match img {
                Some(p) => {
                    let q = p.with_vars(&target);
                    let (e, c) = q.terms.into_iter().next().unwrap();
                    maps.push((c, e));
                }
                None => {
                    let mut e = ZERO_EXP;
                    e[target.iter().position(|v| *v == self.vars[i]).unwrap()] = 1;
                    maps.push((Rational::one(), e));
                }
            }
        }
        let mut powers: HashMap<(usize, i32), Rational> = HashMap::new();
        let mut out: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut coef = c.clone();
            let mut exp = ZERO_EXP;
            for (i, (mc, me)) in maps.iter().enumerate() {
                let k = e[i];
                if k == 0 {
                    continue;
                }
                if !mc.is_one() {
                    let p = powers.entry((i, k)).or_insert_with(|| {
                        if k > 0 {
                            num_traits::pow(mc.clone(), k as usize)
                        } else {
                            num_traits::pow(mc.recip(), (-k) as usize)
                        }
                    });
                    coef *= &*p;
                }
                for (o, x) in exp.iter_mut().zip(me) {
                    *o += k * x;
                }
            }
            *out.entry(exp).or_insert_with(Rational::zero) += coef;
        }
        out.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            vars: target,
            terms: out,
        })
    }

    /// Renames variables; names not in `map` are kept.
    pub fn rename(&self, map: &[(&str, &str)]) -> Result<LaurentPoly, AlgebraError> {
        let mut sub = HashMap::new();
        for (from, to) in map {
            sub.insert(*from, LaurentPoly::var(to));
        }
        self.substitute(&sub)
    }

    /// Applies an affine map to exponents over the same variables:
    /// term `x^e` becomes `x^(f(e))`. Used for Weyl-group actions.
    pub fn map_exponents<F>(&self, f: F) -> LaurentPoly
    where
        F: Fn(&[i32]) -> Vec<i32>,
    {
        let n = self.vars.len();
        let mut out: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let img = f(&e[..n]);
            let mut exp = ZERO_EXP;
            exp[..n].copy_from_slice(&img);
            *out.entry(exp).or_insert_with(Rational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        LaurentPoly {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    /// Restates the polynomial over a (superset) variable list.
    pub fn extend_vars(&self, names: &[&str]) -> Result<LaurentPoly, AlgebraError> {
        let mut all: Vec<String> = self.vars.iter().cloned().collect();
        all.extend(names.iter().map(|s| s.to_string()));
        let vars = checked_vars(all)?;
        Ok(self.with_vars(&vars))
    }

    /// Drops variables that occur with exponent zero in every term.
    pub fn prune_vars(&self) -> LaurentPoly {
        let n = self.vars.len();
        let keep: Vec<usize> = (0..n)
            .filter(|&i| self.terms.keys().any(|e| e[i] != 0))
            .collect();
        if keep.len() == n {
            return self.clone();
        }
        let vars = Arc::new(
            keep.iter()
                .map(|&i| self.vars[i].clone())
                .collect::<Vec<_>>(),
        );
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out = ZERO_EXP;
                for (slot, &i) in keep.iter().enumerate() {
                    out[slot] = e[i];
                }
                (out, c.clone())
            })
            .collect();
        LaurentPoly { vars, terms }
    }

    fn leading(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / den`.
    ///
    /// Repeatedly cancels the lexicographically leading term. Every monomial
    /// of an exact quotient lies in the box bounded, per variable, by the
    /// difference of the extreme degrees of numerator and denominator; a
    /// candidate outside it proves that no exact quotient exists.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (num, den) = Self::aligned(self, den);
        if num.is_zero() {
            return Ok(LaurentPoly {
                vars: num.vars,
                terms: BTreeMap::new(),
            });
        }
        let n = num.vars.len();
        let mut lo = ZERO_EXP;
        let mut hi = ZERO_EXP;
        for i in 0..n {
            let (nl, nh) = extreme(&num.terms, i);
            let (dl, dh) = extreme(&den.terms, i);
            lo[i] = nl - dl;
            hi[i] = nh - dh;
            if lo[i] > hi[i] {
                return Err(AlgebraError::NonExactDivision(format!(
                    "degree span in `{}` of the numerator is narrower than the denominator's",
                    num.vars[i]
                )));
            }
        }
        let (den_lead_exp, den_lead_coef) = den.leading().map(|(e, c)| (*e, c.clone())).unwrap();
        let mut rem = num.terms.clone();
        let mut quot: BTreeMap<Exponent, Rational> = BTreeMap::new();
        while let Some((lead_exp, lead_coef)) = rem.iter().next_back().map(|(e, c)| (*e, c.clone()))
        {
            let m = sub_exp(&lead_exp, &den_lead_exp);
            if (0..n).any(|i| m[i] < lo[i] || m[i] > hi[i]) {
                return Err(AlgebraError::NonExactDivision(format!(
                    "remainder term with exponent {:?} cannot be cancelled",
                    &lead_exp[..n]
                )));
            }
            let q = lead_coef / &den_lead_coef;
            for (e, c) in &den.terms {
                let key = add_exp(&m, e);
                let delta = &q * c;
                let remove = match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= delta;
                        v.is_zero()
                    }
                    None => {
                        rem.insert(key, -delta);
                        false
                    }
                };
                if remove {
                    rem.remove(&key);
                }
            }
            quot.insert(m, q);
        }
        Ok(LaurentPoly {
            vars: num.vars,
            terms: quot,
        })
    }

    /// Renders terms in descending lexicographic order, e.g. `3/2*x^2*y^-1 + 1`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let n = self.vars.len();
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let mono: Vec<String> = (0..n)
                .filter(|&i| e[i] != 0)
                .map(|i| {
                    if e[i] == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e[i])
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    /// Parses the textual form produced by [`LaurentPoly::render`].
    pub fn parse(text: &str) -> Result<LaurentPoly, AlgebraError> {
        super::parse::parse_poly(text)
    }
}

fn extreme(terms: &BTreeMap<Exponent, Rational>, i: usize) -> (i32, i32) {
    let mut it = terms.keys().map(|e| e[i]);
    let first = it.next().unwrap_or(0);
    it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x)))
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = Self::aligned(self, other);
        a.terms == b.terms
    }
}

impl Eq for LaurentPoly {}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (mut a, b) = LaurentPoly::aligned(self, rhs);
        for (e, c) in b.terms {
            let remove = match a.terms.get_mut(&e) {
                Some(v) => {
                    *v += c;
                    v.is_zero()
                }
                None => {
                    a.terms.insert(e, c);
                    false
                }
            };
            if remove {
                a.terms.remove(&e);
            }
        }
        a
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let (a, b) = LaurentPoly::aligned(self, rhs);
        let (small, large) = if a.terms.len() <= b.terms.len() {
            (&a, &b)
        } else {
            (&b, &a)
        };
        if small.terms.len() == 1 {
            // shifting by a fixed exponent preserves lexicographic order
            let (e1, c1) = small.terms.iter().next().unwrap();
            let terms = large
                .terms
                .iter()
                .map(|(e2, c2)| (add_exp(e1, e2), c1 * c2))
                .collect();
            return LaurentPoly {
                vars: a.vars.clone(),
                terms,
            };
        }
        let mut acc: HashMap<Exponent, Rational> = HashMap::with_capacity(large.terms.len() * 2);
        for (e1, c1) in &small.terms {
            for (e2, c2) in &large.terms {
                let prod = c1 * c2;
                match acc.get_mut(&add_exp(e1, e2)) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(add_exp(e1, e2), prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LaurentPoly {
            vars: a.vars.clone(),
            terms,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| &a * &b)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<i32>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let json = PolyJson {
            vars: self.vars.to_vec(),
            terms: self
                .terms()
                .rev()
                .map(|(e, c)| TermJson {
                    exp: e.to_vec(),
                    coef: c.to_string(),
                })
                .collect(),
        };
        json.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = PolyJson::deserialize(deserializer)?;
        let names: Vec<&str> = json.vars.iter().map(String::as_str).collect();
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in json.terms {
            let c = parse_rational(&t.coef).map_err(serde::de::Error::custom)?;
            terms.push((t.exp, c));
        }
        LaurentPoly::from_terms(&names, terms).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn inverse_monomials_multiply_to_one() {
        assert_eq!(p("x") * p("x^-1"), LaurentPoly::one());
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p("x + y") * p("x - y"), p("x^2 - y^2"));
    }

    #[test]
    fn cancellation_leaves_empty_term_map() {
        let s = p("1 + x") + p("-1 - x");
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(p("x^2 - 1").exact_div(&p("x - 1")).unwrap(), p("x + 1"));
        assert_eq!(
            p("x - y").exact_div(&p("x - y")).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(
            p("x^-2*y - y^3").exact_div(&p("x^-1 - y")).unwrap(),
            p("x^-1*y + y^2")
        );
    }

    #[test]
    fn inexact_division_fails_loudly() {
        let err = p("x^2 + 1").exact_div(&p("x - 1")).unwrap_err();
        assert!(matches!(err, AlgebraError::NonExactDivision(_)));
        assert!(p("1").exact_div(&p("1 - x")).is_err());
        assert_eq!(
            p("x").exact_div(&LaurentPoly::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn rendering_is_canonical() {
        let q =
            LaurentPoly::monomial(rat(3, 2), &[("x", 2), ("y", -1)]).unwrap() + LaurentPoly::one();
        assert_eq!(q.render(), "3/2*x^2*y^-1 + 1");
        assert_eq!(p("-x + 2*y").render(), "-x + 2*y");
        assert_eq!(LaurentPoly::zero().render(), "0");
    }

    #[test]
    fn json_form_matches_schema() {
        let q = LaurentPoly::monomial(rat(3, 2), &[("x", 2), ("y", -1)]).unwrap();
        let v = serde_json::to_value(&q).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"vars": ["x", "y"], "terms": [{"exp": [2, -1], "coef": "3/2"}]})
        );
        let back: LaurentPoly = serde_json::from_value(v).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn equality_ignores_unused_variables() {
        let a = p("x + y") - p("y");
        assert_eq!(a, p("x"));
        assert_eq!(a.vars(), ["x", "y"]);
    }

    #[test]
    fn monomial_substitution() {
        let q = p("x^2*y^-1 + 3");
        let mut m = HashMap::new();
        m.insert("x", p("2*a*b"));
        m.insert("y", p("b^2"));
        assert_eq!(q.substitute(&m).unwrap(), p("4*a^2 + 3"));
    }

    #[test]
    fn polynomial_substitution_rejects_negative_powers() {
        let mut m = HashMap::new();
        m.insert("x", p("a + 1"));
        assert_eq!(p("x^2").substitute(&m).unwrap(), p("a^2 + 2*a + 1"));
        assert!(p("x^-1").substitute(&m).is_err());
    }

    #[test]
    fn negative_power_of_monomial() {
        assert_eq!(p("2*x*y^-3").pow(-2).unwrap(), p("1/4*x^-2*y^6"));
    }

    #[test]
    fn too_many_variables_is_reported() {
        let names = ["a", "b", "c", "d", "e", "f", "g", "h", "i"];
        let powers: Vec<(&str, i32)> = names.iter().map(|n| (*n, 1)).collect();
        assert_eq!(
            LaurentPoly::monomial(rat(1, 1), &powers).unwrap_err(),
            AlgebraError::TooManyVariables(9)
        );
    }
}
