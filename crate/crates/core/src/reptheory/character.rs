use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::algebra::{rat, LaurentPoly, Rational};

use super::{weyl_group, ReptheoryError, RootSystemId};

/// Validates a highest weight and strips a trailing zero similitude entry.
///
/// `GL_n` weights are arbitrary non-increasing integer vectors. `C2sim`
/// weights are `k1 >= k2 >= 0`, optionally followed by `k3 = 0`. `D3sim`
/// weights are `k1 >= k2 >= |k3|` (a fourth zero entry is also accepted).
pub fn normalize_weight(system: RootSystemId, weight: &[i32]) -> Result<Vec<i32>, ReptheoryError> {
    let r = system.rank();
    let unsupported = |reason: &str| ReptheoryError::UnsupportedWeight {
        system,
        weight: weight.to_vec(),
        reason: reason.to_string(),
    };
    let mut w = weight.to_vec();
    if system.has_similitude() && w.len() == r + 1 {
        if w[r] != 0 {
            return Err(unsupported("only a zero similitude entry is supported"));
        }
        w.pop();
    }
    if w.len() != r {
        return Err(unsupported(&format!("expected {r} entries")));
    }
    let not_dominant = || ReptheoryError::NotDominant {
        system,
        weight: weight.to_vec(),
    };
    if w.windows(2).any(|p| p[0] < p[1]) && system != RootSystemId::D3Sim {
        return Err(not_dominant());
    }
    match system {
        RootSystemId::C2Sim => {
            if w[1] < 0 {
                return Err(not_dominant());
            }
        }
        RootSystemId::D3Sim if !(w[0] >= w[1] && w[1] >= w[2].abs()) => {
            return Err(not_dominant());
        }
        _ => {}
    }
    Ok(w)
}

/// Signed orbit sum `sum_w sgn(w) w(y^mu)` in the system's torus variables.
pub fn alternant(system: RootSystemId, mu: &[i32]) -> LaurentPoly {
    let names = system.torus_vars();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let sim = system.has_similitude();
    let terms = weyl_group(system).into_iter().map(|w| {
        let (mut b, k) = w.apply(mu, 0);
        if sim {
            b.push(k);
        }
        (b, rat(w.sign() as i64, 1))
    });
    LaurentPoly::from_terms(&refs, terms).expect("torus variables fit")
}

type CharKey = (RootSystemId, Vec<i32>);

fn cache() -> &'static Mutex<HashMap<CharKey, Arc<LaurentPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<CharKey, Arc<LaurentPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Character of the irreducible module of highest weight `weight`, as a
/// polynomial in generic torus variables. Results are memoized.
pub fn weyl_character(
    system: RootSystemId,
    weight: &[i32],
) -> Result<Arc<LaurentPoly>, ReptheoryError> {
    let w = normalize_weight(system, weight)?;
    let key = (system, w.clone());
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let rho = system.rho();
    let shifted: Vec<i32> = w.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let num = alternant(system, &shifted);
    let den = alternant(system, &rho);
    let chi = Arc::new(num.exact_div(&den)?);
    cache().lock().unwrap().insert(key, chi.clone());
    Ok(chi)
}

/// Substitutes torus coordinates by the given values.
pub fn specialize(
    poly: &LaurentPoly,
    point: &[(&str, LaurentPoly)],
) -> Result<LaurentPoly, ReptheoryError> {
    let map: HashMap<&str, LaurentPoly> = point.iter().cloned().collect();
    Ok(poly.substitute(&map)?)
}

/// Value of the character at the identity.
pub fn character_dimension(
    system: RootSystemId,
    weight: &[i32],
) -> Result<Rational, ReptheoryError> {
    Ok(weyl_character(system, weight)?.coefficient_sum())
}

fn dot(a: &[i32], b: &[i32]) -> i64 {
    a.iter().zip(b).map(|(x, y)| *x as i64 * *y as i64).sum()
}

/// Weyl dimension formula `prod (lambda + rho, alpha) / (rho, alpha)`.
pub fn weyl_dimension(system: RootSystemId, weight: &[i32]) -> Result<Rational, ReptheoryError> {
    let w = normalize_weight(system, weight)?;
    let rho = system.rho();
    let shifted: Vec<i32> = w.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut out = Rational::one();
    for alpha in system.positive_roots() {
        let den = dot(&rho, &alpha);
        debug_assert!(!den.is_zero());
        out *= rat(dot(&shifted, &alpha), den);
    }
    Ok(out)
}
