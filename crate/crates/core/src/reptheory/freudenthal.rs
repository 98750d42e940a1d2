use std::collections::{BTreeMap, BTreeSet};

use num_traits::{ToPrimitive, Zero};

use crate::algebra::{rat, Rational};

use super::{normalize_weight, ReptheoryError, RootSystemId};

/// Largest absolute weight entry accepted by [`freudenthal_multiplicities`]
/// when no other bound is given.
pub const DEFAULT_WEIGHT_BOUND: i32 = 8;

fn dot(a: &[i32], b: &[i32]) -> i64 {
    a.iter().zip(b).map(|(x, y)| *x as i64 * *y as i64).sum()
}

fn add(a: &[i32], b: &[i32], k: i32) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + k * y).collect()
}

/// Weight multiplicities of the irreducible module of highest weight
/// `weight`, by Freudenthal's recursion. Weights are processed level by
/// level below the highest weight, so every multiplicity on the right-hand
/// side is final when it is read.
pub fn freudenthal_multiplicities(
    system: RootSystemId,
    weight: &[i32],
    bound: i32,
) -> Result<BTreeMap<Vec<i32>, u64>, ReptheoryError> {
    let lambda = normalize_weight(system, weight)?;
    if lambda.iter().any(|x| x.abs() > bound) {
        return Err(ReptheoryError::BoundExceeded {
            weight: weight.to_vec(),
            bound,
        });
    }
    let (lo, hi) = if system.has_similitude() {
        (-lambda[0], lambda[0])
    } else {
        (*lambda.last().unwrap(), lambda[0])
    };
    let inside = |mu: &[i32]| mu.iter().all(|x| (lo..=hi).contains(x));

    let rho = system.rho();
    let positive = system.positive_roots();
    let simple = system.simple_roots();
    let lr = add(&lambda, &rho, 1);
    let top = dot(&lr, &lr);

    let mut mult: BTreeMap<Vec<i32>, Rational> = BTreeMap::new();
    mult.insert(lambda.clone(), rat(1, 1));
    let mut level: BTreeSet<Vec<i32>> = BTreeSet::from([lambda.clone()]);
    while !level.is_empty() {
        let candidates: BTreeSet<Vec<i32>> = level
            .iter()
            .flat_map(|mu| simple.iter().map(move |a| add(mu, a, -1)))
            .filter(|mu| inside(mu))
            .collect();
        let mut next = BTreeSet::new();
        for mu in candidates {
            let mr = add(&mu, &rho, 1);
            let den = top - dot(&mr, &mr);
            if den <= 0 {
                continue;
            }
            let mut num = Rational::zero();
            for alpha in &positive {
                let mut k = 1;
                loop {
                    let up = add(&mu, alpha, k);
                    if !inside(&up) {
                        break;
                    }
                    if let Some(m) = mult.get(&up) {
                        num += m * rat(dot(&up, alpha), 1);
                    }
                    k += 1;
                }
            }
            let m = num * rat(2, den);
            if !m.is_zero() {
                mult.insert(mu.clone(), m);
                next.insert(mu);
            }
        }
        level = next;
    }
    Ok(mult
        .into_iter()
        .map(|(k, v)| {
            assert!(v.is_integer(), "non-integral multiplicity {v} at {k:?}");
            (k, v.to_integer().to_u64().expect("multiplicity fits"))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn total(m: &BTreeMap<Vec<i32>, u64>) -> u64 {
        m.values().sum()
    }

    #[test]
    fn gsp4_standard_weights() {
        let m = freudenthal_multiplicities(RootSystemId::C2Sim, &[1, 0], 8).unwrap();
        let expected: BTreeMap<Vec<i32>, u64> = [
            (vec![1, 0], 1),
            (vec![-1, 0], 1),
            (vec![0, 1], 1),
            (vec![0, -1], 1),
        ]
        .into();
        assert_eq!(m, expected);
    }

    #[test]
    fn gsp4_five_dimensional() {
        let m = freudenthal_multiplicities(RootSystemId::C2Sim, &[1, 1], 8).unwrap();
        assert_eq!(m.get(&vec![0, 0]), Some(&1));
        assert_eq!(m.len(), 5);
        assert_eq!(total(&m), 5);
    }

    #[test]
    fn gl3_standard() {
        let m = freudenthal_multiplicities(RootSystemId::A2, &[1, 0, 0], 8).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.values().all(|v| *v == 1));
    }

    #[test]
    fn adjoint_zero_weight() {
        let m = freudenthal_multiplicities(RootSystemId::A2, &[1, 0, -1], 8).unwrap();
        assert_eq!(m.get(&vec![0, 0, 0]), Some(&2));
        assert_eq!(total(&m), 8);
        let m = freudenthal_multiplicities(RootSystemId::D3Sim, &[1, 1, 0], 8).unwrap();
        assert_eq!(m.get(&vec![0, 0, 0]), Some(&3));
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            freudenthal_multiplicities(RootSystemId::A1, &[9, 0], 8),
            Err(ReptheoryError::BoundExceeded { .. })
        ));
    }
}
