use lforge::algebra::{rat, LaurentPoly};
use lforge::reptheory::{
    character_dimension, exterior_square_satake, freudenthal_multiplicities, gl3_weights,
    verify_branching, weyl_character, weyl_dimension, weyl_group, RootSystemId, SatakeGL4,
    DEFAULT_WEIGHT_BOUND,
};
use proptest::prelude::*;

fn dominant(system: RootSystemId, max: i32) -> Vec<Vec<i32>> {
    let r = system.rank();
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|w: Vec<i32>| {
                let top = w.last().copied().unwrap_or(max);
                (0..=top).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    if system == RootSystemId::D3Sim {
        let negated: Vec<Vec<i32>> = out
            .iter()
            .filter(|w| w[2] > 0)
            .map(|w| vec![w[0], w[1], -w[2]])
            .collect();
        out.extend(negated);
    }
    out
}

#[test]
fn three_dimension_counts_agree() {
    for system in RootSystemId::ALL {
        for w in dominant(system, 3) {
            let a = character_dimension(system, &w).unwrap();
            let m: u64 = freudenthal_multiplicities(system, &w, DEFAULT_WEIGHT_BOUND)
                .unwrap()
                .values()
                .sum();
            let b = rat(m as i64, 1);
            let c = weyl_dimension(system, &w).unwrap();
            assert_eq!(a, b, "{system} {w:?}");
            assert_eq!(a, c, "{system} {w:?}");
        }
    }
}

#[test]
fn character_terms_match_multiplicities() {
    for system in RootSystemId::ALL {
        for w in dominant(system, 2) {
            let chi = weyl_character(system, &w).unwrap();
            let mults = freudenthal_multiplicities(system, &w, DEFAULT_WEIGHT_BOUND).unwrap();
            let coords = system.coordinate_vars();
            let idx: Vec<usize> = coords
                .iter()
                .map(|c| chi.vars().iter().position(|v| v == c).unwrap())
                .collect();
            let mut seen = std::collections::BTreeMap::new();
            for (e, c) in chi.terms() {
                let weight: Vec<i32> = idx.iter().map(|&i| e[i]).collect();
                seen.insert(weight, c.to_integer().try_into().unwrap());
            }
            assert_eq!(seen, mults, "{system} {w:?}");
        }
    }
}

#[test]
fn characters_are_weyl_invariant() {
    for system in RootSystemId::ALL {
        for w in dominant(system, 2) {
            let chi = weyl_character(system, &w).unwrap();
            for g in weyl_group(system) {
                assert_eq!(g.act(system, &chi), *chi, "{system} {w:?}");
            }
        }
    }
}

#[test]
fn branching_small_range() {
    for w in gl3_weights(-2, 2) {
        assert!(verify_branching(&w).unwrap().pass, "{w:?}");
    }
}

proptest! {
    #[test]
    fn exterior_square_is_permutation_stable(perm in Just([0usize, 1, 2, 3]).prop_shuffle()) {
        let s = SatakeGL4::symbolic();
        let sorted = |v: Vec<LaurentPoly>| {
            let mut r: Vec<String> = v.iter().map(|p| p.render()).collect();
            r.sort();
            r
        };
        let base = exterior_square_satake(&s);
        let moved = exterior_square_satake(&s.permuted([perm[0], perm[1], perm[2], perm[3]]));
        prop_assert_eq!(sorted(base.eigenvalues.to_vec()), sorted(moved.eigenvalues.to_vec()));
        prop_assert_eq!(base.nu, moved.nu);
    }
}
