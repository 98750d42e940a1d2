use crate::algebra::LaurentPoly;

use super::RootSystemId;

/// Signed coordinate transformation.
///
/// Acting on a monomial `y^a nu^k`, coordinate `i` first has its sign flipped
/// when `flips[i]` is set (realized as `y_i -> nu / y_i`, which also adds
/// `a_i` to the similitude exponent) and is then moved to slot `perm[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub flips: Vec<bool>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            perm: (0..rank).collect(),
            flips: vec![false; rank],
        }
    }

    /// `sgn(perm) * (-1)^(number of flips)`.
    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.perm.len()];
        let mut parity = 0;
        for start in 0..self.perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i];
                len += 1;
            }
            parity += len - 1;
        }
        parity += self.flips.iter().filter(|f| **f).count();
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Image of the exponent `(a, k)`.
    pub fn apply(&self, a: &[i32], k: i32) -> (Vec<i32>, i32) {
        let mut b = vec![0; a.len()];
        let mut k = k;
        for i in 0..a.len() {
            if self.flips[i] {
                b[self.perm[i]] = -a[i];
                k += a[i];
            } else {
                b[self.perm[i]] = a[i];
            }
        }
        (b, k)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.perm.len();
        WeylElement {
            perm: (0..n).map(|i| self.perm[other.perm[i]]).collect(),
            flips: (0..n)
                .map(|i| other.flips[i] ^ self.flips[other.perm[i]])
                .collect(),
        }
    }

    /// Action on a polynomial in the system's torus variables.
    pub fn act(&self, system: RootSystemId, poly: &LaurentPoly) -> LaurentPoly {
        let names = system.torus_vars();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let poly = poly.extend_vars(&refs).expect("torus variables fit");
        let vars = poly.vars();
        let coords: Vec<usize> = system
            .coordinate_vars()
            .iter()
            .map(|v| vars.iter().position(|u| u == v).unwrap())
            .collect();
        let nu = system
            .has_similitude()
            .then(|| vars.iter().position(|u| u == "nu").unwrap());
        poly.map_exponents(|e| {
            let a: Vec<i32> = coords.iter().map(|&i| e[i]).collect();
            let k = nu.map_or(0, |i| e[i]);
            let (b, k2) = self.apply(&a, k);
            let mut out = e.to_vec();
            for (slot, x) in coords.iter().zip(&b) {
                out[*slot] = *x;
            }
            if let Some(i) = nu {
                out[i] = k2;
            }
            out
        })
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// All elements of the Weyl group in a fixed order.
pub fn weyl_group(system: RootSystemId) -> Vec<WeylElement> {
    let r = system.rank();
    let flip_sets: Vec<Vec<bool>> = match system {
        RootSystemId::C2Sim | RootSystemId::D3Sim => (0..1u32 << r)
            .map(|mask| (0..r).map(|i| mask >> i & 1 == 1).collect::<Vec<bool>>())
            .filter(|f| system != RootSystemId::D3Sim || f.iter().filter(|x| **x).count() % 2 == 0)
            .collect(),
        _ => vec![vec![false; r]],
    };
    let mut out = Vec::new();
    for perm in permutations(r) {
        for flips in &flip_sets {
            out.push(WeylElement {
                perm: perm.clone(),
                flips: flips.clone(),
            });
        }
    }
    out
}
