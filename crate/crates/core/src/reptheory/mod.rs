//! Root systems, Weyl characters and the Satake-parameter maps.

mod branching;
mod character;
mod freudenthal;
mod satake;
mod weyl;

pub use branching::{branching_u3_u2, gl3_weights, verify_branching, BranchingReport};
pub use character::{
    alternant, character_dimension, normalize_weight, specialize, weyl_character, weyl_dimension,
};
pub use freudenthal::{freudenthal_multiplicities, DEFAULT_WEIGHT_BOUND};
pub use satake::{
    exterior_square_satake, gsp4_satake_from_inert, ExteriorSquare, SatakeGL2, SatakeGL4,
    SatakeGSp4, SatakeInput,
};
pub use weyl::{weyl_group, WeylElement};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootSystemId {
    A1,
    A2,
    A3,
    C2Sim,
    D3Sim,
}

impl RootSystemId {
    pub const ALL: [RootSystemId; 5] = [
        RootSystemId::A1,
        RootSystemId::A2,
        RootSystemId::A3,
        RootSystemId::C2Sim,
        RootSystemId::D3Sim,
    ];

    /// Number of torus coordinates carried by a weight (excluding the
    /// similitude coordinate).
    pub fn rank(self) -> usize {
        match self {
            RootSystemId::A1 => 2,
            RootSystemId::A2 => 3,
            RootSystemId::A3 => 4,
            RootSystemId::C2Sim => 2,
            RootSystemId::D3Sim => 3,
        }
    }

    pub fn has_similitude(self) -> bool {
        matches!(self, RootSystemId::C2Sim | RootSystemId::D3Sim)
    }

    /// Names of the generic torus coordinates. `GL_n` uses `x1..xn`; the
    /// similitude groups use `y1..yr` and `nu`.
    pub fn torus_vars(self) -> Vec<String> {
        let r = self.rank();
        if self.has_similitude() {
            let mut v: Vec<String> = (1..=r).map(|i| format!("y{i}")).collect();
            v.push("nu".to_string());
            v
        } else {
            (1..=r).map(|i| format!("x{i}")).collect()
        }
    }

    /// Coordinate names, one per weight entry.
    pub fn coordinate_vars(self) -> Vec<String> {
        let prefix = if self.has_similitude() { "y" } else { "x" };
        (1..=self.rank()).map(|i| format!("{prefix}{i}")).collect()
    }

    /// Shift vector used in the alternant quotient.
    pub fn rho(self) -> Vec<i32> {
        match self {
            RootSystemId::C2Sim => vec![2, 1],
            RootSystemId::D3Sim => vec![2, 1, 0],
            _ => {
                let n = self.rank() as i32;
                (0..n).map(|i| n - 1 - i).collect()
            }
        }
    }

    /// Positive roots in the coordinate basis.
    pub fn positive_roots(self) -> Vec<Vec<i32>> {
        let r = self.rank();
        let unit = |i: usize, s: i32, j: usize, t: i32| {
            let mut v = vec![0; r];
            v[i] += s;
            v[j] += t;
            v
        };
        let mut out = Vec::new();
        match self {
            RootSystemId::C2Sim => {
                out.push(unit(0, 1, 1, -1));
                out.push(unit(0, 1, 1, 1));
                out.push(vec![2, 0]);
                out.push(vec![0, 2]);
            }
            RootSystemId::D3Sim => {
                for i in 0..r {
                    for j in i + 1..r {
                        out.push(unit(i, 1, j, -1));
                        out.push(unit(i, 1, j, 1));
                    }
                }
            }
            _ => {
                for i in 0..r {
                    for j in i + 1..r {
                        out.push(unit(i, 1, j, -1));
                    }
                }
            }
        }
        out
    }

    pub fn simple_roots(self) -> Vec<Vec<i32>> {
        match self {
            RootSystemId::C2Sim => vec![vec![1, -1], vec![0, 2]],
            RootSystemId::D3Sim => vec![vec![1, -1, 0], vec![0, 1, -1], vec![0, 1, 1]],
            _ => {
                let r = self.rank();
                (0..r - 1)
                    .map(|i| {
                        let mut v = vec![0; r];
                        v[i] = 1;
                        v[i + 1] = -1;
                        v
                    })
                    .collect()
            }
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> usize {
        match self {
            RootSystemId::A1 => 2,
            RootSystemId::A2 => 6,
            RootSystemId::A3 => 24,
            RootSystemId::C2Sim => 8,
            RootSystemId::D3Sim => 24,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RootSystemId::A1 => "A1",
            RootSystemId::A2 => "A2",
            RootSystemId::A3 => "A3",
            RootSystemId::C2Sim => "C2sim",
            RootSystemId::D3Sim => "D3sim",
        }
    }
}

impl std::fmt::Display for RootSystemId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReptheoryError {
    #[error("weight {weight:?} is not dominant for {system}")]
    NotDominant {
        system: RootSystemId,
        weight: Vec<i32>,
    },
    #[error("weight {weight:?} is not supported for {system}: {reason}")]
    UnsupportedWeight {
        system: RootSystemId,
        weight: Vec<i32>,
        reason: String,
    },
    #[error("weight {weight:?} exceeds the multiplicity bound {bound}")]
    BoundExceeded { weight: Vec<i32>, bound: i32 },
    #[error("invalid Satake data: {0}")]
    InvalidSatake(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
