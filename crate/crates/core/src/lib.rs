pub mod algebra;
pub mod archimedean;
pub mod cli;
pub mod lfactors;
pub mod reptheory;
pub mod rng;
