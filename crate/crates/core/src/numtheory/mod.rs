//! Integer machinery: factoring, quadratic residues, and the form `x^2 + 3y^2`.

mod factor;
mod forms;
mod modular;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

pub use factor::{
    default_seed, factorize, factorize_seeded, is_prime, is_prime_u64, set_default_seed, FactorError, Factorization,
    DEFAULT_SEED,
};
pub use forms::{
    bad_prime_witness, compose_reps, good_squarefree, represent_prime, represent_q, three_square_admissible, FormRep,
};
pub use modular::{legendre, sqrt_mod};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(BigUint),
    #[error("{a} is not a quadratic residue modulo {p}")]
    NonResidue { a: BigUint, p: BigUint },
    #[error("{0} is neither 3 nor a prime congruent to 1 mod 6")]
    CongruenceCondition(BigUint),
    #[error("{0} is not a square-free integer >= 2")]
    NotSquarefree(BigUint),
    #[error("{x}^2 + 3*{y}^2 != {q}")]
    InvalidRep { x: BigInt, y: BigInt, q: BigInt },
    #[error("descent failed to represent {0}")]
    DescentFailed(BigUint),
    #[error(transparent)]
    Factor(#[from] FactorError),
}
