//! Exact arithmetic substrate: canonical rationals, the quadratic extensions
//! `Q(sqrt(d))` that carry every identity check, and a fixed-point decimal type
//! used only for rendering witness coordinates.

mod fixed;
mod quadext;
mod rat;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed};
use thiserror::Error;

pub use fixed::Fixed;
pub use quadext::QuadExt;
pub use rat::{exact_isqrt, is_rational_square, Rat};

use crate::numtheory::{factorize, FactorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("invalid quadratic-field literal `{0}`")]
    InvalidQuadExt(String),
    #[error("radicand {0} is not a square-free integer >= 2")]
    InvalidRadicand(BigInt),
    #[error("radicand mismatch: sqrt({0}) vs sqrt({1})")]
    RadicandMismatch(BigInt, BigInt),
    #[error("square root of a negative number")]
    NegativeRadicand,
    #[error(transparent)]
    Factor(#[from] FactorError),
}

/// Splits `n >= 1` as `n = s^2 * q` with `q` square-free.
pub fn squarefree_decompose(n: &BigUint) -> Result<(BigUint, BigUint), FactorError> {
    let mut s = BigUint::one();
    let mut q = BigUint::one();
    if n.is_one() {
        return Ok((s, q));
    }
    for (p, e) in factorize(n)?.iter() {
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            q *= p;
        }
    }
    Ok((s, q))
}

pub fn is_squarefree(n: &BigInt) -> Result<bool, ExactError> {
    match n.to_biguint() {
        Some(u) if u >= BigUint::one() => Ok(squarefree_decompose(&u)?.0.is_one()),
        _ => Ok(false),
    }
}

/// Writes `sqrt(r)` for `r >= 0` as `c * sqrt(k)` with rational `c >= 0` and
/// square-free integer `k >= 1`.
pub fn sqrt_form(r: &Rat) -> Result<(Rat, BigInt), ExactError> {
    if r.is_negative() {
        return Err(ExactError::NegativeRadicand);
    }
    if r.is_zero() {
        return Ok((Rat::zero(), BigInt::one()));
    }
    // n/m = n*m / m^2
    let nm = (r.numer() * r.denom()).magnitude().clone();
    let (s, k) = squarefree_decompose(&nm)?;
    let c = Rat::new(BigInt::from_biguint(Sign::Plus, s), r.denom().abs());
    Ok((c, BigInt::from_biguint(Sign::Plus, k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(n: u64) -> (u64, u64) {
        let (s, q) = squarefree_decompose(&BigUint::from(n)).unwrap();
        (s.try_into().unwrap(), q.try_into().unwrap())
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(dec(1), (1, 1));
        assert_eq!(dec(12), (2, 3));
        assert_eq!(dec(147), (7, 3));
        assert_eq!(dec(1 << 20), (1 << 10, 1));
    }

    #[test]
    fn squarefree_exhaustive_small() {
        // oracle: strip squares by trial division
        for n in 1..=100_000u64 {
            let (s, q) = dec(n);
            assert_eq!(s * s * q, n);
            let mut p = 2;
            while p * p <= q {
                assert_ne!(q % (p * p), 0, "n = {n}");
                p += 1;
            }
        }
    }

    #[test]
    fn sqrt_forms() {
        let (c, k) = sqrt_form(&Rat::from(432)).unwrap();
        assert_eq!((c, k), (Rat::from(12), BigInt::from(3)));
        let (c, k) = sqrt_form(&Rat::new(13, 4)).unwrap();
        assert_eq!((c, k), (Rat::new(1, 2), BigInt::from(13)));
        let (c, k) = sqrt_form(&Rat::new(2, 3)).unwrap();
        assert_eq!((c, k), (Rat::new(1, 3), BigInt::from(6)));
        assert!(sqrt_form(&Rat::from(-1)).is_err());
    }
}
