//! Representations by the form `x^2 + 3y^2` and the related admissibility tests.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{factorize, is_prime, sqrt_mod, NumError};
use crate::exactnum::Rat;

/// Integer solution of `x^2 + 3y^2 = q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormRep {
    x: BigInt,
    y: BigInt,
    q: BigInt,
}

impl FormRep {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, NumError> {
        let (x, y, q) = (x.into(), y.into(), q.into());
        if &x * &x + BigInt::from(3) * &y * &y != q {
            return Err(NumError::InvalidRep { x, y, q });
        }
        Ok(FormRep { x, y, q })
    }

    /// `1 = 1^2 + 3*0^2`, the neutral element for composition.
    pub fn identity() -> Self {
        FormRep { x: BigInt::one(), y: BigInt::zero(), q: BigInt::one() }
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }
}

fn to_big(u: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, u.clone())
}

/// `x^2 + 3y^2 = p` for `p = 3` or a prime `p ≡ 1 (mod 6)`, with `x, y >= 0`.
///
/// Runs the Euclidean descent on `(p, t)` where `t^2 ≡ -3 (mod p)`, stopping at
/// the first remainder below `sqrt(p)`.
pub fn represent_prime(p: &BigUint) -> Result<FormRep, NumError> {
    if *p == BigUint::from(3u32) {
        return FormRep::new(0, 1, 3);
    }
    if (p % 6u32) != BigUint::one() || !is_prime(p) {
        return Err(NumError::CongruenceCondition(p.clone()));
    }
    let mut t = sqrt_mod(&BigInt::from(-3), p)?;
    if &t + &t < *p {
        t = p - &t;
    }
    let limit = p.sqrt();
    let (mut a, mut b) = (p.clone(), t);
    while b > limit {
        let r = &a % &b;
        a = b;
        b = r;
    }
    let rest = p - &b * &b;
    let (y2, rem) = rest.div_rem(&BigUint::from(3u32));
    let y = y2.sqrt();
    if !rem.is_zero() || &y * &y != y2 {
        // unreachable for primes ≡ 1 (mod 6); kept as a hard error rather than a panic
        return Err(NumError::DescentFailed(p.clone()));
    }
    FormRep::new(to_big(&b), to_big(&y), to_big(p))
}

/// Product representation from `(a^2+3b^2)(c^2+3d^2) = (ac+3bd)^2 + 3(ad-bc)^2`,
/// normalized to nonnegative coordinates.
pub fn compose_reps(r1: &FormRep, r2: &FormRep) -> FormRep {
    let x = &r1.x * &r2.x + BigInt::from(3) * &r1.y * &r2.y;
    let y = &r1.x * &r2.y - &r1.y * &r2.x;
    FormRep { x: x.abs(), y: y.abs(), q: &r1.q * &r2.q }
}

fn squarefree_primes(q: &BigUint) -> Result<Vec<BigUint>, NumError> {
    if *q < BigUint::from(2u32) {
        return Err(NumError::NotSquarefree(q.clone()));
    }
    let f = factorize(q)?;
    if !f.is_squarefree() {
        return Err(NumError::NotSquarefree(q.clone()));
    }
    Ok(f.primes().cloned().collect())
}

fn admissible_prime(p: &BigUint) -> bool {
    *p == BigUint::from(3u32) || (p % 6u32).is_one()
}

/// A prime factor of the square-free `q >= 2` that is 2 or `≡ 5 (mod 6)`, if any.
///
/// The smallest factor `≡ 5 (mod 6)` is preferred; 2 is cited only when it is
/// the sole obstruction.
pub fn bad_prime_witness(q: &BigUint) -> Result<Option<BigUint>, NumError> {
    let bad: Vec<BigUint> = squarefree_primes(q)?.into_iter().filter(|p| !admissible_prime(p)).collect();
    let two = BigUint::from(2u32);
    Ok(bad.iter().find(|p| **p != two).or(bad.first()).cloned())
}

/// Whether every prime factor of the square-free `q >= 2` is 3 or `≡ 1 (mod 6)`.
pub fn good_squarefree(q: &BigUint) -> Result<bool, NumError> {
    Ok(bad_prime_witness(q)?.is_none())
}

/// Integer `(a, b)` with `a^2 + 3b^2 = q`, composed prime by prime.
pub fn represent_q(q: &BigUint) -> Result<FormRep, NumError> {
    let mut rep = FormRep::identity();
    for p in squarefree_primes(q)? {
        if !admissible_prime(&p) {
            return Err(NumError::CongruenceCondition(p));
        }
        rep = compose_reps(&rep, &represent_prime(&p)?);
    }
    Ok(rep)
}

/// Whether a positive rational is a sum of three rational squares: false exactly
/// when `m*n` (for `x = m/n` in lowest terms) has the form `4^l (8k+7)`.
pub fn three_square_admissible(x: &Rat) -> bool {
    if x.is_negative() {
        return false;
    }
    if x.is_zero() {
        return true;
    }
    let mut mn = x.numer() * x.denom();
    let four = BigInt::from(4);
    while (&mn % &four).is_zero() {
        mn /= &four;
    }
    mn % 8 != BigInt::from(7)
}
