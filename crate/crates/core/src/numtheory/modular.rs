use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{is_prime, NumError};

fn reduce(a: &BigInt, p: &BigUint) -> BigUint {
    let p = BigInt::from_biguint(Sign::Plus, p.clone());
    a.mod_floor(&p).magnitude().clone()
}

fn check_odd_prime(p: &BigUint) -> Result<(), NumError> {
    if p.is_even() || !is_prime(p) {
        return Err(NumError::NotOddPrime(p.clone()));
    }
    Ok(())
}

/// Legendre symbol `(a/p)` for an odd prime `p`, via Euler's criterion.
pub fn legendre(a: &BigInt, p: &BigUint) -> Result<i8, NumError> {
    check_odd_prime(p)?;
    Ok(legendre_unchecked(&reduce(a, p), p))
}

fn legendre_unchecked(a: &BigUint, p: &BigUint) -> i8 {
    if a.is_zero() {
        return 0;
    }
    let e = (p - 1u32) >> 1;
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// Tonelli-Shanks square root of a quadratic residue modulo an odd prime;
/// returns a root in `(0, p)`.
pub fn sqrt_mod(a: &BigInt, p: &BigUint) -> Result<BigUint, NumError> {
    check_odd_prime(p)?;
    let a = reduce(a, p);
    if legendre_unchecked(&a, p) != 1 {
        return Err(NumError::NonResidue { a: a.clone(), p: p.clone() });
    }
    let one = BigUint::one();
    let pm1 = p - &one;
    if (p % 4u32) == BigUint::from(3u32) {
        return Ok(a.modpow(&((p + &one) >> 2), p));
    }
    let s = pm1.trailing_zeros().expect("p - 1 > 0");
    let q = &pm1 >> s;
    // smallest non-residue keeps the output deterministic
    let mut z = BigUint::from(2u32);
    while legendre_unchecked(&z, p) != -1 {
        z += 1u32;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + &one) >> 1), p);
    while !t.is_one() {
        let mut i = 0;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = &t2 * &t2 % p;
            i += 1;
        }
        let b = c.modpow(&(BigUint::one() << (m - i - 1)), p);
        m = i;
        c = &b * &b % p;
        t = t * &c % p;
        r = r * b % p;
    }
    Ok(r)
}
