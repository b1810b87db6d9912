//! Integer factorization: trial division to 10^6, then Miller-Rabin plus
//! Pollard-Brent rho. Composite cofactors above 2^128 are refused.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub const DEFAULT_SEED: u64 = 0x00e9_d157;

const TRIAL_LIMIT: u32 = 1_000_000;
const MAX_COFACTOR_BITS: u64 = 128;
const RHO_ATTEMPTS: u32 = 8;
const RHO_ITERS_U64: u64 = 1 << 24;
const RHO_ITERS_BIG: u64 = 1 << 20;
const MR_ROUNDS_BIG: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("cannot factor {0}: expected an integer >= 2")]
    OutOfDomain(BigUint),
    #[error("factoring budget exceeded for cofactor {0}")]
    BudgetExceeded(BigUint),
}

/// Prime factorization as `(p, e)` pairs sorted by `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn iter(&self) -> impl Iterator<Item = (&BigUint, u32)> + '_ {
        self.factors.iter().map(|(p, e)| (p, *e))
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> + '_ {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn value(&self) -> BigUint {
        self.factors.iter().map(|(p, e)| p.pow(*e)).product()
    }

    pub fn as_slice(&self) -> &[(BigUint, u32)] {
        &self.factors
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                (i * i..=n).step_by(i).for_each(|j| sieve[j] = false);
            }
            i += 1;
        }
        (0..=n).filter(|&i| sieve[i]).map(|i| i as u32).collect()
    })
}

static SEED: AtomicU64 = AtomicU64::new(DEFAULT_SEED);

/// Sets the seed used by [`factorize`] and [`is_prime`]. Factorizations do not
/// depend on it; only the randomized search path does.
pub fn set_default_seed(seed: u64) {
    SEED.store(seed, Ordering::Relaxed);
}

pub fn default_seed() -> u64 {
    SEED.load(Ordering::Relaxed)
}

pub fn factorize(n: &BigUint) -> Result<Factorization, FactorError> {
    factorize_seeded(n, default_seed())
}

/// Factorization with an explicit seed for the randomized stages.
pub fn factorize_seeded(n: &BigUint, seed: u64) -> Result<Factorization, FactorError> {
    if *n < BigUint::from(2u32) {
        return Err(FactorError::OutOfDomain(n.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: Vec<BigUint> = Vec::new();
    let mut m = n.clone();
    let mut trial_complete = true;
    for &p in small_primes() {
        let pb = BigUint::from(p);
        if &pb * &pb > m {
            trial_complete = false;
            break;
        }
        loop {
            let (q, r) = m.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            found.push(pb.clone());
            m = q;
        }
    }
    if !m.is_one() {
        let limit = BigUint::from(TRIAL_LIMIT);
        if !trial_complete || m < &limit * &limit {
            // no factor below sqrt(m) remains
            found.push(m);
        } else {
            if m.bits() > MAX_COFACTOR_BITS {
                return Err(FactorError::BudgetExceeded(m));
            }
            let mut stack = vec![m];
            while let Some(c) = stack.pop() {
                if is_prime_with(&c, &mut rng) {
                    found.push(c);
                    continue;
                }
                let f = find_factor(&c, &mut rng).ok_or_else(|| FactorError::BudgetExceeded(c.clone()))?;
                let g = &c / &f;
                stack.push(f);
                stack.push(g);
            }
        }
    }
    found.sort();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    for p in found {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { factors })
}

pub fn is_prime(n: &BigUint) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(default_seed());
    is_prime_with(n, &mut rng)
}

fn is_prime_with(n: &BigUint, rng: &mut ChaCha8Rng) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &small_primes()[..64] {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let two = BigUint::from(2u32);
    'witness: for _ in 0..MR_ROUNDS_BIG {
        let a = rng.gen_biguint_range(&two, &nm1);
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn find_factor(n: &BigUint, rng: &mut ChaCha8Rng) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    if let Some(small) = n.to_u64() {
        return (0..RHO_ATTEMPTS).find_map(|_| {
            let c = rng.gen_range(1..small);
            let x0 = rng.gen_range(0..small);
            rho_u64(small, x0, c).map(BigUint::from)
        });
    }
    (0..RHO_ATTEMPTS).find_map(|_| {
        let c = rng.gen_biguint_range(&BigUint::one(), n);
        let x0 = rng.gen_biguint_below(n);
        rho_big(n, x0, c)
    })
}

/// Brent's cycle-finding variant with batched gcds.
fn rho_u64(n: u64, x0: u64, c: u64) -> Option<u64> {
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let batch = 128u64;
    let (mut y, mut r, mut q) = (x0, 1u64, 1u64);
    let (mut x, mut ys) = (y, y);
    let mut spent = 0u64;
    let mut g = 1u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..batch.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += batch;
        }
        spent += r;
        if spent > RHO_ITERS_U64 {
            return None;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn rho_big(n: &BigUint, x0: BigUint, c: BigUint) -> Option<BigUint> {
    let f = |x: &BigUint| (x * x + &c) % n;
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let batch = 128u64;
    let (mut y, mut r, mut q) = (x0, 1u64, BigUint::one());
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut spent = 0u64;
    let mut g = BigUint::one();
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..batch.min(r - k) {
                y = f(&y);
                q = q * diff(&x, &y) % n;
            }
            g = q.gcd(n);
            k += batch;
        }
        spent += r;
        if spent > RHO_ITERS_BIG {
            return None;
        }
        r *= 2;
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}
