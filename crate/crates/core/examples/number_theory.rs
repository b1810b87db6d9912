//! Factoring, modular square roots and the form `x^2 + 3y^2`.

use equidist::exactnum::Rat;
use equidist::numtheory::{bad_prime_witness, factorize, represent_prime, sqrt_mod, three_square_admissible};
use num_bigint::{BigInt, BigUint};

fn main() {
    let n: BigUint = "600851475143".parse().unwrap();
    let f = factorize(&n).unwrap();
    println!("{n} = {:?}", f.as_slice());

    let p = BigUint::from(1_000_003u32);
    let t = sqrt_mod(&BigInt::from(-3), &p).unwrap();
    let rep = represent_prime(&p).unwrap();
    println!("sqrt(-3) mod {p} = {t}; {p} = {}^2 + 3*{}^2", rep.x(), rep.y());

    for q in [7u32, 21, 35, 130, 91] {
        match bad_prime_witness(&BigUint::from(q)).unwrap() {
            Some(bad) => println!("{q}: obstructed by {bad}"),
            None => println!("{q}: every prime is 3 or 1 mod 6"),
        }
    }

    for x in [Rat::from(7), Rat::new(7, 2), Rat::from(28), Rat::new(1, 3)] {
        println!("{x} is a sum of three rational squares: {}", three_square_admissible(&x));
    }
}
