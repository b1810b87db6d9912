//! Primitive integral non-degenerate triangles, their exact invariants, and the
//! similarity invariant `kappa = 16 s1^2 / (16 Δ^2)` that drives the quartic search.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::Rat;

/// Largest admissible side; keeps every cached invariant inside `u128`.
pub const MAX_SIDE: u64 = 1 << 28;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("sides must be positive")]
    ZeroSide,
    #[error("degenerate triangle: {c} >= {a} + {b}")]
    Degenerate { a: u64, b: u64, c: u64 },
    #[error("non-primitive triangle: gcd({a}, {b}, {c}) = {gcd}")]
    NonPrimitive { a: u64, b: u64, c: u64, gcd: u64 },
    #[error("side exceeds {MAX_SIDE}")]
    TooLarge,
}

/// Sorted primitive triangle `a <= b <= c` with cached `s1 = a^2+b^2+c^2` and `16Δ^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u64; 3]", into = "[u64; 3]")]
pub struct PrimTriangle {
    a: u64,
    b: u64,
    c: u64,
    s1: u128,
    sixteen_delta_sq: u128,
}

/// `16Δ^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c)`; only valid for sorted, non-degenerate sides.
fn heron_product(a: u64, b: u64, c: u64) -> u128 {
    let (a, b, c) = (a as u128, b as u128, c as u128);
    (a + b + c) * (b + c - a) * (a + c - b) * (a + b - c)
}

/// `2(a^2b^2 + b^2c^2 + c^2a^2) - (a^4 + b^4 + c^4)`, for any sides up to `MAX_SIDE`.
pub fn quartic_sixteen_delta_sq(a: u64, b: u64, c: u64) -> i128 {
    let (a2, b2, c2) = ((a as i128).pow(2), (b as i128).pow(2), (c as i128).pow(2));
    2 * (a2 * b2 + b2 * c2 + c2 * a2) - (a2 * a2 + b2 * b2 + c2 * c2)
}

impl PrimTriangle {
    fn from_sorted_unchecked(a: u64, b: u64, c: u64) -> Self {
        let s1 = (a as u128).pow(2) + (b as u128).pow(2) + (c as u128).pow(2);
        PrimTriangle { a, b, c, s1, sixteen_delta_sq: heron_product(a, b, c) }
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn sides(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn s1(&self) -> u128 {
        self.s1
    }

    pub fn sixteen_delta_sq(&self) -> u128 {
        self.sixteen_delta_sq
    }

    pub fn is_equilateral(&self) -> bool {
        self.a == self.c
    }

    /// Exact `16 s1^2 / 16Δ^2`, i.e. `(a^2+b^2+c^2)^2 / Δ^2`.
    pub fn kappa(&self) -> Rat {
        let s1 = BigInt::from(self.s1);
        Rat::new(BigInt::from(16) * &s1 * &s1, BigInt::from(self.sixteen_delta_sq))
    }

    /// Whether `3 * 16Δ^2` is a perfect square, i.e. `4Δ sqrt(3)` is rational.
    pub fn has_rational_radical(&self) -> bool {
        crate::exactnum::exact_isqrt(&(BigInt::from(3) * BigInt::from(self.sixteen_delta_sq))).is_some()
    }
}

impl TryFrom<[u64; 3]> for PrimTriangle {
    type Error = TriangleError;
    fn try_from(s: [u64; 3]) -> Result<Self, Self::Error> {
        make_triangle(s[0], s[1], s[2])
    }
}

impl From<PrimTriangle> for [u64; 3] {
    fn from(t: PrimTriangle) -> Self {
        t.sides()
    }
}

/// Validates, sorts and caches invariants of an integer side triple.
pub fn make_triangle(a: u64, b: u64, c: u64) -> Result<PrimTriangle, TriangleError> {
    let mut s = [a, b, c];
    s.sort_unstable();
    let [a, b, c] = s;
    if a == 0 {
        return Err(TriangleError::ZeroSide);
    }
    if c > MAX_SIDE {
        return Err(TriangleError::TooLarge);
    }
    if c >= a + b {
        return Err(TriangleError::Degenerate { a, b, c });
    }
    let gcd = a.gcd(&b).gcd(&c);
    if gcd != 1 {
        return Err(TriangleError::NonPrimitive { a, b, c, gcd });
    }
    Ok(PrimTriangle::from_sorted_unchecked(a, b, c))
}

pub fn kappa(t: &PrimTriangle) -> Rat {
    t.kappa()
}

/// Iterator over primitive non-degenerate triangles in lexicographic `(c, b, a)` order.
#[derive(Debug, Clone)]
pub struct PrimitiveTriangles {
    c: u64,
    b: u64,
    a: u64,
    gcd_cb: u64,
    c_max: u64,
}

impl PrimitiveTriangles {
    fn new(range: RangeInclusive<u64>) -> Self {
        let c = (*range.start()).max(1);
        let c_max = (*range.end()).min(MAX_SIDE);
        let b = c / 2 + 1;
        PrimitiveTriangles { c, b, a: c - b + 1, gcd_cb: c.gcd(&b), c_max }
    }
}

impl Iterator for PrimitiveTriangles {
    type Item = PrimTriangle;

    fn next(&mut self) -> Option<PrimTriangle> {
        loop {
            if self.c > self.c_max {
                return None;
            }
            if self.a > self.b {
                self.b += 1;
                if self.b > self.c {
                    self.c += 1;
                    self.b = self.c / 2 + 1;
                }
                self.a = self.c - self.b + 1;
                self.gcd_cb = self.c.gcd(&self.b);
                continue;
            }
            let a = self.a;
            self.a += 1;
            if self.gcd_cb == 1 || self.gcd_cb.gcd(&a) == 1 {
                return Some(PrimTriangle::from_sorted_unchecked(a, self.b, self.c));
            }
        }
    }
}

pub fn enumerate_primitive(max_c: u64) -> PrimitiveTriangles {
    PrimitiveTriangles::new(1..=max_c)
}

/// Enumeration restricted to a band of longest sides, for partitioned scans.
pub fn enumerate_range(c_range: RangeInclusive<u64>) -> PrimitiveTriangles {
    PrimitiveTriangles::new(c_range)
}

/// Exact `kappa(t) == target` test with a `u128` fast path.
#[derive(Debug, Clone)]
pub struct KappaTarget {
    target: Rat,
    small: Option<(u128, u128)>,
}

impl KappaTarget {
    pub fn new(target: &Rat) -> Self {
        let small = u128::try_from(target.numer()).ok().zip(u128::try_from(target.denom()).ok());
        KappaTarget { target: target.clone(), small }
    }

    pub fn matches(&self, t: &PrimTriangle) -> bool {
        if let Some((p, q)) = self.small {
            let lhs = t.s1.checked_mul(t.s1).and_then(|x| x.checked_mul(16)).and_then(|x| x.checked_mul(q));
            let rhs = p.checked_mul(t.sixteen_delta_sq);
            if let (Some(l), Some(r)) = (lhs, rhs) {
                return l == r;
            }
        }
        t.kappa() == self.target
    }
}

/// Lazily yields enumerated triangles with `kappa == target`, in enumeration order.
pub fn kappa_matches(target: &Rat, max_c: u64) -> impl Iterator<Item = PrimTriangle> {
    // kappa >= 48 always, so smaller targets cannot match
    let max_c = if *target < Rat::from(48) { 0 } else { max_c };
    let key = KappaTarget::new(target);
    enumerate_primitive(max_c).filter(move |t| key.matches(t))
}

/// All triangles with `c <= max_c` whose kappa equals `target`.
pub fn search_by_kappa(target: &Rat, max_c: u64) -> Vec<PrimTriangle> {
    kappa_matches(target, max_c).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sides(v: &[PrimTriangle]) -> Vec<[u64; 3]> {
        v.iter().map(|t| t.sides()).collect()
    }

    #[test]
    fn construction_examples() {
        let t = make_triangle(3, 4, 5).unwrap();
        assert_eq!((t.s1(), t.sixteen_delta_sq()), (50, 576));
        let t = make_triangle(5, 6, 5).unwrap();
        assert_eq!(t.sides(), [5, 5, 6]);
        assert_eq!((t.s1(), t.sixteen_delta_sq()), (86, 2304));
        assert!(matches!(make_triangle(2, 1, 1), Err(TriangleError::Degenerate { .. })));
        assert!(matches!(make_triangle(6, 8, 10), Err(TriangleError::NonPrimitive { gcd: 2, .. })));
        assert!(matches!(make_triangle(0, 1, 1), Err(TriangleError::ZeroSide)));
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(make_triangle(3, 4, 5).unwrap().kappa(), Rat::new(625, 9));
        assert_eq!(make_triangle(5, 5, 6).unwrap().kappa(), Rat::new(1849, 36));
        assert_eq!(make_triangle(1, 1, 1).unwrap().kappa(), Rat::from(48));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(sides(&enumerate_primitive(1).collect::<Vec<_>>()), vec![[1, 1, 1]]);
        assert_eq!(sides(&enumerate_primitive(2).collect::<Vec<_>>()), vec![[1, 1, 1], [1, 2, 2]]);
        assert_eq!(enumerate_primitive(0).count(), 0);
    }

    fn brute_force(max_c: u64) -> Vec<[u64; 3]> {
        let mut out = Vec::new();
        for c in 1..=max_c {
            for b in 1..=c {
                for a in 1..=b {
                    if a + b > c && a.gcd(&b).gcd(&c) == 1 {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in [10, 20] {
            assert_eq!(sides(&enumerate_primitive(n).collect::<Vec<_>>()), brute_force(n));
        }
    }

    #[test]
    fn partitions_concatenate() {
        let whole: Vec<_> = enumerate_primitive(30).collect();
        let mut parts: Vec<_> = enumerate_range(1..=11).collect();
        parts.extend(enumerate_range(12..=30));
        assert_eq!(whole, parts);
    }

    #[test]
    fn heron_cross_check() {
        for t in enumerate_primitive(40) {
            let [a, b, c] = t.sides();
            assert_eq!(t.sixteen_delta_sq() as i128, quartic_sixteen_delta_sq(a, b, c));
        }
    }

    #[test]
    fn search_examples() {
        assert!(search_by_kappa(&Rat::new(625, 9), 60).iter().any(|t| t.sides() == [3, 4, 5]));
        assert!(search_by_kappa(&Rat::new(1849, 36), 60).iter().any(|t| t.sides() == [5, 5, 6]));
        assert!(search_by_kappa(&Rat::from(47), 60).is_empty());
        assert_eq!(sides(&search_by_kappa(&Rat::from(48), 60)), vec![[1, 1, 1]]);
    }

    #[test]
    fn kappa_fast_path_agrees_with_rational_compare() {
        let huge = Rat::new(BigInt::from(625) * BigInt::from(u128::MAX), BigInt::from(9) * BigInt::from(u128::MAX));
        assert!(KappaTarget::new(&huge).matches(&make_triangle(3, 4, 5).unwrap()));
    }

    #[test]
    fn rational_radical_detection() {
        assert!(make_triangle(1, 1, 1).unwrap().has_rational_radical());
        assert!(!make_triangle(3, 4, 5).unwrap().has_rational_radical());
    }

    #[test]
    fn serde_validates() {
        let t: PrimTriangle = serde_json::from_str("[5,3,4]").unwrap();
        assert_eq!(t.sides(), [3, 4, 5]);
        assert!(serde_json::from_str::<PrimTriangle>("[2,4,6]").is_err());
    }
}
