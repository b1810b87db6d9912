use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::rat::floor;
use super::Rat;

/// Fixed-point decimal `mant / 10^digits`. Every operation rounds toward
/// negative infinity, so each step contributes at most one unit in the last place.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fixed {
    mant: BigInt,
    digits: u32,
}

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

impl Fixed {
    pub fn from_rat(x: &Rat, digits: u32) -> Fixed {
        let scaled = x * &Rat::from_integer(pow10(digits));
        Fixed { mant: floor(&scaled), digits }
    }

    /// `sqrt(x)` for `x >= 0`. Panics on a negative argument.
    pub fn sqrt_rat(x: &Rat, digits: u32) -> Fixed {
        assert!(!x.is_negative(), "square root of a negative rational");
        let scaled = floor(&(x * &Rat::from_integer(pow10(2 * digits))));
        Fixed { mant: scaled.sqrt(), digits }
    }

    pub fn zero(digits: u32) -> Fixed {
        Fixed { mant: BigInt::zero(), digits }
    }

    /// `10^-k` at the given precision.
    pub fn pow10_neg(k: u32, digits: u32) -> Fixed {
        assert!(k <= digits);
        Fixed { mant: pow10(digits - k), digits }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn add(&self, o: &Fixed) -> Fixed {
        assert_eq!(self.digits, o.digits);
        Fixed { mant: &self.mant + &o.mant, digits: self.digits }
    }

    pub fn sub(&self, o: &Fixed) -> Fixed {
        assert_eq!(self.digits, o.digits);
        Fixed { mant: &self.mant - &o.mant, digits: self.digits }
    }

    pub fn mul(&self, o: &Fixed) -> Fixed {
        assert_eq!(self.digits, o.digits);
        Fixed { mant: (&self.mant * &o.mant).div_floor(&pow10(self.digits)), digits: self.digits }
    }

    pub fn mul_rat(&self, r: &Rat) -> Fixed {
        let num = &self.mant * r.numer();
        Fixed { mant: num.div_floor(r.denom()), digits: self.digits }
    }

    pub fn div(&self, o: &Fixed) -> Fixed {
        assert_eq!(self.digits, o.digits);
        assert!(!o.mant.is_zero(), "fixed-point division by zero");
        Fixed { mant: (&self.mant * pow10(self.digits)).div_floor(&o.mant), digits: self.digits }
    }

    pub fn neg(&self) -> Fixed {
        Fixed { mant: -&self.mant, digits: self.digits }
    }

    pub fn abs(&self) -> Fixed {
        Fixed { mant: self.mant.abs(), digits: self.digits }
    }

    /// Square root, clamping tiny negative rounding noise to zero.
    pub fn sqrt(&self) -> Fixed {
        if self.mant.is_negative() {
            return Fixed::zero(self.digits);
        }
        Fixed { mant: (&self.mant * pow10(self.digits)).sqrt(), digits: self.digits }
    }

    /// Re-expresses at a lower precision by truncation toward negative infinity.
    pub fn truncate(&self, digits: u32) -> Fixed {
        if digits >= self.digits {
            return Fixed { mant: &self.mant * pow10(digits - self.digits), digits };
        }
        Fixed { mant: self.mant.div_floor(&pow10(self.digits - digits)), digits }
    }

    /// Re-expresses at a lower precision, rounding half up; the rounding error is
    /// at most half a unit in the new last place.
    pub fn round(&self, digits: u32) -> Fixed {
        if digits >= self.digits {
            return self.truncate(digits);
        }
        let unit = pow10(self.digits - digits);
        let half: BigInt = &unit / 2;
        Fixed { mant: (&self.mant + half).div_floor(&unit), digits }
    }

    /// Whether `|self| <= 10^-k`.
    pub fn abs_at_most_pow10_neg(&self, k: u32) -> bool {
        if k > self.digits {
            return self.mant.is_zero();
        }
        self.mant.abs() <= pow10(self.digits - k)
    }

    /// Exact rational value of the stored mantissa.
    pub fn to_rat(&self) -> Rat {
        Rat::new(self.mant.clone(), pow10(self.digits))
    }

    pub fn to_f64(&self) -> f64 {
        self.to_string_digits(17.min(self.digits)).parse().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with exactly `shown` fractional digits (truncated toward zero).
    pub fn to_string_digits(&self, shown: u32) -> String {
        let shown = shown.min(self.digits);
        let abs = self.mant.abs();
        let cut = abs / pow10(self.digits - shown);
        let (int, frac) = cut.div_rem(&pow10(shown));
        let sign = if self.mant.is_negative() && !cut.is_zero() { "-" } else { "" };
        if shown == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac:0>width$}", width = shown as usize)
        }
    }
}

impl PartialOrd for Fixed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.digits == other.digits).then(|| self.mant.cmp(&other.mant))
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_digits(self.digits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two_digits() {
        let r = Fixed::sqrt_rat(&Rat::from(2), 30);
        assert_eq!(r.to_string(), "1.414213562373095048801688724209");
    }

    #[test]
    fn rendering() {
        let x = Fixed::from_rat(&Rat::new(-1, 2), 5);
        assert_eq!(x.to_string(), "-0.50000");
        assert_eq!(x.to_string_digits(1), "-0.5");
        assert_eq!(Fixed::from_rat(&Rat::from(3), 2).to_string_digits(0), "3");
        assert_eq!(Fixed::from_rat(&Rat::new(1, 3), 4).to_string(), "0.3333");
    }

    #[test]
    fn arithmetic() {
        let a = Fixed::from_rat(&Rat::new(3, 2), 10);
        let b = Fixed::from_rat(&Rat::from(4), 10);
        assert_eq!(a.mul(&b).to_rat(), Rat::from(6));
        assert_eq!(b.div(&a).to_string(), "2.6666666666");
        assert_eq!(b.sqrt().to_rat(), Rat::from(2));
        assert!(a.sub(&a).abs_at_most_pow10_neg(10));
        assert!(!Fixed::pow10_neg(3, 10).abs_at_most_pow10_neg(4));
    }
}
