use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::{is_squarefree, sqrt_form, ExactError, Fixed, Rat};

/// Exact element `a + b*sqrt(d)` of a real quadratic field.
///
/// `d` is square-free and at least 2 whenever `b != 0`; values with `b == 0`
/// always carry `d == 1`, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadExt {
    a: Rat,
    b: Rat,
    d: BigInt,
}

impl QuadExt {
    /// Validated constructor. `d == 1` folds `b` into the rational part.
    pub fn new(a: Rat, b: Rat, d: impl Into<BigInt>) -> Result<Self, ExactError> {
        let d = d.into();
        if b.is_zero() || d.is_one() {
            return Ok(QuadExt::rational(a + b));
        }
        if d < BigInt::from(2) {
            return Err(ExactError::InvalidRadicand(d));
        }
        if !is_squarefree(&d)? {
            return Err(ExactError::InvalidRadicand(d));
        }
        Ok(QuadExt { a, b, d })
    }

    pub fn rational(a: Rat) -> Self {
        QuadExt { a, b: Rat::zero(), d: BigInt::one() }
    }

    pub fn zero() -> Self {
        QuadExt::rational(Rat::zero())
    }

    /// `sqrt(r)` for a rational `r >= 0`, canonicalized to `c*sqrt(k)`.
    pub fn sqrt_of(r: &Rat) -> Result<Self, ExactError> {
        let (c, k) = sqrt_form(r)?;
        Ok(if k.is_one() { QuadExt::rational(c) } else { QuadExt { a: Rat::zero(), b: c, d: k } })
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn common_radicand(&self, other: &QuadExt) -> Result<BigInt, ExactError> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => Ok(other.d.clone()),
            (false, true) => Ok(self.d.clone()),
            (false, false) if self.d == other.d => Ok(self.d.clone()),
            _ => Err(ExactError::RadicandMismatch(self.d.clone(), other.d.clone())),
        }
    }

    fn build(a: Rat, b: Rat, d: BigInt) -> Self {
        if b.is_zero() {
            QuadExt::rational(a)
        } else {
            QuadExt { a, b, d }
        }
    }

    pub fn add(&self, other: &QuadExt) -> Result<QuadExt, ExactError> {
        let d = self.common_radicand(other)?;
        Ok(Self::build(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn sub(&self, other: &QuadExt) -> Result<QuadExt, ExactError> {
        let d = self.common_radicand(other)?;
        Ok(Self::build(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn mul(&self, other: &QuadExt) -> Result<QuadExt, ExactError> {
        let d = self.common_radicand(other)?;
        let dr = Rat::from_integer(d.clone());
        let a = &self.a * &other.a + &self.b * &other.b * &dr;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::build(a, b, d))
    }

    pub fn square(&self) -> QuadExt {
        self.mul(self).expect("same radicand")
    }

    pub fn neg(&self) -> QuadExt {
        Self::build(-&self.a, -&self.b, self.d.clone())
    }

    pub fn scale(&self, k: &Rat) -> QuadExt {
        Self::build(&self.a * k, &self.b * k, self.d.clone())
    }

    pub fn add_rat(&self, k: &Rat) -> QuadExt {
        Self::build(&self.a + k, self.b.clone(), self.d.clone())
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn conjugate(&self) -> QuadExt {
        Self::build(self.a.clone(), -&self.b, self.d.clone())
    }

    /// Field norm `a^2 - d*b^2`.
    pub fn norm(&self) -> Rat {
        self.a.square() - self.b.square() * Rat::from_integer(self.d.clone())
    }

    pub fn recip(&self) -> Result<QuadExt, ExactError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self.conjugate().scale(&n.recip()?))
    }

    pub fn div(&self, other: &QuadExt) -> Result<QuadExt, ExactError> {
        self.mul(&other.recip()?)
    }

    /// Exact sign by comparing `a^2` with `b^2 d`; never touches floating point.
    pub fn sign(&self) -> Ordering {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 {
            return sa.cmp(&0);
        }
        if sa == 0 || sa == sb {
            return sb.cmp(&0);
        }
        let lhs = self.a.square();
        let rhs = self.b.square() * Rat::from_integer(self.d.clone());
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa.cmp(&0),
            Ordering::Less => sb.cmp(&0),
            // a^2 = b^2 d is impossible for square-free d >= 2 and b != 0
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    /// Decimal approximation truncated to `digits` fractional digits.
    /// The absolute error is below `(|b| + 2) * 10^-digits`.
    pub fn approx(&self, digits: u32) -> Fixed {
        let a = Fixed::from_rat(&self.a, digits);
        if self.is_rational() {
            return a;
        }
        let root = Fixed::sqrt_rat(&Rat::from_integer(self.d.clone()), digits);
        a.add(&Fixed::from_rat(&self.b, digits).mul(&root))
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let op = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}*sqrt({})", self.a, op, self.b.abs(), self.d)
    }
}

impl FromStr for QuadExt {
    type Err = ExactError;

    /// Parses the `Display` form `A + B*sqrt(D)` (or a bare rational).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactError::InvalidQuadExt(s.to_string());
        let t = s.trim();
        let Some(body) = t.strip_suffix(')') else {
            return Ok(QuadExt::rational(t.parse().map_err(|_| bad())?));
        };
        let (head, d) = body.rsplit_once("*sqrt(").ok_or_else(bad)?;
        // split at the last binary operator, skipping a leading sign on A
        let pos = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(bad)?;
        let a: Rat = head[..pos].parse().map_err(|_| bad())?;
        let mut b: Rat = head[pos + 1..].parse().map_err(|_| bad())?;
        if &head[pos..=pos] == "-" {
            b = -b;
        }
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        QuadExt::new(a, b, d)
    }
}
