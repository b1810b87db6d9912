//! Independent re-checking of certificates.
//!
//! Nothing here calls the classifier: every claim is re-derived from the
//! evidence and the side length alone.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{biquadratic_filters, fundamental_relation_holds, lemma2_parameters};
use super::{Certificate, Evidence, Filter, SurdEvidence, TriangleEvidence};
use crate::exactnum::{QuadExt, Rat};
use crate::numtheory::is_prime;
use crate::theta::ThetaClass;
use crate::triangles::TriangleError;

/// First failing check of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("evidence does not match the side length: {0}")]
    ThetaMismatch(&'static str),
    #[error("vertex distances are not (0, theta, theta)")]
    VertexDistances,
    #[error("a^2 + 3b^2 != q")]
    FormRepresentation,
    #[error("representation has b = 0")]
    ZeroB,
    #[error("e = 0")]
    ZeroE,
    #[error("(a+e)^2 + 3(b+e)^2 != q r^2")]
    SecondIdentity,
    #[error("(a-e)^2 + 3(b+e)^2 != q s^2")]
    ThirdIdentity,
    #[error("e, r, s are not the parameters derived from a, b")]
    Parameters,
    #[error("distances disagree with the construction")]
    DistanceMismatch,
    #[error("distance is not positive")]
    NonPositiveDistance,
    #[error("fundamental relation failed")]
    RelationFails,
    #[error("invalid triangle: {0}")]
    Triangle(#[from] TriangleError),
    #[error("triangle radical is rational")]
    RationalRadical,
    #[error("lambda is not positive")]
    NonPositiveLambda,
    #[error("sign does not match the side length")]
    SignMismatch,
    #[error("2 lambda^2 theta^2 != s1 ± sqrt(3 * 16 Delta^2)")]
    TriangleIdentity,
    #[error("cited prime is missing")]
    MissingPrime,
    #[error("cited prime {0} is not prime")]
    NotPrime(BigInt),
    #[error("cited prime {0} does not divide q")]
    PrimeDoesNotDivide(BigInt),
    #[error("cited prime {0} is neither 2 nor 5 mod 6")]
    PrimeCongruence(BigInt),
    #[error("a prime is cited for a non-arithmetic reason")]
    UnexpectedPrime,
    #[error("recorded failed filters do not match: expected {expected}")]
    FilterMismatch { expected: String },
    #[error("reason is not the first failed filter")]
    ReasonMismatch,
    #[error("search bound must be at least 1")]
    ZeroBound,
}

fn codes(fs: &[Filter]) -> String {
    if fs.is_empty() {
        return "none".to_string();
    }
    fs.iter().map(|f| f.code()).collect::<Vec<_>>().join(",")
}

/// Re-checks a certificate, returning the first failing check.
pub fn verify_certificate(cert: &Certificate) -> Result<(), VerifyError> {
    match &cert.evidence {
        Evidence::Vertex { distances } => verify_vertex(&cert.theta, distances),
        Evidence::Surd(s) => verify_surd(&cert.theta, s),
        Evidence::Triangle(t) => verify_triangle(&cert.theta, t),
        Evidence::Rejected { reason, prime, failed } => verify_rejected(&cert.theta, *reason, prime.as_ref(), failed),
        Evidence::Exhausted { bound } => verify_exhausted(&cert.theta, *bound),
    }
}

fn verify_vertex(theta: &ThetaClass, d: &[Rat; 3]) -> Result<(), VerifyError> {
    let ThetaClass::RationalSide { lambda } = theta else {
        return Err(VerifyError::ThetaMismatch("vertex witness needs a rational side"));
    };
    if !d[0].is_zero() || d[1] != *lambda || d[2] != *lambda {
        return Err(VerifyError::VertexDistances);
    }
    if !fundamental_relation_holds(&d[0], &d[1], &d[2], &QuadExt::rational(lambda.square())) {
        return Err(VerifyError::RelationFails);
    }
    Ok(())
}

fn check_positive(d: &[Rat; 3]) -> Result<(), VerifyError> {
    if d.iter().all(Rat::is_positive) {
        Ok(())
    } else {
        Err(VerifyError::NonPositiveDistance)
    }
}

fn verify_surd(theta: &ThetaClass, ev: &SurdEvidence) -> Result<(), VerifyError> {
    let ThetaClass::QuadSurd { lambda, q } = theta else {
        return Err(VerifyError::ThetaMismatch("form representation needs theta = lambda sqrt(q)"));
    };
    let a = Rat::from_integer(ev.a.clone());
    let b = Rat::from_integer(ev.b.clone());
    let qr = Rat::from_integer(q.clone());
    let three = Rat::from(3);
    if &ev.a * &ev.a + BigInt::from(3) * &ev.b * &ev.b != *q {
        return Err(VerifyError::FormRepresentation);
    }
    if b.is_zero() {
        return Err(VerifyError::ZeroB);
    }
    if ev.e.is_zero() {
        return Err(VerifyError::ZeroE);
    }
    let be = (&b + &ev.e).square();
    if (&a + &ev.e).square() + &three * &be != &qr * &ev.r.square() {
        return Err(VerifyError::SecondIdentity);
    }
    if (&a - &ev.e).square() + &three * &be != &qr * &ev.s.square() {
        return Err(VerifyError::ThirdIdentity);
    }
    let (e, r, s) = lemma2_parameters(&a, &b, &qr).map_err(|_| VerifyError::ZeroB)?;
    if (e, r, s) != (ev.e.clone(), ev.r.clone(), ev.s.clone()) {
        return Err(VerifyError::Parameters);
    }
    check_positive(&ev.distances)?;
    let d = &ev.distances;
    if !fundamental_relation_holds(&d[0], &d[1], &d[2], &QuadExt::rational(lambda.square() * &qr)) {
        return Err(VerifyError::RelationFails);
    }
    let unit = lambda * &qr / (Rat::from(2) * ev.e.abs());
    let expected = [unit.clone(), &unit * &ev.r.abs(), &unit * &ev.s.abs()];
    if expected != ev.distances {
        return Err(VerifyError::DistanceMismatch);
    }
    Ok(())
}

fn verify_triangle(theta: &ThetaClass, ev: &TriangleEvidence) -> Result<(), VerifyError> {
    let ThetaClass::Biquadratic { sign, .. } = theta else {
        return Err(VerifyError::ThetaMismatch("triangle evidence needs a biquadratic side"));
    };
    let t = ev.triangle()?;
    if t.has_rational_radical() {
        return Err(VerifyError::RationalRadical);
    }
    if !ev.lambda.is_positive() {
        return Err(VerifyError::NonPositiveLambda);
    }
    if ev.sign != *sign {
        return Err(VerifyError::SignMismatch);
    }
    let theta_sq = theta.theta_squared().ok_or(VerifyError::ThetaMismatch("no quadratic square"))?;
    let lambda_sq = ev.lambda.square();
    let scaled = theta_sq.scale(&(Rat::from(2) * &lambda_sq));
    let radical = QuadExt::sqrt_of(&Rat::from_integer(BigInt::from(t.sixteen_delta_sq()) * 3u32))
        .map_err(|_| VerifyError::TriangleIdentity)?
        .scale(&sign.factor());
    if scaled != radical.add_rat(&Rat::from_integer(BigInt::from(t.s1()))) {
        return Err(VerifyError::TriangleIdentity);
    }
    let sides = t.sides().map(|s| Rat::from_integer(BigInt::from(s)));
    if !fundamental_relation_holds(&sides[0], &sides[1], &sides[2], &theta_sq.scale(&lambda_sq)) {
        return Err(VerifyError::RelationFails);
    }
    check_positive(&ev.distances)?;
    let d = &ev.distances;
    if !fundamental_relation_holds(&d[0], &d[1], &d[2], &theta_sq) {
        return Err(VerifyError::RelationFails);
    }
    if sides.iter().zip(&ev.distances).any(|(s, d)| *d != s / &ev.lambda) {
        return Err(VerifyError::DistanceMismatch);
    }
    Ok(())
}

fn verify_prime(q: &BigInt, p: &BigInt) -> Result<(), VerifyError> {
    let pu = p.to_biguint().filter(|u| !u.is_zero() && !u.is_one());
    if !pu.as_ref().is_some_and(is_prime) {
        return Err(VerifyError::NotPrime(p.clone()));
    }
    if !q.is_multiple_of(p) {
        return Err(VerifyError::PrimeDoesNotDivide(p.clone()));
    }
    let r = pu.map(|u| u % BigUint::from(6u32)).unwrap_or_default();
    if *p != BigInt::from(2) && r != BigUint::from(5u32) {
        return Err(VerifyError::PrimeCongruence(p.clone()));
    }
    Ok(())
}

fn verify_rejected(
    theta: &ThetaClass,
    reason: Filter,
    prime: Option<&BigInt>,
    failed: &[Filter],
) -> Result<(), VerifyError> {
    let expected = match theta {
        ThetaClass::RationalSide { .. } => return Err(VerifyError::ThetaMismatch("rational sides are always good")),
        ThetaClass::QuadSurd { q, .. } => {
            verify_prime(q, prime.ok_or(VerifyError::MissingPrime)?)?;
            vec![Filter::BadPrime]
        }
        ThetaClass::NonBiquadratic(_) => vec![Filter::NonBiquadraticForm],
        ThetaClass::Biquadratic { alpha, beta, .. } => biquadratic_filters(alpha, beta),
    };
    if prime.is_some() && !matches!(theta, ThetaClass::QuadSurd { .. }) {
        return Err(VerifyError::UnexpectedPrime);
    }
    if expected.is_empty() || expected != failed {
        return Err(VerifyError::FilterMismatch { expected: codes(&expected) });
    }
    if failed[0] != reason {
        return Err(VerifyError::ReasonMismatch);
    }
    Ok(())
}

/// Only well-formedness can be checked: the side passes every filter and the
/// bound is meaningful. The search itself is not re-run.
fn verify_exhausted(theta: &ThetaClass, bound: u64) -> Result<(), VerifyError> {
    let ThetaClass::Biquadratic { alpha, beta, .. } = theta else {
        return Err(VerifyError::ThetaMismatch("only biquadratic sides can be undecided"));
    };
    let failed = biquadratic_filters(alpha, beta);
    if !failed.is_empty() {
        return Err(VerifyError::FilterMismatch { expected: codes(&failed) });
    }
    if bound == 0 {
        return Err(VerifyError::ZeroBound);
    }
    Ok(())
}
