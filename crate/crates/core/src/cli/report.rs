//! Human-readable and JSON renderings of certificates and witness points.

use std::io::{self, Write};

use serde_json::{json, Value};

use crate::engine::{Certificate, EngineError, Evidence, WitnessPoint};
use crate::exactnum::{sqrt_form, Fixed, QuadExt, Rat};

fn join(d: &[Rat; 3]) -> String {
    format!("{}, {}, {}", d[0], d[1], d[2])
}

pub(crate) fn write_summary(cert: &Certificate, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "theta: {}", cert.theta)?;
    writeln!(out, "verdict: {}", cert.verdict().as_str())?;
    writeln!(out, "reason: {}", cert.reason_code())?;
    match &cert.evidence {
        Evidence::Vertex { .. } => writeln!(out, "witness: vertex A")?,
        Evidence::Surd(s) => {
            writeln!(out, "representation: ({})^2 + 3*({})^2", s.a, s.b)?;
            writeln!(out, "e = {}, r = {}, s = {}", s.e, s.r, s.s)?;
        }
        Evidence::Triangle(t) => {
            writeln!(out, "triangle: ({}, {}, {})", t.sides[0], t.sides[1], t.sides[2])?;
            writeln!(out, "lambda: {}", t.lambda)?;
            writeln!(out, "sign: {}", t.sign)?;
        }
        Evidence::Rejected { prime, failed, .. } => {
            if let Some(p) = prime {
                writeln!(out, "prime: {p}")?;
            }
            let codes: Vec<_> = failed.iter().map(|f| f.code()).collect();
            writeln!(out, "failed filters: {}", codes.join(", "))?;
        }
        Evidence::Exhausted { bound } => writeln!(out, "no matching triangle with longest side <= {bound}")?,
    }
    if let Some(d) = cert.distances() {
        writeln!(out, "distances: {}", join(d))?;
    }
    Ok(())
}

/// `rho * sqrt(m)` in simplest radical form, e.g. `-1/2` or `3/2*sqrt(7)`.
pub fn exact_coordinate(rho: &Rat, m: &Rat) -> String {
    if rho.is_zero() {
        return "0".to_string();
    }
    let (c, k) = sqrt_form(&(rho.square() * m)).expect("nonnegative radicand");
    let c = if rho.is_negative() { -c } else { c };
    if k == 1.into() {
        return c.to_string();
    }
    match c.to_string().as_str() {
        "1" => format!("sqrt({k})"),
        "-1" => format!("-sqrt({k})"),
        s => format!("{s}*sqrt({k})"),
    }
}

/// A witness point with its distances, ready for printing.
#[derive(Debug, Clone)]
pub struct WitnessReport {
    pub theta: String,
    pub distances: [Rat; 3],
    /// Exact coordinates when the point lies in a quadratic field.
    pub exact: Option<(String, String)>,
    /// Exact squared coordinates.
    pub squares: (QuadExt, QuadExt),
    pub x: Fixed,
    pub y: Fixed,
    pub certified_digits: u32,
}

pub fn witness_report(cert: &Certificate, digits: u32) -> Result<WitnessReport, EngineError> {
    let point = cert.witness_point()?.ok_or(EngineError::Inconsistent("certificate has no witness"))?;
    let distances = cert.distances().expect("good certificates carry distances").clone();
    let exact = match &point {
        WitnessPoint::Surd { rho_x, rho_y, q } => {
            let q = Rat::from_integer(q.clone());
            Some((exact_coordinate(rho_x, &q), exact_coordinate(rho_y, &(&q * &Rat::from(3)))))
        }
        WitnessPoint::Radical { .. } => None,
    };
    let (sx, sy) = point.squared_coordinates();
    let numeric = point.render(digits);
    Ok(WitnessReport {
        theta: cert.theta.to_string(),
        distances,
        exact,
        squares: (sx.square, sy.square),
        x: numeric.x,
        y: numeric.y,
        certified_digits: numeric.certified_digits,
    })
}

impl WitnessReport {
    pub fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "theta: {}", self.theta)?;
        writeln!(out, "frame: B = (-theta/2, 0), C = (theta/2, 0), A = (0, theta*sqrt(3)/2)")?;
        writeln!(out, "distances (MA, MB, MC): {}", join(&self.distances))?;
        match &self.exact {
            Some((x, y)) => {
                writeln!(out, "x = {x}")?;
                writeln!(out, "y = {y}")?;
            }
            None => {
                writeln!(out, "x^2 = {}", self.squares.0)?;
                writeln!(out, "y^2 = {}", self.squares.1)?;
            }
        }
        writeln!(out, "x ~ {}", self.x)?;
        writeln!(out, "y ~ {}", self.y)?;
        writeln!(out, "(decimal coordinates within 1e-{} of the true values)", self.certified_digits)
    }

    pub fn to_json(&self) -> Value {
        let (x, y) = match &self.exact {
            Some((x, y)) => (Value::from(x.as_str()), Value::from(y.as_str())),
            None => (Value::Null, Value::Null),
        };
        json!({
            "theta": self.theta,
            "distances": self.distances.iter().map(Rat::to_string).collect::<Vec<_>>(),
            "exact": self.exact.is_some(),
            "x": x,
            "y": y,
            "x_squared": self.squares.0.to_string(),
            "y_squared": self.squares.1.to_string(),
            "x_decimal": self.x.to_string(),
            "y_decimal": self.y.to_string(),
            "certified_digits": self.certified_digits,
        })
    }
}
