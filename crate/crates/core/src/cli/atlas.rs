//! Export of the side lengths produced by primitive triangles.
//!
//! Each triangle with irrational `4Δ sqrt(3)` gives two good side lengths,
//! `2θ^2 = (a^2 + b^2 + c^2) ± 4Δ sqrt(3)`, i.e. `θ^2 = α ± sqrt(β)` with
//! `α = s1/2` and `β = 3·16Δ^2/4`.

use std::io::{self, Write};

use num_bigint::BigInt;
use serde::Serialize;

use super::AtlasFormat;
use crate::exactnum::Rat;
use crate::theta::{Sign, ThetaClass};
use crate::triangles::{enumerate_primitive, PrimTriangle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtlasRecord {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub s1: u128,
    pub sixteen_delta_sq: u128,
    pub alpha: Rat,
    pub beta: Rat,
    pub kappa: Rat,
}

impl AtlasRecord {
    pub fn from_triangle(t: &PrimTriangle) -> AtlasRecord {
        AtlasRecord {
            a: t.a(),
            b: t.b(),
            c: t.c(),
            s1: t.s1(),
            sixteen_delta_sq: t.sixteen_delta_sq(),
            alpha: Rat::new(BigInt::from(t.s1()), 2),
            beta: Rat::new(BigInt::from(t.sixteen_delta_sq()) * 3u32, 4),
            kappa: t.kappa(),
        }
    }

    /// The side length `sqrt(α ± sqrt(β))`.
    pub fn theta(&self, sign: Sign) -> ThetaClass {
        ThetaClass::biquadratic(self.alpha.clone(), sign, self.beta.clone())
            .expect("atlas records have positive alpha and non-square beta")
    }
}

#[derive(Serialize)]
struct Row {
    a: u64,
    b: u64,
    c: u64,
    s1: u128,
    sixteen_delta_sq: u128,
    alpha: String,
    beta: String,
    kappa: String,
}

impl From<&AtlasRecord> for Row {
    fn from(r: &AtlasRecord) -> Row {
        Row {
            a: r.a,
            b: r.b,
            c: r.c,
            s1: r.s1,
            sixteen_delta_sq: r.sixteen_delta_sq,
            alpha: r.alpha.to_string(),
            beta: r.beta.to_string(),
            kappa: r.kappa.to_string(),
        }
    }
}

/// Records for every primitive triangle with longest side `<= max_side` and
/// irrational radical, in `(c, b, a)` order.
pub fn atlas_records(max_side: u64) -> impl Iterator<Item = AtlasRecord> {
    enumerate_primitive(max_side).filter(|t| !t.has_rational_radical()).map(|t| AtlasRecord::from_triangle(&t))
}

/// Writes the atlas and returns the number of records.
pub fn write_atlas(max_side: u64, format: AtlasFormat, out: &mut dyn Write) -> io::Result<u64> {
    let mut n = 0;
    match format {
        AtlasFormat::Jsonl => {
            for r in atlas_records(max_side) {
                serde_json::to_writer(&mut *out, &Row::from(&r))?;
                out.write_all(b"\n")?;
                n += 1;
            }
        }
        AtlasFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in atlas_records(max_side) {
                w.serialize(Row::from(&r)).map_err(io::Error::other)?;
                n += 1;
            }
            if n == 0 {
                w.write_record(["a", "b", "c", "s1", "sixteen_delta_sq", "alpha", "beta", "kappa"])
                    .map_err(io::Error::other)?;
            }
            w.flush()?;
        }
    }
    Ok(n)
}
