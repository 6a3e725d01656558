//! Timing tables.
//!
//! `finite-mults` times both multiplicity algorithms on the B2 modules with
//! labels `[n,n]`; `branching` times the fan recurrence against projection
//! of the full character for B3 ⊂ B4 and highest weights `[n,0,0,1]`.
//! Rows report the number of dominant weights of the module and times in
//! microseconds.

use std::time::Instant;

use liekit_core::branching::{branch_coefficients, branch_direct};
use liekit_core::modules::Algorithm;
use liekit_core::{HighestWeightModule, RootSystem, Series, SubalgebraSpec};
use serde_json::{json, Map, Value};

use crate::cli::Suite;
use crate::commands::Rendered;
use crate::{usage, CliError, Result};

fn micros(start: Instant) -> u64 {
    u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX)
}

fn mismatch(what: &str) -> CliError {
    CliError::Domain(liekit_core::Error::Domain(format!("benchmark methods disagree on {what}")))
}

pub fn run(suite: Suite, sizes: &[i64]) -> Result<Rendered> {
    if sizes.iter().any(|&n| n < 0) {
        return usage("benchmark sizes must be nonnegative");
    }
    let (name, columns) = match suite {
        Suite::FiniteMults => ("finite-mults", ["size", "weights", "recurrence_us", "freudenthal_us"]),
        Suite::Branching => ("branching", ["size", "weights", "fan_us", "direct_us"]),
    };
    let mut rows = Vec::new();
    for &n in sizes {
        rows.push(match suite {
            Suite::FiniteMults => finite_row(n)?,
            Suite::Branching => branching_row(n)?,
        });
    }
    let mut text = columns.join("\t") + "\n";
    for (n, w, a, b) in &rows {
        text.push_str(&format!("{n}\t{w}\t{a}\t{b}\n"));
    }
    let mut body = Map::new();
    body.insert("suite".into(), json!(name));
    body.insert("columns".into(), json!(columns));
    body.insert("rows".into(), Value::Array(rows.iter().map(|(n, w, a, b)| json!([n, w, a, b])).collect()));
    Ok(Rendered { text, json: body })
}

fn finite_row(n: i64) -> Result<(i64, usize, u64, u64)> {
    let rs = RootSystem::simple(Series::B, 2)?;
    let m = HighestWeightModule::irreducible(&rs, rs.weight(&[n, n])?)?;
    let t = Instant::now();
    let a = m.multiplicities(Algorithm::Recurrence)?;
    let ta = micros(t);
    let t = Instant::now();
    let b = m.multiplicities(Algorithm::Freudenthal)?;
    let tb = micros(t);
    if a != b {
        return Err(mismatch("B2 multiplicities"));
    }
    Ok((n, m.chamber_lattice()?.len(), ta, tb))
}

fn branching_row(n: i64) -> Result<(i64, usize, u64, u64)> {
    let rs = RootSystem::simple(Series::B, 4)?;
    let sub = SubalgebraSpec::parabolic(&rs, &[1, 2, 3])?;
    let mu = rs.weight(&[n, 0, 0, 1])?;
    let t = Instant::now();
    let a = branch_coefficients(&rs, &sub, &mu, 0)?;
    let ta = micros(t);
    let t = Instant::now();
    let b = branch_direct(&rs, &sub, &mu)?;
    let tb = micros(t);
    if a != b {
        return Err(mismatch("B3 in B4 branching"));
    }
    let weights = HighestWeightModule::irreducible(&rs, mu)?.chamber_lattice()?.len();
    Ok((n, weights, ta, tb))
}
