//! Algebra names: `SERIES RANK ("+" SERIES RANK)* ["^"]`, or a JSON list of
//! simple roots such as `[[1,-1,0],[0,1,-1]]`.

use liekit_core::{RootSystem, Series, Weight};

use crate::{json, usage, CliError, Result};

fn at(name: &str, pos: usize, msg: &str) -> CliError {
    CliError::Usage(format!("bad algebra name {name:?} at position {}: {msg}", pos + 1))
}

/// Parses an algebra name into a root system.
pub fn parse_algebra(name: &str) -> Result<RootSystem> {
    let trimmed = name.trim();
    if trimmed.starts_with('[') {
        return explicit(trimmed);
    }
    let chars: Vec<char> = name.chars().collect();
    let mut i = 0;
    let mut parts = Vec::new();
    let mut affine = false;
    loop {
        let start = i;
        let series = match chars.get(i).copied().and_then(Series::from_letter) {
            Some(s) => s,
            None => return Err(at(name, i, "expected a series letter A-G")),
        };
        i += 1;
        let digits: String = chars[i..].iter().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(at(name, i, "expected a rank"));
        }
        i += digits.len();
        let rank: usize = digits.parse().map_err(|_| at(name, start + 1, "rank out of range"))?;
        let rs = RootSystem::simple(series, rank).map_err(|e| at(name, start, &e.to_string()))?;
        parts.push(rs);
        match chars.get(i) {
            None => break,
            Some('+') => i += 1,
            Some('^') => {
                if i + 1 != chars.len() {
                    return Err(at(name, i + 1, "unexpected input after '^'"));
                }
                affine = true;
                break;
            }
            Some(_) => return Err(at(name, i, "expected '+', '^' or end of name")),
        }
    }
    let mut rs = parts.remove(0);
    for p in &parts {
        rs = RootSystem::direct_sum(&rs, p)?;
    }
    if affine {
        rs = RootSystem::affine_extension(&rs)?;
    }
    Ok(rs)
}

fn explicit(text: &str) -> Result<RootSystem> {
    let roots = parse_root_list(text)?;
    if roots.is_empty() {
        return usage("an explicit root list needs at least one root");
    }
    Ok(RootSystem::from_roots(roots)?)
}

/// Parses `[[c, …], …]` where every coordinate is an integer or a `"p/q"` string.
pub fn parse_root_list(text: &str) -> Result<Vec<Weight>> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("bad root list {text:?}: {e}")))?;
    let rows = value.as_array().ok_or_else(|| CliError::Usage("root list must be a JSON array".into()))?;
    rows.iter()
        .map(|row| {
            let coords = row.as_array().ok_or_else(|| CliError::Usage("each root must be a JSON array".into()))?;
            let coords = coords.iter().map(json::parse_rational).collect::<Result<Vec<_>>>()?;
            Ok(Weight::finite(coords))
        })
        .collect()
}
