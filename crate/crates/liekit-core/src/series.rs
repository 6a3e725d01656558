//! String functions and branching functions of affine modules.
//!
//! Weights `ν − nδ` sharing the Dynkin labels of `ν` form a class; the class
//! series collects the coefficients at `n = 0, 1, …, limit`, where `n` counts
//! grades below the highest weight of the module.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::branching::{OrthogonalDecomposition, SubalgebraSpec};
use crate::formal::FormalElement;
use crate::modules::{Algorithm, HighestWeightModule};
use crate::root_system::RootSystem;
use crate::weight::Weight;
use crate::{domain, Error, Multiplicity, Result};

/// Truncated power series `Σ cₙ qⁿ` attached to a class of weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    /// Dynkin labels of the class, `α₀` label first.
    pub labels: Vec<i64>,
    pub coeffs: Vec<Multiplicity>,
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<_> = self.labels.iter().map(|l| format!("{l}")).collect();
        write!(f, "[{}] :", labels.join(","))?;
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                write!(f, " {}", if c.is_negative() { "-" } else { "" })?;
            } else {
                write!(f, " {sign} ")?;
            }
            match n {
                0 => write!(f, "{abs}")?,
                1 => write!(f, "{abs} q")?,
                _ => write!(f, "{abs} q^{n}")?,
            }
            first = false;
        }
        if first {
            f.write_str(" 0")?;
        }
        Ok(())
    }
}

fn group(labeller: &RootSystem, entries: &FormalElement, top: &Weight, limit: u32) -> Result<Vec<QSeries>> {
    let mut classes: BTreeMap<Vec<i64>, Vec<Multiplicity>> = BTreeMap::new();
    for (w, m) in entries.iter() {
        let depth = top.grade() - w.grade();
        if !depth.is_integer() || depth.is_negative() {
            return Err(Error::Domain(format!("weight {w} above the highest grade")));
        }
        let n = depth.to_integer();
        if n > limit as i64 {
            continue;
        }
        let labels = labeller.integer_labels(w).ok_or_else(|| Error::Domain(format!("non-integral weight {w}")))?;
        let coeffs = classes.entry(labels).or_insert_with(|| alloc::vec![BigInt::zero(); limit as usize + 1]);
        coeffs[n as usize] += m;
    }
    Ok(classes
        .into_iter()
        .filter(|(_, c)| c.iter().any(|x| !x.is_zero()))
        .map(|(labels, coeffs)| QSeries { labels, coeffs })
        .collect())
}

/// String functions of the irreducible module with the given labels.
pub fn string_functions(rs: &RootSystem, labels: &[i64], limit: u32, algorithm: Algorithm) -> Result<Vec<QSeries>> {
    if !rs.is_affine() {
        return domain("string functions are defined for affine algebras");
    }
    if labels.iter().any(|&l| l < 0) {
        return domain("highest weight labels must be nonnegative");
    }
    let mu = rs.weight(labels)?;
    if !mu.level().is_positive() {
        return domain("string functions need a positive level");
    }
    let m = HighestWeightModule::irreducible(rs, mu.clone())?.with_depth(limit);
    group(rs, &m.multiplicities(algorithm)?, &mu, limit)
}

/// Branching functions of `L^μ` for an affine subalgebra.
pub fn branching_functions(rs: &RootSystem, sub: &SubalgebraSpec, labels: &[i64], limit: u32) -> Result<Vec<QSeries>> {
    if !rs.is_affine() || !sub.is_affine() {
        return domain("branching functions need an affine algebra and subalgebra");
    }
    if labels.iter().any(|&l| l < 0) {
        return domain("highest weight labels must be nonnegative");
    }
    let mu = rs.weight(labels)?;
    let dec = OrthogonalDecomposition::new(rs, sub)?;
    let b = dec.branch(&mu, limit)?;
    group(dec.sub_system(), &b, &mu, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Series;

    #[test]
    fn affine_a1_basic_string() {
        let rs = RootSystem::affine_extension(&RootSystem::simple(Series::A, 1).unwrap()).unwrap();
        let s = string_functions(&rs, &[1, 0], 6, Algorithm::Recurrence).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].labels, alloc::vec![1, 0]);
        let c: Vec<i64> = s[0].coeffs.iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(c, alloc::vec![1, 1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn display() {
        let q = QSeries { labels: alloc::vec![1, 0, 0], coeffs: [1, -1, 0, 19].iter().map(|&x| BigInt::from(x)).collect() };
        assert_eq!(alloc::format!("{q}"), "[1,0,0] : 1 - 1 q + 19 q^3");
        let q = QSeries { labels: alloc::vec![0, 4], coeffs: [0, 2, 10].iter().map(|&x| BigInt::from(x)).collect() };
        assert_eq!(alloc::format!("{q}"), "[0,4] : 2 q + 10 q^2");
    }

    #[test]
    fn identity_branching_is_one() {
        let rs = RootSystem::affine_extension(&RootSystem::simple(Series::A, 1).unwrap()).unwrap();
        let sub = SubalgebraSpec::parabolic(&rs, &[1]).unwrap();
        let b = branching_functions(&rs, &sub, &[1, 1], 5).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].labels, alloc::vec![1, 1]);
        assert_eq!(b[0].coeffs[0], BigInt::from(1));
        assert!(b[0].coeffs[1..].iter().all(|c| c.is_zero()));
    }
}
