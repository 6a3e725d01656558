//! Weights of finite and affine algebras.
//!
//! A weight is a vector of exact rationals in the orthogonal ambient basis of
//! the root system. Affine weights additionally carry a level and a grade:
//! `δ` is the weight with zero finite part, level 0 and grade 1, and `ω₀` has
//! level 1 and grade 0. The bilinear form is the Euclidean product on the
//! finite parts plus `level(a)·grade(b) + level(b)·grade(a)`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact rational used for all coordinates.
pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct AffinePart {
    level: Rational,
    grade: Rational,
}

/// A finite or affine weight with exact rational coordinates.
///
/// The derived ordering is lexicographic on the reduced coordinates (then
/// level and grade), which gives deterministic iteration everywhere a weight
/// is used as a map key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<Rational>,
    affine: Option<AffinePart>,
}

/// Totally ordered key identifying a weight exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightKey(Weight);

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

impl Weight {
    pub fn finite(coords: Vec<Rational>) -> Self {
        Weight { coords, affine: None }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::finite(coords.iter().copied().map(rat).collect())
    }

    pub fn affine(coords: Vec<Rational>, level: Rational, grade: Rational) -> Self {
        Weight { coords, affine: Some(AffinePart { level, grade }) }
    }

    pub fn zero_finite(dim: usize) -> Self {
        Self::finite(alloc::vec![Rational::zero(); dim])
    }

    pub fn zero_affine(dim: usize) -> Self {
        Self::affine(alloc::vec![Rational::zero(); dim], Rational::zero(), Rational::zero())
    }

    /// The null root `δ` of an affine algebra with `dim` finite coordinates.
    pub fn delta(dim: usize) -> Self {
        Self::affine(alloc::vec![Rational::zero(); dim], Rational::zero(), Rational::one())
    }

    /// The basic fundamental weight `ω₀`.
    pub fn omega0(dim: usize) -> Self {
        Self::affine(alloc::vec![Rational::zero(); dim], Rational::one(), Rational::zero())
    }

    /// Zero weight of the same kind and dimension.
    pub fn zero_like(&self) -> Self {
        match self.affine {
            None => Self::zero_finite(self.dim()),
            Some(_) => Self::zero_affine(self.dim()),
        }
    }

    /// Affine weight with this finite part, or this weight re-leveled.
    pub fn with_affine(&self, level: Rational, grade: Rational) -> Self {
        Self::affine(self.coords.clone(), level, grade)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_affine(&self) -> bool {
        self.affine.is_some()
    }

    pub fn level(&self) -> Rational {
        self.affine.map_or_else(Rational::zero, |a| a.level)
    }

    pub fn grade(&self) -> Rational {
        self.affine.map_or_else(Rational::zero, |a| a.grade)
    }

    /// The finite part as a finite weight.
    pub fn finite_part(&self) -> Weight {
        Self::finite(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
            && self.affine.is_none_or(|a| a.level.is_zero() && a.grade.is_zero())
    }

    pub fn canonical_key(&self) -> WeightKey {
        WeightKey(self.clone())
    }

    pub fn same_kind(&self, other: &Weight) -> bool {
        self.coords.len() == other.coords.len() && self.affine.is_some() == other.affine.is_some()
    }

    fn check(&self, other: &Weight) -> Result<()> {
        if self.same_kind(other) {
            Ok(())
        } else {
            Err(Error::Mismatch(alloc::format!(
                "{} weight of dimension {} vs {} weight of dimension {}",
                self.kind_name(),
                self.dim(),
                other.kind_name(),
                other.dim()
            )))
        }
    }

    fn kind_name(&self) -> &'static str {
        if self.is_affine() {
            "affine"
        } else {
            "finite"
        }
    }

    pub fn try_add(&self, other: &Weight) -> Result<Weight> {
        self.check(other)?;
        Ok(self.add_unchecked(other, Rational::one()))
    }

    pub fn try_sub(&self, other: &Weight) -> Result<Weight> {
        self.check(other)?;
        Ok(self.add_unchecked(other, -Rational::one()))
    }

    /// `self + c·other` without kind checks.
    pub(crate) fn add_unchecked(&self, other: &Weight, c: Rational) -> Weight {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| *a + c * *b).collect();
        let affine = match (self.affine, other.affine) {
            (Some(a), Some(b)) => Some(AffinePart { level: a.level + c * b.level, grade: a.grade + c * b.grade }),
            (a, _) => a,
        };
        Weight { coords, affine }
    }

    /// `self + c·other`, checking kinds.
    pub fn try_add_scaled(&self, other: &Weight, c: Rational) -> Result<Weight> {
        self.check(other)?;
        Ok(self.add_unchecked(other, c))
    }

    pub fn scale(&self, c: Rational) -> Weight {
        Weight {
            coords: self.coords.iter().map(|x| *x * c).collect(),
            affine: self.affine.map(|a| AffinePart { level: a.level * c, grade: a.grade * c }),
        }
    }

    /// Euclidean product of the finite parts.
    pub fn dot(&self, other: &Weight) -> Rational {
        self.coords.iter().zip(&other.coords).fold(Rational::zero(), |acc, (a, b)| acc + *a * *b)
    }

    /// Bilinear form with the level/grade pairing scaled by `scale`.
    ///
    /// `scale` is `(θ,θ)/2` for the affine extension of a finite system whose
    /// highest root `θ` does not have norm 2; it is 1 otherwise.
    pub fn inner_scaled(&self, other: &Weight, scale: Rational) -> Rational {
        let fin = self.dot(other);
        match (self.affine, other.affine) {
            (Some(a), Some(b)) => fin + scale * (a.level * b.grade + b.level * a.grade),
            _ => fin,
        }
    }

    pub fn try_inner(&self, other: &Weight) -> Result<Rational> {
        self.check(other)?;
        Ok(self.inner_scaled(other, Rational::one()))
    }

    /// Replace the finite part, keeping level and grade.
    pub fn with_coords(&self, coords: Vec<Rational>) -> Weight {
        Weight { coords, affine: self.affine }
    }

    /// Shift the grade by `n`.
    pub fn shift_grade(&self, n: Rational) -> Weight {
        let mut w = self.clone();
        if let Some(a) = w.affine.as_mut() {
            a.grade += n;
        }
        w
    }

    /// Embed this weight's coordinates at `offset` inside an ambient space of
    /// dimension `dim`.
    pub fn embed(&self, offset: usize, dim: usize) -> Weight {
        let mut coords = alloc::vec![Rational::zero(); dim];
        coords[offset..offset + self.dim()].copy_from_slice(&self.coords);
        Weight { coords, affine: self.affine }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.try_add(rhs).expect("weight addition")
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.try_sub(rhs).expect("weight subtraction")
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-Rational::one())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for Rational {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scale(self)
    }
}

impl Mul<Weight> for Rational {
    type Output = Weight;
    fn mul(self, rhs: Weight) -> Weight {
        rhs.scale(self)
    }
}

/// Formats a rational as `p` or `p/q`.
pub struct DisplayRational(pub Rational);

impl fmt::Display for DisplayRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", DisplayRational(*c))?;
        }
        if let Some(a) = self.affine {
            write!(f, "; level {}; grade {}", DisplayRational(a.level), DisplayRational(a.grade))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn composite_arithmetic() {
        let a = w(&[1, 0, 3]);
        let b = w(&[3, 2, 1]);
        assert_eq!(&a.scale(rat(2)) + &b, w(&[5, 2, 7]));
        assert_eq!(a.try_inner(&b).unwrap(), rat(6));
        assert_eq!(&a + &a.zero_like(), a);
        assert_eq!(a.scale(rat(2)), w(&[2, 0, 6]));
        assert!(a.scale(rat(0)).is_zero());
    }

    #[test]
    fn quarter_scaling() {
        let v = w(&[1, -1, 1, -1, 1, -1, 1, -1]).scale(frac(1, 4));
        assert_eq!(v.coords()[0], frac(1, 4));
        assert_eq!(v.coords()[1], frac(-1, 4));
    }

    #[test]
    fn affine_basics() {
        let d = Weight::delta(2);
        let o = Weight::omega0(2);
        let dd = &d + &d;
        assert_eq!(dd.grade(), rat(2));
        assert_eq!(dd.level(), rat(0));
        assert!(dd.coords().iter().all(|c| c.is_zero()));
        assert_eq!(d.try_inner(&d).unwrap(), rat(0));
        assert_eq!(o.try_inner(&d).unwrap(), rat(1));
        assert_eq!(o.try_inner(&o).unwrap(), rat(0));
    }

    #[test]
    fn mismatch_is_reported() {
        assert!(matches!(w(&[1, 2]).try_add(&w(&[1])), Err(Error::Mismatch(_))));
        assert!(matches!(w(&[1, 2]).try_inner(&Weight::delta(2)), Err(Error::Mismatch(_))));
    }

    #[test]
    fn keys_are_exact() {
        let a = Weight::finite(alloc::vec![frac(1, 2), frac(1, 2)]);
        let b = Weight::finite(alloc::vec![frac(2, 4), frac(1, 2)]);
        assert_eq!(a.canonical_key(), b.canonical_key());
        assert_ne!(w(&[1, 0]).canonical_key(), w(&[0, 1]).canonical_key());
        let mut v = alloc::vec![w(&[0, 1]), w(&[1, 0]), w(&[1, -1])];
        v.sort_by_key(Weight::canonical_key);
        assert_eq!(v, alloc::vec![w(&[0, 1]), w(&[1, -1]), w(&[1, 0])]);
    }

    #[test]
    fn display() {
        let v = Weight::finite(alloc::vec![frac(3, 2), frac(1, 2)]);
        assert_eq!(alloc::format!("{v}"), "3/2, 1/2");
    }
}
