//! Finite formal sums `Σ mᵢ e^{γᵢ}` with integer coefficients.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::weight::{rat, Weight};
use crate::{domain, Multiplicity, Result};

/// Element of the formal exponent algebra.
///
/// Terms are kept sorted by weight and never carry a zero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalElement {
    terms: BTreeMap<Weight, Multiplicity>,
}

impl FormalElement {
    pub fn zero() -> FormalElement {
        FormalElement::default()
    }

    /// `m·e^w`.
    pub fn monomial(w: Weight, m: impl Into<Multiplicity>) -> FormalElement {
        let mut f = FormalElement::zero();
        f.add_term(w, m.into());
        f
    }

    /// Builds `Σ mᵢ e^{wᵢ}`, coalescing repeated weights.
    pub fn new(weights: Vec<Weight>, mults: Vec<Multiplicity>) -> Result<FormalElement> {
        if weights.len() != mults.len() {
            return domain("weights and multiplicities differ in length");
        }
        let mut f = FormalElement::zero();
        for (w, m) in weights.into_iter().zip(mults) {
            f.check(&w)?;
            f.add_term(w, m);
        }
        Ok(f)
    }

    fn check(&self, w: &Weight) -> Result<()> {
        match self.terms.keys().next() {
            Some(k) if !k.same_kind(w) => domain("formal element terms of different weight kinds"),
            _ => Ok(()),
        }
    }

    fn check_with(&self, other: &FormalElement) -> Result<()> {
        match other.terms.keys().next() {
            Some(k) => self.check(k),
            None => Ok(()),
        }
    }

    /// Adds `m·e^w` in place.
    pub fn add_term(&mut self, w: Weight, m: Multiplicity) {
        if m.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(v) => {
                v.insert(m);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += m;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn get(&self, w: &Weight) -> Multiplicity {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &Multiplicity)> {
        self.terms.iter()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn add(&self, other: &FormalElement) -> Result<FormalElement> {
        self.check_with(other)?;
        let mut out = self.clone();
        for (w, m) in &other.terms {
            out.add_term(w.clone(), m.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FormalElement) -> Result<FormalElement> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, c: &Multiplicity) -> FormalElement {
        if c.is_zero() {
            return FormalElement::zero();
        }
        FormalElement { terms: self.terms.iter().map(|(w, m)| (w.clone(), m * c)).collect() }
    }

    /// Multiplies by `e^γ`.
    pub fn shift(&self, gamma: &Weight) -> Result<FormalElement> {
        self.check(gamma)?;
        Ok(FormalElement { terms: self.terms.iter().map(|(w, m)| (w + gamma, m.clone())).collect() })
    }

    /// Convolution product.
    pub fn multiply(&self, other: &FormalElement) -> Result<FormalElement> {
        self.check_with(other)?;
        let mut out = FormalElement::zero();
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                out.add_term(a + b, ma * mb);
            }
        }
        Ok(out)
    }

    /// Product that discards terms rejected by `keep` as it goes.
    pub fn multiply_filtered(&self, other: &FormalElement, keep: impl Fn(&Weight) -> bool) -> Result<FormalElement> {
        self.check_with(other)?;
        let mut out = FormalElement::zero();
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                let w = a + b;
                if keep(&w) {
                    out.add_term(w, ma * mb);
                }
            }
        }
        Ok(out)
    }

    /// Drops terms of grade below `−limit`.
    pub fn truncate_by_grade(&self, limit: u32) -> FormalElement {
        let floor = rat(-(limit as i64));
        self.filter(|w| w.grade() >= floor)
    }

    pub fn filter(&self, keep: impl Fn(&Weight) -> bool) -> FormalElement {
        FormalElement { terms: self.terms.iter().filter(|(w, _)| keep(w)).map(|(w, m)| (w.clone(), m.clone())).collect() }
    }

    /// Applies `f` to every exponent, summing coefficients that collide.
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> FormalElement {
        let mut out = FormalElement::zero();
        for (w, m) in &self.terms {
            out.add_term(f(w), m.clone());
        }
        out
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> Multiplicity {
        self.terms.values().fold(BigInt::zero(), |a, b| a + b)
    }
}

impl FromIterator<(Weight, Multiplicity)> for FormalElement {
    fn from_iter<I: IntoIterator<Item = (Weight, Multiplicity)>>(iter: I) -> Self {
        let mut f = FormalElement::zero();
        for (w, m) in iter {
            f.add_term(w, m);
        }
        f
    }
}

impl fmt::Display for FormalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m} e^({w})")?;
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

    fn fe(ws: &[&[i64]], ms: &[i64]) -> FormalElement {
        FormalElement::new(ws.iter().map(|c| w(c)).collect(), ms.iter().map(|&m| BigInt::from(m)).collect()).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(fe(&[&[1, 1], &[0, 0]], &[1, 2]).len(), 2);
        assert!(fe(&[], &[]).is_empty());
        assert!(fe(&[&[1, 0], &[1, 0]], &[1, -1]).is_empty());
        assert!(FormalElement::new(alloc::vec![w(&[1])], alloc::vec![]).is_err());
        assert!(FormalElement::new(alloc::vec![w(&[1]), w(&[1, 2])], alloc::vec![1.into(), 1.into()]).is_err());
    }

    #[test]
    fn product_example() {
        let x = fe(&[&[1, 1], &[0, 0]], &[1, 2]);
        let y = x.shift(&w(&[1, 0])).unwrap().scale(&BigInt::from(2));
        assert_eq!(y, fe(&[&[2, 1], &[1, 0]], &[2, 4]));
        let p = x.multiply(&y).unwrap();
        assert_eq!(p, fe(&[&[1, 0], &[2, 1], &[3, 2]], &[8, 8, 2]));
        let one = FormalElement::monomial(w(&[0, 0]), 1);
        assert_eq!(x.multiply(&one).unwrap(), x);
        assert_eq!(x.add(&FormalElement::zero()).unwrap(), x);
        assert_eq!(x.shift(&w(&[0, 0])).unwrap(), x);
    }

    #[test]
    fn telescoping() {
        let a = w(&[1, -1]);
        let k = 5;
        let left = fe(&[&[0, 0], &[-1, 1]], &[1, -1]);
        let geo: FormalElement = (0..=k).map(|i| (a.scale(rat(-i)), BigInt::one())).collect();
        let expect = FormalElement::monomial(w(&[0, 0]), 1)
            .add(&FormalElement::monomial(a.scale(rat(-(k + 1))), -1))
            .unwrap();
        assert_eq!(left.multiply(&geo).unwrap(), expect);
    }

    #[test]
    fn truncation() {
        let g0 = Weight::zero_affine(2);
        let x = FormalElement::monomial(g0.clone(), 3)
            .add(&FormalElement::monomial(g0.shift_grade(rat(-4)), 1))
            .unwrap();
        assert_eq!(x.truncate_by_grade(0).len(), 1);
        assert_eq!(x.truncate_by_grade(10), x);
    }
}
