//! Highest-weight modules, their characters and weight multiplicities.
//!
//! Multiplicities are computed on a chamber of weights and expanded by the
//! symmetry group when the full character is needed:
//!
//! * irreducible modules: dominant weights, symmetric under `W`;
//! * parabolic Verma modules on an index set `I`: weights dominant for `I`,
//!   symmetric under `W_I`;
//! * Verma modules: every weight, no symmetry.
//!
//! The recurrence multiplies the character by the Weyl denominator
//! `Σ ε(w) e^{wρ−ρ}` and compares coefficients with the singular element
//! `Σ ε(w) e^{w(μ+ρ)−ρ}`. On the chamber only the highest term of the
//! singular element survives, so
//! `m_ξ = δ_{ξ,μ} − Σ_{w≠e} ε(w) m_{ξ−(wρ−ρ)}`, where each lookup is folded
//! back into the chamber by the symmetry group.
//!
//! Depth: affine irreducible modules are truncated at grade `−depth`, Verma
//! and parabolic Verma modules at height `depth` below the highest weight.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::formal::FormalElement;
use crate::root_system::RootSystem;
use crate::weight::{rat, Rational, Weight};
use crate::weyl;
use crate::{domain, Error, Multiplicity, Result};

/// Default height limit of Verma-type modules.
pub const DEFAULT_DEPTH: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Algorithm {
    #[default]
    Recurrence,
    Freudenthal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Irreducible,
    Verma,
    /// Index set in word numbering (finite `1..=rank`, affine `0..=rank`).
    ParabolicVerma(Vec<usize>),
}

/// A highest-weight module of a single algebra.
#[derive(Clone, Debug)]
pub struct HighestWeightModule {
    rs: RootSystem,
    kind: ModuleKind,
    highest: Weight,
    depth: u32,
    gens: Vec<usize>,
}

/// Module expressions whose characters can be formed.
#[derive(Clone, Debug)]
pub enum ModuleDescriptor {
    Highest(HighestWeightModule),
    Sum(Vec<ModuleDescriptor>),
    Tensor(Vec<ModuleDescriptor>),
}

pub(crate) fn big(r: Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn integral_labels(rs: &RootSystem, w: &Weight) -> Option<Vec<i64>> {
    rs.integer_labels(w)
}

impl HighestWeightModule {
    pub fn irreducible(rs: &RootSystem, highest: Weight) -> Result<HighestWeightModule> {
        rs.check_weight(&highest)?;
        match integral_labels(rs, &highest) {
            Some(l) if l.iter().all(|&x| x >= 0) => {}
            _ => return domain(format!("highest weight {highest} is not dominant integral")),
        }
        let depth = if rs.is_affine() { rs.grade_limit() } else { DEFAULT_DEPTH };
        Ok(HighestWeightModule {
            rs: rs.clone(),
            kind: ModuleKind::Irreducible,
            highest,
            depth,
            gens: (0..rs.num_simple()).collect(),
        })
    }

    pub fn verma(rs: &RootSystem, highest: Weight) -> Result<HighestWeightModule> {
        rs.check_weight(&highest)?;
        Ok(HighestWeightModule { rs: rs.clone(), kind: ModuleKind::Verma, highest, depth: DEFAULT_DEPTH, gens: Vec::new() })
    }

    /// Parabolic Verma module; `highest` must be dominant integral on `indices`.
    pub fn parabolic_verma(rs: &RootSystem, highest: Weight, indices: &[usize]) -> Result<HighestWeightModule> {
        rs.check_weight(&highest)?;
        let off = if rs.is_affine() { 0 } else { 1 };
        let mut gens = Vec::new();
        for &i in indices {
            if i < off || i - off >= rs.num_simple() {
                return domain(format!("parabolic index {i} out of range"));
            }
            gens.push(i - off);
        }
        gens.sort_unstable();
        gens.dedup();
        for &g in &gens {
            let l = rs.label(&highest, g);
            if !l.is_integer() || l.is_negative() {
                return domain(format!("highest weight {highest} is not dominant on the parabolic index set"));
            }
        }
        if rs.is_affine() && gens.len() == rs.num_simple() {
            return domain("parabolic index set of an affine algebra must be proper");
        }
        let mut set: Vec<usize> = gens.iter().map(|g| g + off).collect();
        set.sort_unstable();
        Ok(HighestWeightModule { rs: rs.clone(), kind: ModuleKind::ParabolicVerma(set), highest, depth: DEFAULT_DEPTH, gens })
    }

    pub fn with_depth(mut self, depth: u32) -> HighestWeightModule {
        self.depth = depth;
        self
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn kind(&self) -> &ModuleKind {
        &self.kind
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    fn grade_truncated(&self) -> bool {
        self.rs.is_affine() && self.kind == ModuleKind::Irreducible
    }

    fn height_bounded(&self) -> bool {
        self.kind != ModuleKind::Irreducible
    }

    /// Whether `w` lies inside the truncation window.
    fn in_window(&self, w: &Weight) -> bool {
        if self.grade_truncated() {
            w.grade() >= self.highest.grade() - rat(self.depth as i64)
        } else if self.height_bounded() {
            self.rs.height(&(&self.highest - w)) <= rat(self.depth as i64)
        } else {
            true
        }
    }

    fn in_chamber(&self, w: &Weight) -> bool {
        weyl::labels_nonneg(&self.rs, w, &self.gens)
    }

    /// Folds `w` into the chamber with the ordinary action of the symmetry group.
    fn fold(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        while let Some(&i) = self.gens.iter().find(|&&i| self.rs.label(&cur, i).is_negative()) {
            cur = self.rs.reflect_simple(i, &cur);
        }
        cur
    }

    /// `Σ ε(w) e^{w(μ+ρ)−ρ}` over the symmetry group, inside the window.
    pub fn singular_element(&self) -> Result<FormalElement> {
        let rho = self.rs.rho();
        let top = &self.highest + rho;
        let terms = weyl::signed_orbit(&self.rs, &top, &self.gens, |x| self.in_window(&(x - rho)));
        Ok(terms.into_iter().map(|(w, s)| (&w - rho, BigInt::from(s))).collect())
    }

    /// Chamber weights below the highest weight inside the window, sorted by
    /// decreasing `(·,ρ)`.
    pub fn chamber_lattice(&self) -> Result<Vec<Weight>> {
        let mut out = match (&self.kind, self.rs.is_affine()) {
            (ModuleKind::Irreducible, true) => affine_dominant_lattice(&self.rs, &self.highest, self.depth)?,
            (ModuleKind::Irreducible, false) => finite_dominant_lattice(&self.rs, &self.highest),
            _ => {
                let mut seen = BTreeSet::from([self.highest.clone()]);
                let mut queue = VecDeque::from([self.highest.clone()]);
                while let Some(x) = queue.pop_front() {
                    for a in self.rs.simple_roots() {
                        let y = &x - a;
                        if self.in_window(&y) && seen.insert(y.clone()) {
                            queue.push_back(y);
                        }
                    }
                }
                seen.into_iter().filter(|w| self.in_chamber(w)).collect()
            }
        };
        sort_by_rho(&self.rs, &mut out);
        Ok(out)
    }

    pub fn multiplicities(&self, algorithm: Algorithm) -> Result<FormalElement> {
        match algorithm {
            Algorithm::Recurrence => self.multiplicities_recurrence(),
            Algorithm::Freudenthal => self.multiplicities_freudenthal(),
        }
    }

    /// Chamber multiplicities by the denominator recurrence.
    pub fn multiplicities_recurrence(&self) -> Result<FormalElement> {
        let lattice = self.chamber_lattice()?;
        let max_height = lattice
            .iter()
            .map(|w| self.rs.height(&(&self.highest - w)))
            .max()
            .unwrap_or_else(Rational::zero);
        let grade_floor = -rat(self.depth as i64);
        let shifts: Vec<(Weight, i8)> = weyl::rho_shifts(&self.rs, |s| {
            if self.grade_truncated() {
                s.grade() >= grade_floor
            } else {
                -self.rs.height(s) <= max_height
            }
        })
        .into_iter()
        .filter(|(s, _)| !s.is_zero())
        .collect();
        let mut mults: BTreeMap<Weight, Multiplicity> = BTreeMap::new();
        for xi in &lattice {
            let mut m = if *xi == self.highest { BigInt::one() } else { BigInt::zero() };
            for (s, eps) in &shifts {
                let target = self.fold(&(xi - s));
                if let Some(v) = mults.get(&target) {
                    if *eps > 0 {
                        m -= v;
                    } else {
                        m += v;
                    }
                }
            }
            mults.insert(xi.clone(), m);
        }
        Ok(mults.into_iter().collect())
    }

    /// Chamber multiplicities of an irreducible module by Freudenthal's formula.
    pub fn multiplicities_freudenthal(&self) -> Result<FormalElement> {
        if self.kind != ModuleKind::Irreducible {
            return domain("Freudenthal's formula applies to irreducible modules only");
        }
        let rs = &self.rs;
        let lattice = self.chamber_lattice()?;
        let roots = rs.positive_roots_to(self.depth as i64);
        let rho = rs.rho();
        let top = &self.highest + rho;
        let top_norm = rs.inner(&top, &top);
        let mut mults: BTreeMap<Weight, Multiplicity> = BTreeMap::new();
        for xi in &lattice {
            if *xi == self.highest {
                mults.insert(xi.clone(), BigInt::one());
                continue;
            }
            let mut num = BigRational::zero();
            for (alpha, mult) in &roots {
                let mut k = 1i64;
                loop {
                    let eta = xi.add_unchecked(alpha, rat(k));
                    let Some(m) = mults.get(&self.fold(&eta)) else { break };
                    let f = big(rs.inner(&eta, alpha)) * BigRational::from_integer(m * BigInt::from(*mult));
                    num += f;
                    k += 1;
                }
            }
            let shifted = xi + rho;
            let den = big(top_norm - rs.inner(&shifted, &shifted));
            if den.is_zero() {
                return Err(Error::Domain(format!("vanishing Freudenthal denominator at {xi}")));
            }
            let m = num * BigRational::from_integer(BigInt::from(2)) / den;
            if !m.is_integer() {
                return Err(Error::Domain(format!("non-integral multiplicity at {xi}")));
            }
            mults.insert(xi.clone(), m.to_integer());
        }
        Ok(mults.into_iter().filter(|(_, m)| !m.is_zero()).collect())
    }

    /// Full character inside the window.
    pub fn character(&self) -> Result<FormalElement> {
        self.character_with(Algorithm::Recurrence)
    }

    pub fn character_with(&self, algorithm: Algorithm) -> Result<FormalElement> {
        let chamber = self.multiplicities(algorithm)?;
        if self.gens.is_empty() {
            return Ok(chamber);
        }
        let mut out = FormalElement::zero();
        for (w, m) in chamber.iter() {
            for (x, _) in weyl::signed_orbit(&self.rs, w, &self.gens, |x| self.in_window(x)) {
                out.add_term(x, m.clone());
            }
        }
        Ok(out)
    }

    /// Dimension of a finite-dimensional irreducible module.
    pub fn dimension(&self) -> Result<Multiplicity> {
        if self.kind != ModuleKind::Irreducible {
            return domain("only irreducible modules have a dimension formula");
        }
        dimension(&self.rs, &self.highest)
    }
}

impl ModuleDescriptor {
    pub fn character(&self) -> Result<FormalElement> {
        match self {
            ModuleDescriptor::Highest(m) => m.character(),
            ModuleDescriptor::Sum(parts) => {
                let mut out = FormalElement::zero();
                for p in parts {
                    out = out.add(&p.character()?)?;
                }
                Ok(out)
            }
            ModuleDescriptor::Tensor(parts) => {
                if parts.iter().any(|p| p.is_affine()) {
                    return Err(Error::Unsupported("tensor products of affine modules".into()));
                }
                let mut out: Option<FormalElement> = None;
                for p in parts {
                    let c = p.character()?;
                    out = Some(match out {
                        None => c,
                        Some(acc) => acc.multiply(&c)?,
                    });
                }
                out.ok_or_else(|| Error::Domain("empty tensor product".into()))
            }
        }
    }

    fn is_affine(&self) -> bool {
        match self {
            ModuleDescriptor::Highest(m) => m.rs.is_affine(),
            ModuleDescriptor::Sum(p) | ModuleDescriptor::Tensor(p) => p.iter().any(|x| x.is_affine()),
        }
    }
}

pub(crate) fn sort_by_rho(rs: &RootSystem, v: &mut [Weight]) {
    let rho = rs.rho();
    v.sort_by(|a, b| rs.inner(b, rho).cmp(&rs.inner(a, rho)).then_with(|| a.cmp(b)));
}

/// Dominant weights `μ − Σ nᵢαᵢ`, sorted by decreasing `(·,ρ)`; affine
/// systems stop at grade `−depth` below `μ`.
pub fn dominant_weight_lattice(rs: &RootSystem, mu: &Weight, depth: u32) -> Result<Vec<Weight>> {
    rs.check_weight(mu)?;
    if !rs.is_dominant(mu) {
        return domain(format!("{mu} is not dominant"));
    }
    let mut out = if rs.is_affine() { affine_dominant_lattice(rs, mu, depth)? } else { finite_dominant_lattice(rs, mu) };
    sort_by_rho(rs, &mut out);
    Ok(out)
}

fn finite_dominant_lattice(rs: &RootSystem, mu: &Weight) -> Vec<Weight> {
    let roots = rs.finite_positive_roots();
    let mut seen = BTreeSet::from([mu.clone()]);
    let mut queue = VecDeque::from([mu.clone()]);
    while let Some(x) = queue.pop_front() {
        for a in roots {
            let y = &x - a;
            if rs.is_dominant(&y) && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Dominant weights of level `k` are `Σ lᵢωᵢ` with `Σ aᵢ∨lᵢ ≤ k`; each finite
/// part in the root class of `μ` appears at every grade from the first one
/// reachable from `μ` down to the truncation.
fn affine_dominant_lattice(rs: &RootSystem, mu: &Weight, depth: u32) -> Result<Vec<Weight>> {
    let fin = rs.finite_part();
    let level = mu.level();
    if !level.is_integer() || level.is_negative() {
        return domain("affine highest weight needs a nonnegative integral level");
    }
    let k = level.to_integer();
    let comarks = rs.comarks().expect("affine systems are simple")[1..].to_vec();
    let (_, marks, _) = rs.highest_root_and_marks()?;
    let mu_bar = mu.finite_part();
    let mut out = Vec::new();
    let mut labels = alloc::vec![0i64; fin.num_simple()];
    enumerate_labels(&comarks, k, 0, &mut labels, &mut |l| {
        let xi_bar = fin.weight(l).expect("labels sized to rank");
        let diff = fin.simple_coords(&(&mu_bar - &xi_bar));
        if diff.iter().any(|c| !c.is_integer()) {
            return;
        }
        let mut n_min = 0i64;
        for (c, a) in diff.iter().zip(&marks) {
            let need = (-c.to_integer()).div_euclid(*a) + i64::from((-c.to_integer()).rem_euclid(*a) != 0);
            n_min = n_min.max(need);
        }
        for n0 in n_min..=depth as i64 {
            out.push(xi_bar.with_affine(level, mu.grade() - rat(n0)));
        }
    });
    Ok(out)
}

fn enumerate_labels(comarks: &[i64], budget: i64, i: usize, cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if i == comarks.len() {
        f(cur);
        return;
    }
    let mut l = 0;
    while l * comarks[i] <= budget {
        cur[i] = l;
        enumerate_labels(comarks, budget - l * comarks[i], i + 1, cur, f);
        l += 1;
    }
    cur[i] = 0;
}

/// Weyl dimension formula `Π (μ+ρ,α)/(ρ,α)` for a dominant weight of a finite system.
pub fn dimension(rs: &RootSystem, mu: &Weight) -> Result<Multiplicity> {
    rs.check_weight(mu)?;
    if rs.is_affine() {
        return domain("affine modules are infinite-dimensional");
    }
    if !rs.is_dominant(mu) {
        return domain(format!("{mu} is not dominant"));
    }
    let shifted = mu + rs.rho();
    let mut num = BigRational::one();
    for a in rs.finite_positive_roots() {
        num *= big(shifted.dot(a) / rs.rho().dot(a));
    }
    if !num.is_integer() {
        return domain(format!("{mu} is not integral"));
    }
    Ok(num.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Series;

    fn rs(s: Series, n: usize) -> RootSystem {
        RootSystem::simple(s, n).unwrap()
    }

    #[test]
    fn a2_adjoint_zero_weight() {
        let a2 = rs(Series::A, 2);
        let m = HighestWeightModule::irreducible(&a2, a2.weight(&[1, 1]).unwrap()).unwrap();
        let zero = a2.zero();
        assert_eq!(m.multiplicities_recurrence().unwrap().get(&zero), BigInt::from(2));
        assert_eq!(m.multiplicities_freudenthal().unwrap().get(&zero), BigInt::from(2));
    }

    #[test]
    fn lattices() {
        let a1 = rs(Series::A, 1);
        let l = dominant_weight_lattice(&a1, &a1.weight(&[5]).unwrap(), 0).unwrap();
        let labels: Vec<Vec<i64>> = l.iter().map(|w| a1.integer_labels(w).unwrap()).collect();
        assert_eq!(labels, alloc::vec![alloc::vec![5], alloc::vec![3], alloc::vec![1]]);
        let b2 = rs(Series::B, 2);
        assert_eq!(dominant_weight_lattice(&b2, &b2.zero(), 0).unwrap(), alloc::vec![b2.zero()]);
        let l = dominant_weight_lattice(&b2, &Weight::from_ints(&[1, 0]), 0).unwrap();
        assert_eq!(l, alloc::vec![Weight::from_ints(&[1, 0]), Weight::from_ints(&[0, 0])]);
    }

    #[test]
    fn b2_vector_module() {
        let b2 = rs(Series::B, 2);
        let m = HighestWeightModule::irreducible(&b2, b2.weight(&[1, 0]).unwrap()).unwrap();
        let ch = m.character().unwrap();
        assert_eq!(ch.len(), 5);
        assert_eq!(ch.total(), BigInt::from(5));
        assert_eq!(m.dimension().unwrap(), BigInt::from(5));
    }

    #[test]
    fn dimensions() {
        let b2 = rs(Series::B, 2);
        let expect = [([4, 0], 55), ([2, 2], 81), ([0, 4], 35), ([1, 2], 35), ([2, 0], 14), ([0, 2], 10), ([3, 0], 30), ([0, 0], 1)];
        for (l, d) in expect {
            assert_eq!(dimension(&b2, &b2.weight(&l).unwrap()).unwrap(), BigInt::from(d));
        }
        assert!(dimension(&b2, &b2.weight(&[-1, 0]).unwrap()).is_err());
    }

    #[test]
    fn verma_a1_is_one_everywhere() {
        let a1 = rs(Series::A, 1);
        let m = HighestWeightModule::verma(&a1, a1.zero()).unwrap().with_depth(6);
        let ch = m.multiplicities_recurrence().unwrap();
        assert_eq!(ch.len(), 7);
        assert!(ch.iter().all(|(_, v)| v.is_one()));
        assert_eq!(m.singular_element().unwrap().len(), 1);
        assert!(m.multiplicities_freudenthal().is_err());
    }

    #[test]
    fn singular_elements() {
        let a1 = rs(Series::A, 1);
        let m = HighestWeightModule::irreducible(&a1, a1.weight(&[3]).unwrap()).unwrap();
        let s = m.singular_element().unwrap();
        assert_eq!(s.get(&a1.weight(&[3]).unwrap()), BigInt::from(1));
        assert_eq!(s.get(&a1.weight(&[-5]).unwrap()), BigInt::from(-1));
        let b4 = rs(Series::B, 4);
        let m = HighestWeightModule::irreducible(&b4, b4.weight(&[1, 1, 1, 1]).unwrap()).unwrap();
        assert_eq!(m.singular_element().unwrap().len(), 384);
    }

    #[test]
    fn affine_a1_basic_module_is_partitions() {
        let a1 = RootSystem::affine_extension(&rs(Series::A, 1)).unwrap();
        let mu = a1.weight(&[1, 0]).unwrap();
        let m = HighestWeightModule::irreducible(&a1, mu.clone()).unwrap();
        let rec = m.multiplicities_recurrence().unwrap();
        let fr = m.multiplicities_freudenthal().unwrap();
        assert_eq!(rec, fr);
        let partitions = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, p) in partitions.iter().enumerate() {
            assert_eq!(rec.get(&mu.shift_grade(rat(-(n as i64)))), BigInt::from(*p));
        }
    }

    #[test]
    fn tensor_of_a1() {
        let a1 = rs(Series::A, 1);
        let f = |l| ModuleDescriptor::Highest(HighestWeightModule::irreducible(&a1, a1.weight(&[l]).unwrap()).unwrap());
        let ch = ModuleDescriptor::Tensor(alloc::vec![f(5), f(3)]).character().unwrap();
        assert_eq!(ch.total(), BigInt::from(24));
        let sum = ModuleDescriptor::Sum(alloc::vec![f(8), f(6), f(4), f(2)]).character().unwrap();
        assert_eq!(ch, sum);
        assert_eq!(f(0).character().unwrap(), FormalElement::monomial(a1.zero(), 1));
    }
}
