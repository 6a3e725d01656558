//! Root systems of finite and non-twisted affine algebras.
//!
//! Simple roots are given in the orthogonal Bourbaki basis. Affine systems
//! list `α₀ = δ − θ` first and keep the underlying finite system alongside.
//! For an affine extension the bilinear form pairs level and grade with the
//! factor `c = (θ,θ)/2`, so that `(α₀,α₀) = (θ,θ)` and `(ω₀,α₀∨) = 1` hold for
//! every series, including `C` and `G` whose Bourbaki long roots are not of
//! norm 2.

use alloc::boxed::Box;
use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg;
use crate::weight::{frac, rat, Rational, Weight};
use crate::{domain, Result};

/// Default truncation grade of affine computations.
pub const DEFAULT_GRADE_LIMIT: u32 = 10;

const MAX_POSITIVE_ROOTS: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// Provenance of a root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tag {
    Simple(Series, usize),
    Sum(Vec<(Series, usize)>),
    Explicit,
    Empty,
}

/// An immutable root system with all derived data computed at construction.
#[derive(Clone, Debug)]
pub struct RootSystem {
    simple: Vec<Weight>,
    norms: Vec<Rational>,
    dim: usize,
    tag: Tag,
    finite: Option<Box<RootSystem>>,
    grade_limit: u32,
    scale: Rational,
    cartan: Vec<Vec<i64>>,
    fundamental: Vec<Weight>,
    rho: Weight,
    finite_positive: Vec<Weight>,
    comarks: Option<Vec<i64>>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.simple == other.simple && self.dim == other.dim && self.grade_limit == other.grade_limit
    }
}

impl Eq for RootSystem {}

fn e(dim: usize, entries: &[(usize, Rational)]) -> Weight {
    let mut c = alloc::vec![Rational::zero(); dim];
    for &(i, v) in entries {
        c[i] = v;
    }
    Weight::finite(c)
}

fn bourbaki(series: Series, n: usize) -> Result<(Vec<Weight>, usize)> {
    let one = rat(1);
    let m1 = rat(-1);
    let diff = |dim: usize, i: usize| e(dim, &[(i, one), (i + 1, m1)]);
    let ok = match series {
        Series::A => n >= 1,
        Series::B | Series::C => n >= 2,
        Series::D => n >= 3,
        Series::E => (6..=8).contains(&n),
        Series::F => n == 4,
        Series::G => n == 2,
    };
    if !ok {
        return domain(format!("no simple algebra {}{}", series.letter(), n));
    }
    Ok(match series {
        Series::A => ((0..n).map(|i| diff(n + 1, i)).collect(), n + 1),
        Series::B => {
            let mut r: Vec<Weight> = (0..n - 1).map(|i| diff(n, i)).collect();
            r.push(e(n, &[(n - 1, one)]));
            (r, n)
        }
        Series::C => {
            let mut r: Vec<Weight> = (0..n - 1).map(|i| diff(n, i)).collect();
            r.push(e(n, &[(n - 1, rat(2))]));
            (r, n)
        }
        Series::D => {
            let mut r: Vec<Weight> = (0..n - 1).map(|i| diff(n, i)).collect();
            r.push(e(n, &[(n - 2, one), (n - 1, one)]));
            (r, n)
        }
        Series::E => {
            let h = frac(1, 2);
            let mut r = alloc::vec![
                Weight::finite(alloc::vec![h, -h, -h, -h, -h, -h, -h, h]),
                e(8, &[(0, one), (1, one)]),
            ];
            r.extend((0..n - 2).map(|i| e(8, &[(i, m1), (i + 1, one)])));
            (r, 8)
        }
        Series::F => {
            let h = frac(1, 2);
            (
                alloc::vec![
                    e(4, &[(1, one), (2, m1)]),
                    e(4, &[(2, one), (3, m1)]),
                    e(4, &[(3, one)]),
                    Weight::finite(alloc::vec![h, -h, -h, -h]),
                ],
                4,
            )
        }
        Series::G => (alloc::vec![e(3, &[(0, one), (1, m1)]), e(3, &[(0, rat(-2)), (1, one), (2, one)])], 3),
    })
}

impl RootSystem {
    /// Simple algebra of the given series and rank.
    pub fn simple(series: Series, rank: usize) -> Result<RootSystem> {
        let (roots, dim) = bourbaki(series, rank)?;
        Self::build_finite(roots, dim, Tag::Simple(series, rank))
    }

    /// The system with no roots in a zero-dimensional ambient space.
    pub fn empty() -> RootSystem {
        Self::build_finite(Vec::new(), 0, Tag::Empty).expect("empty system")
    }

    /// Finite system generated by explicitly given simple roots.
    pub fn from_roots(roots: Vec<Weight>) -> Result<RootSystem> {
        let Some(first) = roots.first() else {
            return Ok(Self::empty());
        };
        let dim = first.dim();
        if roots.iter().any(|r| r.is_affine() || r.dim() != dim) {
            return domain("explicit simple roots must be finite weights of one dimension");
        }
        Self::build_finite(roots, dim, Tag::Explicit)
    }

    /// Explicit finite system whose ambient dimension is given even when no
    /// roots are present.
    pub fn from_roots_in(roots: Vec<Weight>, dim: usize) -> Result<RootSystem> {
        if roots.iter().any(|r| r.is_affine() || r.dim() != dim) {
            return domain("explicit simple roots must be finite weights of one dimension");
        }
        Self::build_finite(roots, dim, Tag::Explicit)
    }

    fn build_finite(simple: Vec<Weight>, dim: usize, tag: Tag) -> Result<RootSystem> {
        let norms: Vec<Rational> = simple.iter().map(|a| a.dot(a)).collect();
        if norms.iter().any(|n| !n.is_positive()) {
            return domain("simple roots must have positive norm");
        }
        let vecs: Vec<Vec<Rational>> = simple.iter().map(|w| w.coords().to_vec()).collect();
        if linalg::rank(&vecs) != simple.len() {
            return domain("simple roots are linearly dependent");
        }
        let cartan = cartan_of(&simple, &norms, Rational::one())?;
        let n = simple.len();
        let a: Vec<Vec<Rational>> = cartan.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        let inv = linalg::inverse(&a).ok_or_else(|| crate::Error::Domain("degenerate Cartan matrix".into()))?;
        let fundamental: Vec<Weight> = (0..n)
            .map(|i| {
                let mut w = Weight::zero_finite(dim);
                for j in 0..n {
                    w = w.add_unchecked(&simple[j], inv[i][j]);
                }
                w
            })
            .collect();
        let rho = fundamental.iter().fold(Weight::zero_finite(dim), |acc, w| acc.add_unchecked(w, Rational::one()));
        let mut rs = RootSystem {
            simple,
            norms,
            dim,
            tag,
            finite: None,
            grade_limit: DEFAULT_GRADE_LIMIT,
            scale: Rational::one(),
            cartan,
            fundamental,
            rho,
            finite_positive: Vec::new(),
            comarks: None,
        };
        rs.finite_positive = rs.close_positive_roots()?;
        if rs.is_irreducible() && n > 0 {
            let (theta, marks, comarks) = rs.compute_marks();
            let _ = (theta, marks);
            rs.comarks = Some(comarks);
        }
        Ok(rs)
    }

    fn close_positive_roots(&self) -> Result<Vec<Weight>> {
        let mut seen: BTreeSet<Weight> = self.simple.iter().cloned().collect();
        let mut queue: VecDeque<Weight> = self.simple.iter().cloned().collect();
        while let Some(b) = queue.pop_front() {
            for i in 0..self.simple.len() {
                let r = self.reflect_simple(i, &b);
                if r == b || seen.contains(&r) {
                    continue;
                }
                if self.simple_coords(&r).iter().all(|c| !c.is_negative()) {
                    if seen.len() >= MAX_POSITIVE_ROOTS {
                        return domain("root system is not of finite type");
                    }
                    seen.insert(r.clone());
                    queue.push_back(r);
                }
            }
        }
        let mut roots: Vec<Weight> = seen.into_iter().collect();
        roots.sort_by(|a, b| self.height(a).cmp(&self.height(b)).then_with(|| a.cmp(b)));
        Ok(roots)
    }

    fn is_irreducible(&self) -> bool {
        let n = self.simple.len();
        if n == 0 {
            return false;
        }
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && self.cartan[i][j] != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn compute_marks(&self) -> (Weight, Vec<i64>, Vec<i64>) {
        let theta = self.finite_positive.last().expect("nonempty").clone();
        let marks: Vec<i64> = self.simple_coords(&theta).iter().map(|c| c.to_integer()).collect();
        let tn = theta.dot(&theta);
        let comarks = marks.iter().zip(&self.norms).map(|(m, n)| (rat(*m) * *n / tn).to_integer()).collect();
        (theta, marks, comarks)
    }

    /// Direct sum with block-orthogonal ambient coordinates.
    pub fn direct_sum(a: &RootSystem, b: &RootSystem) -> Result<RootSystem> {
        if a.is_affine() || b.is_affine() {
            return Err(crate::Error::Unsupported("direct sums of affine systems".into()));
        }
        if b.simple.is_empty() && b.dim == 0 {
            return Ok(a.clone());
        }
        if a.simple.is_empty() && a.dim == 0 {
            return Ok(b.clone());
        }
        let dim = a.dim + b.dim;
        let mut roots: Vec<Weight> = a.simple.iter().map(|r| r.embed(0, dim)).collect();
        roots.extend(b.simple.iter().map(|r| r.embed(a.dim, dim)));
        let parts = |t: &Tag| -> Option<Vec<(Series, usize)>> {
            match t {
                Tag::Simple(s, n) => Some(alloc::vec![(*s, *n)]),
                Tag::Sum(v) => Some(v.clone()),
                _ => None,
            }
        };
        let tag = match (parts(&a.tag), parts(&b.tag)) {
            (Some(mut x), Some(y)) => {
                x.extend(y);
                Tag::Sum(x)
            }
            _ => Tag::Explicit,
        };
        Self::build_finite(roots, dim, tag)
    }

    /// Non-twisted affine extension of a simple finite system.
    pub fn affine_extension(g: &RootSystem) -> Result<RootSystem> {
        if g.is_affine() {
            return domain("system is already affine");
        }
        let Some(comarks) = g.comarks.clone() else {
            return domain("affine extension needs a simple finite system");
        };
        let theta = g.highest_root().expect("simple");
        let scale = theta.dot(&theta) / rat(2);
        let dim = g.dim;
        let lift = |w: &Weight| w.with_affine(Rational::zero(), Rational::zero());
        let alpha0 = (-&theta).with_affine(Rational::zero(), Rational::one());
        let mut simple = alloc::vec![alpha0];
        simple.extend(g.simple.iter().map(lift));
        let mut norms = alloc::vec![theta.dot(&theta)];
        norms.extend(g.norms.iter().copied());
        let cartan = cartan_of(&simple, &norms, scale)?;
        let omega0 = Weight::omega0(dim);
        let mut fundamental = alloc::vec![omega0.clone()];
        for (w, c) in g.fundamental.iter().zip(&comarks) {
            fundamental.push(lift(w).add_unchecked(&omega0, rat(*c)));
        }
        let rho = fundamental.iter().fold(Weight::zero_affine(dim), |acc, w| acc.add_unchecked(w, Rational::one()));
        Ok(RootSystem {
            simple,
            norms,
            dim,
            tag: g.tag.clone(),
            finite: Some(Box::new(g.clone())),
            grade_limit: DEFAULT_GRADE_LIMIT,
            scale,
            cartan,
            fundamental,
            rho,
            finite_positive: g.finite_positive.clone(),
            comarks: Some(comarks),
        })
    }

    pub fn with_grade_limit(mut self, limit: u32) -> Result<RootSystem> {
        if limit == 0 {
            return domain("grade limit must be at least 1");
        }
        self.grade_limit = limit;
        Ok(self)
    }

    pub fn is_affine(&self) -> bool {
        self.finite.is_some()
    }

    /// Underlying finite system (itself for finite systems).
    pub fn finite_part(&self) -> &RootSystem {
        self.finite.as_deref().unwrap_or(self)
    }

    /// Rank of the finite part.
    pub fn rank(&self) -> usize {
        self.finite_part().simple.len()
    }

    pub fn num_simple(&self) -> usize {
        self.simple.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tag(&self) -> &Tag {
        &self.tag
    }

    pub fn grade_limit(&self) -> u32 {
        self.grade_limit
    }

    /// Factor multiplying the level/grade pairing in the bilinear form.
    pub fn form_scale(&self) -> Rational {
        self.scale
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple
    }

    /// `(αᵢ, αᵢ)` for each simple root.
    pub fn simple_norms(&self) -> &[Rational] {
        &self.norms
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn zero(&self) -> Weight {
        if self.is_affine() {
            Weight::zero_affine(self.dim)
        } else {
            Weight::zero_finite(self.dim)
        }
    }

    pub fn delta(&self) -> Weight {
        Weight::delta(self.dim)
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Rational {
        a.inner_scaled(b, self.scale)
    }

    /// Positive roots of the finite part (finite weights), sorted by height.
    pub fn finite_positive_roots(&self) -> &[Weight] {
        &self.finite_positive
    }

    /// Positive roots with multiplicities, affine ones truncated at the
    /// system's grade limit.
    pub fn positive_roots(&self) -> Vec<(Weight, u32)> {
        self.positive_roots_to(self.grade_limit as i64)
    }

    /// Positive roots with multiplicities up to grade `limit`.
    pub fn positive_roots_to(&self, limit: i64) -> Vec<(Weight, u32)> {
        if !self.is_affine() {
            return self.finite_positive.iter().map(|r| (r.clone(), 1)).collect();
        }
        let rank = self.rank() as u32;
        let mut out = Vec::new();
        for n in 0..=limit.max(0) {
            let g = rat(n);
            for a in &self.finite_positive {
                out.push((a.with_affine(Rational::zero(), g), 1));
            }
            if n >= 1 {
                for a in &self.finite_positive {
                    out.push(((-a).with_affine(Rational::zero(), g), 1));
                }
                out.push((self.delta().scale(g), rank));
            }
        }
        out
    }

    /// Highest root of a simple finite system (of the finite part if affine).
    pub fn highest_root(&self) -> Option<Weight> {
        let f = self.finite_part();
        f.comarks.as_ref()?;
        f.finite_positive.last().cloned()
    }

    /// Highest root, marks and comarks of a simple finite system.
    pub fn highest_root_and_marks(&self) -> Result<(Weight, Vec<i64>, Vec<i64>)> {
        let f = self.finite_part();
        if f.comarks.is_none() {
            return domain("marks are defined for simple systems only");
        }
        Ok(f.compute_marks())
    }

    /// Comarks of all simple roots, `α₀` first for affine systems.
    pub fn comarks(&self) -> Option<Vec<i64>> {
        let c = self.comarks.clone()?;
        if self.is_affine() {
            let mut v = alloc::vec![1];
            v.extend(c);
            Some(v)
        } else {
            Some(c)
        }
    }

    pub fn weight(&self, labels: &[i64]) -> Result<Weight> {
        let l: Vec<Rational> = labels.iter().map(|&x| rat(x)).collect();
        self.weight_from_labels(&l)
    }

    /// `Σ lᵢ ωᵢ`.
    pub fn weight_from_labels(&self, labels: &[Rational]) -> Result<Weight> {
        if labels.len() != self.simple.len() {
            return domain(format!("expected {} Dynkin labels, got {}", self.simple.len(), labels.len()));
        }
        Ok(self.fundamental.iter().zip(labels).fold(self.zero(), |acc, (w, l)| acc.add_unchecked(w, *l)))
    }

    /// Label at simple root `i`: `2(w,αᵢ)/(αᵢ,αᵢ)`.
    pub fn label(&self, w: &Weight, i: usize) -> Rational {
        rat(2) * self.inner(w, &self.simple[i]) / self.norms[i]
    }

    pub fn labels(&self, w: &Weight) -> Vec<Rational> {
        (0..self.simple.len()).map(|i| self.label(w, i)).collect()
    }

    /// Integer labels, or `None` if some label is fractional.
    pub fn integer_labels(&self, w: &Weight) -> Option<Vec<i64>> {
        self.labels(w).into_iter().map(|l| if l.is_integer() { Some(l.to_integer()) } else { None }).collect()
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        (0..self.simple.len()).all(|i| !self.label(w, i).is_negative())
    }

    /// Coefficients of `β` in the simple-root basis (assumes `β` lies in
    /// their span).
    pub fn simple_coords(&self, beta: &Weight) -> Vec<Rational> {
        (0..self.simple.len()).map(|i| rat(2) * self.inner(beta, &self.fundamental[i]) / self.norms[i]).collect()
    }

    pub fn height(&self, beta: &Weight) -> Rational {
        self.simple_coords(beta).into_iter().fold(Rational::zero(), |a, b| a + b)
    }

    /// Reflection in simple root `i`.
    pub fn reflect_simple(&self, i: usize, w: &Weight) -> Weight {
        let l = self.label(w, i);
        if l.is_zero() {
            w.clone()
        } else {
            w.add_unchecked(&self.simple[i], -l)
        }
    }

    /// Whether `w` has the same kind and dimension as this system's weights.
    pub fn accepts(&self, w: &Weight) -> bool {
        w.dim() == self.dim && w.is_affine() == self.is_affine()
    }

    pub(crate) fn check_weight(&self, w: &Weight) -> Result<()> {
        if self.accepts(w) {
            Ok(())
        } else {
            Err(crate::Error::Mismatch(format!(
                "weight of dimension {} ({}) for system {} of dimension {}",
                w.dim(),
                if w.is_affine() { "affine" } else { "finite" },
                self,
                self.dim
            )))
        }
    }

    /// Order of the Weyl group of a finite system.
    pub fn weyl_order(&self) -> Option<u128> {
        if self.is_affine() {
            return None;
        }
        // Heights of positive roots form the partition dual to the exponents.
        let mut counts: Vec<usize> = Vec::new();
        for r in &self.finite_positive {
            let h = self.height(r).to_integer() as usize;
            if counts.len() < h {
                counts.resize(h, 0);
            }
            counts[h - 1] += 1;
        }
        let mut order: u128 = 1;
        for h in 1..=counts.len() {
            let k = counts[h - 1] - counts.get(h).copied().unwrap_or(0);
            for _ in 0..k {
                order *= h as u128 + 1;
            }
        }
        Some(order)
    }

    /// Display name such as `B2`, `A1+A1`, `G2^` or `explicit(3)`.
    pub fn name(&self) -> String {
        let base = match &self.tag {
            Tag::Simple(s, n) => format!("{}{}", s.letter(), n),
            Tag::Sum(v) => v.iter().map(|(s, n)| format!("{}{}", s.letter(), n)).collect::<Vec<_>>().join("+"),
            Tag::Explicit => format!("explicit({})", self.rank()),
            Tag::Empty => String::from("empty"),
        };
        if self.is_affine() {
            format!("{base}^")
        } else {
            base
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn cartan_of(simple: &[Weight], norms: &[Rational], scale: Rational) -> Result<Vec<Vec<i64>>> {
    let n = simple.len();
    let mut out = alloc::vec![alloc::vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = rat(2) * simple[i].inner_scaled(&simple[j], scale) / norms[j];
            if !v.is_integer() {
                return domain("simple roots do not form a crystallographic system");
            }
            out[i][j] = v.to_integer().to_i64().unwrap_or(i64::MAX);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    fn b2() -> RootSystem {
        RootSystem::simple(Series::B, 2).unwrap()
    }

    #[test]
    fn b2_data() {
        let rs = b2();
        assert_eq!(rs.simple_roots(), &[w(&[1, -1]), w(&[0, 1])]);
        assert_eq!(rs.cartan_matrix(), &[alloc::vec![2, -2], alloc::vec![-1, 2]]);
        assert_eq!(rs.fundamental_weights(), &[w(&[1, 0]), Weight::finite(alloc::vec![frac(1, 2), frac(1, 2)])]);
        assert_eq!(rs.rho(), &Weight::finite(alloc::vec![frac(3, 2), frac(1, 2)]));
        assert_eq!(rs.weight(&[1, 2]).unwrap(), w(&[2, 1]));
        let roots: Vec<Weight> = rs.positive_roots().into_iter().map(|r| r.0).collect();
        assert_eq!(roots.len(), 4);
        for r in [w(&[1, -1]), w(&[0, 1]), w(&[1, 0]), w(&[1, 1])] {
            assert!(roots.contains(&r));
        }
        let (theta, marks, comarks) = rs.highest_root_and_marks().unwrap();
        assert_eq!(theta, w(&[1, 1]));
        assert_eq!(marks, alloc::vec![1, 2]);
        assert_eq!(comarks, alloc::vec![1, 1]);
        assert_eq!(rs.labels(rs.rho()), alloc::vec![rat(1), rat(1)]);
    }

    #[test]
    fn a1_and_a3() {
        let a1 = RootSystem::simple(Series::A, 1).unwrap();
        assert_eq!(a1.simple_roots(), &[w(&[1, -1])]);
        assert_eq!(a1.rho(), &Weight::finite(alloc::vec![frac(1, 2), frac(-1, 2)]));
        assert_eq!(a1.cartan_matrix(), &[alloc::vec![2]]);
        let a3 = RootSystem::simple(Series::A, 3).unwrap();
        assert_eq!(a3.labels(&w(&[-2, 2, 1, -1])), alloc::vec![rat(-4), rat(1), rat(2)]);
    }

    #[test]
    fn g2_cartan_and_comarks() {
        let g2 = RootSystem::simple(Series::G, 2).unwrap();
        assert_eq!(g2.cartan_matrix(), &[alloc::vec![2, -1], alloc::vec![-3, 2]]);
        let n = g2.simple_norms();
        assert_eq!(n[1] / n[0], rat(3));
        let (_, _, comarks) = g2.highest_root_and_marks().unwrap();
        assert_eq!(comarks.iter().sum::<i64>() + 1, 4);
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            (Series::A, 4, 10),
            (Series::B, 3, 9),
            (Series::C, 4, 16),
            (Series::D, 4, 12),
            (Series::D, 5, 20),
            (Series::G, 2, 6),
            (Series::F, 4, 24),
            (Series::E, 6, 36),
            (Series::E, 7, 63),
            (Series::E, 8, 120),
        ];
        for (s, n, count) in cases {
            let rs = RootSystem::simple(s, n).unwrap();
            assert_eq!(rs.finite_positive_roots().len(), count, "{}{}", s.letter(), n);
        }
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(b2().weyl_order(), Some(8));
        assert_eq!(RootSystem::simple(Series::B, 4).unwrap().weyl_order(), Some(384));
        assert_eq!(RootSystem::simple(Series::A, 3).unwrap().weyl_order(), Some(24));
        assert_eq!(RootSystem::simple(Series::G, 2).unwrap().weyl_order(), Some(12));
        assert_eq!(RootSystem::simple(Series::F, 4).unwrap().weyl_order(), Some(1152));
        assert_eq!(RootSystem::simple(Series::E, 6).unwrap().weyl_order(), Some(51840));
    }

    #[test]
    fn invalid_pairs() {
        assert!(RootSystem::simple(Series::B, 1).is_err());
        assert!(RootSystem::simple(Series::E, 9).is_err());
        assert!(RootSystem::simple(Series::G, 3).is_err());
        assert!(RootSystem::simple(Series::A, 0).is_err());
    }

    #[test]
    fn direct_sums() {
        let a1 = RootSystem::simple(Series::A, 1).unwrap();
        let s = RootSystem::direct_sum(&a1, &a1).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.cartan_matrix(), &[alloc::vec![2, 0], alloc::vec![0, 2]]);
        assert_eq!(s.name(), "A1+A1");
        assert_eq!(RootSystem::direct_sum(&a1, &RootSystem::empty()).unwrap(), a1);
        let b = b2();
        let mut q = b.clone();
        for _ in 0..3 {
            q = RootSystem::direct_sum(&q, &b).unwrap();
        }
        assert_eq!(q.dim(), 8);
        assert_eq!(q.num_simple(), 8);
        assert!(RootSystem::affine_extension(&s).is_err());
    }

    #[test]
    fn affine_b2() {
        let rs = RootSystem::affine_extension(&b2()).unwrap();
        assert_eq!(rs.grade_limit(), 10);
        assert_eq!(rs.simple_roots()[0], w(&[-1, -1]).with_affine(rat(0), rat(1)));
        assert_eq!(rs.inner(&rs.simple_roots()[0], &rs.delta()), rat(0));
        assert!(rs.labels(&rs.delta()).iter().all(|l| l.is_zero()));
        let om = rs.fundamental_weights();
        assert_eq!(om[2].level(), rat(1));
        for (i, o) in om.iter().enumerate() {
            for j in 0..3 {
                assert_eq!(rs.label(o, j), if i == j { rat(1) } else { rat(0) });
            }
        }
        assert!(RootSystem::affine_extension(&rs).is_err());
    }

    #[test]
    fn affine_a1_and_a2() {
        let a1 = RootSystem::affine_extension(&RootSystem::simple(Series::A, 1).unwrap()).unwrap();
        assert_eq!(a1.simple_roots()[0], w(&[-1, 1]).with_affine(rat(0), rat(1)));
        assert_eq!(a1.cartan_matrix(), &[alloc::vec![2, -2], alloc::vec![-2, 2]]);
        assert_eq!(a1.positive_roots_to(2).len(), 7);
        let a2 = RootSystem::affine_extension(&RootSystem::simple(Series::A, 2).unwrap()).unwrap();
        assert_eq!(a2.rho().level(), rat(3));
        assert_eq!(a2.weight(&[1, 1, 2]).unwrap().level(), rat(4));
    }

    #[test]
    fn affine_c_and_g_fundamental_duality() {
        for (s, n) in [(Series::C, 3), (Series::G, 2), (Series::F, 4)] {
            let rs = RootSystem::affine_extension(&RootSystem::simple(s, n).unwrap()).unwrap();
            for (i, o) in rs.fundamental_weights().iter().enumerate() {
                for j in 0..rs.num_simple() {
                    assert_eq!(rs.label(o, j), if i == j { rat(1) } else { rat(0) });
                }
            }
            for r in rs.positive_roots_to(1) {
                assert!(rs.simple_coords(&r.0).iter().all(|c| c.is_integer() && !c.is_negative()));
            }
        }
    }
}
