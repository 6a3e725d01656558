//! Branching coefficients through the injection fan, and tensor products.
//!
//! For a subalgebra `a ⊂ g` let `a⊥` be the subsystem of `g`-roots
//! orthogonal to `a`, `h⊥` the part of the Cartan subalgebra orthogonal to
//! both, and `π` the orthogonal projection onto the weight space of
//! `ã = a ⊕ h⊥`. Splitting the Weyl numerator over cosets of `W⊥` gives
//!
//! ```text
//! K · P = A,   P = Π_γ (1 − e^{−γ})^{n(γ) − mult_ã(γ)},
//!              A = Σ_{u∈U} ε(u) dim L⊥^{π⊥(u(μ+ρ)) − ρ⊥} e^{π(u(μ+ρ) − ρ)},
//! ```
//!
//! where `n(γ)` counts the positive roots of `g` outside `a⊥` projecting to
//! `γ` and `K = Σ_ν b_ν Σ_{w∈W_a} ε(w) e^{w(ν+ρ_a)−ρ_a}`. Writing
//! `P = −Σ s(γ) e^{−γ}` with lowest vector `γ₀`, `K` is recovered term by term
//! from the top, which is the recurrence
//! `k_ξ = −(A_{ξ−γ₀} + Σ_{γ≠0} s(γ+γ₀) k_{ξ+γ}) / s(γ₀)` unfolded.
//! The branching coefficient `b_ν` is `k_ν` for `a`-dominant `ν`.
//!
//! Affine pairs share `δ`; the computation keeps grades down to `−limit`
//! below the highest weight, which is exact for every retained coefficient.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::formal::FormalElement;
use crate::linalg::{self, Vector};
use crate::modules::{self, big, HighestWeightModule};
use crate::root_system::RootSystem;
use crate::weight::{rat, Rational, Weight};
use crate::weyl;
use crate::{domain, Error, Multiplicity, Result};

const MAX_DIVISION_STEPS: usize = 50_000_000;

/// A subalgebra given by simple roots in the parent's finite coordinates.
///
/// For an affine parent the subalgebra is the non-twisted affine extension of
/// the finite subsystem, sharing `δ` with the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraSpec {
    roots: Vec<Weight>,
    affine: bool,
    cartan: bool,
}

impl SubalgebraSpec {
    pub fn new(parent: &RootSystem, roots: Vec<Weight>) -> Result<SubalgebraSpec> {
        let dim = parent.dim();
        for r in &roots {
            if r.is_affine() || r.dim() != dim {
                return Err(Error::Mismatch(format!("subalgebra root {r} is not a finite weight of dimension {dim}")));
            }
            if r.dot(r).is_zero() {
                return domain("subalgebra root of zero norm");
            }
        }
        let vecs: Vec<Vector> = roots.iter().map(|r| r.coords().to_vec()).collect();
        if linalg::rank(&vecs) != roots.len() {
            return domain("subalgebra roots are linearly dependent");
        }
        Ok(SubalgebraSpec { roots, affine: parent.is_affine(), cartan: false })
    }

    /// Regular subalgebra on the simple roots with the given indices
    /// (`1..=rank` of the finite part).
    pub fn parabolic(parent: &RootSystem, indices: &[usize]) -> Result<SubalgebraSpec> {
        let fin = parent.finite_part();
        let mut roots = Vec::new();
        for &i in indices {
            if i == 0 || i > fin.num_simple() {
                return domain(format!("simple root index {i} outside 1..={}", fin.num_simple()));
            }
            roots.push(fin.simple_roots()[i - 1].clone());
        }
        Self::new(parent, roots)
    }

    /// The Cartan subalgebra of the parent.
    pub fn cartan(parent: &RootSystem) -> SubalgebraSpec {
        SubalgebraSpec { roots: Vec::new(), affine: parent.is_affine(), cartan: true }
    }

    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn is_affine(&self) -> bool {
        self.affine
    }

    /// Root system of the subalgebra in the parent's ambient space.
    pub fn root_system(&self, parent: &RootSystem) -> Result<RootSystem> {
        let fin = RootSystem::from_roots_in(self.roots.clone(), parent.dim())?;
        if !self.affine {
            return Ok(fin);
        }
        if self.cartan || self.roots.is_empty() {
            return Err(Error::Unsupported("affine Cartan subalgebras".into()));
        }
        let sub = RootSystem::affine_extension(&fin)?.with_grade_limit(parent.grade_limit())?;
        if sub.form_scale() != parent.form_scale() {
            return domain("affine subalgebra level does not match the parent's (highest roots differ in length)");
        }
        Ok(sub)
    }
}

/// Subalgebra `a`, its orthogonal subsystem `a⊥` and the projections.
#[derive(Clone, Debug)]
pub struct OrthogonalDecomposition {
    parent: RootSystem,
    sub: RootSystem,
    perp: RootSystem,
    regular: bool,
    h_perp: Vec<Vector>,
    v_basis: Vec<Vector>,
    perp_basis: Vec<Vector>,
}

/// One representative `u ∈ U` with its contribution to the anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anchor {
    /// `u(μ+ρ) − ρ` in the parent.
    pub singular: Weight,
    /// `π(u(μ+ρ) − ρ)`.
    pub projected: Weight,
    pub parity: i8,
    /// Dimension of the `a⊥` module attached to `u`.
    pub dim: Multiplicity,
}

/// The injection fan: `P = −Σ s(γ) e^{−γ}`, stored relative to `γ₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub gamma0: Weight,
    /// `s(γ₀)`, always `±1`.
    pub s0: Multiplicity,
    /// `γ ↦ s(γ + γ₀)` for `γ ≠ 0`.
    pub terms: BTreeMap<Weight, Multiplicity>,
}

impl Fan {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Ordering key on the projected weight space: grade, then `(·,ρ_a)`, then
/// the coordinates. Linear in every component, hence translation invariant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct OrderKey {
    grade: Rational,
    height: Rational,
    weight: Weight,
}

impl OrthogonalDecomposition {
    pub fn new(parent: &RootSystem, spec: &SubalgebraSpec) -> Result<OrthogonalDecomposition> {
        if spec.affine != parent.is_affine() {
            return domain("subalgebra and parent must both be finite or both affine");
        }
        let sub = spec.root_system(parent)?;
        let fin = parent.finite_part();
        let perp_roots: Vec<Weight> = if spec.cartan {
            Vec::new()
        } else {
            let orth: Vec<Weight> = fin
                .finite_positive_roots()
                .iter()
                .filter(|a| spec.roots.iter().all(|r| a.dot(r).is_zero()))
                .cloned()
                .collect();
            indecomposables(&orth)
        };
        let perp = RootSystem::from_roots_in(perp_roots.clone(), parent.dim())?;
        let is_root = |r: &Weight| fin.finite_positive_roots().iter().any(|a| a == r || *a == -r);
        let regular = spec.roots.iter().all(is_root);
        if !regular && !perp_roots.is_empty() {
            return Err(Error::Unsupported(
                "non-regular subalgebras with a nonempty orthogonal subsystem".into(),
            ));
        }
        let a_vecs: Vec<Vector> = spec.roots.iter().map(|r| r.coords().to_vec()).collect();
        let p_vecs: Vec<Vector> = perp_roots.iter().map(|r| r.coords().to_vec()).collect();
        let h_perp = if regular {
            let mut gens = a_vecs.clone();
            gens.extend(p_vecs.iter().cloned());
            let skip = linalg::orthogonal_basis(&gens).len();
            gens.extend(fin.simple_roots().iter().map(|r| r.coords().to_vec()));
            linalg::orthogonal_basis(&gens).split_off(skip)
        } else {
            Vec::new()
        };
        let mut v_gens = a_vecs;
        v_gens.extend(h_perp.iter().cloned());
        Ok(OrthogonalDecomposition {
            parent: parent.clone(),
            sub,
            perp,
            regular,
            h_perp,
            v_basis: linalg::orthogonal_basis(&v_gens),
            perp_basis: linalg::orthogonal_basis(&p_vecs),
        })
    }

    pub fn parent(&self) -> &RootSystem {
        &self.parent
    }

    pub fn sub_system(&self) -> &RootSystem {
        &self.sub
    }

    /// The finite subsystem `a⊥`.
    pub fn perp_system(&self) -> &RootSystem {
        &self.perp
    }

    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn h_perp_dim(&self) -> usize {
        self.h_perp.len()
    }

    /// `π`: projection onto the weights of `ã`, keeping level and grade.
    pub fn project(&self, w: &Weight) -> Weight {
        w.with_coords(linalg::project(w.coords(), &self.v_basis))
    }

    /// `π⊥`: projection of the finite part onto the span of `a⊥`.
    pub fn project_perp(&self, w: &Weight) -> Weight {
        Weight::finite(linalg::project(w.coords(), &self.perp_basis))
    }

    /// `D_a = ρ_a − π(ρ)`.
    pub fn defect(&self) -> Weight {
        self.sub.rho() - &self.project(self.parent.rho())
    }

    /// `D⊥ = ρ⊥ − π⊥(ρ)`.
    pub fn defect_perp(&self) -> Weight {
        self.perp.rho() - &self.project_perp(self.parent.rho())
    }

    fn key(&self, w: &Weight) -> OrderKey {
        OrderKey { grade: w.grade(), height: self.sub.inner(w, self.sub.rho()), weight: w.clone() }
    }

    fn grade_floor(&self, top: &Weight, limit: u32) -> Option<Rational> {
        self.parent.is_affine().then(|| top.grade() - rat(limit as i64))
    }

    /// The product `P` with its exponents, truncated at grade `−limit`.
    pub fn fan_product(&self, limit: u32) -> Result<FormalElement> {
        let parent = &self.parent;
        let perp_roots: BTreeSet<Weight> = self.perp.finite_positive_roots().iter().cloned().collect();
        let mut count: BTreeMap<Weight, i64> = BTreeMap::new();
        for (alpha, mult) in parent.positive_roots_to(limit as i64) {
            if alpha.grade().is_zero() && alpha.level().is_zero() && perp_roots.contains(&alpha.finite_part()) {
                continue;
            }
            let g = self.project(&alpha);
            if g.is_zero() {
                return domain("a root outside the orthogonal subsystem projects to zero");
            }
            *count.entry(g).or_insert(0) += mult as i64;
        }
        let h = self.h_perp.len() as i64;
        for (beta, mult) in self.sub.positive_roots_to(limit as i64) {
            let m = if beta.is_affine() && beta.coords().iter().all(Zero::is_zero) { mult as i64 + h } else { mult as i64 };
            *count.entry(beta).or_insert(0) -= m;
        }
        let floor = self.grade_floor(&parent.zero(), limit);
        let keep = |w: &Weight| floor.is_none_or(|f| w.grade() >= f);
        let one = FormalElement::monomial(self.project(&parent.zero()), 1);
        let mut p = one;
        for (gamma, e) in count {
            if e < 0 {
                return domain(format!("subalgebra root {gamma} is not covered by the projected roots"));
            }
            if e == 0 {
                continue;
            }
            let mut binom = FormalElement::zero();
            let mut c = BigInt::one();
            for j in 0..=e {
                let w = gamma.scale(rat(-j));
                if keep(&w) {
                    binom.add_term(w, if j % 2 == 0 { c.clone() } else { -c.clone() });
                }
                c = c * BigInt::from(e - j) / BigInt::from(j + 1);
            }
            p = p.multiply_filtered(&binom, keep)?;
        }
        Ok(p)
    }

    /// The injection fan `Γ` with sign function and lowest vector.
    pub fn fan(&self, limit: u32) -> Result<Fan> {
        let p = self.fan_product(limit)?;
        let (lead, coef) = p
            .iter()
            .max_by(|a, b| self.key(a.0).cmp(&self.key(b.0)))
            .map(|(w, m)| (w.clone(), m.clone()))
            .ok_or_else(|| Error::Domain("empty fan product".into()))?;
        let gamma0 = -&lead;
        let terms = p
            .iter()
            .filter(|(w, _)| **w != lead)
            .map(|(w, m)| (&(-w) - &gamma0, -m.clone()))
            .collect();
        Ok(Fan { gamma0, s0: -coef, terms })
    }

    /// Representatives `u` with `π⊥(u(μ+ρ))` strictly dominant for `a⊥`.
    pub fn select_u(&self, mu: &Weight, limit: u32) -> Result<Vec<Anchor>> {
        let parent = &self.parent;
        parent.check_weight(mu)?;
        if !matches!(parent.integer_labels(mu), Some(l) if l.iter().all(|&x| x >= 0)) {
            return domain(format!("{mu} is not dominant integral"));
        }
        let rho = parent.rho();
        let top = mu + rho;
        let floor = self.grade_floor(mu, limit);
        let all: Vec<usize> = (0..parent.num_simple()).collect();
        let orbit = weyl::signed_orbit(parent, &top, &all, |x| floor.is_none_or(|f| x.grade() >= f));
        let perp_simple = self.perp.simple_roots();
        let perp_pos = self.perp.finite_positive_roots();
        let rho_perp = self.perp.rho();
        let mut out = Vec::new();
        for (x, parity) in orbit {
            if !perp_simple.iter().all(|b| x.dot(b).is_positive()) {
                continue;
            }
            let mut d = BigRational::one();
            for b in perp_pos {
                d *= big(x.dot(b) / rho_perp.dot(b));
            }
            if !d.is_integer() {
                return domain("non-integral dimension in the orthogonal subsystem");
            }
            let singular = &x - rho;
            out.push(Anchor { projected: self.project(&singular), singular, parity, dim: d.to_integer() });
        }
        Ok(out)
    }

    /// The anchor element `A`.
    pub fn anchor(&self, mu: &Weight, limit: u32) -> Result<FormalElement> {
        Ok(self
            .select_u(mu, limit)?
            .into_iter()
            .map(|a| {
                let c = if a.parity > 0 { a.dim } else { -a.dim };
                (a.projected, c)
            })
            .collect())
    }

    /// Signed coefficients `k_ξ` on the whole projected lattice.
    pub fn signed_coefficients(&self, mu: &Weight, limit: u32) -> Result<FormalElement> {
        let anchor = self.anchor(mu, limit)?;
        let p = self.fan_product(limit)?;
        let floor = self.grade_floor(mu, limit);
        divide(&anchor, &p, |w| self.key(w), floor)
    }

    /// Branching coefficients `b_ν` for `a`-dominant `ν`.
    pub fn branch(&self, mu: &Weight, limit: u32) -> Result<FormalElement> {
        let k = self.signed_coefficients(mu, limit)?;
        Ok(k.filter(|w| self.sub.is_dominant(w)))
    }
}

/// Exact division `A / P` in the ring of finite formal sums, leading terms
/// taken for the order given by `key`. Terms below `floor` are dropped.
fn divide(
    a: &FormalElement,
    p: &FormalElement,
    key: impl Fn(&Weight) -> OrderKey,
    floor: Option<Rational>,
) -> Result<FormalElement> {
    let (lead, lead_coef) = p
        .iter()
        .max_by(|x, y| key(x.0).cmp(&key(y.0)))
        .map(|(w, m)| (w.clone(), m.clone()))
        .ok_or_else(|| Error::Domain("division by zero".into()))?;
    let rest: Vec<(Weight, Multiplicity)> =
        p.iter().filter(|(w, _)| **w != lead).map(|(w, m)| (w - &lead, m.clone())).collect();
    let keep = |w: &Weight| floor.is_none_or(|f| w.grade() >= f);
    let mut rem: BTreeMap<OrderKey, Multiplicity> =
        a.iter().filter(|(w, _)| keep(w)).map(|(w, m)| (key(w), m.clone())).collect();
    let mut quotient = FormalElement::zero();
    let mut steps = 0usize;
    while let Some((k, r)) = rem.pop_last() {
        steps += 1;
        if steps > MAX_DIVISION_STEPS {
            return domain("branching recurrence did not terminate");
        }
        let (q, remainder) = r.div_rem(&lead_coef);
        if !remainder.is_zero() {
            return domain("non-integral branching coefficient");
        }
        let xi = &k.weight - &lead;
        for (d, m) in &rest {
            let eta = &k.weight + d;
            if !keep(&eta) {
                continue;
            }
            let key_eta = key(&eta);
            let v = rem.entry(key_eta.clone()).or_insert_with(BigInt::zero);
            *v -= &q * m;
            if v.is_zero() {
                rem.remove(&key_eta);
            }
        }
        quotient.add_term(xi, q);
    }
    Ok(quotient)
}

/// Simple roots of the subsystem spanned by a set of positive roots closed
/// under the parent's root operations: the elements that are not sums of two
/// others.
fn indecomposables(pos: &[Weight]) -> Vec<Weight> {
    let set: BTreeSet<&Weight> = pos.iter().collect();
    pos.iter()
        .filter(|r| !pos.iter().any(|a| a != *r && set.contains(&(*r - a))))
        .cloned()
        .collect()
}

/// Branching coefficients of `L^μ` restricted to `sub`, by the fan recurrence.
pub fn branch_coefficients(parent: &RootSystem, sub: &SubalgebraSpec, mu: &Weight, limit: u32) -> Result<FormalElement> {
    OrthogonalDecomposition::new(parent, sub)?.branch(mu, limit)
}

/// Branching of a finite module by projecting its full character and
/// removing subalgebra characters from the top.
pub fn branch_direct(parent: &RootSystem, sub: &SubalgebraSpec, mu: &Weight) -> Result<FormalElement> {
    if parent.is_affine() {
        return Err(Error::Unsupported("direct branching of affine modules".into()));
    }
    let dec = OrthogonalDecomposition::new(parent, sub)?;
    let ch = HighestWeightModule::irreducible(parent, mu.clone())?.character()?;
    let mut rest = ch.map_weights(|w| dec.project(w));
    let sub_rs = dec.sub_system();
    let rho_a = sub_rs.rho();
    let mut out = FormalElement::zero();
    while !rest.is_empty() {
        let (top, m) = rest
            .iter()
            .max_by(|a, b| sub_rs.inner(a.0, rho_a).cmp(&sub_rs.inner(b.0, rho_a)).then_with(|| a.0.cmp(b.0)))
            .map(|(w, m)| (w.clone(), m.clone()))
            .expect("nonempty");
        let piece = HighestWeightModule::irreducible(sub_rs, top.clone())?.character()?;
        rest = rest.sub(&piece.scale(&m))?;
        out.add_term(top, m);
    }
    Ok(out)
}

/// Folds a signed coefficient `k_ξ` to `(ν, ε)` with `ν = w(ξ+ρ_a)−ρ_a`
/// dominant, so that `k_ξ = ε b_ν`; `ε = 0` on walls.
pub fn fold_signed(sub: &RootSystem, xi: &Weight) -> Result<(Weight, i8)> {
    let r = weyl::shifted_dominant(sub, xi)?;
    Ok((r.dominant, r.parity))
}

/// Tensor product of finite irreducibles, as Dynkin labels with
/// multiplicities. Every dominant weight below the top appears, zero
/// coefficients included, ordered by decreasing `(·,ρ)`.
pub fn tensor_decompose(rs: &RootSystem, factors: &[Weight]) -> Result<Vec<(Vec<i64>, Multiplicity)>> {
    if rs.is_affine() {
        return Err(Error::Unsupported("tensor products of affine modules".into()));
    }
    if factors.is_empty() {
        return domain("tensor product needs at least one factor");
    }
    for f in factors {
        rs.check_weight(f)?;
        if !matches!(rs.integer_labels(f), Some(l) if l.iter().all(|&x| x >= 0)) {
            return domain(format!("{f} is not dominant integral"));
        }
    }
    let k = factors.len();
    let mut parent = rs.clone();
    for _ in 1..k {
        parent = RootSystem::direct_sum(&parent, rs)?;
    }
    let dim = parent.dim();
    let scale = Rational::new(1, k as i64);
    let diag: Vec<Weight> = rs
        .simple_roots()
        .iter()
        .map(|a| {
            let mut c = Vec::with_capacity(dim);
            for _ in 0..k {
                c.extend(a.coords().iter().map(|x| *x * scale));
            }
            Weight::finite(c)
        })
        .collect();
    let mut top = Vec::with_capacity(dim);
    for f in factors {
        top.extend_from_slice(f.coords());
    }
    let mu = Weight::finite(top);
    let spec = SubalgebraSpec::new(&parent, diag)?;
    let dec = OrthogonalDecomposition::new(&parent, &spec)?;
    let b = dec.branch(&mu, 0)?;
    let sub = dec.sub_system();
    let top_sub = dec.project(&mu);
    let mut lattice = modules::dominant_weight_lattice(sub, &top_sub, 0)?;
    modules::sort_by_rho(sub, &mut lattice);
    lattice
        .into_iter()
        .map(|nu| {
            let labels = sub.integer_labels(&nu).ok_or_else(|| Error::Domain("non-integral label".into()))?;
            Ok((labels, b.get(&nu)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Series;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    fn b2_in_b4() -> (RootSystem, SubalgebraSpec) {
        let b4 = RootSystem::simple(Series::B, 4).unwrap();
        let spec = SubalgebraSpec::new(&b4, alloc::vec![w(&[1, -1, 0, 0]), w(&[0, 1, 0, 0])]).unwrap();
        (b4, spec)
    }

    #[test]
    fn b2_b4_decomposition() {
        let (b4, spec) = b2_in_b4();
        let dec = OrthogonalDecomposition::new(&b4, &spec).unwrap();
        assert!(dec.is_regular());
        assert_eq!(dec.h_perp_dim(), 0);
        let perp = dec.perp_system();
        assert_eq!(perp.num_simple(), 2);
        assert_eq!(perp.finite_positive_roots().len(), 4);
        assert!(perp.finite_positive_roots().iter().all(|r| r.coords()[0].is_zero() && r.coords()[1].is_zero()));
        assert_eq!(dec.fan(0).unwrap().len(), 24);
        assert_eq!(dec.fan(0).unwrap().s0, BigInt::from(-1));
        let mu = b4.weight(&[1, 0, 0, 0]).unwrap();
        assert_eq!(dec.select_u(&mu, 0).unwrap().len(), 48);
    }

    #[test]
    fn identity_and_cartan() {
        let b2 = RootSystem::simple(Series::B, 2).unwrap();
        let mu = b2.weight(&[1, 1]).unwrap();
        let full = SubalgebraSpec::parabolic(&b2, &[1, 2]).unwrap();
        let dec = OrthogonalDecomposition::new(&b2, &full).unwrap();
        assert_eq!(dec.perp_system().num_simple(), 0);
        assert!(dec.defect().is_zero());
        assert!(dec.fan(0).unwrap().is_empty());
        let b = dec.branch(&mu, 0).unwrap();
        assert_eq!(b, FormalElement::monomial(mu.clone(), 1));

        let cartan = SubalgebraSpec::cartan(&b2);
        let v = b2.weight(&[1, 0]).unwrap();
        let b = branch_coefficients(&b2, &cartan, &v, 0).unwrap();
        assert_eq!(b.len(), 5);
        assert!(b.iter().all(|(_, m)| m.is_one()));
        let dec = OrthogonalDecomposition::new(&b2, &cartan).unwrap();
        assert!(dec.select_u(&v, 0).unwrap().iter().all(|a| a.dim.is_one()));
        assert_eq!(dec.select_u(&v, 0).unwrap().len(), 8);
    }

    #[test]
    fn tensor_of_a1() {
        let a1 = RootSystem::simple(Series::A, 1).unwrap();
        let t = tensor_decompose(&a1, &[a1.weight(&[5]).unwrap(), a1.weight(&[3]).unwrap()]).unwrap();
        let nonzero: Vec<(Vec<i64>, BigInt)> = t.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        assert_eq!(
            nonzero,
            alloc::vec![
                (alloc::vec![8], BigInt::from(1)),
                (alloc::vec![6], BigInt::from(1)),
                (alloc::vec![4], BigInt::from(1)),
                (alloc::vec![2], BigInt::from(1)),
            ]
        );
        let t = tensor_decompose(&a1, &[a1.zero(), a1.weight(&[4]).unwrap()]).unwrap();
        assert_eq!(t[0], (alloc::vec![4], BigInt::from(1)));
        assert!(t[1..].iter().all(|(_, m)| m.is_zero()));
    }

    #[test]
    fn folding() {
        let a1 = RootSystem::simple(Series::A, 1).unwrap();
        assert_eq!(fold_signed(&a1, &a1.weight(&[-1]).unwrap()).unwrap().1, 0);
        let (nu, e) = fold_signed(&a1, &a1.weight(&[-4]).unwrap()).unwrap();
        assert_eq!((a1.integer_labels(&nu).unwrap(), e), (alloc::vec![2], -1));
    }
}
