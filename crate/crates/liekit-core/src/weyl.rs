//! Weyl reflections, words, orbits and dominant-chamber normalisation.
//!
//! Words number simple roots as the literature does: `1..=rank` for finite
//! systems and `0..=rank` (with `α₀` as 0) for affine systems.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::root_system::RootSystem;
use crate::weight::{rat, Weight};
use crate::{domain, Result};

const MAX_DOMINANCE_STEPS: usize = 1 << 20;

/// A product of simple reflections `s_{i1} s_{i2} … s_{ik}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct WeylWord {
    indices: Vec<usize>,
}

impl WeylWord {
    /// Checks the indices against the numbering of `rs`.
    pub fn new(rs: &RootSystem, indices: Vec<usize>) -> Result<WeylWord> {
        let (lo, hi) = index_range(rs);
        if let Some(i) = indices.iter().find(|&&i| i < lo || i > hi) {
            return domain(format!("reflection index {i} outside {lo}..={hi}"));
        }
        Ok(WeylWord { indices })
    }

    pub fn identity() -> WeylWord {
        WeylWord::default()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `(−1)^length`.
    pub fn sign(&self) -> i8 {
        if self.indices.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Acts on `w`, rightmost reflection first.
    pub fn apply(&self, rs: &RootSystem, w: &Weight) -> Result<Weight> {
        rs.check_weight(w)?;
        let off = index_range(rs).0;
        Ok(self.indices.iter().rev().fold(w.clone(), |acc, &i| rs.reflect_simple(i - off, &acc)))
    }
}

fn index_range(rs: &RootSystem) -> (usize, usize) {
    if rs.is_affine() {
        (0, rs.num_simple() - 1)
    } else {
        (1, rs.num_simple())
    }
}

/// Outcome of moving a weight into the closed main chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantResult {
    pub dominant: Weight,
    /// `±1` from the word length, or 0 for a singular shifted weight.
    pub parity: i8,
    /// Word `u` with `dominant = u(w)`.
    pub word: WeylWord,
}

/// Reflection of `w` in an arbitrary root `alpha`.
pub fn reflect(rs: &RootSystem, alpha: &Weight, w: &Weight) -> Result<Weight> {
    rs.check_weight(alpha)?;
    rs.check_weight(w)?;
    let n = rs.inner(alpha, alpha);
    if n.is_zero() {
        return domain("cannot reflect in a root of zero norm");
    }
    let c = rat(2) * rs.inner(alpha, w) / n;
    Ok(w.add_unchecked(alpha, -c))
}

fn check_level(rs: &RootSystem, w: &Weight) -> Result<()> {
    rs.check_weight(w)?;
    if rs.is_affine() && !w.level().is_positive() {
        return domain("affine weight must have positive level");
    }
    Ok(())
}

/// Index (into the simple roots) of the first negative label, if any.
fn first_negative(rs: &RootSystem, w: &Weight) -> Option<usize> {
    (0..rs.num_simple()).find(|&i| rs.label(w, i).is_negative())
}

/// Dominant representative of the orbit of `w` and the reflection sign.
pub fn dominant_with_sign(rs: &RootSystem, w: &Weight) -> (Weight, i8) {
    let mut cur = w.clone();
    let mut sign = 1i8;
    let mut steps = 0usize;
    while let Some(i) = first_negative(rs, &cur) {
        cur = rs.reflect_simple(i, &cur);
        sign = -sign;
        steps += 1;
        assert!(steps < MAX_DOMINANCE_STEPS, "dominance normalisation did not terminate");
    }
    (cur, sign)
}

/// Reflects at the first simple root with a negative label until dominant.
pub fn to_dominant(rs: &RootSystem, w: &Weight) -> Result<DominantResult> {
    check_level(rs, w)?;
    let off = index_range(rs).0;
    let mut cur = w.clone();
    let mut applied = Vec::new();
    while let Some(i) = first_negative(rs, &cur) {
        cur = rs.reflect_simple(i, &cur);
        applied.push(i + off);
        if applied.len() >= MAX_DOMINANCE_STEPS {
            return domain("dominance normalisation did not terminate");
        }
    }
    applied.reverse();
    let word = WeylWord { indices: applied };
    Ok(DominantResult { dominant: cur, parity: word.sign(), word })
}

/// Normalises `u(w+ρ)−ρ`; parity 0 when `w+ρ` lies on a wall.
pub fn shifted_dominant(rs: &RootSystem, w: &Weight) -> Result<DominantResult> {
    rs.check_weight(w)?;
    let shifted = w + rs.rho();
    let r = to_dominant(rs, &shifted)?;
    let wall = (0..rs.num_simple()).any(|i| rs.label(&r.dominant, i).is_zero());
    Ok(DominantResult {
        dominant: &r.dominant - rs.rho(),
        parity: if wall { 0 } else { r.parity },
        word: r.word,
    })
}

/// Full Weyl orbit of `w`; affine orbits keep only grades `≥ floor`.
pub fn orbit(rs: &RootSystem, w: &Weight, grade_floor: Option<i64>) -> Result<Vec<Weight>> {
    rs.check_weight(w)?;
    let start = if rs.is_affine() {
        let Some(_) = grade_floor else {
            return domain("affine orbits are infinite without a grade floor");
        };
        to_dominant(rs, w)?.dominant
    } else {
        w.clone()
    };
    let floor = grade_floor.map(rat);
    let keep = |x: &Weight| floor.is_none_or(|f| x.grade() >= f);
    if !keep(&start) {
        return Ok(Vec::new());
    }
    let all: Vec<usize> = (0..rs.num_simple()).collect();
    Ok(bfs(rs, &start, &all, keep).into_keys().collect())
}

fn bfs(rs: &RootSystem, start: &Weight, gens: &[usize], keep: impl Fn(&Weight) -> bool) -> BTreeMap<Weight, i8> {
    let mut seen: BTreeMap<Weight, i8> = BTreeMap::new();
    seen.insert(start.clone(), 1);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(x) = queue.pop_front() {
        let s = seen[&x];
        for &i in gens {
            let y = rs.reflect_simple(i, &x);
            if seen.contains_key(&y) || !keep(&y) {
                continue;
            }
            seen.insert(y.clone(), -s);
            queue.push_back(y);
        }
    }
    seen
}

/// Orbit of a weight `lambda`, strictly dominant for the reflections `gens`
/// (indices into the simple roots), with the sign of the unique group element
/// reaching each point. Points rejected by `keep` are pruned, which is exact
/// whenever `keep` is closed under moving towards `lambda`.
pub fn signed_orbit(
    rs: &RootSystem,
    lambda: &Weight,
    gens: &[usize],
    keep: impl Fn(&Weight) -> bool,
) -> Vec<(Weight, i8)> {
    if !keep(lambda) {
        return Vec::new();
    }
    bfs(rs, lambda, gens, keep).into_iter().collect()
}

/// The set `{wρ − ρ}` with signs, pruned by `keep`.
pub fn rho_shifts(rs: &RootSystem, keep: impl Fn(&Weight) -> bool) -> Vec<(Weight, i8)> {
    let rho = rs.rho().clone();
    let all: Vec<usize> = (0..rs.num_simple()).collect();
    signed_orbit(rs, &rho, &all, |x| keep(&(x - &rho))).into_iter().map(|(w, s)| (&w - &rho, s)).collect()
}

/// Canonical set of orbit points, useful for multiset comparisons.
pub fn orbit_set(rs: &RootSystem, w: &Weight, grade_floor: Option<i64>) -> Result<BTreeSet<Weight>> {
    Ok(orbit(rs, w, grade_floor)?.into_iter().collect())
}

pub(crate) fn labels_nonneg(rs: &RootSystem, w: &Weight, gens: &[usize]) -> bool {
    gens.iter().all(|&i| !rs.label(w, i).is_negative())
}
