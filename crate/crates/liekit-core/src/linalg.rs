//! Small dense linear algebra over exact rationals.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::weight::Rational;

pub type Vector = Vec<Rational>;
pub type Matrix = Vec<Vec<Rational>>;

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + *x * *y)
}

/// Inverse of a square matrix, or `None` if it is singular.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Rank of a list of row vectors.
pub fn rank(rows: &[Vector]) -> usize {
    let mut a: Matrix = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if !a[i][col].is_zero() {
                let f = a[i][col] / a[r][col];
                for c in col..cols {
                    let v = a[r][c];
                    a[i][c] -= f * v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Orthogonal (not normalized) basis of the span of `vectors`, by Gram-Schmidt.
pub fn orthogonal_basis(vectors: &[Vector]) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    for v in vectors {
        let mut u = v.clone();
        for b in &basis {
            let c = dot(&u, b) / dot(b, b);
            for (x, y) in u.iter_mut().zip(b) {
                *x -= c * *y;
            }
        }
        if u.iter().any(|x| !x.is_zero()) {
            basis.push(u);
        }
    }
    basis
}

/// Orthogonal projection of `v` onto the span of an orthogonal basis.
pub fn project(v: &[Rational], basis: &[Vector]) -> Vector {
    let mut out = alloc::vec![Rational::zero(); v.len()];
    for b in basis {
        let c = dot(v, b) / dot(b, b);
        for (x, y) in out.iter_mut().zip(b) {
            *x += c * *y;
        }
    }
    out
}

/// Orthogonal basis of the complement of `span(vectors)` in `Q^dim`.
pub fn complement_basis(vectors: &[Vector], dim: usize) -> Vec<Vector> {
    let mut all: Vec<Vector> = vectors.to_vec();
    let start = orthogonal_basis(&all).len();
    for i in 0..dim {
        let mut e = alloc::vec![Rational::zero(); dim];
        e[i] = Rational::one();
        all.push(e);
    }
    orthogonal_basis(&all).split_off(start)
}
