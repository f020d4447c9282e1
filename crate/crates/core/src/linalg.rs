//! Vectors and square matrices with polynomial entries, plus the exact
//! elimination routines the geometry needs: fraction-free determinants,
//! inversion and rank over rational functions, and the inertia of a
//! numeric symmetric form.

#![allow(clippy::needless_range_loop)]

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, RationalFn, Scalar, Vars};

/// Coordinates in the fixed basis of a Lie algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vector {
    coords: Vec<Poly>,
}

impl Vector {
    pub fn new(coords: Vec<Poly>) -> Self {
        Vector { coords }
    }

    pub fn zero(vars: &Vars, dim: usize) -> Self {
        Vector::new(vec![Poly::zero(vars); dim])
    }

    /// The basis vector `X_{index+1}`.
    pub fn basis(vars: &Vars, dim: usize, index: usize) -> Self {
        let mut v = Vector::zero(vars, dim);
        v.coords[index] = Poly::one(vars);
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Poly] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Poly> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Poly) -> Vector {
        Vector::new(self.coords.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector::new(self.coords.iter().map(|a| -a).collect())
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: dim,
                found: self.dim(),
            })
        }
    }
}

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    n: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        PolyMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let n = rows.len();
        for r in &rows {
            if r.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: r.len(),
                });
            }
        }
        Ok(PolyMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(vars: &Vars, n: usize) -> Self {
        PolyMatrix::from_fn(n, |_, _| Poly::zero(vars))
    }

    pub fn identity(vars: &Vars, n: usize) -> Self {
        PolyMatrix::from_fn(n, |i, j| if i == j { Poly::one(vars) } else { Poly::zero(vars) })
    }

    pub fn diagonal(vars: &Vars, entries: &[Scalar]) -> Self {
        PolyMatrix::from_fn(entries.len(), |i, j| {
            if i == j {
                Poly::constant(vars, entries[i].clone())
            } else {
                Poly::zero(vars)
            }
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.n + j]
    }

    pub fn entries(&self) -> &[Poly] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        PolyMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &PolyMatrix) -> Self {
        let vars = self.data[0].vars().clone();
        PolyMatrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(Poly::zero(&vars), |acc, k| acc + self.get(i, k) * other.get(k, j))
        })
    }

    pub fn add(&self, other: &PolyMatrix) -> Self {
        PolyMatrix::from_fn(self.n, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn neg(&self) -> Self {
        PolyMatrix::from_fn(self.n, |i, j| -self.get(i, j))
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        PolyMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    /// First `(i, j)` with `m[i][j] != m[j][i]`.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &Vector) -> Vector {
        let vars = self.data[0].vars().clone();
        Vector::new(
            (0..self.n)
                .map(|i| (0..self.n).fold(Poly::zero(&vars), |acc, k| acc + self.get(i, k) * &v.coords()[k]))
                .collect(),
        )
    }

    /// `x^T M y`.
    pub fn bilinear(&self, x: &Vector, y: &Vector) -> Poly {
        let vars = self.data[0].vars().clone();
        let mut acc = Poly::zero(&vars);
        for i in 0..self.n {
            if x.coords()[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                let m = self.get(i, j);
                if m.is_zero() || y.coords()[j].is_zero() {
                    continue;
                }
                acc = acc + &(&x.coords()[i] * m) * &y.coords()[j];
            }
        }
        acc
    }

    /// Constant entries, if every entry is constant.
    pub fn scalar_entries(&self) -> Option<Vec<Vec<Scalar>>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).constant_value()).collect())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination; every division is exact.
    pub fn det_bareiss(&self) -> Poly {
        let n = self.n;
        let vars = self.data[0].vars().clone();
        let mut a: Vec<Vec<Poly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = false;
        let mut prev = Poly::one(&vars);
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = !sign;
                    }
                    None => return Poly::zero(&vars),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if sign {
            -det
        } else {
            det
        }
    }

    /// Inverse over rational functions, required to have polynomial entries.
    pub fn inverse(&self) -> Result<PolyMatrix> {
        let inv = self.inverse_rational()?;
        let rows = inv
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|e| e.as_poly().ok_or(Error::NonPolynomialInverse))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(rows)
    }

    /// Gauss-Jordan inversion over the field of rational functions.
    pub fn inverse_rational(&self) -> Result<Vec<Vec<RationalFn>>> {
        let n = self.n;
        let vars = self.data[0].vars().clone();
        let mut a: Vec<Vec<RationalFn>> = (0..n)
            .map(|i| {
                (0..2 * n)
                    .map(|j| {
                        if j < n {
                            RationalFn::from_poly(self.get(i, j).clone())
                        } else if j - n == i {
                            RationalFn::from_poly(Poly::one(&vars))
                        } else {
                            RationalFn::zero(&vars)
                        }
                    })
                    .collect()
            })
            .collect();
        for k in 0..n {
            let p = (k..n).find(|&r| !a[r][k].is_zero()).ok_or(Error::SingularMetric)?;
            a.swap(k, p);
            let pivot = a[k][k].clone();
            for j in 0..2 * n {
                a[k][j] = a[k][j].div(&pivot)?;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..2 * n {
                    if !a[k][j].is_zero() {
                        a[i][j] = a[i][j].sub(&f.mul(&a[k][j])?)?;
                    }
                }
            }
        }
        Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
    }
}

/// Rank of a set of vectors over the field of rational functions.
pub fn rank(vectors: &[Vector]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let dim = first.dim();
    let mut rows: Vec<Vec<RationalFn>> = vectors
        .iter()
        .map(|v| v.coords().iter().cloned().map(RationalFn::from_poly).collect())
        .collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].div(&pivot)?;
            for c in col..dim {
                rows[r][c] = rows[r][c].sub(&f.mul(&rows[rank][c])?)?;
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// Inertia `(positive, negative, zero)` of a numeric symmetric matrix,
/// by symmetric elimination with congruence transformations.
pub fn inertia(m: &[Vec<Scalar>]) -> (usize, usize, usize) {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&p| !a[p][p].is_zero()) {
            swap_sym(&mut a, k, p);
        } else if let Some((p, q)) = (k..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .find(|&(p, q)| !a[p][q].is_zero())
        {
            // row/col p += row/col q makes the diagonal entry 2 a[p][q]
            for j in 0..n {
                let t = a[q][j].clone();
                a[p][j] += t;
            }
            for i in 0..n {
                let t = a[i][q].clone();
                a[i][p] += t;
            }
            swap_sym(&mut a, k, p);
        } else {
            break;
        }
        let d = a[k][k].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &d;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
            for r in k..n {
                let t = &f * &a[r][k];
                a[r][i] -= t;
            }
        }
        k += 1;
    }
    (pos, neg, n - pos - neg)
}

fn swap_sym(a: &mut [Vec<Scalar>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}
