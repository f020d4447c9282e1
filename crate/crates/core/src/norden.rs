//! Left-invariant metric and almost complex structure on a Lie algebra.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::liealg::LieAlgebra;
use crate::linalg::{inertia, PolyMatrix, Vector};
use crate::poly::{int, Poly, Scalar, Vars};
use crate::tensor::Tensor;

/// Symmetric bilinear form together with its inverse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Metric {
    g: PolyMatrix,
    inv: PolyMatrix,
}

impl Metric {
    /// Fails on asymmetric or singular input, or when the inverse is not polynomial.
    pub fn new(g: PolyMatrix) -> Result<Self> {
        if let Some((i, j)) = g.asymmetry() {
            return Err(Error::NotSymmetric(i, j));
        }
        let inv = g.inverse()?;
        Ok(Metric { g, inv })
    }

    pub fn diagonal(vars: &Vars, entries: &[Scalar]) -> Result<Self> {
        Metric::new(PolyMatrix::diagonal(vars, entries))
    }

    /// `g(X_i, X_i) = 1` for `i <= n`, `-1` for `i > n`, off-diagonal zero.
    pub fn split_diagonal(vars: &Vars, dim: usize) -> Result<Self> {
        let entries: Vec<Scalar> = (0..dim).map(|i| if i < dim / 2 { int(1) } else { int(-1) }).collect();
        Metric::diagonal(vars, &entries)
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.g
    }

    pub fn inverse(&self) -> &PolyMatrix {
        &self.inv
    }

    pub fn dim(&self) -> usize {
        self.g.size()
    }

    pub fn inner(&self, x: &Vector, y: &Vector) -> Poly {
        self.g.bilinear(x, y)
    }

    /// `(positive, negative)` counts, available only for constant entries.
    pub fn signature(&self) -> Option<(usize, usize)> {
        let entries = self.g.scalar_entries()?;
        let (p, q, _) = inertia(&entries);
        Some((p, q))
    }
}

/// Column `a` of the matrix holds the coordinates of `J X_a`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexStructure {
    j: PolyMatrix,
}

impl ComplexStructure {
    pub fn new(j: PolyMatrix) -> Self {
        ComplexStructure { j }
    }

    /// `J X_i = X_{n+i}`, `J X_{n+i} = -X_i`.
    pub fn standard(vars: &Vars, dim: usize) -> Result<Self> {
        if dim == 0 || !dim.is_multiple_of(2) {
            return Err(Error::OddDimension(dim));
        }
        let n = dim / 2;
        Ok(ComplexStructure::new(PolyMatrix::from_fn(dim, |k, a| {
            if a < n && k == a + n {
                Poly::one(vars)
            } else if a >= n && k == a - n {
                -Poly::one(vars)
            } else {
                Poly::zero(vars)
            }
        })))
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.j
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        self.j.apply(x)
    }

    /// `J X_a`.
    pub fn image(&self, a: usize) -> Vector {
        let n = self.j.size();
        Vector::new((0..n).map(|k| self.j.get(k, a).clone()).collect())
    }
}

/// A Lie algebra with a left-invariant metric and almost complex structure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NordenStructure {
    algebra: LieAlgebra,
    metric: Metric,
    j: ComplexStructure,
}

impl NordenStructure {
    pub fn new(algebra: LieAlgebra, metric: Metric, j: ComplexStructure) -> Result<Self> {
        let dim = algebra.dim();
        if dim == 0 || !dim.is_multiple_of(2) {
            return Err(Error::OddDimension(dim));
        }
        for found in [metric.dim(), j.matrix().size()] {
            if found != dim {
                return Err(Error::Dimension { expected: dim, found });
            }
        }
        let probe = Poly::zero(algebra.vars());
        for p in metric.matrix().entries().iter().chain(j.matrix().entries()) {
            probe.checked_add(p)?;
        }
        Ok(NordenStructure { algebra, metric, j })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn complex_structure(&self) -> &ComplexStructure {
        &self.j
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn vars(&self) -> &Vars {
        self.algebra.vars()
    }

    pub fn g(&self, x: &Vector, y: &Vector) -> Poly {
        self.metric.inner(x, y)
    }

    /// `g(X_i, X_j)`.
    pub fn g_basis(&self, i: usize, j: usize) -> &Poly {
        self.metric.matrix().get(i, j)
    }

    pub fn g_inv(&self, i: usize, j: usize) -> &Poly {
        self.metric.inverse().get(i, j)
    }

    pub fn apply_j(&self, x: &Vector) -> Vector {
        self.j.apply(x)
    }

    /// `g([X_i, X_j], X_k)`.
    pub fn g_bracket(&self, i: usize, j: usize, k: usize) -> Poly {
        let b = self.algebra.bracket_basis(i, j);
        let d = self.dim();
        (0..d).fold(Poly::zero(self.vars()), |acc, a| {
            let c = &b.coords()[a];
            let m = self.g_basis(a, k);
            if c.is_zero() || m.is_zero() {
                acc
            } else {
                acc + c * m
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NordenValidation {
    pub j_squared_ok: bool,
    pub compatibility_ok: bool,
    /// `None` when the metric has symbolic entries.
    pub signature: Option<(usize, usize)>,
}

impl NordenValidation {
    /// Signature `(n, n)` when it could be evaluated.
    pub fn signature_ok(&self, dim: usize) -> Option<bool> {
        self.signature.map(|s| s == (dim / 2, dim / 2))
    }

    pub fn is_valid(&self, dim: usize) -> bool {
        self.j_squared_ok && self.compatibility_ok && self.signature_ok(dim).unwrap_or(true)
    }
}

/// Checks `J^2 = -I`, `J^T g J = -g`, and the split signature.
pub fn validate_norden(s: &NordenStructure) -> NordenValidation {
    let j = s.complex_structure().matrix();
    let id = PolyMatrix::identity(s.vars(), s.dim());
    let j_squared_ok = j.mul(j) == id.neg();
    let compatibility_ok = norden_defect_of_form(s.metric().matrix(), s.complex_structure()).is_zero();
    NordenValidation {
        j_squared_ok,
        compatibility_ok,
        signature: s.metric().signature(),
    }
}

/// `J^T B J + B`, which vanishes exactly when `B(JX, JY) = -B(X, Y)`.
pub fn norden_defect_of_form(b: &PolyMatrix, j: &ComplexStructure) -> PolyMatrix {
    let jm = j.matrix();
    jm.transpose().mul(b).mul(jm).add(b)
}

/// `g~(X, Y) = g(X, JY)`.
pub fn associated_metric(s: &NordenStructure) -> Result<Metric> {
    Metric::new(s.metric().matrix().mul(s.complex_structure().matrix()))
}

/// Entry `(i, j, k) = g([X_i, X_j], X_k) + g([X_i, X_k], X_j)`; zero iff `g` is invariant.
pub fn killing_defect(s: &NordenStructure) -> Tensor {
    Tensor::from_fn(s.dim(), (0, 3), Execution::default(), |idx| {
        s.g_bracket(idx[0], idx[1], idx[2]) + s.g_bracket(idx[0], idx[2], idx[1])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hyperbolic(dim: usize) -> NordenStructure {
        let v = Vars::empty();
        NordenStructure::new(
            LieAlgebra::abelian(&v, dim),
            Metric::split_diagonal(&v, dim).unwrap(),
            ComplexStructure::standard(&v, dim).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn standard_pair_is_norden() {
        let s = hyperbolic(6);
        let val = validate_norden(&s);
        assert!(val.j_squared_ok && val.compatibility_ok);
        assert_eq!(val.signature, Some((3, 3)));
        assert!(val.is_valid(6));
        let inv_diag: Vec<_> = (0..6).map(|i| s.g_inv(i, i).constant_value().unwrap()).collect();
        assert_eq!(inv_diag, [1, 1, 1, -1, -1, -1].map(int));
    }

    #[test]
    fn euclidean_metric_is_hermitian_not_norden() {
        let v = Vars::empty();
        let s = NordenStructure::new(
            LieAlgebra::abelian(&v, 4),
            Metric::diagonal(&v, &[int(1), int(1), int(1), int(1)]).unwrap(),
            ComplexStructure::standard(&v, 4).unwrap(),
        )
        .unwrap();
        let val = validate_norden(&s);
        assert!(val.j_squared_ok);
        assert!(!val.compatibility_ok);
        assert_eq!(val.signature, Some((4, 0)));
        assert!(!val.is_valid(4));
    }

    #[test]
    fn associated_metric_is_norden_and_involutive_up_to_sign() {
        let s = hyperbolic(6);
        let gt = associated_metric(&s).unwrap();
        assert_eq!(gt.matrix().get(0, 3), &Poly::from_int(s.vars(), -1));
        assert!(gt.matrix().asymmetry().is_none());
        let s2 = NordenStructure::new(s.algebra().clone(), gt, s.complex_structure().clone()).unwrap();
        let val = validate_norden(&s2);
        assert!(val.compatibility_ok);
        assert_eq!(val.signature, Some((3, 3)));
        let gtt = associated_metric(&s2).unwrap();
        assert_eq!(gtt.matrix(), &s.metric().matrix().neg());
    }

    #[test]
    fn structural_errors() {
        let v = Vars::empty();
        assert_eq!(ComplexStructure::standard(&v, 3), Err(Error::OddDimension(3)));
        let r = NordenStructure::new(
            LieAlgebra::abelian(&v, 3),
            Metric::diagonal(&v, &[int(1), int(1), int(1)]).unwrap(),
            ComplexStructure::standard(&v, 4).unwrap(),
        );
        assert_eq!(r, Err(Error::OddDimension(3)));
        let asym = PolyMatrix::from_rows(vec![
            vec![Poly::one(&v), Poly::one(&v)],
            vec![Poly::zero(&v), Poly::one(&v)],
        ])
        .unwrap();
        assert_eq!(Metric::new(asym), Err(Error::NotSymmetric(0, 1)));
    }

    #[test]
    fn symbolic_metric_skips_signature() {
        let v = Vars::numbered("a", 1);
        let a = Poly::var(&v, 0);
        let one = Poly::one(&v);
        // [[1, a], [a, a^2 - 1]] has determinant -1
        let g = PolyMatrix::from_rows(vec![vec![one.clone(), a.clone()], vec![a.clone(), a.pow(2) - one]]).unwrap();
        let m = Metric::new(g).unwrap();
        assert!(m.signature().is_none());
        assert_eq!(m.matrix().mul(m.inverse()), PolyMatrix::identity(&v, 2));
    }

    #[test]
    fn abelian_killing_defect_vanishes() {
        assert!(killing_defect(&hyperbolic(4)).is_zero());
    }
}
