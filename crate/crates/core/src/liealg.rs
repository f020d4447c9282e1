//! Lie algebras given by structure constants in a fixed basis.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{PolyMatrix, Vector};
use crate::poly::{int, Poly, Vars};
use crate::tensor::Tensor;

/// `c[i][j][k]` is the coefficient of `X_k` in `[X_i, X_j]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    vars: Vars,
    basis: Vec<String>,
    c: Vec<Poly>,
}

/// One bracket `[X_i, X_j] = sum_k coeffs[k] X_k` with 0-based indices.
pub type BracketSpec = (usize, usize, Vec<Poly>);

impl LieAlgebra {
    /// Takes a dense `dim^3` array and checks antisymmetry.
    pub fn from_structure_constants(vars: &Vars, basis: Vec<String>, c: Vec<Poly>) -> Result<Self> {
        let dim = basis.len();
        if c.len() != dim * dim * dim {
            return Err(Error::Dimension {
                expected: dim * dim * dim,
                found: c.len(),
            });
        }
        let alg = LieAlgebra {
            vars: vars.clone(),
            basis,
            c,
        };
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    if alg.constant(i, j, k) != &-alg.constant(j, i, k) {
                        return Err(Error::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Completes a list of brackets antisymmetrically; unlisted pairs commute.
    pub fn from_brackets(vars: &Vars, basis: Vec<String>, brackets: &[BracketSpec]) -> Result<Self> {
        let dim = basis.len();
        let mut c = vec![Poly::zero(vars); dim * dim * dim];
        let mut seen = vec![false; dim * dim];
        for (i, j, coeffs) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(Error::Dimension {
                    expected: dim,
                    found: i.max(j) + 1,
                });
            }
            if coeffs.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    found: coeffs.len(),
                });
            }
            if i == j {
                return Err(Error::SelfBracket(i));
            }
            if seen[i * dim + j] {
                return Err(Error::DuplicateBracket(i, j));
            }
            seen[i * dim + j] = true;
            seen[j * dim + i] = true;
            for (k, v) in coeffs.iter().enumerate() {
                c[(i * dim + j) * dim + k] = v.clone();
                c[(j * dim + i) * dim + k] = -v;
            }
        }
        LieAlgebra::from_structure_constants(vars, basis, c)
    }

    pub fn abelian(vars: &Vars, dim: usize) -> Self {
        LieAlgebra {
            vars: vars.clone(),
            basis: default_basis(dim),
            c: vec![Poly::zero(vars); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Poly {
        let d = self.dim();
        &self.c[(i * d + j) * d + k]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(&self.vars, self.dim(), i)
    }

    /// `[X_i, X_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let d = self.dim();
        Vector::new(self.c[(i * d + j) * d..(i * d + j + 1) * d].to_vec())
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        let d = self.dim();
        x.check_dim(d)?;
        y.check_dim(d)?;
        let mut out = vec![Poly::zero(&self.vars); d];
        for i in 0..d {
            if x.coords()[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if y.coords()[j].is_zero() {
                    continue;
                }
                let w = &x.coords()[i] * &y.coords()[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o = &*o + &(&w * c);
                    }
                }
            }
        }
        Ok(Vector::new(out))
    }

    /// `m`-th coordinate of `[[X_i, X_j], X_k]`.
    fn double_bracket(&self, i: usize, j: usize, k: usize, m: usize) -> Poly {
        (0..self.dim()).fold(Poly::zero(&self.vars), |acc, a| {
            let c = self.constant(i, j, a);
            if c.is_zero() {
                acc
            } else {
                acc + c * self.constant(a, k, m)
            }
        })
    }

    /// Entry `(i, j, k, m)`: coordinate `m` of the cyclic sum of `[[X_i, X_j], X_k]`.
    pub fn jacobi_defect(&self) -> Tensor {
        Tensor::from_fn(self.dim(), (1, 3), Execution::default(), |idx| {
            let (i, j, k, m) = (idx[0], idx[1], idx[2], idx[3]);
            self.double_bracket(i, j, k, m) + self.double_bracket(j, k, i, m) + self.double_bracket(k, i, j, m)
        })
    }

    pub fn satisfies_jacobi(&self) -> bool {
        self.jacobi_defect().is_zero()
    }

    /// Matrix of `y -> [x, y]`.
    pub fn ad_matrix(&self, x: &Vector) -> Result<PolyMatrix> {
        let d = self.dim();
        x.check_dim(d)?;
        Ok(PolyMatrix::from_fn(d, |k, j| {
            (0..d).fold(Poly::zero(&self.vars), |acc, i| {
                let c = self.constant(i, j, k);
                if c.is_zero() || x.coords()[i].is_zero() {
                    acc
                } else {
                    acc + &x.coords()[i] * c
                }
            })
        }))
    }

    /// `B(X_i, X_j) = tr(ad X_i . ad X_j)`.
    pub fn killing_form(&self) -> PolyMatrix {
        let d = self.dim();
        PolyMatrix::from_fn(d, |i, j| {
            let mut acc = Poly::zero(&self.vars);
            for k in 0..d {
                for m in 0..d {
                    let a = self.constant(i, m, k);
                    let b = self.constant(j, k, m);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
            }
            acc
        })
    }

    /// Compares `det B` against the closed form
    /// `64 [(l1^2+l2^2+l3^2-l4^2-l5^2-l6^2)^2 - 4 (l1^2-l4^2)(l3^2-l6^2)]^3`
    /// for the six-parameter family built from `lambda`.
    pub fn killing_det_check(&self, lambda: &[Poly]) -> Result<KillingDetCheck> {
        if self.dim() != 6 {
            return Err(Error::Dimension {
                expected: 6,
                found: self.dim(),
            });
        }
        if lambda.len() != 6 {
            return Err(Error::Dimension {
                expected: 6,
                found: lambda.len(),
            });
        }
        let computed = self.killing_form().det_bareiss();
        let closed_form = killing_det_closed_form(lambda);
        let equal = computed == closed_form;
        Ok(KillingDetCheck {
            computed,
            closed_form,
            equal,
        })
    }

    /// Applies `f` to every structure constant, producing an algebra over `vars`.
    pub fn map_constants<F>(&self, vars: &Vars, f: F) -> Result<LieAlgebra>
    where
        F: Fn(&Poly) -> Result<Poly>,
    {
        let c = self.c.iter().map(f).collect::<Result<Vec<_>>>()?;
        LieAlgebra::from_structure_constants(vars, self.basis.clone(), c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingDetCheck {
    pub computed: Poly,
    pub closed_form: Poly,
    pub equal: bool,
}

pub fn killing_det_closed_form(lambda: &[Poly]) -> Poly {
    let sq: Vec<Poly> = lambda.iter().map(|l| l.pow(2)).collect();
    let quadric = &(&(&sq[0] + &sq[1]) + &sq[2]) - &(&(&sq[3] + &sq[4]) + &sq[5]);
    let cross = (&sq[0] - &sq[3]) * (&sq[2] - &sq[5]);
    let inner = quadric.pow(2) - cross.scale(&int(4));
    inner.pow(3).scale(&int(64))
}

/// `X1, ..., Xdim`
pub fn default_basis(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("X{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn heisenberg() -> LieAlgebra {
        let v = Vars::empty();
        let one = Poly::one(&v);
        let z = Poly::zero(&v);
        LieAlgebra::from_brackets(&v, default_basis(3), &[(0, 1, vec![z.clone(), z, one])]).unwrap()
    }

    fn so3(vars: &Vars) -> LieAlgebra {
        let e = |k: usize| -> Vec<Poly> {
            (0..3)
                .map(|i| if i == k { Poly::one(vars) } else { Poly::zero(vars) })
                .collect()
        };
        LieAlgebra::from_brackets(vars, default_basis(3), &[(0, 1, e(2)), (1, 2, e(0)), (2, 0, e(1))]).unwrap()
    }

    #[test]
    fn abelian_is_trivial() {
        let v = Vars::numbered("l", 2);
        let a = LieAlgebra::abelian(&v, 4);
        let x = Vector::new(vec![Poly::var(&v, 0), Poly::one(&v), Poly::zero(&v), Poly::var(&v, 1)]);
        let y = a.basis_vector(2);
        assert!(a.bracket(&x, &y).unwrap().is_zero());
        assert!(a.jacobi_defect().is_zero());
        assert!(a.ad_matrix(&x).unwrap().is_zero());
        assert!(a.killing_form().is_zero());
    }

    #[test]
    fn antisymmetry_enforced() {
        let v = Vars::empty();
        let mut c = vec![Poly::zero(&v); 8];
        // [e1, e2] = e1 without the opposite entry
        c[2] = Poly::one(&v);
        assert_eq!(
            LieAlgebra::from_structure_constants(&v, default_basis(2), c),
            Err(Error::NotAntisymmetric { i: 0, j: 1, k: 0 })
        );
        let z = vec![Poly::zero(&v); 2];
        assert_eq!(
            LieAlgebra::from_brackets(&v, default_basis(2), &[(1, 1, z.clone())]),
            Err(Error::SelfBracket(1))
        );
        assert_eq!(
            LieAlgebra::from_brackets(&v, default_basis(2), &[(0, 1, z.clone()), (1, 0, z)]),
            Err(Error::DuplicateBracket(1, 0))
        );
    }

    #[test]
    fn classical_algebras() {
        let h = heisenberg();
        assert!(h.satisfies_jacobi());
        assert!(h.killing_form().is_zero());
        let v = Vars::empty();
        let s = so3(&v);
        assert!(s.satisfies_jacobi());
        // so(3) with [e1,e2]=e3 cyclic has B = -2 I
        assert_eq!(s.killing_form(), PolyMatrix::diagonal(&v, &[int(-2), int(-2), int(-2)]));
        assert_eq!(s.killing_form().det_bareiss(), Poly::from_int(&v, -8));
    }

    #[test]
    fn jacobi_failure_detected() {
        let v = Vars::empty();
        let e = |k: usize| -> Vec<Poly> {
            (0..3)
                .map(|i| if i == k { Poly::one(&v) } else { Poly::zero(&v) })
                .collect()
        };
        // [X1,X2]=X3, [X2,X3]=X2: [[X1,X2],X3] + [[X2,X3],X1] + [[X3,X1],X2] = 0 + [X2,X1] + 0 = -X3
        let a = LieAlgebra::from_brackets(&v, default_basis(3), &[(0, 1, e(2)), (1, 2, e(1))]).unwrap();
        let d = a.jacobi_defect();
        assert_eq!(d.get(&[0, 1, 2, 2]), &Poly::from_int(&v, -1));
        assert!(!a.satisfies_jacobi());
    }

    #[test]
    fn bracket_is_bilinear_and_alternating() {
        let v = Vars::numbered("t", 2);
        let s = so3(&v);
        let x = Vector::new(vec![Poly::var(&v, 0), Poly::one(&v), Poly::zero(&v)]);
        let y = Vector::new(vec![Poly::zero(&v), Poly::var(&v, 1), Poly::from_int(&v, 2)]);
        assert!(s.bracket(&x, &x).unwrap().is_zero());
        assert_eq!(s.bracket(&x, &y).unwrap(), s.bracket(&y, &x).unwrap().neg());
        let xy = s.bracket(&x.scale(&Poly::var(&v, 1)), &y).unwrap();
        assert_eq!(xy, s.bracket(&x, &y).unwrap().scale(&Poly::var(&v, 1)));
        assert!(s.bracket(&x, &Vector::zero(&v, 2)).is_err());
    }

    #[test]
    fn closed_form_at_unit_lambda() {
        let v = Vars::empty();
        let lam: Vec<Poly> = [1, 0, 0, 0, 0, 0].iter().map(|&x| Poly::from_int(&v, x)).collect();
        assert_eq!(killing_det_closed_form(&lam), Poly::from_int(&v, 64));
        let lv = Vars::numbered("l", 6);
        let sym: Vec<Poly> = (0..6).map(|i| Poly::var(&lv, i)).collect();
        let expect = parse_poly(
            "64*((l1^2+l2^2+l3^2-l4^2-l5^2-l6^2)^2 - 4*(l1^2-l4^2)*(l3^2-l6^2))^3",
            &lv,
        )
        .unwrap();
        assert_eq!(killing_det_closed_form(&sym), expect);
    }

    #[test]
    fn det_check_requires_dim_six() {
        let v = Vars::empty();
        let lam = vec![Poly::zero(&v); 6];
        assert!(matches!(
            heisenberg().killing_det_check(&lam),
            Err(Error::Dimension { expected: 6, found: 3 })
        ));
    }
}
