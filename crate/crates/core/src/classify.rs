//! Fundamental tensor `F(X,Y,Z) = g((nabla_X J) Y, Z)`, the Lie form, the
//! basic classes `W1..W3` and `W0`, the Nijenhuis tensor and square norms.
//!
//! Every membership test is an exact polynomial identity over all basis
//! index triples; nothing here is thresholded.

use crate::exec::Execution;
use crate::geometry::Connection;
use crate::linalg::{PolyMatrix, Vector};
use crate::norden::NordenStructure;
use crate::poly::{ratio, Poly, Scalar};
use crate::tensor::Tensor;

/// `F_ijk = g((nabla_{X_i} J) X_j, X_k)` with `(nabla_X J) Y = nabla_X (JY) - J nabla_X Y`.
pub fn f_tensor(s: &NordenStructure, conn: &Connection) -> Tensor {
    let d = s.dim();
    let j = s.complex_structure();
    // (i, j) -> (nabla_{X_i} J) X_j
    let nabla_j: Vec<Vector> = (0..d * d)
        .map(|p| {
            let (i, b) = (p / d, p % d);
            conn.derivative(i, &j.image(b))
                .sub(&j.apply(&conn.derivative_basis(i, b)))
        })
        .collect();
    Tensor::from_fn(d, (0, 3), Execution::default(), |x| {
        s.g(&nabla_j[x[0] * d + x[1]], &s.algebra().basis_vector(x[2]))
    })
}

/// `F_ijk = 1/2 { g([X_i, J X_j], X_k) - g([X_i, X_j], J X_k) }`, valid for invariant metrics.
pub fn f_tensor_killing(s: &NordenStructure) -> Tensor {
    let alg = s.algebra();
    let j = s.complex_structure();
    let half = ratio(1, 2);
    Tensor::from_fn(s.dim(), (0, 3), Execution::default(), |x| {
        let (i, b, k) = (x[0], x[1], x[2]);
        let ei = alg.basis_vector(i);
        let first = s.g(&alg.bracket(&ei, &j.image(b)).expect("dim"), &alg.basis_vector(k));
        let second = s.g(&alg.bracket_basis(i, b), &j.image(k));
        (first - second).scale(&half)
    })
}

/// `F(x, Jy, Jz)` on basis triples.
fn f_with_j(s: &NordenStructure, f: &Tensor, i: usize, b: usize, c: usize) -> Poly {
    let jm = s.complex_structure().matrix();
    let d = s.dim();
    let mut acc = Poly::zero(s.vars());
    for p in 0..d {
        let jp = jm.get(p, b);
        if jp.is_zero() {
            continue;
        }
        for q in 0..d {
            let jq = jm.get(q, c);
            if !jq.is_zero() {
                acc = acc + &(jp * jq) * f.get(&[i, p, q]);
            }
        }
    }
    acc
}

/// `F(x, y, Jz)` on basis triples.
fn f_last_j(s: &NordenStructure, f: &Tensor, i: usize, b: usize, c: usize) -> Poly {
    let jm = s.complex_structure().matrix();
    (0..s.dim()).fold(Poly::zero(s.vars()), |acc, q| {
        let jq = jm.get(q, c);
        if jq.is_zero() {
            acc
        } else {
            acc + jq * f.get(&[i, b, q])
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FSymmetryDefects {
    /// `F_ijk - F_ikj`
    pub swap: Tensor,
    /// `F_ijk - F(X_i, J X_j, J X_k)`
    pub j_invariance: Tensor,
}

impl FSymmetryDefects {
    pub fn is_zero(&self) -> bool {
        self.swap.is_zero() && self.j_invariance.is_zero()
    }
}

pub fn f_symmetry_defects(s: &NordenStructure, f: &Tensor) -> FSymmetryDefects {
    let d = s.dim();
    let swap = Tensor::from_fn(d, (0, 3), Execution::default(), |x| {
        f.get(&[x[0], x[1], x[2]]) - f.get(&[x[0], x[2], x[1]])
    });
    let j_invariance = Tensor::from_fn(d, (0, 3), Execution::default(), |x| {
        f.get(&[x[0], x[1], x[2]]) - &f_with_j(s, f, x[0], x[1], x[2])
    });
    FSymmetryDefects { swap, j_invariance }
}

/// `theta(z) = g^{ij} F(e_i, e_j, z)`, as covariant components.
pub fn lie_form(s: &NordenStructure, f: &Tensor) -> Vec<Poly> {
    let d = s.dim();
    (0..d)
        .map(|k| {
            let mut acc = Poly::zero(s.vars());
            for i in 0..d {
                for j in 0..d {
                    let gi = s.g_inv(i, j);
                    if !gi.is_zero() {
                        acc = acc + gi * f.get(&[i, j, k]);
                    }
                }
            }
            acc
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassMembership {
    pub w0: bool,
    pub w1: bool,
    pub w2: bool,
    pub w3: bool,
}

/// Defect of the `W1` identity
/// `F(x,y,z) = 1/(4n) { g(x,y) theta(z) + g(x,z) theta(y) + g(x,Jy) theta(Jz) + g(x,Jz) theta(Jy) }`.
pub fn w1_defect(s: &NordenStructure, f: &Tensor, theta: &[Poly]) -> Tensor {
    let d = s.dim();
    let jm = s.complex_structure().matrix();
    let theta_j: Vec<Poly> = (0..d)
        .map(|c| {
            (0..d).fold(Poly::zero(s.vars()), |acc, q| {
                let jq = jm.get(q, c);
                if jq.is_zero() {
                    acc
                } else {
                    acc + jq * &theta[q]
                }
            })
        })
        .collect();
    let g = s.metric().matrix();
    let gj = g.mul(jm);
    let coeff = Scalar::new(1.into(), (2 * d as i64).into());
    Tensor::from_fn(d, (0, 3), Execution::default(), |x| {
        let (a, b, c) = (x[0], x[1], x[2]);
        let rhs =
            g.get(a, b) * &theta[c] + g.get(a, c) * &theta[b] + gj.get(a, b) * &theta_j[c] + gj.get(a, c) * &theta_j[b];
        f.get(&[a, b, c]) - &rhs.scale(&coeff)
    })
}

/// Cyclic sum `F(x,y,Jz) + F(y,z,Jx) + F(z,x,Jy)`.
pub fn w2_cyclic_defect(s: &NordenStructure, f: &Tensor) -> Tensor {
    Tensor::from_fn(s.dim(), (0, 3), Execution::default(), |x| {
        let (a, b, c) = (x[0], x[1], x[2]);
        f_last_j(s, f, a, b, c) + f_last_j(s, f, b, c, a) + f_last_j(s, f, c, a, b)
    })
}

/// Cyclic sum `F(x,y,z) + F(y,z,x) + F(z,x,y)`.
pub fn w3_cyclic_defect(s: &NordenStructure, f: &Tensor) -> Tensor {
    Tensor::from_fn(s.dim(), (0, 3), Execution::default(), |x| {
        let (a, b, c) = (x[0], x[1], x[2]);
        f.get(&[a, b, c]) + f.get(&[b, c, a]) + f.get(&[c, a, b])
    })
}

pub fn class_membership(s: &NordenStructure, f: &Tensor, theta: &[Poly]) -> ClassMembership {
    let theta_zero = theta.iter().all(Poly::is_zero);
    ClassMembership {
        w0: f.is_zero(),
        w1: w1_defect(s, f, theta).is_zero(),
        w2: theta_zero && w2_cyclic_defect(s, f).is_zero(),
        w3: w3_cyclic_defect(s, f).is_zero(),
    }
}

/// `N(X,Y) = [X,Y] + J[JX,Y] + J[X,JY] - [JX,JY]`; entry `(i, j, k)` is the
/// coefficient of `X_k` in `N(X_i, X_j)`.
pub fn nijenhuis(s: &NordenStructure) -> Tensor {
    let d = s.dim();
    let alg = s.algebra();
    let j = s.complex_structure();
    let n: Vec<Vector> = (0..d * d)
        .map(|p| {
            let (a, b) = (p / d, p % d);
            let (x, y) = (alg.basis_vector(a), alg.basis_vector(b));
            let (jx, jy) = (j.image(a), j.image(b));
            let br = |u: &Vector, v: &Vector| alg.bracket(u, v).expect("dim");
            br(&x, &y)
                .add(&j.apply(&br(&jx, &y)))
                .add(&j.apply(&br(&x, &jy)))
                .sub(&br(&jx, &jy))
        })
        .collect();
    Tensor::from_fn(d, (1, 2), Execution::default(), |x| {
        n[x[0] * d + x[1]].coords()[x[2]].clone()
    })
}

/// `N(X_i, X_j)` as a vector.
pub fn nijenhuis_vector(n: &Tensor, i: usize, j: usize) -> Vector {
    Vector::new((0..n.dim()).map(|k| n.get(&[i, j, k]).clone()).collect())
}

/// `g^{ik} g^{js} g(N_ij, N_ks)` contracted with `inv` in place of `g^{-1}`.
pub fn norm_sq_n_with(s: &NordenStructure, n: &Tensor, inv: &PolyMatrix) -> Poly {
    let d = s.dim();
    let vecs: Vec<Vector> = (0..d * d).map(|p| nijenhuis_vector(n, p / d, p % d)).collect();
    let mut acc = Poly::zero(s.vars());
    for i in 0..d {
        for k in 0..d {
            let gik = inv.get(i, k);
            if gik.is_zero() {
                continue;
            }
            for j in 0..d {
                for m in 0..d {
                    let gjm = inv.get(j, m);
                    if gjm.is_zero() {
                        continue;
                    }
                    let inner = s.g(&vecs[i * d + j], &vecs[k * d + m]);
                    if !inner.is_zero() {
                        acc = acc + &(gik * gjm) * &inner;
                    }
                }
            }
        }
    }
    acc
}

pub fn norm_sq_n(s: &NordenStructure, n: &Tensor) -> Poly {
    norm_sq_n_with(s, n, s.metric().inverse())
}

/// `g^{ij} g^{kl} g^{pq} F_ikp F_jlq` contracted with `inv` in place of `g^{-1}`.
pub fn norm_sq_nabla_j_with(s: &NordenStructure, f: &Tensor, inv: &PolyMatrix) -> Poly {
    let d = s.dim();
    // F contracted on its first slot: G[j][k][p] = sum_i inv[i][j] F[i][k][p], etc.
    let raise = |t: &Tensor, slot: usize| -> Tensor {
        Tensor::from_fn(d, (0, 3), Execution::default(), |x| {
            (0..d).fold(Poly::zero(s.vars()), |acc, a| {
                let g = inv.get(a, x[slot]);
                if g.is_zero() {
                    return acc;
                }
                let mut idx = [x[0], x[1], x[2]];
                idx[slot] = a;
                let v = t.get(&idx);
                if v.is_zero() {
                    acc
                } else {
                    acc + g * v
                }
            })
        })
    };
    let raised = raise(&raise(&raise(f, 0), 1), 2);
    f.entries()
        .iter()
        .zip(raised.entries())
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(Poly::zero(s.vars()), |acc, (a, b)| acc + a * b)
}

pub fn norm_sq_nabla_j(s: &NordenStructure, f: &Tensor) -> Poly {
    norm_sq_nabla_j_with(s, f, s.metric().inverse())
}

/// Isotropic Kähler: the square norm of `nabla J` vanishes identically.
pub fn is_isotropic_kahler(norm_sq_nabla_j: &Poly) -> bool {
    norm_sq_nabla_j.is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub f: Tensor,
    pub theta: Vec<Poly>,
    pub classes: ClassMembership,
    pub norm_sq_nabla_j: Poly,
    pub norm_sq_n: Poly,
    pub is_isotropic_kahler: bool,
}

pub fn classify(s: &NordenStructure, conn: &Connection) -> ClassReport {
    let f = f_tensor(s, conn);
    let theta = lie_form(s, &f);
    let classes = class_membership(s, &f, &theta);
    let norm_sq_nabla_j = norm_sq_nabla_j(s, &f);
    let n = nijenhuis(s);
    let norm_sq_n = norm_sq_n(s, &n);
    let is_isotropic_kahler = is_isotropic_kahler(&norm_sq_nabla_j);
    ClassReport {
        f,
        theta,
        classes,
        norm_sq_nabla_j,
        norm_sq_n,
        is_isotropic_kahler,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::levi_civita;
    use crate::liealg::LieAlgebra;
    use crate::norden::{ComplexStructure, Metric};
    use crate::poly::Vars;

    fn abelian() -> NordenStructure {
        let v = Vars::numbered("l", 1);
        NordenStructure::new(
            LieAlgebra::abelian(&v, 4),
            Metric::split_diagonal(&v, 4).unwrap(),
            ComplexStructure::standard(&v, 4).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn abelian_is_kahler() {
        let s = abelian();
        let conn = levi_civita(&s);
        let report = classify(&s, &conn);
        assert!(report.f.is_zero());
        assert!(report.theta.iter().all(Poly::is_zero));
        assert_eq!(
            report.classes,
            ClassMembership {
                w0: true,
                w1: true,
                w2: true,
                w3: true
            }
        );
        assert!(report.norm_sq_n.is_zero());
        assert!(report.is_isotropic_kahler);
        assert!(nijenhuis(&s).is_zero());
        assert!(f_symmetry_defects(&s, &report.f).is_zero());
    }

    #[test]
    fn corrupted_f_detected() {
        let s = abelian();
        let mut f = Tensor::zeros(s.vars(), 4, (0, 3));
        f.set(&[0, 1, 2], Poly::one(s.vars()));
        let d = f_symmetry_defects(&s, &f);
        assert!(!d.swap.is_zero());
        assert!(!d.is_zero());
    }

    #[test]
    fn nonzero_norm_is_not_isotropic_kahler() {
        let v = Vars::numbered("l", 1);
        assert!(!is_isotropic_kahler(&Poly::var(&v, 0)));
        assert!(is_isotropic_kahler(&Poly::zero(&v)));
    }
}
