//! Levi-Civita connection and curvature of a left-invariant metric.
//!
//! All fields involved are left-invariant, so every component is constant in
//! the basis `X_1..X_dim` and directional derivatives of metric coefficients
//! vanish. Covariant derivatives then reduce to algebra on components.

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{rank, Vector};
use crate::norden::NordenStructure;
use crate::poly::{ratio, Poly, RationalFn, Scalar};
use crate::tensor::Tensor;

/// `gamma[i][j][k]` is the coefficient of `X_k` in `nabla_{X_i} X_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Connection {
    gamma: Tensor,
}

impl Connection {
    pub fn from_tensor(gamma: Tensor) -> Self {
        assert_eq!(gamma.valence(), (1, 2));
        Connection { gamma }
    }

    pub fn gamma(&self) -> &Tensor {
        &self.gamma
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    /// `nabla_{X_i} Y` for a left-invariant field `Y`.
    pub fn derivative(&self, i: usize, y: &Vector) -> Vector {
        let d = self.dim();
        let vars = y.coords()[0].vars().clone();
        let mut out = vec![Poly::zero(&vars); d];
        for (a, ya) in y.coords().iter().enumerate() {
            if ya.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                let g = self.gamma.get(&[i, a, k]);
                if !g.is_zero() {
                    *o = &*o + &(ya * g);
                }
            }
        }
        Vector::new(out)
    }

    /// `nabla_{X_i} X_j`.
    pub fn derivative_basis(&self, i: usize, j: usize) -> Vector {
        Vector::new((0..self.dim()).map(|k| self.gamma.get(&[i, j, k]).clone()).collect())
    }

    /// Entry `(i, j, k) = gamma[i][j][k] - gamma[j][i][k] - c[i][j][k]`.
    pub fn torsion(&self, s: &NordenStructure) -> Tensor {
        let alg = s.algebra();
        Tensor::from_fn(self.dim(), (1, 2), Execution::default(), |x| {
            let (i, j, k) = (x[0], x[1], x[2]);
            &(self.gamma.get(&[i, j, k]) - self.gamma.get(&[j, i, k])) - alg.constant(i, j, k)
        })
    }

    /// Entry `(i, j, k) = g(nabla_i X_j, X_k) + g(X_j, nabla_i X_k)`.
    pub fn metric_defect(&self, s: &NordenStructure) -> Tensor {
        Tensor::from_fn(self.dim(), (0, 3), Execution::default(), |x| {
            let (i, j, k) = (x[0], x[1], x[2]);
            let a = s.g(&self.derivative_basis(i, j), &s.algebra().basis_vector(k));
            let b = s.g(&s.algebra().basis_vector(j), &self.derivative_basis(i, k));
            a + b
        })
    }
}

/// Koszul formula for left-invariant fields:
/// `2 g(nabla_i X_j, X_k) = g([X_i,X_j],X_k) + g([X_k,X_i],X_j) + g([X_k,X_j],X_i)`.
pub fn levi_civita(s: &NordenStructure) -> Connection {
    let d = s.dim();
    let half = ratio(1, 2);
    let lowered = Tensor::from_fn(d, (0, 3), Execution::default(), |x| {
        let (i, j, k) = (x[0], x[1], x[2]);
        (s.g_bracket(i, j, k) + s.g_bracket(k, i, j) + s.g_bracket(k, j, i)).scale(&half)
    });
    Connection::from_tensor(Tensor::from_fn(d, (1, 2), Execution::default(), |x| {
        let (i, j, m) = (x[0], x[1], x[2]);
        (0..d).fold(Poly::zero(s.vars()), |acc, k| {
            let l = lowered.get(&[i, j, k]);
            let gi = s.g_inv(k, m);
            if l.is_zero() || gi.is_zero() {
                acc
            } else {
                acc + l * gi
            }
        })
    }))
}

/// `nabla_{X_i} X_j = 1/2 [X_i, X_j]`, the Levi-Civita connection of an invariant metric.
pub fn killing_connection(s: &NordenStructure) -> Connection {
    let half = ratio(1, 2);
    let alg = s.algebra();
    Connection::from_tensor(Tensor::from_fn(s.dim(), (1, 2), Execution::default(), |x| {
        alg.constant(x[0], x[1], x[2]).scale(&half)
    }))
}

/// `R(X_i, X_j, X_k, X_l) = g(R(X_i, X_j) X_k, X_l)` with
/// `R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z`.
pub fn curvature(s: &NordenStructure, conn: &Connection) -> Tensor {
    curvature_with(s, conn, Execution::default())
}

pub fn curvature_with(s: &NordenStructure, conn: &Connection, exec: Execution) -> Tensor {
    let d = s.dim();
    let alg = s.algebra();
    // (i, j, k, m): coordinate m of R(X_i, X_j) X_k
    let endo = Tensor::from_fn(d, (1, 3), exec, |x| {
        let (i, j, k, m) = (x[0], x[1], x[2], x[3]);
        let mut acc = Poly::zero(s.vars());
        for a in 0..d {
            let gjk = conn.gamma.get(&[j, k, a]);
            let gia = conn.gamma.get(&[i, a, m]);
            if !gjk.is_zero() && !gia.is_zero() {
                acc = acc + gjk * gia;
            }
            let gik = conn.gamma.get(&[i, k, a]);
            let gja = conn.gamma.get(&[j, a, m]);
            if !gik.is_zero() && !gja.is_zero() {
                acc = acc - gik * gja;
            }
            let c = alg.constant(i, j, a);
            let gak = conn.gamma.get(&[a, k, m]);
            if !c.is_zero() && !gak.is_zero() {
                acc = acc - c * gak;
            }
        }
        acc
    });
    lower_last(s, &endo, exec)
}

fn lower_last(s: &NordenStructure, endo: &Tensor, exec: Execution) -> Tensor {
    let d = s.dim();
    Tensor::from_fn(d, (0, 4), exec, |x| {
        (0..d).fold(Poly::zero(s.vars()), |acc, m| {
            let r = endo.get(&[x[0], x[1], x[2], m]);
            let g = s.g_basis(m, x[3]);
            if r.is_zero() || g.is_zero() {
                acc
            } else {
                acc + r * g
            }
        })
    })
}

/// `R_ijkl = -1/4 g([X_i,X_j],[X_k,X_l])`, valid for invariant metrics on Lie algebras.
pub fn curvature_killing_closed_form(s: &NordenStructure) -> Tensor {
    let d = s.dim();
    let alg = s.algebra();
    let brackets: Vec<Vector> = (0..d * d).map(|p| alg.bracket_basis(p / d, p % d)).collect();
    let quarter = ratio(-1, 4);
    Tensor::from_fn(d, (0, 4), Execution::default(), |x| {
        s.g(&brackets[x[0] * d + x[1]], &brackets[x[2] * d + x[3]])
            .scale(&quarter)
    })
}

/// `rho(y, z) = g^{ij} R(e_i, y, z, e_j)`.
pub fn ricci(s: &NordenStructure, r: &Tensor) -> Tensor {
    let d = s.dim();
    Tensor::from_fn(d, (0, 2), Execution::default(), |x| {
        let mut acc = Poly::zero(s.vars());
        for a in 0..d {
            for b in 0..d {
                let gi = s.g_inv(a, b);
                let rv = r.get(&[a, x[0], x[1], b]);
                if !gi.is_zero() && !rv.is_zero() {
                    acc = acc + gi * rv;
                }
            }
        }
        acc
    })
}

/// `tau = g^{ij} rho(e_i, e_j)`.
pub fn scalar_curvature(s: &NordenStructure, rho: &Tensor) -> Poly {
    let d = s.dim();
    let mut acc = Poly::zero(s.vars());
    for a in 0..d {
        for b in 0..d {
            let gi = s.g_inv(a, b);
            if !gi.is_zero() {
                acc = acc + gi * rho.get(&[a, b]);
            }
        }
    }
    acc
}

/// `(nabla_{X_i} R)(X_j, X_k, X_l, X_m)` for constant components:
/// minus `R` with `nabla_{X_i}` applied to each argument in turn.
pub fn nabla_r(s: &NordenStructure, conn: &Connection, r: &Tensor) -> Tensor {
    nabla_r_with(s, conn, r, Execution::default())
}

pub fn nabla_r_with(s: &NordenStructure, conn: &Connection, r: &Tensor, exec: Execution) -> Tensor {
    let d = s.dim();
    Tensor::from_fn(d, (0, 5), exec, |x| {
        let i = x[0];
        let args = [x[1], x[2], x[3], x[4]];
        let mut acc = Poly::zero(s.vars());
        for slot in 0..4 {
            for a in 0..d {
                let g = conn.gamma.get(&[i, args[slot], a]);
                if g.is_zero() {
                    continue;
                }
                let mut idx = args;
                idx[slot] = a;
                let rv = r.get(&idx);
                if !rv.is_zero() {
                    acc = acc - g * rv;
                }
            }
        }
        acc
    })
}

/// Double-commutator form of `nabla R` for an invariant metric, before the
/// Jacobi identity is used:
/// `1/8 { g([[X_i,X_j],X_k] - [[X_i,X_k],X_j], [X_l,X_m])
///      + g([[X_i,X_l],X_m] - [[X_i,X_m],X_l], [X_j,X_k]) }`.
pub fn nabla_r_double_commutator(s: &NordenStructure) -> Tensor {
    let d = s.dim();
    let alg = s.algebra();
    let br = |x: &Vector, y: &Vector| alg.bracket(x, y).expect("matching dimension");
    let e = |i: usize| alg.basis_vector(i);
    let eighth = ratio(1, 8);
    Tensor::from_fn(d, (0, 5), Execution::default(), |x| {
        let (i, j, k, l, m) = (x[0], x[1], x[2], x[3], x[4]);
        let bij = alg.bracket_basis(i, j);
        let bik = alg.bracket_basis(i, k);
        let bil = alg.bracket_basis(i, l);
        let bim = alg.bracket_basis(i, m);
        let first = br(&bij, &e(k)).sub(&br(&bik, &e(j)));
        let second = br(&bil, &e(m)).sub(&br(&bim, &e(l)));
        let t = s.g(&first, &alg.bracket_basis(l, m)) + s.g(&second, &alg.bracket_basis(j, k));
        t.scale(&eighth)
    })
}

/// The same tensor after applying the Jacobi identity:
/// `1/8 { g([X_i,[X_j,X_k]], [X_l,X_m]) + g([X_i,[X_l,X_m]], [X_j,X_k]) }`.
pub fn nabla_r_jacobi_reduced(s: &NordenStructure) -> Tensor {
    let d = s.dim();
    let alg = s.algebra();
    let eighth = ratio(1, 8);
    Tensor::from_fn(d, (0, 5), Execution::default(), |x| {
        let (i, j, k, l, m) = (x[0], x[1], x[2], x[3], x[4]);
        let ei = alg.basis_vector(i);
        let bjk = alg.bracket_basis(j, k);
        let blm = alg.bracket_basis(l, m);
        let a = alg.bracket(&ei, &bjk).expect("dim");
        let b = alg.bracket(&ei, &blm).expect("dim");
        (s.g(&a, &blm) + s.g(&b, &bjk)).scale(&eighth)
    })
}

/// `R(x, y, z, u)` by multilinear expansion of the component tensor.
pub fn eval_r(r: &Tensor, x: &Vector, y: &Vector, z: &Vector, u: &Vector) -> Poly {
    let d = r.dim();
    let vars = x.coords()[0].vars().clone();
    let mut acc = Poly::zero(&vars);
    for a in (0..d).filter(|&a| !x.coords()[a].is_zero()) {
        for b in (0..d).filter(|&b| !y.coords()[b].is_zero()) {
            let xy = &x.coords()[a] * &y.coords()[b];
            for c in (0..d).filter(|&c| !z.coords()[c].is_zero()) {
                let xyz = &xy * &z.coords()[c];
                for e in (0..d).filter(|&e| !u.coords()[e].is_zero()) {
                    let rv = r.get(&[a, b, c, e]);
                    if !rv.is_zero() {
                        acc = acc + &(&xyz * &u.coords()[e]) * rv;
                    }
                }
            }
        }
    }
    acc
}

/// `pi1(x, y, z, u) = g(y, z) g(x, u) - g(x, z) g(y, u)`.
pub fn pi1(s: &NordenStructure, x: &Vector, y: &Vector, z: &Vector, u: &Vector) -> Poly {
    s.g(y, z) * s.g(x, u) - s.g(x, z) * s.g(y, u)
}

/// A 2-plane given by two spanning vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plane {
    pub x: Vector,
    pub y: Vector,
}

impl Plane {
    pub fn new(x: Vector, y: Vector) -> Self {
        Plane { x, y }
    }

    /// The coordinate plane spanned by `X_{i+1}` and `X_{j+1}`.
    pub fn coordinate(s: &NordenStructure, i: usize, j: usize) -> Self {
        Plane::new(s.algebra().basis_vector(i), s.algebra().basis_vector(j))
    }
}

/// `k(x, y) = R(x, y, y, x) / pi1(x, y, y, x)`.
pub fn sectional_curvature(s: &NordenStructure, r: &Tensor, p: &Plane) -> Result<RationalFn> {
    let den = pi1(s, &p.x, &p.y, &p.y, &p.x);
    if den.is_zero() {
        return Err(Error::DegeneratePlane);
    }
    RationalFn::reduce(eval_r(r, &p.x, &p.y, &p.y, &p.x), den)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneType {
    Holomorphic,
    TotallyReal,
    Neither,
}

impl PlaneType {
    pub fn as_str(self) -> &'static str {
        match self {
            PlaneType::Holomorphic => "holomorphic",
            PlaneType::TotallyReal => "totally_real",
            PlaneType::Neither => "neither",
        }
    }
}

/// Holomorphic when `J` maps the plane into itself, totally real when `J` of
/// the plane is `g`-orthogonal to it.
pub fn plane_type(s: &NordenStructure, p: &Plane) -> Result<PlaneType> {
    let jx = s.apply_j(&p.x);
    let jy = s.apply_j(&p.y);
    let base = rank(&[p.x.clone(), p.y.clone()])?;
    let holo = rank(&[p.x.clone(), p.y.clone(), jx.clone()])? == base
        && rank(&[p.x.clone(), p.y.clone(), jy.clone()])? == base;
    if holo {
        return Ok(PlaneType::Holomorphic);
    }
    let orth = [s.g(&jx, &p.x), s.g(&jx, &p.y), s.g(&jy, &p.x), s.g(&jy, &p.y)]
        .iter()
        .all(Poly::is_zero);
    Ok(if orth {
        PlaneType::TotallyReal
    } else {
        PlaneType::Neither
    })
}

/// `-R(x, Jx, y, Jy)`, the numerator of the holomorphic bisectional curvature.
pub fn bisectional_numerator(s: &NordenStructure, r: &Tensor, x: &Vector, y: &Vector) -> Poly {
    -eval_r(r, x, &s.apply_j(x), y, &s.apply_j(y))
}

/// `h(x, y) = -R(x, Jx, y, Jy) / sqrt(pi1(x, Jx, x, Jx) pi1(y, Jy, y, Jy))`
/// at a numeric point, given by parameter position.
pub fn bisectional_value(s: &NordenStructure, r: &Tensor, x: &Vector, y: &Vector, values: &[Scalar]) -> Result<f64> {
    for v in [x, y] {
        let jv = s.apply_j(v);
        if s.g(v, v).eval_at(values)?.is_zero() && s.g(v, &jv).eval_at(values)?.is_zero() {
            return Err(Error::IsotropicDirection);
        }
    }
    let num = bisectional_numerator(s, r, x, y).eval_at(values)?;
    let jx = s.apply_j(x);
    let jy = s.apply_j(y);
    let px = pi1(s, x, &jx, x, &jx).eval_at(values)?;
    let py = pi1(s, y, &jy, y, &jy).eval_at(values)?;
    let den = (px * py).to_f64().unwrap_or(f64::NAN).sqrt();
    Ok(num.to_f64().unwrap_or(f64::NAN) / den)
}
