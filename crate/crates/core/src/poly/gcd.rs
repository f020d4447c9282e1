//! Multivariate gcd by recursive content / primitive-part reduction.
//!
//! Over a field of coefficients the gcd is determined up to a scalar; the
//! result here is always monic (leading coefficient 1 in canonical order).

use super::{Monomial, Poly};

pub(super) fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let nvars = a.vars.len();
    let var = match (0..nvars).find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0) {
        Some(v) => v,
        None => return Poly::one(&a.vars),
    };
    if a.degree_in(var) == 0 {
        return gcd(a, &content_in(b, var));
    }
    if b.degree_in(var) == 0 {
        return gcd(&content_in(a, var), b);
    }

    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let common_content = gcd(&ca, &cb);
    let mut pa = a.div_exact(&ca).expect("content divides");
    let mut pb = b.div_exact(&cb).expect("content divides");
    if pa.degree_in(var) < pb.degree_in(var) {
        std::mem::swap(&mut pa, &mut pb);
    }
    loop {
        let r = pseudo_rem(&pa, &pb, var);
        if r.is_zero() {
            break;
        }
        if r.degree_in(var) == 0 {
            pb = Poly::one(&a.vars);
            break;
        }
        pa = pb;
        pb = primitive_in(&r, var).monic();
    }
    (&common_content * &primitive_in(&pb, var)).monic()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
fn content_in(p: &Poly, var: usize) -> Poly {
    p.coefficients_in(var)
        .iter()
        .filter(|c| !c.is_zero())
        .fold(Poly::zero(&p.vars), |acc, c| gcd(&acc, c))
}

fn primitive_in(p: &Poly, var: usize) -> Poly {
    let c = content_in(p, var);
    p.div_exact(&c).expect("content divides")
}

/// Pseudo-remainder of `a` by `b` in `var`, up to a nonzero factor.
fn pseudo_rem(a: &Poly, b: &Poly, var: usize) -> Poly {
    let db = b.degree_in(var);
    let lead_b = b.coefficients_in(var).pop().expect("nonzero divisor");
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lead_r = r.coefficients_in(var).pop().expect("nonzero");
        let mut e = vec![0; a.vars.len()];
        e[var] = dr - db;
        let shift = Poly::from_terms(&a.vars, [(Monomial(e.into_boxed_slice()), super::int(1))]);
        r = &(&lead_b * &r) - &(&(&lead_r * &shift) * b);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::super::{int, Vars};
    use super::*;

    fn l(i: usize) -> Poly {
        Poly::var(&Vars::numbered("l", 4), i - 1)
    }

    #[test]
    fn gcd_of_products() {
        let common = l(1) - l(4);
        let a = &common * &(l(2) + l(3));
        let b = &common * &(l(2) - l(3).pow(2));
        assert_eq!(gcd(&a, &b), common);
    }

    #[test]
    fn gcd_is_monic_and_handles_constants() {
        let a = (l(1) + l(2)).scale(&int(6));
        let b = (l(1) + l(2)).scale(&int(-4));
        assert_eq!(gcd(&a, &b), l(1) + l(2));
        let one = Poly::one(&Vars::numbered("l", 4));
        assert_eq!(gcd(&a, &one), one);
        assert_eq!(gcd(&a, &Poly::zero(&Vars::numbered("l", 4))), l(1) + l(2));
    }

    #[test]
    fn gcd_multivariate_power() {
        let f = &l(1) * &l(2) + l(3);
        let a = f.pow(2) * l(4);
        let b = f.pow(3) * (l(1) + Poly::one(&Vars::numbered("l", 4)));
        assert_eq!(gcd(&a, &b), f.pow(2).monic());
    }
}
