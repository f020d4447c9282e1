use std::fmt;

use num_traits::{One, Zero};

use super::{Poly, Scalar, Vars};
use crate::error::{Error, Result};

/// Quotient of two coprime polynomials with a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    /// Cancels the gcd of `num` and `den` and normalizes the denominator.
    pub fn reduce(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let vars = num.vars().clone();
        if num.is_zero() {
            den.checked_add(&num)?;
            return Ok(RationalFn {
                num,
                den: Poly::one(&vars),
            });
        }
        let g = num.gcd(&den)?;
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.leading_coefficient().expect("nonzero").recip();
        Ok(RationalFn {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.vars());
        RationalFn { num: p, den }
    }

    pub fn zero(vars: &Vars) -> Self {
        RationalFn::from_poly(Poly::zero(vars))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this function equals, when the denominator is constant.
    pub fn as_poly(&self) -> Option<Poly> {
        let d = self.den.constant_value()?;
        Some(self.num.scale(&d.recip()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self
            .num
            .checked_mul(&other.den)?
            .checked_add(&other.num.checked_mul(&self.den)?)?;
        RationalFn::reduce(n, self.den.checked_mul(&other.den)?)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        RationalFn::reduce(self.num.checked_mul(&other.num)?, self.den.checked_mul(&other.den)?)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFn::reduce(self.num.checked_mul(&other.den)?, self.den.checked_mul(&other.num)?)
    }

    pub fn neg(&self) -> Self {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn eval_at(&self, values: &[Scalar]) -> Result<Scalar> {
        let d = self.den.eval_at(values)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval_at(values)? / d)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.constant_value().is_some_and(|d| d.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{int, Vars};
    use super::*;

    fn l(i: usize) -> Poly {
        Poly::var(&Vars::numbered("l", 6), i - 1)
    }

    #[test]
    fn cancels_common_factor() {
        let r = RationalFn::reduce(l(1).pow(2) - l(4).pow(2), l(1) - l(4)).unwrap();
        assert_eq!(r.numer(), &(l(1) + l(4)));
        assert!(r.denom().constant_value().unwrap().is_one());
        assert_eq!(r.as_poly().unwrap(), l(1) + l(4));
    }

    #[test]
    fn trivial_denominators() {
        let p = l(2) * l(3);
        let r = RationalFn::reduce(p.clone(), Poly::one(p.vars())).unwrap();
        assert_eq!(r, RationalFn::from_poly(p));
        let z = RationalFn::reduce(Poly::zero(l(1).vars()), l(1) + l(2)).unwrap();
        assert!(z.is_zero());
        assert!(z.denom().constant_value().unwrap().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFn::reduce(l(1), Poly::zero(l(1).vars())),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn denominator_is_monic() {
        let r = RationalFn::reduce(l(1), (l(2) + l(3)).scale(&int(-4))).unwrap();
        assert_eq!(r.denom().leading_coefficient().unwrap(), &int(1));
        assert_eq!(r.to_string(), "(-1/4*l1)/(l2 + l3)");
    }

    #[test]
    fn field_operations() {
        let a = RationalFn::reduce(l(1), l(2)).unwrap();
        let b = RationalFn::reduce(l(2), l(1)).unwrap();
        let one = a.mul(&b).unwrap();
        assert_eq!(one.as_poly().unwrap(), Poly::one(l(1).vars()));
        let s = a.add(&b).unwrap();
        assert_eq!(s.numer(), &(l(1).pow(2) + l(2).pow(2)));
        assert!(a.sub(&a).unwrap().is_zero());
        assert_eq!(a.div(&a).unwrap().as_poly().unwrap(), Poly::one(l(1).vars()));
    }
}
