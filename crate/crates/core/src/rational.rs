//! Rational functions in the even coordinates.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{gcd, Poly};
use crate::scalar::Scalar;

/// A quotient of polynomials, kept reduced: numerator and denominator are
/// coprime and the denominator has leading coefficient one.
#[derive(Clone, Debug)]
pub struct EvenRational {
    num: Poly,
    den: Poly,
}

impl EvenRational {
    pub fn zero() -> Self {
        EvenRational {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        EvenRational::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        EvenRational {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn poly(p: Poly) -> Self {
        EvenRational {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn var(v: usize) -> Self {
        EvenRational::poly(Poly::var(v))
    }

    /// `num / den`, reduced. Fails on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return EvenRational::zero();
        }
        if let Some(c) = den.constant_value() {
            return EvenRational {
                num: num.scale(&c.recip()),
                den: Poly::one(),
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading().map(|(_, c)| c.clone()).unwrap();
        if lc.is_one() {
            EvenRational { num, den }
        } else {
            let inv = lc.recip();
            EvenRational {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_polynomial() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return EvenRational::zero();
        }
        EvenRational {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        EvenRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return EvenRational::poly(num);
            }
            return Self::reduced(num, self.den.clone());
        }
        Self::reduced(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return EvenRational::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return EvenRational::poly(self.num.mul(&other.num));
        }
        Self::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(EvenRational {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Partial derivative by the quotient rule.
    pub fn derivative(&self, v: usize) -> Self {
        if self.den.is_one() {
            return EvenRational::poly(self.num.derivative(v));
        }
        if !self.den.contains_var(v) {
            return EvenRational {
                num: self.num.derivative(v),
                den: self.den.clone(),
            }
            .renormalized();
        }
        let num = self
            .num
            .derivative(v)
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative(v)));
        Self::reduced(num, self.den.mul(&self.den))
    }

    fn renormalized(self) -> Self {
        Self::reduced(self.num, self.den)
    }

    pub fn depends_on(&self, v: usize) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    /// Substitutes a constant for `v`. Fails if the denominator vanishes.
    pub fn set_var(&self, v: usize, value: &Scalar) -> Result<Self> {
        EvenRational::new(self.num.set_var(v, value), self.den.set_var(v, value))
    }

    /// Value at a point given for every variable occurring.
    pub fn eval<F: Fn(usize) -> Scalar>(&self, value: F) -> Result<Scalar> {
        let d = self.den.eval(&value);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(&value) / d)
    }

    pub fn relabel(&self, map: &[usize]) -> Self {
        Self::reduced(self.num.relabel(map), self.den.relabel(map))
    }

    /// Weight of numerator minus weight of denominator when both are
    /// homogeneous.
    pub fn homogeneous_weight<F: Fn(usize) -> Scalar>(&self, weight: F) -> Option<Scalar> {
        let n = self.num.homogeneous_weight(&weight)?;
        let d = self.den.homogeneous_weight(&weight)?;
        Some(n - d)
    }
}

/// Equality by cross-multiplication: `a/b = c/d` iff `a*d - c*b = 0`.
impl PartialEq for EvenRational {
    fn eq(&self, other: &Self) -> bool {
        if self.den.is_one() && other.den.is_one() {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for EvenRational {}

impl From<Poly> for EvenRational {
    fn from(p: Poly) -> Self {
        EvenRational::poly(p)
    }
}

impl Zero for EvenRational {
    fn zero() -> Self {
        EvenRational::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::ops::Add for EvenRational {
    type Output = EvenRational;
    fn add(self, rhs: Self) -> Self {
        EvenRational::add(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn sum_of_reciprocals() {
        let x = EvenRational::var(0);
        let a = x.inv().unwrap();
        let b = x.pow(-2).unwrap();
        let s = a.add(&b);
        let expected = EvenRational::new(Poly::var(0).add(&Poly::one()), Poly::var(0).pow(2)).unwrap();
        assert_eq!(s, expected);
        assert_eq!(s.numerator(), expected.numerator());
        assert_eq!(s.denominator(), expected.denominator());
    }

    #[test]
    fn reduction_cancels_common_factors() {
        let x = Poly::var(0);
        let y = Poly::var(1);
        let f = EvenRational::new(x.mul(&x).sub(&y.mul(&y)), x.sub(&y).scale(&int(3))).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.numerator(), &x.add(&y).scale(&Scalar::new(1.into(), 3.into())));
    }

    #[test]
    fn quotient_rule() {
        let r = EvenRational::var(0).inv().unwrap();
        assert_eq!(r.derivative(0), EvenRational::var(0).pow(-2).unwrap().neg());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(EvenRational::new(Poly::one(), Poly::zero()).unwrap_err(), Error::DivisionByZero);
    }
}
