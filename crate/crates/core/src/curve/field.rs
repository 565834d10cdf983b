use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::kernel::{Poly, Rat, RatFunc};

use super::HyperellipticCurve;

/// `a(x) + b(x) y` in the function field `Q(x)[y] / (y^2 - f)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    pub a: RatFunc,
    pub b: RatFunc,
}

impl FieldElement {
    pub fn new(a: RatFunc, b: RatFunc) -> Self {
        FieldElement { a, b }
    }

    pub fn zero() -> Self {
        FieldElement::new(RatFunc::zero(), RatFunc::zero())
    }

    pub fn one() -> Self {
        FieldElement::from_x(RatFunc::one())
    }

    pub fn from_x(a: RatFunc) -> Self {
        FieldElement::new(a, RatFunc::zero())
    }

    pub fn constant(c: Rat) -> Self {
        FieldElement::from_x(RatFunc::constant(c))
    }

    /// The coordinate function `x`.
    pub fn x() -> Self {
        FieldElement::from_x(Poly::x().into())
    }

    /// The coordinate function `y`.
    pub fn y() -> Self {
        FieldElement::new(RatFunc::zero(), RatFunc::one())
    }

    /// `(a + b y) / m` for polynomials `a, b, m`.
    pub fn from_polys(a: Poly, b: Poly, m: Poly) -> Self {
        FieldElement::new(RatFunc::new(a, m.clone()), RatFunc::new(b, m))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        FieldElement::new(self.a.scale(c), self.b.scale(c))
    }

    /// `a - b y`.
    pub fn conjugate(&self) -> Self {
        FieldElement::new(self.a.clone(), -&self.b)
    }

    pub fn mul(&self, rhs: &Self, c: &HyperellipticCurve) -> Self {
        let f: RatFunc = c.f().clone().into();
        let a = &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &f);
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        FieldElement::new(a, b)
    }

    /// `N(a + b y) = a^2 - b^2 f`, an element of `Q(x)`.
    pub fn norm(&self, c: &HyperellipticCurve) -> RatFunc {
        let f: RatFunc = c.f().clone().into();
        &self.a.pow(2) - &(&self.b.pow(2) * &f)
    }

    pub fn inv(&self, c: &HyperellipticCurve) -> Option<Self> {
        let n = self.norm(c).recip()?;
        let conj = self.conjugate();
        Some(FieldElement::new(&conj.a * &n, &conj.b * &n))
    }

    pub fn div(&self, rhs: &Self, c: &HyperellipticCurve) -> Option<Self> {
        Some(self.mul(&rhs.inv(c)?, c))
    }

    /// Common denominator `L` and polynomials `A, B` with `self = (A + B y) / L`.
    pub fn over_common_denominator(&self) -> (Poly, Poly, Poly) {
        let l = poly_lcm(self.a.den(), self.b.den());
        let a = self.a.num() * &l.exact_div(self.a.den()).unwrap();
        let b = self.b.num() * &l.exact_div(self.b.den()).unwrap();
        (a, b, l)
    }
}

pub(crate) fn poly_lcm(p: &Poly, q: &Poly) -> Poly {
    let g = crate::kernel::poly_gcd(p, q);
    (p * &q.exact_div(&g).unwrap()).monic()
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(-&self.a, -&self.b)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + [{}]y", self.a, self.b)
    }
}

/// `coeff * dx / y`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MeroDifferential {
    pub coeff: FieldElement,
}

/// `coeff * (dx)^2 / y^2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadDifferential {
    pub coeff: FieldElement,
}

impl MeroDifferential {
    pub fn new(coeff: FieldElement) -> Self {
        MeroDifferential { coeff }
    }

    pub fn zero() -> Self {
        MeroDifferential::new(FieldElement::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        MeroDifferential::new(self.coeff.scale(c))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        MeroDifferential::new(&self.coeff + &rhs.coeff)
    }

    /// The tensor product of two differentials.
    pub fn tensor(&self, rhs: &Self, c: &HyperellipticCurve) -> QuadDifferential {
        QuadDifferential::new(self.coeff.mul(&rhs.coeff, c))
    }

    /// `Σ coords[i] * basis[i]`.
    pub fn combination(basis: &[MeroDifferential], coords: &[Rat]) -> Self {
        MeroDifferential::new(lin_comb(basis.iter().map(|b| &b.coeff), coords))
    }
}

impl QuadDifferential {
    pub fn new(coeff: FieldElement) -> Self {
        QuadDifferential { coeff }
    }

    pub fn zero() -> Self {
        QuadDifferential::new(FieldElement::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QuadDifferential::new(self.coeff.scale(c))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        QuadDifferential::new(&self.coeff + &rhs.coeff)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        QuadDifferential::new(&self.coeff - &rhs.coeff)
    }

    /// `self / w`, a differential. `None` if `w` is zero.
    pub fn div_by(&self, w: &MeroDifferential, c: &HyperellipticCurve) -> Option<MeroDifferential> {
        Some(MeroDifferential::new(self.coeff.div(&w.coeff, c)?))
    }

    pub fn combination(basis: &[QuadDifferential], coords: &[Rat]) -> Self {
        QuadDifferential::new(lin_comb(basis.iter().map(|b| &b.coeff), coords))
    }
}

fn lin_comb<'a>(basis: impl Iterator<Item = &'a FieldElement>, coords: &[Rat]) -> FieldElement {
    use num_traits::Zero;
    let mut acc = FieldElement::zero();
    for (b, c) in basis.zip(coords) {
        if !c.is_zero() {
            acc = &acc + &b.scale(c);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::samples;
    use crate::kernel::ri;

    #[test]
    fn y_squared_is_f() {
        let c = samples::genus2();
        let y = FieldElement::y();
        let y2 = y.mul(&y, &c);
        assert_eq!(y2, FieldElement::from_x(c.f().clone().into()));
    }

    #[test]
    fn inverse() {
        let c = samples::genus2();
        let e = &(&FieldElement::x() + &FieldElement::y()) + &FieldElement::constant(ri(3));
        let inv = e.inv(&c).unwrap();
        assert_eq!(e.mul(&inv, &c), FieldElement::one());
        assert!(FieldElement::zero().inv(&c).is_none());
    }
}
