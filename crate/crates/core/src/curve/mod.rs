//! Hyperelliptic curves `y^2 = f(x)` in the odd-degree model, their places,
//! divisors, function-field elements and differentials.

mod basis;
mod field;
mod valuation;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::kernel::{rat, Poly, Rat, SeriesError};

pub use basis::{diff_basis, quad_basis, span_coordinates};
pub use field::{FieldElement, MeroDifferential, QuadDifferential};
pub use valuation::{c_coefficients, local_expand, ord_at, Valued};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("defining polynomial must have odd degree >= 3, got degree {0:?}")]
    BadDegree(Option<usize>),
    #[error("defining polynomial is not squarefree")]
    NotSquarefree,
    #[error("point ({x}, {y}) is not on the curve")]
    NotOnCurve { x: String, y: String },
    #[error("marked point ({0}, 0) is a Weierstrass point")]
    WeierstrassMarked(String),
    #[error("marked point listed twice")]
    DuplicatePoint,
    #[error("order of vanishing of the zero element is undefined")]
    ZeroElement,
    #[error("divisor support must be affine non-Weierstrass points")]
    UnsupportedSupport,
    #[error("divisor must be effective")]
    NotEffective,
    #[error("degree hypothesis violated: 2g - 2 + deg E = {0} must be positive")]
    DegreeHypothesisViolated(i64),
    #[error("at least one marked point is required")]
    NoMarkedPoints,
    #[error("local expansion needs a non-Weierstrass affine point")]
    NotExpandable,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `y^2 = f(x)` with `f` squarefree of degree `2g + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HyperellipticCurve {
    f: Poly,
    genus: usize,
}

impl HyperellipticCurve {
    pub fn new(f: Poly) -> Result<Self, CurveError> {
        let d = f.degree();
        match d {
            Some(d) if d >= 3 && d % 2 == 1 => {}
            _ => return Err(CurveError::BadDegree(d)),
        }
        if !f.is_squarefree() {
            return Err(CurveError::NotSquarefree);
        }
        let genus = (d.unwrap() - 1) / 2;
        Ok(HyperellipticCurve { f, genus })
    }

    pub fn from_ints(c: &[i64]) -> Result<Self, CurveError> {
        Self::new(Poly::from_ints(c))
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// The affine point `(x, y)`, classified as Weierstrass when `y = 0`.
    pub fn point(&self, x: Rat, y: Rat) -> Result<CurvePoint, CurveError> {
        if self.f.eval(&x) != &y * &y {
            return Err(CurveError::NotOnCurve {
                x: rat::fmt_rat(&x),
                y: rat::fmt_rat(&y),
            });
        }
        Ok(if y.is_zero() {
            CurvePoint::Weierstrass { x }
        } else {
            CurvePoint::Affine { x, y }
        })
    }

    /// Convenience for integer coordinates. Panics if the point is not on the curve.
    pub fn pt(&self, x: i64, y: i64) -> CurvePoint {
        self.point(rat::ri(x), rat::ri(y)).expect("point on curve")
    }
}

impl fmt::Display for HyperellipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {}", self.f)
    }
}

/// A place of the curve with rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CurvePoint {
    /// `(x, y)` with `y != 0`; local coordinate `t = x - x0`.
    Affine {
        x: Rat,
        y: Rat,
    },
    /// `(x, 0)`; local coordinate `y`.
    Weierstrass {
        x: Rat,
    },
    Infinity,
}

impl CurvePoint {
    pub fn is_affine_regular(&self) -> bool {
        matches!(self, CurvePoint::Affine { .. })
    }

    /// The image under the hyperelliptic involution `y -> -y`.
    pub fn conjugate(&self) -> CurvePoint {
        match self {
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: x.clone(), y: -y },
            other => other.clone(),
        }
    }

    pub fn x(&self) -> Option<&Rat> {
        match self {
            CurvePoint::Affine { x, .. } | CurvePoint::Weierstrass { x } => Some(x),
            CurvePoint::Infinity => None,
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Affine { x, y } => {
                write!(f, "({}, {})", rat::fmt_rat(x), rat::fmt_rat(y))
            }
            CurvePoint::Weierstrass { x } => write!(f, "({}, 0)", rat::fmt_rat(x)),
            CurvePoint::Infinity => write!(f, "inf"),
        }
    }
}

/// A finite formal sum of places.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Divisor {
    entries: BTreeMap<CurvePoint, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Sum of the given points, each with multiplicity one per occurrence.
    pub fn from_points<'a>(pts: impl IntoIterator<Item = &'a CurvePoint>) -> Self {
        let mut d = Divisor::zero();
        for p in pts {
            d.add_point(p.clone(), 1);
        }
        d
    }

    pub fn add_point(&mut self, p: CurvePoint, n: i64) {
        let e = self.entries.entry(p).or_insert(0);
        *e += n;
        if *e == 0 {
            self.entries.retain(|_, v| *v != 0);
        }
    }

    pub fn scaled(&self, k: i64) -> Divisor {
        let mut d = Divisor::zero();
        for (p, n) in &self.entries {
            d.add_point(p.clone(), n * k);
        }
        d
    }

    pub fn mult(&self, p: &CurvePoint) -> i64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.entries.values().all(|&n| n >= 0)
    }

    pub fn support(&self) -> impl Iterator<Item = (&CurvePoint, i64)> {
        self.entries.iter().map(|(p, &n)| (p, n))
    }
}

/// A curve with `N >= 1` distinct marked affine non-Weierstrass points.
///
/// Construction enforces `2g - 2 + N > 0` (positivity of `deg Ω(D)` and `deg O(D)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedCurve {
    curve: HyperellipticCurve,
    points: Vec<CurvePoint>,
}

impl MarkedCurve {
    pub fn new(curve: HyperellipticCurve, points: Vec<CurvePoint>) -> Result<Self, CurveError> {
        if points.is_empty() {
            return Err(CurveError::NoMarkedPoints);
        }
        for (i, p) in points.iter().enumerate() {
            match p {
                CurvePoint::Affine { .. } => {}
                CurvePoint::Weierstrass { x } => return Err(CurveError::WeierstrassMarked(rat::fmt_rat(x))),
                CurvePoint::Infinity => return Err(CurveError::UnsupportedSupport),
            }
            if points[..i].contains(p) {
                return Err(CurveError::DuplicatePoint);
            }
        }
        let n = points.len() as i64;
        let deg = 2 * curve.genus() as i64 - 2 + n;
        if deg <= 0 {
            return Err(CurveError::DegreeHypothesisViolated(deg));
        }
        Ok(MarkedCurve { curve, points })
    }

    pub fn curve(&self) -> &HyperellipticCurve {
        &self.curve
    }

    pub fn genus(&self) -> usize {
        self.curve.genus()
    }

    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// `D = z_1 + ... + z_N`.
    pub fn d(&self) -> Divisor {
        Divisor::from_points(&self.points)
    }

    /// `3(g - 1) + N`.
    pub fn base_dim(&self) -> usize {
        (3 * self.genus() as i64 - 3 + self.n() as i64) as usize
    }
}

/// Explicit test curves used throughout the tests, benches and CLI defaults.
pub mod samples {
    use super::*;

    /// `y^2 = x^3 - x + 1` (genus 1).
    pub fn genus1() -> HyperellipticCurve {
        HyperellipticCurve::from_ints(&[1, -1, 0, 1]).unwrap()
    }

    /// `y^2 = x^5 - x + 1` (genus 2).
    pub fn genus2() -> HyperellipticCurve {
        HyperellipticCurve::from_ints(&[1, -1, 0, 0, 0, 1]).unwrap()
    }

    /// `y^2 = x^7 - x + 1` (genus 3).
    pub fn genus3() -> HyperellipticCurve {
        HyperellipticCurve::from_ints(&[1, -1, 0, 0, 0, 0, 0, 1]).unwrap()
    }

    /// Rational non-Weierstrass points available on all three sample curves.
    pub fn marked_points(c: &HyperellipticCurve, n: usize) -> Vec<CurvePoint> {
        let candidates = [(0, 1), (1, 1), (0, -1), (1, -1), (-1, 1), (-1, -1)];
        candidates
            .iter()
            .filter_map(|&(x, y)| c.point(rat::ri(x), rat::ri(y)).ok())
            .filter(CurvePoint::is_affine_regular)
            .take(n)
            .collect()
    }

    /// The sample curve of genus `g` with `n` marked points.
    pub fn config(g: usize, n: usize) -> MarkedCurve {
        let c = match g {
            1 => genus1(),
            2 => genus2(),
            3 => genus3(),
            _ => panic!("no sample curve of genus {g}"),
        };
        let pts = marked_points(&c, n);
        assert_eq!(pts.len(), n, "not enough sample points");
        MarkedCurve::new(c, pts).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::ri;

    #[test]
    fn rejects_bad_models() {
        assert_eq!(
            HyperellipticCurve::from_ints(&[1, 0, 0, 0, 1]),
            Err(CurveError::BadDegree(Some(4)))
        );
        // x^3 - x^2 = x^2 (x - 1)
        assert_eq!(
            HyperellipticCurve::from_ints(&[0, 0, -1, 1]),
            Err(CurveError::NotSquarefree)
        );
        assert_eq!(samples::genus2().genus(), 2);
    }

    #[test]
    fn point_classification() {
        let c = samples::genus2();
        assert!(matches!(c.point(ri(0), ri(1)), Ok(CurvePoint::Affine { .. })));
        assert!(c.point(ri(0), ri(2)).is_err());
        let w = HyperellipticCurve::from_ints(&[0, -1, 0, 1]).unwrap(); // x^3 - x
        assert_eq!(w.point(ri(1), ri(0)), Ok(CurvePoint::Weierstrass { x: ri(1) }));
    }

    #[test]
    fn marked_curve_hypotheses() {
        let c = samples::genus1();
        // g = 1, N = 0 fails; N >= 1 passes for g = 1
        assert_eq!(
            MarkedCurve::new(c.clone(), vec![]),
            Err(CurveError::NoMarkedPoints)
        );
        assert!(MarkedCurve::new(c.clone(), vec![c.pt(0, 1)]).is_ok());
        assert_eq!(
            MarkedCurve::new(c.clone(), vec![c.pt(0, 1), c.pt(0, 1)]),
            Err(CurveError::DuplicatePoint)
        );
        let m = samples::config(2, 2);
        assert_eq!(m.base_dim(), 5);
        assert_eq!(m.d().degree(), 2);
    }
}
