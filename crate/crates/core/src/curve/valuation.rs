//! Orders of vanishing and local expansions.
//!
//! At a Weierstrass point `(x0, 0)` the uniformizer is `y`, so `v(x - x0) = 2`
//! and `v(y) = 1`. At infinity `v(x) = -2`, `v(y) = -(2g + 1)` and
//! `v(dx) = -3`, so the frame `dx / y` vanishes to order `2g - 2` there and
//! nowhere else. At an ordinary affine point the local coordinate is
//! `t = x - x0`, and `y` is expanded as the square root of `f(x0 + t)` on the
//! branch through `y0`.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_traits::Zero;

use crate::kernel::{LaurentSeries, Rat, RatFunc, SeriesError};

use super::{CurveError, CurvePoint, FieldElement, HyperellipticCurve, MeroDifferential, QuadDifferential};

/// Anything of the form `coeff * (dx / y)^k`.
pub trait Valued {
    fn coeff(&self) -> &FieldElement;
    fn frame_power(&self) -> i64;
}

impl Valued for FieldElement {
    fn coeff(&self) -> &FieldElement {
        self
    }
    fn frame_power(&self) -> i64 {
        0
    }
}

impl Valued for MeroDifferential {
    fn coeff(&self) -> &FieldElement {
        &self.coeff
    }
    fn frame_power(&self) -> i64 {
        1
    }
}

impl Valued for QuadDifferential {
    fn coeff(&self) -> &FieldElement {
        &self.coeff
    }
    fn frame_power(&self) -> i64 {
        2
    }
}

/// Exact order of vanishing of `elem` at `p` (negative for poles).
pub fn ord_at<V: Valued>(c: &HyperellipticCurve, elem: &V, p: &CurvePoint) -> Result<i64, CurveError> {
    let e = elem.coeff();
    if e.is_zero() {
        return Err(CurveError::ZeroElement);
    }
    let k = elem.frame_power();
    let g = c.genus() as i64;
    let base = match p {
        CurvePoint::Infinity => {
            let va = e.a.degree().map(|d| -2 * d);
            let vb = e.b.degree().map(|d| -2 * d - (2 * g + 1));
            min_defined(va, vb) + k * (2 * g - 2)
        }
        CurvePoint::Weierstrass { x } => {
            let va = e.a.order_at(x).map(|o| 2 * o);
            let vb = e.b.order_at(x).map(|o| 2 * o + 1);
            min_defined(va, vb)
        }
        CurvePoint::Affine { x, y } => ord_affine(c, e, x, y)?,
    };
    Ok(base)
}

fn min_defined(a: Option<i64>, b: Option<i64>) -> i64 {
    match (a, b) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => unreachable!("nonzero element"),
    }
}

fn ord_affine(c: &HyperellipticCurve, e: &FieldElement, x0: &Rat, y0: &Rat) -> Result<i64, CurveError> {
    let oa = e.a.order_at(x0);
    let ob = e.b.order_at(x0);
    match (oa, ob) {
        (Some(o), None) | (None, Some(o)) => return Ok(o),
        _ => {}
    }
    let lower = oa.unwrap().min(ob.unwrap());
    // ord_P + ord_P' = ord_{x0}(norm) and ord_P' >= lower, so ord_P is at most
    // ord(norm) - lower; expanding one step past that bound always finds it.
    let upper = e.norm(c).order_at(x0).expect("nonzero norm") - lower;
    let s = expand_field(c, e, x0, y0, 0, upper + 1)?;
    let v = s.valuation().expect("valuation within certified bound");
    debug_assert!(v >= lower && v <= upper);
    Ok(v)
}

fn expand_ratfunc(r: &RatFunc, x0: &Rat, abs: i64) -> Result<LaurentSeries, SeriesError> {
    LaurentSeries::from_ratio(&r.num().shift(x0), &r.den().shift(x0), abs)
}

fn y_series(c: &HyperellipticCurve, x0: &Rat, y0: &Rat, rel: i64) -> Result<LaurentSeries, SeriesError> {
    let fs = LaurentSeries::from_poly(&c.f().shift(x0), rel.max(1));
    fs.sqrt(y0)
}

/// Expansion of `r(x) * y^e` for `e` in {-1, 0, 1}, known through `O(t^abs)`.
fn times_y_power(
    c: &HyperellipticCurve,
    r: &RatFunc,
    e: i64,
    x0: &Rat,
    y0: &Rat,
    abs: i64,
) -> Result<LaurentSeries, SeriesError> {
    if r.is_zero() {
        return Ok(LaurentSeries::zero(abs));
    }
    let rs = expand_ratfunc(r, x0, abs)?;
    if e == 0 {
        return Ok(rs);
    }
    let v = r.order_at(x0).unwrap();
    let mut ys = y_series(c, x0, y0, abs - v)?;
    if e < 0 {
        ys = ys.inv()?;
    }
    Ok(rs.mul(&ys).truncate(abs))
}

/// `(a + b y) * y^{-k}` as a series in `t = x - x0`.
fn expand_field(
    c: &HyperellipticCurve,
    e: &FieldElement,
    x0: &Rat,
    y0: &Rat,
    k: i64,
    abs: i64,
) -> Result<LaurentSeries, SeriesError> {
    let a_part = match k {
        0 => times_y_power(c, &e.a, 0, x0, y0, abs)?,
        1 => times_y_power(c, &e.a, -1, x0, y0, abs)?,
        2 => {
            let f: RatFunc = c.f().clone().into();
            times_y_power(c, &(&e.a * &f.recip().unwrap()), 0, x0, y0, abs)?
        }
        _ => unreachable!("frame power {k}"),
    };
    let b_part = times_y_power(c, &e.b, 1 - k, x0, y0, abs)?;
    Ok(a_part.add(&b_part).truncate(abs))
}

/// Series `w(t)` with `elem = w(t) (dt)^k` around `p`, `t = x - x0`, known
/// through `O(t^abs)`.
pub fn local_expand<V: Valued>(
    c: &HyperellipticCurve,
    elem: &V,
    p: &CurvePoint,
    abs: i64,
) -> Result<LaurentSeries, CurveError> {
    let CurvePoint::Affine { x, y } = p else {
        return Err(CurveError::NotExpandable);
    };
    Ok(expand_field(c, elem.coeff(), x, y, elem.frame_power(), abs)?)
}

/// `c_m(q)`: the coefficient of `t^{-m-2} (dt)^2` in the expansion of `q` at `p`.
pub fn c_coefficients(
    c: &HyperellipticCurve,
    q: &QuadDifferential,
    p: &CurvePoint,
    m_range: RangeInclusive<i64>,
) -> Result<BTreeMap<i64, Rat>, CurveError> {
    let lowest_m = *m_range.start();
    let abs = -lowest_m - 1;
    if q.is_zero() {
        return Ok(m_range.map(|m| (m, Rat::zero())).collect());
    }
    let s = local_expand(c, q, p, abs)?;
    m_range
        .map(|m| Ok((m, s.coeff(-m - 2)?)))
        .collect::<Result<_, SeriesError>>()
        .map_err(Into::into)
}
