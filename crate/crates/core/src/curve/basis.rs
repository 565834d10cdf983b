//! Bases of `H^0(X, Ω^{⊗k}(E))` for effective `E` supported on ordinary
//! affine points.
//!
//! Ansatz: `(a(x) + b(x) y) / m(x) * (dx / y)^k`, where `m` carries the
//! largest multiplicity of `E` over each x-coordinate. The degrees of `a` and
//! `b` are bounded by regularity at infinity; the remaining linear conditions
//! bound the pole order at each point of a fibre over a marked x-coordinate
//! (the conjugate of a marked point is allowed no pole at all). The kernel of
//! that system is the space.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::kernel::{LaurentSeries, Poly, Rat, RatMatrix};

use super::{
    CurveError, CurvePoint, Divisor, FieldElement, HyperellipticCurve, MeroDifferential, QuadDifferential,
};

/// Basis of `H^0(X, Ω(E))`.
pub fn diff_basis(c: &HyperellipticCurve, e: &Divisor) -> Result<Vec<MeroDifferential>, CurveError> {
    Ok(pole_space(c, e, 1)?
        .into_iter()
        .map(MeroDifferential::new)
        .collect())
}

/// Basis of `H^0(X, Ω^{⊗2}(E))`.
pub fn quad_basis(c: &HyperellipticCurve, e: &Divisor) -> Result<Vec<QuadDifferential>, CurveError> {
    Ok(pole_space(c, e, 2)?
        .into_iter()
        .map(QuadDifferential::new)
        .collect())
}

fn pole_space(c: &HyperellipticCurve, e: &Divisor, k: i64) -> Result<Vec<FieldElement>, CurveError> {
    if !e.is_effective() {
        return Err(CurveError::NotEffective);
    }
    let g = c.genus() as i64;
    let deg = 2 * g - 2 + e.degree();
    if deg <= 0 {
        return Err(CurveError::DegreeHypothesisViolated(deg));
    }
    // fibres: x0 -> (y0 > 0 representative, multiplicity at +y0, at -y0)
    let mut fibres: BTreeMap<Rat, (Rat, i64, i64)> = BTreeMap::new();
    for (p, n) in e.support() {
        let CurvePoint::Affine { x, y } = p else {
            return Err(CurveError::UnsupportedSupport);
        };
        let y_abs = if y > &Rat::zero() { y.clone() } else { -y };
        let entry = fibres.entry(x.clone()).or_insert((y_abs, 0, 0));
        if y > &Rat::zero() {
            entry.1 += n;
        } else {
            entry.2 += n;
        }
    }

    let mut m = Poly::one();
    let mut fibre_list = Vec::new();
    for (x0, (y0, mp, mn)) in &fibres {
        let ex = (*mp).max(*mn);
        m = &m * &Poly::linear_root(x0).pow(ex as u32);
        fibre_list.push((x0.clone(), y0.clone(), *mp, *mn, ex));
    }
    let dm = m.deg_i();
    let bound_a = dm + k * (g - 1);
    let bound_b = (2 * dm + 2 * k * (g - 1) - 2 * g - 1).div_euclid(2);
    let na = (bound_a + 1).max(0) as usize;
    let nb = (bound_b + 1).max(0) as usize;
    let nvars = na + nb;

    // one row per forced vanishing coefficient of a + b y at each fibre point
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (x0, y0, mp, mn, ex) in &fibre_list {
        for (branch, mult) in [(y0.clone(), *mp), (-y0, *mn)] {
            let need = ex - mult;
            if need <= 0 {
                continue;
            }
            let fs = LaurentSeries::from_poly(&c.f().shift(x0), need);
            let ys = fs.sqrt(&branch)?;
            let tpow = Poly::new(vec![x0.clone(), Rat::one()]); // x = x0 + t
            let mut cols: Vec<LaurentSeries> = Vec::with_capacity(nvars);
            let mut xi = Poly::one();
            let mut monos = Vec::new();
            for _ in 0..na.max(nb) {
                monos.push(xi.clone());
                xi = &xi * &tpow;
            }
            for mono in monos.iter().take(na) {
                cols.push(LaurentSeries::from_poly(mono, need));
            }
            for mono in monos.iter().take(nb) {
                cols.push(LaurentSeries::from_poly(mono, need).mul(&ys));
            }
            for j in 0..need {
                rows.push(cols.iter().map(|s| s.coeff(j).unwrap()).collect());
            }
        }
    }
    let kernel = if rows.is_empty() {
        standard_basis(nvars)
    } else {
        RatMatrix::from_rows(rows, nvars).kernel_basis()
    };
    Ok(kernel
        .into_iter()
        .map(|v| {
            let a = Poly::new(v[..na].to_vec());
            let b = Poly::new(v[na..].to_vec());
            FieldElement::from_polys(a, b, m.clone())
        })
        .collect())
}

fn standard_basis(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            let mut v = vec![Rat::zero(); n];
            v[i] = Rat::one();
            v
        })
        .collect()
}

/// Coordinates of `elem` in the span of `basis`, or `None` if it is not in the
/// span. The basis elements must be linearly independent.
pub fn span_coordinates(elem: &FieldElement, basis: &[FieldElement]) -> Option<Vec<Rat>> {
    if basis.is_empty() {
        return elem.is_zero().then(Vec::new);
    }
    let mut l = Poly::one();
    for fe in basis.iter().chain(std::iter::once(elem)) {
        l = super::field::poly_lcm(&l, fe.a.den());
        l = super::field::poly_lcm(&l, fe.b.den());
    }
    let lift = |fe: &FieldElement| -> (Poly, Poly) {
        let a = fe.a.num() * &l.exact_div(fe.a.den()).unwrap();
        let b = fe.b.num() * &l.exact_div(fe.b.den()).unwrap();
        (a, b)
    };
    let lifted: Vec<(Poly, Poly)> = basis.iter().map(lift).collect();
    let (ea, eb) = lift(elem);
    let len_a = lifted
        .iter()
        .map(|(a, _)| a.coeffs().len())
        .chain([ea.coeffs().len()])
        .max()
        .unwrap();
    let len_b = lifted
        .iter()
        .map(|(_, b)| b.coeffs().len())
        .chain([eb.coeffs().len()])
        .max()
        .unwrap();
    let cols: Vec<Vec<Rat>> = lifted
        .iter()
        .map(|(a, b)| {
            (0..len_a)
                .map(|i| a.coeff(i))
                .chain((0..len_b).map(|i| b.coeff(i)))
                .collect()
        })
        .collect();
    let rhs: Vec<Rat> = (0..len_a)
        .map(|i| ea.coeff(i))
        .chain((0..len_b).map(|i| eb.coeff(i)))
        .collect();
    let m = RatMatrix::from_cols(&cols, len_a + len_b);
    let sol = m.solve(&rhs)?;
    debug_assert!(sol.kernel.is_empty(), "dependent basis");
    Some(sol.particular)
}
