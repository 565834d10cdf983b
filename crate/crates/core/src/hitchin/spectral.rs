//! Zero divisor of a quadratic differential viewed as a section of
//! `(Ω(D))^{⊗2}`, and the genus of the spectral double cover `x^2 + q = 0`.
//!
//! Write `q = (A + B y) / L · (dx)^2 / y^2`. Zeros are counted in four
//! disjoint groups: the point at infinity, Weierstrass points (roots of `f`),
//! the fibres over marked points, and everything else. Points outside the
//! first three groups are counted through the norm `A^2 - B^2 f` with common
//! factors of `A` and `B` split off, so no root of any polynomial is ever
//! computed.

use num_traits::Zero;

use crate::curve::{ord_at, CurvePoint, QuadDifferential};
use crate::kernel::{poly_gcd, remove_common_factors, Poly};

use super::{HiggsSpace, HitchinError};

/// Zeros of `q` as a section of `(Ω(D))^{⊗2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDivisor {
    /// Order at infinity.
    pub infinity: i64,
    /// Monic polynomial whose roots are the Weierstrass zeros.
    pub weierstrass: Poly,
    /// Orders at the points of each marked fibre.
    pub marked: Vec<(CurvePoint, i64)>,
    /// `G'` and `N1'`: every other zero lies over a root of one of these.
    pub generic: (Poly, Poly),
    /// Total degree.
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralData {
    pub q: QuadDifferential,
    pub zeros: ZeroDivisor,
    /// `4g - 3 + N`.
    pub genus_formula: i64,
    /// From Riemann-Hurwitz and the branch count.
    pub genus_rh: i64,
    /// `genus_formula - g`.
    pub prym_dim: i64,
}

/// Genus of the spectral curve, both from the closed formula and from the
/// ramification of the double cover. Fails with [`HitchinError::NotSimpleZeros`]
/// unless every zero of `q` is simple.
pub fn spectral_check(space: &HiggsSpace, q: &QuadDifferential) -> Result<SpectralData, HitchinError> {
    if q.is_zero() {
        return Err(HitchinError::ZeroDifferential);
    }
    if space.quad_coordinates(q).is_none() {
        return Err(HitchinError::MembershipFailure);
    }
    let m = space.marked();
    let c = m.curve();
    let g = m.genus() as i64;
    let n = m.n() as i64;
    let genus_formula = 4 * g - 3 + n;
    let not_simple = HitchinError::NotSimpleZeros { genus_formula };
    let f = c.f();
    let (a, b, _l) = q.coeff.over_common_denominator();

    let mut simple = true;

    let infinity = ord_at(c, q, &CurvePoint::Infinity)?;
    simple &= infinity <= 1;

    // At a root r of f the frame is a unit and ord = min(2 ord_r A, 2 ord_r B + 1).
    let wz = poly_gcd(&a, f);
    simple &= poly_gcd(&wz, &b).deg_i() <= 0;
    let weierstrass_count = weierstrass_degree(f, &a, &b);

    let d = m.d();
    let mut fibre_x: Vec<_> = Vec::new();
    let mut marked = Vec::new();
    for p in m.points() {
        let x0 = p.x().expect("affine marked point").clone();
        if fibre_x.contains(&x0) {
            continue;
        }
        fibre_x.push(x0);
        for pt in [p.clone(), p.conjugate()] {
            let k = ord_at(c, q, &pt)? + 2 * d.mult(&pt);
            simple &= k <= 1;
            marked.push((pt, k));
        }
    }
    let marked_count: i64 = marked.iter().map(|(_, k)| k).sum();

    let mut fm = f.clone();
    for x0 in &fibre_x {
        fm = &fm * &Poly::linear_root(x0);
    }
    let gg = poly_gcd(&a, &b);
    let (a1, b1) = (a.exact_div(&gg).unwrap(), b.exact_div(&gg).unwrap());
    let n1 = &a1.pow(2) - &(&b1.pow(2) * f);
    let g_prime = remove_common_factors(&gg, &fm).monic();
    let n1_prime = remove_common_factors(&n1, &fm).monic();
    simple &=
        g_prime.is_squarefree() && n1_prime.is_squarefree() && poly_gcd(&g_prime, &n1_prime).deg_i() <= 0;
    let generic_count = 2 * g_prime.deg_i().max(0) + n1_prime.deg_i().max(0);

    let degree = infinity + weierstrass_count + marked_count + generic_count;
    let expected = 2 * (2 * g - 2 + n);
    assert_eq!(degree, expected, "zero count of a section of (Ω(D))^2");
    if !simple {
        return Err(not_simple);
    }
    // every zero is simple, hence a branch point
    let branch = degree;
    let genus_rh = (2 * (2 * g - 2) + branch) / 2 + 1;
    Ok(SpectralData {
        q: q.clone(),
        zeros: ZeroDivisor {
            infinity,
            weierstrass: wz.monic(),
            marked,
            generic: (g_prime, n1_prime),
            degree,
        },
        genus_formula,
        genus_rh,
        prym_dim: genus_formula - g,
    })
}

/// Product of `x - r` over roots `r` of `f` with `ord_r(p) >= s`.
fn roots_of_order(f: &Poly, p: &Poly, s: i64) -> Poly {
    if p.is_zero() || s <= 0 {
        return f.monic();
    }
    let mut r = poly_gcd(f, p);
    for k in 1..s {
        if r.deg_i() <= 0 {
            break;
        }
        let q = p.exact_div(&r.pow(k as u32)).expect("each root has order >= k");
        r = poly_gcd(&r, &q);
    }
    r
}

/// `Σ_r min(2 ord_r A, 2 ord_r B + 1)` over roots `r` of `f`.
fn weierstrass_degree(f: &Poly, a: &Poly, b: &Poly) -> i64 {
    let mut total = 0;
    for j in 1.. {
        let ra = roots_of_order(f, a, (j + 1) / 2);
        let rb = roots_of_order(f, b, j / 2);
        let k = poly_gcd(&ra, &rb).deg_i();
        if k <= 0 {
            break;
        }
        total += k;
    }
    total
}

impl ZeroDivisor {
    /// Number of distinct zeros, when all are simple.
    pub fn support_size(&self) -> i64 {
        self.infinity
            + self.weierstrass.deg_i().max(0)
            + self.marked.iter().filter(|(_, k)| !k.is_zero()).count() as i64
            + 2 * self.generic.0.deg_i().max(0)
            + self.generic.1.deg_i().max(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::samples;
    use crate::kernel::ri;

    #[test]
    fn genus_two_basis_elements() {
        for n in [1, 2] {
            let sp = HiggsSpace::new(samples::config(2, n)).unwrap();
            for q in sp.quad_basis() {
                match spectral_check(&sp, q) {
                    Ok(s) => {
                        assert_eq!(s.genus_rh, s.genus_formula);
                        assert_eq!(s.genus_formula, 5 + n as i64);
                        assert_eq!(s.prym_dim, 3 + n as i64);
                    }
                    Err(HitchinError::NotSimpleZeros { genus_formula }) => {
                        assert_eq!(genus_formula, 5 + n as i64)
                    }
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn generic_combination_is_smooth() {
        let sp = HiggsSpace::new(samples::config(2, 2)).unwrap();
        let coords: Vec<_> = (0..sp.quad_basis().len() as i64).map(|i| ri(2 * i + 1)).collect();
        let q = QuadDifferential::combination(sp.quad_basis(), &coords);
        let s = spectral_check(&sp, &q).unwrap();
        // 2(2g - 2 + N) simple zeros
        assert_eq!(s.zeros.degree, 8);
        assert_eq!(s.zeros.support_size(), 8);
        assert_eq!(s.genus_rh, 7);
    }

    #[test]
    fn square_is_not_simple() {
        let sp = HiggsSpace::new(samples::config(2, 2)).unwrap();
        let w = &sp.diff_basis()[0];
        let q = w.tensor(w, sp.marked().curve());
        assert_eq!(
            spectral_check(&sp, &q),
            Err(HitchinError::NotSimpleZeros { genus_formula: 7 })
        );
    }
}
