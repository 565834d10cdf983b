//! Jets of quadratic differentials at the marked points and the linear maps
//! built from them: restriction to jets, `R_{-2}` (the `c_0` coefficients),
//! the fibres `H_{Δ(λ)}`, globality and admissibility of jet tuples.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::affine::delta;
use crate::curve::{
    c_coefficients, quad_basis, span_coordinates, CurveError, FieldElement, MarkedCurve, QuadDifferential,
};
use crate::kernel::{AffineSolution, Rat, RatMatrix};
use crate::par;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error("expected {expected} values, got {got}")]
    Length { expected: usize, got: usize },
    #[error("element is not in the fibre over the chosen base solution")]
    NotInFibre,
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// `c_m` coefficients for `m_min <= m <= 0` at each marked point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalJetTuple {
    pub m_min: i64,
    pub jets: Vec<BTreeMap<i64, Rat>>,
}

impl LocalJetTuple {
    pub fn zero(n: usize, m_min: i64) -> Self {
        LocalJetTuple {
            m_min,
            jets: vec![(m_min..=0).map(|m| (m, Rat::zero())).collect(); n],
        }
    }

    pub fn c(&self, i: usize, m: i64) -> Rat {
        self.jets[i].get(&m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Keys `(copy, m)` with 1-based copies, as consumed by
    /// [`crate::affine::verma_quotient_truncated`].
    pub fn as_copy_map(&self) -> BTreeMap<(usize, i64), Rat> {
        let mut out = BTreeMap::new();
        for (i, j) in self.jets.iter().enumerate() {
            for (m, c) in j {
                out.insert((i + 1, *m), c.clone());
            }
        }
        out
    }
}

/// Coordinates in the basis of `H^0(X, Ω^2(D))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasePoint {
    pub coords: Vec<Rat>,
}

/// The affine space `R_{-2}^{-1}(Δ(λ))` inside `H^0(X, Ω^2(2D))`, as a
/// particular solution plus a basis of directions (coordinates in the basis
/// of `H^0(X, Ω^2(2D))`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibleFiberPoint {
    pub lambda: Vec<Rat>,
    pub target: Vec<Rat>,
    pub coords: Vec<Rat>,
    pub kernel: Vec<Vec<Rat>>,
}

/// Numbers attached to the sequence
/// `0 -> H^0(Ω^2(D)) -> H^0(Ω^2(2D)) -> Q^N -> 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Exactness {
    pub dim_d: usize,
    pub dim_2d: usize,
    pub rank_r: usize,
    pub kernel_dim: usize,
    /// The kernel of `R_{-2}` is exactly the image of `H^0(Ω^2(D))`.
    pub kernel_is_base: bool,
}

impl Exactness {
    pub fn holds(&self, n: usize) -> bool {
        self.rank_r == n
            && self.dim_2d == self.dim_d + n
            && self.kernel_dim == self.dim_d
            && self.kernel_is_base
    }
}

/// Both bases of quadratic differentials for one marked curve.
#[derive(Clone, Debug)]
pub struct BridgeSpace {
    marked: MarkedCurve,
    base: Vec<QuadDifferential>,
    doubled: Vec<QuadDifferential>,
}

impl BridgeSpace {
    pub fn new(marked: MarkedCurve) -> Result<Self, BridgeError> {
        let d = marked.d();
        let base = quad_basis(marked.curve(), &d)?;
        let doubled = quad_basis(marked.curve(), &d.scaled(2))?;
        Ok(BridgeSpace {
            marked,
            base,
            doubled,
        })
    }

    pub fn marked(&self) -> &MarkedCurve {
        &self.marked
    }

    /// Basis of `H^0(X, Ω^2(D))`.
    pub fn base_basis(&self) -> &[QuadDifferential] {
        &self.base
    }

    /// Basis of `H^0(X, Ω^2(2D))`.
    pub fn doubled_basis(&self) -> &[QuadDifferential] {
        &self.doubled
    }

    pub fn n(&self) -> usize {
        self.marked.n()
    }

    /// `c_m(q)` for `m_min <= m <= 0` at every marked point.
    pub fn jets(&self, q: &QuadDifferential, m_min: i64) -> Result<LocalJetTuple, BridgeError> {
        let c = self.marked.curve();
        let jets = self
            .marked
            .points()
            .iter()
            .map(|p| c_coefficients(c, q, p, m_min..=0))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LocalJetTuple { m_min, jets })
    }

    /// Rows `(i, m)` for `m` in `ms`, one column per basis element.
    fn jet_matrix(&self, basis: &[QuadDifferential], ms: &[i64]) -> Result<RatMatrix, BridgeError> {
        let c = self.marked.curve();
        let m_min = *ms.iter().min().unwrap_or(&0);
        let m_max = *ms.iter().max().unwrap_or(&0);
        let cols = par::map(basis, |q| -> Result<Vec<Rat>, CurveError> {
            let mut col = Vec::new();
            for p in self.marked.points() {
                let cs = c_coefficients(c, q, p, m_min..=m_max)?;
                col.extend(ms.iter().map(|m| cs[m].clone()));
            }
            Ok(col)
        })
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
        let rows = self.n() * ms.len();
        if cols.is_empty() {
            return Ok(RatMatrix::zeros(rows, 0));
        }
        Ok(RatMatrix::from_cols(&cols, rows))
    }

    /// Rank of `H^0(Ω^2(D)) -> ⊕_i (c_{-1}, ..., c_{-1-M})`.
    pub fn restriction_rank(&self, order: usize) -> Result<usize, BridgeError> {
        let ms: Vec<i64> = (0..=order as i64).map(|j| -1 - j).collect();
        Ok(self.jet_matrix(&self.base, &ms)?.rank())
    }

    /// Smallest order at which the jet map is injective, with its rank.
    /// Returns the last order tried if `max_order` is reached first.
    pub fn stable_restriction_rank(&self, max_order: usize) -> Result<(usize, usize), BridgeError> {
        let dim = self.base.len();
        let mut last = (0, 0);
        for m in 0..=max_order {
            let r = self.restriction_rank(m)?;
            last = (m, r);
            if r == dim {
                break;
            }
        }
        Ok(last)
    }

    /// `R_{-2}(q) = (c_0 at z_1, ..., c_0 at z_N)`.
    pub fn r_minus_2(&self, q: &QuadDifferential) -> Result<Vec<Rat>, BridgeError> {
        let j = self.jets(q, 0)?;
        Ok((0..self.n()).map(|i| j.c(i, 0)).collect())
    }

    fn r_matrix(&self) -> Result<RatMatrix, BridgeError> {
        self.jet_matrix(&self.doubled, &[0])
    }

    pub fn exactness(&self) -> Result<Exactness, BridgeError> {
        let r = self.r_matrix()?;
        let kernel = r.kernel_basis();
        let base_fe: Vec<FieldElement> = self.base.iter().map(|q| q.coeff.clone()).collect();
        let kernel_in_base = kernel.iter().all(|k| {
            let q = QuadDifferential::combination(&self.doubled, k);
            span_coordinates(&q.coeff, &base_fe).is_some()
        });
        let doubled_fe: Vec<FieldElement> = self.doubled.iter().map(|q| q.coeff.clone()).collect();
        let base_in_doubled = self
            .base
            .iter()
            .all(|q| span_coordinates(&q.coeff, &doubled_fe).is_some());
        let base_in_kernel = self.base.iter().all(|q| {
            self.r_minus_2(q)
                .map(|v| v.iter().all(Zero::is_zero))
                .unwrap_or(false)
        });
        Ok(Exactness {
            dim_d: self.base.len(),
            dim_2d: self.doubled.len(),
            rank_r: r.rank(),
            kernel_dim: kernel.len(),
            kernel_is_base: kernel_in_base && base_in_doubled && base_in_kernel,
        })
    }

    /// `(Δ(λ_1), ..., Δ(λ_N))`.
    pub fn delta_vector(lambda: &[Rat]) -> Vec<Rat> {
        lambda.iter().map(delta).collect()
    }

    /// One point of `R_{-2}^{-1}(Δ(λ))` and the directions of the fibre.
    pub fn fiber_point(&self, lambda: &[Rat]) -> Result<AdmissibleFiberPoint, BridgeError> {
        if lambda.len() != self.n() {
            return Err(BridgeError::Length {
                expected: self.n(),
                got: lambda.len(),
            });
        }
        let target = Self::delta_vector(lambda);
        let sol = self.r_matrix()?.solve(&target).expect("R_{-2} is surjective");
        Ok(AdmissibleFiberPoint {
            lambda: lambda.to_vec(),
            target,
            coords: sol.particular,
            kernel: sol.kernel,
        })
    }

    pub fn doubled_element(&self, coords: &[Rat]) -> QuadDifferential {
        QuadDifferential::combination(&self.doubled, coords)
    }

    /// Global sections of `Ω^2(2D)` matching `jets` for every recorded `m`;
    /// `None` certifies that the jets are not global.
    pub fn is_global(&self, jets: &LocalJetTuple) -> Result<Option<AffineSolution>, BridgeError> {
        let ms: Vec<i64> = (jets.m_min..=0).collect();
        let m = self.jet_matrix(&self.doubled, &ms)?;
        let rhs: Vec<Rat> = (0..self.n())
            .flat_map(|i| ms.iter().map(move |&k| jets.c(i, k)))
            .collect();
        Ok(m.solve(&rhs))
    }

    /// `c_0^{(i)} = Δ(λ_i)` for every `i`.
    pub fn is_admissible(jets: &LocalJetTuple, lambda: &[Rat]) -> bool {
        jets.jets.len() == lambda.len() && lambda.iter().enumerate().all(|(i, l)| jets.c(i, 0) == delta(l))
    }

    /// Coordinates of `q - q_0` in the basis of `H^0(Ω^2(D))`, where `q_0` is the
    /// base solution of the fibre and `q` is given in the basis of `H^0(Ω^2(2D))`.
    pub fn f_q(&self, fibre: &AdmissibleFiberPoint, q: &[Rat]) -> Result<BasePoint, BridgeError> {
        let diff: Vec<Rat> = q.iter().zip(&fibre.coords).map(|(a, b)| a - b).collect();
        let e = self.doubled_element(&diff);
        let base_fe: Vec<FieldElement> = self.base.iter().map(|q| q.coeff.clone()).collect();
        let coords = span_coordinates(&e.coeff, &base_fe).ok_or(BridgeError::NotInFibre)?;
        Ok(BasePoint { coords })
    }

    /// Coordinates in the basis of `H^0(Ω^2(2D))` of a base-space element.
    pub fn base_to_doubled(&self, coords: &[Rat]) -> Option<Vec<Rat>> {
        let q = QuadDifferential::combination(&self.base, coords);
        let fe: Vec<FieldElement> = self.doubled.iter().map(|q| q.coeff.clone()).collect();
        span_coordinates(&q.coeff, &fe)
    }
}

/// Dimension of the weight-`d` piece of a polynomial ring in `n` generators of
/// weight 2.
pub fn graded_dims(n: usize, d: usize) -> u128 {
    if d % 2 == 1 {
        return 0;
    }
    let k = (d / 2) as u128;
    let n = n as u128;
    if n == 0 {
        return u128::from(k == 0);
    }
    // C(k + n - 1, n - 1)
    let mut acc: u128 = 1;
    for i in 1..n {
        acc = acc * (k + i) / i;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::samples;
    use crate::kernel::{rat, ri};

    #[test]
    fn stars_and_bars() {
        assert_eq!(graded_dims(4, 2), 4);
        assert_eq!(graded_dims(4, 1), 0);
        assert_eq!(graded_dims(4, 4), 10);
        assert_eq!(graded_dims(0, 0), 1);
    }

    #[test]
    fn restriction_ranks() {
        let s = BridgeSpace::new(samples::config(2, 1)).unwrap();
        assert_eq!(s.stable_restriction_rank(10).unwrap().1, 4);
        assert!(s.restriction_rank(0).unwrap() <= 1);
        let s = BridgeSpace::new(samples::config(2, 2)).unwrap();
        assert_eq!(s.stable_restriction_rank(10).unwrap().1, 5);
    }

    #[test]
    fn fibres_and_admissibility() {
        let s = BridgeSpace::new(samples::config(2, 2)).unwrap();
        let ex = s.exactness().unwrap();
        assert_eq!((ex.dim_d, ex.dim_2d, ex.rank_r), (5, 7, 2));
        assert!(ex.holds(2));
        let lambda = [ri(1), ri(3)];
        let fp = s.fiber_point(&lambda).unwrap();
        assert_eq!(fp.target, vec![rat(3, 4), rat(15, 4)]);
        let q = s.doubled_element(&fp.coords);
        assert_eq!(s.r_minus_2(&q).unwrap(), fp.target);
        let j = s.jets(&q, -3).unwrap();
        assert!(BridgeSpace::is_admissible(&j, &lambda));
        assert!(!BridgeSpace::is_admissible(&j, &[ri(1), ri(1)]));
        assert!(s.is_global(&j).unwrap().is_some());
        assert!(s.f_q(&fp, &fp.coords).unwrap().coords.iter().all(Zero::is_zero));
    }
}
