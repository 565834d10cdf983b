//! Parabolic SL2 Higgs fields on the trivial bundle `O ⊕ O`.
//!
//! A Higgs field is a trace-free matrix `[[α, β], [γ, -α]]` of sections of
//! `Ω(D)`. It is parabolic for a flag (a line `ℓ_i ⊂ Q^2` at each marked
//! point) when each residue matrix kills `ℓ_i` and has image inside `ℓ_i`,
//! i.e. lies in the nilradical of the Borel subalgebra stabilizing `ℓ_i`.

mod lift;
mod spectral;

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::curve::{
    diff_basis, local_expand, quad_basis, span_coordinates, CurveError, FieldElement, MarkedCurve,
    MeroDifferential, QuadDifferential,
};
use crate::kernel::{ri, Rat, RatMatrix};

pub use lift::lift_to_higgs;
pub use spectral::{spectral_check, SpectralData, ZeroDivisor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HitchinError {
    #[error("determinant does not lie in H^0(X, Ω^2(D))")]
    MembershipFailure,
    #[error("entry is not a section of Ω(D)")]
    NotInHiggsSpace,
    #[error("residue at marked point {0} vanishes")]
    ZeroResidue(usize),
    #[error("residue at marked point {0} is not nilpotent")]
    NonNilpotentResidue(usize),
    #[error("spectral curve has non-simple branch points (formula genus {genus_formula})")]
    NotSimpleZeros { genus_formula: i64 },
    #[error("no lift found among {tried} candidates")]
    NotFound { tried: usize },
    #[error("zero quadratic differential")]
    ZeroDifferential,
    #[error("flag count {got} does not match {expected} marked points")]
    FlagCount { expected: usize, got: usize },
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// A line in `Q^2`, normalized so that its first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Line {
    u: Rat,
    v: Rat,
}

impl Line {
    /// The line through `(u, v)`. `None` for the zero vector.
    pub fn new(u: Rat, v: Rat) -> Option<Self> {
        if !u.is_zero() {
            let v = v / &u;
            Some(Line { u: Rat::one(), v })
        } else if !v.is_zero() {
            Some(Line {
                u: Rat::zero(),
                v: Rat::one(),
            })
        } else {
            None
        }
    }

    pub fn from_ints(u: i64, v: i64) -> Self {
        Line::new(ri(u), ri(v)).expect("nonzero vector")
    }

    pub fn u(&self) -> &Rat {
        &self.u
    }

    pub fn v(&self) -> &Rat {
        &self.v
    }

    /// Generator of the nilradical of the Borel fixing this line:
    /// `ℓ ⊗ ℓ^⊥ = [[-uv, u^2], [-v^2, uv]]`.
    pub fn nilpotent_generator(&self) -> ResidueMatrix {
        let (u, v) = (&self.u, &self.v);
        ResidueMatrix::new(-(u * v), u * u, -(v * v))
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::kernel::rat::fmt_rat;
        write!(f, "({} : {})", fmt_rat(&self.u), fmt_rat(&self.v))
    }
}

/// One line per marked point.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FlagData {
    pub lines: Vec<Line>,
}

impl FlagData {
    pub fn new(lines: Vec<Line>) -> Self {
        FlagData { lines }
    }

    /// The same line at every point.
    pub fn uniform(line: Line, n: usize) -> Self {
        FlagData::new(vec![line; n])
    }
}

/// `[[a, b], [c, -a]]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ResidueMatrix {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl ResidueMatrix {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        ResidueMatrix { a, b, c }
    }

    pub fn zero() -> Self {
        ResidueMatrix::new(Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn det(&self) -> Rat {
        -(&self.a * &self.a) - &self.b * &self.c
    }

    pub fn apply(&self, x: &Rat, y: &Rat) -> (Rat, Rat) {
        (&self.a * x + &self.b * y, &self.c * x - &self.a * y)
    }

    /// Entries of the matrix square (trace-free 2x2: `M^2 = -det(M) I`).
    pub fn square(&self) -> [[Rat; 2]; 2] {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        [[a * a + b * c, a * b - b * a], [c * a - a * c, c * b + a * a]]
    }

    /// Column space, if the matrix is nonzero and has rank one.
    pub fn image(&self) -> Option<Line> {
        if !self.det().is_zero() {
            return None;
        }
        Line::new(self.a.clone(), self.c.clone()).or_else(|| Line::new(self.b.clone(), -&self.a))
    }

    /// `M ℓ = 0` and `M Q^2 ⊆ ℓ`.
    pub fn preserves_flag(&self, l: &Line) -> bool {
        let (x, y) = self.apply(&l.u, &l.v);
        if !(x.is_zero() && y.is_zero()) {
            return false;
        }
        // both columns are multiples of ℓ
        let cols = [(&self.a, &self.c), (&self.b, &(-&self.a))];
        cols.iter().all(|(p, q)| (*p * &l.v - *q * &l.u).is_zero())
    }
}

/// A trace-free matrix of meromorphic differentials `[[α, β], [γ, -α]]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HiggsField {
    pub alpha: MeroDifferential,
    pub beta: MeroDifferential,
    pub gamma: MeroDifferential,
}

impl HiggsField {
    pub fn new(alpha: MeroDifferential, beta: MeroDifferential, gamma: MeroDifferential) -> Self {
        HiggsField { alpha, beta, gamma }
    }

    pub fn zero() -> Self {
        HiggsField::new(
            MeroDifferential::zero(),
            MeroDifferential::zero(),
            MeroDifferential::zero(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        HiggsField::new(self.alpha.scale(c), self.beta.scale(c), self.gamma.scale(c))
    }

    fn entries(&self) -> [&MeroDifferential; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }
}

/// A Higgs field together with a flag it is parabolic for.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParabolicHiggsField {
    pub field: HiggsField,
    pub flags: FlagData,
}

/// Precomputed bases and residue data for one marked curve.
#[derive(Clone, Debug)]
pub struct HiggsSpace {
    marked: MarkedCurve,
    diff: Vec<MeroDifferential>,
    quad: Vec<QuadDifferential>,
    /// `residues[i][j]`: residue of `diff[j]` at marked point `i`.
    residues: Vec<Vec<Rat>>,
}

impl HiggsSpace {
    pub fn new(marked: MarkedCurve) -> Result<Self, HitchinError> {
        let d = marked.d();
        let diff = diff_basis(marked.curve(), &d)?;
        let quad = quad_basis(marked.curve(), &d)?;
        let residues = marked
            .points()
            .iter()
            .map(|p| {
                diff.iter()
                    .map(|w| residue(&marked, w, p))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HiggsSpace {
            marked,
            diff,
            quad,
            residues,
        })
    }

    pub fn marked(&self) -> &MarkedCurve {
        &self.marked
    }

    /// Basis of `H^0(X, Ω(D))`.
    pub fn diff_basis(&self) -> &[MeroDifferential] {
        &self.diff
    }

    /// Basis of `H^0(X, Ω^2(D))`.
    pub fn quad_basis(&self) -> &[QuadDifferential] {
        &self.quad
    }

    pub fn n(&self) -> usize {
        self.marked.n()
    }

    /// Coordinates of a differential in the basis of `H^0(X, Ω(D))`.
    pub fn diff_coordinates(&self, w: &MeroDifferential) -> Option<Vec<Rat>> {
        let b: Vec<FieldElement> = self.diff.iter().map(|d| d.coeff.clone()).collect();
        span_coordinates(&w.coeff, &b)
    }

    /// Coordinates of a quadratic differential in the basis of `H^0(X, Ω^2(D))`.
    pub fn quad_coordinates(&self, q: &QuadDifferential) -> Option<Vec<Rat>> {
        let b: Vec<FieldElement> = self.quad.iter().map(|d| d.coeff.clone()).collect();
        span_coordinates(&q.coeff, &b)
    }

    /// Field with entries given by coordinates in the basis of `H^0(X, Ω(D))`.
    pub fn field_from_coords(&self, alpha: &[Rat], beta: &[Rat], gamma: &[Rat]) -> HiggsField {
        HiggsField::new(
            MeroDifferential::combination(&self.diff, alpha),
            MeroDifferential::combination(&self.diff, beta),
            MeroDifferential::combination(&self.diff, gamma),
        )
    }

    /// Entrywise residues at marked point `i`.
    pub fn residue_matrix(&self, a: &HiggsField, i: usize) -> Result<ResidueMatrix, HitchinError> {
        let p = &self.marked.points()[i];
        let [al, be, ga] = a.entries().map(|w| residue(&self.marked, w, p));
        Ok(ResidueMatrix::new(al?, be?, ga?))
    }

    /// Whether every residue matrix lies in the nilradical fixed by its line.
    pub fn check_parabolic(&self, a: &HiggsField, flags: &FlagData) -> Result<bool, HitchinError> {
        if flags.lines.len() != self.n() {
            return Err(HitchinError::FlagCount {
                expected: self.n(),
                got: flags.lines.len(),
            });
        }
        for (i, l) in flags.lines.iter().enumerate() {
            if !self.residue_matrix(a, i)?.preserves_flag(l) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Validates entries and the parabolic condition.
    pub fn parabolic(&self, field: HiggsField, flags: FlagData) -> Result<ParabolicHiggsField, HitchinError> {
        for w in field.entries() {
            if self.diff_coordinates(w).is_none() {
                return Err(HitchinError::NotInHiggsSpace);
            }
        }
        if !self.check_parabolic(&field, &flags)? {
            return Err(HitchinError::MembershipFailure);
        }
        Ok(ParabolicHiggsField { field, flags })
    }

    /// `det A = -α^2 - βγ`, checked to lie in `H^0(X, Ω^2(D))`.
    pub fn hitchin_map(&self, a: &HiggsField) -> Result<QuadDifferential, HitchinError> {
        let q = determinant(&self.marked, a);
        if self.quad_coordinates(&q).is_none() {
            return Err(HitchinError::MembershipFailure);
        }
        Ok(q)
    }

    /// Membership in the nilpotent cone `h^{-1}(0)`.
    pub fn nilp_member(&self, a: &HiggsField) -> bool {
        determinant(&self.marked, a).is_zero()
    }

    /// Flag recovered from the residues: `ℓ_i = image(Res_i A)`.
    pub fn borel_from_residue(&self, a: &HiggsField) -> Result<FlagData, HitchinError> {
        let mut lines = Vec::with_capacity(self.n());
        for i in 0..self.n() {
            let r = self.residue_matrix(a, i)?;
            if r.is_zero() {
                return Err(HitchinError::ZeroResidue(i));
            }
            if !r.det().is_zero() {
                return Err(HitchinError::NonNilpotentResidue(i));
            }
            lines.push(r.image().expect("nonzero nilpotent has rank one"));
        }
        Ok(FlagData::new(lines))
    }

    /// Linear conditions on the coordinates `(α, β, γ)` in the basis of
    /// `H^0(X, Ω(D))` for the field to be parabolic w.r.t. `flags`. Returns a
    /// basis of the solution space.
    pub fn parabolic_subspace(&self, flags: &FlagData) -> Vec<Vec<Rat>> {
        let n = self.diff.len();
        let mut rows = Vec::new();
        for (i, l) in flags.lines.iter().enumerate() {
            let r = &self.residues[i];
            // a u + b v = 0
            let mut row1 = vec![Rat::zero(); 3 * n];
            // c u - a v = 0
            let mut row2 = vec![Rat::zero(); 3 * n];
            for j in 0..n {
                row1[j] = &r[j] * &l.u;
                row1[n + j] = &r[j] * &l.v;
                row2[2 * n + j] = &r[j] * &l.u;
                row2[j] = -(&r[j] * &l.v);
            }
            rows.push(row1);
            rows.push(row2);
        }
        if rows.is_empty() {
            return RatMatrix::zeros(1, 3 * n).kernel_basis();
        }
        RatMatrix::from_rows(rows, 3 * n).kernel_basis()
    }

    /// A random parabolic field: an integer combination (entries in
    /// `[-height, height]`) of a basis of the parabolic subspace.
    pub fn sample_parabolic<R: Rng>(&self, flags: &FlagData, height: i64, rng: &mut R) -> HiggsField {
        let sub = self.parabolic_subspace(flags);
        let n = self.diff.len();
        let mut coords = vec![Rat::zero(); 3 * n];
        for v in &sub {
            let c = ri(rng.random_range(-height..=height));
            if c.is_zero() {
                continue;
            }
            for (x, y) in coords.iter_mut().zip(v) {
                *x += &c * y;
            }
        }
        self.field_from_coords(&coords[..n], &coords[n..2 * n], &coords[2 * n..])
    }
}

fn residue(m: &MarkedCurve, w: &MeroDifferential, p: &crate::curve::CurvePoint) -> Result<Rat, HitchinError> {
    if w.is_zero() {
        return Ok(Rat::zero());
    }
    let s = local_expand(m.curve(), w, p, 0)?;
    Ok(s.coeff(-1).map_err(CurveError::from)?)
}

/// `-α⊗α - β⊗γ`.
pub fn determinant(m: &MarkedCurve, a: &HiggsField) -> QuadDifferential {
    let c = m.curve();
    let aa = a.alpha.tensor(&a.alpha, c);
    let bg = a.beta.tensor(&a.gamma, c);
    QuadDifferential::new(-&(&aa.coeff + &bg.coeff))
}

/// Entries of `A·A` as quadratic differentials; for trace-free `A` this is
/// `(α^2 + βγ) I`, so it vanishes exactly when `det A` does.
pub fn square(m: &MarkedCurve, a: &HiggsField) -> [[QuadDifferential; 2]; 2] {
    let c = m.curve();
    let t = |x: &MeroDifferential, y: &MeroDifferential| x.tensor(y, c);
    let (al, be, ga) = (&a.alpha, &a.beta, &a.gamma);
    let neg_al = al.scale(&-Rat::one());
    [
        [t(al, al).add(&t(be, ga)), t(al, be).add(&t(be, &neg_al))],
        [
            t(ga, al).add(&t(&neg_al, ga)),
            t(ga, be).add(&t(&neg_al, &neg_al)),
        ],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::samples;
    use crate::kernel::ri;

    fn r(a: i64, b: i64, c: i64) -> ResidueMatrix {
        ResidueMatrix::new(ri(a), ri(b), ri(c))
    }

    #[test]
    fn flag_condition_examples() {
        let e = r(0, 1, 0);
        assert!(e.preserves_flag(&Line::from_ints(1, 0)));
        assert!(!e.preserves_flag(&Line::from_ints(0, 1)));
        assert!(ResidueMatrix::zero().preserves_flag(&Line::from_ints(3, 7)));
    }

    #[test]
    fn images_of_nilpotents() {
        assert_eq!(r(0, 0, 1).image(), Some(Line::from_ints(0, 1)));
        assert_eq!(r(1, -1, 1).image(), Some(Line::from_ints(1, 1)));
        assert_eq!(r(1, 0, 0).image(), None);
        let l = Line::new(ri(2), ri(3)).unwrap();
        assert!(l.nilpotent_generator().preserves_flag(&l));
        assert_eq!(l.nilpotent_generator().image(), Some(l));
    }

    #[test]
    fn single_point_residues_vanish() {
        let sp = HiggsSpace::new(samples::config(2, 1)).unwrap();
        assert!(sp.residues[0].iter().all(Zero::is_zero));
    }

    #[test]
    fn zero_field() {
        let sp = HiggsSpace::new(samples::config(2, 2)).unwrap();
        let z = HiggsField::zero();
        assert!(sp.hitchin_map(&z).unwrap().is_zero());
        assert!(sp.nilp_member(&z));
        assert_eq!(sp.residue_matrix(&z, 0).unwrap(), ResidueMatrix::zero());
        assert_eq!(sp.borel_from_residue(&z), Err(HitchinError::ZeroResidue(0)));
    }

    #[test]
    fn strictly_upper_triangular_is_nilpotent() {
        let sp = HiggsSpace::new(samples::config(2, 2)).unwrap();
        let n = sp.diff_basis().len();
        let zero = vec![ri(0); n];
        let beta: Vec<Rat> = (0..n as i64).map(|i| ri(i + 1)).collect();
        let a = sp.field_from_coords(&zero, &beta, &zero);
        assert!(sp.nilp_member(&a));
        let alpha: Vec<Rat> = (0..n as i64).map(|i| ri(2 - i)).collect();
        let b = sp.field_from_coords(&alpha, &beta, &zero);
        assert!(!sp.nilp_member(&b));
    }
}
