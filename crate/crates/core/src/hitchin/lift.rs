//! Best-effort search for a parabolic Higgs field with prescribed determinant.

use crate::curve::{MeroDifferential, QuadDifferential};
use crate::kernel::{ri, Rat};
use crate::par;

use super::{FlagData, HiggsField, HiggsSpace, HitchinError, Line, ParabolicHiggsField};

/// Integer vectors of length `dim` ordered by max-norm, then lexicographically,
/// at most `limit` of them.
fn lattice_by_height(dim: usize, limit: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(limit);
    if dim == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut h: i64 = 0;
    while out.len() < limit {
        let side = (2 * h + 1) as usize;
        let total = side.checked_pow(dim as u32).unwrap_or(usize::MAX);
        let mut idx = vec![0usize; dim];
        for _ in 0..total {
            let v: Vec<i64> = idx.iter().map(|&i| i as i64 - h).collect();
            if v.iter().any(|x| x.abs() == h) {
                out.push(v);
                if out.len() == limit {
                    break;
                }
            }
            for slot in idx.iter_mut().rev() {
                *slot += 1;
                if *slot < side {
                    break;
                }
                *slot = 0;
            }
        }
        h += 1;
    }
    out
}

/// Searches `(β, α)` pairs of bounded height in the coordinates of
/// `H^0(X, Ω(D))` and solves `γ = (-q - α^2) / β`. Examines at most `budget`
/// pairs; the first hit in enumeration order is returned.
pub fn lift_to_higgs(
    space: &HiggsSpace,
    q: &QuadDifferential,
    budget: usize,
) -> Result<ParabolicHiggsField, HitchinError> {
    if space.quad_coordinates(q).is_none() {
        return Err(HitchinError::MembershipFailure);
    }
    let n = space.diff_basis().len();
    let candidates = lattice_by_height(2 * n, budget);
    let tried = candidates.len();
    let c = space.marked().curve();
    par::find_map_first(&candidates, |v| {
        let to_rat = |s: &[i64]| s.iter().map(|&x| ri(x)).collect::<Vec<Rat>>();
        let beta = MeroDifferential::combination(space.diff_basis(), &to_rat(&v[..n]));
        let alpha = MeroDifferential::combination(space.diff_basis(), &to_rat(&v[n..]));
        let rest = QuadDifferential::new(-&(&q.coeff + &alpha.tensor(&alpha, c).coeff));
        let gamma = if beta.is_zero() {
            if !rest.is_zero() {
                return None;
            }
            MeroDifferential::zero()
        } else {
            let g = rest.div_by(&beta, c)?;
            space.diff_coordinates(&g)?;
            g
        };
        let field = HiggsField::new(alpha, beta, gamma);
        let flags = flags_for(space, &field)?;
        debug_assert_eq!(super::determinant(space.marked(), &field), *q);
        Some(ParabolicHiggsField { field, flags })
    })
    .ok_or(HitchinError::NotFound { tried })
}

/// The image of each nonzero residue; `(1 : 0)` where the residue vanishes.
fn flags_for(space: &HiggsSpace, a: &HiggsField) -> Option<FlagData> {
    let mut lines = Vec::with_capacity(space.n());
    for i in 0..space.n() {
        let r = space.residue_matrix(a, i).ok()?;
        let l = if r.is_zero() {
            Line::from_ints(1, 0)
        } else {
            r.image()?
        };
        lines.push(l);
    }
    let flags = FlagData::new(lines);
    space.check_parabolic(a, &flags).ok()?.then_some(flags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::samples;

    #[test]
    fn lattice_order() {
        let v = lattice_by_height(2, 10);
        assert_eq!(v[0], vec![0, 0]);
        assert!(v[1..9].iter().all(|x| x.iter().map(|a| a.abs()).max() == Some(1)));
        assert_eq!(v[9].iter().map(|a| a.abs()).max(), Some(2));
    }

    #[test]
    fn recovers_constructed_instances() {
        let sp = HiggsSpace::new(samples::config(2, 2)).unwrap();
        let c = sp.marked().curve();
        let b = sp.diff_basis();
        let q = b[0].tensor(&b[1], c).scale(&ri(-1));
        let a = lift_to_higgs(&sp, &q, 500).unwrap();
        assert_eq!(sp.hitchin_map(&a.field).unwrap(), q);
        assert!(sp.check_parabolic(&a.field, &a.flags).unwrap());

        let sq = b[1].tensor(&b[1], c).scale(&ri(-1));
        let a = lift_to_higgs(&sp, &sq, 500).unwrap();
        assert_eq!(sp.hitchin_map(&a.field).unwrap(), sq);
    }

    #[test]
    fn zero_budget() {
        let sp = HiggsSpace::new(samples::config(2, 1)).unwrap();
        let q = sp.quad_basis()[0].clone();
        assert_eq!(
            lift_to_higgs(&sp, &q, 0),
            Err(HitchinError::NotFound { tried: 0 })
        );
    }
}
