//! Singular vectors and truncated quotients of Verma modules by Sugawara relations.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::kernel::{Rat, RatMatrix};
use crate::par;

use super::lie::{Gen, LoopGen};
use super::module::{Actor, Module, ModuleKind, ModuleVector, Monomial};
use super::sugawara::{sugawara_apply, SugawaraOp};
use super::AffineError;

/// Positive-mode generators `X_a^{(i)}`, `1 <= a <= d`.
fn positive_generators(copies: usize, d: i64) -> Vec<LoopGen> {
    (1..=d)
        .flat_map(|a| (1..=copies).flat_map(move |c| Gen::ALL.map(|g| LoopGen::new(g, a, c))))
        .collect()
}

/// Whether every positive mode annihilates `v`.
pub fn is_singular(actor: &mut Actor<'_>, v: &ModuleVector) -> bool {
    let d = v.degree().unwrap_or(0);
    let copies = actor.module().copies();
    positive_generators(copies, d)
        .into_iter()
        .all(|x| actor.act_gen(x, v).is_zero())
}

/// Basis of the degree-`d` vectors killed by all positive modes. Modules with
/// free zero modes need `zero_bound`, which truncates the domain only; images
/// are computed exactly.
pub fn singular_vectors(
    module: &Module,
    d: i64,
    zero_bound: Option<usize>,
) -> Result<Vec<ModuleVector>, AffineError> {
    let basis = module.basis(d, zero_bound)?;
    let gens = positive_generators(module.copies(), d);
    let images: Vec<Vec<ModuleVector>> = par::map_with(
        &basis,
        || module.actor(),
        |a, w| {
            let v = ModuleVector::basis(w.clone());
            gens.iter().map(|x| a.act_gen(*x, &v)).collect()
        },
    );
    let mut rows: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    for img in &images {
        for (gi, v) in img.iter().enumerate() {
            for w in v.terms.keys() {
                let n = rows.len();
                rows.entry((gi, w.clone())).or_insert(n);
            }
        }
    }
    if rows.is_empty() {
        return Ok(basis.into_iter().map(ModuleVector::basis).collect());
    }
    let mut m = RatMatrix::zeros(rows.len(), basis.len());
    for (j, img) in images.iter().enumerate() {
        for (gi, v) in img.iter().enumerate() {
            for (w, c) in &v.terms {
                m.set(rows[&(gi, w.clone())], j, c.clone());
            }
        }
    }
    Ok(m.kernel_basis()
        .into_iter()
        .map(|k| {
            let mut v = ModuleVector::zero();
            for (w, c) in basis.iter().zip(k) {
                v.add_scaled(&ModuleVector::basis(w.clone()), &c);
            }
            v
        })
        .collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuotientVerdict {
    /// The highest weight vector lies in the span of the relations.
    ZeroCertified,
    /// No relation up to the given depth kills the highest weight vector.
    NonzeroUpToDepth,
}

/// Truncated test for `M_{-2,λ} ⊗ C_q = 0`: spans `(S_m^{(i)} - c_m^{(i)}) w`
/// over PBW words `w` of degree `<= depth` with at most `f0_bound` zero-mode
/// letters, `|m| <= depth`, and asks whether `μ_λ` lies in the span. Missing
/// jet values, and all values for `m > 0`, are taken to be zero.
pub fn verma_quotient_truncated(
    module: &Module,
    jets: &BTreeMap<(usize, i64), Rat>,
    depth: i64,
    f0_bound: usize,
) -> Result<QuotientVerdict, AffineError> {
    if !matches!(module.kind(), ModuleKind::Verma(_)) {
        return Err(AffineError::NotVerma);
    }
    let mut words = Vec::new();
    for d in 0..=depth.max(0) {
        words.extend(module.basis(d, Some(f0_bound))?);
    }
    let ops: Vec<SugawaraOp> = (1..=module.copies())
        .flat_map(|i| (-depth..=depth).map(move |m| SugawaraOp::new(m, i)))
        .collect();
    let relations: Vec<Vec<ModuleVector>> = par::map_with(
        &words,
        || module.actor(),
        |a, w| {
            let v = ModuleVector::basis(w.clone());
            ops.iter()
                .map(|op| {
                    let c = if op.m > 0 {
                        Rat::zero()
                    } else {
                        jets.get(&(op.copy, op.m)).cloned().unwrap_or_else(Rat::zero)
                    };
                    let mut r = sugawara_apply(a, *op, &v);
                    r.add_scaled(&v, &-c);
                    r
                })
                .collect()
        },
    );
    let rels: Vec<ModuleVector> = relations.into_iter().flatten().filter(|r| !r.is_zero()).collect();
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    index.insert(Vec::new(), 0);
    for r in &rels {
        for w in r.terms.keys() {
            let n = index.len();
            index.entry(w.clone()).or_insert(n);
        }
    }
    let mut m = RatMatrix::zeros(index.len(), rels.len().max(1));
    for (j, r) in rels.iter().enumerate() {
        for (w, c) in &r.terms {
            m.set(index[w], j, c.clone());
        }
    }
    let mut target = vec![Rat::zero(); index.len()];
    target[0] = Rat::one();
    Ok(if m.in_column_space(&target) {
        QuotientVerdict::ZeroCertified
    } else {
        QuotientVerdict::NonzeroUpToDepth
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::lie::critical_level;
    use crate::affine::sugawara::delta;
    use crate::kernel::{rat, ri};

    #[test]
    fn true_vacuum_dimensions() {
        let m = Module::true_vac(1, critical_level());
        let dims: Vec<usize> = (0..=4)
            .map(|d| singular_vectors(&m, d, None).unwrap().len())
            .collect();
        assert_eq!(dims, vec![1, 0, 1, 1, 2]);
    }

    #[test]
    fn sugawara_images_are_singular() {
        let m = Module::vac(1, critical_level());
        let mut a = m.actor();
        let v = m.generator();
        let s0 = sugawara_apply(&mut a, SugawaraOp::new(0, 1), &v);
        assert!(!s0.is_zero());
        assert!(is_singular(&mut a, &s0));
        let s = sugawara_apply(&mut a, SugawaraOp::new(-1, 1), &s0);
        let s = sugawara_apply(&mut a, SugawaraOp::new(-2, 1), &s);
        assert!(is_singular(&mut a, &s));
        let not = m.act_gen(LoopGen::f(-1, 1), &v);
        assert!(!is_singular(&mut a, &not));
    }

    #[test]
    fn quotient_examples() {
        let lambda = ri(1);
        let m = Module::verma(vec![lambda.clone()], critical_level());
        let mut jets = BTreeMap::new();
        jets.insert((1, 0), rat(1, 7));
        assert_eq!(
            verma_quotient_truncated(&m, &jets, 0, 1).unwrap(),
            QuotientVerdict::ZeroCertified
        );
        jets.insert((1, 0), delta(&lambda));
        assert_eq!(
            verma_quotient_truncated(&m, &jets, 0, 1).unwrap(),
            QuotientVerdict::NonzeroUpToDepth
        );
        let m0 = Module::verma(vec![ri(0)], critical_level());
        assert_eq!(
            verma_quotient_truncated(&m0, &BTreeMap::new(), 2, 2).unwrap(),
            QuotientVerdict::NonzeroUpToDepth
        );
    }
}
