//! Sugawara operators
//! `S_m = 1/2 Σ_k (:e_k f_{m-k}: + :f_k e_{m-k}:) + 1/4 Σ_k :h_k h_{m-k}:`,
//! normal ordered with the larger mode acting first.

use num_traits::Zero;

use crate::kernel::{rat, Rat};

use super::lie::{Gen, LoopGen};
use super::module::{Actor, Module, ModuleVector};

/// Constant `c` in `[S_m, X_n] = c (k + 2) n X_{m+n}`, found by direct
/// evaluation at several non-critical levels.
pub const CENTRALITY_CONSTANT: i64 = -1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SugawaraOp {
    pub m: i64,
    pub copy: usize,
}

impl SugawaraOp {
    /// Filtration degree of `S_m`.
    pub const FILTRATION_DEGREE: usize = 2;

    pub fn new(m: i64, copy: usize) -> Self {
        SugawaraOp { m, copy }
    }
}

/// `Δ(λ) = λ(λ + 2) / 4`, the eigenvalue of `S_0` on a highest weight vector.
pub fn delta(lambda: &Rat) -> Rat {
    lambda * (lambda + Rat::from_integer(2.into())) / Rat::from_integer(4.into())
}

fn quadratic_terms() -> [(Rat, Gen, Gen); 3] {
    [
        (rat(1, 2), Gen::E, Gen::F),
        (rat(1, 2), Gen::F, Gen::E),
        (rat(1, 4), Gen::H, Gen::H),
    ]
}

/// `S_m^{(i)} v`.
pub fn sugawara_apply(actor: &mut Actor<'_>, op: SugawaraOp, v: &ModuleVector) -> ModuleVector {
    let mut out = ModuleVector::zero();
    for (w, c) in &v.terms {
        out.add_scaled(&sugawara_word(actor, op, w), c);
    }
    out
}

fn sugawara_word(actor: &mut Actor<'_>, op: SugawaraOp, w: &[LoopGen]) -> ModuleVector {
    let key = (op.m, op.copy, w.to_vec());
    if let Some(v) = actor.sugawara_cache().get(&key) {
        return v.clone();
    }
    let d = Module::degree(w);
    let basis = ModuleVector::basis(w.to_vec());
    let mut out = ModuleVector::zero();
    // both modes must be at most d for a nonzero contribution
    for k in (op.m - d)..=d {
        let l = op.m - k;
        for (coef, a, b) in quadratic_terms() {
            let xa = LoopGen::new(a, k, op.copy);
            let yb = LoopGen::new(b, l, op.copy);
            let (first, second) = if k <= l { (yb, xa) } else { (xa, yb) };
            let step = actor.act_gen(first, &basis);
            if step.is_zero() {
                continue;
            }
            out.add_scaled(&actor.act_gen(second, &step), &coef);
        }
    }
    actor.sugawara_cache().insert(key, out.clone());
    out
}

/// `(S_m X_n - X_n S_m) v` in the module's level.
pub fn centrality_check(actor: &mut Actor<'_>, m: i64, x: LoopGen, v: &ModuleVector) -> ModuleVector {
    let op = SugawaraOp::new(m, x.copy);
    let xv = actor.act_gen(x, v);
    let sxv = sugawara_apply(actor, op, &xv);
    let sv = sugawara_apply(actor, op, v);
    let xsv = actor.act_gen(x, &sv);
    sxv.sub(&xsv)
}

/// `c (k + 2) n X_{m+n} v`, the predicted commutator.
pub fn centrality_prediction(actor: &mut Actor<'_>, m: i64, x: LoopGen, v: &ModuleVector) -> ModuleVector {
    let k = actor.module().level().clone();
    let factor = Rat::from_integer(CENTRALITY_CONSTANT.into())
        * (k + Rat::from_integer(2.into()))
        * Rat::from_integer(x.mode.into());
    if factor.is_zero() {
        return ModuleVector::zero();
    }
    let shifted = LoopGen::new(x.gen, x.mode + m, x.copy);
    actor.act_gen(shifted, v).scale(&factor)
}
