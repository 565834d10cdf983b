use std::collections::BTreeMap;

use parahitchin::affine::{
    bracket, critical_level, delta, pbw_reduce, singular_vectors, sugawara_apply, verma_quotient_truncated,
    AffineElement, Gen, LoopGen, Module, ModuleVector, QuotientVerdict, SugawaraOp,
};
use parahitchin::{rat, ri, Rat};
use proptest::prelude::*;

fn gens(range: std::ops::RangeInclusive<i64>) -> Vec<LoopGen> {
    range
        .flat_map(|m| Gen::ALL.map(|g| LoopGen::new(g, m, 1)))
        .collect()
}

/// `[a, x]` for `x` a combination of single generators and `K`.
fn bracket_with(a: LoopGen, x: &AffineElement) -> AffineElement {
    let mut out = AffineElement::zero();
    for (t, c) in &x.terms {
        if let [g] = t.word.as_slice() {
            out = out.add(&bracket(a, *g).scale(c));
        }
    }
    out
}

#[test]
fn antisymmetry_and_jacobi() {
    let gs = gens(-3..=3);
    for &a in &gs {
        for &b in &gs {
            assert_eq!(bracket(a, b), bracket(b, a).scale(&ri(-1)), "{a} {b}");
            for &c in &gs {
                let j = bracket_with(a, &bracket(b, c))
                    .add(&bracket_with(b, &bracket(c, a)))
                    .add(&bracket_with(c, &bracket(a, b)));
                assert!(j.is_zero(), "Jacobi fails on {a} {b} {c}");
            }
        }
    }
}

#[test]
fn central_terms() {
    let k = AffineElement::central();
    let h0 = AffineElement::gen(LoopGen::h(0, 1));
    assert_eq!(bracket(LoopGen::e(1, 1), LoopGen::f(-1, 1)), h0.add(&k));
    assert_eq!(bracket(LoopGen::h(1, 1), LoopGen::h(-1, 1)), k.scale(&ri(2)));
    assert!(bracket(LoopGen::e(1, 1), LoopGen::f(-1, 2)).is_zero());
}

#[test]
fn pbw_commutator_matches_bracket() {
    let gs = gens(-2..=2);
    for &a in &gs {
        for &b in &gs {
            let ab = AffineElement::word(vec![a, b]);
            let ba = AffineElement::word(vec![b, a]);
            let lhs = pbw_reduce(&ab.add(&ba.scale(&ri(-1))));
            assert_eq!(lhs, pbw_reduce(&bracket(a, b)), "{a} {b}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pbw_reduce_is_idempotent(w in prop::collection::vec((0usize..3, -2i64..=2, 1usize..=2), 0..5)) {
        let word: Vec<LoopGen> = w.into_iter().map(|(g, m, c)| LoopGen::new(Gen::ALL[g], m, c)).collect();
        let once = pbw_reduce(&AffineElement::word(word));
        prop_assert_eq!(pbw_reduce(&once), once.clone());
        for t in once.terms.keys() {
            prop_assert!(t.word.windows(2).all(|p| p[0] <= p[1]));
        }
    }

    #[test]
    fn action_respects_commutator(a in (0usize..3, -2i64..=2), b in (0usize..3, -2i64..=2), w in 0usize..20) {
        let m = Module::vac(1, ri(-2));
        let basis = m.basis(2, Some(1)).unwrap();
        let v = ModuleVector::basis(basis[w % basis.len()].clone());
        let x = LoopGen::new(Gen::ALL[a.0], a.1, 1);
        let y = LoopGen::new(Gen::ALL[b.0], b.1, 1);
        let mut act = m.actor();
        let xy = { let t = act.act_gen(y, &v); act.act_gen(x, &t) };
        let yx = { let t = act.act_gen(x, &v); act.act_gen(y, &t) };
        let br = act.act(&bracket(x, y).with_level(ri(-2)), &v).unwrap();
        prop_assert_eq!(xy.sub(&yx), br);
    }
}

#[test]
fn sugawara_eigenvalues() {
    for l in [0, 1, 2, 3, 5] {
        let m = Module::verma(vec![ri(l)], critical_level());
        let mut a = m.actor();
        let mu = m.generator();
        let expected = rat(l * (l + 2), 4);
        assert_eq!(
            sugawara_apply(&mut a, SugawaraOp::new(0, 1), &mu),
            mu.scale(&expected)
        );
        assert_eq!(delta(&ri(l)), expected);
    }
}

#[test]
fn true_vacuum_singular_dims() {
    let m = Module::true_vac(1, critical_level());
    let dims: Vec<usize> = (0..=5)
        .map(|d| singular_vectors(&m, d, None).unwrap().len())
        .collect();
    assert_eq!(dims, [1, 0, 1, 1, 2, 2]);
}

#[test]
fn quotient_verdicts() {
    let lambda = vec![ri(1)];
    let m = Module::verma(lambda, critical_level());
    let mut jets: BTreeMap<(usize, i64), Rat> = BTreeMap::new();
    jets.insert((1, 0), rat(3, 4));
    assert_eq!(
        verma_quotient_truncated(&m, &jets, 1, 1).unwrap(),
        QuotientVerdict::NonzeroUpToDepth
    );
    jets.insert((1, 0), ri(1));
    assert_eq!(
        verma_quotient_truncated(&m, &jets, 0, 1).unwrap(),
        QuotientVerdict::ZeroCertified
    );
    assert!(verma_quotient_truncated(&Module::vac(1, ri(-2)), &jets, 0, 1).is_err());
}
