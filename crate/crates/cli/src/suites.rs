//! The eight verification suites.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use parahitchin::affine::{
    centrality_check, centrality_prediction, critical_level, delta, is_singular, singular_vectors,
    sugawara_apply, verma_quotient_truncated, Gen, LoopGen, Module, ModuleVector, QuotientVerdict,
    SugawaraOp,
};
use parahitchin::bridge::{graded_dims, BridgeSpace};
use parahitchin::curve::{c_coefficients, QuadDifferential};
use parahitchin::hitchin::{lift_to_higgs, spectral_check, square, FlagData, HiggsSpace, HitchinError, Line};
use parahitchin::{ri, Rat};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::config::Scenario;
use crate::report::{Status, SuiteBuilder, SuiteReport};

/// TrueVac singular-space dimensions in degrees 0..=6, from a brute-force
/// kernel computation.
pub const TRUE_VAC_GOLDEN: [usize; 7] = [1, 0, 1, 1, 2, 2, 4];

type SuiteResult = Result<SuiteBuilder, String>;

pub fn run_suite(name: &str, s: &Scenario, rng: &mut ChaCha8Rng) -> SuiteReport {
    if name == "admissibility" && s.config.truncation_depths.is_empty() {
        return SuiteReport {
            name: name.to_string(),
            status: Status::Skipped,
            checks: Vec::new(),
            values: BTreeMap::new(),
            error: None,
        };
    }
    let res = match name {
        "dims" => dims(s),
        "hitchin" => hitchin(s, rng),
        "spectral" => spectral(s, rng),
        "sugawara" => sugawara(s),
        "centrality" => centrality(s),
        "singular" => singular(s),
        "bridge" => bridge(s),
        "admissibility" => admissibility(s),
        other => Err(format!("unknown suite {other:?}")),
    };
    match res {
        Ok(b) => b.finish(name),
        Err(e) => {
            let mut b = SuiteBuilder::default();
            b.holds("suite completed", false);
            let mut r = b.finish(name);
            r.error = Some(e);
            r
        }
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rats(v: &[Rat]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn dims(s: &Scenario) -> SuiteResult {
    let m = &s.marked;
    let (g, n) = (m.genus() as i64, m.n() as i64);
    let space = HiggsSpace::new(m.clone()).map_err(err)?;
    let bridge = BridgeSpace::new(m.clone()).map_err(err)?;
    let base = space.quad_basis().len() as i64;
    let spectral_genus = 4 * g - 3 + n;
    let prym = spectral_genus - g;
    let mut b = SuiteBuilder::default();
    b.eq("dim H0(Ω²(D)) = 3(g-1)+N", base, 3 * (g - 1) + n);
    b.eq("dim H0(Ω(D)) = g-1+N", space.diff_basis().len() as i64, g - 1 + n);
    b.eq(
        "dim H0(Ω²(2D)) = 3(g-1)+2N",
        bridge.doubled_basis().len() as i64,
        3 * (g - 1) + 2 * n,
    );
    b.eq("dim Prym = 3(g-1)+N", prym, 3 * (g - 1) + n);
    b.value("genus", g);
    b.value("n", n);
    b.value("base_dim", base);
    b.value("spectral_genus", spectral_genus);
    b.value("prym_dim", prym);
    Ok(b)
}

fn random_line(rng: &mut ChaCha8Rng) -> Line {
    if rng.random_range(0..8) == 0 {
        Line::from_ints(0, 1)
    } else {
        Line::from_ints(1, rng.random_range(-4..=4))
    }
}

fn hitchin(s: &Scenario, rng: &mut ChaCha8Rng) -> SuiteResult {
    let space = HiggsSpace::new(s.marked.clone()).map_err(err)?;
    let curve = s.marked.curve();
    let n = space.n();
    let samples = s.config.samples;
    let (mut member, mut c0_zero, mut nilp_agree, mut quadratic) = (0, 0, 0, 0);
    let (mut roundtrip_instances, mut roundtrip_ok) = (0, 0);
    let mut fields = Vec::new();
    for i in 0..samples {
        // Residues of Ω(D) sections are tied together by the residue theorem;
        // uniform flags admit nonzero residues, independent ones mostly do not.
        let flags = if i % 2 == 0 {
            FlagData::uniform(random_line(rng), n)
        } else {
            FlagData::new((0..n).map(|_| random_line(rng)).collect())
        };
        let a = space.sample_parabolic(&flags, 3, rng);
        if !space.check_parabolic(&a, &flags).map_err(err)? {
            return Err("sampled field is not parabolic".into());
        }
        let q = match space.hitchin_map(&a) {
            Ok(q) => {
                member += 1;
                q
            }
            Err(HitchinError::MembershipFailure) => continue,
            Err(e) => return Err(err(e)),
        };
        let c0_ok = s.marked.points().iter().all(|p| {
            c_coefficients(curve, &q, p, 0..=0)
                .map(|c| c[&0].is_zero())
                .unwrap_or(false)
        });
        c0_zero += usize::from(c0_ok);
        let sq_zero = square(&s.marked, &a)
            .iter()
            .flatten()
            .all(QuadDifferential::is_zero);
        nilp_agree += usize::from(sq_zero == space.nilp_member(&a));
        let q2 = space.hitchin_map(&a.scale(&ri(2))).map_err(err)?;
        quadratic += usize::from(q2 == q.scale(&ri(4)));
        let all_nonzero = (0..n).all(|i| space.residue_matrix(&a, i).map(|r| !r.is_zero()).unwrap_or(false));
        if all_nonzero {
            roundtrip_instances += 1;
            roundtrip_ok += usize::from(space.borel_from_residue(&a).map(|f| f == flags).unwrap_or(false));
        }
        fields.push(q);
    }
    let mut b = SuiteBuilder::default();
    b.eq("det A in H0(Ω²(D))", member, samples);
    b.eq("c0(det A) = 0 at every marked point", c0_zero, member);
    b.eq("A² = 0 iff det A = 0", nilp_agree, member);
    b.eq("h(2A) = 4 h(A)", quadratic, member);
    b.eq(
        "borel_from_residue recovers flags",
        roundtrip_ok,
        roundtrip_instances,
    );

    let probes: Vec<&QuadDifferential> = fields.iter().filter(|q| !q.is_zero()).take(3).collect();
    let mut lifted = 0;
    let mut lift_dets_ok = 0;
    for q in &probes {
        if let Ok(p) = lift_to_higgs(&space, q, s.config.search_budget) {
            lifted += 1;
            lift_dets_ok += usize::from(space.hitchin_map(&p.field).ok().as_ref() == Some(*q));
        }
    }
    b.eq(
        "lifted fields have the requested determinant",
        lift_dets_ok,
        lifted,
    );
    b.value("samples", samples);
    b.value("roundtrip_instances", roundtrip_instances);
    b.value("lift_attempts", probes.len());
    b.value("lift_successes", lifted);
    Ok(b)
}

fn spectral(s: &Scenario, rng: &mut ChaCha8Rng) -> SuiteResult {
    let space = HiggsSpace::new(s.marked.clone()).map_err(err)?;
    let (g, n) = (s.marked.genus() as i64, s.marked.n() as i64);
    let dim = space.quad_basis().len();
    let mut b = SuiteBuilder::default();
    let (mut smooth, mut singular, mut rh_ok, mut degree_ok) = (0, 0, 0, 0);
    let mut genus_formula = 4 * g - 3 + n;
    let mut genus_rh = Vec::new();
    for _ in 0..s.config.samples {
        let coords: Vec<Rat> = (0..dim).map(|_| ri(rng.random_range(-5..=5))).collect();
        let q = QuadDifferential::combination(space.quad_basis(), &coords);
        if q.is_zero() {
            continue;
        }
        match spectral_check(&space, &q) {
            Ok(d) => {
                smooth += 1;
                rh_ok += usize::from(d.genus_rh == d.genus_formula);
                degree_ok += usize::from(d.zeros.degree == 2 * (2 * g - 2 + n));
                genus_formula = d.genus_formula;
                genus_rh.push(d.genus_rh);
            }
            Err(HitchinError::NotSimpleZeros { genus_formula: f }) => {
                singular += 1;
                genus_formula = f;
            }
            Err(e) => return Err(err(e)),
        }
    }
    b.holds("at least one sample has simple zeros", smooth > 0);
    b.eq("Riemann-Hurwitz genus = 4g-3+N", rh_ok, smooth);
    b.eq("zero divisor degree = 2(2g-2+N)", degree_ok, smooth);
    b.eq("dim Prym = 3(g-1)+N", genus_formula - g, 3 * (g - 1) + n);
    b.value("spectral_genus", genus_formula);
    b.value("genus_rh", genus_rh);
    b.value("prym_dim", genus_formula - g);
    b.value("smooth_samples", smooth);
    b.value("nonsimple_samples", singular);
    Ok(b)
}

fn sugawara(s: &Scenario) -> SuiteResult {
    let k = critical_level();
    let mut b = SuiteBuilder::default();
    let verma = Module::verma(s.lambda.clone(), k.clone());
    let mut a = verma.actor();
    let mu = verma.generator();
    let mut eigen = Vec::new();
    for (i, l) in s.lambda.iter().enumerate() {
        let copy = i + 1;
        let s0 = sugawara_apply(&mut a, SugawaraOp::new(0, copy), &mu);
        let ev = s0.coeff(&[]);
        let expected = l * l / ri(4) + l / ri(2);
        b.eq(&format!("S0({copy}) μ = ev μ"), s0, mu.scale(&ev));
        b.eq(&format!("eigenvalue({copy}) = λ(λ+2)/4"), ev.clone(), expected);
        for m in 1..=4 {
            let sm = sugawara_apply(&mut a, SugawaraOp::new(m, copy), &mu);
            b.holds(&format!("S{m}({copy}) μ = 0"), sm.is_zero());
        }
        eigen.push(ev);
    }
    let vac = Module::vac(s.marked.n(), k.clone());
    let mut av = vac.actor();
    let v = vac.generator();
    for copy in 1..=vac.copies() {
        for m in 1..=4 {
            b.holds(
                &format!("S{m}({copy}) v = 0"),
                sugawara_apply(&mut av, SugawaraOp::new(m, copy), &v).is_zero(),
            );
        }
    }
    b.value("eigenvalues", rats(&eigen));
    Ok(b)
}

fn words(module: &Module, max_deg: i64, zero_bound: usize) -> Result<Vec<ModuleVector>, String> {
    let mut out = Vec::new();
    for d in 0..=max_deg {
        out.extend(
            module
                .basis(d, Some(zero_bound))
                .map_err(err)?
                .into_iter()
                .map(ModuleVector::basis),
        );
    }
    Ok(out)
}

/// Number of pairs `(m, X_n, v)` with `[S_m, X_n] v ≠ expected`.
fn sweep(module: &Module, vs: &[ModuleVector], expect_zero: bool) -> usize {
    let gens: Vec<LoopGen> = (-2..=2)
        .flat_map(|n| Gen::ALL.map(|g| LoopGen::new(g, n, 1)))
        .collect();
    let per: Vec<usize> = parahitchin::par::map_with(
        vs,
        || module.actor(),
        |a, v| {
            let mut bad = 0;
            for m in -3..=3 {
                for x in &gens {
                    let lhs = centrality_check(a, m, *x, v);
                    let ok = if expect_zero {
                        lhs.is_zero()
                    } else {
                        lhs == centrality_prediction(a, m, *x, v)
                    };
                    bad += usize::from(!ok);
                }
            }
            bad
        },
    );
    per.into_iter().sum()
}

fn centrality(s: &Scenario) -> SuiteResult {
    let c = &s.config;
    let k = critical_level();
    let mut b = SuiteBuilder::default();
    let vac = Module::vac(1, k.clone());
    let vac_words = words(&vac, c.centrality_degree, c.zero_mode_bound)?;
    let verma = Module::verma(vec![s.lambda[0].clone()], k);
    let verma_words = words(&verma, c.centrality_degree, c.zero_mode_bound)?;
    b.eq(
        "nonzero [S_m, X_n] v on Vac at k=-2",
        sweep(&vac, &vac_words, true),
        0,
    );
    b.eq(
        "nonzero [S_m, X_n] v on Verma at k=-2",
        sweep(&verma, &verma_words, true),
        0,
    );

    // Off the critical level the commutator is (k+2)-proportional.
    let off = Module::vac(1, Rat::zero());
    let off_words = words(&off, 2.min(c.centrality_degree), 1)?;
    b.eq(
        "[S_m, X_n] v ≠ -(k+2) n X_(m+n) v at k=0",
        sweep(&off, &off_words, false),
        0,
    );
    let mut a = off.actor();
    let witness_v = ModuleVector::basis(vec![LoopGen::f(-1, 1)]);
    let x = LoopGen::e(1, 1);
    let w = centrality_check(&mut a, 0, x, &witness_v);
    b.holds("k=0 witness [S_0, e_1] f_-1 v is nonzero", !w.is_zero());
    b.value("vac_words", vac_words.len());
    b.value("verma_words", verma_words.len());
    b.value("pairs_per_vector", 7 * 15);
    b.value("witness", format!("[S_0, e_1] f_-1 v = {w} at k=0"));
    Ok(b)
}

/// Partitions of `d` into parts of size at least 2.
fn partitions_min2(d: usize) -> usize {
    let mut p = vec![0usize; d + 1];
    p[0] = 1;
    for part in 2..=d {
        for n in part..=d {
            p[n] += p[n - part];
        }
    }
    p[d]
}

fn singular(s: &Scenario) -> SuiteResult {
    let k = critical_level();
    let mut b = SuiteBuilder::default();
    let tv = Module::true_vac(1, k.clone());
    let mut dims = Vec::new();
    for d in 0..=s.config.singular_max_degree {
        let dim = singular_vectors(&tv, d, None).map_err(err)?.len();
        let du = d as usize;
        if let Some(g) = TRUE_VAC_GOLDEN.get(du) {
            b.eq(&format!("TrueVac singular dim d={d} vs golden"), dim, *g);
        }
        b.eq(
            &format!("TrueVac singular dim d={d} vs partitions"),
            dim,
            partitions_min2(du),
        );
        dims.push(dim);
    }
    // Products of Sugawara operators applied to the vacuum stay singular.
    let vac = Module::vac(1, k);
    let mut a = vac.actor();
    let v = vac.generator();
    for m1 in [-2, -3] {
        let once = sugawara_apply(&mut a, SugawaraOp::new(m1, 1), &v);
        b.holds(&format!("S{m1} v singular"), is_singular(&mut a, &once));
        for m2 in [-2, -3] {
            let twice = sugawara_apply(&mut a, SugawaraOp::new(m2, 1), &once);
            b.holds(&format!("S{m2} S{m1} v singular"), is_singular(&mut a, &twice));
        }
    }
    b.value("true_vac_dims", dims);
    Ok(b)
}

fn bridge(s: &Scenario) -> SuiteResult {
    let bs = BridgeSpace::new(s.marked.clone()).map_err(err)?;
    let (g, n) = (s.marked.genus() as i64, s.marked.n() as i64);
    let base = bs.base_basis().len();
    let mut b = SuiteBuilder::default();
    let ex = bs.exactness().map_err(err)?;
    b.eq(
        "dim H0(Ω²(2D)) = 3(g-1)+2N",
        ex.dim_2d as i64,
        3 * (g - 1) + 2 * n,
    );
    b.eq("rank R_-2 = N", ex.rank_r as i64, n);
    b.eq("dim ker R_-2 = dim H0(Ω²(D))", ex.kernel_dim, ex.dim_d);
    b.holds("ker R_-2 = H0(Ω²(D))", ex.kernel_is_base);
    let (order, rank) = bs
        .stable_restriction_rank(s.config.series_precision)
        .map_err(err)?;
    b.eq("restriction rank = 3(g-1)+N", rank as i64, 3 * (g - 1) + n);

    let fp = bs.fiber_point(&s.lambda).map_err(err)?;
    let q = bs.doubled_element(&fp.coords);
    let r = bs.r_minus_2(&q).map_err(err)?;
    b.eq("R_-2 q = Δ(λ)", rats(&r).join(","), rats(&fp.target).join(","));
    let depth = s.config.series_precision as i64;
    let jets = bs.jets(&q, -depth).map_err(err)?;
    b.holds(
        "jets of q are λ-admissible",
        BridgeSpace::is_admissible(&jets, &s.lambda),
    );
    b.holds(
        "jets of q are global",
        bs.is_global(&jets).map_err(err)?.is_some(),
    );
    let zero = bs.f_q(&fp, &fp.coords).map_err(err)?;
    b.holds("F_q(q) = 0", zero.coords.iter().all(Zero::is_zero));
    for (j, kv) in fp.kernel.iter().enumerate() {
        let shifted: Vec<Rat> = fp.coords.iter().zip(kv).map(|(a, c)| a + c).collect();
        let p = bs.f_q(&fp, &shifted).map_err(err)?;
        let back = bs
            .base_to_doubled(&p.coords)
            .ok_or("base element not in doubled space")?;
        b.eq(
            &format!("F_q(q + k{j}) maps back to k{j}"),
            rats(&back).join(","),
            rats(kv).join(","),
        );
    }
    let nn = s.marked.n();
    b.eq("graded dim in weight 2 = N", graded_dims(nn, 2), nn as u128);
    b.eq(
        "graded dim in weight 4 = N(N+1)/2",
        graded_dims(nn, 4),
        (nn * (nn + 1) / 2) as u128,
    );
    b.value("base_dim", base);
    b.value("doubled_dim", ex.dim_2d);
    b.value("rank_r", ex.rank_r);
    b.value("restriction_rank", rank);
    b.value("stabilization_order", order);
    b.value("delta", rats(&fp.target));
    Ok(b)
}

fn admissibility(s: &Scenario) -> SuiteResult {
    let bs = BridgeSpace::new(s.marked.clone()).map_err(err)?;
    let verma = Module::verma(s.lambda.clone(), critical_level());
    let fp = bs.fiber_point(&s.lambda).map_err(err)?;
    let q = bs.doubled_element(&fp.coords);
    let max_depth = s.config.truncation_depths.iter().copied().max().unwrap_or(0);
    let jets = bs.jets(&q, -max_depth).map_err(err)?.as_copy_map();
    let mut b = SuiteBuilder::default();
    let mut verdicts = BTreeMap::new();
    for &d in &s.config.truncation_depths {
        let v = verma_quotient_truncated(&verma, &jets, d, 1).map_err(err)?;
        b.eq(
            &format!("admissible jets at depth {d}"),
            format!("{v:?}"),
            format!("{:?}", QuotientVerdict::NonzeroUpToDepth),
        );
        verdicts.insert(d.to_string(), format!("{v:?}"));
    }
    for i in 1..=s.marked.n() {
        let mut bad = jets.clone();
        let c0 = bad.entry((i, 0)).or_insert_with(Rat::zero);
        *c0 += Rat::one();
        let v = verma_quotient_truncated(&verma, &bad, 0, 1).map_err(err)?;
        b.eq(
            &format!("c0({i}) ≠ Δ(λ{i}) at depth 0"),
            format!("{v:?}"),
            format!("{:?}", QuotientVerdict::ZeroCertified),
        );
    }
    b.value("delta", rats(&s.lambda.iter().map(delta).collect::<Vec<_>>()));
    b.value("verdicts", verdicts);
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let got: Vec<usize> = (0..=6).map(partitions_min2).collect();
        assert_eq!(got, TRUE_VAC_GOLDEN);
        assert_eq!(partitions_min2(10), 12);
    }
}
