use parahitchin::bridge::{graded_dims, BridgeSpace};
use parahitchin::curve::{c_coefficients, ord_at, samples, QuadDifferential};
use parahitchin::hitchin::{spectral_check, FlagData, HiggsSpace, HitchinError, Line};
use parahitchin::{ri, Rat};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GRID: [(usize, usize); 4] = [(1, 2), (2, 1), (2, 2), (3, 1)];

#[test]
fn dimension_grid() {
    for (g, n) in GRID {
        let m = samples::config(g, n);
        let s = HiggsSpace::new(m.clone()).unwrap();
        let (gi, ni) = (g as i64, n as i64);
        assert_eq!(s.quad_basis().len() as i64, 3 * (gi - 1) + ni, "(g,N)=({g},{n})");
        assert_eq!(s.diff_basis().len() as i64, gi - 1 + ni);
        let b = BridgeSpace::new(m).unwrap();
        assert_eq!(b.doubled_basis().len() as i64, 3 * (gi - 1) + 2 * ni);
    }
}

#[test]
fn quad_basis_has_at_most_simple_poles() {
    let m = samples::config(2, 2);
    let s = HiggsSpace::new(m.clone()).unwrap();
    for q in s.quad_basis() {
        for p in m.points() {
            assert!(ord_at(m.curve(), q, p).unwrap() >= -1);
            let c = c_coefficients(m.curve(), q, p, 0..=0).unwrap();
            assert_eq!(c[&0], ri(0));
        }
    }
}

#[test]
fn exactness_grid() {
    for (g, n) in GRID {
        let b = BridgeSpace::new(samples::config(g, n)).unwrap();
        let ex = b.exactness().unwrap();
        assert!(ex.holds(n), "(g,N)=({g},{n}): {ex:?}");
        let (_, rank) = b.stable_restriction_rank(8).unwrap();
        assert_eq!(rank, b.base_basis().len());
    }
}

#[test]
fn fiber_points_are_admissible_and_global() {
    let b = BridgeSpace::new(samples::config(2, 2)).unwrap();
    let lambda = [ri(0), ri(2)];
    let fp = b.fiber_point(&lambda).unwrap();
    assert_eq!(fp.target, vec![ri(0), ri(2)]);
    let q = b.doubled_element(&fp.coords);
    let jets = b.jets(&q, -4).unwrap();
    assert!(BridgeSpace::is_admissible(&jets, &lambda));
    assert!(!BridgeSpace::is_admissible(&jets, &[ri(1), ri(2)]));
    assert!(b.is_global(&jets).unwrap().is_some());
}

#[test]
fn graded_dims_match_monomial_count() {
    // polynomial ring on N generators of weight 2
    fn count(n: usize, d: usize) -> u128 {
        if d % 2 == 1 {
            return 0;
        }
        let k = d / 2;
        // C(n + k - 1, k) by direct multiplication
        let mut c: u128 = 1;
        for i in 0..k {
            c = c * (n + i) as u128 / (i + 1) as u128;
        }
        c
    }
    for n in 1..=4 {
        for d in 0..=10 {
            assert_eq!(graded_dims(n, d), count(n, d), "n={n} d={d}");
        }
    }
}

#[test]
fn spectral_genus_on_sampled_differentials() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (g, n) in [(2, 1), (2, 2)] {
        let s = HiggsSpace::new(samples::config(g, n)).unwrap();
        let mut smooth = 0;
        for _ in 0..12 {
            let coords: Vec<Rat> = (0..s.quad_basis().len())
                .map(|_| ri(rand::Rng::random_range(&mut rng, -4..=4)))
                .collect();
            let q = QuadDifferential::combination(s.quad_basis(), &coords);
            match spectral_check(&s, &q) {
                Ok(d) => {
                    smooth += 1;
                    assert_eq!(d.genus_rh, d.genus_formula);
                    assert_eq!(d.prym_dim, 3 * (g as i64 - 1) + n as i64);
                }
                Err(HitchinError::NotSimpleZeros { .. } | HitchinError::ZeroDifferential) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert!(smooth > 0);
    }
}

#[test]
fn parabolic_samples_round_trip() {
    let s = HiggsSpace::new(samples::config(2, 2)).unwrap();
    // residues at the two points are proportional, so equal lines are needed
    // for nonzero parabolic residues
    let flags = FlagData::uniform(Line::from_ints(1, 2), 2);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut seen = 0;
    for _ in 0..20 {
        let a = s.sample_parabolic(&flags, 3, &mut rng);
        assert!(s.check_parabolic(&a, &flags).unwrap());
        let q = s.hitchin_map(&a).unwrap();
        assert!(s.quad_coordinates(&q).is_some());
        if let Ok(f) = s.borel_from_residue(&a) {
            assert_eq!(f, flags);
            seen += 1;
        }
    }
    assert!(seen > 0);
}
