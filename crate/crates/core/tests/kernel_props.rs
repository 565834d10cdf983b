use parahitchin::kernel::{poly_gcd, rat, LaurentSeries, Poly, RatFunc, RatMatrix};
use parahitchin::{ri, Rat};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..=max_deg + 1).prop_map(Poly::new)
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows).prop_map(move |r| {
        RatMatrix::from_rows(
            r.into_iter().map(|v| v.into_iter().map(ri).collect()).collect(),
            cols,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_identity(a in poly(6), b in nonzero_poly(3)) {
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(2)) {
        let (x, y) = (&a * &c, &b * &c);
        let g = poly_gcd(&x, &y);
        prop_assert!(g.divides(&x) && g.divides(&y));
        prop_assert!(c.divides(&g));
    }

    #[test]
    fn eval_is_ring_hom(a in poly(4), b in poly(4), x in small_rat()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn ratfunc_normal_form(a in nonzero_poly(3), b in nonzero_poly(3), c in nonzero_poly(2)) {
        let f = RatFunc::new(&a * &c, &b * &c);
        prop_assert_eq!(f.clone(), RatFunc::new(a.clone(), b.clone()));
        prop_assert_eq!(&f * &RatFunc::new(b, a), RatFunc::one());
    }

    #[test]
    fn rank_nullity(m in matrix(4, 6)) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.len(), 6);
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == ri(0)));
        }
    }

    #[test]
    fn solve_reproduces_rhs(m in matrix(3, 5), x in prop::collection::vec(-4i64..=4, 5)) {
        let x: Vec<Rat> = x.into_iter().map(ri).collect();
        let b = m.mul_vec(&x);
        let sol = m.solve(&b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&sol.particular), b.clone());
        prop_assert!(m.in_column_space(&b));
        prop_assert_eq!(sol.kernel.len(), 5 - m.rank());
    }

    #[test]
    fn series_inverse(c in prop::collection::vec(small_rat(), 1..6), v in -3i64..=3) {
        prop_assume!(c[0] != ri(0));
        let s = LaurentSeries::new(v, c);
        let abs = v + 5;
        let one = s.mul(&s.inv().unwrap()).truncate(abs.min(5 - v).max(0));
        prop_assert_eq!(one.coeff(0).unwrap(), ri(1));
    }
}

#[test]
fn series_sqrt_of_square() {
    // (1 + t)^2 = 1 + 2t + t^2
    let s = LaurentSeries::new(0, vec![ri(1), ri(2), ri(1), ri(0), ri(0)]);
    let r = s.sqrt(&ri(1)).unwrap();
    assert_eq!(r.coeff(0).unwrap(), ri(1));
    assert_eq!(r.coeff(1).unwrap(), ri(1));
    assert_eq!(r.coeff(2).unwrap(), ri(0));
    assert_eq!(r.coeff(3).unwrap(), ri(0));
}
