use aqstar_core::kxl::{self, CoeffKind, KxlElement};
use aqstar_core::linalg::{self, IntMatrix};
use aqstar_core::poly::IntPoly;
use aqstar_core::{aq, zx, FracIdeal, OrderElement, QuadraticOrder};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const DISCS: [i64; 8] = [-3, -4, -7, -8, -12, -20, 5, 12];
const MAXIMAL: [i64; 5] = [-3, -4, -7, -8, -20];

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-12i64..=12, rows * cols)
        .prop_map(move |v| IntMatrix::new(rows, cols, v.into_iter().map(BigInt::from).collect()))
}

fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    // product of elementary column operations
    prop::collection::vec((0..n, 0..n, -3i64..=3), 0..8).prop_map(move |ops| {
        let mut u = IntMatrix::identity(n);
        for (i, j, k) in ops {
            if i == j {
                continue;
            }
            let mut e = IntMatrix::identity(n);
            e.set(i, j, k.into());
            u = u.mul(&e);
        }
        u
    })
}

fn element() -> impl Strategy<Value = OrderElement> {
    (-9i64..=9, -4i64..=4).prop_filter("nonzero", |&(u, v)| (u, v) != (0, 0)).prop_map(|(u, v)| OrderElement::new(u, v))
}

fn ideal_in(o: QuadraticOrder) -> impl Strategy<Value = FracIdeal> {
    prop::collection::vec(element(), 1..=2).prop_map(move |g| FracIdeal::from_elements(&o, &g).unwrap())
}

fn order_and_ideals(n: usize) -> impl Strategy<Value = (QuadraticOrder, Vec<FracIdeal>)> {
    prop::sample::select(DISCS.to_vec()).prop_flat_map(move |d| {
        let o = QuadraticOrder::new(d).unwrap();
        (Just(o.clone()), prop::collection::vec(ideal_in(o), n))
    })
}

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-6i64..=6, 1..=4).prop_map(|c| IntPoly::from_i64(&c)).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_idempotent(m in matrix(2, 4)) {
        let h = linalg::hnf(&m);
        prop_assert_eq!(linalg::hnf(&h), h);
    }

    #[test]
    fn hnf_ignores_unimodular_changes(m in matrix(3, 3), u in unimodular(3)) {
        prop_assert_eq!(linalg::hnf(&m.mul(&u)), linalg::hnf(&m));
    }

    #[test]
    fn smith_diagonal_multiplies_to_determinant(m in matrix(3, 3)) {
        let s = linalg::snf(&m);
        let prod: BigInt = s.diagonal.iter().product();
        prop_assert_eq!(prod, linalg::abs_det(&m));
        prop_assert!(s.cokernel.is_well_formed());
        if !linalg::abs_det(&m).eq(&BigInt::from(0)) {
            prop_assert_eq!(s.cokernel.order(), Some(linalg::abs_det(&m)));
        }
    }

    #[test]
    fn kernel_is_annihilated(m in matrix(2, 4)) {
        let k = linalg::kernel_basis(&m);
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(k.cols(), 4 - linalg::snf(&m).rank());
    }

    #[test]
    fn norm_is_multiplicative(d in prop::sample::select(DISCS.to_vec()), x in element(), y in element()) {
        let o = QuadraticOrder::new(d).unwrap();
        prop_assert_eq!(o.norm(&o.mul(&x, &y)), o.norm(&x) * o.norm(&y));
        prop_assert_eq!(o.mul(&x, &o.conj(&x)), OrderElement::new(o.norm(&x), 0));
        prop_assert_eq!(o.conj(&o.conj(&x)), x.clone());
        prop_assert_eq!(o.conj(&o.mul(&x, &y)), o.mul(&o.conj(&x), &o.conj(&y)));
    }

    #[test]
    fn ideal_arithmetic_laws((_o, v) in order_and_ideals(3)) {
        let (i, j, k) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(i.product(j).unwrap(), j.product(i).unwrap());
        prop_assert_eq!(i.sum(j).unwrap(), j.sum(i).unwrap());
        prop_assert_eq!(i.intersection(j).unwrap(), j.intersection(i).unwrap());
        prop_assert_eq!(i.product(j).unwrap().product(k).unwrap(), i.product(&j.product(k).unwrap()).unwrap());
        prop_assert_eq!(
            i.product(&j.sum(k).unwrap()).unwrap(),
            i.product(j).unwrap().sum(&i.product(k).unwrap()).unwrap()
        );
        let meet = i.intersection(j).unwrap();
        prop_assert!(meet.contains_ideal(&i.product(j).unwrap()));
        prop_assert!(i.sum(j).unwrap().contains_ideal(&meet));
        prop_assert!(i.contains_ideal(&meet) && j.contains_ideal(&meet));
    }

    #[test]
    fn colon_is_adjoint_to_product((_o, v) in order_and_ideals(3)) {
        let (i, j, k) = (&v[0], &v[1], &v[2]);
        // K ⊆ (I : J) ⇔ KJ ⊆ I
        let colon = i.colon(j).unwrap();
        prop_assert_eq!(colon.contains_ideal(k), i.contains_ideal(&k.product(j).unwrap()));
        prop_assert!(i.contains_ideal(&colon.product(j).unwrap()));
    }

    #[test]
    fn invertible_ideals_have_multiplicative_norm((_o, v) in order_and_ideals(2)) {
        let (i, j) = (&v[0], &v[1]);
        if i.is_invertible() || j.is_invertible() {
            prop_assert_eq!(i.product(j).unwrap().norm(), i.norm() * j.norm());
        }
    }

    #[test]
    fn star_is_symmetric_and_scale_invariant(
        d in prop::sample::select(DISCS.to_vec()), a in element(), b in element(), c in element()
    ) {
        let o = QuadraticOrder::new(d).unwrap();
        let ab = aq::star_pair(&o, &a, &b).unwrap();
        prop_assert_eq!(ab.holds, aq::star_pair(&o, &b, &a).unwrap().holds);
        prop_assert_eq!(ab.holds, aq::star_pair(&o, &o.mul(&c, &a), &o.mul(&c, &b)).unwrap().holds);
        prop_assert_eq!(ab.holds, aq::h1_coeff_group(&o, &a, &b).unwrap().is_trivial());
        prop_assert_eq!(ab.holds, ab.colon_form.0 == ab.colon_form.1);
    }

    #[test]
    fn omega_trivial_iff_sum_invertible(d in prop::sample::select(MAXIMAL.to_vec()), a in element(), b in element()) {
        let o = QuadraticOrder::new(d).unwrap();
        prop_assert!(aq::omega_invertibility_check(&o, &a, &b).unwrap());
        prop_assert_eq!(aq::annihilation_checks(&o, &a, &b).unwrap(), (true, true));
    }

    #[test]
    fn principal_intersections_are_syzygetic(d in prop::sample::select(MAXIMAL.to_vec()), a in element()) {
        let o = QuadraticOrder::new(d).unwrap();
        let j = FracIdeal::principal(&o, &a).unwrap();
        prop_assert!(aq::syzygetic_kernel(&o, &j).unwrap().is_syzygetic());
    }

    #[test]
    fn gcd_times_lcm_is_product(a in int_poly(), b in int_poly()) {
        let g = zx::poly_gcd(&a, &b).unwrap();
        let l = zx::intersect_principal(&a, &b).unwrap();
        prop_assert_eq!((&g * &l).normalized(), (&a * &b).normalized());
        prop_assert!(a.div_exact(&g).is_some() && b.div_exact(&g).is_some());
        prop_assert!(zx::star_check_gcd(&a, &b).unwrap());
    }

    #[test]
    fn zx_colon_is_adjoint(a in int_poly(), b in int_poly(), h in int_poly()) {
        // h·a ∈ bZ[X] ⇔ h ∈ (b : a)
        let c = zx::colon_principal(&b, &a).unwrap();
        prop_assert_eq!((&h * &a).div_exact(&b).is_some(), h.div_exact(&c).is_some());
    }

    #[test]
    fn kxl_ring_is_closed(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sample = |kinds: [CoeffKind; 3]| {
            KxlElement::from_coeffs(kinds.iter().enumerate().map(|(i, &k)| (i, kxl::random_coeff(&mut rng, k))))
        };
        let f = sample([CoeffKind::Rational, CoeffKind::HigherY, CoeffKind::RationalTimesY]);
        let g = sample([CoeffKind::Rational, CoeffKind::RationalTimesY, CoeffKind::HigherY]);
        prop_assert!(f.in_a() && g.in_a());
        prop_assert!((&f * &g).in_a() && (&f + &g).in_a() && (&f - &g).in_a());
        let c = sample([CoeffKind::Zero, CoeffKind::RationalTimesY, CoeffKind::Rational]);
        if !c.is_zero() {
            prop_assert!(kxl::in_principal(&c, &(&c * &g)).unwrap());
            let q = (&c * &g).div_exact(&c).unwrap().unwrap();
            prop_assert_eq!(q, g);
        }
    }
}
