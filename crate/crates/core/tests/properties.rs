use jetalg_core::*;
use proptest::prelude::*;

fn apoly() -> impl Strategy<Value = APoly> {
    prop::collection::vec((-3i64..=3, 0u32..=3, -5i64..=5), 0..4)
        .prop_map(|ts| ts.into_iter().map(|(a, b, c)| (AMono::new(a, b), int(c))).collect())
}

fn dop() -> impl Strategy<Value = DOp> {
    prop::collection::vec((-3i64..=3, 0u32..=3, 0u32..=3, 0u32..=3, -4i64..=4), 0..3)
        .prop_map(|ts| ts.into_iter().map(|(a, b, c, d, k)| (DMono::new(a, b, c, d), int(k))).collect())
}

fn vfield() -> impl Strategy<Value = VField> {
    (apoly(), apoly()).prop_map(|(f1, f2)| VField::new(f1, f2))
}

/// Fields vanishing at (1,0): subtract the value at (1,0) from each coefficient.
fn m10_field() -> impl Strategy<Value = VField> {
    vfield().prop_map(|v| {
        let fix = |f: APoly| {
            let c = f.eval_1_0();
            f - APoly::constant(c)
        };
        VField::new(fix(v.f1), fix(v.f2))
    })
}

fn axis() -> impl Strategy<Value = Axis> {
    prop_oneof![Just(Axis::One), Just(Axis::Two)]
}

fn lkey() -> impl Strategy<Value = LKey> {
    (axis(), -3i64..=3, 0u32..=3)
        .prop_filter_map("X_k(0,0) is zero", |(k, m1, m2)| LKey::new(k, AMono::new(m1, m2)))
}

fn lelem() -> impl Strategy<Value = LElem> {
    prop::collection::vec((lkey(), -3i64..=3), 0..3)
        .prop_map(|ts| ts.into_iter().map(|(k, c)| (k, int(c))).collect())
}

fn smash() -> impl Strategy<Value = SmashElem> {
    (prop::collection::vec((-2i64..=2, 0u32..=2, -2i64..=2, 0u32..=2, axis(), -3i64..=3), 0..3), apoly())
        .prop_map(|(ts, h)| {
            let mut out = SmashElem::embed_a(h);
            for (u1, u2, a1, a2, k, c) in ts {
                out = out + SmashElem::term(int(c), AMono::new(u1, u2), AMono::new(a1, a2), k);
            }
            out
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn a_ring_axioms(p in apoly(), q in apoly(), r in apoly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn a_leibniz(p in apoly(), q in apoly(), k in axis()) {
        let lhs = (&p * &q).derive(k);
        let rhs = &(&p.derive(k) * &q) + &(&p * &q.derive(k));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn a_eval_is_multiplicative(p in apoly(), q in apoly()) {
        prop_assert_eq!((&p * &q).eval_1_0(), p.eval_1_0() * q.eval_1_0());
    }

    #[test]
    fn d_associative(x in dop(), y in dop(), z in dop()) {
        prop_assert_eq!(x.d_mul(&y).d_mul(&z), x.d_mul(&y.d_mul(&z)));
    }

    #[test]
    fn d_faithful(x in dop(), y in dop(), p in apoly()) {
        prop_assert_eq!(x.d_mul(&y).d_apply(&p), x.d_apply(&y.d_apply(&p)));
    }

    #[test]
    fn d_jacobi(x in dop(), y in dop(), z in dop()) {
        let j = x.d_commutator(&y.d_commutator(&z))
            + y.d_commutator(&z.d_commutator(&x))
            + z.d_commutator(&x.d_commutator(&y));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn d2_never_goes_negative(p in apoly(), n in 0u32..=5) {
        let r = DOp::partial(Axis::Two).pow(n).d_apply(&p);
        // AMono stores m2 unsigned; also verify against explicit differentiation
        let mut q = p.clone();
        for _ in 0..n { q = q.derive(Axis::Two); }
        prop_assert_eq!(r, q);
    }

    #[test]
    fn g_jacobi(x in vfield(), y in vfield(), z in vfield()) {
        let j = x.g_bracket(&y.g_bracket(&z)) + y.g_bracket(&z.g_bracket(&x)) + z.g_bracket(&x.g_bracket(&y));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn g_bracket_is_operator_commutator(x in vfield(), y in vfield(), p in apoly()) {
        let lhs = x.g_bracket(&y).g_apply(&p);
        let rhs = x.g_apply(&y.g_apply(&p)) - y.g_apply(&x.g_apply(&p));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn g_apply_is_derivation(x in vfield(), p in apoly(), q in apoly()) {
        let lhs = x.g_apply(&(&p * &q));
        let rhs = &x.g_apply(&p) * &q + &p * &x.g_apply(&q);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn weyl_embedding_is_lie_map(x in vfield(), y in vfield()) {
        prop_assert_eq!(x.g_bracket(&y).to_weyl(), x.to_weyl().d_commutator(&y.to_weyl()));
    }

    #[test]
    fn m10_closed_and_pi_homomorphic(x in m10_field(), y in m10_field()) {
        prop_assert!(x.in_m10_delta() && y.in_m10_delta());
        let b = x.g_bracket(&y);
        prop_assert!(b.in_m10_delta());
        let lhs = b.pi_project().unwrap();
        let rhs = x.pi_project().unwrap().gl2_bracket(&y.pi_project().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pi_kills_m10_squared(f in apoly(), k in axis(), i in 0u32..=2) {
        let t1m1 = APoly::t1() - APoly::one();
        let sq = &t1m1.pow(i) * &APoly::t2().pow(2 - i);
        let v = VField::along(k, &sq * &f);
        prop_assert!(v.pi_project().unwrap().is_zero());
    }

    #[test]
    fn smash_antisymmetric(x in smash(), y in smash()) {
        prop_assert!((x.smash_bracket(&y) + y.smash_bracket(&x)).is_zero());
    }

    #[test]
    fn smash_jacobi(x in smash(), y in smash(), z in smash()) {
        let j = x.smash_bracket(&y.smash_bracket(&z))
            + y.smash_bracket(&z.smash_bracket(&x))
            + z.smash_bracket(&x.smash_bracket(&y));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn l_jacobi(x in lelem(), y in lelem(), z in lelem()) {
        let j = l_bracket(&x, &l_bracket(&y, &z)) + l_bracket(&y, &l_bracket(&z, &x)) + l_bracket(&z, &l_bracket(&x, &y));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn theta_round_trips(x in lelem(), v in m10_field()) {
        prop_assert_eq!(theta_inv(&theta(&x)).unwrap(), x.clone());
        prop_assert!(theta(&x).in_m10_delta());
        prop_assert_eq!(theta(&theta_inv(&v).unwrap()), v);
    }

    #[test]
    fn theta_homomorphism(x in lelem(), y in lelem()) {
        prop_assert_eq!(theta(&l_bracket(&x, &y)), theta(&x).g_bracket(&theta(&y)));
    }

    #[test]
    fn rho_phi_identity(x in smash()) {
        let y = phi(&x);
        prop_assert!(y.coefficients_are_functions());
        prop_assert_eq!(rho(&y).unwrap(), x);
    }

    #[test]
    fn phi_homomorphism_random(x in smash(), y in smash()) {
        let lhs = phi(&x.smash_bracket(&y));
        let rhs = phi(&x).dl_bracket(&phi(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn p_act_respects_product(x in dop(), y in dop(), n1 in -2i64..=2, n2 in -2i64..=2, which in 0usize..3) {
        let variant = Variant::ALL[which];
        let (a2, n2) = match variant {
            Variant::Laurent => (frac(1, 3), n2),
            Variant::Poly => (int(0), n2.abs()),
            Variant::Quotient => (int(0), -n2.abs() - 1),
        };
        let m = WeightDMod::new(frac(1, 2), a2, variant).unwrap();
        let v = PElem::basis(PIdx::new(n1, n2));
        prop_assert_eq!(p_act(&x.d_mul(&y), &v, &m), p_act(&x, &p_act(&y, &v, &m), &m));
    }

    #[test]
    fn quotient_projection_intertwines(x in dop(), n1 in -2i64..=2, n2 in -3i64..=3) {
        let laurent = WeightDMod::new(frac(2, 5), int(0), Variant::Laurent).unwrap();
        let quotient = WeightDMod::new(frac(2, 5), int(0), Variant::Quotient).unwrap();
        let project = |v: &PElem| v.filter_map_keys(|n| (n.n2 < 0).then_some(*n));
        let v = PElem::basis(PIdx::new(n1, n2));
        let lhs = project(&p_act(&x, &v, &laurent));
        let rhs = p_act(&x, &project(&v), &quotient);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lift_is_representation(x in lelem(), y in lelem(), which in 0usize..3) {
        let v = [GL2Module::natural(), GL2Module::adjoint(), GL2Module::sym2()][which].clone();
        let lhs = lift_gl2(&l_bracket(&x, &y), &v);
        let rhs = lift_gl2(&x, &v).commutator(&lift_gl2(&y, &v));
        prop_assert_eq!(lhs, rhs);
    }
}
