//! Exhaustive sweeps of the structural identities over the default exponent box
//! `m1, s1 ∈ [-3, 3]`, `m2, s2 ∈ [0, 3]`.

use jetalg_core::*;

fn grid() -> Vec<AMono> {
    ExpGrid::default().monos()
}

fn t(m1: i64, m2: u32) -> APoly {
    APoly::monomial(m1, m2)
}

#[test]
fn generators_commute_with_functions_and_cartan_pieces() {
    let e1 = SmashElem::embed_g(&VField::basis(AMono::new(1, 0), Axis::One));
    let d2 = SmashElem::embed_g(&VField::basis(AMono::ONE, Axis::Two));
    for k in Axis::BOTH {
        for m in grid() {
            let x = xk(k, m);
            for f in [t(1, 0), t(0, 1)] {
                let a = SmashElem::embed_a(f);
                assert!(x.smash_bracket(&a).is_zero(), "k={} m={:?}", k, m);
                assert!(phi(&x).dl_bracket(&phi(&a)).unwrap().is_zero());
            }
            assert!(x.smash_bracket(&e1).is_zero(), "k={} m={:?}", k, m);
            assert!(x.smash_bracket(&d2).is_zero(), "k={} m={:?}", k, m);
            assert!(phi(&x).dl_bracket(&phi(&e1)).unwrap().is_zero());
            assert!(phi(&x).dl_bracket(&phi(&d2)).unwrap().is_zero());
        }
    }
}

#[test]
fn three_realizations_of_l_agree() {
    for k in Axis::BOTH {
        for l in Axis::BOTH {
            for m in grid() {
                for s in grid() {
                    let (a, b) = (x(k, m), x(l, s));
                    let constants = l_bracket(&a, &b);
                    let smash = xk(k, m).smash_bracket(&xk(l, s));
                    let pulled = theta_inv(&theta(&a).g_bracket(&theta(&b))).unwrap();
                    assert_eq!(constants, pulled, "k={} l={} m={:?} s={:?}", k, l, m, s);
                    assert_eq!(smash.to_l().as_ref(), Some(&constants));
                    assert_eq!(smash, SmashElem::from_l(&constants));
                }
            }
        }
    }
}

#[test]
fn phi_preserves_brackets_of_generators() {
    let gens: Vec<SmashElem> = Axis::BOTH
        .iter()
        .flat_map(|&k| grid().into_iter().map(move |m| SmashElem::embed_g(&VField::generator(k, m))))
        .collect();
    for x in &gens {
        for y in &gens {
            let lhs = phi(&x.smash_bracket(y));
            let rhs = phi(x).dl_bracket(&phi(y)).expect("no truncation escape");
            assert_eq!(lhs, rhs, "x={} y={}", x, y);
        }
        for s in grid() {
            let f = SmashElem::embed_a(t(s.m1, s.m2));
            assert_eq!(phi(&x.smash_bracket(&f)), phi(x).dl_bracket(&phi(&f)).unwrap());
        }
        assert!(phi(x).coefficients_are_functions());
    }
}

#[test]
fn phi_and_rho_are_mutually_inverse_on_generators() {
    for k in Axis::BOTH {
        for m in grid() {
            let g = SmashElem::embed_g(&VField::generator(k, m));
            assert_eq!(rho(&phi(&g)).unwrap(), g);
            let x_l = DLElem::from_l(&x(k, m));
            assert_eq!(phi(&rho(&x_l).unwrap()), x_l);
        }
        for y in [DLElem::from_d(DOp::partial(k)), DLElem::from_d(DOp::from_poly(&APoly::monomial(k.delta1(), 1 - k.delta1() as u32)))] {
            assert_eq!(phi(&rho(&y).unwrap()), y);
        }
    }
    for m in grid() {
        let y = DLElem::from_d(DOp::from_poly(&t(m.m1, m.m2)));
        assert_eq!(phi(&rho(&y).unwrap()), y);
        let a = SmashElem::embed_a(t(m.m1, m.m2));
        assert_eq!(rho(&phi(&a)).unwrap(), a);
    }
}

#[test]
fn cartan_images() {
    // h2 = t2 d2 ⊗ 1 + 1 ⊗ X2(0,1)
    let h2 = phi(&SmashElem::embed_g(&VField::basis(AMono::new(0, 1), Axis::Two)));
    let expected = DLElem::from_d(DOp::mono(0, 1, 0, 1)) + DLElem::from_l(&x(Axis::Two, AMono::new(0, 1)));
    assert_eq!(h2, expected);
}

#[test]
fn lift_is_representation_on_grid() {
    let keys = basis_keys(&grid());
    for v in [GL2Module::natural(), GL2Module::adjoint(), GL2Module::sym2()] {
        for a in &keys {
            for b in &keys {
                let (xa, xb) = (LElem::basis(*a), LElem::basis(*b));
                let lhs = lift_gl2(&l_bracket(&xa, &xb), &v);
                let rhs = lift_gl2(&xa, &v).commutator(&lift_gl2(&xb, &v));
                assert_eq!(lhs, rhs, "{} {} {}", v.name(), a, b);
            }
        }
    }
}

#[test]
fn lift_factors_through_theta_and_pi() {
    let nat = GL2Module::natural();
    for key in basis_keys(&grid()) {
        let xl = LElem::basis(key);
        let p = theta(&xl).pi_project().unwrap();
        let mut m = RatMatrix::zero(2);
        for i in 0..2 {
            for j in 0..2 {
                m.set(i, j, p.entries[i][j].clone());
            }
        }
        assert_eq!(lift_gl2(&xl, &nat), m, "{}", key);
    }
}

#[test]
fn weight_vectors_for_euler_field() {
    for variant in Variant::ALL {
        let a2 = if variant == Variant::Laurent { frac(1, 3) } else { int(0) };
        let p = WeightDMod::new(frac(1, 2), a2, variant).unwrap();
        let module = JetModule::new(p, GL2Module::adjoint());
        for key in module.basis_window() {
            let w = JetElem::basis(key);
            let got = module.act_vf(Axis::One, AMono::ONE, &w);
            assert_eq!(got, w.scale(&(frac(1, 2) + int(key.n.n1))));
        }
    }
}

#[test]
fn jet_axioms_across_modules() {
    let g = ExpGrid::new((-2, 2), (0, 2));
    let configs = [
        (frac(1, 2), int(0), Variant::Poly),
        (frac(1, 2), int(0), Variant::Laurent),
        (frac(1, 2), int(0), Variant::Quotient),
        (int(0), frac(1, 3), Variant::Laurent),
        (int(2), int(0), Variant::Quotient),
    ];
    for (a1, a2, variant) in configs {
        let p = WeightDMod::new(a1, a2, variant).unwrap();
        for v in [GL2Module::natural(), GL2Module::adjoint()] {
            let report = check_jet_axioms(&p, &v, &g, &g);
            assert!(report.pass(), "{} {}: {:?}", variant, v.name(), report.failures.first());
        }
    }
}
