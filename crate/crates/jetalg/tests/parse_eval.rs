use jetalg::{eval_str, parse_expr, Algebra, Atom, EvalError, Expr};
use jetalg_core::*;
use proptest::prelude::*;

#[test]
fn documented_examples() {
    assert_eq!(parse_expr("X2(0,1)").unwrap(), Expr::Atom(Atom::X(Axis::Two, 0, 1)));
    assert!(matches!(parse_expr("[t1^-1 . t1*d1, t1]").unwrap(), Expr::Bracket(..)));
    assert!(parse_expr("t1^(1/2)").is_err());
    assert_eq!(eval_str("[X2((0,1)), X2((0,2))]", Algebra::L).unwrap(), "X2(0,2)");
    assert_eq!(eval_str("d1 * t1", Algebra::D).unwrap(), "t1*d1 + 1");
    assert_eq!(eval_str("X1(0,0)", Algebra::L).unwrap(), "0");
}

#[test]
fn structure_constant_instances() {
    // [X1(m), X1(s)] with m2 = s2 = 0
    assert_eq!(eval_str("[X1(1,0), X1(2,0)]", Algebra::L).unwrap(), "X1(3,0) - 2*X1(2,0) + X1(1,0)");
    // the same bracket computed in the smash product lands in L
    let smash = eval_str("[X1(1,0), X1(2,0)]", Algebra::Smash).unwrap();
    assert_eq!(smash, eval_str("X1(3,0) - 2*X1(2,0) + X1(1,0)", Algebra::Smash).unwrap());
}

#[test]
fn cartan_element_in_the_tensor_product() {
    // h2 = t2 d2 ⊗ 1 + 1 ⊗ X2(0,1)
    assert_eq!(eval_str("t2*d2 (x) 1 + 1 (x) X2(0,1)", Algebra::DL).unwrap(), "(t2*d2) (x) 1 + (1) (x) X2(0,1)");
    assert_eq!(eval_str("[t1*d1, X2(0,1)]", Algebra::DL).unwrap(), "0");
    assert_eq!(eval_str("[X2(0,1), X2(0,2)]", Algebra::DL).unwrap(), "(1) (x) X2(0,2)");
}

#[test]
fn elaboration_errors_name_the_culprit() {
    for (text, algebra, culprit) in [
        ("d1 + t1", Algebra::A, "d1"),
        ("X1(1,0)", Algebra::D, "X1(1,0)"),
        ("t1 . d1", Algebra::D, "."),
        ("t1 (x) X1(1,0)", Algebra::Smash, "(x)"),
        ("t2", Algebra::L, "t2"),
    ] {
        match eval_str(text, algebra) {
            Err(EvalError::Elaboration(e)) => assert_eq!(e.offending, culprit, "{}", text),
            other => panic!("{} in {}: {:?}", text, algebra, other),
        }
    }
}

#[test]
fn syntax_errors_report_position_and_expectations() {
    let Err(EvalError::Syntax(e)) = eval_str("[t1, ", Algebra::A) else { panic!("expected syntax error") };
    assert_eq!((e.line, e.column), (1, 6));
    assert!(!e.expected.is_empty());
}

// ---- round trips: rendering then parsing gives the element back ----

fn rat() -> impl Strategy<Value = Rat> {
    (-7i64..=7, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn poly() -> impl Strategy<Value = APoly> {
    prop::collection::vec(((-3i64..=3, 0u32..=3), rat()), 0..4)
        .prop_map(|ts| ts.into_iter().map(|((a, b), c)| (AMono::new(a, b), c)).collect())
}

fn dop() -> impl Strategy<Value = DOp> {
    prop::collection::vec(((-3i64..=3, 0u32..=3, 0u32..=2, 0u32..=2), rat()), 0..4)
        .prop_map(|ts| ts.into_iter().map(|((a, b, c, d), r)| (DMono::new(a, b, c, d), r)).collect())
}

fn field() -> impl Strategy<Value = VField> {
    (poly(), poly()).prop_map(|(f1, f2)| VField::new(f1, f2))
}

fn axis() -> impl Strategy<Value = Axis> {
    prop_oneof![Just(Axis::One), Just(Axis::Two)]
}

fn l_elem() -> impl Strategy<Value = LElem> {
    prop::collection::vec((axis(), -3i64..=3, 0u32..=3, rat()), 0..4).prop_map(|ts| {
        let mut out = LElem::zero();
        for (k, m1, m2, c) in ts {
            out.add_scaled(&x(k, AMono::new(m1, m2)), &c);
        }
        out
    })
}

fn smash() -> impl Strategy<Value = SmashElem> {
    (prop::collection::vec((poly(), field()), 0..3), poly()).prop_map(|(parts, h)| {
        let mut out = SmashElem::embed_a(h);
        for (f, v) in parts {
            out = out + SmashElem::dot(&f, &v);
        }
        out
    })
}

fn dl() -> impl Strategy<Value = DLElem> {
    (dop(), prop::collection::vec((poly(), axis(), -3i64..=3, 0u32..=3), 0..3)).prop_map(|(d, parts)| {
        let mut out = DLElem::from_d(d);
        for (q, k, m1, m2) in parts {
            if let Some(key) = LKey::new(k, AMono::new(m1, m2)) {
                out = out + DLElem::tensor(DOp::from_poly(&q), key);
            }
        }
        out
    })
}

fn round_trip(rendered: String, algebra: Algebra) -> Result<(), TestCaseError> {
    let back = eval_str(&rendered, algebra).map_err(|e| TestCaseError::fail(format!("{}: {}", rendered, e)))?;
    prop_assert_eq!(back, rendered);
    Ok(())
}

proptest! {
    #[test]
    fn a_round_trip(p in poly()) {
        round_trip(p.to_string(), Algebra::A)?;
    }

    #[test]
    fn d_round_trip(d in dop()) {
        round_trip(d.to_string(), Algebra::D)?;
    }

    #[test]
    fn g_round_trip(v in field()) {
        round_trip(v.to_string(), Algebra::G)?;
    }

    #[test]
    fn smash_round_trip(s in smash()) {
        round_trip(s.to_string(), Algebra::Smash)?;
    }

    #[test]
    fn l_round_trip(l in l_elem()) {
        round_trip(l.to_string(), Algebra::L)?;
    }

    #[test]
    fn dl_round_trip(y in dl()) {
        round_trip(y.to_string(), Algebra::DL)?;
    }

    #[test]
    fn parsing_matches_direct_arithmetic(a in dop(), b in dop()) {
        let text = format!("({}) * ({}) - [{}, {}]", a, b, a, b);
        let expected = b.d_mul(&a);
        prop_assert_eq!(eval_str(&text, Algebra::D).unwrap(), expected.to_string());
    }

    #[test]
    fn smash_brackets_match(s in smash(), t in smash()) {
        let text = format!("[{}, {}]", s, t);
        prop_assert_eq!(eval_str(&text, Algebra::Smash).unwrap(), s.smash_bracket(&t).to_string());
    }
}
