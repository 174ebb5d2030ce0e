//! Elaboration of parsed expressions into one of the six algebras.

use std::fmt;
use std::str::FromStr;

use jetalg_core::{
    l_bracket, xk, AMono, APoly, Axis, DLElem, DOp, LElem, LKey, Rat, SmashElem, VField,
};
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::expr::{parse_expr, Atom, Expr, SyntaxError};

/// Target algebra for `eval --in`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    /// `Q[t1^±1, t2]`
    A,
    /// Weyl algebra over `A`
    D,
    /// Vector fields `Der(A)`
    G,
    /// Degree-one slice of `A # U(g)`
    Smash,
    /// Span of the `X_k(m)`
    L,
    /// `D ⊗ U(L)` truncated at `L`-degree one
    DL,
}

impl Algebra {
    pub const ALL: [Algebra; 6] = [Algebra::A, Algebra::D, Algebra::G, Algebra::Smash, Algebra::L, Algebra::DL];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::A => "A",
            Algebra::D => "D",
            Algebra::G => "g",
            Algebra::Smash => "smash",
            Algebra::L => "L",
            Algebra::DL => "DL",
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algebra {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Algebra::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown algebra '{}' (expected one of A, D, g, smash, L, DL)", s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("cannot elaborate `{offending}` in {algebra}: {reason}")]
pub struct ElaborationError {
    pub algebra: Algebra,
    pub offending: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Elaboration(#[from] ElaborationError),
}

/// Parses `text`, evaluates it in `algebra` and returns the canonical rendering.
pub fn eval_str(text: &str, algebra: Algebra) -> Result<String, EvalError> {
    Ok(eval_expr(&parse_expr(text)?, algebra)?)
}

pub fn eval_expr(e: &Expr, algebra: Algebra) -> Result<String, ElaborationError> {
    let cx = Cx(algebra);
    Ok(match algebra {
        Algebra::A => cx.poly(e)?.to_string(),
        Algebra::D => cx.dop(e)?.to_string(),
        Algebra::G => cx.field(e)?.to_string(),
        Algebra::Smash => cx.smash(e)?.to_string(),
        Algebra::L => cx.l_elem(e)?.to_string(),
        Algebra::DL => cx.dl(e)?.to_string(),
    })
}

fn show_op(e: &Expr) -> &'static str {
    match e {
        Expr::Num(_) => "number",
        Expr::Atom(_) => "atom",
        Expr::Neg(_) => "-",
        Expr::Add(..) => "+",
        Expr::Sub(..) => "-",
        Expr::Mul(..) => "*",
        Expr::Pow(..) => "^",
        Expr::Bracket(..) => "[,]",
        Expr::Dot(..) => ".",
        Expr::Tensor(..) => "(x)",
    }
}

fn show_atom(a: &Atom) -> String {
    match a {
        Atom::T1 => "t1".into(),
        Atom::T2 => "t2".into(),
        Atom::D1 => "d1".into(),
        Atom::D2 => "d2".into(),
        Atom::X(k, m1, m2) => format!("X{}({},{})", k, m1, m2),
    }
}

fn l_key(k: Axis, m1: i64, m2: i64) -> Option<Option<LKey>> {
    let m2 = u32::try_from(m2).ok()?;
    Some(LKey::new(k, AMono::new(m1, m2)))
}

fn as_scalar(f: &APoly) -> Option<Rat> {
    (f.keys().all(|m| m.is_one())).then(|| f.constant_term())
}

/// Value in the smash context before it is forced into an element.
enum SVal {
    Fn(APoly),
    Elem(SmashElem),
}

/// Value in the `L` context: scalars only act as coefficients.
enum LVal {
    Scalar(Rat),
    Elem(LElem),
}

struct Cx(Algebra);

impl Cx {
    fn err(&self, offending: impl Into<String>, reason: impl Into<String>) -> ElaborationError {
        ElaborationError { algebra: self.0, offending: offending.into(), reason: reason.into() }
    }

    fn atom_err(&self, a: &Atom) -> ElaborationError {
        self.err(show_atom(a), "atom does not belong to this algebra")
    }

    fn pow_count(&self, n: i64) -> Result<u32, ElaborationError> {
        u32::try_from(n).map_err(|_| self.err(format!("^{}", n), "exponent out of range"))
    }

    /// Negative powers exist only for nonzero multiples of `t1^k`.
    fn poly_pow(&self, p: &APoly, n: i64) -> Result<APoly, ElaborationError> {
        if n >= 0 {
            return Ok(p.pow(self.pow_count(n)?));
        }
        let mut terms = p.iter();
        match (terms.next(), terms.next()) {
            (Some((mono, c)), None) if mono.m2 == 0 => {
                let e = self.pow_count(-n)?;
                let c = c.recip().pow(e as i32);
                let m1 = mono.m1.checked_mul(n).ok_or_else(|| self.err(format!("^{}", n), "exponent out of range"))?;
                Ok(APoly::term(AMono::new(m1, 0), c))
            }
            _ => Err(self.err(format!("({})^{}", p, n), "only multiples of t1^k are invertible")),
        }
    }

    // ---- A ----

    fn poly(&self, e: &Expr) -> Result<APoly, ElaborationError> {
        Ok(match e {
            Expr::Num(c) => APoly::constant(c.clone()),
            Expr::Atom(Atom::T1) => APoly::t1(),
            Expr::Atom(Atom::T2) => APoly::t2(),
            Expr::Atom(a) => return Err(self.atom_err(a)),
            Expr::Neg(a) => -self.poly(a)?,
            Expr::Add(a, b) => self.poly(a)? + self.poly(b)?,
            Expr::Sub(a, b) => self.poly(a)? - self.poly(b)?,
            Expr::Mul(a, b) => self.poly(a)?.a_mul(&self.poly(b)?),
            Expr::Pow(a, n) => self.poly_pow(&self.poly(a)?, *n)?,
            Expr::Bracket(a, b) => {
                // A is commutative; still elaborate both sides for errors
                self.poly(a)?;
                self.poly(b)?;
                APoly::zero()
            }
            other => return Err(self.err(show_op(other), "operator does not belong to this algebra")),
        })
    }

    // ---- D ----

    fn dop(&self, e: &Expr) -> Result<DOp, ElaborationError> {
        Ok(match e {
            Expr::Num(c) => DOp::d_one().scale(c),
            Expr::Atom(Atom::T1) => DOp::mono(1, 0, 0, 0),
            Expr::Atom(Atom::T2) => DOp::mono(0, 1, 0, 0),
            Expr::Atom(Atom::D1) => DOp::partial(Axis::One),
            Expr::Atom(Atom::D2) => DOp::partial(Axis::Two),
            Expr::Atom(a) => return Err(self.atom_err(a)),
            Expr::Neg(a) => -self.dop(a)?,
            Expr::Add(a, b) => self.dop(a)? + self.dop(b)?,
            Expr::Sub(a, b) => self.dop(a)? - self.dop(b)?,
            Expr::Mul(a, b) => self.dop(a)?.d_mul(&self.dop(b)?),
            Expr::Pow(a, n) => {
                let base = self.dop(a)?;
                match (n.is_negative(), base.as_poly()) {
                    (false, _) => base.pow(self.pow_count(*n)?),
                    (true, Some(p)) => DOp::from_poly(&self.poly_pow(&p, *n)?),
                    (true, None) => {
                        return Err(self.err(format!("({})^{}", base, n), "only multiples of t1^k are invertible"))
                    }
                }
            }
            Expr::Bracket(a, b) => self.dop(a)?.d_commutator(&self.dop(b)?),
            other => return Err(self.err(show_op(other), "operator does not belong to this algebra")),
        })
    }

    // ---- g ----

    /// Evaluates as a function or a vector field; `Ok(Err(f))` is a function.
    fn g_val(&self, e: &Expr) -> Result<Result<VField, APoly>, ElaborationError> {
        let both = |a: &Expr, b: &Expr| -> Result<_, ElaborationError> { Ok((self.g_val(a)?, self.g_val(b)?)) };
        Ok(match e {
            Expr::Num(_) | Expr::Atom(Atom::T1) | Expr::Atom(Atom::T2) => Err(self.poly(e)?),
            Expr::Atom(Atom::D1) => Ok(VField::basis(AMono::ONE, Axis::One)),
            Expr::Atom(Atom::D2) => Ok(VField::basis(AMono::ONE, Axis::Two)),
            Expr::Atom(a) => return Err(self.atom_err(a)),
            Expr::Neg(a) => match self.g_val(a)? {
                Ok(x) => Ok(-x),
                Err(f) => Err(-f),
            },
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let sub = matches!(e, Expr::Sub(..));
                match both(a, b)? {
                    (Ok(x), Ok(y)) => Ok(if sub { x - y } else { x + y }),
                    (Err(f), Err(g)) => Err(if sub { f - g } else { f + g }),
                    _ => return Err(self.err(show_op(e), "cannot add a function to a vector field")),
                }
            }
            Expr::Mul(a, b) => match both(a, b)? {
                (Err(f), Err(g)) => Err(f.a_mul(&g)),
                (Err(f), Ok(x)) => Ok(x.mul_fn(&f)),
                // a scalar on the right is harmless
                (Ok(x), Err(f)) if as_scalar(&f).is_some() => Ok(x.scale(&as_scalar(&f).unwrap_or_default())),
                _ => return Err(self.err("*", "product of vector fields is not a vector field; write f*X")),
            },
            Expr::Pow(a, n) => match self.g_val(a)? {
                Err(f) => Err(self.poly_pow(&f, *n)?),
                Ok(_) => return Err(self.err("^", "powers of vector fields are not vector fields")),
            },
            Expr::Bracket(a, b) => match both(a, b)? {
                (Ok(x), Ok(y)) => Ok(x.g_bracket(&y)),
                (Ok(x), Err(f)) => Err(x.g_apply(&f)),
                (Err(f), Ok(y)) => Err(-y.g_apply(&f)),
                (Err(_), Err(_)) => Err(APoly::zero()),
            },
            other => return Err(self.err(show_op(other), "operator does not belong to this algebra")),
        })
    }

    fn field(&self, e: &Expr) -> Result<VField, ElaborationError> {
        match self.g_val(e)? {
            Ok(x) => Ok(x),
            Err(f) if f.is_zero() => Ok(VField::zero()),
            Err(f) => Err(self.err(f.to_string(), "a function is not a vector field")),
        }
    }

    // ---- smash ----

    fn s_val(&self, e: &Expr) -> Result<SVal, ElaborationError> {
        Ok(match e {
            Expr::Num(_) | Expr::Atom(Atom::T1) | Expr::Atom(Atom::T2) => SVal::Fn(self.poly(e)?),
            Expr::Atom(Atom::D1) | Expr::Atom(Atom::D2) => SVal::Elem(SmashElem::embed_g(&self.field(e)?)),
            Expr::Atom(Atom::X(k, m1, m2)) => match l_key(*k, *m1, *m2) {
                Some(Some(key)) => SVal::Elem(xk(key.k, key.m)),
                Some(None) => SVal::Elem(SmashElem::zero()),
                None => return Err(self.err(show_atom(&Atom::X(*k, *m1, *m2)), "m2 must be nonnegative")),
            },
            Expr::Neg(a) => match self.s_val(a)? {
                SVal::Fn(f) => SVal::Fn(-f),
                SVal::Elem(x) => SVal::Elem(-x),
            },
            Expr::Add(a, b) => match (self.s_val(a)?, self.s_val(b)?) {
                (SVal::Fn(f), SVal::Fn(g)) => SVal::Fn(f + g),
                (x, y) => SVal::Elem(self.s_force(x) + self.s_force(y)),
            },
            Expr::Sub(a, b) => match (self.s_val(a)?, self.s_val(b)?) {
                (SVal::Fn(f), SVal::Fn(g)) => SVal::Fn(f - g),
                (x, y) => SVal::Elem(self.s_force(x) - self.s_force(y)),
            },
            Expr::Mul(a, b) => match (self.s_val(a)?, self.s_val(b)?) {
                (SVal::Fn(f), SVal::Fn(g)) => SVal::Fn(f.a_mul(&g)),
                (SVal::Fn(f), SVal::Elem(x)) => SVal::Elem(x.left_mul(&f)),
                // (g·X) f = g f·X + g X(f)·1 stays in degree one
                (SVal::Elem(x), SVal::Fn(f)) => {
                    let fx = SmashElem::embed_a(f.clone());
                    SVal::Elem(x.left_mul(&f) + x.smash_bracket(&fx))
                }
                (SVal::Elem(x), SVal::Elem(y)) => {
                    return Err(self.err(
                        format!("({}) * ({})", x, y),
                        "product of two vector-field terms leaves the degree-one slice",
                    ))
                }
            },
            Expr::Pow(a, n) => match self.s_val(a)? {
                SVal::Fn(f) => SVal::Fn(self.poly_pow(&f, *n)?),
                SVal::Elem(x) => {
                    return Err(self.err(format!("({})^{}", x, n), "powers leave the degree-one slice"))
                }
            },
            Expr::Bracket(a, b) => {
                let (x, y) = (self.s_val(a)?, self.s_val(b)?);
                SVal::Elem(self.s_force(x).smash_bracket(&self.s_force(y)))
            }
            Expr::Dot(a, b) => {
                let f = self.poly(a)?;
                match self.g_val(b)? {
                    Ok(x) => SVal::Elem(SmashElem::dot(&f, &x)),
                    Err(c) if as_scalar(&c).is_some() => {
                        SVal::Elem(SmashElem::embed_a(f.scale(&as_scalar(&c).unwrap_or_default())))
                    }
                    Err(c) => {
                        return Err(self.err(
                            format!("{} . {}", f, c),
                            "right of '.' must be a vector field or a scalar",
                        ))
                    }
                }
            }
            Expr::Tensor(..) => return Err(self.err("(x)", "operator does not belong to this algebra")),
        })
    }

    fn s_force(&self, v: SVal) -> SmashElem {
        match v {
            SVal::Fn(f) => SmashElem::embed_a(f),
            SVal::Elem(x) => x,
        }
    }

    fn smash(&self, e: &Expr) -> Result<SmashElem, ElaborationError> {
        let v = self.s_val(e)?;
        Ok(self.s_force(v))
    }

    // ---- L ----

    fn l_val(&self, e: &Expr) -> Result<LVal, ElaborationError> {
        Ok(match e {
            Expr::Num(c) => LVal::Scalar(c.clone()),
            Expr::Atom(Atom::X(k, m1, m2)) => match l_key(*k, *m1, *m2) {
                Some(Some(key)) => LVal::Elem(LElem::basis(key)),
                Some(None) => LVal::Elem(LElem::zero()),
                None => return Err(self.err(show_atom(&Atom::X(*k, *m1, *m2)), "m2 must be nonnegative")),
            },
            Expr::Atom(a) => return Err(self.atom_err(a)),
            Expr::Neg(a) => match self.l_val(a)? {
                LVal::Scalar(c) => LVal::Scalar(-c),
                LVal::Elem(x) => LVal::Elem(-x),
            },
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let sub = matches!(e, Expr::Sub(..));
                match (self.l_val(a)?, self.l_val(b)?) {
                    (LVal::Scalar(c), LVal::Scalar(d)) => LVal::Scalar(if sub { c - d } else { c + d }),
                    (x, y) => {
                        let (x, y) = (self.l_force(x)?, self.l_force(y)?);
                        LVal::Elem(if sub { x - y } else { x + y })
                    }
                }
            }
            Expr::Mul(a, b) => match (self.l_val(a)?, self.l_val(b)?) {
                (LVal::Scalar(c), LVal::Scalar(d)) => LVal::Scalar(c * d),
                (LVal::Scalar(c), LVal::Elem(x)) | (LVal::Elem(x), LVal::Scalar(c)) => LVal::Elem(x.scale(&c)),
                (LVal::Elem(x), LVal::Elem(y)) => {
                    return Err(self.err(format!("({}) * ({})", x, y), "L is a Lie algebra; use [x, y]"))
                }
            },
            Expr::Pow(a, n) => match self.l_val(a)? {
                LVal::Scalar(c) if !c.is_zero() || *n >= 0 => LVal::Scalar(if *n >= 0 {
                    num_traits::pow(c, self.pow_count(*n)? as usize)
                } else {
                    num_traits::pow(c.recip(), self.pow_count(-n)? as usize)
                }),
                _ => return Err(self.err("^", "powers do not exist in L")),
            },
            Expr::Bracket(a, b) => {
                let (x, y) = (self.l_val(a)?, self.l_val(b)?);
                LVal::Elem(l_bracket(&self.l_force(x)?, &self.l_force(y)?))
            }
            other => return Err(self.err(show_op(other), "operator does not belong to this algebra")),
        })
    }

    fn l_force(&self, v: LVal) -> Result<LElem, ElaborationError> {
        match v {
            LVal::Elem(x) => Ok(x),
            LVal::Scalar(c) if c.is_zero() => Ok(LElem::zero()),
            LVal::Scalar(c) => Err(self.err(c.to_string(), "a nonzero scalar is not an element of L")),
        }
    }

    fn l_elem(&self, e: &Expr) -> Result<LElem, ElaborationError> {
        let v = self.l_val(e)?;
        self.l_force(v)
    }

    // ---- D ⊗ U(L) ----

    fn dl(&self, e: &Expr) -> Result<DLElem, ElaborationError> {
        let pure = |y: &DLElem| y.part1().is_empty().then(|| y.part0().clone());
        Ok(match e {
            Expr::Num(_) | Expr::Atom(Atom::T1 | Atom::T2 | Atom::D1 | Atom::D2) => DLElem::from_d(self.dop(e)?),
            Expr::Atom(Atom::X(..)) => DLElem::from_l(&self.l_elem(e)?),
            Expr::Neg(a) => -self.dl(a)?,
            Expr::Add(a, b) => self.dl(a)? + self.dl(b)?,
            Expr::Sub(a, b) => self.dl(a)? - self.dl(b)?,
            Expr::Mul(a, b) => {
                let (x, y) = (self.dl(a)?, self.dl(b)?);
                match (pure(&x), pure(&y)) {
                    (Some(d), _) => y.mul_d_left(&d),
                    (_, Some(d)) => x.mul_d_right(&d),
                    _ => {
                        return Err(self.err(
                            format!("({}) * ({})", x, y),
                            "product has L-degree 2, outside the truncation",
                        ))
                    }
                }
            }
            Expr::Pow(a, n) => {
                let x = self.dl(a)?;
                match pure(&x) {
                    Some(_) => DLElem::from_d(self.dop(e)?),
                    None => return Err(self.err(format!("({})^{}", x, n), "powers leave the truncation")),
                }
            }
            Expr::Bracket(a, b) => self
                .dl(a)?
                .dl_bracket(&self.dl(b)?)
                .map_err(|err| self.err("[,]", err.to_string()))?,
            Expr::Tensor(a, b) => {
                let d = self.dop(a)?;
                let lcx = Cx(self.0);
                match lcx.l_val(b)? {
                    LVal::Scalar(c) => DLElem::from_d(d.scale(&c)),
                    LVal::Elem(x) => {
                        let mut out = DLElem::zero();
                        for (key, c) in x.iter() {
                            out = out + DLElem::tensor(d.scale(c), *key);
                        }
                        out
                    }
                }
            }
            Expr::Dot(..) => return Err(self.err(".", "operator does not belong to this algebra")),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(text: &str, a: Algebra) -> String {
        eval_str(text, a).unwrap_or_else(|e| panic!("{}: {}", text, e))
    }

    #[test]
    fn examples() {
        assert_eq!(ev("[X2((0,1)), X2((0,2))]", Algebra::L), "X2(0,2)");
        assert_eq!(ev("d1 * t1", Algebra::D), "t1*d1 + 1");
        assert_eq!(ev("X1(0,0)", Algebra::L), "0");
    }

    #[test]
    fn negative_powers() {
        assert_eq!(ev("(2*t1)^-2", Algebra::A), "1/4*t1^-2");
        assert_eq!(ev("t1^-1 * t1", Algebra::D), "1");
        let err = eval_str("t2^-1", Algebra::A).unwrap_err();
        assert!(matches!(err, EvalError::Elaboration(ref e) if e.offending == "(t2)^-1"), "{}", err);
    }

    #[test]
    fn wrong_atoms_are_named() {
        let EvalError::Elaboration(e) = eval_str("t1 + d2", Algebra::A).unwrap_err() else { panic!() };
        assert_eq!(e.offending, "d2");
        let EvalError::Elaboration(e) = eval_str("X1(1,0) + t1", Algebra::L).unwrap_err() else { panic!() };
        assert_eq!(e.offending, "t1");
    }

    #[test]
    fn smash_slice() {
        assert_eq!(ev("[t1^-1 . t1*d1, t1]", Algebra::Smash), "(1) . 1");
        assert_eq!(ev("X2(0,1)", Algebra::Smash), "-t2 . d2 + 1 . t2*d2");
        // d1 t1 = t1 d1 + 1 in the smash product
        assert_eq!(ev("d1 * t1", Algebra::Smash), "t1 . d1 + (1) . 1");
    }

    #[test]
    fn vector_fields() {
        assert_eq!(ev("[t1*d1, t1^2*d1]", Algebra::G), "(t1^2)*d1");
        assert_eq!(ev("[d2, t2^2*d2]", Algebra::G), "(2*t2)*d2");
        // X(f) is a function, not a field
        assert!(eval_str("[d2, t2^2]", Algebra::G).is_err());
        assert_eq!(ev("[d2, t1]*d1", Algebra::G), "0");
    }

    #[test]
    fn tensor_truncation() {
        assert_eq!(ev("t2*d2 + X2(0,1)", Algebra::DL), "(t2*d2) (x) 1 + (1) (x) X2(0,1)");
        assert!(eval_str("[t2 (x) X1(1,0), d2 (x) X2(1,0)]", Algebra::DL).is_err());
        assert!(eval_str("X1(1,0) * X1(2,0)", Algebra::DL).is_err());
    }
}
