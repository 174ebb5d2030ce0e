use alloc::collections::BTreeMap;
use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Neg, Sub};


use crate::algebra_a::{AMono, APoly, Axis};
use crate::error::AlgebraError;
use crate::jet_lie::{l_bracket, x as l_x, LElem, LKey};
use crate::lin::Lin;
use crate::rat::{binomial, Rat};
use crate::smash::{xk, CoverKey, SmashElem};
use crate::weyl::{DMono, DOp};

/// Element `d ⊗ 1 + Σ q_X ⊗ X` of `D ⊗ U(L)` truncated at `L`-degree 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DLElem {
    part0: DOp,
    part1: BTreeMap<LKey, DOp>,
}

impl DLElem {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `d ⊗ 1`
    pub fn from_d(d: DOp) -> Self {
        DLElem { part0: d, part1: BTreeMap::new() }
    }

    /// `1 ⊗ x`
    pub fn from_l(x: &LElem) -> Self {
        let mut out = Self::zero();
        for (key, c) in x.iter() {
            out.add_tensor(*key, &DOp::d_one().scale(c));
        }
        out
    }

    /// `d ⊗ X`
    pub fn tensor(d: DOp, key: LKey) -> Self {
        let mut out = Self::zero();
        out.add_tensor(key, &d);
        out
    }

    pub fn part0(&self) -> &DOp {
        &self.part0
    }

    pub fn part1(&self) -> &BTreeMap<LKey, DOp> {
        &self.part1
    }

    pub fn is_zero(&self) -> bool {
        self.part0.is_zero() && self.part1.is_empty()
    }

    fn add_tensor(&mut self, key: LKey, d: &DOp) {
        if d.is_zero() {
            return;
        }
        let entry = self.part1.entry(key).or_default();
        *entry += d;
        if entry.is_zero() {
            self.part1.remove(&key);
        }
    }

    /// `self += d ⊗ x` for every term of `x`.
    fn add_tensor_l(&mut self, d: &DOp, x: &LElem) {
        for (key, c) in x.iter() {
            self.add_tensor(*key, &d.scale(c));
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = DLElem::from_d(self.part0.scale(c));
        for (key, d) in &self.part1 {
            out.add_tensor(*key, &d.scale(c));
        }
        out
    }

    /// Commutator in `D ⊗ U(L)`, valid while it stays in `L`-degree `<= 1`:
    /// `[a⊗1, b⊗y] = [a,b]⊗y` and `[a⊗x, b⊗y] = ab⊗[x,y]` when `ab = ba`.
    pub fn dl_bracket(&self, other: &DLElem) -> Result<DLElem, AlgebraError> {
        let mut out = DLElem::from_d(self.part0.d_commutator(&other.part0));
        for (key, d) in &other.part1 {
            out.add_tensor(*key, &self.part0.d_commutator(d));
        }
        for (key, d) in &self.part1 {
            out.add_tensor(*key, &d.d_commutator(&other.part0));
        }
        for (ka, da) in &self.part1 {
            for (kb, db) in &other.part1 {
                let ab = da.d_mul(db);
                if ab != db.d_mul(da) {
                    return Err(AlgebraError::TruncationEscape {
                        left: da.to_string(),
                        right: db.to_string(),
                    });
                }
                out.add_tensor_l(&ab, &l_bracket(&l_x(ka.k, ka.m), &l_x(kb.k, kb.m)));
            }
        }
        Ok(out)
    }

    /// `(d ⊗ 1) · self`
    pub fn mul_d_left(&self, d: &DOp) -> DLElem {
        let mut out = DLElem::from_d(d.d_mul(&self.part0));
        for (key, q) in &self.part1 {
            out.add_tensor(*key, &d.d_mul(q));
        }
        out
    }

    /// `self · (d ⊗ 1)`
    pub fn mul_d_right(&self, d: &DOp) -> DLElem {
        let mut out = DLElem::from_d(self.part0.d_mul(d));
        for (key, q) in &self.part1 {
            out.add_tensor(*key, &q.d_mul(d));
        }
        out
    }

    /// True when every `L`-coefficient is a multiplication operator.
    pub fn coefficients_are_functions(&self) -> bool {
        self.part1.values().all(|d| d.order() == 0)
    }
}

impl Add for DLElem {
    type Output = DLElem;
    fn add(mut self, rhs: DLElem) -> DLElem {
        self.part0 += &rhs.part0;
        for (key, d) in &rhs.part1 {
            self.add_tensor(*key, d);
        }
        self
    }
}

impl Neg for DLElem {
    type Output = DLElem;
    fn neg(self) -> DLElem {
        let mut out = DLElem::from_d(-self.part0);
        for (key, d) in self.part1 {
            out.add_tensor(key, &-d);
        }
        out
    }
}

impl Sub for DLElem {
    type Output = DLElem;
    fn sub(self, rhs: DLElem) -> DLElem {
        self + (-rhs)
    }
}

/// `(d) (x) 1 + (q) (x) Xk(m1,m2) + ...`, `L`-terms in descending key order.
impl fmt::Display for DLElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        if !self.part0.is_zero() {
            write!(f, "({}) (x) 1", self.part0)?;
            first = false;
        }
        for (key, d) in self.part1.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({}) (x) {}", d, key)?;
        }
        Ok(())
    }
}

/// `phi(t^u · t^alpha ∂_k)` with `m = alpha - δ_{k1} e_1`:
/// `t^{u+alpha} ∂_k ⊗ 1 + Σ_i C(m2, i) t^u t1^{m1} t2^i ⊗ X_k(m - i e_2)`.
fn phi_cover(key: &CoverKey, c: &Rat, out: &mut DLElem) {
    let k = key.k;
    let t = key.u.times(key.alpha);
    let d = match k {
        Axis::One => DMono::new(t.m1, t.m2, 1, 0),
        Axis::Two => DMono::new(t.m1, t.m2, 0, 1),
    };
    out.part0.add_term(d, c.clone());
    let m = AMono::new(key.alpha.m1 - k.delta1(), key.alpha.m2);
    for i in 0..=m.m2 {
        let Some(lkey) = LKey::new(k, AMono::new(m.m1, m.m2 - i)) else { continue };
        let coeff = AMono::new(m.m1, i).times(key.u);
        let q = DOp::term(DMono::from_amono(coeff), c * binomial(m.m2, i));
        out.add_tensor(lkey, &q);
    }
}

/// The algebra isomorphism `A # U(g) → D ⊗ U(L)` on the degree-one slice:
/// `phi(t^m · 1) = t^m ⊗ 1` and, for vector fields,
/// `phi(1 · t^{m+δ_{k1}e_1} ∂_k) = t1^{m1+δ_{k1}} t2^{m2} ∂_k ⊗ 1 + Σ_i C(m2,i) t1^{m1} t2^i ⊗ X_k(m - i e_2)`,
/// extended by `phi(f·X) = (f ⊗ 1) phi(1·X)`.
pub fn phi(x: &SmashElem) -> DLElem {
    let mut out = DLElem::from_d(DOp::from_poly(x.apart()));
    for (key, c) in x.cover().iter() {
        phi_cover(key, c, &mut out);
    }
    out
}

/// Inverse of [`phi`]: `t_k ⊗ 1 ↦ t_k · 1`, `∂_1 ⊗ 1 ↦ t1^{-1} · t1 ∂1`,
/// `∂_2 ⊗ 1 ↦ 1 · ∂2`, `1 ⊗ X_k(m) ↦ X_k(m)`.
pub fn rho(y: &DLElem) -> Result<SmashElem, AlgebraError> {
    let mut apart = APoly::zero();
    let mut cover = Lin::zero();
    for (d, c) in y.part0().iter() {
        let t = d.t_part();
        match (d.c, d.d) {
            (0, 0) => apart.add_term(t, c.clone()),
            (1, 0) => cover.add_term(
                CoverKey::new(AMono::new(t.m1 - 1, t.m2), AMono::new(1, 0), Axis::One),
                c.clone(),
            ),
            (0, 1) => cover.add_term(CoverKey::new(t, AMono::ONE, Axis::Two), c.clone()),
            _ => return Err(AlgebraError::DegreeTooHigh(DOp::term(*d, c.clone()).to_string())),
        }
    }
    let mut out = SmashElem::from_parts(cover, apart);
    for (key, q) in y.part1() {
        let Some(f) = q.as_poly() else {
            return Err(AlgebraError::DegreeTooHigh(alloc::format!("({}) (x) {}", q, key)));
        };
        out = out + xk(key.k, key.m).left_mul(&f);
    }
    Ok(out)
}
