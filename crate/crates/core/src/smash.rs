use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Signed};

use crate::algebra_a::{AMono, APoly, Axis};
use crate::jet_lie::{LElem, LKey};
use crate::lin::{Lin, Monomial};
use crate::rat::{binomial, int, Rat};
use crate::vector_fields::{apply_basis, VField};

/// Basis element `t^u · t^alpha ∂_k` of `A ⊗ g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverKey {
    pub u: AMono,
    pub alpha: AMono,
    pub k: Axis,
}

impl CoverKey {
    pub const fn new(u: AMono, alpha: AMono, k: Axis) -> Self {
        CoverKey { u, alpha, k }
    }
}

impl Monomial for CoverKey {
    fn is_unit(&self) -> bool {
        false
    }

    fn fmt_mono(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} . ", self.u)?;
        if !self.alpha.is_one() {
            write!(f, "{}*", self.alpha)?;
        }
        write!(f, "d{}", self.k)
    }
}

/// Element `Σ f·X + h·1` of the `U(g)`-degree `<= 1` part of `A # U(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SmashElem {
    cover: Lin<CoverKey>,
    apart: APoly,
}

impl SmashElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_parts(cover: Lin<CoverKey>, apart: APoly) -> Self {
        SmashElem { cover, apart }
    }

    pub fn term(c: Rat, u: AMono, alpha: AMono, k: Axis) -> Self {
        SmashElem::from_parts(Lin::term(CoverKey::new(u, alpha, k), c), APoly::zero())
    }

    /// `1·X`
    pub fn embed_g(x: &VField) -> Self {
        let cover = x.terms().map(|(alpha, k, c)| (CoverKey::new(AMono::ONE, alpha, k), c.clone()));
        SmashElem::from_parts(cover.collect(), APoly::zero())
    }

    /// `p·1`
    pub fn embed_a(p: APoly) -> Self {
        SmashElem::from_parts(Lin::zero(), p)
    }

    /// `f·X` for a function `f` and field `X`.
    pub fn dot(f: &APoly, x: &VField) -> Self {
        Self::embed_g(x).left_mul(f)
    }

    pub fn cover(&self) -> &Lin<CoverKey> {
        &self.cover
    }

    pub fn apart(&self) -> &APoly {
        &self.apart
    }

    pub fn is_zero(&self) -> bool {
        self.cover.is_zero() && self.apart.is_zero()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        SmashElem::from_parts(self.cover.scale(c), self.apart.scale(c))
    }

    /// Left multiplication by `f ∈ A`: `f(g·X) = (fg)·X`, `f(h·1) = (fh)·1`.
    pub fn left_mul(&self, f: &APoly) -> Self {
        let mut cover = Lin::zero();
        for (key, c) in self.cover.iter() {
            for (m, cf) in f.iter() {
                cover.add_term(CoverKey::new(key.u.times(*m), key.alpha, key.k), c * cf);
            }
        }
        SmashElem::from_parts(cover, f * &self.apart)
    }

    /// Commutator in `A # U(g)`:
    /// `[f·X, g·Y] = f X(g)·Y - g Y(f)·X + fg·[X,Y]`,
    /// `[f·X, h·1] = f X(h)·1`, `[h·1, h'·1] = 0`.
    pub fn smash_bracket(&self, other: &SmashElem) -> SmashElem {
        let mut cover = Lin::zero();
        let mut apart = APoly::zero();
        for (x, cx) in self.cover.iter() {
            for (y, cy) in other.cover.iter() {
                let c = cx * cy;
                // f X(g) · Y
                if let Some((e, w)) = apply_basis(x.alpha, x.k, y.u) {
                    cover.add_term(CoverKey::new(x.u.times(w), y.alpha, y.k), &c * int(e));
                }
                // - g Y(f) · X
                if let Some((e, w)) = apply_basis(y.alpha, y.k, x.u) {
                    cover.add_term(CoverKey::new(y.u.times(w), x.alpha, x.k), -(&c * int(e)));
                }
                // fg · [X, Y]
                let u = x.u.times(y.u);
                if let Some((e, gamma)) = apply_basis(x.alpha, x.k, y.alpha) {
                    cover.add_term(CoverKey::new(u, gamma, y.k), &c * int(e));
                }
                if let Some((e, gamma)) = apply_basis(y.alpha, y.k, x.alpha) {
                    cover.add_term(CoverKey::new(u, gamma, x.k), -(&c * int(e)));
                }
            }
            for (h, ch) in other.apart.iter() {
                if let Some((e, w)) = apply_basis(x.alpha, x.k, *h) {
                    apart.add_term(x.u.times(w), cx * ch * int(e));
                }
            }
        }
        for (h, ch) in self.apart.iter() {
            for (y, cy) in other.cover.iter() {
                if let Some((e, w)) = apply_basis(y.alpha, y.k, *h) {
                    apart.add_term(y.u.times(w), -(ch * cy * int(e)));
                }
            }
        }
        SmashElem::from_parts(cover, apart)
    }

    /// `Σ c X_k(m)` realized in the smash product.
    pub fn from_l(x: &LElem) -> SmashElem {
        let mut out = SmashElem::zero();
        for (key, c) in x.iter() {
            out = out + xk(key.k, key.m).scale(c);
        }
        out
    }

    /// Writes `self` as a combination of the `X_k(m)`, if it lies in their span.
    ///
    /// `X_k(m)` (for `m ≠ 0`) contains the term `t^{(-m1, m2)} · t^{(m1+δ_{k1}, 0)} ∂_k`
    /// with coefficient `(-1)^{m2}`, and no other `X_l(s)` contains a cover key
    /// with `alpha_2 = 0` and `u = (-m1, m2)`. Peeling off those keys one at a
    /// time is therefore a triangular solve.
    pub fn to_l(&self) -> Option<LElem> {
        if !self.apart.is_zero() {
            return None;
        }
        let mut rest = self.clone();
        let mut out = LElem::zero();
        loop {
            let lead = rest
                .cover
                .iter()
                .find(|(key, _)| key.alpha.m2 == 0 && !key.u.is_one())
                .map(|(key, c)| (*key, c.clone()));
            let Some((key, c)) = lead else { break };
            if key.u.m1 + key.alpha.m1 != key.k.delta1() {
                return None;
            }
            let m = AMono::new(-key.u.m1, key.u.m2);
            let sign = if m.m2.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
            let coeff = c * sign;
            rest = rest - xk(key.k, m).scale(&coeff);
            out.add_term(LKey::new(key.k, m)?, coeff);
        }
        rest.is_zero().then_some(out)
    }
}

/// The degree-zero element
/// `X_k(m) = Σ_{i=0}^{m2} (-1)^i C(m2,i) t1^{-m1} t2^i · t1^{m1+δ_{k1}} t2^{m2-i} ∂_k - δ_{m2,0} 1·t1^{δ_{k1}} ∂_k`.
/// Vanishes for `m = (0, 0)`.
pub fn xk(k: Axis, m: AMono) -> SmashElem {
    let d = k.delta1();
    let mut cover = Lin::zero();
    for i in 0..=m.m2 {
        let mut c = binomial(m.m2, i);
        if i % 2 == 1 {
            c = -c;
        }
        let key = CoverKey::new(AMono::new(-m.m1, i), AMono::new(m.m1 + d, m.m2 - i), k);
        cover.add_term(key, c);
    }
    if m.m2 == 0 {
        cover.add_term(CoverKey::new(AMono::ONE, AMono::new(d, 0), k), -Rat::one());
    }
    SmashElem::from_parts(cover, APoly::zero())
}

impl Add for SmashElem {
    type Output = SmashElem;
    fn add(self, rhs: SmashElem) -> SmashElem {
        SmashElem::from_parts(self.cover + rhs.cover, self.apart + rhs.apart)
    }
}

impl Sub for SmashElem {
    type Output = SmashElem;
    fn sub(self, rhs: SmashElem) -> SmashElem {
        SmashElem::from_parts(self.cover - rhs.cover, self.apart - rhs.apart)
    }
}

impl Neg for SmashElem {
    type Output = SmashElem;
    fn neg(self) -> SmashElem {
        SmashElem::from_parts(-self.cover, -self.apart)
    }
}

/// Terms `c*t^u . t^alpha*dk` in descending key order, then `(h) . 1`.
impl fmt::Display for SmashElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (key, c) in self.cover.iter().rev() {
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            write!(f, "{} . ", APoly::term(key.u, c.abs()))?;
            if !key.alpha.is_one() {
                write!(f, "{}*", key.alpha)?;
            }
            write!(f, "d{}", key.k)?;
        }
        if !self.apart.is_zero() {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({}) . 1", self.apart)?;
        }
        Ok(())
    }
}
