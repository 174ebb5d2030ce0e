use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra_a::{AMono, APoly, Axis};
use crate::error::AlgebraError;
use crate::lin::Lin;
use crate::rat::{int, Rat};
use crate::weyl::{DMono, DOp};

/// `t^alpha ∂_k` applied to `t^w`: returns `(w_k, alpha + w - e_k)`, or `None`
/// when `w_k = 0`.
pub(crate) fn apply_basis(alpha: AMono, k: Axis, w: AMono) -> Option<(i64, AMono)> {
    w.derive(k).map(|(c, m)| (c, m.times(alpha)))
}

/// Derivation `f1 ∂1 + f2 ∂2` of `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct VField {
    pub f1: APoly,
    pub f2: APoly,
}

impl VField {
    pub fn new(f1: APoly, f2: APoly) -> Self {
        VField { f1, f2 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.f1.is_zero() && self.f2.is_zero()
    }

    /// `f ∂_k`
    pub fn along(k: Axis, f: APoly) -> Self {
        match k {
            Axis::One => VField::new(f, APoly::zero()),
            Axis::Two => VField::new(APoly::zero(), f),
        }
    }

    /// Basis field `t^alpha ∂_k`.
    pub fn basis(alpha: AMono, k: Axis) -> Self {
        Self::along(k, Lin::basis(alpha))
    }

    /// Generator `t^{m + δ_{k1} e_1} ∂_k`, the parameterization used by the
    /// jet-module actions and the map `phi`.
    pub fn generator(k: Axis, m: AMono) -> Self {
        Self::basis(AMono::new(m.m1 + k.delta1(), m.m2), k)
    }

    pub fn coeff(&self, k: Axis) -> &APoly {
        match k {
            Axis::One => &self.f1,
            Axis::Two => &self.f2,
        }
    }

    /// All terms as `(alpha, k, c)` for `c t^alpha ∂_k`.
    pub fn terms(&self) -> impl Iterator<Item = (AMono, Axis, &Rat)> + '_ {
        let one = self.f1.iter().map(|(m, c)| (*m, Axis::One, c));
        let two = self.f2.iter().map(|(m, c)| (*m, Axis::Two, c));
        one.chain(two)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        VField::new(self.f1.scale(c), self.f2.scale(c))
    }

    /// Left multiplication by a function.
    pub fn mul_fn(&self, p: &APoly) -> Self {
        VField::new(p * &self.f1, p * &self.f2)
    }

    /// `X(p) = f1 ∂1 p + f2 ∂2 p`
    pub fn g_apply(&self, p: &APoly) -> APoly {
        &self.f1 * &p.derive(Axis::One) + &self.f2 * &p.derive(Axis::Two)
    }

    /// Lie bracket, expanded termwise with
    /// `[t^α ∂_i, t^β ∂_j] = β_i t^{α+β-e_i} ∂_j - α_j t^{α+β-e_j} ∂_i`.
    pub fn g_bracket(&self, other: &VField) -> VField {
        let mut f = [APoly::zero(), APoly::zero()];
        for (alpha, i, ca) in self.terms() {
            for (beta, j, cb) in other.terms() {
                let c = ca * cb;
                if let Some((e, m)) = apply_basis(alpha, i, beta) {
                    f[j.index() as usize - 1].add_term(m, &c * int(e));
                }
                if let Some((e, m)) = apply_basis(beta, j, alpha) {
                    f[i.index() as usize - 1].add_term(m, -(&c * int(e)));
                }
            }
        }
        let [f1, f2] = f;
        VField::new(f1, f2)
    }

    /// The first-order operator `f1 ∂1 + f2 ∂2` in `D`.
    pub fn to_weyl(&self) -> DOp {
        let one = self.f1.iter().map(|(m, c)| (DMono::new(m.m1, m.m2, 1, 0), c.clone()));
        let two = self.f2.iter().map(|(m, c)| (DMono::new(m.m1, m.m2, 0, 1), c.clone()));
        one.chain(two).collect()
    }

    /// Inverse of [`to_weyl`](Self::to_weyl): succeeds only when every term
    /// has exactly one `∂` factor.
    pub fn from_weyl(op: &DOp) -> Option<VField> {
        let mut out = VField::zero();
        for (k, c) in op.iter() {
            let axis = match (k.c, k.d) {
                (1, 0) => Axis::One,
                (0, 1) => Axis::Two,
                _ => return None,
            };
            let f = match axis {
                Axis::One => &mut out.f1,
                Axis::Two => &mut out.f2,
            };
            f.add_term(k.t_part(), c.clone());
        }
        Some(out)
    }

    /// Membership in `m_{1,0} Δ`: both coefficients vanish at `(1, 0)`.
    pub fn in_m10_delta(&self) -> bool {
        self.f1.eval_1_0().is_zero() && self.f2.eval_1_0().is_zero()
    }

    /// Linear part at `(1, 0)`: with `α_k = ∂1 f_k (1,0)` and
    /// `β_k = ∂2 f_k (1,0)`, returns `α1 E11 + α2 E12 + β1 E21 + β2 E22`.
    pub fn pi_project(&self) -> Result<GL2Elem, AlgebraError> {
        if !self.in_m10_delta() {
            return Err(AlgebraError::NotInSubalgebra);
        }
        let a1 = self.f1.derive(Axis::One).eval_1_0();
        let a2 = self.f2.derive(Axis::One).eval_1_0();
        let b1 = self.f1.derive(Axis::Two).eval_1_0();
        let b2 = self.f2.derive(Axis::Two).eval_1_0();
        Ok(GL2Elem::from_rows([[a1, a2], [b1, b2]]))
    }
}

impl Add for VField {
    type Output = VField;
    fn add(self, rhs: VField) -> VField {
        VField::new(self.f1 + rhs.f1, self.f2 + rhs.f2)
    }
}

impl Sub for VField {
    type Output = VField;
    fn sub(self, rhs: VField) -> VField {
        VField::new(self.f1 - rhs.f1, self.f2 - rhs.f2)
    }
}

impl Neg for VField {
    type Output = VField;
    fn neg(self) -> VField {
        VField::new(-self.f1, -self.f2)
    }
}

impl fmt::Display for VField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.f1.is_zero(), self.f2.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "({})*d1", self.f1),
            (true, false) => write!(f, "({})*d2", self.f2),
            (false, false) => write!(f, "({})*d1 + ({})*d2", self.f1, self.f2),
        }
    }
}

/// 2x2 rational matrix `Σ x_ij E_ij`; `entries[i-1][j-1]` holds `x_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GL2Elem {
    pub entries: [[Rat; 2]; 2],
}

impl GL2Elem {
    pub fn from_rows(entries: [[Rat; 2]; 2]) -> Self {
        GL2Elem { entries }
    }

    pub fn zero() -> Self {
        GL2Elem::from_rows([[Rat::zero(), Rat::zero()], [Rat::zero(), Rat::zero()]])
    }

    /// Matrix unit `E_ij`, `i, j ∈ {1, 2}`.
    pub fn unit(i: usize, j: usize) -> Self {
        let mut out = Self::zero();
        out.entries[i - 1][j - 1] = Rat::one();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &GL2Elem) -> GL2Elem {
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = &self.entries[i][0] * &other.entries[0][j]
                    + &self.entries[i][1] * &other.entries[1][j];
            }
        }
        out
    }

    pub fn gl2_bracket(&self, other: &GL2Elem) -> GL2Elem {
        self.mul(other) - other.mul(self)
    }
}

impl Sub for GL2Elem {
    type Output = GL2Elem;
    fn sub(self, rhs: GL2Elem) -> GL2Elem {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] -= &rhs.entries[i][j];
            }
        }
        out
    }
}

impl Add for GL2Elem {
    type Output = GL2Elem;
    fn add(self, rhs: GL2Elem) -> GL2Elem {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] += &rhs.entries[i][j];
            }
        }
        out
    }
}

impl fmt::Display for GL2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}
