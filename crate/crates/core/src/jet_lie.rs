use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::algebra_a::{AMono, APoly, Axis};
use crate::error::AlgebraError;
use crate::lin::{Lin, Monomial};
use crate::matrix::RatMatrix;
use crate::rat::{int, Rat};
use crate::vector_fields::VField;

/// Basis element `X_k(m)` of the jet Lie algebra, `m ∈ Z x Z_{>=0}`, `m ≠ (0,0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LKey {
    pub k: Axis,
    pub m: AMono,
}

impl LKey {
    /// `None` for `m = (0, 0)`, where `X_k(0,0) = 0`.
    pub fn new(k: Axis, m: AMono) -> Option<LKey> {
        (!m.is_one()).then_some(LKey { k, m })
    }
}

impl Monomial for LKey {
    fn is_unit(&self) -> bool {
        false
    }

    fn fmt_mono(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}({},{})", self.k, self.m.m1, self.m.m2)
    }
}

impl fmt::Display for LKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_mono(f)
    }
}

pub type LElem = Lin<LKey>;

/// `X_k(m)` as an element; zero when `m = (0, 0)`.
pub fn x(k: Axis, m: AMono) -> LElem {
    match LKey::new(k, m) {
        Some(key) => LElem::basis(key),
        None => LElem::zero(),
    }
}

/// Adds `c X_k(m1, m2)`, skipping zero coefficients and `X_k(0,0)`.
/// A nonzero coefficient always comes with `m2 >= 0`.
fn push(out: &mut LElem, c: i64, k: Axis, m1: i64, m2: i64) {
    if c == 0 {
        return;
    }
    debug_assert!(m2 >= 0, "negative t2 exponent with nonzero coefficient");
    if let Some(key) = LKey::new(k, AMono::new(m1, m2 as u32)) {
        out.add_term(key, int(c));
    }
}

fn bracket_basis(a: LKey, b: LKey) -> LElem {
    let mut out = LElem::zero();
    let (m1, m2) = (a.m.m1, a.m.m2 as i64);
    let (s1, s2) = (b.m.m1, b.m.m2 as i64);
    let dm = (m2 == 0) as i64;
    let ds = (s2 == 0) as i64;
    match (a.k, b.k) {
        (Axis::One, Axis::One) => {
            push(&mut out, m1 * ds, Axis::One, m1, m2);
            push(&mut out, -s1 * dm, Axis::One, s1, s2);
            push(&mut out, s1 - m1, Axis::One, m1 + s1, m2 + s2);
        }
        (Axis::Two, Axis::Two) => {
            push(&mut out, -s2 * dm, Axis::Two, s1, s2 - 1);
            push(&mut out, m2 * ds, Axis::Two, m1, m2 - 1);
            push(&mut out, s2 - m2, Axis::Two, m1 + s1, m2 + s2 - 1);
        }
        (Axis::One, Axis::Two) => {
            push(&mut out, -s1 * dm, Axis::Two, s1, s2);
            push(&mut out, m2 * ds, Axis::One, m1, m2 - 1);
            push(&mut out, s1, Axis::Two, m1 + s1, m2 + s2);
            push(&mut out, -m2, Axis::One, m1 + s1, m2 + s2 - 1);
        }
        (Axis::Two, Axis::One) => return -bracket_basis(b, a),
    }
    out
}

/// Lie bracket of `L` from its structure constants, extended bilinearly.
pub fn l_bracket(x: &LElem, y: &LElem) -> LElem {
    let mut out = LElem::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&bracket_basis(*a, *b), &(ca * cb));
        }
    }
    out
}

/// `(t^m - δ_{m2,0})`
fn vanishing_monomial(m: AMono) -> APoly {
    let mut p = APoly::monomial(m.m1, m.m2);
    if m.m2 == 0 {
        p.add_term(AMono::ONE, -Rat::one());
    }
    p
}

/// Isomorphism onto fields vanishing at `(1,0)`:
/// `X_1(m) ↦ (t^m - δ_{m2,0}) t1 ∂1`, `X_2(m) ↦ (t^m - δ_{m2,0}) ∂2`.
pub fn theta(x: &LElem) -> VField {
    let mut f1 = APoly::zero();
    let mut f2 = APoly::zero();
    for (key, c) in x.iter() {
        let p = vanishing_monomial(key.m).scale(c);
        match key.k {
            Axis::One => f1 += &p.shift(AMono::new(1, 0)),
            Axis::Two => f2 += &p,
        }
    }
    VField::new(f1, f2)
}

/// Inverse of [`theta`]. Strips the `t1` factor from `f1`; every non-constant
/// monomial `c t^m` then maps to `c X_k(m)`, and the constant terms are
/// accounted for because the coefficients vanish at `(1, 0)`.
pub fn theta_inv(v: &VField) -> Result<LElem, AlgebraError> {
    if !v.in_m10_delta() {
        return Err(AlgebraError::NotInSubalgebra);
    }
    let g1 = v.f1.shift(AMono::new(-1, 0));
    let mut out = LElem::zero();
    for (k, g) in [(Axis::One, &g1), (Axis::Two, &v.f2)] {
        for (m, c) in g.iter() {
            if let Some(key) = LKey::new(k, *m) {
                out.add_term(key, c.clone());
            }
        }
    }
    Ok(out)
}

/// Finite-dimensional `gl_2`-module given by the images of `E11, E12, E21, E22`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GL2Module {
    name: &'static str,
    e: [RatMatrix; 4],
}

fn slot(i: usize, j: usize) -> usize {
    (i - 1) * 2 + (j - 1)
}

impl GL2Module {
    /// Checks the `gl_2` relations `[E_ij, E_kl] = δ_jk E_il - δ_li E_kj`.
    pub fn new(name: &'static str, e: [RatMatrix; 4]) -> Result<Self, AlgebraError> {
        let m = Self::new_unchecked(name, e)?;
        if let Some((a, b)) = m.relation_violation() {
            return Err(AlgebraError::InvalidModule(format!(
                "{}: [E{}{}, E{}{}] violates the gl2 relations",
                name, a.0, a.1, b.0, b.1
            )));
        }
        Ok(m)
    }

    /// Accepts any four equally sized matrices; used for negative controls.
    pub fn new_unchecked(name: &'static str, e: [RatMatrix; 4]) -> Result<Self, AlgebraError> {
        let n = e[0].dim();
        if n == 0 || e.iter().any(|m| m.dim() != n) {
            return Err(AlgebraError::InvalidModule(format!("{}: matrices must share a positive dimension", name)));
        }
        Ok(GL2Module { name, e })
    }

    /// First pair of units whose commutator is not represented faithfully.
    pub fn relation_violation(&self) -> Option<((usize, usize), (usize, usize))> {
        let units = [(1, 1), (1, 2), (2, 1), (2, 2)];
        for &(i, j) in &units {
            for &(k, l) in &units {
                let lhs = self.e(i, j).commutator(self.e(k, l));
                let mut rhs = RatMatrix::zero(self.dim());
                if j == k {
                    rhs = rhs + self.e(i, l).clone();
                }
                if l == i {
                    rhs = rhs - self.e(k, j).clone();
                }
                if lhs != rhs {
                    return Some(((i, j), (k, l)));
                }
            }
        }
        None
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn dim(&self) -> usize {
        self.e[0].dim()
    }

    /// Image of `E_ij`.
    pub fn e(&self, i: usize, j: usize) -> &RatMatrix {
        &self.e[slot(i, j)]
    }

    /// `Q^2` with `E_ij` acting as matrix units.
    pub fn natural() -> Self {
        let unit = |i: usize, j: usize| {
            let mut m = RatMatrix::zero(2);
            m.set(i - 1, j - 1, Rat::one());
            m
        };
        Self::new("natural", [unit(1, 1), unit(1, 2), unit(2, 1), unit(2, 2)]).expect("natural module")
    }

    /// `gl_2` acting on itself by `ad`, in the ordered basis `E11, E12, E21, E22`.
    pub fn adjoint() -> Self {
        let units = [(1, 1), (1, 2), (2, 1), (2, 2)];
        let ad = |i: usize, j: usize| {
            let mut m = RatMatrix::zero(4);
            for (col, &(k, l)) in units.iter().enumerate() {
                // [E_ij, E_kl] = δ_jk E_il - δ_li E_kj
                if j == k {
                    let row = slot(i, l);
                    let v = m.get(row, col) + Rat::one();
                    m.set(row, col, v);
                }
                if l == i {
                    let row = slot(k, j);
                    let v = m.get(row, col) - Rat::one();
                    m.set(row, col, v);
                }
            }
            m
        };
        Self::new("adjoint", [ad(1, 1), ad(1, 2), ad(2, 1), ad(2, 2)]).expect("adjoint module")
    }

    /// Quadratic forms `x1^2, x1 x2, x2^2` with `E_ij` acting as `x_i ∂/∂x_j`.
    pub fn sym2() -> Self {
        // basis index -> (power of x1, power of x2)
        let basis = [(2u32, 0u32), (1, 1), (0, 2)];
        let index = |p: (u32, u32)| basis.iter().position(|&b| b == p).unwrap();
        let op = |i: usize, j: usize| {
            let mut m = RatMatrix::zero(3);
            for (col, &(p1, p2)) in basis.iter().enumerate() {
                let mut pw = [p1, p2];
                let c = pw[j - 1];
                if c == 0 {
                    continue;
                }
                pw[j - 1] -= 1;
                pw[i - 1] += 1;
                m.set(index((pw[0], pw[1])), col, int(c as i64));
            }
            m
        };
        Self::new("sym2", [op(1, 1), op(1, 2), op(2, 1), op(2, 2)]).expect("sym2 module")
    }

    /// The natural module with `rho(E12)` replaced by `2 E12 + E11`, which
    /// breaks the `gl_2` relations.
    pub fn corrupted_natural() -> Self {
        let nat = Self::natural();
        let bad = nat.e(1, 2).scale(&int(2)) + nat.e(1, 1).clone();
        let mut e = nat.e.clone();
        e[slot(1, 2)] = bad;
        Self::new_unchecked("corrupted-natural", e).expect("same dimensions")
    }

    pub fn matrices(&self) -> Vec<&RatMatrix> {
        self.e.iter().collect()
    }
}

/// Action of `x ∈ L` on the lifted module `V^L`:
/// `X_k(i,0) ↦ i E_{1k}`, `X_k(i,1) ↦ E_{2k}`, `X_k(m) ↦ 0` for `m2 >= 2`.
pub fn lift_gl2(x: &LElem, v: &GL2Module) -> RatMatrix {
    let mut out = RatMatrix::zero(v.dim());
    for (key, c) in x.iter() {
        let k = key.k.index() as usize;
        let term = match key.m.m2 {
            0 => v.e(1, k).scale(&(c * int(key.m.m1))),
            1 => v.e(2, k).scale(c),
            _ => continue,
        };
        out = out + term;
    }
    out
}

/// Every `X_k(m)` with `m` in `monos` (skipping `m = 0`), `k = 1` first.
pub fn basis_keys(monos: &[AMono]) -> Vec<LKey> {
    let mut out = vec![];
    for k in Axis::BOTH {
        out.extend(monos.iter().filter_map(|m| LKey::new(k, *m)));
    }
    out
}
