use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_traits::Zero;

use crate::lin::{Lin, Monomial};
use crate::rat::{int, Rat};

/// Coordinate index `k ∈ {1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    One,
    Two,
}

impl Axis {
    pub const BOTH: [Axis; 2] = [Axis::One, Axis::Two];

    pub fn index(self) -> u8 {
        match self {
            Axis::One => 1,
            Axis::Two => 2,
        }
    }

    pub fn from_index(k: u8) -> Option<Axis> {
        match k {
            1 => Some(Axis::One),
            2 => Some(Axis::Two),
            _ => None,
        }
    }

    /// Kronecker `δ_{k1}` as an exponent shift.
    pub fn delta1(self) -> i64 {
        match self {
            Axis::One => 1,
            Axis::Two => 0,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// Monomial `t1^m1 t2^m2` with `m1 ∈ Z`, `m2 ∈ Z_{>=0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AMono {
    pub m1: i64,
    pub m2: u32,
}

impl AMono {
    pub const ONE: AMono = AMono { m1: 0, m2: 0 };

    pub const fn new(m1: i64, m2: u32) -> Self {
        AMono { m1, m2 }
    }

    pub fn is_one(self) -> bool {
        self == AMono::ONE
    }

    pub fn times(self, other: AMono) -> AMono {
        AMono::new(self.m1 + other.m1, self.m2 + other.m2)
    }

    /// Exponent along `axis` as an integer.
    pub fn exp(self, axis: Axis) -> i64 {
        match axis {
            Axis::One => self.m1,
            Axis::Two => self.m2 as i64,
        }
    }

    /// `m - e_axis`, or `None` when that would make the `t2` exponent negative.
    pub fn lower(self, axis: Axis) -> Option<AMono> {
        match axis {
            Axis::One => Some(AMono::new(self.m1 - 1, self.m2)),
            Axis::Two => self.m2.checked_sub(1).map(|m2| AMono::new(self.m1, m2)),
        }
    }

    /// `∂_axis t^self = c t^m`, returned as `(c, m)`; `None` when `c = 0`.
    pub fn derive(self, axis: Axis) -> Option<(i64, AMono)> {
        let c = self.exp(axis);
        if c == 0 {
            return None;
        }
        self.lower(axis).map(|m| (c, m))
    }
}

pub(crate) fn fmt_factor(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    sym: &str,
    exp: i64,
) -> fmt::Result {
    if exp == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    if exp == 1 {
        f.write_str(sym)
    } else {
        write!(f, "{}^{}", sym, exp)
    }
}

impl Monomial for AMono {
    fn is_unit(&self) -> bool {
        self.is_one()
    }

    fn fmt_mono(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        fmt_factor(f, &mut first, "t1", self.m1)?;
        fmt_factor(f, &mut first, "t2", self.m2 as i64)?;
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Display for AMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_mono(f)
    }
}

/// Element of `A = Q[t1^{±1}, t2]`.
pub type APoly = Lin<AMono>;

impl Lin<AMono> {
    pub fn constant(c: Rat) -> APoly {
        Lin::term(AMono::ONE, c)
    }

    pub fn one() -> APoly {
        Lin::basis(AMono::ONE)
    }

    pub fn monomial(m1: i64, m2: u32) -> APoly {
        Lin::basis(AMono::new(m1, m2))
    }

    pub fn t1() -> APoly {
        Self::monomial(1, 0)
    }

    pub fn t2() -> APoly {
        Self::monomial(0, 1)
    }

    /// Multiply by the monomial `t^m`.
    pub fn shift(&self, m: AMono) -> APoly {
        self.filter_map_keys(|k| Some(k.times(m)))
    }

    pub fn a_mul(&self, other: &APoly) -> APoly {
        let mut out = APoly::zero();
        for (k1, c1) in self.iter() {
            for (k2, c2) in other.iter() {
                out.add_term(k1.times(*k2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> APoly {
        let mut acc = APoly::one();
        for _ in 0..n {
            acc = acc.a_mul(self);
        }
        acc
    }

    /// Partial derivative `∂_axis`.
    pub fn derive(&self, axis: Axis) -> APoly {
        let mut out = APoly::zero();
        for (k, c) in self.iter() {
            if let Some((e, m)) = k.derive(axis) {
                out.add_term(m, c * int(e));
            }
        }
        out
    }

    /// Value at `(t1, t2) = (1, 0)`. `p` lies in the maximal ideal `m_{1,0}`
    /// exactly when this is zero.
    pub fn eval_1_0(&self) -> Rat {
        let mut acc = Rat::zero();
        for (k, c) in self.iter() {
            if k.m2 == 0 {
                acc += c;
            }
        }
        acc
    }

    /// The constant term (coefficient of `t^0`).
    pub fn constant_term(&self) -> Rat {
        self.coeff(&AMono::ONE)
    }

    pub fn monos(&self) -> Vec<AMono> {
        self.keys().copied().collect()
    }
}

impl Mul for &APoly {
    type Output = APoly;
    fn mul(self, rhs: &APoly) -> APoly {
        self.a_mul(rhs)
    }
}

impl Mul for APoly {
    type Output = APoly;
    fn mul(self, rhs: APoly) -> APoly {
        self.a_mul(&rhs)
    }
}
