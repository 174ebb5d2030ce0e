use alloc::vec::Vec;

use crate::algebra_a::AMono;

/// Inclusive box of exponents `m1 in lo1..=hi1`, `m2 in lo2..=hi2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExpGrid {
    pub m1: (i64, i64),
    pub m2: (u32, u32),
}

impl ExpGrid {
    pub const fn new(m1: (i64, i64), m2: (u32, u32)) -> Self {
        ExpGrid { m1, m2 }
    }

    pub fn is_empty(&self) -> bool {
        self.m1.0 > self.m1.1 || self.m2.0 > self.m2.1
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        ((self.m1.1 - self.m1.0 + 1) as usize) * ((self.m2.1 - self.m2.0 + 1) as usize)
    }

    /// Points in ascending `(m1, m2)` order.
    pub fn monos(&self) -> Vec<AMono> {
        let mut out = Vec::with_capacity(self.len());
        if self.is_empty() {
            return out;
        }
        for m1 in self.m1.0..=self.m1.1 {
            for m2 in self.m2.0..=self.m2.1 {
                out.push(AMono::new(m1, m2));
            }
        }
        out
    }
}

impl Default for ExpGrid {
    fn default() -> Self {
        ExpGrid::new((-3, 3), (0, 3))
    }
}
