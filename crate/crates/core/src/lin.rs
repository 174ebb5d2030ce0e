use alloc::collections::btree_map::{self, BTreeMap};
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

/// Basis keys that know how to print themselves inside a linear combination.
pub trait Monomial: Ord + Clone {
    /// True for the key that renders as the bare coefficient (e.g. `t^0`).
    fn is_unit(&self) -> bool;
    fn fmt_mono(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

/// Finite linear combination of basis keys with exact rational coefficients.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lin<K: Ord> {
    terms: BTreeMap<K, Rat>,
}

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Lin { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Rat) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rat {
        self.terms.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn contains(&self, key: &K) -> bool {
        self.terms.contains_key(key)
    }

    /// Terms in ascending key order.
    pub fn iter(&self) -> btree_map::Iter<'_, K, Rat> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Rat> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &Self, c: &Rat) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Lin { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Re-key every term, merging collisions. Terms mapped to `None` are dropped.
    pub fn filter_map_keys<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Option<J>) -> Lin<J> {
        let mut out = Lin::zero();
        for (k, v) in self.iter() {
            if let Some(j) = f(k) {
                out.add_term(j, v.clone());
            }
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rat)> for Lin<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rat)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, v) in iter {
            out.add_term(k, v);
        }
        out
    }
}

impl<K: Ord> IntoIterator for Lin<K> {
    type Item = (K, Rat);
    type IntoIter = btree_map::IntoIter<K, Rat>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a Lin<K> {
    type Item = (&'a K, &'a Rat);
    type IntoIter = btree_map::Iter<'a, K, Rat>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> AddAssign<&Lin<K>> for Lin<K> {
    fn add_assign(&mut self, rhs: &Lin<K>) {
        for (k, v) in rhs.iter() {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&Lin<K>> for Lin<K> {
    fn sub_assign(&mut self, rhs: &Lin<K>) {
        for (k, v) in rhs.iter() {
            self.add_term(k.clone(), -v);
        }
    }
}

impl<K: Ord + Clone> Add for Lin<K> {
    type Output = Lin<K>;
    fn add(mut self, rhs: Lin<K>) -> Lin<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Add<&Lin<K>> for &Lin<K> {
    type Output = Lin<K>;
    fn add(self, rhs: &Lin<K>) -> Lin<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for Lin<K> {
    type Output = Lin<K>;
    fn sub(mut self, rhs: Lin<K>) -> Lin<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub<&Lin<K>> for &Lin<K> {
    type Output = Lin<K>;
    fn sub(self, rhs: &Lin<K>) -> Lin<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for Lin<K> {
    type Output = Lin<K>;
    fn neg(self) -> Lin<K> {
        Lin { terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect() }
    }
}

impl<K: Ord + Clone> Neg for &Lin<K> {
    type Output = Lin<K>;
    fn neg(self) -> Lin<K> {
        -(self.clone())
    }
}

/// Writes `c*mono` with the sign folded into the coefficient; the caller
/// handles the leading separator.
fn fmt_term<K: Monomial>(f: &mut fmt::Formatter<'_>, key: &K, abs: &Rat) -> fmt::Result {
    if key.is_unit() {
        write!(f, "{}", abs)
    } else if abs.is_one() {
        key.fmt_mono(f)
    } else {
        write!(f, "{}*", abs)?;
        key.fmt_mono(f)
    }
}

/// Canonical rendering: terms in descending key order joined by ` + ` / ` - `.
impl<K: Monomial> fmt::Display for Lin<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.terms.iter().rev().enumerate() {
            let neg = v.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            fmt_term(f, k, &v.abs())?;
        }
        Ok(())
    }
}
