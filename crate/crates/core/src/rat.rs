use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar. Always in lowest terms with a positive denominator.
pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` reduced. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Falling factorial `x (x - 1) ... (x - j + 1)`; equals 1 for `j = 0`.
pub fn falling(x: &Rat, j: u32) -> Rat {
    let mut acc = Rat::one();
    let mut f = x.clone();
    for _ in 0..j {
        if f.is_zero() {
            return Rat::zero();
        }
        acc *= &f;
        f -= Rat::one();
    }
    acc
}

/// Binomial coefficient `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u32, k: u32) -> Rat {
    if k > n {
        return Rat::zero();
    }
    Rat::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorial_negative_argument() {
        // (-1)(-2)(-3)
        assert_eq!(falling(&int(-1), 3), int(-6));
        assert_eq!(falling(&int(3), 4), int(0));
        assert_eq!(falling(&frac(1, 2), 2), frac(-1, 4));
        assert_eq!(falling(&int(7), 0), int(1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(3, 0), int(1));
        assert_eq!(binomial(2, 3), int(0));
    }

    #[test]
    fn canonical_form() {
        let r = frac(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(frac(0, 5), Rat::zero());
    }
}
