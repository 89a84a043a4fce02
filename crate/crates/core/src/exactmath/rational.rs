use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// `base^exp` for a possibly negative exponent. `0^negative` panics.
pub fn pow_int(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc *= base;
        }
        acc
    } else {
        assert!(!base.is_zero(), "zero raised to a negative power");
        pow_int(base, -exp).recip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn lowest_terms_and_sign() {
        let q = rat(6, -4);
        assert_eq!(q, rat(-3, 2));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(int(5).to_string(), "5");
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow_int(&int(3), -1), rat(1, 3));
        assert_eq!(pow_int(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(pow_int(&int(0), 0), int(1));
        assert_eq!(factorial(5), int(120));
    }
}
