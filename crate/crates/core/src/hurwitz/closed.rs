use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::exactmath::{factorial, int, pow_int, Rational};

/// `Hʳ_{0,1}(d) = d^{⌊d/r⌋-2} / ⌊d/r⌋!`, and zero unless `r | d`.
pub fn jpt_01(r: u32, d: u32) -> Rational {
    if r == 0 || d == 0 || d % r != 0 {
        return Rational::zero();
    }
    let k = d / r;
    pow_int(&int(d.into()), i64::from(k) - 2) / factorial(k)
}

/// `Hʳ_{0,2}(μ₁, μ₂)`, zero unless `r | μ₁ + μ₂`. The power of `r` is
/// `⟨μ₁/r⟩ + ⟨μ₂/r⟩`, an integer under that condition.
pub fn jpt_02(r: u32, mu1: u32, mu2: u32) -> Rational {
    if r == 0 || mu1 == 0 || mu2 == 0 || (mu1 + mu2) % r != 0 {
        return Rational::zero();
    }
    let e = (mu1 % r + mu2 % r) / r;
    let (k1, k2) = (mu1 / r, mu2 / r);
    pow_int(&int(r.into()), e.into()) / int((mu1 + mu2).into())
        * pow_int(&int(mu1.into()), k1.into())
        * pow_int(&int(mu2.into()), k2.into())
        / (factorial(k1) * factorial(k2))
}

/// Labeled trees on `d` nodes by `(d-1) T_d = ½ Σ_{a+b=d} ab C(d,a) T_a T_b`.
pub fn tree_count(d: u32) -> BigUint {
    let d = d as usize;
    let mut t: alloc::vec::Vec<BigUint> = alloc::vec![BigUint::zero(), BigUint::one()];
    for n in 2..=d {
        let mut sum = BigUint::zero();
        let mut binom = BigUint::one();
        for a in 1..n {
            // binom = C(n, a)
            binom = binom * BigUint::from(n - a + 1) / BigUint::from(a);
            let b = n - a;
            sum += BigUint::from(a * b) * &binom * &t[a] * &t[b];
        }
        t.push(sum / BigUint::from(2 * (n - 1)));
    }
    if d == 0 {
        return BigUint::zero();
    }
    t[d].clone()
}
