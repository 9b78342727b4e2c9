//! Cyclotomic values Φ_m(q) and primitive prime-divisor parts Φ*_m(q).
//!
//! Φ_m(q) is computed exactly by the divisor recursion
//! Φ_m(q) = (q^m - 1) / Π_{d|m, d<m} Φ_d(q); the product identity
//! q^m - 1 = Π_{d|m} Φ_d(q) is reproduced exactly by construction and tested
//! exhaustively elsewhere.
//!
//! A prime r dividing q^m - 1 is *primitive* when it divides no q^l - 1 with
//! 0 < l < m, equivalently when q has multiplicative order exactly m mod r.
//! Φ*_m(q) is the product of all primitive primes counting multiplicity;
//! it equals 1 exactly at (m, q) = (6, 2) and at m = 2 with q = p = 2^s - 1
//! a Mersenne prime.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use super::factor::factorize;
use super::{multiplicative_order, PrimePower};
use crate::{Error, Result};

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Exact value of the m-th cyclotomic polynomial at an integer `q >= 2`.
pub fn cyclotomic_value(m: u64, q: &BigUint) -> BigUint {
    assert!(m >= 1, "cyclotomic index must be positive");
    assert!(*q >= BigUint::from(2u8), "evaluation point must be >= 2");
    let mut memo: Vec<(u64, BigUint)> = Vec::new();
    fn phi(m: u64, q: &BigUint, memo: &mut Vec<(u64, BigUint)>) -> BigUint {
        if let Some((_, v)) = memo.iter().find(|(k, _)| *k == m) {
            return v.clone();
        }
        let mut value = q.pow(u32::try_from(m).expect("m too large")) - BigUint::one();
        for d in divisors(m) {
            if d < m {
                let pd = phi(d, q, memo);
                debug_assert!((&value % &pd).is_zero(), "cyclotomic division not exact");
                value /= pd;
            }
        }
        memo.push((m, value.clone()));
        value
    }
    phi(m, q, &mut memo)
}

/// Full report on Φ_m(q) and its primitive part.
#[derive(Debug, Clone, Serialize)]
pub struct CyclotomicReport {
    pub m: u64,
    pub q: PrimePower,
    #[serde(serialize_with = "crate::numth::serialize_biguint")]
    pub phi_value: BigUint,
    #[serde(serialize_with = "crate::numth::serialize_biguint")]
    pub primitive_part: BigUint,
    /// `(prime, multiplicity in q^m - 1)` for each primitive prime.
    pub primitive_primes: Vec<(String, u32)>,
    pub is_zsigmondy_exception: bool,
}

/// Computes Φ_m(q), factors it, and separates the primitive prime divisors.
pub fn primitive_part(m: u64, q: &PrimePower) -> Result<CyclotomicReport> {
    if m < 1 {
        return Err(Error::InvalidParams("m must be positive".into()));
    }
    let phi_value = cyclotomic_value(m, &q.value);
    let factorization = factorize(&phi_value, 1 << 24)?;
    let mut primitive = BigUint::one();
    let mut primes = Vec::new();
    for (r, _) in &factorization.factors {
        // r is primitive iff ord_r(q) = m; non-primitive prime divisors of
        // Φ_m(q) divide m. A primitive prime divides no other factor of
        // q^m - 1, so its multiplicity there equals its multiplicity here.
        if multiplicative_order(&q.value, r) == m {
            let mult = big_valuation(&phi_value, r);
            primitive *= r.pow(mult);
            primes.push((r.to_string(), mult));
        }
    }
    let exception = primitive.is_one();
    Ok(CyclotomicReport {
        m,
        q: q.clone(),
        phi_value,
        primitive_part: primitive,
        primitive_primes: primes,
        is_zsigmondy_exception: exception,
    })
}

fn big_valuation(n: &BigUint, p: &BigUint) -> u32 {
    let mut v = 0;
    let mut rest = n.clone();
    while (&rest % p).is_zero() {
        rest /= p;
        v += 1;
    }
    v
}

/// Closed-form predicate for Φ*_m(q) = 1: true exactly at (m, q) = (6, 2)
/// and at m = 2 with q = p a Mersenne prime 2^s - 1.
pub fn zsigmondy_exception(m: u64, q: &PrimePower) -> Result<bool> {
    if m < 2 {
        return Err(Error::OutOfStatement(
            "the exception classification covers m >= 2".into(),
        ));
    }
    if m == 6 && q.value == BigUint::from(2u8) {
        return Ok(true);
    }
    if m == 2 && q.f == 1 {
        let succ = q.p + 1;
        return Ok(succ.is_power_of_two() && q.p >= 3);
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: u64) -> PrimePower {
        PrimePower::from_value(v).unwrap()
    }

    #[test]
    fn cyclotomic_small_values() {
        let two = BigUint::from(2u8);
        assert_eq!(cyclotomic_value(6, &two), BigUint::from(3u8));
        assert_eq!(cyclotomic_value(1, &two), BigUint::from(1u8));
        assert_eq!(cyclotomic_value(4, &BigUint::from(3u8)), BigUint::from(10u8));
        // Φ_2(q) = q + 1.
        assert_eq!(cyclotomic_value(2, &BigUint::from(7u8)), BigUint::from(8u8));
    }

    #[test]
    fn primitive_parts() {
        // Φ_4(2) = 5 directly; 15 = 3*5 with 3 | 2^2 - 1.
        let r = primitive_part(4, &q(2)).unwrap();
        assert_eq!(r.primitive_part, BigUint::from(5u8));
        assert!(!r.is_zsigmondy_exception);

        // The (6, 2) exception.
        let r = primitive_part(6, &q(2)).unwrap();
        assert_eq!(r.primitive_part, BigUint::one());
        assert!(r.is_zsigmondy_exception);

        // 2^10 - 1 = 1023 = 3 * 11 * 31; only 11 is primitive.
        let r = primitive_part(10, &q(2)).unwrap();
        assert_eq!(r.primitive_part, BigUint::from(11u8));

        // Multiplicity counts: Φ_2(8) = 9 = 3^2, both copies primitive.
        let r = primitive_part(2, &q(8)).unwrap();
        assert_eq!(r.primitive_part, BigUint::from(9u8));
        assert_eq!(r.primitive_primes, vec![("3".to_string(), 2)]);
    }

    #[test]
    fn exception_closed_form() {
        assert!(zsigmondy_exception(6, &q(2)).unwrap());
        assert!(zsigmondy_exception(2, &q(7)).unwrap());
        assert!(!zsigmondy_exception(2, &q(5)).unwrap());
        assert!(!zsigmondy_exception(2, &q(9)).unwrap()); // q = 3^2 is not p
        assert!(!zsigmondy_exception(6, &q(3)).unwrap());
        assert!(zsigmondy_exception(1, &q(2)).is_err());
    }
}
