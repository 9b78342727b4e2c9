//! Exact number theory: primality, factorization, cyclotomic values,
//! primitive prime-divisor parts, and the arithmetic side conditions of the
//! exceptional-triple table.

pub mod cyclotomic;
pub mod factor;
pub mod orders;
pub mod primality;
pub mod table1;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::{Error, Result};

pub use cyclotomic::{cyclotomic_value, primitive_part, zsigmondy_exception, CyclotomicReport};
pub use primality::{is_prime, is_prime_u64, Primality};

/// A prime power `q = p^f` with `p` certified prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimePower {
    pub p: u64,
    pub f: u32,
    #[serde(serialize_with = "crate::numth::serialize_biguint")]
    pub value: BigUint,
}

impl PrimePower {
    pub fn new(p: u64, f: u32) -> Result<PrimePower> {
        if f == 0 {
            return Err(Error::InvalidParams("exponent f must be positive".into()));
        }
        if !is_prime_u64(p) {
            return Err(Error::InvalidParams(format!("{p} is not prime")));
        }
        Ok(PrimePower {
            p,
            f,
            value: BigUint::from(p).pow(f),
        })
    }

    /// Decomposes `q` as a prime power, if it is one.
    pub fn from_value(q: u64) -> Result<PrimePower> {
        if q < 2 {
            return Err(Error::InvalidParams(format!("{q} is not a prime power")));
        }
        let mut n = q;
        let mut p = 0u64;
        for cand in 2..=q {
            if cand * cand > q {
                break;
            }
            if n % cand == 0 {
                p = cand;
                break;
            }
        }
        if p == 0 {
            // q itself is prime.
            return PrimePower::new(q, 1);
        }
        let mut f = 0u32;
        while n % p == 0 {
            n /= p;
            f += 1;
        }
        if n != 1 {
            return Err(Error::InvalidParams(format!("{q} is not a prime power")));
        }
        PrimePower::new(p, f)
    }

    pub fn value_u64(&self) -> u64 {
        u64::try_from(&self.value).expect("prime power exceeds u64")
    }
}

/// All prime powers `q` with `2 <= q <= bound`, ascending.
pub fn prime_powers_up_to(bound: u64) -> Vec<PrimePower> {
    (2..=bound)
        .filter_map(|q| PrimePower::from_value(q).ok())
        .collect()
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: &BigUint, p: u64) -> BigUint {
    assert!(!n.is_zero(), "p-part of zero is undefined");
    let p = BigUint::from(p);
    let mut part = BigUint::one();
    let mut rest = n.clone();
    while (&rest % &p).is_zero() {
        rest /= &p;
        part *= &p;
    }
    part
}

/// Multiplicity of `p` in `n`.
pub fn p_valuation(n: &BigUint, p: u64) -> u32 {
    let p = BigUint::from(p);
    let mut v = 0;
    let mut rest = n.clone();
    while !rest.is_zero() && (&rest % &p).is_zero() {
        rest /= &p;
        v += 1;
    }
    v
}

/// Verdict of the prime-index check on `r = (q^d - 1)/(q - 1)`.
#[derive(Debug, Clone, Serialize)]
pub enum RatioVerdict {
    /// `r` is composite; nothing further is claimed.
    NotPrime {
        #[serde(serialize_with = "crate::numth::serialize_biguint")]
        r: BigUint,
    },
    /// `r` is prime and all four consequences hold.
    Prime {
        #[serde(serialize_with = "crate::numth::serialize_biguint")]
        r: BigUint,
        d_is_prime: bool,
        d_coprime_q_minus_1: bool,
        f_power_of_d: bool,
        d_odd_or_d_eq_p_eq_2: bool,
    },
}

/// Checks that `(q^d - 1)/(q - 1)` being prime forces: `d` prime,
/// `(d, q-1) = 1`, `f` a power of `d`, and `d` odd or `d = p = 2`.
///
/// A prime `r` with any consequence failing would contradict the statement;
/// that is reported as an internal contradiction, never an expected outcome.
pub fn lemma_r_check(q: &PrimePower, d: u32) -> Result<RatioVerdict> {
    if d < 2 {
        return Err(Error::InvalidParams("d must be at least 2".into()));
    }
    let qv = &q.value;
    let r = (qv.pow(d) - BigUint::one()) / (qv - BigUint::one());
    if !is_prime(&r).is_prime() {
        return Ok(RatioVerdict::NotPrime { r });
    }
    let d_is_prime = is_prime_u64(d as u64);
    let q_minus_1 = qv - BigUint::one();
    let d_coprime_q_minus_1 = num_integer::Integer::gcd(
        &BigUint::from(d),
        &q_minus_1,
    )
    .is_one();
    let f_power_of_d = is_power_of(q.f as u64, d as u64);
    let d_odd_or_d_eq_p_eq_2 = d % 2 == 1 || (d == 2 && q.p == 2);
    let all = d_is_prime && d_coprime_q_minus_1 && f_power_of_d && d_odd_or_d_eq_p_eq_2;
    if !all {
        return Err(Error::InternalContradiction(format!(
            "r = {r} is prime for q = {}^{}, d = {d}, but a consequence fails \
             (d prime: {d_is_prime}, (d,q-1)=1: {d_coprime_q_minus_1}, \
             f power of d: {f_power_of_d}, d odd or d=p=2: {d_odd_or_d_eq_p_eq_2})",
            q.p, q.f
        )));
    }
    Ok(RatioVerdict::Prime {
        r,
        d_is_prime,
        d_coprime_q_minus_1,
        f_power_of_d,
        d_odd_or_d_eq_p_eq_2,
    })
}

/// True when `x = base^e` for some `e >= 0`.
pub fn is_power_of(mut x: u64, base: u64) -> bool {
    if x == 1 {
        return true;
    }
    if base < 2 {
        return false;
    }
    while x % base == 0 {
        x /= base;
    }
    x == 1
}

/// Multiplicative order of `q` modulo the prime `r`.
pub fn multiplicative_order(q: &BigUint, r: &BigUint) -> u64 {
    let q = q % r;
    assert!(!q.is_zero(), "order undefined: q divisible by r");
    let mut acc = q.clone();
    let mut ord = 1u64;
    while !acc.is_one() {
        acc = acc * &q % r;
        ord += 1;
    }
    ord
}

pub(crate) fn serialize_biguint<S: serde::Serializer>(
    n: &BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_decomposition() {
        let q = PrimePower::from_value(32).unwrap();
        assert_eq!((q.p, q.f), (2, 5));
        assert_eq!(PrimePower::from_value(27).unwrap().f, 3);
        assert!(PrimePower::from_value(12).is_err());
        assert!(PrimePower::from_value(1).is_err());
        assert_eq!(PrimePower::from_value(17).unwrap().f, 1);
    }

    #[test]
    fn p_part_examples() {
        assert_eq!(p_part(&BigUint::from(2520u32), 11), BigUint::from(1u8));
        assert_eq!(p_part(&BigUint::from(660u32), 11), BigUint::from(11u8));
        assert_eq!(p_part(&BigUint::from(1u8), 7), BigUint::from(1u8));
        assert_eq!(p_part(&BigUint::from(48u8), 2), BigUint::from(16u8));
    }

    #[test]
    fn lemma_r_examples() {
        // q=2, d=5: r=31 prime, f=1 is 5^0, d odd.
        let q2 = PrimePower::new(2, 1).unwrap();
        match lemma_r_check(&q2, 5).unwrap() {
            RatioVerdict::Prime { r, .. } => assert_eq!(r, BigUint::from(31u8)),
            v => panic!("expected prime verdict, got {v:?}"),
        }
        // q=4, d=2: r=5 prime via the d=p=2 branch, f=2 a power of 2.
        let q4 = PrimePower::new(2, 2).unwrap();
        match lemma_r_check(&q4, 2).unwrap() {
            RatioVerdict::Prime {
                r,
                d_odd_or_d_eq_p_eq_2,
                f_power_of_d,
                ..
            } => {
                assert_eq!(r, BigUint::from(5u8));
                assert!(d_odd_or_d_eq_p_eq_2);
                assert!(f_power_of_d);
            }
            v => panic!("expected prime verdict, got {v:?}"),
        }
        // q=3, d=5: 121 = 11^2 is not prime.
        let q3 = PrimePower::new(3, 1).unwrap();
        match lemma_r_check(&q3, 5).unwrap() {
            RatioVerdict::NotPrime { r } => assert_eq!(r, BigUint::from(121u8)),
            v => panic!("expected non-prime verdict, got {v:?}"),
        }
    }

    #[test]
    fn order_mod_prime() {
        assert_eq!(
            multiplicative_order(&BigUint::from(2u8), &BigUint::from(31u8)),
            5
        );
        assert_eq!(
            multiplicative_order(&BigUint::from(2u8), &BigUint::from(11u8)),
            10
        );
    }
}
