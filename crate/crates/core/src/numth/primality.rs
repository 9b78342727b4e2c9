//! Primality testing.
//!
//! Below 3,317,044,064,679,887,385,961,981 the verdict is deterministic
//! (Miller-Rabin with the first twelve prime bases, a proven-complete set for
//! that range). Above it falls back to BPSW (base-2 Miller-Rabin plus a
//! strong Lucas test) and the verdict is labelled probable, with the
//! witnesses used recorded in the verdict.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Outcome of a primality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primality {
    Composite,
    /// Deterministic verdict.
    Prime,
    /// BPSW verdict above the deterministic range; records the witnesses.
    ProbablePrime { mr_bases: Vec<u64>, lucas_d: i64 },
}

impl Primality {
    pub fn is_prime(&self) -> bool {
        !matches!(self, Primality::Composite)
    }

    pub fn is_deterministic(&self) -> bool {
        !matches!(self, Primality::ProbablePrime { .. })
    }
}

/// Bases proven complete below 3.317e24 (Sorenson-Webster).
const DETERMINISTIC_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn deterministic_limit() -> BigUint {
    "3317044064679887385961981".parse().unwrap()
}

/// Deterministic primality for `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigUint::from(n)).is_prime()
}

/// Primality of an arbitrary natural number.
pub fn is_prime(n: &BigUint) -> Primality {
    let two = BigUint::from(2u8);
    if *n < two {
        return Primality::Composite;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let bp = BigUint::from(p);
        if *n == bp {
            return Primality::Prime;
        }
        if (n % &bp).is_zero() {
            return Primality::Composite;
        }
    }
    // n - 1 = d * 2^s with d odd.
    let n_minus_1 = n - BigUint::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let strong_probable = |base: u64| -> bool {
        let mut x = BigUint::from(base).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            return true;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                return true;
            }
        }
        false
    };
    if *n < deterministic_limit() {
        for base in DETERMINISTIC_BASES {
            if !strong_probable(base) {
                return Primality::Composite;
            }
        }
        return Primality::Prime;
    }
    if !strong_probable(2) {
        return Primality::Composite;
    }
    match strong_lucas(n) {
        Some(lucas_d) => Primality::ProbablePrime {
            mr_bases: vec![2],
            lucas_d,
        },
        None => Primality::Composite,
    }
}

/// Jacobi symbol (a/n) for odd positive n.
fn jacobi(a: &BigInt, n: &BigUint) -> i32 {
    let mut a = a.mod_floor(&BigInt::from(n.clone()));
    let mut n = BigInt::from(n.clone());
    let mut result = 1i32;
    while !a.is_zero() {
        while a.is_even() {
            a /= 2;
            let r = (&n % 8u8).to_string().parse::<u8>().unwrap();
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u8) == BigInt::from(3u8) && (&n % 4u8) == BigInt::from(3u8) {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with Selfridge parameters.
/// Returns the discriminant used on pass, `None` on composite.
fn strong_lucas(n: &BigUint) -> Option<i64> {
    // Perfect squares fool the parameter search; rule them out.
    let root = n.sqrt();
    if &root * &root == *n {
        return None;
    }
    // Find D in 5, -7, 9, -11, ... with (D/n) = -1.
    let mut d: i64 = 5;
    loop {
        let j = jacobi(&BigInt::from(d), n);
        if j == -1 {
            break;
        }
        if j == 0 && BigInt::from(d).abs() < BigInt::from(n.clone()) {
            return None;
        }
        d = if d > 0 { -(d + 2) } else { -(d - 2) };
        if d.abs() > 1_000_000 {
            return None;
        }
    }
    // P = 1, Q = (1 - D)/4.
    let nn = BigInt::from(n.clone());
    let q = BigInt::from((1 - d) / 4).mod_floor(&nn);
    let d_big = BigInt::from(d).mod_floor(&nn);

    // n + 1 = t * 2^s with t odd.
    let n_plus_1 = n + BigUint::one();
    let s = n_plus_1.trailing_zeros().unwrap_or(0);
    let t = &n_plus_1 >> s;

    // Binary ladder for U_t, V_t (mod n).
    let mut u = BigInt::zero();
    let mut v = BigInt::from(2u8);
    let mut qk = BigInt::one();
    let inv2 = BigInt::from((n + BigUint::one()) >> 1); // inverse of 2 mod odd n
    let bits = t.bits();
    for i in (0..bits).rev() {
        // (U, V) <- (U*V, (V^2 + D*U^2)/2), Qk <- Qk^2  [doubling]
        let u2 = (&u * &v).mod_floor(&nn);
        let v2 = ((&v * &v + &d_big * &u * &u) * &inv2).mod_floor(&nn);
        let q2 = (&qk * &qk).mod_floor(&nn);
        u = u2;
        v = v2;
        qk = q2;
        if (&t >> i) & BigUint::one() == BigUint::one() {
            // (U, V) <- ((U + V)/2, (V + D*U)/2), Qk <- Qk*Q  [increment]
            let un = ((&u + &v) * &inv2).mod_floor(&nn);
            let vn = ((&v + &d_big * &u) * &inv2).mod_floor(&nn);
            u = un;
            v = vn;
            qk = (&qk * &q).mod_floor(&nn);
        }
    }
    if u.is_zero() || v.is_zero() {
        return Some(d);
    }
    for _ in 1..s {
        v = (&v * &v - BigInt::from(2u8) * &qk).mod_floor(&nn);
        qk = (&qk * &qk).mod_floor(&nn);
        if v.is_zero() {
            return Some(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let primes: Vec<u64> = (2..200).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163,
                167, 173, 179, 181, 191, 193, 197, 199
            ]
        );
    }

    #[test]
    fn table_relevant_values() {
        assert!(is_prime_u64(17));
        assert!(is_prime_u64(257));
        assert!(is_prime_u64(65537));
        assert!(!is_prime_u64(121));
        assert!(!is_prime_u64(2047)); // 23 * 89, base-2 pseudoprime
        assert!(is_prime(&"2305843009213693951".parse().unwrap()).is_prime()); // 2^61 - 1
        assert!(!is_prime(&"4611686018427387903".parse().unwrap()).is_prime()); // 2^62 - 1
    }

    #[test]
    fn above_deterministic_range_is_labelled() {
        // 2^89 - 1 is a Mersenne prime above the deterministic limit.
        let m89: BigUint = (BigUint::one() << 89u32) - BigUint::one();
        match is_prime(&m89) {
            Primality::ProbablePrime { mr_bases, .. } => assert_eq!(mr_bases, vec![2]),
            v => panic!("expected probable-prime label, got {v:?}"),
        }
        // A composite above the limit.
        let c = &m89 * BigUint::from(3u8);
        assert_eq!(is_prime(&c), Primality::Composite);
    }
}
