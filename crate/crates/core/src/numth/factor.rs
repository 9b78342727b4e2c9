//! Integer factorization: trial division plus Pollard rho (Brent variant).
//!
//! Budgeted: oversized inputs yield a partial factorization with the
//! unfactored cofactor flagged, never a silent wrong answer.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::primality::is_prime;
use crate::{Error, Result};

/// A full prime factorization, exponents included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// `(prime, multiplicity)` sorted by prime.
    pub factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn largest_prime(&self) -> Option<&BigUint> {
        self.factors.last().map(|(p, _)| p)
    }
}

/// Factors `n >= 1` completely, or fails with the unfactored cofactor when
/// the rho budget runs out.
pub fn factorize(n: &BigUint, budget: u64) -> Result<Factorization> {
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();
    if rest.is_zero() {
        return Err(Error::InvalidParams("cannot factor zero".into()));
    }
    for p in 2u64..=9973 {
        if rest.is_one() {
            break;
        }
        let bp = BigUint::from(p);
        if (&bp * &bp) > rest {
            break;
        }
        let mut mult = 0;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            mult += 1;
        }
        if mult > 0 {
            factors.push((bp, mult));
        }
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m).is_prime() {
            push_factor(&mut factors, m, 1);
            continue;
        }
        match pollard_rho(&m, budget) {
            Some(d) => {
                stack.push(&m / &d);
                stack.push(d);
            }
            None => return Err(Error::FactorizationTimeout { cofactor: m }),
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    // Merge duplicates introduced by the stack.
    let mut merged: Vec<(BigUint, u32)> = Vec::new();
    for (p, m) in factors {
        match merged.last_mut() {
            Some((q, mm)) if *q == p => *mm += m,
            _ => merged.push((p, m)),
        }
    }
    Ok(Factorization { factors: merged })
}

fn push_factor(factors: &mut Vec<(BigUint, u32)>, p: BigUint, mult: u32) {
    factors.push((p, mult));
}

/// Brent-cycle Pollard rho; returns a nontrivial divisor or None on budget.
fn pollard_rho(n: &BigUint, budget: u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u8));
    }
    for c in 1u64..64 {
        let c_big = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c_big) % n;
        let mut x = BigUint::from(2u64 + c);
        let mut y = x.clone();
        let mut d = BigUint::one();
        let mut steps = 0u64;
        while d.is_one() {
            if steps > budget {
                return None;
            }
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break; // cycle without factor; try another c
            }
            d = diff.gcd(n);
            steps += 1;
        }
        if !d.is_one() && d != *n {
            return Some(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: u64) -> Vec<(u64, u32)> {
        factorize(&BigUint::from(n), 1 << 20)
            .unwrap()
            .factors
            .into_iter()
            .map(|(p, m)| (u64::try_from(&p).unwrap(), m))
            .collect()
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(fac(1), vec![]);
        assert_eq!(fac(660), vec![(2, 2), (3, 1), (5, 1), (11, 1)]);
        assert_eq!(fac(1023), vec![(3, 1), (11, 1), (31, 1)]);
        assert_eq!(fac(95040), vec![(2, 6), (3, 3), (5, 1), (11, 1)]);
        assert_eq!(fac(244823040), vec![(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)]);
    }

    #[test]
    fn exhausted_budget_reports_the_cofactor() {
        // Two large primes with a rho budget too small to split them.
        let p: BigUint = "2305843009213693951".parse().unwrap(); // 2^61 - 1
        let q: BigUint = "618970019642690137449562111".parse().unwrap(); // 2^89 - 1
        let n = &p * &q;
        match factorize(&n, 4) {
            Err(crate::Error::FactorizationTimeout { cofactor }) => {
                assert_eq!(cofactor, n);
            }
            other => panic!("expected a timeout with the cofactor, got {other:?}"),
        }
    }

    #[test]
    fn semiprime_beyond_trial_division() {
        // 1000003 * 1000033
        let n = BigUint::from(1000003u64) * BigUint::from(1000033u64);
        let f = factorize(&n, 1 << 22).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.factors[0].0, BigUint::from(1000003u64));
    }
}
