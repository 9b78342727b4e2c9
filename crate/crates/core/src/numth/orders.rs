//! Exact orders of the finite simple groups, and a table of simple-group
//! orders used to certify simplicity verdicts.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::{Error, Result};

/// Families with an order formula, plus sporadics by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Alt { n: u64 },
    PSL { n: u64, q: u64 },
    PSU { n: u64, q: u64 },
    PSp { n: u64, q: u64 },
    OmegaOdd { n: u64, q: u64 },
    POmegaPlus { n: u64, q: u64 },
    POmegaMinus { n: u64, q: u64 },
    Sz { q: u64 },
    G2 { q: u64 },
    Sporadic(String),
}

fn factorial(n: u64) -> BigUint {
    (2..=n).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
}

fn q_pow(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(u32::try_from(e).expect("exponent too large"))
}

/// The 26 sporadic groups and the Tits group, by conventional name.
pub const SPORADIC_ORDERS: [(&str, &str); 27] = [
    ("M11", "7920"),
    ("M12", "95040"),
    ("M22", "443520"),
    ("M23", "10200960"),
    ("M24", "244823040"),
    ("J1", "175560"),
    ("J2", "604800"),
    ("J3", "50232960"),
    ("J4", "86775571046077562880"),
    ("Co1", "4157776806543360000"),
    ("Co2", "42305421312000"),
    ("Co3", "495766656000"),
    ("Fi22", "64561751654400"),
    ("Fi23", "4089470473293004800"),
    ("Fi24'", "1255205709190661721292800"),
    ("HS", "44352000"),
    ("McL", "898128000"),
    ("He", "4030387200"),
    ("Ru", "145926144000"),
    ("Suz", "448345497600"),
    ("ON", "460815505920"),
    ("HN", "273030912000000"),
    ("Ly", "51765179004000000"),
    ("Th", "90745943887872000"),
    ("B", "4154781481226426191177580544000000"),
    ("M", "808017424794512875886459904961710757005754368000000000"),
    ("2F4(2)'", "17971200"),
];

/// Exact order of a simple group in the given family.
///
/// Parameter validity (the range in which the group exists and is simple) is
/// enforced; the gcd denominators are part of the formulas.
pub fn simple_order(family: &Family) -> Result<BigUint> {
    use Family::*;
    let bad = |msg: &str| Err(Error::InvalidParams(msg.to_string()));
    Ok(match family {
        Alt { n } => {
            if *n < 5 {
                return bad("Alt(n) is simple for n >= 5");
            }
            factorial(*n) / BigUint::from(2u8)
        }
        PSL { n, q } => {
            if *n < 2 || (*n == 2 && *q < 4) {
                return bad("PSL(n, q) requires n >= 2 and (n, q) != (2, 2), (2, 3)");
            }
            let mut ord = q_pow(*q, n * (n - 1) / 2);
            for i in 2..=*n {
                ord *= q_pow(*q, i) - BigUint::one();
            }
            ord / BigUint::from(n.gcd(&(*q - 1)))
        }
        PSU { n, q } => {
            if *n < 3 || (*n == 3 && *q == 2) {
                return bad("PSU(n, q) requires n >= 3 and (n, q) != (3, 2)");
            }
            let mut ord = q_pow(*q, n * (n - 1) / 2);
            for i in 2..=*n {
                let term = q_pow(*q, i);
                ord *= if i % 2 == 0 {
                    &term - BigUint::one()
                } else {
                    &term + BigUint::one()
                };
            }
            ord / BigUint::from(n.gcd(&(*q + 1)))
        }
        PSp { n, q } => {
            let m = n / 2;
            if n % 2 != 0 || m < 2 || (m == 2 && *q == 2) {
                return bad("PSp(2m, q) requires even n = 2m >= 4, (m, q) != (2, 2)");
            }
            let mut ord = q_pow(*q, m * m);
            for i in 1..=m {
                ord *= q_pow(*q, 2 * i) - BigUint::one();
            }
            ord / BigUint::from(2u64.gcd(&(*q - 1)))
        }
        OmegaOdd { n, q } => {
            let m = (n - 1) / 2;
            if n % 2 != 1 || m < 3 || *q % 2 == 0 {
                return bad("Omega(2m+1, q) requires odd n = 2m+1 >= 7 and odd q");
            }
            let mut ord = q_pow(*q, m * m);
            for i in 1..=m {
                ord *= q_pow(*q, 2 * i) - BigUint::one();
            }
            ord / BigUint::from(2u8)
        }
        POmegaPlus { n, q } => {
            let m = n / 2;
            if n % 2 != 0 || m < 4 {
                return bad("POmega+(2m, q) requires even n = 2m >= 8");
            }
            let mut ord = q_pow(*q, m * (m - 1));
            for i in 1..=(m - 1) {
                ord *= q_pow(*q, 2 * i) - BigUint::one();
            }
            ord *= q_pow(*q, m) - BigUint::one();
            ord / BigUint::from(4u8).gcd(&(q_pow(*q, m) - BigUint::one()))
        }
        POmegaMinus { n, q } => {
            let m = n / 2;
            if n % 2 != 0 || m < 4 {
                return bad("POmega-(2m, q) requires even n = 2m >= 8");
            }
            let mut ord = q_pow(*q, m * (m - 1));
            for i in 1..=(m - 1) {
                ord *= q_pow(*q, 2 * i) - BigUint::one();
            }
            ord *= q_pow(*q, m) + BigUint::one();
            ord / BigUint::from(4u8).gcd(&(q_pow(*q, m) + BigUint::one()))
        }
        Sz { q } => {
            // q = 2^(2k+1), k >= 1.
            if *q < 8 || !q.is_power_of_two() || q.trailing_zeros() % 2 == 0 {
                return bad("Sz(q) requires q = 2^(2k+1) >= 8");
            }
            q_pow(*q, 2) * (q_pow(*q, 2) + BigUint::one()) * (BigUint::from(*q) - BigUint::one())
        }
        G2 { q } => {
            if *q < 3 {
                return bad("G2(q) is simple for q >= 3");
            }
            q_pow(*q, 6)
                * (q_pow(*q, 6) - BigUint::one())
                * (q_pow(*q, 2) - BigUint::one())
        }
        Sporadic(name) => {
            let entry = SPORADIC_ORDERS
                .iter()
                .find(|(n, _)| n.eq_ignore_ascii_case(name))
                .ok_or_else(|| Error::UnknownName(name.clone()))?;
            entry.1.parse().unwrap()
        }
    })
}

/// Table of simple-group orders up to 10^25, mapping order -> names.
///
/// Two independent routes meet here: the orders come from the formulas above,
/// and callers compare them against chain-computed orders of explicit
/// permutation groups.
fn simple_order_table() -> &'static BTreeMap<BigUint, Vec<String>> {
    static TABLE: OnceLock<BTreeMap<BigUint, Vec<String>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let bound: BigUint = BigUint::from(10u8).pow(25);
        let mut table: BTreeMap<BigUint, Vec<String>> = BTreeMap::new();
        let mut add = |name: String, order: BigUint| {
            if order <= bound {
                let names = table.entry(order).or_default();
                if !names.contains(&name) {
                    names.push(name);
                }
            }
        };
        for n in 5..=26 {
            add(format!("A{n}"), simple_order(&Family::Alt { n }).unwrap());
        }
        let prime_powers: Vec<u64> = (2..=1024)
            .filter(|&q| super::PrimePower::from_value(q).is_ok())
            .collect();
        for &q in &prime_powers {
            for n in 2..=12u64 {
                if let Ok(ord) = simple_order(&Family::PSL { n, q }) {
                    if ord <= bound {
                        add(format!("PSL{n}({q})"), ord);
                    }
                }
                if let Ok(ord) = simple_order(&Family::PSU { n, q }) {
                    if ord <= bound {
                        add(format!("PSU{n}({q})"), ord);
                    }
                }
                if n % 2 == 0 {
                    if let Ok(ord) = simple_order(&Family::PSp { n, q }) {
                        if ord <= bound {
                            add(format!("PSp{n}({q})"), ord);
                        }
                    }
                    if let Ok(ord) = simple_order(&Family::POmegaPlus { n, q }) {
                        if ord <= bound {
                            add(format!("POmega+{n}({q})"), ord);
                        }
                    }
                    if let Ok(ord) = simple_order(&Family::POmegaMinus { n, q }) {
                        if ord <= bound {
                            add(format!("POmega-{n}({q})"), ord);
                        }
                    }
                } else if let Ok(ord) = simple_order(&Family::OmegaOdd { n, q }) {
                    if ord <= bound {
                        add(format!("Omega{n}({q})"), ord);
                    }
                }
            }
            if let Ok(ord) = simple_order(&Family::Sz { q }) {
                if ord <= bound {
                    add(format!("Sz({q})"), ord);
                }
            }
            if let Ok(ord) = simple_order(&Family::G2 { q }) {
                if ord <= bound {
                    add(format!("G2({q})"), ord);
                }
            }
        }
        for (name, ord) in SPORADIC_ORDERS {
            add(name.to_string(), ord.parse().unwrap());
        }
        table
    })
}

/// Names of simple groups with exactly this order (empty when none is known
/// to the table; the table covers orders up to 10^25).
pub fn simple_groups_of_order(order: &BigUint) -> Vec<String> {
    simple_order_table()
        .get(order)
        .cloned()
        .unwrap_or_default()
}
