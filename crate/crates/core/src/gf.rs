//! Small finite fields GF(p^f), enough to build projective-line and
//! matrix-group permutation representations.
//!
//! Elements are indices `0..q`: the element with polynomial coordinates
//! `c_0 + c_1 x + ...` over GF(p) has index `c_0 + c_1 p + ...`. Arithmetic
//! runs through exp/log tables built from a primitive element, which for the
//! extension fields is the class of `x` modulo a hardcoded primitive
//! polynomial (primitivity is asserted at construction).

use crate::{Error, Result};

/// A small finite field with full exp/log tables.
#[derive(Debug, Clone)]
pub struct GF {
    pub p: u64,
    pub f: u32,
    pub q: u64,
    /// exp[i] = g^i for the primitive element g, length q-1.
    exp: Vec<u64>,
    /// log[a] for a in 1..q; log[0] is unused.
    log: Vec<usize>,
    add_table: Vec<u64>,
}

/// Primitive polynomials: coefficients of x^f as combinations of lower terms,
/// i.e. x^f = sum(c_i x^i) with c listed low-to-high.
fn reduction_row(p: u64, f: u32) -> Option<Vec<u64>> {
    // x^f = row[0] + row[1] x + ...
    Some(match (p, f) {
        (2, 2) => vec![1, 1],          // x^2 = x + 1
        (2, 3) => vec![1, 1, 0],       // x^3 = x + 1
        (2, 4) => vec![1, 1, 0, 0],    // x^4 = x + 1
        (2, 5) => vec![1, 0, 1, 0, 0], // x^5 = x^2 + 1
        (3, 2) => vec![1, 2],          // x^2 = 2x + 1  (poly x^2 + x + 2)
        (3, 3) => vec![2, 1, 0],       // x^3 = x + 2   (poly x^3 + 2x + 1)
        (5, 2) => vec![3, 4],          // x^2 = 4x + 3  (poly x^2 + x + 2)
        _ => return None,
    })
}

fn primitive_root_mod_p(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    for g in 2..p {
        let mut x = g;
        let mut count = 1u64;
        while x != 1 {
            x = x * g % p;
            count += 1;
        }
        if count == p - 1 {
            return g;
        }
    }
    unreachable!("no primitive root found mod {p}")
}

impl GF {
    pub fn new(p: u64, f: u32) -> Result<GF> {
        let q = p.pow(f);
        let (gen_vec, red) = if f == 1 {
            (vec![primitive_root_mod_p(p)], Vec::new())
        } else {
            let red = reduction_row(p, f).ok_or_else(|| {
                Error::InvalidParams(format!("no reduction polynomial stored for GF({p}^{f})"))
            })?;
            // Generator is the class of x: coordinates (0, 1, 0, ...).
            let mut g = vec![0u64; f as usize];
            g[1] = 1;
            (g, red)
        };

        // Polynomial multiply-by-x with reduction, in coordinate form.
        let mul_by = |a: &[u64], b: &[u64], red: &[u64], p: u64, f: usize| -> Vec<u64> {
            let mut wide = vec![0u64; 2 * f];
            for (i, &ai) in a.iter().enumerate() {
                for (j, &bj) in b.iter().enumerate() {
                    wide[i + j] = (wide[i + j] + ai * bj) % p;
                }
            }
            for k in (f..2 * f).rev() {
                let c = wide[k];
                if c != 0 {
                    wide[k] = 0;
                    for (i, &ri) in red.iter().enumerate() {
                        wide[k - f + i] = (wide[k - f + i] + c * ri) % p;
                    }
                }
            }
            wide.truncate(f);
            wide
        };
        let coords_to_index = |c: &[u64]| -> u64 {
            c.iter().rev().fold(0u64, |acc, &ci| acc * p + ci)
        };

        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![usize::MAX; q as usize];
        if f == 1 {
            let g = gen_vec[0];
            let mut x = 1u64;
            for i in 0..(q - 1) as usize {
                exp.push(x);
                log[x as usize] = i;
                x = x * g % p;
            }
        } else {
            let fs = f as usize;
            let mut x = vec![0u64; fs];
            x[0] = 1; // the element 1
            for i in 0..(q - 1) as usize {
                let idx = coords_to_index(&x);
                exp.push(idx);
                log[idx as usize] = i;
                x = mul_by(&x, &gen_vec, &red, p, fs);
            }
        }
        // Primitivity check: all q-1 powers distinct.
        if exp.len() != (q - 1) as usize || log[1..].iter().any(|&l| l == usize::MAX) {
            return Err(Error::InvalidParams(format!(
                "stored polynomial for GF({p}^{f}) is not primitive"
            )));
        }

        // Addition table in index form.
        let fs = f as usize;
        let index_to_coords = |mut idx: u64| -> Vec<u64> {
            let mut c = vec![0u64; fs.max(1)];
            for ci in c.iter_mut() {
                *ci = idx % p;
                idx /= p;
            }
            c
        };
        let mut add_table = vec![0u64; (q * q) as usize];
        for a in 0..q {
            let ca = index_to_coords(a);
            for b in 0..q {
                let cb = index_to_coords(b);
                let sum: Vec<u64> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % p).collect();
                add_table[(a * q + b) as usize] = coords_to_index(&sum);
            }
        }
        Ok(GF {
            p,
            f,
            q,
            exp,
            log,
            add_table,
        })
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.add_table[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u64) -> u64 {
        // -a is the additive inverse; scan is fine at these sizes.
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1) as usize;
        self.exp[e]
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        let e = self.log[a as usize];
        if e == 0 {
            return 1;
        }
        self.exp[(self.q - 1) as usize - e]
    }

    pub fn div(&self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }

    /// The primitive element used to build the tables.
    pub fn generator(&self) -> u64 {
        self.exp[1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field_axioms(p: u64, f: u32) {
        let k = GF::new(p, f).unwrap();
        let q = k.q;
        // Multiplicative generator has order q-1 by construction; spot-check
        // associativity and distributivity on all triples for small q.
        if q <= 9 {
            for a in 0..q {
                for b in 0..q {
                    for c in 0..q {
                        assert_eq!(k.mul(a, k.mul(b, c)), k.mul(k.mul(a, b), c));
                        assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                    }
                }
            }
        }
        for a in 1..q {
            assert_eq!(k.mul(a, k.inv(a)), 1);
            assert_eq!(k.add(a, k.neg(a)), 0);
        }
    }

    #[test]
    fn fields_up_to_32() {
        for (p, f) in [
            (2, 1),
            (3, 1),
            (5, 1),
            (7, 1),
            (11, 1),
            (31, 1),
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 2),
            (3, 3),
            (5, 2),
        ] {
            check_field_axioms(p, f);
        }
    }
}
