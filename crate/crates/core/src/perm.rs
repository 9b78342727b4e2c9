//! Exact arithmetic on permutations of `{0..n-1}`.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * **Right action.** Points are written exponentially, `p^g`, and products
//!   compose left-to-right: `p^(a*b) = (p^a)^b`, i.e. `a` acts first.
//! * **0-based points internally, 1-based in text.** Cycle notation read and
//!   written by this module uses 1-based points; everything else in the crate
//!   works with 0-based points.
//! * Degree is explicit, never inferred from cycles, so the identity on `n`
//!   points is representable for every `n`.
//!
//! Permutations are immutable after construction and safe to share across
//! threads.

use std::fmt;

use crate::{Error, Result};

/// Parity of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity is a homomorphism to Z/2; this is the group operation.
    pub fn xor(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A bijection on `{0..n-1}`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    /// The identity permutation on `degree` points.
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image array, validating bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img as usize >= n {
                return Err(Error::PointOutOfRange {
                    point: img as usize,
                    degree: n,
                });
            }
            if seen[img as usize] {
                return Err(Error::MalformedCycle(format!(
                    "image {} repeated; not a bijection",
                    img + 1
                )));
            }
            seen[img as usize] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses a product of cycles over 1-based points, e.g. `(1,2,3)(4,5)`.
    ///
    /// The empty string and `()` denote the identity. Points not mentioned are
    /// fixed. A point repeated within or across cycles is rejected, as is any
    /// point exceeding `degree`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() || cleaned == "()" {
            return Ok(Permutation {
                images: images.into_boxed_slice(),
            });
        }
        let bytes = cleaned.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i] != b'(' {
                return Err(Error::MalformedCycle(format!(
                    "expected '(' at byte {i} of {cleaned:?}"
                )));
            }
            let close = cleaned[i..]
                .find(')')
                .map(|j| i + j)
                .ok_or_else(|| Error::MalformedCycle("unclosed cycle".into()))?;
            let body = &cleaned[i + 1..close];
            let mut cycle: Vec<u32> = Vec::new();
            if !body.is_empty() {
                for tok in body.split(',') {
                    let p: usize = tok.parse().map_err(|_| {
                        Error::MalformedCycle(format!("bad point {tok:?} in {cleaned:?}"))
                    })?;
                    if p == 0 {
                        return Err(Error::MalformedCycle(
                            "cycle points are 1-based; 0 is not a point".into(),
                        ));
                    }
                    if p > degree {
                        return Err(Error::PointOutOfRange { point: p, degree });
                    }
                    if seen[p - 1] {
                        return Err(Error::MalformedCycle(format!("point {p} repeated")));
                    }
                    seen[p - 1] = true;
                    cycle.push((p - 1) as u32);
                }
            }
            if cycle.len() == 1 {
                return Err(Error::MalformedCycle(format!(
                    "singleton cycle ({}) is not allowed",
                    cycle[0] + 1
                )));
            }
            for w in 0..cycle.len() {
                images[cycle[w] as usize] = cycle[(w + 1) % cycle.len()];
            }
            i = close + 1;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The image `p^g` of a point under this permutation.
    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// Raw image array.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Checked composition: `a.compose(b)` acts as `a` first, then `b`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|&i| other.images[i as usize])
            .collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Conjugate `self^g = g^-1 * self * g`, so that `(p^g)^(self^g) = (p^self)^g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for p in 0..self.degree() {
            images[g.images[p] as usize] = g.images[self.images[p] as usize];
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Commutator `[self, other] = self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        let a_inv = self.inverse();
        let b_inv = other.inverse();
        &(&a_inv * &b_inv) * &(self * other)
    }

    /// `self^k` for any integer exponent.
    pub fn pow(&self, k: i64) -> Permutation {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Order of the permutation: the lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        let mut ord: u64 = 1;
        for cycle in self.cycles() {
            ord = num_integer::lcm(ord, cycle.len() as u64);
        }
        ord
    }

    /// True when the order is a power of two (1 counts).
    pub fn is_two_element(&self) -> bool {
        self.order().is_power_of_two()
    }

    /// Nontrivial cycles, each rotated to start at its smallest point, sorted
    /// by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] || self.images[start as usize] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut p = self.images[start as usize];
            while p != start {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.images[p as usize];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Multiset of cycle lengths including fixed points, sorted ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat(1).take(self.degree() - moved));
        lens.sort_unstable();
        lens
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Points moved by the permutation, ascending.
    pub fn support(&self) -> Vec<u32> {
        (0..self.degree() as u32)
            .filter(|&p| self.images[p as usize] != p)
            .collect()
    }

    /// Length of the cycle through `point` (1 for fixed points).
    pub fn cycle_length_at(&self, point: u32) -> usize {
        let mut len = 1;
        let mut p = self.images[point as usize];
        while p != point {
            len += 1;
            p = self.images[p as usize];
        }
        len
    }
}

/// Unchecked composition operator for internal use; panics on degree mismatch.
impl std::ops::Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, degree).unwrap()
    }

    #[test]
    fn parse_basic() {
        let g = p("(1,2,3)", 4);
        assert_eq!(g.images(), &[1, 2, 0, 3]);
        assert!(p("()", 5).is_identity());
        assert_eq!(p("()", 5).degree(), 5);
        let d = p("(1,2)(3,4)", 4);
        assert_eq!(d.order(), 2);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse_cycles("(1,2)(2,3)", 4),
            Err(Error::MalformedCycle(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1,1)", 4),
            Err(Error::MalformedCycle(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1,5)", 4),
            Err(Error::PointOutOfRange { point: 5, degree: 4 })
        ));
    }

    #[test]
    fn compose_left_to_right() {
        // Involution squared is the identity.
        let t = p("(1,2)", 3);
        assert!((&t * &t).is_identity());

        // Hand oracle under "apply the left factor first":
        // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2, so (1,2,3)*(1,2) = (2,3).
        let a = p("(1,2,3)", 3);
        let b = p("(1,2)", 3);
        assert_eq!(&a * &b, p("(2,3)", 3));

        let id = Permutation::identity(3);
        assert_eq!(&a * &id, a);
    }

    #[test]
    fn compose_checked_degree() {
        let a = p("(1,2)", 3);
        let b = p("(1,2)", 4);
        assert!(matches!(a.compose(&b), Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn inverse_cases() {
        assert_eq!(p("(1,2,3)", 3).inverse(), p("(1,3,2)", 3));
        assert!(Permutation::identity(5).inverse().is_identity());
        let d = p("(1,2)(3,4)", 4);
        assert_eq!(d.inverse(), d);
        let g = p("(1,4,2,5)(3,6)", 6);
        assert!((&g * &g.inverse()).is_identity());
    }

    #[test]
    fn order_cases() {
        assert_eq!(p("(1,2,3)(4,5)", 5).order(), 6);
        assert_eq!(Permutation::identity(3).order(), 1);
        assert_eq!(p("(1,2,3,4,5,6,7,8,9,10,11)", 11).order(), 11);
    }

    #[test]
    fn parity_cases() {
        assert_eq!(p("(1,2)", 2).parity(), Parity::Odd);
        assert_eq!(p("(1,2,3)", 3).parity(), Parity::Even);
        assert_eq!(p("(1,2)(3,4)", 4).parity(), Parity::Even);
    }

    #[test]
    fn conjugation_convention() {
        // (p^g)^(a^g) = (p^a)^g for all points p.
        let a = p("(1,2,3)", 5);
        let g = p("(2,5,4)", 5);
        let c = a.conjugate_by(&g);
        for point in 0..5 {
            assert_eq!(c.apply(g.apply(point)), g.apply(a.apply(point)));
        }
    }

    #[test]
    fn display_round_trip() {
        let g = p("(3,7)(1,4,2)", 8);
        let text = g.to_string();
        // Cycles come out sorted by smallest moved point.
        assert_eq!(text, "(1,4,2)(3,7)");
        assert_eq!(Permutation::parse_cycles(&text, 8).unwrap(), g);
    }

    #[test]
    fn two_element_test() {
        assert!(p("(1,2)(3,4)", 4).is_two_element());
        assert!(p("(1,2,3,4)", 4).is_two_element());
        assert!(!p("(1,2,3)", 4).is_two_element());
        assert!(Permutation::identity(4).is_two_element());
    }
}
