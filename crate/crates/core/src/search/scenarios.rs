//! Named constructions for the claims registry: candidate vertex stabilizers
//! and Hall-subgroup class representatives, built deterministically.

use num_bigint::BigUint;

use crate::atlas;
use crate::perm::Permutation;
use crate::stabchain::{coset_action, PermGroup};
use crate::{Error, Result};

/// The Frobenius group of order 21 acting on 7 points:
/// <(1..7), conjugation-by-squaring>.
pub fn f21_deg7() -> Result<PermGroup> {
    let c = Permutation::parse_cycles("(1,2,3,4,5,6,7)", 7)?;
    let s = Permutation::parse_cycles("(2,3,5)(4,7,6)", 7)?;
    PermGroup::new(7, vec![c, s])
}

/// The cyclic group of order 7 on 7 points.
pub fn z7_deg7() -> Result<PermGroup> {
    let c = Permutation::parse_cycles("(1,2,3,4,5,6,7)", 7)?;
    PermGroup::new(7, vec![c])
}

/// The Frobenius group of order 21 in its right regular representation on
/// 21 points: elements are pairs (a, b) in Z7 x Z3 with
/// (a, b)(c, d) = (a + 2^b c, b + d), indexed as a + 7b.
pub fn f21_regular_deg21() -> Result<PermGroup> {
    let mul = |(a, b): (u64, u64), (c, d): (u64, u64)| -> (u64, u64) {
        let two_b = [1u64, 2, 4][b as usize];
        ((a + two_b * c) % 7, (b + d) % 3)
    };
    let idx = |(a, b): (u64, u64)| -> u32 { (a + 7 * b) as u32 };
    let perm_of = |g: (u64, u64)| -> Result<Permutation> {
        let mut images = vec![0u32; 21];
        for a in 0..7 {
            for b in 0..3 {
                images[idx((a, b)) as usize] = idx(mul((a, b), g));
            }
        }
        Permutation::from_images(images)
    };
    let g1 = perm_of((1, 0))?;
    let g2 = perm_of((0, 1))?;
    PermGroup::new(21, vec![g1, g2])
}

/// F21 x Z3 acting transitively on 21 points: built on 10 points as a direct
/// product, then passed through the coset action on a diagonal Z3.
pub fn f21xz3_deg21() -> Result<PermGroup> {
    let c = Permutation::parse_cycles("(1,2,3,4,5,6,7)", 10)?;
    let s = Permutation::parse_cycles("(2,3,5)(4,7,6)", 10)?;
    let w = Permutation::parse_cycles("(8,9,10)", 10)?;
    let g10 = PermGroup::new(10, vec![c.clone(), s.clone(), w.clone()])?;
    debug_assert_eq!(g10.order(), BigUint::from(63u32));
    // Diagonal Z3 = <s*w>, core-free since s's conjugates vary.
    let diag = PermGroup::new(10, vec![&s * &w])?;
    let ca = coset_action(&g10, &diag, 32)?;
    if ca.action.degree() != 21 || !ca.faithful {
        return Err(Error::InvalidParams(
            "F21 x Z3 coset action did not come out faithful of degree 21".into(),
        ));
    }
    PermGroup::new(21, ca.action.generators().to_vec())
}

/// PSL3(2) in the degree-24 action, together with representatives of its two
/// S4 conjugacy classes (point stabilizers and line stabilizers of the
/// degree-7 plane), transported through the same coset action.
pub struct Psl32Deg24Scenario {
    pub h: PermGroup,
    /// Point-stabilizer class.
    pub s4_points: PermGroup,
    /// Line-stabilizer class.
    pub s4_lines: PermGroup,
}

pub fn psl3_2_deg24_with_s4_classes() -> Result<Psl32Deg24Scenario> {
    let (h, ca, g7) = atlas::psl3_2_deg24_action()?;
    let elems7 = g7.elements();
    // Degree-7 points are indexed by the projective-point list of the
    // construction; recover each point's underlying vector in F_2^3 from the
    // order the atlas builder uses: (1,a,b), then (0,1,a), then (0,0,1).
    let vectors: [u32; 7] = [0b100, 0b101, 0b110, 0b111, 0b010, 0b011, 0b001];
    let vec_to_idx = |v: u32| -> u32 {
        vectors
            .iter()
            .position(|&w| w == v)
            .expect("nonzero vector") as u32
    };
    // A line of the plane through the first two basis vectors.
    let line = {
        let a = 0b100;
        let b = 0b010;
        [vec_to_idx(a), vec_to_idx(b), vec_to_idx(a ^ b)]
    };
    let point_stab: Vec<Permutation> = elems7
        .iter()
        .filter(|e| e.apply(0) == 0)
        .cloned()
        .collect();
    let line_stab: Vec<Permutation> = elems7
        .iter()
        .filter(|e| {
            let mut img: Vec<u32> = line.iter().map(|&p| e.apply(p)).collect();
            img.sort_unstable();
            let mut want = line.to_vec();
            want.sort_unstable();
            img == want
        })
        .cloned()
        .collect();
    if point_stab.len() != 24 || line_stab.len() != 24 {
        return Err(Error::InternalContradiction(format!(
            "S4 classes of PSL3(2) have orders {} and {}",
            point_stab.len(),
            line_stab.len()
        )));
    }
    let transport = |gens: Vec<Permutation>| -> Result<PermGroup> {
        let imgs: Vec<Permutation> = gens.iter().map(|g| ca.map_element(g)).collect();
        PermGroup::new(24, imgs)
    };
    Ok(Psl32Deg24Scenario {
        s4_points: transport(point_stab)?,
        s4_lines: transport(line_stab)?,
        h,
    })
}

/// The cyclic group generated by a 23-element of M23 (a vertex-stabilizer
/// candidate for the regular row), and the Frobenius normalizer of order 253
/// (the solvable candidate that the odd normalizer excludes).
pub struct M23Scenario {
    pub g: PermGroup,
    pub z23: PermGroup,
    pub f253: PermGroup,
}

pub fn m23_stabilizer_candidates() -> Result<M23Scenario> {
    let g = atlas::builtin("M23")?;
    let z = g
        .generators()
        .iter()
        .find(|e| e.order() == 23)
        .cloned()
        .ok_or_else(|| {
            Error::InternalContradiction("M23 record leads with a 23-cycle".into())
        })?;
    let z23 = PermGroup::new(23, vec![z])?;
    let f253 = crate::backtrack::normalizer(&g, &z23, crate::backtrack::Budget::default())?.group;
    if f253.order() != BigUint::from(253u32) {
        return Err(Error::InternalContradiction(format!(
            "normalizer of a 23-element in M23 has order {}, expected 253",
            f253.order()
        )));
    }
    Ok(M23Scenario { g, z23, f253 })
}

/// PSL2(11) in a degree-11 action (on the cosets of an A5 subgroup), plus
/// an 11-cycle subgroup.
pub struct Psl211Scenario {
    /// PSL2(11) acting transitively on 11 points.
    pub g: PermGroup,
    /// H = <an 11-element>, the candidate vertex stabilizer.
    pub h: PermGroup,
}

pub fn psl2_11_deg11() -> Result<Psl211Scenario> {
    let g12 = atlas::psl2(11)?;
    // Find an A5 subgroup deterministically: an involution and an order-3
    // element whose product has order 5 generate one when the closure has
    // order 60.
    let elems = g12.elements();
    let mut involutions: Vec<&Permutation> = elems.iter().filter(|e| e.order() == 2).collect();
    let mut threes: Vec<&Permutation> = elems.iter().filter(|e| e.order() == 3).collect();
    involutions.sort();
    threes.sort();
    let mut a5 = None;
    'outer: for a in &involutions {
        for b in &threes {
            if (*a * *b).order() != 5 {
                continue;
            }
            let cand = PermGroup::new(12, vec![(*a).clone(), (*b).clone()])?;
            if cand.order() == BigUint::from(60u32) {
                a5 = Some(cand);
                break 'outer;
            }
        }
    }
    let a5 = a5.ok_or_else(|| {
        Error::InternalContradiction("PSL2(11) has A5 subgroups; none found".into())
    })?;
    let ca = coset_action(&g12, &a5, 16)?;
    if ca.action.degree() != 11 || !ca.faithful {
        return Err(Error::InternalContradiction(
            "coset action on A5 must be faithful of degree 11".into(),
        ));
    }
    let g11 = PermGroup::new(11, ca.action.generators().to_vec())?.with_label("PSL2(11)@11");
    let eleven = g11
        .elements()
        .into_iter()
        .filter(|e| e.order() == 11)
        .min()
        .expect("PSL2(11) has 11-elements");
    let h = PermGroup::new(11, vec![eleven])?;
    Ok(Psl211Scenario { g: g11, h })
}
