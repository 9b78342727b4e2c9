//! Reference tables consulted by the search pipeline, held as data so they
//! can be audited row by row.
//!
//! * The socles of transitive groups of prime degree r (what a vertex
//!   stabilizer can induce on a neighborhood of prime size).
//! * The stabilizer tower of symmetric cubic graphs: vertex stabilizer,
//!   edge-kernel layers, and arc stabilizer orders.

use serde::Serialize;

use crate::numth::is_prime_u64;

/// Socle families of transitive permutation groups of prime degree r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PrimeDegreeSocle {
    /// Z_r, any prime r (the affine case).
    Cyclic,
    /// A_r for r >= 5.
    Alternating,
    /// PSL_d(q) of degree r = (q^d - 1)/(q - 1).
    ProjectiveLinear { d: u32, q: u64 },
    /// PSL_2(11) in its exceptional degree-11 action.
    Psl2_11,
    /// M_11 on 11 points.
    M11,
    /// M_23 on 23 points.
    M23,
}

/// All socle rows admissible at prime degree r; projective-linear rows are
/// searched over prime powers q <= q_bound.
pub fn prime_degree_socles(r: u64, q_bound: u64) -> Vec<PrimeDegreeSocle> {
    assert!(is_prime_u64(r), "degree must be prime");
    let mut rows = vec![PrimeDegreeSocle::Cyclic];
    if r >= 5 {
        rows.push(PrimeDegreeSocle::Alternating);
    }
    for q in crate::numth::prime_powers_up_to(q_bound) {
        let qv = q.value_u64();
        let mut power = qv;
        let mut sum = 1 + qv;
        let mut d = 2;
        while sum <= r {
            if sum == r {
                rows.push(PrimeDegreeSocle::ProjectiveLinear { d, q: qv });
                break;
            }
            power *= qv;
            sum += power;
            d += 1;
        }
    }
    if r == 11 {
        rows.push(PrimeDegreeSocle::Psl2_11);
        rows.push(PrimeDegreeSocle::M11);
    }
    if r == 23 {
        rows.push(PrimeDegreeSocle::M23);
    }
    rows
}

/// One row of the cubic-stabilizer table: the vertex stabilizer with its
/// edge-kernel layers and the arc stabilizer, by order.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CubicStabilizerRow {
    pub vertex_stabilizer: &'static str,
    pub order: u64,
    /// Kernel of the vertex stabilizer on its neighborhood.
    pub vertex_kernel_order: u64,
    /// Intersection of the two vertex kernels along an edge.
    pub edge_kernel_order: u64,
    pub arc_stabilizer: &'static str,
    pub arc_stabilizer_order: u64,
}

/// The five possible vertex stabilizers of a symmetric cubic graph.
pub const CUBIC_STABILIZERS: [CubicStabilizerRow; 5] = [
    CubicStabilizerRow {
        vertex_stabilizer: "Z3",
        order: 3,
        vertex_kernel_order: 1,
        edge_kernel_order: 1,
        arc_stabilizer: "1",
        arc_stabilizer_order: 1,
    },
    CubicStabilizerRow {
        vertex_stabilizer: "S3",
        order: 6,
        vertex_kernel_order: 1,
        edge_kernel_order: 1,
        arc_stabilizer: "Z2",
        arc_stabilizer_order: 2,
    },
    CubicStabilizerRow {
        vertex_stabilizer: "D12",
        order: 12,
        vertex_kernel_order: 2,
        edge_kernel_order: 1,
        arc_stabilizer: "Z2 x Z2",
        arc_stabilizer_order: 4,
    },
    CubicStabilizerRow {
        vertex_stabilizer: "S4",
        order: 24,
        vertex_kernel_order: 4,
        edge_kernel_order: 2,
        arc_stabilizer: "D8",
        arc_stabilizer_order: 8,
    },
    CubicStabilizerRow {
        vertex_stabilizer: "S4 x Z2",
        order: 48,
        vertex_kernel_order: 8,
        edge_kernel_order: 4,
        arc_stabilizer: "D8 x Z2",
        arc_stabilizer_order: 16,
    },
];
