//! Backtrack searches inside a stabilizer-chain group: normalizer,
//! centralizer, intersection.
//!
//! The engine runs a depth-first search over base images of the ambient
//! chain. Three prunings keep the tree small:
//!
//! * **Conjugation propagation.** For a normalizer target K the partial
//!   point map must extend to some `g` with `K^g = K`; every pinned pair
//!   `(a, a^g)` constrains the induced map on K's elements. When K is small
//!   enough to enumerate, each generator's image under the induced
//!   automorphism is narrowed against the element table and, once unique,
//!   propagates new point images. This is what makes regular and semiregular
//!   K (where plain orbit refinement is blind) collapse to a few hundred
//!   nodes. Centralizers are the degenerate case with the element map pinned
//!   to the identity up front.
//! * **Invariant refinement.** Point classes (cycle-length data over K) and
//!   the K-orbit partition must be respected by the image.
//! * **Known-subgroup pruning.** The group R found so far (seeded with K and
//!   its centralizer) lets the search demand base images minimal in their
//!   orbit under the stabilizer in R of the images already chosen.
//!
//! Every search is exact: the result is returned only after the tree proves
//! no element outside the found group satisfies the predicate. Exceeding the
//! node budget is an error carrying the partial generators, never a silent
//! wrong answer.


use num_bigint::BigUint;

use crate::perm::Permutation;
use crate::stabchain::{PermGroup, StabChain};
use crate::{Error, Result};

/// Node budget for a search.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub max_nodes: u64,
    /// Depth up to which known-subgroup orbit pruning computes exact
    /// stabilizers (deeper levels rely on propagation).
    pub stab_depth: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            stab_depth: 10,
        }
    }
}

/// Search statistics for reports.
#[derive(Debug, Clone, Copy, Default, serde::Serialize)]
pub struct BacktrackStats {
    pub nodes: u64,
    pub restarts: u32,
}

/// Result of a subgroup search.
#[derive(Debug)]
pub struct BacktrackOutcome {
    pub group: PermGroup,
    pub stats: BacktrackStats,
}

/// Element cap for enumerating the target's element table.
const ELEM_TABLE_CAP: u64 = 20_000;

// ---------------------------------------------------------------------------
// Partial point map with worklist propagation of conjugation constraints.

#[derive(Clone)]
struct Node {
    fw: Vec<i32>,
    bw: Vec<i32>,
    /// For each flex probe: index into the element table once pinned.
    sigma: Vec<i32>,
    /// K-orbit id -> image orbit id (and the reverse), for orbit refinement.
    orbit_fw: Vec<i32>,
    orbit_bw: Vec<i32>,
}

impl Node {
    fn image(&self, p: u32) -> Option<u32> {
        let v = self.fw[p as usize];
        (v >= 0).then_some(v as u32)
    }
}

/// Conjugation-constraint pruner shared by normalizer and centralizer.
struct ConjugationPruner<'a> {
    degree: usize,
    /// Pairs (k, m) with `g^-1 k g = m` required; centralizer constraints.
    fixed: Vec<(Permutation, Permutation)>,
    /// Generators of K whose images are determined during the search.
    flex: Vec<Permutation>,
    flex_inv: Vec<Permutation>,
    /// Element table of K (without identity) when small enough.
    elems: Vec<Permutation>,
    elem_inv: Vec<Permutation>,
    /// Invariant class of each point (must match under the map).
    point_class: Vec<u64>,
    /// K-orbit id and size per point.
    orbit_of: Vec<u32>,
    orbit_sizes: Vec<u32>,
    target: &'a PermGroup,
    /// Leaf predicate: conjugation stabilizes the target (or commutes).
    check_membership: bool,
}

impl<'a> ConjugationPruner<'a> {
    fn normalizer(k: &'a PermGroup) -> ConjugationPruner<'a> {
        let degree = k.degree();
        let elems: Vec<Permutation> = if k.order() <= BigUint::from(ELEM_TABLE_CAP) {
            k.elements().into_iter().filter(|e| !e.is_identity()).collect()
        } else {
            Vec::new()
        };
        // Point invariant: sorted multiset of cycle lengths over the element
        // table (or over nothing when the table is too big -- then only the
        // orbit partition refines).
        let point_class: Vec<u64> = (0..degree as u32)
            .map(|p| {
                let mut lens: Vec<usize> = elems.iter().map(|e| e.cycle_length_at(p)).collect();
                lens.sort_unstable();
                hash_units(&lens)
            })
            .collect();
        let (orbit_of, orbit_sizes) = orbit_ids(k);
        let flex: Vec<Permutation> = k.generators().to_vec();
        let flex_inv = flex.iter().map(Permutation::inverse).collect();
        let elem_inv = elems.iter().map(Permutation::inverse).collect();
        ConjugationPruner {
            degree,
            fixed: Vec::new(),
            flex,
            flex_inv,
            elems,
            elem_inv,
            point_class,
            orbit_of,
            orbit_sizes,
            target: k,
            check_membership: true,
        }
    }

    fn centralizer(targets: Vec<Permutation>, backing: &'a PermGroup) -> ConjugationPruner<'a> {
        let degree = backing.degree();
        let point_class: Vec<u64> = (0..degree as u32)
            .map(|p| {
                let lens: Vec<usize> =
                    targets.iter().map(|t| t.cycle_length_at(p)).collect();
                hash_units(&lens)
            })
            .collect();
        let (orbit_of, orbit_sizes) = orbit_ids(backing);
        let fixed: Vec<(Permutation, Permutation)> =
            targets.iter().map(|t| (t.clone(), t.clone())).collect();
        ConjugationPruner {
            degree,
            fixed,
            flex: Vec::new(),
            flex_inv: Vec::new(),
            elems: Vec::new(),
            elem_inv: Vec::new(),
            point_class,
            orbit_of,
            orbit_sizes,
            target: backing,
            check_membership: false,
        }
    }

    fn root(&self) -> Node {
        let n_orbits = self.orbit_sizes.len();
        Node {
            fw: vec![-1; self.degree],
            bw: vec![-1; self.degree],
            sigma: vec![-1; self.flex.len()],
            orbit_fw: vec![-1; n_orbits],
            orbit_bw: vec![-1; n_orbits],
        }
    }

    /// Adds `point -> image` and propagates; None on contradiction.
    fn assign(&self, node: &Node, point: u32, image: u32) -> Option<Node> {
        let mut node = node.clone();
        let mut work = vec![(point, image)];
        while let Some((a, b)) = work.pop() {
            match self.put(&mut node, a, b) {
                PutResult::Conflict => return None,
                PutResult::Known => continue,
                PutResult::New => {}
            }
            // Fixed constraints: g(a^k) = g(a)^m both ways.
            for (k, m) in &self.fixed {
                work.push((k.apply(a), m.apply(b)));
                // inverse direction comes for free by symmetry of cycles
                let ka = k.inverse().apply(a);
                let mb = m.inverse().apply(b);
                work.push((ka, mb));
            }
            // Pinned flex probes propagate the same way.
            for (i, k) in self.flex.iter().enumerate() {
                let s = node.sigma[i];
                if s >= 0 {
                    let m = &self.elems[s as usize];
                    work.push((k.apply(a), m.apply(b)));
                    work.push((self.flex_inv[i].apply(a), self.elem_inv[s as usize].apply(b)));
                }
            }
            // Unpinned probes: narrow candidates against the element table.
            if !self.elems.is_empty() {
                for i in 0..self.flex.len() {
                    if node.sigma[i] >= 0 {
                        continue;
                    }
                    if let Some(pin) = self.narrow(&node, i) {
                        match pin {
                            Narrow::Empty => return None,
                            Narrow::Unique(mi) => {
                                node.sigma[i] = mi as i32;
                                let k = &self.flex[i];
                                let m = &self.elems[mi];
                                for p in 0..self.degree as u32 {
                                    if let Some(q) = node.image(p) {
                                        work.push((k.apply(p), m.apply(q)));
                                    }
                                }
                            }
                            Narrow::Many => {}
                        }
                    }
                }
            }
        }
        Some(node)
    }

    /// Candidate narrowing for flex probe `i` under the current partial map.
    fn narrow(&self, node: &Node, i: usize) -> Option<Narrow> {
        let k = &self.flex[i];
        // Constraint pairs: points a with both g(a) and g(a^k) known.
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for a in 0..self.degree as u32 {
            if let (Some(b), Some(b2)) = (node.image(a), node.image(k.apply(a))) {
                pairs.push((b, b2));
            }
        }
        if pairs.is_empty() {
            return None;
        }
        let mut found: Option<usize> = None;
        let mut count = 0;
        'cand: for (mi, m) in self.elems.iter().enumerate() {
            for &(b, b2) in &pairs {
                if m.apply(b) != b2 {
                    continue 'cand;
                }
            }
            count += 1;
            if count > 1 {
                return Some(Narrow::Many);
            }
            found = Some(mi);
        }
        Some(match found {
            None => Narrow::Empty,
            Some(mi) => Narrow::Unique(mi),
        })
    }

    fn put(&self, node: &mut Node, a: u32, b: u32) -> PutResult {
        let (ai, bi) = (a as usize, b as usize);
        if node.fw[ai] >= 0 {
            return if node.fw[ai] == b as i32 {
                PutResult::Known
            } else {
                PutResult::Conflict
            };
        }
        if node.bw[bi] >= 0 {
            return PutResult::Conflict;
        }
        if self.point_class[ai] != self.point_class[bi] {
            return PutResult::Conflict;
        }
        let (oa, ob) = (self.orbit_of[ai] as usize, self.orbit_of[bi] as usize);
        if self.orbit_sizes[oa] != self.orbit_sizes[ob] {
            return PutResult::Conflict;
        }
        if node.orbit_fw[oa] >= 0 && node.orbit_fw[oa] != ob as i32 {
            return PutResult::Conflict;
        }
        if node.orbit_bw[ob] >= 0 && node.orbit_bw[ob] != oa as i32 {
            return PutResult::Conflict;
        }
        node.orbit_fw[oa] = ob as i32;
        node.orbit_bw[ob] = oa as i32;
        node.fw[ai] = b as i32;
        node.bw[bi] = a as i32;
        PutResult::New
    }

    fn full_check(&self, g: &Permutation) -> bool {
        for (k, m) in &self.fixed {
            if k.conjugate_by(g) != *m {
                return false;
            }
        }
        if self.check_membership {
            for k in &self.flex {
                if !self.target.chain().is_member(&k.conjugate_by(g)) {
                    return false;
                }
            }
        }
        true
    }

    /// Base ordering heuristic: smallest K-orbits first, then point order.
    fn preferred_base(&self) -> Vec<u32> {
        let mut pts: Vec<u32> = (0..self.degree as u32).collect();
        pts.sort_by_key(|&p| (self.orbit_sizes[self.orbit_of[p as usize] as usize], p));
        pts
    }
}

enum PutResult {
    New,
    Known,
    Conflict,
}

enum Narrow {
    Empty,
    Unique(usize),
    Many,
}

fn hash_units(lens: &[usize]) -> u64 {
    use std::hash::{Hash, Hasher};
    let mut h = std::collections::hash_map::DefaultHasher::new();
    lens.hash(&mut h);
    h.finish()
}

fn orbit_ids(g: &PermGroup) -> (Vec<u32>, Vec<u32>) {
    let orbits = g.orbits();
    let mut of = vec![0u32; g.degree()];
    let mut sizes = Vec::new();
    for (i, orbit) in orbits.iter().enumerate() {
        for &p in orbit {
            of[p as usize] = i as u32;
        }
        sizes.push(orbit.len() as u32);
    }
    (of, sizes)
}

// ---------------------------------------------------------------------------
// The generic subgroup search.

struct Search<'a, 'b> {
    ambient: &'a StabChain,
    pruner: &'a ConjugationPruner<'b>,
    budget: Budget,
    nodes: u64,
}

impl Search<'_, '_> {
    /// Finds one element satisfying the predicate outside `known`, or None.
    fn find_outside(&mut self, known: &PermGroup) -> Result<Option<Permutation>> {
        let degree = self.ambient.degree();
        let root = self.pruner.root();
        let u = Permutation::identity(degree);
        self.descend(0, &u, &root, known, Some(known.clone()))
    }

    fn descend(
        &mut self,
        level: usize,
        prefix: &Permutation,
        node: &Node,
        known: &PermGroup,
        known_stab: Option<PermGroup>,
    ) -> Result<Option<Permutation>> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::BudgetExceeded {
                nodes: self.nodes,
                partial: known.generators().to_vec(),
            });
        }
        let levels = self.ambient.levels();
        if level == levels.len() {
            let g = prefix.clone();
            if self.pruner.full_check(&g) && !known.chain().is_member(&g) {
                return Ok(Some(g));
            }
            return Ok(None);
        }
        let base = levels[level].base;
        let forced = node.image(base);
        // Minimal-in-orbit pruning data from the stabilizer of chosen images.
        let orbit_min: Option<Vec<u32>> = known_stab.as_ref().map(min_of_orbit);
        let prefix_inv = prefix.inverse();
        let mut candidates: Vec<u32> = levels[level]
            .orbit
            .iter()
            .map(|&gamma| prefix.apply(gamma))
            .collect();
        candidates.sort_unstable();
        for delta in candidates {
            if let Some(f) = forced {
                if f != delta {
                    continue;
                }
            } else if let Some(min) = &orbit_min {
                if min[delta as usize] != delta {
                    continue;
                }
            }
            let Some(next_node) = self.pruner.assign(node, base, delta) else {
                continue;
            };
            let gamma = prefix_inv.apply(delta);
            let t = levels[level]
                .transversal_to(gamma)
                .expect("gamma lies in the fundamental orbit");
            let next_prefix = t * prefix;
            debug_assert_eq!(next_prefix.apply(base), delta);
            let next_stab = match &known_stab {
                Some(ks) if level < self.budget.stab_depth => {
                    let st = ks.point_stabilizer(delta)?;
                    (!st.is_trivial()).then_some(st)
                }
                _ => None,
            };
            if let Some(found) =
                self.descend(level + 1, &next_prefix, &next_node, known, next_stab)?
            {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

fn min_of_orbit(g: &PermGroup) -> Vec<u32> {
    let mut min = vec![0u32; g.degree()];
    for orbit in g.orbits() {
        let m = *orbit.iter().min().unwrap();
        for &p in &orbit {
            min[p as usize] = m;
        }
    }
    min
}

fn run_search(
    ambient: &PermGroup,
    pruner: &ConjugationPruner<'_>,
    seeds: Vec<Permutation>,
    budget: Budget,
) -> Result<BacktrackOutcome> {
    let chain = ambient.chain_with_base(&pruner.preferred_base());
    let mut gens: Vec<Permutation> = seeds.into_iter().filter(|g| !g.is_identity()).collect();
    let mut known = PermGroup::new(ambient.degree(), gens.clone())?;
    let mut stats = BacktrackStats::default();
    loop {
        let mut search = Search {
            ambient: &chain,
            pruner,
            budget,
            nodes: 0,
        };
        let found = search.find_outside(&known);
        stats.nodes += search.nodes;
        match found {
            Ok(Some(g)) => {
                stats.restarts += 1;
                gens.push(g);
                known = PermGroup::new(ambient.degree(), gens.clone())?;
            }
            Ok(None) => break,
            Err(Error::BudgetExceeded { nodes, .. }) => {
                return Err(Error::BudgetExceeded {
                    nodes: stats.nodes.max(nodes),
                    partial: known.generators().to_vec(),
                })
            }
            Err(e) => return Err(e),
        }
    }
    let mut sorted = known.generators().to_vec();
    sorted.sort();
    Ok(BacktrackOutcome {
        group: PermGroup::new(ambient.degree(), sorted)?,
        stats,
    })
}

// ---------------------------------------------------------------------------
// Public operations.

/// Exact normalizer `N_g(k) = {x in g : k^x = k}`, requiring `k <= g`.
pub fn normalizer(g: &PermGroup, k: &PermGroup, budget: Budget) -> Result<BacktrackOutcome> {
    if !g.contains_group(k)? {
        return Err(Error::NotASubgroup(
            "normalizer(g, k) requires k <= g; use normalizer_in_ambient otherwise".into(),
        ));
    }
    normalizer_in_ambient(g, k, budget)
}

/// Resumes a normalizer search from the partial generators carried by a
/// `BudgetExceeded` error; the checkpoint joins the seed group.
pub fn normalizer_resumed(
    g: &PermGroup,
    k: &PermGroup,
    checkpoint: &[Permutation],
    budget: Budget,
) -> Result<BacktrackOutcome> {
    let pruner = ConjugationPruner::normalizer(k);
    run_search(g, &pruner, checkpoint.to_vec(), budget)
}

/// `N_g(k)` without demanding `k <= g` (for an ambient alternating or
/// symmetric group with k anywhere in Sym(degree)).
pub fn normalizer_in_ambient(
    g: &PermGroup,
    k: &PermGroup,
    budget: Budget,
) -> Result<BacktrackOutcome> {
    if g.degree() != k.degree() {
        return Err(Error::DegreeMismatch(g.degree(), k.degree()));
    }
    if k.is_trivial() {
        return Ok(BacktrackOutcome {
            group: g.clone(),
            stats: BacktrackStats::default(),
        });
    }
    // Seeds: k's generators that lie in g, plus the centralizer of k in g.
    let mut seeds: Vec<Permutation> = Vec::new();
    for gen in k.generators() {
        if g.contains(gen)? {
            seeds.push(gen.clone());
        }
    }
    let cent = centralizer_group(g, k, budget)?;
    let mut stats = cent.stats;
    seeds.extend(cent.group.generators().iter().cloned());
    let pruner = ConjugationPruner::normalizer(k);
    let out = run_search(g, &pruner, seeds, budget)?;
    stats.nodes += out.stats.nodes;
    stats.restarts += out.stats.restarts;
    Ok(BacktrackOutcome {
        group: out.group,
        stats,
    })
}

/// Exact centralizer of a group: `C_g(k) = {x in g : kx = xk for all k}`.
pub fn centralizer_group(g: &PermGroup, k: &PermGroup, budget: Budget) -> Result<BacktrackOutcome> {
    if g.degree() != k.degree() {
        return Err(Error::DegreeMismatch(g.degree(), k.degree()));
    }
    if k.is_trivial() {
        return Ok(BacktrackOutcome {
            group: g.clone(),
            stats: BacktrackStats::default(),
        });
    }
    // Abelian k centralizes itself; feed the members lying in g as seeds.
    let mut seeds = Vec::new();
    let abelian = k
        .generators()
        .iter()
        .enumerate()
        .all(|(i, a)| k.generators()[i + 1..].iter().all(|b| &(a * b) == &(b * a)));
    if abelian {
        for gen in k.generators() {
            if g.contains(gen)? {
                seeds.push(gen.clone());
            }
        }
    }
    let pruner = ConjugationPruner::centralizer(k.generators().to_vec(), k);
    run_search(g, &pruner, seeds, budget)
}

/// Exact centralizer of a single permutation.
pub fn centralizer_element(
    g: &PermGroup,
    p: &Permutation,
    budget: Budget,
) -> Result<BacktrackOutcome> {
    let k = PermGroup::new(g.degree(), vec![p.clone()])?;
    centralizer_group(g, &k, budget)
}

/// Exact intersection of two groups on the same domain.
pub fn intersection(a: &PermGroup, b: &PermGroup, budget: Budget) -> Result<BacktrackOutcome> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    // Search inside the smaller group; the other prunes through a chain
    // rebuilt on the same base.
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let chain = small.chain();
    let base = chain.base();
    let aligned = large.chain_with_base(&base);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut known = PermGroup::new(a.degree(), gens.clone())?;
    let mut stats = BacktrackStats::default();
    loop {
        let mut nodes = 0u64;
        let id = Permutation::identity(a.degree());
        let found = intersect_descend(
            chain,
            &aligned,
            0,
            &id,
            &id,
            &known,
            Some(known.clone()),
            &mut nodes,
            budget,
        );
        stats.nodes += nodes;
        match found {
            Ok(Some(g)) => {
                stats.restarts += 1;
                gens.push(g);
                known = PermGroup::new(a.degree(), gens.clone())?;
            }
            Ok(None) => break,
            Err(e) => return Err(e),
        }
    }
    let mut sorted = known.generators().to_vec();
    sorted.sort();
    Ok(BacktrackOutcome {
        group: PermGroup::new(a.degree(), sorted)?,
        stats,
    })
}

/// DFS for the intersection: `prefix` realizes the chosen base images inside
/// the small group, `other_prefix` realizes the same images inside the other
/// group (both walks must stay alive for the branch to survive).
#[allow(clippy::too_many_arguments)]
fn intersect_descend(
    chain: &StabChain,
    other: &StabChain,
    level: usize,
    prefix: &Permutation,
    other_prefix: &Permutation,
    known: &PermGroup,
    known_stab: Option<PermGroup>,
    nodes: &mut u64,
    budget: Budget,
) -> Result<Option<Permutation>> {
    *nodes += 1;
    if *nodes > budget.max_nodes {
        return Err(Error::BudgetExceeded {
            nodes: *nodes,
            partial: known.generators().to_vec(),
        });
    }
    let levels = chain.levels();
    if level == levels.len() {
        let g = prefix.clone();
        // The aligned walk is a pruning device; membership is the authority.
        if other.is_member(&g) && !known.chain().is_member(&g) {
            return Ok(Some(g));
        }
        return Ok(None);
    }
    let base = levels[level].base;
    let orbit_min: Option<Vec<u32>> = known_stab.as_ref().map(min_of_orbit);
    let prefix_inv = prefix.inverse();
    let other_prefix_inv = other_prefix.inverse();
    let aligned_level = other
        .levels()
        .get(level)
        .filter(|ol| ol.base == base);
    let mut candidates: Vec<u32> = levels[level]
        .orbit
        .iter()
        .map(|&gamma| prefix.apply(gamma))
        .collect();
    candidates.sort_unstable();
    for delta in candidates {
        if let Some(min) = &orbit_min {
            if min[delta as usize] != delta {
                continue;
            }
        }
        // Walk the other group's chain in lockstep.
        let next_other = match aligned_level {
            Some(olevel) => {
                let gamma_o = other_prefix_inv.apply(delta);
                match olevel.transversal_to(gamma_o) {
                    Some(t) => t * other_prefix,
                    None => continue,
                }
            }
            None => {
                // The other group's pointwise stabilizer of the aligned base
                // prefix is trivial: its walk element is already pinned.
                if other_prefix.apply(base) != delta {
                    continue;
                }
                other_prefix.clone()
            }
        };
        let gamma = prefix_inv.apply(delta);
        let t = levels[level]
            .transversal_to(gamma)
            .expect("gamma lies in the fundamental orbit");
        let next_prefix = t * prefix;
        let next_stab = match &known_stab {
            Some(ks) if level < budget.stab_depth => {
                let st = ks.point_stabilizer(delta)?;
                (!st.is_trivial()).then_some(st)
            }
            _ => None,
        };
        if let Some(found) = intersect_descend(
            chain,
            other,
            level + 1,
            &next_prefix,
            &next_other,
            known,
            next_stab,
            nodes,
            budget,
        )? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------

/// Arithmetic certificate for a candidate factorization `G = X Y`.
///
/// `G = XY` holds exactly when `|X| |Y| / |X meet Y| = |G|`; the certificate
/// also records the index identities `|G:X| = |Y:(X meet Y)|`,
/// `|G:Y| = |X:(X meet Y)|` and the p-part inequality
/// `|G|_p <= |X|_p |Y|_p` over the primes dividing `|G|`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FactorizationCertificate {
    #[serde(serialize_with = "crate::numth::serialize_biguint")]
    pub g_order: BigUint,
    #[serde(serialize_with = "crate::numth::serialize_biguint")]
    pub x_order: BigUint,
    #[serde(serialize_with = "crate::numth::serialize_biguint")]
    pub y_order: BigUint,
    #[serde(serialize_with = "crate::numth::serialize_biguint")]
    pub meet_order: BigUint,
    pub is_factorization: bool,
    pub index_identities_hold: bool,
    pub p_part_inequality_holds: bool,
}

/// Certifies whether `g = x * y` as a product of subgroups, with the exact
/// intersection computed by backtrack.
pub fn factorization_certificate(
    g: &PermGroup,
    x: &PermGroup,
    y: &PermGroup,
    budget: Budget,
) -> Result<FactorizationCertificate> {
    if !g.contains_group(x)? || !g.contains_group(y)? {
        return Err(Error::NotASubgroup(
            "factorization certificate requires x, y <= g".into(),
        ));
    }
    let meet = intersection(x, y, budget)?.group;
    let g_order = g.order();
    let x_order = x.order();
    let y_order = y.order();
    let meet_order = meet.order();
    let product_size = &x_order * &y_order / &meet_order;
    let is_factorization = product_size == g_order;
    let index_identities_hold = !is_factorization || {
        (&g_order / &x_order == &y_order / &meet_order)
            && (&g_order / &y_order == &x_order / &meet_order)
    };
    let mut p_part_inequality_holds = true;
    if is_factorization {
        let factors = crate::numth::factor::factorize(&g_order, 1 << 24)?;
        for (p, _) in &factors.factors {
            let p = u64::try_from(p).unwrap_or(u64::MAX);
            let gp = crate::numth::p_part(&g_order, p);
            let xp = crate::numth::p_part(&x_order, p);
            let yp = crate::numth::p_part(&y_order, p);
            if gp > xp * yp {
                p_part_inequality_holds = false;
            }
        }
    }
    Ok(FactorizationCertificate {
        g_order,
        x_order,
        y_order,
        meet_order,
        is_factorization,
        index_identities_hold,
        p_part_inequality_holds,
    })
}

/// Brute-force reference implementations; quadratic, for tests and the
/// oracle suite only.
pub mod brute {
    use super::*;

    /// All elements of g normalizing k (element-set comparison).
    pub fn normalizer(g: &PermGroup, k: &PermGroup) -> Vec<Permutation> {
        let kset: std::collections::HashSet<Permutation> = k.elements().into_iter().collect();
        g.elements()
            .into_iter()
            .filter(|x| k.generators().iter().all(|s| kset.contains(&s.conjugate_by(x))))
            .collect()
    }

    pub fn centralizer(g: &PermGroup, k: &PermGroup) -> Vec<Permutation> {
        g.elements()
            .into_iter()
            .filter(|x| k.generators().iter().all(|s| &(s * x) == &(x * s)))
            .collect()
    }

    pub fn intersection(a: &PermGroup, b: &PermGroup) -> Vec<Permutation> {
        let bset: std::collections::HashSet<Permutation> = b.elements().into_iter().collect();
        a.elements().into_iter().filter(|x| bset.contains(x)).collect()
    }
}

/// Convenience: order of a brute-force element list as BigUint.
pub fn brute_order(elems: &[Permutation]) -> BigUint {
    BigUint::from(elems.len())
}
