//! Stabilizer chains (base and strong generating sets).
//!
//! The chain is built by a randomized Schreier-Sims pass followed by a full
//! deterministic verification: every Schreier generator of every level is
//! sifted, so the resulting order and membership answers are exact, never
//! Monte Carlo. The seed only influences internal processing order.
//!
//! Base points are chosen greedily by largest orbit (ties broken by smallest
//! point index), except where a caller forces a base prefix, e.g. for point
//! stabilizers or aligned chains in backtrack searches.
//!
//! Completed [`PermGroup`] and [`StabChain`] values are immutable and safe
//! for concurrent reads; chain construction itself is single-threaded.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::perm::{Parity, Permutation};
use crate::{Error, Result};

/// One level of a stabilizer chain.
#[derive(Debug, Clone)]
pub struct Level {
    /// Base point of this level.
    pub base: u32,
    /// Strong generators fixing all earlier base points.
    pub gens: Vec<Permutation>,
    /// Orbit of the base point under `gens`, in BFS order.
    pub orbit: Vec<u32>,
    /// `transversal[p]` maps the base point to `p`; indexed by point.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Level {
        let mut transversal = vec![None; degree];
        transversal[base as usize] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }

    fn recompute_orbit(&mut self) {
        let degree = self.transversal.len();
        for t in self.transversal.iter_mut() {
            *t = None;
        }
        self.transversal[self.base as usize] = Some(Permutation::identity(degree));
        self.orbit.clear();
        self.orbit.push(self.base);
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            for g in &self.gens {
                let q = g.apply(p);
                if self.transversal[q as usize].is_none() {
                    let u = self.transversal[p as usize].as_ref().unwrap() * g;
                    self.transversal[q as usize] = Some(u);
                    self.orbit.push(q);
                }
            }
        }
    }

    /// The transversal element mapping the base point to `p`, if `p` is in
    /// the orbit.
    pub fn transversal_to(&self, p: u32) -> Option<&Permutation> {
        self.transversal[p as usize].as_ref()
    }
}

/// A verified base and strong generating set.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    order: BigUint,
}

impl StabChain {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// Sifts `g` through the chain; the residue is the identity exactly when
    /// `g` is a member.
    pub fn sift(&self, g: &Permutation) -> Permutation {
        let mut r = g.clone();
        for level in &self.levels {
            let q = r.apply(level.base);
            match level.transversal_to(q) {
                Some(u) => r = &r * &u.inverse(),
                None => return r,
            }
        }
        r
    }

    pub fn is_member(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g).is_identity()
    }

    /// Iterates over all group elements as transversal products.
    ///
    /// The iteration order is deterministic. Use only on groups whose order
    /// fits comfortably in memory/time; the caller is expected to check
    /// `order()` first.
    pub fn elements(&self) -> ElementIter<'_> {
        ElementIter {
            chain: self,
            odometer: vec![0; self.levels.len()],
            done: false,
        }
    }

    /// A uniformly random element, as a random transversal product.
    pub fn random_element(&self, rng: &mut impl Rng) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        // Deepest level first: g = t_k * ... * t_1.
        for level in self.levels.iter().rev() {
            let p = level.orbit[rng.random_range(0..level.orbit.len())];
            g = &g * level.transversal_to(p).unwrap();
        }
        g
    }
}

/// Iterator over all elements of a chain.
pub struct ElementIter<'a> {
    chain: &'a StabChain,
    odometer: Vec<usize>,
    done: bool,
}

impl Iterator for ElementIter<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut g = Permutation::identity(self.chain.degree);
        for (i, level) in self.chain.levels.iter().enumerate().rev() {
            let p = level.orbit[self.odometer[i]];
            g = &g * level.transversal_to(p).unwrap();
        }
        // Advance the odometer.
        let mut i = 0;
        loop {
            if i == self.odometer.len() {
                self.done = true;
                break;
            }
            self.odometer[i] += 1;
            if self.odometer[i] < self.chain.levels[i].orbit.len() {
                break;
            }
            self.odometer[i] = 0;
            i += 1;
        }
        if self.odometer.is_empty() {
            self.done = true;
        }
        Some(g)
    }
}

/// Incremental Schreier-Sims builder.
struct Builder {
    degree: usize,
    levels: Vec<Level>,
    /// Forced base prefix; points are used in order before greedy choice.
    forced_base: Vec<u32>,
}

impl Builder {
    fn new(degree: usize, forced_base: &[u32]) -> Builder {
        Builder {
            degree,
            levels: Vec::new(),
            forced_base: forced_base.to_vec(),
        }
    }

    /// First level index whose base point is moved by `g`, extending the base
    /// if `g` fixes all current base points. Forced base points are created
    /// in order before any greedy choice.
    fn first_moved_level(&mut self, g: &Permutation) -> Option<usize> {
        if g.is_identity() {
            return None;
        }
        loop {
            for (i, level) in self.levels.iter().enumerate() {
                if g.apply(level.base) != level.base {
                    return Some(i);
                }
            }
            let next = if self.forced_base.len() > self.levels.len() {
                self.forced_base[self.levels.len()]
            } else {
                // Greedy: the point on a longest cycle of g, ties to smallest.
                let mut best = (0usize, u32::MAX);
                for p in g.support() {
                    let len = g.cycle_length_at(p);
                    if len > best.0 {
                        best = (len, p);
                    }
                }
                best.1
            };
            self.levels.push(Level::new(self.degree, next));
        }
    }

    /// Adds `g` as a strong generator at every level up to the first one it
    /// moves, preserving the nesting `S_0 ⊇ S_1 ⊇ ...`. Returns that level,
    /// or None for the identity.
    fn add_generator(&mut self, g: Permutation) -> Option<usize> {
        let j = self.first_moved_level(&g)?;
        for l in 0..=j {
            self.levels[l].gens.push(g.clone());
            self.levels[l].recompute_orbit();
        }
        Some(j)
    }

    /// Verification pass: sift every Schreier generator of every level; any
    /// non-identity residue becomes a new strong generator. On completion the
    /// chain invariant holds exactly.
    fn verify(&mut self) {
        let mut l = self.levels.len();
        // Process from the deepest level upward; restart deeper on insertion.
        while l > 0 {
            l -= 1;
            if let Some(restart) = self.check_level(l) {
                l = restart + 1; // loop decrements back to `restart`
            }
        }
    }

    /// Checks all Schreier generators of level `l`; on failure inserts the
    /// residue and returns the level to restart from.
    fn check_level(&mut self, l: usize) -> Option<usize> {
        let mut idx = 0;
        loop {
            let level = &self.levels[l];
            if idx >= level.orbit.len() {
                return None;
            }
            let p = level.orbit[idx];
            for gi in 0..level.gens.len() {
                let level = &self.levels[l];
                let g = &level.gens[gi];
                let u_p = level.transversal_to(p).unwrap();
                let q = g.apply(p);
                let u_q = level.transversal_to(q).unwrap();
                let schreier = &(u_p * g) * &u_q.inverse();
                let residue = self.sift_from(l + 1, &schreier);
                if !residue.is_identity() {
                    // The residue fixes base points of levels 0..=l, so it
                    // lands at a level strictly below l.
                    let at = self
                        .add_generator(residue)
                        .expect("residue is not the identity");
                    debug_assert!(at > l);
                    return Some(at);
                }
            }
            idx += 1;
        }
    }

    fn sift_from(&self, start: usize, g: &Permutation) -> Permutation {
        let mut r = g.clone();
        for level in &self.levels[start.min(self.levels.len())..] {
            let q = r.apply(level.base);
            match level.transversal_to(q) {
                Some(u) => r = &r * &u.inverse(),
                None => return r,
            }
        }
        r
    }

    fn finish(mut self) -> StabChain {
        // Drop trailing trivial levels.
        while matches!(self.levels.last(), Some(l) if l.orbit.len() == 1) {
            self.levels.pop();
        }
        let mut order = BigUint::one();
        for level in &self.levels {
            order *= BigUint::from(level.orbit.len());
        }
        StabChain {
            degree: self.degree,
            levels: self.levels,
            order,
        }
    }
}

/// Builds a verified chain for the group generated by `gens`.
pub fn build_chain(
    degree: usize,
    gens: &[Permutation],
    forced_base: &[u32],
    seed: u64,
) -> StabChain {
    let mut builder = Builder::new(degree, forced_base);
    for g in gens {
        if !g.is_identity() {
            builder.add_generator(g.clone());
        }
    }
    // Randomized acceleration: sift a few random subproducts up front so the
    // verification pass starts close to complete. Exactness comes from the
    // verification, not from these.
    if gens.len() > 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut w = Permutation::identity(degree);
        for _ in 0..10.min(4 * gens.len()) {
            let a = &gens[rng.random_range(0..gens.len())];
            let b = &gens[rng.random_range(0..gens.len())];
            w = &(&w * a) * b;
            let r = builder.sift_from(0, &w);
            if !r.is_identity() {
                builder.add_generator(r);
            }
        }
    }
    builder.verify();
    builder.finish()
}

/// A permutation group given by generators, with a lazily built verified
/// stabilizer chain.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    label: Option<String>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            label: self.label.clone(),
            chain,
        }
    }
}

impl PermGroup {
    /// A group from generators; identity generators are dropped.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let generators: Vec<Permutation> =
            generators.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup {
            degree,
            generators,
            label: None,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).unwrap()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> PermGroup {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// The verified stabilizer chain, built on first use with seed 0.
    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| build_chain(self.degree, &self.generators, &[], 0))
    }

    /// Builds a chain with an explicit seed (affects internal ordering only;
    /// the result is exact for every seed).
    pub fn build_chain_seeded(&self, seed: u64) -> StabChain {
        build_chain(self.degree, &self.generators, &[], seed)
    }

    /// Exact group order.
    pub fn order(&self) -> BigUint {
        self.chain().order().clone()
    }

    pub fn order_u128(&self) -> Option<u128> {
        u128::try_from(&self.order()).ok()
    }

    /// Membership by sifting.
    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, g.degree()));
        }
        Ok(self.chain().is_member(g))
    }

    /// True when every generator of `other` is a member.
    pub fn contains_group(&self, other: &PermGroup) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Orbit of a point in BFS order, deterministic in generator order.
    pub fn orbit(&self, point: u32) -> Result<Vec<u32>> {
        if point as usize >= self.degree {
            return Err(Error::PointOutOfRange {
                point: point as usize,
                degree: self.degree,
            });
        }
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    orbit.push(q);
                }
            }
        }
        Ok(orbit)
    }

    /// All orbits, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for p in 0..self.degree as u32 {
            if !seen[p as usize] {
                let orbit = self.orbit(p).unwrap();
                for &q in &orbit {
                    seen[q as usize] = true;
                }
                orbits.push(orbit);
            }
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).unwrap().len() == self.degree
    }

    /// Pointwise stabilizer of a point, as an exact group with its own chain.
    pub fn point_stabilizer(&self, point: u32) -> Result<PermGroup> {
        if point as usize >= self.degree {
            return Err(Error::PointOutOfRange {
                point: point as usize,
                degree: self.degree,
            });
        }
        let chain = build_chain(self.degree, &self.generators, &[point], 0);
        let gens = match chain.levels.first() {
            // Trivial group.
            None => Vec::new(),
            Some(l0) => {
                debug_assert_eq!(l0.base, point, "forced base prefix was not honored");
                chain.levels.get(1).map_or(Vec::new(), |l| l.gens.clone())
            }
        };
        PermGroup::new(self.degree, gens)
    }

    /// A chain whose base starts with the given prefix.
    pub fn chain_with_base(&self, base: &[u32]) -> StabChain {
        build_chain(self.degree, &self.generators, base, 0)
    }

    /// Uniformly random element.
    pub fn random_element(&self, rng: &mut impl Rng) -> Permutation {
        self.chain().random_element(rng)
    }

    /// All elements; guard with `order()` first.
    pub fn elements(&self) -> Vec<Permutation> {
        self.chain().elements().collect()
    }

    /// Normal closure of `seeds` in this group.
    ///
    /// Conjugates are gathered in whole rounds (one chain rebuild per round)
    /// and the loop exits as soon as the closure reaches the full order.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        let ambient_order = self.order();
        let mut gens: Vec<Permutation> = seeds
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut closure = PermGroup::new(self.degree, gens.clone())?;
        loop {
            if closure.order() == ambient_order {
                return Ok(closure);
            }
            let mut fresh: Vec<Permutation> = Vec::new();
            for g in closure.generators() {
                for s in &self.generators {
                    let c = g.conjugate_by(s);
                    if !closure.chain().is_member(&c) && !fresh.contains(&c) {
                        fresh.push(c);
                    }
                }
            }
            if fresh.is_empty() {
                return Ok(closure);
            }
            gens.extend(fresh);
            closure = PermGroup::new(self.degree, gens.clone())?;
        }
    }

    /// Derived subgroup `[G, G]`.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Derived series `G ⊵ G' ⊵ G'' ⊵ ...` until it stabilizes.
    pub fn derived_series(&self, max_steps: usize) -> Result<DerivedSeries> {
        let mut terms = vec![self.clone()];
        for _ in 0..max_steps {
            let last = terms.last().unwrap();
            let next = last.derived_subgroup()?;
            if next.order() == last.order() {
                let perfect = terms.len() == 1;
                return Ok(DerivedSeries {
                    solvable: last.order().is_one(),
                    is_perfect: perfect && !last.order().is_one(),
                    terms,
                });
            }
            let stable = next.is_trivial();
            terms.push(next);
            if stable {
                return Ok(DerivedSeries {
                    solvable: true,
                    is_perfect: false,
                    terms,
                });
            }
        }
        Err(Error::StepLimit(max_steps))
    }

    pub fn is_perfect(&self) -> Result<bool> {
        Ok(self.derived_subgroup()?.order() == self.order())
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.derived_series(64)?.solvable)
    }

    /// Whether some generator is odd; if so the even elements form an
    /// index-2 subgroup.
    pub fn has_odd_generator(&self) -> bool {
        self.generators.iter().any(|g| g.parity() == Parity::Odd)
    }

    /// The subgroup of even elements, via a Schreier transversal over the
    /// parity homomorphism. Equals the whole group when all generators are
    /// even.
    pub fn even_subgroup(&self) -> Result<PermGroup> {
        let Some(t) = self
            .generators
            .iter()
            .find(|g| g.parity() == Parity::Odd)
            .cloned()
        else {
            return Ok(self.clone());
        };
        let mut gens = Vec::new();
        for s in &self.generators {
            match s.parity() {
                Parity::Even => {
                    gens.push(s.clone());
                    gens.push(s.conjugate_by(&t.inverse()));
                }
                Parity::Odd => {
                    gens.push(s * &t.inverse());
                    gens.push(&t * s);
                }
            }
        }
        PermGroup::new(self.degree, gens)
    }
}

/// Result of a derived-series computation.
#[derive(Debug, Clone)]
pub struct DerivedSeries {
    pub terms: Vec<PermGroup>,
    pub is_perfect: bool,
    pub solvable: bool,
}

/// Action of a group on the right cosets of a subgroup.
#[derive(Debug, Clone)]
pub struct CosetAction {
    /// Image group of degree `|G:H|`; generator i is the action of the i-th
    /// generator of the original group.
    pub action: PermGroup,
    /// Coset representatives; `reps[0]` is the identity.
    pub reps: Vec<Permutation>,
    /// Whether the action is faithful, i.e. the core of H is trivial.
    /// Reported, not enforced.
    pub faithful: bool,
    fingerprints: HashMap<u64, Vec<usize>>,
    h_orbits: Vec<Vec<u32>>,
    subgroup: PermGroup,
}

impl CosetAction {
    /// Index of the coset `H * g`.
    pub fn coset_of(&self, g: &Permutation) -> usize {
        let fp = fingerprint(&self.h_orbits, g);
        if let Some(cands) = self.fingerprints.get(&fp) {
            for &i in cands {
                let d = g * &self.reps[i].inverse();
                if self.subgroup.chain().is_member(&d) {
                    return i;
                }
            }
        }
        panic!("element does not lie in the acted-on group");
    }

    /// Image of an arbitrary element under the action homomorphism.
    pub fn map_element(&self, g: &Permutation) -> Permutation {
        let images = self
            .reps
            .iter()
            .map(|rep| self.coset_of(&(rep * g)) as u32)
            .collect();
        Permutation::from_images(images).expect("coset action image is a bijection")
    }
}

fn fingerprint(h_orbits: &[Vec<u32>], g: &Permutation) -> u64 {
    let mut hasher = std::collections::hash_map::DefaultHasher::new();
    for orbit in h_orbits {
        let mut img: Vec<u32> = orbit.iter().map(|&p| g.apply(p)).collect();
        img.sort_unstable();
        img.hash(&mut hasher);
        0xfeedu16.hash(&mut hasher);
    }
    hasher.finish()
}

/// Permutation action of `g` on the right cosets of `h`, by right
/// multiplication.
///
/// The kernel is the core of `h`; faithfulness is reported, not forced.
pub fn coset_action(g: &PermGroup, h: &PermGroup, max_index: usize) -> Result<CosetAction> {
    if !g.contains_group(h)? {
        return Err(Error::NotASubgroup(
            "coset action requires h <= g".to_string(),
        ));
    }
    let g_order = g.order();
    let h_order = h.order();
    let index = &g_order / &h_order;
    if index > BigUint::from(max_index) {
        return Err(Error::IndexExceedsLimit {
            index,
            limit: max_index,
        });
    }
    let h_orbits = h.orbits();
    let mut reps: Vec<Permutation> = vec![Permutation::identity(g.degree())];
    let mut fingerprints: HashMap<u64, Vec<usize>> = HashMap::new();
    fingerprints
        .entry(fingerprint(&h_orbits, &reps[0]))
        .or_default()
        .push(0);
    let find = |fps: &HashMap<u64, Vec<usize>>, reps: &[Permutation], cand: &Permutation| {
        let fp = fingerprint(&h_orbits, cand);
        fps.get(&fp).and_then(|is| {
            is.iter()
                .copied()
                .find(|&i| h.chain().is_member(&(cand * &reps[i].inverse())))
        })
    };
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); g.generators().len()];
    let mut head = 0;
    while head < reps.len() {
        let rep = reps[head].clone();
        for (gi, s) in g.generators().iter().enumerate() {
            let cand = &rep * s;
            let target = match find(&fingerprints, &reps, &cand) {
                Some(i) => i,
                None => {
                    let fp = fingerprint(&h_orbits, &cand);
                    reps.push(cand);
                    fingerprints.entry(fp).or_default().push(reps.len() - 1);
                    reps.len() - 1
                }
            };
            images[gi].push(target as u32);
        }
        head += 1;
    }
    let n = reps.len();
    let action_gens: Result<Vec<Permutation>> = images
        .into_iter()
        .map(|img| {
            debug_assert_eq!(img.len(), n);
            Permutation::from_images(img)
        })
        .collect();
    let action = PermGroup::new(n, action_gens?)?;
    let faithful = action.order() == g_order;
    Ok(CosetAction {
        action,
        reps,
        faithful,
        fingerprints,
        h_orbits,
        subgroup: h.clone(),
    })
}

/// `G = T·H` with `T` a point stabilizer holds exactly when `h` is transitive
/// on the domain of the (transitive) group `g`.
pub fn factorization_check(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    if !g.contains_group(h)? {
        return Err(Error::NotASubgroup(
            "factorization check requires h <= g".to_string(),
        ));
    }
    Ok(h.orbit(0)?.len() == g.degree())
}

/// A minimal nontrivial block system of a transitive group, or `None` when
/// the group is primitive.
///
/// Returned blocks are the system with the smallest block size over all
/// minimal systems; blocks are sorted by least element.
pub fn minimal_block_system(g: &PermGroup) -> Result<Option<Vec<Vec<u32>>>> {
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = g.degree();
    if n <= 2 {
        return Ok(None);
    }
    let mut best: Option<Vec<Vec<u32>>> = None;
    for beta in 1..n as u32 {
        if let Some(blocks) = block_closure(g, 0, beta) {
            let size = blocks[0].len();
            if best.as_ref().is_none_or(|b| size < b[0].len()) {
                best = Some(blocks);
            }
        }
    }
    Ok(best)
}

/// Finest block system in which `alpha` and `beta` share a block
/// (union-find closure); `None` when that system is trivial.
fn block_closure(g: &PermGroup, alpha: u32, beta: u32) -> Option<Vec<Vec<u32>>> {
    let n = g.degree();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    fn find(parent: &mut [u32], x: u32) -> u32 {
        let mut root = x;
        while parent[root as usize] != root {
            root = parent[root as usize];
        }
        let mut cur = x;
        while parent[cur as usize] != root {
            let next = parent[cur as usize];
            parent[cur as usize] = root;
            cur = next;
        }
        root
    }
    let mut queue = vec![(alpha, beta)];
    while let Some((a, b)) = queue.pop() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            continue;
        }
        parent[ra.max(rb) as usize] = ra.min(rb);
        for s in g.generators() {
            queue.push((s.apply(a), s.apply(b)));
        }
    }
    let mut blocks: HashMap<u32, Vec<u32>> = HashMap::new();
    for p in 0..n as u32 {
        blocks.entry(find(&mut parent, p)).or_default().push(p);
    }
    let size = blocks[&find(&mut parent, alpha)].len();
    if size == n || size == 1 {
        return None;
    }
    // The closure is a congruence, so all classes have equal size.
    debug_assert!(blocks.values().all(|b| b.len() == size));
    let mut out: Vec<Vec<u32>> = blocks.into_values().collect();
    out.sort_by_key(|b| b[0]);
    Some(out)
}

/// Verdict of the simplicity test.
#[derive(Debug, Clone)]
pub enum SimplicityVerdict {
    /// Perfect, all sampled normal closures were the whole group, and the
    /// order appears in the simple-order table. The names are the table's
    /// candidates for that order.
    CertifiedSimple { order_names: Vec<String> },
    /// Same sampling evidence, but the order matched no table entry; the
    /// verdict rests on sampling alone.
    MonteCarloSimple { trials: u32 },
    /// A proper nontrivial normal subgroup was found.
    NotSimple { witness: PermGroup },
}

impl SimplicityVerdict {
    pub fn is_simple(&self) -> bool {
        !matches!(self, SimplicityVerdict::NotSimple { .. })
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, SimplicityVerdict::CertifiedSimple { .. })
    }

    pub fn describe(&self) -> String {
        match self {
            SimplicityVerdict::CertifiedSimple { order_names } => {
                format!("certified-simple (order matches {})", order_names.join("/"))
            }
            SimplicityVerdict::MonteCarloSimple { trials } => {
                format!("monte-carlo-simple ({trials} trials, order not in table)")
            }
            SimplicityVerdict::NotSimple { witness } => {
                format!("not-simple (witness subgroup of order {})", witness.order())
            }
        }
    }
}

/// Simplicity test: deterministic witnesses where cheap, then sampled normal
/// closures, then certification against the simple-order table.
pub fn is_simple_monte_carlo(
    g: &PermGroup,
    trials: u32,
    seed: u64,
) -> Result<SimplicityVerdict> {
    let order = g.order();
    if order.is_one() {
        return Err(Error::TrivialGroup);
    }
    // Parity screen: an odd generator forces an index-2 even subgroup.
    if g.has_odd_generator() {
        let witness = g.even_subgroup()?;
        if !witness.order().is_one() {
            return Ok(SimplicityVerdict::NotSimple { witness });
        }
    }
    // Derived screen: a proper derived subgroup is normal.
    let derived = g.derived_subgroup()?;
    if derived.order() != order {
        return Ok(SimplicityVerdict::NotSimple { witness: derived });
    }
    if order == BigUint::from(1u8) {
        return Err(Error::TrivialGroup);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut x = g.random_element(&mut rng);
        while x.is_identity() {
            x = g.random_element(&mut rng);
        }
        let ncl = g.normal_closure(std::slice::from_ref(&x))?;
        if ncl.order() != order {
            return Ok(SimplicityVerdict::NotSimple { witness: ncl });
        }
    }
    let names = crate::numth::orders::simple_groups_of_order(&order);
    if names.is_empty() {
        Ok(SimplicityVerdict::MonteCarloSimple { trials })
    } else {
        Ok(SimplicityVerdict::CertifiedSimple { order_names: names })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation as P;

    fn pg(degree: usize, gens: &[&str]) -> PermGroup {
        let gens = gens
            .iter()
            .map(|s| P::parse_cycles(s, degree).unwrap())
            .collect();
        PermGroup::new(degree, gens).unwrap()
    }

    #[test]
    fn orders_of_small_groups() {
        assert_eq!(pg(5, &["(1,2,3)", "(3,4,5)"]).order(), BigUint::from(60u32)); // A5
        assert_eq!(PermGroup::trivial(7).order(), BigUint::one());
        let a12 = pg(12, &["(1,2,3)", "(2,3,4,5,6,7,8,9,10,11,12)"]);
        assert_eq!(a12.order(), BigUint::from(239500800u64));
    }

    #[test]
    fn membership() {
        let a5 = pg(5, &["(1,2,3)", "(3,4,5)"]);
        assert!(!a5.contains(&P::parse_cycles("(1,2)", 5).unwrap()).unwrap());
        for g in a5.generators() {
            assert!(a5.contains(g).unwrap());
        }
        let c4 = pg(4, &["(1,2,3,4)"]);
        assert!(c4
            .contains(&P::parse_cycles("(1,3)(2,4)", 4).unwrap())
            .unwrap());
    }

    #[test]
    fn orbits_and_stabilizers() {
        let a5 = pg(5, &["(1,2,3)", "(3,4,5)"]);
        assert_eq!(a5.orbit(0).unwrap().len(), 5);
        let st = a5.point_stabilizer(0).unwrap();
        assert_eq!(st.order(), BigUint::from(12u32));
        for g in st.generators() {
            assert_eq!(g.apply(0), 0);
        }

        let z2 = pg(4, &["(1,2)(3,4)"]);
        assert_eq!(z2.orbit(0).unwrap(), vec![0, 1]);
        assert_eq!(PermGroup::trivial(5).orbit(3).unwrap(), vec![3]);

        // Stabilizer of a fixed point is the whole group.
        let t = pg(4, &["(1,2)"]);
        assert_eq!(t.point_stabilizer(2).unwrap().order(), t.order());
    }

    #[test]
    fn orbit_stabilizer_identity() {
        let m = pg(7, &["(1,2,3,4,5,6,7)", "(2,3)(4,7)"]);
        let ord = m.order();
        let orbit = m.orbit(0).unwrap().len();
        let stab = m.point_stabilizer(0).unwrap().order();
        assert_eq!(BigUint::from(orbit) * stab, ord);
    }

    #[test]
    fn coset_action_examples() {
        // A4 on cosets of <(1,2,3)>: degree 4, faithful, transitive.
        let a4 = pg(4, &["(1,2,3)", "(2,3,4)"]);
        let h = pg(4, &["(1,2,3)"]);
        let ca = coset_action(&a4, &h, 100).unwrap();
        assert_eq!(ca.action.degree(), 4);
        assert!(ca.faithful);
        assert!(ca.action.is_transitive());
        assert_eq!(ca.action.order(), BigUint::from(12u32));

        // H = G gives the trivial degree-1 action.
        let whole = coset_action(&a4, &a4, 10).unwrap();
        assert_eq!(whole.action.degree(), 1);

        // Index cap.
        assert!(matches!(
            coset_action(&a4, &PermGroup::trivial(4), 5),
            Err(Error::IndexExceedsLimit { .. })
        ));
    }

    #[test]
    fn derived_series_examples() {
        let s4 = pg(4, &["(1,2)", "(1,2,3,4)"]);
        let series = s4.derived_series(10).unwrap();
        let orders: Vec<BigUint> = series.terms.iter().map(|t| t.order()).collect();
        assert_eq!(
            orders,
            vec![
                BigUint::from(24u8),
                BigUint::from(12u8),
                BigUint::from(4u8),
                BigUint::from(1u8)
            ]
        );
        assert!(series.solvable);
        assert!(!series.is_perfect);

        let a5 = pg(5, &["(1,2,3)", "(3,4,5)"]);
        let series = a5.derived_series(10).unwrap();
        assert_eq!(series.terms.len(), 1);
        assert!(series.is_perfect);
        assert!(!series.solvable);

        // Frobenius group of order 21.
        let f21 = pg(7, &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]);
        let series = f21.derived_series(10).unwrap();
        let orders: Vec<u32> = series
            .terms
            .iter()
            .map(|t| u32::try_from(&t.order()).unwrap())
            .collect();
        assert_eq!(orders, vec![21, 7, 1]);
        assert!(series.solvable);
    }

    #[test]
    fn block_systems() {
        let c4 = pg(4, &["(1,2,3,4)"]);
        let blocks = minimal_block_system(&c4).unwrap().unwrap();
        assert_eq!(blocks, vec![vec![0, 2], vec![1, 3]]);

        let a5 = pg(5, &["(1,2,3)", "(3,4,5)"]);
        assert!(minimal_block_system(&a5).unwrap().is_none());

        assert!(matches!(
            minimal_block_system(&pg(4, &["(1,2)"])),
            Err(Error::NotTransitive)
        ));
    }

    #[test]
    fn simplicity_verdicts() {
        let a6 = pg(6, &["(1,2,3)", "(2,3,4,5,6)"]);
        assert_eq!(a6.order(), BigUint::from(360u32));
        let v = is_simple_monte_carlo(&a6, 4, 1).unwrap();
        assert!(v.is_certified(), "A6 should certify: {}", v.describe());

        let s6 = pg(6, &["(1,2)", "(1,2,3,4,5,6)"]);
        match is_simple_monte_carlo(&s6, 4, 1).unwrap() {
            SimplicityVerdict::NotSimple { witness } => {
                assert_eq!(witness.order(), BigUint::from(360u32));
            }
            other => panic!("S6 must not be simple: {}", other.describe()),
        }

        let f21 = pg(7, &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]);
        match is_simple_monte_carlo(&f21, 4, 1).unwrap() {
            SimplicityVerdict::NotSimple { witness } => {
                // Derived screen finds the normal Z7.
                assert_eq!(witness.order(), BigUint::from(7u8));
            }
            other => panic!("F21 must not be simple: {}", other.describe()),
        }
    }

    #[test]
    fn factorization_examples() {
        let a6 = pg(6, &["(1,2,3)", "(2,3,4,5,6)"]);
        let h = pg(6, &["(1,2,3)"]);
        assert!(!factorization_check(&a6, &h).unwrap());
    }

    #[test]
    fn element_iteration_matches_order() {
        let s4 = pg(4, &["(1,2)", "(1,2,3,4)"]);
        let elems = s4.elements();
        assert_eq!(elems.len(), 24);
        let set: std::collections::HashSet<_> = elems.into_iter().collect();
        assert_eq!(set.len(), 24);
    }

    #[test]
    fn random_elements_are_members() {
        let m = pg(7, &["(1,2,3,4,5,6,7)", "(2,3)(4,7)"]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let g = m.random_element(&mut rng);
            assert!(m.contains(&g).unwrap());
        }
    }
}
