//! Coset graphs Cos(G, H, x) and their predicates.
//!
//! Vertices are the right cosets of H in G; Hg ~ Hg' exactly when
//! g'g^-1 lies in HxH. The analyzer decides valency, connectivity and the
//! undirectedness witness without materializing anything; the builder
//! produces the explicit graph under a vertex cap by transporting the
//! neighborhood of the base vertex along the coset action, which never
//! enumerates HxH (|H| may dwarf the vertex count).

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::backtrack::{intersection, Budget};
use crate::numth::{factor::factorize, p_part};
use crate::perm::Permutation;
use crate::stabchain::{coset_action, PermGroup};
use crate::{Error, Result};

/// A finite simple undirected graph in adjacency-list form.
///
/// Invariants: neighbor lists strictly sorted, no loops, u in adj(v) iff
/// v in adj(u).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds from an edge list, enforcing the invariants.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::PointOutOfRange {
                    point: u.max(v) as usize,
                    degree: n,
                });
            }
            if u == v {
                return Err(Error::BrokenSymmetry(format!("loop at vertex {u}")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree_of(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges sorted lexicographically, each as (min, max).
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    /// True when `g` maps edges to edges (an automorphism).
    pub fn is_automorphism(&self, g: &Permutation) -> bool {
        if g.degree() != self.vertex_count() {
            return false;
        }
        self.edges()
            .iter()
            .all(|&(u, v)| self.has_edge(g.apply(u), g.apply(v)))
    }

    /// Complete-graph detector: valency n-1 with the right edge count.
    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * (n - 1) / 2 && self.adj.iter().all(|l| l.len() == n - 1)
    }
}

/// Serialized graph form: `{n, edges}` with edges sorted lexicographically.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> GraphJson {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges(),
        }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }
}

/// Plain edge-list text: one `u v` pair per line, 0-based.
pub fn graph_to_edge_list_text(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn graph_from_edge_list_text(text: &str, n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<u32> {
            tok.and_then(|t| t.parse().ok()).ok_or(Error::ParseError {
                line: lineno + 1,
                msg: format!("expected `u v`, got {line:?}"),
            })
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

/// The data of a coset-graph specification.
#[derive(Debug)]
pub struct CosetSpec {
    pub group: PermGroup,
    pub stabilizer: PermGroup,
    pub arc_element: Permutation,
    /// H meet H^x, the arc stabilizer.
    pub arc_stab: PermGroup,
    pub valency: BigUint,
    pub vertex_count: BigUint,
}

/// Predicate report from `analyze_spec`; no graph is built.
#[derive(Debug, Clone, Serialize)]
pub struct SpecReport {
    #[serde(serialize_with = "crate::numth::serialize_biguint")]
    pub valency: BigUint,
    #[serde(serialize_with = "crate::numth::serialize_biguint")]
    pub vertex_count: BigUint,
    #[serde(serialize_with = "crate::numth::serialize_biguint")]
    pub arc_stab_order: BigUint,
    /// <H, x> is all of G.
    pub connected: bool,
    /// x^2 lies in the arc stabilizer.
    pub undirected_ok: bool,
    pub x_normalizes_arc_stab: bool,
    pub x_is_2_element: bool,
}

/// Analyzes Cos(g, h, x): checks the containments, computes the arc
/// stabilizer H meet H^x by backtrack intersection, and reports the
/// predicates.
pub fn analyze_spec(
    g: &PermGroup,
    h: &PermGroup,
    x: &Permutation,
) -> Result<(CosetSpec, SpecReport)> {
    if !g.contains_group(h)? {
        return Err(Error::NotASubgroup("analyze_spec requires h <= g".into()));
    }
    if !g.contains(x)? {
        return Err(Error::NotASubgroup("arc element x must lie in g".into()));
    }
    if h.chain().is_member(x) {
        return Err(Error::XInsideH);
    }
    let h_conj_gens: Vec<Permutation> = h
        .generators()
        .iter()
        .map(|s| s.conjugate_by(x))
        .collect();
    let h_conj = PermGroup::new(g.degree(), h_conj_gens)?;
    let arc_stab = intersection(h, &h_conj, Budget::default())?.group;
    let h_order = h.order();
    let arc_order = arc_stab.order();
    let valency = &h_order / &arc_order;
    let vertex_count = g.order() / &h_order;
    // Connectivity: <h, x> must be all of g.
    let mut joint = h.generators().to_vec();
    joint.push(x.clone());
    let joint_group = PermGroup::new(g.degree(), joint)?;
    let connected = joint_group.order() == g.order();
    let x_sq = x * x;
    let undirected_ok = arc_stab.chain().is_member(&x_sq);
    let x_normalizes_arc_stab = arc_stab
        .generators()
        .iter()
        .all(|k| arc_stab.chain().is_member(&k.conjugate_by(x)));
    let report = SpecReport {
        valency: valency.clone(),
        vertex_count: vertex_count.clone(),
        arc_stab_order: arc_order,
        connected,
        undirected_ok,
        x_normalizes_arc_stab,
        x_is_2_element: x.is_two_element(),
    };
    let spec = CosetSpec {
        group: g.clone(),
        stabilizer: h.clone(),
        arc_element: x.clone(),
        arc_stab,
        valency,
        vertex_count,
    };
    Ok((spec, report))
}

/// A materialized coset graph along with the vertex action of G.
#[derive(Debug)]
pub struct BuiltGraph {
    pub graph: Graph,
    /// The action of G on the vertices (generator i acts as the image of
    /// G's generator i).
    pub action: PermGroup,
    /// Vertex index of the coset Hx.
    pub x_vertex: u32,
}

/// Builds the coset graph explicitly.
///
/// Vertices are cosets discovered by the coset action; the base vertex's
/// neighborhood is the H-orbit of the vertex Hx, and every other vertex's
/// neighborhood is the transport of that one along the action, which is
/// exactly the G-orbit of the base arcs.
pub fn build_graph(spec: &CosetSpec, max_vertices: usize) -> Result<BuiltGraph> {
    if spec.vertex_count > BigUint::from(max_vertices) {
        return Err(Error::TooManyVertices {
            count: spec.vertex_count.clone(),
            cap: max_vertices,
        });
    }
    let g = &spec.group;
    let h = &spec.stabilizer;
    let ca = coset_action(g, h, max_vertices)?;
    let n = ca.action.degree();
    let x_vertex = ca.coset_of(&spec.arc_element) as u32;
    if x_vertex == 0 {
        return Err(Error::XInsideH);
    }
    // Neighborhood of vertex 0 (the coset H): the H-orbit of Hx under the
    // vertex action of H's generators.
    let h_action: Vec<Permutation> = h.generators().iter().map(|s| ca.map_element(s)).collect();
    let h_action_group = PermGroup::new(n, h_action)?;
    let base_neighbors = h_action_group.orbit(x_vertex)?;
    let expected_valency = spec
        .valency
        .to_usize()
        .ok_or_else(|| Error::InvalidParams("valency exceeds usize".into()))?;
    if base_neighbors.len() != expected_valency {
        return Err(Error::BrokenSymmetry(format!(
            "base neighborhood has size {}, valency says {}",
            base_neighbors.len(),
            expected_valency
        )));
    }
    // Transport: neighbors(v) = neighbors(0)^(a_v) where 0^(a_v) = v; the
    // transversal elements of the vertex action orbit provide a_v.
    let mut transversal: Vec<Option<Permutation>> = vec![None; n];
    transversal[0] = Some(Permutation::identity(n));
    let mut queue = vec![0u32];
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for a in ca.action.generators() {
            let w = a.apply(v);
            if transversal[w as usize].is_none() {
                let t = transversal[v as usize].as_ref().unwrap() * a;
                transversal[w as usize] = Some(t);
                queue.push(w);
            }
        }
    }
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for v in 0..n as u32 {
        let Some(t) = transversal[v as usize].as_ref() else {
            return Err(Error::NotTransitive);
        };
        for &u in &base_neighbors {
            let w = t.apply(u);
            if w == v {
                return Err(Error::BrokenSymmetry(format!(
                    "vertex {v} adjacent to itself; HxH is not loop-free"
                )));
            }
            edges.push((v.min(w), v.max(w)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::from_edges(n, &edges)?;
    // Symmetry audit: every vertex must have degree exactly the valency;
    // a deviation means HxH != Hx^-1H despite the undirectedness witness.
    for v in 0..n as u32 {
        if graph.degree_of(v) != expected_valency {
            return Err(Error::BrokenSymmetry(format!(
                "vertex {v} has degree {}, valency is {}",
                graph.degree_of(v),
                expected_valency
            )));
        }
    }
    Ok(BuiltGraph {
        graph,
        action: ca.action.clone(),
        x_vertex,
    })
}

/// BFS-derived exact graph properties.
#[derive(Debug, Clone, Serialize)]
pub struct GraphProps {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub regular: bool,
    pub valency: Option<usize>,
    pub connected: bool,
    pub bipartite: bool,
}

pub fn graph_props(g: &Graph) -> GraphProps {
    let n = g.vertex_count();
    let degrees: Vec<usize> = (0..n as u32).map(|v| g.degree_of(v)).collect();
    let regular = degrees.windows(2).all(|w| w[0] == w[1]);
    let valency = if regular { degrees.first().copied() } else { None };
    // BFS 2-coloring from every component start.
    let mut color: Vec<i8> = vec![-1; n];
    let mut components = 0;
    let mut bipartite = true;
    for start in 0..n as u32 {
        if color[start as usize] >= 0 {
            continue;
        }
        components += 1;
        color[start as usize] = 0;
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &w in g.neighbors(v) {
                if color[w as usize] < 0 {
                    color[w as usize] = 1 - color[v as usize];
                    queue.push(w);
                } else if color[w as usize] == color[v as usize] {
                    bipartite = false;
                }
            }
        }
    }
    GraphProps {
        vertex_count: n,
        edge_count: g.edge_count(),
        regular,
        valency,
        connected: components <= 1,
        bipartite,
    }
}

/// Report for a quotient by the orbits of a subgroup of automorphisms.
#[derive(Debug, Clone, Serialize)]
pub struct QuotientReport {
    pub orbit_count: usize,
    /// All orbits have size |k| (trivial point stabilizers).
    pub semiregular: bool,
    pub valency_preserved: bool,
    /// Some edge joined two vertices of one orbit (dropped in the quotient).
    pub internal_edges: bool,
    /// k is normalized by the supplied acting group.
    pub normal_in_g: bool,
}

/// Quotient graph on the k-orbits; orbit-pair edges are induced by member
/// pairs. Requires every generator of k to be an automorphism and at least
/// two orbits (three or more unless `allow_two_orbits`).
pub fn quotient_graph(
    graph: &Graph,
    g: &PermGroup,
    k: &PermGroup,
    allow_two_orbits: bool,
) -> Result<(Graph, QuotientReport)> {
    for gen in k.generators() {
        if !graph.is_automorphism(gen) {
            return Err(Error::NotAnAutomorphism(gen.to_string()));
        }
    }
    let orbits = k.orbits();
    if orbits.len() < 2 {
        return Err(Error::DegenerateQuotient(
            "k has fewer than 2 orbits on the vertices".into(),
        ));
    }
    if orbits.len() < 3 && !allow_two_orbits {
        return Err(Error::DegenerateQuotient(
            "k has only 2 orbits; pass the override to quotient anyway".into(),
        ));
    }
    let mut orbit_of = vec![0u32; graph.vertex_count()];
    for (i, orbit) in orbits.iter().enumerate() {
        for &p in orbit {
            orbit_of[p as usize] = i as u32;
        }
    }
    let k_order = k.order();
    let semiregular = orbits
        .iter()
        .all(|o| BigUint::from(o.len()) == k_order);
    let mut edges = Vec::new();
    let mut internal_edges = false;
    for (u, v) in graph.edges() {
        let (ou, ov) = (orbit_of[u as usize], orbit_of[v as usize]);
        if ou == ov {
            internal_edges = true;
        } else {
            edges.push((ou.min(ov), ou.max(ov)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let quotient = Graph::from_edges(orbits.len(), &edges)?;
    let props_in = graph_props(graph);
    let props_out = graph_props(&quotient);
    let valency_preserved = props_in.regular
        && props_out.regular
        && props_in.valency == props_out.valency;
    let normal_in_g = k.generators().iter().all(|s| {
        g.generators()
            .iter()
            .all(|t| k.chain().is_member(&s.conjugate_by(t)))
    });
    Ok((
        quotient,
        QuotientReport {
            orbit_count: orbits.len(),
            semiregular,
            valency_preserved,
            internal_edges,
            normal_in_g,
        },
    ))
}

/// Arc-transitivity: g transitive on vertices and the vertex stabilizer
/// transitive on that vertex's neighborhood.
pub fn arc_transitivity_check(g: &PermGroup, graph: &Graph) -> Result<bool> {
    if g.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch(g.degree(), graph.vertex_count()));
    }
    if !g.is_transitive() {
        return Ok(false);
    }
    let stab = g.point_stabilizer(0)?;
    let neighborhood = graph.neighbors(0);
    let Some(&first) = neighborhood.first() else {
        return Ok(false);
    };
    let orbit = stab.orbit(first)?;
    Ok(neighborhood.iter().all(|v| orbit.contains(v)))
}

/// Report of the r-part conditions on a vertex stabilizer.
#[derive(Debug, Clone, Serialize)]
pub struct RPartReport {
    #[serde(serialize_with = "crate::numth::serialize_biguint")]
    pub stabilizer_order: BigUint,
    pub r_part_is_r: bool,
    pub max_prime_is_r: bool,
    pub pass: bool,
}

/// Checks `|G_alpha|_r = r = max prime divisor of |G_alpha|` for a group
/// acting on the graph's vertices.
pub fn stabilizer_rpart_check(
    g: &PermGroup,
    graph: &Graph,
    vertex: u32,
    r: u64,
) -> Result<RPartReport> {
    if g.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch(g.degree(), graph.vertex_count()));
    }
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let stab = g.point_stabilizer(vertex)?;
    let order = stab.order();
    let r_part_is_r = p_part(&order, r) == BigUint::from(r);
    let max_prime_is_r = factorize(&order, 1 << 24)?
        .largest_prime()
        .map(|p| *p == BigUint::from(r))
        .unwrap_or(false);
    Ok(RPartReport {
        stabilizer_order: order,
        r_part_is_r,
        max_prime_is_r,
        pass: r_part_is_r && max_prime_is_r,
    })
}

/// The cube graph on 8 vertices (test fixture and quotient example).
pub fn cube_graph() -> Graph {
    let mut edges = Vec::new();
    for v in 0u32..8 {
        for b in 0..3 {
            let w = v ^ (1 << b);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(8, &edges).unwrap()
}

/// The cycle graph on n vertices.
pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (0..n as u32)
        .map(|v| (v, ((v + 1) % n as u32)))
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
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
    fn k4_spec_and_graph() {
        let a4 = pg(4, &["(1,2,3)", "(2,3,4)"]);
        let h = pg(4, &["(1,2,3)"]);
        let x = P::parse_cycles("(1,2)(3,4)", 4).unwrap();
        let (spec, report) = analyze_spec(&a4, &h, &x).unwrap();
        assert_eq!(report.valency, BigUint::from(3u8));
        assert!(report.connected);
        assert!(report.undirected_ok);
        assert!(report.x_is_2_element);
        let built = build_graph(&spec, 100).unwrap();
        assert!(built.graph.is_complete());
        assert_eq!(built.graph.vertex_count(), 4);
        assert!(arc_transitivity_check(&built.action, &built.graph).unwrap());
    }

    #[test]
    fn index_two_stabilizer_gives_a_single_edge() {
        // |G:H| = 2 forces valency 1: the graph is one edge.
        let g = pg(4, &["(1,2)", "(3,4)"]);
        let h = pg(4, &["(3,4)"]);
        let x = P::parse_cycles("(1,2)", 4).unwrap();
        let (spec, report) = analyze_spec(&g, &h, &x).unwrap();
        assert_eq!(report.vertex_count, BigUint::from(2u8));
        assert_eq!(report.valency, BigUint::from(1u8));
        let built = build_graph(&spec, 10).unwrap();
        assert_eq!(built.graph.edge_count(), 1);
    }

    #[test]
    fn disconnected_spec_detected() {
        // <(1..5), (2,5)(3,4)> is dihedral of order 10, not A5.
        let a5 = pg(5, &["(1,2,3)", "(3,4,5)"]);
        let h = pg(5, &["(1,2,3,4,5)"]);
        let x = P::parse_cycles("(2,5)(3,4)", 5).unwrap();
        let (_, report) = analyze_spec(&a5, &h, &x).unwrap();
        assert!(!report.connected);
    }

    #[test]
    fn x_inside_h_rejected() {
        let a4 = pg(4, &["(1,2,3)", "(2,3,4)"]);
        let h = pg(4, &["(1,2,3)"]);
        let x = P::parse_cycles("(1,3,2)", 4).unwrap();
        assert!(matches!(analyze_spec(&a4, &h, &x), Err(Error::XInsideH)));
    }

    #[test]
    fn graph_props_cases() {
        let cube = cube_graph();
        let p = graph_props(&cube);
        assert!(p.regular && p.valency == Some(3) && p.connected && p.bipartite);

        let empty = Graph::from_edges(3, &[]).unwrap();
        let p = graph_props(&empty);
        assert!(p.regular && p.valency == Some(0) && !p.connected);

        let c5 = cycle_graph(5);
        let p = graph_props(&c5);
        assert!(p.connected && !p.bipartite && p.valency == Some(2));
    }

    #[test]
    fn quotient_examples() {
        // Cube / antipodal map = K4, valency 3 preserved.
        let cube = cube_graph();
        let antipodal = P::from_images(vec![7, 6, 5, 4, 3, 2, 1, 0]).unwrap();
        let k = PermGroup::new(8, vec![antipodal]).unwrap();
        let aut = pg(8, &["(1,2)(3,4)(5,6)(7,8)", "(2,3)(6,7)", "(1,2,4,3)(5,6,8,7)"]);
        let (q, report) = quotient_graph(&cube, &aut, &k, false).unwrap();
        assert!(q.is_complete());
        assert_eq!(q.vertex_count(), 4);
        assert!(report.semiregular);
        assert!(report.valency_preserved);

        // 6-cycle / <rotation^3> = triangle, valency 2 preserved.
        let c6 = cycle_graph(6);
        let rot3 = P::parse_cycles("(1,4)(2,5)(3,6)", 6).unwrap();
        let k = PermGroup::new(6, vec![rot3]).unwrap();
        let d6 = pg(6, &["(1,2,3,4,5,6)", "(2,6)(3,5)"]);
        let (q, report) = quotient_graph(&c6, &d6, &k, false).unwrap();
        assert_eq!(q.vertex_count(), 3);
        assert_eq!(graph_props(&q).valency, Some(2));
        assert!(report.semiregular);
        assert!(report.valency_preserved);
        assert!(report.normal_in_g);

        // Trivial k is degenerate only when it has < 2 orbits; on 6 vertices
        // the trivial group has 6 orbits and the quotient is a copy.
        let trivial = PermGroup::trivial(6);
        let (q, _) = quotient_graph(&c6, &d6, &trivial, false).unwrap();
        assert_eq!(q.vertex_count(), 6);
        assert_eq!(q.edge_count(), c6.edge_count());
    }

    #[test]
    fn quotient_rejects_non_automorphism() {
        let c6 = cycle_graph(6);
        let bad = PermGroup::new(6, vec![P::parse_cycles("(1,2)", 6).unwrap()]).unwrap();
        let d6 = pg(6, &["(1,2,3,4,5,6)", "(2,6)(3,5)"]);
        assert!(matches!(
            quotient_graph(&c6, &d6, &bad, false),
            Err(Error::NotAnAutomorphism(_))
        ));
    }

    #[test]
    fn arc_transitivity_cases() {
        // Z6 rotation on the 6-cycle: vertex-transitive, not arc-transitive.
        let c6 = cycle_graph(6);
        let z6 = pg(6, &["(1,2,3,4,5,6)"]);
        assert!(!arc_transitivity_check(&z6, &c6).unwrap());
        let d6 = pg(6, &["(1,2,3,4,5,6)", "(2,6)(3,5)"]);
        assert!(arc_transitivity_check(&d6, &c6).unwrap());
    }

    #[test]
    fn rpart_check_on_k4() {
        let a4 = pg(4, &["(1,2,3)", "(2,3,4)"]);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let rep = stabilizer_rpart_check(&a4, &k4, 0, 3).unwrap();
        assert_eq!(rep.stabilizer_order, BigUint::from(3u8));
        assert!(rep.pass);

        let s4 = pg(4, &["(1,2)", "(1,2,3,4)"]);
        let rep = stabilizer_rpart_check(&s4, &k4, 0, 3).unwrap();
        assert_eq!(rep.stabilizer_order, BigUint::from(6u8));
        assert!(rep.pass);
    }

    #[test]
    fn json_and_text_round_trip() {
        let cube = cube_graph();
        let j = GraphJson::from(&cube);
        assert_eq!(j.to_graph().unwrap(), cube);
        let text = graph_to_edge_list_text(&cube);
        assert_eq!(graph_from_edge_list_text(&text, 8).unwrap(), cube);
    }
}
