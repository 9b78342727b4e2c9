//! Acceptance suite: the computational claims the toolkit exists to
//! reproduce, each with its pinned expected outcome and runtime cap.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one
//! pass/fail line per criterion.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use symgraph_core::atlas;
use symgraph_core::cosetgraph::{
    analyze_spec, arc_transitivity_check, build_graph, cube_graph, cycle_graph, graph_props,
    quotient_graph,
};
use symgraph_core::numth::{cyclotomic, prime_powers_up_to, table1};
use symgraph_core::perm::Permutation;
use symgraph_core::search::claims::reproduce_claim;
use symgraph_core::stabchain::PermGroup;
use symgraph_core::Error;

fn report(criterion: &str, pass: bool, detail: &str, elapsed: Duration, cap: Duration) {
    println!(
        "criterion {criterion}: [{}] {detail} ({elapsed:.2?}, cap {cap:.0?})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
    assert!(
        elapsed < cap,
        "criterion {criterion} exceeded its runtime cap: {elapsed:?} >= {cap:?}"
    );
}

#[test]
fn criterion_1_zsigmondy_exception_table() {
    let t0 = Instant::now();
    let rep = reproduce_claim("ZSIG_EXCEPTIONS").unwrap();
    report(
        "1 (Zsigmondy exceptions)",
        rep.pass,
        &rep.summary.join("; "),
        t0.elapsed(),
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_2_prime_ratio_consequences() {
    let t0 = Instant::now();
    let rep = reproduce_claim("LEMMA_R_SCAN").unwrap();
    report(
        "2 (prime-ratio consequences)",
        rep.pass,
        &rep.summary.join("; "),
        t0.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_3_table1_enumeration() {
    let t0 = Instant::now();
    let line1 = reproduce_claim("TABLE1_LINE1").unwrap();
    let line3 = reproduce_claim("TABLE1_LINE3").unwrap();
    // Witness strings carry the condition column text.
    let bounds = table1::Bounds { main: 30, max_p: 2 };
    let i1 = table1::enumerate_table1(Some("1"), &bounds).unwrap();
    let witness_ok = i1.iter().all(|i| {
        i.witness.contains("r | n")
            && i.witness.contains("r^2 does not divide n")
            && i.witness.contains("n not prime")
    });
    let bounds3 = table1::Bounds { main: 8, max_p: 2 };
    let i3 = table1::enumerate_table1(Some("3"), &bounds3).unwrap();
    let witness3_ok = i3
        .iter()
        .all(|i| i.witness.contains("m >= 2") && i.witness.contains("mf = 2^e > 2"));
    report(
        "3 (table enumeration sanity)",
        line1.pass && line3.pass && witness_ok && witness3_ok,
        &format!(
            "line 1: {}; line 3: {}; witnesses carry the condition text",
            line1.summary.join(", "),
            line3.summary.join(", ")
        ),
        t0.elapsed(),
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_4_k12_reconstruction() {
    let t0 = Instant::now();
    let rep = reproduce_claim("K12_FROM_M12").unwrap();
    report(
        "4 (K12 from M12)",
        rep.pass,
        &rep.summary.join("; "),
        t0.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_5_psl2_11_cayley_graph() {
    let t0 = Instant::now();
    let rep = reproduce_claim("PSL2_11_CAYLEY").unwrap();
    report(
        "5 (PSL2(11) Cayley graph)",
        rep.pass,
        &rep.summary.join("; "),
        t0.elapsed(),
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_6_degree7_exhaustive() {
    let t0 = Instant::now();
    let z7 = reproduce_claim("A7_R7_Z7").unwrap();
    let f21 = reproduce_claim("A7_R7_F21").unwrap();
    // The F21 run passes on either computed answer, but only with the
    // exhaustiveness flag set and the conflict note emitted.
    let f21_ok = f21.pass && f21.exhaustive == Some(true) && f21.conflict_note.is_some();
    report(
        "6 (degree-7 exhaustive searches)",
        z7.pass && f21_ok,
        &format!(
            "Z7: {}; F21: {} conflict emitted: {}",
            z7.summary.join(", "),
            f21.summary.join(", "),
            f21.conflict_note.is_some()
        ),
        t0.elapsed(),
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_7_degree21_randomized() {
    let t0 = Instant::now();
    let f21 = reproduce_claim("A21_R7_F21").unwrap();
    let f63 = reproduce_claim("A21_R7_F63").unwrap();
    report(
        "7 (degree-21 randomized existence)",
        f21.pass && f63.pass,
        &format!("{}; {}", f21.summary.join(", "), f63.summary.join(", ")),
        t0.elapsed(),
        Duration::from_secs(1800),
    );
}

#[test]
fn criterion_8_m24_uniqueness_ingredients() {
    let t0 = Instant::now();
    // A budget exhaustion inside the claim surfaces as an error: a FAIL.
    let rep = match reproduce_claim("M24_UNIQUENESS") {
        Ok(rep) => rep,
        Err(Error::BudgetExceeded { nodes, .. }) => {
            panic!("criterion 8 FAIL: backtrack budget exceeded after {nodes} nodes")
        }
        Err(e) => panic!("criterion 8 FAIL: {e}"),
    };
    report(
        "8 (M24 uniqueness ingredients)",
        rep.pass,
        &rep.summary.join("; "),
        t0.elapsed(),
        Duration::from_secs(7200),
    );
}

// --------------------------------------------------------------------------
// Criterion 9: the engine property suites.

#[test]
fn criterion_9b_cyclotomic_product_identity() {
    let t0 = Instant::now();
    let mut checked = 0u64;
    for m in 1..=40u64 {
        for q in 2..=64u64 {
            let qb = BigUint::from(q);
            let mut product = BigUint::from(1u8);
            for d in cyclotomic::divisors(m) {
                product *= cyclotomic::cyclotomic_value(d, &qb);
            }
            let direct = qb.pow(m as u32) - BigUint::from(1u8);
            assert_eq!(product, direct, "product identity fails at m={m}, q={q}");
            checked += 1;
        }
    }
    report(
        "9b (cyclotomic product identity)",
        checked == 40 * 63,
        &format!("{checked} (m, q) pairs verified exhaustively"),
        t0.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_9b_zsigmondy_closed_form_equivalence() {
    // Exhaustive: the closed form agrees with the factorization route for
    // m <= 20 and prime powers q <= 32 (part of the same property tier).
    let t0 = Instant::now();
    let mut checked = 0;
    for m in 2..=20u64 {
        for q in prime_powers_up_to(32) {
            let rep = cyclotomic::primitive_part(m, &q).unwrap();
            let closed = cyclotomic::zsigmondy_exception(m, &q).unwrap();
            assert_eq!(
                rep.is_zsigmondy_exception, closed,
                "closed form disagrees at ({m}, {})",
                q.value
            );
            // Each primitive prime r satisfies m | r - 1.
            for (r, _) in &rep.primitive_primes {
                let r: BigUint = r.parse().unwrap();
                assert_eq!(
                    (r - BigUint::from(1u8)) % BigUint::from(m),
                    BigUint::from(0u8)
                );
            }
            checked += 1;
        }
    }
    report(
        "9b' (exception closed form + m | r-1)",
        checked > 0,
        &format!("{checked} grid points"),
        t0.elapsed(),
        Duration::from_secs(10),
    );
}

fn spec_corpus() -> Vec<(PermGroup, PermGroup, Permutation)> {
    // Deterministic corpus of coset-graph specs with <= 500 vertices:
    // small groups, a subgroup, and involutions outside it.
    let mut specs = Vec::new();
    let sources: Vec<PermGroup> = vec![
        atlas::builtin("A4").unwrap(),
        atlas::builtin("S4").unwrap(),
        atlas::builtin("A5").unwrap(),
        atlas::builtin("S5").unwrap(),
        atlas::builtin("A6").unwrap(),
        atlas::builtin("PSL2(7)").unwrap(),
        atlas::builtin("PSL2(11)").unwrap(),
        atlas::builtin("PSL2(13)").unwrap(),
        atlas::builtin("PSL3(2)").unwrap(),
    ];
    for g in sources {
        let mut subgroups: Vec<PermGroup> = vec![g.point_stabilizer(0).unwrap()];
        let elems = g.elements();
        if let Some(e3) = elems.iter().find(|e| e.order() == 3) {
            subgroups.push(PermGroup::new(g.degree(), vec![e3.clone()]).unwrap());
        }
        if let Some(e5) = elems.iter().find(|e| e.order() == 5) {
            subgroups.push(PermGroup::new(g.degree(), vec![e5.clone()]).unwrap());
        }
        for h in subgroups {
            if h.order() == BigUint::from(1u8) {
                continue;
            }
            let index = g.order() / h.order();
            if index > BigUint::from(500u32) {
                continue;
            }
            let mut taken = 0;
            for x in elems.iter().filter(|x| x.order() == 2) {
                if h.chain().is_member(x) {
                    continue;
                }
                specs.push((g.clone(), h.clone(), x.clone()));
                taken += 1;
                if taken >= 3 {
                    break;
                }
            }
        }
    }
    specs
}

#[test]
fn criterion_9c_predicate_vs_materialization() {
    let t0 = Instant::now();
    let specs = spec_corpus();
    assert!(specs.len() >= 50, "corpus too small: {}", specs.len());
    let mut built = 0;
    for (g, h, x) in &specs {
        let (spec, rep) = analyze_spec(g, h, x).unwrap();
        // Involutions always give an undirected graph.
        assert!(rep.undirected_ok);
        let bg = build_graph(&spec, 500).unwrap();
        let props = graph_props(&bg.graph);
        // Vertex degrees equal the predicted valency everywhere.
        let val = usize::try_from(&spec.valency).unwrap();
        assert_eq!(props.valency, Some(val));
        assert!(props.regular);
        // Predicate connectivity matches the materialized graph.
        assert_eq!(props.connected, rep.connected, "connectivity oracle mismatch");
        // The vertex action is vertex- and arc-transitive.
        assert!(bg.action.is_transitive());
        assert!(arc_transitivity_check(&bg.action, &bg.graph).unwrap());
        built += 1;
    }
    report(
        "9c (predicate vs materialization)",
        built >= 50,
        &format!("{built} specs built and cross-checked"),
        t0.elapsed(),
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_9d_quotient_valency_preservation() {
    let t0 = Instant::now();
    let mut cases = 0;
    // Cube / antipodal: valency 3 preserved onto K4.
    {
        let cube = cube_graph();
        let antipodal = Permutation::from_images(vec![7, 6, 5, 4, 3, 2, 1, 0]).unwrap();
        let k = PermGroup::new(8, vec![antipodal]).unwrap();
        let aut = PermGroup::new(
            8,
            vec![
                Permutation::parse_cycles("(1,2)(3,4)(5,6)(7,8)", 8).unwrap(),
                Permutation::parse_cycles("(2,3)(6,7)", 8).unwrap(),
                Permutation::parse_cycles("(1,2,4,3)(5,6,8,7)", 8).unwrap(),
            ],
        )
        .unwrap();
        let (q, rep) = quotient_graph(&cube, &aut, &k, false).unwrap();
        assert!(rep.semiregular && rep.valency_preserved && q.is_complete());
        cases += 1;
    }
    // Cycles (valency 2, the even prime) by central rotation subgroups.
    for (n, step, orbits) in [(6usize, 3u32, 3usize), (9, 3, 3), (15, 3, 3), (15, 5, 5)] {
        let c = cycle_graph(n);
        let rot: Vec<u32> = (0..n as u32).map(|v| (v + step) % n as u32).collect();
        let k = PermGroup::new(n, vec![Permutation::from_images(rot).unwrap()]).unwrap();
        let rot1: Vec<u32> = (0..n as u32).map(|v| (v + 1) % n as u32).collect();
        let refl: Vec<u32> = (0..n as u32).map(|v| (n as u32 - v) % n as u32).collect();
        let dihedral = PermGroup::new(
            n,
            vec![
                Permutation::from_images(rot1).unwrap(),
                Permutation::from_images(refl).unwrap(),
            ],
        )
        .unwrap();
        let (q, rep) = quotient_graph(&c, &dihedral, &k, false).unwrap();
        assert!(rep.semiregular, "rotation subgroup is semiregular");
        assert!(rep.normal_in_g, "rotations are normal in the dihedral group");
        assert!(
            rep.valency_preserved,
            "valency 2 must survive the C{n}/{step} quotient"
        );
        assert_eq!(q.vertex_count(), n / usize::try_from(&k.order()).unwrap());
        assert_eq!(rep.orbit_count, orbits);
        cases += 1;
    }
    report(
        "9d (quotient valency preservation)",
        cases == 5,
        &format!("{cases} prime-valency quotient instances"),
        t0.elapsed(),
        Duration::from_secs(60),
    );
}

// --------------------------------------------------------------------------
// Criterion 9a: brute-force oracle equivalence on random subgroups of S7.

/// Independent order/membership oracle: closure under multiplication.
fn brute_closure(degree: usize, gens: &[Permutation]) -> std::collections::HashSet<Permutation> {
    let mut set: std::collections::HashSet<Permutation> =
        std::iter::once(Permutation::identity(degree)).collect();
    let mut frontier: Vec<Permutation> = vec![Permutation::identity(degree)];
    while let Some(e) = frontier.pop() {
        for g in gens {
            let f = &e * g;
            if set.insert(f.clone()) {
                frontier.push(f);
            }
        }
    }
    set
}

#[test]
fn criterion_9a_brute_force_oracle_corpus() {
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use symgraph_core::backtrack::{self, Budget};

    let t0 = Instant::now();
    let s7 = atlas::builtin("S7").unwrap();
    let all: Vec<Permutation> = s7.elements();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    let pick = |rng: &mut rand_chacha::ChaCha8Rng| all[rng.random_range(0..all.len())].clone();
    let budget = Budget::default();
    let mut trials = 0;
    while trials < 200 {
        let gen_count = 1 + (trials % 3);
        let gens: Vec<Permutation> = (0..gen_count).map(|_| pick(&mut rng)).collect();
        let g = PermGroup::new(7, gens.clone()).unwrap();
        let closure = brute_closure(7, g.generators());

        // Order oracle.
        assert_eq!(
            g.order(),
            BigUint::from(closure.len()),
            "order disagrees with brute-force closure"
        );

        // Membership oracle.
        for _ in 0..5 {
            let probe = pick(&mut rng);
            assert_eq!(
                g.contains(&probe).unwrap(),
                closure.contains(&probe),
                "membership disagrees on {probe}"
            );
        }

        // Subgroup k from words in g's generators.
        let word = |rng: &mut rand_chacha::ChaCha8Rng| -> Permutation {
            let mut w = Permutation::identity(7);
            for _ in 0..rng.random_range(1..4) {
                w = &w * &g.generators()[rng.random_range(0..g.generators().len())];
            }
            w
        };
        let k = PermGroup::new(7, vec![word(&mut rng)]).unwrap();
        let kset = brute_closure(7, k.generators());

        // Normalizer oracle.
        let brute_n: Vec<&Permutation> = closure
            .iter()
            .filter(|x| k.generators().iter().all(|s| kset.contains(&s.conjugate_by(x))))
            .collect();
        let fast_n = backtrack::normalizer(&g, &k, budget).unwrap().group;
        assert_eq!(fast_n.order(), BigUint::from(brute_n.len()), "normalizer order");
        for x in &brute_n {
            assert!(fast_n.contains(x).unwrap(), "normalizer misses {x}");
        }

        // Monotonicity under ambient restriction: N_h(k) = N_g(k) meet h.
        let mut h_gens = k.generators().to_vec();
        h_gens.push(word(&mut rng));
        let h = PermGroup::new(7, h_gens).unwrap();
        let n_h = backtrack::normalizer(&h, &k, budget).unwrap().group;
        let meet = backtrack::intersection(&fast_n, &h, budget).unwrap().group;
        assert_eq!(n_h.order(), meet.order(), "normalizer monotonicity");

        // Centralizer oracle.
        let brute_c: Vec<&Permutation> = closure
            .iter()
            .filter(|x| k.generators().iter().all(|s| &(s * x) == &(*x * s)))
            .collect();
        let fast_c = backtrack::centralizer_group(&g, &k, budget).unwrap().group;
        assert_eq!(fast_c.order(), BigUint::from(brute_c.len()), "centralizer order");
        // The centralizer sits inside the normalizer, and k normalizes itself.
        assert!(fast_n.contains_group(&fast_c).unwrap());
        assert!(fast_n.contains_group(&k).unwrap());

        // Intersection oracle against an unrelated group.
        let m = PermGroup::new(7, vec![pick(&mut rng), pick(&mut rng)]).unwrap();
        let mset = brute_closure(7, m.generators());
        let brute_i: Vec<&Permutation> = closure.iter().filter(|x| mset.contains(x)).collect();
        let fast_i = backtrack::intersection(&g, &m, budget).unwrap().group;
        assert_eq!(fast_i.order(), BigUint::from(brute_i.len()), "intersection order");

        trials += 1;
    }
    report(
        "9a (brute-force oracle equivalence)",
        trials >= 200,
        &format!("{trials} random subgroup trials, five oracles each"),
        t0.elapsed(),
        Duration::from_secs(300),
    );
}
