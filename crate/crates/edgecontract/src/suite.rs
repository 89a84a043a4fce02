//! The desk-scale acceptance suite: ten exact checks, each with a time budget.

use std::time::{Duration, Instant};

use edgecontract_core::cellgraph::{enumerate_graphs, hom_set, random_graph, shapes, CellGraph, Edge};
use edgecontract_core::exactmath::{factorial, int, rat, Rational};
use edgecontract_core::frobenius::{
    center_of_group_algebra, cyclic_group_generators, group_closure, identities, symmetric_group_generators,
    AlgebraElement, FrobeniusAlgebra, DEFAULT_GROUP_CAP,
};
use edgecontract_core::hgraph::{enumerate_weighted, DEFAULT_ENUMERATION_CAP};
use edgecontract_core::hurwitz::{
    calh, factorization_count, factorization_tuples, hurwitz_h, jpt_01, jpt_02, partitions, tree_count, Profile,
};
use edgecontract_core::mirror::{spectral_y, summary, verify_f01, verify_f02};
use edgecontract_core::tqft::{closed_value, expand_edge, random_element, verify_independence, TqftError};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub number: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {} {}: {} ({:.2}s of {}s)",
            self.number,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        )
    }
}

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub struct Criterion {
    pub number: usize,
    pub title: &'static str,
    pub budget: Duration,
    run: fn(u64) -> Check,
}

pub fn criteria() -> Vec<Criterion> {
    let c = |number, title, secs, run| Criterion {
        number,
        title,
        budget: Duration::from_secs(secs),
        run,
    };
    vec![
        c(1, "orbifold example", 10, orbifold_example as fn(u64) -> Check),
        c(2, "tree numbers", 1, tree_numbers),
        c(3, "closed-form agreement", 30, closed_forms),
        c(4, "factorization oracle", 300, factorization_oracle),
        c(5, "graph independence", 300, graph_independence),
        c(6, "closed-surface invariants", 1, closed_surfaces),
        c(7, "Frobenius identities", 10, frobenius_identities),
        c(8, "Hom-set examples", 1, hom_examples),
        c(9, "mirror identities", 120, mirror_identities),
        c(10, "commutativity of contractions", 120, commutativity),
    ]
}

impl Criterion {
    pub fn run(&self, seed: u64) -> Outcome {
        let start = Instant::now();
        let result = (self.run)(seed);
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if passed && elapsed > self.budget {
            passed = false;
            detail = format!("{detail}; over budget");
        }
        Outcome {
            number: self.number,
            title: self.title,
            passed,
            detail,
            elapsed,
            budget: self.budget,
        }
    }
}

pub fn run_all(seed: u64) -> Vec<Outcome> {
    criteria().iter().map(|c| c.run(seed)).collect()
}

fn orbifold_example(_: u64) -> Check {
    let want = rat(9, 2);
    let tuples = factorization_tuples(2, 0, &[3, 1]).map_err(|e| e.to_string())?;
    let paths = [
        ("recursion", calh(2, 0, &[3, 1])),
        ("closed form", int(3) * jpt_02(2, 3, 1)),
        ("factorizations", int(3) * factorization_count(2, 0, &[3, 1]).map_err(|e| e.to_string())?),
        ("graphs", enumerate_weighted(2, 0, &[3, 1], DEFAULT_ENUMERATION_CAP).map_err(|e| e.to_string())?),
    ];
    for (name, v) in &paths {
        ensure(*v == want, || format!("{name} gives {v}"))?;
    }
    ensure(tuples == 72, || format!("{tuples} tuples"))?;
    Ok("9/2 four ways, 72 tuples".into())
}

fn tree_numbers(_: u64) -> Check {
    let mut seq = Vec::new();
    for d in 1..=8u32 {
        let t = Rational::from_integer(tree_count(d).into());
        ensure(t == int(d.into()).pow(d as i32 - 2), || format!("T({d}) = {t}"))?;
        ensure(t == factorial(d - 1) * calh(1, 0, &[d]), || format!("recursion differs at d={d}"))?;
        seq.push(t.to_string());
    }
    ensure(seq[..6] == ["1", "1", "3", "16", "125", "1296"], || format!("{seq:?}"))?;
    Ok(format!("sequence {}", seq.join(",")))
}

fn closed_forms(_: u64) -> Check {
    let mut n = 0;
    for r in 1..=3u32 {
        for d in r..=8 * r {
            let got = hurwitz_h(r, 0, &[d]);
            ensure(got == jpt_01(r, d), || format!("(0,1) r={r} d={d}: {got} vs {}", jpt_01(r, d)))?;
            n += 1;
        }
        for m1 in 1..=6 {
            for m2 in 1..=6 {
                let got = hurwitz_h(r, 0, &[m1, m2]);
                ensure(got == jpt_02(r, m1, m2), || format!("(0,2) r={r} ({m1},{m2}): {got}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} values"))
}

/// Distinct orderings of a partition.
fn orderings(mu: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = mu.to_vec();
    cur.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

fn factorization_oracle(_: u64) -> Check {
    let mut n = 0;
    for r in 1..=2u32 {
        for d in 1..=6u32 {
            for mu in partitions(d) {
                for g in 0.. {
                    let p = Profile::new(r, g, &mu);
                    match p.s() {
                        Some(s) if s <= 4 => {}
                        _ => break,
                    }
                    if !p.is_admissible() {
                        continue;
                    }
                    for m in orderings(&mu) {
                        let direct = factorization_count(r, g, &m).map_err(|e| e.to_string())?;
                        let h = hurwitz_h(r, g, &m);
                        ensure(direct == h, || format!("r={r} g={g} {m:?}: {direct} vs {h}"))?;
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{n} ordered profiles"))
}

fn four_algebras() -> Vec<(&'static str, Arc<FrobeniusAlgebra>)> {
    vec![
        ("trivial", FrobeniusAlgebra::trivial()),
        ("dual-numbers", FrobeniusAlgebra::dual_numbers()),
        ("center:Z2", center_of_group_algebra(&cyclic_group_generators(2)).expect("Z2")),
        ("center:S3", center_of_group_algebra(&symmetric_group_generators(3)).expect("S3")),
    ]
}

fn graph_independence(seed: u64) -> Check {
    let mut graphs: Vec<CellGraph> = enumerate_graphs(4);
    let exhaustive = graphs.len();
    for k in 0..200u64 {
        let edges = (k % 7) as usize;
        graphs.push(random_graph(None, None, edges, seed.wrapping_add(k)).map_err(|e| e.to_string())?);
    }
    let mut evaluations = 0;
    for (name, a) in four_algebras() {
        for (k, g) in graphs.iter().enumerate() {
            let rep = verify_independence(g, &a, 3, seed ^ k as u64).map_err(|e| format!("{name}: {e} on {g:?}"))?;
            evaluations += rep.evaluations;
        }
    }
    Ok(format!("{exhaustive} enumerated + 200 random graphs, {evaluations} evaluations"))
}

fn closed_surfaces(_: u64) -> Check {
    let gens = symmetric_group_generators(3);
    let group: Vec<_> = group_closure(&gens, DEFAULT_GROUP_CAP).map_err(|e| e.to_string())?.into_iter().collect();
    let commuting = group
        .iter()
        .flat_map(|a| group.iter().map(move |b| (a, b)))
        .filter(|(a, b)| b.iter().map(|&x| a[x]).eq(a.iter().map(|&x| b[x])))
        .count();
    let oracle = rat(commuting as i64, group.len() as i64);
    let s3 = center_of_group_algebra(&gens).map_err(|e| e.to_string())?;
    ensure(s3.z_invariant(1) == oracle && oracle == int(3), || format!("S3: {} vs {oracle}", s3.z_invariant(1)))?;
    let z2 = center_of_group_algebra(&cyclic_group_generators(2)).map_err(|e| e.to_string())?;
    for g in 0..=5 {
        ensure(z2.z_invariant(g) == int(1 << g), || format!("Z2 g={g}: {}", z2.z_invariant(g)))?;
    }
    let dual = FrobeniusAlgebra::dual_numbers();
    ensure(dual.z_invariant(1) == int(2), || "dual g=1".into())?;
    for g in 2..=6 {
        ensure(dual.z_invariant(g) == int(0), || format!("dual g={g}"))?;
    }
    Ok(format!("S3 torus {commuting}/{} = 3", group.len()))
}

fn frobenius_identities(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 0;
    for (name, a) in four_algebras() {
        let fail = |what: &str| format!("{name}: {what}");
        for arity in 1..=4 {
            ensure(identities::symmetric_counit(&a, arity), || fail("symmetric"))?;
        }
        ensure(identities::euler_two_ways(&a), || fail("Euler element"))?;
        for trial in 0..100 {
            let v: Vec<_> = (0..4).map(|_| random_element(&a, &mut rng)).collect();
            let checks = [
                ("delta m", identities::delta_m(&v[0], &v[1])),
                ("prod=coprod", identities::prod_coprod(&v[0], &v[1])),
                ("complete set", identities::complete_set(&v[0])),
                ("Frobenius", identities::frobenius_relation(&v[0], &v[1], &v[2])),
                ("CohFT 0", identities::cohft0(&v[0], &v[1])),
                ("CohFT 1", identities::cohft1(&a, trial % 3, &v[..3])),
                ("CohFT 2", identities::cohft2(&a, 1 + trial % 2, &v[..3])),
                ("CohFT 3", identities::cohft3(&a, trial % 2, &v[..2], 1, &v[2..])),
            ];
            for (what, c) in checks {
                ensure(c == Ok(true), || format!("{} on trial {trial}: {c:?}", fail(what)))?;
            }
            let g = trial % 3;
            let forward = a.omega_closed(g, &v).map_err(|e| e.to_string())?;
            let reversed: Vec<_> = v.iter().rev().cloned().collect();
            ensure(a.omega_closed(g, &reversed) == Ok(forward), || fail("slot symmetry"))?;
            n += 9;
        }
    }
    Ok(format!("{n} random instances"))
}

fn hom_examples(_: u64) -> Check {
    let cases: [(&str, CellGraph, CellGraph, Vec<Vec<Edge>>); 4] = [
        ("path3 -> path2", shapes::path(3), shapes::path(2), vec![vec![Edge(0)], vec![Edge(2)]]),
        ("path3 -> point", shapes::path(3), CellGraph::bare_vertex(), vec![vec![Edge(0), Edge(2)]]),
        ("bigon -> loop", shapes::bigon(), shapes::one_loop(), vec![vec![Edge(0)]]),
        ("bigon -> two points", shapes::bigon(), CellGraph::bare_vertices(2), vec![vec![Edge(0), Edge(1)]]),
    ];
    let mut counts = Vec::new();
    for (name, from, to, want) in cases {
        let h = hom_set(&from, &to).map_err(|e| e.to_string())?;
        let reps: Vec<Vec<Edge>> = h.iter().map(|c| c.representative.clone()).collect();
        ensure(reps == want, || format!("{name}: {reps:?}"))?;
        counts.push(h.len().to_string());
    }
    Ok(format!("class counts {}", counts.join(",")))
}

fn mirror_identities(_: u64) -> Check {
    for r in 1..=4 {
        let c = spectral_y(r, 20).map_err(|e| format!("r={r}: {e}"))?;
        ensure(c.lambert_residual().map_err(|e| e.to_string())?.is_zero(), || format!("Lambert residual r={r}"))?;
    }
    for r in 1..=3 {
        let rep = verify_f01(r, 20).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || summary(&rep))?;
    }
    for r in 1..=2 {
        let rep = verify_f02(r, 12).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || summary(&rep))?;
    }
    Ok("spectral curve r<=4, F01 r<=3 at 20, F02 r<=2 at 12".into())
}

/// Value after contracting `x` then `y` by the axioms, the remaining graphs
/// valued by the closed form.
fn two_steps(g: &CellGraph, vs: &[AlgebraElement], x: Edge, y: Edge) -> Result<Rational, TqftError> {
    let mut total = int(0);
    for (h, w) in expand_edge(g, vs, x)? {
        for (k, u) in expand_edge(&h, &w, y)? {
            total += closed_value(&k, &u)?;
        }
    }
    Ok(total)
}

fn commutativity(seed: u64) -> Check {
    let a = center_of_group_algebra(&symmetric_group_generators(3)).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut labeled, mut relabeled) = (0, 0);
    for g in enumerate_graphs(5) {
        let t = g.graph_type().map_err(|e| e.to_string())?;
        let vs: Vec<_> = (0..g.vertex_count()).map(|_| random_element(&a, &mut rng)).collect();
        let want = a.omega_closed(t.g, &vs).map_err(|e| e.to_string())?;
        let edges = g.edges();
        for (k, &e1) in edges.iter().enumerate() {
            for &e2 in &edges[k + 1..] {
                let contract = |x: Edge, y: Edge| -> Result<(CellGraph, CellGraph), String> {
                    let once = g.contract(x).map_err(|e| e.to_string())?;
                    let twice = once.contract(y).map_err(|e| e.to_string())?;
                    Ok((once, twice))
                };
                let (after1, one) = contract(e1, e2)?;
                let (after2, two) = contract(e2, e1)?;
                let same = if after1.is_loop(e2) || after2.is_loop(e1) {
                    relabeled += 1;
                    one.shape_code() == two.shape_code()
                } else {
                    labeled += 1;
                    one.canonical_code() == two.canonical_code()
                };
                ensure(same, || format!("{g:?}: {e1:?} and {e2:?} do not commute"))?;
                for (x, y) in [(e1, e2), (e2, e1)] {
                    let v = two_steps(&g, &vs, x, y).map_err(|e| e.to_string())?;
                    ensure(v == want, || format!("{g:?}: {x:?} then {y:?} gives {v}, closed form {want}"))?;
                }
            }
        }
    }
    Ok(format!("{labeled} pairs label for label, {relabeled} with a loop step up to relabeling"))
}
