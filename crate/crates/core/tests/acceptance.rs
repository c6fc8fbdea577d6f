//! One line per acceptance criterion; exits nonzero if any fails.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use turanlab::canon::canonical_graph6;
use turanlab::counting::{contains_clique, count_cliques};
use turanlab::enumerate::enumerate_graphs;
use turanlab::lab::{
    check_degree_lemma, check_ratio_monotone, density_bracket, distance_profile, heavy_subset_census,
    max_distance_from, supersaturation_check, symmetrize, turan_edit_distance,
};
use turanlab::rational::binomial;
use turanlab::{
    blow_up, count_copies, enumerate_free_graphs, generalized_turan, is_degenerate_pair, turan_graph,
    zykov_clique_bound, Computing, Graph, Rational,
};

type Outcome = Result<String, String>;

fn k(n: usize) -> Graph {
    Graph::complete(n).unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Deletes edges of the lowest-index clique until `g` is `K_k`-free.
fn make_clique_free(mut g: Graph, k: usize) -> Graph {
    'outer: while contains_clique(k, &g, g.vertices()) {
        for (u, v) in g.edges().collect::<Vec<_>>() {
            if contains_clique(k - 2, &g, g.neighbors(u) & g.neighbors(v)) {
                g.remove_edge(u, v);
                continue 'outer;
            }
        }
    }
    g
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

type Table = Vec<(usize, u64)>;
type Tables = Vec<((usize, usize), Table)>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

/// Tables shared by the exactness criteria and the monotonicity check.
fn zykov_tables() -> Result<Tables, String> {
    static CACHE: OnceLock<Result<Tables, String>> = OnceLock::new();
    CACHE.get_or_init(compute_zykov_tables).clone()
}

fn mantel_table() -> Result<Table, String> {
    static CACHE: OnceLock<Result<Table, String>> = OnceLock::new();
    CACHE.get_or_init(compute_mantel_table).clone()
}

fn compute_zykov_tables() -> Result<Tables, String> {
    let mut tables = Vec::new();
    for (r, kk) in [(2, 3), (2, 4), (3, 4)] {
        let mut table = Vec::new();
        for n in 4..=8 {
            let rec = generalized_turan(n, &k(r), &k(kk)).map_err(|e| e.to_string())?;
            let t = turan_graph(n, kk - 1).unwrap();
            let expect = count_cliques(r, &t).unwrap();
            ensure(rec.value == expect, || {
                format!("ex({n}, K{r}, K{kk}) = {} but T has {expect}", rec.value)
            })?;
            ensure(!rec.truncated && rec.witnesses == vec![canonical_graph6(&t)], || {
                format!("ex({n}, K{r}, K{kk}) witnesses {:?}", rec.witnesses)
            })?;
            table.push((n, rec.value));
        }
        tables.push(((r, kk), table));
    }
    Ok(tables)
}

fn compute_mantel_table() -> Result<Table, String> {
    let mut table = Vec::new();
    for n in 2..=10 {
        let rec = generalized_turan(n, &k(2), &k(3)).map_err(|e| e.to_string())?;
        ensure(rec.value == (n * n / 4) as u64, || {
            format!("ex({n}, K2, K3) = {}", rec.value)
        })?;
        table.push((n, rec.value));
    }
    Ok(table)
}

fn criterion_1() -> Outcome {
    let tables = zykov_tables()?;
    Ok(format!(
        "{} (r, k) pairs x n = 4..8 match T_(k-1)(n), unique witness",
        tables.len()
    ))
}

fn criterion_2() -> Outcome {
    let t = mantel_table()?;
    Ok(format!(
        "ex(n, K2, K3) = floor(n^2/4) for n = 2..10 (ex(10) = {})",
        t.last().unwrap().1
    ))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let patterns = [k(2), k(3), Graph::path(3).unwrap(), Graph::cycle(4).unwrap()];
    let mut checks = 0;
    for _ in 0..50 {
        let n = rng.gen_range(4..=12);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        for h in &patterns {
            for m in h.n()..=n.min(8) {
                let threshold = Rational::new(rng.gen_range(0..30), rng.gen_range(1..4));
                let c = heavy_subset_census(&g, h, m, threshold).map_err(|e| e.to_string())?;
                let h_copies = u128::from(count_copies(h, &g).unwrap());
                let coeff = binomial((n - h.n()) as u64, (m - h.n()) as u64).unwrap();
                ensure(c.copy_sum == coeff * h_copies, || {
                    format!("copy-sum {} != {coeff} * {h_copies}", c.copy_sum)
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} (graph, pattern, m) identities exact"))
}

fn criterion_4() -> Outcome {
    let mut tables = zykov_tables()?;
    tables.push(((2, 3), mantel_table()?));
    for ((r, _), table) in &tables {
        let v = check_ratio_monotone(table, *r).map_err(|e| e.to_string())?;
        ensure(v.is_empty(), || format!("violations {v:?}"))?;
    }
    Ok(format!("{} tables, zero violations", tables.len()))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut steps = 0;
    for i in 0..1000 {
        let kk = if i % 2 == 0 { 3 } else { 4 };
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.2..0.9);
        let g = make_clique_free(random_graph(&mut rng, n, p), kk);
        let r = rng.gen_range(1..kk);
        let t = symmetrize(&g, r).map_err(|e| format!("graph {i}: {e}"))?;
        ensure(t.steps.len() <= t.step_cap, || format!("graph {i}: over cap"))?;
        let mut prev = t.start_cliques;
        for s in &t.steps {
            ensure(s.cliques_after >= prev, || format!("graph {i}: clique count decreased"))?;
            prev = s.cliques_after;
        }
        ensure(t.end.is_complete_multipartite(), || {
            format!("graph {i}: end not complete multipartite")
        })?;
        ensure(!contains_clique(kk, &t.end, t.end.vertices()), || {
            format!("graph {i}: end contains K{kk}")
        })?;
        let bound = zykov_clique_bound(n, r, kk).unwrap();
        ensure(t.end_cliques() <= bound, || {
            format!("graph {i}: {} > bound {bound}", t.end_cliques())
        })?;
        steps += t.steps.len();
    }
    Ok(format!("1000 traces, {steps} steps in total"))
}

fn criterion_6() -> Outcome {
    let connected: Vec<Graph> = (1..=5)
        .flat_map(|n| enumerate_graphs(n).unwrap().filter(Graph::is_connected))
        .collect();
    let mut degenerate = 0;
    for h in &connected {
        for f in &connected {
            if h.n() * f.n() > 64 {
                continue;
            }
            let predicted = is_degenerate_pair(h, f).map_err(|e| e.to_string())?;
            let b = blow_up(h, f.n()).unwrap();
            let actual = count_copies(f, &b).map_err(|e| e.to_string())? > 0;
            ensure(predicted == actual, || {
                format!("h={h:?} f={f:?}: predicted {predicted}, blow-up says {actual}")
            })?;
            degenerate += usize::from(predicted);
        }
    }
    Ok(format!(
        "{} connected patterns, {} pairs, {degenerate} degenerate",
        connected.len(),
        connected.len().pow(2)
    ))
}

fn criterion_7() -> Outcome {
    let alphas = [Rational::from_integer(0), Rational::new(1, 4), Rational::new(1, 2)];
    let mut hypotheses = 0;
    let mut cases = 0;
    for (kk, max_n, rs) in [(3, 9, &[2][..]), (4, 8, &[2, 3][..])] {
        for n in 1..=max_n {
            for g in enumerate_free_graphs(n, &k(kk)).unwrap() {
                for x in 0..n {
                    for &r in rs {
                        for &a in &alphas {
                            let c = check_degree_lemma(&g, x, kk, r, a).map_err(|e| e.to_string())?;
                            ensure(c.conclusion_holds != Some(false), || {
                                format!("counterexample {g:?} x={x} k={kk} r={r} alpha={a}")
                            })?;
                            hypotheses += usize::from(c.hypothesis);
                            cases += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{cases} (graph, vertex, r, alpha) cases, {hypotheses} meet the hypothesis, 0 counterexamples"
    ))
}

fn criterion_8() -> Outcome {
    let dist = |g: &Graph, p: usize| turan_edit_distance(g, p).map(|r| r.distance).map_err(|e| e.to_string());
    let t2 = turan_graph(10, 2).unwrap();
    ensure(dist(&t2, 2)? == 0, || "T_2(10)".into())?;
    ensure(dist(&turan_graph(12, 3).unwrap(), 3)? == 0, || "T_3(12)".into())?;
    let mut minus = t2.clone();
    for (u, v) in t2.edges().step_by(7).take(3) {
        minus.remove_edge(u, v);
    }
    ensure(dist(&minus, 2)? == 3, || "T_2(10) minus three edges".into())?;
    ensure(dist(&Graph::cycle(10).unwrap(), 2)? == 15, || "C_10".into())?;
    let profile = distance_profile(enumerate_free_graphs(9, &k(3)).unwrap(), 2).map_err(|e| e.to_string())?;
    let near = max_distance_from(&profile, 18).unwrap_or(0);
    let wide = max_distance_from(&profile, 16).unwrap_or(0);
    ensure(near <= wide, || {
        format!("max distance at e >= 18 is {near} > {wide} at e >= 16")
    })?;
    Ok(format!(
        "fixed cases exact; K3-free n=9: max distance {near} for e >= 18, {wide} for e >= 16"
    ))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let c = Rational::new(1, 25);
    let bracket = density_bracket(&k(2), &k(3), 10, &mut Computing { catalog: None }).map_err(|e| e.to_string())?;
    let mut ratios = Vec::new();
    let mut lines = Vec::new();
    for n in [30usize, 40, 50, 60] {
        let mut g = turan_graph(n, 2).unwrap();
        let classes = g.multipartite_classes().unwrap();
        let mut added = 0;
        while added < n * n / 20 {
            let class = &classes[rng.gen_range(0..classes.len())];
            let u = class[rng.gen_range(0..class.len())];
            let v = class[rng.gen_range(0..class.len())];
            if u != v && g.add_edge(u, v) {
                added += 1;
            }
        }
        let r = supersaturation_check(&g, &k(2), &k(3), c, &bracket, &mut Computing { catalog: None })
            .map_err(|e| format!("n={n}: {e}"))?;
        ensure(r.bound_holds, || {
            format!("n={n}: bound {} > {} triangles", r.f_copy_lower_bound, r.true_f_copies)
        })?;
        let ratio = Rational::new(i128::from(r.true_f_copies), (n * n * n) as i128);
        ensure(ratio > Rational::from_integer(0), || format!("n={n}: no triangles"))?;
        ratios.push(ratio);
        lines.push(format!(
            "n={n} m={} hyp={} bound={} triangles={}",
            r.m, r.hypothesis, r.f_copy_lower_bound, r.true_f_copies
        ));
    }
    ensure(ratios[3] * 2 >= ratios[0], || {
        format!("ratio at 60 ({}) below half of ratio at 30 ({})", ratios[3], ratios[0])
    })?;
    Ok(lines.join("; "))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let g = random_graph(&mut rng, 40, 0.5);
    let start = Instant::now();
    let copies = count_copies(&k(4), &g).map_err(|e| e.to_string())?;
    let count_time = start.elapsed();
    ensure(count_time < Duration::from_secs(5), || {
        format!("K4 count took {count_time:?}")
    })?;
    let start = Instant::now();
    let total = enumerate_free_graphs(8, &k(4)).unwrap().count();
    let enum_time = start.elapsed();
    ensure(enum_time < Duration::from_secs(60), || {
        format!("enumeration took {enum_time:?}")
    })?;
    Ok(format!(
        "{copies} K4 in G(40, 1/2) in {count_time:.2?}; {total} K4-free graphs on 8 vertices in {enum_time:.2?}"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Zykov exactness", Duration::from_secs(120), criterion_1),
        ("Mantel line", Duration::from_secs(300), criterion_2),
        ("double-count identity", Duration::from_secs(120), criterion_3),
        ("ratio monotonicity", Duration::from_secs(60), criterion_4),
        ("symmetrization suite", Duration::from_secs(120), criterion_5),
        ("degenerate pairs vs blow-ups", Duration::from_secs(180), criterion_6),
        ("degree lemma sweep", Duration::from_secs(300), criterion_7),
        ("stability metric", Duration::from_secs(120), criterion_8),
        ("supersaturation experiment", Duration::from_secs(120), criterion_9),
        ("performance", Duration::from_secs(65), criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *budget => Err(format!("{detail}; over budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} [{elapsed:.2?}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} [{elapsed:.2?}]: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
