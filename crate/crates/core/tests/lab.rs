use turanlab::canon::are_isomorphic;
use turanlab::enumerate::enumerate_graphs;
use turanlab::lab::{check_degree_lemma, clique_density_limit, density_bracket, turan_edit_distance};
use turanlab::{enumerate_free_graphs, turan_graph, Catalog, Computing, Graph};

fn k(n: usize) -> Graph {
    Graph::complete(n).unwrap()
}

#[test]
fn clique_brackets_contain_the_limit_and_shrink() {
    let dir = tempfile::tempdir().unwrap();
    let mut cat = Catalog::open(dir.path().join("cat.tsv")).unwrap();
    for (r, kk) in [(2, 3), (2, 4), (3, 4)] {
        let limit = clique_density_limit(r, kk).unwrap();
        let mut prev = None;
        for max_n in r..=8 {
            let b = density_bracket(
                &k(r),
                &k(kk),
                max_n,
                &mut Computing {
                    catalog: Some(&mut cat),
                },
            )
            .unwrap();
            assert!(b.contains(&limit), "r={r} k={kk} n={max_n}: {b:?}");
            if let Some(p) = prev {
                assert!(b.upper <= p);
            }
            prev = Some(b.upper);
        }
    }
    // everything needed is now cached
    let before = cat.len();
    density_bracket(&k(3), &k(4), 8, &mut cat).unwrap();
    assert_eq!(cat.len(), before);
}

#[test]
fn zero_distance_exactly_for_turan_graphs() {
    for n in 1..=8 {
        let graphs: Vec<Graph> = enumerate_graphs(n).unwrap().collect();
        for parts in 1..=4 {
            let t = turan_graph(n, parts).unwrap();
            let mut zeros = 0;
            for g in &graphs {
                let d = turan_edit_distance(g, parts).unwrap().distance;
                assert_eq!(d == 0, are_isomorphic(g, &t), "n={n} parts={parts} {g:?}");
                zeros += usize::from(d == 0);
            }
            assert_eq!(zeros, 1);
        }
    }
}

#[test]
fn degree_lemma_on_small_triangle_free_graphs() {
    use turanlab::Rational;
    let mut checked = 0;
    for n in 1..=7 {
        for g in enumerate_free_graphs(n, &k(3)).unwrap() {
            for x in 0..n {
                let c = check_degree_lemma(&g, x, 3, 2, Rational::new(1, 4)).unwrap();
                assert_ne!(c.conclusion_holds, Some(false));
                checked += usize::from(c.hypothesis);
            }
        }
    }
    assert!(checked > 0);
}
