use hindlab::corpus::graph_corpus;
use hindlab::graphs::{
    box_complex, box_hind, box_map, categorical_product, chromatic_number, complete, cycle, dsatur_coloring,
    homological_chromatic_number, kneser_graph, petersen, verify_hom_hedetniemi, Graph, GraphError,
};
use hindlab::index::hind;

/// Smallest `k` admitting a proper coloring, by enumerating all `k^n` maps.
fn chromatic_brute(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let total = k.pow(n as u32);
        let found = (0..total).any(|mut code| {
            let colors: Vec<u32> = (0..n)
                .map(|_| {
                    let c = code % k;
                    code /= k;
                    c as u32
                })
                .collect();
            g.is_proper_coloring(&colors)
        });
        if found {
            return k;
        }
    }
    n
}

#[test]
fn box_complex_examples() {
    let b = box_complex(&complete(2)).unwrap();
    assert_eq!(b.complex().vertex_count(), 4);
    assert_eq!(hind(&b).unwrap().hind, 0);
    assert_eq!(hind(&box_complex(&cycle(5).unwrap()).unwrap()).unwrap().hind, 1);
    assert_eq!(hind(&box_complex(&complete(4)).unwrap()).unwrap().hind, 2);
    assert_eq!(box_hind(&complete(4)).unwrap(), 2);
    assert!(matches!(box_complex(&Graph::new(3, &[]).unwrap()), Err(GraphError::EmptyComplex)));
}

#[test]
fn categorical_product_examples() {
    let k2 = complete(2);
    let p = categorical_product(&k2, &k2);
    assert_eq!((p.n(), p.edge_count()), (4, 2));
    assert!(p.edges().all(|(a, b)| p.degree(a) == 1 && p.degree(b) == 1));
    let c5x3 = categorical_product(&cycle(5).unwrap(), &complete(3));
    assert_eq!((c5x3.n(), c5x3.edge_count()), (15, 30));
    let gs = graph_corpus(4, 6);
    for a in &gs {
        for b in &gs {
            assert!(categorical_product(a, b).edge_count() <= 2 * a.edge_count() * b.edge_count());
        }
    }
}

#[test]
fn chromatic_examples() {
    assert_eq!(chromatic_number(&Graph::new(4, &[]).unwrap()).unwrap(), 1);
    assert_eq!(chromatic_number(&Graph::new(0, &[]).unwrap()).unwrap(), 0);
    assert_eq!(chromatic_number(&complete(5)).unwrap(), 5);
    assert_eq!(chromatic_number(&petersen()).unwrap(), 3);
    assert_eq!(chromatic_brute(&petersen()), 3);
    for g in graph_corpus(99, 25) {
        assert_eq!(chromatic_number(&g).unwrap(), chromatic_brute(&g));
        assert!(g.is_proper_coloring(&dsatur_coloring(&g)));
    }
    let big = Graph::new(30, &[[0, 1]]).unwrap();
    assert!(matches!(chromatic_number(&big), Err(GraphError::CapExceeded { n: 30, cap: 24 })));
}

#[test]
fn homological_chromatic_examples() {
    for n in 2..=5 {
        assert_eq!(homological_chromatic_number(&complete(n)).unwrap(), n);
    }
    assert_eq!(homological_chromatic_number(&cycle(5).unwrap()).unwrap(), 3);
    assert_eq!(homological_chromatic_number(&petersen()).unwrap(), 3);
    for g in graph_corpus(7, 20) {
        assert!(homological_chromatic_number(&g).unwrap() <= chromatic_brute(&g));
    }
}

#[test]
fn hedetniemi_examples() {
    let r = verify_hom_hedetniemi(&complete(2), &complete(3)).unwrap();
    assert_eq!((r.h_chi_product, r.h_chi_1.min(r.h_chi_2)), (2, 2));
    assert!(r.holds);
    let r = verify_hom_hedetniemi(&cycle(5).unwrap(), &complete(4)).unwrap();
    assert_eq!((r.h_chi_product, r.h_chi_1.min(r.h_chi_2)), (3, 3));
    let gs = graph_corpus(31, 4);
    for a in &gs {
        for b in &gs {
            let prod = categorical_product(a, b);
            let m = homological_chromatic_number(a).unwrap().min(homological_chromatic_number(b).unwrap());
            assert!(prod.n() > 10 || chromatic_brute(&prod) >= m);
        }
    }
}

#[test]
fn builders() {
    let k = kneser_graph(5, 2).unwrap();
    assert_eq!((k.n(), k.edge_count()), (10, 15));
    assert_eq!(k, petersen());
    assert_eq!(cycle(3).unwrap(), complete(3));
    for n in 2..7 {
        assert_eq!(kneser_graph(n, 1).unwrap(), complete(n));
    }
    assert!(cycle(2).is_err());
    assert!(Graph::new(3, &[[0, 3]]).is_err());
    assert!(Graph::new(3, &[[1, 1]]).is_err());
}

#[test]
fn homomorphisms_induce_equivariant_box_maps() {
    // C5 -> K3 by a proper 3-coloring
    let c5 = cycle(5).unwrap();
    let f = [0, 1, 0, 1, 2];
    assert!(c5.is_homomorphism_to(&complete(3), &f));
    let m = box_map(&c5, &complete(3), &f).unwrap();
    let (bs, bt) = (box_complex(&c5).unwrap(), box_complex(&complete(3)).unwrap());
    assert!(hindlab::index::is_equivariant(&bs, &bt, &m));
    assert!(matches!(box_map(&c5, &complete(3), &[0, 0, 0, 0, 0]), Err(GraphError::NotHomomorphism)));
}
