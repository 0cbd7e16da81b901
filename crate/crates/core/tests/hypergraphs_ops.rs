use hindlab::actions::{e_k_g, sphere_action};
use hindlab::complexes::GPoset;
use hindlab::corpus::{random_free_poset, Lcg};
use hindlab::graphs::{categorical_product, complete, cycle, petersen, Graph};
use hindlab::hypergraphs::{
    afl_bound, b_edge_complex, b_edge_hind, compatibility_hypergraph, complete_uniform, coloring_to_equivariant_map,
    cor10_bound, cor11_bound, cor11_formula, find_b_edge_certificate, hyper_chromatic_number, kneser_hypergraph,
    lem7_inclusion_check, lem9_homomorphism, optimal_hyper_coloring, thm2_bound, zhu_product, Cor11,
    CoindexCertificate, HyperChromatic, HyperError, Hypergraph, PosetAction,
};
use hindlab::index::{hind, HindBound};

/// Smallest `k` with a proper coloring, by enumeration; `None` for a
/// singleton edge.
fn hyper_chi_brute(h: &Hypergraph) -> Option<usize> {
    if h.edges().iter().any(|e| e.len() == 1) {
        return None;
    }
    let n = h.n();
    (1..=n.max(1)).find(|&k| {
        (0..k.pow(n as u32)).any(|mut code| {
            let colors: Vec<u32> = (0..n)
                .map(|_| {
                    let c = code % k;
                    code /= k;
                    c as u32
                })
                .collect();
            h.edges().iter().all(|e| e.iter().any(|&v| colors[v as usize] != colors[e[0] as usize]))
        })
    })
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn orbit_poset_antichain(p: u32, orbits: usize) -> PosetAction {
    let n = orbits * p as usize;
    let labels = (0..n).map(|i| format!("x{i}")).collect();
    let generator = (0..n as u32).map(|v| v - v % p + (v % p + 1) % p).collect();
    PosetAction::new(GPoset::from_covers(labels, &[]).unwrap(), p, generator).unwrap()
}

#[test]
fn hyper_chromatic_examples() {
    let e = Hypergraph::new(3, &[vec![0, 1, 2]]).unwrap();
    assert_eq!(hyper_chromatic_number(&e).unwrap(), HyperChromatic::Finite(2));
    let k5 = kneser_hypergraph(5, 1, 3).unwrap();
    assert_eq!(k5, complete_uniform(5, 3));
    // ⌈(n - r(k-1)) / (r-1)⌉ with n=5, r=3, k=1
    assert_eq!(hyper_chromatic_number(&k5).unwrap(), HyperChromatic::Finite(5usize.div_ceil(2)));
    assert_eq!(hyper_chi_brute(&k5), Some(3));
    let s = Hypergraph::new(2, &[vec![0], vec![0, 1]]).unwrap();
    assert_eq!(hyper_chromatic_number(&s).unwrap(), HyperChromatic::Infinite);
    assert!(matches!(Hypergraph::new(2, &[vec![]]), Err(HyperError::EmptyEdge)));
}

#[test]
fn zhu_examples() {
    let h = complete_uniform(4, 3);
    let unit = Hypergraph::new(1, &[vec![0]]).unwrap();
    let z = zhu_product(&h, &unit).unwrap();
    assert_eq!(z.edges(), h.edges());

    let k2 = Hypergraph::from_graph(&complete(2));
    let z = zhu_product(&k2, &k2).unwrap();
    let sizes: std::collections::BTreeSet<usize> = z.edges().iter().map(Vec::len).collect();
    assert_eq!(sizes.into_iter().collect::<Vec<_>>(), vec![2, 3, 4]);

    let gs: Vec<Graph> = vec![complete(2), complete(3), cycle(4).unwrap(), Graph::new(3, &[[0, 1], [1, 2]]).unwrap()];
    for a in &gs {
        for b in &gs {
            let z = zhu_product(&Hypergraph::from_graph(a), &Hypergraph::from_graph(b)).unwrap();
            let c = Hypergraph::from_graph(&categorical_product(a, b));
            assert_eq!(hyper_chi_brute(&z), hyper_chi_brute(&c));
        }
    }
}

#[test]
fn b_edge_examples() {
    let e = Hypergraph::new(2, &[vec![0, 1]]).unwrap();
    let b = b_edge_complex(&e, 2).unwrap();
    assert_eq!(b.complex().f_vector(), vec![2]);
    assert_eq!(hind(&b).unwrap().hind, 0);

    let k3 = Hypergraph::from_graph(&complete(3));
    let b = b_edge_complex(&k3, 2).unwrap();
    assert_eq!(b.complex().vertex_count(), 6);
    assert_eq!(hind(&b).unwrap().hind, 1);
    assert_eq!(b_edge_hind(&k3, 2).unwrap(), HindBound::Exact(1));

    let k43 = complete_uniform(4, 3);
    let b = b_edge_complex(&k43, 3).unwrap();
    assert_eq!(b.complex().vertex_count(), factorial(3) * k43.edge_count());
    assert!(matches!(b_edge_complex(&k43, 2), Err(HyperError::NotUniform(2))));
}

#[test]
fn compatibility_examples() {
    // comparability is reflexive, so on an antichain the edges are exactly
    // the r-subsets of single orbits
    let a = orbit_poset_antichain(3, 2);
    let c = compatibility_hypergraph(&a, 2).unwrap();
    assert_eq!(c.edge_count(), 6);
    assert!(c.edges().iter().all(|e| e[0] / 3 == e[1] / 3));
    assert_eq!(hyper_chromatic_number(&c).unwrap(), HyperChromatic::Finite(3));
    let c = compatibility_hypergraph(&a, 3).unwrap();
    assert_eq!(c.edges(), &[vec![0, 1, 2], vec![3, 4, 5]]);
    assert_eq!(hyper_chromatic_number(&c).unwrap(), HyperChromatic::Finite(2));

    let pa = PosetAction::face_poset_of(&e_k_g(2, 1));
    let c = compatibility_hypergraph(&pa, 2).unwrap();
    assert!(c.edge_count() > 0);
    let chi = hyper_chi_brute(&c).unwrap();
    assert_eq!(hyper_chromatic_number(&c).unwrap(), HyperChromatic::Finite(chi));

    // r = 2: x ~ y iff x is comparable to g·y for the nontrivial g
    let g = pa.generator();
    for x in 0..pa.len() as u32 {
        for y in x + 1..pa.len() as u32 {
            let want = pa.poset().comparable(x, g[y as usize]);
            assert_eq!(c.has_edge(&[x, y]), want);
        }
    }
    assert!(matches!(compatibility_hypergraph(&pa, 3), Err(HyperError::BadR { r: 3, p: 2 })));
}

#[test]
fn lambda_examples() {
    for (pa, r) in [
        (PosetAction::face_poset_of(&e_k_g(2, 1)), 2),
        (PosetAction::face_poset_of(&sphere_action(2)), 2),
        (PosetAction::face_poset_of(&e_k_g(3, 1)), 2),
        (PosetAction::face_poset_of(&e_k_g(3, 1)), 3),
    ] {
        let c = compatibility_hypergraph(&pa, r).unwrap();
        let (k, colors) = optimal_hyper_coloring(&c, 64).unwrap().unwrap();
        let rep = coloring_to_equivariant_map(&pa, &colors, k, r).unwrap();
        assert!(rep.simplicial && rep.equivariant && rep.holds);
        assert!(rep.min_orbit_colors >= (pa.p() as usize).div_ceil(r - 1));
        let bad = vec![0; pa.len()];
        assert!(matches!(
            coloring_to_equivariant_map(&pa, &bad, 1, r),
            Err(HyperError::NotProperColoring(_))
        ));
    }
}

#[test]
fn thm2_examples() {
    let pa = PosetAction::face_poset_of(&e_k_g(2, 3));
    let delta = pa.order_complex_action(12).unwrap();
    let h = hind(&delta).unwrap().hind;
    assert_eq!(h, 3);
    assert_eq!(thm2_bound(&pa, 2).unwrap(), h + 2);
    // r = p: ⌈p/(p-1)⌉ = 2, so the bound is ⌈(h+1)/(p-1)⌉ + 1
    let pa = PosetAction::face_poset_of(&e_k_g(3, 1));
    let h = hind(&pa.order_complex_action(12).unwrap()).unwrap().hind;
    assert_eq!(thm2_bound(&pa, 3).unwrap(), (h + 1).div_ceil(2) + 1);
    for r in 2..=3 {
        let c = compatibility_hypergraph(&pa, r).unwrap();
        let (k, colors) = optimal_hyper_coloring(&c, 64).unwrap().unwrap();
        assert!(c.is_proper_coloring(&colors));
        assert!(thm2_bound(&pa, r).unwrap() <= k);
    }
}

#[test]
fn afl_examples() {
    let k3 = Hypergraph::from_graph(&complete(3));
    assert_eq!(afl_bound(&k3, 2).unwrap(), 3);
    let k43 = complete_uniform(4, 3);
    let chi = hyper_chi_brute(&k43).unwrap();
    assert!(afl_bound(&k43, 3).unwrap() <= chi);
    let k5 = kneser_hypergraph(5, 1, 3).unwrap();
    assert!(afl_bound(&k5, 3).unwrap() <= 3);
    assert!(afl_bound(&Hypergraph::from_graph(&petersen()), 2).unwrap() <= 3);
    assert!(matches!(afl_bound(&k43, 4), Err(HyperError::NotPrime(4))));
}

#[test]
fn lem9_examples() {
    for (h, r) in [(Hypergraph::from_graph(&complete(3)), 2), (complete_uniform(4, 3), 3)] {
        let rep = lem9_homomorphism(&h, r).unwrap();
        assert!(rep.homomorphism && rep.pullback_proper);
        let b = b_edge_complex(&h, r).unwrap();
        let pa = PosetAction::face_poset_of(&b);
        let c = compatibility_hypergraph(&pa, r).unwrap();
        let (k, _) = optimal_hyper_coloring(&c, 64).unwrap().unwrap();
        assert!(k <= hyper_chi_brute(&h).unwrap());
    }
}

#[test]
fn lem7_examples() {
    let pa = PosetAction::face_poset_of(&e_k_g(2, 1));
    let rep = lem7_inclusion_check(&pa, &pa, 2).unwrap();
    assert!(rep.holds);
    assert_eq!(rep.vertices, pa.len() * pa.len());
    let mut rng = Lcg::new(77);
    for _ in 0..10 {
        let a = random_free_poset(&mut rng, 3, 3);
        let b = random_free_poset(&mut rng, 3, 2);
        for r in 2..=3 {
            let rep = lem7_inclusion_check(&a, &b, r).unwrap();
            assert!(rep.holds);
            assert_eq!(rep.vertices, a.len() * b.len());
        }
    }
    let c = PosetAction::face_poset_of(&e_k_g(3, 0));
    assert!(matches!(lem7_inclusion_check(&pa, &c, 2), Err(HyperError::PMismatch(2, 3))));
}

#[test]
fn cor11_examples() {
    // p = 2: (p-1) divides every m, so odd m is the only route to the bound
    assert!(matches!(cor11_formula(3, 2), Cor11::Bound(_)));
    assert!(matches!(cor11_formula(2, 2), Cor11::ConditionFailed { .. }));
    let k3 = Hypergraph::from_graph(&complete(3));
    let k4 = Hypergraph::from_graph(&complete(4));
    let z = zhu_product(&k3, &k4).unwrap();
    let chi = hyper_chromatic_number(&z).unwrap().finite().unwrap();
    assert_eq!(chi, 3);
    assert!(cor11_bound(&k3, &k4, 2).unwrap().value() <= chi);
    let k22 = zhu_product(&k3, &k3).unwrap();
    let chi = hyper_chromatic_number(&k22).unwrap().finite().unwrap();
    assert!(cor11_bound(&k3, &k3, 2).unwrap().value() <= chi);
}

#[test]
fn cor10_examples() {
    let k4 = Hypergraph::from_graph(&complete(4));
    let cert = find_b_edge_certificate(&k4, 2, 1).unwrap().unwrap();
    assert_eq!(cert.k, 1);
    let b = cor10_bound(&k4, &k4, 2, (&cert, &cert)).unwrap();
    assert_eq!(b, 1 + 2usize.div_ceil(1));
    let z = zhu_product(&k4, &k4).unwrap();
    assert!(b <= hyper_chromatic_number(&z).unwrap().finite().unwrap());

    let mut bad = cert.clone();
    bad.map[1] = bad.map[0];
    assert!(matches!(cor10_bound(&k4, &k4, 2, (&bad, &cert)), Err(HyperError::BadCertificate(_))));
    let short = CoindexCertificate { k: 1, map: vec![0] };
    assert!(cor10_bound(&k4, &k4, 2, (&short, &cert)).is_err());
}

#[test]
fn kneser_examples() {
    assert_eq!(kneser_hypergraph(5, 2, 2).unwrap(), Hypergraph::from_graph(&petersen()));
    assert_eq!(hyper_chi_brute(&kneser_hypergraph(5, 1, 3).unwrap()), Some(3));
    for (n, k, r) in [(6, 2, 2), (6, 2, 3), (7, 2, 3), (6, 1, 3), (8, 2, 2)] {
        let h = kneser_hypergraph(n, k, r).unwrap();
        let want = factorial(n) / (factorial(k).pow(r as u32) * factorial(r) * factorial(n - r * k));
        assert_eq!(h.edge_count(), want, "KG({n},{k},{r})");
    }
    assert!(kneser_hypergraph(3, 2, 2).is_err());
}
