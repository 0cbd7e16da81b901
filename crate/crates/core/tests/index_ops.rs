use hindlab::actions::{disjoint_union_action, e_k_g, join_action, regularize, sphere_action};
use hindlab::complexes::SimplicialMap;
use hindlab::index::{
    certified_coindex, coindex_certificate_check, covering_class, covering_class_with_section, hind, hind_up_to,
    monotonicity_instance, verify_disjoint_union, verify_join_formula, verify_product_formula, verify_model_product,
    HindBound, IndexReport, ProductModel,
};

#[test]
fn hind_of_model_spaces() {
    for p in [2, 3, 5] {
        for k in 0..=4 {
            let r = hind(&e_k_g(p, k)).unwrap();
            assert_eq!((r.hind, r.dim), (k, k), "E{k} Z/{p}");
            assert!(r.vanishing.iter().all(|v| !v));
        }
    }
    for n in 0..=4 {
        assert_eq!(hind(&sphere_action(n)).unwrap().hind, n);
    }
}

#[test]
fn report_serializes_to_public_fields() {
    let r: IndexReport = hind(&sphere_action(2)).unwrap();
    assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"hind":2,"dim":2,"vanishing":[false,false,false]}"#);
    let r = hind(&e_k_g(3, 1).skeleton(0)).unwrap();
    assert_eq!(r.hind, 0);
}

#[test]
fn index_is_at_most_dimension_and_vanishing_is_an_upper_set() {
    let skeletal = join_action(&sphere_action(1), &sphere_action(0)).unwrap().skeleton(1);
    for a in [skeletal, e_k_g(3, 3).skeleton(2), sphere_action(3).skeleton(1)] {
        let r = hind(&a).unwrap();
        assert!(r.hind <= r.dim);
        let first = r.vanishing.iter().position(|&v| v);
        if let Some(k) = first {
            assert!(r.vanishing[k..].iter().all(|&v| v));
            assert_eq!(r.hind, k - 1);
        }
    }
}

#[test]
fn disjoint_union_takes_max() {
    for (a, b) in [(sphere_action(1), sphere_action(2)), (e_k_g(3, 0), e_k_g(3, 2)), (sphere_action(0), sphere_action(0))] {
        let r = verify_disjoint_union(&a, &b).unwrap();
        assert!(r.holds);
        let u = disjoint_union_action(&a, &b).unwrap();
        assert_eq!(hind(&u).unwrap().hind, hind(&a).unwrap().hind.max(hind(&b).unwrap().hind));
    }
}

#[test]
fn hind_up_to_examples() {
    assert_eq!(hind_up_to(&e_k_g(2, 5), 2).unwrap(), HindBound::AtLeast(2));
    for a in [sphere_action(3), e_k_g(3, 2), e_k_g(5, 1)] {
        let h = hind(&a).unwrap().hind;
        for d in a.dim()..a.dim() + 2 {
            assert_eq!(hind_up_to(&a, d).unwrap(), HindBound::Exact(h));
        }
        assert_eq!(hind(&a.skeleton(h)).unwrap().hind, h);
    }
    // a skeleton of E_5 stops the class at its dimension
    assert_eq!(hind(&e_k_g(2, 5).skeleton(3)).unwrap().hind, 3);
}

#[test]
fn join_examples() {
    let r = verify_join_formula(&sphere_action(1), &sphere_action(1)).unwrap();
    assert_eq!((r.observed, r.holds), (HindBound::Exact(3), true));
    let r = verify_join_formula(&e_k_g(3, 1), &e_k_g(3, 1)).unwrap();
    assert_eq!((r.observed, r.lower, r.upper), (HindBound::Exact(3), 3, 3));
    let r = verify_join_formula(&e_k_g(3, 0), &e_k_g(3, 2)).unwrap();
    assert!(r.holds && r.upper <= 4);
    assert_eq!(r.observed, HindBound::Exact(3));
}

#[test]
fn product_examples() {
    let r = verify_product_formula(&sphere_action(2), &sphere_action(1)).unwrap();
    assert_eq!(r.observed, HindBound::Exact(1));
    let r = verify_product_formula(&e_k_g(3, 1), &e_k_g(3, 3)).unwrap();
    assert_eq!(r.observed, HindBound::Exact(1));
    let r = verify_product_formula(&e_k_g(3, 2), &e_k_g(3, 2)).unwrap();
    assert!(r.holds && (r.lower, r.upper) == (1, 2));
    let obs = r.observed.exact().unwrap();
    assert!(obs == 1 || obs == 2);
    let r = verify_model_product(&e_k_g(2, 2), 5, ProductModel::Staircase).unwrap();
    assert_eq!((r.observed, r.holds), (HindBound::Exact(2), true));
}

#[test]
fn coindex_certificates() {
    let e2 = e_k_g(2, 2);
    let id = SimplicialMap::new(e2.complex(), e2.complex(), (0..6).collect()).unwrap();
    assert!(coindex_certificate_check(&e2, 2, &id).unwrap());
    assert!(certified_coindex(&e2, 3).is_some_and(|(k, _)| k >= 2));

    // E_1 Z/2 onto the equator of the octahedron: +e0 -e0 +e1 -e1
    let e1 = e_k_g(2, 1);
    let s2 = sphere_action(2);
    let f = SimplicialMap::new(e1.complex(), s2.complex(), vec![0, 1, 2, 3]).unwrap();
    assert!(coindex_certificate_check(&s2, 1, &f).unwrap());
    assert_eq!(monotonicity_instance(&e1, &s2, vec![0, 1, 2, 3]).unwrap(), (1, 2));

    // simplicial but not equivariant
    let g = SimplicialMap::new(e1.complex(), s2.complex(), vec![0, 4, 2, 3]).unwrap();
    assert!(!coindex_certificate_check(&s2, 1, &g).unwrap());
    assert!(monotonicity_instance(&e1, &s2, vec![0, 4, 2, 3]).is_err());
}

#[test]
fn covering_class_examples() {
    let s1 = regularize(sphere_action(1)).unwrap();
    let q = s1.quotient();
    assert!(covering_class(&q).is_coboundary().unwrap().is_none());

    for a in [sphere_action(2), e_k_g(3, 2), e_k_g(5, 1), e_k_g(2, 3)] {
        let q = a.quotient();
        let w = covering_class(&q);
        assert!(w.is_cocycle());
        let other: Vec<u32> = q.section().iter().map(|&v| a.generator()[v as usize]).collect();
        let w2 = covering_class_with_section(&q, &other).unwrap();
        let d = w.sub(&w2).unwrap();
        assert!(d.is_zero() || d.is_coboundary().unwrap().is_some());
        assert!(covering_class_with_section(&q, &[0]).is_none() || q.quotient().vertex_count() == 1);
    }
}
