//! Verification suites, one per acceptance area. Each returns a table of
//! checks; a suite passes when every row does.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::actions::{e_k_g, join_action, sphere_action, validate_action, FreeAction};
use crate::cohomology::{
    smith_decomposition, smith_long_exactness_check, transfer_matrix, Cochain, OrderedComplex,
};
use crate::complexes::{cycle, walker_product};
use crate::corpus::{graph_corpus, random_complex, random_free_action, random_free_poset, random_uniform_hypergraph, Lcg};
use crate::fpalg::FpVector;
use crate::graphs::{
    chromatic_number, chromatic_number_with_cap, complete, cycle as cycle_graph, homological_chromatic_number,
    petersen, verify_hom_hedetniemi, Graph,
};
use crate::hypergraphs::{
    afl_bound, compatibility_hypergraph, complete_uniform, coloring_to_equivariant_map, cor10_bound, cor11_bound,
    find_b_edge_certificate, hyper_chromatic_number_with_cap, kneser_hypergraph, lem7_inclusion_check,
    lem9_homomorphism, optimal_hyper_coloring, thm2_bound, zhu_product, HyperChromatic, Hypergraph, PosetAction,
};
use crate::index::{
    full_vanishing_table, hind, join_bracket, product_bracket, verify_join_formula, verify_product_formula_with,
    verify_model_product, FormulaReport, HindBound, ProductModel,
};

/// Suite names, in acceptance order.
pub const SUITES: [&str; 9] = [
    "index",
    "join-p2",
    "product-p2",
    "odd-p",
    "model-product",
    "smith",
    "graphs",
    "hypergraphs",
    "properties",
];

pub const DEFAULT_SEED: u64 = 20240601;

/// Cases per property in the `properties` suite.
pub const PROPERTY_CASES: usize = 200;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuiteError {
    #[error("unknown suite {0:?}; known: index, join-p2, product-p2, odd-p, model-product, smith, graphs, hypergraphs, properties")]
    Unknown(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl CheckRow {
    fn new(name: impl Into<String>, expected: impl ToString, got: impl ToString, pass: bool) -> Self {
        CheckRow {
            name: name.into(),
            expected: expected.to_string(),
            got: got.to_string(),
            pass,
        }
    }

    fn eq<T: PartialEq + ToString>(name: impl Into<String>, expected: T, got: T) -> Self {
        let pass = expected == got;
        CheckRow::new(name, expected.to_string(), got.to_string(), pass)
    }

    fn failed(name: impl Into<String>, expected: impl ToString, err: impl std::fmt::Display) -> Self {
        CheckRow::new(name, expected, format!("error: {err}"), false)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub rows: Vec<CheckRow>,
    #[serde(skip)]
    pub seconds: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport, SuiteError> {
    let start = Instant::now();
    let rows = match name {
        "index" => index_suite(),
        "join-p2" => join_p2_suite(),
        "product-p2" => product_p2_suite(),
        "odd-p" => odd_p_suite(),
        "model-product" => model_product_suite(),
        "smith" => smith_suite(seed),
        "graphs" => graphs_suite(seed),
        "hypergraphs" => hypergraphs_suite(seed),
        "properties" => properties_suite(seed, PROPERTY_CASES),
        other => return Err(SuiteError::Unknown(other.to_string())),
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        seed,
        rows,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// A named action.
#[derive(Debug, Clone)]
pub struct Named {
    pub name: String,
    pub action: FreeAction,
}

fn named(name: impl Into<String>, action: FreeAction) -> Named {
    Named {
        name: name.into(),
        action,
    }
}

/// `S^0..S^2`, `E_0..E_3` for `Z/2`, and every proper skeleton of these.
pub fn p2_library() -> Vec<Named> {
    let mut out = Vec::new();
    let bases: Vec<Named> = (0..=2)
        .map(|n| named(format!("S{n}"), sphere_action(n)))
        .chain((0..=3).map(|k| named(format!("E{k}"), e_k_g(2, k))))
        .collect();
    for b in &bases {
        out.push(b.clone());
    }
    for b in &bases {
        for d in 0..b.action.dim() {
            out.push(named(format!("{}^({d})", b.name), b.action.skeleton(d)));
        }
    }
    out
}

/// `E_0..E_3` for `Z/3` and their proper skeleta.
pub fn p3_library() -> Vec<Named> {
    let mut out: Vec<Named> = (0..=3).map(|k| named(format!("E{k}"), e_k_g(3, k))).collect();
    for k in 1..=3 {
        for d in 0..k {
            out.push(named(format!("E{k}^({d})"), e_k_g(3, k).skeleton(d)));
        }
    }
    out
}

/// Rotation of the `n`-cycle by `n / p`.
pub fn cycle_rotation(n: usize, p: u32) -> FreeAction {
    assert!(n % p as usize == 0 && n / p as usize >= 2);
    let step = (n / p as usize) as u32;
    let perm = (0..n as u32).map(|v| (v + step) % n as u32).collect();
    validate_action(cycle(n), perm, p).expect("rotation by n/p of a cycle with n/p >= 2 is free")
}

fn pairs<T>(xs: &[T]) -> Vec<(&T, &T)> {
    let mut out = Vec::new();
    for i in 0..xs.len() {
        for j in i..xs.len() {
            out.push((&xs[i], &xs[j]));
        }
    }
    out
}

fn formula_row(name: String, r: Result<FormulaReport, impl std::fmt::Display>) -> CheckRow {
    match r {
        Ok(r) => {
            let expected = if r.lower == r.upper {
                r.lower.to_string()
            } else {
                format!("[{}, {}]", r.lower, r.upper)
            };
            CheckRow::new(name, expected, r.observed, r.holds)
        }
        Err(e) => CheckRow::failed(name, "formula", e),
    }
}

fn index_suite() -> Vec<CheckRow> {
    let mut cases: Vec<(String, FreeAction, usize)> = Vec::new();
    for p in [2, 3, 5] {
        for k in 0..=4 {
            cases.push((format!("hind E{k}(Z/{p})"), e_k_g(p, k), k));
        }
    }
    for n in 0..=4 {
        cases.push((format!("hind S{n}"), sphere_action(n), n));
    }
    cases
        .into_par_iter()
        .map(|(name, a, k)| match hind(&a) {
            Ok(r) => CheckRow::eq(name, k, r.hind),
            Err(e) => CheckRow::failed(name, k, e),
        })
        .collect()
}

fn join_p2_suite() -> Vec<CheckRow> {
    let lib = p2_library();
    pairs(&lib)
        .into_par_iter()
        .map(|(a, b)| formula_row(format!("{} * {}", a.name, b.name), verify_join_formula(&a.action, &b.action)))
        .collect()
}

/// Walker products of two 3-dimensional `E_3` factors are left to the
/// staircase model: the capped Walker complex has about 10^6 top simplices.
fn walker_feasible(a: &Named, b: &Named) -> bool {
    let big = |n: &Named| n.action.dim() >= 3 && n.action.complex().vertex_count() >= 8;
    !(big(a) && big(b))
}

fn product_p2_suite() -> Vec<CheckRow> {
    let lib = p2_library();
    let mut jobs = Vec::new();
    for (a, b) in pairs(&lib) {
        jobs.push((a, b, ProductModel::Staircase));
        if walker_feasible(a, b) {
            jobs.push((a, b, ProductModel::Walker));
        }
    }
    let mut rows: Vec<CheckRow> = jobs
        .into_par_iter()
        .map(|(a, b, m)| {
            formula_row(
                format!("{} x {} ({m:?})", a.name, b.name),
                verify_product_formula_with(&a.action, &b.action, m),
            )
        })
        .collect();
    for m in [ProductModel::Staircase, ProductModel::Walker] {
        let r = verify_product_formula_with(&sphere_action(2), &sphere_action(1), m);
        rows.push(match r {
            Ok(r) => CheckRow::eq(format!("S2 x S1 ({m:?})"), HindBound::Exact(1).to_string(), r.observed.to_string()),
            Err(e) => CheckRow::failed("S2 x S1", 1, e),
        });
    }
    rows
}

fn odd_p_suite() -> Vec<CheckRow> {
    let lib: Vec<Named> = (0..=3).map(|k| named(format!("E{k}"), e_k_g(3, k))).collect();
    let mut jobs: Vec<(String, &Named, &Named, bool)> = Vec::new();
    for (a, b) in pairs(&lib) {
        jobs.push((format!("Z/3 {} * {}", a.name, b.name), a, b, true));
        jobs.push((format!("Z/3 {} x {}", a.name, b.name), a, b, false));
    }
    let mut rows: Vec<CheckRow> = jobs
        .into_par_iter()
        .map(|(name, a, b, is_join)| {
            let r = if is_join {
                verify_join_formula(&a.action, &b.action)
            } else {
                verify_product_formula_with(&a.action, &b.action, ProductModel::Staircase)
            };
            formula_row(name, r)
        })
        .collect();
    // the predicted brackets themselves
    for (ha, hb) in [(1, 1), (1, 3), (3, 3), (1, 2), (2, 2)] {
        let (lo, hi) = join_bracket(3, ha, hb);
        let both_odd = ha % 2 == 1 && hb % 2 == 1;
        rows.push(CheckRow::new(
            format!("join bracket {ha},{hb} equality iff both odd"),
            both_odd,
            lo == hi,
            both_odd == (lo == hi),
        ));
        let (lo, hi) = product_bracket(3, ha, hb);
        let m = ha.min(hb);
        rows.push(CheckRow::new(
            format!("product bracket {ha},{hb}"),
            format!("[{}, {m}]", if m % 2 == 1 { m } else { m - 1 }),
            format!("[{lo}, {hi}]"),
            hi == m && lo == if m % 2 == 1 { m } else { m - 1 },
        ));
    }
    rows
}

fn model_product_suite() -> Vec<CheckRow> {
    let mut jobs: Vec<(Named, usize)> = Vec::new();
    for x in p2_library().into_iter().chain(p3_library()) {
        for n in 0..=3 {
            jobs.push((x.clone(), n));
        }
    }
    jobs.into_par_iter()
        .map(|(x, n)| {
            formula_row(
                format!("Z/{} {} x E{n}", x.action.p(), x.name),
                verify_model_product(&x.action, n, ProductModel::Staircase),
            )
        })
        .collect()
}

fn smith_suite(seed: u64) -> Vec<CheckRow> {
    let mut cases: Vec<Named> = vec![
        named("S1", sphere_action(1)),
        named("S2", sphere_action(2)),
        named("S3", sphere_action(3)),
        named("E2(Z/2)", e_k_g(2, 2)),
        named("E1(Z/3)", e_k_g(3, 1)),
        named("E2(Z/3)", e_k_g(3, 2)),
        named("C9/Z3", cycle_rotation(9, 3)),
    ];
    let mut rng = Lcg::new(seed);
    for i in 0..6 {
        let p = if i % 2 == 0 { 2 } else { 3 };
        let a = random_free_action(&mut rng, p, if p == 2 { 4 } else { 2 });
        cases.push(named(format!("random Z/{p} #{i}"), a));
    }
    let mut rows: Vec<CheckRow> = cases
        .par_iter()
        .flat_map_iter(|c| {
            let s = smith_decomposition(&c.action);
            smith_long_exactness_check(&s)
                .into_iter()
                .flat_map(|rep| {
                    let defects: i64 = rep.nodes.iter().map(|n| n.defect.abs()).sum();
                    let zero = rep.nodes.iter().all(|n| n.composite_zero);
                    vec![
                        CheckRow::new(format!("{} {:?} short exact", c.name, rep.sequence), true, rep.short_exact, rep.short_exact),
                        CheckRow::new(
                            format!("{} {:?} long exact", c.name, rep.sequence),
                            "defect 0",
                            format!("defect {defects}"),
                            defects == 0 && zero && rep.exact(),
                        ),
                    ]
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let spheres = vec![
        named("S1", sphere_action(1)),
        named("S2", sphere_action(2)),
        named("S3", sphere_action(3)),
        named("C6/Z3", cycle_rotation(6, 3)),
        named("C9/Z3", cycle_rotation(9, 3)),
        named("C10/Z5", cycle_rotation(10, 5)),
        named("C6/Z3 * C6/Z3", join_action(&cycle_rotation(6, 3), &cycle_rotation(6, 3)).expect("same p")),
    ];
    rows.par_extend(spheres.par_iter().map(|c| {
        let n = c.action.dim();
        let name = format!("{} transfer injective in degree {n}", c.name);
        match transfer_matrix(&c.action, n) {
            Ok(t) => CheckRow::new(name, format!("rank {}", t.cols()), format!("rank {}", t.rank()), t.cols() > 0 && t.rank() == t.cols()),
            Err(e) => CheckRow::failed(name, "injective", e),
        }
    }));
    rows
}

fn graphs_suite(seed: u64) -> Vec<CheckRow> {
    let mut rows = Vec::new();
    for n in 2..=5 {
        rows.push(match homological_chromatic_number(&complete(n)) {
            Ok(h) => CheckRow::eq(format!("h-chi(K{n})"), n, h),
            Err(e) => CheckRow::failed(format!("h-chi(K{n})"), n, e),
        });
    }
    let c5 = cycle_graph(5).expect("n >= 3");
    rows.push(match homological_chromatic_number(&c5) {
        Ok(h) => CheckRow::eq("h-chi(C5)", 3, h),
        Err(e) => CheckRow::failed("h-chi(C5)", 3, e),
    });
    rows.push(match (homological_chromatic_number(&petersen()), chromatic_number(&petersen())) {
        (Ok(h), Ok(c)) => CheckRow::new("petersen h-chi <= chi", format!("<= {c}"), h, h <= c),
        _ => CheckRow::failed("petersen", "bound", "computation failed"),
    });
    let corpus = graph_corpus(seed, 50);
    rows.par_extend(corpus.par_iter().enumerate().map(|(i, g)| {
        let name = format!("corpus #{i} (n={}, m={}) h-chi <= chi", g.n(), g.edge_count());
        match (homological_chromatic_number(g), chromatic_number(g)) {
            (Ok(h), Ok(c)) => CheckRow::new(name, format!("<= {c}"), h, h <= c),
            (Err(e), _) | (_, Err(e)) => CheckRow::failed(name, "bound", e),
        }
    }));
    let base: Vec<(&str, Graph)> = vec![("K2", complete(2)), ("K3", complete(3)), ("K4", complete(4)), ("C5", c5)];
    rows.par_extend(pairs(&base).into_par_iter().flat_map_iter(|((na, a), (nb, b))| {
        let name = format!("hedetniemi {na} x {nb}");
        match verify_hom_hedetniemi(a, b) {
            Ok(r) => {
                let m = r.h_chi_1.min(r.h_chi_2);
                let prod = crate::graphs::categorical_product(a, b);
                let chi = chromatic_number_with_cap(&prod, prod.n());
                let mut v = vec![
                    CheckRow::eq(format!("{name} h-chi"), m, r.h_chi_product),
                    CheckRow::new(
                        format!("{name} box product hind"),
                        m - 2,
                        r.box_product_hind,
                        r.box_product_hind == HindBound::Exact(m - 2),
                    ),
                ];
                v.push(match chi {
                    Ok(c) => CheckRow::new(format!("{name} chi >= min h-chi"), format!(">= {m}"), c, c >= m),
                    Err(e) => CheckRow::failed(format!("{name} chi"), m, e),
                });
                v
            }
            Err(e) => vec![CheckRow::failed(name, "report", e)],
        }
    }));
    rows
}

/// Hypergraph instances used by the soundness checks.
fn hypergraph_instances(seed: u64) -> Vec<(String, Hypergraph, u32)> {
    let mut out: Vec<(String, Hypergraph, u32)> = vec![
        ("K3".into(), Hypergraph::from_graph(&complete(3)), 2),
        ("K4".into(), Hypergraph::from_graph(&complete(4)), 2),
        ("C5".into(), Hypergraph::from_graph(&cycle_graph(5).expect("n >= 3")), 2),
        ("petersen".into(), Hypergraph::from_graph(&petersen()), 2),
        ("K4^(3)".into(), complete_uniform(4, 3), 3),
        ("KG3(5,1)".into(), kneser_hypergraph(5, 1, 3).expect("valid"), 3),
        ("K6^(3)".into(), complete_uniform(6, 3), 3),
    ];
    let mut rng = Lcg::new(seed ^ 0x68);
    for i in 0..6 {
        let h = random_uniform_hypergraph(&mut rng, 4, 6, 3, 1, 2);
        if h.edge_count() > 0 {
            out.push((format!("random 3-uniform #{i}"), h, 3));
        }
    }
    for (i, g) in graph_corpus(seed, 6).into_iter().enumerate() {
        out.push((format!("graph corpus #{i}"), Hypergraph::from_graph(&g), 2));
    }
    out
}

fn chi_of(h: &Hypergraph) -> Result<usize, String> {
    match hyper_chromatic_number_with_cap(h, h.n().max(1)) {
        Ok(HyperChromatic::Finite(k)) => Ok(k),
        Ok(HyperChromatic::Infinite) => Err("infinite".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn hypergraphs_suite(seed: u64) -> Vec<CheckRow> {
    let mut rows = Vec::new();
    let instances = hypergraph_instances(seed);
    // AFL soundness
    rows.par_extend(instances.par_iter().map(|(name, h, p)| {
        let n = format!("afl {name}");
        match (afl_bound(h, *p), chi_of(h)) {
            (Ok(b), Ok(c)) => CheckRow::new(n, format!("<= {c}"), b, b <= c),
            (Err(e), _) => CheckRow::failed(n, "bound", e),
            (_, Err(e)) => CheckRow::failed(n, "bound", e),
        }
    }));
    // Thm 2 and λ on face posets
    let posets: Vec<(String, PosetAction)> = vec![
        ("P(S1)".into(), PosetAction::face_poset_of(&sphere_action(1))),
        ("P(E1 Z/2)".into(), PosetAction::face_poset_of(&e_k_g(2, 1))),
        ("P(S2)".into(), PosetAction::face_poset_of(&sphere_action(2))),
        ("P(E2 Z/2)".into(), PosetAction::face_poset_of(&e_k_g(2, 2))),
        ("P(E1 Z/3)".into(), PosetAction::face_poset_of(&e_k_g(3, 1))),
        ("P(C9/Z3)".into(), PosetAction::face_poset_of(&cycle_rotation(9, 3))),
        ("P(E1 Z/5)".into(), PosetAction::face_poset_of(&e_k_g(5, 1))),
    ];
    let mut jobs = Vec::new();
    for (name, pa) in &posets {
        for r in 2..=pa.p() as usize {
            jobs.push((name, pa, r));
        }
    }
    rows.par_extend(jobs.into_par_iter().flat_map_iter(|(name, pa, r)| {
        let mut v = Vec::new();
        let c = match compatibility_hypergraph(pa, r) {
            Ok(c) => c,
            Err(e) => return vec![CheckRow::failed(format!("C^({r}) {name}"), "hypergraph", e)],
        };
        match optimal_hyper_coloring(&c, c.n()) {
            Ok(Some((chi, colors))) => {
                match thm2_bound(pa, r) {
                    Ok(b) => v.push(CheckRow::new(format!("thm2 {name} r={r}"), format!("<= {chi}"), b, b <= chi)),
                    Err(e) => v.push(CheckRow::failed(format!("thm2 {name} r={r}"), chi, e)),
                }
                match coloring_to_equivariant_map(pa, &colors, chi, r) {
                    Ok(l) => v.push(CheckRow::new(
                        format!("lambda {name} r={r}"),
                        "simplicial, equivariant",
                        format!(
                            "simplicial={} equivariant={} orbit colors={} hind {} <= {}",
                            l.simplicial, l.equivariant, l.min_orbit_colors, l.hind, l.target_dim
                        ),
                        l.holds,
                    )),
                    Err(e) => v.push(CheckRow::failed(format!("lambda {name} r={r}"), "map", e)),
                }
            }
            Ok(None) => v.push(CheckRow::failed(format!("chi C^({r}) {name}"), "finite", "singleton edge")),
            Err(e) => v.push(CheckRow::failed(format!("chi C^({r}) {name}"), "finite", e)),
        }
        v
    }));
    // lem 7
    let mut lem7_jobs: Vec<(String, PosetAction, PosetAction, usize)> = vec![
        ("P(E1) x P(E1)".into(), posets[1].1.clone(), posets[1].1.clone(), 2),
        ("P(S1) x P(E1)".into(), posets[0].1.clone(), posets[1].1.clone(), 2),
    ];
    let mut rng = Lcg::new(seed ^ 0x7);
    for i in 0..8 {
        let a = random_free_poset(&mut rng, 3, 1 + (i % 3));
        let b = random_free_poset(&mut rng, 3, 1 + ((i + 1) % 3));
        lem7_jobs.push((format!("random Z/3 posets #{i} r=2"), a.clone(), b.clone(), 2));
        lem7_jobs.push((format!("random Z/3 posets #{i} r=3"), a, b, 3));
    }
    rows.par_extend(lem7_jobs.into_par_iter().map(|(name, a, b, r)| match lem7_inclusion_check(&a, &b, r) {
        Ok(rep) => CheckRow::new(
            format!("lem7 {name}"),
            "0 missing",
            format!("{} missing of {}", rep.missing, rep.product_edges),
            rep.holds,
        ),
        Err(e) => CheckRow::failed(format!("lem7 {name}"), "inclusion", e),
    }));
    // lem 9
    let lem9: Vec<(&str, Hypergraph, usize)> = vec![
        ("K3", Hypergraph::from_graph(&complete(3)), 2),
        ("C5", Hypergraph::from_graph(&cycle_graph(5).expect("n >= 3")), 2),
        ("K4", Hypergraph::from_graph(&complete(4)), 2),
        ("K4^(3)", complete_uniform(4, 3), 3),
    ];
    rows.par_extend(lem9.into_par_iter().map(|(name, h, r)| match lem9_homomorphism(&h, r) {
        Ok(rep) => CheckRow::new(
            format!("lem9 {name}"),
            "homomorphism, pullback proper",
            format!("homomorphism={} pullback={}", rep.homomorphism, rep.pullback_proper),
            rep.homomorphism && rep.pullback_proper,
        ),
        Err(e) => CheckRow::failed(format!("lem9 {name}"), "homomorphism", e),
    }));
    // cor 11 and cor 10 on Zhu products
    let prod_base: Vec<(&str, Hypergraph, u32)> = vec![
        ("K3", Hypergraph::from_graph(&complete(3)), 2),
        ("K4", Hypergraph::from_graph(&complete(4)), 2),
        ("C5", Hypergraph::from_graph(&cycle_graph(5).expect("n >= 3")), 2),
        ("K4^(3)", complete_uniform(4, 3), 3),
        ("KG3(5,1)", kneser_hypergraph(5, 1, 3).expect("valid"), 3),
    ];
    let mut prod_jobs = Vec::new();
    for (a, b) in pairs(&prod_base) {
        if a.2 == b.2 {
            prod_jobs.push((a, b));
        }
    }
    rows.par_extend(prod_jobs.into_par_iter().flat_map_iter(|((na, a, p), (nb, b, _))| {
        let name = format!("{na} x {nb}");
        let chi = match zhu_product(a, b).map_err(|e| e.to_string()).and_then(|z| chi_of(&z)) {
            Ok(c) => c,
            Err(e) => return vec![CheckRow::failed(format!("chi zhu {name}"), "finite", e)],
        };
        let mut v = Vec::new();
        v.push(match cor11_bound(a, b, *p) {
            Ok(c) => CheckRow::new(format!("cor11 {name} ({c:?})"), format!("<= {chi}"), c.value(), c.value() <= chi),
            Err(e) => CheckRow::failed(format!("cor11 {name}"), chi, e),
        });
        let certs = (find_b_edge_certificate(a, *p, 3), find_b_edge_certificate(b, *p, 3));
        v.push(match certs {
            (Ok(Some(ca)), Ok(Some(cb))) => match cor10_bound(a, b, *p, (&ca, &cb)) {
                Ok(x) => CheckRow::new(
                    format!("cor10 {name} (k={},{})", ca.k, cb.k),
                    format!("<= {chi}"),
                    x,
                    x <= chi,
                ),
                Err(e) => CheckRow::failed(format!("cor10 {name}"), chi, e),
            },
            _ => CheckRow::failed(format!("cor10 {name}"), chi, "no certificate found"),
        });
        v
    }));
    rows
}

/// Random `F_p` cochain of the given degree.
fn random_cochain<'a>(rng: &mut Lcg, k: &'a OrderedComplex, d: usize, p: u32) -> Cochain<'a> {
    let vals: Vec<i64> = (0..k.count(d)).map(|_| rng.below(p) as i64).collect();
    Cochain::from_values(k, d, p, &vals).expect("length matches")
}

/// Random cocycle: a random combination of a kernel basis of `δ_d`.
fn random_cocycle<'a>(rng: &mut Lcg, k: &'a OrderedComplex, d: usize, p: u32) -> Cochain<'a> {
    let basis: Vec<FpVector> = k.coboundary_matrix_mod(d, p).kernel_basis();
    let mut vals = vec![0i64; k.count(d)];
    for b in &basis {
        let c = rng.below(p) as i64;
        for (i, v) in b.entries() {
            vals[i] += c * v as i64;
        }
    }
    Cochain::from_values(k, d, p, &vals).expect("length matches")
}

fn reduced(b: &[usize]) -> Vec<usize> {
    let mut r = b.to_vec();
    if let Some(x) = r.first_mut() {
        *x -= 1;
    }
    r
}

fn property_rows(name: &str, results: Vec<Result<(), String>>) -> CheckRow {
    let total = results.len();
    let failures: Vec<String> = results.into_iter().enumerate().filter_map(|(i, r)| r.err().map(|e| format!("#{i}: {e}"))).collect();
    CheckRow::new(
        name,
        format!("{total}/{total}"),
        if failures.is_empty() {
            format!("{total}/{total}")
        } else {
            format!("{}/{total}; first failure {}", total - failures.len(), failures[0])
        },
        failures.is_empty(),
    )
}

/// Seeded structural property checks; `cases` instances per property.
pub fn properties_suite(seed: u64, cases: usize) -> Vec<CheckRow> {
    let seeds: Vec<u64> = (0..cases as u64).map(|i| seed.wrapping_mul(31).wrapping_add(i)).collect();
    let prime_of = |s: u64| if s % 2 == 0 { 2 } else { 3 };

    let d2: Vec<Result<(), String>> = seeds
        .par_iter()
        .map(|&s| {
            let mut rng = Lcg::new(s);
            let k = OrderedComplex::from_scomplex(&random_complex(&mut rng, 8, 5));
            let p = prime_of(s);
            for d in 0..k.dim().saturating_sub(1) {
                let c = random_cochain(&mut rng, &k, d, p);
                if !c.coboundary().coboundary().is_zero() {
                    return Err(format!("degree {d}"));
                }
            }
            Ok(())
        })
        .collect();

    let leibniz: Vec<Result<(), String>> = seeds
        .par_iter()
        .map(|&s| {
            let mut rng = Lcg::new(s ^ 0x1e1b);
            let k = OrderedComplex::from_scomplex(&random_complex(&mut rng, 8, 5));
            let p = prime_of(s);
            for da in 0..=k.dim() {
                for db in 0..=k.dim() - da {
                    if da + db + 1 > k.dim() {
                        continue;
                    }
                    let a = random_cochain(&mut rng, &k, da, p);
                    let b = random_cochain(&mut rng, &k, db, p);
                    let lhs = a.cup(&b).expect("same complex").coboundary();
                    let t1 = a.coboundary().cup(&b).expect("same complex");
                    let t2 = a.cup(&b.coboundary()).expect("same complex");
                    let sign = if da % 2 == 0 { 1 } else { p - 1 };
                    let rhs = t1.add_scaled(sign, &t2).expect("same shape");
                    if lhs != rhs {
                        return Err(format!("degrees {da}, {db}"));
                    }
                }
            }
            Ok(())
        })
        .collect();

    let commut: Vec<Result<(), String>> = seeds
        .par_iter()
        .map(|&s| {
            let mut rng = Lcg::new(s ^ 0xc0c0);
            let k = OrderedComplex::from_scomplex(&random_complex(&mut rng, 8, 5));
            let p = prime_of(s);
            for da in 1..=k.dim() {
                for db in 1..=k.dim() - da {
                    let a = random_cocycle(&mut rng, &k, da, p);
                    let b = random_cocycle(&mut rng, &k, db, p);
                    let ab = a.cup(&b).expect("same complex");
                    let ba = b.cup(&a).expect("same complex");
                    let sign = if (da * db) % 2 == 0 { p - 1 } else { 1 };
                    let diff = ab.add_scaled(sign, &ba).expect("same shape");
                    match diff.is_coboundary() {
                        Ok(Some(_)) => {}
                        Ok(None) => return Err(format!("degrees {da}, {db}: not a coboundary")),
                        Err(e) => return Err(e.to_string()),
                    }
                }
            }
            Ok(())
        })
        .collect();

    let monotone: Vec<Result<(), String>> = seeds
        .par_iter()
        .map(|&s| {
            let p = prime_of(s);
            let mut rng = Lcg::new(s ^ 0x3030);
            let a = random_free_action(&mut rng, p, if p == 2 { 4 } else { 2 });
            let table = full_vanishing_table(&a);
            if table.windows(2).any(|w| w[0] && !w[1]) {
                return Err(format!("table {table:?}"));
            }
            match hind(&a) {
                Ok(r) if r.vanishing == table => Ok(()),
                Ok(r) => Err(format!("report {:?} vs table {table:?}", r.vanishing)),
                Err(e) => Err(e.to_string()),
            }
        })
        .collect();

    let subdivision: Vec<Result<(), String>> = seeds
        .par_iter()
        .map(|&s| {
            let p = prime_of(s);
            let mut rng = Lcg::new(s ^ 0x5d5d);
            let a = random_free_action(&mut rng, p, if p == 2 { 4 } else { 2 });
            let h0 = hind(&a).map_err(|e| e.to_string())?.hind;
            let h1 = hind(&a.subdivide()).map_err(|e| e.to_string())?.hind;
            if h0 == h1 {
                Ok(())
            } else {
                Err(format!("{h0} before, {h1} after"))
            }
        })
        .collect();

    let kunneth: Vec<Result<(), String>> = seeds
        .par_iter()
        .map(|&s| {
            let p = prime_of(s);
            let mut rng = Lcg::new(s ^ 0x4b4b);
            let k = random_complex(&mut rng, 4, 3);
            let l = random_complex(&mut rng, 4, 3);
            let bk = crate::cohomology::homology_dims(&k, p);
            let bl = crate::cohomology::homology_dims(&l, p);
            let got = crate::cohomology::homology_dims(&walker_product(&k, &l), p);
            if trim(got.clone()) == convolve(&bk, &bl, false) {
                Ok(())
            } else {
                Err(format!("{bk:?} x {bl:?} gave {got:?}"))
            }
        })
        .collect();

    let milnor: Vec<Result<(), String>> = seeds
        .par_iter()
        .map(|&s| {
            let p = prime_of(s);
            let mut rng = Lcg::new(s ^ 0x4d4d);
            let k = random_complex(&mut rng, 4, 4);
            let l = random_complex(&mut rng, 4, 4);
            let bk = reduced(&crate::cohomology::homology_dims(&k, p));
            let bl = reduced(&crate::cohomology::homology_dims(&l, p));
            let got = reduced(&crate::cohomology::homology_dims(&k.join(&l), p));
            let want = convolve(&bk, &bl, true);
            if trim(got.clone()) == want {
                Ok(())
            } else {
                Err(format!("{bk:?} * {bl:?} gave {got:?}, want {want:?}"))
            }
        })
        .collect();

    vec![
        property_rows("coboundary squares to zero", d2),
        property_rows("Leibniz rule", leibniz),
        property_rows("graded commutativity in cohomology", commut),
        property_rows("monotone class vanishing", monotone),
        property_rows("subdivision keeps hind", subdivision),
        property_rows("Kunneth dims of Walker product", kunneth),
        property_rows("Milnor dims of join", milnor),
    ]
}

/// `c_s = Σ_{i+j=s} a_i b_j`; with `shift`, the result moves up one degree
/// (reduced join dims).
fn convolve(a: &[usize], b: &[usize], shift: bool) -> Vec<usize> {
    let off = usize::from(shift);
    let mut out = vec![0; a.len() + b.len() - 1 + off];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j + off] += x * y;
        }
    }
    trim(out)
}

fn trim(mut v: Vec<usize>) -> Vec<usize> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}
