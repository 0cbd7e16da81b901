//! Kneser hypergraphs, the B_edge bound and compatibility hypergraphs.
use hindlab::actions::e_k_g;
use hindlab::hypergraphs::{
    afl_bound, b_edge_hind, compatibility_hypergraph, hyper_chromatic_number, kneser_hypergraph, thm2_bound,
    PosetAction,
};

fn main() {
    for (n, k) in [(5, 1), (6, 1)] {
        let h = kneser_hypergraph(n, k, 3).unwrap();
        println!(
            "KG3({n},{k}): {} edges, chi = {:?}, AFL bound = {}",
            h.edge_count(),
            hyper_chromatic_number(&h).unwrap().finite(),
            afl_bound(&h, 3).unwrap()
        );
    }
    let h = kneser_hypergraph(5, 1, 3).unwrap();
    println!("hind B_edge(KG3(5,1)) = {:?}", b_edge_hind(&h, 3).unwrap());

    let pa = PosetAction::face_poset_of(&e_k_g(3, 1));
    let c = compatibility_hypergraph(&pa, 3).unwrap();
    println!(
        "face poset of E1 Z/3: compatibility hypergraph has {} edges, bound {}",
        c.edge_count(),
        thm2_bound(&pa, 3).unwrap()
    );
}
