//! Box complexes and the homological chromatic number.
use hindlab::graphs::{
    chromatic_number, complete, cycle, homological_chromatic_number, kneser_graph, verify_hom_hedetniemi,
};

fn main() {
    let graphs = [
        ("K4", complete(4)),
        ("C5", cycle(5).unwrap()),
        ("C6", cycle(6).unwrap()),
        ("KG(5,2)", kneser_graph(5, 2).unwrap()),
        ("KG(6,2)", kneser_graph(6, 2).unwrap()),
    ];
    for (name, g) in &graphs {
        println!(
            "{name}: chi = {}, h-chi = {}",
            chromatic_number(g).unwrap(),
            homological_chromatic_number(g).unwrap()
        );
    }
    let r = verify_hom_hedetniemi(&cycle(5).unwrap(), &complete(3)).unwrap();
    println!("C5 x K3: h-chi {} vs min {}", r.h_chi_product, r.h_chi_1.min(r.h_chi_2));
}
