//! The homological index and the join and product formulas.
use hindlab::actions::{e_k_g, sphere_action};
use hindlab::index::{hind, verify_join_formula, verify_product_formula, verify_model_product, ProductModel};

fn main() {
    for n in 0..=3 {
        let r = hind(&sphere_action(n)).unwrap();
        println!("hind S^{n} = {} (vanishing {:?})", r.hind, r.vanishing);
    }
    let r = verify_join_formula(&e_k_g(3, 1), &e_k_g(3, 2)).unwrap();
    println!("E1 * E2 over Z/3: observed {:?} in [{}, {}]", r.observed, r.lower, r.upper);
    let r = verify_product_formula(&sphere_action(2), &sphere_action(1)).unwrap();
    println!("S2 x S1: observed {:?} in [{}, {}]", r.observed, r.lower, r.upper);
    let r = verify_model_product(&e_k_g(2, 2), 5, ProductModel::Staircase).unwrap();
    println!("E2 x E5: observed {:?}, holds {}", r.observed, r.holds);
}
