//! Free Z/p actions: model spaces, joins, products and validation.
use hindlab::actions::{e_k_g, join_action, product_action, sphere_action, validate_action};
use hindlab::complexes::cycle;

fn main() {
    let e = e_k_g(3, 2);
    println!("E_2 Z/3: {} vertices, {} orbits, dim {}", e.complex().vertex_count(), e.orbits().len(), e.dim());
    let j = join_action(&sphere_action(1), &sphere_action(0)).unwrap();
    println!("S1 * S0: dim {}, f = {:?}", j.dim(), j.complex().f_vector());
    let p = product_action(&sphere_action(1), &sphere_action(1)).unwrap();
    println!("S1 x S1: dim {}, f = {:?}", p.dim(), p.complex().f_vector());

    // rotating a triangle by one step fixes no vertex but maps an edge onto a neighbour
    match validate_action(cycle(3), vec![1, 2, 0], 3) {
        Ok(_) => println!("rotation accepted"),
        Err(e) => println!("rotation rejected: {e}"),
    }
}
