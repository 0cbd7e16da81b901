//! Building complexes and looking at their face counts and homology.
use hindlab::cohomology::homology_dims;
use hindlab::complexes::{cross_polytope_boundary, cycle, rp2_minimal, SComplex};

fn show(name: &str, k: &SComplex) {
    println!(
        "{name}: f = {:?}, chi = {}, H(F_2) = {:?}, H(F_3) = {:?}",
        k.f_vector(),
        k.euler_characteristic(),
        homology_dims(k, 2),
        homology_dims(k, 3)
    );
}

fn main() {
    show("C5", &cycle(5));
    show("octahedron", &cross_polytope_boundary(3));
    show("RP2", &rp2_minimal());
    show("C5 * C5", &cycle(5).join(&cycle(5)));
    show("sd C5", &cycle(5).barycentric_subdivision());
}
