//! Smith chain decomposition and its long exact sequences.
use hindlab::actions::e_k_g;
use hindlab::cohomology::{smith_decomposition, smith_long_exactness_check, transfer_matrix};

fn main() {
    let a = e_k_g(3, 2);
    let s = smith_decomposition(&a);
    println!("chain dims (N, R, C): {:?}", s.chain_dims());
    println!("H of N-chains: {:?}", s.n_homology_dims());
    for r in smith_long_exactness_check(&s) {
        println!("{:?}: exact = {}, euler sum = {}", r.sequence, r.exact(), r.euler_sum);
    }
    for n in 0..=a.dim() {
        let t = transfer_matrix(&a, n).unwrap();
        println!("transfer in degree {n}: {}x{}, rank {}", t.rows(), t.cols(), t.rank());
    }
}
