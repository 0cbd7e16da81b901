//! Rank, kernel and solving over F_p.
use hindlab::fpalg::FpMatrix;

fn main() {
    let a = FpMatrix::from_dense(3, &[vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 1]]).unwrap();
    println!("rank over F_3: {}", a.rank());
    for v in a.kernel_basis() {
        println!("kernel vector: {:?}", v.to_dense());
    }
    let b = a.mul_dense(&[1, 1, 2]);
    println!("A x = {:?}, solved x = {:?}", b, a.solve_dense(&b));
}
