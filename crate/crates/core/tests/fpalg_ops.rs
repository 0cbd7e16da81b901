use hindlab::fpalg::{is_prime, FpMatrix, FpVector};

/// Every vector of `F_p^n`, in lexicographic order.
fn all_vectors(p: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn kernel_size_brute(m: &FpMatrix) -> usize {
    all_vectors(m.modulus(), m.cols())
        .into_iter()
        .filter(|x| m.mul_dense(x).iter().all(|&y| y == 0))
        .count()
}

#[test]
fn rank_examples() {
    assert_eq!(FpMatrix::zeros(2, 3, 3).unwrap().rank(), 0);
    assert_eq!(FpMatrix::identity(3, 4).unwrap().rank(), 4);
    assert_eq!(FpMatrix::from_dense(2, &[vec![1, 1], vec![1, 1]]).unwrap().rank(), 1);
}

#[test]
fn rejects_composite_modulus() {
    assert!(FpMatrix::zeros(4, 2, 2).is_err());
    assert!(FpMatrix::identity(1, 2).is_err());
    assert!(is_prime(5) && !is_prime(9) && !is_prime(1));
}

#[test]
fn solve_examples() {
    let id = FpMatrix::identity(5, 3).unwrap();
    let b = FpVector::from_dense(5, &[4, 0, 2]);
    assert_eq!(id.solve(&b).unwrap(), Some(b.clone()));

    let z = FpMatrix::zeros(3, 2, 2).unwrap();
    assert_eq!(z.solve(&FpVector::from_dense(3, &[0, 1])).unwrap(), None);

    let m = FpMatrix::from_dense(2, &[vec![1, 1]]).unwrap();
    let x = m.solve(&FpVector::from_dense(2, &[1])).unwrap().unwrap();
    let solutions: Vec<Vec<u32>> = all_vectors(2, 2).into_iter().filter(|v| m.mul_dense(v) == vec![1]).collect();
    assert_eq!(solutions, vec![vec![0, 1], vec![1, 0]]);
    assert!(solutions.contains(&x.to_dense()));
}

#[test]
fn kernel_examples() {
    assert!(FpMatrix::identity(7, 5).unwrap().kernel_basis().is_empty());
    assert_eq!(FpMatrix::zeros(5, 1, 3).unwrap().kernel_basis().len(), 3);

    let m = FpMatrix::from_dense(3, &[vec![1, 2]]).unwrap();
    let k = m.kernel_basis();
    assert_eq!(k.len(), 1);
    assert!(m.mul_vec(&k[0]).unwrap().is_zero());
    // (1,1) spans the kernel over F_3
    let nonzero: Vec<Vec<u32>> = all_vectors(3, 2)
        .into_iter()
        .filter(|v| v != &vec![0, 0] && m.mul_dense(v) == vec![0])
        .collect();
    assert_eq!(nonzero, vec![vec![1, 1], vec![2, 2]]);
}

#[test]
fn rank_nullity_against_enumeration() {
    let mut seed = 11u64;
    let mut next = || {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (seed >> 33) as i64
    };
    for p in [2u32, 3, 5] {
        for _ in 0..20 {
            let rows = 1 + (next() % 3) as usize;
            let cols = 1 + (next() % 4) as usize;
            let dense: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| next() % p as i64).collect()).collect();
            let m = FpMatrix::from_dense(p, &dense).unwrap();
            let kernel = kernel_size_brute(&m);
            assert_eq!(kernel, (p as usize).pow((cols - m.rank()) as u32));
            assert_eq!(m.kernel_basis().len(), cols - m.rank());
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }
}
