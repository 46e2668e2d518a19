use proptest::prelude::*;

use uhlenbeck::bvariety::jordan_nilpotent;
use uhlenbeck::linalg::{char_poly, kernel_basis, krylov_span_dim, nilpotent_jordan_type, rank};
use uhlenbeck::{sample, Partition, Rat, RatMatrix};

fn matrix(rows: usize, cols: usize, entries: &[i64]) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |i, j| Rat::from(entries[i * cols + j]))
}

fn square() -> impl Strategy<Value = RatMatrix> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(-5i64..=5, n * n).prop_map(move |e| matrix(n, n, &e))
    })
}

fn composition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=3, 1..=3).prop_map(Partition::from_unsorted)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(rows in 1usize..=5, cols in 1usize..=5, seed in any::<u64>()) {
        let m = sample::int_matrix(&mut sample::rng(seed), rows, cols, -5, 5);
        prop_assert_eq!(rank(&m) + kernel_basis(&m).len(), cols);
        for v in kernel_basis(&m) {
            prop_assert!(m.mul_vec(&v).iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn char_poly_survives_conjugation(m in square(), seed in any::<u64>()) {
        let (g, gi) = sample::invertible(&mut sample::rng(seed), m.rows());
        prop_assert_eq!(char_poly(&m).unwrap(), char_poly(&m.conjugate_by(&g, &gi)).unwrap());
    }

    #[test]
    fn jordan_type_matches_ranks(lambda in composition(), seed in any::<u64>()) {
        let k = lambda.size();
        let (g, gi) = sample::invertible(&mut sample::rng(seed), k);
        let z = jordan_nilpotent(&lambda).conjugate_by(&g, &gi);
        let found = nilpotent_jordan_type(&z).unwrap();
        prop_assert_eq!(&found, &lambda);
        let dual = found.conjugate();
        for i in 0..=k {
            let tail: usize = dual.parts().iter().skip(i).sum();
            prop_assert_eq!(rank(&z.pow(i as u32)), tail);
        }
    }

    #[test]
    fn krylov_span_grows_with_more_maps(n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let a = sample::int_matrix(&mut rng, n, n, -1, 1);
        let b = sample::int_matrix(&mut rng, n, n, -1, 1);
        let v = sample::int_vector(&mut rng, n, -1, 1);
        let one = krylov_span_dim(std::slice::from_ref(&a), &v).unwrap();
        let two = krylov_span_dim(&[a, b], &v).unwrap();
        prop_assert!(one <= two);
    }
}

#[test]
fn non_nilpotent_has_no_jordan_type() {
    assert!(nilpotent_jordan_type(&RatMatrix::identity(2)).is_err());
}
