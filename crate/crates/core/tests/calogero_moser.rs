use proptest::prelude::*;

use uhlenbeck::calogero::{
    joint_centralizer_dim, rescale, sample_cm, sample_cm_with_diagonal, verify_cm, CmPair, Sign,
};
use uhlenbeck::{rat, sample, Rat, RatMatrix};

fn tau() -> impl Strategy<Value = Rat> {
    prop::sample::select(vec![rat(1, 1), rat(-1, 1), rat(3, 7), rat(5, 2)])
}

fn member(n: usize, seed: u64, tau: &Rat) -> CmPair {
    let mut rng = sample::rng(seed);
    let spectrum: Vec<Rat> = sample::distinct_ints(&mut rng, n, -6, 6).into_iter().map(Rat::from).collect();
    sample_cm(&spectrum, tau).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn samples_are_free_members(n in 1usize..=5, seed in any::<u64>(), tau in tau()) {
        let p = member(n, seed, &tau);
        prop_assert!(p.verify().unwrap().signs.contains(&Sign::Plus));
        prop_assert_eq!(joint_centralizer_dim(&p.x, &p.y).unwrap(), 1);
    }

    #[test]
    fn conjugation_keeps_membership(n in 1usize..=5, seed in any::<u64>(), tau in tau()) {
        let p = member(n, seed, &tau);
        let (g, gi) = sample::invertible(&mut sample::rng(seed ^ 1), n);
        let before = p.verify().unwrap();
        let after = verify_cm(&p.x.conjugate_by(&g, &gi), &p.y.conjugate_by(&g, &gi), &tau).unwrap();
        prop_assert_eq!(before, after);
        let junk = sample::int_matrix(&mut sample::rng(seed), n, n, -2, 2);
        let before = verify_cm(&junk, &p.y, &tau).unwrap();
        let after = verify_cm(&junk.conjugate_by(&g, &gi), &p.y.conjugate_by(&g, &gi), &tau).unwrap();
        prop_assert_eq!(before.signs, after.signs);
    }

    #[test]
    fn rescaling_lands_at_one(n in 1usize..=5, seed in any::<u64>(), tau in tau()) {
        let p = member(n, seed, &tau);
        let q = rescale(&p).unwrap();
        prop_assert_eq!(&q.tau, &Rat::one());
        let m = q.verify().unwrap();
        prop_assert_eq!(m.rank_minus_tau, 1);
    }

    #[test]
    fn diagonal_shift_keeps_membership(n in 1usize..=5, seed in any::<u64>(), tau in tau()) {
        let p = member(n, seed, &tau);
        let d: Vec<Rat> = sample::int_vector(&mut sample::rng(seed ^ 2), n, -4, 4);
        let shifted = &p.y + &RatMatrix::diagonal(&d);
        prop_assert!(verify_cm(&p.x, &shifted, &tau).unwrap().is_member());
        let spectrum: Vec<Rat> = (0..n).map(|i| p.x.row(i)[i].clone()).collect();
        let direct = sample_cm_with_diagonal(&spectrum, &d, &tau).unwrap();
        prop_assert_eq!(direct.y, shifted);
    }
}

#[test]
fn zero_pair_reports_ranks() {
    let z = RatMatrix::zeros(2, 2);
    let m = verify_cm(&z, &z, &rat(1, 1)).unwrap();
    assert_eq!((m.rank_minus_tau, m.rank_plus_tau), (2, 2));
    assert!(m.into_result().is_err());
}
