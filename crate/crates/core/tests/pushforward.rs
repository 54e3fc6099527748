use hlgysin::gysin::{
    full_flag_pushforward, grassmann_pushforward, pairwise_product, partial_flag_pushforward, signed_sum,
    t_difference, tau_k_pushforward, RootSplit,
};
use hlgysin::hall_littlewood::{p_lambda, r_lambda, schur_s, specialize_p, Specialization};
use hlgysin::perm::{all_permutations, block_structure, stabilizer_elements};
use hlgysin::{Error, ExponentVector, IntSequence, Polynomial};
use num_bigint::BigInt;
use proptest::prelude::*;

fn x(n: usize, i: usize) -> Polynomial {
    Polynomial::var(n, i)
}

fn power_sum(n: usize, k: u32) -> Polynomial {
    (0..n).fold(Polynomial::zero(n), |acc, i| &acc + &x(n, i).pow(k))
}

/// `∏ (x_i - x_j)` over pairs inside a common block.
fn within_vandermonde(n: usize, blocks: &[Vec<usize>]) -> Polynomial {
    let mut label = vec![0; n];
    for (c, block) in blocks.iter().enumerate() {
        for &i in block {
            label[i] = c;
        }
    }
    pairwise_product(n, |i, j| label[i] == label[j], |i, j| &x(n, i) - &x(n, j))
}

/// The Jacobi symmetrizer of each block applied to `f`, making it
/// block-symmetric.
fn symmetrize_within_blocks(f: &Polynomial, split: &RootSplit) -> Polynomial {
    let n = split.n();
    let mut labels = vec![0u32; n];
    for (c, block) in split.blocks().iter().enumerate() {
        for &i in block {
            labels[i] = c as u32;
        }
    }
    let young = stabilizer_elements(&block_structure(&IntSequence::new(labels))).unwrap();
    signed_sum(f, &young)
        .unwrap()
        .divide_exact(&within_vandermonde(n, split.blocks()))
        .unwrap()
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn contiguous_split(sizes: &[usize]) -> RootSplit {
    let mut start = 0;
    let blocks = sizes
        .iter()
        .map(|&s| {
            let block: Vec<usize> = (start..start + s).collect();
            start += s;
            block
        })
        .collect();
    RootSplit::new(start, blocks).unwrap()
}

#[test]
fn worked_examples_for_small_flags() {
    let split = RootSplit::full_flag(2);
    let (a, b) = (x(2, 0), x(2, 1));
    assert_eq!(partial_flag_pushforward(&a, &split).unwrap(), Polynomial::one(2));
    assert!(partial_flag_pushforward(&Polynomial::one(2), &split).unwrap().is_zero());
    assert_eq!(partial_flag_pushforward(&a.pow(2), &split).unwrap(), &a + &b);
    assert_eq!(full_flag_pushforward(&(&x(3, 0).pow(2) * &x(3, 1)), 3), Ok(Polynomial::one(3)));
    let t = Polynomial::t(2);
    assert_eq!(grassmann_pushforward(&(&a - &(&t * &b)), 1, 1), Ok(&Polynomial::one(2) + &t));
    assert_eq!(grassmann_pushforward(&(&a * &(&a - &(&t * &b))), 1, 1), Ok(&a + &b));
    assert!(grassmann_pushforward(&(&a + &b), 1, 1).unwrap().is_zero());
    assert_eq!(tau_k_pushforward(&(&a.pow(2) * &(&a + &b)), 1, 2), Ok((&a + &b).pow(2)));
    assert_eq!(tau_k_pushforward(&(&a * &(&a - &(&t * &b))), 1, 2), Ok(&a + &b));
    assert_eq!(tau_k_pushforward(&a, 2, 2), Ok(Polynomial::one(2)));
}

#[test]
fn invariance_is_checked() {
    let f = x(3, 0);
    assert_eq!(grassmann_pushforward(&f, 2, 1), Err(Error::NonInvariantInput));
    assert_eq!(tau_k_pushforward(&x(3, 2), 1, 3), Err(Error::NonInvariantInput));
}

#[test]
fn degree_contract() {
    for n in 2..=4 {
        for sizes in compositions(n) {
            let split = contiguous_split(&sizes);
            let c = split.cross_pair_count() as u32;
            for exps in IntSequence::all_bounded(n, 3) {
                let f = symmetrize_within_blocks(&Polynomial::x_power(exps.entries()), &split);
                let Some(d) = f.max_x_degree() else { continue };
                assert!(f.is_x_homogeneous());
                let pushed = partial_flag_pushforward(&f, &split).unwrap();
                if d < c {
                    assert!(pushed.is_zero(), "sizes {sizes:?} x^{exps}");
                } else if !pushed.is_zero() {
                    assert!(pushed.is_x_homogeneous());
                    assert_eq!(pushed.max_x_degree(), Some(d - c), "sizes {sizes:?} x^{exps}");
                }
            }
        }
    }
}

#[test]
fn factorization_through_blocks() {
    for n in 1..=4 {
        let exponent_sets = IntSequence::all_bounded(n, 2);
        for sizes in compositions(n) {
            let split = contiguous_split(&sizes);
            for exps in &exponent_sets {
                let f = &Polynomial::x_power(exps.entries()) * &x(n, 0);
                let direct = full_flag_pushforward(&f, n).unwrap();
                let staged = partial_flag_pushforward(&symmetrize_within_blocks(&f, &split), &split).unwrap();
                assert_eq!(direct, staged, "sizes {sizes:?} f = x^{exps}");
            }
        }
    }
}

#[test]
fn strict_partition_classes_from_tau_k() {
    for n in 1..=5usize {
        for nu in IntSequence::strict_partitions(n, 4) {
            let k = nu.len();
            let f = &Polynomial::x_power(nu.padded(n).entries())
                * &pairwise_product(n, |i, _| i < k, |i, j| t_difference(n, i, j));
            assert_eq!(
                p_lambda(n, &nu.padded(n)).unwrap(),
                tau_k_pushforward(&f, k, n).unwrap(),
                "nu = {nu}, n = {n}"
            );
        }
    }
}

#[test]
fn hall_littlewood_class_from_full_flag() {
    for n in 1..=4usize {
        let cross = pairwise_product(n, |_, _| true, |i, j| t_difference(n, i, j));
        for lambda in IntSequence::all_bounded(n, 3) {
            let f = &Polynomial::x_power(lambda.entries()) * &cross;
            assert_eq!(r_lambda(n, &lambda).unwrap(), full_flag_pushforward(&f, n).unwrap(), "{lambda}");
        }
    }
}

#[test]
fn classes_are_symmetric() {
    for n in 1..=4usize {
        let perms = all_permutations(n).unwrap();
        for lambda in IntSequence::all_bounded(n, 2) {
            let r = r_lambda(n, &lambda).unwrap();
            let p = p_lambda(n, &lambda);
            for w in &perms {
                assert_eq!(r.permute_vars(w).unwrap(), r);
                if let Ok(p) = &p {
                    assert_eq!(&p.permute_vars(w).unwrap(), p);
                }
            }
        }
    }
}

#[test]
fn t_zero_specialization_is_schur() {
    for n in 1..=5usize {
        for lambda in IntSequence::partitions_in_box(n, 3) {
            assert_eq!(
                specialize_p(n, &lambda, Specialization::SchurS).unwrap(),
                schur_s(&lambda, n).unwrap(),
                "{lambda}"
            );
        }
    }
}

#[test]
fn divisibility_holds_for_contiguous_level_sets() {
    for n in 1..=4usize {
        for lambda in IntSequence::all_bounded(n, 3) {
            if block_structure(&lambda).is_contiguous() {
                assert!(p_lambda(n, &lambda).is_ok(), "{lambda}");
            }
        }
    }
}

fn arb_symmetric(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((1u32..4, -3i64..=3, 0u16..2), 0..3).prop_map(move |terms| {
        terms.into_iter().fold(Polynomial::zero(n), |acc, (k, c, t)| {
            let scaled = power_sum(n, k).scale(&BigInt::from(c));
            let lifted = &scaled * &Polynomial::monomial(n, ExponentVector::new(vec![0; n], t), 1);
            &acc + &lifted
        })
    })
}

fn symmetric_and_monomial() -> impl Strategy<Value = (usize, Polynomial, Vec<u32>)> {
    (2usize..=4).prop_flat_map(|n| (Just(n), arb_symmetric(n), prop::collection::vec(0u32..4, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn linear_over_symmetric_polynomials((n, g, exps) in symmetric_and_monomial()) {
        let f = Polynomial::x_power(&exps);
        for sizes in compositions(n) {
            let split = contiguous_split(&sizes);
            let f = symmetrize_within_blocks(&f, &split);
            let lhs = partial_flag_pushforward(&(&g * &f), &split).unwrap();
            let rhs = &g * &partial_flag_pushforward(&f, &split).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
