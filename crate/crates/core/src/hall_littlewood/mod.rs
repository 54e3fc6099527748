//! Hall-Littlewood classes `R_λ`, `P_λ`, their normalizing factors
//! `v_m(t)`, `v_λ(t)`, Gaussian polynomials, and the specializations
//! `t = 0` (Schur S-functions) and `t = -1` (Schur P-functions).
//!
//! Polynomials in `t` alone are returned with arity 0 and must be embedded
//! before they meet polynomials in the roots.

mod schur;
mod schur_p;

pub use schur::{
    alternant_quotient, complete_symmetric, schur_s, schur_s_bialternant, straighten_s,
};
pub use schur_p::{hook_partitions, schur_p_coset, schur_p_recursive, straighten_p};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gysin::{self, t_difference, pairwise_product};
use crate::perm::{self, block_structure};
use crate::poly::{ExponentVector, Polynomial};
use crate::sequence::IntSequence;

/// Result of rewriting a class indexed by an arbitrary sequence in terms of
/// a class indexed by a (strict) partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Straightened {
    Zero,
    Signed { sign: i32, partition: IntSequence },
}

impl Straightened {
    pub fn sign(&self) -> i32 {
        match self {
            Straightened::Zero => 0,
            Straightened::Signed { sign, .. } => *sign,
        }
    }
}

/// The two classical specializations of `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// `t = 0`, giving Schur S-functions.
    SchurS,
    /// `t = -1`, giving Schur P-functions.
    SchurP,
}

impl Specialization {
    pub fn t_value(self) -> i64 {
        match self {
            Specialization::SchurS => 0,
            Specialization::SchurP => -1,
        }
    }
}

/// `v_m(t) = (1+t)(1+t+t^2)⋯(1+t+⋯+t^{m-1})`; `v_0 = v_1 = 1`.
pub fn v_m(m: usize) -> Polynomial {
    (1..=m).fold(Polynomial::one(0), |acc, i| {
        &acc * &Polynomial::from_t_coeffs(0, vec![1; i])
    })
}

/// `v_λ(t) = ∏ v_{m_i}(t)` over the value multiplicities of `λ`.
pub fn v_lambda(lambda: &IntSequence) -> Polynomial {
    block_structure(lambda)
        .multiplicities()
        .into_iter()
        .fold(Polynomial::one(0), |acc, m| &acc * &v_m(m))
}

/// The Gaussian polynomial `[a+b over a](t) = v_{a+b} / (v_a v_b)`.
pub fn gaussian(a: usize, b: usize) -> Polynomial {
    v_m(a + b)
        .divide_exact(&(&v_m(a) * &v_m(b)))
        .expect("v_a v_b divides v_{a+b}")
}

/// The value of `[a+b over a](t)` at `t = -1` from the closed form:
/// zero when `ab` is odd, otherwise `C(⌊(a+b)/2⌋, ⌊a/2⌋)`.
pub fn gaussian_at_minus_one(a: u64, b: u64) -> BigInt {
    if a % 2 == 1 && b % 2 == 1 {
        return BigInt::zero();
    }
    binomial(BigInt::from((a + b) / 2), BigInt::from(a / 2))
}

/// Order of vanishing of `[a+b over a](t)` at `t = -1`:
/// `⌊(a+b)/2⌋ - ⌊a/2⌋ - ⌊b/2⌋`, which is 1 exactly when `a` and `b` are odd.
pub fn gaussian_order_at_minus_one(a: u64, b: u64) -> u64 {
    (a + b) / 2 - a / 2 - b / 2
}

fn check_length(n: usize, lambda: &IntSequence) -> Result<()> {
    if lambda.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: lambda.len(),
        });
    }
    Ok(())
}

/// `∏_{i<j} (y_i - t y_j)`.
pub fn t_vandermonde(n: usize) -> Polynomial {
    pairwise_product(n, |_, _| true, |i, j| t_difference(n, i, j))
}

/// `R_λ(y_1, ..., y_n; t) = Σ_{w ∈ S_n} w( y^λ ∏_{i<j} (y_i - t y_j)/(y_i - y_j) )`.
///
/// The sum is the alternant of `y^λ ∏ (y_i - t y_j)` over `a_δ`; each
/// alternant `a_{μ+δ}` in it contributes `s_μ`.
pub fn r_lambda(n: usize, lambda: &IntSequence) -> Result<Polynomial> {
    check_length(n, lambda)?;
    if n > perm::DEFAULT_PERMUTATION_BOUND {
        return Err(Error::BoundExceeded { n, bound: perm::DEFAULT_PERMUTATION_BOUND });
    }
    let numerator = &Polynomial::x_power(lambda.entries()) * &t_vandermonde(n);
    let mut by_shape: BTreeMap<Vec<u32>, Vec<(u16, BigInt)>> = BTreeMap::new();
    for (e, c) in gysin::alternant_support(&numerator) {
        let shape = e
            .x_exponents()
            .iter()
            .enumerate()
            .map(|(i, &a)| a as u32 - (n - 1 - i) as u32)
            .collect();
        by_shape.entry(shape).or_default().push((e.t_exponent(), c));
    }
    let mut acc = Polynomial::zero(n);
    for (shape, t_terms) in by_shape {
        let t_part = Polynomial::from_terms(
            n,
            t_terms.into_iter().map(|(k, c)| (ExponentVector::new(vec![0; n], k), c)),
        )?;
        acc = &acc + &(&schur_s(&IntSequence::new(shape), n)? * &t_part);
    }
    Ok(acc)
}

/// `R_λ` as the literal alternant of `y^λ ∏ (y_i - t y_j)` divided by the
/// Vandermonde.
pub fn r_lambda_alternant(n: usize, lambda: &IntSequence) -> Result<Polynomial> {
    check_length(n, lambda)?;
    let numerator = &Polynomial::x_power(lambda.entries()) * &t_vandermonde(n);
    gysin::antisymmetrize(&numerator)?.divide_by_vandermonde()
}

/// `v_λ(t) Σ_{w ∈ S_n/S_n^λ} w( y^λ ∏_{i<j, λ_i≠λ_j} (y_i - t y_j)/(y_i - y_j) )`
/// summed over the canonical coset representatives.
///
/// When the level sets of `λ` interleave, the summand is not invariant
/// under the stabilizer and the sum is in general not a polynomial; this
/// surfaces as [`Error::NotDivisible`].
pub fn r_lambda_coset(n: usize, lambda: &IntSequence) -> Result<Polynomial> {
    check_length(n, lambda)?;
    let blocks = block_structure(lambda);
    let label = blocks.class_of();
    let cross_t = pairwise_product(n, |i, j| label[i] != label[j], |i, j| t_difference(n, i, j));
    let within = pairwise_product(n, |i, j| label[i] == label[j], |i, j| gysin::difference(n, i, j));
    let summand = &(&Polynomial::x_power(lambda.entries()) * &cross_t) * &within;
    let reps = perm::coset_reps(&blocks)?;
    let coset_sum = gysin::signed_sum(&summand, &reps)?.divide_by_vandermonde()?;
    Ok(&coset_sum * &v_lambda(lambda).embed(n, 0))
}

/// `P_λ = R_λ / v_λ`.
pub fn p_lambda(n: usize, lambda: &IntSequence) -> Result<Polynomial> {
    r_lambda(n, lambda)?.divide_exact(&v_lambda(lambda).embed(n, 0))
}

/// `P_λ` with `t` specialized.
pub fn specialize_p(n: usize, lambda: &IntSequence, at: Specialization) -> Result<Polynomial> {
    Ok(p_lambda(n, lambda)?.substitute_t(at.t_value()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn seq(v: &[u32]) -> IntSequence {
        IntSequence::from(v)
    }

    fn t_poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_t_coeffs(0, coeffs.iter().copied())
    }

    /// `y1^2 + y1 y2 + y2^2 - t y1 y2`.
    fn r_20() -> Polynomial {
        let (a, b) = (y(2, 0), y(2, 1));
        &(&(&a.pow(2) + &(&a * &b)) + &b.pow(2)) - &(&Polynomial::t(2) * &(&a * &b))
    }

    #[test]
    fn v_examples() {
        assert_eq!(v_m(0), Polynomial::one(0));
        assert_eq!(v_m(1), Polynomial::one(0));
        assert_eq!(v_m(2), t_poly(&[1, 1]));
        assert_eq!(v_m(3), t_poly(&[1, 2, 2, 1]));
        assert_eq!(v_lambda(&seq(&[2, 0, 2, 0])), t_poly(&[1, 2, 1]));
        assert_eq!(v_lambda(&seq(&[5, 3, 0, 0, 0])), v_m(3));
        assert_eq!(v_lambda(&seq(&[4, 4, 1, 1, 1])), &v_m(2) * &v_m(3));
        assert_eq!(v_lambda(&IntSequence::default()), Polynomial::one(0));
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian(1, 1), t_poly(&[1, 1]));
        assert_eq!(gaussian(2, 2), t_poly(&[1, 1, 2, 1, 1]));
        assert_eq!(gaussian(0, 5), Polynomial::one(0));
        assert_eq!(gaussian_at_minus_one(1, 1), BigInt::from(0));
        assert_eq!(gaussian_at_minus_one(2, 2), BigInt::from(2));
        assert_eq!(gaussian_at_minus_one(2, 3), BigInt::from(2));
        assert_eq!(gaussian(2, 3).substitute_t(-1), Polynomial::constant(0, 2));
        assert_eq!(gaussian_order_at_minus_one(3, 5), 1);
        assert_eq!(gaussian_order_at_minus_one(3, 4), 0);
    }

    #[test]
    fn gaussian_properties() {
        for a in 0..=6usize {
            for b in 0..=6usize {
                let g = gaussian(a, b);
                assert_eq!(g, gaussian(b, a));
                let coeffs: Vec<BigInt> = g.terms().map(|(_, c)| c.clone()).collect();
                let mut rev = coeffs.clone();
                rev.reverse();
                assert_eq!(coeffs, rev, "palindrome a={a} b={b}");
                assert_eq!(
                    g.substitute_t(1),
                    Polynomial::constant(0, binomial(BigInt::from(a + b), BigInt::from(a)))
                );
            }
        }
    }

    #[test]
    fn r_lambda_examples() {
        assert_eq!(r_lambda(2, &seq(&[0, 0])).unwrap(), v_m(2).embed(2, 0));
        assert_eq!(r_lambda(2, &seq(&[1, 0])).unwrap(), &y(2, 0) + &y(2, 1));
        assert_eq!(r_lambda(2, &seq(&[2, 0])).unwrap(), r_20());
        assert!(matches!(
            r_lambda(3, &seq(&[1, 0])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn schur_expansion_matches_literal_alternant() {
        for n in 1..=4 {
            for lambda in IntSequence::all_bounded(n, 2) {
                assert_eq!(r_lambda(n, &lambda).unwrap(), r_lambda_alternant(n, &lambda).unwrap(), "{lambda}");
            }
        }
    }

    #[test]
    fn r_lambda_coset_examples() {
        assert_eq!(r_lambda_coset(2, &seq(&[1, 0])).unwrap(), &y(2, 0) + &y(2, 1));
        assert_eq!(
            r_lambda_coset(2, &seq(&[1, 1])).unwrap(),
            &v_m(2).embed(2, 0) * &(&y(2, 0) * &y(2, 1))
        );
        assert_eq!(
            r_lambda_coset(3, &seq(&[1, 1, 0])).unwrap(),
            r_lambda(3, &seq(&[1, 1, 0])).unwrap()
        );
    }

    #[test]
    fn interleaved_level_sets_break_the_coset_formula() {
        // v_λ still divides R_λ, but the coset sum is not a polynomial
        for lambda in [seq(&[2, 1, 2]), seq(&[0, 1, 0]), seq(&[1, 0, 1])] {
            assert_eq!(r_lambda_coset(3, &lambda), Err(Error::NotDivisible), "{lambda}");
            assert!(p_lambda(3, &lambda).is_ok());
        }
    }

    #[test]
    fn p_lambda_examples() {
        assert_eq!(p_lambda(2, &seq(&[1, 1])).unwrap(), &y(2, 0) * &y(2, 1));
        assert_eq!(p_lambda(2, &seq(&[2, 0])).unwrap(), r_20());
        assert_eq!(p_lambda(2, &seq(&[0, 0])).unwrap(), Polynomial::one(2));
    }

    #[test]
    fn specialization_examples() {
        let (a, b) = (y(2, 0), y(2, 1));
        assert_eq!(
            specialize_p(2, &seq(&[2, 0]), Specialization::SchurS).unwrap(),
            &(&a.pow(2) + &(&a * &b)) + &b.pow(2)
        );
        assert_eq!(
            specialize_p(2, &seq(&[2, 0]), Specialization::SchurP).unwrap(),
            schur_p_coset(&seq(&[2]), 2).unwrap()
        );
        assert_eq!(
            specialize_p(2, &seq(&[0, 0]), Specialization::SchurP).unwrap(),
            Polynomial::one(2)
        );
    }

    #[test]
    fn lemma_sum_small() {
        for n in 1..=4 {
            assert_eq!(r_lambda(n, &IntSequence::zeros(n)).unwrap(), v_m(n).embed(n, 0));
        }
    }

    #[test]
    fn classes_are_symmetric() {
        for n in 1..=3 {
            let perms = perm::all_permutations(n).unwrap();
            for lambda in IntSequence::all_bounded(n, 2) {
                let r = r_lambda(n, &lambda).unwrap();
                let p = p_lambda(n, &lambda).unwrap();
                for w in &perms {
                    assert_eq!(r.permute_vars(w).unwrap(), r);
                    assert_eq!(p.permute_vars(w).unwrap(), p);
                }
            }
        }
    }
}
