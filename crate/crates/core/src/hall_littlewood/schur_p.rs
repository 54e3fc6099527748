use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gysin::{self, pairwise_product, sum_pair};
use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::sequence::IntSequence;

use super::{schur_s, Straightened};

fn require_strict(nu: &IntSequence) -> Result<()> {
    if !nu.is_strict_partition() {
        return Err(Error::NotStrict(nu.to_string()));
    }
    Ok(())
}

/// Schur's formula
/// `P_ν = Σ_{w ∈ S_n/(S_1)^k × S_{n-k}} w( y^ν ∏_{i<j, i≤k} (y_i + y_j)/(y_i - y_j) )`,
/// which is `(τ_E^k)_*( x^ν ∏_{i<j, i≤k} (x_i + x_j) )`.
pub fn schur_p_coset(nu: &IntSequence, n: usize) -> Result<Polynomial> {
    require_strict(nu)?;
    let k = nu.len();
    if k > n {
        return Err(Error::LengthMismatch { expected: n, actual: k });
    }
    let f = &Polynomial::x_power(nu.padded(n).entries())
        * &pairwise_product(n, |i, _| i < k, |i, j| sum_pair(n, i, j));
    gysin::tau_k_pushforward(&f, k, n)
}

/// Hook partitions `(i-j, 1^j)` of `i` for `0 ≤ j ≤ i-1`.
pub fn hook_partitions(i: u32) -> Vec<IntSequence> {
    (0..i)
        .map(|j| {
            let mut parts = vec![i - j];
            parts.extend(std::iter::repeat(1).take(j as usize));
            IntSequence::new(parts)
        })
        .collect()
}

/// `P_ν` built from one-row and two-row functions:
/// `P_i = Σ s_μ` over hooks `μ` of `i`,
/// `P_{i,j} = P_i P_j + 2 Σ_{d=1}^{j-1} (-1)^d P_{i+d} P_{j-d} + (-1)^j P_{i+j}`,
/// and for longer `ν` the alternating expansions along the first part
/// (odd length) or along pairs containing `ν_1` (even length).
pub fn schur_p_recursive(nu: &IntSequence, n: usize) -> Result<Polynomial> {
    require_strict(nu)?;
    let mut builder = PBuilder {
        n,
        memo: HashMap::new(),
        rows: HashMap::new(),
    };
    builder.p(nu.entries())
}

struct PBuilder {
    n: usize,
    memo: HashMap<Vec<u32>, Polynomial>,
    rows: HashMap<u32, Polynomial>,
}

impl PBuilder {
    fn one_row(&mut self, i: u32) -> Result<Polynomial> {
        if let Some(p) = self.rows.get(&i) {
            return Ok(p.clone());
        }
        let mut acc = if i == 0 {
            Polynomial::one(self.n)
        } else {
            Polynomial::zero(self.n)
        };
        for hook in hook_partitions(i) {
            // hooks longer than n vanish in n variables
            if hook.len() <= self.n {
                acc = &acc + &schur_s(&hook, self.n)?;
            }
        }
        self.rows.insert(i, acc.clone());
        Ok(acc)
    }

    fn two_row(&mut self, i: u32, j: u32) -> Result<Polynomial> {
        let mut acc = &self.one_row(i)? * &self.one_row(j)?;
        for d in 1..j {
            let term = &self.one_row(i + d)? * &self.one_row(j - d)?;
            let term = term.scale(&2.into());
            acc = if d % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        let last = self.one_row(i + j)?;
        Ok(if j % 2 == 0 { &acc + &last } else { &acc - &last })
    }

    fn p(&mut self, parts: &[u32]) -> Result<Polynomial> {
        if let Some(p) = self.memo.get(parts) {
            return Ok(p.clone());
        }
        let result = match parts.len() {
            0 => Polynomial::one(self.n),
            1 => self.one_row(parts[0])?,
            2 => self.two_row(parts[0], parts[1])?,
            k if k % 2 == 1 => {
                let mut acc = Polynomial::zero(self.n);
                for m in 0..k {
                    let rest: Vec<u32> = without(parts, &[m]);
                    let term = &self.one_row(parts[m])? * &self.p(&rest)?;
                    acc = if m % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
            k => {
                let mut acc = Polynomial::zero(self.n);
                for m in 1..k {
                    let rest: Vec<u32> = without(parts, &[0, m]);
                    let term = &self.p(&[parts[0], parts[m]])? * &self.p(&rest)?;
                    acc = if m % 2 == 1 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        };
        self.memo.insert(parts.to_vec(), result.clone());
        Ok(result)
    }
}

fn without(parts: &[u32], drop: &[usize]) -> Vec<u32> {
    parts
        .iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(i))
        .map(|(_, &p)| p)
        .collect()
}

/// Rewrites `P_λ` for a sequence of positive entries: zero if an entry
/// repeats, otherwise `(-1)^l P_μ` with `μ` the decreasing rearrangement and
/// `l` the length of the rearranging permutation.
pub fn straighten_p(lambda: &IntSequence) -> Result<Straightened> {
    let parts = lambda.entries();
    if parts.contains(&0) {
        return Err(Error::InvalidSequence {
            seq: lambda.to_string(),
            reason: "entries must be positive; strip zeros first".into(),
        });
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(Straightened::Zero);
    }
    // position of each entry in the sorted order
    let images: Vec<usize> = parts
        .iter()
        .map(|p| sorted.iter().position(|s| s == p).expect("present"))
        .collect();
    let length = Permutation::new(images).expect("distinct entries").inversions();
    Ok(Straightened::Signed {
        sign: if length % 2 == 0 { 1 } else { -1 },
        partition: IntSequence::new(sorted),
    })
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

    #[test]
    fn coset_examples() {
        let (a, b) = (y(2, 0), y(2, 1));
        assert_eq!(schur_p_coset(&seq(&[1]), 2).unwrap(), &a + &b);
        assert_eq!(schur_p_coset(&seq(&[2]), 2).unwrap(), (&a + &b).pow(2));
        assert_eq!(
            schur_p_coset(&seq(&[2, 1]), 2).unwrap(),
            &(&a * &b) * &(&a + &b)
        );
        assert_eq!(schur_p_coset(&IntSequence::default(), 3).unwrap(), Polynomial::one(3));
        assert!(matches!(schur_p_coset(&seq(&[1, 1]), 2), Err(Error::NotStrict(_))));
        assert!(matches!(schur_p_coset(&seq(&[3, 2, 1]), 2), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn recursive_examples() {
        let (a, b) = (y(2, 0), y(2, 1));
        assert_eq!(schur_p_recursive(&seq(&[2]), 2).unwrap(), (&a + &b).pow(2));
        assert_eq!(schur_p_recursive(&seq(&[2, 1]), 2).unwrap(), &(&a * &b) * &(&a + &b));
        assert_eq!(
            schur_p_recursive(&seq(&[1]), 3).unwrap(),
            &(&y(3, 0) + &y(3, 1)) + &y(3, 2)
        );
        assert!(schur_p_recursive(&seq(&[2, 2]), 3).is_err());
    }

    #[test]
    fn recursive_matches_coset_small() {
        for n in 1..=4 {
            for nu in IntSequence::strict_partitions(n, 4) {
                assert_eq!(
                    schur_p_recursive(&nu, n).unwrap(),
                    schur_p_coset(&nu, n).unwrap(),
                    "nu = {nu}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn hooks() {
        assert_eq!(hook_partitions(2), vec![seq(&[2]), seq(&[1, 1])]);
        assert_eq!(hook_partitions(3).len(), 3);
        assert!(hook_partitions(0).is_empty());
    }

    #[test]
    fn straightening() {
        assert_eq!(straighten_p(&seq(&[2, 2])).unwrap(), Straightened::Zero);
        assert_eq!(
            straighten_p(&seq(&[1, 2])).unwrap(),
            Straightened::Signed { sign: -1, partition: seq(&[2, 1]) }
        );
        assert_eq!(
            straighten_p(&seq(&[3, 2, 1])).unwrap(),
            Straightened::Signed { sign: 1, partition: seq(&[3, 2, 1]) }
        );
        assert_eq!(
            straighten_p(&seq(&[1, 3, 2])).unwrap(),
            Straightened::Signed { sign: 1, partition: seq(&[3, 2, 1]) }
        );
        assert!(straighten_p(&seq(&[2, 0])).is_err());
    }

    #[test]
    fn sign_rule_matches_coset_formula() {
        // Schur's formula evaluated on an unsorted sequence of distinct parts
        let n = 3;
        let raw = seq(&[1, 3]);
        let f = &Polynomial::x_power(raw.padded(n).entries())
            * &pairwise_product(n, |i, _| i < 2, |i, j| sum_pair(n, i, j));
        let direct = gysin::tau_k_pushforward(&f, 2, n).unwrap();
        let expected = -schur_p_coset(&seq(&[3, 1]), n).unwrap();
        assert_eq!(direct, expected);
    }
}
