//! Push-forward operators in the Chern-root model.
//!
//! Every push-forward here is the symmetrizing operator
//!
//! ```text
//! ∂(f) = Σ_{w ∈ S_n / S_split} w( f / ∏_{cross pairs i<j} (x_i - x_j) )
//! ```
//!
//! evaluated without fractions: `f / Π_cross = f · Π_within / V` with `V` the
//! full Vandermonde, and `w(V) = sign(w) V`, so
//! `∂(f) = (Σ_w sign(w) w(f · Π_within)) / V`. The Vandermonde is the only
//! divisor ever used.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::{self, BlockStructure, Permutation, DEFAULT_PERMUTATION_BOUND};
use crate::poly::{permute_exponents, ExponentVector, Polynomial};

/// An ordered partition of the root indices `{0, ..., n-1}` into blocks.
///
/// The Grassmann split puts the quotient roots at `0..q` and the sub-bundle
/// roots at `q..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSplit {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl RootSplit {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidSplit("empty block".into()));
            }
            for &i in block {
                if i >= n {
                    return Err(Error::InvalidSplit(format!("index {i} out of range for n = {n}")));
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidSplit(format!("index {i} appears twice")));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidSplit(format!("index {missing} not covered")));
        }
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(RootSplit { n, blocks })
    }

    /// The tautological split `Q = {0..q}`, `S = {q..q+r}`.
    pub fn grassmann(q: usize, r: usize) -> Result<Self> {
        if q == 0 || r == 0 {
            return Err(Error::InvalidSplit(format!("Grassmann split needs q, r > 0 (got {q}, {r})")));
        }
        Self::new(q + r, vec![(0..q).collect(), (q..q + r).collect()])
    }

    pub fn full_flag(n: usize) -> Self {
        RootSplit {
            n,
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// Singletons `{0}, ..., {k-1}` followed by the block `{k, ..., n-1}`.
    pub fn tau_k(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidSplit(format!("k = {k} exceeds n = {n}")));
        }
        let mut blocks: Vec<Vec<usize>> = (0..k).map(|i| vec![i]).collect();
        if k < n {
            blocks.push((k..n).collect());
        }
        Self::new(n, blocks)
    }

    /// The level sets of a sequence.
    pub fn from_blocks(blocks: &BlockStructure) -> Self {
        RootSplit {
            n: blocks.n(),
            blocks: blocks.classes().to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_full_flag(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    fn block_of(&self) -> Vec<usize> {
        let mut label = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                label[i] = b;
            }
        }
        label
    }

    /// Number of pairs `i < j` lying in different blocks; the degree drop
    /// of the push-forward.
    pub fn cross_pair_count(&self) -> usize {
        let label = self.block_of();
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| label[i] != label[j])
            .count()
    }

    /// `∏ (x_i - x_j)` over pairs `i < j` in a common block.
    pub fn within_vandermonde(&self) -> Polynomial {
        let label = self.block_of();
        pairwise_product(self.n, |i, j| label[i] == label[j], |i, j| difference(self.n, i, j))
    }

    /// Whether `f` is invariant under the Young subgroup of the split.
    pub fn is_invariant(&self, f: &Polynomial) -> Result<bool> {
        for g in perm::young_generators(self.n, &self.blocks) {
            if f.permute_vars(&g)? != *f {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `x_i - x_j`.
pub fn difference(n: usize, i: usize, j: usize) -> Polynomial {
    &Polynomial::var(n, i) - &Polynomial::var(n, j)
}

/// `x_i - t x_j`.
pub fn t_difference(n: usize, i: usize, j: usize) -> Polynomial {
    &Polynomial::var(n, i) - &(&Polynomial::t(n) * &Polynomial::var(n, j))
}

/// `x_i + x_j`.
pub fn sum_pair(n: usize, i: usize, j: usize) -> Polynomial {
    &Polynomial::var(n, i) + &Polynomial::var(n, j)
}

/// `∏ factor(i, j)` over pairs `i < j` selected by `keep`.
pub fn pairwise_product(
    n: usize,
    keep: impl Fn(usize, usize) -> bool,
    factor: impl Fn(usize, usize) -> Polynomial,
) -> Polynomial {
    let mut acc = Polynomial::one(n);
    for i in 0..n {
        for j in i + 1..n {
            if keep(i, j) {
                acc = &acc * &factor(i, j);
            }
        }
    }
    acc
}

/// The Vandermonde `∏_{i<j} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> Polynomial {
    pairwise_product(n, |_, _| true, |i, j| difference(n, i, j))
}

/// Collects `Σ_{w ∈ S_n} sign(w) w(g)` on strictly decreasing exponents:
/// `g` and the returned terms have the same alternant. Monomials with a
/// repeated exponent cancel; each other monomial moves to its decreasing
/// rearrangement with the sign of that rearrangement.
pub fn alternant_support(g: &Polynomial) -> BTreeMap<ExponentVector, BigInt> {
    let n = g.arity();
    let mut collapsed: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
    for (e, c) in g.terms() {
        let x = e.x_exponents();
        let mut sorted = x.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let ascents = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| x[i] < x[j])
            .count();
        let coeff = if ascents % 2 == 0 { c.clone() } else { -c };
        *collapsed
            .entry(ExponentVector::new(sorted, e.t_exponent()))
            .or_insert_with(BigInt::zero) += coeff;
    }
    collapsed.retain(|_, c| !c.is_zero());
    collapsed
}

/// `Σ_{w ∈ S_n} sign(w) w(g)`, expanding each distinct alternant of
/// [`alternant_support`] once.
pub fn antisymmetrize(g: &Polynomial) -> Result<Polynomial> {
    let n = g.arity();
    let perms = perm::all_permutations(n)?;
    let collapsed = alternant_support(g);
    let signs: Vec<i32> = perms.iter().map(Permutation::sign).collect();
    let mut expanded = Vec::with_capacity(collapsed.len() * perms.len());
    for (beta, c) in collapsed {
        let neg = -&c;
        for (w, &s) in perms.iter().zip(&signs) {
            let coeff = if s > 0 { c.clone() } else { neg.clone() };
            expanded.push((permute_exponents(&beta, w), coeff));
        }
    }
    Polynomial::from_terms(n, expanded)
}

/// `Σ_{r ∈ reps} sign(r) r(g)` over the given representatives, literally.
pub fn signed_sum(g: &Polynomial, reps: &[Permutation]) -> Result<Polynomial> {
    let mut terms = Vec::with_capacity(g.len() * reps.len());
    for w in reps {
        if w.degree() != g.arity() {
            return Err(Error::DegreeMismatch {
                degree: w.degree(),
                arity: g.arity(),
            });
        }
        let s = w.sign();
        for (e, c) in g.terms() {
            let coeff = if s > 0 { c.clone() } else { -c };
            terms.push((permute_exponents(e, w), coeff));
        }
    }
    Polynomial::from_terms(g.arity(), terms)
}

/// The symmetrizing operator of a root split, applied to a block-symmetric `f`.
pub fn partial_flag_pushforward(f: &Polynomial, split: &RootSplit) -> Result<Polynomial> {
    if f.arity() != split.n() {
        return Err(Error::ArityMismatch {
            left: f.arity(),
            right: split.n(),
        });
    }
    if split.n() > DEFAULT_PERMUTATION_BOUND {
        return Err(Error::BoundExceeded {
            n: split.n(),
            bound: DEFAULT_PERMUTATION_BOUND,
        });
    }
    if !split.is_invariant(f)? {
        return Err(Error::NonInvariantInput);
    }
    let numerator = if split.is_full_flag() {
        antisymmetrize(f)?
    } else {
        let reps = perm::coset_reps_for_classes(split.n(), split.blocks(), DEFAULT_PERMUTATION_BOUND)?;
        signed_sum(&(f * &split.within_vandermonde()), &reps)?
    };
    numerator.divide_by_vandermonde()
}

/// `(τ_E)_*`: the full Jacobi symmetrizer. No invariance is required.
pub fn full_flag_pushforward(f: &Polynomial, n: usize) -> Result<Polynomial> {
    partial_flag_pushforward(f, &RootSplit::full_flag(n))
}

/// `π_*` for the Grassmann bundle of rank-`q` quotients; `f` must be
/// symmetric in `x_1..x_q` and in `x_{q+1}..x_n` separately.
pub fn grassmann_pushforward(f: &Polynomial, q: usize, r: usize) -> Result<Polynomial> {
    partial_flag_pushforward(f, &RootSplit::grassmann(q, r)?)
}

/// `(τ_E^k)_*`; `f` must be symmetric in the last `n - k` variables.
pub fn tau_k_pushforward(f: &Polynomial, k: usize, n: usize) -> Result<Polynomial> {
    partial_flag_pushforward(f, &RootSplit::tau_k(k, n)?)
}
