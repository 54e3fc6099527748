//! Permutations of variable indices, Young-subgroup stabilizers of a
//! sequence, and canonical coset representatives of `S_n / S_n^λ`.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::sequence::IntSequence;

/// Largest `n` for which sums over `S_n` are enumerated by default.
pub const DEFAULT_PERMUTATION_BOUND: usize = 8;

/// A permutation of `{0, ..., n-1}` stored as its image list.
///
/// Displayed in 1-based one-line notation `[w(1),...,w(n)]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From 0-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(images));
            }
        }
        Ok(Permutation { images })
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(one_based: &[usize]) -> Result<Self> {
        let images = one_based
            .iter()
            .map(|&i| i.checked_sub(1))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidPermutation(one_based.to_vec()))?;
        Self::new(images)
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Swaps `a` and `b` (0-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// The cycle `c_0 -> c_1 -> ... -> c_0` (0-based).
    pub fn cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for (k, &c) in cycle.iter().enumerate() {
            if c >= n {
                return Err(Error::InvalidPermutation(cycle.to_vec()));
            }
            images[c] = cycle[(k + 1) % cycle.len()];
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &w)| i == w)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &w) in self.images.iter().enumerate() {
            images[w] = i;
        }
        Permutation { images }
    }

    /// Number of inversions, the Coxeter length.
    pub fn inversions(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count()
    }

    /// `+1` for even, `-1` for odd permutations.
    pub fn sign(&self) -> i32 {
        // parity from the cycle decomposition: n minus the number of cycles
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0;
        for start in 0..self.degree() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().map(|i| i + 1).join(","))
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    Ok(())
}

/// All `n!` permutations in lexicographic order of their image lists.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    all_permutations_with_bound(n, DEFAULT_PERMUTATION_BOUND)
}

pub fn all_permutations_with_bound(n: usize, bound: usize) -> Result<Vec<Permutation>> {
    check_bound(n, bound)?;
    Ok((0..n)
        .permutations(n)
        .map(|images| Permutation { images })
        .collect())
}

/// Level sets of a sequence: the positions sharing one value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    source: IntSequence,
    classes: Vec<Vec<usize>>,
}

impl BlockStructure {
    pub fn source(&self) -> &IntSequence {
        &self.source
    }

    /// The classes `I_1, ..., I_d` (0-based positions, each sorted), ordered
    /// by first occurrence in the sequence.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn n(&self) -> usize {
        self.source.len()
    }

    /// Class index of every position.
    pub fn class_of(&self) -> Vec<usize> {
        let mut label = vec![0; self.n()];
        for (c, class) in self.classes.iter().enumerate() {
            for &i in class {
                label[i] = c;
            }
        }
        label
    }

    /// Whether every class is a run of consecutive positions.
    pub fn is_contiguous(&self) -> bool {
        self.classes
            .iter()
            .all(|c| c.windows(2).all(|w| w[1] == w[0] + 1))
    }
}

/// Groups the positions of `λ` by value (not by runs).
pub fn block_structure(lambda: &IntSequence) -> BlockStructure {
    let mut classes: Vec<(u32, Vec<usize>)> = Vec::new();
    for (i, &v) in lambda.entries().iter().enumerate() {
        match classes.iter_mut().find(|(value, _)| *value == v) {
            Some((_, class)) => class.push(i),
            None => classes.push((v, vec![i])),
        }
    }
    BlockStructure {
        source: lambda.clone(),
        classes: classes.into_iter().map(|(_, c)| c).collect(),
    }
}

/// `|S_n^λ| = ∏ m_i!`.
pub fn stabilizer_order(blocks: &BlockStructure) -> BigInt {
    multiplicity_factorials(&blocks.multiplicities())
}

pub(crate) fn multiplicity_factorials(multiplicities: &[usize]) -> BigInt {
    multiplicities
        .iter()
        .map(|&m| (1..=m).fold(BigInt::one(), |acc, k| acc * k))
        .product()
}

/// Canonical representatives of the left cosets `w S_n^λ`: the
/// permutations whose restriction to every class is increasing.
pub fn coset_reps(blocks: &BlockStructure) -> Result<Vec<Permutation>> {
    coset_reps_for_classes(blocks.n(), blocks.classes(), DEFAULT_PERMUTATION_BOUND)
}

/// Coset representatives for the Young subgroup of an arbitrary set
/// partition of `{0, ..., n-1}`.
///
/// Enumerated as the distinct arrangements of class labels over image
/// positions, in lexicographic order; the class with label `c` sends its
/// sorted positions to the sorted image positions labelled `c`.
pub fn coset_reps_for_classes(n: usize, classes: &[Vec<usize>], bound: usize) -> Result<Vec<Permutation>> {
    check_bound(n, bound)?;
    let mut remaining: Vec<usize> = classes.iter().map(Vec::len).collect();
    let mut word = Vec::with_capacity(n);
    let mut reps = Vec::new();
    label_words(&mut remaining, &mut word, n, &mut |word| {
        let mut images = vec![0; n];
        let mut next = vec![0usize; classes.len()];
        for (pos, &label) in word.iter().enumerate() {
            images[classes[label][next[label]]] = pos;
            next[label] += 1;
        }
        reps.push(Permutation { images });
    });
    Ok(reps)
}

fn label_words(remaining: &mut [usize], word: &mut Vec<usize>, n: usize, emit: &mut impl FnMut(&[usize])) {
    if word.len() == n {
        emit(word);
        return;
    }
    for label in 0..remaining.len() {
        if remaining[label] > 0 {
            remaining[label] -= 1;
            word.push(label);
            label_words(remaining, word, n, emit);
            word.pop();
            remaining[label] += 1;
        }
    }
}

/// All elements of the Young subgroup `∏ S_{I_j}` (brute force; small n only).
pub fn stabilizer_elements(blocks: &BlockStructure) -> Result<Vec<Permutation>> {
    let label = blocks.class_of();
    Ok(all_permutations(blocks.n())?
        .into_iter()
        .filter(|w| (0..blocks.n()).all(|i| label[w.apply(i)] == label[i]))
        .collect())
}

/// Transpositions of consecutive members of each class; they generate the
/// Young subgroup.
pub fn young_generators(n: usize, classes: &[Vec<usize>]) -> Vec<Permutation> {
    classes
        .iter()
        .flat_map(|c| c.windows(2).map(|w| Permutation::transposition(n, w[0], w[1])))
        .collect()
}
