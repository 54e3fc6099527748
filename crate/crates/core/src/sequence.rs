//! Finite sequences of nonnegative integers indexing the classes.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A finite sequence `(λ_1, ..., λ_k)` of nonnegative integers.
///
/// Partitions and strict partitions are not separate types; the predicates
/// [`IntSequence::is_partition`] and [`IntSequence::is_strict_partition`]
/// are checked by the operations that need them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntSequence(Vec<u32>);

impl IntSequence {
    pub fn new(entries: Vec<u32>) -> Self {
        IntSequence(entries)
    }

    pub fn zeros(n: usize) -> Self {
        IntSequence(vec![0; n])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Weakly decreasing.
    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Strictly decreasing with positive entries.
    pub fn is_strict_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1]) && self.0.iter().all(|&e| e > 0)
    }

    /// Juxtaposition `λμ`.
    pub fn juxtapose(&self, other: &IntSequence) -> IntSequence {
        let mut entries = self.0.clone();
        entries.extend_from_slice(&other.0);
        IntSequence(entries)
    }

    /// The sequence followed by zeros up to length `n` (`ν0^{n-k}`).
    pub fn padded(&self, n: usize) -> IntSequence {
        let mut entries = self.0.clone();
        if entries.len() < n {
            entries.resize(n, 0);
        }
        IntSequence(entries)
    }

    /// Drops all zero entries, keeping the order of the rest.
    pub fn without_zeros(&self) -> IntSequence {
        IntSequence(self.0.iter().copied().filter(|&e| e > 0).collect())
    }

    /// Whether two sequences share a nonzero value.
    pub fn shares_part_with(&self, other: &IntSequence) -> bool {
        self.0.iter().any(|&a| a > 0 && other.0.contains(&a))
    }

    /// All sequences of the given length with entries in `0..=max`, in
    /// lexicographic order.
    pub fn all_bounded(len: usize, max: u32) -> Vec<IntSequence> {
        let mut out = vec![IntSequence(Vec::with_capacity(len))];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|s| {
                    (0..=max).map(move |e| {
                        let mut v = s.0.clone();
                        v.push(e);
                        IntSequence(v)
                    })
                })
                .collect();
        }
        out
    }

    /// All partitions with exactly `len` entries (zeros allowed) bounded by `max`.
    pub fn partitions_in_box(len: usize, max: u32) -> Vec<IntSequence> {
        fn rec(len: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<IntSequence>) {
            if prefix.len() == len {
                out.push(IntSequence(prefix.clone()));
                return;
            }
            for e in (0..=cap).rev() {
                prefix.push(e);
                rec(len, e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(len, max, &mut Vec::with_capacity(len), &mut out);
        out
    }

    /// All strict partitions with at most `max_len` parts, each at most `max_part`.
    /// Includes the empty partition.
    pub fn strict_partitions(max_len: usize, max_part: u32) -> Vec<IntSequence> {
        fn rec(max_len: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<IntSequence>) {
            out.push(IntSequence(prefix.clone()));
            if prefix.len() == max_len {
                return;
            }
            for e in (1..=cap).rev() {
                prefix.push(e);
                rec(max_len, e - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(max_len, max_part, &mut Vec::new(), &mut out);
        out
    }
}

impl From<Vec<u32>> for IntSequence {
    fn from(entries: Vec<u32>) -> Self {
        IntSequence(entries)
    }
}

impl From<&[u32]> for IntSequence {
    fn from(entries: &[u32]) -> Self {
        IntSequence(entries.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for IntSequence {
    fn from(entries: [u32; N]) -> Self {
        IntSequence(entries.to_vec())
    }
}

impl fmt::Display for IntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated entries, e.g. `2,0,1`. Surrounding parentheses
/// are accepted; the empty string is the empty sequence.
impl FromStr for IntSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() {
            return Ok(IntSequence::default());
        }
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad sequence entry {part:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(IntSequence)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicates() {
        assert!(IntSequence::from([3, 3, 1, 0]).is_partition());
        assert!(!IntSequence::from([3, 3, 1]).is_strict_partition());
        assert!(IntSequence::from([4, 2, 1]).is_strict_partition());
        assert!(!IntSequence::from([2, 1, 0]).is_strict_partition());
        assert!(IntSequence::default().is_strict_partition());
        assert!(!IntSequence::from([1, 2]).is_partition());
    }

    #[test]
    fn parse_and_print() {
        let s: IntSequence = "2, 0,1".parse().unwrap();
        assert_eq!(s, IntSequence::from([2, 0, 1]));
        assert_eq!(s.to_string(), "(2,0,1)");
        assert_eq!("(2,0,1)".parse::<IntSequence>().unwrap(), s);
        assert!("".parse::<IntSequence>().unwrap().is_empty());
        assert!("1,-2".parse::<IntSequence>().is_err());
        assert!("1,,2".parse::<IntSequence>().is_err());
    }

    #[test]
    fn enumerations() {
        assert_eq!(IntSequence::all_bounded(4, 3).len(), 256);
        assert_eq!(IntSequence::all_bounded(0, 3).len(), 1);
        // partitions in a 2 x 3 box: C(5,2)
        assert_eq!(IntSequence::partitions_in_box(2, 3).len(), 10);
        let strict = IntSequence::strict_partitions(4, 4);
        assert_eq!(strict.len(), 16);
        assert!(strict.iter().all(|s| s.is_strict_partition()));
    }

    #[test]
    fn padding_and_parts() {
        let nu = IntSequence::from([3, 1]);
        assert_eq!(nu.padded(4), IntSequence::from([3, 1, 0, 0]));
        assert_eq!(nu.padded(4).without_zeros(), nu);
        assert!(nu.shares_part_with(&IntSequence::from([1])));
        assert!(!nu.shares_part_with(&IntSequence::from([2, 0])));
    }
}
