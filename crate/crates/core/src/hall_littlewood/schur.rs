use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gysin;
use crate::poly::{ExponentVector, Polynomial};
use crate::sequence::IntSequence;

use super::Straightened;

/// The complete symmetric polynomial `h_i(y_1, ..., y_n)`: the sum of all
/// monomials of degree `i`. `h_0 = 1` and `h_i = 0` for `i < 0`.
pub fn complete_symmetric(i: i64, n: usize) -> Polynomial {
    if i < 0 {
        return Polynomial::zero(n);
    }
    let degree = u16::try_from(i).expect("degree overflow");
    let mut terms = Vec::new();
    let mut exps = vec![0u16; n];
    compositions(degree, 0, &mut exps, &mut terms);
    Polynomial::from_terms(n, terms.into_iter().map(|x| (ExponentVector::new(x, 0), 1.into())))
        .expect("arity matches")
}

fn compositions(left: u16, pos: usize, exps: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
    let n = exps.len();
    if n == 0 {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if pos == n - 1 {
        exps[pos] = left;
        out.push(exps.clone());
        return;
    }
    for e in 0..=left {
        exps[pos] = e;
        compositions(left - e, pos + 1, exps, out);
    }
    exps[pos] = 0;
}

/// Pads `λ` with zeros to length `n`; entries beyond `n` must be zero.
fn fit_partition(lambda: &IntSequence, n: usize) -> Result<Vec<u32>> {
    if !lambda.is_partition() {
        return Err(Error::NotAPartition(lambda.to_string()));
    }
    let entries = lambda.entries();
    if entries.len() > n {
        if entries[n..].iter().any(|&e| e != 0) {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: entries.iter().filter(|&&e| e != 0).count(),
            });
        }
        return Ok(entries[..n].to_vec());
    }
    Ok(lambda.padded(n).into_entries())
}

/// `s_λ = det( h_{λ_i - i + j} )_{1 ≤ i,j ≤ n}` by Laplace expansion along
/// rows, memoizing minors on the set of unused columns.
pub fn schur_s(lambda: &IntSequence, n: usize) -> Result<Polynomial> {
    let parts = fit_partition(lambda, n)?;
    let mut h_cache: HashMap<i64, Polynomial> = HashMap::new();
    let mut h = |k: i64| -> Polynomial {
        h_cache
            .entry(k)
            .or_insert_with(|| complete_symmetric(k, n))
            .clone()
    };
    let entries: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| h(parts[i] as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    let mut minors: HashMap<u32, Polynomial> = HashMap::new();
    Ok(minor(&entries, 0, (1u32 << n) - 1, &mut minors))
}

fn minor(m: &[Vec<Polynomial>], row: usize, cols: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
    let n = m.len();
    if row == n {
        return Polynomial::one(n);
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = Polynomial::zero(n);
    let mut position = 0;
    for col in 0..n {
        if cols & (1 << col) == 0 {
            continue;
        }
        let entry = &m[row][col];
        if !entry.is_zero() {
            let sub = minor(m, row + 1, cols & !(1 << col), memo);
            let term = entry * &sub;
            acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// `s_λ = (τ_E)_*( x^{λ + δ} )` with `δ = (n-1, ..., 1, 0)`.
pub fn schur_s_bialternant(lambda: &IntSequence, n: usize) -> Result<Polynomial> {
    let parts = fit_partition(lambda, n)?;
    alternant_quotient(&IntSequence::new(parts))
}

/// `a_{α+δ} / a_δ` for an arbitrary sequence `α` of length `n`; for a
/// partition this is `s_α`, otherwise it is `0` or `±s_μ`.
pub fn alternant_quotient(alpha: &IntSequence) -> Result<Polynomial> {
    let n = alpha.len();
    let shifted: Vec<u32> = alpha
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &a)| a + (n - 1 - i) as u32)
        .collect();
    gysin::full_flag_pushforward(&Polynomial::x_power(&shifted), n)
}

/// Rewrites `s_λ` for an arbitrary sequence by the exchange
/// `(..., i, j, ...) ↦ (..., j-1, i+1, ...)` on adjacent pairs with `i < j`.
/// An adjacent pair `(i, i+1)` means `s_λ = 0`.
pub fn straighten_s(lambda: &IntSequence) -> Straightened {
    let mut parts: Vec<u32> = lambda.entries().to_vec();
    let mut steps = 0usize;
    while let Some(k) = parts.windows(2).position(|w| w[0] < w[1]) {
        let (i, j) = (parts[k], parts[k + 1]);
        if j == i + 1 {
            return Straightened::Zero;
        }
        parts[k] = j - 1;
        parts[k + 1] = i + 1;
        steps += 1;
    }
    Straightened::Signed {
        sign: if steps % 2 == 0 { 1 } else { -1 },
        partition: IntSequence::new(parts),
    }
}
