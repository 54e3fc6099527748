//! Sparse polynomials in `x_1, ..., x_n` and `t` with arbitrary-precision
//! integer coefficients.
//!
//! `t` is stored as a distinguished extra exponent in every monomial and is
//! never substituted implicitly. Polynomials of arity 0 are polynomials in
//! `t` alone (the coefficient ring `Z[t]`); they are lifted into a larger
//! arity explicitly with [`Polynomial::embed`].

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Exponents of one monomial `x_1^{a_1} ... x_n^{a_n} t^k`.
///
/// Ordered graded-lexicographically on the x-exponents (lower degree first,
/// `x_1` before `x_2` within a degree), ties broken by ascending t-exponent.
/// This is a monomial order, so it also serves the leading-term division.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    x: Vec<u16>,
    t: u16,
}

impl ExponentVector {
    pub fn new(x: Vec<u16>, t: u16) -> Self {
        ExponentVector { x, t }
    }

    pub fn one(arity: usize) -> Self {
        ExponentVector { x: vec![0; arity], t: 0 }
    }

    pub fn x_exponents(&self) -> &[u16] {
        &self.x
    }

    pub fn t_exponent(&self) -> u16 {
        self.t
    }

    pub fn arity(&self) -> usize {
        self.x.len()
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().map(|&e| e as u32).sum()
    }

    pub fn is_t_only(&self) -> bool {
        self.x.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.x.len(), other.x.len());
        let x = self
            .x
            .iter()
            .zip(&other.x)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        let t = self.t.checked_add(other.t).expect("exponent overflow");
        ExponentVector { x, t }
    }

    /// `self / other` if `other` divides `self`.
    fn checked_div(&self, other: &ExponentVector) -> Option<ExponentVector> {
        let x = self
            .x
            .iter()
            .zip(&other.x)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        let t = self.t.checked_sub(other.t)?;
        Some(ExponentVector { x, t })
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x_degree()
            .cmp(&other.x_degree())
            .then_with(|| other.x.cmp(&self.x))
            .then_with(|| self.t.cmp(&other.t))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `arity` x-variables and `t` over the integers.
///
/// Terms are kept in canonical order with no zero coefficients, so
/// structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

fn accumulate(acc: &mut HashMap<ExponentVector, BigInt>, key: ExponentVector, coeff: BigInt) {
    match acc.entry(key) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
    }
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, 1)
    }

    pub fn constant(arity: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(arity, ExponentVector::one(arity), c)
    }

    pub fn monomial(arity: usize, exponents: ExponentVector, coeff: impl Into<BigInt>) -> Self {
        assert_eq!(exponents.arity(), arity, "exponent vector arity");
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponents, coeff);
        }
        Polynomial { arity, terms }
    }

    /// `x_1^{e_1} ... x_n^{e_n}` for the given exponents.
    pub fn x_power(exponents: &[u32]) -> Self {
        let x = exponents
            .iter()
            .map(|&e| u16::try_from(e).expect("exponent overflow"))
            .collect();
        Self::monomial(exponents.len(), ExponentVector::new(x, 0), 1)
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index {i} out of range for arity {arity}");
        let mut x = vec![0; arity];
        x[i] = 1;
        Self::monomial(arity, ExponentVector::new(x, 0), 1)
    }

    pub fn t(arity: usize) -> Self {
        Self::monomial(arity, ExponentVector::new(vec![0; arity], 1), 1)
    }

    /// `Σ c_k t^k` from the coefficient list `[c_0, c_1, ...]`.
    pub fn from_t_coeffs<C: Into<BigInt>>(arity: usize, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in coeffs.into_iter().enumerate() {
            let c = c.into();
            if !c.is_zero() {
                let k = u16::try_from(k).expect("exponent overflow");
                terms.insert(ExponentVector::new(vec![0; arity], k), c);
            }
        }
        Polynomial { arity, terms }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (ExponentVector, BigInt)>) -> Result<Self> {
        let mut acc = HashMap::new();
        for (e, c) in terms {
            if e.arity() != arity {
                return Err(Error::ArityMismatch { left: arity, right: e.arity() });
            }
            accumulate(&mut acc, e, c);
        }
        Ok(Self::from_accumulator(arity, acc))
    }

    fn from_accumulator(arity: usize, acc: HashMap<ExponentVector, BigInt>) -> Self {
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { arity, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map_or(false, |(e, c)| e.x_degree() == 0 && e.t == 0 && c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &ExponentVector) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    /// The largest term in the monomial order.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.last_key_value()
    }

    /// True when no term involves an x-variable.
    pub fn is_t_only(&self) -> bool {
        self.terms.keys().all(ExponentVector::is_t_only)
    }

    pub fn max_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::x_degree).max()
    }

    /// Every term has the same x-degree (the zero polynomial counts).
    pub fn is_x_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(ExponentVector::x_degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Re-embeds into arity `arity`, sending `x_{i}` to `x_{i + offset}`.
    pub fn embed(&self, arity: usize, offset: usize) -> Polynomial {
        assert!(offset + self.arity <= arity, "embedding does not fit");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut x = vec![0; arity];
                x[offset..offset + self.arity].copy_from_slice(&e.x);
                (ExponentVector::new(x, e.t), c.clone())
            })
            .collect();
        Polynomial { arity, terms }
    }

    fn check_arity(&self, other: &Polynomial) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e.clone(), c.clone());
        }
        Ok(Polynomial { arity: self.arity, terms })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e.clone(), -c);
        }
        Ok(Polynomial { arity: self.arity, terms })
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.arity));
        }
        let mut acc = HashMap::with_capacity(self.len() * other.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                accumulate(&mut acc, ea.mul(eb), ca * cb);
            }
        }
        Ok(Self::from_accumulator(self.arity, acc))
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        Polynomial { arity: self.arity, terms }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one(self.arity);
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// Product of an iterator of polynomials of the given arity.
    pub fn product<'a>(arity: usize, factors: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
        factors
            .into_iter()
            .fold(Polynomial::one(arity), |acc, f| &acc * f)
    }

    /// Applies `w` to the variables: `x_i ↦ x_{w(i)}`; `t` is fixed.
    pub fn permute_vars(&self, w: &Permutation) -> Result<Polynomial> {
        if w.degree() != self.arity {
            return Err(Error::DegreeMismatch {
                degree: w.degree(),
                arity: self.arity,
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (permute_exponents(e, w), c.clone()))
            .collect();
        Ok(Polynomial { arity: self.arity, terms })
    }

    /// Replaces `t` by the integer `c`.
    pub fn substitute_t(&self, c: i64) -> Polynomial {
        let c = BigInt::from(c);
        let mut acc = HashMap::new();
        for (e, v) in &self.terms {
            let factor = num_traits::pow(c.clone(), e.t as usize);
            accumulate(&mut acc, ExponentVector::new(e.x.clone(), 0), v * factor);
        }
        Self::from_accumulator(self.arity, acc)
    }

    /// Exact integer value at `x = point`, `t = t_value`.
    pub fn eval_at(&self, point: &[BigInt], t_value: &BigInt) -> Result<BigInt> {
        if point.len() != self.arity {
            return Err(Error::LengthMismatch {
                expected: self.arity,
                actual: point.len(),
            });
        }
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (base, &k) in point.iter().zip(&e.x) {
                if k > 0 {
                    term *= num_traits::pow(base.clone(), k as usize);
                }
            }
            if e.t > 0 {
                term *= num_traits::pow(t_value.clone(), e.t as usize);
            }
            total += term;
        }
        Ok(total)
    }

    pub fn eval_at_i64(&self, point: &[i64], t_value: i64) -> Result<BigInt> {
        let point: Vec<BigInt> = point.iter().map(|&v| BigInt::from(v)).collect();
        self.eval_at(&point, &BigInt::from(t_value))
    }

    /// Returns `h` with `self = divisor * h`, or [`Error::NotDivisible`].
    ///
    /// Divisors of the form `±(x_i - x_j)` use synthetic division in `x_i`;
    /// anything else goes through leading-term reduction.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_arity(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some((i, j)) = divisor.as_variable_difference() {
            return self.divide_by_difference(i, j);
        }
        self.divide_by_reduction(divisor)
    }

    /// Exact division of every coefficient by the integer `c`.
    pub fn divide_exact_scalar(&self, c: &BigInt) -> Result<Polynomial> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut terms = BTreeMap::new();
        for (e, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            terms.insert(e.clone(), q);
        }
        Ok(Polynomial { arity: self.arity, terms })
    }

    /// Exact division by `∏_{i<j} (x_i - x_j)`, one linear factor at a time.
    pub fn divide_by_vandermonde(&self) -> Result<Polynomial> {
        let mut quotient = self.clone();
        for i in 0..self.arity {
            for j in i + 1..self.arity {
                quotient = quotient.divide_by_difference(i, j)?;
            }
        }
        Ok(quotient)
    }

    /// `Some((i, j))` when `self = x_i - x_j` exactly.
    fn as_variable_difference(&self) -> Option<(usize, usize)> {
        if self.terms.len() != 2 {
            return None;
        }
        let mut plus = None;
        let mut minus = None;
        for (e, c) in &self.terms {
            if e.t != 0 || e.x_degree() != 1 {
                return None;
            }
            let idx = e.x.iter().position(|&k| k == 1)?;
            if c.is_one() {
                plus = Some(idx);
            } else if (-c).is_one() {
                minus = Some(idx);
            } else {
                return None;
            }
        }
        Some((plus?, minus?))
    }

    /// Synthetic division by `x_i - x_j` viewing `self` as a polynomial in
    /// `x_i`: with `p = Σ p_k x_i^k`, the quotient digits satisfy
    /// `h_{k-1} = p_k + x_j h_k`, and the remainder `p_0 + x_j h_0` must vanish.
    fn divide_by_difference(&self, i: usize, j: usize) -> Result<Polynomial> {
        debug_assert!(i != j);
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut digits: BTreeMap<u16, HashMap<ExponentVector, BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = std::mem::replace(&mut rest.x[i], 0);
            digits.entry(k).or_default().insert(rest, c.clone());
        }
        let top = *digits.keys().next_back().expect("nonzero polynomial");
        let mut quotient = BTreeMap::new();
        let mut carry: HashMap<ExponentVector, BigInt> = HashMap::new();
        for k in (1..=top).rev() {
            let mut next: HashMap<ExponentVector, BigInt> = HashMap::with_capacity(carry.len());
            for (mut e, c) in carry {
                e.x[j] = e.x[j].checked_add(1).expect("exponent overflow");
                accumulate(&mut next, e, c);
            }
            if let Some(p_k) = digits.remove(&k) {
                for (e, c) in p_k {
                    accumulate(&mut next, e, c);
                }
            }
            next.retain(|_, c| !c.is_zero());
            for (e, c) in &next {
                let mut full = e.clone();
                full.x[i] = k - 1;
                quotient.insert(full, c.clone());
            }
            carry = next;
        }
        let mut remainder: HashMap<ExponentVector, BigInt> = digits.remove(&0).unwrap_or_default();
        for (mut e, c) in carry {
            e.x[j] = e.x[j].checked_add(1).expect("exponent overflow");
            accumulate(&mut remainder, e, c);
        }
        if remainder.values().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Polynomial {
            arity: self.arity,
            terms: quotient,
        })
    }

    fn divide_by_reduction(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (lead_exp, lead_coeff) = divisor.leading_term().expect("nonzero divisor");
        let mut remainder = self.terms.clone();
        let mut quotient = BTreeMap::new();
        while let Some((e, c)) = remainder.last_key_value() {
            let q_exp = e.checked_div(lead_exp).ok_or(Error::NotDivisible)?;
            let (q_coeff, r) = c.div_rem(lead_coeff);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (de, dc) in &divisor.terms {
                add_term(&mut remainder, de.mul(&q_exp), -(dc * &q_coeff));
            }
            quotient.insert(q_exp, q_coeff);
        }
        Ok(Polynomial {
            arity: self.arity,
            terms: quotient,
        })
    }

    /// Canonical text form, e.g. `1 * x1^2 + -1 * x1^1 x2^1 * t^1`.
    ///
    /// Polynomials that do not involve any x-variable print in the compact
    /// `t`-polynomial form `1 + 2*t + 2*t^2 + t^3`. Both forms are accepted
    /// by [`Polynomial::parse`].
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// LaTeX form in canonical term order, e.g. `x_{1}^{2} - x_{1} x_{2} t`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let magnitude = c.abs();
            let mut factors: Vec<String> = e
                .x
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| latex_power(&format!("x_{{{}}}", i + 1), k))
                .collect();
            if e.t > 0 {
                factors.push(latex_power("t", e.t));
            }
            if factors.is_empty() || !magnitude.is_one() {
                factors.insert(0, magnitude.to_string());
            }
            out.push_str(&factors.join(" "));
        }
        out
    }

    /// Parses the text produced by [`Polynomial::to_text`] in the given arity.
    pub fn parse(text: &str, arity: usize) -> Result<Polynomial> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        for raw in text.split(" + ") {
            terms.push(parse_term(raw, arity)?);
        }
        Polynomial::from_terms(arity, terms)
    }
}

fn add_term(terms: &mut BTreeMap<ExponentVector, BigInt>, e: ExponentVector, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(e) {
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
    }
}

pub(crate) fn permute_exponents(e: &ExponentVector, w: &Permutation) -> ExponentVector {
    let mut x = vec![0; e.x.len()];
    for (i, &k) in e.x.iter().enumerate() {
        x[w.apply(i)] = k;
    }
    ExponentVector::new(x, e.t)
}

fn parse_term(raw: &str, arity: usize) -> Result<(ExponentVector, BigInt)> {
    let bad = |msg: &str| Error::Parse(format!("{msg} in term {raw:?}"));
    let mut s = raw.trim();
    let mut coeff = BigInt::one();
    // compact t-form: "-t^2", "t"
    if let Some(rest) = s.strip_prefix('-') {
        if rest.starts_with('t') {
            coeff = -coeff;
            s = rest;
        }
    }
    let mut x = vec![0u16; arity];
    let mut t = 0u16;
    let mut saw_coeff = false;
    for factor in s.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(bad("empty factor"));
        }
        for atom in factor.split_whitespace() {
            if let Ok(c) = atom.parse::<BigInt>() {
                if saw_coeff {
                    return Err(bad("two coefficients"));
                }
                saw_coeff = true;
                coeff *= c;
                continue;
            }
            let (name, exp) = match atom.split_once('^') {
                Some((name, exp)) => (
                    name,
                    exp.parse::<u16>().map_err(|_| bad("bad exponent"))?,
                ),
                None => (atom, 1),
            };
            if name == "t" {
                t = t.checked_add(exp).ok_or_else(|| bad("exponent overflow"))?;
            } else if let Some(idx) = name.strip_prefix('x') {
                let idx: usize = idx.parse().map_err(|_| bad("bad variable"))?;
                if idx == 0 || idx > arity {
                    return Err(bad("variable out of range"));
                }
                x[idx - 1] = x[idx - 1]
                    .checked_add(exp)
                    .ok_or_else(|| bad("exponent overflow"))?;
            } else {
                return Err(bad("unknown atom"));
            }
        }
    }
    Ok((ExponentVector::new(x, t), coeff))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let compact = self.is_t_only();
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if compact {
                write_t_term(f, c, e.t)?;
            } else {
                write!(f, "{c}")?;
                let mut first = true;
                for (i, &k) in e.x.iter().enumerate() {
                    if k == 0 {
                        continue;
                    }
                    write!(f, "{}x{}^{}", if first { " * " } else { " " }, i + 1, k)?;
                    first = false;
                }
                if e.t > 0 {
                    write!(f, " * t^{}", e.t)?;
                }
            }
        }
        Ok(())
    }
}

fn latex_power(base: &str, k: u16) -> String {
    if k == 1 {
        base.to_string()
    } else {
        format!("{base}^{{{k}}}")
    }
}

fn write_t_term(f: &mut fmt::Formatter<'_>, c: &BigInt, k: u16) -> fmt::Result {
    if k == 0 {
        return write!(f, "{c}");
    }
    if c.is_one() {
        // nothing
    } else if (-c).is_one() {
        write!(f, "-")?;
    } else {
        write!(f, "{c}*")?;
    }
    if k == 1 {
        write!(f, "t")
    } else {
        write!(f, "t^{k}")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        Polynomial {
            arity: self.arity,
            terms,
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

// Operator forms panic on arity mismatch; the `checked_*` methods report it.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial arity mismatch")
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$checked(&rhs).expect("polynomial arity mismatch")
            }
        }

        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$checked(rhs).expect("polynomial arity mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn t_poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_t_coeffs(0, coeffs.iter().copied())
    }

    #[test]
    fn add_examples() {
        assert!((&x(1, 0) + &(-x(1, 0))).is_zero());
        let sum = &x(2, 0) + &x(2, 1);
        assert_eq!(sum.len(), 2);
        assert_eq!(sum.coeff(&ExponentVector::new(vec![0, 1], 0)), BigInt::one());
        assert_eq!(&t_poly(&[1, 1]) + &Polynomial::t(0), t_poly(&[1, 2]));
        assert!(matches!(
            x(1, 0).checked_add(&x(2, 0)),
            Err(Error::ArityMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn mul_examples() {
        let (a, b) = (x(2, 0), x(2, 1));
        assert_eq!(&(&a - &b) * &(&a + &b), &a.pow(2) - &b.pow(2));
        assert_eq!(&t_poly(&[1, 1]) * &t_poly(&[1, 1, 1]), t_poly(&[1, 2, 2, 1]));
        let p = &a.pow(3) - &(&b * &Polynomial::t(2));
        assert_eq!(&p * &Polynomial::one(2), p);
        assert!(x(1, 0).checked_mul(&x(3, 0)).is_err());
    }

    #[test]
    fn permute_examples() {
        let (a, b) = (x(2, 0), x(2, 1));
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!((&a.pow(2) * &b).permute_vars(&swap).unwrap(), &b.pow(2) * &a);
        let p = &a.pow(2) - &(&b * &Polynomial::t(2));
        assert_eq!(p.permute_vars(&Permutation::identity(2)).unwrap(), p);
        let cycle = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        let f = &x(3, 0) - &(&Polynomial::t(3) * &x(3, 1));
        let g = &x(3, 1) - &(&Polynomial::t(3) * &x(3, 2));
        assert_eq!(f.permute_vars(&cycle).unwrap(), g);
        assert!(matches!(
            f.permute_vars(&swap),
            Err(Error::DegreeMismatch { degree: 2, arity: 3 })
        ));
    }

    #[test]
    fn divide_examples() {
        let (a, b) = (x(2, 0), x(2, 1));
        let diff = &a - &b;
        assert_eq!((&a.pow(2) - &b.pow(2)).divide_exact(&diff).unwrap(), &a + &b);
        assert_eq!((&a.pow(2) + &b.pow(2)).divide_exact(&diff), Err(Error::NotDivisible));
        let r00 = t_poly(&[1, 1]).embed(2, 0);
        assert_eq!(r00.divide_exact(&t_poly(&[1, 1]).embed(2, 0)).unwrap(), Polynomial::one(2));
        assert_eq!(a.divide_exact(&Polynomial::zero(2)), Err(Error::DivisionByZero));
        // general divisor through reduction
        let q = &(&a + &Polynomial::t(2)) * &b;
        let h = &a.pow(2) - &Polynomial::constant(2, 3);
        assert_eq!((&q * &h).divide_exact(&q).unwrap(), h);
        assert_eq!(
            Polynomial::constant(1, 6).divide_exact_scalar(&BigInt::from(4)),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn vandermonde_division() {
        let (a, b, c) = (x(3, 0), x(3, 1), x(3, 2));
        let v = Polynomial::product(3, [&(&a - &b), &(&a - &c), &(&b - &c)]);
        let s = &(&a + &b) + &c;
        assert_eq!((&v * &s).divide_by_vandermonde().unwrap(), s);
        assert_eq!(s.divide_by_vandermonde(), Err(Error::NotDivisible));
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(t_poly(&[1, 1]).substitute_t(0), Polynomial::one(0));
        assert!(t_poly(&[1, 1]).substitute_t(-1).is_zero());
        assert_eq!(t_poly(&[1, 1, 2, 1, 1]).substitute_t(-1), Polynomial::constant(0, 2));
        let p = &x(2, 0) * &Polynomial::t(2).pow(3);
        assert_eq!(p.substitute_t(2), x(2, 0).scale(&BigInt::from(8)));
    }

    #[test]
    fn eval_examples() {
        let (a, b) = (x(2, 0), x(2, 1));
        assert_eq!((&a + &b).eval_at_i64(&[2, 3], 7).unwrap(), BigInt::from(5));
        assert_eq!(Polynomial::t(2).pow(2).eval_at_i64(&[0, 0], -1).unwrap(), BigInt::one());
        let f = &a - &(&Polynomial::t(2) * &b);
        assert_eq!(f.eval_at_i64(&[1, 1], 1).unwrap(), BigInt::zero());
        assert!(matches!(f.eval_at_i64(&[1], 1), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn text_forms() {
        let (a, b) = (x(2, 0), x(2, 1));
        assert_eq!((&a * &b).to_text(), "1 * x1^1 x2^1");
        assert_eq!(Polynomial::zero(3).to_text(), "0");
        assert_eq!(t_poly(&[1, 2, 2, 1]).to_text(), "1 + 2*t + 2*t^2 + t^3");
        assert_eq!(t_poly(&[0, -1]).to_text(), "-t");
        let p = &a.pow(2) - &(&(&a * &b) * &Polynomial::t(2));
        assert_eq!(p.to_text(), "1 * x1^2 + -1 * x1^1 x2^1 * t^1");
        assert_eq!(Polynomial::parse("1 + 2*t + 2*t^2 + t^3", 0).unwrap(), t_poly(&[1, 2, 2, 1]));
        assert!(Polynomial::parse("1 * y1", 2).is_err());
        assert!(Polynomial::parse("1 * x3", 2).is_err());
        assert!(Polynomial::parse("", 2).is_err());
    }

    #[test]
    fn canonical_order_is_graded() {
        let (a, b) = (x(2, 0), x(2, 1));
        let p = &(&(&b.pow(2) + &a) + &Polynomial::one(2)) + &(&a * &Polynomial::t(2));
        let degrees: Vec<u32> = p.terms().map(|(e, _)| e.x_degree()).collect();
        assert_eq!(degrees, vec![0, 1, 1, 2]);
        let ts: Vec<u16> = p.terms().map(|(e, _)| e.t_exponent()).collect();
        assert_eq!(ts, vec![0, 0, 1, 0]);
    }

    #[test]
    fn embedding() {
        let p = &x(2, 0) * &x(2, 1);
        let q = p.embed(4, 2);
        assert_eq!(q, &x(4, 2) * &x(4, 3));
        assert_eq!(t_poly(&[1, 1]).embed(3, 0), &Polynomial::one(3) + &Polynomial::t(3));
    }

    const ARITY: usize = 3;

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(
            (prop::collection::vec(0u16..3, ARITY), 0u16..3, -4i64..=4),
            0..5,
        )
        .prop_map(|terms| {
            Polynomial::from_terms(
                ARITY,
                terms
                    .into_iter()
                    .map(|(x, t, c)| (ExponentVector::new(x, t), BigInt::from(c))),
            )
            .unwrap()
        })
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        Just((0..ARITY).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::new(images).unwrap())
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert!((&p - &p).is_zero());
            prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn division_round_trip(q in arb_poly(), h in arb_poly()) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!((&q * &h).divide_exact(&q).unwrap(), h);
        }

        #[test]
        fn difference_division_round_trip(h in arb_poly(), i in 0..ARITY, j in 0..ARITY) {
            prop_assume!(i != j);
            let d = &Polynomial::var(ARITY, i) - &Polynomial::var(ARITY, j);
            prop_assert_eq!((&d * &h).divide_exact(&d).unwrap(), h);
        }

        #[test]
        fn permutation_action(p in arb_poly(), u in arb_perm(), w in arb_perm()) {
            let twice = p.permute_vars(&u).unwrap().permute_vars(&w).unwrap();
            prop_assert_eq!(twice, p.permute_vars(&w.compose(&u)).unwrap());
            prop_assert_eq!(p.permute_vars(&Permutation::identity(ARITY)).unwrap(), p);
        }

        #[test]
        fn evaluation_is_a_morphism(
            p in arb_poly(),
            q in arb_poly(),
            point in prop::collection::vec(-5i64..=5, ARITY),
            t in -3i64..=3,
        ) {
            let ev = |f: &Polynomial| f.eval_at_i64(&point, t).unwrap();
            prop_assert_eq!(ev(&(&p * &q)), ev(&p) * ev(&q));
            prop_assert_eq!(ev(&(&p + &q)), ev(&p) + ev(&q));
            prop_assert_eq!(ev(&p), ev(&p.substitute_t(t)));
        }

        #[test]
        fn text_round_trip(p in arb_poly()) {
            prop_assert_eq!(Polynomial::parse(&p.to_text(), ARITY).unwrap(), p);
        }

        #[test]
        fn t_only_text_round_trip(coeffs in prop::collection::vec(-4i64..=4, 0..6)) {
            let p = Polynomial::from_t_coeffs(0, coeffs);
            let text = p.to_text();
            let parsed = if p.is_zero() { Polynomial::zero(0) } else { Polynomial::parse(&text, 0).unwrap() };
            prop_assert_eq!(parsed, p);
        }
    }
}
