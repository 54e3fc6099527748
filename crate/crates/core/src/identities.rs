//! Executable checks of the push-forward identities, instance families,
//! and per-instance reports.
//!
//! Every check compares two polynomials exactly. Before the symbolic
//! comparison both sides are also evaluated at a few random integer points;
//! that result is kept as a diagnostic and never decides the outcome.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gysin::{self, pairwise_product, sum_pair, t_difference};
use crate::hall_littlewood::{
    self as hl, gaussian, gaussian_at_minus_one, p_lambda, r_lambda, r_lambda_coset, schur_p_coset,
    schur_p_recursive, schur_s, schur_s_bialternant, specialize_p, straighten_p, straighten_s,
    v_lambda, v_m, Specialization, Straightened,
};
use crate::poly::Polynomial;
use crate::sequence::IntSequence;

/// The identities the verifier knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `Σ_{w ∈ S_n} w(∏ (y_i - t y_j)/(y_i - y_j)) = v_n(t)`.
    LemmaSum,
    /// `v_λ | R_λ` and the coset formula for `R_λ`.
    Divisibility,
    /// `π_*(R_λ(Q) R_μ(S) ∏ (x_i - t x_j)) = R_{λμ}(E)`.
    Juxtaposition,
    /// `π_*(∏ (x_i - t x_j) P_λ(Q) P_μ(S)) = v_{λμ}/(v_λ v_μ) P_{λμ}(E)`.
    TheoremMain,
    /// `π_*((x_1⋯x_q)^r s_λ(Q) s_μ(S)) = s_{λμ}(E)`.
    T0Jlp,
    /// Straightening of `s_λ` agrees with the alternant quotient.
    StraightenS,
    /// `π_*(c_{qr}(Q⊗S) P_ν(Q) P_σ(S)) = d_{ν,σ} P_{νσ}(E)`.
    TMinusOne,
    /// The Gaussian-coefficient form of the main theorem for strict partitions.
    CorGaussian,
    /// Closed form of `[a+b over a](-1)`.
    GaussianMinusOne,
    /// Recursive Schur P = coset Schur P = `P_λ(t = -1)`.
    SchurP,
    /// Jacobi-Trudi determinant = bialternant.
    JacobiTrudi,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::LemmaSum,
        Identity::Divisibility,
        Identity::Juxtaposition,
        Identity::TheoremMain,
        Identity::T0Jlp,
        Identity::StraightenS,
        Identity::TMinusOne,
        Identity::CorGaussian,
        Identity::GaussianMinusOne,
        Identity::SchurP,
        Identity::JacobiTrudi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::LemmaSum => "lemma-sum",
            Identity::Divisibility => "divisibility",
            Identity::Juxtaposition => "juxtaposition",
            Identity::TheoremMain => "theorem-main",
            Identity::T0Jlp => "t0-jlp",
            Identity::StraightenS => "straighten-s",
            Identity::TMinusOne => "t-minus1",
            Identity::CorGaussian => "cor-gaussian",
            Identity::GaussianMinusOne => "gaussian-minus1",
            Identity::SchurP => "schur-p",
            Identity::JacobiTrudi => "jacobi-trudi",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

/// Parameters of one checked instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Rank { n: usize },
    Sequence { n: usize, lambda: IntSequence },
    Split { n: usize, q: usize, lambda: IntSequence, mu: IntSequence },
    StrictSplit { n: usize, q: usize, nu: IntSequence, sigma: IntSequence },
    Gaussian { a: u64, b: u64 },
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Rank { n } => write!(f, "n={n}"),
            Instance::Sequence { n, lambda } => write!(f, "n={n} lambda={lambda}"),
            Instance::Split { n, q, lambda, mu } => write!(f, "n={n} q={q} lambda={lambda} mu={mu}"),
            Instance::StrictSplit { n, q, nu, sigma } => write!(f, "n={n} q={q} nu={nu} sigma={sigma}"),
            Instance::Gaussian { a, b } => write!(f, "a={a} b={b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// `witness` is `lhs - rhs` when both sides could be computed.
    Fail { reason: String, witness: Option<Polynomial> },
    Skipped(String),
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub identity: Identity,
    pub instance: Instance,
    pub outcome: Outcome,
    /// Whether both sides agreed at random integer points, when evaluated.
    pub numeric_precheck: Option<bool>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail { .. })
    }

    pub fn witness(&self) -> Option<&Polynomial> {
        match &self.outcome {
            Outcome::Fail { witness, .. } => witness.as_ref(),
            _ => None,
        }
    }

    pub fn status(&self) -> &'static str {
        match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail { .. } => "FAIL",
            Outcome::Skipped(_) => "SKIP",
        }
    }

    /// `identity, params, PASS|FAIL|SKIP, elapsed_ms`; with `timing` off the
    /// elapsed field is `-` so output is reproducible byte for byte.
    pub fn line(&self, timing: bool) -> String {
        let elapsed = if timing {
            self.elapsed.as_millis().to_string()
        } else {
            "-".to_string()
        };
        format!("{}, {}, {}, {}", self.identity, self.instance, self.status(), elapsed)
    }
}

fn stable_hash(text: &str) -> u64 {
    // FNV-1a
    text.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

fn numeric_agreement(lhs: &Polynomial, rhs: &Polynomial, seed: u64) -> Option<bool> {
    if lhs.arity() != rhs.arity() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agree = true;
    for _ in 0..3 {
        let point: Vec<BigInt> = (0..lhs.arity()).map(|_| BigInt::from(rng.gen_range(-6i64..=6))).collect();
        let t = BigInt::from(rng.gen_range(-3i64..=3));
        agree &= lhs.eval_at(&point, &t).ok()? == rhs.eval_at(&point, &t).ok()?;
    }
    Some(agree)
}

struct Check {
    identity: Identity,
    instance: Instance,
    started: Instant,
}

impl Check {
    fn new(identity: Identity, instance: Instance) -> Self {
        Check {
            identity,
            instance,
            started: Instant::now(),
        }
    }

    fn finish(self, outcome: Outcome, numeric_precheck: Option<bool>) -> VerificationReport {
        VerificationReport {
            identity: self.identity,
            instance: self.instance,
            outcome,
            numeric_precheck,
            elapsed: self.started.elapsed(),
        }
    }

    fn fail(self, reason: impl Into<String>) -> VerificationReport {
        self.finish(
            Outcome::Fail {
                reason: reason.into(),
                witness: None,
            },
            None,
        )
    }

    fn skip(self, reason: impl Into<String>) -> VerificationReport {
        self.finish(Outcome::Skipped(reason.into()), None)
    }

    /// Compares `lhs` and `rhs`; a computation error on either side is a failure.
    fn compare(self, lhs: Result<Polynomial>, rhs: Result<Polynomial>) -> VerificationReport {
        let (lhs, rhs) = match (lhs, rhs) {
            (Ok(l), Ok(r)) => (l, r),
            (Err(e), _) => return self.fail(format!("left side: {e}")),
            (_, Err(e)) => return self.fail(format!("right side: {e}")),
        };
        let seed = stable_hash(&format!("{} {}", self.identity, self.instance));
        let numeric = numeric_agreement(&lhs, &rhs, seed);
        let outcome = match lhs.checked_sub(&rhs) {
            Ok(w) if w.is_zero() => Outcome::Pass,
            Ok(w) => Outcome::Fail {
                reason: "left side differs from right side".into(),
                witness: Some(w),
            },
            Err(e) => Outcome::Fail {
                reason: e.to_string(),
                witness: None,
            },
        };
        self.finish(outcome, numeric)
    }
}

fn split_lengths(n: usize, q: usize, left: &IntSequence, right: &IntSequence) -> Result<usize> {
    if q == 0 || q >= n {
        return Err(Error::InvalidSplit(format!("need 0 < q < n, got q = {q}, n = {n}")));
    }
    let r = n - q;
    if left.len() != q {
        return Err(Error::LengthMismatch { expected: q, actual: left.len() });
    }
    if right.len() != r {
        return Err(Error::LengthMismatch { expected: r, actual: right.len() });
    }
    Ok(r)
}

/// `∏_{i ≤ q < j} (x_i - t x_j)`.
pub fn cross_t_factor(n: usize, q: usize) -> Polynomial {
    pairwise_product(n, |i, j| i < q && j >= q, |i, j| t_difference(n, i, j))
}

/// `c_{qr}(Q ⊗ S) = ∏_{i ≤ q < j} (x_i + x_j)`.
pub fn top_chern_tensor(n: usize, q: usize) -> Polynomial {
    pairwise_product(n, |i, j| i < q && j >= q, |i, j| sum_pair(n, i, j))
}

/// The coefficient `d_{ν,σ}`: zero when `(q-k)(r-h)` is odd, otherwise
/// `(-1)^{(q-k)h} C(⌊(n-k-h)/2⌋, ⌊(q-k)/2⌋)`.
pub fn d_coefficient(n: usize, q: usize, k: usize, h: usize) -> BigInt {
    let (a, b) = ((q - k) as u64, (n - q - h) as u64);
    if a % 2 == 1 && b % 2 == 1 {
        return BigInt::zero();
    }
    let c = num_integer::binomial(BigInt::from((n - k - h) / 2), BigInt::from((q - k) / 2));
    if ((q - k) * h) % 2 == 1 {
        -c
    } else {
        c
    }
}

pub fn verify_lemma_sum(n: usize) -> VerificationReport {
    let check = Check::new(Identity::LemmaSum, Instance::Rank { n });
    check.compare(r_lambda(n, &IntSequence::zeros(n)), Ok(v_m(n).embed(n, 0)))
}

/// `r_lambda_coset = r_lambda` and `v_λ | R_λ`. A failed division of `R_λ`
/// by `v_λ` is reported before the coset comparison.
pub fn verify_divisibility(n: usize, lambda: &IntSequence) -> Result<VerificationReport> {
    if lambda.len() != n {
        return Err(Error::LengthMismatch { expected: n, actual: lambda.len() });
    }
    let check = Check::new(Identity::Divisibility, Instance::Sequence { n, lambda: lambda.clone() });
    let r = match r_lambda(n, lambda) {
        Ok(r) => r,
        Err(e) => return Ok(check.fail(format!("R_lambda: {e}"))),
    };
    if let Err(e) = r.divide_exact(&v_lambda(lambda).embed(n, 0)) {
        return Ok(check.fail(format!("v_lambda does not divide R_lambda: {e}")));
    }
    Ok(check.compare(r_lambda_coset(n, lambda), Ok(r)))
}

pub fn verify_prop_juxtaposition(
    n: usize,
    q: usize,
    lambda: &IntSequence,
    mu: &IntSequence,
) -> Result<VerificationReport> {
    let r = split_lengths(n, q, lambda, mu)?;
    let check = Check::new(
        Identity::Juxtaposition,
        Instance::Split { n, q, lambda: lambda.clone(), mu: mu.clone() },
    );
    let lhs = (|| {
        let rq = r_lambda(q, lambda)?.embed(n, 0);
        let rs = r_lambda(r, mu)?.embed(n, q);
        gysin::grassmann_pushforward(&(&(&rq * &rs) * &cross_t_factor(n, q)), q, r)
    })();
    Ok(check.compare(lhs, r_lambda(n, &lambda.juxtapose(mu))))
}

/// Both sides are evaluated over `Z(t)`: `P_λ(Q) P_μ(S)` enters as
/// `R_λ(Q) R_μ(S) / (v_λ v_μ)` and `P_{λμ}` as `R_{λμ} / v_{λμ}`, each side
/// compared after clearing denominators, so neither side needs to be a
/// polynomial. This keeps the statement meaningful for sequences where `v_λ`
/// does not divide `R_λ`.
pub fn verify_theorem_main(
    n: usize,
    q: usize,
    lambda: &IntSequence,
    mu: &IntSequence,
) -> Result<VerificationReport> {
    let r = split_lengths(n, q, lambda, mu)?;
    let check = Check::new(
        Identity::TheoremMain,
        Instance::Split { n, q, lambda: lambda.clone(), mu: mu.clone() },
    );
    let joined = lambda.juxtapose(mu);
    let denominator = &v_lambda(lambda) * &v_lambda(mu);
    let coefficient = match v_lambda(&joined).divide_exact(&denominator) {
        Ok(c) => c,
        Err(e) => return Ok(check.fail(format!("coefficient v_(lambda mu)/(v_lambda v_mu): {e}"))),
    };
    let lhs = (|| {
        let rq = r_lambda(q, lambda)?.embed(n, 0);
        let rs = r_lambda(r, mu)?.embed(n, q);
        let pushed = gysin::grassmann_pushforward(&(&(&cross_t_factor(n, q) * &rq) * &rs), q, r)?;
        Ok(&pushed * &v_lambda(&joined).embed(n, 0))
    })();
    let rhs = r_lambda(n, &joined).map(|p| &(&coefficient * &denominator).embed(n, 0) * &p);
    Ok(check.compare(lhs, rhs))
}

/// `s` of an arbitrary sequence in `n` variables via straightening.
fn straightened_schur(seq: &IntSequence, n: usize) -> Result<Polynomial> {
    match straighten_s(seq) {
        Straightened::Zero => Ok(Polynomial::zero(n)),
        Straightened::Signed { sign, partition } => Ok(schur_s(&partition, n)?.scale(&BigInt::from(sign))),
    }
}

/// Also checks the middle step `(x_1⋯x_q)^r s_λ(Q) = s_{λ + r^q}(Q)`.
pub fn verify_t0_jlp(n: usize, q: usize, lambda: &IntSequence, mu: &IntSequence) -> Result<VerificationReport> {
    let r = split_lengths(n, q, lambda, mu)?;
    for seq in [lambda, mu] {
        if !seq.is_partition() {
            return Err(Error::NotAPartition(seq.to_string()));
        }
    }
    let check = Check::new(
        Identity::T0Jlp,
        Instance::Split { n, q, lambda: lambda.clone(), mu: mu.clone() },
    );
    let shifted = IntSequence::new(lambda.entries().iter().map(|&e| e + r as u32).collect());
    let sides = (|| {
        let sq = schur_s(lambda, q)?;
        let corner = Polynomial::x_power(&vec![r as u32; q]);
        let shifted_sq = schur_s(&shifted, q)?;
        Ok::<_, Error>((&corner * &sq == shifted_sq, shifted_sq.embed(n, 0), schur_s(mu, r)?.embed(n, q)))
    })();
    let (middle_ok, sq, ss) = match sides {
        Ok(s) => s,
        Err(e) => return Ok(check.fail(e.to_string())),
    };
    if !middle_ok {
        return Ok(check.fail("(x_1...x_q)^r s_lambda(Q) != s_(lambda + r)(Q)"));
    }
    let lhs = gysin::grassmann_pushforward(&(&sq * &ss), q, r);
    Ok(check.compare(lhs, straightened_schur(&lambda.juxtapose(mu), n)))
}

/// The alternant quotient of an arbitrary sequence equals the straightened
/// Schur function.
pub fn verify_straighten_s(lambda: &IntSequence) -> VerificationReport {
    let n = lambda.len();
    let check = Check::new(Identity::StraightenS, Instance::Sequence { n, lambda: lambda.clone() });
    check.compare(hl::alternant_quotient(lambda), straightened_schur(lambda, n))
}

fn strict_split(n: usize, q: usize, nu: &IntSequence, sigma: &IntSequence) -> Result<usize> {
    if q == 0 || q >= n {
        return Err(Error::InvalidSplit(format!("need 0 < q < n, got q = {q}, n = {n}")));
    }
    for s in [nu, sigma] {
        if !s.is_strict_partition() {
            return Err(Error::NotStrict(s.to_string()));
        }
    }
    let r = n - q;
    if nu.len() > q {
        return Err(Error::LengthMismatch { expected: q, actual: nu.len() });
    }
    if sigma.len() > r {
        return Err(Error::LengthMismatch { expected: r, actual: sigma.len() });
    }
    Ok(r)
}

pub fn verify_t_minus1(n: usize, q: usize, nu: &IntSequence, sigma: &IntSequence) -> Result<VerificationReport> {
    let r = strict_split(n, q, nu, sigma)?;
    let check = Check::new(
        Identity::TMinusOne,
        Instance::StrictSplit { n, q, nu: nu.clone(), sigma: sigma.clone() },
    );
    if nu.shares_part_with(sigma) {
        return Ok(check.skip("nu and sigma share a part"));
    }
    let (k, h) = (nu.len(), sigma.len());
    let d = d_coefficient(n, q, k, h);
    let lhs = (|| {
        let pq = schur_p_coset(nu, q)?.embed(n, 0);
        let ps = schur_p_coset(sigma, r)?.embed(n, q);
        gysin::grassmann_pushforward(&(&(&top_chern_tensor(n, q) * &pq) * &ps), q, r)
    })();
    let rhs = (|| match straighten_p(&nu.juxtapose(sigma))? {
        Straightened::Zero => Ok(Polynomial::zero(n)),
        Straightened::Signed { sign, partition } => {
            Ok(schur_p_coset(&partition, n)?.scale(&(&d * BigInt::from(sign))))
        }
    })();
    Ok(check.compare(lhs, rhs))
}

/// The Gaussian form for strict partitions `ν`, `σ` of lengths `k`, `h`:
/// the coefficient is `[n-k-h over q-k](t)`. The right side is compared
/// as `R_{λμ}` against the left side times `v_{λμ}`.
pub fn verify_cor_gaussian(n: usize, q: usize, nu: &IntSequence, sigma: &IntSequence) -> Result<VerificationReport> {
    let r = strict_split(n, q, nu, sigma)?;
    let check = Check::new(
        Identity::CorGaussian,
        Instance::StrictSplit { n, q, nu: nu.clone(), sigma: sigma.clone() },
    );
    if nu.shares_part_with(sigma) {
        return Ok(check.skip("nu and sigma share a part; the coefficient is not a single Gaussian polynomial"));
    }
    let (k, h) = (nu.len(), sigma.len());
    let (lambda, mu) = (nu.padded(q), sigma.padded(r));
    let lhs = (|| {
        let pq = p_lambda(q, &lambda)?.embed(n, 0);
        let ps = p_lambda(r, &mu)?.embed(n, q);
        gysin::grassmann_pushforward(&(&(&cross_t_factor(n, q) * &pq) * &ps), q, r)
    })();
    let coefficient = gaussian(q - k, r - h).embed(n, 0);
    let joined = lambda.juxtapose(&mu);
    let lhs = lhs.map(|l| &l * &v_lambda(&joined).embed(n, 0));
    let rhs = r_lambda(n, &joined).map(|p| &coefficient * &p);
    Ok(check.compare(lhs, rhs))
}

pub fn verify_gaussian_minus_one(a: u64, b: u64) -> VerificationReport {
    let check = Check::new(Identity::GaussianMinusOne, Instance::Gaussian { a, b });
    let closed = gaussian_at_minus_one(a, b);
    let substituted = gaussian(a as usize, b as usize).substitute_t(-1);
    let vanishes = closed.is_zero();
    if vanishes != (a % 2 == 1 && b % 2 == 1) {
        return check.fail("vanishing does not match the parity of ab");
    }
    check.compare(Ok(Polynomial::constant(0, closed)), Ok(substituted))
}

/// `schur_p_recursive = schur_p_coset = P_{ν0^{n-k}}(t = -1)`.
pub fn verify_schur_p(n: usize, nu: &IntSequence) -> Result<VerificationReport> {
    if !nu.is_strict_partition() {
        return Err(Error::NotStrict(nu.to_string()));
    }
    if nu.len() > n {
        return Err(Error::LengthMismatch { expected: n, actual: nu.len() });
    }
    let check = Check::new(Identity::SchurP, Instance::Sequence { n, lambda: nu.clone() });
    let coset = match schur_p_coset(nu, n) {
        Ok(p) => p,
        Err(e) => return Ok(check.fail(format!("coset formula: {e}"))),
    };
    match schur_p_recursive(nu, n) {
        Ok(rec) if rec == coset => {}
        Ok(rec) => {
            return Ok(check.finish(
                Outcome::Fail {
                    reason: "recursive formula differs from the coset formula".into(),
                    witness: Some(&rec - &coset),
                },
                None,
            ))
        }
        Err(e) => return Ok(check.fail(format!("recursive formula: {e}"))),
    }
    Ok(check.compare(Ok(coset), specialize_p(n, &nu.padded(n), Specialization::SchurP)))
}

pub fn verify_jacobi_trudi(n: usize, lambda: &IntSequence) -> Result<VerificationReport> {
    if !lambda.is_partition() {
        return Err(Error::NotAPartition(lambda.to_string()));
    }
    let check = Check::new(Identity::JacobiTrudi, Instance::Sequence { n, lambda: lambda.clone() });
    Ok(check.compare(schur_s(lambda, n), schur_s_bialternant(lambda, n)))
}

/// Not part of any suite: `P_{λ0}(t = 0) = s_λ`.
pub fn verify_t0_specialization(n: usize, lambda: &IntSequence) -> Result<VerificationReport> {
    if !lambda.is_partition() {
        return Err(Error::NotAPartition(lambda.to_string()));
    }
    let check = Check::new(Identity::JacobiTrudi, Instance::Sequence { n, lambda: lambda.clone() });
    Ok(check.compare(
        specialize_p(n, &lambda.padded(n), Specialization::SchurS),
        schur_s(lambda, n),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    /// `count` distinct instances drawn from the exhaustive family
    /// (all of them when the family is smaller).
    Randomized { count: usize, seed: u64 },
}

/// A family of instances: ranks, split positions and an entry bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFamily {
    pub n_min: usize,
    pub n_max: usize,
    /// Restricts Grassmann splits to one `q`; all `0 < q < n` otherwise.
    pub q: Option<usize>,
    /// Bound on sequence entries (parts, or `a`, `b` for Gaussian checks).
    pub entry_bound: u32,
    pub mode: Mode,
}

impl InstanceFamily {
    pub fn exhaustive(n_min: usize, n_max: usize, entry_bound: u32) -> Self {
        InstanceFamily {
            n_min,
            n_max,
            q: None,
            entry_bound,
            mode: Mode::Exhaustive,
        }
    }

    pub fn randomized(n: usize, entry_bound: u32, count: usize, seed: u64) -> Self {
        InstanceFamily {
            n_min: n,
            n_max: n,
            q: None,
            entry_bound,
            mode: Mode::Randomized { count, seed },
        }
    }

    fn splits(&self, n: usize) -> Vec<usize> {
        match self.q {
            Some(q) if q > 0 && q < n => vec![q],
            Some(_) => vec![],
            None => (1..n).collect(),
        }
    }

    /// The instances of `identity` in this family, in deterministic order.
    pub fn instances(&self, identity: Identity) -> Vec<Instance> {
        let all = self.exhaustive_instances(identity);
        match self.mode {
            Mode::Exhaustive => all,
            Mode::Randomized { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ stable_hash(identity.name()));
                let mut picked = sample(&mut rng, all.len(), count.min(all.len())).into_vec();
                picked.sort_unstable();
                picked.into_iter().map(|i| all[i].clone()).collect()
            }
        }
    }

    fn exhaustive_instances(&self, identity: Identity) -> Vec<Instance> {
        let e = self.entry_bound;
        let ranks = self.n_min.max(1)..=self.n_max;
        let mut out = Vec::new();
        match identity {
            Identity::LemmaSum => out.extend(ranks.map(|n| Instance::Rank { n })),
            Identity::Divisibility => {
                for n in ranks {
                    out.extend(IntSequence::all_bounded(n, e).into_iter().map(|lambda| Instance::Sequence { n, lambda }));
                }
            }
            Identity::Juxtaposition | Identity::TheoremMain | Identity::T0Jlp => {
                let partitions_only = identity == Identity::T0Jlp;
                let family = |len: usize| {
                    if partitions_only {
                        IntSequence::partitions_in_box(len, e)
                    } else {
                        IntSequence::all_bounded(len, e)
                    }
                };
                for n in ranks {
                    for q in self.splits(n) {
                        let rights = family(n - q);
                        for lambda in family(q) {
                            for mu in &rights {
                                out.push(Instance::Split { n, q, lambda: lambda.clone(), mu: mu.clone() });
                            }
                        }
                    }
                }
            }
            Identity::StraightenS => {
                for n in ranks {
                    out.extend(
                        IntSequence::all_bounded(n, e)
                            .into_iter()
                            .filter(|s| !s.is_partition())
                            .map(|lambda| Instance::Sequence { n, lambda }),
                    );
                }
            }
            Identity::TMinusOne | Identity::CorGaussian => {
                for n in ranks {
                    for q in self.splits(n) {
                        let sigmas = IntSequence::strict_partitions(n - q, e);
                        for nu in IntSequence::strict_partitions(q, e) {
                            for sigma in &sigmas {
                                out.push(Instance::StrictSplit { n, q, nu: nu.clone(), sigma: sigma.clone() });
                            }
                        }
                    }
                }
            }
            Identity::GaussianMinusOne => {
                for a in 0..=e as u64 {
                    out.extend((0..=e as u64).map(|b| Instance::Gaussian { a, b }));
                }
            }
            Identity::SchurP => {
                for n in ranks {
                    out.extend(
                        IntSequence::strict_partitions(n, e)
                            .into_iter()
                            .map(|lambda| Instance::Sequence { n, lambda }),
                    );
                }
            }
            Identity::JacobiTrudi => {
                for n in ranks {
                    out.extend(
                        IntSequence::partitions_in_box(n, e)
                            .into_iter()
                            .map(|lambda| Instance::Sequence { n, lambda }),
                    );
                }
            }
        }
        out
    }
}

/// Runs one instance of an identity.
pub fn verify_instance(identity: Identity, instance: &Instance) -> Result<VerificationReport> {
    match (identity, instance) {
        (Identity::LemmaSum, Instance::Rank { n }) => Ok(verify_lemma_sum(*n)),
        (Identity::Divisibility, Instance::Sequence { n, lambda }) => verify_divisibility(*n, lambda),
        (Identity::Juxtaposition, Instance::Split { n, q, lambda, mu }) => {
            verify_prop_juxtaposition(*n, *q, lambda, mu)
        }
        (Identity::TheoremMain, Instance::Split { n, q, lambda, mu }) => verify_theorem_main(*n, *q, lambda, mu),
        (Identity::T0Jlp, Instance::Split { n, q, lambda, mu }) => verify_t0_jlp(*n, *q, lambda, mu),
        (Identity::StraightenS, Instance::Sequence { lambda, .. }) => Ok(verify_straighten_s(lambda)),
        (Identity::TMinusOne, Instance::StrictSplit { n, q, nu, sigma }) => verify_t_minus1(*n, *q, nu, sigma),
        (Identity::CorGaussian, Instance::StrictSplit { n, q, nu, sigma }) => {
            verify_cor_gaussian(*n, *q, nu, sigma)
        }
        (Identity::GaussianMinusOne, Instance::Gaussian { a, b }) => Ok(verify_gaussian_minus_one(*a, *b)),
        (Identity::SchurP, Instance::Sequence { n, lambda }) => verify_schur_p(*n, lambda),
        (Identity::JacobiTrudi, Instance::Sequence { n, lambda }) => verify_jacobi_trudi(*n, lambda),
        _ => Err(Error::Parse(format!("instance {instance} does not fit identity {identity}"))),
    }
}

/// Runs every instance of the family, in parallel, never stopping at a
/// failure. Reports come back in instance order.
///
/// For the Gaussian form, instances whose strict partitions share a part
/// are skipped and the same instance is additionally checked against the
/// main theorem, which holds without that hypothesis.
pub fn run_suite(family: &InstanceFamily, identity: Identity) -> Vec<VerificationReport> {
    let instances = family.instances(identity);
    instances
        .par_iter()
        .flat_map_iter(|instance| {
            let report = verify_instance(identity, instance).expect("generated instances are well-formed");
            let probe = match (&report.outcome, instance) {
                (Outcome::Skipped(_), Instance::StrictSplit { n, q, nu, sigma }) if identity == Identity::CorGaussian => {
                    Some(
                        verify_theorem_main(*n, *q, &nu.padded(*q), &sigma.padded(n - q))
                            .expect("padded sequences fit the split"),
                    )
                }
                _ => None,
            };
            std::iter::once(report).chain(probe)
        })
        .collect()
}

/// Writes one file per failing report holding the reason and the witness
/// polynomial; returns the number of files written.
pub fn write_witnesses(reports: &[VerificationReport], dir: &Path) -> std::io::Result<usize> {
    let mut written = 0;
    for (index, report) in reports.iter().enumerate() {
        if let Outcome::Fail { reason, witness } = &report.outcome {
            fs::create_dir_all(dir)?;
            let path = dir.join(format!("{}-{index:05}.txt", report.identity));
            let body = format!(
                "identity: {}\nparams: {}\nreason: {}\nwitness: {}\n",
                report.identity,
                report.instance,
                reason,
                witness.as_ref().map_or_else(|| "none".to_string(), Polynomial::to_text),
            );
            fs::write(path, body)?;
            written += 1;
        }
    }
    Ok(written)
}
