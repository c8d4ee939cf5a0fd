//! Constructive p-divisible characters in a prescribed 2-block of `S_n`.
//!
//! For an odd prime `p` write `n = a·p^k + r`. A beta-set `X` with
//! `|P(X)| = n`, `|X_1| - |X_0| = c` and `|C_{p^k}(P(X))| > r` gives a
//! p-divisible character in `B_c`. The conditions (a)–(h) below select one
//! of three explicit bead layouts on the 2-abacus; the remaining finite
//! region is settled by a deterministic search.
//!
//! Certificates never trust the construction: sizes are recounted, the
//! 2-core is recomputed on the abacus from a fresh beta-set of the
//! partition, the `p^k`-core is recomputed by rim-hook stripping and
//! divisibility comes from the Legendre valuation of the degree.

use core::fmt;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::abacus::BetaSet;
use crate::blocks::{gamma, is_sym_block, p_decompose, staircase_size, PDecomposition};
use crate::character::{degree_valuation, is_prime};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Which of the conditions (a)–(h) holds, or `Search` for a searched witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseTag {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    Search,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::A => "a",
            CaseTag::B => "b",
            CaseTag::C => "c",
            CaseTag::D => "d",
            CaseTag::E => "e",
            CaseTag::F => "f",
            CaseTag::G => "g",
            CaseTag::H => "h",
            CaseTag::Search => "search",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `σ_t ∈ {1, 2}` with `σ_t ≡ t - 1 (mod 2)`.
pub const fn sigma(t: u64) -> i64 {
    if t.is_multiple_of(2) {
        1
    } else {
        2
    }
}

/// Kronecker delta `δ_{t,1}`.
pub const fn delta_one(t: u64) -> i64 {
    if t == 1 {
        1
    } else {
        0
    }
}

/// The integers the constructions are built from, for fixed `(n, p, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseParams {
    pub n: i64,
    pub c: i64,
    pub a: i64,
    pub pk: i64,
    pub r: i64,
    pub sigma_a: i64,
    pub delta_a1: i64,
}

impl CaseParams {
    pub fn new(c: usize, dec: &PDecomposition) -> Self {
        CaseParams {
            n: dec.n as i64,
            c: c as i64,
            a: dec.a as i64,
            pk: dec.p_power() as i64,
            r: dec.r as i64,
            sigma_a: sigma(dec.a),
            delta_a1: delta_one(dec.a),
        }
    }

    /// `f(n,c,p,i)`: the value forced on the `i`-th bead once beads `1..i`
    /// sit at their extreme positions and beads after `i` are packed at the
    /// bottom of the odd runner.
    pub fn f(&self, i: i64) -> i64 {
        let CaseParams { n, c, a, pk, sigma_a, delta_a1, .. } = *self;
        n + c * (c - 1) / 2 + sigma_a + (2 - a - i) * pk + 2 * delta_a1 * (i - 2) - c * c + 2 * c * i - 3 * i
            + 2
    }

    /// `p^k - 2(i - 1 + δ_{a,1})`, the cap on bead `i ≥ 2`.
    pub fn cap(&self, i: i64) -> i64 {
        self.pk - 2 * (i - 1 + self.delta_a1)
    }

    /// Smallest `i ≤ c` with `f(i) ≤ cap(i)`.
    pub fn s(&self) -> Option<i64> {
        (1..=self.c).find(|&i| self.f(i) <= self.cap(i))
    }

    /// `a·p^k - σ_a`, the lowest odd position strictly below `a·p^k`.
    pub fn leading_limit(&self) -> i64 {
        self.a * self.pk - self.sigma_a
    }

    /// Largest bead when all other beads keep their `γ_c` positions.
    pub fn case1_leading(&self) -> i64 {
        let c = self.c;
        self.n + c * (c - 1) / 2 - (c - 1) * (c - 1)
    }

    /// `r + 3 + 2δ_{a,1} + σ_a`, the quantity splitting (a) from (b)/(c).
    pub fn two_row_threshold(&self) -> i64 {
        self.r + 3 + 2 * self.delta_a1 + self.sigma_a
    }

    fn case1_elements(&self) -> Vec<i64> {
        let mut xs = Vec::with_capacity(self.c as usize);
        xs.push(self.case1_leading());
        xs.extend((2..=self.c).map(|i| 2 * (self.c - i) + 1));
        xs
    }

    fn case2_elements(&self) -> Result<Vec<i64>> {
        let s = self.s().ok_or_else(|| {
            Error::CertificateInvalid(format!("no s <= c = {} with f(s) <= cap(s)", self.c))
        })?;
        if s < 2 {
            return Err(Error::CertificateInvalid(format!(
                "s = {s}: leading bead fits below a·p^k, which is case (d)/(g)"
            )));
        }
        let mut xs = Vec::with_capacity(self.c as usize);
        xs.push(self.leading_limit());
        xs.extend((2..s).map(|i| self.cap(i)));
        xs.push(self.f(s));
        xs.extend((s + 1..=self.c).map(|j| 2 * (self.c - j) + 1));
        Ok(xs)
    }

    fn case3_elements(&self) -> Vec<i64> {
        alloc::vec![self.a * self.pk + 3, self.r - 1, 3, 1]
    }
}

/// Turns a proposed strictly decreasing list into a beta-set.
fn beta_from(xs: &[i64]) -> Result<BetaSet> {
    if xs.iter().any(|&x| x < 0) || xs.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::CertificateInvalid(format!(
            "{xs:?} is not a strictly decreasing list of non-negative integers"
        )));
    }
    BetaSet::new(xs.iter().map(|&x| x as usize).collect())
}

/// Checks `(n, p, c)` against the theorem's hypotheses and returns the
/// decomposition of `n`.
pub fn theorem_range(n: usize, p: u64, c: usize) -> Result<PDecomposition> {
    if !is_prime(p) || p == 2 {
        return Err(Error::OutOfTheoremRange(format!("p = {p} is not an odd prime")));
    }
    if (n as u64) < p {
        return Err(Error::OutOfTheoremRange(format!("n = {n} is smaller than p = {p}")));
    }
    if c <= 1 {
        return Err(Error::OutOfTheoremRange(format!(
            "c = {c} is a principal block: see scan"
        )));
    }
    if !is_sym_block(n, c) {
        return Err(Error::OutOfTheoremRange(format!("γ_{c} does not label a 2-block of S_{n}")));
    }
    let dec = p_decompose(n as u64, p)?;
    let small = (2..=10).contains(&c) && n >= 66;
    let large = c >= 11 && dec.p_power() >= 2 * c as u64 - 1;
    if !(small || large) {
        return Err(Error::OutOfTheoremRange(format!(
            "need 2 <= c <= 10 with n >= 66, or c >= 11 with p^k >= 2c-1 (n={n}, c={c}, p^k={})",
            dec.p_power()
        )));
    }
    Ok(dec)
}

/// Picks the first of conditions (a)–(h) that holds.
///
/// Condition (f) is taken to be `3 ≤ c ≤ 10`, `n ≥ 66`, `p^k < 20`, the
/// finite complement of (d) and (e).
pub fn classify_case(n: usize, p: u64, c: usize) -> Result<CaseTag> {
    let dec = theorem_range(n, p, c)?;
    Ok(classify_with(c, &dec))
}

fn classify_with(c: usize, dec: &PDecomposition) -> CaseTag {
    let params = CaseParams::new(c, dec);
    let fits = params.case1_leading() <= params.leading_limit();
    match c {
        2 if params.two_row_threshold() <= params.pk => CaseTag::A,
        2 if params.pk >= 10 => CaseTag::B,
        2 => CaseTag::C,
        3..=10 if params.pk >= 20 => {
            if fits {
                CaseTag::D
            } else {
                CaseTag::E
            }
        }
        3..=10 => CaseTag::F,
        _ if fits => CaseTag::G,
        _ => CaseTag::H,
    }
}

fn expect_case(n: usize, p: u64, c: usize, allowed: &[CaseTag]) -> Result<CaseParams> {
    let dec = theorem_range(n, p, c)?;
    let tag = classify_with(c, &dec);
    if !allowed.contains(&tag) {
        return Err(Error::PreconditionViolation(format!(
            "(n, p, c) = ({n}, {p}, {c}) satisfies condition ({tag}), not one of {allowed:?}"
        )));
    }
    Ok(CaseParams::new(c, &dec))
}

/// All beads on the odd runner: the largest at `n + c(c-1)/2 - (c-1)^2`,
/// the rest at `2c-3, 2c-5, …, 1`.
pub fn construct_case1(n: usize, p: u64, c: usize) -> Result<BetaSet> {
    let params = expect_case(n, p, c, &[CaseTag::D, CaseTag::G])?;
    beta_from(&params.case1_elements())
}

/// Largest bead at `a·p^k - σ_a`, the next ones as low as possible below
/// `p^k`, until bead `s` takes up the remaining size.
pub fn construct_case2(n: usize, p: u64, c: usize) -> Result<BetaSet> {
    let params = expect_case(n, p, c, &[CaseTag::A, CaseTag::E, CaseTag::H])?;
    beta_from(&params.case2_elements()?)
}

/// `{a·p^k + 3, r - 1, 3, 1}` for `c = 2` when `r` is close to `p^k`.
pub fn construct_case3(n: usize, p: u64, c: usize) -> Result<BetaSet> {
    let params = expect_case(n, p, c, &[CaseTag::B])?;
    beta_from(&params.case3_elements())
}

/// Node budget for [`search_witness`].
pub const SEARCH_BUDGET: usize = 5_000_000;

/// Extra even/odd bead pairs tried beyond the all-odd layout.
const SEARCH_MAX_EXTRA_PAIRS: usize = 4;

/// Deterministic search for a p-divisible `χ^λ` in `B_c`.
///
/// Beta-sets with `c + m` odd and `m` even elements are enumerated for
/// `m = 0, 1, …`, each level in lexicographically decreasing order. Every
/// such set has 2-core `γ_c`. When the block has positive weight the
/// partition must also differ from its conjugate.
pub fn search_witness(n: usize, p: u64, c: usize) -> Result<BetaSet> {
    search_witness_with_budget(n, p, c, SEARCH_BUDGET)
}

pub fn search_witness_with_budget(n: usize, p: u64, c: usize, budget: usize) -> Result<BetaSet> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !is_sym_block(n, c) || n == 0 {
        return Err(Error::PreconditionViolation(format!("γ_{c} does not label a 2-block of S_{n}")));
    }
    let mut search = Search {
        p,
        require_non_self_conjugate: staircase_size(c) < n,
        budget,
        chosen: Vec::new(),
    };
    for extra in 0..=SEARCH_MAX_EXTRA_PAIRS {
        let t = c + 2 * extra;
        if t == 0 {
            continue;
        }
        let target = n + t * (t - 1) / 2;
        search.chosen.clear();
        match search.descend(target + 1, extra, c + extra, target) {
            Walk::Found(beta) => return Ok(beta),
            Walk::OutOfBudget => break,
            Walk::Continue => {}
        }
    }
    Err(Error::ExhaustedSearch { n, p, c })
}

enum Walk {
    Continue,
    Found(BetaSet),
    OutOfBudget,
}

struct Search {
    p: u64,
    require_non_self_conjugate: bool,
    budget: usize,
    chosen: Vec<usize>,
}

/// Sum of the `count` smallest non-negative integers of the given parity.
fn min_sum(count: usize, parity: usize) -> usize {
    // evens 0,2,…: count(count-1); odds 1,3,…: count^2
    if parity == 0 {
        count * count.saturating_sub(1)
    } else {
        count * count
    }
}

/// Sum of the `count` largest integers of the given parity below `bound`,
/// or `None` if there are fewer than `count` of them.
fn max_sum(count: usize, parity: usize, bound: usize) -> Option<usize> {
    if count == 0 {
        return Some(0);
    }
    let top = bound.checked_sub(1)?;
    let top = if top % 2 == parity { top } else { top.checked_sub(1)? };
    let lowest = top.checked_sub(2 * (count - 1))?;
    Some((top + lowest) * count / 2)
}

impl Search {
    fn descend(&mut self, bound: usize, evens: usize, odds: usize, remaining: usize) -> Walk {
        if evens + odds == 0 {
            return if remaining == 0 { self.check() } else { Walk::Continue };
        }
        if self.budget == 0 {
            return Walk::OutOfBudget;
        }
        self.budget -= 1;
        let Some(mut x) = bound.checked_sub(1) else {
            return Walk::Continue;
        };
        x = x.min(remaining);
        loop {
            let parity = x % 2;
            let quota = if parity == 0 { evens } else { odds };
            if quota > 0 {
                let (rest_even, rest_odd) = if parity == 0 { (evens - 1, odds) } else { (evens, odds - 1) };
                let need = remaining - x;
                let floor = min_sum(rest_even, 0) + min_sum(rest_odd, 1);
                let ceiling = max_sum(rest_even, 0, x).zip(max_sum(rest_odd, 1, x)).map(|(a, b)| a + b);
                if need >= floor && ceiling.is_some_and(|cap| need <= cap) {
                    self.chosen.push(x);
                    let walk = self.descend(x, rest_even, rest_odd, need);
                    self.chosen.pop();
                    if !matches!(walk, Walk::Continue) {
                        return walk;
                    }
                }
            }
            if x == 0 {
                return Walk::Continue;
            }
            // below this point even the largest admissible tail cannot reach the target
            let tail_cap = max_sum(evens, 0, x).zip(max_sum(odds, 1, x)).map(|(a, b)| a + b);
            if tail_cap.is_none_or(|cap| cap < remaining) {
                return Walk::Continue;
            }
            x -= 1;
        }
    }

    fn check(&mut self) -> Walk {
        let beta = BetaSet::new(self.chosen.clone()).expect("search keeps elements distinct");
        let lambda = beta.partition();
        if self.require_non_self_conjugate && lambda.is_self_conjugate() {
            return Walk::Continue;
        }
        match degree_valuation(&lambda, self.p) {
            Ok(v) if v >= 1 => Walk::Found(beta),
            _ => Walk::Continue,
        }
    }
}

/// Independently recomputed facts about a proposed witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertificateFacts {
    pub size_ok: bool,
    pub core_ok: bool,
    pub pk_core_exceeds_r: bool,
    pub p_divisible_by_valuation: bool,
    pub self_conjugate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub n: usize,
    pub p: u64,
    pub c: usize,
    pub decomposition: PDecomposition,
    /// Condition (a)–(h) satisfied by `(n, p, c)`; `None` outside the theorem.
    pub condition: Option<CaseTag>,
    /// Construction that produced the beta-set.
    pub case_tag: CaseTag,
    pub beta_set: BetaSet,
    pub partition: Partition,
    pub facts: CertificateFacts,
}

impl WitnessCertificate {
    /// Recomputes every fact about `beta_set` from scratch.
    pub fn check(
        n: usize,
        p: u64,
        c: usize,
        condition: Option<CaseTag>,
        case_tag: CaseTag,
        beta_set: BetaSet,
    ) -> Result<Self> {
        let decomposition = p_decompose(n as u64, p)?;
        let partition = beta_set.partition();
        let fresh = BetaSet::minimal(&partition);
        let facts = CertificateFacts {
            size_ok: partition.size() == n,
            core_ok: fresh.core(2).partition() == gamma(c),
            pk_core_exceeds_r: partition.core(decomposition.p_power() as usize).size() as u64
                > decomposition.r,
            p_divisible_by_valuation: degree_valuation(&partition, p)? >= 1,
            self_conjugate: partition.is_self_conjugate(),
        };
        Ok(WitnessCertificate { n, p, c, decomposition, condition, case_tag, beta_set, partition, facts })
    }

    /// Constructed witnesses must clear the `p^k`-core test; searched ones
    /// only need p-divisibility.
    pub fn is_valid(&self) -> bool {
        let f = &self.facts;
        f.size_ok
            && f.core_ok
            && f.p_divisible_by_valuation
            && (f.pk_core_exceeds_r || self.case_tag == CaseTag::Search)
    }

    pub fn failed_facts(&self) -> Vec<&'static str> {
        let f = &self.facts;
        let mut failed = Vec::new();
        if !f.size_ok {
            failed.push("size_ok");
        }
        if !f.core_ok {
            failed.push("core_ok");
        }
        if !f.pk_core_exceeds_r && self.case_tag != CaseTag::Search {
            failed.push("pk_core_exceeds_r");
        }
        if !f.p_divisible_by_valuation {
            failed.push("p_divisible_by_valuation");
        }
        failed
    }

    fn into_valid(self) -> Result<Self> {
        if self.is_valid() {
            Ok(self)
        } else {
            let failed: Vec<String> = self.failed_facts().into_iter().map(String::from).collect();
            Err(Error::CertificateInvalid(format!(
                "{} for (n, p, c) = ({}, {}, {}) fails {}",
                self.beta_set,
                self.n,
                self.p,
                self.c,
                failed.join(", ")
            )))
        }
    }
}

/// Builds and checks a witness for `(n, p, c)` inside the theorem's range.
///
/// In region (f) the bead layout of case (d) or (e) is tried first and kept
/// if it checks out; otherwise, and in region (c), the search takes over.
pub fn construct_witness(n: usize, p: u64, c: usize) -> Result<WitnessCertificate> {
    let dec = theorem_range(n, p, c)?;
    let condition = classify_with(c, &dec);
    let params = CaseParams::new(c, &dec);
    let certify = |tag: CaseTag, beta: BetaSet| {
        WitnessCertificate::check(n, p, c, Some(condition), tag, beta)
    };
    let cert = match condition {
        CaseTag::D | CaseTag::G => certify(condition, beta_from(&params.case1_elements())?)?,
        CaseTag::A | CaseTag::E | CaseTag::H => certify(condition, beta_from(&params.case2_elements()?)?)?,
        CaseTag::B => certify(condition, beta_from(&params.case3_elements())?)?,
        CaseTag::F => {
            let attempt = if params.case1_leading() <= params.leading_limit() {
                Ok((CaseTag::D, params.case1_elements()))
            } else {
                params.case2_elements().map(|xs| (CaseTag::E, xs))
            };
            let layout = attempt
                .and_then(|(tag, xs)| certify(tag, beta_from(&xs)?))
                .ok()
                .filter(|cert| cert.is_valid() && cert.facts.self_conjugate == (staircase_size(c) == n));
            match layout {
                Some(cert) => cert,
                None => certify(CaseTag::Search, search_witness(n, p, c)?)?,
            }
        }
        CaseTag::C | CaseTag::Search => certify(CaseTag::Search, search_witness(n, p, c)?)?,
    };
    cert.into_valid()
}

/// A p-divisible character for any 2-block of `S_n`: the construction when
/// the theorem applies, the search otherwise.
pub fn witness_for_block(n: usize, p: u64, c: usize) -> Result<WitnessCertificate> {
    match construct_witness(n, p, c) {
        Err(Error::OutOfTheoremRange(_)) => {
            let beta = search_witness(n, p, c)?;
            WitnessCertificate::check(n, p, c, None, CaseTag::Search, beta)?.into_valid()
        }
        other => other,
    }
}
