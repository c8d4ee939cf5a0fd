//! Exact character arithmetic for the symmetric group.
//!
//! Degrees come from the hook-length formula, p-adic valuations of degrees
//! from Legendre's formula (so the factorial is never built), and character
//! values from the Murnaghan-Nakayama rule on beta-sets.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::abacus::BetaSet;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Cycle lengths of a conjugacy class of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(cycles: Partition) -> Self {
        CycleType(cycles)
    }

    /// The identity class `(1^n)`.
    pub fn identity(n: usize) -> Self {
        CycleType(Partition::new(alloc::vec![1; n]).expect("all ones"))
    }

    pub fn cycles(&self) -> &Partition {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// Order of the centralizer, `Π i^{m_i} m_i!` over cycle multiplicities.
    pub fn centralizer_order(&self) -> BigUint {
        let mut order = BigUint::one();
        let parts = self.0.parts();
        let mut i = 0;
        while i < parts.len() {
            let len = parts[i];
            let mult = parts[i..].iter().take_while(|&&q| q == len).count();
            for m in 1..=mult {
                order *= BigUint::from(len) * BigUint::from(m);
            }
            i += mult;
        }
        order
    }

    /// Number of permutations with this cycle type.
    pub fn class_size(&self) -> BigUint {
        factorial(self.size()) / self.centralizer_order()
    }
}

impl From<Partition> for CycleType {
    fn from(cycles: Partition) -> Self {
        CycleType(cycles)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Trial division; adequate for the small primes this crate works with.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `v_p(m)` for `m ≥ 1`.
pub fn valuation(mut m: u64, p: u64) -> u32 {
    debug_assert!(m > 0 && p > 1);
    let mut v = 0;
    while m.is_multiple_of(p) {
        m /= p;
        v += 1;
    }
    v
}

/// `v_p(n!) = Σ_i ⌊n / p^i⌋`.
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut q = n / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    total
}

/// `χ^λ(1) = n! / Π h_{i,j}(λ)`.
pub fn degree(lambda: &Partition) -> BigUint {
    let hooks = lambda
        .hook_lengths()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * BigUint::from(h));
    let n_fact = factorial(lambda.size());
    let (quotient, remainder) = num_integer::Integer::div_rem(&n_fact, &hooks);
    assert!(remainder.is_zero(), "hook product must divide n! for {lambda}");
    quotient
}

/// `v_p(χ^λ(1)) = v_p(n!) - Σ v_p(h_{i,j}(λ))`.
pub fn degree_valuation(lambda: &Partition, p: u64) -> Result<u64> {
    require_prime(p)?;
    let top = factorial_valuation(lambda.size() as u64, p);
    let hooks: u64 = lambda
        .hook_lengths()
        .into_iter()
        .map(|h| u64::from(valuation(h as u64, p)))
        .sum();
    Ok(top - hooks)
}

pub fn is_p_divisible(lambda: &Partition, p: u64) -> Result<bool> {
    Ok(degree_valuation(lambda, p)? >= 1)
}

/// `χ^λ(σ)` for `σ` of cycle type `rho`, via the Murnaghan-Nakayama rule.
pub fn mn_value(lambda: &Partition, rho: &CycleType) -> Result<BigInt> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch { partition: lambda.size(), cycle_type: rho.size() });
    }
    let beta = BetaSet::minimal(lambda);
    let mut memo = BTreeMap::new();
    Ok(mn_recurse(beta.elements().to_vec(), rho.cycles().parts(), &mut memo))
}

/// Strips a rim hook of length `cycles[0]` in every possible way; the sign of
/// each strip is `(-1)^leg`, where the leg length is the number of beads
/// jumped over.
fn mn_recurse(beta: Vec<usize>, cycles: &[usize], memo: &mut BTreeMap<(Vec<usize>, usize), BigInt>) -> BigInt {
    let Some((&h, rest)) = cycles.split_first() else {
        return BigInt::one();
    };
    let key = (beta, cycles.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let beta = &key.0;
    let mut total = BigInt::zero();
    for (idx, &x) in beta.iter().enumerate() {
        if x < h {
            continue;
        }
        let y = x - h;
        // beta is decreasing: beads strictly between y and x sit right after idx
        let jumped = beta[idx + 1..].iter().take_while(|&&b| b > y).count();
        if beta.get(idx + 1 + jumped) == Some(&y) {
            continue;
        }
        let mut next: Vec<usize> = beta.iter().copied().filter(|&b| b != x).collect();
        let pos = next.partition_point(|&b| b > y);
        next.insert(pos, y);
        let value = mn_recurse(next, rest, memo);
        if jumped % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }
    memo.insert(key, total.clone());
    total
}

pub fn is_perfect_square(m: &BigUint) -> bool {
    let root = m.sqrt();
    &(&root * &root) == m
}

/// `Π_{i=1}^{n} (4i + r)` for `r ∈ {1, -1}`.
pub fn progression_product(n: usize, r: i64) -> Result<BigUint> {
    if r != 1 && r != -1 {
        return Err(Error::BadResidue(r));
    }
    if n == 0 {
        return Err(Error::PreconditionViolation("product needs n >= 1".into()));
    }
    Ok((1..=n as u64).fold(BigUint::one(), |acc, i| {
        let factor = if r == 1 { 4 * i + 1 } else { 4 * i - 1 };
        acc * BigUint::from(factor)
    }))
}
