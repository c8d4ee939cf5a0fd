//! 2-blocks of `S_n` and `A_n`, base-p decompositions, and the recursive
//! p-divisibility criterion on `p^k`-cores.

use core::fmt;

use alloc::format;
use alloc::vec::Vec;

use crate::character::require_prime;
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    Sym,
    Alt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// The staircase `γ_c = (c, c-1, …, 1)`; `γ_0 = ∅`.
pub fn gamma(c: usize) -> Partition {
    Partition::new((1..=c).rev().collect()).expect("staircase is decreasing")
}

/// `|γ_c| = c(c+1)/2`.
pub const fn staircase_size(c: usize) -> usize {
    c * (c + 1) / 2
}

/// `B_c` of `S_n` exists iff `c(c+1)/2 ≤ n` and the two agree mod 2.
pub const fn is_sym_block(n: usize, c: usize) -> bool {
    staircase_size(c) <= n && staircase_size(c) % 2 == n % 2
}

/// A 2-block label: `B_c` of `S_n`, or `b_c` / `b_c^±` of `A_n`.
///
/// `A_1 = S_1` has a single block, so `(Alt, 1, 1)` carries no sign even
/// though its weight is zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockLabel {
    pub group: Group,
    pub n: usize,
    pub c: usize,
    pub sign: Option<Sign>,
}

impl BlockLabel {
    pub fn sym(n: usize, c: usize) -> Result<Self> {
        Self::checked(BlockLabel { group: Group::Sym, n, c, sign: None })
    }

    pub fn alt(n: usize, c: usize, sign: Option<Sign>) -> Result<Self> {
        Self::checked(BlockLabel { group: Group::Alt, n, c, sign })
    }

    fn checked(label: BlockLabel) -> Result<Self> {
        label.validate()?;
        Ok(label)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidLabel("n must be positive".into()));
        }
        if !is_sym_block(self.n, self.c) {
            return Err(Error::InvalidLabel(format!(
                "γ_{} (size {}) does not label a 2-block of S_{}",
                self.c,
                staircase_size(self.c),
                self.n
            )));
        }
        let weight_zero = staircase_size(self.c) == self.n;
        let wants_sign = self.group == Group::Alt && weight_zero && self.n >= 2;
        match (wants_sign, self.sign.is_some()) {
            (true, false) => Err(Error::InvalidLabel(format!("{self} needs a ± sign"))),
            (false, true) => Err(Error::InvalidLabel(format!("{self} cannot carry a sign"))),
            _ => Ok(()),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// `w(B) = (n - c(c+1)/2) / 2`.
    pub fn weight(&self) -> Result<usize> {
        self.validate()?;
        Ok((self.n - staircase_size(self.c)) / 2)
    }

    pub fn core(&self) -> Partition {
        gamma(self.c)
    }
}

/// `S_75:B_5`, `A_75:b_5`, `A_15:b_5^+`
impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.group {
            Group::Sym => write!(f, "S_{}:B_{}", self.n, self.c),
            Group::Alt => {
                write!(f, "A_{}:b_{}", self.n, self.c)?;
                if let Some(sign) = self.sign {
                    write!(f, "^{}", sign.as_char())?;
                }
                Ok(())
            }
        }
    }
}

/// The `S_n` block containing `χ^λ`, read off from the 2-core.
pub fn block_of(lambda: &Partition) -> BlockLabel {
    let core = lambda.core(2);
    BlockLabel { group: Group::Sym, n: lambda.size(), c: core.len(), sign: None }
}

/// All 2-blocks of `S_n`, ascending in `c`, weight-zero blocks included.
pub fn blocks_of_sym(n: usize) -> Vec<BlockLabel> {
    if n == 0 {
        return Vec::new();
    }
    (0..)
        .take_while(|&c| staircase_size(c) <= n)
        .filter(|&c| is_sym_block(n, c))
        .map(|c| BlockLabel { group: Group::Sym, n, c, sign: None })
        .collect()
}

/// `n = a·p^k + r` with `0 < a < p` and `0 ≤ r < p^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PDecomposition {
    pub n: u64,
    pub p: u64,
    pub a: u64,
    pub k: u32,
    pub r: u64,
}

impl PDecomposition {
    pub fn p_power(&self) -> u64 {
        self.p.pow(self.k)
    }

    /// `a·p^k`
    pub fn leading(&self) -> u64 {
        self.a * self.p_power()
    }
}

pub fn p_decompose(n: u64, p: u64) -> Result<PDecomposition> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::PreconditionViolation("decomposition needs n >= 1".into()));
    }
    let mut pk = 1u64;
    let mut k = 0u32;
    while let Some(next) = pk.checked_mul(p).filter(|&next| next <= n) {
        pk = next;
        k += 1;
    }
    Ok(PDecomposition { n, p, a: n / pk, k, r: n % pk })
}

/// Whether `p` divides `χ^λ(1)`, decided from `p^k`-cores alone.
///
/// With `|λ| = a·p^k + r`, `χ^λ` is p-divisible iff `|C_{p^k}(λ)| > r` or the
/// character of the core is itself p-divisible. Below `p` no degree is
/// divisible by `p`, since it divides `|λ|!`.
pub fn macdonald_p_divisible(lambda: &Partition, p: u64) -> Result<bool> {
    require_prime(p)?;
    let mut current = lambda.clone();
    loop {
        let n = current.size() as u64;
        if n < p {
            return Ok(false);
        }
        let dec = p_decompose(n, p)?;
        let core = current.core(dec.p_power() as usize);
        if core.size() as u64 > dec.r {
            return Ok(true);
        }
        current = core;
    }
}
