//! Beta-sets and James' abacus.
//!
//! A beta-set `X = {x_1 > x_2 > … > x_t}` encodes the partition
//! `P(X) = (x_1 - (t-1), x_2 - (t-2), …, x_t)`. Moving a bead from `x` to a
//! free position `y < x` removes an `(x - y)`-hook from `P(X)`; on the
//! `e`-abacus a one-step upward move on a runner removes an `e`-hook.

use core::fmt;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A non-empty finite set of non-negative integers, stored in decreasing order.
///
/// Equality is set equality; distinct beta-sets may encode the same partition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BetaSet {
    elements: Vec<usize>,
}

impl BetaSet {
    /// Accepts elements in any order; rejects duplicates and the empty set.
    pub fn new(mut elements: Vec<usize>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidBetaSet);
        }
        elements.sort_unstable_by(|a, b| b.cmp(a));
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidBetaSet);
        }
        Ok(BetaSet { elements })
    }

    /// The size-`t` beta-set of `lambda`: `λ_i + (t - i)` for `i = 1..=t`.
    pub fn of_partition(lambda: &Partition, t: usize) -> Result<Self> {
        if t < lambda.len() || t == 0 {
            return Err(Error::SizeTooSmall { length: lambda.len(), size: t });
        }
        let elements = (1..=t).map(|i| lambda.part(i) + (t - i)).collect();
        Ok(BetaSet { elements })
    }

    /// Shortest beta-set of `lambda` (size `max(ℓ(λ), 1)`).
    pub fn minimal(lambda: &Partition) -> Self {
        Self::of_partition(lambda, lambda.len().max(1)).expect("size covers the length")
    }

    /// Elements in decreasing order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search_by(|probe| x.cmp(probe)).is_ok()
    }

    pub fn sum(&self) -> usize {
        self.elements.iter().sum()
    }

    /// `|P(X)| = Σ x_i - t(t-1)/2`.
    pub fn partition_size(&self) -> usize {
        let t = self.len();
        self.sum() - t * (t - 1) / 2
    }

    /// `P(X)`.
    pub fn partition(&self) -> Partition {
        let t = self.len();
        let parts = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (t - 1 - i))
            .collect();
        Partition::new(parts).expect("decreasing elements give a partition")
    }

    /// `(X \ {from}) ∪ {to}` for `to < from`: removes a `(from - to)`-hook.
    pub fn remove_hook(&self, from: usize, to: usize) -> Result<Self> {
        if to >= from {
            return Err(Error::InvalidMove { from, to });
        }
        self.move_bead(from, to)
    }

    /// `(X \ {from}) ∪ {to}` for `to > from`: adds a `(to - from)`-hook.
    pub fn add_hook(&self, from: usize, to: usize) -> Result<Self> {
        if to <= from {
            return Err(Error::InvalidMove { from, to });
        }
        self.move_bead(from, to)
    }

    fn move_bead(&self, from: usize, to: usize) -> Result<Self> {
        if !self.contains(from) || self.contains(to) {
            return Err(Error::InvalidMove { from, to });
        }
        let mut elements: Vec<usize> = self.elements.iter().copied().filter(|&x| x != from).collect();
        let pos = elements.partition_point(|&x| x > to);
        elements.insert(pos, to);
        Ok(BetaSet { elements })
    }

    /// Every `(x, y)` with `x ∈ X`, `y ∉ X`, `x - y = h`.
    pub fn hook_moves(&self, h: usize) -> Vec<(usize, usize)> {
        if h == 0 {
            return Vec::new();
        }
        self.elements
            .iter()
            .filter(|&&x| x >= h && !self.contains(x - h))
            .map(|&x| (x, x - h))
            .collect()
    }

    pub fn abacus(&self, e: usize) -> AbacusConfig {
        AbacusConfig::new(self, e)
    }

    /// Pushes every bead to the top of its runner on the `e`-abacus.
    pub fn core(&self, e: usize) -> BetaSet {
        self.abacus(e).top_justified().to_beta_set()
    }

    /// Splits into even elements `X_0` and odd elements `X_1`.
    pub fn parity_split(&self) -> ParitySplit {
        let (even, odd) = self.elements.iter().partition(|&&x| x % 2 == 0);
        ParitySplit { even, odd }
    }

    /// The `c` with `C_2(P(X)) = γ_c`, read off from the bead counts on the
    /// two runners of the 2-abacus.
    pub fn two_core_index(&self) -> usize {
        let split = self.parity_split();
        let (evens, odds) = (split.even.len(), split.odd.len());
        if odds >= evens {
            odds - evens
        } else {
            evens - odds - 1
        }
    }
}

/// `{9,7,6,3,1}`
impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Even and odd halves of a beta-set; either half may be empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParitySplit {
    pub even: Vec<usize>,
    pub odd: Vec<usize>,
}

/// Bead positions of a beta-set on an `e`-runner abacus.
///
/// Runner `x` holds the rows `y` (ascending) with `x + e*y` in the set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusConfig {
    e: usize,
    runners: Vec<Vec<usize>>,
}

impl AbacusConfig {
    /// Panics if `e == 0`.
    pub fn new(beta: &BetaSet, e: usize) -> Self {
        assert!(e >= 1, "abacus needs at least one runner");
        let mut runners = vec![Vec::new(); e];
        for &b in beta.elements().iter().rev() {
            runners[b % e].push(b / e);
        }
        AbacusConfig { e, runners }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn runners(&self) -> &[Vec<usize>] {
        &self.runners
    }

    /// `(runner, row)` for every bead, in decreasing order of position.
    pub fn beads(&self) -> Vec<(usize, usize)> {
        let mut beads: Vec<(usize, usize)> = self
            .runners
            .iter()
            .enumerate()
            .flat_map(|(x, rows)| rows.iter().map(move |&y| (x, y)))
            .collect();
        beads.sort_by_key(|&(x, y)| core::cmp::Reverse(x + self.e * y));
        beads
    }

    pub fn has_bead(&self, runner: usize, row: usize) -> bool {
        self.runners.get(runner).is_some_and(|rows| rows.binary_search(&row).is_ok())
    }

    pub fn top_justified(&self) -> AbacusConfig {
        let runners = self.runners.iter().map(|rows| (0..rows.len()).collect()).collect();
        AbacusConfig { e: self.e, runners }
    }

    pub fn to_beta_set(&self) -> BetaSet {
        let elements = self
            .runners
            .iter()
            .enumerate()
            .flat_map(|(x, rows)| rows.iter().map(move |&y| x + self.e * y))
            .collect();
        BetaSet::new(elements).expect("abacus holds at least one bead")
    }

    /// One more than the lowest occupied row.
    pub fn default_rows(&self) -> usize {
        self.runners.iter().filter_map(|rows| rows.last()).max().map_or(0, |&y| y + 1)
    }

    /// ASCII picture: a header of runner labels, then one line per row with
    /// `•` for a bead and `-` for an empty position.
    pub fn render(&self) -> String {
        self.render_rows(self.default_rows())
    }

    pub fn render_rows(&self, rows: usize) -> String {
        use core::fmt::Write;

        let width = digits(self.e - 1);
        let mut out = String::new();
        for x in 0..self.e {
            if x > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{x:>width$}");
        }
        out.push('\n');
        for y in 0..rows {
            for x in 0..self.e {
                if x > 0 {
                    out.push(' ');
                }
                let mark = if self.has_bead(x, y) { '•' } else { '-' };
                for _ in 1..width {
                    out.push(' ');
                }
                out.push(mark);
            }
            out.push('\n');
        }
        out
    }
}

fn digits(mut v: usize) -> usize {
    let mut d = 1;
    while v >= 10 {
        v /= 10;
        d += 1;
    }
    d
}
