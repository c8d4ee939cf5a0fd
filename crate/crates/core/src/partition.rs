//! Integer partitions, Young diagrams, hooks and rim hooks.
//!
//! Cells are 1-indexed `(row, col)` pairs. A partition never stores zero
//! parts, so two partitions are equal exactly when their diagrams are.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// A hook together with the boundary strip that is deleted when it is removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookData {
    pub corner: Cell,
    pub length: usize,
    /// Rim cells ordered from the top-right end to the bottom-left end.
    pub rim_cells: Vec<Cell>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single row `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`, the number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` for 1-indexed `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Height of column `col`, i.e. `λ'_col`.
    fn column_height(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains(cell) {
            return Err(Error::CellOutOfDiagram { row: cell.row, col: cell.col });
        }
        let arm = self.part(cell.row) - cell.col;
        let leg = self.column_height(cell.col) - cell.row;
        Ok(arm + leg + 1)
    }

    pub fn hook(&self, cell: Cell) -> Result<HookData> {
        let length = self.hook_length(cell)?;
        let bottom = self.column_height(cell.col);
        let mut rim_cells = Vec::with_capacity(length);
        for row in cell.row..=bottom {
            let first = if row < bottom { self.part(row + 1) } else { cell.col };
            for col in (first..=self.part(row)).rev() {
                rim_cells.push(Cell::new(row, col));
            }
        }
        debug_assert_eq!(rim_cells.len(), length);
        Ok(HookData { corner: cell, length, rim_cells })
    }

    /// All cells of the Young diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// Hook length of every cell, row-major.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| (self.part(c.row) - c.col) + (conj.part(c.col) - c.row) + 1)
            .collect()
    }

    /// `λ \ H_{i,j}(λ)`: deletes the rim hook attached to `cell`.
    pub fn remove_rim_hook(&self, cell: Cell) -> Result<Partition> {
        if !self.contains(cell) {
            return Err(Error::CellOutOfDiagram { row: cell.row, col: cell.col });
        }
        let bottom = self.column_height(cell.col);
        let mut parts = self.parts.clone();
        for row in cell.row..bottom {
            parts[row - 1] = self.part(row + 1) - 1;
        }
        parts[bottom - 1] = cell.col - 1;
        Partition::new(parts)
    }

    /// The cell whose hook has length `e`, choosing the lowest such row.
    fn lowest_hook_of_length(&self, e: usize) -> Option<Cell> {
        let conj = self.conjugate();
        for row in (1..=self.len()).rev() {
            let len = self.part(row);
            // hook lengths strictly decrease along a row, so at most one match
            for col in 1..=len {
                let h = (len - col) + (conj.part(col) - row) + 1;
                if h == e {
                    return Some(Cell::new(row, col));
                }
                if h < e {
                    break;
                }
            }
        }
        None
    }

    pub fn has_hook_of_length(&self, e: usize) -> bool {
        self.lowest_hook_of_length(e).is_some()
    }

    /// `C_e(λ)`, by stripping `e`-hooks with the largest corner row first.
    ///
    /// Panics if `e == 0`.
    pub fn core(&self, e: usize) -> Partition {
        self.core_with_weight(e).0
    }

    /// Number of `e`-hooks stripped on the way to the `e`-core.
    pub fn weight(&self, e: usize) -> usize {
        self.core_with_weight(e).1
    }

    pub fn core_with_weight(&self, e: usize) -> (Partition, usize) {
        assert!(e >= 1, "core of a partition needs e >= 1");
        let mut current = self.clone();
        let mut removed = 0;
        while let Some(cell) = current.lowest_hook_of_length(e) {
            current = current
                .remove_rim_hook(cell)
                .expect("hook corner lies in the diagram");
            removed += 1;
        }
        (current, removed)
    }

    /// Diagonal hook lengths `(h_{1,1}, h_{2,2}, …)`.
    pub fn diagonal_hooks(&self) -> Partition {
        let conj = self.conjugate();
        let parts = (1..=self.len())
            .take_while(|&i| self.part(i) >= i)
            .map(|i| (self.part(i) - i) + (conj.part(i) - i) + 1)
            .collect();
        Partition { parts }
    }

    /// Iterator over all partitions of `n` in lexicographically decreasing order.
    pub fn all(n: usize) -> Partitions {
        Partitions::new(n)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl<const N: usize> TryFrom<[usize; N]> for Partition {
    type Error = Error;

    fn try_from(parts: [usize; N]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }
}

/// `(5,4,2,2,1)`; the empty partition prints as `()`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Partitions of `n`, lexicographically decreasing: `(n)` first, `(1^n)` last.
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions { next: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // successor: decrement the last part > 1, then refill greedily
        if let Some(pos) = current.iter().rposition(|&p| p > 1) {
            let mut succ = current[..pos].to_vec();
            let head = current[pos] - 1;
            let mut rest = current[pos + 1..].len() + 1;
            succ.push(head);
            while rest > 0 {
                let take = rest.min(head);
                succ.push(take);
                rest -= take;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}
