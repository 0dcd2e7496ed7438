use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: positive, weakly decreasing parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A composition: a finite sequence of positive parts in any order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

/// The cycle type of a permutation, as a partition of `n`.
pub type CycleType = Partition;

/// A cell of a Young diagram in French coordinates: `x` is the column,
/// `y` the row, with row 0 at the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: usize,
    pub y: usize,
}

impl Cell {
    pub fn new(x: usize, y: usize) -> Self {
        Cell { x, y }
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The rectangle `(m^n)`: `n` rows of length `m`.
    pub fn rectangle(m: usize, n: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![m; n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `y`, zero past the last row.
    pub fn row_len(&self, y: usize) -> usize {
        self.parts.get(y).copied().unwrap_or(0)
    }

    /// Height of column `x`.
    pub fn col_len(&self, x: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > x).count()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.x < self.row_len(c.y)
    }

    /// Cells row by row, bottom to top, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(y, &len)| (0..len).map(move |x| Cell { x, y }))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..width).map(|x| self.col_len(x)).collect(),
        }
    }

    /// `n(λ) = Σ_i (i-1) λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Dominance order `self ≤ other`. Errors if the sizes differ.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.row_len(i);
            b += other.row_len(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(arm, leg)` of a cell: cells strictly right in its row and strictly
    /// above in its column.
    pub fn arm_leg(&self, c: Cell) -> Result<(usize, usize)> {
        if !self.contains(c) {
            return Err(Error::CellOutOfShape {
                x: c.x,
                y: c.y,
                shape: self.parts.clone(),
            });
        }
        Ok((self.row_len(c.y) - c.x - 1, self.col_len(c.x) - c.y - 1))
    }

    pub fn to_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(ν)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partition obtained by sorting the parts decreasingly.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition { parts: p.parts }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad part {p:?}: {e}")))
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

/// Renders as a comma separated part list, e.g. `3,1`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` (strictly positive parts), in descending
/// lexicographic order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest).rev() {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// `n!` as a `u64`; callers stay at desk scale.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
