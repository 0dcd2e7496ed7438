use std::fmt;

use super::matrix::ContentMatrix;
use crate::error::{Error, Result};

/// An `l × l` permutation matrix; `perm[i]` is the column (0-based) of the
/// 1 in row `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationMatrix {
    perm: Vec<usize>,
}

impl PermutationMatrix {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &c in &perm {
            if c >= perm.len() || seen[c] {
                return Err(Error::InvalidPermutation(perm));
            }
            seen[c] = true;
        }
        Ok(PermutationMatrix { perm })
    }

    /// Columns given 1-based, as in one-line notation.
    pub fn from_one_based(cols: &[usize]) -> Result<Self> {
        if cols.contains(&0) {
            return Err(Error::InvalidPermutation(cols.to_vec()));
        }
        Self::new(cols.iter().map(|c| c - 1).collect())
    }

    pub fn identity(l: usize) -> Self {
        PermutationMatrix {
            perm: (0..l).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn column_of(&self, row: usize) -> usize {
        self.perm[row]
    }
}

/// One-line notation with 1-based columns, e.g. `[3 1 2 4]`.
impl fmt::Display for PermutationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.perm.iter().map(|c| (c + 1).to_string()).collect();
        write!(f, "[{}]", cols.join(" "))
    }
}

/// `(r, s, u, v)`: external and internal row rotation, external and
/// internal column rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement4 {
    pub r: usize,
    pub s: usize,
    pub u: usize,
    pub v: usize,
}

impl GroupElement4 {
    pub fn new(r: usize, s: usize, u: usize, v: usize) -> Self {
        GroupElement4 { r, s, u, v }
    }

    pub const IDENTITY: GroupElement4 = GroupElement4 {
        r: 0,
        s: 0,
        u: 0,
        v: 0,
    };
}

impl fmt::Display for GroupElement4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.r, self.s, self.u, self.v)
    }
}

fn check_dims(l: usize, n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 || l != n * m {
        return Err(Error::SizeMismatch {
            left: l,
            right: n * m,
        });
    }
    Ok(())
}

/// Row `m·i + j` of `P` (0-based) becomes grid cell `(i, j)` of an `n × m`
/// matrix, holding the 1-based column of its 1.
pub fn phi(p: &PermutationMatrix, n: usize, m: usize) -> Result<ContentMatrix> {
    check_dims(p.size(), n, m)?;
    let rows = (0..n)
        .map(|i| (0..m).map(|j| p.perm[m * i + j] as u32 + 1).collect())
        .collect();
    ContentMatrix::from_rows(rows, (n * m) as u32)
}

pub fn phi_inv(mat: &ContentMatrix, n: usize, m: usize) -> Result<PermutationMatrix> {
    if mat.rows() != n || mat.cols() != m {
        return Err(Error::SizeMismatch {
            left: mat.rows() * mat.cols(),
            right: n * m,
        });
    }
    if mat.modulus() as usize != n * m {
        return Err(Error::InvalidParameters(format!(
            "entry modulus {} is not {}",
            mat.modulus(),
            n * m
        )));
    }
    PermutationMatrix::new(mat.entries().iter().map(|&e| e as usize - 1).collect())
}

/// Index map for a rotation pair on `blocks × width` indices `width·i + j`.
fn block_map(blocks: usize, width: usize, outer: usize, inner: usize) -> Vec<usize> {
    (0..blocks * width)
        .map(|idx| {
            let (i, j) = (idx / width, idx % width);
            width * ((i + outer) % blocks) + (j + inner) % width
        })
        .collect()
}

/// Rows are blocked as `n` blocks of `m` and columns as `b` blocks of `a`.
/// `r` rotates the row blocks (order `n`), `s` rotates within every row
/// block (order `m`), and `u`, `v` do the same on columns (orders `b`, `a`).
pub fn perm_action(
    p: &PermutationMatrix,
    g: GroupElement4,
    n: usize,
    m: usize,
    b: usize,
    a: usize,
) -> Result<PermutationMatrix> {
    check_dims(p.size(), n, m)?;
    check_dims(p.size(), b, a)?;
    let rows = block_map(n, m, g.r, g.s);
    let cols = block_map(b, a, g.u, g.v);
    let mut perm = vec![0; p.size()];
    for (rho, &c) in p.perm.iter().enumerate() {
        perm[rows[rho]] = cols[c];
    }
    Ok(PermutationMatrix { perm })
}

/// All permutation matrices of size `l` in lexicographic order.
pub fn all_permutations(l: usize) -> Vec<PermutationMatrix> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(l);
    let mut used = vec![false; l];
    fn rec(l: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<PermutationMatrix>) {
        if cur.len() == l {
            out.push(PermutationMatrix { perm: cur.clone() });
            return;
        }
        for c in 0..l {
            if !used[c] {
                used[c] = true;
                cur.push(c);
                rec(l, cur, used, out);
                cur.pop();
                used[c] = false;
            }
        }
    }
    rec(l, &mut cur, &mut used, &mut out);
    out
}

pub fn perm_fixed_point_count(
    n: usize,
    m: usize,
    b: usize,
    a: usize,
    g: GroupElement4,
) -> Result<u64> {
    check_dims(b * a, n, m)?;
    Ok(count_fixed(&all_permutations(n * m), g, n, m, b, a))
}

pub(crate) fn count_fixed(
    carrier: &[PermutationMatrix],
    g: GroupElement4,
    n: usize,
    m: usize,
    b: usize,
    a: usize,
) -> u64 {
    let rows = block_map(n, m, g.r, g.s);
    let cols = block_map(b, a, g.u, g.v);
    carrier
        .iter()
        .filter(|p| (0..p.size()).all(|rho| p.perm[rows[rho]] == cols[p.perm[rho]]))
        .count() as u64
}
