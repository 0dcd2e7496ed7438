use std::fmt;

use num_bigint::BigInt;

use super::partition::{Cell, Composition, Partition};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MultiPoly, Var};

/// A filling of a Young diagram by positive integers, stored row by row in
/// French order (`rows[0]` is the bottom row).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a tableau from its rows, bottom row first.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::Parse("tableau entries must be positive".into()));
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entry(&self, c: Cell) -> Option<u32> {
        self.rows.get(c.y).and_then(|r| r.get(c.x)).copied()
    }

    /// Weak composition: `content[i]` is the number of entries equal to `i+1`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut c = vec![0; max];
        for &v in self.rows.iter().flatten() {
            c[v as usize - 1] += 1;
        }
        c
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(up, down)| up > down));
        rows_ok && cols_ok
    }

    pub fn is_standard(&self) -> bool {
        self.is_semistandard() && self.content().iter().all(|&c| c == 1)
    }

    /// Reading word: rows from top to bottom, each left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Descents of a standard tableau: `i` such that `i+1` sits in a strictly
    /// higher row than `i`.
    pub fn descents(&self) -> Vec<u32> {
        let n = self.shape.size();
        let mut row_of = vec![0usize; n + 1];
        for (y, r) in self.rows.iter().enumerate() {
            for &v in r {
                row_of[v as usize] = y;
            }
        }
        (1..n as u32)
            .filter(|&i| row_of[i as usize + 1] > row_of[i as usize])
            .collect()
    }

    pub fn major_index(&self) -> u32 {
        self.descents().iter().sum()
    }
}

/// Rows top to bottom, like the usual French drawing.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().rev().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(u32::to_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// Calls `visit` on every semistandard tableau of shape `shape` whose
/// content is the weak composition `content`. Cells are filled row by row,
/// bottom to top, left to right, trying values in increasing order, so the
/// visiting order is deterministic.
pub fn for_each_ssyt(shape: &Partition, content: &[usize], mut visit: impl FnMut(&Tableau)) {
    if shape.size() != content.iter().sum::<usize>() {
        return;
    }
    let cells: Vec<Cell> = shape.cells().collect();
    let mut t = Tableau {
        shape: shape.clone(),
        rows: shape.parts().iter().map(|&l| vec![0; l]).collect(),
    };
    let mut remaining = content.to_vec();
    fill(&cells, 0, &mut t, &mut remaining, &mut visit);
}

fn fill(
    cells: &[Cell],
    k: usize,
    t: &mut Tableau,
    remaining: &mut [usize],
    visit: &mut impl FnMut(&Tableau),
) {
    let Some(&c) = cells.get(k) else {
        visit(t);
        return;
    };
    let left = if c.x > 0 { t.rows[c.y][c.x - 1] } else { 1 };
    let below = if c.y > 0 { t.rows[c.y - 1][c.x] + 1 } else { 1 };
    let lo = left.max(below);
    for v in lo..=remaining.len() as u32 {
        let slot = &mut remaining[v as usize - 1];
        if *slot == 0 {
            continue;
        }
        *slot -= 1;
        t.rows[c.y][c.x] = v;
        fill(cells, k + 1, t, remaining, visit);
        remaining[v as usize - 1] += 1;
    }
    t.rows[c.y][c.x] = 0;
}

/// All semistandard tableaux of the given shape and (weak) content.
pub fn ssyt(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_ssyt(shape, content, |t| out.push(t.clone()));
    out
}

/// All standard tableaux of shape `shape`.
pub fn syt(shape: &Partition) -> Vec<Tableau> {
    ssyt(shape, &vec![1; shape.size()])
}

pub fn syt_count(shape: &Partition) -> u64 {
    let mut n = 0;
    for_each_ssyt(shape, &vec![1; shape.size()], |_| n += 1);
    n
}

/// Kostka number `K_{λ,ν}`: the number of SSYT of shape `λ` and content `ν`,
/// by direct enumeration (the parts of `ν` are used in the given order).
pub fn kostka_number(lambda: &Partition, nu: &Composition) -> Result<u64> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: nu.size(),
        });
    }
    let mut n = 0;
    for_each_ssyt(lambda, nu.parts(), |_| n += 1);
    Ok(n)
}

/// Fake degree polynomial `f^λ(z) = Σ_{T ∈ SYT(λ)} z^{maj(T)}`.
pub fn fake_degree(lambda: &Partition) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for_each_ssyt(lambda, &vec![1; lambda.size()], |t| {
        p.add_term(z_power(t.major_index()), BigInt::from(1));
    });
    p
}

pub(crate) fn z_power(e: u32) -> Monomial {
    let mut m = Monomial::ONE;
    m.0[Var::Z.index()] = e;
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::{compositions_of, factorial, partitions_of};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    /// Brute force: every function from cells to 1..=max, filtered.
    fn kostka_brute(shape: &Partition, content: &[usize]) -> u64 {
        let cells: Vec<Cell> = shape.cells().collect();
        let k = content.len() as u32;
        let total = (k as u64).pow(cells.len() as u32);
        let mut count = 0;
        for code in 0..total {
            let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
            let mut x = code;
            for cell in &cells {
                rows[cell.y][cell.x] = (x % k as u64) as u32 + 1;
                x /= k as u64;
            }
            let t = Tableau::from_rows(rows).unwrap();
            let mut cont = t.content();
            cont.resize(content.len(), 0);
            if t.is_semistandard() && cont == content {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_number(&p(&[2, 1]), &c(&[1, 1, 1])).unwrap(), 2);
        assert!(kostka_number(&p(&[2, 1]), &c(&[1, 1])).is_err());
        for n in 1..=6 {
            for lam in partitions_of(n) {
                assert_eq!(kostka_number(&lam, &lam.to_composition()).unwrap(), 1);
            }
            for nu in compositions_of(n) {
                assert_eq!(kostka_number(&Partition::row(n), &nu).unwrap(), 1);
            }
        }
    }

    #[test]
    fn kostka_matches_brute_force() {
        for n in 1..=5 {
            for lam in partitions_of(n) {
                for nu in compositions_of(n) {
                    assert_eq!(
                        kostka_number(&lam, &nu).unwrap(),
                        kostka_brute(&lam, nu.parts()),
                        "K_{{{lam},{nu}}}"
                    );
                }
            }
        }
    }

    #[test]
    fn kostka_is_invariant_under_rearrangement() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                for nu in compositions_of(n) {
                    assert_eq!(
                        kostka_number(&lam, &nu).unwrap(),
                        kostka_number(&lam, &nu.sorted().to_composition()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn kostka_dominance_support() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                for nu in partitions_of(n) {
                    let k = kostka_number(&lam, &nu.to_composition()).unwrap();
                    if !nu.dominance_leq(&lam).unwrap() {
                        assert_eq!(k, 0, "K_{{{lam},{nu}}}");
                    }
                }
            }
        }
    }

    #[test]
    fn sample_tableau_major_index() {
        // rows bottom to top: 1 3 6 8 / 2 4 7 / 5
        let t = Tableau::from_rows(vec![vec![1, 3, 6, 8], vec![2, 4, 7], vec![5]]).unwrap();
        assert!(t.is_standard());
        assert_eq!(t.descents(), vec![1, 3, 4, 6]);
        assert_eq!(t.major_index(), 14);

        let s = Tableau::from_rows(vec![vec![1, 1, 2, 3], vec![2, 2, 4], vec![4]]).unwrap();
        assert!(s.is_semistandard());
        assert!(!s.is_standard());
        assert_eq!(s.reading_word(), vec![4, 2, 2, 4, 1, 1, 2, 3]);
    }

    #[test]
    fn fake_degree_examples() {
        assert_eq!(fake_degree(&p(&[4])), MultiPoly::one());
        assert_eq!(fake_degree(&p(&[2, 1])), "z + z^2".parse().unwrap());
        assert_eq!(fake_degree(&p(&[1, 1, 1])), "z^3".parse().unwrap());
    }

    #[test]
    fn syt_squares_sum_to_factorial() {
        for n in 0..=7 {
            let s: u64 = partitions_of(n).iter().map(|l| syt_count(l).pow(2)).sum();
            assert_eq!(s, factorial(n));
        }
    }

    #[test]
    fn enumeration_order_is_deterministic() {
        let ts = syt(&p(&[2, 1]));
        assert_eq!(ts[0].rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(ts[1].rows(), &[vec![1, 3], vec![2]]);
    }
}
