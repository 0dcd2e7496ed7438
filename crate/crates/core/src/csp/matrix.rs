use std::fmt;

use crate::combinatorics::Composition;
use crate::error::{Error, Result};

/// An `n × m` matrix with entries in `{1, …, L}`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContentMatrix {
    rows: usize,
    cols: usize,
    modulus: u32,
    entries: Vec<u32>,
}

impl ContentMatrix {
    pub fn from_rows(rows: Vec<Vec<u32>>, modulus: u32) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if n == 0 || m == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidParameters("ragged or empty matrix".into()));
        }
        let entries: Vec<u32> = rows.into_iter().flatten().collect();
        if entries.iter().any(|&e| e == 0 || e > modulus) {
            return Err(Error::InvalidParameters(format!(
                "entries must lie in 1..={modulus}"
            )));
        }
        Ok(ContentMatrix {
            rows: n,
            cols: m,
            modulus,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// `content[v-1]` = number of entries equal to `v`, for `v` in `1..=L`.
    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.modulus as usize];
        for &e in &self.entries {
            c[e as usize - 1] += 1;
        }
        c
    }
}

/// Rows separated by ` / `, e.g. `(3 1 / 2 4)`.
impl fmt::Display for ContentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(" / ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            f.write_str(&row.join(" "))?;
        }
        f.write_str(")")
    }
}

/// `(r, s, k)`: rotate rows by `r`, columns by `s`, and translate entries by
/// `k` steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement3 {
    pub r: usize,
    pub s: usize,
    pub k: usize,
}

impl GroupElement3 {
    pub fn new(r: usize, s: usize, k: usize) -> Self {
        GroupElement3 { r, s, k }
    }

    pub const IDENTITY: GroupElement3 = GroupElement3 { r: 0, s: 0, k: 0 };
}

impl fmt::Display for GroupElement3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.s, self.k)
    }
}

/// Row `i` goes to row `i + r`, column `j` to column `j + s`, and each
/// entry `e` becomes `((e − 1 + step·k) mod L) + 1`.
pub fn apply_action(mat: &ContentMatrix, g: GroupElement3, step: usize) -> ContentMatrix {
    let (n, m) = (mat.rows, mat.cols);
    let l = mat.modulus as usize;
    let shift = (step * g.k) % l;
    let mut entries = vec![0; n * m];
    for i in 0..n {
        for j in 0..m {
            let e = mat.get(i, j) as usize;
            entries[((i + g.r) % n) * m + (j + g.s) % m] = ((e - 1 + shift) % l + 1) as u32;
        }
    }
    ContentMatrix {
        rows: n,
        cols: m,
        modulus: mat.modulus,
        entries,
    }
}

/// Every `n × m` matrix of content `ν` (value `i` appears `ν_i` times),
/// in lexicographic order of the row-major entry sequence.
pub fn enumerate_matrices(n: usize, m: usize, nu: &Composition) -> Result<Vec<ContentMatrix>> {
    if nu.size() != n * m || n == 0 || m == 0 {
        return Err(Error::SizeMismatch {
            left: nu.size(),
            right: n * m,
        });
    }
    let modulus = nu.len() as u32;
    let mut out = Vec::with_capacity(multinomial(nu.parts()) as usize);
    let mut cur = Vec::with_capacity(n * m);
    let mut remaining = nu.parts().to_vec();
    words(&mut remaining, n * m, &mut cur, &mut |w| {
        out.push(ContentMatrix {
            rows: n,
            cols: m,
            modulus,
            entries: w.to_vec(),
        })
    });
    Ok(out)
}

fn words(remaining: &mut [usize], len: usize, cur: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if cur.len() == len {
        visit(cur);
        return;
    }
    for v in 0..remaining.len() {
        if remaining[v] == 0 {
            continue;
        }
        remaining[v] -= 1;
        cur.push(v as u32 + 1);
        words(remaining, len, cur, visit);
        cur.pop();
        remaining[v] += 1;
    }
}

/// `(Σν)! / Π ν_i!`
pub fn multinomial(parts: &[usize]) -> u64 {
    // incremental binomials keep intermediates small
    let mut total = 0u64;
    let mut acc = 1u64;
    for &p in parts {
        for i in 1..=p as u64 {
            total += 1;
            acc = acc * total / i;
        }
    }
    acc
}

/// Orders `a` dividing `l(ν)` with `ν_i = ν_{i+a}` for all `i` (indices
/// mod `l(ν)`), ascending. Always contains `l(ν)`.
pub fn symmetry_orders(nu: &Composition) -> Vec<usize> {
    let l = nu.len();
    let parts = nu.parts();
    (1..=l)
        .filter(|&a| l % a == 0 && (0..l).all(|i| parts[i] == parts[(i + a) % l]))
        .collect()
}

/// Number of matrices of content `ν` fixed by `g`, translation step `step`.
pub fn fixed_point_count(
    n: usize,
    m: usize,
    nu: &Composition,
    step: usize,
    g: GroupElement3,
) -> Result<u64> {
    let carrier = enumerate_matrices(n, m, nu)?;
    Ok(count_fixed(&carrier, g, step))
}

/// Counts matrices in `carrier` fixed by `g` without building the images.
pub(crate) fn count_fixed(carrier: &[ContentMatrix], g: GroupElement3, step: usize) -> u64 {
    let Some(first) = carrier.first() else {
        return 0;
    };
    let (n, m) = (first.rows, first.cols);
    let l = first.modulus as usize;
    let shift = (step * g.k) % l;
    let target: Vec<usize> = (0..n * m)
        .map(|idx| ((idx / m + g.r) % n) * m + (idx % m + g.s) % m)
        .collect();
    carrier
        .iter()
        .filter(|mat| {
            target.iter().enumerate().all(|(idx, &t)| {
                let e = mat.entries[idx] as usize;
                mat.entries[t] as usize == (e - 1 + shift) % l + 1
            })
        })
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::compositions_of;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn mat(rows: Vec<Vec<u32>>, l: u32) -> ContentMatrix {
        ContentMatrix::from_rows(rows, l).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let six = enumerate_matrices(2, 2, &c(&[2, 2])).unwrap();
        assert_eq!(six.len(), 6);
        assert_eq!(six[0], mat(vec![vec![1, 1], vec![2, 2]], 2));
        assert_eq!(
            enumerate_matrices(2, 2, &c(&[1, 1, 1, 1])).unwrap().len(),
            24
        );
        let two = enumerate_matrices(1, 2, &c(&[1, 1])).unwrap();
        assert_eq!(
            two,
            vec![mat(vec![vec![1, 2]], 2), mat(vec![vec![2, 1]], 2)]
        );
        assert!(enumerate_matrices(2, 2, &c(&[2, 1])).is_err());
    }

    #[test]
    fn enumeration_counts_are_multinomial() {
        for (n, m) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
            for nu in compositions_of(n * m) {
                let all = enumerate_matrices(n, m, &nu).unwrap();
                assert_eq!(all.len() as u64, multinomial(nu.parts()));
                let mut dedup = all.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), all.len());
                assert!(all.iter().all(|x| x.content() == nu.parts()));
            }
        }
    }

    #[test]
    fn action_examples() {
        let phi_m = mat(vec![vec![3, 1], vec![2, 4]], 4);
        assert_eq!(apply_action(&phi_m, GroupElement3::IDENTITY, 1), phi_m);
        assert_eq!(
            apply_action(&phi_m, GroupElement3::new(1, 0, 0), 1),
            mat(vec![vec![2, 4], vec![3, 1]], 4)
        );
        assert_eq!(
            apply_action(&phi_m, GroupElement3::new(0, 1, 0), 1),
            mat(vec![vec![1, 3], vec![4, 2]], 4)
        );
        assert_eq!(
            apply_action(&phi_m, GroupElement3::new(0, 0, 1), 1),
            mat(vec![vec![4, 2], vec![3, 1]], 4)
        );
    }

    #[test]
    fn worked_example_fixed_points() {
        let nu = c(&[2, 2]);
        assert_eq!(
            fixed_point_count(2, 2, &nu, 1, GroupElement3::IDENTITY).unwrap(),
            6
        );
        assert_eq!(
            fixed_point_count(2, 2, &nu, 1, GroupElement3::new(0, 1, 1)).unwrap(),
            4
        );
        assert_eq!(
            fixed_point_count(2, 2, &nu, 1, GroupElement3::new(0, 0, 1)).unwrap(),
            0
        );
        let fixed: Vec<String> = enumerate_matrices(2, 2, &nu)
            .unwrap()
            .into_iter()
            .filter(|x| apply_action(x, GroupElement3::new(0, 1, 1), 1) == *x)
            .map(|x| x.to_string())
            .collect();
        assert_eq!(
            fixed,
            ["(1 2 / 1 2)", "(1 2 / 2 1)", "(2 1 / 1 2)", "(2 1 / 2 1)"]
        );
    }

    #[test]
    fn count_fixed_agrees_with_apply_action() {
        let nu = c(&[2, 1, 2, 1]);
        let carrier = enumerate_matrices(2, 3, &nu).unwrap();
        for r in 0..2 {
            for s in 0..3 {
                for k in 0..2 {
                    let g = GroupElement3::new(r, s, k);
                    let direct = carrier
                        .iter()
                        .filter(|x| apply_action(x, g, 2) == **x)
                        .count();
                    assert_eq!(count_fixed(&carrier, g, 2), direct as u64);
                }
            }
        }
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[2, 2]), 6);
        assert_eq!(multinomial(&[1; 6]), 720);
        assert_eq!(multinomial(&[3, 1, 2]), 60);
        assert_eq!(multinomial(&[]), 1);
    }

    #[test]
    fn symmetry_order_examples() {
        assert_eq!(symmetry_orders(&c(&[2, 2])), vec![1, 2]);
        assert_eq!(symmetry_orders(&c(&[2, 1, 2, 1])), vec![2, 4]);
        assert_eq!(symmetry_orders(&c(&[3, 1])), vec![2]);
        assert_eq!(symmetry_orders(&c(&[1, 1, 1, 1, 1, 1])), vec![1, 2, 3, 6]);
    }

    #[test]
    fn translation_preserves_content_iff_symmetric() {
        for total in 1..=6 {
            for nu in compositions_of(total) {
                let l = nu.len();
                let carrier = enumerate_matrices(1, total, &nu).unwrap();
                let orders = symmetry_orders(&nu);
                for a in (1..=l).filter(|a| l % a == 0) {
                    let preserves = carrier.iter().all(|x| {
                        apply_action(x, GroupElement3::new(0, 0, 1), a).content() == nu.parts()
                    });
                    assert_eq!(preserves, orders.contains(&a), "ν = {nu}, a = {a}");
                }
            }
        }
    }
}
