use crate::combinatorics::{Cell, Partition};

/// An arbitrary assignment of positive integers to the cells of `μ`, stored
/// row by row (bottom row first). No tableau condition is imposed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filling {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct FillingStats {
    pub inv: usize,
    pub maj: usize,
}

impl Filling {
    /// Rows are given bottom first; the row lengths must form a partition.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> crate::Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(crate::Error::InvalidParameters(
                "filling values must be positive".into(),
            ));
        }
        Ok(Filling { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn value(&self, c: Cell) -> u32 {
        self.rows[c.y][c.x]
    }

    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut c = vec![0; max];
        for &v in self.rows.iter().flatten() {
            c[v as usize - 1] += 1;
        }
        c
    }
}

/// The `(inv, maj)` pair of a filling.
///
/// A descent is a cell, not in the bottom row, whose value strictly exceeds
/// the value directly below it; `maj` adds `leg + 1` over descents. Two cells
/// attack if they share a row, or if they lie in adjacent rows with the upper
/// cell strictly right of the lower one. Reading the diagram top row first,
/// left to right, an attacking pair is inverted when the earlier cell holds
/// the larger value; `inv` is the number of such pairs minus the arms of all
/// descents.
pub fn filling_stats(f: &Filling) -> FillingStats {
    let rows = &f.rows;
    let shape = &f.shape;
    let mut inversions = 0usize;
    let mut maj = 0usize;
    let mut arm_sum = 0usize;

    for (y, row) in rows.iter().enumerate() {
        for x1 in 0..row.len() {
            for x2 in x1 + 1..row.len() {
                if row[x1] > row[x2] {
                    inversions += 1;
                }
            }
        }
        if y == 0 {
            continue;
        }
        let below = &rows[y - 1];
        for (x, &v) in row.iter().enumerate() {
            // upper cell (x, y) against lower cells strictly to its left
            inversions += below[..x].iter().filter(|&&w| v > w).count();
            if v > below[x] {
                let arm = shape.row_len(y) - x - 1;
                let leg = shape.col_len(x) - y - 1;
                maj += leg + 1;
                arm_sum += arm;
            }
        }
    }
    FillingStats {
        inv: inversions - arm_sum,
        maj,
    }
}

/// Visits every filling of `shape` with content `content` (value `i+1`
/// used `content[i]` times). Cells are filled bottom row first, left to
/// right, smallest value first.
pub fn for_each_filling(shape: &Partition, content: &[usize], mut visit: impl FnMut(&Filling)) {
    if shape.size() != content.iter().sum::<usize>() {
        return;
    }
    let cells: Vec<Cell> = shape.cells().collect();
    let mut f = Filling {
        shape: shape.clone(),
        rows: shape.parts().iter().map(|&l| vec![0; l]).collect(),
    };
    let mut remaining = content.to_vec();
    rec(&cells, 0, &mut f, &mut remaining, &mut visit);
}

fn rec(
    cells: &[Cell],
    k: usize,
    f: &mut Filling,
    remaining: &mut [usize],
    visit: &mut impl FnMut(&Filling),
) {
    let Some(&c) = cells.get(k) else {
        visit(f);
        return;
    };
    for v in 0..remaining.len() {
        if remaining[v] == 0 {
            continue;
        }
        remaining[v] -= 1;
        f.rows[c.y][c.x] = v as u32 + 1;
        rec(cells, k + 1, f, remaining, visit);
        remaining[v] += 1;
    }
}
