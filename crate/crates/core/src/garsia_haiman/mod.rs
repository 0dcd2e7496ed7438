//! The Garsia–Haiman module `H_μ`: the span of `Δ_μ` and all its partial
//! derivatives, graded by `x`-degree and `y`-degree.

mod diagonal;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

pub use diagonal::DiagonalPoly;
use diagonal::Echelon;

use crate::combinatorics::{syt_count, Partition};
use crate::csp::all_permutations;
use crate::error::{Error, Result};
use crate::macdonald::qt_kostka;
use crate::polyring::{Monomial, MultiPoly, Var};

/// Default size bound for [`delta_mu`].
pub const DELTA_BOUND: usize = 5;
/// Default size bound for [`gh_hilbert`] and [`gh_crosscheck`].
pub const HILBERT_BOUND: usize = 4;

/// `Δ_μ = det(x_i^{a_j} y_i^{b_j})` over the cells `(a_j, b_j)` of `μ`,
/// taken row by row from the bottom, left to right.
pub fn delta_mu(mu: &Partition, bound: usize) -> Result<DiagonalPoly> {
    let n = mu.size();
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    let cells: Vec<_> = mu.cells().collect();
    let mut delta = DiagonalPoly::zero(n);
    for sigma in all_permutations(n) {
        let perm = sigma.perm();
        let mut exps = vec![0u8; 2 * n];
        for (i, &j) in perm.iter().enumerate() {
            exps[i] = cells[j].x as u8;
            exps[n + i] = cells[j].y as u8;
        }
        delta.add_term(exps, BigInt::from(sign(perm)));
    }
    Ok(delta)
}

fn sign(perm: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Dimensions of the bigraded pieces, keyed by `(x-degree, y-degree)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BigradedHilbert {
    dims: BTreeMap<(usize, usize), usize>,
}

impl BigradedHilbert {
    pub fn from_dims(dims: BTreeMap<(usize, usize), usize>) -> Self {
        BigradedHilbert {
            dims: dims.into_iter().filter(|&(_, d)| d > 0).collect(),
        }
    }

    pub fn dims(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.dims
    }

    pub fn get(&self, d: usize, e: usize) -> usize {
        self.dims.get(&(d, e)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn swapped(&self) -> BigradedHilbert {
        BigradedHilbert {
            dims: self.dims.iter().map(|(&(d, e), &v)| ((e, d), v)).collect(),
        }
    }

    /// `Σ dim(V_{d,e}) q^d t^e`.
    pub fn to_poly(&self) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (&(d, e), &v) in &self.dims {
            let mut m = Monomial::ONE;
            m.0[Var::Q.index()] = d as u32;
            m.0[Var::T.index()] = e as u32;
            p.add_term(m, BigInt::from(v));
        }
        p
    }
}

impl fmt::Display for BigradedHilbert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .dims
            .iter()
            .map(|(&(d, e), &v)| format!("({d},{e}): {v}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Bases of every nonzero bigraded slice of the derivative closure.
fn closure(mu: &Partition, bound: usize) -> Result<BTreeMap<(usize, usize), Echelon>> {
    let n = mu.size();
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    let delta = delta_mu(mu, n.max(1))?;
    let top = delta.bidegree().expect("Δ_μ is bihomogeneous");
    let mut slices: BTreeMap<(usize, usize), Echelon> = BTreeMap::new();
    slices.entry(top).or_default().insert(delta);
    // first derivatives lower the total degree by one, so a slice is
    // complete once every slice of the next total degree has been expanded
    for total in (1..=top.0 + top.1).rev() {
        let sources: Vec<(usize, usize)> = slices
            .keys()
            .copied()
            .filter(|&(d, e)| d + e == total)
            .collect();
        for (d, e) in sources {
            let basis: Vec<DiagonalPoly> = slices[&(d, e)].basis().cloned().collect();
            for p in &basis {
                for var in 0..2 * n {
                    let dp = p.derivative(var);
                    if dp.is_zero() {
                        continue;
                    }
                    let target = if var < n { (d - 1, e) } else { (d, e - 1) };
                    slices.entry(target).or_default().insert(dp);
                }
            }
        }
    }
    Ok(slices)
}

/// The bigraded Hilbert series of `H_μ` by exact rank computation.
pub fn gh_hilbert(mu: &Partition, bound: usize) -> Result<BigradedHilbert> {
    let slices = closure(mu, bound)?;
    Ok(BigradedHilbert::from_dims(
        slices.iter().map(|(&k, ech)| (k, ech.rank())).collect(),
    ))
}

/// Which pairing of gradings makes the Hilbert series agree with the
/// Macdonald side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `x`-degree ↔ `q`, `y`-degree ↔ `t`.
    Direct,
    /// `x`-degree ↔ `t`, `y`-degree ↔ `q`.
    Swapped,
    /// The series is symmetric, both pairings agree.
    Both,
}

impl Orientation {
    /// Whether two records are consistent with one global pairing.
    pub fn compatible(self, other: Orientation) -> bool {
        self == other || self == Orientation::Both || other == Orientation::Both
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Direct => "direct",
            Orientation::Swapped => "swapped",
            Orientation::Both => "both",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhCrosscheck {
    pub mu: Partition,
    pub hilbert: BigradedHilbert,
    /// `Σ dim q^d t^e` with `d` the `x`-degree.
    pub hilbert_series: MultiPoly,
    /// `Σ_λ K̃_{λ,μ}(q,t) · #SYT(λ)`.
    pub expansion: MultiPoly,
    pub orientation: Orientation,
}

/// Compares the module's Hilbert series with `Σ_λ K̃_{λ,μ}(q,t) · #SYT(λ)`.
pub fn gh_crosscheck(mu: &Partition, bound: usize) -> Result<GhCrosscheck> {
    let hilbert = gh_hilbert(mu, bound)?;
    let series = hilbert.to_poly();
    let table = qt_kostka(mu)?;
    let mut expansion = MultiPoly::zero();
    for (lambda, k) in table.entries() {
        expansion += &k.scale(&BigInt::from(syt_count(lambda)));
    }
    let direct = series == expansion;
    let swapped = series.swap(Var::Q, Var::T) == expansion;
    let orientation = match (direct, swapped) {
        (true, true) => Orientation::Both,
        (true, false) => Orientation::Direct,
        (false, true) => Orientation::Swapped,
        (false, false) => {
            return Err(Error::Mismatch {
                mu: mu.parts().to_vec(),
                hilbert: series.to_string(),
                expansion: expansion.to_string(),
            })
        }
    };
    Ok(GhCrosscheck {
        mu: mu.clone(),
        hilbert,
        hilbert_series: series,
        expansion,
        orientation,
    })
}
