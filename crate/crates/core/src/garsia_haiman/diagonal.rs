use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial in `x_1, …, x_n, y_1, …, y_n` with integer coefficients.
/// Exponent vectors hold the `x` exponents followed by the `y` exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalPoly {
    n: usize,
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl DiagonalPoly {
    pub fn zero(n: usize) -> Self {
        DiagonalPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; 2 * n], BigInt::one());
        p
    }

    /// `x_i` (1-based).
    pub fn x(n: usize, i: usize) -> Self {
        let mut e = vec![0; 2 * n];
        e[i - 1] = 1;
        let mut p = Self::zero(n);
        p.add_term(e, BigInt::one());
        p
    }

    /// `y_i` (1-based).
    pub fn y(n: usize, i: usize) -> Self {
        let mut e = vec![0; 2 * n];
        e[n + i - 1] = 1;
        let mut p = Self::zero(n);
        p.add_term(e, BigInt::one());
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u8>, c: BigInt) {
        assert_eq!(exps.len(), 2 * self.n, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// `(x-degree, y-degree)` of a monomial.
    pub fn bidegree_of(&self, exps: &[u8]) -> (usize, usize) {
        let (xs, ys) = exps.split_at(self.n);
        (
            xs.iter().map(|&e| e as usize).sum(),
            ys.iter().map(|&e| e as usize).sum(),
        )
    }

    /// The bidegree if the polynomial is nonzero and bihomogeneous.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(|e| self.bidegree_of(e));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Partial derivative in variable `var`, where `0..n` are the `x`'s and
    /// `n..2n` the `y`'s.
    pub fn derivative(&self, var: usize) -> DiagonalPoly {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.terms.insert(e2, c * BigInt::from(e[var]));
        }
        out
    }

    pub fn dx(&self, i: usize) -> DiagonalPoly {
        self.derivative(i - 1)
    }

    pub fn dy(&self, i: usize) -> DiagonalPoly {
        self.derivative(self.n + i - 1)
    }

    /// Swaps `x_i ↔ x_j` and `y_i ↔ y_j` simultaneously (1-based).
    pub fn transpose_points(&self, i: usize, j: usize) -> DiagonalPoly {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.swap(i - 1, j - 1);
            e2.swap(self.n + i - 1, self.n + j - 1);
            out.terms.insert(e2, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> DiagonalPoly {
        let mut out = Self::zero(self.n);
        if !c.is_zero() {
            for (e, v) in &self.terms {
                out.terms.insert(e.clone(), v * c);
            }
        }
        out
    }

    pub fn sub(&self, other: &DiagonalPoly) -> DiagonalPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub(crate) fn leading(&self) -> Option<(&Vec<u8>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Divides out the gcd of the coefficients and makes the leading
    /// coefficient positive.
    pub(crate) fn normalize(&mut self) {
        let Some((_, lead)) = self.leading() else {
            return;
        };
        let negative = lead.is_negative();
        let g = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let g = if negative { -g } else { g };
        if !g.is_one() {
            for c in self.terms.values_mut() {
                *c = &*c / &g;
            }
        }
    }
}

impl fmt::Display for DiagonalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names: Vec<String> = (1..=self.n)
            .map(|i| format!("x{i}"))
            .chain((1..=self.n).map(|i| format!("y{i}")))
            .collect();
        // highest degree first; within a degree, later variables first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| {
            (
                std::cmp::Reverse(e.iter().map(|&p| p as u32).sum::<u32>()),
                *e,
            )
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let mut factors = Vec::new();
            for (v, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(names[v].clone()),
                    _ => factors.push(format!("{}^{p}", names[v])),
                }
            }
            let abs = c.abs();
            let body = if factors.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                factors.join("*")
            } else {
                format!("{abs}*{}", factors.join("*"))
            };
            match (k, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// Row echelon form over the integers, keyed by leading monomial.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: BTreeMap<Vec<u8>, DiagonalPoly>,
}

impl Echelon {
    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn basis(&self) -> impl Iterator<Item = &DiagonalPoly> {
        self.rows.values()
    }

    /// Eliminates leading terms of `p` against the rows, cross-multiplying
    /// so no fractions appear.
    fn reduce(&self, mut p: DiagonalPoly) -> DiagonalPoly {
        loop {
            let Some((lm, lc)) = p.leading() else {
                return p;
            };
            let Some(row) = self.rows.get(lm) else {
                return p;
            };
            let rc = row.leading().expect("rows are nonzero").1;
            let g = lc.gcd(rc);
            let (pa, ra) = (rc / &g, lc / &g);
            p = p.scale(&pa).sub(&row.scale(&ra));
            p.normalize();
        }
    }

    /// Adds `p` to the span; returns whether the rank grew.
    pub(crate) fn insert(&mut self, p: DiagonalPoly) -> bool {
        let mut r = self.reduce(p);
        if r.is_zero() {
            return false;
        }
        r.normalize();
        let lm = r.leading().expect("nonzero").0.clone();
        self.rows.insert(lm, r);
        true
    }

    #[cfg(test)]
    pub(crate) fn contains(&self, p: &DiagonalPoly) -> bool {
        self.reduce(p.clone()).is_zero()
    }
}
