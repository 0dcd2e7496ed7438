//! Modified Macdonald polynomials through the Haglund–Haiman–Loehr filling
//! statistics, and their Schur coefficients `K̃_{λ,μ}(q,t)`.
//!
//! The monomial coefficient of `m_ν` in `H̃_μ` is a sum over all fillings of
//! `μ` with content `ν`. Peeling off Kostka numbers in a linear extension of
//! dominance then yields the Schur expansion.

mod filling;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

pub use filling::{filling_stats, for_each_filling, Filling, FillingStats};

use crate::combinatorics::{kostka_number, partitions_of, Composition, Partition};
use crate::error::{Error, Result};
use crate::polyring::{Binding, Monomial, MultiPoly, Var};

/// Which filling statistic is recorded by `q` and which by `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatRouting {
    /// `q^{maj} t^{inv}`. For `μ = (m^n)` this pairs `q` with the rotation of
    /// the `n` rows and `t` with the rotation of the `m` columns.
    MajToQ,
    /// `q^{inv} t^{maj}`, the usual HHL orientation.
    InvToQ,
}

impl StatRouting {
    pub fn other(self) -> Self {
        match self {
            StatRouting::MajToQ => StatRouting::InvToQ,
            StatRouting::InvToQ => StatRouting::MajToQ,
        }
    }

    fn monomial(self, s: FillingStats) -> Monomial {
        let (q, t) = match self {
            StatRouting::MajToQ => (s.maj, s.inv),
            StatRouting::InvToQ => (s.inv, s.maj),
        };
        let mut m = Monomial::ONE;
        m.0[Var::Q.index()] = q as u32;
        m.0[Var::T.index()] = t as u32;
        m
    }
}

/// The orientation used by every table this crate hands out. The cyclic
/// sieving calibration tests fail if this is flipped.
pub const ORIENTATION: StatRouting = StatRouting::MajToQ;

/// The Schur expansion `H̃_μ = Σ_λ K̃_{λ,μ}(q,t) s_λ`, one entry per
/// `λ ⊢ |μ|` in descending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QtKostkaTable {
    mu: Partition,
    entries: Vec<(Partition, MultiPoly)>,
}

impl QtKostkaTable {
    /// Assembles a table, checking that the keys are exactly the partitions
    /// of `|μ|` in canonical order.
    pub fn from_entries(mu: Partition, entries: Vec<(Partition, MultiPoly)>) -> Result<Self> {
        let keys: Vec<&Partition> = entries.iter().map(|(l, _)| l).collect();
        let expect = partitions_of(mu.size());
        if keys.len() != expect.len() || keys.iter().zip(&expect).any(|(a, b)| *a != b) {
            return Err(Error::InvalidParameters(format!(
                "table for {mu} must list every partition of {} once",
                mu.size()
            )));
        }
        Ok(QtKostkaTable { mu, entries })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn entries(&self) -> &[(Partition, MultiPoly)] {
        &self.entries
    }

    pub fn get(&self, lambda: &Partition) -> Option<&MultiPoly> {
        self.entries
            .iter()
            .find(|(l, _)| l == lambda)
            .map(|(_, p)| p)
    }
}

/// Coefficient of `m_ν` in `H̃_μ`: the sum of `q^a t^b` over all fillings
/// of `μ` with content `ν` (parts of `ν` taken in the given order).
pub fn monomial_coeff_with(
    mu: &Partition,
    nu: &Composition,
    routing: StatRouting,
) -> Result<MultiPoly> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: nu.size(),
        });
    }
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    for_each_filling(mu, nu.parts(), |f| {
        *counts
            .entry(routing.monomial(filling_stats(f)))
            .or_default() += 1;
    });
    let mut p = MultiPoly::zero();
    for (m, c) in counts {
        p.add_term(m, BigInt::from(c));
    }
    Ok(p)
}

pub fn monomial_coeff(mu: &Partition, nu: &Composition) -> Result<MultiPoly> {
    monomial_coeff_with(mu, nu, ORIENTATION)
}

type Memo = Mutex<HashMap<(Partition, StatRouting), Arc<QtKostkaTable>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `K̃_{λ,μ}(q,t)` for every `λ`, in the configured orientation. Memoized.
pub fn qt_kostka(mu: &Partition) -> Result<Arc<QtKostkaTable>> {
    qt_kostka_with(mu, ORIENTATION)
}

/// Like [`qt_kostka`] with an explicit statistic routing.
pub fn qt_kostka_with(mu: &Partition, routing: StatRouting) -> Result<Arc<QtKostkaTable>> {
    let key = (mu.clone(), routing);
    if let Some(t) = memo().lock().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let table = Arc::new(solve_schur(mu, routing)?);
    memo().lock().unwrap().insert(key, table.clone());
    Ok(table)
}

/// Seeds the memo with a previously computed table in the configured
/// orientation (used by the on-disk cache).
pub fn preload(table: QtKostkaTable) {
    memo()
        .lock()
        .unwrap()
        .insert((table.mu.clone(), ORIENTATION), Arc::new(table));
}

/// All memoized tables in the configured orientation, sorted by `μ`.
pub fn memoized_tables() -> Vec<Arc<QtKostkaTable>> {
    let mut out: Vec<_> = memo()
        .lock()
        .unwrap()
        .iter()
        .filter(|((_, r), _)| *r == ORIENTATION)
        .map(|(_, t)| t.clone())
        .collect();
    out.sort_by(|a, b| a.mu.cmp(&b.mu));
    out
}

fn solve_schur(mu: &Partition, routing: StatRouting) -> Result<QtKostkaTable> {
    let n = mu.size();
    let parts = partitions_of(n);
    let inconsistent = |reason: String| Error::InconsistentSystem {
        mu: mu.parts().to_vec(),
        reason,
    };

    let mut entries: Vec<(Partition, MultiPoly)> = Vec::with_capacity(parts.len());
    for lambda in &parts {
        let coeff = monomial_coeff_with(mu, &lambda.to_composition(), routing)?;
        // H̃_μ is symmetric, so any rearrangement of the content must agree
        let mut reversed = lambda.parts().to_vec();
        reversed.reverse();
        if reversed != lambda.parts() {
            let other = monomial_coeff_with(mu, &Composition::new(reversed)?, routing)?;
            if other != coeff {
                return Err(inconsistent(format!(
                    "coefficient of m_{lambda} depends on the content order"
                )));
            }
        }

        let mut rest = coeff;
        for (kappa, k_kappa) in &entries {
            let k = kostka_number(kappa, &lambda.to_composition())?;
            if k == 0 {
                continue;
            }
            if !lambda.dominance_leq(kappa)? {
                return Err(inconsistent(format!(
                    "K_{{{kappa},{lambda}}} = {k} although {kappa} does not dominate {lambda}"
                )));
            }
            rest = &rest - &k_kappa.scale(&BigInt::from(k));
        }
        if kostka_number(lambda, &lambda.to_composition())? != 1 {
            return Err(inconsistent(format!("K_{{{lambda},{lambda}}} != 1")));
        }
        entries.push((lambda.clone(), rest));
    }
    Ok(QtKostkaTable {
        mu: mu.clone(),
        entries,
    })
}

/// `K̃_{λ,ν}(z)` for every `λ`: the `t = 0` specialization of
/// `K̃_{λ,sort(ν)}(q,t)` with `q` renamed `z`.
pub fn hl_kostka(nu: &Composition) -> Result<Vec<(Partition, MultiPoly)>> {
    let table = qt_kostka(&nu.sorted())?;
    Ok(table
        .entries()
        .iter()
        .map(|(l, p)| {
            let hl = p
                .specialize(&[(Var::T, Binding::from(0))])
                .rename(Var::Q, Var::Z);
            (l.clone(), hl)
        })
        .collect())
}
