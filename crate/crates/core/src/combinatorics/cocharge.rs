//! Lascoux–Schützenberger charge and cocharge of words and tableaux with
//! partition content.

use num_bigint::BigInt;

use super::partition::{Composition, Partition};
use super::tableau::{for_each_ssyt, z_power, Tableau};
use crate::error::{Error, Result};
use crate::polyring::MultiPoly;

/// Splits a word of partition content into standard subwords. Each subword
/// is returned as the positions (into `word`) of its letters `1, 2, …, k`.
///
/// The extraction scans right to left: take the rightmost unused `1`, then
/// keep moving left (wrapping around to the right end) to the first unused
/// `2`, and so on while the next letter is still available.
pub fn standard_subwords(word: &[u32]) -> Vec<Vec<usize>> {
    let mut used = vec![false; word.len()];
    let mut out = Vec::new();
    let len = word.len();
    while used.iter().any(|u| !u) {
        let mut positions = Vec::new();
        let mut letter = 1u32;
        let mut start = len; // scanning begins just left of `start`
        loop {
            let found = (1..=len)
                .map(|step| (start + len - step) % len)
                .find(|&i| !used[i] && word[i] == letter);
            let Some(i) = found else { break };
            used[i] = true;
            positions.push(i);
            start = i;
            letter += 1;
        }
        assert!(
            !positions.is_empty(),
            "word {word:?} does not have partition content"
        );
        out.push(positions);
    }
    out
}

/// Charge of a word with partition content: sum over standard subwords of
/// the indices, where letter `k+1` gets the index of `k` plus one if it sits
/// to the right of `k`.
pub fn charge_of_word(word: &[u32]) -> usize {
    standard_subwords(word)
        .iter()
        .map(|pos| {
            let mut index = 0;
            let mut total = 0;
            for w in pos.windows(2) {
                if w[1] > w[0] {
                    index += 1;
                }
                total += index;
            }
            total
        })
        .sum()
}

/// Checks that a content vector is weakly decreasing.
fn content_partition(content: &[usize]) -> Option<Partition> {
    let trimmed: Vec<usize> = content.iter().copied().take_while(|&c| c > 0).collect();
    if trimmed.len() != content.iter().filter(|&&c| c > 0).count() {
        return None;
    }
    Partition::new(trimmed).ok()
}

pub fn charge(t: &Tableau) -> usize {
    charge_of_word(&t.reading_word())
}

/// `cocharge(T) = n(ν) − charge(T)` for `T` of partition content `ν`.
///
/// # Panics
/// Panics if the content of `t` is not a partition.
pub fn cocharge(t: &Tableau) -> usize {
    let nu = content_partition(&t.content()).expect("cocharge needs partition content");
    nu.n_statistic() - charge(t)
}

/// Modified Kostka–Foulkes polynomial
/// `K̃_{λ,ν}(z) = Σ_{T ∈ SSYT(λ, sort ν)} z^{cocharge(T)}`.
pub fn cocharge_kostka(lambda: &Partition, nu: &Composition) -> Result<MultiPoly> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: nu.size(),
        });
    }
    let content = nu.sorted();
    let n_nu = content.n_statistic();
    let mut p = MultiPoly::zero();
    for_each_ssyt(lambda, content.parts(), |t| {
        let e = n_nu - charge(t);
        p.add_term(z_power(e as u32), BigInt::from(1));
    });
    Ok(p)
}

/// Kostka–Foulkes polynomial in the charge convention,
/// `Σ_T z^{charge(T)}`. Kept for comparing the two conventions.
pub fn charge_kostka(lambda: &Partition, nu: &Composition) -> Result<MultiPoly> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: nu.size(),
        });
    }
    let mut p = MultiPoly::zero();
    for_each_ssyt(lambda, nu.sorted().parts(), |t| {
        p.add_term(z_power(charge(t) as u32), BigInt::from(1));
    });
    Ok(p)
}
