//! Irreducible characters of the symmetric group via the
//! Murnaghan–Nakayama rule.

use num_integer::Integer;

use super::partition::{factorial, partitions_of, CycleType, Partition};
use crate::error::{Error, Result};

/// `χ^λ(ρ)`, computed by removing border strips of lengths `ρ_1, ρ_2, …`.
///
/// Works on the β-set `{λ_i + ℓ − i}`: removing a border strip of length `k`
/// moves one bead from `b` to `b − k`, with sign `(−1)^{beads in between}`.
pub fn character_value(lambda: &Partition, rho: &CycleType) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: rho.size(),
        });
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    Ok(strip(&beta, rho.parts()))
}

fn strip(beta: &[usize], lengths: &[usize]) -> i64 {
    let Some((&k, rest)) = lengths.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| b - k < c && c < b).count();
        let mut next = beta.to_vec();
        next[i] = b - k;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * strip(&next, rest);
    }
    total
}

/// `z_ρ = Π_i i^{m_i} m_i!`, the centralizer order of the class `ρ`.
pub fn centralizer_order(rho: &CycleType) -> u64 {
    let mut z = 1u64;
    let parts = rho.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let m = j - i;
        z *= (parts[i] as u64).pow(m as u32) * factorial(m);
        i = j;
    }
    z
}

pub fn class_size(rho: &CycleType) -> u64 {
    factorial(rho.size()) / centralizer_order(rho)
}

/// Cycle type of `c^r` for the long cycle `c = (1 2 … n)`: `gcd(n, r)`
/// cycles of length `n / gcd(n, r)`.
pub fn long_cycle_power_type(n: usize, r: usize) -> CycleType {
    if n == 0 {
        return Partition::empty();
    }
    let g = n.gcd(&(r % n));
    Partition::rectangle(n / g, g)
}

/// `g^{(n)}_{μ,ν} = (1/n!) Σ_ρ |C_ρ| χ^μ(ρ) χ^ν(ρ) χ^{(n)}(ρ)`, returned as
/// the exact numerator and denominator before division.
pub fn kronecker_with_trivial(mu: &Partition, nu: &Partition) -> Result<(i64, i64)> {
    let n = mu.size();
    if nu.size() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: nu.size(),
        });
    }
    let trivial = Partition::row(n);
    let mut sum = 0i64;
    for rho in partitions_of(n) {
        sum += class_size(&rho) as i64
            * character_value(mu, &rho)?
            * character_value(nu, &rho)?
            * character_value(&trivial, &rho)?;
    }
    Ok((sum, factorial(n) as i64))
}
