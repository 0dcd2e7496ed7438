//! Exact arithmetic in `Z[x]/Φ_N(x)`, used to evaluate integer polynomials
//! at roots of unity without floating point.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::poly::{MultiPoly, Var};
use crate::error::{Error, Result};

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| k.gcd(&n) == 1).count()
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial,
/// obtained by dividing `x^n - 1` by `Φ_d` for every proper divisor `d`.
///
/// # Panics
/// Panics if `n == 0`.
pub fn cyclotomic_poly(n: usize) -> Arc<Vec<BigInt>> {
    assert!(n > 0, "cyclotomic_poly: n must be positive");
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n + 1];
    num[0] = BigInt::from(-1);
    num[n] = BigInt::from(1);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        num = exact_div_monic(&num, &cyclotomic_poly(d));
    }
    let p = Arc::new(num);
    cache().lock().unwrap().insert(n, p.clone());
    p
}

/// Quotient of `num` by the monic `den`; the division must be exact.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// Reduces a coefficient vector modulo `Φ_n`.
fn reduce_mod_phi(n: usize, mut v: Vec<BigInt>) -> Vec<BigInt> {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    for d in (deg..v.len()).rev() {
        let c = std::mem::take(&mut v[d]);
        if c.is_zero() {
            continue;
        }
        for (i, pi) in phi.iter().enumerate().take(deg) {
            v[d - deg + i] -= &c * pi;
        }
    }
    v.resize(deg, BigInt::zero());
    v
}

/// An element of `Z[ζ_N] = Z[x]/Φ_N(x)`, stored as its `φ(N)` coefficients
/// in the power basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicElement {
    conductor: usize,
    coeffs: Vec<BigInt>,
}

impl CyclotomicElement {
    pub fn zero(conductor: usize) -> Self {
        Self::from_int(conductor, BigInt::zero())
    }

    pub fn from_int(conductor: usize, c: impl Into<BigInt>) -> Self {
        let deg = cyclotomic_poly(conductor).len() - 1;
        let mut coeffs = vec![BigInt::zero(); deg];
        coeffs[0] = c.into();
        CyclotomicElement { conductor, coeffs }
    }

    /// `ζ_N^k`.
    pub fn root_power(conductor: usize, k: i64) -> Self {
        let mut v = vec![BigInt::zero(); conductor];
        v[k.rem_euclid(conductor as i64) as usize] = BigInt::from(1);
        Self::from_power_vector(conductor, v)
    }

    /// Element represented by `Σ v[i] x^i` for an arbitrary-length vector.
    pub fn from_power_vector(conductor: usize, v: Vec<BigInt>) -> Self {
        CyclotomicElement {
            conductor,
            coeffs: reduce_mod_phi(conductor, v),
        }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The value as a rational integer, if every non-constant coefficient
    /// vanishes.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.conductor, other.conductor,
            "cyclotomic elements of different conductors"
        );
    }
}

impl Add for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn add(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.check(rhs);
        CyclotomicElement {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn sub(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn mul(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.check(rhs);
        let mut prod = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        CyclotomicElement::from_power_vector(self.conductor, prod)
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0 (mod Φ_{})", self.conductor)
        } else {
            write!(f, "{} (mod Φ_{})", parts.join(" + "), self.conductor)
        }
    }
}

/// Per-variable assignment `v ↦ ζ_order^exponent`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootAssignment {
    roots: BTreeMap<Var, (u32, u32)>,
}

impl RootAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Binds `v ↦ ζ_order^exponent`, reducing the exponent mod `order`.
    pub fn bind(mut self, v: Var, order: u32, exponent: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidRootAssignment(format!(
                "order of {v} must be positive"
            )));
        }
        let e = exponent.rem_euclid(order as i64) as u32;
        self.roots.insert(v, (order, e));
        Ok(self)
    }

    pub fn get(&self, v: Var) -> Option<(u32, u32)> {
        self.roots.get(&v).copied()
    }

    pub fn orders(&self) -> Vec<(Var, u32)> {
        self.roots.iter().map(|(&v, &(o, _))| (v, o)).collect()
    }

    /// `N = lcm` of all orders; every value lives in `Z[ζ_N]`.
    pub fn conductor(&self) -> usize {
        self.roots
            .values()
            .fold(1usize, |acc, &(o, _)| acc.lcm(&(o as usize)))
    }
}

/// Evaluates `p` in `Z[ζ_N]`, `N` the conductor of the assignment.
pub fn eval_in_ring(p: &MultiPoly, a: &RootAssignment) -> Result<CyclotomicElement> {
    eval_in_ring_with_conductor(p, a, a.conductor())
}

/// Same as [`eval_in_ring`] but in `Z[ζ_big]` for a multiple `big` of the
/// assignment's conductor.
pub fn eval_in_ring_with_conductor(
    p: &MultiPoly,
    a: &RootAssignment,
    big: usize,
) -> Result<CyclotomicElement> {
    if big % a.conductor() != 0 {
        return Err(Error::InvalidRootAssignment(format!(
            "{big} is not a multiple of the conductor {}",
            a.conductor()
        )));
    }
    // step[v]: power of ζ_big contributed by one factor of v
    let mut step = [0usize; 4];
    for v in p.variables() {
        let (order, e) = a.get(v).ok_or(Error::UnboundVariable(v.name()))?;
        step[v.index()] = (big / order as usize) * e as usize % big;
    }
    let mut acc = vec![BigInt::zero(); big];
    for (m, c) in p.terms() {
        let k = Var::ALL
            .iter()
            .map(|&v| step[v.index()] * (m.exp(v) as usize % big))
            .sum::<usize>()
            % big;
        acc[k] += c;
    }
    Ok(CyclotomicElement::from_power_vector(big, acc))
}

/// Evaluates `p` at the assigned roots of unity and returns the value, which
/// must be a rational integer.
pub fn eval_at_roots(p: &MultiPoly, a: &RootAssignment) -> Result<BigInt> {
    let v = eval_in_ring(p, a)?;
    v.as_integer()
        .ok_or_else(|| Error::NonIntegerValue(format!("{p} at {a:?} gives {v}")))
}
