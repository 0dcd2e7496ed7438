use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The four polynomial variables, in their canonical order `q < t < z < w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
    Z,
    W,
}

pub const NUM_VARS: usize = 4;

impl Var {
    pub const ALL: [Var; NUM_VARS] = [Var::Q, Var::T, Var::Z, Var::W];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        match self {
            Var::Q => 'q',
            Var::T => 't',
            Var::Z => 'z',
            Var::W => 'w',
        }
    }

    pub fn from_name(c: char) -> Option<Var> {
        match c {
            'q' => Some(Var::Q),
            't' => Some(Var::T),
            'z' => Some(Var::Z),
            'w' => Some(Var::W),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Exponent vector over `(q, t, z, w)`.
///
/// Ordered graded lexicographically for display: lower total degree first,
/// and within a degree the monomial with the larger `q` exponent (then `t`,
/// then `z`) first, so `3 + q*z + t*z + q*t*z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; NUM_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NUM_VARS]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; NUM_VARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NUM_VARS]
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let p: MultiPoly = s.parse()?;
        match p.terms.iter().next() {
            Some((m, c)) if p.terms.len() == 1 && c.is_one() => Ok(*m),
            _ => Err(Error::Parse(format!("{s:?} is not a monomial"))),
        }
    }
}

/// Sparse polynomial in `q, t, z, w` with big-integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

/// What to substitute for a variable in [`MultiPoly::specialize`].
#[derive(Clone, Debug)]
pub enum Binding {
    Int(BigInt),
    Poly(MultiPoly),
}

impl From<i64> for Binding {
    fn from(v: i64) -> Self {
        Binding::Int(BigInt::from(v))
    }
}

impl From<MultiPoly> for Binding {
    fn from(p: MultiPoly) -> Self {
        Binding::Poly(p)
    }
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, c.into());
        p
    }

    /// `v^e`
    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut m = Monomial::ONE;
        m.0[v.index()] = e;
        Self::term(m, 1)
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

    /// Terms in canonical (graded lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Variables that occur with a positive exponent.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|m| m.exp(v) > 0))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// The constant coefficient if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// Substitutes the bound variables and renormalizes. Unbound variables
    /// are left alone.
    pub fn specialize(&self, bindings: &[(Var, Binding)]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut factor = MultiPoly::constant(c.clone());
            for (v, b) in bindings {
                let e = rest.exp(*v);
                if e == 0 {
                    continue;
                }
                rest.0[v.index()] = 0;
                factor = match b {
                    Binding::Int(x) => factor.scale(&num_traits::pow(x.clone(), e as usize)),
                    Binding::Poly(p) => &factor * &p.pow(e),
                };
            }
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&rest), fc);
            }
        }
        out
    }

    /// Renames `from` to `to`. The target variable should not already occur.
    pub fn rename(&self, from: Var, to: Var) -> MultiPoly {
        self.specialize(&[(from, Binding::Poly(MultiPoly::var(to)))])
    }

    /// Exchanges the roles of two variables.
    pub fn swap(&self, a: Var, b: Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut e = m.0;
            e.swap(a.index(), b.index());
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Evaluates at an integer point (missing variables evaluate to zero).
    pub fn eval_int(&self, point: &[(Var, i64)]) -> BigInt {
        let bindings: Vec<_> = Var::ALL
            .iter()
            .map(|&v| {
                let x = point.iter().find(|(w, _)| *w == v).map_or(0, |(_, x)| *x);
                (v, Binding::from(x))
            })
            .collect();
        self.specialize(&bindings).as_constant().unwrap_or_default()
    }

    /// Replaces each exponent `e` of a variable of order `d` by `e mod d`.
    /// Variables without an order are untouched.
    pub fn reduce_exponents(&self, orders: &[(Var, u32)]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut e = m.0;
            for &(v, d) in orders {
                assert!(d > 0, "variable orders must be positive");
                e[v.index()] %= d;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in {:?}", self.src))
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.chars.peek().map(|&(i, _)| i).unwrap_or(self.src.len());
        let mut end = start;
        while let Some(&(i, c)) = self.chars.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            end = i + 1;
            self.chars.next();
        }
        if end == start {
            return Err(self.err("expected a number"));
        }
        self.src[start..end]
            .parse()
            .map_err(|_| self.err("bad number"))
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(MultiPoly::constant(self.number()?)),
            Some(c) => {
                let v = Var::from_name(c).ok_or_else(|| self.err("unknown variable"))?;
                self.chars.next();
                if self.peek() == Some('^') {
                    self.chars.next();
                    let e = self
                        .number()?
                        .to_u32()
                        .ok_or_else(|| self.err("exponent out of range"))?;
                    Ok(MultiPoly::var_pow(v, e))
                } else {
                    Ok(MultiPoly::var(v))
                }
            }
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.chars.next();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.chars.next();
                -1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                None => return Ok(acc),
                Some(_) => return Err(self.err("expected + or -")),
            }
            self.chars.next();
        }
    }
}

impl FromStr for MultiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            chars: s.char_indices().peekable(),
            src: s,
        };
        p.expr()
    }
}

/// Serialized as a list of `[monomial, coefficient]` string pairs in
/// canonical order, e.g. `[["1","3"],["q*z","1"]]`.
impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(String, String)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.to_string(), c.to_string()))
            .collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(String, String)>::deserialize(d)?;
        let mut p = MultiPoly::zero();
        for (m, c) in pairs {
            let m: Monomial = m.parse().map_err(D::Error::custom)?;
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            p.add_term(m, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&poly("q + t") * &MultiPoly::one(), poly("q + t"));
        assert_eq!(&poly("q + t") * &poly("q - t"), poly("q^2 - t^2"));
        assert_eq!(poly("2*q").scale(&BigInt::from(-3)), poly("-6*q"));
        assert!((&poly("q*t") - &poly("t*q")).is_zero());
    }

    #[test]
    fn display_is_graded_lex() {
        let p = poly("q*t*z + t*z + 3 + q*z");
        assert_eq!(p.to_string(), "3 + q*z + t*z + q*t*z");
        assert_eq!(poly("z^2 + z").to_string(), "z + z^2");
        assert_eq!(poly("-t^2 + q^2").to_string(), "q^2 - t^2");
        assert_eq!(poly("-1 - 2*w").to_string(), "-1 - 2*w");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }

    #[test]
    fn specialize_examples() {
        let p = poly("q + t + q*t");
        assert_eq!(p.specialize(&[(Var::T, 0.into())]), poly("q"));
        assert_eq!(
            poly("1 + q*t").specialize(&[(Var::Q, 1.into()), (Var::T, 1.into())]),
            poly("2")
        );
        assert_eq!(
            poly("q^2*z").specialize(&[(Var::Q, poly("t + 1").into())]),
            poly("t^2*z + 2*t*z + z")
        );
        assert_eq!(poly("q + 2*q^2").rename(Var::Q, Var::Z), poly("z + 2*z^2"));
        assert_eq!(poly("q + 2*t^2").swap(Var::Q, Var::T), poly("t + 2*q^2"));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(poly("z^2").reduce_exponents(&[(Var::Z, 2)]), poly("1"));
        assert_eq!(
            poly("q^3*t").reduce_exponents(&[(Var::Q, 2), (Var::T, 2)]),
            poly("q*t")
        );
    }

    #[test]
    fn parse_errors() {
        assert!("q +".parse::<MultiPoly>().is_err());
        assert!("x".parse::<MultiPoly>().is_err());
        assert!("q t".parse::<MultiPoly>().is_err());
        assert!("q*t".parse::<Monomial>().is_ok());
        assert!("2*q".parse::<Monomial>().is_err());
    }

    #[test]
    fn serde_shape() {
        let p = poly("3 + q*z");
        let s = serde_json_like(&p);
        assert_eq!(
            s,
            vec![("1".into(), "3".into()), ("q*z".into(), "1".into())]
        );
    }

    fn serde_json_like(p: &MultiPoly) -> Vec<(String, String)> {
        p.terms()
            .map(|(m, c)| (m.to_string(), c.to_string()))
            .collect()
    }

    pub(crate) fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::array::uniform4(0u32..4), -5i64..=5), 0..8).prop_map(|terms| {
            let mut p = MultiPoly::zero();
            for (e, c) in terms {
                p.add_term(Monomial(e), BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(p in arb_poly()) {
            prop_assert_eq!(p.to_string().parse::<MultiPoly>().unwrap(), p);
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn specialize_is_a_homomorphism(a in arb_poly(), b in arb_poly(), x in -3i64..=3) {
            let bind = [(Var::T, Binding::from(x))];
            prop_assert_eq!(
                (&a * &b).specialize(&bind),
                &a.specialize(&bind) * &b.specialize(&bind)
            );
        }
    }
}
