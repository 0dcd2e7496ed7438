use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::matrix::{self, enumerate_matrices, symmetry_orders, GroupElement3};
use super::perm::{self, all_permutations, GroupElement4};
use crate::combinatorics::{fake_degree, kostka_number, Composition, Partition};
use crate::error::{Error, Result};
use crate::macdonald::{hl_kostka, qt_kostka_with, StatRouting, ORIENTATION};
use crate::polyring::{eval_in_ring, MultiPoly, RootAssignment, Var};

pub const DEFAULT_SIZE_BOUND: usize = 8;

type FixedCounter = Box<dyn Fn(&[usize]) -> u64>;

/// The four sieving statements, with their parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CspKind {
    /// `n × m` matrices of content `(1^{mn})` under `Z_n × Z_m × Z_{mn}`.
    Rect3 { m: usize, n: usize },
    /// `n × m` matrices of content `ν` under `Z_n × Z_m`.
    Content2 { m: usize, n: usize, nu: Composition },
    /// Content `ν` under `Z_n × Z_m × Z_{l(ν)/a}`, translating by `a`.
    Content3 {
        m: usize,
        n: usize,
        nu: Composition,
        a: usize,
    },
    /// `l × l` permutation matrices, `l = mn = ab`, under
    /// `Z_n × Z_m × Z_b × Z_a`.
    Perm4 {
        m: usize,
        n: usize,
        a: usize,
        b: usize,
    },
}

impl CspKind {
    pub fn name(&self) -> &'static str {
        match self {
            CspKind::Rect3 { .. } => "rect3",
            CspKind::Content2 { .. } => "content2",
            CspKind::Content3 { .. } => "content3",
            CspKind::Perm4 { .. } => "perm4",
        }
    }

    fn rect(&self) -> (usize, usize) {
        match *self {
            CspKind::Rect3 { m, n }
            | CspKind::Content2 { m, n, .. }
            | CspKind::Content3 { m, n, .. }
            | CspKind::Perm4 { m, n, .. } => (m, n),
        }
    }

    fn validate(&self) -> Result<()> {
        let (m, n) = self.rect();
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameters("m and n must be positive".into()));
        }
        match self {
            CspKind::Rect3 { .. } => {}
            CspKind::Content2 { nu, .. } | CspKind::Content3 { nu, .. } => {
                if nu.size() != m * n {
                    return Err(Error::SizeMismatch {
                        left: nu.size(),
                        right: m * n,
                    });
                }
            }
            CspKind::Perm4 { a, b, .. } => {
                if *a == 0 || *b == 0 || a * b != m * n {
                    return Err(Error::SizeMismatch {
                        left: a * b,
                        right: m * n,
                    });
                }
            }
        }
        if let CspKind::Content3 { nu, a, .. } = self {
            if !symmetry_orders(nu).contains(a) {
                return Err(Error::InvalidSymmetry {
                    nu: nu.parts().to_vec(),
                    a: *a,
                });
            }
        }
        Ok(())
    }

    /// Cyclic factor orders of the acting group, each with its variable.
    fn factors(&self) -> Vec<(usize, Var)> {
        match self {
            CspKind::Rect3 { m, n } => vec![(*n, Var::Q), (*m, Var::T), (m * n, Var::Z)],
            CspKind::Content2 { m, n, .. } => vec![(*n, Var::Q), (*m, Var::T)],
            CspKind::Content3 { m, n, nu, a } => {
                vec![(*n, Var::Q), (*m, Var::T), (nu.len() / a, Var::Z)]
            }
            CspKind::Perm4 { m, n, a, b } => {
                vec![(*n, Var::Q), (*m, Var::T), (*b, Var::Z), (*a, Var::W)]
            }
        }
    }
}

impl fmt::Display for CspKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CspKind::Rect3 { m, n } => write!(f, "m={m} n={n}"),
            CspKind::Content2 { m, n, nu } => write!(f, "m={m} n={n} nu={}", join(nu.parts())),
            CspKind::Content3 { m, n, nu, a } => {
                write!(f, "m={m} n={n} nu={} a={a}", join(nu.parts()))
            }
            CspKind::Perm4 { m, n, a, b } => write!(f, "m={m} n={n} a={a} b={b}"),
        }
    }
}

fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// A polynomial value: a machine integer when it fits, otherwise its decimal
/// or cyclotomic rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EvalValue {
    Int(i64),
    Text(String),
}

impl fmt::Display for EvalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalValue::Int(v) => write!(f, "{v}"),
            EvalValue::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CspRecord {
    pub element: Vec<usize>,
    pub count: u64,
    pub eval: EvalValue,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl CspRecord {
    pub fn element_label(&self) -> String {
        format!("({})", join(&self.element))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CspReport {
    pub kind: String,
    pub params: String,
    pub polynomial: MultiPoly,
    pub records: Vec<CspRecord>,
    pub all_match: bool,
}

impl CspReport {
    pub fn record(&self, element: &[usize]) -> Option<&CspRecord> {
        self.records.iter().find(|r| r.element == element)
    }
}

impl fmt::Display for CspReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.kind, self.params)?;
        writeln!(f, "X = {}", self.polynomial)?;
        for r in &self.records {
            writeln!(
                f,
                "{} count={} eval={} {}",
                r.element_label(),
                r.count,
                r.eval,
                if r.matches { "ok" } else { "MISMATCH" }
            )?;
        }
        write!(f, "all_match: {}", self.all_match)
    }
}

pub fn csp_polynomial(kind: &CspKind) -> Result<MultiPoly> {
    csp_polynomial_with(kind, ORIENTATION)
}

/// The sieving polynomial of `kind`, with `K̃` tables built under `routing`.
pub fn csp_polynomial_with(kind: &CspKind, routing: StatRouting) -> Result<MultiPoly> {
    kind.validate()?;
    let (m, n) = kind.rect();
    let rect = qt_kostka_with(&Partition::rectangle(m, n), routing)?;
    let mut total = MultiPoly::zero();
    match kind {
        CspKind::Rect3 { .. } => {
            for (lambda, k) in rect.entries() {
                total += &(k * &fake_degree(lambda));
            }
        }
        CspKind::Content2 { nu, .. } => {
            for (lambda, k) in rect.entries() {
                total += &k.scale(&BigInt::from(kostka_number(lambda, nu)?));
            }
        }
        CspKind::Content3 { nu, .. } => {
            let hl = hl_kostka(nu)?;
            for ((lambda, k), (lambda2, h)) in rect.entries().iter().zip(&hl) {
                debug_assert_eq!(lambda, lambda2);
                total += &(k * h);
            }
        }
        CspKind::Perm4 { a, b, .. } => {
            let other = qt_kostka_with(&Partition::rectangle(*a, *b), routing)?;
            for ((_, k), (_, k2)) in rect.entries().iter().zip(other.entries()) {
                let zw = k2.rename(Var::Q, Var::Z).rename(Var::T, Var::W);
                total += &(k * &zw);
            }
        }
    }
    Ok(total)
}

pub fn verify_csp(kind: &CspKind, bound: usize) -> Result<CspReport> {
    verify_csp_with(kind, bound, ORIENTATION)
}

/// Compares fixed-point counts with polynomial evaluations for every element
/// of the acting group, in lexicographic order of the element tuple.
pub fn verify_csp_with(kind: &CspKind, bound: usize, routing: StatRouting) -> Result<CspReport> {
    kind.validate()?;
    let (m, n) = kind.rect();
    if m * n > bound {
        return Err(Error::SizeBound { size: m * n, bound });
    }
    let poly = csp_polynomial_with(kind, routing)?;
    let factors = kind.factors();
    let reduced = poly.reduce_exponents(
        &factors
            .iter()
            .map(|&(o, v)| (v, o as u32))
            .collect::<Vec<_>>(),
    );

    let counter: FixedCounter = match kind {
        CspKind::Rect3 { .. } => {
            let carrier = enumerate_matrices(n, m, &Composition::new(vec![1; m * n])?)?;
            Box::new(move |e| {
                matrix::count_fixed(&carrier, GroupElement3::new(e[0], e[1], e[2]), 1)
            })
        }
        CspKind::Content2 { nu, .. } => {
            let carrier = enumerate_matrices(n, m, nu)?;
            Box::new(move |e| matrix::count_fixed(&carrier, GroupElement3::new(e[0], e[1], 0), 1))
        }
        CspKind::Content3 { nu, a, .. } => {
            let carrier = enumerate_matrices(n, m, nu)?;
            let step = *a;
            Box::new(move |e| {
                matrix::count_fixed(&carrier, GroupElement3::new(e[0], e[1], e[2]), step)
            })
        }
        CspKind::Perm4 { a, b, .. } => {
            let carrier = all_permutations(m * n);
            let (a, b) = (*a, *b);
            Box::new(move |e| {
                perm::count_fixed(
                    &carrier,
                    GroupElement4::new(e[0], e[1], e[2], e[3]),
                    n,
                    m,
                    b,
                    a,
                )
            })
        }
    };

    let mut records = Vec::new();
    let mut element = vec![0usize; factors.len()];
    loop {
        let mut roots = RootAssignment::new();
        for (&(order, v), &e) in factors.iter().zip(&element) {
            roots = roots.bind(v, order as u32, e as i64)?;
        }
        let value = eval_in_ring(&reduced, &roots)?;
        let count = counter(&element);
        let (eval, matches) = match value.as_integer() {
            Some(v) => {
                let matches = v == BigInt::from(count);
                let eval = v
                    .to_i64()
                    .map_or_else(|| EvalValue::Text(v.to_string()), EvalValue::Int);
                (eval, matches)
            }
            None => (EvalValue::Text(value.to_string()), false),
        };
        records.push(CspRecord {
            element: element.clone(),
            count,
            eval,
            matches,
        });
        if !advance(&mut element, &factors) {
            break;
        }
    }
    let all_match = records.iter().all(|r| r.matches);
    Ok(CspReport {
        kind: kind.name().to_string(),
        params: kind.to_string(),
        polynomial: poly,
        records,
        all_match,
    })
}

/// Mixed-radix increment, last component fastest.
fn advance(element: &mut [usize], factors: &[(usize, Var)]) -> bool {
    for i in (0..element.len()).rev() {
        element[i] += 1;
        if element[i] < factors[i].0 {
            return true;
        }
        element[i] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::compositions_of;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn polynomial_examples() {
        let k = CspKind::Content3 {
            m: 2,
            n: 2,
            nu: c(&[2, 2]),
            a: 1,
        };
        let x = csp_polynomial(&k).unwrap();
        let reduced = x.reduce_exponents(&[(Var::Q, 2), (Var::T, 2), (Var::Z, 2)]);
        assert_eq!(reduced, poly("3 + q*z + t*z + q*t*z"));
        assert_eq!(
            csp_polynomial(&CspKind::Rect3 { m: 2, n: 1 }).unwrap(),
            poly("1 + t*z")
        );
        assert_eq!(
            csp_polynomial(&CspKind::Content2 {
                m: 2,
                n: 1,
                nu: c(&[2])
            })
            .unwrap(),
            MultiPoly::one()
        );
    }

    #[test]
    fn invalid_parameters() {
        let bad = CspKind::Content3 {
            m: 2,
            n: 2,
            nu: c(&[3, 1]),
            a: 1,
        };
        assert!(matches!(
            csp_polynomial(&bad),
            Err(Error::InvalidSymmetry { .. })
        ));
        let bad = CspKind::Perm4 {
            m: 2,
            n: 2,
            a: 3,
            b: 1,
        };
        assert!(csp_polynomial(&bad).is_err());
        let big = CspKind::Rect3 { m: 3, n: 3 };
        assert!(matches!(verify_csp(&big, 8), Err(Error::SizeBound { .. })));
    }

    #[test]
    fn worked_example_report() {
        let k = CspKind::Content3 {
            m: 2,
            n: 2,
            nu: c(&[2, 2]),
            a: 1,
        };
        let rep = verify_csp(&k, DEFAULT_SIZE_BOUND).unwrap();
        assert!(rep.all_match);
        assert_eq!(rep.records.len(), 8);
        assert_eq!(rep.record(&[0, 0, 0]).unwrap().count, 6);
        let r = rep.record(&[0, 1, 1]).unwrap();
        assert_eq!((r.count, &r.eval), (4, &EvalValue::Int(4)));
        let r = rep.record(&[0, 0, 1]).unwrap();
        assert_eq!((r.count, &r.eval), (0, &EvalValue::Int(0)));
    }

    #[test]
    fn small_reports() {
        let rep = verify_csp(&CspKind::Rect3 { m: 2, n: 1 }, 8).unwrap();
        assert!(rep.all_match);
        assert_eq!(rep.records.len(), 4);
        assert_eq!(rep.records[0].count, 2);
        let rep = verify_csp(
            &CspKind::Perm4 {
                m: 2,
                n: 2,
                a: 2,
                b: 2,
            },
            8,
        )
        .unwrap();
        assert!(rep.all_match);
        assert_eq!(rep.records.len(), 16);
        assert_eq!(rep.records[0].count, 24);
    }

    #[test]
    fn orientation_is_pinned_by_two_element_cases() {
        for (m, n) in [(2, 1), (1, 2)] {
            let k = CspKind::Rect3 { m, n };
            assert!(verify_csp_with(&k, 8, ORIENTATION).unwrap().all_match);
            assert!(
                !verify_csp_with(&k, 8, ORIENTATION.other())
                    .unwrap()
                    .all_match
            );
        }
    }

    #[test]
    fn burnside_orbit_counts() {
        for (m, n) in [(1, 3), (2, 2), (3, 1), (2, 3)] {
            for nu in compositions_of(m * n)
                .into_iter()
                .filter(|nu| nu.len() <= 4)
            {
                for a in symmetry_orders(&nu) {
                    let k = CspKind::Content3 {
                        m,
                        n,
                        nu: nu.clone(),
                        a,
                    };
                    let rep = verify_csp(&k, 8).unwrap();
                    let total: u64 = rep.records.iter().map(|r| r.count).sum();
                    assert_eq!(total % rep.records.len() as u64, 0, "{k}");
                    assert!(rep.all_match, "{k}");
                }
            }
        }
    }

    #[test]
    fn report_serializes() {
        let rep = verify_csp(&CspKind::Rect3 { m: 1, n: 2 }, 8).unwrap();
        assert_eq!(rep.records[0].element_label(), "(0,0,0)");
        assert!(rep.to_string().ends_with("all_match: true"));
    }
}
