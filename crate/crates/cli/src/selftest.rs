//! Invariant suite behind `qtsieve selftest`.

use num_bigint::BigInt;
use qtsieve::combinatorics::{
    character_value, cocharge_kostka, compositions_of, factorial, fake_degree,
    kronecker_with_trivial, long_cycle_power_type, partitions_of, syt_count,
};
use qtsieve::csp::{symmetry_orders, verify_csp, CspKind};
use qtsieve::garsia_haiman::{gh_hilbert, HILBERT_BOUND};
use qtsieve::macdonald::{hl_kostka, qt_kostka};
use qtsieve::polyring::{eval_at_roots, MultiPoly, RootAssignment, Var};

pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<usize, String>;

pub fn run(max_n: usize) -> Vec<CheckResult> {
    let checks: [(&'static str, fn(usize) -> Outcome); 6] = [
        ("macdonald", macdonald),
        ("hall-littlewood", hall_littlewood),
        ("springer", springer),
        ("kronecker", kronecker),
        ("csp", csp),
        ("garsia-haiman", garsia_haiman),
    ];
    checks
        .iter()
        .map(|&(name, f)| match f(max_n) {
            Ok(cases) => CheckResult {
                name,
                passed: true,
                detail: format!("{cases} cases"),
            },
            Err(why) => CheckResult {
                name,
                passed: false,
                detail: why,
            },
        })
        .collect()
}

fn at_one(p: &MultiPoly) -> BigInt {
    p.eval_int(&[(Var::Q, 1), (Var::T, 1)])
}

fn macdonald(max_n: usize) -> Outcome {
    let mut cases = 0;
    for n in 1..=max_n {
        for mu in partitions_of(n) {
            let table = qt_kostka(&mu).map_err(|e| e.to_string())?;
            let conj = qt_kostka(&mu.conjugate()).map_err(|e| e.to_string())?;
            let mut total = BigInt::from(0);
            for (lambda, k) in table.entries() {
                let v = at_one(k);
                if v != BigInt::from(syt_count(lambda)) || !k.has_nonnegative_coefficients() {
                    return Err(format!("K({lambda},{mu}) = {k}"));
                }
                if conj.get(lambda) != Some(&k.swap(Var::Q, Var::T)) {
                    return Err(format!("conjugation symmetry at ({lambda},{mu})"));
                }
                total += v * syt_count(lambda);
                cases += 1;
            }
            if total != BigInt::from(factorial(n)) {
                return Err(format!("Σ K(1,1)·#SYT = {total} for {mu}"));
            }
        }
    }
    Ok(cases)
}

fn hall_littlewood(max_n: usize) -> Outcome {
    let mut cases = 0;
    for n in 1..=max_n {
        for nu in partitions_of(n) {
            for (lambda, h) in hl_kostka(&nu.to_composition()).map_err(|e| e.to_string())? {
                let oracle =
                    cocharge_kostka(&lambda, &nu.to_composition()).map_err(|e| e.to_string())?;
                if h != oracle {
                    return Err(format!("λ = {lambda}, ν = {nu}: {h} vs {oracle}"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn springer(max_n: usize) -> Outcome {
    let mut cases = 0;
    for n in 1..=max_n {
        for lambda in partitions_of(n) {
            let f = fake_degree(&lambda);
            for r in 0..n {
                let roots = RootAssignment::new()
                    .bind(Var::Z, n as u32, r as i64)
                    .map_err(|e| e.to_string())?;
                let v = eval_at_roots(&f, &roots).map_err(|e| e.to_string())?;
                let chi = character_value(&lambda, &long_cycle_power_type(n, r))
                    .map_err(|e| e.to_string())?;
                if v != BigInt::from(chi) {
                    return Err(format!("λ = {lambda}, r = {r}: {v} vs {chi}"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn kronecker(max_n: usize) -> Outcome {
    let mut cases = 0;
    for n in 1..=max_n.min(5) {
        for mu in partitions_of(n) {
            for nu in partitions_of(n) {
                let (num, den) = kronecker_with_trivial(&mu, &nu).map_err(|e| e.to_string())?;
                if num != den * i64::from(mu == nu) {
                    return Err(format!("g(μ = {mu}, ν = {nu}) = {num}/{den}"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn csp(max_n: usize) -> Outcome {
    let mut cases = 0;
    let mut check = |kind: CspKind| -> Result<(), String> {
        let rep = verify_csp(&kind, max_n).map_err(|e| e.to_string())?;
        if !rep.all_match {
            return Err(format!("{} {kind} mismatches", kind.name()));
        }
        cases += 1;
        Ok(())
    };
    for size in 1..=max_n {
        for m in (1..=size).filter(|m| size % m == 0) {
            let n = size / m;
            check(CspKind::Rect3 { m, n })?;
            for nu in compositions_of(size) {
                check(CspKind::Content2 {
                    m,
                    n,
                    nu: nu.clone(),
                })?;
                for a in symmetry_orders(&nu) {
                    check(CspKind::Content3 {
                        m,
                        n,
                        nu: nu.clone(),
                        a,
                    })?;
                }
            }
            for a in (1..=size).filter(|a| size % a == 0) {
                check(CspKind::Perm4 {
                    m,
                    n,
                    a,
                    b: size / a,
                })?;
            }
        }
    }
    Ok(cases)
}

fn garsia_haiman(max_n: usize) -> Outcome {
    let mut cases = 0;
    for n in 1..=max_n.min(HILBERT_BOUND) {
        for mu in partitions_of(n) {
            let h = gh_hilbert(&mu, HILBERT_BOUND).map_err(|e| e.to_string())?;
            if h.total() as u64 != factorial(n) {
                return Err(format!("dim H_{mu} = {}", h.total()));
            }
            let hc = gh_hilbert(&mu.conjugate(), HILBERT_BOUND).map_err(|e| e.to_string())?;
            if hc != h.swapped() {
                return Err(format!("conjugate of {mu} is not mirrored"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}
