//! Acceptance suite. Runs every criterion, prints one line each, and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use qtsieve::combinatorics::{
    character_value, cocharge_kostka, compositions_of, factorial, fake_degree,
    kronecker_with_trivial, long_cycle_power_type, partitions_of, syt_count, Composition,
    Partition,
};
use qtsieve::csp::{
    csp_polynomial, enumerate_matrices, fixed_point_count, symmetry_orders, verify_csp,
    verify_csp_with, CspKind, GroupElement3,
};
use qtsieve::garsia_haiman::{gh_crosscheck, gh_hilbert, Orientation, HILBERT_BOUND};
use qtsieve::macdonald::{hl_kostka, qt_kostka, ORIENTATION};
use qtsieve::polyring::{eval_at_roots, MultiPoly, RootAssignment, Var};

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn run_csp(kind: &CspKind, routing: Option<qtsieve::macdonald::StatRouting>) -> Result<(), String> {
    let rep = match routing {
        Some(r) => verify_csp_with(kind, 8, r),
        None => verify_csp(kind, 8),
    }
    .map_err(|e| format!("{} {kind}: {e}", kind.name()))?;
    if rep.all_match {
        return Ok(());
    }
    let bad = rep.records.iter().find(|r| !r.matches).unwrap();
    Err(format!(
        "{} {kind}: {} count {} eval {}",
        kind.name(),
        bad.element_label(),
        bad.count,
        bad.eval
    ))
}

fn worked_example() -> Check {
    let nu = comp(&[2, 2]);
    let carrier = enumerate_matrices(2, 2, &nu).map_err(|e| e.to_string())?;
    ensure(carrier.len() == 6, || format!("{} matrices", carrier.len()))?;
    let fp = |g| fixed_point_count(2, 2, &nu, 1, g).unwrap();
    ensure(fp(GroupElement3::new(0, 1, 1)) == 4, || {
        "fixed points of (0,1,1)".into()
    })?;
    ensure(fp(GroupElement3::new(0, 0, 1)) == 0, || {
        "fixed points of (0,0,1)".into()
    })?;
    let kind = CspKind::Content3 {
        m: 2,
        n: 2,
        nu: nu.clone(),
        a: 1,
    };
    let x = csp_polynomial(&kind).map_err(|e| e.to_string())?;
    let reduced = x.reduce_exponents(&[(Var::Q, 2), (Var::T, 2), (Var::Z, 2)]);
    let expected: MultiPoly = "3 + q*z + t*z + q*t*z".parse().unwrap();
    ensure(reduced == expected, || {
        format!("reduced polynomial {reduced}")
    })?;
    let at = |q, t, z| x.eval_int(&[(Var::Q, q), (Var::T, t), (Var::Z, z)]);
    ensure(at(-1, 1, -1) == BigInt::from(4), || "X(-1,1,-1)".into())?;
    ensure(at(1, 1, -1) == BigInt::from(0), || "X(1,1,-1)".into())?;
    run_csp(&kind, None)?;
    Ok(format!("X = {x} ≡ {reduced}"))
}

fn rect_sieving() -> Check {
    let sizes = [(1, 2), (2, 1), (2, 2), (3, 2), (2, 3), (6, 1), (1, 6)];
    let mut reports = 0;
    for (m, n) in sizes {
        run_csp(&CspKind::Rect3 { m, n }, None)?;
        reports += 1;
        for nu in partitions_of(m * n) {
            run_csp(
                &CspKind::Content2 {
                    m,
                    n,
                    nu: nu.to_composition(),
                },
                None,
            )?;
            reports += 1;
        }
    }
    Ok(format!("{reports} reports, all elements match"))
}

fn content_sieving() -> Check {
    let mut reports = 0;
    for size in 1..=6 {
        for m in (1..=size).filter(|m| size % m == 0) {
            let n = size / m;
            for nu in compositions_of(size).into_iter().filter(|nu| nu.len() <= 6) {
                for a in symmetry_orders(&nu) {
                    run_csp(
                        &CspKind::Content3 {
                            m,
                            n,
                            nu: nu.clone(),
                            a,
                        },
                        None,
                    )?;
                    reports += 1;
                }
            }
        }
    }
    Ok(format!("{reports} reports, all elements match"))
}

fn perm_sieving() -> Check {
    let mut reports = 0;
    for l in [4usize, 6] {
        let factors: Vec<(usize, usize)> =
            (1..=l).filter(|d| l % d == 0).map(|d| (d, l / d)).collect();
        for &(m, n) in &factors {
            for &(a, b) in &factors {
                run_csp(&CspKind::Perm4 { m, n, a, b }, None)?;
                reports += 1;
            }
        }
    }
    Ok(format!("{reports} factorization pairs, all elements match"))
}

fn macdonald_invariants() -> Check {
    let mut tables = 0;
    for n in 1..=6 {
        for mu in partitions_of(n) {
            let table = qt_kostka(&mu).map_err(|e| e.to_string())?;
            let conj = qt_kostka(&mu.conjugate()).map_err(|e| e.to_string())?;
            for (lambda, k) in table.entries() {
                let at_one = k.eval_int(&[(Var::Q, 1), (Var::T, 1)]);
                ensure(at_one == BigInt::from(syt_count(lambda)), || {
                    format!("K({lambda},{mu})(1,1) = {at_one}")
                })?;
                ensure(k.has_nonnegative_coefficients(), || {
                    format!("K({lambda},{mu}) = {k} has a negative coefficient")
                })?;
                let other = conj.get(lambda).unwrap();
                ensure(*k == other.swap(Var::Q, Var::T), || {
                    format!("conjugation symmetry fails at ({lambda},{mu})")
                })?;
            }
            let row = table.get(&Partition::row(n)).unwrap();
            ensure(*row == MultiPoly::one(), || format!("K((n),{mu}) = {row}"))?;
            ensure(
                table
                    .entries()
                    .iter()
                    .map(|(l, k)| k.eval_int(&[(Var::Q, 1), (Var::T, 1)]) * syt_count(l))
                    .sum::<BigInt>()
                    == BigInt::from(factorial(n)),
                || format!("Σ K(1,1)·#SYT ≠ {n}! for {mu}"),
            )?;
            tables += 1;
        }
    }
    Ok(format!("{tables} tables"))
}

fn hall_littlewood() -> Check {
    let mut pairs = 0;
    for n in 1..=6 {
        for nu in partitions_of(n) {
            let hl = hl_kostka(&nu.to_composition()).map_err(|e| e.to_string())?;
            for (lambda, h) in hl {
                let oracle = cocharge_kostka(&lambda, &nu.to_composition()).unwrap();
                ensure(h == oracle, || {
                    format!("λ = {lambda}, ν = {nu}: {h} vs cocharge {oracle}")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn springer() -> Check {
    let mut cases = 0;
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            let f = fake_degree(&lambda);
            for r in 0..n {
                let roots = RootAssignment::new()
                    .bind(Var::Z, n as u32, r as i64)
                    .map_err(|e| e.to_string())?;
                let value = eval_at_roots(&f, &roots).map_err(|e| e.to_string())?;
                let chi = character_value(&lambda, &long_cycle_power_type(n, r)).unwrap();
                ensure(value == BigInt::from(chi), || {
                    format!("λ = {lambda}, r = {r}: f(ζ^r) = {value}, χ = {chi}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (λ, r) pairs"))
}

fn proposition_trivial() -> Check {
    let mut pairs = 0;
    for n in 1..=5 {
        for mu in partitions_of(n) {
            for nu in partitions_of(n) {
                let (num, den) = kronecker_with_trivial(&mu, &nu).unwrap();
                ensure(num % den == 0, || format!("{num}/{den} not integral"))?;
                let expected = i64::from(mu == nu);
                ensure(num / den == expected, || {
                    format!("g(μ = {mu}, ν = {nu}) = {}", num / den)
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn garsia_haiman() -> Check {
    let mut seen: Option<Orientation> = None;
    let mut count = 0;
    for n in 1..=HILBERT_BOUND {
        for mu in partitions_of(n) {
            let h = gh_hilbert(&mu, HILBERT_BOUND).map_err(|e| e.to_string())?;
            ensure(h.total() as u64 == factorial(n), || {
                format!("dim H_{mu} = {}", h.total())
            })?;
            let rec = gh_crosscheck(&mu, HILBERT_BOUND).map_err(|e| e.to_string())?;
            if let Some(prev) = seen {
                ensure(prev.compatible(rec.orientation), || {
                    format!("μ = {mu} matched {} after {prev}", rec.orientation)
                })?;
            }
            if rec.orientation != Orientation::Both {
                seen = Some(rec.orientation);
            }
            count += 1;
        }
    }
    let label = seen.map_or("both".to_string(), |o| o.to_string());
    Ok(format!("{count} shapes, orientation {label}"))
}

fn calibration() -> Check {
    for (m, n) in [(2, 1), (1, 2)] {
        let kind = CspKind::Rect3 { m, n };
        run_csp(&kind, Some(ORIENTATION))
            .map_err(|e| format!("configured orientation {ORIENTATION:?} fails: {e}"))?;
        ensure(run_csp(&kind, Some(ORIENTATION.other())).is_err(), || {
            format!("{:?} also passes at (m,n) = ({m},{n})", ORIENTATION.other())
        })?;
    }
    let k = qt_kostka(&Partition::row(2)).unwrap();
    let t = MultiPoly::var(Var::T);
    ensure(k.get(&Partition::column(2)) == Some(&t), || {
        "K((1,1),(2)) is not t".into()
    })?;
    Ok(format!(
        "{ORIENTATION:?} passes, {:?} fails",
        ORIENTATION.other()
    ))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Check, u64); 10] = [
        (1, "worked example m=n=2, ν=(2,2), a=1", worked_example, 1),
        (2, "rectangle triCSP and content biCSP", rect_sieving, 60),
        (3, "content triCSP, mn ≤ 6", content_sieving, 300),
        (4, "permutation quadraCSP, l ∈ {4,6}", perm_sieving, 120),
        (5, "Macdonald invariants, n ≤ 6", macdonald_invariants, 120),
        (
            6,
            "Hall–Littlewood equals cocharge, n ≤ 6",
            hall_littlewood,
            120,
        ),
        (7, "fake degree at roots equals χ(c^r), n ≤ 6", springer, 60),
        (
            8,
            "Kronecker with trivial is δ, n ≤ 5",
            proposition_trivial,
            60,
        ),
        (
            9,
            "Garsia–Haiman dimension and Hilbert series, n ≤ 4",
            garsia_haiman,
            60,
        ),
        (10, "(q,t) orientation calibration", calibration, 60),
    ];
    let mut failed = 0;
    for (id, name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(limit);
        match (&result, within) {
            (Ok(detail), true) => {
                println!("[PASS] criterion {id}: {name} ({detail}; {elapsed:.2?})")
            }
            (Ok(detail), false) => {
                failed += 1;
                println!("[FAIL] criterion {id}: {name} ({detail}; {elapsed:.2?} exceeds {limit}s)")
            }
            (Err(why), _) => {
                failed += 1;
                println!("[FAIL] criterion {id}: {name}: {why} ({elapsed:.2?})")
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 10 criteria fail");
        ExitCode::FAILURE
    }
}
