//! Acceptance run: one line per criterion, exit status 1 if any fails.

use std::time::{Duration, Instant};

use heckesym::intertwiners::{
    verify_braided_relation, verify_conjugate_equations, verify_conjugate_equations_numeric, verify_lemma51,
    verify_lemma54, IndexSet,
};
use heckesym::markov::{gram_positive_definite, gram_rank};
use heckesym::model::{
    check_selfadjointness, epsilon_rep, image_algebra_dimension, selfadjoint_residual, verify_permutation_recovery,
    ModelPoint,
};
use heckesym::report::{VerificationReport, Witness};
use heckesym::scalar::lambda_d_at;
use heckesym::special::{build_a, verify_alpha_symmetrizer, verify_b_equals_a, verify_lemma21};
use heckesym::suites::{hecke_axioms, markov_oracle, run_suite, Grid, Suite};
use heckesym::young::predicted_image_dim;
use heckesym::Result;
use num_rational::BigRational;

const NILPOTENT_TOL: f64 = 1e-10;
const PROP44_TOL: f64 = 1e-10;
const NOT_SELFADJOINT_FLOOR: f64 = 1e-2;
const CONJUGATE_TOL: f64 = 1e-12;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn check(id: &str, ok: bool, term: impl Into<String>, residual: impl Into<String>) -> VerificationReport {
    let r = VerificationReport::new(id);
    if ok {
        r.pass()
    } else {
        r.fail(Witness::new(term, residual))
    }
}

fn grid(d: &[usize], n: &[usize]) -> Grid {
    Grid {
        d: d.to_vec(),
        n: n.to_vec(),
        ..Grid::default()
    }
}

fn c1() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.extend(hecke_axioms(n)?);
    }
    Ok(out)
}

fn c2() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.extend(verify_lemma21(n)?);
    }
    Ok(out)
}

fn c3() -> Result<Vec<VerificationReport>> {
    (1..=5).map(verify_b_equals_a).collect()
}

fn c4() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for k in 1..=5 {
        out.push(verify_alpha_symmetrizer(k, k)?);
        out.push(verify_alpha_symmetrizer(k, 5)?);
    }
    Ok(out)
}

fn c5() -> Result<Vec<VerificationReport>> {
    let g = Grid {
        tolerance: NILPOTENT_TOL,
        ..Grid::default()
    };
    run_suite(Suite::Cor22, &g)
}

fn c6() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for d in 1..=3usize {
        for n in d + 1..=5 {
            let top = epsilon_rep(&build_a(d as i32 + 1, n)?, d).is_zero();
            let below = epsilon_rep(&build_a(d as i32, n)?, d).is_zero();
            let label = format!("d={} n={}", d, n);
            out.push(check("kernel-top", top, format!("eps(A_{}) {}", d + 1, label), "nonzero"));
            out.push(check("kernel-below", !below, format!("eps(A_{}) {}", d, label), "zero"));
        }
    }
    Ok(out)
}

fn c7() -> Result<Vec<VerificationReport>> {
    let q0 = int(2);
    let mut cases: Vec<(usize, usize)> = (1..=5).flat_map(|n| [(n, 2), (n, 3)]).collect();
    cases.push((4, 4));
    let mut out = Vec::new();
    for (n, d) in cases {
        let got = image_algebra_dimension(n, d, &q0)?;
        let want = predicted_image_dim(n, d);
        out.push(check("image-dim", got as u128 == want, format!("n={} d={}", n, d), format!("{} != {}", got, want)));
    }
    let pinned = [((3, 2), 5), ((4, 2), 14), ((4, 3), 23), ((4, 4), 24)];
    for ((n, d), want) in pinned {
        let got = image_algebra_dimension(n, d, &q0)?;
        out.push(check("image-dim-pinned", got == want, format!("n={} d={}", n, d), got.to_string()));
    }
    Ok(out)
}

fn c8() -> Result<Vec<VerificationReport>> {
    let q0 = int(2);
    let mut out = Vec::new();
    for d in 2..=3 {
        for n in 1..=4 {
            out.extend(markov_oracle(n, d)?);
        }
        let lambda = lambda_d_at(-(d as i32), &q0)?;
        for n in 1..=5 {
            let rank = gram_rank(n, &lambda, &q0);
            let want = predicted_image_dim(n, d);
            out.push(check("gram-rank", rank as u128 == want, format!("n={} d={}", n, d), rank.to_string()));
        }
    }
    let half = BigRational::new(1.into(), 2.into());
    for n in 1..=4 {
        let factorial: usize = (1..=n).product();
        let ok = gram_positive_definite(n, &half, &q0) && gram_rank(n, &half, &q0) == factorial;
        out.push(check("gram-positive", ok, format!("n={}", n), "not positive definite of full rank"));
    }
    Ok(out)
}

fn c9() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for d in 2..=3 {
        for mu in [BigRational::new(3.into(), 2.into()), int(2)] {
            out.push(check_selfadjointness(d, &ModelPoint::Rational(mu), 0.0)?);
        }
        let (term, residual) = selfadjoint_residual(d, &ModelPoint::RootOfUnity(5))?;
        out.push(check("not-selfadjoint", residual > NOT_SELFADJOINT_FLOOR, term, format!("{:e}", residual)));
    }
    for (d, m) in [(2, 4), (2, 5), (3, 5)] {
        out.push(verify_permutation_recovery(d, &ModelPoint::RootOfUnity(m), PROP44_TOL)?);
    }
    Ok(out)
}

fn c10() -> Result<Vec<VerificationReport>> {
    let mut out = run_suite(Suite::Lemma51, &grid(&[1, 2, 3], &[1]))?;
    out.extend(run_suite(Suite::Lemma54, &grid(&[1, 2, 3], &[1]))?);
    out.extend(run_suite(Suite::Lemma56, &grid(&[2, 3, 4], &[1]))?);
    let full = IndexSet::full(4);
    out.extend(verify_lemma51(4, &full)?);
    out.extend(verify_lemma54(4, &full)?);
    Ok(out)
}

fn c11() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for d in 1..=3 {
        for idx in IndexSet::all(d) {
            out.extend(verify_conjugate_equations(d, &idx)?);
            out.push(verify_conjugate_equations_numeric(d, &idx, CONJUGATE_TOL)?);
        }
    }
    Ok(out)
}

fn c12() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for d in 2..=4 {
        out.extend(verify_braided_relation(d)?);
    }
    Ok(out)
}

fn c13() -> Result<Vec<VerificationReport>> {
    run_suite(Suite::SpecialObject, &grid(&[2, 3], &[1]))
}

type Criterion = (&'static str, &'static str, u64, fn() -> Result<Vec<VerificationReport>>);

fn main() {
    let criteria: [Criterion; 13] = [
        ("hecke axioms, n <= 6", "exact", 5, c1),
        ("symmetrizer identities a/b/c/e, 2 <= n <= 5", "exact", 30, c2),
        ("B_n = A_n, n <= 5", "exact", 30, c3),
        ("alpha(A_k) = q^{k(k-1)/2} A_{-k}, k <= 5", "exact", 30, c4),
        ("nilpotency at e^{i pi/m}, m = 3..6", "1e-10", 5, c5),
        ("model kernel boundary, d <= 3, n <= 5", "exact", 30, c6),
        ("image dimensions at q0 = 2", "exact", 60, c7),
        ("trace oracle, Gram ranks, positivity", "exact", 60, c8),
        ("selfadjointness and |q| = 1 flip recovery", "1e-10 / >1e-2", 5, c9),
        ("determinant identities, d <= 3 all idx, d = 4 full", "exact", 90, c10),
        ("conjugate equations, cleared and numeric", "exact / 1e-12", 30, c11),
        ("braided relation and independence, d = 2..4", "exact", 30, c12),
        ("special object checker", "exact", 10, c13),
    ];
    let mut failures = 0;
    for (k, (label, tol, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        let (ok, line) = match outcome {
            Err(e) => (false, format!("error: {}", e)),
            Ok(reports) => {
                let bad: Vec<&VerificationReport> = reports.iter().filter(|r| !r.is_ok()).collect();
                let skipped = reports.iter().filter(|r| r.is_ok() && !r.passed()).count();
                if reports.is_empty() {
                    (false, "no checks ran".to_string())
                } else if let Some(r) = bad.first() {
                    let w = r.witness.as_ref().map(|w| format!("{} = {}", w.term, w.residual)).unwrap_or_default();
                    (false, format!("{} of {} checks failed, first {}: {}", bad.len(), reports.len(), r.check_id, w))
                } else if over {
                    (false, format!("{} checks, over budget", reports.len()))
                } else if skipped > 0 {
                    (true, format!("{} checks ({} not applicable)", reports.len(), skipped))
                } else {
                    (true, format!("{} checks", reports.len()))
                }
            }
        };
        if !ok {
            failures += 1;
        }
        println!(
            "{} {:>2}  {:<52} tol {:<14} {:>8.1} ms / {:>3} s  {}",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            label,
            tol,
            elapsed.as_secs_f64() * 1e3,
            budget,
            line
        );
    }
    println!("{} of 13 criteria passed", 13 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
