//! Acceptance criteria 1-8, each timed against its budget.
//! Prints one PASS/FAIL line per criterion; exits nonzero on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use knotsurf::fixtures;
use knotsurf::fpgroup::{abelianization, Presentation};
use knotsurf::obstruct::{check_remark_rp2_split, check_theorem, Conclusion, IndecomposabilityCertificate};
use knotsurf::pretzel::PretzelKnot;
use knotsurf::seifert::SeifertInvariants;
use knotsurf_cli::report::{Section, Status};
use knotsurf_cli::verify::{self, corollary_from, Fixtures};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0xacce_9700;

type Outcome = Result<String, String>;

fn expect(s: &Section, pairs: &[(&str, &str)]) -> Outcome {
    if s.status != Status::Pass {
        return Err(format!("section `{}` is {}: {:?}", s.title, s.status, s.notes));
    }
    for (k, v) in pairs {
        match s.get(k) {
            Some(got) if got == *v => {}
            got => return Err(format!("{k} = {got:?}, expected {v}")),
        }
    }
    Ok(pairs
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" "))
}

fn c1() -> Outcome {
    let s = verify::triangle_arithmetic(&Fixtures::default());
    expect(
        &s,
        &[
            ("betti", "0"),
            ("torsion", "[]"),
            ("deficiency", "-1"),
            ("b2_upper_bound", "1"),
        ],
    )
}

fn c2() -> Outcome {
    let s = verify::hurwitz_quotient(&Fixtures::default(), 100_000);
    expect(
        &s,
        &[
            ("coset_index", "168"),
            ("permutation_closure_order", "168"),
            ("table_valid", "true"),
        ],
    )
}

fn c3() -> Outcome {
    let s = verify::klein_quartic(&Fixtures::default());
    expect(
        &s,
        &[
            ("two_generator.index", "168"),
            ("two_generator.table_valid", "true"),
            ("two_generator.kernel_betti", "6"),
            ("two_generator.kernel_torsion", "[]"),
            ("three_generator.index", "168"),
            ("three_generator.kernel_betti", "6"),
            ("three_generator.kernel_torsion", "[]"),
        ],
    )
}

fn c4() -> Outcome {
    let s = verify::seifert_pipeline(&Fixtures::default());
    expect(
        &s,
        &[
            ("triangle_237_match", "true"),
            ("h1_order", "1"),
            ("euler_number", "-1/42"),
        ],
    )
}

fn c5() -> Outcome {
    let s = verify::pretzel_cross_check(&Fixtures::default());
    let out = expect(
        &s,
        &[
            ("det_goeritz", "1"),
            ("det_formula", "1"),
            ("double_branched_cover", "S2(0; 1/2, -1/3, -1/7)"),
            ("sweep_exceptions", "0"),
        ],
    )?;
    Ok(format!("{out} checked={}", s.get("sweep_checked").unwrap_or("?")))
}

fn c6() -> Outcome {
    let f = Fixtures::default();
    let s = verify::theorem(&f, 10);
    let mut pairs = Vec::new();
    for l in 1..=5 {
        for kind in ["torus", "klein"] {
            pairs.push((format!("l{l}.{kind}.conclusion"), "stably irreducible".to_string()));
        }
    }
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect();
    expect(&s, &refs)?;
    // line-by-line re-evaluation, independent of the section's own replay
    let mut lines = 0;
    for l in 1..=5 {
        for orientable in [true, false] {
            let spec = corollary_from(&f, l, orientable)?;
            let v = check_theorem(&spec.as_ribbon_double().ok_or("not a ribbon double")?, 10);
            for (i, line) in v.trace.lines().iter().enumerate() {
                if !line.check.evaluate() {
                    return Err(format!(
                        "l={l} orientable={orientable}: line {} fails: {}",
                        i + 1,
                        line.statement
                    ));
                }
                lines += 1;
            }
        }
    }
    Ok(format!(
        "10 surfaces stably irreducible, {lines} trace lines re-evaluated, {} objects Hopf-consistent",
        s.get("hopf_consistent_objects").unwrap_or("?")
    ))
}

fn c7() -> Outcome {
    let f = Fixtures::default();
    let p = verify::proposition(&f);
    expect(&p, &[])?;
    let chain = p.get("l1.torus.chain").unwrap_or_default().to_string();
    let r = verify::remark(&f);
    expect(
        &r,
        &[
            ("with_certificate", "does not split as RP2 # RP2"),
            ("trace_lines", "5"),
            ("without_certificate", "inconclusive: no indecomposability certificate"),
        ],
    )?;
    // certificate for a different group must not be accepted
    let spec = corollary_from(&f, 1, false)?;
    let wrong = IndecomposabilityCertificate {
        group: Presentation::parse(fixtures::TRIANGLE_237_TWO_GENERATOR).map_err(|e| e.to_string())?,
        citation: "wrong group".into(),
    };
    let v = check_remark_rp2_split(&spec, Some(&wrong)).map_err(|e| e.to_string())?;
    if !matches!(v.conclusion, Conclusion::Inconclusive(_)) {
        return Err(format!("mismatched certificate gave {}", v.conclusion));
    }
    Ok(format!("chain `{chain}`; splitting trace has 5 steps; uncertified inconclusive"))
}

fn c8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    let matrices = 1000;
    for _ in 0..matrices {
        if let Some(e) = common::smith_disagreement(&common::random_matrix(&mut rng)) {
            return Err(format!("SNF oracle: {e}"));
        }
    }

    let mut tables = 0;
    for _ in 0..400 {
        let (t, order) = common::random_table(&mut rng);
        t.validate().map_err(|e| format!("coset table invalid: {e:?}"))?;
        if let Some(n) = order {
            if n % t.index() != 0 {
                return Err(format!("index {} does not divide {n}", t.index()));
            }
        }
        tables += 1;
    }

    let (mut forms, mut jacobi) = (0, 0);
    while forms < 250 || jacobi < 200 {
        if common::signature_trial(&mut rng)? {
            jacobi += 1;
        }
        forms += 1;
        if forms > 5000 {
            return Err(format!("only {jacobi} forms reached the minor oracle"));
        }
    }

    let spaces = 300;
    for _ in 0..spaces {
        let y = common::random_seifert(&mut rng);
        let mut z = y.clone();
        for _ in 0..rng.gen_range(1..=4) {
            if z.fibers().is_empty() {
                break;
            }
            let i = rng.gen_range(0..z.fibers().len());
            z = z.shift_fiber(i);
        }
        if z.euler_number() != y.euler_number() || z.h1_order() != y.h1_order() {
            return Err(format!("{y} and {z} disagree"));
        }
        if abelianization(&z.pi1_presentation()) != abelianization(&y.pi1_presentation()) {
            return Err(format!("{y} and {z} have different H1"));
        }
    }

    let trips = round_trips(&mut rng)?;
    Ok(format!(
        "{matrices} SNF, {tables} tables, {forms} forms ({jacobi} by minors), {spaces} Seifert moves, {trips} CLI round trips"
    ))
}

fn round_trips(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut n = 0;
    for _ in 0..100 {
        let text = common::random_presentation(rng);
        let (m, _) = common::machine(&["group", "abelianize", &text]);
        let printed = common::fact(&m, "presentation");
        let p = Presentation::parse(printed).map_err(|e| format!("{printed}: {e}"))?;
        if p != Presentation::parse(&text).map_err(|e| e.to_string())? {
            return Err(format!("{text} printed as {printed}"));
        }
        let y = common::random_seifert(rng);
        let (m, _) = common::machine(&["seifert", "euler", &y.to_string()]);
        let back = SeifertInvariants::parse(common::fact(&m, "space")).map_err(|e| e.to_string())?;
        let e: BigRational = common::fact(&m, "euler_number").parse().map_err(|_| "euler parse")?;
        if back != y || e != y.euler_number() {
            return Err(format!("{y} round trip"));
        }
        let k = PretzelKnot::new(common::random_pretzel(rng)).map_err(|e| e.to_string())?;
        let (m, _) = common::machine(&["pretzel", "det", &k.to_string()]);
        let det: num_bigint::BigInt = common::fact(&m, "determinant").parse().map_err(|_| "det parse")?;
        if PretzelKnot::parse(common::fact(&m, "knot")).ok() != Some(k.clone()) || det != k.determinant() {
            return Err(format!("{k} round trip"));
        }
        n += 3;
    }
    let (m, _) = common::machine(&["paper-verify", "--sweep", "2"]);
    for (key, value) in &m {
        if key.ends_with(".presentation") {
            Presentation::parse(value).map_err(|e| format!("{key}: {e}"))?;
            n += 1;
        } else if key.ends_with(".space") || key.ends_with(".double_branched_cover") {
            SeifertInvariants::parse(value).map_err(|e| format!("{key}: {e}"))?;
            n += 1;
        } else if key.ends_with(".euler_number") {
            value.parse::<BigRational>().map_err(|_| format!("{key}: {value}"))?;
            n += 1;
        }
    }
    Ok(n)
}

fn main() -> ExitCode {
    type Criterion = (&'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("triangle-group arithmetic", 100, c1),
        ("Hurwitz quotient closes at 168", 2_000, c2),
        ("Klein-quartic kernel abelianizes to Z^6", 30_000, c3),
        ("Seifert pipeline", 100, c4),
        ("pretzel cross-check", 10_000, c5),
        ("stable irreducibility of #l S, l = 1..5", 5_000, c6),
        ("2-knot obstruction and RP2 # RP2 splitting", 1_000, c7),
        ("randomized property suites", 60_000, c8),
    ];
    let mut failed = 0;
    for (i, (name, budget_ms, run)) in criteria.iter().enumerate() {
        let budget = Duration::from_millis(*budget_ms);
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(detail) if elapsed <= budget => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("over budget; {detail}")),
            Err(e) => ("FAIL", e),
        };
        if verdict.0 == "FAIL" {
            failed += 1;
        }
        println!(
            "{} criterion {}: {name} ({:.3} s / {:.1} s) {}",
            verdict.0,
            i + 1,
            elapsed.as_secs_f64(),
            budget.as_secs_f64(),
            verdict.1
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
