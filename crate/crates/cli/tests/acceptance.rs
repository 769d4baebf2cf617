//! One PASS/FAIL line per acceptance criterion. Every comparison is exact:
//! a check passes only when its difference polynomial is zero. Runs
//! sequentially to bound memory; exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use unproj_core::ring::SubstitutionDocument;
use unproj_core::specs;
use unproj_core::verify::{
    check_bigcheck, check_grading, run_suite, sl3_matrices, CheckReport, Perturbation, Suite, SL3_SAMPLES,
};

const BIGCHECK_LIMIT: Duration = Duration::from_secs(60);
const BIG_DIAGRAM_LIMIT: Duration = Duration::from_secs(300);
const DIAGRAM_N_MAX: usize = 5;
const SEED: u64 = 0;

type Outcome = Result<String, String>;

fn all_pass(reports: &[CheckReport]) -> Outcome {
    match reports.iter().find(|r| !r.passed()) {
        Some(r) => Err(r.to_text(true)),
        None if reports.is_empty() => Err("no reports".into()),
        None => Ok(format!("{} checks", reports.len())),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let out = f()?;
    let took = start.elapsed();
    if took > limit {
        return Err(format!("{out}, took {:.2} s, limit {} s", took.as_secs_f64(), limit.as_secs()));
    }
    Ok(format!("{out}, {:.2} s (limit {} s)", took.as_secs_f64(), limit.as_secs()))
}

fn bigcheck() -> Outcome {
    timed(BIGCHECK_LIMIT, || all_pass(&[check_bigcheck()]))
}

fn reid() -> Outcome {
    all_pass(&run_suite(Suite::Reid, 2, SEED))
}

fn big_diagram() -> Outcome {
    timed(BIG_DIAGRAM_LIMIT, || {
        let reports = run_suite(Suite::BigDiagram, DIAGRAM_N_MAX, SEED);
        // p ranges over 2..n for each n in 3..=5
        if reports.len() != 1 + 2 + 3 {
            return Err(format!("expected 6 (n, p) pairs, got {}", reports.len()));
        }
        all_pass(&reports)
    })
}

fn basic_formula() -> Outcome {
    let reports: Vec<CheckReport> = run_suite(Suite::BasicFormula, DIAGRAM_N_MAX, SEED)
        .into_iter()
        .filter(|r| r.params.get("n").and_then(|v| v.as_u64()).is_some_and(|n| n >= 3))
        .collect();
    // (p, q) with p + q <= min(n, 4): 3 pairs at n = 3, 6 at n = 4 and 5
    if reports.len() != 3 + 6 + 6 {
        return Err(format!("expected 15 (n, p, q) triples, got {}", reports.len()));
    }
    all_pass(&reports)
}

fn sl3() -> Outcome {
    let samples = sl3_matrices(SEED);
    let products = samples.len() - 2;
    if products < SL3_SAMPLES {
        return Err(format!("only {products} seeded products"));
    }
    let ok = all_pass(&run_suite(Suite::Sl3, 3, SEED))?;
    let rejected = Perturbation::DeterminantMinusOne.control();
    if !rejected.passed() {
        return Err(rejected.to_text(true));
    }
    Ok(format!("{ok}, {products} seeded products, det -1 rejected"))
}

fn complexes() -> Outcome {
    let mut reports = Vec::new();
    for s in [Suite::KoszulD2, Suite::Anticommutation, Suite::PhiComplex, Suite::BinomialRp] {
        reports.extend(run_suite(s, 2, SEED));
    }
    all_pass(&reports)
}

fn grading() -> Outcome {
    let report = check_grading(3).map_err(|e| e.to_string())?;
    all_pass(std::slice::from_ref(&report))?;
    let want = "degrees f1:5 f2:5 l1:6 l2:6 l3:6 l4:5 l5:5 l6:5 q:8";
    if !report.notes.iter().any(|n| n == want) {
        return Err(format!("n = 3 degrees {:?}", report.notes));
    }
    let doc = SubstitutionDocument::from_json(specs::ALTINOK_X12_14).map_err(|e| e.to_string())?;
    let (spec, g) = doc.build().map_err(|e| e.to_string())?;
    let g = g.ok_or("no declared grading")?;
    let t = spec.target();
    let weight = |name: &str| t.position(name).map(|i| g.weight_of(i));
    if (weight("s0"), weight("s1")) != (Some(8), Some(9)) {
        return Err(format!("deg s0 = {:?}, deg s1 = {:?}", weight("s0"), weight("s1")));
    }
    let specs_ok = all_pass(&run_suite(Suite::Grading, 3, SEED))?;
    Ok(format!("{want}; deg s0 = 8, deg s1 = 9; {specs_ok}"))
}

fn eta() -> Outcome {
    let reports = run_suite(Suite::Eta, 6, SEED);
    if reports.len() != 5 {
        return Err(format!("expected n = 2..=6, got {} reports", reports.len()));
    }
    all_pass(&reports)
}

fn appendix_parity() -> Outcome {
    use common::m2::Session;
    let listing = std::fs::read_to_string(common::fixture("appendix_n3.m2")).map_err(|e| e.to_string())?;
    let reference = Session::run(&listing)?;
    let out = common::unproj(&["export-cas", "--n", "3", "--dialect", "cas-script-A"]);
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    let exported = Session::run(&common::stdout(&out))?;
    let (ring, degrees) = reference.ring("S")?;
    if exported.ring("S")?.1 != degrees {
        return Err("ring degrees differ".into());
    }
    let (theirs, ours) = (reference.ideal("IY")?, exported.ideal("IY")?);
    if theirs.len() != ours.len() {
        return Err(format!("{} generators in the listing, {} exported", theirs.len(), ours.len()));
    }
    for (k, (a, b)) in ours.iter().zip(&theirs).enumerate() {
        let a = a.with_table(&ring).map_err(|e| e.to_string())?;
        if a != *b {
            let diff = &a - b;
            return Err(format!("generator {} differs in {} terms", k + 1, diff.len()));
        }
    }
    Ok(format!("{} generators identical", ours.len()))
}

fn negative_controls() -> Outcome {
    let reports: Vec<CheckReport> = [Perturbation::SigmaSignFlip, Perturbation::DropFactorTwo, Perturbation::PerturbedTp]
        .into_iter()
        .map(Perturbation::control)
        .collect();
    all_pass(&reports)?;
    Ok(reports.iter().flat_map(|r| r.notes.iter().cloned()).collect::<Vec<_>>().join("; "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("bigcheck identity", bigcheck),
        ("Reid n = 2 consistency", reid),
        ("big diagram, 3 <= n <= 5", big_diagram),
        ("basic formula, p + q <= 4", basic_formula),
        ("SL3 invariance", sl3),
        ("complexes and binomial identities", complexes),
        ("grading", grading),
        ("eta, 2 <= n <= 6", eta),
        ("appendix parity", appendix_parity),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
