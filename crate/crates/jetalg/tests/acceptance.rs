//! Acceptance suite: each criterion runs through the `jetalg` binary at the
//! default ranges and prints one PASS/FAIL line. Exact rational equality
//! throughout; a single counterexample fails the criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use jetalg::Report;

type Criterion = (&'static str, fn() -> Result<String, String>);

const BUDGET: Duration = Duration::from_secs(60);

struct Run {
    code: Option<i32>,
    stdout: String,
    elapsed: Duration,
}

fn jetalg(args: &[&str]) -> Run {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_jetalg")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code(),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        elapsed: start.elapsed(),
    }
}

fn verify(args: &[&str]) -> Result<(Report, Run), String> {
    let mut full = vec!["verify"];
    full.extend_from_slice(args);
    let run = jetalg(&full);
    let report: Report = serde_json::from_str(&run.stdout).map_err(|e| format!("bad report: {}", e))?;
    if run.elapsed >= BUDGET {
        return Err(format!("took {:?}", run.elapsed));
    }
    Ok((report, run))
}

/// A check that must pass with no failures and exit 0.
fn clean(check: &str, min_cases: usize) -> Result<String, String> {
    let (r, run) = verify(&[check])?;
    if run.code != Some(0) || !r.pass || !r.failures.is_empty() {
        let first = r.failures.first().map(|f| f.key.as_str()).unwrap_or("-");
        return Err(format!("exit {:?}, {} failures, first: {}", run.code, r.failures.len(), first));
    }
    if r.cases < min_cases {
        return Err(format!("only {} cases", r.cases));
    }
    Ok(format!("{} cases, 0 failures, {} ms", r.cases, r.elapsed_ms))
}

fn jet_axioms() -> Result<String, String> {
    let params = [
        ("1/2", "0", "poly"),
        ("1/2", "0", "laurent"),
        ("1/2", "0", "quotient"),
        ("0", "1/3", "laurent"),
        ("2", "0", "poly"),
        ("2", "0", "laurent"),
        ("2", "0", "quotient"),
    ];
    let mut total = 0;
    let mut runs = 0;
    for (a1, a2, variant) in params {
        for rep in ["natural", "adjoint"] {
            let (r, run) = verify(&["jet-axioms", "--a1", a1, "--a2", a2, "--variant", variant, "--rep", rep])?;
            if run.code != Some(0) || !r.pass || r.cases == 0 {
                let first = r.failures.first().map(|f| f.key.as_str()).unwrap_or("-");
                return Err(format!("a=({},{}) {} {}: {} failures, first: {}", a1, a2, variant, rep, r.failures.len(), first));
            }
            total += r.cases;
            runs += 1;
        }
    }
    Ok(format!("{} module configurations, {} cases, 0 failures", runs, total))
}

fn negative_control() -> Result<String, String> {
    let (r, run) = verify(&["negative-control"])?;
    if r.pass || r.failures.is_empty() {
        return Err("corrupted module passed every axiom".into());
    }
    if !r.failures.iter().any(|f| f.key.starts_with("bracket")) {
        return Err("no bracket-axiom failure".into());
    }
    if run.code != Some(0) {
        return Err(format!("exit {:?}", run.code));
    }
    Ok(format!("{} counterexamples in report, exit 0 as designed", r.failures.len()))
}

fn without_elapsed(json: &str) -> String {
    json.lines().filter(|l| !l.trim_start().starts_with("\"elapsed_ms\"")).collect::<Vec<_>>().join("\n")
}

fn determinism() -> Result<String, String> {
    let one = jetalg(&["report", "--all", "--jobs", "1"]);
    let eight = jetalg(&["report", "--all", "--jobs", "8"]);
    for run in [&one, &eight] {
        if run.code != Some(0) {
            return Err(format!("report exited {:?}", run.code));
        }
    }
    let reports: Vec<Report> = serde_json::from_str(&one.stdout).map_err(|e| e.to_string())?;
    if let Some(slow) = reports.iter().find(|r| r.elapsed_ms >= BUDGET.as_millis() as u64) {
        return Err(format!("{} took {} ms", slow.check, slow.elapsed_ms));
    }
    if without_elapsed(&one.stdout) != without_elapsed(&eight.stdout) {
        return Err("reports differ between --jobs 1 and --jobs 8".into());
    }
    Ok(format!(
        "{} reports byte-identical; {:.1}s and {:.1}s",
        reports.len(),
        one.elapsed.as_secs_f64(),
        eight.elapsed.as_secs_f64()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("weyl-assoc", || clean("weyl-assoc", 500)),
        ("lemma-3.1", || clean("lemma-3.1", 1)),
        ("lemma-3.2", || {
            let msg = clean("lemma-3.2", 1)?;
            let (r, _) = verify(&["lemma-3.2"])?;
            if r.cases != 3 * 7 * 7 * 4 * 4 {
                return Err(format!("{} cases, expected {}", r.cases, 3 * 7 * 7 * 4 * 4));
            }
            Ok(msg)
        }),
        ("lemma-3.3", || clean("lemma-3.3", 1)),
        ("lemma-3.4", || clean("lemma-3.4", 1)),
        ("gl2-lift", || clean("gl2-lift", 1)),
        ("thm-2.3-hom", || clean("thm-2.3-hom", 1)),
        ("lemma-4.2-roundtrip", || clean("lemma-4.2-roundtrip", 1)),
        ("jet-axioms", jet_axioms),
        ("negative-control", negative_control),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} {:<20} PASS  {}", i + 1, name, detail),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {:<20} FAIL  {}", i + 1, name, why);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
