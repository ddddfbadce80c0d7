//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Exits nonzero only when a criterion fails for a reason other than the
//! known unattainable claims listed in `KNOWN_UNATTAINABLE`.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clustered::harness::{run_suite, Claim, Status, SuiteConfig, SuiteReport, SUITES};

/// Claims that cannot hold as stated, with the reason.
const KNOWN_UNATTAINABLE: &[(&str, &str)] = &[(
    "fatpath-c1",
    "the fat path on 2c-1 = 1 vertices is K_1, which is 1-colourable",
)];

struct Criterion {
    number: usize,
    title: &'static str,
    suite: &'static str,
    /// Only claims whose id starts with this prefix count.
    prefix: &'static str,
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "threshold triad", suite: "thresholds", prefix: "" },
    Criterion { number: 2, title: "ternary lower bound", suite: "ternary", prefix: "" },
    Criterion { number: 3, title: "weak closure minors", suite: "weakstrong", prefix: "" },
    Criterion { number: 4, title: "layered colouring bound", suite: "heart", prefix: "" },
    Criterion { number: 5, title: "two-colouring end to end", suite: "twocolour", prefix: "" },
    Criterion { number: 6, title: "extremal family lower bound", suite: "rainbow", prefix: "" },
    Criterion { number: 7, title: "extremal family structure", suite: "appendix", prefix: "" },
    Criterion { number: 8, title: "oracle consistency", suite: "oracles", prefix: "oracle-" },
    Criterion { number: 9, title: "hitting-set oracle", suite: "oracles", prefix: "erdos-posa" },
];

fn known(id: &str) -> Option<&'static str> {
    KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == id).map(|(_, why)| *why)
}

fn main() -> ExitCode {
    let config = SuiteConfig::default();
    let mut reports: BTreeMap<&str, SuiteReport> = BTreeMap::new();
    let mut seconds: BTreeMap<&str, f64> = BTreeMap::new();
    for (name, _) in SUITES {
        let start = Instant::now();
        let report = run_suite(name, &config).expect("known suite");
        seconds.insert(name, start.elapsed().as_secs_f64());
        reports.insert(name, report);
    }

    let mut unexpected = 0;
    for crit in CRITERIA {
        let claims: Vec<&Claim> =
            reports[crit.suite].claims.iter().filter(|c| c.id.starts_with(crit.prefix)).collect();
        let bad: Vec<&Claim> = claims.iter().copied().filter(|c| c.status != Status::Pass).collect();
        let verdict = if claims.is_empty() || !bad.is_empty() { "FAIL" } else { "PASS" };
        println!(
            "criterion {:>2} {verdict} {} ({} claims, suite {} in {:.2}s)",
            crit.number,
            crit.title,
            claims.len(),
            crit.suite,
            seconds[crit.suite]
        );
        for c in bad {
            match (c.status, known(&c.id)) {
                (Status::Fail, Some(why)) => println!("    {} fail (known: {why})", c.id),
                (status, _) => {
                    unexpected += 1;
                    println!("    {} {:?}: {}", c.id, status, c.observed);
                }
            }
        }
        if claims.is_empty() {
            unexpected += 1;
        }
    }

    let mut differing = Vec::new();
    for (name, _) in SUITES {
        let again = run_suite(name, &config).expect("known suite");
        if again.claims_json() != reports[name].claims_json() {
            differing.push(*name);
        }
    }
    let verdict = if differing.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion 10 {verdict} determinism ({} suites rerun)", SUITES.len());
    for name in &differing {
        println!("    suite {name} changed between runs");
    }
    unexpected += differing.len();

    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
