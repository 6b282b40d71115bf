//! End-to-end checks, one line per criterion. Runs without the libtest
//! harness so the lines are always printed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use strange_core::reproduce::{self, SuiteOptions, SuiteReport};
use strange_core::strange::ClassifyConfig;
use strange_core::Result;

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    run: fn(&SuiteOptions) -> Result<Vec<SuiteReport>>,
}

fn one(r: Result<SuiteReport>) -> Result<Vec<SuiteReport>> {
    r.map(|r| vec![r])
}

const CRITERIA: [Criterion; 12] = [
    Criterion {
        name: "borel index, meander and monte-carlo, n=2..10",
        limit: Some(Duration::from_secs(5)),
        run: |o| one(reproduce::borel_indices(10, o)),
    },
    Criterion {
        name: "frobenius parabolic dimensions, n=6 and n=9",
        limit: Some(Duration::from_secs(30)),
        run: |_| Ok(vec![reproduce::frobenius_dims(6)?, reproduce::frobenius_dims(9)?]),
    },
    Criterion {
        name: "power-orbit complements, n<=10",
        limit: Some(Duration::from_secs(60)),
        run: |_| one(reproduce::power_complements(10)),
    },
    Criterion {
        name: "two-part flags, n=4..12",
        limit: None,
        run: |_| one(reproduce::two_part_flags(12)),
    },
    Criterion {
        name: "three-part flags, n=6..11 and sl_9 (5,2,2)",
        limit: None,
        run: |_| one(reproduce::three_part_flags(11)),
    },
    Criterion {
        name: "surveys n=3..6",
        limit: Some(Duration::from_secs(120)),
        run: |o| {
            let cfg = ClassifyConfig {
                seed: o.seed,
                ..ClassifyConfig::default()
            };
            one(reproduce::small_surveys(&cfg))
        },
    },
    Criterion {
        name: "index bound on 100 random pairs, n<=6",
        limit: None,
        run: |o| one(reproduce::index_bound(100, 6, o)),
    },
    Criterion {
        name: "centralizer indices, n<=7",
        limit: None,
        run: |o| one(reproduce::centralizer_indices(None, 7, o)),
    },
    Criterion {
        name: "principal sheets, n<=8",
        limit: None,
        run: |o| one(reproduce::principal_sheets(8, o)),
    },
    Criterion {
        name: "minimal frobenius parabolics, n=3..7",
        limit: None,
        run: |o| one(reproduce::minimal_frobenius(7, o)),
    },
    Criterion {
        name: "meander vs monte-carlo on 200 random seaweeds, n<=7",
        limit: None,
        run: |o| one(reproduce::cross_engine(200, 7, o)),
    },
    Criterion {
        name: "partition identities, n<=12",
        limit: None,
        run: |_| one(reproduce::structural(12)),
    },
];

fn main() -> ExitCode {
    let opts = SuiteOptions::default();
    let mut all = true;
    for (i, c) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)(&opts);
        let elapsed = start.elapsed();
        let (pass, detail) = match &outcome {
            Ok(reports) => {
                let failed: Vec<String> = reports
                    .iter()
                    .flat_map(|r| r.items.iter().filter(|it| !it.pass))
                    .map(|it| format!("{}: {}", it.label, it.detail))
                    .collect();
                let items: usize = reports.iter().map(|r| r.items.len()).sum();
                let in_time = c.limit.is_none_or(|l| elapsed <= l);
                let mut detail = format!("{items} items");
                if !failed.is_empty() {
                    detail = format!("{} failed: {}", failed.len(), failed.join(" | "));
                }
                if !in_time {
                    detail.push_str(&format!("; over time limit {:?}", c.limit.unwrap()));
                }
                (failed.is_empty() && in_time, detail)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        all &= pass;
        let mark = if pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {mark} [{:.2?}] {} ({detail})", i + 1, elapsed, c.name);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
