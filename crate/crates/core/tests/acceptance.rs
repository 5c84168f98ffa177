//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Runs at the default claim bounds. `REPFACT_ACCEPTANCE_ONLY=4,6` restricts
//! the run to the listed criteria.

use std::process::ExitCode;
use std::time::Instant;

use repfact_core::claims::{run_claim, Params};
use repfact_core::factorize::{longest_factorization, shortest_factorization};
use repfact_core::{width_profile, Word};

type Check = fn() -> Result<String, String>;

fn claims(ids: &[&str]) -> Result<String, String> {
    let mut notes = Vec::new();
    for id in ids {
        let r = run_claim(id, &Params::new()).map_err(|e| format!("{id}: {e}"))?;
        if !r.passed() {
            let w = &r.witnesses[0];
            return Err(format!(
                "{id}: {} i={} n={}: {}",
                w.sequence, w.i, w.n, w.detail
            ));
        }
        notes.push(format!("{id}: {}", r.observations.join("; ")));
    }
    Ok(notes.join(" | "))
}

fn worked_example() -> Result<String, String> {
    let w = Word::from_text("aaaababa");
    let p = width_profile(&w).map_err(|e| e.to_string())?;
    let sf = shortest_factorization(&w).unwrap().unwrap();
    let lf = longest_factorization(&w).unwrap().unwrap();
    if p.sw != 2 || p.lw != 3 || p.total != 3u32.into() {
        return Err(format!("sw={} lw={} total={}", p.sw, p.lw, p.total));
    }
    if sf.cuts() != [0, 3, 8] || lf.cuts() != [0, 2, 4, 8] {
        return Err(format!("cuts {:?} / {:?}", sf.cuts(), lf.cuts()));
    }
    claims(&["worked-example"])
}

const CRITERIA: &[(u32, &str, Check)] = &[
    (1, "worked example aaaababa", worked_example),
    (
        2,
        "dynamic program vs brute force, binary words up to length 12",
        || claims(&["dp-oracle"]),
    ),
    (3, "Fibonacci factor width <= 3, prefix width <= 2", || {
        claims(&["fib-factor-bound", "fib-prefix-bound"])
    }),
    (
        4,
        "Thue-Morse width <= 7 with witnesses for widths 1-7",
        || claims(&["tm-width-bound"]),
    ),
    (5, "Thue-Morse factorizations are unique", || {
        claims(&["tm-uniqueness"])
    }),
    (
        6,
        "Thue-Morse width DFAO: 28 states, verified to 1024",
        || claims(&["tm-28-states"]),
    ),
    (7, "regular paperfolding width <= 10, attained", || {
        claims(&["rpf-width-bound"])
    }),
    (
        8,
        "paperfolding words: width <= 10, factorizable length <= 45",
        || claims(&["pf-length-bound"]),
    ),
    (
        9,
        "paperfolding dichotomy: widths <= 7 or a width 10",
        || claims(&["pf-dichotomy"]),
    ),
    (
        10,
        "Rudin-Shapiro capped acceptor: 23 states, induction, unbounded",
        || claims(&["rs-23-states"]),
    ),
    (11, "Zeckendorf round trip and bijection to 10^5", || {
        claims(&["zeckendorf-roundtrip"])
    }),
    (
        12,
        "minimization, equivalence and prioritized combine",
        || claims(&["automata-algebra"]),
    ),
];

fn main() -> ExitCode {
    let only: Option<Vec<u32>> = std::env::var("REPFACT_ACCEPTANCE_ONLY")
        .ok()
        .map(|s| s.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    let mut failed = 0;
    for &(k, name, check) in CRITERIA {
        if only.as_ref().is_some_and(|o| !o.contains(&k)) {
            continue;
        }
        let t = Instant::now();
        let result = check();
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {k:>2} {name} ({secs:.1}s) {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {k:>2} {name} ({secs:.1}s) {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
