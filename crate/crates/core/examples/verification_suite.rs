//! Running a bounded verification suite in parallel.
//!
//! The worker count follows the available cores, capped by
//! `SCHURLAB_THREADS`. Report order does not depend on it.
//!
//! ```bash
//! SCHURLAB_THREADS=4 cargo run --release --example verification_suite
//! ```

use std::collections::BTreeMap;

use schurlab::identity::{run_suite, worker_threads, SuiteBounds, SUITES};

fn main() -> schurlab::Result<()> {
    println!("{} worker threads", worker_threads());
    let bounds = SuiteBounds { max_weight: Some(3), max_nvars: Some(2), degree: Some(3) };
    for suite in SUITES {
        let reports = run_suite(suite, bounds)?;
        let mut by_id: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for r in &reports {
            let e = by_id.entry(r.identity_id.as_str()).or_default();
            e.0 += 1;
            e.1 += r.passed as usize;
        }
        println!("{suite}:");
        for (id, (total, passed)) in by_id {
            println!("  {id:<28} {passed}/{total}");
        }
    }
    if let Some(r) = run_suite("cauchy", bounds)?.first() {
        println!("sample report: {}", r.to_json_line());
    }
    Ok(())
}
