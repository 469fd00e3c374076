//! Classical and skew Cauchy identities checked as truncated series.
//!
//! ```bash
//! cargo run --example cauchy_identities
//! ```

use schurlab::gp;
use schurlab::identity::{check_cauchy, check_skew_cauchy_bcd, check_skew_cauchy_schur, Family};

fn main() -> schurlab::Result<()> {
    for family in [Family::Schur, Family::Sp, Family::O] {
        for n in 1..=2 {
            let r = check_cauchy(family, n, 4)?;
            println!("{family} Cauchy, N = {n}, y-degree <= 4: {} ({:.1} ms)", r.passed, r.elapsed.as_secs_f64() * 1e3);
        }
    }

    let r = check_cauchy(Family::Sp, 1, 2)?;
    println!("sp, N = 1, degree 2: {}", r.lhs);

    for (la, mu) in [(gp![1], gp![]), (gp![1], gp![1]), (gp![2], gp![1, 1])] {
        let r = check_skew_cauchy_schur(&la, &mu, 1, 1, 4)?;
        println!("skew Schur Cauchy λ = {la}, μ = {mu}: {}", r.passed);
    }

    let z = gp![0, 0];
    let r = check_skew_cauchy_bcd(Family::Sp, &z, &z, 2, 2, 2)?;
    println!("skew sp Cauchy at λ = μ = (0,0): {}", r.passed);
    let r = check_skew_cauchy_bcd(Family::O, &gp![1, 0], &gp![1, 0], 1, 1, 3)?;
    println!("skew o Cauchy λ = μ = (1,0), N = K = 1: {}", r.passed);

    match check_skew_cauchy_bcd(Family::Sp, &gp![1], &gp![0], 1, 1, 2) {
        Ok(r) => println!("unexpectedly accepted: {}", r.passed),
        Err(e) => println!("λ = (1), μ = (0): {e}"),
    }
    Ok(())
}
