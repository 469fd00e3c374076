//! Restricting sp_λ and o_λ from n variables to n-k and k variables.
//!
//! ```bash
//! cargo run --example branching_rule
//! ```

use schurlab::gp;
use schurlab::identity::{check_branching_o, check_branching_sp};

fn main() -> schurlab::Result<()> {
    for la in [gp![1, 0], gp![2, 1, 0], gp![1, 1, 0]] {
        let n = la.len();
        for k in 1..n {
            let sp = check_branching_sp(&la, n, k)?;
            let o = check_branching_o(&la, n, k)?;
            println!(
                "λ = {la}, n = {n}, k = {k}: sp {}, o {}",
                if sp.passed { "holds" } else { "FAILS" },
                if o.passed { "holds" } else { "FAILS" }
            );
        }
    }
    let r = check_branching_sp(&gp![1, 0], 2, 1)?;
    println!("sp_(1,0)(x^±; y^±) = {}", r.lhs);
    Ok(())
}
