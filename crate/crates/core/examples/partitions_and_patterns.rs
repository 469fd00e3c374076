//! Generalized partitions, interlacing and Gelfand–Tsetlin chains.
//!
//! ```bash
//! cargo run --example partitions_and_patterns
//! ```

use schurlab::gp;
use schurlab::partition::{contains, enumerate_between, enumerate_gt_chains, interlaces, partitions_up_to};

fn main() -> schurlab::Result<()> {
    let (nu, la) = (gp![2], gp![3, 1]);
    println!("{nu} ≺ {la}: {}", interlaces(&nu, &la));
    println!("{} ⊂ {}: {}", gp![3], gp![2, 2], contains(&gp![3], &gp![2, 2]));
    println!("(2,1) == (2,1,0): {}", gp![2, 1] == gp![2, 1, 0]);

    let between = enumerate_between(&gp![1], &gp![2, 1], 2);
    println!("(1) ≺ α ≺ (2,1): {:?}", between.iter().map(|a| a.to_string()).collect::<Vec<_>>());

    let chains = enumerate_gt_chains(&gp![1], &gp![2, 1, 0], 2)?;
    println!("{} symplectic patterns from (1) to (2,1,0):", chains.len());
    for c in &chains {
        let steps: Vec<String> = c.steps.iter().map(|z| z.to_string()).collect();
        println!("  {}", steps.join(" ≺ "));
    }

    let small = partitions_up_to(2, 3);
    println!("partitions with at most 2 parts and weight <= 3: {}", small.len());
    println!("json: {}", serde_json::to_string(&gp![2, 1, 0]).unwrap());
    Ok(())
}
