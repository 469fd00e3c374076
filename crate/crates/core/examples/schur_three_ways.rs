//! A Schur polynomial from its determinant, its bialternant and its pattern
//! sum, plus skew Schur polynomials.
//!
//! ```bash
//! cargo run --example schur_three_ways
//! ```

use schurlab::genfunc::{h_plain, schur_bialt};
use schurlab::gp;
use schurlab::skew_schur::{schur_jt, skew_schur_gt, skew_schur_jt};

fn main() -> schurlab::Result<()> {
    println!("h_2(x1, x2) = {}", h_plain(2, 2));

    let la = gp![2, 1];
    let jt = schur_jt(&la, 3);
    let bialt = schur_bialt(&la, 3)?;
    let gt = skew_schur_gt(&la, &gp![], 3);
    println!("s_(2,1)(x1, x2, x3) = {jt}");
    assert_eq!(jt, bialt);
    assert_eq!(jt, gt);
    println!("determinant, bialternant and pattern sum agree");

    let skew = skew_schur_jt(&gp![2, 1], &gp![1], 2);
    assert_eq!(skew, skew_schur_gt(&gp![2, 1], &gp![1], 2));
    println!("s_(2,1)/(1)(x1, x2) = {skew}");
    println!("s_(3,1)/(2)(t) = {}", skew_schur_jt(&gp![3, 1], &gp![2], 1));
    Ok(())
}
