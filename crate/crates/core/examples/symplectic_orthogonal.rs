//! Symplectic and orthogonal Schur functions, straight and skew.
//!
//! ```bash
//! cargo run --example symplectic_orthogonal
//! ```

use schurlab::genfunc::{h_sympl, o_bialt, sp_bialt};
use schurlab::gp;
use schurlab::skew_bcd::{o_jt, o_single_var, skew_o_gt, skew_o_jt, skew_sp_gt, skew_sp_jt, sp_jt, sp_single_var};

fn main() -> schurlab::Result<()> {
    println!("h_2(x^±) in one variable = {}", h_sympl(2, 1));

    let la = gp![1, 1];
    let sp = sp_jt(&la, 2)?;
    assert_eq!(sp, sp_bialt(&la, 2)?);
    println!("sp_(1,1)(x1^±, x2^±) = {sp}");

    let o = o_jt(&la, 2)?;
    assert_eq!(o, o_bialt(&la, 2)?);
    println!("o_(1,1)(x1^±, x2^±) = {o}");

    // Skew functions need len λ = len μ + N exactly.
    let (la, mu) = (gp![2, 1, 0], gp![1]);
    let skew_sp = skew_sp_jt(&la, &mu, 2)?;
    assert_eq!(skew_sp, skew_sp_gt(&la, &mu, 2)?);
    println!("sp_(2,1,0)/(1) in 2 variables = {skew_sp}");

    let skew_o = skew_o_jt(&la, &mu, 2)?;
    assert_eq!(skew_o, skew_o_gt(&la, &mu, 2)?);
    println!("o_(2,1,0)/(1) in 2 variables = {skew_o}");

    if let Err(e) = skew_sp_jt(&gp![3, 1], &gp![2], 2) {
        println!("sp_(3,1)/(2) in 2 variables: {e}");
    }

    let (la, nu) = (gp![2, 1], gp![1]);
    println!("sp_(2,1)/(1)(t^±) = {}", sp_single_var(&la, &nu)?);
    println!("o_(2,1)/(1)(t^±) = {}", o_single_var(&la, &nu)?);

    let padded = skew_sp_jt(&gp![2, 1, 1, 0], &gp![1, 0], 2)?;
    let plain = skew_sp_jt(&gp![2, 1, 1], &gp![1], 2)?;
    println!("trailing zeros matter: {}", padded != plain);
    Ok(())
}
