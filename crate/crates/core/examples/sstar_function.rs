//! The rational function S*_{λ/μ}(y) that pairs with skew symplectic and
//! orthogonal functions.
//!
//! ```bash
//! cargo run --example sstar_function
//! ```

use schurlab::gp;
use schurlab::skew_bcd::sstar;
use schurlab::skew_schur::schur_jt;

fn main() -> schurlab::Result<()> {
    let y = ["y1".to_string(), "y2".to_string()];

    let s = sstar(&gp![2, 1], &gp![], 2)?;
    println!("S*_(2,1)/∅(y1, y2) = {}", s.to_poly().unwrap().display_with(&y));
    assert_eq!(s.to_poly().unwrap(), schur_jt(&gp![2, 1], 2));

    let s = sstar(&gp![2, 1, 0], &gp![1], 2)?;
    // The Vandermonde always divides here, so S* comes back as a polynomial.
    println!("S*_(2,1,0)/(1)(y1, y2) = {}", s.to_poly().unwrap().display_with(&y));
    assert_eq!(s, sstar(&gp![2, 1, 0, 0], &gp![1, 0], 2)?);

    let s = sstar(&gp![1, 1, 1], &gp![0], 2)?;
    println!("S*_(1,1,1)/(0)(y1, y2) = {}", s.to_poly().unwrap().display_with(&y));
    Ok(())
}
