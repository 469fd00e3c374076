//! Sparse Laurent polynomials with exact rational coefficients.
//!
//! ```bash
//! cargo run --example laurent_arithmetic
//! ```

use schurlab::laurent::{det, LaurentPoly};

fn main() -> schurlab::Result<()> {
    let x = LaurentPoly::var(2, 0);
    let x_inv = LaurentPoly::var_pow(2, 0, -1);
    let y = LaurentPoly::var(2, 1);

    let a = &x - &x_inv;
    let b = &x + &x_inv;
    let prod = &a * &b;
    println!("({a}) * ({b}) = {prod}");
    println!("({prod}) / ({a}) = {}", prod.exact_div(&a)?);

    let lopsided = &LaurentPoly::var_pow(2, 0, 2) + &LaurentPoly::one(2);
    match lopsided.exact_div(&(&x + &LaurentPoly::one(2))) {
        Ok(q) => println!("unexpected quotient {q}"),
        Err(e) => println!("({lopsided}) / (x1 + 1): {e}"),
    }

    println!("invert x1 in {prod}: {}", prod.invert_vars(&[0]));

    let series = &(&LaurentPoly::one(2) + &y) + &(&y * &y);
    println!("truncate {series} at y-degree 1: {}", series.truncate(&[1], 1)?);

    let m = vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]];
    println!("det [[x1, x2], [x2, x1]] = {}", det(&m, 2)?);

    println!("json: {}", b.to_json());
    let back = LaurentPoly::from_json(&b.to_json())?;
    assert_eq!(back, b);
    Ok(())
}
