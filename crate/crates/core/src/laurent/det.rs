use std::collections::HashMap;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Largest size evaluated by cofactor expansion; bigger matrices use
/// fraction-free elimination.
pub const COFACTOR_MAX: usize = 6;

fn check_square(rows: &[Vec<LaurentPoly>], arity: usize) -> Result<()> {
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NonSquare { rows: n, row: i, cols: row.len() });
        }
        for p in row {
            if p.arity() != arity {
                return Err(Error::ArityMismatch { left: arity, right: p.arity() });
            }
        }
    }
    Ok(())
}

/// Exact determinant of a square matrix over the Laurent ring of the given
/// arity. The empty matrix has determinant 1.
pub fn det(rows: &[Vec<LaurentPoly>], arity: usize) -> Result<LaurentPoly> {
    if rows.len() <= COFACTOR_MAX {
        det_cofactor(rows, arity)
    } else {
        det_bareiss(rows, arity)
    }
}

/// Cofactor expansion, memoized over the set of columns already used by the
/// rows above. Division free.
pub fn det_cofactor(rows: &[Vec<LaurentPoly>], arity: usize) -> Result<LaurentPoly> {
    check_square(rows, arity)?;
    let n = rows.len();
    assert!(n < usize::BITS as usize, "matrix too large for cofactor expansion");
    let mut layer: HashMap<usize, LaurentPoly> = HashMap::new();
    layer.insert(0, LaurentPoly::one(arity));
    for row in rows {
        let mut next: HashMap<usize, LaurentPoly> = HashMap::new();
        for (mask, partial) in &layer {
            for (col, entry) in row.iter().enumerate() {
                if mask & (1 << col) != 0 || entry.is_zero() {
                    continue;
                }
                // Columns already used to the right of `col` are inversions.
                let inversions = (mask >> (col + 1)).count_ones();
                let mut term = partial * entry;
                if inversions % 2 == 1 {
                    term = -term;
                }
                next.entry(mask | (1 << col))
                    .and_modify(|acc| acc.add_assign_checked(&term).expect("same arity"))
                    .or_insert(term);
            }
        }
        next.retain(|_, v| !v.is_zero());
        layer = next;
        if layer.is_empty() {
            return Ok(LaurentPoly::zero(arity));
        }
    }
    Ok(layer.remove(&((1usize << n) - 1)).unwrap_or_else(|| LaurentPoly::zero(arity)))
}

/// Bareiss fraction-free elimination using exact division.
pub fn det_bareiss(rows: &[Vec<LaurentPoly>], arity: usize) -> Result<LaurentPoly> {
    check_square(rows, arity)?;
    let n = rows.len();
    if n == 0 {
        return Ok(LaurentPoly::one(arity));
    }
    let mut m: Vec<Vec<LaurentPoly>> = rows.to_vec();
    let mut negate = false;
    let mut prev = LaurentPoly::one(arity);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(LaurentPoly::zero(arity)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(arity: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(arity, i)
    }

    #[test]
    fn small_examples() {
        let p = &v(1, 0) + &LaurentPoly::var_pow(1, 0, -3);
        assert_eq!(det(&[vec![p.clone()]], 1).unwrap(), p);

        let id: Vec<Vec<LaurentPoly>> = (0..3)
            .map(|i| (0..3).map(|j| LaurentPoly::from_int(1, (i == j) as i64)).collect())
            .collect();
        assert!(det(&id, 1).unwrap().is_one());

        let (a, b, c, d) = (v(4, 0), v(4, 1), v(4, 2), v(4, 3));
        let m = vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]];
        assert_eq!(det(&m, 4).unwrap(), &(&a * &d) - &(&b * &c));
        assert!(det(&[], 2).unwrap().is_one());
    }

    #[test]
    fn non_square_is_rejected() {
        let m = vec![vec![LaurentPoly::one(1), LaurentPoly::one(1)], vec![LaurentPoly::one(1)]];
        assert_eq!(det(&m, 1), Err(Error::NonSquare { rows: 2, row: 1, cols: 1 }));
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let z = LaurentPoly::zero(1);
        let one = LaurentPoly::one(1);
        let x = v(1, 0);
        let m = vec![
            vec![z.clone(), one.clone(), z.clone()],
            vec![x.clone(), z.clone(), one.clone()],
            vec![one.clone(), x.clone(), z.clone()],
        ];
        assert_eq!(det_bareiss(&m, 1).unwrap(), det_cofactor(&m, 1).unwrap());
    }
}
