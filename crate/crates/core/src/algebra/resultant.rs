//! Resultants via fraction-free (Bareiss) elimination of the Sylvester matrix.

use thiserror::Error;

use super::multipoly::MultiPoly;
use super::var::Var;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResultantError {
    #[error("input has degree zero in {0}")]
    DegreeZero(Var),
}

pub fn sylvester(f: &MultiPoly, g: &MultiPoly, v: Var) -> Vec<Vec<MultiPoly>> {
    let m = f.degree(v) as usize;
    let n = g.degree(v) as usize;
    let fc = f.coefficients_in(v);
    let gc = g.coefficients_in(v);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![MultiPoly::zero(); size];
        for (k, c) in fc.iter().enumerate() {
            row[i + m - k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![MultiPoly::zero(); size];
        for (k, c) in gc.iter().enumerate() {
            row[i + n - k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant of a square matrix over ℚ[vars], fraction-free.
pub fn determinant(mut a: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = a.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut sign = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return MultiPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = MultiPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Resultant of `f` and `g` with respect to `v`.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, v: Var) -> Result<MultiPoly, ResultantError> {
    if f.degree(v) == 0 || g.degree(v) == 0 {
        return Err(ResultantError::DegreeZero(v));
    }
    Ok(determinant(sylvester(f, g, v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> MultiPoly {
        MultiPoly::var(x)
    }
    fn c(n: i64) -> MultiPoly {
        MultiPoly::int(n)
    }

    #[test]
    fn res_y2_minus_z_and_y_minus_1() {
        // Sylvester [[1,0,-z],[1,-1,0],[0,1,-1]] has determinant 1 - z
        let y = v(Var::Y);
        let z = v(Var::Z);
        let r = resultant(&(&y.pow(2) - &z), &(&y - &c(1)), Var::Y).unwrap();
        assert_eq!(r, &c(1) - &z);
    }

    #[test]
    fn res_linear_linear() {
        let y = v(Var::Y);
        let (a, b) = (v(Var::U), v(Var::V));
        let r = resultant(&(&y - &a), &(&y - &b), Var::Y).unwrap();
        let d = &a - &b;
        assert!(r == d || r == -&d);
    }

    #[test]
    fn res_x2_plus_1_x2_minus_1() {
        // 4x4 Sylvester determinant by cofactor expansion gives 4
        let x = v(Var::X);
        let r = resultant(&(&x.pow(2) + &c(1)), &(&x.pow(2) - &c(1)), Var::X).unwrap();
        assert_eq!(r, c(4));
    }

    #[test]
    fn degree_zero_rejected() {
        assert_eq!(
            resultant(&c(3), &v(Var::X), Var::X),
            Err(ResultantError::DegreeZero(Var::X))
        );
    }
}
