use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;

/// Solves `m·x = b` for a square integer matrix by Bareiss elimination.
/// Returns `None` when `m` is singular.
pub(crate) fn solve_integer(mut m: Vec<Vec<BigInt>>, mut b: Vec<BigInt>) -> Option<Vec<Rational>> {
    let n = m.len();
    debug_assert!(m.iter().all(|r| r.len() == n) && b.len() == n);
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, p);
        b.swap(k, p);
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for (off, row) in rest.iter_mut().enumerate() {
            let i = k + 1 + off;
            let f = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &f * &pivot_row[j];
                row[j] = v.div_floor(&prev);
            }
            let v = &b[i] * &pivot_row[k] - &f * &b[k];
            b[i] = v.div_floor(&prev);
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(b[i].clone());
        for j in i + 1..n {
            if !m[i][j].is_zero() {
                acc -= &x[j] * Rational::from_integer(m[i][j].clone());
            }
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    Some(x)
}
