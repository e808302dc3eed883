//! Smith normal form over the integers with arbitrary-precision entries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Invariant factors d_1 | d_2 | … of an integer matrix, one per diagonal
/// position (`min(rows, cols)` entries, zeros last). Only unimodular row and
/// column operations are used.
pub fn smith_normal_form(matrix: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let diag_len = rows.min(cols);

    for t in 0..diag_len {
        loop {
            // smallest nonzero pivot in the trailing block
            let mut pivot: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, v) in row.iter().enumerate().skip(t) {
                    if !v.is_zero() && pivot.is_none_or(|(pi, pj)| v.abs() < a[pi][pj].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return finish(a, diag_len);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (top, bottom) = a.split_at_mut(i);
                for (x, p) in bottom[0][t..].iter_mut().zip(&top[t][t..]) {
                    *x -= &q * p;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let delta = &q * &row[t];
                    row[j] -= delta;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold a violating row into the pivot row and retry
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    let (top, bottom) = a.split_at_mut(i);
                    for (x, v) in top[t][t..].iter_mut().zip(&bottom[0][t..]) {
                        *x += v;
                    }
                }
                None => break,
            }
        }
    }
    finish(a, diag_len)
}

fn finish(a: Vec<Vec<BigInt>>, diag_len: usize) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = (0..diag_len).map(|i| a[i][i].abs()).collect();
    // zeros go last; nonzero entries already form a divisibility chain
    d.sort_by(|x, y| match (x.is_zero(), y.is_zero()) {
        (true, false) => std::cmp::Ordering::Greater,
        (false, true) => std::cmp::Ordering::Less,
        _ => std::cmp::Ordering::Equal,
    });
    d
}

/// Convenience wrapper for machine-integer input.
pub fn smith_normal_form_i64(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    smith_normal_form(&m)
}
