//! Dense Gaussian elimination over an exact field.

use crate::field::Field;

/// One solution of `a * x = b` (free variables set to zero), or `None` if
/// the system is inconsistent. `a` is row-major with `cols` columns.
pub fn solve<K: Field>(field: &K, a: &[Vec<K::Elem>], b: &[K::Elem], cols: usize) -> Option<Vec<K::Elem>> {
    let rows = a.len();
    let mut m: Vec<Vec<K::Elem>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = field.inv(&m[r][c]).expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for i in 0..rows {
            if i != r && !field.is_zero(&m[i][c]) {
                let factor = m[i][c].clone();
                #[allow(clippy::needless_range_loop)]
                for j in c..=cols {
                    let t = field.mul(&factor, &m[r][j]);
                    m[i][j] = field.sub(&m[i][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !field.is_zero(&row[cols])) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

/// Determinant of a square matrix.
pub fn determinant<K: Field>(field: &K, a: &[Vec<K::Elem>]) -> K::Elem {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !field.is_zero(&m[i][c])) else {
            return field.zero();
        };
        if pr != c {
            m.swap(pr, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &m[c][c]);
        let inv = field.inv(&m[c][c]).expect("nonzero pivot");
        for i in c + 1..n {
            let factor = field.mul(&m[i][c], &inv);
            #[allow(clippy::needless_range_loop)]
            for j in c..n {
                let t = field.mul(&factor, &m[c][j]);
                m[i][j] = field.sub(&m[i][j], &t);
            }
        }
    }
    det
}
