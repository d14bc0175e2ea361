//! Exact dense elimination over Gaussian rationals.

use crate::scalar::{GaussRat, Scalar};

/// Reduced row echelon form of a row-major `rows x cols` matrix; returns the
/// reduced rows (nonzero only) and the pivot columns.
#[allow(clippy::needless_range_loop)]
pub fn rref(rows: usize, cols: usize, data: &[GaussRat]) -> (Vec<Vec<GaussRat>>, Vec<usize>) {
    assert_eq!(data.len(), rows * cols);
    let mut m: Vec<Vec<GaussRat>> = data.chunks(cols.max(1)).take(rows).map(|r| r.to_vec()).collect();
    if cols == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = GaussRat::one() / m[r][c].clone();
        for v in m[r][c..].iter_mut() {
            if !v.is_zero() {
                *v = v.clone() * inv.clone();
            }
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                if m[r][j].is_zero() {
                    continue;
                }
                let v = m[i][j].clone() - f.clone() * m[r][j].clone();
                m[i][j] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: usize, cols: usize, data: &[GaussRat]) -> usize {
    rref(rows, cols, data).1.len()
}

/// Basis of the right kernel `{v : A v = 0}`.
pub fn kernel(rows: usize, cols: usize, data: &[GaussRat]) -> Vec<Vec<GaussRat>> {
    let (red, pivots) = rref(rows, cols, data);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![GaussRat::zero(); cols];
            v[f] = GaussRat::one();
            for (row, &pc) in red.iter().zip(&pivots) {
                if !row[f].is_zero() {
                    v[pc] = -row[f].clone();
                }
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: i64) -> GaussRat {
        GaussRat::from_i64(v)
    }

    #[test]
    fn rank_of_singular_matrix() {
        let d = vec![g(1), g(2), g(2), g(4)];
        assert_eq!(rank(2, 2, &d), 1);
        assert_eq!(rank(2, 2, &[g(1), g(0), g(0), g(1)]), 2);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let d = vec![g(1), g(2), g(3), g(2), g(4), g(6)];
        let k = kernel(2, 3, &d);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in d.chunks(3) {
                let s = row.iter().zip(v).fold(GaussRat::zero(), |a, (x, y)| a + x.clone() * y.clone());
                assert!(s.is_zero());
            }
        }
    }
}
