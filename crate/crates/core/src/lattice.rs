//! Integer-lattice primitives: row Hermite normal form with transform,
//! integer kernels, and exact solution of x M = rhs over the integers.
//!
//! Everything is fraction-free over `i128`; infeasibility of a solve is an
//! `Option::None`, not a panic, because it encodes "the claimed substitution
//! does not stabilize the lattice".

pub type Mat = Vec<Vec<i128>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![0i128; cols]; rows];
    for i in 0..rows {
        for (k, bk) in b.iter().enumerate() {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] += aik * bk[j];
            }
        }
    }
    out
}

/// Row Hermite normal form with unimodular transform: returns (H, U) with
/// U * A = H, pivots positive, entries above each pivot reduced into
/// [0, pivot), zero rows at the bottom.
pub fn hnf_with_transform(a: &Mat) -> (Mat, Mat) {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut h = a.clone();
    let mut u = identity(m);
    let mut pivot_row = 0usize;
    for col in 0..n {
        if pivot_row >= m {
            break;
        }
        // gcd elimination below pivot_row in this column
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..m {
                if h[r][col] != 0 {
                    best = match best {
                        None => Some(r),
                        Some(b) if h[r][col].abs() < h[b][col].abs() => Some(r),
                        keep => keep,
                    };
                }
            }
            let Some(b) = best else { break };
            h.swap(pivot_row, b);
            u.swap(pivot_row, b);
            let mut done = true;
            for r in pivot_row + 1..m {
                if h[r][col] != 0 {
                    let q = h[r][col].div_euclid(h[pivot_row][col]);
                    for c in 0..n {
                        h[r][c] -= q * h[pivot_row][c];
                    }
                    for c in 0..m {
                        u[r][c] -= q * u[pivot_row][c];
                    }
                    if h[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h[pivot_row][col] == 0 {
            continue;
        }
        if h[pivot_row][col] < 0 {
            for c in 0..n {
                h[pivot_row][c] = -h[pivot_row][c];
            }
            for c in 0..m {
                u[pivot_row][c] = -u[pivot_row][c];
            }
        }
        let pv = h[pivot_row][col];
        for r in 0..pivot_row {
            let q = h[r][col].div_euclid(pv);
            if q != 0 {
                for c in 0..n {
                    h[r][c] -= q * h[pivot_row][c];
                }
                for c in 0..m {
                    u[r][c] -= q * u[pivot_row][c];
                }
            }
        }
        pivot_row += 1;
        if pivot_row == m {
            break;
        }
    }
    (h, u)
}

/// Row HNF with zero rows dropped: the canonical basis of the row lattice.
pub fn hnf_basis(a: &Mat) -> Mat {
    let (h, _) = hnf_with_transform(a);
    h.into_iter().filter(|r| r.iter().any(|&v| v != 0)).collect()
}

/// Rank over the rationals (pivot count of the HNF).
pub fn rank(a: &Mat) -> usize {
    hnf_basis(a).len()
}

/// Basis of { v : A v = 0 } (v a column vector), as rows.
pub fn kernel(a: &Mat) -> Mat {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    // transpose, then U rows matching zero H rows form the kernel
    let at: Mat = (0..n).map(|j| (0..m).map(|i| a[i][j]).collect()).collect();
    let (h, u) = hnf_with_transform(&at);
    h.iter()
        .zip(u)
        .filter(|(hr, _)| hr.iter().all(|&v| v == 0))
        .map(|(_, ur)| ur)
        .collect()
}

/// Solve x M = rhs over the integers, if rhs lies in the row lattice of M.
pub fn solve_left(m_mat: &Mat, rhs: &[i128]) -> Option<Vec<i128>> {
    let m = m_mat.len();
    let (h, u) = hnf_with_transform(m_mat);
    let n = rhs.len();
    let mut residual = rhs.to_vec();
    let mut x = vec![0i128; m];
    for (i, hrow) in h.iter().enumerate() {
        let Some(c) = hrow.iter().position(|&v| v != 0) else {
            break;
        };
        let q = residual[c].div_euclid(hrow[c]);
        if residual[c].rem_euclid(hrow[c]) != 0 {
            return None;
        }
        if q != 0 {
            for j in 0..n {
                residual[j] -= q * hrow[j];
            }
            for j in 0..m {
                x[j] += q * u[i][j];
            }
        }
    }
    if residual.iter().all(|&v| v == 0) {
        Some(x)
    } else {
        None
    }
}

/// Index of the row lattice inside Z^n: the product of HNF pivots when the
/// lattice has full rank n, else None (infinite index).
pub fn lattice_index(a: &Mat) -> Option<u128> {
    let basis = hnf_basis(a);
    let n = if a.is_empty() { 0 } else { a[0].len() };
    if basis.len() != n {
        return None;
    }
    let mut idx = 1u128;
    for (i, row) in basis.iter().enumerate() {
        let pivot = row[i..].iter().find(|&&v| v != 0)?;
        idx = idx.checked_mul(pivot.unsigned_abs())?;
    }
    Some(idx)
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(a: &Mat) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m = a.clone();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let swap = (k + 1..n).find(|&r| m[r][k] != 0);
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Inverse of a unimodular integer matrix (det +-1).
pub fn unimodular_inverse(a: &Mat) -> Option<Mat> {
    let (h, u) = hnf_with_transform(a);
    // for unimodular a, the HNF is the identity and U is the inverse
    for (i, row) in h.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != i128::from(i == j) {
                return None;
            }
        }
    }
    Some(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_canonicalizes_row_lattice() {
        // rows (2, 0), (0, 2), (1, 1) span the checkerboard lattice
        let a: Mat = vec![vec![2, 0], vec![0, 2], vec![1, 1]];
        let h = hnf_basis(&a);
        assert_eq!(h, vec![vec![1, 1], vec![0, 2]]);
        assert_eq!(lattice_index(&a), Some(2));
    }

    #[test]
    fn transform_is_exact() {
        let a: Mat = vec![vec![6, 4, 2], vec![4, 4, 4], vec![2, 8, 6]];
        let (h, u) = hnf_with_transform(&a);
        assert_eq!(mat_mul(&u, &a), h);
        assert_eq!(det(&u).abs(), 1);
    }

    #[test]
    fn kernel_and_solve() {
        let a: Mat = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let k = kernel(&a);
        // rank 1, kernel rank 2
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                let dot: i128 = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert_eq!(dot, 0);
            }
        }
        let m: Mat = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(solve_left(&m, &[4, 9]), Some(vec![2, 3]));
        assert_eq!(solve_left(&m, &[1, 0]), None);
    }

    #[test]
    fn unimodular_inverse_round_trip() {
        let a: Mat = vec![vec![1, 1, 0], vec![0, 1, 2], vec![0, 0, 1]];
        let inv = unimodular_inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(3));
        let singular: Mat = vec![vec![2, 0], vec![0, 1]];
        assert!(unimodular_inverse(&singular).is_none());
    }
}
