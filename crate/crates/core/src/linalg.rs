//! Dense helpers for the tiny (g <= 6) matrices this crate works with.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub(crate) type CMat = Vec<Vec<Complex64>>;
pub(crate) type RMat = Vec<Vec<f64>>;

pub(crate) fn czeros(n: usize) -> CMat {
    vec![vec![Complex64::new(0.0, 0.0); n]; n]
}

/// Solve A X = B by partial-pivot Gaussian elimination. B may have any column count.
pub(crate) fn solve_complex(a: &CMat, b: &CMat) -> Result<CMat> {
    let n = a.len();
    let m = b[0].len();
    let mut aug: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend(b[i].iter().copied());
            row
        })
        .collect();
    for col in 0..n {
        let (piv, mag) = (col..n)
            .map(|r| (r, aug[r][col].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag == 0.0 {
            return Err(Error::SingularMatrix(f64::INFINITY));
        }
        aug.swap(col, piv);
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = aug[r][col] / aug[col][col];
            for c in col..n + m {
                let sub = f * aug[col][c];
                aug[r][c] -= sub;
            }
        }
    }
    Ok((0..n)
        .map(|i| (0..m).map(|j| aug[i][n + j] / aug[i][i]).collect())
        .collect())
}

pub(crate) fn identity_c(n: usize) -> CMat {
    let mut id = czeros(n);
    for (i, row) in id.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    id
}

/// Infinity-norm condition estimate via the explicit inverse (n <= 6).
pub(crate) fn cond_inf(a: &CMat) -> Result<f64> {
    let inv = solve_complex(a, &identity_c(a.len()))?;
    Ok(norm_inf(a) * norm_inf(&inv))
}

pub(crate) fn norm_inf(a: &CMat) -> f64 {
    a.iter()
        .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

pub(crate) fn mat_mul(a: &CMat, b: &CMat) -> CMat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut acc = Complex64::new(0.0, 0.0);
            for l in 0..k {
                acc += a[i][l] * b[l][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
pub(crate) fn sym_eigenvalues(m: &RMat) -> Vec<f64> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    for _sweep in 0..64 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += a[i][j] * a[i][j];
            }
        }
        if off.sqrt() < 1e-14 * (1.0 + frobenius(&a)) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = 0.5 * (2.0 * a[p][q]).atan2(a[q][q] - a[p][p]);
                let (s, c) = theta.sin_cos();
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

fn frobenius(a: &RMat) -> f64 {
    a.iter()
        .flat_map(|r| r.iter())
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
}

/// Determinant of a real matrix by partial-pivot LU.
pub(crate) fn det_real(m: &RMat) -> f64 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        if a[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            a.swap(col, piv);
            det = -det;
        }
        det *= a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                let sub = f * a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    det
}

/// Inverse of a real symmetric positive definite matrix (Gauss-Jordan; n <= 6).
pub(crate) fn spd_inverse(m: &RMat) -> Result<RMat> {
    let n = m.len();
    let mut aug: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row = m[i].clone();
            row.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| aug[x][col].abs().total_cmp(&aug[y][col].abs()))
            .unwrap();
        if aug[piv][col] == 0.0 {
            return Err(Error::SingularMatrix(f64::INFINITY));
        }
        aug.swap(col, piv);
        let d = aug[col][col];
        for c in 0..2 * n {
            aug[col][c] /= d;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = aug[r][col];
            for c in 0..2 * n {
                let sub = f * aug[col][c];
                aug[r][c] -= sub;
            }
        }
    }
    Ok((0..n).map(|i| aug[i][n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_and_cond() {
        let a = vec![
            vec![Complex64::new(2.0, 0.0), Complex64::new(1.0, 1.0)],
            vec![Complex64::new(0.0, -1.0), Complex64::new(3.0, 0.0)],
        ];
        let b = identity_c(2);
        let inv = solve_complex(&a, &b).unwrap();
        let prod = mat_mul(&a, &inv);
        assert!((prod[0][0] - 1.0).norm() < 1e-12);
        assert!((prod[1][0]).norm() < 1e-12);
        assert!(cond_inf(&a).unwrap() > 1.0);
    }

    #[test]
    fn jacobi_eigenvalues() {
        let m = vec![vec![2.0, 1.0], vec![1.0, 2.0]];
        let e = sym_eigenvalues(&m);
        assert!((e[0] - 1.0).abs() < 1e-12 && (e[1] - 3.0).abs() < 1e-12);
        assert!((det_real(&m) - 3.0).abs() < 1e-12);
        let inv = spd_inverse(&m).unwrap();
        assert!((inv[0][0] - 2.0 / 3.0).abs() < 1e-12);
    }
}
