//! Minimal dense complex linear algebra for 4x4 Hermitian matrices.

use num_complex::Complex64;

pub(crate) type Matrix4 = [[Complex64; 4]; 4];

/// Eigenvalues of a Hermitian 4x4 matrix, ascending.
///
/// Cyclic complex Jacobi rotations: each off-diagonal entry a_pq = |a_pq| u is
/// phase-rotated onto the real axis and annihilated with the classic real
/// rotation; sweeps repeat until the off-diagonal Frobenius norm is at the
/// round-off floor. For 4x4 this converges in a handful of sweeps.
pub(crate) fn hermitian_eigenvalues(m: &Matrix4) -> [f64; 4] {
    let mut a = *m;
    let scale: f64 = a
        .iter()
        .flatten()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt()
        .max(1.0);
    let floor = 1e-15 * scale;

    for _ in 0..50 {
        if off_diagonal_norm(&a) <= floor {
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                let apq = a[p][q];
                let mag = apq.norm();
                if mag <= f64::MIN_POSITIVE {
                    continue;
                }
                // Unit phase u with a_pq = mag * u.
                let u = apq / mag;
                let tau = (a[q][q].re - a[p][p].re) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // J has J[p][p] = c, J[p][q] = s, J[q][p] = -s u*, J[q][q] = c u*;
                // apply A <- J^H A J via column then row updates.
                for row in 0..4 {
                    let vp = a[row][p];
                    let vq = a[row][q];
                    a[row][p] = c * vp - s * u.conj() * vq;
                    a[row][q] = s * vp + c * u.conj() * vq;
                }
                for col in 0..4 {
                    let vp = a[p][col];
                    let vq = a[q][col];
                    a[p][col] = c * vp - s * u * vq;
                    a[q][col] = s * vp + c * u * vq;
                }
                // Re-symmetrize the pivot pair against round-off.
                a[p][q] = Complex64::new(0.0, 0.0);
                a[q][p] = Complex64::new(0.0, 0.0);
                a[p][p] = Complex64::new(a[p][p].re, 0.0);
                a[q][q] = Complex64::new(a[q][q].re, 0.0);
            }
        }
    }

    let mut eig = [a[0][0].re, a[1][1].re, a[2][2].re, a[3][3].re];
    eig.sort_by(|x, y| {
        x.partial_cmp(y)
            .expect("eigenvalues of a Hermitian matrix are real")
    });
    eig
}

fn off_diagonal_norm(a: &Matrix4) -> f64 {
    let mut sum = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                sum += a[i][j].norm_sqr();
            }
        }
    }
    sum.sqrt()
}
