//! Dense complex linear algebra support: Pauli matrices, closed-form 2×2
//! eigendecompositions, unitarity residuals, and the eigenphase extraction
//! used to compare position-space and momentum-space spectra.

use nalgebra::{DMatrix, Matrix2, Matrix3, SymmetricEigen, Vector2, Vector3};
use num_complex::Complex64 as C64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::par;

pub type CMat2 = Matrix2<C64>;
pub type CVec2 = Vector2<C64>;
pub type CMatrix = DMatrix<C64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn pauli_x() -> CMat2 {
    CMat2::new(ZERO, ONE, ONE, ZERO)
}

pub fn pauli_y() -> CMat2 {
    CMat2::new(ZERO, -I, I, ZERO)
}

pub fn pauli_z() -> CMat2 {
    CMat2::new(ONE, ZERO, ZERO, -ONE)
}

/// a·I + v·σ for a real axis vector.
pub fn axis_matrix(a: f64, v: &Vector3<f64>) -> CMat2 {
    CMat2::new(
        c(a + v[2], 0.0),
        c(v[0], -v[1]),
        c(v[0], v[1]),
        c(a - v[2], 0.0),
    )
}

/// exp(i·α·n̂·σ) = cos(α) I + i sin(α) n̂·σ for a unit axis n̂.
pub fn exp_i_axis(alpha: f64, axis: &Vector3<f64>) -> CMat2 {
    let (s, co) = alpha.sin_cos();
    let mut m = axis_matrix(0.0, axis) * c(0.0, s);
    m[(0, 0)] += c(co, 0.0);
    m[(1, 1)] += c(co, 0.0);
    m
}

pub fn max_abs2(m: &CMat2) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// ‖U†U − I‖_max for a square matrix, computed column-by-column.
pub fn unitarity_residual(u: &CMatrix) -> f64 {
    let n = u.ncols();
    par::max_indexed(n, |j| {
        let col = u.column(j);
        let mut worst = 0.0f64;
        for i in 0..n {
            let mut dot = ZERO;
            for r in 0..u.nrows() {
                dot += u[(r, i)].conj() * col[r];
            }
            let target = if i == j { ONE } else { ZERO };
            worst = worst.max((dot - target).norm());
        }
        worst
    })
}

pub fn unitarity_residual2(u: &CMat2) -> f64 {
    let g = u.adjoint() * u;
    max_abs2(&(g - CMat2::identity()))
}

/// Eigendecomposition of a normal 2×2 matrix: two (eigenvalue, unit
/// eigenvector) pairs with orthonormal eigenvectors.
///
/// Degenerate normal matrices are scalar, so any orthonormal basis works
/// there; otherwise the eigenvectors are read off the singular rows of
/// `m − λI`.
pub fn eigen2_normal(m: &CMat2) -> [(C64, CVec2); 2] {
    let tr = m[(0, 0)] + m[(1, 1)];
    let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
    let disc = (tr * tr - det * 4.0).sqrt();
    let l1 = (tr + disc) * 0.5;
    let l2 = (tr - disc) * 0.5;

    let cand_a = CVec2::new(m[(0, 1)], l1 - m[(0, 0)]);
    let cand_b = CVec2::new(l1 - m[(1, 1)], m[(1, 0)]);
    let v1 = if cand_a.norm() >= cand_b.norm() {
        cand_a
    } else {
        cand_b
    };
    if v1.norm() < 1e-300 {
        // scalar matrix
        return [
            (l1, CVec2::new(ONE, ZERO)),
            (l2, CVec2::new(ZERO, ONE)),
        ];
    }
    let v1 = v1.normalize();
    let v2 = CVec2::new(-v1[1].conj(), v1[0].conj());
    [(l1, v1), (l2, v2)]
}

/// Eigenvalues and eigenvectors of a Hermitian matrix (ascending order).
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let se = SymmetricEigen::new(m.clone());
    let n = m.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| se.eigenvalues[a].partial_cmp(&se.eigenvalues[b]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vecs = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vecs.column_mut(dst).copy_from(&se.eigenvectors.column(src));
    }
    (vals, vecs)
}

/// Eigenphases of a unitary matrix, each in (−π, π], sorted ascending.
///
/// Route: a random Hermitian combination Re(e^{iα}U) shares eigenvectors
/// with U whenever its own spectrum is simple; Rayleigh quotients against U
/// then recover the phases. Every pair is verified against ‖Uv − λv‖ and a
/// fresh α is drawn on failure, so the result does not depend on luck.
pub fn unitary_eigenphases(u: &CMatrix, seed: u64) -> Result<Vec<f64>> {
    let n = u.nrows();
    if n != u.ncols() {
        return Err(Error::DimensionMismatch("eigenphases of non-square matrix".into()));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let adj = u.adjoint();
    for _attempt in 0..64 {
        let alpha: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let phase = C64::from_polar(1.0, alpha);
        let herm = (u * phase + &adj * phase.conj()) * c(0.5, 0.0);
        let (_vals, vecs) = hermitian_eigen(&herm);
        let mut phases = Vec::with_capacity(n);
        let mut ok = true;
        for j in 0..n {
            let v = vecs.column(j);
            let uv = u * v;
            let lambda: C64 = v.iter().zip(uv.iter()).map(|(a, b)| a.conj() * b).sum();
            let residual = (&uv - v * lambda).norm();
            if residual > 1e-9 || (lambda.norm() - 1.0).abs() > 1e-9 {
                ok = false;
                break;
            }
            phases.push(principal_phase(lambda));
        }
        if ok {
            phases.sort_by(|a, b| a.partial_cmp(b).unwrap());
            return Ok(phases);
        }
    }
    Err(Error::Numerical(
        "unitary eigenphase extraction failed to converge".into(),
    ))
}

/// Argument of a unit complex number mapped into (−π, π].
pub fn principal_phase(z: C64) -> f64 {
    let a = z.arg();
    if a <= -std::f64::consts::PI {
        std::f64::consts::PI
    } else {
        a
    }
}

/// Smallest eigenvalue and its eigenvector for a real symmetric 3×3 matrix,
/// by cyclic Jacobi sweeps. Kept hand-rolled so the SVD cross-check in the
/// test suite is an independent route.
pub fn sym3_min_eigenpair(g: &Matrix3<f64>) -> (f64, Vector3<f64>) {
    let mut a = *g;
    let mut v = Matrix3::<f64>::identity();
    for _sweep in 0..64 {
        let off = a[(0, 1)].abs() + a[(0, 2)].abs() + a[(1, 2)].abs();
        if off < 1e-300 {
            break;
        }
        for &(p, q) in &[(0usize, 1usize), (0, 2), (1, 2)] {
            if a[(p, q)].abs() < 1e-300 {
                continue;
            }
            let theta = 0.5 * (2.0 * a[(p, q)]).atan2(a[(q, q)] - a[(p, p)]);
            let (s, co) = theta.sin_cos();
            let mut rot = Matrix3::<f64>::identity();
            rot[(p, p)] = co;
            rot[(q, q)] = co;
            rot[(p, q)] = s;
            rot[(q, p)] = -s;
            a = rot.transpose() * a * rot;
            v *= rot;
        }
    }
    let mut idx = 0;
    for i in 1..3 {
        if a[(i, i)] < a[(idx, idx)] {
            idx = i;
        }
    }
    (a[(idx, idx)], v.column(idx).into_owned())
}

/// Multiset distance between two unit-circle spectra given as phase lists.
///
/// Both lists are rotated so the branch cut falls in the largest angular gap,
/// then compared entrywise after sorting; the value is the max distance in ℂ.
pub fn spectrum_distance(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "spectra of different sizes");
    if a.is_empty() {
        return 0.0;
    }
    let tau = std::f64::consts::TAU;
    // locate the largest gap in the combined phase set
    let mut all: Vec<f64> = a.iter().chain(b.iter()).map(|&p| p.rem_euclid(tau)).collect();
    all.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut cut = 0.0;
    let mut best_gap = -1.0;
    for i in 0..all.len() {
        let next = if i + 1 == all.len() { all[0] + tau } else { all[i + 1] };
        let gap = next - all[i];
        if gap > best_gap {
            best_gap = gap;
            cut = all[i] + gap / 2.0;
        }
    }
    let shift = |p: f64| (p - cut).rem_euclid(tau);
    let mut sa: Vec<f64> = a.iter().map(|&p| shift(p)).collect();
    let mut sb: Vec<f64> = b.iter().map(|&p| shift(p)).collect();
    sa.sort_by(|x, y| x.partial_cmp(y).unwrap());
    sb.sort_by(|x, y| x.partial_cmp(y).unwrap());
    sa.iter()
        .zip(sb.iter())
        .map(|(&p, &q)| (C64::from_polar(1.0, p) - C64::from_polar(1.0, q)).norm())
        .fold(0.0, f64::max)
}
