//! Small dense linear algebra over a generic scalar.
//!
//! Everything here is sized for the matrices this library actually meets
//! (ambient dimension at most a few hundred): row-major dense storage,
//! modified Gram-Schmidt with one re-orthogonalization pass, a cyclic Jacobi
//! eigensolver for symmetric matrices, and Gaussian elimination for the small
//! Newton systems. All routines are deterministic.

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

pub const RANK_THRESHOLD: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mat<S> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<S>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn matvec(&self, x: &[S]) -> Vec<S> {
        assert_eq!(self.cols, x.len(), "matvec dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), x)).collect()
    }

    pub fn matmul(&self, other: &Mat<S>) -> Mat<S> {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == S::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat<S> {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc + self[(i, i)])
    }

    pub fn frobenius_norm_sq(&self) -> S {
        self.data.iter().fold(S::zero(), |acc, &v| acc + v * v)
    }

    pub fn max_abs(&self) -> S {
        self.data.iter().fold(S::zero(), |acc, &v| acc.max(v.abs()))
    }

    pub fn scaled(&self, s: S) -> Mat<S> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&v| v * s).collect() }
    }

    pub fn add(&self, other: &Mat<S>) -> Mat<S> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat<S>) -> Mat<S> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a - b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn symmetry_deviation(&self) -> S {
        let mut d = S::zero();
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                d = d.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        d
    }
}

impl<S: Scalar> std::ops::Index<(usize, usize)> for Mat<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S: Scalar> std::ops::IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(S::zero(), |acc, (&x, &y)| acc + x * y)
}

pub fn norm<S: Scalar>(a: &[S]) -> S {
    dot(a, a).sqrt()
}

pub fn scale<S: Scalar>(a: &[S], s: S) -> Vec<S> {
    a.iter().map(|&v| v * s).collect()
}

/// y += s * x
pub fn axpy<S: Scalar>(y: &mut [S], s: S, x: &[S]) {
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = *yi + s * xi;
    }
}

pub fn add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

pub fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

pub fn normalized<S: Scalar>(a: &[S]) -> Option<Vec<S>> {
    let n = norm(a);
    if n <= S::of(1e-300) {
        return None;
    }
    Some(scale(a, S::one() / n))
}

/// Remove from `v` its components along the orthonormal set `basis`.
pub fn project_out<S: Scalar>(v: &mut [S], basis: &[Vec<S>]) {
    for b in basis {
        let c = dot(v, b);
        axpy(v, -c, b);
    }
}

/// Modified Gram-Schmidt with one re-orthogonalization pass.
///
/// Vectors whose residual norm falls below `threshold` (relative to the input
/// norm, floored at the absolute threshold) are dropped, so the result is an
/// orthonormal basis of the span of the inputs.
pub fn orthonormalize<S: Scalar>(vectors: &[Vec<S>], threshold: f64) -> Vec<Vec<S>> {
    let thr = S::of(threshold);
    let mut basis: Vec<Vec<S>> = Vec::new();
    for v in vectors {
        let scale_ref = norm(v).max(S::one());
        let mut w = v.clone();
        project_out(&mut w, &basis);
        // second pass guards against cancellation
        project_out(&mut w, &basis);
        let n = norm(&w);
        if n > thr * scale_ref {
            basis.push(scale(&w, S::one() / n));
        }
    }
    basis
}

/// Orthonormal basis of the orthogonal complement of `subspace` (assumed
/// orthonormal) inside R^dim, built deterministically from the standard basis.
pub fn orthonormal_complement<S: Scalar>(subspace: &[Vec<S>], dim: usize) -> Vec<Vec<S>> {
    let mut basis: Vec<Vec<S>> = subspace.to_vec();
    let mut complement = Vec::new();
    let thr = S::of(RANK_THRESHOLD);
    for i in 0..dim {
        let mut e = vec![S::zero(); dim];
        e[i] = S::one();
        project_out(&mut e, &basis);
        project_out(&mut e, &basis);
        let n = norm(&e);
        if n > thr {
            let u = scale(&e, S::one() / n);
            basis.push(u.clone());
            complement.push(u);
        }
    }
    complement
}

/// Max deviation of ⟨v_i, v_j⟩ from δ_ij.
pub fn gram_deviation<S: Scalar>(vectors: &[Vec<S>]) -> S {
    let mut worst = S::zero();
    for (i, a) in vectors.iter().enumerate() {
        for (j, b) in vectors.iter().enumerate().skip(i) {
            let target = if i == j { S::one() } else { S::zero() };
            worst = worst.max((dot(a, b) - target).abs());
        }
    }
    worst
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order with matching eigenvector columns.
pub fn sym_eigen<S: Scalar>(a: &Mat<S>) -> (Vec<S>, Mat<S>) {
    assert_eq!(a.rows, a.cols, "sym_eigen needs a square matrix");
    let n = a.rows;
    let mut m = a.clone();
    let mut v = Mat::identity(n);
    if n <= 1 {
        return (m.data.clone(), v);
    }
    let off = |m: &Mat<S>| -> S {
        let mut s = S::zero();
        for i in 0..n {
            for j in (i + 1)..n {
                s = s + m[(i, j)] * m[(i, j)];
            }
        }
        s
    };
    let scale_sq = m.frobenius_norm_sq().max(S::of(1e-300));
    let tol = S::epsilon() * S::epsilon() * scale_sq;
    for _sweep in 0..64 {
        if off(&m) <= tol {
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq.abs() <= S::epsilon() * scale_sq.sqrt() * S::of(1e-3) {
                    continue;
                }
                let app = m[(p, p)];
                let aqq = m[(q, q)];
                let theta = (aqq - app) / (S::of(2.0) * apq);
                let t = {
                    let sign = if theta >= S::zero() { S::one() } else { -S::one() };
                    sign / (theta.abs() + (theta * theta + S::one()).sqrt())
                };
                let c = S::one() / (t * t + S::one()).sqrt();
                let s = t * c;
                for i in 0..n {
                    let mip = m[(i, p)];
                    let miq = m[(i, q)];
                    m[(i, p)] = c * mip - s * miq;
                    m[(i, q)] = s * mip + c * miq;
                }
                for j in 0..n {
                    let mpj = m[(p, j)];
                    let mqj = m[(q, j)];
                    m[(p, j)] = c * mpj - s * mqj;
                    m[(q, j)] = s * mpj + c * mqj;
                }
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = c * vip - s * viq;
                    v[(i, q)] = s * vip + c * viq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].partial_cmp(&m[(j, j)]).unwrap());
    let vals: Vec<S> = order.iter().map(|&i| m[(i, i)]).collect();
    let mut vecs = Mat::zeros(n, n);
    for (new_j, &old_j) in order.iter().enumerate() {
        for i in 0..n {
            vecs[(i, new_j)] = v[(i, old_j)];
        }
    }
    (vals, vecs)
}

/// Cluster a sorted eigenvalue list: consecutive values within `gap` join the
/// same cluster. Returns (cluster mean, multiplicity) pairs.
pub fn cluster_eigenvalues<S: Scalar>(sorted_vals: &[S], gap: f64) -> Vec<(S, usize)> {
    let gap = S::of(gap);
    let mut clusters: Vec<(S, usize)> = Vec::new();
    for &v in sorted_vals {
        match clusters.last_mut() {
            Some((mean, count)) if (v - *mean).abs() <= gap => {
                let c = S::from_usize(*count).unwrap();
                *mean = (*mean * c + v) / (c + S::one());
                *count += 1;
            }
            _ => clusters.push((v, 1)),
        }
    }
    clusters
}

/// Solve `a x = b` by Gaussian elimination with partial pivoting.
pub fn solve<S: Scalar>(a: &Mat<S>, b: &[S]) -> Option<Vec<S>> {
    assert_eq!(a.rows, a.cols);
    assert_eq!(a.rows, b.len());
    let n = a.rows;
    let mut m = a.clone();
    let mut x = b.to_vec();
    for col in 0..n {
        let mut pivot = col;
        for r in (col + 1)..n {
            if m[(r, col)].abs() > m[(pivot, col)].abs() {
                pivot = r;
            }
        }
        if m[(pivot, col)].abs() < S::of(1e-300) {
            return None;
        }
        if pivot != col {
            for j in 0..n {
                let tmp = m[(col, j)];
                m[(col, j)] = m[(pivot, j)];
                m[(pivot, j)] = tmp;
            }
            x.swap(col, pivot);
        }
        let inv = S::one() / m[(col, col)];
        for r in (col + 1)..n {
            let f = m[(r, col)] * inv;
            if f == S::zero() {
                continue;
            }
            for j in col..n {
                let v = m[(col, j)];
                m[(r, j)] = m[(r, j)] - f * v;
            }
            let xc = x[col];
            x[r] = x[r] - f * xc;
        }
    }
    for col in (0..n).rev() {
        let mut s = x[col];
        for j in (col + 1)..n {
            s = s - m[(col, j)] * x[j];
        }
        x[col] = s / m[(col, col)];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;
    use proptest::prelude::*;

    fn random_sym(n: usize, seed: u64) -> Mat<f64> {
        let mut r = rng::rng_from_seed(seed);
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v: f64 = rng::gaussian(&mut r);
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        m
    }

    #[test]
    fn jacobi_reconstructs_matrix() {
        for n in [1usize, 2, 5, 12, 30] {
            let a = random_sym(n, 1000 + n as u64);
            let (vals, vecs) = sym_eigen(&a);
            // A V = V diag(vals)
            for j in 0..n {
                let col: Vec<f64> = (0..n).map(|i| vecs[(i, j)]).collect();
                let av = a.matvec(&col);
                for i in 0..n {
                    assert!((av[i] - vals[j] * col[i]).abs() < 1e-9, "n={n} i={i} j={j}");
                }
            }
            assert!(gram_deviation(&(0..n)
                .map(|j| (0..n).map(|i| vecs[(i, j)]).collect::<Vec<_>>())
                .collect::<Vec<_>>()) < 1e-10);
            for j in 1..n {
                assert!(vals[j] >= vals[j - 1]);
            }
        }
    }

    #[test]
    fn complement_has_right_dimension() {
        let sub = vec![vec![1.0, 0.0, 0.0, 0.0], vec![0.0, 1.0, 0.0, 0.0]];
        let comp = orthonormal_complement(&sub, 4);
        assert_eq!(comp.len(), 2);
        let mut all = sub;
        all.extend(comp);
        assert!(gram_deviation(&all) < 1e-12);
    }

    #[test]
    fn solve_small_system() {
        let a = Mat::<f64>::from_rows(&[vec![2.0, 1.0], vec![1.0, 3.0]]);
        let x = solve(&a, &[5.0, 10.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12);
        assert!((x[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn clustering_counts_multiplicities() {
        let vals = vec![-1.0, -1.0 + 1e-9, 0.0, 1.0 - 1e-9, 1.0, 1.0];
        let clusters = cluster_eigenvalues(&vals, 1e-6);
        let counts: Vec<usize> = clusters.iter().map(|c| c.1).collect();
        assert_eq!(counts, vec![2, 1, 3]);
    }

    proptest! {
        #[test]
        fn mgs_output_is_orthonormal(seed in 0u64..500) {
            let mut r = rng::rng_from_seed(seed);
            let n = 8;
            let vectors: Vec<Vec<f64>> =
                (0..6).map(|_| rng::gaussian_vector(&mut r, n)).collect();
            let basis = orthonormalize(&vectors, RANK_THRESHOLD);
            prop_assert!(gram_deviation(&basis) < 1e-10);
        }

        #[test]
        fn mgs_drops_dependent_vectors(seed in 0u64..200) {
            let mut r = rng::rng_from_seed(seed);
            let v: Vec<f64> = rng::gaussian_vector(&mut r, 5);
            let w: Vec<f64> = rng::gaussian_vector(&mut r, 5);
            let dup = add(&scale(&v, 2.0), &w);
            let basis = orthonormalize(&[v, w, dup], RANK_THRESHOLD);
            prop_assert_eq!(basis.len(), 2);
        }
    }
}
