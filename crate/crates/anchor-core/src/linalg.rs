//! Small dense complex linear algebra helpers on top of nalgebra.

use crate::scalar::{Cx, Real};
use nalgebra::DMatrix;

pub type CMat<S> = DMatrix<Cx<S>>;

/// Max-norm of a matrix (largest absolute entry).
pub fn max_norm<S: Real>(m: &CMat<S>) -> S {
    let mut mx = S::zero();
    for v in m.iter() {
        let a = crate::scalar::cabs(*v);
        if a > mx {
            mx = a;
        }
    }
    mx
}

/// Max-norm of the difference, tolerant of shape mismatch (returns +inf).
pub fn diff_norm<S: Real>(a: &CMat<S>, b: &CMat<S>) -> S {
    if a.shape() != b.shape() {
        return S::max_value().unwrap_or_else(S::one);
    }
    max_norm(&(a - b))
}

pub fn identity<S: Real>(n: usize) -> CMat<S> {
    CMat::<S>::identity(n, n)
}

pub fn zeros<S: Real>(r: usize, c: usize) -> CMat<S> {
    CMat::<S>::zeros(r, c)
}

/// Conjugate transpose.
pub fn dagger<S: Real>(m: &CMat<S>) -> CMat<S> {
    m.adjoint()
}

/// Entrywise complex conjugate (no transpose).
pub fn conj_entries<S: Real>(m: &CMat<S>) -> CMat<S> {
    m.map(|z| z.conj())
}

pub fn try_inverse<S: Real>(m: &CMat<S>) -> Option<CMat<S>> {
    m.clone().try_inverse()
}

/// Eigendecomposition of a Hermitian matrix: returns (eigenvalues ascending,
/// unitary matrix of column eigenvectors).
pub fn hermitian_eig<S: Real>(m: &CMat<S>) -> (Vec<S>, CMat<S>) {
    let n = m.nrows();
    if n == 0 {
        return (vec![], CMat::<S>::zeros(0, 0));
    }
    let se = nalgebra::SymmetricEigen::new(m.clone());
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| {
        se.eigenvalues[a]
            .partial_cmp(&se.eigenvalues[b])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let vals: Vec<S> = idx.iter().map(|&k| se.eigenvalues[k]).collect();
    let mut vecs = CMat::<S>::zeros(n, n);
    for (col, &k) in idx.iter().enumerate() {
        vecs.set_column(col, &se.eigenvectors.column(k));
    }
    (vals, vecs)
}

/// Unitary polar factor of an invertible matrix: U = M (M†M)^{-1/2}.
pub fn polar_unitary<S: Real>(m: &CMat<S>) -> CMat<S> {
    let h = dagger(m) * m;
    let (vals, vecs) = hermitian_eig(&h);
    let n = m.nrows();
    let mut inv_sqrt = CMat::<S>::zeros(n, n);
    for k in 0..n {
        let v = if vals[k] > S::zero() { vals[k] } else { S::lit(1e-30) };
        inv_sqrt[(k, k)] = Cx::new(S::one() / v.sqrt(), S::zero());
    }
    m * (&vecs * inv_sqrt * dagger(&vecs))
}

/// Kronecker product.
pub fn kron<S: Real>(a: &CMat<S>, b: &CMat<S>) -> CMat<S> {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = CMat::<S>::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[(i, j)];
            for p in 0..br {
                for q in 0..bc {
                    out[(i * br + p, j * bc + q)] = aij * b[(p, q)];
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cx;

    #[test]
    fn hermitian_eig_complex() {
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
        let m = CMat::<f64>::from_row_slice(
            2,
            2,
            &[cx(2.0, 0.0), cx(0.0, 1.0), cx(0.0, -1.0), cx(2.0, 0.0)],
        );
        let (vals, vecs) = hermitian_eig(&m);
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] - 3.0).abs() < 1e-12);
        let recon = &vecs
            * CMat::<f64>::from_diagonal(&nalgebra::DVector::from_vec(
                vals.iter().map(|&v| cx(v, 0.0)).collect(),
            ))
            * dagger(&vecs);
        assert!(diff_norm(&m, &recon) < 1e-10);
    }

    #[test]
    fn polar_of_unitary_times_positive() {
        let r = 2.0_f64.sqrt();
        let u = CMat::<f64>::from_row_slice(
            2,
            2,
            &[
                cx(0.0, 1.0 / r),
                cx(1.0 / r, 0.0),
                cx(-1.0 / r, 0.0),
                cx(0.0, -1.0 / r),
            ],
        );
        let p = CMat::<f64>::from_row_slice(2, 2, &[cx(3.0, 0.0), cx(0.0, 0.0), cx(0.0, 0.0), cx(0.5, 0.0)]);
        let m = &u * p;
        let u2 = polar_unitary(&m);
        assert!(diff_norm(&u, &u2) < 1e-10);
    }

    #[test]
    fn generic_f32_instantiation() {
        let m = CMat::<f32>::identity(3, 3);
        let (vals, _) = hermitian_eig(&m);
        assert!((vals[2] - 1.0).abs() < 1e-5);
    }
}
