//! Quaternion and octonion arithmetic.
//!
//! The octonion product is the Cayley-Dickson doubling of the quaternions,
//! `(a, b) * (c, d) = (a c - conj(d) b,  d a + b conj(c))`,
//! over the basis `1, e1, ..., e7` with `e1 = (i, 0)`, `e2 = (j, 0)`,
//! `e3 = (k, 0)`, `e4 = (0, 1)`, `e5 = (0, i)`, `e6 = (0, j)`, `e7 = (0, k)`.
//! Arithmetic is generic over the coefficient ring so the same code produces
//! exact integer multiplication tables and floating-point values.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Coefficient ring for Cayley-Dickson arithmetic.
pub trait Ring:
    Copy + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Add<Output = Self> + Mul<Output = Self> + PartialEq
{
}
impl<T> Ring for T where
    T: Copy
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Add<Output = T>
        + Mul<Output = T>
        + PartialEq
{
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quaternion<T>(pub [T; 4]);

impl<T: Ring> Quaternion<T> {
    pub fn zero() -> Self {
        Quaternion([T::zero(); 4])
    }

    pub fn one() -> Self {
        let mut q = Self::zero();
        q.0[0] = T::one();
        q
    }

    pub fn conj(self) -> Self {
        let [a, b, c, d] = self.0;
        Quaternion([a, -b, -c, -d])
    }

    pub fn add(self, o: Self) -> Self {
        let mut r = Self::zero();
        for i in 0..4 {
            r.0[i] = self.0[i] + o.0[i];
        }
        r
    }

    pub fn sub(self, o: Self) -> Self {
        let mut r = Self::zero();
        for i in 0..4 {
            r.0[i] = self.0[i] - o.0[i];
        }
        r
    }

    /// Hamilton product with i j = k.
    pub fn mul(self, o: Self) -> Self {
        let [a0, a1, a2, a3] = self.0;
        let [b0, b1, b2, b3] = o.0;
        Quaternion([
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ])
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Octonion<T>(pub [T; 8]);

impl<T: Ring> Octonion<T> {
    pub fn zero() -> Self {
        Octonion([T::zero(); 8])
    }

    pub fn one() -> Self {
        let mut o = Self::zero();
        o.0[0] = T::one();
        o
    }

    /// Basis unit: 0 is the real unit, 1..=7 are e1..e7.
    pub fn basis(idx: usize) -> Self {
        assert!(idx < 8, "octonion basis index out of range");
        let mut o = Self::zero();
        o.0[idx] = T::one();
        o
    }

    fn halves(self) -> (Quaternion<T>, Quaternion<T>) {
        let c = self.0;
        (Quaternion([c[0], c[1], c[2], c[3]]), Quaternion([c[4], c[5], c[6], c[7]]))
    }

    fn from_halves(a: Quaternion<T>, b: Quaternion<T>) -> Self {
        Octonion([a.0[0], a.0[1], a.0[2], a.0[3], b.0[0], b.0[1], b.0[2], b.0[3]])
    }

    pub fn conj(self) -> Self {
        let mut r = self;
        for i in 1..8 {
            r.0[i] = -r.0[i];
        }
        r
    }

    pub fn add(self, o: Self) -> Self {
        let mut r = Self::zero();
        for i in 0..8 {
            r.0[i] = self.0[i] + o.0[i];
        }
        r
    }

    pub fn neg(self) -> Self {
        let mut r = self;
        for i in 0..8 {
            r.0[i] = -r.0[i];
        }
        r
    }
}

/// Cayley-Dickson product over quaternion pairs.
pub fn octonion_multiply<T: Ring>(x: Octonion<T>, y: Octonion<T>) -> Octonion<T> {
    let (a, b) = x.halves();
    let (c, d) = y.halves();
    let first = a.mul(c).sub(d.conj().mul(b));
    let second = d.mul(a).add(b.mul(c.conj()));
    Octonion::from_halves(first, second)
}

impl<S: Scalar> Octonion<S> {
    pub fn norm(self) -> S {
        self.0.iter().fold(S::zero(), |acc, &v| acc + v * v).sqrt()
    }
}

/// e_row * e_col expressed as (basis index, sign); exact.
pub fn basis_product_table() -> [[(usize, i64); 8]; 8] {
    let mut table = [[(0usize, 0i64); 8]; 8];
    for (r, row) in table.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            let p = octonion_multiply(Octonion::<i64>::basis(r), Octonion::<i64>::basis(c));
            let mut hit = None;
            for (idx, &coef) in p.0.iter().enumerate() {
                if coef != 0 {
                    assert!(hit.is_none(), "basis product is a single signed unit");
                    assert!(coef == 1 || coef == -1);
                    hit = Some((idx, coef));
                }
            }
            *cell = hit.expect("basis product nonzero");
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;

    fn to_f64(o: Octonion<i64>) -> Octonion<f64> {
        let mut r = Octonion::zero();
        for i in 0..8 {
            r.0[i] = o.0[i] as f64;
        }
        r
    }

    #[test]
    fn one_is_the_identity() {
        let e3 = Octonion::<i64>::basis(3);
        assert_eq!(octonion_multiply(Octonion::one(), e3), e3);
        assert_eq!(octonion_multiply(e3, Octonion::one()), e3);
    }

    #[test]
    fn quaternion_subalgebra_i_j_k() {
        // e1 e2 = e3 mirrors i j = k
        let p = octonion_multiply(Octonion::<i64>::basis(1), Octonion::<i64>::basis(2));
        assert_eq!(p, Octonion::basis(3));
        let q = octonion_multiply(Octonion::<i64>::basis(2), Octonion::<i64>::basis(1));
        assert_eq!(q, Octonion::basis(3).neg());
    }

    #[test]
    fn imaginary_units_square_to_minus_one() {
        for i in 1..8 {
            let e = Octonion::<i64>::basis(i);
            assert_eq!(octonion_multiply(e, e), Octonion::one().neg());
        }
    }

    #[test]
    fn nested_left_multiplication_negates() {
        // e1(e2(...(e7 z))) = -z, checked exactly on the whole basis.
        for b in 0..8 {
            let mut z = Octonion::<i64>::basis(b);
            for alpha in (1..8).rev() {
                z = octonion_multiply(Octonion::basis(alpha), z);
            }
            assert_eq!(z, Octonion::basis(b).neg(), "basis {b}");
        }
        // and numerically on random unit octonions
        let mut r = rng::rng_from_seed(42);
        for _ in 0..20 {
            let coeffs = rng::gaussian_vector::<f64>(&mut r, 8);
            let mut z = Octonion([0.0; 8]);
            z.0.copy_from_slice(&coeffs);
            let n = z.norm();
            for i in 0..8 {
                z.0[i] /= n;
            }
            let original = z;
            for alpha in (1..8).rev() {
                z = octonion_multiply(Octonion::basis(alpha), z);
            }
            for i in 0..8 {
                assert!((z.0[i] + original.0[i]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn norm_is_multiplicative() {
        let mut r = rng::rng_from_seed(7);
        for _ in 0..50 {
            let a = {
                let mut o = Octonion([0.0f64; 8]);
                o.0.copy_from_slice(&rng::gaussian_vector::<f64>(&mut r, 8));
                o
            };
            let b = {
                let mut o = Octonion([0.0f64; 8]);
                o.0.copy_from_slice(&rng::gaussian_vector::<f64>(&mut r, 8));
                o
            };
            let ab = octonion_multiply(a, b);
            assert!((ab.norm() - a.norm() * b.norm()).abs() < 1e-10);
        }
    }

    #[test]
    fn table_matches_direct_products() {
        let table = basis_product_table();
        for r in 0..8 {
            for c in 0..8 {
                let (idx, sign) = table[r][c];
                let direct = octonion_multiply(Octonion::<i64>::basis(r), Octonion::<i64>::basis(c));
                let expected = if sign == 1 {
                    Octonion::basis(idx)
                } else {
                    Octonion::basis(idx).neg()
                };
                assert_eq!(to_f64(direct), to_f64(expected));
            }
        }
    }
}
