//! Two-dimensional subalgebras of sl(2,ℝ).
//!
//! Coordinates are taken in the basis `(h, e, f)` with `h = diag(1, −1)`,
//! `e = E₁₂`, `f = E₂₁`. A plane is described by its normal covector `n`
//! (the kernel of the 2×3 coordinate matrix); it is a subalgebra exactly
//! when `n_h² + 4 n_e n_f = 0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Subalgebra<F> {
    gens: [Matrix<F>; 2],
}

#[derive(Clone, Debug, PartialEq)]
pub enum Sl2Class<F> {
    /// Upper-triangular traceless matrices.
    G1,
    /// Lower-triangular traceless matrices.
    G2,
    /// `{[[α, (2β−α)/x], [(α+2β)x, −α]]}`.
    Gx(F),
    NotSubalgebra,
}

impl<F: fmt::Display> fmt::Display for Sl2Class<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sl2Class::G1 => write!(f, "g1"),
            Sl2Class::G2 => write!(f, "g2"),
            Sl2Class::Gx(x) => write!(f, "g_x(x = {x})"),
            Sl2Class::NotSubalgebra => write!(f, "not a subalgebra"),
        }
    }
}

/// Coordinates of a traceless matrix in `(h, e, f)`.
pub fn coordinates<F: Scalar>(m: &Matrix<F>) -> Vec<F> {
    vec![m[(0, 0)].clone(), m[(0, 1)].clone(), m[(1, 0)].clone()]
}

pub fn from_coordinates<F: Scalar>(c: &[F]) -> Matrix<F> {
    Matrix::from_rows(vec![vec![c[0].clone(), c[1].clone()], vec![c[2].clone(), -c[0].clone()]])
}

/// The two generators of `g_x` given by `(α, β) = (1, 0)` and `(0, 1)`.
pub fn gx_generators<F: Scalar>(x: &F) -> [Matrix<F>; 2] {
    let inv = F::one() / x.clone();
    let two = F::from_i64(2);
    [
        from_coordinates(&[F::one(), -inv.clone(), x.clone()]),
        from_coordinates(&[F::zero(), two.clone() * inv, two * x.clone()]),
    ]
}

impl<F: Scalar> Sl2Subalgebra<F> {
    pub fn new(a: Matrix<F>, b: Matrix<F>) -> Result<Self> {
        for m in [&a, &b] {
            if m.rows() != 2 || m.cols() != 2 {
                return Err(Error::InvalidGenerators("generators must be 2×2".into()));
            }
            if !(m[(0, 0)].clone() + m[(1, 1)].clone()).is_zero() {
                return Err(Error::InvalidGenerators("generator is not traceless".into()));
            }
        }
        if Matrix::from_rows(vec![coordinates(&a), coordinates(&b)]).rank() != 2 {
            return Err(Error::InvalidGenerators("generators are linearly dependent".into()));
        }
        Ok(Sl2Subalgebra { gens: [a, b] })
    }

    pub fn gx(x: &F) -> Self {
        let [a, b] = gx_generators(x);
        Sl2Subalgebra { gens: [a, b] }
    }

    pub fn generators(&self) -> &[Matrix<F>; 2] {
        &self.gens
    }

    pub fn span(&self) -> Subspace<F> {
        Subspace::span(3, &[coordinates(&self.gens[0]), coordinates(&self.gens[1])])
    }

    /// `span{p a + q b, r a + s b}`.
    pub fn recombine(&self, p: &F, q: &F, r: &F, s: &F) -> Result<Self> {
        let [a, b] = &self.gens;
        Sl2Subalgebra::new(a.scale(p).add(&b.scale(q)), a.scale(r).add(&b.scale(s)))
    }

    /// Normal covector of the plane in `(h, e, f)` coordinates.
    pub fn normal(&self) -> Vec<F> {
        let u = coordinates(&self.gens[0]);
        let v = coordinates(&self.gens[1]);
        let cross = |i: usize, j: usize| u[i].clone() * v[j].clone() - u[j].clone() * v[i].clone();
        vec![cross(1, 2), cross(2, 0), cross(0, 1)]
    }
}

pub fn is_subalgebra<F: Scalar>(s: &Sl2Subalgebra<F>) -> bool {
    let [a, b] = s.generators();
    s.span().contains(&coordinates(&a.commutator(b)))
}

pub fn classify<F: Scalar>(s: &Sl2Subalgebra<F>) -> Sl2Class<F> {
    if !is_subalgebra(s) {
        return Sl2Class::NotSubalgebra;
    }
    let n = s.normal();
    let (nh, ne, nf) = (&n[0], &n[1], &n[2]);
    if nh.is_zero() && ne.is_zero() {
        Sl2Class::G1
    } else if nh.is_zero() && nf.is_zero() {
        Sl2Class::G2
    } else {
        // n ∝ (−2x, −x², 1) for g_x.
        Sl2Class::Gx(-nh.clone() / (F::from_i64(2) * nf.clone()))
    }
}
