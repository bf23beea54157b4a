//! Levi-Civita product of a metric Lie algebra, curvature, the Milnor
//! flatness criterion, and Kähler forms.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::algebra::{LieAlgebra, Metric, TwoForm};
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, scaled, sub_vec, unit, Matrix, Subspace};
use crate::scalar::{Mode, Rational, Scalar};

/// Bilinear product `A_{e_i} e_j = Σ_k a[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Product<F> {
    n: usize,
    a: Vec<F>,
}

impl<F: Scalar> Product<F> {
    pub fn zero(n: usize) -> Self {
        Product {
            n,
            a: vec![F::zero(); n * n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F {
        &self.a[(i * self.n + j) * self.n + k]
    }

    /// `A_{e_i} e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<F> {
        let s = (i * self.n + j) * self.n;
        self.a[s..s + self.n].to_vec()
    }

    pub fn apply(&self, u: &[F], v: &[F]) -> Vec<F> {
        let n = self.n;
        let mut out = vec![F::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let s = u[i].clone() * v[j].clone();
                add_scaled(&mut out, &s, &self.a[(i * n + j) * n..(i * n + j + 1) * n]);
            }
        }
        out
    }

    /// Matrix of `v ↦ A_u v`.
    pub fn operator(&self, u: &[F]) -> Matrix<F> {
        let n = self.n;
        Matrix::from_columns(n, &(0..n).map(|j| self.apply(u, &unit(n, j))).collect::<Vec<_>>())
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Scalar::is_zero)
    }

    /// Largest `|A_{ij}^k − A_{ji}^k − c_{ij}^k|`.
    pub fn torsion_residual(&self, g: &LieAlgebra<F>) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let r = self.get(i, j, k).clone() - self.get(j, i, k).clone() - g.constant(i, j, k).clone();
                    worst = worst.max(r.magnitude());
                }
            }
        }
        worst
    }

    pub fn is_torsion_free(&self, g: &LieAlgebra<F>) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    (self.get(i, j, k).clone() - self.get(j, i, k).clone() - g.constant(i, j, k).clone())
                        .is_zero()
                })
            })
        })
    }

    /// Largest `|ρ(A_{e_i}e_j, e_k) + ρ(e_j, A_{e_i}e_k)|`.
    pub fn compatibility_residual(&self, rho: &Metric<F>) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            let m = rho.matrix().mul(&self.operator(&unit(n, i)));
            let s = m.add(&m.transpose());
            for j in 0..n {
                for k in 0..n {
                    worst = worst.max(s[(j, k)].magnitude());
                }
            }
        }
        worst
    }

    pub fn is_metric(&self, rho: &Metric<F>) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            let m = rho.matrix().mul(&self.operator(&unit(n, i)));
            m.add(&m.transpose()).is_zero()
        })
    }
}

/// Solves `2ρ(A_u v, w) = ρ([u,v],w) + ρ([w,u],v) + ρ([w,v],u)` on the basis.
pub fn levi_civita<F: Scalar>(g: &LieAlgebra<F>, rho: &Metric<F>) -> Product<F> {
    let n = g.dim();
    let inv = rho.dual();
    let half = F::ratio(1, 2);
    let mut a = vec![F::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let (ei, ej) = (unit::<F>(n, i), unit::<F>(n, j));
            let uv = g.basis_bracket(i, j);
            let rhs: Vec<F> = (0..n)
                .map(|k| {
                    let ek = unit::<F>(n, k);
                    half.clone()
                        * (rho.eval(&uv, &ek)
                            + rho.eval(&g.basis_bracket(k, i), &ej)
                            + rho.eval(&g.basis_bracket(k, j), &ei))
                })
                .collect();
            let x = inv.matrix().mul_vec(&rhs);
            a[(i * n + j) * n..(i * n + j + 1) * n].clone_from_slice(&x);
        }
    }
    Product { n, a }
}

/// Dimension of the space of products `B` with `B_u v = B_v u` and every
/// `B_u` ρ-skew. A torsion-free metric product is unique iff this is zero.
pub fn uniqueness_kernel_dim<F: Scalar>(rho: &Metric<F>) -> usize {
    let n = rho.dim();
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = vec![F::zero(); n * n * n];
                row[idx(i, j, k)] = F::one();
                row[idx(j, i, k)] = -F::one();
                rows.push(row);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                // Σ_l B_{ij}^l ρ_{lk} + B_{ik}^l ρ_{jl}
                let mut row = vec![F::zero(); n * n * n];
                for l in 0..n {
                    row[idx(i, j, l)] = row[idx(i, j, l)].clone() + rho.matrix()[(l, k)].clone();
                    row[idx(i, k, l)] = row[idx(i, k, l)].clone() + rho.matrix()[(j, l)].clone();
                }
                rows.push(row);
            }
        }
    }
    n * n * n - Matrix::from_rows(rows).rank()
}

/// `R(e_i, e_j) e_k = A_i A_j e_k − A_j A_i e_k − A_{[e_i,e_j]} e_k`, stored
/// as `r[((i n + j) n + k) n + l]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Curvature<F> {
    n: usize,
    r: Vec<F>,
}

impl<F: Scalar> Curvature<F> {
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &F {
        &self.r[((i * self.n + j) * self.n + k) * self.n + l]
    }

    pub fn is_zero(&self) -> bool {
        self.r.iter().all(Scalar::is_zero)
    }
}

pub fn curvature<F: Scalar>(g: &LieAlgebra<F>, a: &Product<F>) -> Curvature<F> {
    let n = g.dim();
    let ops: Vec<Matrix<F>> = (0..n).map(|i| a.operator(&unit(n, i))).collect();
    let mut r = Vec::with_capacity(n * n * n * n);
    for i in 0..n {
        for j in 0..n {
            let m = ops[i]
                .mul(&ops[j])
                .sub(&ops[j].mul(&ops[i]))
                .sub(&a.operator(&g.basis_bracket(i, j)));
            for k in 0..n {
                r.extend(m.column(k));
            }
        }
    }
    Curvature { n, r }
}

pub fn is_flat<F: Scalar>(g: &LieAlgebra<F>, a: &Product<F>) -> bool {
    curvature(g, a).is_zero()
}

#[derive(Clone, Debug, PartialEq)]
pub struct MilnorReport<F> {
    pub flat: bool,
    pub derived_ideal_basis: Vec<Vec<F>>,
    pub orthocomplement_basis: Vec<Vec<F>>,
}

/// Space of `u` with `ad_u` skew-adjoint for ρ.
pub fn skew_ad_space<F: Scalar>(g: &LieAlgebra<F>, rho: &Metric<F>) -> Subspace<F> {
    let n = g.dim();
    // ρ ad_u + ad_uᵀ ρ is linear in u; stack its entries as equations.
    let mats: Vec<Matrix<F>> = (0..n)
        .map(|m| {
            let ad = g.ad(&unit(n, m)).expect("basis vector");
            let x = rho.matrix().mul(&ad);
            x.add(&x.transpose())
        })
        .collect();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            rows.push((0..n).map(|m| mats[m][(i, j)].clone()).collect::<Vec<F>>());
        }
    }
    Subspace::span(n, &Matrix::from_rows(rows).kernel())
}

/// Flatness through the structure of a flat metric Lie algebra: `[𝔤,𝔤]` is
/// even-dimensional abelian, its orthocomplement is abelian and coincides
/// with the space of `u` whose `ad_u` is skew.
pub fn milnor_flat_check<F: Scalar>(g: &LieAlgebra<F>, rho: &Metric<F>) -> MilnorReport<F> {
    let n = g.dim();
    let d = Subspace::span(n, &g.derived_span());
    let p = d.orthogonal(rho.matrix());
    let abelian = |s: &Subspace<F>| {
        let b = s.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| g.bracket(&b[i], &b[j]).iter().all(Scalar::is_zero)))
    };
    let flat = d.dim() % 2 == 0 && abelian(&d) && abelian(&p) && skew_ad_space(g, rho) == p;
    MilnorReport {
        flat,
        derived_ideal_basis: d.basis().to_vec(),
        orthocomplement_basis: p.basis().to_vec(),
    }
}

/// First basis triple `(i, j, k)` with `ω(A_i e_j, e_k) + ω(e_j, A_i e_k) ≠ 0`.
pub fn kahler_violation<F: Scalar>(a: &Product<F>, omega: &TwoForm<F>) -> Option<(usize, usize, usize, F)> {
    let n = a.dim();
    for i in 0..n {
        let m = a.operator(&unit(n, i));
        let s = m.transpose().mul(omega.matrix()).add(&omega.matrix().mul(&m));
        for j in 0..n {
            for k in 0..n {
                if !s[(j, k)].is_zero() {
                    return Some((i, j, k, s[(j, k)].clone()));
                }
            }
        }
    }
    None
}

/// Whether ω is parallel for the Levi-Civita product:
/// `ω(A_u v, w) + ω(v, A_u w) = 0`.
pub fn kahler_check<F: Scalar>(g: &LieAlgebra<F>, rho: &Metric<F>, omega: &Matrix<F>) -> Result<bool> {
    let form = TwoForm::new(omega.clone())?;
    let a = levi_civita(g, rho);
    Ok(kahler_violation(&a, &form).is_none())
}

/// ρ-orthogonal (not normalized) basis of a subspace.
pub fn orthogonal_basis<F: Scalar>(vectors: &[Vec<F>], rho: &Metric<F>) -> Vec<Vec<F>> {
    let mut out: Vec<Vec<F>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &out {
            let c = rho.eval(&w, b) / rho.eval(b, b);
            w = sub_vec(&w, &scaled(&c, b));
        }
        if !w.iter().all(Scalar::is_zero) {
            out.push(w);
        }
    }
    out
}

const PRIMES: [i64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// A Kähler form on an even-dimensional flat metric Lie algebra.
///
/// The derived ideal `D` splits into 2-planes invariant under every `ad_b`
/// with `b ⊥ D`; ω is the sum of their area forms plus a standard form on
/// `D^⊥`. The planes come from eigenspaces of `ad_{a*}²|_D` for a generic
/// `a* = Σ b_i / p_i`.
pub fn flat_kahler_form<F: Scalar>(g: &LieAlgebra<F>, rho: &Metric<F>) -> Result<TwoForm<F>> {
    let n = g.dim();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let report = milnor_flat_check(g, rho);
    if !report.flat {
        return Err(Error::NotFlat);
    }
    let perp = orthogonal_basis(&report.orthocomplement_basis, rho);
    let d_basis = report.derived_ideal_basis.clone();
    let mut last = Error::AdaptedBasis("no generic element found".into());
    for shift in 0..PRIMES.len() - perp.len().min(PRIMES.len() - 1) {
        let mut a_star = vec![F::zero(); n];
        for (i, b) in perp.iter().enumerate() {
            add_scaled(&mut a_star, &F::ratio(1, PRIMES[i + shift]), b);
        }
        match adapted_planes(g, rho, &d_basis, &a_star) {
            Ok(planes) => {
                let mut cols: Vec<Vec<F>> = perp.clone();
                for (e, f) in planes {
                    cols.push(e);
                    cols.push(f);
                }
                let b = Matrix::from_columns(n, &cols);
                let binv = b.inverse().ok_or_else(|| Error::AdaptedBasis("adapted basis is singular".into()))?;
                let mut std = Matrix::<F>::zeros(n, n);
                for k in 0..n / 2 {
                    std[(2 * k, 2 * k + 1)] = F::one();
                    std[(2 * k + 1, 2 * k)] = -F::one();
                }
                let w = binv.transpose().mul(&std).mul(&binv);
                let form = TwoForm::new(w)?;
                if kahler_violation(&levi_civita(g, rho), &form).is_none() {
                    return Ok(form);
                }
                last = Error::AdaptedBasis("constructed form is not parallel".into());
            }
            Err(e @ Error::NonRationalWeights(_)) => return Err(e),
            Err(e) => last = e,
        }
    }
    Err(last)
}

fn adapted_planes<F: Scalar>(
    g: &LieAlgebra<F>,
    rho: &Metric<F>,
    d_basis: &[Vec<F>],
    a_star: &[F],
) -> Result<Vec<(Vec<F>, Vec<F>)>> {
    let n = g.dim();
    let k = d_basis.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let d = Subspace::span(n, d_basis);
    // Matrix of T = ad_{a*}|_D in the basis of D.
    let t_cols: Vec<Vec<F>> = d
        .basis()
        .iter()
        .map(|b| d.coordinates(&g.bracket(a_star, b)).expect("D is an ideal"))
        .collect();
    let t = Matrix::from_columns(k, &t_cols);
    let t2 = t.mul(&t);
    // Over the rationals L·T² has integer entries for L the common
    // denominator, so its rational eigenvalues are integers.
    let lcm = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter_map(|(i, j)| t2[(i, j)].to_rational())
        .fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let l = F::from_rational(&Rational::from_integer(lcm.clone()));
    let approx = DMatrix::from_fn(k, k, |i, j| -(t2[(i, j)].clone() * l.clone()).to_f64());
    let mut values: Vec<f64> = approx.complex_eigenvalues().iter().map(|z| z.re).collect();
    values.sort_by(|a, b| a.total_cmp(b));
    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut clusters: Vec<f64> = Vec::new();
    for v in values {
        let v = if F::MODE == Mode::Rational { v.round() } else { v };
        if clusters.last().is_none_or(|c| (v - c).abs() > 1e-6 * scale) {
            clusters.push(v);
        }
    }
    let mut planes = Vec::new();
    let mut covered = 0;
    for mu in clusters {
        if mu.abs() <= 1e-9 * scale {
            return Err(Error::AdaptedBasis("generic element has a kernel on D".into()));
        }
        let mu_f = match F::MODE {
            Mode::Rational => {
                if mu.abs() >= 2f64.powi(53) {
                    return Err(Error::NonRationalWeights(format!("{mu} exceeds float precision")));
                }
                F::from_rational(&Rational::new(BigInt::from(mu as i64), lcm.clone()))
            }
            Mode::Float => F::from_f64(mu),
        };
        let shifted = t2.add(&Matrix::identity(k).scale(&mu_f));
        let kernel = shifted.kernel();
        if kernel.is_empty() {
            return Err(match F::MODE {
                Mode::Rational => Error::NonRationalWeights(format!("{mu}")),
                Mode::Float => Error::AdaptedBasis(format!("no eigenvectors for {mu}")),
            });
        }
        // Split the eigenspace into T-invariant planes span{e, Te}.
        let to_g = |c: &[F]| d.combine(c);
        let mut space: Vec<Vec<F>> = kernel.iter().map(|c| to_g(c)).collect();
        while !space.is_empty() {
            let e = space[0].clone();
            let te = g.bracket(a_star, &e);
            let plane = [e.clone(), te.clone()];
            let mut next = Vec::new();
            for v in space.iter().skip(1) {
                let mut w = v.clone();
                for b in orthogonal_basis(&plane, rho) {
                    let c = rho.eval(&w, &b) / rho.eval(&b, &b);
                    w = sub_vec(&w, &scaled(&c, &b));
                }
                next.push(w);
            }
            space = orthogonal_basis(&next, rho);
            let f = scaled(&(F::one() / mu_f.clone()), &te);
            planes.push((e, f));
            covered += 2;
            if covered > k {
                return Err(Error::AdaptedBasis("eigenspaces overlap".into()));
            }
        }
    }
    if covered != k {
        return Err(match F::MODE {
            Mode::Rational => Error::NonRationalWeights("squared weights are not all rational".into()),
            Mode::Float => Error::AdaptedBasis("eigenspaces do not span D".into()),
        });
    }
    Ok(planes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Bivector;
    use crate::scalar::{Approx, Rational};

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    // Independent oracle: solves the Koszul system for one pair by Gaussian
    // elimination on the full n×n system rather than via ρ⁻¹.
    fn koszul_oracle(g: &LieAlgebra<Q>, rho: &Metric<Q>, i: usize, j: usize) -> Vec<Q> {
        let n = g.dim();
        let e = |k| unit::<Q>(n, k);
        let rhs: Vec<Q> = (0..n)
            .map(|k| {
                (rho.eval(&g.bracket(&e(i), &e(j)), &e(k))
                    + rho.eval(&g.bracket(&e(k), &e(i)), &e(j))
                    + rho.eval(&g.bracket(&e(k), &e(j)), &e(i)))
                    / q(2)
            })
            .collect();
        rho.matrix().solve(&rhs).unwrap()
    }

    fn aff2() -> LieAlgebra<Q> {
        LieAlgebra::from_int_brackets(2, &[(1, 2, &[(1, 1)])])
    }

    fn so3() -> LieAlgebra<Q> {
        LieAlgebra::from_int_brackets(3, &[(1, 2, &[(3, 1)]), (2, 3, &[(1, 1)]), (3, 1, &[(2, 1)])])
    }

    /// `[a, e1] = f1, [a, f1] = −e1`, basis order (a, b, e1, f1).
    fn flat4() -> LieAlgebra<Q> {
        LieAlgebra::from_int_brackets(4, &[(1, 3, &[(4, 1)]), (1, 4, &[(3, -1)])])
    }

    #[test]
    fn levi_civita_examples() {
        let ab = LieAlgebra::<Q>::abelian(3);
        let rho = Metric::diag(&[q(1), q(2), q(5)]).unwrap();
        assert!(levi_civita(&ab, &rho).is_zero());

        let a = levi_civita(&aff2(), &Metric::identity(2));
        assert_eq!(a.basis_product(0, 0), vec![q(0), q(-1)]);
        assert_eq!(a.basis_product(0, 1), vec![q(1), q(0)]);
        assert_eq!(a.basis_product(1, 0), vec![q(0), q(0)]);
        assert_eq!(a.basis_product(1, 1), vec![q(0), q(0)]);

        let g = so3();
        let a = levi_civita(&g, &Metric::identity(3));
        for i in 0..3 {
            for j in 0..3 {
                let half: Vec<Q> = g.basis_bracket(i, j).into_iter().map(|x| x / q(2)).collect();
                assert_eq!(a.basis_product(i, j), half);
            }
        }
    }

    #[test]
    fn levi_civita_matches_oracle_and_invariants() {
        let g = LieAlgebra::<Q>::from_int_brackets(
            4,
            &[(1, 2, &[(2, 1)]), (1, 3, &[(3, 2), (4, 1)]), (1, 4, &[(4, -1)])],
        );
        assert!(g.jacobi().holds);
        let rho = Metric::new(Matrix::from_rows(vec![
            vec![q(2), q(1), q(0), q(0)],
            vec![q(1), q(3), q(0), q(1)],
            vec![q(0), q(0), q(1), q(0)],
            vec![q(0), q(1), q(0), q(4)],
        ]))
        .unwrap();
        let a = levi_civita(&g, &rho);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a.basis_product(i, j), koszul_oracle(&g, &rho, i, j));
            }
        }
        assert!(a.is_torsion_free(&g));
        assert!(a.is_metric(&rho));
        assert_eq!(a.torsion_residual(&g), 0.0);
        assert_eq!(a.compatibility_residual(&rho), 0.0);
        assert_eq!(uniqueness_kernel_dim(&rho), 0);
    }

    #[test]
    fn curvature_examples() {
        let ab = LieAlgebra::<Q>::abelian(3);
        assert!(is_flat(&ab, &levi_civita(&ab, &Metric::identity(3))));
        let g = so3();
        assert!(!is_flat(&g, &levi_civita(&g, &Metric::identity(3))));
        let g = flat4();
        assert!(is_flat(&g, &levi_civita(&g, &Metric::identity(4))));
        let g = aff2();
        assert!(!is_flat(&g, &levi_civita(&g, &Metric::identity(2))));
    }

    #[test]
    fn milnor_examples() {
        let r = milnor_flat_check(&LieAlgebra::<Q>::abelian(4), &Metric::identity(4));
        assert!(r.flat);
        assert!(r.derived_ideal_basis.is_empty());

        let r = milnor_flat_check(&flat4(), &Metric::identity(4));
        assert!(r.flat);
        assert_eq!(
            Subspace::span(4, &r.derived_ideal_basis),
            Subspace::span(4, &[unit(4, 2), unit(4, 3)])
        );

        assert!(!milnor_flat_check(&aff2(), &Metric::identity(2)).flat);
        assert!(!milnor_flat_check(&so3(), &Metric::identity(3)).flat);
    }

    #[test]
    fn kahler_examples() {
        let ab = LieAlgebra::<Q>::abelian(4);
        let w = TwoForm::from_terms(4, &[(0, 2, q(1)), (1, 3, q(3))]).unwrap();
        assert_eq!(kahler_check(&ab, &Metric::diag(&[q(1), q(2), q(3), q(4)]).unwrap(), w.matrix()), Ok(true));

        let degenerate = TwoForm::<Q>::from_terms(4, &[(0, 1, q(1))]);
        assert_eq!(degenerate, Err(Error::DegenerateForm));
        let bad = Bivector::from_terms(4, &[(0, 1, q(1))]).unwrap();
        assert_eq!(kahler_check(&ab, &Metric::identity(4), bad.matrix()), Err(Error::DegenerateForm));

        // [e1,e2] = e2 with ω = e1*∧e3* + e2*∧e4*, identity metric: brute
        // force every triple through the product.
        let g = LieAlgebra::<Q>::from_int_brackets(4, &[(1, 2, &[(2, 1)])]);
        let w = TwoForm::from_terms(4, &[(0, 2, q(1)), (1, 3, q(1))]).unwrap();
        let rho = Metric::identity(4);
        let a = levi_civita(&g, &rho);
        let mut oracle = true;
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let s = w.eval(&a.basis_product(i, j), &unit(4, k)) + w.eval(&unit(4, j), &a.basis_product(i, k));
                    oracle &= s.is_zero();
                }
            }
        }
        assert_eq!(kahler_check(&g, &rho, w.matrix()), Ok(oracle));
    }

    #[test]
    fn flat_kahler_examples() {
        let ab = LieAlgebra::<Q>::abelian(4);
        let w = flat_kahler_form(&ab, &Metric::identity(4)).unwrap();
        assert_eq!(kahler_check(&ab, &Metric::identity(4), w.matrix()), Ok(true));

        let g = flat4();
        let rho = Metric::identity(4);
        let w = flat_kahler_form(&g, &rho).unwrap();
        assert_eq!(kahler_check(&g, &rho, w.matrix()), Ok(true));
        let expected = TwoForm::from_terms(4, &[(0, 1, q(1)), (2, 3, q(1))]).unwrap();
        assert_eq!(kahler_check(&g, &rho, expected.matrix()), Ok(true));

        // Six dimensions, two weights: [a, e_i] = λ_i f_i, [a, f_i] = −λ_i e_i.
        let g = LieAlgebra::<Q>::from_int_brackets(
            6,
            &[(1, 3, &[(4, 2)]), (1, 4, &[(3, -2)]), (1, 5, &[(6, 3)]), (1, 6, &[(5, -3)])],
        );
        let rho = Metric::diag(&[q(1), q(2), q(1), q(1), q(5), q(5)]).unwrap();
        let w = flat_kahler_form(&g, &rho).unwrap();
        assert_eq!(kahler_check(&g, &rho, w.matrix()), Ok(true));

        assert_eq!(flat_kahler_form(&so3(), &Metric::identity(3)), Err(Error::OddDimension(3)));
        let nf = LieAlgebra::<Q>::from_int_brackets(4, &[(1, 2, &[(2, 1)])]);
        assert_eq!(flat_kahler_form(&nf, &Metric::identity(4)), Err(Error::NotFlat));
    }

    #[test]
    fn flat_kahler_float_mode() {
        let g = LieAlgebra::<Approx>::from_int_brackets(4, &[(1, 3, &[(4, 1)]), (1, 4, &[(3, -1)])]);
        let rho = Metric::identity(4);
        let w = flat_kahler_form(&g, &rho).unwrap();
        assert_eq!(kahler_check(&g, &rho, w.matrix()), Ok(true));
    }
}
