//! Lie algebras given by structure constants, bivectors, metrics, and the
//! bracket calculus built on them: the Yang-Baxter bracket `[r,r]`, the
//! dual bracket `[α,β]_r` on 𝔤*, coadjoint action and index raising.
//!
//! Vectors of 𝔤 and covectors of 𝔤* are both plain coordinate slices; the
//! covector basis is the dual basis `e1*, …, en*`.

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, dot, unit, Matrix};
use crate::scalar::Scalar;

/// Finite-dimensional Lie algebra: `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
///
/// The constructor enforces antisymmetry only; the Jacobi identity is checked
/// separately by [`LieAlgebra::jacobi`], so the same type also carries
/// bracket *candidates*.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<F> {
    dim: usize,
    c: Vec<F>,
    labels: Vec<String>,
}

/// One nonzero Jacobi residual at basis indices `(i, j, k)`, component `l`.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiViolation<F> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub residual: F,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiReport<F> {
    pub holds: bool,
    pub violations: Vec<JacobiViolation<F>>,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl<F: Scalar> LieAlgebra<F> {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            c: vec![F::zero(); dim * dim * dim],
            labels: default_labels(dim),
        }
    }

    /// Builds from a dense `c[i][j][k]` array.
    pub fn from_constants(dim: usize, c: Vec<F>) -> Result<Self> {
        if c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: c.len(),
            });
        }
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    let a = &c[(i * dim + j) * dim + k];
                    let b = &c[(j * dim + i) * dim + k];
                    if !(a.clone() + b.clone()).is_zero() {
                        return Err(Error::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(LieAlgebra {
            dim,
            c,
            labels: default_labels(dim),
        })
    }

    /// Builds from the brackets `[e_i, e_j] = v` for `i ≠ j`; each pair is
    /// expanded antisymmetrically. Indices are 0-based.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vec<F>)]) -> Result<Self> {
        let mut c = vec![F::zero(); dim * dim * dim];
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: i.max(j) + 1,
                });
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
            if i == j {
                if v.iter().all(Scalar::is_zero) {
                    continue;
                }
                return Err(Error::NotAntisymmetric { i, j, k: 0 });
            }
            for k in 0..dim {
                let s = (i * dim + j) * dim + k;
                let t = (j * dim + i) * dim + k;
                c[s] = c[s].clone() + v[k].clone();
                c[t] = c[t].clone() - v[k].clone();
            }
        }
        Ok(LieAlgebra {
            dim,
            c,
            labels: default_labels(dim),
        })
    }

    /// Same as [`from_brackets`](Self::from_brackets) with integer
    /// coefficients and 1-based indices, convenient for hand-written algebras.
    pub fn from_int_brackets(dim: usize, brackets: &[(usize, usize, &[(usize, i64)])]) -> Self {
        let list: Vec<(usize, usize, Vec<F>)> = brackets
            .iter()
            .map(|(i, j, terms)| {
                let mut v = vec![F::zero(); dim];
                for &(k, x) in terms.iter() {
                    v[k - 1] = v[k - 1].clone() + F::from_i64(x);
                }
                (i - 1, j - 1, v)
            })
            .collect();
        Self::from_brackets(dim, &list).expect("hand-written brackets are well formed")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `c_{ij}^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[F] {
        &self.c
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<F> {
        let start = (i * self.dim + j) * self.dim;
        self.c[start..start + self.dim].to_vec()
    }

    pub fn bracket(&self, u: &[F], v: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() || i == j {
                    continue;
                }
                let s = u[i].clone() * v[j].clone();
                add_scaled(&mut out, &s, &self.c[(i * n + j) * n..(i * n + j + 1) * n]);
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// Brute-force check of every Jacobi residual
    /// `Σ_m c_{ij}^m c_{mk}^l + c_{jk}^m c_{mi}^l + c_{ki}^m c_{mj}^l`.
    pub fn jacobi(&self) -> JacobiReport<F> {
        let n = self.dim;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in 0..n {
                        let mut s = F::zero();
                        for m in 0..n {
                            s = s
                                + self.constant(i, j, m).clone() * self.constant(m, k, l).clone()
                                + self.constant(j, k, m).clone() * self.constant(m, i, l).clone()
                                + self.constant(k, i, m).clone() * self.constant(m, j, l).clone();
                        }
                        if !s.is_zero() {
                            violations.push(JacobiViolation {
                                i,
                                j,
                                k,
                                l,
                                residual: s,
                            });
                        }
                    }
                }
            }
        }
        JacobiReport {
            holds: violations.is_empty(),
            violations,
        }
    }

    pub fn require_jacobi(&self) -> Result<()> {
        match self.jacobi().violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::NotLieAlgebra(v.i + 1, v.j + 1, v.k + 1)),
        }
    }

    /// Matrix of `v ↦ [u, v]`.
    pub fn ad(&self, u: &[F]) -> Result<Matrix<F>> {
        self.check_len(u)?;
        let n = self.dim;
        Ok(Matrix::from_columns(
            n,
            &(0..n).map(|j| self.bracket(u, &unit(n, j))).collect::<Vec<_>>(),
        ))
    }

    /// Matrix of the coadjoint action on 𝔤*, `⟨ad*_u α, v⟩ = −⟨α, [u, v]⟩`;
    /// equal to `−ad(u)ᵀ`.
    pub fn coad(&self, u: &[F]) -> Result<Matrix<F>> {
        Ok(self.ad(u)?.transpose().scale(&-F::one()))
    }

    pub fn coad_apply(&self, u: &[F], alpha: &[F]) -> Vec<F> {
        let n = self.dim;
        (0..n)
            .map(|k| -dot(alpha, &self.bracket(u, &unit(n, k))))
            .collect()
    }

    /// Derived ideal `[𝔤, 𝔤]`.
    pub fn derived_span(&self) -> Vec<Vec<F>> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                out.push(self.basis_bracket(i, j));
            }
        }
        out
    }

    /// Structure constants after a change of basis: the new basis vectors are
    /// the columns of `p` (expressed in the old basis).
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<Self> {
        let n = self.dim;
        let inv = p.inverse().ok_or(Error::DimensionMismatch {
            expected: n,
            got: p.rank(),
        })?;
        let cols: Vec<Vec<F>> = (0..n).map(|j| p.column(j)).collect();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let b = self.bracket(&cols[i], &cols[j]);
                brackets.push((i, j, inv.mul_vec(&b)));
            }
        }
        Self::from_brackets(n, &brackets)
    }

    fn check_len(&self, u: &[F]) -> Result<()> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: u.len(),
            });
        }
        Ok(())
    }
}

/// Antisymmetric `r^{ij}`, representing `r = Σ_{i<j} r^{ij} e_i ∧ e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bivector<F> {
    r: Matrix<F>,
}

impl<F: Scalar> Bivector<F> {
    pub fn new(r: Matrix<F>) -> Result<Self> {
        if !r.is_antisymmetric() {
            return Err(Error::BivectorNotAntisymmetric);
        }
        Ok(Bivector { r })
    }

    pub fn zero(n: usize) -> Self {
        Bivector {
            r: Matrix::zeros(n, n),
        }
    }

    /// From `(i, j, coefficient)` terms meaning `coefficient · e_i ∧ e_j`
    /// (0-based).
    pub fn from_terms(n: usize, terms: &[(usize, usize, F)]) -> Result<Self> {
        let mut r = Matrix::<F>::zeros(n, n);
        for (i, j, x) in terms {
            if *i >= n || *j >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: (*i).max(*j) + 1,
                });
            }
            if i == j {
                return Err(Error::BivectorNotAntisymmetric);
            }
            r[(*i, *j)] = r[(*i, *j)].clone() + x.clone();
            r[(*j, *i)] = r[(*j, *i)].clone() - x.clone();
        }
        Ok(Bivector { r })
    }

    /// `u ∧ v = u ⊗ v − v ⊗ u`.
    pub fn wedge(u: &[F], v: &[F]) -> Self {
        let n = u.len();
        Bivector {
            r: Matrix::from_fn(n, n, |i, j| {
                u[i].clone() * v[j].clone() - v[i].clone() * u[j].clone()
            }),
        }
    }

    pub fn dim(&self) -> usize {
        self.r.rows()
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.r
    }

    pub fn entry(&self, i: usize, j: usize) -> &F {
        &self.r[(i, j)]
    }

    pub fn add(&self, other: &Bivector<F>) -> Bivector<F> {
        Bivector {
            r: self.r.add(&other.r),
        }
    }

    pub fn scale(&self, s: &F) -> Bivector<F> {
        Bivector { r: self.r.scale(s) }
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    /// `r(α, β) = Σ α_i β_j r^{ij}`.
    pub fn eval(&self, alpha: &[F], beta: &[F]) -> F {
        self.r.form(alpha, beta)
    }

    pub fn rank(&self) -> usize {
        self.r.rank()
    }
}

/// Matrix of `r_# : 𝔤* → 𝔤`, fixed by `⟨β, r_#(α)⟩ = r(α, β)`.
pub fn r_sharp<F: Scalar>(r: &Bivector<F>) -> Matrix<F> {
    r.matrix().transpose()
}

pub fn r_sharp_apply<F: Scalar>(r: &Bivector<F>, alpha: &[F]) -> Vec<F> {
    r.matrix().transpose().mul_vec(alpha)
}

/// Totally antisymmetric `T^{ijk}`, values on basis triples of 𝔤*.
#[derive(Clone, Debug, PartialEq)]
pub struct Trivector<F> {
    n: usize,
    t: Vec<F>,
}

impl<F: Scalar> Trivector<F> {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &F {
        &self.t[(i * self.n + j) * self.n + k]
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(Scalar::is_zero)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// First nonzero component `(i, j, k, value)` with `i < j < k`.
    pub fn first_nonzero(&self) -> Option<(usize, usize, usize, F)> {
        let n = self.n;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let x = self.get(i, j, k);
                    if !x.is_zero() {
                        return Some((i, j, k, x.clone()));
                    }
                }
            }
        }
        None
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let x = self.get(i, j, k).clone();
                    (x.clone() + self.get(j, i, k).clone()).is_zero()
                        && (x.clone() + self.get(i, k, j).clone()).is_zero()
                        && (x + self.get(k, j, i).clone()).is_zero()
                })
            })
        })
    }
}

/// `[r,r](α,β,γ) = ⟨α,[r_#β, r_#γ]⟩ + ⟨β,[r_#γ, r_#α]⟩ + ⟨γ,[r_#α, r_#β]⟩`
/// on every basis triple.
pub fn yang_baxter_bracket<F: Scalar>(g: &LieAlgebra<F>, r: &Bivector<F>) -> Trivector<F> {
    let n = g.dim();
    let images: Vec<Vec<F>> = (0..n).map(|i| r_sharp_apply(r, &unit(n, i))).collect();
    // [r_# e_i*, r_# e_j*] for all i, j.
    let mut br = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            br[i * n + j] = g.bracket(&images[i], &images[j]);
        }
    }
    let mut t = vec![F::zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                t[(a * n + b) * n + c] = br[b * n + c][a].clone()
                    + br[c * n + a][b].clone()
                    + br[a * n + b][c].clone();
            }
        }
    }
    Trivector { n, t }
}

/// The bracket `[α,β]_r = ad*_{r_#α} β − ad*_{r_#β} α` on 𝔤*, as structure
/// constants on the dual basis. It satisfies Jacobi whenever `[r,r] = 0`.
pub fn koszul_dual<F: Scalar>(g: &LieAlgebra<F>, r: &Bivector<F>) -> LieAlgebra<F> {
    let n = g.dim();
    let images: Vec<Vec<F>> = (0..n).map(|i| r_sharp_apply(r, &unit(n, i))).collect();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let a = g.coad_apply(&images[i], &unit(n, j));
            let b = g.coad_apply(&images[j], &unit(n, i));
            let v: Vec<F> = a.into_iter().zip(b).map(|(x, y)| x - y).collect();
            brackets.push((i, j, v));
        }
    }
    let labels = g.labels().iter().map(|l| format!("{l}*")).collect();
    LieAlgebra::from_brackets(n, &brackets)
        .expect("dual bracket is antisymmetric by construction")
        .with_labels(labels)
}

/// `r_#([α,β]_r) − [r_#α, r_#β]` on every basis pair `(e_i*, e_j*)`; zero
/// exactly when `r_#` is a Lie algebra morphism.
pub fn morphism_residuals<F: Scalar>(g: &LieAlgebra<F>, r: &Bivector<F>) -> Vec<(usize, usize, Vec<F>)> {
    let n = g.dim();
    let dual = koszul_dual(g, r);
    let sharp = r_sharp(r);
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = sharp.mul_vec(&dual.basis_bracket(i, j));
            let rhs = g.bracket(&sharp.column(i), &sharp.column(j));
            let res: Vec<F> = lhs.into_iter().zip(rhs).map(|(a, b)| a - b).collect();
            out.push((i, j, res));
        }
    }
    out
}

/// Euclidean product `ρ_{ij}` on 𝔤.
#[derive(Clone, Debug, PartialEq)]
pub struct Metric<F> {
    g: Matrix<F>,
}

impl<F: Scalar> Metric<F> {
    /// Validates symmetry and positive definiteness (leading principal minors
    /// in exact mode, Cholesky in float mode).
    pub fn new(g: Matrix<F>) -> Result<Self> {
        if !g.is_square() || !g.is_symmetric() {
            return Err(Error::MetricNotSymmetric);
        }
        if !is_positive_definite(&g) {
            return Err(Error::MetricNotPositiveDefinite);
        }
        Ok(Metric { g })
    }

    pub fn identity(n: usize) -> Self {
        Metric {
            g: Matrix::identity(n),
        }
    }

    pub fn diag(entries: &[F]) -> Result<Self> {
        Self::new(Matrix::diag(entries))
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.g
    }

    pub fn eval(&self, u: &[F], v: &[F]) -> F {
        self.g.form(u, v)
    }

    pub fn scale(&self, s: &F) -> Result<Self> {
        Self::new(self.g.scale(s))
    }

    /// `ρ*`, the metric on 𝔤* with matrix `ρ⁻¹`.
    pub fn dual(&self) -> Metric<F> {
        Metric {
            g: self.g.inverse().expect("positive definite metric is invertible"),
        }
    }

    /// Index raising `# : 𝔤* → 𝔤`, `ρ(#α, v) = α(v)`.
    pub fn sharp(&self) -> Matrix<F> {
        self.dual().g
    }

    /// Metric `Pᵀ ρ P` on the basis formed by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<Self> {
        Self::new(p.transpose().mul(&self.g).mul(p))
    }
}

pub fn dual_metric<F: Scalar>(rho: &Metric<F>) -> Metric<F> {
    rho.dual()
}

pub fn sharp<F: Scalar>(rho: &Metric<F>) -> Matrix<F> {
    rho.sharp()
}

pub fn is_positive_definite<F: Scalar>(g: &Matrix<F>) -> bool {
    match F::MODE {
        crate::scalar::Mode::Rational => g.leading_minors().iter().all(Scalar::is_positive),
        crate::scalar::Mode::Float => cholesky_succeeds(g),
    }
}

fn cholesky_succeeds<F: Scalar>(g: &Matrix<F>) -> bool {
    let n = g.rows();
    let mut l = Matrix::<F>::zeros(n, n);
    for j in 0..n {
        let mut d = g[(j, j)].clone();
        for k in 0..j {
            d = d - l[(j, k)].clone() * l[(j, k)].clone();
        }
        if !d.is_positive() {
            return false;
        }
        let Some(root) = d.sqrt() else { return false };
        l[(j, j)] = root.clone();
        for i in j + 1..n {
            let mut s = g[(i, j)].clone();
            for k in 0..j {
                s = s - l[(i, k)].clone() * l[(j, k)].clone();
            }
            l[(i, j)] = s / root.clone();
        }
    }
    true
}

/// Nondegenerate antisymmetric 2-form, `ω(u, v) = uᵀ W v`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoForm<F> {
    w: Matrix<F>,
}

impl<F: Scalar> TwoForm<F> {
    pub fn new(w: Matrix<F>) -> Result<Self> {
        if !w.is_antisymmetric() {
            return Err(Error::FormNotAntisymmetric);
        }
        if w.det().is_zero() {
            return Err(Error::DegenerateForm);
        }
        Ok(TwoForm { w })
    }

    /// From `(i, j, x)` terms meaning `x · e_i* ∧ e_j*` (0-based).
    pub fn from_terms(n: usize, terms: &[(usize, usize, F)]) -> Result<Self> {
        let b = Bivector::from_terms(n, terms)?;
        Self::new(b.r)
    }

    pub fn dim(&self) -> usize {
        self.w.rows()
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.w
    }

    pub fn eval(&self, u: &[F], v: &[F]) -> F {
        self.w.form(u, v)
    }

    /// Whether `D` is ω-skew: `ω(Du, v) + ω(u, Dv) = 0`.
    pub fn is_skew(&self, d: &Matrix<F>) -> bool {
        d.transpose().mul(&self.w).add(&self.w.mul(d)).is_zero()
    }

    /// The invertible bivector `r` with `ω_r = ω`, namely `r = −W⁻¹`.
    pub fn to_bivector(&self) -> Bivector<F> {
        let inv = self.w.inverse().expect("nondegenerate form");
        Bivector {
            r: inv.scale(&-F::one()),
        }
    }
}
