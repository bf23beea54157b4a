//! Building Riemann-Poisson Lie algebras `𝔤 = 𝔥 ⊕ 𝔭` from a Kähler Lie
//! algebra `(𝔥, ρ_𝔥, ω)`, a Euclidean space `(𝔭, ρ_𝔭)` and the coupling
//! maps `[ , ]_𝔭`, `μ`, `φ_𝔭`, `φ_𝔥`.
//!
//! In the assembled algebra the basis is that of 𝔥 followed by that of 𝔭.

use crate::algebra::{Bivector, LieAlgebra, Metric, TwoForm};
use crate::connection::{kahler_violation, levi_civita};
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vec, sub_vec, unit, Matrix, Subspace};
use crate::rpcheck::decompose;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionData<F> {
    pub h: LieAlgebra<F>,
    pub rho_h: Metric<F>,
    pub omega: TwoForm<F>,
    pub rho_p: Metric<F>,
    /// Bracket candidate on 𝔭; Jacobi is not required of it here.
    pub p_bracket: LieAlgebra<F>,
    /// `μ(a_i, a_j)` at index `i * m + j`.
    pub mu: Vec<Vec<F>>,
    /// `φ_𝔭(a_i)`, endomorphisms of 𝔥.
    pub phi_p: Vec<Matrix<F>>,
    /// `φ_𝔥(e_i)`, endomorphisms of 𝔭.
    pub phi_h: Vec<Matrix<F>>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidConstruction(msg.into())
}

impl<F: Scalar> ConstructionData<F> {
    /// Validates the type invariants: dimensions, antisymmetry of μ,
    /// `φ_𝔭(a) ∈ sp(𝔥, ω)` and `φ_𝔥(u) ∈ so(𝔭, ρ_𝔭)`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        h: LieAlgebra<F>,
        rho_h: Metric<F>,
        omega: TwoForm<F>,
        rho_p: Metric<F>,
        p_bracket: LieAlgebra<F>,
        mu: Vec<Vec<F>>,
        phi_p: Vec<Matrix<F>>,
        phi_h: Vec<Matrix<F>>,
    ) -> Result<Self> {
        let k = h.dim();
        let m = rho_p.dim();
        if rho_h.dim() != k || omega.dim() != k {
            return Err(invalid("𝔥 metric and form must match dim 𝔥"));
        }
        if p_bracket.dim() != m {
            return Err(invalid("𝔭 bracket must match dim 𝔭"));
        }
        if mu.len() != m * m || mu.iter().any(|v| v.len() != k) {
            return Err(invalid("μ must have m² entries in 𝔥"));
        }
        for a in 0..m {
            for b in 0..m {
                let s: Vec<F> = mu[a * m + b].iter().zip(&mu[b * m + a]).map(|(x, y)| x.clone() + y.clone()).collect();
                if !is_zero_vec(&s) {
                    return Err(invalid(format!("μ is not antisymmetric at ({}, {})", a + 1, b + 1)));
                }
            }
        }
        if phi_p.len() != m || phi_p.iter().any(|x| x.rows() != k || x.cols() != k) {
            return Err(invalid("φ_𝔭 must give one endomorphism of 𝔥 per basis vector of 𝔭"));
        }
        if phi_h.len() != k || phi_h.iter().any(|x| x.rows() != m || x.cols() != m) {
            return Err(invalid("φ_𝔥 must give one endomorphism of 𝔭 per basis vector of 𝔥"));
        }
        for (i, x) in phi_p.iter().enumerate() {
            if !omega.is_skew(x) {
                return Err(invalid(format!("φ_𝔭(a{}) is not ω-skew", i + 1)));
            }
        }
        for (i, x) in phi_h.iter().enumerate() {
            let s = rho_p.matrix().mul(x);
            if !s.add(&s.transpose()).is_zero() {
                return Err(invalid(format!("φ_𝔥(e{}) is not ρ_𝔭-skew", i + 1)));
            }
        }
        Ok(ConstructionData {
            h,
            rho_h,
            omega,
            rho_p,
            p_bracket,
            mu,
            phi_p,
            phi_h,
        })
    }

    /// Data with 𝔭 of dimension `m` and every coupling map zero.
    pub fn trivial(h: LieAlgebra<F>, rho_h: Metric<F>, omega: TwoForm<F>, rho_p: Metric<F>) -> Self {
        let (k, m) = (h.dim(), rho_p.dim());
        ConstructionData {
            h,
            rho_h,
            omega,
            p_bracket: LieAlgebra::abelian(m),
            rho_p,
            mu: vec![vec![F::zero(); k]; m * m],
            phi_p: vec![Matrix::zeros(k, k); m],
            phi_h: vec![Matrix::zeros(m, m); k],
        }
    }

    pub fn h_dim(&self) -> usize {
        self.h.dim()
    }

    pub fn p_dim(&self) -> usize {
        self.rho_p.dim()
    }

    pub fn mu_at(&self, a: usize, b: usize) -> &[F] {
        &self.mu[a * self.p_dim() + b]
    }

    /// `μ(x, y)` for arbitrary `x, y ∈ 𝔭`.
    pub fn mu_apply(&self, x: &[F], y: &[F]) -> Vec<F> {
        let m = self.p_dim();
        let mut out = vec![F::zero(); self.h_dim()];
        for a in 0..m {
            for b in 0..m {
                let s = x[a].clone() * y[b].clone();
                if !s.is_zero() {
                    add_scaled(&mut out, &s, self.mu_at(a, b));
                }
            }
        }
        out
    }

    /// `φ_𝔭(x)` for arbitrary `x ∈ 𝔭`.
    pub fn phi_p_of(&self, x: &[F]) -> Matrix<F> {
        combine_maps(&self.phi_p, x, self.h_dim())
    }

    /// `φ_𝔥(u)` for arbitrary `u ∈ 𝔥`.
    pub fn phi_h_of(&self, u: &[F]) -> Matrix<F> {
        combine_maps(&self.phi_h, u, self.p_dim())
    }

    /// Sets `μ(a_i, a_j) = v` and `μ(a_j, a_i) = −v` (0-based).
    pub fn set_mu(&mut self, i: usize, j: usize, v: Vec<F>) {
        let m = self.p_dim();
        self.mu[j * m + i] = v.iter().map(|x| -x.clone()).collect();
        self.mu[i * m + j] = v;
    }
}

fn combine_maps<F: Scalar>(maps: &[Matrix<F>], x: &[F], n: usize) -> Matrix<F> {
    let mut out = Matrix::zeros(n, n);
    for (c, m) in x.iter().zip(maps) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

/// The six compatibility equations, with the first failing basis tuple of
/// each.
#[derive(Clone, Debug, PartialEq)]
pub struct EqproReport<F> {
    /// Whether `[ , ]_𝔥` itself satisfies Jacobi; the equations only
    /// characterize Jacobi on 𝔤 under this standing assumption.
    pub h_is_lie: bool,
    pub equations: [bool; 6],
    pub failures: Vec<EqproFailure<F>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EqproFailure<F> {
    /// 1-based equation number.
    pub equation: usize,
    pub indices: Vec<usize>,
    pub residual: Vec<F>,
}

impl<F> EqproReport<F> {
    pub fn holds(&self) -> bool {
        self.h_is_lie && self.equations.iter().all(|&b| b)
    }
}

fn bracket_sub<F: Scalar>(x: &Matrix<F>, y: &Matrix<F>) -> Matrix<F> {
    x.commutator(y)
}

pub fn check_eqpro<F: Scalar>(d: &ConstructionData<F>) -> EqproReport<F> {
    let (k, m) = (d.h_dim(), d.p_dim());
    let (h, p) = (&d.h, &d.p_bracket);
    let eu = |i| unit::<F>(k, i);
    let ea = |i| unit::<F>(m, i);
    let mut failures: Vec<EqproFailure<F>> = Vec::new();
    let mut record = |eq: usize, indices: Vec<usize>, residual: Vec<F>| {
        if !is_zero_vec(&residual) && !failures.iter().any(|f| f.equation == eq) {
            failures.push(EqproFailure {
                equation: eq,
                indices,
                residual,
            });
        }
    };

    for a in 0..m {
        let pa = &d.phi_p[a];
        for u in 0..k {
            for v in u + 1..k {
                let lhs = pa.mul_vec(&h.basis_bracket(u, v));
                let mut rhs = h.bracket(&eu(u), &pa.column(v));
                add_scaled(&mut rhs, &F::one(), &h.bracket(&pa.column(u), &eu(v)));
                add_scaled(&mut rhs, &F::one(), &d.phi_p_of(&d.phi_h[v].column(a)).column(u));
                add_scaled(&mut rhs, &-F::one(), &d.phi_p_of(&d.phi_h[u].column(a)).column(v));
                record(1, vec![a, u, v], sub_vec(&lhs, &rhs));
            }
        }
    }

    for u in 0..k {
        let hu = &d.phi_h[u];
        for a in 0..m {
            for b in a + 1..m {
                let lhs = hu.mul_vec(&p.basis_bracket(a, b));
                let mut rhs = p.bracket(&ea(a), &hu.column(b));
                add_scaled(&mut rhs, &F::one(), &p.bracket(&hu.column(a), &ea(b)));
                add_scaled(&mut rhs, &F::one(), &d.phi_h_of(&d.phi_p[b].column(u)).column(a));
                add_scaled(&mut rhs, &-F::one(), &d.phi_h_of(&d.phi_p[a].column(u)).column(b));
                record(2, vec![u, a, b], sub_vec(&lhs, &rhs));
            }
        }
    }

    for u in 0..k {
        for v in u + 1..k {
            let lhs = d.phi_h_of(&h.basis_bracket(u, v));
            let rhs = bracket_sub(&d.phi_h[u], &d.phi_h[v]);
            let diff = lhs.sub(&rhs);
            record(3, vec![u, v], diff.to_rows().concat());
        }
    }

    for a in 0..m {
        for b in a + 1..m {
            let lhs_map = d.phi_p_of(&p.basis_bracket(a, b));
            let comm = bracket_sub(&d.phi_p[a], &d.phi_p[b]);
            for u in 0..k {
                let lhs = lhs_map.column(u);
                let mut rhs = comm.column(u);
                add_scaled(&mut rhs, &F::one(), &h.bracket(&eu(u), d.mu_at(a, b)));
                add_scaled(&mut rhs, &-F::one(), &d.mu_apply(&ea(a), &d.phi_h[u].column(b)));
                add_scaled(&mut rhs, &-F::one(), &d.mu_apply(&d.phi_h[u].column(a), &ea(b)));
                record(4, vec![a, b, u], sub_vec(&lhs, &rhs));
            }
        }
    }

    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let mut r5 = vec![F::zero(); m];
                let mut r6 = vec![F::zero(); k];
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    add_scaled(&mut r5, &F::one(), &p.bracket(&ea(x), &p.basis_bracket(y, z)));
                    add_scaled(&mut r5, &-F::one(), &d.phi_h_of(d.mu_at(y, z)).column(x));
                    add_scaled(&mut r6, &F::one(), &d.phi_p[x].mul_vec(d.mu_at(y, z)));
                    add_scaled(&mut r6, &-F::one(), &d.mu_apply(&p.basis_bracket(y, z), &ea(x)));
                }
                record(5, vec![a, b, c], r5);
                record(6, vec![a, b, c], r6);
            }
        }
    }

    let mut equations = [true; 6];
    for f in &failures {
        equations[f.equation - 1] = false;
    }
    EqproReport {
        h_is_lie: h.jacobi().holds,
        equations,
        failures,
    }
}

/// The bracket of `𝔤 = 𝔥 ⊕ 𝔭`:
/// `[u,v] = [u,v]_𝔥`, `[a,b] = μ(a,b) + [a,b]_𝔭`, `[a,u] = φ_𝔭(a)u − φ_𝔥(u)a`.
pub fn assembled_bracket<F: Scalar>(d: &ConstructionData<F>) -> LieAlgebra<F> {
    let (k, m) = (d.h_dim(), d.p_dim());
    let n = k + m;
    let mut brackets = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            let mut x = d.h.basis_bracket(u, v);
            x.resize(n, F::zero());
            brackets.push((u, v, x));
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            let mut x = d.mu_at(a, b).to_vec();
            x.extend(d.p_bracket.basis_bracket(a, b));
            brackets.push((k + a, k + b, x));
        }
    }
    for a in 0..m {
        for u in 0..k {
            let mut x = d.phi_p[a].column(u);
            x.extend(d.phi_h[u].column(a).into_iter().map(|y| -y));
            brackets.push((k + a, u, x));
        }
    }
    LieAlgebra::from_brackets(n, &brackets).expect("blocks are well formed")
}

/// `r` on `𝔤 = 𝔥 ⊕ 𝔭` with `Im r_# = 𝔥` and `ω_r = ω`.
pub fn embedded_bivector<F: Scalar>(omega: &TwoForm<F>, n: usize) -> Bivector<F> {
    let r_h = omega.to_bivector();
    let k = omega.dim();
    let mut terms = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            terms.push((i, j, r_h.entry(i, j).clone()));
        }
    }
    Bivector::from_terms(n, &terms).expect("indices inside 𝔥")
}

pub fn block_metric<F: Scalar>(a: &Metric<F>, b: &Metric<F>) -> Metric<F> {
    let (k, m) = (a.dim(), b.dim());
    let g = Matrix::from_fn(k + m, k + m, |i, j| {
        if i < k && j < k {
            a.matrix()[(i, j)].clone()
        } else if i >= k && j >= k {
            b.matrix()[(i - k, j - k)].clone()
        } else {
            F::zero()
        }
    });
    Metric::new(g).expect("block sum of positive definite forms")
}

/// Assembles `(𝔤, r, ρ)` after checking the compatibility equations and
/// that `(𝔥, ρ_𝔥, ω)` is Kähler.
pub fn assemble<F: Scalar>(d: &ConstructionData<F>) -> Result<(LieAlgebra<F>, Bivector<F>, Metric<F>)> {
    let report = check_eqpro(d);
    if !report.h_is_lie {
        let v = d.h.jacobi().violations[0].clone();
        return Err(Error::NotLieAlgebra(v.i + 1, v.j + 1, v.k + 1));
    }
    if let Some(f) = report.failures.first() {
        let idx: Vec<String> = f.indices.iter().map(|i| (i + 1).to_string()).collect();
        return Err(Error::EqproViolation(format!(
            "equation {} fails at ({})",
            f.equation,
            idx.join(", ")
        )));
    }
    if kahler_violation(&levi_civita(&d.h, &d.rho_h), &d.omega).is_some() {
        return Err(Error::NotKahler);
    }
    Ok(assemble_unchecked(d))
}

/// Assembles without checking the equations; the bracket may then fail
/// Jacobi.
pub fn assemble_unchecked<F: Scalar>(d: &ConstructionData<F>) -> (LieAlgebra<F>, Bivector<F>, Metric<F>) {
    let g = assembled_bracket(d);
    let n = g.dim();
    (g, embedded_bivector(&d.omega, n), block_metric(&d.rho_h, &d.rho_p))
}

/// Flattened index of entry `(row, col)` of a `k×k` endomorphism.
fn flat(k: usize, row: usize, col: usize) -> usize {
    row * k + col
}

/// Basis of `sp(𝔥, ω) ∩ Der(𝔥)`, echelonized on the row-major entries.
pub fn sp_cap_der<F: Scalar>(h: &LieAlgebra<F>, omega: &TwoForm<F>) -> Vec<Matrix<F>> {
    let k = h.dim();
    let mut rows: Vec<Vec<F>> = Vec::new();
    // D[e_i, e_j] − [D e_i, e_j] − [e_i, D e_j] = 0, component l.
    for i in 0..k {
        for j in i + 1..k {
            let c = h.basis_bracket(i, j);
            for l in 0..k {
                let mut row = vec![F::zero(); k * k];
                for (s, cs) in c.iter().enumerate() {
                    row[flat(k, l, s)] = row[flat(k, l, s)].clone() + cs.clone();
                }
                for s in 0..k {
                    // D e_i = Σ_s D[s][i] e_s
                    let x = h.constant(s, j, l).clone();
                    row[flat(k, s, i)] = row[flat(k, s, i)].clone() - x;
                    let y = h.constant(i, s, l).clone();
                    row[flat(k, s, j)] = row[flat(k, s, j)].clone() - y;
                }
                rows.push(row);
            }
        }
    }
    // (DᵀW + WD)[i][j] = Σ_s D[s][i] W[s][j] + W[i][s] D[s][j].
    let w = omega.matrix();
    for i in 0..k {
        for j in i..k {
            let mut row = vec![F::zero(); k * k];
            for s in 0..k {
                row[flat(k, s, i)] = row[flat(k, s, i)].clone() + w[(s, j)].clone();
                row[flat(k, s, j)] = row[flat(k, s, j)].clone() + w[(i, s)].clone();
            }
            rows.push(row);
        }
    }
    let kernel = Matrix::from_rows(rows).kernel();
    Subspace::span(k * k, &kernel)
        .basis()
        .iter()
        .map(|v| Matrix::from_fn(k, k, |r, c| v[flat(k, r, c)].clone()))
        .collect()
}

pub fn is_derivation<F: Scalar>(h: &LieAlgebra<F>, d: &Matrix<F>) -> bool {
    let k = h.dim();
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let lhs = d.mul_vec(&h.basis_bracket(i, j));
            let mut rhs = h.bracket(&d.column(i), &unit(k, j));
            add_scaled(&mut rhs, &F::one(), &h.bracket(&unit(k, i), &d.column(j)));
            is_zero_vec(&sub_vec(&lhs, &rhs))
        })
    })
}

/// `𝔤 = 𝔥 ⊕ ℝa` with `[a, u] = D u`, `ρ(a, a) = p_norm`.
pub fn build_dim1_extension<F: Scalar>(
    h: &LieAlgebra<F>,
    rho_h: &Metric<F>,
    omega: &TwoForm<F>,
    d: &Matrix<F>,
    p_norm: F,
) -> Result<(LieAlgebra<F>, Bivector<F>, Metric<F>)> {
    if !omega.is_skew(d) || !is_derivation(h, d) {
        return Err(Error::NotSymplecticDerivation);
    }
    assemble(&dim1_extension_data(h.clone(), rho_h.clone(), omega.clone(), d.clone(), p_norm)?)
}

/// The data of [`build_dim1_extension`], without checking `D`.
pub fn dim1_extension_data<F: Scalar>(
    h: LieAlgebra<F>,
    rho_h: Metric<F>,
    omega: TwoForm<F>,
    d: Matrix<F>,
    p_norm: F,
) -> Result<ConstructionData<F>> {
    let mut data = ConstructionData::trivial(h, rho_h, omega, Metric::diag(&[p_norm])?);
    data.phi_p[0] = d;
    Ok(data)
}

/// Whether `φ([a,b]) = [φ(a), φ(b)]` on all basis pairs.
pub fn is_representation<F: Scalar>(p: &LieAlgebra<F>, phi: &[Matrix<F>]) -> bool {
    let m = p.dim();
    (0..m).all(|a| {
        (a + 1..m).all(|b| {
            combine_maps(phi, &p.basis_bracket(a, b), phi[0].rows())
                .sub(&phi[a].commutator(&phi[b]))
                .is_zero()
        })
    })
}

/// 2-cocycle identity `∮ φ(a)μ(b,c) − ∮ μ([a,b],c) = 0` for a module-valued
/// `μ` (indexed `a * m + b`).
pub fn check_cocycle<F: Scalar>(p: &LieAlgebra<F>, phi: &[Matrix<F>], mu: &[Vec<F>]) -> Result<bool> {
    let m = p.dim();
    if phi.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: phi.len(),
        });
    }
    if m == 0 {
        return Ok(true);
    }
    if !is_representation(p, phi) {
        return Err(Error::NotRepresentation);
    }
    let k = phi[0].rows();
    let mu_apply = |x: &[F], y: &[F]| {
        let mut out = vec![F::zero(); k];
        for a in 0..m {
            for b in 0..m {
                let s = x[a].clone() * y[b].clone();
                if !s.is_zero() {
                    add_scaled(&mut out, &s, &mu[a * m + b]);
                }
            }
        }
        out
    };
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let mut s = vec![F::zero(); k];
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    add_scaled(&mut s, &F::one(), &phi[x].mul_vec(&mu[y * m + z]));
                    add_scaled(&mut s, &-F::one(), &mu_apply(&p.basis_bracket(x, y), &unit(m, z)));
                }
                if !is_zero_vec(&s) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `μ₀(a, Φb) + μ₀(Φa, b) = −ρ_𝔭([a,b]_𝔭, b₀) − α μ₀(a,b)` on basis pairs,
/// with `μ₀` the antisymmetric matrix `mu0[a][b]` and `Φ = φ_𝔥(e₂)`.
pub fn check_eqh<F: Scalar>(
    p: &LieAlgebra<F>,
    rho_p: &Metric<F>,
    phi_e2: &Matrix<F>,
    mu0: &Matrix<F>,
    b0: &[F],
    alpha: &F,
) -> bool {
    let m = p.dim();
    (0..m).all(|a| {
        (0..m).all(|b| {
            let lhs = mu0.form(&unit(m, a), &phi_e2.column(b)) + mu0.form(&phi_e2.column(a), &unit(m, b));
            let rhs = -rho_p.eval(&p.basis_bracket(a, b), b0) - alpha.clone() * mu0[(a, b)].clone();
            (lhs - rhs).is_zero()
        })
    })
}

/// Reads `(𝔤, r, ρ)` as construction data with `𝔥 = S = Im r_#` and
/// `𝔭 = S⊥`, on the echelon basis of `S` followed by that of `S⊥`.
///
/// Returns the data together with the change-of-basis matrix whose columns
/// are the new basis vectors. Requires `S` to be a subalgebra.
pub fn extract_construction<F: Scalar>(
    g: &LieAlgebra<F>,
    r: &Bivector<F>,
    rho: &Metric<F>,
) -> Result<(ConstructionData<F>, Matrix<F>)> {
    let n = g.dim();
    let dec = decompose(r, rho);
    let mut cols = dec.s_basis.clone();
    cols.extend(dec.sperp_basis.iter().cloned());
    let basis = Matrix::from_columns(n, &cols);
    let g2 = g.change_basis(&basis)?;
    let rho2 = rho.change_basis(&basis)?;
    let k = dec.rank();
    let m = n - k;
    let sub = |rows: std::ops::Range<usize>| {
        let idx: Vec<usize> = rows.collect();
        Metric::new(rho2.matrix().select(&idx, &idx))
    };
    let rho_h = sub(0..k)?;
    let rho_p = sub(k..n)?;
    let mut h_br = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            let x = g2.basis_bracket(u, v);
            if !x[k..].iter().all(Scalar::is_zero) {
                return Err(Error::InvalidConstruction("Im r_# is not a subalgebra".into()));
            }
            h_br.push((u, v, x[..k].to_vec()));
        }
    }
    let h = LieAlgebra::from_brackets(k, &h_br)?;
    let mut p_br = Vec::new();
    let mut mu = vec![vec![F::zero(); k]; m * m];
    for a in 0..m {
        for b in a + 1..m {
            let x = g2.basis_bracket(k + a, k + b);
            p_br.push((a, b, x[k..].to_vec()));
            mu[a * m + b] = x[..k].to_vec();
            mu[b * m + a] = x[..k].iter().map(|y| -y.clone()).collect();
        }
    }
    let p_bracket = LieAlgebra::from_brackets(m, &p_br)?;
    let phi_p: Vec<Matrix<F>> = (0..m)
        .map(|a| Matrix::from_columns(k, &(0..k).map(|u| g2.basis_bracket(k + a, u)[..k].to_vec()).collect::<Vec<_>>()))
        .collect();
    let phi_h: Vec<Matrix<F>> = (0..k)
        .map(|u| Matrix::from_columns(m, &(0..m).map(|a| g2.basis_bracket(u, k + a)[k..].to_vec()).collect::<Vec<_>>()))
        .collect();
    let omega = TwoForm::new(dec.omega_r.clone())?;
    let data = ConstructionData {
        h,
        rho_h,
        omega,
        rho_p,
        p_bracket,
        mu,
        phi_p,
        phi_h,
    };
    Ok((data, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rpcheck::is_riemann_poisson;
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Matrix<Q> {
        Matrix::from_rows(vec![vec![q(a), q(b)], vec![q(c), q(d)]])
    }

    fn std_form() -> TwoForm<Q> {
        TwoForm::from_terms(2, &[(0, 1, q(1))]).unwrap()
    }

    #[test]
    fn trivial_data_gives_abelian() {
        let d = ConstructionData::trivial(LieAlgebra::abelian(2), Metric::identity(2), std_form(), Metric::identity(1));
        assert!(check_eqpro(&d).holds());
        let (g, r, rho) = assemble(&d).unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.dim(), 3);
        assert!(is_riemann_poisson(&g, &r, &rho).unwrap().verdict);
    }

    #[test]
    fn round_trip_recovers_h_and_omega() {
        let w = TwoForm::from_terms(2, &[(0, 1, q(3))]).unwrap();
        let h = LieAlgebra::<Q>::from_int_brackets(2, &[(1, 2, &[(1, 2)])]);
        let mut d = ConstructionData::trivial(h, Metric::diag(&[q(1), q(2)]).unwrap(), w.clone(), Metric::identity(1));
        d.phi_p[0] = m2(0, 5, 0, 0);
        let (_, r, rho) = assemble(&d).unwrap();
        let dec = decompose(&r, &rho);
        assert_eq!(dec.s(), Subspace::span(3, &[unit(3, 0), unit(3, 1)]));
        assert_eq!(dec.omega(&unit(3, 0), &unit(3, 1)), Some(q(3)));
    }

    #[test]
    fn dim1_extension_matches_three_dimensional_family() {
        // 𝔥: [e1,e2] = a e1, D = [[0, b],[0, 0]] reproduces [e1,e2] = a e1, [e3,e2] = b e1.
        let (a, b) = (2, -3);
        let h = LieAlgebra::<Q>::from_int_brackets(2, &[(1, 2, &[(1, a)])]);
        let (g, r, rho) = build_dim1_extension(&h, &Metric::identity(2), &std_form(), &m2(0, b, 0, 0), q(1)).unwrap();
        let expected = LieAlgebra::<Q>::from_int_brackets(3, &[(1, 2, &[(1, a)]), (3, 2, &[(1, b)])]);
        assert_eq!(g, expected);
        assert!(is_riemann_poisson(&g, &r, &rho).unwrap().verdict);

        let bad = build_dim1_extension(&h, &Metric::identity(2), &std_form(), &m2(1, 0, 0, -1), q(1));
        assert_eq!(bad, Err(Error::NotSymplecticDerivation));
    }

    #[test]
    fn sl2_action_on_abelian_plane() {
        let (b, c, dd) = (1, 2, 3);
        let d = m2(-b, dd, c, b);
        let h = LieAlgebra::<Q>::abelian(2);
        let (g, r, rho) = build_dim1_extension(&h, &Metric::identity(2), &std_form(), &d, q(1)).unwrap();
        assert!(is_riemann_poisson(&g, &r, &rho).unwrap().verdict);
    }

    #[test]
    fn sp_cap_der_examples() {
        assert_eq!(sp_cap_der(&LieAlgebra::<Q>::abelian(2), &std_form()).len(), 3);
        let h = LieAlgebra::<Q>::from_int_brackets(2, &[(1, 2, &[(1, 1)])]);
        for x in sp_cap_der(&h, &std_form()) {
            assert!(is_derivation(&h, &x));
            assert!(std_form().is_skew(&x));
        }
    }

    #[test]
    fn eqpro_detects_broken_mu() {
        // 𝔥 abelian, 𝔭 Heisenberg with [a1,a2] = a3, φ_𝔭(a1) nilpotent.
        let h = LieAlgebra::<Q>::abelian(2);
        let p = LieAlgebra::<Q>::from_int_brackets(3, &[(1, 2, &[(3, 1)])]);
        let mut d = ConstructionData::trivial(h, Metric::identity(2), std_form(), Metric::identity(3));
        d.p_bracket = p;
        d.phi_p[0] = m2(0, 1, 0, 0);
        assert!(check_eqpro(&d).holds());
        assert!(assembled_bracket(&d).jacobi().holds);
        // φ_𝔭(a1) μ(a2, a3) ≠ 0 breaks the sixth equation.
        d.set_mu(1, 2, vec![q(0), q(1)]);
        let rep = check_eqpro(&d);
        assert!(!rep.equations[5]);
        assert!(!assembled_bracket(&d).jacobi().holds);
    }

    #[test]
    fn cocycle_examples() {
        let p = LieAlgebra::<Q>::from_int_brackets(3, &[(1, 2, &[(3, 1)]), (2, 3, &[(1, 1)]), (3, 1, &[(2, 1)])]);
        let zero = vec![Matrix::<Q>::zeros(2, 2); 3];
        assert_eq!(check_cocycle(&p, &zero, &vec![vec![q(0), q(0)]; 9]), Ok(true));
        // Coboundary μ(a,b) = −L([a,b]) of the trivial module.
        let l = Matrix::from_rows(vec![vec![q(1), q(0), q(2)], vec![q(0), q(3), q(1)]]);
        let mut mu = vec![vec![q(0), q(0)]; 9];
        for a in 0..3 {
            for b in 0..3 {
                mu[a * 3 + b] = l.mul_vec(&p.basis_bracket(a, b)).into_iter().map(|x| -x).collect();
            }
        }
        assert_eq!(check_cocycle(&p, &zero, &mu), Ok(true));
        let not_rep = vec![m2(1, 0, 0, -1), Matrix::zeros(2, 2), Matrix::zeros(2, 2)];
        assert_eq!(check_cocycle(&p, &not_rep, &mu), Err(Error::NotRepresentation));
    }

    #[test]
    fn extract_then_assemble_round_trip() {
        let h = LieAlgebra::<Q>::from_int_brackets(2, &[(1, 2, &[(1, 1)])]);
        let mut d = ConstructionData::trivial(h, Metric::identity(2), std_form(), Metric::identity(1));
        d.phi_p[0] = m2(0, 4, 0, 0);
        let (g, r, rho) = assemble(&d).unwrap();
        let (d2, basis) = extract_construction(&g, &r, &rho).unwrap();
        assert_eq!(basis, Matrix::identity(3));
        assert_eq!(d2, d);
    }
}
