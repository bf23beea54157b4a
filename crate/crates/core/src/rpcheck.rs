//! Deciding whether `(𝔤, r, ρ)` is Riemann-Poisson.
//!
//! Three characterizations are implemented independently and cross-checked:
//! the defining pair of conditions on 𝔤*, the `c1`–`c3` conditions on the
//! splitting `𝔤* = 𝓘 ⊕ 𝓘⊥`, and the conditions on `(S, ω_r)` and `S⊥` in 𝔤.

use crate::algebra::{koszul_dual, r_sharp, yang_baxter_bracket, Bivector, LieAlgebra, Metric, TwoForm};
use crate::connection::{kahler_violation, levi_civita, Product};
use crate::error::{Error, Result};
use crate::linalg::{unit, Matrix, Subspace};
use crate::scalar::{Mode, Scalar};

/// The subspaces and maps attached to `r` and ρ.
///
/// `omega_r` and `j` are expressed in the coordinates of `s_basis`; `tau`
/// has one column per element of `s_basis`, holding its preimage in `𝓘⊥`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<F> {
    pub i_basis: Vec<Vec<F>>,
    pub iperp_basis: Vec<Vec<F>>,
    pub s_basis: Vec<Vec<F>>,
    pub sperp_basis: Vec<Vec<F>>,
    pub omega_r: Matrix<F>,
    pub tau: Matrix<F>,
    pub j: Matrix<F>,
}

impl<F: Scalar> Decomposition<F> {
    pub fn rank(&self) -> usize {
        self.s_basis.len()
    }

    pub fn s(&self) -> Subspace<F> {
        Subspace::span(self.ambient(), &self.s_basis)
    }

    pub fn ambient(&self) -> usize {
        self.i_basis.len() + self.s_basis.len()
    }

    /// Coordinates of `v ∈ S` in `s_basis`.
    pub fn s_coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        self.s().coordinates(v)
    }

    /// `ω_r(u, v)` for `u, v ∈ S` given in ambient coordinates.
    pub fn omega(&self, u: &[F], v: &[F]) -> Option<F> {
        let cu = self.s_coordinates(u)?;
        let cv = self.s_coordinates(v)?;
        Some(self.omega_r.form(&cu, &cv))
    }
}

pub fn decompose<F: Scalar>(r: &Bivector<F>, rho: &Metric<F>) -> Decomposition<F> {
    let n = r.dim();
    let sharp = r_sharp(r);
    let i_space = Subspace::span(n, &sharp.kernel());
    let iperp = i_space.orthogonal(rho.dual().matrix());
    let s_space = Subspace::span(n, &(0..n).map(|k| sharp.column(k)).collect::<Vec<_>>());
    let sperp = s_space.orthogonal(rho.matrix());
    let m = s_space.dim();

    // r_# restricted to 𝓘⊥, in (𝓘⊥ basis) → (S basis) coordinates.
    let restricted = Matrix::from_columns(
        m,
        &iperp
            .basis()
            .iter()
            .map(|b| s_space.coordinates(&sharp.mul_vec(b)).expect("image lies in S"))
            .collect::<Vec<_>>(),
    );
    let inv = if m == 0 {
        Matrix::zeros(0, 0)
    } else {
        restricted.inverse().expect("r_# is injective on 𝓘⊥")
    };
    let tau_cols: Vec<Vec<F>> = (0..m).map(|j| iperp.combine(&inv.column(j))).collect();
    let tau = Matrix::from_columns(n, &tau_cols);
    let omega_r = Matrix::from_fn(m, m, |a, b| r.eval(&tau_cols[a], &tau_cols[b]));
    let raise = rho.sharp();
    let j_cols: Vec<Vec<F>> = tau_cols
        .iter()
        .map(|t| {
            let v: Vec<F> = raise.mul_vec(t).into_iter().map(|x| -x).collect();
            s_space.coordinates(&v).expect("# maps 𝓘⊥ onto S")
        })
        .collect();
    let j = Matrix::from_columns(m, &j_cols);
    Decomposition {
        i_basis: i_space.basis().to_vec(),
        iperp_basis: iperp.basis().to_vec(),
        s_basis: s_space.basis().to_vec(),
        sperp_basis: sperp.basis().to_vec(),
        omega_r,
        tau,
        j,
    }
}

/// Where a check failed: the condition name, the basis indices involved and
/// the offending value.
#[derive(Clone, Debug, PartialEq)]
pub struct Failure<F> {
    pub condition: &'static str,
    pub indices: Vec<usize>,
    pub vector: Option<Vec<F>>,
    pub residual: F,
}

impl<F> Failure<F> {
    fn new(condition: &'static str, indices: Vec<usize>, residual: F) -> Self {
        Failure {
            condition,
            indices,
            vector: None,
            residual,
        }
    }

    fn with_vector(mut self, v: Vec<F>) -> Self {
        self.vector = Some(v);
        self
    }
}

fn first_yb_failure<F: Scalar>(g: &LieAlgebra<F>, r: &Bivector<F>) -> Option<Failure<F>> {
    yang_baxter_bracket(g, r)
        .first_nonzero()
        .map(|(i, j, k, x)| Failure::new("yang_baxter", vec![i, j, k], x))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticReport {
    pub is_subalgebra: bool,
    pub delta_omega_zero: bool,
}

/// `S = Im r_#` closed under the bracket, and `δω_r = 0` on `S`.
pub fn check_symplectic_subalgebra<F: Scalar>(g: &LieAlgebra<F>, r: &Bivector<F>, rho: &Metric<F>) -> SymplecticReport {
    let d = decompose(r, rho);
    let s = d.s();
    let b = &d.s_basis;
    let m = b.len();
    let is_subalgebra = (0..m).all(|i| (i + 1..m).all(|j| s.contains(&g.bracket(&b[i], &b[j]))));
    if !is_subalgebra {
        return SymplecticReport {
            is_subalgebra,
            delta_omega_zero: false,
        };
    }
    let om = |u: &[F], v: &[F]| d.omega(u, v).expect("vectors in S");
    let mut delta_omega_zero = true;
    'outer: for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let x = om(&b[i], &g.bracket(&b[j], &b[k]))
                    + om(&b[j], &g.bracket(&b[k], &b[i]))
                    + om(&b[k], &g.bracket(&b[i], &b[j]));
                if !x.is_zero() {
                    delta_omega_zero = false;
                    break 'outer;
                }
            }
        }
    }
    SymplecticReport {
        is_subalgebra,
        delta_omega_zero,
    }
}

/// Levi-Civita product of `(𝔤*, [ , ]_r, ρ*)`.
pub fn dual_product<F: Scalar>(g: &LieAlgebra<F>, r: &Bivector<F>, rho: &Metric<F>) -> Product<F> {
    levi_civita(&koszul_dual(g, r), &rho.dual())
}

fn r_skew_failure<F: Scalar>(
    a: &Product<F>,
    r: &Bivector<F>,
    alphas: &[Vec<F>],
    betas: &[Vec<F>],
    condition: &'static str,
) -> Option<Failure<F>> {
    for (i, alpha) in alphas.iter().enumerate() {
        for (j, beta) in betas.iter().enumerate() {
            let ab = a.apply(alpha, beta);
            for (k, gamma) in betas.iter().enumerate() {
                let x = r.eval(&ab, gamma) + r.eval(beta, &a.apply(alpha, gamma));
                if !x.is_zero() {
                    return Some(Failure::new(condition, vec![i, j, k], x).with_vector(alpha.clone()));
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq)]
pub struct DirectReport<F> {
    pub yang_baxter: bool,
    pub skew: bool,
    pub failure: Option<Failure<F>>,
}

impl<F> DirectReport<F> {
    pub fn holds(&self) -> bool {
        self.yang_baxter && self.skew
    }
}

/// `[r,r] = 0` and `r(A_α β, γ) + r(β, A_α γ) = 0` on all basis covectors.
pub fn direct_report<F: Scalar>(g: &LieAlgebra<F>, r: &Bivector<F>, rho: &Metric<F>) -> DirectReport<F> {
    let n = g.dim();
    let yb = first_yb_failure(g, r);
    let a = dual_product(g, r, rho);
    let basis: Vec<Vec<F>> = (0..n).map(|i| unit(n, i)).collect();
    let skew = r_skew_failure(&a, r, &basis, &basis, "ii");
    DirectReport {
        yang_baxter: yb.is_none(),
        skew: skew.is_none(),
        failure: yb.or(skew),
    }
}

pub fn check_direct<F: Scalar>(g: &LieAlgebra<F>, r: &Bivector<F>, rho: &Metric<F>) -> bool {
    direct_report(g, r, rho).holds()
}

#[derive(Clone, Debug, PartialEq)]
pub struct CReport<F> {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub failure: Option<Failure<F>>,
}

impl<F> CReport<F> {
    pub fn holds(&self) -> bool {
        self.c1 && self.c2 && self.c3
    }
}

pub fn check_c_conditions<F: Scalar>(g: &LieAlgebra<F>, r: &Bivector<F>, rho: &Metric<F>) -> CReport<F> {
    let d = decompose(r, rho);
    let a = dual_product(g, r, rho);
    let c1_fail = first_yb_failure(g, r);

    let mut c2_fail = None;
    'c2: for (i, alpha) in d.i_basis.iter().enumerate() {
        let op = a.operator(alpha);
        for j in 0..op.rows() {
            for k in 0..op.cols() {
                if !op[(j, k)].is_zero() {
                    c2_fail = Some(Failure::new("c2", vec![i, k, j], op[(j, k)].clone()).with_vector(alpha.clone()));
                    break 'c2;
                }
            }
        }
    }

    let iperp = Subspace::span(g.dim(), &d.iperp_basis);
    let mut c3_fail = None;
    'c3: for (i, alpha) in d.iperp_basis.iter().enumerate() {
        for (j, beta) in d.iperp_basis.iter().enumerate() {
            let ab = a.apply(alpha, beta);
            if !iperp.contains(&ab) {
                let off = ab.iter().map(Scalar::magnitude).fold(0.0, f64::max);
                c3_fail = Some(Failure::new("c3", vec![i, j], F::from_f64(off)).with_vector(alpha.clone()));
                break 'c3;
            }
        }
    }
    if c3_fail.is_none() {
        c3_fail = r_skew_failure(&a, r, &d.iperp_basis, &d.iperp_basis, "c3");
    }
    CReport {
        c1: c1_fail.is_none(),
        c2: c2_fail.is_none(),
        c3: c3_fail.is_none(),
        failure: c1_fail.or(c2_fail).or(c3_fail),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MainReport<F> {
    pub kahler_sub: bool,
    pub perp_skew: bool,
    pub s_perp_sp: bool,
    pub failure: Option<Failure<F>>,
}

impl<F> MainReport<F> {
    pub fn holds(&self) -> bool {
        self.kahler_sub && self.perp_skew && self.s_perp_sp
    }
}

/// The subalgebra `S` as a Lie algebra on its echelon basis, with the
/// restricted metric.
fn restrict_to_s<F: Scalar>(g: &LieAlgebra<F>, rho: &Metric<F>, d: &Decomposition<F>) -> (LieAlgebra<F>, Metric<F>) {
    let b = &d.s_basis;
    let m = b.len();
    let s = d.s();
    let mut brackets = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let c = s.coordinates(&g.bracket(&b[i], &b[j])).expect("S is a subalgebra");
            brackets.push((i, j, c));
        }
    }
    let h = LieAlgebra::from_brackets(m, &brackets).expect("restricted bracket is antisymmetric");
    let gram = Matrix::from_fn(m, m, |i, j| rho.eval(&b[i], &b[j]));
    (h, Metric::new(gram).expect("restriction of a positive definite form"))
}

/// Coordinates of the ρ-orthogonal projection of `x` onto `span(basis)`.
fn projection_coords<F: Scalar>(rho: &Metric<F>, basis: &[Vec<F>], gram_inv: &Matrix<F>, x: &[F]) -> Vec<F> {
    let rhs: Vec<F> = basis.iter().map(|b| rho.eval(b, x)).collect();
    gram_inv.mul_vec(&rhs)
}

/// Conditions on `(S, ρ|_S, ω_r)` and `S⊥`. `None` when `[r,r] ≠ 0`, since
/// `S` need not be a subalgebra then.
pub fn check_main_theorem<F: Scalar>(g: &LieAlgebra<F>, r: &Bivector<F>, rho: &Metric<F>) -> Option<MainReport<F>> {
    if first_yb_failure(g, r).is_some() {
        return None;
    }
    let d = decompose(r, rho);
    let (sb, pb) = (&d.s_basis, &d.sperp_basis);
    let m = sb.len();

    let kahler_fail = if m == 0 {
        None
    } else {
        let (h, rho_s) = restrict_to_s(g, rho, &d);
        let form = TwoForm::new(d.omega_r.clone()).expect("ω_r is nondegenerate");
        kahler_violation(&levi_civita(&h, &rho_s), &form)
            .map(|(i, j, k, x)| Failure::new("kahler_sub", vec![i, j, k], x))
    };

    let mut perp_fail = None;
    let q = pb.len();
    if q > 0 {
        let gram_inv = Matrix::from_fn(q, q, |i, j| rho.eval(&pb[i], &pb[j])).inverse().expect("basis");
        let phi = |s: &[F], u: &[F]| {
            let c = projection_coords(rho, pb, &gram_inv, &g.bracket(s, u));
            let mut v = vec![F::zero(); g.dim()];
            for (ci, b) in c.iter().zip(pb) {
                crate::linalg::add_scaled(&mut v, ci, b);
            }
            v
        };
        'perp: for (i, s) in sb.iter().enumerate() {
            for (j, u) in pb.iter().enumerate() {
                for (k, v) in pb.iter().enumerate().skip(j) {
                    let x = rho.eval(&phi(s, u), v) + rho.eval(u, &phi(s, v));
                    if !x.is_zero() {
                        perp_fail = Some(Failure::new("perp_skew", vec![i, j, k], x));
                        break 'perp;
                    }
                }
            }
        }
    }

    let mut oms_fail = None;
    if m > 0 {
        let gram_inv = Matrix::from_fn(m, m, |i, j| rho.eval(&sb[i], &sb[j])).inverse().expect("basis");
        'oms: for (i, u) in pb.iter().enumerate() {
            // φ_{S⊥}(u) = pr_S ∘ ad_u on S, in S coordinates.
            let cols: Vec<Vec<F>> = sb
                .iter()
                .map(|s| projection_coords(rho, sb, &gram_inv, &g.bracket(u, s)))
                .collect();
            let phi = Matrix::from_columns(m, &cols);
            let x = phi.transpose().mul(&d.omega_r).add(&d.omega_r.mul(&phi));
            for a in 0..m {
                for b in 0..m {
                    if !x[(a, b)].is_zero() {
                        oms_fail = Some(Failure::new("s_perp_sp", vec![i, a, b], x[(a, b)].clone()));
                        break 'oms;
                    }
                }
            }
        }
    }
    Some(MainReport {
        kahler_sub: kahler_fail.is_none(),
        perp_skew: perp_fail.is_none(),
        s_perp_sp: oms_fail.is_none(),
        failure: kahler_fail.or(perp_fail).or(oms_fail),
    })
}

/// Whether every `ad_u` is ρ-skew.
pub fn is_biinvariant<F: Scalar>(g: &LieAlgebra<F>, rho: &Metric<F>) -> bool {
    let n = g.dim();
    (0..n).all(|i| {
        let x = rho.matrix().mul(&g.ad(&unit(n, i)).expect("basis vector"));
        x.add(&x.transpose()).is_zero()
    })
}

/// For bi-invariant ρ: whether `Im r_#` is an abelian subalgebra. `None`
/// when ρ is not bi-invariant.
pub fn check_biinvariant<F: Scalar>(g: &LieAlgebra<F>, r: &Bivector<F>, rho: &Metric<F>) -> Option<bool> {
    if !is_biinvariant(g, rho) {
        return None;
    }
    let d = decompose(r, rho);
    let b = &d.s_basis;
    Some((0..b.len()).all(|i| (i + 1..b.len()).all(|j| g.bracket(&b[i], &b[j]).iter().all(Scalar::is_zero))))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RPReport<F> {
    pub verdict: bool,
    /// False only in float mode when the characterizations disagree.
    pub conclusive: bool,
    pub direct: DirectReport<F>,
    pub c: CReport<F>,
    pub main: Option<MainReport<F>>,
    pub biinvariant: Option<bool>,
    pub symplectic: SymplecticReport,
    pub rank: usize,
    pub dim: usize,
}

impl<F: Scalar> RPReport<F> {
    /// The first failing condition across the characterizations.
    pub fn failure(&self) -> Option<&Failure<F>> {
        self.direct
            .failure
            .as_ref()
            .filter(|f| f.condition == "yang_baxter")
            .or(self.c.failure.as_ref())
            .or(self.direct.failure.as_ref())
            .or(self.main.as_ref().and_then(|m| m.failure.as_ref()))
    }
}

/// Runs every applicable characterization and checks that they agree.
///
/// In rational mode a disagreement is an internal error
/// ([`Error::Inconsistent`]); in float mode the report is marked
/// inconclusive instead.
pub fn is_riemann_poisson<F: Scalar>(g: &LieAlgebra<F>, r: &Bivector<F>, rho: &Metric<F>) -> Result<RPReport<F>> {
    if g.dim() != r.dim() || g.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: if r.dim() != g.dim() { r.dim() } else { rho.dim() },
        });
    }
    g.require_jacobi()?;
    let direct = direct_report(g, r, rho);
    let c = check_c_conditions(g, r, rho);
    let main = check_main_theorem(g, r, rho);
    let biinvariant = check_biinvariant(g, r, rho);
    let symplectic = check_symplectic_subalgebra(g, r, rho);
    let verdict = direct.holds();

    let mut disagreements = Vec::new();
    if c.holds() != verdict {
        disagreements.push("c-conditions");
    }
    if c.c1 != direct.yang_baxter {
        disagreements.push("c1");
    }
    if let Some(m) = &main {
        if m.holds() != verdict {
            disagreements.push("main theorem");
        }
    }
    if let Some(b) = biinvariant {
        if b != verdict {
            disagreements.push("bi-invariant shortcut");
        }
    }
    if (symplectic.is_subalgebra && symplectic.delta_omega_zero) != direct.yang_baxter {
        disagreements.push("symplectic subalgebra");
    }
    let conclusive = disagreements.is_empty();
    if !conclusive && F::MODE == Mode::Rational {
        return Err(Error::Inconsistent(format!(
            "direct check gives {verdict} but {} disagree",
            disagreements.join(", ")
        )));
    }
    Ok(RPReport {
        verdict,
        conclusive,
        direct,
        c,
        main,
        biinvariant,
        symplectic,
        rank: r.rank(),
        dim: g.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn so3() -> LieAlgebra<Q> {
        LieAlgebra::from_int_brackets(3, &[(1, 2, &[(3, 1)]), (2, 3, &[(1, 1)]), (3, 1, &[(2, 1)])])
    }

    fn e12(n: usize, x: Q) -> Bivector<Q> {
        Bivector::from_terms(n, &[(0, 1, x)]).unwrap()
    }

    #[test]
    fn decompose_zero() {
        let d = decompose(&Bivector::<Q>::zero(3), &Metric::identity(3));
        assert_eq!(d.rank(), 0);
        assert_eq!(d.i_basis.len(), 3);
        assert!(d.sperp_basis.len() == 3);
    }

    #[test]
    fn decompose_alpha_e12() {
        let alpha = Q::ratio(3, 2);
        let d = decompose(&e12(3, alpha.clone()), &Metric::identity(3));
        assert_eq!(d.s(), Subspace::span(3, &[unit(3, 0), unit(3, 1)]));
        let inv = q(1) / alpha.clone();
        assert_eq!(d.omega(&unit(3, 0), &unit(3, 1)), Some(inv.clone()));
        // ρ(J e1, e2) = ω_r(e1, e2) forces J e1 = e2/α, J e2 = −e1/α.
        assert_eq!(d.j, Matrix::from_rows(vec![vec![q(0), -inv.clone()], vec![inv, q(0)]]));
        for a in 0..2 {
            for b in 0..2 {
                let ju = d.s().combine(&d.j.column(a));
                assert_eq!(Metric::identity(3).eval(&ju, &d.s_basis[b]), d.omega_r[(a, b)]);
            }
        }
        // r_# ∘ τ = id on S.
        let sharp = r_sharp(&e12(3, alpha));
        for a in 0..2 {
            assert_eq!(sharp.mul_vec(&d.tau.column(a)), d.s_basis[a]);
        }
    }

    #[test]
    fn omega_independent_of_preimage() {
        let r = Bivector::from_terms(4, &[(0, 1, q(2)), (0, 2, q(1))]).unwrap();
        let rho = Metric::diag(&[q(1), q(2), q(3), q(4)]).unwrap();
        let d = decompose(&r, &rho);
        let sharp = r_sharp(&r);
        for a in 0..d.rank() {
            for b in 0..d.rank() {
                let ta: Vec<Q> = d.tau.column(a).iter().zip(&d.i_basis[0]).map(|(x, y)| x.clone() + y.clone()).collect();
                assert_eq!(sharp.mul_vec(&ta), d.s_basis[a]);
                assert_eq!(r.eval(&ta, &d.tau.column(b)), d.omega_r[(a, b)]);
            }
        }
    }

    #[test]
    fn musical_isomorphism_maps_i_to_s_perp() {
        let r = Bivector::from_terms(4, &[(0, 1, q(1)), (1, 2, q(2))]).unwrap();
        let rho = Metric::new(Matrix::from_rows(vec![
            vec![q(2), q(1), q(0), q(0)],
            vec![q(1), q(2), q(0), q(0)],
            vec![q(0), q(0), q(1), q(0)],
            vec![q(0), q(0), q(0), q(3)],
        ]))
        .unwrap();
        let d = decompose(&r, &rho);
        let sh = rho.sharp();
        let img = |vs: &[Vec<Q>]| Subspace::span(4, &vs.iter().map(|v| sh.mul_vec(v)).collect::<Vec<_>>());
        assert_eq!(img(&d.i_basis), Subspace::span(4, &d.sperp_basis));
        assert_eq!(img(&d.iperp_basis), d.s());
    }

    #[test]
    fn symplectic_subalgebra_examples() {
        let g = so3();
        let zero = check_symplectic_subalgebra(&g, &Bivector::zero(3), &Metric::identity(3));
        assert!(zero.is_subalgebra && zero.delta_omega_zero);
        let rep = check_symplectic_subalgebra(&g, &e12(3, q(1)), &Metric::identity(3));
        assert!(!rep.is_subalgebra);
    }

    #[test]
    fn direct_examples() {
        let g = so3();
        assert!(check_direct(&g, &Bivector::zero(3), &Metric::identity(3)));
        // [e1,e2] = a e1, [e3,e2] = b e1 with (a, b, α) = (1, 2, 3).
        let g = LieAlgebra::from_int_brackets(3, &[(1, 2, &[(1, 1)]), (3, 2, &[(1, 2)])]);
        let r = e12(3, q(3));
        assert!(check_direct(&g, &r, &Metric::identity(3)));
        // Adding [e1,e3] = e1 keeps Jacobi and [r,r] = 0 but breaks (ii).
        let p = LieAlgebra::from_int_brackets(3, &[(1, 2, &[(1, 1)]), (3, 2, &[(1, 2)]), (1, 3, &[(1, 1)])]);
        assert!(p.jacobi().holds);
        let rep = direct_report(&p, &r, &Metric::identity(3));
        assert!(rep.yang_baxter);
        assert!(!rep.skew);
        assert_eq!(rep.failure.unwrap().condition, "ii");
    }

    #[test]
    fn biinvariant_examples() {
        let g = so3();
        assert_eq!(check_biinvariant(&g, &e12(3, q(1)), &Metric::identity(3)), Some(false));
        let aff = LieAlgebra::<Q>::from_int_brackets(2, &[(1, 2, &[(1, 1)])]);
        assert_eq!(check_biinvariant(&aff, &e12(2, q(1)), &Metric::identity(2)), None);
    }

    #[test]
    fn rp_report_examples() {
        let g = so3();
        let rep = is_riemann_poisson(&g, &Bivector::zero(3), &Metric::identity(3)).unwrap();
        assert!(rep.verdict);
        let rep = is_riemann_poisson(&g, &e12(3, q(1)), &Metric::identity(3)).unwrap();
        assert!(!rep.verdict);
        assert!(!rep.c.c1);
        assert_eq!(rep.failure().unwrap().condition, "yang_baxter");
        assert!(rep.main.is_none());
    }
}
