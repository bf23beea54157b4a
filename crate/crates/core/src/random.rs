//! Seeded generators of test instances: metric Lie algebras, bivectors,
//! flat algebras in normal form and construction data.
//!
//! Every generator draws from a [`ChaCha8Rng`], so a seed fixes the output.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Bivector, LieAlgebra, Metric, TwoForm};
use crate::catalog::{families, instantiate, sample, Family, Instance};
use crate::construct::{dim1_extension_data, extract_construction, sp_cap_der, ConstructionData};
use crate::linalg::{add_scaled, Matrix};
use crate::scalar::{Rational, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n/d` with `d ∈ 1..=4` and `n ∈ -6..=6`, or `n ∈ 1..=8` when `positive`.
pub fn small_rational(rng: &mut ChaCha8Rng, positive: bool) -> Rational {
    let d: i64 = rng.gen_range(1..=4);
    let n: i64 = if positive { rng.gen_range(1..=8) } else { rng.gen_range(-6..=6) };
    Rational::ratio(n, d)
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let q = small_rational(rng, false);
        if !q.is_zero() {
            return q;
        }
    }
}

fn small_int(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    Rational::from_i64(rng.gen_range(-bound..=bound))
}

/// A positive definite `L D Lᵀ` with `L` unit lower triangular.
pub fn random_metric(rng: &mut ChaCha8Rng, n: usize) -> Metric<Rational> {
    let l = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Rational::one(),
        std::cmp::Ordering::Greater => small_int(rng, 1),
        std::cmp::Ordering::Less => Rational::zero(),
    });
    let d: Vec<Rational> = (0..n).map(|_| small_rational(rng, true)).collect();
    let g = l.mul(&Matrix::diag(&d)).mul(&l.transpose());
    Metric::new(g).expect("L D Lᵀ is positive definite")
}

/// A random unimodular matrix: a permutation times `L U` with unit
/// triangular factors.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    let tri = |rng: &mut ChaCha8Rng, lower: bool| {
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else if (i > j) == lower {
                small_int(rng, 1)
            } else {
                Rational::zero()
            }
        })
    };
    let l = tri(rng, true);
    let u = tri(rng, false);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let p = Matrix::from_fn(n, n, |i, j| if perm[i] == j { Rational::one() } else { Rational::zero() });
    p.mul(&l).mul(&u)
}

/// Expresses `r` in the basis given by the columns of `p`.
pub fn transform_bivector(r: &Bivector<Rational>, p: &Matrix<Rational>) -> Bivector<Rational> {
    let inv = p.inverse().expect("invertible change of basis");
    Bivector::new(inv.mul(r.matrix()).mul(&inv.transpose())).expect("congruence keeps antisymmetry")
}

fn int_bracket(n: usize, list: &[(usize, usize, usize, i64)]) -> LieAlgebra<Rational> {
    let mut br: Vec<(usize, usize, Vec<Rational>)> = Vec::new();
    for &(i, j, k, c) in list {
        let mut v = vec![Rational::zero(); n];
        v[k] = Rational::from_i64(c);
        match br.iter_mut().find(|(a, b, _)| *a == i && *b == j) {
            Some(entry) => entry.2[k] = v[k].clone(),
            None => br.push((i, j, v)),
        }
    }
    LieAlgebra::from_brackets(n, &br).expect("antisymmetric by construction")
}

/// `ℝ e_n ⋉_D ℝ^{n-1}` with `[e_n, e_i] = D e_i`.
pub fn semidirect(n: usize, d: &Matrix<Rational>) -> LieAlgebra<Rational> {
    let brackets: Vec<(usize, usize, Vec<Rational>)> = (0..n - 1)
        .map(|i| {
            let mut v = d.column(i);
            v.push(Rational::zero());
            (n - 1, i, v)
        })
        .collect();
    LieAlgebra::from_brackets(n, &brackets).expect("antisymmetric by construction")
}

pub fn so3() -> LieAlgebra<Rational> {
    int_bracket(3, &[(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)])
}

pub fn sl2() -> LieAlgebra<Rational> {
    int_bracket(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
}

pub fn heisenberg() -> LieAlgebra<Rational> {
    int_bracket(3, &[(0, 1, 2, 1)])
}

/// `so(4)` on `E12, E13, E14, E23, E24, E34` with `[E_ij, E_jk] = E_ik`.
pub fn so4() -> LieAlgebra<Rational> {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let idx = |a: usize, b: usize| -> (usize, i64) {
        if a < b {
            (pairs.iter().position(|&p| p == (a, b)).unwrap(), 1)
        } else {
            (pairs.iter().position(|&p| p == (b, a)).unwrap(), -1)
        }
    };
    let mut list = Vec::new();
    for (x, &(i, j)) in pairs.iter().enumerate() {
        for (y, &(k, l)) in pairs.iter().enumerate().skip(x + 1) {
            // [E_ij, E_kl] = δ_jk E_il − δ_il E_kj − δ_ik E_jl + δ_jl E_ki
            let mut terms: Vec<(usize, i64)> = Vec::new();
            let mut push = |a: usize, b: usize, s: i64| {
                if a != b {
                    let (t, sign) = idx(a, b);
                    terms.push((t, s * sign));
                }
            };
            if j == k {
                push(i, l, 1);
            }
            if i == l {
                push(k, j, -1);
            }
            if i == k {
                push(j, l, -1);
            }
            if j == l {
                push(k, i, 1);
            }
            for (t, c) in terms {
                list.push((x, y, t, c));
            }
        }
    }
    int_bracket(6, &list)
}

/// Block direct sum of two algebras.
pub fn direct_sum(a: &LieAlgebra<Rational>, b: &LieAlgebra<Rational>) -> LieAlgebra<Rational> {
    let (n, m) = (a.dim(), b.dim());
    let mut br = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = a.basis_bracket(i, j);
            v.extend(vec![Rational::zero(); m]);
            br.push((i, j, v));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            let mut v = vec![Rational::zero(); n];
            v.extend(b.basis_bracket(i, j));
            br.push((n + i, n + j, v));
        }
    }
    LieAlgebra::from_brackets(n + m, &br).expect("antisymmetric by construction")
}

fn pad(g: LieAlgebra<Rational>, n: usize) -> LieAlgebra<Rational> {
    if g.dim() >= n {
        g
    } else {
        direct_sum(&g, &LieAlgebra::abelian(n - g.dim()))
    }
}

/// A Lie algebra of dimension `n` in a standard basis, together with a
/// bivector spanning a subalgebra (so that `[r,r] = 0`), if one is at hand.
fn model_algebra(rng: &mut ChaCha8Rng, n: usize) -> (LieAlgebra<Rational>, Option<Bivector<Rational>>) {
    let kinds = if n >= 3 { 6 } else { 2 };
    match rng.gen_range(0..kinds) {
        0 => (LieAlgebra::abelian(n), None),
        1 => {
            // Upper triangular D keeps e1 an eigenvector.
            let d = Matrix::from_fn(n - 1, n - 1, |i, j| if i <= j { small_int(rng, 2) } else { Rational::zero() });
            let g = semidirect(n, &d);
            let r = if n >= 4 && rng.gen_bool(0.5) {
                Bivector::from_terms(n, &[(0, 1, nonzero_rational(rng)), (1, 2, small_rational(rng, false))])
            } else {
                Bivector::from_terms(n, &[(0, n - 1, nonzero_rational(rng))])
            };
            (g, r.ok())
        }
        2 => (pad(heisenberg(), n), None),
        3 => (pad(so3(), n), None),
        4 => (pad(sl2(), n), Bivector::from_terms(n, &[(0, 1, nonzero_rational(rng))]).ok()),
        _ => {
            let aff = int_bracket(2, &[(0, 1, 1, 1)]);
            let g = if n >= 4 { pad(direct_sum(&aff, &aff), n) } else { pad(aff, n) };
            (g, Bivector::from_terms(n, &[(0, 1, nonzero_rational(rng))]).ok())
        }
    }
}

/// A random Lie algebra of dimension `n`, hidden behind a random change of
/// basis.
pub fn random_lie_algebra(rng: &mut ChaCha8Rng, n: usize) -> LieAlgebra<Rational> {
    let (g, _) = model_algebra(rng, n);
    let p = random_invertible(rng, n);
    g.change_basis(&p).expect("invertible change of basis")
}

/// An antisymmetric matrix with small rational entries; sometimes of rank 2.
pub fn random_bivector(rng: &mut ChaCha8Rng, n: usize) -> Bivector<Rational> {
    if rng.gen_bool(0.3) {
        let u: Vec<Rational> = (0..n).map(|_| small_int(rng, 2)).collect();
        let v: Vec<Rational> = (0..n).map(|_| small_int(rng, 2)).collect();
        return Bivector::wedge(&u, &v);
    }
    let mut terms = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.6) {
                terms.push((i, j, small_rational(rng, false)));
            }
        }
    }
    Bivector::from_terms(n, &terms).expect("indices in range")
}

/// Random metric Lie algebra with a random bivector. About half of the
/// bivectors solve the classical Yang-Baxter equation by construction.
pub fn random_triple(rng: &mut ChaCha8Rng, n: usize) -> (LieAlgebra<Rational>, Bivector<Rational>, Metric<Rational>) {
    let (g, sub) = model_algebra(rng, n);
    let r = match sub {
        Some(r) if rng.gen_bool(0.5) => r,
        _ => random_bivector(rng, n),
    };
    let p = random_invertible(rng, n);
    let g = g.change_basis(&p).expect("invertible change of basis");
    let r = transform_bivector(&r, &p);
    (g, r, random_metric(rng, n))
}

/// Families whose sampled instances satisfy Jacobi.
pub fn sound_families() -> Vec<&'static Family> {
    families()
        .iter()
        .filter(|f| !f.partial && (f.is_corrected() || !matches!(f.id, "T5.R9" | "T9.R1" | "T9.R2" | "T9.R3")))
        .collect()
}

/// An instantiation of a random catalog family.
pub fn catalog_instance(rng: &mut ChaCha8Rng) -> Instance<Rational> {
    let fams = sound_families();
    loop {
        let fam = fams[rng.gen_range(0..fams.len())];
        if let Some(values) = sample(fam, rng) {
            if let Ok(inst) = instantiate(fam, &values) {
                return inst;
            }
        }
    }
}

/// Small change of `r` or ρ, or a change of basis applied to the whole
/// triple.
pub fn perturb(
    rng: &mut ChaCha8Rng,
    g: &LieAlgebra<Rational>,
    r: &Bivector<Rational>,
    rho: &Metric<Rational>,
) -> (LieAlgebra<Rational>, Bivector<Rational>, Metric<Rational>) {
    let n = g.dim();
    let i = rng.gen_range(0..n);
    let j = (i + rng.gen_range(1..n)) % n;
    match rng.gen_range(0..3) {
        0 => {
            let delta = Bivector::from_terms(n, &[(i.min(j), i.max(j), nonzero_rational(rng))]).expect("i ≠ j");
            (g.clone(), r.add(&delta), rho.clone())
        }
        1 => {
            let mut m = rho.matrix().clone();
            let eps = Rational::ratio(rng.gen_range(1..=3), 8);
            loop {
                let mut e = Matrix::zeros(n, n);
                e[(i, j)] = eps.clone();
                e[(j, i)] = eps.clone();
                let cand = m.add(&e);
                if let Ok(rho2) = Metric::new(cand) {
                    return (g.clone(), r.clone(), rho2);
                }
                m = m.add(&Matrix::identity(n));
            }
        }
        _ => {
            let p = random_invertible(rng, n);
            (
                g.change_basis(&p).expect("invertible"),
                transform_bivector(r, &p),
                rho.change_basis(&p).expect("invertible"),
            )
        }
    }
}

/// Flat metric Lie algebra in normal form: `P` abelian of dimension `p`
/// acting on `q` orthogonal planes by rotations with rational weights
/// `λ_i(a_j)`, then hidden by a random change of basis.
pub fn random_flat(rng: &mut ChaCha8Rng, p: usize, q: usize) -> (LieAlgebra<Rational>, Metric<Rational>) {
    let n = p + 2 * q;
    let mut br = Vec::new();
    for a in 0..p {
        for i in 0..q {
            let l = small_rational(rng, false);
            let (e, f) = (p + 2 * i, p + 2 * i + 1);
            let mut ve = vec![Rational::zero(); n];
            ve[f] = l.clone();
            let mut vf = vec![Rational::zero(); n];
            vf[e] = -l;
            br.push((a, e, ve));
            br.push((a, f, vf));
        }
    }
    let g = LieAlgebra::from_brackets(n, &br).expect("antisymmetric by construction");
    let rho = Metric::identity(n);
    let b = random_invertible(rng, n);
    (g.change_basis(&b).expect("invertible"), rho.change_basis(&b).expect("invertible"))
}

/// `W⁻¹ S` with `S` symmetric: an element of `sp(ω)`.
pub fn random_sp(rng: &mut ChaCha8Rng, omega: &TwoForm<Rational>) -> Matrix<Rational> {
    let k = omega.dim();
    let s = symmetric(rng, k);
    omega.matrix().inverse().expect("nondegenerate").mul(&s)
}

/// `ρ⁻¹ A` with `A` antisymmetric: an element of `so(ρ)`.
pub fn random_so(rng: &mut ChaCha8Rng, rho: &Metric<Rational>) -> Matrix<Rational> {
    let m = rho.dim();
    let mut a = Matrix::zeros(m, m);
    for i in 0..m {
        for j in i + 1..m {
            let x = small_int(rng, 2);
            a[(j, i)] = -x.clone();
            a[(i, j)] = x;
        }
    }
    rho.matrix().inverse().expect("nondegenerate").mul(&a)
}

fn symmetric(rng: &mut ChaCha8Rng, k: usize) -> Matrix<Rational> {
    let mut s = Matrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let x = small_int(rng, 2);
            s[(i, j)] = x.clone();
            s[(j, i)] = x;
        }
    }
    s
}

/// Construction data satisfying the six equations: either read off a
/// catalog instance or a 1-dimensional extension by a random symplectic
/// derivation.
pub fn valid_construction(rng: &mut ChaCha8Rng) -> ConstructionData<Rational> {
    loop {
        let inst = catalog_instance(rng);
        if rng.gen_bool(0.5) {
            if let Ok((d, _)) = extract_construction(&inst.g, &inst.r, &inst.rho) {
                return d;
            }
            continue;
        }
        let Ok((h, _)) = extract_construction(&inst.g, &inst.r, &inst.rho) else {
            continue;
        };
        if h.h_dim() + 1 > 6 {
            continue;
        }
        let ders = sp_cap_der(&h.h, &h.omega);
        let mut d = Matrix::zeros(h.h_dim(), h.h_dim());
        for x in &ders {
            d = d.add(&x.scale(&small_int(rng, 2)));
        }
        let norm = Rational::from_i64(rng.gen_range(1..=3));
        return dim1_extension_data(h.h, h.rho_h, h.omega, d, norm).expect("positive norm");
    }
}

/// One random change to a single ingredient, keeping the type invariants.
pub fn mutate(rng: &mut ChaCha8Rng, d: &ConstructionData<Rational>) -> ConstructionData<Rational> {
    let mut out = d.clone();
    let (k, m) = (d.h_dim(), d.p_dim());
    loop {
        match rng.gen_range(0..4) {
            0 if m >= 2 => {
                let a = rng.gen_range(0..m);
                let b = (a + rng.gen_range(1..m)) % m;
                let mut v = out.mu_at(a, b).to_vec();
                add_scaled(&mut v, &nonzero_rational(rng), &crate::linalg::unit(k, rng.gen_range(0..k)));
                out.set_mu(a, b, v);
            }
            1 if m >= 1 && k >= 1 => {
                let a = rng.gen_range(0..m);
                out.phi_p[a] = out.phi_p[a].add(&random_sp(rng, &d.omega));
            }
            2 if m >= 2 && k >= 1 => {
                let u = rng.gen_range(0..k);
                out.phi_h[u] = out.phi_h[u].add(&random_so(rng, &d.rho_p));
            }
            3 if m >= 2 => {
                let a = rng.gen_range(0..m);
                let b = (a + rng.gen_range(1..m)) % m;
                let (a, b) = (a.min(b), a.max(b));
                let mut br = Vec::new();
                for i in 0..m {
                    for j in i + 1..m {
                        let mut v = out.p_bracket.basis_bracket(i, j);
                        if (i, j) == (a, b) {
                            let c = rng.gen_range(0..m);
                            v[c] = v[c].clone() + nonzero_rational(rng);
                        }
                        br.push((i, j, v));
                    }
                }
                out.p_bracket = LieAlgebra::from_brackets(m, &br).expect("antisymmetric");
            }
            _ if m == 0 => return out,
            _ => continue,
        }
        if out != *d {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connection::{curvature, levi_civita};
    use crate::construct::check_eqpro;

    #[test]
    fn model_algebras_satisfy_jacobi() {
        for g in [so3(), sl2(), heisenberg(), so4()] {
            assert!(g.jacobi().holds);
        }
        let mut rng = rng(1);
        for n in 2..=5 {
            for _ in 0..20 {
                let (g, r, rho) = random_triple(&mut rng, n);
                assert!(g.jacobi().holds);
                assert_eq!((r.dim(), rho.dim()), (n, n));
            }
        }
    }

    #[test]
    fn so4_is_compact() {
        // −Killing form of so(4) is a positive multiple of the identity.
        let g = so4();
        let ads: Vec<_> = (0..6).map(|i| g.ad(&crate::linalg::unit(6, i)).unwrap()).collect();
        let k = Matrix::from_fn(6, 6, |i, j| {
            let m = ads[i].mul(&ads[j]);
            (0..6).fold(Rational::zero(), |acc, t| acc + m[(t, t)].clone())
        });
        assert_eq!(k, Matrix::identity(6).scale(&Rational::from_i64(-4)));
    }

    #[test]
    fn invertible_and_metric() {
        let mut rng = rng(2);
        for n in 1..=6 {
            assert_eq!(random_invertible(&mut rng, n).det().abs(), Rational::one());
            let m = random_metric(&mut rng, n);
            assert!(m.matrix().leading_minors().iter().all(Scalar::is_positive));
        }
    }

    #[test]
    fn flat_normal_form_is_flat() {
        let mut rng = rng(3);
        for (p, q) in [(2, 1), (2, 2), (1, 2)] {
            let (g, rho) = random_flat(&mut rng, p, q);
            assert!(g.jacobi().holds);
            assert!(curvature(&g, &levi_civita(&g, &rho)).is_zero());
        }
    }

    #[test]
    fn valid_constructions_satisfy_eqpro() {
        let mut rng = rng(4);
        for _ in 0..10 {
            let d = valid_construction(&mut rng);
            assert!(check_eqpro(&d).holds());
            let m = mutate(&mut rng, &d);
            assert_eq!((m.h_dim(), m.p_dim()), (d.h_dim(), d.p_dim()));
        }
    }

    #[test]
    fn deterministic() {
        let a = random_triple(&mut rng(9), 4);
        let b = random_triple(&mut rng(9), 4);
        assert_eq!(a, b);
    }
}
