use proptest::prelude::*;

use rplie::algebra::yang_baxter_bracket;
use rplie::connection::levi_civita;
use rplie::construct::{assemble_unchecked, check_eqpro};
use rplie::io::{parse, serialize, Document};
use rplie::random::{
    catalog_instance, mutate, random_invertible, random_triple, rng, transform_bivector, valid_construction,
};
use rplie::rpcheck::{check_c_conditions, check_direct, check_main_theorem, check_symplectic_subalgebra, decompose};
use rplie::scalar::{format_rational, parse_rational};
use rplie::sl2::{classify, Sl2Class, Sl2Subalgebra};
use rplie::{Rational, Scalar, Subspace};

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn levi_civita_is_torsion_free_and_metric(seed in any::<u64>(), n in 2usize..=5) {
        let (g, _, rho) = random_triple(&mut rng(seed), n);
        let a = levi_civita(&g, &rho);
        prop_assert!(a.is_torsion_free(&g));
        prop_assert!(a.is_metric(&rho));
    }

    #[test]
    fn characterizations_agree(seed in any::<u64>(), n in 2usize..=5) {
        let (g, r, rho) = random_triple(&mut rng(seed), n);
        let d = check_direct(&g, &r, &rho);
        prop_assert_eq!(d, check_c_conditions(&g, &r, &rho).holds());
        if let Some(m) = check_main_theorem(&g, &r, &rho) {
            prop_assert_eq!(d, m.holds());
        }
    }

    #[test]
    fn yang_baxter_iff_symplectic_subalgebra(seed in any::<u64>(), n in 2usize..=5) {
        let (g, r, rho) = random_triple(&mut rng(seed), n);
        let s = check_symplectic_subalgebra(&g, &r, &rho);
        prop_assert_eq!(yang_baxter_bracket(&g, &r).is_zero(), s.is_subalgebra && s.delta_omega_zero);
    }

    #[test]
    fn verdict_survives_change_of_basis(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let inst = catalog_instance(&mut rng);
        let p = random_invertible(&mut rng, inst.g.dim());
        let g = inst.g.change_basis(&p).unwrap();
        let r = transform_bivector(&inst.r, &p);
        let rho = inst.rho.change_basis(&p).unwrap();
        prop_assert_eq!(check_direct(&g, &r, &rho), check_direct(&inst.g, &inst.r, &inst.rho));
    }

    #[test]
    fn decomposition_splits_the_space(seed in any::<u64>(), n in 2usize..=5) {
        let (_, r, rho) = random_triple(&mut rng(seed), n);
        let d = decompose(&r, &rho);
        prop_assert_eq!(d.rank() % 2, 0);
        prop_assert_eq!(d.rank(), r.rank());
        let mut all = d.s_basis.clone();
        all.extend(d.sperp_basis.iter().cloned());
        prop_assert_eq!(Subspace::span(n, &all).dim(), n);
        for s in &d.s_basis {
            for u in &d.sperp_basis {
                prop_assert!(rho.eval(s, u).is_zero());
            }
        }
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>(), n in 2usize..=5) {
        let (g, r, rho) = random_triple(&mut rng(seed), n);
        let doc = Document::from_triple(&g, &r, &rho);
        let text = serialize(&doc);
        prop_assert_eq!(parse(&text).unwrap(), doc);
        prop_assert_eq!(serialize(&parse(&text).unwrap()), text);
    }

    #[test]
    fn eqpro_iff_jacobi(seed in any::<u64>(), mutated in any::<bool>()) {
        let mut rng = rng(seed);
        let base = valid_construction(&mut rng);
        let d = if mutated { mutate(&mut rng, &base) } else { base };
        prop_assert_eq!(check_eqpro(&d).holds(), assemble_unchecked(&d).0.jacobi().holds);
    }

    #[test]
    fn sl2_class_is_span_invariant(n in -40i64..40, den in 1i64..9, c in prop::array::uniform4(-3i64..=3)) {
        prop_assume!(n != 0);
        prop_assume!(c[0] * c[3] - c[1] * c[2] != 0);
        let x = Rational::ratio(n, den);
        let q = |v: i64| Rational::from_i64(v);
        let s = Sl2Subalgebra::gx(&x).recombine(&q(c[0]), &q(c[1]), &q(c[2]), &q(c[3])).unwrap();
        prop_assert_eq!(classify(&s), Sl2Class::Gx(x));
    }

    #[test]
    fn rational_literals_round_trip(n in any::<i64>(), d in 1i64..1_000_000) {
        let q = Rational::ratio(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&q)), Some(q.clone()));
        prop_assert_eq!(parse_rational(&q.to_report()), Some(q));
    }
}
