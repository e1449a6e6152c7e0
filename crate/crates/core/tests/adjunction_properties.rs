use std::collections::BTreeMap;
use std::sync::OnceLock;

use brauerkit::adjunction::enumerate::enumerate_arrows;
use brauerkit::adjunction::{equal_k, equiv_k, kappa_arrow, psi, star, xi, ArrowTerm};
use brauerkit::semantics::eval_kappa;
use brauerkit::term::{GenKind, Generator, Term};
use proptest::prelude::*;
use proptest::sample::Index;

fn arrows() -> &'static [ArrowTerm] {
    static ARROWS: OnceLock<Vec<ArrowTerm>> = OnceLock::new();
    ARROWS.get_or_init(|| enumerate_arrows(2, 5))
}

fn by_type() -> &'static [Vec<ArrowTerm>] {
    static GROUPS: OnceLock<Vec<Vec<ArrowTerm>>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        let mut groups: BTreeMap<(u32, u32), Vec<ArrowTerm>> = BTreeMap::new();
        for f in arrows() {
            groups.entry(f.typ().unwrap()).or_default().push(f.clone());
        }
        groups.into_values().collect()
    })
}

fn arrow() -> impl Strategy<Value = ArrowTerm> {
    any::<Index>().prop_map(|i| i.get(arrows()).clone())
}

fn same_type_pair() -> impl Strategy<Value = (ArrowTerm, ArrowTerm)> {
    (any::<Index>(), any::<Index>(), any::<Index>()).prop_map(|(g, a, b)| {
        let group = g.get(by_type());
        (a.get(group).clone(), b.get(group).clone())
    })
}

fn term(max_index: u32, max_len: usize) -> impl Strategy<Value = Term> {
    let generator = (0..3u8, 1..=max_index).prop_map(|(kind, k)| {
        let kind = [GenKind::Cup, GenKind::Cap, GenKind::Cross][kind as usize];
        Generator::new(kind, k)
    });
    prop::collection::vec(generator, 0..=max_len).prop_map(Term::from_generators)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn psi_inverts_xi(t in term(6, 12)) {
        prop_assert_eq!(psi(&xi(&t)), t);
    }

    #[test]
    fn xi_inverts_psi_up_to_padding(f in arrow()) {
        let back = xi(&psi(&f));
        prop_assert!(equiv_k(&back, &f));
        prop_assert_eq!(eval_kappa(&psi(&back)), eval_kappa(&psi(&f)));
    }

    #[test]
    fn cancellation((f, g) in same_type_pair()) {
        let lifted = equal_k(&ArrowTerm::f(f.clone()), &ArrowTerm::f(g.clone()));
        prop_assert_eq!(lifted, equal_k(&f, &g));
    }

    #[test]
    fn loops_are_natural(f in arrow(), k in 0..3u32) {
        let (s, t) = f.typ().unwrap();
        let before = ArrowTerm::comp(f.clone(), kappa_arrow(s));
        let after = ArrowTerm::comp(kappa_arrow(t), f.clone());
        prop_assert!(equal_k(&before, &after));
        prop_assert!(equal_k(&ArrowTerm::f_pow(kappa_arrow(s), k), &kappa_arrow(s + k)));
    }

    #[test]
    fn star_composes_terms(f in arrow(), g in arrow()) {
        let h = star(&g, &f);
        prop_assert!(h.typ().is_ok());
        prop_assert_eq!(psi(&h), &psi(&g) * &psi(&f));
    }

    #[test]
    fn composition_is_associative_up_to_equality(f in arrow(), g in arrow(), h in arrow()) {
        let left = star(&star(&h, &g), &f);
        let right = star(&h, &star(&g, &f));
        prop_assert!(equiv_k(&left, &right));
    }
}
