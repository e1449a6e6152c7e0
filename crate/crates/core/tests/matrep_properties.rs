use std::sync::OnceLock;

use brauerkit::adjunction::enumerate::enumerate_arrows;
use brauerkit::adjunction::{equal_j, tensor, ArrowTerm};
use brauerkit::matrep::{
    e_matrix, h_matrix, id_matrix, kron, matmul, rep_j, rep_k, s_matrix, transpose, IntMatrix, Matrix,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::Index;

fn arrows() -> &'static [ArrowTerm] {
    static ARROWS: OnceLock<Vec<ArrowTerm>> = OnceLock::new();
    ARROWS.get_or_init(|| enumerate_arrows(2, 4))
}

fn arrow() -> impl Strategy<Value = ArrowTerm> {
    any::<Index>().prop_map(|i| i.get(arrows()).clone())
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-4i64..=4, rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| BigInt::from(v[i * cols + j])))
}

/// Four matrices whose shapes allow `(a ⊗ b)(c ⊗ d)`.
fn interchange_quad() -> impl Strategy<Value = (IntMatrix, IntMatrix, IntMatrix, IntMatrix)> {
    (0..4usize, 0..4usize, 0..4usize, 0..4usize, 0..4usize, 0..4usize).prop_flat_map(|(r, s, t, u, v, w)| {
        (matrix(r, t), matrix(s, u), matrix(t, v), matrix(u, w))
    })
}

fn is_permutation(m: &IntMatrix) -> bool {
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let entries_ok = (0..m.rows()).all(|i| (0..m.cols()).all(|j| *m.get(i, j) == one || *m.get(i, j) == zero));
    let rows_ok = (0..m.rows()).all(|i| (0..m.cols()).filter(|&j| *m.get(i, j) == one).count() == 1);
    let cols_ok = (0..m.cols()).all(|j| (0..m.rows()).filter(|&i| *m.get(i, j) == one).count() == 1);
    m.rows() == m.cols() && entries_ok && rows_ok && cols_ok
}

#[test]
fn s_matrices_are_permutations() {
    for m in 0..=6 {
        for n in 0..=6 {
            let s = s_matrix(m, n);
            assert!(is_permutation(&s), "s({m},{n})");
            assert_eq!(matmul(&s_matrix(n, m), &s).unwrap(), id_matrix(m * n));
        }
    }
}

#[test]
fn e_and_h_are_transposes() {
    for m in 0..=4 {
        for n in 0..=4 {
            assert_eq!(transpose(&e_matrix(m, n)), h_matrix(m, n));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn kron_interchange((a, b, c, d) in interchange_quad()) {
        let left = matmul(&kron(&a, &b), &kron(&c, &d)).unwrap();
        let right = kron(&matmul(&a, &c).unwrap(), &matmul(&b, &d).unwrap());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rep_is_a_functor(f in arrow(), g in arrow(), p in 2..4usize) {
        let top = f.max_object().unwrap().max(g.max_object().unwrap()) + 1;
        prop_assume!(p.pow(top) <= 1024);
        let (s, t) = f.typ().unwrap();
        prop_assert_eq!(rep_k(&ArrowTerm::Id(s), p).unwrap(), id_matrix(p.pow(s)));
        prop_assert_eq!(
            rep_k(&ArrowTerm::f(f.clone()), p).unwrap(),
            kron(&id_matrix(p), &rep_k(&f, p).unwrap())
        );
        if g.typ().unwrap().0 == t {
            let gf = ArrowTerm::comp(g.clone(), f.clone());
            let product = matmul(&rep_k(&g, p).unwrap(), &rep_k(&f, p).unwrap()).unwrap();
            prop_assert_eq!(rep_k(&gf, p).unwrap(), product);
        }
    }

    #[test]
    fn rep_is_monoidal(f in arrow(), g in arrow()) {
        let fg = tensor(&f, &g).unwrap();
        prop_assume!(fg.max_object().unwrap() <= 10);
        prop_assert_eq!(rep_k(&fg, 2).unwrap(), kron(&rep_k(&f, 2).unwrap(), &rep_k(&g, 2).unwrap()));
    }

    #[test]
    fn boolean_rep_matches_diagrams(f in arrow(), g in arrow()) {
        if f.typ() == g.typ() {
            prop_assert_eq!(rep_j(&f, 2).unwrap() == rep_j(&g, 2).unwrap(), equal_j(&f, &g));
        }
        prop_assert_eq!(rep_j(&f, 2).unwrap(), rep_k(&f, 2).unwrap().to_bool());
    }
}
