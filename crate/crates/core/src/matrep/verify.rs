//! Faithfulness of the representation and the subsided equations of the
//! matrix category.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::hash::Hash;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adjunction::enumerate::enumerate_arrows;
use crate::adjunction::{kappa_arrow, psi, ArrowTerm};
use crate::diagram::{Diagram, SKDiagram};
use crate::par::Exec;
use crate::semantics::eval_kappa;

use super::rep::{rep_j_with_cap, rep_k_with_cap, DEFAULT_DIM_CAP};
use super::{e_matrix, h_matrix, id_matrix, s_matrix, IntMatrix, Matrix};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FaithfulnessReport {
    pub arrows: usize,
    pub types: usize,
    pub same_type_pairs: u64,
    /// Arrows skipped because their matrices would exceed the cap.
    pub refused: usize,
    /// Classes where integer matrices and diagrams with circles disagree.
    pub mismatches: Vec<String>,
    /// Same for boolean matrices against diagrams without circles.
    pub boolean_mismatches: Vec<String>,
    /// Images of `c^k` for `k = 0..`, as scalars.
    pub circle_images: Vec<BigInt>,
    pub circle_images_distinct: bool,
}

impl FaithfulnessReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.circle_images_distinct
    }
}

struct Keys {
    typ: (u32, u32),
    int: IntMatrix,
    boolean: Matrix<super::Bool>,
    sk: SKDiagram,
    sj: Diagram,
}

/// Records, within one type, every key of one kind that is attached to
/// several keys of the other kind.
fn partition_mismatches<A, B>(pairs: &[(A, B, &ArrowTerm)], label: &str) -> Vec<String>
where
    A: Eq + Hash,
    B: Eq + Hash,
{
    let mut left: HashMap<&A, (HashSet<&B>, &ArrowTerm)> = HashMap::new();
    let mut right: HashMap<&B, (HashSet<&A>, &ArrowTerm)> = HashMap::new();
    for (a, b, f) in pairs {
        left.entry(a).or_insert_with(|| (HashSet::new(), f)).0.insert(b);
        right.entry(b).or_insert_with(|| (HashSet::new(), f)).0.insert(a);
    }
    let mut out = Vec::new();
    for (set, f) in left.values() {
        if set.len() > 1 {
            out.push(format!("{label}: one matrix, {} diagrams, e.g. {f}", set.len()));
        }
    }
    for (set, f) in right.values() {
        if set.len() > 1 {
            out.push(format!("{label}: one diagram, {} matrices, e.g. {f}", set.len()));
        }
    }
    out.sort();
    out
}

/// Checks on every well-typed arrow within the bounds that two arrows of
/// the same type have equal matrices exactly when they are equal, and
/// that the powers of the loop map to distinct scalars.
pub fn verify_faithfulness(max_index: u32, max_size: usize, p: usize) -> FaithfulnessReport {
    verify_faithfulness_with(Exec::default(), max_index, max_size, p, DEFAULT_DIM_CAP)
}

pub fn verify_faithfulness_with(
    exec: Exec,
    max_index: u32,
    max_size: usize,
    p: usize,
    cap: usize,
) -> FaithfulnessReport {
    let arrows = enumerate_arrows(max_index, max_size);
    let keys: Vec<Option<Keys>> = exec.map(&arrows, |f| {
        let int = rep_k_with_cap(f, p, cap).ok()?;
        let boolean = rep_j_with_cap(f, p, cap).ok()?;
        let sk = eval_kappa(&psi(f));
        Some(Keys {
            typ: f.typ().ok()?,
            int,
            boolean,
            sj: sk.diagram.clone(),
            sk,
        })
    });

    let mut report = FaithfulnessReport {
        arrows: arrows.len(),
        ..Default::default()
    };
    let mut by_type: BTreeMap<(u32, u32), Vec<(&Keys, &ArrowTerm)>> = BTreeMap::new();
    for (k, f) in keys.iter().zip(&arrows) {
        match k {
            Some(k) => by_type.entry(k.typ).or_default().push((k, f)),
            None => report.refused += 1,
        }
    }
    report.types = by_type.len();
    for ((s, t), members) in &by_type {
        let n = members.len() as u64;
        report.same_type_pairs += n * (n - 1) / 2;
        let label = format!("{s} → {t}");
        let int: Vec<_> = members.iter().map(|(k, f)| (&k.int, &k.sk, *f)).collect();
        report.mismatches.extend(partition_mismatches(&int, &label));
        let boolean: Vec<_> = members.iter().map(|(k, f)| (&k.boolean, &k.sj, *f)).collect();
        report.boolean_mismatches.extend(partition_mismatches(&boolean, &label));
    }

    let mut circle = ArrowTerm::Id(0);
    for _ in 0..=8 {
        let m = rep_k_with_cap(&circle, p, cap).expect("scalar arrows stay under any cap");
        let scalar = if m.rows() == 1 && m.cols() == 1 {
            m.get(0, 0).clone()
        } else {
            BigInt::from(-1)
        };
        report.circle_images.push(scalar);
        circle = ArrowTerm::comp(kappa_arrow(0), circle);
    }
    let distinct: HashSet<&BigInt> = report.circle_images.iter().collect();
    let powers = (0..=8u32).all(|k| report.circle_images[k as usize] == BigInt::from(p).pow(k));
    report.circle_images_distinct = powers && distinct.len() == report.circle_images.len();
    report
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SubsidedReport {
    pub trials: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SubsidedReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn kron_all(parts: &[&IntMatrix]) -> IntMatrix {
    parts[1..]
        .iter()
        .fold(parts[0].clone(), |acc, m| acc.kron(m))
}

fn product(parts: &[&IntMatrix]) -> IntMatrix {
    parts[1..].iter().fold(parts[0].clone(), |acc, m| {
        acc.matmul(m).expect("equation sides are well-shaped")
    })
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> IntMatrix {
    let data: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(-5..=5)).collect();
    Matrix::from_fn(rows, cols, |i, j| BigInt::from(data[i * cols + j]))
}

/// Checks every equation of one trial, returning `(checks, failures)`.
fn subsided_trial(max_dim: usize, seed: u64, trial: usize) -> (usize, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let mut dim = || rng.gen_range(0..=max_dim);
    let (a, b, c, d) = (dim(), dim(), dim(), dim());
    let f = random_matrix(&mut rng, b, a);
    let g = random_matrix(&mut rng, d, c);
    let f2 = random_matrix(&mut rng, c, b);
    let g2 = random_matrix(&mut rng, a, d);

    let i = id_matrix;
    let s = s_matrix;
    let e = e_matrix;
    let h = h_matrix;
    let checks: Vec<(&str, IntMatrix, IntMatrix)> = vec![
        ("nat s", product(&[&s(b, d), &f.kron(&g)]), product(&[&g.kron(&f), &s(a, c)])),
        ("s2", product(&[&s(b, a), &s(a, b)]), i(a * b)),
        (
            "s3",
            s(a * b, c),
            product(&[&s(a, c).kron(&i(b)), &i(a).kron(&s(b, c))]),
        ),
        (
            "nat ε",
            product(&[&f2, &e(a, b)]),
            product(&[&e(a, c), &i(a * a).kron(&f2)]),
        ),
        (
            "nat η",
            product(&[&h(a, c), &f2]),
            product(&[&i(a * a).kron(&f2), &h(a, b)]),
        ),
        ("εη", product(&[&e(a, a * b), &i(a).kron(&h(a, b))]), i(a * b)),
        ("εη", product(&[&i(a).kron(&e(a, b)), &h(a, a * b)]), i(a * b)),
        ("ε1", e(a, b), product(&[&e(a, b), &s(a, a).kron(&i(b))])),
        ("η1", h(a, b), product(&[&s(a, a).kron(&i(b)), &h(a, b)])),
        (
            "ε2",
            e(a * b, c),
            product(&[&e(b, c), &e(a, b * b * c), &kron_all(&[&i(a), &s(b, a), &i(b * c)])]),
        ),
        (
            "η2",
            h(a * b, c),
            product(&[&kron_all(&[&i(a), &s(a, b), &i(b * c)]), &h(a, b * b * c), &h(b, c)]),
        ),
        (
            "compact triangular",
            product(&[&e(a, 1).kron(&i(a)), &i(a).kron(&h(a, 1))]),
            i(a),
        ),
        (
            "compact triangular",
            product(&[&i(a).kron(&e(a, 1)), &h(a, 1).kron(&i(a))]),
            i(a),
        ),
        (
            "bifun 2",
            product(&[&f2, &f]).kron(&product(&[&g2, &g])),
            product(&[&f2.kron(&g2), &f.kron(&g)]),
        ),
    ];
    let failures = checks
        .iter()
        .filter(|(_, l, r)| l != r)
        .map(|(name, _, _)| format!("trial {trial}: {name} fails for dims ({a},{b},{c},{d})"))
        .collect();
    (checks.len(), failures)
}

/// Checks the subsided-category equations in the matrix category on
/// random integer matrices with every dimension at most `max_dim`.
pub fn verify_subsided_mat(max_dim: usize, trials: usize, seed: u64) -> SubsidedReport {
    verify_subsided_mat_with(Exec::default(), max_dim, trials, seed)
}

pub fn verify_subsided_mat_with(exec: Exec, max_dim: usize, trials: usize, seed: u64) -> SubsidedReport {
    let results = exec.map_range(trials, |t| subsided_trial(max_dim, seed, t));
    let mut report = SubsidedReport {
        trials,
        ..Default::default()
    };
    for (checks, failures) in results {
        report.checks += checks;
        report.failures.extend(failures);
    }
    report
}
