//! Verification suites shared by the command line and the tests.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::adjunction::axioms::{adjunction_axioms, subsided_equations};
use crate::adjunction::enumerate::enumerate_arrows;
use crate::adjunction::{equal_k, equiv_k, psi, xi, ArrowTerm};
use crate::corpus::{exhaustive, random_terms};
use crate::diagram::{canonicalize, SKDiagram};
use crate::matrep::verify::{verify_faithfulness_with, verify_subsided_mat_with};
use crate::matrep::DEFAULT_DIM_CAP;
use crate::par::Exec;
use crate::semantics::{eval_kappa, extract_normal_form};
use crate::term::equations::catalogue;
use crate::term::{nf_to_term, normalize_rewrite, Generator, NormalForm, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Nf,
    Group,
    Adjunction,
    Subsided,
    Faithful,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub max_len: usize,
    pub max_index: u32,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_len: 5,
            max_index: 3,
            seed: 2024,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(failure());
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        writeln!(
            f,
            "suite {}: {status} ({} checks, {} failures)",
            self.name,
            self.checks,
            self.failures.len()
        )?;
        for note in &self.notes {
            writeln!(f, "  {note}")?;
        }
        for failure in self.failures.iter().take(20) {
            writeln!(f, "  failure: {failure}")?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, bounds: &Bounds, exec: Exec) -> SuiteReport {
    match suite {
        Suite::Nf => nf_suite(bounds, exec),
        Suite::Group => group_suite(bounds),
        Suite::Adjunction => adjunction_suite(bounds),
        Suite::Subsided => subsided_suite(bounds, exec),
        Suite::Faithful => faithful_suite(bounds, exec),
    }
}

/// Outcome of comparing the two normalization engines on one term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineCheck {
    pub rewrite: NormalForm,
    pub extracted: NormalForm,
    pub sound: bool,
}

pub fn check_engines(t: &Term) -> EngineCheck {
    let sk = eval_kappa(t);
    let rewrite = normalize_rewrite(t);
    let extracted = extract_normal_form(&sk);
    let sound = eval_kappa(&nf_to_term(&rewrite)) == sk;
    EngineCheck {
        rewrite,
        extracted,
        sound,
    }
}

/// Both engines on every term, returning the offending terms.
pub fn engine_disagreements(terms: &[Term], exec: Exec) -> Vec<Term> {
    exec.map(terms, |t| {
        let c = check_engines(t);
        (c.rewrite != c.extracted || !c.sound).then(|| t.clone())
    })
    .into_iter()
    .flatten()
    .collect()
}

fn nf_suite(bounds: &Bounds, exec: Exec) -> SuiteReport {
    let mut report = SuiteReport::new("nf");
    let mut terms = exhaustive(bounds.max_index, bounds.max_len);
    let exhaustive_count = terms.len();
    terms.extend(random_terms(bounds.seed, 2000, 6, 12));
    report.notes.push(format!(
        "{exhaustive_count} exhaustive terms and 2000 random terms"
    ));
    let bad = engine_disagreements(&terms, exec);
    report.checks += terms.len();
    report
        .failures
        .extend(bad.iter().map(|t| format!("engines disagree on {t}")));

    let mut classes: HashMap<SKDiagram, BTreeSet<NormalForm>> = HashMap::new();
    let pairs = exec.map(&terms, |t| (eval_kappa(t), normalize_rewrite(t)));
    for (sk, nf) in pairs {
        classes.entry(sk).or_default().insert(nf);
    }
    for (sk, forms) in &classes {
        report.check(forms.len() == 1, || {
            format!("{} normal forms for {sk}", forms.len())
        });
    }

    for e in catalogue(6) {
        report.check(eval_kappa(&e.lhs) == eval_kappa(&e.rhs), || {
            format!("{}: {} = {}", e.family, e.lhs, e.rhs)
        });
    }
    report
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("successor exists");
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// The diagram sending top point `i + 1` to bottom point `perm[i] + 1`.
pub fn permutation_diagram(perm: &[usize]) -> SKDiagram {
    let pairs: Vec<(i32, i32)> = perm
        .iter()
        .enumerate()
        .map(|(i, &j)| (i as i32 + 1, -(j as i32) - 1))
        .collect();
    let d = canonicalize(perm.len(), perm.len(), &pairs).expect("a permutation is a matching");
    SKDiagram::new(d, 0)
}

/// A word in crossings whose diagram is the permutation, by bubble sort.
pub fn crossing_word(perm: &[usize]) -> Term {
    // Sort the bottom labels read along the top line; each adjacent swap
    // at positions (k, k+1) is one crossing σ_{k+1}, innermost first.
    let mut labels = perm.to_vec();
    let mut swaps = Vec::new();
    for pass in 0..labels.len() {
        for k in 0..labels.len().saturating_sub(pass + 1) {
            if labels[k] > labels[k + 1] {
                labels.swap(k, k + 1);
                swaps.push(Generator::cross(k as u32 + 1));
            }
        }
    }
    swaps.into_iter().rev().collect()
}

/// Normal forms of all permutation diagrams on `n` strands, sorted.
pub fn permutation_normal_forms(n: usize) -> Vec<NormalForm> {
    let set: BTreeSet<NormalForm> = permutations(n)
        .iter()
        .map(|p| extract_normal_form(&permutation_diagram(p)))
        .collect();
    set.into_iter().collect()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn group_suite(bounds: &Bounds) -> SuiteReport {
    let mut report = SuiteReport::new("group");
    let top = (bounds.max_index as usize + 2).clamp(3, 6);
    for n in 3..=top {
        let perms = permutations(n);
        let mut forms = BTreeSet::new();
        for p in &perms {
            let sk = permutation_diagram(p);
            let word = crossing_word(p);
            report.check(eval_kappa(&word) == sk, || format!("word {word} misses {p:?}"));
            let nf = normalize_rewrite(&word);
            report.check(nf == extract_normal_form(&sk), || {
                format!("engines disagree on permutation {p:?}")
            });
            report.check(nf.caps.is_empty() && nf.cups.is_empty() && nf.circles == 0, || {
                format!("permutation {p:?} has non-crossing blocks")
            });
            forms.insert(nf);
        }
        report.check(forms.len() == factorial(n), || {
            format!("{} normal forms on {n} strands, expected {}", forms.len(), factorial(n))
        });
        report.notes.push(format!("{n} strands: {} normal forms", forms.len()));
    }
    report
}

fn adjunction_suite(bounds: &Bounds) -> SuiteReport {
    let mut report = SuiteReport::new("adjunction");
    for e in adjunction_axioms(bounds.max_index.min(3)) {
        report.check(equal_k(&e.lhs, &e.rhs), || format!("{}: {} = {}", e.name, e.lhs, e.rhs));
    }
    let arrows = enumerate_arrows(bounds.max_index.min(2), bounds.max_len.min(5));
    for f in &arrows {
        report.check(equiv_k(&xi(&psi(f)), f), || format!("ξψ fails on {f}"));
    }
    let mut by_type: HashMap<(u32, u32), Vec<&ArrowTerm>> = HashMap::new();
    for f in &arrows {
        by_type.entry(f.typ().expect("enumerated arrows are typed")).or_default().push(f);
    }
    for group in by_type.values() {
        for (n, f) in group.iter().enumerate() {
            for g in &group[n + 1..] {
                let lifted = equal_k(&ArrowTerm::f((*f).clone()), &ArrowTerm::f((*g).clone()));
                report.check(!lifted || equal_k(f, g), || format!("cancellation fails for {f}, {g}"));
            }
        }
    }
    for t in exhaustive(bounds.max_index, bounds.max_len.min(4)) {
        report.check(psi(&xi(&t)) == t, || format!("ψξ fails on {t}"));
    }
    report.notes.push(format!("{} enumerated arrows", arrows.len()));
    report
}

fn subsided_suite(bounds: &Bounds, exec: Exec) -> SuiteReport {
    let mut report = SuiteReport::new("subsided");
    for e in subsided_equations(bounds.max_index.min(3)) {
        report.check(equal_k(&e.lhs, &e.rhs), || format!("{}: {} = {}", e.name, e.lhs, e.rhs));
    }
    let mat = verify_subsided_mat_with(exec, 4, 200, bounds.seed);
    report.checks += mat.checks;
    report.failures.extend(mat.failures);
    report
        .notes
        .push(format!("{} matrix trials with dimensions up to 4", mat.trials));
    report
}

fn faithful_suite(bounds: &Bounds, exec: Exec) -> SuiteReport {
    let mut report = SuiteReport::new("faithful");
    let r = verify_faithfulness_with(exec, bounds.max_index, bounds.max_len, 2, DEFAULT_DIM_CAP);
    report.checks += r.arrows;
    report.failures.extend(r.mismatches.iter().cloned());
    report.check(r.circle_images_distinct, || {
        format!("loop powers map to {:?}", r.circle_images)
    });
    report.notes.push(format!(
        "{} arrows, {} types, {} same-type pairs, {} refused by the dimension cap",
        r.arrows, r.types, r.same_type_pairs, r.refused
    ));
    report.notes.push(format!(
        "boolean variant: {} mismatches against diagrams without circles",
        r.boolean_mismatches.len()
    ));
    report
}
