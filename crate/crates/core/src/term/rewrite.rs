//! Three-phase rewriting to normal form.
//!
//! Phase 1 turns every cap into a block-cap and pushes caps and circles to
//! the left. Phase 2 turns every cup into a block-cup and pushes cups to the
//! right with the mirror images of the phase-1 rules. Phase 3 sorts the
//! remaining crossings into increasing block-crossings.

use crate::error::{Error, Result};

use super::{BlockSpec, GenKind, Generator, NormalForm, Term};

/// Rewrite steps allowed per normalization before giving up.
pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

/// A symbol of the working word. Block variants carry `(hi, lo)` except
/// block-cups, which carry `(lo, hi)` like their written subscripts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Tok {
    Circle,
    Cup(u32),
    Cap(u32),
    Cross(u32),
    BCap(u32, u32),
    BCup(u32, u32),
    BCross(u32, u32),
}

impl Tok {
    /// Expansion into plain generators.
    pub(crate) fn to_term(self) -> Term {
        let block = |b| super::expand_block(b).expect("rewrite keeps blocks valid");
        match self {
            Tok::Circle => Term::circle(),
            Tok::Cup(k) => Term::from_generators([Generator::cup(k)]),
            Tok::Cap(k) => Term::from_generators([Generator::cap(k)]),
            Tok::Cross(k) => Term::from_generators([Generator::cross(k)]),
            Tok::BCap(i, j) => block(BlockSpec::cap(i, j)),
            Tok::BCup(j, i) => block(BlockSpec::cup(j, i)),
            Tok::BCross(i, j) => block(BlockSpec::cross(i, j)),
        }
    }
}

pub(crate) fn toks_to_term(toks: &[Tok]) -> Term {
    let mut t = Term::one();
    for tok in toks {
        t.extend(&tok.to_term());
    }
    t
}

/// Mirror of a word of symbols: reverse and swap cups with caps.
pub(crate) fn dual_toks(toks: &[Tok]) -> Vec<Tok> {
    let mut out = Vec::with_capacity(toks.len());
    for &tok in toks.iter().rev() {
        match tok {
            Tok::Circle => out.push(Tok::Circle),
            Tok::Cup(k) => out.push(Tok::Cap(k)),
            Tok::Cap(k) => out.push(Tok::Cup(k)),
            Tok::Cross(k) => out.push(Tok::Cross(k)),
            Tok::BCap(i, j) => out.push(Tok::BCup(j, i)),
            Tok::BCup(j, i) => out.push(Tok::BCap(i, j)),
            Tok::BCross(i, j) => out.extend((j..=i).map(Tok::Cross)),
        }
    }
    out
}

pub(crate) type Rewrite = (&'static str, Vec<Tok>);

/// `∪_k ∩_{i,j}`.
pub(crate) fn cup_block_cap(k: u32, i: u32, j: u32) -> Rewrite {
    if k + 2 <= j {
        ("cup-cap i", vec![Tok::BCap(i - 2, j - 2), Tok::Cup(k)])
    } else if j <= k + 1 && k <= j {
        if i >= k + 2 {
            ("cup-cap ii.1", (k..=i - 2).rev().map(Tok::Cross).collect())
        } else if i == k + 1 {
            ("cup-cap ii.2", vec![])
        } else {
            ("cup-cap ii.3", vec![Tok::Circle])
        }
    } else if k < i {
        ("cup-cap iii.1", vec![Tok::BCap(i - 2, j), Tok::Cup(k - 1)])
    } else if k <= i + 1 {
        if j + 1 < k {
            ("cup-cap iii.2.1", (j..=k - 2).map(Tok::Cross).collect())
        } else {
            ("cup-cap iii.2.2", vec![])
        }
    } else {
        ("cup-cap iii.3", vec![Tok::BCap(i, j), Tok::Cup(k - 2)])
    }
}

/// `σ_k ∩_{i,j}`.
pub(crate) fn cross_block_cap(k: u32, i: u32, j: u32) -> Rewrite {
    if k + 2 <= j {
        ("σ-cap i", vec![Tok::BCap(i, j), Tok::Cross(k)])
    } else if j == k + 1 {
        ("σ-cap ii", vec![Tok::BCap(i, j - 1)])
    } else if j == k {
        if j < i {
            ("σ-cap iii.1", vec![Tok::BCap(i, j + 1)])
        } else {
            ("σ-cap iii.2", vec![Tok::BCap(i, j)])
        }
    } else if k < i {
        ("σ-cap iv.1", vec![Tok::BCap(i, j), Tok::Cross(k - 1)])
    } else if i == k {
        ("σ-cap iv.2", vec![Tok::BCap(i - 1, j)])
    } else if i + 1 == k {
        ("σ-cap iv.3", vec![Tok::BCap(i + 1, j)])
    } else {
        ("σ-cap iv.4", vec![Tok::BCap(i, j), Tok::Cross(k - 2)])
    }
}

/// `∩_{i,j} ∩_{k,l}` with `j <= l`.
pub(crate) fn double_block_cap(i: u32, j: u32, k: u32, l: u32) -> Rewrite {
    debug_assert!(j <= l);
    if i <= l {
        ("cap-cap i", vec![Tok::BCap(k + 2, l + 2), Tok::BCap(i, j)])
    } else if i <= k + 1 {
        ("cap-cap ii", vec![Tok::BCap(k + 2, l + 1), Tok::BCap(i - 1, j)])
    } else {
        ("cap-cap iii", vec![Tok::BCap(k + 1, l + 1), Tok::BCap(i - 2, j)])
    }
}

/// `[i,j] [k,l]` with `k <= i`.
pub(crate) fn block_cross_pair(i: u32, j: u32, k: u32, l: u32) -> Rewrite {
    debug_assert!(k <= i);
    if k + 2 <= j {
        ("σσ i", vec![Tok::BCross(k, l), Tok::BCross(i, j)])
    } else if j == k + 1 {
        ("σσ ii", vec![Tok::BCross(i, l)])
    } else if j == k {
        match (j < i, l < k) {
            (true, true) => ("σσ iii.1", vec![Tok::BCross(k - 1, l), Tok::BCross(i, j + 1)]),
            (true, false) => ("σσ iii.2", vec![Tok::BCross(i, j + 1)]),
            (false, true) => ("σσ iii.3", vec![Tok::BCross(k - 1, l)]),
            (false, false) => ("σσ iii.4", vec![]),
        }
    } else if l <= j {
        ("σσ iv.1", vec![Tok::BCross(k - 1, l), Tok::BCross(i, j + 1)])
    } else {
        ("σσ iv.2", vec![Tok::BCross(k - 1, l - 1), Tok::BCross(i, j)])
    }
}

pub(crate) fn phase1_rule(a: Tok, b: Tok) -> Option<Rewrite> {
    match (a, b) {
        (Tok::Circle, _) => None,
        (x, Tok::Circle) => Some(("circle", vec![Tok::Circle, x])),
        (Tok::Cup(k), Tok::BCap(i, j)) => Some(cup_block_cap(k, i, j)),
        (Tok::Cross(k), Tok::BCap(i, j)) => Some(cross_block_cap(k, i, j)),
        (Tok::BCap(i, j), Tok::BCap(k, l)) if j <= l => Some(double_block_cap(i, j, k, l)),
        _ => None,
    }
}

/// Mirror images of the σ-block-cap and double block-cap rules.
pub(crate) fn phase2_rule(a: Tok, b: Tok) -> Option<Rewrite> {
    let mirrored = match (a, b) {
        (Tok::BCup(j, i), Tok::Cross(k)) => {
            let (name, rhs) = cross_block_cap(k, i, j);
            (name, rhs)
        }
        (Tok::BCup(l, k), Tok::BCup(j, i)) if j <= l => double_block_cap(i, j, k, l),
        _ => return None,
    };
    let name = match mirrored.0 {
        "σ-cap i" => "cup-σ i",
        "σ-cap ii" => "cup-σ ii",
        "σ-cap iii.1" => "cup-σ iii.1",
        "σ-cap iii.2" => "cup-σ iii.2",
        "σ-cap iv.1" => "cup-σ iv.1",
        "σ-cap iv.2" => "cup-σ iv.2",
        "σ-cap iv.3" => "cup-σ iv.3",
        "σ-cap iv.4" => "cup-σ iv.4",
        "cap-cap i" => "cup-cup i",
        "cap-cap ii" => "cup-cup ii",
        _ => "cup-cup iii",
    };
    Some((name, dual_toks(&mirrored.1)))
}

pub(crate) fn phase3_rule(a: Tok, b: Tok) -> Option<Rewrite> {
    match (a, b) {
        (Tok::BCross(i, j), Tok::BCross(k, l)) if k <= i => Some(block_cross_pair(i, j, k, l)),
        _ => None,
    }
}

type Rule = fn(Tok, Tok) -> Option<Rewrite>;

/// Rewriting engine with a step budget.
#[derive(Debug, Clone, Copy)]
pub struct Rewriter {
    budget: u64,
}

impl Default for Rewriter {
    fn default() -> Self {
        Rewriter {
            budget: DEFAULT_STEP_BUDGET,
        }
    }
}

impl Rewriter {
    pub fn with_budget(budget: u64) -> Self {
        Rewriter { budget }
    }

    pub fn normalize(&self, t: &Term) -> Result<NormalForm> {
        let mut steps = 0u64;
        let mut word: Vec<Tok> = t
            .generators()
            .iter()
            .map(|g| match g.kind() {
                GenKind::Cup => Tok::Cup(g.index()),
                GenKind::Cap => Tok::BCap(g.index(), g.index()),
                GenKind::Cross => Tok::Cross(g.index()),
            })
            .collect();
        self.run(&mut word, phase1_rule, &mut steps)?;

        for tok in &mut word {
            if let Tok::Cup(k) = *tok {
                *tok = Tok::BCup(k, k);
            }
        }
        self.run(&mut word, phase2_rule, &mut steps)?;

        for tok in &mut word {
            if let Tok::Cross(k) = *tok {
                *tok = Tok::BCross(k, k);
            }
        }
        self.run(&mut word, phase3_rule, &mut steps)?;

        Ok(read_normal_form(&word))
    }

    /// Leftmost-innermost rewriting to a fixpoint. Everything left of the
    /// last rewrite position is already irreducible, so the scan resumes one
    /// symbol before it.
    fn run(&self, word: &mut Vec<Tok>, rule: Rule, steps: &mut u64) -> Result<()> {
        let mut pos = 0;
        while pos + 1 < word.len() {
            match rule(word[pos], word[pos + 1]) {
                Some((_, rhs)) => {
                    *steps += 1;
                    if *steps > self.budget {
                        return Err(Error::StepBudget(self.budget));
                    }
                    word.splice(pos..pos + 2, rhs);
                    pos = pos.saturating_sub(1);
                }
                None => pos += 1,
            }
        }
        Ok(())
    }
}

fn read_normal_form(word: &[Tok]) -> NormalForm {
    let mut nf = NormalForm::default();
    for &tok in word {
        match tok {
            Tok::Circle => nf.circles += 1,
            Tok::BCap(i, j) => nf.caps.push((i, j)),
            Tok::BCross(i, j) => nf.crossings.push((i, j)),
            Tok::BCup(j, i) => nf.cups.push((j, i)),
            other => unreachable!("symbol {other:?} survived rewriting"),
        }
    }
    nf.caps.reverse();
    debug_assert!(nf.validate().is_ok(), "rewriting produced {nf:?}");
    nf
}

/// Normal form by rewriting. Panics only if the step budget is exhausted.
pub fn normalize_rewrite(t: &Term) -> NormalForm {
    Rewriter::default()
        .normalize(t)
        .expect("rewriting exceeded its step budget")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(k: u32) -> Generator {
        Generator::cross(k)
    }

    #[test]
    fn examples() {
        let one = NormalForm::default();
        let c1 = NormalForm {
            circles: 1,
            ..Default::default()
        };
        assert_eq!(normalize_rewrite(&Term::from_generators([s(1), s(1)])), one);
        assert_eq!(
            normalize_rewrite(&Term::from_generators([Generator::cup(1), Generator::cap(2)])),
            one
        );
        assert_eq!(normalize_rewrite(&Term::circle()), c1);
        assert_eq!(
            normalize_rewrite(&Term::from_generators([Generator::cup(2), Generator::cap(2)])),
            c1
        );
        assert_eq!(
            normalize_rewrite(&Term::from_generators([s(2), s(1), s(2)])),
            NormalForm {
                crossings: vec![(1, 1), (2, 1)],
                ..Default::default()
            }
        );
    }

    #[test]
    fn budget_fires() {
        let t = Term::from_generators([s(1), s(1), s(1), s(1)]);
        assert_eq!(
            Rewriter::with_budget(0).normalize(&t),
            Err(Error::StepBudget(0))
        );
    }

    #[test]
    fn dual_toks_involution() {
        let w = vec![Tok::BCap(3, 1), Tok::Cross(2), Tok::BCup(1, 2), Tok::Circle];
        assert_eq!(dual_toks(&dual_toks(&w)), w);
    }
}
