//! Instances of every defining and derived equation of the monoid, used to
//! check each rewrite rule against the diagram semantics.

use super::rewrite::{
    block_cross_pair, cross_block_cap, cup_block_cap, double_block_cap, phase2_rule, toks_to_term,
    Tok,
};
use super::{Generator, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub family: String,
    pub lhs: Term,
    pub rhs: Term,
}

fn eq(family: impl Into<String>, lhs: impl IntoIterator<Item = Generator>, rhs: impl IntoIterator<Item = Generator>) -> Equation {
    Equation {
        family: family.into(),
        lhs: Term::from_generators(lhs),
        rhs: Term::from_generators(rhs),
    }
}

fn block_eq(family: &str, lhs: &[Tok], rhs: &[Tok]) -> Equation {
    Equation {
        family: family.to_string(),
        lhs: toks_to_term(lhs),
        rhs: toks_to_term(rhs),
    }
}

/// Equations of the presentation, instantiated with every parameter in
/// `1..=max_index` subject to `j <= k`.
pub fn presentation_equations(max_index: u32) -> Vec<Equation> {
    let u = Generator::cup;
    let n = Generator::cap;
    let s = Generator::cross;
    let mut out = Vec::new();
    let all = || 1..=max_index;
    for k in all() {
        for j in 1..=k {
            out.push(eq("cup", [u(k), u(j)], [u(j), u(k + 2)]));
            out.push(eq("cap", [n(j), n(k)], [n(k + 2), n(j)]));
            out.push(eq("cup-cap 1", [u(k + 2), n(j)], [n(j), u(k)]));
            out.push(eq("cap-cup 1", [u(j), n(k + 2)], [n(k), u(j)]));
            out.push(eq("σ", [s(k + 2), s(j)], [s(j), s(k + 2)]));
            out.push(eq("σ-cup 1", [u(k + 2), s(j)], [s(j), u(k + 2)]));
            out.push(eq("σ-cup 2", [u(j), s(k + 2)], [s(k), u(j)]));
            out.push(eq("σ-cap 1", [s(j), n(k + 2)], [n(k + 2), s(j)]));
            out.push(eq("σ-cap 2", [s(k + 2), n(j)], [n(j), s(k)]));
        }
    }
    for i in all() {
        out.push(eq("cup-cap", [u(i), n(i + 1)], []));
        out.push(eq("σ2", [s(i), s(i)], []));
        out.push(eq("σ3", [s(i + 1), s(i), s(i + 1)], [s(i), s(i + 1), s(i)]));
        out.push(eq("σ-cup 3", [u(i), s(i)], [u(i)]));
        out.push(eq("σ-cup 4", [u(i + 1), s(i)], [u(i), s(i + 1)]));
        out.push(eq("σ-cap 3", [s(i), n(i)], [n(i)]));
        out.push(eq("σ-cap 4", [s(i), n(i + 1)], [s(i + 1), n(i)]));
        out.push(eq("circle shift", [u(i), n(i)], [u(i + 1), n(i + 1)]));
        for g in [u(i), n(i), s(i)] {
            let lhs = Term::from_generators([g]) * Term::circle();
            let rhs = Term::circle() * Term::from_generators([g]);
            out.push(Equation {
                family: "c".into(),
                lhs,
                rhs,
            });
            out.push(eq("1", [g], [g]));
        }
    }
    out
}

/// Instances of the block rewrite rules of all three phases.
pub fn block_equations(max_index: u32) -> Vec<Equation> {
    let mut out = Vec::new();
    let all = || 1..=max_index;
    let blocks = || all().flat_map(|hi| (1..=hi).map(move |lo| (hi, lo)));

    for (i, j) in blocks() {
        for k in all() {
            let lhs = [Tok::Cup(k), Tok::BCap(i, j)];
            let (family, rhs) = cup_block_cap(k, i, j);
            out.push(block_eq(family, &lhs, &rhs));

            let lhs = [Tok::Cross(k), Tok::BCap(i, j)];
            let (family, rhs) = cross_block_cap(k, i, j);
            out.push(block_eq(family, &lhs, &rhs));

            let lhs = [Tok::BCup(j, i), Tok::Cross(k)];
            let (family, rhs) = phase2_rule(lhs[0], lhs[1]).expect("cup block before crossing");
            out.push(block_eq(family, &lhs, &rhs));
        }
        for (k, l) in blocks() {
            if j <= l {
                let lhs = [Tok::BCap(i, j), Tok::BCap(k, l)];
                let (family, rhs) = double_block_cap(i, j, k, l);
                out.push(block_eq(family, &lhs, &rhs));

                let lhs = [Tok::BCup(l, k), Tok::BCup(j, i)];
                let (family, rhs) = phase2_rule(lhs[0], lhs[1]).expect("ordered cup blocks");
                out.push(block_eq(family, &lhs, &rhs));
            }
            if k <= i {
                let lhs = [Tok::BCross(i, j), Tok::BCross(k, l)];
                let (family, rhs) = block_cross_pair(i, j, k, l);
                out.push(block_eq(family, &lhs, &rhs));
            }
        }
    }
    out
}

/// The full catalogue: presentation equations followed by block rules.
pub fn catalogue(max_index: u32) -> Vec<Equation> {
    let mut out = presentation_equations(max_index);
    out.extend(block_equations(max_index));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn every_family_is_instantiated() {
        let families: BTreeSet<String> = catalogue(6).into_iter().map(|e| e.family).collect();
        for name in [
            "cup-cap i",
            "cup-cap ii.1",
            "cup-cap ii.2",
            "cup-cap ii.3",
            "cup-cap iii.1",
            "cup-cap iii.2.1",
            "cup-cap iii.2.2",
            "cup-cap iii.3",
            "σ-cap i",
            "σ-cap ii",
            "σ-cap iii.1",
            "σ-cap iii.2",
            "σ-cap iv.1",
            "σ-cap iv.2",
            "σ-cap iv.3",
            "σ-cap iv.4",
            "cap-cap i",
            "cap-cap ii",
            "cap-cap iii",
            "cup-σ iv.4",
            "cup-cup iii",
            "σσ i",
            "σσ ii",
            "σσ iii.1",
            "σσ iii.2",
            "σσ iii.3",
            "σσ iii.4",
            "σσ iv.1",
            "σσ iv.2",
            "σ3",
            "c",
        ] {
            assert!(families.contains(name), "missing family {name}");
        }
    }
}
