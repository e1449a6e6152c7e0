//! Terms of the monoid generated by cups `∪_k`, caps `∩_k` and crossings
//! `σ_k`, the block abbreviations built from them, and the normal form.
//!
//! A [`Term`] is a flat sequence of generators; the monoid product is
//! concatenation and the empty sequence is the unit. Juxtaposition `tu`
//! is read diagrammatically as "`u` first, then `t`": `u`'s diagram sits on
//! top of `t`'s.

pub mod equations;
pub mod rewrite;

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use rewrite::{normalize_rewrite, Rewriter, DEFAULT_STEP_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    Cup,
    Cap,
    Cross,
}

impl GenKind {
    /// Cup and cap swap under the mirror; crossings are fixed.
    pub fn mirror(self) -> Self {
        match self {
            GenKind::Cup => GenKind::Cap,
            GenKind::Cap => GenKind::Cup,
            GenKind::Cross => GenKind::Cross,
        }
    }
}

/// A single generator `∪_k`, `∩_k` or `σ_k` with `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    kind: GenKind,
    index: u32,
}

impl Generator {
    pub fn try_new(kind: GenKind, index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::ZeroIndex(index));
        }
        Ok(Generator { kind, index })
    }

    /// Panics if `index == 0`.
    pub fn new(kind: GenKind, index: u32) -> Self {
        Self::try_new(kind, index).expect("generator index must be >= 1")
    }

    pub fn cup(k: u32) -> Self {
        Self::new(GenKind::Cup, k)
    }

    pub fn cap(k: u32) -> Self {
        Self::new(GenKind::Cap, k)
    }

    pub fn cross(k: u32) -> Self {
        Self::new(GenKind::Cross, k)
    }

    pub fn kind(self) -> GenKind {
        self.kind
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn mirror(self) -> Self {
        Generator {
            kind: self.kind.mirror(),
            index: self.index,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.kind {
            GenKind::Cup => 'u',
            GenKind::Cap => 'n',
            GenKind::Cross => 's',
        };
        write!(f, "{prefix}{}", self.index)
    }
}

/// A word in the generators. The empty word is the unit `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term(Vec<Generator>);

impl Term {
    pub fn one() -> Self {
        Term(Vec::new())
    }

    pub fn from_generators(gens: impl IntoIterator<Item = Generator>) -> Self {
        Term(gens.into_iter().collect())
    }

    /// The circle `c`, represented canonically as `∪_1 ∩_1`.
    pub fn circle() -> Self {
        Term(vec![Generator::cup(1), Generator::cap(1)])
    }

    /// `c^n`.
    pub fn circles(n: u64) -> Self {
        let mut t = Term::one();
        for _ in 0..n {
            t.0.extend_from_slice(&[Generator::cup(1), Generator::cap(1)]);
        }
        t
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn extend(&mut self, other: &Term) {
        self.0.extend_from_slice(&other.0);
    }

    /// Largest generator index occurring in the term (0 for the unit).
    pub fn max_index(&self) -> u32 {
        self.0.iter().map(|g| g.index).max().unwrap_or(0)
    }
}

impl Mul<&Term> for &Term {
    type Output = Term;

    fn mul(self, rhs: &Term) -> Term {
        let mut out = self.clone();
        out.extend(rhs);
        out
    }
}

impl Mul for Term {
    type Output = Term;

    fn mul(mut self, rhs: Term) -> Term {
        self.0.extend(rhs.0);
        self
    }
}

impl FromIterator<Generator> for Term {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Term(iter.into_iter().collect())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, g) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Mirror image of a term: reverse the factors and swap cups with caps.
pub fn dual_of(t: &Term) -> Term {
    t.0.iter().rev().map(|g| g.mirror()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    BlockCup,
    BlockCap,
    BlockCross,
}

/// A block-cup `∪_{lo,hi}`, block-cap `∩_{hi,lo}` or block-crossing
/// `[hi,lo]`, always with `1 <= lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockSpec {
    pub kind: BlockKind,
    pub hi: u32,
    pub lo: u32,
}

impl BlockSpec {
    /// `∪_{lo,hi} = ∪_lo σ_{lo+1} … σ_hi`.
    pub fn cup(lo: u32, hi: u32) -> Self {
        BlockSpec {
            kind: BlockKind::BlockCup,
            hi,
            lo,
        }
    }

    /// `∩_{hi,lo} = σ_hi … σ_{lo+1} ∩_lo`.
    pub fn cap(hi: u32, lo: u32) -> Self {
        BlockSpec {
            kind: BlockKind::BlockCap,
            hi,
            lo,
        }
    }

    /// `[hi,lo] = σ_hi σ_{hi-1} … σ_lo`.
    pub fn cross(hi: u32, lo: u32) -> Self {
        BlockSpec {
            kind: BlockKind::BlockCross,
            hi,
            lo,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lo == 0 || self.lo > self.hi {
            return Err(Error::InvalidBlock {
                lo: self.lo,
                hi: self.hi,
            });
        }
        Ok(())
    }
}

/// Unrolls a block abbreviation into generators.
pub fn expand_block(spec: BlockSpec) -> Result<Term> {
    spec.validate()?;
    let BlockSpec { kind, hi, lo } = spec;
    let t = match kind {
        BlockKind::BlockCup => std::iter::once(Generator::cup(lo))
            .chain((lo + 1..=hi).map(Generator::cross))
            .collect(),
        BlockKind::BlockCap => (lo + 1..=hi)
            .rev()
            .map(Generator::cross)
            .chain(std::iter::once(Generator::cap(lo)))
            .collect(),
        BlockKind::BlockCross => (lo..=hi).rev().map(Generator::cross).collect(),
    };
    Ok(t)
}

/// The unique normal form
/// `c^l ∩_{i_p,j_p} … ∩_{i_1,j_1} 1 [k_1,l_1] … [k_q,l_q] ∪_{m_1,n_1} … ∪_{m_r,n_r}`.
///
/// Storage order: `caps` holds `(i, j)` with strictly increasing `j` (the
/// display order is the reverse), `crossings` holds `(k, l)` with strictly
/// increasing `k`, `cups` holds `(m, n)` with strictly increasing `m`.
/// Every pair satisfies lower index <= upper index: `j <= i`, `l <= k`,
/// `m <= n`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalForm {
    pub circles: u64,
    pub caps: Vec<(u32, u32)>,
    pub crossings: Vec<(u32, u32)>,
    pub cups: Vec<(u32, u32)>,
}

impl NormalForm {
    pub fn validate(&self) -> Result<()> {
        for &(i, j) in &self.caps {
            BlockSpec::cap(i, j).validate()?;
        }
        for &(k, l) in &self.crossings {
            BlockSpec::cross(k, l).validate()?;
        }
        for &(m, n) in &self.cups {
            BlockSpec::cup(m, n).validate()?;
        }
        let increasing = |v: &[u32]| v.windows(2).all(|w| w[0] < w[1]);
        let cap_lo: Vec<u32> = self.caps.iter().map(|p| p.1).collect();
        let cross_hi: Vec<u32> = self.crossings.iter().map(|p| p.0).collect();
        let cup_lo: Vec<u32> = self.cups.iter().map(|p| p.0).collect();
        if !increasing(&cap_lo) || !increasing(&cross_hi) || !increasing(&cup_lo) {
            return Err(Error::InvalidDiagram(
                "normal-form blocks are not strictly ordered".into(),
            ));
        }
        Ok(())
    }

    /// Number of blocks plus one if there are circles.
    pub fn weight(&self) -> usize {
        self.caps.len() + self.crossings.len() + self.cups.len() + usize::from(self.circles > 0)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        parts.extend((0..self.circles).map(|_| "c".to_string()));
        parts.extend(self.caps.iter().rev().map(|(i, j)| format!("n[{i},{j}]")));
        if !parts.is_empty() || !self.crossings.is_empty() || !self.cups.is_empty() {
            parts.push("1".into());
        }
        parts.extend(self.crossings.iter().map(|(k, l)| format!("x[{k},{l}]")));
        parts.extend(self.cups.iter().map(|(m, n)| format!("u[{m},{n}]")));
        if parts.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&parts.join(" "))
    }
}

/// Flattens a normal form into a term: circles, caps in display order,
/// crossings, then cups.
pub fn nf_to_term(nf: &NormalForm) -> Term {
    let mut t = Term::circles(nf.circles);
    let blocks = nf
        .caps
        .iter()
        .rev()
        .map(|&(i, j)| BlockSpec::cap(i, j))
        .chain(nf.crossings.iter().map(|&(k, l)| BlockSpec::cross(k, l)))
        .chain(nf.cups.iter().map(|&(m, n)| BlockSpec::cup(m, n)));
    for b in blocks {
        t.extend(&expand_block(b).expect("normal form holds valid blocks"));
    }
    t
}
