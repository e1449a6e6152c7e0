//! The free symmetric self-adjunction on one object.
//!
//! Objects are natural numbers (`n` stands for `F^n 0`). Arrows are built
//! from identities, the counit `φ_n: n+2 → n`, the unit `γ_n: n → n+2`, the
//! symmetry `χ_n: n+2 → n+2`, the functor `F` and composition. Equality of
//! arrows is decided through their diagrams: `F` adds a straight strand at
//! the far end, so it leaves the diagram unchanged.

pub mod axioms;
pub mod enumerate;

use std::fmt;

use crate::error::{Error, Result};
use crate::semantics::{eval_iota, eval_kappa};
use crate::term::{GenKind, Generator, Term};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowTerm {
    Id(u32),
    Phi(u32),
    Gamma(u32),
    Chi(u32),
    Fap(Box<ArrowTerm>),
    Comp(Box<ArrowTerm>, Box<ArrowTerm>),
}

use ArrowTerm::*;

impl ArrowTerm {
    pub fn f(f: ArrowTerm) -> Self {
        Fap(Box::new(f))
    }

    /// `F^k f`.
    pub fn f_pow(mut f: ArrowTerm, k: u32) -> Self {
        for _ in 0..k {
            f = Self::f(f);
        }
        f
    }

    /// `g ∘ f`; no type check.
    pub fn comp(g: ArrowTerm, f: ArrowTerm) -> Self {
        Comp(Box::new(g), Box::new(f))
    }

    /// Composes a chain written target side first: `chain([h, g, f])` is
    /// `(h ∘ g) ∘ f`.
    pub fn chain(parts: impl IntoIterator<Item = ArrowTerm>) -> Self {
        let mut it = parts.into_iter();
        let first = it.next().expect("chain of at least one arrow");
        it.fold(first, Self::comp)
    }

    /// `(source, target)`, or an error naming the first ill-typed
    /// composition.
    pub fn typ(&self) -> Result<(u32, u32)> {
        Ok(match self {
            Id(n) => (*n, *n),
            Phi(n) => (n + 2, *n),
            Gamma(n) => (*n, n + 2),
            Chi(n) => (n + 2, n + 2),
            Fap(f) => {
                let (s, t) = f.typ()?;
                (s + 1, t + 1)
            }
            Comp(g, f) => {
                let (fs, ft) = f.typ()?;
                let (gs, gt) = g.typ()?;
                if ft != gs {
                    return Err(Error::IllTyped(format!(
                        "cannot compose {g} : {gs} → {gt} after {f} : {fs} → {ft}"
                    )));
                }
                (fs, gt)
            }
        })
    }

    pub fn source(&self) -> Result<u32> {
        Ok(self.typ()?.0)
    }

    pub fn target(&self) -> Result<u32> {
        Ok(self.typ()?.1)
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            Id(_) | Phi(_) | Gamma(_) | Chi(_) => 1,
            Fap(f) => 1 + f.size(),
            Comp(g, f) => 1 + g.size() + f.size(),
        }
    }

    /// Largest object occurring as a source or target of any subterm.
    pub fn max_object(&self) -> Result<u32> {
        let (s, t) = self.typ()?;
        let inner = match self {
            Fap(f) => f.max_object()?,
            Comp(g, f) => g.max_object()?.max(f.max_object()?),
            _ => 0,
        };
        Ok(s.max(t).max(inner))
    }
}

impl fmt::Display for ArrowTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Id(n) => write!(f, "id{n}"),
            Phi(n) => write!(f, "phi{n}"),
            Gamma(n) => write!(f, "gamma{n}"),
            Chi(n) => write!(f, "chi{n}"),
            Fap(inner) => write!(f, "F({inner})"),
            Comp(g, h) => match **h {
                Comp(..) => write!(f, "{g} o ({h})"),
                _ => write!(f, "{g} o {h}"),
            },
        }
    }
}

/// The term read off an arrow: generators are shifted up by one and `F`
/// is erased.
pub fn psi(f: &ArrowTerm) -> Term {
    let mut out = Term::one();
    psi_into(f, &mut out);
    out
}

fn psi_into(f: &ArrowTerm, out: &mut Term) {
    match f {
        Id(_) => {}
        Phi(n) => out.push(Generator::cup(n + 1)),
        Gamma(n) => out.push(Generator::cap(n + 1)),
        Chi(n) => out.push(Generator::cross(n + 1)),
        Fap(g) => psi_into(g, out),
        Comp(g, h) => {
            psi_into(g, out);
            psi_into(h, out);
        }
    }
}

fn generator_arrow(g: Generator) -> ArrowTerm {
    let n = g.index() - 1;
    match g.kind() {
        GenKind::Cup => Phi(n),
        GenKind::Cap => Gamma(n),
        GenKind::Cross => Chi(n),
    }
}

/// An arrow whose term is `t`, composing factors with [`star`].
pub fn xi(t: &Term) -> ArrowTerm {
    let gens = t.generators();
    match gens.split_last() {
        None => Id(0),
        Some((&last, rest)) => rest
            .iter()
            .rev()
            .fold(generator_arrow(last), |acc, &g| star(&generator_arrow(g), &acc)),
    }
}

/// `g ⊛ f`: composition after padding the side with the smaller boundary
/// with `F`. Arguments must be well-typed.
pub fn star(g: &ArrowTerm, f: &ArrowTerm) -> ArrowTerm {
    let n = f.target().expect("star needs a well-typed right operand");
    let k = g.source().expect("star needs a well-typed left operand");
    if n <= k {
        ArrowTerm::comp(g.clone(), ArrowTerm::f_pow(f.clone(), k - n))
    } else {
        ArrowTerm::comp(ArrowTerm::f_pow(g.clone(), n - k), f.clone())
    }
}

/// Equality of arrows: same type and same diagram with circles. False when
/// either side is ill-typed.
pub fn equal_k(f: &ArrowTerm, g: &ArrowTerm) -> bool {
    matches!((f.typ(), g.typ()), (Ok(a), Ok(b)) if a == b)
        && eval_kappa(&psi(f)) == eval_kappa(&psi(g))
}

/// Equality in the quotient where the loop `φ_n ∘ γ_n` is the identity.
pub fn equal_j(f: &ArrowTerm, g: &ArrowTerm) -> bool {
    matches!((f.typ(), g.typ()), (Ok(a), Ok(b)) if a == b)
        && eval_iota(&psi(f)) == eval_iota(&psi(g))
}

/// Equality up to padding with `F`: some `F^a f` equals some `F^b g`.
pub fn equiv_k(f: &ArrowTerm, g: &ArrowTerm) -> bool {
    let (Ok((fs, _)), Ok((gs, _))) = (f.typ(), g.typ()) else {
        return false;
    };
    let top = fs.max(gs);
    let fp = ArrowTerm::f_pow(f.clone(), top - fs);
    let gp = ArrowTerm::f_pow(g.clone(), top - gs);
    equal_k(&fp, &gp)
}

/// `f ⊗ 1_k`: every generator index moves up by `k`.
pub fn tensor_id_right(f: &ArrowTerm, k: u32) -> ArrowTerm {
    match f {
        Id(n) => Id(n + k),
        Phi(n) => Phi(n + k),
        Gamma(n) => Gamma(n + k),
        Chi(n) => Chi(n + k),
        Fap(g) => ArrowTerm::f(tensor_id_right(g, k)),
        Comp(g, h) => ArrowTerm::comp(tensor_id_right(g, k), tensor_id_right(h, k)),
    }
}

/// `f ⊗ g = (1_n ⊗ g) ∘ (f ⊗ 1_k)` for `f: m → n`, `g: k → l`.
pub fn tensor(f: &ArrowTerm, g: &ArrowTerm) -> Result<ArrowTerm> {
    let (_, n) = f.typ()?;
    let (k, _) = g.typ()?;
    if matches!(f, Id(_)) {
        return Ok(ArrowTerm::f_pow(g.clone(), n));
    }
    if matches!(g, Id(_)) {
        return Ok(tensor_id_right(f, k));
    }
    Ok(ArrowTerm::comp(
        ArrowTerm::f_pow(g.clone(), n),
        tensor_id_right(f, k),
    ))
}

/// Tensor of a chain of well-typed arrows, associating to the left.
fn tensor_all(parts: &[ArrowTerm]) -> ArrowTerm {
    let mut it = parts.iter();
    let first = it.next().expect("non-empty tensor").clone();
    it.fold(first, |acc, x| tensor(&acc, x).expect("well-typed factors"))
}

/// The symmetry `s_{n,m}: n+m → m+n`.
pub fn sym(n: u32, m: u32) -> ArrowTerm {
    if n == 0 || m == 0 {
        return Id(n + m);
    }
    if m == 1 {
        // s_{n,1} = (s_{n-1,1} ⊗ 1_1) ∘ (1_{n-1} ⊗ χ_0)
        let prev = sym(n - 1, 1);
        return ArrowTerm::comp(
            tensor(&prev, &Id(1)).expect("well-typed"),
            tensor(&Id(n - 1), &Chi(0)).expect("well-typed"),
        );
    }
    // s_{n,m} = (1_{m-1} ⊗ s_{n,1}) ∘ (s_{n,m-1} ⊗ 1_1)
    ArrowTerm::comp(
        tensor(&Id(m - 1), &sym(n, 1)).expect("well-typed"),
        tensor(&sym(n, m - 1), &Id(1)).expect("well-typed"),
    )
}

/// The counit `ε_{m,n}: 2m+n → n`.
pub fn epsilon(m: u32, n: u32) -> ArrowTerm {
    if m == 0 {
        return Id(n);
    }
    let m0 = m - 1;
    ArrowTerm::chain([
        Phi(n),
        tensor_all(&[Id(1), epsilon(m0, n), Id(1)]),
        tensor(&sym(m0, 1), &Id(n + m0 + 1)).expect("well-typed"),
    ])
}

/// The unit `η_{m,n}: n → 2m+n`.
pub fn eta(m: u32, n: u32) -> ArrowTerm {
    if m == 0 {
        return Id(n);
    }
    let m0 = m - 1;
    ArrowTerm::chain([
        tensor(&sym(1, m0), &Id(n + m0 + 1)).expect("well-typed"),
        tensor_all(&[Id(1), eta(m0, n), Id(1)]),
        Gamma(n),
    ])
}

/// `κ_n = φ_n ∘ γ_n`, the loop on object `n`.
pub fn kappa_arrow(n: u32) -> ArrowTerm {
    ArrowTerm::comp(Phi(n), Gamma(n))
}
