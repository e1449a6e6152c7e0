//! Named equation instances of the symmetric self-adjunction and of the
//! subsided structure.

use super::{epsilon, eta, kappa_arrow, sym, tensor, ArrowTerm};
use ArrowTerm::{Chi, Gamma, Id, Phi};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowEquation {
    pub name: String,
    pub lhs: ArrowTerm,
    pub rhs: ArrowTerm,
}

fn equation(name: impl Into<String>, lhs: ArrowTerm, rhs: ArrowTerm) -> ArrowEquation {
    ArrowEquation {
        name: name.into(),
        lhs,
        rhs,
    }
}

fn f(x: ArrowTerm) -> ArrowTerm {
    ArrowTerm::f(x)
}

fn ff(x: ArrowTerm) -> ArrowTerm {
    ArrowTerm::f_pow(x, 2)
}

fn c(parts: impl IntoIterator<Item = ArrowTerm>) -> ArrowTerm {
    ArrowTerm::chain(parts)
}

fn t(a: &ArrowTerm, b: &ArrowTerm) -> ArrowTerm {
    tensor(a, b).expect("catalogue arrows are well-typed")
}

fn t3(a: &ArrowTerm, b: &ArrowTerm, d: &ArrowTerm) -> ArrowTerm {
    t(&t(a, b), d)
}

/// Generator arrows with indices up to `max`, used for naturality.
pub fn generator_samples(max: u32) -> Vec<ArrowTerm> {
    (0..=max)
        .flat_map(|n| [Id(n), Phi(n), Gamma(n), Chi(n)])
        .collect()
}

/// A few composite arrows with small boundaries.
pub fn composite_samples() -> Vec<ArrowTerm> {
    vec![
        Id(1),
        Phi(0),
        Gamma(0),
        Chi(0),
        Phi(1),
        Gamma(1),
        Chi(1),
        kappa_arrow(0),
        c([Chi(0), Gamma(0)]),
        c([Phi(1), f(Gamma(0))]),
        c([Chi(1), f(Chi(0))]),
    ]
}

/// Axioms of a symmetric self-adjunction and their consequences, for
/// objects `0..=max`.
pub fn adjunction_axioms(max: u32) -> Vec<ArrowEquation> {
    let mut out = Vec::new();
    for n in 0..=max {
        let m = n + 1;
        out.push(equation("χχ", c([Chi(n), Chi(n)]), Id(n + 2)));
        out.push(equation(
            "χχχ",
            c([Chi(m), f(Chi(n)), Chi(m)]),
            c([f(Chi(n)), Chi(m), f(Chi(n))]),
        ));
        out.push(equation("χφ1", c([Phi(n), Chi(n)]), Phi(n)));
        out.push(equation("χφ2", c([Phi(m), f(Chi(n))]), c([f(Phi(n)), Chi(m)])));
        out.push(equation("χγ1", c([Chi(n), Gamma(n)]), Gamma(n)));
        out.push(equation("χγ2", c([Chi(m), f(Gamma(n))]), c([f(Chi(n)), Gamma(m)])));
        out.push(equation("φγF", c([Phi(m), f(Gamma(n))]), Id(m)));
        out.push(equation("φγG", c([f(Phi(n)), Gamma(m)]), Id(m)));
        out.push(equation("φγ", c([Phi(m), f(Gamma(n))]), c([f(Phi(n)), Gamma(m)])));
        out.push(equation("fun1", f(Id(n)), Id(m)));
        out.push(equation("Fκ", f(kappa_arrow(n)), kappa_arrow(m)));
    }
    let samples = generator_samples(max);
    for g in &samples {
        let (a, b) = g.typ().expect("well-typed sample");
        out.push(equation("nat φ", c([g.clone(), Phi(a)]), c([Phi(b), ff(g.clone())])));
        out.push(equation("nat γ", c([ff(g.clone()), Gamma(a)]), c([Gamma(b), g.clone()])));
        out.push(equation("nat χ", c([ff(g.clone()), Chi(a)]), c([Chi(b), ff(g.clone())])));
        out.push(equation("nat κ", c([g.clone(), kappa_arrow(a)]), c([kappa_arrow(b), g.clone()])));
        out.push(equation("cat1", c([Id(b), g.clone()]), g.clone()));
        out.push(equation("cat1", c([g.clone(), Id(a)]), g.clone()));
        for h in &samples {
            if h.target() == Ok(a) {
                out.push(equation(
                    "fun2",
                    f(c([g.clone(), h.clone()])),
                    c([f(g.clone()), f(h.clone())]),
                ));
            }
        }
    }
    out
}

/// Equations of the subsided structure for objects `0..=max`.
pub fn subsided_equations(max: u32) -> Vec<ArrowEquation> {
    let mut out = Vec::new();
    let objs = || 0..=max;
    for a in objs() {
        for b in objs() {
            let (ia, ib) = (Id(a), Id(b));
            out.push(equation("s2", c([sym(b, a), sym(a, b)]), Id(a + b)));
            out.push(equation("ε1", epsilon(a, b), c([epsilon(a, b), t(&sym(a, a), &ib)])));
            out.push(equation("η1", eta(a, b), c([t(&sym(a, a), &ib), eta(a, b)])));
            out.push(equation(
                "εη",
                c([epsilon(a, a + b), t(&ia, &eta(a, b))]),
                Id(a + b),
            ));
            out.push(equation(
                "εη",
                c([t(&ia, &epsilon(a, b)), eta(a, a + b)]),
                Id(a + b),
            ));
            for cc in objs() {
                out.push(equation(
                    "s3",
                    sym(a + b, cc),
                    c([t(&sym(a, cc), &ib), t(&ia, &sym(b, cc))]),
                ));
                out.push(equation(
                    "ε2",
                    epsilon(a + b, cc),
                    c([
                        epsilon(b, cc),
                        epsilon(a, 2 * b + cc),
                        t3(&ia, &sym(b, a), &Id(b + cc)),
                    ]),
                ));
                out.push(equation(
                    "η2",
                    eta(a + b, cc),
                    c([
                        t3(&ia, &sym(a, b), &Id(b + cc)),
                        eta(a, 2 * b + cc),
                        eta(b, cc),
                    ]),
                ));
            }
        }
    }
    let samples = composite_samples();
    for g in &samples {
        let (src, tgt) = g.typ().expect("well-typed sample");
        for h in &samples {
            let (hs, ht) = h.typ().expect("well-typed sample");
            out.push(equation(
                "nat s",
                c([sym(tgt, ht), t(g, h)]),
                c([t(h, g), sym(src, hs)]),
            ));
        }
        for a in objs() {
            out.push(equation(
                "nat ε",
                c([g.clone(), epsilon(a, src)]),
                c([epsilon(a, tgt), t(&Id(2 * a), g)]),
            ));
            out.push(equation(
                "nat η",
                c([eta(a, tgt), g.clone()]),
                c([t(&Id(2 * a), g), eta(a, src)]),
            ));
        }
    }
    out
}
