//! Evaluation of terms as diagrams, extraction of normal forms from
//! diagrams, and the word problems of the two monoids.

use crate::diagram::{
    cap_diag, compose, compose_sk, cross_diag, cup_diag, identity_diag, Diagram, SKDiagram,
};
use crate::term::{GenKind, Generator, NormalForm, Term};

pub fn generator_diag(g: Generator) -> Diagram {
    let d = match g.kind() {
        GenKind::Cup => cup_diag(g.index()),
        GenKind::Cap => cap_diag(g.index()),
        GenKind::Cross => cross_diag(g.index()),
    };
    d.expect("generator indices are positive")
}

/// Diagram of a term, forgetting circles.
pub fn eval_iota(t: &Term) -> Diagram {
    eval_kappa(t).diagram
}

/// Diagram of a term together with its circle count. The last factor of
/// the term is the topmost diagram.
pub fn eval_kappa(t: &Term) -> SKDiagram {
    let mut acc = SKDiagram::identity();
    for &g in t.generators().iter().rev() {
        let (diagram, loops) = compose(&generator_diag(g), &acc.diagram);
        acc = SKDiagram::new(diagram, acc.circles + loops);
    }
    acc
}

/// Same as [`eval_kappa`] but folding through [`compose_sk`] one generator
/// at a time from the left; kept as an independent path for tests.
pub fn eval_kappa_left(t: &Term) -> SKDiagram {
    t.generators().iter().fold(SKDiagram::identity(), |acc, &g| {
        compose_sk(&acc, &SKDiagram::new(generator_diag(g), 0))
    })
}

/// Reads the normal form off a diagram: maximal cups first, then maximal
/// caps, then maximal falling threads of the remaining permutation.
pub fn extract_normal_form(sk: &SKDiagram) -> NormalForm {
    let d = &sk.diagram;
    let mut top = d.top() as i32;
    let mut bottom = d.bottom() as i32;
    let mut pairs = d.pairs();

    let mut cups = Vec::new();
    while let Some(&(m, end)) = pairs.iter().filter(|p| p.0 > 0 && p.1 > 0).max_by_key(|p| p.0) {
        cups.push((m as u32, end as u32 - 1));
        pairs.retain(|&p| p != (m, end));
        let relabel = |x: i32| {
            if x > end {
                x - 2
            } else if x > m {
                x - 1
            } else {
                x
            }
        };
        for p in &mut pairs {
            p.0 = if p.0 > 0 { relabel(p.0) } else { p.0 };
            p.1 = if p.1 > 0 { relabel(p.1) } else { p.1 };
        }
        top -= 2;
    }
    cups.reverse();

    let mut caps = Vec::new();
    while let Some(&(near, far)) = pairs.iter().filter(|p| p.0 < 0 && p.1 < 0).min_by_key(|p| p.0) {
        let (j, end) = (-near, -far);
        caps.push((end as u32 - 1, j as u32));
        pairs.retain(|&p| p != (near, far));
        let relabel = |x: i32| {
            let a = -x;
            if a > end {
                x + 2
            } else if a > j {
                x + 1
            } else {
                x
            }
        };
        for p in &mut pairs {
            p.0 = if p.0 < 0 { relabel(p.0) } else { p.0 };
            p.1 = if p.1 < 0 { relabel(p.1) } else { p.1 };
        }
        bottom -= 2;
    }
    caps.reverse();

    debug_assert_eq!(top, bottom);
    let n = top as usize;
    // image[x - 1] = bottom point reached from top point x
    let mut image = vec![0usize; n];
    for &(a, b) in &pairs {
        image[a as usize - 1] = (-b) as usize;
    }
    let mut crossings = Vec::new();
    while let Some(start) = (0..n)
        .filter(|&x| x + 1 < image[x])
        .max_by_key(|&x| image[x])
    {
        let low = start + 1;
        let high = image[start];
        crossings.push((high as u32 - 1, low as u32));
        image.copy_within(low..high, start);
        image[high - 1] = high;
    }
    crossings.reverse();

    NormalForm {
        circles: sk.circles,
        caps,
        crossings,
        cups,
    }
}

/// Word problem of the monoid with circles.
pub fn equal_sk(t: &Term, u: &Term) -> bool {
    eval_kappa(t) == eval_kappa(u)
}

/// Word problem of the monoid where the circle is the unit.
pub fn equal_sj(t: &Term, u: &Term) -> bool {
    eval_iota(t) == eval_iota(u)
}

/// For terms equal up to circles, the least `(n, m)` with
/// `c^n t = c^m u` with circles counted.
pub fn circle_pad_witness(t: &Term, u: &Term) -> Option<(u64, u64)> {
    let (kt, ku) = (eval_kappa(t), eval_kappa(u));
    (kt.diagram == ku.diagram).then(|| {
        (
            ku.circles.saturating_sub(kt.circles),
            kt.circles.saturating_sub(ku.circles),
        )
    })
}

/// True when the diagram is a bare identity with no circles.
pub fn is_unit(sk: &SKDiagram) -> bool {
    sk.circles == 0 && sk.diagram == identity_diag()
}
