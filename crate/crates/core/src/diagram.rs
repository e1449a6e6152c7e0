//! Finite encodings of Brauer-style diagrams.
//!
//! A diagram is a perfect matching on `{+1..+top} ∪ {-1..-bottom}`
//! followed by an implicit tail of straight threads `{top+k, -(bottom+k)}`.
//! The encoding is kept minimal: `{+top, -bottom}` is never a pair when
//! both sides are non-empty, so two diagrams are equal exactly when their
//! encodings are.
//!
//! The top line is the source and the bottom line the target. In
//! `compose(lower, upper)` the bottom line of `upper` is glued to the top
//! line of `lower`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    top: usize,
    bottom: usize,
    /// Partner of each point: top points `+1..+top` at `0..top`, then bottom
    /// points `-1..-bottom` at `top..top+bottom`.
    link: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SKDiagram {
    pub diagram: Diagram,
    pub circles: u64,
}

impl SKDiagram {
    pub fn new(diagram: Diagram, circles: u64) -> Self {
        SKDiagram { diagram, circles }
    }

    pub fn identity() -> Self {
        SKDiagram::new(identity_diag(), 0)
    }
}

fn slot(top: usize, p: i32) -> usize {
    if p > 0 {
        p as usize - 1
    } else {
        top + (-p) as usize - 1
    }
}

fn order_pair(a: i32, b: i32) -> (i32, i32) {
    let swap = match (a > 0, b > 0) {
        (true, true) => a > b,
        (false, false) => a < b,
        (false, true) => true,
        (true, false) => false,
    };
    if swap {
        (b, a)
    } else {
        (a, b)
    }
}

impl Diagram {
    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// Partner of a point inside the explicit boundary, following the tail
    /// beyond it.
    pub fn partner(&self, p: i32) -> i32 {
        assert!(p != 0, "point 0 does not exist");
        let (n, m) = (self.top as i32, self.bottom as i32);
        if p > n {
            -(p - n + m)
        } else if -p > m {
            -p - m + n
        } else {
            self.link[slot(self.top, p)]
        }
    }

    /// All explicit pairs, each ordered (cups smaller point first, caps
    /// smaller absolute value first, threads top point first) and the list
    /// sorted lexicographically.
    pub fn pairs(&self) -> Vec<(i32, i32)> {
        let mut out: Vec<(i32, i32)> = self
            .points()
            .filter_map(|p| {
                let q = self.partner(p);
                let pair = order_pair(p, q);
                (pair.0 == p).then_some(pair)
            })
            .collect();
        out.sort_unstable();
        out
    }

    fn points(&self) -> impl Iterator<Item = i32> + '_ {
        (1..=self.top as i32).chain((1..=self.bottom as i32).map(|b| -b))
    }

    pub fn cups(&self) -> Vec<(i32, i32)> {
        self.pairs().into_iter().filter(|&(a, b)| a > 0 && b > 0).collect()
    }

    pub fn caps(&self) -> Vec<(i32, i32)> {
        self.pairs().into_iter().filter(|&(a, b)| a < 0 && b < 0).collect()
    }

    pub fn threads(&self) -> Vec<(i32, i32)> {
        self.pairs().into_iter().filter(|&(a, b)| a > 0 && b < 0).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.top == 0 && self.bottom == 0
    }

    /// Link table of this diagram extended by `extra` tail threads.
    fn padded(&self, extra: usize) -> Padded {
        let top = self.top + extra;
        let bottom = self.bottom + extra;
        let mut link = vec![0; top + bottom];
        for p in (1..=top as i32).chain((1..=bottom as i32).map(|b| -b)) {
            link[slot(top, p)] = self.partner(p);
        }
        Padded { top, link }
    }
}

struct Padded {
    top: usize,
    link: Vec<i32>,
}

impl Padded {
    fn get(&self, p: i32) -> i32 {
        self.link[slot(self.top, p)]
    }
}

/// The unit diagram: nothing but tail threads.
pub fn identity_diag() -> Diagram {
    Diagram {
        top: 0,
        bottom: 0,
        link: Vec::new(),
    }
}

fn generator(top: usize, bottom: usize, k: u32, special: &[(i32, i32)]) -> Result<Diagram> {
    if k == 0 {
        return Err(Error::ZeroIndex(0));
    }
    let mut pairs: Vec<(i32, i32)> = (1..k as i32).map(|i| (i, -i)).collect();
    pairs.extend_from_slice(special);
    canonicalize(top, bottom, &pairs)
}

/// The cup diagram joining top points `k` and `k+1`.
pub fn cup_diag(k: u32) -> Result<Diagram> {
    let k1 = k as usize;
    let ki = k as i32;
    generator(k1 + 1, k1.saturating_sub(1), k, &[(ki, ki + 1)])
}

/// The cap diagram joining bottom points `k` and `k+1`.
pub fn cap_diag(k: u32) -> Result<Diagram> {
    let k1 = k as usize;
    let ki = k as i32;
    generator(k1.saturating_sub(1), k1 + 1, k, &[(-ki, -ki - 1)])
}

/// The diagram crossing threads `k` and `k+1`.
pub fn cross_diag(k: u32) -> Result<Diagram> {
    let k1 = k as usize;
    let ki = k as i32;
    generator(k1 + 1, k1 + 1, k, &[(ki, -ki - 1), (ki + 1, -ki)])
}

/// Builds the minimal encoding of a matching on the given boundary.
pub fn canonicalize(top: usize, bottom: usize, raw_pairs: &[(i32, i32)]) -> Result<Diagram> {
    let mut link = vec![0i32; top + bottom];
    let in_range = |p: i32| p != 0 && (p > 0 && p as usize <= top || p < 0 && (-p) as usize <= bottom);
    for &(a, b) in raw_pairs {
        if !in_range(a) || !in_range(b) || a == b {
            return Err(Error::InvalidDiagram(format!("bad pair ({a}, {b})")));
        }
        for (p, q) in [(a, b), (b, a)] {
            let s = slot(top, p);
            if link[s] != 0 {
                return Err(Error::InvalidDiagram(format!("point {p} matched twice")));
            }
            link[s] = q;
        }
    }
    if let Some(s) = link.iter().position(|&q| q == 0) {
        let p = if s < top { s as i32 + 1 } else { -((s - top) as i32 + 1) };
        return Err(Error::InvalidDiagram(format!("point {p} is unmatched")));
    }
    Ok(shrink(top, bottom, link))
}

/// Strips trailing straight threads from a valid link table.
fn shrink(mut top: usize, mut bottom: usize, mut link: Vec<i32>) -> Diagram {
    while top >= 1 && bottom >= 1 && link[top - 1] == -(bottom as i32) {
        link.remove(top + bottom - 1);
        link.remove(top - 1);
        top -= 1;
        bottom -= 1;
    }
    Diagram { top, bottom, link }
}

/// Composite of `upper` followed by `lower`, with the number of closed
/// loops formed in the middle.
pub fn compose(lower: &Diagram, upper: &Diagram) -> (Diagram, u64) {
    compose_with_padding(lower, upper, 0)
}

/// Like [`compose`], with `extra` additional tail threads on the glued line.
pub fn compose_with_padding(lower: &Diagram, upper: &Diagram, extra: usize) -> (Diagram, u64) {
    let middle = upper.bottom.max(lower.top) + extra;
    let up = upper.padded(middle - upper.bottom);
    let low = lower.padded(middle - lower.top);
    let top = up.top;
    let bottom = low.link.len() - low.top;
    let mut seen = vec![false; middle + 1];
    let mut link = vec![0i32; top + bottom];

    // Follows a path that enters the middle line at `x` heading into the
    // lower diagram (`down`) or the upper one; returns the outer endpoint.
    let walk = |mut x: i32, mut down: bool, seen: &mut Vec<bool>| -> i32 {
        loop {
            seen[x as usize] = true;
            if down {
                let r = low.get(x);
                if r < 0 {
                    return r;
                }
                x = r;
            } else {
                let q = up.get(-x);
                if q > 0 {
                    return q;
                }
                x = -q;
            }
            down = !down;
        }
    };

    for a in 1..=top as i32 {
        let q = up.get(a);
        let end = if q > 0 { q } else { walk(-q, true, &mut seen) };
        link[slot(top, a)] = end;
        link[slot(top, end)] = a;
    }
    for b in 1..=bottom as i32 {
        if link[slot(top, -b)] != 0 {
            continue;
        }
        let r = low.get(-b);
        let end = if r < 0 { r } else { walk(r, false, &mut seen) };
        link[slot(top, -b)] = end;
        link[slot(top, end)] = -b;
    }

    let mut loops = 0;
    for x in 1..=middle {
        if seen[x] {
            continue;
        }
        loops += 1;
        let mut y = x as i32;
        let mut down = true;
        loop {
            seen[y as usize] = true;
            y = if down { low.get(y) } else { -up.get(-y) };
            down = !down;
            if down && y as usize == x {
                break;
            }
        }
    }
    (shrink(top, bottom, link), loops)
}

/// Composite of SK diagrams: loops formed in the middle add to the circles.
pub fn compose_sk(lower: &SKDiagram, upper: &SKDiagram) -> SKDiagram {
    let (diagram, loops) = compose(&lower.diagram, &upper.diagram);
    SKDiagram {
        diagram,
        circles: lower.circles + upper.circles + loops,
    }
}

/// Upside-down image: top and bottom lines swap.
pub fn mirror(d: &Diagram) -> Diagram {
    let pairs: Vec<(i32, i32)> = d.pairs().into_iter().map(|(a, b)| (-a, -b)).collect();
    canonicalize(d.bottom, d.top, &pairs).expect("mirror of a valid diagram")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramJson {
    top: usize,
    bottom: usize,
    pairs: Vec<[i32; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    circles: Option<u64>,
}

impl DiagramJson {
    fn from_diagram(d: &Diagram, circles: Option<u64>) -> Self {
        DiagramJson {
            top: d.top,
            bottom: d.bottom,
            pairs: d.pairs().into_iter().map(|(a, b)| [a, b]).collect(),
            circles,
        }
    }

    fn to_diagram(&self) -> Result<Diagram> {
        let pairs: Vec<(i32, i32)> = self.pairs.iter().map(|p| (p[0], p[1])).collect();
        let d = canonicalize(self.top, self.bottom, &pairs)?;
        if d.top != self.top || d.bottom != self.bottom {
            return Err(Error::InvalidDiagram("encoding is not minimal".into()));
        }
        Ok(d)
    }
}

impl Diagram {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&DiagramJson::from_diagram(self, None)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let dto: DiagramJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        if dto.circles.is_some() {
            return Err(Error::Json("unexpected field `circles`".into()));
        }
        dto.to_diagram()
    }
}

impl SKDiagram {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&DiagramJson::from_diagram(&self.diagram, Some(self.circles)))
            .expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let dto: DiagramJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        let circles = dto
            .circles
            .ok_or_else(|| Error::Json("missing field `circles`".into()))?;
        Ok(SKDiagram::new(dto.to_diagram()?, circles))
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) {{", self.top, self.bottom)?;
        for (n, (a, b)) in self.pairs().into_iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{{{a},{b}}}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for SKDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {} circles", self.diagram, self.circles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(top: usize, bottom: usize, pairs: &[(i32, i32)]) -> Diagram {
        canonicalize(top, bottom, pairs).unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(cup_diag(1).unwrap(), d(2, 0, &[(1, 2)]));
        assert_eq!(cup_diag(3).unwrap().pairs(), vec![(1, -1), (2, -2), (3, 4)]);
        assert_eq!((cup_diag(3).unwrap().top(), cup_diag(3).unwrap().bottom()), (4, 2));
        assert_eq!(cap_diag(1).unwrap().pairs(), vec![(-1, -2)]);
        assert_eq!(cross_diag(1).unwrap().pairs(), vec![(1, -2), (2, -1)]);
        assert_eq!(cup_diag(0), Err(Error::ZeroIndex(0)));
        for k in 1..6 {
            assert_eq!(mirror(&cap_diag(k).unwrap()), cup_diag(k).unwrap());
            assert_eq!(mirror(&cross_diag(k).unwrap()), cross_diag(k).unwrap());
        }
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(d(1, 1, &[(1, -1)]), identity_diag());
        let x = d(2, 2, &[(1, -2), (2, -1)]);
        assert_eq!((x.top(), x.bottom()), (2, 2));
        assert_eq!(d(3, 3, &[(1, -2), (2, -1), (3, -3)]), x);
        assert!(canonicalize(2, 0, &[(1, 1)]).is_err());
        assert!(canonicalize(2, 2, &[(1, -1)]).is_err());
        assert!(canonicalize(2, 0, &[(1, 2), (1, 2)]).is_err());
    }

    #[test]
    fn worked_example() {
        let upper = d(
            6,
            8,
            &[(1, -3), (2, 3), (4, -4), (5, -1), (-2, -6), (-5, -7), (6, -8)],
        );
        assert_eq!((upper.top(), upper.bottom()), (5, 7));
        let lower = d(8, 4, &[(1, -1), (2, 7), (3, -3), (4, -2), (5, 6), (8, -4)]);
        let (composite, loops) = compose(&lower, &upper);
        assert_eq!(composite, d(6, 4, &[(1, -3), (2, 3), (4, -2), (5, -1), (6, -4)]));
        assert_eq!(loops, 1);
    }

    #[test]
    fn circle_and_units() {
        let (id, loops) = compose(&cup_diag(1).unwrap(), &cap_diag(1).unwrap());
        assert_eq!((id, loops), (identity_diag(), 1));
        let (id, loops) = compose(&cross_diag(2).unwrap(), &cross_diag(2).unwrap());
        assert_eq!((id, loops), (identity_diag(), 0));
        let two = SKDiagram::new(identity_diag(), 2);
        let three = SKDiagram::new(identity_diag(), 3);
        assert_eq!(compose_sk(&two, &three).circles, 5);
    }

    #[test]
    fn cup_after_shifted_cap_is_identity() {
        for i in 1..5 {
            let (r, loops) = compose(&cup_diag(i).unwrap(), &cap_diag(i + 1).unwrap());
            assert_eq!((r, loops), (identity_diag(), 0));
        }
    }

    #[test]
    fn partner_follows_tail() {
        let x = cross_diag(1).unwrap();
        assert_eq!(x.partner(3), -3);
        assert_eq!(x.partner(-5), 5);
        let u = cup_diag(1).unwrap();
        assert_eq!(u.partner(3), -1);
        assert_eq!(u.partner(-2), 4);
    }

    #[test]
    fn json_round_trip() {
        let x = cup_diag(2).unwrap();
        let s = x.to_json();
        assert_eq!(s, r#"{"top":3,"bottom":1,"pairs":[[1,-1],[2,3]]}"#);
        assert_eq!(Diagram::from_json(&s).unwrap(), x);
        let sk = SKDiagram::new(cap_diag(1).unwrap(), 2);
        let s = sk.to_json();
        assert_eq!(s, r#"{"top":0,"bottom":2,"pairs":[[-1,-2]],"circles":2}"#);
        assert_eq!(SKDiagram::from_json(&s).unwrap(), sk);
        assert!(Diagram::from_json(r#"{"top":1,"bottom":1,"pairs":[[1,-1]]}"#).is_err());
    }
}
