//! Schematic fixed-width drawings of diagrams.
//!
//! The top line is printed first and the bottom line last, each numbered.
//! Cups hang from the top line as `\__/`, caps rise from the bottom line
//! as `/--\`, straight transversals are `|` and the others run diagonally
//! with `\` or `/`. Cells where two strokes meet show `X`. The `⋯` marker
//! stands for the implicit tail of straight threads.

use crate::diagram::{Diagram, SKDiagram};

const TAIL: &str = "⋯";

struct Canvas {
    rows: Vec<Vec<char>>,
    width: usize,
}

impl Canvas {
    fn new(width: usize) -> Self {
        Canvas {
            rows: Vec::new(),
            width,
        }
    }

    fn row(&mut self) -> &mut Vec<char> {
        self.rows.push(vec![' '; self.width]);
        self.rows.last_mut().expect("just pushed")
    }

    fn finish(self, out: &mut String) {
        for row in self.rows {
            let line: String = row.into_iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
    }
}

fn put(row: &mut [char], col: usize, c: char) {
    row[col] = match row[col] {
        ' ' => c,
        old if old == c => c,
        '_' | '-' => c,
        _ => 'X',
    };
}

fn label_line(points: usize, col: impl Fn(usize) -> usize) -> String {
    let mut line = String::new();
    for p in 1..=points {
        let target = col(p);
        while line.chars().count() < target {
            line.push(' ');
        }
        line.push_str(&p.to_string());
    }
    if points > 0 {
        line.push(' ');
    }
    line.push_str(TAIL);
    line.push('\n');
    line
}

pub fn render_diagram(d: &Diagram) -> String {
    let points = d.top().max(d.bottom());
    let spacing = points.to_string().len() + 1;
    let col = |p: usize| (p - 1) * spacing;
    let width = col(points.max(1)) + 1;

    let pairs = d.pairs();
    let mut cups: Vec<(usize, usize)> = Vec::new();
    let mut caps: Vec<(usize, usize)> = Vec::new();
    let mut transversals: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in &pairs {
        let (lo, hi) = (a.unsigned_abs().min(b.unsigned_abs()), a.unsigned_abs().max(b.unsigned_abs()));
        let (lo, hi) = (lo as usize, hi as usize);
        match (a > 0, b > 0) {
            (true, true) => cups.push((lo, hi)),
            (false, false) => caps.push((lo, hi)),
            _ if a > 0 => transversals.push((a as usize, b.unsigned_abs() as usize)),
            _ => transversals.push((b as usize, a.unsigned_abs() as usize)),
        }
    }
    cups.sort_by_key(|&(a, b)| (b - a, a));
    caps.sort_by_key(|&(a, b)| (std::cmp::Reverse(b - a), a));

    let mut out = label_line(d.top(), col);
    let mut canvas = Canvas::new(width);

    // cups, innermost first
    for (n, &(a, b)) in cups.iter().enumerate() {
        let row = canvas.row();
        for &(t, _) in &transversals {
            put(row, col(t), '|');
        }
        for &(c, e) in &cups[n + 1..] {
            put(row, col(c), '|');
            put(row, col(e), '|');
        }
        for x in col(a) + 1..col(b) {
            put(row, x, '_');
        }
        put(row, col(a), '\\');
        put(row, col(b), '/');
    }

    let height = transversals
        .iter()
        .map(|&(t, b)| col(t).abs_diff(col(b)))
        .max()
        .unwrap_or(0)
        .max(usize::from(!transversals.is_empty()));
    for r in 0..height {
        let row = canvas.row();
        for &(t, b) in &transversals {
            let (from, to) = (col(t), col(b));
            let step = r.min(from.abs_diff(to));
            let (x, c) = match from.cmp(&to) {
                std::cmp::Ordering::Less if r < to - from => (from + step, '\\'),
                std::cmp::Ordering::Greater if r < from - to => (from - step, '/'),
                _ => (to, '|'),
            };
            put(row, x, c);
        }
    }

    // caps, outermost first
    for (n, &(a, b)) in caps.iter().enumerate() {
        let row = canvas.row();
        for &(_, t) in &transversals {
            put(row, col(t), '|');
        }
        for &(c, e) in &caps[..n] {
            put(row, col(c), '|');
            put(row, col(e), '|');
        }
        for x in col(a) + 1..col(b) {
            put(row, x, '-');
        }
        put(row, col(a), '/');
        put(row, col(b), '\\');
    }

    canvas.finish(&mut out);
    out.push_str(&label_line(d.bottom(), col));
    out
}

pub fn render_sk(d: &SKDiagram) -> String {
    let mut out = render_diagram(&d.diagram);
    out.push_str(&format!("circles: {}\n", d.circles));
    out
}
