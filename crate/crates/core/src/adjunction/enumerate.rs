//! Exhaustive enumeration of well-typed arrow terms by size.

use std::collections::HashMap;

use super::ArrowTerm;

/// Every well-typed arrow of at most `max_size` nodes whose generators
/// carry indices `<= max_index`, smallest first.
pub fn enumerate_arrows(max_index: u32, max_size: usize) -> Vec<ArrowTerm> {
    // by_size[s] holds (arrow, source, target) of size s
    let mut by_size: Vec<Vec<(ArrowTerm, u32, u32)>> = vec![Vec::new()];
    for size in 1..=max_size {
        let mut layer = Vec::new();
        if size == 1 {
            for n in 0..=max_index {
                layer.push((ArrowTerm::Id(n), n, n));
                layer.push((ArrowTerm::Phi(n), n + 2, n));
                layer.push((ArrowTerm::Gamma(n), n, n + 2));
                layer.push((ArrowTerm::Chi(n), n + 2, n + 2));
            }
        } else {
            for (f, s, t) in &by_size[size - 1] {
                layer.push((ArrowTerm::f(f.clone()), s + 1, t + 1));
            }
            for left in 1..size - 1 {
                let right = size - 1 - left;
                let mut by_source: HashMap<u32, Vec<&(ArrowTerm, u32, u32)>> = HashMap::new();
                for entry in &by_size[left] {
                    by_source.entry(entry.1).or_default().push(entry);
                }
                for (f, fs, ft) in &by_size[right] {
                    for (g, _, gt) in by_source.get(ft).into_iter().flatten() {
                        layer.push((ArrowTerm::comp(g.clone(), f.clone()), *fs, *gt));
                    }
                }
            }
        }
        by_size.push(layer);
    }
    by_size.into_iter().flatten().map(|(f, _, _)| f).collect()
}
