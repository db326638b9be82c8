//! Canonical labelling of small graphs.
//!
//! The canonical key is the smallest [`SmallGraph::key_under`] over the leaves
//! of an individualisation-refinement tree. Refinement splits cells by
//! neighbour counts into each cell, in a label-independent order, so the leaf
//! set depends only on the isomorphism class. Within a cell, twins (vertices
//! with equal neighbourhoods apart from each other) yield isomorphic subtrees;
//! only one of them is branched on.

use alloc::vec::Vec;

use super::small::SmallGraph;

type Cells = Vec<Vec<u8>>;

fn refine(g: &SmallGraph, cells: &mut Cells) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let mask = cells[s].iter().fold(0u32, |m, &v| m | 1 << v);
            let mut c = 0;
            while c < cells.len() {
                if cells[c].len() > 1 {
                    let count = |v: u8| (g.row(v as usize) & mask).count_ones();
                    let first = count(cells[c][0]);
                    if cells[c].iter().any(|&v| count(v) != first) {
                        let mut cell = core::mem::take(&mut cells[c]);
                        cell.sort_by_key(|&v| count(v));
                        let mut parts: Cells = Vec::new();
                        let mut last = None;
                        for v in cell {
                            if last != Some(count(v)) {
                                parts.push(Vec::new());
                                last = Some(count(v));
                            }
                            parts.last_mut().expect("pushed").push(v);
                        }
                        let k = parts.len();
                        cells.splice(c..=c, parts);
                        c += k;
                        changed = true;
                        continue;
                    }
                }
                c += 1;
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

fn twins(g: &SmallGraph, u: u8, v: u8) -> bool {
    let (u, v) = (u as usize, v as usize);
    g.row(u) & !(1 << v) == g.row(v) & !(1 << u)
}

fn search(g: &SmallGraph, mut cells: Cells, best: &mut Option<(u128, Vec<u8>)>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let perm: Vec<u8> = cells.iter().map(|c| c[0]).collect();
        let key = g.key_under(&perm);
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            *best = Some((key, perm));
        }
        return;
    };
    let cell = cells[target].clone();
    let mut tried: Vec<u8> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let rest: Vec<u8> = cell.iter().copied().filter(|&x| x != v).collect();
        let mut next = cells.clone();
        next.splice(target..=target, [alloc::vec![v], rest]);
        search(g, next, best);
    }
}

/// Canonical key and a labelling attaining it (`perm[new] = old`).
pub fn canonical_form(g: &SmallGraph) -> (u128, Vec<u8>) {
    let n = g.order();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut best = None;
    search(g, alloc::vec![(0..n as u8).collect()], &mut best);
    best.expect("at least one leaf")
}

pub fn canonical_key(g: &SmallGraph) -> u128 {
    canonical_form(g).0
}

/// The canonical relabelling of `g`.
pub fn canonical_graph(g: &SmallGraph) -> SmallGraph {
    let (_, perm) = canonical_form(g);
    g.permuted(&perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_key(g: &SmallGraph) -> u128 {
        fn rec(g: &SmallGraph, perm: &mut Vec<u8>, used: u32, best: &mut u128) {
            if perm.len() == g.order() {
                *best = (*best).min(g.key_under(perm));
                return;
            }
            for v in 0..g.order() as u8 {
                if used >> v & 1 == 0 {
                    perm.push(v);
                    rec(g, perm, used | 1 << v, best);
                    perm.pop();
                }
            }
        }
        let mut best = u128::MAX;
        rec(g, &mut Vec::new(), 0, &mut best);
        best
    }

    fn xorshift(x: &mut u64) -> u64 {
        *x ^= *x << 13;
        *x ^= *x >> 7;
        *x ^= *x << 17;
        *x
    }

    fn random_graph(x: &mut u64, n: usize) -> SmallGraph {
        let mut g = SmallGraph::new(n);
        let density = xorshift(x) % 5 + 1;
        for v in 1..n {
            for u in 0..v {
                if xorshift(x) % 6 < density {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn keys_separate_exactly_the_isomorphism_classes() {
        // brute-force minimum over all permutations is a complete invariant
        let mut x = 0x9e37_79b9_7f4a_7c15u64;
        for n in 0..=7 {
            let graphs: Vec<SmallGraph> = (0..60).map(|_| random_graph(&mut x, n)).collect();
            let keys: Vec<(u128, u128)> = graphs.iter().map(|g| (canonical_key(g), brute_key(g))).collect();
            for a in &keys {
                for b in &keys {
                    assert_eq!(a.0 == b.0, a.1 == b.1, "n={n}");
                }
            }
        }
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut x = 12345u64;
        for _ in 0..300 {
            let n = 1 + (xorshift(&mut x) % 12) as usize;
            let mut g = SmallGraph::new(n);
            for v in 1..n {
                for u in 0..v {
                    if xorshift(&mut x) % 3 == 0 {
                        g.add_edge(u, v);
                    }
                }
            }
            let mut perm: Vec<u8> = (0..n as u8).collect();
            for i in (1..n).rev() {
                perm.swap(i, (xorshift(&mut x) % (i as u64 + 1)) as usize);
            }
            let h = g.permuted(&perm);
            assert_eq!(canonical_key(&g), canonical_key(&h));
            assert_eq!(canonical_graph(&g), canonical_graph(&h));
        }
    }

    #[test]
    fn symmetric_graphs() {
        let empty = SmallGraph::new(12);
        assert_eq!(canonical_key(&empty), 0);
        let mut cycle = SmallGraph::new(10);
        for i in 0..10 {
            cycle.add_edge(i, (i + 1) % 10);
        }
        let mut other = SmallGraph::new(10);
        for i in 0..10 {
            other.add_edge((3 * i) % 10, (3 * i + 3) % 10);
        }
        assert_eq!(canonical_key(&cycle), canonical_key(&other));
        let mut petersen = SmallGraph::new(10);
        for i in 0..5 {
            petersen.add_edge(i, (i + 1) % 5);
            petersen.add_edge(i, i + 5);
            petersen.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        assert_ne!(canonical_key(&cycle), canonical_key(&petersen));
    }
}
