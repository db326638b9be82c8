//! Independent reference implementations used to cross-check the fast paths.
//!
//! Each one works from `has_edge` alone and shares no code with the graph
//! internals.

use c4book_core::Graph;

fn rows(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    let words = n.div_ceil(64);
    (0..n)
        .map(|u| {
            let mut row = vec![0u64; words];
            for v in 0..n {
                if g.has_edge(u, v) {
                    row[v / 64] |= 1 << (v % 64);
                }
            }
            row
        })
        .collect()
}

/// Some pair of distinct vertices has two common neighbours.
pub fn naive_contains_c4(g: &Graph) -> bool {
    let r = rows(g);
    let n = g.order();
    (0..n).any(|u| {
        (u + 1..n).any(|v| {
            r[u].iter()
                .zip(&r[v])
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>()
                >= 2
        })
    })
}

/// Scan of every 4-set and each of its three cyclic orders.
pub fn quadruple_scan_c4(g: &Graph) -> bool {
    let n = g.order();
    let e = |a, b| g.has_edge(a, b);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if (e(a, b) && e(b, c) && e(c, d) && e(d, a))
                        || (e(a, b) && e(b, d) && e(d, c) && e(c, a))
                        || (e(a, c) && e(c, b) && e(b, d) && e(d, a))
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Largest book in the complement found by listing, for every complement
/// edge `uv`, the vertices joined to both `u` and `v` in the complement.
pub fn page_scan_max_book(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = None;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let pages = (0..n)
                .filter(|&w| w != u && w != v && !g.has_edge(u, w) && !g.has_edge(v, w))
                .count();
            best = best.max(Some(pages));
        }
    }
    best
}

/// Most common non-neighbours over non-adjacent pairs, `None` if every pair is
/// adjacent. Word-parallel, for orders where [`page_scan_max_book`] is too slow.
pub fn explicit_max_book(g: &Graph) -> Option<usize> {
    let r = rows(g);
    let n = g.order();
    let mut best = None;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let covered: u32 = r[u].iter().zip(&r[v]).map(|(a, b)| (a | b).count_ones()).sum();
            // u and v are not adjacent to themselves, so they are not in the union
            let pages = n - 2 - covered as usize;
            best = best.max(Some(pages));
        }
    }
    best
}

/// Straight-line graph6 encoder: collect the bit string, then cut it into sextets.
pub fn reference_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut bits = Vec::new();
    for j in 0..n {
        for i in 0..j {
            bits.push(u8::from(g.has_edge(i, j)));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(0);
    }
    out.extend(bits.chunks(6).map(|c| c.iter().fold(0, |a, &b| a << 1 | b) + 63));
    out
}
