//! Dense simple graphs stored as bitset rows, and the predicates the rest of the
//! crate is built on.

use alloc::collections::BTreeMap;
use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

pub mod graph6;

/// Sparse complement-book scan is used above this order.
const DENSE_BOOK_LIMIT: usize = 1024;

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Largest number of common non-neighbours over non-adjacent pairs: the page
/// count of the largest book in the complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BookNumber {
    /// The graph is complete; its complement has no edge at all.
    NoNonEdge,
    Pages { value: usize, u: usize, v: usize },
}

impl BookNumber {
    pub fn value(self) -> Option<usize> {
        match self {
            BookNumber::NoNonEdge => None,
            BookNumber::Pages { value, .. } => Some(value),
        }
    }

    /// Whether the complement contains `B_m`.
    pub fn complement_contains_book(self, m: usize) -> bool {
        matches!(self, BookNumber::Pages { value, .. } if value >= m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.bits[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    /// Adds `uv`; self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn neighbor_lists(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|v| self.neighbors(v).map(|x| x as u32).collect())
            .collect()
    }

    /// Edges `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Vertices other than `u` and `v` adjacent to neither.
    pub fn common_non_neighbor_count(&self, u: usize, v: usize) -> usize {
        let union: usize = self
            .row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum();
        let outside = self.n - union;
        // u and v lie outside the union exactly when they are non-adjacent
        if self.has_edge(u, v) {
            outside
        } else {
            outside - 2
        }
    }

    /// Subgraph induced by `keep`, relabelled in the given order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for x in self.neighbors(v) {
                let j = pos[x];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Graph with the vertices in `remove` deleted, survivors kept in order.
    pub fn without_vertices(&self, remove: &[usize]) -> Graph {
        let mut gone = vec![false; self.n];
        for &v in remove {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        self.induced_subgraph(perm)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// A 4-cycle `[a, b, c, d]` (edges ab, bc, cd, da) if one exists.
    ///
    /// Walks paths of length two from every vertex and stops at the first
    /// endpoint reached twice; cost is the sum of squared degrees.
    pub fn find_c4(&self) -> Option<[usize; 4]> {
        let adj = self.neighbor_lists();
        let mut stamp = vec![u32::MAX; self.n];
        let mut via = vec![0u32; self.n];
        for u in 0..self.n {
            for &w in &adj[u] {
                for &x in &adj[w as usize] {
                    let x = x as usize;
                    if x <= u {
                        continue;
                    }
                    if stamp[x] == u as u32 {
                        return Some([u, via[x] as usize, x, w as usize]);
                    }
                    stamp[x] = u as u32;
                    via[x] = w;
                }
            }
        }
        None
    }

    pub fn contains_c4(&self) -> bool {
        self.find_c4().is_some()
    }

    /// Largest number of common non-neighbours of a non-adjacent pair.
    pub fn max_book_in_complement(&self) -> BookNumber {
        if self.n > DENSE_BOOK_LIMIT {
            self.max_book_sparse()
        } else {
            self.max_book_dense()
        }
    }

    pub(crate) fn max_book_dense(&self) -> BookNumber {
        let mut best = BookNumber::NoNonEdge;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    continue;
                }
                let pages = self.common_non_neighbor_count(u, v);
                if best.value().is_none_or(|b| pages > b) {
                    best = BookNumber::Pages { value: pages, u, v };
                }
            }
        }
        best
    }

    /// For a non-adjacent pair, pages = n - 2 - d(u) - d(x) + c(u, x). For each
    /// `u` the common-neighbour counts are gathered along paths of length two,
    /// and the best partner inside each degree class is found from those counts
    /// plus the number of eligible (non-adjacent, untouched) class members.
    pub(crate) fn max_book_sparse(&self) -> BookNumber {
        let n = self.n;
        let adj = self.neighbor_lists();
        let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut class_degrees: Vec<usize> = deg.clone();
        class_degrees.sort_unstable();
        class_degrees.dedup();
        let class_of: Vec<usize> = deg
            .iter()
            .map(|d| class_degrees.binary_search(d).unwrap())
            .collect();
        let mut class_size = vec![0usize; class_degrees.len()];
        for &c in &class_of {
            class_size[c] += 1;
        }

        let mut counter = vec![0u32; n];
        let mut touched: Vec<usize> = Vec::new();
        let mut excluded = vec![0usize; class_degrees.len()];
        let mut best_c = vec![0u32; class_degrees.len()];
        let mut best_x = vec![usize::MAX; class_degrees.len()];
        let mut best = BookNumber::NoNonEdge;

        for u in 0..n {
            for &w in &adj[u] {
                for &x in &adj[w as usize] {
                    let x = x as usize;
                    if x == u {
                        continue;
                    }
                    if counter[x] == 0 {
                        touched.push(x);
                    }
                    counter[x] += 1;
                }
            }
            excluded[class_of[u]] += 1;
            for &w in &adj[u] {
                excluded[class_of[w as usize]] += 1;
            }
            for &x in &touched {
                if self.has_edge(u, x) {
                    continue;
                }
                let c = class_of[x];
                if best_x[c] == usize::MAX || counter[x] > best_c[c] {
                    best_c[c] = counter[x];
                    best_x[c] = x;
                }
            }
            for c in 0..class_degrees.len() {
                if class_size[c] == excluded[c] {
                    continue;
                }
                let x = if best_x[c] != usize::MAX {
                    best_x[c]
                } else {
                    // any eligible member has zero common neighbours with u
                    (0..n)
                        .find(|&x| class_of[x] == c && x != u && !self.has_edge(u, x))
                        .unwrap()
                };
                let pages = n + best_c[c] as usize - 2 - deg[u] - class_degrees[c];
                if best.value().is_none_or(|b| pages > b) {
                    let (a, b) = if u < x { (u, x) } else { (x, u) };
                    best = BookNumber::Pages { value: pages, u: a, v: b };
                }
            }
            for &x in &touched {
                counter[x] = 0;
            }
            touched.clear();
            excluded.iter_mut().for_each(|e| *e = 0);
            best_c.iter_mut().for_each(|e| *e = 0);
            best_x.iter_mut().for_each(|e| *e = usize::MAX);
        }
        best
    }

    /// `sum_v C(d(v), 2) > C(n, 2)`: a sufficient condition for a 4-cycle.
    pub fn degree_sum_forces_c4(&self) -> bool {
        let lhs: u128 = (0..self.n)
            .map(|v| {
                let d = self.degree(v) as u128;
                d * d.saturating_sub(1) / 2
            })
            .sum();
        let n = self.n as u128;
        lhs > n * n.saturating_sub(1) / 2
    }

    pub fn degree_profile(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for v in 0..self.n {
            *hist.entry(self.degree(v)).or_insert(0) += 1;
        }
        hist
    }

    pub fn eccentricity(&self, s: usize) -> Diameter {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut far = 0;
        let mut seen = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    far = far.max(dist[v]);
                    seen += 1;
                    queue.push_back(v);
                }
            }
        }
        if seen == self.n {
            Diameter::Finite(far)
        } else {
            Diameter::Infinite
        }
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n {
            match self.eccentricity(s) {
                Diameter::Infinite => return Diameter::Infinite,
                Diameter::Finite(e) => best = best.max(e),
            }
        }
        Diameter::Finite(best)
    }

    /// Whether no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}
