use alloc::vec::Vec;

use crate::graph::Graph;

/// Largest order a [`SmallGraph`] can hold; its canonical key uses
/// `C(16, 2) = 120` bits.
pub const MAX_ORDER: usize = 16;

/// Graph on at most 16 vertices with one `u32` adjacency mask per vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: u8,
    rows: [u32; MAX_ORDER],
}

impl SmallGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_ORDER);
        SmallGraph {
            n: n as u8,
            rows: [0; MAX_ORDER],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut s = SmallGraph::new(g.order());
        for (u, v) in g.edges() {
            s.add_edge(u, v);
        }
        s
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.order());
        for u in 0..self.order() {
            for v in u + 1..self.order() {
                if self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn row(&self, v: usize) -> u32 {
        self.rows[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.rows[u] |= 1 << v;
            self.rows[v] |= 1 << u;
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order()).map(|v| self.degree(v)).min()
    }

    /// This graph plus a vertex adjacent to `mask`.
    pub fn with_vertex(&self, mask: u32) -> Self {
        let mut g = *self;
        let x = self.order();
        assert!(x < MAX_ORDER);
        g.n += 1;
        g.rows[x] = mask;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            g.rows[v] |= 1 << x;
            m &= m - 1;
        }
        g
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[u8]) -> Self {
        let mut g = SmallGraph::new(self.order());
        for (i, &pi) in perm.iter().enumerate() {
            let mut row = 0u32;
            for (j, &pj) in perm.iter().enumerate() {
                if self.has_edge(pi as usize, pj as usize) {
                    row |= 1 << j;
                }
            }
            g.rows[i] = row;
        }
        g
    }

    /// Upper-triangle bits in column order `(0,1), (0,2), (1,2), (0,3), ...`,
    /// first pair most significant, after relabelling by `perm`.
    pub fn key_under(&self, perm: &[u8]) -> u128 {
        let mut key = 0u128;
        for j in 1..perm.len() {
            let row = self.rows[perm[j] as usize];
            for &pi in &perm[..j] {
                key = key << 1 | u128::from(row >> pi & 1);
            }
        }
        key
    }

    pub fn c4_free(&self) -> bool {
        let n = self.order();
        (0..n).all(|u| (u + 1..n).all(|v| (self.rows[u] & self.rows[v]).count_ones() <= 1))
    }

    /// Common non-neighbours of the non-adjacent pair maximising them.
    pub fn max_book_in_complement(&self) -> Option<usize> {
        let n = self.order();
        let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut best = None;
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    let outside = all & !(self.rows[u] | self.rows[v]) & !(1 << u) & !(1 << v);
                    best = best.max(Some(outside.count_ones() as usize));
                }
            }
        }
        best
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        (0..n)
            .flat_map(|u| (u + 1..n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
            .collect()
    }
}
