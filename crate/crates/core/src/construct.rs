//! Lower-bound witnesses cut out of the polarity graph.
//!
//! Both families fix a hub vertex, list its neighbours `w_1..w_{q+1}` and the
//! sets `A_{w_i} = N(w_i) \ N[hub]`, then delete a prescribed set of vertices.
//! Every result is re-verified before it is returned.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{prime_power, FieldSpec};
use crate::graph::Graph;
use crate::projective::{build_er_graph, PolarityGraph, ProjectivePoint};
use crate::witness::{verify_witness, WitnessReport};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Even `q`: deletions around the hub `<1,1,1>`.
    H,
    /// Odd `q`: deletions around the hub `<0,0,1>`, with one matching swap for odd `t`.
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::H => "H",
            Family::G => "G",
        })
    }
}

/// The hub, its ordered neighbourhood and the sets hanging off each neighbour,
/// as vertex indices of the polarity graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodFrame {
    pub hub: usize,
    pub w: Vec<usize>,
    pub a: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub family: Family,
    pub q: u32,
    pub t: u32,
    pub graph: Graph,
    /// Point of the polarity graph each vertex came from.
    pub labels: Vec<ProjectivePoint>,
    /// `n = (q-1)^2 + t - 2`.
    pub target_book: usize,
    /// `q^2 + t`.
    pub certified_lower: usize,
    pub report: WitnessReport,
}

impl ConstructionResult {
    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

fn invariant(msg: String) -> Error {
    Error::FrameInvariant(msg)
}

fn absolute_neighbor_count(er: &PolarityGraph, v: usize) -> usize {
    er.absolute.iter().filter(|&&x| er.graph.has_edge(v, x)).count()
}

/// Checks the partition `{hub} ∪ N(hub) ∪ ⋃ A_{w_i} = V` with disjoint `A` sets.
fn check_partition(er: &PolarityGraph, frame: &NeighborhoodFrame) -> Result<()> {
    let q = er.q() as usize;
    if frame.w.len() != q + 1 {
        return Err(invariant(format!(
            "hub has {} neighbours, expected {}",
            frame.w.len(),
            q + 1
        )));
    }
    let mut seen = vec![false; er.graph.order()];
    for &v in core::iter::once(&frame.hub).chain(&frame.w).chain(frame.a.iter().flatten()) {
        if seen[v] {
            return Err(invariant(format!("vertex {v} lies in two parts of the partition")));
        }
        seen[v] = true;
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(invariant(format!("vertex {v} is not covered by the partition")));
    }
    Ok(())
}

fn raw_frame(er: &PolarityGraph, hub: usize, w: Vec<usize>) -> NeighborhoodFrame {
    let g = &er.graph;
    let a = w
        .iter()
        .map(|&wi| {
            g.neighbors(wi)
                .filter(|&x| x != hub && !g.has_edge(hub, x))
                .collect()
        })
        .collect();
    NeighborhoodFrame { hub, w, a }
}

/// Builds the frame for the parity of `q`; any failed structural statement is
/// reported as [`Error::FrameInvariant`].
pub fn build_frame(er: &PolarityGraph) -> Result<NeighborhoodFrame> {
    let q = er.q();
    if q < 3 {
        return Err(Error::OutOfRange(format!("frames need q >= 3, got {q}")));
    }
    if q % 2 == 0 {
        even_frame(er)
    } else {
        odd_frame(er)
    }
}

fn even_frame(er: &PolarityGraph) -> Result<NeighborhoodFrame> {
    let q = er.q() as usize;
    let hub = er.index_of_values([1, 1, 1])?;
    let w: Vec<usize> = er.graph.neighbors(hub).collect();
    let frame = raw_frame(er, hub, w);
    check_partition(er, &frame)?;
    if frame.w != er.absolute {
        return Err(invariant("hub neighbourhood differs from the absolute points".into()));
    }
    for (i, a) in frame.a.iter().enumerate() {
        if a.len() != q - 1 {
            return Err(invariant(format!(
                "|A_w{}| = {}, expected {}",
                i + 1,
                a.len(),
                q - 1
            )));
        }
    }
    Ok(frame)
}

/// Odd `q`. The hub's neighbours `<0,1,0>` and `<1,b,0>` carry an induced
/// matching (all of it when `q = 3 mod 4`, all but the two absolute points when
/// `q = 1 mod 4`). Partners share their count of absolute neighbours, so pairs
/// whose endpoints see exactly two absolute points come first; pairs are
/// otherwise ordered by their smaller endpoint, which leads its pair. When
/// `q = 1 mod 4` the two absolute neighbours close the list.
fn odd_frame(er: &PolarityGraph) -> Result<NeighborhoodFrame> {
    let q = er.q() as usize;
    let g = &er.graph;
    let hub = er.index_of_values([0, 0, 1])?;
    let nbrs: Vec<usize> = g.neighbors(hub).collect();
    let (tail, matched): (Vec<usize>, Vec<usize>) =
        nbrs.iter().partition(|&&v| er.is_absolute(v));
    let expected_tail = if q % 4 == 1 { 2 } else { 0 };
    if tail.len() != expected_tail {
        return Err(invariant(format!(
            "hub has {} absolute neighbours, expected {expected_tail}",
            tail.len()
        )));
    }
    if tail.len() == 2 && g.has_edge(tail[0], tail[1]) {
        return Err(invariant("the two absolute hub neighbours are adjacent".into()));
    }

    let mut pairs = Vec::with_capacity(matched.len() / 2);
    for &v in &matched {
        let partners: Vec<usize> = matched.iter().copied().filter(|&x| g.has_edge(v, x)).collect();
        if partners.len() != 1 {
            return Err(invariant(format!(
                "hub neighbour {v} has {} neighbours among the matched set",
                partners.len()
            )));
        }
        if v < partners[0] {
            pairs.push([v, partners[0]]);
        }
    }

    let qualifies = |v: usize| absolute_neighbor_count(er, v) == 2;
    for &[x, y] in &pairs {
        if qualifies(x) != qualifies(y) {
            return Err(invariant(format!(
                "matched pair {x}-{y} disagrees on its absolute neighbour count"
            )));
        }
    }
    // stable: the smaller-endpoint order survives within each group
    pairs.sort_by_key(|&[x, _]| !qualifies(x));
    let w: Vec<usize> = pairs.iter().flatten().copied().chain(tail).collect();

    let leading = if q % 4 == 3 { (q + 1) / 2 } else { (q - 1) / 2 };
    if let Some(i) = (0..leading).find(|&i| !qualifies(w[i])) {
        return Err(invariant(format!(
            "w{} is adjacent to {} absolute points, expected 2",
            i + 1,
            absolute_neighbor_count(er, w[i])
        )));
    }

    let frame = raw_frame(er, hub, w);
    check_partition(er, &frame)?;
    Ok(frame)
}

/// Admissible `t` for `q`: `0 <= t <= q-1, t != 1` for even `q`;
/// `(q+1)/2 <= t <= q-1, t != (q+3)/2` for `q = 3 mod 4`;
/// `(q-1)/2 <= t <= q-1, t != (q+1)/2` for `q = 1 mod 4`.
pub fn admissible_t(q: u32) -> Vec<u32> {
    if q % 2 == 0 {
        (0..q).filter(|&t| t != 1).collect()
    } else if q % 4 == 3 {
        ((q + 1) / 2..q).filter(|&t| t != (q + 3) / 2).collect()
    } else {
        ((q - 1) / 2..q).filter(|&t| t != (q + 1) / 2).collect()
    }
}

fn polarity_graph(q: u32) -> Result<PolarityGraph> {
    Ok(build_er_graph(&FieldSpec::of_order(u64::from(q))?))
}

/// Verifies `graph` and packages it. Failure means a prediction did not hold.
fn finish(
    family: Family,
    q: u32,
    t: u32,
    graph: Graph,
    labels: Vec<ProjectivePoint>,
) -> Result<ConstructionResult> {
    let qq = q as usize;
    let target_book = (qq - 1) * (qq - 1) + t as usize - 2;
    let expected_order = qq * qq + t as usize - 1;
    let tag = format!("{family}(q={q}, t={t})");
    if graph.order() != expected_order {
        return Err(Error::Construction(format!(
            "{tag} has {} vertices, expected {expected_order}",
            graph.order()
        )));
    }
    let report = verify_witness(&graph, target_book);
    if !report.is_valid() {
        return Err(Error::Construction(format!("{tag}: {:?}", report.verdict)));
    }
    if report.min_degree.is_some_and(|d| d < qq) {
        return Err(Error::Construction(format!(
            "{tag} has minimum degree {:?}, expected at least {q}",
            report.min_degree
        )));
    }
    Ok(ConstructionResult {
        family,
        q,
        t,
        graph,
        labels,
        target_book,
        certified_lower: qq * qq + t as usize,
        report,
    })
}

fn delete(er: &PolarityGraph, graph: &Graph, remove: &mut Vec<usize>) -> (Graph, Vec<ProjectivePoint>) {
    remove.sort_unstable();
    let labels = (0..er.points.len())
        .filter(|v| remove.binary_search(v).is_err())
        .map(|v| er.points[v])
        .collect();
    (graph.without_vertices(remove), labels)
}

/// The even-q witness on `q^2 + t - 1` vertices.
pub fn build_h(q: u32, t: u32) -> Result<ConstructionResult> {
    if q < 4 || q % 2 != 0 || prime_power(u64::from(q)).is_none() {
        return Err(Error::OutOfRange(format!(
            "family H needs an even prime power q >= 4, got {q}"
        )));
    }
    if t >= q || t == 1 {
        return Err(Error::OutOfRange(format!(
            "family H needs 0 <= t <= {} and t != 1, got t = {t}",
            q - 1
        )));
    }
    let er = polarity_graph(q)?;
    let frame = build_frame(&er)?;
    let mut remove = if t == 0 {
        let mut r = frame.w.clone();
        r.push(frame.hub);
        r
    } else {
        let u = &frame.a[0];
        let mut r = vec![frame.w[0]];
        r.extend_from_slice(&u[t as usize - 2..]);
        r
    };
    let (graph, labels) = delete(&er, &er.graph, &mut remove);
    finish(Family::H, q, t, graph, labels)
}

/// The odd-q witness on `q^2 + t - 1` vertices.
pub fn build_g(q: u32, t: u32) -> Result<ConstructionResult> {
    if q < 5 || q % 2 == 0 || prime_power(u64::from(q)).is_none() {
        return Err(Error::OutOfRange(format!(
            "family G needs an odd prime power q >= 5, got {q}"
        )));
    }
    if !admissible_t(q).contains(&t) {
        let range = if q % 4 == 3 {
            format!("{} <= t <= {} and t != {}", (q + 1) / 2, q - 1, (q + 3) / 2)
        } else {
            format!("{} <= t <= {} and t != {}", (q - 1) / 2, q - 1, (q + 1) / 2)
        };
        return Err(Error::OutOfRange(format!(
            "family G with q = {q} needs {range}, got t = {t}"
        )));
    }
    let er = polarity_graph(q)?;
    let frame = build_frame(&er)?;
    let t = t as usize;
    let mut graph = er.graph.clone();
    if t % 2 == 1 {
        let (x, y) = (t - 2, t - 1);
        graph.add_edge(frame.w[x], frame.w[y]);
        for &a in &frame.a[x] {
            for &b in &frame.a[y] {
                graph.remove_edge(a, b);
            }
        }
    }
    let mut remove = vec![frame.hub];
    remove.extend_from_slice(&frame.w[t..]);
    let (graph, labels) = delete(&er, &graph, &mut remove);
    finish(Family::G, q, t as u32, graph, labels)
}

/// `t = q - 1` in the family matching the parity of `q`: order `q^2 + q - 2`,
/// book size `q^2 - q - 2`.
pub fn build_largest_t_witness(q: u32) -> Result<ConstructionResult> {
    if q < 4 || prime_power(u64::from(q)).is_none() {
        return Err(Error::OutOfRange(format!(
            "needs a prime power q >= 4, got {q}"
        )));
    }
    if q % 2 == 0 {
        build_h(q, q - 1)
    } else {
        build_g(q, q - 1)
    }
}
