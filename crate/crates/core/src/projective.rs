//! Points of PG(2, q) and the orthogonal polarity graph.
//!
//! A point is stored by its canonical representative: the leftmost nonzero
//! coordinate is 1. Points are ordered lexicographically by the integer encodings
//! of their coordinates, which puts `<0,0,1>` first, then `<0,1,c>`, then `<1,b,c>`;
//! the index of a canonical point can therefore be computed directly.

use alloc::vec::Vec;

use crate::field::{FieldElement, FieldSpec};
use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint([FieldElement; 3]);

impl ProjectivePoint {
    pub fn coords(&self) -> [FieldElement; 3] {
        self.0
    }

    /// Coordinates as integer encodings.
    pub fn values(&self) -> [u32; 3] {
        self.0.map(FieldElement::value)
    }
}

/// Scales `triple` so that its leftmost nonzero coordinate is 1.
pub fn canonicalize(spec: &FieldSpec, triple: [FieldElement; 3]) -> Result<ProjectivePoint> {
    for &c in &triple {
        spec.check(c)?;
    }
    let lead = triple
        .iter()
        .copied()
        .find(|c| !c.is_zero())
        .ok_or(Error::ZeroVector)?;
    let s = spec.inv(lead)?;
    Ok(ProjectivePoint(triple.map(|c| spec.mul(s, c))))
}

pub fn point_count(q: u32) -> usize {
    let q = q as usize;
    q * q + q + 1
}

/// All canonical points in sorted order.
pub fn enumerate_points(spec: &FieldSpec) -> Vec<ProjectivePoint> {
    let q = spec.order();
    let e = |v: u32| FieldElement::from_index(v);
    let mut pts = Vec::with_capacity(point_count(q));
    pts.push(ProjectivePoint([e(0), e(0), e(1)]));
    for c in 0..q {
        pts.push(ProjectivePoint([e(0), e(1), e(c)]));
    }
    for b in 0..q {
        for c in 0..q {
            pts.push(ProjectivePoint([e(1), e(b), e(c)]));
        }
    }
    pts
}

/// Position of a canonical point in [`enumerate_points`] order.
pub fn point_index(q: u32, p: &ProjectivePoint) -> usize {
    let [a, b, c] = p.values();
    let q = q as usize;
    match (a, b) {
        (0, 0) => 0,
        (0, _) => 1 + c as usize,
        _ => 1 + q + b as usize * q + c as usize,
    }
}

pub fn dot(spec: &FieldSpec, a: &[FieldElement; 3], b: &[FieldElement; 3]) -> FieldElement {
    let mut acc = FieldElement::ZERO;
    for i in 0..3 {
        acc = spec.add(acc, spec.mul(a[i], b[i]));
    }
    acc
}

/// Whether `a1 b1 + a2 b2 + a3 b3 = 0`.
pub fn is_orthogonal(spec: &FieldSpec, p1: &ProjectivePoint, p2: &ProjectivePoint) -> Result<bool> {
    for c in p1.0.iter().chain(&p2.0) {
        spec.check(*c)?;
    }
    Ok(dot(spec, &p1.0, &p2.0).is_zero())
}

/// The orthogonal polarity graph ER_q: points of PG(2, q), adjacent when
/// orthogonal, with loops dropped.
#[derive(Clone, Debug)]
pub struct PolarityGraph {
    pub spec: FieldSpec,
    pub points: Vec<ProjectivePoint>,
    pub graph: Graph,
    /// Self-orthogonal points, in point order.
    pub absolute: Vec<usize>,
}

impl PolarityGraph {
    pub fn q(&self) -> u32 {
        self.spec.order()
    }

    pub fn index_of(&self, p: &ProjectivePoint) -> usize {
        point_index(self.q(), p)
    }

    /// Index of the point with the given canonical coordinate values.
    pub fn index_of_values(&self, values: [u32; 3]) -> Result<usize> {
        let coords = [
            self.spec.element(values[0])?,
            self.spec.element(values[1])?,
            self.spec.element(values[2])?,
        ];
        Ok(self.index_of(&canonicalize(&self.spec, coords)?))
    }

    pub fn is_absolute(&self, v: usize) -> bool {
        let c = self.points[v].coords();
        dot(&self.spec, &c, &c).is_zero()
    }
}

/// Points on the line `{x : a . x = 0}`, not necessarily canonical.
fn line_points(spec: &FieldSpec, a: &[FieldElement; 3]) -> Vec<[FieldElement; 3]> {
    let q = spec.order();
    let zero = FieldElement::ZERO;
    let one = FieldElement::ONE;
    let mut out = Vec::with_capacity(q as usize + 1);
    if !a[2].is_zero() {
        // x3 = -(a1 x1 + a2 x2) / a3 over the canonical pairs (x1, x2)
        let s = spec.neg(spec.inv(a[2]).expect("nonzero"));
        let mut push = |x1: FieldElement, x2: FieldElement| {
            let x3 = spec.mul(s, spec.add(spec.mul(a[0], x1), spec.mul(a[1], x2)));
            out.push([x1, x2, x3]);
        };
        push(zero, one);
        for t in spec.elements() {
            push(one, t);
        }
    } else if !a[1].is_zero() {
        let x2 = spec.neg(spec.mul(a[0], spec.inv(a[1]).expect("nonzero")));
        out.push([zero, zero, one]);
        for t in spec.elements() {
            out.push([one, x2, t]);
        }
    } else {
        out.push([zero, zero, one]);
        for t in spec.elements() {
            out.push([zero, one, t]);
        }
    }
    out
}

pub fn build_er_graph(spec: &FieldSpec) -> PolarityGraph {
    let q = spec.order();
    let points = enumerate_points(spec);
    let mut graph = Graph::new(points.len());
    let mut absolute = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let c = p.coords();
        if dot(spec, &c, &c).is_zero() {
            absolute.push(i);
        }
        for x in line_points(spec, &c) {
            let j = point_index(q, &canonicalize(spec, x).expect("line points are nonzero"));
            if j > i {
                graph.add_edge(i, j);
            }
        }
    }
    PolarityGraph {
        spec: spec.clone(),
        points,
        graph,
        absolute,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Diameter;
    use proptest::prelude::*;

    fn er(q: u64) -> PolarityGraph {
        build_er_graph(&FieldSpec::of_order(q).unwrap())
    }

    #[test]
    fn canonical_forms() {
        let f5 = FieldSpec::of_order(5).unwrap();
        let e = |v| f5.element(v).unwrap();
        let p = canonicalize(&f5, [e(2), e(4), e(0)]).unwrap();
        assert_eq!(p.values(), [1, 2, 0]);
        // oracle: scan every nonzero scalar for the representative with leading 1
        let oracle = f5
            .elements()
            .skip(1)
            .map(|l| [e(2), e(4), e(0)].map(|c| f5.mul(l, c)))
            .find(|t| t[0] == FieldElement::ONE)
            .unwrap();
        assert_eq!(p.coords(), oracle);
        assert_eq!(
            canonicalize(&f5, [e(1), e(1), e(1)]).unwrap(),
            canonicalize(&f5, [e(2), e(2), e(2)]).unwrap()
        );
        assert_eq!(canonicalize(&f5, [e(0), e(0), e(1)]).unwrap().values(), [0, 0, 1]);
        assert_eq!(canonicalize(&f5, [e(0), e(0), e(0)]), Err(Error::ZeroVector));
    }

    #[test]
    fn point_counts_and_order() {
        for (q, n) in [(2, 7), (4, 21), (5, 31), (9, 91)] {
            let f = FieldSpec::of_order(q).unwrap();
            let pts = enumerate_points(&f);
            assert_eq!(pts.len(), n);
            assert!(pts.windows(2).all(|w| w[0].values() < w[1].values()));
            for (i, p) in pts.iter().enumerate() {
                assert_eq!(point_index(f.order(), p), i);
                assert_eq!(canonicalize(&f, p.coords()).unwrap(), *p);
            }
        }
    }

    #[test]
    fn orthogonality() {
        let f3 = FieldSpec::of_order(3).unwrap();
        let pt = |v: [u32; 3]| canonicalize(&f3, v.map(|x| f3.element(x).unwrap())).unwrap();
        assert!(is_orthogonal(&f3, &pt([1, 0, 0]), &pt([0, 1, 0])).unwrap());
        assert!(!is_orthogonal(&f3, &pt([1, 0, 0]), &pt([1, 1, 0])).unwrap());
        assert!(is_orthogonal(&f3, &pt([1, 1, 1]), &pt([1, 1, 1])).unwrap());
    }

    #[test]
    fn line_construction_matches_pairwise_orthogonality() {
        for q in [2u64, 3, 4, 5, 8, 9] {
            let g = er(q);
            let n = g.points.len();
            for i in 0..n {
                for j in 0..n {
                    let orth = is_orthogonal(&g.spec, &g.points[i], &g.points[j]).unwrap();
                    assert_eq!(g.graph.has_edge(i, j), orth && i != j, "q={q} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn er2_degrees() {
        let g = er(2);
        assert_eq!(g.graph.order(), 7);
        let profile = g.graph.degree_profile();
        assert_eq!(profile.get(&2), Some(&3));
        assert_eq!(profile.get(&3), Some(&4));
    }

    #[test]
    fn polarity_graph_properties() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let g = er(q);
            let qq = q as usize;
            assert_eq!(g.graph.order(), qq * qq + qq + 1);
            let low: Vec<usize> = (0..g.graph.order()).filter(|&v| g.graph.degree(v) == qq).collect();
            assert!((0..g.graph.order()).all(|v| matches!(g.graph.degree(v), d if d == qq || d == qq + 1)));
            assert_eq!(low, g.absolute);
            assert_eq!(low.len(), qq + 1);
            assert!(g.graph.is_independent(&low));
            assert!(!g.graph.contains_c4());
            assert_eq!(g.graph.diameter(), Diameter::Finite(2));
            for u in 0..g.graph.order() {
                for v in u + 1..g.graph.order() {
                    assert!(g.graph.common_neighbor_count(u, v) <= 1);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn canonicalize_is_class_invariant(q_idx in 0usize..6, raw in any::<[u32; 3]>(), lambda in 1u32..1000) {
            let q = [2u64, 3, 4, 5, 8, 9][q_idx];
            let f = FieldSpec::of_order(q).unwrap();
            let t = raw.map(|v| f.element(v % f.order()).unwrap());
            prop_assume!(t.iter().any(|c| !c.is_zero()));
            let l = f.element(1 + lambda % (f.order() - 1)).unwrap();
            let p = canonicalize(&f, t).unwrap();
            prop_assert_eq!(canonicalize(&f, p.coords()).unwrap(), p);
            prop_assert_eq!(canonicalize(&f, t.map(|c| f.mul(l, c))).unwrap(), p);
        }
    }
}
