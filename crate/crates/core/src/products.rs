//! Direct (tensor) products G×H and their layer structure.
//!
//! Vertex `(g, h)` of the product has index `g·n(H) + h` everywhere in this
//! crate, so the H-layer over `g` is a contiguous block of bits.

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::graph::Graph;
use crate::independence::{maximum_independent_set, minimum_maximal_independent_set};
use crate::verdict::{describe_pair, ClaimVerdict};
use crate::vset::{low_bits, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("product of orders {n_g} and {n_h} has {} vertices; at most {MAX_VERTICES} are supported", n_g * n_h)]
    TooLarge { n_g: usize, n_h: usize },
    #[error("set is not independent in the factor: edge ({u},{v})")]
    NotIndependent { u: usize, v: usize },
}

/// A materialized direct product together with its index bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductGraph {
    pub graph: Graph,
    n_g: usize,
    n_h: usize,
}

/// Sidecar needed to decode product vertex indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProductShape {
    #[serde(rename = "nG")]
    pub n_g: usize,
    #[serde(rename = "nH")]
    pub n_h: usize,
}

/// G×H: `(g1,h1) ~ (g2,h2)` iff `g1 ~ g2` in G and `h1 ~ h2` in H.
pub fn direct_product(g: &Graph, h: &Graph) -> Result<ProductGraph, ProductError> {
    let (n_g, n_h) = (g.order(), h.order());
    if n_g * n_h > MAX_VERTICES {
        return Err(ProductError::TooLarge { n_g, n_h });
    }
    let mut adj = Vec::with_capacity(n_g * n_h);
    for a in 0..n_g {
        for b in 0..n_h {
            let hb = h.adjacency()[b];
            let row = g
                .neighbors(a)
                .iter()
                .fold(0u64, |acc, a2| acc | (hb << (a2 * n_h)));
            adj.push(row);
        }
    }
    let mut graph = Graph::from_adjacency(adj).expect("direct product of simple graphs is simple");
    if g.labels().is_some() || h.labels().is_some() {
        let labels = (0..n_g)
            .flat_map(|a| (0..n_h).map(move |b| (a, b)))
            .map(|(a, b)| format!("({},{})", g.label(a), h.label(b)))
            .collect();
        graph = graph.with_labels(labels).expect("one label per vertex");
    }
    Ok(ProductGraph { graph, n_g, n_h })
}

impl ProductGraph {
    pub fn shape(&self) -> ProductShape {
        ProductShape {
            n_g: self.n_g,
            n_h: self.n_h,
        }
    }

    pub fn n_g(&self) -> usize {
        self.n_g
    }

    pub fn n_h(&self) -> usize {
        self.n_h
    }

    #[inline]
    pub fn index(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.n_g && h < self.n_h);
        g * self.n_h + h
    }

    #[inline]
    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.n_h, v % self.n_h)
    }

    /// The H-layer over `g`: {(g, h) : h ∈ V(H)}.
    pub fn layer_h(&self, g: usize) -> VertexSet {
        VertexSet::from_bits(low_bits(self.n_h) << (g * self.n_h))
    }

    /// The G-layer over `h`: {(g, h) : g ∈ V(G)}.
    pub fn layer_g(&self, h: usize) -> VertexSet {
        (0..self.n_g).map(|g| self.index(g, h)).collect()
    }

    /// p_G(S).
    pub fn project_g(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| v / self.n_h).collect()
    }

    /// p_H(S).
    pub fn project_h(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| v % self.n_h).collect()
    }

    /// A × B for `a` over G and `b` over H.
    pub fn cartesian(&self, a: VertexSet, b: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for g in a {
            out |= b.bits() << (g * self.n_h);
        }
        VertexSet::from_bits(out)
    }

    /// I × V(H) for an independent set `i` of `g`. Maximality of the result
    /// is not checked here.
    pub fn lift_independent(&self, g: &Graph, i: VertexSet) -> Result<VertexSet, ProductError> {
        if let Some((u, v)) = g.edge_within(i) {
            return Err(ProductError::NotIndependent { u, v });
        }
        Ok(self.cartesian(i, VertexSet::full(self.n_h)))
    }

    /// The same product with the factors swapped, `(g,h) ↦ (h,g)`.
    pub fn swap_index(&self, v: usize) -> usize {
        let (g, h) = self.coords(v);
        h * self.n_g + g
    }
}

/// Both bounds that follow from lifting maximal independent sets of a
/// factor: α(G×H) ≥ max{α(G)n(H), α(H)n(G)} and
/// i(G×H) ≤ min{i(G)n(H), i(H)n(G)}. Vacuous if either factor has an
/// isolated vertex.
pub fn product_bounds_check(g: &Graph, h: &Graph) -> Result<ClaimVerdict, ProductError> {
    const ID: &str = "trivial_bounds";
    let inst = describe_pair(g, h);
    if !g.isolated_vertices().is_empty() || !h.isolated_vertices().is_empty() {
        return Ok(ClaimVerdict::vacuous(
            ID,
            inst,
            "a factor has an isolated vertex",
        ));
    }
    let p = direct_product(g, h)?;
    let (ng, nh) = (g.order(), h.order());
    let (ag, ah) = (
        maximum_independent_set(g).len(),
        maximum_independent_set(h).len(),
    );
    let (ig, ih) = (
        minimum_maximal_independent_set(g).len(),
        minimum_maximal_independent_set(h).len(),
    );
    let max_set = maximum_independent_set(&p.graph);
    let min_set = minimum_maximal_independent_set(&p.graph);
    let lower = (ag * nh).max(ah * ng);
    let upper = (ig * nh).min(ih * ng);
    let w = json!({
        "alpha_product": max_set.len(), "alpha_lower_bound": lower,
        "i_product": min_set.len(), "i_upper_bound": upper,
        "alpha_witness": max_set, "i_witness": min_set,
    });
    Ok(if max_set.len() >= lower && min_set.len() <= upper {
        ClaimVerdict::holds(ID, inst).with_witness(w)
    } else {
        ClaimVerdict::counterexample(ID, inst, w)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::independence::{alpha, is_well_covered};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &e).unwrap()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &e).unwrap()
    }

    #[test]
    fn small_products() {
        let p = direct_product(&complete(2), &complete(2)).unwrap();
        assert_eq!(p.graph.size(), 2);
        assert_eq!(p.graph.regular_degree(), Some(1));
        assert_eq!(p.graph.components().len(), 2);

        let p = direct_product(&complete(3), &complete(3)).unwrap();
        assert_eq!(p.graph.order(), 9);
        assert_eq!(p.graph.regular_degree(), Some(4));

        let p = direct_product(&complete(2), &path(3)).unwrap();
        assert_eq!(p.graph.order(), 6);
        assert!(p.graph.is_bipartite());
        for (u, v) in p.graph.edges() {
            let ((gu, hu), (gv, hv)) = (p.coords(u), p.coords(v));
            assert_ne!(gu, gv);
            assert_ne!(hu % 2, hv % 2);
        }
    }

    #[test]
    fn too_large() {
        assert_eq!(
            direct_product(&complete(9), &complete(8)),
            Err(ProductError::TooLarge { n_g: 9, n_h: 8 })
        );
        assert!(direct_product(&complete(8), &complete(8)).is_ok());
    }

    #[test]
    fn layers_and_projections() {
        let p = direct_product(&complete(3), &complete(3)).unwrap();
        let l = p.layer_h(0);
        assert_eq!(l, set(&[p.index(0, 0), p.index(0, 1), p.index(0, 2)]));
        assert!(p.graph.is_independent(l));
        let s = set(&[p.index(0, 1), p.index(2, 1)]);
        assert_eq!(p.project_g(s), set(&[0, 2]));
        assert_eq!(p.project_h(s), set(&[1]));

        let p = direct_product(&complete(2), &complete(2)).unwrap();
        assert_eq!(p.layer_g(1), set(&[p.index(0, 1), p.index(1, 1)]));
    }

    #[test]
    fn lifting() {
        let c4 = cycle(4);
        let p = direct_product(&c4, &complete(2)).unwrap();
        let lifted = p.lift_independent(&c4, set(&[0, 2])).unwrap();
        assert_eq!(lifted.len(), 4);
        assert!(p.graph.is_maximal_independent(lifted));

        let k3 = complete(3);
        let p = direct_product(&k3, &k3).unwrap();
        let lifted = p.lift_independent(&k3, set(&[0])).unwrap();
        assert_eq!(lifted, p.layer_h(0));
        assert!(p.graph.is_maximal_independent(lifted));

        let k2 = complete(2);
        let p = direct_product(&k2, &k2).unwrap();
        let lifted = p.lift_independent(&k2, set(&[0])).unwrap();
        assert_eq!(lifted, set(&[p.index(0, 0), p.index(0, 1)]));
        assert!(p.graph.is_maximal_independent(lifted));

        assert_eq!(
            p.lift_independent(&k2, set(&[0, 1])),
            Err(ProductError::NotIndependent { u: 0, v: 1 })
        );
    }

    #[test]
    fn bounds_examples() {
        let v = product_bounds_check(&complete(3), &complete(3)).unwrap();
        assert!(v.is_holds());
        assert_eq!(v.witness.as_ref().unwrap()["alpha_product"], 3);

        let v = product_bounds_check(&cycle(4), &complete(2)).unwrap();
        assert!(v.is_holds());
        assert_eq!(v.witness.as_ref().unwrap()["alpha_product"], 4);

        let v = product_bounds_check(&cycle(5), &cycle(5)).unwrap();
        assert!(v.is_holds());
        let w = v.witness.unwrap();
        assert!(w["alpha_product"].as_u64().unwrap() >= 10);

        let k2k1 = complete(2)
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        assert!(product_bounds_check(&k2k1, &complete(2))
            .unwrap()
            .is_vacuous());
    }

    #[test]
    fn complete_times_complete() {
        for n in 2..=4 {
            for m in 2..=4 {
                let p = direct_product(&complete(n), &complete(m)).unwrap();
                assert_eq!(is_well_covered(&p.graph), n == m, "K{n} x K{m}");
                assert_eq!(alpha(&p.graph), n.max(m));
            }
        }
    }

    #[test]
    fn labels_combine() {
        let g = complete(2)
            .with_labels(vec!["a".into(), "b".into()])
            .unwrap();
        let p = direct_product(&g, &complete(2)).unwrap();
        assert_eq!(p.graph.label(p.index(1, 0)), "(b,0)");
        assert_eq!(
            serde_json::to_string(&p.shape()).unwrap(),
            r#"{"nG":2,"nH":2}"#
        );
    }
}
