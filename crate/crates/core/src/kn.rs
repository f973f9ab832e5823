//! Products with a complete graph, G×Kₙ, through weak partitions of V(G).
//!
//! A maximal independent set I of G×Kₙ meets each layer {g}×[n] in 0, 1 or
//! n vertices. Recording which of those happens at every g gives a weak
//! partition V₀, V₁, …, Vₙ, V₍ₙ₎ of V(G) satisfying four local conditions,
//! and every such partition comes from exactly one I. The clique vertex
//! `k - 1` of Kₙ corresponds to the class Vₖ.

use std::fmt;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::graph::Graph;
use crate::independence::{is_well_covered, maximal_independent_sets};
use crate::products::{direct_product, ProductError};
use crate::verdict::{describe_graph, describe_with_clique, ClaimVerdict};
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnError {
    #[error("clique order must be at least 2, got {n}")]
    CliqueTooSmall { n: usize },
    #[error("expected {expected} classes V_1..V_n, got {got}")]
    ClassCount { expected: usize, got: usize },
    #[error("parts do not form a weak partition of the vertex set (vertex {v})")]
    NotWeakPartition { v: usize },
    #[error("condition {condition} fails at vertex {v}")]
    Condition { condition: u8, v: usize },
    #[error("set is not a maximal independent set of G×K{n}")]
    NotMaximalIndependent { n: usize },
    #[error("layer over vertex {g} meets the set in {size} vertices")]
    LayerSize { g: usize, size: usize },
    #[error("partition search exceeded {budget} nodes")]
    BudgetExceeded { budget: u64 },
    #[error(transparent)]
    Product(#[from] ProductError),
}

/// Which part of a weak partition a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    Zero,
    /// Vₖ for k in 1..=n.
    Class(usize),
    Bracket,
}

/// A weak partition V₀, V₁, …, Vₙ, V₍ₙ₎ of V(G) satisfying conditions 1–4.
///
/// Values of this type are always valid for the graph they were built
/// against; the graph itself is not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeakPartition {
    n: usize,
    #[serde(rename = "V0")]
    v0: VertexSet,
    classes: Vec<VertexSet>,
    bracket: VertexSet,
}

fn check_clique(n: usize) -> Result<(), KnError> {
    if n < 2 {
        Err(KnError::CliqueTooSmall { n })
    } else {
        Ok(())
    }
}

/// Checks conditions 2 and 4 at `u`, assuming all of N(u) is assigned.
fn local_ok(g: &Graph, u: usize, part: Part, classes: &[VertexSet], bracket: VertexSet) -> bool {
    let nu = g.neighbors(u);
    match part {
        Part::Class(k) => nu.intersects(classes[k - 1]),
        Part::Zero => {
            nu.intersects(bracket)
                || classes
                    .iter()
                    .filter(|c| nu.intersects(**c))
                    .nth(1)
                    .is_some()
        }
        Part::Bracket => true,
    }
}

impl WeakPartition {
    /// Validates the parts against `g`. `classes[k - 1]` is Vₖ.
    pub fn new(
        g: &Graph,
        n: usize,
        v0: VertexSet,
        classes: Vec<VertexSet>,
        bracket: VertexSet,
    ) -> Result<WeakPartition, KnError> {
        check_clique(n)?;
        if classes.len() != n {
            return Err(KnError::ClassCount {
                expected: n,
                got: classes.len(),
            });
        }
        let p = WeakPartition {
            n,
            v0,
            classes,
            bracket,
        };
        p.validate(g)?;
        Ok(p)
    }

    /// Builds the partition from a part assignment, one entry per vertex.
    pub fn from_parts(g: &Graph, n: usize, parts: &[Part]) -> Result<WeakPartition, KnError> {
        check_clique(n)?;
        if parts.len() != g.order() {
            return Err(KnError::NotWeakPartition {
                v: parts.len().min(g.order()),
            });
        }
        let mut v0 = VertexSet::EMPTY;
        let mut classes = vec![VertexSet::EMPTY; n];
        let mut bracket = VertexSet::EMPTY;
        for (v, &p) in parts.iter().enumerate() {
            match p {
                Part::Zero => v0.insert(v),
                Part::Class(k) if (1..=n).contains(&k) => classes[k - 1].insert(v),
                Part::Class(_) => return Err(KnError::NotWeakPartition { v }),
                Part::Bracket => bracket.insert(v),
            }
        }
        WeakPartition::new(g, n, v0, classes, bracket)
    }

    fn validate(&self, g: &Graph) -> Result<(), KnError> {
        let mut seen = VertexSet::EMPTY;
        for s in std::iter::once(self.v0)
            .chain(self.classes.iter().copied())
            .chain(std::iter::once(self.bracket))
        {
            if let Some(v) = (seen & s).min() {
                return Err(KnError::NotWeakPartition { v });
            }
            seen |= s;
        }
        if seen != g.vertices() {
            let v = ((seen - g.vertices()) | (g.vertices() - seen))
                .min()
                .expect("sets differ");
            return Err(KnError::NotWeakPartition { v });
        }
        let nonzero = seen - self.v0;
        for (k, &c) in self.classes.iter().enumerate() {
            let outside = nonzero - c;
            if let Some(v) = c.iter().find(|&v| g.neighbors(v).intersects(outside)) {
                return Err(KnError::Condition { condition: 1, v });
            }
            if let Some(v) = c
                .iter()
                .find(|&v| !local_ok(g, v, Part::Class(k + 1), &self.classes, self.bracket))
            {
                return Err(KnError::Condition { condition: 2, v });
            }
        }
        if let Some((u, _)) = g.edge_within(self.bracket) {
            return Err(KnError::Condition { condition: 3, v: u });
        }
        if let Some(v) = self
            .v0
            .iter()
            .find(|&v| !local_ok(g, v, Part::Zero, &self.classes, self.bracket))
        {
            return Err(KnError::Condition { condition: 4, v });
        }
        Ok(())
    }

    /// The clique order n.
    pub fn clique_order(&self) -> usize {
        self.n
    }

    pub fn v0(&self) -> VertexSet {
        self.v0
    }

    /// Vₖ for k in 1..=n.
    pub fn class(&self, k: usize) -> VertexSet {
        self.classes[k - 1]
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    /// V₍ₙ₎.
    pub fn bracket(&self) -> VertexSet {
        self.bracket
    }

    pub fn part_of(&self, v: usize) -> Option<Part> {
        if self.v0.contains(v) {
            Some(Part::Zero)
        } else if self.bracket.contains(v) {
            Some(Part::Bracket)
        } else {
            self.classes
                .iter()
                .position(|c| c.contains(v))
                .map(|k| Part::Class(k + 1))
        }
    }

    /// n·|V₍ₙ₎| + Σ|Vₖ|, the size of the corresponding independent set.
    pub fn weight(&self) -> usize {
        self.n * self.bracket.len() + self.classes.iter().map(|c| c.len()).sum::<usize>()
    }

    /// The partition with class Vₖ moved to label `perm[k - 1] + 1`.
    pub fn relabeled(&self, perm: &[usize]) -> WeakPartition {
        assert_eq!(perm.len(), self.n, "permutation of the class labels");
        let mut classes = vec![VertexSet::EMPTY; self.n];
        for (k, &c) in self.classes.iter().enumerate() {
            classes[perm[k]] = c;
        }
        WeakPartition {
            classes,
            ..self.clone()
        }
    }
}

impl fmt::Display for WeakPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V0={}", self.v0)?;
        for (k, c) in self.classes.iter().enumerate() {
            if !c.is_empty() {
                write!(f, " V{}={}", k + 1, c)?;
            }
        }
        write!(f, " V[{}]={}", self.n, self.bracket)
    }
}

/// Validates `p` against `g` and returns its weight.
pub fn partition_weight(g: &Graph, p: &WeakPartition) -> Result<usize, KnError> {
    p.validate(g)?;
    Ok(p.weight())
}

/// The maximal independent set of G×Kₙ described by `p`, indexed as in
/// [`direct_product`] with Kₙ on `0..n`.
pub fn mis_from_partition(g: &Graph, p: &WeakPartition) -> Result<VertexSet, KnError> {
    p.validate(g)?;
    let n = p.n;
    if g.order() * n > crate::vset::MAX_VERTICES {
        return Err(ProductError::TooLarge {
            n_g: g.order(),
            n_h: n,
        }
        .into());
    }
    let mut out = VertexSet::EMPTY;
    for (k, c) in p.classes.iter().enumerate() {
        for v in *c {
            out.insert(v * n + k);
        }
    }
    for v in p.bracket {
        for k in 0..n {
            out.insert(v * n + k);
        }
    }
    Ok(out)
}

/// Reads the weak partition off a maximal independent set of G×Kₙ.
pub fn partition_from_mis(g: &Graph, n: usize, i: VertexSet) -> Result<WeakPartition, KnError> {
    check_clique(n)?;
    if g.order() * n > crate::vset::MAX_VERTICES {
        return Err(ProductError::TooLarge {
            n_g: g.order(),
            n_h: n,
        }
        .into());
    }
    let p = direct_product(g, &complete_graph(n))?;
    if !i.is_subset(p.graph.vertices()) || !p.graph.is_maximal_independent(i) {
        return Err(KnError::NotMaximalIndependent { n });
    }
    let mut parts = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        let layer = i & p.layer_h(v);
        parts.push(match layer.len() {
            0 => Part::Zero,
            1 => Part::Class(p.coords(layer.min().expect("nonempty")).1 + 1),
            s if s == n => Part::Bracket,
            size => return Err(KnError::LayerSize { g: v, size }),
        });
    }
    WeakPartition::from_parts(g, n, &parts)
}

// ---------------------------------------------------------------------------
// Partition search
// ---------------------------------------------------------------------------

struct Search<'a, F> {
    g: &'a Graph,
    n: usize,
    reduced: bool,
    parts: Vec<Part>,
    classes: Vec<VertexSet>,
    bracket: VertexSet,
    /// Vertices whose closed neighborhood is fully assigned once vertex
    /// `v` is, i.e. max N[u] == v.
    finish: Vec<Vec<usize>>,
    nodes: u64,
    budget: Option<u64>,
    visit: F,
}

/// What the visitor wants after seeing a leaf or a prefix weight.
trait Visitor {
    /// Whether a subtree with current weight `w` and `rest` unassigned
    /// vertices can still matter.
    fn keep(&self, w: usize, rest: usize, n: usize) -> bool;
    fn leaf(&mut self, p: WeakPartition);
}

impl<'a, F: Visitor> Search<'a, F> {
    fn new(g: &'a Graph, n: usize, reduced: bool, budget: Option<u64>, visit: F) -> Self {
        let order = g.order();
        let mut finish = vec![Vec::new(); order];
        for u in 0..order {
            let last = g.neighbors(u).iter().last().map_or(u, |m| m.max(u));
            finish[last].push(u);
        }
        Search {
            g,
            n,
            reduced,
            parts: vec![Part::Zero; order],
            classes: vec![VertexSet::EMPTY; n],
            bracket: VertexSet::EMPTY,
            finish,
            nodes: 0,
            budget,
            visit,
        }
    }

    fn run(&mut self, v: usize, weight: usize, used: usize) -> Result<(), KnError> {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                return Err(KnError::BudgetExceeded { budget: b });
            }
        }
        let order = self.g.order();
        if v == order {
            let p = WeakPartition {
                n: self.n,
                v0: self.g.vertices() - self.classes.iter().fold(self.bracket, |a, &c| a | c),
                classes: self.classes.clone(),
                bracket: self.bracket,
            };
            self.visit.leaf(p);
            return Ok(());
        }
        if !self.visit.keep(weight, order - v, self.n) {
            return Ok(());
        }
        let nv = self.g.neighbors(v);
        let nonzero = self.classes.iter().fold(self.bracket, |a, &c| a | c);

        let top = if self.reduced {
            (used + 1).min(self.n)
        } else {
            self.n
        };
        let mut options = vec![Part::Zero];
        options.extend((1..=top).map(Part::Class));
        options.push(Part::Bracket);
        for part in options {
            let (ok, dw) = match part {
                Part::Zero => (true, 0),
                Part::Class(k) => (!nv.intersects(nonzero - self.classes[k - 1]), 1),
                Part::Bracket => (!nv.intersects(nonzero), self.n),
            };
            if !ok {
                continue;
            }
            self.assign(v, part);
            let done_ok = self.finish[v]
                .iter()
                .all(|&u| local_ok(self.g, u, self.parts[u], &self.classes, self.bracket));
            let r = if done_ok {
                let used2 = match part {
                    Part::Class(k) => used.max(k),
                    _ => used,
                };
                self.run(v + 1, weight + dw, used2)
            } else {
                Ok(())
            };
            self.unassign(v, part);
            r?;
        }
        Ok(())
    }

    fn assign(&mut self, v: usize, part: Part) {
        self.parts[v] = part;
        match part {
            Part::Class(k) => self.classes[k - 1].insert(v),
            Part::Bracket => self.bracket.insert(v),
            Part::Zero => {}
        }
    }

    fn unassign(&mut self, v: usize, part: Part) {
        self.parts[v] = Part::Zero;
        match part {
            Part::Class(k) => self.classes[k - 1].remove(v),
            Part::Bracket => self.bracket.remove(v),
            Part::Zero => {}
        }
    }
}

struct Collect(Vec<WeakPartition>);

impl Visitor for Collect {
    fn keep(&self, _: usize, _: usize, _: usize) -> bool {
        true
    }
    fn leaf(&mut self, p: WeakPartition) {
        self.0.push(p);
    }
}

#[derive(Default)]
struct Extremes {
    min: Option<WeakPartition>,
    max: Option<WeakPartition>,
}

impl Visitor for Extremes {
    fn keep(&self, w: usize, rest: usize, n: usize) -> bool {
        let (Some(lo), Some(hi)) = (&self.min, &self.max) else {
            return true;
        };
        w < lo.weight() || w + n * rest > hi.weight()
    }
    fn leaf(&mut self, p: WeakPartition) {
        let w = p.weight();
        if self.min.as_ref().is_none_or(|m| w < m.weight()) {
            self.min = Some(p.clone());
        }
        if self.max.as_ref().is_none_or(|m| w > m.weight()) {
            self.max = Some(p);
        }
    }
}

/// Every valid weak partition of V(G) for Kₙ. With `reduced`, only one
/// partition per relabeling of the classes is produced: nonempty classes
/// take the labels 1, 2, … in order of their least vertex.
pub fn valid_partitions(g: &Graph, n: usize, reduced: bool) -> Result<Vec<WeakPartition>, KnError> {
    check_clique(n)?;
    let mut s = Search::new(g, n, reduced, None, Collect(Vec::new()));
    s.run(0, 0, 0)?;
    Ok(s.visit.0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnReport {
    pub n: usize,
    #[serde(rename = "i")]
    pub i_value: usize,
    #[serde(rename = "alpha")]
    pub alpha_value: usize,
    pub argmin: WeakPartition,
    pub argmax: WeakPartition,
    /// Search nodes visited.
    pub nodes: u64,
}

impl KnReport {
    pub fn well_covered(&self) -> bool {
        self.i_value == self.alpha_value
    }
}

/// i(G×Kₙ) and α(G×Kₙ) as the least and greatest partition weights.
pub fn kn_alpha_i(g: &Graph, n: usize) -> Result<KnReport, KnError> {
    kn_alpha_i_with_budget(g, n, None)
}

/// As [`kn_alpha_i`], giving up after `budget` search nodes.
pub fn kn_alpha_i_with_budget(
    g: &Graph,
    n: usize,
    budget: Option<u64>,
) -> Result<KnReport, KnError> {
    check_clique(n)?;
    let mut s = Search::new(g, n, true, budget, Extremes::default());
    s.run(0, 0, 0)?;
    let nodes = s.nodes;
    // V₍ₙ₎ a maximal independent set of G with everything else in V₀ is
    // always valid, so both extremes exist.
    let (Some(argmin), Some(argmax)) = (s.visit.min, s.visit.max) else {
        unreachable!("some weak partition is always valid")
    };
    Ok(KnReport {
        n,
        i_value: argmin.weight(),
        alpha_value: argmax.weight(),
        argmin,
        argmax,
        nodes,
    })
}

// ---------------------------------------------------------------------------
// Claim checks
// ---------------------------------------------------------------------------

fn complete_graph(n: usize) -> Graph {
    let e: Vec<_> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    Graph::from_edge_list(n, &e).expect("small complete graph")
}

/// Every maximal independent set of G×Kₙ meets each layer {g}×[n] in 0, 1
/// or n vertices.
pub fn layer_cardinality_check(g: &Graph, n: usize) -> Result<ClaimVerdict, KnError> {
    const ID: &str = "layer_sizes";
    check_clique(n)?;
    let p = direct_product(g, &complete_graph(n))?;
    let inst = describe_with_clique(g, n);
    for i in maximal_independent_sets(&p.graph) {
        for v in 0..g.order() {
            let size = (i & p.layer_h(v)).len();
            if size != 0 && size != 1 && size != n {
                return Ok(ClaimVerdict::counterexample(
                    ID,
                    inst,
                    json!({ "mis": i, "vertex": v, "layer_intersection": size }),
                ));
            }
        }
    }
    Ok(ClaimVerdict::holds(ID, inst))
}

/// If G×Kₙ is well-covered then G−N[x] has an isolated vertex whenever
/// deg(x) ≥ n. An empty G−N[x] has no isolated vertex.
pub fn necessary_condition_check(g: &Graph, n: usize) -> Result<ClaimVerdict, KnError> {
    const ID: &str = "kn_necessary";
    let report = kn_alpha_i(g, n)?;
    let inst = describe_with_clique(g, n);
    if !report.well_covered() {
        return Ok(ClaimVerdict::vacuous(
            ID,
            inst,
            "product is not well-covered",
        ));
    }
    for x in (0..g.order()).filter(|&x| g.degree(x) >= n) {
        let rest = g.delete_closed_neighborhood(VertexSet::singleton(x));
        if rest.graph.isolated_vertices().is_empty() {
            return Ok(ClaimVerdict::counterexample(
                ID,
                inst,
                json!({ "x": x, "degree": g.degree(x), "i": report.i_value, "alpha": report.alpha_value }),
            ));
        }
    }
    Ok(ClaimVerdict::holds(ID, inst))
}

/// For a bipartite well-covered B with δ(B) ≥ 2, every B−N[x] has an
/// isolated vertex.
pub fn bipartite_isolation_check(b: &Graph) -> ClaimVerdict {
    const ID: &str = "bipartite_isolation";
    let inst = describe_graph(b);
    if b.order() == 0 || !b.is_bipartite() {
        return ClaimVerdict::vacuous(ID, inst, "not bipartite");
    }
    if b.min_degree() < 2 {
        return ClaimVerdict::vacuous(ID, inst, "minimum degree below 2");
    }
    if !is_well_covered(b) {
        return ClaimVerdict::vacuous(ID, inst, "not well-covered");
    }
    for x in 0..b.order() {
        let rest = b.delete_closed_neighborhood(VertexSet::singleton(x));
        if rest.graph.isolated_vertices().is_empty() {
            return ClaimVerdict::counterexample(ID, inst, json!({ "x": x }));
        }
    }
    ClaimVerdict::holds(ID, inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, h_family, path};
    use crate::independence::{alpha, i_number};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn weights_of_examples() {
        let k3 = complete(3).unwrap();
        let e = VertexSet::EMPTY;
        let p = WeakPartition::new(&k3, 3, set(&[1, 2]), vec![e; 3], set(&[0])).unwrap();
        assert_eq!(partition_weight(&k3, &p).unwrap(), 3);
        let i = mis_from_partition(&k3, &p).unwrap();
        assert_eq!(i, set(&[0, 1, 2]));

        let h = h_family(4, 2).unwrap();
        let z: VertexSet = (8..12).collect();
        let p = WeakPartition::new(&h, 3, z.complement(12), vec![e; 3], z).unwrap();
        assert_eq!(p.weight(), 12);
        assert_eq!(mis_from_partition(&h, &p).unwrap().len(), 12);

        let c5 = cycle(5).unwrap();
        let p = WeakPartition::new(&c5, 2, e, vec![c5.vertices(), e], e).unwrap();
        assert_eq!(p.weight(), 5);
    }

    #[test]
    fn invalid_partitions_name_the_condition() {
        let p3 = path(3).unwrap();
        let e = VertexSet::EMPTY;
        let cond = |r: Result<WeakPartition, KnError>| match r {
            Err(KnError::Condition { condition, .. }) => condition,
            other => panic!("expected a condition failure, got {other:?}"),
        };
        // V1={0}, V2={1,2}: edge 0-1 crosses classes
        assert_eq!(
            cond(WeakPartition::new(
                &p3,
                2,
                e,
                vec![set(&[0]), set(&[1, 2])],
                e
            )),
            1
        );
        // V1={0,2}, V0={1}: 0 isolated in G[V1]
        assert_eq!(
            cond(WeakPartition::new(
                &p3,
                2,
                set(&[1]),
                vec![set(&[0, 2]), e],
                e
            )),
            2
        );
        // V[2]={0,1}
        assert_eq!(
            cond(WeakPartition::new(
                &p3,
                2,
                set(&[2]),
                vec![e, e],
                set(&[0, 1])
            )),
            3
        );
        // V0={0}, V1={1,2}: 0 only sees V1
        assert_eq!(
            cond(WeakPartition::new(
                &p3,
                2,
                set(&[0]),
                vec![set(&[1, 2]), e],
                e
            )),
            4
        );
        assert!(matches!(
            WeakPartition::new(&p3, 2, set(&[0]), vec![e, e], set(&[0, 2])),
            Err(KnError::NotWeakPartition { v: 0 })
        ));
        assert!(matches!(
            WeakPartition::new(&p3, 2, set(&[0]), vec![e, e], set(&[2])),
            Err(KnError::NotWeakPartition { v: 1 })
        ));
        assert!(matches!(
            WeakPartition::new(&p3, 1, e, vec![e], e),
            Err(KnError::CliqueTooSmall { n: 1 })
        ));
    }

    #[test]
    fn report_examples() {
        let r = kn_alpha_i(&h_family(4, 2).unwrap(), 3).unwrap();
        assert_eq!((r.i_value, r.alpha_value), (12, 12));
        let r = kn_alpha_i(&complete(3).unwrap(), 3).unwrap();
        assert_eq!((r.i_value, r.alpha_value), (3, 3));
        let p3 = path(3).unwrap();
        let r = kn_alpha_i(&p3, 2).unwrap();
        let prod = direct_product(&p3, &complete(2).unwrap()).unwrap();
        assert_eq!(r.alpha_value, 4);
        assert_eq!(r.alpha_value, alpha(&prod.graph));
        assert_eq!(r.i_value, i_number(&prod.graph));
        assert!(r.i_value < r.alpha_value);
        assert_eq!(r.argmin.weight(), r.i_value);
        assert_eq!(r.argmax.weight(), r.alpha_value);
    }

    #[test]
    fn round_trip_on_k2_times_k2() {
        let k2 = complete(2).unwrap();
        let p = direct_product(&k2, &k2).unwrap();
        let mut count = 0;
        for i in maximal_independent_sets(&p.graph) {
            let part = partition_from_mis(&k2, 2, i).unwrap();
            assert_eq!(mis_from_partition(&k2, &part).unwrap(), i);
            count += 1;
        }
        assert_eq!(count, valid_partitions(&k2, 2, false).unwrap().len());
        let e = VertexSet::EMPTY;
        let part = WeakPartition::new(&k2, 2, e, vec![e, set(&[0, 1])], e).unwrap();
        assert_eq!(
            mis_from_partition(&k2, &part).unwrap(),
            set(&[p.index(0, 1), p.index(1, 1)])
        );
    }

    #[test]
    fn partition_from_non_maximal_is_rejected() {
        let k3 = complete(3).unwrap();
        assert_eq!(
            partition_from_mis(&k3, 3, set(&[0])),
            Err(KnError::NotMaximalIndependent { n: 3 })
        );
    }

    #[test]
    fn relabeling_keeps_weight() {
        let c6 = cycle(6).unwrap();
        for p in valid_partitions(&c6, 3, false).unwrap() {
            let q = p.relabeled(&[2, 0, 1]);
            assert_eq!(partition_weight(&c6, &q).unwrap(), p.weight());
        }
    }

    #[test]
    fn reduced_enumeration_covers_all_weights() {
        let g = path(4).unwrap();
        let full = valid_partitions(&g, 3, false).unwrap();
        let reduced = valid_partitions(&g, 3, true).unwrap();
        assert!(reduced.len() < full.len());
        let weights = |ps: &[WeakPartition]| {
            let mut w: Vec<usize> = ps.iter().map(|p| p.weight()).collect();
            w.sort();
            w.dedup();
            w
        };
        assert_eq!(weights(&full), weights(&reduced));
    }

    #[test]
    fn budget_is_enforced() {
        let h = h_family(4, 2).unwrap();
        assert_eq!(
            kn_alpha_i_with_budget(&h, 3, Some(5)),
            Err(KnError::BudgetExceeded { budget: 5 })
        );
    }

    #[test]
    fn claim_checks() {
        assert!(layer_cardinality_check(&cycle(5).unwrap(), 3)
            .unwrap()
            .is_holds());
        assert!(layer_cardinality_check(&complete(3).unwrap(), 2)
            .unwrap()
            .is_holds());
        assert!(layer_cardinality_check(&h_family(2, 1).unwrap(), 2)
            .unwrap()
            .is_holds());

        assert!(necessary_condition_check(&h_family(4, 2).unwrap(), 3)
            .unwrap()
            .is_holds());
        assert!(necessary_condition_check(&complete(3).unwrap(), 3)
            .unwrap()
            .is_holds());
        assert!(necessary_condition_check(&cycle(6).unwrap(), 2)
            .unwrap()
            .is_vacuous());

        assert!(bipartite_isolation_check(&cycle(4).unwrap()).is_holds());
        let k33 = crate::families::complete_multipartite(&[3, 3]).unwrap();
        assert!(bipartite_isolation_check(&k33).is_holds());
        assert!(bipartite_isolation_check(&cycle(6).unwrap()).is_vacuous());
        assert!(bipartite_isolation_check(&cycle(5).unwrap()).is_vacuous());
    }

    #[test]
    fn display() {
        let k3 = complete(3).unwrap();
        let e = VertexSet::EMPTY;
        let p = WeakPartition::new(&k3, 3, set(&[1, 2]), vec![e; 3], set(&[0])).unwrap();
        assert_eq!(p.to_string(), "V0={1,2} V[3]={0}");
        let j = serde_json::to_value(&p).unwrap();
        assert_eq!(j["V0"], json!([1, 2]));
        assert_eq!(j["bracket"], json!([0]));
    }
}
