//! Maximal independent sets and the invariants built on them: α, i,
//! well-coveredness, isolatable vertices, Berge violations, and perfect
//! matchings with Favaron's Property (P).

use std::ops::ControlFlow;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::graph::Graph;
use crate::verdict::{describe_graph, ClaimVerdict};
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndependenceError {
    #[error("matching does not cover vertex {v}")]
    NotPerfect { v: usize },
    #[error("({u},{v}) is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },
    #[error("vertex {v} is matched twice")]
    NotDisjoint { v: usize },
}

#[inline]
fn closed_masks(g: &Graph) -> Vec<u64> {
    g.adjacency()
        .iter()
        .enumerate()
        .map(|(v, &a)| a | (1 << v))
        .collect()
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Iterator over every maximal independent set of a graph, each exactly once.
///
/// This is Bron–Kerbosch run on the complement, with masks `R` (chosen),
/// `P` (still addable), `X` (addable but already branched on). At each node
/// the pivot is the undominated vertex `u ∈ P ∪ X` with the fewest addable
/// vertices in `N[u]`, and the branches are exactly those vertices: any
/// maximal extension must dominate `u`. A set is emitted only when `P` and
/// `X` are both empty, which is the inclusion test that rules out
/// duplicates and non-maximal sets.
pub struct MaximalIndependentSets<'g> {
    closed: Vec<u64>,
    stack: Vec<Frame>,
    emit_empty: bool,
    _graph: &'g Graph,
}

#[derive(Clone, Copy)]
struct Frame {
    r: u64,
    p: u64,
    x: u64,
    todo: u64,
}

impl<'g> MaximalIndependentSets<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let closed = closed_masks(g);
        let mut it = MaximalIndependentSets {
            closed,
            stack: Vec::with_capacity(g.order() + 1),
            emit_empty: g.order() == 0,
            _graph: g,
        };
        if g.order() > 0 {
            let f = it.frame(0, g.vertices().bits(), 0);
            it.stack.push(f);
        }
        it
    }

    fn frame(&self, r: u64, p: u64, x: u64) -> Frame {
        let mut best = u32::MAX;
        let mut todo = 0;
        let mut rest = p | x;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let cand = p & self.closed[u];
            let c = cand.count_ones();
            if c < best {
                best = c;
                todo = cand;
                if c <= 1 {
                    break;
                }
            }
        }
        Frame { r, p, x, todo }
    }
}

impl Iterator for MaximalIndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.emit_empty {
            self.emit_empty = false;
            return Some(VertexSet::EMPTY);
        }
        while let Some(top) = self.stack.last_mut() {
            if top.todo == 0 {
                self.stack.pop();
                continue;
            }
            let v = top.todo.trailing_zeros() as usize;
            top.todo &= top.todo - 1;
            let bit = 1u64 << v;
            let nv = self.closed[v];
            let (r, p, x) = (top.r | bit, top.p & !nv, top.x & !nv);
            top.p &= !bit;
            top.x |= bit;
            if p == 0 {
                if x == 0 {
                    return Some(VertexSet::from_bits(r));
                }
                continue;
            }
            let f = self.frame(r, p, x);
            if f.todo != 0 {
                self.stack.push(f);
            }
        }
        None
    }
}

pub fn maximal_independent_sets(g: &Graph) -> MaximalIndependentSets<'_> {
    MaximalIndependentSets::new(g)
}

/// Enumerates every independent set (not only maximal ones), in a fixed
/// depth-first order, until `f` breaks.
pub fn for_each_independent_set<F>(g: &Graph, mut f: F)
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    fn rec<F: FnMut(VertexSet) -> ControlFlow<()>>(
        closed: &[u64],
        cand: u64,
        s: u64,
        f: &mut F,
    ) -> ControlFlow<()> {
        f(VertexSet::from_bits(s))?;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            rec(closed, rest & !closed[v], s | (1 << v), f)?;
        }
        ControlFlow::Continue(())
    }
    let closed = closed_masks(g);
    let _ = rec(&closed, g.vertices().bits(), 0, &mut f);
}

// ---------------------------------------------------------------------------
// α and i by branch and bound
// ---------------------------------------------------------------------------

/// Greedy clique cover size of `p`; an upper bound on α(G[p]).
fn clique_cover_bound(adj: &[u64], mut p: u64) -> usize {
    let mut count = 0;
    while p != 0 {
        let u = p.trailing_zeros() as usize;
        let mut clique = 1u64 << u;
        let mut cand = p & adj[u];
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            clique |= 1 << w;
            cand &= adj[w];
        }
        p &= !clique;
        count += 1;
    }
    count
}

fn max_is_rec(adj: &[u64], closed: &[u64], mut p: u64, mut r: u64, best: &mut (usize, u64)) {
    // Vertices of degree ≤ 1 in G[p] belong to some maximum independent set.
    loop {
        let mut forced = None;
        let mut rest = p;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & p).count_ones() <= 1 {
                forced = Some(v);
                break;
            }
        }
        match forced {
            Some(v) => {
                r |= 1 << v;
                p &= !closed[v];
            }
            None => break,
        }
    }
    let size = r.count_ones() as usize;
    if p == 0 {
        if size > best.0 {
            *best = (size, r);
        }
        return;
    }
    if size + p.count_ones() as usize <= best.0 || size + clique_cover_bound(adj, p) <= best.0 {
        return;
    }
    let mut v = 0;
    let mut deg = 0;
    let mut rest = p;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[u] & p).count_ones();
        if d > deg {
            deg = d;
            v = u;
        }
    }
    max_is_rec(adj, closed, p & !closed[v], r | (1 << v), best);
    max_is_rec(adj, closed, p & !(1 << v), r, best);
}

/// A maximum independent set (hence also maximal).
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let closed = closed_masks(g);
    let mut best = (0, 0);
    max_is_rec(g.adjacency(), &closed, g.vertices().bits(), 0, &mut best);
    VertexSet::from_bits(best.1)
}

/// α(G).
pub fn alpha(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

fn min_mis_rec(closed: &[u64], r: u64, mut p: u64, mut x: u64, best: &mut (usize, u64)) {
    let size = r.count_ones() as usize;
    let undominated = p | x;
    if undominated == 0 {
        if size < best.0 {
            *best = (size, r);
        }
        return;
    }
    if p == 0 || size + 1 >= best.0 {
        return;
    }
    let mut max_cover = 0;
    let mut pivot_todo = 0;
    let mut pivot_count = u32::MAX;
    let mut rest = undominated;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let cand = p & closed[u];
        if cand == 0 {
            // u can no longer be dominated
            return;
        }
        if p >> u & 1 == 1 {
            max_cover = max_cover.max((closed[u] & undominated).count_ones() as usize);
        }
        if cand.count_ones() < pivot_count {
            pivot_count = cand.count_ones();
            pivot_todo = cand;
        }
    }
    let lower = (undominated.count_ones() as usize).div_ceil(max_cover);
    if size + lower >= best.0 {
        return;
    }
    let mut todo = pivot_todo;
    while todo != 0 {
        let v = todo.trailing_zeros() as usize;
        todo &= todo - 1;
        let bit = 1u64 << v;
        min_mis_rec(closed, r | bit, p & !closed[v], x & !closed[v], best);
        p &= !bit;
        x |= bit;
    }
}

/// A maximal independent set of minimum size.
pub fn minimum_maximal_independent_set(g: &Graph) -> VertexSet {
    let closed = closed_masks(g);
    let mut best = (usize::MAX, 0);
    min_mis_rec(&closed, 0, g.vertices().bits(), 0, &mut best);
    VertexSet::from_bits(best.1)
}

/// i(G), the independent domination number.
pub fn i_number(g: &Graph) -> usize {
    minimum_maximal_independent_set(g).len()
}

// ---------------------------------------------------------------------------
// Well-coveredness
// ---------------------------------------------------------------------------

/// Whether all maximal independent sets have one size. Enumeration stops
/// at the first pair of distinct sizes.
pub fn is_well_covered(g: &Graph) -> bool {
    two_sizes(g).is_none()
}

/// Two maximal independent sets of different sizes, smaller first, if
/// the graph is not well-covered.
pub fn two_sizes(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut it = maximal_independent_sets(g);
    let first = it.next()?;
    it.find(|s| s.len() != first.len()).map(|s| {
        if s.len() < first.len() {
            (s, first)
        } else {
            (first, s)
        }
    })
}

/// Well-covered, no isolated vertices, and 2α = n.
pub fn is_very_well_covered(g: &Graph) -> bool {
    g.isolated_vertices().is_empty() && is_well_covered(g) && 2 * alpha(g) == g.order()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WellCoveredReport {
    pub n: usize,
    pub alpha: usize,
    #[serde(rename = "i")]
    pub i_number: usize,
    pub well_covered: bool,
    pub very_well_covered: bool,
    pub witness_min: VertexSet,
    pub witness_max: VertexSet,
}

/// Exact α and i with witnesses.
pub fn well_covered_report(g: &Graph) -> WellCoveredReport {
    let witness_max = maximum_independent_set(g);
    let witness_min = minimum_maximal_independent_set(g);
    let alpha = witness_max.len();
    let i_number = witness_min.len();
    let well_covered = alpha == i_number;
    WellCoveredReport {
        n: g.order(),
        alpha,
        i_number,
        well_covered,
        very_well_covered: well_covered
            && g.isolated_vertices().is_empty()
            && 2 * alpha == g.order(),
        witness_min,
        witness_max,
    }
}

// ---------------------------------------------------------------------------
// Isolatable vertices and Berge's bound
// ---------------------------------------------------------------------------

/// Whether some independent `I` disjoint from N[x] leaves `x` isolated in
/// G − N[I], i.e. N(x) ⊆ N(I). A degree-0 vertex qualifies via I = ∅.
pub fn is_isolatable(g: &Graph, x: usize) -> bool {
    isolating_set(g, x).is_some()
}

/// An independent set that isolates `x`, if one exists. Maximal
/// independent sets of G − N[x] suffice, since enlarging `I` only grows N(I).
pub fn isolating_set(g: &Graph, x: usize) -> Option<VertexSet> {
    let nx = g.neighbors(x);
    if nx.is_empty() {
        return Some(VertexSet::EMPTY);
    }
    let rest = g.delete_closed_neighborhood(VertexSet::singleton(x));
    maximal_independent_sets(&rest.graph)
        .map(|s| rest.to_original(s))
        .find(|&s| nx.is_subset(g.neighborhood(s)))
}

pub fn isolatable_vertices(g: &Graph) -> VertexSet {
    (0..g.order()).filter(|&x| is_isolatable(g, x)).collect()
}

/// An independent `S` with |S| > |N(S)|, choosing the largest excess
/// |S| − |N(S)| (first found on ties).
pub fn berge_violation(g: &Graph) -> Option<VertexSet> {
    let mut best: Option<(usize, VertexSet)> = None;
    for_each_independent_set(g, |s| {
        let ns = g.neighborhood(s).len();
        if s.len() > ns {
            let excess = s.len() - ns;
            if best.is_none_or(|(b, _)| excess > b) {
                best = Some((excess, s));
            }
        }
        ControlFlow::Continue(())
    });
    best.map(|(_, s)| s)
}

// ---------------------------------------------------------------------------
// Matchings and Property (P)
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    partner: Vec<Option<usize>>,
}

impl Matching {
    /// Validates that the edges exist in `g` and are pairwise disjoint.
    pub fn new(g: &Graph, edges: Vec<(usize, usize)>) -> Result<Matching, IndependenceError> {
        let mut partner = vec![None; g.order()];
        for &(u, v) in &edges {
            if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
                return Err(IndependenceError::NotAnEdge { u, v });
            }
            for w in [u, v] {
                if partner[w].is_some() {
                    return Err(IndependenceError::NotDisjoint { v: w });
                }
            }
            partner[u] = Some(v);
            partner[v] = Some(u);
        }
        Ok(Matching {
            n: g.order(),
            edges,
            partner,
        })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// M(u).
    pub fn partner(&self, u: usize) -> Option<usize> {
        self.partner[u]
    }

    pub fn is_perfect(&self) -> bool {
        self.partner.iter().all(Option::is_some)
    }

    fn first_unmatched(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.partner[v].is_none())
    }
}

/// All perfect matchings, found by pairing the lowest uncovered vertex
/// with each of its uncovered neighbors in increasing order.
pub fn perfect_matchings(g: &Graph) -> Vec<Matching> {
    fn rec(
        g: &Graph,
        left: VertexSet,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let Some(u) = left.min() else {
            out.push(cur.clone());
            return;
        };
        for v in g.neighbors(u) & left {
            cur.push((u, v));
            rec(g, left.without(u).without(v), cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    if g.order().is_multiple_of(2) {
        rec(g, g.vertices(), &mut Vec::new(), &mut raw);
    }
    raw.into_iter()
        .map(|e| Matching::new(g, e).expect("enumerated matchings are valid"))
        .collect()
}

/// First `(x, y)` breaking Property (P): `y ∈ N(x)`, `y ≠ M(x)`, and either
/// `y ∈ N(M(x))` or some `z ∈ N(M(x))` is not adjacent to `y`.
pub fn property_p_violation(
    g: &Graph,
    m: &Matching,
) -> Result<Option<(usize, usize)>, IndependenceError> {
    if let Some(v) = m.first_unmatched() {
        return Err(IndependenceError::NotPerfect { v });
    }
    for x in 0..g.order() {
        let mx = m.partner(x).unwrap();
        let n_mx = g.neighbors(mx);
        for y in g.neighbors(x).without(mx) {
            let ok = !n_mx.contains(y) && n_mx.iter().all(|z| g.has_edge(y, z));
            if !ok {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

pub fn has_property_p(g: &Graph, m: &Matching) -> Result<bool, IndependenceError> {
    property_p_violation(g, m).map(|v| v.is_none())
}

/// The three statements of Favaron's characterization, evaluated directly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FavaronStatements {
    pub very_well_covered: bool,
    pub some_matching_has_p: bool,
    pub all_matchings_have_p: bool,
    pub perfect_matchings: usize,
}

pub fn favaron_statements(g: &Graph) -> FavaronStatements {
    let ms = perfect_matchings(g);
    let with_p = ms
        .iter()
        .filter(|m| has_property_p(g, m).expect("perfect by construction"))
        .count();
    FavaronStatements {
        very_well_covered: is_very_well_covered(g),
        some_matching_has_p: with_p > 0,
        all_matchings_have_p: !ms.is_empty() && with_p == ms.len(),
        perfect_matchings: ms.len(),
    }
}

/// Holds iff (i) very well-covered, (ii) some perfect matching has (P), and
/// (iii) a perfect matching exists and all have (P) agree.
pub fn favaron_equivalence_verdict(g: &Graph) -> ClaimVerdict {
    let s = favaron_statements(g);
    let inst = describe_graph(g);
    let w = json!(s);
    if s.very_well_covered == s.some_matching_has_p
        && s.some_matching_has_p == s.all_matchings_have_p
    {
        ClaimVerdict::holds("favaron", inst).with_witness(w)
    } else {
        let bad: Vec<_> = perfect_matchings(g)
            .into_iter()
            .filter_map(|m| {
                property_p_violation(g, &m)
                    .unwrap()
                    .map(|xy| json!({"matching": m.edges(), "violation": xy}))
            })
            .take(1)
            .collect();
        ClaimVerdict::counterexample(
            "favaron",
            inst,
            json!({"statements": s, "failing_matching": bad}),
        )
    }
}
