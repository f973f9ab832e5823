//! Executable versions of the claims about well-covered direct products,
//! with a parallel runner over corpora of instances.
//!
//! Each claim has a hypothesis and a conclusion. A verdict is `vacuous` when
//! the hypothesis fails, `holds` when both are true, and `counterexample`
//! (with a witness) when the hypothesis holds and the conclusion does not.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::families::{
    as_balanced_multipartite, as_h_family, complete, complete_multipartite, corpus, cycle,
    h_family, isomorphism_classes, FamilyError,
};
use crate::formats::from_graph6;
use crate::graph::{Girth, Graph};
use crate::independence::{
    alpha, berge_violation, favaron_equivalence_verdict, for_each_independent_set,
    isolatable_vertices, maximal_independent_sets, maximum_independent_set,
    minimum_maximal_independent_set, two_sizes,
};
use crate::kn::{
    bipartite_isolation_check, kn_alpha_i, layer_cardinality_check, necessary_condition_check,
    KnError,
};
use crate::products::{direct_product, ProductError, ProductGraph};
use crate::verdict::{describe_graph, describe_pair, describe_with_clique, ClaimVerdict, Status};
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error("claim {id:?} is registered twice")]
    DuplicateClaim { id: String },
    #[error("claim {claim:?} takes a {expected} instance, got a {got} instance")]
    ShapeMismatch {
        claim: String,
        expected: Shape,
        got: Shape,
    },
    #[error("bad instance descriptor {input:?}: {msg}")]
    Descriptor { input: String, msg: String },
    #[error("cannot build thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Kn(#[from] KnError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Single,
    Pair,
    WithClique,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Single => "single-graph",
            Shape::Pair => "graph-pair",
            Shape::WithClique => "graph-plus-n",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Single(Graph),
    Pair(Graph, Graph),
    /// A graph G together with the order n of the complete factor Kₙ.
    WithClique(Graph, usize),
}

impl Instance {
    pub fn shape(&self) -> Shape {
        match self {
            Instance::Single(_) => Shape::Single,
            Instance::Pair(..) => Shape::Pair,
            Instance::WithClique(..) => Shape::WithClique,
        }
    }

    /// `G=<graph6>`, `G=<graph6>,H=<graph6>` or `G=<graph6>,n=<int>`.
    pub fn describe(&self) -> String {
        match self {
            Instance::Single(g) => describe_graph(g),
            Instance::Pair(g, h) => describe_pair(g, h),
            Instance::WithClique(g, n) => describe_with_clique(g, *n),
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl FromStr for Instance {
    type Err = HarnessError;

    /// Parses the output of [`Instance::describe`].
    fn from_str(s: &str) -> Result<Instance, HarnessError> {
        let err = |msg: String| HarnessError::Descriptor {
            input: s.to_string(),
            msg,
        };
        let mut fields = BTreeMap::new();
        for part in s.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| err(format!("expected KEY=VALUE, got {part:?}")))?;
            if fields.insert(k.trim(), v.trim()).is_some() {
                return Err(err(format!("repeated key {k:?}")));
            }
        }
        let graph = |v: &str| from_graph6(v).map_err(|e| err(e.to_string()));
        let g = graph(fields.remove("G").ok_or_else(|| err("missing G".into()))?)?;
        let inst = match (fields.remove("H"), fields.remove("n")) {
            (None, None) => Instance::Single(g),
            (Some(h), None) => Instance::Pair(g, graph(h)?),
            (None, Some(n)) => {
                Instance::WithClique(g, n.parse().map_err(|_| err(format!("bad n {n:?}")))?)
            }
            (Some(_), Some(_)) => return Err(err("both H and n given".into())),
        };
        if let Some(k) = fields.keys().next() {
            return Err(err(format!("unknown key {k:?}")));
        }
        Ok(inst)
    }
}

// ---------------------------------------------------------------------------
// Per-instance context
// ---------------------------------------------------------------------------

/// One instance plus lazily computed quantities shared between claims.
pub struct Context<'a> {
    inst: &'a Instance,
    clique: OnceCell<Graph>,
    product: OnceCell<Result<ProductGraph, ProductError>>,
    product_wc: OnceCell<bool>,
    product_alpha: OnceCell<usize>,
    wc: [OnceCell<bool>; 2],
    isolatable: [OnceCell<VertexSet>; 2],
}

impl<'a> Context<'a> {
    pub fn new(inst: &'a Instance) -> Self {
        Context {
            inst,
            clique: OnceCell::new(),
            product: OnceCell::new(),
            product_wc: OnceCell::new(),
            product_alpha: OnceCell::new(),
            wc: Default::default(),
            isolatable: Default::default(),
        }
    }

    pub fn instance(&self) -> &Instance {
        self.inst
    }

    /// G, the first graph of any instance.
    pub fn g(&self) -> &Graph {
        match self.inst {
            Instance::Single(g) | Instance::Pair(g, _) | Instance::WithClique(g, _) => g,
        }
    }

    /// The second factor: H for pairs, Kₙ for graph-plus-n instances.
    pub fn h(&self) -> &Graph {
        match self.inst {
            Instance::Pair(_, h) => h,
            Instance::WithClique(_, n) => self.clique.get_or_init(|| {
                complete(*n).unwrap_or_else(|_| Graph::empty(0).expect("null graph"))
            }),
            Instance::Single(g) => g,
        }
    }

    pub fn clique_order(&self) -> Option<usize> {
        match self.inst {
            Instance::WithClique(_, n) => Some(*n),
            _ => None,
        }
    }

    /// G×H (G×G for a single graph, G×Kₙ for graph-plus-n).
    pub fn product(&self) -> Result<&ProductGraph, HarnessError> {
        self.product
            .get_or_init(|| direct_product(self.g(), self.h()))
            .as_ref()
            .map_err(|e| e.clone().into())
    }

    pub fn product_wc(&self) -> Result<bool, HarnessError> {
        if let Some(&b) = self.product_wc.get() {
            return Ok(b);
        }
        let b = two_sizes(&self.product()?.graph).is_none();
        Ok(*self.product_wc.get_or_init(|| b))
    }

    pub fn product_alpha(&self) -> Result<usize, HarnessError> {
        if let Some(&a) = self.product_alpha.get() {
            return Ok(a);
        }
        let a = alpha(&self.product()?.graph);
        Ok(*self.product_alpha.get_or_init(|| a))
    }

    pub fn product_vwc(&self) -> Result<bool, HarnessError> {
        let p = &self.product()?.graph;
        Ok(p.isolated_vertices().is_empty()
            && self.product_wc()?
            && 2 * self.product_alpha()? == p.order())
    }

    fn factor(&self, which: usize) -> &Graph {
        if which == 0 {
            self.g()
        } else {
            self.h()
        }
    }

    pub fn wc(&self, which: usize) -> bool {
        *self.wc[which].get_or_init(|| two_sizes(self.factor(which)).is_none())
    }

    pub fn vwc(&self, which: usize) -> bool {
        let f = self.factor(which);
        f.order() > 0
            && f.isolated_vertices().is_empty()
            && self.wc(which)
            && 2 * alpha(f) == f.order()
    }

    pub fn isolatable(&self, which: usize) -> VertexSet {
        *self.isolatable[which].get_or_init(|| isolatable_vertices(self.factor(which)))
    }
}

// ---------------------------------------------------------------------------
// Claims
// ---------------------------------------------------------------------------

/// Result of evaluating one claim, before the instance is attached.
#[derive(Clone, Debug, PartialEq)]
pub enum Check {
    Holds(Option<Value>),
    Vacuous(String),
    Fails(Value),
}

pub type CheckFn = fn(&Context) -> Result<Check, HarnessError>;

#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub shape: Shape,
    /// One-line statement of what is checked.
    pub statement: &'static str,
    pub check: CheckFn,
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("shape", &self.shape)
            .finish()
    }
}

fn vacuous(note: &str) -> Result<Check, HarnessError> {
    Ok(Check::Vacuous(note.to_string()))
}

fn from_verdict(v: ClaimVerdict) -> Check {
    match v.status {
        Status::Holds => Check::Holds(v.witness),
        Status::Vacuous => Check::Vacuous(v.note.unwrap_or_default()),
        Status::Counterexample => Check::Fails(v.witness.unwrap_or(Value::Null)),
    }
}

/// Runs `f` on every independent set of `g` until it reports a failure.
fn first_failure<F>(g: &Graph, mut f: F) -> Option<Value>
where
    F: FnMut(VertexSet) -> Option<Value>,
{
    let mut out = None;
    for_each_independent_set(g, |s| match f(s) {
        Some(w) => {
            out = Some(w);
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    });
    out
}

/// Both factors nontrivial and connected.
fn both_connected(ctx: &Context) -> bool {
    ctx.g().is_nontrivial_connected() && ctx.h().is_nontrivial_connected()
}

/// Shared hypothesis of the "well-covered but not very well-covered" claims.
fn wc_not_vwc_hypothesis(ctx: &Context) -> Result<Option<&'static str>, HarnessError> {
    if !both_connected(ctx) {
        return Ok(Some("a factor is trivial or disconnected"));
    }
    if !ctx.product_wc()? {
        return Ok(Some("product is not well-covered"));
    }
    if ctx.product_vwc()? {
        return Ok(Some("product is very well-covered"));
    }
    Ok(None)
}

fn inverse_image(ctx: &Context) -> Result<Check, HarnessError> {
    let (g, h) = (ctx.g(), ctx.h());
    if !h.isolated_vertices().is_empty() {
        return vacuous("H has an isolated vertex");
    }
    let p = ctx.product()?;
    for i in maximal_independent_sets(g) {
        let lifted = p.lift_independent(g, i)?;
        if !p.graph.is_maximal_independent(lifted) {
            return Ok(Check::Fails(json!({ "I": i, "lifted": lifted })));
        }
    }
    Ok(Check::Holds(None))
}

fn trivial_bounds(ctx: &Context) -> Result<Check, HarnessError> {
    let (g, h) = (ctx.g(), ctx.h());
    if !g.isolated_vertices().is_empty() || !h.isolated_vertices().is_empty() {
        return vacuous("a factor has an isolated vertex");
    }
    let p = &ctx.product()?.graph;
    let (ng, nh) = (g.order(), h.order());
    let lower = (alpha(g) * nh).max(alpha(h) * ng);
    let i_g = minimum_maximal_independent_set(g).len();
    let i_h = minimum_maximal_independent_set(h).len();
    let upper = (i_g * nh).min(i_h * ng);
    let a = ctx.product_alpha()?;
    let i_min = minimum_maximal_independent_set(p);
    let w = json!({
        "alpha_product": a, "alpha_lower_bound": lower,
        "i_product": i_min.len(), "i_upper_bound": upper, "i_witness": i_min,
    });
    if a >= lower && i_min.len() <= upper {
        Ok(Check::Holds(Some(w)))
    } else {
        let mut w = w;
        w["alpha_witness"] = json!(maximum_independent_set(p));
        Ok(Check::Fails(w))
    }
}

fn residual_wc(ctx: &Context) -> Result<Check, HarnessError> {
    let g = ctx.g();
    if !ctx.wc(0) {
        return vacuous("G is not well-covered");
    }
    let fail = first_failure(g, |i| {
        let rest = g.delete_closed_neighborhood(i);
        two_sizes(&rest.graph).map(
            |(a, b)| json!({ "I": i, "small": rest.to_original(a), "large": rest.to_original(b) }),
        )
    });
    Ok(fail.map_or(Check::Holds(None), Check::Fails))
}

fn clique_leftover(ctx: &Context) -> Result<Check, HarnessError> {
    let g = ctx.g();
    let a = alpha(g);
    if a == 0 {
        return vacuous("G has no vertices");
    }
    let fail = first_failure(g, |j| {
        if j.len() != a - 1 || g.is_maximal_independent(j) {
            return None;
        }
        let rest = g.delete_closed_neighborhood(j);
        missing_edge(&rest.graph)
            .map(|(u, v)| json!({ "J": j, "nonadjacent": [rest.original(u), rest.original(v)] }))
    });
    Ok(fail.map_or(Check::Holds(None), Check::Fails))
}

fn wc_direct(ctx: &Context) -> Result<Check, HarnessError> {
    // With an edgeless factor the product is edgeless, hence well-covered,
    // whatever the other factor is; the theorem needs edges on both sides.
    if ctx.g().size() == 0 || ctx.h().size() == 0 {
        return vacuous("a factor has no edges");
    }
    if !ctx.product_wc()? {
        return vacuous("product is not well-covered");
    }
    let (g, h) = (ctx.g(), ctx.h());
    let gp = g.split_isolated().1.graph;
    let hp = h.split_isolated().1.graph;
    let lhs = alpha(&gp) * hp.order();
    let rhs = alpha(&hp) * gp.order();
    let w = json!({
        "G_well_covered": ctx.wc(0), "H_well_covered": ctx.wc(1),
        "alpha_G+ * n_H+": lhs, "alpha_H+ * n_G+": rhs,
    });
    if ctx.wc(0) && ctx.wc(1) && lhs == rhs {
        Ok(Check::Holds(Some(w)))
    } else {
        Ok(Check::Fails(w))
    }
}

fn berge(ctx: &Context) -> Result<Check, HarnessError> {
    let g = ctx.g();
    if !g.isolated_vertices().is_empty() {
        return vacuous("G has an isolated vertex");
    }
    if !ctx.wc(0) {
        return vacuous("G is not well-covered");
    }
    Ok(match berge_violation(g) {
        Some(s) => Check::Fails(json!({ "S": s, "N(S)": g.neighborhood(s) })),
        None => Check::Holds(None),
    })
}

fn favaron(ctx: &Context) -> Result<Check, HarnessError> {
    Ok(from_verdict(favaron_equivalence_verdict(ctx.g())))
}

fn vwc_product(ctx: &Context) -> Result<Check, HarnessError> {
    let (g, h) = (ctx.g(), ctx.h());
    if !g.isolated_vertices().is_empty() || !h.isolated_vertices().is_empty() {
        return vacuous("a factor has an isolated vertex");
    }
    if !ctx.vwc(0) && !ctx.vwc(1) {
        return vacuous("neither factor is very well-covered");
    }
    let a = ctx.product_wc()?;
    let b = ctx.product_vwc()?;
    let c = ctx.vwc(0) && ctx.vwc(1);
    let w = json!({ "product_wc": a, "product_vwc": b, "both_vwc": c });
    Ok(if a == b && b == c {
        Check::Holds(Some(w))
    } else {
        Check::Fails(w)
    })
}

fn layer_sizes(ctx: &Context) -> Result<Check, HarnessError> {
    let n = ctx.clique_order().expect("graph-plus-n instance");
    Ok(from_verdict(layer_cardinality_check(ctx.g(), n)?))
}

fn kn_necessary(ctx: &Context) -> Result<Check, HarnessError> {
    let n = ctx.clique_order().expect("graph-plus-n instance");
    Ok(from_verdict(necessary_condition_check(ctx.g(), n)?))
}

fn bipartite_isolation(ctx: &Context) -> Result<Check, HarnessError> {
    Ok(from_verdict(bipartite_isolation_check(ctx.g())))
}

/// H nontrivial connected, G without isolatable vertices, G×H well-covered.
fn no_isolatable_hypothesis(
    ctx: &Context,
    need_g_connected: bool,
) -> Result<Option<&'static str>, HarnessError> {
    if !ctx.h().is_nontrivial_connected() {
        return Ok(Some("H is trivial or disconnected"));
    }
    if need_g_connected && !ctx.g().is_nontrivial_connected() {
        return Ok(Some("G is trivial or disconnected"));
    }
    if !ctx.isolatable(0).is_empty() {
        return Ok(Some("G has an isolatable vertex"));
    }
    if !ctx.product_wc()? {
        return Ok(Some("product is not well-covered"));
    }
    Ok(None)
}

fn closed_nbhd_size(ctx: &Context) -> Result<Check, HarnessError> {
    if let Some(note) = no_isolatable_hypothesis(ctx, false)? {
        return vacuous(note);
    }
    let g = ctx.g();
    let (a, n) = (alpha(g), g.order());
    let fail = first_failure(g, |s| {
        let closed = g.closed_neighborhood(s).len();
        (!s.is_empty() && closed * a != s.len() * n)
            .then(|| json!({ "A": s, "closed_neighborhood_size": closed, "alpha": a, "n": n }))
    });
    Ok(fail.map_or(Check::Holds(None), Check::Fails))
}

fn regularity(ctx: &Context) -> Result<Check, HarnessError> {
    if let Some(note) = no_isolatable_hypothesis(ctx, true)? {
        return vacuous(note);
    }
    let g = ctx.g();
    let (a, n) = (alpha(g), g.order());
    Ok(match (0..n).find(|&v| (g.degree(v) + 1) * a != n) {
        Some(v) => Check::Fails(json!({ "vertex": v, "degree": g.degree(v), "alpha": a, "n": n })),
        None => Check::Holds(Some(json!({ "degree": n / a - 1 }))),
    })
}

fn k3_dichotomy(ctx: &Context) -> Result<Check, HarnessError> {
    if ctx.clique_order() != Some(3) {
        return vacuous("complete factor is not K3");
    }
    let g = ctx.g();
    if !g.is_nontrivial_connected() {
        return vacuous("G is trivial or disconnected");
    }
    if !ctx.product_wc()? {
        return vacuous("G×K3 is not well-covered");
    }
    let is_k3 = g.order() == 3 && g.is_complete();
    let iso = ctx.isolatable(0);
    Ok(if is_k3 || !iso.is_empty() {
        Check::Holds(Some(json!({ "is_K3": is_k3, "isolatable": iso })))
    } else {
        Check::Fails(json!({ "is_K3": false, "isolatable": iso }))
    })
}

fn no_isolatable_complete(ctx: &Context) -> Result<Check, HarnessError> {
    if let Some(note) = no_isolatable_hypothesis(ctx, true)? {
        return vacuous(note);
    }
    let g = ctx.g();
    Ok(match missing_edge(g) {
        Some((u, v)) => Check::Fails(json!({ "nonadjacent": [u, v] })),
        None => Check::Holds(None),
    })
}

fn missing_edge(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| !g.has_edge(u, v))
}

fn both_complete(ctx: &Context) -> Result<Check, HarnessError> {
    if !both_connected(ctx) {
        return vacuous("a factor is trivial or disconnected");
    }
    if !ctx.isolatable(0).is_empty() || !ctx.isolatable(1).is_empty() {
        return vacuous("a factor has an isolatable vertex");
    }
    if !ctx.product_wc()? {
        return vacuous("product is not well-covered");
    }
    let (g, h) = (ctx.g(), ctx.h());
    let w = json!({
        "G_complete": g.is_complete(), "H_complete": h.is_complete(),
        "nG": g.order(), "nH": h.order(),
    });
    Ok(
        if g.is_complete() && h.is_complete() && g.order() == h.order() {
            Check::Holds(Some(w))
        } else {
            Check::Fails(w)
        },
    )
}

fn no_bipartite_residual(ctx: &Context) -> Result<Check, HarnessError> {
    if let Some(note) = wc_not_vwc_hypothesis(ctx)? {
        return vacuous(note);
    }
    let g = ctx.g();
    let fail = first_failure(g, |i| {
        let rest = g.delete_closed_neighborhood(i);
        rest.graph
            .components()
            .into_iter()
            .find(|&c| c.len() >= 2 && rest.graph.induced_subgraph(c).graph.is_bipartite())
            .map(|c| json!({ "I": i, "bipartite_component": rest.to_original(c) }))
    });
    Ok(fail.map_or(Check::Holds(None), Check::Fails))
}

/// Vertices lying on some triangle.
fn triangle_vertices(g: &Graph) -> VertexSet {
    (0..g.order())
        .filter(|&v| g.edge_within(g.neighbors(v)).is_some())
        .collect()
}

fn edge_triangle(ctx: &Context) -> Result<Check, HarnessError> {
    if let Some(note) = wc_not_vwc_hypothesis(ctx)? {
        return vacuous(note);
    }
    let g = ctx.g();
    let on_triangle = triangle_vertices(g);
    let strong = g.every_edge_in_triangle();
    Ok(
        match g
            .edges()
            .find(|&(u, v)| !on_triangle.contains(u) && !on_triangle.contains(v))
        {
            Some((u, v)) => {
                Check::Fails(json!({ "edge": [u, v], "triangle_vertices": on_triangle }))
            }
            None => Check::Holds(Some(json!({ "every_edge_in_triangle": strong }))),
        },
    )
}

fn girth_three(ctx: &Context) -> Result<Check, HarnessError> {
    if let Some(note) = wc_not_vwc_hypothesis(ctx)? {
        return vacuous(note);
    }
    let (gg, gh) = (ctx.g().girth(), ctx.h().girth());
    let w = json!({ "girth_G": gg, "girth_H": gh });
    Ok(if gg == Girth::Finite(3) && gh == Girth::Finite(3) {
        Check::Holds(Some(w))
    } else {
        Check::Fails(w)
    })
}

fn twins(ctx: &Context) -> Result<Check, HarnessError> {
    let g = ctx.g();
    let n = g.order();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| g.neighbors(u) == g.neighbors(v))
        .collect();
    if pairs.is_empty() {
        return vacuous("G has no two vertices with equal neighborhoods");
    }
    for i in maximal_independent_sets(g) {
        for &(u, v) in &pairs {
            if !i.intersects(g.neighbors(u)) && !(i.contains(u) && i.contains(v)) {
                return Ok(Check::Fails(json!({ "I": i, "u": u, "v": v })));
            }
        }
    }
    Ok(Check::Holds(Some(json!({ "twin_pairs": pairs.len() }))))
}

fn h_family_product(ctx: &Context) -> Result<Check, HarnessError> {
    let n = ctx.clique_order().expect("graph-plus-n instance");
    let g = ctx.g();
    let k = match as_h_family(g) {
        Some((k, m)) if m + 1 == n => k,
        _ => return vacuous("G is not H(k, n-1)"),
    };
    let r = kn_alpha_i(g, n)?;
    let w = json!({ "k": k, "i": r.i_value, "alpha": r.alpha_value });
    Ok(if r.well_covered() {
        Check::Holds(Some(w))
    } else {
        let mut w = w;
        w["argmin"] = json!(r.argmin);
        w["argmax"] = json!(r.argmax);
        Check::Fails(w)
    })
}

fn multipartite_square(ctx: &Context) -> Result<Check, HarnessError> {
    let Some((m, r)) = as_balanced_multipartite(ctx.g()) else {
        return vacuous("G is not a balanced complete multipartite graph");
    };
    let p = ctx.product()?;
    let expected = m * r * r;
    let mut count = 0usize;
    for i in maximal_independent_sets(&p.graph) {
        if i.len() != expected {
            return Ok(Check::Fails(
                json!({ "mis": i, "size": i.len(), "expected": expected }),
            ));
        }
        count += 1;
    }
    Ok(Check::Holds(Some(
        json!({ "m": m, "r": r, "size": expected, "count": count }),
    )))
}

fn support_leaf_unique(ctx: &Context) -> Result<Check, HarnessError> {
    let g = ctx.g();
    let leaves: VertexSet = (0..g.order()).filter(|&v| g.degree(v) == 1).collect();
    let supports = g.neighborhood(leaves);
    if supports.is_empty() {
        return vacuous("G has no support vertex");
    }
    if !ctx.wc(0) {
        return vacuous("G is not well-covered");
    }
    Ok(
        match supports
            .iter()
            .find(|&x| (g.neighbors(x) & leaves).len() != 1)
        {
            Some(x) => Check::Fails(json!({ "support": x, "leaves": g.neighbors(x) & leaves })),
            None => Check::Holds(None),
        },
    )
}

const STANDARD: &[Claim] = &[
    Claim { id: "inverse_image", shape: Shape::Pair, check: inverse_image,
        statement: "H without isolated vertices, I maximal independent in G => I x V(H) maximal independent in GxH" },
    Claim { id: "trivial_bounds", shape: Shape::Pair, check: trivial_bounds,
        statement: "no isolated vertices => alpha(GxH) >= max(alpha(G)n(H), alpha(H)n(G)) and i(GxH) <= min(i(G)n(H), i(H)n(G))" },
    Claim { id: "residual_wc", shape: Shape::Single, check: residual_wc,
        statement: "G well-covered, I independent => G-N[I] well-covered" },
    Claim { id: "clique_leftover", shape: Shape::Single, check: clique_leftover,
        statement: "J independent with |J| = alpha-1 => J maximal or G-N[J] complete" },
    Claim { id: "wc_direct", shape: Shape::Pair, check: wc_direct,
        statement: "G, H with edges, GxH well-covered => G, H well-covered and alpha(G+)n(H+) = alpha(H+)n(G+)" },
    Claim { id: "berge", shape: Shape::Single, check: berge,
        statement: "G well-covered without isolated vertices => |S| <= |N(S)| for every independent S" },
    Claim { id: "favaron", shape: Shape::Single, check: favaron,
        statement: "very well-covered <=> some perfect matching has (P) <=> a perfect matching exists and all have (P)" },
    Claim { id: "vwc_product", shape: Shape::Pair, check: vwc_product,
        statement: "no isolated vertices, one factor very well-covered => (GxH wc <=> GxH vwc <=> both vwc)" },
    Claim { id: "layer_sizes", shape: Shape::WithClique, check: layer_sizes,
        statement: "every maximal independent set of GxKn meets each H-layer in 0, 1 or n vertices" },
    Claim { id: "kn_necessary", shape: Shape::WithClique, check: kn_necessary,
        statement: "GxKn well-covered, deg(x) >= n => G-N[x] has an isolated vertex" },
    Claim { id: "bipartite_isolation", shape: Shape::Single, check: bipartite_isolation,
        statement: "B bipartite, well-covered, min degree >= 2 => B-N[x] has an isolated vertex for every x" },
    Claim { id: "closed_nbhd_size", shape: Shape::Pair, check: closed_nbhd_size,
        statement: "H nontrivial connected, G without isolatable vertices, GxH wc => |N[A]| = |A| n(G)/alpha(G) for independent A" },
    Claim { id: "regularity", shape: Shape::Pair, check: regularity,
        statement: "G, H nontrivial connected, G without isolatable vertices, GxH wc => G is (n(G)/alpha(G) - 1)-regular" },
    Claim { id: "k3_dichotomy", shape: Shape::WithClique, check: k3_dichotomy,
        statement: "G nontrivial connected, GxK3 wc => G = K3 or G has an isolatable vertex" },
    Claim { id: "no_isolatable_complete", shape: Shape::Pair, check: no_isolatable_complete,
        statement: "G, H nontrivial connected, GxH wc, G without isolatable vertices => G complete" },
    Claim { id: "both_complete", shape: Shape::Pair, check: both_complete,
        statement: "G, H nontrivial connected without isolatable vertices, GxH wc => G = H = K_n(G)" },
    Claim { id: "no_bipartite_residual", shape: Shape::Pair, check: no_bipartite_residual,
        statement: "G, H nontrivial connected, GxH wc not vwc => bipartite components of G-N[I] are K1" },
    Claim { id: "edge_triangle", shape: Shape::Pair, check: edge_triangle,
        statement: "G, H nontrivial connected, GxH wc not vwc => every edge of G has an endpoint on a triangle" },
    Claim { id: "girth_three", shape: Shape::Pair, check: girth_three,
        statement: "G, H nontrivial connected, GxH wc not vwc => both G and H have girth 3" },
    Claim { id: "twins", shape: Shape::Single, check: twins,
        statement: "I maximal independent, N(u) = N(v) => I meets N(u) or contains both u and v" },
    Claim { id: "h_family_product", shape: Shape::WithClique, check: h_family_product,
        statement: "G = H(k, n-1) => GxKn well-covered" },
    Claim { id: "multipartite_square", shape: Shape::Single, check: multipartite_square,
        statement: "G = K_{r,...,r} with m parts => every maximal independent set of GxG has m r^2 vertices" },
    Claim { id: "support_leaf_unique", shape: Shape::Single, check: support_leaf_unique,
        statement: "G well-covered => every support vertex has exactly one leaf neighbor" },
];

#[derive(Clone, Debug)]
pub struct ClaimRegistry {
    claims: Vec<Claim>,
}

impl Default for ClaimRegistry {
    fn default() -> Self {
        ClaimRegistry::standard()
    }
}

impl ClaimRegistry {
    pub fn empty() -> Self {
        ClaimRegistry { claims: Vec::new() }
    }

    /// Every claim about well-covered direct products, in a fixed order.
    pub fn standard() -> Self {
        ClaimRegistry {
            claims: STANDARD.to_vec(),
        }
    }

    pub fn register(&mut self, claim: Claim) -> Result<(), HarnessError> {
        if self.get(claim.id).is_some() {
            return Err(HarnessError::DuplicateClaim {
                id: claim.id.to_string(),
            });
        }
        self.claims.push(claim);
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.claims.iter().map(|c| c.id).collect()
    }

    pub fn claims(&self) -> &[Claim] {
        &self.claims
    }

    pub fn verify(
        &self,
        claim_id: &str,
        instance: &Instance,
    ) -> Result<ClaimVerdict, HarnessError> {
        let claim = self
            .get(claim_id)
            .ok_or_else(|| HarnessError::UnknownClaim(claim_id.to_string()))?;
        evaluate(claim, &Context::new(instance))
    }

    /// Evaluates the selected claims (all if `ids` is empty) on every
    /// instance of matching shape, using `jobs` worker threads.
    pub fn run_suite(
        &self,
        ids: &[&str],
        instances: &[Instance],
        jobs: Option<usize>,
    ) -> Result<SuiteReport, HarnessError> {
        let selected: Vec<&Claim> = if ids.is_empty() {
            self.claims.iter().collect()
        } else {
            ids.iter()
                .map(|id| {
                    self.get(id)
                        .ok_or_else(|| HarnessError::UnknownClaim(id.to_string()))
                })
                .collect::<Result<_, _>>()?
        };
        let empty = SuiteReport::new(&selected);
        let work = || {
            instances
                .par_iter()
                .map(|inst| {
                    let mut r = empty.clone();
                    r.instances = 1;
                    let ctx = Context::new(inst);
                    for claim in selected.iter().filter(|c| c.shape == inst.shape()) {
                        r.record(claim.id, evaluate(claim, &ctx));
                    }
                    r
                })
                .reduce(|| empty.clone(), SuiteReport::merge)
        };
        match jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| HarnessError::ThreadPool(e.to_string()))
                .map(|pool| pool.install(work)),
            None => Ok(work()),
        }
    }
}

fn evaluate(claim: &Claim, ctx: &Context) -> Result<ClaimVerdict, HarnessError> {
    let inst = ctx.instance();
    if claim.shape != inst.shape() {
        return Err(HarnessError::ShapeMismatch {
            claim: claim.id.to_string(),
            expected: claim.shape,
            got: inst.shape(),
        });
    }
    let desc = inst.describe();
    Ok(match (claim.check)(ctx)? {
        Check::Holds(w) => {
            let v = ClaimVerdict::holds(claim.id, desc);
            match w {
                Some(w) => v.with_witness(w),
                None => v,
            }
        }
        Check::Vacuous(note) => ClaimVerdict::vacuous(claim.id, desc, note),
        Check::Fails(w) => ClaimVerdict::counterexample(claim.id, desc, w),
    })
}

/// Evaluates a claim of the standard registry.
pub fn verify(claim_id: &str, instance: &Instance) -> Result<ClaimVerdict, HarnessError> {
    ClaimRegistry::standard().verify(claim_id, instance)
}

// ---------------------------------------------------------------------------
// Suite reports
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ClaimStats {
    pub holds: usize,
    pub vacuous: usize,
    /// Instances the claim could not be evaluated on, such as products
    /// over the vertex limit.
    pub skipped: usize,
    pub counterexamples: Vec<ClaimVerdict>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SuiteReport {
    pub instances: usize,
    pub claims: BTreeMap<String, ClaimStats>,
}

impl SuiteReport {
    fn new(claims: &[&Claim]) -> Self {
        SuiteReport {
            instances: 0,
            claims: claims
                .iter()
                .map(|c| (c.id.to_string(), ClaimStats::default()))
                .collect(),
        }
    }

    fn record(&mut self, id: &str, v: Result<ClaimVerdict, HarnessError>) {
        let s = self.claims.entry(id.to_string()).or_default();
        match v {
            Ok(v) => match v.status {
                Status::Holds => s.holds += 1,
                Status::Vacuous => s.vacuous += 1,
                Status::Counterexample => s.counterexamples.push(v),
            },
            Err(_) => s.skipped += 1,
        }
    }

    /// Combines two reports; the left operand's counterexamples come first.
    pub fn merge(mut self, other: SuiteReport) -> SuiteReport {
        self.instances += other.instances;
        for (id, o) in other.claims {
            let s = self.claims.entry(id).or_default();
            s.holds += o.holds;
            s.vacuous += o.vacuous;
            s.skipped += o.skipped;
            s.counterexamples.extend(o.counterexamples);
        }
        self
    }

    pub fn counterexample_count(&self) -> usize {
        self.claims.values().map(|s| s.counterexamples.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.counterexample_count() == 0
    }

    /// Claims that never had their hypothesis satisfied.
    pub fn weak_evidence(&self) -> Vec<&str> {
        self.claims
            .iter()
            .filter(|(_, s)| s.holds == 0 && s.counterexamples.is_empty())
            .map(|(id, _)| id.as_str())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "instances": self.instances,
            "passed": self.passed(),
            "counterexample_count": self.counterexample_count(),
            "weak_evidence": self.weak_evidence(),
            "claims": self.claims,
        })
    }
}

// ---------------------------------------------------------------------------
// Instance corpora
// ---------------------------------------------------------------------------

/// Every connected labeled graph on 1..=`max_n` vertices.
pub fn single_instances(max_n: usize) -> Result<Vec<Instance>, HarnessError> {
    Ok(corpus(max_n, true)?.map(Instance::Single).collect())
}

/// Ordered pairs of isomorphism-class representatives on 1..=`max_n`
/// vertices with n(G)·n(H) ≤ `max_product`.
pub fn pair_instances(max_n: usize, max_product: usize) -> Result<Vec<Instance>, HarnessError> {
    let reps = isomorphism_classes(max_n, false)?;
    let mut out = Vec::new();
    for g in &reps {
        for h in &reps {
            if g.order() * h.order() <= max_product {
                out.push(Instance::Pair(g.clone(), h.clone()));
            }
        }
    }
    Ok(out)
}

/// Every labeled graph on 1..=`max_n` vertices paired with each clique order.
pub fn clique_instances(
    max_n: usize,
    clique_orders: &[usize],
) -> Result<Vec<Instance>, HarnessError> {
    let graphs: Vec<Graph> = corpus(max_n, false)?.collect();
    Ok(graphs
        .iter()
        .flat_map(|g| {
            clique_orders
                .iter()
                .map(move |&n| Instance::WithClique(g.clone(), n))
        })
        .collect())
}

/// Instances chosen so that claims with rarely satisfied hypotheses are
/// exercised: complete graphs, the H(k,n) family, balanced complete
/// multipartite graphs and cycles.
pub fn targeted_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 2..=6 {
        for m in 2..=6 {
            if n * m <= 36 {
                out.push(Instance::Pair(complete(n).unwrap(), complete(m).unwrap()));
            }
        }
    }
    for a in 3..=7 {
        for b in 3..=7 {
            out.push(Instance::Pair(cycle(a).unwrap(), cycle(b).unwrap()));
        }
    }
    for r in 1..=2 {
        let g = complete_multipartite(&[r, r, r]).unwrap();
        out.push(Instance::Single(g.clone()));
        out.push(Instance::Pair(g.clone(), g.clone()));
        out.push(Instance::Pair(complete(3).unwrap(), g));
    }
    for sizes in [&[2, 2][..], &[3, 3], &[2, 2, 2, 2], &[4, 4]] {
        out.push(Instance::Single(complete_multipartite(sizes).unwrap()));
    }
    for (k, n) in [
        (1, 1),
        (2, 1),
        (3, 1),
        (4, 1),
        (1, 2),
        (2, 2),
        (3, 2),
        (4, 2),
        (2, 3),
    ] {
        let g = h_family(k, n).unwrap();
        out.push(Instance::Single(g.clone()));
        out.push(Instance::WithClique(g.clone(), n + 1));
        if g.order() * (n + 1) <= 36 {
            out.push(Instance::Pair(g, complete(n + 1).unwrap()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::path;

    fn pair(g: Graph, h: Graph) -> Instance {
        Instance::Pair(g, h)
    }

    #[test]
    fn registry_ids_are_unique() {
        let r = ClaimRegistry::standard();
        let mut ids = r.ids();
        assert_eq!(ids.len(), 23);
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 23);
        let mut r = r;
        assert!(matches!(
            r.register(STANDARD[0]),
            Err(HarnessError::DuplicateClaim { .. })
        ));
    }

    #[test]
    fn wc_direct_needs_edges_on_both_sides() {
        // K1 x P3 is edgeless, so well-covered, although P3 is not
        let v = verify("wc_direct", &pair(complete(1).unwrap(), path(3).unwrap())).unwrap();
        assert!(v.is_vacuous());
    }

    #[test]
    fn wc_direct_with_isolated_vertex() {
        let g = complete(2)
            .unwrap()
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        let v = verify("wc_direct", &pair(g, complete(2).unwrap())).unwrap();
        assert!(v.is_holds(), "{v:?}");
        let w = v.witness.unwrap();
        assert_eq!(w["alpha_G+ * n_H+"], 2);
        assert_eq!(w["alpha_H+ * n_G+"], 2);
    }

    #[test]
    fn edge_triangle_c5_squared_is_vacuous() {
        let v = verify("edge_triangle", &pair(cycle(5).unwrap(), cycle(5).unwrap())).unwrap();
        assert!(v.is_vacuous());
        assert_eq!(v.note.as_deref(), Some("product is not well-covered"));
    }

    #[test]
    fn multipartite_square_k222() {
        let v = verify(
            "multipartite_square",
            &Instance::Single(complete_multipartite(&[2, 2, 2]).unwrap()),
        )
        .unwrap();
        assert!(v.is_holds());
        assert_eq!(v.witness.unwrap()["size"], 12);
    }

    #[test]
    fn shape_and_unknown_errors() {
        let inst = Instance::Single(cycle(4).unwrap());
        assert_eq!(
            verify("no_such_claim", &inst),
            Err(HarnessError::UnknownClaim("no_such_claim".into()))
        );
        assert!(matches!(
            verify("wc_direct", &inst),
            Err(HarnessError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn descriptors_round_trip() {
        for inst in [
            Instance::Single(cycle(5).unwrap()),
            pair(complete(3).unwrap(), path(4).unwrap()),
            Instance::WithClique(h_family(2, 2).unwrap().without_labels(), 3),
        ] {
            assert_eq!(inst.describe().parse::<Instance>().unwrap(), inst);
        }
        assert!("H=Bw".parse::<Instance>().is_err());
        assert!("G=Bw,H=Bw,n=2".parse::<Instance>().is_err());
        assert!("G=Bw,x=1".parse::<Instance>().is_err());
    }

    #[test]
    fn complete_pairs() {
        for n in 2..=4 {
            for m in 2..=4 {
                let inst = pair(complete(n).unwrap(), complete(m).unwrap());
                let v = verify("both_complete", &inst).unwrap();
                if n == m {
                    assert!(v.is_holds());
                } else {
                    assert!(v.is_vacuous());
                }
                assert!(!verify("regularity", &inst).unwrap().is_counterexample());
            }
        }
    }

    #[test]
    fn h_family_and_k3() {
        let g = h_family(4, 2).unwrap();
        let v = verify("h_family_product", &Instance::WithClique(g.clone(), 3)).unwrap();
        assert!(v.is_holds());
        assert_eq!(v.witness.unwrap()["i"], 12);
        assert!(verify("h_family_product", &Instance::WithClique(g, 2))
            .unwrap()
            .is_vacuous());
        let v = verify(
            "k3_dichotomy",
            &Instance::WithClique(complete(3).unwrap(), 3),
        )
        .unwrap();
        assert!(v.is_holds());
    }

    #[test]
    fn small_suite_is_clean_and_deterministic() {
        let r = ClaimRegistry::standard();
        let mut insts = single_instances(4).unwrap();
        insts.extend(pair_instances(3, 9).unwrap());
        insts.extend(clique_instances(3, &[2, 3]).unwrap());
        let a = r.run_suite(&[], &insts, Some(2)).unwrap();
        let b = r.run_suite(&[], &insts, None).unwrap();
        assert!(a.passed(), "{}", a.to_json());
        assert_eq!(a, b);
        assert_eq!(a.instances, insts.len());
    }

    #[test]
    fn false_claim_yields_counterexample() {
        fn all_wc(ctx: &Context) -> Result<Check, HarnessError> {
            Ok(match two_sizes(ctx.g()) {
                Some((a, b)) => Check::Fails(json!({ "small": a, "large": b })),
                None => Check::Holds(None),
            })
        }
        let mut r = ClaimRegistry::standard();
        r.register(Claim {
            id: "everything_wc",
            shape: Shape::Single,
            statement: "false",
            check: all_wc,
        })
        .unwrap();
        let rep = r
            .run_suite(&["everything_wc"], &single_instances(3).unwrap(), None)
            .unwrap();
        // P3 is the only connected graph on at most 3 vertices that is not well-covered
        let bad = &rep.claims["everything_wc"].counterexamples;
        assert_eq!(bad.len(), 3);
        assert!(!rep.passed());
    }
}
