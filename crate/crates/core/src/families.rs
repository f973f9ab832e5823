//! Named graph families and exhaustive corpora of small graphs.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formats::{from_graph6, to_graph6, FormatError};
use crate::graph::Graph;
use crate::vset::{VertexSet, MAX_VERTICES};

/// Largest order for which labeled exhaustive enumeration is allowed.
pub const MAX_CORPUS_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph would have {n} vertices; at most {MAX_VERTICES} are supported")]
    TooLarge { n: usize },
    #[error("exhaustive corpus limited to {MAX_CORPUS_ORDER} vertices, asked for {max_n}")]
    CorpusTooLarge { max_n: usize },
    #[error("cannot parse family spec {input:?}: {msg}")]
    Parse { input: String, msg: String },
    #[error(transparent)]
    Format(#[from] FormatError),
}

fn check_order(n: usize) -> Result<(), FamilyError> {
    if n > MAX_VERTICES {
        Err(FamilyError::TooLarge { n })
    } else {
        Ok(())
    }
}

fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, FamilyError> {
    check_order(n)?;
    Ok(Graph::from_edge_list(n, edges).expect("generator produces valid edges"))
}

/// K_n.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::InvalidParameter(
            "complete graph needs n >= 1".into(),
        ));
    }
    let e: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    build(n, &e)
}

/// C_n on `0, 1, …, n-1` in cyclic order.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::InvalidParameter("cycle needs n >= 3".into()));
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &e)
}

/// P_n, the path on `n` vertices.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::InvalidParameter("path needs n >= 1".into()));
    }
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &e)
}

/// K_{s1,…,sm}; parts are consecutive index blocks.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph, FamilyError> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(FamilyError::InvalidParameter(
            "multipartite part sizes must be nonempty and positive".into(),
        ));
    }
    let n: usize = sizes.iter().sum();
    check_order(n)?;
    let part: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    let e: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part[u] != part[v])
        .collect();
    build(n, &e)
}

/// H(k, n): a clique on blocks A_1..A_k of size `n` (indices `0..kn`, block
/// by block), plus independent vertices z_1..z_k (indices `kn..kn+k`) with
/// N(z_i) = A_i. Order k(n+1).
pub fn h_family(k: usize, n: usize) -> Result<Graph, FamilyError> {
    if k == 0 || n == 0 {
        return Err(FamilyError::InvalidParameter(
            "H(k,n) needs k, n >= 1".into(),
        ));
    }
    let order = k * (n + 1);
    check_order(order)?;
    let kn = k * n;
    let mut e: Vec<_> = (0..kn)
        .flat_map(|u| (u + 1..kn).map(move |v| (u, v)))
        .collect();
    for i in 0..k {
        e.extend((i * n..(i + 1) * n).map(|a| (a, kn + i)));
    }
    let mut labels = Vec::with_capacity(order);
    for i in 1..=k {
        if n == 2 {
            labels.push(format!("x{i}"));
            labels.push(format!("y{i}"));
        } else {
            labels.extend((1..=n).map(|j| format!("a{i}.{j}")));
        }
    }
    labels.extend((1..=k).map(|i| format!("z{i}")));
    Ok(build(order, &e)?
        .with_labels(labels)
        .expect("one label per vertex"))
}

/// Corona G∘K₁: every vertex `v` gets a pendant leaf `v + n(G)`.
pub fn corona(g: &Graph) -> Result<Graph, FamilyError> {
    let n = g.order();
    check_order(2 * n)?;
    let mut e: Vec<_> = g.edges().collect();
    e.extend((0..n).map(|v| (v, v + n)));
    build(2 * n, &e)
}

/// Recognizes H(k, n) up to isomorphism, returning `(k, n)`.
///
/// For k = 1 this is K_{n+1}. For k ≥ 2 the z-vertices are exactly the
/// vertices of minimum degree `n`, since clique vertices have degree kn.
pub fn as_h_family(g: &Graph) -> Option<(usize, usize)> {
    let order = g.order();
    if order < 2 {
        return None;
    }
    if g.is_complete() {
        return Some((1, order - 1));
    }
    let n = g.min_degree();
    if n == 0 {
        return None;
    }
    let z: VertexSet = (0..order).filter(|&v| g.degree(v) == n).collect();
    let k = z.len();
    if k < 2 || order != k * (n + 1) || !g.is_independent(z) {
        return None;
    }
    let a = z.complement(order);
    if !g.is_clique(a) {
        return None;
    }
    let mut covered = VertexSet::EMPTY;
    for v in z {
        let nv = g.neighbors(v);
        if !nv.is_subset(a) || nv.intersects(covered) {
            return None;
        }
        covered |= nv;
    }
    Some((k, n))
}

/// Recognizes a complete m-partite graph with all parts of size r,
/// returning `(m, r)`. Non-adjacency must be an equivalence relation with
/// classes of one size.
pub fn as_balanced_multipartite(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    let class = |v: usize| g.neighbors(v).complement(n);
    let r = class(0).len();
    let mut seen = VertexSet::EMPTY;
    let mut m = 0;
    for v in 0..n {
        if seen.contains(v) {
            continue;
        }
        let c = class(v);
        if c.len() != r || c.iter().any(|u| class(u) != c) {
            return None;
        }
        seen |= c;
        m += 1;
    }
    Some((m, r))
}

// ---------------------------------------------------------------------------
// Family specs
// ---------------------------------------------------------------------------

/// A named graph, parsed from strings such as `h:4,2`, `kpartite:2,2,2`,
/// `cycle:7`, `complete:3`, `path:4`, `corona:3`, `empty:2`, or `g6:Bw`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Empty(usize),
    CompleteMultipartite(Vec<usize>),
    HFamily {
        k: usize,
        n: usize,
    },
    /// Corona of K_k.
    Corona(usize),
    Custom(Graph),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Empty(n) => {
                check_order(*n)?;
                Ok(Graph::empty(*n).expect("order checked"))
            }
            FamilySpec::CompleteMultipartite(s) => complete_multipartite(s),
            FamilySpec::HFamily { k, n } => h_family(*k, *n),
            FamilySpec::Corona(k) => corona(&complete(*k)?),
            FamilySpec::Custom(g) => Ok(g.clone()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let err = |msg: &str| FamilyError::Parse {
            input: s.to_string(),
            msg: msg.to_string(),
        };
        let (tag, args) = s.split_once(':').ok_or_else(|| err("expected TAG:ARGS"))?;
        if matches!(tag, "g6" | "custom") {
            return Ok(FamilySpec::Custom(from_graph6(args)?));
        }
        let nums = args
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| err("arguments must be non-negative integers"))?;
        let one = || match nums.as_slice() {
            [n] => Ok(*n),
            _ => Err(err("expected exactly one argument")),
        };
        let spec = match tag {
            "complete" | "k" => FamilySpec::Complete(one()?),
            "cycle" | "c" => FamilySpec::Cycle(one()?),
            "path" | "p" => FamilySpec::Path(one()?),
            "empty" => FamilySpec::Empty(one()?),
            "corona" => FamilySpec::Corona(one()?),
            "kpartite" | "multipartite" | "complete_multipartite" => {
                FamilySpec::CompleteMultipartite(nums)
            }
            "h" | "h_family" => match nums.as_slice() {
                [k, n] => FamilySpec::HFamily { k: *k, n: *n },
                _ => return Err(err("expected h:K,N")),
            },
            _ => return Err(err("unknown family tag")),
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::CompleteMultipartite(s) => {
                let parts: Vec<String> = s.iter().map(usize::to_string).collect();
                write!(f, "kpartite:{}", parts.join(","))
            }
            FamilySpec::HFamily { k, n } => write!(f, "h:{k},{n}"),
            FamilySpec::Corona(k) => write!(f, "corona:{k}"),
            FamilySpec::Custom(g) => write!(f, "g6:{}", to_graph6(g)),
        }
    }
}

// ---------------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------------

#[inline]
fn edge_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// The graph on `n` vertices whose edges are the set bits of `mask`, edges
/// numbered `(0,1), (0,2), (1,2), (0,3), …` as in graph6.
pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut adj = vec![0u64; n];
    for j in 1..n {
        for i in 0..j {
            if (mask >> edge_index(i, j)) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Graph::from_adjacency(adj).expect("mask describes a simple graph")
}

/// Every labeled graph on exactly `n` vertices, in edge-mask order.
pub fn corpus_of_order(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>, FamilyError> {
    if n > MAX_CORPUS_ORDER {
        return Err(FamilyError::CorpusTooLarge { max_n: n });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0..1u64 << pairs)
        .map(move |m| from_edge_mask(n, m))
        .filter(move |g| !connected_only || g.is_connected()))
}

/// Every labeled graph on 1..=`max_n` vertices, ordered by (order, edge mask).
pub fn corpus(
    max_n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>, FamilyError> {
    if max_n > MAX_CORPUS_ORDER {
        return Err(FamilyError::CorpusTooLarge { max_n });
    }
    Ok((1..=max_n).flat_map(move |n| corpus_of_order(n, connected_only).expect("order checked")))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn edge_mask(g: &Graph) -> u64 {
    g.edges().fold(0, |m, (u, v)| m | 1 << edge_index(u, v))
}

/// One representative per isomorphism class on exactly `n` vertices: the
/// labeling whose edge mask is least over all vertex permutations.
pub fn isomorphism_classes_of_order(
    n: usize,
    connected_only: bool,
) -> Result<Vec<Graph>, FamilyError> {
    if n > MAX_CORPUS_ORDER {
        return Err(FamilyError::CorpusTooLarge { max_n: n });
    }
    let perms = permutations(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out = Vec::new();
    'mask: for mask in 0..1u64 << pairs {
        let g = from_edge_mask(n, mask);
        if connected_only && !g.is_connected() {
            continue;
        }
        let edges: Vec<_> = g.edges().collect();
        for p in &perms {
            let m = edges.iter().fold(0u64, |m, &(u, v)| {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                m | 1 << edge_index(a, b)
            });
            if m < mask {
                continue 'mask;
            }
        }
        debug_assert_eq!(edge_mask(&g), mask);
        out.push(g);
    }
    Ok(out)
}

/// Isomorphism-class representatives on 1..=`max_n` vertices.
pub fn isomorphism_classes(max_n: usize, connected_only: bool) -> Result<Vec<Graph>, FamilyError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(isomorphism_classes_of_order(n, connected_only)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::independence::{alpha, isolatable_vertices, well_covered_report};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn h_4_2_matches_figure() {
        let h = h_family(4, 2).unwrap();
        assert_eq!(h.order(), 12);
        let lbl = |name: &str| h.labels().unwrap().iter().position(|l| l == name).unwrap();
        let (z1, x1, y1) = (lbl("z1"), lbl("x1"), lbl("y1"));
        assert_eq!(h.closed_neighborhood(set(&[z1])), set(&[z1, x1, y1]));
        assert!(h.is_clique(set(&(0..8).collect::<Vec<_>>())));
        // removing N[z1] leaves the rest of the clique and z2..z4 with both neighbors
        let r = h.delete_closed_neighborhood(set(&[z1]));
        let rest = &r.graph;
        assert_eq!(rest.order(), 9);
        let clique = r.from_original((2..8).collect());
        assert!(rest.is_clique(clique));
        for name in ["z2", "z3", "z4"] {
            let z = r.from_original(set(&[lbl(name)])).min().unwrap();
            assert_eq!(rest.degree(z), 2);
        }
        assert_eq!(alpha(&h), 4);
    }

    #[test]
    fn h_family_special_cases() {
        assert!(h_family(1, 3).unwrap().same_edges(&complete(4).unwrap()));
        let h21 = h_family(2, 1).unwrap();
        // corona of K2 is P4
        assert!(h21.same_edges(&Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 3)]).unwrap()));
        assert_eq!(alpha(&h21), 2);
        assert!(h21.same_edges(&corona(&complete(2).unwrap()).unwrap()));
        assert!(h_family(0, 1).is_err());
        assert!(matches!(
            h_family(8, 8),
            Err(FamilyError::TooLarge { n: 72 })
        ));
    }

    #[test]
    fn h_family_is_well_covered() {
        for k in 1..=4 {
            for n in 1..=4 {
                let g = h_family(k, n).unwrap();
                let r = well_covered_report(&g);
                assert!(
                    r.well_covered && r.alpha == k && r.i_number == k,
                    "H({k},{n})"
                );
                if k >= 2 {
                    assert!(!isolatable_vertices(&g).is_empty());
                }
                assert_eq!(as_h_family(&g), Some((k, n)));
            }
        }
        assert_eq!(as_h_family(&cycle(5).unwrap()), None);
        assert_eq!(as_h_family(&path(3).unwrap()), None);
    }

    #[test]
    fn standard_families() {
        let g = complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.regular_degree(), Some(4));
        assert_eq!(alpha(&g), 2);
        assert_eq!(as_balanced_multipartite(&g), Some((3, 2)));
        assert_eq!(cycle(7).unwrap().size(), 7);
        let e = complete_multipartite(&[3]).unwrap();
        assert_eq!((e.order(), e.size()), (3, 0));
        assert_eq!(as_balanced_multipartite(&e), Some((1, 3)));
        assert_eq!(
            as_balanced_multipartite(&complete(4).unwrap()),
            Some((4, 1))
        );
        assert_eq!(
            as_balanced_multipartite(&complete_multipartite(&[1, 2]).unwrap()),
            None
        );
        assert_eq!(as_balanced_multipartite(&path(4).unwrap()), None);
        assert!(cycle(2).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
        assert!(complete(0).is_err());
        for r in 1..=3 {
            for m in 1..=4 {
                assert_eq!(alpha(&complete_multipartite(&vec![r; m]).unwrap()), r);
            }
        }
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(
            "h:4,2".parse::<FamilySpec>().unwrap(),
            FamilySpec::HFamily { k: 4, n: 2 }
        );
        assert_eq!(
            "kpartite:2,2,2".parse::<FamilySpec>().unwrap(),
            FamilySpec::CompleteMultipartite(vec![2, 2, 2])
        );
        assert_eq!(
            "cycle:7".parse::<FamilySpec>().unwrap(),
            FamilySpec::Cycle(7)
        );
        let custom = "g6:Bw".parse::<FamilySpec>().unwrap();
        assert!(custom.build().unwrap().is_complete());
        for s in [
            "h:4,2",
            "kpartite:2,2,2",
            "cycle:7",
            "complete:3",
            "path:4",
            "corona:3",
            "empty:2",
            "g6:Bw",
        ] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        assert!("h:4".parse::<FamilySpec>().is_err());
        assert!("cycle".parse::<FamilySpec>().is_err());
        assert!("blob:3".parse::<FamilySpec>().is_err());
        assert!("cycle:x".parse::<FamilySpec>().is_err());
        assert!("cycle:2".parse::<FamilySpec>().unwrap().build().is_err());
    }

    #[test]
    fn corpus_counts() {
        assert_eq!(corpus_of_order(3, true).unwrap().count(), 4);
        assert_eq!(corpus_of_order(2, false).unwrap().count(), 2);
        assert_eq!(corpus_of_order(4, true).unwrap().count(), 38);
        assert_eq!(corpus_of_order(5, true).unwrap().count(), 728);
        assert_eq!(corpus(4, true).unwrap().count(), 1 + 1 + 4 + 38);
        assert!(matches!(
            corpus(8, false),
            Err(FamilyError::CorpusTooLarge { max_n: 8 })
        ));
    }

    #[test]
    fn corpus_is_ordered_and_duplicate_free() {
        let masks: Vec<(usize, u64)> = corpus(4, false)
            .unwrap()
            .map(|g| (g.order(), edge_mask(&g)))
            .collect();
        assert!(masks.windows(2).all(|w| w[0] < w[1]));
        let again: Vec<(usize, u64)> = corpus(4, false)
            .unwrap()
            .map(|g| (g.order(), edge_mask(&g)))
            .collect();
        assert_eq!(masks, again);
    }

    #[test]
    fn isomorphism_class_counts() {
        let all: Vec<usize> = (1..=6)
            .map(|n| isomorphism_classes_of_order(n, false).unwrap().len())
            .collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (1..=6)
            .map(|n| isomorphism_classes_of_order(n, true).unwrap().len())
            .collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn edge_mask_round_trip() {
        let g = cycle(5).unwrap();
        assert_eq!(from_edge_mask(5, edge_mask(&g)), g);
    }
}
