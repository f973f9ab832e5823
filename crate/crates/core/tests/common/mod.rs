//! Brute-force reference implementations used as test oracles.
//!
//! Nothing here touches the library's bitset algorithms: graphs are read
//! once through `has_edge` into boolean matrices and everything else is
//! done from the definitions.

#![allow(dead_code)]

use std::collections::BTreeSet;

use wcprod::Graph;

pub type Adj = Vec<Vec<bool>>;

pub fn adj_of(g: &Graph) -> Adj {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

pub fn complete_adj(n: usize) -> Adj {
    (0..n).map(|u| (0..n).map(|v| u != v).collect()).collect()
}

pub fn cycle_adj(n: usize) -> Adj {
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| (u + 1) % n == v || (v + 1) % n == u)
                .collect()
        })
        .collect()
}

/// Complete multipartite graph with parts of the given sizes.
pub fn multipartite_adj(sizes: &[usize]) -> Adj {
    let part: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    let n = part.len();
    (0..n)
        .map(|u| (0..n).map(|v| part[u] != part[v]).collect())
        .collect()
}

/// Direct product by definition, vertex (a, b) at index a·n(B) + b.
pub fn product_adj(a: &Adj, b: &Adj) -> Adj {
    let (na, nb) = (a.len(), b.len());
    let n = na * nb;
    let mut out = vec![vec![false; n]; n];
    for u in 0..n {
        for v in 0..n {
            out[u][v] = a[u / nb][v / nb] && b[u % nb][v % nb];
        }
    }
    out
}

pub fn is_independent(adj: &Adj, s: &[usize]) -> bool {
    s.iter().all(|&u| s.iter().all(|&v| !adj[u][v]))
}

pub fn is_maximal_independent(adj: &Adj, s: &[usize]) -> bool {
    is_independent(adj, s) && (0..adj.len()).all(|v| s.contains(&v) || s.iter().any(|&u| adj[u][v]))
}

/// Maximal independent sets by filtering all 2ⁿ subsets, as bitmasks.
pub fn mis_by_subsets(adj: &Adj) -> Vec<u64> {
    let n = adj.len();
    assert!(n <= 22, "subset filter is for small graphs");
    (0u64..1 << n)
        .filter(|&m| {
            let s: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            is_maximal_independent(adj, &s)
        })
        .collect()
}

/// Bron–Kerbosch without pivoting on the complement, calling `f` on each
/// maximal independent set until it returns false.
pub fn each_mis(adj: &Adj, f: &mut dyn FnMut(&[usize]) -> bool) {
    fn rec(
        adj: &Adj,
        r: &mut Vec<usize>,
        p: Vec<usize>,
        mut x: Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if p.is_empty() && x.is_empty() {
            return f(r);
        }
        let mut p = p;
        while let Some(&v) = p.first() {
            let keep = |w: &usize| *w != v && !adj[v][*w];
            r.push(v);
            let go = rec(
                adj,
                r,
                p.iter().copied().filter(keep).collect(),
                x.iter().copied().filter(keep).collect(),
                f,
            );
            r.pop();
            if !go {
                return false;
            }
            p.remove(0);
            x.push(v);
        }
        true
    }
    rec(
        adj,
        &mut Vec::new(),
        (0..adj.len()).collect(),
        Vec::new(),
        f,
    );
}

pub fn all_mis(adj: &Adj) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    each_mis(adj, &mut |s| {
        out.push(s.to_vec());
        true
    });
    out
}

/// The set of maximal-independent-set sizes, stopping once two are seen
/// if `stop_early`.
pub fn mis_sizes(adj: &Adj, stop_early: bool) -> BTreeSet<usize> {
    let mut sizes = BTreeSet::new();
    each_mis(adj, &mut |s| {
        sizes.insert(s.len());
        !(stop_early && sizes.len() > 1)
    });
    sizes
}

pub fn well_covered(adj: &Adj) -> bool {
    mis_sizes(adj, true).len() <= 1
}

/// (i, α) from a full enumeration.
pub fn i_alpha(adj: &Adj) -> (usize, usize) {
    let sizes = mis_sizes(adj, false);
    (*sizes.first().unwrap_or(&0), *sizes.last().unwrap_or(&0))
}

pub fn has_isolated(adj: &Adj) -> bool {
    adj.iter().any(|row| row.iter().all(|&e| !e))
}

/// Well-covered, no isolated vertices, α = n/2.
pub fn very_well_covered(adj: &Adj) -> bool {
    !adj.is_empty() && !has_isolated(adj) && well_covered(adj) && 2 * i_alpha(adj).1 == adj.len()
}
