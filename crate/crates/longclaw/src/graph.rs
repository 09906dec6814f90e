//! Immutable weighted graphs and the vertex-set operations every other
//! module is built on.
//!
//! Graphs are simple and undirected, with dense ids `0..n`. Adjacency is
//! stored as one bitset row per vertex, which makes closed neighborhoods,
//! component splits and independence checks word-parallel. A graph never
//! changes after construction; "deleting" vertices means working inside a
//! domain set or materializing an induced subgraph together with the
//! id-remap table that lifts solutions back.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Build a graph from an edge list. Rejects self-loops and parallel
    /// edges rather than fixing them up silently.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![VertexSet::empty(n); n];
        let mut edge_count = 0;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) outside vertex range 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            if adj[u].contains(v) {
                return Err(Error::input(format!("parallel edge ({u},{v})")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
            edge_count += 1;
        }
        Ok(Graph { n, adj, edge_count })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
            edge_count: 0,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::input(format!(
                "vertex set over universe {} used with graph on {} vertices",
                s.universe(),
                self.n
            )));
        }
        Ok(())
    }

    /// N(s): vertices outside `s` with a neighbor in `s`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out.subtract(s);
        out
    }

    /// N[s] = N(s) ∪ s.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn closed_neighborhood_checked(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.closed_neighborhood(s))
    }

    /// Maximal connected pieces of the subgraph induced by `domain`,
    /// ordered by smallest member id.
    pub fn connected_components(&self, domain: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = domain.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::empty(self.n);
            let mut frontier = VertexSet::singleton(self.n, start);
            while !frontier.is_empty() {
                comp.union_with(&frontier);
                let mut next = VertexSet::empty(self.n);
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(domain);
                next.subtract(&comp);
                frontier = next;
            }
            remaining.subtract(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected_on(&self, domain: &VertexSet) -> bool {
        if domain.is_empty() {
            return true;
        }
        self.connected_components(domain).len() == 1
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        let mut twice = 0;
        for v in s.iter() {
            twice += self.adj[v].intersection(s).len();
        }
        twice / 2
    }

    /// `g[s]` is a tree: connected and |E| = |S| - 1.
    pub fn is_tree_on(&self, s: &VertexSet) -> bool {
        !s.is_empty() && self.is_connected_on(s) && self.edges_within(s) == s.len() - 1
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// The sequence is an induced path: consecutive vertices adjacent,
    /// all other pairs non-adjacent, no repeats.
    pub fn is_induced_path(&self, seq: &[usize]) -> bool {
        let mut seen = VertexSet::empty(self.n);
        for (i, &u) in seq.iter().enumerate() {
            if u >= self.n || seen.contains(u) {
                return false;
            }
            seen.insert(u);
            for (j, &v) in seq.iter().enumerate().skip(i + 1) {
                let adjacent = self.has_edge(u, v);
                if (j == i + 1) != adjacent {
                    return false;
                }
            }
        }
        true
    }

    /// Two sets touch when they intersect or are joined by an edge.
    pub fn touches(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.intersects(b) || self.open_neighborhood(a).intersects(b)
    }

    /// Materialize `g[keep]`. Returns the subgraph and the table mapping
    /// new ids to original ids (sorted, so the mapping is canonical).
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old_ids = keep.to_vec();
        let m = old_ids.len();
        let mut new_of = vec![usize::MAX; self.n];
        for (new, &old) in old_ids.iter().enumerate() {
            new_of[old] = new;
        }
        let mut adj = vec![VertexSet::empty(m); m];
        let mut edge_count = 0;
        for (new_u, &old_u) in old_ids.iter().enumerate() {
            for old_v in self.adj[old_u].intersection(keep).iter() {
                let new_v = new_of[old_v];
                if new_u < new_v {
                    adj[new_u].insert(new_v);
                    adj[new_v].insert(new_u);
                    edge_count += 1;
                }
            }
        }
        (
            Graph {
                n: m,
                adj,
                edge_count,
            },
            old_ids,
        )
    }
}

/// Non-negative integer vertex weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights {
    w: Vec<u64>,
}

impl Weights {
    pub fn unit(n: usize) -> Weights {
        Weights { w: vec![1; n] }
    }

    pub fn from_vec(w: Vec<u64>) -> Weights {
        Weights { w }
    }

    #[inline]
    pub fn of(&self, v: usize) -> u64 {
        self.w[v]
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn set(&mut self, v: usize, weight: u64) {
        self.w[v] = weight;
    }

    /// Total weight of a subset; sums over members only.
    pub fn total(&self, s: &VertexSet) -> u64 {
        s.iter().map(|v| self.w[v]).sum()
    }

    /// Restriction under an id-remap table (new id -> old id).
    pub fn restrict(&self, old_ids: &[usize]) -> Weights {
        Weights {
            w: old_ids.iter().map(|&v| self.w[v]).collect(),
        }
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.w
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 5)]).is_err());
    }

    #[test]
    fn closed_neighborhood_p3_center() {
        // P3 a-b-c, s={b} -> {a,b,c}
        let g = path(3);
        let s = VertexSet::singleton(3, 1);
        assert_eq!(g.closed_neighborhood(&s).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn closed_neighborhood_empty() {
        let g = cycle(5);
        let s = VertexSet::empty(5);
        assert!(g.closed_neighborhood(&s).is_empty());
    }

    #[test]
    fn closed_neighborhood_c5() {
        // C5 on 0..4, s={0,2} expands to everything.
        let g = cycle(5);
        let s = VertexSet::from_iter(5, [0, 2]);
        assert_eq!(g.closed_neighborhood(&s).len(), 5);
    }

    #[test]
    fn components_p3() {
        let g = path(3);
        let all = g.vertices();
        assert_eq!(g.connected_components(&all).len(), 1);
        // middle removed -> {a},{c}
        let ends = VertexSet::from_iter(3, [0, 2]);
        let comps = g.connected_components(&ends);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0]);
        assert_eq!(comps[1].to_vec(), vec![2]);
    }

    #[test]
    fn components_c5_minus_closed_nbhd() {
        let g = cycle(5);
        let rest = g
            .vertices()
            .difference(&g.closed_neighborhood(&VertexSet::singleton(5, 0)));
        assert_eq!(rest.to_vec(), vec![2, 3]);
        let comps = g.connected_components(&rest);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].to_vec(), vec![2, 3]);
    }

    #[test]
    fn independence_and_paths() {
        let g = cycle(5);
        assert!(g.is_independent(&VertexSet::from_iter(5, [0, 2])));
        assert!(!g.is_independent(&VertexSet::from_iter(5, [0, 1])));
        let p = path(4);
        assert!(p.is_induced_path(&[0, 1, 2, 3]));
        assert!(!p.is_induced_path(&[0, 2]));
        assert!(!p.is_induced_path(&[0, 1, 1]));
    }

    #[test]
    fn touches_p3() {
        let g = path(3);
        let a = VertexSet::singleton(3, 0);
        let b = VertexSet::singleton(3, 1);
        let c = VertexSet::singleton(3, 2);
        assert!(g.touches(&a, &b));
        assert!(!g.touches(&a, &c));
        assert!(g.touches(&a, &a));
    }

    #[test]
    fn induced_subgraph_remap() {
        let g = cycle(5);
        let keep = VertexSet::from_iter(5, [1, 2, 4]);
        let (h, ids) = g.induced(&keep);
        assert_eq!(ids, vec![1, 2, 4]);
        assert_eq!(h.n(), 3);
        assert!(h.has_edge(0, 1)); // 1-2
        assert!(!h.has_edge(0, 2)); // 1-4
        assert!(h.has_edge(1, 2) == g.has_edge(2, 4));
    }

    #[test]
    fn weights_total() {
        let w = Weights::from_vec(vec![5, 1, 2]);
        assert_eq!(w.total(&VertexSet::from_iter(3, [0, 2])), 7);
        assert_eq!(w.total(&VertexSet::empty(3)), 0);
    }
}
