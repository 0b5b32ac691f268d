//! Undirected graphs on `{1..n}` as adjacency bitmasks, with maximal clique
//! enumeration (Bron-Kerbosch with pivoting).

use serde::{Deserialize, Serialize};

use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    /// adj[v - 1] = neighbors of v as a vertex set; no loops.
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        let full = VertexSet::full(n);
        for v in 1..=n {
            g.adj[v - 1] = full.without(v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j && i >= 1 && j >= 1 && i <= self.n && j <= self.n);
        self.adj[i - 1] = self.adj[i - 1].with(j);
        self.adj[j - 1] = self.adj[j - 1].with(i);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i - 1].contains(j)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    /// Edges as 2-element vertex sets, ascending.
    pub fn edges(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in self.adj[i - 1].iter() {
                if j > i {
                    out.push(VertexSet::singleton(i).with(j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Is every pair of the clique's vertices adjacent?
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset_of(self.adj[v - 1]))
    }

    /// All maximal cliques, including isolated vertices as singletons.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(
            VertexSet::EMPTY,
            VertexSet::full(self.n),
            VertexSet::EMPTY,
            &mut out,
        );
        out.sort_unstable();
        out
    }

    fn bron_kerbosch(&self, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        // pivot with most neighbors inside p
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(self.adj[u - 1]).len())
            .expect("p or x nonempty");
        let mut p = p;
        let mut x = x;
        for v in p.difference(self.adj[pivot - 1]).iter() {
            let nv = self.adj[v - 1];
            self.bron_kerbosch(r.with(v), p.intersection(nv), x.intersection(nv), out);
            p = p.without(v);
            x = x.with(v);
        }
    }
}
