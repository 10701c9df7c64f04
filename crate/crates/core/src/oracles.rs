//! Independent combinatorial oracles for the characteristic coefficients:
//! exhaustive sums over spanning forests, TU-subgraphs and elementary
//! subgraphs. These deliberately avoid linear algebra so they can anchor
//! the exact-spectra code.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Edge-subset enumerations are correctness anchors, not production paths.
pub const MAX_ORACLE_EDGES: usize = 22;

fn check_edge_cap(g: &Graph) -> Result<()> {
    if g.edge_count() > MAX_ORACLE_EDGES {
        return Err(Error::CapExceeded(format!(
            "subset oracle supports at most {MAX_ORACLE_EDGES} edges, got {}",
            g.edge_count()
        )));
    }
    Ok(())
}

/// Union-find over vertices with parity to the root and a per-component
/// cycle flag; unions are undone in reverse order via the journal.
struct ParityDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    /// parity of the path to the parent
    parity: Vec<u8>,
    cycle: Vec<bool>,
    journal: Vec<Undo>,
}

enum Undo {
    Union { child: usize, parent: usize },
    Cycle { root: usize },
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        ParityDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            parity: vec![0; n],
            cycle: vec![false; n],
            journal: Vec::new(),
        }
    }

    fn find(&self, mut v: usize) -> (usize, u8) {
        let mut p = 0;
        while self.parent[v] != v {
            p ^= self.parity[v];
            v = self.parent[v];
        }
        (v, p)
    }

    fn checkpoint(&self) -> usize {
        self.journal.len()
    }

    fn rollback(&mut self, mark: usize) {
        while self.journal.len() > mark {
            match self.journal.pop().expect("journal nonempty") {
                Undo::Union { child, parent } => {
                    self.parent[child] = child;
                    self.parity[child] = 0;
                    self.size[parent] -= self.size[child];
                }
                Undo::Cycle { root } => self.cycle[root] = false,
            }
        }
    }

    /// Add edge (u, v). `Some(true)` if it closed an odd cycle, `Some(false)`
    /// for a plain merge, `None` if it must be rejected under `rules`.
    fn add_edge(&mut self, u: usize, v: usize, rules: CycleRules) -> Option<bool> {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            let odd = pu == pv;
            match rules {
                CycleRules::Forest => None,
                CycleRules::OddUnicyclic => {
                    if !odd || self.cycle[ru] {
                        None
                    } else {
                        self.cycle[ru] = true;
                        self.journal.push(Undo::Cycle { root: ru });
                        Some(true)
                    }
                }
            }
        } else {
            if matches!(rules, CycleRules::OddUnicyclic) && self.cycle[ru] && self.cycle[rv] {
                return None;
            }
            let (big, small, p_small) = if self.size[ru] >= self.size[rv] {
                (ru, rv, pu ^ pv ^ 1)
            } else {
                (rv, ru, pu ^ pv ^ 1)
            };
            self.parent[small] = big;
            self.parity[small] = p_small;
            self.size[big] += self.size[small];
            if self.cycle[small] && !self.cycle[big] {
                self.cycle[big] = true;
                self.journal.push(Undo::Cycle { root: big });
            }
            self.journal.push(Undo::Union {
                child: small,
                parent: big,
            });
            Some(false)
        }
    }
}

#[derive(Clone, Copy)]
enum CycleRules {
    Forest,
    OddUnicyclic,
}

fn subset_buckets(g: &Graph, rules: CycleRules) -> Result<(Vec<BigInt>, Vec<u64>)> {
    check_edge_cap(g)?;
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut alpha = vec![BigInt::zero(); m + 1];
    let mut count = vec![0u64; m + 1];
    let mut dsu = ParityDsu::new(n);
    let edges: Vec<(usize, usize)> = g.edges().to_vec();

    fn rec(
        idx: usize,
        chosen: usize,
        edges: &[(usize, usize)],
        dsu: &mut ParityDsu,
        rules: CycleRules,
        alpha: &mut [BigInt],
        count: &mut [u64],
    ) {
        if idx == edges.len() {
            let mut a = BigInt::from(1);
            for v in 0..dsu.parent.len() {
                if dsu.parent[v] == v {
                    if dsu.cycle[v] {
                        a *= 4;
                    } else {
                        a *= BigInt::from(dsu.size[v] as u64);
                    }
                }
            }
            alpha[chosen] += a;
            count[chosen] += 1;
            return;
        }
        // Exclude this edge.
        rec(idx + 1, chosen, edges, dsu, rules, alpha, count);
        // Include it when the component rules allow.
        let (u, v) = edges[idx];
        let mark = dsu.checkpoint();
        if dsu.add_edge(u, v, rules).is_some() {
            rec(idx + 1, chosen + 1, edges, dsu, rules, alpha, count);
            dsu.rollback(mark);
        }
    }

    rec(0, 0, &edges, &mut dsu, rules, &mut alpha, &mut count);
    Ok((alpha, count))
}

/// Sums of alpha over spanning forests with i edges, for i = 0..=m.
pub fn laplacian_coefficients_oracle(g: &Graph) -> Result<Vec<BigInt>> {
    Ok(subset_buckets(g, CycleRules::Forest)?.0)
}

/// Sum of alpha over spanning forests with exactly `i` edges, where alpha is
/// the product of the tree component orders.
pub fn laplacian_coefficient_oracle(g: &Graph, i: usize) -> Result<BigInt> {
    if i > g.edge_count() {
        return Err(Error::Precondition(format!(
            "i = {i} exceeds edge count {}",
            g.edge_count()
        )));
    }
    Ok(laplacian_coefficients_oracle(g)?.swap_remove(i))
}

/// Sums of alpha over TU-subgraphs with i edges, for i = 0..=m.
pub fn signless_coefficients_oracle(g: &Graph) -> Result<Vec<BigInt>> {
    Ok(subset_buckets(g, CycleRules::OddUnicyclic)?.0)
}

/// Sum of alpha over TU-subgraphs (components trees or odd-unicyclic) with
/// exactly `i` edges, where alpha = 4^c times the product of tree orders.
pub fn signless_coefficient_oracle(g: &Graph, i: usize) -> Result<BigInt> {
    if i > g.edge_count() {
        return Err(Error::Precondition(format!(
            "i = {i} exceeds edge count {}",
            g.edge_count()
        )));
    }
    Ok(signless_coefficients_oracle(g)?.swap_remove(i))
}

/// Exhaustive spanning tree count via acyclic subsets of n-1 edges.
pub fn spanning_tree_count(g: &Graph) -> Result<u64> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(1);
    }
    let (_, count) = subset_buckets(g, CycleRules::Forest)?;
    Ok(count.get(n - 1).copied().unwrap_or(0))
}

/// Sums of beta over elementary subgraphs on exactly i vertices (no sign
/// factor applied), for i = 0..=n. beta = (-1)^c (-2)^d over c edge
/// components and d cycle components.
pub fn elementary_buckets(g: &Graph) -> Vec<BigInt> {
    let n = g.vertex_count();
    let adj = g.adjacency_lists();
    let mut buckets = vec![BigInt::zero(); n + 1];
    let mut state = ElementaryState {
        adj: &adj,
        decided: vec![false; n],
        allow_skip: true,
        acc: Vec::new(),
    };
    state.recurse(0, &BigInt::from(1), &mut |covered, beta| {
        buckets[covered] += beta;
    });
    buckets
}

/// Sum of beta over elementary subgraphs covering every vertex (0 when none
/// exists); this is the signed determinant expansion of the adjacency matrix.
pub fn spanning_elementary_sum(g: &Graph) -> BigInt {
    let n = g.vertex_count();
    let adj = g.adjacency_lists();
    let mut total = BigInt::zero();
    let mut state = ElementaryState {
        adj: &adj,
        decided: vec![false; n],
        allow_skip: false,
        acc: Vec::new(),
    };
    state.recurse(0, &BigInt::from(1), &mut |covered, beta| {
        debug_assert_eq!(covered, n);
        total += beta;
    });
    total
}

/// Sum over elementary subgraphs on exactly `i` vertices of (-1)^i beta.
pub fn adjacency_coefficient_oracle(g: &Graph, i: usize) -> Result<BigInt> {
    if i > g.vertex_count() {
        return Err(Error::Precondition(format!(
            "i = {i} exceeds vertex count {}",
            g.vertex_count()
        )));
    }
    let b = elementary_buckets(g).swap_remove(i);
    Ok(if i % 2 == 0 { b } else { -b })
}

struct ElementaryState<'a> {
    adj: &'a [Vec<usize>],
    decided: Vec<bool>,
    allow_skip: bool,
    /// scratch stack for the cycle search
    acc: Vec<usize>,
}

impl ElementaryState<'_> {
    /// Visit completed assignments; `covered` counts vertices in components.
    fn recurse(&mut self, covered: usize, beta: &BigInt, emit: &mut impl FnMut(usize, &BigInt)) {
        let v = match self.decided.iter().position(|&d| !d) {
            None => {
                emit(covered, beta);
                return;
            }
            Some(v) => v,
        };
        self.decided[v] = true;
        if self.allow_skip {
            self.recurse(covered, beta, emit);
        }
        // Edge component {v, u} for each undecided neighbour u.
        for i in 0..self.adj[v].len() {
            let u = self.adj[v][i];
            if self.decided[u] {
                continue;
            }
            self.decided[u] = true;
            let b = -beta;
            self.recurse(covered + 2, &b, emit);
            self.decided[u] = false;
        }
        // Cycle components through v; v is the smallest vertex of the cycle,
        // and the orientation is fixed by first neighbour < last neighbour.
        let base = self.acc.len();
        self.cycle_search(v, v, base, covered, beta, emit);
        self.decided[v] = false;
    }

    fn cycle_search(
        &mut self,
        v: usize,
        cur: usize,
        base: usize,
        covered: usize,
        beta: &BigInt,
        emit: &mut impl FnMut(usize, &BigInt),
    ) {
        for i in 0..self.adj[cur].len() {
            let w = self.adj[cur][i];
            if w == v {
                // Close the cycle: length >= 3 and canonical direction.
                if self.acc.len() >= base + 2 && self.acc[base] < *self.acc.last().expect("nonempty") {
                    let b = beta * BigInt::from(-2);
                    let len = self.acc.len() - base + 1;
                    self.recurse(covered + len, &b, emit);
                }
                continue;
            }
            if self.decided[w] {
                continue;
            }
            self.decided[w] = true;
            self.acc.push(w);
            self.cycle_search(v, w, base, covered, beta, emit);
            self.acc.pop();
            self.decided[w] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_standard, complete, cycle, StandardKind};

    #[test]
    fn laplacian_oracle_examples() {
        let k3 = complete(3);
        // Empty forest.
        assert_eq!(laplacian_coefficient_oracle(&k3, 0).unwrap(), BigInt::from(1));
        // Three spanning trees of K_3, each alpha = 3.
        assert_eq!(laplacian_coefficient_oracle(&k3, 2).unwrap(), BigInt::from(9));
        // Connected g at i = n-1 gives n * #spanning trees.
        let k4 = complete(4);
        assert_eq!(
            laplacian_coefficient_oracle(&k4, 3).unwrap(),
            BigInt::from(4 * 16)
        );
    }

    #[test]
    fn signless_oracle_examples() {
        let k3 = complete(3);
        // The triangle itself is the only 3-edge TU-subgraph, alpha = 4.
        assert_eq!(signless_coefficient_oracle(&k3, 3).unwrap(), BigInt::from(4));
        assert_eq!(signless_coefficient_oracle(&k3, 0).unwrap(), BigInt::from(1));
        // Bipartite graphs admit no spanning odd-unicyclic subgraph.
        let c4 = cycle(4);
        assert_eq!(signless_coefficient_oracle(&c4, 4).unwrap(), BigInt::from(0));
        // ... but connected bipartite graphs do have spanning trees.
        assert_ne!(signless_coefficient_oracle(&c4, 3).unwrap(), BigInt::from(0));
    }

    #[test]
    fn adjacency_oracle_examples() {
        let k3 = complete(3);
        // Single edges are the only 2-vertex elementary subgraphs.
        for g in [&k3, &cycle(5), &complete(4)] {
            assert_eq!(
                adjacency_coefficient_oracle(g, 2).unwrap(),
                BigInt::from(-(g.edge_count() as i64))
            );
            assert_eq!(adjacency_coefficient_oracle(g, 1).unwrap(), BigInt::zero());
        }
        // The triangle: (-1)^3 * (-2) = 2.
        assert_eq!(adjacency_coefficient_oracle(&k3, 3).unwrap(), BigInt::from(2));
    }

    #[test]
    fn spanning_tree_examples() {
        assert_eq!(spanning_tree_count(&complete(4)).unwrap(), 16);
        assert_eq!(spanning_tree_count(&cycle(5)).unwrap(), 5);
        let star = build_standard(StandardKind::Star, 4).unwrap();
        assert_eq!(spanning_tree_count(&star).unwrap(), 1);
        // Disconnected graphs have none.
        let u = cycle(3).disjoint_union(&Graph::empty(1));
        assert_eq!(spanning_tree_count(&u).unwrap(), 0);
    }

    #[test]
    fn spanning_elementary_examples() {
        // C_5: only the full cycle covers all five vertices.
        assert_eq!(spanning_elementary_sum(&cycle(5)), BigInt::from(-2));
        // Isolated vertices cannot be covered.
        let u = cycle(4).disjoint_union(&Graph::empty(1));
        assert_eq!(spanning_elementary_sum(&u), BigInt::zero());
        // C_4: the 4-cycle (-2) plus two perfect matchings (+1 each).
        assert_eq!(spanning_elementary_sum(&cycle(4)), BigInt::zero());
        // Empty graph: the empty subgraph, beta = 1.
        assert_eq!(spanning_elementary_sum(&Graph::empty(0)), BigInt::from(1));
        // Single vertex: nothing can cover it.
        assert_eq!(spanning_elementary_sum(&Graph::empty(1)), BigInt::zero());
    }

    #[test]
    fn edge_cap_enforced() {
        let k8 = complete(8);
        assert!(matches!(
            laplacian_coefficient_oracle(&k8, 3),
            Err(Error::CapExceeded(_))
        ));
    }
}
