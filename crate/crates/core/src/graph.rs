//! Finite simple undirected graphs and the structural classifiers the rest
//! of the toolkit is built on.
//!
//! Vertices are dense 0-based indices and edge lists are kept sorted
//! lexicographically, so equal graphs compare equal and every construction
//! is deterministic. Equality is labelled equality; isomorphism questions go
//! through [`crate::canon::canonical_key`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Build a graph from an edge list. Endpoints are normalized to `u < v`;
    /// self-loops and duplicate edges are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut es: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Construction(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::Construction(format!(
                    "edge ({a},{b}) outside vertex range 0..{n}"
                )));
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        if es.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Construction("duplicate edge".into()));
        }
        Ok(Graph { n, edges: es })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest contained vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Two-coloring per component; `None` if some component has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency_lists();
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Induced subgraph on `verts` (which need not be sorted); vertex i of
    /// the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]));
        Graph::new(verts.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Disjoint union; vertices of `other` are shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + self.n, b + self.n)));
        Graph::new(self.n + other.n, edges).expect("union of simple graphs is simple")
    }
}

/// The standard constructions used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    /// Cycle on `size >= 3` vertices.
    Cycle,
    /// Path with `size` edges (`size + 1` vertices).
    Path,
    /// Complete graph on `size` vertices.
    Complete,
    /// Star `K_{1,size}`: `size` leaves on one center.
    Star,
    /// Cocktailparty graph `CP(size)`: `K_{2*size}` minus a perfect matching.
    CocktailParty,
}

pub fn build_standard(kind: StandardKind, size: usize) -> Result<Graph> {
    match kind {
        StandardKind::Cycle => {
            if size < 3 {
                return Err(Error::Construction(format!(
                    "cycle needs size >= 3, got {size}"
                )));
            }
            Graph::new(size, (0..size).map(|i| (i, (i + 1) % size)))
        }
        StandardKind::Path => Graph::new(size + 1, (0..size).map(|i| (i, i + 1))),
        StandardKind::Complete => {
            Graph::new(size, (0..size).flat_map(|i| (i + 1..size).map(move |j| (i, j))))
        }
        StandardKind::Star => Graph::new(size + 1, (1..=size).map(|i| (0, i))),
        StandardKind::CocktailParty => {
            let n = 2 * size;
            Graph::new(
                n,
                (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| !(i % 2 == 0 && j == i + 1)),
            )
        }
    }
}

pub fn cycle(len: usize) -> Graph {
    build_standard(StandardKind::Cycle, len).expect("cycle length checked by caller")
}

pub fn complete(n: usize) -> Graph {
    build_standard(StandardKind::Complete, n).expect("complete graph is always valid")
}

/// The line graph: one vertex per edge of `g` (in sorted edge order), with
/// adjacency exactly when the two edges of `g` share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let es = g.edges();
    let m = es.len();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = es[i];
            let (c, d) = es[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    Graph::new(m, edges).expect("line graph of a simple graph is simple")
}

/// The generalised line graph `line(g; a_1, ..., a_n)`: the disjoint union
/// of `line(g)` and one cocktailparty graph `CP(a_i)` per vertex, plus all
/// edges between `CP(a_i)` and the line-graph vertices for edges at `v_i`.
pub fn generalized_line_graph(g: &Graph, a: &[usize]) -> Result<Graph> {
    if a.len() != g.vertex_count() {
        return Err(Error::Construction(format!(
            "need one multiplicity per vertex: got {} for {} vertices",
            a.len(),
            g.vertex_count()
        )));
    }
    let base = line_graph(g);
    let m = base.vertex_count();
    let mut edges: Vec<(usize, usize)> = base.edges().to_vec();
    let mut next = m;
    for (v, &av) in a.iter().enumerate() {
        let start = next;
        next += 2 * av;
        // CP(av) internally: all pairs except the matching (start+2t, start+2t+1).
        for i in start..start + 2 * av {
            for j in i + 1..start + 2 * av {
                if j == i + 1 && (i - start) % 2 == 0 {
                    continue;
                }
                edges.push((i, j));
            }
        }
        for (e_idx, &(x, y)) in g.edges().iter().enumerate() {
            if x == v || y == v {
                for w in start..start + 2 * av {
                    edges.push((e_idx, w));
                }
            }
        }
    }
    Graph::new(next, edges)
}

/// Classification of a connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentClass {
    Tree,
    EvenUnicyclic,
    OddUnicyclic,
    Other,
}

/// Classification of a component's 2-core, limited to the shapes the
/// bicyclic case analysis needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoCoreClass {
    Empty,
    Cycle,
    TwoCyclesJoinedByPath,
    Theta,
    Other,
}

#[derive(Debug, Clone)]
pub struct ComponentProfile {
    pub vertices: Vec<usize>,
    pub is_bipartite: bool,
    pub class: ComponentClass,
    pub unicyclic_cycle_length: Option<usize>,
    pub two_core_class: TwoCoreClass,
}

#[derive(Debug, Clone)]
pub struct StructuralProfile {
    pub degree_sequence: Vec<usize>,
    pub components: Vec<ComponentProfile>,
}

/// Vertices of the 2-core, found by iterated leaf deletion until minimum
/// degree >= 2.
pub fn two_core(g: &Graph) -> Vec<usize> {
    let adj = g.adjacency_lists();
    let mut deg = g.degrees();
    let mut alive = vec![true; g.vertex_count()];
    let mut queue: Vec<usize> = (0..g.vertex_count()).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in &adj[v] {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 {
                    queue.push(w);
                }
            }
        }
    }
    (0..g.vertex_count()).filter(|&v| alive[v]).collect()
}

fn classify_two_core(core: &Graph) -> TwoCoreClass {
    let n = core.vertex_count();
    if n == 0 {
        return TwoCoreClass::Empty;
    }
    if !core.is_connected() {
        return TwoCoreClass::Other;
    }
    let m = core.edge_count();
    let degs = core.degrees();
    if m == n && degs.iter().all(|&d| d == 2) {
        return TwoCoreClass::Cycle;
    }
    if m == n + 1 {
        let mut d3 = 0;
        let mut d4 = 0;
        let mut other = 0;
        for &d in &degs {
            match d {
                2 => {}
                3 => d3 += 1,
                4 => d4 += 1,
                _ => other += 1,
            }
        }
        if other == 0 && d4 == 1 && d3 == 0 {
            // Two cycles sharing a single vertex (path of length zero).
            return TwoCoreClass::TwoCyclesJoinedByPath;
        }
        if other == 0 && d4 == 0 && d3 == 2 {
            // Theta graphs are 2-edge-connected; two cycles joined by a
            // nonempty path have a bridge on that path.
            return if has_bridge(core) {
                TwoCoreClass::TwoCyclesJoinedByPath
            } else {
                TwoCoreClass::Theta
            };
        }
    }
    TwoCoreClass::Other
}

fn has_bridge(g: &Graph) -> bool {
    // Remove each edge in turn and test connectivity; fine at classifier scale.
    for skip in 0..g.edge_count() {
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &e)| e)
            .collect();
        let h = Graph::new(g.vertex_count(), edges).expect("edge subset of simple graph");
        if !h.is_connected() {
            return true;
        }
    }
    false
}

pub fn structural_profile(g: &Graph) -> StructuralProfile {
    let mut degree_sequence = g.degrees();
    degree_sequence.sort_unstable();
    let mut components = Vec::new();
    for verts in g.components() {
        let sub = g.induced(&verts);
        let nv = sub.vertex_count();
        let ne = sub.edge_count();
        let is_bipartite = sub.is_bipartite();
        let (class, cycle_len) = if ne + 1 == nv {
            (ComponentClass::Tree, None)
        } else if ne == nv {
            let core_verts = two_core(&sub);
            let len = core_verts.len();
            if is_bipartite {
                (ComponentClass::EvenUnicyclic, Some(len))
            } else {
                (ComponentClass::OddUnicyclic, Some(len))
            }
        } else {
            (ComponentClass::Other, None)
        };
        let core = sub.induced(&two_core(&sub));
        components.push(ComponentProfile {
            vertices: verts,
            is_bipartite,
            class,
            unicyclic_cycle_length: cycle_len,
            two_core_class: classify_two_core(&core),
        });
    }
    StructuralProfile {
        degree_sequence,
        components,
    }
}

/// A connected graph whose degree-1 deletion leaves a cycle, summarised by
/// the cycle length and the leaf count at each cycle position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunlikeProfile {
    pub cycle_length: usize,
    /// `(cycle position, leaf count)` for each hub, sorted by position.
    /// Positions are measured along the cycle from a deterministic root and
    /// orientation (smallest cycle vertex, towards its smaller neighbour).
    pub hub_positions: Vec<(usize, usize)>,
    /// Map from hub type i to the number of i-hubs.
    pub i_hub_counts: BTreeMap<usize, usize>,
}

/// `Some(profile)` exactly when `g` is sun-like: connected, and deleting all
/// its degree-1 vertices yields a cycle.
pub fn sunlike_profile(g: &Graph) -> Option<SunlikeProfile> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return None;
    }
    let degs = g.degrees();
    let rest: Vec<usize> = (0..g.vertex_count()).filter(|&v| degs[v] != 1).collect();
    if rest.len() < 3 {
        return None;
    }
    let sub = g.induced(&rest);
    if sub.edge_count() != sub.vertex_count() || sub.degrees().iter().any(|&d| d != 2) {
        return None;
    }
    if !sub.is_connected() {
        return None;
    }
    // Every deleted vertex is a leaf; its single neighbour must be on the cycle.
    let on_cycle = {
        let mut f = vec![false; g.vertex_count()];
        for &v in &rest {
            f[v] = true;
        }
        f
    };
    let adj = g.adjacency_lists();
    let mut leaf_count = vec![0usize; g.vertex_count()];
    for v in 0..g.vertex_count() {
        if degs[v] == 1 {
            let h = adj[v][0];
            if !on_cycle[h] {
                return None;
            }
            leaf_count[h] += 1;
        }
    }
    // Walk the cycle from the smallest vertex towards its smaller neighbour.
    let ell = rest.len();
    let root = rest[0];
    let cycle_neighbors: Vec<usize> = adj[root]
        .iter()
        .copied()
        .filter(|&w| on_cycle[w])
        .collect();
    let mut order = vec![root];
    let mut prev = root;
    let mut cur = *cycle_neighbors.iter().min().expect("cycle vertex has 2 cycle neighbours");
    while cur != root {
        order.push(cur);
        let next = adj[cur]
            .iter()
            .copied()
            .find(|&w| on_cycle[w] && w != prev)
            .expect("cycle vertex has 2 cycle neighbours");
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(order.len(), ell);
    let mut hub_positions = Vec::new();
    let mut i_hub_counts = BTreeMap::new();
    for (pos, &v) in order.iter().enumerate() {
        if leaf_count[v] > 0 {
            hub_positions.push((pos, leaf_count[v]));
            *i_hub_counts.entry(leaf_count[v]).or_insert(0) += 1;
        }
    }
    Some(SunlikeProfile {
        cycle_length: ell,
        hub_positions,
        i_hub_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_constructions() {
        let cp1 = build_standard(StandardKind::CocktailParty, 1).unwrap();
        assert_eq!(cp1.vertex_count(), 2);
        assert_eq!(cp1.edge_count(), 0);

        let s4 = build_standard(StandardKind::Star, 4).unwrap();
        assert_eq!(s4.vertex_count(), 5);
        assert_eq!(s4.edge_count(), 4);
        let mut ds = s4.degrees();
        ds.sort_unstable();
        assert_eq!(ds, vec![1, 1, 1, 1, 4]);

        let c46 = build_standard(StandardKind::Cycle, 46).unwrap();
        assert_eq!(c46.vertex_count(), 46);
        assert_eq!(c46.edge_count(), 46);
        assert!(c46.degrees().iter().all(|&d| d == 2));

        assert!(build_standard(StandardKind::Cycle, 2).is_err());
    }

    #[test]
    fn cocktail_party_structure() {
        let cp3 = build_standard(StandardKind::CocktailParty, 3).unwrap();
        assert_eq!(cp3.vertex_count(), 6);
        assert_eq!(cp3.edge_count(), 15 - 3);
        assert!(cp3.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn line_graph_examples() {
        // line(C_n) is a cycle of the same length.
        for n in [3usize, 5, 8] {
            let lg = line_graph(&cycle(n));
            assert_eq!(lg.vertex_count(), n);
            assert_eq!(lg.edge_count(), n);
            assert!(lg.degrees().iter().all(|&d| d == 2));
            assert!(lg.is_connected());
        }
        // line(K_{1,4}) = K_4.
        let star4 = build_standard(StandardKind::Star, 4).unwrap();
        assert_eq!(line_graph(&star4), complete(4));
        // line(path with 2 edges) = single edge.
        let p2 = build_standard(StandardKind::Path, 2).unwrap();
        assert_eq!(line_graph(&p2), Graph::new(2, [(0, 1)]).unwrap());
        // Edgeless input.
        assert_eq!(line_graph(&Graph::empty(4)).vertex_count(), 0);
    }

    #[test]
    fn line_graph_edge_count_formula() {
        // Number of line-graph edges is sum over vertices of C(deg, 2).
        let g = Graph::new(6, [(0, 1), (0, 2), (0, 3), (2, 3), (3, 4), (4, 5)]).unwrap();
        let expect: usize = g.degrees().iter().map(|&d| d * (d - 1) / 2).sum();
        assert_eq!(line_graph(&g).edge_count(), expect);
    }

    #[test]
    fn generalized_line_graph_examples() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(generalized_line_graph(&g, &[0, 0, 0, 0]).unwrap(), line_graph(&g));
        assert!(generalized_line_graph(&g, &[0, 0]).is_err());

        // Single edge with one CP(1): a path on 3 vertices.
        let e = Graph::new(2, [(0, 1)]).unwrap();
        let glg = generalized_line_graph(&e, &[1, 0]).unwrap();
        assert_eq!(glg.vertex_count(), 3);
        assert_eq!(glg.edges(), &[(0, 1), (0, 2)]);

        // Any a_i >= 1 produces a pair of vertices with identical neighbourhoods.
        let glg2 = generalized_line_graph(&g, &[2, 0, 1, 0]).unwrap();
        let adj = glg2.adjacency_lists();
        let mut found = false;
        for u in 0..glg2.vertex_count() {
            for v in u + 1..glg2.vertex_count() {
                if adj[u] == adj[v] {
                    found = true;
                }
            }
        }
        assert!(found, "expected two vertices with the same neighbourhood");
    }

    #[test]
    fn generalized_line_graph_edge_budget() {
        // 2 * a_i * deg(v_i) connecting edges per vertex, plus CP internals.
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let a = [1, 2, 0];
        let glg = generalized_line_graph(&g, &a).unwrap();
        let base = line_graph(&g).edge_count();
        let cp_internal: usize = a.iter().map(|&x| 2 * x * x.saturating_sub(1)).sum();
        let connecting: usize = a
            .iter()
            .enumerate()
            .map(|(v, &x)| 2 * x * g.degree(v))
            .sum();
        assert_eq!(glg.edge_count(), base + cp_internal + connecting);
    }

    #[test]
    fn structural_profile_examples() {
        let p = structural_profile(&cycle(5));
        assert_eq!(p.components.len(), 1);
        assert_eq!(p.components[0].class, ComponentClass::OddUnicyclic);
        assert_eq!(p.components[0].unicyclic_cycle_length, Some(5));
        assert_eq!(p.components[0].two_core_class, TwoCoreClass::Cycle);

        let star3 = build_standard(StandardKind::Star, 3).unwrap();
        let p = structural_profile(&star3);
        assert_eq!(p.components[0].class, ComponentClass::Tree);
        assert!(p.components[0].is_bipartite);
        assert_eq!(p.components[0].two_core_class, TwoCoreClass::Empty);

        // Theta graph: paths of lengths 1, 2, 2 between two vertices.
        let theta = Graph::new(4, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)]).unwrap();
        let p = structural_profile(&theta);
        assert_eq!(p.components[0].class, ComponentClass::Other);
        assert_eq!(p.components[0].two_core_class, TwoCoreClass::Theta);
    }

    #[test]
    fn two_core_shapes() {
        // Two triangles sharing a vertex.
        let fig8 = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let p = structural_profile(&fig8);
        assert_eq!(p.components[0].two_core_class, TwoCoreClass::TwoCyclesJoinedByPath);

        // Two triangles joined by a path of length 2.
        let dumbbell = Graph::new(
            8,
            [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 4)],
        )
        .unwrap();
        let p = structural_profile(&dumbbell);
        assert_eq!(p.components[0].two_core_class, TwoCoreClass::TwoCyclesJoinedByPath);

        let k4 = complete(4);
        let p = structural_profile(&k4);
        assert_eq!(p.components[0].two_core_class, TwoCoreClass::Other);
    }

    #[test]
    fn profile_of_disjoint_union_concatenates() {
        let a = cycle(4);
        let b = build_standard(StandardKind::Star, 2).unwrap();
        let u = a.disjoint_union(&b);
        let pu = structural_profile(&u);
        assert_eq!(pu.components.len(), 2);
        assert_eq!(pu.components[0].class, ComponentClass::EvenUnicyclic);
        assert_eq!(pu.components[1].class, ComponentClass::Tree);
    }

    #[test]
    fn sunlike_examples() {
        // C_6 is sun-like with zero hubs.
        let p = sunlike_profile(&cycle(6)).unwrap();
        assert_eq!(p.cycle_length, 6);
        assert!(p.hub_positions.is_empty());

        // A path is not sun-like.
        assert!(sunlike_profile(&build_standard(StandardKind::Path, 4).unwrap()).is_none());

        // Cycle with one leaf.
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5)]).unwrap();
        let p = sunlike_profile(&g).unwrap();
        assert_eq!(p.cycle_length, 5);
        assert_eq!(p.hub_positions.len(), 1);
        assert_eq!(p.i_hub_counts.get(&1), Some(&1));

        // Disconnected graphs are not sun-like.
        let u = cycle(3).disjoint_union(&Graph::empty(1));
        assert!(sunlike_profile(&u).is_none());
    }
}
