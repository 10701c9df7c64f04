//! Canonical forms for small graphs: iterated colour refinement followed by
//! a backtracking search over colour-respecting orderings, minimising the
//! packed upper-triangle adjacency bits.
//!
//! Keys are equal exactly for isomorphic graphs. Intended for small graphs
//! (the census and test corpora stay at or below 10 vertices); anything up
//! to 16 vertices is supported.

use crate::graph::Graph;
use crate::graph6;

const MAX_N: usize = 16;

/// Isomorphism-invariant vertex colours by iterated refinement on
/// (colour, sorted neighbour colours). Colour ids are assigned in sorted
/// signature order, so they are themselves invariants.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let adj = g.adjacency_lists();
    let mut color: Vec<usize> = g.degrees();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = adj[v].iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .drain(..)
            .map(|s| sorted.binary_search(&s).expect("own signature present"))
            .collect();
        if next == color {
            return color;
        }
        color = next;
    }
}

struct Search<'a> {
    adj_bits: Vec<u32>,
    cells: &'a [Vec<usize>],
    /// cell index for each position in the output ordering
    pos_cell: Vec<usize>,
    n: usize,
    best: Option<u128>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, perm: &mut Vec<usize>, used: &mut [bool], acc: u128) {
        let j = perm.len();
        if let Some(b) = self.best {
            // Prune whenever the placed prefix already exceeds the best.
            if acc > (b >> prefix_shift(self.n, j)) {
                return;
            }
        }
        if j == self.n {
            if self.best.map_or(true, |b| acc < b) {
                self.best = Some(acc);
                self.best_perm = perm.clone();
            }
            return;
        }
        let cell = &self.cells[self.pos_cell[j]];
        for &v in cell {
            if used[v] {
                continue;
            }
            let mut col: u128 = 0;
            for &u in perm.iter() {
                col = (col << 1) | u128::from(self.adj_bits[v] & (1 << u) != 0);
            }
            used[v] = true;
            perm.push(v);
            self.run(perm, used, (acc << j) | col);
            perm.pop();
            used[v] = false;
        }
    }
}

/// Bits contributed by positions `placed..n-1` (column j holds j bits).
fn prefix_shift(n: usize, placed: usize) -> u32 {
    ((placed..n).sum::<usize>()) as u32
}

/// The canonical relabelling of `g`: the colour-respecting ordering whose
/// adjacency bits are lexicographically smallest.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.vertex_count();
    assert!(n <= MAX_N, "canonical forms support at most {MAX_N} vertices");
    if n == 0 {
        return g.clone();
    }
    let color = refine_colors(g);
    let max_color = color.iter().copied().max().unwrap_or(0);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); max_color + 1];
    for (v, &c) in color.iter().enumerate() {
        cells[c].push(v);
    }
    cells.retain(|c| !c.is_empty());
    let mut pos_cell = Vec::with_capacity(n);
    for (ci, cell) in cells.iter().enumerate() {
        pos_cell.extend(std::iter::repeat(ci).take(cell.len()));
    }
    let mut adj_bits = vec![0u32; n];
    for &(a, b) in g.edges() {
        adj_bits[a] |= 1 << b;
        adj_bits[b] |= 1 << a;
    }
    let mut search = Search {
        adj_bits,
        cells: &cells,
        pos_cell,
        n,
        best: None,
        best_perm: Vec::new(),
    };
    search.run(&mut Vec::new(), &mut vec![false; n], 0);
    let perm = search.best_perm;
    let mut pos = vec![0usize; n];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    Graph::new(n, g.edges().iter().map(|&(a, b)| (pos[a], pos[b])))
        .expect("relabelling preserves simplicity")
}

/// A byte key equal for two graphs exactly when they are isomorphic
/// (the graph6 encoding of the canonical form).
pub fn canonical_key(g: &Graph) -> Vec<u8> {
    graph6::encode(&canonical_form(g)).into_bytes()
}
