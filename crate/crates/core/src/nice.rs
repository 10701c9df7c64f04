//! (l,k)-nice graphs: construction, recognition and enumeration; their line
//! graphs (cycles with glued houses); the house-path graphs Q(r; a) and the
//! determinant recurrence q(r; a).
//!
//! An (l,k)-nice graph is a cycle of length l >= max(12k, 15) with one
//! 1-hub, the first 2-hub at distance 4 from it, and each later 2-hub at
//! distance 4 or 6 from the previous one.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{line_graph, sunlike_profile, Graph};

/// The parameters that uniquely name an (l,k)-nice graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NiceDescriptor {
    #[serde(rename = "ell")]
    pub ell: usize,
    pub k: usize,
    /// Gap j is the cycle distance from 2-hub j to 2-hub j+1; the distance
    /// from the 1-hub to the first 2-hub is fixed at 4.
    pub gaps: Vec<usize>,
}

impl NiceDescriptor {
    pub fn new(ell: usize, k: usize, gaps: Vec<usize>) -> Result<Self> {
        let d = NiceDescriptor { ell, k, gaps };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 1 {
            return Err(Error::Params("nice graphs need k >= 1".into()));
        }
        let min_ell = (12 * self.k).max(15);
        if self.ell < min_ell {
            return Err(Error::Params(format!(
                "nice graphs need ell >= max(12k, 15) = {min_ell}, got ell = {}",
                self.ell
            )));
        }
        if self.gaps.len() != self.k - 1 {
            return Err(Error::Params(format!(
                "expected {} gaps for k = {}, got {}",
                self.k - 1,
                self.k,
                self.gaps.len()
            )));
        }
        if let Some(bad) = self.gaps.iter().find(|&&g| g != 4 && g != 6) {
            return Err(Error::Params(format!("gap {bad} outside {{4, 6}}")));
        }
        // With ell >= 12k the hub positions 0, 4, 4+g_2, ... are distinct and
        // stay in the near half of the cycle; check distinctness anyway.
        let last = self.hub_positions().pop().expect("k >= 1");
        if last >= self.ell {
            return Err(Error::Params("hub positions wrap around the cycle".into()));
        }
        Ok(())
    }

    /// Cycle positions of the 2-hubs (the 1-hub sits at position 0).
    pub fn hub_positions(&self) -> Vec<usize> {
        let mut pos = vec![4];
        for &g in &self.gaps {
            pos.push(pos.last().expect("nonempty") + g);
        }
        pos
    }

    /// n = l + 2k + 1.
    pub fn vertex_count(&self) -> usize {
        self.ell + 2 * self.k + 1
    }
}

/// Build the nice graph: cycle vertices 0..l, one leaf at position 0, two
/// leaves at each 2-hub position, leaves appended in hub order.
pub fn build_nice(d: &NiceDescriptor) -> Result<Graph> {
    d.validate()?;
    let ell = d.ell;
    let mut edges: Vec<(usize, usize)> = (0..ell).map(|i| (i, (i + 1) % ell)).collect();
    let mut next = ell;
    edges.push((0, next));
    next += 1;
    for p in d.hub_positions() {
        edges.push((p, next));
        edges.push((p, next + 1));
        next += 2;
    }
    Graph::new(next, edges)
}

/// Recognize a nice graph up to isomorphism, trying both orientations of
/// the cycle anchored at the 1-hub. Returns the unique descriptor if any.
pub fn recognize_nice(g: &Graph) -> Option<NiceDescriptor> {
    let profile = sunlike_profile(g)?;
    let ell = profile.cycle_length;
    let one_hubs: Vec<usize> = profile
        .hub_positions
        .iter()
        .filter(|&&(_, c)| c == 1)
        .map(|&(p, _)| p)
        .collect();
    let two_hubs: Vec<usize> = profile
        .hub_positions
        .iter()
        .filter(|&&(_, c)| c == 2)
        .map(|&(p, _)| p)
        .collect();
    let k = two_hubs.len();
    if one_hubs.len() != 1 || k < 1 || one_hubs.len() + k != profile.hub_positions.len() {
        return None;
    }
    if ell < (12 * k).max(15) {
        return None;
    }
    let anchor = one_hubs[0];
    for forward in [true, false] {
        let mut dists: Vec<usize> = two_hubs
            .iter()
            .map(|&p| {
                if forward {
                    (p + ell - anchor) % ell
                } else {
                    (anchor + ell - p) % ell
                }
            })
            .collect();
        dists.sort_unstable();
        if dists[0] != 4 {
            continue;
        }
        let gaps: Vec<usize> = dists.windows(2).map(|w| w[1] - w[0]).collect();
        if gaps.iter().all(|&g| g == 4 || g == 6) {
            return NiceDescriptor::new(ell, k, gaps).ok();
        }
    }
    None
}

/// All 2^(k-1) descriptors with the given parameters, in lexicographic gap
/// order (4 before 6).
pub fn enumerate_nice(ell: usize, k: usize) -> Result<Vec<NiceDescriptor>> {
    if k < 1 {
        return Err(Error::Params("k >= 1 required".into()));
    }
    if ell < (12 * k).max(15) {
        return Err(Error::Params(format!(
            "ell >= max(12k, 15) required, got ell = {ell}, k = {k}"
        )));
    }
    let count = 1usize << (k - 1);
    let mut out = Vec::with_capacity(count);
    for mask in 0..count {
        let gaps: Vec<usize> = (0..k - 1)
            .map(|j| {
                if mask & (1 << (k - 2 - j)) == 0 {
                    4
                } else {
                    6
                }
            })
            .collect();
        out.push(NiceDescriptor::new(ell, k, gaps)?);
    }
    Ok(out)
}

/// A path of length r with a 2-house on each a_i-th edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HousePathSpec {
    /// Path length; r = -1 denotes the graph with no vertices.
    pub r: i64,
    /// Increasing 1-based edge indices, consecutive entries differing by >= 2.
    pub houses: Vec<u64>,
}

impl HousePathSpec {
    pub fn new(r: i64, houses: Vec<u64>) -> Result<Self> {
        let s = HousePathSpec { r, houses };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.r < -1 {
            return Err(Error::Params(format!("path length {} < -1", self.r)));
        }
        if self.r == -1 && !self.houses.is_empty() {
            return Err(Error::Params("Q(-1) admits no houses".into()));
        }
        for (i, &a) in self.houses.iter().enumerate() {
            if a < 1 {
                return Err(Error::Params("house indices are 1-based".into()));
            }
            if a as i64 > self.r {
                return Err(Error::Params(format!(
                    "house on edge {a} beyond path length {}",
                    self.r
                )));
            }
            if i > 0 && a < self.houses[i - 1] + 2 {
                return Err(Error::Params(format!(
                    "house indices must increase by at least 2: {} then {a}",
                    self.houses[i - 1]
                )));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        ((self.r + 1) as usize) + 2 * self.houses.len()
    }
}

/// Build Q(r; a_1, ..., a_k): path vertices 0..=r, plus two external house
/// vertices per a_i, fully joined to the endpoints of the a_i-th edge.
pub fn build_house_path(spec: &HousePathSpec) -> Result<Graph> {
    spec.validate()?;
    if spec.r == -1 {
        return Ok(Graph::empty(0));
    }
    let r = spec.r as usize;
    let mut edges: Vec<(usize, usize)> = (0..r).map(|i| (i, i + 1)).collect();
    let mut next = r + 1;
    for &a in &spec.houses {
        let (u, v) = (a as usize - 1, a as usize);
        let (x, y) = (next, next + 1);
        edges.extend_from_slice(&[(u, x), (v, x), (u, y), (v, y), (x, y)]);
        next += 2;
    }
    Graph::new(next, edges)
}

/// q(r; a_1, ..., a_k) evaluated purely by the recurrence:
/// q(-1) = 1, q(0) = 0;
/// r - a_k >= 2 (or k = 0):  q(r; a) = -q(r-2; a);
/// r - a_k  = 1:             q(r; a) = q(r-2; a') + 2 q(r-3; a');
/// r = a_k:                  q(r; a) = -2 q(r-1; a') - 3 q(r-2; a'),
/// where a' drops the last house.
pub fn q_recurrence(spec: &HousePathSpec) -> Result<BigInt> {
    spec.validate()?;
    let mut memo: HashMap<(i64, usize), BigInt> = HashMap::new();
    Ok(q_eval(spec.r, spec.houses.len(), &spec.houses, &mut memo))
}

fn q_eval(r: i64, k: usize, houses: &[u64], memo: &mut HashMap<(i64, usize), BigInt>) -> BigInt {
    if let Some(v) = memo.get(&(r, k)) {
        return v.clone();
    }
    let value = if k == 0 {
        match r {
            -1 => BigInt::from(1),
            0 => BigInt::from(0),
            _ => -q_eval(r - 2, 0, houses, memo),
        }
    } else {
        let a_k = houses[k - 1] as i64;
        if r - a_k >= 2 {
            -q_eval(r - 2, k, houses, memo)
        } else if r - a_k == 1 {
            q_eval(r - 2, k - 1, houses, memo) + 2 * q_eval(r - 3, k - 1, houses, memo)
        } else {
            debug_assert_eq!(r, a_k);
            -2 * q_eval(r - 1, k - 1, houses, memo) - 3 * q_eval(r - 2, k - 1, houses, memo)
        }
    };
    memo.insert((r, k), value.clone());
    value
}

/// Closed form for q when every a_i is odd:
/// 2k(-1)^(r/2+1) for even r, (2k+1)(-1)^((r+1)/2) for odd r.
pub fn q_closed_form(r: i64, k: u64) -> BigInt {
    if r % 2 == 0 {
        let sign = if (r / 2 + 1) % 2 == 0 { 1 } else { -1 };
        BigInt::from(2 * k as i64 * sign)
    } else {
        let sign = if ((r + 1) / 2) % 2 == 0 { 1 } else { -1 };
        BigInt::from((2 * k as i64 + 1) * sign)
    }
}

/// The line graph of a nice graph, with its house structure verified: one
/// 1-house, k 2-houses, and consecutive house distances 3 or 5 around the
/// cycle. A verification failure is a construction bug and panics.
pub fn line_of_nice(d: &NiceDescriptor) -> Result<Graph> {
    let g = build_nice(d)?;
    let lg = line_graph(&g);
    verify_house_structure(&lg, d);
    Ok(lg)
}

fn verify_house_structure(lg: &Graph, d: &NiceDescriptor) {
    let n = lg.vertex_count();
    assert_eq!(n, d.vertex_count(), "line graph order mismatch");
    let adj = lg.adjacency_lists();
    let degs = lg.degrees();
    // Tips of 1-houses: degree-2 vertices whose neighbours are adjacent.
    let tips: Vec<usize> = (0..n)
        .filter(|&v| degs[v] == 2 && lg.has_edge(adj[v][0], adj[v][1]))
        .collect();
    assert_eq!(tips.len(), 1, "expected exactly one 1-house");
    // External pairs of 2-houses: adjacent degree-3 vertices with equal
    // closed neighbourhoods.
    let mut externals = Vec::new();
    for v in 0..n {
        if degs[v] != 3 {
            continue;
        }
        for &u in &adj[v] {
            if u > v && degs[u] == 3 {
                let mut cv: Vec<usize> = adj[v].iter().copied().filter(|&w| w != u).collect();
                let mut cu: Vec<usize> = adj[u].iter().copied().filter(|&w| w != v).collect();
                cv.sort_unstable();
                cu.sort_unstable();
                if cv == cu {
                    externals.push((v, u));
                }
            }
        }
    }
    assert_eq!(externals.len(), d.k, "expected k 2-houses");
    // Removing tips and external pairs must leave the l-cycle.
    let mut drop = vec![false; n];
    drop[tips[0]] = true;
    for &(a, b) in &externals {
        drop[a] = true;
        drop[b] = true;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !drop[v]).collect();
    let core = lg.induced(&rest);
    assert_eq!(core.vertex_count(), d.ell, "core cycle length mismatch");
    assert!(
        core.edge_count() == d.ell && core.degrees().iter().all(|&x| x == 2) && core.is_connected(),
        "house removal must leave a cycle"
    );
    // Locate each house by its pair of internal vertices on the core cycle
    // and check the consecutive distances: k of them are 3 or 5, plus one
    // long way around.
    let core_pos = {
        let core_adj = core.adjacency_lists();
        let mut order = vec![0usize];
        let mut prev = 0usize;
        let mut cur = core_adj[0][0];
        while cur != 0 {
            order.push(cur);
            let nxt = if core_adj[cur][0] == prev {
                core_adj[cur][1]
            } else {
                core_adj[cur][0]
            };
            prev = cur;
            cur = nxt;
        }
        let mut pos = vec![usize::MAX; core.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    };
    let to_core = {
        let mut map = vec![usize::MAX; n];
        for (i, &v) in rest.iter().enumerate() {
            map[v] = i;
        }
        map
    };
    let mut starts = Vec::new();
    let tip_internals: Vec<usize> = adj[tips[0]].clone();
    let mut internal_sets: Vec<Vec<usize>> = vec![tip_internals];
    for &(a, _) in &externals {
        internal_sets.push(adj[a].iter().copied().filter(|&w| !drop[w]).collect());
    }
    let ell = d.ell;
    for ints in internal_sets {
        assert_eq!(ints.len(), 2, "house has two internal vertices");
        let p0 = core_pos[to_core[ints[0]]];
        let p1 = core_pos[to_core[ints[1]]];
        let start = if (p0 + 1) % ell == p1 {
            p0
        } else if (p1 + 1) % ell == p0 {
            p1
        } else {
            panic!("house internals not adjacent on the core cycle");
        };
        starts.push(start);
    }
    starts.sort_unstable();
    let mut dists = Vec::new();
    for i in 0..starts.len() {
        let next = starts[(i + 1) % starts.len()];
        dists.push((next + ell - (starts[i] + 1)) % ell);
    }
    let short: Vec<usize> = dists.iter().copied().filter(|&x| x == 3 || x == 5).collect();
    assert_eq!(short.len(), d.k, "k consecutive house distances of 3 or 5");
    assert_eq!(
        dists.iter().filter(|&&x| x > 5).count(),
        1,
        "one long distance around the cycle"
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;

    fn fig1() -> NiceDescriptor {
        NiceDescriptor::new(46, 3, vec![6, 4]).unwrap()
    }

    #[test]
    fn build_examples() {
        let g = build_nice(&NiceDescriptor::new(15, 1, vec![]).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 18);
        assert_eq!(g.edge_count(), 18);

        let g = build_nice(&fig1()).unwrap();
        assert_eq!(g.vertex_count(), 53);
        assert_eq!(g.edge_count(), 53);
        let p = sunlike_profile(&g).unwrap();
        assert_eq!(p.cycle_length, 46);
        assert_eq!(p.i_hub_counts.get(&1), Some(&1));
        assert_eq!(p.i_hub_counts.get(&2), Some(&3));
        // Hub distances from the 1-hub are 4, 10, 14.
        assert_eq!(fig1().hub_positions(), vec![4, 10, 14]);

        assert!(NiceDescriptor::new(20, 2, vec![4]).is_err());
    }

    #[test]
    fn bipartite_iff_even_cycle() {
        let even = build_nice(&NiceDescriptor::new(16, 1, vec![]).unwrap()).unwrap();
        assert!(even.is_bipartite());
        let odd = build_nice(&NiceDescriptor::new(15, 1, vec![]).unwrap()).unwrap();
        assert!(!odd.is_bipartite());
    }

    #[test]
    fn recognize_round_trip() {
        for ell in [15, 16, 24, 30] {
            for k in 1..=2 {
                if ell < (12 * k).max(15) {
                    continue;
                }
                for d in enumerate_nice(ell, k).unwrap() {
                    let g = build_nice(&d).unwrap();
                    assert_eq!(recognize_nice(&g), Some(d.clone()));
                }
            }
        }
    }

    #[test]
    fn recognize_rejects_near_misses() {
        // Cycle with a single leaf has no 2-hubs.
        let mut edges: Vec<(usize, usize)> = (0..15).map(|i| (i, (i + 1) % 15)).collect();
        edges.push((0, 15));
        let g = Graph::new(16, edges).unwrap();
        assert_eq!(recognize_nice(&g), None);

        // A 3-hub disqualifies.
        let mut edges: Vec<(usize, usize)> = (0..15).map(|i| (i, (i + 1) % 15)).collect();
        edges.push((0, 15));
        for j in 0..3 {
            edges.push((4, 16 + j));
        }
        let g = Graph::new(19, edges).unwrap();
        assert_eq!(recognize_nice(&g), None);
    }

    #[test]
    fn recognize_relabelled() {
        // recognition is isomorphism-invariant: reverse every vertex label.
        let d = NiceDescriptor::new(16, 1, vec![]).unwrap();
        let g = build_nice(&d).unwrap();
        let n = g.vertex_count();
        let h = Graph::new(n, g.edges().iter().map(|&(a, b)| (n - 1 - a, n - 1 - b))).unwrap();
        assert_eq!(recognize_nice(&h), Some(d));
    }

    #[test]
    fn enumeration_counts_and_distinctness() {
        assert_eq!(enumerate_nice(15, 1).unwrap().len(), 1);
        let ds = enumerate_nice(46, 3).unwrap();
        assert_eq!(ds.len(), 4);
        let ds = enumerate_nice(50, 4).unwrap();
        assert_eq!(ds.len(), 8);
        let mut keys: Vec<Vec<u8>> = Vec::new();
        for d in &ds {
            let g = build_nice(d).unwrap();
            // Too big for canonical forms; compare sunlike gap signatures and
            // spot-check small instances below.
            assert_eq!(g.vertex_count(), d.vertex_count());
            keys.push(format!("{:?}", d.gaps).into_bytes());
        }
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 8);
        // Canonical-key distinctness at a desk-scale instance.
        let small: Vec<Vec<u8>> = enumerate_nice(24, 2)
            .unwrap()
            .iter()
            .map(|d| {
                let g = build_nice(d).unwrap();
                assert!(g.vertex_count() <= 16);
                canonical_key(&g)
            })
            .collect();
        assert_ne!(small[0], small[1]);
    }

    #[test]
    fn house_path_examples() {
        let q = build_house_path(&HousePathSpec::new(13, vec![3, 7, 13]).unwrap()).unwrap();
        assert_eq!(q.vertex_count(), 20);
        let q0 = build_house_path(&HousePathSpec::new(0, vec![]).unwrap()).unwrap();
        assert_eq!(q0.vertex_count(), 1);
        let qm1 = build_house_path(&HousePathSpec::new(-1, vec![]).unwrap()).unwrap();
        assert_eq!(qm1.vertex_count(), 0);
        assert!(HousePathSpec::new(5, vec![2, 3]).is_err());
        assert!(HousePathSpec::new(2, vec![3]).is_err());
    }

    #[test]
    fn q_recurrence_examples() {
        let q = |r: i64, a: &[u64]| q_recurrence(&HousePathSpec::new(r, a.to_vec()).unwrap()).unwrap();
        assert_eq!(q(-1, &[]), BigInt::from(1));
        assert_eq!(q(0, &[]), BigInt::from(0));
        assert_eq!(q(3, &[3]), BigInt::from(3));
        assert_eq!(q(4, &[3]), BigInt::from(-2));
    }

    #[test]
    fn q_closed_form_examples() {
        assert_eq!(q_closed_form(5, 1), BigInt::from(-3));
        assert_eq!(q_closed_form(4, 1), BigInt::from(-2));
        assert_eq!(q_closed_form(0, 0), BigInt::from(0));
        assert_eq!(q_closed_form(-1, 0), BigInt::from(1));
    }

    #[test]
    fn line_of_nice_structure() {
        let lg = line_of_nice(&fig1()).unwrap();
        assert_eq!(lg.vertex_count(), 53);
        let lg = line_of_nice(&NiceDescriptor::new(18, 1, vec![]).unwrap()).unwrap();
        assert_eq!(lg.vertex_count(), 21);
        assert!(lg.is_connected());
    }
}
