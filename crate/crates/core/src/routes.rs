//! Route and decorated-route enumeration oracles for Laplacian spectral
//! moments.
//!
//! An s-route is a cyclic sequence of s steps, each either walking along an
//! edge or waiting; signed route weights sum to trace(L^s). On sun-like
//! graphs with s below the cycle length, waits at hubs can be relabelled as
//! "look" steps, giving the decorated routes whose (unsigned) weights sum to
//! the same moment. Everything here is exhaustive enumeration at oracle
//! scale.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{sunlike_profile, Graph};

pub const MAX_ROUTE_LEN: usize = 8;
pub const MAX_ROUTE_VERTICES: usize = 10;

fn check_caps(g: &Graph, s: usize) -> Result<()> {
    if s > MAX_ROUTE_LEN || g.vertex_count() > MAX_ROUTE_VERTICES {
        return Err(Error::CapExceeded(format!(
            "route oracle supports s <= {MAX_ROUTE_LEN} and at most {MAX_ROUTE_VERTICES} vertices, got s = {s}, n = {}",
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Sum of w over all s-routes (`signed`, equals trace(L^s)) or of |w|
/// (unsigned, equals trace(|L|^s)); w is the product of deg(v_j) over the
/// waiting steps times (-1)^(walking steps) when signed.
pub fn enumerate_routes(g: &Graph, s: usize, signed: bool) -> Result<BigInt> {
    check_caps(g, s)?;
    let n = g.vertex_count();
    if s == 0 {
        return Ok(BigInt::from(n as u64));
    }
    let adj = g.adjacency_lists();
    let degs = g.degrees();
    let mut total = BigInt::zero();
    let mut seq = Vec::with_capacity(s);
    for start in 0..n {
        seq.push(start);
        route_dfs(&adj, &degs, s, signed, &mut seq, &mut total);
        seq.pop();
    }
    Ok(total)
}

fn route_dfs(
    adj: &[Vec<usize>],
    degs: &[usize],
    s: usize,
    signed: bool,
    seq: &mut Vec<usize>,
    total: &mut BigInt,
) {
    if seq.len() == s {
        // Final step returns (or waits) from the last vertex to the first.
        let last = *seq.last().expect("nonempty");
        let first = seq[0];
        let closes = last == first || adj[last].contains(&first);
        if !closes {
            return;
        }
        let mut w = BigInt::from(1);
        let mut walks = 0usize;
        for j in 0..s {
            let a = seq[j];
            let b = seq[(j + 1) % s];
            if a == b {
                w *= BigInt::from(degs[a] as u64);
            } else {
                walks += 1;
            }
        }
        if signed && walks % 2 == 1 {
            w = -w;
        }
        *total += w;
        return;
    }
    let v = *seq.last().expect("nonempty");
    seq.push(v);
    route_dfs(adj, degs, s, signed, seq, total);
    seq.pop();
    for i in 0..adj[v].len() {
        let w = adj[v][i];
        seq.push(w);
        route_dfs(adj, degs, s, signed, seq, total);
        seq.pop();
    }
}

/// One decorated route: a route on a sun-like graph together with look/wait
/// labels on its stationary hub steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecoratedRoute {
    /// Cyclic vertex sequence of length s.
    pub vertices: Vec<usize>,
    /// labels[j] applies to step j; `true` means "look" (only set at
    /// stationary hub steps).
    pub looks: Vec<bool>,
}

impl DecoratedRoute {
    /// Number of distinct decorated routes reachable by cyclic shifts and
    /// reversal; between 1 and 2s.
    pub fn multiplicity(&self) -> usize {
        let s = self.vertices.len();
        let mut seen = std::collections::HashSet::new();
        for rev in [false, true] {
            for shift in 0..s {
                let mut vs = Vec::with_capacity(s);
                let mut ls = Vec::with_capacity(s);
                for j in 0..s {
                    let src = (j + shift) % s;
                    vs.push(self.vertices[src]);
                    ls.push(self.looks[src]);
                }
                if rev {
                    // Reversing the cyclic order: step j of the reverse walks
                    // from vs[(s - j) % s] back; stationary labels follow
                    // their step.
                    let rv: Vec<usize> = (0..s).map(|j| vs[(s - j) % s]).collect();
                    let rl: Vec<bool> = (0..s).map(|j| ls[(s - 1 - j) % s]).collect();
                    seen.insert((rv, rl));
                } else {
                    seen.insert((vs, ls));
                }
            }
        }
        seen.len()
    }

    /// w(R) = 2^(waits at cycle vertices) * prod over looks of the hub type.
    pub fn weight(&self, leaf_count: &[usize], on_cycle: &[bool]) -> BigInt {
        let s = self.vertices.len();
        let mut w = BigInt::from(1);
        for j in 0..s {
            let a = self.vertices[j];
            let b = self.vertices[(j + 1) % s];
            if a != b {
                continue;
            }
            if self.looks[j] {
                w *= BigInt::from(leaf_count[a] as u64);
            } else if on_cycle[a] {
                w *= BigInt::from(2u64);
            }
        }
        w
    }

    /// Interaction counts per hub: looks plus leaf entries from that hub.
    pub fn interactions(&self, leaf_owner: &[Option<usize>]) -> std::collections::BTreeMap<usize, usize> {
        let s = self.vertices.len();
        let mut out = std::collections::BTreeMap::new();
        for j in 0..s {
            let a = self.vertices[j];
            let b = self.vertices[(j + 1) % s];
            if a == b && self.looks[j] {
                *out.entry(a).or_insert(0) += 1;
            } else if a != b {
                if let Some(hub) = leaf_owner[b] {
                    if hub == a {
                        *out.entry(a).or_insert(0) += 1;
                    }
                }
            }
        }
        out
    }
}

/// Enumerate all decorated s-routes of a sun-like graph. Requires s below
/// the cycle length (so walking steps pair up and the weights are unsigned).
pub fn decorated_routes(g: &Graph, s: usize) -> Result<Vec<DecoratedRoute>> {
    check_caps(g, s)?;
    let profile = sunlike_profile(g)
        .ok_or_else(|| Error::Precondition("decorated routes need a sun-like graph".into()))?;
    if s >= profile.cycle_length {
        return Err(Error::Precondition(format!(
            "decorated routes need s < cycle length, got s = {s}, ell = {}",
            profile.cycle_length
        )));
    }
    let n = g.vertex_count();
    let degs = g.degrees();
    let adj = g.adjacency_lists();
    let is_hub: Vec<bool> = (0..n).map(|v| degs[v] >= 3).collect();
    let mut out = Vec::new();
    if s == 0 {
        return Ok(out);
    }
    let mut seq: Vec<usize> = Vec::with_capacity(s);
    for start in 0..n {
        seq.push(start);
        decorated_dfs(&adj, &is_hub, s, &mut seq, &mut out);
        seq.pop();
    }
    Ok(out)
}

fn decorated_dfs(
    adj: &[Vec<usize>],
    is_hub: &[bool],
    s: usize,
    seq: &mut Vec<usize>,
    out: &mut Vec<DecoratedRoute>,
) {
    if seq.len() == s {
        let last = *seq.last().expect("nonempty");
        let first = seq[0];
        if !(last == first || adj[last].contains(&first)) {
            return;
        }
        // Expand label choices over stationary hub steps.
        let hub_stays: Vec<usize> = (0..s)
            .filter(|&j| seq[j] == seq[(j + 1) % s] && is_hub[seq[j]])
            .collect();
        for mask in 0u32..(1 << hub_stays.len()) {
            let mut looks = vec![false; s];
            for (b, &j) in hub_stays.iter().enumerate() {
                looks[j] = mask & (1 << b) != 0;
            }
            out.push(DecoratedRoute {
                vertices: seq.clone(),
                looks,
            });
        }
        return;
    }
    let v = *seq.last().expect("nonempty");
    seq.push(v);
    decorated_dfs(adj, is_hub, s, seq, out);
    seq.pop();
    for i in 0..adj[v].len() {
        let w = adj[v][i];
        seq.push(w);
        decorated_dfs(adj, is_hub, s, seq, out);
        seq.pop();
    }
}

/// Sum of w(R) over all decorated s-routes; must equal trace(L^s).
pub fn enumerate_decorated_routes(g: &Graph, s: usize) -> Result<BigInt> {
    if s == 0 {
        check_caps(g, 0)?;
        return Ok(BigInt::from(g.vertex_count() as u64));
    }
    let n = g.vertex_count();
    let degs = g.degrees();
    let adj = g.adjacency_lists();
    let leaf_count: Vec<usize> = (0..n)
        .map(|v| adj[v].iter().filter(|&&w| degs[w] == 1).count())
        .collect();
    let on_cycle: Vec<bool> = (0..n).map(|v| degs[v] >= 2).collect();
    let routes = decorated_routes(g, s)?;
    let mut total = BigInt::zero();
    for r in routes {
        total += r.weight(&leaf_count, &on_cycle);
    }
    Ok(total)
}
