//! Exhaustive small-graph census: one representative per isomorphism class,
//! grouped into exact spectral classes.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, canonical_key};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::spectra::{char_poly, MatrixKind};

/// Hard cap: n = 10 has twelve million classes, past the default test budget.
pub const CENSUS_MAX_N: usize = 9;

/// Exactly one representative (in canonical form) per isomorphism class of
/// n-vertex graphs, sorted by canonical key. Built by extending the
/// (n-1)-vertex classes with one new vertex over every attachment set.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    if n > CENSUS_MAX_N {
        return Err(Error::CapExceeded(format!(
            "census supports n <= {CENSUS_MAX_N}, got {n}"
        )));
    }
    let mut current = vec![Graph::empty(0)];
    for size in 1..=n {
        let keyed: Vec<(Vec<u8>, Graph)> = current
            .par_iter()
            .flat_map_iter(|g| {
                (0u32..1 << (size - 1)).map(move |mask| {
                    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
                    for v in 0..size - 1 {
                        if mask & (1 << v) != 0 {
                            edges.push((v, size - 1));
                        }
                    }
                    let h = Graph::new(size, edges).expect("extension stays simple");
                    let canon = canonical_form(&h);
                    (graph6::encode(&canon).into_bytes(), canon)
                })
            })
            .collect();
        let mut dedup: HashMap<Vec<u8>, Graph> = HashMap::new();
        for (key, graph) in keyed {
            dedup.entry(key).or_insert(graph);
        }
        let mut sorted: Vec<(Vec<u8>, Graph)> = dedup.into_iter().collect();
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        current = sorted.into_iter().map(|(_, g)| g).collect();
    }
    Ok(current)
}

/// All isomorphism classes with 1..=n vertices.
pub fn enumerate_nonisomorphic_upto(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for size in 1..=n {
        out.extend(enumerate_nonisomorphic(size)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct CospectralReport {
    pub n: usize,
    pub matrix: String,
    pub total_graphs: usize,
    pub spectral_classes: usize,
    pub graphs_with_mate: usize,
    /// Up to ten example pairs of cospectral non-isomorphic graphs (graph6).
    pub example_pairs: Vec<(String, String)>,
}

/// Group all n-vertex isomorphism classes by exact characteristic
/// polynomial. Deterministic across runs and worker counts.
pub fn cospectral_census(n: usize, kind: MatrixKind) -> Result<CospectralReport> {
    let graphs = enumerate_nonisomorphic(n)?;
    let keyed: Vec<(Vec<u8>, usize)> = graphs
        .par_iter()
        .enumerate()
        .map(|(idx, g)| (char_poly(g, kind).class_key(), idx))
        .collect();
    let mut classes: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    for (key, idx) in keyed {
        classes.entry(key).or_default().push(idx);
    }
    for members in classes.values_mut() {
        members.sort_unstable();
    }
    let total_graphs = graphs.len();
    let spectral_classes = classes.len();
    let graphs_with_mate = classes
        .values()
        .filter(|m| m.len() > 1)
        .map(|m| m.len())
        .sum();
    let example_pairs = classes
        .values()
        .filter(|m| m.len() > 1)
        .take(10)
        .map(|m| {
            (
                graph6::encode(&graphs[m[0]]),
                graph6::encode(&graphs[m[1]]),
            )
        })
        .collect();
    Ok(CospectralReport {
        n,
        matrix: kind.as_str().to_string(),
        total_graphs,
        spectral_classes,
        graphs_with_mate,
        example_pairs,
    })
}

/// Brute-force isomorphism classification over all labelled graphs on n
/// vertices (2^C(n,2) of them); independent check of the incremental
/// enumeration, usable up to n = 7.
pub fn count_classes_brute_force(n: usize) -> Result<usize> {
    if n > 7 {
        return Err(Error::CapExceeded(
            "brute-force class counting supports n <= 7".into(),
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = 1u64 << pairs.len();
    let keys: HashSet<Vec<u8>> = (0..total)
        .into_par_iter()
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e);
            let g = Graph::new(n, edges).expect("labelled graph is simple");
            canonical_key(&g)
        })
        .collect();
    Ok(keys.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_nonisomorphic(1).unwrap().len(), 1);
        assert_eq!(enumerate_nonisomorphic(2).unwrap().len(), 2);
        assert_eq!(enumerate_nonisomorphic(3).unwrap().len(), 4);
        assert_eq!(enumerate_nonisomorphic(4).unwrap().len(), 11);
        assert_eq!(enumerate_nonisomorphic(5).unwrap().len(), 34);
        assert_eq!(enumerate_nonisomorphic(6).unwrap().len(), 156);
        assert!(enumerate_nonisomorphic(10).is_err());
    }

    #[test]
    fn incremental_matches_brute_force() {
        for n in 1..=5 {
            assert_eq!(
                enumerate_nonisomorphic(n).unwrap().len(),
                count_classes_brute_force(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn census_small_adjacency() {
        for n in 1..=4 {
            let report = cospectral_census(n, MatrixKind::Adjacency).unwrap();
            assert_eq!(report.graphs_with_mate, 0, "n = {n}");
            assert_eq!(report.spectral_classes, report.total_graphs);
        }
        let report = cospectral_census(5, MatrixKind::Adjacency).unwrap();
        assert!(report.graphs_with_mate >= 2);
        assert!(!report.example_pairs.is_empty());
        // The star K_{1,4} and C_4 + K_1 share a class.
        let star = canonical_key(&crate::graph::build_standard(crate::graph::StandardKind::Star, 4).unwrap());
        let c4k1 = canonical_key(&crate::graph::cycle(4).disjoint_union(&Graph::empty(1)));
        let mut found = false;
        for (a, b) in &report.example_pairs {
            let ka = canonical_key(&graph6::decode(a).unwrap());
            let kb = canonical_key(&graph6::decode(b).unwrap());
            if (ka == star && kb == c4k1) || (ka == c4k1 && kb == star) {
                found = true;
            }
        }
        assert!(found, "expected the 1957 pair among the examples");
    }

    #[test]
    fn census_deterministic() {
        let a = cospectral_census(5, MatrixKind::Laplacian).unwrap();
        let b = cospectral_census(5, MatrixKind::Laplacian).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
