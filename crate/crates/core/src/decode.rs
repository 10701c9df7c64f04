//! Reconstruction of a nice graph from its exact Laplacian characteristic
//! polynomial.
//!
//! The decoder recovers n from the degree, l from the product of nonzero
//! eigenvalues (matrix-tree), k from n = l + 2k + 1, and then walks outward
//! from the 1-hub: for each even distance 2q it forms eta'_{4q+2}, the total
//! weight of decorated routes that interact with at least two hubs not all
//! already known. A hub at distance 2q contributes 8q + 4 to that quantity
//! while everything else contributes multiples of 8, so the residue mod 8
//! decides hub presence.
//!
//! eta' is computed through the partial-graph identity
//!   eta'_s = mu_s(target) - mu_s(partial) - (k - #known) * ohc(l, 2, s),
//! where the partial graph carries the 1-hub and exactly the known 2-hubs,
//! and ohc is the one-hub moment increment, which is independent of where
//! on the cycle the hub sits.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{cycle, Graph};
use crate::nice::NiceDescriptor;
use crate::poly::IntPolynomial;
use crate::spectra::{recover_degree_stats, spectral_moments, MatrixKind};

/// Sun-like graph on an l-cycle with a 1-hub at position 0 and 2-hubs at
/// the given positions.
pub fn build_partial(ell: usize, two_hub_positions: &[usize]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..ell).map(|i| (i, (i + 1) % ell)).collect();
    let mut next = ell;
    edges.push((0, next));
    next += 1;
    for &p in two_hub_positions {
        edges.push((p, next));
        edges.push((p, next + 1));
        next += 2;
    }
    Graph::new(next, edges).expect("partial sun-like graph is simple")
}

/// Total weight of decorated s-routes interacting with a single i-hub on an
/// l-cycle, computed as the moment increment of attaching that hub.
pub fn one_hub_contribution(ell: usize, hub_type: usize, s: usize) -> BigInt {
    let mut edges: Vec<(usize, usize)> = (0..ell).map(|i| (i, (i + 1) % ell)).collect();
    for j in 0..hub_type {
        edges.push((0, ell + j));
    }
    let with_hub = Graph::new(ell + hub_type, edges).expect("hubbed cycle is simple");
    let base = cycle(ell);
    spectral_moments(&with_hub, MatrixKind::Laplacian, s)
        .pop()
        .expect("nonempty")
        - spectral_moments(&base, MatrixKind::Laplacian, s)
            .pop()
            .expect("nonempty")
}

/// eta'_s from target moments: subtract the partial graph's moment and the
/// single-hub contributions of the still-unknown 2-hubs.
pub fn eta_prime(
    ell: usize,
    k: usize,
    known_two_hubs: &[usize],
    s: usize,
    target_moments: &[BigInt],
) -> BigInt {
    assert!(s < ell, "decorated-route identities need s < ell");
    assert!(known_two_hubs.len() <= k);
    let partial = build_partial(ell, known_two_hubs);
    let mu_partial = spectral_moments(&partial, MatrixKind::Laplacian, s)
        .pop()
        .expect("nonempty");
    let unknown = (k - known_two_hubs.len()) as i64;
    &target_moments[s] - mu_partial - BigInt::from(unknown) * one_hub_contribution(ell, 2, s)
}

/// Structural statistics recovered from a Laplacian characteristic
/// polynomial of a graph cospectral to an (l,k)-nice graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Localisation {
    pub ell: usize,
    pub k: usize,
    /// Degree histogram n_1..n_5 (vertices of degree 1..5).
    pub degree_histogram: [u64; 5],
}

fn ell_and_k_from_poly(p: &IntPolynomial) -> Result<(usize, usize, u64, u64)> {
    if !p.is_monic() {
        return Err(Error::NotLocalisable("polynomial is not monic".into()));
    }
    let n = p.degree();
    if p.integer_root_multiplicity(&BigInt::zero()) != 1 {
        return Err(Error::NotLocalisable(
            "zero eigenvalue multiplicity is not 1, so the graph is not connected".into(),
        ));
    }
    let (n_rec, m, sum_d2, sum_d3) = recover_degree_stats(p)?;
    debug_assert_eq!(n_rec as usize, n);
    if m != n as u64 {
        return Err(Error::NotLocalisable(format!(
            "edge count {m} differs from vertex count {n}, not unicyclic"
        )));
    }
    // Matrix-tree: product of nonzero eigenvalues = n * #spanning trees, and
    // a unicyclic graph has exactly l spanning trees.
    let f = p.product_nonzero_eigenvalues();
    if !f.is_positive() {
        return Err(Error::NotLocalisable("nonpositive eigenvalue product".into()));
    }
    let (ell_big, rem) = f.div_rem(&BigInt::from(n as u64));
    if !rem.is_zero() {
        return Err(Error::NotLocalisable(format!(
            "eigenvalue product {f} is not divisible by n = {n}"
        )));
    }
    let ell = ell_big
        .to_usize()
        .ok_or_else(|| Error::NotLocalisable("cycle length overflow".into()))?;
    if ell < 3 || ell > n {
        return Err(Error::NotLocalisable(format!("cycle length {ell} out of range")));
    }
    if (n - ell) % 2 != 1 {
        return Err(Error::NotLocalisable(format!(
            "n - ell - 1 = {} is not even, k is not a natural number",
            n as i64 - ell as i64 - 1
        )));
    }
    let k = (n - ell - 1) / 2;
    if k < 1 {
        return Err(Error::NotLocalisable("k = 0: no 2-hubs".into()));
    }
    if ell < (12 * k).max(15) {
        return Err(Error::NotLocalisable(format!(
            "ell = {ell} below max(12k, 15) for k = {k}"
        )));
    }
    Ok((ell, k, sum_d2, sum_d3))
}

/// Recover (l, k) and the degree histogram n_1..n_5 from the Laplacian
/// charpoly of a graph cospectral to a nice graph. The unique solution of
/// the moment system with n_5 = 0 is checked against the recovered moments;
/// inconsistency means the input is not cospectral to a nice graph.
pub fn localise(p: &IntPolynomial) -> Result<Localisation> {
    let (ell, k, sum_d2, sum_d3) = ell_and_k_from_poly(p)?;
    let n = p.degree() as u64;
    let (ell64, k64) = (ell as u64, k as u64);
    // n_5 = n_1 - 2k - 1 must vanish: every degree->=2 vertex lies on the cycle.
    let n1 = 2 * k64 + 1;
    let n2 = (ell64 + 7 * k64 + 3)
        .checked_sub(4 * n1)
        .ok_or_else(|| Error::NotLocalisable("negative n_2".into()))?;
    let n3 = (6 * n1)
        .checked_sub(12 * k64 + 5)
        .ok_or_else(|| Error::NotLocalisable("negative n_3".into()))?;
    let n4 = (9 * k64 + 4)
        .checked_sub(4 * n1)
        .ok_or_else(|| Error::NotLocalisable("negative n_4".into()))?;
    let hist = [n1, n2, n3, n4, 0];
    // Consistency replay against the recovered degree power sums.
    let sums = |e: u32| -> u64 {
        hist.iter()
            .enumerate()
            .map(|(i, &c)| c * ((i as u64) + 1).pow(e))
            .sum()
    };
    if sums(0) != n || sums(1) != 2 * n || sums(2) != sum_d2 || sums(3) != sum_d3 {
        return Err(Error::NotLocalisable(
            "degree statistics are inconsistent with a nice graph".into(),
        ));
    }
    if n3 != 1 || n4 != k64 {
        return Err(Error::NotLocalisable(
            "hub counts differ from one 1-hub and k 2-hubs".into(),
        ));
    }
    Ok(Localisation {
        ell,
        k,
        degree_histogram: hist,
    })
}

/// Decode a nice graph from its exact Laplacian characteristic polynomial.
pub fn decode(p: &IntPolynomial) -> Result<NiceDescriptor> {
    let (ell, k, _, _) = ell_and_k_from_poly(p)?;
    let s_max = 4 * (3 * k - 1) + 2;
    debug_assert!(s_max < ell);
    let target_moments = p.power_sums(s_max);
    let mut known: Vec<usize> = Vec::new();
    for q in 2..=(3 * k - 1) {
        let s = 4 * q + 2;
        let eta = eta_prime(ell, k, &known, s, &target_moments);
        let residue = eta.mod_floor(&BigInt::from(8));
        match residue.to_u8() {
            Some(0) => {}
            Some(4) => known.push(2 * q),
            _ => {
                return Err(Error::NotNice(format!(
                    "eta'_{s} = {eta} is neither 0 nor 4 mod 8"
                )))
            }
        }
        if known.len() > k {
            return Err(Error::NotNice("more than k hubs detected".into()));
        }
    }
    if known.len() != k {
        return Err(Error::NotNice(format!(
            "found {} 2-hubs, expected {k}",
            known.len()
        )));
    }
    if known[0] != 4 {
        return Err(Error::NotNice(format!(
            "first 2-hub at distance {}, expected 4",
            known[0]
        )));
    }
    let gaps: Vec<usize> = known.windows(2).map(|w| w[1] - w[0]).collect();
    if let Some(bad) = gaps.iter().find(|&&g| g != 4 && g != 6) {
        return Err(Error::NotNice(format!("hub gap {bad} outside {{4, 6}}")));
    }
    NiceDescriptor::new(ell, k, gaps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nice::{build_nice, enumerate_nice};
    use crate::spectra::char_poly;

    fn l_poly(d: &NiceDescriptor) -> IntPolynomial {
        char_poly(&build_nice(d).unwrap(), MatrixKind::Laplacian)
    }

    #[test]
    fn one_hub_contribution_examples() {
        // s = 1, 1-hub: the look route at the hub plus the wait at the leaf.
        assert_eq!(one_hub_contribution(15, 1, 1), BigInt::from(2));
        // s = 2, 2-hub: moment difference of 18, independent of ell.
        assert_eq!(one_hub_contribution(15, 2, 2), BigInt::from(18));
        assert_eq!(one_hub_contribution(20, 2, 2), BigInt::from(18));
    }

    #[test]
    fn one_hub_contribution_position_independent() {
        // Moving a 2-hub around the cycle leaves every moment unchanged.
        let ell = 12;
        let hubbed = |pos: usize| {
            let mut edges: Vec<(usize, usize)> = (0..ell).map(|i| (i, (i + 1) % ell)).collect();
            edges.push((pos, ell));
            edges.push((pos, ell + 1));
            Graph::new(ell + 2, edges).unwrap()
        };
        let reference = spectral_moments(&hubbed(0), MatrixKind::Laplacian, 6);
        for pos in [3usize, 7, 11] {
            let mu = spectral_moments(&hubbed(pos), MatrixKind::Laplacian, 6);
            assert_eq!(mu, reference);
        }
    }

    #[test]
    fn eta_prime_vanishes_when_all_hubs_known() {
        let d = NiceDescriptor::new(16, 1, vec![]).unwrap();
        let g = build_nice(&d).unwrap();
        let mu = spectral_moments(&g, MatrixKind::Laplacian, 10);
        for s in [6usize, 10] {
            assert_eq!(
                eta_prime(16, 1, &[4], s, &mu),
                BigInt::zero(),
                "eta'_{s} with all hubs known"
            );
        }
    }

    #[test]
    fn decode_fig1() {
        let d = NiceDescriptor::new(46, 3, vec![6, 4]).unwrap();
        assert_eq!(decode(&l_poly(&d)).unwrap(), d);
    }

    #[test]
    fn decode_small_round_trips() {
        for ell in [15, 16, 17] {
            let d = NiceDescriptor::new(ell, 1, vec![]).unwrap();
            assert_eq!(decode(&l_poly(&d)).unwrap(), d);
        }
        for d in enumerate_nice(24, 2).unwrap() {
            assert_eq!(decode(&l_poly(&d)).unwrap(), d);
        }
    }

    #[test]
    fn decode_rejects_cycle() {
        let p = char_poly(&cycle(20), MatrixKind::Laplacian);
        assert!(decode(&p).is_err());
    }

    #[test]
    fn localise_examples() {
        let d = NiceDescriptor::new(46, 3, vec![6, 4]).unwrap();
        let loc = localise(&l_poly(&d)).unwrap();
        assert_eq!(loc.ell, 46);
        assert_eq!(loc.k, 3);
        assert_eq!(loc.degree_histogram, [7, 42, 1, 3, 0]);
        let n: u64 = loc.degree_histogram.iter().sum();
        assert_eq!(n, 53);
        let edge_sum: u64 = loc
            .degree_histogram
            .iter()
            .enumerate()
            .map(|(i, &c)| c * (i as u64 + 1))
            .sum();
        assert_eq!(edge_sum, 2 * 53);

        let d = NiceDescriptor::new(18, 1, vec![]).unwrap();
        let loc = localise(&l_poly(&d)).unwrap();
        assert_eq!(loc.degree_histogram, [3, 16, 1, 1, 0]);
    }

    #[test]
    fn localise_rejects_non_nice() {
        let p = char_poly(&cycle(18), MatrixKind::Laplacian);
        assert!(localise(&p).is_err());
    }
}
