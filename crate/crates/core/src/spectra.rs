//! Exact spectra of the adjacency, Laplacian and signless Laplacian
//! matrices: integer characteristic polynomials, spectral moments and the
//! nonzero-eigenvalue products built on them.
//!
//! No floating point: characteristic polynomials come from fraction-free
//! Bareiss determinants evaluated at integer points and interpolated over
//! the rationals, and moments are traces of exact integer matrix powers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;

/// Matrix attached to a graph: A, L = D - A, or |L| = D + A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "a",
            MatrixKind::Laplacian => "l",
            MatrixKind::SignlessLaplacian => "sl",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(MatrixKind::Adjacency),
            "l" => Ok(MatrixKind::Laplacian),
            "sl" => Ok(MatrixKind::SignlessLaplacian),
            _ => Err(Error::Params(format!(
                "unknown matrix kind {s:?} (expected a, l or sl)"
            ))),
        }
    }
}

/// Dense integer matrix of the requested kind.
pub fn graph_matrix(g: &Graph, kind: MatrixKind) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0i64; n]; n];
    let (diag, off) = match kind {
        MatrixKind::Adjacency => (0, 1),
        MatrixKind::Laplacian => (1, -1),
        MatrixKind::SignlessLaplacian => (1, 1),
    };
    for &(a, b) in g.edges() {
        m[a][b] = off;
        m[b][a] = off;
        m[a][a] += diag;
        m[b][b] += diag;
    }
    m
}

/// Fraction-free Bareiss elimination; exact determinant of an integer matrix.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact characteristic polynomial `det(xI - M)` of an integer matrix,
/// via Bareiss determinants at x = 0..n and Newton forward-difference
/// interpolation over the rationals.
pub fn char_poly_of_matrix(m: &[Vec<i64>]) -> IntPolynomial {
    let n = m.len();
    let values: Vec<BigInt> = (0..=n as i64)
        .map(|t| {
            let shifted: Vec<Vec<BigInt>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let d = if i == j { t } else { 0 };
                            BigInt::from(d - m[i][j])
                        })
                        .collect()
                })
                .collect();
            bareiss_determinant(shifted)
        })
        .collect();
    interpolate_at_integers(&values)
}

/// Interpolate the unique degree-`n` polynomial through `(t, values[t])`
/// for t = 0..=n; the result must have integer coefficients.
fn interpolate_at_integers(values: &[BigInt]) -> IntPolynomial {
    let n = values.len() - 1;
    // Forward differences (integers at consecutive integer points).
    let mut diffs: Vec<BigInt> = values.to_vec();
    let mut deltas = Vec::with_capacity(n + 1);
    deltas.push(diffs[0].clone());
    for level in 1..=n {
        for i in 0..=(n - level) {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        deltas.push(diffs[0].clone());
    }
    // p(x) = sum_k delta_k / k! * x(x-1)...(x-k+1), accumulated in Q[x].
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); n + 1];
    let mut falling: Vec<BigRational> = vec![BigRational::one()];
    let mut k_factorial = BigInt::one();
    for (k, delta) in deltas.iter().enumerate() {
        if k > 0 {
            k_factorial *= BigInt::from(k as u64);
            // falling *= (x - (k-1))
            let shift = BigRational::from_integer(BigInt::from(k as i64 - 1));
            let mut next = vec![BigRational::zero(); falling.len() + 1];
            for (i, c) in falling.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &shift;
            }
            falling = next;
        }
        if delta.is_zero() {
            continue;
        }
        let scale = BigRational::new(delta.clone(), k_factorial.clone());
        for (i, c) in falling.iter().enumerate() {
            acc[i] += c * &scale;
        }
    }
    let coeffs: Vec<BigInt> = acc
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "characteristic coefficients are integers");
            c.to_integer()
        })
        .collect();
    IntPolynomial::new(coeffs)
}

/// Exact characteristic polynomial of the chosen matrix of `g`.
pub fn char_poly(g: &Graph, kind: MatrixKind) -> IntPolynomial {
    char_poly_of_matrix(&graph_matrix(g, kind))
}

/// Exact spectral moments `trace(M^s)` for s = 0..=s_max, by repeated
/// integer matrix multiplication (sparse in M).
pub fn spectral_moments(g: &Graph, kind: MatrixKind, s_max: usize) -> Vec<BigInt> {
    let n = g.vertex_count();
    let m = graph_matrix(g, kind);
    let sparse: Vec<Vec<(usize, i64)>> = (0..n)
        .map(|j| {
            (0..n)
                .filter(|&i| m[i][j] != 0)
                .map(|i| (i, m[i][j]))
                .collect()
        })
        .collect();
    let mut out = Vec::with_capacity(s_max + 1);
    out.push(BigInt::from(n as u64));
    if s_max == 0 {
        return out;
    }
    // power[i][j] = (M^s)_{ij}
    let mut power: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(m[i][j])).collect())
        .collect();
    out.push((0..n).map(|i| power[i][i].clone()).sum());
    for _ in 2..=s_max {
        let next: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = BigInt::zero();
                        for &(t, v) in &sparse[j] {
                            if !power[i][t].is_zero() {
                                acc += &power[i][t] * v;
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        power = next;
        out.push((0..n).map(|i| power[i][i].clone()).sum());
    }
    out
}

/// The s-th spectral moment of the chosen matrix of `g`.
pub fn spectral_moment(g: &Graph, kind: MatrixKind, s: usize) -> BigInt {
    spectral_moments(g, kind, s).pop().expect("nonempty")
}

/// Product of the nonzero eigenvalues of `|L|(g)`.
pub fn f_signless(g: &Graph) -> BigInt {
    char_poly(g, MatrixKind::SignlessLaplacian).product_nonzero_eigenvalues()
}

/// Product of the nonzero eigenvalues of `A(g) + 2I`, computed exactly from
/// the characteristic polynomial of the shifted integer matrix.
pub fn f_adjacency(g: &Graph) -> BigInt {
    let mut m = graph_matrix(g, MatrixKind::Adjacency);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] += 2;
    }
    char_poly_of_matrix(&m).product_nonzero_eigenvalues()
}

/// Exact cospectrality test: coefficient-wise equality of characteristic
/// polynomials.
pub fn cospectral(g1: &Graph, g2: &Graph, kind: MatrixKind) -> bool {
    char_poly(g1, kind) == char_poly(g2, kind)
}

/// Recover `(n, m, sum deg^2, sum deg^3)` from the Laplacian characteristic
/// polynomial of a triangle-free graph, using Newton's identities for the
/// moments. Non-integral intermediate values signal a violated precondition.
pub fn recover_degree_stats(p: &IntPolynomial) -> Result<(u64, u64, u64, u64)> {
    if !p.is_monic() {
        return Err(Error::Precondition(
            "characteristic polynomial must be monic".into(),
        ));
    }
    let mu = p.power_sums(3);
    let to_u64 = |v: &BigInt, what: &str| -> Result<u64> {
        if v.is_negative() {
            return Err(Error::Precondition(format!("{what} is negative: {v}")));
        }
        u64::try_from(v.clone()).map_err(|_| Error::Precondition(format!("{what} overflows")))
    };
    let n = to_u64(&mu[0], "vertex count")?;
    let two_m = to_u64(&mu[1], "degree sum")?;
    if two_m % 2 != 0 {
        return Err(Error::Precondition(format!(
            "first Laplacian moment {two_m} is odd"
        )));
    }
    let m = two_m / 2;
    let mu2 = to_u64(&mu[2], "second moment")?;
    if mu2 < two_m {
        return Err(Error::Precondition("second moment below degree sum".into()));
    }
    let sum_d2 = mu2 - two_m;
    let mu3 = to_u64(&mu[3], "third moment")?;
    if mu3 < 3 * sum_d2 {
        return Err(Error::Precondition("third moment inconsistent".into()));
    }
    let sum_d3 = mu3 - 3 * sum_d2;
    Ok((n, m, sum_d2, sum_d3))
}

/// Per-graph exact spectral summary of one (graph, matrix kind) pair.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SpectralSummary {
    pub kind: String,
    pub charpoly: IntPolynomial,
    /// Moments mu_s for s = 0..=s_max, as decimal strings.
    pub moments: Vec<String>,
    /// Product of nonzero eigenvalues (signed), decimal string.
    pub f_value: String,
    /// Multiplicities of the integer eigenvalues, as (eigenvalue, multiplicity).
    pub integer_multiplicities: Vec<(i64, usize)>,
}

impl SpectralSummary {
    pub fn compute(g: &Graph, kind: MatrixKind, s_max: usize) -> Self {
        let charpoly = char_poly(g, kind);
        let moments = spectral_moments(g, kind, s_max)
            .iter()
            .map(BigInt::to_string)
            .collect();
        let f_value = charpoly.product_nonzero_eigenvalues().to_string();
        // All eigenvalues lie in [-2*maxdeg, 2*maxdeg] for the three kinds.
        let bound = 2 * g.max_degree() as i64;
        let mut integer_multiplicities = Vec::new();
        for r in -bound..=bound {
            let mult = charpoly.integer_root_multiplicity(&BigInt::from(r));
            if mult > 0 {
                integer_multiplicities.push((r, mult));
            }
        }
        SpectralSummary {
            kind: kind.as_str().to_string(),
            charpoly,
            moments,
            f_value,
            integer_multiplicities,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_standard, complete, cycle, line_graph, StandardKind};

    #[test]
    fn charpoly_k3_adjacency() {
        let p = char_poly(&complete(3), MatrixKind::Adjacency);
        assert_eq!(p, IntPolynomial::from_i64(&[-2, -3, 0, 1]));
    }

    #[test]
    fn laplacian_constant_coefficient_vanishes() {
        for g in [cycle(5), complete(4), build_standard(StandardKind::Star, 3).unwrap()] {
            let p = char_poly(&g, MatrixKind::Laplacian);
            assert!(p.coeff(0).is_zero(), "0 is always a Laplacian eigenvalue");
        }
    }

    #[test]
    fn bipartite_l_equals_sl() {
        let c4 = cycle(4);
        assert_eq!(
            char_poly(&c4, MatrixKind::Laplacian),
            char_poly(&c4, MatrixKind::SignlessLaplacian)
        );
    }

    #[test]
    fn moments_examples() {
        let c4 = cycle(4);
        for kind in MatrixKind::ALL {
            assert_eq!(spectral_moment(&c4, kind, 0), BigInt::from(4));
        }
        // mu_2 of L(C_4) = sum deg^2 + 2m = 16 + 8.
        assert_eq!(spectral_moment(&c4, MatrixKind::Laplacian, 2), BigInt::from(24));
        // mu_2 of A = 2m.
        let g = build_standard(StandardKind::Star, 3).unwrap();
        assert_eq!(spectral_moment(&g, MatrixKind::Adjacency, 2), BigInt::from(6));
        // mu_1 of A = 0.
        assert_eq!(spectral_moment(&g, MatrixKind::Adjacency, 1), BigInt::from(0));
    }

    #[test]
    fn root_multiplicities() {
        // Multiplicity of 0 in L equals the number of components.
        let g = cycle(3).disjoint_union(&cycle(4));
        let p = char_poly(&g, MatrixKind::Laplacian);
        assert_eq!(p.integer_root_multiplicity(&BigInt::zero()), 2);

        // line(C_4) = C_4 is bipartite with e - v + 1 = 1.
        let p = char_poly(&line_graph(&cycle(4)), MatrixKind::Adjacency);
        assert_eq!(p.integer_root_multiplicity(&BigInt::from(-2)), 1);

        // K_5 has eigenvalue -1 with multiplicity 4.
        let p = char_poly(&complete(5), MatrixKind::Adjacency);
        assert_eq!(p.integer_root_multiplicity(&BigInt::from(-1)), 4);
    }

    #[test]
    fn f_values() {
        // f_|L|(C_4) = n * l = 16 for a bipartite unicyclic graph.
        assert_eq!(f_signless(&cycle(4)), BigInt::from(16));
        // |L|(K_3) has eigenvalues 4, 1, 1.
        assert_eq!(f_signless(&complete(3)), BigInt::from(4));
        // f_A(K_1) = 2.
        assert_eq!(f_adjacency(&Graph::empty(1)), BigInt::from(2));
        // f_A(line(G)) = f_|L|(G).
        for g in [cycle(5), complete(4), build_standard(StandardKind::Star, 4).unwrap()] {
            assert_eq!(f_adjacency(&line_graph(&g)), f_signless(&g));
        }
    }

    #[test]
    fn matrix_tree_via_product() {
        // Product of nonzero Laplacian eigenvalues = n * (#spanning trees).
        let p = char_poly(&complete(4), MatrixKind::Laplacian);
        assert_eq!(p.product_nonzero_eigenvalues(), BigInt::from(4 * 16));
        let p = char_poly(&cycle(5), MatrixKind::Laplacian);
        assert_eq!(p.product_nonzero_eigenvalues(), BigInt::from(25));
    }

    #[test]
    fn recover_degree_stats_examples() {
        let p = char_poly(&cycle(4), MatrixKind::Laplacian);
        assert_eq!(recover_degree_stats(&p).unwrap(), (4, 4, 16, 32));
        let star3 = build_standard(StandardKind::Star, 3).unwrap();
        let p = char_poly(&star3, MatrixKind::Laplacian);
        assert_eq!(recover_degree_stats(&p).unwrap(), (4, 3, 12, 30));
    }

    #[test]
    fn cospectral_examples() {
        let star4 = build_standard(StandardKind::Star, 4).unwrap();
        let c4k1 = cycle(4).disjoint_union(&Graph::empty(1));
        assert!(cospectral(&star4, &c4k1, MatrixKind::Adjacency));
        assert!(cospectral(&star4, &star4, MatrixKind::Laplacian));
        let k3 = complete(3);
        let star3 = build_standard(StandardKind::Star, 3).unwrap();
        assert!(!cospectral(&k3, &star3, MatrixKind::Adjacency));
    }

    #[test]
    fn disjoint_union_charpoly_factors() {
        let a = cycle(3);
        let b = build_standard(StandardKind::Path, 2).unwrap();
        let u = a.disjoint_union(&b);
        for kind in MatrixKind::ALL {
            let pu = char_poly(&u, kind);
            let pa = char_poly(&a, kind);
            let pb = char_poly(&b, kind);
            assert_eq!(pu, pa.mul(&pb));
        }
    }

    #[test]
    fn moments_match_newton_identities() {
        // Independent routes to the same values: traces of matrix powers vs
        // Newton's identities on the characteristic polynomial.
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        for kind in MatrixKind::ALL {
            let mu_direct = spectral_moments(&g, kind, 7);
            let mu_newton = char_poly(&g, kind).power_sums(7);
            assert_eq!(mu_direct, mu_newton);
        }
    }

    #[test]
    fn empty_graph_charpoly() {
        assert_eq!(
            char_poly(&Graph::empty(0), MatrixKind::Adjacency),
            IntPolynomial::one()
        );
        assert_eq!(
            char_poly(&Graph::empty(3), MatrixKind::Laplacian),
            IntPolynomial::from_i64(&[0, 0, 0, 1])
        );
    }
}
