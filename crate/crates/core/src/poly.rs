//! Integer polynomials with arbitrary-precision coefficients.
//!
//! Characteristic polynomials are stored here with the sign convention
//! `det(xI - M) = sum_i (-1)^i zeta_i x^(n-i)`, so the i-th characteristic
//! coefficient is `zeta_i = (-1)^i * coeff(x^(n-i))`. This is the single
//! place that convention lives; everything else calls [`IntPolynomial::zeta`].

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The vector is never empty; the
/// zero polynomial is `[0]`, and otherwise the last entry is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::zero()],
        }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("coeffs nonempty")
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// The i-th characteristic coefficient `zeta_i = (-1)^i * coeff(x^(n-i))`,
    /// where n is the degree.
    pub fn zeta(&self, i: usize) -> BigInt {
        let n = self.degree();
        if i > n {
            return BigInt::zero();
        }
        let c = self.coeff(n - i);
        if i % 2 == 0 {
            c
        } else {
            -c
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.degree() == 0 {
            return IntPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPolynomial::new(coeffs)
    }

    /// Substitute `x -> -x`.
    pub fn reflect(&self) -> IntPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
            .collect();
        IntPolynomial::new(coeffs)
    }

    /// Divide by `(x - r)`, returning the quotient and remainder (a constant).
    pub fn synthetic_div(&self, r: &BigInt) -> (IntPolynomial, BigInt) {
        let n = self.degree();
        if n == 0 {
            return (IntPolynomial::zero(), self.coeffs[0].clone());
        }
        let mut quot = vec![BigInt::zero(); n];
        let mut carry = BigInt::zero();
        for i in (0..=n).rev() {
            let v = &self.coeffs[i] + &carry * r;
            if i > 0 {
                quot[i - 1] = v.clone();
                carry = v;
            } else {
                return (IntPolynomial::new(quot), v);
            }
        }
        unreachable!()
    }

    /// Largest t such that `(x - r)^t` divides the polynomial.
    pub fn integer_root_multiplicity(&self, r: &BigInt) -> usize {
        if self.is_zero() {
            return 0;
        }
        let mut p = self.clone();
        let mut t = 0;
        while p.degree() >= 1 {
            let (q, rem) = p.synthetic_div(r);
            if !rem.is_zero() {
                break;
            }
            p = q;
            t += 1;
        }
        t
    }

    /// Product of the nonzero eigenvalues read off the characteristic
    /// coefficients: `zeta_s` for the largest s with `zeta_s != 0`, and 1
    /// when every `zeta_s` with s >= 1 vanishes.
    pub fn product_nonzero_eigenvalues(&self) -> BigInt {
        let n = self.degree();
        for i in (0..=n).rev() {
            let z = self.zeta(i);
            if !z.is_zero() {
                return z;
            }
        }
        BigInt::one()
    }

    /// Power sums of the roots, `p_k = sum lambda^k` for `k = 0..=s_max`,
    /// via Newton's identities. Requires a monic polynomial.
    pub fn power_sums(&self, s_max: usize) -> Vec<BigInt> {
        assert!(self.is_monic(), "power sums need a monic polynomial");
        let n = self.degree();
        let mut mu = Vec::with_capacity(s_max + 1);
        mu.push(BigInt::from(n as u64));
        for k in 1..=s_max {
            let mut acc = BigInt::zero();
            for i in 1..k.min(n + 1) {
                let term = self.zeta(i) * &mu[k - i];
                if i % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            if k <= n {
                let t = BigInt::from(k as u64) * self.zeta(k);
                if k % 2 == 1 {
                    acc += t;
                } else {
                    acc -= t;
                }
            }
            mu.push(acc);
        }
        mu
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }

    /// Primitive part: divide out the content, preserving the sign of the
    /// leading coefficient.
    pub fn primitive(&self) -> IntPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.abs());
        }
        if g.is_one() {
            return self.clone();
        }
        IntPolynomial::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Canonical byte encoding (degree plus decimal coefficients); used as a
    /// collision-free spectral class key.
    pub fn class_key(&self) -> Vec<u8> {
        let mut out = format!("{}:", self.degree()).into_bytes();
        for c in &self.coeffs {
            out.extend_from_slice(c.to_string().as_bytes());
            out.push(b',');
        }
        out
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "{a}x")?,
                _ if a.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{a}x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    degree: usize,
    coeffs: Vec<String>,
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyWire {
            degree: self.degree(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = PolyWire::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(wire.coeffs.len());
        for (i, c) in wire.coeffs.iter().enumerate() {
            let v: BigInt = c
                .parse()
                .map_err(|_| D::Error::custom(format!("coefficient {i} is not an integer")))?;
            coeffs.push(v);
        }
        let p = IntPolynomial::new(coeffs);
        if p.degree() != wire.degree {
            return Err(D::Error::custom(format!(
                "declared degree {} does not match coefficients (actual degree {})",
                wire.degree,
                p.degree()
            )));
        }
        Ok(p)
    }
}

/// Parse the JSON wire form `{"degree": n, "coeffs": ["c0", ..., "cn"]}`.
pub fn poly_from_json(text: &str) -> Result<IntPolynomial> {
    serde_json::from_str(text).map_err(Error::Json)
}

/// Serde helper: big integers as decimal strings (bit-exact).
pub fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    #[test]
    fn zeta_sign_convention() {
        // x^3 - 3x - 2 = (x-2)(x+1)^2: zeta_1 = e_1 = 0, zeta_2 = e_2 = -3, zeta_3 = e_3 = 2.
        let cp = p(&[-2, -3, 0, 1]);
        assert_eq!(cp.zeta(0), BigInt::from(1));
        assert_eq!(cp.zeta(1), BigInt::from(0));
        assert_eq!(cp.zeta(2), BigInt::from(-3));
        assert_eq!(cp.zeta(3), BigInt::from(2));
    }

    #[test]
    fn root_multiplicity() {
        // (x-2)(x+1)^2
        let cp = p(&[-2, -3, 0, 1]);
        assert_eq!(cp.integer_root_multiplicity(&BigInt::from(2)), 1);
        assert_eq!(cp.integer_root_multiplicity(&BigInt::from(-1)), 2);
        assert_eq!(cp.integer_root_multiplicity(&BigInt::from(3)), 0);
        assert_eq!(cp.integer_root_multiplicity(&BigInt::from(0)), 0);
    }

    #[test]
    fn product_nonzero() {
        // x^4 - 8x^3 + 20x^2 - 16x: roots 0, 2, 2, 4 -> product of nonzero = 16.
        let cp = p(&[0, -16, 20, -8, 1]);
        assert_eq!(cp.product_nonzero_eigenvalues(), BigInt::from(16));
        // x^n: all roots zero -> empty product.
        assert_eq!(
            p(&[0, 0, 0, 1]).product_nonzero_eigenvalues(),
            BigInt::from(1)
        );
        // Degree-zero polynomial.
        assert_eq!(p(&[1]).product_nonzero_eigenvalues(), BigInt::from(1));
    }

    #[test]
    fn power_sums_match_roots() {
        // (x-2)(x+1)^2: p_0 = 3, p_1 = 0, p_2 = 6, p_3 = 6, p_4 = 18.
        let cp = p(&[-2, -3, 0, 1]);
        let mu = cp.power_sums(4);
        let expect = [3i64, 0, 6, 6, 18];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(mu[k], BigInt::from(*e), "power sum {k}");
        }
    }

    #[test]
    fn json_round_trip() {
        let cp = p(&[-2, -3, 0, 1]);
        let text = serde_json::to_string(&cp).unwrap();
        assert_eq!(text, r#"{"degree":3,"coeffs":["-2","-3","0","1"]}"#);
        let back = poly_from_json(&text).unwrap();
        assert_eq!(cp, back);
    }

    #[test]
    fn json_rejects_bad_degree() {
        assert!(poly_from_json(r#"{"degree":2,"coeffs":["1","1"]}"#).is_err());
        assert!(poly_from_json(r#"{"degree":1,"coeffs":["1","q"]}"#).is_err());
    }

    #[test]
    fn display_readable() {
        assert_eq!(p(&[-2, -3, 0, 1]).to_string(), "x^3 - 3x - 2");
    }
}
