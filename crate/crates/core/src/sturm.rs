//! Exact real-root counting via Sturm chains over the rationals, with
//! content-free integer normalization of every remainder.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::poly::IntPolynomial;

fn to_rational(p: &IntPolynomial) -> Vec<BigRational> {
    p.coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

fn trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
}

/// Remainder of `a` divided by `b` over the rationals.
fn rational_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() - 1 >= db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let q = &r[dr] / lb;
        for i in 0..=db {
            let t = &q * &b[i];
            r[dr - db + i] -= t;
        }
        r.pop();
        trim(&mut r);
        if dr == db {
            break;
        }
    }
    r
}

/// Scale a rational polynomial by a positive rational to a primitive
/// integer polynomial (signs preserved).
fn primitive_int(p: &[BigRational]) -> IntPolynomial {
    let mut den = BigInt::from(1);
    for c in p {
        den = num_integer::lcm(den, c.denom().clone());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    IntPolynomial::new(ints).primitive()
}

/// The Sturm chain of `p`: p, p', then negated normalized remainders.
fn sturm_chain(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![p.primitive()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive());
    loop {
        let a = to_rational(&chain[chain.len() - 2]);
        let b = to_rational(&chain[chain.len() - 1]);
        let mut r = rational_rem(&a, &b);
        trim(&mut r);
        if r.len() == 1 && r[0].is_zero() {
            return chain;
        }
        for c in &mut r {
            *c = -c.clone();
        }
        let next = primitive_int(&r);
        if next.degree() == 0 {
            chain.push(next);
            return chain;
        }
        chain.push(next);
    }
}

fn sign_of(v: &BigInt) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last: i8 = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Evaluate `p(a/b) * b^deg` (an integer with the sign of `p(a/b)` for b > 0).
fn eval_scaled(p: &IntPolynomial, num: &BigInt, den: &BigInt) -> BigInt {
    let n = p.degree();
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::from(1);
    for i in (0..=n).rev() {
        acc = acc * num + p.coeff(i) * &den_pow;
        if i > 0 {
            den_pow *= den;
        }
    }
    acc
}

fn variations_at(chain: &[IntPolynomial], x: &BigRational) -> usize {
    let num = x.numer();
    let den = x.denom();
    variations(chain.iter().map(|p| sign_of(&eval_scaled(p, num, den))))
}

fn variations_at_pos_inf(chain: &[IntPolynomial]) -> usize {
    variations(chain.iter().map(|p| sign_of(p.leading())))
}

/// Distinct real roots of `p` strictly greater than `bound`.
fn count_distinct_roots_above(p: &IntPolynomial, bound: &BigRational) -> usize {
    if p.degree() == 0 {
        return 0;
    }
    // Use the squarefree part so the chain stays meaningful at multiple roots.
    let g = integer_poly_gcd(p, &p.derivative());
    let sf = if g.degree() == 0 {
        p.clone()
    } else {
        exact_divide(p, &g)
    };
    let chain = sturm_chain(&sf);
    variations_at(&chain, bound) - variations_at_pos_inf(&chain)
}

/// Number of real roots of `p` strictly greater than `bound`, counted with
/// multiplicity. The caller asserts all roots of `p` are real (true for
/// characteristic polynomials of symmetric matrices).
pub fn count_roots_above(p: &IntPolynomial, bound: &BigRational) -> usize {
    if p.is_zero() {
        return 0;
    }
    let mut current = p.primitive();
    let mut total = 0;
    while current.degree() > 0 {
        total += count_distinct_roots_above(&current, bound);
        current = integer_poly_gcd(&current, &current.derivative());
    }
    total
}

/// Primitive gcd of two integer polynomials (positive leading coefficient).
pub fn integer_poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut x = a.primitive();
    let mut y = b.primitive();
    if x.is_zero() {
        return y;
    }
    while !y.is_zero() && y.degree() > 0 {
        let r = rational_rem(&to_rational(&x), &to_rational(&y));
        let r = primitive_int(&r);
        x = y;
        y = r;
    }
    if !y.is_zero() {
        // Nonzero constant remainder: coprime.
        return IntPolynomial::one();
    }
    if x.leading().is_negative() {
        x = IntPolynomial::new(x.coeffs().iter().map(|c| -c).collect());
    }
    x
}

/// Exact quotient of `a` by a divisor `b` (integer result asserted).
fn exact_divide(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut r = to_rational(a);
    let bq = to_rational(b);
    let db = b.degree();
    let mut q = vec![BigRational::zero(); a.degree() - db + 1];
    while r.len() - 1 >= db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let c = &r[dr] / &bq[db];
        q[dr - db] = c.clone();
        for i in 0..=db {
            let t = &c * &bq[i];
            r[dr - db + i] -= t;
        }
        r.pop();
        trim(&mut r);
        if dr == db {
            break;
        }
    }
    assert!(
        r.iter().all(Zero::is_zero),
        "exact_divide called with a non-divisor"
    );
    let ints: Vec<BigInt> = q
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "quotient of primitive polynomials is integral");
            c.to_integer()
        })
        .collect();
    IntPolynomial::new(ints)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn rat2(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn simple_counts() {
        // (x-1)(x-2)(x-3)
        let p = IntPolynomial::from_i64(&[-6, 11, -6, 1]);
        assert_eq!(count_roots_above(&p, &rat(0)), 3);
        assert_eq!(count_roots_above(&p, &rat(1)), 2);
        assert_eq!(count_roots_above(&p, &rat2(5, 2)), 1);
        assert_eq!(count_roots_above(&p, &rat(3)), 0);
    }

    #[test]
    fn multiplicity_counts() {
        // (x-2)(x+1)^2
        let p = IntPolynomial::from_i64(&[-2, -3, 0, 1]);
        assert_eq!(count_roots_above(&p, &rat(-2)), 3);
        assert_eq!(count_roots_above(&p, &rat(-1)), 1);
        assert_eq!(count_roots_above(&p, &rat(0)), 1);
        // Bound exactly at a multiple root: strictly-above semantics.
        let q = IntPolynomial::from_i64(&[0, 0, 0, 1]); // x^3
        assert_eq!(count_roots_above(&q, &rat(0)), 0);
        assert_eq!(count_roots_above(&q, &rat(-1)), 3);
    }

    #[test]
    fn k4_eigenvalue_counts() {
        // charpoly(A(K_4)) = (x-3)(x+1)^3.
        let p = IntPolynomial::from_i64(&[-3, -8, -6, 0, 1]);
        assert_eq!(count_roots_above(&p, &rat(3)), 0);
        assert_eq!(count_roots_above(&p, &rat(-3)), 4);
        // charpoly(L(K_2)) = x(x-2): one root above 1.
        let p = IntPolynomial::from_i64(&[0, -2, 1]);
        assert_eq!(count_roots_above(&p, &rat(1)), 1);
    }

    #[test]
    fn gcd_of_polynomials() {
        // gcd((x-2)(x+1)^2, derivative) = x+1.
        let p = IntPolynomial::from_i64(&[-2, -3, 0, 1]);
        let g = integer_poly_gcd(&p, &p.derivative());
        assert_eq!(g, IntPolynomial::from_i64(&[1, 1]));
        // Coprime case.
        let a = IntPolynomial::from_i64(&[-1, 1]);
        let b = IntPolynomial::from_i64(&[1, 1]);
        assert_eq!(integer_poly_gcd(&a, &b).degree(), 0);
    }
}
