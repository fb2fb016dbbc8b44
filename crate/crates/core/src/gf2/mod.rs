//! Arithmetic over GF(2): polynomial primitives, irreducibility and order,
//! associated primitive polynomials, and the extension-field context with
//! its Zech logarithm table.

mod field;
mod poly;

pub use field::{CyclotomicParams, FieldContext, ZECH_INFINITY};
pub use poly::BinaryPolynomial;

use crate::error::{Error, Result};

/// Distinct prime factors of `n`, ascending. Trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd_u64(a, b) * b
}

/// `x^(2^k) mod p`.
fn x_pow_two_pow(k: usize, p: BinaryPolynomial) -> BinaryPolynomial {
    let mut acc = BinaryPolynomial::X.rem(p).expect("nonzero modulus");
    for _ in 0..k {
        acc = acc.mul_mod(acc, p);
    }
    acc
}

/// Rabin's test: `p` of degree `d` is irreducible iff `x^(2^d) = x mod p`
/// and `gcd(x^(2^(d/r)) - x, p) = 1` for every prime `r | d`.
pub fn is_irreducible(p: BinaryPolynomial) -> bool {
    let d = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    let x = BinaryPolynomial::X;
    if x_pow_two_pow(d, p) != x {
        return false;
    }
    for r in prime_factors(d as u64) {
        let h = x_pow_two_pow(d / r as usize, p).add(x);
        if h.gcd(p).expect("nonzero modulus") != BinaryPolynomial::ONE {
            return false;
        }
    }
    true
}

/// Multiplicative order of `x` modulo the irreducible `p`, i.e. the period
/// of every nonzero sequence of the LFSR with characteristic polynomial `p`.
pub fn poly_order(p: BinaryPolynomial) -> Result<u64> {
    let n = p.deg();
    if n == 0 || !p.constant_term() {
        return Err(Error::InvalidFactor(p));
    }
    if n > 62 {
        return Err(Error::DegreeOverflow(n));
    }
    if !is_irreducible(p) {
        return Err(Error::Reducible(p));
    }
    let group = (1u64 << n) - 1;
    let mut e = group;
    for r in prime_factors(group) {
        while e.is_multiple_of(r) && BinaryPolynomial::X.pow_mod(e / r, p) == BinaryPolynomial::ONE
        {
            e /= r;
        }
    }
    Ok(e)
}

pub fn is_primitive(p: BinaryPolynomial) -> bool {
    let n = p.deg();
    if n == 0 || n > 62 || !p.constant_term() {
        return false;
    }
    matches!(poly_order(p), Ok(e) if e == (1u64 << n) - 1)
}

/// Evaluate `g` at the field element `beta` of `GF(2)[x]/(modulus)`.
pub fn eval_at(
    g: BinaryPolynomial,
    beta: BinaryPolynomial,
    modulus: BinaryPolynomial,
) -> BinaryPolynomial {
    let mut acc = BinaryPolynomial::ZERO;
    for i in (0..=g.deg()).rev() {
        acc = acc.mul_mod(beta, modulus);
        if g.coeff(i) {
            acc = acc.add(BinaryPolynomial::ONE);
        }
    }
    acc
}

/// A primitive polynomial `q` of the same degree as `g` whose root `alpha`
/// satisfies `g(alpha^t) = 0` with `t = (2^n - 1) / ord(g)`.
///
/// Candidates are scanned in ascending order of their coefficient word
/// (bit `i` = coefficient of `x^i`), so the answer is reproducible. A
/// primitive `g` is its own associate.
pub fn find_associated_primitive(g: BinaryPolynomial) -> Result<BinaryPolynomial> {
    let e = poly_order(g)?;
    let n = g.deg();
    let t = ((1u64 << n) - 1) / e;
    if t == 1 {
        return Ok(g);
    }
    let lo = (1u64 << n) | 1;
    let hi = 1u64 << (n + 1);
    for bits in (lo..hi).step_by(2) {
        let q = BinaryPolynomial::from_bits(bits);
        if !is_primitive(q) {
            continue;
        }
        let beta = BinaryPolynomial::X.pow_mod(t, q);
        if eval_at(g, beta, q).is_zero() {
            return Ok(q);
        }
    }
    unreachable!("every irreducible polynomial has an associated primitive polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinaryPolynomial {
        s.parse().unwrap()
    }

    /// Brute-force irreducibility: no divisor of degree 1..=d/2.
    fn irreducible_oracle(q: BinaryPolynomial) -> bool {
        let d = q.deg();
        if d == 0 {
            return false;
        }
        for bits in 2u64..(1u64 << (d / 2 + 1)) {
            let c = BinaryPolynomial::from_bits(bits);
            if c.deg() >= 1 && c.deg() <= d / 2 && q.rem(c).unwrap().is_zero() {
                return false;
            }
        }
        true
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(p("111")));
        assert!(!is_irreducible(p("1001")));
        assert!(is_irreducible(p("11111")));
        assert!(is_irreducible(p("11")));
        assert!(is_irreducible(p("10")));
        assert!(!is_irreducible(p("1")));
        assert!(!is_irreducible(p("0")));
    }

    #[test]
    fn irreducibility_agrees_with_trial_division() {
        for bits in 2u64..(1 << 11) {
            let q = BinaryPolynomial::from_bits(bits);
            assert_eq!(is_irreducible(q), irreducible_oracle(q), "{q:?}");
        }
    }

    #[test]
    fn irreducible_counts_by_degree() {
        // Necklace counts of binary Lyndon words.
        let expected = [2, 1, 2, 3, 6, 9, 18, 30, 56, 99];
        for (i, &count) in expected.iter().enumerate() {
            let d = i + 1;
            let got = ((1u64 << d)..(1u64 << (d + 1)))
                .filter(|&b| is_irreducible(BinaryPolynomial::from_bits(b)))
                .count();
            assert_eq!(got, count, "degree {d}");
        }
    }

    #[test]
    fn orders() {
        assert_eq!(poly_order(p("11111")).unwrap(), 5);
        assert_eq!(poly_order(p("10011")).unwrap(), 15);
        assert_eq!(poly_order(p("11")).unwrap(), 1);
        assert_eq!(poly_order(p("111")).unwrap(), 3);
        assert_eq!(poly_order(p("1001001")).unwrap(), 9);
        assert_eq!(poly_order(p("11111111111")).unwrap(), 11);
        assert_eq!(poly_order(p("101011100011")).unwrap(), 23);
        assert_eq!(poly_order(p("10000001111")).unwrap(), 341);
        assert_eq!(poly_order(p("1001")), Err(Error::Reducible(p("1001"))));
        assert_eq!(poly_order(p("10")), Err(Error::InvalidFactor(p("10"))));
    }

    #[test]
    fn order_divides_group_order_and_matches_brute_force() {
        for bits in 3u64..(1 << 11) {
            let q = BinaryPolynomial::from_bits(bits);
            if !q.constant_term() || !is_irreducible(q) {
                continue;
            }
            let n = q.deg();
            let e = poly_order(q).unwrap();
            assert_eq!(((1u64 << n) - 1) % e, 0);
            let mut acc = BinaryPolynomial::ONE;
            let mut brute = 0;
            for k in 1..=(1u64 << n) {
                acc = acc.mul_mod(BinaryPolynomial::X, q);
                if acc == BinaryPolynomial::ONE {
                    brute = k;
                    break;
                }
            }
            assert_eq!(e, brute, "{q:?}");
        }
    }

    #[test]
    fn primitive_counts() {
        // phi(2^n - 1) / n primitive polynomials of degree n.
        let expected = [(2, 1), (3, 2), (4, 2), (5, 6), (6, 6), (7, 18), (8, 16)];
        for (d, count) in expected {
            let got = ((1u64 << d)..(1u64 << (d + 1)))
                .filter(|&b| is_primitive(BinaryPolynomial::from_bits(b)))
                .count();
            assert_eq!(got, count, "degree {d}");
        }
    }

    #[test]
    fn associated_primitive_examples() {
        let g = p("11111");
        let q = find_associated_primitive(g).unwrap();
        assert_eq!(q, p("10011"));
        assert!(is_primitive(q));
        assert_eq!(find_associated_primitive(p("111")).unwrap(), p("111"));
        assert_eq!(find_associated_primitive(p("1011")).unwrap(), p("1011"));
        assert_eq!(find_associated_primitive(p("11")).unwrap(), p("11"));
    }

    /// Minimal polynomial of `beta` in `GF(2)[x]/q` as the product of
    /// `(y - beta^(2^i))` over its distinct conjugates.
    fn minimal_polynomial(beta: BinaryPolynomial, q: BinaryPolynomial) -> BinaryPolynomial {
        let mut conjugates = vec![beta];
        let mut c = beta.mul_mod(beta, q);
        while c != beta {
            conjugates.push(c);
            c = c.mul_mod(c, q);
        }
        // Polynomial in y with field coefficients, lowest degree first.
        let mut coeffs = vec![BinaryPolynomial::ONE];
        for r in conjugates {
            let mut next = vec![BinaryPolynomial::ZERO; coeffs.len() + 1];
            for (i, &a) in coeffs.iter().enumerate() {
                next[i + 1] = next[i + 1].add(a);
                next[i] = next[i].add(a.mul_mod(r, q));
            }
            coeffs = next;
        }
        let mut bits = 0u64;
        for (i, c) in coeffs.iter().enumerate() {
            assert!(
                c.bits() <= 1,
                "minimal polynomial has coefficients outside GF(2)"
            );
            bits |= c.bits() << i;
        }
        BinaryPolynomial::from_bits(bits)
    }

    #[test]
    fn associated_primitive_has_requested_minimal_polynomial() {
        for bits in 3u64..(1 << 10) {
            let g = BinaryPolynomial::from_bits(bits);
            if !g.constant_term() || !is_irreducible(g) {
                continue;
            }
            let q = find_associated_primitive(g).unwrap();
            let n = g.deg();
            let t = ((1u64 << n) - 1) / poly_order(g).unwrap();
            assert!(is_primitive(q));
            assert_eq!(q.deg(), n);
            let beta = BinaryPolynomial::X.pow_mod(t, q);
            assert_eq!(minimal_polynomial(beta, q), g, "g = {g:?}, q = {q:?}");
        }
    }
}
