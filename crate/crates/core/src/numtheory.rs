//! Small integer helpers: gcd/lcm, modular powers and orders, factorization.
//!
//! Everything here works on `u64` and is sized for desk-scale groups, so the
//! algorithms are the plain ones (trial division, repeated multiplication).

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// `base^exp mod modulus`, with `x mod 1 = 0`.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Least `l >= 1` with `r^l = 1 (mod n)`, or `None` when `gcd(r, n) != 1`.
/// Modulo 1 every residue has order 1.
pub fn multiplicative_order(r: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(1);
    }
    if gcd(r % n, n) != 1 {
        return None;
    }
    let r = r % n;
    let mut x = r;
    let mut l = 1;
    while x != 1 {
        x = (x as u128 * r as u128 % n as u128) as u64;
        l += 1;
    }
    Some(l)
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % n as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(n as i128) as u64)
}

/// Combine `x = r1 (mod m1)` and `x = r2 (mod m2)` into one congruence
/// `x = r (mod lcm)`, or `None` when they are incompatible.
pub fn crt_pair(r1: u64, m1: u64, r2: u64, m2: u64) -> Option<(u64, u64)> {
    let g = gcd(m1, m2);
    let (r1, r2) = (r1 % m1, r2 % m2);
    if (r1 as i128 - r2 as i128).rem_euclid(g as i128) != 0 {
        return None;
    }
    let l = lcm(m1, m2);
    // x = r1 + m1 * k with m1 * k = r2 - r1 (mod m2)
    let m2g = m2 / g;
    let diff = (r2 as i128 - r1 as i128).rem_euclid(m2 as i128) as u64 / g;
    let inv = mod_inverse((m1 / g) % m2g.max(1), m2g).unwrap_or(0);
    let k = (diff as u128 * inv as u128 % m2g.max(1) as u128) as u64;
    let x = (r1 as u128 + m1 as u128 * k as u128) % l as u128;
    Some((x as u64, l))
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

pub fn is_square_free(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

/// Largest `e` with `p^e | n` (for `n > 0`).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_inverses() {
        assert_eq!(multiplicative_order(2, 3), Some(2));
        assert_eq!(multiplicative_order(7, 9), Some(3));
        assert_eq!(multiplicative_order(3, 6), None);
        assert_eq!(multiplicative_order(5, 1), Some(1));
        assert_eq!(mod_inverse(2, 3), Some(2));
        assert_eq!(mod_inverse(2, 4), None);
    }

    #[test]
    fn crt_combines_and_rejects() {
        assert_eq!(crt_pair(2, 3, 3, 5), Some((8, 15)));
        assert_eq!(crt_pair(1, 4, 3, 6), Some((9, 12)));
        assert_eq!(crt_pair(1, 4, 2, 6), None);
        assert_eq!(crt_pair(0, 1, 4, 7), Some((4, 7)));
    }

    #[test]
    fn factor_helpers() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert!(is_square_free(105));
        assert!(!is_square_free(9));
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(1), 1);
        assert!(is_prime(13) && !is_prime(1) && !is_prime(15));
        assert_eq!(valuation(96, 2), 5);
    }
}
