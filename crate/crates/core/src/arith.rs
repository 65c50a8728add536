//! Small integer number theory used by the field constructors and the
//! classification predicates.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `a` modulo `n`; `None` unless gcd(a, n) = 1.
/// The order modulo 1 is 1.
pub fn mult_order(a: u64, n: u64) -> Option<u64> {
    match n {
        0 => return None,
        1 => return Some(1),
        _ => {}
    }
    let a = a % n;
    if gcd(a, n) != 1 {
        return None;
    }
    let mut x = a;
    let mut k = 1u64;
    while x != 1 {
        x = (x as u128 * a as u128 % n as u128) as u64;
        k += 1;
    }
    Some(k)
}

/// 2-adic valuation; `v2(0)` is reported as 64.
pub fn v2(n: u64) -> u32 {
    n.trailing_zeros()
}

/// If `q = p^m` for a prime `p`, returns `(p, m)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let ps = prime_divisors(q);
    if ps.len() != 1 {
        return None;
    }
    let p = ps[0];
    let mut m = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        m += 1;
    }
    Some((p, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(mult_order(2, 3), Some(2));
        assert_eq!(mult_order(4, 3), Some(1));
        assert_eq!(mult_order(5, 4), Some(1));
        assert_eq!(mult_order(3, 7), Some(6));
        assert_eq!(mult_order(2, 4), None);
        assert_eq!(mult_order(5, 1), Some(1));
    }

    #[test]
    fn primes() {
        assert_eq!(prime_divisors(60), vec![2, 3, 5]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert!(is_prime(13) && !is_prime(1) && !is_prime(9));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(pow_mod(3, 4, 5), 1);
    }
}
