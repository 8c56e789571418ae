//! Small number-theory helpers for alphabet sizes.

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
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
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, m))` when `n = p^m` with `p` prime and `m >= 1`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    match factorize(n).as_slice() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}

pub fn smallest_prime_power_at_least(n: usize) -> usize {
    (n.max(2)..)
        .find(|&q| prime_power(q).is_some())
        .expect("prime powers are unbounded")
}

/// True when every prime factor of `c` divides `b`.
pub fn primes_divide(c: usize, b: usize) -> bool {
    factorize(c).iter().all(|&(p, _)| b.is_multiple_of(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization() {
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn prime_power_search() {
        assert_eq!(smallest_prime_power_at_least(6), 7);
        assert_eq!(smallest_prime_power_at_least(4), 4);
        assert_eq!(smallest_prime_power_at_least(10), 11);
        assert_eq!(smallest_prime_power_at_least(24), 25);
    }

    #[test]
    fn gcd_lcm() {
        assert_eq!(gcd(32, 27), 1);
        assert_eq!(lcm(32, 27), 864);
        assert!(primes_divide(2, 6));
        assert!(!primes_divide(3, 2));
        assert!(primes_divide(4, 2));
    }
}
