//! Small number-theoretic helpers used by the trace formulas.

/// Prime factorization as (p, p^e) pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut q = 1u64;
            while n.is_multiple_of(d) {
                n /= d;
                q *= d;
            }
            out.push((d, q));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

/// Euler's totient.
pub fn phi(n: u64) -> u64 {
    let mut r = n;
    for (p, _) in factorize(n) {
        r = r / p * (p - 1);
    }
    r
}

/// Moebius function.
pub fn moebius(n: u64) -> i64 {
    let mut r = 1i64;
    for (p, q) in factorize(n) {
        if q != p {
            return 0;
        }
        r = -r;
    }
    r
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num::integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num::integer::lcm(a, b)
}

/// Divisors of n in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        assert_eq!(phi(1), 1);
        assert_eq!(phi(12), 4);
        assert_eq!(phi(11), 10);
        assert_eq!(phi(1320), 320);
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(10), 1);
        assert_eq!(moebius(30), -1);
    }

    #[test]
    fn factorize_exponent() {
        assert_eq!(factorize(1320), vec![(2, 8), (3, 3), (5, 5), (11, 11)]);
    }

    #[test]
    fn divisors_ascending() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
