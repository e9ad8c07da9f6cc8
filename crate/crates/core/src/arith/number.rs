use num_integer::Integer;

/// Euler's totient.
pub fn euler_phi(k: u64) -> u64 {
    assert!(k >= 1, "euler_phi requires k ≥ 1");
    let mut rest = k;
    let mut phi = k;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

/// Units of `Z/kZ` in increasing order.
pub fn units_mod(k: u64) -> Vec<u64> {
    if k == 1 {
        return vec![0];
    }
    (1..k).filter(|a| a.gcd(&k) == 1).collect()
}

/// Positive divisors in increasing order.
pub fn divisors(k: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= k {
        if k % d == 0 {
            small.push(d);
            if d * d != k {
                large.push(k / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Möbius function.
pub fn mobius(k: u64) -> i32 {
    let mut rest = k;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            rest /= p;
            if rest % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if rest > 1 {
        sign = -sign;
    }
    sign
}

pub fn is_prime(k: u64) -> bool {
    k >= 2 && (2..).take_while(|d| d * d <= k).all(|d| k % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_by_gcd_scan(k: u64) -> u64 {
        (1..=k).filter(|a| a.gcd(&k) == 1).count() as u64
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(phi_by_gcd_scan(28), 12);
        assert_eq!(euler_phi(28), 12);
        assert_eq!(phi_by_gcd_scan(30), 8);
        assert_eq!(euler_phi(30), 8);
    }

    #[test]
    fn totient_matches_scan() {
        for k in 1..=500 {
            assert_eq!(euler_phi(k), phi_by_gcd_scan(k), "k = {k}");
            assert_eq!(units_mod(k).len() as u64, euler_phi(k));
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(28), vec![1, 2, 4, 7, 14, 28]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn mobius_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1];
        for (k, &mu) in (1..=10).zip(expected.iter()) {
            assert_eq!(mobius(k), mu, "k = {k}");
        }
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&k| is_prime(k)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
