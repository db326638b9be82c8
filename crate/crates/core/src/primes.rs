//! Deterministic primality for 64-bit integers and prime search.

use num_integer::Roots;

const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Miller-Rabin with the first twelve primes as bases, exact below `2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `>= x`.
pub fn next_prime(x: u64) -> u64 {
    let mut p = x.max(2);
    while !is_prime(p) {
        p += 1;
    }
    p
}

/// Smallest prime `>= num / den`.
pub fn smallest_prime_at_least(num: u64, den: u64) -> u64 {
    assert!(den > 0);
    next_prime(num.div_ceil(den))
}

/// Smallest prime `p` with `p >= sqrt(n) + 1/2`, i.e. `(2p - 1)^2 >= 4n`.
pub fn smallest_prime_above_sqrt_plus_half(n: u64) -> u64 {
    let four_n = 4 * u128::from(n);
    let mut p = next_prime(((four_n.sqrt() + 1) / 2) as u64);
    while u128::from(2 * p - 1).pow(2) < four_n {
        p = next_prime(p + 1);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn matches_trial_division() {
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial_division(n), "{n}");
        }
    }

    #[test]
    fn large_values() {
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(18_446_744_073_709_551_615));
        // strong pseudoprimes to several small bases
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(341_550_071_728_321));
    }

    #[test]
    fn rational_search() {
        assert_eq!(smallest_prime_at_least(201, 2), 101);
        assert_eq!(smallest_prime_at_least(2, 1), 2);
        assert_eq!(smallest_prime_at_least(91, 2), 47);
        assert_eq!(smallest_prime_at_least(0, 1), 2);
    }

    #[test]
    fn sqrt_plus_half() {
        assert_eq!(smallest_prime_above_sqrt_plus_half(10_000), 101);
        for n in 1..5000u64 {
            let want = (2..).find(|&p| trial_division(p) && (p as f64) >= (n as f64).sqrt() + 0.5).unwrap();
            assert_eq!(smallest_prime_above_sqrt_plus_half(n), want, "n={n}");
        }
    }
}
