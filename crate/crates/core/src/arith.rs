//! Small modular-arithmetic helpers. Everything here works on `u64` residues
//! with moduli well below 2^32, so products never overflow.

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1;
    base %= modulus;
    while exp != 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `modulus` via the extended Euclidean algorithm.
pub fn inv_mod(a: u64, modulus: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i64 % modulus as i64, modulus as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(modulus as i64) as u64)
}

/// Multiplicative order of `a` modulo `modulus`, or `None` if `a` is not a unit.
pub fn mult_order(a: u64, modulus: u64) -> Option<u64> {
    if modulus == 1 {
        return Some(1);
    }
    let a = a % modulus;
    if gcd(a, modulus) != 1 {
        return None;
    }
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = x * a % modulus;
        k += 1;
    }
    Some(k)
}

/// Smallest generator of the unit group modulo a prime.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&r| mult_order(r, p) == Some(p - 1))
        .expect("unit group of a prime field is cyclic")
}

/// Negation modulo `modulus`.
#[inline]
pub fn neg_mod(a: u64, modulus: u64) -> u64 {
    (modulus - a % modulus) % modulus
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_by_trial_division() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(9973));
        assert!(!is_prime(9971));
    }

    #[test]
    fn inverses_and_orders() {
        assert_eq!(inv_mod(2, 13), Some(7));
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(4, 8), None);
        assert_eq!(mult_order(2, 7), Some(3));
        assert_eq!(mult_order(3, 7), Some(6));
        assert_eq!(mult_order(0, 7), None);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(3), 2);
        assert_eq!(primitive_root(2), 1);
        assert_eq!(primitive_root(13), 2);
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        for m in [2u64, 3, 7, 13] {
            for a in 0..m {
                let mut x = 1 % m;
                for e in 0..20 {
                    assert_eq!(pow_mod(a, e, m), x);
                    x = x * a % m;
                }
            }
        }
    }
}
