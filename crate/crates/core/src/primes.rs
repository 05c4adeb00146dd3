//! Prime sieving and primality helpers shared by the counting layers.

/// All primes `<= limit` by an Eratosthenes sieve.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            out.push(p as u64);
            let mut q = p * p;
            while q <= n {
                composite[q] = true;
                q += p;
            }
        }
    }
    out
}

/// The prime-counting function pi(x), computed by sieve.
pub fn prime_pi(x: u64) -> u64 {
    sieve_primes(x).len() as u64
}

/// Deterministic trial-division primality test; fine at desk scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sieve() {
        assert_eq!(sieve_primes(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(prime_pi(20), 8);
        assert_eq!(prime_pi(1), 0);
    }

    #[test]
    fn pi_of_ten_thousand() {
        assert_eq!(prime_pi(10_000), 1229);
    }

    #[test]
    fn trial_division_agrees_with_sieve() {
        let primes = sieve_primes(2000);
        for n in 0..=2000u64 {
            assert_eq!(is_prime(n), primes.binary_search(&n).is_ok(), "n = {n}");
        }
    }
}
