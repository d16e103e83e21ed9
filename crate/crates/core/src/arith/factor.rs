//! Factorization for moderate (<= 63-bit) inputs: trial division below 10^6,
//! then deterministic Miller-Rabin plus Brent's variant of Pollard rho.

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all u64 inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    // this base set is deterministic for all n < 2^64
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: u64) -> u64 {
    // n odd composite, no factor below 10^6
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        let mut count = 0u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = num_integer::gcd(x.abs_diff(y), n);
            count += 1;
            if count > 1 << 24 {
                break;
            }
        }
        if d != n && d != 1 {
            return d;
        }
        c += 1;
    }
}

/// Complete factorization of n >= 1, primes ascending with exponents.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut n = n;
    let mut push = |p: u64, e: u32, out: &mut Vec<(u64, u32)>| {
        if let Some(last) = out.iter_mut().find(|(q, _)| *q == p) {
            last.1 += e;
        } else {
            out.push((p, e));
        }
    };
    for p in [2u64, 3, 5] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            push(p, e, &mut out);
        }
    }
    // 2,3,5-wheel trial division up to 10^6
    const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
    let mut p = 7u64;
    let mut w = 0usize;
    while p <= 1_000_000 && p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            push(p, e, &mut out);
        }
        p += WHEEL[w];
        w = (w + 1) % 8;
    }
    // the cofactor has no prime factor below 10^6
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            push(m, 1, &mut out);
            continue;
        }
        // perfect squares of large primes dodge rho cycles; check directly
        let r = m.isqrt();
        if r * r == m {
            stack.push(r);
            stack.push(r);
            continue;
        }
        let d = pollard_brent(m);
        stack.push(d);
        stack.push(m / d);
    }
    out.sort_unstable();
    out
}

/// Möbius function via factorization.
pub fn mobius(n: u64) -> i32 {
    debug_assert!(n >= 1);
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(9973), vec![(9973, 1)]);
    }

    #[test]
    fn factorize_reconstructs() {
        for n in 1..5000u64 {
            let f = factorize(n);
            let prod: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
            for w in f.windows(2) {
                assert!(w[0].0 < w[1].0);
            }
        }
    }

    #[test]
    fn factorize_large() {
        // semiprime beyond the trial division bound
        let p = 1_000_003u64;
        let q = 1_000_033u64;
        assert_eq!(factorize(p * q), vec![(p, 1), (q, 1)]);
        assert_eq!(factorize(p * p), vec![(p, 2)]);
        assert_eq!(factorize(999_999_999_989), vec![(999_999_999_989, 1)]);
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(30), -1);
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        for n in 0..20_000u64 {
            let trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(n), trial, "n={n}");
        }
    }
}
