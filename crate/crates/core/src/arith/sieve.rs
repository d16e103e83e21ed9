//! Bit-packed squarefree sieve and a plain prime sieve.

use crate::error::ArithError;

/// Primes up to and including `limit`, by Eratosthenes.
pub fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return vec![];
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            out.push(p as u64);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    out
}

/// Bitmap over [1, N] with bit d set iff d is squarefree.
///
/// Built by clearing multiples of p^2 for primes p <= sqrt(N); 10^8 fits in
/// 12.5 MB.
pub struct SquarefreeTable {
    n: u64,
    bits: Vec<u64>,
}

/// Default cap on table size: 10^9 entries = 125 MB of bits.
pub const DEFAULT_SIEVE_BUDGET: u64 = 1_000_000_000;

impl SquarefreeTable {
    pub fn new(n: u64) -> Result<Self, ArithError> {
        Self::with_budget(n, DEFAULT_SIEVE_BUDGET)
    }

    pub fn with_budget(n: u64, budget: u64) -> Result<Self, ArithError> {
        if n == 0 {
            return Err(ArithError::EmptyRange);
        }
        if n > budget {
            return Err(ArithError::SieveBudget { n, budget });
        }
        let words = (n as usize + 1) / 64 + 1;
        let mut bits = vec![!0u64; words];
        for p in small_primes(n.isqrt()) {
            let pp = p * p;
            let mut m = pp;
            while m <= n {
                bits[(m / 64) as usize] &= !(1u64 << (m % 64));
                m += pp;
            }
        }
        Ok(Self { n, bits })
    }

    /// Upper end of the sieved range.
    pub fn limit(&self) -> u64 {
        self.n
    }

    /// Whether d is squarefree; panics if d is 0 or out of range.
    pub fn is_squarefree(&self, d: u64) -> bool {
        assert!(d >= 1 && d <= self.n, "d = {d} outside table [1, {}]", self.n);
        self.bits[(d / 64) as usize] >> (d % 64) & 1 == 1
    }

    /// Odd squarefree d in [lo, hi] ascending. Empty when lo > hi.
    pub fn odd_squarefree(&self, lo: u64, hi: u64) -> impl Iterator<Item = u64> + '_ {
        let lo = lo.max(1);
        let hi = hi.min(self.n);
        let start = if lo % 2 == 0 { lo + 1 } else { lo };
        (start..=hi)
            .step_by(2)
            .filter(move |&d| self.is_squarefree(d))
    }
}
