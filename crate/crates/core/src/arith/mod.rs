//! Exact integer kernel: Kronecker symbols, quadratic characters, squarefree
//! sieving, factorization and the Möbius function.
//!
//! Everything here is pure and reentrant; the sieve tables are immutable once
//! built and can be shared freely across threads.

mod factor;
mod sieve;

pub use factor::{factorize, is_prime, mobius};
pub use sieve::{small_primes, SquarefreeTable};

use crate::error::ArithError;

/// Kronecker symbol (a|n), extended to all integers: n may be zero, negative
/// or even. Completely multiplicative in both arguments.
///
/// Binary-GCD-style iteration, no factorization of n.
pub fn kronecker(a: i64, n: i64) -> i32 {
    // (a|0) = 1 iff a = ±1
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    if a % 2 == 0 && n % 2 == 0 {
        return 0;
    }
    let mut a = a;
    let mut n = n;
    let mut sign = 1i32;
    // (a|-1) = -1 iff a < 0
    if n < 0 {
        n = -n;
        if a < 0 {
            sign = -sign;
        }
    }
    // strip factors of two from n via (a|2) = (2|a) for odd a
    let twos = n.trailing_zeros();
    if twos > 0 {
        n >>= twos;
        if twos % 2 == 1 {
            match (a % 8 + 8) % 8 {
                3 | 5 => sign = -sign,
                _ => {}
            }
        }
    }
    // now n is odd and positive; run the binary Jacobi loop
    a = a.rem_euclid(n);
    while a != 0 {
        let twos = a.trailing_zeros();
        a >>= twos;
        if twos % 2 == 1 {
            match n % 8 {
                3 | 5 => sign = -sign,
                _ => {}
            }
        }
        // quadratic reciprocity for odd positive a, n
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Which quadratic character a [`QuadraticCharacter`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharacterKind {
    /// chi_d for squarefree nonzero d: (d|.) when d = 1 mod 4, else (4d|.).
    ChiD { d: i64 },
    /// chi_{a c} for a in {±1, ±2} and odd positive squarefree c.
    ChiAC { a: i64, c: u64 },
}

/// Quadratic character evaluated through the Kronecker symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticCharacter {
    kind: CharacterKind,
    /// Period of the character (|d| when d = 1 mod 4, else 4|d|).
    conductor: u64,
}

impl QuadraticCharacter {
    /// chi_d for squarefree nonzero d.
    pub fn chi_d(d: i64) -> Result<Self, ArithError> {
        if d == 0 {
            return Err(ArithError::MalformedCharacter("d must be nonzero".into()));
        }
        if !is_squarefree_i64(d) {
            return Err(ArithError::MalformedCharacter(format!(
                "d = {d} is not squarefree"
            )));
        }
        let conductor = if d.rem_euclid(4) == 1 {
            d.unsigned_abs()
        } else {
            4 * d.unsigned_abs()
        };
        Ok(Self {
            kind: CharacterKind::ChiD { d },
            conductor,
        })
    }

    /// chi_{a c} with a in {±1, ±2} and c odd, positive, squarefree.
    pub fn chi_ac(a: i64, c: u64) -> Result<Self, ArithError> {
        if !matches!(a, 1 | -1 | 2 | -2) {
            return Err(ArithError::MalformedCharacter(format!(
                "a = {a} not in {{±1, ±2}}"
            )));
        }
        if c == 0 || c % 2 == 0 || !is_squarefree_i64(c as i64) {
            return Err(ArithError::MalformedCharacter(format!(
                "c = {c} must be odd positive squarefree"
            )));
        }
        let d = a * c as i64;
        let conductor = if d.rem_euclid(4) == 1 {
            d.unsigned_abs()
        } else {
            4 * d.unsigned_abs()
        };
        Ok(Self {
            kind: CharacterKind::ChiAC { a, c },
            conductor,
        })
    }

    pub fn kind(&self) -> CharacterKind {
        self.kind
    }

    /// The discriminant-like label d with chi = chi_d.
    pub fn label(&self) -> i64 {
        match self.kind {
            CharacterKind::ChiD { d } => d,
            CharacterKind::ChiAC { a, c } => a * c as i64,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Evaluate at m > 0. Zero exactly when gcd(m, conductor) > 1.
    pub fn eval(&self, m: u64) -> i32 {
        let d = self.label();
        if d.rem_euclid(4) == 1 {
            kronecker(d, m as i64)
        } else {
            kronecker(4 * d, m as i64)
        }
    }

    /// Whether the character is even (chi(-1) = 1).
    pub fn is_even(&self) -> bool {
        self.label() > 0
    }
}

fn is_squarefree_i64(d: i64) -> bool {
    let n = d.unsigned_abs();
    factorize(n).iter().all(|&(_, e)| e == 1)
}
