//! Elementary number theory on positive integers.
//!
//! Everything here works on [`PositiveInt`], so zero never reaches the
//! arithmetic. Factorisation is plain trial division; the inputs this crate
//! sees are small enough that nothing cleverer pays for itself.

use alloc::vec::Vec;
use core::fmt;
use core::num::NonZeroU64;

use crate::Error;

/// An integer `≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveInt(NonZeroU64);

impl PositiveInt {
    /// The integer 1.
    pub const ONE: PositiveInt = PositiveInt(NonZeroU64::MIN);

    /// Wraps `value`, rejecting zero.
    pub const fn new(value: u64) -> Result<Self, Error> {
        match NonZeroU64::new(value) {
            Some(v) => Ok(PositiveInt(v)),
            None => Err(Error::Zero),
        }
    }

    /// The wrapped value.
    #[inline]
    pub const fn get(self) -> u64 {
        self.0.get()
    }

    /// Whether the value is odd. 1 is odd.
    #[inline]
    pub const fn is_odd(self) -> bool {
        self.get() % 2 == 1
    }
}

impl TryFrom<u64> for PositiveInt {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self, Error> {
        PositiveInt::new(value)
    }
}

impl From<PositiveInt> for u64 {
    fn from(p: PositiveInt) -> u64 {
        p.get()
    }
}

impl fmt::Display for PositiveInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.get(), f)
    }
}

pub(crate) const fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Greatest common divisor by Euclid's algorithm.
pub fn gcd(a: PositiveInt, b: PositiveInt) -> PositiveInt {
    // gcd of two nonzero values is nonzero
    PositiveInt::new(gcd_u64(a.get(), b.get())).unwrap()
}

/// Prime factorisation of `n` as `(prime, exponent)` pairs in increasing
/// prime order. `factorize(1)` is empty.
pub fn factorize(n: PositiveInt) -> Vec<(u64, u32)> {
    let mut rest = n.get();
    let mut factors = Vec::new();
    let mut push = |rest: &mut u64, p: u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(&mut rest, 2);
    let mut p = 3;
    while p <= rest / p {
        push(&mut rest, p);
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    factors
}

/// `n · Π (1 − 1/p)` over the given primes that divide `n`.
fn totient_over_primes(n: u64, primes: impl IntoIterator<Item = u64>) -> u64 {
    let mut phi = n;
    for p in primes {
        if n.is_multiple_of(p) {
            phi = phi / p * (p - 1);
        }
    }
    phi
}

/// Euler's totient: the number of `j` in `1..=n` coprime to `n`, with
/// `φ(1) = 1`.
pub fn totient(n: PositiveInt) -> PositiveInt {
    let phi = totient_over_primes(n.get(), factorize(n).into_iter().map(|(p, _)| p));
    PositiveInt::new(phi).unwrap()
}

fn divisors_from_factors(factors: &[(u64, u32)]) -> Vec<u64> {
    let mut divs = alloc::vec![1u64];
    for &(p, e) in factors {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Every positive divisor of `n`, once each, in increasing order.
pub fn divisors(n: PositiveInt) -> Vec<PositiveInt> {
    divisors_from_factors(&factorize(n))
        .into_iter()
        .map(|d| PositiveInt::new(d).unwrap())
        .collect()
}

/// `Σ_{k | g} φ(k)`, summed term by term.
///
/// The sum equals `g` for every `g`; this is checked on every call rather
/// than taken for granted, and a failure is an arithmetic bug.
pub fn divisor_totient_sum(g: PositiveInt) -> PositiveInt {
    let factors = factorize(g);
    // every divisor of g has its prime factors among g's
    let sum: u128 = divisors_from_factors(&factors)
        .into_iter()
        .map(|k| totient_over_primes(k, factors.iter().map(|&(p, _)| p)) as u128)
        .sum();
    assert_eq!(
        sum,
        g.get() as u128,
        "divisor-totient sum of {g} disagrees with {g}"
    );
    PositiveInt::new(sum as u64).unwrap()
}
