//! Elements of `D_n` in normal form.
//!
//! Every element is written `r^k f^s` with `0 ≤ k < n` and `s ∈ {0, 1}`.
//! Multiplication follows from `f r = r⁻¹ f`:
//!
//! ```text
//! (r^i f^s)(r^j f^t) = r^(i + (−1)^s j) f^(s ⊕ t)
//! ```
//!
//! Equality is structural on the normal form. `D_1 = {e, f}` and the Klein
//! four-group `D_2` are covered by the same rule.

use core::fmt;
use core::ops::Mul;

use crate::arith::{gcd_u64, PositiveInt};
use crate::Error;

/// The index `n` of a dihedral group `D_n` (of order `2n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupIndex(PositiveInt);

impl GroupIndex {
    /// `D_n` for a positive `n`.
    pub const fn new(n: PositiveInt) -> Self {
        GroupIndex(n)
    }

    /// `D_n`, rejecting `n = 0`.
    pub const fn try_from_u64(n: u64) -> Result<Self, Error> {
        match PositiveInt::new(n) {
            Ok(n) => Ok(GroupIndex(n)),
            Err(e) => Err(e),
        }
    }

    /// The index `n`.
    #[inline]
    pub const fn n(self) -> PositiveInt {
        self.0
    }

    /// The group order `2n`.
    pub const fn order(self) -> u128 {
        2 * self.0.get() as u128
    }

    /// The identity `e`.
    pub const fn identity(self) -> DihedralElement {
        DihedralElement {
            n: self.0.get(),
            rot: 0,
            flip: false,
        }
    }

    /// `r^k`, with `k` reduced mod `n`.
    pub const fn rotation(self, k: u64) -> DihedralElement {
        DihedralElement {
            n: self.0.get(),
            rot: k % self.0.get(),
            flip: false,
        }
    }

    /// `r^k f`, with `k` reduced mod `n`.
    pub const fn reflection(self, k: u64) -> DihedralElement {
        DihedralElement {
            n: self.0.get(),
            rot: k % self.0.get(),
            flip: true,
        }
    }

    /// All `2n` elements in canonical order: by rotation exponent, then
    /// rotation before reflection.
    pub fn elements(self) -> impl DoubleEndedIterator<Item = DihedralElement> + Clone {
        (0..self.0.get()).flat_map(move |k| [self.rotation(k), self.reflection(k)])
    }

    /// The `n` rotations `r^0, …, r^(n−1)`.
    pub fn rotations(self) -> impl DoubleEndedIterator<Item = DihedralElement> + Clone {
        (0..self.0.get()).map(move |k| self.rotation(k))
    }

    /// The `n` reflections `f, r f, …, r^(n−1) f`.
    pub fn reflections(self) -> impl DoubleEndedIterator<Item = DihedralElement> + Clone {
        (0..self.0.get()).map(move |k| self.reflection(k))
    }

    /// Parses the textual form produced by [`DihedralElement`]'s `Display`.
    ///
    /// Accepts `e`, `f`, `r`, `r^k`, and a rotation followed by `f`,
    /// optionally separated by `·` or `*` (`r^2·f`, `r*f`, `rf`). The
    /// exponent is reduced mod `n`.
    pub fn parse(self, s: &str) -> Result<DihedralElement, Error> {
        let s = s.trim();
        match s {
            "" => return Err(Error::Parse("empty")),
            "e" => return Ok(self.identity()),
            "f" => return Ok(self.reflection(0)),
            _ => {}
        }
        let rest = s.strip_prefix('r').ok_or(Error::Parse(
            "expected `e`, `f` or a word starting with `r`",
        ))?;
        let (k, rest) = match rest.strip_prefix('^') {
            Some(exp) => {
                let end = exp.find(|c: char| !c.is_ascii_digit()).unwrap_or(exp.len());
                if end == 0 {
                    return Err(Error::Parse("missing exponent after `^`"));
                }
                let k: u128 = exp[..end]
                    .parse()
                    .map_err(|_| Error::Parse("exponent too large"))?;
                ((k % self.0.get() as u128) as u64, &exp[end..])
            }
            None => (1 % self.0.get(), rest),
        };
        let rest = rest
            .strip_prefix('·')
            .or_else(|| rest.strip_prefix('*'))
            .map_or(Ok(rest), |r| {
                if r.is_empty() {
                    Err(Error::Parse("dangling separator"))
                } else {
                    Ok(r)
                }
            })?;
        match rest {
            "" => Ok(self.rotation(k)),
            "f" => Ok(self.reflection(k)),
            _ => Err(Error::Parse("unexpected trailing characters")),
        }
    }
}

impl fmt::Display for GroupIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D_{}", self.0)
    }
}

/// An element `r^rot f^flip` of `D_n`.
///
/// The fields are private so that `rot < n` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    n: u64,
    rot: u64,
    flip: bool,
}

impl DihedralElement {
    /// The group this element lives in.
    pub fn group(&self) -> GroupIndex {
        GroupIndex(PositiveInt::new(self.n).unwrap())
    }

    /// The rotation exponent, in `0..n`.
    #[inline]
    pub const fn rot(&self) -> u64 {
        self.rot
    }

    /// Whether this is a reflection `r^k f`.
    #[inline]
    pub const fn flip(&self) -> bool {
        self.flip
    }

    /// Whether this is the identity.
    #[inline]
    pub const fn is_identity(&self) -> bool {
        self.rot == 0 && !self.flip
    }

    /// Sort key for the canonical order: rotation exponent, then flip.
    #[inline]
    pub const fn key(&self) -> (u64, bool) {
        (self.rot, self.flip)
    }

    fn check_same_group(&self, other: &Self) -> Result<(), Error> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                expected: self.n,
                found: other.n,
            })
        }
    }

    /// The product `self · rhs`, or a mismatch error if the elements come
    /// from different groups.
    pub fn multiply(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_same_group(rhs)?;
        let n = self.n as u128;
        let j = rhs.rot as u128;
        let j = if self.flip { (n - j) % n } else { j };
        Ok(DihedralElement {
            n: self.n,
            rot: ((self.rot as u128 + j) % n) as u64,
            flip: self.flip ^ rhs.flip,
        })
    }

    /// The inverse. Reflections are their own inverse.
    pub fn inverse(&self) -> Self {
        if self.flip {
            *self
        } else {
            DihedralElement {
                rot: (self.n - self.rot) % self.n,
                ..*self
            }
        }
    }

    /// `self^k`, with `self^0 = e`.
    pub fn power(&self, k: u64) -> Self {
        if self.flip {
            if k.is_multiple_of(2) {
                self.group().identity()
            } else {
                *self
            }
        } else {
            let rot = (self.rot as u128 * k as u128) % self.n as u128;
            DihedralElement {
                rot: rot as u64,
                ..*self
            }
        }
    }

    /// The least `k ≥ 1` with `self^k = e`.
    pub fn order(&self) -> PositiveInt {
        let ord = if self.flip {
            2
        } else {
            // gcd(n, 0) = n gives order 1 for the identity
            self.n / gcd_u64(self.n, self.rot)
        };
        PositiveInt::new(ord).unwrap()
    }
}

impl Mul for DihedralElement {
    type Output = DihedralElement;

    /// # Panics
    ///
    /// If the operands belong to different groups. Use
    /// [`DihedralElement::multiply`] to get an error instead.
    fn mul(self, rhs: Self) -> Self {
        match self.multiply(&rhs) {
            Ok(p) => p,
            Err(e) => panic!("{e}"),
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rot, self.flip) {
            (0, false) => f.write_str("e"),
            (0, true) => f.write_str("f"),
            (k, false) => write!(f, "r^{k}"),
            (k, true) => write!(f, "r^{k}·f"),
        }
    }
}

/// Whether `r ↦ a`, `f ↦ b` extends to a homomorphism `D_m → D_n`.
///
/// Checks the defining relations of `D_m` on the images: `a^m = e`,
/// `b² = e` and `ab = ba⁻¹`. By von Dyck's theorem these are exactly the
/// conditions for the assignment to extend.
pub fn satisfies_presentation(
    m: PositiveInt,
    a: &DihedralElement,
    b: &DihedralElement,
) -> Result<bool, Error> {
    a.check_same_group(b)?;
    Ok(a.power(m.get()).is_identity()
        && b.power(2).is_identity()
        && a.multiply(b)? == b.multiply(&a.inverse())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn d(n: u64) -> GroupIndex {
        GroupIndex::try_from_u64(n).unwrap()
    }

    fn pos(v: u64) -> PositiveInt {
        PositiveInt::new(v).unwrap()
    }

    fn power_by_repetition(a: DihedralElement, k: u64) -> DihedralElement {
        (0..k).fold(a.group().identity(), |acc, _| acc * a)
    }

    fn order_by_repetition(a: DihedralElement) -> u64 {
        let mut x = a;
        let mut k = 1;
        while !x.is_identity() {
            x = x * a;
            k += 1;
        }
        k
    }

    #[test]
    fn identity_examples() {
        assert_eq!(d(5).identity().key(), (0, false));
        assert_eq!(d(1).identity().key(), (0, false));
        for x in d(7).elements() {
            assert_eq!(d(7).identity() * x, x);
        }
    }

    #[test]
    fn multiply_examples() {
        let g = d(5);
        assert_eq!(g.rotation(1) * g.rotation(2), g.rotation(3));
        assert_eq!(g.reflection(0) * g.rotation(1), g.reflection(4));
        let h = d(6);
        assert_eq!(h.reflection(2) * h.reflection(2), h.identity());
    }

    #[test]
    fn mismatched_groups_error() {
        let err = d(3).rotation(1).multiply(&d(4).rotation(1)).unwrap_err();
        assert_eq!(
            err,
            Error::GroupMismatch {
                expected: 3,
                found: 4
            }
        );
        let err = satisfies_presentation(pos(2), &d(3).identity(), &d(5).identity());
        assert!(err.is_err());
    }

    #[test]
    #[should_panic(expected = "D_4")]
    fn mul_operator_panics_on_mismatch() {
        let _ = d(3).rotation(1) * d(4).rotation(1);
    }

    #[test]
    fn inverse_examples() {
        let g = d(7);
        assert_eq!(g.rotation(3).inverse(), g.rotation(4));
        assert_eq!(g.reflection(2).inverse(), g.reflection(2));
        assert_eq!(d(1).identity().inverse(), d(1).identity());
    }

    #[test]
    fn power_examples() {
        assert!(d(5).rotation(2).power(5).is_identity());
        assert!(d(8).reflection(3).power(2).is_identity());
        assert_eq!(power_by_repetition(d(12).rotation(2), 3), d(12).rotation(6));
        assert_eq!(d(12).rotation(2).power(3), d(12).rotation(6));
        assert!(d(12).rotation(5).power(0).is_identity());
    }

    #[test]
    fn order_examples() {
        assert_eq!(d(9).identity().order().get(), 1);
        assert_eq!(order_by_repetition(d(12).rotation(8)), 3);
        assert_eq!(d(12).rotation(8).order().get(), 3);
        assert_eq!(d(11).reflection(5).order().get(), 2);
        assert_eq!(d(1).reflection(0).order().get(), 2);
    }

    #[test]
    fn presentation_examples() {
        let g5 = d(5);
        assert!(satisfies_presentation(pos(3), &g5.identity(), &g5.identity()).unwrap());
        let g3 = d(3);
        assert!(!satisfies_presentation(pos(3), &g3.rotation(1), &g3.identity()).unwrap());
        let g4 = d(4);
        assert!(satisfies_presentation(pos(2), &g4.identity(), &g4.rotation(2)).unwrap());
    }

    #[test]
    fn group_laws_exhaustive() {
        for n in 1..=16 {
            let g = d(n);
            let elems: Vec<_> = g.elements().collect();
            assert_eq!(elems.len() as u128, g.order());
            for &x in &elems {
                assert_eq!(g.identity() * x, x);
                assert_eq!(x * g.identity(), x);
                assert!((x * x.inverse()).is_identity());
                assert!((x.inverse() * x).is_identity());
                for &y in &elems {
                    for &z in &elems {
                        assert_eq!((x * y) * z, x * (y * z));
                    }
                }
            }
        }
    }

    #[test]
    fn orders_exhaustive() {
        for n in 1..=32 {
            let g = d(n);
            for x in g.elements() {
                let ord = x.order().get();
                assert_eq!(ord, order_by_repetition(x));
                assert_eq!((2 * n) % ord, 0);
                for k in 0..=2 * n + 1 {
                    assert_eq!(x.power(k), power_by_repetition(x, k));
                }
            }
            for a in 0..n {
                assert_eq!(g.rotation(a).order().get(), n / gcd_u64(n, a));
            }
        }
    }

    #[test]
    fn presentation_matches_exhaustive_map_check() {
        for m in 1..=8 {
            let dom = d(m);
            for n in 1..=8 {
                let g = d(n);
                for a in g.elements() {
                    for b in g.elements() {
                        let rho = |x: DihedralElement| a.power(x.rot()) * b.power(x.flip() as u64);
                        // rho must also reproduce the generator images; for m = 1
                        // this is what forces a = e
                        let is_hom = rho(dom.rotation(1)) == a
                            && rho(dom.reflection(0)) == b
                            && dom
                                .elements()
                                .all(|x| dom.elements().all(|y| rho(x * y) == rho(x) * rho(y)));
                        assert_eq!(
                            satisfies_presentation(pos(m), &a, &b).unwrap(),
                            is_hom,
                            "m={m} n={n} a={a} b={b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        let g = d(6);
        assert_eq!(g.identity().to_string(), "e");
        assert_eq!(g.reflection(0).to_string(), "f");
        assert_eq!(g.rotation(1).to_string(), "r^1");
        assert_eq!(g.reflection(4).to_string(), "r^4·f");
    }

    #[test]
    fn parse_forms() {
        let g = d(6);
        assert_eq!(g.parse("e"), Ok(g.identity()));
        assert_eq!(g.parse("f"), Ok(g.reflection(0)));
        assert_eq!(g.parse("r"), Ok(g.rotation(1)));
        assert_eq!(g.parse("rf"), Ok(g.reflection(1)));
        assert_eq!(g.parse("r*f"), Ok(g.reflection(1)));
        assert_eq!(g.parse("r^8"), Ok(g.rotation(2)));
        assert_eq!(g.parse(" r^3·f "), Ok(g.reflection(3)));
        for bad in ["", "x", "r^", "r^·f", "r^2·", "r^2g", "ff", "r^2·f·f"] {
            assert!(g.parse(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn large_index_arithmetic_does_not_overflow() {
        let g = d(u64::MAX);
        let a = g.rotation(u64::MAX - 1);
        assert_eq!(a * a, g.rotation(u64::MAX - 2));
        assert_eq!(a.power(u64::MAX - 1), g.rotation(1));
        assert_eq!(g.reflection(3) * a, g.reflection(4));
    }

    fn element(max_n: u64) -> impl Strategy<Value = (u64, u64, bool)> {
        (1..=max_n).prop_flat_map(|n| (Just(n), 0..n, any::<bool>()))
    }

    proptest! {
        #[test]
        fn render_parse_round_trip((n, k, s) in element(u64::MAX)) {
            let g = d(n);
            let x = if s { g.reflection(k) } else { g.rotation(k) };
            prop_assert_eq!(g.parse(&x.to_string()), Ok(x));
        }

        #[test]
        fn associativity_random(
            n in 1u64..=1_000_000_000,
            xs in proptest::array::uniform3((any::<u64>(), any::<bool>())),
        ) {
            let g = d(n);
            let [x, y, z] = xs.map(|(k, s)| if s { g.reflection(k) } else { g.rotation(k) });
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert!((x * x.inverse()).is_identity());
        }
    }
}
