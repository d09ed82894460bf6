//! Counting and enumerating homomorphisms `D_m → D_n`.
//!
//! Writing `g = gcd(m, n)`, the number of homomorphisms depends only on the
//! parities of `m` and `n`:
//!
//! | m    | n    | count                          |
//! |------|------|--------------------------------|
//! | odd  | odd  | `1 + n·Σ_{k|g} φ(k)`           |
//! | odd  | even | `2 + n·Σ_{k|g} φ(k)`           |
//! | even | even | `4 + 4n + n·Σ_{k|g} φ(k)`      |
//! | even | odd  | `1 + 2n + n·Σ_{k|g} φ(k)`      |
//!
//! Since `Σ_{k|g} φ(k) = g`, each count is also `c + a·n + n·g` for the
//! constants returned by [`ParityCase::coefficients`].
//!
//! Three independent routes are provided: [`count_homs`] evaluates the
//! closed forms, [`enumerate_homs`] builds every map from the case analysis
//! on where the generators can go, and [`brute_force_count`] tries every
//! pair of generator images against the defining relations.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{divisor_totient_sum, gcd, PositiveInt};
use crate::dihedral::{satisfies_presentation, DihedralElement, GroupIndex};
use crate::{Error, MAX_BRUTE_FORCE_N, MAX_ENUMERATION, MAX_INDEX};

/// Parities of `(m, n)`, domain first. 1 is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParityCase {
    /// `m` odd, `n` odd.
    OddOdd,
    /// `m` odd, `n` even.
    OddEven,
    /// `m` even, `n` even.
    EvenEven,
    /// `m` even, `n` odd.
    EvenOdd,
}

impl ParityCase {
    /// The four cases in declaration order.
    pub const ALL: [ParityCase; 4] = [
        ParityCase::OddOdd,
        ParityCase::OddEven,
        ParityCase::EvenEven,
        ParityCase::EvenOdd,
    ];

    /// `(c, a)` such that the count is `c + a·n + n·Σ_{k|gcd(m,n)} φ(k)`.
    pub const fn coefficients(self) -> (u128, u128) {
        match self {
            ParityCase::OddOdd => (1, 0),
            ParityCase::OddEven => (2, 0),
            ParityCase::EvenEven => (4, 4),
            ParityCase::EvenOdd => (1, 2),
        }
    }

    /// The closed form in symbolic terms, e.g. `4 + 4n + n·gcd(m,n)`.
    pub const fn formula(self) -> &'static str {
        match self {
            ParityCase::OddOdd => "1 + n·gcd(m,n)",
            ParityCase::OddEven => "2 + n·gcd(m,n)",
            ParityCase::EvenEven => "4 + 4n + n·gcd(m,n)",
            ParityCase::EvenOdd => "1 + 2n + n·gcd(m,n)",
        }
    }

    /// The variant name, as used in CLI and table output.
    pub const fn as_str(self) -> &'static str {
        match self {
            ParityCase::OddOdd => "OddOdd",
            ParityCase::OddEven => "OddEven",
            ParityCase::EvenEven => "EvenEven",
            ParityCase::EvenOdd => "EvenOdd",
        }
    }
}

impl fmt::Display for ParityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which closed form applies to `(m, n)`.
pub const fn parity_case(m: PositiveInt, n: PositiveInt) -> ParityCase {
    match (m.is_odd(), n.is_odd()) {
        (true, true) => ParityCase::OddOdd,
        (true, false) => ParityCase::OddEven,
        (false, false) => ParityCase::EvenEven,
        (false, true) => ParityCase::EvenOdd,
    }
}

/// An exact number of homomorphisms `D_m → D_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HomCount {
    /// The number of homomorphisms. Always at least 1.
    pub count: u128,
    /// Parity case of `(m, n)`.
    pub case: ParityCase,
    /// Domain index.
    pub m: PositiveInt,
    /// Codomain index.
    pub n: PositiveInt,
}

impl HomCount {
    /// `gcd(m, n)`.
    pub fn gcd(&self) -> PositiveInt {
        gcd(self.m, self.n)
    }
}

impl fmt::Display for HomCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.count, self.case)
    }
}

fn check_index(what: &'static str, v: PositiveInt) -> Result<(), Error> {
    if v.get() > MAX_INDEX {
        Err(Error::OutOfRange {
            what,
            value: v.get() as u128,
            limit: MAX_INDEX as u128,
        })
    } else {
        Ok(())
    }
}

fn eval_formula(case: ParityCase, n: PositiveInt, sum: PositiveInt) -> Result<u128, Error> {
    let (c, a) = case.coefficients();
    let n = n.get() as u128;
    n.checked_mul(sum.get() as u128)
        .and_then(|t| t.checked_add(a.checked_mul(n)?))
        .and_then(|t| t.checked_add(c))
        .ok_or(Error::OutOfRange {
            what: "count",
            value: u128::MAX,
            limit: u128::MAX,
        })
}

/// Number of homomorphisms `D_m → D_n` from the closed forms.
///
/// The formula is evaluated once with the divisor-totient sum computed term
/// by term and once with `gcd(m, n)` in its place; the two must agree.
pub fn count_homs(m: PositiveInt, n: PositiveInt) -> Result<HomCount, Error> {
    check_index("m", m)?;
    check_index("n", n)?;
    let case = parity_case(m, n);
    let g = gcd(m, n);
    let by_sum = eval_formula(case, n, divisor_totient_sum(g))?;
    let by_gcd = eval_formula(case, n, g)?;
    assert_eq!(by_sum, by_gcd, "closed forms disagree for ({m}, {n})");
    Ok(HomCount {
        count: by_sum,
        case,
        m,
        n,
    })
}

/// Number of endomorphisms of `D_n`: `n² + 1` for odd `n`, `(n + 2)²` for
/// even `n`. Checked against `count_homs(n, n)`.
pub fn count_endos(n: PositiveInt) -> Result<HomCount, Error> {
    check_index("n", n)?;
    let v = n.get() as u128;
    let count = if n.is_odd() {
        v * v + 1
    } else {
        (v + 2) * (v + 2)
    };
    let general = count_homs(n, n)?;
    assert_eq!(count, general.count, "endomorphism count of D_{n}");
    Ok(general)
}

/// A homomorphism `D_m → D_n`, stored as the images of `r` and `f`.
///
/// Construction checks the defining relations, so every value of this type
/// is a genuine homomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    m: PositiveInt,
    img_r: DihedralElement,
    img_f: DihedralElement,
}

impl Homomorphism {
    /// The map `r ↦ img_r`, `f ↦ img_f` from `D_m`.
    pub fn new(
        m: PositiveInt,
        img_r: DihedralElement,
        img_f: DihedralElement,
    ) -> Result<Self, Error> {
        if satisfies_presentation(m, &img_r, &img_f)? {
            Ok(Homomorphism { m, img_r, img_f })
        } else {
            Err(Error::NotAHomomorphism)
        }
    }

    /// The map sending everything to `e`.
    pub fn trivial(m: PositiveInt, n: PositiveInt) -> Self {
        let e = GroupIndex::new(n).identity();
        Homomorphism {
            m,
            img_r: e,
            img_f: e,
        }
    }

    /// The identity endomorphism of `D_n`.
    pub fn identity(n: PositiveInt) -> Self {
        let g = GroupIndex::new(n);
        Homomorphism {
            m: n,
            img_r: g.rotation(1),
            img_f: g.reflection(0),
        }
    }

    /// Domain index.
    pub fn m(&self) -> PositiveInt {
        self.m
    }

    /// Codomain index.
    pub fn n(&self) -> PositiveInt {
        self.img_r.group().n()
    }

    /// Image of the rotation generator.
    pub fn img_r(&self) -> DihedralElement {
        self.img_r
    }

    /// Image of the reflection generator.
    pub fn img_f(&self) -> DihedralElement {
        self.img_f
    }

    /// Canonical sort key `(img_r.rot, img_r.flip, img_f.rot, img_f.flip)`.
    pub fn key(&self) -> (u64, bool, u64, bool) {
        let (a, s) = self.img_r.key();
        let (b, t) = self.img_f.key();
        (a, s, b, t)
    }

    /// `ρ(r^k f^s) = img_r^k · img_f^s`.
    pub fn apply(&self, x: &DihedralElement) -> Result<DihedralElement, Error> {
        if x.group().n() != self.m {
            return Err(Error::GroupMismatch {
                expected: self.m.get(),
                found: x.group().n().get(),
            });
        }
        Ok(self.eval(x))
    }

    fn eval(&self, x: &DihedralElement) -> DihedralElement {
        self.img_r.power(x.rot()) * self.img_f.power(x.flip() as u64)
    }

    /// Order of the image subgroup, found by evaluating on all `2m`
    /// elements of the domain.
    pub fn image_order(&self) -> PositiveInt {
        let image: BTreeSet<(u64, bool)> = GroupIndex::new(self.m)
            .elements()
            .map(|x| self.eval(&x).key())
            .collect();
        PositiveInt::new(image.len() as u64).unwrap()
    }

    /// Number of domain elements sent to `e`.
    pub fn kernel_order(&self) -> PositiveInt {
        let k = GroupIndex::new(self.m)
            .elements()
            .filter(|x| self.eval(x).is_identity())
            .count();
        // e is always in the kernel
        PositiveInt::new(k as u64).unwrap()
    }
}

impl fmt::Display for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r ↦ {}, f ↦ {}", self.img_r, self.img_f)
    }
}

/// Every homomorphism `D_m → D_n`, in canonical order.
///
/// The list is assembled from where the generators can be sent:
///
/// * `r` to a rotation whose order divides `gcd(m, n)` and `f` to any
///   reflection, plus the trivial map;
/// * for even `n`, `f` to the central rotation `r^(n/2)` with `r ↦ e`, and
///   for even `m` additionally `r ↦ r^(n/2)` with `f ↦ e` or `r^(n/2)`;
/// * for even `m`, `r` to a reflection `ρ`, with `f` sent to `e` or `ρ`,
///   and for even `n` also to `r^(n/2)` or `ρ·r^(n/2)`.
///
/// Fails if the list would exceed [`MAX_ENUMERATION`] entries.
pub fn enumerate_homs(m: PositiveInt, n: PositiveInt) -> Result<Vec<Homomorphism>, Error> {
    let expected = count_homs(m, n)?.count;
    if expected > MAX_ENUMERATION {
        return Err(Error::OutOfRange {
            what: "enumeration size",
            value: expected,
            limit: MAX_ENUMERATION,
        });
    }
    let d = GroupIndex::new(n);
    let e = d.identity();
    let g = gcd(m, n).get();
    let mut pairs = Vec::with_capacity(expected as usize);

    let step = n.get() / g;
    for j in 0..g {
        let a = d.rotation(j * step);
        pairs.extend(d.reflections().map(|b| (a, b)));
    }
    pairs.push((e, e));

    let half = (!n.is_odd()).then(|| d.rotation(n.get() / 2));
    if let Some(half) = half {
        pairs.push((e, half));
        if !m.is_odd() {
            pairs.push((half, e));
            pairs.push((half, half));
        }
    }

    if !m.is_odd() {
        for a in d.reflections() {
            pairs.push((a, e));
            pairs.push((a, a));
            if let Some(half) = half {
                pairs.push((a, half));
                pairs.push((a, a * half));
            }
        }
    }

    let mut homs = pairs
        .into_iter()
        .map(|(a, b)| Homomorphism::new(m, a, b))
        .collect::<Result<Vec<_>, _>>()?;
    homs.sort_unstable_by_key(Homomorphism::key);
    assert!(
        homs.windows(2).all(|w| w[0].key() != w[1].key()),
        "duplicate homomorphism enumerated for ({m}, {n})"
    );
    assert_eq!(
        homs.len() as u128,
        expected,
        "enumeration size for ({m}, {n})"
    );
    Ok(homs)
}

fn check_brute_force(m: PositiveInt, n: PositiveInt) -> Result<(), Error> {
    check_index("m", m)?;
    if n.get() > MAX_BRUTE_FORCE_N {
        return Err(Error::OutOfRange {
            what: "brute-force codomain index",
            value: n.get() as u128,
            limit: MAX_BRUTE_FORCE_N as u128,
        });
    }
    Ok(())
}

fn accepted_pairs(
    m: PositiveInt,
    n: PositiveInt,
) -> impl Iterator<Item = (DihedralElement, DihedralElement)> {
    let d = GroupIndex::new(n);
    d.elements()
        .flat_map(move |a| d.elements().map(move |b| (a, b)))
        .filter(move |(a, b)| satisfies_presentation(m, a, b).unwrap())
}

/// Counts pairs `(a, b)` in `D_n × D_n` that satisfy the relations of
/// `D_m`, by trying all `4n²` of them.
///
/// Never consults the closed forms. `n` is limited to
/// [`MAX_BRUTE_FORCE_N`].
pub fn brute_force_count(m: PositiveInt, n: PositiveInt) -> Result<HomCount, Error> {
    check_brute_force(m, n)?;
    Ok(HomCount {
        count: accepted_pairs(m, n).count() as u128,
        case: parity_case(m, n),
        m,
        n,
    })
}

/// The homomorphisms found by [`brute_force_count`], in canonical order.
pub fn brute_force_homs(m: PositiveInt, n: PositiveInt) -> Result<Vec<Homomorphism>, Error> {
    check_brute_force(m, n)?;
    let mut homs: Vec<_> = accepted_pairs(m, n)
        .map(|(img_r, img_f)| Homomorphism { m, img_r, img_f })
        .collect();
    homs.sort_unstable_by_key(Homomorphism::key);
    Ok(homs)
}
