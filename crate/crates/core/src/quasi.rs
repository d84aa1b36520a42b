//! Elements of the quasi-automorphism groups, stored as `σ · ι(v)` with `σ` a
//! finite-support permutation of `Z` and `v ∈ V`.
//!
//! QF, QT, QV, tQT and tQV all live inside [`QElement`]; membership is a
//! predicate ([`membership`]).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::actions::chi;
use crate::error::{Error, Result};
use crate::thompson::{TreePairDiagram, VElement};
use crate::words::{Vertex, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A bijection of `Z` moving finitely many vertices. Only moved points are
/// stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinitePermutation {
    moved: BTreeMap<Vertex, Vertex>,
}

impl FinitePermutation {
    pub fn identity() -> Self {
        FinitePermutation::default()
    }

    /// Builds a permutation from a finite map, dropping fixed points. The map
    /// must be injective with image equal to its domain.
    pub fn from_map(map: BTreeMap<Vertex, Vertex>) -> Result<Self> {
        let image: BTreeSet<&Vertex> = map.values().collect();
        if image.len() != map.len() {
            return Err(Error::NotBijective("two vertices share an image".into()));
        }
        if let Some(x) = image.iter().find(|y| !map.contains_key(**y)) {
            return Err(Error::NotBijective(format!("{x} is an image but not moved")));
        }
        Ok(FinitePermutation {
            moved: map.into_iter().filter(|(x, y)| x != y).collect(),
        })
    }

    pub fn transposition(x: &Vertex, y: &Vertex) -> Self {
        let mut moved = BTreeMap::new();
        if x != y {
            moved.insert(x.clone(), y.clone());
            moved.insert(y.clone(), x.clone());
        }
        FinitePermutation { moved }
    }

    /// The cycle `x₀ ↦ x₁ ↦ … ↦ x₀`.
    pub fn cycle(xs: &[Vertex]) -> Result<Self> {
        let distinct: BTreeSet<&Vertex> = xs.iter().collect();
        if distinct.len() != xs.len() {
            return Err(Error::DuplicateVertex(format!("{xs:?}")));
        }
        let moved = if xs.len() < 2 {
            BTreeMap::new()
        } else {
            (0..xs.len())
                .map(|i| (xs[i].clone(), xs[(i + 1) % xs.len()].clone()))
                .collect()
        };
        Ok(FinitePermutation { moved })
    }

    pub fn apply(&self, x: &Vertex) -> Vertex {
        self.moved.get(x).unwrap_or(x).clone()
    }

    pub fn is_identity(&self) -> bool {
        self.moved.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Vertex> {
        self.moved.keys()
    }

    pub fn moved(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.moved
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FinitePermutation) -> FinitePermutation {
        let domain: BTreeSet<&Vertex> = self.moved.keys().chain(other.moved.keys()).collect();
        let moved = domain
            .into_iter()
            .map(|x| (x.clone(), self.apply(&other.apply(x))))
            .filter(|(x, y)| x != y)
            .collect();
        FinitePermutation { moved }
    }

    pub fn inverse(&self) -> FinitePermutation {
        FinitePermutation {
            moved: self.moved.iter().map(|(x, y)| (y.clone(), x.clone())).collect(),
        }
    }

    /// Cycles in canonical order: each starts at its lex-least entry, and
    /// cycles are sorted by that entry.
    pub fn cycles(&self) -> Vec<Vec<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.moved.keys() {
            if seen.contains(start) {
                continue;
            }
            let mut cycle = vec![start.clone()];
            seen.insert(start.clone());
            let mut x = self.moved[start].clone();
            while &x != start {
                seen.insert(x.clone());
                cycle.push(x.clone());
                x = self.moved[&x].clone();
            }
            out.push(cycle);
        }
        out
    }

    pub fn parity(&self) -> Parity {
        let swaps = self.moved.len() - self.cycles().len();
        if swaps % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The permutation `g σ g⁻¹` for a bijection `g` given pointwise.
    pub fn transport(&self, g: impl Fn(&Vertex) -> Vertex) -> FinitePermutation {
        FinitePermutation {
            moved: self.moved.iter().map(|(x, y)| (g(x), g(y))).collect(),
        }
    }
}

pub fn parity(p: &FinitePermutation) -> Parity {
    p.parity()
}

impl fmt::Display for FinitePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moved.is_empty() {
            return f.write_str("()");
        }
        for c in self.cycles() {
            let body: Vec<String> = c.iter().map(Vertex::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FinitePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FinitePermutation {
    type Err = Error;

    /// Parses `(x y z)(u w)`; `()` and the empty string are the identity.
    /// Cycles are composed right to left.
    fn from_str(s: &str) -> Result<Self> {
        let mut rest = s.trim();
        let mut acc = FinitePermutation::identity();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let entries = body[..close]
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<Vec<Vertex>>>()?;
            acc = acc.compose(&FinitePermutation::cycle(&entries)?);
            rest = body[close + 1..].trim_start();
        }
        Ok(acc)
    }
}

/// The groups and distinguished subgroups recognised by [`membership`].
/// `F`, `T` and `V` stand for their images under `ι`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupName {
    F,
    T,
    V,
    QF,
    QT,
    QV,
    TQT,
    TQV,
    SymStar,
    AltStar,
    SymZ,
    AltZ,
}

impl GroupName {
    pub const QUASI: [GroupName; 5] = [
        GroupName::QF,
        GroupName::QT,
        GroupName::QV,
        GroupName::TQT,
        GroupName::TQV,
    ];

    pub const ALL: [GroupName; 12] = [
        GroupName::F,
        GroupName::T,
        GroupName::V,
        GroupName::QF,
        GroupName::QT,
        GroupName::QV,
        GroupName::TQT,
        GroupName::TQV,
        GroupName::SymStar,
        GroupName::AltStar,
        GroupName::SymZ,
        GroupName::AltZ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupName::F => "F",
            GroupName::T => "T",
            GroupName::V => "V",
            GroupName::QF => "QF",
            GroupName::QT => "QT",
            GroupName::QV => "QV",
            GroupName::TQT => "tQT",
            GroupName::TQV => "tQV",
            GroupName::SymStar => "SymStar",
            GroupName::AltStar => "AltStar",
            GroupName::SymZ => "SymZ",
            GroupName::AltZ => "AltZ",
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupName::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown group {s:?}")))
    }
}

/// The element `σ · ι(v)` of tQV, acting by `x ↦ σ(ι(v)(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QElement {
    pub sigma: FinitePermutation,
    pub v: VElement,
}

impl QElement {
    pub fn new(sigma: FinitePermutation, v: VElement) -> Self {
        QElement { sigma, v }
    }

    pub fn identity() -> Self {
        QElement::new(FinitePermutation::identity(), VElement::identity())
    }

    pub fn from_permutation(sigma: FinitePermutation) -> Self {
        QElement::new(sigma, VElement::identity())
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.is_identity() && self.v.is_identity()
    }

    pub fn apply(&self, x: &Vertex) -> Vertex {
        self.sigma.apply(&self.v.iota_image(x))
    }

    /// The composite `self ∘ other`.
    pub fn multiply(&self, other: &QElement) -> QElement {
        let conj = other.sigma.transport(|x| self.v.iota_image(x));
        QElement::new(self.sigma.compose(&conj), self.v.multiply(&other.v))
    }

    pub fn invert(&self) -> QElement {
        let vi = self.v.invert();
        let sigma = self.sigma.inverse().transport(|x| vi.iota_image(x));
        QElement::new(sigma, vi)
    }

    pub fn pow(&self, n: i64) -> QElement {
        let base = if n < 0 { self.invert() } else { self.clone() };
        (0..n.unsigned_abs()).fold(QElement::identity(), |acc, _| acc.multiply(&base))
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &QElement) -> QElement {
        g.invert().multiply(self).multiply(g)
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &QElement, b: &QElement) -> QElement {
        a.invert().multiply(&b.invert()).multiply(a).multiply(b)
    }

    pub fn pi(&self) -> &VElement {
        &self.v
    }

    pub fn parity(&self) -> Parity {
        self.sigma.parity()
    }

    /// Longest word among leaves of both trees and the support of `σ`.
    fn depth_bound(&self) -> (usize, usize) {
        let leaves = self
            .v
            .diagram()
            .pairs()
            .iter()
            .flat_map(|(l, r)| [l.len(), r.len()])
            .max()
            .unwrap_or(0);
        let support = self.sigma.support().map(Vertex::depth).max().unwrap_or(0);
        (leaves, support)
    }
}

pub fn iota(v: &VElement) -> QElement {
    QElement::new(FinitePermutation::identity(), v.clone())
}

pub fn apply(q: &QElement, x: &Vertex) -> Vertex {
    q.apply(x)
}

pub fn multiply(a: &QElement, b: &QElement) -> QElement {
    a.multiply(b)
}

pub fn invert(q: &QElement) -> QElement {
    q.invert()
}

pub fn pi(q: &QElement) -> VElement {
    q.v.clone()
}

pub fn equals(a: &QElement, b: &QElement) -> bool {
    a == b
}

/// Depth at which pointwise agreement of `a` and `b` decides equality.
pub fn oracle_depth(a: &QElement, b: &QElement) -> usize {
    let (la, sa) = a.depth_bound();
    let (lb, sb) = b.depth_bound();
    la.max(lb) + sa.max(sb) + 2
}

/// True iff `a` and `b` agree on ζ and on every word of length ≤ `depth`.
pub fn pointwise_agree(a: &QElement, b: &QElement, depth: usize) -> bool {
    a.apply(&Vertex::Zeta) == b.apply(&Vertex::Zeta)
        && Word::ball(depth).into_iter().all(|w| {
            let x = Vertex::Word(w);
            a.apply(&x) == b.apply(&x)
        })
}

/// A vertex map given by a prefix substitution with finitely many
/// overrides. Vertices not overridden follow `ι` of `prefix_rule`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawQuasiMap {
    pub exceptions: BTreeMap<Vertex, Vertex>,
    pub prefix_rule: TreePairDiagram,
}

impl RawQuasiMap {
    pub fn new(exceptions: BTreeMap<Vertex, Vertex>, prefix_rule: TreePairDiagram) -> Self {
        RawQuasiMap {
            exceptions,
            prefix_rule,
        }
    }
}

/// Splits a raw map into its canonical form `σ · ι(v)`.
pub fn canonicalize(raw: &RawQuasiMap) -> Result<QElement> {
    let v = raw.prefix_rule.reduce();
    let mut sigma = BTreeMap::new();
    for (x, y) in &raw.exceptions {
        if sigma.insert(v.iota_image(x), y.clone()).is_some() {
            return Err(Error::NotBijective(format!("duplicate exception at {x}")));
        }
    }
    let sigma = FinitePermutation::from_map(sigma).map_err(|e| match e {
        Error::NotBijective(m) => Error::NotBijective(format!("raw map: {m}")),
        other => other,
    })?;
    Ok(QElement::new(sigma, v))
}

/// The bit-complement conjugate `x ↦ bar(q(bar x))`.
pub fn nu(q: &QElement) -> QElement {
    let mirrored = q.v.mirror();
    let left = mirrored.left();
    let vi = q.v.invert();
    let mut keys: BTreeSet<Vertex> = left.nodes().into_iter().map(Vertex::Word).collect();
    keys.insert(Vertex::Zeta);
    keys.extend(q.sigma.support().map(|y| vi.iota_image(y).bar()));
    let exceptions = keys
        .into_iter()
        .map(|x| {
            let y = q.apply(&x.bar()).bar();
            (x, y)
        })
        .collect();
    canonicalize(&RawQuasiMap::new(exceptions, mirrored.diagram().clone()))
        .expect("bar conjugate of a bijection is a bijection")
}

pub fn membership(q: &QElement, g: GroupName) -> bool {
    let fixes_zeta = || q.apply(&Vertex::Zeta) == Vertex::Zeta;
    let sym = q.v.is_identity();
    match g {
        GroupName::F => q.sigma.is_identity() && q.v.is_in_f(),
        GroupName::T => q.sigma.is_identity() && q.v.is_in_t(),
        GroupName::V => q.sigma.is_identity(),
        GroupName::TQV => true,
        GroupName::TQT => q.v.is_in_t(),
        GroupName::QV => fixes_zeta(),
        GroupName::QF => fixes_zeta() && q.v.is_in_f(),
        GroupName::QT => fixes_zeta() && q.v.is_in_t(),
        GroupName::SymZ => sym,
        GroupName::AltZ => sym && q.parity().is_even(),
        GroupName::SymStar => sym && fixes_zeta(),
        GroupName::AltStar => sym && fixes_zeta() && q.parity().is_even(),
    }
}

fn require(q: &QElement, g: GroupName) -> Result<()> {
    if !GroupName::QUASI.contains(&g) {
        return Err(Error::Parse(format!("{g} is not a quasi-automorphism group")));
    }
    if membership(q, g) {
        Ok(())
    } else {
        Err(Error::NotAMember(g.to_string()))
    }
}

/// Membership in the commutator subgroup `[G, G]`.
pub fn in_commutator(q: &QElement, g: GroupName) -> Result<bool> {
    require(q, g)?;
    let even = q.parity().is_even();
    Ok(match g {
        GroupName::QF => even && chi(&q.v)? == (0, 0),
        _ => even,
    })
}

/// Image in the abelianisation: `(χ₀, χ₁)` for QF, plus the parity bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Abelianization {
    pub chi: Option<(i64, i64)>,
    pub parity: Parity,
}

impl Abelianization {
    pub fn add(self, other: Abelianization) -> Abelianization {
        Abelianization {
            chi: match (self.chi, other.chi) {
                (Some((a, b)), Some((c, d))) => Some((a + c, b + d)),
                _ => None,
            },
            parity: self.parity.add(other.parity),
        }
    }
}

impl fmt::Display for Abelianization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.chi {
            Some((a, b)) => write!(f, "({a}, {b}, {})", self.parity),
            None => write!(f, "({})", self.parity),
        }
    }
}

pub fn abelianization_image(q: &QElement, g: GroupName) -> Result<Abelianization> {
    require(q, g)?;
    Ok(Abelianization {
        chi: if g == GroupName::QF {
            Some(chi(&q.v)?)
        } else {
            None
        },
        parity: q.parity(),
    })
}

/// True iff `q ∈ QF` fixes ε, ζ and every word beginning with 0.
pub fn in_qf1(q: &QElement) -> bool {
    let zero = Word::from_bits(&[0]);
    let v_fixes = q.v.is_identity() || q.v.diagram().pairs().get(&zero) == Some(&zero);
    v_fixes
        && membership(q, GroupName::QF)
        && q.apply(&Vertex::root()) == Vertex::root()
        && q.apply(&Vertex::Zeta) == Vertex::Zeta
        && q
            .sigma
            .support()
            .all(|x| x.as_word().map_or(true, |w| !zero.is_prefix_of(w)))
}

/// `θ(q) = α⁻¹ q α` on QF(1).
pub fn theta_shift(q: &QElement) -> Result<QElement> {
    if !in_qf1(q) {
        return Err(Error::NotAMember("QF(1)".into()));
    }
    let a = iota(&VElement::generator(crate::thompson::Generator::A));
    Ok(q.conjugate_by(&a))
}

impl fmt::Display for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma={};v={}", self.sigma, self.v)
    }
}

impl fmt::Debug for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix("sigma=")
            .ok_or_else(|| Error::Parse(format!("expected sigma=..., got {s:?}")))?;
        let (sigma, v) = rest
            .split_once(";v=")
            .ok_or_else(|| Error::Parse("missing ;v= field".into()))?;
        Ok(QElement::new(sigma.parse()?, v.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thompson::Generator;

    fn v(s: &str) -> Vertex {
        s.parse().unwrap()
    }

    fn g(x: Generator) -> QElement {
        iota(&VElement::generator(x))
    }

    fn sigma0() -> QElement {
        QElement::from_permutation(FinitePermutation::transposition(&v("0"), &v("e")))
    }

    #[test]
    fn permutation_basics() {
        let t = FinitePermutation::transposition(&v("0"), &v("e"));
        assert_eq!(t.parity(), Parity::Odd);
        assert!(t.compose(&t).is_identity());
        assert_eq!(FinitePermutation::identity().parity(), Parity::Even);
        let c = FinitePermutation::cycle(&[v("1"), v("11"), v("1110")]).unwrap();
        assert_eq!(c.parity(), Parity::Even);
        assert_eq!(c.to_string(), "(1 11 1110)");
        assert_eq!(c.to_string().parse::<FinitePermutation>().unwrap(), c);
        let d = FinitePermutation::cycle(&[v("z"), v("e")]).unwrap();
        assert_eq!(d.to_string(), "(e z)");
        assert!(FinitePermutation::cycle(&[v("0"), v("0")]).is_err());
    }

    #[test]
    fn iota_reference_maps() {
        let a = g(Generator::A);
        for (x, y) in [("e", "0"), ("1", "e"), ("z", "z"), ("0", "00"), ("10", "01"), ("11", "1")] {
            assert_eq!(a.apply(&v(x)), v(y));
        }
        assert_eq!(g(Generator::B).apply(&v("110")), v("101"));
        assert_eq!(QElement::identity().apply(&v("0110")), v("0110"));
    }

    #[test]
    fn multiply_examples() {
        assert!(sigma0().multiply(&sigma0()).is_identity());
        for x in [Generator::A, Generator::B, Generator::C, Generator::D] {
            let q = g(x).multiply(&sigma0());
            assert!(q.multiply(&q.invert()).is_identity());
            assert_eq!(q.invert(), sigma0().multiply(&g(x).invert()));
            for w in Word::ball(5) {
                let y = Vertex::Word(w);
                assert_eq!(q.apply(&y), g(x).apply(&sigma0().apply(&y)));
            }
        }
    }

    #[test]
    fn pi_and_kernel() {
        assert!(pi(&sigma0()).is_identity());
        let a = VElement::generator(Generator::A);
        assert_eq!(pi(&iota(&a)), a);
    }

    #[test]
    fn canonicalize_examples() {
        let a = VElement::generator(Generator::A);
        let q = canonicalize(&RawQuasiMap::new(BTreeMap::new(), a.diagram().clone())).unwrap();
        assert_eq!(q, iota(&a));
        let ex: BTreeMap<Vertex, Vertex> = [(v("0"), v("e")), (v("e"), v("0"))].into();
        let id = TreePairDiagram::identity_on(&crate::trees::Tree::trivial());
        assert_eq!(canonicalize(&RawQuasiMap::new(ex, id.clone())).unwrap(), sigma0());
        let ex: BTreeMap<Vertex, Vertex> = [(v("e"), v("z")), (v("z"), v("0"))].into();
        let q = canonicalize(&RawQuasiMap::new(ex, a.diagram().clone())).unwrap();
        assert_eq!(q.apply(&v("e")), v("z"));
        assert_eq!(q.apply(&v("z")), v("0"));
        assert_eq!(q.apply(&v("1")), v("e"));
        assert_eq!(q.v, a);
        let bad: BTreeMap<Vertex, Vertex> = [(v("0"), v("1"))].into();
        assert!(matches!(
            canonicalize(&RawQuasiMap::new(bad, id)),
            Err(Error::NotBijective(_))
        ));
    }

    #[test]
    fn nu_examples() {
        let a = VElement::generator(Generator::A);
        assert_eq!(nu(&iota(&a)), iota(&a.invert()));
        assert_eq!(nu(&QElement::identity()), QElement::identity());
        let q = g(Generator::C).multiply(&sigma0());
        assert_eq!(nu(&nu(&q)), q);
    }

    #[test]
    fn membership_examples() {
        assert!(membership(&g(Generator::A), GroupName::QF));
        assert!(!membership(&g(Generator::C), GroupName::QV));
        assert!(membership(&sigma0(), GroupName::QF));
        assert!(membership(&sigma0(), GroupName::SymStar));
        assert!(!membership(&sigma0(), GroupName::AltStar));
    }

    #[test]
    fn commutator_and_abelianization() {
        assert!(!in_commutator(&sigma0(), GroupName::QF).unwrap());
        assert!(!in_commutator(&g(Generator::A), GroupName::QF).unwrap());
        assert!(in_commutator(&g(Generator::C), GroupName::QF).is_err());
        let ab = abelianization_image(&g(Generator::A), GroupName::QF).unwrap();
        assert_eq!(ab.chi, Some((-1, 1)));
        assert_eq!(ab.parity, Parity::Even);
        let ab = abelianization_image(&sigma0(), GroupName::TQV).unwrap();
        assert_eq!(ab.parity, Parity::Odd);
    }

    #[test]
    fn theta_shift_examples() {
        assert_eq!(theta_shift(&QElement::identity()).unwrap(), QElement::identity());
        let b2 = VElement::derived_generator(crate::thompson::Family::Beta, 2).unwrap();
        assert_eq!(theta_shift(&g(Generator::B)).unwrap(), iota(&b2));
        assert!(theta_shift(&g(Generator::A)).is_err());
        assert!(theta_shift(&sigma0()).is_err());
    }

    #[test]
    fn serialization_round_trip() {
        let q = g(Generator::C).multiply(&sigma0());
        assert_eq!(q.to_string().parse::<QElement>().unwrap(), q);
        assert_eq!(
            QElement::identity().to_string(),
            "sigma=();v=L=e;R=e;f=0:0"
        );
    }
}
