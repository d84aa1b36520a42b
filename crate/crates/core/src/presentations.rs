//! Words in `σ, α, β, γ, δ`, their evaluation, the finite presentations of
//! F, T, V, QF, tQT and tQV, and relator checking.
//!
//! Tokens: `s a b c d` are `σ α β γ δ`, capitals are inverses.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::actions::{stabilizer_generators, StabilizerGroup, VertexTuple};
use crate::error::{Error, Result};
use crate::quasi::{iota, membership, FinitePermutation, GroupName, QElement};
use crate::thompson::{Generator, TreePairDiagram, VElement};
use crate::words::Vertex;

/// How a word `x₁x₂…xₖ` becomes a map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    /// `x₁ ∘ x₂ ∘ … ∘ xₖ`: `xₖ` acts first.
    Left,
    /// `xₖ ∘ … ∘ x₁`: `x₁` acts first.
    Right,
}

/// The convention used everywhere a word is evaluated.
pub const ACTION: Action = Action::Left;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub symbol: char,
    pub inverse: bool,
}

impl Letter {
    fn token(self) -> char {
        if self.inverse {
            self.symbol.to_ascii_uppercase()
        } else {
            self.symbol
        }
    }
}

/// A finite word in the generators, not freely reduced.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord { letters }
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    symbol: l.symbol,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: i64) -> GroupWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(GroupWord::empty(), |acc, _| acc.concat(&base))
    }

    /// `x^g = g⁻¹ x g`.
    pub fn conj(&self, g: &GroupWord) -> GroupWord {
        g.inverse().concat(self).concat(g)
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    pub fn commutator(x: &GroupWord, y: &GroupWord) -> GroupWord {
        x.inverse().concat(&y.inverse()).concat(x).concat(y)
    }

    pub fn symbols(&self) -> BTreeSet<char> {
        self.letters.iter().map(|l| l.symbol).collect()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.token())?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                's' | 'a' | 'b' | 'c' | 'd' => Ok(Letter {
                    symbol: c,
                    inverse: false,
                }),
                'S' | 'A' | 'B' | 'C' | 'D' => Ok(Letter {
                    symbol: c.to_ascii_lowercase(),
                    inverse: true,
                }),
                _ => Err(Error::Parse(format!("bad generator token {c:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(GroupWord { letters })
    }
}

fn lit(s: &str) -> GroupWord {
    s.parse().expect("literal word")
}

/// `βₙ = α^{-(n-1)} β α^{n-1}`.
pub fn beta_word(n: usize) -> GroupWord {
    assert!(n >= 1);
    let a = lit("a").pow(n as i64 - 1);
    a.inverse().concat(&lit("b")).concat(&a)
}

/// `γₙ = α^{-(n-1)} γ β^{n-1}`.
pub fn gamma_word(n: usize) -> GroupWord {
    assert!(n >= 1);
    let k = n as i64 - 1;
    lit("a").pow(-k).concat(&lit("c")).concat(&lit("b").pow(k))
}

/// `δ₀ = δ`, `δ₁ = γ₂⁻¹ δ γ₂` and `δₙ = α^{-(n-1)} δ₁ α^{n-1}`.
pub fn delta_word(n: usize) -> GroupWord {
    if n == 0 {
        return lit("d");
    }
    let d1 = lit("d").conj(&gamma_word(2));
    let k = n as i64 - 1;
    lit("a").pow(-k).concat(&d1).concat(&lit("a").pow(k))
}

/// `σ = σ_{0,ε}`.
pub fn sigma() -> QElement {
    QElement::from_permutation(FinitePermutation::transposition(
        &Vertex::word("0"),
        &Vertex::root(),
    ))
}

/// Generator symbols available in each group.
pub fn symbols_for(g: GroupName) -> Result<&'static [char]> {
    Ok(match g {
        GroupName::F => &['a', 'b'],
        GroupName::T => &['a', 'b', 'c'],
        GroupName::V => &['a', 'b', 'c', 'd'],
        GroupName::QF => &['s', 'a', 'b'],
        GroupName::TQT | GroupName::QT => &['s', 'a', 'b', 'c'],
        GroupName::TQV | GroupName::QV => &['s', 'a', 'b', 'c', 'd'],
        other => {
            return Err(Error::Parse(format!(
                "{other} has no generating symbols"
            )))
        }
    })
}

fn generator_element(symbol: char) -> QElement {
    match symbol {
        's' => sigma(),
        'a' => iota(&VElement::generator(Generator::A)),
        'b' => iota(&VElement::generator(Generator::B)),
        'c' => iota(&VElement::generator(Generator::C)),
        'd' => iota(&VElement::generator(Generator::D)),
        _ => unreachable!("validated symbol"),
    }
}

/// Evaluates a word in `G`. QT and QV accept the tQT and tQV alphabets but
/// reject words whose value moves ζ.
pub fn evaluate(w: &GroupWord, g: GroupName) -> Result<QElement> {
    let allowed = symbols_for(g)?;
    if let Some(l) = w.letters.iter().find(|l| !allowed.contains(&l.symbol)) {
        return Err(Error::InvalidSymbol {
            symbol: l.token(),
            group: g.to_string(),
        });
    }
    let q = evaluate_unchecked(w);
    if !membership(&q, g) {
        return Err(Error::NotAMember(g.to_string()));
    }
    Ok(q)
}

fn evaluate_unchecked(w: &GroupWord) -> QElement {
    let factors = w.letters.iter().map(|l| {
        let x = generator_element(l.symbol);
        if l.inverse {
            x.invert()
        } else {
            x
        }
    });
    match ACTION {
        Action::Left => factors.fold(QElement::identity(), |acc, x| acc.multiply(&x)),
        Action::Right => factors.fold(QElement::identity(), |acc, x| x.multiply(&acc)),
    }
}

pub fn is_identity(w: &GroupWord, g: GroupName) -> Result<bool> {
    Ok(evaluate(w, g)?.is_identity())
}

/// A relator with a readable name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub name: String,
    pub word: GroupWord,
}

impl Relator {
    fn new(name: impl Into<String>, word: GroupWord) -> Self {
        Relator {
            name: name.into(),
            word,
        }
    }
}

/// A printed relator that does not hold, together with the relator used in
/// its place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variant {
    pub printed: Relator,
    pub used: String,
}

/// A transposition anchor `σ^g = σ_{x,y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anchor {
    pub exponent: GroupWord,
    pub claimed: (Vertex, Vertex),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: GroupName,
    pub symbols: Vec<char>,
    pub relators: Vec<Relator>,
    /// Stabiliser generators `X`; each contributes the relator `[x^w, σ]`
    /// with `w` the conjugator below.
    pub stabilizer: Vec<GroupWord>,
    /// Carries the stabilised tuple of `X` onto `(0, ε)`; empty for QF.
    pub conjugator: GroupWord,
    pub variants: Vec<Variant>,
    pub anchors: Vec<Anchor>,
}

impl Presentation {
    /// Every relator including the commutators `[x, σ]`.
    pub fn all_relators(&self) -> Vec<Relator> {
        let s = lit("s");
        let mut out = self.relators.clone();
        for x in &self.stabilizer {
            let name = if self.conjugator.is_empty() {
                format!("[{x}, s]")
            } else {
                format!("[{x}^({}), s]", self.conjugator)
            };
            out.push(Relator::new(
                name,
                GroupWord::commutator(&x.conj(&self.conjugator), &s),
            ));
        }
        out
    }

    /// The commutators `[x, σ]` with `X` taken literally.
    fn literal_stabilizer_variants(&self) -> Vec<Variant> {
        if self.conjugator.is_empty() {
            return vec![];
        }
        let s = lit("s");
        self.stabilizer
            .iter()
            .map(|x| Variant {
                printed: Relator::new(format!("[{x}, s]"), GroupWord::commutator(x, &s)),
                used: format!("[{x}^({}), s]", self.conjugator),
            })
            .collect()
    }
}

fn f_relators() -> Vec<Relator> {
    let ab = lit("aB");
    vec![
        Relator::new("[aB, Aba]", GroupWord::commutator(&ab, &lit("Aba"))),
        Relator::new("[aB, AAbaa]", GroupWord::commutator(&ab, &lit("AAbaa"))),
    ]
}

fn t_relators() -> Vec<Relator> {
    let mut out = f_relators();
    out.push(Relator::new("CbAcb", lit("CbAcb")));
    out.push(Relator::new("ABaBCabAAcbb", lit("ABaBCabAAcbb")));
    out.push(Relator::new("AC(Acb)^2", lit("AC").concat(&lit("Acb").pow(2))));
    out.push(Relator::new("c^3", lit("ccc")));
    out
}

fn v_relators() -> (Vec<Relator>, Vec<Variant>) {
    let (b, a) = (lit("b"), lit("a"));
    let b2 = beta_word(2);
    let b3 = beta_word(3);
    let g = gamma_word;
    let d = delta_word;
    let cat = |xs: &[&GroupWord]| xs.iter().fold(GroupWord::empty(), |acc, x| acc.concat(x));
    let ab = lit("aB");
    let rels = vec![
        Relator::new("[aB, b2]", GroupWord::commutator(&ab, &b2)),
        Relator::new("[aB, b3]", GroupWord::commutator(&ab, &b3)),
        Relator::new("b g2 g1^-1", cat(&[&b, &g(2), &g(1).inverse()])),
        Relator::new("b g3 (g2 b2)^-1", cat(&[&b, &g(3), &cat(&[&g(2), &b2]).inverse()])),
        Relator::new("g2^2 (g1 a)^-1", cat(&[&g(2), &g(2), &cat(&[&g(1), &a]).inverse()])),
        Relator::new("g1^3", g(1).pow(3)),
        Relator::new("d1^2", d(1).pow(2)),
        Relator::new("d3 d1 (d1 d3)^-1", cat(&[&d(3), &d(1), &cat(&[&d(1), &d(3)]).inverse()])),
        Relator::new("(d2 d1)^3", cat(&[&d(2), &d(1)]).pow(3)),
        Relator::new("d1 b3 (b3 d1)^-1", cat(&[&d(1), &b3, &cat(&[&b3, &d(1)]).inverse()])),
        Relator::new("b d2 d1 (d1 b2)^-1", cat(&[&b, &d(2), &d(1), &cat(&[&d(1), &b2]).inverse()])),
        Relator::new("b d3 (d2 b)^-1", cat(&[&b, &d(3), &cat(&[&d(2), &b]).inverse()])),
        Relator::new("g3 d2 (d1 g3)^-1", cat(&[&g(3), &d(2), &cat(&[&d(1), &g(3)]).inverse()])),
        Relator::new("(d1 g2)^3", cat(&[&d(1), &g(2)]).pow(3)),
    ];
    let variants = vec![Variant {
        printed: Relator::new(
            "b g2 g1 (g1 b2)^-1",
            cat(&[&b, &g(2), &g(1), &cat(&[&g(1), &b2]).inverse()]),
        ),
        used: "b d2 d1 (d1 b2)^-1".into(),
    }];
    (rels, variants)
}

/// `σ²`, `[σ, σ^{α²}]`, `(σσ^α)³` and `σσ^ασσ^{αβα⁻¹}`, plus the anchor
/// table and the printed exponent `αβ⁻¹α⁻¹` as a variant.
fn sigma_relators() -> (Vec<Relator>, Vec<Variant>, Vec<Anchor>) {
    let s = lit("s");
    let sa = s.conj(&lit("a"));
    let sym = |g: &str| s.concat(&sa).concat(&s).concat(&s.conj(&lit(g)));
    let rels = vec![
        Relator::new("s^2", s.pow(2)),
        Relator::new("[s, s^(aa)]", GroupWord::commutator(&s, &s.conj(&lit("aa")))),
        Relator::new("(s s^a)^3", s.concat(&sa).pow(3)),
        Relator::new("s s^a s s^(abA)", sym("abA")),
    ];
    let variants = vec![Variant {
        printed: Relator::new("s s^a s s^(aBA)", sym("aBA")),
        used: "s s^a s s^(abA)".into(),
    }];
    let v = Vertex::word;
    let anchors = vec![
        Anchor {
            exponent: lit("aa"),
            claimed: (v("1"), v("11")),
        },
        Anchor {
            exponent: lit("a"),
            claimed: (v("e"), v("1")),
        },
        Anchor {
            exponent: lit("aBA"),
            claimed: (v("0"), v("1")),
        },
        Anchor {
            exponent: lit("abA"),
            claimed: (v("0"), v("1")),
        },
    ];
    (rels, variants, anchors)
}

/// `ααγ`, an element of T sending `(0, ε)` to `(ε, ζ)`.
pub fn stabilizer_conjugator() -> GroupWord {
    lit("aac")
}

pub fn builtin_presentation(g: GroupName) -> Result<Presentation> {
    let symbols = symbols_for(g)?.to_vec();
    let (srels, svars, anchors) = sigma_relators();
    let (vrels, vvars) = v_relators();
    let p = |relators, stabilizer, variants, anchors| {
        let mut p = Presentation {
            name: g,
            symbols: symbols.clone(),
            relators,
            stabilizer,
            conjugator: if matches!(g, GroupName::TQT | GroupName::TQV) {
                stabilizer_conjugator()
            } else {
                GroupWord::empty()
            },
            variants,
            anchors,
        };
        p.variants.extend(p.literal_stabilizer_variants());
        p
    };
    Ok(match g {
        GroupName::F => p(f_relators(), vec![], vec![], vec![]),
        GroupName::T => p(t_relators(), vec![], vec![], vec![]),
        GroupName::V => p(vrels, vec![], vvars, vec![]),
        GroupName::QF => p(
            [srels, f_relators()].concat(),
            stabilizer_generators(StabilizerGroup::QF),
            svars,
            anchors,
        ),
        GroupName::TQT => p(
            [srels, t_relators()].concat(),
            stabilizer_generators(StabilizerGroup::TQT),
            svars,
            anchors,
        ),
        GroupName::TQV => {
            let s = lit("s");
            let flip = Relator::new("s s^(adA)", s.concat(&s.conj(&lit("adA"))));
            p(
                [vec![flip], srels, vrels].concat(),
                stabilizer_generators(StabilizerGroup::TQV),
                [svars, vvars].concat(),
                anchors,
            )
        }
        other => {
            return Err(Error::Parse(format!(
                "no finite presentation is tabulated for {other}"
            )))
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorResult {
    pub relator: Relator,
    /// `None` when the relator evaluates to the identity.
    pub failure: Option<QElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchorResult {
    pub anchor: Anchor,
    pub actual: FinitePermutation,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariantResult {
    pub variant: Variant,
    pub printed_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorReport {
    pub name: GroupName,
    pub relators: Vec<RelatorResult>,
    pub anchors: Vec<AnchorResult>,
    pub variants: Vec<VariantResult>,
    /// `σ_{0,ε} σ_{ε,1} σ_{0,ε} σ_{0,1}` in permutation arithmetic.
    pub transposition_form_holds: Option<bool>,
}

impl RelatorReport {
    /// All relators hold and, for each claimed transposition, some tabulated
    /// exponent realises it.
    pub fn passed(&self) -> bool {
        let relators = self.relators.iter().all(|r| r.failure.is_none());
        let claims: BTreeSet<&(Vertex, Vertex)> =
            self.anchors.iter().map(|a| &a.anchor.claimed).collect();
        let anchors = claims.into_iter().all(|c| {
            self.anchors
                .iter()
                .any(|a| &a.anchor.claimed == c && a.holds)
        });
        relators && anchors && self.transposition_form_holds != Some(false)
    }

    /// One line per relator, then anchor and variant notes.
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.relators {
            out.push(match &r.failure {
                None => format!("PASS {}", r.relator.name),
                Some(q) => format!("FAIL {} {}", r.relator.name, q),
            });
        }
        for a in &self.anchors {
            out.push(format!(
                "NOTE anchor s^({}) = ({} {}): {} (actual {})",
                a.anchor.exponent,
                a.anchor.claimed.0,
                a.anchor.claimed.1,
                if a.holds { "holds" } else { "does not hold" },
                a.actual
            ));
        }
        if let Some(h) = self.transposition_form_holds {
            out.push(format!(
                "NOTE transposition form (0 e)(e 1)(0 e)(0 1): {}",
                if h { "holds" } else { "does not hold" }
            ));
        }
        for v in &self.variants {
            out.push(format!(
                "NOTE printed relator {}: {}; checked as {}",
                v.variant.printed.name,
                if v.printed_holds { "holds" } else { "does not hold" },
                v.variant.used
            ));
        }
        out
    }
}

pub fn check_relators(p: &Presentation) -> RelatorReport {
    let relators = p
        .all_relators()
        .into_iter()
        .map(|relator| {
            let q = evaluate_unchecked(&relator.word);
            RelatorResult {
                failure: (!q.is_identity()).then_some(q),
                relator,
            }
        })
        .collect();
    let anchors = p
        .anchors
        .iter()
        .map(|a| {
            let q = evaluate_unchecked(&lit("s").conj(&a.exponent));
            let claimed = FinitePermutation::transposition(&a.claimed.0, &a.claimed.1);
            AnchorResult {
                anchor: a.clone(),
                holds: q.v.is_identity() && q.sigma == claimed,
                actual: q.sigma,
            }
        })
        .collect();
    let variants = p
        .variants
        .iter()
        .map(|v| VariantResult {
            variant: v.clone(),
            printed_holds: evaluate_unchecked(&v.printed.word).is_identity(),
        })
        .collect();
    let transposition_form_holds = (!p.anchors.is_empty()).then(|| {
        let t = |x: &str, y: &str| FinitePermutation::transposition(&Vertex::word(x), &Vertex::word(y));
        t("0", "e")
            .compose(&t("e", "1"))
            .compose(&t("0", "e"))
            .compose(&t("0", "1"))
            .is_identity()
    });
    RelatorReport {
        name: p.name,
        relators,
        anchors,
        variants,
        transposition_form_holds,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymFlavor {
    /// Generators `σ_{x,y}` for `x <lex y` in `{0,1}*`.
    Star,
    /// Generators `σ_{x,y}` for ordered pairs of distinct vertices of `Z`.
    Z,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SymReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, name: impl FnOnce() -> String, p: FinitePermutation) {
        self.checked += 1;
        if !p.is_identity() {
            self.failures.push(format!("{} = {}", name(), p));
        }
    }
}

fn tuples(vs: &[Vertex], k: usize, ordered: bool) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(vs: &[Vertex], k: usize, ordered: bool, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in vs {
            if cur.contains(v) || (!ordered && cur.last().is_some_and(|l| l >= v)) {
                continue;
            }
            cur.push(v.clone());
            go(vs, k, ordered, cur, out);
            cur.pop();
        }
    }
    go(vs, k, ordered, &mut cur, &mut out);
    out
}

/// Checks every relator family of the presentation of `Sym` on the given
/// vertices, instantiated over all admissible tuples.
pub fn check_sym_presentation(vertices: &[Vertex], flavor: SymFlavor) -> Result<SymReport> {
    let distinct: BTreeSet<&Vertex> = vertices.iter().collect();
    if distinct.len() != vertices.len() {
        return Err(Error::DuplicateVertex(format!("{vertices:?}")));
    }
    if flavor == SymFlavor::Star && vertices.iter().any(Vertex::is_zeta) {
        return Err(Error::MalformedTuple("ζ is not a vertex of {0,1}*".into()));
    }
    let mut vs = vertices.to_vec();
    vs.sort();
    let ordered = flavor == SymFlavor::Z;
    let s = FinitePermutation::transposition;
    let mut report = SymReport::default();
    for t in tuples(&vs, 2, ordered) {
        let (x, y) = (&t[0], &t[1]);
        report.record(|| format!("s({x},{y})^2"), s(x, y).compose(&s(x, y)));
        if ordered {
            report.record(
                || format!("s({x},{y}) s({y},{x})^-1"),
                s(x, y).compose(&s(y, x).inverse()),
            );
        }
    }
    for t in tuples(&vs, 3, ordered) {
        let (x, y, z) = (&t[0], &t[1], &t[2]);
        let p = s(x, y).compose(&s(y, z));
        report.record(|| format!("(s({x},{y}) s({y},{z}))^3"), p.compose(&p).compose(&p));
        report.record(
            || format!("s({x},{y}) s({y},{z}) s({x},{y}) s({x},{z})"),
            s(x, y).compose(&s(y, z)).compose(&s(x, y)).compose(&s(x, z)),
        );
    }
    for t in tuples(&vs, 4, ordered) {
        let (a, b) = (s(&t[0], &t[1]), s(&t[2], &t[3]));
        report.record(
            || format!("[s({},{}), s({},{})]", t[0], t[1], t[2], t[3]),
            a.inverse().compose(&b.inverse()).compose(&a).compose(&b),
        );
    }
    Ok(report)
}

/// Breadth-first closure of `start` under the generators and their inverses
/// through tuples of depth at most `search_bound`, reporting those of depth at
/// most `depth_bound`.
pub fn orbit_enumerate(
    generators: &[GroupWord],
    start: &VertexTuple,
    depth_bound: usize,
    search_bound: usize,
) -> BTreeSet<VertexTuple> {
    let search_bound = search_bound.max(depth_bound);
    let elements: Vec<QElement> = generators
        .iter()
        .flat_map(|w| {
            let q = evaluate_unchecked(w);
            [q.invert(), q]
        })
        .collect();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(t) = queue.pop_front() {
        for q in &elements {
            let Ok(next) = t.map(|x| q.apply(x)) else {
                continue;
            };
            if next.max_depth() <= search_bound && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.retain(|t| t.max_depth() <= depth_bound);
    seen
}

/// The group generators as one-letter words.
pub fn generator_words(g: GroupName) -> Result<Vec<GroupWord>> {
    Ok(symbols_for(g)?
        .iter()
        .map(|c| lit(&c.to_string()))
        .collect())
}

/// A named exact-match check against a tabulated element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn vertex_map_fixture(name: &str, q: &QElement, pairs: &[(&str, &str)]) -> Fixture {
    let wrong: Vec<String> = pairs
        .iter()
        .filter_map(|(x, y)| {
            let (x, y): (Vertex, Vertex) = (x.parse().ok()?, y.parse().ok()?);
            let got = q.apply(&x);
            (got != y).then(|| format!("{x} -> {got}, expected {y}"))
        })
        .collect();
    Fixture {
        name: name.into(),
        passed: wrong.is_empty(),
        detail: if wrong.is_empty() {
            pairs.iter().map(|(x, y)| format!("{x}->{y}")).collect::<Vec<_>>().join(" ")
        } else {
            wrong.join("; ")
        },
    }
}

fn diagram_fixture(name: &str, got: &VElement, pairs: &[(&str, &str)]) -> Fixture {
    let expected = TreePairDiagram::from_pairs(
        pairs
            .iter()
            .map(|(l, r)| (l.parse().expect("fixture word"), r.parse().expect("fixture word"))),
    )
    .expect("fixture diagram")
    .reduce();
    Fixture {
        name: name.into(),
        passed: *got == expected,
        detail: if *got == expected {
            got.to_string()
        } else {
            format!("got {got}, expected {expected}")
        },
    }
}

/// The vertex maps of `α, β, γ, δ`, the tree pairs of the `(ε, ζ)`
/// stabiliser generators, `λ_{3,2}` and the χ-adjusting element for `a = 2`.
pub fn reference_fixtures() -> Vec<Fixture> {
    use crate::actions::{bnsr_witness_fixing, lambda_ni};
    let e = |w: &str| evaluate_unchecked(&lit(w));
    let mut out = vec![
        vertex_map_fixture(
            "alpha vertex map",
            &e("a"),
            &[("e", "0"), ("0", "00"), ("1", "e"), ("10", "01"), ("11", "1"), ("z", "z")],
        ),
        vertex_map_fixture(
            "beta vertex map",
            &e("b"),
            &[
                ("e", "e"),
                ("0", "0"),
                ("1", "10"),
                ("10", "100"),
                ("11", "1"),
                ("110", "101"),
                ("111", "11"),
                ("z", "z"),
            ],
        ),
        vertex_map_fixture(
            "gamma vertex map",
            &e("c"),
            &[("e", "z"), ("0", "11"), ("1", "e"), ("10", "0"), ("11", "10"), ("z", "1")],
        ),
        vertex_map_fixture(
            "delta vertex map",
            &e("d"),
            &[("e", "1"), ("0", "10"), ("1", "e"), ("10", "0"), ("11", "11"), ("z", "z")],
        ),
    ];
    let x = stabilizer_generators(StabilizerGroup::TQV);
    let v = |w: &GroupWord| evaluate_unchecked(w).v;
    let tables: [(&str, &[(&str, &str)]); 6] = [
        (
            "alpha' tree pair",
            &[("00", "000"), ("100", "001"), ("01", "01"), ("101", "10"), ("11", "11")],
        ),
        (
            "beta' tree pair",
            &[
                ("00", "00"),
                ("01", "01"),
                ("100", "1000"),
                ("1010", "1001"),
                ("1011", "101"),
                ("11", "11"),
            ],
        ),
        (
            "gamma' tree pair",
            &[("100", "00"), ("01", "01"), ("101", "100"), ("00", "101"), ("11", "11")],
        ),
        (
            "delta' tree pair",
            &[("100", "00"), ("00", "100"), ("101", "101"), ("01", "01"), ("11", "11")],
        ),
        (
            "lambda tree pair",
            &[("00", "000"), ("010", "001"), ("011", "01"), ("1", "1")],
        ),
        (
            "mu tree pair",
            &[("0", "0"), ("10", "100"), ("110", "101"), ("111", "11")],
        ),
    ];
    for (w, (name, pairs)) in x.iter().zip(tables) {
        out.push(diagram_fixture(name, &v(w), pairs));
    }
    out.push(diagram_fixture(
        "lambda_(3,2) tree pair",
        &lambda_ni(3, 2).expect("in range"),
        &[
            ("000", "000"),
            ("001", "001"),
            ("010", "0100"),
            ("0110", "0101"),
            ("0111", "011"),
            ("10", "10"),
            ("11", "11"),
        ],
    ));
    out.push(diagram_fixture(
        "chi-adjusting element for a = 2",
        &bnsr_witness_fixing(2),
        &[
            ("0", "0"),
            ("10", "10"),
            ("110", "1100"),
            ("1110", "11010"),
            ("11110", "11011"),
            ("11111", "111"),
        ],
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GroupWord {
        s.parse().unwrap()
    }

    #[test]
    fn word_grammar() {
        assert_eq!(w("a B s").to_string(), "aBs");
        assert_eq!(w("aBs").inverse().to_string(), "SbA");
        assert!("ax".parse::<GroupWord>().is_err());
        assert_eq!(w("").len(), 0);
    }

    #[test]
    fn evaluate_examples() {
        assert!(is_identity(&w("ss"), GroupName::QF).unwrap());
        assert!(is_identity(&w("aA"), GroupName::QF).unwrap());
        assert!(!is_identity(&w("a"), GroupName::QF).unwrap());
        assert!(is_identity(&w("ccc"), GroupName::T).unwrap());
        assert_eq!(
            evaluate(&w("b"), GroupName::QF).unwrap(),
            iota(&VElement::generator(Generator::B))
        );
        assert!(matches!(
            evaluate(&w("c"), GroupName::QF),
            Err(Error::InvalidSymbol { symbol: 'c', .. })
        ));
        assert!(matches!(evaluate(&w("s"), GroupName::F), Err(Error::InvalidSymbol { .. })));
        assert!(matches!(evaluate(&w("c"), GroupName::QT), Err(Error::NotAMember(_))));
    }

    #[test]
    fn derived_words_match_derived_generators() {
        use crate::thompson::Family;
        for n in 1..=4 {
            let e = |x: &GroupWord| evaluate(x, GroupName::V).unwrap().v;
            assert_eq!(e(&beta_word(n)), VElement::derived_generator(Family::Beta, n as i64).unwrap());
            assert_eq!(e(&gamma_word(n)), VElement::derived_generator(Family::Gamma, n as i64).unwrap());
            assert_eq!(e(&delta_word(n)), VElement::derived_generator(Family::Delta, n as i64).unwrap());
        }
        let e0 = evaluate(&delta_word(0), GroupName::V).unwrap().v;
        assert_eq!(e0, VElement::derived_generator(Family::Delta, 0).unwrap());
    }

    #[test]
    fn presentation_sizes() {
        let qf = builtin_presentation(GroupName::QF).unwrap();
        assert_eq!(qf.all_relators().len(), 4 + 2 + 6);
        assert_eq!(builtin_presentation(GroupName::TQV).unwrap().stabilizer.len(), 6);
        assert_eq!(builtin_presentation(GroupName::F).unwrap().relators.len(), 2);
        assert_eq!(builtin_presentation(GroupName::T).unwrap().relators.len(), 6);
        assert_eq!(builtin_presentation(GroupName::V).unwrap().relators.len(), 14);
        assert!(builtin_presentation(GroupName::QV).is_err());
    }

    #[test]
    fn all_presentations_hold() {
        for g in [GroupName::F, GroupName::T, GroupName::V, GroupName::QF, GroupName::TQT, GroupName::TQV] {
            let report = check_relators(&builtin_presentation(g).unwrap());
            assert!(report.passed(), "{g}: {:#?}", report.lines());
        }
    }

    #[test]
    fn anchors_and_printed_variants() {
        let report = check_relators(&builtin_presentation(GroupName::QF).unwrap());
        let holds: Vec<(String, bool)> = report
            .anchors
            .iter()
            .map(|a| (a.anchor.exponent.to_string(), a.holds))
            .collect();
        assert_eq!(
            holds,
            vec![
                ("aa".into(), true),
                ("a".into(), true),
                ("aBA".into(), false),
                ("abA".into(), true)
            ]
        );
        let t = |x: &str, y: &str| FinitePermutation::transposition(&Vertex::word(x), &Vertex::word(y));
        assert_eq!(report.anchors[2].actual, t("0", "01"));
        assert!(report.variants.iter().all(|v| !v.printed_holds));
        let t = check_relators(&builtin_presentation(GroupName::TQT).unwrap());
        let literal: Vec<bool> = t.variants[1..].iter().map(|v| v.printed_holds).collect();
        assert_eq!(literal, vec![true, true, false, true]);
        let v = check_relators(&builtin_presentation(GroupName::V).unwrap());
        assert_eq!(v.variants.len(), 1);
        assert!(!v.variants[0].printed_holds);
    }

    #[test]
    fn corrupted_relator_is_reported() {
        let mut p = builtin_presentation(GroupName::QF).unwrap();
        p.relators[0] = Relator::new("s^3", w("sss"));
        let report = check_relators(&p);
        assert!(!report.passed());
        assert_eq!(report.relators[0].failure.as_ref(), Some(&sigma()));
        assert!(report.lines()[0].starts_with("FAIL s^3 sigma=(0 e);"));
    }

    #[test]
    fn sym_presentation_examples() {
        let v = |s: &str| Vertex::word(s);
        let r = check_sym_presentation(&[v("0"), v("e"), v("1")], SymFlavor::Star).unwrap();
        assert!(r.passed() && r.checked > 0);
        assert!(check_sym_presentation(&[v("0")], SymFlavor::Z).unwrap().passed());
        assert!(check_sym_presentation(&[v("0"), v("0")], SymFlavor::Z).is_err());
        assert!(check_sym_presentation(&[Vertex::Zeta], SymFlavor::Star).is_err());
    }

    #[test]
    fn fixtures_pass() {
        for f in reference_fixtures() {
            assert!(f.passed, "{}: {}", f.name, f.detail);
        }
    }

    #[test]
    fn orbit_examples() {
        let start: VertexTuple = "S:0,e".parse().unwrap();
        assert_eq!(orbit_enumerate(&[], &start, 3, 3).len(), 1);
        let f = generator_words(GroupName::F).unwrap();
        let narrow = orbit_enumerate(&f, &start, 2, 2);
        let wide = orbit_enumerate(&f, &start, 2, 3);
        assert!(narrow.is_subset(&wide));
        assert_eq!(wide.len(), 21);
        assert!(wide.contains(&"S:00,01".parse().unwrap()));
        assert_eq!(orbit_enumerate(&f, &start, 0, 2).len(), 0);
    }
}
