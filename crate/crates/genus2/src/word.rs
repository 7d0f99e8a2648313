//! Exact word algebra over the rank-2 free group F(A,B).
//!
//! Words are stored as freely reduced syllable sequences (maximal blocks
//! `A^n`, `B^s`), with arbitrary-precision exponents so that nothing ever
//! overflows silently. [`CyclicWord`] adds cyclic reduction and a canonical
//! rotation, making equality of conjugacy-class representatives a plain
//! sequence comparison.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Arbitrary-precision integer used for exponents, lengths and determinants.
pub type Int = BigInt;

/// Shorthand for building an [`Int`] from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// One of the two free generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gen {
    A,
    B,
}

impl Gen {
    /// The other generator.
    pub fn other(self) -> Gen {
        match self {
            Gen::A => Gen::B,
            Gen::B => Gen::A,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Gen::A => 'A',
            Gen::B => 'B',
        }
    }
}

/// A maximal block `g^e` with `e != 0`.
///
/// Ordering is `(gen, exp)` lexicographic — `A` before `B`, exponents
/// ascending — which is exactly the order used for canonical rotations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    gen: Gen,
    exp: Int,
}

impl Syllable {
    /// Builds a syllable. Panics on a zero exponent, which never denotes a
    /// syllable of a reduced word.
    pub fn new(gen: Gen, exp: impl Into<Int>) -> Syllable {
        let exp = exp.into();
        assert!(!exp.is_zero(), "syllable exponent must be nonzero");
        Syllable { gen, exp }
    }

    pub fn gen(&self) -> Gen {
        self.gen
    }

    pub fn exp(&self) -> &Int {
        &self.exp
    }

    /// Sign of the exponent: `true` for positive.
    pub fn is_positive(&self) -> bool {
        self.exp.is_positive()
    }

    pub fn inverted(&self) -> Syllable {
        Syllable { gen: self.gen, exp: -&self.exp }
    }

    fn letters(&self) -> Int {
        self.exp.abs()
    }
}

/// The exponent-sum image of a word in H1 of the handlebody.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianImage {
    /// Exponent sum of `A`.
    pub ea: Int,
    /// Exponent sum of `B`.
    pub eb: Int,
}

impl AbelianImage {
    pub fn zero() -> AbelianImage {
        AbelianImage { ea: Int::zero(), eb: Int::zero() }
    }

    pub fn add(&self, other: &AbelianImage) -> AbelianImage {
        AbelianImage { ea: &self.ea + &other.ea, eb: &self.eb + &other.eb }
    }

    pub fn neg(&self) -> AbelianImage {
        AbelianImage { ea: -&self.ea, eb: -&self.eb }
    }

    /// gcd of the two coordinates (`gcd(0, 0) = 0`).
    pub fn content(&self) -> Int {
        num_integer::Integer::gcd(&self.ea, &self.eb)
    }
}

/// Determinant of the 2x2 matrix with columns `u`, `v`.
pub fn det(u: &AbelianImage, v: &AbelianImage) -> Int {
    &u.ea * &v.eb - &v.ea * &u.eb
}

/// A freely reduced word: adjacent syllables always have distinct generators.
/// The empty sequence is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    syllables: Vec<Syllable>,
}

/// Error produced by [`Word::parse`], carrying the byte offset of the fault.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character")]
    UnexpectedChar,
    #[error("zero exponent")]
    ZeroExponent,
    #[error("expected digits after '^'")]
    MissingExponent,
    #[error("unbalanced parenthesis")]
    UnbalancedParen,
}

impl Word {
    /// The identity word.
    pub fn identity() -> Word {
        Word::default()
    }

    /// The single-letter word `g`.
    pub fn gen(g: Gen) -> Word {
        Word { syllables: vec![Syllable::new(g, 1)] }
    }

    /// The word `g^e` (identity if `e == 0`).
    pub fn gen_pow(g: Gen, e: impl Into<Int>) -> Word {
        let e = e.into();
        if e.is_zero() {
            Word::identity()
        } else {
            Word { syllables: vec![Syllable::new(g, e)] }
        }
    }

    /// Builds a word from raw `(gen, exp)` pairs, freely reducing as it goes.
    /// Zero exponents are skipped; adjacent equal generators merge and
    /// cancellation cascades.
    pub fn from_syllables<I>(iter: I) -> Word
    where
        I: IntoIterator<Item = (Gen, Int)>,
    {
        let mut stack: Vec<Syllable> = Vec::new();
        for (gen, exp) in iter {
            push_reduced(&mut stack, gen, exp);
        }
        Word { syllables: stack }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Letter count: the sum of `|exponent|` over all syllables.
    pub fn letters(&self) -> Int {
        self.syllables.iter().map(Syllable::letters).sum()
    }

    /// Parses the ASCII grammar `word := term*`, `term := atom power?`,
    /// `atom := 'A' | 'B' | '(' word ')'`, `power := '^' '-'? digit+`.
    /// Whitespace is ignored; `a`, `b` abbreviate `A^-1`, `B^-1`.
    pub fn parse(text: &str) -> Result<Word, ParseError> {
        let bytes = text.as_bytes();
        let mut pos = 0usize;
        let word = parse_word(bytes, &mut pos, false)?;
        if pos != bytes.len() {
            // the only way to stop early at top level is a stray ')'
            return Err(ParseError { offset: pos, kind: ParseErrorKind::UnbalancedParen });
        }
        Ok(word)
    }

    /// Canonical rendering: uppercase letters with explicit exponents,
    /// e.g. `A^-1B^2AB^2`. The identity renders as the empty string.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.syllables {
            out.push(s.gen.letter());
            if !s.exp.is_one() {
                out.push('^');
                out.push_str(&s.exp.to_string());
            }
        }
        out
    }

    pub fn invert(&self) -> Word {
        Word { syllables: self.syllables.iter().rev().map(Syllable::inverted).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut stack = self.syllables.clone();
        for s in &other.syllables {
            push_reduced(&mut stack, s.gen, s.exp.clone());
        }
        Word { syllables: stack }
    }

    /// Concatenates a sequence of words, reducing throughout.
    pub fn concat_all<'a, I>(words: I) -> Word
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut acc = Word::identity();
        for w in words {
            acc = acc.concat(w);
        }
        acc
    }

    /// `self^k`, with `power(u, -k) = invert(power(u, k))`.
    ///
    /// Panics if the repetition count does not fit in memory; exponents of a
    /// single syllable are exact and unbounded, but a power of a multi-syllable
    /// word must be materialised.
    pub fn power(&self, k: &Int) -> Word {
        if k.is_zero() || self.is_identity() {
            return Word::identity();
        }
        let base = if k.is_negative() { self.invert() } else { self.clone() };
        let reps = k.abs();
        if self.syllables.len() == 1 {
            let s = &base.syllables[0];
            return Word::gen_pow(s.gen, &s.exp * &reps);
        }
        let reps = usize::try_from(&reps).expect("power repetition count too large to materialise");
        let mut acc = Word::identity();
        for _ in 0..reps {
            acc = acc.concat(&base);
        }
        acc
    }

    /// `[u, v] = u v u^-1 v^-1`, freely reduced.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        Word::concat_all([u, v, &u.invert(), &v.invert()])
    }

    pub fn abelianize(&self) -> AbelianImage {
        let mut im = AbelianImage::zero();
        for s in &self.syllables {
            match s.gen {
                Gen::A => im.ea += &s.exp,
                Gen::B => im.eb += &s.exp,
            }
        }
        im
    }

    /// Cyclic reduction: returns `(r, c)` with `self = c r c^-1` in the free
    /// group, `r` cyclically reduced and in canonical rotation.
    pub fn cyclic_reduce(&self) -> (CyclicWord, Word) {
        let mut core = self.syllables.clone();
        let mut conj: Vec<Syllable> = Vec::new();
        while core.len() >= 2 && core[0].gen == core[core.len() - 1].gen {
            let first = core.remove(0);
            let last = core.pop().expect("len >= 2");
            let sum = &first.exp + &last.exp;
            conj.push(first.clone());
            if !sum.is_zero() {
                // w = g^m u g^n with m+n != 0: rotate to u g^(m+n)
                core.push(Syllable::new(first.gen, sum));
                break;
            }
        }
        let conj_word = Word::from_syllables(conj.into_iter().map(|s| (s.gen, s.exp)));
        let (canonical, prefix) = canonical_rotation(core);
        (CyclicWord { syllables: canonical }, conj_word.concat(&prefix))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}

fn push_reduced(stack: &mut Vec<Syllable>, gen: Gen, exp: Int) {
    if exp.is_zero() {
        return;
    }
    match stack.last_mut() {
        Some(top) if top.gen == gen => {
            top.exp += exp;
            if top.exp.is_zero() {
                stack.pop();
            }
        }
        _ => stack.push(Syllable { gen, exp }),
    }
}

fn parse_word(bytes: &[u8], pos: &mut usize, in_group: bool) -> Result<Word, ParseError> {
    let mut acc = Word::identity();
    loop {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
        if *pos >= bytes.len() {
            if in_group {
                return Err(ParseError { offset: *pos, kind: ParseErrorKind::UnbalancedParen });
            }
            return Ok(acc);
        }
        let start = *pos;
        let atom = match bytes[*pos] {
            b'A' => {
                *pos += 1;
                Word::gen(Gen::A)
            }
            b'B' => {
                *pos += 1;
                Word::gen(Gen::B)
            }
            b'a' => {
                *pos += 1;
                Word::gen_pow(Gen::A, -1)
            }
            b'b' => {
                *pos += 1;
                Word::gen_pow(Gen::B, -1)
            }
            b'(' => {
                *pos += 1;
                let inner = parse_word(bytes, pos, true)?;
                // parse_word in group mode stops at ')'
                *pos += 1;
                inner
            }
            b')' if in_group => return Ok(acc),
            _ => return Err(ParseError { offset: start, kind: ParseErrorKind::UnexpectedChar }),
        };
        // optional power
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
        let piece = if *pos < bytes.len() && bytes[*pos] == b'^' {
            *pos += 1;
            let mut neg = false;
            if *pos < bytes.len() && bytes[*pos] == b'-' {
                neg = true;
                *pos += 1;
            }
            let digits_start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if digits_start == *pos {
                return Err(ParseError { offset: *pos, kind: ParseErrorKind::MissingExponent });
            }
            let digits = std::str::from_utf8(&bytes[digits_start..*pos]).expect("ascii digits");
            let mut k: Int = digits.parse().expect("digit string");
            if k.is_zero() {
                return Err(ParseError { offset: digits_start, kind: ParseErrorKind::ZeroExponent });
            }
            if neg {
                k = -k;
            }
            atom.power(&k)
        } else {
            atom
        };
        acc = acc.concat(&piece);
    }
}

/// Returns the lexicographically least rotation of a cyclically reduced
/// syllable sequence, together with the rotated-away prefix as a word
/// (`original = prefix . canonical . prefix^-1` as cyclic conjugates).
fn canonical_rotation(core: Vec<Syllable>) -> (Vec<Syllable>, Word) {
    let n = core.len();
    if n <= 1 {
        return (core, Word::identity());
    }
    let mut best = 0usize;
    for cand in 1..n {
        for k in 0..n {
            let a = &core[(cand + k) % n];
            let b = &core[(best + k) % n];
            match a.cmp(b) {
                std::cmp::Ordering::Less => {
                    best = cand;
                    break;
                }
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    let prefix =
        Word::from_syllables(core[..best].iter().map(|s| (s.gen, s.exp.clone())));
    let mut rotated = Vec::with_capacity(n);
    rotated.extend_from_slice(&core[best..]);
    rotated.extend_from_slice(&core[..best]);
    (rotated, prefix)
}

/// A cyclically reduced word in canonical rotation. Two conjugate cyclically
/// reduced words are equal as `CyclicWord`s exactly when they agree as values.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    syllables: Vec<Syllable>,
}

/// Per-generator syllable statistics of a cyclic word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenStats {
    /// Exponent multiset, as `exponent -> number of syllables`.
    pub exponents: std::collections::BTreeMap<Int, usize>,
    /// Largest `|exponent|`, when the generator occurs at all.
    pub max_abs: Option<Int>,
}

impl GenStats {
    pub fn distinct(&self) -> usize {
        self.exponents.len()
    }
}

/// Statistics for both generators; see [`CyclicWord::stats`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyllableStats {
    pub a: GenStats,
    pub b: GenStats,
}

impl SyllableStats {
    pub fn for_gen(&self, g: Gen) -> &GenStats {
        match g {
            Gen::A => &self.a,
            Gen::B => &self.b,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("operation requires a nonempty cyclic word")]
pub struct EmptyWordError;

impl CyclicWord {
    /// Cyclically reduces and canonicalises `w`, discarding the conjugator.
    pub fn from_word(w: &Word) -> CyclicWord {
        w.cyclic_reduce().0
    }

    /// Parses then cyclically reduces.
    pub fn parse(text: &str) -> Result<CyclicWord, ParseError> {
        Ok(CyclicWord::from_word(&Word::parse(text)?))
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn letters(&self) -> Int {
        self.syllables.iter().map(Syllable::letters).sum()
    }

    /// The canonical rotation, read as a linear word.
    pub fn to_word(&self) -> Word {
        Word { syllables: self.syllables.clone() }
    }

    pub fn render(&self) -> String {
        self.to_word().render()
    }

    pub fn abelianize(&self) -> AbelianImage {
        self.to_word().abelianize()
    }

    /// All rotations of the syllable sequence, as words (not canonicalised).
    pub fn rotations(&self) -> Vec<Word> {
        let n = self.syllables.len();
        (0..n.max(1))
            .map(|k| {
                let mut v = Vec::with_capacity(n);
                v.extend_from_slice(&self.syllables[k..]);
                v.extend_from_slice(&self.syllables[..k]);
                Word { syllables: v }
            })
            .collect()
    }

    /// Exponent multisets, maxima and distinct counts per generator.
    /// The identity word carries no curve and is rejected.
    pub fn stats(&self) -> Result<SyllableStats, EmptyWordError> {
        if self.is_empty() {
            return Err(EmptyWordError);
        }
        let mut a = GenStats { exponents: Default::default(), max_abs: None };
        let mut b = GenStats { exponents: Default::default(), max_abs: None };
        for s in &self.syllables {
            let slot = match s.gen {
                Gen::A => &mut a,
                Gen::B => &mut b,
            };
            *slot.exponents.entry(s.exp.clone()).or_insert(0) += 1;
            let abs = s.exp.abs();
            if slot.max_abs.as_ref().map_or(true, |m| &abs > m) {
                slot.max_abs = Some(abs);
            }
        }
        Ok(SyllableStats { a, b })
    }

    /// Maximal decomposition `self = root^k` with `k >= 2`, as cyclic words.
    /// The root is never itself a proper power.
    pub fn proper_power(&self) -> Option<(CyclicWord, Int)> {
        let n = self.syllables.len();
        if n == 0 {
            return None;
        }
        if n == 1 {
            let s = &self.syllables[0];
            let k = s.exp.abs();
            if k >= int(2) {
                let root = if s.is_positive() { 1 } else { -1 };
                return Some((
                    CyclicWord { syllables: vec![Syllable::new(s.gen, root)] },
                    k,
                ));
            }
            return None;
        }
        // smallest cyclic period d of the syllable sequence
        for d in 1..n {
            if n % d != 0 {
                continue;
            }
            if (0..n).all(|i| self.syllables[i] == self.syllables[(i + d) % n]) {
                let root = CyclicWord::from_word(&Word {
                    syllables: self.syllables[..d].to_vec(),
                });
                return Some((root, int((n / d) as i64)));
            }
        }
        None
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for CyclicWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for CyclicWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<CyclicWord, D::Error> {
        let s = String::deserialize(deserializer)?;
        CyclicWord::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn cyc(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    #[test]
    fn parse_alpha_word() {
        let word = w("A^-1B^2AB^2");
        assert_eq!(word.syllables().len(), 4);
        assert_eq!(word.render(), "A^-1B^2AB^2");
    }

    #[test]
    fn parse_free_cancellation() {
        assert!(w("ABB^-1A^-1").is_identity());
        assert!(w("").is_identity());
    }

    #[test]
    fn parse_grouped_power() {
        let word = w("A(BA^2)^2");
        assert_eq!(word.render(), "ABA^2BA^2");
        assert_eq!(word.abelianize().ea, int(5));
    }

    #[test]
    fn parse_lowercase_shorthand() {
        assert_eq!(w("a"), w("A^-1"));
        assert_eq!(w("ab^2"), w("A^-1B^-1B^-1"));
        assert_eq!(w("a^2"), w("A^-2"));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let e = Word::parse("AB^0").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ZeroExponent);
        assert_eq!(e.offset, 3);
        let e = Word::parse("AXB").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedChar);
        assert_eq!(e.offset, 1);
        let e = Word::parse("A^").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingExponent);
        let e = Word::parse("(AB").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnbalancedParen);
        let e = Word::parse("AB)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnbalancedParen);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("A^-1B^2A^-1").invert(), w("AB^-2A"));
        assert_eq!(Word::identity().invert(), Word::identity());
        // P3^-1 at p=2
        assert_eq!(w("A^-1(B^-1A^-2)B^-1A^-1").invert(), w("ABA^2BA"));
    }

    #[test]
    fn concat_cancels_inverse() {
        let word = w("A^-1B^3A^2B^-1");
        assert!(word.concat(&word.invert()).is_identity());
    }

    #[test]
    fn power_examples() {
        assert_eq!(w("AB^2").power(&int(3)), w("AB^2AB^2AB^2"));
        assert_eq!(w("AB").power(&int(-2)), w("B^-1A^-1B^-1A^-1"));
        assert_eq!(w("A^3").power(&int(5)), w("A^15"));
    }

    #[test]
    fn commutator_examples() {
        assert!(Word::commutator(&w("A"), &w("A^3")).is_identity());
        let gamma = Word::commutator(&w("A(BA^2)"), &w("A^-1B^2AB^2"));
        let expect = cyc("(A^2B)AB^2AB^2(A^-2B^-1)A^-1B^-2A^-1B^-2");
        assert_eq!(CyclicWord::from_word(&gamma), expect);
    }

    #[test]
    fn cyclic_reduce_conjugate_of_generator() {
        let (r, c) = w("A^2BA^-2").cyclic_reduce();
        assert_eq!(r, cyc("B"));
        assert_eq!(c, w("A^2"));
    }

    #[test]
    fn cyclic_reduce_wrap_merge() {
        let (r, c) = w("A^3BA^-1BA^-1").cyclic_reduce();
        assert_eq!(r, cyc("A^2BA^-1B"));
        // conjugation identity
        let back = Word::concat_all([&c, &r.to_word(), &c.invert()]);
        assert_eq!(back, w("A^3BA^-1BA^-1"));
    }

    #[test]
    fn cyclic_reduce_already_reduced() {
        let (r, c) = w("AB").cyclic_reduce();
        assert_eq!(r.render(), "AB");
        assert!(c.is_identity());
    }

    #[test]
    fn canonical_rotation_is_least() {
        // rotations of the same cyclic word canonicalise identically
        let c = cyc("A^3BA^2B");
        for rot in c.rotations() {
            assert_eq!(CyclicWord::from_word(&rot), c);
        }
        // and the canonical form starts at the least syllable
        assert_eq!(cyc("B^2A^2B^2A^3").render(), "A^2B^2A^3B^2");
    }

    #[test]
    fn abelianize_examples() {
        let m = w("A(BA^2)^2").abelianize();
        assert_eq!((m.ea, m.eb), (int(5), int(2)));
        let a = w("A^-1B^3AB^3").abelianize();
        assert_eq!((a.ea, a.eb), (int(0), int(6)));
        // case-(1) candidate at (p, J, m) = (1, 2, 0)
        let r = w("B^2AB^2AB").abelianize();
        assert_eq!((r.ea, r.eb), (int(2), int(5)));
    }

    #[test]
    fn stats_examples() {
        let word = cyc("B^-3A^-2(B^-1A^-1B^2A^-1B^-1A^-2)^2");
        let st = word.stats().unwrap();
        assert_eq!(st.a.max_abs, Some(int(2)));
        assert_eq!(st.b.max_abs, Some(int(3)));
        assert_eq!(st.a.distinct(), 2);
        assert_eq!(st.b.distinct(), 3);

        let st = cyc("A^3B^2").stats().unwrap();
        assert_eq!(st.a.exponents.keys().cloned().collect::<Vec<_>>(), vec![int(3)]);
        assert_eq!(st.b.exponents.keys().cloned().collect::<Vec<_>>(), vec![int(2)]);

        let st = cyc("(A^2B)^3").stats().unwrap();
        assert_eq!(st.a.distinct(), 1);
        assert_eq!(st.b.distinct(), 1);

        assert!(CyclicWord::default().stats().is_err());
    }

    #[test]
    fn proper_power_examples() {
        let (root, k) = cyc("(AB^2)^3").proper_power().unwrap();
        assert_eq!(root, cyc("AB^2"));
        assert_eq!(k, int(3));

        assert_eq!(cyc("A^2B^2").proper_power(), None);

        let (root, k) = cyc("A^6").proper_power().unwrap();
        assert_eq!(root, cyc("A"));
        assert_eq!(k, int(6));

        let (root, k) = cyc("A^-6").proper_power().unwrap();
        assert_eq!(root, cyc("A^-1"));
        assert_eq!(k, int(6));
    }

    #[test]
    fn proper_power_reassembles() {
        for text in ["(AB^2)^3", "(A^2B^-1A B)^2", "A^6", "(AB)^2"] {
            let c = cyc(text);
            if let Some((root, k)) = c.proper_power() {
                assert_eq!(CyclicWord::from_word(&root.to_word().power(&k)), c);
            }
        }
    }

    #[test]
    fn letters_counts_letters() {
        assert_eq!(w("A^3B^-2AB").letters(), int(7));
        assert_eq!(Word::identity().letters(), int(0));
    }
}
