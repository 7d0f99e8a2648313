//! Whitehead T-transformations and the extended symmetry moves, plus general
//! basis substitutions.
//!
//! The four T-transformations are `(A,B) -> (AB^{±1}, B)` and
//! `(A,B) -> (A, BA^{±1})`. The symmetry moves swap the generators or invert
//! one of them; together they generate the automorphisms that permute the
//! four letters `A, A^-1, B, B^-1`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{CyclicWord, Gen, Int, Word};

/// An elementary move on words of F(A,B).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WhiteheadMove {
    /// `A -> AB`
    AToAB,
    /// `A -> AB^-1`
    AToABInv,
    /// `B -> BA`
    BToBA,
    /// `B -> BA^-1`
    BToBAInv,
    /// `A <-> B`
    SwapAB,
    /// `A -> A^-1`
    InvertA,
    /// `B -> B^-1`
    InvertB,
}

/// The four T-transformations, in the fixed order used for tie-breaking.
pub const T_MOVES: [WhiteheadMove; 4] = [
    WhiteheadMove::AToAB,
    WhiteheadMove::AToABInv,
    WhiteheadMove::BToBA,
    WhiteheadMove::BToBAInv,
];

/// The three symmetry moves.
pub const SYMMETRY_MOVES: [WhiteheadMove; 3] =
    [WhiteheadMove::SwapAB, WhiteheadMove::InvertA, WhiteheadMove::InvertB];

impl WhiteheadMove {
    /// Serialisation token: `A>AB`, `A>Ab`, `B>BA`, `B>Ba`, `swap`, `invA`, `invB`.
    pub fn token(self) -> &'static str {
        match self {
            WhiteheadMove::AToAB => "A>AB",
            WhiteheadMove::AToABInv => "A>Ab",
            WhiteheadMove::BToBA => "B>BA",
            WhiteheadMove::BToBAInv => "B>Ba",
            WhiteheadMove::SwapAB => "swap",
            WhiteheadMove::InvertA => "invA",
            WhiteheadMove::InvertB => "invB",
        }
    }

    pub fn is_t_move(self) -> bool {
        matches!(
            self,
            WhiteheadMove::AToAB
                | WhiteheadMove::AToABInv
                | WhiteheadMove::BToBA
                | WhiteheadMove::BToBAInv
        )
    }

    /// The inverse move: `A>AB` and `A>Ab` invert each other, the symmetry
    /// moves are involutions.
    pub fn inverse(self) -> WhiteheadMove {
        match self {
            WhiteheadMove::AToAB => WhiteheadMove::AToABInv,
            WhiteheadMove::AToABInv => WhiteheadMove::AToAB,
            WhiteheadMove::BToBA => WhiteheadMove::BToBAInv,
            WhiteheadMove::BToBAInv => WhiteheadMove::BToBA,
            other => other,
        }
    }

    /// Images of the generators under the move.
    pub fn images(self) -> (Word, Word) {
        let a = Word::gen(Gen::A);
        let b = Word::gen(Gen::B);
        match self {
            WhiteheadMove::AToAB => (a.concat(&b), b),
            WhiteheadMove::AToABInv => (a.concat(&b.invert()), b),
            WhiteheadMove::BToBA => (a.clone(), b.concat(&a)),
            WhiteheadMove::BToBAInv => (a.clone(), b.concat(&a.invert())),
            WhiteheadMove::SwapAB => (b, a),
            WhiteheadMove::InvertA => (a.invert(), b),
            WhiteheadMove::InvertB => (a, b.invert()),
        }
    }

    /// Applies the move to a word and freely reduces.
    pub fn apply(self, w: &Word) -> Word {
        let (ia, ib) = self.images();
        substitute(&ia, &ib, w)
    }

    /// Applies the move to a cyclic word; the result is cyclically reduced
    /// and canonicalised.
    pub fn apply_cyclic(self, w: &CyclicWord) -> CyclicWord {
        CyclicWord::from_word(&self.apply(&w.to_word()))
    }

    /// Cyclic letter count of the image.
    pub fn cyclic_length_after(self, w: &CyclicWord) -> Int {
        self.apply_cyclic(w).letters()
    }
}

impl fmt::Display for WhiteheadMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl std::str::FromStr for WhiteheadMove {
    type Err = UnknownMoveToken;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "A>AB" => WhiteheadMove::AToAB,
            "A>Ab" => WhiteheadMove::AToABInv,
            "B>BA" => WhiteheadMove::BToBA,
            "B>Ba" => WhiteheadMove::BToBAInv,
            "swap" => WhiteheadMove::SwapAB,
            "invA" => WhiteheadMove::InvertA,
            "invB" => WhiteheadMove::InvertB,
            _ => return Err(UnknownMoveToken(s.to_string())),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown move token `{0}`")]
pub struct UnknownMoveToken(pub String);

impl Serialize for WhiteheadMove {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.token())
    }
}

impl<'de> Deserialize<'de> for WhiteheadMove {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite sequence of moves, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveSequence(pub Vec<WhiteheadMove>);

impl MoveSequence {
    pub fn new() -> MoveSequence {
        MoveSequence(Vec::new())
    }

    pub fn push(&mut self, m: WhiteheadMove) {
        self.0.push(m);
    }

    pub fn extend(&mut self, other: &MoveSequence) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, w: &Word) -> Word {
        self.0.iter().fold(w.clone(), |acc, m| m.apply(&acc))
    }

    pub fn apply_cyclic(&self, w: &CyclicWord) -> CyclicWord {
        CyclicWord::from_word(&self.apply(&w.to_word()))
    }

    /// The inverse sequence: reversed, with each move inverted.
    pub fn inverse(&self) -> MoveSequence {
        MoveSequence(self.0.iter().rev().map(|m| m.inverse()).collect())
    }
}

impl fmt::Display for MoveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<&str> = self.0.iter().map(|m| m.token()).collect();
        f.write_str(&tokens.join(" "))
    }
}

/// Substitutes `A -> image_a`, `B -> image_b` in `w` and freely reduces.
/// No basis check is performed; see [`Substitution`] for validated use.
pub fn substitute(image_a: &Word, image_b: &Word, w: &Word) -> Word {
    let mut acc = Word::identity();
    for s in w.syllables() {
        let image = match s.gen() {
            Gen::A => image_a,
            Gen::B => image_b,
        };
        acc = acc.concat(&image.power(s.exp()));
    }
    acc
}

/// A validated basis substitution `A -> u`, `B -> v`: the pair `(u, v)` is
/// checked to be a basis of F(A,B), so the substitution is an automorphism.
///
/// Validation is exact: the abelianised matrix must be unimodular and the
/// commutator `[u, v]` must be conjugate to `[A, B]` or `[B, A]`, which
/// characterises bases of a rank-2 free group. (Unimodularity plus
/// primitivity of both images is not sufficient: `(A, BABA^-1B^-1)` passes
/// both of those but generates a proper subgroup.)
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    image_a: Word,
    image_b: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SubstitutionError {
    #[error("abelianised image matrix has determinant {0}, expected ±1")]
    NotUnimodular(Int),
    #[error("images do not form a basis: [u, v] is not conjugate to [A, B]^±1")]
    NotABasis,
}

impl Substitution {
    pub fn new(image_a: Word, image_b: Word) -> Result<Substitution, SubstitutionError> {
        let d = crate::word::det(&image_a.abelianize(), &image_b.abelianize());
        if d.clone().abs() != Int::from(1) {
            return Err(SubstitutionError::NotUnimodular(d));
        }
        let comm = CyclicWord::from_word(&Word::commutator(&image_a, &image_b));
        let canon = CyclicWord::from_word(&Word::commutator(&Word::gen(Gen::A), &Word::gen(Gen::B)));
        let canon_inv = CyclicWord::from_word(&Word::commutator(&Word::gen(Gen::B), &Word::gen(Gen::A)));
        if comm != canon && comm != canon_inv {
            return Err(SubstitutionError::NotABasis);
        }
        Ok(Substitution { image_a, image_b })
    }

    pub fn image_a(&self) -> &Word {
        &self.image_a
    }

    pub fn image_b(&self) -> &Word {
        &self.image_b
    }

    pub fn apply(&self, w: &Word) -> Word {
        substitute(&self.image_a, &self.image_b, w)
    }

    pub fn apply_cyclic(&self, w: &CyclicWord) -> CyclicWord {
        CyclicWord::from_word(&self.apply(&w.to_word()))
    }
}
