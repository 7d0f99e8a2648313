//! Whitehead graphs of cyclic words: the multigraph on the four vertices
//! `A+`, `A-`, `B+`, `B-` recording letter adjacencies, with connectivity,
//! cut-vertex, weight-form and robustness analysis.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::moves::WhiteheadMove;
use crate::word::{CyclicWord, Gen, Int};

/// A vertex of the Whitehead graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Vertex {
    Ap,
    Am,
    Bp,
    Bm,
}

pub const VERTICES: [Vertex; 4] = [Vertex::Ap, Vertex::Am, Vertex::Bp, Vertex::Bm];

impl Vertex {
    pub fn name(self) -> &'static str {
        match self {
            Vertex::Ap => "A+",
            Vertex::Am => "A-",
            Vertex::Bp => "B+",
            Vertex::Bm => "B-",
        }
    }

    /// The hyperelliptic involution on vertices: `X+ <-> X-`.
    pub fn involution(self) -> Vertex {
        match self {
            Vertex::Ap => Vertex::Am,
            Vertex::Am => Vertex::Ap,
            Vertex::Bp => Vertex::Bm,
            Vertex::Bm => Vertex::Bp,
        }
    }

    /// Vertex of a signed letter: `vertex(A) = A+`, `vertex(A^-1) = A-`, etc.
    fn of_letter(gen: Gen, positive: bool) -> Vertex {
        match (gen, positive) {
            (Gen::A, true) => Vertex::Ap,
            (Gen::A, false) => Vertex::Am,
            (Gen::B, true) => Vertex::Bp,
            (Gen::B, false) => Vertex::Bm,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One of the six unordered vertex pairs that can carry edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeClass {
    /// `A+ A-`
    AA,
    /// `B+ B-`
    BB,
    /// `A+ B+`
    ApBp,
    /// `A+ B-`
    ApBm,
    /// `A- B+`
    AmBp,
    /// `A- B-`
    AmBm,
}

pub const EDGE_CLASSES: [EdgeClass; 6] = [
    EdgeClass::AA,
    EdgeClass::BB,
    EdgeClass::ApBp,
    EdgeClass::ApBm,
    EdgeClass::AmBp,
    EdgeClass::AmBm,
];

impl EdgeClass {
    pub fn name(self) -> &'static str {
        match self {
            EdgeClass::AA => "A+A-",
            EdgeClass::BB => "B+B-",
            EdgeClass::ApBp => "A+B+",
            EdgeClass::ApBm => "A+B-",
            EdgeClass::AmBp => "A-B+",
            EdgeClass::AmBm => "A-B-",
        }
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        match self {
            EdgeClass::AA => (Vertex::Ap, Vertex::Am),
            EdgeClass::BB => (Vertex::Bp, Vertex::Bm),
            EdgeClass::ApBp => (Vertex::Ap, Vertex::Bp),
            EdgeClass::ApBm => (Vertex::Ap, Vertex::Bm),
            EdgeClass::AmBp => (Vertex::Am, Vertex::Bp),
            EdgeClass::AmBm => (Vertex::Am, Vertex::Bm),
        }
    }

    fn between(u: Vertex, v: Vertex) -> Option<EdgeClass> {
        EDGE_CLASSES.into_iter().find(|c| {
            let (a, b) = c.endpoints();
            (a, b) == (u, v) || (a, b) == (v, u)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("at least one word is required")]
    EmptyInput,
    #[error("words must be nonempty")]
    EmptyWord,
}

/// Edge multiplicities over the six classes. Loops cannot occur because the
/// source words are cyclically reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WhiteheadGraph {
    mult: BTreeMap<EdgeClass, Int>,
}

impl WhiteheadGraph {
    /// Builds the graph of one or more nonempty cyclic words: one edge between
    /// `vertex(x)` and `vertex(y^-1)` for every cyclic adjacency `xy`.
    pub fn build(words: &[&CyclicWord]) -> Result<WhiteheadGraph, GraphError> {
        if words.is_empty() {
            return Err(GraphError::EmptyInput);
        }
        let mut g = WhiteheadGraph::default();
        for w in words {
            if w.is_empty() {
                return Err(GraphError::EmptyWord);
            }
            g.add_word(w);
        }
        Ok(g)
    }

    /// Builds a graph directly from class multiplicities (for synthetic
    /// graphs in tests and robustness sweeps).
    pub fn from_multiplicities(mult: BTreeMap<EdgeClass, Int>) -> WhiteheadGraph {
        let mut g = WhiteheadGraph::default();
        for (c, m) in mult {
            assert!(!m.is_negative(), "multiplicities must be nonnegative");
            if !m.is_zero() {
                g.mult.insert(c, m);
            }
        }
        g
    }

    fn add_word(&mut self, w: &CyclicWord) {
        let syls = w.syllables();
        let n = syls.len();
        let one = Int::one();
        for (i, s) in syls.iter().enumerate() {
            // internal adjacencies of a block g^e: |e| - 1 edges g+ g-
            let internal = s.exp().abs() - &one;
            if !internal.is_zero() {
                let class = match s.gen() {
                    Gen::A => EdgeClass::AA,
                    Gen::B => EdgeClass::BB,
                };
                self.add(class, internal);
            }
            // junction between the last letter of this block and the first
            // letter of the next (cyclically)
            let next = &syls[(i + 1) % n];
            let x = Vertex::of_letter(s.gen(), s.is_positive());
            // vertex(y^-1) for the first letter y of the next block
            let y_inv = Vertex::of_letter(next.gen(), !next.is_positive());
            if x == y_inv {
                // single-syllable word g^e: the wraparound pair gg gives g+ g-
                debug_assert_eq!(n, 1);
                let class = match s.gen() {
                    Gen::A => EdgeClass::AA,
                    Gen::B => EdgeClass::BB,
                };
                self.add(class, one.clone());
            } else {
                let class = EdgeClass::between(x, y_inv).expect("distinct vertices");
                self.add(class, one.clone());
            }
        }
    }

    fn add(&mut self, class: EdgeClass, k: Int) {
        if k.is_zero() {
            return;
        }
        *self.mult.entry(class).or_insert_with(Int::zero) += k;
    }

    pub fn multiplicity(&self, class: EdgeClass) -> Int {
        self.mult.get(&class).cloned().unwrap_or_else(Int::zero)
    }

    /// Total number of edges; equals the total letter count of the sources.
    pub fn edge_count(&self) -> Int {
        self.mult.values().cloned().sum()
    }

    fn degree(&self, v: Vertex) -> Int {
        EDGE_CLASSES
            .into_iter()
            .filter(|c| {
                let (a, b) = c.endpoints();
                a == v || b == v
            })
            .map(|c| self.multiplicity(c))
            .sum()
    }

    /// Vertices meeting at least one edge. Isolated vertices correspond to a
    /// generator absent from the words and are ignored throughout.
    pub fn active_vertices(&self) -> Vec<Vertex> {
        VERTICES.into_iter().filter(|v| !self.degree(*v).is_zero()).collect()
    }

    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        EdgeClass::between(u, v).map_or(false, |c| !self.multiplicity(c).is_zero())
    }

    fn connected_over(&self, vertices: &[Vertex], dropped: Option<Vertex>) -> bool {
        let verts: Vec<Vertex> =
            vertices.iter().copied().filter(|v| Some(*v) != dropped).collect();
        if verts.len() <= 1 {
            return true;
        }
        let mut seen = vec![false; verts.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, seen_j) in seen.iter_mut().enumerate() {
                if !*seen_j && self.has_edge(verts[i], verts[j]) {
                    *seen_j = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Connectivity over the active vertices.
    pub fn is_connected(&self) -> bool {
        self.connected_over(&self.active_vertices(), None)
    }

    /// Active vertices whose deletion (with all incident edges) disconnects
    /// the remaining active vertices. A vertex isolated by the deletion
    /// counts as a separate component.
    pub fn cut_vertices(&self) -> Vec<Vertex> {
        let active = self.active_vertices();
        if active.len() <= 2 {
            return Vec::new();
        }
        active
            .iter()
            .copied()
            .filter(|v| !self.connected_over(&active, Some(*v)))
            .collect()
    }

    /// The symmetric `(a, b, c, d)` form: `a` is the common multiplicity of
    /// `A+B-` and `A-B+`, `b` of `A+B+` and `A-B-`, `c = A+A-`, `d = B+B-`.
    /// Returns `None` when the cross-class equalities fail (they always hold
    /// for graphs built from words, but not for arbitrary multiplicity maps).
    pub fn weight_form(&self) -> Option<WeightForm> {
        let a = self.multiplicity(EdgeClass::ApBm);
        if a != self.multiplicity(EdgeClass::AmBp) {
            return None;
        }
        let b = self.multiplicity(EdgeClass::ApBp);
        if b != self.multiplicity(EdgeClass::AmBm) {
            return None;
        }
        Some(WeightForm {
            a,
            b,
            c: self.multiplicity(EdgeClass::AA),
            d: self.multiplicity(EdgeClass::BB),
        })
    }

    fn without(&self, deletions: &[EdgeClass]) -> WhiteheadGraph {
        let mut g = self.clone();
        for class in deletions {
            let m = g.multiplicity(*class);
            assert!(!m.is_zero(), "deleting from an empty class");
            let m = m - Int::one();
            if m.is_zero() {
                g.mult.remove(class);
            } else {
                g.mult.insert(*class, m);
            }
        }
        g
    }

    /// Robustness: after deleting any edge orbit of the hyperelliptic
    /// involution — one edge each from `A+B-` and `A-B+`, one each from
    /// `A+B+` and `A-B-`, a single `A+A-` edge, or a single `B+B-` edge —
    /// the remaining graph stays connected with no cut vertex. Deletions
    /// from empty classes are skipped.
    pub fn is_robust(&self) -> bool {
        let mut candidates: Vec<Vec<EdgeClass>> = Vec::new();
        if !self.multiplicity(EdgeClass::ApBm).is_zero()
            && !self.multiplicity(EdgeClass::AmBp).is_zero()
        {
            candidates.push(vec![EdgeClass::ApBm, EdgeClass::AmBp]);
        }
        if !self.multiplicity(EdgeClass::ApBp).is_zero()
            && !self.multiplicity(EdgeClass::AmBm).is_zero()
        {
            candidates.push(vec![EdgeClass::ApBp, EdgeClass::AmBm]);
        }
        if !self.multiplicity(EdgeClass::AA).is_zero() {
            candidates.push(vec![EdgeClass::AA]);
        }
        if !self.multiplicity(EdgeClass::BB).is_zero() {
            candidates.push(vec![EdgeClass::BB]);
        }
        candidates.into_iter().all(|del| {
            let g = self.without(&del);
            g.is_connected() && g.cut_vertices().is_empty()
        })
    }
}

impl Serialize for WhiteheadGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(6))?;
        for class in EDGE_CLASSES {
            map.serialize_entry(class.name(), &self.multiplicity(class).to_string())?;
        }
        map.end()
    }
}

/// The `(a, b, c, d)` weight form of a symmetric Whitehead graph.
/// The letter count of the source word is `2a + 2b + c + d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightForm {
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub d: Int,
}

impl WeightForm {
    pub fn new(a: impl Into<Int>, b: impl Into<Int>, c: impl Into<Int>, d: impl Into<Int>) -> Self {
        WeightForm { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn letters(&self) -> Int {
        Int::from(2) * (&self.a + &self.b) + &self.c + &self.d
    }

    /// Builds the graph with these multiplicities.
    pub fn graph(&self) -> WhiteheadGraph {
        let mut mult = BTreeMap::new();
        mult.insert(EdgeClass::ApBm, self.a.clone());
        mult.insert(EdgeClass::AmBp, self.a.clone());
        mult.insert(EdgeClass::ApBp, self.b.clone());
        mult.insert(EdgeClass::AmBm, self.b.clone());
        mult.insert(EdgeClass::AA, self.c.clone());
        mult.insert(EdgeClass::BB, self.d.clone());
        WhiteheadGraph::from_multiplicities(mult)
    }

    /// Minimality and level moves, from the length accounting of the four
    /// T-transformations on a weight-form word (new lengths `3a+b+2c+d`,
    /// `a+3b+2c+d`, `3a+b+c+2d`, `a+3b+c+2d`):
    ///
    /// - minimal iff `|a-b| <= c` and `|a-b| <= d`;
    /// - a level move exists iff `|a-b| = c` or `|a-b| = d`; equality with
    ///   `c` selects the family `A -> AB^{±1}`, equality with `d` the family
    ///   `B -> BA^{±1}`.
    pub fn minimality_and_level(&self) -> (bool, Vec<WhiteheadMove>) {
        let gap = (&self.a - &self.b).abs();
        let minimal = gap <= self.c && gap <= self.d;
        let mut level = Vec::new();
        if minimal {
            if gap == self.c {
                level.push(WhiteheadMove::AToAB);
                level.push(WhiteheadMove::AToABInv);
            }
            if gap == self.d {
                level.push(WhiteheadMove::BToBA);
                level.push(WhiteheadMove::BToBAInv);
            }
        }
        (minimal, level)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::int;

    fn cyc(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    fn graph(s: &str) -> WhiteheadGraph {
        WhiteheadGraph::build(&[&cyc(s)]).unwrap()
    }

    #[test]
    fn build_rectangular_example() {
        let g = graph("A^3B^2");
        assert_eq!(g.multiplicity(EdgeClass::AA), int(2));
        assert_eq!(g.multiplicity(EdgeClass::BB), int(1));
        assert_eq!(g.multiplicity(EdgeClass::ApBm), int(1));
        assert_eq!(g.multiplicity(EdgeClass::AmBp), int(1));
        assert_eq!(g.multiplicity(EdgeClass::ApBp), int(0));
        assert_eq!(g.edge_count(), int(5));
    }

    #[test]
    fn build_disconnected_example() {
        let g = graph("(AB)^2");
        assert_eq!(g.multiplicity(EdgeClass::ApBm), int(2));
        assert_eq!(g.multiplicity(EdgeClass::AmBp), int(2));
        assert_eq!(g.edge_count(), int(4));
        assert!(!g.is_connected());
    }

    #[test]
    fn build_rejects_empty() {
        assert_eq!(WhiteheadGraph::build(&[]), Err(GraphError::EmptyInput));
        let id = CyclicWord::default();
        assert_eq!(WhiteheadGraph::build(&[&id]), Err(GraphError::EmptyWord));
    }

    #[test]
    fn single_letter_word_contributes_one_edge() {
        let g = graph("A");
        assert_eq!(g.multiplicity(EdgeClass::AA), int(1));
        assert_eq!(g.edge_count(), int(1));
    }

    #[test]
    fn cut_vertices_path_example() {
        let g = graph("(AB^2)^3");
        assert_eq!(g.multiplicity(EdgeClass::ApBm), int(3));
        assert_eq!(g.multiplicity(EdgeClass::BB), int(3));
        assert_eq!(g.multiplicity(EdgeClass::AmBp), int(3));
        assert!(g.is_connected());
        assert_eq!(g.cut_vertices(), vec![Vertex::Bp, Vertex::Bm]);
    }

    #[test]
    fn no_cut_vertex_example() {
        let g = graph("A^3B^2");
        assert!(g.is_connected());
        assert!(g.cut_vertices().is_empty());
    }

    #[test]
    fn weight_form_examples() {
        let wf = graph("A^3B^2").weight_form().unwrap();
        assert_eq!(wf, WeightForm::new(1, 0, 2, 1));
        assert_eq!(wf.letters(), int(5));

        // nonrectangular torus relator word for (n,s,a,b) = (2,2,2,1)
        let wf = graph("B^2A^2B^2A^2B^2A^3").weight_form().unwrap();
        assert_eq!(wf, WeightForm::new(3, 0, 4, 3));

        let wf = graph("ABAB^-1").weight_form().unwrap();
        assert_eq!(wf, WeightForm::new(1, 1, 0, 0));
    }

    #[test]
    fn weight_form_rejects_asymmetric_maps() {
        let mut mult = BTreeMap::new();
        mult.insert(EdgeClass::ApBm, int(2));
        mult.insert(EdgeClass::AmBp, int(1));
        let g = WhiteheadGraph::from_multiplicities(mult);
        assert_eq!(g.weight_form(), None);
    }

    #[test]
    fn minimality_examples() {
        let (min, level) = WeightForm::new(1, 0, 2, 1).minimality_and_level();
        assert!(min);
        assert_eq!(level, vec![WhiteheadMove::BToBA, WhiteheadMove::BToBAInv]);

        let (min, level) = WeightForm::new(1, 0, 2, 3).minimality_and_level();
        assert!(min);
        assert!(level.is_empty());

        let (min, _) = WeightForm::new(2, 0, 1, 5).minimality_and_level();
        assert!(!min);
    }

    #[test]
    fn robustness_examples() {
        assert!(WeightForm::new(1, 1, 2, 2).graph().is_robust());
        assert!(!WeightForm::new(1, 1, 0, 2).graph().is_robust());
        assert!(!WeightForm::new(1, 1, 2, 0).graph().is_robust());
        assert!(!WeightForm::new(1, 1, 0, 0).graph().is_robust());
    }

    #[test]
    fn edge_count_matches_letters() {
        for s in ["A^3B^2", "(AB)^2", "A^-1B^2AB^2", "B^-3A^-2(B^-1A^-1B^2A^-1B^-1A^-2)^2"] {
            let c = cyc(s);
            let g = WhiteheadGraph::build(&[&c]).unwrap();
            assert_eq!(g.edge_count(), c.letters(), "word {s}");
        }
    }
}
