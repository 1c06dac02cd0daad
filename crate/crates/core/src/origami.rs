//! Flat folding of unit-length strips and of single-vertex patterns with
//! equal angles.
//!
//! Creases and faces are indexed from 0. In a linear pattern crease `i`
//! joins faces `i` and `i + 1`; in a cyclic pattern of length `n` it joins
//! faces `i` and `(i + 1) % n`. Face `i` is flipped when `i` is odd, so a
//! mountain crease after an unflipped face sends the next face below, and
//! after a flipped face sends it above. Layer orders list faces bottom to top.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Crease {
    Mountain,
    Valley,
}

impl Crease {
    pub fn flipped(self) -> Crease {
        match self {
            Crease::Mountain => Crease::Valley,
            Crease::Valley => Crease::Mountain,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Crease::Mountain => 'M',
            Crease::Valley => 'V',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("a linear pattern needs at least one crease")]
    Empty,
    #[error("a cyclic pattern needs an even number of creases, got {0}")]
    OddCycle(usize),
    #[error("a cyclic pattern needs at least 4 creases, got {0}")]
    ShortCycle(usize),
    #[error("unexpected character {0:?} in crease string (only M and V)")]
    BadLetter(char),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CreasePattern {
    creases: Vec<Crease>,
    cyclic: bool,
}

impl CreasePattern {
    pub fn linear(creases: Vec<Crease>) -> Result<Self, PatternError> {
        if creases.is_empty() {
            return Err(PatternError::Empty);
        }
        Ok(CreasePattern { creases, cyclic: false })
    }

    pub fn cyclic(creases: Vec<Crease>) -> Result<Self, PatternError> {
        let n = creases.len();
        if n % 2 == 1 {
            return Err(PatternError::OddCycle(n));
        }
        if n < 4 {
            return Err(PatternError::ShortCycle(n));
        }
        Ok(CreasePattern { creases, cyclic: true })
    }

    /// Parses an uppercase `M`/`V` string.
    pub fn parse(s: &str, cyclic: bool) -> Result<Self, PatternError> {
        let creases = s
            .chars()
            .map(|c| match c {
                'M' => Ok(Crease::Mountain),
                'V' => Ok(Crease::Valley),
                other => Err(PatternError::BadLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if cyclic {
            Self::cyclic(creases)
        } else {
            Self::linear(creases)
        }
    }

    pub fn creases(&self) -> &[Crease] {
        &self.creases
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn len(&self) -> usize {
        self.creases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.creases.is_empty()
    }

    pub fn face_count(&self) -> usize {
        if self.cyclic {
            self.creases.len()
        } else {
            self.creases.len() + 1
        }
    }

    /// The two faces joined by crease `i`, in crease direction.
    pub fn faces_of(&self, i: usize) -> (usize, usize) {
        (i, (i + 1) % self.face_count())
    }
}

impl fmt::Display for CreasePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.creases {
            write!(f, "{}", c.letter())?;
        }
        Ok(())
    }
}

impl FromStr for CreasePattern {
    type Err = PatternError;

    /// Parses a linear pattern.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CreasePattern::parse(s, false)
    }
}

/// Faces listed bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LayerOrder(pub Vec<usize>);

impl LayerOrder {
    pub fn faces(&self) -> &[usize] {
        &self.0
    }
}

fn pushes_below(crease: Crease, face: usize) -> bool {
    let flipped = face % 2 == 1;
    match crease {
        Crease::Mountain => !flipped,
        Crease::Valley => flipped,
    }
}

/// Whether crease `i` forces face `i + 1` below face `i`.
pub fn effective_below(pattern: &CreasePattern, i: usize) -> bool {
    pushes_below(pattern.creases[i], i)
}

/// A doubly linked stack of faces, kept as index arrays.
struct Stack {
    up: Vec<usize>,
    down: Vec<usize>,
    bottom: usize,
}

const NIL: usize = usize::MAX;

impl Stack {
    fn new(faces: usize, first: usize) -> Self {
        Stack {
            up: vec![NIL; faces],
            down: vec![NIL; faces],
            bottom: first,
        }
    }

    fn insert_below(&mut self, anchor: usize, face: usize) {
        let under = self.down[anchor];
        self.down[face] = under;
        self.up[face] = anchor;
        self.down[anchor] = face;
        if under == NIL {
            self.bottom = face;
        } else {
            self.up[under] = face;
        }
    }

    fn insert_above(&mut self, anchor: usize, face: usize) {
        let over = self.up[anchor];
        self.up[face] = over;
        self.down[face] = anchor;
        self.up[anchor] = face;
        if over != NIL {
            self.down[over] = face;
        }
    }

    fn insert(&mut self, anchor: usize, face: usize, below: bool) {
        if below {
            self.insert_below(anchor, face);
        } else {
            self.insert_above(anchor, face);
        }
    }

    fn into_layers(self) -> LayerOrder {
        let mut out = Vec::with_capacity(self.up.len());
        let mut f = self.bottom;
        while f != NIL {
            out.push(f);
            f = self.up[f];
        }
        LayerOrder(out)
    }
}

/// Folds a strip by placing face 0 and inserting each next face directly
/// below or above its predecessor. Every assignment folds.
///
/// # Panics
///
/// If the pattern is cyclic.
pub fn fold_path(pattern: &CreasePattern) -> LayerOrder {
    assert!(!pattern.cyclic, "fold_path needs a linear pattern");
    let mut stack = Stack::new(pattern.face_count(), 0);
    for i in 0..pattern.len() {
        stack.insert(i, i + 1, effective_below(pattern, i));
    }
    stack.into_layers()
}

struct Crimp {
    kept: usize,
    middle: usize,
    far: usize,
    below: bool,
}

/// Folds a single-vertex pattern with equal angles, or returns `None` if it
/// has no flat folded state.
///
/// The lowest-index adjacent pair of opposite creases is crimped away
/// repeatedly, merging three consecutive faces into one. Two creases remain
/// at the end, and they fold only if they agree. The crimps are then undone
/// in reverse, each expanding its merged face into a contiguous run of three.
///
/// # Panics
///
/// If the pattern is linear.
pub fn fold_cycle(pattern: &CreasePattern) -> Option<LayerOrder> {
    assert!(pattern.cyclic, "fold_cycle needs a cyclic pattern");
    let n = pattern.len();
    let c = &pattern.creases;
    let mut next: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut prev: Vec<usize> = (0..n).map(|i| (i + n - 1) % n).collect();
    // The face lying after each live crease.
    let face_after: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut alive = n;
    let mut crimps = Vec::with_capacity(n / 2);

    let mut first = 0;
    let mut x = 0;
    while alive > 2 {
        let y = next[x];
        if c[x] != c[y] {
            let before = prev[x];
            let kept = face_after[before];
            crimps.push(Crimp {
                kept,
                middle: face_after[x],
                far: face_after[y],
                below: pushes_below(c[x], kept),
            });
            let after = next[y];
            next[before] = after;
            prev[after] = before;
            alive -= 2;
            if x == first || y == first {
                first = after;
            }
            // Only the pair starting at `before` is new.
            x = if before < x { before } else { first };
            continue;
        }
        if y == first {
            // Wrapped around without finding a pair: all creases agree.
            return None;
        }
        x = y;
    }

    let (x1, x2) = (first, next[first]);
    if c[x1] != c[x2] {
        return None;
    }
    let lower_face = face_after[x2];
    let upper_face = face_after[x1];
    let mut stack = Stack::new(n, lower_face);
    stack.insert(lower_face, upper_face, pushes_below(c[x1], lower_face));
    for crimp in crimps.iter().rev() {
        stack.insert(crimp.kept, crimp.middle, crimp.below);
        stack.insert(crimp.middle, crimp.far, crimp.below);
    }
    Some(stack.into_layers())
}

/// Folds either kind of pattern.
pub fn fold(pattern: &CreasePattern) -> Option<LayerOrder> {
    if pattern.cyclic {
        fold_cycle(pattern)
    } else {
        Some(fold_path(pattern))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> CreasePattern {
        s.parse().unwrap()
    }

    fn cyc(s: &str) -> CreasePattern {
        CreasePattern::parse(s, true).unwrap()
    }

    #[test]
    fn effective_direction_examples() {
        assert!(effective_below(&p("M"), 0));
        assert!(!effective_below(&p("MM"), 1));
        assert!(!effective_below(&p("VV"), 0));
    }

    #[test]
    fn strip_examples() {
        assert_eq!(fold_path(&p("M")).0, [1, 0]);
        assert_eq!(fold_path(&p("MM")).0, [1, 2, 0]);
        assert_eq!(fold_path(&p("V")).0, [0, 1]);
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(fold_cycle(&cyc("MMMM")), None);
        assert!(fold_cycle(&cyc("MMMV")).is_some());
        assert_eq!(CreasePattern::parse("MM", true), Err(PatternError::ShortCycle(2)));
        assert_eq!(CreasePattern::parse("MMMVV", true), Err(PatternError::OddCycle(5)));
        assert_eq!(CreasePattern::parse("MXV", false), Err(PatternError::BadLetter('X')));
        assert_eq!(CreasePattern::parse("", false), Err(PatternError::Empty));
    }

    #[test]
    fn layer_orders_are_permutations() {
        for s in ["MVVMMM", "MMVMMVMV", "VVMV", "MVMVMMVM"] {
            let layers = fold_cycle(&cyc(s)).unwrap();
            let mut faces = layers.0.clone();
            faces.sort();
            assert_eq!(faces, (0..s.len()).collect::<Vec<_>>(), "{s}");
        }
    }

    #[test]
    fn display_round_trips() {
        assert_eq!(cyc("MVMVVV").to_string(), "MVMVVV");
    }
}
