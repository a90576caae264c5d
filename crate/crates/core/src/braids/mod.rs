//! Braid words, their projections, and the rewriting moves used to bring
//! knots into Lissajous form.
//!
//! `sigma_i` (letter `i`) means strand `i+1` passes over strand `i` going down
//! the braid; letter `-i` is the inverse. A projection word forgets signs.

mod torus;
mod two_bridge;

pub use torus::{
    lemma7_rewrite, lift_block_signed, lift_signed, shadow_rewrites, torus_pipeline, torus_seed, RewriteRule,
    RewriteOutcome, TorusConstruction,
};
pub use two_bridge::{arc_closure_diagram, arc_crossing_signs, two_bridge_pipeline, TwoBridgeConstruction};

use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::diagram::DiagramError;
use crate::invariants::InvariantError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("letter {letter} is out of range for {strands} strands")]
    IndexOutOfRange { letter: i32, strands: usize },
    #[error("letters at {0} and {1} do not share an index")]
    NotADoubleLetter(usize, usize),
    #[error("frequencies ({0}, {1}) are not coprime")]
    NotCoprime(u32, u32),
    #[error("bad frequency: {0}")]
    BadFrequency(String),
    #[error("q = {0} must be coprime to 3 and at least 2")]
    NotCoprimeToThree(i64),
    #[error("pattern not found: {0}")]
    PatternNotFound(String),
    #[error("projection s2(s1 s2)^{0} with k = 2 mod 3 closes to a link")]
    LinkNotKnot(usize),
    #[error("plat closure has {0} components, not a knot")]
    NotAKnot(usize),
    #[error("expected a braid on {expected} strands, got {got}")]
    WrongStrandCount { expected: usize, got: usize },
    #[error("no signed template found for block {0}")]
    TemplateNotFound(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if let Some(&letter) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(BraidError::IndexOutOfRange { letter, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn projection(&self) -> ProjectionWord {
        ProjectionWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| l.unsigned_abs()).collect(),
        }
    }

    /// Every crossing switched.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// The same letters on more strands.
    pub fn widen(&self, strands: usize) -> BraidWord {
        assert!(strands >= self.strands);
        BraidWord {
            strands,
            letters: self.letters.clone(),
        }
    }

    /// `perm[p]` is the bottom position of the strand starting at top position
    /// `p` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &s) in at.iter().enumerate() {
            perm[s] = pos;
        }
        perm
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("s{l}") } else { format!("s{}^-1", -l) })
            .collect();
        write!(f, "{}", s.join(" "))
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectionWord {
    strands: usize,
    letters: Vec<u32>,
}

impl ProjectionWord {
    pub fn new(strands: usize, letters: Vec<u32>) -> Result<Self, BraidError> {
        if let Some(&l) = letters.iter().find(|&&l| l == 0 || l as usize >= strands) {
            return Err(BraidError::IndexOutOfRange {
                letter: l as i32,
                strands,
            });
        }
        Ok(ProjectionWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// No two consecutive letters share an index.
    pub fn alternates(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1])
    }

    /// The braid with these letters, all exponents `+1`.
    pub fn positive_lift(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&l| l as i32).collect(),
        }
    }
}

impl fmt::Display for ProjectionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|l| format!("s{l}")).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl Serialize for ProjectionWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

/// Shadow of the braid read off a Lissajous arc with frequencies `(nx, ny)`
/// on `ny` strands, built from `s_even = s2 s4 ...` and `s_odd = s1 s3 ...`:
///
/// * `nx` even, `ny` odd: `s_even (s_odd s_even)^(nx/2 - 1)`
/// * `nx` odd, `ny` even: `(s_odd s_even)^((nx-1)/2)`
/// * both odd: `(s_even s_odd)^((nx-1)/2)`
pub fn lissajous_projection_word(nx: u32, ny: u32) -> Result<ProjectionWord, BraidError> {
    if nx == 0 || ny < 2 {
        return Err(BraidError::BadFrequency(format!("need nx >= 1, ny >= 2; got ({nx}, {ny})")));
    }
    if nx.gcd(&ny) != 1 {
        return Err(BraidError::NotCoprime(nx, ny));
    }
    let even: Vec<u32> = (2..ny).step_by(2).collect();
    let odd: Vec<u32> = (1..ny).step_by(2).collect();
    let mut letters = Vec::new();
    let push_pairs = |first: &[u32], second: &[u32], count: u32, out: &mut Vec<u32>| {
        for _ in 0..count {
            out.extend_from_slice(first);
            out.extend_from_slice(second);
        }
    };
    match (nx % 2, ny % 2) {
        (0, _) => {
            letters.extend_from_slice(&even);
            push_pairs(&odd, &even, nx / 2 - 1, &mut letters);
        }
        (_, 0) => push_pairs(&odd, &even, (nx - 1) / 2, &mut letters),
        _ => push_pairs(&even, &odd, (nx - 1) / 2, &mut letters),
    }
    ProjectionWord::new(ny as usize, letters)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    /// Uses `sigma_{i-1}`; projection `(s_{i-1} s_i)^3`.
    Left,
    /// Uses `sigma_{i+1}`; projection `(s_{i+1} s_i)^3`.
    Right,
}

/// Replaces `sigma_i^e1 sigma_i^e2` at `pos, pos+1` by an equal braid whose
/// projection alternates with a neighbouring index:
///
/// * Left: `sigma_{i-1}^-1 sigma_i^-1 sigma_{i-1}^e1 sigma_i sigma_{i-1} sigma_i^e2`
/// * Right: `sigma_{i+1}^-1 sigma_i^-1 sigma_{i+1}^e1 sigma_i sigma_{i+1} sigma_i^e2`
pub fn first_replacement(w: &BraidWord, pos: usize, side: Side) -> Result<BraidWord, BraidError> {
    let l = w.letters();
    if pos + 1 >= l.len() || l[pos].abs() != l[pos + 1].abs() {
        return Err(BraidError::NotADoubleLetter(pos, pos + 1));
    }
    let i = l[pos].abs();
    let (e1, e2) = (l[pos].signum(), l[pos + 1].signum());
    let a = match side {
        Side::Left => i - 1,
        Side::Right => i + 1,
    };
    if a < 1 || a as usize >= w.strands() {
        return Err(BraidError::IndexOutOfRange {
            letter: a,
            strands: w.strands(),
        });
    }
    let mut letters = l[..pos].to_vec();
    letters.extend_from_slice(&[-a, -i, e1 * a, i, a, e2 * i]);
    letters.extend_from_slice(&l[pos + 2..]);
    BraidWord::new(w.strands(), letters)
}

/// An equal 3-strand braid whose projection alternates between `s1` and `s2`.
///
/// Letters are prepended one at a time from the end of the word; a collision
/// with the current first letter is resolved by [`first_replacement`], on the
/// side that leaves the word alternating.
pub fn alternate_3braid(w: &BraidWord) -> Result<BraidWord, BraidError> {
    if w.strands() != 3 {
        return Err(BraidError::WrongStrandCount {
            expected: 3,
            got: w.strands(),
        });
    }
    let mut acc: Vec<i32> = Vec::new();
    for &l in w.letters().iter().rev() {
        if acc.first().map(|f| f.abs()) == Some(l.abs()) {
            let mut pair = vec![l];
            pair.extend_from_slice(&acc);
            let side = if l.abs() == 2 { Side::Left } else { Side::Right };
            acc = first_replacement(&BraidWord::new(3, pair)?, 0, side)?.letters;
        } else {
            acc.insert(0, l);
        }
    }
    BraidWord::new(3, acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::braid_equal;

    fn bw(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn projection_words() {
        assert_eq!(lissajous_projection_word(4, 3).unwrap().letters(), &[2, 1, 2]);
        assert_eq!(lissajous_projection_word(3, 4).unwrap().letters(), &[1, 3, 2]);
        let w = lissajous_projection_word(17, 5).unwrap();
        assert_eq!(w.len(), 32);
        assert_eq!(&w.letters()[..4], &[2, 4, 1, 3]);
        assert!(matches!(lissajous_projection_word(4, 6), Err(BraidError::NotCoprime(4, 6))));
    }

    #[test]
    fn replacement_examples() {
        let r = first_replacement(&bw(3, &[2, 2]), 0, Side::Left).unwrap();
        assert_eq!(r.letters(), &[-1, -2, 1, 2, 1, 2]);
        assert!(braid_equal(&r, &bw(3, &[2, 2])));
        let r = first_replacement(&bw(3, &[2, -2]), 0, Side::Left).unwrap();
        assert_eq!(r.len(), 6);
        assert!(braid_equal(&r, &bw(3, &[])));
        assert!(first_replacement(&bw(3, &[1, 2]), 0, Side::Left).is_err());
        assert!(first_replacement(&bw(3, &[1, 1]), 0, Side::Left).is_err());
        assert!(first_replacement(&bw(3, &[2, 2]), 0, Side::Right).is_err());
    }

    #[test]
    fn alternation_examples() {
        assert_eq!(alternate_3braid(&bw(3, &[1])).unwrap().letters(), &[1]);
        let w = bw(3, &[2, 2, 2]);
        let a = alternate_3braid(&w).unwrap();
        assert!(a.projection().alternates());
        assert!(braid_equal(&a, &w));
        assert_eq!(a.projection().letters(), &[2, 1, 2, 1, 2, 1, 2]);
    }

    #[test]
    fn permutation_of_words() {
        assert_eq!(bw(3, &[1, 2]).permutation(), vec![2, 0, 1]);
        assert_eq!(bw(4, &[]).permutation(), vec![0, 1, 2, 3]);
    }
}
