//! `(3, q)`-torus knots as closures of Lissajous arcs on five strands.
//!
//! The torus knot is the plat closure of `sigma_2 (sigma_4 sigma_3)^q sigma_2^-1`
//! on six strands. A sequence of projection-level rewrites turns its shadow
//! into the braid of the Lissajous arc with frequencies `(f, 5)`.

use std::collections::HashMap;

use serde::Serialize;

use super::{lissajous_projection_word, BraidError, BraidWord, ProjectionWord};
use crate::invariants::braid_equal;

fn check_q(q: i64) -> Result<(), BraidError> {
    if q < 2 || q % 3 == 0 {
        return Err(BraidError::NotCoprimeToThree(q));
    }
    Ok(())
}

/// `sigma_2 (sigma_4 sigma_3)^q sigma_2^-1` on six strands.
pub fn torus_seed(q: i64) -> Result<BraidWord, BraidError> {
    check_q(q)?;
    let mut l = vec![2];
    for _ in 0..q {
        l.extend_from_slice(&[4, 3]);
    }
    l.push(-2);
    BraidWord::new(6, l)
}

/// `sigma_2 sigma_4 sigma_1 sigma_3^-1 sigma_2 sigma_4^-1 (sigma_3 sigma_2)^(q-1)
/// sigma_4 sigma_3 sigma_1 sigma_2`, whose plat closure is the same knot as the
/// seed's with the leftmost strand carried to the right.
pub fn lemma7_rewrite(q: i64) -> Result<BraidWord, BraidError> {
    check_q(q)?;
    let mut l = vec![2, 4, 1, -3, 2, -4];
    for _ in 0..q - 1 {
        l.extend_from_slice(&[3, 2]);
    }
    l.extend_from_slice(&[4, 3, 1, 2]);
    BraidWord::new(6, l)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RewriteRule {
    /// `(s3 s2)^(3n)` or `(s3 s4)^(3n)` becomes `(s1 s3 s2 s4)^(5n)`: the outer
    /// two strands are lifted over the block.
    Lift3n { n: usize },
    /// Trailing `s3 s4 s3 s2` becomes `s1 s3 s2 s4`.
    ClaspSlide,
    /// Trailing `s4 s3 s1 s2` becomes `s1 s3 s2 s4 s1 s3`, with the bottom
    /// closure changed to the modified pairing.
    EndSlide,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteOutcome {
    pub word: ProjectionWord,
    pub closure_modified: bool,
}

const TEMPLATE_UNIT: [u32; 4] = [1, 3, 2, 4];

fn block_pattern(first: u32, second: u32, reps: usize) -> Vec<u32> {
    [first, second].repeat(reps)
}

/// Start of the first `(s3 s2)^(3n)` or `(s3 s4)^(3n)` block.
fn find_lift_block(letters: &[u32], n: usize) -> Option<usize> {
    let pats = [block_pattern(3, 2, 3 * n), block_pattern(3, 4, 3 * n)];
    (0..letters.len()).find(|&i| pats.iter().any(|p| letters[i..].starts_with(p)))
}

/// Applies one of the shadow rewrites.
pub fn shadow_rewrites(p: &ProjectionWord, rule: RewriteRule) -> Result<RewriteOutcome, BraidError> {
    if p.strands() < 5 {
        return Err(BraidError::WrongStrandCount {
            expected: 5,
            got: p.strands(),
        });
    }
    let l = p.letters();
    let (letters, closure_modified) = match rule {
        RewriteRule::Lift3n { n: 0 } => (l.to_vec(), false),
        RewriteRule::Lift3n { n } => {
            let at = find_lift_block(l, n)
                .ok_or_else(|| BraidError::PatternNotFound(format!("(s3 s2)^{0} or (s3 s4)^{0}", 3 * n)))?;
            let mut out = l[..at].to_vec();
            out.extend(TEMPLATE_UNIT.repeat(5 * n));
            out.extend_from_slice(&l[at + 6 * n..]);
            (out, false)
        }
        RewriteRule::ClaspSlide => (replace_suffix(l, &[3, 4, 3, 2], &[1, 3, 2, 4])?, false),
        RewriteRule::EndSlide => (replace_suffix(l, &[4, 3, 1, 2], &[1, 3, 2, 4, 1, 3])?, true),
    };
    Ok(RewriteOutcome {
        word: ProjectionWord::new(p.strands(), letters)?,
        closure_modified,
    })
}

fn replace_suffix(l: &[u32], pat: &[u32], with: &[u32]) -> Result<Vec<u32>, BraidError> {
    if !l.ends_with(pat) {
        let s: Vec<String> = pat.iter().map(|x| format!("s{x}")).collect();
        return Err(BraidError::PatternNotFound(format!("suffix {}", s.join(" "))));
    }
    let mut out = l[..l.len() - pat.len()].to_vec();
    out.extend_from_slice(with);
    Ok(out)
}

/// Strand pairs met by each letter of a word on `n` strands (0-based strand
/// labels by top position).
fn crossing_pairs(letters: &[u32], n: usize) -> Vec<(usize, usize)> {
    let mut at: Vec<usize> = (0..n).collect();
    letters
        .iter()
        .map(|&l| {
            let i = l as usize;
            let (a, b) = (at[i - 1], at[i]);
            at.swap(i - 1, i);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// A signed braid with projection `(s1 s3 s2 s4)^5` equal to the given signed
/// 6-letter block `(sigma_3 sigma_2^+-)^3` or `(sigma_3 sigma_4^+-)^3`.
///
/// Every strand pair crosses twice in the template, so the pairwise linking
/// numbers of the block fix the second sign of each pair; the first signs are
/// searched in lexicographic order (`+` before `-`) and each candidate is
/// checked with the Artin action.
pub fn lift_block_signed(block: &BraidWord) -> Result<BraidWord, BraidError> {
    let proj = block.projection();
    let ok_shape = proj.letters() == block_pattern(3, 2, 3) || proj.letters() == block_pattern(3, 4, 3);
    if !ok_shape || block.strands() < 5 {
        return Err(BraidError::PatternNotFound(format!("lift block, got {block}")));
    }
    let n = block.strands();
    let mut target_lk: HashMap<(usize, usize), i32> = HashMap::new();
    for (pair, &l) in crossing_pairs(proj.letters(), n).into_iter().zip(block.letters()) {
        *target_lk.entry(pair).or_default() += l.signum();
    }
    let template: Vec<u32> = TEMPLATE_UNIT.repeat(5);
    let pairs = crossing_pairs(&template, n);
    let mut first_seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut partner = vec![None; pairs.len()];
    for (i, p) in pairs.iter().enumerate() {
        match first_seen.get(p) {
            Some(&j) => partner[i] = Some(j),
            None => {
                first_seen.insert(*p, i);
            }
        }
    }
    let free: Vec<usize> = (0..pairs.len()).filter(|&i| partner[i].is_none()).collect();
    for mask in 0u32..1 << free.len() {
        let mut signs = vec![0i32; pairs.len()];
        // Highest bit is the first free letter; a set bit means minus.
        for (b, &i) in free.iter().enumerate() {
            signs[i] = if mask >> (free.len() - 1 - b) & 1 == 1 { -1 } else { 1 };
        }
        let mut feasible = true;
        for i in 0..pairs.len() {
            if let Some(j) = partner[i] {
                let want = target_lk.get(&pairs[i]).copied().unwrap_or(0);
                let s = want - signs[j];
                if s.abs() != 1 {
                    feasible = false;
                    break;
                }
                signs[i] = s;
            }
        }
        if !feasible {
            continue;
        }
        let letters: Vec<i32> = template.iter().zip(&signs).map(|(&l, &s)| l as i32 * s).collect();
        let cand = BraidWord::new(n, letters)?;
        if braid_equal(&cand, block) {
            return Ok(cand);
        }
    }
    Err(BraidError::TemplateNotFound(block.to_string()))
}

/// Signed counterpart of [`RewriteRule::Lift3n`]: each 6-letter sub-block of
/// the first `(s3 s2)^(3n)` or `(s3 s4)^(3n)` run is replaced by its signed
/// template. The result is equal to the input as a braid.
pub fn lift_signed(w: &BraidWord, n: usize) -> Result<BraidWord, BraidError> {
    if n == 0 {
        return Ok(w.clone());
    }
    let proj = w.projection();
    let at = find_lift_block(proj.letters(), n)
        .ok_or_else(|| BraidError::PatternNotFound(format!("(s3 s2)^{0} or (s3 s4)^{0}", 3 * n)))?;
    let mut cache: HashMap<Vec<i32>, BraidWord> = HashMap::new();
    let mut out = w.letters()[..at].to_vec();
    for b in 0..n {
        let chunk = w.letters()[at + 6 * b..at + 6 * b + 6].to_vec();
        if !cache.contains_key(&chunk) {
            let t = lift_block_signed(&BraidWord::new(w.strands(), chunk.clone())?)?;
            cache.insert(chunk.clone(), t);
        }
        out.extend_from_slice(cache[&chunk].letters());
    }
    out.extend_from_slice(&w.letters()[at + 6 * n..]);
    BraidWord::new(w.strands(), out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TorusCase {
    /// `q = 3n + 1`.
    I,
    /// `q = 3n + 2`.
    II,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TorusConstruction {
    pub q: i64,
    pub case: TorusCase,
    pub n: usize,
    /// `(f, 5)`.
    pub frequencies: (u32, u32),
    pub seed: BraidWord,
    /// The signed braid the rewrites start from.
    pub start: BraidWord,
    /// `start` after the signed lift; equal to `start` as a braid.
    pub lifted: BraidWord,
    /// Projection after each step, starting with `start`'s.
    pub stages: Vec<(String, ProjectionWord)>,
    /// Final shadow on five strands.
    pub word: ProjectionWord,
    pub closure_modified: bool,
}

/// Carries the seed's shadow to the Lissajous arc braid with frequencies
/// `(10n + 7, 5)` for `q = 3n + 1` or `(10n + 4, 5)` for `q = 3n + 2`.
pub fn torus_pipeline(q: i64) -> Result<TorusConstruction, BraidError> {
    let seed = torus_seed(q)?;
    let n = (q / 3) as usize;
    let (case, start, last_rule, f) = if q % 3 == 1 {
        (TorusCase::I, lemma7_rewrite(q)?, RewriteRule::EndSlide, 10 * n as u32 + 7)
    } else {
        (TorusCase::II, seed.clone(), RewriteRule::ClaspSlide, 10 * n as u32 + 4)
    };
    let p0 = start.projection();
    let lift = shadow_rewrites(&p0, RewriteRule::Lift3n { n })?;
    let last = shadow_rewrites(&lift.word, last_rule)?;
    let word = ProjectionWord::new(5, last.word.letters().to_vec())?;
    let expected = lissajous_projection_word(f, 5)?;
    if word != expected {
        return Err(BraidError::Verification(format!("final shadow {word} is not the ({f}, 5) arc braid {expected}")));
    }
    let lifted = lift_signed(&start, n)?;
    if lifted.projection() != lift.word {
        return Err(BraidError::Verification("signed lift disagrees with the shadow rewrite".into()));
    }
    Ok(TorusConstruction {
        q,
        case,
        n,
        frequencies: (f, 5),
        seed,
        start,
        lifted,
        stages: vec![
            ("start".into(), p0),
            ("lift".into(), lift.word),
            (
                match last_rule {
                    RewriteRule::EndSlide => "end slide",
                    _ => "clasp slide",
                }
                .into(),
                last.word,
            ),
        ],
        word,
        closure_modified: last.closure_modified,
    })
}
