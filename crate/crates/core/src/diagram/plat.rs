//! Plat closures of braids on an even number of strands.

use serde::Serialize;

use super::{Diagram, DiagramError};
use crate::braids::BraidWord;

/// How strand ends are capped off at the top or bottom of a plat.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Pairing {
    /// `(1 2)(3 4)...`.
    Standard,
    /// The six-strand closure `(1 6)(2 3)(4 5)` in which the last strand
    /// is carried back over the others to the first position.
    Modified,
}

impl Pairing {
    /// 0-based partner of each position.
    pub fn partners(self, strands: usize) -> Result<Vec<usize>, DiagramError> {
        if strands == 0 || strands % 2 != 0 {
            return Err(DiagramError::InvalidPairing(format!("{strands} strands cannot be paired")));
        }
        match self {
            Pairing::Standard => Ok((0..strands).map(|p| p ^ 1).collect()),
            Pairing::Modified if strands == 6 => Ok(vec![5, 2, 1, 4, 3, 0]),
            Pairing::Modified => Err(DiagramError::InvalidPairing(format!(
                "the modified closure is defined on 6 strands, not {strands}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlatSpec {
    pub word: BraidWord,
    pub top: Pairing,
    pub bottom: Pairing,
}

impl PlatSpec {
    pub fn standard(word: BraidWord) -> Self {
        PlatSpec {
            word,
            top: Pairing::Standard,
            bottom: Pairing::Standard,
        }
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Number of link components of the plat closure, from the strand
/// permutation and the two cap pairings.
pub fn plat_components(spec: &PlatSpec) -> Result<usize, DiagramError> {
    let n = spec.word.strands();
    let top = spec.top.partners(n)?;
    let bottom = spec.bottom.partners(n)?;
    let perm = spec.word.permutation();
    // Nodes 0..n are top ends, n..2n bottom ends.
    let mut parent: Vec<usize> = (0..2 * n).collect();
    let union = |a: usize, b: usize, parent: &mut Vec<usize>| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        parent[ra] = rb;
    };
    for p in 0..n {
        union(p, n + perm[p], &mut parent);
        union(p, top[p], &mut parent);
        union(n + p, n + bottom[p], &mut parent);
    }
    let mut roots: Vec<usize> = (0..2 * n).map(|x| find(&mut parent, x)).collect();
    roots.sort_unstable();
    roots.dedup();
    Ok(roots.len())
}

struct PlatVisit {
    level: usize,
    over: bool,
    dir: (i32, i32),
}

/// Diagram of the plat closure, traversed from the top of the first strand
/// going down. Crossing `sigma_i` has the strand arriving from position
/// `i+1` over; directions are read with the braid drawn top to bottom.
pub fn diagram_from_plat(spec: &PlatSpec) -> Result<Diagram, DiagramError> {
    let comps = plat_components(spec)?;
    if comps != 1 {
        return Err(DiagramError::NotAKnot(comps));
    }
    let n = spec.word.strands();
    let top = spec.top.partners(n)?;
    let bottom = spec.bottom.partners(n)?;
    let letters = spec.word.letters();
    let len = letters.len();
    let mut visits: Vec<PlatVisit> = Vec::with_capacity(2 * len);
    let (mut pos, mut level, mut down) = (0usize, 0usize, true);
    loop {
        if down {
            if level == len {
                pos = bottom[pos];
                down = false;
            } else {
                let l = letters[level];
                let i = l.unsigned_abs() as usize;
                if pos == i - 1 || pos == i {
                    let next = if pos == i { i - 1 } else { i };
                    visits.push(PlatVisit {
                        level,
                        over: (pos == i) == (l > 0),
                        dir: (next as i32 - pos as i32, -1),
                    });
                    pos = next;
                }
                level += 1;
            }
        } else if level == 0 {
            pos = top[pos];
            down = true;
            if pos == 0 {
                break;
            }
        } else {
            let l = letters[level - 1];
            let i = l.unsigned_abs() as usize;
            if pos == i - 1 || pos == i {
                let above = if pos == i { i - 1 } else { i };
                visits.push(PlatVisit {
                    level: level - 1,
                    over: (above == i) == (l > 0),
                    dir: (above as i32 - pos as i32, 1),
                });
                pos = above;
            }
            level -= 1;
        }
    }
    if visits.is_empty() {
        return Ok(Diagram::unknot());
    }
    let mut over_dir = vec![(0, 0); len];
    let mut under_dir = vec![(0, 0); len];
    for v in &visits {
        if v.over {
            over_dir[v.level] = v.dir;
        } else {
            under_dir[v.level] = v.dir;
        }
    }
    let sign: Vec<i8> = (0..len)
        .map(|k| {
            let (o, u) = (over_dir[k], under_dir[k]);
            if o.0 * u.1 - o.1 * u.0 > 0 {
                1
            } else {
                -1
            }
        })
        .collect();
    Diagram::from_visits(visits.iter().map(|v| (v.level, v.over, sign[v.level])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::alexander;

    fn plat(n: usize, l: &[i32]) -> PlatSpec {
        PlatSpec::standard(BraidWord::new(n, l.to_vec()).unwrap())
    }

    #[test]
    fn component_counts() {
        assert_eq!(plat_components(&plat(2, &[])).unwrap(), 1);
        assert_eq!(plat_components(&plat(4, &[])).unwrap(), 2);
        assert_eq!(plat_components(&plat(4, &[2, 1, 2, 1, 2])).unwrap(), 2);
        assert_eq!(plat_components(&plat(4, &[2, -1, 2, 1, -2])).unwrap(), 2);
        assert_eq!(plat_components(&plat(6, &[2, 4, 3, 4, 3, 4, 3, 4, 3, 4, 3, -2])).unwrap(), 1);
    }

    #[test]
    fn trefoil_and_unknot() {
        let d = diagram_from_plat(&plat(4, &[2, 2, 2])).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(alexander(&d).unwrap().coeffs(), &[1, -1, 1]);
        let d = diagram_from_plat(&plat(2, &[])).unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert!(alexander(&d).unwrap().is_one());
        assert!(matches!(diagram_from_plat(&plat(4, &[1])), Err(DiagramError::NotAKnot(2))));
    }

    #[test]
    fn pairings() {
        assert_eq!(Pairing::Standard.partners(4).unwrap(), vec![1, 0, 3, 2]);
        assert!(Pairing::Modified.partners(4).is_err());
        assert!(Pairing::Standard.partners(3).is_err());
    }
}
