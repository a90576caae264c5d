//! Alexander matrix of a diagram and its determinant.
//!
//! Row convention, for a crossing with over arc `o`, incoming under arc `i`
//! and outgoing under arc `j` (Fox derivatives of the Wirtinger relations):
//!
//! * positive: `t x_i - x_j + (1 - t) x_o`
//! * negative: `x_i - t x_j + (t - 1) x_o`

use std::collections::BTreeMap;

use super::{CanonicalAlexander, InvariantError, LaurentPoly};
use crate::diagram::Diagram;

type SparseRow = BTreeMap<usize, LaurentPoly>;

fn add_entry(row: &mut SparseRow, col: usize, v: LaurentPoly) {
    let e = row.entry(col).or_default();
    *e = &*e + &v;
    if e.is_zero() {
        row.remove(&col);
    }
}

/// The `C x C` Alexander matrix, rows indexed by crossing label and columns by
/// arc.
pub fn alexander_matrix(d: &Diagram) -> Vec<SparseRow> {
    let c = d.crossing_count();
    let arcs = d.arcs();
    let t = LaurentPoly::t();
    let one = LaurentPoly::one();
    let mut rows = vec![SparseRow::new(); c];
    let mut signs = vec![0i8; c];
    for g in d.gauss() {
        signs[g.id - 1] = g.sign;
    }
    for (x, (o, u)) in d.visit_positions().into_iter().enumerate() {
        let (i, j, o) = (arcs[u], (arcs[u] + 1) % c, arcs[o]);
        let row = &mut rows[x];
        if signs[x] > 0 {
            add_entry(row, i, t.clone());
            add_entry(row, j, -&one);
            add_entry(row, o, &one - &t);
        } else {
            add_entry(row, i, one.clone());
            add_entry(row, j, -&t);
            add_entry(row, o, &t - &one);
        }
    }
    rows
}

/// Determinant of a square sparse matrix, up to a unit `+-t^k`.
///
/// Unit pivots are eliminated first (cheapest by Markowitz count), which
/// keeps coefficients small; whatever remains goes through fraction-free
/// Bareiss elimination.
pub fn determinant(mut rows: Vec<SparseRow>, n: usize) -> LaurentPoly {
    let mut live_rows: Vec<usize> = (0..rows.len()).collect();
    let mut live_cols: Vec<usize> = (0..n).collect();
    loop {
        if live_rows.is_empty() {
            return LaurentPoly::one();
        }
        let mut col_count = vec![0usize; n];
        for &r in &live_rows {
            for &c in rows[r].keys() {
                col_count[c] += 1;
            }
        }
        if live_cols.iter().any(|&c| col_count[c] == 0) {
            return LaurentPoly::zero();
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for &r in &live_rows {
            let rc = rows[r].len();
            for (&c, v) in &rows[r] {
                if v.is_unit() {
                    let cost = (rc - 1) * (col_count[c] - 1);
                    if best.is_none_or(|b| cost < b.0) {
                        best = Some((cost, r, c));
                    }
                }
            }
        }
        let Some((_, pr, pc)) = best else {
            break;
        };
        let pivot_row = std::mem::take(&mut rows[pr]);
        let inv = pivot_row[&pc].unit_inverse().expect("unit pivot");
        live_rows.retain(|&r| r != pr);
        live_cols.retain(|&c| c != pc);
        for &r in &live_rows {
            let Some(a) = rows[r].remove(&pc) else {
                continue;
            };
            let f = &a * &inv;
            for (&c, v) in &pivot_row {
                if c != pc {
                    add_entry(&mut rows[r], c, -&(&f * v));
                }
            }
        }
    }
    let dense: Vec<Vec<LaurentPoly>> = live_rows
        .iter()
        .map(|&r| live_cols.iter().map(|c| rows[r].get(c).cloned().unwrap_or_default()).collect())
        .collect();
    bareiss(dense)
}

fn bareiss(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        let Some(p) = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| m[i][k].term_count())
        else {
            return LaurentPoly::zero();
        };
        m.swap(k, p);
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].clone()
}

/// Canonical Alexander polynomial of a knot diagram.
pub fn alexander(d: &Diagram) -> Result<CanonicalAlexander, InvariantError> {
    let c = d.crossing_count();
    if c <= 1 {
        return Ok(CanonicalAlexander::one());
    }
    let mut rows = alexander_matrix(d);
    rows.pop();
    for r in &mut rows {
        r.remove(&(c - 1));
    }
    let det = determinant(rows, c - 1);
    CanonicalAlexander::from_poly(&det)?.ok_or(InvariantError::NotAKnot)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c)
    }

    fn dense_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
        // Cofactor expansion, as an independent reference.
        if m.is_empty() {
            return LaurentPoly::one();
        }
        let mut acc = LaurentPoly::zero();
        for (j, a) in m[0].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let minor: Vec<Vec<LaurentPoly>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = a * &dense_det(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    fn canon(p: &LaurentPoly) -> Option<CanonicalAlexander> {
        CanonicalAlexander::from_poly(p).unwrap()
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = vec![
            vec![lp(&[2, 1]), lp(&[0, 3]), lp(&[1])],
            vec![lp(&[1, -1, 1]), lp(&[0]), lp(&[5, 0, 2])],
            vec![lp(&[4]), lp(&[1, 1]), lp(&[-3, 7])],
        ];
        let rows: Vec<SparseRow> = m
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (c, v.clone())).collect())
            .collect();
        assert_eq!(canon(&determinant(rows, 3)), canon(&dense_det(&m)));
        assert_eq!(canon(&bareiss(m.clone())), canon(&dense_det(&m)));
    }

    #[test]
    fn trefoil_by_hand() {
        // O1 U2 O3 U1 O2 U3, all positive. With arcs numbered from the first
        // under visit the rows are t x0 - x1 + (1-t) x2, -x0 + (1-t) x1 + t x2,
        // (1-t) x0 + t x1 - x2; dropping the last row and column leaves
        // [[t, -1], [-1, 1-t]] with determinant -(1 - t + t^2).
        let d = Diagram::from_visits([(1, true, 1), (2, false, 1), (3, true, 1), (1, false, 1), (2, true, 1), (3, false, 1)])
            .unwrap();
        assert_eq!(alexander(&d).unwrap().coeffs(), &[1, -1, 1]);
        assert_eq!(alexander(&d.mirror()).unwrap().coeffs(), &[1, -1, 1]);
    }

    #[test]
    fn figure_eight() {
        // From the planar code X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]
        // walked edge by edge.
        let d = Diagram::from_visits([
            (2, false, 1),
            (1, true, 1),
            (4, false, -1),
            (3, true, -1),
            (1, false, 1),
            (2, true, 1),
            (3, false, -1),
            (4, true, -1),
        ])
        .unwrap();
        assert_eq!(alexander(&d).unwrap().coeffs(), &[1, -3, 1]);
    }

    #[test]
    fn small_diagrams_are_unknots() {
        assert!(alexander(&Diagram::unknot()).unwrap().is_one());
        let kink = Diagram::from_visits([(1, true, 1), (1, false, 1)]).unwrap();
        assert!(alexander(&kink).unwrap().is_one());
    }
}
