#![allow(dead_code)]

use lissaknot::braids::BraidWord;
use lissaknot::invariants::LaurentPoly;
use proptest::prelude::*;

pub type Matrix = Vec<Vec<LaurentPoly>>;

/// Unreduced Burau matrix of a braid word.
pub fn burau(w: &BraidWord) -> Matrix {
    let n = w.strands();
    let mut m: Matrix = (0..n)
        .map(|r| (0..n).map(|c| if r == c { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
        .collect();
    let one = LaurentPoly::one();
    let t = LaurentPoly::t();
    let tinv = LaurentPoly::monomial(1, -1);
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let block = if l > 0 {
            [[&one - &t, t.clone()], [one.clone(), LaurentPoly::zero()]]
        } else {
            [[LaurentPoly::zero(), one.clone()], [tinv.clone(), &one - &tinv]]
        };
        let mut next = m.clone();
        for row in next.iter_mut().zip(&m) {
            let (out, old) = row;
            for c in 0..2 {
                out[i + c] = &(&old[i] * &block[0][c]) + &(&old[i + 1] * &block[1][c]);
            }
        }
        m = next;
    }
    m
}

/// Random braid word on `strands` strands with up to `max_len` letters.
pub fn braid_word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let g = strands as i32 - 1;
    prop::collection::vec((1..=g, any::<bool>()), 0..=max_len).prop_map(move |v| {
        BraidWord::new(strands, v.into_iter().map(|(i, s)| if s { i } else { -i }).collect()).unwrap()
    })
}
