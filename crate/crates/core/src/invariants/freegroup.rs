//! Artin action of the braid group on a free group.
//!
//! `sigma_i` sends `x_i -> x_i x_{i+1} x_i^-1` and `x_{i+1} -> x_i`, fixing the
//! other generators. The action is faithful, so two braids are equal exactly
//! when they induce the same automorphism.

use crate::braids::BraidWord;

/// Freely reduced word; `g > 0` is generator `x_g`, `-g` its inverse.
pub type FreeWord = Vec<i32>;

fn push_reduced(w: &mut FreeWord, x: i32) {
    if w.last() == Some(&-x) {
        w.pop();
    } else {
        w.push(x);
    }
}

fn concat(parts: &[&[i32]]) -> FreeWord {
    let mut out = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
    for p in parts {
        for &x in p.iter() {
            push_reduced(&mut out, x);
        }
    }
    out
}

fn inverse(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|&x| -x).collect()
}

/// Images of `x_1, ..., x_n` under the automorphism induced by `w`.
pub fn artin_images(w: &BraidWord) -> Vec<FreeWord> {
    let mut img: Vec<FreeWord> = (1..=w.strands() as i32).map(|g| vec![g]).collect();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (a, b) = (img[i].clone(), img[i + 1].clone());
        if l > 0 {
            img[i] = concat(&[&a, &b, &inverse(&a)]);
            img[i + 1] = a;
        } else {
            img[i + 1] = concat(&[&inverse(&b), &a, &b]);
            img[i] = b;
        }
    }
    img
}

/// Equality in the braid group.
pub fn braid_equal(w1: &BraidWord, w2: &BraidWord) -> bool {
    w1.strands() == w2.strands() && artin_images(w1) == artin_images(w2)
}
