//! Inversion sets, short inversions, descent roots, dominance and elementary roots.
//!
//! These functions work directly with [`Root`] values and are the reference
//! implementations; the interned engine in [`crate::catalog`] is checked
//! against them.

use std::collections::{HashSet, VecDeque};

use crate::error::{CoxeterError, Result};
use crate::lp;
use crate::system::{CoxeterSystem, Element, GenSet, Root};

/// Inversion data of one element, in root-sequence order of its normal word.
#[derive(Debug, Clone)]
pub struct InversionData {
    pub owner: Element,
    pub roots: Vec<Root>,
    pub short: Vec<bool>,
    pub right_descent: Vec<bool>,
    pub left_descent: Vec<bool>,
}

impl InversionData {
    pub fn short_roots(&self) -> Vec<Root> {
        pick(&self.roots, &self.short)
    }
    pub fn right_descent_roots(&self) -> Vec<Root> {
        pick(&self.roots, &self.right_descent)
    }
    pub fn left_descent_roots(&self) -> Vec<Root> {
        pick(&self.roots, &self.left_descent)
    }
}

fn pick(roots: &[Root], flags: &[bool]) -> Vec<Root> {
    roots.iter().zip(flags).filter(|(_, &f)| f).map(|(r, _)| r.clone()).collect()
}

pub fn inversion_data(sys: &CoxeterSystem, w: &Element) -> InversionData {
    let roots = inversion_set(sys, w);
    let short_set: HashSet<Root> = short_inversions_direct(sys, w).into_iter().collect();
    let right: HashSet<Root> = right_descent_roots(sys, w).into_iter().collect();
    let short = roots.iter().map(|r| short_set.contains(r)).collect();
    let right_descent = roots.iter().map(|r| right.contains(r)).collect();
    let left_descent = roots.iter().map(|r| r.as_simple().is_some()).collect();
    InversionData { owner: w.clone(), roots, short, right_descent, left_descent }
}

/// `Phi(w)`, ordered by the root sequence of the normal word.
pub fn inversion_set(sys: &CoxeterSystem, w: &Element) -> Vec<Root> {
    sys.root_sequence(w.word())
}

/// `beta in Phi(w)` iff `w^{-1} beta < 0`.
pub fn is_inversion(sys: &CoxeterSystem, w: &Element, beta: &Root) -> bool {
    let rev: Vec<u8> = w.word().iter().rev().copied().collect();
    beta.is_positive() && sys.act_word(&rev, beta).is_negative()
}

/// `Phi^1(w)` by the deletion test: the root of letter `i` is short exactly
/// when deleting that letter leaves a reduced word.
pub fn short_inversions_direct(sys: &CoxeterSystem, w: &Element) -> Vec<Root> {
    let seq = inversion_set(sys, w);
    seq.iter()
        .enumerate()
        .filter(|(i, b)| seq[i + 1..].iter().all(|g| sys.reflect_by(b, g).is_positive()))
        .map(|(_, b)| b.clone())
        .collect()
}

/// `Phi^1(w)` by evolution along left extension:
/// `Phi^1(s v) = {alpha_s} + s{beta in Phi^1(v) : alpha_s not in Phi(s_beta v)}`.
pub fn short_inversions_evolution(sys: &CoxeterSystem, w: &Element) -> Vec<Root> {
    let word = w.word();
    let mut short: Vec<Root> = Vec::new();
    for k in (0..word.len()).rev() {
        let s = word[k] as usize;
        let v = &word[k + 1..];
        let v_inv: Vec<u8> = v.iter().rev().copied().collect();
        let alpha = sys.simple_root(s);
        let mut next = vec![alpha.clone()];
        for beta in &short {
            // alpha_s in Phi(s_beta v) iff (s_beta v)^{-1} alpha_s = v^{-1} s_beta alpha_s < 0
            let image = sys.act_word(&v_inv, &sys.reflect_by(beta, alpha));
            if image.is_positive() {
                next.push(sys.reflect(s, beta));
            }
        }
        short = next;
    }
    short
}

/// `Phi^R(w) = {-w alpha_s : s in D_R(w)}`.
pub fn right_descent_roots(sys: &CoxeterSystem, w: &Element) -> Vec<Root> {
    let cols = sys.columns(w.word());
    cols.iter().filter(|c| c.is_negative()).map(|c| c.neg()).collect()
}

/// `Phi^L(w)`: the simple roots in `Phi(w)`.
pub fn left_descent_roots(sys: &CoxeterSystem, w: &Element) -> Vec<Root> {
    w.descents_left().iter().map(|s| sys.simple_root(s).clone()).collect()
}

pub fn support(beta: &Root) -> GenSet {
    beta.support()
}

/// Smallest length of an element sending `beta` negative.
pub fn depth(sys: &CoxeterSystem, beta: &Root) -> Result<usize> {
    if !beta.is_positive() {
        return Err(CoxeterError::NotPositive);
    }
    let mut cur = beta.clone();
    let mut d = 1;
    while cur.as_simple().is_none() {
        let s = (0..sys.rank())
            .find(|&s| sys.form_simple(&cur, s).is_positive())
            .ok_or_else(|| CoxeterError::Invariant("positive non-simple root with no descent".into()))?;
        cur = sys.reflect(s, &cur);
        d += 1;
    }
    Ok(d)
}

/// Canonical simple roots of the infinite dihedral reflection subgroup
/// generated by `s_alpha` and `s_beta`, where `<alpha, beta> >= 1`.
pub fn canonical_dihedral_roots(sys: &CoxeterSystem, alpha: &Root, beta: &Root) -> Result<(Root, Root)> {
    let mut x = alpha.clone();
    let mut y = beta.clone();
    let mut dx = depth(sys, &x)?;
    let mut dy = depth(sys, &y)?;
    let minus_one = sys.scalar(-1);
    let one = sys.scalar(1);
    loop {
        let c = sys.form(&x, &y);
        if c.cmp_value(&minus_one).is_le() {
            return Ok(if dx <= dy { (x, y) } else { (y, x) });
        }
        if c.cmp_value(&one).is_lt() {
            return Err(CoxeterError::Invariant("pair generates a finite dihedral subgroup".into()));
        }
        let abs = |r: Root| if r.is_negative() { r.neg() } else { r };
        let y2 = abs(sys.reflect_by(&x, &y));
        let x2 = abs(sys.reflect_by(&y, &x));
        let dy2 = depth(sys, &y2)?;
        let dx2 = depth(sys, &x2)?;
        if dx + dy2 <= dx2 + dy && dx + dy2 < dx + dy {
            y = y2;
            dy = dy2;
        } else if dx2 + dy < dx + dy {
            x = x2;
            dx = dx2;
        } else {
            return Err(CoxeterError::Invariant("dihedral descent did not shorten".into()));
        }
    }
}

/// True iff `beta` dominates `alpha` and `beta != alpha`.
///
/// Dominance only occurs when `<alpha, beta> >= 1`; then both lie in an
/// infinite dihedral root subsystem, and `beta` dominates `alpha` exactly
/// when they sit on the same chain of that subsystem with `beta` further out.
pub fn dominates(sys: &CoxeterSystem, beta: &Root, alpha: &Root) -> Result<bool> {
    if !beta.is_positive() || !alpha.is_positive() {
        return Err(CoxeterError::NotPositive);
    }
    if alpha == beta {
        return Ok(false);
    }
    if sys.form(alpha, beta).cmp_value(&sys.scalar(1)).is_lt() {
        return Ok(false);
    }
    let (g1, g2) = canonical_dihedral_roots(sys, alpha, beta)?;
    let bound = depth(sys, alpha)?.max(depth(sys, beta)?) + 1;
    let mut a = g1.clone();
    let mut b = g2.clone();
    let mut pos_alpha = None;
    let mut pos_beta = None;
    for k in 0..=bound {
        for (chain, r) in [(0u8, &a), (1u8, &b)] {
            if r == alpha {
                pos_alpha = Some((chain, k));
            }
            if r == beta {
                pos_beta = Some((chain, k));
            }
        }
        if pos_alpha.is_some() && pos_beta.is_some() {
            break;
        }
        let a_next = sys.reflect_by(&g1, &b);
        let b_next = sys.reflect_by(&g2, &a);
        a = a_next;
        b = b_next;
    }
    match (pos_alpha, pos_beta) {
        (Some((ca, ka)), Some((cb, kb))) => Ok(ca == cb && kb > ka),
        _ => Err(CoxeterError::Invariant("root missing from its dihedral subsystem".into())),
    }
}

/// Elementary roots: the closure of the simple roots under `beta -> s beta`
/// for `beta != alpha_s` and `-1 < <alpha_s, beta> < 1`, in discovery order.
pub fn elementary_roots(sys: &CoxeterSystem) -> Vec<Root> {
    let one = sys.scalar(1);
    let minus_one = sys.scalar(-1);
    let mut seen: HashSet<Root> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..sys.rank() {
        let r = sys.simple_root(s).clone();
        seen.insert(r.clone());
        out.push(r.clone());
        queue.push_back(r);
    }
    while let Some(beta) = queue.pop_front() {
        for s in 0..sys.rank() {
            if beta.as_simple() == Some(s) {
                continue;
            }
            let c = sys.form_simple(&beta, s);
            if c.cmp_value(&minus_one).is_gt() && c.cmp_value(&one).is_lt() {
                let r = sys.reflect(s, &beta);
                if seen.insert(r.clone()) {
                    out.push(r.clone());
                    queue.push_back(r);
                }
            }
        }
    }
    out
}

/// True when `beta` is a nonnegative combination of `gens`.
pub fn cone_membership(beta: &Root, gens: &[Root]) -> bool {
    lp::in_cone(beta, gens)
}
