//! Exact cone membership by a phase-one simplex over the field.

use crate::field::AlgebraicReal;
use crate::system::Root;

/// True when `target` is a nonnegative combination of `gens`.
///
/// Solves `sum lambda_i g_i = target, lambda >= 0` for feasibility with
/// artificial variables and Bland's rule, so it always terminates.
pub fn in_cone(target: &Root, gens: &[Root]) -> bool {
    if target.coeffs().iter().all(|c| c.is_zero()) {
        return true;
    }
    if gens.iter().any(|g| g == target) {
        return true;
    }
    if gens.is_empty() {
        return false;
    }
    let m = target.rank();
    let k = gens.len();
    let field = target.coeffs()[0].field().clone();
    let zero = AlgebraicReal::zero(&field);
    let one = AlgebraicReal::one(&field);
    // columns: k generators, m artificials, rhs
    let width = k + m + 1;
    let mut rows: Vec<Vec<AlgebraicReal>> = Vec::with_capacity(m);
    for r in 0..m {
        let flip = target.coeffs()[r].is_negative();
        let mut row = Vec::with_capacity(width);
        for g in gens {
            let v = g.coeffs()[r].clone();
            row.push(if flip { v.neg_ref() } else { v });
        }
        for a in 0..m {
            row.push(if a == r { one.clone() } else { zero.clone() });
        }
        let b = target.coeffs()[r].clone();
        row.push(if flip { b.neg_ref() } else { b });
        rows.push(row);
    }
    let mut basis: Vec<usize> = (k..k + m).collect();
    // objective: minimise the sum of artificials, written in reduced form
    let mut obj: Vec<AlgebraicReal> = vec![zero.clone(); width];
    for row in &rows {
        for c in 0..k {
            obj[c] = obj[c].sub_ref(&row[c]);
        }
        obj[width - 1] = obj[width - 1].sub_ref(&row[width - 1]);
    }
    loop {
        let entering = (0..k + m).find(|&c| obj[c].is_negative());
        let Some(col) = entering else { break };
        let mut best: Option<(usize, AlgebraicReal)> = None;
        for (r, row) in rows.iter().enumerate() {
            if !row[col].is_positive() {
                continue;
            }
            let ratio = row[width - 1].div_ref(&row[col]).expect("positive pivot");
            best = match best {
                None => Some((r, ratio)),
                Some((br, bv)) => match ratio.cmp_value(&bv) {
                    std::cmp::Ordering::Less => Some((r, ratio)),
                    std::cmp::Ordering::Equal if basis[r] < basis[br] => Some((r, ratio)),
                    _ => Some((br, bv)),
                },
            };
        }
        let Some((pr, _)) = best else {
            // unbounded direction cannot occur in phase one; the objective is bounded below by zero
            break;
        };
        let piv = rows[pr][col].clone();
        let inv = piv.inv().expect("nonzero pivot");
        for v in rows[pr].iter_mut() {
            *v = v.mul_ref(&inv);
        }
        let pivot_row = rows[pr].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pr || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in 0..width {
                if !pivot_row[c].is_zero() {
                    row[c] = row[c].sub_ref(&f.mul_ref(&pivot_row[c]));
                }
            }
        }
        let f = obj[col].clone();
        for c in 0..width {
            if !pivot_row[c].is_zero() {
                obj[c] = obj[c].sub_ref(&f.mul_ref(&pivot_row[c]));
            }
        }
        basis[pr] = col;
    }
    obj[width - 1].is_zero()
}
