//! Right weak order: prefixes, joins, minimal prefixes and canonical join
//! representations.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use crate::catalog::{Catalog, ElementInfo, RootId, RootSet};
use crate::error::{CoxeterError, Result};
use crate::lp;
use crate::system::{CoxeterSystem, Element, Root};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinStatus {
    Found,
    NoUpperBoundWithinCap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinResult {
    pub value: Option<Element>,
    pub status: JoinStatus,
}

impl JoinResult {
    fn found(e: Element) -> Self {
        JoinResult { value: Some(e), status: JoinStatus::Found }
    }
    fn none() -> Self {
        JoinResult { value: None, status: JoinStatus::NoUpperBoundWithinCap }
    }
}

/// `2 * max length + 4`.
pub fn default_join_cap(xs: &[Element]) -> usize {
    2 * xs.iter().map(|x| x.length()).max().unwrap_or(0) + 4
}

/// `x <= y`: `l(y) = l(x) + l(x^{-1} y)`.
pub fn is_prefix(sys: &CoxeterSystem, x: &Element, y: &Element) -> bool {
    let xi = sys.inverse(x);
    let q = sys.multiply(&xi, y).expect("same system");
    y.length() == x.length() + q.length()
}

/// `x` is a suffix of `y`: `l(y) = l(y x^{-1}) + l(x)`.
pub fn is_suffix(sys: &CoxeterSystem, x: &Element, y: &Element) -> bool {
    let xi = sys.inverse(x);
    let q = sys.multiply(y, &xi).expect("same system");
    y.length() == q.length() + x.length()
}

/// Join by greedy extension inside the cone spanned by the short inversions.
///
/// Every upper bound has all positive roots of `cone(Phi(x) : x in xs)` among
/// its inversions, so two roots of that cone with `<beta, gamma> <= -1` rule
/// out an upper bound. The search also reports no bound when it stalls, since
/// below a join some extension always stays inside the cone.
pub fn join(cat: &Catalog, xs: &[Element], cap: usize) -> JoinResult {
    if xs.is_empty() {
        return JoinResult::found(cat.sys().identity());
    }
    let infos: Vec<Rc<ElementInfo>> = xs.iter().map(|x| cat.info(x)).collect();
    join_infos(cat, &infos, cap)
}

pub fn join_infos(cat: &Catalog, infos: &[Rc<ElementInfo>], cap: usize) -> JoinResult {
    match greedy_join(cat, infos, cap) {
        GreedyOutcome::Found(e) => JoinResult::found(e),
        _ => JoinResult::none(),
    }
}

/// How the greedy join search ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GreedyOutcome {
    Found(Element),
    /// The cone holds two roots with `<beta, gamma> <= -1`.
    Divergent,
    /// No extension stays inside the cone, so there is no upper bound.
    Stalled,
    /// The length cap was reached first.
    CapReached,
}

pub fn greedy_join(cat: &Catalog, infos: &[Rc<ElementInfo>], cap: usize) -> GreedyOutcome {
    let Some(start) = infos.iter().max_by_key(|i| i.length()) else {
        return GreedyOutcome::Found(cat.sys().identity());
    };
    let mut target = RootSet::new();
    let mut gen_ids = RootSet::new();
    for i in infos {
        target.union_with(&i.inversions);
        gen_ids.union_with(&i.short);
    }
    if target.len() == start.length() {
        return GreedyOutcome::Found(start.element.clone());
    }
    for (a, ia) in infos.iter().enumerate() {
        for ib in &infos[a + 1..] {
            if cat.has_divergent_pair(&ia.inversions, &ib.inversions) {
                return GreedyOutcome::Divergent;
            }
        }
    }
    let gens: Vec<Root> = cat.roots(&gen_ids);
    let mut in_cone_cache: HashMap<RootId, bool> = HashMap::new();
    let n = cat.sys().rank();
    let mut z = start.clone();
    loop {
        if target.is_subset(&z.inversions) {
            return GreedyOutcome::Found(z.element.clone());
        }
        if z.length() >= cap {
            return GreedyOutcome::CapReached;
        }
        let free: Vec<usize> = (0..n).filter(|&s| !z.right_descents().contains(s)).collect();
        let mut chosen = free.iter().copied().find(|&s| target.contains(z.images[s]));
        if chosen.is_none() {
            chosen = free.iter().copied().find(|&s| {
                let g = z.images[s];
                *in_cone_cache.entry(g).or_insert_with(|| lp::in_cone(&cat.root(g), &gens))
            });
        }
        let Some(s) = chosen else { return GreedyOutcome::Stalled };
        let g = z.images[s];
        if !target.contains(g) && cat.has_divergent_pair(&RootSet::singleton(g), &target) {
            return GreedyOutcome::Divergent;
        }
        z = cat.right_extend(&z, s);
    }
}

/// Join by exhaustive search over every element of length at most `cap`.
///
/// Returns the shortest upper bound and checks that it lies below every other
/// upper bound found.
pub fn join_brute_force(cat: &Catalog, xs: &[Element], cap: usize) -> Result<JoinResult> {
    let mut target = RootSet::new();
    for x in xs {
        target.union_with(&cat.info(x).inversions);
    }
    let mut bounds: Vec<Rc<ElementInfo>> = Vec::new();
    for_each_element_up_to(cat, cap, |z| {
        if target.is_subset(&z.inversions) {
            bounds.push(z.clone());
        }
    });
    let Some(best) = bounds.iter().min_by(|a, b| a.element.cmp(&b.element)).cloned() else {
        return Ok(JoinResult::none());
    };
    for b in &bounds {
        if !best.inversions.is_subset(&b.inversions) {
            return Err(CoxeterError::Invariant("two incomparable minimal upper bounds".into()));
        }
    }
    Ok(JoinResult::found(best.element.clone()))
}

/// Visit every element of length at most `cap`, in ShortLex order by layers.
pub fn for_each_element_up_to(cat: &Catalog, cap: usize, mut f: impl FnMut(&Rc<ElementInfo>)) {
    let n = cat.sys().rank();
    let mut layer = vec![cat.identity_info()];
    for len in 0..=cap {
        for z in &layer {
            f(z);
        }
        if len == cap {
            break;
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for z in &layer {
            for s in 0..n {
                if z.right_descents().contains(s) {
                    continue;
                }
                let y = cat.right_extend(z, s);
                if seen.insert(y.element.clone()) {
                    next.push(y);
                }
            }
        }
        next.sort_by(|a, b| a.element.cmp(&b.element));
        layer = next;
    }
}

/// All prefixes of `w` (elements `z` with `Phi(z)` inside `Phi(w)`), shortest first.
pub fn prefixes(cat: &Catalog, w: &Element) -> Vec<Rc<ElementInfo>> {
    let wi = cat.info(w);
    let n = cat.sys().rank();
    let mut out = Vec::new();
    let mut layer = vec![cat.identity_info()];
    while !layer.is_empty() {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for z in &layer {
            for s in 0..n {
                if z.right_descents().contains(s) || !wi.inversions.contains(z.images[s]) {
                    continue;
                }
                let y = cat.right_extend(z, s);
                if seen.insert(y.element.clone()) {
                    next.push(y);
                }
            }
        }
        next.sort_by(|a, b| a.element.cmp(&b.element));
        out.append(&mut layer);
        layer = next;
    }
    out
}

/// The unique shortest prefix of `w` whose inversion set contains `beta`.
pub fn min_prefix_containing(cat: &Catalog, w: &Element, beta: RootId) -> Result<Element> {
    let wi = cat.info(w);
    if !wi.inversions.contains(beta) {
        return Err(CoxeterError::NotAnInversion);
    }
    let n = cat.sys().rank();
    let mut layer = vec![cat.identity_info()];
    loop {
        let hits: Vec<&Rc<ElementInfo>> = layer.iter().filter(|z| z.inversions.contains(beta)).collect();
        if let Some(first) = hits.first() {
            if hits.len() > 1 {
                return Err(CoxeterError::Invariant("minimal prefix containing a root is not unique".into()));
            }
            if first.final_roots != RootSet::singleton(beta) {
                return Err(CoxeterError::Invariant("minimal prefix does not end in the root".into()));
            }
            return Ok(first.element.clone());
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for z in &layer {
            for s in 0..n {
                if z.right_descents().contains(s) || !wi.inversions.contains(z.images[s]) {
                    continue;
                }
                let y = cat.right_extend(z, s);
                if seen.insert(y.element.clone()) {
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            return Err(CoxeterError::Invariant("prefix search ran out".into()));
        }
        layer = next;
    }
}

/// `{ j_beta : beta in Phi^R(w) }`, sorted.
pub fn canonical_join_representation(cat: &Catalog, w: &Element) -> Result<Vec<Element>> {
    let wi = cat.info(w);
    let mut out = wi
        .final_roots
        .iter()
        .map(|b| min_prefix_containing(cat, w, b))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// `beta -> j_beta` for each short inversion `beta` of `w`.
pub fn phi1_decomposition(cat: &Catalog, w: &Element) -> Result<Vec<(RootId, Element)>> {
    let wi = cat.info(w);
    wi.short.iter().map(|b| Ok((b, min_prefix_containing(cat, w, b)?))).collect()
}

/// Every element on a geodesic from `x` to `y`: `x p` for `p <= x^{-1} y`.
pub fn geodesic_elements(cat: &Catalog, x: &Element, y: &Element, cap: usize) -> Result<Vec<Element>> {
    let sys = cat.sys();
    let v = sys.multiply(&sys.inverse(x), y)?;
    if v.length() > cap {
        return Err(CoxeterError::CapExhausted(cap));
    }
    let mut out: Vec<Element> = prefixes(cat, &v)
        .iter()
        .map(|p| sys.multiply(x, &p.element))
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// True when every geodesic between two members stays inside the set.
pub fn is_convex(cat: &Catalog, set: &[Element], cap: usize) -> Result<bool> {
    let members: HashSet<&Element> = set.iter().collect();
    for (i, x) in set.iter().enumerate() {
        for y in &set[i + 1..] {
            for g in geodesic_elements(cat, x, y, cap)? {
                if !members.contains(&g) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Join-irreducible members of a finite poset under weak order.
///
/// `x` is join-irreducible when it is not the least upper bound, inside the
/// poset, of the members strictly below it.
pub fn join_irreducibles(cat: &Catalog, set: &[Element]) -> Vec<Element> {
    let infos: Vec<Rc<ElementInfo>> = set.iter().map(|x| cat.info(x)).collect();
    let n = infos.len();
    let words = n.div_ceil(64);
    // below_eq[u] has bit y set when y <= u
    let mut below_eq = vec![vec![0u64; words]; n];
    for u in 0..n {
        for y in 0..n {
            if infos[y].inversions.is_subset(&infos[u].inversions) {
                below_eq[u][y / 64] |= 1 << (y % 64);
            }
        }
    }
    let mut out = Vec::new();
    for x in 0..n {
        let mut strictly = below_eq[x].clone();
        strictly[x / 64] &= !(1 << (x % 64));
        if strictly.iter().all(|&w| w == 0) {
            continue;
        }
        let is_lub = (0..n).all(|u| {
            let covers = strictly.iter().zip(&below_eq[u]).all(|(d, b)| d & !b == 0);
            !covers || below_eq[u][x / 64] >> (x % 64) & 1 == 1
        });
        if !is_lub {
            out.push(set[x].clone());
        }
    }
    out.sort();
    out
}
