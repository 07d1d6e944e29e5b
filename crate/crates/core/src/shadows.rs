//! Low elements, tight gates, witnesses and Garside shadows.

use std::cell::OnceCell;
use std::collections::{HashMap, HashSet};
use std::rc::Rc;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::catalog::{Catalog, ElementInfo, RootId, RootSet};
use crate::error::{CoxeterError, Result};
use crate::system::{CoxeterSystem, Element, Root};
use crate::weak_order::{self, GreedyOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShadowKind {
    Low,
    TightLow,
    Gates,
    TightGates,
    SmallestGarside,
    Custom,
}

impl ShadowKind {
    pub fn name(&self) -> &'static str {
        match self {
            ShadowKind::Low => "low",
            ShadowKind::TightLow => "tight-low",
            ShadowKind::Gates => "gates",
            ShadowKind::TightGates => "tight-gates",
            ShadowKind::SmallestGarside => "smallest-garside",
            ShadowKind::Custom => "custom",
        }
    }
}

/// A finite set of elements, kept sorted in ShortLex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowSet {
    pub kind: ShadowKind,
    elements: Vec<Element>,
}

impl ShadowSet {
    pub fn new(kind: ShadowKind, mut elements: Vec<Element>) -> Self {
        elements.sort();
        elements.dedup();
        ShadowSet { kind, elements }
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Element> {
        self.elements.iter()
    }

    pub fn max_length(&self) -> usize {
        self.elements.iter().map(|e| e.length()).max().unwrap_or(0)
    }

    /// Every `s x` with `s` a left descent of a member is a member.
    pub fn is_suffix_closed(&self, sys: &CoxeterSystem) -> bool {
        self.elements.iter().all(|x| {
            x.descents_left().iter().all(|s| self.contains(&sys.left_multiply(s, x)))
        })
    }

    /// Sorted words with the final roots of each member.
    pub fn to_json(&self, cat: &Catalog) -> Value {
        let sys = cat.sys();
        let items: Vec<Value> = self
            .elements
            .iter()
            .map(|x| {
                let info = cat.info(x);
                json!({
                    "word": sys.element_string(x),
                    "final_roots": cat.roots(&info.final_roots).iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({"kind": self.kind.name(), "count": self.len(), "elements": items})
    }
}

/// Result of the tight-gate search.
#[derive(Debug, Clone)]
pub struct TightGateSearch {
    pub tight_gates: ShadowSet,
    pub super_elementary: Vec<RootId>,
    /// The candidate pool `L'`, in discovery order (non-decreasing length).
    pub pool: Vec<Element>,
    /// Pool members grouped by their final root, shortest first.
    pub pool_by_root: HashMap<RootId, Vec<Element>>,
}

/// A witness search outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessRecord {
    pub subject: Element,
    pub root: Root,
    pub witness: Option<Element>,
    pub search_cap: usize,
}

/// Low elements by left extension from the identity.
pub fn low_elements(cat: &Catalog) -> ShadowSet {
    let e = cat.elementary_set();
    let n = cat.sys().rank();
    let mut seen: HashSet<Element> = HashSet::new();
    let mut out = Vec::new();
    let mut frontier = vec![cat.identity_info()];
    seen.insert(cat.sys().identity());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            out.push(w.element.clone());
            for s in 0..n {
                if w.left_descents().contains(s) {
                    continue;
                }
                let y = cat.left_extend(s, w);
                if y.short.is_subset(&e) && seen.insert(y.element.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    ShadowSet::new(ShadowKind::Low, out)
}

/// Members with exactly one final root.
pub fn tight(cat: &Catalog, set: &ShadowSet) -> ShadowSet {
    let kind = match set.kind {
        ShadowKind::Low => ShadowKind::TightLow,
        ShadowKind::Gates | ShadowKind::SmallestGarside => ShadowKind::TightGates,
        k => k,
    };
    ShadowSet::new(kind, set.iter().filter(|x| cat.info(x).is_tight()).cloned().collect())
}

/// Tight gates and super-elementary roots by left extension over tight
/// elements whose final root is elementary, pairing elements that meet in
/// exactly their common final root. Simple generators are their own
/// witnesses and are added to the output directly.
pub fn tight_gate_search(cat: &Catalog) -> TightGateSearch {
    let sys = cat.sys();
    let n = sys.rank();
    let e = cat.elementary_set();
    let mut pool: Vec<Rc<ElementInfo>> = (0..n).map(|s| cat.info(&sys.generator(s))).collect();
    let mut in_pool: HashSet<Element> = pool.iter().map(|i| i.element.clone()).collect();
    let mut by_root: HashMap<RootId, Vec<Rc<ElementInfo>>> = HashMap::new();
    for i in &pool {
        by_root.entry(i.final_root().expect("generators are tight")).or_default().push(i.clone());
    }
    let mut super_elementary: Vec<RootId> = (0..n).map(|s| cat.simple(s)).collect();
    let mut gamma: HashSet<Element> = HashSet::new();
    let mut layer: Vec<Rc<ElementInfo>> = pool.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for x in &layer {
            for s in 0..n {
                if x.left_descents().contains(s) {
                    continue;
                }
                let y = cat.left_extend(s, x);
                let Some(beta) = y.final_root() else { continue };
                if !e.contains(beta) || !in_pool.insert(y.element.clone()) {
                    continue;
                }
                pool.push(y.clone());
                next.push(y.clone());
                let partners = by_root.entry(beta).or_default();
                for z in partners.iter() {
                    if z.inversions.meets_exactly(&y.inversions, beta) {
                        if !super_elementary.contains(&beta) {
                            super_elementary.push(beta);
                        }
                        gamma.insert(y.element.clone());
                        gamma.insert(z.element.clone());
                    }
                }
                partners.push(y.clone());
            }
        }
        layer = next;
    }
    let mut tight_gates: Vec<Element> = gamma.into_iter().collect();
    tight_gates.extend(sys.generators());
    let mut pool_by_root: HashMap<RootId, Vec<Element>> = HashMap::new();
    for (b, v) in by_root {
        let mut els: Vec<Element> = v.iter().map(|i| i.element.clone()).collect();
        els.sort();
        pool_by_root.insert(b, els);
    }
    TightGateSearch {
        tight_gates: ShadowSet::new(ShadowKind::TightGates, tight_gates),
        super_elementary,
        pool: pool.iter().map(|i| i.element.clone()).collect(),
        pool_by_root,
    }
}

/// Shadow computations over one system, with lazily built shared data.
pub struct Shadows {
    cat: Catalog,
    low: OnceCell<ShadowSet>,
    search: OnceCell<TightGateSearch>,
}

impl Shadows {
    pub fn new(sys: Arc<CoxeterSystem>) -> Self {
        Shadows { cat: Catalog::new(sys), low: OnceCell::new(), search: OnceCell::new() }
    }

    pub fn catalog(&self) -> &Catalog {
        &self.cat
    }

    pub fn sys(&self) -> &CoxeterSystem {
        self.cat.sys()
    }

    pub fn low(&self) -> &ShadowSet {
        self.low.get_or_init(|| low_elements(&self.cat))
    }

    pub fn tight_gate_search(&self) -> &TightGateSearch {
        self.search.get_or_init(|| tight_gate_search(&self.cat))
    }

    pub fn smallest_garside_shadow(&self, cap: usize) -> Result<ShadowSet> {
        smallest_garside_shadow(&self.cat, self.low(), cap)
    }

    /// Default cap for the exhaustive witness search: longest low element plus 2.
    pub fn default_witness_cap(&self) -> usize {
        self.low().max_length() + 2
    }

    /// The unique shortest `y` with `Phi(x) & Phi(y) = {beta}`, looked up
    /// among the tight candidates ending in `beta`.
    pub fn minimal_witness(&self, x: &Element, beta: RootId) -> Result<Option<Element>> {
        let xi = self.cat.info(x);
        if !xi.inversions.contains(beta) {
            return Err(CoxeterError::NotAnInversion);
        }
        let Some(cands) = self.tight_gate_search().pool_by_root.get(&beta) else {
            return Ok(None);
        };
        let mut found: Option<&Element> = None;
        for y in cands {
            if let Some(f) = found {
                if y.length() > f.length() {
                    break;
                }
            }
            if self.cat.info(y).inversions.meets_exactly(&xi.inversions, beta) {
                if found.is_some() {
                    return Err(CoxeterError::Invariant("two shortest witnesses".into()));
                }
                found = Some(y);
            }
        }
        Ok(found.cloned())
    }

    /// Exhaustive witness search over `y` with `Phi(y) & Phi(x)` inside `{beta}`.
    ///
    /// `Ok(None)` means the search space was exhausted; hitting the cap first
    /// is an error.
    pub fn minimal_witness_search(&self, x: &Element, beta: RootId, cap: usize) -> Result<Option<Element>> {
        let cat = &self.cat;
        let xi = cat.info(x);
        if !xi.inversions.contains(beta) {
            return Err(CoxeterError::NotAnInversion);
        }
        let n = cat.sys().rank();
        let mut layer = vec![cat.identity_info()];
        let mut len = 0;
        loop {
            let hits: Vec<&Rc<ElementInfo>> = layer.iter().filter(|y| y.inversions.contains(beta)).collect();
            if let Some(first) = hits.first() {
                if hits.len() > 1 {
                    return Err(CoxeterError::Invariant("two shortest witnesses".into()));
                }
                return Ok(Some(first.element.clone()));
            }
            if layer.is_empty() {
                return Ok(None);
            }
            if len >= cap {
                return Err(CoxeterError::CapExhausted(cap));
            }
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for y in &layer {
                for s in 0..n {
                    if y.right_descents().contains(s) {
                        continue;
                    }
                    let g = y.images[s];
                    if g != beta && xi.inversions.contains(g) {
                        continue;
                    }
                    let z = cat.right_extend(y, s);
                    if seen.insert(z.element.clone()) {
                        next.push(z);
                    }
                }
            }
            layer = next;
            len += 1;
        }
    }

    pub fn witness_record(&self, x: &Element, beta: RootId) -> Result<WitnessRecord> {
        let witness = self.minimal_witness(x, beta)?;
        Ok(WitnessRecord {
            subject: x.clone(),
            root: self.cat.root(beta),
            witness,
            search_cap: self.default_witness_cap(),
        })
    }

    /// Short elementary inversions of `x` that admit a witness.
    pub fn boundary_roots(&self, x: &Element) -> Result<RootSet> {
        let xi = self.cat.info(x);
        let e = self.cat.elementary_set();
        let mut out = RootSet::new();
        for b in xi.short.intersection(&e).iter() {
            if self.minimal_witness(x, b)?.is_some() {
                out.insert(b);
            }
        }
        Ok(out)
    }

    /// Every final root of `x` admits a witness.
    pub fn is_gate(&self, x: &Element) -> Result<bool> {
        let xi = self.cat.info(x);
        for b in xi.final_roots.iter() {
            if self.minimal_witness(x, b)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every short inversion of `x` admits a witness.
    pub fn is_ultra_low(&self, x: &Element) -> Result<bool> {
        let xi = self.cat.info(x);
        for b in xi.short.iter() {
            if self.minimal_witness(x, b)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The longest prefix of `x` lying in `g`.
pub fn garside_projection(cat: &Catalog, g: &ShadowSet, x: &Element) -> Result<Element> {
    let inside: Vec<Element> = weak_order::prefixes(cat, x)
        .iter()
        .map(|p| p.element.clone())
        .filter(|p| g.contains(p))
        .collect();
    let longest = inside.iter().map(|p| p.length()).max().ok_or_else(|| {
        CoxeterError::Invariant("the set does not contain the identity".into())
    })?;
    let top: Vec<&Element> = inside.iter().filter(|p| p.length() == longest).collect();
    if top.len() != 1 {
        return Err(CoxeterError::Invariant("longest prefix in the set is not unique".into()));
    }
    let p = top[0];
    if !inside.iter().all(|q| cat.info(q).inversions.is_subset(&cat.info(p).inversions)) {
        return Err(CoxeterError::Invariant("longest prefix does not dominate the other prefixes".into()));
    }
    Ok(p.clone())
}

/// Join length cap used by [`smallest_garside_shadow`] unless told otherwise.
pub const DEFAULT_GARSIDE_JOIN_CAP: usize = 128;

/// Smallest set containing the identity and the generators that is closed
/// under suffixes and joins of bounded pairs.
///
/// `low` must be the low elements. They form a Garside shadow, so a bounded
/// pair of low elements has its join among them and a join search running
/// past the longest low element proves the pair unbounded. If `cap` stops
/// the search before that point the pair is reported as an error.
pub fn smallest_garside_shadow(cat: &Catalog, low: &ShadowSet, cap: usize) -> Result<ShadowSet> {
    let sys = cat.sys();
    let bound = low.max_length();
    let walk = cap.min(bound + 1);
    let mut members: Vec<Rc<ElementInfo>> = Vec::new();
    let mut index: HashSet<Element> = HashSet::new();
    let mut pending: Vec<Rc<ElementInfo>> = vec![cat.identity_info()];
    pending.extend((0..sys.rank()).map(|s| cat.info(&sys.generator(s))));
    while let Some(a) = pending.pop() {
        if !index.insert(a.element.clone()) {
            continue;
        }
        if !low.contains(&a.element) {
            return Err(CoxeterError::Invariant(format!(
                "{} lies outside the low elements",
                sys.element_string(&a.element)
            )));
        }
        for s in a.left_descents().iter() {
            let suffix = cat.info(&sys.left_multiply(s, &a.element));
            if !index.contains(&suffix.element) {
                pending.push(suffix);
            }
        }
        for b in &members {
            if a.inversions.is_subset(&b.inversions) || b.inversions.is_subset(&a.inversions) {
                continue;
            }
            match weak_order::greedy_join(cat, &[a.clone(), b.clone()], walk) {
                GreedyOutcome::Found(j) => {
                    if !index.contains(&j) {
                        pending.push(cat.info(&j));
                    }
                }
                GreedyOutcome::Divergent | GreedyOutcome::Stalled => {}
                GreedyOutcome::CapReached if walk > bound => {}
                GreedyOutcome::CapReached => {
                    return Err(CoxeterError::Invariant(format!(
                        "join cap {} exceeded for {} and {}",
                        cap,
                        sys.element_string(&a.element),
                        sys.element_string(&b.element)
                    )));
                }
            }
        }
        members.push(a);
    }
    Ok(ShadowSet::new(ShadowKind::SmallestGarside, members.iter().map(|m| m.element.clone()).collect()))
}
