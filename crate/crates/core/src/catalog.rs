//! Interned roots and cached per-element inversion data.
//!
//! The enumerations behind low elements, gates and joins touch the same few
//! hundred roots over and over. A [`Catalog`] interns them as integer ids,
//! caches the reflection action on ids, and memoises [`ElementInfo`] records
//! keyed by normal word. A catalog is single-threaded; use one per worker.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::sync::Arc;

use crate::error::Result;
use crate::inversions;
use crate::system::{CoxeterSystem, Element, GenSet, Root};

pub type RootId = u32;

const UNSET: u32 = u32::MAX;

/// A set of root ids stored as a trimmed bitset, so equal sets compare and hash equal.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet {
    words: Vec<u64>,
}

impl RootSet {
    pub fn new() -> Self {
        RootSet::default()
    }

    pub fn singleton(id: RootId) -> Self {
        let mut s = RootSet::new();
        s.insert(id);
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, id: RootId) -> bool {
        let (w, b) = (id as usize / 64, id % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, id: RootId) -> bool {
        let (w, b) = (id as usize / 64, id % 64);
        if w >= self.words.len() {
            return false;
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        self.trim();
        had
    }

    pub fn contains(&self, id: RootId) -> bool {
        let (w, b) = (id as usize / 64, id % 64);
        w < self.words.len() && self.words[w] >> b & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = RootId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64u32).filter(move |b| w >> b & 1 == 1).map(move |b| i as u32 * 64 + b)
        })
    }

    pub fn first(&self) -> Option<RootId> {
        self.iter().next()
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        let n = self.words.len().max(other.words.len());
        let words = (0..n)
            .map(|i| self.words.get(i).copied().unwrap_or(0) | other.words.get(i).copied().unwrap_or(0))
            .collect();
        RootSet { words }
    }

    pub fn union_with(&mut self, other: &RootSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        let mut out = RootSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() };
        out.trim();
        out
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        let mut out = RootSet {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        };
        out.trim();
        out
    }

    pub fn intersection_len(&self, other: &RootSet) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.words.len() <= other.words.len() && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &RootSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// True when the intersection with `other` is exactly `{id}`.
    pub fn meets_exactly(&self, other: &RootSet, id: RootId) -> bool {
        self.contains(id) && other.contains(id) && self.intersection_len(other) == 1
    }
}

impl FromIterator<RootId> for RootSet {
    fn from_iter<I: IntoIterator<Item = RootId>>(iter: I) -> Self {
        let mut s = RootSet::new();
        for id in iter {
            s.insert(id);
        }
        s
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Position of `<a, b>` relative to `-1` and `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormClass {
    AtMostMinusOne,
    Between,
    AtLeastOne,
}

/// Cached inversion data of one element.
#[derive(Debug, Clone)]
pub struct ElementInfo {
    pub element: Element,
    /// `w alpha_t` for each generator `t`.
    pub images: Vec<RootId>,
    /// Root sequence of the normal word.
    pub sequence: Vec<RootId>,
    pub inversions: RootSet,
    pub short: RootSet,
    pub final_roots: RootSet,
}

impl ElementInfo {
    pub fn length(&self) -> usize {
        self.sequence.len()
    }

    pub fn left_descents(&self) -> GenSet {
        self.element.descents_left()
    }

    pub fn right_descents(&self) -> GenSet {
        self.element.descents_right()
    }

    pub fn is_tight(&self) -> bool {
        self.final_roots.len() == 1
    }

    /// The unique final root of a tight element.
    pub fn final_root(&self) -> Option<RootId> {
        if self.is_tight() {
            self.final_roots.first()
        } else {
            None
        }
    }
}

#[derive(Default)]
struct Inner {
    roots: Vec<Root>,
    sign: Vec<i8>,
    simple_of: Vec<i16>,
    index: HashMap<Root, RootId>,
    reflect: Vec<Vec<u32>>,
    negation: Vec<u32>,
    reflect_by: HashMap<(RootId, RootId), RootId>,
    form_class: HashMap<(RootId, RootId), FormClass>,
    infos: HashMap<Box<[u8]>, Rc<ElementInfo>>,
    elementary: Option<(Vec<RootId>, RootSet)>,
}

/// Interning engine for one Coxeter system.
pub struct Catalog {
    sys: Arc<CoxeterSystem>,
    inner: RefCell<Inner>,
}

impl Catalog {
    pub fn new(sys: Arc<CoxeterSystem>) -> Catalog {
        let cat = Catalog { sys, inner: RefCell::new(Inner::default()) };
        for s in 0..cat.sys.rank() {
            let id = cat.intern(cat.sys.simple_root(s));
            debug_assert_eq!(id as usize, s);
        }
        let n = cat.sys.rank();
        let identity = ElementInfo {
            element: cat.sys.identity(),
            images: (0..n as u32).collect(),
            sequence: Vec::new(),
            inversions: RootSet::new(),
            short: RootSet::new(),
            final_roots: RootSet::new(),
        };
        cat.inner.borrow_mut().infos.insert(Box::from(&[][..]), Rc::new(identity));
        cat
    }

    pub fn sys(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn sys_arc(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    /// Id of the simple root `alpha_s`.
    pub fn simple(&self, s: usize) -> RootId {
        s as RootId
    }

    pub fn intern(&self, root: &Root) -> RootId {
        if let Some(&id) = self.inner.borrow().index.get(root) {
            return id;
        }
        let sign = root.signum();
        let simple = root.as_simple().map(|s| s as i16).unwrap_or(-1);
        let mut inner = self.inner.borrow_mut();
        let id = inner.roots.len() as RootId;
        inner.roots.push(root.clone());
        inner.sign.push(sign);
        inner.simple_of.push(simple);
        inner.reflect.push(vec![UNSET; self.sys.rank()]);
        inner.negation.push(UNSET);
        inner.index.insert(root.clone(), id);
        id
    }

    pub fn lookup(&self, root: &Root) -> Option<RootId> {
        self.inner.borrow().index.get(root).copied()
    }

    pub fn root(&self, id: RootId) -> Root {
        self.inner.borrow().roots[id as usize].clone()
    }

    pub fn roots(&self, set: &RootSet) -> Vec<Root> {
        let inner = self.inner.borrow();
        set.iter().map(|id| inner.roots[id as usize].clone()).collect()
    }

    pub fn interned_count(&self) -> usize {
        self.inner.borrow().roots.len()
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        self.inner.borrow().sign[id as usize] > 0
    }

    /// Generator `s` when the id is the simple root `alpha_s`.
    pub fn simple_index(&self, id: RootId) -> Option<usize> {
        let v = self.inner.borrow().simple_of[id as usize];
        if v < 0 {
            None
        } else {
            Some(v as usize)
        }
    }

    pub fn negate(&self, id: RootId) -> RootId {
        let cached = self.inner.borrow().negation[id as usize];
        if cached != UNSET {
            return cached;
        }
        let neg = self.root(id).neg();
        let nid = self.intern(&neg);
        let mut inner = self.inner.borrow_mut();
        inner.negation[id as usize] = nid;
        inner.negation[nid as usize] = id;
        nid
    }

    /// `s` applied to a root id.
    pub fn reflect(&self, s: usize, id: RootId) -> RootId {
        let cached = self.inner.borrow().reflect[id as usize][s];
        if cached != UNSET {
            return cached;
        }
        let image = self.sys.reflect(s, &self.root(id));
        let rid = self.intern(&image);
        let mut inner = self.inner.borrow_mut();
        inner.reflect[id as usize][s] = rid;
        inner.reflect[rid as usize][s] = id;
        rid
    }

    /// `s_beta` applied to `v`.
    pub fn reflect_by(&self, beta: RootId, v: RootId) -> RootId {
        if let Some(&r) = self.inner.borrow().reflect_by.get(&(beta, v)) {
            return r;
        }
        let image = self.sys.reflect_by(&self.root(beta), &self.root(v));
        let rid = self.intern(&image);
        let mut inner = self.inner.borrow_mut();
        inner.reflect_by.insert((beta, v), rid);
        inner.reflect_by.insert((beta, rid), v);
        rid
    }

    pub fn form_class(&self, a: RootId, b: RootId) -> FormClass {
        let key = if a <= b { (a, b) } else { (b, a) };
        if let Some(&c) = self.inner.borrow().form_class.get(&key) {
            return c;
        }
        let f = self.sys.form(&self.root(a), &self.root(b));
        let class = if f.cmp_value(&self.sys.scalar(-1)).is_le() {
            FormClass::AtMostMinusOne
        } else if f.cmp_value(&self.sys.scalar(1)).is_ge() {
            FormClass::AtLeastOne
        } else {
            FormClass::Between
        };
        self.inner.borrow_mut().form_class.insert(key, class);
        class
    }

    /// Elementary roots as ids, in discovery order, plus the same as a set.
    pub fn elementary(&self) -> (Vec<RootId>, RootSet) {
        if let Some(e) = &self.inner.borrow().elementary {
            return e.clone();
        }
        let ids: Vec<RootId> = inversions::elementary_roots(&self.sys).iter().map(|r| self.intern(r)).collect();
        let set: RootSet = ids.iter().copied().collect();
        self.inner.borrow_mut().elementary = Some((ids.clone(), set.clone()));
        (ids, set)
    }

    pub fn elementary_set(&self) -> RootSet {
        self.elementary().1
    }

    pub fn identity_info(&self) -> Rc<ElementInfo> {
        self.inner.borrow().infos.get(&[][..]).expect("identity is seeded").clone()
    }

    fn cached(&self, word: &[u8]) -> Option<Rc<ElementInfo>> {
        self.inner.borrow().infos.get(word).cloned()
    }

    pub fn cached_count(&self) -> usize {
        self.inner.borrow().infos.len()
    }

    /// Inversion data of an element, built along the suffixes of its normal word.
    pub fn info(&self, w: &Element) -> Rc<ElementInfo> {
        assert_eq!(w.system_id(), self.sys.id(), "element from another system");
        self.info_of_normal_word(w.word())
    }

    fn info_of_normal_word(&self, word: &[u8]) -> Rc<ElementInfo> {
        if let Some(i) = self.cached(word) {
            return i;
        }
        let mut start = 1;
        let mut cur = loop {
            if let Some(i) = self.cached(&word[start..]) {
                break i;
            }
            start += 1;
        };
        for i in (0..start).rev() {
            let info = Rc::new(self.extend_along_normal(word[i] as usize, &cur, &word[i..]));
            self.inner.borrow_mut().infos.insert(Box::from(&word[i..]), info.clone());
            cur = info;
        }
        cur
    }

    /// Info for `s v` when `s . word(v)` is already the normal word of `s v`.
    fn extend_along_normal(&self, s: usize, v: &ElementInfo, word: &[u8]) -> ElementInfo {
        let alpha = self.simple(s);
        let mut sequence = Vec::with_capacity(v.sequence.len() + 1);
        sequence.push(alpha);
        sequence.extend(v.sequence.iter().map(|&b| self.reflect(s, b)));
        let images: Vec<RootId> = v.images.iter().map(|&b| self.reflect(s, b)).collect();
        let inversions: RootSet = sequence.iter().copied().collect();
        let mut short = RootSet::singleton(alpha);
        for beta in v.short.iter() {
            let pos = v.sequence.iter().position(|&b| b == beta).expect("short root lies in the sequence");
            let probe = self.reflect_by(beta, alpha);
            if !v.sequence[pos + 1..].contains(&probe) {
                short.insert(self.reflect(s, beta));
            }
        }
        let mut final_roots = RootSet::new();
        let mut right = GenSet::default();
        for (t, &img) in images.iter().enumerate() {
            if !self.is_positive(img) {
                final_roots.insert(self.negate(img));
                right.insert(t);
            }
        }
        let mut left = GenSet::default();
        for id in inversions.iter() {
            if let Some(t) = self.simple_index(id) {
                left.insert(t);
            }
        }
        let element = Element::from_parts(self.sys.id(), word.to_vec(), left, right);
        ElementInfo { element, images, sequence, inversions, short, final_roots }
    }

    /// ShortLex normal word of the element with the given inversion set.
    pub fn normal_word_from_inversions(&self, inversions: impl IntoIterator<Item = RootId>) -> Vec<u8> {
        let mut cur: Vec<RootId> = inversions.into_iter().collect();
        let mut out = Vec::with_capacity(cur.len());
        while !cur.is_empty() {
            let (pos, s) = cur
                .iter()
                .enumerate()
                .filter_map(|(i, &id)| self.simple_index(id).map(|s| (i, s)))
                .min_by_key(|&(_, s)| s)
                .expect("inversion set of a nontrivial element has a simple root");
            out.push(s as u8);
            cur.swap_remove(pos);
            for id in cur.iter_mut() {
                *id = self.reflect(s, *id);
            }
        }
        out
    }

    /// Info for `s y`, where `s` is not a left descent of `y`.
    pub fn left_extend(&self, s: usize, y: &ElementInfo) -> Rc<ElementInfo> {
        debug_assert!(!y.left_descents().contains(s));
        let mut word = Vec::with_capacity(y.length() + 1);
        word.push(s as u8);
        word.extend_from_slice(y.element.word());
        if let Some(i) = self.cached(&word) {
            return i;
        }
        let alpha = self.simple(s);
        let candidate = std::iter::once(alpha).chain(y.sequence.iter().map(|&b| self.reflect(s, b)));
        let normal = self.normal_word_from_inversions(candidate);
        if normal == word {
            let info = Rc::new(self.extend_along_normal(s, y, &word));
            self.inner.borrow_mut().infos.insert(Box::from(&word[..]), info.clone());
            return info;
        }
        self.info_of_normal_word(&normal)
    }

    /// Info for `x s`, where `s` is not a right descent of `x`.
    pub fn right_extend(&self, x: &ElementInfo, s: usize) -> Rc<ElementInfo> {
        debug_assert!(!x.right_descents().contains(s));
        let inv = x.sequence.iter().copied().chain(std::iter::once(x.images[s]));
        let normal = self.normal_word_from_inversions(inv);
        self.info_of_normal_word(&normal)
    }

    /// Info of the element whose inversion set is given.
    pub fn info_from_inversions(&self, inversions: &RootSet) -> Rc<ElementInfo> {
        let normal = self.normal_word_from_inversions(inversions.iter());
        self.info_of_normal_word(&normal)
    }

    /// Info of the element represented by an arbitrary word.
    pub fn info_of_letters(&self, letters: &[usize]) -> Result<Rc<ElementInfo>> {
        let e = self.sys.normalize(letters)?;
        Ok(self.info(&e))
    }

    pub fn inverse_info(&self, x: &ElementInfo) -> Rc<ElementInfo> {
        let letters: Vec<usize> = x.element.word().iter().rev().map(|&s| s as usize).collect();
        self.info_of_letters(&letters).expect("valid letters")
    }

    /// `Phi^1(w)` by the deletion test on interned ids.
    pub fn short_direct(&self, x: &ElementInfo) -> RootSet {
        let seq = &x.sequence;
        let mut out = RootSet::new();
        for (i, &b) in seq.iter().enumerate() {
            if seq[i + 1..].iter().all(|&g| self.is_positive(self.reflect_by(b, g))) {
                out.insert(b);
            }
        }
        out
    }

    /// `x <= y` in right weak order.
    pub fn is_prefix(&self, x: &ElementInfo, y: &ElementInfo) -> bool {
        x.inversions.is_subset(&y.inversions)
    }

    /// `l(x y) = l(x) + l(y)` iff `Phi(x^{-1})` and `Phi(y)` are disjoint.
    pub fn is_length_additive(&self, x: &Element, y: &ElementInfo) -> bool {
        let xi = self.inverse_info(&self.info(x));
        xi.inversions.is_disjoint(&y.inversions)
    }

    /// True when some pair of roots from the two sets has `<a, b> <= -1`.
    pub fn has_divergent_pair(&self, a: &RootSet, b: &RootSet) -> bool {
        for x in a.iter() {
            for y in b.iter() {
                if x != y && self.form_class(x, y) == FormClass::AtMostMinusOne {
                    return true;
                }
            }
        }
        false
    }

    pub fn element_string(&self, w: &Element) -> String {
        self.sys.element_string(w)
    }
}
