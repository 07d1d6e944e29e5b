//! Coxeter systems, the geometric representation, and elements as ShortLex
//! normal words.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use num_integer::Integer;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{CoxeterError, Result};
use crate::field::{embed_cos, AlgebraicReal, Field};

/// Off-diagonal Coxeter label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn finite(&self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(*m),
            Label::Infinite => None,
        }
    }

    pub fn parse(s: &str) -> Result<Label> {
        let s = s.trim();
        match s {
            "inf" | "∞" | "oo" | "0" => Ok(Label::Infinite),
            _ => {
                let m: u32 = s.parse().map_err(|_| CoxeterError::Parse(format!("bad label '{}'", s)))?;
                Ok(Label::Finite(m))
            }
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{}", m),
            Label::Infinite => write!(f, "inf"),
        }
    }
}

/// Symmetric matrix of Coxeter labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Label>,
}

impl CoxeterMatrix {
    pub fn new(rows: Vec<Vec<Label>>) -> Result<Self> {
        let rank = rows.len();
        if rank > 64 {
            return Err(CoxeterError::InvalidMatrix("rank above 64 is not supported".into()));
        }
        let mut entries = Vec::with_capacity(rank * rank);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(CoxeterError::InvalidMatrix(format!("row {} has length {}", i, row.len())));
            }
            for (j, &l) in row.iter().enumerate() {
                if i == j && l != Label::Finite(1) {
                    return Err(CoxeterError::InvalidMatrix(format!("diagonal entry ({},{}) must be 1", i, j)));
                }
                if i != j {
                    if let Label::Finite(m) = l {
                        if m < 2 {
                            return Err(CoxeterError::InvalidMatrix(format!("entry ({},{}) must be at least 2", i, j)));
                        }
                    }
                    if rows[j][i] != l {
                        return Err(CoxeterError::InvalidMatrix(format!("matrix not symmetric at ({},{})", i, j)));
                    }
                }
                entries.push(l);
            }
        }
        Ok(CoxeterMatrix { rank, entries })
    }

    /// Build from upper-triangular labels keyed by pairs; unlisted pairs get 2.
    pub fn from_pairs(rank: usize, pairs: &[(usize, usize, Label)]) -> Result<Self> {
        let mut rows = vec![vec![Label::Finite(2); rank]; rank];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = Label::Finite(1);
        }
        for &(i, j, l) in pairs {
            if i >= rank || j >= rank || i == j {
                return Err(CoxeterError::InvalidMatrix(format!("bad pair ({},{})", i, j)));
            }
            rows[i][j] = l;
            rows[j][i] = l;
        }
        Self::new(rows)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize) -> Label {
        self.entries[i * self.rank + j]
    }

    /// Least common multiple of the finite off-diagonal labels, at least 2.
    pub fn field_order(&self) -> u32 {
        let mut n = 1u32;
        for i in 0..self.rank {
            for j in 0..self.rank {
                if i != j {
                    if let Label::Finite(m) = self.get(i, j) {
                        n = n.lcm(&m);
                    }
                }
            }
        }
        n.max(2)
    }
}

/// Set of generators as a bitmask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(pub u64);

impl GenSet {
    pub fn contains(&self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }
    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }
    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.0;
        (0..64).filter(move |&i| bits >> i & 1 == 1)
    }
    pub fn first(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

/// A vector in the simple-root basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Root(Vec<AlgebraicReal>);

impl Root {
    pub fn new(coeffs: Vec<AlgebraicReal>) -> Self {
        Root(coeffs)
    }

    pub fn coeffs(&self) -> &[AlgebraicReal] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Sign of the first nonzero coordinate; roots never mix signs.
    pub fn signum(&self) -> i8 {
        for c in &self.0 {
            if !c.is_zero() {
                return c.signum();
            }
        }
        0
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// True when every coordinate is nonnegative or every coordinate is nonpositive.
    pub fn has_uniform_sign(&self) -> bool {
        let signs: Vec<i8> = self.0.iter().map(|c| c.signum()).collect();
        signs.iter().all(|&s| s >= 0) || signs.iter().all(|&s| s <= 0)
    }

    /// Index of the simple root this equals, if any.
    pub fn as_simple(&self) -> Option<usize> {
        let mut found = None;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() || !c.is_one() {
                return None;
            }
            found = Some(i);
        }
        found
    }

    pub fn support(&self) -> GenSet {
        let mut g = GenSet::default();
        for (i, c) in self.0.iter().enumerate() {
            if !c.is_zero() {
                g.insert(i);
            }
        }
        g
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| c.neg_ref()).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a.add_ref(b)).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a.sub_ref(b)).collect())
    }

    pub fn scale(&self, k: &AlgebraicReal) -> Root {
        Root(self.0.iter().map(|c| c.mul_ref(k)).collect())
    }

    /// `self - k * other`.
    pub fn sub_scaled(&self, k: &AlgebraicReal, other: &Root) -> Root {
        if k.is_zero() {
            return self.clone();
        }
        Root(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if b.is_zero() { a.clone() } else { a.sub_ref(&b.mul_ref(k)) })
                .collect(),
        )
    }

    pub fn approx(&self) -> Vec<f64> {
        self.0.iter().map(|c| c.to_f64()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "coeffs": self.0.iter().map(|c| c.coeff_strings()).collect::<Vec<_>>(),
            "approx": self.approx(),
        })
    }

    pub fn from_json(field: &Arc<Field>, v: &Value) -> Result<Root> {
        let bad = || CoxeterError::Parse("root must be {\"coeffs\": [[...], ...]}".into());
        let coords = v.get("coeffs").and_then(|c| c.as_array()).ok_or_else(bad)?;
        let mut out = Vec::with_capacity(coords.len());
        for c in coords {
            let parts: Vec<String> = c
                .as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|p| match p {
                    Value::String(s) => Ok(s.clone()),
                    Value::Number(n) => Ok(n.to_string()),
                    _ => Err(bad()),
                })
                .collect::<Result<_>>()?;
            out.push(AlgebraicReal::from_coeff_strings(field, &parts)?);
        }
        Ok(Root(out))
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// A group element, stored as its ShortLex normal word.
#[derive(Clone)]
pub struct Element {
    system: u64,
    word: Arc<[u8]>,
    left: GenSet,
    right: GenSet,
}

impl Element {
    pub(crate) fn from_parts(system: u64, word: Vec<u8>, left: GenSet, right: GenSet) -> Element {
        Element { system, word: Arc::from(word), left, right }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.word.iter().map(|&s| s as usize)
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn descents_left(&self) -> GenSet {
        self.left
    }

    pub fn descents_right(&self) -> GenSet {
        self.right
    }

    pub fn system_id(&self) -> u64 {
        self.system
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.system == other.system && self.word == other.word
    }
}
impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.system.hash(state);
        self.word.hash(state);
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// ShortLex.
impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.system.cmp(&other.system))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element{:?}", &self.word[..])
    }
}

static NEXT_SYSTEM_ID: AtomicU64 = AtomicU64::new(1);

/// A Coxeter system with its geometric representation.
#[derive(Debug)]
pub struct CoxeterSystem {
    id: u64,
    names: Vec<String>,
    matrix: CoxeterMatrix,
    field: Arc<Field>,
    gram: Vec<AlgebraicReal>,
    /// `2 * gram`, the coefficient used by every reflection.
    two_gram: Vec<AlgebraicReal>,
    simple: Vec<Root>,
}

impl CoxeterSystem {
    pub fn new(names: Vec<String>, matrix: CoxeterMatrix) -> Result<Self> {
        let n = matrix.rank();
        if names.len() != n {
            return Err(CoxeterError::InvalidMatrix(format!(
                "{} generator names for a rank {} matrix",
                names.len(),
                n
            )));
        }
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() || a.contains(',') || a.chars().any(char::is_whitespace) {
                return Err(CoxeterError::InvalidMatrix(format!("bad generator name '{}'", a)));
            }
            if names[..i].contains(a) {
                return Err(CoxeterError::InvalidMatrix(format!("duplicate generator name '{}'", a)));
            }
        }
        let field = Field::get(matrix.field_order());
        let mut gram = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = if i == j { AlgebraicReal::one(&field) } else { embed_cos(&field, matrix.get(i, j).finite()) };
                gram.push(v);
            }
        }
        let two = BigRational::from_integer(2.into());
        let two_gram = gram.iter().map(|g| g.scale(&two)).collect();
        let simple = (0..n)
            .map(|i| {
                let mut c = vec![AlgebraicReal::zero(&field); n];
                c[i] = AlgebraicReal::one(&field);
                Root(c)
            })
            .collect();
        Ok(CoxeterSystem {
            id: NEXT_SYSTEM_ID.fetch_add(1, AtomicOrdering::Relaxed),
            names,
            matrix,
            field,
            gram,
            two_gram,
            simple,
        })
    }

    /// Generators named `s0, s1, ...` or, for rank at most 26, by a short alphabet.
    pub fn with_default_names(matrix: CoxeterMatrix) -> Result<Self> {
        let n = matrix.rank();
        let names: Vec<String> = if n <= 4 {
            ["s", "t", "u", "v"][..n].iter().map(|s| s.to_string()).collect()
        } else if n <= 26 {
            (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
        } else {
            (0..n).map(|i| format!("s{}", i)).collect()
        };
        Self::new(names, matrix)
    }

    /// Parse `{"generators": [...], "matrix": [[...]]}`; 0 or "inf" encode an infinite label.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| CoxeterError::Parse(e.to_string()))?;
        let gens = v
            .get("generators")
            .and_then(|g| g.as_array())
            .ok_or_else(|| CoxeterError::Parse("missing \"generators\" array".into()))?;
        let names = gens
            .iter()
            .map(|g| g.as_str().map(str::to_string).ok_or_else(|| CoxeterError::Parse("generator names must be strings".into())))
            .collect::<Result<Vec<_>>>()?;
        let rows = v
            .get("matrix")
            .and_then(|m| m.as_array())
            .ok_or_else(|| CoxeterError::Parse("missing \"matrix\" array".into()))?;
        let mut matrix = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row.as_array().ok_or_else(|| CoxeterError::Parse("matrix rows must be arrays".into()))?;
            let mut out = Vec::with_capacity(row.len());
            for e in row {
                let l = match e {
                    Value::Number(n) => Label::parse(&n.to_string())?,
                    Value::String(s) => Label::parse(s)?,
                    Value::Null => Label::Infinite,
                    _ => return Err(CoxeterError::Parse("matrix entries must be numbers or \"inf\"".into())),
                };
                out.push(l);
            }
            matrix.push(out);
        }
        Self::new(names, CoxeterMatrix::new(matrix)?)
    }

    pub fn to_json(&self) -> Value {
        let n = self.rank();
        let rows: Vec<Vec<Value>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match self.matrix.get(i, j) {
                        Label::Finite(m) => json!(m),
                        Label::Infinite => json!("inf"),
                    })
                    .collect()
            })
            .collect();
        json!({"generators": self.names, "matrix": rows})
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn label(&self, s: usize, t: usize) -> Label {
        self.matrix.get(s, t)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    /// `<alpha_s, alpha_t>`.
    pub fn gram(&self, s: usize, t: usize) -> &AlgebraicReal {
        &self.gram[s * self.rank() + t]
    }

    pub fn scalar(&self, v: i64) -> AlgebraicReal {
        AlgebraicReal::from_integer(&self.field, v)
    }

    pub fn simple_root(&self, s: usize) -> &Root {
        &self.simple[s]
    }

    pub fn zero_vector(&self) -> Root {
        Root(vec![AlgebraicReal::zero(&self.field); self.rank()])
    }

    /// Build a vector from rational-coefficient polynomials in theta per coordinate.
    pub fn vector(&self, coords: Vec<AlgebraicReal>) -> Root {
        assert_eq!(coords.len(), self.rank());
        Root(coords)
    }

    /// `<v, alpha_s>`.
    pub fn form_simple(&self, v: &Root, s: usize) -> AlgebraicReal {
        let n = self.rank();
        let mut acc = AlgebraicReal::zero(&self.field);
        for t in 0..n {
            let c = &v.0[t];
            if c.is_zero() {
                continue;
            }
            let g = &self.gram[t * n + s];
            if g.is_zero() {
                continue;
            }
            acc = acc.add_ref(&c.mul_ref(g));
        }
        acc
    }

    /// `<u, v>`.
    pub fn form(&self, u: &Root, v: &Root) -> AlgebraicReal {
        let mut acc = AlgebraicReal::zero(&self.field);
        for s in 0..self.rank() {
            if u.0[s].is_zero() {
                continue;
            }
            acc = acc.add_ref(&u.0[s].mul_ref(&self.form_simple(v, s)));
        }
        acc
    }

    /// `s v = v - 2<v, alpha_s> alpha_s`; only coordinate `s` changes.
    pub fn reflect(&self, s: usize, v: &Root) -> Root {
        let n = self.rank();
        let mut acc = AlgebraicReal::zero(&self.field);
        for t in 0..n {
            let c = &v.0[t];
            if c.is_zero() {
                continue;
            }
            let g = &self.two_gram[t * n + s];
            if g.is_zero() {
                continue;
            }
            acc = acc.add_ref(&c.mul_ref(g));
        }
        let mut out = v.clone();
        out.0[s] = out.0[s].sub_ref(&acc);
        out
    }

    /// `s_beta v = v - 2<v, beta> beta` for a unit vector `beta`.
    pub fn reflect_by(&self, beta: &Root, v: &Root) -> Root {
        let c = self.form(v, beta);
        let two = BigRational::from_integer(2.into());
        v.sub_scaled(&c.scale(&two), beta)
    }

    pub fn act_word(&self, word: &[u8], v: &Root) -> Root {
        let mut out = v.clone();
        for &s in word.iter().rev() {
            out = self.reflect(s as usize, &out);
        }
        out
    }

    pub fn act(&self, w: &Element, v: &Root) -> Root {
        self.act_word(&w.word, v)
    }

    /// Images of the simple roots under `w`: column `t` is `w alpha_t`.
    pub fn columns(&self, word: &[u8]) -> Vec<Root> {
        let mut cols: Vec<Root> = self.simple.clone();
        for &s in word {
            self.right_multiply_columns(&mut cols, s as usize);
        }
        cols
    }

    /// Replace the columns of `w` by those of `ws`.
    pub fn right_multiply_columns(&self, cols: &mut [Root], s: usize) {
        let n = self.rank();
        let pivot = cols[s].clone();
        for (t, col) in cols.iter_mut().enumerate() {
            if t == s {
                *col = pivot.neg();
            } else {
                let g = &self.two_gram[t * n + s];
                if !g.is_zero() {
                    *col = col.sub_scaled(g, &pivot);
                }
            }
        }
    }

    /// Root sequence `s_1 ... s_{i-1} alpha_{s_i}` of a word.
    pub fn root_sequence(&self, word: &[u8]) -> Vec<Root> {
        let mut cols: Vec<Root> = self.simple.clone();
        let mut out = Vec::with_capacity(word.len());
        for &s in word {
            out.push(cols[s as usize].clone());
            self.right_multiply_columns(&mut cols, s as usize);
        }
        out
    }

    pub fn identity(&self) -> Element {
        Element { system: self.id, word: Arc::from(Vec::new()), left: GenSet::default(), right: GenSet::default() }
    }

    pub fn generator(&self, s: usize) -> Element {
        assert!(s < self.rank());
        let mut g = GenSet::default();
        g.insert(s);
        Element { system: self.id, word: Arc::from(vec![s as u8]), left: g, right: g }
    }

    pub fn generators(&self) -> Vec<Element> {
        (0..self.rank()).map(|s| self.generator(s)).collect()
    }

    /// Reduce an arbitrary word and return its ShortLex normal form.
    pub fn normalize(&self, letters: &[usize]) -> Result<Element> {
        let n = self.rank();
        if let Some(&bad) = letters.iter().find(|&&s| s >= n) {
            return Err(CoxeterError::GeneratorIndex(bad));
        }
        let mut word: Vec<u8> = Vec::with_capacity(letters.len());
        let mut roots: Vec<Root> = Vec::with_capacity(letters.len());
        let mut cols: Vec<Root> = self.simple.clone();
        for &s in letters {
            let img = &cols[s];
            if img.is_positive() {
                roots.push(img.clone());
                self.right_multiply_columns(&mut cols, s);
                word.push(s as u8);
            } else {
                // exchange: w s deletes the letter whose root is -w alpha_s
                let beta = img.neg();
                let i = roots
                    .iter()
                    .position(|r| *r == beta)
                    .ok_or_else(|| CoxeterError::Invariant("exchange root missing from root sequence".into()))?;
                word.remove(i);
                roots.remove(i);
                for r in roots[i..].iter_mut() {
                    *r = self.reflect_by(&beta, r);
                }
                for c in cols.iter_mut() {
                    *c = self.reflect_by(&beta, c);
                }
            }
        }
        let mut right = GenSet::default();
        for (t, c) in cols.iter().enumerate() {
            if c.is_negative() {
                right.insert(t);
            }
        }
        Ok(self.canonical_from_inversions(roots, right))
    }

    /// Greedy ShortLex rebuild from the inversion set of a reduced element.
    fn canonical_from_inversions(&self, mut inv: Vec<Root>, right: GenSet) -> Element {
        let mut left = GenSet::default();
        for r in &inv {
            if let Some(s) = r.as_simple() {
                left.insert(s);
            }
        }
        let mut out: Vec<u8> = Vec::with_capacity(inv.len());
        while !inv.is_empty() {
            let (pos, s) = inv
                .iter()
                .enumerate()
                .filter_map(|(i, r)| r.as_simple().map(|s| (i, s)))
                .min_by_key(|&(_, s)| s)
                .expect("a nontrivial element has a left descent");
            out.push(s as u8);
            inv.swap_remove(pos);
            for r in inv.iter_mut() {
                *r = self.reflect(s, r);
            }
        }
        Element { system: self.id, word: Arc::from(out), left, right }
    }

    /// Wrap a word already known to be ShortLex normal, recomputing descents.
    pub fn element_from_normal_word(&self, word: Vec<u8>) -> Element {
        let cols = self.columns(&word);
        let mut right = GenSet::default();
        for (t, c) in cols.iter().enumerate() {
            if c.is_negative() {
                right.insert(t);
            }
        }
        let mut left = GenSet::default();
        for r in self.root_sequence(&word) {
            if let Some(s) = r.as_simple() {
                left.insert(s);
            }
        }
        Element { system: self.id, word: Arc::from(word), left, right }
    }

    fn check(&self, x: &Element) -> Result<()> {
        if x.system != self.id {
            Err(CoxeterError::MixedSystems)
        } else {
            Ok(())
        }
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        let letters: Vec<usize> = x.letters().chain(y.letters()).collect();
        self.normalize(&letters)
    }

    pub fn inverse(&self, x: &Element) -> Element {
        let letters: Vec<usize> = x.word.iter().rev().map(|&s| s as usize).collect();
        self.normalize(&letters).expect("inverse of a valid element")
    }

    /// `s x`, with the length change.
    pub fn left_multiply(&self, s: usize, x: &Element) -> Element {
        let mut letters = Vec::with_capacity(x.length() + 1);
        letters.push(s);
        letters.extend(x.letters());
        self.normalize(&letters).expect("valid generator")
    }

    pub fn right_multiply(&self, x: &Element, s: usize) -> Element {
        let mut letters: Vec<usize> = x.letters().collect();
        letters.push(s);
        self.normalize(&letters).expect("valid generator")
    }

    /// Inversion set of `w` in root-sequence order of its normal word.
    pub fn inversion_roots(&self, w: &Element) -> Vec<Root> {
        self.root_sequence(&w.word)
    }

    /// Parse a word against the generator names.
    ///
    /// Comma-separated names are always accepted; otherwise each character is a
    /// generator when all names are single characters. `e` or an empty string is
    /// the identity unless a generator is named `e`.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let t = text.trim();
        let lookup = |name: &str| {
            self.names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| CoxeterError::UnknownGenerator(name.to_string()))
        };
        if t.is_empty() || (t == "e" && !self.names.iter().any(|n| n == "e")) {
            return Ok(Vec::new());
        }
        if t.contains(',') {
            return t
                .split(',')
                .map(|p| {
                    let p = p.trim();
                    if p.is_empty() {
                        Err(CoxeterError::MalformedWord(text.to_string()))
                    } else {
                        lookup(p)
                    }
                })
                .collect();
        }
        if let Ok(i) = lookup(t) {
            return Ok(vec![i]);
        }
        if self.names.iter().all(|n| n.chars().count() == 1) {
            return t.chars().map(|c| lookup(&c.to_string())).collect();
        }
        Err(CoxeterError::MalformedWord(text.to_string()))
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let w = self.parse_word(text)?;
        self.normalize(&w)
    }

    /// Render a word; single-character names are concatenated, others comma-separated.
    pub fn word_string(&self, word: &[u8]) -> String {
        if word.is_empty() {
            return "e".to_string();
        }
        let single = self.names.iter().all(|n| n.chars().count() == 1);
        let parts: Vec<&str> = word.iter().map(|&s| self.names[s as usize].as_str()).collect();
        if single {
            parts.concat()
        } else {
            parts.join(",")
        }
    }

    pub fn element_string(&self, w: &Element) -> String {
        self.word_string(&w.word)
    }

    /// Alternating word `a b a b ...` of length `n`.
    pub fn alternating(&self, a: usize, b: usize, n: usize) -> Vec<usize> {
        (0..n).map(|i| if i % 2 == 0 { a } else { b }).collect()
    }

    /// Sanity check used by property tests: every coordinate shares one sign.
    pub fn is_root_like(&self, v: &Root) -> bool {
        v.has_uniform_sign() && self.form(v, v).is_one()
    }

    /// Coefficient of `v` along `alpha_s`.
    pub fn coefficient(&self, v: &Root, s: usize) -> AlgebraicReal {
        v.0[s].clone()
    }
}

