//! The reduced-word automaton on elementary inversion sets, its minimization
//! to cone types, gate extraction and growth series.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::catalog::{Catalog, RootSet};
use crate::error::{CoxeterError, Result};
use crate::system::{CoxeterSystem, Element, Root};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StateLabel {
    /// `E(w^{-1})` for the words reaching the state.
    Roots(Vec<Root>),
    /// A cone type, numbered in order of discovery.
    Class(usize),
}

/// A deterministic automaton with every state accepting and a partial transition map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedWordAutomaton {
    pub alphabet: Vec<String>,
    pub start: usize,
    pub labels: Vec<StateLabel>,
    /// `delta[q][s]`, `None` for a rejected letter.
    pub delta: Vec<Vec<Option<usize>>>,
    /// Shortest word reaching each state, when known.
    pub gate_words: Vec<Option<String>>,
}

impl ReducedWordAutomaton {
    pub fn state_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_minimized(&self) -> bool {
        matches!(self.labels.first(), Some(StateLabel::Class(_)))
    }

    /// State reached by reading `word` from the start, if the word is accepted.
    pub fn run(&self, word: impl IntoIterator<Item = usize>) -> Option<usize> {
        let mut q = self.start;
        for s in word {
            q = self.delta[q][s]?;
        }
        Some(q)
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.run(word.iter().copied()).is_some()
    }

    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (q, row) in self.delta.iter().enumerate() {
            for (s, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    out.push((q, s, *t));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let states: Vec<Value> = self
            .labels
            .iter()
            .enumerate()
            .map(|(id, label)| {
                let mut v = match label {
                    StateLabel::Roots(r) => json!({"id": id, "roots": r.iter().map(|x| x.to_json()).collect::<Vec<_>>()}),
                    StateLabel::Class(c) => json!({"id": id, "class": c}),
                };
                if let Some(w) = &self.gate_words[id] {
                    v["gate_word"] = json!(w);
                }
                v
            })
            .collect();
        let edges: Vec<Value> =
            self.edges().iter().map(|&(q, s, t)| json!([q, self.alphabet[s], t])).collect();
        json!({"alphabet": self.alphabet, "start": self.start, "states": states, "edges": edges})
    }

    pub fn from_json(sys: &CoxeterSystem, v: &Value) -> Result<Self> {
        let err = |m: &str| CoxeterError::Parse(format!("automaton: {}", m));
        let alphabet: Vec<String> = v["alphabet"]
            .as_array()
            .ok_or_else(|| err("missing alphabet"))?
            .iter()
            .map(|a| a.as_str().map(str::to_string).ok_or_else(|| err("alphabet entries must be strings")))
            .collect::<Result<_>>()?;
        let start = v["start"].as_u64().ok_or_else(|| err("missing start"))? as usize;
        let states = v["states"].as_array().ok_or_else(|| err("missing states"))?;
        let n = states.len();
        let mut labels = vec![StateLabel::Class(0); n];
        let mut gate_words = vec![None; n];
        for st in states {
            let id = st["id"].as_u64().ok_or_else(|| err("state without id"))? as usize;
            if id >= n {
                return Err(err("state id out of range"));
            }
            labels[id] = if let Some(c) = st.get("class") {
                StateLabel::Class(c.as_u64().ok_or_else(|| err("bad class"))? as usize)
            } else {
                let roots = st["roots"].as_array().ok_or_else(|| err("state without roots or class"))?;
                StateLabel::Roots(roots.iter().map(|r| Root::from_json(sys.field(), r)).collect::<Result<_>>()?)
            };
            gate_words[id] = st.get("gate_word").and_then(|w| w.as_str()).map(str::to_string);
        }
        let mut delta = vec![vec![None; alphabet.len()]; n];
        for e in v["edges"].as_array().ok_or_else(|| err("missing edges"))? {
            let q = e[0].as_u64().ok_or_else(|| err("bad edge"))? as usize;
            let t = e[2].as_u64().ok_or_else(|| err("bad edge"))? as usize;
            let name = e[1].as_str().ok_or_else(|| err("bad edge"))?;
            let s = alphabet.iter().position(|a| a == name).ok_or_else(|| err("edge letter not in alphabet"))?;
            if q >= n || t >= n {
                return Err(err("edge endpoint out of range"));
            }
            delta[q][s] = Some(t);
        }
        if start >= n {
            return Err(err("start out of range"));
        }
        Ok(ReducedWordAutomaton { alphabet, start, labels, delta, gate_words })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
        for (id, label) in self.labels.iter().enumerate() {
            let text = match label {
                StateLabel::Roots(r) if r.is_empty() => "{}".to_string(),
                StateLabel::Roots(r) => {
                    format!("{{{}}}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
                }
                StateLabel::Class(c) => match &self.gate_words[id] {
                    Some(w) => format!("T{} [{}]", c, w),
                    None => format!("T{}", c),
                },
            };
            let shape = if id == self.start { ", shape=doublecircle" } else { "" };
            writeln!(out, "  {} [label=\"{}\"{}];", id, text.replace('"', "\\\""), shape).unwrap();
        }
        for (q, s, t) in self.edges() {
            writeln!(out, "  {} -> {} [label=\"{}\"];", q, t, self.alphabet[s]).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// States `E(w^{-1})` reachable from the empty set; reading `s` from `A` is
/// allowed when `alpha_s` is not in `A` and leads to `({alpha_s} + sA) & E`.
pub fn build_bh_automaton(cat: &Catalog) -> ReducedWordAutomaton {
    let sys = cat.sys();
    let n = sys.rank();
    let (e_order, e) = cat.elementary();
    let rank_of: HashMap<u32, usize> = e_order.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let mut states: Vec<RootSet> = vec![RootSet::new()];
    let mut index: HashMap<RootSet, usize> = HashMap::from([(RootSet::new(), 0)]);
    let mut delta: Vec<Vec<Option<usize>>> = Vec::new();
    let mut q = 0;
    while q < states.len() {
        let a = states[q].clone();
        let mut row = vec![None; n];
        for (s, slot) in row.iter_mut().enumerate() {
            let alpha = cat.simple(s);
            if a.contains(alpha) {
                continue;
            }
            let mut next = RootSet::singleton(alpha);
            for b in a.iter() {
                let r = cat.reflect(s, b);
                if e.contains(r) {
                    next.insert(r);
                }
            }
            let t = *index.entry(next.clone()).or_insert_with(|| {
                states.push(next);
                states.len() - 1
            });
            *slot = Some(t);
        }
        delta.push(row);
        q += 1;
    }
    let labels = states
        .iter()
        .map(|set| {
            let mut ids: Vec<u32> = set.iter().collect();
            ids.sort_by_key(|id| rank_of[id]);
            StateLabel::Roots(ids.iter().map(|&id| cat.root(id)).collect())
        })
        .collect();
    let count = states.len();
    ReducedWordAutomaton { alphabet: sys.names().to_vec(), start: 0, labels, delta, gate_words: vec![None; count] }
}

/// Moore refinement with an implicit rejecting sink. Returns the quotient,
/// whose states are numbered in breadth-first order from the start, and the
/// map from old states to new ones.
pub fn minimize(a: &ReducedWordAutomaton) -> (ReducedWordAutomaton, Vec<usize>) {
    let n = a.state_count();
    let k = a.alphabet.len();
    let sink = n;
    let target = |q: usize, s: usize| if q == sink { sink } else { a.delta[q][s].unwrap_or(sink) };
    let mut class: Vec<usize> = (0..=n).map(|q| usize::from(q == sink)).collect();
    let mut count = if n == 0 { 1 } else { 2 };
    loop {
        let mut sig_index: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut next = vec![0; n + 1];
        for q in 0..=n {
            let sig = (class[q], (0..k).map(|s| class[target(q, s)]).collect::<Vec<_>>());
            let len = sig_index.len();
            next[q] = *sig_index.entry(sig).or_insert(len);
        }
        let new_count = sig_index.len();
        class = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    // renumber the accepting classes breadth-first from the start
    let mut order: HashMap<usize, usize> = HashMap::new();
    let mut queue = std::collections::VecDeque::from([a.start]);
    let mut reps = Vec::new();
    order.insert(class[a.start], 0);
    reps.push(a.start);
    while let Some(q) = queue.pop_front() {
        for s in 0..k {
            if let Some(t) = a.delta[q][s] {
                if let std::collections::hash_map::Entry::Vacant(e) = order.entry(class[t]) {
                    e.insert(reps.len());
                    reps.push(t);
                    queue.push_back(t);
                }
            }
        }
    }
    let map: Vec<usize> = (0..n).map(|q| order[&class[q]]).collect();
    let delta = reps
        .iter()
        .map(|&q| (0..k).map(|s| a.delta[q][s].map(|t| map[t])).collect())
        .collect();
    let m = reps.len();
    let quotient = ReducedWordAutomaton {
        alphabet: a.alphabet.clone(),
        start: 0,
        labels: (0..m).map(StateLabel::Class).collect(),
        delta,
        gate_words: vec![None; m],
    };
    (quotient, map)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateEntry {
    pub class: usize,
    /// Shortest element whose word reaches the class.
    pub minimal: Element,
    /// `minimal^{-1}`.
    pub gate: Element,
}

#[derive(Debug, Clone)]
pub struct GateTable {
    pub entries: Vec<GateEntry>,
}

impl GateTable {
    pub fn gates(&self) -> Vec<Element> {
        let mut g: Vec<Element> = self.entries.iter().map(|e| e.gate.clone()).collect();
        g.sort();
        g
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Breadth-first search over the classes of a minimized automaton. The first
/// element reaching each class is its minimal element; every other
/// arrival of the same length must be the same element.
pub fn gates(sys: &CoxeterSystem, min: &ReducedWordAutomaton) -> Result<GateTable> {
    let m = min.state_count();
    let mut found: Vec<Option<Element>> = vec![None; m];
    found[min.start] = Some(sys.identity());
    let mut layer = vec![min.start];
    while !layer.is_empty() {
        let mut fresh: Vec<usize> = Vec::new();
        for &c in &layer {
            let x = found[c].clone().expect("layer classes are found");
            for s in 0..min.alphabet.len() {
                let Some(d) = min.delta[c][s] else { continue };
                if found[d].is_some() && !fresh.contains(&d) {
                    continue;
                }
                let y = sys.right_multiply(&x, s);
                match &found[d] {
                    Some(prev) if *prev != y => {
                        return Err(CoxeterError::Invariant(format!(
                            "class {} reached by {} and {} at the same length",
                            d,
                            sys.element_string(prev),
                            sys.element_string(&y)
                        )))
                    }
                    Some(_) => {}
                    None => {
                        found[d] = Some(y);
                        fresh.push(d);
                    }
                }
            }
        }
        layer = fresh;
    }
    let entries = found
        .into_iter()
        .enumerate()
        .map(|(class, x)| {
            let minimal = x.ok_or_else(|| CoxeterError::Invariant(format!("class {} unreachable", class)))?;
            Ok(GateEntry { class, gate: sys.inverse(&minimal), minimal })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GateTable { entries })
}

/// Minimized automaton annotated with the minimal word of each class.
pub fn annotate(sys: &CoxeterSystem, min: &mut ReducedWordAutomaton, table: &GateTable) {
    for e in &table.entries {
        min.gate_words[e.class] = Some(sys.element_string(&e.minimal));
    }
}

/// Same class of the minimized automaton after reading the normal words.
pub fn cone_type_equal(min: &ReducedWordAutomaton, x: &Element, y: &Element) -> bool {
    let cx = min.run(x.letters());
    let cy = min.run(y.letters());
    debug_assert!(cx.is_some() && cy.is_some(), "normal words are reduced");
    cx == cy
}

/// Same answers to "is `l(x w) = l(x) + l(w)`" for every tight gate `w`.
pub fn cone_type_equal_by_tight_gates(cat: &Catalog, tight_gates: &[Element], x: &Element, y: &Element) -> bool {
    let xi = cat.inverse_info(&cat.info(x));
    let yi = cat.inverse_info(&cat.info(y));
    tight_gates.iter().all(|w| {
        let wi = cat.info(w);
        xi.inversions.is_disjoint(&wi.inversions) == yi.inversions.is_disjoint(&wi.inversions)
    })
}

/// Number of accepted words of each length `0..=n`.
pub fn growth_series(a: &ReducedWordAutomaton, n: usize) -> Vec<BigUint> {
    let mut counts = vec![BigUint::zero(); a.state_count()];
    counts[a.start] = BigUint::one();
    let mut out = Vec::with_capacity(n + 1);
    for len in 0..=n {
        out.push(counts.iter().sum());
        if len == n {
            break;
        }
        let mut next = vec![BigUint::zero(); a.state_count()];
        for (q, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for t in a.delta[q].iter().flatten() {
                next[*t] += c;
            }
        }
        counts = next;
    }
    out
}
