//! Checks against published data and exhaustive property checks.
//!
//! Every check builds its own group, so checks are independent and can run
//! on separate threads.

use std::collections::{BTreeSet, HashSet};
use std::rc::Rc;
use std::sync::Arc;

use crate::analysis::GroupAnalysis;
use crate::automata;
use crate::catalog::{Catalog, ElementInfo, RootSet};
use crate::error::{CoxeterError, Result};
use crate::field::AlgebraicReal;
use crate::inversions;
use crate::presets::{self, PUBLISHED_COUNTS, PUBLISHED_COUNTS_EXTRA};
use crate::shadows::{self, ShadowSet, DEFAULT_GARSIDE_JOIN_CAP};
use crate::system::{CoxeterSystem, Element, Root};
use crate::weak_order;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn from(name: &str, r: Result<String>) -> Self {
        match r {
            Ok(detail) => CheckResult { name: name.to_string(), passed: true, detail },
            Err(e) => CheckResult { name: name.to_string(), passed: false, detail: e.to_string() },
        }
    }
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{} {}: {}", tag, self.name, self.detail)
    }
}

/// A named check that can be run on any thread.
pub struct Check {
    pub name: String,
    run: Box<dyn Fn() -> Result<String> + Send + Sync>,
}

impl Check {
    pub fn new(name: impl Into<String>, run: impl Fn() -> Result<String> + Send + Sync + 'static) -> Self {
        Check { name: name.into(), run: Box::new(run) }
    }

    pub fn run(&self) -> CheckResult {
        CheckResult::from(&self.name, (self.run)())
    }
}

fn fail(msg: impl Into<String>) -> CoxeterError {
    CoxeterError::Invariant(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

fn analysis(name: &str) -> Result<GroupAnalysis> {
    Ok(GroupAnalysis::new(Arc::new(presets::preset(name)?)))
}

fn words(sys: &CoxeterSystem, set: &[Element]) -> BTreeSet<String> {
    set.iter().map(|x| sys.element_string(x)).collect()
}

fn element(sys: &CoxeterSystem, letters: &[usize]) -> Result<Element> {
    sys.normalize(letters)
}

/// Elements of the parabolic subgroup on `a, b` with the identity and the
/// longest element removed; `m` must be finite.
fn dihedral_interior(sys: &CoxeterSystem, a: usize, b: usize, m: usize) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for n in 1..m {
        out.push(element(sys, &sys.alternating(a, b, n))?);
        out.push(element(sys, &sys.alternating(b, a, n))?);
    }
    Ok(out)
}

/// Count-table row for one preset.
pub fn check_table_row(name: &str, expected: [usize; 6]) -> Result<String> {
    let g = analysis(name)?;
    let row = g.table_row()?;
    ensure(row.as_array() == expected, || format!("{} computed {}, expected {:?}", name, row, expected))?;
    Ok(row.to_string())
}

/// `|Gamma| = |U|` equal to `expected`, `U = Gamma`, and every gate ultra-low.
pub fn check_rank3_ultra_low(name: &str, expected: usize) -> Result<String> {
    let g = analysis(name)?;
    let gates = g.gates()?;
    let mut ultra = Vec::new();
    for x in g.low().iter() {
        if g.shadows().is_ultra_low(x)? {
            ultra.push(x.clone());
        }
    }
    let ultra = ShadowSet::new(shadows::ShadowKind::Custom, ultra);
    ensure(gates.len() == expected, || format!("|Gamma| = {}, expected {}", gates.len(), expected))?;
    ensure(ultra.len() == expected, || format!("|U| = {}, expected {}", ultra.len(), expected))?;
    ensure(ultra.elements() == gates.elements(), || "U differs from Gamma".into())?;
    Ok(format!("|Gamma| = |U| = {}", expected))
}

/// `|Gamma0| = 2|E| - rank`.
pub fn check_tight_gate_formula(name: &str) -> Result<String> {
    let g = analysis(name)?;
    let e = g.catalog().elementary().0.len();
    let n = g.sys().rank();
    let t = g.tight_gates().len();
    ensure(t + n == 2 * e, || format!("{}: |Gamma0| = {}, 2|E| - |S| = {}", name, t, 2 * e - n))?;
    Ok(format!("|Gamma0| = {} = 2*{} - {}", t, e, n))
}

/// Right-angled: tight gates are exactly the generators.
pub fn check_right_angled(name: &str) -> Result<String> {
    let g = analysis(name)?;
    let got = words(g.sys(), g.tight_gates().elements());
    let want = words(g.sys(), &g.sys().generators());
    ensure(got == want, || format!("{}: Gamma0 = {:?}", name, got))?;
    Ok("Gamma0 = S".to_string())
}

/// Complete graph: tight gates are the finite dihedral parabolics without
/// their identities and longest elements.
pub fn check_complete_graph(name: &str) -> Result<String> {
    let g = analysis(name)?;
    let sys = g.sys();
    let mut want = BTreeSet::new();
    for a in 0..sys.rank() {
        for b in a + 1..sys.rank() {
            let m = sys.label(a, b).finite().ok_or_else(|| fail("infinite label"))? as usize;
            want.extend(words(sys, &dihedral_interior(sys, a, b, m)?));
        }
    }
    let got = words(sys, g.tight_gates().elements());
    ensure(got == want, || format!("{}: Gamma0 = {:?}, expected {:?}", name, got, want))?;
    Ok(format!("Gamma0 = union of dihedral interiors ({})", got.len()))
}

/// The tight gates of a rank 3 linear group with labels `a = m(s,t)` and
/// `b = m(t,u)`: the dihedral interiors plus `extra` with final roots `roots`.
fn check_fixture(name: &str, a: usize, b: usize, extra: Vec<Vec<usize>>, roots: Vec<[AlgebraicReal; 3]>) -> Result<String> {
    let g = analysis(name)?;
    let sys = g.sys();
    let cat = g.catalog();
    let (s, t, u) = (0, 1, 2);
    let mut want: Vec<Element> = dihedral_interior(sys, s, t, a)?;
    want.extend(dihedral_interior(sys, t, u, b)?);
    let mut elements = Vec::new();
    for w in &extra {
        let x = element(sys, w)?;
        ensure(x.length() == w.len(), || format!("fixture word {:?} is not reduced", w))?;
        elements.push(x);
    }
    let extra = elements;
    want.extend(extra.iter().cloned());
    let got = words(sys, g.tight_gates().elements());
    let want_words = words(sys, &want);
    ensure(got == want_words, || format!("{}: Gamma0 = {:?}, expected {:?}", name, got, want_words))?;
    for (x, r) in extra.iter().zip(&roots) {
        let info = cat.info(x);
        let fr = info.final_root().ok_or_else(|| fail("fixture element is not tight"))?;
        let expected = Root::new(r.to_vec());
        ensure(cat.root(fr) == expected, || {
            format!("{}: final root of {} is {}, expected {}", name, sys.element_string(x), cat.root(fr), expected)
        })?;
    }
    Ok(format!("{} tight gates and {} final roots match", got.len(), roots.len()))
}

fn with(prefix: &[usize], tail: Vec<usize>) -> Vec<usize> {
    let mut w = prefix.to_vec();
    w.extend(tail);
    w
}

pub fn check_fixture_type_i() -> Result<String> {
    let b = 7;
    let sys = presets::preset("rank3:I:3:7")?;
    let f = sys.field().clone();
    let (s, t, u) = (0, 1, 2);
    let tu = |n| sys.alternating(t, u, n);
    let c = AlgebraicReal::two_cos_pi_over(&f, 7);
    let one = AlgebraicReal::one(&f);
    let c2m1 = c.mul_ref(&c).sub_ref(&one);
    let extra = vec![
        vec![u, t, s],
        with(&[s], tu(b - 2)),
        with(&[u, s], tu(b - 2)),
        with(&[t, u, s], tu(b - 2)),
        with(&[u, t, u, s], tu(b - 2)),
        with(&[s], tu(b - 1)),
    ];
    let roots = vec![
        [one.clone(), one.clone(), c.clone()],
        [c.clone(), c.clone(), c2m1.clone()],
        [c.clone(), c.clone(), one.clone()],
        [c.clone(), c.clone(), one.clone()],
        [c.clone(), c.clone(), c2m1],
        [one.clone(), one, c],
    ];
    check_fixture("rank3:I:3:7", 3, b, extra, roots)
}

fn c1_one_c2(sys: &CoxeterSystem, a: u32, b: u32) -> [AlgebraicReal; 3] {
    let f = sys.field();
    [AlgebraicReal::two_cos_pi_over(f, a), AlgebraicReal::one(f), AlgebraicReal::two_cos_pi_over(f, b)]
}

pub fn check_fixture_type_ii() -> Result<String> {
    let (a, b) = (5, 5);
    let sys = presets::preset("rank3:II:5:5")?;
    let (s, t, u) = (0, 1, 2);
    let extra = vec![with(&[u], sys.alternating(t, s, a - 1)), with(&[s], sys.alternating(t, u, b - 1))];
    let r = c1_one_c2(&sys, a as u32, b as u32);
    check_fixture("rank3:II:5:5", a, b, extra, vec![r.clone(), r])
}

pub fn check_fixture_type_iii() -> Result<String> {
    let (a, b) = (4, 5);
    let sys = presets::preset("rank3:III:4:5")?;
    let (s, t, u) = (0, 1, 2);
    let extra = vec![vec![u, t, s, t], with(&[s], sys.alternating(t, u, b - 1))];
    let r = c1_one_c2(&sys, a as u32, b as u32);
    check_fixture("rank3:III:4:5", a, b, extra, vec![r.clone(), r])
}

/// Linear diagram with `m(t,u)` infinite: `L = Gamma = U = W<s,t> + W<s,u>`.
pub fn check_infinite_label(m_st: usize) -> Result<String> {
    let name = format!("linear:{},inf", m_st);
    let g = analysis(&name)?;
    let sys = g.sys();
    let (s, t, u) = (0, 1, 2);
    let mut want: Vec<Element> = dihedral_interior(sys, s, t, m_st)?;
    want.push(sys.identity());
    want.push(element(sys, &sys.alternating(s, t, m_st))?);
    want.extend([element(sys, &[u])?, element(sys, &[s, u])?]);
    let want = words(sys, &want);
    let low = words(sys, g.low().elements());
    let gates = words(sys, g.gates()?.elements());
    let mut ultra = Vec::new();
    for x in g.low().iter() {
        if g.shadows().is_ultra_low(x)? {
            ultra.push(x.clone());
        }
    }
    let ultra = words(sys, &ultra);
    ensure(low == want, || format!("{}: L = {:?}", name, low))?;
    ensure(gates == want, || format!("{}: Gamma = {:?}", name, gates))?;
    ensure(ultra == want, || format!("{}: U = {:?}", name, ultra))?;
    Ok(format!("L = Gamma = U, {} elements", want.len()))
}

/// The four-cycle `s - t - v - u - s` with `m(u,v) = 4`, on which the words
/// `tvutv, uvutv, utvutv, vutv` and the root `alpha_t + sqrt2 alpha_u + 2 alpha_v`
/// fit together as stated.
pub const SHARED_ROOT_CYCLE: &str = "complete:3,3,2,2,3,4";

/// Four tight gates `a, b, c, d` with the single final root `beta`, where
/// `a, b` and `c, d` meet exactly in `beta` but `a, d` do not.
/// `beta` is given by its `t, u, v` coefficients as integers or `sqrt2`.
fn shared_root_case(name: &str, words: [&str; 4], beta_tuv: [&str; 3]) -> Result<String> {
    let g = analysis(name)?;
    let sys = g.sys();
    let cat = g.catalog();
    let f = sys.field();
    let coeff = |c: &str| match c {
        "sqrt2" => AlgebraicReal::two_cos_pi_over(f, 4),
        n => AlgebraicReal::from_integer(f, n.parse().expect("integer coefficient")),
    };
    let beta = Root::new(vec![AlgebraicReal::zero(f), coeff(beta_tuv[0]), coeff(beta_tuv[1]), coeff(beta_tuv[2])]);
    let tight = g.tight_gates();
    let bid = cat.intern(&beta);
    let mut els = Vec::new();
    for w in words {
        let x = sys.parse_element(w)?;
        ensure(x.length() == w.len(), || format!("{} is not reduced", w))?;
        ensure(tight.contains(&x), || format!("{} is not a tight gate", w))?;
        ensure(cat.info(&x).final_roots == RootSet::singleton(bid), || format!("final roots of {} are not {{{}}}", w, beta))?;
        els.push(cat.info(&x).inversions.clone());
    }
    ensure(els[0].meets_exactly(&els[1], bid), || "Phi(a) & Phi(b) != {beta}".into())?;
    ensure(els[2].meets_exactly(&els[3], bid), || "Phi(c) & Phi(d) != {beta}".into())?;
    ensure(!els[0].meets_exactly(&els[3], bid), || "Phi(a) & Phi(d) = {beta}".into())?;
    Ok(format!("{}: {:?} tight with final root {}; a,b and c,d meet in it, a,d do not", name, words, beta))
}

pub fn check_shared_final_root() -> Result<String> {
    let verbatim = shared_root_case(SHARED_ROOT_CYCLE, ["tvutv", "uvutv", "utvutv", "vutv"], ["1", "sqrt2", "2"])?;
    // the same configuration on the cycle s - t - u - v - s, with u and v exchanged
    let relabeled = shared_root_case("cycle:3,3,4,3", ["tutvu", "vutvu", "tvutvu", "utvu"], ["1", "2", "sqrt2"])?;
    Ok(format!("{}; {}", verbatim, relabeled))
}

/// Tight gates from the search agree with the tight gates of the automaton,
/// and the smallest Garside shadow is the gate set.
pub fn check_oracles(name: &str) -> Result<String> {
    let g = analysis(name)?;
    let from_automaton = g.tight_gates_from_automaton()?;
    ensure(from_automaton.elements() == g.tight_gates().elements(), || {
        format!("{}: search found {}, automaton {}", name, g.tight_gates().len(), from_automaton.len())
    })?;
    let garside = g.shadows().smallest_garside_shadow(DEFAULT_GARSIDE_JOIN_CAP)?;
    let gates = g.gates()?;
    ensure(garside.elements() == gates.elements(), || {
        format!("{}: smallest Garside shadow has {}, Gamma has {}", name, garside.len(), gates.len())
    })?;
    Ok(format!("Gamma0 ({}) and Gamma ({}) agree", from_automaton.len(), gates.len()))
}

pub const RANK3_FAMILIES: &[(&str, usize)] = &[("rank3:I:3:7", 35), ("rank3:II:5:5", 26), ("rank3:III:4:5", 25)];
pub const RIGHT_ANGLED_SQUARE: &str = "right-angled:4:0-1,1-2,2-3,3-0";
pub const COMPLETE_TRIANGLE: &str = "complete:3,3,3";
pub const INFINITE_LABEL_CASES: &[usize] = &[3, 4, 5];

pub fn tight_gate_formula_presets() -> Vec<String> {
    let mut v: Vec<String> = (3..=8).map(|m| format!("I2:{}", m)).collect();
    v.extend(RANK3_FAMILIES.iter().map(|(n, _)| n.to_string()));
    v.push(RIGHT_ANGLED_SQUARE.to_string());
    v.push(COMPLETE_TRIANGLE.to_string());
    v
}

/// Checks for criteria 1 to 7, grouped by criterion number.
pub fn published_checks(include_extra: bool) -> Vec<(u32, Check)> {
    let mut out: Vec<(u32, Check)> = Vec::new();
    let rows = PUBLISHED_COUNTS.iter().chain(if include_extra { PUBLISHED_COUNTS_EXTRA } else { &[] });
    for &(name, expected) in rows {
        out.push((1, Check::new(format!("table {}", name), move || check_table_row(name, expected))));
    }
    for &(name, n) in RANK3_FAMILIES {
        out.push((2, Check::new(format!("ultra-low {}", name), move || check_rank3_ultra_low(name, n))));
    }
    for name in tight_gate_formula_presets() {
        let n = name.clone();
        out.push((3, Check::new(format!("tight-gate formula {}", name), move || check_tight_gate_formula(&n))));
    }
    out.push((3, Check::new("right-angled square", || check_right_angled(RIGHT_ANGLED_SQUARE))));
    out.push((3, Check::new("complete triangle", || check_complete_graph(COMPLETE_TRIANGLE))));
    out.push((4, Check::new("fixture type I", check_fixture_type_i)));
    out.push((4, Check::new("fixture type II", check_fixture_type_ii)));
    out.push((4, Check::new("fixture type III", check_fixture_type_iii)));
    for &m in INFINITE_LABEL_CASES {
        out.push((5, Check::new(format!("infinite label m(s,t)={}", m), move || check_infinite_label(m))));
    }
    out.push((6, Check::new("shared final root", check_shared_final_root)));
    let mut oracle_presets: Vec<String> = PUBLISHED_COUNTS.iter().map(|(n, _)| n.to_string()).collect();
    oracle_presets.extend(RANK3_FAMILIES.iter().map(|(n, _)| n.to_string()));
    oracle_presets.extend(tight_gate_formula_presets());
    oracle_presets.extend(INFINITE_LABEL_CASES.iter().map(|m| format!("linear:{},inf", m)));
    oracle_presets.sort();
    oracle_presets.dedup();
    for name in oracle_presets {
        let n = name.clone();
        out.push((7, Check::new(format!("oracles {}", name), move || check_oracles(&n))));
    }
    out
}

// ---------------------------------------------------------------------------
// property checks

/// Canonical join representations are irredundant and refine every other
/// join representation of at most three prefixes.
pub fn check_canonical_join(name: &str, max_len: usize) -> Result<String> {
    let g = analysis(name)?;
    let cat = g.catalog();
    let mut count = 0;
    let mut failure = None;
    weak_order::for_each_element_up_to(cat, max_len, |w| {
        if failure.is_none() {
            if let Err(e) = canonical_join_case(cat, w) {
                failure = Some(e);
            }
            count += 1;
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(format!("{} elements", count))
}

/// Join inside the interval below `w`: the shortest prefix containing every member.
fn join_below(below: &[Rc<ElementInfo>], members: &[&Rc<ElementInfo>]) -> Option<Element> {
    let mut target = RootSet::new();
    for m in members {
        target.union_with(&m.inversions);
    }
    below.iter().filter(|p| target.is_subset(&p.inversions)).min_by_key(|p| p.length()).map(|p| p.element.clone())
}

fn canonical_join_case(cat: &Catalog, w: &Rc<ElementInfo>) -> Result<()> {
    let sys = cat.sys();
    let cj = weak_order::canonical_join_representation(cat, &w.element)?;
    let below = weak_order::prefixes(cat, &w.element);
    let cj_infos: Vec<Rc<ElementInfo>> = cj.iter().map(|x| cat.info(x)).collect();
    let refs: Vec<&Rc<ElementInfo>> = cj_infos.iter().collect();
    let name = sys.element_string(&w.element);
    if w.length() == 0 {
        return ensure(cj.is_empty(), || "identity has a nonempty representation".into());
    }
    ensure(join_below(&below, &refs).as_ref() == Some(&w.element), || format!("{}: representation joins elsewhere", name))?;
    for skip in 0..refs.len() {
        let rest: Vec<&Rc<ElementInfo>> = refs.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, r)| *r).collect();
        ensure(join_below(&below, &rest).as_ref() != Some(&w.element), || format!("{}: representation is redundant", name))?;
    }
    let strict: Vec<&Rc<ElementInfo>> = below.iter().filter(|p| p.length() < w.length()).collect();
    let refines = |a: &[&Rc<ElementInfo>]| {
        cj_infos.iter().all(|j| a.iter().any(|x| j.inversions.is_subset(&x.inversions)))
    };
    for i in 0..strict.len() {
        for j in i + 1..strict.len() {
            let pair = [strict[i], strict[j]];
            if join_below(&below, &pair).as_ref() == Some(&w.element) {
                ensure(refines(&pair), || format!("{}: fails to refine a pair", name))?;
            }
            if strict.len() <= 40 {
                for k in j + 1..strict.len() {
                    let triple = [strict[i], strict[j], strict[k]];
                    if join_below(&below, &triple).as_ref() == Some(&w.element) {
                        ensure(refines(&triple), || format!("{}: fails to refine a triple", name))?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Short inversions from the deletion test and from evolution agree, on
/// both the root-level and interned implementations.
pub fn check_short_inversions(name: &str, max_len: usize) -> Result<String> {
    let g = analysis(name)?;
    let cat = g.catalog();
    let sys = g.sys();
    let mut count = 0;
    let mut failure = None;
    weak_order::for_each_element_up_to(cat, max_len, |w| {
        if failure.is_some() {
            return;
        }
        count += 1;
        let direct: HashSet<Root> = inversions::short_inversions_direct(sys, &w.element).into_iter().collect();
        let evo: HashSet<Root> = inversions::short_inversions_evolution(sys, &w.element).into_iter().collect();
        let interned: HashSet<Root> = cat.roots(&w.short).into_iter().collect();
        let interned_direct: HashSet<Root> = cat.roots(&cat.short_direct(w)).into_iter().collect();
        if direct != evo || direct != interned || direct != interned_direct {
            failure = Some(fail(format!("{}: short inversions disagree", sys.element_string(&w.element))));
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(format!("{} elements up to length {}", count, max_len)),
    }
}

/// For `x` up to `x_len` and every inversion `beta`: the witnesses up to
/// `cap` form a convex set whose members all lie above the minimal witness,
/// and the pool lookup agrees with exhaustive search.
pub fn check_witnesses(name: &str, x_len: usize, cap: usize) -> Result<String> {
    let g = analysis(name)?;
    let cat = g.catalog();
    let sys = g.sys();
    let mut all: Vec<Rc<ElementInfo>> = Vec::new();
    weak_order::for_each_element_up_to(cat, cap, |y| all.push(y.clone()));
    let xs: Vec<Rc<ElementInfo>> = all.iter().filter(|x| x.length() <= x_len && x.length() > 0).cloned().collect();
    let mut pairs = 0;
    for x in &xs {
        for beta in x.inversions.iter() {
            pairs += 1;
            let wit: Vec<Element> = all
                .iter()
                .filter(|y| y.inversions.meets_exactly(&x.inversions, beta))
                .map(|y| y.element.clone())
                .collect();
            let pool = g.shadows().minimal_witness(&x.element, beta)?;
            let label = || format!("{} at {}", sys.element_string(&x.element), cat.root(beta));
            match g.shadows().minimal_witness_search(&x.element, beta, cap) {
                Ok(found) => ensure(found == pool, || format!("{}: witness routes disagree", label()))?,
                Err(CoxeterError::CapExhausted(_)) => {
                    ensure(pool.is_none() || pool.as_ref().unwrap().length() > cap, || format!("{}: search capped", label()))?
                }
                Err(e) => return Err(e),
            }
            match &pool {
                Some(m) => {
                    let mi = cat.info(m);
                    ensure(wit.contains(m), || format!("{}: minimal witness missing", label()))?;
                    ensure(
                        wit.iter().all(|y| mi.inversions.is_subset(&cat.info(y).inversions)),
                        || format!("{}: minimal witness is not below every witness", label()),
                    )?;
                    for (i, y) in wit.iter().enumerate() {
                        for z in &wit[i + 1..] {
                            for p in weak_order::geodesic_elements(cat, y, z, 2 * cap)? {
                                if p.length() <= cap {
                                    ensure(wit.contains(&p), || format!("{}: witnesses not convex", label()))?;
                                }
                            }
                        }
                    }
                }
                None => ensure(wit.is_empty(), || format!("{}: witness exists but none reported", label()))?,
            }
        }
    }
    Ok(format!("{} pairs, witnesses up to length {}", pairs, cap))
}

/// Suffix closure of L, Gamma, L0 and Gamma0.
pub fn check_suffix_closure(name: &str) -> Result<String> {
    let g = analysis(name)?;
    let sys = g.sys();
    let sets = [("L", g.low().clone()), ("Gamma", g.gates()?), ("L0", g.tight_low()), ("Gamma0", g.tight_gates().clone())];
    for (label, set) in &sets {
        // the tight sets are closed once the identity is dropped from the test
        let ok = set.iter().all(|x| {
            x.descents_left().iter().all(|s| {
                let y = sys.left_multiply(s, x);
                y.is_identity() || set.contains(&y)
            })
        });
        ensure(ok, || format!("{}: {} is not closed under suffix", name, label))?;
    }
    Ok("L, Gamma, L0, Gamma0 closed under suffix".to_string())
}

/// Join-irreducibles of `(Gamma, <=)` and `(L, <=)` are the tight members.
pub fn check_join_irreducibles(name: &str) -> Result<String> {
    let g = analysis(name)?;
    let cat = g.catalog();
    let gates = g.gates()?;
    let ji = weak_order::join_irreducibles(cat, gates.elements());
    ensure(ji == g.tight_gates().elements(), || format!("{}: join-irreducibles of Gamma differ from Gamma0", name))?;
    let ji = weak_order::join_irreducibles(cat, g.low().elements());
    ensure(ji == g.tight_low().elements(), || format!("{}: join-irreducibles of L differ from L0", name))?;
    Ok(format!("{} and {} join-irreducibles", g.tight_gates().len(), g.tight_low().len()))
}

/// Dominance by the dihedral chain procedure, by the depth criterion and by
/// direct search over elements, for positive roots of depth at most `max_depth`.
pub fn check_dominance(name: &str, max_depth: usize) -> Result<String> {
    let sys = presets::preset(name)?;
    let cat = Catalog::new(Arc::new(sys));
    let sys = cat.sys();
    let search_len = 2 * max_depth + 2;
    let mut elements: Vec<Rc<ElementInfo>> = Vec::new();
    weak_order::for_each_element_up_to(&cat, search_len, |w| elements.push(w.clone()));
    let inverses: Vec<Element> = elements.iter().map(|w| sys.inverse(&w.element)).collect();
    let mut roots: Vec<Root> = Vec::new();
    for w in &elements {
        for r in cat.roots(&w.inversions) {
            if !roots.contains(&r) && inversions::depth(sys, &r)? <= max_depth {
                roots.push(r);
            }
        }
    }
    let mut pairs = 0;
    for a in &roots {
        for b in &roots {
            if a == b {
                continue;
            }
            pairs += 1;
            let chain = inversions::dominates(sys, b, a)?;
            let by_depth = sys.form(a, b).cmp_value(&sys.scalar(1)).is_ge()
                && inversions::depth(sys, a)? < inversions::depth(sys, b)?;
            // beta dominates alpha iff every element sending beta negative sends alpha negative
            let brute = inverses.iter().all(|w| !sys.act(w, b).is_negative() || sys.act(w, a).is_negative());
            ensure(chain == by_depth && chain == brute, || {
                format!("{}: dominance of {} over {} disagrees ({} {} {})", name, b, a, chain, by_depth, brute)
            })?;
        }
    }
    Ok(format!("{} ordered pairs of roots up to depth {}", pairs, max_depth))
}

/// The automaton accepts exactly the reduced words up to `max_len`.
pub fn check_language(name: &str, max_len: usize) -> Result<String> {
    let g = analysis(name)?;
    let sys = g.sys();
    let raw = g.raw_automaton();
    let min = g.minimized();
    let n = sys.rank();
    let mut word: Vec<usize> = Vec::new();
    let mut count = 0usize;
    fn rec(
        sys: &CoxeterSystem,
        raw: &automata::ReducedWordAutomaton,
        min: &automata::ReducedWordAutomaton,
        word: &mut Vec<usize>,
        n: usize,
        left: usize,
        count: &mut usize,
    ) -> Result<()> {
        *count += 1;
        let reduced = sys.normalize(word)?.length() == word.len();
        ensure(raw.accepts(word) == reduced && min.accepts(word) == reduced, || {
            format!("word {:?}: reduced {} but acceptance differs", word, reduced)
        })?;
        if left == 0 || !reduced {
            return Ok(());
        }
        for s in 0..n {
            word.push(s);
            rec(sys, raw, min, word, n, left - 1, count)?;
            word.pop();
        }
        Ok(())
    }
    rec(sys, raw, min, &mut word, n, max_len, &mut count)?;
    Ok(format!("{} words up to length {}", count, max_len))
}

/// Minimizing twice changes nothing and the growth series of both automata agree.
pub fn check_minimization(name: &str) -> Result<String> {
    let g = analysis(name)?;
    let raw = g.raw_automaton();
    let min = g.minimized();
    let (again, _) = automata::minimize(min);
    ensure(again.state_count() == min.state_count(), || format!("{}: minimization not stable", name))?;
    ensure(automata::growth_series(raw, 12) == automata::growth_series(min, 12), || {
        format!("{}: growth series differ", name)
    })?;
    Ok(format!("{} raw states, {} classes", raw.state_count(), min.state_count()))
}

/// Cone type equality by automaton classes and by tight-gate profiles agree.
pub fn check_cone_type_routes(name: &str, max_len: usize) -> Result<String> {
    let g = analysis(name)?;
    let cat = g.catalog();
    let min = g.minimized();
    let tight: Vec<Element> = g.tight_gates().elements().to_vec();
    let mut els: Vec<Element> = Vec::new();
    weak_order::for_each_element_up_to(cat, max_len, |w| els.push(w.element.clone()));
    for (i, x) in els.iter().enumerate() {
        for y in &els[i..] {
            let a = automata::cone_type_equal(min, x, y);
            let b = automata::cone_type_equal_by_tight_gates(cat, &tight, x, y);
            ensure(a == b, || format!("{}: routes disagree on {} and {}", name, cat.element_string(x), cat.element_string(y)))?;
        }
    }
    Ok(format!("{} elements compared pairwise", els.len()))
}

/// Every gate passes the witness-based gate test and every element up to
/// `max_len` projects onto a gate that is a prefix of it.
pub fn check_gate_consistency(name: &str, max_len: usize) -> Result<String> {
    let g = analysis(name)?;
    let cat = g.catalog();
    let sys = g.sys();
    let gates = g.gates()?;
    for x in gates.iter() {
        ensure(g.shadows().is_gate(x)?, || format!("{}: gate {} fails the witness test", name, sys.element_string(x)))?;
    }
    let min = g.minimized();
    let table = g.gate_table()?;
    let mut checked = 0;
    let mut failure = None;
    weak_order::for_each_element_up_to(cat, max_len, |w| {
        if failure.is_some() {
            return;
        }
        checked += 1;
        let r = (|| -> Result<()> {
            let p = shadows::garside_projection(cat, &gates, &w.element)?;
            ensure(weak_order::is_prefix(sys, &p, &w.element), || "projection is not a prefix".into())?;
            // the minimal element of the cone type of w^{-1} is a suffix of w^{-1}
            let winv = sys.inverse(&w.element);
            let class = min.run(winv.letters()).ok_or_else(|| fail("normal word rejected"))?;
            let m = &table.entries[class].minimal;
            ensure(weak_order::is_suffix(sys, m, &winv), || "minimal element is not a suffix".into())?;
            ensure(sys.inverse(m) == p, || "projection differs from the gate of the class".into())
        })();
        if let Err(e) = r {
            failure = Some(fail(format!("{}: {}: {}", name, sys.element_string(&w.element), e)));
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(format!("{} gates, {} elements projected", gates.len(), checked)),
    }
}

/// Greedy joins agree with exhaustive joins on pairs of short elements.
pub fn check_joins(name: &str, max_len: usize) -> Result<String> {
    let g = analysis(name)?;
    let cat = g.catalog();
    let mut els: Vec<Element> = Vec::new();
    weak_order::for_each_element_up_to(cat, max_len, |w| els.push(w.element.clone()));
    let cap = 2 * max_len + 6;
    let mut found = 0;
    for (i, x) in els.iter().enumerate() {
        for y in &els[i + 1..] {
            let pair = [x.clone(), y.clone()];
            let greedy = weak_order::join(cat, &pair, cap);
            let brute = weak_order::join_brute_force(cat, &pair, cap)?;
            ensure(greedy == brute, || {
                format!("{}: joins of {} and {} disagree", name, cat.element_string(x), cat.element_string(y))
            })?;
            found += usize::from(greedy.value.is_some());
        }
    }
    Ok(format!("{} pairs, {} bounded", els.len() * (els.len() - 1) / 2, found))
}

/// Structure of the tight gates: tightness passes to suffixes, minimal
/// witnesses descend along left descents, every gate is the join of its
/// tight-gate prefixes, and non-simple tight gates pair up by final root.
pub fn check_gate_structure(name: &str, x_len: usize) -> Result<String> {
    let g = analysis(name)?;
    let cat = g.catalog();
    let sys = g.sys();
    let tight = g.tight_gates();
    for set in [tight.clone(), g.tight_low()] {
        for x in set.iter().filter(|x| x.length() > 1) {
            for s in x.descents_left().iter() {
                let sx = sys.left_multiply(s, x);
                ensure(cat.info(&sx).is_tight(), || {
                    format!("{}: suffix {} of tight {} is not tight", name, sys.element_string(&sx), sys.element_string(x))
                })?;
            }
        }
    }
    let mut descents = 0;
    let mut xs: Vec<Rc<ElementInfo>> = Vec::new();
    weak_order::for_each_element_up_to(cat, x_len, |x| xs.push(x.clone()));
    for x in &xs {
        for beta in x.inversions.iter() {
            let Some(y) = g.shadows().minimal_witness(&x.element, beta)? else { continue };
            if y.length() < 2 {
                continue;
            }
            for s in y.descents_left().iter() {
                descents += 1;
                let sx = cat.info(&sys.left_multiply(s, &x.element));
                let sy = sys.left_multiply(s, &y);
                let s_beta = cat.reflect(s, beta);
                ensure(cat.info(&sy).inversions.meets_exactly(&sx.inversions, s_beta), || {
                    format!("{}: descent of witness {} for {} loses exactness", name, sys.element_string(&y), sys.element_string(&x.element))
                })?;
                ensure(tight.contains(&sy), || format!("{}: {} is not a tight gate", name, sys.element_string(&sy)))?;
            }
        }
    }
    let gates = g.gates()?;
    for x in gates.iter().filter(|x| !x.is_identity()) {
        let xi = cat.info(x);
        let below: Vec<Element> =
            tight.iter().filter(|t| cat.info(t).inversions.is_subset(&xi.inversions)).cloned().collect();
        let j = weak_order::join(cat, &below, x.length());
        ensure(j.value.as_ref() == Some(x), || format!("{}: gate {} is not the join of its tight gates", name, sys.element_string(x)))?;
    }
    // each non-simple tight gate meets exactly one other in just its final root
    let non_simple: Vec<Rc<ElementInfo>> = tight.iter().filter(|x| x.length() > 1).map(|x| cat.info(x)).collect();
    for x in &non_simple {
        let beta = x.final_root().expect("tight");
        let partners = non_simple
            .iter()
            .filter(|y| y.element != x.element && y.final_root() == Some(beta) && y.inversions.meets_exactly(&x.inversions, beta))
            .count();
        ensure(partners == 1, || format!("{}: {} has {} partners", name, sys.element_string(&x.element), partners))?;
    }
    let k = non_simple.len();
    let extra = g.shadows().tight_gate_search().super_elementary.len() - sys.rank();
    ensure(k.is_multiple_of(2) && extra <= k / 2, || format!("{}: K = {} with {} non-simple super-elementary roots", name, k, extra))?;
    let pairs = k / 2;
    Ok(format!("{} witness descents, {} gates as joins, {} pairs", descents, gates.len(), pairs))
}

/// Elementary roots have forest supports without infinite bonds and are
/// closed under small reflections; inversion sets are cones over short
/// inversions; prefix sets are convex; joins of pairs respect inversion sets.
pub fn check_root_structure(name: &str, max_len: usize, join_len: usize) -> Result<String> {
    let g = analysis(name)?;
    let cat = g.catalog();
    let sys = g.sys();
    let (elementary, e_set) = cat.elementary();
    for &b in &elementary {
        let beta = cat.root(b);
        let support: Vec<usize> = beta.support().iter().collect();
        let mut parent: Vec<usize> = (0..sys.rank()).collect();
        fn find(p: &mut Vec<usize>, i: usize) -> usize {
            if p[i] != i {
                let r = find(p, p[i]);
                p[i] = r;
            }
            p[i]
        }
        for (i, &s) in support.iter().enumerate() {
            for &t in &support[i + 1..] {
                let l = sys.label(s, t);
                ensure(l.finite().is_some(), || format!("{}: elementary root {} has an infinite bond", name, beta))?;
                if l.finite() != Some(2) {
                    let (a, c) = (find(&mut parent, s), find(&mut parent, t));
                    ensure(a != c, || format!("{}: elementary root {} has a circuit", name, beta))?;
                    parent[a] = c;
                }
            }
        }
        for s in 0..sys.rank() {
            let a = cat.simple(s);
            if a == b {
                continue;
            }
            let image = cat.reflect(s, b);
            match cat.form_class(a, b) {
                crate::catalog::FormClass::Between => {
                    ensure(e_set.contains(image), || format!("{}: E not closed at {}", name, beta))?
                }
                crate::catalog::FormClass::AtMostMinusOne => {
                    ensure(inversions::dominates(sys, &cat.root(image), &cat.root(a))?, || {
                        format!("{}: reflection of {} does not dominate a simple root", name, beta)
                    })?
                }
                crate::catalog::FormClass::AtLeastOne => {}
            }
        }
    }
    let mut els: Vec<Rc<ElementInfo>> = Vec::new();
    weak_order::for_each_element_up_to(cat, max_len, |w| els.push(w.clone()));
    for w in &els {
        let short = cat.roots(&w.short);
        for beta in cat.roots(&w.inversions) {
            ensure(inversions::cone_membership(&beta, &short), || {
                format!("{}: {} is outside the cone of short inversions of {}", name, beta, sys.element_string(&w.element))
            })?;
        }
        if w.length() <= 4 {
            let below: Vec<Element> = weak_order::prefixes(cat, &w.element).iter().map(|p| p.element.clone()).collect();
            ensure(weak_order::is_convex(cat, &below, 2 * w.length())?, || {
                format!("{}: prefixes of {} are not convex", name, sys.element_string(&w.element))
            })?;
        }
    }
    let small: Vec<&Rc<ElementInfo>> = els.iter().filter(|w| w.length() <= join_len).collect();
    let mut bounded = 0;
    for (i, x) in small.iter().enumerate() {
        for y in &small[i + 1..] {
            let Some(j) = weak_order::join(cat, &[x.element.clone(), y.element.clone()], 4 * join_len + 4).value else {
                continue;
            };
            bounded += 1;
            let ji = cat.info(&j);
            let union = x.inversions.union(&y.inversions);
            let label = || format!("{}: join of {} and {}", name, sys.element_string(&x.element), sys.element_string(&y.element));
            ensure(union.is_subset(&ji.inversions), || format!("{} misses an inversion", label()))?;
            ensure(ji.short.is_subset(&x.short.union(&y.short)), || format!("{} has a new short inversion", label()))?;
            let gens = cat.roots(&union);
            for beta in cat.roots(&ji.inversions) {
                ensure(inversions::cone_membership(&beta, &gens), || format!("{} leaves the cone", label()))?;
            }
        }
    }
    Ok(format!("{} elementary roots, {} elements, {} bounded pairs", elementary.len(), els.len(), bounded))
}

/// Cone types along weak order, read through the minimized automaton:
/// `x <= y` gives `T(y^-1) within T(x^-1)`, and for a bounded pair of gates
/// the join's cone type is the intersection.
pub fn check_cone_type_order(name: &str, max_len: usize, word_len: usize) -> Result<String> {
    let g = analysis(name)?;
    let cat = g.catalog();
    let sys = g.sys();
    let min = g.minimized();
    let mut vs: Vec<Element> = Vec::new();
    weak_order::for_each_element_up_to(cat, word_len, |v| vs.push(v.element.clone()));
    let accepts_after = |w: &Element, v: &Element| {
        let word: Vec<usize> = sys.inverse(w).letters().chain(v.letters()).collect();
        min.accepts(&word)
    };
    let profile = |w: &Element| -> Vec<bool> { vs.iter().map(|v| accepts_after(w, v)).collect() };
    let mut els: Vec<Rc<ElementInfo>> = Vec::new();
    weak_order::for_each_element_up_to(cat, max_len, |w| els.push(w.clone()));
    let profiles: Vec<Vec<bool>> = els.iter().map(|w| profile(&w.element)).collect();
    let mut comparable = 0;
    for (i, x) in els.iter().enumerate() {
        for (j, y) in els.iter().enumerate() {
            if i != j && cat.is_prefix(x, y) {
                comparable += 1;
                ensure(profiles[j].iter().zip(&profiles[i]).all(|(&b, &a)| !b || a), || {
                    format!("{}: T(y^-1) not within T(x^-1) for {} <= {}", name, sys.element_string(&x.element), sys.element_string(&y.element))
                })?;
            }
        }
    }
    let gates = g.gates()?;
    let mut joined = 0;
    for (i, x) in gates.iter().enumerate() {
        for y in &gates.elements()[i + 1..] {
            let Some(j) = weak_order::join(cat, &[x.clone(), y.clone()], gates.max_length()).value else { continue };
            joined += 1;
            let (px, py, pj) = (profile(x), profile(y), profile(&j));
            ensure(pj.iter().zip(px.iter().zip(&py)).all(|(&c, (&a, &b))| c == (a && b)), || {
                format!("{}: cone type of the join of {} and {} is not the intersection", name, sys.element_string(x), sys.element_string(y))
            })?;
        }
    }
    Ok(format!("{} comparable pairs, {} joins of gates", comparable, joined))
}

/// Property checks, grouped as (area, check).
pub fn property_checks() -> Vec<(&'static str, Check)> {
    let mut out: Vec<(&'static str, Check)> = Vec::new();
    for (name, len) in [("I2:3", 3), ("I2:4", 4), ("affine-A1", 6), ("affine-G2", 6)] {
        out.push(("canonical join", Check::new(format!("canonical join {}", name), move || check_canonical_join(name, len))));
    }
    for name in ["affine-A2", "affine-B2", "affine-G2", "rank3:I:3:7", "rank3:III:4:5", "linear:3,inf", "I2:7"] {
        out.push(("short inversions", Check::new(format!("short inversions {}", name), move || check_short_inversions(name, 8))));
    }
    for name in ["affine-A1", "affine-A2", "affine-B2", "rank3:II:5:5"] {
        out.push(("witnesses", Check::new(format!("witnesses {}", name), move || check_witnesses(name, 3, 6))));
    }
    for name in ["affine-A2", "affine-B2", "affine-G2", "affine-A3", "rank3:I:3:7", "cycle:3,3,4,3", "complete:3,4,5"] {
        out.push(("suffix closure", Check::new(format!("suffix closure {}", name), move || check_suffix_closure(name))));
        out.push(("join-irreducibles", Check::new(format!("join-irreducibles {}", name), move || check_join_irreducibles(name))));
    }
    for name in ["affine-A1", "affine-A2", "affine-G2", "I2:inf", "linear:3,inf"] {
        out.push(("dominance", Check::new(format!("dominance {}", name), move || check_dominance(name, 4))));
    }
    for name in ["affine-A1", "I2:5", "affine-A2", "affine-B2", "affine-G2", "rank3:III:4:5", "linear:4,inf"] {
        out.push(("language", Check::new(format!("language {}", name), move || check_language(name, 8))));
        out.push(("minimization", Check::new(format!("minimization {}", name), move || check_minimization(name))));
    }
    for name in ["affine-A2", "affine-B2", "affine-G2", "rank3:II:5:5"] {
        out.push(("cone types", Check::new(format!("cone types {}", name), move || check_cone_type_routes(name, 5))));
        out.push(("gates", Check::new(format!("gate consistency {}", name), move || check_gate_consistency(name, 6))));
    }
    for name in ["affine-A2", "affine-B2", "affine-G2", "rank3:II:5:5", "cycle:3,3,4,3"] {
        out.push(("gate structure", Check::new(format!("gate structure {}", name), move || check_gate_structure(name, 4))));
    }
    for name in ["affine-A1", "affine-A2", "affine-G2", "rank3:I:3:7", "complete:3,4,5"] {
        out.push(("root structure", Check::new(format!("root structure {}", name), move || check_root_structure(name, 6, 3))));
    }
    for name in ["affine-A2", "affine-B2", "I2:5"] {
        out.push(("cone type order", Check::new(format!("cone type order {}", name), move || check_cone_type_order(name, 4, 6))));
    }
    for name in ["affine-A1", "affine-A2", "affine-B2", "I2:5"] {
        out.push(("joins", Check::new(format!("joins {}", name), move || check_joins(name, 4))));
    }
    out
}
