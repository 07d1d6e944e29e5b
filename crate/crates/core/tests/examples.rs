//! Worked examples for each module. Where a value is not obvious it is also
//! recomputed by brute force over small balls of the group.

use std::collections::BTreeSet;
use std::sync::Arc;

use coxeter::analysis::GroupAnalysis;
use coxeter::automata::{self, ReducedWordAutomaton};
use coxeter::field::{self, embed_cos, minimal_polynomial, minimal_polynomial_from_cyclotomic, AlgebraicReal, Field};
use coxeter::inversions::{self, cone_membership, depth, dominates};
use coxeter::shadows::{self, ShadowKind, ShadowSet};
use coxeter::weak_order::{self, JoinStatus};
use coxeter::{presets, Catalog, CoxeterError, CoxeterSystem, Element, Root};
use num_bigint::BigInt;

fn group(name: &str) -> Arc<CoxeterSystem> {
    Arc::new(presets::preset(name).unwrap())
}

fn analysis(name: &str) -> GroupAnalysis {
    GroupAnalysis::new(group(name))
}

fn root(sys: &CoxeterSystem, c: &[i64]) -> Root {
    sys.vector(c.iter().map(|&x| sys.scalar(x)).collect())
}

fn el(sys: &CoxeterSystem, w: &str) -> Element {
    sys.parse_element(w).unwrap()
}

fn names(sys: &CoxeterSystem, xs: &[Element]) -> BTreeSet<String> {
    xs.iter().map(|x| sys.element_string(x)).collect()
}

fn set(words: &[&str]) -> BTreeSet<String> {
    words.iter().map(|w| w.to_string()).collect()
}

fn roots(v: Vec<Root>) -> BTreeSet<String> {
    v.iter().map(|r| r.to_string()).collect()
}

/// All elements up to `len`, by exhaustive enumeration of words.
fn ball(sys: &CoxeterSystem, len: usize) -> Vec<Element> {
    let mut out: Vec<Element> = vec![sys.identity()];
    let mut frontier = out.clone();
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &frontier {
            for s in 0..sys.rank() {
                let x = sys.right_multiply(w, s);
                if !out.contains(&x) && !next.contains(&x) {
                    next.push(x);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

// ---------------------------------------------------------------------------
// algebraic kernel

#[test]
fn minimal_polynomials_match_cyclotomic_route() {
    let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(minimal_polynomial(2), ints(&[0, 1]));
    assert_eq!(minimal_polynomial(3), ints(&[-1, 1]));
    assert_eq!(minimal_polynomial(5), ints(&[-1, -1, 1]));
    assert_eq!(minimal_polynomial(4), ints(&[-2, 0, 1]));
    for n in 2..=40 {
        assert_eq!(minimal_polynomial(n), minimal_polynomial_from_cyclotomic(n), "N = {}", n);
    }
}

#[test]
fn field_arithmetic() {
    let f = Field::get(5);
    let theta = AlgebraicReal::theta(&f);
    let one = AlgebraicReal::one(&f);
    assert_eq!(theta.mul_ref(&theta), theta.add_ref(&one));
    assert!(theta.add_ref(&theta.neg_ref()).is_zero());
    assert_eq!(one.inv().unwrap(), one);
    assert!(matches!(AlgebraicReal::zero(&f).inv(), Err(CoxeterError::DivisionByZero)));
    let d = theta.sub_ref(&one);
    assert_eq!(d.signum(), 1);
    assert!((d.to_f64() - (2.0 * (std::f64::consts::PI / 5.0).cos() - 1.0)).abs() < 1e-12);
    assert_eq!(AlgebraicReal::zero(&f).signum(), 0);
}

#[test]
fn embedded_cosines() {
    let f = Field::get(12);
    let half = AlgebraicReal::from_rational(&f, num_rational::BigRational::new(1.into(), 2.into()));
    assert!(embed_cos(&f, Some(2)).is_zero());
    assert_eq!(embed_cos(&f, Some(3)), half.neg_ref());
    assert_eq!(embed_cos(&f, None), AlgebraicReal::from_integer(&f, -1));
    assert_eq!(half.neg_ref().signum(), -1);
    // (2cos(pi/m))^2 = 2cos(2pi/m) + 2
    for m in [2u32, 3, 4, 6, 12] {
        let c = AlgebraicReal::two_cos_pi_over(&f, m);
        let double = AlgebraicReal::dickson_at_theta(&f, 2 * (12 / m));
        assert_eq!(c.mul_ref(&c), double.add_ref(&AlgebraicReal::from_integer(&f, 2)), "m = {}", m);
    }
    let _ = field::field_degree(12);
}

// ---------------------------------------------------------------------------
// coxeter core

#[test]
fn reflections() {
    let a2 = group("I2:3");
    assert_eq!(a2.reflect(0, &root(&a2, &[1, 0])), root(&a2, &[-1, 0]));
    assert_eq!(a2.reflect(0, &root(&a2, &[0, 1])), root(&a2, &[1, 1]));
    let search = group("I2:inf");
    assert_eq!(search.reflect(0, &root(&search, &[0, 1])), root(&search, &[2, 1]));
}

#[test]
fn actions() {
    let a2 = group("I2:3");
    let beta = root(&a2, &[3, 5]);
    assert_eq!(a2.act(&a2.identity(), &beta), beta);
    assert_eq!(a2.act(&el(&a2, "st"), &root(&a2, &[0, 1])), root(&a2, &[-1, -1]));
    assert_eq!(a2.act(&el(&a2, "sts"), &root(&a2, &[1, 0])), root(&a2, &[0, -1]));
}

#[test]
fn normal_forms() {
    let a2 = group("I2:3");
    assert!(el(&a2, "ss").is_identity());
    assert_eq!(a2.element_string(&el(&a2, "tst")), "sts");
    let x = el(&a2, "stst");
    assert_eq!(a2.element_string(&x), "ts");
    // same action on every simple root as the unreduced word
    for s in 0..2 {
        let a = a2.simple_root(s);
        assert_eq!(a2.act(&x, a), a2.act_word(&[0, 1, 0, 1], a));
    }
    assert!(matches!(a2.parse_element("sx"), Err(CoxeterError::UnknownGenerator(_))));
}

#[test]
fn descents_inverse_length() {
    let a2 = group("I2:3");
    let st = el(&a2, "st");
    assert_eq!(st.descents_right().iter().collect::<Vec<_>>(), vec![1]);
    assert_eq!(a2.element_string(&a2.inverse(&st)), "ts");
    assert_eq!(el(&a2, "sts").length(), 3);
}

// ---------------------------------------------------------------------------
// root inversions

#[test]
fn inversion_sets() {
    let a2 = group("I2:3");
    assert!(inversions::inversion_set(&a2, &a2.identity()).is_empty());
    assert_eq!(inversions::inversion_set(&a2, &el(&a2, "st")), vec![root(&a2, &[1, 0]), root(&a2, &[1, 1])]);
    let search = group("I2:inf");
    assert_eq!(inversions::inversion_set(&search, &el(&search, "st")), vec![root(&search, &[1, 0]), root(&search, &[2, 1])]);
}

#[test]
fn short_inversions_both_routes() {
    let a2 = group("I2:3");
    let wo = el(&a2, "sts");
    let expect = roots(vec![root(&a2, &[1, 0]), root(&a2, &[0, 1])]);
    assert_eq!(roots(inversions::short_inversions_direct(&a2, &wo)), expect);
    assert_eq!(roots(inversions::short_inversions_evolution(&a2, &wo)), expect);
    let search = group("I2:inf");
    let st = el(&search, "st");
    let expect = roots(vec![root(&search, &[1, 0]), root(&search, &[2, 1])]);
    assert_eq!(roots(inversions::short_inversions_direct(&search, &st)), expect);
    assert_eq!(roots(inversions::short_inversions_evolution(&search, &st)), expect);
    assert!(inversions::short_inversions_direct(&search, &search.identity()).is_empty());
}

#[test]
fn descent_roots() {
    let a2 = group("I2:3");
    assert_eq!(inversions::right_descent_roots(&a2, &el(&a2, "st")), vec![root(&a2, &[1, 1])]);
    assert!(inversions::right_descent_roots(&a2, &a2.identity()).is_empty());
    assert_eq!(inversions::left_descent_roots(&a2, &el(&a2, "st")), vec![root(&a2, &[1, 0])]);
    let search = group("I2:inf");
    assert_eq!(inversions::right_descent_roots(&search, &el(&search, "st")), vec![root(&search, &[2, 1])]);
}

#[test]
fn dominance_examples_against_search() {
    let search = group("I2:inf");
    let (b, s, t) = (root(&search, &[2, 1]), root(&search, &[1, 0]), root(&search, &[0, 1]));
    let elements = ball(&search, 8);
    let brute = |beta: &Root, alpha: &Root| {
        elements.iter().all(|w| {
            let wi = search.inverse(w);
            !search.act(&wi, beta).is_negative() || search.act(&wi, alpha).is_negative()
        })
    };
    assert!(dominates(&search, &b, &s).unwrap());
    assert!(brute(&b, &s));
    assert!(!dominates(&search, &b, &t).unwrap());
    assert!(!brute(&b, &t));
    let sts = el(&search, "sts");
    let wi = search.inverse(&sts);
    assert!(search.act(&wi, &b).is_negative() && search.act(&wi, &t).is_positive());
    assert!(!dominates(&search, &b, &b).unwrap());
    assert!(matches!(dominates(&search, &b.neg(), &s), Err(CoxeterError::NotPositive)));
}

#[test]
fn elementary_root_examples() {
    let search = group("I2:inf");
    assert_eq!(roots(inversions::elementary_roots(&search)), roots(vec![root(&search, &[1, 0]), root(&search, &[0, 1])]));
    assert_eq!(inversions::elementary_roots(&group("affine-G2")).len(), 12);
    let ii = group("rank3:II:5:5");
    let c = AlgebraicReal::two_cos_pi_over(ii.field(), 5);
    let full: Vec<Root> = inversions::elementary_roots(&ii).into_iter().filter(|r| r.support().len() == 3).collect();
    assert_eq!(full, vec![ii.vector(vec![c.clone(), ii.scalar(1), c])]);
}

#[test]
fn depths_against_search() {
    let search = group("I2:inf");
    let a2 = group("I2:3");
    // shortest w with w beta < 0, found by walking balls of increasing radius
    let brute = |sys: &CoxeterSystem, beta: &Root| {
        (0..6).find(|&n| ball(sys, n).iter().any(|w| sys.act(w, beta).is_negative())).unwrap()
    };
    assert_eq!(depth(&search, &root(&search, &[1, 0])).unwrap(), 1);
    for (sys, beta) in [(&search, root(&search, &[2, 1])), (&a2, root(&a2, &[1, 1])), (&search, root(&search, &[3, 2]))] {
        assert_eq!(depth(sys, &beta).unwrap(), brute(sys, &beta), "{}", beta);
    }
    assert_eq!(depth(&search, &root(&search, &[2, 1])).unwrap(), 2);
    assert_eq!(depth(&a2, &root(&a2, &[1, 1])).unwrap(), 2);
}

#[test]
fn supports() {
    let a2 = group("I2:3");
    assert_eq!(inversions::support(&root(&a2, &[1, 0])).iter().collect::<Vec<_>>(), vec![0]);
    assert_eq!(inversions::support(&root(&a2, &[1, 1])).iter().collect::<Vec<_>>(), vec![0, 1]);
    let ii = group("rank3:II:5:5");
    let c = AlgebraicReal::two_cos_pi_over(ii.field(), 5);
    assert_eq!(inversions::support(&ii.vector(vec![c.clone(), ii.scalar(1), c])).len(), 3);
}

#[test]
fn cone_membership_examples() {
    let a2 = group("I2:3");
    let (s, t) = (root(&a2, &[1, 0]), root(&a2, &[0, 1]));
    assert!(cone_membership(&root(&a2, &[1, 1]), &[s.clone(), t.clone()]));
    assert!(!cone_membership(&s, &[t]));
    // a (1,0) + b (2,1) = (3,2) forces b = 2, a = -1
    let search = group("I2:inf");
    assert!(!cone_membership(&root(&search, &[3, 2]), &[root(&search, &[1, 0]), root(&search, &[2, 1])]));
    assert!(cone_membership(&root(&search, &[3, 1]), &[root(&search, &[1, 0]), root(&search, &[2, 1])]));
}

// ---------------------------------------------------------------------------
// weak order

#[test]
fn prefixes_and_suffixes() {
    let a2 = group("I2:3");
    let (s, t, st) = (el(&a2, "s"), el(&a2, "t"), el(&a2, "st"));
    assert!(weak_order::is_prefix(&a2, &s, &st));
    assert!(!weak_order::is_prefix(&a2, &t, &st));
    assert!(weak_order::is_suffix(&a2, &t, &st));
}

#[test]
fn joins_against_brute_force() {
    let a2 = group("I2:3");
    let cat = Catalog::new(a2.clone());
    let pair = [el(&a2, "s"), el(&a2, "t")];
    let j = weak_order::join(&cat, &pair, 6);
    assert_eq!(j.value.as_ref().map(|x| a2.element_string(x)), Some("sts".to_string()));
    assert_eq!(weak_order::join_brute_force(&cat, &pair, 6).unwrap(), j);
    let x = el(&a2, "st");
    assert_eq!(weak_order::join(&cat, std::slice::from_ref(&x), 4).value, Some(x));

    let search = group("I2:inf");
    let cat = Catalog::new(search.clone());
    let pair = [el(&search, "s"), el(&search, "t")];
    assert_eq!(weak_order::join(&cat, &pair, 12).status, JoinStatus::NoUpperBoundWithinCap);
    assert_eq!(weak_order::join_brute_force(&cat, &pair, 12).unwrap().status, JoinStatus::NoUpperBoundWithinCap);
}

#[test]
fn minimal_prefixes() {
    let a2 = group("I2:3");
    let cat = Catalog::new(a2.clone());
    let m = |w: &str, b: &[i64]| {
        let beta = cat.intern(&root(&a2, b));
        a2.element_string(&weak_order::min_prefix_containing(&cat, &el(&a2, w), beta).unwrap())
    };
    assert_eq!(m("sts", &[0, 1]), "t");
    assert_eq!(m("s", &[1, 0]), "s");
    assert_eq!(m("st", &[1, 1]), "st");
    let beta = cat.intern(&root(&a2, &[0, 1]));
    assert!(matches!(weak_order::min_prefix_containing(&cat, &el(&a2, "s"), beta), Err(CoxeterError::NotAnInversion)));
}

#[test]
fn canonical_join_examples() {
    let a2 = group("I2:3");
    let cat = Catalog::new(a2.clone());
    let cj = |w: &str| names(&a2, &weak_order::canonical_join_representation(&cat, &el(&a2, w)).unwrap());
    assert_eq!(cj("sts"), set(&["s", "t"]));
    assert!(cj("").is_empty());
    assert_eq!(cj("st"), set(&["st"]));
}

#[test]
fn phi1_decompositions() {
    let decomp = |name: &str, w: &str| {
        let sys = group(name);
        let cat = Catalog::new(sys.clone());
        weak_order::phi1_decomposition(&cat, &el(&sys, w))
            .unwrap()
            .into_iter()
            .map(|(b, z)| (cat.root(b).to_string(), sys.element_string(&z)))
            .collect::<BTreeSet<_>>()
    };
    let pairs = |v: &[(&str, &str)]| v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect::<BTreeSet<_>>();
    assert_eq!(decomp("I2:3", "sts"), pairs(&[("(1, 0)", "s"), ("(0, 1)", "t")]));
    assert_eq!(decomp("I2:3", "s"), pairs(&[("(1, 0)", "s")]));
    assert_eq!(decomp("I2:inf", "st"), pairs(&[("(1, 0)", "s"), ("(2, 1)", "st")]));
}

#[test]
fn geodesics_and_convexity() {
    let a2 = group("I2:3");
    let cat = Catalog::new(a2.clone());
    let g = weak_order::geodesic_elements(&cat, &a2.identity(), &el(&a2, "st"), 6).unwrap();
    assert_eq!(names(&a2, &g), set(&["e", "s", "st"]));
    let x = el(&a2, "ts");
    assert_eq!(weak_order::geodesic_elements(&cat, &x, &x, 6).unwrap(), vec![x]);
    let p = vec![a2.identity(), el(&a2, "s"), el(&a2, "t")];
    assert!(weak_order::is_convex(&cat, &p, 6).unwrap());
    assert!(!weak_order::is_convex(&cat, &[el(&a2, "s"), el(&a2, "t")], 6).unwrap());
}

// ---------------------------------------------------------------------------
// shadows

#[test]
fn low_elements() {
    let g = analysis("I2:inf");
    assert_eq!(names(g.sys(), g.low().elements()), set(&["e", "s", "t"]));
    assert_eq!(analysis("affine-G2").low().len(), 49);
    assert_eq!(analysis("affine-A2").low().len(), 16);
}

#[test]
fn tight_subsets() {
    assert_eq!(analysis("affine-G2").tight_low().len(), 26);
    assert_eq!(analysis("affine-A2").tight_low().len(), 9);
    let g = analysis("I2:3");
    let e = ShadowSet::new(ShadowKind::Custom, vec![g.sys().identity()]);
    assert!(shadows::tight(g.catalog(), &e).is_empty());
}

#[test]
fn tight_gate_search_examples() {
    let g = analysis("affine-G2");
    assert_eq!(g.tight_gates().len(), 21);
    assert_eq!(g.shadows().tight_gate_search().super_elementary.len(), 12);
    let g = analysis("right-angled:4:0-1,1-2,2-3,3-0");
    assert_eq!(names(g.sys(), g.tight_gates().elements()), set(&["s", "t", "u", "v"]));
    let g = analysis("I2:5");
    let sys = g.sys();
    let all: Vec<Element> = ball(sys, 5).into_iter().filter(|w| w.length() > 0 && w.length() < 5).collect();
    assert_eq!(g.tight_gates().len(), 8);
    assert_eq!(names(sys, g.tight_gates().elements()), names(sys, &all));
}

#[test]
fn witness_examples() {
    let g = analysis("I2:3");
    let (sys, cat) = (g.sys(), g.catalog());
    let s = el(sys, "s");
    assert_eq!(g.shadows().minimal_witness(&s, cat.simple(0)).unwrap(), Some(s.clone()));
    let beta = cat.intern(&root(sys, &[1, 1]));
    let st = el(sys, "st");
    let w = g.shadows().minimal_witness(&st, beta).unwrap();
    assert_eq!(w.as_ref().map(|x| sys.element_string(x)), Some("ts".to_string()));
    // every element of A2, checked directly
    let hits: Vec<Element> = ball(sys, 3)
        .into_iter()
        .filter(|y| cat.info(y).inversions.meets_exactly(&cat.info(&st).inversions, beta))
        .collect();
    assert_eq!(hits.iter().map(|y| y.length()).min(), Some(2));
    assert!(hits.contains(&el(sys, "ts")));
    assert!(matches!(g.shadows().minimal_witness(&s, cat.simple(1)), Err(CoxeterError::NotAnInversion)));

    let g = analysis("I2:inf");
    let (sys, cat) = (g.sys(), g.catalog());
    let st = el(sys, "st");
    let beta = cat.intern(&root(sys, &[2, 1]));
    assert_eq!(g.shadows().minimal_witness(&st, beta).unwrap(), None);
    // the chain t, ts, tst, ... never meets Phi(st), so the search cannot finish
    assert!(matches!(g.shadows().minimal_witness_search(&st, beta, 8), Err(CoxeterError::CapExhausted(8))));
    let sti = cat.info(&st);
    assert!(ball(sys, 8).iter().all(|y| !cat.info(y).inversions.meets_exactly(&sti.inversions, beta)));
}

#[test]
fn boundary_root_examples() {
    let g = analysis("I2:3");
    let (sys, cat) = (g.sys(), g.catalog());
    let b = g.shadows().boundary_roots(&el(sys, "st")).unwrap();
    assert_eq!(roots(cat.roots(&b)), roots(vec![root(sys, &[1, 0]), root(sys, &[1, 1])]));
    assert!(g.shadows().boundary_roots(&sys.identity()).unwrap().is_empty());
    let g = analysis("I2:inf");
    let (sys, cat) = (g.sys(), g.catalog());
    let b = g.shadows().boundary_roots(&el(sys, "st")).unwrap();
    assert_eq!(roots(cat.roots(&b)), roots(vec![root(sys, &[1, 0])]));
}

#[test]
fn gate_and_ultra_low_predicates() {
    let g = analysis("I2:inf");
    assert!(g.shadows().is_ultra_low(&g.sys().identity()).unwrap());
    assert!(!g.shadows().is_gate(&el(g.sys(), "st")).unwrap());
    let g = analysis("I2:3");
    assert!(g.shadows().is_ultra_low(&el(g.sys(), "sts")).unwrap());
}

#[test]
fn projections() {
    let g = analysis("I2:inf");
    let (sys, cat) = (g.sys(), g.catalog());
    let low = g.low();
    let p = |w: &str| sys.element_string(&shadows::garside_projection(cat, low, &el(sys, w)).unwrap());
    assert_eq!(p("st"), "s");
    assert_eq!(p("sts"), "s");
    assert_eq!(p("t"), "t");
    assert_eq!(p("e"), "e");
}

#[test]
fn smallest_garside_shadows() {
    let g = analysis("I2:inf");
    let sg = g.shadows().smallest_garside_shadow(shadows::DEFAULT_GARSIDE_JOIN_CAP).unwrap();
    assert_eq!(names(g.sys(), sg.elements()), set(&["e", "s", "t"]));
    let g = analysis("affine-A2");
    assert_eq!(g.shadows().smallest_garside_shadow(shadows::DEFAULT_GARSIDE_JOIN_CAP).unwrap().len(), 16);
    for m in 3..=6 {
        let g = analysis(&format!("I2:{}", m));
        assert_eq!(g.shadows().smallest_garside_shadow(shadows::DEFAULT_GARSIDE_JOIN_CAP).unwrap().len(), 2 * m);
    }
}

// ---------------------------------------------------------------------------
// automata

#[test]
fn raw_automata() {
    let g = analysis("I2:inf");
    assert_eq!(g.raw_automaton().state_count(), 3);
    assert_eq!(analysis("I2:3").raw_automaton().state_count(), 6);
    assert_eq!(analysis("affine-G2").minimized().state_count(), 41);
}

#[test]
fn minimized_automata() {
    assert_eq!(analysis("I2:inf").minimized().state_count(), 3);
    assert_eq!(analysis("affine-A2").minimized().state_count(), 16);
    assert_eq!(analysis("affine-B2").minimized().state_count(), 24);
}

#[test]
fn gate_tables() {
    let g = analysis("I2:inf");
    assert_eq!(names(g.sys(), g.gates().unwrap().elements()), set(&["e", "s", "t"]));
    let g = analysis("affine-G2");
    assert_eq!(g.gates().unwrap().len(), 41);
    assert_eq!(g.tight_gates_from_automaton().unwrap().len(), 21);
    assert_eq!(analysis("I2:5").gates().unwrap().len(), 10);
}

#[test]
fn cone_type_equality() {
    for name in ["I2:inf", "I2:3", "affine-A2"] {
        let g = analysis(name);
        let (sys, cat) = (g.sys(), g.catalog());
        let both = |x: &str, y: &str| {
            let (x, y) = (el(sys, x), el(sys, y));
            let a = automata::cone_type_equal(g.minimized(), &x, &y);
            assert_eq!(a, automata::cone_type_equal_by_tight_gates(cat, g.tight_gates().elements(), &x, &y));
            a
        };
        assert!(!both("", "s"));
        if name == "I2:inf" {
            assert!(both("s", "sts"));
        }
        if name == "I2:3" {
            assert!(!both("st", "ts"));
        }
    }
}

#[test]
fn growth_series_examples() {
    let n = |v: &[u32]| v.iter().map(|&x| num_bigint::BigUint::from(x)).collect::<Vec<_>>();
    let a2 = analysis("I2:3");
    assert_eq!(automata::growth_series(a2.raw_automaton(), 3), n(&[1, 2, 2, 2]));
    assert_eq!(automata::growth_series(a2.raw_automaton(), 0), n(&[1]));
    let search = analysis("I2:inf");
    assert_eq!(automata::growth_series(search.minimized(), 4), n(&[1, 2, 2, 2, 2]));
    // reduced words of A2 by direct enumeration
    let words = |len: usize| (0..1usize << len).filter(|bits| {
        let w: Vec<usize> = (0..len).map(|i| (bits >> i) & 1).collect();
        a2.sys().normalize(&w).unwrap().length() == len
    }).count() as u32;
    assert_eq!(n(&(0..4).map(words).collect::<Vec<_>>()), n(&[1, 2, 2, 2]));
}

#[test]
fn exports() {
    let g = analysis("I2:inf");
    let dot = g.raw_automaton().to_dot();
    assert!(dot.contains("0 -> 1 [label=\"s\"]"));
    assert!(dot.contains("0 -> 2 [label=\"t\"]"));
    assert!(dot.contains("1 -> 2 [label=\"t\"]") && dot.contains("2 -> 1 [label=\"s\"]"));
    assert_eq!(dot.matches("label=\"").count(), 3 + 4);

    let rank1 = GroupAnalysis::new(Arc::new(CoxeterSystem::from_json(r#"{"generators": ["s"], "matrix": [[1]]}"#).unwrap()));
    assert_eq!(rank1.raw_automaton().state_count(), 2);

    for a in [g.raw_automaton().clone(), g.annotated_minimized().unwrap()] {
        let v = a.to_json();
        let back = ReducedWordAutomaton::from_json(g.sys(), &v).unwrap();
        assert_eq!(back.to_json(), v);
        assert_eq!(back.edges(), a.edges());
    }
}
