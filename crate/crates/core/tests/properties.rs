use std::sync::{Arc, OnceLock};

use coxeter::field::{AlgebraicReal, Field};
use coxeter::inversions;
use coxeter::{presets, Catalog, CoxeterSystem};
use num_rational::BigRational;
use proptest::prelude::*;

const GROUPS: &[&str] = &["I2:5", "I2:inf", "affine-A2", "affine-G2", "rank3:I:3:7", "rank3:II:5:5", "cycle:3,3,4,3"];

fn systems() -> &'static Vec<Arc<CoxeterSystem>> {
    static S: OnceLock<Vec<Arc<CoxeterSystem>>> = OnceLock::new();
    S.get_or_init(|| GROUPS.iter().map(|n| Arc::new(presets::preset(n).unwrap())).collect())
}

/// A group and a word of at most `max` letters over its generators.
fn group_and_words(max: usize, count: usize) -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (0..GROUPS.len()).prop_flat_map(move |g| {
        let rank = systems()[g].rank();
        (Just(g), prop::collection::vec(prop::collection::vec(0..rank, 0..=max), count))
    })
}

fn field_element(order: u32) -> impl Strategy<Value = AlgebraicReal> {
    let f = Field::get(order);
    let deg = f.degree();
    prop::collection::vec((-20i64..=20, 1i64..=6), deg).prop_map(move |c| {
        AlgebraicReal::from_poly(&f, c.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn signs_respect_arithmetic((x, y) in prop::sample::select(vec![5u32, 7, 12, 20]).prop_flat_map(|n| (field_element(n), field_element(n)))) {
        prop_assert!(x.mul_ref(&x).signum() >= 0);
        prop_assert_eq!(x.signum() + x.neg_ref().signum(), 0);
        prop_assert_eq!(x.signum() == 0, x.is_zero());
        // agrees with floating point away from zero
        let v = x.to_f64();
        if v.abs() > 1e-6 {
            prop_assert_eq!(x.signum(), if v > 0.0 { 1 } else { -1 });
        }
        prop_assert_eq!(x.add_ref(&y).sub_ref(&y), x.clone());
        if !x.is_zero() {
            prop_assert!(x.mul_ref(&x.inv().unwrap()).is_one());
        }
        prop_assert_eq!(x.mul_ref(&y), y.mul_ref(&x));
    }

    #[test]
    fn lengths_match_inversion_counts((g, ws) in group_and_words(10, 1)) {
        let sys = &systems()[g];
        let w = sys.normalize(&ws[0]).unwrap();
        prop_assert_eq!(w.length(), inversions::inversion_set(sys, &w).len());
        prop_assert_eq!(w.length(), sys.inverse(&w).length());
        prop_assert!(w.length() <= ws[0].len());
        prop_assert_eq!(w.length() % 2, ws[0].len() % 2);
        for beta in inversions::inversion_set(sys, &w) {
            prop_assert!(beta.is_positive());
            prop_assert!(inversions::is_inversion(sys, &w, &beta));
        }
    }

    #[test]
    fn normal_form_laws((g, ws) in group_and_words(8, 3)) {
        let sys = &systems()[g];
        let [x, y, z] = [0, 1, 2].map(|i| sys.normalize(&ws[i]).unwrap());
        let letters: Vec<usize> = x.letters().collect();
        prop_assert_eq!(sys.normalize(&letters).unwrap(), x.clone());
        let xy_z = sys.multiply(&sys.multiply(&x, &y).unwrap(), &z).unwrap();
        let x_yz = sys.multiply(&x, &sys.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(xy_z, x_yz);
        // the normal word acts like the input word
        for s in 0..sys.rank() {
            let a = sys.simple_root(s);
            let raw: Vec<u8> = ws[0].iter().map(|&l| l as u8).collect();
            prop_assert_eq!(sys.act(&x, a), sys.act_word(&raw, a));
        }
    }

    #[test]
    fn reflections_preserve_the_form((g, ws) in group_and_words(8, 2), s in 0usize..3) {
        let sys = &systems()[g];
        let s = s % sys.rank();
        let u = sys.act(&sys.normalize(&ws[0]).unwrap(), sys.simple_root(0));
        let v = sys.act(&sys.normalize(&ws[1]).unwrap(), sys.simple_root(sys.rank() - 1));
        prop_assert_eq!(sys.reflect(s, &sys.reflect(s, &u)), u.clone());
        prop_assert_eq!(sys.form(&sys.reflect(s, &u), &sys.reflect(s, &v)), sys.form(&u, &v));
        prop_assert!(sys.form(&u, &u).is_one());
    }

    #[test]
    fn roots_have_uniform_sign((g, ws) in group_and_words(10, 1)) {
        let sys = &systems()[g];
        let w = sys.normalize(&ws[0]).unwrap();
        for s in 0..sys.rank() {
            let r = sys.act(&w, sys.simple_root(s));
            prop_assert!(r.has_uniform_sign());
            prop_assert_eq!(r.is_negative(), w.descents_right().contains(s));
        }
    }

    #[test]
    fn short_inversions_generate_the_inversion_set((g, ws) in group_and_words(7, 1)) {
        let sys = &systems()[g];
        let w = sys.normalize(&ws[0]).unwrap();
        let direct = inversions::short_inversions_direct(sys, &w);
        let mut evo = inversions::short_inversions_evolution(sys, &w);
        let mut d = direct.clone();
        d.sort_by_key(|r| r.to_string());
        evo.sort_by_key(|r| r.to_string());
        prop_assert_eq!(d, evo);
        for beta in inversions::inversion_set(sys, &w) {
            prop_assert!(inversions::cone_membership(&beta, &direct));
        }
        let rd = inversions::right_descent_roots(sys, &w);
        prop_assert!(rd.iter().all(|r| direct.contains(r)));
    }

    #[test]
    fn joins_stay_in_the_cone((g, ws) in group_and_words(4, 2)) {
        let sys = &systems()[g];
        let cat = Catalog::new(sys.clone());
        let x = sys.normalize(&ws[0]).unwrap();
        let y = sys.normalize(&ws[1]).unwrap();
        let pair = [x.clone(), y.clone()];
        let j = coxeter::weak_order::join(&cat, &pair, 24);
        let brute = coxeter::weak_order::join_brute_force(&cat, &pair, 12).unwrap();
        if let Some(b) = &brute.value {
            prop_assert_eq!(j.value.as_ref(), Some(b));
        }
        if let Some(v) = j.value {
            let (xi, yi, vi) = (cat.info(&x), cat.info(&y), cat.info(&v));
            prop_assert!(xi.inversions.union(&yi.inversions).is_subset(&vi.inversions));
            prop_assert!(vi.short.is_subset(&xi.short.union(&yi.short)));
            let gens = cat.roots(&xi.inversions.union(&yi.inversions));
            for beta in cat.roots(&vi.inversions) {
                prop_assert!(inversions::cone_membership(&beta, &gens));
            }
        }
    }
}
