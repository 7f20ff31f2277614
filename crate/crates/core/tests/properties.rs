use std::sync::Arc;

use dtc_core::dtc::condition::{clauses, clauses_direct};
use dtc_core::dtc::xn::{a_verify, xn_build, XnClause, XnOutcome};
use dtc_core::group::{Element, Exhaustion, FiniteSubset, Group, Schedule, SetSpec};
use dtc_core::groups::{Affine, Triple};
use dtc_core::num::{Dyadic, Integer};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GROUPS: [&str; 9] = [
    "int",
    "int2",
    "free:2",
    "free:w",
    "finsym",
    "affine-dyadic",
    "heis:int",
    "heis:dyadic",
    "redpow:s3",
];

fn any_group() -> impl Strategy<Value = Arc<Group>> {
    prop::sample::select(GROUPS.to_vec()).prop_map(|s| Group::from_spec_str(s).unwrap())
}

fn randoms(g: &Group, seed: u64, scale: u32, n: usize) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| g.random(&mut rng, scale)).collect()
}

/// `m / 2^k` with `k` minimal: an odd numerator or no denominator.
fn canonical(d: &Dyadic) -> bool {
    d.numerator().is_odd() || d.exponent() == 0
}

/// `m / 2^k` compared exactly against a dyadic.
fn equals(d: &Dyadic, m: i128, k: u32) -> bool {
    let num = d.numerator().to_i64().unwrap() as i128;
    num << k == m << d.exponent()
}

fn dyadic(m: i64, k: u64) -> Dyadic {
    Dyadic::new(Integer::from(m), k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn group_axioms(g in any_group(), seed in any::<u64>()) {
        let v = randoms(&g, seed, 6, 3);
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let e = g.identity();
        prop_assert_eq!(g.mul(&g.mul(a, b), c), g.mul(a, &g.mul(b, c)));
        prop_assert_eq!(g.mul(&e, a), a.clone());
        prop_assert_eq!(g.mul(a, &e), a.clone());
        prop_assert_eq!(g.mul(a, &g.inv(a)), e.clone());
        prop_assert_eq!(g.mul(&g.inv(a), a), e);
    }

    #[test]
    fn encoding_round_trips(g in any_group(), seed in any::<u64>()) {
        for x in randoms(&g, seed, 8, 4) {
            prop_assert_eq!(g.parse(&g.encode(&x)).unwrap(), x);
        }
    }

    #[test]
    fn conjugation_is_a_right_action_by_automorphisms(g in any_group(), seed in any::<u64>()) {
        let v = randoms(&g, seed, 5, 4);
        let (x, z, y, w) = (&v[0], &v[1], &v[2], &v[3]);
        prop_assert_eq!(g.conjugate(&g.mul(x, z), y), g.conjugate(z, &g.conjugate(x, y)));
        prop_assert_eq!(g.conjugate(x, &g.mul(y, w)), g.mul(&g.conjugate(x, y), &g.conjugate(x, w)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4096))]

    #[test]
    fn dyadic_arithmetic_stays_canonical(m1 in -(1i64 << 20)..(1i64 << 20), k1 in 0u32..20, m2 in -(1i64 << 20)..(1i64 << 20), k2 in 0u32..20) {
        let (p, q) = (dyadic(m1, k1 as u64), dyadic(m2, k2 as u64));
        prop_assert!(canonical(&p) && canonical(&q));
        prop_assert!(equals(&p, m1 as i128, k1));
        let (m1, m2) = (m1 as i128, m2 as i128);
        let sum = p.add(&q);
        prop_assert!(canonical(&sum));
        prop_assert!(equals(&sum, (m1 << k2) + (m2 << k1), k1 + k2));
        let product = p.mul(&q);
        prop_assert!(canonical(&product));
        prop_assert!(equals(&product, m1 * m2, k1 + k2));
        let neg = p.neg();
        prop_assert!(canonical(&neg));
        prop_assert!(equals(&neg, -m1, k1));
        prop_assert!(canonical(&p.sub(&q)));
        prop_assert!(equals(&p.sub(&q), (m1 << k2) - (m2 << k1), k1 + k2));
    }

    #[test]
    fn dyadic_text_is_minimal(m in -(1i64 << 30)..(1i64 << 30), k in 0u64..30) {
        let d = dyadic(m, k);
        let text = d.to_string();
        let (num, exp) = text.split_once("/2^").unwrap();
        let (num, exp) = (num.parse::<i64>().unwrap(), exp.parse::<u64>().unwrap());
        prop_assert!(exp == 0 || num % 2 != 0);
        prop_assert_eq!((num as i128) << k, (m as i128) << exp);
    }
}

fn matmul3(x: [[i128; 3]; 3], y: [[i128; 3]; 3]) -> [[i128; 3]; 3] {
    let mut out = [[0; 3]; 3];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).map(|k| x[r][k] * y[k][c]).sum();
        }
    }
    out
}

fn heis_matrix(a: i64, b: i64, c: i64) -> [[i128; 3]; 3] {
    [[1, a as i128, c as i128], [0, 1, b as i128], [0, 0, 1]]
}

/// The 2×2 matrix `[[2^k, r], [0, 1]]` scaled by `2^40` so dyadic entries are integers.
fn affine_matrix(a: &Affine) -> [[i128; 2]; 2] {
    let fixed = |d: &Dyadic| (d.numerator().to_i64().unwrap() as i128) << (40 - d.exponent());
    [[fixed(&a.multiplier()), fixed(&a.shift)], [0, 1i128 << 40]]
}

fn matmul2_fixed(x: [[i128; 2]; 2], y: [[i128; 2]; 2]) -> [[i128; 2]; 2] {
    let mut out = [[0; 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = (0..2).map(|k| x[r][k] * y[k][c]).sum::<i128>() >> 40;
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn heisenberg_law_is_matrix_product(v in prop::array::uniform6(-100_000i64..100_000)) {
        let g = Group::from_spec_str("heis:int").unwrap();
        let t = |a: i64, b: i64, c: i64| Element::HeisInt(Triple::new(a.into(), b.into(), c.into()));
        let product = g.mul(&t(v[0], v[1], v[2]), &t(v[3], v[4], v[5]));
        let Element::HeisInt(p) = product else { panic!("wrong family") };
        let expected = matmul3(heis_matrix(v[0], v[1], v[2]), heis_matrix(v[3], v[4], v[5]));
        let actual = heis_matrix(p.a.to_i64().unwrap(), p.b.to_i64().unwrap(), p.c.to_i64().unwrap());
        prop_assert_eq!(actual, expected);
    }

    #[test]
    fn affine_law_is_matrix_product(k1 in -8i64..=8, m1 in -1024i64..1024, e1 in 0u64..10, k2 in -8i64..=8, m2 in -1024i64..1024, e2 in 0u64..10) {
        let g = Group::from_spec_str("affine-dyadic").unwrap();
        let (x, y) = (Affine::new(k1, dyadic(m1, e1)), Affine::new(k2, dyadic(m2, e2)));
        let Element::Affine(p) = g.mul(&Element::Affine(x.clone()), &Element::Affine(y.clone())) else { panic!("wrong family") };
        prop_assert_eq!(affine_matrix(&p), matmul2_fixed(affine_matrix(&x), affine_matrix(&y)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exhaustion_invariants(g in any_group(), head in 1usize..=2, batch in 1usize..=2, stride in 1usize..=3) {
        let schedule = Schedule::with_head(head, batch, stride).unwrap();
        let ex = Exhaustion::new(g.clone(), schedule);
        let again = Exhaustion::new(g.clone(), schedule);
        for n in 0..=2 {
            let f = ex.level(n).unwrap();
            prop_assert!(f.contains(&g.identity()));
            prop_assert_eq!(f.inverse(&g), (*f).clone());
            prop_assert_eq!(&f, &again.level(n).unwrap());
            if n < 2 {
                prop_assert!(f.product(&g, &f).is_subset(&ex.level(n + 1).unwrap()));
            }
            for k in schedule.admitted(n) {
                prop_assert!(f.contains(&g.enumerate(k)));
            }
        }
    }

    #[test]
    fn admission_levels_invert_the_schedule(head in 1usize..5, batch in 1usize..5, stride in 1usize..5, k in 1usize..200) {
        let s = Schedule::with_head(head, batch, stride).unwrap();
        prop_assert!(s.admitted(s.admission_level(k)).contains(&k));
    }
}

fn clause_case(spec: &'static str) -> impl Strategy<Value = (Arc<Group>, FiniteSubset, SetSpec, Element)> {
    let g = Group::from_spec_str(spec).unwrap();
    let level = Exhaustion::new(g.clone(), Schedule::default()).level(2).unwrap();
    let size = level.len();
    let sets = if spec == "int" {
        vec![SetSpec::Fc, SetSpec::Identity, SetSpec::Even, SetSpec::Whole]
    } else {
        vec![SetSpec::Fc, SetSpec::Identity, SetSpec::Whole]
    };
    (prop::collection::vec(any::<bool>(), size), prop::sample::select(sets), any::<u64>(), 0usize..400).prop_map(
        move |(mask, v, seed, k)| {
            let f: FiniteSubset = level.iter().zip(&mask).filter(|(_, &m)| m).map(|(x, _)| x.clone()).collect();
            let x = if seed % 2 == 0 { g.enumerate(k) } else { randoms(&g, seed, 4, 1).remove(0) };
            (g.clone(), f, v, x)
        },
    )
}

macro_rules! clause_equivalence {
    ($($name:ident => $spec:expr),* $(,)?) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]
            $(
                #[test]
                fn $name((g, f, v, x) in clause_case($spec)) {
                    let v = v.oracle(&g).unwrap();
                    prop_assert_eq!(clauses(&g, &v, &f, &x), clauses_direct(&g, &v, &f, &x));
                }
            )*
        }
    };
}

clause_equivalence! {
    clauses_agree_int => "int",
    clauses_agree_int2 => "int2",
    clauses_agree_free2 => "free:2",
    clauses_agree_free_w => "free:w",
    clauses_agree_finsym => "finsym",
    clauses_agree_affine => "affine-dyadic",
    clauses_agree_heis_int => "heis:int",
    clauses_agree_heis_dyadic => "heis:dyadic",
    clauses_agree_redpow => "redpow:s3",
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn accepted_sequences_pass_a_verify(
        spec in prop::sample::select(vec!["free:2", "finsym", "heis:int", "affine-dyadic", "heis:dyadic"]),
        v in prop::sample::select(vec![SetSpec::Fc, SetSpec::Identity]),
        n in 1usize..=6,
        stride in 5usize..=7,
    ) {
        let g = Group::from_spec_str(spec).unwrap();
        let ex = Exhaustion::new(g.clone(), Schedule::new(1, stride).unwrap());
        let outcome = xn_build(&ex, &v.oracle(&g).unwrap(), n, 20_000).unwrap();
        prop_assume!(outcome.sequence().is_some());
        let x = &outcome.sequence().unwrap().elements;
        prop_assert_eq!(a_verify(&ex, x).unwrap(), None);
        let mut sorted = x.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), x.len());
    }

    #[test]
    fn abelian_b2_failures_are_hereditary(
        spec in prop::sample::select(vec!["int", "int2"]),
        head in 1usize..=2,
        stride in 1usize..=4,
        n in 1usize..=5,
    ) {
        let g = Group::from_spec_str(spec).unwrap();
        let ex = Exhaustion::new(g.clone(), Schedule::with_head(head, 1, stride).unwrap());
        let v = SetSpec::Identity.oracle(&g).unwrap();
        match xn_build(&ex, &v, n, 5_000).unwrap() {
            XnOutcome::Failed(f) => {
                prop_assert!(f.clause != XnClause::B2 || f.hereditary);
                if let Some((i, j)) = f.pair {
                    let y = g.mul(&g.inv(&f.partial[i]), &f.partial[j]);
                    prop_assert!(ex.level(f.step + 1).unwrap().contains(&y));
                }
            }
            XnOutcome::Built(seq) => {
                let x = &seq.elements;
                for step in 0..x.len() {
                    let next = ex.level(step + 1).unwrap();
                    for j in 0..step {
                        for i in 0..j {
                            prop_assert!(!next.contains(&g.mul(&g.inv(&x[i]), &x[j])));
                        }
                    }
                }
            }
        }
    }
}
