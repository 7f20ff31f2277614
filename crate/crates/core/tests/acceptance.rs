//! One test per acceptance criterion. Each prints a single `criterion N: PASS|FAIL` line.

use std::sync::Arc;
use std::time::{Duration, Instant};

use dtc_core::classify::{classify, verify, xn_schedule, Classification, Options, DEFAULT_CANDIDATE_BUDGET, XN_PRODUCT_BUDGET};
use dtc_core::conjugacy::{class_ball, class_growth};
use dtc_core::dtc::condition::condition_i_search;
use dtc_core::dtc::separation::{lemma_sep_build, lemma_sep_verify};
use dtc_core::dtc::symmetrize::{e_set_commutation, power_commute_check, symmetrize};
use dtc_core::dtc::twopoint::{cover_failure, twopoint_build};
use dtc_core::dtc::xn::{a_verify, w_translate_all, w_translate_bound_all, xn_build, XnClause, XnOutcome};
use dtc_core::group::{Element, Exhaustion, FiniteSubset, Group, GroupSpec, Schedule, SetSpec};
use dtc_core::groups::{fc_oracle, icc_witness};
use dtc_core::witness::{verify_witness, Witness};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn group(s: &str) -> Arc<Group> {
    Group::from_spec_str(s).unwrap()
}

fn outcome(n: u8, what: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("criterion {n}: PASS {what}");
    } else {
        println!("criterion {n}: FAIL {what}");
        for f in &failures {
            println!("  {f}");
        }
        panic!("criterion {n} failed: {}", failures.join("; "));
    }
}

#[test]
fn criterion_01_group_axioms() {
    let mut failures = Vec::new();
    for spec in GroupSpec::registered() {
        let g = Group::new(spec.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let start = Instant::now();
        let e = g.identity();
        for _ in 0..1000 {
            let (x, y, z) = (g.random(&mut rng, 6), g.random(&mut rng, 6), g.random(&mut rng, 6));
            if g.mul(&g.mul(&x, &y), &z) != g.mul(&x, &g.mul(&y, &z)) {
                failures.push(format!("{spec}: associativity at {}, {}, {}", g.encode(&x), g.encode(&y), g.encode(&z)));
                break;
            }
            if g.mul(&x, &e) != x || g.mul(&e, &x) != x {
                failures.push(format!("{spec}: identity at {}", g.encode(&x)));
                break;
            }
            if !g.is_identity(&g.mul(&x, &g.inv(&x))) || !g.is_identity(&g.mul(&g.inv(&x), &x)) {
                failures.push(format!("{spec}: inverse at {}", g.encode(&x)));
                break;
            }
        }
        if start.elapsed() > Duration::from_secs(5) {
            failures.push(format!("{spec}: {:?} for 1000 triples", start.elapsed()));
        }
    }
    outcome(1, "axioms on 1000 triples for every registered group", failures);
}

#[test]
fn criterion_02_exhaustion_invariants() {
    // g_1 at level 0 and g_2..g_20 at level 6, so F_6 covers g_0..g_20
    let schedule = Schedule::with_head(1, 19, 6).unwrap();
    let mut failures = Vec::new();
    for spec in GroupSpec::registered() {
        let g = Group::new(spec.clone());
        let ex = Exhaustion::new(g.clone(), schedule);
        let levels: Vec<Arc<FiniteSubset>> = match (0..=7).map(|n| ex.level(n)).collect() {
            Ok(l) => l,
            Err(e) => {
                failures.push(format!("{spec}: {e}"));
                continue;
            }
        };
        for n in 0..=6 {
            let f = &levels[n];
            if !f.contains(&g.identity()) {
                failures.push(format!("{spec}: e ∉ F_{n}"));
            }
            if f.inverse(&g) != **f {
                failures.push(format!("{spec}: F_{n} not symmetric"));
            }
            if !f.product(&g, f).is_subset(&levels[n + 1]) {
                failures.push(format!("{spec}: F_{n} F_{n} ⊄ F_{}", n + 1));
            }
        }
        for k in 0..=20 {
            let gk = g.enumerate(k);
            if !levels[6].contains(&gk) {
                failures.push(format!("{spec}: g_{k} = {} ∉ F_6", g.encode(&gk)));
            }
        }
    }
    outcome(2, "e ∈ F_n = F_n^-1, F_n F_n ⊆ F_n+1, g_0..g_20 ⊆ F_6", failures);
}

/// `m/2^k`, or a plain integer, as a fraction over a power of two.
#[derive(Clone, Debug)]
struct Q(BigInt, u32);

impl Q {
    fn parse(s: &str) -> Q {
        match s.split_once("/2^") {
            Some((m, k)) => Q(m.parse().unwrap(), k.parse().unwrap()),
            None => Q(s.parse().unwrap(), 0),
        }
    }

    fn pow2(k: i64) -> Q {
        if k >= 0 {
            Q(BigInt::from(1) << k as usize, 0)
        } else {
            Q(BigInt::from(1), (-k) as u32)
        }
    }

    fn int(n: i64) -> Q {
        Q(BigInt::from(n), 0)
    }

    fn add(&self, o: &Q) -> Q {
        let e = self.1.max(o.1);
        Q((&self.0 << (e - self.1) as usize) + (&o.0 << (e - o.1) as usize), e)
    }

    fn mul(&self, o: &Q) -> Q {
        Q(&self.0 * &o.0, self.1 + o.1)
    }

    fn same(&self, o: &Q) -> bool {
        let e = self.1.max(o.1);
        (&self.0 << (e - self.1) as usize) == (&o.0 << (e - o.1) as usize)
    }
}

type M = Vec<Vec<Q>>;

fn matmul(a: &M, b: &M) -> M {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Q::int(0), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

fn same(a: &M, b: &M) -> bool {
    a.iter().zip(b).all(|(r, s)| r.iter().zip(s).all(|(x, y)| x.same(y)))
}

/// The matrix of an element, read off its text encoding.
fn matrix(g: &Group, x: &Element) -> M {
    let text = g.encode(x);
    let inner = text.trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = inner.split(',').collect();
    match x {
        Element::Affine(a) => vec![vec![Q::pow2(a.scale), Q::parse(parts[1])], vec![Q::int(0), Q::int(1)]],
        _ => {
            let [a, b, c] = [parts[0], parts[1], parts[2]].map(Q::parse);
            vec![
                vec![Q::int(1), a, c],
                vec![Q::int(0), Q::int(1), b],
                vec![Q::int(0), Q::int(0), Q::int(1)],
            ]
        }
    }
}

#[test]
fn criterion_03_matrix_semantics() {
    let mut failures = Vec::new();
    for spec in ["heis:int", "heis:dyadic", "affine-dyadic"] {
        let g = group(spec);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let (x, y) = (g.random(&mut rng, 8), g.random(&mut rng, 8));
            let lhs = matrix(&g, &g.mul(&x, &y));
            let rhs = matmul(&matrix(&g, &x), &matrix(&g, &y));
            if !same(&lhs, &rhs) {
                failures.push(format!("{spec}: {} * {}", g.encode(&x), g.encode(&y)));
                break;
            }
        }
    }
    outcome(3, "Heisenberg and affine products equal matrix products on 1000 pairs", failures);
}

#[test]
fn criterion_04_heisenberg_fc_dichotomy() {
    let ex = Exhaustion::new(group("heis:int"), Schedule::default());
    let g = ex.group().clone();
    let fc = fc_oracle(&g);
    let mut failures = Vec::new();
    for y in ex.level(2).unwrap().iter() {
        let name = g.encode(y);
        if fc.contains(y) {
            if class_ball(&ex, y, 4).unwrap().elements != FiniteSubset::singleton(y.clone()) {
                failures.push(format!("{name} is central but has a nontrivial class ball"));
            }
            continue;
        }
        let growth = class_growth(&ex, y, 4).unwrap();
        if !(growth[2] < growth[3] && growth[3] < growth[4]) {
            failures.push(format!("{name}: class growth {growth:?}"));
        }
        for m in 0..=4 {
            let f = ex.level(m).unwrap();
            match icc_witness(&g, y, &f, DEFAULT_CANDIDATE_BUDGET) {
                Ok(esc) if !f.contains(&esc.image) && g.conjugate(&esc.conjugator, y) == esc.image => {}
                Ok(esc) => failures.push(format!("{name}: escape {} stays in F_{m}", g.encode(&esc.image))),
                Err(e) => failures.push(format!("{name}: F_{m}: {e}")),
            }
        }
    }
    outcome(4, "central elements have singleton classes, the rest grow and escape", failures);
}

#[test]
fn criterion_05_separation() {
    let mut failures = Vec::new();
    for spec in ["free:2", "finsym", "heis:int"] {
        let ex = Exhaustion::new(group(spec), Schedule::default());
        let g = ex.group().clone();
        let start = Instant::now();
        let family: Vec<FiniteSubset> = (0..16).map(|a| (*ex.level(a % 3).unwrap()).clone()).collect();
        match lemma_sep_build(&g, &family, DEFAULT_CANDIDATE_BUDGET) {
            Ok(seq) => {
                if let Some(f) = lemma_sep_verify(&g, &family, &seq.elements).unwrap() {
                    failures.push(format!("{spec}: indices {:?} share {}", f.indices, g.encode(&f.common)));
                }
            }
            Err(e) => failures.push(format!("{spec}: {e}")),
        }
        if start.elapsed() > Duration::from_secs(60) {
            failures.push(format!("{spec}: {:?}", start.elapsed()));
        }
    }
    outcome(5, "separation with |A| = 16 over F_0..F_2", failures);
}

#[test]
fn criterion_06_twopoint() {
    let ex = Exhaustion::new(group("finsym"), Schedule::default());
    let g = ex.group().clone();
    let family: Vec<FiniteSubset> = (0..=5).map(|n| (*ex.level(n).unwrap()).clone()).collect();
    let mut failures = Vec::new();
    match twopoint_build(&g, &family, DEFAULT_CANDIDATE_BUDGET) {
        Ok(tp) => {
            let common = tp.s[0].intersection(&tp.s[1]);
            if !common.is_empty() {
                failures.push(format!("S_0 ∩ S_1 has {} elements", common.len()));
            }
            if let Some((i, k, x)) = cover_failure(&g, &family, &tp.z, &tp.w, &tp.s) {
                failures.push(format!("W_{i} z_{i},{k}^-1 has {} outside K ∪ S_{i}", g.encode(&x)));
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    outcome(6, "two-point split over F_0..F_5 on finsym", failures);
}

#[test]
fn criterion_07_xn_sequence() {
    let mut failures = Vec::new();
    for spec in ["free:2", "finsym", "affine-dyadic", "heis:int"] {
        let ex = Exhaustion::with_budget(group(spec), xn_schedule(), XN_PRODUCT_BUDGET);
        let g = ex.group().clone();
        let built = match xn_build(&ex, &fc_oracle(&g), 12, DEFAULT_CANDIDATE_BUDGET) {
            Ok(XnOutcome::Built(seq)) => seq,
            Ok(XnOutcome::Failed(f)) => {
                failures.push(format!("{spec}: no x_{} ({:?})", f.step, f.clause));
                continue;
            }
            Err(e) => {
                failures.push(format!("{spec}: {e}"));
                continue;
            }
        };
        let x = &built.elements;
        if let Some(f) = a_verify(&ex, x).unwrap() {
            failures.push(format!("{spec}: translates meet: {f:?}"));
        }
        if let Some((i, j, c)) = w_translate_all(&ex, x).unwrap() {
            failures.push(format!(
                "{spec}: W x_{i}^-1 ∩ W x_{j}^-1 contains {} outside the union of F_k x_k x_{j}^-1 over k ≤ {j}",
                g.encode(&c)
            ));
            // informational: the union over n ≤ j of F_n x_n x_i^-1 is added back
            let widened = w_translate_bound_all(&ex, x).unwrap();
            println!("  {spec}: widened bound {}", if widened.is_none() { "holds" } else { "fails" });
        }
    }
    outcome(7, "x_0..x_12 against FC with all W-translate pairs bounded", failures);
}

#[test]
fn criterion_08_abelian_control() {
    let ex = Exhaustion::new(group("int"), Schedule::default());
    let g = ex.group().clone();
    let mut failures = Vec::new();
    let zero = SetSpec::Identity.oracle(&g).unwrap();
    match xn_build(&ex, &zero, 6, DEFAULT_CANDIDATE_BUDGET).unwrap() {
        XnOutcome::Failed(f) if f.hereditary && f.clause == XnClause::B2 && f.step <= 6 => {}
        XnOutcome::Failed(f) => failures.push(format!("stopped at x_{} on {:?}, hereditary {}", f.step, f.clause, f.hereditary)),
        XnOutcome::Built(_) => failures.push("x_0..x_6 exist against {0}".into()),
    }
    let f2 = ex.level(2).unwrap();
    let budget = ex.level(6).unwrap().len();
    for v in [SetSpec::Even, SetSpec::Identity] {
        let oracle = v.oracle(&g).unwrap();
        if let Some(w) = condition_i_search(&g, &oracle, &f2, budget) {
            failures.push(format!("{v:?}: found {}", g.encode(&w.x)));
        }
    }
    outcome(8, "integers stop hereditarily and never satisfy condition (i)", failures);
}

#[test]
fn criterion_09_symmetrization() {
    let ex = Exhaustion::new(group("redpow:s3"), Schedule::default());
    let g = ex.group().clone();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let x = g.random(&mut rng, 6);
        if !g.is_identity(&g.pow(&x, 6)) {
            failures.push(format!("{}^6 ≠ e", g.encode(&x)));
            break;
        }
    }
    let data = symmetrize(&ex, &g.enumerate(1), 3).unwrap();
    for _ in 0..100 {
        let (x, y) = (g.random(&mut rng, 6), g.random(&mut rng, 6));
        let lhs = data.alpha(&g, &g.mul(&x, &y)).unwrap();
        let rhs = data.alpha(&g, &x).unwrap().then(&data.alpha(&g, &y).unwrap());
        if lhs != rhs {
            failures.push(format!("alpha(xy) ≠ alpha(x) alpha(y) at {}, {}", g.encode(&x), g.encode(&y)));
            break;
        }
    }
    let f3: Vec<Element> = ex.level(3).unwrap().iter().cloned().collect();
    for _ in 0..100 {
        let k = rng.gen_range(0..=8);
        let a: FiniteSubset = (0..k).map(|_| f3[rng.gen_range(0..f3.len())].clone()).collect();
        if !e_set_commutation(&ex, &data, &a).unwrap() {
            failures.push(format!("E ∩ y^-1 A ≠ E ∩ A y^-1 for |A| = {}", a.len()));
            break;
        }
    }
    if let Some((x, y)) = power_commute_check(&g, 6, 1000, 9) {
        failures.push(format!("x^6 y ≠ y x^6 at {}, {}", g.encode(&x), g.encode(&y)));
    }
    outcome(9, "redpow:s3 has exponent 6 and a homomorphic class action", failures);
}

#[test]
fn criterion_10_classifier_end_to_end() {
    let schema: Value = serde_json::from_str(include_str!("../schema/dtc-1.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let expected = [
        ("int", Classification::Dtc2),
        ("free:2", Classification::Dtc1),
        ("finsym", Classification::Dtc1),
        ("affine-dyadic", Classification::Dtc1),
        ("heis:int", Classification::Dtc1),
        ("redpow:s3", Classification::Dtc2),
    ];
    let mut failures = Vec::new();
    for (spec, class) in expected {
        let g = group(spec);
        let report = classify(&g, &Options::default());
        let text = report.to_json();
        if report.classification != class {
            failures.push(format!("{spec}: {} instead of {class} ({:?})", report.classification, report.errors));
        }
        if report.exit_code() != 0 {
            failures.push(format!("{spec}: exit code {}", report.exit_code()));
        }
        let doc: Value = serde_json::from_str(&text).unwrap();
        for e in validator.iter_errors(&doc) {
            failures.push(format!("{spec}: schema: {e} at {}", e.instance_path));
        }
        if classify(&g, &Options::default()).to_json() != text {
            failures.push(format!("{spec}: rerun differs"));
        }
        for (i, w) in report.witnesses.iter().enumerate() {
            let back = match Witness::from_json(&w.to_json()) {
                Ok(b) => b,
                Err(e) => {
                    failures.push(format!("{spec} w{i}: {e}"));
                    continue;
                }
            };
            let replay = verify_witness(&back).unwrap();
            if &back != w || !replay.consistent() {
                failures.push(format!("{spec} w{i}: replay differs at {:?}", replay.first_mismatch));
            }
            let ver = verify(&back).unwrap();
            let doc: Value = serde_json::from_str(&ver.to_json()).unwrap();
            if !validator.is_valid(&doc) {
                failures.push(format!("{spec} w{i}: verification does not match the schema"));
            }
        }
    }
    outcome(10, "six groups classify as expected with replayable certificates", failures);
}
