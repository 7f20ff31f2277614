//! Serialized witnesses and the checks that replay them.
//!
//! A witness stores the group, the construction parameters and the produced
//! elements as text. [`run_checks`] recomputes every check from those fields
//! alone, so a stored witness can be re-verified by a later run.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::conjugacy::class_ball;
use crate::dtc::condition::{clauses_direct, condition_i_search, preimage};
use crate::dtc::separation::lemma_sep_verify;
use crate::dtc::symmetrize::{e_set_commutation, permutation_pow, power_commute_pair, symmetrize};
use crate::dtc::twopoint::{assemble, cover_failure, doubled_family, split_doubled};
use crate::dtc::xn::{a_verify, w_translate_all, w_translate_bound_all};
use crate::dtc::StepTrace;
use crate::error::{Error, Result};
use crate::group::{Element, Exhaustion, FiniteSubset, Group, GroupSpec, Schedule, SetSpec, DEFAULT_PRODUCT_BUDGET};
use crate::groups::{fc_oracle, Homomorphism};
pub const SCHEMA: &str = "dtc/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    SeparationZ,
    TwopointZ,
    Xn,
    XnObstruction,
    ConditionI,
    IccEscape,
    Growth,
    PowerCommute,
    Pullback,
    Symmetrization,
    Axioms,
}

impl WitnessKind {
    /// The checks a complete witness of this kind carries.
    pub fn required_checks(self, group: &str, found: bool) -> Vec<&'static str> {
        match self {
            WitnessKind::SeparationZ => vec!["base-identity", "separation"],
            WitnessKind::TwopointZ => vec!["separation", "s-disjoint", "w-cover"],
            WitnessKind::Xn => vec!["distinct", "a1-a2", "w-translate", "w-translate-bound"],
            WitnessKind::XnObstruction => vec!["hereditary-b2"],
            WitnessKind::ConditionI if found => vec!["clause-fv", "clause-fxfv", "escapes"],
            WitnessKind::ConditionI => vec!["clause-fv", "clause-fxfv", "escapes", "scan-exhausted"],
            WitnessKind::IccEscape => vec!["outside-fc", "conjugate", "escapes"],
            WitnessKind::Growth => vec!["class-behaviour"],
            WitnessKind::PowerCommute => vec!["power-commute"],
            WitnessKind::Pullback => vec!["section-law", "outside-u", "clause-fu", "clause-fyfu"],
            WitnessKind::Symmetrization if group.starts_with("redpow:") => vec![
                "class-stable",
                "alpha-homomorphism",
                "alpha-exponent",
                "kernel-centralizes",
                "e-set-commutation",
                "exponent-kills",
            ],
            WitnessKind::Symmetrization => vec![
                "class-stable",
                "alpha-homomorphism",
                "alpha-exponent",
                "kernel-centralizes",
                "e-set-commutation",
            ],
            WitnessKind::Axioms => vec!["associativity", "identity", "inverse"],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameters {
    pub schedule: Schedule,
    pub product_budget: u64,
    /// Levels `F_l` forming a set family, in order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<usize>>,
    /// Sequence length bound, or the failing step of an obstruction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<SetSpec>,
    /// `F = F_level`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<usize>,
    /// Candidate budget for searches.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<(usize, usize)>,
}

impl Parameters {
    pub fn new(schedule: Schedule, product_budget: u64) -> Self {
        Self {
            schedule,
            product_budget,
            levels: None,
            n: None,
            v: None,
            level: None,
            radius: None,
            budget: None,
            exponent: None,
            samples: None,
            seed: None,
            hom: None,
            y: None,
            pair: None,
        }
    }

    fn need<T: Clone>(field: &Option<T>, name: &str) -> Result<T> {
        field
            .clone()
            .ok_or_else(|| Error::Parse(format!("parameters.{name} is required for this witness kind")))
    }
}

impl Default for Parameters {
    fn default() -> Self {
        Self::new(Schedule::default(), DEFAULT_PRODUCT_BUDGET)
    }
}

/// The outcome of one named verifier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub name: String,
    pub statement: String,
    pub depth: usize,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    fn new(name: &str, statement: &str, depth: usize, failure: Option<String>) -> Self {
        Self {
            name: name.into(),
            statement: statement.into(),
            depth,
            pass: failure.is_none(),
            counterexample: failure,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub schema: String,
    pub group: String,
    pub kind: WitnessKind,
    pub parameters: Parameters,
    pub elements: Vec<String>,
    #[serde(default)]
    pub trace: Vec<StepTrace>,
    pub checks: Vec<Check>,
}

impl Witness {
    /// Builds a witness and fills in its checks.
    pub fn assemble(
        group: &Arc<Group>,
        kind: WitnessKind,
        parameters: Parameters,
        elements: &[Element],
        trace: Vec<StepTrace>,
    ) -> Result<Self> {
        let mut w = Self {
            schema: SCHEMA.into(),
            group: group.id(),
            kind,
            parameters,
            elements: elements.iter().map(|g| group.encode(g)).collect(),
            trace,
            checks: Vec::new(),
        };
        w.checks = run_checks(&w)?;
        Ok(w)
    }

    /// Like [`Witness::assemble`] for elements already encoded, possibly in
    /// different groups.
    pub fn from_text(group: String, kind: WitnessKind, parameters: Parameters, elements: Vec<String>, trace: Vec<StepTrace>) -> Result<Self> {
        let mut w = Self {
            schema: SCHEMA.into(),
            group,
            kind,
            parameters,
            elements,
            trace,
            checks: Vec::new(),
        };
        w.checks = run_checks(&w)?;
        Ok(w)
    }

    pub fn required_checks(&self) -> Vec<&'static str> {
        self.kind.required_checks(&self.group, !self.elements.is_empty())
    }

    pub fn passes(&self) -> bool {
        let required = self.required_checks();
        required.iter().all(|r| self.checks.iter().any(|c| c.name == *r && c.pass))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let w: Witness = serde_json::from_str(text).map_err(|e| Error::Parse(format!("witness: {e}")))?;
        if w.schema != SCHEMA {
            return Err(Error::Parse(format!("schema {:?}, expected {SCHEMA:?}", w.schema)));
        }
        Ok(w)
    }
}

/// The group and exhaustion a witness refers to.
pub struct Context {
    pub group: Arc<Group>,
    pub ex: Exhaustion,
}

impl Context {
    pub fn new(group: Arc<Group>, params: &Parameters) -> Self {
        let ex = Exhaustion::with_budget(group.clone(), params.schedule, params.product_budget);
        Self { group, ex }
    }

    fn parse_all(&self, items: &[String]) -> Result<Vec<Element>> {
        items.iter().map(|s| self.group.parse(s)).collect()
    }

    fn level(&self, n: usize) -> Result<FiniteSubset> {
        Ok((*self.ex.level(n)?).clone())
    }
}

/// Recomputes every check of `w` from its group, parameters and elements.
pub fn run_checks(w: &Witness) -> Result<Vec<Check>> {
    let p = &w.parameters;
    if w.kind == WitnessKind::Pullback {
        let hom = Homomorphism::from_spec(&Parameters::need(&p.hom, "hom")?)?;
        if hom.source().id() != w.group {
            return Err(Error::Usage(format!("{} does not start at {}", hom.id(), w.group)));
        }
        return pullback_checks(&Context::new(hom.source().clone(), p), &hom, p, &w.elements);
    }
    let ctx = Context::new(Group::from_spec_str(&w.group)?, p);
    let elements = ctx.parse_all(&w.elements)?;
    let g = &ctx.group;
    let enc = |x: &Element| g.encode(x);
    Ok(match w.kind {
        WitnessKind::SeparationZ => {
            let levels = Parameters::need(&p.levels, "levels")?;
            let family = levels.iter().map(|&l| ctx.level(l)).collect::<Result<Vec<_>>>()?;
            let depth = levels.iter().copied().max().unwrap_or(0);
            let base = elements
                .iter()
                .take(3)
                .position(|z| !g.is_identity(z))
                .map(|i| format!("z_{i} = {}", enc(&elements[i])));
            vec![
                Check::new("base-identity", "z_0 = z_1 = z_2 = e", depth, base),
                separation_check(g, &family, &elements, depth)?,
            ]
        }
        WitnessKind::TwopointZ => {
            let levels = Parameters::need(&p.levels, "levels")?;
            let family = levels.iter().map(|&l| ctx.level(l)).collect::<Result<Vec<_>>>()?;
            let depth = levels.iter().copied().max().unwrap_or(0);
            let doubled = doubled_family(&family);
            let sep = separation_check(g, &doubled, &elements, depth)?;
            if elements.len() != doubled.len() {
                return Ok(vec![sep]);
            }
            let z = split_doubled(&elements);
            let (wi, s) = assemble(g, &family, &z);
            let meet = s[0].intersection(&s[1]).iter().next().map(enc);
            let cover = cover_failure(g, &family, &z, &wi, &s)
                .map(|(i, m, x)| format!("i = {i}, K = F_{}: {}", levels[m], enc(&x)));
            vec![
                sep,
                Check::new("s-disjoint", "S_0 ∩ S_1 = ∅", depth, meet),
                Check::new("w-cover", "W_i z_iK^-1 ⊆ K ∪ S_i", depth, cover),
            ]
        }
        WitnessKind::Xn => {
            let depth = elements.len().saturating_sub(1);
            let distinct = (0..elements.len())
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .find(|&(i, j)| elements[i] == elements[j])
                .map(|(i, j)| format!("x_{i} = x_{j}"));
            let a = a_verify(&ctx.ex, &elements)?.map(|f| {
                let [n, i, k, j] = f.indices;
                format!("{}: F_{n} x_{n} x_{i}^-1 ∩ F_{k} x_{k} x_{j}^-1 ∋ {}", f.equation, enc(&f.common))
            });
            let wt = w_translate_all(&ctx.ex, &elements)?.map(|(i, j, x)| format!("i = {i}, j = {j}: {}", enc(&x)));
            let wb = w_translate_bound_all(&ctx.ex, &elements)?.map(|(i, j, x)| format!("i = {i}, j = {j}: {}", enc(&x)));
            vec![
                Check::new("distinct", "x_i ≠ x_j for i ≠ j", depth, distinct),
                Check::new("a1-a2", "F_n x_n x_i^-1 ∩ F_k x_k x_j^-1 = ∅ (i,j < k < n); F_n x_n x_i^-1 ∩ F_n x_n x_j^-1 = ∅ (i < j < n)", depth, a),
                Check::new("w-translate", "W x_i^-1 ∩ W x_j^-1 ⊆ ⋃_{k≤j} F_k x_k x_j^-1", depth, wt),
                Check::new(
                    "w-translate-bound",
                    "W x_i^-1 ∩ W x_j^-1 ⊆ ⋃_{k≤j} F_k x_k x_j^-1 ∪ ⋃_{n≤j} F_n x_n x_i^-1",
                    depth,
                    wb,
                ),
            ]
        }
        WitnessKind::XnObstruction => {
            let n = Parameters::need(&p.n, "n")?;
            let (i, j) = Parameters::need(&p.pair, "pair")?;
            let failure = if !(i < j && j < n && n == elements.len()) {
                Some(format!("indices i = {i}, j = {j}, step {n} with {} terms", elements.len()))
            } else {
                let y = g.mul(&g.inv(&elements[i]), &elements[j]);
                let next = ctx.ex.level(n + 1)?;
                match (g.is_central(&y), next.contains(&y)) {
                    (true, true) => None,
                    (false, _) => Some(format!("x_{i}^-1 x_{j} = {} is not central", enc(&y))),
                    (true, false) => Some(format!("x_{i}^-1 x_{j} = {} lies outside F_{}", enc(&y), n + 1)),
                }
            };
            vec![Check::new(
                "hereditary-b2",
                "x_i^-1 x_j is central and lies in F_{n+1}, so every candidate x_n breaks (b2)",
                n + 1,
                failure,
            )]
        }
        WitnessKind::ConditionI => {
            let v_spec = Parameters::need(&p.v, "v")?;
            let v = v_spec.oracle(g)?;
            let level = Parameters::need(&p.level, "level")?;
            let f = ctx.level(level)?;
            let Some(x) = elements.first() else {
                let budget = Parameters::need(&p.budget, "budget")?;
                let found = condition_i_search(g, &v, &f, budget).map(|w| format!("candidate {} satisfies both clauses", enc(&w.x)));
                return Ok(vec![Check::new(
                    "scan-exhausted",
                    "no candidate among the first `budget` satisfies both clauses",
                    level,
                    found,
                )]);
            };
            let c = clauses_direct(g, &v, &f, x);
            let expected: Vec<Element> = f
                .inverse(g)
                .iter()
                .filter(|w| !v.contains(w))
                .map(|w| g.conjugate(x, w))
                .collect();
            let escapes = if expected.as_slice() != &elements[1..] {
                Some("recorded conjugates differ from x^-1 w x over F^-1 \\ V".to_string())
            } else {
                expected
                    .iter()
                    .find(|c| f.contains(c) && !v.contains(c))
                    .map(|c| format!("{} ∈ F \\ V", enc(c)))
            };
            vec![
                Check::new("clause-fv", "x ∉ F V", level, (!c.outside_fv).then(|| enc(x))),
                Check::new("clause-fxfv", "x ∉ F x (F \\ V)", level, (!c.outside_fxfv).then(|| enc(x))),
                Check::new("escapes", "x^-1 w x ∉ F \\ V for w ∈ F^-1 \\ V", level, escapes),
            ]
        }
        WitnessKind::IccEscape => {
            let level = Parameters::need(&p.level, "level")?;
            let y = g.parse(&Parameters::need(&p.y, "y")?)?;
            let [conj, image] = elements.as_slice() else {
                return Err(Error::Parse("an escape witness has two elements".into()));
            };
            let f = ctx.level(level)?;
            let actual = g.conjugate(conj, &y);
            vec![
                Check::new("outside-fc", "y ∉ FC(G)", level, fc_oracle(g).contains(&y).then(|| enc(&y))),
                Check::new("conjugate", "x^-1 y x = image", level, (actual != *image).then(|| enc(&actual))),
                Check::new("escapes", "image ∉ F_m", level, f.contains(image).then(|| enc(image))),
            ]
        }
        WitnessKind::Growth => {
            let radius = Parameters::need(&p.radius, "radius")?;
            let y = g.parse(&Parameters::need(&p.y, "y")?)?;
            let outer = class_ball(&ctx.ex, &y, radius)?;
            let failure = if fc_oracle(g).contains(&y) {
                (outer.elements != FiniteSubset::singleton(y.clone())).then(|| format!("class ball of size {}", outer.len()))
            } else {
                let inner = class_ball(&ctx.ex, &y, 2)?;
                (inner.len() >= outer.len()).then(|| format!("sizes {} then {}", inner.len(), outer.len()))
            };
            vec![Check::new(
                "class-behaviour",
                "y ∈ FC: class ball is {y}; y ∉ FC: class ball grows strictly from radius 2",
                radius,
                failure,
            )]
        }
        WitnessKind::PowerCommute => {
            let n = Parameters::need(&p.exponent, "exponent")?;
            let failure = match elements.as_slice() {
                [x, y] => (!power_commute_pair(g, n, x, y)).then(|| format!("x = {}, y = {}", enc(x), enc(y))),
                [] => {
                    let samples = Parameters::need(&p.samples, "samples")?;
                    let seed = Parameters::need(&p.seed, "seed")?;
                    crate::dtc::symmetrize::power_commute_check(g, n, samples, seed)
                        .map(|(x, y)| format!("x = {}, y = {}", enc(&x), enc(&y)))
                }
                _ => return Err(Error::Parse("a power-commute witness has zero or two elements".into())),
            };
            vec![Check::new("power-commute", "x^n y = y x^n", n as usize, failure)]
        }
        WitnessKind::Symmetrization => symmetrization_checks(&ctx, p)?,
        WitnessKind::Axioms => axiom_checks(g, p)?,
        WitnessKind::Pullback => unreachable!("handled above"),
    })
}

fn separation_check(g: &Group, family: &[FiniteSubset], z: &[Element], depth: usize) -> Result<Check> {
    let failure = lemma_sep_verify(g, family, z)?.map(|f| {
        let [a, b, c, d] = f.indices;
        format!("(α,β,γ,δ) = ({a},{b},{c},{d}): {}", g.encode(&f.common))
    });
    Ok(Check::new(
        "separation",
        "F_α z_α z_γ^-1 ∩ F_β z_β z_δ^-1 = ∅ for distinct α,β,γ,δ",
        depth,
        failure,
    ))
}

fn pullback_checks(ctx: &Context, hom: &Homomorphism, p: &Parameters, items: &[String]) -> Result<Vec<Check>> {
    let level = Parameters::need(&p.level, "level")?;
    let v = Parameters::need(&p.v, "v")?.oracle(hom.target())?;
    let [target, lifted] = items else {
        return Err(Error::Parse("a pullback witness has two elements".into()));
    };
    let target = hom.target().parse(target)?;
    let lifted = ctx.group.parse(lifted)?;
    let f = ctx.level(level)?;
    let u = preimage(hom, &v);
    let c = clauses_direct(&ctx.group, &u, &f, &lifted);
    let enc = |x: &Element| ctx.group.encode(x);
    let law = (hom.apply(&lifted) != target || hom.section(&target) != lifted).then(|| enc(&lifted));
    Ok(vec![
        Check::new("section-law", "π(y) = x and y = section(x)", level, law),
        Check::new("outside-u", "y ∉ U = π^-1(V)", level, u.contains(&lifted).then(|| enc(&lifted))),
        Check::new("clause-fu", "y ∉ F U", level, (!c.outside_fv).then(|| enc(&lifted))),
        Check::new("clause-fyfu", "y ∉ F y (F \\ U)", level, (!c.outside_fxfv).then(|| enc(&lifted))),
    ])
}

fn symmetrization_checks(ctx: &Context, p: &Parameters) -> Result<Vec<Check>> {
    let g = &ctx.group;
    let enc = |x: &Element| g.encode(x);
    let radius = Parameters::need(&p.radius, "radius")?;
    let samples = Parameters::need(&p.samples, "samples")?;
    let seed = Parameters::need(&p.seed, "seed")?;
    let y = g.parse(&Parameters::need(&p.y, "y")?)?;
    let data = match symmetrize(&ctx.ex, &y, radius) {
        Ok(d) => d,
        Err(Error::Precondition(msg)) => {
            return Ok(vec![Check::new("class-stable", "class ball equal at radius and radius + 1", radius, Some(msg))]);
        }
        Err(e) => return Err(e),
    };
    let exponent = match p.exponent {
        Some(n) => n,
        None => data
            .exponent()
            .ok_or_else(|| Error::Precondition("class too large for a 64-bit exponent".into()))?,
    };
    let level = ctx.ex.level(radius)?;
    let members = level.as_slice();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hom_fail = None;
    for _ in 0..samples {
        let x = members.choose(&mut rng).expect("levels contain e");
        let z = members.choose(&mut rng).expect("levels contain e");
        if data.alpha(g, &g.mul(x, z))? != data.alpha(g, x)?.then(&data.alpha(g, z)?) {
            hom_fail = Some(format!("x = {}, z = {}", enc(x), enc(z)));
            break;
        }
    }
    let mut exp_fail = None;
    for x in members {
        if !permutation_pow(&data.alpha(g, x)?, exponent).is_identity() {
            exp_fail = Some(enc(x));
            break;
        }
    }
    let kernel = data.kernel(&ctx.ex)?;
    let central_fail = kernel.iter().find(|x| g.mul(x, &y) != g.mul(&y, x)).map(enc);
    let mut eset_fail = None;
    for t in 0..samples {
        let a: FiniteSubset = members.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        if !e_set_commutation(&ctx.ex, &data, &a)? {
            eset_fail = Some(format!("sample {t} of size {}", a.len()));
            break;
        }
    }
    let mut checks = vec![
        Check::new("class-stable", "class ball equal at radius and radius + 1", radius, None),
        Check::new("alpha-homomorphism", "alpha(xz) = alpha(x) then alpha(z)", radius, hom_fail),
        Check::new("alpha-exponent", "alpha(x)^n = id on F_radius", radius, exp_fail),
        Check::new("kernel-centralizes", "every x ∈ E commutes with y", radius, central_fail),
        Check::new("e-set-commutation", "E ∩ y^-1 A = E ∩ A y^-1", radius, eset_fail),
    ];
    if matches!(g.spec(), GroupSpec::ReducedPower { .. }) {
        let kill = (0..samples * 10)
            .map(|_| g.random(&mut rng, 4))
            .find(|x| !g.is_identity(&g.pow(x, exponent as i64)))
            .map(|x| enc(&x));
        checks.push(Check::new("exponent-kills", "x^n = e", radius, kill));
    }
    Ok(checks)
}

fn axiom_checks(g: &Group, p: &Parameters) -> Result<Vec<Check>> {
    let samples = Parameters::need(&p.samples, "samples")?;
    let seed = Parameters::need(&p.seed, "seed")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut assoc, mut ident, mut inv) = (None, None, None);
    let e = g.identity();
    for _ in 0..samples {
        let (a, b, c) = (g.random(&mut rng, 6), g.random(&mut rng, 6), g.random(&mut rng, 6));
        if assoc.is_none() && g.mul(&g.mul(&a, &b), &c) != g.mul(&a, &g.mul(&b, &c)) {
            assoc = Some(format!("({}, {}, {})", g.encode(&a), g.encode(&b), g.encode(&c)));
        }
        if ident.is_none() && (g.mul(&e, &a) != a || g.mul(&a, &e) != a) {
            ident = Some(g.encode(&a));
        }
        if inv.is_none() && (!g.is_identity(&g.mul(&a, &g.inv(&a))) || !g.is_identity(&g.mul(&g.inv(&a), &a))) {
            inv = Some(g.encode(&a));
        }
    }
    Ok(vec![
        Check::new("associativity", "(ab)c = a(bc)", samples, assoc),
        Check::new("identity", "ea = ae = a", samples, ident),
        Check::new("inverse", "a a^-1 = a^-1 a = e", samples, inv),
    ])
}

/// The exponent a symmetrization witness certifies: the stored one, else
/// `|H|` for reduced powers, else the factorial of the class size.
pub fn symmetrization_exponent(w: &Witness) -> Result<Option<u64>> {
    if let Some(n) = w.parameters.exponent {
        return Ok(Some(n));
    }
    let ctx = Context::new(Group::from_spec_str(&w.group)?, &w.parameters);
    let y = ctx.group.parse(&Parameters::need(&w.parameters.y, "y")?)?;
    match symmetrize(&ctx.ex, &y, Parameters::need(&w.parameters.radius, "radius")?) {
        Ok(data) => Ok(data.exponent()),
        Err(Error::Precondition(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// The result of replaying a stored witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replay {
    pub checks: Vec<Check>,
    /// Name of the first stored check whose outcome differs from the replay.
    pub first_mismatch: Option<String>,
}

impl Replay {
    pub fn consistent(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

pub fn verify_witness(w: &Witness) -> Result<Replay> {
    let checks = run_checks(w)?;
    let first_mismatch = checks
        .iter()
        .find(|c| w.checks.iter().find(|s| s.name == c.name) != Some(*c))
        .map(|c| c.name.clone())
        .or_else(|| {
            w.checks
                .iter()
                .find(|s| !checks.iter().any(|c| c.name == s.name))
                .map(|s| s.name.clone())
        });
    Ok(Replay { checks, first_mismatch })
}
