//! Rule-based classification backed by replayable certificates, and the
//! named check suites.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::dtc::condition::{condition_i_search, pullback_check};
use crate::dtc::separation::lemma_sep_build;
use crate::dtc::twopoint::twopoint_build;
use crate::dtc::xn::{xn_build, XnOutcome};
use crate::error::{Error, Result};
use crate::group::{Element, Exhaustion, Group, GroupSpec, Schedule, SetSpec, DEFAULT_PRODUCT_BUDGET};
use crate::groups::{icc_witness, Homomorphism};
use crate::witness::{verify_witness, Check, Parameters, Witness, WitnessKind, SCHEMA};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    #[serde(rename = "DTC(1)")]
    Dtc1,
    #[serde(rename = "DTC(2)")]
    Dtc2,
    #[serde(rename = "unknown")]
    Unknown,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::Dtc1 => "DTC(1)",
            Classification::Dtc2 => "DTC(2)",
            Classification::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Supported,
    RefutedAtDepth,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rule {
    pub id: &'static str,
    pub statement: &'static str,
    pub premises: &'static [&'static str],
    pub conclusion: Classification,
}

pub const RULES: &[Rule] = &[
    Rule {
        id: "icc",
        statement: "every countable ICC group is DTC(1)",
        premises: &["countable", "icc", "icc-escape certificates"],
        conclusion: Classification::Dtc1,
    },
    Rule {
        id: "fc-infinite-index",
        statement: "a countable group G with |G/FC(G)| infinite is DTC(1)",
        premises: &["countable", "fc-infinite-index", "growth and condition-i certificates"],
        conclusion: Classification::Dtc1,
    },
    Rule {
        id: "icc-quotient",
        statement: "a countable group with an ICC quotient is DTC(1)",
        premises: &["countable", "icc-quotient", "pullback certificates"],
        conclusion: Classification::Dtc1,
    },
    Rule {
        id: "virtually-bfc",
        statement: "every infinite virtually BFC group is DTC(2)",
        premises: &["infinite", "virtually-bfc", "power-commute certificate"],
        conclusion: Classification::Dtc2,
    },
    Rule {
        id: "bounded-power",
        statement: "an infinite FC group with x^n y = y x^n for all x, y and a fixed n ≥ 1 is DTC(2)",
        premises: &["infinite", "fc", "power-commute and symmetrization certificates"],
        conclusion: Classification::Dtc2,
    },
    Rule {
        id: "finite-index",
        statement: "for H of finite index in G, G is DTC(1) if and only if H is",
        premises: &["registered subgroup pair"],
        conclusion: Classification::Unknown,
    },
];

pub fn rule(id: &str) -> Option<&'static Rule> {
    RULES.iter().find(|r| r.id == id)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub rule: String,
    pub group: String,
    /// Corroborating certificates do not decide the classification.
    pub corroboration: bool,
    pub depth: usize,
    /// Indices into the enclosing report's witness list.
    pub witnesses: Vec<usize>,
    pub required: Vec<String>,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

impl Certificate {
    /// Collects the checks of `witnesses[indices]`, prefixed by witness index.
    pub fn collect(rule: &str, group: &str, corroboration: bool, witnesses: &[Witness], indices: Vec<usize>) -> Self {
        let mut checks = Vec::new();
        let mut required = Vec::new();
        for &i in &indices {
            let w = &witnesses[i];
            required.extend(w.required_checks().iter().map(|r| format!("w{i}/{r}")));
            checks.extend(w.checks.iter().map(|c| Check {
                name: format!("w{i}/{}", c.name),
                ..c.clone()
            }));
        }
        let mut cert = Self {
            rule: rule.into(),
            group: group.into(),
            corroboration,
            depth: checks.iter().map(|c| c.depth).max().unwrap_or(0),
            witnesses: indices,
            required,
            checks,
            verdict: Verdict::Inconclusive,
        };
        cert.verdict = cert.evaluate();
        cert
    }

    /// Any failing check refutes; otherwise every required check must be
    /// present and passing.
    pub fn evaluate(&self) -> Verdict {
        if self.checks.iter().any(|c| !c.pass) {
            Verdict::RefutedAtDepth
        } else if !self.required.is_empty()
            && self.required.iter().all(|r| self.checks.iter().any(|c| c.name == *r && c.pass))
        {
            Verdict::Supported
        } else {
            Verdict::Inconclusive
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleApplication {
    pub id: String,
    pub statement: String,
    pub premises: Vec<String>,
    pub conclusion: Classification,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BudgetReport {
    pub candidates: usize,
    pub product_budget: u64,
    pub schedule: Schedule,
    pub seed: u64,
    pub depth: usize,
    pub level_sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema: String,
    pub group: String,
    pub classification: Classification,
    pub rules: Vec<RuleApplication>,
    pub assumptions: Vec<String>,
    pub certificates: Vec<Certificate>,
    pub witnesses: Vec<Witness>,
    pub budget: BudgetReport,
    pub errors: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// 0 when everything is supported, 3 when any check is refuted, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        exit_code(&self.certificates, self.classification != Classification::Unknown && self.errors.is_empty())
    }
}

fn exit_code(certificates: &[Certificate], complete: bool) -> i32 {
    if certificates.iter().any(|c| c.verdict == Verdict::RefutedAtDepth) {
        3
    } else if complete && !certificates.is_empty() && certificates.iter().all(|c| c.verdict == Verdict::Supported) {
        0
    } else {
        2
    }
}

/// Enough for the condition-(i) witness on `F_4` of `heis:int`, which sits
/// at candidate 227120.
pub const DEFAULT_CANDIDATE_BUDGET: usize = 250_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Candidate budget for every enumeration search.
    pub budget: usize,
    pub seed: u64,
    pub schedule: Schedule,
    pub product_budget: u64,
    /// Largest exhaustion level used by certificates.
    pub depth: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            budget: DEFAULT_CANDIDATE_BUDGET,
            seed: 0,
            schedule: Schedule::default(),
            product_budget: DEFAULT_PRODUCT_BUDGET,
            depth: 4,
        }
    }
}

impl Options {
    fn parameters(&self) -> Parameters {
        Parameters::new(self.schedule, self.product_budget)
    }
}

/// Facts that follow from how each group is constructed.
pub fn assumptions(spec: &GroupSpec) -> Vec<String> {
    let facts: &[&str] = match spec {
        GroupSpec::Integers | GroupSpec::IntegersSquared => &["countable", "infinite", "abelian, hence BFC and virtually-bfc"],
        GroupSpec::Free { rank: Some(_) } => &["countable", "infinite", "icc: a nontrivial reduced word has infinitely many conjugates"],
        GroupSpec::Free { rank: None } => &[
            "countable",
            "infinite",
            "icc-quotient: g_i ↦ (i i+1) maps onto the finitary symmetric group, which is ICC",
        ],
        GroupSpec::FinSym => &["countable", "infinite", "icc: transitive on ω with finite supports"],
        GroupSpec::AffineDyadic => &["countable", "infinite", "icc: conjugates of (s, r) cover infinitely many shifts"],
        GroupSpec::HeisInt | GroupSpec::HeisDyadic => &[
            "countable",
            "fc-infinite-index: FC(G) is the center {(0,0,c)} and G/FC(G) is the infinite plane of (a,b)",
        ],
        GroupSpec::ReducedPower { .. } => &[
            "countable",
            "infinite",
            "fc: each element has finite support, so its class is finite",
            "not virtually BFC for a non-abelian base group",
        ],
    };
    facts.iter().map(|s| s.to_string()).collect()
}

/// The rule whose certificates decide the classification.
pub fn primary_rule(spec: &GroupSpec) -> &'static Rule {
    let id = match spec {
        GroupSpec::Integers | GroupSpec::IntegersSquared => "virtually-bfc",
        GroupSpec::Free { rank: Some(_) } | GroupSpec::FinSym | GroupSpec::AffineDyadic => "icc",
        GroupSpec::Free { rank: None } => "icc-quotient",
        GroupSpec::HeisInt | GroupSpec::HeisDyadic => "fc-infinite-index",
        GroupSpec::ReducedPower { .. } => "bounded-power",
    };
    rule(id).expect("registered rule")
}

struct Collector {
    witnesses: Vec<Witness>,
    certificates: Vec<Certificate>,
    errors: Vec<String>,
}

impl Collector {
    fn new() -> Self {
        Self {
            witnesses: Vec::new(),
            certificates: Vec::new(),
            errors: Vec::new(),
        }
    }

    fn push(&mut self, w: Witness) -> usize {
        self.witnesses.push(w);
        self.witnesses.len() - 1
    }

    fn certify(&mut self, rule: &str, group: &str, corroboration: bool, indices: Vec<usize>) {
        if !indices.is_empty() {
            let cert = Certificate::collect(rule, group, corroboration, &self.witnesses, indices);
            self.certificates.push(cert);
        }
    }

    /// Runs `f`, recording budget and precondition errors instead of aborting.
    fn attempt<T>(&mut self, what: &str, f: impl FnOnce(&mut Self) -> Result<T>) -> Option<T> {
        match f(self) {
            Ok(t) => Some(t),
            Err(e) => {
                self.errors.push(format!("{what}: {e}"));
                None
            }
        }
    }
}

pub fn classify(group: &Arc<Group>, opts: &Options) -> Report {
    let ex = Exhaustion::with_budget(group.clone(), opts.schedule, opts.product_budget);
    let spec = group.spec().clone();
    let primary = primary_rule(&spec);
    let id = group.id();
    let mut c = Collector::new();
    match &spec {
        GroupSpec::Integers | GroupSpec::IntegersSquared => {
            let mut p = opts.parameters();
            p.exponent = Some(1);
            p.samples = Some(1000);
            p.seed = Some(opts.seed);
            if let Some(i) = c.attempt("power-commute", |_| Witness::assemble(group, WitnessKind::PowerCommute, p, &[], vec![])) {
                let i = c.push(i);
                c.certify(primary.id, &id, false, vec![i]);
            }
            let obstruction = c.attempt("xn obstruction", |_| xn_obstruction(group, &ex, opts, 12));
            if let Some(Some(w)) = obstruction {
                let i = c.push(w);
                c.certify(primary.id, &id, true, vec![i]);
            }
        }
        GroupSpec::Free { rank: Some(_) } | GroupSpec::FinSym | GroupSpec::AffineDyadic => {
            let indices = c
                .attempt("icc escapes", |c| {
                    let mut out = Vec::new();
                    let ys: Vec<Element> = ex.level(2)?.iter().filter(|y| !group.is_identity(y)).cloned().collect();
                    for m in 0..=opts.depth {
                        let f = ex.level(m)?;
                        for y in &ys {
                            let esc = icc_witness(group, y, &f, opts.budget)?;
                            let mut p = opts.parameters();
                            p.level = Some(m);
                            p.y = Some(group.encode(y));
                            let w = Witness::assemble(group, WitnessKind::IccEscape, p, &[esc.conjugator, esc.image], vec![])?;
                            out.push(c.push(w));
                        }
                    }
                    Ok(out)
                })
                .unwrap_or_default();
            c.certify(primary.id, &id, false, indices);
        }
        GroupSpec::HeisInt | GroupSpec::HeisDyadic => {
            let indices = c
                .attempt("fc growth and condition (i)", |c| {
                    let mut out = Vec::new();
                    for y in ex.level(2)?.iter() {
                        let mut p = opts.parameters();
                        p.radius = Some(opts.depth);
                        p.y = Some(group.encode(y));
                        out.push(c.push(Witness::assemble(group, WitnessKind::Growth, p, &[], vec![])?));
                    }
                    for m in 1..=opts.depth {
                        out.push(c.push(condition_i_witness(group, &ex, opts, &SetSpec::Fc, m)?));
                    }
                    Ok(out)
                })
                .unwrap_or_default();
            c.certify(primary.id, &id, false, indices);
        }
        GroupSpec::Free { rank: None } => {
            let indices = c
                .attempt("pullback", |c| {
                    let hom = Homomorphism::from_spec("free:w->finsym")?;
                    let v = SetSpec::Identity.oracle(hom.target())?;
                    let mut out = Vec::new();
                    for m in 0..=opts.depth {
                        let f = ex.level(m)?;
                        let pb = pullback_check(&hom, &v, &f, opts.budget)?;
                        let mut p = opts.parameters();
                        p.hom = Some(hom.id());
                        p.v = Some(SetSpec::Identity);
                        p.level = Some(m);
                        let elements = vec![hom.target().encode(&pb.target_witness), group.encode(&pb.lifted)];
                        let w = Witness::from_text(group.id(), WitnessKind::Pullback, p, elements, vec![])?;
                        out.push(c.push(w));
                    }
                    Ok(out)
                })
                .unwrap_or_default();
            c.certify(primary.id, &id, false, indices);
        }
        GroupSpec::ReducedPower { table, .. } => {
            let order = table.order() as u64;
            let mut p = opts.parameters();
            p.exponent = Some(order);
            p.samples = Some(1000);
            p.seed = Some(opts.seed);
            let mut indices = Vec::new();
            if let Some(w) = c.attempt("power-commute", |_| Witness::assemble(group, WitnessKind::PowerCommute, p, &[], vec![])) {
                indices.push(c.push(w));
            }
            if let Some(w) = c.attempt("symmetrization", |_| symmetrization_witness(group, opts, 3, 100)) {
                indices.push(c.push(w));
            }
            c.certify(primary.id, &id, false, indices);
        }
    }
    let certified = c
        .certificates
        .iter()
        .any(|cert| !cert.corroboration && cert.rule == primary.id && cert.verdict == Verdict::Supported);
    let classification = if certified { primary.conclusion } else { Classification::Unknown };
    Report {
        schema: SCHEMA.into(),
        group: id,
        classification,
        rules: vec![RuleApplication {
            id: primary.id.into(),
            statement: primary.statement.into(),
            premises: primary.premises.iter().map(|s| s.to_string()).collect(),
            conclusion: primary.conclusion,
            certified,
        }],
        assumptions: assumptions(&spec),
        certificates: c.certificates,
        witnesses: c.witnesses,
        budget: BudgetReport {
            candidates: opts.budget,
            product_budget: opts.product_budget,
            schedule: opts.schedule,
            seed: opts.seed,
            depth: opts.depth,
            level_sizes: ex.built_sizes(),
        },
        errors: c.errors,
    }
}

/// `xn_build` with `V = {e}`, reported as an obstruction witness when it
/// stops on a hereditary (b2) violation.
fn xn_obstruction(group: &Arc<Group>, ex: &Exhaustion, opts: &Options, n: usize) -> Result<Option<Witness>> {
    let v = SetSpec::Identity.oracle(group)?;
    let XnOutcome::Failed(fail) = xn_build(ex, &v, n, opts.budget)? else {
        return Ok(None);
    };
    if !fail.hereditary {
        return Ok(None);
    }
    let mut p = opts.parameters();
    p.n = Some(fail.step);
    p.pair = fail.pair;
    p.v = Some(SetSpec::Identity);
    Witness::assemble(group, WitnessKind::XnObstruction, p, &fail.partial, vec![]).map(Some)
}

/// Searches `F_level` for a condition-(i) element against `v`. The witness
/// holds `[x, escapes...]`, or no elements when the budget runs out.
pub fn condition_i_witness(group: &Arc<Group>, ex: &Exhaustion, opts: &Options, v: &SetSpec, level: usize) -> Result<Witness> {
    let f = ex.level(level)?;
    let elements: Vec<Element> = match condition_i_search(group, &v.oracle(group)?, &f, opts.budget) {
        Some(w) => std::iter::once(w.x).chain(w.escapes.into_iter().map(|(_, image)| image)).collect(),
        None => Vec::new(),
    };
    let mut p = opts.parameters();
    p.v = Some(v.clone());
    p.level = Some(level);
    p.budget = Some(opts.budget);
    Witness::assemble(group, WitnessKind::ConditionI, p, &elements, vec![])
}

/// Symmetrization data for the first non-identity element of the enumeration.
fn symmetrization_witness(group: &Arc<Group>, opts: &Options, radius: usize, samples: usize) -> Result<Witness> {
    let mut p = opts.parameters();
    p.y = Some(group.encode(&group.enumerate(1)));
    p.radius = Some(radius);
    p.samples = Some(samples);
    p.seed = Some(opts.seed);
    Witness::assemble(group, WitnessKind::Symmetrization, p, &[], vec![])
}

pub const SUITES: &[&str] = &["axioms", "separation", "twopoint", "xn", "symmetrization"];

/// Options for [`run_suite`]; `None` fields take the suite's defaults.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteOptions {
    pub budget: Option<usize>,
    pub seed: u64,
    pub schedule: Option<Schedule>,
    pub product_budget: Option<u64>,
    /// Family size, sequence length or sample count, depending on the suite.
    pub size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteReport {
    pub schema: String,
    pub suite: String,
    pub groups: Vec<String>,
    pub certificates: Vec<Certificate>,
    pub witnesses: Vec<Witness>,
    pub errors: Vec<String>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite report serializes")
    }

    pub fn exit_code(&self) -> i32 {
        exit_code(&self.certificates, self.errors.is_empty())
    }
}

/// The schedule the `xn` suite uses by default: one new generator every
/// seven levels, which keeps `F_13` of a two-generator group on one cyclic axis.
pub fn xn_schedule() -> Schedule {
    Schedule::new(1, 7).expect("positive")
}

pub const XN_PRODUCT_BUDGET: u64 = 100_000_000;

/// Runs a named suite on each group. Failing checks are recorded, never fatal.
pub fn run_suite(name: &str, groups: &[Arc<Group>], opts: &SuiteOptions) -> Result<SuiteReport> {
    if !SUITES.contains(&name) {
        return Err(Error::Usage(format!("unknown suite {name:?}; expected one of {}", SUITES.join(", "))));
    }
    let mut c = Collector::new();
    for group in groups {
        let (schedule, product_budget) = match name {
            "xn" => (opts.schedule.unwrap_or(xn_schedule()), opts.product_budget.unwrap_or(XN_PRODUCT_BUDGET)),
            _ => (opts.schedule.unwrap_or_default(), opts.product_budget.unwrap_or(DEFAULT_PRODUCT_BUDGET)),
        };
        let base = Options {
            budget: opts.budget.unwrap_or(DEFAULT_CANDIDATE_BUDGET),
            seed: opts.seed,
            schedule,
            product_budget,
            depth: 4,
        };
        let ex = Exhaustion::with_budget(group.clone(), schedule, product_budget);
        let id = group.id();
        let rule = format!("suite:{name}");
        let what = format!("{name} on {id}");
        let indices = c
            .attempt(&what, |c| {
                let w = match name {
                    "axioms" => {
                        let mut p = base.parameters();
                        p.samples = Some(opts.size.unwrap_or(1000));
                        p.seed = Some(opts.seed);
                        Witness::assemble(group, WitnessKind::Axioms, p, &[], vec![])?
                    }
                    "separation" => {
                        let levels: Vec<usize> = (0..opts.size.unwrap_or(16)).map(|a| a % 3).collect();
                        let family = levels.iter().map(|&l| Ok((*ex.level(l)?).clone())).collect::<Result<Vec<_>>>()?;
                        let seq = lemma_sep_build(group, &family, base.budget)?;
                        let mut p = base.parameters();
                        p.levels = Some(levels);
                        Witness::assemble(group, WitnessKind::SeparationZ, p, &seq.elements, seq.trace)?
                    }
                    "twopoint" => {
                        let levels: Vec<usize> = (0..opts.size.unwrap_or(6)).collect();
                        let family = levels.iter().map(|&l| Ok((*ex.level(l)?).clone())).collect::<Result<Vec<_>>>()?;
                        let tp = twopoint_build(group, &family, base.budget)?;
                        let mut p = base.parameters();
                        p.levels = Some(levels);
                        Witness::assemble(group, WitnessKind::TwopointZ, p, &tp.sequence.elements, tp.sequence.trace)?
                    }
                    "xn" => build_xn_witness(group, &ex, &base, &SetSpec::Fc, opts.size.unwrap_or(12))?,
                    "symmetrization" => {
                        let w = symmetrization_witness(group, &base, 3, opts.size.unwrap_or(100))?;
                        if let Some(n) = crate::witness::symmetrization_exponent(&w)? {
                            let mut p = base.parameters();
                            p.exponent = Some(n);
                            p.samples = Some(1000);
                            p.seed = Some(opts.seed);
                            let pc = Witness::assemble(group, WitnessKind::PowerCommute, p, &[], vec![])?;
                            let i = c.push(w);
                            return Ok(vec![i, c.push(pc)]);
                        }
                        w
                    }
                    _ => unreachable!("checked above"),
                };
                Ok(vec![c.push(w)])
            })
            .unwrap_or_default();
        c.certify(&rule, &id, false, indices);
    }
    Ok(SuiteReport {
        schema: SCHEMA.into(),
        suite: name.into(),
        groups: groups.iter().map(|g| g.id()).collect(),
        certificates: c.certificates,
        witnesses: c.witnesses,
        errors: c.errors,
    })
}

/// Runs `xn_build` and wraps the outcome: the sequence as an `xn` witness, a
/// hereditary stop as an `xn-obstruction` witness, and a budget stop as an error.
pub fn build_xn_witness(group: &Arc<Group>, ex: &Exhaustion, opts: &Options, v: &SetSpec, n: usize) -> Result<Witness> {
    let oracle = v.oracle(group)?;
    let mut p = opts.parameters();
    p.v = Some(v.clone());
    match xn_build(ex, &oracle, n, opts.budget)? {
        XnOutcome::Built(seq) => {
            p.n = Some(n);
            Witness::assemble(group, WitnessKind::Xn, p, &seq.elements, seq.trace)
        }
        XnOutcome::Failed(fail) if fail.hereditary => {
            p.n = Some(fail.step);
            p.pair = fail.pair;
            Witness::assemble(group, WitnessKind::XnObstruction, p, &fail.partial, vec![])
        }
        XnOutcome::Failed(fail) => Err(Error::Budget {
            what: format!(
                "x_{} after {} candidates; rejections b1a {}, b1b {}, b2 {} (mostly {:?})",
                fail.step, fail.scanned, fail.rejections.b1a, fail.rejections.b1b, fail.rejections.b2, fail.clause
            ),
            limit: opts.budget as u64,
            reached: fail.scanned as u64,
        }),
    }
}

/// The outcome of replaying a stored witness, as a certificate over the
/// replayed checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Verification {
    pub schema: String,
    pub group: String,
    pub kind: WitnessKind,
    pub certificate: Certificate,
    /// First stored check whose recorded outcome the replay contradicts.
    pub first_mismatch: Option<String>,
}

impl Verification {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verification serializes")
    }

    /// A contradicted stored check counts as refuted.
    pub fn exit_code(&self) -> i32 {
        if self.first_mismatch.is_some() {
            3
        } else {
            exit_code(std::slice::from_ref(&self.certificate), true)
        }
    }
}

pub fn verify(w: &Witness) -> Result<Verification> {
    let replay = verify_witness(w)?;
    let replayed = Witness {
        checks: replay.checks,
        ..w.clone()
    };
    Ok(Verification {
        schema: SCHEMA.into(),
        group: w.group.clone(),
        kind: w.kind,
        certificate: Certificate::collect("replay", &w.group, false, std::slice::from_ref(&replayed), vec![0]),
        first_mismatch: replay.first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(s: &str) -> Arc<Group> {
        Group::from_spec_str(s).unwrap()
    }

    #[test]
    fn integers_are_dtc2_with_corroboration() {
        let r = classify(&group("int"), &Options::default());
        assert_eq!(r.classification, Classification::Dtc2);
        assert_eq!(r.certificates.len(), 2);
        assert!(r.certificates[1].corroboration);
        assert_eq!(r.witnesses[1].kind, WitnessKind::XnObstruction);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn finsym_is_dtc1() {
        let r = classify(&group("finsym"), &Options::default());
        assert_eq!(r.classification, Classification::Dtc1);
        assert!(r.witnesses.iter().all(|w| w.kind == WitnessKind::IccEscape && w.passes()));
    }

    #[test]
    fn deleting_a_check_makes_the_certificate_inconclusive() {
        let r = classify(&group("redpow:s3"), &Options::default());
        assert_eq!(r.classification, Classification::Dtc2);
        let mut cert = r.certificates[0].clone();
        for k in 0..cert.checks.len() {
            let mut c = cert.clone();
            c.checks.remove(k);
            assert_eq!(c.evaluate(), Verdict::Inconclusive);
        }
        cert.checks[0].pass = false;
        assert_eq!(cert.evaluate(), Verdict::RefutedAtDepth);
    }

    #[test]
    fn tiny_budget_gives_unknown() {
        let opts = Options {
            budget: 1,
            ..Options::default()
        };
        let r = classify(&group("free:2"), &opts);
        assert_eq!(r.classification, Classification::Unknown);
        assert!(!r.errors.is_empty());
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn separation_suite_with_three_sets_is_vacuous() {
        let opts = SuiteOptions {
            size: Some(3),
            ..SuiteOptions::default()
        };
        let r = run_suite("separation", &[group("free:2")], &opts).unwrap();
        assert_eq!(r.certificates[0].verdict, Verdict::Supported);
        assert!(run_suite("nope", &[], &opts).is_err());
    }
}
