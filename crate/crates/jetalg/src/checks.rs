//! The closed catalog of verification sweeps.
//!
//! Every check enumerates its cases sequentially in a fixed order, evaluates
//! them (possibly in parallel) as pure functions, and collects failures in
//! case order, so a report never depends on the degree of parallelism.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use jetalg_core::{
    jet_cases, l_bracket, lift_gl2, phi, rho, theta, theta_inv, x, xk, AMono, APoly, Axis, DLElem, DMono,
    DOp, ExpGrid, GL2Module, JetModule, LElem, LKey, Rat, SmashElem, VField, Variant, WeightDMod,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::report::{ConfigEcho, Failure, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    WeylAssoc,
    GJacobi,
    Lemma31,
    Lemma32,
    Lemma33,
    Lemma34,
    Gl2Lift,
    Thm23Hom,
    Lemma42Roundtrip,
    JetAxioms,
    NegativeControl,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::WeylAssoc,
        CheckId::GJacobi,
        CheckId::Lemma31,
        CheckId::Lemma32,
        CheckId::Lemma33,
        CheckId::Lemma34,
        CheckId::Gl2Lift,
        CheckId::Thm23Hom,
        CheckId::Lemma42Roundtrip,
        CheckId::JetAxioms,
        CheckId::NegativeControl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::WeylAssoc => "weyl-assoc",
            CheckId::GJacobi => "g-jacobi",
            CheckId::Lemma31 => "lemma-3.1",
            CheckId::Lemma32 => "lemma-3.2",
            CheckId::Lemma33 => "lemma-3.3",
            CheckId::Lemma34 => "lemma-3.4",
            CheckId::Gl2Lift => "gl2-lift",
            CheckId::Thm23Hom => "thm-2.3-hom",
            CheckId::Lemma42Roundtrip => "lemma-4.2-roundtrip",
            CheckId::JetAxioms => "jet-axioms",
            CheckId::NegativeControl => "negative-control",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = CheckError;

    fn from_str(s: &str) -> Result<Self, CheckError> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CheckError::UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("unknown check '{0}'")]
    UnknownCheck(String),
    #[error("invalid config: {0}")]
    InvalidConfig(String),
}

/// Inclusive integer interval written `lo..hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Range {
    pub lo: i64,
    pub hi: i64,
}

impl Range {
    pub const fn new(lo: i64, hi: i64) -> Self {
        Range { lo, hi }
    }

    pub fn is_empty(self) -> bool {
        self.lo > self.hi
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("expected an interval lo..hi, got '{}'", s);
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
            None => (s, s),
        };
        Ok(Range { lo: lo.trim().parse().map_err(|_| bad())?, hi: hi.trim().parse().map_err(|_| bad())? })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepChoice {
    Natural,
    Adjoint,
    Sym2,
}

impl RepChoice {
    pub fn name(self) -> &'static str {
        match self {
            RepChoice::Natural => "natural",
            RepChoice::Adjoint => "adjoint",
            RepChoice::Sym2 => "sym2",
        }
    }

    pub fn module(self) -> GL2Module {
        match self {
            RepChoice::Natural => GL2Module::natural(),
            RepChoice::Adjoint => GL2Module::adjoint(),
            RepChoice::Sym2 => GL2Module::sym2(),
        }
    }
}

impl FromStr for RepChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "natural" => Ok(RepChoice::Natural),
            "adjoint" => Ok(RepChoice::Adjoint),
            "sym2" => Ok(RepChoice::Sym2),
            _ => Err(format!("unknown rep '{}' (expected natural, adjoint or sym2)", s)),
        }
    }
}

pub fn parse_variant(s: &str) -> Result<Variant, String> {
    Variant::ALL
        .into_iter()
        .find(|v| v.name() == s)
        .ok_or_else(|| format!("unknown variant '{}' (expected poly, laurent or quotient)", s))
}

pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let bad = || format!("expected a rational p/q, got '{}'", s);
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: num_bigint::BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
    if q == 0.into() {
        return Err(bad());
    }
    Ok(Rat::new(p, q))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub check: CheckId,
    pub m1: Range,
    pub m2: Range,
    pub s1: Range,
    pub s2: Range,
    pub a1: Rat,
    pub a2: Rat,
    pub variant: Variant,
    pub rep: RepChoice,
    /// Worker threads; has no effect on report contents.
    pub jobs: usize,
    /// Random samples for the sampled checks.
    pub samples: usize,
    pub seed: u64,
}

impl CheckConfig {
    pub fn new(check: CheckId) -> Self {
        CheckConfig {
            check,
            m1: Range::new(-3, 3),
            m2: Range::new(0, 3),
            s1: Range::new(-3, 3),
            s2: Range::new(0, 3),
            a1: Rat::new(1.into(), 2.into()),
            a2: Rat::from_integer(0.into()),
            variant: Variant::Poly,
            rep: RepChoice::Natural,
            jobs: 1,
            samples: 500,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<(), CheckError> {
        for (name, r) in [("m1", self.m1), ("m2", self.m2), ("s1", self.s1), ("s2", self.s2)] {
            if r.is_empty() {
                return Err(CheckError::InvalidConfig(format!("{} range {} is empty", name, r)));
            }
        }
        for (name, r) in [("m2", self.m2), ("s2", self.s2)] {
            if r.lo < 0 || r.hi > u32::MAX as i64 {
                return Err(CheckError::InvalidConfig(format!("{} range {} must be nonnegative", name, r)));
            }
        }
        if self.jobs == 0 {
            return Err(CheckError::InvalidConfig("jobs must be at least 1".into()));
        }
        if self.samples == 0 {
            return Err(CheckError::InvalidConfig("samples must be at least 1".into()));
        }
        if matches!(self.check, CheckId::JetAxioms | CheckId::NegativeControl) {
            self.weight_module()?;
        }
        Ok(())
    }

    fn weight_module(&self) -> Result<WeightDMod, CheckError> {
        WeightDMod::new(self.a1.clone(), self.a2.clone(), self.variant)
            .map_err(|e| CheckError::InvalidConfig(e.to_string()))
    }

    pub fn m_grid(&self) -> ExpGrid {
        ExpGrid::new((self.m1.lo, self.m1.hi), (self.m2.lo as u32, self.m2.hi as u32))
    }

    pub fn s_grid(&self) -> ExpGrid {
        ExpGrid::new((self.s1.lo, self.s1.hi), (self.s2.lo as u32, self.s2.hi as u32))
    }

    fn echo(&self) -> ConfigEcho {
        let rep = match self.check {
            CheckId::NegativeControl => "corrupted-natural".to_string(),
            _ => self.rep.name().to_string(),
        };
        ConfigEcho {
            m1: self.m1.to_string(),
            m2: self.m2.to_string(),
            s1: self.s1.to_string(),
            s2: self.s2.to_string(),
            a1: self.a1.to_string(),
            a2: self.a2.to_string(),
            variant: self.variant.name().to_string(),
            rep,
            samples: self.samples,
            seed: self.seed,
        }
    }
}

/// Runs one check and assembles its report.
pub fn run_check(cfg: &CheckConfig) -> Result<Report, CheckError> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CheckError::InvalidConfig(e.to_string()))?;
    let start = Instant::now();
    let (cases, mut failures) = pool.install(|| dispatch(cfg))?;
    let pass = failures.is_empty();
    failures.truncate(Report::MAX_FAILURES);
    Ok(Report {
        check: cfg.check.name().to_string(),
        config: cfg.echo(),
        cases,
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
        pass,
    })
}

/// The expansion of the catalog used by `report --all`: every check at its
/// defaults, with the jet-module axioms over all listed module choices.
pub fn catalog_configs(jobs: usize) -> Vec<CheckConfig> {
    let mut out = Vec::new();
    for id in CheckId::ALL {
        if id == CheckId::JetAxioms {
            out.extend(jet_axiom_configs().into_iter().map(|mut c| {
                c.jobs = jobs;
                c
            }));
        } else {
            let mut c = CheckConfig::new(id);
            c.jobs = jobs;
            out.push(c);
        }
    }
    out
}

/// `(a1, a2) × variant × rep` for the jet-module axioms. Polynomial and
/// quotient modules need an integral `a2`, so `(0, 1/3)` is only paired with
/// the Laurent module.
pub fn jet_axiom_configs() -> Vec<CheckConfig> {
    let half = Rat::new(1.into(), 2.into());
    let third = Rat::new(1.into(), 3.into());
    let zero = Rat::from_integer(0.into());
    let two = Rat::from_integer(2.into());
    let mut params = Vec::new();
    for v in Variant::ALL {
        params.push((half.clone(), zero.clone(), v));
    }
    params.push((zero.clone(), third, Variant::Laurent));
    for v in Variant::ALL {
        params.push((two.clone(), zero.clone(), v));
    }
    let mut out = Vec::new();
    for (a1, a2, variant) in params {
        for rep in [RepChoice::Natural, RepChoice::Adjoint] {
            let mut c = CheckConfig::new(CheckId::JetAxioms);
            c.a1 = a1.clone();
            c.a2 = a2.clone();
            c.variant = variant;
            c.rep = rep;
            out.push(c);
        }
    }
    out
}

type Outcome = (usize, Vec<Failure>);

/// Evaluates `check` on every case in parallel; failures keep case order.
fn sweep<C: Sync>(cases: &[C], check: impl Fn(&C) -> Option<Failure> + Sync + Send) -> Outcome {
    (cases.len(), cases.par_iter().filter_map(check).collect())
}

fn dispatch(cfg: &CheckConfig) -> Result<Outcome, CheckError> {
    Ok(match cfg.check {
        CheckId::WeylAssoc => weyl_assoc(cfg),
        CheckId::GJacobi => g_jacobi(cfg),
        CheckId::Lemma31 => lemma_3_1(cfg),
        CheckId::Lemma32 => lemma_3_2(cfg),
        CheckId::Lemma33 => lemma_3_3(cfg),
        CheckId::Lemma34 => lemma_3_4(cfg),
        CheckId::Gl2Lift => gl2_lift(cfg),
        CheckId::Thm23Hom => thm_2_3_hom(cfg),
        CheckId::Lemma42Roundtrip => lemma_4_2_roundtrip(cfg),
        CheckId::JetAxioms => jet_axioms(cfg, cfg.rep.module())?,
        CheckId::NegativeControl => jet_axioms(cfg, GL2Module::corrupted_natural())?,
    })
}

fn eq_or<T: PartialEq + fmt::Display>(key: impl FnOnce() -> String, expected: &T, actual: &T) -> Option<Failure> {
    (expected != actual).then(|| Failure::new(key(), expected, actual))
}

fn show_m(m: AMono) -> String {
    format!("({},{})", m.m1, m.m2)
}

/// `(k, m)` pairs for both axes over a grid, in a fixed order.
fn indexed(grid: &ExpGrid) -> Vec<(Axis, AMono)> {
    Axis::BOTH.iter().flat_map(|&k| grid.monos().into_iter().map(move |m| (k, m))).collect()
}

// ---------------------------------------------------------------------------
// weyl-assoc

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let mut p: i64 = rng.gen_range(-5..=5);
    if p == 0 {
        p = 1;
    }
    let q: i64 = rng.gen_range(1..=3);
    Rat::new(p.into(), q.into())
}

fn random_dop(rng: &mut ChaCha8Rng) -> DOp {
    let mut out = DOp::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mono = DMono::new(rng.gen_range(-3..=3), rng.gen_range(0..=3), rng.gen_range(0..=3), rng.gen_range(0..=3));
        out.add_term(mono, random_rat(rng));
    }
    out
}

fn random_poly(rng: &mut ChaCha8Rng) -> APoly {
    let mut out = APoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        out.add_term(AMono::new(rng.gen_range(-3..=3), rng.gen_range(0..=3)), random_rat(rng));
    }
    out
}

/// Associativity of normal-ordered multiplication, and agreement of the
/// product with composition of the operators acting on `A`.
fn weyl_assoc(cfg: &CheckConfig) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let cases: Vec<(DOp, DOp, DOp, APoly)> = (0..cfg.samples)
        .map(|_| (random_dop(&mut rng), random_dop(&mut rng), random_dop(&mut rng), random_poly(&mut rng)))
        .collect();
    let indexed: Vec<_> = cases.iter().enumerate().collect();
    sweep(&indexed, |(i, (a, b, c, p))| {
        let key = || format!("sample {}: a={} b={} c={}", i, a, b, c);
        let ab = a.d_mul(b);
        eq_or(key, &ab.d_mul(c), &a.d_mul(&b.d_mul(c))).or_else(|| {
            let key = || format!("sample {}: a={} b={} applied to {}", i, a, b, p);
            eq_or(key, &a.d_apply(&b.d_apply(p)), &ab.d_apply(p))
        })
    })
}

// ---------------------------------------------------------------------------
// g-jacobi

/// For generator pairs over the two grids: the bracket agrees with the
/// commutator of the corresponding operators, and the Jacobi identity holds
/// against a fixed set of low-degree generators.
fn g_jacobi(cfg: &CheckConfig) -> Outcome {
    let probes: Vec<VField> = indexed(&ExpGrid::new((-1, 1), (0, 1)))
        .into_iter()
        .map(|(k, m)| VField::generator(k, m))
        .collect();
    let pairs: Vec<_> = indexed(&cfg.m_grid())
        .into_iter()
        .flat_map(|a| indexed(&cfg.s_grid()).into_iter().map(move |b| (a, b)))
        .collect();
    sweep(&pairs, |&((k, m), (l, s))| {
        let (x, y) = (VField::generator(k, m), VField::generator(l, s));
        let key = |what: &str| format!("{} k={} m={} l={} s={}", what, k, show_m(m), l, show_m(s));
        let xy = x.g_bracket(&y);
        if let f @ Some(_) = eq_or(
            || key("commutator"),
            &x.to_weyl().d_commutator(&y.to_weyl()),
            &xy.to_weyl(),
        ) {
            return f;
        }
        probes.iter().find_map(|z| {
            let jac = xy.g_bracket(z) + y.g_bracket(z).g_bracket(&x) + z.g_bracket(&x).g_bracket(&y);
            eq_or(|| format!("{} z={}", key("jacobi"), z), &VField::zero(), &jac)
        })
    })
}

// ---------------------------------------------------------------------------
// lemma-3.1

#[derive(Clone, Copy)]
enum Probe {
    T1,
    T2,
    Euler1,
    D2,
}

impl Probe {
    const ALL: [Probe; 4] = [Probe::T1, Probe::T2, Probe::Euler1, Probe::D2];

    fn elem(self) -> SmashElem {
        match self {
            Probe::T1 => SmashElem::embed_a(APoly::t1()),
            Probe::T2 => SmashElem::embed_a(APoly::t2()),
            Probe::Euler1 => SmashElem::embed_g(&VField::basis(AMono::new(1, 0), Axis::One)),
            Probe::D2 => SmashElem::embed_g(&VField::basis(AMono::ONE, Axis::Two)),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Probe::T1 => "t1 . 1",
            Probe::T2 => "t2 . 1",
            Probe::Euler1 => "1 . t1*d1",
            Probe::D2 => "1 . d2",
        }
    }
}

/// `X_k(m)` commutes with `t1·1`, `t2·1`, `1·t1∂1` and `1·∂2`, both in the
/// smash product and after `phi`.
fn lemma_3_1(cfg: &CheckConfig) -> Outcome {
    let cases: Vec<_> = indexed(&cfg.m_grid())
        .into_iter()
        .flat_map(|km| Probe::ALL.into_iter().map(move |p| (km, p)))
        .collect();
    sweep(&cases, |&((k, m), probe)| {
        let key = |lvl: &str| format!("{} [X{}{}, {}]", lvl, k, show_m(m), probe.name());
        let (x, p) = (xk(k, m), probe.elem());
        let smash = x.smash_bracket(&p);
        if !smash.is_zero() {
            return Some(Failure::new(key("smash"), "0", smash));
        }
        match phi(&x).dl_bracket(&phi(&p)) {
            Ok(y) if y.is_zero() => None,
            Ok(y) => Some(Failure::new(key("phi"), "0", y)),
            Err(e) => Some(Failure::new(key("phi"), "0", e)),
        }
    })
}

// ---------------------------------------------------------------------------
// lemma-3.2

/// Three realizations of the bracket on `L` agree: structure constants, the
/// commutator of the smash-product elements, and the pullback of the
/// vector-field bracket. Families `(1,1)`, `(2,2)`, `(1,2)`.
fn lemma_3_2(cfg: &CheckConfig) -> Outcome {
    let families = [(Axis::One, Axis::One), (Axis::Two, Axis::Two), (Axis::One, Axis::Two)];
    let (ms, ss) = (cfg.m_grid().monos(), cfg.s_grid().monos());
    let mut cases = Vec::new();
    for kl in families {
        for &m in &ms {
            cases.extend(ss.iter().map(|&s| (kl, m, s)));
        }
    }
    sweep(&cases, |&((k, l), m, s)| {
        let key = |what: &str| format!("{} [X{}{}, X{}{}]", what, k, show_m(m), l, show_m(s));
        let (a, b) = (x(k, m), x(l, s));
        let constants = l_bracket(&a, &b);
        let smash = xk(k, m).smash_bracket(&xk(l, s));
        let expected_smash = SmashElem::from_l(&constants);
        if smash != expected_smash {
            return Some(Failure::new(key("smash vs constants"), expected_smash, smash));
        }
        let Some(smash_l) = smash.to_l() else {
            return Some(Failure::new(key("smash outside L"), &constants, smash));
        };
        if smash_l != constants {
            return Some(Failure::new(key("smash vs constants"), &constants, smash_l));
        }
        match theta_inv(&theta(&a).g_bracket(&theta(&b))) {
            Ok(pulled) => eq_or(|| key("pullback vs constants"), &constants, &pulled),
            Err(e) => Some(Failure::new(key("pullback"), &constants, e)),
        }
    })
}

// ---------------------------------------------------------------------------
// lemma-3.3

enum IsoCase {
    Bracket(Axis, AMono, Axis, AMono),
    RoundTrip(LKey),
}

/// `theta` intertwines the two brackets, lands in the fields vanishing at
/// `(1,0)`, and is inverted by `theta_inv`.
fn lemma_3_3(cfg: &CheckConfig) -> Outcome {
    let mut cases: Vec<IsoCase> = Vec::new();
    for (k, m) in indexed(&cfg.m_grid()) {
        for (l, s) in indexed(&cfg.s_grid()) {
            cases.push(IsoCase::Bracket(k, m, l, s));
        }
    }
    for (k, m) in indexed(&cfg.m_grid()) {
        cases.extend(LKey::new(k, m).map(IsoCase::RoundTrip));
    }
    sweep(&cases, |case| match *case {
        IsoCase::Bracket(k, m, l, s) => {
            let (a, b) = (x(k, m), x(l, s));
            eq_or(
                || format!("theta [X{}{}, X{}{}]", k, show_m(m), l, show_m(s)),
                &theta(&a).g_bracket(&theta(&b)),
                &theta(&l_bracket(&a, &b)),
            )
        }
        IsoCase::RoundTrip(key) => {
            let a = LElem::basis(key);
            let v = theta(&a);
            if !v.in_m10_delta() {
                return Some(Failure::new(format!("theta {} vanishes at (1,0)", key), "true", v));
            }
            match theta_inv(&v) {
                Ok(back) => eq_or(|| format!("theta_inv theta {}", key), &a, &back),
                Err(e) => Some(Failure::new(format!("theta_inv theta {}", key), &a, e)),
            }
        }
    })
}

// ---------------------------------------------------------------------------
// lemma-3.4

enum PiCase {
    Pair(VField, VField),
    Kernel(VField),
}

/// Random element of the fields vanishing at `(1,0)`.
fn random_m10_field(rng: &mut ChaCha8Rng) -> VField {
    let mut f = [random_poly(rng), random_poly(rng)];
    for p in &mut f {
        let at = p.eval_1_0();
        *p = p.clone() - APoly::constant(at);
    }
    let [f1, f2] = f;
    VField::new(f1, f2)
}

/// `pi` is a Lie homomorphism on fields vanishing at `(1,0)` (the theta images
/// of the grid basis, plus random pairs) and kills fields vanishing to second
/// order there.
fn lemma_3_4(cfg: &CheckConfig) -> Outcome {
    let mut cases = Vec::new();
    for (k, m) in indexed(&cfg.m_grid()) {
        for (l, s) in indexed(&cfg.s_grid()) {
            cases.push(PiCase::Pair(theta(&x(k, m)), theta(&x(l, s))));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples {
        cases.push(PiCase::Pair(random_m10_field(&mut rng), random_m10_field(&mut rng)));
    }
    for _ in 0..cfg.samples {
        let u = random_m10_field(&mut rng);
        let v = random_m10_field(&mut rng);
        // coefficients u_i v_j vanish to second order at (1,0)
        let f1 = u.f1.a_mul(&v.f2);
        let f2 = u.f2.a_mul(&v.f1) + u.f1.a_mul(&v.f1);
        cases.push(PiCase::Kernel(VField::new(f1, f2)));
    }
    sweep(&cases, |case| match case {
        PiCase::Pair(a, b) => {
            let key = || format!("pi [{}, {}]", a, b);
            match (a.g_bracket(b).pi_project(), a.pi_project(), b.pi_project()) {
                (Ok(ab), Ok(pa), Ok(pb)) => eq_or(key, &pa.gl2_bracket(&pb), &ab),
                _ => Some(Failure::new(key(), "field vanishing at (1,0)", "outside the domain of pi")),
            }
        }
        PiCase::Kernel(v) => match v.pi_project() {
            Ok(p) if p.is_zero() => None,
            Ok(p) => Some(Failure::new(format!("pi {}", v), "[[0, 0], [0, 0]]", p)),
            Err(e) => Some(Failure::new(format!("pi {}", v), "[[0, 0], [0, 0]]", e)),
        },
    })
}

// ---------------------------------------------------------------------------
// gl2-lift

/// The lift of a `gl2`-module to `L` is a representation, for the natural,
/// adjoint and symmetric-square modules.
fn gl2_lift(cfg: &CheckConfig) -> Outcome {
    let reps = [RepChoice::Natural, RepChoice::Adjoint, RepChoice::Sym2];
    let ka: Vec<LKey> = indexed(&cfg.m_grid()).into_iter().filter_map(|(k, m)| LKey::new(k, m)).collect();
    let kb: Vec<LKey> = indexed(&cfg.s_grid()).into_iter().filter_map(|(k, m)| LKey::new(k, m)).collect();
    let modules: Vec<GL2Module> = reps.iter().map(|r| r.module()).collect();
    let mut cases = Vec::new();
    for r in 0..reps.len() {
        for &a in &ka {
            cases.extend(kb.iter().map(|&b| (r, a, b)));
        }
    }
    sweep(&cases, |&(r, a, b)| {
        let v = &modules[r];
        let (xa, xb) = (LElem::basis(a), LElem::basis(b));
        eq_or(
            || format!("{} [{}, {}]", reps[r].name(), a, b),
            &lift_gl2(&xa, v).commutator(&lift_gl2(&xb, v)),
            &lift_gl2(&l_bracket(&xa, &xb), v),
        )
    })
}

// ---------------------------------------------------------------------------
// thm-2.3-hom

/// `phi` preserves brackets of vector-field generators (all four axis pairs)
/// and of generators with monomials, without ever leaving the truncation, and
/// its images carry only multiplication operators on `L`.
fn thm_2_3_hom(cfg: &CheckConfig) -> Outcome {
    let mut cases: Vec<((Axis, AMono), Option<Axis>, AMono)> = Vec::new();
    for a in indexed(&cfg.m_grid()) {
        for (l, s) in indexed(&cfg.s_grid()) {
            cases.push((a, Some(l), s));
        }
        for s in cfg.s_grid().monos() {
            cases.push((a, None, s));
        }
    }
    sweep(&cases, |&((k, m), l, s)| {
        let xg = SmashElem::embed_g(&VField::generator(k, m));
        let (y, yname) = match l {
            Some(l) => (SmashElem::embed_g(&VField::generator(l, s)), format!("gen{}{}", l, show_m(s))),
            None => (SmashElem::embed_a(APoly::monomial(s.m1, s.m2)), format!("t^{} . 1", show_m(s))),
        };
        let key = || format!("phi [gen{}{}, {}]", k, show_m(m), yname);
        let (px, py) = (phi(&xg), phi(&y));
        if !px.coefficients_are_functions() {
            return Some(Failure::new(format!("phi gen{}{} coefficients", k, show_m(m)), "functions", px));
        }
        let lhs = phi(&xg.smash_bracket(&y));
        match px.dl_bracket(&py) {
            Ok(rhs) => eq_or(key, &lhs, &rhs),
            Err(e) => Some(Failure::new(key(), lhs, e)),
        }
    })
}

// ---------------------------------------------------------------------------
// lemma-4.2-roundtrip

enum RoundTrip {
    Smash(String, SmashElem),
    Tensor(String, DLElem),
}

/// `rho` and `phi` are mutually inverse on the generators of both sides.
fn lemma_4_2_roundtrip(cfg: &CheckConfig) -> Outcome {
    let mut cases = Vec::new();
    for (k, m) in indexed(&cfg.m_grid()) {
        cases.push(RoundTrip::Smash(format!("gen{}{}", k, show_m(m)), SmashElem::embed_g(&VField::generator(k, m))));
        if let Some(key) = LKey::new(k, m) {
            cases.push(RoundTrip::Smash(format!("xk {}", key), xk(k, m)));
            cases.push(RoundTrip::Tensor(format!("1 (x) {}", key), DLElem::from_l(&LElem::basis(key))));
        }
    }
    for m in cfg.m_grid().monos() {
        let t = APoly::monomial(m.m1, m.m2);
        cases.push(RoundTrip::Smash(format!("t^{} . 1", show_m(m)), SmashElem::embed_a(t.clone())));
        cases.push(RoundTrip::Tensor(format!("t^{} (x) 1", show_m(m)), DLElem::from_d(DOp::from_poly(&t))));
    }
    for k in Axis::BOTH {
        cases.push(RoundTrip::Tensor(format!("d{} (x) 1", k), DLElem::from_d(DOp::partial(k))));
        let tk = if k == Axis::One { APoly::t1() } else { APoly::t2() };
        cases.push(RoundTrip::Tensor(format!("t{} (x) 1", k), DLElem::from_d(DOp::from_poly(&tk))));
    }
    sweep(&cases, |case| match case {
        RoundTrip::Smash(name, g) => match rho(&phi(g)) {
            Ok(back) => eq_or(|| format!("rho phi {}", name), g, &back),
            Err(e) => Some(Failure::new(format!("rho phi {}", name), g, e)),
        },
        RoundTrip::Tensor(name, y) => match rho(y) {
            Ok(r) => eq_or(|| format!("phi rho {}", name), y, &phi(&r)),
            Err(e) => Some(Failure::new(format!("phi rho {}", name), y, e)),
        },
    })
}

// ---------------------------------------------------------------------------
// jet-axioms / negative-control

fn jet_axioms(cfg: &CheckConfig, v: GL2Module) -> Result<Outcome, CheckError> {
    let module = JetModule::new(cfg.weight_module()?, v);
    let cases = jet_cases(&module, &cfg.m_grid(), &cfg.s_grid());
    Ok(sweep(&cases, |case| {
        module.check_case(case).map(|f| Failure { key: f.key, expected: f.expected, actual: f.actual })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("-3..3".parse::<Range>(), Ok(Range::new(-3, 3)));
        assert_eq!("0..=2".parse::<Range>(), Ok(Range::new(0, 2)));
        assert_eq!("4".parse::<Range>(), Ok(Range::new(4, 4)));
        assert!("a..b".parse::<Range>().is_err());
    }

    #[test]
    fn catalog_names_round_trip() {
        for id in CheckId::ALL {
            assert_eq!(id.name().parse::<CheckId>(), Ok(id));
        }
        assert_eq!("lemma-9".parse::<CheckId>(), Err(CheckError::UnknownCheck("lemma-9".into())));
    }

    #[test]
    fn empty_and_negative_grids_are_rejected() {
        let mut cfg = CheckConfig::new(CheckId::Lemma32);
        cfg.m1 = Range::new(1, 0);
        assert!(matches!(run_check(&cfg), Err(CheckError::InvalidConfig(_))));
        let mut cfg = CheckConfig::new(CheckId::Lemma32);
        cfg.s2 = Range::new(-1, 2);
        assert!(matches!(run_check(&cfg), Err(CheckError::InvalidConfig(_))));
    }

    #[test]
    fn non_integral_a2_needs_laurent() {
        let mut cfg = CheckConfig::new(CheckId::JetAxioms);
        cfg.a2 = Rat::new(1.into(), 3.into());
        assert!(matches!(cfg.validate(), Err(CheckError::InvalidConfig(_))));
        cfg.variant = Variant::Laurent;
        assert_eq!(cfg.validate(), Ok(()));
    }

    #[test]
    fn catalog_expansion() {
        let all = catalog_configs(3);
        assert_eq!(all.len(), 10 + 14);
        assert!(all.iter().all(|c| c.jobs == 3 && c.validate().is_ok()));
    }
}
