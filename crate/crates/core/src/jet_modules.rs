use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra_a::{AMono, APoly, Axis};
use crate::error::AlgebraError;
use crate::grid::ExpGrid;
use crate::jet_lie::GL2Module;
use crate::lin::{Lin, Monomial};
use crate::rat::{falling, int, Rat};
use crate::vector_fields::VField;
use crate::weyl::DOp;

/// Which weight `D`-module built on `t^a Q[t1^{±1}, t2^{±1}]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Submodule `t1^{a1} Q[t1^{±1}, t2]` (`a2 ∈ Z`).
    Poly,
    /// The whole `t^a Q[t1^{±1}, t2^{±1}]`.
    Laurent,
    /// Quotient `t1^{a1} Q[t1^{±1}, t2^{±1}] / t1^{a1} Q[t1^{±1}, t2]`, basis `n2 < 0`.
    Quotient,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Poly, Variant::Laurent, Variant::Quotient];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Poly => "poly",
            Variant::Laurent => "laurent",
            Variant::Quotient => "quotient",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightDMod {
    a1: Rat,
    a2: Rat,
    variant: Variant,
}

impl WeightDMod {
    /// For `Poly` and `Quotient` the shift `a2` must be an integer and is
    /// normalized to 0.
    pub fn new(a1: Rat, a2: Rat, variant: Variant) -> Result<Self, AlgebraError> {
        let a2 = match variant {
            Variant::Laurent => a2,
            Variant::Poly | Variant::Quotient => {
                if !a2.is_integer() {
                    return Err(AlgebraError::InvalidModule(format!(
                        "{} module needs an integer a2, got {}",
                        variant, a2
                    )));
                }
                Rat::zero()
            }
        };
        Ok(WeightDMod { a1, a2, variant })
    }

    pub fn a1(&self) -> &Rat {
        &self.a1
    }

    pub fn a2(&self) -> &Rat {
        &self.a2
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Whether `t^{a+n}` is a basis vector (and not projected away).
    pub fn admits(&self, n: PIdx) -> bool {
        match self.variant {
            Variant::Poly => n.n2 >= 0,
            Variant::Laurent => true,
            Variant::Quotient => n.n2 < 0,
        }
    }

    /// Finite window of basis offsets used by the axiom sweep: `n1 ∈ {-1,0,1}`
    /// and three `n2` values at the edge of the variant's range.
    pub fn window(&self) -> Vec<PIdx> {
        let n2s: [i64; 3] = match self.variant {
            Variant::Poly => [0, 1, 2],
            Variant::Laurent => [-1, 0, 1],
            Variant::Quotient => [-3, -2, -1],
        };
        let mut out = Vec::new();
        for n1 in -1..=1 {
            for n2 in n2s {
                out.push(PIdx::new(n1, n2));
            }
        }
        out
    }
}

/// Offset `n` of the basis vector `t^{a+n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PIdx {
    pub n1: i64,
    pub n2: i64,
}

impl PIdx {
    pub const fn new(n1: i64, n2: i64) -> Self {
        PIdx { n1, n2 }
    }

    fn shift(self, dn1: i64, dn2: i64) -> PIdx {
        PIdx::new(self.n1 + dn1, self.n2 + dn2)
    }
}

impl Monomial for PIdx {
    fn is_unit(&self) -> bool {
        false
    }

    fn fmt_mono(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^(a+({},{}))", self.n1, self.n2)
    }
}

pub type PElem = Lin<PIdx>;

/// `t1^p t2^q d1^c d2^d · t^{a+n} = (a1+n1)_c (a2+n2)_d t^{a+n+(p-c, q-d)}`
/// with falling factorials, then projected onto the variant's basis.
pub fn p_act(x: &DOp, v: &PElem, module: &WeightDMod) -> PElem {
    let mut out = PElem::zero();
    for (n, cv) in v.iter() {
        act_mono_on(x, *n, cv, module, &mut out);
    }
    out
}

fn act_mono_on(x: &DOp, n: PIdx, cv: &Rat, module: &WeightDMod, out: &mut PElem) {
    let e1 = &module.a1 + int(n.n1);
    let e2 = &module.a2 + int(n.n2);
    for (d, cx) in x.iter() {
        let target = n.shift(d.a - d.c as i64, d.b as i64 - d.d as i64);
        if !module.admits(target) {
            continue;
        }
        let c = falling(&e1, d.c) * falling(&e2, d.d);
        if c.is_zero() {
            continue;
        }
        out.add_term(target, c * cx * cv);
    }
}

/// Basis vector `t^{a+n} ⊗ v_j` of `M(P, V) = P ⊗ V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JetKey {
    pub n: PIdx,
    pub j: usize,
}

impl JetKey {
    pub const fn new(n: PIdx, j: usize) -> Self {
        JetKey { n, j }
    }
}

impl Monomial for JetKey {
    fn is_unit(&self) -> bool {
        false
    }

    fn fmt_mono(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.n.fmt_mono(f)?;
        write!(f, " (x) v{}", self.j)
    }
}

impl fmt::Display for JetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_mono(f)
    }
}

pub type JetElem = Lin<JetKey>;

/// Tensor jet module `M(P, V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetModule {
    p: WeightDMod,
    v: GL2Module,
}

impl JetModule {
    pub fn new(p: WeightDMod, v: GL2Module) -> Self {
        JetModule { p, v }
    }

    pub fn p(&self) -> &WeightDMod {
        &self.p
    }

    pub fn v(&self) -> &GL2Module {
        &self.v
    }

    pub fn basis_window(&self) -> Vec<JetKey> {
        let mut out = Vec::new();
        for n in self.p.window() {
            for j in 0..self.v.dim() {
                out.push(JetKey::new(n, j));
            }
        }
        out
    }

    /// Adds `c · t^{m} t^{a+n} ⊗ E v_j` (projected).
    fn add_correction(&self, out: &mut JetElem, c: &Rat, m: AMono, n: PIdx, e: (usize, usize), j: usize) {
        let target = n.shift(m.m1, m.m2 as i64);
        if !self.p.admits(target) {
            return;
        }
        let mat = self.v.e(e.0, e.1);
        for r in 0..self.v.dim() {
            let entry = mat.get(r, j);
            if !entry.is_zero() {
                out.add_term(JetKey::new(target, r), c * entry);
            }
        }
    }

    /// `t^{m+δ_{k1}e_1} ∂_k · (g ⊗ v) = (t^{m+δ_{k1}e_1} ∂_k g) ⊗ v
    ///     + m1 t^m g ⊗ E_{1k} v + m2 t^{m-e_2} g ⊗ E_{2k} v`.
    pub fn act_vf(&self, k: Axis, m: AMono, w: &JetElem) -> JetElem {
        let kk = k.index() as usize;
        let mut out = JetElem::zero();
        for (key, cw) in w.iter() {
            // first-order case of `p_act`: t1^{m1+1} t2^{m2} ∂1 t^{a+n} = (a1+n1) t^{a+n+m},
            // t1^{m1} t2^{m2} ∂2 t^{a+n} = (a2+n2) t^{a+n+m-e2}
            let (weight, target) = match k {
                Axis::One => (&self.p.a1 + int(key.n.n1), key.n.shift(m.m1, m.m2 as i64)),
                Axis::Two => (&self.p.a2 + int(key.n.n2), key.n.shift(m.m1, m.m2 as i64 - 1)),
            };
            if self.p.admits(target) && !weight.is_zero() {
                out.add_term(JetKey::new(target, key.j), weight * cw);
            }
            if m.m1 != 0 {
                self.add_correction(&mut out, &(cw * int(m.m1)), m, key.n, (1, kk), key.j);
            }
            if let Some(lowered) = m.lower(Axis::Two) {
                self.add_correction(&mut out, &(cw * int(m.m2 as i64)), lowered, key.n, (2, kk), key.j);
            }
        }
        out
    }

    /// `t^m · (g ⊗ v) = (t^m g) ⊗ v`.
    pub fn act_a(&self, m: AMono, w: &JetElem) -> JetElem {
        w.filter_map_keys(|key| {
            let target = key.n.shift(m.m1, m.m2 as i64);
            self.p.admits(target).then_some(JetKey::new(target, key.j))
        })
    }

    pub fn act_poly(&self, f: &APoly, w: &JetElem) -> JetElem {
        let mut out = JetElem::zero();
        for (m, c) in f.iter() {
            out.add_scaled(&self.act_a(*m, w), c);
        }
        out
    }

    /// Action of an arbitrary vector field, expanded over generators.
    pub fn act_field(&self, x: &VField, w: &JetElem) -> JetElem {
        let mut out = JetElem::zero();
        for (alpha, k, c) in x.terms() {
            let m = AMono::new(alpha.m1 - k.delta1(), alpha.m2);
            out.add_scaled(&self.act_vf(k, m, w), c);
        }
        out
    }

    /// Checks one axiom instance; `None` when it holds.
    pub fn check_case(&self, case: &JetCase) -> Option<JetFailure> {
        let (expected, actual) = match *case {
            JetCase::Associativity { s, r, w } => {
                let w = JetElem::basis(w);
                let lhs = self.act_a(s, &self.act_a(r, &w));
                (self.act_a(s.times(r), &w), lhs)
            }
            JetCase::Compatibility { k, m, s, w } => {
                let w = JetElem::basis(w);
                let x = VField::generator(k, m);
                let lhs = self.act_vf(k, m, &self.act_a(s, &w));
                let ts = APoly::monomial(s.m1, s.m2);
                let rhs = self.act_a(s, &self.act_vf(k, m, &w)) + self.act_poly(&x.g_apply(&ts), &w);
                (rhs, lhs)
            }
            JetCase::Bracket { k, m, l, s, w } => {
                let w = JetElem::basis(w);
                let bracket = VField::generator(k, m).g_bracket(&VField::generator(l, s));
                let lhs = self.act_field(&bracket, &w);
                let rhs = self.act_vf(k, m, &self.act_vf(l, s, &w)) - self.act_vf(l, s, &self.act_vf(k, m, &w));
                (lhs, rhs)
            }
        };
        (expected != actual).then(|| JetFailure {
            axiom: case.axiom(),
            key: case.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    }
}

/// `m_act_vf`: vector-field generator action on `M(P, V)`.
pub fn m_act_vf(k: Axis, m: AMono, w: &JetElem, p: &WeightDMod, v: &GL2Module) -> JetElem {
    JetModule::new(p.clone(), v.clone()).act_vf(k, m, w)
}

/// `m_act_a`: multiplication by `t^m` on `M(P, V)`.
pub fn m_act_a(m: AMono, w: &JetElem, p: &WeightDMod) -> JetElem {
    w.filter_map_keys(|key| {
        let target = key.n.shift(m.m1, m.m2 as i64);
        p.admits(target).then_some(JetKey::new(target, key.j))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// `t^s (t^r w) = t^{s+r} w`
    Associativity,
    /// `X (f w) = f (X w) + X(f) w`
    Compatibility,
    /// `[X, Y] w = X (Y w) - Y (X w)`
    Bracket,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "assoc",
            Axiom::Compatibility => "compat",
            Axiom::Bracket => "bracket",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JetCase {
    Associativity { s: AMono, r: AMono, w: JetKey },
    Compatibility { k: Axis, m: AMono, s: AMono, w: JetKey },
    Bracket { k: Axis, m: AMono, l: Axis, s: AMono, w: JetKey },
}

impl JetCase {
    pub fn axiom(&self) -> Axiom {
        match self {
            JetCase::Associativity { .. } => Axiom::Associativity,
            JetCase::Compatibility { .. } => Axiom::Compatibility,
            JetCase::Bracket { .. } => Axiom::Bracket,
        }
    }
}

impl fmt::Display for JetCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JetCase::Associativity { s, r, w } => {
                write!(f, "assoc s=({},{}) r=({},{}) w={}", s.m1, s.m2, r.m1, r.m2, w)
            }
            JetCase::Compatibility { k, m, s, w } => {
                write!(f, "compat k={} m=({},{}) s=({},{}) w={}", k, m.m1, m.m2, s.m1, s.m2, w)
            }
            JetCase::Bracket { k, m, l, s, w } => write!(
                f,
                "bracket k={} m=({},{}) l={} s=({},{}) w={}",
                k, m.m1, m.m2, l, s.m1, s.m2, w
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetFailure {
    pub axiom: Axiom,
    pub key: String,
    pub expected: String,
    pub actual: String,
}

/// Every axiom instance over the two exponent grids and the module's basis
/// window, in a fixed order.
pub fn jet_cases(module: &JetModule, m_grid: &ExpGrid, s_grid: &ExpGrid) -> Vec<JetCase> {
    let ms = m_grid.monos();
    let ss = s_grid.monos();
    let ws = module.basis_window();
    let mut out = Vec::new();
    for &s in &ss {
        for &r in &ms {
            for &w in &ws {
                out.push(JetCase::Associativity { s, r, w });
            }
        }
    }
    for k in Axis::BOTH {
        for &m in &ms {
            for &s in &ss {
                for &w in &ws {
                    out.push(JetCase::Compatibility { k, m, s, w });
                }
            }
        }
    }
    for k in Axis::BOTH {
        for &m in &ms {
            for l in Axis::BOTH {
                for &s in &ss {
                    for &w in &ws {
                        out.push(JetCase::Bracket { k, m, l, s, w });
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetAxiomReport {
    pub cases: usize,
    pub failures: Vec<JetFailure>,
}

impl JetAxiomReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Sequential exhaustive check of the jet-module axioms on `M(P, V)`.
pub fn check_jet_axioms(p: &WeightDMod, v: &GL2Module, m_grid: &ExpGrid, s_grid: &ExpGrid) -> JetAxiomReport {
    let module = JetModule::new(p.clone(), v.clone());
    let cases = jet_cases(&module, m_grid, s_grid);
    let failures = cases.iter().filter_map(|c| module.check_case(c)).collect();
    JetAxiomReport { cases: cases.len(), failures }
}
