//! Deciding Lie-theoretic properties of `u(L)` two ways.
//!
//! The *condition side* looks only at `L`: p-nilpotence of brackets of its
//! homogeneous parts, nilpotence of `L`, and a witness subspace `M ⊆ L1` of
//! codimension at most one. The *oracle side* builds `u(L)` and computes its
//! series directly. The two must agree; [`cross_validate`] runs both plus a
//! battery of structural checks.

mod checks;

pub use checks::{CheckOutcome, CheckStatus};

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::linalg::{Scalar, Subspace};
use crate::pbw::Envelope;
use crate::series::{
    commutator_ideal, delta_series, gamma_series, gamma_super_series, nil_index_exact, nilpotency_index, NilIndex,
    Nilpotency, SeriesResult, SeriesSummary,
};
use crate::superlie::{
    is_nilpotent_l0_module, is_p_nilpotent_subspace, lower_central_series, GradedSubspace, LieSuperData,
    PNilpotence,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    /// Three-valued conjunction: any `No` wins, then any `Inconclusive`.
    pub fn all(items: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut out = Verdict::Yes;
        for v in items {
            match v {
                Verdict::No => return Verdict::No,
                Verdict::Inconclusive => out = Verdict::Inconclusive,
                Verdict::Yes => {}
            }
        }
        out
    }

    pub fn any(items: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut out = Verdict::No;
        for v in items {
            match v {
                Verdict::Yes => return Verdict::Yes,
                Verdict::Inconclusive => out = Verdict::Inconclusive,
                Verdict::No => {}
            }
        }
        out
    }

    pub fn short(self) -> char {
        match self {
            Verdict::Yes => 'Y',
            Verdict::No => 'N',
            Verdict::Inconclusive => '?',
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

impl From<&PNilpotence> for Verdict {
    fn from(p: &PNilpotence) -> Self {
        match p {
            PNilpotence::Yes { .. } => Verdict::Yes,
            PNilpotence::No { .. } => Verdict::No,
            PNilpotence::BudgetExceeded { .. } => Verdict::Inconclusive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    Agree,
    Disagree,
    Inconclusive,
}

impl Agreement {
    pub fn of(a: Verdict, b: Verdict) -> Self {
        if a == Verdict::Inconclusive || b == Verdict::Inconclusive {
            Agreement::Inconclusive
        } else if a == b {
            Agreement::Agree
        } else {
            Agreement::Disagree
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    NonmatrixPi,
    LieSolvable,
    LieNilpotent,
    LieSuperNilpotent,
}

impl Property {
    pub const ALL: [Property; 4] = [
        Property::NonmatrixPi,
        Property::LieSolvable,
        Property::LieNilpotent,
        Property::LieSuperNilpotent,
    ];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::NonmatrixPi => "nonmatrix_pi",
            Property::LieSolvable => "lie_solvable",
            Property::LieNilpotent => "lie_nilpotent",
            Property::LieSuperNilpotent => "lie_super_nilpotent",
        })
    }
}

/// A codimension-≤1 subspace `M ⊆ L1` with `(L1, L0) ⊆ M` and `(M, L1)`
/// p-nilpotent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessM {
    /// RREF rows in odd coordinates.
    pub basis: Vec<Vec<Scalar>>,
    /// Same, written with basis names.
    pub display: Vec<String>,
    pub codim: usize,
    pub requires_module_structure: bool,
    /// `(M, L0) ⊆ M`.
    pub is_module: bool,
    pub contains_l1_l0: bool,
    /// p-nilpotence index of `(M, L1)`.
    pub p_nilpotence_index: usize,
    /// Position in the candidate order (0 is `L1` itself).
    pub candidate: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum WitnessSearch {
    Found { witness: WitnessM, candidates: usize },
    NoneExists { candidates: usize },
    Inconclusive { candidates: usize, cause: String },
}

impl WitnessSearch {
    pub fn verdict(&self) -> Verdict {
        match self {
            WitnessSearch::Found { .. } => Verdict::Yes,
            WitnessSearch::NoneExists { .. } => Verdict::No,
            WitnessSearch::Inconclusive { .. } => Verdict::Inconclusive,
        }
    }

    pub fn witness(&self) -> Option<&WitnessM> {
        match self {
            WitnessSearch::Found { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

fn l0(l: &LieSuperData) -> GradedSubspace {
    GradedSubspace::even_only(l, Subspace::full(l.field(), l.n0()))
}

fn l1(l: &LieSuperData) -> GradedSubspace {
    GradedSubspace::odd_only(l, Subspace::full(l.field(), l.n1()))
}

/// Candidate order: `L1` first, then every hyperplane of `L1` containing
/// `(L1, L0)`, sorted by RREF rows.
pub fn witness_candidates(l: &LieSuperData) -> crate::Result<Vec<Subspace>> {
    let full = Subspace::full(l.field(), l.n1());
    let k = l1(l).bracket(l, &l0(l)).odd;
    let mut out = vec![full.clone()];
    if k.dim() < full.dim() {
        // (p^c - 1)/(p - 1) hyperplanes for codim c; guard the count.
        let c = full.dim() - k.dim();
        let count = crate::config::element_count(l.p(), c);
        if count > u64::MAX as u128 {
            return Err(crate::Error::EnumerationBudget { needed: count, cap: u64::MAX });
        }
        out.extend(k.hyperplanes_between(&full)?);
    }
    Ok(out)
}

/// Deterministic search for a witness `M`; with `require_module`, also
/// insists on `(M, L0) ⊆ M`.
pub fn find_witness_m(l: &LieSuperData, require_module: bool, enum_cap: u64) -> WitnessSearch {
    let k = l1(l).bracket(l, &l0(l)).odd;
    let count = if k.dim() < l.n1() {
        let c = l.n1() - k.dim();
        (crate::config::element_count(l.p(), c) - 1) / (l.p() as u128 - 1)
    } else {
        0
    };
    if count + 1 > enum_cap as u128 {
        return WitnessSearch::Inconclusive {
            candidates: 0,
            cause: format!("{} witness candidates exceed enumeration cap {enum_cap}", count + 1),
        };
    }
    let candidates = match witness_candidates(l) {
        Ok(c) => c,
        Err(e) => {
            return WitnessSearch::Inconclusive {
                candidates: 0,
                cause: e.to_string(),
            }
        }
    };
    let n = candidates.len();
    let even = l0(l);
    let odd_all = l1(l);
    let mut cause = None;
    for (idx, m) in candidates.into_iter().enumerate() {
        let mg = GradedSubspace::odd_only(l, m.clone());
        let is_module = mg.bracket(l, &even).odd.is_subset(&m).unwrap_or(false);
        if require_module && !is_module {
            continue;
        }
        let w = mg.bracket(l, &odd_all).even;
        match is_p_nilpotent_subspace(l, &w, enum_cap) {
            PNilpotence::Yes { index } => {
                let display = m
                    .basis()
                    .iter()
                    .map(|r| l.format_element(&crate::superlie::embed_odd(l, r)))
                    .collect();
                return WitnessSearch::Found {
                    witness: WitnessM {
                        basis: m.basis().to_vec(),
                        display,
                        codim: l.n1() - m.dim(),
                        requires_module_structure: require_module,
                        is_module,
                        contains_l1_l0: k.is_subset(&m).unwrap_or(false),
                        p_nilpotence_index: index,
                        candidate: idx,
                    },
                    candidates: n,
                };
            }
            PNilpotence::No { .. } => {}
            PNilpotence::BudgetExceeded { needed, cap } => {
                cause.get_or_insert(format!("p-nilpotence of (M, L1) needs {needed} elements, cap {cap}"));
            }
        }
    }
    match cause {
        Some(cause) => WitnessSearch::Inconclusive { candidates: n, cause },
        None => WitnessSearch::NoneExists { candidates: n },
    }
}

/// Facts about `L` shared by the four condition sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralFacts {
    /// `(L0, L0)` p-nilpotent.
    pub l0_l0: PNilpotence,
    /// `(L1, L1)` p-nilpotent.
    pub l1_l1: PNilpotence,
    /// `L0` itself p-nilpotent.
    pub l0: PNilpotence,
    pub l1_l0_zero: bool,
    /// Steps for `(L,_n L0)` to reach zero.
    pub l0_module_steps: Option<usize>,
    /// Nilpotency class of `L`.
    pub lie_class: Option<usize>,
    /// `(L, L)` is finite-dimensional; always true here.
    pub derived_finite: bool,
    pub witness_module: WitnessSearch,
    pub witness_subspace: WitnessSearch,
}

pub fn structural_facts(l: &LieSuperData, enum_cap: u64) -> StructuralFacts {
    let even = l0(l);
    let odd = l1(l);
    let l0l0 = even.bracket(l, &even).even;
    let l1l1 = odd.bracket(l, &odd).even;
    StructuralFacts {
        l0_l0: is_p_nilpotent_subspace(l, &l0l0, enum_cap),
        l1_l1: is_p_nilpotent_subspace(l, &l1l1, enum_cap),
        l0: is_p_nilpotent_subspace(l, &Subspace::full(l.field(), l.n0()), enum_cap),
        l1_l0_zero: odd.bracket(l, &even).is_zero(),
        l0_module_steps: is_nilpotent_l0_module(l),
        lie_class: lower_central_series(l).class_or_length,
        derived_finite: true,
        witness_module: find_witness_m(l, true, enum_cap),
        witness_subspace: find_witness_m(l, false, enum_cap),
    }
}

/// One named clause of a condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub verdict: Verdict,
}

fn clause(name: &str, verdict: Verdict) -> Clause {
    Clause {
        name: name.to_string(),
        verdict,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: Property,
    pub condition: Verdict,
    pub oracle: Verdict,
    pub agreement: Agreement,
    pub clauses: Vec<Clause>,
    pub oracle_detail: String,
    /// Why a side is inconclusive, when it is.
    pub causes: Vec<String>,
}

impl PropertyReport {
    fn new(property: Property, clauses: Vec<Clause>, condition: Verdict, oracle: Verdict, detail: String, causes: Vec<String>) -> Self {
        PropertyReport {
            property,
            condition,
            oracle,
            agreement: Agreement::of(condition, oracle),
            clauses,
            oracle_detail: detail,
            causes,
        }
    }
}

/// Lazily computed objects shared by the classifiers and checks.
pub struct Analysis<'a> {
    pub lie: &'a LieSuperData,
    pub caps: Caps,
    envelope: OnceLock<std::result::Result<Envelope, String>>,
    facts: OnceLock<StructuralFacts>,
    gamma: OnceLock<SeriesResult>,
    delta: OnceLock<SeriesResult>,
    gamma_super: OnceLock<std::result::Result<SeriesResult, String>>,
    commutator: OnceLock<(Subspace, Nilpotency)>,
}

impl<'a> Analysis<'a> {
    pub fn new(lie: &'a LieSuperData, caps: Caps) -> Self {
        Analysis {
            lie,
            caps,
            envelope: OnceLock::new(),
            facts: OnceLock::new(),
            gamma: OnceLock::new(),
            delta: OnceLock::new(),
            gamma_super: OnceLock::new(),
            commutator: OnceLock::new(),
        }
    }

    /// `u(L)`, or the reason it could not be built.
    pub fn envelope(&self) -> std::result::Result<&Envelope, &str> {
        self.envelope
            .get_or_init(|| Envelope::build(self.lie, self.caps.dim_cap).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|s| s.as_str())
    }

    pub fn facts(&self) -> &StructuralFacts {
        self.facts.get_or_init(|| structural_facts(self.lie, self.caps.enum_cap))
    }

    pub fn gamma(&self) -> Option<&SeriesResult> {
        let env = self.envelope().ok()?;
        Some(self.gamma.get_or_init(|| gamma_series(&env.algebra)))
    }

    pub fn delta(&self) -> Option<&SeriesResult> {
        let env = self.envelope().ok()?;
        Some(self.delta.get_or_init(|| delta_series(&env.algebra)))
    }

    pub fn gamma_super(&self) -> Option<std::result::Result<&SeriesResult, &str>> {
        let env = self.envelope().ok()?;
        Some(
            self.gamma_super
                .get_or_init(|| gamma_super_series(&env.algebra).map_err(|e| e.to_string()))
                .as_ref()
                .map_err(|s| s.as_str()),
        )
    }

    /// `[R,R]R` and its nilpotency.
    pub fn commutator_ideal(&self) -> Option<&(Subspace, Nilpotency)> {
        let env = self.envelope().ok()?;
        Some(self.commutator.get_or_init(|| {
            let ci = commutator_ideal(&env.algebra);
            let nil = nilpotency_index(&env.algebra, &ci, None);
            (ci, nil)
        }))
    }

    fn series_verdict(&self, s: Option<&SeriesResult>, what: &str, causes: &mut Vec<String>) -> (Verdict, String) {
        match s {
            None => {
                causes.push(self.envelope().err().unwrap_or("u(L) unavailable").to_string());
                (Verdict::Inconclusive, format!("{what}: u(L) not built"))
            }
            Some(s) if s.terminated => (
                Verdict::Yes,
                format!("{what} dims {:?}, reaches 0 at index {}", s.dims, s.class_or_length.unwrap()),
            ),
            Some(s) if s.stabilized => (
                Verdict::No,
                format!("{what} dims {:?}, stable at dim {}", s.dims, s.dims.last().unwrap()),
            ),
            Some(s) => {
                causes.push(format!("{what} truncated after {} terms", s.dims.len()));
                (Verdict::Inconclusive, format!("{what} dims {:?}, truncated", s.dims))
            }
        }
    }

    pub fn nonmatrix(&self) -> PropertyReport {
        let f = self.facts();
        let mut causes = Vec::new();
        let clauses = vec![
            clause("l0_l0_p_nilpotent", Verdict::from(&f.l0_l0)),
            clause("module_witness_m", f.witness_module.verdict()),
        ];
        note_budget(&f.l0_l0, "(L0,L0)", &mut causes);
        note_witness(&f.witness_module, &mut causes);
        let condition = Verdict::all(clauses.iter().map(|c| c.verdict));
        let (oracle, detail) = match (self.commutator_ideal(), self.envelope()) {
            (Some((ci, nil)), Ok(env)) => {
                let nil_note = match nil_index_exact(&env.algebra, ci, self.caps.enum_cap) {
                    Ok(NilIndex::Index { e, .. }) => format!("; exact nil index {e}"),
                    Ok(NilIndex::NotNil { .. }) => "; has a non-nilpotent element".into(),
                    Err(_) => String::new(),
                };
                match nil {
                    Nilpotency::Index { c } => (
                        Verdict::Yes,
                        format!("[R,R]R has dim {} and nilpotency index {c}{nil_note}", ci.dim()),
                    ),
                    Nilpotency::NotNilpotent { stable_dim } => (
                        Verdict::No,
                        format!("[R,R]R has dim {}; powers stabilize at dim {stable_dim}{nil_note}", ci.dim()),
                    ),
                    Nilpotency::Undetermined { max_k } => {
                        causes.push(format!("powers of [R,R]R undecided after {max_k} terms"));
                        (Verdict::Inconclusive, "undetermined".into())
                    }
                }
            }
            _ => {
                causes.push(self.envelope().err().unwrap_or("u(L) unavailable").to_string());
                (Verdict::Inconclusive, "u(L) not built".into())
            }
        };
        PropertyReport::new(Property::NonmatrixPi, clauses, condition, oracle, detail, causes)
    }

    pub fn solvable(&self) -> PropertyReport {
        let f = self.facts();
        let mut causes = Vec::new();
        let clauses = vec![
            clause("derived_finite_dimensional", Verdict::from_bool(f.derived_finite)),
            clause("l0_l0_p_nilpotent", Verdict::from(&f.l0_l0)),
            clause("subspace_witness_m", f.witness_subspace.verdict()),
        ];
        note_budget(&f.l0_l0, "(L0,L0)", &mut causes);
        note_witness(&f.witness_subspace, &mut causes);
        let condition = Verdict::all(clauses.iter().map(|c| c.verdict));
        let (oracle, detail) = self.series_verdict(self.delta(), "delta", &mut causes);
        PropertyReport::new(Property::LieSolvable, clauses, condition, oracle, detail, causes)
    }

    pub fn nilpotent(&self) -> PropertyReport {
        let f = self.facts();
        let mut causes = Vec::new();
        let small_odd = Verdict::from_bool(self.lie.n1() <= 1 && f.l1_l0_zero);
        let clauses = vec![
            clause("derived_finite_dimensional", Verdict::from_bool(f.derived_finite)),
            clause("nilpotent_l0_module", Verdict::from_bool(f.l0_module_steps.is_some())),
            clause("l0_l0_p_nilpotent", Verdict::from(&f.l0_l0)),
            clause(
                "l1_l1_p_nilpotent_or_small_l1",
                Verdict::any([Verdict::from(&f.l1_l1), small_odd]),
            ),
        ];
        note_budget(&f.l0_l0, "(L0,L0)", &mut causes);
        note_budget(&f.l1_l1, "(L1,L1)", &mut causes);
        let condition = Verdict::all(clauses.iter().map(|c| c.verdict));
        let (oracle, detail) = self.series_verdict(self.gamma(), "gamma", &mut causes);
        PropertyReport::new(Property::LieNilpotent, clauses, condition, oracle, detail, causes)
    }

    pub fn super_nilpotent(&self) -> PropertyReport {
        let f = self.facts();
        let mut causes = Vec::new();
        let clauses = vec![
            clause("l_nilpotent", Verdict::from_bool(f.lie_class.is_some())),
            clause("derived_finite_dimensional", Verdict::from_bool(f.derived_finite)),
            clause("l0_l0_p_nilpotent", Verdict::from(&f.l0_l0)),
            clause("module_witness_m", f.witness_module.verdict()),
        ];
        note_budget(&f.l0_l0, "(L0,L0)", &mut causes);
        note_witness(&f.witness_module, &mut causes);
        let condition = Verdict::all(clauses.iter().map(|c| c.verdict));
        let (oracle, detail) = match self.gamma_super() {
            Some(Err(e)) => {
                causes.push(e.to_string());
                (Verdict::Inconclusive, "super series unavailable".into())
            }
            Some(Ok(s)) => self.series_verdict(Some(s), "gamma_super", &mut causes),
            None => self.series_verdict(None, "gamma_super", &mut causes),
        };
        PropertyReport::new(Property::LieSuperNilpotent, clauses, condition, oracle, detail, causes)
    }

    pub fn property(&self, p: Property) -> PropertyReport {
        match p {
            Property::NonmatrixPi => self.nonmatrix(),
            Property::LieSolvable => self.solvable(),
            Property::LieNilpotent => self.nilpotent(),
            Property::LieSuperNilpotent => self.super_nilpotent(),
        }
    }
}

fn note_budget(p: &PNilpotence, what: &str, causes: &mut Vec<String>) {
    if let PNilpotence::BudgetExceeded { needed, cap } = p {
        causes.push(format!("p-nilpotence of {what} needs {needed} elements, enumeration cap {cap}"));
    }
}

fn note_witness(w: &WitnessSearch, causes: &mut Vec<String>) {
    if let WitnessSearch::Inconclusive { cause, .. } = w {
        causes.push(cause.clone());
    }
}

pub fn classify_nonmatrix(l: &LieSuperData, caps: Caps) -> PropertyReport {
    Analysis::new(l, caps).nonmatrix()
}

pub fn classify_solvable(l: &LieSuperData, caps: Caps) -> PropertyReport {
    Analysis::new(l, caps).solvable()
}

pub fn classify_nilpotent(l: &LieSuperData, caps: Caps) -> PropertyReport {
    Analysis::new(l, caps).nilpotent()
}

pub fn classify_super_nilpotent(l: &LieSuperData, caps: Caps) -> PropertyReport {
    Analysis::new(l, caps).super_nilpotent()
}

/// Dimensions of the series computed on the way.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SeriesTable {
    pub lie_lower_central: Vec<usize>,
    pub gamma: Option<SeriesSummary>,
    pub delta: Option<SeriesSummary>,
    pub gamma_super: Option<SeriesSummary>,
    pub commutator_ideal_dim: Option<usize>,
    pub commutator_ideal: Option<Nilpotency>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub name: Option<String>,
    pub p: u32,
    pub n0: usize,
    pub n1: usize,
    /// `p^{n0} · 2^{n1}`, whether or not it was built.
    pub envelope_dim: String,
    pub envelope_built: bool,
    pub properties: Vec<PropertyReport>,
    pub facts: StructuralFacts,
    pub series: SeriesTable,
    pub checks: Vec<CheckOutcome>,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn property(&self, p: Property) -> &PropertyReport {
        self.properties.iter().find(|r| r.property == p).expect("all four present")
    }

    /// Oracle-side verdicts in the fixed property order.
    pub fn quadruple(&self) -> [Verdict; 4] {
        Property::ALL.map(|p| self.property(p).oracle)
    }

    pub fn condition_quadruple(&self) -> [Verdict; 4] {
        Property::ALL.map(|p| self.property(p).condition)
    }

    pub fn disagreements(&self) -> Vec<Property> {
        self.properties
            .iter()
            .filter(|r| r.agreement == Agreement::Disagree)
            .map(|r| r.property)
            .collect()
    }

    pub fn is_inconclusive(&self) -> bool {
        self.properties.iter().any(|r| r.agreement == Agreement::Inconclusive)
            || self.checks.iter().any(|c| c.status == CheckStatus::Inconclusive)
    }

    pub fn failed_checks(&self) -> Vec<&CheckOutcome> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail).collect()
    }

    /// Everything agrees and every check passes or does not apply.
    pub fn all_agree(&self) -> bool {
        self.properties.iter().all(|r| r.agreement == Agreement::Agree) && self.failed_checks().is_empty()
    }
}

const FINITE_PI_NOTE: &str = "the PI clause holds automatically: a finite-dimensional algebra satisfies a \
standard identity; the chain of homogeneous restricted ideals required for PI enveloping algebras can be \
taken as N = M = 0 at finite dimension";

fn build_report(a: &Analysis<'_>, name: Option<String>, with_checks: bool) -> ClassificationReport {
    let l = a.lie;
    let properties: Vec<PropertyReport> = Property::ALL.iter().map(|&p| a.property(p)).collect();
    let series = SeriesTable {
        lie_lower_central: lower_central_series(l).dims(),
        gamma: a.gamma().map(SeriesResult::summary),
        delta: a.delta().map(SeriesResult::summary),
        gamma_super: a.gamma_super().and_then(|r| r.ok().map(SeriesResult::summary)),
        commutator_ideal_dim: a.commutator_ideal().map(|(s, _)| s.dim()),
        commutator_ideal: a.commutator_ideal().map(|(_, n)| n.clone()),
    };
    let checks = if with_checks {
        checks::run_all(a, &properties)
    } else {
        Vec::new()
    };
    let mut notes = vec![FINITE_PI_NOTE.to_string()];
    if let Err(e) = a.envelope() {
        notes.push(format!("oracle side skipped: {e}"));
    }
    ClassificationReport {
        name,
        p: l.p(),
        n0: l.n0(),
        n1: l.n1(),
        envelope_dim: (crate::config::element_count(l.p(), l.n0()) * crate::config::element_count(2, l.n1()))
            .to_string(),
        envelope_built: a.envelope().is_ok(),
        properties,
        facts: a.facts().clone(),
        series,
        checks,
        notes,
    }
}

/// The four verdict pairs, without the extra structural checks.
pub fn classify(l: &LieSuperData, name: Option<String>, caps: Caps) -> ClassificationReport {
    build_report(&Analysis::new(l, caps), name, false)
}

/// All four verdict pairs plus every structural check.
pub fn cross_validate(l: &LieSuperData, name: Option<String>, caps: Caps) -> ClassificationReport {
    build_report(&Analysis::new(l, caps), name, true)
}
