//! Structural checks run alongside the verdicts. Each one is an exact
//! statement about this particular algebra; a `Fail` is a bug somewhere.

use serde::{Deserialize, Serialize};

use super::{Analysis, Property, PropertyReport, Verdict, WitnessSearch};
use crate::linalg::{BilinearMap, Scalar, Subspace};
use crate::series::{
    check_mu_bound, commutator_ideal, double_commutator_ideal, nil_index_exact, nilpotency_index, two_sided_ideal,
    MuBound, NilIndex, Nilpotency, SeriesResult,
};
use crate::superlie::{embed_odd, restricted_ideal_generated, GradedSubspace, PMapClosure, PNilpotence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The hypothesis does not hold for this algebra.
    NotApplicable,
    /// Optional check that would exceed the enumeration cap.
    Skipped,
    /// A required input could not be computed.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

fn outcome(name: &str, status: CheckStatus, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome {
        name: name.to_string(),
        status,
        detail: detail.into(),
    }
}

fn pass_if(name: &str, ok: bool, detail: impl Into<String>) -> CheckOutcome {
    outcome(name, if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail)
}

pub(super) fn run_all(a: &Analysis<'_>, props: &[PropertyReport]) -> Vec<CheckOutcome> {
    let mut out = vec![
        verdict_implications(props),
        witness_squares(a),
        neumann_brackets(a),
        even_p_nilpotent_implies_nilpotent(a),
    ];
    let Ok(env) = a.envelope() else {
        let why = a.envelope().err().unwrap_or_default().to_string();
        for name in [
            "pbw_dimension",
            "augmentation_nilpotent_iff_even_p_nilpotent",
            "series_monotone",
            "derived_inside_lower_central",
            "super_class_even_derived_term",
            "double_commutator_ideal_nilpotent",
            "nil_equals_nilpotent",
            "mu_bound",
        ] {
            out.push(outcome(name, CheckStatus::Inconclusive, why.clone()));
        }
        return out;
    };
    let l = a.lie;
    let expected = crate::config::element_count(l.p(), l.n0()) * crate::config::element_count(2, l.n1());
    out.push(pass_if(
        "pbw_dimension",
        env.dim() as u128 == expected,
        format!("dim u(L) = {} = {}^{} · 2^{}", env.dim(), l.p(), l.n0(), l.n1()),
    ));
    out.push(augmentation_vs_even(a));
    out.push(series_monotone(a));
    out.push(derived_inside_lower_central(a));
    out.push(super_class_even(a));
    out.push(double_commutator(a));
    out.push(nil_vs_nilpotent(a));
    out.push(mu_bounds(a));
    out
}

/// Nilpotent ⇒ solvable and super-nilpotent ⇒ solvable on each side; a
/// solvable condition with a module witness gives the nonmatrix condition.
fn verdict_implications(props: &[PropertyReport]) -> CheckOutcome {
    let get = |p: Property| props.iter().find(|r| r.property == p).unwrap();
    let mut bad = Vec::new();
    for side in ["condition", "oracle"] {
        let v = |p: Property| {
            let r = get(p);
            if side == "condition" {
                r.condition
            } else {
                r.oracle
            }
        };
        let solv = v(Property::LieSolvable);
        for p in [Property::LieNilpotent, Property::LieSuperNilpotent] {
            if v(p) == Verdict::Yes && solv == Verdict::No {
                bad.push(format!("{side}: {p} without lie_solvable"));
            }
        }
    }
    let solv = get(Property::LieSolvable);
    let nonm = get(Property::NonmatrixPi);
    let module_clause = nonm.clauses.iter().find(|c| c.name == "module_witness_m").map(|c| c.verdict);
    if solv.condition == Verdict::Yes && module_clause == Some(Verdict::Yes) && nonm.condition == Verdict::No {
        bad.push("condition: solvable with module witness but not nonmatrix".into());
    }
    if solv.condition == Verdict::Yes && nonm.condition == Verdict::No {
        bad.push("condition: subspace witness did not upgrade to a module witness".into());
    }
    pass_if("verdict_implications", bad.is_empty(), bad.join("; "))
}

fn element_p_nilpotent(closure: &PMapClosure<'_>, x: &[Scalar]) -> bool {
    let mut seen = std::collections::HashSet::new();
    let mut cur = x.to_vec();
    while cur.iter().any(|&c| c != 0) {
        if !seen.insert(cur.clone()) {
            return false;
        }
        cur = closure.power(&cur);
    }
    true
}

/// Every `y` in the module witness has `(y, y)` p-nilpotent.
fn witness_squares(a: &Analysis<'_>) -> CheckOutcome {
    let name = "witness_squares_p_nilpotent";
    let l = a.lie;
    let w = match &a.facts().witness_module {
        WitnessSearch::Found { witness, .. } => witness,
        _ => return outcome(name, CheckStatus::NotApplicable, "no module witness"),
    };
    let m = Subspace::span(l.field(), l.n1(), &w.basis).expect("odd coordinates");
    let Ok(elements) = m.enumerate(a.caps.enum_cap) else {
        return outcome(name, CheckStatus::Skipped, "witness too large to enumerate");
    };
    let closure = PMapClosure::new(l);
    let mut count = 0u64;
    for y in elements {
        count += 1;
        let y = embed_odd(l, &y);
        if !element_p_nilpotent(&closure, &l.bracket(&y, &y)) {
            return outcome(name, CheckStatus::Fail, format!("(y,y) not p-nilpotent for y = {}", l.format_element(&y)));
        }
    }
    outcome(name, CheckStatus::Pass, format!("{count} element{} of M checked", if count == 1 { "" } else { "s" }))
}

fn neumann_brackets(a: &Analysis<'_>) -> CheckOutcome {
    let name = "neumann_bound";
    let l = a.lie;
    let f = l.field();
    let n = l.dim();
    let full: Vec<Vec<Scalar>> = (0..n).map(|i| l.basis_vector(i)).collect();
    let odd: Vec<Vec<Scalar>> = (l.n0()..n).map(|i| l.basis_vector(i)).collect();
    let mut details = Vec::new();
    for (label, basis) in [("(L, L)", &full), ("(L1, L1)", &odd)] {
        if basis.is_empty() {
            continue;
        }
        let map = BilinearMap::from_fn(f, basis, basis, n, |x, y| l.bracket(x, y)).expect("consistent");
        match map.neumann_check(a.caps.enum_cap) {
            Ok(r) if r.holds => details.push(format!(
                "{label}: image {} ≤ {}·{}",
                r.image_dim, r.left_codim, r.right_codim
            )),
            Ok(r) => {
                return outcome(
                    name,
                    CheckStatus::Fail,
                    format!("{label}: image {} > {}·{}", r.image_dim, r.left_codim, r.right_codim),
                )
            }
            Err(_) => return outcome(name, CheckStatus::Skipped, format!("{label}: enumeration cap")),
        }
    }
    outcome(name, CheckStatus::Pass, details.join("; "))
}

fn even_p_nilpotent_implies_nilpotent(a: &Analysis<'_>) -> CheckOutcome {
    let name = "even_p_nilpotent_implies_nilpotent";
    let f = a.facts();
    match &f.l0 {
        PNilpotence::Yes { .. } => pass_if(
            name,
            f.lie_class.is_some(),
            match f.lie_class {
                Some(c) => format!("L0 p-nilpotent; class of L = {c}"),
                None => "L0 p-nilpotent but L is not nilpotent".to_string(),
            },
        ),
        PNilpotence::No { .. } => outcome(name, CheckStatus::NotApplicable, "L0 is not p-nilpotent"),
        PNilpotence::BudgetExceeded { .. } => outcome(name, CheckStatus::Inconclusive, "L0 too large to enumerate"),
    }
}

fn augmentation_vs_even(a: &Analysis<'_>) -> CheckOutcome {
    let name = "augmentation_nilpotent_iff_even_p_nilpotent";
    let env = a.envelope().unwrap();
    let omega = env.augmentation_ideal();
    let nil = nilpotency_index(&env.algebra, &omega, None);
    let even = match &a.facts().l0 {
        PNilpotence::Yes { .. } => true,
        PNilpotence::No { .. } => false,
        PNilpotence::BudgetExceeded { .. } => {
            return outcome(name, CheckStatus::Inconclusive, "L0 too large to enumerate")
        }
    };
    match nil {
        Nilpotency::Undetermined { .. } => outcome(name, CheckStatus::Inconclusive, "powers of ω undecided"),
        n => pass_if(
            name,
            n.index().is_some() == even,
            format!("L0 p-nilpotent: {even}; ω: {n}"),
        ),
    }
}

fn monotone(s: &SeriesResult) -> bool {
    s.terms.windows(2).all(|w| w[1].is_subset(&w[0]).unwrap_or(false))
}

fn series_monotone(a: &Analysis<'_>) -> CheckOutcome {
    let mut all = vec![a.gamma().unwrap(), a.delta().unwrap()];
    if let Some(Ok(s)) = a.gamma_super() {
        all.push(s);
    }
    let bad: Vec<String> = all.iter().filter(|s| !monotone(s)).map(|s| s.kind.to_string()).collect();
    pass_if("series_monotone", bad.is_empty(), if bad.is_empty() { String::new() } else { format!("non-monotone: {}", bad.join(", ")) })
}

/// `δ_n ⊆ γ_{2^n}`.
fn derived_inside_lower_central(a: &Analysis<'_>) -> CheckOutcome {
    let name = "derived_inside_lower_central";
    let g = a.gamma().unwrap();
    let d = a.delta().unwrap();
    for (n, dn) in d.terms.iter().enumerate() {
        let Some(k) = 1usize.checked_shl(n as u32) else { break };
        // γ_{2^n} sits at position 2^n − 1.
        let Some(gk) = g.term(k - 1) else {
            return outcome(name, CheckStatus::Inconclusive, "gamma series truncated");
        };
        if !dn.is_subset(gk).unwrap_or(false) {
            return outcome(name, CheckStatus::Fail, format!("δ_{n} ⊄ γ_{k}"));
        }
    }
    outcome(name, CheckStatus::Pass, format!("{} derived terms checked", d.terms.len()))
}

/// Super class `c` ⇒ `δ_c` lies in the even part.
fn super_class_even(a: &Analysis<'_>) -> CheckOutcome {
    let name = "super_class_even_derived_term";
    let Some(Ok(s)) = a.gamma_super() else {
        return outcome(name, CheckStatus::Inconclusive, "super series unavailable");
    };
    let Some(c) = s.class_or_length else {
        return outcome(name, CheckStatus::NotApplicable, "not Lie super-nilpotent");
    };
    let env = a.envelope().unwrap();
    let even = env.algebra.even_part().expect("u(L) is graded");
    let d = a.delta().unwrap();
    match d.term(c) {
        Some(dc) => pass_if(
            name,
            dc.is_subset(&even).unwrap_or(false),
            format!("super class {c}; dim δ_{c} = {}", dc.dim()),
        ),
        None => outcome(name, CheckStatus::Inconclusive, "delta series truncated"),
    }
}

fn double_commutator(a: &Analysis<'_>) -> CheckOutcome {
    let name = "double_commutator_ideal_nilpotent";
    let d = a.delta().unwrap();
    match d.class_or_length {
        Some(t) if t >= 2 => {
            let env = a.envelope().unwrap();
            let ideal = double_commutator_ideal(&env.algebra, d);
            match nilpotency_index(&env.algebra, &ideal, None) {
                Nilpotency::Index { c } => outcome(
                    name,
                    CheckStatus::Pass,
                    format!("derived length {t}; ideal dim {}, nilpotency index {c}", ideal.dim()),
                ),
                other => outcome(name, CheckStatus::Fail, format!("derived length {t}; ideal {other}")),
            }
        }
        Some(t) => outcome(name, CheckStatus::NotApplicable, format!("derived length {t} < 2")),
        None => outcome(name, CheckStatus::NotApplicable, "not Lie solvable"),
    }
}

/// Nil (by enumeration) agrees with nilpotent for `[R,R]R`.
fn nil_vs_nilpotent(a: &Analysis<'_>) -> CheckOutcome {
    let name = "nil_equals_nilpotent";
    let env = a.envelope().unwrap();
    let (ci, nil) = a.commutator_ideal().unwrap();
    let Ok(exact) = nil_index_exact(&env.algebra, ci, a.caps.enum_cap) else {
        return outcome(name, CheckStatus::Skipped, format!("[R,R]R has dim {}", ci.dim()));
    };
    match (exact, nil) {
        (NilIndex::Index { e, .. }, Nilpotency::Index { c }) => pass_if(
            name,
            (e as usize) <= c + 1,
            format!("nil index {e} ≤ nilpotency index {c} + 1"),
        ),
        (NilIndex::NotNil { .. }, Nilpotency::NotNilpotent { .. }) => {
            outcome(name, CheckStatus::Pass, "neither nil nor nilpotent")
        }
        (e, n) => outcome(name, CheckStatus::Fail, format!("nil check {} but {n}", if matches!(e, NilIndex::NotNil { .. }) { "finds a non-nil element" } else { "finds every element nil" })),
    }
}

fn mu_bounds(a: &Analysis<'_>) -> CheckOutcome {
    let name = "mu_bound";
    let env = a.envelope().unwrap();
    let alg = &env.algebra;
    let l = a.lie;
    let gamma = a.gamma().unwrap();
    let mut ideals: Vec<(&str, Subspace)> = vec![
        ("0", Subspace::zero(alg.field(), alg.dim())),
        ("omega", env.augmentation_ideal()),
        ("commutator", a.commutator_ideal().map(|(s, _)| s.clone()).unwrap_or_else(|| commutator_ideal(alg))),
    ];
    let full = GradedSubspace::full(l);
    let derived = full.bracket(l, &full);
    let k = restricted_ideal_generated(l, &derived, a.caps.enum_cap);
    let ku = two_sided_ideal(alg, &env.embed_subspace(&k.ideal.to_full(l)));
    ideals.push(("restricted_derived", ku));
    let mut details = Vec::new();
    let mut checked = 0;
    for (label, ideal) in ideals {
        match check_mu_bound(alg, &ideal, Some(gamma)) {
            Ok(MuBound::Checked(r)) => {
                checked += 1;
                details.push(format!(
                    "{label}: c={} d={} μ={} class={}",
                    r.c,
                    r.d,
                    r.mu,
                    r.actual_class.map_or("?".to_string(), |c| c.to_string())
                ));
                if !r.holds {
                    return outcome(name, CheckStatus::Fail, details.join("; "));
                }
                if r.c == 0 && r.mu != r.d + 1 {
                    return outcome(name, CheckStatus::Fail, "μ(1,d) ≠ d+1 for I = 0");
                }
            }
            Ok(MuBound::NotApplicable { reason }) => details.push(format!("{label}: n/a ({reason})")),
            Err(e) => details.push(format!("{label}: {e}")),
        }
    }
    let status = if checked > 0 { CheckStatus::Pass } else { CheckStatus::NotApplicable };
    outcome(name, status, details.join("; "))
}
