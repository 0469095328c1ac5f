//! Graded subspaces, ideals, series and p-nilpotence inside `L`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{LieSuperData, PMapClosure};
use crate::config::check_enumeration;
use crate::error::{Error, Result};
use crate::linalg::{is_zero, Scalar, SpanBuilder, Subspace};

/// `V = V0 ⊕ V1` with `V0 ⊆ GF(p)^{n0}` and `V1 ⊆ GF(p)^{n1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSubspace {
    pub even: Subspace,
    pub odd: Subspace,
}

impl GradedSubspace {
    pub fn zero(l: &LieSuperData) -> Self {
        GradedSubspace {
            even: Subspace::zero(l.field(), l.n0()),
            odd: Subspace::zero(l.field(), l.n1()),
        }
    }

    pub fn full(l: &LieSuperData) -> Self {
        GradedSubspace {
            even: Subspace::full(l.field(), l.n0()),
            odd: Subspace::full(l.field(), l.n1()),
        }
    }

    pub fn even_only(l: &LieSuperData, even: Subspace) -> Self {
        GradedSubspace {
            even,
            odd: Subspace::zero(l.field(), l.n1()),
        }
    }

    pub fn odd_only(l: &LieSuperData, odd: Subspace) -> Self {
        GradedSubspace {
            even: Subspace::zero(l.field(), l.n0()),
            odd,
        }
    }

    /// Span of the homogeneous components of `vectors` (full coordinates).
    pub fn from_vectors<V: AsRef<[Scalar]>>(l: &LieSuperData, vectors: &[V]) -> Self {
        let n0 = l.n0();
        let mut even = SpanBuilder::new(l.field(), n0);
        let mut odd = SpanBuilder::new(l.field(), l.n1());
        for v in vectors {
            let v = v.as_ref();
            even.insert(&v[..n0]);
            odd.insert(&v[n0..]);
        }
        GradedSubspace {
            even: even.finish(),
            odd: odd.finish(),
        }
    }

    pub fn dim(&self) -> usize {
        self.even.dim() + self.odd.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Homogeneous basis in full coordinates: even rows, then odd rows.
    pub fn basis(&self, l: &LieSuperData) -> Vec<Vec<Scalar>> {
        let mut out: Vec<Vec<Scalar>> = self.even.basis().iter().map(|r| embed_even(l, r)).collect();
        out.extend(self.odd.basis().iter().map(|r| embed_odd(l, r)));
        out
    }

    /// The same subspace inside GF(p)^{n0+n1}.
    pub fn to_full(&self, l: &LieSuperData) -> Subspace {
        Subspace::span(l.field(), l.dim(), &self.basis(l)).expect("consistent dims")
    }

    pub fn contains(&self, l: &LieSuperData, v: &[Scalar]) -> bool {
        let n0 = l.n0();
        self.even.contains(&v[..n0]) && self.odd.contains(&v[n0..])
    }

    pub fn is_subset(&self, other: &GradedSubspace) -> bool {
        self.even.is_subset(&other.even).unwrap_or(false) && self.odd.is_subset(&other.odd).unwrap_or(false)
    }

    pub fn sum(&self, other: &GradedSubspace) -> Result<Self> {
        Ok(GradedSubspace {
            even: self.even.sum(&other.even)?,
            odd: self.odd.sum(&other.odd)?,
        })
    }

    /// `(A, B)`: span of brackets of homogeneous basis elements.
    pub fn bracket(&self, l: &LieSuperData, other: &GradedSubspace) -> Self {
        let a = self.basis(l);
        let b = other.basis(l);
        let mut prods = Vec::with_capacity(a.len() * b.len());
        for x in &a {
            for y in &b {
                let v = l.bracket(x, y);
                if !is_zero(&v) {
                    prods.push(v);
                }
            }
        }
        GradedSubspace::from_vectors(l, &prods)
    }
}

pub fn embed_even(l: &LieSuperData, v: &[Scalar]) -> Vec<Scalar> {
    let mut out = v.to_vec();
    out.resize(l.dim(), 0);
    out
}

pub fn embed_odd(l: &LieSuperData, v: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![0; l.n0()];
    out.extend_from_slice(v);
    out
}

/// A descending chain of graded subspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSeries {
    pub terms: Vec<GradedSubspace>,
    /// Reached zero.
    pub terminated: bool,
    /// Nilpotency class (lower central) or derived length, when terminated.
    pub class_or_length: Option<usize>,
}

impl LieSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim()).collect()
    }
}

fn run_series<F>(l: &LieSuperData, mut step: F, offset: usize) -> LieSeries
where
    F: FnMut(&GradedSubspace) -> GradedSubspace,
{
    let mut terms = vec![GradedSubspace::full(l)];
    loop {
        let last = terms.last().unwrap();
        if last.is_zero() {
            let k = terms.len() - 1 + offset;
            return LieSeries {
                terms,
                terminated: true,
                class_or_length: Some(k),
            };
        }
        let next = step(last);
        if &next == last {
            return LieSeries {
                terms,
                terminated: false,
                class_or_length: None,
            };
        }
        terms.push(next);
    }
}

/// `γ_1 = L`, `γ_{n+1} = (γ_n, L)`; class is the least `c` with `γ_{c+1} = 0`.
pub fn lower_central_series(l: &LieSuperData) -> LieSeries {
    let full = GradedSubspace::full(l);
    // terms[0] = γ_1, so terms.len()-1 = c when terms[c] = γ_{c+1} = 0.
    run_series(l, |g| g.bracket(l, &full), 0)
}

/// `δ_0 = L`, `δ_{n+1} = (δ_n, δ_n)`; length is the least `d` with `δ_d = 0`.
pub fn derived_series(l: &LieSuperData) -> LieSeries {
    run_series(l, |d| d.bracket(l, d), 0)
}

/// Graded center: elements `z` with `(z, b) = 0` for every basis `b`.
pub fn center(l: &LieSuperData) -> GradedSubspace {
    let f = l.field();
    let n = l.dim();
    let n0 = l.n0();
    let block = |range: std::ops::Range<usize>| -> Subspace {
        let images: Vec<Vec<Scalar>> = range
            .clone()
            .map(|i| {
                let bi = l.basis_vector(i);
                (0..n).flat_map(|j| l.bracket(&bi, &l.basis_vector(j))).collect()
            })
            .collect();
        crate::linalg::kernel_of_images(f, n * n, &images).expect("consistent dims")
    };
    GradedSubspace {
        even: block(0..n0),
        odd: block(n0..n),
    }
}

/// How closure of an ideal's even part under the p-map was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureCertificate {
    /// Every element of the even part was enumerated and its p-power checked.
    ElementLevel,
    /// Only the iteration's spanning set was closed; enumeration exceeded the
    /// cap.
    SpanningSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedIdeal {
    pub ideal: GradedSubspace,
    pub closure: ClosureCertificate,
}

/// Smallest graded subspace containing `x` that is closed under brackets
/// with every basis element and under the p-map on its even part.
pub fn restricted_ideal_generated(l: &LieSuperData, x: &GradedSubspace, enum_cap: u64) -> RestrictedIdeal {
    let n = l.dim();
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| l.basis_vector(i)).collect();
    let mut current = x.clone();
    loop {
        let mut gens = current.basis(l);
        for w in current.basis(l) {
            for b in &basis {
                gens.push(l.bracket(&w, b));
            }
        }
        for w in current.even.basis() {
            gens.push(l.pmap_extend(&embed_even(l, w)));
        }
        let next = GradedSubspace::from_vectors(l, &gens);
        if next == current {
            break;
        }
        current = next;
    }
    let closure = match current.even.enumerate(enum_cap) {
        Ok(mut elements) => {
            let closed = elements.all(|w| {
                let img = l.pmap_extend(&embed_even(l, &w));
                current.contains(l, &img)
            });
            debug_assert!(closed, "bracket-closed subspace must be p-closed elementwise");
            ClosureCertificate::ElementLevel
        }
        Err(_) => ClosureCertificate::SpanningSet,
    };
    RestrictedIdeal {
        ideal: current,
        closure,
    }
}

/// Bracket-closed against all of `L`, with the even spanning set closed
/// under the p-map.
pub fn is_restricted_ideal(l: &LieSuperData, i: &GradedSubspace) -> bool {
    let n = l.dim();
    for w in i.basis(l) {
        for j in 0..n {
            if !i.contains(l, &l.bracket(&w, &l.basis_vector(j))) {
                return false;
            }
        }
    }
    i.even
        .basis()
        .iter()
        .all(|w| i.contains(l, &l.pmap_extend(&embed_even(l, w))))
}

/// `L / I` with the induced bracket and p-map on section representatives.
pub fn quotient_algebra(l: &LieSuperData, i: &GradedSubspace) -> Result<LieSuperData> {
    if !is_restricted_ideal(l, i) {
        return Err(Error::NotAnIdeal("subspace is not a restricted ideal of L".into()));
    }
    let f = l.field();
    let n0 = l.n0();
    let q0 = Subspace::full(f, n0).quotient_coords(&i.even)?;
    let q1 = Subspace::full(f, l.n1()).quotient_coords(&i.odd)?;
    let m0 = q0.target_dim();
    let m1 = q1.target_dim();
    let reps: Vec<Vec<Scalar>> = q0
        .section_basis()
        .iter()
        .map(|r| embed_even(l, r))
        .chain(q1.section_basis().iter().map(|r| embed_odd(l, r)))
        .collect();
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let mut out = q0.apply(&v[..n0]);
        out.extend(q1.apply(&v[n0..]));
        out
    };
    let m = m0 + m1;
    let mut brackets = Vec::new();
    for a in 0..m {
        for b in a..m {
            let v = project(&l.bracket(&reps[a], &reps[b]));
            if !is_zero(&v) {
                brackets.push(((a, b), v));
            }
        }
    }
    let pmap: Vec<Vec<Scalar>> = (0..m0).map(|a| project(&l.pmap_extend(&reps[a]))).collect();
    let name = |r: &[Scalar]| format!("[{}]", l.format_element(r));
    LieSuperData::new(
        f,
        reps[..m0].iter().map(|r| name(r)).collect(),
        reps[m0..].iter().map(|r| name(r)).collect(),
        brackets,
        pmap,
    )
}

/// Result of an exhaustive p-nilpotence check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PNilpotence {
    /// Every element satisfies `x^{[p]^k} = 0`; `k` is the least such bound.
    Yes { index: usize },
    /// This element's p-power orbit never reaches zero.
    No { witness: Vec<Scalar> },
    BudgetExceeded { needed: String, cap: u64 },
}

impl PNilpotence {
    pub fn is_yes(&self) -> bool {
        matches!(self, PNilpotence::Yes { .. })
    }
}

/// Decides whether the subspace `w ⊆ L0` (coordinates in GF(p)^{n0}) is
/// p-nilpotent by visiting every element.
pub fn is_p_nilpotent_subspace(l: &LieSuperData, w: &Subspace, enum_cap: u64) -> PNilpotence {
    if let Err(Error::EnumerationBudget { needed, cap }) = check_enumeration(l.p(), w.dim(), enum_cap) {
        return PNilpotence::BudgetExceeded {
            needed: needed.to_string(),
            cap,
        };
    }
    let closure = PMapClosure::new(l);
    let mut max_k = 0;
    for x in w.enumerate(enum_cap).expect("checked above") {
        let mut cur = embed_even(l, &x);
        let mut seen = HashSet::new();
        let mut k = 0;
        while !is_zero(&cur) {
            if !seen.insert(cur.clone()) {
                return PNilpotence::No {
                    witness: embed_even(l, &x),
                };
            }
            cur = closure.power(&cur);
            k += 1;
        }
        max_k = max_k.max(k);
    }
    PNilpotence::Yes { index: max_k }
}

/// `W ← (W, L0)` from `W = L`; returns the number of steps to reach zero.
pub fn is_nilpotent_l0_module(l: &LieSuperData) -> Option<usize> {
    let l0 = GradedSubspace::even_only(l, Subspace::full(l.field(), l.n0()));
    let mut w = GradedSubspace::full(l);
    let mut steps = 0;
    while !w.is_zero() {
        let next = w.bracket(l, &l0);
        if next == w {
            return None;
        }
        w = next;
        steps += 1;
    }
    Some(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlie::build::from_names;

    fn heisenberg(p: u32) -> LieSuperData {
        from_names(p, &["e1", "e2", "e3"], &[], &[("e1", "e2", &[("e3", 1)])], &[]).unwrap()
    }

    fn sl2(p: u32) -> LieSuperData {
        from_names(
            p,
            &["e", "h", "f"],
            &[],
            &[
                ("e", "h", &[("e", -2)]),
                ("e", "f", &[("h", 1)]),
                ("h", "f", &[("f", -2)]),
            ],
            &[("h", &[("h", 1)])],
        )
        .unwrap()
    }

    #[test]
    fn series_classes() {
        let ab = from_names(3, &["x", "y"], &[], &[], &[]).unwrap();
        let s = lower_central_series(&ab);
        assert_eq!(s.class_or_length, Some(1));
        assert_eq!(s.dims(), vec![2, 0]);

        let h = lower_central_series(&heisenberg(5));
        assert_eq!(h.class_or_length, Some(2));
        assert_eq!(h.dims(), vec![3, 1, 0]);

        let s = lower_central_series(&sl2(5));
        assert!(!s.terminated);
        assert_eq!(s.dims(), vec![3]);
        assert!(!derived_series(&sl2(5)).terminated);
        assert_eq!(derived_series(&heisenberg(3)).class_or_length, Some(2));
    }

    #[test]
    fn heisenberg_center_and_quotient() {
        let h = heisenberg(3);
        let z = center(&h);
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&h, &[0, 0, 1]));
        let q = quotient_algebra(&h, &z).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.stored_brackets().is_empty());
        assert!(crate::superlie::verify_axioms(&q, 6561).passed());
        let copy = quotient_algebra(&h, &GradedSubspace::zero(&h)).unwrap();
        assert_eq!(copy.dim(), 3);
        assert_eq!(copy.stored_brackets().len(), 1);
    }

    #[test]
    fn quotient_rejects_non_ideals() {
        let h = heisenberg(3);
        let e1 = GradedSubspace::even_only(&h, Subspace::span(h.field(), 3, &[vec![1, 0, 0]]).unwrap());
        assert!(matches!(quotient_algebra(&h, &e1), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn restricted_ideal_of_e1() {
        let h = heisenberg(3);
        let x = GradedSubspace::even_only(&h, Subspace::span(h.field(), 3, &[vec![1, 0, 0]]).unwrap());
        let r = restricted_ideal_generated(&h, &x, 6561);
        let expected = Subspace::span(h.field(), 3, &[vec![1, 0, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(r.ideal.even, expected);
        assert_eq!(r.closure, ClosureCertificate::ElementLevel);
        assert_eq!(restricted_ideal_generated(&h, &GradedSubspace::zero(&h), 10).ideal, GradedSubspace::zero(&h));
        assert_eq!(restricted_ideal_generated(&h, &center(&h), 10).ideal, center(&h));
    }

    #[test]
    fn p_nilpotence() {
        let h = heisenberg(5);
        let f = h.field();
        assert_eq!(
            is_p_nilpotent_subspace(&h, &Subspace::zero(f, 3), 6561),
            PNilpotence::Yes { index: 0 }
        );
        assert_eq!(
            is_p_nilpotent_subspace(&h, &Subspace::full(f, 3), 6561),
            PNilpotence::Yes { index: 1 }
        );
        let t = from_names(5, &["h"], &[], &[], &[("h", &[("h", 1)])]).unwrap();
        assert_eq!(
            is_p_nilpotent_subspace(&t, &Subspace::full(t.field(), 1), 6561),
            PNilpotence::No { witness: vec![1] }
        );
        assert!(matches!(
            is_p_nilpotent_subspace(&h, &Subspace::full(f, 3), 100),
            PNilpotence::BudgetExceeded { .. }
        ));
    }

    #[test]
    fn l0_module_nilpotence() {
        assert_eq!(is_nilpotent_l0_module(&from_names(3, &["x"], &["y"], &[], &[]).unwrap()), Some(1));
        assert_eq!(is_nilpotent_l0_module(&heisenberg(3)), Some(2));
        assert_eq!(is_nilpotent_l0_module(&sl2(5)), None);
    }
}
