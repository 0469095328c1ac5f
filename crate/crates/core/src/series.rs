//! Lie and associative series on a finite-dimensional associative algebra.
//!
//! Every series term is spanned from products or brackets of basis
//! representatives (bilinearity), and a series stops as soon as it reaches
//! zero or two consecutive terms coincide. In finite dimension a weakly
//! decreasing chain that repeats once is constant forever, so stabilization
//! is a proof of non-termination, not a heuristic.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{is_zero, Scalar, SpanBuilder, Subspace};
use crate::pbw::AssocAlgebra;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    /// `γ_1 = A`, `γ_{n+1} = [γ_n, A]`.
    Gamma,
    /// `δ_0 = A`, `δ_{n+1} = [δ_n, δ_n]`.
    Delta,
    /// `γ^s_1 = A`, `γ^s_{n+1} = (γ^s_n, A)` with the super-commutator.
    GammaSuper,
    /// `S, S², S³, …`.
    AssocPower,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::Gamma => "gamma",
            SeriesKind::Delta => "delta",
            SeriesKind::GammaSuper => "super",
            SeriesKind::AssocPower => "power",
        })
    }
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma" => Ok(SeriesKind::Gamma),
            "delta" => Ok(SeriesKind::Delta),
            "super" | "gamma_super" => Ok(SeriesKind::GammaSuper),
            "power" | "assoc_power" => Ok(SeriesKind::AssocPower),
            other => Err(Error::Parse(format!("unknown series kind `{other}`"))),
        }
    }
}

/// A computed series. `terms[k]` is `γ_{k+1}`, `δ_k`, `γ^s_{k+1}` or
/// `S^{k+1}` depending on the kind, so the index of the first zero term is
/// the class (nilpotency index, derived length).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesResult {
    pub kind: SeriesKind,
    pub dims: Vec<usize>,
    /// The last term is zero.
    pub terminated: bool,
    /// The last two terms coincide and are nonzero.
    pub stabilized: bool,
    pub class_or_length: Option<usize>,
    #[serde(skip)]
    pub terms: Vec<Subspace>,
}

/// The serializable part of a [`SeriesResult`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesSummary {
    pub kind: SeriesKind,
    pub dims: Vec<usize>,
    pub terminated: bool,
    pub stabilized: bool,
    pub class_or_length: Option<usize>,
}

impl SeriesResult {
    pub fn summary(&self) -> SeriesSummary {
        SeriesSummary {
            kind: self.kind,
            dims: self.dims.clone(),
            terminated: self.terminated,
            stabilized: self.stabilized,
            class_or_length: self.class_or_length,
        }
    }

    fn from_terms(kind: SeriesKind, terms: Vec<Subspace>) -> Self {
        let terminated = terms.last().is_some_and(|t| t.is_zero());
        let n = terms.len();
        let stabilized = !terminated && n >= 2 && terms[n - 1] == terms[n - 2];
        SeriesResult {
            kind,
            dims: terms.iter().map(|t| t.dim()).collect(),
            terminated,
            stabilized,
            class_or_length: if terminated { Some(n - 1) } else { None },
            terms,
        }
    }

    /// Neither zero nor stable: the length limit cut the computation short.
    pub fn truncated(&self) -> bool {
        !self.terminated && !self.stabilized
    }

    /// The term at position `k`, extending a finished series by its final
    /// value (zero or the stable term).
    pub fn term(&self, k: usize) -> Option<&Subspace> {
        if k < self.terms.len() {
            self.terms.get(k)
        } else if self.truncated() {
            None
        } else {
            self.terms.last()
        }
    }
}

/// Default length limit: a strictly decreasing chain in dimension `D` has at
/// most `D + 1` terms, plus one repeat.
pub fn default_max_terms(a: &AssocAlgebra) -> usize {
    a.dim() + 2
}

const CHUNK: usize = 8;

/// Spans the vectors produced by `job(0..jobs)`, evaluated in parallel
/// chunks, stopping once the span reaches `limit` dimensions.
fn parallel_span<F>(ambient: usize, field: crate::linalg::Fp, jobs: usize, limit: usize, job: F) -> Subspace
where
    F: Fn(usize) -> Vec<Vec<Scalar>> + Sync,
{
    let mut b = SpanBuilder::new(field, ambient);
    if limit == 0 {
        return b.finish();
    }
    let threads = rayon::current_num_threads().max(1);
    let mut start = 0;
    while start < jobs {
        let end = (start + CHUNK * threads).min(jobs);
        let batches: Vec<Vec<Vec<Scalar>>> = (start..end).into_par_iter().map(&job).collect();
        for v in batches.iter().flatten() {
            if !is_zero(v) {
                b.insert(v);
                if b.dim() >= limit {
                    return b.finish();
                }
            }
        }
        start = end;
    }
    b.finish()
}

fn run(kind: SeriesKind, first: Subspace, max_terms: usize, mut step: impl FnMut(&Subspace) -> Subspace) -> SeriesResult {
    let mut terms = vec![first];
    while terms.len() < max_terms.max(1) {
        let last = terms.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = step(last);
        let stable = &next == last;
        terms.push(next);
        if stable {
            break;
        }
    }
    SeriesResult::from_terms(kind, terms)
}

/// `[S, A]` = span of `[v, b_j]`; `limit` is a known upper bound on its
/// dimension (used to stop early).
pub fn bracket_with_algebra(a: &AssocAlgebra, s: &Subspace, limit: usize) -> Subspace {
    let d = a.dim();
    let basis = s.basis();
    parallel_span(d, a.field(), basis.len(), limit, |i| {
        (0..d).map(|j| a.commutator_with_basis(&basis[i], j)).collect()
    })
}

/// `[S, T]` for arbitrary subspaces.
pub fn bracket_subspaces(a: &AssocAlgebra, s: &Subspace, t: &Subspace) -> Subspace {
    let sb = s.basis();
    let tb = t.basis();
    parallel_span(a.dim(), a.field(), sb.len(), a.dim(), |i| {
        tb.iter().map(|v| a.commutator(&sb[i], v)).collect()
    })
}

/// `[S, S]`, stopping once the span reaches `dim S`.
fn self_bracket(a: &AssocAlgebra, s: &Subspace) -> Subspace {
    let f = a.field();
    let d = a.dim();
    let basis = s.basis();
    let k = basis.len();
    parallel_span(d, f, k, k, |i| {
        if i + 1 >= k {
            return Vec::new();
        }
        // [u, v] = Σ_j v_j [u, b_j]
        let cols: Vec<Option<Vec<Scalar>>> = (0..d)
            .map(|j| {
                if basis[i + 1..].iter().any(|v| v[j] != 0) {
                    Some(a.commutator_with_basis(&basis[i], j))
                } else {
                    None
                }
            })
            .collect();
        basis[i + 1..]
            .iter()
            .map(|v| {
                let mut out = vec![0; d];
                for (j, &c) in v.iter().enumerate() {
                    if c != 0 {
                        f.axpy(&mut out, c, cols[j].as_ref().unwrap());
                    }
                }
                out
            })
            .collect()
    })
}

pub fn gamma_series(a: &AssocAlgebra) -> SeriesResult {
    gamma_series_bounded(a, default_max_terms(a))
}

pub fn gamma_series_bounded(a: &AssocAlgebra, max_terms: usize) -> SeriesResult {
    let full = Subspace::full(a.field(), a.dim());
    run(SeriesKind::Gamma, full, max_terms, |s| bracket_with_algebra(a, s, s.dim()))
}

pub fn delta_series(a: &AssocAlgebra) -> SeriesResult {
    delta_series_bounded(a, default_max_terms(a))
}

pub fn delta_series_bounded(a: &AssocAlgebra, max_terms: usize) -> SeriesResult {
    let full = Subspace::full(a.field(), a.dim());
    run(SeriesKind::Delta, full, max_terms, |s| self_bracket(a, s))
}

/// A subspace given by its even and odd parts.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Graded {
    even: Subspace,
    odd: Subspace,
}

impl Graded {
    fn total(&self) -> Subspace {
        self.even.sum(&self.odd).expect("same ambient")
    }
}

/// `(S, A)` on graded spanning sets.
fn super_bracket_with_algebra(a: &AssocAlgebra, s: &Graded, parity: &[u8]) -> Graded {
    let f = a.field();
    let d = a.dim();
    let reps: Vec<(&Vec<Scalar>, u8)> = s
        .even
        .basis()
        .iter()
        .map(|v| (v, 0))
        .chain(s.odd.basis().iter().map(|v| (v, 1)))
        .collect();
    let limit = s.even.dim() + s.odd.dim();
    let mut even = SpanBuilder::new(f, d);
    let mut odd = SpanBuilder::new(f, d);
    let threads = rayon::current_num_threads().max(1);
    let mut start = 0;
    'outer: while start < reps.len() {
        let end = (start + CHUNK * threads).min(reps.len());
        let batches: Vec<Vec<(Vec<Scalar>, u8)>> = (start..end)
            .into_par_iter()
            .map(|i| {
                let (v, pv) = reps[i];
                (0..d)
                    .map(|j| {
                        let right = a.mul_by_basis_right(v, j);
                        let left = a.mul_by_basis_left(j, v);
                        let w = if pv == 1 && parity[j] == 1 {
                            f.add_vec(&right, &left)
                        } else {
                            f.sub_vec(&right, &left)
                        };
                        (w, pv ^ parity[j])
                    })
                    .collect()
            })
            .collect();
        for (w, par) in batches.iter().flatten() {
            if is_zero(w) {
                continue;
            }
            if *par == 0 {
                even.insert(w);
            } else {
                odd.insert(w);
            }
            if even.dim() + odd.dim() >= limit {
                break 'outer;
            }
        }
        start = end;
    }
    Graded {
        even: even.finish(),
        odd: odd.finish(),
    }
}

/// Fails with [`Error::NoGrading`] when the algebra carries no parity.
pub fn gamma_super_series(a: &AssocAlgebra) -> Result<SeriesResult> {
    gamma_super_series_bounded(a, default_max_terms(a))
}

pub fn gamma_super_series_bounded(a: &AssocAlgebra, max_terms: usize) -> Result<SeriesResult> {
    let parity = a.parity().ok_or(Error::NoGrading)?.to_vec();
    let mut cur = Graded {
        even: a.even_part()?,
        odd: a.odd_part()?,
    };
    let mut terms = vec![cur.total()];
    while terms.len() < max_terms.max(1) {
        if terms.last().unwrap().is_zero() {
            break;
        }
        let next = super_bracket_with_algebra(a, &cur, &parity);
        let stable = next == cur;
        terms.push(next.total());
        cur = next;
        if stable {
            break;
        }
    }
    Ok(SeriesResult::from_terms(SeriesKind::GammaSuper, terms))
}

/// Dispatch by kind; `AssocPower` is taken on the augmentation-free whole
/// algebra and therefore rejected here (use [`power_series`]).
pub fn series(a: &AssocAlgebra, kind: SeriesKind, max_terms: Option<usize>) -> Result<SeriesResult> {
    let max = max_terms.unwrap_or_else(|| default_max_terms(a));
    match kind {
        SeriesKind::Gamma => Ok(gamma_series_bounded(a, max)),
        SeriesKind::Delta => Ok(delta_series_bounded(a, max)),
        SeriesKind::GammaSuper => gamma_super_series_bounded(a, max),
        SeriesKind::AssocPower => Err(Error::InvalidData("power series needs a subspace".into())),
    }
}

/// Closure of `span(vectors)` under multiplication by the algebra's
/// generators on the chosen sides.
fn closure(a: &AssocAlgebra, start: SpanBuilder, mut queue: Vec<Vec<Scalar>>, left: bool, right: bool) -> Subspace {
    let mut b = start;
    let gens = a.generators();
    while let Some(v) = queue.pop() {
        if b.is_full() {
            break;
        }
        for g in gens {
            let mut products = Vec::with_capacity(2);
            if right {
                products.push(a.mul(&v, g));
            }
            if left {
                products.push(a.mul(g, &v));
            }
            for w in products {
                if let Some(row) = b.insert(&w) {
                    queue.push(row);
                }
            }
        }
    }
    b.finish()
}

fn seeded(a: &AssocAlgebra, gens: &[Vec<Scalar>]) -> (SpanBuilder, Vec<Vec<Scalar>>) {
    let mut b = SpanBuilder::new(a.field(), a.dim());
    let mut queue = Vec::new();
    for g in gens {
        if let Some(row) = b.insert(g) {
            queue.push(row);
        }
    }
    (b, queue)
}

/// The two-sided ideal generated by a subspace.
pub fn two_sided_ideal(a: &AssocAlgebra, gens: &Subspace) -> Subspace {
    let (b, q) = seeded(a, gens.basis());
    closure(a, b, q, true, true)
}

/// `T · A`.
pub fn right_ideal(a: &AssocAlgebra, gens: &[Vec<Scalar>]) -> Subspace {
    let (b, q) = seeded(a, gens);
    closure(a, b, q, false, true)
}

/// Closed under multiplication by every generator on both sides.
pub fn is_two_sided_ideal(a: &AssocAlgebra, s: &Subspace) -> bool {
    s.basis()
        .iter()
        .all(|v| a.generators().iter().all(|g| s.contains(&a.mul(v, g)) && s.contains(&a.mul(g, v))))
}

/// `[R,R]R`: the ideal generated by commutators of generators. In the
/// quotient by that ideal the generators commute, so it contains every
/// commutator.
pub fn commutator_ideal(a: &AssocAlgebra) -> Subspace {
    let gens = a.generators();
    let mut seeds = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            seeds.push(a.commutator(x, y));
        }
    }
    let s = Subspace::span(a.field(), a.dim(), &seeds).expect("same ambient");
    two_sided_ideal(a, &s)
}

/// Ideal generators `G ⊆ I` with `A G A = I`, chosen greedily from `I`'s
/// basis.
fn ideal_generators(a: &AssocAlgebra, ideal: &Subspace) -> Vec<Vec<Scalar>> {
    let mut gens = Vec::new();
    let mut cur = SpanBuilder::new(a.field(), a.dim());
    for v in ideal.basis() {
        if cur.contains(v) {
            continue;
        }
        gens.push(v.clone());
        let (b, q) = seeded(a, &gens);
        let closed = closure(a, b, q, true, true);
        cur = SpanBuilder::from_subspace(&closed);
    }
    gens
}

/// Powers `I, I², …` of a two-sided ideal. With `I = A G A`,
/// `I^{k+1} = I^k G A`, so each step is a right-ideal closure.
pub fn ideal_power_series(a: &AssocAlgebra, ideal: &Subspace, max_terms: usize) -> SeriesResult {
    let gens = ideal_generators(a, ideal);
    run(SeriesKind::AssocPower, ideal.clone(), max_terms, |s| {
        let mut seeds = Vec::with_capacity(s.dim() * gens.len());
        for v in s.basis() {
            for g in &gens {
                seeds.push(a.mul(v, g));
            }
        }
        right_ideal(a, &seeds)
    })
}

/// Powers of an arbitrary subspace by pairwise products.
pub fn power_series(a: &AssocAlgebra, s: &Subspace, max_terms: usize) -> SeriesResult {
    if is_two_sided_ideal(a, s) {
        return ideal_power_series(a, s, max_terms);
    }
    let base = s.clone();
    run(SeriesKind::AssocPower, s.clone(), max_terms, |cur| a.product_span(cur, &base, None))
}

/// `I²` for a two-sided ideal.
pub fn ideal_square(a: &AssocAlgebra, ideal: &Subspace) -> Subspace {
    let series = ideal_power_series(a, ideal, 2);
    series.terms.get(1).cloned().unwrap_or_else(|| Subspace::zero(a.field(), a.dim()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Nilpotency {
    /// Least `c` with `S^{c+1} = 0`.
    Index { c: usize },
    /// Powers stabilized at a nonzero subspace.
    NotNilpotent { stable_dim: usize },
    /// Neither within the length limit.
    Undetermined { max_k: usize },
}

impl fmt::Display for Nilpotency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nilpotency::Index { c } => write!(f, "nilpotent, S^{} = 0", c + 1),
            Nilpotency::NotNilpotent { stable_dim } => write!(f, "not nilpotent, powers stable at dim {stable_dim}"),
            Nilpotency::Undetermined { max_k } => write!(f, "undetermined after {max_k} powers"),
        }
    }
}

impl Nilpotency {
    pub fn index(&self) -> Option<usize> {
        match self {
            Nilpotency::Index { c } => Some(*c),
            _ => None,
        }
    }
}

pub fn nilpotency_index(a: &AssocAlgebra, s: &Subspace, max_k: Option<usize>) -> Nilpotency {
    if s.is_zero() {
        return Nilpotency::Index { c: 0 };
    }
    let max_k = max_k.unwrap_or_else(|| default_max_terms(a));
    let r = power_series(a, s, max_k);
    if let Some(c) = r.class_or_length {
        Nilpotency::Index { c }
    } else if r.stabilized {
        Nilpotency::NotNilpotent {
            stable_dim: *r.dims.last().unwrap(),
        }
    } else {
        Nilpotency::Undetermined { max_k }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum NilIndex {
    /// Least `e` with `x^e = 0` for every enumerated `x`.
    Index { e: u32, elements: u64 },
    /// An element whose powers never vanish.
    NotNil { witness: Vec<Scalar> },
}

/// Exact nil index by enumerating every element of `S`. A nilpotent element
/// of a `D`-dimensional unital algebra satisfies `x^D = 0`, so powers are
/// tracked up to `D`.
pub fn nil_index_exact(a: &AssocAlgebra, s: &Subspace, cap: u64) -> Result<NilIndex> {
    let elements = s.enumerate(cap)?;
    let bound = a.dim().max(1) as u32;
    let mut worst = 1u32;
    let mut count = 0u64;
    for x in elements {
        count += 1;
        if is_zero(&x) {
            continue;
        }
        let mut pow = x.clone();
        let mut e = 1u32;
        while !is_zero(&pow) {
            if e >= bound {
                return Ok(NilIndex::NotNil { witness: x });
            }
            pow = a.mul(&pow, &x);
            e += 1;
        }
        worst = worst.max(e);
    }
    Ok(NilIndex::Index {
        e: worst,
        elements: count,
    })
}

/// `μ(c, d) = 2cd − c − d + 2`.
pub fn mu(c: usize, d: usize) -> usize {
    (2 * c * d + 2) - c - d
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuBoundReport {
    pub ideal_dim: usize,
    /// Nilpotency index of `I` (0 for `I = 0`).
    pub c: usize,
    /// Index used in the formula: `max(c, 1)`.
    pub c_eff: usize,
    /// Lie class of `R / I²`.
    pub d: usize,
    pub mu: usize,
    /// Lie class of `R` itself.
    pub actual_class: Option<usize>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MuBound {
    Checked(MuBoundReport),
    NotApplicable { reason: String },
}

/// For a nilpotent ideal `I` with `R/I²` Lie nilpotent of class `d`, checks
/// `γ_μ(R) = 0`. `gamma` is the Lie series of `R` when already computed.
pub fn check_mu_bound(a: &AssocAlgebra, ideal: &Subspace, gamma: Option<&SeriesResult>) -> Result<MuBound> {
    if !is_two_sided_ideal(a, ideal) {
        return Err(Error::NotAnIdeal("μ-bound needs a two-sided ideal".into()));
    }
    let c = match nilpotency_index(a, ideal, None) {
        Nilpotency::Index { c } => c,
        other => {
            return Ok(MuBound::NotApplicable {
                reason: format!("ideal is {other}"),
            })
        }
    };
    let own;
    let g = match gamma {
        Some(g) => g,
        None => {
            own = gamma_series(a);
            &own
        }
    };
    let square = ideal_square(a, ideal);
    let d = if square.is_zero() {
        g.class_or_length
    } else {
        let q = a.quotient(&square)?;
        gamma_series(&q.algebra).class_or_length
    };
    let Some(d) = d else {
        return Ok(MuBound::NotApplicable {
            reason: "R/I² is not Lie nilpotent".into(),
        });
    };
    let c_eff = c.max(1);
    let m = mu(c_eff, d);
    // γ_μ = 0 exactly when the class is below μ.
    let holds = g.class_or_length.is_some_and(|k| k < m);
    Ok(MuBound::Checked(MuBoundReport {
        ideal_dim: ideal.dim(),
        c,
        c_eff,
        d,
        mu: m,
        actual_class: g.class_or_length,
        holds,
    }))
}

/// `[X,_n C]`: `n` iterated brackets with `C`.
pub fn iterated_bracket(a: &AssocAlgebra, x: &Subspace, c: &Subspace, n: usize) -> Subspace {
    let mut cur = x.clone();
    for _ in 0..n {
        if cur.is_zero() {
            break;
        }
        cur = bracket_subspaces(a, &cur, c);
    }
    cur
}

/// `[AB,_n C] ⊆ Σ_{i=0}^n [A,_i C][B,_{n−i} C]`, returning both sides.
pub fn abc_containment_sides(a: &AssocAlgebra, sa: &Subspace, sb: &Subspace, sc: &Subspace, n: usize) -> (Subspace, Subspace) {
    let ab = a.product_span(sa, sb, None);
    let lhs = iterated_bracket(a, &ab, sc, n);
    let left: Vec<Subspace> = (0..=n).map(|i| iterated_bracket(a, sa, sc, i)).collect();
    let right: Vec<Subspace> = (0..=n).map(|i| iterated_bracket(a, sb, sc, i)).collect();
    let mut rhs = Subspace::zero(a.field(), a.dim());
    for i in 0..=n {
        let part = a.product_span(&left[i], &right[n - i], None);
        rhs = rhs.sum(&part).expect("same ambient");
    }
    (lhs, rhs)
}

pub fn check_abc_containment(a: &AssocAlgebra, sa: &Subspace, sb: &Subspace, sc: &Subspace, n: usize) -> bool {
    let (lhs, rhs) = abc_containment_sides(a, sa, sb, sc, n);
    lhs.is_subset(&rhs).expect("same ambient")
}

/// The two-sided ideal generated by `[[R,R],[R,R],R] = [δ_2, R]`.
pub fn double_commutator_ideal(a: &AssocAlgebra, delta: &SeriesResult) -> Subspace {
    let zero = Subspace::zero(a.field(), a.dim());
    let d2 = delta.term(2).cloned().unwrap_or_else(|| {
        let d1 = delta.term(1).cloned().unwrap_or_else(|| self_bracket(a, &Subspace::full(a.field(), a.dim())));
        self_bracket(a, &d1)
    });
    if d2.is_zero() {
        return zero;
    }
    let gens = bracket_with_algebra(a, &d2, a.dim());
    two_sided_ideal(a, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::Envelope;
    use crate::superlie::build::from_names;

    fn grassmann(n1: usize) -> Envelope {
        let odd: Vec<String> = (1..=n1).map(|i| format!("f{i}")).collect();
        let refs: Vec<&str> = odd.iter().map(|s| s.as_str()).collect();
        let l = from_names(3, &[], &refs, &[], &[]).unwrap();
        Envelope::build(&l, 1024).unwrap()
    }

    fn heisenberg() -> Envelope {
        let l = from_names(3, &["e1", "e2", "e3"], &[], &[("e1", "e2", &[("e3", 1)])], &[]).unwrap();
        Envelope::build(&l, 1024).unwrap()
    }

    fn sl2(p: u32) -> Envelope {
        let l = from_names(
            p,
            &["e", "h", "f"],
            &[],
            &[("e", "h", &[("e", -2)]), ("e", "f", &[("h", 1)]), ("h", "f", &[("f", -2)])],
            &[("h", &[("h", 1)])],
        )
        .unwrap();
        Envelope::build(&l, 1024).unwrap()
    }

    #[test]
    fn commutative_series() {
        let l = from_names(5, &["x"], &[], &[], &[]).unwrap();
        let env = Envelope::build(&l, 1024).unwrap();
        let g = gamma_series(&env.algebra);
        assert_eq!(g.class_or_length, Some(1));
        assert_eq!(g.dims, vec![5, 0]);
        let d = delta_series(&env.algebra);
        assert_eq!(d.class_or_length, Some(1));
    }

    #[test]
    fn grassmann_lie_class_two_super_class_one() {
        for n1 in 2..=3 {
            let env = grassmann(n1);
            let g = gamma_series(&env.algebra);
            assert_eq!(g.class_or_length, Some(2), "n1 = {n1}");
            let s = gamma_super_series(&env.algebra).unwrap();
            assert_eq!(s.class_or_length, Some(1));
        }
    }

    #[test]
    fn grassmann_commutator_ideal() {
        let env = grassmann(2);
        let a = &env.algebra;
        let ci = commutator_ideal(a);
        // [f1, f2] = 2 f1f2
        let top = env.basis.index(&crate::pbw::PbwMonomial { even_exps: vec![], odd_exps: vec![1, 1] }).unwrap();
        assert_eq!(ci, Subspace::coordinate(a.field(), a.dim(), [top]));
        assert_eq!(nilpotency_index(a, &ci, None), Nilpotency::Index { c: 1 });
    }

    #[test]
    fn commutator_ideal_from_generators_matches_basis_pairs() {
        for env in [heisenberg(), grassmann(3), sl2(3)] {
            let a = &env.algebra;
            let d = a.dim();
            let mut seeds = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    seeds.push(a.commutator(&a.basis_vector(i), &a.basis_vector(j)));
                }
            }
            let s = Subspace::span(a.field(), d, &seeds).unwrap();
            assert_eq!(two_sided_ideal(a, &s), commutator_ideal(a));
        }
    }

    #[test]
    fn sl2_is_not_lie_nilpotent() {
        let env = sl2(5);
        let g = gamma_series(&env.algebra);
        assert!(g.stabilized);
        assert!(*g.dims.last().unwrap() > 0);
        let ci = commutator_ideal(&env.algebra);
        assert!(matches!(nilpotency_index(&env.algebra, &ci, None), Nilpotency::NotNilpotent { .. }));
    }

    #[test]
    fn augmentation_ideal_powers() {
        let env = grassmann(2);
        let w = env.augmentation_ideal();
        assert_eq!(w.dim(), 3);
        assert_eq!(nilpotency_index(&env.algebra, &w, None), Nilpotency::Index { c: 2 });
        let env = heisenberg();
        assert!(nilpotency_index(&env.algebra, &env.augmentation_ideal(), None).index().is_some());
    }

    #[test]
    fn ideal_powers_match_pairwise_products() {
        let env = heisenberg();
        let a = &env.algebra;
        let w = env.augmentation_ideal();
        let fast = ideal_power_series(a, &w, 10);
        let slow = run(SeriesKind::AssocPower, w.clone(), 10, |cur| a.product_span(cur, &w, None));
        assert_eq!(fast.terms, slow.terms);
    }

    #[test]
    fn nil_index_examples() {
        let env = grassmann(1);
        let a = &env.algebra;
        assert_eq!(nil_index_exact(a, &Subspace::zero(a.field(), a.dim()), 10).unwrap(), NilIndex::Index { e: 1, elements: 1 });
        for (n1, e) in [(1, 2), (2, 2), (3, 3)] {
            let env = grassmann(n1);
            match nil_index_exact(&env.algebra, &env.augmentation_ideal(), 6561).unwrap() {
                NilIndex::Index { e: got, .. } => assert_eq!(got, e, "n1 = {n1}"),
                other => panic!("{other:?}"),
            }
        }
        let env = sl2(3);
        let ci = commutator_ideal(&env.algebra);
        assert!(matches!(nil_index_exact(&env.algebra, &ci, 10), Err(Error::EnumerationBudget { .. })));
    }

    #[test]
    fn quotient_by_omega_squared() {
        let env = heisenberg();
        let a = &env.algebra;
        let w2 = ideal_square(a, &env.augmentation_ideal());
        let q = a.quotient(&w2).unwrap();
        // e3 = [e1, e2] lies in ω², so only 1, e1, e2 survive.
        assert_eq!(q.algebra.dim(), 3);
        assert!(q.algebra.is_commutative());
        let q0 = a.quotient(&Subspace::zero(a.field(), a.dim())).unwrap();
        assert_eq!(q0.algebra.dim(), a.dim());
        let qf = a.quotient(&Subspace::full(a.field(), a.dim())).unwrap();
        assert_eq!(qf.algebra.dim(), 0);
        assert!(qf.unit_collapsed);
    }

    #[test]
    fn mu_formula() {
        assert_eq!(mu(2, 3), 9);
        for d in 1..6 {
            assert_eq!(mu(1, d), d + 1);
        }
    }

    #[test]
    fn mu_bound_on_heisenberg() {
        let env = heisenberg();
        let a = &env.algebra;
        let g = gamma_series(a);
        for ideal in [Subspace::zero(a.field(), a.dim()), env.augmentation_ideal(), commutator_ideal(a)] {
            match check_mu_bound(a, &ideal, Some(&g)).unwrap() {
                MuBound::Checked(r) => assert!(r.holds, "{r:?}"),
                MuBound::NotApplicable { reason } => panic!("{reason}"),
            }
        }
    }

    #[test]
    fn abc_containment_small_cases() {
        let env = heisenberg();
        let a = &env.algebra;
        let f = a.field();
        let s1 = Subspace::span(f, a.dim(), &[env.embed(&[1, 0, 0])]).unwrap();
        let s2 = Subspace::span(f, a.dim(), &[env.embed(&[0, 1, 0]), env.embed(&[0, 0, 1])]).unwrap();
        for n in 0..4 {
            assert!(check_abc_containment(a, &s1, &s2, &s2, n));
            assert!(check_abc_containment(a, &s2, &s1, &s1, n));
        }
    }

    #[test]
    fn super_series_requires_grading() {
        let env = heisenberg();
        let a = &env.algebra;
        let j = commutator_ideal(a);
        let q = a.quotient(&j).unwrap();
        assert!(q.algebra.parity().is_some());
        let ungraded = AssocAlgebra::new(a.field(), 1, vec![vec![(0, 1)]], None, vec![1], vec!["1".into()]).unwrap();
        assert!(matches!(gamma_super_series(&ungraded), Err(Error::NoGrading)));
    }

    #[test]
    fn kind_round_trip() {
        for k in [SeriesKind::Gamma, SeriesKind::Delta, SeriesKind::GammaSuper, SeriesKind::AssocPower] {
            assert_eq!(k.to_string().parse::<SeriesKind>().unwrap(), k);
        }
        assert!("nope".parse::<SeriesKind>().is_err());
    }
}
