//! The restricted enveloping algebra `u(L)` in its PBW basis.
//!
//! Generators are ordered as in `L` (even block, then odd block). A PBW
//! monomial has even exponents in `0..p` and odd exponents in `{0, 1}`, so
//! `dim u(L) = p^{n0} · 2^{n1}`.
//!
//! Multiplication is computed by straightening with three rewrite rules:
//!
//! - `b · a → (-1)^{|a||b|} a · b + (b, a)` when `a` precedes `b`,
//! - `e^p → e^[p]` for even `e`,
//! - `f · f → ½ (f, f)` for odd `f`.

mod algebra;

pub use algebra::{AssocAlgebra, AssociativityReport, QuotientAlgebra, Sparse};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::element_count;
use crate::error::{Error, Result};
use crate::linalg::{Fp, Scalar, Subspace};
use crate::superlie::LieSuperData;

/// An ordered PBW monomial `x_1^{a_1} ··· x_s^{a_s}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PbwMonomial {
    pub even_exps: Vec<u32>,
    pub odd_exps: Vec<u8>,
}

impl PbwMonomial {
    pub fn one(n0: usize, n1: usize) -> Self {
        PbwMonomial {
            even_exps: vec![0; n0],
            odd_exps: vec![0; n1],
        }
    }

    pub fn degree(&self) -> u32 {
        self.even_exps.iter().sum::<u32>() + self.odd_exps.iter().map(|&e| e as u32).sum::<u32>()
    }

    /// Parity of the number of odd generators present.
    pub fn parity(&self) -> u8 {
        (self.odd_exps.iter().map(|&e| e as u32).sum::<u32>() % 2) as u8
    }

    /// The generator word, each generator repeated by its exponent.
    pub fn word(&self) -> Vec<usize> {
        let n0 = self.even_exps.len();
        let mut w = Vec::new();
        for (k, &e) in self.even_exps.iter().enumerate() {
            w.extend(std::iter::repeat_n(k, e as usize));
        }
        for (k, &e) in self.odd_exps.iter().enumerate() {
            if e == 1 {
                w.push(n0 + k);
            }
        }
        w
    }
}

/// Mixed-radix indexing of PBW monomials; index 0 is the empty monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwBasis {
    p: u32,
    n0: usize,
    n1: usize,
    strides: Vec<usize>,
    dim: usize,
}

impl PbwBasis {
    /// Fails when `p^{n0} · 2^{n1}` exceeds `dim_cap`.
    pub fn new(p: u32, n0: usize, n1: usize, dim_cap: usize) -> Result<Self> {
        let dim = element_count(p, n0).saturating_mul(element_count(2, n1));
        if dim > dim_cap as u128 {
            return Err(Error::DimensionCap { dim, cap: dim_cap });
        }
        let n = n0 + n1;
        let mut strides = vec![1usize; n];
        for k in (0..n.saturating_sub(1)).rev() {
            let radix = if k + 1 < n0 { p as usize } else { 2 };
            strides[k] = strides[k + 1] * radix;
        }
        Ok(PbwBasis {
            p,
            n0,
            n1,
            strides,
            dim: dim as usize,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> usize {
        self.n0 + self.n1
    }

    pub fn stride(&self, g: usize) -> usize {
        self.strides[g]
    }

    fn radix(&self, g: usize) -> usize {
        if g < self.n0 {
            self.p as usize
        } else {
            2
        }
    }

    pub fn exponent(&self, idx: usize, g: usize) -> u32 {
        ((idx / self.strides[g]) % self.radix(g)) as u32
    }

    pub fn exponents(&self, idx: usize) -> Vec<u32> {
        (0..self.generators()).map(|g| self.exponent(idx, g)).collect()
    }

    pub fn monomial(&self, idx: usize) -> PbwMonomial {
        let e = self.exponents(idx);
        PbwMonomial {
            even_exps: e[..self.n0].to_vec(),
            odd_exps: e[self.n0..].iter().map(|&x| x as u8).collect(),
        }
    }

    pub fn index(&self, m: &PbwMonomial) -> Result<usize> {
        if m.even_exps.len() != self.n0 || m.odd_exps.len() != self.n1 {
            return Err(Error::DimensionMismatch {
                expected: self.n0 + self.n1,
                found: m.even_exps.len() + m.odd_exps.len(),
            });
        }
        let mut idx = 0;
        for (g, &e) in m.even_exps.iter().enumerate() {
            if e >= self.p {
                return Err(Error::InvalidData(format!("even exponent {e} ≥ p")));
            }
            idx += e as usize * self.strides[g];
        }
        for (k, &e) in m.odd_exps.iter().enumerate() {
            if e > 1 {
                return Err(Error::InvalidData(format!("odd exponent {e} > 1")));
            }
            idx += e as usize * self.strides[self.n0 + k];
        }
        Ok(idx)
    }

    pub fn degree(&self, idx: usize) -> u32 {
        self.exponents(idx).iter().sum()
    }

    pub fn parity(&self, idx: usize) -> u8 {
        ((self.n0..self.generators())
            .map(|g| self.exponent(idx, g))
            .sum::<u32>()
            % 2) as u8
    }

    /// First generator with a nonzero exponent.
    pub fn first_generator(&self, idx: usize) -> Option<usize> {
        (0..self.generators()).find(|&g| self.exponent(idx, g) != 0)
    }

    /// Index of the degree-one monomial `x_g`.
    pub fn generator_index(&self, g: usize) -> usize {
        self.strides[g]
    }

    pub fn label(&self, idx: usize, names: &[String]) -> String {
        let parts: Vec<String> = self
            .exponents(idx)
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| {
                if e == 1 {
                    names[g].clone()
                } else {
                    format!("{}^{}", names[g], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// A canonical sparse element of `u(L)`: no zero coefficients stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgElement {
    pub terms: BTreeMap<PbwMonomial, Scalar>,
}

impl AlgElement {
    pub fn from_dense(basis: &PbwBasis, v: &[Scalar]) -> Self {
        let terms = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (basis.monomial(i), c))
            .collect();
        AlgElement { terms }
    }

    pub fn to_dense(&self, basis: &PbwBasis) -> Result<Vec<Scalar>> {
        let mut v = vec![0; basis.dim()];
        for (m, &c) in &self.terms {
            v[basis.index(m)?] = c;
        }
        Ok(v)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `c*label + …` with basis names, e.g. `2*e1*e2^2`.
    pub fn display_with(&self, basis: &PbwBasis, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, &c)| {
                let label = basis.index(m).map(|i| basis.label(i, names)).unwrap_or_else(|_| "?".into());
                match (c, m.degree()) {
                    (_, 0) => c.to_string(),
                    (1, _) => label,
                    _ => format!("{c}*{label}"),
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Coefficient of the empty monomial.
    pub fn augmentation(&self) -> Scalar {
        self.terms
            .iter()
            .find(|(m, _)| m.degree() == 0)
            .map_or(0, |(_, &c)| c)
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{c}*{:?}{:?}", m.even_exps, m.odd_exps))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Memoized PBW straightening for one algebra.
///
/// The memo holds `x_g · m` for every generator `g` and monomial `m`; a full
/// product is a sequence of such left multiplications.
pub struct Straightener<'a> {
    lie: &'a LieSuperData,
    basis: PbwBasis,
    memo: Vec<Option<Sparse>>,
    busy: Vec<bool>,
}

impl<'a> Straightener<'a> {
    pub fn new(lie: &'a LieSuperData, dim_cap: usize) -> Result<Self> {
        let basis = PbwBasis::new(lie.p(), lie.n0(), lie.n1(), dim_cap)?;
        let slots = basis.generators() * basis.dim();
        Ok(Straightener {
            lie,
            basis,
            memo: vec![None; slots],
            busy: vec![false; slots],
        })
    }

    pub fn basis(&self) -> &PbwBasis {
        &self.basis
    }

    fn field(&self) -> Fp {
        self.lie.field()
    }

    fn slot(&self, g: usize, m: usize) -> usize {
        g * self.basis.dim() + m
    }

    /// `x_g · m` as a sparse vector in the PBW basis.
    pub fn left_generator(&mut self, g: usize, m: usize) -> &Sparse {
        self.ensure(g, m);
        let s = self.slot(g, m);
        self.memo[s].as_ref().unwrap()
    }

    fn ensure(&mut self, g: usize, m: usize) {
        let s = self.slot(g, m);
        if self.memo[s].is_some() {
            return;
        }
        assert!(!self.busy[s], "straightening cycle at generator {g}, monomial {m}");
        self.busy[s] = true;
        let v = self.compute(g, m);
        self.busy[s] = false;
        self.memo[s] = Some(v);
    }

    fn accumulate(&mut self, acc: &mut [u64], coeff: Scalar, g: usize, m: usize) {
        if coeff == 0 {
            return;
        }
        self.ensure(g, m);
        let p = self.field().p() as u64;
        let s = self.slot(g, m);
        for &(k, c) in self.memo[s].as_ref().unwrap() {
            let slot = &mut acc[k as usize];
            *slot = (*slot + coeff as u64 * c as u64) % p;
        }
    }

    /// `x · m` for `x ∈ L` given in coordinates.
    fn accumulate_element(&mut self, acc: &mut [u64], coeff: Scalar, x: &[Scalar], m: usize) {
        let f = self.field();
        for (k, &c) in x.iter().enumerate() {
            if c != 0 {
                self.accumulate(acc, f.mul(coeff, c), k, m);
            }
        }
    }

    fn compute(&mut self, g: usize, m: usize) -> Sparse {
        let f = self.field();
        let lie = self.lie;
        let b = &self.basis;
        let n0 = lie.n0();
        let first = b.first_generator(m);
        let stride = b.stride(g);
        match first {
            None => return vec![(stride as u32, 1)],
            Some(j) if g < j => return vec![((m + stride) as u32, 1)],
            _ => {}
        }
        let j = first.unwrap();
        let mut acc = vec![0u64; b.dim()];
        if g == j {
            let a = b.exponent(m, g);
            if g < n0 {
                if a + 1 < lie.p() {
                    return vec![((m + stride) as u32, 1)];
                }
                // x_g^p · rest = x_g^[p] · rest
                let rest = m - a as usize * stride;
                let xp = lie.pmap_basis(g).to_vec();
                self.accumulate_element(&mut acc, 1, &xp, rest);
            } else {
                // f · f = ½ (f, f)
                let rest = m - stride;
                let sq = lie.bracket_basis(g, g).to_vec();
                self.accumulate_element(&mut acc, f.half(), &sq, rest);
            }
        } else {
            // g > j: x_g x_j = (-1)^{|g||j|} x_j x_g + (x_g, x_j)
            let tail = m - b.stride(j);
            let sign = if lie.is_odd(g) && lie.is_odd(j) { f.neg(1) } else { 1 };
            self.ensure(g, tail);
            let inner = self.memo[self.slot(g, tail)].clone().unwrap();
            for (n, c) in inner {
                self.accumulate(&mut acc, f.mul(sign, c), j, n as usize);
            }
            let br = lie.bracket_basis(g, j).to_vec();
            self.accumulate_element(&mut acc, 1, &br, tail);
        }
        acc.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i as u32, c as Scalar))
            .collect()
    }

    /// Normal form of an arbitrary word of generators.
    pub fn straighten_word(&mut self, word: &[usize]) -> AlgElement {
        let v = self.straighten_word_dense(word);
        AlgElement::from_dense(&self.basis, &v)
    }

    fn straighten_word_dense(&mut self, word: &[usize]) -> Vec<Scalar> {
        let mut cur: Vec<Scalar> = vec![0; self.basis.dim()];
        cur[0] = 1;
        self.apply_word(word, cur)
    }

    fn apply_word(&mut self, word: &[usize], mut cur: Vec<Scalar>) -> Vec<Scalar> {
        for &g in word.iter().rev() {
            let mut acc = vec![0u64; self.basis.dim()];
            for (n, &c) in cur.iter().enumerate() {
                if c != 0 {
                    self.accumulate(&mut acc, c, g, n);
                }
            }
            cur = acc.into_iter().map(|c| c as Scalar).collect();
        }
        cur
    }

    /// `m1 · m2` in the PBW basis.
    pub fn straighten_product(&mut self, m1: &PbwMonomial, m2: &PbwMonomial) -> Result<AlgElement> {
        let j = self.basis.index(m2)?;
        let mut cur = vec![0; self.basis.dim()];
        cur[j] = 1;
        let v = self.apply_word(&m1.word(), cur);
        Ok(AlgElement::from_dense(&self.basis, &v))
    }

    /// Full multiplication table; row `i` is built from row `i'` where
    /// `m_i = x_g · m_{i'}` and `g` is the first generator of `m_i`.
    pub fn build(mut self) -> Result<Envelope> {
        let d = self.basis.dim();
        let n = self.basis.generators();
        for g in 0..n {
            for m in 0..d {
                self.ensure(g, m);
            }
        }
        let p = self.field().p() as u64;
        let mut table: Vec<Sparse> = Vec::with_capacity(d * d);
        for i in 0..d {
            match self.basis.first_generator(i) {
                None => {
                    for j in 0..d {
                        table.push(vec![(j as u32, 1)]);
                    }
                }
                Some(g) => {
                    let prev = i - self.basis.stride(g);
                    let mut acc = vec![0u64; d];
                    for j in 0..d {
                        for &(k, c) in &table[prev * d + j] {
                            for &(t, e) in self.memo[g * d + k as usize].as_ref().unwrap() {
                                let slot = &mut acc[t as usize];
                                *slot = (*slot + c as u64 * e as u64) % p;
                            }
                        }
                        let row: Sparse = acc
                            .iter()
                            .enumerate()
                            .filter(|(_, &c)| c != 0)
                            .map(|(t, &c)| (t as u32, c as Scalar))
                            .collect();
                        for &(t, _) in &row {
                            acc[t as usize] = 0;
                        }
                        table.push(row);
                    }
                }
            }
        }
        let parity: Vec<u8> = (0..d).map(|i| self.basis.parity(i)).collect();
        let labels: Vec<String> = (0..d).map(|i| self.basis.label(i, self.lie.names())).collect();
        let mut unit = vec![0; d];
        unit[0] = 1;
        let generators = (0..n).map(|g| crate::linalg::unit_vector(d, self.basis.generator_index(g))).collect();
        let algebra = AssocAlgebra::new(self.field(), d, table, Some(parity), unit, labels)?.with_generators(generators)?;
        Ok(Envelope {
            basis: self.basis,
            algebra,
        })
    }
}

/// `u(L)` together with its PBW indexing.
#[derive(Debug, Clone)]
pub struct Envelope {
    pub basis: PbwBasis,
    pub algebra: AssocAlgebra,
}

impl Envelope {
    /// Builds `u(L)`; fails when `p^{n0} · 2^{n1} > dim_cap`.
    pub fn build(lie: &LieSuperData, dim_cap: usize) -> Result<Self> {
        Straightener::new(lie, dim_cap)?.build()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Image of `x ∈ L` in `u(L)` (degree-one monomials).
    pub fn embed(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![0; self.dim()];
        for (g, &c) in x.iter().enumerate() {
            v[self.basis.generator_index(g)] = c;
        }
        v
    }

    /// Coordinates in `L` of an element supported on degree-one monomials.
    pub fn project_to_lie(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let n = self.basis.generators();
        let gens: Vec<usize> = (0..n).map(|g| self.basis.generator_index(g)).collect();
        let outside = v
            .iter()
            .enumerate()
            .any(|(i, &c)| c != 0 && !gens.contains(&i));
        if outside {
            return None;
        }
        Some(gens.iter().map(|&i| v[i]).collect())
    }

    /// `ω(L)`: span of the non-empty monomials.
    pub fn augmentation_ideal(&self) -> Subspace {
        Subspace::coordinate(self.algebra.field(), self.dim(), 1..self.dim())
    }

    /// The subspace of `u(L)` spanned by the image of a subspace of `L`.
    pub fn embed_subspace(&self, s: &Subspace) -> Subspace {
        let rows: Vec<Vec<Scalar>> = s.basis().iter().map(|r| self.embed(r)).collect();
        Subspace::span(self.algebra.field(), self.dim(), &rows).expect("consistent dims")
    }
}

/// `u(L)`'s PBW basis; alias kept for callers that only need the algebra.
pub fn build_assoc_algebra(lie: &LieSuperData, dim_cap: usize) -> Result<AssocAlgebra> {
    Ok(Envelope::build(lie, dim_cap)?.algebra)
}

/// Sign picked up when sorting a word of distinct generators into PBW
/// order, computed by counting: each generator passing over a segment
/// contributes `(-1)^{|g| · #odd(segment)}`.
pub fn reorder_sign(lie: &LieSuperData, word: &[usize]) -> i32 {
    let mut sign = 1;
    for (k, &g) in word.iter().enumerate() {
        if !lie.is_odd(g) {
            continue;
        }
        let odd_before_and_larger = word[..k]
            .iter()
            .filter(|&&h| h > g && lie.is_odd(h))
            .count();
        if odd_before_and_larger % 2 == 1 {
            sign = -sign;
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlie::build::from_names;

    #[test]
    fn basis_indexing_round_trips() {
        let b = PbwBasis::new(3, 2, 1, 1024).unwrap();
        assert_eq!(b.dim(), 18);
        for i in 0..b.dim() {
            assert_eq!(b.index(&b.monomial(i)).unwrap(), i);
        }
        assert_eq!(b.first_generator(0), None);
        assert!(matches!(PbwBasis::new(3, 2, 1, 10), Err(Error::DimensionCap { dim: 18, cap: 10 })));
    }

    #[test]
    fn unit_is_neutral() {
        let h = from_names(3, &["e1", "e2", "e3"], &[], &[("e1", "e2", &[("e3", 1)])], &[]).unwrap();
        let mut s = Straightener::new(&h, 1024).unwrap();
        let one = PbwMonomial::one(3, 0);
        let m = s.basis().monomial(7);
        let r = s.straighten_product(&m, &one).unwrap();
        assert_eq!(r.terms.len(), 1);
        assert_eq!(r.terms[&m], 1);
        let r = s.straighten_product(&one, &m).unwrap();
        assert_eq!(r.terms[&m], 1);
    }

    #[test]
    fn swap_rule() {
        // e2·e1 = e1e2 - e3 when (e1,e2) = e3.
        let h = from_names(5, &["e1", "e2", "e3"], &[], &[("e1", "e2", &[("e3", 1)])], &[]).unwrap();
        let mut s = Straightener::new(&h, 1024).unwrap();
        let r = s.straighten_word(&[1, 0]);
        let e1e2 = PbwMonomial { even_exps: vec![1, 1, 0], odd_exps: vec![] };
        let e3 = PbwMonomial { even_exps: vec![0, 0, 1], odd_exps: vec![] };
        assert_eq!(r.terms.len(), 2);
        assert_eq!(r.terms[&e1e2], 1);
        assert_eq!(r.terms[&e3], 4);
    }

    #[test]
    fn odd_square_rule() {
        // (f,f) = x over GF(3): f·f = ½x = 2x.
        let l = from_names(3, &["x"], &["f"], &[("f", "f", &[("x", 1)])], &[]).unwrap();
        let mut s = Straightener::new(&l, 1024).unwrap();
        let r = s.straighten_word(&[1, 1]);
        let x = PbwMonomial { even_exps: vec![1], odd_exps: vec![0] };
        assert_eq!(r.terms.len(), 1);
        assert_eq!(r.terms[&x], 2);
    }

    #[test]
    fn p_power_rule() {
        let l = from_names(3, &["x"], &[], &[], &[("x", &[("x", 1)])]).unwrap();
        let mut s = Straightener::new(&l, 1024).unwrap();
        let x2 = PbwMonomial { even_exps: vec![2], odd_exps: vec![] };
        let x1 = PbwMonomial { even_exps: vec![1], odd_exps: vec![] };
        let r = s.straighten_product(&x2, &x1).unwrap();
        assert_eq!(r.terms.len(), 1);
        assert_eq!(r.terms[&x1], 1);
    }

    #[test]
    fn reorder_sign_matches_straightening_in_grassmann() {
        let g = from_names(3, &["x"], &["f1", "f2", "f3"], &[], &[]).unwrap();
        let mut s = Straightener::new(&g, 1024).unwrap();
        let words: [&[usize]; 6] = [&[1, 2, 3], &[2, 1, 3], &[3, 2, 1], &[0, 3, 1], &[3, 0, 2, 1], &[2, 0, 3]];
        for w in words {
            let r = s.straighten_word(w);
            assert_eq!(r.terms.len(), 1, "{w:?}");
            let c = *r.terms.values().next().unwrap();
            let expected = if reorder_sign(&g, w) == 1 { 1 } else { 2 };
            assert_eq!(c, expected, "{w:?}");
        }
    }

    #[test]
    fn dense_round_trip_and_augmentation() {
        let b = PbwBasis::new(5, 1, 1, 1024).unwrap();
        let v: Vec<Scalar> = (0..b.dim() as u32).map(|i| i % 5).collect();
        let e = AlgElement::from_dense(&b, &v);
        assert_eq!(e.to_dense(&b).unwrap(), v);
        assert_eq!(e.augmentation(), 0);
        assert_eq!(AlgElement::default().to_string(), "0");
    }

    fn heisenberg(p: u32) -> LieSuperData {
        from_names(p, &["e1", "e2", "e3"], &[], &[("e1", "e2", &[("e3", 1)])], &[("e1", &[("e3", 1)])]).unwrap()
    }

    #[test]
    fn envelope_is_associative_graded_unital() {
        let l = from_names(3, &["x"], &["a", "b"], &[("a", "a", &[("x", 1)])], &[("x", &[("x", 1)])]).unwrap();
        let env = Envelope::build(&l, 1024).unwrap();
        assert_eq!(env.dim(), 12);
        let a = &env.algebra;
        assert!(a.check_unit());
        assert!(a.check_grading());
        assert!(a.check_associativity(64, 0, |_| 0).failure.is_none());
        assert!(!a.is_commutative());
    }

    #[test]
    fn p_th_powers_match_the_p_map() {
        let l = heisenberg(3);
        let env = Envelope::build(&l, 1024).unwrap();
        let f = l.field();
        for x in Subspace::full(f, 3).enumerate(100).unwrap() {
            let u = env.embed(&x);
            let cube = env.algebra.mul(&env.algebra.mul(&u, &u), &u);
            assert_eq!(cube, env.embed(&l.pmap_extend(&x)), "x = {x:?}");
        }
    }

    #[test]
    fn brackets_are_commutators() {
        let l = from_names(3, &["x"], &["y1", "y2"], &[("x", "y1", &[("y2", 1)])], &[]).unwrap();
        let env = Envelope::build(&l, 1024).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let (bi, bj) = (l.basis_vector(i), l.basis_vector(j));
                let c = env.algebra.super_commutator(&env.embed(&bi), &env.embed(&bj)).unwrap();
                assert_eq!(env.project_to_lie(&c).unwrap(), l.bracket(&bi, &bj));
            }
        }
    }

    #[test]
    fn dimension_cap_is_an_error() {
        let l = heisenberg(5);
        assert!(matches!(Envelope::build(&l, 100), Err(Error::DimensionCap { dim: 125, cap: 100 })));
    }
}
