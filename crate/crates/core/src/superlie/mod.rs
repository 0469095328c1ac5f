//! Finite-dimensional restricted Lie superalgebras `L = L0 ⊕ L1` over GF(p).
//!
//! Basis order is fixed: the `n0` even elements first, then the `n1` odd
//! ones. Elements are coordinate vectors of length `n0 + n1`.

mod axioms;
mod ideals;
mod pmap;

pub use axioms::{verify_axioms, AxiomFailure, AxiomReport, ElementCheck};
pub use ideals::{
    center, derived_series, embed_even, embed_odd, is_nilpotent_l0_module, is_p_nilpotent_subspace, is_restricted_ideal,
    lower_central_series, quotient_algebra, restricted_ideal_generated, ClosureCertificate,
    GradedSubspace, LieSeries, PNilpotence, RestrictedIdeal,
};
pub use pmap::PMapClosure;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{is_zero, unit_vector, Fp, Scalar};

/// Structure constants, grading and p-map table of a restricted Lie
/// superalgebra.
///
/// Only `(b_i, b_j)` with `i ≤ j` is stored; the other half follows from
/// `(b_j, b_i) = -(-1)^{|i||j|} (b_i, b_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSuperData {
    field: Fp,
    n0: usize,
    n1: usize,
    names: Vec<String>,
    stored: BTreeMap<(usize, usize), Vec<Scalar>>,
    pmap: Vec<Vec<Scalar>>,
    table: Vec<Vec<Scalar>>,
}

impl LieSuperData {
    /// Builds the data model. `brackets` maps `(i, j)` with `i ≤ j` to the
    /// coordinates of `(b_i, b_j)`; `pmap[i]` holds `b_i^[p]` for each even
    /// `i` and must vanish on the odd block.
    pub fn new(
        field: Fp,
        even: Vec<String>,
        odd: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<Scalar>)>,
        pmap: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        let n0 = even.len();
        let n1 = odd.len();
        let n = n0 + n1;
        let mut names = even;
        names.extend(odd);
        let mut stored = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i > j {
                return Err(Error::InvalidData(format!(
                    "bracket pair ({i},{j}) is not in increasing order"
                )));
            }
            if j >= n {
                return Err(Error::InvalidData(format!("bracket index {j} out of range")));
            }
            check_len(&v, n)?;
            let v: Vec<Scalar> = v.into_iter().map(|c| c % field.p()).collect();
            if !is_zero(&v) {
                stored.insert((i, j), v);
            }
        }
        if pmap.len() != n0 {
            return Err(Error::DimensionMismatch {
                expected: n0,
                found: pmap.len(),
            });
        }
        let mut reduced = Vec::with_capacity(n0);
        for (i, v) in pmap.into_iter().enumerate() {
            check_len(&v, n)?;
            if v[n0..].iter().any(|&c| c % field.p() != 0) {
                return Err(Error::InvalidData(format!(
                    "p-map of even basis element {i} has odd components"
                )));
            }
            reduced.push(v.into_iter().map(|c| c % field.p()).collect());
        }
        let mut data = LieSuperData {
            field,
            n0,
            n1,
            names,
            stored,
            pmap: reduced,
            table: Vec::new(),
        };
        data.rebuild_table();
        Ok(data)
    }

    fn rebuild_table(&mut self) {
        let n = self.dim();
        let f = self.field;
        let mut table = vec![vec![0; n]; n * n];
        for (&(i, j), v) in &self.stored {
            table[i * n + j] = v.clone();
            if i != j {
                table[j * n + i] = if self.is_odd(i) && self.is_odd(j) {
                    v.clone()
                } else {
                    f.neg_vec(v)
                };
            }
        }
        self.table = table;
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn dim(&self) -> usize {
        self.n0 + self.n1
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_odd(&self, i: usize) -> bool {
        i >= self.n0
    }

    /// Parity bit of basis element `i`.
    pub fn parity(&self, i: usize) -> u8 {
        self.is_odd(i) as u8
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.dim(), i)
    }

    /// Stored structure constants, `i ≤ j`, nonzero only.
    pub fn stored_brackets(&self) -> &BTreeMap<(usize, usize), Vec<Scalar>> {
        &self.stored
    }

    /// `(b_i, b_j)` for any ordered pair.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim() + j]
    }

    /// `b_i^[p]` for even `i`.
    pub fn pmap_basis(&self, i: usize) -> &[Scalar] {
        &self.pmap[i]
    }

    /// Replaces a stored structure constant vector (`i ≤ j`).
    pub fn set_stored_bracket(&mut self, i: usize, j: usize, v: Vec<Scalar>) -> Result<()> {
        if i > j || j >= self.dim() {
            return Err(Error::InvalidData(format!("bad bracket pair ({i},{j})")));
        }
        check_len(&v, self.dim())?;
        let v: Vec<Scalar> = v.into_iter().map(|c| c % self.p()).collect();
        if is_zero(&v) {
            self.stored.remove(&(i, j));
        } else {
            self.stored.insert((i, j), v);
        }
        self.rebuild_table();
        Ok(())
    }

    /// Replaces the p-map value of even basis element `i`.
    pub fn set_pmap(&mut self, i: usize, v: Vec<Scalar>) -> Result<()> {
        if i >= self.n0 {
            return Err(Error::InvalidData(format!("{i} is not an even index")));
        }
        check_len(&v, self.dim())?;
        if v[self.n0..].iter().any(|&c| c % self.p() != 0) {
            return Err(Error::InvalidData("p-map value has odd components".into()));
        }
        self.pmap[i] = v.into_iter().map(|c| c % self.p()).collect();
        Ok(())
    }

    /// Bilinear super-bracket `(x, y)`.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let f = self.field;
        let mut out = vec![0; n];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b != 0 {
                    f.axpy(&mut out, f.mul(a, b), &self.table[i * n + j]);
                }
            }
        }
        out
    }

    /// `(y,_k x) = (...((y, x), x)...)`, i.e. `(ad x)^k (y)`.
    pub fn ad_power(&self, x: &[Scalar], y: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut w = y.to_vec();
        for _ in 0..k {
            if is_zero(&w) {
                break;
            }
            w = self.bracket(&w, x);
        }
        w
    }

    /// Even and odd components of `x`.
    pub fn split(&self, x: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut even = x.to_vec();
        let mut odd = x.to_vec();
        even[self.n0..].iter_mut().for_each(|c| *c = 0);
        odd[..self.n0].iter_mut().for_each(|c| *c = 0);
        (even, odd)
    }

    pub fn is_even_element(&self, x: &[Scalar]) -> bool {
        x[self.n0..].iter().all(|&c| c == 0)
    }

    pub fn is_odd_element(&self, x: &[Scalar]) -> bool {
        x[..self.n0].iter().all(|&c| c == 0)
    }

    /// Extension of the p-map to an arbitrary even element.
    pub fn pmap_extend(&self, x: &[Scalar]) -> Vec<Scalar> {
        pmap::extend(self, x, None)
    }

    /// As [`LieSuperData::pmap_extend`], peeling basis summands in `order`.
    pub fn pmap_extend_ordered(&self, x: &[Scalar], order: &[usize]) -> Vec<Scalar> {
        pmap::extend(self, x, Some(order))
    }

    /// Ad-matrix of `x` acting by `y ↦ (y, x)`, as a list of column images.
    pub fn ad_columns(&self, x: &[Scalar]) -> Vec<Vec<Scalar>> {
        (0..self.dim())
            .map(|j| self.bracket(&self.basis_vector(j), x))
            .collect()
    }

    /// Human-readable form of an element, e.g. `2*e1 + e3`.
    pub fn format_element(&self, x: &[Scalar]) -> String {
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}*{}", c, self.names[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn check_len(v: &[Scalar], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    Ok(())
}

/// Small constructors for hand-written algebras in tests and examples.
pub mod build {
    use super::*;

    /// `(left, right, terms)` for one bracket.
    pub type BracketSpec<'a> = (&'a str, &'a str, &'a [(&'a str, i64)]);

    /// An algebra from name lists, `(left, right, [(name, coeff)])` brackets
    /// and `(even, [(name, coeff)])` p-map entries.
    pub fn from_names(
        p: u32,
        even: &[&str],
        odd: &[&str],
        brackets: &[BracketSpec<'_>],
        pmap: &[(&str, &[(&str, i64)])],
    ) -> Result<LieSuperData> {
        let field = Fp::new(p)?;
        let names: Vec<&str> = even.iter().chain(odd).copied().collect();
        let n = names.len();
        let idx = |s: &str| -> Result<usize> {
            names
                .iter()
                .position(|&m| m == s)
                .ok_or_else(|| Error::InvalidData(format!("unknown name {s}")))
        };
        let vec_of = |terms: &[(&str, i64)]| -> Result<Vec<Scalar>> {
            let mut v = vec![0; n];
            for &(name, c) in terms {
                let k = idx(name)?;
                v[k] = field.add(v[k], field.from_i64_value(c));
            }
            Ok(v)
        };
        let mut br = Vec::new();
        for &(a, b, terms) in brackets {
            br.push(((idx(a)?, idx(b)?), vec_of(terms)?));
        }
        let mut pm = vec![vec![0; n]; even.len()];
        for &(a, terms) in pmap {
            pm[idx(a)?] = vec_of(terms)?;
        }
        LieSuperData::new(
            field,
            even.iter().map(|s| s.to_string()).collect(),
            odd.iter().map(|s| s.to_string()).collect(),
            br,
            pm,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::build::from_names;

    #[test]
    fn even_self_bracket_vanishes() {
        let h = from_names(5, &["e1", "e2", "e3"], &[], &[("e1", "e2", &[("e3", 1)])], &[]).unwrap();
        let v = vec![1, 3, 4];
        assert_eq!(h.bracket(&v, &v), vec![0, 0, 0]);
    }

    #[test]
    fn stored_entry_and_antisymmetry() {
        let h = from_names(5, &["e1", "e2", "e3"], &[], &[("e1", "e2", &[("e3", 1)])], &[]).unwrap();
        let e1 = h.basis_vector(0);
        let e2 = h.basis_vector(1);
        assert_eq!(h.bracket(&e1, &e2), vec![0, 0, 1]);
        assert_eq!(h.bracket(&e2, &e1), vec![0, 0, 4]);
    }

    #[test]
    fn odd_pairs_are_symmetric() {
        let l = from_names(3, &["x"], &["a", "b"], &[("a", "b", &[("x", 1)])], &[]).unwrap();
        assert_eq!(l.bracket_basis(1, 2), l.bracket_basis(2, 1));
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(from_names(3, &["x", "y"], &[], &[("y", "x", &[("x", 1)])], &[]).is_err());
        assert!(from_names(3, &["x"], &["z"], &[], &[("x", &[("z", 1)])]).is_err());
        assert!(from_names(4, &["x"], &[], &[], &[]).is_err());
    }
}
