//! Subspaces of GF(p)^n in canonical reduced row echelon form.

use std::fmt;

use crate::config::check_enumeration;
use crate::error::{Error, Result};
use crate::linalg::field::{is_zero, unit_vector, Fp, Scalar};

/// Incremental row echelon accumulator.
///
/// Rows are kept in (non-reduced) echelon form while vectors stream in;
/// [`SpanBuilder::finish`] back-substitutes once into RREF.
#[derive(Debug, Clone)]
pub struct SpanBuilder {
    field: Fp,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    lead: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl SpanBuilder {
    pub fn new(field: Fp, ambient: usize) -> Self {
        SpanBuilder {
            field,
            ambient,
            rows: Vec::new(),
            lead: Vec::new(),
            pivot_row: vec![None; ambient],
        }
    }

    /// Starts from the rows of an existing subspace.
    pub fn from_subspace(s: &Subspace) -> Self {
        let mut b = SpanBuilder::new(s.field, s.ambient);
        for (row, &c) in s.rows.iter().zip(&s.pivots) {
            b.pivot_row[c] = Some(b.rows.len());
            b.rows.push(row.clone());
            b.lead.push(c);
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Reduces `v` in place against the current rows. Returns the leading
    /// column of the residue, or `None` when `v` is in the span.
    fn reduce_in_place(&self, v: &mut [Scalar]) -> Option<usize> {
        let f = self.field;
        for col in 0..self.ambient {
            let c = v[col];
            if c == 0 {
                continue;
            }
            match self.pivot_row[col] {
                Some(r) => {
                    let row = &self.rows[r];
                    let a = f.neg(c);
                    let p = f.p() as u64;
                    for k in col..self.ambient {
                        let x = row[k];
                        if x != 0 {
                            v[k] = ((v[k] as u64 + a as u64 * x as u64) % p) as u32;
                        }
                    }
                }
                None => return Some(col),
            }
        }
        None
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w).is_none()
    }

    /// Adds `v` to the span. Returns the new (normalized) echelon row when
    /// `v` was independent of what was already there.
    pub fn insert(&mut self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector length != ambient dim");
        if self.rows.len() == self.ambient {
            return None;
        }
        let mut w = v.to_vec();
        let col = self.reduce_in_place(&mut w)?;
        let inv = self.field.inv(w[col]);
        self.field.scale(&mut w[col..], inv);
        self.pivot_row[col] = Some(self.rows.len());
        self.rows.push(w.clone());
        self.lead.push(col);
        Some(w)
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Back-substitutes into RREF and returns the canonical subspace.
    pub fn finish(self) -> Subspace {
        let f = self.field;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.lead[r]);
        let mut rows: Vec<Vec<Scalar>> = order.iter().map(|&r| self.rows[r].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&r| self.lead[r]).collect();
        for r in (0..rows.len()).rev() {
            let c = pivots[r];
            let (above, rest) = rows.split_at_mut(r);
            let pivot_row = &rest[0];
            for s in above.iter_mut() {
                let k = s[c];
                if k != 0 {
                    f.axpy(s, f.neg(k), pivot_row);
                }
            }
        }
        Subspace {
            field: f,
            ambient: self.ambient,
            rows,
            pivots,
        }
    }
}

/// A subspace of GF(p)^n stored as reduced row echelon rows.
///
/// The representation is canonical: two subspaces are equal exactly when
/// their rows are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Fp,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in GF({})^{}, rows {:?})",
            self.rows.len(),
            self.field.p(),
            self.ambient,
            self.rows
        )
    }
}

impl Subspace {
    pub fn zero(field: Fp, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Fp, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(field: Fp, ambient: usize, axes: impl IntoIterator<Item = usize>) -> Self {
        let mut axes: Vec<usize> = axes.into_iter().collect();
        axes.sort_unstable();
        axes.dedup();
        Subspace {
            field,
            ambient,
            rows: axes.iter().map(|&i| unit_vector(ambient, i)).collect(),
            pivots: axes,
        }
    }

    /// All linear combinations of `vectors`.
    pub fn span<V: AsRef<[Scalar]>>(field: Fp, ambient: usize, vectors: &[V]) -> Result<Self> {
        let mut b = SpanBuilder::new(field, ambient);
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            b.insert(v);
        }
        Ok(b.finish())
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// RREF basis rows.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// `v` minus its component along the pivots; zero iff `v` is contained.
    pub fn residue(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut w = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let k = w[c];
            if k != 0 {
                f.axpy(&mut w, f.neg(k), row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && is_zero(&self.residue(v))
    }

    /// Coefficients of `v` in the RREF basis, if `v` is contained.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c]).collect())
    }

    /// Element with the given coefficients on the RREF basis.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![0; self.ambient];
        for (row, &c) in self.rows.iter().zip(coeffs) {
            self.field.axpy(&mut v, c, row);
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut b = SpanBuilder::from_subspace(self);
        for r in &other.rows {
            b.insert(r);
        }
        Ok(b.finish())
    }

    pub fn is_subset(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.rows.iter().all(|r| other.contains(r)))
    }

    /// `dim self - dim inner`; requires `inner ⊆ self`.
    pub fn codim_of(&self, inner: &Subspace) -> Result<usize> {
        if !inner.is_subset(self)? {
            return Err(Error::NotContained);
        }
        Ok(self.dim() - inner.dim())
    }

    /// Intersection by the kernel of the stacked bases: pairs `(x, y)` with
    /// `Σ x_i a_i = Σ y_j b_j` are the kernel of `[A; -B]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let f = self.field;
        let mut images: Vec<Vec<Scalar>> = self.rows.clone();
        images.extend(other.rows.iter().map(|r| f.neg_vec(r)));
        let ker = kernel_of_images(f, self.ambient, &images)?;
        let vectors: Vec<Vec<Scalar>> = ker
            .basis()
            .iter()
            .map(|k| self.combine(&k[..self.dim()]))
            .collect();
        Subspace::span(f, self.ambient, &vectors)
    }

    /// Coordinate map from `self` onto `self / inner`.
    pub fn quotient_coords(&self, inner: &Subspace) -> Result<QuotientMap> {
        if !inner.is_subset(self)? {
            return Err(Error::NotContained);
        }
        let f = self.field;
        let mut b = SpanBuilder::new(f, self.ambient);
        for r in &self.rows {
            let res = inner.residue(r);
            b.insert(&res);
        }
        let complement = b.finish();
        Ok(QuotientMap {
            field: f,
            kernel: inner.clone(),
            complement,
        })
    }

    /// Iterates over all `p^dim` elements, failing when that exceeds `cap`.
    pub fn enumerate(&self, cap: u64) -> Result<Elements<'_>> {
        let total = check_enumeration(self.field.p(), self.dim(), cap)?;
        Ok(Elements {
            space: self,
            coeffs: vec![0; self.dim()],
            remaining: total,
        })
    }

    /// Every hyperplane `h` with `self ⊆ h ⊆ ambient`, sorted by RREF rows.
    pub fn hyperplanes_between(&self, ambient: &Subspace) -> Result<Vec<Subspace>> {
        let q = ambient.quotient_coords(self)?;
        let k = q.target_dim();
        let f = self.field;
        let p = f.p();
        let mut out = Vec::new();
        for lead in 0..k {
            let tail = k - lead - 1;
            let count = crate::config::element_count(p, tail);
            for n in 0..count {
                // functional φ with φ[lead] = 1, φ[lead+1..] = digits of n
                let mut phi = vec![0u32; k];
                phi[lead] = 1;
                let mut m = n;
                for slot in phi.iter_mut().skip(lead + 1) {
                    *slot = (m % p as u128) as u32;
                    m /= p as u128;
                }
                let mut gens: Vec<Vec<Scalar>> = self.rows.clone();
                for i in (0..k).filter(|&i| i != lead) {
                    let mut t = vec![0u32; k];
                    t[i] = 1;
                    t[lead] = f.neg(phi[i]);
                    gens.push(q.section(&t));
                }
                out.push(Subspace::span(f, self.ambient, &gens)?);
            }
        }
        out.sort_by(|a, b| a.rows.cmp(&b.rows));
        Ok(out)
    }
}

/// Surjection `b → GF(p)^(dim b - dim a)` with kernel `a`, plus a section.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    field: Fp,
    kernel: Subspace,
    /// Rows reduced modulo the kernel, in RREF; their pivots avoid the
    /// kernel's pivots.
    complement: Subspace,
}

impl QuotientMap {
    pub fn target_dim(&self) -> usize {
        self.complement.dim()
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    /// Representatives of the quotient basis.
    pub fn section_basis(&self) -> &[Vec<Scalar>] {
        self.complement.basis()
    }

    /// Quotient coordinates of `v` (which should lie in the source space).
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.kernel.residue(v);
        self.complement.pivots().iter().map(|&c| r[c]).collect()
    }

    pub fn section(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.complement.combine(coords)
    }

    pub fn field(&self) -> Fp {
        self.field
    }
}

/// Iterator over every element of a subspace.
pub struct Elements<'a> {
    space: &'a Subspace,
    coeffs: Vec<Scalar>,
    remaining: u64,
}

impl Iterator for Elements<'_> {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let v = self.space.combine(&self.coeffs);
        let p = self.space.field.p();
        for c in self.coeffs.iter_mut() {
            *c += 1;
            if *c < p {
                break;
            }
            *c = 0;
        }
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

/// Kernel of the linear map sending `e_i` to `images[i]` (each of length
/// `codomain`), as a subspace of GF(p)^images.len().
pub fn kernel_of_images(field: Fp, codomain: usize, images: &[Vec<Scalar>]) -> Result<Subspace> {
    let n = images.len();
    let mut b = SpanBuilder::new(field, codomain + n);
    for (i, img) in images.iter().enumerate() {
        if img.len() != codomain {
            return Err(Error::DimensionMismatch {
                expected: codomain,
                found: img.len(),
            });
        }
        let mut aug = img.clone();
        aug.extend(unit_vector(n, i));
        b.insert(&aug);
    }
    let kernel_rows: Vec<Vec<Scalar>> = b
        .rows
        .iter()
        .zip(&b.lead)
        .filter(|(_, &c)| c >= codomain)
        .map(|(r, _)| r[codomain..].to_vec())
        .collect();
    Subspace::span(field, n, &kernel_rows)
}

/// Rank of a list of vectors.
pub fn rank<V: AsRef<[Scalar]>>(field: Fp, ambient: usize, vectors: &[V]) -> usize {
    let mut b = SpanBuilder::new(field, ambient);
    for v in vectors {
        b.insert(v.as_ref());
        if b.is_full() {
            break;
        }
    }
    b.dim()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    #[test]
    fn empty_span_is_zero() {
        let s = Subspace::span::<Vec<u32>>(f(3), 3, &[]).unwrap();
        assert_eq!(s.dim(), 0);
        assert_eq!(s, Subspace::zero(f(3), 3));
    }

    #[test]
    fn unit_vectors_span_everything() {
        let vs: Vec<_> = (0..3).map(|i| unit_vector(3, i)).collect();
        let s = Subspace::span(f(5), 3, &vs).unwrap();
        assert!(s.is_full());
        assert_eq!(s, Subspace::full(f(5), 3));
    }

    #[test]
    fn dependent_pair_over_gf3() {
        // 2·(1,2,0) = (2,4,0) = (2,1,0) mod 3.
        let s = Subspace::span(f(3), 3, &[vec![1, 2, 0], vec![2, 1, 0]]).unwrap();
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn mixed_ambient_is_an_error() {
        let e = Subspace::span(f(3), 3, &[vec![1, 2, 0], vec![2, 1]]).unwrap_err();
        assert!(matches!(e, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn lattice_basics() {
        let fl = f(5);
        let e1 = Subspace::span(fl, 3, &[unit_vector(3, 0)]).unwrap();
        let e12 = Subspace::span(fl, 3, &[unit_vector(3, 0), unit_vector(3, 1)]).unwrap();
        assert!(e1.is_subset(&e12).unwrap());
        assert!(!e12.is_subset(&e1).unwrap());
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        assert_eq!(Subspace::full(fl, 4).codim_of(&Subspace::zero(fl, 4)).unwrap(), 4);
        assert_eq!(e1.codim_of(&e12), Err(Error::NotContained));
    }

    #[test]
    fn quotient_examples() {
        let fl = f(3);
        let full = Subspace::full(fl, 2);
        let a = Subspace::span(fl, 2, &[vec![1, 1]]).unwrap();
        let q = full.quotient_coords(&a).unwrap();
        assert_eq!(q.target_dim(), 1);
        assert_eq!(q.apply(&[1, 0]), q.apply(&[0, 2]));
        assert_eq!(q.apply(&q.section(&[2])), vec![2]);

        assert_eq!(full.quotient_coords(&full).unwrap().target_dim(), 0);
        let iso = full.quotient_coords(&Subspace::zero(fl, 2)).unwrap();
        assert_eq!(iso.target_dim(), 2);
        assert_eq!(iso.apply(&[1, 2]), vec![1, 2]);
        assert!(a.quotient_coords(&full).is_err());
    }

    #[test]
    fn enumeration_counts_and_budget() {
        let fl = f(3);
        let z = Subspace::zero(fl, 2);
        let els: Vec<_> = z.enumerate(10).unwrap().collect();
        assert_eq!(els, vec![vec![0, 0]]);
        let full = Subspace::full(fl, 2);
        let mut els: Vec<_> = full.enumerate(9).unwrap().collect();
        els.sort();
        els.dedup();
        assert_eq!(els.len(), 9);
        let e = Subspace::full(f(5), 3).enumerate(100).err().unwrap();
        assert_eq!(e, Error::EnumerationBudget { needed: 125, cap: 100 });
    }

    #[test]
    fn hyperplane_counts() {
        let fl = f(3);
        let full2 = Subspace::full(fl, 2);
        assert_eq!(full2.hyperplanes_between(&full2).unwrap().len(), 0);
        assert_eq!(Subspace::zero(fl, 2).hyperplanes_between(&full2).unwrap().len(), 4);

        // w = span{(1,1,0)} inside GF(3)^3: the 2-dim quotient has 4 lines.
        let full3 = Subspace::full(fl, 3);
        let w = Subspace::span(fl, 3, &[vec![1, 1, 0]]).unwrap();
        let hs = w.hyperplanes_between(&full3).unwrap();
        assert_eq!(hs.len(), 4);
        for h in &hs {
            assert_eq!(h.dim(), 2);
            assert!(w.is_subset(h).unwrap());
        }
        // Oracle: every 2-dim subspace containing w, found by brute force.
        let mut brute = Vec::new();
        for v in full3.enumerate(27).unwrap() {
            let s = Subspace::span(fl, 3, &[vec![1, 1, 0], v]).unwrap();
            if s.dim() == 2 && !brute.contains(&s) {
                brute.push(s);
            }
        }
        brute.sort_by(|a, b| a.basis().cmp(b.basis()));
        assert_eq!(brute, hs);
    }

    #[test]
    fn kernel_of_simple_map() {
        let fl = f(5);
        // e0 -> (1,0), e1 -> (2,0), e2 -> (0,1): kernel spanned by (2,-1,0).
        let ker = kernel_of_images(fl, 2, &[vec![1, 0], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(ker.dim(), 1);
        assert!(ker.contains(&[2, 4, 0]));
    }
}
