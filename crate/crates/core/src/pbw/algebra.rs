//! Finite-dimensional associative (super)algebras given by a multiplication
//! table on a fixed basis.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{is_zero, unit_vector, Fp, Scalar, SpanBuilder, Subspace};

/// Sparse vector: `(basis index, nonzero coefficient)`, sorted by index.
pub type Sparse = Vec<(u32, Scalar)>;

/// Associative algebra with an explicit `D × D` table.
#[derive(Debug, Clone)]
pub struct AssocAlgebra {
    field: Fp,
    dim: usize,
    table: Vec<Sparse>,
    parity: Option<Vec<u8>>,
    unit: Vec<Scalar>,
    labels: Vec<String>,
    /// Elements generating the algebra together with the unit.
    generators: Vec<Vec<Scalar>>,
}

/// Result of an associativity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssociativityReport {
    pub triples_checked: u64,
    pub exhaustive: bool,
    /// First failing `(i, j, k)`.
    pub failure: Option<(usize, usize, usize)>,
}

pub(crate) fn dense_to_sparse(v: &[Scalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i as u32, c))
        .collect()
}

impl AssocAlgebra {
    pub fn new(
        field: Fp,
        dim: usize,
        table: Vec<Sparse>,
        parity: Option<Vec<u8>>,
        unit: Vec<Scalar>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if table.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: table.len(),
            });
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: unit.len(),
            });
        }
        if let Some(par) = &parity {
            if par.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: par.len(),
                });
            }
        }
        let generators = (0..dim).map(|i| unit_vector(dim, i)).collect();
        Ok(AssocAlgebra {
            field,
            dim,
            table,
            parity,
            unit,
            labels,
            generators,
        })
    }

    /// Replaces the default generating set (every basis vector) by a
    /// smaller one; the caller guarantees it generates with the unit.
    pub fn with_generators(mut self, generators: Vec<Vec<Scalar>>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != self.dim) {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: g.len(),
            });
        }
        self.generators = generators;
        Ok(self)
    }

    pub fn generators(&self) -> &[Vec<Scalar>] {
        &self.generators
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parity(&self) -> Option<&[u8]> {
        self.parity.as_deref()
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Basis index of the unit when it is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let nz: Vec<usize> = (0..self.dim).filter(|&i| self.unit[i] != 0).collect();
        match nz.as_slice() {
            [i] if self.unit[*i] == 1 => Some(*i),
            _ => None,
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.dim, i)
    }

    /// `b_i · b_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; self.dim];
        let vnz: Vec<(usize, u64)> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (j, c as u64))
            .collect();
        for (i, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = i * self.dim;
            for &(j, b) in &vnz {
                let ab = a as u64 * b % p;
                for &(k, c) in &self.table[row + j] {
                    let slot = &mut acc[k as usize];
                    *slot = (*slot + ab * c as u64) % p;
                }
            }
        }
        acc.into_iter().map(|c| c as Scalar).collect()
    }

    /// `v · b_j` in sparse-by-dense form.
    pub fn mul_by_basis_right(&self, v: &[Scalar], j: usize) -> Vec<Scalar> {
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; self.dim];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(k, c) in &self.table[i * self.dim + j] {
                let slot = &mut acc[k as usize];
                *slot = (*slot + a as u64 * c as u64) % p;
            }
        }
        acc.into_iter().map(|c| c as Scalar).collect()
    }

    /// `b_i · v`.
    pub fn mul_by_basis_left(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; self.dim];
        for (j, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(k, c) in &self.table[i * self.dim + j] {
                let slot = &mut acc[k as usize];
                *slot = (*slot + a as u64 * c as u64) % p;
            }
        }
        acc.into_iter().map(|c| c as Scalar).collect()
    }

    /// `[u, v] = uv - vu`.
    pub fn commutator(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.field.sub_vec(&self.mul(u, v), &self.mul(v, u))
    }

    /// `[u, b_j]`.
    pub fn commutator_with_basis(&self, u: &[Scalar], j: usize) -> Vec<Scalar> {
        self.field
            .sub_vec(&self.mul_by_basis_right(u, j), &self.mul_by_basis_left(j, u))
    }

    /// Parity of `v` if it is homogeneous (zero counts as even).
    pub fn homogeneous_parity(&self, v: &[Scalar]) -> Result<u8> {
        let par = self.parity.as_ref().ok_or(Error::NoGrading)?;
        let mut seen: Option<u8> = None;
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            match seen {
                None => seen = Some(par[i]),
                Some(s) if s != par[i] => return Err(Error::NotHomogeneous),
                _ => {}
            }
        }
        Ok(seen.unwrap_or(0))
    }

    /// `(u, v) = uv - (-1)^{|u||v|} vu` for homogeneous `u`, `v`.
    pub fn super_commutator(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        let a = self.homogeneous_parity(u)?;
        let b = self.homogeneous_parity(v)?;
        let uv = self.mul(u, v);
        let vu = self.mul(v, u);
        Ok(if a == 1 && b == 1 {
            self.field.add_vec(&uv, &vu)
        } else {
            self.field.sub_vec(&uv, &vu)
        })
    }

    /// Coordinate subspace spanned by the even basis vectors.
    pub fn even_part(&self) -> Result<Subspace> {
        let par = self.parity.as_ref().ok_or(Error::NoGrading)?;
        Ok(Subspace::coordinate(
            self.field,
            self.dim,
            (0..self.dim).filter(|&i| par[i] == 0),
        ))
    }

    /// Coordinate subspace spanned by the odd basis vectors.
    pub fn odd_part(&self) -> Result<Subspace> {
        let par = self.parity.as_ref().ok_or(Error::NoGrading)?;
        Ok(Subspace::coordinate(
            self.field,
            self.dim,
            (0..self.dim).filter(|&i| par[i] == 1),
        ))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// `span{a·b : a ∈ A, b ∈ B}`, stopping early once it fills `limit`
    /// dimensions (when given).
    pub fn product_span(&self, a: &Subspace, b: &Subspace, limit: Option<usize>) -> Subspace {
        let mut builder = SpanBuilder::new(self.field, self.dim);
        let cap = limit.unwrap_or(self.dim).min(self.dim);
        'outer: for x in a.basis() {
            for y in b.basis() {
                builder.insert(&self.mul(x, y));
                if builder.dim() >= cap {
                    break 'outer;
                }
            }
        }
        builder.finish()
    }

    /// `S^k` for `k ≥ 1`.
    pub fn subspace_power(&self, s: &Subspace, k: usize) -> Subspace {
        assert!(k >= 1, "power must be positive");
        let mut cur = s.clone();
        for _ in 1..k {
            if cur.is_zero() {
                break;
            }
            cur = self.product_span(&cur, s, None);
        }
        cur
    }

    /// Unit laws `1·b = b·1 = b` for every basis element.
    pub fn check_unit(&self) -> bool {
        (0..self.dim).all(|i| {
            let b = self.basis_vector(i);
            self.mul(&self.unit, &b) == b && self.mul(&b, &self.unit) == b
        })
    }

    /// Every product of homogeneous basis elements is supported on the sum
    /// of their parities.
    pub fn check_grading(&self) -> bool {
        let Some(par) = &self.parity else { return true };
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let want = par[i] ^ par[j];
                self.mul_basis(i, j).iter().all(|&(k, _)| par[k as usize] == want)
            })
        })
    }

    /// `(b_i b_j) b_k = b_i (b_j b_k)` on every triple, or on `samples`
    /// triples drawn by `pick` when `dim > exhaustive_limit`.
    pub fn check_associativity<F>(&self, exhaustive_limit: usize, samples: u64, mut pick: F) -> AssociativityReport
    where
        F: FnMut(usize) -> usize,
    {
        let check = |i: usize, j: usize, k: usize| -> bool {
            let bi = self.basis_vector(i);
            let bk = self.basis_vector(k);
            let ij = self.mul(&bi, &self.basis_vector(j));
            let jk = self.mul(&self.basis_vector(j), &bk);
            self.mul(&ij, &bk) == self.mul(&bi, &jk)
        };
        let d = self.dim;
        if d <= exhaustive_limit {
            let mut n = 0;
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        n += 1;
                        if !check(i, j, k) {
                            return AssociativityReport {
                                triples_checked: n,
                                exhaustive: true,
                                failure: Some((i, j, k)),
                            };
                        }
                    }
                }
            }
            AssociativityReport {
                triples_checked: n,
                exhaustive: true,
                failure: None,
            }
        } else {
            for n in 0..samples {
                let (i, j, k) = (pick(d), pick(d), pick(d));
                if !check(i, j, k) {
                    return AssociativityReport {
                        triples_checked: n + 1,
                        exhaustive: false,
                        failure: Some((i, j, k)),
                    };
                }
            }
            AssociativityReport {
                triples_checked: samples,
                exhaustive: false,
                failure: None,
            }
        }
    }

    /// `A / J` for a two-sided ideal `J`. The quotient basis is the set of
    /// non-pivot coordinates of `J`'s RREF, so the induced parity is
    /// available exactly when `J` is graded.
    pub fn quotient(&self, j: &Subspace) -> Result<QuotientAlgebra> {
        if j.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: j.ambient_dim(),
            });
        }
        for v in j.basis() {
            for k in 0..self.dim {
                if !j.contains(&self.mul_by_basis_left(k, v)) || !j.contains(&self.mul_by_basis_right(v, k)) {
                    return Err(Error::NotAnIdeal(format!(
                        "product with basis element {k} leaves the subspace"
                    )));
                }
            }
        }
        let pivots: std::collections::HashSet<usize> = j.pivots().iter().copied().collect();
        let keep: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let q = keep.len();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = j.residue(v);
            keep.iter().map(|&c| r[c]).collect()
        };
        let mut table = Vec::with_capacity(q * q);
        for &a in &keep {
            for &b in &keep {
                let prod = self.mul(&self.basis_vector(a), &self.basis_vector(b));
                table.push(dense_to_sparse(&project(&prod)));
            }
        }
        let graded = match &self.parity {
            Some(par) => j.basis().iter().all(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, _)| par[i])
                    .collect::<std::collections::HashSet<_>>()
                    .len()
                    <= 1
            }),
            None => false,
        };
        let parity = if graded {
            self.parity
                .as_ref()
                .map(|par| keep.iter().map(|&c| par[c]).collect())
        } else {
            None
        };
        let unit = project(&self.unit);
        let collapsed = is_zero(&unit);
        let labels = keep.iter().map(|&c| self.labels.get(c).cloned().unwrap_or_default()).collect();
        let generators = self.generators.iter().map(|g| project(g)).collect();
        let algebra = AssocAlgebra::new(self.field, q, table, parity, unit, labels)?.with_generators(generators)?;
        Ok(QuotientAlgebra {
            algebra,
            unit_collapsed: collapsed,
            kept: keep,
        })
    }
}

/// `A / J` plus bookkeeping about the projection.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    pub algebra: AssocAlgebra,
    /// The unit maps to zero (`J` is everything).
    pub unit_collapsed: bool,
    /// Basis indices of `A` whose images form the quotient basis.
    pub kept: Vec<usize>,
}
