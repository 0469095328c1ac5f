//! Extension of the p-map from basis values to arbitrary even elements.

use std::collections::HashMap;
use std::sync::Mutex;

use super::LieSuperData;
use crate::linalg::{is_zero, Scalar};

/// `Σ_{i=1}^{p-1} s_i(u, v)` where `i·s_i` is the coefficient of `λ^{i-1}`
/// in `(ad(λu + v))^{p-1}(u)`.
///
/// Works over `L[λ]` with coordinates that are polynomials of degree
/// `≤ p-1`: `coeffs[d]` is the `λ^d` part.
pub(crate) fn jacobson_correction(l: &LieSuperData, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let f = l.field();
    let p = f.p() as usize;
    let n = l.dim();
    let mut coeffs: Vec<Vec<Scalar>> = vec![u.to_vec()];
    for _ in 0..p - 1 {
        let mut next = vec![vec![0; n]; coeffs.len() + 1];
        for (d, w) in coeffs.iter().enumerate() {
            if is_zero(w) {
                continue;
            }
            let wu = l.bracket(w, u);
            let wv = l.bracket(w, v);
            f.axpy(&mut next[d + 1], 1, &wu);
            f.axpy(&mut next[d], 1, &wv);
        }
        coeffs = next;
    }
    let mut out = vec![0; n];
    for i in 1..p {
        if let Some(c) = coeffs.get(i - 1) {
            f.axpy(&mut out, f.inv(i as Scalar), c);
        }
    }
    out
}

/// Peels `x = α b + y` one basis summand at a time:
/// `(αb)^[p] = α^p b^[p]`, then `(u+v)^[p] = u^[p] + v^[p] + Σ s_i(u,v)`.
pub(crate) fn extend(l: &LieSuperData, x: &[Scalar], order: Option<&[usize]>) -> Vec<Scalar> {
    let f = l.field();
    let n = l.dim();
    let default_order: Vec<usize> = (0..l.n0()).collect();
    let order = order.unwrap_or(&default_order);
    let mut acc = vec![0; n];
    let mut prefix = vec![0; n];
    for &k in order {
        let a = x[k];
        if a == 0 {
            continue;
        }
        let mut term = vec![0; n];
        term[k] = a;
        // α^p = α in GF(p), but keep the axiom's shape.
        f.axpy(&mut acc, f.pow(a, f.p() as u64), l.pmap_basis(k));
        if !is_zero(&prefix) {
            let s = jacobson_correction(l, &prefix, &term);
            f.axpy(&mut acc, 1, &s);
        }
        f.axpy(&mut prefix, 1, &term);
    }
    acc
}

/// Memoizing wrapper around [`LieSuperData::pmap_extend`].
pub struct PMapClosure<'a> {
    data: &'a LieSuperData,
    memo: Mutex<HashMap<Vec<Scalar>, Vec<Scalar>>>,
}

impl<'a> PMapClosure<'a> {
    pub fn new(data: &'a LieSuperData) -> Self {
        PMapClosure {
            data,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn data(&self) -> &'a LieSuperData {
        self.data
    }

    pub fn power(&self, x: &[Scalar]) -> Vec<Scalar> {
        if let Some(v) = self.memo.lock().unwrap().get(x) {
            return v.clone();
        }
        let v = self.data.pmap_extend(x);
        self.memo.lock().unwrap().insert(x.to_vec(), v.clone());
        v
    }

    /// `x^{[p]^k}`.
    pub fn iterate(&self, x: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut w = x.to_vec();
        for _ in 0..k {
            w = self.power(&w);
        }
        w
    }
}
