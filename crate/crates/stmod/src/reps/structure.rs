//! Isomorphism and indecomposability tests.
//!
//! Both search the hom or endomorphism space. Under the enumeration cap
//! the answer is exact (full sweep of the span); above it, randomized
//! search returns a verdict that says so.

use super::{hom_basis, Module, ModuleMap};
use crate::linalg::Matrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Spans of size p^dim up to 2^ENUM_LOG2_CAP are swept exhaustively.
pub const ENUM_LOG2_CAP: f64 = 20.0;

#[derive(Debug)]
pub enum IsoResult {
    Isomorphic(ModuleMap),
    /// Exact: no invertible element exists in the hom space.
    NotIsomorphic,
    /// Randomized trials found no isomorphism but the span was too large
    /// to sweep; not a proof.
    ProbablyNot {
        trials: u32,
    },
}

impl IsoResult {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }
}

#[derive(Debug, PartialEq, Eq)]
pub enum Indecomposability {
    /// Exact: the endomorphism span contains no idempotent besides 0, 1.
    Indecomposable,
    Decomposable,
    /// Randomized Fitting trials found no splitting; not a proof.
    ProbablyIndecomposable {
        trials: u32,
    },
}

fn under_enum_cap(p: u32, dim: usize) -> bool {
    dim as f64 * (p as f64).log2() <= ENUM_LOG2_CAP
}

/// Odometer over all coefficient vectors in F_p^n, excluding zero.
fn sweep_span(p: u32, n: usize, mut visit: impl FnMut(&[u8]) -> bool) -> bool {
    let mut digits = vec![0u8; n];
    loop {
        let mut i = 0;
        while i < n {
            digits[i] += 1;
            if (digits[i] as u32) < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == n {
            return false;
        }
        if visit(&digits) {
            return true;
        }
    }
}

/// Decides M ≅ N by searching the hom space for an invertible element.
/// Cheap isomorphism invariants (per-element ranks of action(g) - I)
/// prune first; then random combinations; then, under the cap, a full
/// sweep making a negative answer exact.
pub fn is_isomorphic(m: &Module, n: &Module, seed: u64) -> IsoResult {
    if m.dim() != n.dim() {
        return IsoResult::NotIsomorphic;
    }
    if m.dim() == 0 {
        return IsoResult::Isomorphic(ModuleMap::zero(m.clone(), n.clone()));
    }
    let f = m.field();
    let d = m.dim();
    let id = Matrix::identity(f, d);
    for g in 0..m.group().order() as u8 {
        if m.action(g).sub(&id).rank() != n.action(g).sub(&id).rank() {
            return IsoResult::NotIsomorphic;
        }
    }
    let homs = hom_basis(m, n);
    if homs.dim() == 0 {
        return IsoResult::NotIsomorphic;
    }
    for b in &homs.basis {
        if b.invert().is_some() {
            let w = ModuleMap::new(m.clone(), n.clone(), b.clone())
                .expect("basis map is equivariant");
            return IsoResult::Isomorphic(w);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 64u32;
    for _ in 0..trials {
        let coeffs: Vec<u8> = (0..homs.dim())
            .map(|_| rng.random_range(0..f.p()) as u8)
            .collect();
        let cand = homs.combo(&coeffs);
        if cand.mat().invert().is_some() {
            return IsoResult::Isomorphic(cand);
        }
    }
    if under_enum_cap(f.p(), homs.dim()) {
        let mut witness = None;
        sweep_span(f.p(), homs.dim(), |coeffs| {
            let cand = homs.combo(coeffs);
            if cand.mat().invert().is_some() {
                witness = Some(cand);
                true
            } else {
                false
            }
        });
        match witness {
            Some(w) => IsoResult::Isomorphic(w),
            None => IsoResult::NotIsomorphic,
        }
    } else {
        IsoResult::ProbablyNot { trials }
    }
}

/// Decides indecomposability by idempotent search in End(M). Under the
/// cap the sweep is exhaustive; above it, randomized Fitting splittings
/// (stabilized power of a sampled endomorphism) give a one-sided test.
pub fn is_indecomposable(m: &Module, seed: u64) -> Indecomposability {
    if m.dim() == 0 {
        return Indecomposability::Decomposable;
    }
    let f = m.field();
    let end = hom_basis(m, m);
    if under_enum_cap(f.p(), end.dim()) {
        let mut split = false;
        sweep_span(f.p(), end.dim(), |coeffs| {
            let a = end.combo(coeffs);
            let mat = a.mat();
            if mat.mul(mat) == *mat && !mat.is_zero() && !mat.is_identity() {
                split = true;
                true
            } else {
                false
            }
        });
        return if split {
            Indecomposability::Decomposable
        } else {
            Indecomposability::Indecomposable
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 40u32;
    for _ in 0..trials {
        let coeffs: Vec<u8> = (0..end.dim())
            .map(|_| rng.random_range(0..f.p()) as u8)
            .collect();
        let mut pow = end.combo(&coeffs).mat().clone();
        // Square until the rank stabilizes: then ker ⊕ im splits M.
        let mut r = pow.rank();
        loop {
            let next = pow.mul(&pow);
            let nr = next.rank();
            if nr == r {
                break;
            }
            pow = next;
            r = nr;
        }
        if r > 0 && r < m.dim() {
            return Indecomposability::Decomposable;
        }
    }
    Indecomposability::ProbablyIndecomposable { trials }
}
