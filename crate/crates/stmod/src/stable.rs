//! The stable module category: projective covers, syzygies, maps modulo
//! projectives, and cones.
//!
//! Everything here is built around a [`StableCtx`], which owns resource
//! caps and memo tables. Syzygies are computed by iterated minimal
//! covers, so for a fixed context the module `Omega^i(k)` is *the same
//! matrix data* every time it is produced. Cohomological constructions
//! that must compose on the nose (cup products, periodicity witnesses)
//! rely on that determinism.
//!
//! Projective covers and syzygies require a p-group, where projective =
//! free and the cover is minimal iff its kernel sits inside the radical.
//! Maps factoring through a projective are a different matter: for any
//! finite group a map factors through a projective iff it factors
//! through a single copy of kG, so `phom_basis`, `stable_hom`, and
//! `is_stably_zero` work over every finite group.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::Arc;

use crate::error::{internal, Error, Result};
use crate::groups::Group;
use crate::linalg::{Matrix, PrimeField, SolveCache, Subspace};
use crate::reps::{
    direct_sum, hom_basis, quotient_module, radical_and_socle, require_p_group, sub_module,
    HomSpace, Module, ModuleMap,
};

/// Resource limits. Degree-indexed searches stop at `degree`; syzygy
/// iteration stops at `syzygy` (cup products need chain modules out to
/// twice the degree cap, hence the default ratio); exhaustive
/// enumerations refuse to run past `2^enum_log2` candidates; groups are
/// rejected above `order` elements.
#[derive(Clone, Debug)]
pub struct Caps {
    pub degree: i64,
    pub syzygy: i64,
    pub enum_log2: f64,
    pub order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            degree: 12,
            syzygy: 24,
            enum_log2: 20.0,
            order: 64,
        }
    }
}

/// A projective-free module together with the split inclusion and
/// projection exhibiting it as a direct summand of the original:
/// `project . include = id` on `reduced`, and the complement of the
/// image of `include . project` is free of rank `free_rank`.
pub struct Strip {
    pub reduced: Module,
    pub include: ModuleMap,
    pub project: ModuleMap,
    pub free_rank: usize,
}

/// Minimal projective cover `free = kG^rank -> m` with its kernel
/// embedded back into `free`. Minimality: the kernel lies inside
/// rad(free), which is checked at construction time. The solver caches
/// let lifts through the cover be computed repeatedly without
/// re-eliminating.
pub struct Cover {
    pub free: Module,
    pub cover: ModuleMap,
    pub kernel: Module,
    pub embed: ModuleMap,
    pub rank: usize,
    cover_solve: SolveCache,
    embed_solve: SolveCache,
}

/// Hom(m, n) modulo maps factoring through a projective. `reps` holds
/// one concrete matrix per stable basis class; all equality questions
/// go through `stable_coords`, never through matrix comparison, because
/// representatives are only canonical for the context that built them.
pub struct StableHom {
    hom: HomSpace,
    phom: Subspace,
    reps: Vec<ModuleMap>,
    solve: Option<SolveCache>,
    phom_dim: usize,
}

/// Cone of `phi: A -> B` after splitting projective summands off both
/// ends: the pushout `(B + I(A)) / A` along the injective hull
/// embedding, with the triangle maps `B -> cone` and
/// `cone -> Omega^{-1}(A)`. The shift target is exactly the module
/// `syzygy(A, -1)` produces.
pub struct Cone {
    pub module: Module,
    pub from_target: ModuleMap,
    pub to_shift: ModuleMap,
}

#[derive(Default)]
struct Inner {
    strips: HashMap<u64, Rc<Strip>>,
    covers: HashMap<u64, Rc<Cover>>,
    phoms: HashMap<(u64, u64), Rc<Subspace>>,
    stable_homs: HashMap<(u64, u64), Rc<StableHom>>,
    periodicity: HashMap<u64, Option<Rc<crate::cohom::PeriodicityWitness>>>,
    ring_gens: HashMap<u64, Rc<crate::cohom::RingGenerators>>,
}

/// Computation context: caps, the seed echoed into reports, and memo
/// tables keyed by module fingerprints. Single-threaded by design; use
/// one context per line of work.
pub struct StableCtx {
    caps: Caps,
    seed: u64,
    inner: RefCell<Inner>,
}

impl StableCtx {
    pub fn new(seed: u64) -> StableCtx {
        StableCtx::with_caps(Caps::default(), seed)
    }

    pub fn with_caps(caps: Caps, seed: u64) -> StableCtx {
        StableCtx {
            caps,
            seed,
            inner: RefCell::new(Inner::default()),
        }
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub(crate) fn cached_periodicity(
        &self,
        key: u64,
    ) -> Option<Option<Rc<crate::cohom::PeriodicityWitness>>> {
        self.inner.borrow().periodicity.get(&key).cloned()
    }

    pub(crate) fn store_periodicity(
        &self,
        key: u64,
        w: Option<Rc<crate::cohom::PeriodicityWitness>>,
    ) {
        self.inner.borrow_mut().periodicity.insert(key, w);
    }

    pub(crate) fn cached_ring_gens(&self, key: u64) -> Option<Rc<crate::cohom::RingGenerators>> {
        self.inner.borrow().ring_gens.get(&key).cloned()
    }

    pub(crate) fn store_ring_gens(&self, key: u64, v: Rc<crate::cohom::RingGenerators>) {
        self.inner.borrow_mut().ring_gens.insert(key, v);
    }

    /// Splits off free direct summands until none remain. For a p-group
    /// the norm element acts as zero exactly on projective-free
    /// modules, and any module where it acts nonzero has a free summand
    /// that the norm locates.
    pub fn strip(&self, m: &Module) -> Result<Rc<Strip>> {
        if let Some(s) = self.inner.borrow().strips.get(&m.fingerprint()) {
            return Ok(s.clone());
        }
        require_p_group(m, "projective stripping")?;
        let f = m.field();
        let n = m.group().order();
        let mut reduced = m.clone();
        let mut include = ModuleMap::identity(m);
        let mut project = ModuleMap::identity(m);
        let mut free_rank = 0usize;
        loop {
            let norm = norm_matrix(&reduced);
            let Some(gen_col) = (0..reduced.dim()).find(|&j| norm.col(j).iter().any(|&x| x != 0))
            else {
                break;
            };
            // F: kG -> reduced, free on the column the norm exposed.
            // Nonzero image of the norm means soc(kG) embeds, so F is
            // injective and splits by self-injectivity of kG.
            let dim = reduced.dim();
            let fmat = Matrix::from_fn(f, dim, n, |i, g| reduced.action(g as u8).at(i, gen_col));
            if fmat.rank() != n {
                return Err(internal!(
                    "free embedding from norm column is not injective on {}",
                    reduced.name()
                ));
            }
            // Retraction r with r.F = id, solved inside Hom(reduced, kG)
            // via the basis Phi_i(v)_g = (g^{-1} v)_i.
            let phis = maps_into_free(&reduced);
            let sys = Matrix::from_cols(
                f,
                n * n,
                &phis
                    .iter()
                    .map(|phi| phi.mul(&fmat).flatten())
                    .collect::<Vec<_>>(),
            );
            let rhs = Matrix::identity(f, n).flatten();
            let sol = sys
                .solve(&Matrix::col_vector(f, &rhs))?
                .ok_or_else(|| internal!("free summand retraction is unsolvable"))?;
            let mut rmat = Matrix::zero(f, n, dim);
            for (i, phi) in phis.iter().enumerate() {
                let c = sol.particular.at(i, 0);
                if c != 0 {
                    rmat = rmat.add(&phi.scale(c));
                }
            }
            let idem = fmat.mul(&rmat);
            let kernel_vecs = idem.kernel_vectors();
            let (next, inc_step) = sub_module(&reduced, &kernel_vecs, "strip step")?;
            let proj_mat = SolveCache::new(inc_step.mat())
                .solve_mat(&Matrix::identity(f, dim).sub(&idem))
                .ok_or_else(|| internal!("complement projection is unsolvable"))?;
            let proj_step = ModuleMap::new(reduced.clone(), next.clone(), proj_mat)?;
            include = include.compose(&inc_step);
            project = proj_step.compose(&project);
            free_rank += 1;
            reduced = next;
        }
        if !project.compose(&include).mat().is_identity() {
            return Err(internal!("strip retraction failed on {}", m.name()));
        }
        let reduced = reduced.renamed(&format!("strip({})", m.name()));
        let include = ModuleMap::new(reduced.clone(), m.clone(), include.mat().clone())?;
        let project = ModuleMap::new(m.clone(), reduced.clone(), project.mat().clone())?;
        let strip = Rc::new(Strip {
            reduced,
            include,
            project,
            free_rank,
        });
        self.inner
            .borrow_mut()
            .strips
            .insert(m.fingerprint(), strip.clone());
        Ok(strip)
    }

    /// Minimal projective cover. The cover surjection sends the free
    /// generator (t, g) to g.m_t where the m_t are standard basis
    /// vectors lifting a basis of m / rad m; Nakayama makes this onto,
    /// and top-minimality puts the kernel inside rad(kG^r).
    pub fn cover(&self, m: &Module) -> Result<Rc<Cover>> {
        if let Some(c) = self.inner.borrow().covers.get(&m.fingerprint()) {
            return Ok(c.clone());
        }
        require_p_group(m, "projective cover")?;
        let f = m.field();
        let group = m.group().clone();
        let n = group.order();
        let (rad, _) = radical_and_socle(m)?;
        let rad_space = Subspace::from_span(f, m.dim(), rad);
        let top_cols: Vec<usize> = (0..m.dim())
            .filter(|c| rad_space.pivots().binary_search(c).is_err())
            .collect();
        let rank = top_cols.len();
        let free = free_module(&group, f, rank);
        let mut mat = Matrix::zero(f, m.dim(), rank * n);
        for (t, &c) in top_cols.iter().enumerate() {
            for g in 0..n {
                let a = m.action(g as u8);
                for i in 0..m.dim() {
                    mat.set(i, t * n + g, a.at(i, c));
                }
            }
        }
        let cover = ModuleMap::new(free.clone(), m.clone(), mat)?;
        let cover_solve = SolveCache::new(cover.mat());
        if cover_solve.rank() != m.dim() {
            return Err(internal!("cover of {} is not surjective", m.name()));
        }
        let kernel_vecs: Vec<Vec<u8>> = {
            let k = cover_solve.kernel();
            (0..k.cols()).map(|j| k.col(j)).collect()
        };
        for v in &kernel_vecs {
            for t in 0..rank {
                let aug = v[t * n..(t + 1) * n]
                    .iter()
                    .fold(0u8, |acc, &x| f.add(acc, x));
                if aug != 0 {
                    return Err(internal!("cover kernel of {} leaves the radical", m.name()));
                }
            }
        }
        let (kernel, embed) = sub_module(&free, &kernel_vecs, &format!("Omega({})", m.name()))?;
        let embed_solve = SolveCache::new(embed.mat());
        let cov = Rc::new(Cover {
            free,
            cover,
            kernel,
            embed,
            rank,
            cover_solve,
            embed_solve,
        });
        self.inner
            .borrow_mut()
            .covers
            .insert(m.fingerprint(), cov.clone());
        Ok(cov)
    }

    /// `Omega^n(m)` for any integer n. Free summands are split off
    /// first (that is all `n = 0` does); positive syzygies iterate
    /// minimal covers; negative ones go through the dual,
    /// `Omega^{-j}(m) = (Omega^j(m*))*`, which matches the cokernel of
    /// an injective hull because duals of p-group modules swap covers
    /// and hulls.
    pub fn syzygy(&self, m: &Module, n: i64) -> Result<Module> {
        if n.unsigned_abs() as i64 > self.caps.syzygy {
            return Err(Error::DegreeCap {
                requested: n,
                cap: self.caps.syzygy,
            });
        }
        let base = self.strip(m)?.reduced.clone();
        if n == 0 {
            return Ok(base);
        }
        let mut cur = if n > 0 { base } else { base.dual() };
        for _ in 0..n.unsigned_abs() {
            cur = self.cover(&cur)?.kernel.clone();
        }
        let out = if n > 0 { cur } else { cur.dual() };
        Ok(out.renamed(&format!("Omega^{}({})", n, m.name())))
    }

    /// The canonical chain module `T^i = Omega^i(k)`. Tate classes in
    /// degree i are stable maps out of this module.
    pub fn chain_module(&self, group: &Arc<Group>, f: PrimeField, i: i64) -> Result<Module> {
        self.syzygy(&Module::trivial(group.clone(), f), i)
    }

    /// Span of Hom(m, kG) . Hom(kG, n) inside the flattened hom
    /// coordinates. Valid for every finite group: factoring through a
    /// projective is equivalent to factoring through one copy of kG.
    pub fn phom_subspace(&self, m: &Module, n: &Module) -> Result<Rc<Subspace>> {
        let key = (m.fingerprint(), n.fingerprint());
        if let Some(s) = self.inner.borrow().phoms.get(&key) {
            return Ok(s.clone());
        }
        check_compatible(m, n)?;
        let f = m.field();
        let ambient = m.dim() * n.dim();
        let mut space = Subspace::empty(f, ambient);
        let intos = maps_into_free(m);
        let froms = maps_from_free(n);
        for psi in &froms {
            for phi in &intos {
                space.insert(&psi.mul(phi).flatten());
            }
        }
        let space = Rc::new(space);
        self.inner.borrow_mut().phoms.insert(key, space.clone());
        Ok(space)
    }

    /// Hom(m, n) with the projectively-trivial subspace split off.
    pub fn stable_hom(&self, m: &Module, n: &Module) -> Result<Rc<StableHom>> {
        let key = (m.fingerprint(), n.fingerprint());
        if let Some(s) = self.inner.borrow().stable_homs.get(&key) {
            return Ok(s.clone());
        }
        let phom = self.phom_subspace(m, n)?;
        let hom = hom_basis(m, n);
        let f = m.field();
        let mut working = (*phom).clone();
        let mut reps = Vec::new();
        for i in 0..hom.dim() {
            let cand = hom.map(i);
            if working.insert(&cand.mat().flatten()) {
                reps.push(cand);
            }
        }
        if phom.dim() + reps.len() != hom.dim() {
            return Err(internal!(
                "projective maps escape Hom({}, {})",
                m.name(),
                n.name()
            ));
        }
        let phom_dim = phom.dim();
        let solve = if hom.dim() > 0 {
            let cols: Vec<Vec<u8>> = phom
                .basis()
                .iter()
                .cloned()
                .chain(reps.iter().map(|r| r.mat().flatten()))
                .collect();
            Some(SolveCache::new(&Matrix::from_cols(
                f,
                m.dim() * n.dim(),
                &cols,
            )))
        } else {
            None
        };
        let sh = Rc::new(StableHom {
            hom,
            phom: (*phom).clone(),
            reps,
            solve,
            phom_dim,
        });
        self.inner.borrow_mut().stable_homs.insert(key, sh.clone());
        Ok(sh)
    }

    /// Whether `phi` factors through a projective module.
    pub fn is_stably_zero(&self, phi: &ModuleMap) -> Result<bool> {
        if phi.is_zero() {
            return Ok(true);
        }
        let space = self.phom_subspace(phi.domain(), phi.codomain())?;
        Ok(space.contains(&phi.mat().flatten()))
    }

    /// `Omega^n(phi)`: the induced map on syzygies, with domain and
    /// codomain exactly the modules `syzygy` returns (same
    /// fingerprints). Positive steps lift through the cached covers one
    /// free generator at a time, so `cover_N . lift = phi . cover_M`
    /// holds exactly and the result is the restriction to kernels.
    /// Well-defined modulo projectives.
    pub fn omega_map(&self, phi: &ModuleMap, n: i64) -> Result<ModuleMap> {
        if n.unsigned_abs() as i64 > self.caps.syzygy {
            return Err(Error::DegreeCap {
                requested: n,
                cap: self.caps.syzygy,
            });
        }
        let sm = self.strip(phi.domain())?;
        let sn = self.strip(phi.codomain())?;
        let stripped = sn.project.compose(phi).compose(&sm.include);
        if n == 0 {
            return Ok(stripped);
        }
        let mut cur = if n > 0 { stripped } else { stripped.dual() };
        for _ in 0..n.unsigned_abs() {
            cur = self.omega_step(&cur)?;
        }
        Ok(if n > 0 { cur } else { cur.dual() })
    }

    fn omega_step(&self, phi: &ModuleMap) -> Result<ModuleMap> {
        let cm = self.cover(phi.domain())?;
        let cn = self.cover(phi.codomain())?;
        let f = phi.mat().field();
        let n = phi.domain().group().order();
        let target = phi.mat().mul(cm.cover.mat());
        let mut lift = Matrix::zero(f, cn.free.dim(), cm.free.dim());
        for t in 0..cm.rank {
            // Column (t, e) of the cover is the generator image m_t.
            let x = cn
                .cover_solve
                .solve_col(&target.col(t * n))
                .ok_or_else(|| internal!("cover lift is unsolvable"))?;
            for g in 0..n {
                let col = cn.free.action(g as u8).mul(&Matrix::col_vector(f, &x));
                for i in 0..cn.free.dim() {
                    lift.set(i, t * n + g, col.at(i, 0));
                }
            }
        }
        if cn.cover.mat().mul(&lift) != target {
            return Err(internal!("cover lift fails to commute"));
        }
        let rhs = lift.mul(cm.embed.mat());
        let induced = cn
            .embed_solve
            .solve_mat(&rhs)
            .ok_or_else(|| internal!("lift does not preserve cover kernels"))?;
        ModuleMap::new(cm.kernel.clone(), cn.kernel.clone(), induced)
    }

    /// Completes `phi` (with projective summands split off its ends) to
    /// a triangle `A -> B -> cone -> Omega^{-1}(A)`.
    pub fn cone(&self, phi: &ModuleMap) -> Result<Cone> {
        let sm = self.strip(phi.domain())?;
        let sn = self.strip(phi.codomain())?;
        let psi = sn.project.compose(phi).compose(&sm.include);
        let a = psi.domain().clone();
        let b = psi.codomain().clone();
        let f = a.field();
        // Injective hull of a: dualize the minimal cover of a*.
        let hull_cover = self.cover(&a.dual())?;
        let hull = hull_cover.free.dual();
        let into_hull = ModuleMap::new(
            a.clone(),
            hull.clone(),
            hull_cover.cover.mat().transpose(),
        )?;
        let (sum, parts) = direct_sum(&[&b, &hull]);
        let graph = Matrix::vstack(&[psi.mat(), into_hull.mat()]);
        let graph_cols: Vec<Vec<u8>> = (0..a.dim()).map(|j| graph.col(j)).collect();
        let (cone, quot) = quotient_module(
            &sum,
            &graph_cols,
            &format!("cone({} -> {})", a.name(), b.name()),
        )?;
        if cone.dim() + a.dim() != b.dim() + hull.dim() {
            return Err(internal!("cone dimension is off; the hull embedding degenerated"));
        }
        let from_target = quot.compose(&parts[0].0);
        // Cokernel of the hull embedding is Omega^{-1}(a) on the nose:
        // the dual of the cover kernel, projected via the transposed
        // kernel embedding.
        let shift = hull_cover.kernel.dual().renamed(&format!("Omega^-1({})", a.name()));
        let onto_shift = ModuleMap::new(
            hull.clone(),
            shift.clone(),
            hull_cover.embed.mat().transpose(),
        )?;
        let through = onto_shift.compose(&parts[1].1);
        let section = SolveCache::new(quot.mat())
            .solve_mat(&Matrix::identity(f, cone.dim()))
            .ok_or_else(|| internal!("cone projection has no section"))?;
        let to_shift = ModuleMap::new(cone.clone(), shift, through.mat().mul(&section))?;
        if !to_shift.compose(&from_target).is_zero() {
            return Err(internal!("cone triangle fails to compose to zero"));
        }
        Ok(Cone {
            module: cone,
            from_target,
            to_shift,
        })
    }
}

impl StableHom {
    /// Dimension of the stable hom space.
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn hom_dim(&self) -> usize {
        self.hom.dim()
    }

    pub fn phom_dim(&self) -> usize {
        self.phom_dim
    }

    pub fn rep(&self, t: usize) -> &ModuleMap {
        &self.reps[t]
    }

    pub fn reps(&self) -> &[ModuleMap] {
        &self.reps
    }

    pub fn is_stably_zero(&self, phi: &ModuleMap) -> bool {
        self.phom.contains(&phi.mat().flatten())
    }

    /// Coordinates of the stable class of `phi` against `reps`. Two
    /// maps are stably equal iff their coordinates agree.
    pub fn stable_coords(&self, phi: &ModuleMap) -> Result<Vec<u8>> {
        let flat = phi.mat().flatten();
        let Some(solve) = &self.solve else {
            if flat.iter().any(|&x| x != 0) {
                return Err(internal!("nonzero map in a zero hom space"));
            }
            return Ok(Vec::new());
        };
        let sol = solve
            .solve_col(&flat)
            .ok_or_else(|| internal!("map lies outside its hom space"))?;
        Ok(sol[self.phom_dim..].to_vec())
    }

    /// The map with the given stable coordinates (a canonical
    /// representative, not the only one).
    pub fn combo(&self, coeffs: &[u8]) -> ModuleMap {
        assert_eq!(coeffs.len(), self.reps.len());
        let mut acc: Option<ModuleMap> = None;
        for (rep, &c) in self.reps.iter().zip(coeffs) {
            if c != 0 {
                let term = rep.scale(c);
                acc = Some(match acc {
                    Some(a) => a.add(&term),
                    None => term,
                });
            }
        }
        acc.unwrap_or_else(|| {
            ModuleMap::zero(self.reps[0].domain().clone(), self.reps[0].codomain().clone())
        })
    }

    /// Fingerprints of the representative matrices, stable across runs
    /// of the same build on the same inputs.
    pub fn rep_fingerprints(&self) -> Vec<u64> {
        self.reps
            .iter()
            .map(|r| {
                let mut h = crate::fingerprint::Fnv64::new();
                h.write(r.mat().data());
                h.finish()
            })
            .collect()
    }
}

/// Sum of all group actions. Zero iff the module is projective-free
/// (over a p-group); its rank counts free summands.
pub fn norm_matrix(m: &Module) -> Matrix {
    let f = m.field();
    let mut acc = Matrix::zero(f, m.dim(), m.dim());
    for g in 0..m.group().order() {
        acc = acc.add(m.action(g as u8));
    }
    acc
}

/// Basis of Hom(m, kG): for each coordinate i of m, the map
/// v |-> sum_g (g^{-1} v)_i e_g. Row g of the i-th matrix is row i of
/// the action of g^{-1}. This is the natural isomorphism with m*.
pub fn maps_into_free(m: &Module) -> Vec<Matrix> {
    let f = m.field();
    let n = m.group().order();
    (0..m.dim())
        .map(|i| {
            Matrix::from_fn(f, n, m.dim(), |g, j| {
                m.action(m.group().inv(g as u8)).at(i, j)
            })
        })
        .collect()
}

/// Basis of Hom(kG, m): for each coordinate j of m, the map
/// e_g |-> g.e_j. Column g of the j-th matrix is column j of the action
/// of g. This is the natural isomorphism with m itself.
pub fn maps_from_free(m: &Module) -> Vec<Matrix> {
    let f = m.field();
    let n = m.group().order();
    (0..m.dim())
        .map(|j| Matrix::from_fn(f, m.dim(), n, |i, g| m.action(g as u8).at(i, j)))
        .collect()
}

/// kG^r with the generator basis (t, g) at index t|G| + g, acted on by
/// left translation in each block.
pub fn free_module(group: &Arc<Group>, f: PrimeField, r: usize) -> Module {
    if r == 0 {
        return Module::zero(group.clone(), f);
    }
    let reg = Module::regular(group.clone(), f);
    if r == 1 {
        return reg;
    }
    let n = group.order();
    let action = (0..n)
        .map(|g| {
            let a = reg.action(g as u8);
            let parts: Vec<&Matrix> = (0..r).map(|_| a).collect();
            Matrix::block_diag(&parts)
        })
        .collect();
    Module::new(group.clone(), f, &format!("kG^{}", r), action)
        .expect("block sum of regular actions is a module")
}

fn check_compatible(m: &Module, n: &Module) -> Result<()> {
    if m.group().fingerprint() != n.group().fingerprint() || m.field() != n.field() {
        return Err(Error::Incompatible(format!(
            "{} and {} live over different group algebras",
            m.name(),
            n.name()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::is_isomorphic;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn cyclic(n: usize, p: u64) -> (Arc<Group>, PrimeField) {
        (Arc::new(Group::cyclic(n).unwrap()), f(p))
    }

    fn iso(ctx_seed: u64, a: &Module, b: &Module) -> bool {
        is_isomorphic(a, b, ctx_seed).is_iso()
    }

    #[test]
    fn strip_removes_regular_summand() {
        let (g, f2) = cyclic(4, 2);
        let ctx = StableCtx::new(0);
        let s = ctx.strip(&Module::regular(g.clone(), f2)).unwrap();
        assert_eq!(s.reduced.dim(), 0);
        assert_eq!(s.free_rank, 1);

        let k = Module::trivial(g.clone(), f2);
        let s = ctx.strip(&k).unwrap();
        assert_eq!(s.reduced.dim(), 1);
        assert_eq!(s.free_rank, 0);
        assert!(s.include.mat().is_identity());
    }

    #[test]
    fn strip_of_mixed_sum_keeps_trivial_part() {
        let (g, f2) = cyclic(2, 2);
        let ctx = StableCtx::new(0);
        let k = Module::trivial(g.clone(), f2);
        let reg = Module::regular(g.clone(), f2);
        let (sum, _) = direct_sum(&[&k, &reg]);
        let s = ctx.strip(&sum).unwrap();
        assert_eq!(s.reduced.dim(), 1);
        assert_eq!(s.free_rank, 1);
        assert!(s.project.compose(&s.include).mat().is_identity());
        assert!(iso(0, &s.reduced, &k));
        // include . project is idempotent with image the summand.
        let e = s.include.compose(&s.project);
        assert_eq!(e.mat().mul(e.mat()), *e.mat());
    }

    #[test]
    fn trivial_group_has_no_stable_content() {
        let (g, f2) = cyclic(1, 2);
        let ctx = StableCtx::new(0);
        let k = Module::trivial(g, f2);
        let s = ctx.strip(&k).unwrap();
        assert_eq!(s.reduced.dim(), 0);
        assert_eq!(s.free_rank, 1);
        assert_eq!(ctx.syzygy(&k, 3).unwrap().dim(), 0);
    }

    #[test]
    fn cover_of_trivial_over_c4() {
        let (g, f2) = cyclic(4, 2);
        let ctx = StableCtx::new(0);
        let k = Module::trivial(g.clone(), f2);
        let c = ctx.cover(&k).unwrap();
        assert_eq!(c.rank, 1);
        assert_eq!(c.free.dim(), 4);
        assert_eq!(c.kernel.dim(), 3);
        let m3 = Module::jordan(g, f2, 3).unwrap();
        assert!(iso(0, &c.kernel, &m3));
    }

    #[test]
    fn syzygy_of_m2_is_m2() {
        let (g, f2) = cyclic(4, 2);
        let ctx = StableCtx::new(0);
        let m2 = Module::jordan(g, f2, 2).unwrap();
        let o1 = ctx.syzygy(&m2, 1).unwrap();
        assert_eq!(o1.dim(), 2);
        assert!(iso(0, &o1, &m2));
        let o2 = ctx.syzygy(&m2, 2).unwrap();
        assert!(iso(0, &o2, &m2));
    }

    #[test]
    fn syzygy_strips_at_degree_zero() {
        let (g, f2) = cyclic(4, 2);
        let ctx = StableCtx::new(0);
        let m2 = Module::jordan(g.clone(), f2, 2).unwrap();
        let reg = Module::regular(g, f2);
        let (sum, _) = direct_sum(&[&reg, &m2]);
        let s = ctx.syzygy(&sum, 0).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(iso(0, &s, &m2));
    }

    #[test]
    fn klein_chain_dims_follow_two_n_plus_one() {
        let g = Arc::new(Group::from_spec("elemab:2:2").unwrap());
        let ctx = StableCtx::new(0);
        let k = Module::trivial(g, f(2));
        for n in -5i64..=5 {
            let dim = ctx.syzygy(&k, n).unwrap().dim();
            assert_eq!(dim, 2 * n.unsigned_abs() as usize + 1, "degree {n}");
        }
    }

    #[test]
    fn chain_dims_for_nine_and_quaternion() {
        let g9 = Arc::new(Group::from_spec("elemab:3:2").unwrap());
        let ctx = StableCtx::new(0);
        let k9 = Module::trivial(g9.clone(), f(3));
        let expect = [1usize, 8, 10, 17, 19, 26, 28];
        for (n, &want) in expect.iter().enumerate() {
            let dim = ctx.syzygy(&k9, n as i64).unwrap().dim();
            assert_eq!(dim, want, "degree {n}");
            let class = dim % g9.order();
            assert!(class == 1 || class == g9.order() - 1, "degree {n}: {dim}");
        }
        let q8 = Arc::new(Group::quaternion(8).unwrap());
        let kq = Module::trivial(q8.clone(), f(2));
        let expect = [1usize, 7, 9, 7, 1, 7];
        for (n, &want) in expect.iter().enumerate() {
            assert_eq!(ctx.syzygy(&kq, n as i64).unwrap().dim(), want, "degree {n}");
        }
    }

    #[test]
    fn cover_dim_identity_on_fixtures() {
        let ctx = StableCtx::new(0);
        let (g4, f2) = cyclic(4, 2);
        let m2 = Module::jordan(g4, f2, 2).unwrap();
        let v4 = Arc::new(Group::from_spec("elemab:2:2").unwrap());
        let band = Module::v4_band(v4, f2, 3, 1).unwrap();
        let (g5, f5) = cyclic(5, 5);
        let j2 = Module::jordan(g5, f5, 2).unwrap();
        for m in [&m2, &band, &j2] {
            let c = ctx.cover(m).unwrap();
            let top = crate::reps::top_dim(m).unwrap();
            assert_eq!(c.rank, top);
            assert_eq!(
                c.kernel.dim(),
                m.group().order() * top - m.dim(),
                "{}",
                m.name()
            );
        }
        // The band's syzygy stays six-dimensional.
        assert_eq!(ctx.cover(&band).unwrap().kernel.dim(), 6);
    }

    #[test]
    fn syzygy_inverse_undoes_syzygy() {
        let (g, f2) = cyclic(4, 2);
        let ctx = StableCtx::new(0);
        let m2 = Module::jordan(g, f2, 2).unwrap();
        let up = ctx.syzygy(&m2, 1).unwrap();
        let back = ctx.syzygy(&up, -1).unwrap();
        assert!(iso(0, &back, &m2));
        let down = ctx.syzygy(&m2, -1).unwrap();
        let forth = ctx.syzygy(&down, 1).unwrap();
        assert!(iso(0, &forth, &m2));
    }

    #[test]
    fn negative_chain_is_dual_on_the_nose() {
        let v4 = Arc::new(Group::from_spec("elemab:2:2").unwrap());
        let ctx = StableCtx::new(0);
        let k = Module::trivial(v4, f(2));
        let neg = ctx.syzygy(&k, -2).unwrap();
        let dual = ctx.syzygy(&k, 2).unwrap().dual();
        assert_eq!(neg.fingerprint(), dual.fingerprint());
    }

    #[test]
    fn syzygy_cap_is_enforced() {
        let (g, f2) = cyclic(2, 2);
        let ctx = StableCtx::new(0);
        let k = Module::trivial(g, f2);
        let err = ctx.syzygy(&k, 25).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn projective_hom_dims_on_fixtures() {
        let ctx = StableCtx::new(0);

        let (g2, f2) = cyclic(2, 2);
        let k = Module::trivial(g2, f2);
        assert_eq!(ctx.phom_subspace(&k, &k).unwrap().dim(), 0);
        assert_eq!(ctx.stable_hom(&k, &k).unwrap().dim(), 1);

        let (g3, f3) = cyclic(3, 3);
        let j2 = Module::jordan(g3, f3, 2).unwrap();
        assert_eq!(ctx.phom_subspace(&j2, &j2).unwrap().dim(), 1);
        assert_eq!(ctx.stable_hom(&j2, &j2).unwrap().dim(), 1);

        let (g4, f2) = cyclic(4, 2);
        let m2 = Module::jordan(g4, f2, 2).unwrap();
        assert_eq!(ctx.phom_subspace(&m2, &m2).unwrap().dim(), 0);
        assert_eq!(ctx.stable_hom(&m2, &m2).unwrap().dim(), 2);
    }

    #[test]
    fn stably_zero_examples() {
        let ctx = StableCtx::new(0);
        let (g4, f2) = cyclic(4, 2);
        let reg = Module::regular(g4.clone(), f2);
        assert!(ctx.is_stably_zero(&ModuleMap::identity(&reg)).unwrap());
        let k = Module::trivial(g4, f2);
        assert!(!ctx.is_stably_zero(&ModuleMap::identity(&k)).unwrap());

        // The projective part of End(J_2) over C_3 is spanned by one
        // nonzero map.
        let (g3, f3) = cyclic(3, 3);
        let j2 = Module::jordan(g3, f3, 2).unwrap();
        let phom = ctx.phom_subspace(&j2, &j2).unwrap();
        let gen = phom.basis()[0].clone();
        assert!(gen.iter().any(|&x| x != 0));
        let map = ModuleMap::new(
            j2.clone(),
            j2.clone(),
            Matrix::unflatten(f3, 2, 2, &gen),
        )
        .unwrap();
        assert!(ctx.is_stably_zero(&map).unwrap());
    }

    #[test]
    fn stably_zero_over_a_non_p_group() {
        let s3 = Arc::new(Group::symmetric(3).unwrap());
        let ctx = StableCtx::new(0);
        let k = Module::trivial(s3.clone(), f(3));
        assert!(!ctx.is_stably_zero(&ModuleMap::identity(&k)).unwrap());
        let reg = Module::regular(s3, f(3));
        assert!(ctx.is_stably_zero(&ModuleMap::identity(&reg)).unwrap());
    }

    #[test]
    fn stable_coords_are_faithful_modulo_projectives() {
        let ctx = StableCtx::new(0);
        let (g3, f3) = cyclic(3, 3);
        let j2 = Module::jordan(g3, f3, 2).unwrap();
        let sh = ctx.stable_hom(&j2, &j2).unwrap();
        assert_eq!(sh.dim(), 1);
        let rep = sh.rep(0).clone();
        let coords = sh.stable_coords(&rep).unwrap();
        assert_eq!(coords, vec![1]);
        // Shifting by a projectively-trivial map leaves the class alone.
        let phom_gen = ModuleMap::new(
            j2.clone(),
            j2.clone(),
            Matrix::unflatten(f3, 2, 2, &sh.phom.basis()[0]),
        )
        .unwrap();
        let shifted = rep.add(&phom_gen);
        assert_eq!(sh.stable_coords(&shifted).unwrap(), vec![1]);
        let doubled = rep.scale(2);
        assert_eq!(sh.stable_coords(&doubled).unwrap(), vec![2]);
    }

    #[test]
    fn omega_of_g_minus_one_behaves() {
        let (g4, f2) = cyclic(4, 2);
        let ctx = StableCtx::new(0);
        let m2 = Module::jordan(g4, f2, 2).unwrap();
        let gm1 = ModuleMap::new(
            m2.clone(),
            m2.clone(),
            Matrix::from_rows(f2, &[vec![0, 1], vec![0, 0]]).unwrap(),
        )
        .unwrap();
        let w = ctx.omega_map(&gm1, 1).unwrap();
        assert_eq!(
            w.domain().fingerprint(),
            ctx.syzygy(&m2, 1).unwrap().fingerprint()
        );
        assert!(!ctx.is_stably_zero(&w).unwrap());
        assert!(ctx.is_stably_zero(&w.compose(&w)).unwrap());
        // Omega of the identity is stably the identity (p = 2, so the
        // difference is the sum).
        let wid = ctx.omega_map(&ModuleMap::identity(&m2), 1).unwrap();
        let id = ModuleMap::identity(wid.domain());
        assert!(ctx.is_stably_zero(&wid.add(&id)).unwrap());
        // Two single steps agree with one double step exactly.
        let two = ctx.omega_map(&gm1, 2).unwrap();
        let again = ctx.omega_map(&w, 1).unwrap();
        assert_eq!(two.mat(), again.mat());
    }

    #[test]
    fn omega_negative_respects_duality() {
        let (g4, f2) = cyclic(4, 2);
        let ctx = StableCtx::new(0);
        let m2 = Module::jordan(g4, f2, 2).unwrap();
        let gm1 = ModuleMap::new(
            m2.clone(),
            m2.clone(),
            Matrix::from_rows(f2, &[vec![0, 1], vec![0, 0]]).unwrap(),
        )
        .unwrap();
        let w = ctx.omega_map(&gm1, -1).unwrap();
        assert_eq!(
            w.domain().fingerprint(),
            ctx.syzygy(&m2, -1).unwrap().fingerprint()
        );
        assert!(!ctx.is_stably_zero(&w).unwrap());
        assert!(ctx.is_stably_zero(&w.compose(&w)).unwrap());
    }

    #[test]
    fn cone_of_identity_vanishes_stably() {
        let ctx = StableCtx::new(0);
        for spec in ["cyclic:4", "elemab:2:2"] {
            let g = Arc::new(Group::from_spec(spec).unwrap());
            let k = Module::trivial(g, f(2));
            let cone = ctx.cone(&ModuleMap::identity(&k)).unwrap();
            let s = ctx.strip(&cone.module).unwrap();
            assert_eq!(s.reduced.dim(), 0, "{spec}");
        }
    }

    #[test]
    fn cone_of_zero_map_is_sum_of_ends() {
        let (g4, f2) = cyclic(4, 2);
        let ctx = StableCtx::new(0);
        let k = Module::trivial(g4, f2);
        let cone = ctx.cone(&ModuleMap::zero(k.clone(), k.clone())).unwrap();
        assert_eq!(cone.module.dim(), 4);
        let shift = ctx.syzygy(&k, -1).unwrap();
        let (want, _) = direct_sum(&[&k, &shift]);
        assert!(iso(0, &cone.module, &want));
    }

    #[test]
    fn cone_triangle_composites_vanish() {
        let (g4, f2) = cyclic(4, 2);
        let ctx = StableCtx::new(0);
        let m2 = Module::jordan(g4, f2, 2).unwrap();
        let gm1 = ModuleMap::new(
            m2.clone(),
            m2.clone(),
            Matrix::from_rows(f2, &[vec![0, 1], vec![0, 0]]).unwrap(),
        )
        .unwrap();
        let cone = ctx.cone(&gm1).unwrap();
        assert!(cone.to_shift.compose(&cone.from_target).is_zero());
        assert!(ctx
            .is_stably_zero(&cone.from_target.compose(&gm1))
            .unwrap());
    }

    #[test]
    fn free_hom_bases_have_module_dimension() {
        let (g4, f2) = cyclic(4, 2);
        let m2 = Module::jordan(g4.clone(), f2, 2).unwrap();
        let intos = maps_into_free(&m2);
        let froms = maps_from_free(&m2);
        assert_eq!(intos.len(), 2);
        assert_eq!(froms.len(), 2);
        let free = free_module(&g4, f2, 1);
        for phi in &intos {
            ModuleMap::new(m2.clone(), free.clone(), phi.clone()).unwrap();
        }
        for psi in &froms {
            ModuleMap::new(free.clone(), m2.clone(), psi.clone()).unwrap();
        }
    }

    #[test]
    fn stable_hom_across_groups_is_rejected() {
        let ctx = StableCtx::new(0);
        let (g4, f2) = cyclic(4, 2);
        let v4 = Arc::new(Group::from_spec("elemab:2:2").unwrap());
        let a = Module::trivial(g4, f2);
        let b = Module::trivial(v4, f2);
        assert!(ctx.stable_hom(&a, &b).is_err());
    }
}
