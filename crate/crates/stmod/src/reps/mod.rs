//! kG-modules as explicit matrix representations over F_p.
//!
//! A module stores one dim x dim action matrix per group element, acting
//! on column vectors from the left. A map M -> N is a codomain.dim x
//! domain.dim matrix; composition is matrix product in the same order.
//! Validation checks the identity matrix at the identity element and the
//! homomorphism law against a generating set, which pins it on all of G.

mod structure;
mod transport;

pub use structure::{is_indecomposable, is_isomorphic, Indecomposability, IsoResult};
pub use transport::{
    adjoint_from_induced_source, adjoint_from_induced_target, adjoint_to_induced_source,
    adjoint_to_induced_target, conjugate_module, induce, induce_map, restrict, restrict_map,
};

use crate::error::{Error, Result};
use crate::fingerprint::Fnv64;
use crate::groups::Group;
use crate::linalg::{Matrix, PrimeField, SolveCache, Subspace};
use std::sync::Arc;

/// Cheap-to-clone handle; all module data lives behind an Arc.
#[derive(Clone)]
pub struct Module(Arc<ModuleInner>);

struct ModuleInner {
    group: Arc<Group>,
    f: PrimeField,
    dim: usize,
    name: String,
    action: Vec<Matrix>,
    fp: u64,
}

impl std::fmt::Debug for Module {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Module({}, dim {}, over {}, F{})",
            self.0.name,
            self.0.dim,
            self.0.group.name(),
            self.0.f.p()
        )
    }
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.fingerprint() == other.fingerprint()
    }
}
impl Eq for Module {}

impl Module {
    pub fn new(group: Arc<Group>, f: PrimeField, name: &str, action: Vec<Matrix>) -> Result<Module> {
        let n = group.order();
        if action.len() != n {
            return Err(Error::NotAModule(format!(
                "{} action matrices for a group of order {n}",
                action.len()
            )));
        }
        let dim = action[0].rows();
        for (g, a) in action.iter().enumerate() {
            if a.rows() != dim || a.cols() != dim || a.field() != f {
                return Err(Error::NotAModule(format!(
                    "action of element {g} is not a {dim}x{dim} matrix over F{}",
                    f.p()
                )));
            }
        }
        let m = Module(Arc::new(ModuleInner {
            fp: Self::compute_fp(&group, f, &action),
            group,
            f,
            dim,
            name: name.to_string(),
            action,
        }));
        if let Err(why) = m.validate() {
            return Err(Error::NotAModule(why));
        }
        Ok(m)
    }

    fn compute_fp(group: &Group, f: PrimeField, action: &[Matrix]) -> u64 {
        let mut h = Fnv64::new();
        h.write_u64(group.fingerprint())
            .write_u64(f.p() as u64)
            .write_usize(action.first().map_or(0, |a| a.rows()));
        for a in action {
            h.write(a.data());
        }
        h.finish()
    }

    /// Report-style invariant check: identity acts as I, and the
    /// homomorphism law holds against each generator (which extends to
    /// all pairs by induction along words). Returns the first violation.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if !self.0.action[0].is_identity() {
            return Err("identity element does not act as the identity matrix".into());
        }
        for s in self.0.group.generators() {
            for g in 0..self.0.group.order() as u8 {
                let lhs = self.action(s).mul(self.action(g));
                if lhs != *self.action(self.0.group.mul(s, g)) {
                    return Err(format!(
                        "action({s})*action({g}) != action({}*{})",
                        s, g
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.0.group
    }
    pub fn field(&self) -> PrimeField {
        self.0.f
    }
    pub fn dim(&self) -> usize {
        self.0.dim
    }
    pub fn name(&self) -> &str {
        &self.0.name
    }
    pub fn action(&self, g: u8) -> &Matrix {
        &self.0.action[g as usize]
    }
    pub fn fingerprint(&self) -> u64 {
        self.0.fp
    }
    pub fn is_zero_module(&self) -> bool {
        self.0.dim == 0
    }

    pub fn renamed(&self, name: &str) -> Module {
        Module(Arc::new(ModuleInner {
            group: self.0.group.clone(),
            f: self.0.f,
            dim: self.0.dim,
            name: name.to_string(),
            action: self.0.action.clone(),
            fp: self.0.fp,
        }))
    }

    pub fn zero(group: Arc<Group>, f: PrimeField) -> Module {
        let action = vec![Matrix::zero(f, 0, 0); group.order()];
        Module::new(group, f, "0", action).expect("zero module is valid")
    }

    pub fn trivial(group: Arc<Group>, f: PrimeField) -> Module {
        let action = vec![Matrix::identity(f, 1); group.order()];
        Module::new(group, f, "k", action).expect("trivial module is valid")
    }

    /// Left regular module kG on the basis {e_g}: h sends e_g to e_{hg}.
    pub fn regular(group: Arc<Group>, f: PrimeField) -> Module {
        let n = group.order();
        let action = (0..n as u8)
            .map(|h| {
                Matrix::from_fn(f, n, n, |i, j| (group.mul(h, j as u8) as usize == i) as u8)
            })
            .collect();
        Module::new(group, f, "kG", action).expect("regular module is valid")
    }

    /// Jordan module J_i over a cyclic group: the generator acts by the
    /// unipotent i x i Jordan block sending e_j to e_j + e_{j-1}. Valid
    /// only when that block has order dividing |G| over F_p, which the
    /// module validator enforces.
    pub fn jordan(group: Arc<Group>, f: PrimeField, i: usize) -> Result<Module> {
        let n = group.order();
        if group.generators().len() > 1 {
            return Err(Error::BadSpec("jordan".into(), "group is not cyclic".into()));
        }
        if i < 1 || i > n {
            return Err(Error::BadSpec(
                "jordan".into(),
                format!("block size {i} outside 1..={n}"),
            ));
        }
        let mut j = Matrix::identity(f, i);
        for r in 0..i.saturating_sub(1) {
            j.set(r, r + 1, 1);
        }
        let action = (0..n as u64).map(|a| j.pow(a)).collect();
        Module::new(group, f, &format!("J_{i}"), action)
    }

    /// Band module over V_4 of dimension 2n: on basis u_1..u_n, v_1..v_n
    /// the first generator a has (a-1)u_i = v_i and the second has
    /// (b-1)u_i = lambda v_i + v_{i+1}, with the v_i killed by both.
    pub fn v4_band(group: Arc<Group>, f: PrimeField, n: usize, lambda: u8) -> Result<Module> {
        let ok_group = group.order() == 4
            && (1..4u8).all(|g| group.element_order(g) == 2)
            && f.p() == 2;
        if !ok_group || lambda % 2 == 0 || n == 0 {
            return Err(Error::BadSpec(
                "v4band".into(),
                "needs the Klein four group, p = 2, lambda odd, n >= 1".into(),
            ));
        }
        let dim = 2 * n;
        let mut e = Matrix::zero(f, dim, dim);
        let mut fmat = Matrix::zero(f, dim, dim);
        for i in 0..n {
            e.set(n + i, i, 1);
            fmat.set(n + i, i, 1); // lambda = 1 in F_2
            if i + 1 < n {
                fmat.set(n + i + 1, i, 1);
            }
        }
        let id = Matrix::identity(f, dim);
        let a = id.add(&e);
        let b = id.add(&fmat);
        let ab = a.mul(&b);
        Module::new(group, f, &format!("band_{n}"), vec![id, a, b, ab])
    }

    /// Parses the CLI module grammar: `trivial`, `regular`, `jordan:I`,
    /// `v4band:N:LAMBDA`.
    pub fn from_spec(group: &Arc<Group>, f: PrimeField, spec: &str) -> Result<Module> {
        let bad = |why: &str| Error::BadSpec(spec.to_string(), why.to_string());
        let parts: Vec<&str> = spec.split(':').collect();
        match parts.as_slice() {
            ["trivial"] => Ok(Module::trivial(group.clone(), f)),
            ["regular"] => Ok(Module::regular(group.clone(), f)),
            ["jordan", i] => {
                let i = i.parse().map_err(|_| bad("jordan size is not a number"))?;
                Module::jordan(group.clone(), f, i)
            }
            ["v4band" | "v4_band", n, l] => {
                let n = n.parse().map_err(|_| bad("band length is not a number"))?;
                let l: u64 = l.parse().map_err(|_| bad("lambda is not a number"))?;
                Module::v4_band(group.clone(), f, n, f.element(l as i64))
            }
            _ => Err(bad("unrecognized module spec")),
        }
    }

    /// Dual module on the dual basis: g acts by action(g^-1) transposed.
    /// Strictly involutive entry by entry.
    pub fn dual(&self) -> Module {
        let g = &self.0.group;
        let action: Vec<Matrix> = (0..g.order() as u8)
            .map(|h| self.action(g.inv(h)).transpose())
            .collect();
        let name = match self.0.name.strip_prefix("dual(") {
            Some(rest) if rest.ends_with(')') => rest[..rest.len() - 1].to_string(),
            _ => format!("dual({})", self.0.name),
        };
        Module::new(g.clone(), self.0.f, &name, action).expect("dual of a module is a module")
    }
}

/// An equivariant map between modules over the same group.
#[derive(Clone)]
pub struct ModuleMap {
    domain: Module,
    codomain: Module,
    mat: Matrix,
}

impl std::fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ModuleMap({} -> {}, {:?})",
            self.domain.name(),
            self.codomain.name(),
            self.mat
        )
    }
}

impl ModuleMap {
    pub fn new(domain: Module, codomain: Module, mat: Matrix) -> Result<ModuleMap> {
        if domain.group().fingerprint() != codomain.group().fingerprint()
            || domain.field() != codomain.field()
        {
            return Err(Error::Incompatible(
                "map between modules over different groups or fields".into(),
            ));
        }
        if mat.rows() != codomain.dim() || mat.cols() != domain.dim() {
            return Err(Error::DimMismatch(format!(
                "map matrix is {}x{}, needs {}x{}",
                mat.rows(),
                mat.cols(),
                codomain.dim(),
                domain.dim()
            )));
        }
        let m = ModuleMap {
            domain,
            codomain,
            mat,
        };
        // Equivariance against generators pins it on the whole group.
        for s in m.domain.group().generators() {
            if m.mat.mul(m.domain.action(s)) != m.codomain.action(s).mul(&m.mat) {
                return Err(Error::NotEquivariant);
            }
        }
        Ok(m)
    }

    pub fn zero(domain: Module, codomain: Module) -> ModuleMap {
        let mat = Matrix::zero(domain.field(), codomain.dim(), domain.dim());
        ModuleMap::new(domain, codomain, mat).expect("zero map is equivariant")
    }

    pub fn identity(m: &Module) -> ModuleMap {
        let mat = Matrix::identity(m.field(), m.dim());
        ModuleMap::new(m.clone(), m.clone(), mat).expect("identity is equivariant")
    }

    pub fn domain(&self) -> &Module {
        &self.domain
    }
    pub fn codomain(&self) -> &Module {
        &self.codomain
    }
    pub fn mat(&self) -> &Matrix {
        &self.mat
    }
    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// self after other: (self ∘ other): X -> Z for other: X -> Y.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        assert_eq!(
            other.codomain.fingerprint(),
            self.domain.fingerprint(),
            "compose: middle modules differ"
        );
        ModuleMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            mat: self.mat.mul(&other.mat),
        }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            mat: self.mat.add(&other.mat),
        }
    }

    pub fn scale(&self, c: u8) -> ModuleMap {
        ModuleMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            mat: self.mat.scale(c),
        }
    }

    /// Contravariant dual: for f: M -> N this is f*: N* -> M*.
    pub fn dual(&self) -> ModuleMap {
        ModuleMap {
            domain: self.codomain.dual(),
            codomain: self.domain.dual(),
            mat: self.mat.transpose(),
        }
    }

    /// Full equivariance audit over every group element, for tests and
    /// the validate subcommand.
    pub fn check_equivariance_full(&self) -> std::result::Result<(), String> {
        for g in 0..self.domain.group().order() as u8 {
            if self.mat.mul(self.domain.action(g)) != self.codomain.action(g).mul(&self.mat) {
                return Err(format!("not equivariant at element {g}"));
            }
        }
        Ok(())
    }
}

/// Basis of Hom_kG(M, N), stored as raw matrices; coordinates of a map
/// are its row-major flattening.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub domain: Module,
    pub codomain: Module,
    pub basis: Vec<Matrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn map(&self, i: usize) -> ModuleMap {
        ModuleMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            mat: self.basis[i].clone(),
        }
    }

    pub fn combo(&self, coeffs: &[u8]) -> ModuleMap {
        assert_eq!(coeffs.len(), self.basis.len());
        let f = self.domain.field();
        let mut mat = Matrix::zero(f, self.codomain.dim(), self.domain.dim());
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if *c != 0 {
                mat = mat.add(&b.scale(*c));
            }
        }
        ModuleMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            mat,
        }
    }

    pub fn as_subspace(&self) -> Subspace {
        Subspace::from_span(
            self.domain.field(),
            self.domain.dim() * self.codomain.dim(),
            self.basis.iter().map(|b| b.flatten()),
        )
    }
}

/// All equivariant matrices M -> N, as the kernel of the intertwining
/// system a_s X - X b_s = 0 stacked over generators s.
pub fn hom_basis(m: &Module, n: &Module) -> HomSpace {
    assert_eq!(
        m.group().fingerprint(),
        n.group().fingerprint(),
        "hom between modules over different groups"
    );
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let vars = dm * dn;
    let gens = m.group().generators();
    let mut cons = Matrix::zero(f, gens.len() * vars, vars);
    for (si, &s) in gens.iter().enumerate() {
        let a = n.action(s);
        let b = m.action(s);
        for i in 0..dn {
            for j in 0..dm {
                let r = si * vars + i * dm + j;
                for k in 0..dn {
                    cons.set(r, k * dm + j, a.at(i, k));
                }
                for l in 0..dm {
                    let cur = cons.at(r, i * dm + l);
                    cons.set(r, i * dm + l, f.sub(cur, b.at(l, j)));
                }
            }
        }
    }
    let ker = cons.kernel();
    let basis = (0..ker.cols())
        .map(|c| Matrix::unflatten(f, dn, dm, &ker.col(c)))
        .collect();
    HomSpace {
        domain: m.clone(),
        codomain: n.clone(),
        basis,
    }
}

/// Basis of M^G = {m : gm = m for all g}, the kernel of the stacked
/// (action(s) - I) over generators; also usable as Hom(k, M) columns.
pub fn fixed_points(m: &Module) -> Vec<Vec<u8>> {
    let f = m.field();
    let d = m.dim();
    let gens = m.group().generators();
    let mut cons = Matrix::zero(f, gens.len() * d, d);
    for (si, &s) in gens.iter().enumerate() {
        let a = m.action(s);
        for i in 0..d {
            for j in 0..d {
                let v = if i == j {
                    f.sub(a.at(i, j), 1)
                } else {
                    a.at(i, j)
                };
                cons.set(si * d + i, j, v);
            }
        }
    }
    cons.kernel_vectors()
}

pub fn hom_from_trivial(m: &Module) -> HomSpace {
    let f = m.field();
    let k = Module::trivial(m.group().clone(), f);
    let basis = fixed_points(m)
        .into_iter()
        .map(|v| Matrix::from_cols(f, m.dim(), &[v]))
        .collect();
    HomSpace {
        domain: k,
        codomain: m.clone(),
        basis,
    }
}

pub(crate) fn require_p_group(m: &Module, what: &'static str) -> Result<()> {
    if m.group().is_p_group(m.field().p() as usize) {
        Ok(())
    } else {
        Err(Error::NotPGroup(what))
    }
}

/// For a p-group: rad M = sum over generators s of (s-1)M, which is
/// already the full radical since (st-1) = s(t-1) + (s-1); soc M = M^G.
/// Both are submodules; returned as bases.
pub fn radical_and_socle(m: &Module) -> Result<(Vec<Vec<u8>>, Vec<Vec<u8>>)> {
    require_p_group(m, "radical/socle")?;
    let f = m.field();
    let d = m.dim();
    let gens = m.group().generators();
    let mut cols: Vec<&Matrix> = Vec::new();
    let shifted: Vec<Matrix> = gens
        .iter()
        .map(|&s| m.action(s).sub(&Matrix::identity(f, d)))
        .collect();
    for sm in &shifted {
        cols.push(sm);
    }
    let rad = if cols.is_empty() {
        Vec::new()
    } else {
        let stacked = Matrix::hstack(&cols);
        let basis = stacked.col_space_basis();
        (0..basis.cols()).map(|j| basis.col(j)).collect()
    };
    Ok((rad, fixed_points(m)))
}

/// dim of M / rad M, the number of generators of a minimal free cover.
pub fn top_dim(m: &Module) -> Result<usize> {
    let (rad, _) = radical_and_socle(m)?;
    Ok(m.dim() - rad.len())
}

/// The submodule spanned by `basis` as a module in its own right, with
/// its inclusion. Errors if the span is not action-closed.
pub fn sub_module(m: &Module, basis: &[Vec<u8>], name: &str) -> Result<(Module, ModuleMap)> {
    let f = m.field();
    let space = Subspace::from_span(f, m.dim(), basis.iter().cloned());
    let cols: Vec<Vec<u8>> = space.basis().to_vec();
    let c = Matrix::from_cols(f, m.dim(), &cols);
    let cache = SolveCache::new(&c);
    let mut action = Vec::with_capacity(m.group().order());
    for g in 0..m.group().order() as u8 {
        let moved = m.action(g).mul(&c);
        let Some(sigma) = cache.solve_mat(&moved) else {
            return Err(Error::NotActionClosed);
        };
        action.push(sigma);
    }
    let sub = Module::new(m.group().clone(), f, name, action)?;
    let inc = ModuleMap::new(sub.clone(), m.clone(), c)?;
    Ok((sub, inc))
}

/// Quotient of M by an action-closed subspace, with the projection.
/// Coordinates on the quotient are the non-pivot standard coordinates of
/// the subspace's echelon basis.
pub fn quotient_module(m: &Module, sub_basis: &[Vec<u8>], name: &str) -> Result<(Module, ModuleMap)> {
    let f = m.field();
    let d = m.dim();
    let space = Subspace::from_span(f, d, sub_basis.iter().cloned());
    let s = space.dim();
    let free: Vec<usize> = (0..d).filter(|j| !space.pivots().contains(j)).collect();
    // B = [subspace basis | complement standard vectors], invertible.
    let mut b = Matrix::zero(f, d, d);
    for (j, row) in space.basis().iter().enumerate() {
        for i in 0..d {
            b.set(i, j, row[i]);
        }
    }
    for (k, &j) in free.iter().enumerate() {
        b.set(j, s + k, 1);
    }
    let binv = b.invert().expect("basis completion is invertible");
    // Quotient coordinates = last d-s rows of B^{-1}.
    let mut q = Matrix::zero(f, d - s, d);
    for i in 0..d - s {
        for j in 0..d {
            q.set(i, j, binv.at(s + i, j));
        }
    }
    // Complement inclusion as a linear section of q.
    let mut e = Matrix::zero(f, d, d - s);
    for (k, &j) in free.iter().enumerate() {
        e.set(j, k, 1);
    }
    let mut action = Vec::with_capacity(m.group().order());
    for g in 0..m.group().order() as u8 {
        action.push(q.mul(m.action(g)).mul(&e));
    }
    let quot = Module::new(m.group().clone(), f, name, action).map_err(|err| match err {
        Error::NotAModule(_) => Error::NotActionClosed,
        other => other,
    })?;
    // Equivariance of q certifies closure of the subspace.
    let proj = ModuleMap::new(m.clone(), quot.clone(), q).map_err(|err| match err {
        Error::NotEquivariant => Error::NotActionClosed,
        other => other,
    })?;
    Ok((quot, proj))
}

/// Composition series of M over a p-group: vectors u_1..u_dim whose
/// prefixes span the action-closed chain A_1 ⊂ ... ⊂ A_dim = M, each
/// step lifting a socle line of M/A_i (so every quotient is trivial).
pub fn composition_flag(m: &Module) -> Result<Vec<Vec<u8>>> {
    require_p_group(m, "composition flag")?;
    let f = m.field();
    let d = m.dim();
    let mut flag: Vec<Vec<u8>> = Vec::new();
    while flag.len() < d {
        let (quot, proj) = quotient_module(m, &flag, "step")?;
        let soc = fixed_points(&quot);
        let line = soc.first().expect("nonzero module over a p-group has fixed points");
        // Any preimage works: q has a right inverse on its standard
        // section, so solve q u = line.
        let u = proj
            .mat()
            .solve(&Matrix::col_vector(f, line))
            .expect("shape ok")
            .expect("projection is surjective")
            .particular
            .col(0);
        flag.push(u);
    }
    Ok(flag)
}

/// Block-diagonal direct sum with inclusion/projection pairs.
pub fn direct_sum(parts: &[&Module]) -> (Module, Vec<(ModuleMap, ModuleMap)>) {
    assert!(!parts.is_empty());
    let f = parts[0].field();
    let g = parts[0].group().clone();
    assert!(parts
        .iter()
        .all(|m| m.group().fingerprint() == g.fingerprint() && m.field() == f));
    let n = g.order();
    let action: Vec<Matrix> = (0..n as u8)
        .map(|h| {
            let blocks: Vec<&Matrix> = parts.iter().map(|m| m.action(h)).collect();
            Matrix::block_diag(&blocks)
        })
        .collect();
    let name = parts
        .iter()
        .map(|m| m.name().to_string())
        .collect::<Vec<_>>()
        .join(" + ");
    let total = Module::new(g, f, &name, action).expect("direct sum of modules is a module");
    let dim: usize = parts.iter().map(|m| m.dim()).sum();
    let mut maps = Vec::new();
    let mut off = 0;
    for m in parts {
        let mut inc = Matrix::zero(f, dim, m.dim());
        let mut prj = Matrix::zero(f, m.dim(), dim);
        for i in 0..m.dim() {
            inc.set(off + i, i, 1);
            prj.set(i, off + i, 1);
        }
        maps.push((
            ModuleMap::new((*m).clone(), total.clone(), inc).expect("inclusion is equivariant"),
            ModuleMap::new(total.clone(), (*m).clone(), prj).expect("projection is equivariant"),
        ));
        off += m.dim();
    }
    (total, maps)
}
