//! Moving modules and maps between a group and its subgroups:
//! restriction, induction on the minimal-representative left transversal,
//! conjugation, and the two adjunction transports with their inverses.
//!
//! Induced module coordinates: basis vector (i, v) = t_i ⊗ e_v at index
//! i * dim M + v, where t_0 = identity since transversals are chosen by
//! ascending scan.

use super::{Module, ModuleMap};
use crate::groups::{Group, Subgroup};
use crate::linalg::Matrix;
use std::sync::Arc;

/// M over G seen as a module over H, actions re-indexed through H's own
/// numbering.
pub fn restrict(m: &Module, h: &Subgroup) -> Module {
    assert_eq!(
        h.parent_order(),
        m.group().order(),
        "subgroup belongs to a different group"
    );
    let local = Arc::new(h.local_group().clone());
    let action: Vec<Matrix> = (0..h.order() as u8)
        .map(|i| m.action(h.to_global(i)).clone())
        .collect();
    Module::new(local, m.field(), &format!("{}|H", m.name()), action)
        .expect("restriction of a module is a module")
}

/// Same matrix, considered over the subgroup.
pub fn restrict_map(phi: &ModuleMap, h: &Subgroup) -> ModuleMap {
    ModuleMap::new(
        restrict(phi.domain(), h),
        restrict(phi.codomain(), h),
        phi.mat().clone(),
    )
    .expect("restriction of an equivariant map is equivariant")
}

fn coset_index_table(parent: &Group, h: &Subgroup, transversal: &[u8]) -> Vec<usize> {
    let mut of = vec![usize::MAX; parent.order()];
    for (j, &t) in transversal.iter().enumerate() {
        for &x in h.elements() {
            of[parent.mul(t, x) as usize] = j;
        }
    }
    of
}

/// kG ⊗_kH M on the minimal left transversal: g sends t_i ⊗ m to
/// t_j ⊗ (h m) where g t_i = t_j h.
pub fn induce(m: &Module, parent: &Arc<Group>, h: &Subgroup) -> Module {
    assert_eq!(
        h.local_group().fingerprint(),
        m.group().fingerprint(),
        "module is not over the subgroup's own group"
    );
    assert_eq!(h.parent_order(), parent.order());
    let t = parent.left_transversal(h);
    let coset_of = coset_index_table(parent, h, &t);
    let d = m.dim();
    let dim = t.len() * d;
    let f = m.field();
    let action: Vec<Matrix> = (0..parent.order() as u8)
        .map(|g| {
            let mut a = Matrix::zero(f, dim, dim);
            for (i, &ti) in t.iter().enumerate() {
                let x = parent.mul(g, ti);
                let j = coset_of[x as usize];
                let hh = parent.mul(parent.inv(t[j]), x);
                let block = m.action(h.to_local(hh).expect("t_j^-1 g t_i lands in H"));
                for r in 0..d {
                    for c in 0..d {
                        a.set(j * d + r, i * d + c, block.at(r, c));
                    }
                }
            }
            a
        })
        .collect();
    Module::new(
        parent.clone(),
        f,
        &format!("{}^up", m.name()),
        action,
    )
    .expect("induced module is a module")
}

/// The induction functor on maps: phi blockwise on each coset component.
pub fn induce_map(phi: &ModuleMap, parent: &Arc<Group>, h: &Subgroup) -> ModuleMap {
    let dom = induce(phi.domain(), parent, h);
    let cod = induce(phi.codomain(), parent, h);
    let r = parent.order() / h.order();
    let blocks: Vec<&Matrix> = (0..r).map(|_| phi.mat()).collect();
    ModuleMap::new(dom, cod, Matrix::block_diag(&blocks))
        .expect("blockwise induced map is equivariant")
}

/// M over H transported to a module over xHx^-1: the conjugate
/// x h x^-1 acts as h did.
pub fn conjugate_module(
    parent: &Arc<Group>,
    m: &Module,
    h: &Subgroup,
    x: u8,
) -> (Subgroup, Module) {
    assert_eq!(h.local_group().fingerprint(), m.group().fingerprint());
    let k = parent.conjugate_subgroup(h, x);
    let xinv = parent.inv(x);
    let action: Vec<Matrix> = (0..k.order() as u8)
        .map(|i| {
            let kg = k.to_global(i);
            let hg = parent.mul(parent.mul(xinv, kg), x);
            m.action(h.to_local(hg).expect("x^-1 k x lies in H")).clone()
        })
        .collect();
    let module = Module::new(
        Arc::new(k.local_group().clone()),
        m.field(),
        &format!("{}^x{}", m.name(), x),
        action,
    )
    .expect("conjugate module is a module");
    (k, module)
}

/// Hom_H(B|H, M) -> Hom_G(B, M^up): b maps to the sum over cosets of
/// t_i ⊗ phi(t_i^-1 b).
pub fn adjoint_to_induced_target(
    b: &Module,
    h: &Subgroup,
    phi: &ModuleMap,
) -> ModuleMap {
    let parent = b.group();
    assert_eq!(
        phi.domain().fingerprint(),
        restrict(b, h).fingerprint(),
        "map domain is not the restriction of B"
    );
    let t = parent.left_transversal(h);
    let blocks: Vec<Matrix> = t
        .iter()
        .map(|&ti| phi.mat().mul(b.action(parent.inv(ti))))
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    ModuleMap::new(
        b.clone(),
        induce(phi.codomain(), parent, h),
        Matrix::vstack(&refs),
    )
    .expect("adjoint transport is equivariant")
}

/// Inverse of `adjoint_to_induced_target`: read off the identity-coset
/// component.
pub fn adjoint_from_induced_target(
    b: &Module,
    h: &Subgroup,
    m: &Module,
    psi: &ModuleMap,
) -> ModuleMap {
    let d = m.dim();
    assert_eq!(psi.codomain().dim(), (b.group().order() / h.order()) * d);
    let mat = Matrix::from_fn(b.field(), d, b.dim(), |i, j| psi.mat().at(i, j));
    ModuleMap::new(restrict(b, h), m.clone(), mat).expect("counit component is equivariant")
}

/// Hom_H(M, B|H) -> Hom_G(M^up, B): t_i ⊗ m maps to t_i · phi(m).
pub fn adjoint_to_induced_source(
    b: &Module,
    h: &Subgroup,
    phi: &ModuleMap,
) -> ModuleMap {
    let parent = b.group();
    assert_eq!(
        phi.codomain().fingerprint(),
        restrict(b, h).fingerprint(),
        "map codomain is not the restriction of B"
    );
    let t = parent.left_transversal(h);
    let blocks: Vec<Matrix> = t.iter().map(|&ti| b.action(ti).mul(phi.mat())).collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    ModuleMap::new(
        induce(phi.domain(), parent, h),
        b.clone(),
        Matrix::hstack(&refs),
    )
    .expect("adjoint transport is equivariant")
}

/// Inverse of `adjoint_to_induced_source`: precompose with the
/// identity-coset inclusion.
pub fn adjoint_from_induced_source(
    b: &Module,
    h: &Subgroup,
    m: &Module,
    psi: &ModuleMap,
) -> ModuleMap {
    let d = m.dim();
    assert_eq!(psi.domain().dim(), (b.group().order() / h.order()) * d);
    let mat = Matrix::from_fn(b.field(), b.dim(), d, |i, j| psi.mat().at(i, j));
    ModuleMap::new(m.clone(), restrict(b, h), mat).expect("unit component is equivariant")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeField;
    use crate::reps::{direct_sum, fixed_points, hom_basis, is_isomorphic, IsoResult};

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn c4() -> Arc<Group> {
        Arc::new(Group::cyclic(4).unwrap())
    }

    #[test]
    fn restriction_to_whole_group_is_identity() {
        let g = c4();
        let m2 = Module::jordan(g.clone(), f(2), 2).unwrap();
        let whole = g.whole_subgroup();
        let r = restrict(&m2, &whole);
        for h in 0..4u8 {
            assert_eq!(r.action(h), m2.action(h));
        }
    }

    #[test]
    fn m2_restricted_to_c2_is_two_trivials() {
        let g = c4();
        let m2 = Module::jordan(g.clone(), f(2), 2).unwrap();
        let h = g.subgroup(&[0, 2]).unwrap();
        let r = restrict(&m2, &h);
        assert_eq!(fixed_points(&r).len(), 2);
        let c2 = Arc::new(h.local_group().clone());
        let k = Module::trivial(c2, f(2));
        let (kk, _) = direct_sum(&[&k, &k]);
        assert!(matches!(is_isomorphic(&r, &kk, 1), IsoResult::Isomorphic(_)));
    }

    #[test]
    fn regular_restricts_to_copies_of_regular() {
        let g = c4();
        let r = Module::regular(g.clone(), f(2));
        let h = g.subgroup(&[0, 2]).unwrap();
        let down = restrict(&r, &h);
        let c2 = Arc::new(h.local_group().clone());
        let r2 = Module::regular(c2, f(2));
        let (r2r2, _) = direct_sum(&[&r2, &r2]);
        assert!(matches!(
            is_isomorphic(&down, &r2r2, 1),
            IsoResult::Isomorphic(_)
        ));
    }

    #[test]
    fn induction_frozen_examples() {
        let g = c4();
        // From G to G: identity functor (entrywise).
        let whole = g.whole_subgroup();
        let m2 = Module::jordan(g.clone(), f(2), 2).unwrap();
        let up = induce(&restrict(&m2, &whole), &g, &whole);
        for h in 0..4u8 {
            assert_eq!(up.action(h), m2.action(h));
        }
        // k induced from C_2 is the dim-2 Jordan module.
        let h = g.subgroup(&[0, 2]).unwrap();
        let kh = Module::trivial(Arc::new(h.local_group().clone()), f(2));
        let ind = induce(&kh, &g, &h);
        assert_eq!(ind.dim(), 2);
        assert!(matches!(is_isomorphic(&ind, &m2, 1), IsoResult::Isomorphic(_)));
        // k induced from the trivial subgroup is the regular module.
        let triv = g.trivial_subgroup();
        let k1 = Module::trivial(Arc::new(triv.local_group().clone()), f(2));
        let reg = induce(&k1, &g, &triv);
        let r = Module::regular(g.clone(), f(2));
        assert!(matches!(is_isomorphic(&reg, &r, 1), IsoResult::Isomorphic(_)));
    }

    #[test]
    fn induced_map_is_blockwise_and_equivariant() {
        let g = c4();
        let h = g.subgroup(&[0, 2]).unwrap();
        let c2 = Arc::new(h.local_group().clone());
        let k = Module::trivial(c2.clone(), f(2));
        let r2 = Module::regular(c2, f(2));
        let homs = hom_basis(&k, &r2);
        assert_eq!(homs.dim(), 1);
        let up = induce_map(&homs.map(0), &g, &h);
        up.check_equivariance_full().unwrap();
        assert_eq!(up.domain().dim(), 2);
        assert_eq!(up.codomain().dim(), 4);
    }

    #[test]
    fn mackey_dimension_bookkeeping_for_s3() {
        let g = Arc::new(Group::symmetric(3).unwrap());
        let h = g.subgroup(&[0, 2]).unwrap(); // <(12)>
        let q = g.subgroup(&[0, 3, 4]).unwrap(); // <(123)>
        let kh = Module::trivial(Arc::new(h.local_group().clone()), f(3));
        let up = induce(&kh, &g, &h);
        assert_eq!(up.dim(), 3);
        let down = restrict(&up, &q);
        let dc = g.double_cosets(&q, &h);
        let expected: usize = dc
            .reps
            .iter()
            .map(|&x| {
                let hx = g.conjugate_subgroup(&h, x);
                let inter = q.elements().iter().filter(|e| hx.contains(**e)).count();
                (q.order() / inter) * kh.dim()
            })
            .sum();
        assert_eq!(down.dim(), expected);
    }

    #[test]
    fn conjugating_the_sign_module_between_reflection_subgroups() {
        let g = Arc::new(Group::symmetric(3).unwrap());
        let h = g.subgroup(&[0, 2]).unwrap();
        let c2 = Arc::new(h.local_group().clone());
        let fld = f(3);
        let sign = Module::new(
            c2,
            fld,
            "sign",
            vec![Matrix::identity(fld, 1), {
                let mut m = Matrix::zero(fld, 1, 1);
                m.set(0, 0, 2);
                m
            }],
        )
        .unwrap();
        // x = identity leaves the module alone.
        let (k0, same) = conjugate_module(&g, &sign, &h, 0);
        assert_eq!(k0.elements(), h.elements());
        assert_eq!(same.action(1), sign.action(1));
        // x = (123) carries it to the sign module of <(23)>.
        let (k, conj) = conjugate_module(&g, &sign, &h, 3);
        assert_eq!(k.elements(), &[0, 1]);
        assert_eq!(conj.action(1).at(0, 0), 2);
        // Trivial module conjugates to trivial.
        let kh = Module::trivial(Arc::new(h.local_group().clone()), fld);
        let (_, ktriv) = conjugate_module(&g, &kh, &h, 3);
        assert!(ktriv.action(1).is_identity());
    }

    #[test]
    fn adjoint_round_trips_are_exact() {
        let g = c4();
        let h = g.subgroup(&[0, 2]).unwrap();
        let m2 = Module::jordan(g.clone(), f(2), 2).unwrap();
        let kh = Module::trivial(Arc::new(h.local_group().clone()), f(2));
        // Target side: Hom_H(M_2|H, k) <-> Hom_G(M_2, k^up).
        let downs = hom_basis(&restrict(&m2, &h), &kh);
        assert_eq!(downs.dim(), 2);
        for i in 0..downs.dim() {
            let phi = downs.map(i);
            let psi = adjoint_to_induced_target(&m2, &h, &phi);
            psi.check_equivariance_full().unwrap();
            let back = adjoint_from_induced_target(&m2, &h, &kh, &psi);
            assert_eq!(back.mat(), phi.mat());
        }
        // Source side: Hom_H(k, M_2|H) <-> Hom_G(k^up, M_2).
        let ups = hom_basis(&kh, &restrict(&m2, &h));
        assert_eq!(ups.dim(), 2);
        for i in 0..ups.dim() {
            let phi = ups.map(i);
            let psi = adjoint_to_induced_source(&m2, &h, &phi);
            psi.check_equivariance_full().unwrap();
            let back = adjoint_from_induced_source(&m2, &h, &kh, &psi);
            assert_eq!(back.mat(), phi.mat());
        }
        // Both adjunctions preserve hom dimensions for (k, M_2).
        let k = Module::trivial(g.clone(), f(2));
        let lhs = hom_basis(&restrict(&k, &h), &kh).dim();
        let rhs = hom_basis(&k, &induce(&kh, &g, &h)).dim();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, 1);
    }

    #[test]
    fn adjoint_naturality_in_the_g_module() {
        let g = c4();
        let h = g.subgroup(&[0, 2]).unwrap();
        let m2 = Module::jordan(g.clone(), f(2), 2).unwrap();
        let k = Module::trivial(g.clone(), f(2));
        let kh = Module::trivial(Arc::new(h.local_group().clone()), f(2));
        let theta = hom_basis(&k, &m2).map(0); // socle inclusion
        let phis = hom_basis(&restrict(&m2, &h), &kh);
        for i in 0..phis.dim() {
            let phi = phis.map(i);
            let lhs = adjoint_to_induced_target(&k, &h, &phi.compose(&restrict_map(&theta, &h)));
            let rhs = adjoint_to_induced_target(&m2, &h, &phi).compose(&theta);
            assert_eq!(lhs.mat(), rhs.mat());
        }
    }

    #[test]
    fn unit_counit_composite_is_multiplication_by_index() {
        // gamma-hat after beta-hat equals [G:H] times the original map.
        let g = Arc::new(Group::symmetric(3).unwrap());
        let h = g.subgroup(&[0, 3, 4]).unwrap(); // C_3, index 2, p = 3
        let k = Module::trivial(g.clone(), f(3));
        let id_down = ModuleMap::identity(&restrict(&k, &h));
        let beta = adjoint_to_induced_target(&k, &h, &id_down);
        let gamma = adjoint_to_induced_source(&k, &h, &id_down);
        let comp = gamma.compose(&beta);
        assert_eq!(comp.mat(), ModuleMap::identity(&k).scale(2).mat());
        // Same composite over C_4 with H = C_2 collapses: [G:H] = 2 = 0 in F_2.
        let g4 = c4();
        let h2 = g4.subgroup(&[0, 2]).unwrap();
        let m2 = Module::jordan(g4.clone(), f(2), 2).unwrap();
        let idm = ModuleMap::identity(&restrict(&m2, &h2));
        let comp2 = adjoint_to_induced_source(&m2, &h2, &idm)
            .compose(&adjoint_to_induced_target(&m2, &h2, &idm));
        assert!(comp2.is_zero());
    }

    #[test]
    fn induced_dimension_divisible_by_p_for_proper_subgroups() {
        let g = Arc::new(Group::elementary_abelian(2, 2).unwrap());
        for h in g.all_subgroups() {
            if h.is_whole_group() {
                continue;
            }
            let kh = Module::trivial(Arc::new(h.local_group().clone()), f(2));
            assert_eq!(induce(&kh, &g, &h).dim() % 2, 0);
        }
    }
}
