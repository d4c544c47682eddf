//! Finite groups of order at most 64 as validated Cayley tables, with
//! subgroup enumeration, Sylow and p-subgroups, conjugation, left
//! transversals, and double cosets.
//!
//! Element 0 is always the identity. Named constructors fix a canonical
//! numbering per family so fixtures and fingerprints are stable:
//! cyclic n: element a is the residue a;
//! elemab p^k: little-endian base-p digits;
//! dihedral 2n: r^a s^b at index b*n + a;
//! quaternion 8: 1,i,j,k,-1,-i,-j,-k in that order;
//! symmetric m: permutations of {0..m-1} in lexicographic one-line order,
//!   composed as (s*t)(x) = s(t(x));
//! products: mixed-radix, first factor most significant.

use crate::error::{Error, Result};
use crate::fingerprint::Fnv64;
use std::collections::BTreeSet;

pub const ORDER_CAP: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    name: String,
    n: usize,
    cayley: Vec<u8>,
    inv: Vec<u8>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Group({}, order {})", self.name, self.n)
    }
}

#[derive(Clone, Debug)]
pub struct Subgroup {
    /// Global element indices, sorted ascending (so the identity 0 leads).
    elements: Vec<u8>,
    /// The subgroup as a group in its own right; local index i is
    /// `elements[i]` upstairs.
    local: Group,
    parent_order: usize,
}

#[derive(Clone, Debug)]
pub struct DoubleCosets {
    /// Minimal element of each coset, ascending.
    pub reps: Vec<u8>,
    /// The full cosets, aligned with `reps`, each sorted.
    pub cosets: Vec<Vec<u8>>,
}

impl Group {
    /// Validates a raw table: square, closed, two-sided identity, Latin
    /// (cancellation), associative. The identity is renumbered to index 0
    /// if it sits elsewhere.
    pub fn build(name: &str, table: &[Vec<usize>]) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidCayley("empty table".into()));
        }
        if n > ORDER_CAP {
            return Err(Error::OrderCap {
                order: n,
                cap: ORDER_CAP,
            });
        }
        let mut flat = vec![0u8; n * n];
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCayley(format!(
                    "row {i} has length {} in an order-{n} table",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidCayley(format!(
                        "entry {v} at ({i},{j}) out of range"
                    )));
                }
                flat[i * n + j] = v as u8;
            }
        }
        // Latin square: every row and column a permutation.
        for i in 0..n {
            let mut seen_r = vec![false; n];
            let mut seen_c = vec![false; n];
            for j in 0..n {
                let r = flat[i * n + j] as usize;
                let c = flat[j * n + i] as usize;
                if seen_r[r] {
                    return Err(Error::InvalidCayley(format!("row {i} is not a permutation")));
                }
                if seen_c[c] {
                    return Err(Error::InvalidCayley(format!(
                        "column {i} is not a permutation"
                    )));
                }
                seen_r[r] = true;
                seen_c[c] = true;
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|j| flat[e * n + j] as usize == j && flat[j * n + e] as usize == j))
            .ok_or_else(|| Error::InvalidCayley("no two-sided identity".into()))?;
        if e != 0 {
            // Relabel by the transposition 0 <-> e.
            let relab = |x: usize| -> usize {
                if x == 0 {
                    e
                } else if x == e {
                    0
                } else {
                    x
                }
            };
            let old = flat.clone();
            for i in 0..n {
                for j in 0..n {
                    flat[i * n + j] = relab(old[relab(i) * n + relab(j)] as usize) as u8;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = flat[a * n + b] as usize;
                for c in 0..n {
                    let bc = flat[b * n + c] as usize;
                    if flat[ab * n + c] != flat[a * n + bc] {
                        return Err(Error::InvalidCayley(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut inv = vec![0u8; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| flat[a * n + b] == 0)
                .expect("Latin square has right inverses");
            if flat[b * n + a] != 0 {
                return Err(Error::InvalidCayley(format!(
                    "inverse of {a} is one-sided"
                )));
            }
            inv[a] = b as u8;
        }
        Ok(Group {
            name: name.to_string(),
            n,
            cayley: flat,
            inv,
        })
    }

    fn from_op(name: &str, n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Group> {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
        Group::build(name, &table)
    }

    pub fn trivial() -> Group {
        Group::cyclic(1).expect("order 1 is in range")
    }

    pub fn cyclic(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::BadSpec("cyclic".into(), "order 0".into()));
        }
        Group::from_op(&format!("cyclic:{n}"), n, move |a, b| (a + b) % n)
    }

    pub fn elementary_abelian(p: usize, k: usize) -> Result<Group> {
        let is_prime = p >= 2 && (2..p).all(|d| p % d != 0);
        if !is_prime || k == 0 {
            return Err(Error::BadSpec(
                "elemab".into(),
                format!("{p}^{k} is not a prime power with k >= 1"),
            ));
        }
        let n = p
            .checked_pow(k as u32)
            .filter(|&n| n <= ORDER_CAP)
            .ok_or(Error::OrderCap {
                order: usize::MAX,
                cap: ORDER_CAP,
            })?;
        Group::from_op(&format!("elemab:{p}:{k}"), n, move |a, b| {
            let (mut a, mut b, mut out, mut scale) = (a, b, 0usize, 1usize);
            for _ in 0..k {
                out += ((a % p) + (b % p)) % p * scale;
                a /= p;
                b /= p;
                scale *= p;
            }
            out
        })
    }

    /// Dihedral group given by its order 2n: rotations r^a and
    /// reflections r^a s.
    pub fn dihedral(order: usize) -> Result<Group> {
        if order < 2 || order % 2 != 0 {
            return Err(Error::BadSpec(
                "dihedral".into(),
                format!("order {order} is not an even number >= 2"),
            ));
        }
        let n = order / 2;
        Group::from_op(&format!("dihedral:{order}"), order, move |x, y| {
            let (a1, b1) = (x % n, x / n);
            let (a2, b2) = (y % n, y / n);
            let a = if b1 == 1 { (a1 + n - a2 % n) % n } else { (a1 + a2) % n };
            a + ((b1 + b2) % 2) * n
        })
    }

    pub fn quaternion(order: usize) -> Result<Group> {
        if order != 8 {
            return Err(Error::BadSpec(
                "quaternion".into(),
                format!("only order 8 is supported, got {order}"),
            ));
        }
        // Basis units 1,i,j,k; bm[a][b] = (sign, unit) of the product.
        const BM: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        Group::from_op("quaternion:8", 8, |x, y| {
            let (s1, b1) = (x / 4, x % 4);
            let (s2, b2) = (y / 4, y % 4);
            let (sm, bm) = BM[b1][b2];
            ((s1 + s2 + sm) % 2) * 4 + bm
        })
    }

    pub fn symmetric(m: usize) -> Result<Group> {
        let mut order = 1usize;
        for i in 1..=m {
            order *= i;
        }
        if m == 0 || order > ORDER_CAP {
            return Err(Error::BadSpec(
                "symmetric".into(),
                format!("degree {m} out of range"),
            ));
        }
        let mut perms: Vec<Vec<usize>> = Vec::with_capacity(order);
        let mut cur: Vec<usize> = (0..m).collect();
        loop {
            perms.push(cur.clone());
            // next lexicographic permutation
            let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..m).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        let index: std::collections::HashMap<Vec<usize>, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Group::from_op(&format!("symmetric:{m}"), order, move |a, b| {
            let comp: Vec<usize> = (0..m).map(|x| perms[a][perms[b][x]]).collect();
            index[&comp]
        })
    }

    pub fn direct_product(name: &str, factors: &[Group]) -> Result<Group> {
        if factors.is_empty() {
            return Err(Error::BadSpec("product".into(), "no factors".into()));
        }
        let n: usize = factors.iter().map(|g| g.n).product();
        if n > ORDER_CAP {
            return Err(Error::OrderCap {
                order: n,
                cap: ORDER_CAP,
            });
        }
        let split = |mut x: usize| -> Vec<usize> {
            let mut parts = vec![0; factors.len()];
            for (i, g) in factors.iter().enumerate().rev() {
                parts[i] = x % g.n;
                x /= g.n;
            }
            parts
        };
        Group::from_op(name, n, move |a, b| {
            let (pa, pb) = (split(a), split(b));
            let mut out = 0usize;
            for (i, g) in factors.iter().enumerate() {
                out = out * g.n + g.mul(pa[i] as u8, pb[i] as u8) as usize;
            }
            out
        })
    }

    /// Parses the CLI group grammar: `cyclic:N`, `elemab:P:K`,
    /// `dihedral:ORDER`, `quaternion:8`, `symmetric:M`,
    /// `product:SPEC,SPEC[,...]`, `trivial`.
    pub fn from_spec(spec: &str) -> Result<Group> {
        let bad = |why: &str| Error::BadSpec(spec.to_string(), why.to_string());
        let parse_n = |s: &str| s.parse::<usize>().map_err(|_| bad("not a number"));
        if spec == "trivial" {
            return Group::cyclic(1);
        }
        if let Some(rest) = spec.strip_prefix("product:") {
            let factors: Vec<Group> = rest
                .split(',')
                .map(Group::from_spec)
                .collect::<Result<_>>()?;
            if factors.len() < 2 {
                return Err(bad("product needs at least two factors"));
            }
            return Group::direct_product(spec, &factors);
        }
        let parts: Vec<&str> = spec.split(':').collect();
        match (parts.as_slice(), parts.first().copied()) {
            ([_, n], Some("cyclic")) => Group::cyclic(parse_n(n)?),
            ([_, p, k], Some("elemab" | "elementary_abelian")) => {
                Group::elementary_abelian(parse_n(p)?, parse_n(k)?)
            }
            ([_, n], Some("dihedral")) => Group::dihedral(parse_n(n)?),
            ([_, n], Some("quaternion")) => Group::quaternion(parse_n(n)?),
            (["quaternion"], _) => Group::quaternion(8),
            ([_, m], Some("symmetric")) => Group::symmetric(parse_n(m)?),
            _ => Err(bad("unrecognized group spec")),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.cayley[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.cayley[i * self.n + j] as usize).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n as u8).all(|a| (0..self.n as u8).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, g: u8) -> usize {
        let mut x = g;
        let mut m = 1;
        while x != 0 {
            x = self.mul(x, g);
            m += 1;
        }
        m
    }

    pub fn is_p_group(&self, p: usize) -> bool {
        let mut n = self.n;
        while n % p == 0 {
            n /= p;
        }
        n == 1
    }

    pub fn fingerprint(&self) -> u64 {
        Fnv64::new()
            .write_usize(self.n)
            .write(&self.cayley)
            .finish()
    }

    /// Greedy generating set: repeatedly adjoin the least element outside
    /// the subgroup generated so far.
    pub fn generators(&self) -> Vec<u8> {
        let mut gens: Vec<u8> = Vec::new();
        let mut have = self.closure(&[]);
        while have.len() < self.n {
            let g = (0..self.n as u8).find(|g| !have.contains(g)).unwrap();
            gens.push(g);
            have = self.closure(&gens);
        }
        gens
    }

    /// Subgroup generated by `seed`, as a sorted element list.
    pub fn closure(&self, seed: &[u8]) -> Vec<u8> {
        let mut in_set = vec![false; self.n];
        in_set[0] = true;
        let mut elems: Vec<u8> = vec![0];
        let mut queue: Vec<u8> = seed.to_vec();
        while let Some(g) = queue.pop() {
            if in_set[g as usize] {
                continue;
            }
            in_set[g as usize] = true;
            elems.push(g);
            for i in 0..elems.len() {
                let y = elems[i];
                for prod in [self.mul(g, y), self.mul(y, g)] {
                    if !in_set[prod as usize] {
                        queue.push(prod);
                    }
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    /// Wraps a closed element set as a Subgroup with its own renumbered
    /// Cayley table (local index = rank in the sorted global list).
    pub fn subgroup(&self, elements: &[u8]) -> Result<Subgroup> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) {
            if elems.iter().any(|&g| g as usize >= self.n) {
                return Err(Error::NotASubgroup("element out of range".into()));
            }
            elems.insert(0, 0);
        }
        let pos = |g: u8| elems.binary_search(&g).ok();
        let mut table = vec![vec![0usize; elems.len()]; elems.len()];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                let p = self.mul(a, b);
                let Some(k) = pos(p) else {
                    return Err(Error::NotASubgroup(format!(
                        "{a}*{b}={p} escapes the element set"
                    )));
                };
                table[i][j] = k;
            }
        }
        let name = format!(
            "{}[{}]",
            self.name,
            elems.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")
        );
        let local = Group::build(&name, &table)?;
        Ok(Subgroup {
            elements: elems,
            local,
            parent_order: self.n,
        })
    }

    pub fn whole_subgroup(&self) -> Subgroup {
        let all: Vec<u8> = (0..self.n as u8).collect();
        self.subgroup(&all).expect("G is a subgroup of itself")
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.subgroup(&[0]).expect("identity alone is a subgroup")
    }

    /// Every subgroup, by closure-BFS over generator adjunction, sorted
    /// by (order, element list).
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
        let mut queue: Vec<Vec<u8>> = vec![self.closure(&[])];
        seen.insert(queue[0].clone());
        while let Some(h) = queue.pop() {
            for g in 0..self.n as u8 {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut seed = h.clone();
                seed.push(g);
                let k = self.closure(&seed);
                if seen.insert(k.clone()) {
                    queue.push(k);
                }
            }
        }
        let mut sets: Vec<Vec<u8>> = seen.into_iter().collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        sets.iter()
            .map(|s| self.subgroup(s).expect("closure output is closed"))
            .collect()
    }

    /// Subgroups of p-power order (the trivial subgroup counts as p^0).
    /// With `up_to_conjugacy`, one representative per conjugacy class,
    /// the one with the lexicographically least element set.
    pub fn p_subgroups(&self, p: usize, up_to_conjugacy: bool) -> Vec<Subgroup> {
        let is_p_power = |m: usize| {
            let mut m = m;
            while m % p == 0 {
                m /= p;
            }
            m == 1
        };
        let mut subs: Vec<Subgroup> = self
            .all_subgroups()
            .into_iter()
            .filter(|h| is_p_power(h.order()))
            .collect();
        if up_to_conjugacy {
            let mut keep: Vec<Subgroup> = Vec::new();
            let mut covered: BTreeSet<Vec<u8>> = BTreeSet::new();
            for h in subs {
                if covered.contains(h.elements()) {
                    continue;
                }
                for x in 0..self.n as u8 {
                    covered.insert(self.conjugate_subgroup(&h, x).elements.clone());
                }
                keep.push(h);
            }
            subs = keep;
        }
        subs
    }

    /// A Sylow p-subgroup: order is the exact p-part of |G|, choice is
    /// the lexicographically least element set among those of that order.
    pub fn sylow_subgroup(&self, p: usize) -> Subgroup {
        let mut p_part = 1usize;
        let mut n = self.n;
        while n % p == 0 {
            p_part *= p;
            n /= p;
        }
        self.p_subgroups(p, false)
            .into_iter()
            .filter(|h| h.order() == p_part)
            .min_by(|a, b| a.elements.cmp(&b.elements))
            .expect("Sylow subgroups exist")
    }

    pub fn conjugate_subgroup(&self, h: &Subgroup, x: u8) -> Subgroup {
        let conj: Vec<u8> = h
            .elements
            .iter()
            .map(|&g| self.mul(self.mul(x, g), self.inv(x)))
            .collect();
        self.subgroup(&conj).expect("conjugate of a subgroup is a subgroup")
    }

    /// Left transversal of H in G: ascending scan keeping the least
    /// representative of each coset gH.
    pub fn left_transversal(&self, h: &Subgroup) -> Vec<u8> {
        let mut covered = vec![false; self.n];
        let mut reps = Vec::new();
        for g in 0..self.n as u8 {
            if covered[g as usize] {
                continue;
            }
            reps.push(g);
            for &x in &h.elements {
                covered[self.mul(g, x) as usize] = true;
            }
        }
        reps
    }

    /// Q\G/H decomposition; each coset is listed sorted and the
    /// representative is its minimal element.
    pub fn double_cosets(&self, q: &Subgroup, h: &Subgroup) -> DoubleCosets {
        let mut covered = vec![false; self.n];
        let mut reps = Vec::new();
        let mut cosets = Vec::new();
        for x in 0..self.n as u8 {
            if covered[x as usize] {
                continue;
            }
            let mut coset: Vec<u8> = Vec::new();
            for &a in &q.elements {
                for &b in &h.elements {
                    let y = self.mul(self.mul(a, x), b);
                    if !covered[y as usize] {
                        covered[y as usize] = true;
                        coset.push(y);
                    }
                }
            }
            coset.sort_unstable();
            reps.push(x);
            cosets.push(coset);
        }
        DoubleCosets { reps, cosets }
    }
}

impl Subgroup {
    pub fn elements(&self) -> &[u8] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn local_group(&self) -> &Group {
        &self.local
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn is_whole_group(&self) -> bool {
        self.elements.len() == self.parent_order
    }

    pub fn contains(&self, g: u8) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn to_local(&self, global: u8) -> Option<u8> {
        self.elements.binary_search(&global).ok().map(|i| i as u8)
    }

    pub fn to_global(&self, local: u8) -> u8 {
        self.elements[local as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_four_has_one_generator() {
        let g = Group::cyclic(4).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.generators(), vec![1]);
        assert!(g.is_abelian());
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g.element_order(2), 2);
    }

    #[test]
    fn klein_four_has_exponent_two() {
        let g = Group::elementary_abelian(2, 2).unwrap();
        assert_eq!(g.order(), 4);
        for a in 1..4u8 {
            assert_eq!(g.element_order(a), 2);
        }
        // Same table as the two-factor product with the same bit layout.
        let prod = Group::from_spec("product:cyclic:2,cyclic:2").unwrap();
        assert_eq!(g.cayley, prod.cayley);
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let g = Group::quaternion(8).unwrap();
        assert!(!g.is_abelian());
        let invols: Vec<u8> = (0..8u8).filter(|&a| g.element_order(a) == 2).collect();
        assert_eq!(invols, vec![4]); // -1
        for unit in [1u8, 2, 3, 5, 6, 7] {
            assert_eq!(g.element_order(unit), 4);
        }
        // i*j = k, j*i = -k
        assert_eq!(g.mul(1, 2), 3);
        assert_eq!(g.mul(2, 1), 7);
    }

    #[test]
    fn symmetric_three_numbering_is_lex_one_line() {
        let g = Group::symmetric(3).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        // (12)*(23) = (123): indices 2*1 = 3, and (23)*(12) = (132) = 4.
        assert_eq!(g.mul(2, 1), 3);
        assert_eq!(g.mul(1, 2), 4);
        assert_eq!(g.element_order(3), 3);
        assert_eq!(g.element_order(2), 2);
    }

    #[test]
    fn dihedral_eight_element_orders() {
        let g = Group::dihedral(8).unwrap();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        assert_eq!(g.element_order(1), 4); // r
        for refl in 4..8u8 {
            assert_eq!(g.element_order(refl), 2);
        }
    }

    #[test]
    fn build_rejects_non_associative_loop() {
        // Order-5 loop: Latin with two-sided identity, (1*1)*2 != 1*(1*2).
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        let err = Group::build("loop", &table).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }

    #[test]
    fn build_rejects_bad_rows_and_missing_identity() {
        let err = Group::build("dup", &[vec![0, 0], vec![1, 1]]).unwrap_err();
        assert!(err.to_string().contains("permutation"), "{err}");
        // (b - a) mod 3 is Latin but has only a left identity.
        let sub3: Vec<Vec<usize>> = (0..3)
            .map(|a: usize| (0..3).map(|b| (b + 3 - a) % 3).collect())
            .collect();
        let err = Group::build("sub3", &sub3).unwrap_err();
        assert!(err.to_string().contains("identity"), "{err}");
    }

    #[test]
    fn build_renumbers_identity_to_zero() {
        // C_2 written with the identity at index 1.
        let g = Group::build("swapped", &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn subgroup_counts_for_small_groups() {
        assert_eq!(Group::cyclic(4).unwrap().all_subgroups().len(), 3);
        assert_eq!(
            Group::elementary_abelian(2, 2).unwrap().all_subgroups().len(),
            5
        );
        assert_eq!(Group::symmetric(3).unwrap().all_subgroups().len(), 6);
        // Sorted by order then elements; Lagrange throughout.
        let subs = Group::symmetric(3).unwrap().all_subgroups();
        let mut last = 0;
        for h in &subs {
            assert!(h.order() >= last);
            last = h.order();
            assert_eq!(6 % h.order(), 0);
        }
    }

    #[test]
    fn p_subgroups_of_s3() {
        let g = Group::symmetric(3).unwrap();
        let p3 = g.p_subgroups(3, false);
        assert_eq!(p3.len(), 2); // trivial + the C_3
        assert_eq!(p3[1].elements(), &[0, 3, 4]);
        let p5 = g.p_subgroups(5, false);
        assert_eq!(p5.len(), 1);
        assert!(p5[0].is_trivial());
        let p2 = g.p_subgroups(2, false);
        assert_eq!(p2.len(), 4); // trivial + three reflections
        let p2c = g.p_subgroups(2, true);
        assert_eq!(p2c.len(), 2); // reflections are all conjugate
        let c4 = Group::cyclic(4).unwrap();
        let orders: Vec<usize> = c4.p_subgroups(2, false).iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 2, 4]);
    }

    #[test]
    fn sylow_subgroups_of_s3_and_c4() {
        let g = Group::symmetric(3).unwrap();
        assert_eq!(g.sylow_subgroup(3).elements(), &[0, 3, 4]);
        let syl2 = g.sylow_subgroup(2);
        assert_eq!(syl2.order(), 2);
        assert_eq!(syl2.elements(), &[0, 1]); // lex-least order-2 subgroup
        let c4 = Group::cyclic(4).unwrap();
        assert!(c4.sylow_subgroup(2).is_whole_group());
        assert!(c4.sylow_subgroup(3).is_trivial());
    }

    #[test]
    fn conjugating_a_reflection_subgroup() {
        let g = Group::symmetric(3).unwrap();
        let h = g.subgroup(&[0, 2]).unwrap(); // <(12)>
        let conj = g.conjugate_subgroup(&h, 3); // by (123)
        assert_eq!(conj.elements(), &[0, 1]); // <(23)>
        assert_eq!(g.conjugate_subgroup(&h, 0).elements(), h.elements());
        // Normal subgroup is fixed by every conjugation.
        let n = g.subgroup(&[0, 3, 4]).unwrap();
        for x in 0..6u8 {
            assert_eq!(g.conjugate_subgroup(&n, x).elements(), n.elements());
        }
    }

    #[test]
    fn double_cosets_in_s3() {
        let g = Group::symmetric(3).unwrap();
        let h = g.subgroup(&[0, 2]).unwrap();
        let dc = g.double_cosets(&h, &h);
        let mut sizes: Vec<usize> = dc.cosets.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
        // Partition, minimal reps, and the orbit-size formula
        // |QxH| = |Q||H| / |Q ∩ xHx^-1|.
        let mut all: Vec<u8> = dc.cosets.concat();
        all.sort_unstable();
        assert_eq!(all, (0..6u8).collect::<Vec<_>>());
        for (rep, coset) in dc.reps.iter().zip(&dc.cosets) {
            assert_eq!(rep, coset.iter().min().unwrap());
            let hx = g.conjugate_subgroup(&h, *rep);
            let inter = h.elements().iter().filter(|g| hx.contains(**g)).count();
            assert_eq!(coset.len(), h.order() * h.order() / inter);
        }
        // Degenerate ends.
        assert_eq!(g.double_cosets(&g.whole_subgroup(), &g.whole_subgroup()).reps.len(), 1);
        let triv = g.trivial_subgroup();
        assert_eq!(g.double_cosets(&triv, &triv).reps.len(), 6);
    }

    #[test]
    fn transversal_matches_trivial_double_cosets() {
        let g = Group::symmetric(3).unwrap();
        let h = g.subgroup(&[0, 2]).unwrap();
        let t = g.left_transversal(&h);
        assert_eq!(t.len(), 3);
        let dc = g.double_cosets(&g.trivial_subgroup(), &h);
        assert_eq!(t, dc.reps);
        // Cosets gH for g in the transversal tile the group.
        let gr = &g;
        let mut union: Vec<u8> = t
            .iter()
            .flat_map(|&r| h.elements().iter().map(move |&x| gr.mul(r, x)))
            .collect();
        union.sort_unstable();
        assert_eq!(union, (0..6u8).collect::<Vec<_>>());
    }

    #[test]
    fn subgroup_local_group_is_renumbered_consistently() {
        let g = Group::cyclic(6).unwrap();
        let h = g.subgroup(&[0, 2, 4]).unwrap();
        assert_eq!(h.order(), 3);
        let l = h.local_group();
        // local 1 = global 2, local 2 = global 4; 2+4=0 upstairs.
        assert_eq!(h.to_global(1), 2);
        assert_eq!(l.mul(1, 2), 0);
        assert_eq!(l.mul(1, 1), 2);
        assert_eq!(h.to_local(4), Some(2));
        assert_eq!(h.to_local(3), None);
        // Rejects unclosed sets.
        assert!(g.subgroup(&[0, 3, 4]).is_err());
    }

    #[test]
    fn from_spec_grammar() {
        assert_eq!(Group::from_spec("cyclic:6").unwrap().order(), 6);
        assert_eq!(Group::from_spec("elemab:3:2").unwrap().order(), 9);
        assert_eq!(Group::from_spec("quaternion:8").unwrap().order(), 8);
        assert_eq!(Group::from_spec("symmetric:4").unwrap().order(), 24);
        assert_eq!(Group::from_spec("trivial").unwrap().order(), 1);
        let p = Group::from_spec("product:cyclic:2,cyclic:4").unwrap();
        assert_eq!(p.order(), 8);
        assert!(p.is_abelian());
        assert_eq!(p.element_order(1), 4); // low digit runs over C_4
        assert_eq!(p.element_order(4), 2); // high digit is the C_2
        assert!(Group::from_spec("cyclic:0").is_err());
        assert!(Group::from_spec("cyclic:65").is_err());
        assert!(Group::from_spec("frobnicate:9").is_err());
        assert!(Group::from_spec("product:cyclic:2").is_err());
    }

    #[test]
    fn group_fingerprint_distinguishes_tables() {
        let a = Group::cyclic(4).unwrap().fingerprint();
        let b = Group::elementary_abelian(2, 2).unwrap().fingerprint();
        assert_ne!(a, b);
        assert_eq!(a, Group::cyclic(4).unwrap().fingerprint());
    }
}
