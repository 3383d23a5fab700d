//! Finite groups as explicit multiplication tables, subgroup machinery, and
//! group actions on finite vertex sets.
//!
//! Groups are stored as full multiplication tables rather than generator
//! words: the graph constructions need arbitrary products and inverses in
//! O(1), and the element cap keeps tables small. Element 0 is always the
//! identity, so reports are reproducible.

use crate::bitset::Bitset;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

/// Default cap on the order of groups built by closing permutation generators.
pub const DEFAULT_ELEMENT_CAP: usize = 5040;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("permutation closure exceeded the element cap of {cap}")]
    ClosureTooLarge { cap: usize },
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("invalid group action: {0}")]
    InvalidAction(String),
}

/// Concrete realizations of finite groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupDescriptor {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    DirectProduct(Box<GroupDescriptor>, Box<GroupDescriptor>),
    /// Closure of the given permutations (one-line notation, all on the same
    /// number of points) under composition.
    FromPermutations(Vec<Vec<usize>>),
}

impl std::fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupDescriptor::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupDescriptor::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupDescriptor::Symmetric(n) => write!(f, "symmetric({n})"),
            GroupDescriptor::DirectProduct(a, b) => write!(f, "product({a},{b})"),
            GroupDescriptor::FromPermutations(gens) => {
                write!(f, "perm_closure[")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", cycle_notation(g))?;
                }
                write!(f, "]")
            }
        }
    }
}

/// A finite group as an explicit multiplication table with element labels.
///
/// Invariants (checked by [`GroupTable::validate`]): element 0 is a two-sided
/// identity, `inv` gives two-sided inverses, every row and column of `mul` is
/// a permutation, and multiplication is associative.
#[derive(Debug, Clone)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
    /// Present when the group was built by closing permutations; holds the
    /// one-line form of each element on the original points.
    natural_perms: Option<Vec<Vec<usize>>>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.order + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g] as usize
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn from_mul_table(
        order: usize,
        mul: Vec<u32>,
        labels: Vec<String>,
        natural_perms: Option<Vec<Vec<usize>>>,
    ) -> Result<Self, GroupError> {
        let mut inv = vec![u32::MAX; order];
        for g in 0..order {
            for h in 0..order {
                if mul[g * order + h] == 0 {
                    inv[g] = h as u32;
                }
            }
        }
        if inv.contains(&u32::MAX) {
            return Err(GroupError::InvalidTable(
                "some element has no right inverse".into(),
            ));
        }
        let table = GroupTable {
            order,
            mul,
            inv,
            labels,
            natural_perms,
        };
        table.validate()?;
        Ok(table)
    }

    /// Checks all table invariants. Associativity is checked by a full triple
    /// loop up to order 64 and by deterministic sampling beyond.
    pub fn validate(&self) -> Result<(), GroupError> {
        let n = self.order;
        if n == 0 || self.mul.len() != n * n || self.labels.len() != n {
            return Err(GroupError::InvalidTable("table shape mismatch".into()));
        }
        for g in 0..n {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(GroupError::InvalidTable(
                    "element 0 is not a two-sided identity".into(),
                ));
            }
            if self.mul(g, self.inv(g)) != 0 || self.mul(self.inv(g), g) != 0 {
                return Err(GroupError::InvalidTable("bad inverse".into()));
            }
        }
        // Latin square property: rows and columns are permutations.
        let mut seen = vec![false; n];
        for g in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for h in 0..n {
                let x = self.mul(g, h);
                if x >= n || seen[x] {
                    return Err(GroupError::InvalidTable(format!(
                        "row {g} is not a permutation"
                    )));
                }
                seen[x] = true;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for h in 0..n {
                let x = self.mul(h, g);
                if seen[x] {
                    return Err(GroupError::InvalidTable(format!(
                        "column {g} is not a permutation"
                    )));
                }
                seen[x] = true;
            }
        }
        let check = |a: usize, b: usize, c: usize| -> bool {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !check(a, b, c) {
                            return Err(GroupError::InvalidTable(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0xA550C);
            for _ in 0..(1 << 18) {
                let (a, b, c) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if !check(a, b, c) {
                    return Err(GroupError::InvalidTable(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The one-line permutations behind a closure-built group, if any.
    pub fn natural_perms(&self) -> Option<&[Vec<usize>]> {
        self.natural_perms.as_deref()
    }
}

/// Builds a validated group from a descriptor with the default element cap.
pub fn build_group(descriptor: &GroupDescriptor) -> Result<GroupTable, GroupError> {
    build_group_with_cap(descriptor, DEFAULT_ELEMENT_CAP)
}

pub fn build_group_with_cap(
    descriptor: &GroupDescriptor,
    cap: usize,
) -> Result<GroupTable, GroupError> {
    match descriptor {
        GroupDescriptor::Cyclic(n) => {
            let n = *n;
            if n == 0 {
                return Err(GroupError::InvalidDescriptor("cyclic(0) is empty".into()));
            }
            let mut mul = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    mul[i * n + j] = ((i + j) % n) as u32;
                }
            }
            let labels = (0..n).map(|i| i.to_string()).collect();
            GroupTable::from_mul_table(n, mul, labels, None)
        }
        GroupDescriptor::Dihedral(n) => {
            let n = *n;
            if n == 0 {
                return Err(GroupError::InvalidDescriptor("dihedral(0) is empty".into()));
            }
            let order = 2 * n;
            // Elements 0..n are rotations r^i, elements n..2n are s*r^i,
            // with the relation r*s = s*r^{-1}.
            let mut mul = vec![0u32; order * order];
            let idx = |refl: bool, a: usize| if refl { n + a } else { a };
            for i in 0..order {
                for j in 0..order {
                    let (ri, ai) = (i >= n, i % n);
                    let (rj, aj) = (j >= n, j % n);
                    let v = match (ri, rj) {
                        (false, false) => idx(false, (ai + aj) % n),
                        (false, true) => idx(true, (n + aj - ai) % n),
                        (true, false) => idx(true, (ai + aj) % n),
                        (true, true) => idx(false, (n + aj - ai) % n),
                    };
                    mul[i * order + j] = v as u32;
                }
            }
            let labels = (0..order)
                .map(|i| match (i >= n, i % n) {
                    (false, 0) => "e".to_string(),
                    (false, a) => format!("r{a}"),
                    (true, 0) => "s".to_string(),
                    (true, a) => format!("sr{a}"),
                })
                .collect();
            GroupTable::from_mul_table(order, mul, labels, None)
        }
        GroupDescriptor::Symmetric(n) => {
            let n = *n;
            if n == 0 || n > 6 {
                return Err(GroupError::InvalidDescriptor(
                    "symmetric(n) supports 1 <= n <= 6".into(),
                ));
            }
            let perms = all_permutations(n);
            group_from_perm_set(perms)
        }
        GroupDescriptor::DirectProduct(a, b) => {
            let ga = build_group_with_cap(a, cap)?;
            let gb = build_group_with_cap(b, cap)?;
            let (na, nb) = (ga.order(), gb.order());
            let order = na * nb;
            if order > cap {
                return Err(GroupError::ClosureTooLarge { cap });
            }
            let mut mul = vec![0u32; order * order];
            for i in 0..order {
                for j in 0..order {
                    let (ia, ib) = (i / nb, i % nb);
                    let (ja, jb) = (j / nb, j % nb);
                    mul[i * order + j] = (ga.mul(ia, ja) * nb + gb.mul(ib, jb)) as u32;
                }
            }
            let labels = (0..order)
                .map(|i| format!("({},{})", ga.label(i / nb), gb.label(i % nb)))
                .collect();
            GroupTable::from_mul_table(order, mul, labels, None)
        }
        GroupDescriptor::FromPermutations(gens) => {
            if gens.is_empty() {
                return Err(GroupError::InvalidDescriptor("no generators given".into()));
            }
            let m = gens[0].len();
            for g in gens {
                if g.len() != m || !is_permutation(g) {
                    return Err(GroupError::InvalidDescriptor(
                        "generators must be permutations on a common point set".into(),
                    ));
                }
            }
            // Close the generators under composition, identity first.
            let identity: Vec<usize> = (0..m).collect();
            let mut elements = vec![identity.clone()];
            let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
            index.insert(identity, 0);
            let mut head = 0;
            while head < elements.len() {
                for gen in gens {
                    let prod = compose(&elements[head], gen);
                    if !index.contains_key(&prod) {
                        if elements.len() >= cap {
                            return Err(GroupError::ClosureTooLarge { cap });
                        }
                        index.insert(prod.clone(), elements.len());
                        elements.push(prod);
                    }
                }
                head += 1;
            }
            group_from_perm_set(elements)
        }
    }
}

/// `p` after `q`: `(p.q)(x) = p(q(x))`.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| {
        if x < seen.len() && !seen[x] {
            seen[x] = true;
            true
        } else {
            false
        }
    })
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    // lexicographic next-permutation; the identity comes first
    while let Some(i) = (0..n.saturating_sub(1))
        .rev()
        .find(|&i| cur[i] < cur[i + 1])
    {
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

fn group_from_perm_set(perms: Vec<Vec<usize>>) -> Result<GroupTable, GroupError> {
    let order = perms.len();
    let mut index: HashMap<&[usize], usize> = HashMap::new();
    for (i, p) in perms.iter().enumerate() {
        index.insert(p.as_slice(), i);
    }
    let mut mul = vec![0u32; order * order];
    for i in 0..order {
        for j in 0..order {
            let prod = compose(&perms[i], &perms[j]);
            let k = *index.get(prod.as_slice()).ok_or_else(|| {
                GroupError::InvalidTable("set not closed under composition".into())
            })?;
            mul[i * order + j] = k as u32;
        }
    }
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    GroupTable::from_mul_table(order, mul, labels, Some(perms))
}

/// Cycle notation for a permutation in one-line form; identity is `()`.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut v = start;
        let mut first = true;
        while !seen[v] {
            seen[v] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&v.to_string());
            first = false;
            v = p[v];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// A subgroup given by its membership mask.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subgroup {
    pub members: Bitset,
}

impl Subgroup {
    pub fn whole_group(g: &GroupTable) -> Self {
        Subgroup {
            members: Bitset::from_indices(g.order(), &(0..g.order()).collect::<Vec<_>>()),
        }
    }

    pub fn order(&self) -> usize {
        self.members.count()
    }

    pub fn index_in(&self, g: &GroupTable) -> usize {
        g.order() / self.order()
    }

    /// Closure under multiplication and inversion, containing the identity.
    pub fn validate(&self, g: &GroupTable) -> Result<(), GroupError> {
        if !self.members.contains(g.identity()) {
            return Err(GroupError::InvalidTable(
                "subgroup misses the identity".into(),
            ));
        }
        let elems = self.members.to_indices();
        for &a in &elems {
            if !self.members.contains(g.inv(a)) {
                return Err(GroupError::InvalidTable(
                    "subgroup not closed under inverse".into(),
                ));
            }
            for &b in &elems {
                if !self.members.contains(g.mul(a, b)) {
                    return Err(GroupError::InvalidTable(
                        "subgroup not closed under product".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Exactly the index-two subgroups of `g`.
///
/// These are the kernels of the surjective characters onto `{+1,-1}`. Every
/// such character factors through the quotient of `g` by the subgroup
/// generated by all squares (that quotient is elementary abelian, hence also
/// kills commutators), so the kernels are read off from an F2 basis of the
/// quotient. The output order is deterministic.
pub fn index_two_subgroups(g: &GroupTable) -> Vec<Subgroup> {
    let n = g.order();
    // subgroup generated by all squares: close the identity under right
    // multiplication by the squares (the seed is conjugation-closed, so the
    // result is normal, and the quotient is elementary abelian)
    let mut is_seed = vec![false; n];
    let mut seed: Vec<usize> = Vec::new();
    for x in 0..n {
        let sq = g.mul(x, x);
        if !is_seed[sq] {
            is_seed[sq] = true;
            seed.push(sq);
        }
    }
    let mut in_n = vec![false; n];
    let mut members = vec![g.identity()];
    in_n[g.identity()] = true;
    let mut head = 0;
    while head < members.len() {
        let a = members[head];
        head += 1;
        for &s in &seed {
            let p = g.mul(a, s);
            if !in_n[p] {
                in_n[p] = true;
                members.push(p);
            }
        }
    }
    if members.len() == n {
        return Vec::new();
    }

    // label cosets of the squares subgroup
    let mut coset = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..n {
        if coset[x] == usize::MAX {
            let id = reps.len();
            reps.push(x);
            for &m in &members {
                coset[g.mul(x, m)] = id;
            }
        }
    }
    let q = reps.len();

    // F2 coordinates on the (elementary abelian) quotient
    let mut coords: Vec<Option<u32>> = vec![None; q];
    coords[coset[g.identity()]] = Some(0);
    let mut basis_bits = 0u32;
    for c in 0..q {
        if coords[c].is_some() {
            continue;
        }
        let bit = 1u32 << basis_bits;
        basis_bits += 1;
        let known: Vec<(usize, u32)> = coords
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|x| (i, x)))
            .collect();
        for (s, x) in known {
            let t = coset[g.mul(reps[s], reps[c])];
            if coords[t].is_none() {
                coords[t] = Some(x | bit);
            }
        }
    }
    let coords: Vec<u32> = coords
        .into_iter()
        .map(|c| c.expect("span covers quotient"))
        .collect();

    let mut out = Vec::new();
    for m in 1u32..(1 << basis_bits) {
        let mut mask = Bitset::new(n);
        for x in 0..n {
            if (coords[coset[x]] & m).count_ones().is_multiple_of(2) {
                mask.insert(x);
            }
        }
        let sub = Subgroup { members: mask };
        debug_assert!(sub.validate(g).is_ok());
        debug_assert_eq!(sub.order() * 2, n);
        out.push(sub);
    }
    out
}

/// A left action of a group on `{0 .. degree-1}`.
#[derive(Debug, Clone)]
pub struct GroupAction {
    order: usize,
    degree: usize,
    act: Vec<u32>,
}

impl GroupAction {
    /// The regular action: the group acting on itself by left multiplication.
    pub fn regular(g: &GroupTable) -> Self {
        let n = g.order();
        let mut act = vec![0u32; n * n];
        for x in 0..n {
            for v in 0..n {
                act[x * n + v] = g.mul(x, v) as u32;
            }
        }
        GroupAction {
            order: n,
            degree: n,
            act,
        }
    }

    /// The defining point action of a closure-built permutation group.
    pub fn natural(g: &GroupTable) -> Result<Self, GroupError> {
        let perms = g.natural_perms().ok_or_else(|| {
            GroupError::InvalidAction("group has no natural permutation form".into())
        })?;
        let degree = perms[0].len();
        let mut act = vec![0u32; g.order() * degree];
        for (x, p) in perms.iter().enumerate() {
            for v in 0..degree {
                act[x * degree + v] = p[v] as u32;
            }
        }
        let a = GroupAction {
            order: g.order(),
            degree,
            act,
        };
        a.validate(g)?;
        Ok(a)
    }

    /// The induced action on unordered pairs of points, in lexicographic
    /// order: (0,1), (0,2), ..., (0,m-1), (1,2), ...
    pub fn on_pairs(&self, g: &GroupTable) -> Result<Self, GroupError> {
        let m = self.degree;
        if m < 2 {
            return Err(GroupError::InvalidAction(
                "pair action needs at least two points".into(),
            ));
        }
        let mut pair_index = vec![vec![usize::MAX; m]; m];
        let mut pairs = Vec::new();
        #[allow(clippy::needless_range_loop)]
        for i in 0..m {
            for j in (i + 1)..m {
                pair_index[i][j] = pairs.len();
                pair_index[j][i] = pairs.len();
                pairs.push((i, j));
            }
        }
        let degree = pairs.len();
        let mut act = vec![0u32; self.order * degree];
        for x in 0..self.order {
            for (p, &(i, j)) in pairs.iter().enumerate() {
                let (a, b) = (self.apply(x, i), self.apply(x, j));
                act[x * degree + p] = pair_index[a][b] as u32;
            }
        }
        let a = GroupAction {
            order: self.order,
            degree,
            act,
        };
        a.validate(g)?;
        Ok(a)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn apply(&self, g: usize, v: usize) -> usize {
        self.act[g * self.degree + v] as usize
    }

    /// Validates the left-action axioms: identity acts trivially and
    /// `act[gh] = act[g] . act[h]`. The compatibility loop is sampled when
    /// the full triple loop would be too large.
    pub fn validate(&self, g: &GroupTable) -> Result<(), GroupError> {
        if self.order != g.order() {
            return Err(GroupError::InvalidAction("action order mismatch".into()));
        }
        for v in 0..self.degree {
            if self.apply(g.identity(), v) != v {
                return Err(GroupError::InvalidAction(
                    "identity does not act trivially".into(),
                ));
            }
        }
        for x in 0..self.order {
            let mut seen = vec![false; self.degree];
            for v in 0..self.degree {
                let w = self.apply(x, v);
                if w >= self.degree || seen[w] {
                    return Err(GroupError::InvalidAction(format!(
                        "element {x} does not act by a bijection"
                    )));
                }
                seen[w] = true;
            }
        }
        let full = self.order * self.order * self.degree;
        let check = |a: usize, b: usize, v: usize| -> bool {
            self.apply(g.mul(a, b), v) == self.apply(a, self.apply(b, v))
        };
        if full <= (1 << 24) {
            for a in 0..self.order {
                for b in 0..self.order {
                    for v in 0..self.degree {
                        if !check(a, b, v) {
                            return Err(GroupError::InvalidAction(format!(
                                "action is not compatible with multiplication at ({a},{b},{v})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0xAC710);
            for _ in 0..(1 << 20) {
                let (a, b, v) = (
                    rng.gen_range(0..self.order),
                    rng.gen_range(0..self.order),
                    rng.gen_range(0..self.degree),
                );
                if !check(a, b, v) {
                    return Err(GroupError::InvalidAction(format!(
                        "action is not compatible with multiplication at ({a},{b},{v})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Orbit partition of the acted-on set, restricted to a subgroup when given.
/// Orbits are listed by their smallest element, each sorted ascending.
pub fn orbits(a: &GroupAction, restrict_to: Option<&Subgroup>) -> Vec<Vec<usize>> {
    let mut visited = vec![false; a.degree()];
    let mut out = Vec::new();
    let members: Vec<usize> = match restrict_to {
        Some(h) => h.members.to_indices(),
        None => (0..a.group_order()).collect(),
    };
    for v in 0..a.degree() {
        if visited[v] {
            continue;
        }
        let mut orbit_mask = Bitset::new(a.degree());
        for &h in &members {
            orbit_mask.insert(a.apply(h, v));
        }
        let orbit = orbit_mask.to_indices();
        for &w in &orbit {
            visited[w] = true;
        }
        out.push(orbit);
    }
    out
}

pub fn is_transitive(a: &GroupAction) -> bool {
    orbits(a, None).len() == 1
}

/// True when every index-two subgroup of the acting group has at least two
/// orbits (vacuously true when there is none).
pub fn no_index_two_transitive(g: &GroupTable, a: &GroupAction) -> bool {
    index_two_subgroups(g)
        .iter()
        .all(|h| orbits(a, Some(h)).len() >= 2)
}

pub fn stabilizer_size(a: &GroupAction, v: usize) -> usize {
    (0..a.group_order()).filter(|&g| a.apply(g, v) == v).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> GroupTable {
        build_group(&GroupDescriptor::Cyclic(n)).unwrap()
    }

    #[test]
    fn cyclic_groups() {
        let g1 = cyclic(1);
        assert_eq!(g1.order(), 1);
        assert_eq!(g1.mul(0, 0), 0);

        let g3 = cyclic(3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g3.mul(i, j), (i + j) % 3);
            }
        }
        assert_eq!(g3.inv(1), 2);
    }

    #[test]
    fn dihedral_tables_validate() {
        for n in 1..=8 {
            let g = build_group(&GroupDescriptor::Dihedral(n)).unwrap();
            assert_eq!(g.order(), 2 * n);
            // every reflection is an involution
            for i in n..2 * n {
                assert_eq!(g.mul(i, i), 0);
            }
        }
    }

    #[test]
    fn symmetric_and_closure() {
        let s3 = build_group(&GroupDescriptor::Symmetric(3)).unwrap();
        assert_eq!(s3.order(), 6);

        // closure of {(0 1), (0 1 2)} is the full symmetric group on 3 points
        let gens = vec![vec![1, 0, 2], vec![1, 2, 0]];
        let g = build_group(&GroupDescriptor::FromPermutations(gens)).unwrap();
        assert_eq!(g.order(), 6);
        // non-abelian of order 6, hence isomorphic to symmetric(3)
        let mut abelian = true;
        for a in 0..6 {
            for b in 0..6 {
                if g.mul(a, b) != g.mul(b, a) {
                    abelian = false;
                }
            }
        }
        assert!(!abelian);
    }

    #[test]
    fn closure_cap() {
        let gens = vec![vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]];
        match build_group_with_cap(&GroupDescriptor::FromPermutations(gens), 50) {
            Err(GroupError::ClosureTooLarge { cap: 50 }) => {}
            other => panic!("expected ClosureTooLarge, got {other:?}"),
        }
    }

    #[test]
    fn index_two_examples() {
        assert!(index_two_subgroups(&cyclic(5)).is_empty());

        let subs = index_two_subgroups(&cyclic(6));
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].members.to_indices(), vec![0, 2, 4]);

        let klein = build_group(&GroupDescriptor::DirectProduct(
            Box::new(GroupDescriptor::Cyclic(2)),
            Box::new(GroupDescriptor::Cyclic(2)),
        ))
        .unwrap();
        let subs = index_two_subgroups(&klein);
        assert_eq!(subs.len(), 3);
        for s in &subs {
            assert_eq!(s.order(), 2);
            s.validate(&klein).unwrap();
        }
    }

    /// Brute force over all subsets closed under the operation.
    fn brute_force_index_two(g: &GroupTable) -> Vec<Vec<usize>> {
        let n = g.order();
        assert!(n <= 16);
        let mut found = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize * 2 != n || mask & 1 == 0 {
                continue;
            }
            let elems: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let closed = elems
                .iter()
                .all(|&a| elems.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1));
            if closed {
                found.push(elems);
            }
        }
        found
    }

    #[test]
    fn index_two_matches_brute_force() {
        let mut groups: Vec<GroupTable> = (1..=16).map(cyclic).collect();
        for n in 1..=8 {
            groups.push(build_group(&GroupDescriptor::Dihedral(n)).unwrap());
        }
        groups.push(build_group(&GroupDescriptor::Symmetric(3)).unwrap());
        groups.push(
            build_group(&GroupDescriptor::DirectProduct(
                Box::new(GroupDescriptor::Cyclic(2)),
                Box::new(GroupDescriptor::Cyclic(4)),
            ))
            .unwrap(),
        );
        groups.push(
            build_group(&GroupDescriptor::DirectProduct(
                Box::new(GroupDescriptor::Cyclic(2)),
                Box::new(GroupDescriptor::DirectProduct(
                    Box::new(GroupDescriptor::Cyclic(2)),
                    Box::new(GroupDescriptor::Cyclic(2)),
                )),
            ))
            .unwrap(),
        );
        for g in &groups {
            if g.order() > 16 {
                continue;
            }
            let fast: Vec<Vec<usize>> = index_two_subgroups(g)
                .iter()
                .map(|s| s.members.to_indices())
                .collect();
            let mut fast_sorted = fast.clone();
            fast_sorted.sort();
            let mut brute = brute_force_index_two(g);
            brute.sort();
            assert_eq!(fast_sorted, brute, "group {:?}", g.labels().first());
        }
    }

    #[test]
    fn orbit_examples() {
        let g6 = cyclic(6);
        let act = GroupAction::regular(&g6);
        let h = Subgroup {
            members: Bitset::from_indices(6, &[0, 2, 4]),
        };
        assert_eq!(orbits(&act, Some(&h)), vec![vec![0, 2, 4], vec![1, 3, 5]]);
        assert_eq!(orbits(&act, None).len(), 1);
        let trivial = Subgroup {
            members: Bitset::from_indices(6, &[0]),
        };
        assert_eq!(orbits(&act, Some(&trivial)).len(), 6);

        // orbit sizes under a subgroup divide the subgroup order
        for orbit in orbits(&act, Some(&h)) {
            assert_eq!(3 % orbit.len(), 0);
        }
    }

    #[test]
    fn transitivity_examples() {
        let g6 = cyclic(6);
        let act = GroupAction::regular(&g6);
        assert!(is_transitive(&act));
        assert!(no_index_two_transitive(&g6, &act));

        let gens = vec![vec![1, 0, 2], vec![1, 2, 0]];
        let s3 = build_group(&GroupDescriptor::FromPermutations(gens)).unwrap();
        let nat = GroupAction::natural(&s3).unwrap();
        assert!(is_transitive(&nat));
        assert!(!no_index_two_transitive(&s3, &nat));

        // trivial group acting on 2 points cannot be transitive: model it as
        // the natural action of the closure of the identity permutation
        let triv = build_group(&GroupDescriptor::FromPermutations(vec![vec![0, 1]])).unwrap();
        let act = GroupAction::natural(&triv).unwrap();
        assert!(!is_transitive(&act));
        assert_eq!(stabilizer_size(&act, 0), 1);
    }

    #[test]
    fn stabilizer_examples() {
        let g6 = cyclic(6);
        assert_eq!(stabilizer_size(&GroupAction::regular(&g6), 3), 1);

        let s3 = build_group(&GroupDescriptor::FromPermutations(vec![
            vec![1, 0, 2],
            vec![1, 2, 0],
        ]))
        .unwrap();
        let nat = GroupAction::natural(&s3).unwrap();
        for v in 0..3 {
            assert_eq!(stabilizer_size(&nat, v), 2);
        }
        // orbit-stabilizer for a transitive action
        assert_eq!(s3.order(), stabilizer_size(&nat, 0) * nat.degree());
    }

    #[test]
    fn cycle_notation_format() {
        assert_eq!(cycle_notation(&[0, 1, 2]), "()");
        assert_eq!(cycle_notation(&[1, 0, 2]), "(0 1)");
        assert_eq!(cycle_notation(&[1, 2, 0, 4, 3]), "(0 1 2)(3 4)");
    }
}
