//! Finite permutation groups with fully enumerated element tables.
//!
//! Elements are kept in one flat byte table sorted lexicographically by image
//! table, so element indices are canonical: the identity is always index 0
//! and every set-valued result can be reported in index order.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::perm::{self, Permutation};

/// Canonical position of an element in its group's element table.
pub type ElementIndex = u32;

/// Index of the identity in every group.
pub const IDENTITY: ElementIndex = 0;

pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<u8>,
    order: usize,
}

impl PermGroup {
    /// Breadth-first closure of `generators`.
    pub fn generate(generators: &[Permutation], caps: &Caps) -> Result<PermGroup> {
        let first = generators.first().ok_or(Error::NoGenerators)?;
        let degree = first.degree();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let identity: Box<[u8]> = (0..degree as u8).collect();
        let mut seen: HashSet<Box<[u8]>> = HashSet::new();
        let mut queue: VecDeque<Box<[u8]>> = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        let mut buf = vec![0u8; degree];
        while let Some(x) = queue.pop_front() {
            for g in generators {
                perm::compose_into(&x, g.table(), &mut buf);
                if !seen.contains(buf.as_slice()) {
                    if seen.len() >= caps.closure {
                        return Err(Error::cap("group closure", caps.closure));
                    }
                    let y: Box<[u8]> = buf.clone().into_boxed_slice();
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut sorted: Vec<Box<[u8]>> = seen.into_iter().collect();
        sorted.sort_unstable();
        let order = sorted.len();
        let mut elements = Vec::with_capacity(order * degree);
        for e in &sorted {
            elements.extend_from_slice(e);
        }
        Ok(PermGroup {
            degree,
            generators: generators.to_vec(),
            elements,
            order,
        })
    }

    /// The trivial group of the given degree.
    pub fn trivial(degree: usize) -> Result<PermGroup> {
        PermGroup::generate(&[Permutation::identity(degree)?], &Caps::default())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> Vec<ElementIndex> {
        self.generators
            .iter()
            .map(|g| self.index_of(g.table()).expect("generators are members"))
            .collect()
    }

    pub(crate) fn table(&self, i: ElementIndex) -> &[u8] {
        let start = i as usize * self.degree;
        &self.elements[start..start + self.degree]
    }

    pub fn element(&self, i: ElementIndex) -> Permutation {
        Permutation::from_table_unchecked(self.table(i).to_vec())
    }

    pub fn elements(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.order as ElementIndex).map(move |i| self.element(i))
    }

    pub(crate) fn index_of(&self, table: &[u8]) -> Option<ElementIndex> {
        if table.len() != self.degree {
            return None;
        }
        let (mut lo, mut hi) = (0usize, self.order);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.table(mid as ElementIndex).cmp(table) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid as ElementIndex),
            }
        }
        None
    }

    pub fn index(&self, p: &Permutation) -> Option<ElementIndex> {
        self.index_of(p.table())
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index(p).is_some()
    }

    /// Index of "`a` then `b`".
    pub fn mul(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        let mut buf = [0u8; perm::MAX_DEGREE];
        let buf = &mut buf[..self.degree];
        perm::compose_into(self.table(a), self.table(b), buf);
        self.index_of(buf).expect("group is closed")
    }

    pub fn inv(&self, a: ElementIndex) -> ElementIndex {
        let mut buf = [0u8; perm::MAX_DEGREE];
        let buf = &mut buf[..self.degree];
        perm::invert_into(self.table(a), buf);
        self.index_of(buf).expect("group is closed")
    }

    /// Index of `g^-1 x g`.
    pub fn conj(&self, x: ElementIndex, g: ElementIndex) -> ElementIndex {
        let gi = self.inv(g);
        self.mul(self.mul(gi, x), g)
    }

    pub fn element_order(&self, a: ElementIndex) -> u64 {
        perm::order_of(self.table(a))
    }

    pub fn commutes(&self, a: ElementIndex, b: ElementIndex) -> bool {
        perm::commute(self.table(a), self.table(b))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Class id of every element under conjugation, classes numbered by their
    /// least element.
    pub fn conjugacy_class_ids(&self) -> Vec<u32> {
        const UNSET: u32 = u32::MAX;
        let gens = self.generator_indices();
        let mut ids = vec![UNSET; self.order];
        let mut next = 0;
        for start in 0..self.order as ElementIndex {
            if ids[start as usize] != UNSET {
                continue;
            }
            ids[start as usize] = next;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &g in &gens {
                    let y = self.conj(x, g);
                    if ids[y as usize] == UNSET {
                        ids[y as usize] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        ids
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<ElementIndex>> {
        let ids = self.conjugacy_class_ids();
        let count = ids.iter().max().map_or(0, |m| *m as usize + 1);
        let mut classes = vec![Vec::new(); count];
        for (i, &c) in ids.iter().enumerate() {
            classes[c as usize].push(i as ElementIndex);
        }
        classes
    }

    pub fn uniform_element(&self, rng: &mut impl rand::Rng) -> ElementIndex {
        rng.gen_range(0..self.order as ElementIndex)
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

/// A subgroup of a parent group, held as a bitset over the parent's
/// element indices together with a generating set.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<PermGroup>,
    members: FixedBitSet,
    generators: Vec<ElementIndex>,
    order: usize,
}

impl Subgroup {
    pub fn trivial(parent: &Arc<PermGroup>) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(parent.order());
        members.insert(IDENTITY as usize);
        Subgroup {
            parent: parent.clone(),
            members,
            generators: Vec::new(),
            order: 1,
        }
    }

    pub fn full(parent: &Arc<PermGroup>) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(parent.order());
        members.insert_range(..);
        Subgroup {
            parent: parent.clone(),
            members,
            generators: parent.generator_indices(),
            order: parent.order(),
        }
    }

    /// Closure of the given parent elements.
    pub fn generated(parent: &Arc<PermGroup>, gens: &[ElementIndex]) -> Subgroup {
        let mut sub = Subgroup::trivial(parent);
        for &g in gens {
            sub.adjoin(g);
        }
        sub
    }

    /// Closure of permutations that must lie in `parent`.
    pub fn from_generators(parent: &Arc<PermGroup>, gens: &[Permutation]) -> Result<Subgroup> {
        let idx = gens
            .iter()
            .map(|g| {
                parent
                    .index(g)
                    .ok_or_else(|| Error::NotAMember(g.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subgroup::generated(parent, &idx))
    }

    /// Builds the subgroup whose members are exactly `members`, deriving a
    /// generating set greedily in index order. `members` must be closed.
    pub fn from_members(parent: &Arc<PermGroup>, members: FixedBitSet) -> Subgroup {
        let mut sub = Subgroup::trivial(parent);
        for i in members.ones() {
            if !sub.contains(i as ElementIndex) {
                sub.adjoin(i as ElementIndex);
            }
        }
        debug_assert_eq!(sub.members, members, "member set was not closed");
        sub
    }

    /// Enlarges `self` to `<self, g>`.
    pub fn adjoin(&mut self, g: ElementIndex) {
        if self.contains(g) {
            return;
        }
        self.generators.push(g);
        let parent = self.parent.clone();
        let mut queue: VecDeque<ElementIndex> =
            self.members.ones().map(|i| i as ElementIndex).collect();
        while let Some(x) = queue.pop_front() {
            for &h in &self.generators {
                let y = parent.mul(x, h);
                if !self.members.put(y as usize) {
                    self.order += 1;
                    queue.push_back(y);
                }
            }
        }
    }

    pub fn parent(&self) -> &Arc<PermGroup> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[ElementIndex] {
        &self.generators
    }

    pub fn generator_perms(&self) -> Vec<Permutation> {
        self.generators
            .iter()
            .map(|&g| self.parent.element(g))
            .collect()
    }

    pub fn contains(&self, i: ElementIndex) -> bool {
        self.members.contains(i as usize)
    }

    pub fn contains_perm(&self, p: &Permutation) -> bool {
        self.parent.index(p).is_some_and(|i| self.contains(i))
    }

    pub fn members(&self) -> impl Iterator<Item = ElementIndex> + '_ {
        self.members.ones().map(|i| i as ElementIndex)
    }

    pub fn member_set(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn member_perms(&self) -> Vec<Permutation> {
        self.members().map(|i| self.parent.element(i)).collect()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_full(&self) -> bool {
        self.order == self.parent.order()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Subgroup::from_members(&self.parent, members)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.parent.commutes(a, b)))
    }

    /// The subgroup as a group in its own right, on the same points.
    pub fn to_group(&self, caps: &Caps) -> Result<PermGroup> {
        let mut gens = self.generator_perms();
        if gens.is_empty() {
            gens.push(Permutation::identity(self.parent.degree())?);
        }
        PermGroup::generate(&gens, caps)
    }

    /// The same subgroup viewed inside another group on the same points.
    pub fn transport(&self, parent: &Arc<PermGroup>) -> Result<Subgroup> {
        Subgroup::from_generators(parent, &self.generator_perms())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.parent, &other.parent) || *self.parent == *other.parent)
            && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order)
            .field("parent_order", &self.parent.order())
            .field("generators", &self.generator_perms())
            .finish()
    }
}

/// `{g in ambient : g commutes with every element of targets}`.
///
/// Commuting with a generating set is equivalent to commuting with the group
/// it generates, so callers normally pass generators.
pub fn centralizer(ambient: &Arc<PermGroup>, targets: &[Permutation]) -> Result<Subgroup> {
    for t in targets {
        if t.degree() != ambient.degree() {
            return Err(Error::DegreeMismatch(ambient.degree(), t.degree()));
        }
    }
    let mut members = FixedBitSet::with_capacity(ambient.order());
    for i in 0..ambient.order() as ElementIndex {
        let x = ambient.table(i);
        if targets.iter().all(|t| perm::commute(x, t.table())) {
            members.insert(i as usize);
        }
    }
    Ok(Subgroup::from_members(ambient, members))
}

/// Centralizer in `ambient` of a subgroup of a (possibly different) group on
/// the same points.
pub fn centralizer_of(ambient: &Arc<PermGroup>, target: &Subgroup) -> Result<Subgroup> {
    centralizer(ambient, &target.generator_perms())
}

pub fn center(group: &Arc<PermGroup>) -> Subgroup {
    centralizer(group, group.generators()).expect("same degree")
}

/// True iff every generator of the parent conjugates `n` into itself.
pub fn is_normal(n: &Subgroup) -> bool {
    let g = n.parent();
    g.generator_indices()
        .into_iter()
        .all(|x| n.generators().iter().all(|&h| n.contains(g.conj(h, x))))
}

/// Smallest normal subgroup of the parent containing `seeds`.
pub fn normal_closure(parent: &Arc<PermGroup>, seeds: &[ElementIndex]) -> Subgroup {
    let mut sub = Subgroup::generated(parent, seeds);
    let gens = parent.generator_indices();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < sub.generators.len() {
            let h = sub.generators[i];
            for &x in &gens {
                let c = parent.conj(h, x);
                if !sub.contains(c) {
                    sub.adjoin(c);
                    changed = true;
                }
            }
            i += 1;
        }
        if !changed {
            return sub;
        }
    }
}

fn canonical_sort(subs: &mut [Subgroup]) {
    subs.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
}

/// Every normal subgroup of `group`, ordered by size and then by member
/// indices. Normal closures of single elements, closed under joins.
pub fn all_normal_subgroups(group: &Arc<PermGroup>, caps: &Caps) -> Result<Vec<Subgroup>> {
    if group.order() > caps.normal {
        return Err(Error::cap("normal subgroup enumeration", caps.normal));
    }
    let mut found: Vec<Subgroup> = vec![Subgroup::trivial(group)];
    let mut keys: HashSet<FixedBitSet> = found.iter().map(|s| s.members.clone()).collect();
    for class in group.conjugacy_classes() {
        let rep = class[0];
        if rep == IDENTITY {
            continue;
        }
        let n = normal_closure(group, &[rep]);
        if keys.insert(n.members.clone()) {
            found.push(n);
        }
    }
    let mut frontier = 0;
    while frontier < found.len() {
        let end = found.len();
        for i in 0..end {
            for j in frontier.max(i + 1)..end {
                let mut join = found[i].clone();
                for &g in found[j].generators() {
                    join.adjoin(g);
                }
                if keys.insert(join.members.clone()) {
                    found.push(join);
                }
            }
        }
        frontier = end;
    }
    canonical_sort(&mut found);
    Ok(found)
}

/// Identifies a composition factor up to the heuristic used throughout:
/// order, commutativity and the multiset of conjugacy-class sizes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FactorDescriptor {
    pub order: u64,
    pub abelian: bool,
    pub class_sizes: Vec<u64>,
}

impl FactorDescriptor {
    pub fn of_group(group: &Arc<PermGroup>) -> FactorDescriptor {
        quotient_descriptor(&Subgroup::trivial(group))
    }
}

impl fmt::Display for FactorDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "order {}{}",
            self.order,
            if self.abelian { " abelian" } else { "" }
        )
    }
}

/// Descriptor of `G/N` for a normal subgroup `N` of `G`.
pub fn quotient_descriptor(normal: &Subgroup) -> FactorDescriptor {
    const UNSET: u32 = u32::MAX;
    let g = normal.parent();
    let mut coset = vec![UNSET; g.order()];
    let mut reps = Vec::new();
    let n_members: Vec<ElementIndex> = normal.members().collect();
    for x in 0..g.order() as ElementIndex {
        if coset[x as usize] != UNSET {
            continue;
        }
        let label = reps.len() as u32;
        reps.push(x);
        for &n in &n_members {
            coset[g.mul(x, n) as usize] = label;
        }
    }
    let gens = g.generator_indices();
    let abelian = gens.iter().all(|&a| {
        gens.iter().all(|&b| {
            let comm = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
            coset[comm as usize] == coset[IDENTITY as usize]
        })
    });
    let mut seen = vec![false; reps.len()];
    let mut class_sizes = Vec::new();
    for start in 0..reps.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut size = 0u64;
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            size += 1;
            for &x in &gens {
                let d = coset[g.conj(reps[c], x) as usize] as usize;
                if !seen[d] {
                    seen[d] = true;
                    stack.push(d);
                }
            }
        }
        class_sizes.push(size);
    }
    class_sizes.sort_unstable();
    FactorDescriptor {
        order: reps.len() as u64,
        abelian,
        class_sizes,
    }
}

/// How to choose among several maximal normal subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// Lexicographically least member-index set.
    Lexicographic,
    /// Uniformly at random from a seeded generator.
    Seeded(u64),
}

/// Composition factors, found by repeatedly splitting off a maximal proper
/// normal subgroup. Returned sorted.
pub fn composition_factors(
    group: &Arc<PermGroup>,
    caps: &Caps,
    tie: TieBreak,
) -> Result<Vec<FactorDescriptor>> {
    let mut rng = match tie {
        TieBreak::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        TieBreak::Lexicographic => None,
    };
    let mut factors = Vec::new();
    let mut current = group.clone();
    while current.order() > 1 {
        let normals = all_normal_subgroups(&current, caps)?;
        let proper: Vec<&Subgroup> = normals.iter().filter(|n| !n.is_full()).collect();
        let maximal: Vec<&Subgroup> = proper
            .iter()
            .copied()
            .filter(|n| {
                !proper
                    .iter()
                    .any(|m| m.order() > n.order() && n.is_subset(m))
            })
            .collect();
        let chosen = match rng.as_mut() {
            Some(rng) => *maximal.choose(rng).expect("trivial subgroup is proper"),
            None => *maximal
                .iter()
                .min_by(|a, b| a.members().cmp(b.members()))
                .expect("trivial subgroup is proper"),
        };
        factors.push(quotient_descriptor(chosen));
        current = Arc::new(chosen.to_group(caps)?);
    }
    factors.sort();
    Ok(factors)
}

/// `G x H` acting on the disjoint union of the point sets, `H` moved up by
/// `deg(G)`.
pub fn direct_product(g: &PermGroup, h: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    let order = g.order().saturating_mul(h.order());
    if order > caps.closure {
        return Err(Error::cap("direct product", caps.closure));
    }
    let degree = g.degree() + h.degree();
    let mut gens = Vec::new();
    for x in g.generators() {
        gens.push(x.shifted(0, degree)?);
    }
    for y in h.generators() {
        gens.push(y.shifted(g.degree(), degree)?);
    }
    PermGroup::generate(&gens, caps)
}

/// Verified simplicity and commutativity flags for a group.
#[derive(Debug, Clone)]
pub struct SimpleWitness {
    group: Arc<PermGroup>,
    nonabelian: bool,
    simple: bool,
}

impl SimpleWitness {
    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn nonabelian(&self) -> bool {
        self.nonabelian
    }

    pub fn simple(&self) -> bool {
        self.simple
    }

    pub fn is_nonabelian_simple(&self) -> bool {
        self.simple && self.nonabelian
    }
}

/// Checks simplicity by computing the normal closure of one element from
/// every nontrivial conjugacy class.
pub fn check_simple_nonabelian(group: &Arc<PermGroup>, caps: &Caps) -> Result<SimpleWitness> {
    if group.order() > caps.normal {
        return Err(Error::cap("simplicity check", caps.normal));
    }
    let nonabelian = !group.is_abelian();
    let simple = group.order() > 1
        && group
            .conjugacy_classes()
            .iter()
            .filter(|c| c[0] != IDENTITY)
            .all(|c| normal_closure(group, &[c[0]]).is_full());
    Ok(SimpleWitness {
        group: group.clone(),
        nonabelian,
        simple,
    })
}

/// Whether some conjugate `g^-1 a g` of `a` equals `b`.
pub fn are_conjugate(a: &Subgroup, b: &Subgroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let g = a.parent();
    (0..g.order() as ElementIndex).any(|x| a.generators().iter().all(|&h| b.contains(g.conj(h, x))))
}

/// One representative per conjugacy class of subgroups found by seeded
/// random sampling of subgroups generated by one or two elements.
///
/// Sampling stops once `patience` consecutive samples produce no new class.
/// Trivial and full subgroups are always included. Representatives are
/// ordered by order and then by member indices.
pub fn sample_subgroup_classes(
    group: &Arc<PermGroup>,
    seed: u64,
    patience: usize,
) -> Vec<Subgroup> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reps = vec![Subgroup::trivial(group), Subgroup::full(group)];
    let ids = group.conjugacy_class_ids();
    let invariant = |h: &Subgroup| {
        let mut v: Vec<u32> = h.members().map(|i| ids[i as usize]).collect();
        v.sort_unstable();
        (h.order(), v)
    };
    let mut keys: Vec<_> = reps.iter().map(invariant).collect();
    let mut idle = 0;
    while idle < patience {
        let k = rng.gen_range(1..=2);
        let gens: Vec<_> = (0..k).map(|_| group.uniform_element(&mut rng)).collect();
        let h = Subgroup::generated(group, &gens);
        let key = invariant(&h);
        let known = reps
            .iter()
            .zip(&keys)
            .any(|(r, rk)| *rk == key && are_conjugate(&h, r));
        if known {
            idle += 1;
        } else {
            reps.push(h);
            keys.push(key);
            idle = 0;
        }
    }
    canonical_sort(&mut reps);
    reps
}

/// Parses the group-spec text format: a `degree n` line followed by one
/// generator per line in cycle notation. `#` starts a comment.
pub fn parse_group_spec(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Spec("missing degree line".into()))?;
    let degree = header
        .strip_prefix("degree")
        .and_then(|d| d.trim().parse::<usize>().ok())
        .ok_or_else(|| Error::Spec(format!("expected `degree <n>`, found {header:?}")))?;
    let gens = lines
        .map(|l| perm::parse_cycles(l, degree))
        .collect::<Result<Vec<_>>>()?;
    let gens = if gens.is_empty() {
        vec![Permutation::identity(degree)?]
    } else {
        gens
    };
    Ok((degree, gens))
}

/// Renders generators in the group-spec text format.
pub fn format_group_spec(degree: usize, gens: &[Permutation]) -> String {
    let mut out = format!("degree {degree}\n");
    for g in gens {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
