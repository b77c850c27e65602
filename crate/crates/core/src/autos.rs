//! Automorphisms of finite permutation groups, as element-index tables.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{self, ElementIndex, PermGroup, Subgroup, IDENTITY};
use crate::perm;

/// A bijective endomorphism: `mapping[i]` is the index of the image of
/// element `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    mapping: Vec<ElementIndex>,
    inner_witness: Option<ElementIndex>,
}

impl Automorphism {
    pub fn identity(base: &PermGroup) -> Automorphism {
        Automorphism {
            mapping: (0..base.order() as ElementIndex).collect(),
            inner_witness: Some(IDENTITY),
        }
    }

    /// Conjugation `x -> c^-1 x c` by an element `c` of a group normalizing `base`.
    pub fn conjugation(base: &PermGroup, c: &perm::Permutation) -> Result<Automorphism> {
        let ci = c.inverse();
        let mut buf = vec![0u8; base.degree()];
        let mut tmp = vec![0u8; base.degree()];
        let mut mapping = Vec::with_capacity(base.order());
        for i in 0..base.order() as ElementIndex {
            perm::compose_into(ci.table(), base.table(i), &mut tmp);
            perm::compose_into(&tmp, c.table(), &mut buf);
            let j = base.index_of(&buf).ok_or_else(|| {
                Error::Precondition(format!("conjugation by {c} does not preserve the group"))
            })?;
            mapping.push(j);
        }
        let inner_witness = base.index(c);
        Ok(Automorphism {
            mapping,
            inner_witness,
        })
    }

    pub fn mapping(&self) -> &[ElementIndex] {
        &self.mapping
    }

    pub fn inner_witness(&self) -> Option<ElementIndex> {
        self.inner_witness
    }

    pub fn is_inner(&self) -> bool {
        self.inner_witness.is_some()
    }

    pub fn apply(&self, i: ElementIndex) -> ElementIndex {
        self.mapping[i as usize]
    }

    pub fn fixes(&self, i: ElementIndex) -> bool {
        self.mapping[i as usize] == i
    }

    pub fn is_identity(&self) -> bool {
        self.mapping
            .iter()
            .enumerate()
            .all(|(i, &j)| i as ElementIndex == j)
    }

    /// "`self` then `other`".
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            mapping: self
                .mapping
                .iter()
                .map(|&i| other.mapping[i as usize])
                .collect(),
            inner_witness: None,
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut mapping = vec![0; self.mapping.len()];
        for (i, &j) in self.mapping.iter().enumerate() {
            mapping[j as usize] = i as ElementIndex;
        }
        Automorphism {
            mapping,
            inner_witness: None,
        }
    }

    /// Checks bijectivity and `phi(ab) = phi(a) phi(b)` on the given pairs.
    pub fn check_on(&self, base: &PermGroup, pairs: &[(ElementIndex, ElementIndex)]) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.mapping.len());
        let bijective = self.mapping.iter().all(|&j| !seen.put(j as usize));
        bijective
            && self.fixes(IDENTITY)
            && pairs
                .iter()
                .all(|&(a, b)| self.apply(base.mul(a, b)) == base.mul(self.apply(a), self.apply(b)))
    }
}

/// A group of automorphisms of `base`, sorted by mapping table.
#[derive(Debug, Clone)]
pub struct AutGroup {
    base: Arc<PermGroup>,
    autos: Vec<Automorphism>,
    inner_count: usize,
}

impl AutGroup {
    fn new(base: &Arc<PermGroup>, mut autos: Vec<Automorphism>) -> AutGroup {
        autos.sort_by(|a, b| a.mapping.cmp(&b.mapping));
        let inner_count = autos.iter().filter(|a| a.is_inner()).count();
        AutGroup {
            base: base.clone(),
            autos,
            inner_count,
        }
    }

    pub fn base(&self) -> &Arc<PermGroup> {
        &self.base
    }

    pub fn autos(&self) -> &[Automorphism] {
        &self.autos
    }

    pub fn len(&self) -> usize {
        self.autos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.autos.is_empty()
    }

    pub fn inner_count(&self) -> usize {
        self.inner_count
    }

    pub fn contains(&self, phi: &Automorphism) -> bool {
        self.autos
            .binary_search_by(|a| a.mapping.cmp(&phi.mapping))
            .is_ok()
    }

    /// Verifies closure under composition and inverses. An automorphism is
    /// determined by the images of a generating set, so products are looked
    /// up by those images instead of comparing full tables.
    pub fn is_closed(&self) -> bool {
        let gens = self.base.generator_indices();
        let key = |phi: &Automorphism| gens.iter().map(|&g| phi.apply(g)).collect::<Vec<_>>();
        let keys: HashSet<Vec<ElementIndex>> = self.autos.iter().map(key).collect();
        if !self.autos.iter().any(|a| a.is_identity()) {
            return false;
        }
        self.autos.iter().all(|phi| {
            let inv = phi.inverse();
            keys.contains(&key(&inv))
                && self.autos.iter().all(|psi| {
                    keys.contains(
                        &gens
                            .iter()
                            .map(|&g| psi.apply(phi.apply(g)))
                            .collect::<Vec<_>>(),
                    )
                })
        })
    }
}

/// The inner automorphisms, one per coset of the center.
pub fn inner_automorphisms(base: &Arc<PermGroup>, caps: &Caps) -> Result<AutGroup> {
    if base.order() > caps.automorphisms {
        return Err(Error::cap("inner automorphism table", caps.automorphisms));
    }
    let mut seen = HashSet::new();
    let gens = base.generator_indices();
    let mut autos = Vec::new();
    for c in 0..base.order() as ElementIndex {
        let key: Vec<_> = gens.iter().map(|&g| base.conj(g, c)).collect();
        if seen.insert(key) {
            autos.push(Automorphism::conjugation(base, &base.element(c))?);
        }
    }
    Ok(AutGroup::new(base, autos))
}

/// Automorphisms of `base` induced by conjugation by elements of `ambient`,
/// de-duplicated. `ambient` must normalize `base`.
pub fn ambient_conjugation_autos(
    base: &Arc<PermGroup>,
    ambient: &Arc<PermGroup>,
    caps: &Caps,
) -> Result<AutGroup> {
    if base.order() > caps.automorphisms {
        return Err(Error::cap("ambient conjugation table", caps.automorphisms));
    }
    if base.degree() != ambient.degree() {
        return Err(Error::DegreeMismatch(base.degree(), ambient.degree()));
    }
    for c in ambient.generators() {
        for s in base.generators() {
            if !base.contains(&c.conjugate(s)?) {
                return Err(Error::Precondition(format!(
                    "group is not normalized by ambient generator {c}"
                )));
            }
        }
    }
    let gens = base.generators();
    let mut seen = HashSet::new();
    let mut autos = Vec::new();
    for c in 0..ambient.order() as ElementIndex {
        let cp = ambient.element(c);
        let key: Vec<_> = gens
            .iter()
            .map(|g| base.index(&cp.conjugate(g).expect("same degree")))
            .collect();
        if seen.insert(key) {
            autos.push(Automorphism::conjugation(base, &cp)?);
        }
    }
    mark_inner(base, &mut autos);
    Ok(AutGroup::new(base, autos))
}

/// Sets `inner_witness` on every automorphism that agrees with conjugation by
/// some element of `base`.
fn mark_inner(base: &PermGroup, autos: &mut [Automorphism]) {
    let gens = base.generator_indices();
    let mut by_images: HashMap<Vec<ElementIndex>, ElementIndex> = HashMap::new();
    for c in (0..base.order() as ElementIndex).rev() {
        by_images.insert(gens.iter().map(|&g| base.conj(g, c)).collect(), c);
    }
    for phi in autos.iter_mut() {
        let key: Vec<_> = gens.iter().map(|&g| phi.apply(g)).collect();
        phi.inner_witness = by_images.get(&key).copied();
    }
}

/// Right-multiplication tables of `group` by each of `gens`.
pub(crate) fn cayley_tables(group: &PermGroup, gens: &[ElementIndex]) -> Vec<Vec<ElementIndex>> {
    gens.iter()
        .map(|&g| {
            (0..group.order() as ElementIndex)
                .map(|x| group.mul(x, g))
                .collect()
        })
        .collect()
}

/// Tries to extend `gens[k] -> images[k]` to a homomorphism `source -> target`.
///
/// Walks the Cayley graph of `source` breadth first, defining the map along a
/// spanning tree and checking every other edge for consistency. Consistency on
/// all edges is exactly the homomorphism condition when `gens` generate.
pub(crate) fn extend_homomorphism(
    source: &PermGroup,
    cayley: &[Vec<ElementIndex>],
    target: &PermGroup,
    images: &[ElementIndex],
) -> Option<Vec<ElementIndex>> {
    const UNSET: ElementIndex = ElementIndex::MAX;
    let mut map = vec![UNSET; source.order()];
    map[IDENTITY as usize] = IDENTITY;
    let mut queue = VecDeque::from([IDENTITY]);
    let mut buf = vec![0u8; target.degree()];
    let image_tables: Vec<&[u8]> = images.iter().map(|&i| target.table(i)).collect();
    while let Some(x) = queue.pop_front() {
        let fx = target.table(map[x as usize]);
        for (k, table) in cayley.iter().enumerate() {
            let y = table[x as usize];
            perm::compose_into(fx, image_tables[k], &mut buf);
            let fy = target.index_of(&buf).expect("target is closed");
            match map[y as usize] {
                UNSET => {
                    map[y as usize] = fy;
                    queue.push_back(y);
                }
                prev if prev != fy => return None,
                _ => {}
            }
        }
    }
    if map.contains(&UNSET) {
        return None;
    }
    Some(map)
}

/// Checks that `pair` generates `base`.
pub(crate) fn check_generating_pair(
    base: &Arc<PermGroup>,
    pair: (ElementIndex, ElementIndex),
) -> Result<()> {
    let sub = Subgroup::generated(base, &[pair.0, pair.1]);
    if sub.is_full() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{} and {} generate a subgroup of order {} in a group of order {}",
            base.element(pair.0),
            base.element(pair.1),
            sub.order(),
            base.order()
        )))
    }
}

/// The first two generators of `base`, which the catalog arranges to be a
/// generating pair.
pub fn standard_pair(base: &PermGroup) -> (ElementIndex, ElementIndex) {
    let g = base.generator_indices();
    (g[0], *g.get(1).unwrap_or(&g[0]))
}

/// The complete automorphism group, by extending every admissible image of a
/// generating pair `(a, b)`.
///
/// Candidate images must match the element order and the conjugacy-class size
/// of `a` and `b`; cycle type is deliberately not used because it is not
/// invariant under automorphisms (it fails for `A_6`).
pub fn enumerate_automorphisms(
    base: &Arc<PermGroup>,
    pair: Option<(ElementIndex, ElementIndex)>,
    caps: &Caps,
) -> Result<AutGroup> {
    if base.order() > caps.automorphisms {
        return Err(Error::cap("automorphism enumeration", caps.automorphisms));
    }
    let (a, b) = pair.unwrap_or_else(|| standard_pair(base));
    check_generating_pair(base, (a, b))?;
    let class_ids = base.conjugacy_class_ids();
    let mut class_size = HashMap::new();
    for &c in &class_ids {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let signature = |x: ElementIndex| (base.element_order(x), class_size[&class_ids[x as usize]]);
    let (sig_a, sig_b) = (signature(a), signature(b));
    let all = 0..base.order() as ElementIndex;
    let cand_a: Vec<_> = all.clone().filter(|&x| signature(x) == sig_a).collect();
    let cand_b: Vec<_> = all.filter(|&x| signature(x) == sig_b).collect();
    let cayley = cayley_tables(base, &[a, b]);
    let mut autos = Vec::new();
    for &x in &cand_a {
        for &y in &cand_b {
            if let Some(mapping) = extend_homomorphism(base, &cayley, base, &[x, y]) {
                let mut seen = FixedBitSet::with_capacity(mapping.len());
                if mapping.iter().all(|&j| !seen.put(j as usize)) {
                    autos.push(Automorphism {
                        mapping,
                        inner_witness: None,
                    });
                }
            }
        }
    }
    mark_inner(base, &mut autos);
    Ok(AutGroup::new(base, autos))
}

/// Automorphisms in `autos` that fix `h` pointwise. Fixing the generators of
/// `h` is enough.
pub fn fixator(autos: &AutGroup, h: &Subgroup) -> Result<Vec<Automorphism>> {
    if !(Arc::ptr_eq(h.parent(), autos.base()) || **h.parent() == **autos.base()) {
        return Err(Error::Precondition(
            "subgroup is not a subgroup of the automorphism base".into(),
        ));
    }
    Ok(autos
        .autos()
        .iter()
        .filter(|phi| h.generators().iter().all(|&g| phi.fixes(g)))
        .cloned()
        .collect())
}

/// `{s in base : phi(s) = s for every phi}`.
pub fn common_fixed_points(base: &Arc<PermGroup>, phis: &[Automorphism]) -> Subgroup {
    let mut members = FixedBitSet::with_capacity(base.order());
    for s in 0..base.order() as ElementIndex {
        if phis.iter().all(|phi| phi.fixes(s)) {
            members.insert(s as usize);
        }
    }
    Subgroup::from_members(base, members)
}

/// Centralizer of `base` in `ambient`: the kernel of the conjugation action.
pub fn conjugation_kernel(base: &PermGroup, ambient: &Arc<PermGroup>) -> Result<Subgroup> {
    group::centralizer(ambient, base.generators())
}
