//! Named groups and the subgroup families of `A_n` studied here.
//!
//! Block-structured constructors lay blocks out consecutively:
//! `{1..m}, {m+1..2m}, ...`. [`PartitionSpec`] covers other layouts.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::autos;
use crate::config::Caps;
use crate::dominion::{AutCertificate, SimpleGroup, VarietyContext};
use crate::error::{Error, Result};
use crate::group::{self, ElementIndex, FactorDescriptor, PermGroup, Subgroup, TieBreak};
use crate::perm::{parse_cycles, Permutation};

const M11_GENERATORS: [&str; 2] = ["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"];

/// What is known about `Aut` of a catalog group without computing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AutMetadata {
    /// Conjugation by `S_n` induces all of `Aut(A_n)`.
    AutEqualsAmbientSymmetric,
    AutAllInner,
    None,
}

#[derive(Debug, Clone, Serialize)]
pub struct NamedGroupEntry {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    pub certified_order: u64,
    pub aut_metadata: AutMetadata,
    pub standard_generating_pair: (usize, usize),
    /// For subgroup entries (M10), the group they live in.
    pub parent: Option<String>,
}

impl NamedGroupEntry {
    pub fn generator_perms(&self) -> Result<Vec<Permutation>> {
        self.generators
            .iter()
            .map(|g| parse_cycles(g, self.degree))
            .collect()
    }

    /// Builds the group and checks its order against the certified value.
    pub fn load(&self, caps: &Caps) -> Result<PermGroup> {
        if self.certified_order > caps.closure as u64 {
            return Err(Error::cap(
                format!("{} (order {})", self.name, self.certified_order),
                caps.closure,
            ));
        }
        let g = PermGroup::generate(&self.generator_perms()?, caps)?;
        if g.order() as u64 != self.certified_order {
            return Err(Error::CorruptCatalog {
                name: self.name.clone(),
                expected: self.certified_order,
                got: g.order() as u64,
            });
        }
        Ok(g)
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn cycle_string(points: impl IntoIterator<Item = usize>) -> String {
    let pts: Vec<String> = points.into_iter().map(|p| p.to_string()).collect();
    format!("({})", pts.join(" "))
}

fn alternating_generators(n: usize) -> Vec<String> {
    match n {
        0..=2 => vec!["()".into()],
        _ if n % 2 == 1 => vec!["(1 2 3)".into(), cycle_string(1..=n)],
        _ => vec!["(1 2 3)".into(), cycle_string(2..=n)],
    }
}

fn symmetric_generators(n: usize) -> Vec<String> {
    match n {
        1 => vec!["()".into()],
        2 => vec!["(1 2)".into()],
        _ => vec![cycle_string(1..=n), "(1 2)".into()],
    }
}

/// Looks up a catalog entry: `A<n>`, `S<n>` for `1 <= n <= 12`, `M11`, `M10`.
pub fn entry(name: &str) -> Result<NamedGroupEntry> {
    let unknown = || Error::UnknownGroup(name.to_string());
    match name {
        "M11" => Ok(NamedGroupEntry {
            name: "M11".into(),
            degree: 11,
            generators: M11_GENERATORS.iter().map(|s| s.to_string()).collect(),
            certified_order: 7920,
            aut_metadata: AutMetadata::AutAllInner,
            standard_generating_pair: (0, 1),
            parent: None,
        }),
        "M10" => Ok(NamedGroupEntry {
            name: "M10".into(),
            degree: 11,
            generators: Vec::new(),
            certified_order: 720,
            aut_metadata: AutMetadata::None,
            standard_generating_pair: (0, 1),
            parent: Some("M11".into()),
        }),
        _ => {
            let (kind, rest) = name.split_at(1.min(name.len()));
            let n: usize = rest.parse().map_err(|_| unknown())?;
            if !(1..=12).contains(&n) {
                return Err(unknown());
            }
            match kind {
                "A" => Ok(NamedGroupEntry {
                    name: name.into(),
                    degree: n,
                    generators: alternating_generators(n),
                    certified_order: if n < 2 { 1 } else { factorial(n) / 2 },
                    aut_metadata: if n >= 5 && n != 6 {
                        AutMetadata::AutEqualsAmbientSymmetric
                    } else {
                        AutMetadata::None
                    },
                    standard_generating_pair: (0, 1),
                    parent: None,
                }),
                "S" => Ok(NamedGroupEntry {
                    name: name.into(),
                    degree: n,
                    generators: symmetric_generators(n),
                    certified_order: factorial(n),
                    aut_metadata: AutMetadata::None,
                    standard_generating_pair: (0, 1),
                    parent: None,
                }),
                _ => Err(unknown()),
            }
        }
    }
}

/// The listing shown by `catalog list`.
pub fn list() -> Vec<NamedGroupEntry> {
    let mut out = Vec::new();
    for n in 5..=12 {
        out.push(entry(&format!("A{n}")).expect("in range"));
    }
    for n in 5..=12 {
        out.push(entry(&format!("S{n}")).expect("in range"));
    }
    out.push(entry("M11").expect("known"));
    out.push(entry("M10").expect("known"));
    out
}

pub fn alternating(n: usize, caps: &Caps) -> Result<PermGroup> {
    entry(&format!("A{n}"))
        .map_err(|_| Error::InvalidParameters(format!("alternating degree {n} outside 1..=12")))?
        .load(caps)
}

pub fn symmetric(n: usize, caps: &Caps) -> Result<PermGroup> {
    entry(&format!("S{n}"))
        .map_err(|_| Error::InvalidParameters(format!("symmetric degree {n} outside 1..=12")))?
        .load(caps)
}

pub fn mathieu11(caps: &Caps) -> Result<PermGroup> {
    entry("M11")?.load(caps)
}

/// `M_10`, the stabilizer of the point 11 in `M_11`.
pub fn mathieu10(m11: &Arc<PermGroup>) -> Result<Subgroup> {
    let h = point_stabilizer(m11, 11)?;
    if h.order() != 720 {
        return Err(Error::CorruptCatalog {
            name: "M10".into(),
            expected: 720,
            got: h.order() as u64,
        });
    }
    Ok(h)
}

/// A catalog group as a [`SimpleGroup`], with its automorphism certificate
/// attached when the metadata provides one.
pub fn simple_group(name: &str, caps: &Caps) -> Result<SimpleGroup> {
    let e = entry(name)?;
    if e.parent.is_some() {
        return Err(Error::Precondition(format!("{name} is not simple")));
    }
    let g = Arc::new(e.load(caps)?);
    let pair = g.generator_indices();
    let pair = (
        pair[e.standard_generating_pair.0],
        pair[e.standard_generating_pair.1],
    );
    let s = SimpleGroup::new(name, g, caps)?.with_generating_pair(pair)?;
    Ok(match e.aut_metadata {
        AutMetadata::AutEqualsAmbientSymmetric => {
            let ambient = Arc::new(symmetric(e.degree, caps)?);
            s.with_certificate(AutCertificate::AmbientConjugation {
                ambient,
                ambient_name: format!("S{}", e.degree),
            })
        }
        AutMetadata::AutAllInner => s.with_certificate(AutCertificate::AllInner),
        AutMetadata::None => s,
    })
}

/// Setwise stabilizer of a single point, by filtering.
pub fn point_stabilizer(parent: &Arc<PermGroup>, point: usize) -> Result<Subgroup> {
    if point == 0 || point > parent.degree() {
        return Err(Error::PointOutOfRange {
            point,
            degree: parent.degree(),
        });
    }
    let mut members = fixedbitset::FixedBitSet::with_capacity(parent.order());
    for i in 0..parent.order() as ElementIndex {
        if parent.table(i)[point - 1] as usize == point - 1 {
            members.insert(i as usize);
        }
    }
    Ok(Subgroup::from_members(parent, members))
}

/// Even part of the group generated by `gens`: the gens themselves if all
/// are even; otherwise Schreier generators for the transversal `{e, t}`
/// with `t` the first odd generator.
fn even_part(gens: &[Permutation]) -> Vec<Permutation> {
    let Some(t) = gens.iter().find(|g| !g.is_even()) else {
        return gens.to_vec();
    };
    let ti = t.inverse();
    let mut out = Vec::new();
    for g in gens {
        let (a, b) = if g.is_even() {
            (
                g.clone(),
                t.then(g).and_then(|x| x.then(&ti)).expect("same degree"),
            )
        } else {
            (
                g.then(&ti).expect("same degree"),
                t.then(g).expect("same degree"),
            )
        };
        for x in [a, b] {
            if !x.is_identity() && !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out
}

fn transposition(a: usize, b: usize, n: usize) -> Permutation {
    parse_cycles(&format!("({a} {b})"), n).expect("points in range")
}

/// Transpositions generating the symmetric group on `block`.
fn block_transpositions(block: &[usize], n: usize) -> Vec<Permutation> {
    block
        .windows(2)
        .map(|w| transposition(w[0], w[1], n))
        .collect()
}

/// Pointwise swap of two equal-size blocks, matching them in sorted order.
fn block_swap(a: &[usize], b: &[usize], n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    a.sort_unstable();
    b.sort_unstable();
    for (&x, &y) in a.iter().zip(&b) {
        images[x - 1] = y;
        images[y - 1] = x;
    }
    Permutation::from_images(&images).expect("disjoint blocks")
}

fn check_alternating_parent(parent: &PermGroup) -> Result<usize> {
    let n = parent.degree();
    let expected = if n < 2 { 1 } else { factorial(n) / 2 };
    if parent.order() as u64 != expected || !parent.generators().iter().all(|g| g.is_even()) {
        return Err(Error::Precondition(format!(
            "parent is not the alternating group of degree {n}"
        )));
    }
    Ok(n)
}

fn even_subgroup(parent: &Arc<PermGroup>, gens: Vec<Permutation>) -> Result<Subgroup> {
    Subgroup::from_generators(parent, &even_part(&gens))
}

/// Copy of `A_{n-1}` fixing `point` inside `A_n`.
pub fn point_stabilizer_in_alternating(a_n: &Arc<PermGroup>, point: usize) -> Result<Subgroup> {
    let n = check_alternating_parent(a_n)?;
    if n < 3 || point == 0 || point > n {
        return Err(Error::InvalidParameters(format!("point {point} for A_{n}")));
    }
    let rest: Vec<usize> = (1..=n).filter(|&p| p != point).collect();
    even_subgroup(a_n, block_transpositions(&rest, n))
}

/// `(S_m x S_{n-m}) ∩ A_n`: even permutations fixing `{1..m}` setwise.
pub fn intransitive_maximal(a_n: &Arc<PermGroup>, m: usize) -> Result<Subgroup> {
    let n = check_alternating_parent(a_n)?;
    if n < 5 || m < 1 || 2 * m > n || 2 * m == n {
        return Err(Error::InvalidParameters(format!(
            "intransitive maximal subgroup needs n >= 5, 1 <= m <= n/2, m != n - m (got n={n}, m={m})"
        )));
    }
    young_intersection(a_n, &[m, n - m])
}

/// `(S_m wr S_k) ∩ A_n` for `n = m k`: even permutations preserving the
/// partition into `k` consecutive blocks of size `m`.
pub fn imprimitive_maximal(a_n: &Arc<PermGroup>, m: usize, k: usize) -> Result<Subgroup> {
    let n = check_alternating_parent(a_n)?;
    if m < 2 || k < 2 || m * k != n {
        return Err(Error::InvalidParameters(format!(
            "imprimitive maximal subgroup needs n = m k with m, k > 1 (got n={n}, m={m}, k={k})"
        )));
    }
    let blocks: Vec<Vec<usize>> = (0..k)
        .map(|b| (b * m + 1..=(b + 1) * m).collect())
        .collect();
    partition_stabilizer_even(a_n, &PartitionSpec::new(n, blocks)?)
}

/// `A_n ∩ (S_{m_1} x ... x S_{m_r})` on consecutive blocks of sizes `parts`.
pub fn young_intersection(a_n: &Arc<PermGroup>, parts: &[usize]) -> Result<Subgroup> {
    let n = check_alternating_parent(a_n)?;
    if parts.iter().sum::<usize>() != n || parts.contains(&0) {
        return Err(Error::InvalidParameters(format!(
            "parts {parts:?} do not sum to {n}"
        )));
    }
    let mut gens = Vec::new();
    let mut start = 1;
    for &m in parts {
        let block: Vec<usize> = (start..start + m).collect();
        gens.extend(block_transpositions(&block, n));
        start += m;
    }
    even_subgroup(a_n, gens)
}

/// A partition of `{1..n}` into nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionSpec {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl PartitionSpec {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<PartitionSpec> {
        let mut seen = HashSet::new();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidParameters("empty block".into()));
            }
            for &p in b {
                if p == 0 || p > n {
                    return Err(Error::PointOutOfRange {
                        point: p,
                        degree: n,
                    });
                }
                if !seen.insert(p) {
                    return Err(Error::InvalidParameters(format!("point {p} in two blocks")));
                }
            }
        }
        if seen.len() != n {
            return Err(Error::InvalidParameters(format!(
                "blocks cover {} of {n} points",
                seen.len()
            )));
        }
        Ok(PartitionSpec { n, blocks })
    }

    /// Parses `"1,2|3,4|5,6"` (blocks separated by `|`, points by `,` or spaces).
    pub fn parse(n: usize, text: &str) -> Result<PartitionSpec> {
        let blocks = text
            .split('|')
            .map(|b| {
                b.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::InvalidParameters(format!("bad point {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PartitionSpec::new(n, blocks)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Whether `p` maps every block onto a block.
    pub fn is_preserved_by(&self, p: &Permutation) -> bool {
        let block_of = self.block_index();
        self.blocks.iter().all(|b| {
            let target = block_of[p.image(b[0]) - 1];
            b.iter().all(|&x| block_of[p.image(x) - 1] == target)
        })
    }

    fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &p in b {
                idx[p - 1] = i;
            }
        }
        idx
    }
}

/// Even permutations mapping each block of `spec` onto a block.
pub fn partition_stabilizer_even(a_n: &Arc<PermGroup>, spec: &PartitionSpec) -> Result<Subgroup> {
    let n = check_alternating_parent(a_n)?;
    if spec.degree() != n {
        return Err(Error::DegreeMismatch(spec.degree(), n));
    }
    let mut gens = Vec::new();
    for b in spec.blocks() {
        gens.extend(block_transpositions(b, n));
    }
    for (i, a) in spec.blocks().iter().enumerate() {
        if let Some(b) = spec.blocks()[i + 1..].iter().find(|b| b.len() == a.len()) {
            gens.push(block_swap(a, b, n));
        }
    }
    even_subgroup(a_n, gens)
}

/// Whether the simple group `t` is a subfactor of `g`.
///
/// Stage one searches for an embedding of `t` by extending images of its
/// generating pair, with the first image taken up to conjugacy. If that
/// fails and `|g| <= 2000`, stage two closes every pair of elements of `g`
/// and inspects the composition factors of each resulting subgroup; since
/// `t` is 2-generated, any section `H/N ≅ t` already occurs in a
/// 2-generated subgroup of `H`. Larger groups without an embedding are
/// reported as undecided.
pub fn is_involved(t: &SimpleGroup, g: &Arc<PermGroup>, caps: &Caps) -> Result<bool> {
    let t_order = t.group().order();
    if !g.order().is_multiple_of(t_order) {
        return Ok(false);
    }
    if g.order() > caps.closure {
        return Err(Error::cap("involvement check", caps.closure));
    }
    let (a, b) = t.generating_pair();
    let cayley = autos::cayley_tables(t.group(), &[a, b]);
    let (oa, ob) = (t.group().element_order(a), t.group().element_order(b));
    let classes = g.conjugacy_classes();
    let reps: Vec<ElementIndex> = classes
        .iter()
        .map(|c| c[0])
        .filter(|&x| g.element_order(x) == oa)
        .collect();
    let cand_b: Vec<ElementIndex> = (0..g.order() as ElementIndex)
        .filter(|&y| g.element_order(y) == ob)
        .collect();
    for &x in &reps {
        for &y in &cand_b {
            if let Some(map) = autos::extend_homomorphism(t.group(), &cayley, g, &[x, y]) {
                // a nontrivial homomorphism out of a simple group is injective
                if map.iter().any(|&m| m != group::IDENTITY) {
                    return Ok(true);
                }
            }
        }
    }
    if g.order() > 2000 {
        return Err(Error::Undecided {
            sub: t.name().to_string(),
            group: format!("group of order {}", g.order()),
        });
    }
    let target = FactorDescriptor::of_group(t.group());
    let mut seen = HashSet::new();
    for class in &classes {
        for y in 0..g.order() as ElementIndex {
            let sub = Subgroup::generated(g, &[class[0], y]);
            if !sub.order().is_multiple_of(t_order) || !seen.insert(sub.member_set().clone()) {
                continue;
            }
            let sg = Arc::new(sub.to_group(caps)?);
            if group::composition_factors(&sg, caps, TieBreak::Lexicographic)?.contains(&target) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Drops every member involved in another member. Members must be pairwise
/// non-isomorphic (screened by composition-factor descriptor).
pub fn reduce_family(groups: &[Arc<SimpleGroup>], caps: &Caps) -> Result<VarietyContext> {
    if groups.is_empty() {
        return Err(Error::InvalidParameters("empty family".into()));
    }
    let descriptors: Vec<FactorDescriptor> = groups
        .iter()
        .map(|s| FactorDescriptor::of_group(s.group()))
        .collect();
    for i in 0..groups.len() {
        if !groups[i].witness().is_nonabelian_simple() {
            return Err(Error::Precondition(format!(
                "{} is not nonabelian simple",
                groups[i].name()
            )));
        }
        for j in 0..i {
            if descriptors[i] == descriptors[j] {
                return Err(Error::DuplicateMember(format!(
                    "{} and {}",
                    groups[j].name(),
                    groups[i].name()
                )));
            }
        }
    }
    let mut kept = Vec::new();
    for (i, s) in groups.iter().enumerate() {
        let mut involved = false;
        for (j, other) in groups.iter().enumerate() {
            if i != j && is_involved(s, other.group(), caps)? {
                involved = true;
                break;
            }
        }
        if !involved {
            kept.push(s.clone());
        }
    }
    Ok(VarietyContext::reduced(kept))
}

/// Orbit of the ordered `k`-tuple `(1, ..., k)` under the group.
pub fn tuple_orbit_size(g: &PermGroup, k: usize) -> usize {
    let start: Vec<usize> = (1..=k).collect();
    let mut seen = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(t) = stack.pop() {
        for s in g.generators() {
            let u: Vec<usize> = t.iter().map(|&p| s.image(p)).collect();
            if seen.insert(u.clone()) {
                stack.push(u);
            }
        }
    }
    seen.len()
}
