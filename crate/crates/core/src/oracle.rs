//! Brute-force cross-checks that do not go through automorphism groups.
//!
//! [`dominion_by_definition`] evaluates the equalizer definition of the
//! dominion directly: an element is in the dominion when every pair of
//! homomorphisms into a target that agree on `H` also agree on it. A finite
//! list of targets can only refute a claimed dominion, never confirm it for
//! the whole variety; agreement with the automorphism route on target `S`
//! (and `S x S`) is evidence, not proof.
//!
//! [`goursat_dichotomy_check`] and [`remak_check`] test the two structural
//! facts behind the reduction to automorphisms: subdirect products of two
//! copies of `S` are full or diagonal, and normal subgroups of `S^n` are
//! subproducts.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::autos;
use crate::config::Caps;
use crate::dominion::SimpleGroup;
use crate::error::{Error, Result};
use crate::group::{self, ElementIndex, PermGroup, Subgroup, IDENTITY};
use crate::perm::Permutation;

#[derive(Clone)]
pub struct Homomorphism {
    source: Arc<PermGroup>,
    target: Arc<PermGroup>,
    mapping: Vec<ElementIndex>,
}

impl Homomorphism {
    pub fn source(&self) -> &Arc<PermGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PermGroup> {
        &self.target
    }

    pub fn mapping(&self) -> &[ElementIndex] {
        &self.mapping
    }

    pub fn apply(&self, i: ElementIndex) -> ElementIndex {
        self.mapping[i as usize]
    }

    pub fn kernel_order(&self) -> usize {
        self.mapping.iter().filter(|&&m| m == IDENTITY).count()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_order() == 1
    }

    pub fn is_trivial(&self) -> bool {
        self.kernel_order() == self.mapping.len()
    }
}

impl std::fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Homomorphism")
            .field("source_order", &self.source.order())
            .field("target_order", &self.target.order())
            .field("kernel_order", &self.kernel_order())
            .finish()
    }
}

/// Every homomorphism `source -> target`, via the images of the source's
/// first two generators. Candidate images are pruned to elements whose order
/// divides the generator's order.
pub fn enumerate_homs(
    source: &Arc<PermGroup>,
    target: &Arc<PermGroup>,
    caps: &Caps,
) -> Result<Vec<Homomorphism>> {
    if source.order() > caps.oracle_source {
        return Err(Error::cap("homomorphism source", caps.oracle_source));
    }
    if target.order() > caps.oracle_target {
        return Err(Error::cap("homomorphism target", caps.oracle_target));
    }
    let (a, b) = autos::standard_pair(source);
    autos::check_generating_pair(source, (a, b))?;
    let cayley = autos::cayley_tables(source, &[a, b]);
    let (oa, ob) = (source.element_order(a), source.element_order(b));
    let dividing = |o: u64| -> Vec<ElementIndex> {
        (0..target.order() as ElementIndex)
            .filter(|&x| o.is_multiple_of(target.element_order(x)))
            .collect()
    };
    let (cand_a, cand_b) = (dividing(oa), dividing(ob));
    let mut homs = Vec::new();
    for &x in &cand_a {
        for &y in &cand_b {
            if let Some(mapping) = autos::extend_homomorphism(source, &cayley, target, &[x, y]) {
                homs.push(Homomorphism {
                    source: source.clone(),
                    target: target.clone(),
                    mapping,
                });
            }
        }
    }
    homs.sort_by(|f, g| f.mapping.cmp(&g.mapping));
    Ok(homs)
}

/// The dominion of `h` in `source` with respect to homomorphisms into the
/// given targets: the elements on which any two homomorphisms agreeing on
/// `h` also agree.
pub fn dominion_by_definition(
    source: &Arc<PermGroup>,
    h: &Subgroup,
    targets: &[Arc<PermGroup>],
    caps: &Caps,
) -> Result<Subgroup> {
    if !Arc::ptr_eq(h.parent(), source) && **h.parent() != **source {
        return Err(Error::Precondition(
            "subgroup does not live in the source group".into(),
        ));
    }
    let mut members = FixedBitSet::with_capacity(source.order());
    members.insert_range(..);
    for target in targets {
        let homs = enumerate_homs(source, target, caps)?;
        // Homomorphisms agreeing on h's generators agree on h. Within one
        // such class, the common equalizer is where all members agree.
        let mut classes: HashMap<Vec<ElementIndex>, Vec<&Homomorphism>> = HashMap::new();
        for f in &homs {
            let key = h.generators().iter().map(|&g| f.apply(g)).collect();
            classes.entry(key).or_default().push(f);
        }
        for class in classes.values() {
            let first = class[0];
            for s in 0..source.order() {
                if members.contains(s)
                    && class[1..].iter().any(|g| g.mapping[s] != first.mapping[s])
                {
                    members.set(s, false);
                }
            }
        }
    }
    Ok(Subgroup::from_members(source, members))
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct GoursatReport {
    pub seed: u64,
    pub trials: usize,
    pub subdirect: usize,
    pub full: usize,
    pub graphs: usize,
    pub not_subdirect: usize,
    pub violations: usize,
}

impl GoursatReport {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.subdirect == self.full + self.graphs
    }
}

/// Splits an element of `S x S` (degree `2d`) into its two coordinates.
fn split(prod: &PermGroup, s: &PermGroup, u: ElementIndex) -> (ElementIndex, ElementIndex) {
    let d = s.degree();
    let t = prod.table(u);
    let left = s.index_of(&t[..d]).expect("left coordinate in S");
    let right: Vec<u8> = t[d..].iter().map(|&x| x - d as u8).collect();
    (left, s.index_of(&right).expect("right coordinate in S"))
}

/// Random subgroups of `S x S` generated by at most three pairs. Every trial
/// whose projections are both onto must either contain `S x 1` (and so be
/// everything) or be the graph of an automorphism of `S`.
///
/// Trials cycle through three generator shapes: arbitrary pairs, twisted
/// diagonal pairs `(g, phi(g))` for a random automorphism `phi`, and twisted
/// pairs plus one arbitrary pair.
pub fn goursat_dichotomy_check(
    s: &SimpleGroup,
    trials: usize,
    seed: u64,
    caps: &Caps,
) -> Result<GoursatReport> {
    let base = s.group();
    if base.order().saturating_mul(base.order()) > caps.closure {
        return Err(Error::cap("S x S", caps.closure));
    }
    let auts = s.automorphisms(caps)?;
    let prod = Arc::new(group::direct_product(base, base, caps)?);
    let d = base.degree();
    let pair_perm = |x: ElementIndex, y: ElementIndex| -> Permutation {
        let left = base.element(x).shifted(0, 2 * d).expect("degree fits");
        let right = base.element(y).shifted(d, 2 * d).expect("degree fits");
        left.then(&right).expect("same degree")
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = GoursatReport {
        seed,
        trials,
        ..Default::default()
    };
    for trial in 0..trials {
        let phi = &auts.autos()[rng.gen_range(0..auts.len())];
        let mut gens = Vec::new();
        let (twisted, random) = match trial % 3 {
            0 => (0, rng.gen_range(1..=3)),
            1 => (rng.gen_range(1..=3), 0),
            _ => (2, 1),
        };
        for _ in 0..twisted {
            let g = base.uniform_element(&mut rng);
            gens.push(pair_perm(g, phi.apply(g)));
        }
        for _ in 0..random {
            gens.push(pair_perm(
                base.uniform_element(&mut rng),
                base.uniform_element(&mut rng),
            ));
        }
        let u = Subgroup::from_generators(&prod, &gens)?;
        let mut left = FixedBitSet::with_capacity(base.order());
        let mut right = FixedBitSet::with_capacity(base.order());
        let mut left_kernel = FixedBitSet::with_capacity(base.order());
        let mut graph: Vec<Option<ElementIndex>> = vec![None; base.order()];
        let mut is_function = true;
        for m in u.members() {
            let (x, y) = split(&prod, base, m);
            left.insert(x as usize);
            right.insert(y as usize);
            if y == IDENTITY {
                left_kernel.insert(x as usize);
            }
            match graph[x as usize] {
                None => graph[x as usize] = Some(y),
                Some(prev) if prev != y => is_function = false,
                _ => {}
            }
        }
        let onto = |b: &FixedBitSet| b.count_ones(..) == base.order();
        if !(onto(&left) && onto(&right)) {
            report.not_subdirect += 1;
            continue;
        }
        report.subdirect += 1;
        if onto(&left_kernel) {
            if u.order() == base.order() * base.order() {
                report.full += 1;
            } else {
                report.violations += 1;
            }
            continue;
        }
        let is_graph = is_function && u.order() == base.order() && {
            let mapping: Vec<ElementIndex> = graph
                .iter()
                .map(|y| y.expect("left projection onto"))
                .collect();
            auts.autos()
                .iter()
                .any(|a| a.mapping() == mapping.as_slice())
        };
        if is_graph {
            report.graphs += 1;
        } else {
            report.violations += 1;
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct RemakReport {
    pub power: usize,
    pub normal_subgroups_checked: usize,
    /// Orders of the checked normal subgroups.
    pub orders: Vec<usize>,
    pub all_subproducts: bool,
    /// `true` when every normal subgroup was enumerated rather than sampled.
    pub exhaustive: bool,
}

/// Whether `n`, a subgroup of `S^k` on `k` consecutive blocks of `d` points,
/// is the product of the factors it touches.
fn is_subproduct(n: &Subgroup, factor_order: usize, d: usize, k: usize) -> bool {
    let g = n.parent();
    let mut touched = vec![false; k];
    for m in n.members() {
        let t = g.table(m);
        for (f, hit) in touched.iter_mut().enumerate() {
            if (f * d..(f + 1) * d).any(|p| t[p] as usize != p) {
                *hit = true;
            }
        }
    }
    let count = touched.iter().filter(|&&b| b).count() as u32;
    n.order() == factor_order.pow(count)
}

/// Checks that normal subgroups of `S^power` are subproducts of the factors:
/// exhaustively for `power = 2`, by normal closures of `samples` random
/// elements for `power = 3`.
pub fn remak_check(
    s: &Arc<PermGroup>,
    power: usize,
    samples: usize,
    seed: u64,
    caps: &Caps,
) -> Result<RemakReport> {
    let witness = group::check_simple_nonabelian(s, caps)?;
    if !witness.is_nonabelian_simple() {
        return Err(Error::Precondition(
            "Remak check needs a nonabelian simple group".into(),
        ));
    }
    if !(2..=3).contains(&power) {
        return Err(Error::InvalidParameters(format!(
            "power {power} (expected 2 or 3)"
        )));
    }
    let mut prod = group::direct_product(s, s, caps)?;
    if power == 3 {
        prod = group::direct_product(&prod, s, caps)?;
    }
    let prod = Arc::new(prod);
    let d = s.degree();
    let normals = if power == 2 {
        group::all_normal_subgroups(&prod, caps)?
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples)
            .map(|_| {
                // pick each coordinate independently, identity half the time
                let mut x = Permutation::identity(3 * d).expect("degree fits");
                for f in 0..3 {
                    if rng.gen_bool(0.5) {
                        let e = s
                            .element(s.uniform_element(&mut rng))
                            .shifted(f * d, 3 * d)
                            .expect("fits");
                        x = x.then(&e).expect("same degree");
                    }
                }
                group::normal_closure(&prod, &[prod.index(&x).expect("member")])
            })
            .collect()
    };
    Ok(RemakReport {
        power,
        normal_subgroups_checked: normals.len(),
        orders: normals.iter().map(|n| n.order()).collect(),
        all_subproducts: normals
            .iter()
            .all(|n| is_subproduct(n, s.order(), d, power)),
        exhaustive: power == 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::perm::parse_cycles;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn hom_counts() {
        let a5 = Arc::new(catalog::alternating(5, &caps()).unwrap());
        let homs = enumerate_homs(&a5, &a5, &caps()).unwrap();
        assert_eq!(homs.len(), 121);
        assert!(homs.iter().all(|h| h.is_injective() || h.is_trivial()));
        let c2 =
            Arc::new(PermGroup::generate(&[parse_cycles("(1 2)", 2).unwrap()], &caps()).unwrap());
        assert_eq!(enumerate_homs(&a5, &c2, &caps()).unwrap().len(), 1);
        let s5 = Arc::new(catalog::symmetric(5, &caps()).unwrap());
        assert_eq!(enumerate_homs(&a5, &s5, &caps()).unwrap().len(), 121);
    }

    #[test]
    fn hom_caps() {
        let a7 = Arc::new(catalog::alternating(7, &caps()).unwrap());
        assert!(matches!(
            enumerate_homs(&a7, &a7, &caps()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn definition_examples() {
        let a5 = Arc::new(catalog::alternating(5, &caps()).unwrap());
        let targets = [a5.clone()];
        let a4 = catalog::point_stabilizer_in_alternating(&a5, 5).unwrap();
        assert!(dominion_by_definition(&a5, &a4, &targets, &caps())
            .unwrap()
            .is_full());
        let c5 =
            Subgroup::from_generators(&a5, &[parse_cycles("(1 2 3 4 5)", 5).unwrap()]).unwrap();
        assert_eq!(
            dominion_by_definition(&a5, &c5, &targets, &caps()).unwrap(),
            c5
        );
        assert!(
            dominion_by_definition(&a5, &Subgroup::full(&a5), &targets, &caps())
                .unwrap()
                .is_full()
        );
        assert!(
            dominion_by_definition(&a5, &Subgroup::trivial(&a5), &targets, &caps())
                .unwrap()
                .is_trivial()
        );
    }

    #[test]
    fn goursat_on_a5() {
        let a5 = catalog::simple_group("A5", &caps()).unwrap();
        let r = goursat_dichotomy_check(&a5, 30, 1, &caps()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.graphs > 0 && r.full > 0);
    }

    #[test]
    fn remak_on_a5_squared() {
        let a5 = Arc::new(catalog::alternating(5, &caps()).unwrap());
        let r = remak_check(&a5, 2, 0, 0, &caps()).unwrap();
        assert_eq!(r.orders, vec![1, 60, 60, 3600]);
        assert!(r.all_subproducts);
    }

    #[test]
    fn remak_rejects_non_simple() {
        let s5 = Arc::new(catalog::symmetric(5, &caps()).unwrap());
        assert!(matches!(
            remak_check(&s5, 2, 0, 0, &caps()),
            Err(Error::Precondition(_))
        ));
    }
}
