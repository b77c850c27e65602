//! Dominions in the variety generated by a finite nonabelian simple group.
//!
//! For `H <= S` the dominion of `H` in `Var(S)` is
//!
//! ```text
//! { s in S : phi(s) = s for every phi in Aut(S) with phi|_H = id_H }
//! ```
//!
//! so `H` is epimorphically embedded exactly when the only automorphism of
//! `S` fixing `H` pointwise is the identity. Two routes compute it:
//!
//! * full enumeration of `Aut(S)` followed by a fixed-point scan;
//! * when an ambient group `A` is certified to induce all of `Aut(S)` by
//!   conjugation, the double centralizer `C_S(C_A(H))`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::autos::{self, AutGroup};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{self, ElementIndex, PermGroup, SimpleWitness, Subgroup};

/// Why an ambient group may stand in for `Aut(S)`.
#[derive(Debug, Clone)]
pub enum AutCertificate {
    /// Conjugation by the ambient group induces every automorphism of `S`
    /// (`A_n` inside `S_n` for `n >= 5`, `n != 6`).
    AmbientConjugation {
        ambient: Arc<PermGroup>,
        ambient_name: String,
    },
    /// Every automorphism of `S` is inner, so `S` is its own ambient group.
    AllInner,
}

/// A finite nonabelian simple group with its verified witness, the
/// generating pair used for automorphism enumeration, and an optional
/// certificate enabling the double-centralizer route.
pub struct SimpleGroup {
    name: String,
    witness: SimpleWitness,
    pair: (ElementIndex, ElementIndex),
    certificate: Option<AutCertificate>,
    automorphisms: OnceLock<AutGroup>,
}

impl SimpleGroup {
    /// Verifies that `group` is nonabelian and simple.
    pub fn new(name: impl Into<String>, group: Arc<PermGroup>, caps: &Caps) -> Result<SimpleGroup> {
        let name = name.into();
        let witness = group::check_simple_nonabelian(&group, caps)?;
        if !witness.is_nonabelian_simple() {
            return Err(Error::Precondition(format!(
                "{name} is not a nonabelian simple group (simple: {}, nonabelian: {})",
                witness.simple(),
                witness.nonabelian()
            )));
        }
        let pair = autos::standard_pair(&group);
        Ok(SimpleGroup {
            name,
            witness,
            pair,
            certificate: None,
            automorphisms: OnceLock::new(),
        })
    }

    /// Uses `pair` instead of the first two generators for enumeration.
    pub fn with_generating_pair(
        mut self,
        pair: (ElementIndex, ElementIndex),
    ) -> Result<SimpleGroup> {
        autos::check_generating_pair(self.group(), pair)?;
        self.pair = pair;
        self.automorphisms = OnceLock::new();
        Ok(self)
    }

    /// Attaches a certificate. Certificates are policy, not derived; the
    /// catalog only issues them for the cases listed on [`AutCertificate`].
    pub(crate) fn with_certificate(mut self, certificate: AutCertificate) -> SimpleGroup {
        self.certificate = Some(certificate);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        self.witness.group()
    }

    pub fn witness(&self) -> &SimpleWitness {
        &self.witness
    }

    pub fn generating_pair(&self) -> (ElementIndex, ElementIndex) {
        self.pair
    }

    pub fn certificate(&self) -> Option<&AutCertificate> {
        self.certificate.as_ref()
    }

    /// `Aut(S)` by enumeration, computed once.
    pub fn automorphisms(&self, caps: &Caps) -> Result<&AutGroup> {
        if let Some(a) = self.automorphisms.get() {
            return Ok(a);
        }
        let a = autos::enumerate_automorphisms(self.group(), Some(self.pair), caps)?;
        Ok(self.automorphisms.get_or_init(|| a))
    }

    /// Brings `h` into this group, failing if some generator is not a member.
    pub fn own_subgroup(&self, h: &Subgroup) -> Result<Subgroup> {
        if Arc::ptr_eq(h.parent(), self.group()) {
            return Ok(h.clone());
        }
        h.transport(self.group()).map_err(|_| {
            Error::Precondition(format!("subgroup is not a subgroup of {}", self.name))
        })
    }
}

impl fmt::Debug for SimpleGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGroup")
            .field("name", &self.name)
            .field("order", &self.group().order())
            .field("certified", &self.certificate.is_some())
            .finish()
    }
}

/// Requested computation route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    FastAmbient,
    FullEnumeration,
    /// Fast when a certificate exists, full enumeration otherwise.
    Auto,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::FastAmbient => "fast",
            Mode::FullEnumeration => "full",
            Mode::Auto => "auto",
        })
    }
}

/// Route actually taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Path {
    FastAmbient,
    FullEnumeration,
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Path::FastAmbient => "fast-ambient",
            Path::FullEnumeration => "full-enumeration",
        })
    }
}

#[derive(Debug, Clone)]
pub struct DominionReport {
    pub base_name: String,
    pub base: Arc<PermGroup>,
    pub subgroup: Subgroup,
    pub dominion: Subgroup,
    /// Number of automorphisms of the base fixing the subgroup pointwise.
    pub fixator_size: usize,
    pub is_epi: bool,
    pub path: Path,
    pub variety_generators: Vec<String>,
}

/// The set of automorphisms fixing `h`, in whichever form the route yields.
enum Fixator {
    /// Conjugations by the members of a centralizer in the ambient group;
    /// `kernel` is the order of the centralizer of the whole base.
    Ambient {
        centralizer: Subgroup,
        kernel: usize,
    },
    Enumerated(Vec<autos::Automorphism>),
}

impl Fixator {
    fn size(&self) -> usize {
        match self {
            Fixator::Ambient {
                centralizer,
                kernel,
            } => centralizer.order() / kernel,
            Fixator::Enumerated(v) => v.len(),
        }
    }
}

fn resolve_path(s: &SimpleGroup, mode: Mode) -> Result<Path> {
    match (mode, s.certificate()) {
        (Mode::FullEnumeration, _) => Ok(Path::FullEnumeration),
        (Mode::FastAmbient | Mode::Auto, Some(_)) => Ok(Path::FastAmbient),
        (Mode::Auto, None) => Ok(Path::FullEnumeration),
        (Mode::FastAmbient, None) => Err(Error::FastPathRejected(format!(
            "no ambient group is certified to realize all of Aut({}) by conjugation",
            s.name()
        ))),
    }
}

fn compute_fixator(s: &SimpleGroup, h: &Subgroup, path: Path, caps: &Caps) -> Result<Fixator> {
    match path {
        Path::FastAmbient => {
            let (ambient, kernel) = match s.certificate().expect("path resolved") {
                AutCertificate::AmbientConjugation { ambient, .. } => (
                    ambient.clone(),
                    autos::conjugation_kernel(s.group(), ambient)?.order(),
                ),
                AutCertificate::AllInner => (s.group().clone(), group::center(s.group()).order()),
            };
            let centralizer = group::centralizer(&ambient, &h.generator_perms())?;
            Ok(Fixator::Ambient {
                centralizer,
                kernel,
            })
        }
        Path::FullEnumeration => {
            let auts = s.automorphisms(caps)?;
            Ok(Fixator::Enumerated(autos::fixator(auts, h)?))
        }
    }
}

/// The dominion of `h` in `Var(s)`.
pub fn dominion_in_var(
    s: &SimpleGroup,
    h: &Subgroup,
    mode: Mode,
    caps: &Caps,
) -> Result<DominionReport> {
    let h = s.own_subgroup(h)?;
    let path = resolve_path(s, mode)?;
    let fix = compute_fixator(s, &h, path, caps)?;
    let dominion = match &fix {
        Fixator::Ambient { centralizer, .. } => {
            group::centralizer(s.group(), &centralizer.generator_perms())?
        }
        Fixator::Enumerated(phis) => autos::common_fixed_points(s.group(), phis),
    };
    let is_epi = dominion.is_full();
    Ok(DominionReport {
        base_name: s.name().to_string(),
        base: s.group().clone(),
        subgroup: h,
        dominion,
        fixator_size: fix.size(),
        is_epi,
        path,
        variety_generators: vec![s.name().to_string()],
    })
}

/// Whether `h` is epimorphically embedded in `s` within `Var(s)`: the
/// fixator of `h` in `Aut(s)` is trivial.
pub fn is_epi_embedded(s: &SimpleGroup, h: &Subgroup, mode: Mode, caps: &Caps) -> Result<bool> {
    let h = s.own_subgroup(h)?;
    let path = resolve_path(s, mode)?;
    Ok(compute_fixator(s, &h, path, caps)?.size() == 1)
}

/// A finite family of nonabelian simple groups generating a variety.
#[derive(Debug, Clone)]
pub struct VarietyContext {
    generators: Vec<Arc<SimpleGroup>>,
    reduced: bool,
}

impl VarietyContext {
    /// An unreduced family. Use [`crate::catalog::reduce_family`] to obtain a
    /// family usable with [`dominion_in_family_var`].
    pub fn new(generators: Vec<Arc<SimpleGroup>>) -> Result<VarietyContext> {
        if generators.is_empty() {
            return Err(Error::InvalidParameters("empty family".into()));
        }
        Ok(VarietyContext {
            generators,
            reduced: false,
        })
    }

    pub(crate) fn reduced(generators: Vec<Arc<SimpleGroup>>) -> VarietyContext {
        VarietyContext {
            generators,
            reduced: true,
        }
    }

    pub fn generators(&self) -> &[Arc<SimpleGroup>] {
        &self.generators
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn names(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| g.name().to_string())
            .collect()
    }
}

/// Dominion of a subgroup of the `i0`-th member in the variety generated by
/// a reduced family: the same set as in `Var(S_i0)`.
pub fn dominion_in_family_var(
    ctx: &VarietyContext,
    i0: usize,
    h: &Subgroup,
    mode: Mode,
    caps: &Caps,
) -> Result<DominionReport> {
    if !ctx.is_reduced() {
        return Err(Error::UnreducedFamily);
    }
    let s = ctx.generators.get(i0).ok_or(Error::FamilyIndex {
        index: i0,
        len: ctx.generators.len(),
    })?;
    let mut report = dominion_in_var(s, h, mode, caps)?;
    report.variety_generators = ctx.names();
    Ok(report)
}

/// Outcome of checking the closure-operator laws on a list of subgroups.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ClosureReport {
    pub subgroups: usize,
    pub nested_pairs: usize,
    pub extensive: bool,
    pub idempotent: bool,
    pub monotone: bool,
    pub failures: Vec<String>,
}

impl ClosureReport {
    pub fn holds(&self) -> bool {
        self.extensive && self.idempotent && self.monotone
    }
}

/// Checks extensivity, idempotence and monotonicity of the dominion over
/// `subgroups` and every nested pair among them.
pub fn check_closure_properties(
    s: &SimpleGroup,
    subgroups: &[Subgroup],
    mode: Mode,
    caps: &Caps,
) -> Result<ClosureReport> {
    let subs = subgroups
        .iter()
        .map(|h| s.own_subgroup(h))
        .collect::<Result<Vec<_>>>()?;
    let doms = subs
        .iter()
        .map(|h| dominion_in_var(s, h, mode, caps).map(|r| r.dominion))
        .collect::<Result<Vec<_>>>()?;
    let mut report = ClosureReport {
        subgroups: subs.len(),
        extensive: true,
        idempotent: true,
        monotone: true,
        ..Default::default()
    };
    for (i, (h, d)) in subs.iter().zip(&doms).enumerate() {
        if !h.is_subset(d) {
            report.extensive = false;
            report.failures.push(format!(
                "subgroup #{i} (order {}) not contained in its dominion",
                h.order()
            ));
        }
        let dd = dominion_in_var(s, d, mode, caps)?.dominion;
        if dd != *d {
            report.idempotent = false;
            report
                .failures
                .push(format!("dominion of subgroup #{i} is not closed"));
        }
    }
    for i in 0..subs.len() {
        for j in 0..subs.len() {
            if i != j && subs[i].is_subset(&subs[j]) {
                report.nested_pairs += 1;
                if !doms[i].is_subset(&doms[j]) {
                    report.monotone = false;
                    report
                        .failures
                        .push(format!("monotonicity fails for #{i} <= #{j}"));
                }
            }
        }
    }
    Ok(report)
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
    fn example_a_both_paths() {
        let a5 = catalog::simple_group("A5", &caps()).unwrap();
        let h = catalog::point_stabilizer_in_alternating(a5.group(), 5).unwrap();
        for mode in [Mode::FastAmbient, Mode::FullEnumeration, Mode::Auto] {
            let r = dominion_in_var(&a5, &h, mode, &caps()).unwrap();
            assert!(r.is_epi);
            assert_eq!(r.dominion.order(), 60);
            assert_eq!(r.fixator_size, 1);
        }
        assert_eq!(
            dominion_in_var(&a5, &h, Mode::Auto, &caps()).unwrap().path,
            Path::FastAmbient
        );
    }

    #[test]
    fn trivial_and_full_subgroups() {
        let a5 = catalog::simple_group("A5", &caps()).unwrap();
        for mode in [Mode::FastAmbient, Mode::FullEnumeration] {
            let r = dominion_in_var(&a5, &Subgroup::trivial(a5.group()), mode, &caps()).unwrap();
            assert!(r.dominion.is_trivial());
            assert_eq!(r.fixator_size, 120);
            let r = dominion_in_var(&a5, &Subgroup::full(a5.group()), mode, &caps()).unwrap();
            assert!(r.dominion.is_full() && r.is_epi);
        }
    }

    #[test]
    fn three_cycle_is_self_dominated() {
        let a5 = catalog::simple_group("A5", &caps()).unwrap();
        let h =
            Subgroup::from_generators(a5.group(), &[parse_cycles("(1 2 3)", 5).unwrap()]).unwrap();
        for mode in [Mode::FastAmbient, Mode::FullEnumeration] {
            let r = dominion_in_var(&a5, &h, mode, &caps()).unwrap();
            assert_eq!(r.dominion, h);
            assert!(!r.is_epi);
            assert_eq!(r.fixator_size, 6);
            assert!(!is_epi_embedded(&a5, &h, mode, &caps()).unwrap());
        }
    }

    #[test]
    fn a6_rejects_fast_path() {
        let a6 = catalog::simple_group("A6", &caps()).unwrap();
        let h = catalog::point_stabilizer_in_alternating(a6.group(), 6).unwrap();
        assert!(matches!(
            dominion_in_var(&a6, &h, Mode::FastAmbient, &caps()),
            Err(Error::FastPathRejected(_))
        ));
        let r = dominion_in_var(&a6, &h, Mode::Auto, &caps()).unwrap();
        assert_eq!(r.path, Path::FullEnumeration);
        assert!(r.is_epi);
    }

    #[test]
    fn foreign_subgroup_is_rejected() {
        let a5 = catalog::simple_group("A5", &caps()).unwrap();
        let s5 = Arc::new(catalog::symmetric(5, &caps()).unwrap());
        let h = Subgroup::from_generators(&s5, &[parse_cycles("(1 2)", 5).unwrap()]).unwrap();
        assert!(matches!(
            dominion_in_var(&a5, &h, Mode::Auto, &caps()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn non_simple_groups_have_no_witness() {
        let s5 = Arc::new(catalog::symmetric(5, &caps()).unwrap());
        assert!(matches!(
            SimpleGroup::new("S5", s5, &caps()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn family_requires_reduction() {
        let a5 = Arc::new(catalog::simple_group("A5", &caps()).unwrap());
        let ctx = VarietyContext::new(vec![a5.clone()]).unwrap();
        let h = Subgroup::full(a5.group());
        assert_eq!(
            dominion_in_family_var(&ctx, 0, &h, Mode::Auto, &caps()).unwrap_err(),
            Error::UnreducedFamily
        );
        let ctx = catalog::reduce_family(std::slice::from_ref(&a5), &caps()).unwrap();
        let r = dominion_in_family_var(&ctx, 0, &h, Mode::Auto, &caps()).unwrap();
        assert!(r.is_epi);
        assert!(matches!(
            dominion_in_family_var(&ctx, 3, &h, Mode::Auto, &caps()),
            Err(Error::FamilyIndex { index: 3, len: 1 })
        ));
    }

    #[test]
    fn closure_laws_on_trivial_and_full() {
        let a5 = catalog::simple_group("A5", &caps()).unwrap();
        let subs = vec![Subgroup::trivial(a5.group()), Subgroup::full(a5.group())];
        let r = check_closure_properties(&a5, &subs, Mode::Auto, &caps()).unwrap();
        assert!(r.holds());
        assert_eq!(r.nested_pairs, 1);
    }
}
