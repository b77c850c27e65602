//! Acceptance gate: one line per criterion, non-zero exit if any fails.

use std::collections::BTreeSet;
use std::panic;
use std::sync::Arc;
use std::time::{Duration, Instant};

use isbell_core::autos;
use isbell_core::catalog;
use isbell_core::dominion::{self, Mode, Path, SimpleGroup};
use isbell_core::group::{self, Subgroup};
use isbell_core::oracle;
use isbell_core::{parse_cycles, Caps, Error, Result};

const SEED: u64 = 0;
const PATIENCE: usize = 300;

type Outcome = Result<(bool, String)>;
type Criterion = (&'static str, fn() -> Outcome);

fn caps() -> Caps {
    Caps::reproduction()
}

fn simple(name: &str) -> Arc<SimpleGroup> {
    Arc::new(catalog::simple_group(name, &caps()).expect(name))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn within(elapsed: Duration, limit_s: u64) -> (bool, String) {
    (
        elapsed < Duration::from_secs(limit_s),
        format!("{:.2}s (limit {limit_s}s)", elapsed.as_secs_f64()),
    )
}

fn example_a() -> Outcome {
    let start = Instant::now();
    let a5 = simple("A5");
    let h = catalog::point_stabilizer_in_alternating(a5.group(), 5)?;
    let r = dominion::dominion_in_var(&a5, &h, Mode::Auto, &caps())?;
    let (fast, t) = within(start.elapsed(), 1);
    let ok = h.order() == 12 && r.dominion.is_full() && r.dominion.order() == 60 && r.is_epi;
    Ok((
        ok && fast,
        format!(
            "|H|={} |D|={} epi={} {t}",
            h.order(),
            r.dominion.order(),
            r.is_epi
        ),
    ))
}

fn an_in_next() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 4..=7 {
        let s = simple(&format!("A{}", n + 1));
        let h = catalog::point_stabilizer_in_alternating(s.group(), n + 1)?;
        let mode = if n == 5 {
            Mode::FullEnumeration
        } else {
            Mode::Auto
        };
        let r = dominion::dominion_in_var(&s, &h, mode, &caps())?;
        ok &=
            r.is_epi && r.dominion.order() == factorial(n + 1) / 2 && h.order() == factorial(n) / 2;
        if n == 5 {
            ok &= r.path == Path::FullEnumeration && r.fixator_size == 1;
        }
        notes.push(format!("n={n}:{}", r.path));
    }
    let (fast, t) = within(start.elapsed(), 60);
    Ok((ok && fast, format!("{} {t}", notes.join(" "))))
}

fn intransitive() -> Outcome {
    let mut cases = 0;
    let mut ok = true;
    for n in 5..=8 {
        for m in (1..=n / 2).filter(|&m| m != n - m) {
            let s = simple(&format!("A{n}"));
            let h = catalog::intransitive_maximal(s.group(), m)?;
            let r = dominion::dominion_in_var(&s, &h, Mode::Auto, &caps())?;
            ok &= r.is_epi == (m != 2);
            if m == 2 {
                ok &= r.dominion == h && r.dominion.order() == factorial(n - 2);
            }
            cases += 1;
        }
    }
    Ok((ok && cases == 10, format!("{cases} (n,m) cases")))
}

fn block_product(n: usize) -> String {
    (0..n / 2)
        .map(|i| format!("({} {})", 2 * i + 1, 2 * i + 2))
        .collect()
}

fn imprimitive() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    for (n, m, k) in [(6, 2, 3), (6, 3, 2), (8, 2, 4), (8, 4, 2), (9, 3, 3)] {
        let s = simple(&format!("A{n}"));
        let h = catalog::imprimitive_maximal(s.group(), m, k)?;
        ok &= h.order() == factorial(m).pow(k as u32) * factorial(k) / 2;
        let r = dominion::dominion_in_var(&s, &h, Mode::Auto, &caps())?;
        ok &= r.is_epi == (m > 2);
        if m == 2 {
            let sn = Arc::new(catalog::symmetric(n, &caps())?);
            let c = group::centralizer_of(&sn, &h)?;
            ok &= c.contains_perm(&parse_cycles(&block_product(n), n)?);
        }
    }
    let (fast, t) = within(start.elapsed(), 120);
    Ok((ok && fast, t))
}

fn young() -> Outcome {
    let cases: [(usize, &[usize], bool); 5] = [
        (7, &[3, 4], true),
        (7, &[1, 3, 3], true),
        (8, &[3, 5], true),
        (9, &[3, 3, 3], true),
        (7, &[2, 5], false),
    ];
    let mut ok = true;
    for (n, parts, expected) in cases {
        let s = simple(&format!("A{n}"));
        let h = catalog::young_intersection(s.group(), parts)?;
        ok &= h.order() == parts.iter().map(|&p| factorial(p)).product::<usize>() / 2;
        ok &= dominion::is_epi_embedded(&s, &h, Mode::Auto, &caps())? == expected;
    }
    Ok((ok, "5 partitions".into()))
}

fn exceptional_a6() -> Outcome {
    let c = caps();
    let a6 = Arc::new(catalog::alternating(6, &c)?);
    let all = autos::enumerate_automorphisms(&a6, None, &c)?;
    let s6 = Arc::new(catalog::symmetric(6, &c)?);
    let via = autos::ambient_conjugation_autos(&a6, &s6, &c)?;
    let order3: Vec<u32> = (0..a6.order() as u32)
        .filter(|&x| a6.element_order(x) == 3)
        .collect();
    let others: Vec<_> = all
        .autos()
        .iter()
        .filter(|phi| !via.contains(phi))
        .collect();
    let clean = others
        .iter()
        .all(|phi| order3.iter().all(|&x| !phi.fixes(x)));
    let ok =
        all.len() == 1440 && via.len() == 720 && others.len() == 720 && clean && all.is_closed();
    Ok((
        ok,
        format!(
            "|Aut|={} via S6={} others={}",
            all.len(),
            via.len(),
            others.len()
        ),
    ))
}

fn mathieu() -> Outcome {
    let start = Instant::now();
    let m11 = simple("M11");
    let m10 = catalog::mathieu10(m11.group())?;
    let c = group::centralizer_of(m11.group(), &m10)?;
    let r = dominion::dominion_in_var(&m11, &m10, Mode::Auto, &caps())?;
    let (fast, t) = within(start.elapsed(), 10);
    let ok = m11.group().order() == 7920
        && m10.order() == 720
        && c.is_trivial()
        && r.dominion.is_full()
        && r.is_epi;
    Ok((
        ok && fast,
        format!("|C(M10)|={} |D|={} {t}", c.order(), r.dominion.order()),
    ))
}

fn oracle_equivalence() -> Outcome {
    let c = caps();
    let a5 = simple("A5");
    let g = a5.group();
    let homs = oracle::enumerate_homs(g, g, &c)?.len();
    let reps = group::sample_subgroup_classes(g, SEED, PATIENCE);
    let orders: BTreeSet<usize> = reps.iter().map(Subgroup::order).collect();
    let square = Arc::new(group::direct_product(g, g, &c)?);
    let mut ok = homs == 121 && reps.len() == 9 && orders.len() == 9;
    for h in &reps {
        let fast = dominion::dominion_in_var(&a5, h, Mode::Auto, &c)?.dominion;
        ok &= oracle::dominion_by_definition(g, h, std::slice::from_ref(g), &c)? == fast;
        ok &= oracle::dominion_by_definition(g, h, &[g.clone(), square.clone()], &c)? == fast;
    }
    Ok((
        ok,
        format!(
            "{} classes, {homs} homs, targets {{S}} and {{S, SxS}}",
            reps.len()
        ),
    ))
}

fn structure() -> Outcome {
    let c = caps();
    let a5 = simple("A5");
    let remak = oracle::remak_check(a5.group(), 2, 0, SEED, &c)?;
    let mut orders = remak.orders.clone();
    orders.sort();
    let goursat = oracle::goursat_dichotomy_check(&a5, 100, SEED, &c)?;
    let ok = remak.all_subproducts
        && orders == [1, 60, 60, 3600]
        && goursat.passed()
        && goursat.trials == 100;
    Ok((
        ok,
        format!(
            "normal orders {orders:?}; goursat {}/{} ({} full, {} graphs)",
            goursat.trials - goursat.violations,
            goursat.trials,
            goursat.full,
            goursat.graphs
        ),
    ))
}

fn closure_laws() -> Outcome {
    let c = caps();
    let mut ok = true;
    let mut notes = Vec::new();
    for name in ["A5", "A6"] {
        let s = simple(name);
        let reps = group::sample_subgroup_classes(s.group(), SEED, PATIENCE);
        let r = dominion::check_closure_properties(&s, &reps, Mode::Auto, &c)?;
        ok &= r.holds() && r.subgroups == reps.len();
        notes.push(format!(
            "{name}: {} subgroups, {} nested pairs",
            r.subgroups, r.nested_pairs
        ));
    }
    Ok((ok, notes.join("; ")))
}

fn family() -> Outcome {
    let c = caps();
    let (a5, a6, m11) = (simple("A5"), simple("A6"), simple("M11"));
    let r1 = catalog::reduce_family(&[a5.clone(), a6.clone()], &c)?;
    let r2 = catalog::reduce_family(&[a5.clone(), m11.clone()], &c)?;
    let mut ok = r1.names() == ["A6"] && r2.names() == ["M11"];
    for ctx in [&r1, &r2] {
        ok &= catalog::reduce_family(ctx.generators(), &c)?.names() == ctx.names();
    }
    for ctx in [&r1, &r2] {
        let s = &ctx.generators()[0];
        for h in group::sample_subgroup_classes(s.group(), SEED, 60) {
            let fam = dominion::dominion_in_family_var(ctx, 0, &h, Mode::Auto, &c)?;
            let single = dominion::dominion_in_var(s, &h, Mode::Auto, &c)?;
            ok &= fam.dominion == single.dominion && fam.is_epi == single.is_epi;
        }
    }
    Ok((ok, format!("{:?} {:?}", r1.names(), r2.names())))
}

fn path_agreement() -> Outcome {
    let c = caps();
    let a5 = simple("A5");
    let reps = group::sample_subgroup_classes(a5.group(), SEED, PATIENCE);
    let mut ok = true;
    for h in &reps {
        let fast = dominion::dominion_in_var(&a5, h, Mode::FastAmbient, &c)?;
        let full = dominion::dominion_in_var(&a5, h, Mode::FullEnumeration, &c)?;
        ok &= fast.dominion == full.dominion && fast.fixator_size == full.fixator_size;
    }
    let a6 = simple("A6");
    let h = catalog::point_stabilizer_in_alternating(a6.group(), 6)?;
    let rejected = matches!(
        dominion::dominion_in_var(&a6, &h, Mode::FastAmbient, &c),
        Err(Error::FastPathRejected(_))
    );
    Ok((
        ok && rejected,
        format!(
            "{} subgroups agree, A6 fast path rejected={rejected}",
            reps.len()
        ),
    ))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("example A", example_a),
        ("A_n in A_(n+1)", an_in_next),
        ("intransitive criterion", intransitive),
        ("imprimitive criterion", imprimitive),
        ("Young-type subgroups", young),
        ("exceptional A6", exceptional_a6),
        ("Mathieu M11", mathieu),
        ("oracle equivalence", oracle_equivalence),
        ("Remak and Goursat", structure),
        ("closure-operator laws", closure_laws),
        ("family reduction", family),
        ("path agreement", path_agreement),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(check);
        let (pass, detail) = match outcome {
            Ok(Ok(r)) => r,
            Ok(Err(e)) => (false, format!("error: {e}")),
            Err(_) => (false, "panicked".into()),
        };
        failures += usize::from(!pass);
        println!(
            "criterion {:>2} {:<24} {}  {detail}",
            i + 1,
            name,
            if pass { "PASS" } else { "FAIL" }
        );
    }
    println!(
        "acceptance: {}/{} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
