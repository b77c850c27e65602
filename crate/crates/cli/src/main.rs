//! `isbell`: dominions and epimorphic embeddings in varieties generated by
//! finite nonabelian simple permutation groups.

use std::path::Path as FsPath;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use isbell_core::autos;
use isbell_core::catalog::{self, PartitionSpec};
use isbell_core::dominion::{self, Mode, SimpleGroup};
use isbell_core::group::{self, parse_group_spec, Subgroup};
use isbell_core::oracle;
use isbell_core::report::{DominionSummary, Envelope};
use isbell_core::reproduce::{self, ReproduceOptions};
use isbell_core::{Caps, Error, PermGroup};

const CLASS_PATIENCE: usize = 300;

#[derive(Parser)]
#[command(
    name = "isbell",
    version,
    about = "Isbell dominions in varieties of finite simple groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Emit the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Include element lists above the listing cap.
    #[arg(long)]
    verbose: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cap on normal-subgroup search when checking simplicity.
    #[arg(long)]
    normal_cap: Option<usize>,
    /// Cap on enumerated automorphisms.
    #[arg(long)]
    aut_cap: Option<usize>,
}

impl Common {
    fn caps(&self, base: Caps) -> Caps {
        let mut caps = base;
        if let Some(n) = self.normal_cap {
            caps = caps.with_normal(n);
        }
        if let Some(n) = self.aut_cap {
            caps = caps.with_automorphisms(n);
        }
        caps
    }
}

#[derive(Args)]
struct Target {
    /// Catalog name (A5, M11, ...) or path to a group-spec file.
    #[arg(long)]
    group: String,
    /// stab:P, intransitive:m=M, imprimitive:m=M,k=K, young:parts=A+B,
    /// partition:1,2|3,4, trivial, full, M10, or a group-spec file.
    #[arg(long)]
    subgroup: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Fast,
    Full,
    Auto,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Fast => Mode::FastAmbient,
            ModeArg::Full => Mode::FullEnumeration,
            ModeArg::Auto => Mode::Auto,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Oracle,
    Goursat,
    Remak,
    Closure,
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the dominion of a subgroup.
    Dominion {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        common: Common,
    },
    /// Exit 0 and print "epi" when the subgroup is epimorphically embedded,
    /// exit 1 and print "not-epi" otherwise.
    Epi {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        common: Common,
    },
    /// Run the reproduction claims.
    Reproduce {
        /// Only run claims whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        /// Record per-claim runtimes in the JSON report.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Count automorphisms.
    Aut {
        #[arg(long)]
        group: String,
        /// Enumerate Aut(S) even when a certificate is available.
        #[arg(long)]
        full: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run a structural or oracle cross-check.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Oracle only: also use S x S as a target.
        #[arg(long)]
        square: bool,
        #[command(flatten)]
        common: Common,
    },
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
        #[command(flatten)]
        common: Common,
    },
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            Error::PointOutOfRange { .. }
            | Error::RepeatedPoint(_)
            | Error::Malformed(_)
            | Error::DegreeMismatch(..)
            | Error::UnsupportedDegree(_)
            | Error::InvalidParameters(_)
            | Error::UnknownGroup(_)
            | Error::Spec(_)
            | Error::NoGenerators
            | Error::FamilyIndex { .. } => 2,
            _ => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn bad_args(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> CliResult<u8> {
    match cmd {
        Command::Dominion { target, common } => cmd_dominion(&target, &common),
        Command::Epi { target, common } => cmd_epi(&target, &common),
        Command::Reproduce {
            filter,
            timings,
            common,
        } => cmd_reproduce(filter, timings, &common),
        Command::Aut {
            group,
            full,
            common,
        } => cmd_aut(&group, full, &common),
        Command::Verify {
            check,
            group,
            trials,
            square,
            common,
        } => cmd_verify(check, &group, trials, square, &common),
        Command::Catalog {
            cmd: CatalogCmd::List,
            common,
        } => cmd_catalog(&common),
    }
}

fn load_group(name: &str, caps: &Caps) -> CliResult<SimpleGroup> {
    if catalog::entry(name).is_ok() {
        return Ok(catalog::simple_group(name, caps)?);
    }
    let path = FsPath::new(name);
    if !path.exists() {
        return Err(bad_args(format!(
            "unknown group {name:?}: not a catalog name or a file"
        )));
    }
    let text = std::fs::read_to_string(path).map_err(|e| bad_args(format!("{name}: {e}")))?;
    let (_, gens) = parse_group_spec(&text)?;
    let g = Arc::new(PermGroup::generate(&gens, caps)?);
    let label = path
        .file_stem()
        .map_or(name.to_string(), |s| s.to_string_lossy().into_owned());
    Ok(SimpleGroup::new(label, g, caps)?)
}

fn param<'a>(body: &'a str, key: &str) -> CliResult<&'a str> {
    body.split(',')
        .find_map(|kv| kv.strip_prefix(key).and_then(|rest| rest.strip_prefix('=')))
        .ok_or_else(|| bad_args(format!("missing {key}= in {body:?}")))
}

fn number(text: &str) -> CliResult<usize> {
    text.trim()
        .parse()
        .map_err(|_| bad_args(format!("not a number: {text:?}")))
}

fn parse_subgroup(s: &SimpleGroup, expr: &str) -> CliResult<Subgroup> {
    let g = s.group();
    let sub = match expr.split_once(':') {
        Some(("stab", p)) => catalog::point_stabilizer(g, number(p)?)?,
        Some(("intransitive", body)) => {
            catalog::intransitive_maximal(g, number(param(body, "m")?)?)?
        }
        Some(("imprimitive", body)) => {
            catalog::imprimitive_maximal(g, number(param(body, "m")?)?, number(param(body, "k")?)?)?
        }
        Some(("young", body)) => {
            let parts = body
                .strip_prefix("parts=")
                .ok_or_else(|| bad_args(format!("expected parts= in {body:?}")))?
                .split('+')
                .map(number)
                .collect::<CliResult<Vec<_>>>()?;
            catalog::young_intersection(g, &parts)?
        }
        Some(("partition", body)) => {
            let spec = PartitionSpec::parse(g.degree(), body)?;
            catalog::partition_stabilizer_even(g, &spec)?
        }
        _ => match expr {
            "trivial" => Subgroup::trivial(g),
            "full" => Subgroup::full(g),
            "M10" => {
                if s.name() != "M11" {
                    return Err(bad_args("M10 is only addressable inside M11"));
                }
                catalog::mathieu10(g)?
            }
            _ => {
                let path = FsPath::new(expr);
                if !path.exists() {
                    return Err(bad_args(format!(
                        "unrecognized subgroup expression {expr:?}"
                    )));
                }
                let text =
                    std::fs::read_to_string(path).map_err(|e| bad_args(format!("{expr}: {e}")))?;
                let (degree, gens) = parse_group_spec(&text)?;
                if degree != g.degree() {
                    return Err(Error::DegreeMismatch(degree, g.degree()).into());
                }
                Subgroup::from_generators(g, &gens)?
            }
        },
    };
    Ok(sub)
}

fn print_envelope(env: &Envelope) {
    println!("{}", env.to_json());
}

fn compute_dominion(
    target: &Target,
    common: &Common,
) -> CliResult<(dominion::DominionReport, Value)> {
    let caps = common.caps(Caps::default());
    let s = load_group(&target.group, &caps)?;
    let h = parse_subgroup(&s, &target.subgroup)?;
    let report = dominion::dominion_in_var(&s, &h, target.mode.into(), &caps)?;
    let inputs = json!({
        "group": target.group,
        "subgroup": target.subgroup,
        "mode": Mode::from(target.mode).to_string(),
    });
    Ok((report, inputs))
}

fn cmd_dominion(target: &Target, common: &Common) -> CliResult<u8> {
    let (report, inputs) = compute_dominion(target, common)?;
    if common.json {
        let result = serde_json::to_value(DominionSummary::new(&report, common.verbose))
            .expect("serializes");
        print_envelope(&Envelope::new("dominion", inputs, result, common.seed));
    } else {
        print!("{}", isbell_core::report::render_text(&report));
    }
    Ok(0)
}

fn cmd_epi(target: &Target, common: &Common) -> CliResult<u8> {
    let (report, inputs) = compute_dominion(target, common)?;
    let verdict = if report.is_epi { "epi" } else { "not-epi" };
    if common.json {
        let result = json!({ "verdict": verdict, "dominion_order": report.dominion.order() });
        print_envelope(&Envelope::new("epi", inputs, result, common.seed));
    } else {
        println!("{verdict}");
    }
    Ok(if report.is_epi { 0 } else { 1 })
}

fn cmd_reproduce(filter: Option<String>, timings: bool, common: &Common) -> CliResult<u8> {
    let opts = ReproduceOptions {
        filter: filter.clone(),
        seed: common.seed,
        caps: common.caps(Caps::reproduction()),
        // text tables always show runtimes; JSON only on request
        timings: timings || !common.json,
    };
    let claims = reproduce::run(&opts);
    if claims.is_empty() {
        return Err(bad_args(format!(
            "no claim id starts with {:?}",
            filter.unwrap_or_default()
        )));
    }
    let passed = claims.iter().filter(|c| c.pass).count();
    let all = passed == claims.len();
    if common.json {
        let inputs = json!({ "filter": filter });
        let result = json!({ "total": claims.len(), "passed": passed, "all_pass": all });
        let mut env = Envelope::new("reproduce", inputs, result, common.seed);
        env.claims = claims;
        print_envelope(&env);
    } else {
        let w = claims
            .iter()
            .map(|c| c.claim_id.len())
            .max()
            .unwrap_or(5)
            .max(5);
        println!(
            "{:<w$}  {:<4}  {:>8}  expected | computed",
            "claim", "ok", "ms"
        );
        for c in &claims {
            println!(
                "{:<w$}  {:<4}  {:>8}  {} | {}",
                c.claim_id,
                if c.pass { "pass" } else { "FAIL" },
                c.runtime_ms.unwrap_or(0),
                c.expected,
                c.computed
            );
        }
        println!("{passed}/{} claims pass", claims.len());
    }
    Ok(if all { 0 } else { 1 })
}

fn symmetric_ambient(name: &str) -> Option<usize> {
    name.strip_prefix('A').and_then(|n| n.parse().ok())
}

fn cmd_aut(name: &str, full: bool, common: &Common) -> CliResult<u8> {
    let caps = common.caps(Caps::default());
    let s = load_group(name, &caps)?;
    let inner = autos::inner_automorphisms(s.group(), &caps)?.len();
    let via_ambient = match symmetric_ambient(s.name()) {
        Some(n) if catalog::entry(s.name()).is_ok() => {
            let sn = Arc::new(catalog::symmetric(n, &caps)?);
            Some((
                format!("S{n}"),
                autos::ambient_conjugation_autos(s.group(), &sn, &caps)?.len(),
            ))
        }
        _ => None,
    };
    let (total, source) = if full || s.certificate().is_none() {
        (s.automorphisms(&caps)?.len(), "enumeration")
    } else {
        let total = match s.certificate() {
            Some(dominion::AutCertificate::AllInner) => inner,
            _ => via_ambient.as_ref().map_or(inner, |(_, n)| *n),
        };
        (total, "certificate")
    };
    if common.json {
        let result = json!({
            "total": total,
            "inner": inner,
            "outer_classes": total / inner,
            "via_ambient": via_ambient.as_ref().map(|(a, n)| json!({ "ambient": a, "count": n })),
            "source": source,
        });
        print_envelope(&Envelope::new(
            "aut",
            json!({ "group": name, "full": full }),
            result,
            common.seed,
        ));
    } else {
        println!("group:  {} (order {})", s.name(), s.group().order());
        println!("total:  {total} ({source})");
        println!("inner:  {inner}");
        if let Some((a, n)) = via_ambient {
            println!("via {a}: {n}");
        }
    }
    Ok(0)
}

fn cmd_verify(
    check: Check,
    name: &str,
    trials: usize,
    square: bool,
    common: &Common,
) -> CliResult<u8> {
    let caps = common.caps(Caps::default());
    let s = load_group(name, &caps)?;
    let seed = common.seed;
    let (command, result, ok, text) = match check {
        Check::Oracle => {
            let reps = group::sample_subgroup_classes(s.group(), seed, CLASS_PATIENCE);
            let mut targets = vec![s.group().clone()];
            if square {
                targets.push(Arc::new(group::direct_product(
                    s.group(),
                    s.group(),
                    &caps,
                )?));
            }
            let mut rows = Vec::new();
            for h in &reps {
                let by_def = oracle::dominion_by_definition(s.group(), h, &targets, &caps)?;
                let fast = dominion::dominion_in_var(&s, h, Mode::Auto, &caps)?;
                rows.push(json!({
                    "subgroup_order": h.order(),
                    "oracle_order": by_def.order(),
                    "dominion_order": fast.dominion.order(),
                    "agree": by_def == fast.dominion,
                }));
            }
            let agree = rows.iter().filter(|r| r["agree"] == true).count();
            let text = format!(
                "{agree}/{} subgroup classes agree with the oracle",
                rows.len()
            );
            (
                "verify oracle",
                json!({ "classes": rows, "agree": agree }),
                agree == reps.len(),
                text,
            )
        }
        Check::Goursat => {
            let r = oracle::goursat_dichotomy_check(&s, trials, seed, &caps)?;
            let text = format!(
                "{} trials: {} subdirect ({} full, {} graphs), {} not subdirect, {} violations",
                r.trials, r.subdirect, r.full, r.graphs, r.not_subdirect, r.violations
            );
            let ok = r.passed();
            (
                "verify goursat",
                serde_json::to_value(r).expect("serializes"),
                ok,
                text,
            )
        }
        Check::Remak => {
            let r = oracle::remak_check(s.group(), 2, 0, seed, &caps)?;
            let text = format!(
                "{} normal subgroups, {}",
                r.normal_subgroups_checked,
                if r.all_subproducts {
                    "all subproducts"
                } else {
                    "not all subproducts"
                }
            );
            let ok = r.all_subproducts;
            (
                "verify remak",
                serde_json::to_value(r).expect("serializes"),
                ok,
                text,
            )
        }
        Check::Closure => {
            let reps = group::sample_subgroup_classes(s.group(), seed, CLASS_PATIENCE);
            let r = dominion::check_closure_properties(&s, &reps, Mode::Auto, &caps)?;
            let text = format!(
                "{} subgroups, {} nested pairs: extensive={} idempotent={} monotone={}",
                r.subgroups, r.nested_pairs, r.extensive, r.idempotent, r.monotone
            );
            let ok = r.holds();
            (
                "verify closure",
                serde_json::to_value(r).expect("serializes"),
                ok,
                text,
            )
        }
    };
    if common.json {
        let inputs = json!({ "group": name, "trials": trials, "square": square });
        print_envelope(&Envelope::new(command, inputs, result, seed));
    } else {
        println!("{text}");
    }
    Ok(if ok { 0 } else { 1 })
}

fn cmd_catalog(common: &Common) -> CliResult<u8> {
    let entries = catalog::list();
    if common.json {
        let result = serde_json::to_value(&entries).expect("serializes");
        print_envelope(&Envelope::new(
            "catalog list",
            json!({}),
            result,
            common.seed,
        ));
    } else {
        for e in &entries {
            let aut = serde_json::to_value(e.aut_metadata).expect("serializes");
            println!(
                "{:<4} degree {:>2}  order {:>10}  aut {}",
                e.name,
                e.degree,
                e.certified_order,
                aut.as_str().unwrap_or("none")
            );
        }
    }
    Ok(0)
}
