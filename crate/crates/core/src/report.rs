//! JSON and text rendering shared by the CLI and the reproduction suite.

use serde::Serialize;
use serde_json::Value;

use crate::dominion::{DominionReport, Path};
use crate::group::Subgroup;
use crate::reproduce::ReproductionClaim;

pub const SCHEMA: &str = "dominion-report/1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Element listings longer than this are omitted unless verbose output is
/// requested.
pub const ELEMENT_LIST_CAP: usize = 50;

/// Top-level JSON document. Every field is always present.
#[derive(Debug, Clone, Serialize)]
pub struct Envelope {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub claims: Vec<ReproductionClaim>,
    pub seed: u64,
}

impl Envelope {
    pub fn new(command: impl Into<String>, inputs: Value, result: Value, seed: u64) -> Envelope {
        Envelope {
            schema: SCHEMA,
            tool_version: TOOL_VERSION,
            command: command.into(),
            inputs,
            result,
            claims: Vec::new(),
            seed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SubgroupSummary {
    pub order: usize,
    pub generators: Vec<String>,
    /// Members in canonical order; `None` when over the listing cap.
    pub elements: Option<Vec<String>>,
}

impl SubgroupSummary {
    pub fn new(sub: &Subgroup, verbose: bool) -> SubgroupSummary {
        let elements = (verbose || sub.order() <= ELEMENT_LIST_CAP)
            .then(|| sub.member_perms().iter().map(|p| p.to_string()).collect());
        SubgroupSummary {
            order: sub.order(),
            generators: sub
                .generator_perms()
                .iter()
                .map(|p| p.to_string())
                .collect(),
            elements,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DominionSummary {
    pub group: String,
    pub group_order: usize,
    pub subgroup: SubgroupSummary,
    pub dominion: SubgroupSummary,
    pub dominion_equals_subgroup: bool,
    pub fixator_size: usize,
    pub is_epi: bool,
    pub path: Path,
    pub variety_generators: Vec<String>,
}

impl DominionSummary {
    pub fn new(r: &DominionReport, verbose: bool) -> DominionSummary {
        DominionSummary {
            group: r.base_name.clone(),
            group_order: r.base.order(),
            subgroup: SubgroupSummary::new(&r.subgroup, verbose),
            dominion: SubgroupSummary::new(&r.dominion, verbose),
            dominion_equals_subgroup: r.dominion == r.subgroup,
            fixator_size: r.fixator_size,
            is_epi: r.is_epi,
            path: r.path,
            variety_generators: r.variety_generators.clone(),
        }
    }
}

fn listing(sub: &Subgroup) -> String {
    let perms = sub.member_perms();
    let shown: Vec<String> = perms
        .iter()
        .take(ELEMENT_LIST_CAP)
        .map(|p| p.to_string())
        .collect();
    let mut s = shown.join(", ");
    if perms.len() > ELEMENT_LIST_CAP {
        s.push_str(&format!(", ... ({} more)", perms.len() - ELEMENT_LIST_CAP));
    }
    s
}

/// Human-readable report; element lists are truncated at the listing cap.
pub fn render_text(r: &DominionReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "group:        {} (order {})\n",
        r.base_name,
        r.base.order()
    ));
    out.push_str(&format!(
        "variety:      Var({})\n",
        r.variety_generators.join(", ")
    ));
    out.push_str(&format!("subgroup:     order {}\n", r.subgroup.order()));
    out.push_str(&format!("dominion:     order {}\n", r.dominion.order()));
    out.push_str(&format!("fixator size: {}\n", r.fixator_size));
    out.push_str(&format!("path:         {}\n", r.path));
    out.push_str(&format!("epi:          {}\n", r.is_epi));
    if r.dominion.order() <= ELEMENT_LIST_CAP {
        out.push_str(&format!("elements:     {}\n", listing(&r.dominion)));
    }
    out
}
