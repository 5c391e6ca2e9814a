//! Command implementations behind the `goursat` binary.
//!
//! Every command returns its rendered output together with an [`Outcome`];
//! the binary maps outcomes and errors to exit codes.

pub mod expr;
pub mod report;

use std::sync::Arc;

use goursat_core::chain::{enumerate_subgroups_n, gamman, qn, GoursatChain};
use goursat_core::classify::{
    cyclic_criterion_pair, cyclic_criterion_triple, is_abelian_via_projections, is_cyclic_direct,
    is_product_of_projections, p_group_prime,
};
use goursat_core::lattice::HasseDiagram;
use goursat_core::oracle::all_subgroups_bruteforce;
use goursat_core::{FiniteGroup, GroupError, Limits, Subgroup};
use thiserror::Error;

use crate::expr::{parse_group_expr, parse_tuples, ParseError};
use crate::report::{
    ChainJson, ClassifyReport, DecomposeReport, EnumerateReport, LatticeReport, SubgroupEntry, SubgroupJson,
    VerifyReport,
};

#[derive(Error, Debug)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("malformed tuple at position {position}: {detail}")]
    Tuple { position: usize, detail: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("failed to serialize output: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 3 when an order cap was exceeded, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Group(GroupError::OrderCap { .. }) => 3,
            _ => 1,
        }
    }
}

/// Whether a command's own consistency checks passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Mismatch,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::Mismatch => 2,
        }
    }

    fn from_check(ok: bool) -> Self {
        if ok {
            Outcome::Ok
        } else {
            Outcome::Mismatch
        }
    }
}

pub type CommandResult = Result<(String, Outcome), CliError>;

fn build(expr: &str, limits: &Limits) -> Result<Arc<FiniteGroup>, CliError> {
    parse_group_expr(expr)?.build(limits)
}

fn subgroup_from_gens(group: &Arc<FiniteGroup>, gens: &str) -> Result<Subgroup, CliError> {
    let gens = parse_tuples(gens, group)?;
    Ok(Subgroup::generated(group, &gens)?)
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// `enumerate`: every subgroup with its chain, optionally checked against the
/// brute-force oracle.
pub fn cmd_enumerate(expr: &str, verify: bool, limits: &Limits) -> CommandResult {
    let group = build(expr, limits)?;
    let subgroups = enumerate_subgroups_n(&group, limits)?;
    let entries = subgroups
        .iter()
        .map(|g| {
            Ok(SubgroupEntry {
                order: g.order(),
                members: g.member_labels(),
                chain: ChainJson::from_chain(&qn(g)?),
                is_cyclic: is_cyclic_direct(g),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let verified = if verify {
        Some(all_subgroups_bruteforce(&group, limits)? == subgroups)
    } else {
        None
    };
    let report = EnumerateReport {
        group: group.label().to_string(),
        order: group.order(),
        subgroup_count: subgroups.len(),
        subgroups: entries,
        verified,
    };
    Ok((to_json(&report)?, Outcome::from_check(verified != Some(false))))
}

/// `decompose`: the chain of the subgroup generated by `gens`, and whether it
/// rebuilds that subgroup.
pub fn cmd_decompose(expr: &str, gens: &str, limits: &Limits) -> CommandResult {
    let group = build(expr, limits)?;
    let g = subgroup_from_gens(&group, gens)?;
    let chain: GoursatChain = qn(&g)?;
    let matches = gamman(&chain)? == g;
    let report = DecomposeReport {
        group: group.label().to_string(),
        subgroup: SubgroupJson::from(&g),
        chain: ChainJson::from_chain(&chain),
        reconstruction_matches: matches,
    };
    Ok((to_json(&report)?, Outcome::from_check(matches)))
}

/// `classify`: cyclicity via the Goursat criterion (two or three factors) and
/// via element orders, plus the projection predicates.
pub fn cmd_classify(expr: &str, gens: &str, limits: &Limits) -> CommandResult {
    let group = build(expr, limits)?;
    let g = subgroup_from_gens(&group, gens)?;
    let direct = is_cyclic_direct(&g);
    let (criterion, verdict) = match group.factor_count() {
        2 => ("pair", cyclic_criterion_pair(&g)?),
        3 => ("triple", cyclic_criterion_triple(&g)?),
        _ => (
            "direct",
            goursat_core::classify::CyclicVerdict {
                is_cyclic: direct,
                predicted_order: direct.then_some(g.order()),
            },
        ),
    };
    let consistent = verdict.is_cyclic == direct && verdict.predicted_order.is_none_or(|k| k == g.order());
    let report = ClassifyReport {
        group: group.label().to_string(),
        criterion: criterion.to_string(),
        cyclic: verdict.is_cyclic,
        predicted_order: verdict.predicted_order,
        direct_order: g.order(),
        direct_cyclic: direct,
        abelian: is_abelian_via_projections(&g),
        p_group_for: p_group_prime(&g),
        product_of_projections: is_product_of_projections(&g)?,
    };
    Ok((to_json(&report)?, Outcome::from_check(consistent)))
}

/// `lattice`: Hasse diagram of all subgroups, as JSON or DOT.
pub fn cmd_lattice(expr: &str, dot: bool, limits: &Limits) -> CommandResult {
    let group = build(expr, limits)?;
    let diagram = HasseDiagram::new(enumerate_subgroups_n(&group, limits)?);
    let out = if dot {
        diagram.to_dot()
    } else {
        to_json(&LatticeReport::new(group.label(), &diagram))?
    };
    Ok((out, Outcome::Ok))
}

/// `verify`: Goursat enumeration against the oracle, plus the chain
/// round trip on every subgroup.
pub fn cmd_verify(expr: &str, limits: &Limits) -> CommandResult {
    let group = build(expr, limits)?;
    let goursat = enumerate_subgroups_n(&group, limits)?;
    let oracle = all_subgroups_bruteforce(&group, limits)?;
    let mut roundtrip_ok = true;
    for g in &oracle {
        roundtrip_ok &= gamman(&qn(g)?)? == *g;
    }
    let sets_equal = goursat == oracle;
    let report = VerifyReport {
        group: group.label().to_string(),
        order: group.order(),
        goursat_count: goursat.len(),
        oracle_count: oracle.len(),
        sets_equal,
        roundtrip_ok,
        verified: sets_equal && roundtrip_ok,
    };
    Ok((to_json(&report)?, Outcome::from_check(report.verified)))
}
