//! Serialization of spaces, groups and reports to stable JSON.
//!
//! Key order follows struct order and never depends on hash iteration, so a
//! report is byte-identical across runs. The `opens` field of a group report
//! lists the minimal-open basis (the smallest open set at each word, in
//! carrier order); the basis determines the whole open family, which is
//! exponentially large on discrete levels and is never materialized.

use crate::error::{Error, Result};
use crate::finspace::{FinMap, FinSpace};
use crate::freetop::{closure_of, non_t1_witness, t1_at_level, Provenance, TruncatedGroup};
use crate::suspension::SuspensionReport;
use crate::words::Word;
use serde::{Deserialize, Serialize};

/// Space interchange format: exactly one of `opens` / `upset` is present.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpaceJson {
    pub labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upset: Option<Vec<Vec<bool>>>,
}

/// Canonical output form: labels plus the upset matrix.
pub fn space_to_json(s: &FinSpace) -> SpaceJson {
    let n = s.point_count();
    let upset = (0..n)
        .map(|x| (0..n).map(|y| s.min_open(x).contains(y)).collect())
        .collect();
    SpaceJson {
        labels: s.labels().to_vec(),
        opens: None,
        upset: Some(upset),
    }
}

pub fn space_from_json(j: &SpaceJson) -> Result<FinSpace> {
    match (&j.opens, &j.upset) {
        (Some(opens), None) => FinSpace::from_opens(j.labels.clone(), opens),
        (None, Some(rows)) => FinSpace::from_upset_rows(j.labels.clone(), rows),
        _ => Err(Error::InvalidInput(
            "exactly one of \"opens\" and \"upset\" must be present".into(),
        )),
    }
}

pub fn parse_space(text: &str) -> Result<FinSpace> {
    let j: SpaceJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("space JSON: {e}")))?;
    space_from_json(&j)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProvenanceJson {
    ReductionQuotient,
    RefinedQuotient {
        domain: SpaceJson,
        table: Vec<usize>,
    },
    SubspaceOf(usize),
}

fn provenance_to_json(p: &Provenance) -> ProvenanceJson {
    match p {
        Provenance::ReductionQuotient => ProvenanceJson::ReductionQuotient,
        Provenance::RefinedQuotient(q) => ProvenanceJson::RefinedQuotient {
            domain: space_to_json(q.domain()),
            table: q.table().to_vec(),
        },
        Provenance::SubspaceOf(n) => ProvenanceJson::SubspaceOf(*n),
    }
}

/// A truncated group: alphabet, carrier words, minimal-open basis,
/// provenance, and separation verdicts with explicit witnesses.
#[derive(Clone, Debug, Serialize)]
pub struct GroupJson {
    pub alphabet: Vec<String>,
    pub level: usize,
    pub words: Vec<String>,
    pub opens: Vec<Vec<usize>>,
    pub provenance: ProvenanceJson,
    pub t1: bool,
    pub discrete: bool,
    /// Words in the closure of the identity; `["1"]` exactly when points are
    /// separated from e.
    pub identity_closure: Vec<String>,
    /// When not T1: a pair `(v, w)` such that every open set containing `w`
    /// contains `v`.
    pub t1_witness: Option<(String, String)>,
}

pub fn group_to_json(g: &TruncatedGroup) -> GroupJson {
    let labels = g.alphabet_space().labels();
    let words: Vec<String> = g.carrier().iter().map(|w| w.display(labels)).collect();
    let opens = (0..g.carrier().len())
        .map(|i| g.topology().min_open(i).to_indices())
        .collect();
    let identity_closure = closure_of(g, &[Word::empty(labels.len())])
        .expect("identity is in every carrier")
        .iter()
        .map(|w| w.display(labels))
        .collect();
    GroupJson {
        alphabet: labels.to_vec(),
        level: g.level(),
        words,
        opens,
        provenance: provenance_to_json(g.provenance()),
        t1: t1_at_level(g),
        discrete: g.topology().separation().discrete,
        identity_closure,
        t1_witness: non_t1_witness(g).map(|(v, w)| (v.display(labels), w.display(labels))),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelJson {
    pub level: usize,
    pub t1: bool,
    pub discrete: bool,
    pub closed_in_top: bool,
    pub subspace_equal: bool,
    pub multiplication_continuous: bool,
    pub group: GroupJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuspensionJson {
    pub tool: String,
    pub version: String,
    pub route: String,
    pub input: SpaceJson,
    pub pi0: SpaceJson,
    pub projection: Option<Vec<usize>>,
    pub components: usize,
    pub rank: usize,
    pub discrete: bool,
    pub max_level: usize,
    pub condition1_powers_quotient: Option<bool>,
    pub condition2_3_status: String,
    pub note: String,
    pub levels: Vec<LevelJson>,
}

pub fn suspension_to_json(r: &SuspensionReport) -> SuspensionJson {
    SuspensionJson {
        tool: "qtop".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        route: r.route.as_str().to_string(),
        input: space_to_json(&r.input_space),
        pi0: space_to_json(&r.pi0),
        projection: r.projection.as_ref().map(|p| p.table().to_vec()),
        components: r.components,
        rank: r.rank,
        discrete: r.discrete,
        max_level: r.max_level,
        condition1_powers_quotient: r.condition1_powers_quotient,
        condition2_3_status: r.condition2_3_status.clone(),
        note: r.note.clone(),
        levels: r
            .levels
            .iter()
            .map(|l| LevelJson {
                level: l.level,
                t1: l.t1,
                discrete: l.discrete,
                closed_in_top: l.closed_in_top,
                subspace_equal: l.subspace_equal,
                multiplication_continuous: l.multiplication_continuous,
                group: group_to_json(&l.group),
            })
            .collect(),
    }
}

/// Wrapper for a standalone group report with the tool header.
#[derive(Clone, Debug, Serialize)]
pub struct GroupReportJson {
    pub tool: String,
    pub version: String,
    pub level: usize,
    pub group: GroupJson,
}

pub fn group_report(g: &TruncatedGroup) -> GroupReportJson {
    GroupReportJson {
        tool: "qtop".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        level: g.level(),
        group: group_to_json(g),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerRowJson {
    pub n: usize,
    pub power_quotient: bool,
}

/// Power-quotient report for the component projection of a space.
#[derive(Clone, Debug, Serialize)]
pub struct PowersJson {
    pub tool: String,
    pub version: String,
    pub level: usize,
    pub input: SpaceJson,
    pub pi0: SpaceJson,
    pub projection: Vec<usize>,
    pub powers: Vec<PowerRowJson>,
    pub powers_quotient: bool,
    pub doubled_powers_quotient: bool,
    pub psi_iso: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NeighborhoodJson {
    pub point: String,
    pub members: Vec<String>,
    pub iterations: usize,
}

/// Generated-neighborhood report for a quotient map under the minimal cover.
#[derive(Clone, Debug, Serialize)]
pub struct CoverBasisJson {
    pub tool: String,
    pub version: String,
    pub input: SpaceJson,
    pub blocks: Vec<Vec<usize>>,
    pub codomain: SpaceJson,
    pub cover: String,
    pub neighborhoods: Vec<NeighborhoodJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerateRowJson {
    pub id: usize,
    pub points: usize,
    pub opens: usize,
    pub components: usize,
    pub t0: bool,
    pub t1: bool,
    pub discrete: bool,
    pub h_prime: bool,
    pub upset: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerateJson {
    pub tool: String,
    pub version: String,
    pub points: usize,
    pub up_to_homeo: bool,
    pub count: usize,
    pub rows: Vec<EnumerateRowJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyRowJson {
    pub name: String,
    pub points: usize,
    pub opens: usize,
    pub t0: bool,
    pub t1: bool,
    pub discrete: bool,
    pub h_prime: bool,
    pub f_t1: bool,
    pub f_pairs_separable: bool,
    pub mult_1_1: bool,
    pub coherence_1_2_closed: bool,
    pub coherence_1_2_subspace: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyJson {
    pub tool: String,
    pub version: String,
    pub level: usize,
    pub rows: Vec<ClassifyRowJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogRowJson {
    pub name: String,
    pub points: usize,
    pub opens: usize,
    pub notes: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogJson {
    pub tool: String,
    pub version: String,
    pub rows: Vec<CatalogRowJson>,
}

/// Builds the power-quotient report for the component projection of `x`.
pub fn powers_report(x: &FinSpace, level: usize, limit: usize) -> Result<PowersJson> {
    let (pi0, projection) = x.pi0();
    let quotients = crate::suspension::projection_power_quotients(&projection, level, limit)?;
    let powers: Vec<PowerRowJson> = quotients
        .iter()
        .enumerate()
        .map(|(i, &q)| PowerRowJson {
            n: i + 1,
            power_quotient: q,
        })
        .collect();
    let psi = crate::freetop::psi_level_check(&projection, level, limit)?;
    Ok(PowersJson {
        tool: "qtop".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        level,
        input: space_to_json(x),
        pi0: space_to_json(&pi0),
        projection: projection.table().to_vec(),
        powers_quotient: powers.iter().all(|r| r.power_quotient),
        powers,
        doubled_powers_quotient: psi.powers_quotient,
        psi_iso: psi.psi_iso,
    })
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// JSON text helpers for embedders that do not want to touch serde types.
pub fn space_json_string(s: &FinSpace) -> String {
    pretty(&space_to_json(s))
}

pub fn suspension_json_string(r: &SuspensionReport) -> String {
    pretty(&suspension_to_json(r))
}

pub fn group_json_string(g: &TruncatedGroup) -> String {
    pretty(&group_report(g))
}

pub fn powers_json_string(x: &FinSpace, level: usize, limit: usize) -> Result<String> {
    Ok(pretty(&powers_report(x, level, limit)?))
}

/// Error object printed as one line on standard error.
#[derive(Clone, Debug, Serialize)]
pub struct ErrorJson {
    pub error: String,
    pub detail: String,
}

pub fn error_json(code: &str, detail: &str) -> String {
    serde_json::to_string(&ErrorJson {
        error: code.to_string(),
        detail: detail.to_string(),
    })
    .expect("error objects serialize")
}

pub fn projection_table(p: &FinMap) -> Vec<usize> {
    p.table().to_vec()
}
