//! Grid-wide identity verification.
//!
//! The grid is split into units (one per `(p, q)` for seed-free identities, one
//! per `(p, q, a, b)` otherwise). Units run on a worker pool and their outcomes
//! are folded in grid order, so output never depends on scheduling.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::horadam_quat::HoradamQuatContext;
use crate::identities::{
    cassini_check, catalan_check, commutator_adjacent_check, docagne_check, run_identity,
    IdentityId, IdentityReport, ReflectionAudit,
};
use crate::rational::Rational;
use crate::sequence::HoradamParams;

/// Inclusive integer interval `lo..=hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        IntRange { lo, hi }
    }

    pub fn single(v: i64) -> Self {
        IntRange { lo: v, hi: v }
    }

    pub fn iter(self) -> impl Iterator<Item = i64> + Clone {
        self.lo..=self.hi
    }

    pub fn len(self) -> usize {
        if self.hi < self.lo {
            0
        } else {
            (self.hi - self.lo + 1) as usize
        }
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl std::str::FromStr for IntRange {
    type Err = String;

    /// `"lo..hi"` or a single integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad integer {t:?} in range {s:?}: {e}"))
        };
        match s.split_once("..") {
            Some((lo, hi)) => Ok(IntRange::new(parse(lo)?, parse(hi)?)),
            None => Ok(IntRange::single(parse(s)?)),
        }
    }
}

/// Which individual reports a campaign keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ShowPolicy {
    All,
    Failed,
    None,
    /// `All` when the campaign has at most [`AUTO_SHOW_LIMIT`] checks, else `Failed`.
    #[default]
    Auto,
}

pub const AUTO_SHOW_LIMIT: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub identities: Vec<IdentityId>,
    pub p: IntRange,
    pub q: IntRange,
    pub a: IntRange,
    pub b: IntRange,
    pub idx: IntRange,
    pub jobs: Option<usize>,
    pub show: ShowPolicy,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            identities: IdentityId::ALL.to_vec(),
            p: IntRange::new(-3, 3),
            q: IntRange::new(-3, 3),
            a: IntRange::new(-2, 2),
            b: IntRange::new(-2, 2),
            idx: IntRange::new(-6, 12),
            jobs: None,
            show: ShowPolicy::Auto,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("empty range for {0}")]
    EmptyRange(&'static str),
    #[error("q range {0} contains no nonzero value")]
    NoNonzeroQ(IntRange),
    #[error("no identities selected")]
    NoIdentities,
    #[error("worker count must be positive")]
    ZeroJobs,
    #[error("cannot build worker pool: {0}")]
    Pool(String),
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, r) in [
            ("p", self.p),
            ("q", self.q),
            ("a", self.a),
            ("b", self.b),
            ("idx", self.idx),
        ] {
            if r.is_empty() {
                return Err(ConfigError::EmptyRange(name));
            }
        }
        if self.q.iter().all(|q| q == 0) {
            return Err(ConfigError::NoNonzeroQ(self.q));
        }
        if self.identities.is_empty() {
            return Err(ConfigError::NoIdentities);
        }
        if self.jobs == Some(0) {
            return Err(ConfigError::ZeroJobs);
        }
        Ok(())
    }

    fn pq_points(&self) -> Vec<(i64, i64)> {
        self.p
            .iter()
            .flat_map(|p| self.q.iter().filter(|&q| q != 0).map(move |q| (p, q)))
            .collect()
    }

    fn selected(&self, seed_free: bool) -> Vec<IdentityId> {
        let mut ids: Vec<IdentityId> = IdentityId::ALL
            .iter()
            .copied()
            .filter(|id| self.identities.contains(id) && id.seed_free() == seed_free)
            .collect();
        ids.dedup();
        ids
    }

    fn index_tuples(&self, arity: usize) -> usize {
        self.idx.len().pow(arity as u32)
    }

    /// Number of checks a unit of each kind runs.
    fn checks_per_unit(&self, seed_free: bool) -> usize {
        self.selected(seed_free)
            .iter()
            .map(|id| self.index_tuples(id.arity()))
            .sum()
    }

    /// Total checks, including the ones at degenerate grid points.
    pub fn total_checks(&self) -> usize {
        let pq = self.pq_points().len();
        pq * (self.checks_per_unit(true)
            + self.a.len() * self.b.len() * self.checks_per_unit(false))
    }
}

/// Per-identity tallies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Counts {
    fn absorb(&mut self, other: Counts) {
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
    }
}

/// Agreement tallies for one alternate right-hand side.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AltCounts {
    pub agrees: usize,
    pub differs: usize,
}

/// Consistency of the special-case reductions between identities.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReductionCounts {
    pub checked: usize,
    pub mismatched: usize,
}

#[derive(Clone, Debug, Default)]
struct UnitOutcome {
    counts: BTreeMap<IdentityId, Counts>,
    alternates: BTreeMap<&'static str, AltCounts>,
    reductions: ReductionCounts,
    reduction_failures: Vec<String>,
    shown: Vec<IdentityReport>,
}

impl UnitOutcome {
    fn record(&mut self, report: IdentityReport, policy: ShowPolicy) {
        let entry = self.counts.entry(report.identity).or_default();
        if report.equal {
            entry.passed += 1;
        } else {
            entry.failed += 1;
        }
        for (form, agrees) in &report.alternates {
            let alt = self.alternates.entry(form.label()).or_default();
            if *agrees {
                alt.agrees += 1;
            } else {
                alt.differs += 1;
            }
        }
        let keep = match policy {
            ShowPolicy::All => true,
            ShowPolicy::Failed => !report.equal,
            ShowPolicy::None | ShowPolicy::Auto => false,
        };
        if keep {
            self.shown.push(report);
        }
    }

    fn reduction(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.reductions.checked += 1;
        if !ok {
            self.reductions.mismatched += 1;
            self.reduction_failures.push(what());
        }
    }

    fn merge(&mut self, other: UnitOutcome) {
        for (id, c) in other.counts {
            self.counts.entry(id).or_default().absorb(c);
        }
        for (label, c) in other.alternates {
            let e = self.alternates.entry(label).or_default();
            e.agrees += c.agrees;
            e.differs += c.differs;
        }
        self.reductions.checked += other.reductions.checked;
        self.reductions.mismatched += other.reductions.mismatched;
        self.reduction_failures.extend(other.reduction_failures);
        self.shown.extend(other.shown);
    }
}

/// Negative-index convention audit over the grid.
#[derive(Clone, Debug)]
pub struct AuditSummary {
    /// The pinned case `(p, q, n) = (1, 2, 2)`.
    pub pinned: ReflectionAudit,
    pub checked: usize,
    pub reflected_disagreements: usize,
    pub flipped_disagreements: usize,
}

#[derive(Clone, Debug)]
pub struct CampaignResult {
    pub reports: Vec<IdentityReport>,
    pub per_identity: BTreeMap<IdentityId, Counts>,
    pub totals: Counts,
    pub alternates: BTreeMap<&'static str, AltCounts>,
    pub reductions: ReductionCounts,
    pub reduction_failures: Vec<String>,
    pub audit: AuditSummary,
}

impl CampaignResult {
    /// True when every check passed and every reduction matched.
    pub fn success(&self) -> bool {
        self.totals.failed == 0
            && self.reductions.mismatched == 0
            && self.audit.reflected_disagreements == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.success() {
            0
        } else {
            1
        }
    }

    pub fn summary_json(&self) -> Value {
        let per_identity: BTreeMap<&str, Counts> = self
            .per_identity
            .iter()
            .map(|(id, c)| (id.name(), *c))
            .collect();
        json!({
            "passed": self.totals.passed,
            "failed": self.totals.failed,
            "skipped": self.totals.skipped,
            "per_identity": per_identity,
            "alternates": self.alternates,
            "reductions": self.reductions,
            "reduction_failures": self.reduction_failures,
        })
    }

    pub fn audit_json(&self) -> Value {
        json!({
            "pinned": self.audit.pinned.to_json(),
            "checked": self.audit.checked,
            "reflected_disagreements": self.audit.reflected_disagreements,
            "flipped_disagreements": self.audit.flipped_disagreements,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "reports": self.reports.iter().map(IdentityReport::to_json).collect::<Vec<_>>(),
            "summary": self.summary_json(),
            "audit": self.audit_json(),
        })
    }
}

#[derive(Clone, Debug)]
enum Unit {
    SeedFree { p: i64, q: i64 },
    Seeded { p: i64, q: i64, a: i64, b: i64 },
}

fn index_tuples(idx: IntRange, arity: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                idx.iter().map(move |v| {
                    let mut t = prefix.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn run_unit(unit: &Unit, config: &VerifyConfig, policy: ShowPolicy) -> UnitOutcome {
    let mut out = UnitOutcome::default();
    let (p, q, a, b, seed_free) = match *unit {
        Unit::SeedFree { p, q } => (p, q, 0, 1, true),
        Unit::Seeded { p, q, a, b } => (p, q, a, b, false),
    };
    let ids = config.selected(seed_free);
    let params = match HoradamParams::from_ints(p, q, a, b) {
        Ok(params) => params,
        Err(_) => {
            for id in ids {
                out.counts.entry(id).or_default().skipped += config.index_tuples(id.arity());
            }
            return out;
        }
    };
    let ctx = HoradamQuatContext::new(params);
    for id in ids {
        for indices in index_tuples(config.idx, id.arity()) {
            out.record(run_identity(&ctx, id, &indices), policy);
        }
        if !seed_free {
            reductions(&ctx, id, config.idx, &mut out);
        }
    }
    out
}

/// Cassini must equal Catalan at n = 1 and d'Ocagne at m = n − 1; d'Ocagne at
/// m = n must equal the adjacent commutator.
fn reductions(ctx: &HoradamQuatContext, id: IdentityId, idx: IntRange, out: &mut UnitOutcome) {
    let same = |x: &IdentityReport, y: &IdentityReport| x.lhs == y.lhs && x.rhs == y.rhs;
    match id {
        IdentityId::Cassini => {
            for m in idx.iter() {
                let cassini = cassini_check(ctx, m);
                let catalan = catalan_check(ctx, m, 1);
                out.reduction(same(&cassini, &catalan), || {
                    format!("catalan(m={m}, n=1) != cassini(m={m}) at {:?}", ctx.params)
                });
                let docagne = docagne_check(ctx, m, m - 1);
                out.reduction(same(&cassini, &docagne), || {
                    format!(
                        "docagne(n={m}, m={}) != cassini(m={m}) at {:?}",
                        m - 1,
                        ctx.params
                    )
                });
            }
        }
        IdentityId::CommutatorAdjacent => {
            for n in idx.iter() {
                let comm = commutator_adjacent_check(ctx, n);
                let docagne = docagne_check(ctx, n, n);
                out.reduction(same(&comm, &docagne), || {
                    format!(
                        "docagne(n={n}, m={n}) != commutator-adjacent(n={n}) at {:?}",
                        ctx.params
                    )
                });
            }
        }
        _ => {}
    }
}

fn audit(config: &VerifyConfig) -> AuditSummary {
    let pinned = ReflectionAudit::new(&Rational::from(1), &Rational::from(2), 2)
        .expect("p=1, q=2 is a valid pair");
    let mut summary = AuditSummary {
        pinned,
        checked: 0,
        reflected_disagreements: 0,
        flipped_disagreements: 0,
    };
    for (p, q) in config.pq_points() {
        for n in config.idx.iter() {
            let Ok(a) = ReflectionAudit::new(&Rational::from(p), &Rational::from(q), n) else {
                continue;
            };
            summary.checked += 1;
            summary.reflected_disagreements += usize::from(!a.reflected_agrees());
            summary.flipped_disagreements += usize::from(!a.flipped_agrees());
        }
    }
    summary
}

/// Runs every selected identity at every grid point.
pub fn run_campaign(config: &VerifyConfig) -> Result<CampaignResult, ConfigError> {
    config.validate()?;
    let policy = match config.show {
        ShowPolicy::Auto if config.total_checks() <= AUTO_SHOW_LIMIT => ShowPolicy::All,
        ShowPolicy::Auto => ShowPolicy::Failed,
        other => other,
    };
    let mut units = Vec::new();
    for (p, q) in config.pq_points() {
        if !config.selected(true).is_empty() {
            units.push(Unit::SeedFree { p, q });
        }
        if !config.selected(false).is_empty() {
            for a in config.a.iter() {
                for b in config.b.iter() {
                    units.push(Unit::Seeded { p, q, a, b });
                }
            }
        }
    }
    let work = || -> Vec<UnitOutcome> {
        units
            .par_iter()
            .map(|u| run_unit(u, config, policy))
            .collect()
    };
    let outcomes = match config.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| ConfigError::Pool(e.to_string()))?
            .install(work),
        None => work(),
    };
    let mut acc = UnitOutcome::default();
    for o in outcomes {
        acc.merge(o);
    }
    let mut totals = Counts::default();
    for c in acc.counts.values() {
        totals.absorb(*c);
    }
    Ok(CampaignResult {
        reports: acc.shown,
        per_identity: acc.counts,
        totals,
        alternates: acc.alternates,
        reductions: acc.reductions,
        reduction_failures: acc.reduction_failures,
        audit: audit(config),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            p: IntRange::new(-1, 2),
            q: IntRange::new(-1, 1),
            a: IntRange::new(0, 1),
            b: IntRange::new(1, 1),
            idx: IntRange::new(-2, 3),
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn ranges_parse() {
        assert_eq!("-6..12".parse::<IntRange>().unwrap(), IntRange::new(-6, 12));
        assert_eq!("3".parse::<IntRange>().unwrap(), IntRange::single(3));
        assert!("a..2".parse::<IntRange>().is_err());
        assert_eq!(IntRange::new(2, 1).len(), 0);
    }

    #[test]
    fn small_grid_passes_and_skips_degenerate_points() {
        let result = run_campaign(&small()).unwrap();
        assert!(result.success(), "{:?}", result.summary_json());
        // p=±2, q=-1 are degenerate.
        assert!(result.totals.skipped > 0);
        assert_eq!(
            result.totals.passed + result.totals.skipped,
            small().total_checks()
        );
        assert!(result.reductions.checked > 0);
    }

    #[test]
    fn rejects_zero_only_q() {
        let config = VerifyConfig {
            q: IntRange::single(0),
            ..small()
        };
        assert_eq!(
            run_campaign(&config).unwrap_err(),
            ConfigError::NoNonzeroQ(IntRange::single(0))
        );
        let config = VerifyConfig {
            idx: IntRange::new(1, 0),
            ..small()
        };
        assert!(matches!(
            config.validate(),
            Err(ConfigError::EmptyRange("idx"))
        ));
        let config = VerifyConfig {
            jobs: Some(0),
            ..small()
        };
        assert_eq!(config.validate(), Err(ConfigError::ZeroJobs));
    }

    #[test]
    fn ordering_is_independent_of_worker_count() {
        let base = VerifyConfig {
            show: ShowPolicy::All,
            ..small()
        };
        let one = run_campaign(&VerifyConfig {
            jobs: Some(1),
            ..base.clone()
        })
        .unwrap();
        let four = run_campaign(&VerifyConfig {
            jobs: Some(4),
            ..base
        })
        .unwrap();
        assert_eq!(one.to_json(), four.to_json());
    }

    #[test]
    fn auto_policy_shows_small_campaigns() {
        let config = VerifyConfig {
            identities: vec![IdentityId::Cassini],
            p: IntRange::single(1),
            q: IntRange::single(1),
            a: IntRange::single(0),
            b: IntRange::single(1),
            idx: IntRange::single(1),
            ..VerifyConfig::default()
        };
        let result = run_campaign(&config).unwrap();
        assert_eq!(result.reports.len(), 1);
        assert_eq!(result.reports[0].lhs.to_string(), "2+2j+5k");
        assert!(!result.audit.pinned.flipped_agrees());
    }
}
