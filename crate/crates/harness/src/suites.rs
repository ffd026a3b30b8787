//! Verification suites. Each row draws its formula value from the formulas
//! module, its construction count from a built graph and its oracle value
//! from enumeration, and only then compares them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use thiserror::Error;
use turan_core::constructions::{
    alon_frankl_extremal, complete_bipartite, dense_turan_component, g1_relaxed, g2, good_partition_regular,
    main_extremal, ConstructionError,
};
use turan_core::detectors::{contains_clique, is_family_free};
use turan_core::formulas::{
    ex_clique_matching, ex_k3, ex_main, ex_star, extremal_family_edges, k3_exploratory_bound, FormulaError,
};
use turan_core::oracle::{brute_force_ex, OracleError, ORACLE_MAX_VERTICES};
use turan_core::{are_isomorphic, ExtremalRecord, ForbiddenFamily, FormulaResult, Graph, Validity};

use crate::cache::{CacheError, ResultCache};
use crate::grid::GridOverrides;
use crate::report::{OracleCell, Row, Status, SuiteReport};

/// Largest graph the construction audits build.
pub const BUILD_MAX_VERTICES: usize = 256;
/// Largest forbidden clique order `k + 1` accepted in grids.
pub const MAX_CLIQUE: usize = 8;
/// Largest star count `s + 1` accepted in grids.
pub const MAX_STARS: usize = 5;
/// Largest star size `l` accepted in grids.
pub const MAX_STAR_LEAVES: usize = 6;
/// Default largest n at which thm-k3 consults the oracle.
pub const K3_ORACLE_DEFAULT_MAX: usize = 9;
/// Default last n of a boundary sweep.
pub const SWEEP_DEFAULT_MAX: usize = 10;
/// Largest n at which thm-k3 compares g1 and g2 up to isomorphism.
pub const ISOMORPHISM_MAX_VERTICES: usize = 16;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown suite `{0}`; expected one of lemma-regu, lemma-star, alon-frankl, thm-main, thm-k3, boundary-sweep")]
    UnknownSuite(String),
    #[error("grid exceeds cap: {param} = {value}, maximum {cap}")]
    GridCap {
        param: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    LemmaRegu,
    LemmaStar,
    AlonFrankl,
    ThmMain,
    ThmK3,
    BoundarySweep,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::LemmaRegu,
        Suite::LemmaStar,
        Suite::AlonFrankl,
        Suite::ThmMain,
        Suite::ThmK3,
        Suite::BoundarySweep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LemmaRegu => "lemma-regu",
            Suite::LemmaStar => "lemma-star",
            Suite::AlonFrankl => "alon-frankl",
            Suite::ThmMain => "thm-main",
            Suite::ThmK3 => "thm-k3",
            Suite::BoundarySweep => "boundary-sweep",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| HarnessError::UnknownSuite(s.to_string()))
    }
}

pub fn unix_now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Runs `name` with `jobs = available parallelism` and no persistent cache.
pub fn run_suite(name: &str, grid: &GridOverrides) -> Result<SuiteReport, HarnessError> {
    Runner::new(default_jobs()).run_suite(name.parse()?, grid)
}

/// Owns the oracle worker count, the optional persistent cache and the
/// in-process memo shared by consecutive suites.
pub struct Runner {
    jobs: usize,
    cache: Option<ResultCache>,
    memo: HashMap<(usize, String), ExtremalRecord>,
    oracle_runs: u64,
    cache_hits: u64,
    graphs_visited: u64,
}

impl Runner {
    pub fn new(jobs: usize) -> Self {
        Runner {
            jobs: jobs.max(1),
            cache: None,
            memo: HashMap::new(),
            oracle_runs: 0,
            cache_hits: 0,
            graphs_visited: 0,
        }
    }

    pub fn with_cache(mut self, cache: ResultCache) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn cache(&self) -> Option<&ResultCache> {
        self.cache.as_ref()
    }

    /// Oracle result for `(n, family)`, from the memo, the cache, or a fresh
    /// enumeration that is then appended to the cache.
    pub fn oracle(&mut self, n: usize, family: &ForbiddenFamily) -> Result<ExtremalRecord, HarnessError> {
        let key = (n, family.to_string());
        if let Some(r) = self.memo.get(&key) {
            self.cache_hits += 1;
            return Ok(r.clone());
        }
        if let Some(r) = self.cache.as_ref().and_then(|c| c.lookup(n, family)) {
            self.cache_hits += 1;
            let r = r.clone();
            self.memo.insert(key, r.clone());
            return Ok(r);
        }
        let record = brute_force_ex(n, family, self.jobs)?;
        self.oracle_runs += 1;
        self.graphs_visited += record.graphs_visited;
        if let Some(cache) = self.cache.as_mut() {
            cache.append(&record)?;
        }
        self.memo.insert(key, record.clone());
        Ok(record)
    }

    pub fn run_suite(&mut self, suite: Suite, grid: &GridOverrides) -> Result<SuiteReport, HarnessError> {
        self.oracle_runs = 0;
        self.cache_hits = 0;
        self.graphs_visited = 0;
        let mut report = SuiteReport::new(suite.name(), unix_now());
        if let Some(cache) = &self.cache {
            report.warnings.extend(cache.corrupt_lines().iter().map(|c| c.to_string()));
        }
        match suite {
            Suite::LemmaRegu => lemma_regu(grid, &mut report)?,
            Suite::LemmaStar => self.lemma_star(grid, &mut report)?,
            Suite::AlonFrankl => self.alon_frankl(grid, &mut report)?,
            Suite::ThmMain => thm_main(grid, &mut report)?,
            Suite::ThmK3 => self.thm_k3(grid, &mut report)?,
            Suite::BoundarySweep => self.boundary_sweep(grid, &mut report)?,
        }
        report.oracle_runs = self.oracle_runs;
        report.cache_hits = self.cache_hits;
        report.graphs_visited = self.graphs_visited;
        report.sort_rows();
        Ok(report)
    }

    fn lemma_star(&mut self, grid: &GridOverrides, report: &mut SuiteReport) -> Result<(), HarnessError> {
        for l in values(&grid.l, 1..=2, "l", MAX_STAR_LEAVES)? {
            let family = ForbiddenFamily::star(l + 1).map_err(grid_err)?;
            for n in values(&grid.n, l * l + 2..=9, "n", ORACLE_MAX_VERTICES)? {
                let mut row = row(n, None, None, Some(l));
                let mut checks = Checks::default();
                let formula = ex_star(n as u64, l as u64);
                set_formula(&mut row, &formula);
                let built = good_partition_regular(n, l).map(|(g, _)| g);
                let construction = audit_build(&mut row, &mut checks, "regular", &built, &family, Some(formula.value));
                let oracle = self.oracle(n, &family)?.ex_value as u64;
                row.oracle = OracleCell::Value(oracle);
                lower_bound(&mut checks, construction, oracle);
                let skip = match compare(oracle, &formula) {
                    Agreement::Silent => Some(silent(oracle, &formula)),
                    Agreement::Violated => {
                        checks.fail(format!("oracle {oracle} != formula {}", formula.value));
                        None
                    }
                    Agreement::Agree => None,
                };
                finish(report, row, checks, skip.or(build_skip(&built)));
            }
        }
        Ok(())
    }

    fn alon_frankl(&mut self, grid: &GridOverrides, report: &mut SuiteReport) -> Result<(), HarnessError> {
        for k in values(&grid.k, 2..=3, "k", MAX_CLIQUE - 1)? {
            if k < 2 {
                return Err(HarnessError::Grid("alon-frankl needs k >= 2".into()));
            }
            for s in values(&grid.s, 1..=2, "s", ORACLE_MAX_VERTICES)? {
                let family = ForbiddenFamily::clique_matching(k, s).map_err(grid_err)?;
                for n in values(&grid.n, 2 * s + 1..=8, "n", ORACLE_MAX_VERTICES)? {
                    let mut row = row(n, Some(k), Some(s), None);
                    let mut checks = Checks::default();
                    let formula = ex_clique_matching(n as u64, k as u64, s as u64).map_err(formula_err)?;
                    set_formula(&mut row, &formula);

                    let mut best: Option<u64> = None;
                    let mut free = true;
                    let candidates = [
                        ("G(n,k)", alon_frankl_extremal(n, k, s)),
                        ("T_k(2s+1) + isolated", dense_turan_component(n, k, s)),
                    ];
                    for (name, built) in &candidates {
                        match built {
                            Ok(g) => {
                                let e = g.edge_count() as u64;
                                let ok = is_family_free(g, &family);
                                checks.expect(ok, || format!("{name} contains a forbidden subgraph"));
                                checks.note(format!("{name} {e}"));
                                free &= ok;
                                best = best.max(Some(e));
                            }
                            Err(e) => checks.note(format!("{name} not built: {e}")),
                        }
                    }
                    row.construction = best;
                    row.free = best.map(|_| free);

                    let oracle = self.oracle(n, &family)?.ex_value as u64;
                    row.oracle = OracleCell::Value(oracle);
                    lower_bound(&mut checks, best, oracle);
                    let skip = match compare(oracle, &formula) {
                        Agreement::Silent => Some(silent(oracle, &formula)),
                        Agreement::Violated => {
                            checks.fail(format!("oracle {oracle} != formula {}", formula.value));
                            None
                        }
                        Agreement::Agree => {
                            if formula.validity == Validity::Proven {
                                checks.expect(best == Some(formula.value), || {
                                    format!("best construction {best:?} != formula {}", formula.value)
                                });
                            }
                            None
                        }
                    };
                    finish(report, row, checks, skip);
                }
            }
        }
        Ok(())
    }

    fn thm_k3(&mut self, grid: &GridOverrides, report: &mut SuiteReport) -> Result<(), HarnessError> {
        let oracle_max = oracle_max(grid, K3_ORACLE_DEFAULT_MAX)?;
        for s in values(&grid.s, 0..=4, "s", MAX_STARS - 1)? {
            for l in values(&grid.l, 1..=5, "l", MAX_STAR_LEAVES)? {
                if l == 0 {
                    return Err(HarnessError::Grid("thm-k3 needs l >= 1".into()));
                }
                let family = ForbiddenFamily::clique_star_forest(2, s, l).map_err(grid_err)?;
                for n in values(&grid.n, s + 1..=40, "n", BUILD_MAX_VERTICES)? {
                    if n < s {
                        return Err(HarnessError::Grid(format!("thm-k3 needs n >= s, got n = {n}, s = {s}")));
                    }
                    let mut row = row(n, Some(2), Some(s), Some(l));
                    let mut checks = Checks::default();
                    let formula = ex_k3(n as u64, s as u64, l as u64).map_err(formula_err)?;
                    set_formula(&mut row, &formula);
                    let audit = k3_audit(n, s, l, &family, &formula, &mut checks);
                    row.construction = audit.construction;
                    row.free = audit.free;
                    if formula.validity == Validity::Heuristic {
                        let bound = k3_exploratory_bound(s as u64, l as u64);
                        if n as u64 >= bound {
                            checks.note(format!("past exploratory bound {bound}"));
                        }
                    }
                    if n <= oracle_max {
                        let oracle = self.oracle(n, &family)?.ex_value as u64;
                        row.oracle = OracleCell::Value(oracle);
                        lower_bound(&mut checks, audit.construction, oracle);
                        match compare(oracle, &formula) {
                            Agreement::Agree => checks.note("oracle agrees"),
                            Agreement::Silent => checks.note(silent(oracle, &formula)),
                            Agreement::Violated => checks.fail(format!("oracle {oracle} != formula {}", formula.value)),
                        }
                    } else {
                        row.oracle = OracleCell::Skipped(format!("n > {oracle_max}"));
                    }
                    finish(report, row, checks, audit.skip);
                }
            }
        }
        Ok(())
    }

    fn boundary_sweep(&mut self, grid: &GridOverrides, report: &mut SuiteReport) -> Result<(), HarnessError> {
        let single = |v: &Option<Vec<usize>>, default: usize, name: &str| match v.as_deref() {
            None => Ok(default),
            Some([x]) => Ok(*x),
            Some(_) => Err(HarnessError::Grid(format!("boundary-sweep takes a single {name}"))),
        };
        let k = single(&grid.k, 2, "k")?;
        let s = single(&grid.s, 1, "s")?;
        let l = single(&grid.l, 2, "l")?;
        cap("k", k, MAX_CLIQUE - 1)?;
        cap("s", s, MAX_STARS - 1)?;
        cap("l", l, MAX_STAR_LEAVES)?;
        if k < 2 || l == 0 || (k >= 3 && l < 2) {
            return Err(HarnessError::Grid("boundary-sweep needs k = 2 and l >= 1, or k >= 3 and l >= 2".into()));
        }
        let family = ForbiddenFamily::clique_star_forest(k, s, l).map_err(grid_err)?;
        let last = oracle_max(grid, SWEEP_DEFAULT_MAX)?;
        let ns = values(&grid.n, s.max(1)..=last, "n", ORACLE_MAX_VERTICES)?;

        let mut agree: Vec<(usize, bool)> = Vec::new();
        for n in ns {
            if n < s {
                return Err(HarnessError::Grid(format!("boundary-sweep needs n >= s, got n = {n}")));
            }
            let mut row = row(n, Some(k), Some(s), Some(l));
            let mut checks = Checks::default();
            let formula = if k == 2 {
                ex_k3(n as u64, s as u64, l as u64)
            } else {
                ex_main(n as u64, k as u64, s as u64, l as u64)
            }
            .map_err(formula_err)?;
            set_formula(&mut row, &formula);

            let construction = if k == 2 {
                let audit = k3_audit(n, s, l, &family, &formula, &mut checks);
                row.free = audit.free;
                audit.construction
            } else {
                let built = main_extremal(n, k, s, l);
                audit_build(&mut row, &mut checks, "construction", &built, &family, Some(formula.value))
            };
            row.construction = construction;

            let oracle = self.oracle(n, &family)?.ex_value as u64;
            row.oracle = OracleCell::Value(oracle);
            lower_bound(&mut checks, construction, oracle);
            let skip = match compare(oracle, &formula) {
                Agreement::Agree => None,
                Agreement::Silent => Some(format!("theorem silent: oracle {oracle}, formula {}", formula.value)),
                Agreement::Violated => {
                    checks.fail(format!("oracle {oracle} != formula {}", formula.value));
                    None
                }
            };
            agree.push((n, oracle == formula.value));
            finish(report, row, checks, skip);
        }

        let first = agree.iter().rev().take_while(|(_, ok)| *ok).last().map(|&(n, _)| n);
        report.first_agreement = first;
        if let Some(n) = first {
            if let Some(r) = report.rows.iter_mut().find(|r| r.n == n) {
                r.notes.push("first agreement".into());
            }
        }
        Ok(())
    }
}

fn lemma_regu(grid: &GridOverrides, report: &mut SuiteReport) -> Result<(), HarnessError> {
    for l in values(&grid.l, 1..=6, "l", MAX_STAR_LEAVES)? {
        for n in values(&grid.n, l * l + 2..=60, "n", BUILD_MAX_VERTICES)? {
            let mut row = row(n, None, None, Some(l));
            let mut checks = Checks::default();
            let formula = ex_star(n as u64, l as u64);
            set_formula(&mut row, &formula);
            let skip = match good_partition_regular(n, l) {
                Ok((g, cert)) => {
                    let e = g.edge_count() as u64;
                    row.construction = Some(e);
                    let free = !contains_clique(&g, 3);
                    row.free = Some(free);
                    checks.expect(free, || "contains a triangle".into());
                    checks.expect(regular_degree_multiset(&g, l), || {
                        format!("degree multiset {:?} is not (almost) {l}-regular", g.degrees())
                    });
                    if let Err(e) = cert.validate(&g) {
                        checks.fail(format!("certificate: {e}"));
                    }
                    checks.expect(e == formula.value, || format!("edges {e} != ⌊ln/2⌋ = {}", formula.value));
                    None
                }
                Err(e @ ConstructionError::Precondition { .. }) => Some(e.to_string()),
                Err(e) => {
                    checks.fail(format!("builder failed: {e}"));
                    None
                }
            };
            finish(report, row, checks, skip);
        }
    }
    Ok(())
}

fn thm_main(grid: &GridOverrides, report: &mut SuiteReport) -> Result<(), HarnessError> {
    for k in values(&grid.k, 3..=5, "k", MAX_CLIQUE - 1)? {
        for s in values(&grid.s, 0..=3, "s", MAX_STARS - 1)? {
            for l in values(&grid.l, 2..=4, "l", MAX_STAR_LEAVES)? {
                if k < 3 || l < 2 {
                    return Err(HarnessError::Grid("thm-main needs k >= 3 and l >= 2".into()));
                }
                let family = ForbiddenFamily::clique_star_forest(k, s, l).map_err(grid_err)?;
                let t = turan_core::formulas::main_threshold(k as u64, s as u64, l as u64) as usize;
                for n in values(&grid.n, t..=t + 10, "n", BUILD_MAX_VERTICES)? {
                    if n < s {
                        return Err(HarnessError::Grid(format!("thm-main needs n >= s, got n = {n}, s = {s}")));
                    }
                    let mut row = row(n, Some(k), Some(s), Some(l));
                    let mut checks = Checks::default();
                    let formula = ex_main(n as u64, k as u64, s as u64, l as u64).map_err(formula_err)?;
                    set_formula(&mut row, &formula);
                    let built = main_extremal(n, k, s, l);
                    audit_build(&mut row, &mut checks, "construction", &built, &family, Some(formula.value));
                    row.oracle = OracleCell::Skipped(if n > ORACLE_MAX_VERTICES {
                        format!("n > oracle cap {ORACLE_MAX_VERTICES}")
                    } else {
                        "construction audit only".into()
                    });
                    finish(report, row, checks, build_skip(&built));
                }
            }
        }
    }
    Ok(())
}

struct K3Audit {
    construction: Option<u64>,
    free: Option<bool>,
    skip: Option<String>,
}

/// Builds g1 and g2, audits both against their closed forms and freeness, and
/// picks the construction that realizes the formula's case: `K_{s,n-s}` when
/// `l < s + 1`, else g1 for even `n - s` and the larger of g1, g2 for odd.
fn k3_audit(
    n: usize,
    s: usize,
    l: usize,
    family: &ForbiddenFamily,
    formula: &FormulaResult,
    checks: &mut Checks,
) -> K3Audit {
    let m = n - s;
    let closed = extremal_family_edges(n as u64, s as u64, l as u64).ok();
    let b1 = g1_relaxed(n, s, l);
    let b2 = g2(n, s, l);
    let mut free = true;
    for (name, built, expected) in [("g1", &b1, closed.map(|c| c.0)), ("g2", &b2, closed.map(|c| c.1))] {
        match built {
            Ok(g) => {
                let e = g.edge_count() as u64;
                checks.note(format!("{name} {e}"));
                if let Some(x) = expected {
                    checks.expect(e == x, || format!("{name} has {e} edges, closed form {x}"));
                }
                let ok = is_family_free(g, family);
                checks.expect(ok, || format!("{name} contains a forbidden subgraph"));
                free &= ok;
            }
            Err(e) => checks.note(format!("{name} not built: {e}")),
        }
    }
    if m % 2 == 0 && n <= ISOMORPHISM_MAX_VERTICES {
        if let (Ok(a), Ok(b)) = (&b1, &b2) {
            let iso = are_isomorphic(a, b).unwrap_or(false);
            checks.expect(iso, || "g1 and g2 are not isomorphic".into());
        }
    }

    let designated: Result<u64, String> = if l < s + 1 {
        complete_bipartite(s, m).map_err(|e| e.to_string()).map(|g| {
            let ok = is_family_free(&g, family);
            checks.expect(ok, || "K_{s,n-s} contains a forbidden subgraph".into());
            free &= ok;
            g.edge_count() as u64
        })
    } else if m % 2 == 0 {
        b1.as_ref().map(|g| g.edge_count() as u64).map_err(|e| format!("g1: {e}"))
    } else {
        match (&b1, &b2) {
            (Ok(a), Ok(b)) => Ok(a.edge_count().max(b.edge_count()) as u64),
            (Err(e), _) => Err(format!("g1: {e}")),
            (_, Err(e)) => Err(format!("g2: {e}")),
        }
    };
    match designated {
        Ok(e) => {
            checks.expect(e == formula.value, || format!("construction {e} != formula {}", formula.value));
            K3Audit {
                construction: Some(e),
                free: Some(free),
                skip: None,
            }
        }
        Err(reason) => K3Audit {
            construction: None,
            free: (b1.is_ok() || b2.is_ok()).then_some(free),
            skip: Some(format!("construction infeasible: {reason}")),
        },
    }
}

#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checks {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failures.push(what);
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

fn finish(report: &mut SuiteReport, mut row: Row, checks: Checks, skip: Option<String>) {
    row.status = if !checks.failures.is_empty() {
        Status::Mismatch
    } else if let Some(reason) = skip {
        Status::Skipped(reason)
    } else {
        Status::Match
    };
    row.notes = checks.failures.into_iter().chain(checks.notes).collect();
    report.rows.push(row);
}

enum Agreement {
    Agree,
    /// Disagreement where the formula makes no claim.
    Silent,
    /// Disagreement where the formula is proven.
    Violated,
}

fn compare(oracle: u64, formula: &FormulaResult) -> Agreement {
    if oracle == formula.value {
        Agreement::Agree
    } else if formula.validity == Validity::Proven {
        Agreement::Violated
    } else {
        Agreement::Silent
    }
}

fn silent(oracle: u64, formula: &FormulaResult) -> String {
    format!("theorem silent: oracle {oracle}, formula {}", formula.value)
}

/// A free construction is a witness, so the exact value cannot be smaller.
fn lower_bound(checks: &mut Checks, construction: Option<u64>, oracle: u64) {
    if let Some(e) = construction {
        checks.expect(e <= oracle, || format!("free construction has {e} edges, oracle maximum {oracle}"));
    }
}

/// Records edges and freeness of a single build; returns its edge count.
fn audit_build(
    row: &mut Row,
    checks: &mut Checks,
    name: &str,
    built: &Result<Graph, ConstructionError>,
    family: &ForbiddenFamily,
    expected: Option<u64>,
) -> Option<u64> {
    let g = built.as_ref().ok()?;
    let e = g.edge_count() as u64;
    let free = is_family_free(g, family);
    row.construction = Some(e);
    row.free = Some(free);
    checks.expect(free, || format!("{name} contains a forbidden subgraph"));
    if let Some(x) = expected {
        checks.expect(e == x, || format!("{name} has {e} edges, formula {x}"));
    }
    Some(e)
}

fn build_skip(built: &Result<Graph, ConstructionError>) -> Option<String> {
    built.as_ref().err().map(|e| format!("construction infeasible: {e}"))
}

fn regular_degree_multiset(g: &Graph, l: usize) -> bool {
    let degrees = g.degrees();
    let low = degrees.iter().filter(|&&d| d + 1 == l).count();
    let expected_low = usize::from(l * g.n() % 2 == 1);
    degrees.iter().all(|&d| d == l || d + 1 == l) && low == expected_low
}

fn row(n: usize, k: Option<usize>, s: Option<usize>, l: Option<usize>) -> Row {
    Row {
        n,
        k,
        s,
        l,
        formula: None,
        validity: None,
        construction: None,
        oracle: OracleCell::NotRun,
        free: None,
        status: Status::Match,
        notes: Vec::new(),
    }
}

fn set_formula(row: &mut Row, f: &FormulaResult) {
    row.formula = Some(f.value);
    row.validity = Some(f.validity);
}

fn cap(param: &'static str, value: usize, cap: usize) -> Result<(), HarnessError> {
    if value > cap {
        return Err(HarnessError::GridCap { param, value, cap });
    }
    Ok(())
}

fn values(
    over: &Option<Vec<usize>>,
    default: std::ops::RangeInclusive<usize>,
    param: &'static str,
    max: usize,
) -> Result<Vec<usize>, HarnessError> {
    let v: Vec<usize> = over.clone().unwrap_or_else(|| default.collect());
    for &x in &v {
        cap(param, x, max)?;
    }
    Ok(v)
}

fn oracle_max(grid: &GridOverrides, default: usize) -> Result<usize, HarnessError> {
    let v = grid.oracle_max_n.unwrap_or(default);
    cap("oracle n", v, ORACLE_MAX_VERTICES)?;
    Ok(v)
}

fn grid_err(e: impl fmt::Display) -> HarnessError {
    HarnessError::Grid(e.to_string())
}

fn formula_err(e: FormulaError) -> HarnessError {
    HarnessError::Grid(e.to_string())
}
