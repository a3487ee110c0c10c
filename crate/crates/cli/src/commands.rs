use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::{json, Value};

use qring::automorphisms::compare_with_quandle_automorphisms;
use qring::groebner::listed_basis::verify_listed_basis_q5;
use qring::groebner::{
    buchberger_with_budget, format_system, parse_system, solve_integer_points, MonomialOrder,
    SolveBudget,
};
use qring::quandle::{
    is_connected, make_dihedral, validate_axioms, verify_row_column_structure,
    verify_shift_structure, Quandle,
};
use qring::solutions::SolutionReport;
use qring::system::{
    brute_force_search, build_system, characterization_mismatches, length2_analysis,
    BruteForceConfig,
};
use qring::Error;

use crate::config::{Format, Method, RunConfig};

/// Size of the seeded sample used by the characterization check.
pub const ORACLE_SAMPLES: usize = 1_000;
pub const ORACLE_BOX: i64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    VerificationFailed,
    BudgetExhausted,
    InvalidInput,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::VerificationFailed => 1,
            Status::BudgetExhausted => 2,
            Status::InvalidInput => 3,
        }
    }

    /// The more severe of two statuses.
    fn worst(self, other: Status) -> Status {
        let rank = |s: Status| match s {
            Status::Pass => 0,
            Status::VerificationFailed => 1,
            Status::BudgetExhausted => 2,
            Status::InvalidInput => 3,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub status: Status,
    pub checks: Vec<Check>,
    pub result: Value,
    pub text: String,
    pub csv: Option<String>,
}

impl Outcome {
    fn from_checks(checks: Vec<Check>, result: Value, text: String) -> Self {
        let status = if checks.iter().all(|c| c.passed) {
            Status::Pass
        } else {
            Status::VerificationFailed
        };
        Self {
            status,
            checks,
            result,
            text,
            csv: None,
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Self {
            status: Status::InvalidInput,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::PairBudget { .. } | Error::WorkLimit { .. } => Status::BudgetExhausted,
            _ => Status::InvalidInput,
        };
        Self {
            status,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn solve_budget(cfg: &RunConfig) -> SolveBudget {
    SolveBudget {
        branches: cfg.budget.branches,
        pairs: cfg.budget.pairs,
        fallback_bound: cfg.bound,
    }
}

fn quandle(cfg: &RunConfig) -> Result<Quandle, Failure> {
    Ok(make_dihedral(cfg.n)?)
}

fn vector_text(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(BigInt::to_string).collect();
    format!("({})", parts.join(", "))
}

fn report_text(out: &mut String, label: &str, r: &SolutionReport) {
    let bound = r.bound.map(|b| format!(", bound {b}")).unwrap_or_default();
    let _ = writeln!(
        out,
        "{label}: {} solution(s), {}{bound}{}",
        r.solutions.len(),
        r.completeness,
        if r.budget_exhausted { ", budget exhausted" } else { "" }
    );
    for s in &r.solutions {
        let _ = writeln!(out, "  {}", vector_text(s));
    }
}

fn structure_checks(q: &Quandle) -> Vec<Check> {
    let violations = validate_axioms(q);
    vec![
        Check::new(
            "quandle_axioms",
            violations.is_empty(),
            format!("{} violation(s)", violations.len()),
        ),
        Check::new(
            "shift_structure",
            verify_shift_structure(q),
            "entries[i][j] = entries[0][j] - i mod n",
        ),
        Check::new(
            "row_column_structure",
            verify_row_column_structure(q),
            "first row and column against rho/sigma",
        ),
    ]
}

pub fn adjacency(cfg: &RunConfig) -> CmdResult {
    let q = quandle(cfg)?;
    let adj = q.adjacency_matrix();
    let checks = if cfg.verify { structure_checks(&q) } else { Vec::new() };
    let mut text = String::new();
    for row in q.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(text, "{}", cells.join(" "));
    }
    for c in &checks {
        let _ = writeln!(text, "{}: {}", c.name, if c.passed { "pass" } else { "FAIL" });
    }
    let mut result = adj.to_json_value();
    result["connected"] = json!(is_connected(&q));
    let mut outcome = Outcome::from_checks(checks, result, text);
    outcome.csv = Some(adj.to_csv());
    Ok(outcome)
}

pub fn system(cfg: &RunConfig) -> CmdResult {
    let sys = build_system(&quandle(cfg)?);
    let text = sys.to_text();
    let lines: Vec<&str> = text.lines().collect();
    Ok(Outcome::from_checks(
        Vec::new(),
        json!({ "n": cfg.n, "polynomials": lines }),
        text.clone(),
    ))
}

pub fn idempotents(cfg: &RunConfig) -> CmdResult {
    let q = quandle(cfg)?;
    let sys = build_system(&q);
    let mut checks = Vec::new();
    let mut text = String::new();
    let mut result = json!({ "n": cfg.n });
    let mut status = Status::Pass;

    let brute = if matches!(cfg.method, Method::Brute | Method::Both) {
        let r = brute_force_search(
            &sys,
            &BruteForceConfig {
                bound: cfg.bound,
                jobs: cfg.jobs,
                ..BruteForceConfig::default()
            },
        )?;
        report_text(&mut text, "brute force", &r);
        result["brute"] = serde_json::to_value(&r).expect("report serializes");
        Some(r)
    } else {
        None
    };
    let groebner = if matches!(cfg.method, Method::Groebner | Method::Both) {
        let r = solve_integer_points(&sys.polynomials(), &solve_budget(cfg));
        report_text(&mut text, "groebner", &r);
        if r.budget_exhausted {
            status = Status::BudgetExhausted;
        }
        result["groebner"] = serde_json::to_value(&r).expect("report serializes");
        Some(r)
    } else {
        None
    };
    if let (Some(b), Some(g)) = (&brute, &groebner) {
        let agree = g.within_box(cfg.bound) == b.solutions;
        let _ = writeln!(text, "agreement inside box: {}", if agree { "pass" } else { "FAIL" });
        checks.push(Check::new(
            "agreement",
            agree,
            format!("solver vs brute force inside |t_i| <= {}", cfg.bound),
        ));
    }
    let any = groebner.as_ref().or(brute.as_ref()).expect("a method ran");
    let nontrivial: Vec<Vec<String>> = any
        .solutions
        .iter()
        .filter(|s| s.iter().filter(|c| **c != BigInt::from(0)).count() != 1)
        .map(|s| s.iter().map(BigInt::to_string).collect())
        .collect();
    let _ = writeln!(text, "nontrivial idempotents: {}", nontrivial.len());
    result["nontrivial"] = json!(nontrivial);

    let mut outcome = Outcome::from_checks(checks, result, text);
    outcome.status = outcome.status.worst(status);
    Ok(outcome)
}

/// Draws `count` vectors uniformly from `[-radius, radius]^n`.
pub fn seeded_samples(seed: u64, n: usize, count: usize, radius: i64) -> Vec<Vec<BigInt>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-radius..=radius))).collect())
        .collect()
}

pub fn verify_q5(cfg: &RunConfig) -> CmdResult {
    let q = make_dihedral(5)?;
    let mut checks = Vec::new();
    let mut text = String::new();

    let basis = verify_listed_basis_q5()?;
    let _ = writeln!(
        text,
        "listed basis in system ideal: {}/{}",
        basis.membership_passed, basis.membership_total
    );
    for c in &basis.listed {
        let _ = writeln!(
            text,
            "  {:<28} member: {:<5} value at t_i = 1/5: {}",
            c.polynomial, c.in_system_ideal, c.value_at_uniform_point
        );
    }
    let _ = writeln!(
        text,
        "system generators in listed ideal: {}/{}",
        basis.generators_in_listed_ideal,
        basis.generators.len()
    );
    for c in &basis.criterion {
        let _ = writeln!(
            text,
            "listed list is a Groebner basis under {}: {}",
            c.order, c.listed_is_groebner_basis
        );
    }
    let _ = writeln!(text, "computed reduced basis (grevlex):");
    for p in &basis.system_basis {
        let _ = writeln!(text, "  {p}");
    }
    checks.push(Check::new(
        "listed_basis_membership",
        basis.all_listed_in_ideal(),
        format!("{}/{} listed polynomials reduce to 0", basis.membership_passed, basis.membership_total),
    ));
    checks.push(Check::new(
        "generators_in_listed_ideal",
        basis.all_generators_in_listed_ideal(),
        format!(
            "{}/{} system polynomials reduce to 0 modulo the listed ideal",
            basis.generators_in_listed_ideal,
            basis.generators.len()
        ),
    ));

    let sys = build_system(&q);
    let solved = solve_integer_points(&sys.polynomials(), &solve_budget(cfg));
    report_text(&mut text, "solver", &solved);
    checks.push(Check::new(
        "solver_unit_vectors",
        solved.is_unit_vectors(5) && solved.is_complete(),
        format!("{} solution(s), {}", solved.solutions.len(), solved.completeness),
    ));

    let brute = brute_force_search(
        &sys,
        &BruteForceConfig {
            bound: cfg.bound,
            jobs: cfg.jobs,
            ..BruteForceConfig::default()
        },
    )?;
    report_text(&mut text, "brute force", &brute);
    checks.push(Check::new(
        "brute_force_unit_vectors",
        brute.is_unit_vectors(5),
        format!("{} solution(s) with |t_i| <= {}", brute.solutions.len(), cfg.bound),
    ));

    let pairs = length2_analysis(5)?;
    let no_len2 = pairs.iter().all(|p| p.excludes_length_two());
    let _ = writeln!(text, "no idempotent of length 2: {no_len2} ({} supports)", pairs.len());
    checks.push(Check::new(
        "no_length_two",
        no_len2,
        format!("{} two-element supports solved completely", pairs.len()),
    ));

    let auts = compare_with_quandle_automorphisms(&q)?;
    let _ = writeln!(
        text,
        "basis permutations: {}, ring automorphisms permuting the basis: {}, quandle automorphisms: {}, equal: {}",
        auts.unconstrained_permutations,
        auts.ring_summary.count,
        auts.quandle_summary.count,
        auts.equal
    );
    checks.push(Check::new(
        "automorphism_consistency",
        auts.equal && auts.ring_summary.closed_under_composition,
        format!(
            "{} ring vs {} quandle automorphisms",
            auts.ring_summary.count, auts.quandle_summary.count
        ),
    ));

    let samples = seeded_samples(cfg.seed, 5, ORACLE_SAMPLES, ORACLE_BOX);
    let mismatches = characterization_mismatches(&q, &samples)?;
    let _ = writeln!(
        text,
        "characterization oracle: {} mismatches in {} samples (seed {})",
        mismatches.len(),
        samples.len(),
        cfg.seed
    );
    checks.push(Check::new(
        "characterization_oracle",
        mismatches.is_empty(),
        format!("{} samples from [-{ORACLE_BOX}, {ORACLE_BOX}]^5", samples.len()),
    ));
    for c in &checks {
        let _ = writeln!(text, "check {}: {}", c.name, if c.passed { "pass" } else { "FAIL" });
    }

    let result = json!({
        "listed_basis": basis,
        "solver": solved,
        "brute_force": brute,
        "length_two": pairs,
        "automorphisms": {
            "unconstrained_permutations": auts.unconstrained_permutations.to_string(),
            "ring": auts.ring_summary,
            "quandle": auts.quandle_summary,
            "equal": auts.equal,
        },
        "characterization_mismatches": mismatches
            .iter()
            .map(|v| v.iter().map(BigInt::to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    });
    let mut outcome = Outcome::from_checks(checks, result, text);
    if solved.budget_exhausted && outcome.status == Status::Pass {
        outcome.status = Status::BudgetExhausted;
    }
    Ok(outcome)
}

pub fn automorphisms(cfg: &RunConfig) -> CmdResult {
    let q = quandle(cfg)?;
    let c = compare_with_quandle_automorphisms(&q)?;
    let mut text = String::new();
    let _ = writeln!(text, "n = {}", c.n);
    let _ = writeln!(text, "basis permutations: {}", c.unconstrained_permutations);
    let _ = writeln!(text, "quandle automorphisms: {}", c.quandle_summary.count);
    for p in &c.quandle_automorphisms {
        let _ = writeln!(text, "  {:?}", p.images());
    }
    let _ = writeln!(
        text,
        "ring automorphisms permuting the basis: {}",
        c.ring_summary.count
    );
    for p in &c.ring_automorphisms {
        let _ = writeln!(text, "  {:?}", p.images());
    }
    let _ = writeln!(text, "sets equal: {}", c.equal);
    let _ = writeln!(
        text,
        "closed under composition: {}",
        c.ring_summary.closed_under_composition
    );
    let checks = vec![
        Check::new("sets_equal", c.equal, "ring vs quandle automorphisms"),
        Check::new(
            "closed_under_composition",
            c.ring_summary.closed_under_composition,
            "ring automorphisms form a group",
        ),
    ];
    let result = json!({
        "n": c.n,
        "unconstrained_permutations": c.unconstrained_permutations.to_string(),
        "quandle_automorphisms": c.quandle_automorphisms,
        "ring_automorphisms": c.ring_automorphisms,
        "quandle_summary": c.quandle_summary,
        "ring_summary": c.ring_summary,
        "equal": c.equal,
        "only_ring": c.only_ring,
        "only_quandle": c.only_quandle,
    });
    Ok(Outcome::from_checks(checks, result, text))
}

pub fn groebner(cfg: &RunConfig, input: &Path) -> CmdResult {
    let source = std::fs::read_to_string(input)
        .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", input.display())))?;
    let polys = parse_system(&source, None)?;
    if polys.is_empty() {
        return Err(Failure::invalid("input contains no polynomials"));
    }
    let ord = MonomialOrder::new(cfg.order.into());
    let basis = buchberger_with_budget(&polys, &ord, cfg.budget.pairs)?;
    let text = format_system(&basis, &ord);
    let lines: Vec<&str> = text.lines().collect();
    Ok(Outcome::from_checks(
        Vec::new(),
        json!({ "order": ord.kind(), "nvars": polys[0].nvars(), "basis": lines }),
        text.clone(),
    ))
}

/// CSV is only defined for matrices.
pub fn check_format(cfg: &RunConfig, is_matrix: bool) -> Result<(), Failure> {
    if cfg.format == Format::Csv && !is_matrix {
        return Err(Failure::invalid("csv output is only available for adjacency"));
    }
    Ok(())
}
