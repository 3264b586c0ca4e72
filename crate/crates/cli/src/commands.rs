use std::fmt::Write as _;

use jetforge_core::criteria::{tangent_space_at_origin, CharPCertificate};
use jetforge_core::{
    fiber_over_trivial_jet, flat_witness_char0, flat_witness_charp, jet_smoothness_report, jetify, ord_ideal,
    parse_poly, verify_witness, AmbientIdeal, CriteriaError, FlatnessWitness, Poly, Verdict, VerificationReport,
    WitnessKind,
};
use serde_json::{json, Value};

use crate::json::{terms_of, to_canonical_string, JsonJetGenerator, JsonJetIdeal};
use crate::problem::{ProblemError, ProblemFile};

pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
    #[error("{0}")]
    Usage(String),
}

/// What a command prints and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn text(stdout: String, code: i32) -> Self {
        Output { stdout, code }
    }

    fn json(value: &Value, code: i32) -> Self {
        Output { stdout: to_canonical_string(value), code }
    }
}

fn check_range(m: usize, m_prime: usize) -> Result<(), CliError> {
    if m >= m_prime {
        return Err(CliError::Usage(format!("need m < m', got m = {m}, m' = {m_prime}")));
    }
    Ok(())
}

fn describe(problem: &ProblemFile, ideal: &AmbientIdeal) -> String {
    let gens: Vec<String> = problem.generators.iter().map(|g| g.text.clone()).collect();
    let mut s = format!("X = V({}) in A^{} over {}", gens.join(", "), ideal.dimension(), ideal.field());
    if let Some(a) = &problem.translate {
        let pt: Vec<String> = a.iter().map(|c| c.to_string_in(&ideal.field())).collect();
        let _ = write!(s, ", translated so that ({}) is the origin", pt.join(", "));
    }
    s
}

/// Every `F_{g,i}` of the `m`-jet ideal, levels above `max_level` omitted.
pub fn jetify_json(problem: &ProblemFile, m: usize, max_level: Option<usize>) -> Result<JsonJetIdeal, CliError> {
    let ideal = problem.ideal()?;
    let top = max_level.map_or(m, |l| l.min(m));
    let jets = jetify(&ideal, m);
    Ok(JsonJetIdeal {
        field: ideal.field().to_string(),
        vars: problem.vars.clone(),
        m,
        generators: jets
            .jet_generators()
            .iter()
            .filter(|g| g.level <= top)
            .map(|g| JsonJetGenerator { generator: g.generator, level: g.level, terms: terms_of(&g.poly) })
            .collect(),
    })
}

pub fn jetify_cmd(problem: &ProblemFile, m: usize, max_level: Option<usize>, json: bool) -> Result<Output, CliError> {
    if json {
        let doc = jetify_json(problem, m, max_level)?;
        return Ok(Output::text(to_canonical_string(&doc), 0));
    }
    let ideal = problem.ideal()?;
    let n = ideal.dimension() as usize;
    let top = max_level.map_or(m, |l| l.min(m));
    let jets = jetify(&ideal, m);
    let mut s = String::new();
    let _ = writeln!(s, "{}", describe(problem, &ideal));
    let _ = writeln!(s, "X_{m} lives in A^{} with coordinates x[i][j], 0 <= i <= {m}, 1 <= j <= {n}", n * (m + 1));
    if ideal.is_zero_ideal() {
        let _ = writeln!(s, "zero ideal: X = A^{n} and X_{m} = A^{}", n * (m + 1));
        return Ok(Output::text(s, 0));
    }
    let mut current = usize::MAX;
    for g in jets.jet_generators().iter().filter(|g| g.level <= top) {
        if g.generator != current {
            current = g.generator;
            let _ = writeln!(s, "generator {}: {}", g.generator, ideal.generators()[g.generator]);
        }
        if g.poly.is_zero() {
            let _ = writeln!(s, "  F[{}][{}] = 0", g.generator, g.level);
        } else {
            let _ = writeln!(s, "  F[{}][{}] (weight {}) = {}", g.generator, g.level, g.level, g.poly);
        }
    }
    let shown: Vec<_> = jets.jet_generators().iter().filter(|g| g.level <= top).collect();
    let nonzero = shown.iter().filter(|g| !g.poly.is_zero()).count();
    let zero_levels: Vec<String> =
        shown.iter().filter(|g| g.poly.is_zero()).map(|g| format!("({}, {})", g.generator, g.level)).collect();
    let _ = writeln!(s, "{nonzero} nonzero generator(s) of {}", shown.len());
    if !zero_levels.is_empty() {
        let _ = writeln!(s, "vanishing (generator, level): {}", zero_levels.join(" "));
    }
    Ok(Output::text(s, 0))
}

pub fn smooth_cmd(problem: &ProblemFile, m: usize, json: bool) -> Result<Output, CliError> {
    let ideal = problem.ideal()?;
    let report = jet_smoothness_report(&ideal, m)?;
    let code = match report.verdict {
        Verdict::Smooth => 0,
        Verdict::Singular => 1,
        Verdict::Inconclusive => 2,
    };
    if json {
        return Ok(Output::json(
            &json!({
                "order": m,
                "jacobian_rank": report.jacobian_rank,
                "codim_expected": report.codim_expected,
                "embedding_dimension": report.embedding_dimension,
                "verdict": report.verdict.to_string(),
                "notes": report.notes,
            }),
            code,
        ));
    }
    let mut s = String::new();
    let _ = writeln!(s, "{}", describe(problem, &ideal));
    let _ = writeln!(s, "X_{m} at the trivial jet 0_{m}");
    let _ = writeln!(s, "embedding dimension at the origin: {}", report.embedding_dimension);
    let _ = writeln!(s, "Jacobian rank of the jet ideal at 0_{m}: {}", report.jacobian_rank);
    match report.codim_expected {
        Some(c) => {
            let _ = writeln!(s, "codimension at 0_{m}: {c}");
        }
        None => {
            let _ = writeln!(s, "codimension at 0_{m}: not matched by the Jacobian rank");
        }
    }
    for note in &report.notes {
        let _ = writeln!(s, "note: {note}");
    }
    let _ = writeln!(s, "verdict: {}", report.verdict);
    Ok(Output::text(s, code))
}

/// Runs the constructor matching the characteristic.
fn construct(problem: &ProblemFile, ideal: &AmbientIdeal, m: usize, m_prime: usize) -> Result<FlatnessWitness, CriteriaError> {
    if ideal.field().characteristic() == 0 {
        flat_witness_char0(ideal, m, m_prime)
    } else {
        flat_witness_charp(ideal, m, m_prime, problem.reduced)
    }
}

fn certificate_line(cert: &CharPCertificate, field: jetforge_core::FieldSpec) -> String {
    format!(
        "certificate monomial {} (coordinate {}, e = {}, s = {}) with coefficient {}",
        cert.monomial,
        cert.coordinate,
        cert.e,
        cert.s,
        cert.coefficient.to_string_in(&field)
    )
}

fn witness_text(w: &FlatnessWitness, supplied: bool) -> String {
    let field = w.presentation.field();
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} at the origin: ({}) in A^{}",
        if supplied { "presentation" } else { "minimal presentation" },
        w.presentation.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "),
        w.presentation.dimension()
    );
    let _ = writeln!(s, "d = ord I = {} (generator {})", w.d, w.source_generator);
    match &w.kind {
        WitnessKind::Element { element, level_used, certificate } => {
            if supplied {
                let _ = writeln!(s, "candidate F = {element}");
            } else {
                let _ = writeln!(s, "witness F = F[{}][{}] = {}", w.source_generator, level_used, element);
            }
            if let Ok(init) = element.initial_form() {
                let _ = writeln!(s, "initial form: {init}");
            }
            if let Some(cert) = certificate {
                let _ = writeln!(s, "{}", certificate_line(cert, field));
            }
        }
        WitnessKind::FiberJump { fiber_dim, local_dim } => {
            let k = w.m_prime - w.m;
            let _ = writeln!(s, "fiber over 0_{} is A^{fiber_dim}", w.m);
            let _ = writeln!(s, "dim(X,0) = {local_dim}; {fiber_dim} > {k} * {local_dim} = {}", k * local_dim);
            let _ = writeln!(
                s,
                "note: dim(X,0) is the global Krull dimension; components away from the origin can make it too large"
            );
        }
    }
    s
}

fn witness_json(w: &FlatnessWitness) -> Value {
    let field = w.presentation.field();
    let kind = match &w.kind {
        WitnessKind::Element { element, level_used, certificate } => json!({
            "type": "element",
            "level_used": level_used,
            "element": terms_of(element),
            "element_text": element.to_string(),
            "certificate": certificate.as_ref().map(|c| json!({
                "exponents": c.exponents,
                "coordinate": c.coordinate,
                "e": c.e,
                "s": c.s,
                "monomial": c.monomial.to_string(),
                "coefficient": c.coefficient.to_string_in(&field),
            })),
        }),
        WitnessKind::FiberJump { fiber_dim, local_dim } => json!({
            "type": "fiber_jump",
            "fiber_dim": fiber_dim,
            "local_dim": local_dim,
        }),
    };
    json!({
        "m": w.m,
        "m_prime": w.m_prime,
        "d": w.d,
        "source_generator": w.source_generator,
        "presentation": w.presentation.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "witness": kind,
    })
}

fn checks_json(report: &VerificationReport) -> Value {
    Value::Array(
        report
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
            .collect(),
    )
}

const NOT_FLAT: &str = "NOT FLAT";
const NO_WITNESS: &str = "NO WITNESS FOUND";

/// Turns a constructor refusal into a `NO WITNESS FOUND` outcome, or
/// passes real errors on.
fn no_witness_reason(problem: &ProblemFile, err: CriteriaError) -> Result<String, CliError> {
    match err {
        CriteriaError::SmoothOrigin => Ok("X is smooth at the origin, so every truncation there is flat".into()),
        CriteriaError::NoWitness(why) => {
            let mut reason = why;
            if !problem.reduced && problem.field.characteristic() != 0 {
                reason.push_str(" (the input may be non-reduced, or the truncation flat)");
            }
            Ok(reason)
        }
        other => Err(other.into()),
    }
}

pub fn flatness_cmd(
    problem: &ProblemFile,
    m: usize,
    m_prime: usize,
    bound: Option<u32>,
    json: bool,
) -> Result<Output, CliError> {
    check_range(m, m_prime)?;
    let ideal = problem.ideal()?;
    let header = format!("{}\ntruncation X_{m_prime} -> X_{m}", describe(problem, &ideal));
    match construct(problem, &ideal, m, m_prime) {
        Ok(w) => {
            let report = verify_witness(&w, bound);
            let (verdict, code) = if report.passed() { (NOT_FLAT, 1) } else { (NO_WITNESS, 0) };
            if json {
                return Ok(Output::json(
                    &json!({"verdict": verdict, "witness": witness_json(&w), "checks": checks_json(&report)}),
                    code,
                ));
            }
            let mut s = format!("{header}\n{}checks:\n{report}", witness_text(&w, false));
            if !report.passed() {
                s.push_str("note: the constructed candidate failed verification\n");
            }
            let _ = writeln!(s, "verdict: {verdict}");
            Ok(Output::text(s, code))
        }
        Err(e) => {
            let reason = no_witness_reason(problem, e)?;
            if json {
                return Ok(Output::json(&json!({"verdict": NO_WITNESS, "reason": reason}), 0));
            }
            Ok(Output::text(format!("{header}\nreason: {reason}\nverdict: {NO_WITNESS}\n"), 0))
        }
    }
}

pub fn fiber_cmd(problem: &ProblemFile, m: usize, m_prime: usize, json: bool) -> Result<Output, CliError> {
    check_range(m, m_prime)?;
    let ideal = problem.ideal()?;
    let fiber = fiber_over_trivial_jet(&ideal, m, m_prime).map_err(CriteriaError::from)?;
    let dim = fiber.ambient_dimension();
    if json {
        let gens: Vec<Value> = fiber
            .generators
            .iter()
            .map(|g| json!({"generator": g.generator, "level": g.level, "vanishes": g.vanishes, "terms": terms_of(&g.poly)}))
            .collect();
        return Ok(Output::json(
            &json!({"m": m, "m_prime": m_prime, "ambient_dimension": dim, "free": fiber.is_free(), "generators": gens}),
            0,
        ));
    }
    let mut s = String::new();
    let _ = writeln!(s, "{}", describe(problem, &ideal));
    let _ = writeln!(s, "fiber of X_{m_prime} -> X_{m} over 0_{m}, inside A^{dim} (levels {}..={m_prime})", m + 1);
    for g in &fiber.generators {
        if g.vanishes {
            let _ = writeln!(s, "  F[{}][{}] restricted = 0", g.generator, g.level);
        } else {
            let _ = writeln!(s, "  F[{}][{}] restricted = {}", g.generator, g.level, g.poly);
        }
    }
    if fiber.is_free() {
        let _ = writeln!(s, "zero fiber ideal: the fiber is A^{dim}");
    } else {
        let _ = writeln!(s, "{} nonzero fiber generator(s)", fiber.nonzero_generators().len());
    }
    Ok(Output::text(s, 0))
}

/// Exit code 1 when the tangent space is larger than `X`, else 0.
pub fn tangent_cmd(problem: &ProblemFile, json: bool) -> Result<Output, CliError> {
    let ideal = problem.ideal()?;
    let t = tangent_space_at_origin(&ideal)?;
    let code = i32::from(t.singular);
    if json {
        return Ok(Output::json(
            &json!({
                "fiber_dimension": t.fiber_dimension,
                "embedding_dimension": t.embedding_dimension,
                "dimension": t.dimension,
                "singular": t.singular,
            }),
            code,
        ));
    }
    let mut s = String::new();
    let _ = writeln!(s, "{}", describe(problem, &ideal));
    let _ = writeln!(s, "dim of the fiber of X_1 -> X over 0: {}", t.fiber_dimension);
    let _ = writeln!(s, "embedding dimension at 0: {}", t.embedding_dimension);
    let _ = writeln!(s, "dim X: {} (global Krull dimension)", t.dimension);
    if t.fiber_dimension as u32 != t.embedding_dimension {
        let _ = writeln!(s, "warning: fiber dimension and embedding dimension disagree");
    }
    let _ = writeln!(
        s,
        "{}",
        if t.singular {
            "the tangent space is larger than X: the origin is singular"
        } else {
            "the tangent space has the dimension of X: the origin is smooth"
        }
    );
    Ok(Output::text(s, code))
}

/// Verifies either the constructed witness or a user-supplied element
/// (written in the file's variables and `x[i][j]`). Exit code 1 when every
/// check passes, i.e. non-flatness is certified.
pub fn verify_cmd(
    problem: &ProblemFile,
    m: usize,
    m_prime: usize,
    element: Option<&str>,
    bound: Option<u32>,
    json: bool,
) -> Result<Output, CliError> {
    check_range(m, m_prime)?;
    let ideal = problem.ideal()?;
    let w = match element {
        Some(text) => {
            let f: Poly = parse_poly(text, &problem.context())
                .map_err(|e| CliError::Usage(format!("witness: column {}: {}", e.pos + 1, e.kind)))?;
            if f.is_zero() {
                return Err(CliError::Usage("witness must be nonzero".into()));
            }
            let (d, g) = ord_ideal(&ideal)?;
            FlatnessWitness {
                m,
                m_prime,
                presentation: ideal.clone(),
                d,
                source_generator: g,
                kind: WitnessKind::Element {
                    level_used: f.max_level().unwrap_or(0) as usize,
                    element: f,
                    certificate: None,
                },
            }
        }
        None => match construct(problem, &ideal, m, m_prime) {
            Ok(w) => w,
            Err(e) => {
                let reason = no_witness_reason(problem, e)?;
                if json {
                    return Ok(Output::json(&json!({"verified": false, "reason": reason}), 0));
                }
                return Ok(Output::text(format!("nothing to verify: {reason}\n"), 0));
            }
        },
    };
    let report = verify_witness(&w, bound);
    let code = i32::from(report.passed());
    if json {
        return Ok(Output::json(
            &json!({"verified": report.passed(), "witness": witness_json(&w), "checks": checks_json(&report)}),
            code,
        ));
    }
    let mut s = format!("{}\n{}checks:\n{report}", describe(problem, &ideal), witness_text(&w, element.is_some()));
    if report.passed() {
        let _ = writeln!(s, "all checks pass: X_{m_prime} -> X_{m} is not flat");
    } else {
        let _ = writeln!(s, "verification FAILED");
    }
    Ok(Output::text(s, code))
}
