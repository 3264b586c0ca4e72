//! Non-flatness witnesses for truncation morphisms `psi_{m',m}: X_{m'} -> X_m`.
//!
//! A `WitnessElement` is some `F` in `I' ∩ M R_{m'}` with `F ∉ M I' + I R_{m'}`,
//! where `I`, `I'` are the ideals of `X_m`, `X_{m'}` and `M = (x_0, ..., x_m)`.
//! Every element of `M I' + I R_{m'}` of order `d = ord I` has a degree-`d`
//! part made of monomials of weight at most `m`, so an `F` of order `d` whose
//! initial form carries a monomial of weight above `m` is excluded.
//!
//! A `FiberJump` records that the fiber over the trivial jet `0_m` is all of
//! `A^{N(m'-m)}`, larger than `(m'-m) dim(X, 0)`; for reduced `X` a flat
//! truncation would not allow this.

use std::fmt;

use crate::algebra::{expand_in_t, FieldSpec, JetVar, Monomial, Poly, Scalar};
use crate::grobner::{ideal_membership, krull_dimension, local_membership_mod_degree, LocalIdealSpec};
use crate::jets::{fiber_over_trivial_jet, jetify, AmbientIdeal};

use super::embedding::embedding_dimension_at_origin;
use super::CriteriaError;

/// The certificate monomial of a positive-characteristic witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPCertificate {
    /// Exponents `e_j` of the chosen minimal-degree monomial of the source generator.
    pub exponents: Vec<u32>,
    /// The coordinate `j0` whose exponent `e = e_{j0}` is moved up to level `s`.
    pub coordinate: u32,
    pub e: u32,
    pub s: u32,
    /// `x[s][j0]^e * prod_{j != j0} x[0][j]^{e_j}`.
    pub monomial: Monomial,
    /// Its coefficient in the source generator.
    pub coefficient: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    FiberJump {
        fiber_dim: usize,
        /// `dim(X, 0)`, taken as the global Krull dimension of the presentation.
        local_dim: usize,
    },
    Element {
        element: Poly,
        level_used: usize,
        certificate: Option<CharPCertificate>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessWitness {
    pub m: usize,
    pub m_prime: usize,
    /// The minimal presentation of `(X, 0)` the witness refers to.
    pub presentation: AmbientIdeal,
    /// `ord` of the presentation (over its generators).
    pub d: u32,
    pub source_generator: usize,
    pub kind: WitnessKind,
}

/// `d = min ord(g)` over the given generators and the first generator
/// attaining it.
///
/// A generating set that does not realize the order of the ideal may
/// overstate `d`.
pub fn ord_ideal(ideal: &AmbientIdeal) -> Result<(u32, usize), CriteriaError> {
    ideal
        .generators()
        .iter()
        .enumerate()
        .filter_map(|(k, g)| g.ord().finite().map(|d| (d, k)))
        .min()
        .ok_or(CriteriaError::ZeroIdeal)
}

/// Minimal presentation of a singular origin and its `(d, generator)`.
fn singular_presentation(ideal: &AmbientIdeal) -> Result<(AmbientIdeal, u32, usize), CriteriaError> {
    let reduction = embedding_dimension_at_origin(ideal)?;
    let presentation = reduction.presentation.ok_or(CriteriaError::NoMinimalEmbedding)?;
    if presentation.is_zero_ideal() {
        return Err(CriteriaError::SmoothOrigin);
    }
    let (d, k) = ord_ideal(&presentation)?;
    debug_assert!(d >= 2, "linear parts are eliminated in the minimal presentation");
    Ok((presentation, d, k))
}

fn check_range(m: usize, m_prime: usize) -> Result<(), CriteriaError> {
    if m >= m_prime {
        return Err(CriteriaError::InvalidRange { m, m_prime });
    }
    Ok(())
}

fn in_maximal_ideal_extension(f: &Poly, m: usize) -> bool {
    f.terms().all(|(mono, _)| mono.variables().any(|v| v.level as usize <= m))
}

fn initial_weight_exceeds(f: &Poly, m: usize) -> bool {
    f.initial_form().map(|i| i.terms().any(|(mono, _)| mono.weight() as usize > m)).unwrap_or(false)
}

fn initial_has_high_level(f: &Poly, m: usize) -> bool {
    f.initial_form()
        .map(|i| i.terms().any(|(mono, _)| mono.variables().any(|v| v.level as usize > m)))
        .unwrap_or(false)
}

/// The syntactic certificate: `ord F = d`, `F ∈ M R_{m'}` and an initial
/// monomial of weight above `m`.
fn passes_syntactic_checks(f: &Poly, d: u32, m: usize) -> bool {
    !f.is_zero() && f.ord().finite() == Some(d) && in_maximal_ideal_extension(f, m) && initial_weight_exceeds(f, m)
}

/// Witness for non-flatness of `psi_{m',m}` in characteristic zero:
/// `F_{m+1}` of a generator of minimal order.
pub fn flat_witness_char0(ideal: &AmbientIdeal, m: usize, m_prime: usize) -> Result<FlatnessWitness, CriteriaError> {
    let char = ideal.field().characteristic();
    if char != 0 {
        return Err(CriteriaError::WrongCharacteristic { expected: "0", got: char });
    }
    check_range(m, m_prime)?;
    let (presentation, d, k) = singular_presentation(ideal)?;
    let f = &presentation.generators()[k];
    let element = expand_in_t(f, m + 1)?.pop().expect("m + 2 coefficients");
    if !passes_syntactic_checks(&element, d, m) || !initial_has_high_level(&element, m) {
        return Err(CriteriaError::NoWitness(format!("F_{} of generator {k} fails the witness checks", m + 1)));
    }
    Ok(FlatnessWitness {
        m,
        m_prime,
        presentation,
        d,
        source_generator: k,
        kind: WitnessKind::Element { element, level_used: m + 1, certificate: None },
    })
}

/// Witness for non-flatness of `psi_{m',m}` in characteristic `p > 0`.
///
/// `reduced` is the caller's assertion that `X` is reduced; the fiber
/// dimension argument used when `m' < d(m+1)` depends on it. Without it that
/// range falls back to searching the jet generators `F_{g,i}`, `m < i <= m'`,
/// for one passing the syntactic checks. For `m' >= d(m+1)` the element
/// `F_{se}` is built from a minimal-degree monomial of a minimal-order
/// generator, with `s` the least integer such that `s e > m`.
pub fn flat_witness_charp(
    ideal: &AmbientIdeal,
    m: usize,
    m_prime: usize,
    reduced: bool,
) -> Result<FlatnessWitness, CriteriaError> {
    let char = ideal.field().characteristic();
    if char == 0 {
        return Err(CriteriaError::WrongCharacteristic { expected: "p > 0", got: 0 });
    }
    check_range(m, m_prime)?;
    if m == 0 && !(m_prime == 1 && reduced) {
        return Err(CriteriaError::LevelZeroOpen { m_prime });
    }
    let (presentation, d, k) = singular_presentation(ideal)?;
    let n = presentation.dimension() as usize;

    if m_prime < d as usize * (m + 1) {
        if reduced {
            let fiber = fiber_over_trivial_jet(&presentation, m, m_prime)?;
            if !fiber.is_free() {
                return Err(CriteriaError::NoWitness("fiber over 0_m is not an affine space".into()));
            }
            let local_dim = krull_dimension(presentation.generators(), &presentation.variables())?;
            let fiber_dim = n * (m_prime - m);
            if fiber_dim <= (m_prime - m) * local_dim {
                return Err(CriteriaError::NoWitness(format!(
                    "fiber dimension {fiber_dim} does not exceed (m'-m) dim(X,0) = {}",
                    (m_prime - m) * local_dim
                )));
            }
            return Ok(FlatnessWitness {
                m,
                m_prime,
                presentation,
                d,
                source_generator: k,
                kind: WitnessKind::FiberJump { fiber_dim, local_dim },
            });
        }
        let jets = jetify(&presentation, m_prime);
        let found = jets
            .jet_generators()
            .iter()
            .find(|g| g.level > m && passes_syntactic_checks(&g.poly, d, m));
        return match found {
            Some(g) => Ok(FlatnessWitness {
                m,
                m_prime,
                presentation: presentation.clone(),
                d,
                source_generator: g.generator,
                kind: WitnessKind::Element { element: g.poly.clone(), level_used: g.level, certificate: None },
            }),
            None => Err(CriteriaError::NoWitness(format!(
                "X is not asserted reduced and no F_(g,i) with {m} < i <= {m_prime} passes the witness checks"
            ))),
        };
    }

    let f = &presentation.generators()[k];
    let initial = f.initial_form()?;
    let (mono, coefficient) = initial.leading_term().map(|(a, b)| (a.clone(), b.clone())).expect("nonzero");
    let exponents: Vec<u32> = (1..=n as u32).map(|j| mono.exponent(JetVar::new(0, j))).collect();
    let j0 = exponents.iter().position(|&e| e > 0).expect("degree d >= 2") as u32 + 1;
    let e = exponents[j0 as usize - 1];
    let s = (m as u32 + 1).div_ceil(e);
    let level = (s * e) as usize;
    debug_assert!(level <= m_prime, "s e <= m + e <= d (m + 1) <= m'");
    let element = expand_in_t(f, level)?.pop().expect("level + 1 coefficients");
    let monomial = Monomial::from_pairs(
        exponents
            .iter()
            .enumerate()
            .map(|(j, &ej)| if j as u32 + 1 == j0 { (JetVar::new(s, j0), ej) } else { (JetVar::new(0, j as u32 + 1), ej) }),
    );
    let certificate = CharPCertificate { exponents, coordinate: j0, e, s, monomial, coefficient };
    if !passes_syntactic_checks(&element, d, m) || element.coefficient(&certificate.monomial) != certificate.coefficient {
        return Err(CriteriaError::NoWitness(format!("F_{level} of generator {k} fails the witness checks")));
    }
    Ok(FlatnessWitness {
        m,
        m_prime,
        presentation,
        d,
        source_generator: k,
        kind: WitnessKind::Element { element, level_used: level, certificate: Some(certificate) },
    })
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

pub const CHECK_IN_JET_IDEAL: &str = "element lies in I'";
pub const CHECK_ORDER: &str = "ord F = ord I";
pub const CHECK_MAXIMAL: &str = "F in M R_m'";
pub const CHECK_INITIAL_WEIGHT: &str = "initial form has weight > m";
pub const CHECK_INITIAL_LEVEL: &str = "initial form involves level > m";
pub const CHECK_CERTIFICATE: &str = "certificate coefficient transported";
pub const CHECK_LOCAL: &str = "F not in M I' + I R_m' (local linear algebra)";
pub const CHECK_FIBER_FREE: &str = "fiber over 0_m is affine space";
pub const CHECK_FIBER_DIM: &str = "fiber dimension N(m'-m)";
pub const CHECK_FIBER_JUMP: &str = "fiber dimension exceeds (m'-m) dim(X,0)";

/// Default degree bound for the local-membership oracle.
pub fn default_bound(d: u32) -> u32 {
    d + 2
}

/// Re-derives every certificate of `w` from scratch. `bound` defaults to
/// `d + 2`.
pub fn verify_witness(w: &FlatnessWitness, bound: Option<u32>) -> VerificationReport {
    let mut report = VerificationReport::default();
    let p = &w.presentation;
    let field: FieldSpec = p.field();
    let (m, m_prime) = (w.m, w.m_prime);
    let d = match ord_ideal(p) {
        Ok((d, _)) => d,
        Err(e) => {
            report.push(CHECK_ORDER, false, e.to_string());
            return report;
        }
    };
    match &w.kind {
        WitnessKind::Element { element, certificate, .. } => {
            let upper = jetify(p, m_prime);
            let literal = upper.jet_generators().iter().find(|g| g.poly == *element && !element.is_zero());
            let (in_ideal, how) = match literal {
                Some(g) => (true, format!("F = F_({}, {})", g.generator, g.level)),
                None => match ideal_membership(element, &upper.nonzero_generators()) {
                    Ok(true) => (true, "reduces to 0 modulo a Groebner basis of I'".into()),
                    Ok(false) => (false, "nonzero normal form modulo I'".into()),
                    Err(e) => (false, e.to_string()),
                },
            };
            report.push(CHECK_IN_JET_IDEAL, in_ideal, how);

            let ord = element.ord();
            report.push(CHECK_ORDER, ord.finite() == Some(d) && d == w.d, format!("ord F = {ord}, ord I = {d}, recorded d = {}", w.d));

            let offending = element.terms().find(|(mono, _)| !mono.variables().any(|v| v.level as usize <= m));
            report.push(
                CHECK_MAXIMAL,
                offending.is_none(),
                match offending {
                    None => format!("every monomial has a factor of level <= {m}"),
                    Some((mono, _)) => format!("monomial {mono} has no factor of level <= {m}"),
                },
            );

            let initial = element.initial_form().unwrap_or_else(|_| Poly::zero(field));
            let heavy = initial.terms().rev().find(|(mono, _)| mono.weight() as usize > m);
            report.push(
                CHECK_INITIAL_WEIGHT,
                heavy.is_some(),
                match heavy {
                    Some((mono, c)) => format!("{mono} (coefficient {}) has weight {}", c.to_string_in(&field), mono.weight()),
                    None => format!("initial form {initial} has only weight <= {m}"),
                },
            );

            if field.characteristic() == 0 {
                let ok = initial_has_high_level(element, m);
                report.push(CHECK_INITIAL_LEVEL, ok, format!("initial form {initial}"));
            }

            if let Some(cert) = certificate {
                let got = element.coefficient(&cert.monomial);
                report.push(
                    CHECK_CERTIFICATE,
                    got == cert.coefficient && !got.is_zero(),
                    format!(
                        "coefficient of {} is {}, source coefficient {}",
                        cert.monomial,
                        got.to_string_in(&field),
                        cert.coefficient.to_string_in(&field)
                    ),
                );
            }

            let bound = bound.unwrap_or_else(|| default_bound(d));
            let verdict = LocalIdealSpec::for_truncation(p, m, m_prime)
                .map_err(|e| e.to_string())
                .and_then(|spec| local_membership_mod_degree(element, &spec, bound).map_err(|e| e.to_string()));
            match verdict {
                Ok(member) => report.push(
                    CHECK_LOCAL,
                    !member,
                    if member {
                        format!("not excluded modulo degree {bound}")
                    } else {
                        format!("excluded modulo degree {bound}")
                    },
                ),
                Err(e) => report.push(CHECK_LOCAL, false, e),
            }
        }
        WitnessKind::FiberJump { fiber_dim, local_dim } => {
            match fiber_over_trivial_jet(p, m, m_prime) {
                Ok(fiber) => {
                    let free = fiber.is_free();
                    report.push(
                        CHECK_FIBER_FREE,
                        free,
                        if free {
                            format!("all F_(g,i)(0, x_{}..x_{m_prime}) vanish", m + 1)
                        } else {
                            format!("{} nonzero fiber generators", fiber.nonzero_generators().len())
                        },
                    );
                    let expected = fiber.ambient_dimension();
                    report.push(CHECK_FIBER_DIM, *fiber_dim == expected && free, format!("recorded {fiber_dim}, N(m'-m) = {expected}"));
                }
                Err(e) => report.push(CHECK_FIBER_FREE, false, e.to_string()),
            }
            match krull_dimension(p.generators(), &p.variables()) {
                Ok(dim) => {
                    let rhs = (m_prime - m) * dim;
                    report.push(
                        CHECK_FIBER_JUMP,
                        dim == *local_dim && *fiber_dim > rhs,
                        format!("{fiber_dim} > {} * {dim} = {rhs}", m_prime - m),
                    );
                }
                Err(e) => report.push(CHECK_FIBER_JUMP, false, e.to_string()),
            }
        }
    }
    report
}
