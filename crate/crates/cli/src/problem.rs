//! The line-oriented problem file.
//!
//! ```text
//! # the cusp
//! field Q
//! vars x y
//! gen x^2 - y^3
//! reduced
//! translate 0 0
//! ```

use std::collections::HashSet;
use std::fmt;

use jetforge_core::{parse_poly, AmbientIdeal, FieldSpec, ParseContext, Poly, Scalar};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ProblemError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl ProblemError {
    fn at(line: usize, col: usize, message: impl Into<String>) -> Self {
        ProblemError { line, col, message: message.into() }
    }
}

/// A generator as written, with where it starts in the file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSource {
    pub text: String,
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub generators: Vec<GeneratorSource>,
    pub reduced: bool,
    pub translate: Option<Vec<Scalar>>,
}

/// Whitespace-separated tokens of `line` with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, (byte, c)) in line.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((k + 1, byte)),
            (true, Some((col, b))) => {
                out.push((col, &line[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((col, b)) = start {
        out.push((col, &line[b..]));
    }
    out
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_scalar(field: FieldSpec, text: &str) -> Option<Scalar> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    field.from_ratio(&num, &den).ok()
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile, ProblemError> {
        let mut field: Option<(FieldSpec, usize)> = None;
        let mut vars: Option<Vec<String>> = None;
        let mut generators = Vec::new();
        let mut reduced = false;
        let mut translate: Option<(Vec<(usize, String)>, usize)> = None;

        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("");
            let toks = tokens(line);
            let Some(&(col, keyword)) = toks.first() else { continue };
            let args = &toks[1..];
            match keyword {
                "field" => {
                    if field.is_some() {
                        return Err(ProblemError::at(line_no, col, "duplicate `field` declaration"));
                    }
                    let spec = match args {
                        [(_, "Q")] => FieldSpec::Rationals,
                        [(_, "Fp"), (pcol, p)] => {
                            let value: u64 =
                                p.parse().map_err(|_| ProblemError::at(line_no, *pcol, format!("`{p}` is not an integer")))?;
                            FieldSpec::prime(value).map_err(|e| ProblemError::at(line_no, *pcol, e.to_string()))?
                        }
                        _ => return Err(ProblemError::at(line_no, col, "expected `field Q` or `field Fp <prime>`")),
                    };
                    field = Some((spec, line_no));
                }
                "vars" => {
                    if vars.is_some() {
                        return Err(ProblemError::at(line_no, col, "duplicate `vars` declaration"));
                    }
                    if args.is_empty() {
                        return Err(ProblemError::at(line_no, col, "`vars` needs at least one name"));
                    }
                    let mut seen = HashSet::new();
                    for (vcol, name) in args {
                        if !is_identifier(name) {
                            return Err(ProblemError::at(line_no, *vcol, format!("`{name}` is not a variable name")));
                        }
                        if !seen.insert(*name) {
                            return Err(ProblemError::at(line_no, *vcol, format!("variable `{name}` declared twice")));
                        }
                    }
                    vars = Some(args.iter().map(|(_, n)| n.to_string()).collect());
                }
                "gen" => {
                    let Some(&(gcol, _)) = args.first() else {
                        return Err(ProblemError::at(line_no, col, "`gen` needs an expression"));
                    };
                    let start = line.char_indices().nth(gcol - 1).map(|(b, _)| b).unwrap_or(line.len());
                    generators.push(GeneratorSource { text: line[start..].trim_end().to_string(), line: line_no, col: gcol });
                }
                "reduced" => {
                    if let Some((acol, _)) = args.first() {
                        return Err(ProblemError::at(line_no, *acol, "`reduced` takes no arguments"));
                    }
                    reduced = true;
                }
                "translate" => {
                    if translate.is_some() {
                        return Err(ProblemError::at(line_no, col, "duplicate `translate` line"));
                    }
                    translate = Some((args.iter().map(|(c, s)| (*c, s.to_string())).collect(), line_no));
                }
                other => return Err(ProblemError::at(line_no, col, format!("unknown keyword `{other}`"))),
            }
        }

        let (field, _) = field.ok_or_else(|| ProblemError::at(1, 1, "missing `field` declaration"))?;
        let vars = vars.ok_or_else(|| ProblemError::at(1, 1, "missing `vars` declaration"))?;
        let translate = match translate {
            None => None,
            Some((values, line_no)) => {
                if values.len() != vars.len() {
                    return Err(ProblemError::at(
                        line_no,
                        1,
                        format!("`translate` needs {} values, got {}", vars.len(), values.len()),
                    ));
                }
                let mut out = Vec::with_capacity(values.len());
                for (col, v) in values {
                    out.push(
                        parse_scalar(field, &v)
                            .ok_or_else(|| ProblemError::at(line_no, col, format!("`{v}` is not an element of {field}")))?,
                    );
                }
                Some(out)
            }
        };
        Ok(ProblemFile { field, vars, generators, reduced, translate })
    }

    pub fn context(&self) -> ParseContext {
        ParseContext::new(self.field, self.vars.clone())
    }

    /// The generators as written, before any translation.
    pub fn polynomials(&self) -> Result<Vec<Poly>, ProblemError> {
        let ctx = self.context();
        self.generators
            .iter()
            .map(|g| {
                parse_poly(&g.text, &ctx).map_err(|e| {
                    let offset = g.text[..e.pos.min(g.text.len())].chars().count();
                    ProblemError::at(g.line, g.col + offset, e.kind.to_string())
                })
            })
            .collect()
    }

    /// The ideal with the `translate` point moved to the origin. Zero
    /// generators are dropped.
    pub fn ideal(&self) -> Result<AmbientIdeal, ProblemError> {
        let polys = self.polynomials()?;
        let mut kept = Vec::new();
        for (g, p) in self.generators.iter().zip(polys) {
            if p.is_zero() {
                continue;
            }
            if p.variables().iter().any(|v| v.level != 0) {
                return Err(ProblemError::at(g.line, g.col, "generators may only use level-0 variables"));
            }
            kept.push(p);
        }
        let n = self.vars.len() as u32;
        let ideal = AmbientIdeal::new(self.field, n, kept).map_err(|e| ProblemError::at(1, 1, e.to_string()))?;
        match &self.translate {
            None => Ok(ideal),
            Some(a) => ideal.translate(a).map_err(|e| ProblemError::at(1, 1, e.to_string())),
        }
    }

    pub fn source_name(&self, index: usize) -> String {
        self.generators.get(index).map(|g| g.text.clone()).unwrap_or_default()
    }
}
