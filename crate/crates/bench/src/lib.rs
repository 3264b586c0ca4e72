//! Inputs shared by the benchmarks.

use jetforge_core::{parse_poly, AmbientIdeal, FieldSpec, ParseContext, Poly};

/// `(x, y, z)` names over `field`.
pub fn xyz(field: FieldSpec, n: usize) -> ParseContext {
    ParseContext::new(field, ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect())
}

pub fn poly(field: FieldSpec, n: usize, text: &str) -> Poly {
    parse_poly(text, &xyz(field, n)).expect("benchmark input parses")
}

pub fn ideal(field: FieldSpec, n: usize, gens: &[&str]) -> AmbientIdeal {
    AmbientIdeal::new(field, n as u32, gens.iter().map(|g| poly(field, n, g)).collect()).expect("benchmark ideal")
}

pub fn cusp() -> AmbientIdeal {
    ideal(FieldSpec::Rationals, 2, &["x^2 - y^3"])
}

pub fn umbrella() -> AmbientIdeal {
    ideal(FieldSpec::Rationals, 3, &["x^2 - y^2*z"])
}
