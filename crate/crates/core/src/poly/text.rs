use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::Poly;
use crate::error::Result;
use crate::exact::{parse_rational, Rational};

/// Ascending coefficients separated by `", "`; the zero polynomial is `"0"`.
pub fn format_poly(p: &Poly<Rational>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn parse_poly(s: &str) -> Result<Poly<Rational>> {
    if s.trim().is_empty() {
        return Ok(Poly::zero());
    }
    let cs = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(cs))
}
