//! Recursive-descent parser for the parameter grammar:
//!
//! ```text
//! parameter := block ('+' block)*
//! block     := coef '*sp' INT
//! coef      := 'triv' | 'eps' | 'unit(t)' | 'unit(t^-1)'
//!            | 'abs(s=' RATIONAL ')'
//!            | 'cusp(d=' INT ',type=' ('orth'|'symp') ',ev=[' monomial (',' monomial)* '])'
//! monomial  := '-'? 'p^' INT '/2*t^' INT
//! ```
//!
//! Whitespace is ignored everywhere; errors carry the byte position in the
//! original input.

use std::fmt;

use so2n::algebra::{rat, Monomial};
use so2n::params::{ArthurBlock, ArthurParameter, BlockCoefficient, SelfDualType};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn done(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            message: message.into(),
        }
    }

    /// Matches the literal with whitespace allowed around every character.
    fn try_literal(&mut self, lit: &str) -> bool {
        let saved = self.pos;
        for &c in lit.as_bytes() {
            self.skip_ws();
            if self.pos < self.src.len() && self.src[self.pos] == c {
                self.pos += 1;
            } else {
                self.pos = saved;
                return false;
            }
        }
        true
    }

    fn expect(&mut self, lit: &str) -> Result<(), ParseError> {
        if self.try_literal(lit) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", lit)))
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut p = self.pos;
        if p < self.src.len() && (self.src[p] == b'-' || self.src[p] == b'+') {
            p += 1;
        }
        let digits_start = p;
        while p < self.src.len() && self.src[p].is_ascii_digit() {
            p += 1;
        }
        if p == digits_start {
            return Err(self.error("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..p]).unwrap();
        self.pos = p;
        text.parse::<i64>()
            .map_err(|_| self.error("integer out of range"))
    }

    fn rational(&mut self) -> Result<so2n::algebra::Rational, ParseError> {
        let numer = self.integer()?;
        if self.try_literal("/") {
            let denom = self.integer()?;
            if denom <= 0 {
                return Err(self.error("denominator must be positive"));
            }
            Ok(rat(numer, denom))
        } else {
            Ok(rat(numer, 1))
        }
    }

    fn monomial(&mut self) -> Result<Monomial, ParseError> {
        self.skip_ws();
        let sign: i8 = if self.try_literal("-") { -1 } else { 1 };
        self.expect("p^")?;
        let p_half = self.integer()?;
        self.expect("/2")?;
        self.expect("*t^")?;
        let t_exp = self.integer()?;
        Ok(Monomial::new(p_half, t_exp, sign))
    }

    fn coefficient(&mut self) -> Result<BlockCoefficient, ParseError> {
        self.skip_ws();
        if self.try_literal("triv") {
            return Ok(BlockCoefficient::TrivialChar);
        }
        if self.try_literal("eps") {
            return Ok(BlockCoefficient::QuadraticChar);
        }
        if self.try_literal("unit(t)") {
            return Ok(BlockCoefficient::unit_t());
        }
        if self.try_literal("unit(t^") {
            let t_exp = self.integer()?;
            if t_exp == 0 {
                return Err(self.error("unit character exponent must be nonzero"));
            }
            self.expect(")")?;
            return Ok(BlockCoefficient::UnitChar { t_exp });
        }
        if self.try_literal("abs(s=") {
            let s = self.rational()?;
            self.expect(")")?;
            return Ok(BlockCoefficient::AbsValPower { s });
        }
        if self.try_literal("cusp(d=") {
            let d = self.integer()?;
            if d < 1 {
                return Err(self.error("cuspidal dimension must be positive"));
            }
            self.expect(",type=")?;
            let dual = if self.try_literal("orth") {
                SelfDualType::Orthogonal
            } else if self.try_literal("symp") {
                SelfDualType::Symplectic
            } else {
                return Err(self.error("expected 'orth' or 'symp'"));
            };
            self.expect(",ev=[")?;
            let mut eigenvalues = vec![self.monomial()?];
            while self.try_literal(",") {
                eigenvalues.push(self.monomial()?);
            }
            self.expect("])")?;
            return Ok(BlockCoefficient::CuspidalGL {
                dim: d as usize,
                dual,
                eigenvalues,
            });
        }
        Err(self
            .error("expected a coefficient: triv, eps, unit(t), unit(t^-1), abs(s=..), cusp(..)"))
    }

    fn block(&mut self) -> Result<ArthurBlock, ParseError> {
        let coefficient = self.coefficient()?;
        self.expect("*sp")?;
        let spin = self.integer()?;
        if spin < 1 {
            return Err(self.error("spin must be at least 1"));
        }
        Ok(ArthurBlock::new(coefficient, spin as usize))
    }
}

/// Parses a parameter description against the target dimension `2n`.
/// Semantic validation is left to `so2n::params::validate`.
pub fn parse_parameter(text: &str, target_dim: usize) -> Result<ArthurParameter, ParseError> {
    let mut cur = Cursor::new(text);
    let mut blocks = vec![cur.block()?];
    loop {
        if cur.done() {
            break;
        }
        cur.expect("+")?;
        blocks.push(cur.block()?);
    }
    Ok(ArthurParameter::new(blocks, target_dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use so2n::params::section2_local_parameter;

    #[test]
    fn parses_residual_parameter() {
        let psi = parse_parameter("unit(t)*sp4 + unit(t^-1)*sp4", 8).unwrap();
        assert_eq!(psi, section2_local_parameter(4));
    }

    #[test]
    fn whitespace_insensitive() {
        let a = parse_parameter("unit(t)*sp4+unit(t^-1)*sp4", 8).unwrap();
        let b = parse_parameter("  unit(t) * sp4\n + unit(t^-1)*sp4 ", 8).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn round_trips_through_render() {
        let samples = [
            "unit(t)*sp4 + unit(t^-1)*sp4",
            "triv*sp5 + triv*sp1 + unit(t)*sp1 + unit(t^-1)*sp1",
            "eps*sp9 + triv*sp1 + cusp(d=2,type=orth,ev=[p^0/2*t^1,p^0/2*t^-1])*sp3",
            "abs(s=-1/4)*sp4 + abs(s=1/4)*sp4",
            "cusp(d=2,type=symp,ev=[p^1/2*t^1,-p^-1/2*t^-1])*sp2",
        ];
        for text in samples {
            let psi = parse_parameter(text, 16).unwrap();
            let rendered = psi.to_string();
            let reparsed = parse_parameter(&rendered, 16).unwrap();
            assert_eq!(psi, reparsed, "round trip through '{rendered}'");
        }
    }

    #[test]
    fn reports_error_positions() {
        let err = parse_parameter("unit(t)*sp4 + bogus*sp4", 8).unwrap_err();
        assert_eq!(err.pos, 14);
        let err = parse_parameter("unit(t)*sp", 8).unwrap_err();
        assert_eq!(err.pos, 10);
        let err = parse_parameter("triv*sp4 extra", 8).unwrap_err();
        assert!(err.message.contains("'+'"));
    }

    #[test]
    fn dimension_mismatch_is_semantic_not_syntactic() {
        let psi = parse_parameter("unit(t)*sp3", 8).unwrap();
        let report = so2n::params::validate(&psi);
        assert!(!report.is_valid());
    }
}
