//! Plain-text polynomial format.
//!
//! One polynomial per line over the variables `t0, t1, ...`. Terms are
//! joined with `+` or `-`; factors within a term may be separated by `*`
//! or simply juxtaposed. Coefficients are integers or fractions (`3/2`),
//! powers use `^`. Blank lines and lines starting with `#` are skipped in
//! system files.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Rational};
use crate::error::{Error, Result};

type RawTerm = (Rational, Vec<(usize, u32)>);

struct Cursor {
    line: usize,
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str, line: usize) -> Self {
        Self {
            line,
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        if !self.eat('^') {
            return Ok(1);
        }
        self.skip_ws();
        let digits = self.digits().ok_or_else(|| self.error("expected exponent after '^'"))?;
        digits
            .parse::<u32>()
            .map_err(|_| self.error("exponent too large"))
    }

    fn number(&mut self) -> Result<Rational> {
        let num: BigInt = self
            .digits()
            .ok_or_else(|| self.error("expected a number"))?
            .parse()
            .expect("digit string parses");
        self.skip_ws();
        if self.eat('/') {
            self.skip_ws();
            let den: BigInt = self
                .digits()
                .ok_or_else(|| self.error("expected denominator after '/'"))?
                .parse()
                .expect("digit string parses");
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn factor(&mut self, term: &mut RawTerm) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let value = self.number()?;
                let e = self.exponent()?;
                term.0 *= num_traits::pow(value, e as usize);
                Ok(())
            }
            Some('t') => {
                self.pos += 1;
                let idx = self
                    .digits()
                    .ok_or_else(|| self.error("expected variable index after 't'"))?
                    .parse::<usize>()
                    .map_err(|_| self.error("variable index too large"))?;
                let e = self.exponent()?;
                term.1.push((idx, e));
                Ok(())
            }
            Some(c) => Err(self.error(format!("unexpected character '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn term(&mut self, negative: bool) -> Result<RawTerm> {
        let sign = if negative { -Rational::one() } else { Rational::one() };
        let mut term: RawTerm = (sign, Vec::new());
        self.skip_ws();
        self.factor(&mut term)?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    self.skip_ws();
                    self.factor(&mut term)?;
                }
                Some(c) if c == 't' || c.is_ascii_digit() => self.factor(&mut term)?,
                _ => return Ok(term),
            }
        }
    }

    fn polynomial(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut negative = false;
        if self.eat('-') {
            negative = true;
        } else {
            self.eat('+');
        }
        terms.push(self.term(negative)?);
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(terms),
                Some('+') => {
                    self.pos += 1;
                    terms.push(self.term(false)?);
                }
                Some('-') => {
                    self.pos += 1;
                    terms.push(self.term(true)?);
                }
                Some(c) => return Err(self.error(format!("unexpected character '{c}'"))),
            }
        }
    }
}

fn max_var(terms: &[RawTerm]) -> Option<usize> {
    terms.iter().flat_map(|(_, f)| f.iter().map(|(v, _)| *v)).max()
}

fn build(terms: &[RawTerm], nvars: usize) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for (c, factors) in terms {
        let mut exps = vec![0u32; nvars];
        for &(v, e) in factors {
            exps[v] += e;
        }
        p.add_term(Monomial::new(exps), c.clone());
    }
    p
}

fn parse_line(line: &str, line_no: usize) -> Result<Vec<RawTerm>> {
    Cursor::new(line, line_no).polynomial()
}

/// Parses one polynomial. The variable count is `nvars` if given (it must
/// cover every variable used), otherwise one more than the largest index
/// seen (at least 1).
pub fn parse_polynomial(text: &str, nvars: Option<usize>) -> Result<Polynomial> {
    let terms = parse_line(text, 1)?;
    let needed = max_var(&terms).map_or(1, |v| v + 1);
    let nvars = match nvars {
        Some(n) if n < needed => {
            return Err(Error::VariableMismatch {
                left: n,
                right: needed,
            })
        }
        Some(n) => n,
        None => needed,
    };
    Ok(build(&terms, nvars))
}

/// Parses a system file. All polynomials share the variable count `nvars`
/// if given, otherwise the smallest count covering every line.
pub fn parse_system(text: &str, nvars: Option<usize>) -> Result<Vec<Polynomial>> {
    let mut raw = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        raw.push(parse_line(line, idx + 1)?);
    }
    let needed = raw.iter().filter_map(|t| max_var(t)).max().map_or(1, |v| v + 1);
    let nvars = match nvars {
        Some(n) if n < needed => {
            return Err(Error::VariableMismatch {
                left: n,
                right: needed,
            })
        }
        Some(n) => n,
        None => needed,
    };
    Ok(raw.iter().map(|t| build(t, nvars)).collect())
}

/// One polynomial per line, newline terminated.
pub fn format_system(polys: &[Polynomial], ord: &super::MonomialOrder) -> String {
    let mut out = String::new();
    for p in polys {
        out.push_str(&p.to_string_with(ord));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::MonomialOrder;
    use proptest::prelude::*;

    #[test]
    fn parses_the_shared_format() {
        let p = parse_polynomial("t0^2 - t0", None).unwrap();
        assert_eq!(p.nvars(), 1);
        assert_eq!(p.to_string(), "t0^2 - t0");
        let q = parse_polynomial("5*t4^2 - 5*t4", None).unwrap();
        assert_eq!(q.nvars(), 5);
        assert_eq!(q.to_string(), "5*t4^2 - 5*t4");
        let r = parse_polynomial("3/2*t0 + 2 t1 t2 - 1", Some(4)).unwrap();
        assert_eq!(r.to_string(), "2*t1*t2 + 3/2*t0 - 1");
        assert_eq!(parse_polynomial("-t0 + t0", None).unwrap().to_string(), "0");
        assert_eq!(parse_polynomial("t1*t1", None).unwrap().to_string(), "t1^2");
        assert_eq!(parse_polynomial("2^3", None).unwrap().to_string(), "8");
    }

    #[test]
    fn reports_positions() {
        match parse_polynomial("t0 + $", None) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 6)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_system("t0\n\n# note\nt1 +\n", None) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial("1/0", None).is_err());
        assert!(parse_polynomial("t", None).is_err());
        assert!(parse_polynomial("t0^", None).is_err());
        assert!(matches!(
            parse_polynomial("t3", Some(2)),
            Err(Error::VariableMismatch { .. })
        ));
    }

    #[test]
    fn system_files_share_variables() {
        let sys = parse_system("t0 - 1\n  \nt0^2 - t0\n# c\nt2\n", None).unwrap();
        assert_eq!(sys.len(), 3);
        assert!(sys.iter().all(|p| p.nvars() == 3));
        assert_eq!(
            format_system(&sys, &MonomialOrder::grevlex()),
            "t0 - 1\nt0^2 - t0\nt2\n"
        );
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(
            (prop::collection::vec(0u32..3, 3), -9i64..10, 1i64..4),
            0..6,
        )
        .prop_map(|terms| {
            Polynomial::from_terms(
                3,
                terms
                    .into_iter()
                    .map(|(e, n, d)| (Monomial::new(e), Rational::new(n.into(), d.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(p in small_poly(), k in 0usize..3) {
            let ord = MonomialOrder::new(crate::groebner::OrderKind::ALL[k]);
            let text = p.to_string_with(&ord);
            prop_assert_eq!(parse_polynomial(&text, Some(3)).unwrap(), p);
        }
    }
}
