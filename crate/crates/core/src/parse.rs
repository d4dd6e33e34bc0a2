//! Parser for the reaction text format.
//!
//! One reaction per line:
//!
//! ```text
//! line    := complex "->" complex | complex "<->" complex
//! complex := "0" | term ("+" term)*
//! term    := [integer] identifier
//! ```
//!
//! `#` starts a comment, blank lines are skipped, `2A` and `2 A` are both
//! accepted, and a `<->` line expands to two reactions (forward first) with
//! consecutive rate indices. Species order is first-appearance order in the
//! source text.

use std::fmt;

use thiserror::Error;

use crate::network::{Complex, Network};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    ExpectedComplex,
    ExpectedSpecies,
    ExpectedArrow,
    TrailingInput(char),
    ZeroCoefficient,
    MisplacedZeroComplex,
    CoefficientTooLarge,
    EmptyInput,
    ReactantEqualsProduct,
    DuplicateReaction,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character '{c}'"),
            ParseErrorKind::ExpectedComplex => write!(f, "expected a complex ('0' or a species term)"),
            ParseErrorKind::ExpectedSpecies => write!(f, "expected a species name after the coefficient"),
            ParseErrorKind::ExpectedArrow => write!(f, "expected '->' or '<->'"),
            ParseErrorKind::TrailingInput(c) => write!(f, "unexpected trailing input starting at '{c}'"),
            ParseErrorKind::ZeroCoefficient => write!(f, "species coefficient must be positive"),
            ParseErrorKind::MisplacedZeroComplex => write!(f, "'0' is only valid as a complete complex"),
            ParseErrorKind::CoefficientTooLarge => write!(f, "coefficient too large"),
            ParseErrorKind::EmptyInput => write!(f, "no reactions found"),
            ParseErrorKind::ReactantEqualsProduct => write!(f, "reactant equals product"),
            ParseErrorKind::DuplicateReaction => write!(f, "duplicate reaction"),
        }
    }
}

/// Parse failure with 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(line: usize, col: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, col, kind }
    }
}

/// Species coefficients by interned species index; empty = the zero complex.
type RawComplex = Vec<(usize, u32)>;

struct RawReaction {
    reactant: RawComplex,
    product: RawComplex,
    reversible: bool,
    line: usize,
}

struct LineScanner {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl LineScanner {
    fn new(text: &str, line: usize) -> Self {
        LineScanner {
            chars: text.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError::new(self.line, self.col(), kind)
    }

    fn at_ident_start(&self) -> bool {
        matches!(self.peek(), Some(c) if c.is_alphabetic() || c == '_')
    }

    fn scan_integer(&mut self) -> Result<u32, ParseError> {
        let start_col = self.col();
        let mut value: u64 = 0;
        while let Some(c) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            value = value * 10 + u64::from(d);
            if value > u64::from(u32::MAX) {
                return Err(ParseError::new(
                    self.line,
                    start_col,
                    ParseErrorKind::CoefficientTooLarge,
                ));
            }
            self.pos += 1;
        }
        Ok(value as u32)
    }

    fn scan_identifier(&mut self) -> String {
        let mut name = String::new();
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || c == '_' {
                name.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        name
    }
}

struct Parser {
    species: Vec<String>,
    reactions: Vec<RawReaction>,
}

impl Parser {
    fn intern(&mut self, name: String) -> usize {
        match self.species.iter().position(|s| s == &name) {
            Some(i) => i,
            None => {
                self.species.push(name);
                self.species.len() - 1
            }
        }
    }

    /// One term: `[integer] identifier`. Returns `None` for a lone `0`,
    /// which is only legal as the whole complex.
    fn parse_term(
        &mut self,
        sc: &mut LineScanner,
        first: bool,
    ) -> Result<Option<(usize, u32)>, ParseError> {
        sc.skip_ws();
        match sc.peek() {
            Some(c) if c.is_ascii_digit() => {
                let int_col = sc.col();
                let coeff = sc.scan_integer()?;
                sc.skip_ws();
                if sc.at_ident_start() {
                    if coeff == 0 {
                        return Err(ParseError::new(
                            sc.line,
                            int_col,
                            ParseErrorKind::ZeroCoefficient,
                        ));
                    }
                    let name = sc.scan_identifier();
                    Ok(Some((self.intern(name), coeff)))
                } else if coeff == 0 {
                    if first {
                        Ok(None) // the zero complex
                    } else {
                        Err(ParseError::new(
                            sc.line,
                            int_col,
                            ParseErrorKind::MisplacedZeroComplex,
                        ))
                    }
                } else {
                    Err(sc.error(ParseErrorKind::ExpectedSpecies))
                }
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let name = sc.scan_identifier();
                Ok(Some((self.intern(name), 1)))
            }
            Some(c) => Err(sc.error(ParseErrorKind::UnexpectedChar(c))),
            None => Err(sc.error(ParseErrorKind::ExpectedComplex)),
        }
    }

    fn parse_complex(&mut self, sc: &mut LineScanner) -> Result<RawComplex, ParseError> {
        let mut terms = RawComplex::new();
        match self.parse_term(sc, true)? {
            None => return Ok(terms), // zero complex
            Some(t) => terms.push(t),
        }
        loop {
            sc.skip_ws();
            if sc.peek() == Some('+') {
                sc.bump();
                match self.parse_term(sc, false)? {
                    Some(t) => terms.push(t),
                    None => unreachable!("parse_term(first=false) never yields a zero complex"),
                }
            } else {
                return Ok(terms);
            }
        }
    }

    fn parse_line(&mut self, sc: &mut LineScanner) -> Result<(), ParseError> {
        let reactant = self.parse_complex(sc)?;
        sc.skip_ws();
        let arrow_col = sc.col();
        let reversible = match sc.peek() {
            Some('-') => {
                sc.bump();
                if sc.bump() != Some('>') {
                    return Err(ParseError::new(sc.line, arrow_col, ParseErrorKind::ExpectedArrow));
                }
                false
            }
            Some('<') => {
                sc.bump();
                if sc.bump() != Some('-') || sc.bump() != Some('>') {
                    return Err(ParseError::new(sc.line, arrow_col, ParseErrorKind::ExpectedArrow));
                }
                true
            }
            _ => return Err(ParseError::new(sc.line, arrow_col, ParseErrorKind::ExpectedArrow)),
        };
        let product = self.parse_complex(sc)?;
        sc.skip_ws();
        if let Some(c) = sc.peek() {
            return Err(sc.error(ParseErrorKind::TrailingInput(c)));
        }
        self.reactions.push(RawReaction {
            reactant,
            product,
            reversible,
            line: sc.line,
        });
        Ok(())
    }

    fn materialize(&self, raw: &RawComplex) -> Complex {
        let mut exps = vec![0u32; self.species.len()];
        for &(idx, coeff) in raw {
            exps[idx] += coeff; // repeated species accumulate: A + A = 2A
        }
        Complex::new(exps)
    }
}

/// Parse a network from the reaction text format.
pub fn parse_network(text: &str) -> Result<Network, ParseError> {
    let mut parser = Parser {
        species: Vec::new(),
        reactions: Vec::new(),
    };

    for (i, raw_line) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        if content.trim().is_empty() {
            continue;
        }
        let mut sc = LineScanner::new(content, line_no);
        sc.skip_ws();
        parser.parse_line(&mut sc)?;
    }

    if parser.reactions.is_empty() {
        return Err(ParseError::new(1, 1, ParseErrorKind::EmptyInput));
    }

    // Expand reversible arrows (forward first) and validate.
    let mut pairs: Vec<(Complex, Complex, usize)> = Vec::new();
    for raw in &parser.reactions {
        let reactant = parser.materialize(&raw.reactant);
        let product = parser.materialize(&raw.product);
        if reactant == product {
            return Err(ParseError::new(
                raw.line,
                1,
                ParseErrorKind::ReactantEqualsProduct,
            ));
        }
        pairs.push((reactant.clone(), product.clone(), raw.line));
        if raw.reversible {
            pairs.push((product, reactant, raw.line));
        }
    }
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if pairs[i].0 == pairs[j].0 && pairs[i].1 == pairs[j].1 {
                return Err(ParseError::new(
                    pairs[j].2,
                    1,
                    ParseErrorKind::DuplicateReaction,
                ));
            }
        }
    }

    let species = parser.species.clone();
    let pairs = pairs.into_iter().map(|(r, p, _)| (r, p)).collect();
    // The checks above mirror the constructor's; a failure here is a parser bug.
    Ok(Network::new(species, pairs).expect("parser pre-validates network structure"))
}
