//! The ideal-description language.
//!
//! ```text
//! document := ring_decl (gen_list | dseq_decl)*
//! ring_decl := "ring" INT NEWLINE
//! gen_list  := monomial ("," monomial)*
//! dseq_decl := "dseq" NAME "=" INT (("|" | ",") INT)* NEWLINE
//! monomial  := factor (("*" | WS) factor)* | "1"
//! factor    := "x" INT ("^" INT)?
//! ```
//!
//! Whitespace-separated factors multiply; an omitted exponent means 1;
//! `#` starts a comment that runs to the end of the line. A newline ends a
//! generator, so separate generators must be separated by commas — two
//! monomials on consecutive lines without a comma are rejected rather than
//! silently multiplied. Named d-sequence declarations are an optional
//! convenience so that files can carry the sequences their ideals are meant
//! to be checked against; `--dseq` flags accept either a literal sequence
//! or one of these names.

use std::collections::BTreeMap;
use std::fmt;

use borel_kernel::{DSequence, Monomial, MonomialIdeal};

/// A parse failure with 1-based line/column position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A parsed document: the ring size, the (canonicalized) ideal, and any
/// named d-sequences declared alongside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDocument {
    pub n: usize,
    pub ideal: MonomialIdeal,
    pub dseqs: BTreeMap<String, DSequence>,
}

/// Canonical text form; `parse_document` of the output reproduces the
/// document exactly.
#[cfg_attr(not(test), allow(dead_code))] // the round-trip tests are its consumer
pub fn print_document(doc: &IdealDocument) -> String {
    let mut out = format!("ring {}\n", doc.n);
    let gens: Vec<String> = doc.ideal.generators().iter().map(|g| g.to_string()).collect();
    out.push_str(&gens.join(", "));
    out.push('\n');
    for (name, d) in &doc.dseqs {
        out.push_str(&format!("dseq {name} = {d}\n"));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Word(String),
    Int(u32),
    Caret,
    Star,
    Comma,
    Eq,
    Pipe,
    Newline,
}

struct Lexer {
    tokens: Vec<(usize, usize, Token)>,
    /// Position just past the last token, for end-of-input diagnostics.
    end: (usize, usize),
}

fn lex(text: &str) -> Result<Lexer, ParseError> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let start = (line, col);
        match c {
            '\n' => {
                tokens.push((start.0, start.1, Token::Newline));
                chars.next();
                line += 1;
                col = 1;
            }
            ' ' | '\t' | '\r' => {
                chars.next();
                col += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            '^' | '*' | ',' | '=' | '|' => {
                let tok = match c {
                    '^' => Token::Caret,
                    '*' => Token::Star,
                    ',' => Token::Comma,
                    '=' => Token::Eq,
                    _ => Token::Pipe,
                };
                tokens.push((start.0, start.1, tok));
                chars.next();
                col += 1;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&c) = chars.peek() {
                    if !c.is_ascii_digit() {
                        break;
                    }
                    digits.push(c);
                    chars.next();
                    col += 1;
                }
                let value: u32 = digits.parse().map_err(|_| ParseError {
                    line: start.0,
                    col: start.1,
                    message: format!("integer '{digits}' is too large"),
                })?;
                tokens.push((start.0, start.1, Token::Int(value)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if !(c.is_ascii_alphanumeric() || c == '_') {
                        break;
                    }
                    word.push(c);
                    chars.next();
                    col += 1;
                }
                tokens.push((start.0, start.1, Token::Word(word)));
            }
            other => {
                return Err(ParseError {
                    line,
                    col,
                    message: format!("unexpected character '{other}'"),
                });
            }
        }
    }
    Ok(Lexer {
        tokens,
        end: (line, col),
    })
}

struct Parser {
    tokens: Vec<(usize, usize, Token)>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, _, t)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|&(l, c, _)| (l, c))
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, _, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }

    fn skip_newlines(&mut self) {
        while matches!(self.peek(), Some(Token::Newline)) {
            self.pos += 1;
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<u32, ParseError> {
        match self.peek() {
            Some(Token::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    /// `factor := "x" INT ("^" INT)?`, applied onto an exponent vector.
    fn parse_factor(&mut self, exps: &mut [u32]) -> Result<(), ParseError> {
        let (line, col) = self.here();
        let word = match self.bump() {
            Some(Token::Word(w)) => w,
            _ => unreachable!("caller checked for a word"),
        };
        let index: usize = word
            .strip_prefix('x')
            .filter(|rest| !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()))
            .and_then(|rest| rest.parse().ok())
            .ok_or(ParseError {
                line,
                col,
                message: format!("expected a variable like x2, found '{word}'"),
            })?;
        if index == 0 {
            return Err(ParseError {
                line,
                col,
                message: "variable indices start at 1".into(),
            });
        }
        if index > exps.len() {
            return Err(ParseError {
                line,
                col,
                message: format!(
                    "unknown variable x{index} (the ring has {} variable{})",
                    exps.len(),
                    if exps.len() == 1 { "" } else { "s" }
                ),
            });
        }
        let exponent = if matches!(self.peek(), Some(Token::Caret)) {
            self.pos += 1;
            let (eline, ecol) = self.here();
            let e = self.expect_int("an exponent after '^'")?;
            if e == 0 {
                return Err(ParseError {
                    line: eline,
                    col: ecol,
                    message: "zero exponents are not allowed; omit the factor instead".into(),
                });
            }
            e
        } else {
            1
        };
        exps[index - 1] += exponent;
        Ok(())
    }

    /// `monomial := factor (("*" | WS) factor)* | "1"`. A newline ends the
    /// monomial.
    fn parse_monomial(&mut self, n: usize) -> Result<Monomial, ParseError> {
        if matches!(self.peek(), Some(Token::Int(1))) {
            self.pos += 1;
            if matches!(self.peek(), Some(Token::Star | Token::Word(_) | Token::Caret)) {
                return Err(self.error("the constant generator 1 cannot carry factors"));
            }
            return Ok(Monomial::one(n));
        }
        if let Some(Token::Int(v)) = self.peek() {
            let v = *v;
            return Err(self.error(format!(
                "a generator is a product of variables (or the constant 1), found '{v}'"
            )));
        }
        let mut exps = vec![0u32; n];
        match self.peek() {
            Some(Token::Word(_)) => self.parse_factor(&mut exps)?,
            _ => return Err(self.error("expected a generator")),
        }
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    match self.peek() {
                        Some(Token::Word(_)) => self.parse_factor(&mut exps)?,
                        _ => return Err(self.error("expected a factor after '*'")),
                    }
                }
                Some(Token::Word(_)) => self.parse_factor(&mut exps)?,
                _ => break,
            }
        }
        Ok(Monomial::new(exps))
    }

    /// `dseq_decl := "dseq" NAME "=" INT (("|" | ",") INT)*`.
    fn parse_dseq_decl(&mut self) -> Result<(String, DSequence), ParseError> {
        let decl_pos = self.here();
        self.pos += 1; // the "dseq" keyword
        let name = match self.bump() {
            Some(Token::Word(w)) => w,
            _ => return Err(self.error("expected a name after 'dseq'")),
        };
        if !matches!(self.bump(), Some(Token::Eq)) {
            return Err(self.error("expected '=' in the d-sequence declaration"));
        }
        let mut entries = vec![self.expect_int("a d-sequence entry")?];
        while matches!(self.peek(), Some(Token::Pipe | Token::Comma)) {
            self.pos += 1;
            entries.push(self.expect_int("a d-sequence entry")?);
        }
        let d = DSequence::new(entries).map_err(|e| ParseError {
            line: decl_pos.0,
            col: decl_pos.1,
            message: format!("bad d-sequence '{name}': {e}"),
        })?;
        Ok((name, d))
    }
}

/// Parses a complete document.
pub fn parse_document(text: &str) -> Result<IdealDocument, ParseError> {
    let lexer = lex(text)?;
    let mut p = Parser {
        tokens: lexer.tokens,
        pos: 0,
        end: lexer.end,
    };

    p.skip_newlines();
    match p.bump() {
        Some(Token::Word(w)) if w == "ring" => {}
        _ => {
            p.pos = p.pos.saturating_sub(1);
            return Err(p.error("a document starts with 'ring N'"));
        }
    }
    let n = p.expect_int("the number of variables after 'ring'")? as usize;
    if n == 0 {
        return Err(p.error("the ring needs at least one variable"));
    }
    match p.peek() {
        Some(Token::Newline) | None => p.skip_newlines(),
        _ => return Err(p.error("expected a newline after the ring declaration")),
    }

    let mut gens: Vec<Monomial> = Vec::new();
    let mut dseqs: BTreeMap<String, DSequence> = BTreeMap::new();
    let mut expecting_another_generator = false;
    loop {
        p.skip_newlines();
        match p.peek() {
            None => break,
            Some(Token::Word(w)) if w == "dseq" => {
                if expecting_another_generator {
                    return Err(p.error("expected a generator after ','"));
                }
                let decl_pos = p.here();
                let (name, d) = p.parse_dseq_decl()?;
                if dseqs.insert(name.clone(), d).is_some() {
                    return Err(ParseError {
                        line: decl_pos.0,
                        col: decl_pos.1,
                        message: format!("d-sequence '{name}' is declared twice"),
                    });
                }
                match p.peek() {
                    Some(Token::Newline) | None => {}
                    _ => return Err(p.error("expected a newline after the d-sequence")),
                }
            }
            Some(_) => {
                if !gens.is_empty() && !expecting_another_generator {
                    return Err(p.error("generators must be separated by ','"));
                }
                gens.push(p.parse_monomial(n)?);
                expecting_another_generator = false;
                if matches!(p.peek(), Some(Token::Comma)) {
                    p.pos += 1;
                    expecting_another_generator = true;
                }
            }
        }
    }
    if expecting_another_generator {
        return Err(p.error("expected a generator after ','"));
    }
    if gens.is_empty() {
        return Err(p.error("at least one generator is required"));
    }

    Ok(IdealDocument {
        n,
        ideal: MonomialIdeal::minimalize(n, gens),
        dseqs,
    })
}

/// Parses a single monomial expression (for `--monomial` flags) against a
/// ring of `n` variables.
pub fn parse_monomial_text(text: &str, n: usize) -> Result<Monomial, ParseError> {
    let lexer = lex(text)?;
    let mut p = Parser {
        tokens: lexer.tokens,
        pos: 0,
        end: lexer.end,
    };
    p.skip_newlines();
    let m = p.parse_monomial(n)?;
    p.skip_newlines();
    if p.peek().is_some() {
        return Err(p.error("trailing input after the monomial"));
    }
    Ok(m)
}

/// Parses a `--dseq` flag value: either a literal comma- or pipe-separated
/// sequence ("1,2,4" or "1|2|4") or the name of a sequence declared in the
/// document.
pub fn resolve_dseq(flag: &str, doc: &IdealDocument) -> Result<DSequence, String> {
    let trimmed = flag.trim();
    if let Some(d) = doc.dseqs.get(trimmed) {
        return Ok(d.clone());
    }
    let entries: Result<Vec<u32>, _> = trimmed
        .split(|c| c == ',' || c == '|')
        .map(|part| part.trim().parse::<u32>())
        .collect();
    match entries {
        Ok(entries) => DSequence::new(entries).map_err(|e| e.to_string()),
        Err(_) if doc.dseqs.is_empty() => {
            Err(format!("'{trimmed}' is not a d-sequence (expected e.g. 1,2,4)"))
        }
        Err(_) => Err(format!(
            "'{trimmed}' is neither a d-sequence nor one of the declared names ({})",
            doc.dseqs.keys().cloned().collect::<Vec<_>>().join(", ")
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(text: &str) -> IdealDocument {
        parse_document(text).unwrap_or_else(|e| panic!("parse of {text:?} failed: {e}"))
    }

    fn err(text: &str) -> ParseError {
        parse_document(text).expect_err("expected a parse error")
    }

    #[test]
    fn parses_the_running_example() {
        let d = doc("ring 4\nx1^7, x1^5 x2, x1^2 x2^4, x1 x2^6, x1^5 x3^2, x1 x2^4 x3^2");
        assert_eq!(d.n, 4);
        assert_eq!(d.ideal.num_generators(), 6);
        // Canonical order: degree-ascending, then reverse-lexicographic on
        // the exponent vectors.
        assert_eq!(d.ideal.generators()[0].to_string(), "x1^5*x2");
        assert!(d.ideal.contains(&Monomial::new(vec![7, 0, 0, 0])));
    }

    #[test]
    fn star_and_whitespace_products_agree() {
        assert_eq!(
            doc("ring 3\nx1^2*x2, x3").ideal,
            doc("ring 3\nx1^2 x2, x3").ideal
        );
        // Repeated variables multiply.
        assert_eq!(
            doc("ring 2\nx1 x1 x2").ideal,
            doc("ring 2\nx1^2*x2").ideal
        );
    }

    #[test]
    fn principal_and_unit_documents() {
        assert_eq!(doc("ring 2\nx1").ideal.generators()[0].to_string(), "x1");
        assert!(doc("ring 2\n1").ideal.is_unit());
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let d = doc("# the running counterexample\nring 3\n# generators:\nx1^2, x2^3, # inline\nx3^4\n");
        assert_eq!(d.ideal.num_generators(), 3);
    }

    #[test]
    fn dseq_declarations() {
        let d = doc("ring 3\nx1^2, x2^3\ndseq base = 1|2|4\ndseq wide = 1,3\n");
        assert_eq!(d.dseqs["base"].entries(), &[1, 2, 4]);
        assert_eq!(d.dseqs["wide"].entries(), &[1, 3]);
        assert_eq!(resolve_dseq("base", &d).unwrap().entries(), &[1, 2, 4]);
        assert_eq!(resolve_dseq("1,2", &d).unwrap().entries(), &[1, 2]);
        assert!(resolve_dseq("nope", &d).is_err());
    }

    #[test]
    fn positioned_errors() {
        let e = err("ring 3\nx5^2");
        assert_eq!((e.line, e.col), (2, 1));
        assert!(e.message.contains("unknown variable x5"), "{}", e.message);

        let e = err("ring 3\nx1^0");
        assert_eq!((e.line, e.col), (2, 4));
        assert!(e.message.contains("zero exponent"), "{}", e.message);

        let e = err("ring 3\n");
        assert!(e.message.contains("at least one generator"), "{}", e.message);

        let e = err("ring 3\nx1,");
        assert!(e.message.contains("expected a generator"), "{}", e.message);

        let e = err("ring 3\nx1\nx2");
        assert_eq!(e.line, 3);
        assert!(e.message.contains("separated by ','"), "{}", e.message);

        let e = err("hello");
        assert!(e.message.contains("starts with 'ring"), "{}", e.message);

        let e = err("ring 3\ndseq d = 2|4\nx1");
        assert!(e.message.contains("bad d-sequence"), "{}", e.message);
    }

    #[test]
    fn print_parse_round_trip_is_the_identity() {
        for text in [
            "ring 4\nx1^7, x1^5 x2, x1^2 x2^4, x1 x2^6, x1^5 x3^2, x1 x2^4 x3^2",
            "ring 2\nx1",
            "ring 3\nx1^2, x2^3, x3^4\ndseq d = 1|2\n",
            "ring 1\n1",
            "ring 3\nx2^2 x3, x1 # with a comment",
        ] {
            let first = doc(text);
            let printed = print_document(&first);
            let reparsed = doc(&printed);
            assert_eq!(first, reparsed, "round trip through {printed:?}");
            assert_eq!(printed, print_document(&reparsed), "printing is a fixpoint");
        }
    }

    #[test]
    fn monomial_flag_parsing() {
        assert_eq!(parse_monomial_text("x3^4", 3).unwrap().to_string(), "x3^4");
        assert_eq!(
            parse_monomial_text("x1^2*x2", 3).unwrap().to_string(),
            "x1^2*x2"
        );
        assert!(parse_monomial_text("x9", 3).is_err());
        assert!(parse_monomial_text("x1 x1", 2).unwrap().degree() == 2);
    }
}
