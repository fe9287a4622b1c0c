//! Plain-text presentation files and JSON renderings of bases.
//!
//! ```text
//! # comment
//! period 2
//! arrows 0: b, a
//! arrows 1: y, x
//! relation 0: a.x - 1/2*b.y
//! ```
//!
//! Arrows are declared greatest first. A relation line may omit its start
//! residue (`relation: ...`) when the first label belongs to one residue only.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, RewriteRule};
use crate::linalg::ratio_string;
use crate::quiver::{Coeff, NcPolynomial, PathWord, QuiverPresentation};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn is_label_char(c: char) -> bool {
    !c.is_whitespace() && !matches!(c, '.' | ',' | ':' | '*' | '+' | '-' | '/' | '#')
}

/// Cursor over one line, counting columns in characters from 1.
struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    src: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Cursor {
            chars: src.char_indices().collect(),
            src,
            pos: 0,
            line,
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, message: impl Into<String>) -> Error {
        parse_err(self.line, self.column(), message)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let from = self.byte_offset();
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        &self.src[from..self.byte_offset()]
    }

    fn byte_offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(b, _)| b)
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        self.take_while(|c| c.is_alphanumeric() || c == '_')
    }

    fn unsigned(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.err("expected a number"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn usize(&mut self) -> Result<usize> {
        let col = self.column();
        let n = self.unsigned()?;
        usize::try_from(n).map_err(|_| parse_err(self.line, col, "number too large"))
    }

    fn label(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let col = self.column();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.err("labels may not start with a digit"));
        }
        let l = self.take_while(is_label_char);
        if l.is_empty() {
            return Err(self.err("expected an arrow label"));
        }
        Ok((col, l))
    }
}

struct RawTerm<'a> {
    column: usize,
    coeff: Coeff,
    labels: Vec<(usize, &'a str)>,
}

fn parse_terms<'a>(cur: &mut Cursor<'a>) -> Result<Vec<RawTerm<'a>>> {
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        if cur.at_end() {
            if first {
                return Err(cur.err("expected at least one term"));
            }
            return Ok(terms);
        }
        let column = cur.column();
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            return Err(cur.err("expected '+' or '-'"));
        };
        first = false;
        cur.skip_ws();
        let mut c = Coeff::one();
        if cur.peek().is_some_and(|ch| ch.is_ascii_digit()) {
            let num = cur.unsigned()?;
            let den = if cur.eat('/') {
                let col = cur.column();
                let d = cur.unsigned()?;
                if d.is_zero() {
                    return Err(parse_err(cur.line, col, "zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            c = Coeff::new(num, den);
            cur.expect('*')?;
        }
        if negative {
            c = -c;
        }
        let mut labels = vec![cur.label()?];
        while cur.eat('.') {
            labels.push(cur.label()?);
        }
        terms.push(RawTerm {
            column,
            coeff: c,
            labels,
        });
    }
}

fn build_relation(
    pres: &QuiverPresentation,
    line: usize,
    start: Option<(usize, usize)>,
    terms: &[RawTerm<'_>],
) -> Result<NcPolynomial> {
    let p = pres.period();
    let start = match start {
        Some((col, r)) => {
            if r >= p {
                return Err(parse_err(line, col, format!("residue {r} outside period {p}")));
            }
            r
        }
        None => {
            let (col, l) = terms[0].labels[0];
            let owners: Vec<usize> = (0..p).filter(|&r| pres.arrow_index(r, l).is_some()).collect();
            match owners.as_slice() {
                [r] => *r,
                [] => return Err(parse_err(line, col, format!("unknown arrow {l:?}"))),
                _ => {
                    return Err(parse_err(
                        line,
                        col,
                        format!("arrow {l:?} exists at several residues; write `relation r:`"),
                    ))
                }
            }
        }
    };
    let degree = terms[0].labels.len();
    let mut poly = NcPolynomial::zero();
    for t in terms {
        if t.labels.len() != degree {
            return Err(parse_err(line, t.column, "terms of a relation must have equal length"));
        }
        let mut letters = Vec::with_capacity(degree);
        for (k, &(col, l)) in t.labels.iter().enumerate() {
            let r = (start + k) % p;
            let idx = pres
                .arrow_index(r, l)
                .ok_or_else(|| parse_err(line, col, format!("no arrow {l:?} at residue {r}")))?;
            letters.push(idx);
        }
        poly.add_term(PathWord::new(start, letters), t.coeff.clone())?;
    }
    Ok(poly)
}

/// Parses a presentation file.
pub fn parse_presentation(text: &str) -> Result<QuiverPresentation> {
    let mut period: Option<usize> = None;
    let mut arrows: Vec<Option<Vec<String>>> = Vec::new();
    let mut pending = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor::new(content, line);
        if cur.at_end() {
            continue;
        }
        let kw_col = cur.column();
        match cur.word() {
            "period" => {
                if period.is_some() {
                    return Err(parse_err(line, kw_col, "period declared twice"));
                }
                let col = cur.column();
                let p = cur.usize()?;
                if p == 0 {
                    return Err(parse_err(line, col, "period must be positive"));
                }
                if !cur.at_end() {
                    return Err(cur.err("unexpected text after period"));
                }
                period = Some(p);
                arrows = vec![None; p];
            }
            "arrows" => {
                let p = period.ok_or_else(|| parse_err(line, kw_col, "`period` must come first"))?;
                let col = cur.column();
                let r = cur.usize()?;
                if r >= p {
                    return Err(parse_err(line, col, format!("residue {r} outside period {p}")));
                }
                if arrows[r].is_some() {
                    return Err(parse_err(line, col, format!("arrows at residue {r} declared twice")));
                }
                cur.expect(':')?;
                let mut labels: Vec<String> = Vec::new();
                if !cur.at_end() {
                    loop {
                        let (col, l) = cur.label()?;
                        if labels.iter().any(|x| x == l) {
                            return Err(parse_err(line, col, format!("duplicate label {l:?}")));
                        }
                        labels.push(l.to_string());
                        if !cur.eat(',') {
                            break;
                        }
                    }
                    if !cur.at_end() {
                        return Err(cur.err("expected ',' or end of line"));
                    }
                }
                arrows[r] = Some(labels);
            }
            "relation" => {
                if period.is_none() {
                    return Err(parse_err(line, kw_col, "`period` must come first"));
                }
                cur.skip_ws();
                let start = if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
                    let col = cur.column();
                    Some((col, cur.usize()?))
                } else {
                    None
                };
                cur.expect(':')?;
                let terms = parse_terms(&mut cur)?;
                pending.push((line, start, terms));
            }
            "" => return Err(parse_err(line, kw_col, "expected a keyword")),
            other => return Err(parse_err(line, kw_col, format!("unknown keyword {other:?}"))),
        }
    }
    let p = period.ok_or_else(|| parse_err(last_line.max(1), 1, "missing `period`"))?;
    let mut tables = Vec::with_capacity(p);
    for (r, a) in arrows.into_iter().enumerate() {
        tables.push(a.ok_or_else(|| {
            parse_err(last_line.max(1), 1, format!("no arrows declared at residue {r}"))
        })?);
    }
    let quiver = QuiverPresentation::new(tables, vec![])?;
    let relations = pending
        .iter()
        .map(|(line, start, terms)| build_relation(&quiver, *line, *start, terms))
        .collect::<Result<Vec<_>>>()?;
    quiver.with_relations(relations)
}

fn sorted_terms<'a>(pres: &QuiverPresentation, p: &'a NcPolynomial) -> Vec<(&'a PathWord, &'a Coeff)> {
    let order = pres.order();
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| match order.compare(b.0, a.0) {
        Ok(o) => o,
        Err(_) => Ordering::Equal,
    });
    terms
}

fn coeff_text(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        ratio_string(c)
    }
}

/// Polynomial in file syntax, largest term first, e.g. `x1.x3 - 2*x3.x1`.
pub fn format_polynomial(pres: &QuiverPresentation, p: &NcPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (w, c)) in sorted_terms(pres, p).into_iter().enumerate() {
        let mag = c.abs();
        if k == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&coeff_text(&mag));
            out.push('*');
        }
        out.push_str(&pres.format_word(w));
    }
    out
}

/// Inverse of [`parse_presentation`]; relation lines carry their residue.
pub fn format_presentation(pres: &QuiverPresentation) -> String {
    let mut out = format!("period {}\n", pres.period());
    for r in 0..pres.period() {
        let labels: Vec<&str> = pres.arrows_descending(r).map(|a| pres.label(r, a)).collect();
        out.push_str(&format!("arrows {r}: {}\n", labels.join(", ")));
    }
    for rel in pres.relations() {
        let start = rel.start().unwrap_or(0);
        out.push_str(&format!("relation {start}: {}\n", format_polynomial(pres, rel)));
    }
    out
}

/// Parses one polynomial at a given start residue, in relation syntax.
pub fn parse_polynomial(pres: &QuiverPresentation, start: Option<usize>, text: &str) -> Result<NcPolynomial> {
    let mut cur = Cursor::new(text, 1);
    let terms = parse_terms(&mut cur)?;
    build_relation(pres, 1, start.map(|s| (1, s)), &terms)
}

/// Generator files reuse the relation syntax with the keyword `generator`.
pub fn parse_generators(pres: &QuiverPresentation, text: &str) -> Result<Vec<NcPolynomial>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor::new(content, line);
        if cur.at_end() {
            continue;
        }
        let kw_col = cur.column();
        match cur.word() {
            "generator" => {
                cur.skip_ws();
                let start = if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
                    let col = cur.column();
                    Some((col, cur.usize()?))
                } else {
                    None
                };
                cur.expect(':')?;
                let terms = parse_terms(&mut cur)?;
                let g = build_relation(pres, line, start, &terms)?;
                if g.is_zero() {
                    return Err(parse_err(line, kw_col, "generator is zero"));
                }
                out.push(g);
            }
            other => {
                return Err(parse_err(line, kw_col, format!("expected `generator`, found {other:?}")))
            }
        }
    }
    Ok(out)
}

fn rule_json(pres: &QuiverPresentation, rule: &RewriteRule) -> Value {
    let tail: Vec<Value> = sorted_terms(pres, &rule.tail)
        .into_iter()
        .map(|(w, c)| json!({ "coeff": ratio_string(c), "word": pres.format_word(w) }))
        .collect();
    json!({
        "start": rule.lead.start(),
        "degree": rule.lead.degree(),
        "lead": pres.format_word(&rule.lead),
        "tail": tail,
    })
}

/// Basis as JSON: rules sorted by (start, degree, lead), coefficients as `p/q`.
pub fn basis_json(gb: &GroebnerBasis) -> Value {
    let pres = gb.presentation();
    let order = gb.order();
    let mut rules: Vec<&RewriteRule> = gb.rules().iter().collect();
    rules.sort_by(|a, b| {
        (a.lead.start(), a.lead.degree())
            .cmp(&(b.lead.start(), b.lead.degree()))
            .then_with(|| order.compare(&a.lead, &b.lead).unwrap_or(Ordering::Equal))
    });
    let per_residue: Vec<usize> = (0..gb.period())
        .map(|r| gb.rules().iter().filter(|x| x.lead.start() == r).count())
        .collect();
    json!({
        "period": gb.period(),
        "completed_through": gb.completed_through(),
        "closed": gb.is_closed(),
        "max_rule_degree": gb.max_rule_degree(),
        "rule_count": gb.rules().len(),
        "rules_per_residue": per_residue,
        "rules": rules.into_iter().map(|r| rule_json(pres, r)).collect::<Vec<_>>(),
    })
}
