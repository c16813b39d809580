//! Input files and operator text.
//!
//! ```text
//! vars: x, y
//! gens:
//! x^2 + y^2
//! 3/2*x*y - 1
//! ```
//!
//! Polynomials use `+ - * ^` and parentheses, integer or `p/q`
//! coefficients; multiplication is always explicit. The same grammar reads
//! back printed operators, where `d<name>` is the derivative in `<name>`.

use std::fmt;

use num_bigint::BigInt;
use weyl_lc::{Operator, Rat, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// A parsed input file.
#[derive(Clone, Debug)]
pub struct ProblemInput {
    pub vars: Vec<String>,
    pub gens: Vec<Operator>,
}

impl ProblemInput {
    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn ring(&self) -> Ring {
        Ring::weyl(self.vars.len())
    }
}

/// Token names of a ring's variables: user names for `x_i`, `d<name>` for
/// their derivatives and the fixed names of the auxiliary variables.
pub fn slot_names(ring: Ring, vars: &[String]) -> Vec<(String, usize)> {
    let n = ring.n();
    let mut out: Vec<(String, usize)> = Vec::new();
    for (i, v) in vars.iter().enumerate() {
        out.push((v.clone(), ring.x(i)));
        out.push((format!("d{v}"), ring.d(i)));
    }
    for slot in 2 * n..ring.nslots() {
        out.push((ring.slot_name(slot), slot));
    }
    out
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, col, msg: msg.into() }
}

fn valid_name(v: &str) -> bool {
    let mut cs = v.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parse a whole input file.
pub fn parse_input(text: &str) -> Result<ProblemInput, ParseError> {
    let mut vars: Option<Vec<String>> = None;
    let mut gens: Vec<Operator> = Vec::new();
    let mut in_gens = false;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        let body = content.trim();
        if let Some(rest) = body.strip_prefix("vars:") {
            if vars.is_some() {
                return Err(err(line, lead + 1, "duplicate `vars:` header"));
            }
            let mut names: Vec<String> = Vec::new();
            let mut off = lead + 5;
            for piece in rest.split(',') {
                let name = piece.trim();
                let col = off + piece.len() - piece.trim_start().len() + 1;
                off += piece.len() + 1;
                if !valid_name(name) {
                    return Err(err(line, col, format!("invalid variable name `{name}`")));
                }
                if names.iter().any(|v| v == name) {
                    return Err(err(line, col, format!("variable `{name}` declared twice")));
                }
                names.push(name.to_string());
            }
            for v in &names {
                if let Some(base) = v.strip_prefix('d') {
                    if names.iter().any(|w| w == base) {
                        return Err(err(line, lead + 1, format!("`{v}` clashes with the derivative of `{base}`")));
                    }
                }
            }
            vars = Some(names);
            continue;
        }
        if body == "gens:" {
            if vars.is_none() {
                return Err(err(line, lead + 1, "`gens:` before `vars:`"));
            }
            in_gens = true;
            continue;
        }
        if !in_gens {
            return Err(err(line, lead + 1, "expected `vars:` or `gens:` header"));
        }
        let names = vars.as_ref().unwrap();
        let ring = Ring::weyl(names.len());
        let op = parse_with(content, ring, names).map_err(|e| err(line, e.col, e.msg))?;
        if !op.is_pure_x() {
            return Err(err(line, lead + 1, "generators must be polynomials (no derivatives)"));
        }
        if op.is_zero() {
            return Err(err(line, lead + 1, "generator is zero"));
        }
        gens.push(op);
    }
    let vars = vars.ok_or_else(|| err(1, 1, "missing `vars:` header"))?;
    if vars.is_empty() {
        return Err(err(1, 1, "no variables declared"));
    }
    if gens.is_empty() {
        return Err(err(last_line.max(1), 1, "empty ideal: no generators after `gens:`"));
    }
    Ok(ProblemInput { vars, gens })
}

/// Parse one operator of `ring`, `x_i` named by `vars`.
pub fn parse_operator(text: &str, ring: Ring, vars: &[String]) -> Result<Operator, ParseError> {
    parse_with(text, ring, vars)
}

/// Parse a printed vector `[a, b, ...]` (or a bare operator, rank 1).
pub fn parse_vector(text: &str, ring: Ring, vars: &[String]) -> Result<Vec<Operator>, ParseError> {
    let t = text.trim();
    let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) else {
        return Ok(vec![parse_with(t, ring, vars)?]);
    };
    let off = text.find('[').unwrap() + 1;
    let mut out = Vec::new();
    let mut start = 0;
    let mut depth = 0;
    for (i, c) in inner.char_indices().chain(std::iter::once((inner.len(), ','))) {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                let piece = &inner[start..i];
                let op = parse_with(piece, ring, vars).map_err(|e| err(1, e.col + off + start, e.msg))?;
                out.push(op);
                start = i + 1;
            }
            _ => {}
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let cs: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = cs[s..i].iter().collect();
            out.push((Tok::Num(digits.parse().unwrap()), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let s = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(cs[s..i].iter().collect()), col));
        } else if "+-*^/()".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(err(1, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: Ring,
    names: &'a [(String, usize)],
    end_col: usize,
}

fn parse_with(text: &str, ring: Ring, vars: &[String]) -> Result<Operator, ParseError> {
    if vars.len() != ring.n() {
        return Err(err(1, 1, format!("{} names for {} variables", vars.len(), ring.n())));
    }
    let names = slot_names(ring, vars);
    let mut p = Parser { toks: lex(text)?, pos: 0, ring, names: &names, end_col: text.chars().count() + 1 };
    if p.toks.is_empty() {
        return Err(err(1, 1, "empty expression"));
    }
    let e = p.expr()?;
    if let Some((t, col)) = p.toks.get(p.pos) {
        let msg = match t {
            Tok::Sym(')') => "unbalanced `)`".to_string(),
            _ => format!("unexpected {} (multiplication must be explicit)", describe(t)),
        };
        return Err(err(1, *col, msg));
    }
    Ok(e)
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
    }
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn expr(&mut self) -> Result<Operator, ParseError> {
        let mut acc = Operator::zero(self.ring);
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(Tok::Sym('+')) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Sym('-')) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if neg { acc.sub(&t) } else { acc.add(&t) }.expect("same ring");
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Operator, ParseError> {
        let mut acc = self.power()?;
        while let Some(Tok::Sym('*')) = self.peek() {
            self.pos += 1;
            let f = self.power()?;
            acc = acc.multiply(&f).expect("same ring");
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Operator, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Sym('^')) = self.peek() {
            self.pos += 1;
            let col = self.col();
            match self.toks.get(self.pos).map(|t| t.0.clone()) {
                Some(Tok::Num(e)) => {
                    self.pos += 1;
                    let e: u32 = e.try_into().map_err(|_| err(1, col, "exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(err(1, col, "expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Operator, ParseError> {
        let col = self.col();
        let Some((tok, _)) = self.toks.get(self.pos).cloned() else {
            return Err(err(1, col, "unexpected end of expression"));
        };
        self.pos += 1;
        match tok {
            Tok::Num(p) => {
                if let Some(Tok::Sym('/')) = self.peek() {
                    self.pos += 1;
                    let qcol = self.col();
                    match self.toks.get(self.pos).map(|t| t.0.clone()) {
                        Some(Tok::Num(q)) if q != BigInt::from(0) => {
                            self.pos += 1;
                            return Ok(Operator::constant(self.ring, Rat::new(p, q)));
                        }
                        Some(Tok::Num(_)) => return Err(err(1, qcol, "malformed rational: zero denominator")),
                        _ => return Err(err(1, qcol, "malformed rational: expected an integer denominator")),
                    }
                }
                Ok(Operator::constant(self.ring, Rat::from_integer(p)))
            }
            Tok::Ident(name) => match self.names.iter().find(|(n, _)| *n == name) {
                Some(&(_, slot)) => Ok(Operator::var(self.ring, slot)),
                None => Err(err(1, col, format!("undeclared variable `{name}`"))),
            },
            Tok::Sym('(') => {
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::Sym(')')) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(err(1, self.col(), "expected `)`")),
                }
            }
            Tok::Sym('/') => Err(err(1, col, "division is only allowed inside a rational coefficient p/q")),
            other => Err(err(1, col, format!("unexpected {}", describe(&other)))),
        }
    }
}
