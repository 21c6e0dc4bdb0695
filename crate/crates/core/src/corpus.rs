//! The identity corpus: a line-oriented file of `[entry]` blocks.
//!
//! ```text
//! # comment
//! [entry]
//! name = "a-4n+2"
//! kind = "equality"
//! lhs = "extract(f3/(f1*f6), 4, 2)"
//! rhs = "2*f2*f6^2*f8^2/(f1^4*f3*f12)"
//! order = 300
//! ref = "a(4n+2) generating function"
//! ```
//!
//! Values are double-quoted strings (with `\"` and `\\` escapes), unsigned
//! integers, or bracketed integer lists such as `[2, 3, 5]`.
//!
//! | kind            | keys                                                |
//! |-----------------|-----------------------------------------------------|
//! | `equality`      | `lhs`, `rhs`, `order?`                              |
//! | `congruence`    | `lhs`, `rhs`, `modulus`, `order?`                   |
//! | `congruence`    | `base`, `m`, `j`, `modulus`, `nmax?`                |
//! | `frobenius`     | `p`, `a`, `b` (each an integer or list), `order?`   |
//! | `convolution`   | `nmax?`                                             |
//! | `empty-support` | `m`, `j`, `nmax?`                                   |
//! | `oracle-match`  | `expr`, `oracle`, `order?`                          |
//!
//! Every entry needs a unique `name`; `ref` is free text. An entry may
//! carry `expect = "fail"` to record a claim known not to hold; it is then
//! reported as `XFAIL`, or as `XPASS` if it unexpectedly holds.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::expr::{parse, Expr};
use crate::oracles::OracleKind;
use crate::verify::{
    check_congruence_progression, check_convolution, check_empty_support, check_frobenius, check_identity,
    check_oracle_match, CheckKind, IdentityCheck, Report, VerifyError, DEFAULT_NMAX, DEFAULT_ORDER,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct CorpusError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntryCheck {
    Equality { lhs: Expr, rhs: Expr },
    Congruence { lhs: Expr, rhs: Expr, modulus: u64 },
    Progression { base: Expr, m: usize, j: usize, modulus: u64, nmax: Option<usize> },
    Frobenius { p: Vec<u64>, a: Vec<usize>, b: Vec<u32> },
    Convolution { nmax: Option<usize> },
    EmptySupport { m: usize, j: usize, nmax: Option<usize> },
    OracleMatch { expr: Expr, oracle: OracleKind },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub reference: Option<String>,
    pub order: Option<usize>,
    /// The entry records a statement known to be false.
    pub expect_fail: bool,
    pub check: EntryCheck,
    /// Line of the `[entry]` header.
    pub line: usize,
}

/// Global overrides applied when running entries.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub order: Option<usize>,
    pub nmax: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Value {
    Str(String),
    Int(u64),
    List(Vec<u64>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Str(s) => write!(f, "string {s:?}"),
            Value::Int(n) => write!(f, "integer {n}"),
            Value::List(v) => write!(f, "list {v:?}"),
        }
    }
}

/// Key to (line, value) for one `[entry]` block.
type Block = BTreeMap<String, (usize, Value)>;

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut blocks: Vec<(usize, Block)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        if l == "[entry]" {
            blocks.push((line, BTreeMap::new()));
            continue;
        }
        let Some((key, rest)) = l.split_once('=') else {
            return Err(CorpusError { line, message: format!("expected `[entry]` or `key = value`, found {l:?}") });
        };
        let key = key.trim();
        if key.is_empty() || !key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-') {
            return Err(CorpusError { line, message: format!("invalid key {key:?}") });
        }
        let value = parse_value(rest.trim()).map_err(|message| CorpusError { line, message })?;
        let Some((_, fields)) = blocks.last_mut() else {
            return Err(CorpusError { line, message: "key outside of an [entry] block".into() });
        };
        if fields.insert(key.to_string(), (line, value)).is_some() {
            return Err(CorpusError { line, message: format!("duplicate key {key:?}") });
        }
    }
    let mut seen = HashSet::new();
    let mut entries = Vec::with_capacity(blocks.len());
    for (line, fields) in blocks {
        let entry = build_entry(line, fields)?;
        if !seen.insert(entry.name.clone()) {
            return Err(CorpusError { line, message: format!("duplicate entry name {:?}", entry.name) });
        }
        entries.push(entry);
    }
    Ok(entries)
}

fn parse_value(s: &str) -> Result<Value, String> {
    if let Some(body) = s.strip_prefix('"') {
        let mut out = String::new();
        let mut chars = body.chars();
        loop {
            match chars.next() {
                Some('\\') => match chars.next() {
                    Some(c @ ('"' | '\\')) => out.push(c),
                    Some(c) => return Err(format!("unknown escape \\{c}")),
                    None => return Err("unterminated string".into()),
                },
                Some('"') => break,
                Some(c) => out.push(c),
                None => return Err("unterminated string".into()),
            }
        }
        let tail = chars.as_str().trim();
        if !tail.is_empty() && !tail.starts_with('#') {
            return Err(format!("unexpected text after string: {tail:?}"));
        }
        return Ok(Value::Str(out));
    }
    let s = s.split('#').next().unwrap_or_default().trim();
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let items = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u64>().map_err(|_| format!("invalid list element {t:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        if items.is_empty() {
            return Err("empty list".into());
        }
        return Ok(Value::List(items));
    }
    s.parse::<u64>().map(Value::Int).map_err(|_| format!("expected a quoted string, integer or list, found {s:?}"))
}

struct Fields {
    header: usize,
    map: BTreeMap<String, (usize, Value)>,
}

impl Fields {
    fn err(&self, line: usize, message: impl Into<String>) -> CorpusError {
        CorpusError { line, message: message.into() }
    }

    fn take(&mut self, key: &str) -> Option<(usize, Value)> {
        self.map.remove(key)
    }

    fn str(&mut self, key: &str) -> Result<String, CorpusError> {
        match self.take(key) {
            Some((_, Value::Str(s))) => Ok(s),
            Some((line, v)) => Err(self.err(line, format!("{key} must be a string, found {v}"))),
            None => Err(self.err(self.header, format!("missing key {key:?}"))),
        }
    }

    fn opt_str(&mut self, key: &str) -> Result<Option<String>, CorpusError> {
        if self.map.contains_key(key) {
            self.str(key).map(Some)
        } else {
            Ok(None)
        }
    }

    fn expr(&mut self, key: &str) -> Result<Expr, CorpusError> {
        let line = self.map.get(key).map_or(self.header, |(l, _)| *l);
        let src = self.str(key)?;
        parse(&src).map_err(|e| self.err(line, format!("{key}: {e}")))
    }

    fn int(&mut self, key: &str) -> Result<u64, CorpusError> {
        match self.take(key) {
            Some((_, Value::Int(n))) => Ok(n),
            Some((line, v)) => Err(self.err(line, format!("{key} must be an integer, found {v}"))),
            None => Err(self.err(self.header, format!("missing key {key:?}"))),
        }
    }

    fn opt_int(&mut self, key: &str) -> Result<Option<u64>, CorpusError> {
        if self.map.contains_key(key) {
            self.int(key).map(Some)
        } else {
            Ok(None)
        }
    }

    fn list(&mut self, key: &str) -> Result<Vec<u64>, CorpusError> {
        match self.take(key) {
            Some((_, Value::Int(n))) => Ok(vec![n]),
            Some((_, Value::List(v))) => Ok(v),
            Some((line, v)) => Err(self.err(line, format!("{key} must be an integer or list, found {v}"))),
            None => Err(self.err(self.header, format!("missing key {key:?}"))),
        }
    }
}

fn to_usize(n: u64) -> usize {
    usize::try_from(n).unwrap_or(usize::MAX)
}

fn build_entry(header: usize, map: BTreeMap<String, (usize, Value)>) -> Result<CorpusEntry, CorpusError> {
    let mut f = Fields { header, map };
    let name = f.str("name")?;
    let kind = f.str("kind")?;
    let reference = f.opt_str("ref")?;
    let order = f.opt_int("order")?.map(to_usize);
    let expect_line = f.map.get("expect").map_or(header, |(l, _)| *l);
    let expect_fail = match f.opt_str("expect")?.as_deref() {
        None | Some("pass") => false,
        Some("fail") => true,
        Some(other) => return Err(f.err(expect_line, format!("expect must be \"pass\" or \"fail\", found {other:?}"))),
    };
    let nmax = |f: &mut Fields| f.opt_int("nmax").map(|n| n.map(to_usize));
    let modulus = |f: &mut Fields| -> Result<u64, CorpusError> {
        let line = f.map.get("modulus").map_or(header, |(l, _)| *l);
        let m = f.int("modulus")?;
        if m < 2 {
            return Err(f.err(line, "modulus must be at least 2"));
        }
        Ok(m)
    };
    let residue = |f: &mut Fields| -> Result<(usize, usize), CorpusError> {
        let line = f.map.get("j").map_or(header, |(l, _)| *l);
        let m = to_usize(f.int("m")?);
        let j = to_usize(f.int("j")?);
        if m == 0 || j >= m {
            return Err(f.err(line, format!("need 0 <= j < m, got m = {m}, j = {j}")));
        }
        Ok((m, j))
    };
    let check = match kind.as_str() {
        "equality" => EntryCheck::Equality { lhs: f.expr("lhs")?, rhs: f.expr("rhs")? },
        "congruence" if f.map.contains_key("base") => {
            let base = f.expr("base")?;
            let (m, j) = residue(&mut f)?;
            EntryCheck::Progression { base, m, j, modulus: modulus(&mut f)?, nmax: nmax(&mut f)? }
        }
        "congruence" => EntryCheck::Congruence { lhs: f.expr("lhs")?, rhs: f.expr("rhs")?, modulus: modulus(&mut f)? },
        "frobenius" => {
            let p = f.list("p")?;
            let a: Vec<usize> = f.list("a")?.into_iter().map(to_usize).collect();
            let b = f
                .list("b")?
                .into_iter()
                .map(|b| u32::try_from(b).map_err(|_| f.err(header, format!("b = {b} is too large"))))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(bad) = p.iter().find(|&&p| !crate::verify::is_prime(p)) {
                return Err(f.err(header, format!("p = {bad} is not prime")));
            }
            if a.contains(&0) || b.contains(&0) {
                return Err(f.err(header, "a and b must be positive"));
            }
            EntryCheck::Frobenius { p, a, b }
        }
        "convolution" => EntryCheck::Convolution { nmax: nmax(&mut f)? },
        "empty-support" => {
            let (m, j) = residue(&mut f)?;
            EntryCheck::EmptySupport { m, j, nmax: nmax(&mut f)? }
        }
        "oracle-match" => {
            let expr = f.expr("expr")?;
            let line = f.map.get("oracle").map_or(header, |(l, _)| *l);
            let oracle = f.str("oracle")?.parse::<OracleKind>().map_err(|e| f.err(line, e))?;
            EntryCheck::OracleMatch { expr, oracle }
        }
        other => return Err(f.err(header, format!("unknown kind {other:?}"))),
    };
    if let Some((key, (line, _))) = f.map.iter().next() {
        return Err(f.err(*line, format!("key {key:?} does not apply to kind {kind:?}")));
    }
    Ok(CorpusEntry { name, reference, order, expect_fail, check, line: header })
}

impl CorpusEntry {
    /// Runs the entry. Frobenius grids produce one report per parameter
    /// triple; every other kind produces exactly one.
    pub fn run(&self, opts: &RunOptions) -> Result<Vec<Report>, VerifyError> {
        let order = opts.order.or(self.order).unwrap_or(DEFAULT_ORDER);
        let nmax = |own: &Option<usize>| opts.nmax.or(*own).unwrap_or(DEFAULT_NMAX);
        let name = self.name.as_str();
        let identity = |lhs: &Expr, rhs: &Expr, kind| {
            check_identity(&IdentityCheck { name: name.to_string(), lhs: lhs.clone(), rhs: rhs.clone(), kind, order })
        };
        let report = match &self.check {
            EntryCheck::Equality { lhs, rhs } => identity(lhs, rhs, CheckKind::Equality)?,
            EntryCheck::Congruence { lhs, rhs, modulus } => {
                identity(lhs, rhs, CheckKind::Congruence { modulus: *modulus })?
            }
            EntryCheck::Progression { base, m, j, modulus, nmax: own } => {
                check_congruence_progression(name, base, *m, *j, *modulus, nmax(own))?
            }
            EntryCheck::Frobenius { p, a, b } => {
                let single = p.len() * a.len() * b.len() == 1;
                let mut out = Vec::new();
                for &p in p {
                    for &a in a {
                        for &b in b {
                            let r = check_frobenius(p, a, b, order)?;
                            out.push(if single {
                                r.renamed(name)
                            } else {
                                r.renamed(format!("{name}[p={p},a={a},b={b}]"))
                            });
                        }
                    }
                }
                return Ok(out);
            }
            EntryCheck::Convolution { nmax: own } => check_convolution(nmax(own)).renamed(name),
            EntryCheck::EmptySupport { m, j, nmax: own } => check_empty_support(*m, *j, nmax(own))?.renamed(name),
            EntryCheck::OracleMatch { expr, oracle } => check_oracle_match(name, expr, *oracle, order)?,
        };
        Ok(vec![report])
    }
}

/// Runs entries in parallel; results come back in input order.
pub fn run_corpus(entries: &[CorpusEntry], opts: &RunOptions) -> Vec<Result<Vec<Report>, VerifyError>> {
    entries.par_iter().map(|e| e.run(opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"
# two entries
[entry]
name = "square"
kind = "equality"
lhs = "f1*f1"
rhs = "f1^2"   # trailing comment
order = 30
ref = "sanity"

[entry]
name = "grid"
kind = "frobenius"
p = [2, 3]
a = 1
b = [1, 2]
order = 40
"#;

    #[test]
    fn parses_blocks() {
        let entries = parse_corpus(SMALL).unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0].name, "square");
        assert_eq!(entries[0].reference.as_deref(), Some("sanity"));
        assert_eq!(entries[0].order, Some(30));
        assert_eq!(entries[0].line, 3);
        assert_eq!(entries[1].check, EntryCheck::Frobenius { p: vec![2, 3], a: vec![1], b: vec![1, 2] });
    }

    #[test]
    fn runs_and_expands_grids() {
        let entries = parse_corpus(SMALL).unwrap();
        let results = run_corpus(&entries, &RunOptions::default());
        let square = results[0].as_ref().unwrap();
        assert_eq!(square.len(), 1);
        assert_eq!(square[0].checked_up_to, 30);
        let grid = results[1].as_ref().unwrap();
        let names: Vec<_> = grid.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["grid[p=2,a=1,b=1]", "grid[p=2,a=1,b=2]", "grid[p=3,a=1,b=1]", "grid[p=3,a=1,b=2]"]);
        assert!(grid.iter().all(Report::passed));
    }

    #[test]
    fn order_override() {
        let entries = parse_corpus(SMALL).unwrap();
        let r = entries[0].run(&RunOptions { order: Some(12), nmax: None }).unwrap();
        assert_eq!(r[0].checked_up_to, 12);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("name = \"x\"", 1, "outside"),
            ("[entry]\nname = \"x\"\nkind = \"equality\"\nlhs = \"f1 +\"\nrhs = \"f1\"", 4, "lhs"),
            ("[entry]\nname = \"x\"\nkind = \"equality\"\nlhs = \"f1\"", 1, "missing key \"rhs\""),
            ("[entry]\nname = \"x\"\nkind = \"nope\"", 1, "unknown kind"),
            ("[entry]\nname = \"x\"\nkind = \"convolution\"\nm = 4", 4, "does not apply"),
            (
                "[entry]\nname = \"x\"\nkind = \"convolution\"\n[entry]\nname = \"x\"\nkind = \"convolution\"",
                4,
                "duplicate entry",
            ),
            ("[entry]\nname = \"x\nkind = \"convolution\"", 2, "unterminated"),
            ("[entry]\nname = \"x\"\nkind = \"empty-support\"\nm = 4\nj = 4", 5, "0 <= j < m"),
            ("[entry]\nname = \"x\"\nkind = \"frobenius\"\np = 4\na = 1\nb = 1", 1, "not prime"),
            ("[entry]\nname = \"x\"\nname = \"y\"", 3, "duplicate key"),
            ("garbage", 1, "expected"),
        ];
        for (text, line, needle) in cases {
            let err = parse_corpus(text).unwrap_err();
            assert_eq!(err.line, line, "{text:?}: {err}");
            assert!(err.message.contains(needle), "{text:?}: {err}");
        }
    }

    #[test]
    fn expect_key() {
        let entry = |expect: &str| format!("[entry]\nname = \"x\"\nkind = \"convolution\"\nexpect = \"{expect}\"\n");
        assert!(parse_corpus(&entry("fail")).unwrap()[0].expect_fail);
        assert!(!parse_corpus(&entry("pass")).unwrap()[0].expect_fail);
        let err = parse_corpus(&entry("maybe")).unwrap_err();
        assert_eq!(err.line, 4);
        assert!(!parse_corpus(SMALL).unwrap()[0].expect_fail);
    }

    #[test]
    fn shipped_corpus_parses() {
        let entries = parse_corpus(crate::SHIPPED_CORPUS).unwrap();
        assert!(entries.len() > 30);
        let xfail: Vec<_> = entries.iter().filter(|e| e.expect_fail).map(|e| e.name.as_str()).collect();
        assert_eq!(xfail, ["a-4n+2-five-term"]);
    }

    #[test]
    fn string_escapes() {
        assert_eq!(parse_value(r#""a\"b\\c""#).unwrap(), Value::Str("a\"b\\c".into()));
        assert!(parse_value(r#""a" b"#).is_err());
    }
}
