//! Text forms: ANF expressions and the two-line function file.
//!
//! ANF expressions join terms with `+`, variables are `x1..xn`, the
//! constant term is `1` and the zero function is `0`:
//! `x1*x2*x3 + x1*x2 + x2*x3 + x1 + x2 + 1`.
//!
//! A function file is line oriented, `#` starts a comment:
//!
//! ```text
//! vars 3
//! tt 0x51
//! ```
//!
//! or with the second line `anf <expression>`.

use super::anf::Anf;
use super::truth_table::TruthTable;
use crate::{Error, Result};

/// A parsed function file: the function in whichever form the file carried.
#[derive(Clone, Debug)]
pub enum FunctionForm {
    Table(TruthTable),
    Expression(Anf),
}

impl FunctionForm {
    pub fn var_count(&self) -> u32 {
        match self {
            FunctionForm::Table(t) => t.var_count(),
            FunctionForm::Expression(a) => a.var_count(),
        }
    }

    pub fn to_table(&self) -> TruthTable {
        match self {
            FunctionForm::Table(t) => t.clone(),
            FunctionForm::Expression(a) => a.to_table(),
        }
    }

    pub fn to_anf(&self) -> Anf {
        match self {
            FunctionForm::Table(t) => Anf::from_table(t),
            FunctionForm::Expression(a) => a.clone(),
        }
    }
}

/// Renders an ANF in the expression syntax: terms by descending degree,
/// ties by ascending mask, constant last; `0` for the empty set.
pub fn format_anf(anf: &Anf) -> String {
    if anf.is_zero() {
        return "0".to_string();
    }
    let mut masks: Vec<u32> = anf.monomials().to_vec();
    masks.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    let terms: Vec<String> = masks
        .iter()
        .map(|&m| {
            if m == 0 {
                return "1".to_string();
            }
            let vars: Vec<String> = (0..anf.var_count())
                .filter(|b| m >> b & 1 == 1)
                .map(|b| format!("x{}", b + 1))
                .collect();
            vars.join("*")
        })
        .collect();
    terms.join(" + ")
}

/// Parses an ANF expression over `n` variables.
pub fn parse_anf(n: u32, text: &str) -> Result<Anf> {
    parse_anf_at(n, text, 0)
}

fn parse_anf_at(n: u32, text: &str, line: usize) -> Result<Anf> {
    let body = text.trim();
    if body.is_empty() {
        return Err(Error::parse(line, "empty ANF expression"));
    }
    if body == "0" {
        return Ok(Anf::zero(n));
    }
    let mut masks = Vec::new();
    for term in body.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::parse(line, "empty term between '+'"));
        }
        if term == "1" {
            masks.push(0u32);
            continue;
        }
        let mut mask = 0u32;
        for factor in term.split('*') {
            let factor = factor.trim();
            let idx: u32 = factor
                .strip_prefix('x')
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::parse(line, format!("invalid factor '{factor}'")))?;
            if idx == 0 || idx > n {
                return Err(Error::parse(
                    line,
                    format!("variable x{idx} out of range for {n} variables"),
                ));
            }
            let bit = 1u32 << (idx - 1);
            if mask & bit != 0 {
                return Err(Error::parse(line, format!("repeated variable x{idx} in term")));
            }
            mask |= bit;
        }
        masks.push(mask);
    }
    Ok(Anf::from_monomials(n, masks))
}

/// Parses a function file. Returns the function in the form the file used.
pub fn parse_function_file(text: &str) -> Result<FunctionForm> {
    let mut n: Option<u32> = None;
    let mut form: Option<FunctionForm> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let (key, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match key {
            "vars" => {
                let v: u32 = rest
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("invalid variable count '{rest}'")))?;
                if !(1..=super::truth_table::MAX_VARS).contains(&v) {
                    return Err(Error::parse(
                        lineno,
                        format!("variable count {v} out of range 1..=16"),
                    ));
                }
                n = Some(v);
            }
            "tt" => {
                let n = n.ok_or_else(|| Error::parse(lineno, "'tt' before 'vars'"))?;
                let t = TruthTable::parse_hex(n, rest)
                    .map_err(|e| relocate(e, lineno))?;
                form = Some(FunctionForm::Table(t));
            }
            "anf" => {
                let n = n.ok_or_else(|| Error::parse(lineno, "'anf' before 'vars'"))?;
                form = Some(FunctionForm::Expression(parse_anf_at(n, rest, lineno)?));
            }
            other => {
                return Err(Error::parse(lineno, format!("unknown directive '{other}'")));
            }
        }
    }
    form.ok_or_else(|| Error::parse(0, "file has no 'tt' or 'anf' line"))
}

/// Serializes a function file in the given form.
pub fn format_function_file(form: &FunctionForm) -> String {
    match form {
        FunctionForm::Table(t) => format!("vars {}\ntt {}\n", t.var_count(), t.to_hex()),
        FunctionForm::Expression(a) => {
            format!("vars {}\nanf {}\n", a.var_count(), format_anf(a))
        }
    }
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => line[..pos].trim(),
        None => line.trim(),
    }
}

fn relocate(e: Error, lineno: usize) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line: lineno, msg },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "x1*x2*x3 + x1*x2 + x2*x3 + x1 + x2 + 1";

    #[test]
    fn example_expression_round_trips() {
        let f = parse_anf(3, EXAMPLE).unwrap();
        assert_eq!(f.term_count(), 6);
        assert_eq!(format_anf(&f), EXAMPLE);
        assert_eq!(f.to_table().to_hex(), "0x51");
    }

    #[test]
    fn zero_and_constant_expressions() {
        assert!(parse_anf(2, "0").unwrap().is_zero());
        assert_eq!(format_anf(&Anf::zero(2)), "0");
        assert_eq!(format_anf(&Anf::one(2)), "1");
        // x + x cancels.
        assert!(parse_anf(2, "x1 + x1").unwrap().is_zero());
    }

    #[test]
    fn parse_rejects_bad_terms() {
        assert!(parse_anf(2, "x3").is_err());
        assert!(parse_anf(2, "y1").is_err());
        assert!(parse_anf(2, "x1*x1").is_err());
        assert!(parse_anf(2, "x1 + + x2").is_err());
        assert!(parse_anf(2, "").is_err());
    }

    #[test]
    fn function_file_round_trip() {
        let parsed = parse_function_file("# and gate\nvars 2\ntt 0x8\n").unwrap();
        match &parsed {
            FunctionForm::Table(t) => assert_eq!(t.to_hex(), "0x8"),
            _ => panic!("expected table form"),
        }
        let text = format_function_file(&parsed);
        assert_eq!(text, "vars 2\ntt 0x8\n");

        let expr = parse_function_file(&format!("vars 3\nanf {EXAMPLE}\n")).unwrap();
        assert_eq!(expr.to_table().to_hex(), "0x51");
    }

    #[test]
    fn function_file_errors_carry_line_numbers() {
        match parse_function_file("vars 3\ntt 0xzz\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_function_file("tt 0x8\n").is_err());
        assert!(parse_function_file("vars 3\n").is_err());
        assert!(parse_function_file("vars 99\ntt 0x0\n").is_err());
    }
}
