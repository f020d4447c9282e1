//! Line-oriented `.alg` structure files.
//!
//! ```text
//! # comment
//! dim = 4
//! params = a, b
//! basis = e1, e2, e3, e4
//! bracket e1 e2 = a*e3 - e4
//! metric diag = [1, 1, -1, -1]
//! metric e1 e3 = b          # alternative to `diag`, one entry per line
//! J e1 = e3
//! ```
//!
//! Without `basis` the names default to `e1..en`; without `metric` the split
//! diagonal form is used; without `J` lines the standard `J e_i = e_{n+i}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::liealg::{BracketSpec, LieAlgebra};
use crate::linalg::PolyMatrix;
use crate::norden::{ComplexStructure, Metric, NordenStructure};
use crate::poly::{parse_poly, Monomial, Poly, Scalar, Vars};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricSpec {
    SplitDefault,
    Diagonal(Vec<Scalar>),
    /// Upper-triangular entries keyed by `(min, max)`; the rest are zero.
    Entries(BTreeMap<(usize, usize), Poly>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFile {
    pub dim: usize,
    pub params: Vars,
    pub basis: Vec<String>,
    /// In file order, with the index order as written.
    pub brackets: Vec<BracketSpec>,
    pub metric: MetricSpec,
    /// `(a, image of e_a)` in file order; empty means the standard structure.
    pub j: Vec<(usize, Vec<Poly>)>,
}

impl StructureFile {
    pub fn to_structure(&self) -> Result<NordenStructure, Error> {
        let alg = LieAlgebra::from_brackets(&self.params, self.basis.clone(), &self.brackets)?;
        let metric = match &self.metric {
            MetricSpec::SplitDefault => Metric::split_diagonal(&self.params, self.dim)?,
            MetricSpec::Diagonal(d) => Metric::diagonal(&self.params, d)?,
            MetricSpec::Entries(m) => Metric::new(PolyMatrix::from_fn(self.dim, |a, b| {
                m.get(&(a.min(b), a.max(b)))
                    .cloned()
                    .unwrap_or_else(|| Poly::zero(&self.params))
            }))?,
        };
        let j = if self.j.is_empty() {
            ComplexStructure::standard(&self.params, self.dim)?
        } else {
            let cols: BTreeMap<usize, &Vec<Poly>> = self.j.iter().map(|(a, v)| (*a, v)).collect();
            ComplexStructure::new(PolyMatrix::from_fn(self.dim, |k, a| cols[&a][k].clone()))
        };
        NordenStructure::new(alg, metric, j)
    }
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    /// 1-based column of a subslice of this line.
    fn column_of(&self, part: &str) -> usize {
        let offset = part.as_ptr() as usize - self.text.as_ptr() as usize;
        self.text[..offset].chars().count() + 1
    }

    /// Splits at the first `=`; both sides trimmed.
    fn assignment<'s>(&self, after_key: &'s str) -> Result<(&'s str, &'s str), ParseError> {
        let (lhs, rhs) = after_key
            .split_once('=')
            .ok_or_else(|| self.err(self.column_of(after_key), "expected `=`"))?;
        let rhs = rhs.trim();
        if rhs.is_empty() {
            return Err(self.err(self.text.len() + 1, "missing value after `=`"));
        }
        Ok((lhs.trim(), rhs))
    }

    fn names<'b>(&self, list: &'b str) -> Result<Vec<&'b str>, ParseError> {
        list.split(',')
            .map(|n| {
                let n = n.trim();
                if is_identifier(n) {
                    Ok(n)
                } else {
                    Err(self.err(self.column_of(list), format!("invalid name `{n}`")))
                }
            })
            .collect()
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_') && chars.all(|c| c.is_alphanumeric() || c == '_')
}

fn strip_comment(text: &str) -> &str {
    match text.find('#') {
        Some(p) => &text[..p],
        None => text,
    }
}

fn split_key(text: &str) -> (&str, &str) {
    let t = text.trim_start();
    let end = t.find(|c: char| c.is_whitespace() || c == '=').unwrap_or(t.len());
    (&t[..end], &t[end..])
}

struct Header {
    dim: Option<(usize, usize)>,
    params: Option<(usize, Vec<String>)>,
    basis: Option<(usize, Vec<String>)>,
}

pub fn parse_structure(text: &str) -> Result<StructureFile, ParseError> {
    let lines: Vec<Line> = text
        .lines()
        .enumerate()
        .map(|(i, l)| Line {
            number: i + 1,
            text: strip_comment(l),
        })
        .filter(|l| !l.text.trim().is_empty())
        .collect();

    let mut header = Header {
        dim: None,
        params: None,
        basis: None,
    };
    let mut body = Vec::new();
    for line in &lines {
        let (key, rest) = split_key(line.text);
        let key_col = line.column_of(key);
        let already = |seen: bool| {
            if seen {
                Err(line.err(key_col, format!("`{key}` given twice")))
            } else {
                Ok(())
            }
        };
        match key {
            "dim" => {
                already(header.dim.is_some())?;
                let (lhs, rhs) = line.assignment(rest)?;
                if !lhs.is_empty() {
                    return Err(line.err(line.column_of(lhs), "unexpected token before `=`"));
                }
                let n: usize = rhs
                    .parse()
                    .map_err(|_| line.err(line.column_of(rhs), format!("invalid dimension `{rhs}`")))?;
                header.dim = Some((n, line.number));
            }
            "params" | "basis" => {
                let slot = if key == "params" {
                    &mut header.params
                } else {
                    &mut header.basis
                };
                already(slot.is_some())?;
                let (lhs, rhs) = line.assignment(rest)?;
                if !lhs.is_empty() {
                    return Err(line.err(line.column_of(lhs), "unexpected token before `=`"));
                }
                let names = line.names(rhs)?;
                let mut seen = std::collections::BTreeSet::new();
                for n in &names {
                    if !seen.insert(*n) {
                        return Err(line.err(line.column_of(rhs), format!("`{n}` declared twice")));
                    }
                }
                *slot = Some((line.number, names.into_iter().map(String::from).collect()));
            }
            "bracket" | "metric" | "J" => body.push((key, rest, line)),
            "" => return Err(line.err(key_col, "expected a key")),
            other => return Err(line.err(key_col, format!("unknown key `{other}`"))),
        }
    }

    let (dim, basis) = match (header.dim, header.basis) {
        (Some((d, _)), Some((bl, b))) => {
            if b.len() != d {
                return Err(ParseError {
                    line: bl,
                    column: 1,
                    message: format!("basis has {} names but dim = {d}", b.len()),
                });
            }
            (d, b)
        }
        (Some((d, _)), None) => (d, (1..=d).map(|i| format!("e{i}")).collect()),
        (None, Some((_, b))) => (b.len(), b),
        (None, None) => {
            return Err(ParseError {
                line: lines.last().map_or(1, |l| l.number),
                column: 1,
                message: "missing `dim`".into(),
            })
        }
    };
    let params: Vec<String> = header.params.map(|(_, p)| p).unwrap_or_default();
    if let Some(clash) = params.iter().find(|p| basis.contains(p)) {
        return Err(ParseError {
            line: lines.first().map_or(1, |l| l.number),
            column: 1,
            message: format!("`{clash}` is both a parameter and a basis name"),
        });
    }
    let ctx = Context {
        params: Vars::new(params.clone()),
        combined: Vars::new(params.iter().chain(&basis).cloned()),
        basis,
    };

    let mut brackets: Vec<BracketSpec> = Vec::new();
    let mut metric = MetricSpec::SplitDefault;
    let mut metric_line: Option<usize> = None;
    let mut j: Vec<(usize, Vec<Poly>)> = Vec::new();
    let mut first_j_line = None;
    for (key, rest, line) in body {
        let (lhs, rhs) = line.assignment(rest)?;
        let targets: Vec<&str> = lhs.split_whitespace().collect();
        match key {
            "bracket" => {
                let [a, b] = ctx.basis_pair(line, lhs, &targets)?;
                if a == b {
                    return Err(line.err(line.column_of(lhs), format!("bracket of `{}` with itself", targets[0])));
                }
                if brackets
                    .iter()
                    .any(|(p, q, _)| (*p, *q) == (a, b) || (*p, *q) == (b, a))
                {
                    return Err(line.err(
                        line.column_of(lhs),
                        format!("duplicate bracket `{} {}`", targets[0], targets[1]),
                    ));
                }
                brackets.push((a, b, ctx.lincomb(line, rhs)?));
            }
            "J" => {
                if targets.len() != 1 {
                    return Err(line.err(line.column_of(lhs), "expected one basis name after `J`"));
                }
                let a = ctx.basis_index(line, lhs, targets[0])?;
                if j.iter().any(|(p, _)| *p == a) {
                    return Err(line.err(line.column_of(lhs), format!("`J {}` given twice", targets[0])));
                }
                first_j_line.get_or_insert(line.number);
                j.push((a, ctx.lincomb(line, rhs)?));
            }
            _ => {
                if targets == ["diag"] {
                    if metric_line.is_some() {
                        return Err(line.err(line.column_of(lhs), "metric given twice"));
                    }
                    metric_line = Some(line.number);
                    metric = MetricSpec::Diagonal(ctx.diagonal(line, rhs, dim)?);
                    continue;
                }
                let [a, b] = ctx.basis_pair(line, lhs, &targets)?;
                let value = ctx.poly(line, rhs, &ctx.params)?;
                let entries = match &mut metric {
                    MetricSpec::SplitDefault => {
                        metric_line = Some(line.number);
                        metric = MetricSpec::Entries(BTreeMap::new());
                        match &mut metric {
                            MetricSpec::Entries(m) => m,
                            _ => unreachable!(),
                        }
                    }
                    MetricSpec::Entries(m) => m,
                    MetricSpec::Diagonal(_) => {
                        return Err(line.err(line.column_of(lhs), "metric entry after `metric diag`"));
                    }
                };
                if entries.insert((a.min(b), a.max(b)), value).is_some() {
                    return Err(line.err(line.column_of(lhs), "metric entry given twice"));
                }
            }
        }
    }
    if let Some(line) = first_j_line {
        if let Some(missing) = (0..dim).find(|a| j.iter().all(|(p, _)| p != a)) {
            return Err(ParseError {
                line,
                column: 1,
                message: format!("no `J {}` line", ctx.basis[missing]),
            });
        }
    }
    Ok(StructureFile {
        dim,
        params: ctx.params,
        basis: ctx.basis,
        brackets,
        metric,
        j,
    })
}

struct Context {
    params: Vars,
    combined: Vars,
    basis: Vec<String>,
}

impl Context {
    fn basis_index(&self, line: &Line, region: &str, name: &str) -> Result<usize, ParseError> {
        self.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| line.err(line.column_of(region), format!("undeclared basis name `{name}`")))
    }

    fn basis_pair(&self, line: &Line, region: &str, targets: &[&str]) -> Result<[usize; 2], ParseError> {
        match targets {
            [a, b] => Ok([self.basis_index(line, region, a)?, self.basis_index(line, region, b)?]),
            _ => Err(line.err(line.column_of(region), "expected two basis names")),
        }
    }

    fn poly(&self, line: &Line, text: &str, vars: &Vars) -> Result<Poly, ParseError> {
        parse_poly(text, vars).map_err(|e| line.err(line.column_of(text) + e.column - 1, e.message))
    }

    /// Coefficients of `sum c_k e_k`, each `c_k` a polynomial in the parameters.
    fn lincomb(&self, line: &Line, text: &str) -> Result<Vec<Poly>, ParseError> {
        let p = self.poly(line, text, &self.combined)?;
        let np = self.params.len();
        let mut coeffs: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); self.basis.len()];
        for (m, c) in p.terms() {
            let e = m.exponents();
            let basis_exp = &e[np..];
            let degree: u32 = basis_exp.iter().map(|&x| u32::from(x)).sum();
            if degree != 1 {
                return Err(line.err(line.column_of(text), "expected a linear combination of basis names"));
            }
            let k = basis_exp.iter().position(|&x| x == 1).expect("degree one");
            coeffs[k].push((Monomial::from_exponents(e[..np].to_vec()), c.clone()));
        }
        Ok(coeffs.into_iter().map(|t| Poly::from_terms(&self.params, t)).collect())
    }

    fn diagonal(&self, line: &Line, text: &str, dim: usize) -> Result<Vec<Scalar>, ParseError> {
        let inner = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| line.err(line.column_of(text), "expected `[ ... ]`"))?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != dim {
            return Err(line.err(
                line.column_of(text),
                format!("metric diagonal has {} entries but dim = {dim}", parts.len()),
            ));
        }
        parts
            .into_iter()
            .map(|part| {
                self.poly(line, part, &Vars::empty())?
                    .constant_value()
                    .ok_or_else(|| line.err(line.column_of(part), "expected a number"))
            })
            .collect()
    }
}

fn format_lincomb(coeffs: &[Poly], basis: &[String]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .zip(basis)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, name)| {
            let s = c.to_string();
            match s.as_str() {
                "1" => name.clone(),
                "-1" => format!("-{name}"),
                _ if c.num_terms() == 1 => format!("{s}*{name}"),
                _ => format!("({s})*{name}"),
            }
        })
        .collect();
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = terms[0].clone();
    for t in &terms[1..] {
        match t.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
    }
    out
}

/// Canonical text; `parse_structure(&serialize(f)) == Ok(f)`.
pub fn serialize(f: &StructureFile) -> String {
    let mut out = format!("dim = {}\n", f.dim);
    if !f.params.is_empty() {
        out += &format!("params = {}\n", f.params.names().join(", "));
    }
    out += &format!("basis = {}\n", f.basis.join(", "));
    for (a, b, c) in &f.brackets {
        out += &format!(
            "bracket {} {} = {}\n",
            f.basis[*a],
            f.basis[*b],
            format_lincomb(c, &f.basis)
        );
    }
    match &f.metric {
        MetricSpec::SplitDefault => {}
        MetricSpec::Diagonal(d) => {
            let entries: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            out += &format!("metric diag = [{}]\n", entries.join(", "));
        }
        MetricSpec::Entries(m) => {
            for ((a, b), v) in m {
                out += &format!("metric {} {} = {}\n", f.basis[*a], f.basis[*b], v);
            }
        }
    }
    for (a, img) in &f.j {
        out += &format!("J {} = {}\n", f.basis[*a], format_lincomb(img, &f.basis));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norden::validate_norden;

    #[test]
    fn minimal_file_is_abelian() {
        let f = parse_structure("dim = 2\n").unwrap();
        assert_eq!(f.basis, ["e1", "e2"]);
        let s = f.to_structure().unwrap();
        assert!(s.algebra().jacobi_defect().is_zero());
        assert_eq!(
            s.algebra(),
            &LieAlgebra::from_brackets(&Vars::empty(), f.basis.clone(), &[]).unwrap()
        );
        assert!(validate_norden(&s).is_valid(2));
    }

    #[test]
    fn brackets_and_linear_combinations() {
        let text = "params = a, b\nbasis = e1, e2, e3, e4\nbracket e1 e2 = a*e3 - (a + b)*e4 # c\n";
        let f = parse_structure(text).unwrap();
        assert_eq!(f.dim, 4);
        let (i, j, c) = &f.brackets[0];
        assert_eq!((*i, *j), (0, 1));
        let shown: Vec<String> = c.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["0", "0", "a", "-a - b"]);
        let again = parse_structure(&serialize(&f)).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn self_bracket_rejected() {
        let e = parse_structure("dim = 2\nbracket e1 e1 = e2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("itself"));
    }

    #[test]
    fn error_positions() {
        let e = parse_structure("dim = 2\nfoo = 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        assert!(e.message.contains("unknown key"));
        let e = parse_structure("dim = 2\nbracket e1 e3 = e2\n").unwrap_err();
        assert!(e.message.contains("`e3`"));
        let e = parse_structure("dim = 2\nbracket e1 e2 = e1 * e2\n").unwrap_err();
        assert!(e.message.contains("linear"));
        let e = parse_structure("dim = 2\nbracket e1 e2 = 2 +* e1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 20));
        let e = parse_structure("dim = 2\nmetric diag = [1, -1, 1]\n").unwrap_err();
        assert!(e.message.contains("3 entries"));
        let e = parse_structure("dim = 2\nbracket e1 e2 = e1\nbracket e2 e1 = e2\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_structure("dim = 2\nJ e1 = e2\n").unwrap_err();
        assert!(e.message.contains("J e2"));
    }

    #[test]
    fn metric_entries_and_j() {
        let text = "dim = 2\nparams = t\nmetric e1 e2 = 1\nmetric e1 e1 = t\nmetric e2 e2 = 0\nJ e1 = t*e1 + e2\nJ e2 = -(1 + t^2)*e1 - t*e2\n";
        let f = parse_structure(text).unwrap();
        assert!(matches!(f.metric, MetricSpec::Entries(ref m) if m.len() == 3));
        assert_eq!(parse_structure(&serialize(&f)).unwrap(), f);
        let s = f.to_structure().unwrap();
        let v = validate_norden(&s);
        assert!(v.j_squared_ok);
    }
}
