//! JSON forms of problems, invariant tables, recurrences and recursions.
//! Every number is written as an exact string; elements of `ℚ(ℏ)` use the
//! variable `h`, e.g. `"(-1 + h^2)/(2 + h)"`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::rational::{format_rational, parse_rational};
use crate::arith::Polynomial;
use crate::error::FormatError;
use crate::generator::{InvariantTable, ProblemSpec, WeightFunction};
use crate::holonomic::PRecurrence;
use crate::recursion::{GDRecursion, HLevelRelation};
use crate::symfunc::WeightVector;
use crate::{Kh, QPoly, Rational};

fn invalid(field: &'static str, reason: impl Into<String>) -> FormatError {
    FormatError::Invalid {
        field,
        reason: reason.into(),
    }
}

fn rationals(xs: &[String], field: &'static str) -> Result<Vec<Rational>, FormatError> {
    xs.iter()
        .map(|s| parse_rational(s).map_err(|e| invalid(field, format!("{s:?}: {e}"))))
        .collect()
}

fn strings(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(format_rational).collect()
}

fn qpoly(xs: &[String], field: &'static str) -> Result<QPoly, FormatError> {
    Ok(QPoly::new(rationals(xs, field)?))
}

fn poly_strings(p: &QPoly) -> Vec<String> {
    if p.coeffs().is_empty() {
        vec!["0".into()]
    } else {
        strings(p.coeffs())
    }
}

// ---------------------------------------------------------------- ℚ(ℏ)

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> String {
        format!("{what} at byte {}", self.pos)
    }

    fn expr(&mut self) -> Result<Kh, String> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { acc + &t } else { acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Kh, String> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let t = self.unary()?;
            acc = if c == b'*' {
                acc * &t
            } else {
                acc.checked_div(&t).map_err(|_| self.err("division by zero"))?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Kh, String> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Kh, String> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let e = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        let e: u32 = e.parse().map_err(|_| self.err("exponent too large"))?;
        let p = crate::arith::pow(&base, e);
        if neg {
            Kh::one().checked_div(&p).map_err(|_| self.err("division by zero"))
        } else {
            Ok(p)
        }
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Kh, String> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'h') => {
                self.pos += 1;
                Ok(Kh::var())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits().expect("digit present");
                let q = parse_rational(&n).map_err(|e| e.to_string())?;
                Ok(Kh::constant(q))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses an element of `ℚ(ℏ)` written with `+ - * / ^`, parentheses,
/// integers and the variable `h`.
pub fn parse_kh(s: &str) -> Result<Kh, FormatError> {
    let mut p = Parser {
        s: s.as_bytes(),
        pos: 0,
    };
    let v = p.expr().map_err(|e| invalid("h-expression", format!("{s:?}: {e}")))?;
    if p.peek().is_some() {
        return Err(invalid("h-expression", format!("{s:?}: {}", p.err("trailing input"))));
    }
    Ok(v)
}

pub fn format_kh(x: &Kh) -> String {
    x.to_string()
}

// ---------------------------------------------------------------- problems

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WeightJson {
    Rational { num: Vec<String>, den: Vec<String> },
    Exp,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(rename = "G")]
    pub g: WeightJson,
    pub q: Vec<String>,
}

impl From<&ProblemSpec> for ProblemJson {
    fn from(p: &ProblemSpec) -> Self {
        let g = match &p.weight {
            WeightFunction::Rational { num, den } => WeightJson::Rational {
                num: poly_strings(num),
                den: poly_strings(den),
            },
            WeightFunction::Exponential => WeightJson::Exp,
        };
        ProblemJson {
            name: p.name.clone(),
            g,
            q: strings(p.q.entries()),
        }
    }
}

impl TryFrom<&ProblemJson> for ProblemSpec {
    type Error = FormatError;

    fn try_from(j: &ProblemJson) -> Result<Self, FormatError> {
        let weight = match &j.g {
            WeightJson::Rational { num, den } => WeightFunction::rational(qpoly(num, "G.num")?, qpoly(den, "G.den")?)
                .map_err(|e| invalid("G", e.to_string()))?,
            WeightJson::Exp => WeightFunction::Exponential,
        };
        if j.q.is_empty() {
            return Err(invalid("q", "weight vector is empty"));
        }
        let q = WeightVector::new(rationals(&j.q, "q")?);
        Ok(ProblemSpec {
            name: j.name.clone(),
            weight,
            q,
        })
    }
}

pub fn problem_to_json(p: &ProblemSpec) -> String {
    serde_json::to_string_pretty(&ProblemJson::from(p)).expect("serializable")
}

pub fn problem_from_json(s: &str) -> Result<ProblemSpec, FormatError> {
    let j: ProblemJson = serde_json::from_str(s)?;
    ProblemSpec::try_from(&j)
}

// ---------------------------------------------------------------- tables

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub g: i64,
    pub d: i64,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub problem: ProblemJson,
    pub g_max: i64,
    pub d_max: i64,
    #[serde(default = "one")]
    pub stride: i64,
    pub entries: Vec<EntryJson>,
}

fn one() -> i64 {
    1
}

impl From<&InvariantTable> for TableJson {
    fn from(t: &InvariantTable) -> Self {
        TableJson {
            problem: ProblemJson::from(&t.problem),
            g_max: t.g_max,
            d_max: t.d_max,
            stride: t.stride,
            entries: t
                .entries()
                .map(|(g, d, v)| EntryJson {
                    g,
                    d,
                    value: format_rational(v),
                })
                .collect(),
        }
    }
}

impl TryFrom<&TableJson> for InvariantTable {
    type Error = FormatError;

    fn try_from(j: &TableJson) -> Result<Self, FormatError> {
        let problem = ProblemSpec::try_from(&j.problem)?;
        let entries = j
            .entries
            .iter()
            .map(|e| {
                let v = parse_rational(&e.value)
                    .map_err(|err| invalid("entries.value", format!("{:?}: {err}", e.value)))?;
                Ok((e.g, e.d, v))
            })
            .collect::<Result<Vec<_>, FormatError>>()?;
        Ok(InvariantTable::from_entries(
            problem, j.g_max, j.d_max, j.stride, entries,
        ))
    }
}

pub fn table_to_json(t: &InvariantTable) -> String {
    serde_json::to_string_pretty(&TableJson::from(t)).expect("serializable")
}

pub fn table_from_json(s: &str) -> Result<InvariantTable, FormatError> {
    let j: TableJson = serde_json::from_str(s)?;
    InvariantTable::try_from(&j)
}

// ---------------------------------------------------------------- recurrences

/// A coefficient of `n^k`: an `ℏ`-polynomial as a coefficient list, or any
/// element of `ℚ(ℏ)` as an expression string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum KhJson {
    Poly(Vec<String>),
    Expr(String),
}

impl From<&Kh> for KhJson {
    fn from(x: &Kh) -> Self {
        if x.is_polynomial() {
            KhJson::Poly(poly_strings(x.num()))
        } else {
            KhJson::Expr(format_kh(x))
        }
    }
}

impl TryFrom<&KhJson> for Kh {
    type Error = FormatError;

    fn try_from(j: &KhJson) -> Result<Self, FormatError> {
        match j {
            KhJson::Poly(cs) => Ok(Kh::from_poly(qpoly(cs, "coeffs")?)),
            KhJson::Expr(s) => parse_kh(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceJson {
    pub order: usize,
    pub offset: i64,
    /// `coeffs[t][k]` is the coefficient of `n^k` in `p_t(n)`.
    pub coeffs: Vec<Vec<KhJson>>,
    pub initial: Vec<String>,
}

impl From<&PRecurrence<Kh>> for RecurrenceJson {
    fn from(r: &PRecurrence<Kh>) -> Self {
        RecurrenceJson {
            order: r.order(),
            offset: r.offset(),
            coeffs: r
                .coeffs()
                .iter()
                .map(|p| p.coeffs().iter().map(KhJson::from).collect())
                .collect(),
            initial: r.initial().iter().map(format_kh).collect(),
        }
    }
}

impl TryFrom<&RecurrenceJson> for PRecurrence<Kh> {
    type Error = FormatError;

    fn try_from(j: &RecurrenceJson) -> Result<Self, FormatError> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|p| {
                Ok(Polynomial::new(
                    p.iter().map(Kh::try_from).collect::<Result<_, FormatError>>()?,
                ))
            })
            .collect::<Result<Vec<_>, FormatError>>()?;
        let initial = j.initial.iter().map(|s| parse_kh(s)).collect::<Result<Vec<_>, _>>()?;
        let rec = PRecurrence::new(coeffs, j.offset, initial).map_err(|e| invalid("recurrence", e.to_string()))?;
        if rec.order() != j.order {
            return Err(invalid(
                "order",
                format!("declared {}, coefficients give {}", j.order, rec.order()),
            ));
        }
        Ok(rec)
    }
}

pub fn recurrence_to_json(r: &PRecurrence<Kh>) -> String {
    serde_json::to_string_pretty(&RecurrenceJson::from(r)).expect("serializable")
}

pub fn recurrence_from_json(s: &str) -> Result<PRecurrence<Kh>, FormatError> {
    let j: RecurrenceJson = serde_json::from_str(s)?;
    PRecurrence::try_from(&j)
}

// ---------------------------------------------------------------- recursions

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    pub j: usize,
    /// Coefficients of `d^0, d^1, …`; rationals in `gd` form, `ℚ(ℏ)`
    /// expressions in `h` form.
    pub poly_d: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionJson {
    pub form: String,
    pub terms: Vec<TermJson>,
}

/// Either form of a 1-point recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recursion {
    Gd(GDRecursion),
    H(HLevelRelation),
}

impl From<&GDRecursion> for RecursionJson {
    fn from(r: &GDRecursion) -> Self {
        RecursionJson {
            form: "gd".into(),
            terms: r
                .terms()
                .iter()
                .map(|(&(i, j), p)| TermJson {
                    i: Some(i),
                    j,
                    poly_d: poly_strings(p),
                })
                .collect(),
        }
    }
}

impl From<&HLevelRelation> for RecursionJson {
    fn from(r: &HLevelRelation) -> Self {
        RecursionJson {
            form: "h".into(),
            terms: r
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.coeffs().is_empty())
                .map(|(j, p)| TermJson {
                    i: None,
                    j,
                    poly_d: p.coeffs().iter().map(format_kh).collect(),
                })
                .collect(),
        }
    }
}

impl From<&Recursion> for RecursionJson {
    fn from(r: &Recursion) -> Self {
        match r {
            Recursion::Gd(g) => g.into(),
            Recursion::H(h) => h.into(),
        }
    }
}

impl TryFrom<&RecursionJson> for Recursion {
    type Error = FormatError;

    fn try_from(j: &RecursionJson) -> Result<Self, FormatError> {
        match j.form.as_str() {
            "gd" => {
                let terms = j
                    .terms
                    .iter()
                    .map(|t| {
                        let i = t.i.ok_or_else(|| invalid("terms.i", "required in gd form"))?;
                        Ok(((i, t.j), qpoly(&t.poly_d, "terms.poly_d")?))
                    })
                    .collect::<Result<Vec<_>, FormatError>>()?;
                Ok(Recursion::Gd(
                    GDRecursion::new(terms).map_err(|e| invalid("terms", e.to_string()))?,
                ))
            }
            "h" => {
                let span = j.terms.iter().map(|t| t.j + 1).max().unwrap_or(0);
                let mut coeffs = vec![Polynomial::<Kh>::zero(); span];
                for t in &j.terms {
                    let p = t.poly_d.iter().map(|s| parse_kh(s)).collect::<Result<Vec<_>, _>>()?;
                    coeffs[t.j] = coeffs[t.j].clone() + &Polynomial::new(p);
                }
                Ok(Recursion::H(
                    HLevelRelation::new(coeffs).map_err(|e| invalid("terms", e.to_string()))?,
                ))
            }
            other => Err(invalid("form", format!("expected \"gd\" or \"h\", got {other:?}"))),
        }
    }
}

pub fn recursion_to_json(r: &Recursion) -> String {
    serde_json::to_string_pretty(&RecursionJson::from(r)).expect("serializable")
}

pub fn recursion_from_json(s: &str) -> Result<Recursion, FormatError> {
    let j: RecursionJson = serde_json::from_str(s)?;
    Recursion::try_from(&j)
}
