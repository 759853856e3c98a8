//! Graded presentations: generators, bracket expressions and relations.

use std::fmt;

use serde_json::Value;

use super::free::Poly;
use crate::error::{Error, Result};
use crate::linalg::QMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    /// Degree in the root lattice.
    pub degree: Vec<i64>,
    /// `+1` for raising, `-1` for lowering generators.
    pub sign: i8,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: Vec<i64>) -> Self {
        let sign = if degree.iter().all(|&d| d >= 0) {
            1
        } else if degree.iter().all(|&d| d <= 0) {
            -1
        } else {
            0
        };
        Generator { name: name.into(), degree, sign }
    }
}

/// Bracket monomial in the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Gen(usize),
    Bracket(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn bracket(a: Expr, b: Expr) -> Expr {
        Expr::Bracket(Box::new(a), Box::new(b))
    }

    /// `(ad x)^k y`.
    pub fn ad_power(x: &Expr, k: u32, y: Expr) -> Expr {
        (0..k).fold(y, |acc, _| Expr::bracket(x.clone(), acc))
    }

    /// Right-normed `[g_1,[g_2,[...,g_k]]]`.
    pub fn right_normed(gens: &[usize]) -> Expr {
        let (last, rest) = gens.split_last().expect("nonempty");
        rest.iter().rev().fold(Expr::Gen(*last), |acc, &g| Expr::bracket(Expr::Gen(g), acc))
    }

    pub fn letters(&self, count: usize) -> Vec<u32> {
        let mut out = vec![0; count];
        self.count_into(&mut out);
        out
    }

    fn count_into(&self, out: &mut [u32]) {
        match self {
            Expr::Gen(g) => out[*g] += 1,
            Expr::Bracket(a, b) => {
                a.count_into(out);
                b.count_into(out);
            }
        }
    }

    pub fn height(&self) -> usize {
        match self {
            Expr::Gen(_) => 1,
            Expr::Bracket(a, b) => a.height() + b.height(),
        }
    }

    pub fn max_generator(&self) -> usize {
        match self {
            Expr::Gen(g) => *g,
            Expr::Bracket(a, b) => a.max_generator().max(b.max_generator()),
        }
    }

    pub fn eval(&self) -> Poly {
        match self {
            Expr::Gen(g) => Poly::letter(*g as u8),
            Expr::Bracket(a, b) => a.eval().bracket(&b.eval()),
        }
    }

    pub fn display<'a>(&'a self, gens: &'a [Generator]) -> impl fmt::Display + 'a {
        struct Show<'a>(&'a Expr, &'a [Generator]);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                match self.0 {
                    Expr::Gen(g) => write!(f, "{}", self.1[*g].name),
                    Expr::Bracket(a, b) => write!(f, "[{},{}]", Show(a, self.1), Show(b, self.1)),
                }
            }
        }
        Show(self, gens)
    }

    /// Parses `x1`, `[a,b]` or nested brackets over the generator names.
    pub fn parse(src: &str, gens: &[Generator]) -> Result<Expr> {
        let tokens: Vec<String> = tokenize(src);
        let mut pos = 0;
        let e = parse_tokens(&tokens, &mut pos, gens)?;
        if pos != tokens.len() {
            return Err(Error::Parse(format!("trailing input in expression {src:?}")));
        }
        Ok(e)
    }

    pub fn from_json(v: &Value, gens: &[Generator]) -> Result<Expr> {
        match v {
            Value::String(s) => lookup(s, gens).map(Expr::Gen),
            Value::Array(a) if a.len() == 2 => Ok(Expr::bracket(Expr::from_json(&a[0], gens)?, Expr::from_json(&a[1], gens)?)),
            _ => Err(Error::Parse(format!("expected a generator name or a pair, got {v}"))),
        }
    }
}

fn tokenize(src: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in src.chars() {
        if matches!(ch, '[' | ']' | ',') || ch.is_whitespace() {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            if !ch.is_whitespace() {
                out.push(ch.to_string());
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_tokens(t: &[String], pos: &mut usize, gens: &[Generator]) -> Result<Expr> {
    let tok = t.get(*pos).ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
    *pos += 1;
    if tok != "[" {
        return lookup(tok, gens).map(Expr::Gen);
    }
    let a = parse_tokens(t, pos, gens)?;
    expect(t, pos, ",")?;
    let b = parse_tokens(t, pos, gens)?;
    expect(t, pos, "]")?;
    Ok(Expr::bracket(a, b))
}

fn expect(t: &[String], pos: &mut usize, want: &str) -> Result<()> {
    if t.get(*pos).map(String::as_str) != Some(want) {
        return Err(Error::Parse(format!("expected {want:?} at token {}", *pos + 1)));
    }
    *pos += 1;
    Ok(())
}

fn lookup(name: &str, gens: &[Generator]) -> Result<usize> {
    gens.iter().position(|g| g.name == name).ok_or_else(|| Error::Parse(format!("unknown generator {name:?}")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    /// A bracket monomial that vanishes.
    Zero(Expr),
    /// `(ad x)^power y = 0`.
    AdPower { x: usize, power: u32, y: usize },
}

impl Relation {
    pub fn expr(&self) -> Expr {
        match self {
            Relation::Zero(e) => e.clone(),
            Relation::AdPower { x, power, y } => Expr::ad_power(&Expr::Gen(*x), *power, Expr::Gen(*y)),
        }
    }

    pub fn display<'a>(&'a self, gens: &'a [Generator]) -> impl fmt::Display + 'a {
        struct Show<'a>(&'a Relation, &'a [Generator]);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                match self.0 {
                    Relation::Zero(e) => write!(f, "{} = 0", e.display(self.1)),
                    Relation::AdPower { x, power, y } => write!(f, "(ad {})^{} {} = 0", self.1[*x].name, power, self.1[*y].name),
                }
            }
        }
        Show(self, gens)
    }
}

/// Kills every component of height at least `min_height` whose degree `γ`
/// has `(γ, γ) > 2` under `form`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillRule {
    pub form: QMatrix,
    pub min_height: u32,
}

/// `(ad a)^power b = 0` for every `a` of degree `acting` and `b` of degree `target`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Constraint {
    pub acting: Vec<i64>,
    pub target: Vec<i64>,
    pub power: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PraConstraints {
    pub constraints: Vec<Constraint>,
    /// Number of bases the constraints were read from.
    pub bases: usize,
    /// The basis enumeration was exhausted within its bounds.
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPresentation {
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
    pub kill: Option<KillRule>,
    pub pra: Option<PraConstraints>,
    /// Suggested degree cap.
    pub cap: Option<u32>,
    /// Dimension reported for the zero lattice degree.
    pub cartan: Option<usize>,
}

impl GradedPresentation {
    pub fn new(generators: Vec<Generator>, relations: Vec<Relation>) -> Result<Self> {
        let p = GradedPresentation { generators, relations, kill: None, pra: None, cap: None, cartan: None };
        p.check()?;
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.generators.first().map_or(0, |g| g.degree.len())
    }

    pub fn degree_of(&self, letters: &[u32]) -> Vec<i64> {
        let mut out = vec![0; self.rank()];
        for (g, &c) in self.generators.iter().zip(letters) {
            for (o, d) in out.iter_mut().zip(&g.degree) {
                *o += d * c as i64;
            }
        }
        out
    }

    pub fn check(&self) -> Result<()> {
        if self.generators.is_empty() || self.generators.len() > 255 {
            return Err(Error::InvalidArgument("need between 1 and 255 generators".into()));
        }
        let r = self.rank();
        if self.generators.iter().any(|g| g.degree.len() != r) {
            return Err(Error::InvalidArgument("generator degrees have different lengths".into()));
        }
        for rel in &self.relations {
            let bad = match rel {
                Relation::Zero(e) => e.max_generator() >= self.generators.len(),
                Relation::AdPower { x, power, y } => *power == 0 || *x >= self.generators.len() || *y >= self.generators.len(),
            };
            if bad {
                return Err(Error::InvalidArgument(format!("malformed relation {rel:?}")));
            }
        }
        Ok(())
    }

    /// Reads `{"generators": [{"name", "degree"}], "relations": [{"zero": tree} | {"ad": [x, k, y]}], "degree": D}`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let gens = v["generators"].as_array().ok_or_else(|| Error::Parse("missing \"generators\" array".into()))?;
        let mut generators = Vec::new();
        for g in gens {
            let name = g["name"].as_str().ok_or_else(|| Error::Parse("generator without a name".into()))?;
            let degree = g["degree"]
                .as_array()
                .ok_or_else(|| Error::Parse(format!("generator {name} without a degree")))?
                .iter()
                .map(|d| d.as_i64().ok_or_else(|| Error::Parse(format!("non-integer degree for {name}"))))
                .collect::<Result<Vec<i64>>>()?;
            let mut gen = Generator::new(name, degree);
            if let Some(s) = g.get("sign").and_then(Value::as_i64) {
                gen.sign = s.signum() as i8;
            }
            generators.push(gen);
        }
        let mut relations = Vec::new();
        for r in v["relations"].as_array().map(Vec::as_slice).unwrap_or(&[]) {
            if let Some(e) = r.get("zero") {
                let e = match e {
                    Value::String(s) if s.starts_with('[') => Expr::parse(s, &generators)?,
                    _ => Expr::from_json(e, &generators)?,
                };
                relations.push(Relation::Zero(e));
            } else if let Some(Value::Array(a)) = r.get("ad") {
                let name = |k: usize| a.get(k).and_then(Value::as_str).ok_or_else(|| Error::Parse("\"ad\" expects [x, k, y]".into()));
                let power = a.get(1).and_then(Value::as_u64).ok_or_else(|| Error::Parse("\"ad\" expects a positive power".into()))?;
                relations.push(Relation::AdPower { x: lookup(name(0)?, &generators)?, power: power as u32, y: lookup(name(2)?, &generators)? });
            } else {
                return Err(Error::Parse(format!("unrecognized relation {r}")));
            }
        }
        let mut p = GradedPresentation::new(generators, relations)?;
        p.cap = v.get("degree").and_then(Value::as_u64).map(|d| d as u32);
        Ok(p)
    }
}
