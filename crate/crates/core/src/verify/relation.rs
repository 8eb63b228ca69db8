//! Bracket-word identities with free indices.
//!
//! A relation is `lhs = Σ coeff · gen` where the left side is a tree of
//! explicit commutators/anticommutators over operator leaves, and each
//! coefficient is a scalar times a product of Kronecker deltas over the free
//! indices. Deltas are expanded per index assignment; there is no symbolic
//! delta calculus.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::grading::{BracketKind, Degree};
use crate::ops::{Family, OpId};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RelationError {
    #[error("relation {0:?}: unknown generator {1:?}")]
    UnknownGen(String, String),
    #[error("relation {0:?}: {1} expects {2} indices")]
    Arity(String, String, usize),
    #[error("relation {0:?}: index {1:?} has no range")]
    NoRange(String, String),
    #[error("relation {0:?}: right-hand index {1:?} does not occur on the left")]
    FreeRhsIndex(String, String),
    #[error("bad coefficient {0:?}: {1}")]
    Coeff(String, String),
    #[error("relation file: {0}")]
    Parse(String),
}

/// Coefficient `factor · Π δ(x, y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Coeff {
    pub factor: Scalar,
    pub deltas: Vec<(String, String)>,
}

impl Coeff {
    pub fn num(factor: Scalar) -> Self {
        Coeff {
            factor,
            deltas: Vec::new(),
        }
    }

    pub fn delta(factor: i64, x: &str, y: &str) -> Self {
        Coeff {
            factor: Scalar::int(factor),
            deltas: vec![(x.into(), y.into())],
        }
    }

    pub fn eval(&self, asg: &BTreeMap<String, usize>) -> Scalar {
        if self.deltas.iter().all(|(x, y)| asg[x] == asg[y]) {
            self.factor.clone()
        } else {
            Scalar::zero()
        }
    }

    fn conj(&self) -> Coeff {
        Coeff {
            factor: self.factor.conj(),
            deltas: self.deltas.clone(),
        }
    }

    fn symbols(&self) -> impl Iterator<Item = &String> {
        self.deltas.iter().flat_map(|(x, y)| [x, y])
    }
}

fn parse_factor(tok: &str) -> Option<Scalar> {
    let (num, imag) = match tok.strip_suffix('i') {
        Some(rest) => (rest, true),
        None => (tok, false),
    };
    let v = if num.is_empty() {
        Scalar::one()
    } else {
        Scalar::from_parts(num, "0").ok()?
    };
    if !v.is_exact() {
        return None;
    }
    Some(if imag { &v * &Scalar::i() } else { v })
}

impl std::str::FromStr for Coeff {
    type Err = RelationError;

    /// Grammar: `[-] factor ('*' factor)*` where a factor is a rational
    /// (`2`, `-1/2`), a rational times `i` (`i`, `3i`, `1/2i`), or `delta(x,y)`.
    fn from_str(s: &str) -> Result<Self, RelationError> {
        let err = |why: &str| RelationError::Coeff(s.to_string(), why.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (neg, body) = match compact.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, compact.as_str()),
        };
        if body.is_empty() {
            return Err(err("empty"));
        }
        let mut c = Coeff::num(Scalar::int(if neg { -1 } else { 1 }));
        for tok in body.split('*') {
            if let Some(inner) = tok.strip_prefix("delta(").and_then(|t| t.strip_suffix(')')) {
                let (x, y) = inner.split_once(',').ok_or_else(|| err("delta takes two indices"))?;
                if x.is_empty() || y.is_empty() {
                    return Err(err("empty delta index"));
                }
                c.deltas.push((x.to_string(), y.to_string()));
            } else {
                let f = parse_factor(tok).ok_or_else(|| err(&format!("cannot read factor {tok:?}")))?;
                c.factor = &c.factor * &f;
            }
        }
        Ok(c)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.factor.to_parts();
        let factor = match (re.as_str(), im.as_str()) {
            (r, "0") => r.to_string(),
            ("0", "1") => "i".into(),
            ("0", "-1") => "-i".into(),
            ("0", i) => format!("{i}i"),
            // Not expressible in the grammar; only reachable through the API.
            (r, i) => format!("({r}+{i}i)"),
        };
        let mut parts = Vec::new();
        match factor.as_str() {
            "1" if !self.deltas.is_empty() => {}
            "-1" if !self.deltas.is_empty() => parts.push("-".to_string()),
            _ => parts.push(factor),
        }
        for (x, y) in &self.deltas {
            parts.push(format!("delta({x},{y})"));
        }
        let s = parts.join("*").replacen("-*", "-", 1);
        f.write_str(&s)
    }
}

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Coeff::num(Scalar::int(n))),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Left-hand side tree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Expr {
    Leaf {
        gen: String,
        #[serde(default)]
        indices: Vec<String>,
    },
    Bracket {
        kind: BracketKind,
        args: Box<[Expr; 2]>,
    },
    Sum {
        sum: Vec<SumTerm>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SumTerm {
    pub coeff: Coeff,
    pub expr: Expr,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RhsTerm {
    pub coeff: Coeff,
    pub gen: String,
    #[serde(default)]
    pub indices: Vec<String>,
}

/// Index range: a literal count, or the system's `"M"` / `"N"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IndexRange {
    Count(usize),
    Modes(String),
}

impl IndexRange {
    pub fn resolve(&self, m: usize, n: usize) -> Option<usize> {
        match self {
            IndexRange::Count(c) => Some(*c),
            IndexRange::Modes(s) if s == "M" => Some(m),
            IndexRange::Modes(s) if s == "N" => Some(n),
            IndexRange::Modes(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationExpr {
    pub name: String,
    pub lhs: Expr,
    #[serde(default)]
    pub rhs: Vec<RhsTerm>,
    #[serde(default)]
    pub ranges: BTreeMap<String, IndexRange>,
}

// ---- constructors used by the built-in sets ----

pub fn leaf(gen: &str, idx: &[&str]) -> Expr {
    Expr::Leaf {
        gen: gen.into(),
        indices: idx.iter().map(|s| s.to_string()).collect(),
    }
}

pub fn comm(x: Expr, y: Expr) -> Expr {
    Expr::Bracket {
        kind: BracketKind::Commutator,
        args: Box::new([x, y]),
    }
}

pub fn anti(x: Expr, y: Expr) -> Expr {
    Expr::Bracket {
        kind: BracketKind::Anticommutator,
        args: Box::new([x, y]),
    }
}

pub fn term(coeff: &str, gen: &str, idx: &[&str]) -> RhsTerm {
    RhsTerm {
        coeff: coeff.parse().expect("built-in coefficient"),
        gen: gen.into(),
        indices: idx.iter().map(|s| s.to_string()).collect(),
    }
}

fn family(rel: &str, gen: &str) -> Result<Family, RelationError> {
    Family::from_symbol(gen).ok_or_else(|| RelationError::UnknownGen(rel.into(), gen.into()))
}

impl Expr {
    fn visit_leaves<'a>(&'a self, out: &mut Vec<(&'a str, &'a [String])>) {
        match self {
            Expr::Leaf { gen, indices } => out.push((gen, indices)),
            Expr::Bracket { args, .. } => {
                args[0].visit_leaves(out);
                args[1].visit_leaves(out);
            }
            Expr::Sum { sum } => sum.iter().for_each(|t| t.expr.visit_leaves(out)),
        }
    }

    /// Maximum number of generator factors in any product the tree expands to.
    pub fn word_len(&self) -> usize {
        match self {
            Expr::Leaf { gen, .. } => Family::from_symbol(gen).map_or(0, Family::word_len),
            Expr::Bracket { args, .. } => args[0].word_len() + args[1].word_len(),
            Expr::Sum { sum } => sum.iter().map(|t| t.expr.word_len()).max().unwrap_or(0),
        }
    }

    /// Total degree, if the tree is homogeneous.
    pub fn degree(&self) -> Option<Degree> {
        match self {
            Expr::Leaf { gen, .. } => Family::from_symbol(gen).map(Family::degree),
            Expr::Bracket { args, .. } => Some(args[0].degree()? + args[1].degree()?),
            Expr::Sum { sum } => {
                let ds: BTreeSet<Degree> = sum.iter().map(|t| t.expr.degree()).collect::<Option<_>>()?;
                (ds.len() <= 1).then(|| ds.into_iter().next().unwrap_or(Degree::ZERO))
            }
        }
    }

    /// Hermitian conjugate: `(x ∘ y)† = y† ∘ x†`, coefficients conjugated.
    pub fn dagger(&self) -> Expr {
        match self {
            Expr::Leaf { gen, indices } => {
                let (g, idx) = dagger_leaf(gen, indices);
                Expr::Leaf { gen: g, indices: idx }
            }
            Expr::Bracket { kind, args } => Expr::Bracket {
                kind: *kind,
                args: Box::new([args[1].dagger(), args[0].dagger()]),
            },
            Expr::Sum { sum } => Expr::Sum {
                sum: sum
                    .iter()
                    .map(|t| SumTerm {
                        coeff: t.coeff.conj(),
                        expr: t.expr.dagger(),
                    })
                    .collect(),
            },
        }
    }

    /// Every bracket node as `(kind, left, right)`, outermost first.
    pub fn brackets(&self) -> Vec<(BracketKind, &Expr, &Expr)> {
        let mut out = Vec::new();
        fn walk<'a>(e: &'a Expr, out: &mut Vec<(BracketKind, &'a Expr, &'a Expr)>) {
            match e {
                Expr::Leaf { .. } => {}
                Expr::Bracket { kind, args } => {
                    out.push((*kind, &args[0], &args[1]));
                    walk(&args[0], out);
                    walk(&args[1], out);
                }
                Expr::Sum { sum } => sum.iter().for_each(|t| walk(&t.expr, out)),
            }
        }
        walk(self, &mut out);
        out
    }
}

fn dagger_leaf(gen: &str, indices: &[String]) -> (String, Vec<String>) {
    match Family::from_symbol(gen) {
        Some(f @ (Family::Ma | Family::Mf)) => (f.symbol().into(), indices.iter().rev().cloned().collect()),
        Some(f) => (f.dagger().symbol().into(), indices.to_vec()),
        None => (gen.into(), indices.to_vec()),
    }
}

/// One index assignment of a relation, resolved to concrete operators.
#[derive(Debug, Clone, PartialEq)]
pub enum Resolved {
    Leaf(OpId),
    Bracket(BracketKind, Box<Resolved>, Box<Resolved>),
    Sum(Vec<(Scalar, Resolved)>),
}

/// A leaf as `(generator, index symbols)`.
pub type LeafRef<'a> = (&'a str, &'a [String]);

impl RelationExpr {
    /// Checks generator names, arities and index ranges.
    pub fn validate(&self) -> Result<(), RelationError> {
        let mut leaves = Vec::new();
        self.lhs.visit_leaves(&mut leaves);
        let mut lhs_syms = BTreeSet::new();
        for (gen, idx) in &leaves {
            let f = family(&self.name, gen)?;
            if f.slots().len() != idx.len() {
                return Err(RelationError::Arity(
                    self.name.clone(),
                    gen.to_string(),
                    f.slots().len(),
                ));
            }
            lhs_syms.extend(idx.iter().cloned());
        }
        let mut coeff_syms: Vec<&String> = Vec::new();
        if let Expr::Sum { sum } = &self.lhs {
            coeff_syms.extend(sum.iter().flat_map(|t| t.coeff.symbols()));
        }
        for t in &self.rhs {
            let f = family(&self.name, &t.gen)?;
            if f.slots().len() != t.indices.len() {
                return Err(RelationError::Arity(self.name.clone(), t.gen.clone(), f.slots().len()));
            }
            coeff_syms.extend(t.indices.iter());
            coeff_syms.extend(t.coeff.symbols());
        }
        for s in coeff_syms {
            if !lhs_syms.contains(s) {
                return Err(RelationError::FreeRhsIndex(self.name.clone(), s.clone()));
            }
        }
        for s in &lhs_syms {
            if !self.ranges.contains_key(s) {
                return Err(RelationError::NoRange(self.name.clone(), s.clone()));
            }
        }
        Ok(())
    }

    pub fn symbols(&self) -> Vec<String> {
        let mut leaves = Vec::new();
        self.lhs.visit_leaves(&mut leaves);
        let set: BTreeSet<String> = leaves.iter().flat_map(|(_, i)| i.iter().cloned()).collect();
        set.into_iter().collect()
    }

    pub fn word_len(&self) -> usize {
        self.lhs.word_len()
    }

    /// All index assignments, symbols in sorted order, last symbol fastest.
    pub fn assignments(&self, m: usize, n: usize) -> Result<Vec<BTreeMap<String, usize>>, RelationError> {
        let syms = self.symbols();
        let mut sizes = Vec::with_capacity(syms.len());
        for s in &syms {
            let r = self
                .ranges
                .get(s)
                .and_then(|r| r.resolve(m, n))
                .ok_or_else(|| RelationError::NoRange(self.name.clone(), s.clone()))?;
            sizes.push(r);
        }
        let mut out = Vec::new();
        if sizes.contains(&0) {
            return Ok(out);
        }
        let mut cur = vec![1usize; syms.len()];
        loop {
            out.push(syms.iter().cloned().zip(cur.iter().copied()).collect());
            let mut pos = syms.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                if cur[pos] < sizes[pos] {
                    cur[pos] += 1;
                    break;
                }
                cur[pos] = 1;
            }
        }
    }

    fn op(&self, gen: &str, idx: &[String], asg: &BTreeMap<String, usize>) -> OpId {
        let f = Family::from_symbol(gen).expect("validated");
        let ix: Vec<usize> = idx.iter().map(|s| asg[s]).collect();
        OpId::new(f, &ix)
    }

    pub fn resolve_lhs(&self, asg: &BTreeMap<String, usize>) -> Resolved {
        fn go(rel: &RelationExpr, e: &Expr, asg: &BTreeMap<String, usize>) -> Resolved {
            match e {
                Expr::Leaf { gen, indices } => Resolved::Leaf(rel.op(gen, indices, asg)),
                Expr::Bracket { kind, args } => Resolved::Bracket(
                    *kind,
                    Box::new(go(rel, &args[0], asg)),
                    Box::new(go(rel, &args[1], asg)),
                ),
                Expr::Sum { sum } => {
                    Resolved::Sum(sum.iter().map(|t| (t.coeff.eval(asg), go(rel, &t.expr, asg))).collect())
                }
            }
        }
        go(self, &self.lhs, asg)
    }

    /// Right-hand side with deltas expanded; zero terms dropped.
    pub fn resolve_rhs(&self, asg: &BTreeMap<String, usize>) -> Vec<(Scalar, OpId)> {
        self.rhs
            .iter()
            .filter_map(|t| {
                let c = t.coeff.eval(asg);
                (!c.is_zero()).then(|| (c, self.op(&t.gen, &t.indices, asg)))
            })
            .collect()
    }

    pub fn dagger(&self) -> RelationExpr {
        RelationExpr {
            name: format!("{}†", self.name),
            lhs: self.lhs.dagger(),
            rhs: self
                .rhs
                .iter()
                .map(|t| {
                    let (gen, indices) = dagger_leaf(&t.gen, &t.indices);
                    RhsTerm {
                        coeff: t.coeff.conj(),
                        gen,
                        indices,
                    }
                })
                .collect(),
            ranges: self.ranges.clone(),
        }
    }

    /// For relations of the form `x ∘ y = …` with two leaves.
    pub fn as_pair(&self) -> Option<(BracketKind, LeafRef<'_>, LeafRef<'_>)> {
        match &self.lhs {
            Expr::Bracket { kind, args } => match (&args[0], &args[1]) {
                (Expr::Leaf { gen: g1, indices: i1 }, Expr::Leaf { gen: g2, indices: i2 }) => {
                    Some((*kind, (g1.as_str(), i1.as_slice()), (g2.as_str(), i2.as_slice())))
                }
                _ => None,
            },
            _ => None,
        }
    }
}

fn fmt_expr(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Leaf { gen, indices } => {
            f.write_str(gen)?;
            for i in indices {
                write!(f, "_{i}")?;
            }
            Ok(())
        }
        Expr::Bracket { kind, args } => {
            let (l, r) = match kind {
                BracketKind::Commutator => ("[", "]"),
                BracketKind::Anticommutator => ("{", "}"),
            };
            f.write_str(l)?;
            fmt_expr(&args[0], f)?;
            f.write_str(", ")?;
            fmt_expr(&args[1], f)?;
            f.write_str(r)
        }
        Expr::Sum { sum } => {
            for (n, t) in sum.iter().enumerate() {
                if n > 0 {
                    f.write_str(" + ")?;
                }
                write!(f, "({})·", t.coeff)?;
                fmt_expr(&t.expr, f)?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for RelationExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_expr(&self.lhs, f)?;
        f.write_str(" = ")?;
        if self.rhs.is_empty() {
            return f.write_str("0");
        }
        for (n, t) in self.rhs.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})·{}", t.coeff, t.gen)?;
            for i in &t.indices {
                write!(f, "_{i}")?;
            }
        }
        Ok(())
    }
}

/// Reads a relation-set file: a JSON list of relations.
pub fn parse_relation_set(text: &str) -> Result<Vec<RelationExpr>, RelationError> {
    let rels: Vec<RelationExpr> = serde_json::from_str(text)
        .map_err(|e| RelationError::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    for r in &rels {
        r.validate()?;
    }
    Ok(rels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_grammar() {
        for (s, back) in [
            ("2*delta(k,l)", "2*delta(k,l)"),
            ("-delta(k, m)", "-delta(k,m)"),
            ("delta(a,b)*delta(c,d)", "delta(a,b)*delta(c,d)"),
            ("1/2", "1/2"),
            ("-i", "-i"),
            ("3i*delta(x,y)", "3i*delta(x,y)"),
            ("0", "0"),
        ] {
            let c: Coeff = s.parse().unwrap();
            assert_eq!(c.to_string(), back);
            assert_eq!(c.to_string().parse::<Coeff>().unwrap(), c);
        }
        for s in ["", "delta(k)", "2x", "0.5", "delta(,k)"] {
            assert!(s.parse::<Coeff>().is_err(), "{s}");
        }
    }

    fn sample() -> RelationExpr {
        RelationExpr {
            name: "t".into(),
            lhs: comm(leaf("a", &["k"]), anti(leaf("adag", &["l"]), leaf("a", &["m"]))),
            rhs: vec![term("2*delta(k,l)", "a", &["m"])],
            ranges: [("k", "M"), ("l", "M"), ("m", "M")]
                .into_iter()
                .map(|(k, v)| (k.to_string(), IndexRange::Modes(v.into())))
                .collect(),
        }
    }

    #[test]
    fn assignments_and_resolution() {
        let r = sample();
        r.validate().unwrap();
        assert_eq!(r.word_len(), 3);
        let asg = r.assignments(2, 0).unwrap();
        assert_eq!(asg.len(), 8);
        assert_eq!(asg[1]["m"], 2);
        let rhs = r.resolve_rhs(&asg[0]);
        assert_eq!(rhs, vec![(Scalar::int(2), OpId::gen(Family::A, 1))]);
        assert!(r
            .resolve_rhs(
                &asg[7]
                    .iter()
                    .map(|(k, v)| (k.clone(), if k == "l" { 1 } else { *v }))
                    .collect()
            )
            .is_empty());
        assert!(r.assignments(0, 3).unwrap().is_empty());
    }

    #[test]
    fn dagger_reverses_and_conjugates() {
        let d = sample().dagger();
        assert_eq!(d.to_string(), "[{adag_m, a_l}, adag_k] = (2*delta(k,l))·adag_m");
        assert_eq!(d.dagger().lhs, sample().lhs);
        let m = RelationExpr {
            name: "m".into(),
            lhs: comm(leaf("Ma", &["k", "l"]), leaf("a", &["m"])),
            rhs: vec![term("i", "Ma", &["k", "l"])],
            ranges: BTreeMap::new(),
        };
        assert_eq!(m.dagger().to_string(), "[adag_m, Ma_l_k] = (-i)·Ma_l_k");
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let text = serde_json::to_string(&vec![r.clone()]).unwrap();
        assert!(text.contains(r#""kind":"comm""#));
        assert!(text.contains(r#""ranges":{"k":"M""#));
        assert_eq!(parse_relation_set(&text).unwrap(), vec![r]);
    }

    #[test]
    fn validation_errors() {
        let mut r = sample();
        r.ranges.remove("m");
        assert!(matches!(r.validate(), Err(RelationError::NoRange(..))));
        let mut r = sample();
        r.rhs[0].indices = vec!["z".into()];
        assert!(matches!(r.validate(), Err(RelationError::FreeRhsIndex(..))));
        let mut r = sample();
        r.rhs[0].gen = "b".into();
        assert!(matches!(r.validate(), Err(RelationError::UnknownGen(..))));
        assert!(parse_relation_set("[{]").is_err());
    }
}
