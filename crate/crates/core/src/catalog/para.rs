use std::collections::{BTreeMap, HashMap};

use crate::algebra::{AlgebraBuilder, AlgebraSpec};
use crate::grading::{bracket_kind, Degree};
use crate::ops::{Family, OpId, SYSTEM_FAMILIES};
use crate::scalar::Scalar;
use crate::verify::relation::{Expr, RelationExpr, Resolved};
use crate::verify::sets;

use super::CatalogError;

type Combo = BTreeMap<OpId, Scalar>;

fn canonical_combo(terms: impl IntoIterator<Item = (Scalar, OpId)>) -> Combo {
    let mut out = Combo::new();
    for (c, op) in terms {
        if let Some((id, sign)) = op.canonical() {
            let v = &c * &Scalar::int(sign as i64);
            let e = out.entry(id).or_insert_with(Scalar::zero);
            *e = &*e + &v;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn dagger_combo(x: &Combo) -> Combo {
    canonical_combo(x.iter().map(|(op, c)| (c.conj(), op.dagger())))
}

fn scale(x: &Combo, s: i64) -> Combo {
    x.iter().map(|(op, c)| (*op, c * &Scalar::int(s))).collect()
}

/// Relations whose instances fill the bracket table: the bilinear
/// definitions, generator–bilinear and bilinear–bilinear brackets.
pub fn table_relations() -> Vec<RelationExpr> {
    [sets::eq13(), sets::eq14(), sets::derived(), sets::closure15_19()].concat()
}

/// Brackets `x ∘ y` for every canonical pair, assembled from the relation
/// instances and the three symmetries each instance implies: reversal by the
/// sign rule, Hermitian conjugation, and both. Any two routes to the same
/// pair must agree.
pub fn para_bracket_table(m: usize, n: usize) -> Result<HashMap<(OpId, OpId), Combo>, CatalogError> {
    let mut table: HashMap<(OpId, OpId), Combo> = HashMap::new();
    let mut put = |x: OpId, y: OpId, v: Combo, origin: &str| -> Result<(), CatalogError> {
        match table.get(&(x, y)) {
            Some(old) if *old != v => Err(CatalogError::Inconsistent(format!(
                "{x} ∘ {y}: {origin} gives {} but an earlier relation gave {}",
                show(&v),
                show(old)
            ))),
            Some(_) => Ok(()),
            None => {
                table.insert((x, y), v);
                Ok(())
            }
        }
    };
    for rel in table_relations() {
        let (kind, _, _) = rel.as_pair().expect("table relations are single brackets");
        for asg in rel
            .assignments(m, n)
            .map_err(|e| CatalogError::Inconsistent(e.to_string()))?
        {
            let Resolved::Bracket(_, x, y) = rel.resolve_lhs(&asg) else {
                unreachable!()
            };
            let (Resolved::Leaf(x), Resolved::Leaf(y)) = (*x, *y) else {
                unreachable!()
            };
            let rhs = canonical_combo(rel.resolve_rhs(&asg));
            let origin = format!("{} at {:?}", rel.name, asg);
            let (Some((cx, sx)), Some((cy, sy))) = (x.canonical(), y.canonical()) else {
                if !rhs.is_empty() {
                    return Err(CatalogError::Inconsistent(format!(
                        "{origin}: vanishing left side but {}",
                        show(&rhs)
                    )));
                }
                continue;
            };
            if kind != bracket_kind(cx.degree(), cy.degree()) {
                return Err(CatalogError::Inconsistent(format!(
                    "{origin}: {kind} does not match the degree rule"
                )));
            }
            let v = scale(&rhs, (sx * sy) as i64);
            let rev_sign = -(kind.sign() as i64);
            let vd = dagger_combo(&v);
            put(cx, cy, v.clone(), &origin)?;
            put(cy, cx, scale(&v, rev_sign), &origin)?;
            put(cy.dagger(), cx.dagger(), vd.clone(), &origin)?;
            put(cx.dagger(), cy.dagger(), scale(&vd, rev_sign), &origin)?;
        }
    }
    Ok(table)
}

fn show(x: &Combo) -> String {
    if x.is_empty() {
        return "0".into();
    }
    x.iter()
        .map(|(op, c)| format!("({c})·{op}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// The para-Lie superalgebraic system on `m` boson and `n` fermion modes:
/// the generators and the ten bilinear families, with every bracket taken
/// from the relation tables and the involution pairing each operator with its
/// Hermitian conjugate.
pub fn build_para_lie_super(m: usize, n: usize) -> Result<AlgebraSpec, CatalogError> {
    if m == 0 && n == 0 {
        return Err(CatalogError::Empty);
    }
    let basis = OpId::enumerate(m, n, &SYSTEM_FAMILIES);
    let table = para_bracket_table(m, n)?;
    let mut b = AlgebraBuilder::default();
    for op in &basis {
        b.push_element(op.to_string(), op.degree());
    }
    let mut missing = Vec::new();
    for x in &basis {
        for y in &basis {
            match table.get(&(*x, *y)) {
                Some(v) => b.push_bracket(
                    &x.to_string(),
                    &y.to_string(),
                    v.iter().map(|(op, c)| (op.to_string(), c.clone())).collect(),
                ),
                None => missing.push(format!("{x} ∘ {y}")),
            }
        }
        b.push_involution(&x.to_string(), &x.dagger().to_string(), Scalar::one());
    }
    if !missing.is_empty() {
        return Err(CatalogError::Incomplete(missing));
    }
    b.build().map_err(|e| CatalogError::Inconsistent(e.to_string()))
}

/// A degree for each generator family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GeneratorDegrees {
    pub a: Degree,
    pub adag: Degree,
    pub f: Degree,
    pub fdag: Degree,
}

impl GeneratorDegrees {
    pub fn family(&self, fam: Family) -> Degree {
        use Family::*;
        match fam {
            A => self.a,
            Adag => self.adag,
            F => self.f,
            Fdag => self.fdag,
            Ma => self.adag + self.a,
            Ba => self.a + self.a,
            Badag => self.adag + self.adag,
            Mf => self.fdag + self.f,
            Bf => self.f + self.f,
            Bfdag => self.fdag + self.fdag,
            Fk => self.a + self.f,
            Fkdag => self.adag + self.fdag,
            Q => self.adag + self.f,
            Qdag => self.a + self.fdag,
            Identity => Degree::ZERO,
        }
    }

    fn expr_degree(&self, e: &Expr) -> Degree {
        match e {
            Expr::Leaf { gen, .. } => self.family(Family::from_symbol(gen).expect("known family")),
            Expr::Bracket { args, .. } => self.expr_degree(&args[0]) + self.expr_degree(&args[1]),
            Expr::Sum { sum } => sum.first().map_or(Degree::ZERO, |t| self.expr_degree(&t.expr)),
        }
    }

    /// Whether every displayed bracket of the trilinear, definition and mixed
    /// relations has the kind the degree rule assigns.
    pub fn consistent(&self) -> bool {
        [sets::eq12(), sets::eq13(), sets::eq14()].concat().iter().all(|r| {
            r.lhs
                .brackets()
                .into_iter()
                .all(|(kind, x, y)| kind == bracket_kind(self.expr_degree(x), self.expr_degree(y)))
        })
    }
}

/// Exhaustive search over all 4⁴ degree choices for `a, a†, f, f†`; returns
/// those under which the displayed bracket kinds agree with the degree rule.
pub fn consistent_degree_assignments() -> Vec<GeneratorDegrees> {
    let mut out = Vec::new();
    for a in Degree::ALL {
        for adag in Degree::ALL {
            for f in Degree::ALL {
                for fdag in Degree::ALL {
                    let g = GeneratorDegrees { a, adag, f, fdag };
                    if g.consistent() {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}
