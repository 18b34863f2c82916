//! Equation catalogs. Each equation is a schema over uppercase variables and
//! is checked by instantiating the variables with random terms.

use crate::error::{Error, Result};
use crate::evaltree::{ce, fe, se, Tree};
use crate::terms::{parse_term, Language, Term};

/// Which terms a schema ranges over and how they are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemaLogic {
    /// FT-terms under full evaluation.
    Ffel,
    /// ST-terms under short-circuit evaluation.
    Fscl,
    /// CT-terms under conditional evaluation.
    Conditional,
    /// Mixed terms under conditional evaluation.
    Mixed,
}

impl SchemaLogic {
    pub fn language(self) -> Language {
        match self {
            SchemaLogic::Ffel => Language::Ft,
            SchemaLogic::Fscl => Language::St,
            SchemaLogic::Conditional => Language::Ct,
            SchemaLogic::Mixed => Language::Mixed,
        }
    }

    pub fn eval(self, t: &Term) -> Result<Tree> {
        match self {
            SchemaLogic::Ffel => fe(t),
            SchemaLogic::Fscl => se(t),
            SchemaLogic::Conditional | SchemaLogic::Mixed => ce(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSchema {
    pub name: &'static str,
    pub lhs: Term,
    pub rhs: Term,
    pub logic: SchemaLogic,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub name: &'static str,
    pub logic: SchemaLogic,
    pub schemas: Vec<EquationSchema>,
}

const EQ_FFEL: &[(&str, &str)] = &[
    ("FEL1", "F = !T"),
    ("FEL2", "X | Y = !(!X & !Y)"),
    ("FEL3", "!!X = X"),
    ("FEL4", "(X & Y) & Z = X & (Y & Z)"),
    ("FEL5", "T & X = X"),
    ("FEL6", "X & T = X"),
    ("FEL7", "X & F = F & X"),
    ("FEL8", "X & F = !X & F"),
    ("FEL9", "(X & F) | Y = (X | T) & Y"),
    ("FEL10", "X | (Y & F) = X & (Y | T)"),
];

const EQ_FSCL: &[(&str, &str)] = &[
    ("SCL1", "F = !T"),
    ("SCL2", "X || Y = !(!X && !Y)"),
    ("SCL3", "!!X = X"),
    ("SCL4", "(X && Y) && Z = X && (Y && Z)"),
    ("SCL5", "T && X = X"),
    ("SCL6", "X && T = X"),
    ("SCL7", "F && X = F"),
    ("SCL8", "X && F = !X && F"),
    ("SCL9", "(X && F) || Y = (X || T) && Y"),
    (
        "SCL10",
        "(X && Y) || (Z && F) = (X || (Z && F)) && (Y || (Z && F))",
    ),
];

const CP: &[(&str, &str)] = &[
    ("CP1", "T ? X : Y = X"),
    ("CP2", "F ? X : Y = Y"),
    ("CP3", "X ? T : F = X"),
    ("CP4", "(Z ? Y : U) ? X : V = Z ? (Y ? X : V) : (U ? X : V)"),
];

const CP_S: &[(&str, &str)] = &[
    ("CPs1", "!X = X ? F : T"),
    ("CPs2", "X && Y = X ? Y : F"),
    ("CPs3", "X || Y = X ? T : Y"),
];

const CP_F: &[(&str, &str)] = &[
    ("CPf1", "!X = X ? F : T"),
    ("CPf2", "X & Y = X ? Y : (Y ? F : F)"),
    ("CPf3", "X | Y = X ? (Y ? T : T) : Y"),
];

const GENERAL_EXT: &[(&str, &str)] = &[
    ("Ext1", "X & Y = (X || (Y && F)) && Y"),
    ("Ext2", "X | Y = (X && (Y || T)) || Y"),
];

const DERIVED_FEL: &[(&str, &str)] = &[
    ("feqs1", "X & (Y & F) = !X & (Y & F)"),
    ("feqs2", "(X | T) & Y = !(X | T) | Y"),
    ("feqs3", "X | (Y & (Z | T)) = (X | Y) & (Z | T)"),
    ("feqs4", "X & (Y & (Z & F)) = (X | Y) & (Z & F)"),
    ("feqs5", "!X & (Y | T) = !(X & (Y | T))"),
];

const DERIVED_SCL: &[(&str, &str)] = &[
    (
        "seqs1",
        "(X || Y) && (Z && F) = (!X || (Z && F)) && (Y && (Z && F))",
    ),
    (
        "seqs2",
        "(X || (Y && F)) && (Z && F) = (!X || (Z && F)) && (Y && F)",
    ),
    (
        "seqs3",
        "(X && (Y || T)) || (Z && F) = (X || (Z && F)) && (Y || T)",
    ),
    ("seqs4", "(X || T) && !Y = !((X || T) && Y)"),
    (
        "seqs5",
        "(X && (Y && (Z || T))) || (W && (Z || T)) = ((X && Y) || W) && (Z || T)",
    ),
    (
        "seqs6",
        "(X || ((Y || T) && (Z && F))) && ((W || T) && (Z && F)) \
         = ((X && (W || T)) || (Y || T)) && (Z && F)",
    ),
    (
        "seqs7",
        "(X || ((Y || T) && (Z && F))) && (W && F) \
         = ((!X && (Y || T)) || (W && F)) && (Z && F)",
    ),
];

/// `(name, equation)` pairs of one catalog.
type Entries = &'static [(&'static str, &'static str)];

const CATALOGS: &[(&str, SchemaLogic, Entries)] = &[
    ("EqFFEL", SchemaLogic::Ffel, EQ_FFEL),
    ("EqFSCL", SchemaLogic::Fscl, EQ_FSCL),
    ("CP", SchemaLogic::Conditional, CP),
    ("CP_s", SchemaLogic::Mixed, CP_S),
    ("CP_f", SchemaLogic::Mixed, CP_F),
    ("GeneralExt", SchemaLogic::Mixed, GENERAL_EXT),
    ("DerivedLemmas-FEL", SchemaLogic::Ffel, DERIVED_FEL),
    ("DerivedLemmas-SCL", SchemaLogic::Fscl, DERIVED_SCL),
];

fn build(name: &'static str, logic: SchemaLogic, eqs: &[(&'static str, &str)]) -> Catalog {
    let schemas = eqs
        .iter()
        .map(|&(n, src)| {
            let (l, r) = src.split_once('=').expect("catalog entry without '='");
            EquationSchema {
                name: n,
                lhs: parse_term(l).expect("catalog lhs parses"),
                rhs: parse_term(r).expect("catalog rhs parses"),
                logic,
            }
        })
        .collect();
    Catalog {
        name,
        logic,
        schemas,
    }
}

/// Every catalog, in a fixed order.
pub fn catalogs() -> Vec<Catalog> {
    CATALOGS
        .iter()
        .map(|&(n, l, eqs)| build(n, l, eqs))
        .collect()
}

/// Looks a catalog up by name, ignoring case and `-`/`_`.
pub fn catalog(name: &str) -> Result<Catalog> {
    let key = |s: &str| {
        s.chars()
            .filter(|c| *c != '-' && *c != '_')
            .collect::<String>()
            .to_ascii_lowercase()
    };
    catalogs()
        .into_iter()
        .find(|c| key(c.name) == key(name))
        .ok_or_else(|| Error::UnknownCatalog(name.to_string()))
}

/// Text table of every catalog: one `catalog  name  lhs = rhs` row per equation.
pub fn export_table() -> String {
    let mut out = String::new();
    for c in catalogs() {
        for s in &c.schemas {
            out.push_str(&format!("{}\t{}\t{} = {}\n", c.name, s.name, s.lhs, s.rhs));
        }
    }
    out
}
