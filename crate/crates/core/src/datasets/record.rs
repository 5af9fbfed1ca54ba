//! Tab-separated field records.
//!
//! One record per line, `#` lines and blank lines ignored:
//!
//! ```text
//! family  label  conductor  degree_expr  class_expr  ranks  subfield  notes
//! ```
//!
//! * `degree_expr` and `class_expr` use the factor-expression grammar; the
//!   class column may end in `=INT`, a stated total the factors must multiply to.
//! * `ranks` is a comma-separated list of `p:r`.
//! * `subfield` is a comma-separated list of `label=expr`, each a known divisor
//!   of that subfield's class number (often the class number itself).
//!
//! Every record invariant is checked at load time; a failure is reported with
//! the line and the column where the offending field starts.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::expression::{class_source, class_value, parse_class, FactorExpression};
use crate::arithmetic::{euler_phi, factor, is_prime, odd_part, squarefree_part, Factorization};
use crate::error::{Error, Result};

pub const COLUMNS: [&str; 8] = [
    "family",
    "label",
    "conductor",
    "degree_expr",
    "class_expr",
    "ranks",
    "subfield",
    "notes",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    CyclotomicMinus,
    CyclotomicReal,
    CubicReal,
    RealCyclicSmallConductor,
    Quintic,
    Decimic,
    Custom,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::CyclotomicMinus,
        Family::CyclotomicReal,
        Family::CubicReal,
        Family::RealCyclicSmallConductor,
        Family::Quintic,
        Family::Decimic,
        Family::Custom,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::CyclotomicMinus => "cyclotomic_minus",
            Family::CyclotomicReal => "cyclotomic_real",
            Family::CubicReal => "cubic_real",
            Family::RealCyclicSmallConductor => "real_cyclic_small_conductor",
            Family::Quintic => "quintic",
            Family::Decimic => "decimic",
            Family::Custom => "custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::invalid(format!("unknown family {s:?}")))
    }
}

/// A subfield annotation: `label` and a known divisor of its class number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubfieldAnnotation {
    pub label: String,
    pub class_expr: Vec<FactorExpression>,
}

impl SubfieldAnnotation {
    pub fn class_number(&self) -> BigUint {
        class_value(&self.class_expr)
    }

    /// Field discriminant when the label names a quadratic field `Q(sqrt<d>)`.
    pub fn quadratic_discriminant(&self) -> Option<BigInt> {
        let radicand = self.label.strip_prefix("Q(sqrt")?.strip_suffix(')')?;
        let d: BigInt = radicand.parse().ok()?;
        let kernel = squarefree_part(d.magnitude()).ok()?;
        if kernel.is_one() && d.sign() != num_bigint::Sign::Minus {
            return None;
        }
        let signed = if d.sign() == num_bigint::Sign::Minus {
            -BigInt::from(kernel)
        } else {
            BigInt::from(kernel)
        };
        if signed.mod_floor(&BigInt::from(4)) == BigInt::one() {
            Some(signed)
        } else {
            Some(signed * 4)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldRecord {
    family: Family,
    label: String,
    conductor: Option<BigUint>,
    degree_expr: Vec<FactorExpression>,
    degree_n: BigUint,
    odd_part_n1: BigUint,
    class_expr: Vec<FactorExpression>,
    stated_total: Option<BigUint>,
    rank_annotations: BTreeMap<BigUint, u32>,
    subfields: Vec<SubfieldAnnotation>,
    notes: String,
}

impl FieldRecord {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn conductor(&self) -> Option<&BigUint> {
        self.conductor.as_ref()
    }

    pub fn degree_n(&self) -> &BigUint {
        &self.degree_n
    }

    pub fn odd_part_n1(&self) -> &BigUint {
        &self.odd_part_n1
    }

    pub fn class_expr(&self) -> &[FactorExpression] {
        &self.class_expr
    }

    pub fn stated_total(&self) -> Option<&BigUint> {
        self.stated_total.as_ref()
    }

    pub fn rank_annotations(&self) -> &BTreeMap<BigUint, u32> {
        &self.rank_annotations
    }

    pub fn subfields(&self) -> &[SubfieldAnnotation] {
        &self.subfields
    }

    pub fn notes(&self) -> &str {
        &self.notes
    }

    /// Product of the class-expression factors.
    pub fn class_number(&self) -> BigUint {
        class_value(&self.class_expr)
    }

    /// Prime factorization of the class number, assembled factor by factor.
    pub fn class_factorization(&self) -> Result<Factorization> {
        let mut total = Factorization::default();
        for item in &self.class_expr {
            if !item.value().is_one() {
                total = total.multiply(&factor(item.value())?);
            }
        }
        Ok(total)
    }

    /// The record as one TSV line, without a trailing newline.
    pub fn to_tsv_line(&self) -> String {
        let mut class = class_source(&self.class_expr);
        if let Some(total) = &self.stated_total {
            class = format!("{class}={total}");
        }
        let ranks = self
            .rank_annotations
            .iter()
            .map(|(p, r)| format!("{p}:{r}"))
            .collect::<Vec<_>>()
            .join(",");
        let subfields = self
            .subfields
            .iter()
            .map(|s| format!("{}={}", s.label, class_source(&s.class_expr)))
            .collect::<Vec<_>>()
            .join(",");
        [
            self.family.as_str().to_string(),
            self.label.clone(),
            self.conductor.as_ref().map(ToString::to_string).unwrap_or_default(),
            class_source(&self.degree_expr),
            class,
            ranks,
            subfields,
            self.notes.clone(),
        ]
        .join("\t")
    }
}

/// Reads every record from a stream.
pub fn parse_dataset<R: BufRead>(reader: R) -> Result<Vec<FieldRecord>> {
    let mut records = Vec::new();
    let mut labels = HashSet::new();
    for (index, line) in reader.lines().enumerate() {
        let line_no = index + 1;
        let line = line.map_err(|e| Error::Dataset {
            line: line_no,
            column: 1,
            message: format!("read failed: {e}"),
        })?;
        let trimmed = line.trim_end_matches(['\r', '\n']);
        if trimmed.trim().is_empty() || trimmed.trim_start().starts_with('#') {
            continue;
        }
        let record = parse_line(trimmed, line_no)?;
        if !labels.insert((record.family, record.label.clone())) {
            return Err(Error::Dataset {
                line: line_no,
                column: 1 + trimmed.find('\t').map_or(0, |i| i + 1),
                message: format!("duplicate label {:?} in family {}", record.label, record.family),
            });
        }
        records.push(record);
    }
    Ok(records)
}

pub fn parse_dataset_str(text: &str) -> Result<Vec<FieldRecord>> {
    parse_dataset(text.as_bytes())
}

struct Field<'a> {
    text: &'a str,
    column: usize,
}

fn parse_line(line: &str, line_no: usize) -> Result<FieldRecord> {
    let mut fields = Vec::with_capacity(COLUMNS.len());
    let mut column = 1;
    for text in line.split('\t') {
        fields.push(Field { text, column });
        column += text.chars().count() + 1;
    }
    if fields.len() == COLUMNS.len() - 1 {
        fields.push(Field { text: "", column });
    }
    if fields.len() != COLUMNS.len() {
        return Err(Error::Dataset {
            line: line_no,
            column: 1,
            message: format!("expected {} tab-separated fields, found {}", COLUMNS.len(), fields.len()),
        });
    }

    let at = |field: &Field, offset: usize, message: String| Error::Dataset {
        line: line_no,
        column: field.column + offset,
        message,
    };
    let lift = |field: &Field, error: Error| match error {
        Error::Expression { column, message } => at(field, column - 1, message),
        other => at(field, 0, other.to_string()),
    };

    let family: Family = fields[0].text.parse().map_err(|e| lift(&fields[0], e))?;

    let label = fields[1].text.trim().to_string();
    if label.is_empty() {
        return Err(at(&fields[1], 0, "label must not be empty".to_string()));
    }

    let conductor = match fields[2].text.trim() {
        "" => None,
        text => {
            let n: BigUint = text
                .parse()
                .map_err(|_| at(&fields[2], 0, format!("conductor {text:?} is not an integer")))?;
            if n.is_zero() {
                return Err(at(&fields[2], 0, "conductor must be positive".to_string()));
            }
            Some(n)
        }
    };

    let degree_expr = parse_class(fields[3].text).map_err(|e| lift(&fields[3], e))?;
    let degree_n = class_value(&degree_expr);
    let odd_part_n1 = odd_part(&degree_n);
    if odd_part_n1.is_one() {
        return Err(at(&fields[3], 0, format!("degree {degree_n} has no odd part above 1")));
    }

    let (class_text, total_text) = match fields[4].text.split_once('=') {
        Some((class, total)) => (class, Some(total)),
        None => (fields[4].text, None),
    };
    let class_expr = parse_class(class_text).map_err(|e| lift(&fields[4], e))?;
    let class_number = class_value(&class_expr);
    let stated_total = match total_text {
        None => None,
        Some(text) => {
            let offset = class_text.chars().count() + 1;
            let total: BigUint = text
                .parse()
                .map_err(|_| at(&fields[4], offset, format!("stated total {text:?} is not an integer")))?;
            if total != class_number {
                return Err(at(
                    &fields[4],
                    offset,
                    format!("class expression evaluates to {class_number}, stated total is {total}"),
                ));
            }
            Some(total)
        }
    };
    if class_number.is_one() {
        return Err(at(&fields[4], 0, "class number must exceed 1".to_string()));
    }

    let mut rank_annotations = BTreeMap::new();
    if !fields[5].text.trim().is_empty() {
        let class_factorization = factor(&class_number).map_err(|e| lift(&fields[5], e))?;
        for pair in fields[5].text.split(',') {
            let bad = || at(&fields[5], 0, format!("rank annotation {pair:?} is not p:r"));
            let (p, r) = pair.trim().split_once(':').ok_or_else(bad)?;
            let p: BigUint = p.parse().map_err(|_| bad())?;
            let r: u32 = r.parse().map_err(|_| bad())?;
            if !is_prime(&p) {
                return Err(at(&fields[5], 0, format!("{p} is not prime")));
            }
            let e_p = class_factorization.exponent_of(&p);
            if e_p == 0 {
                return Err(at(&fields[5], 0, format!("{p} does not divide the class number")));
            }
            if r == 0 || r > e_p {
                return Err(at(&fields[5], 0, format!("rank {r} of {p} outside 1..={e_p}")));
            }
            if rank_annotations.insert(p.clone(), r).is_some() {
                return Err(at(&fields[5], 0, format!("rank of {p} given twice")));
            }
        }
    }

    let mut subfields = Vec::new();
    if !fields[6].text.trim().is_empty() {
        for pair in fields[6].text.split(',') {
            let (sub_label, expr) = pair
                .split_once('=')
                .ok_or_else(|| at(&fields[6], 0, format!("subfield entry {pair:?} is not label=expr")))?;
            if sub_label.trim().is_empty() {
                return Err(at(&fields[6], 0, "subfield label must not be empty".to_string()));
            }
            let class_expr = parse_class(expr.trim()).map_err(|e| lift(&fields[6], e))?;
            subfields.push(SubfieldAnnotation {
                label: sub_label.trim().to_string(),
                class_expr,
            });
        }
    }

    check_family_degree(family, conductor.as_ref(), &degree_n).map_err(|m| at(&fields[3], 0, m))?;

    Ok(FieldRecord {
        family,
        label,
        conductor,
        degree_expr,
        degree_n,
        odd_part_n1,
        class_expr,
        stated_total,
        rank_annotations,
        subfields,
        notes: fields[7].text.to_string(),
    })
}

/// Degree constraints each family imposes, catching transcription slips.
fn check_family_degree(
    family: Family,
    conductor: Option<&BigUint>,
    degree: &BigUint,
) -> std::result::Result<(), String> {
    let fixed = |n: u32| {
        if *degree == BigUint::from(n) {
            Ok(())
        } else {
            Err(format!("{family} fields have degree {n}, found {degree}"))
        }
    };
    let phi = || -> std::result::Result<BigUint, String> {
        let conductor = conductor.ok_or_else(|| format!("{family} records need a conductor"))?;
        euler_phi(conductor).map_err(|e| e.to_string())
    };
    match family {
        Family::CyclotomicMinus => {
            let phi = phi()?;
            if *degree != phi {
                return Err(format!("degree {degree} differs from phi(conductor) = {phi}"));
            }
            Ok(())
        }
        Family::CyclotomicReal => {
            let phi = phi()?;
            if degree * 2u8 != phi {
                return Err(format!("degree {degree} differs from phi(conductor)/2 = {}", phi / 2u8));
            }
            Ok(())
        }
        Family::RealCyclicSmallConductor => {
            let phi = phi()?;
            if !(&phi % degree).is_zero() {
                return Err(format!("degree {degree} does not divide phi(conductor) = {phi}"));
            }
            Ok(())
        }
        Family::CubicReal => fixed(3),
        Family::Quintic => fixed(5),
        Family::Decimic => fixed(10),
        Family::Custom => Ok(()),
    }
}
