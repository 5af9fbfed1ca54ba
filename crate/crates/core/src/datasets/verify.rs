//! Runs the congruence checks over field records and assembles a report.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::expression::class_source;
use super::record::{Family, FieldRecord};
use crate::arithmetic::is_prime;
use crate::bound::{class_number_bound, BoundInput, BoundValue};
use crate::congruence::{
    check_corollary_odd_degree, check_geometric, check_theorem1, coprimality_witness, RankData,
    Verdict, VerdictKind,
};
use crate::error::Result;

pub const LOG_BASE_NOTE: &str =
    "H_F = 2^(m-1)/(m-1)! * sqrt|D| * log(|D|)^(m-1) with the natural logarithm";

/// TSV report header.
pub const REPORT_COLUMNS: [&str; 9] = [
    "family",
    "label",
    "p",
    "e_p",
    "r_used",
    "rank_uncertain",
    "verdict",
    "witness",
    "subfield_confirmed",
];

/// A subfield `F` with `L/F` cyclic of odd prime degree `q`, with known discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricSubfield {
    pub label: String,
    pub degree: u32,
    pub discriminant: BigInt,
    pub q: BigUint,
    pub bound: BoundValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub family: Family,
    pub label: String,
    pub p: BigUint,
    pub e_p: u32,
    pub r_used: u32,
    pub rank_known: bool,
    /// The witness exists at `r = e_p` but not at `r = 1`, and `r_p` is unknown.
    pub rank_uncertain: bool,
    pub verdict: Verdict,
    /// Present for subfield-divisibility verdicts.
    pub subfield_confirmed: Option<bool>,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct RecordHeader {
    family: Family,
    label: String,
    degree_n: BigUint,
    odd_part_n1: BigUint,
    class_text: String,
    notes: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub witness: usize,
    pub subfield: usize,
    pub inconclusive: usize,
    pub violation: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.witness + self.subfield + self.inconclusive + self.violation
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    rows: Vec<ReportRow>,
    records: Vec<RecordHeader>,
    warnings: Vec<String>,
}

/// Subfields usable for the geometric check: the rationals when `N` is an odd
/// prime, and annotated quadratic subfields `Q(sqrt d)` when `N = 2q`.
pub fn geometric_subfields(record: &FieldRecord) -> Vec<GeometricSubfield> {
    let n = record.degree_n();
    let mut out = Vec::new();
    let mut push = |label: &str, degree: u32, discriminant: BigInt, q: BigUint| {
        let input = BoundInput::new(degree, discriminant.clone()).expect("degree and discriminant nonzero");
        out.push(GeometricSubfield {
            label: label.to_string(),
            degree,
            discriminant,
            q,
            bound: class_number_bound(&input),
        });
    };
    if n.is_odd() && is_prime(n) {
        push("Q", 1, BigInt::one(), n.clone());
    }
    for sub in record.subfields() {
        let Some(discriminant) = sub.quadratic_discriminant() else {
            continue;
        };
        let (q, rem) = n.div_rem(&BigUint::from(2u8));
        if rem.is_zero() && q.is_odd() && is_prime(&q) {
            push(&sub.label, 2, discriminant, q);
        }
    }
    out
}

/// Geometric check at the annotated rank, or at every `r <= e_p` when the
/// rank is unknown, since the true rank is some value in `1..=e_p`.
fn geometric_verdict(rank: &RankData, sub: &GeometricSubfield) -> Result<Verdict> {
    let ranks: Vec<u32> = match rank.r_p() {
        Some(r) => vec![r],
        None => (1..=rank.e_p()).collect(),
    };
    let mut last = None;
    for r in ranks {
        let verdict = check_geometric(rank.p(), r, &sub.q, &sub.bound)?;
        if !verdict.is_violation() {
            return Ok(verdict);
        }
        last = Some(verdict);
    }
    Ok(last.expect("at least one rank checked"))
}

fn internal(error: crate::Error) -> Verdict {
    Verdict::Violation(format!("check failed: {error}"))
}

/// Verifies every prime factor of the record's class number.
pub fn verify_record(record: &FieldRecord) -> Vec<ReportRow> {
    let factorization = match record.class_factorization() {
        Ok(f) => f,
        Err(e) => {
            return vec![ReportRow {
                family: record.family(),
                label: record.label().to_string(),
                p: BigUint::one(),
                e_p: 0,
                r_used: 0,
                rank_known: false,
                rank_uncertain: false,
                verdict: internal(e),
                subfield_confirmed: None,
                checks: Vec::new(),
            }]
        }
    };
    let n = record.degree_n();
    let n1 = record.odd_part_n1();
    let odd_degree = n.is_odd();
    // the first annotation is K; for odd N, K is the rationals
    let subfield_h = record
        .subfields()
        .first()
        .map(|s| s.class_number())
        .or_else(|| odd_degree.then(BigUint::one));
    let geometric = geometric_subfields(record);

    factorization
        .entries()
        .iter()
        .map(|(p, e_p)| {
            let r_p = record.rank_annotations().get(p).copied();
            let rank = RankData::new(p.clone(), *e_p, r_p).expect("factorization yields primes and ranks are validated");
            let mut checks = Vec::new();

            let theorem1 = check_theorem1(&rank, n1, subfield_h.as_ref()).unwrap_or_else(internal);
            checks.push(CheckOutcome {
                name: format!("theorem1 N1={n1}"),
                verdict: theorem1.clone(),
            });
            if odd_degree {
                checks.push(CheckOutcome {
                    name: format!("odd-degree N={n}"),
                    verdict: check_corollary_odd_degree(&rank, n).unwrap_or_else(internal),
                });
            }
            for sub in &geometric {
                checks.push(CheckOutcome {
                    name: format!(
                        "geometric F={} m={} D={} q={} H_F={}",
                        sub.label,
                        sub.degree,
                        sub.discriminant,
                        sub.q,
                        sub.bound.real_value()
                    ),
                    verdict: geometric_verdict(&rank, sub).unwrap_or_else(internal),
                });
            }

            let verdict = checks
                .iter()
                .map(|c| &c.verdict)
                .find(|v| v.is_violation())
                .cloned()
                .unwrap_or(theorem1);
            let rank_uncertain = r_p.is_none()
                && verdict.kind() == VerdictKind::Witness
                && matches!(coprimality_witness(p, 1, n1), Ok(None));
            let subfield_confirmed = match verdict {
                Verdict::SubfieldDivisibility { confirmed } => Some(confirmed),
                _ => None,
            };
            ReportRow {
                family: record.family(),
                label: record.label().to_string(),
                p: p.clone(),
                e_p: *e_p,
                r_used: rank.rank_used(),
                rank_known: r_p.is_some(),
                rank_uncertain,
                verdict,
                subfield_confirmed,
                checks,
            }
        })
        .collect()
}

/// Compares labels treating digit runs as numbers, so `u=59` sorts before `u=103`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for ((da, sa), (db, sb)) in ca.iter().zip(cb.iter()) {
        let ord = if *da && *db {
            let ta = sa.trim_start_matches('0');
            let tb = sb.trim_start_matches('0');
            ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb)).then_with(|| sa.len().cmp(&sb.len()))
        } else {
            sa.cmp(sb)
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len())
}

/// Verifies records concurrently; the report is sorted by (family, label, p).
pub fn verify_records(records: &[FieldRecord]) -> VerificationReport {
    let mut rows: Vec<ReportRow> = records.par_iter().flat_map_iter(verify_record).collect();
    rows.sort_by(|a, b| {
        a.family
            .cmp(&b.family)
            .then_with(|| natural_cmp(&a.label, &b.label))
            .then_with(|| a.p.cmp(&b.p))
    });

    let mut headers: Vec<RecordHeader> = records
        .iter()
        .map(|r| RecordHeader {
            family: r.family(),
            label: r.label().to_string(),
            degree_n: r.degree_n().clone(),
            odd_part_n1: r.odd_part_n1().clone(),
            class_text: class_source(r.class_expr()),
            notes: r.notes().to_string(),
        })
        .collect();
    headers.sort_by(|a, b| a.family.cmp(&b.family).then_with(|| natural_cmp(&a.label, &b.label)));

    let mut warnings = Vec::new();
    for record in records {
        for sub in geometric_subfields(record) {
            if sub.bound.is_degenerate() {
                warnings.push(format!(
                    "{} {}: H_F of {} is 0 (|D| = 1 with m = {})",
                    record.family(),
                    record.label(),
                    sub.label,
                    sub.degree
                ));
            }
        }
    }
    warnings.sort();

    VerificationReport {
        rows,
        records: headers,
        warnings,
    }
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

impl VerificationReport {
    pub fn rows(&self) -> &[ReportRow] {
        &self.rows
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn row(&self, label: &str, p: u64) -> Option<&ReportRow> {
        let p = BigUint::from(p);
        self.rows.iter().find(|r| r.label == label && r.p == p)
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for row in &self.rows {
            match row.verdict.kind() {
                VerdictKind::Witness => s.witness += 1,
                VerdictKind::SubfieldDivisibility => s.subfield += 1,
                VerdictKind::Inconclusive => s.inconclusive += 1,
                VerdictKind::Violation => s.violation += 1,
            }
        }
        s
    }

    pub fn has_violation(&self) -> bool {
        self.rows.iter().any(|r| r.verdict.is_violation())
    }

    fn summary_line(&self) -> String {
        let s = self.summary();
        format!(
            "rows={} witness={} subfield={} inconclusive={} violation={}",
            s.total(),
            s.witness,
            s.subfield,
            s.inconclusive,
            s.violation
        )
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {LOG_BASE_NOTE}");
        for w in &self.warnings {
            let _ = writeln!(out, "# warning: {w}");
        }
        let _ = writeln!(out, "{}", REPORT_COLUMNS.join("\t"));
        for row in &self.rows {
            let witness = row.verdict.witness().map_or_else(|| "-".to_string(), ToString::to_string);
            let confirmed = row.subfield_confirmed.map_or("-", yes_no);
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                row.family,
                row.label,
                row.p,
                row.e_p,
                row.r_used,
                yes_no(row.rank_uncertain),
                row.verdict.kind(),
                witness,
                confirmed
            );
        }
        let _ = writeln!(out, "# {}", self.summary_line());
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{LOG_BASE_NOTE}");
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        for header in &self.records {
            let _ = writeln!(
                out,
                "\n{} {}: N={} N1={} h={}",
                header.family, header.label, header.degree_n, header.odd_part_n1, header.class_text
            );
            if !header.notes.is_empty() {
                let _ = writeln!(out, "  note: {}", header.notes);
            }
            for row in self
                .rows
                .iter()
                .filter(|r| r.family == header.family && r.label == header.label)
            {
                let rank = if row.rank_known {
                    format!("r_p={}", row.r_used)
                } else {
                    format!("r_p unknown, using {}", row.r_used)
                };
                let uncertain = if row.rank_uncertain { " [rank-uncertain]" } else { "" };
                let _ = writeln!(out, "  p={} e_p={} {rank}: {}{uncertain}", row.p, row.e_p, row.verdict);
                for check in &row.checks {
                    let _ = writeln!(out, "    {}: {}", check.name, check.verdict);
                }
            }
        }
        let _ = writeln!(out, "\n{}", self.summary_line());
        out
    }
}
