//! Factor-expression notation, bundled table transcriptions, and the
//! verification harness that runs every congruence check over them.

mod expression;
mod record;
mod verify;

pub use expression::{
    class_source, class_value, evaluate_class_value, evaluate_expression, parse_class,
    FactorExpression,
};
pub use record::{parse_dataset, parse_dataset_str, Family, FieldRecord, SubfieldAnnotation, COLUMNS};
pub use verify::{
    geometric_subfields, natural_cmp, verify_record, verify_records, CheckOutcome,
    GeometricSubfield, ReportRow, Summary, VerificationReport, LOG_BASE_NOTE, REPORT_COLUMNS,
};

use crate::error::Result;

/// Bundled table files as `(file name, contents)`.
pub const BUNDLED: [(&str, &str); 6] = [
    ("cyclotomic_minus.tsv", include_str!("../../data/cyclotomic_minus.tsv")),
    ("cyclotomic_real.tsv", include_str!("../../data/cyclotomic_real.tsv")),
    ("cubic_real.tsv", include_str!("../../data/cubic_real.tsv")),
    (
        "real_cyclic_small_conductor.tsv",
        include_str!("../../data/real_cyclic_small_conductor.tsv"),
    ),
    ("quintic.tsv", include_str!("../../data/quintic.tsv")),
    ("decimic.tsv", include_str!("../../data/decimic.tsv")),
];

pub fn bundled_records() -> Result<Vec<FieldRecord>> {
    let mut records = Vec::new();
    for (_, contents) in BUNDLED {
        records.extend(parse_dataset_str(contents)?);
    }
    Ok(records)
}

pub fn bundled_family(family: Family) -> Result<Vec<FieldRecord>> {
    Ok(bundled_records()?
        .into_iter()
        .filter(|r| r.family() == family)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_counts() {
        let counts: Vec<usize> = Family::ALL[..6]
            .iter()
            .map(|f| bundled_family(*f).unwrap().len())
            .collect();
        assert_eq!(counts, [9, 10, 3, 5, 0, 6]);
    }

    #[test]
    fn bundled_records_round_trip() {
        for record in bundled_records().unwrap() {
            let reparsed = parse_dataset_str(&record.to_tsv_line()).unwrap();
            assert_eq!(reparsed, vec![record]);
        }
    }

    #[test]
    fn bundled_report_has_no_violation() {
        let report = verify_records(&bundled_records().unwrap());
        assert!(!report.has_violation(), "{}", report.to_text());
    }
}
