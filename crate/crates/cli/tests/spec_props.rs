use proptest::prelude::*;
use reclift_cli::spec::{parse_combination, parse_matrix};
use reclift_cli::{parse_spec, CliError};

proptest! {
    #[test]
    fn combinations_round_trip(terms in prop::collection::vec((1i64..50, "[a-d](\\*[a-d]){0,2}"), 1..5)) {
        let text = terms.iter().map(|(k, t)| format!("+ {k} {t}")).collect::<Vec<_>>().join(" ");
        prop_assert_eq!(parse_combination(&text).unwrap(), terms.clone());
    }

    #[test]
    fn matrices_round_trip(rows in prop::collection::vec(prop::collection::vec(-9i64..9, 3), 1..4)) {
        let text = rows
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("; ");
        prop_assert_eq!(parse_matrix(&text).unwrap(), rows);
    }

    /// Arbitrary line soup never panics, and errors always carry a line
    /// number inside the input.
    #[test]
    fn parser_is_total(lines in prop::collection::vec(
        prop_oneof![
            Just("[field]".to_string()),
            Just("[algebra]".to_string()),
            Just("[instance]".to_string()),
            Just("[module m]".to_string()),
            Just("[run]".to_string()),
            "[a-z_ ]{0,8}= ?[0-9a-z*:>, -]{0,10}",
            "\\[[a-z ]{0,8}\\]",
        ],
        0..14,
    )) {
        let text = lines.join("\n");
        if let Err(CliError::Parse(errs)) = parse_spec(&text) {
            prop_assert!(!errs.is_empty());
            for e in errs {
                prop_assert!(e.line >= 1 && e.line <= lines.len().max(1));
            }
        }
    }

    #[test]
    fn composite_characteristics_are_rejected(a in 2u32..60, b in 2u32..60) {
        let text = format!("[field]\np = {}\n[algebra]\nvertices = 1\n", a * b);
        let err = parse_spec(&text).unwrap_err().to_string();
        prop_assert!(err.contains("non-prime"), "{}", err);
    }
}
