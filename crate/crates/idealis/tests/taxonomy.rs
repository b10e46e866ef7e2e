use std::collections::BTreeSet;

use idealis::CliError;
use idealis_core::{Error, Natural};

/// One value of every core error; the match below fails to compile when a
/// variant is added without being listed here.
fn every_core_error() -> Vec<Error> {
    let all = vec![
        Error::InsufficientPrefix {
            required: Natural::from(3u32),
        },
        Error::MeasureTooLarge { bound_exp: 2 },
        Error::NotDense { index: 5 },
        Error::InsufficientResolution { m: 4 },
        Error::InvariantViolated("x".into()),
        Error::IndexOutOfRange,
        Error::LengthMismatch { left: 1, right: 2 },
        Error::LevelTooLarge { level: 30, cap: 12 },
        Error::PartitionTooShort { block: 7 },
    ];
    for e in &all {
        match e {
            Error::InsufficientPrefix { .. }
            | Error::MeasureTooLarge { .. }
            | Error::NotDense { .. }
            | Error::InsufficientResolution { .. }
            | Error::InvariantViolated(_)
            | Error::IndexOutOfRange
            | Error::LengthMismatch { .. }
            | Error::LevelTooLarge { .. }
            | Error::PartitionTooShort { .. } => {}
        }
    }
    all
}

#[test]
fn every_error_has_one_distinct_name() {
    let mut names = BTreeSet::new();
    for e in every_core_error() {
        let cli = CliError::from(e.clone());
        assert_eq!(cli.name(), e.name());
        assert_eq!(cli.exit_code(), 2, "{e}");
        let j = cli.to_json();
        assert_eq!(j["error"], e.name());
        assert!(j["detail"].as_str().is_some_and(|d| !d.is_empty()));
        assert!(names.insert(e.name()), "duplicate name {}", e.name());
    }
    let tool = [
        CliError::CodingMismatch { found: "x".into() },
        CliError::UnknownSuite("x".into()),
        CliError::malformed("x"),
    ];
    for e in tool {
        assert!(names.insert(e.name()), "duplicate name {}", e.name());
    }
    assert_eq!(names.len(), 12);
}

#[test]
fn only_malformed_input_exits_one() {
    assert_eq!(CliError::malformed("x").exit_code(), 1);
    assert_eq!(CliError::UnknownSuite("x".into()).exit_code(), 2);
    assert_eq!(
        CliError::CodingMismatch { found: "x".into() }.exit_code(),
        2
    );
}
