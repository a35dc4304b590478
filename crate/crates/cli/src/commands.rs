//! Command implementations, independent of argument parsing.

use torfix_core::abelian::mcmullen_poly;
use torfix_core::arith::root_of_unity_order;
use torfix_core::{
    builtin_examples, find_small_eigenvalue_parameter, periodic_eigenvalue_table, AlgebraElement,
    Endomorphism, EndomorphismInput, PeriodicTableKind,
};

use crate::input::{parse_rational, InputDoc};
use crate::report::{
    number, ClassifyReport, ExampleReport, ExampleSummary, Report, SearchReport, SequenceReport,
    TableEntry, TableReport,
};
use crate::CliError;

/// Largest `n_max` accepted by `sequence` without `--force`.
pub const N_MAX_GUARD: u64 = 1_000_000;

pub fn classify(input: &EndomorphismInput) -> Result<ClassifyReport, CliError> {
    if let EndomorphismInput::Algebra(x) = input {
        return classify_algebra(x);
    }
    let e = Endomorphism::new(input.clone())?;
    let r = torfix_core::behavior::classify_endomorphism(&e)?;
    Ok(ClassifyReport::new(e.char_poly().to_string(), &r))
}

/// Type-specific classification of an algebra element.
pub fn classify_algebra(x: &AlgebraElement) -> Result<ClassifyReport, CliError> {
    let r = x.classify()?;
    let mut report = ClassifyReport::new(x.char_poly()?.to_string(), &r);
    if let AlgebraElement::Quaternion(q) = x {
        report.one_root_criterion = Some(q.one_root_criterion());
    }
    Ok(report)
}

pub fn sequence(
    input: &EndomorphismInput,
    n_max: u64,
    force: bool,
) -> Result<SequenceReport, CliError> {
    if n_max == 0 {
        return Err(CliError::Malformed("n_max must be at least 1".into()));
    }
    if n_max > N_MAX_GUARD && !force {
        return Err(CliError::Malformed(format!(
            "n_max {n_max} exceeds {N_MAX_GUARD}; pass --force to run it"
        )));
    }
    let e = Endomorphism::new(input.clone())?;
    let values = e.fix_sequence(n_max)?;
    Ok(SequenceReport {
        char_poly: e.char_poly().to_string(),
        values: values.iter().map(number).collect(),
    })
}

/// Fixed-point counts of an algebra element through its norm formula.
pub fn algebra_fix(x: &AlgebraElement, n_max: u64) -> Result<SequenceReport, CliError> {
    if n_max == 0 {
        return Err(CliError::Malformed("n_max must be at least 1".into()));
    }
    let values = (1..=n_max)
        .map(|n| x.fix(n).map(|v| number(&v)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SequenceReport {
        char_poly: x.char_poly()?.to_string(),
        values,
    })
}

pub fn table(kind: PeriodicTableKind) -> TableReport {
    let entries = periodic_eigenvalue_table(kind)
        .into_iter()
        .map(|p| TableEntry {
            order: root_of_unity_order(&p).expect("cyclotomic entry"),
            degree: p.degree().unwrap_or(0),
            poly: p.to_string(),
        })
        .collect();
    let kind = match kind {
        PeriodicTableKind::Quaternion => "quaternion",
        PeriodicTableKind::Cm => "cm",
    };
    TableReport {
        kind: kind.into(),
        entries,
    }
}

pub fn search_small(eps: &str) -> Result<SearchReport, CliError> {
    let eps = parse_rational(eps)?;
    let a = find_small_eigenvalue_parameter(&eps)?;
    Ok(SearchReport {
        eps: eps.to_string(),
        a,
        char_poly: mcmullen_poly(a).to_string(),
    })
}

pub fn examples(name: Option<&str>) -> Result<Report, CliError> {
    let all = builtin_examples();
    match name {
        None => all
            .iter()
            .map(|(name, e)| {
                let r = classify(e)?;
                Ok(ExampleSummary {
                    name: (*name).into(),
                    char_poly: r.char_poly,
                    verdict: r.verdict,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()
            .map(Report::Examples),
        Some(name) => {
            let (name, e) = all.iter().find(|(n, _)| *n == name).ok_or_else(|| {
                let names: Vec<_> = all.iter().map(|(n, _)| *n).collect();
                CliError::Malformed(format!(
                    "unknown example {name:?}; known: {}",
                    names.join(", ")
                ))
            })?;
            Ok(Report::Example(Box::new(ExampleReport {
                name: (*name).into(),
                input: InputDoc::from_input(e),
                report: classify(e)?,
            })))
        }
    }
}
