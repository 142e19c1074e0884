//! Spec files in, reports out.

mod parser;
mod report;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use parser::{
    parse_spec, print_spec, render_relation, AlgebraSpec, ParseError, ParseErrorKind, SpecOptions,
};
pub use report::{
    emit_report, parse_report, run_analysis, AnalysisError, AnalysisOptions, AnalysisReport,
    CurvedSection, DeltaEntry, DimsSection, Format, GorensteinSection, LComplexSection, LieSection,
    Outcome, PbwSection, SpecEcho, Truncation,
};

/// One requested analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Dims,
    Koszul,
    Gorenstein,
    Potential,
    Pbw,
    Curved,
    Lie,
    Ce,
    LComplex,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Dims,
        Check::Koszul,
        Check::Gorenstein,
        Check::Potential,
        Check::Pbw,
        Check::Curved,
        Check::Lie,
        Check::Ce,
        Check::LComplex,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Dims => "dims",
            Check::Koszul => "koszul",
            Check::Gorenstein => "gorenstein",
            Check::Potential => "potential",
            Check::Pbw => "pbw",
            Check::Curved => "curved",
            Check::Lie => "lie",
            Check::Ce => "ce",
            Check::LComplex => "l-complex",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Check::ALL.iter().map(|c| c.as_str()).collect();
                format!("unknown check `{s}` (known: {})", known.join(", "))
            })
    }
}
