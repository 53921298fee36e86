use std::fmt;
use std::str::FromStr;

/// How much runtime self-checking the pipeline performs.
///
/// * `Off`: none beyond the checks needed to report a result.
/// * `Cheap`: parity, iteration budget, progress measure, biset bounds.
/// * `Full`: additionally re-verifies `(2,k)`-connectivity after every
///   step, and for `|V| <= 6` cross-checks against exhaustive biset
///   enumeration and the obstacle detector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AssertLevel {
    #[default]
    Off,
    Cheap,
    Full,
}

/// Largest ground set for which `Full` runs the exhaustive oracles.
pub const FULL_ORACLE_LIMIT: usize = 6;

impl AssertLevel {
    pub fn cheap(self) -> bool {
        self >= AssertLevel::Cheap
    }

    pub fn full(self) -> bool {
        self == AssertLevel::Full
    }
}

impl FromStr for AssertLevel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "off" => Ok(AssertLevel::Off),
            "cheap" => Ok(AssertLevel::Cheap),
            "full" => Ok(AssertLevel::Full),
            other => Err(format!("unknown assertion level `{other}` (expected off, cheap or full)")),
        }
    }
}

impl fmt::Display for AssertLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AssertLevel::Off => "off",
            AssertLevel::Cheap => "cheap",
            AssertLevel::Full => "full",
        })
    }
}
