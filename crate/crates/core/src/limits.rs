use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size caps for the exponential-time kernels. Exceeding a cap is an
/// error, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Permutation streams and the direct n!-term permanent.
    pub stream_n: usize,
    /// Full character tables.
    pub table_n: usize,
    /// Direct immanant evaluation.
    pub immanant_n: usize,
    /// Gray-code Ryser permanent.
    pub ryser_n: usize,
}

/// Hard ceiling for the immanant cap; 11 and 12 need an explicit override.
pub const IMMANANT_CEILING: usize = 12;

impl Limits {
    pub const DEFAULT: Limits = Limits {
        stream_n: 10,
        table_n: 8,
        immanant_n: 10,
        ryser_n: 24,
    };

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("stream_n", self.stream_n),
            ("table_n", self.table_n),
            ("immanant_n", self.immanant_n),
            ("ryser_n", self.ryser_n),
        ] {
            if value == 0 {
                return Err(Error::InvalidArgument(format!("cap {name} must be positive")));
            }
        }
        if self.immanant_n > IMMANANT_CEILING {
            return Err(Error::InvalidArgument(format!(
                "immanant cap {} exceeds the hard ceiling {IMMANANT_CEILING}",
                self.immanant_n
            )));
        }
        Ok(())
    }

    pub(crate) fn check(what: &'static str, n: usize, cap: usize) -> Result<()> {
        if n > cap {
            Err(Error::CapExceeded { what, n, cap })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
